use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::gaussian::GaussianRational;
use super::polynomial::{Form, Polynomial};

/// Polynomial in the real coordinates `x1..x4` of ℂ² = ℝ⁴, where
/// `z = x1 + i x2` and `w = x3 + i x4`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RealPolynomial {
    terms: BTreeMap<[u32; 4], BigRational>,
}

impl RealPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exps: [u32; 4], c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &BigRational)> {
        self.terms.iter()
    }

    pub fn evaluate(&self, x: [f64; 4]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let c = super::gaussian::ratio_to_f64(c);
                c * (0..4).map(|i| x[i].powi(e[i] as i32)).product::<f64>()
            })
            .sum()
    }
}

/// Rewrites a real polynomial in `z, z̄, w, w̄` using
/// `x1 = (z+z̄)/2`, `x2 = (z−z̄)/2i`, `x3 = (w+w̄)/2`, `x4 = (w−w̄)/2i`.
pub fn from_real(p: &RealPolynomial) -> Polynomial {
    let half = GaussianRational::real_frac(1, 2);
    let neg_half_i = GaussianRational::new(BigRational::zero(), BigRational::new((-1).into(), 2.into()));
    let coords = [
        (&Polynomial::z() + &Polynomial::zb()).scale(&half),
        (&Polynomial::z() - &Polynomial::zb()).scale(&neg_half_i),
        (&Polynomial::w() + &Polynomial::wb()).scale(&half),
        (&Polynomial::w() - &Polynomial::wb()).scale(&neg_half_i),
    ];
    let mut out = Polynomial::zero(Form::Ambient);
    for (e, c) in p.terms() {
        let mut t = Polynomial::constant(Form::Ambient, GaussianRational::real(c.clone()));
        for i in 0..4 {
            if e[i] > 0 {
                t = &t * &coords[i].pow(e[i]);
            }
        }
        out = &out + &t;
    }
    out
}
