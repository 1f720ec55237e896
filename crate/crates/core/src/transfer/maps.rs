use num_complex::Complex64;

use super::TransferError;
use crate::algebra::{Form, GaussianRational, PointC2, Polynomial, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapDirection {
    /// ℍ → S³∖{(0,1)}
    Phi,
    /// S³∖{(0,1)} → ℍ
    Psi,
}

const POLE_TOL: f64 = 1e-12;

pub fn phi(x: &PointC2) -> Result<PointC2, TransferError> {
    let i = Complex64::i();
    let d = x.w + i;
    if d.norm() < POLE_TOL {
        return Err(TransferError::PoleHit(MapDirection::Phi));
    }
    Ok(PointC2::new(2.0 * x.z / d, (x.w - i) / d))
}

pub fn psi(x: &PointC2) -> Result<PointC2, TransferError> {
    let i = Complex64::i();
    let d = 1.0 - x.w;
    if d.norm() < POLE_TOL {
        return Err(TransferError::PoleHit(MapDirection::Psi));
    }
    Ok(PointC2::new(i * x.z / d, i * (1.0 + x.w) / d))
}

pub fn eval_map(direction: MapDirection, x: &PointC2) -> Result<PointC2, TransferError> {
    match direction {
        MapDirection::Phi => phi(x),
        MapDirection::Psi => psi(x),
    }
}

/// Cleared pullback `p∘φ = q / ((i+w)^M (w̄−i)^N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub numerator: Polynomial,
    pub m: u32,
    pub n: u32,
}

/// Substitutes φ into `p` and clears denominators.
///
/// `M` and `N` start as the largest per-monomial denominator powers; common
/// factors of `(w+i)` and `(w̄−i)` are then divided out of the numerator.
pub fn pullback_numerator(p: &Polynomial) -> Result<Pullback, TransferError> {
    if p.form() != Form::Ambient {
        return Err(crate::algebra::AlgebraError::WrongForm { expected: Form::Ambient, found: p.form() }.into());
    }
    let i = GaussianRational::i();
    let cst = |c: GaussianRational| Polynomial::constant(Form::Ambient, c);
    let w_plus_i = &Polynomial::w() + &cst(i.clone());
    let w_minus_i = &Polynomial::w() - &cst(i.clone());
    let wb_minus_i = &Polynomial::wb() - &cst(i.clone());
    let wb_plus_i = &Polynomial::wb() + &cst(i.clone());

    let big_m = p.terms().map(|(m, _)| m.j + m.m).max().unwrap_or(0);
    let big_n = p.terms().map(|(m, _)| m.k + m.l).max().unwrap_or(0);
    let mut q = Polynomial::zero(Form::Ambient);
    for (mono, c) in p.terms() {
        let two = GaussianRational::from(2).pow(mono.j + mono.k);
        let t = Polynomial::monomial(Form::Ambient, crate::algebra::Monomial::new(mono.j, mono.k, 0, 0), c * &two);
        let t = &t * &w_minus_i.pow(mono.m);
        let t = &t * &w_plus_i.pow(big_m - mono.j - mono.m);
        let t = &t * &wb_plus_i.pow(mono.l);
        let t = &t * &wb_minus_i.pow(big_n - mono.k - mono.l);
        q = &q + &t;
    }
    let (mut m, mut n) = (big_m, big_n);
    let neg_i = -&i;
    while m > 0 && !q.is_zero() {
        match q.divide_linear(Var::W, &neg_i) {
            Some(d) => {
                q = d;
                m -= 1;
            }
            None => break,
        }
    }
    while n > 0 && !q.is_zero() {
        match q.divide_linear(Var::Wb, &i) {
            Some(d) => {
                q = d;
                n -= 1;
            }
            None => break,
        }
    }
    debug_assert!(!q.is_zero() || p.is_zero());
    Ok(Pullback { numerator: q, m, n })
}
