use num_complex::Complex64;
use num_traits::One;

use super::TransferError;
use crate::algebra::{Form, GaussianRational, Jet, Monomial, NumericPoly, PointC2, Polynomial, Var};
use crate::cr::CrOperator;

/// `num · (1−w)^alpha · (1−w̄)^beta`, smooth on ℂ² away from `w = 1`.
///
/// After [`PuncturedRational::new`] the numerator carries no factor of
/// `(1−w)` or `(1−w̄)`; those live in the exponents. A zero numerator is
/// kept as-is with whatever exponents it was built with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuncturedRational {
    num: Polynomial,
    alpha: i64,
    beta: i64,
}

impl PuncturedRational {
    pub fn new(num: Polynomial, alpha: i64, beta: i64) -> Result<Self, TransferError> {
        if num.form() != Form::Ambient {
            return Err(crate::algebra::AlgebraError::WrongForm { expected: Form::Ambient, found: num.form() }.into());
        }
        let mut out = Self { num, alpha, beta };
        out.normalize();
        Ok(out)
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self, TransferError> {
        Self::new(p.clone(), 0, 0)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            return;
        }
        let one = GaussianRational::one();
        // num = (w − 1)·q = (1 − w)·(−q)
        while let Some(q) = self.num.divide_linear(Var::W, &one) {
            self.num = -q;
            self.alpha += 1;
        }
        while let Some(q) = self.num.divide_linear(Var::Wb, &one) {
            self.num = -q;
            self.beta += 1;
        }
    }

    /// Expands to a polynomial when both exponents are non-negative.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.alpha < 0 || self.beta < 0 {
            return None;
        }
        let one = Polynomial::one(Form::Ambient);
        let a = (&one - &Polynomial::w()).pow(self.alpha as u32);
        let b = (&one - &Polynomial::wb()).pow(self.beta as u32);
        Some(&(&self.num * &a) * &b)
    }

    pub fn evaluate(&self, x: &PointC2) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        self.num.evaluate(x) * (one - x.w).powi(self.alpha as i32) * (one - x.w.conj()).powi(self.beta as i32)
    }

    /// Floating-point evaluator with derivatives.
    pub fn compile(&self) -> PuncturedField {
        PuncturedField { num: NumericPoly::new(&self.num), alpha: self.alpha, beta: self.beta }
    }

    /// As [`compile`](Self::compile), with the numerator scaled so its
    /// largest coefficient has modulus one.
    pub fn compile_normalized(&self) -> PuncturedField {
        let c = self.num.max_coeff_norm();
        let s = if c > 0.0 { 1.0 / c } else { 1.0 };
        PuncturedField { num: NumericPoly::scaled(&self.num, s), alpha: self.alpha, beta: self.beta }
    }
}

/// Compiled [`PuncturedRational`] for repeated numeric evaluation.
#[derive(Clone, Debug)]
pub struct PuncturedField {
    num: NumericPoly,
    alpha: i64,
    beta: i64,
}

impl PuncturedField {
    pub fn eval(&self, x: &PointC2) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        self.num.eval(x) * (one - x.w).powi(self.alpha as i32) * (one - x.w.conj()).powi(self.beta as i32)
    }

    pub fn jet(&self, x: &PointC2) -> Jet {
        let one = Complex64::new(1.0, 0.0);
        let n = self.num.jet(x);
        let a = one - x.w;
        let b = one - x.w.conj();
        let factor = a.powi(self.alpha as i32) * b.powi(self.beta as i32);
        Jet {
            value: n.value * factor,
            dz: n.dz * factor,
            dzb: n.dzb * factor,
            dw: (n.dw - self.alpha as f64 * n.value / a) * factor,
            dwb: (n.dwb - self.beta as f64 * n.value / b) * factor,
        }
    }
}

/// Substitutes ψ into `f`, multiplies by `(1−w)^{2n+r}` with `n = deg f`,
/// and returns the normalised result.
///
/// A monomial `z^j z̄^k w^m w̄^l` becomes
/// `i^{j+m} (−i)^{k+l} z^j z̄^k (1+w)^m (1+w̄)^l / ((1−w)^{j+m} (1−w̄)^{k+l})`;
/// the common denominator uses the largest `j+m` and `k+l` over all terms.
pub fn transfer_to_sphere(f: &Polynomial, r: u32) -> Result<PuncturedRational, TransferError> {
    if r < 2 {
        return Err(TransferError::SmoothnessTooLow(r));
    }
    if f.form() != Form::Ambient {
        return Err(crate::algebra::AlgebraError::WrongForm { expected: Form::Ambient, found: f.form() }.into());
    }
    let n = f.total_degree().unwrap_or(0) as i64;
    let big_a = f.terms().map(|(m, _)| m.j + m.m).max().unwrap_or(0);
    let big_b = f.terms().map(|(m, _)| m.k + m.l).max().unwrap_or(0);
    let one = Polynomial::one(Form::Ambient);
    let one_plus_w = &one + &Polynomial::w();
    let one_plus_wb = &one + &Polynomial::wb();
    let one_minus_w = &one - &Polynomial::w();
    let one_minus_wb = &one - &Polynomial::wb();
    let i = GaussianRational::i();
    let neg_i = -&i;
    let mut num = Polynomial::zero(Form::Ambient);
    for (mono, c) in f.terms() {
        let hol = mono.j + mono.m;
        let anti = mono.k + mono.l;
        let coeff = &(c * &i.pow(hol)) * &neg_i.pow(anti);
        let t = Polynomial::monomial(Form::Ambient, Monomial::new(mono.j, mono.k, 0, 0), coeff);
        let t = &t * &one_plus_w.pow(mono.m);
        let t = &t * &one_plus_wb.pow(mono.l);
        let t = &t * &one_minus_w.pow(big_a - hol);
        let t = &t * &one_minus_wb.pow(big_b - anti);
        num = &num + &t;
    }
    let alpha = 2 * n + r as i64 - big_a as i64;
    let beta = -(big_b as i64);
    PuncturedRational::new(num, alpha, beta)
}

/// Sphere operator `w ∂/∂z̄ − z ∂/∂w̄` applied to a punctured rational.
///
/// `(1−w)^α` is holomorphic and passes through unchanged; differentiating
/// `(1−w̄)^β` gives `L(N(1−w̄)^β) = (L N)(1−w̄)^β + β z N (1−w̄)^{β−1}`.
pub fn apply_cr_punctured(g: &PuncturedRational) -> Result<PuncturedRational, TransferError> {
    let op = CrOperator::sphere();
    let ln = op.apply(&g.num)?;
    let one_minus_wb = &Polynomial::one(Form::Ambient) - &Polynomial::wb();
    let beta_z = Polynomial::z().scale(&GaussianRational::from(g.beta));
    let num = &(&ln * &one_minus_wb) + &(&beta_z * &g.num);
    PuncturedRational::new(num, g.alpha, g.beta - 1)
}
