//! Tangential Cauchy–Riemann operators of ℍ and S³ and the two
//! constructive right-inverses: the recursive solver for the Heisenberg
//! operator on all polynomials, and the holomorphic-range solver on S³.

use std::collections::HashMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, Form, GaussianRational, Monomial, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrError {
    #[error("defining function is not real-valued")]
    NonRealDefiningFunction,
    #[error("target has a nonzero constant term; it is not in the range of the sphere operator")]
    NotInRange,
    #[error("target depends on z̄ or w̄; the sphere solver needs a holomorphic polynomial")]
    NotHolomorphic,
    #[error("torus exponents must be positive, got ({p}, {q})")]
    InvalidTorusExponents { p: i64, q: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Heisenberg,
    Sphere,
    Custom,
}

/// First-order derivation `A ∂/∂z̄ + B ∂/∂w̄` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrOperator {
    pub coeff_zb: Polynomial,
    pub coeff_wb: Polynomial,
    pub kind: OperatorKind,
}

impl CrOperator {
    /// `i ∂/∂z̄ + 2z ∂/∂w̄`
    pub fn heisenberg() -> Self {
        Self {
            coeff_zb: Polynomial::constant(Form::Ambient, GaussianRational::i()),
            coeff_wb: Polynomial::z().scale(&2.into()),
            kind: OperatorKind::Heisenberg,
        }
    }

    /// `w ∂/∂z̄ − z ∂/∂w̄`
    pub fn sphere() -> Self {
        Self { coeff_zb: Polynomial::w(), coeff_wb: -Polynomial::z(), kind: OperatorKind::Sphere }
    }

    /// `(∂ρ/∂w̄) ∂/∂z̄ − (∂ρ/∂z̄) ∂/∂w̄` for a real defining function `ρ`.
    pub fn from_rho(rho: &Polynomial) -> Result<Self, CrError> {
        if rho.form() != Form::Ambient {
            return Err(AlgebraError::WrongForm { expected: Form::Ambient, found: rho.form() }.into());
        }
        if !rho.is_real() {
            return Err(CrError::NonRealDefiningFunction);
        }
        let coeff_zb = rho.wirtinger(Var::Wb)?;
        let coeff_wb = -rho.wirtinger(Var::Zb)?;
        let (h, s) = (Self::heisenberg(), Self::sphere());
        let kind = if coeff_zb == h.coeff_zb && coeff_wb == h.coeff_wb {
            OperatorKind::Heisenberg
        } else if coeff_zb == s.coeff_zb && coeff_wb == s.coeff_wb {
            OperatorKind::Sphere
        } else {
            OperatorKind::Custom
        };
        Ok(Self { coeff_zb, coeff_wb, kind })
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_zb.is_zero() && self.coeff_wb.is_zero()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, CrError> {
        let dzb = f.wirtinger(Var::Zb)?;
        let dwb = f.wirtinger(Var::Wb)?;
        Ok(&(&self.coeff_zb * &dzb) + &(&self.coeff_wb * &dwb))
    }
}

pub fn cr_from_rho(rho: &Polynomial) -> Result<CrOperator, CrError> {
    CrOperator::from_rho(rho)
}

pub fn apply_cr(op: &CrOperator, f: &Polynomial) -> Result<Polynomial, CrError> {
    op.apply(f)
}

/// Right-inverse of the Heisenberg operator built monomial by monomial.
///
/// For `z^j z̄^k w̄^l` the particular solution is
/// `S(j,k,l) = z^j z̄^{k+1} w̄^l / (i(k+1)) − 2l/(i(k+1)) · S(j+1, k+1, l−1)`;
/// powers of `w` commute with the operator and are reattached afterwards.
/// Solutions are memoised by `(j, k, l)` for the lifetime of the solver.
#[derive(Debug, Default)]
pub struct HeisenbergSolver {
    memo: HashMap<(u32, u32, u32), Polynomial>,
}

impl HeisenbergSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn solve(&mut self, p: &Polynomial) -> Result<Polynomial, CrError> {
        if p.form() != Form::Ambient {
            return Err(AlgebraError::WrongForm { expected: Form::Ambient, found: p.form() }.into());
        }
        let mut out = Polynomial::zero(Form::Ambient);
        for (m, c) in p.terms() {
            let base = self.monomial(m.j, m.k, m.l);
            let lifted = base.mul_monomial(&Monomial::new(0, 0, m.m, 0)).scale(c);
            out = &out + &lifted;
        }
        Ok(out)
    }

    fn monomial(&mut self, j: u32, k: u32, l: u32) -> Polynomial {
        if let Some(p) = self.memo.get(&(j, k, l)) {
            return p.clone();
        }
        // 1/(i(k+1)) = −i/(k+1)
        let inv = GaussianRational::imag(num_rational::BigRational::new((-1).into(), (k as i64 + 1).into()));
        let mut sol = Polynomial::monomial(Form::Ambient, Monomial::new(j, k + 1, 0, l), inv.clone());
        if l > 0 {
            let cross = &inv * &GaussianRational::from(2 * l as i64);
            let rec = self.monomial(j + 1, k + 1, l - 1).scale(&cross);
            sol = &sol - &rec;
        }
        self.memo.insert((j, k, l), sol.clone());
        sol
    }
}

/// Particular solution `f` of `L_ℍ f = p`.
pub fn solve_heisenberg(p: &Polynomial) -> Result<Polynomial, CrError> {
    HeisenbergSolver::new().solve(p)
}

/// Solves `L_{S³} f = h` for holomorphic `h` without constant term by
/// splitting `h = z h₁ + w h₂` and returning `f = z̄ h₂ − w̄ h₁`.
/// Monomials with a factor of `z` go to `h₁`; pure powers of `w` to `h₂`.
pub fn solve_sphere_holomorphic(h: &Polynomial) -> Result<Polynomial, CrError> {
    if h.form() != Form::Ambient {
        return Err(AlgebraError::WrongForm { expected: Form::Ambient, found: h.form() }.into());
    }
    if !h.is_holomorphic() {
        return Err(CrError::NotHolomorphic);
    }
    if !h.constant_term().is_zero() {
        return Err(CrError::NotInRange);
    }
    let mut h1 = Polynomial::zero(Form::Ambient);
    let mut h2 = Polynomial::zero(Form::Ambient);
    for (m, c) in h.terms() {
        if m.j >= 1 {
            h1 = &h1 + &Polynomial::monomial(Form::Ambient, Monomial::new(m.j - 1, 0, m.m, 0), c.clone());
        } else {
            h2 = &h2 + &Polynomial::monomial(Form::Ambient, Monomial::new(0, 0, m.m - 1, 0), c.clone());
        }
    }
    Ok(&(&Polynomial::zb() * &h2) - &(&Polynomial::wb() * &h1))
}

/// `w^{q−1} z̄ − z^{p−1} w̄`, whose sphere-operator image is `z^p + w^q`.
pub fn torus_knot_source(p: i64, q: i64) -> Result<Polynomial, CrError> {
    if p < 1 || q < 1 {
        return Err(CrError::InvalidTorusExponents { p, q });
    }
    let one = GaussianRational::one();
    let a = Polynomial::monomial(Form::Ambient, Monomial::new(0, 1, q as u32 - 1, 0), one.clone());
    let b = Polynomial::monomial(Form::Ambient, Monomial::new(p as u32 - 1, 0, 0, 1), one);
    Ok(&a - &b)
}

/// `z^p + w^q`.
pub fn torus_knot_polynomial(p: u32, q: u32) -> Polynomial {
    let one = GaussianRational::one();
    &Polynomial::monomial(Form::Ambient, Monomial::new(p, 0, 0, 0), one.clone())
        + &Polynomial::monomial(Form::Ambient, Monomial::new(0, 0, q, 0), one)
}
