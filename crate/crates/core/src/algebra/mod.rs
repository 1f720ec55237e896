//! Exact sparse polynomials over the Gaussian rationals in the formal
//! variables `z, z̄, w, w̄` (ambient form) or `z, z̄, u` (Heisenberg
//! coordinates), with Wirtinger calculus and coordinate changes.

mod gaussian;
mod numeric;
mod parse;
mod polynomial;
mod real;

pub use gaussian::GaussianRational;
pub use numeric::{Jet, NumericPoly};
pub use parse::{parse_poly, parse_real, ParseError};
pub use polynomial::{arith, ArithOp, Form, Monomial, PointC2, Polynomial, Substitution, Var};
pub use real::{from_real, RealPolynomial};

pub(crate) use gaussian::ratio_to_f64;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands have different forms ({left} vs {right})")]
    MixedForms { left: Form, right: Form },
    #[error("expected a polynomial in {expected} form, found {found}")]
    WrongForm { expected: Form, found: Form },
    #[error("variable `{var}` is not part of {form} form")]
    VariableNotInForm { var: Var, form: Form },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("substitution has no image for `{0}`")]
    IncompleteSubstitution(Var),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// `|z|² + |w|² − 1`, defining S³.
pub fn rho_sphere() -> Polynomial {
    parse_poly("z zb + w wb - 1", Form::Ambient).expect("literal")
}

/// `i(w̄ − w) − 2 z z̄`, defining ℍ = {Im w = |z|²}.
pub fn rho_heisenberg() -> Polynomial {
    parse_poly("i wb - i w - 2 z zb", Form::Ambient).expect("literal")
}
