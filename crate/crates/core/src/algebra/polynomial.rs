use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gaussian::{CoeffText, GaussianRational};
use super::AlgebraError;

/// Which variable set a polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    /// Formal variables `z, z̄, w, w̄` on ℂ².
    Ambient,
    /// Heisenberg coordinates `z, z̄, u` with `u = Re w`.
    HCoord,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Ambient => write!(f, "ambient"),
            Form::HCoord => write!(f, "h-coord"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    Zb,
    W,
    Wb,
    U,
}

impl Var {
    pub const AMBIENT: [Var; 4] = [Var::Z, Var::Zb, Var::W, Var::Wb];
    pub const HCOORD: [Var; 3] = [Var::Z, Var::Zb, Var::U];

    pub fn allowed_in(self, form: Form) -> bool {
        match form {
            Form::Ambient => !matches!(self, Var::U),
            Form::HCoord => matches!(self, Var::Z | Var::Zb | Var::U),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::Zb => "zb",
            Var::W => "w",
            Var::Wb => "wb",
            Var::U => "u",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `z^j z̄^k w^m w̄^l`; in H-form `m` is the exponent of `u` and `l` is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub j: u32,
    pub k: u32,
    pub m: u32,
    pub l: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { j: 0, k: 0, m: 0, l: 0 };

    pub fn new(j: u32, k: u32, m: u32, l: u32) -> Self {
        Self { j, k, m, l }
    }

    /// z, z̄ count 1; w, w̄ (or u) count 2.
    pub fn weight(&self) -> u32 {
        self.j + self.k + 2 * self.m + 2 * self.l
    }

    pub fn degree(&self) -> u32 {
        self.j + self.k + self.m + self.l
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial::new(self.j + o.j, self.k + o.k, self.m + o.m, self.l + o.l)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.k == 0 && self.l == 0
    }

    pub(crate) fn exponent_of(&self, v: Var) -> u32 {
        match v {
            Var::Z => self.j,
            Var::Zb => self.k,
            Var::W | Var::U => self.m,
            Var::Wb => self.l,
        }
    }

    fn key(&self) -> (u32, u32, u32, u32, u32) {
        (self.weight(), self.j, self.k, self.m, self.l)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A point of ℂ².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointC2 {
    pub z: Complex64,
    pub w: Complex64,
}

impl PointC2 {
    pub fn new(z: Complex64, w: Complex64) -> Self {
        Self { z, w }
    }

    pub fn from_real(x: [f64; 4]) -> Self {
        Self::new(Complex64::new(x[0], x[1]), Complex64::new(x[2], x[3]))
    }

    pub fn to_real(&self) -> [f64; 4] {
        [self.z.re, self.z.im, self.w.re, self.w.im]
    }

    pub fn norm(&self) -> f64 {
        (self.z.norm_sqr() + self.w.norm_sqr()).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.z.is_finite() && self.w.is_finite()
    }

    pub fn dist(&self, o: &PointC2) -> f64 {
        ((self.z - o.z).norm_sqr() + (self.w - o.w).norm_sqr()).sqrt()
    }
}

/// Sparse polynomial with Gaussian-rational coefficients. No stored
/// coefficient is ever zero, and terms iterate in canonical order
/// (weight, then `(j, k, m, l)` lexicographically).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    form: Form,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero(form: Form) -> Self {
        Self { form, terms: BTreeMap::new() }
    }

    pub fn constant(form: Form, c: GaussianRational) -> Self {
        let mut p = Self::zero(form);
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn one(form: Form) -> Self {
        Self::constant(form, GaussianRational::one())
    }

    pub fn monomial(form: Form, mono: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(form);
        p.add_term(mono, c);
        p
    }

    pub fn var(form: Form, v: Var) -> Result<Self, AlgebraError> {
        if !v.allowed_in(form) {
            return Err(AlgebraError::VariableNotInForm { var: v, form });
        }
        let mono = match v {
            Var::Z => Monomial::new(1, 0, 0, 0),
            Var::Zb => Monomial::new(0, 1, 0, 0),
            Var::W | Var::U => Monomial::new(0, 0, 1, 0),
            Var::Wb => Monomial::new(0, 0, 0, 1),
        };
        Ok(Self::monomial(form, mono, GaussianRational::one()))
    }

    pub fn z() -> Self {
        Self::monomial(Form::Ambient, Monomial::new(1, 0, 0, 0), GaussianRational::one())
    }
    pub fn zb() -> Self {
        Self::monomial(Form::Ambient, Monomial::new(0, 1, 0, 0), GaussianRational::one())
    }
    pub fn w() -> Self {
        Self::monomial(Form::Ambient, Monomial::new(0, 0, 1, 0), GaussianRational::one())
    }
    pub fn wb() -> Self {
        Self::monomial(Form::Ambient, Monomial::new(0, 0, 0, 1), GaussianRational::one())
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms. Fails if a monomial uses a variable outside `form`.
    pub fn from_terms<I>(form: Form, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = Self::zero(form);
        for (mono, c) in terms {
            if form == Form::HCoord && mono.l != 0 {
                return Err(AlgebraError::VariableNotInForm { var: Var::Wb, form });
            }
            p.add_term(mono, c);
        }
        Ok(p)
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> GaussianRational {
        self.terms.get(mono).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::ONE)
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_form(&self, o: &Polynomial) -> Result<(), AlgebraError> {
        if self.form != o.form {
            return Err(AlgebraError::MixedForms { left: self.form, right: o.form });
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.same_form(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, o: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.same_form(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.same_form(o)?;
        let mut acc: HashMap<Monomial, GaussianRational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        let mut out = Polynomial::zero(self.form);
        for (m, c) in acc {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.form);
        }
        Polynomial {
            form: self.form,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            form: self.form,
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.form);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Complex conjugation: swaps `z ↔ z̄`, `w ↔ w̄` (u is real) and
    /// conjugates every coefficient.
    pub fn conjugate(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mono = match self.form {
                Form::Ambient => Monomial::new(m.k, m.j, m.l, m.m),
                Form::HCoord => Monomial::new(m.k, m.j, m.m, 0),
            };
            (mono, c.conj())
        });
        Polynomial { form: self.form, terms: terms.collect() }
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Formal partial derivative with `z, z̄, w, w̄` independent.
    pub fn wirtinger(&self, v: Var) -> Result<Polynomial, AlgebraError> {
        if self.form != Form::Ambient {
            return Err(AlgebraError::WrongForm { expected: Form::Ambient, found: self.form });
        }
        if !v.allowed_in(Form::Ambient) {
            return Err(AlgebraError::VariableNotInForm { var: v, form: Form::Ambient });
        }
        Ok(self.partial(v))
    }

    /// Formal derivative in any variable of the polynomial's own form.
    pub(crate) fn partial(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero(self.form);
        for (m, c) in &self.terms {
            let e = m.exponent_of(v);
            if e == 0 {
                continue;
            }
            let mut d = *m;
            match v {
                Var::Z => d.j -= 1,
                Var::Zb => d.k -= 1,
                Var::W | Var::U => d.m -= 1,
                Var::Wb => d.l -= 1,
            }
            out.add_term(d, c * &GaussianRational::from(e as i64));
        }
        out
    }

    /// Numeric value at `x`. H-form polynomials are evaluated at
    /// `(z, u = Re w)`.
    pub fn evaluate(&self, x: &PointC2) -> Complex64 {
        let zc = x.z.conj();
        let (w, wc) = match self.form {
            Form::Ambient => (x.w, x.w.conj()),
            Form::HCoord => (Complex64::new(x.w.re, 0.0), Complex64::new(1.0, 0.0)),
        };
        self.terms
            .iter()
            .map(|(m, c)| {
                c.to_complex64()
                    * x.z.powu(m.j)
                    * zc.powu(m.k)
                    * w.powu(m.m)
                    * wc.powu(m.l)
            })
            .sum()
    }

    /// Evaluates an H-form polynomial at `(z, u)`.
    pub fn evaluate_h(&self, z: Complex64, u: f64) -> Complex64 {
        let x = PointC2::new(z, Complex64::new(u, 0.0));
        match self.form {
            Form::HCoord => self.evaluate(&x),
            Form::Ambient => self.evaluate(&PointC2::new(z, Complex64::new(u, z.norm_sqr()))),
        }
    }

    /// Common weight of all monomials, or `None` when inhomogeneous.
    pub fn weight(&self) -> Result<Option<u32>, AlgebraError> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(AlgebraError::ZeroPolynomial)?.weight();
        Ok(it.all(|m| m.weight() == first).then_some(first))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(Monomial::is_holomorphic)
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.to_complex64().norm()).fold(0.0, f64::max)
    }

    /// Replaces every variable by a polynomial. All images must share one
    /// form, which becomes the form of the result.
    pub fn substitute(&self, map: &Substitution) -> Result<Polynomial, AlgebraError> {
        let vars: &[Var] = match self.form {
            Form::Ambient => &Var::AMBIENT,
            Form::HCoord => &Var::HCOORD,
        };
        let mut target: Option<Form> = None;
        for v in vars {
            if let Some(img) = map.get(*v) {
                match target {
                    None => target = Some(img.form),
                    Some(f) if f != img.form => {
                        return Err(AlgebraError::MixedForms { left: f, right: img.form })
                    }
                    _ => {}
                }
            }
        }
        for m in self.terms.keys() {
            for v in vars {
                if m.exponent_of(*v) > 0 && map.get(*v).is_none() {
                    return Err(AlgebraError::IncompleteSubstitution(*v));
                }
            }
        }
        let target = target.unwrap_or(self.form);
        let mut cache: HashMap<(Var, u32), Polynomial> = HashMap::new();
        let mut power = |v: Var, e: u32| -> Polynomial {
            cache
                .entry((v, e))
                .or_insert_with(|| map.get(v).expect("checked above").pow(e))
                .clone()
        };
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for v in vars {
                let e = m.exponent_of(*v);
                if e > 0 {
                    t = &t * &power(*v, e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// H-form → ambient form via `u = (w + w̄)/2`, an identity on all of ℂ².
    pub fn to_ambient(&self) -> Result<Polynomial, AlgebraError> {
        if self.form != Form::HCoord {
            return Err(AlgebraError::WrongForm { expected: Form::HCoord, found: self.form });
        }
        let half = GaussianRational::real_frac(1, 2);
        let u = (&Polynomial::w() + &Polynomial::wb()).scale(&half);
        let map = Substitution::new()
            .with(Var::Z, Polynomial::z())
            .with(Var::Zb, Polynomial::zb())
            .with(Var::U, u);
        self.substitute(&map)
    }

    /// Ambient → H-form by restricting to ℍ: `w = u + i z z̄`,
    /// `w̄ = u − i z z̄`. The result agrees with `self` only on ℍ.
    pub fn to_h_coords(&self) -> Result<Polynomial, AlgebraError> {
        if self.form != Form::Ambient {
            return Err(AlgebraError::WrongForm { expected: Form::Ambient, found: self.form });
        }
        let h = Form::HCoord;
        let zzb = Polynomial::monomial(h, Monomial::new(1, 1, 0, 0), GaussianRational::i());
        let u = Polynomial::var(h, Var::U)?;
        let map = Substitution::new()
            .with(Var::Z, Polynomial::var(h, Var::Z)?)
            .with(Var::Zb, Polynomial::var(h, Var::Zb)?)
            .with(Var::W, &u + &zzb)
            .with(Var::Wb, &u - &zzb);
        self.substitute(&map)
    }

    /// Exact quotient by `(var − root)` when it divides `self`, else `None`.
    pub fn divide_linear(&self, v: Var, root: &GaussianRational) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(self.clone());
        }
        // Group by the remaining exponents; each group is a univariate
        // polynomial in `v` handled by synthetic division.
        let mut groups: BTreeMap<Monomial, BTreeMap<u32, GaussianRational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent_of(v);
            let mut rest = *m;
            match v {
                Var::Z => rest.j = 0,
                Var::Zb => rest.k = 0,
                Var::W | Var::U => rest.m = 0,
                Var::Wb => rest.l = 0,
            }
            groups.entry(rest).or_default().insert(e, c.clone());
        }
        let mut out = Polynomial::zero(self.form);
        for (rest, uni) in groups {
            let deg = *uni.keys().next_back().expect("nonempty group");
            // coefficients from high to low degree
            let mut carry = GaussianRational::zero();
            for e in (0..=deg).rev() {
                let a = uni.get(&e).cloned().unwrap_or_else(GaussianRational::zero);
                let b = &a + &carry;
                if e == 0 {
                    if !b.is_zero() {
                        return None;
                    }
                } else {
                    let mut mono = rest;
                    let q = e - 1;
                    match v {
                        Var::Z => mono.j = q,
                        Var::Zb => mono.k = q,
                        Var::W | Var::U => mono.m = q,
                        Var::Wb => mono.l = q,
                    }
                    carry = &b * root;
                    out.add_term(mono, b);
                }
            }
        }
        Some(out)
    }
}

/// Variable → polynomial map used by [`Polynomial::substitute`].
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    images: BTreeMap<Var, Polynomial>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn identity(form: Form) -> Self {
        let vars: &[Var] = match form {
            Form::Ambient => &Var::AMBIENT,
            Form::HCoord => &Var::HCOORD,
        };
        let mut s = Self::new();
        for v in vars {
            s.images.insert(*v, Polynomial::var(form, *v).expect("form variable"));
        }
        s
    }

    pub fn with(mut self, v: Var, p: Polynomial) -> Self {
        self.images.insert(v, p);
        self
    }

    pub fn insert(&mut self, v: Var, p: Polynomial) {
        self.images.insert(v, p);
    }

    pub fn get(&self, v: Var) -> Option<&Polynomial> {
        self.images.get(&v)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on mixed forms; use [`Polynomial::checked_add`] to handle that.
    fn add(self, o: &Polynomial) -> Polynomial {
        self.checked_add(o).expect("polynomial forms must match")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.checked_sub(o).expect("polynomial forms must match")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.checked_mul(o).expect("polynomial forms must match")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, o: Polynomial) -> Polynomial {
        &self + &o
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        &self - &o
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            form: self.form,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Ring operations addressed by name, for callers that dispatch on text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(op: ArithOp, a: &Polynomial, b: &Polynomial) -> Result<Polynomial, AlgebraError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

fn factor_text(out: &mut Vec<String>, name: &str, e: u32) {
    match e {
        0 => {}
        1 => out.push(name.to_string()),
        _ => out.push(format!("{name}^{e}")),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            factor_text(&mut factors, "z", m.j);
            factor_text(&mut factors, "zb", m.k);
            match self.form {
                Form::Ambient => {
                    factor_text(&mut factors, "w", m.m);
                    factor_text(&mut factors, "wb", m.l);
                }
                Form::HCoord => factor_text(&mut factors, "u", m.m),
            }
            let (neg, mag) = c.split_sign();
            let coeff = match mag.coeff_text() {
                CoeffText::Unit if factors.is_empty() => Some("1".to_string()),
                CoeffText::Unit => None,
                CoeffText::Bare(s) => Some(s),
                CoeffText::Paren(s) if idx == 0 && neg => Some(format!("(-{s})")),
                CoeffText::Paren(s) => Some(format!("({s})")),
            };
            let paren_first_neg = idx == 0 && neg && matches!(coeff.as_deref(), Some(s) if s.starts_with("(-"));
            if idx == 0 {
                if neg && !paren_first_neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut parts = Vec::new();
            if let Some(c) = coeff {
                parts.push(c);
            }
            parts.extend(factors);
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(j: u32, k: u32, m: u32, l: u32) -> Polynomial {
        Polynomial::monomial(Form::Ambient, Monomial::new(j, k, m, l), GaussianRational::one())
    }

    #[test]
    fn additive_inverse_is_empty() {
        let z = Polynomial::z();
        let s = &z + &(-&z);
        assert!(s.is_zero());
        assert_eq!(s.to_string(), "0");
    }

    #[test]
    fn difference_of_squares() {
        let (z, w) = (Polynomial::z(), Polynomial::w());
        let prod = &(&z + &w) * &(&z - &w);
        assert_eq!(prod, &zp(2, 0, 0, 0) - &zp(0, 0, 2, 0));
    }

    #[test]
    fn mixed_forms_rejected() {
        let h = Polynomial::var(Form::HCoord, Var::U).unwrap();
        assert!(matches!(Polynomial::z().checked_add(&h), Err(AlgebraError::MixedForms { .. })));
        assert!(arith(ArithOp::Mul, &Polynomial::z(), &h).is_err());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Polynomial::z().conjugate(), Polynomial::zb());
        let p = Polynomial::monomial(Form::Ambient, Monomial::new(1, 0, 0, 1), GaussianRational::from_ints(1, 2));
        let q = Polynomial::monomial(Form::Ambient, Monomial::new(0, 1, 1, 0), GaussianRational::from_ints(1, -2));
        assert_eq!(p.conjugate(), q);
    }

    #[test]
    fn wirtinger_power_rule() {
        let zb2 = zp(0, 2, 0, 0);
        assert_eq!(zb2.wirtinger(Var::Zb).unwrap(), zp(0, 1, 0, 0).scale(&2.into()));
        assert_eq!(zp(1, 0, 0, 1).wirtinger(Var::Wb).unwrap(), Polynomial::z());
        let h = Polynomial::var(Form::HCoord, Var::U).unwrap();
        assert!(h.wirtinger(Var::Z).is_err());
    }

    #[test]
    fn evaluation_example() {
        let p = &zp(2, 0, 0, 0) + &zp(0, 0, 3, 0);
        let v = p.evaluate(&PointC2::new(Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)));
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn weights() {
        assert_eq!(zp(1, 1, 0, 0).weight().unwrap(), Some(2));
        assert_eq!((&zp(2, 0, 0, 0) + &Polynomial::w()).weight().unwrap(), Some(2));
        assert_eq!((&Polynomial::z() + &Polynomial::w()).weight().unwrap(), None);
        assert!(matches!(Polynomial::zero(Form::Ambient).weight(), Err(AlgebraError::ZeroPolynomial)));
    }

    #[test]
    fn substitution_examples() {
        let z2 = zp(2, 0, 0, 0);
        let one = Polynomial::one(Form::Ambient);
        let map = Substitution::identity(Form::Ambient).with(Var::Z, &Polynomial::z() + &one);
        let expect = &(&z2 + &Polynomial::z().scale(&2.into())) + &one;
        assert_eq!(z2.substitute(&map).unwrap(), expect);
        assert_eq!(z2.substitute(&Substitution::identity(Form::Ambient)).unwrap(), z2);
        let partial = Substitution::new().with(Var::W, Polynomial::z());
        assert!(matches!(z2.substitute(&partial), Err(AlgebraError::IncompleteSubstitution(Var::Z))));
    }

    #[test]
    fn coordinate_changes() {
        let u = Polynomial::var(Form::HCoord, Var::U).unwrap();
        let half = GaussianRational::real_frac(1, 2);
        assert_eq!(u.to_ambient().unwrap(), (&Polynomial::w() + &Polynomial::wb()).scale(&half));
        // w·w̄ → u² + z² z̄²
        let ww = zp(0, 0, 1, 1).to_h_coords().unwrap();
        let expect = Polynomial::from_terms(
            Form::HCoord,
            [
                (Monomial::new(0, 0, 2, 0), GaussianRational::one()),
                (Monomial::new(2, 2, 0, 0), GaussianRational::one()),
            ],
        )
        .unwrap();
        assert_eq!(ww, expect);
        // z·u² → z (w + w̄)²/4
        let zu2 = Polynomial::monomial(Form::HCoord, Monomial::new(1, 0, 2, 0), GaussianRational::one());
        let wsum = &Polynomial::w() + &Polynomial::wb();
        let expect = (&Polynomial::z() * &wsum.pow(2)).scale(&GaussianRational::real_frac(1, 4));
        assert_eq!(zu2.to_ambient().unwrap(), expect);
    }

    #[test]
    fn heisenberg_defining_function_restricts_to_zero() {
        let i = GaussianRational::i();
        let rho = &(&Polynomial::wb() - &Polynomial::w()).scale(&i) - &zp(1, 1, 0, 0).scale(&2.into());
        assert!(rho.to_h_coords().unwrap().is_zero());
        assert!(rho.is_real());
    }

    #[test]
    fn linear_division() {
        let one = Polynomial::one(Form::Ambient);
        let f = &one - &Polynomial::w();
        let p = &(&f * &f) * &(&Polynomial::z() + &Polynomial::wb());
        let q = p.divide_linear(Var::W, &GaussianRational::one()).unwrap();
        assert_eq!(&q * &(&Polynomial::w() - &one), p);
        assert!(Polynomial::z().divide_linear(Var::W, &GaussianRational::one()).is_none());
    }

    #[test]
    fn canonical_text() {
        let p = &zp(0, 0, 3, 0) + &zp(2, 0, 0, 0);
        assert_eq!(p.to_string(), "z^2 + w^3");
        let q = &zp(0, 1, 2, 0) - &zp(1, 0, 0, 1);
        assert_eq!(q.to_string(), "-z wb + zb w^2");
        let c = Polynomial::monomial(Form::Ambient, Monomial::new(0, 1, 0, 0), -GaussianRational::i());
        assert_eq!(c.to_string(), "-i zb");
    }
}
