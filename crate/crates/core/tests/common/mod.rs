//! Shared generators for the integration tests.
#![allow(dead_code)]

use crtangent::algebra::{Form, GaussianRational, Monomial, PointC2, Polynomial};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gauss(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
    &GaussianRational::real_frac(re_n, re_d) + &(&GaussianRational::i() * &GaussianRational::real_frac(im_n, im_d))
}

pub fn random_coeff(rng: &mut ChaCha8Rng) -> GaussianRational {
    gauss(rng.random_range(-5..=5), rng.random_range(1..=4), rng.random_range(-5..=5), rng.random_range(1..=4))
}

/// Random polynomial with up to `terms` monomials of total degree ≤ `deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, form: Form, deg: u32, terms: usize) -> Polynomial {
    let n = rng.random_range(1..=terms);
    let mut out = Vec::new();
    for _ in 0..n {
        let d = rng.random_range(0..=deg);
        let mut e = [0u32; 4];
        let slots = if form == Form::Ambient { 4 } else { 3 };
        for _ in 0..d {
            e[rng.random_range(0..slots)] += 1;
        }
        out.push((Monomial::new(e[0], e[1], e[2], e[3]), random_coeff(rng)));
    }
    Polynomial::from_terms(form, out).unwrap()
}

pub fn random_holomorphic(rng: &mut ChaCha8Rng, deg: u32, terms: usize) -> Polynomial {
    let n = rng.random_range(1..=terms);
    let mut out = Vec::new();
    for _ in 0..n {
        let d = rng.random_range(1..=deg);
        let j = rng.random_range(0..=d);
        out.push((Monomial::new(j, 0, d - j, 0), random_coeff(rng)));
    }
    Polynomial::from_terms(Form::Ambient, out).unwrap()
}

/// Random point of ℍ with `|z| ≤ 1.5`, `|u| ≤ 1.5`.
pub fn random_h_point(rng: &mut ChaCha8Rng) -> PointC2 {
    let z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let u: f64 = rng.random_range(-1.5..1.5);
    PointC2::new(z, Complex64::new(u, z.norm_sqr()))
}

pub fn random_point(rng: &mut ChaCha8Rng, radius: f64) -> PointC2 {
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| rng.random_range(-radius..radius));
        if v.iter().map(|c| c * c).sum::<f64>() <= radius * radius {
            return PointC2::from_real(v);
        }
    }
}

fn coeff_strategy() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5).prop_map(|(a, b, c, d)| gauss(a, b, c, d))
}

/// Polynomials of total degree ≤ `deg` with up to `terms` terms.
pub fn poly_strategy(form: Form, deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let l_max = if form == Form::Ambient { deg } else { 0 };
    prop::collection::vec(((0..=deg, 0..=deg, 0..=deg, 0..=l_max), coeff_strategy()), 0..=terms).prop_map(
        move |raw| {
            let terms = raw
                .into_iter()
                .filter(|((j, k, m, l), _)| j + k + m + l <= deg)
                .map(|((j, k, m, l), c)| (Monomial::new(j, k, m, l), c));
            Polynomial::from_terms(form, terms).unwrap()
        },
    )
}

pub fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * (1.0 + a.norm().max(b.norm()))
}
