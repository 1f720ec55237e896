use num_complex::Complex64;

use super::polynomial::{Form, Polynomial, PointC2};

/// Value and the four Wirtinger derivatives of a function at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub value: Complex64,
    pub dz: Complex64,
    pub dzb: Complex64,
    pub dw: Complex64,
    pub dwb: Complex64,
}

impl Jet {
    /// Real differential along `v ∈ ℝ⁴` (coordinates `Re z, Im z, Re w, Im w`).
    pub fn directional(&self, v: [f64; 4]) -> Complex64 {
        let dz = Complex64::new(v[0], v[1]);
        let dw = Complex64::new(v[2], v[3]);
        self.dz * dz + self.dzb * dz.conj() + self.dw * dw + self.dwb * dw.conj()
    }

    /// Real 2×4 Jacobian rows `(Re, Im)` of the differential.
    pub fn real_jacobian(&self) -> [[f64; 4]; 2] {
        let mut re = [0.0; 4];
        let mut im = [0.0; 4];
        for (i, e) in unit_vectors().into_iter().enumerate() {
            let d = self.directional(e);
            re[i] = d.re;
            im[i] = d.im;
        }
        [re, im]
    }
}

fn unit_vectors() -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    out
}

/// Floating-point image of an ambient polynomial for fast repeated
/// evaluation.
#[derive(Clone, Debug)]
pub struct NumericPoly {
    terms: Vec<([u32; 4], Complex64)>,
    max_exp: [u32; 4],
}

impl NumericPoly {
    /// Compiles `p`; H-form input is converted to ambient form first.
    pub fn new(p: &Polynomial) -> Self {
        let p = match p.form() {
            Form::Ambient => p.clone(),
            Form::HCoord => p.to_ambient().expect("h-form converts"),
        };
        let mut max_exp = [0u32; 4];
        let terms = p
            .terms()
            .map(|(m, c)| {
                let e = [m.j, m.k, m.m, m.l];
                for i in 0..4 {
                    max_exp[i] = max_exp[i].max(e[i]);
                }
                (e, c.to_complex64())
            })
            .collect();
        Self { terms, max_exp }
    }

    /// Same as [`NumericPoly::new`] with every coefficient divided by `s`.
    pub fn scaled(p: &Polynomial, s: f64) -> Self {
        let mut n = Self::new(p);
        for t in &mut n.terms {
            t.1 /= s;
        }
        n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn powers(&self, x: &PointC2) -> [Vec<Complex64>; 4] {
        let base = [x.z, x.z.conj(), x.w, x.w.conj()];
        std::array::from_fn(|i| {
            let mut v = Vec::with_capacity(self.max_exp[i] as usize + 1);
            let mut acc = Complex64::new(1.0, 0.0);
            v.push(acc);
            for _ in 0..self.max_exp[i] {
                acc *= base[i];
                v.push(acc);
            }
            v
        })
    }

    pub fn eval(&self, x: &PointC2) -> Complex64 {
        let pw = self.powers(x);
        self.terms
            .iter()
            .map(|(e, c)| c * pw[0][e[0] as usize] * pw[1][e[1] as usize] * pw[2][e[2] as usize] * pw[3][e[3] as usize])
            .sum()
    }

    pub fn jet(&self, x: &PointC2) -> Jet {
        let pw = self.powers(x);
        let zero = Complex64::new(0.0, 0.0);
        let mut j = Jet { value: zero, dz: zero, dzb: zero, dw: zero, dwb: zero };
        for (e, c) in &self.terms {
            let f: [Complex64; 4] = std::array::from_fn(|i| pw[i][e[i] as usize]);
            j.value += c * f[0] * f[1] * f[2] * f[3];
            let d = |i: usize| -> Complex64 {
                if e[i] == 0 {
                    zero
                } else {
                    Complex64::new(e[i] as f64, 0.0) * pw[i][e[i] as usize - 1]
                }
            };
            j.dz += c * d(0) * f[1] * f[2] * f[3];
            j.dzb += c * f[0] * d(1) * f[2] * f[3];
            j.dw += c * f[0] * f[1] * d(2) * f[3];
            j.dwb += c * f[0] * f[1] * f[2] * d(3);
        }
        j
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::Var;

    #[test]
    fn jet_matches_symbolic_derivatives() {
        let p = parse_poly("(1+2i) z^2 wb + zb^3 w - (1/3) z zb w wb + 4", Form::Ambient).unwrap();
        let n = NumericPoly::new(&p);
        let x = PointC2::new(Complex64::new(0.3, -0.7), Complex64::new(-0.2, 0.5));
        let j = n.jet(&x);
        let close = |a: Complex64, b: Complex64| (a - b).norm() < 1e-13;
        assert!(close(j.value, p.evaluate(&x)));
        assert!(close(j.dz, p.wirtinger(Var::Z).unwrap().evaluate(&x)));
        assert!(close(j.dzb, p.wirtinger(Var::Zb).unwrap().evaluate(&x)));
        assert!(close(j.dw, p.wirtinger(Var::W).unwrap().evaluate(&x)));
        assert!(close(j.dwb, p.wirtinger(Var::Wb).unwrap().evaluate(&x)));
    }
}
