use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TransferError;
use crate::algebra::{ratio_to_f64, Form, GaussianRational, PointC2, Polynomial, Substitution, Var};

/// Rigid motion of ℍ ≅ ℝ³ through `Π(z, w) = (Re z, Im z, Re w)`:
/// `v ↦ R v + (Re a, Im a, t)`, with `R` an exact rational orthogonal matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidMotionH {
    shift_z: GaussianRational,
    shift_u: BigRational,
    rotation: [[BigRational; 3]; 3],
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn identity3() -> [[BigRational; 3]; 3] {
    std::array::from_fn(|r| std::array::from_fn(|c| if r == c { BigRational::one() } else { BigRational::zero() }))
}

impl RigidMotionH {
    pub fn identity() -> Self {
        Self { shift_z: GaussianRational::zero(), shift_u: BigRational::zero(), rotation: identity3() }
    }

    pub fn new(
        rotation: [[BigRational; 3]; 3],
        shift_z: GaussianRational,
        shift_u: BigRational,
    ) -> Result<Self, TransferError> {
        for a in 0..3 {
            for b in 0..3 {
                let dot: BigRational = (0..3).map(|k| &rotation[k][a] * &rotation[k][b]).sum();
                let expect = if a == b { BigRational::one() } else { BigRational::zero() };
                if dot != expect {
                    return Err(TransferError::NonOrthogonal);
                }
            }
        }
        Ok(Self { shift_z, shift_u, rotation })
    }

    pub fn translation(shift_z: GaussianRational, shift_u: BigRational) -> Self {
        Self { shift_z, shift_u, rotation: identity3() }
    }

    /// Rotation about coordinate axis `axis` (0 = x, 1 = y, 2 = u) with
    /// `cos = c_num/den`, `sin = s_num/den`; e.g. a Pythagorean triple.
    pub fn axis_rotation(axis: usize, c_num: i64, s_num: i64, den: i64) -> Result<Self, TransferError> {
        Self::axis_rotation_exact(axis, rat(c_num, den), rat(s_num, den))
    }

    pub fn axis_rotation_exact(axis: usize, c: BigRational, s: BigRational) -> Result<Self, TransferError> {
        let (p, q) = match axis {
            0 => (1, 2),
            1 => (2, 0),
            2 => (0, 1),
            _ => return Err(TransferError::NonOrthogonal),
        };
        let mut r = identity3();
        r[p][p] = c.clone();
        r[q][q] = c;
        r[p][q] = -s.clone();
        r[q][p] = s;
        Self::new(r, GaussianRational::zero(), BigRational::zero())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RigidMotionH) -> RigidMotionH {
        let rot: [[BigRational; 3]; 3] = std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..3).map(|k| &next.rotation[r][k] * &self.rotation[k][c]).sum())
        });
        let c = self.shift_vector();
        let moved: [BigRational; 3] = std::array::from_fn(|r| {
            (0..3).map(|k| &next.rotation[r][k] * &c[k]).sum::<BigRational>() + &next.shift_vector()[r]
        });
        RigidMotionH {
            shift_z: GaussianRational::new(moved[0].clone(), moved[1].clone()),
            shift_u: moved[2].clone(),
            rotation: rot,
        }
    }

    pub fn rotation(&self) -> &[[BigRational; 3]; 3] {
        &self.rotation
    }

    fn shift_vector(&self) -> [BigRational; 3] {
        [self.shift_z.re.clone(), self.shift_z.im.clone(), self.shift_u.clone()]
    }

    /// Forward action on a point of ℍ; the image is lifted back with
    /// `Im w = |z|²`.
    pub fn apply(&self, x: &PointC2) -> PointC2 {
        let v = [x.z.re, x.z.im, x.w.re];
        let c = self.shift_vector();
        let out: [f64; 3] =
            std::array::from_fn(|r| (0..3).map(|k| ratio_to_f64(&self.rotation[r][k]) * v[k]).sum::<f64>() + ratio_to_f64(&c[r]));
        let z = Complex64::new(out[0], out[1]);
        PointC2::new(z, Complex64::new(out[2], z.norm_sqr()))
    }

    /// Inverse motion as polynomial images of `(z, z̄, u)` in H-form.
    fn inverse_substitution(&self) -> Substitution {
        let h = Form::HCoord;
        let z = Polynomial::var(h, Var::Z).expect("h var");
        let zb = Polynomial::var(h, Var::Zb).expect("h var");
        let u = Polynomial::var(h, Var::U).expect("h var");
        let half = GaussianRational::real_frac(1, 2);
        let neg_half_i = GaussianRational::imag(rat(-1, 2));
        let c = self.shift_vector();
        let coords = [
            &(&z + &zb).scale(&half) - &Polynomial::constant(h, c[0].clone().into()),
            &(&z - &zb).scale(&neg_half_i) - &Polynomial::constant(h, c[1].clone().into()),
            &u - &Polynomial::constant(h, c[2].clone().into()),
        ];
        // Rᵀ (v − c)
        let back: Vec<Polynomial> = (0..3)
            .map(|r| {
                (0..3).fold(Polynomial::zero(h), |acc, k| {
                    &acc + &coords[k].scale(&GaussianRational::real(self.rotation[k][r].clone()))
                })
            })
            .collect();
        let i = GaussianRational::i();
        let iy = back[1].scale(&i);
        Substitution::new()
            .with(Var::Z, &back[0] + &iy)
            .with(Var::Zb, &back[0] - &iy)
            .with(Var::U, back[2].clone())
    }

    /// H-form image of `g` under the motion: its zero set on ℍ is the
    /// moved zero set of `g`.
    pub fn move_h(&self, g_h: &Polynomial) -> Result<Polynomial, TransferError> {
        Ok(g_h.substitute(&self.inverse_substitution())?)
    }
}

/// Moves the zero set of `g` on ℍ by `motion`; returns an ambient
/// polynomial that agrees on ℍ with the moved H-form polynomial.
pub fn move_knot(g: &Polynomial, motion: &RigidMotionH) -> Result<Polynomial, TransferError> {
    let g_h = g.to_h_coords()?;
    let moved = motion.move_h(&g_h)?;
    Ok(moved.to_ambient()?)
}

/// Product of the component polynomials; its zero set is the union.
pub fn link_product(gs: &[Polynomial]) -> Result<Polynomial, TransferError> {
    let (first, rest) = gs.split_first().ok_or(TransferError::EmptyLink)?;
    rest.iter().try_fold(first.clone(), |acc, g| Ok(acc.checked_mul(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn amb(s: &str) -> Polynomial {
        parse_poly(s, Form::Ambient).unwrap()
    }

    #[test]
    fn translation_example() {
        let m = RigidMotionH::translation(GaussianRational::one(), BigRational::zero());
        assert_eq!(move_knot(&amb("z"), &m).unwrap(), amb("z - 1"));
    }

    #[test]
    fn identity_is_form_round_trip() {
        let g = amb("z^2 + w^3 - i wb zb");
        let rt = g.to_h_coords().unwrap().to_ambient().unwrap();
        assert_eq!(move_knot(&g, &RigidMotionH::identity()).unwrap(), rt);
    }

    #[test]
    fn quarter_turn_about_u_axis() {
        let m = RigidMotionH::axis_rotation(2, 0, 1, 1).unwrap();
        assert_eq!(move_knot(&amb("z"), &m).unwrap(), amb("-i z"));
    }

    #[test]
    fn non_orthogonal_rejected() {
        assert_eq!(RigidMotionH::axis_rotation(0, 1, 1, 1), Err(TransferError::NonOrthogonal));
        let mut r = identity3();
        r[0][1] = rat(1, 2);
        assert!(RigidMotionH::new(r, GaussianRational::zero(), BigRational::zero()).is_err());
    }

    #[test]
    fn composition_matches_sequential_application() {
        let a = RigidMotionH::axis_rotation(0, 3, 4, 5).unwrap();
        let b = RigidMotionH::translation(GaussianRational::from_ints(1, -2), rat(1, 3));
        let ab = a.then(&b);
        let x = PointC2::new(Complex64::new(0.3, 0.4), Complex64::new(-0.7, 0.25));
        let lhs = ab.apply(&x);
        let rhs = b.apply(&a.apply(&x));
        assert!(lhs.dist(&rhs) < 1e-14);
    }

    #[test]
    fn link_product_cases() {
        assert_eq!(link_product(&[]), Err(TransferError::EmptyLink));
        assert_eq!(link_product(&[amb("z")]).unwrap(), amb("z"));
        assert_eq!(link_product(&[amb("z"), amb("w - i")]).unwrap(), amb("z w - i z"));
    }
}
