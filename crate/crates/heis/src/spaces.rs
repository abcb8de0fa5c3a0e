//! Finite-dimensional models of the normed spaces the group constructions
//! live over: coordinate `l_p` spaces, dyadic step-function discretizations
//! of `L_p[0,1]`, and a sup-norm model of finitely supported sequences.
//!
//! A [`PairingSpace`] bundles a dimension, a norm exponent `p` for vectors
//! (covectors get the Hoelder dual `q`), a uniform quadrature weight per
//! coordinate, and the arithmetic mode. The pairing is the weighted dot
//! product `<x, f> = sum_i x_i f_i * weight`, which is the canonical
//! evaluation of a covector on a vector; a degenerate variant with the zero
//! pairing is allowed for the group-theoretic edge cases.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{HeisError, Result};
use crate::scalar::{Scalar, ScalarMode};

/// Norm exponent: a finite `p >= 1` or the sup norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PExponent {
    Finite(f64),
    Sup,
}

impl PExponent {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            PExponent::Finite(p) => Some(*p),
            PExponent::Sup => None,
        }
    }

    /// Even integer exponents admit exact rational norm powers.
    fn as_even_integer(&self) -> Option<u32> {
        match self {
            PExponent::Finite(p) if p.fract() == 0.0 && *p >= 2.0 && (*p as u64) % 2 == 0 => {
                Some(*p as u32)
            }
            _ => None,
        }
    }
}

/// The bilinear form of the space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairingKind {
    /// Weighted dot product (nondegenerate).
    Canonical,
    /// Identically zero pairing (degenerate; permitted for edge cases).
    Zero,
}

/// Element of the vector side `E` of a pairing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vector(pub Vec<Scalar>);

/// Element of the covector side `F` of a pairing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Covector(pub Vec<Scalar>);

macro_rules! coord_impls {
    ($t:ident) => {
        impl $t {
            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn coords(&self) -> &[Scalar] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Scalar::is_zero)
            }

            pub fn to_f64(&self) -> Vec<f64> {
                self.0.iter().map(Scalar::to_f64).collect()
            }

            pub(crate) fn add(&self, other: &$t) -> $t {
                $t(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            pub(crate) fn neg(&self) -> $t {
                $t(self.0.iter().map(|a| -a).collect())
            }

            pub(crate) fn scale(&self, c: &Scalar) -> $t {
                $t(self.0.iter().map(|a| a * c).collect())
            }
        }
    };
}

coord_impls!(Vector);
coord_impls!(Covector);

/// A finite-dimensional dual pairing `(E, F, w)` with its norms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairingSpace {
    pub dim: usize,
    pub p: PExponent,
    /// Uniform quadrature weight per coordinate: 1 for `l_p^n`, `1/dim` for
    /// step functions on the dyadic grid of `[0,1]`.
    pub weight: Scalar,
    pub mode: ScalarMode,
    pub kind: PairingKind,
}

impl PairingSpace {
    /// Coordinate space `l_p^dim` (weight 1).
    pub fn lp(dim: usize, p: f64, mode: ScalarMode) -> Result<Self> {
        if dim == 0 {
            return Err(HeisError::InvalidParameter("dimension must be positive".into()));
        }
        if !(p >= 1.0) || !p.is_finite() {
            return Err(HeisError::InvalidParameter(format!("p must be in [1, inf), got {p}")));
        }
        Ok(PairingSpace {
            dim,
            p: PExponent::Finite(p),
            weight: Scalar::one(mode),
            mode,
            kind: PairingKind::Canonical,
        })
    }

    /// Step functions on `cells` dyadic subintervals of `[0,1]` with the
    /// `L_p` quadrature norm (weight `1/cells`).
    pub fn step_lp(cells: usize, p: f64, mode: ScalarMode) -> Result<Self> {
        let mut space = Self::lp(cells, p, mode)?;
        space.weight = match mode {
            ScalarMode::Exact => Scalar::from_ratio(1, cells as i64),
            ScalarMode::Float => Scalar::Float(1.0 / cells as f64),
        };
        Ok(space)
    }

    /// Finitely supported sequences under the sup norm, truncated at `dim`
    /// coordinates.
    pub fn c0(dim: usize, mode: ScalarMode) -> Result<Self> {
        if dim == 0 {
            return Err(HeisError::InvalidParameter("dimension must be positive".into()));
        }
        Ok(PairingSpace {
            dim,
            p: PExponent::Sup,
            weight: Scalar::one(mode),
            mode,
            kind: PairingKind::Canonical,
        })
    }

    /// Same space with the identically zero pairing.
    pub fn with_zero_pairing(mut self) -> Self {
        self.kind = PairingKind::Zero;
        self
    }

    /// Hoelder conjugate used for covector norms: `1/p + 1/q = 1`.
    pub fn dual_exponent(&self) -> PExponent {
        match self.p {
            PExponent::Sup => PExponent::Finite(1.0),
            PExponent::Finite(p) if p == 1.0 => PExponent::Sup,
            PExponent::Finite(p) => PExponent::Finite(p / (p - 1.0)),
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim {
            return Err(HeisError::DimensionMismatch { expected: self.dim, got: len });
        }
        Ok(())
    }

    fn check_coords(&self, coords: &[Scalar]) -> Result<()> {
        self.check_len(coords.len())?;
        if let Some(bad) = coords.iter().find(|c| c.mode() != self.mode) {
            return Err(HeisError::ModeMismatch(format!(
                "space is {} but coordinate {bad} is {}",
                self.mode,
                bad.mode()
            )));
        }
        Ok(())
    }

    pub fn vector(&self, coords: Vec<Scalar>) -> Result<Vector> {
        self.check_coords(&coords)?;
        Ok(Vector(coords))
    }

    pub fn covector(&self, coords: Vec<Scalar>) -> Result<Covector> {
        self.check_coords(&coords)?;
        Ok(Covector(coords))
    }

    pub fn vector_from_f64(&self, coords: &[f64]) -> Result<Vector> {
        self.vector(coords.iter().map(|&x| Scalar::Float(x)).collect())
    }

    pub fn covector_from_f64(&self, coords: &[f64]) -> Result<Covector> {
        self.covector(coords.iter().map(|&x| Scalar::Float(x)).collect())
    }

    pub fn vector_from_ints(&self, coords: &[i64]) -> Result<Vector> {
        self.vector(coords.iter().map(|&x| Scalar::from_int(x, self.mode)).collect())
    }

    pub fn covector_from_ints(&self, coords: &[i64]) -> Result<Covector> {
        self.covector(coords.iter().map(|&x| Scalar::from_int(x, self.mode)).collect())
    }

    pub fn zero_vector(&self) -> Vector {
        Vector(vec![Scalar::zero(self.mode); self.dim])
    }

    pub fn zero_covector(&self) -> Covector {
        Covector(vec![Scalar::zero(self.mode); self.dim])
    }

    /// `i`-th standard basis vector (0-based).
    pub fn basis_vector(&self, i: usize) -> Result<Vector> {
        if i >= self.dim {
            return Err(HeisError::DimensionMismatch { expected: self.dim, got: i + 1 });
        }
        let mut coords = vec![Scalar::zero(self.mode); self.dim];
        coords[i] = Scalar::one(self.mode);
        Ok(Vector(coords))
    }

    fn weighted_norm(&self, coords: &[Scalar], exponent: PExponent) -> f64 {
        match exponent {
            PExponent::Sup => coords.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max),
            PExponent::Finite(p) => {
                let sum: f64 = coords.iter().map(|c| c.to_f64().abs().powf(p)).sum();
                (sum * self.weight.to_f64()).powf(1.0 / p)
            }
        }
    }

    /// Weighted `p`-norm of a vector.
    pub fn norm(&self, v: &Vector) -> Result<f64> {
        self.check_len(v.len())?;
        Ok(self.weighted_norm(v.coords(), self.p))
    }

    /// Weighted `q`-norm of a covector (Hoelder dual exponent).
    pub fn norm_dual(&self, f: &Covector) -> Result<f64> {
        self.check_len(f.len())?;
        Ok(self.weighted_norm(f.coords(), self.dual_exponent()))
    }

    /// Exact `p`-th power of the vector norm, available in exact mode for
    /// even integer `p`: `sum_i c_i^p * weight` as a rational.
    pub fn norm_pow_p(&self, v: &Vector) -> Result<Option<Scalar>> {
        self.check_len(v.len())?;
        Ok(self.exact_norm_pow(v.coords(), self.p))
    }

    /// Exact `q`-th power of the covector norm when `q` is an even integer.
    pub fn norm_dual_pow_q(&self, f: &Covector) -> Result<Option<Scalar>> {
        self.check_len(f.len())?;
        Ok(self.exact_norm_pow(f.coords(), self.dual_exponent()))
    }

    fn exact_norm_pow(&self, coords: &[Scalar], exponent: PExponent) -> Option<Scalar> {
        if self.mode != ScalarMode::Exact {
            return None;
        }
        let p = exponent.as_even_integer()?;
        let mut sum = Scalar::zero(ScalarMode::Exact);
        for c in coords {
            sum = &sum + &c.powi(p);
        }
        Some(&sum * &self.weight)
    }

    /// Evaluation of the pairing `w(x, f)`; exact in rational mode.
    pub fn pair(&self, x: &Vector, f: &Covector) -> Result<Scalar> {
        self.check_len(x.len())?;
        self.check_len(f.len())?;
        if self.kind == PairingKind::Zero {
            return Ok(Scalar::zero(self.mode));
        }
        let mut sum = Scalar::zero(self.mode);
        for (a, b) in x.coords().iter().zip(f.coords()) {
            sum = &sum + &(a * b);
        }
        Ok(&sum * &self.weight)
    }

    pub fn pair_f64(&self, x: &Vector, f: &Covector) -> Result<f64> {
        Ok(self.pair(x, f)?.to_f64())
    }

    /// Unit covector `f` with `f(x) = ||x||`: coordinates
    /// `sign(x_i) |x_i|^(p-1) / ||x||^(p-1)`. Float mode only; `p` is kept
    /// inside `[6/5, 6]` because the dual exponent blows up near `p = 1`.
    pub fn norming_functional(&self, x: &Vector) -> Result<Covector> {
        if self.mode != ScalarMode::Float {
            return Err(HeisError::UnsupportedRepresentation(
                "norming functionals are computed in float mode".into(),
            ));
        }
        let p = match self.p {
            PExponent::Finite(p) if (1.2..=6.0).contains(&p) => p,
            PExponent::Finite(p) => {
                return Err(HeisError::InvalidParameter(format!(
                    "norming functional needs p in [6/5, 6] for conditioning, got {p}"
                )))
            }
            PExponent::Sup => {
                return Err(HeisError::UnsupportedRepresentation(
                    "norming functional is not defined for the sup-norm model".into(),
                ))
            }
        };
        let norm = self.norm(x)?;
        if norm == 0.0 {
            return Err(HeisError::Domain("norming functional of the zero vector".into()));
        }
        let coords = x
            .coords()
            .iter()
            .map(|c| {
                let v = c.to_f64();
                Scalar::Float(v.signum() * (v.abs() / norm).powf(p - 1.0))
            })
            .collect();
        Ok(Covector(coords))
    }

    /// The same space on a grid refined by `factor`.
    pub fn refine(&self, factor: usize) -> Result<PairingSpace> {
        if factor == 0 {
            return Err(HeisError::InvalidParameter("refinement factor must be positive".into()));
        }
        let weight = match (&self.weight, self.mode) {
            (Scalar::Exact(w), ScalarMode::Exact) => {
                Scalar::Exact(w / num::BigRational::from_integer(num::BigInt::from(factor)))
            }
            (Scalar::Float(w), _) => Scalar::Float(w / factor as f64),
            _ => unreachable!("weight mode always matches space mode"),
        };
        Ok(PairingSpace { dim: self.dim * factor, weight, ..self.clone() })
    }

    /// Random vector with coordinates bounded by `scale`: rationals with
    /// numerators up to `100 * scale` over denominators up to 10 in exact
    /// mode, uniform reals in float mode.
    pub fn random_vector<R: Rng>(&self, rng: &mut R, scale: f64) -> Vector {
        Vector(self.random_coords(rng, scale))
    }

    pub fn random_covector<R: Rng>(&self, rng: &mut R, scale: f64) -> Covector {
        Covector(self.random_coords(rng, scale))
    }

    fn random_coords<R: Rng>(&self, rng: &mut R, scale: f64) -> Vec<Scalar> {
        (0..self.dim)
            .map(|_| match self.mode {
                ScalarMode::Exact => {
                    let bound = (100.0 * scale).max(1.0) as i64;
                    Scalar::from_ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=10))
                }
                ScalarMode::Float => Scalar::Float(rng.gen_range(-scale..=scale)),
            })
            .collect()
    }
}

/// Piecewise-constant function on a dyadic partition of `[0,1]`, carried as
/// its cell coefficients together with the owning step space.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    space: PairingSpace,
    coeffs: Vector,
}

impl StepFunction {
    pub fn new(space: &PairingSpace, coeffs: Vector) -> Result<Self> {
        space.check_coords(coeffs.coords())?;
        Ok(StepFunction { space: space.clone(), coeffs })
    }

    pub fn space(&self) -> &PairingSpace {
        &self.space
    }

    pub fn coeffs(&self) -> &Vector {
        &self.coeffs
    }

    pub fn norm(&self) -> f64 {
        self.space.norm(&self.coeffs).expect("coeffs validated at construction")
    }

    /// Exact `p`-th norm power when the space supports it.
    pub fn norm_pow_p(&self) -> Option<Scalar> {
        self.space.norm_pow_p(&self.coeffs).expect("coeffs validated at construction")
    }

    /// Re-express the same function on a grid `factor` times finer by
    /// duplicating each cell coefficient. Norms and pairings are unchanged,
    /// exactly so in rational mode.
    pub fn refine(&self, factor: usize) -> Result<StepFunction> {
        let space = self.space.refine(factor)?;
        let mut coords = Vec::with_capacity(self.coeffs.len() * factor);
        for c in self.coeffs.coords() {
            for _ in 0..factor {
                coords.push(c.clone());
            }
        }
        Ok(StepFunction { space, coeffs: Vector(coords) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;
    use proptest::prelude::*;

    fn l4_2() -> PairingSpace {
        PairingSpace::lp(2, 4.0, ScalarMode::Float).unwrap()
    }

    #[test]
    fn l4_norm_of_ones_is_fourth_root_of_two() {
        let space = l4_2();
        let v = space.vector_from_f64(&[1.0, 1.0]).unwrap();
        let expected = 2f64.powf(0.25);
        assert!((space.norm(&v).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn constant_step_function_has_unit_norm() {
        let space = PairingSpace::step_lp(4, 2.0, ScalarMode::Float).unwrap();
        let v = space.vector_from_f64(&[1.0; 4]).unwrap();
        assert!((space.norm(&v).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sup_norm_doubles_on_overlapping_basis_sum() {
        // e_n + sum_{i<=m} e_i has sup norm 2 exactly when n <= m.
        let space = PairingSpace::c0(8, ScalarMode::Float).unwrap();
        for (n, m, expected) in [(3usize, 5usize, 2.0), (5, 3, 1.0)] {
            let mut coords = vec![0.0; 8];
            for c in coords.iter_mut().take(m) {
                *c = 1.0;
            }
            coords[n - 1] += 1.0;
            let v = space.vector_from_f64(&coords).unwrap();
            assert_eq!(space.norm(&v).unwrap(), expected);
        }
    }

    #[test]
    fn pairing_is_weighted_dot_product() {
        let space = PairingSpace::lp(1, 3.0, ScalarMode::Exact).unwrap();
        let x = space.vector_from_ints(&[3]).unwrap();
        let f = space.covector_from_ints(&[5]).unwrap();
        assert_eq!(space.pair(&x, &f).unwrap(), Scalar::from_int(15, ScalarMode::Exact));

        let zero = space.zero_vector();
        assert!(space.pair(&zero, &f).unwrap().is_zero());
    }

    #[test]
    fn zero_pairing_kills_everything() {
        let space = PairingSpace::lp(2, 2.0, ScalarMode::Exact).unwrap().with_zero_pairing();
        let x = space.vector_from_ints(&[4, 7]).unwrap();
        let f = space.covector_from_ints(&[1, 1]).unwrap();
        assert!(space.pair(&x, &f).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let space = l4_2();
        assert!(matches!(
            space.vector_from_f64(&[1.0, 2.0, 3.0]),
            Err(HeisError::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn mode_mismatch_is_rejected() {
        let space = PairingSpace::lp(1, 2.0, ScalarMode::Exact).unwrap();
        assert!(matches!(
            space.vector(vec![Scalar::Float(1.0)]),
            Err(HeisError::ModeMismatch(_))
        ));
    }

    #[test]
    fn norming_functional_matches_closed_form_on_l4() {
        let space = l4_2();
        let x = space.vector_from_f64(&[1.0, 1.0]).unwrap();
        let f = space.norming_functional(&x).unwrap();
        let expected = 2f64.powf(-0.75);
        for c in f.coords() {
            assert!((c.to_f64() - expected).abs() < 1e-14);
        }
        assert!((space.norm_dual(&f).unwrap() - 1.0).abs() < 1e-12);
        assert!((space.pair_f64(&x, &f).unwrap() - space.norm(&x).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn l2_norming_functional_is_the_normalized_vector() {
        let space = PairingSpace::lp(3, 2.0, ScalarMode::Float).unwrap();
        let x = space.vector_from_f64(&[3.0, 0.0, 4.0]).unwrap();
        let f = space.norming_functional(&x).unwrap();
        let expected = [0.6, 0.0, 0.8];
        for (c, e) in f.coords().iter().zip(expected) {
            assert!((c.to_f64() - e).abs() < 1e-14);
        }
    }

    #[test]
    fn norming_functional_is_scale_invariant() {
        let space = PairingSpace::lp(4, 4.0, ScalarMode::Float).unwrap();
        let mut rng = seed::rng(11, "scale-invariance", 0);
        for _ in 0..50 {
            let x = space.random_vector(&mut rng, 1.0);
            if space.norm(&x).unwrap() < 1e-6 {
                continue;
            }
            let scaled = x.scale(&Scalar::Float(rng.gen_range(0.1..50.0)));
            let f1 = space.norming_functional(&x).unwrap();
            let f2 = space.norming_functional(&scaled).unwrap();
            for (a, b) in f1.coords().iter().zip(f2.coords()) {
                assert!((a.to_f64() - b.to_f64()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn norming_functional_rejects_zero_and_bad_p() {
        let space = l4_2();
        assert!(matches!(
            space.norming_functional(&space.zero_vector()),
            Err(HeisError::Domain(_))
        ));
        let l1 = PairingSpace::lp(2, 1.0, ScalarMode::Float).unwrap();
        let x = l1.vector_from_f64(&[1.0, 2.0]).unwrap();
        assert!(matches!(l1.norming_functional(&x), Err(HeisError::InvalidParameter(_))));
    }

    #[test]
    fn duality_exactness_across_exponents() {
        // pair(x, norming_functional(x)) = ||x|| within 1e-12, seeded.
        for (i, p) in [4.0 / 3.0, 2.0, 4.0].into_iter().enumerate() {
            let space = PairingSpace::lp(8, p, ScalarMode::Float).unwrap();
            let mut rng = seed::rng(23, "duality", i as u64);
            for _ in 0..1000 {
                let x = space.random_vector(&mut rng, 10.0);
                let norm = space.norm(&x).unwrap();
                if norm < 1e-9 {
                    continue;
                }
                let f = space.norming_functional(&x).unwrap();
                assert!((space.norm_dual(&f).unwrap() - 1.0).abs() < 1e-12);
                assert!((space.pair_f64(&x, &f).unwrap() - norm).abs() < 1e-12 * norm.max(1.0));
            }
        }
    }

    #[test]
    fn dual_exponent_is_hoelder_conjugate() {
        for p in [1.2, 4.0 / 3.0, 2.0, 3.0, 4.0, 6.0] {
            let space = PairingSpace::lp(2, p, ScalarMode::Float).unwrap();
            let q = space.dual_exponent().as_f64().unwrap();
            assert!((1.0 / p + 1.0 / q - 1.0).abs() < 1e-15);
        }
        assert_eq!(
            PairingSpace::lp(2, 1.0, ScalarMode::Float).unwrap().dual_exponent(),
            PExponent::Sup
        );
        assert_eq!(
            PairingSpace::c0(2, ScalarMode::Float).unwrap().dual_exponent(),
            PExponent::Finite(1.0)
        );
    }

    #[test]
    fn exact_norm_powers_for_even_p() {
        let space = PairingSpace::step_lp(4, 2.0, ScalarMode::Exact).unwrap();
        let v = space.vector_from_ints(&[1, 2, 3, 4]).unwrap();
        // (1 + 4 + 9 + 16) / 4 = 30/4
        assert_eq!(space.norm_pow_p(&v).unwrap().unwrap(), Scalar::from_ratio(30, 4));
        // Odd p has no exact power path.
        let odd = PairingSpace::lp(2, 3.0, ScalarMode::Exact).unwrap();
        let w = odd.vector_from_ints(&[1, 2]).unwrap();
        assert!(odd.norm_pow_p(&w).unwrap().is_none());
    }

    #[test]
    fn dyadic_refinement_preserves_norm_and_pair_exactly() {
        let space = PairingSpace::step_lp(4, 4.0, ScalarMode::Exact).unwrap();
        let x = StepFunction::new(&space, space.vector_from_ints(&[1, -2, 3, 5]).unwrap()).unwrap();
        let f = space.covector_from_ints(&[2, 1, -1, 3]).unwrap();

        let fine = x.refine(2).unwrap();
        assert_eq!(x.norm_pow_p().unwrap(), fine.norm_pow_p().unwrap());

        let mut fine_f_coords = Vec::new();
        for c in f.coords() {
            fine_f_coords.push(c.clone());
            fine_f_coords.push(c.clone());
        }
        let fine_f = Covector(fine_f_coords);
        assert_eq!(
            space.pair(x.coeffs(), &f).unwrap(),
            fine.space().pair(fine.coeffs(), &fine_f).unwrap()
        );
    }

    proptest! {
        #[test]
        fn norm_axioms_hold_on_samples(
            coords_a in proptest::collection::vec(-100i64..100, 4),
            coords_b in proptest::collection::vec(-100i64..100, 4),
            c in -20i64..20,
            p_idx in 0usize..3,
        ) {
            let p = [4.0 / 3.0, 2.0, 4.0][p_idx];
            let space = PairingSpace::lp(4, p, ScalarMode::Float).unwrap();
            let a = space.vector_from_f64(&coords_a.iter().map(|&x| x as f64).collect::<Vec<_>>()).unwrap();
            let b = space.vector_from_f64(&coords_b.iter().map(|&x| x as f64).collect::<Vec<_>>()).unwrap();

            let na = space.norm(&a).unwrap();
            let nb = space.norm(&b).unwrap();
            let scaled = a.scale(&Scalar::Float(c as f64));
            prop_assert!((space.norm(&scaled).unwrap() - (c as f64).abs() * na).abs() < 1e-9 * (1.0 + na));
            prop_assert!(space.norm(&a.add(&b)).unwrap() <= na + nb + 1e-9);
        }

        #[test]
        fn hoelder_inequality_on_samples(
            xs in proptest::collection::vec(-10.0f64..10.0, 8),
            fs in proptest::collection::vec(-10.0f64..10.0, 8),
            p_idx in 0usize..3,
        ) {
            let p = [4.0 / 3.0, 2.0, 4.0][p_idx];
            let space = PairingSpace::lp(8, p, ScalarMode::Float).unwrap();
            let x = space.vector_from_f64(&xs).unwrap();
            let f = space.covector_from_f64(&fs).unwrap();
            let lhs = space.pair_f64(&x, &f).unwrap().abs();
            let rhs = space.norm(&x).unwrap() * space.norm_dual(&f).unwrap();
            prop_assert!(lhs <= rhs + 1e-9 * (1.0 + rhs));
        }
    }
}
