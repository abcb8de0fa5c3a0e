//! The generalized Heisenberg group `H(w) = (A x E) ⋊ F` over a pairing
//! space, with `A = R` carried in the space's scalar mode.
//!
//! Elements are triples `(a, x, f)`; the product is
//! `(a1 + a2 + f1(x2), x1 + x2, f1 + f2)` where `f(x)` is the pairing
//! `w(x, f)` evaluated as pairing(vector, covector) — the argument order is
//! fixed here once and used everywhere. All operations are pure; in exact
//! mode no rounding ever occurs.

use rand::Rng;
use serde::Serialize;

use crate::error::{HeisError, Result};
use crate::scalar::{Scalar, ScalarMode};
use crate::spaces::{Covector, PairingKind, PairingSpace, Vector};
use crate::seed;

/// Group element `(a, x, f)`: center coordinate, vector part, covector part.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupElement {
    pub a: Scalar,
    pub x: Vector,
    pub f: Covector,
}

impl GroupElement {
    /// Max of the float images of all coordinates; used for rough bounds.
    pub fn sup_coord(&self) -> f64 {
        self.x
            .coords()
            .iter()
            .chain(self.f.coords())
            .chain(std::iter::once(&self.a))
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

/// `H(w)` for the pairing `w` supplied by a [`PairingSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct HeisenbergGroup {
    space: PairingSpace,
}

impl HeisenbergGroup {
    pub fn new(space: PairingSpace) -> Self {
        HeisenbergGroup { space }
    }

    pub fn space(&self) -> &PairingSpace {
        &self.space
    }

    /// The neutral element `(0, 0_E, 0_F)`.
    pub fn identity(&self) -> GroupElement {
        GroupElement {
            a: Scalar::zero(self.space.mode),
            x: self.space.zero_vector(),
            f: self.space.zero_covector(),
        }
    }

    /// Validated construction from parts.
    pub fn element(&self, a: Scalar, x: Vector, f: Covector) -> Result<GroupElement> {
        if a.mode() != self.space.mode {
            return Err(HeisError::ModeMismatch(format!(
                "center coordinate is {} but the space is {}",
                a.mode(),
                self.space.mode
            )));
        }
        let x = self.space.vector(x.0)?;
        let f = self.space.covector(f.0)?;
        Ok(GroupElement { a, x, f })
    }

    /// Exact-mode convenience: integer center plus integer coordinates.
    pub fn element_from_ints(&self, a: i64, x: &[i64], f: &[i64]) -> Result<GroupElement> {
        self.element(
            Scalar::from_int(a, self.space.mode),
            self.space.vector_from_ints(x)?,
            self.space.covector_from_ints(f)?,
        )
    }

    pub fn validate(&self, u: &GroupElement) -> Result<()> {
        self.element(u.a.clone(), u.x.clone(), u.f.clone()).map(|_| ())
    }

    fn check(&self, u: &GroupElement) -> Result<()> {
        if u.x.len() != self.space.dim || u.f.len() != self.space.dim {
            return Err(HeisError::DimensionMismatch {
                expected: self.space.dim,
                got: u.x.len().max(u.f.len()),
            });
        }
        Ok(())
    }

    /// Group law: `(a1 + a2 + f1(x2), x1 + x2, f1 + f2)`.
    pub fn multiply(&self, u: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
        self.check(u)?;
        self.check(v)?;
        let twist = self.space.pair(&v.x, &u.f)?;
        Ok(GroupElement {
            a: &(&u.a + &v.a) + &twist,
            x: u.x.add(&v.x),
            f: u.f.add(&v.f),
        })
    }

    /// `u^{-1} = (-a + f(x), -x, -f)`.
    pub fn inverse(&self, u: &GroupElement) -> Result<GroupElement> {
        self.check(u)?;
        let twist = self.space.pair(&u.x, &u.f)?;
        Ok(GroupElement {
            a: &-&u.a + &twist,
            x: u.x.neg(),
            f: u.f.neg(),
        })
    }

    /// Commutator `[u, v] = u v u^{-1} v^{-1}`, computed by composition.
    ///
    /// The closed form `(f_u(x_v) - f_v(x_u), 0, 0)` is available separately
    /// as [`commutator_closed_form`](Self::commutator_closed_form) and is
    /// checked against this composition in the test suite.
    pub fn commutator(&self, u: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
        let uv = self.multiply(u, v)?;
        let u_inv = self.inverse(u)?;
        let v_inv = self.inverse(v)?;
        self.multiply(&self.multiply(&uv, &u_inv)?, &v_inv)
    }

    /// `(w(x_v, f_u) - w(x_u, f_v), 0_E, 0_F)`.
    pub fn commutator_closed_form(&self, u: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
        self.check(u)?;
        self.check(v)?;
        let a = &self.space.pair(&v.x, &u.f)? - &self.space.pair(&u.x, &v.f)?;
        Ok(GroupElement { a, x: self.space.zero_vector(), f: self.space.zero_covector() })
    }

    /// `u^n` in closed form: `(n a + n(n-1)/2 f(x), n x, n f)` for `n >= 0`,
    /// and the inverse path for negative `n`.
    pub fn power(&self, u: &GroupElement, n: i64) -> Result<GroupElement> {
        if n < 0 {
            return self.power(&self.inverse(u)?, -n);
        }
        self.check(u)?;
        let mode = self.space.mode;
        let n_scalar = Scalar::from_int(n, mode);
        let binom = (n as i128) * (n as i128 - 1) / 2;
        let binom_scalar = match mode {
            ScalarMode::Exact => Scalar::Exact(num::BigRational::from_integer(num::BigInt::from(binom))),
            ScalarMode::Float => Scalar::Float(binom as f64),
        };
        let twist = self.space.pair(&u.x, &u.f)?;
        Ok(GroupElement {
            a: &(&n_scalar * &u.a) + &(&binom_scalar * &twist),
            x: u.x.scale(&n_scalar),
            f: u.f.scale(&n_scalar),
        })
    }

    /// `u^n` by `|n|`-fold multiplication; kept as an independent oracle for
    /// the closed form.
    pub fn power_naive(&self, u: &GroupElement, n: i64) -> Result<GroupElement> {
        if n < 0 {
            return self.power_naive(&self.inverse(u)?, -n);
        }
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.multiply(&acc, u)?;
        }
        Ok(acc)
    }

    /// Whether `u` commutes with everything.
    ///
    /// For the canonical (nondegenerate) pairing this is decided
    /// structurally: `u` is central iff `x = 0` and `f = 0`. For the
    /// degenerate zero pairing the structural criterion does not apply and
    /// the check falls back to `trials` seeded random commutators.
    pub fn is_central(&self, u: &GroupElement, trials: usize, seed_value: u64) -> Result<bool> {
        self.check(u)?;
        if self.space.kind == PairingKind::Canonical {
            return Ok(u.x.is_zero() && u.f.is_zero());
        }
        let mut rng = seed::rng(seed_value, "is-central", 0);
        for _ in 0..trials.max(1) {
            let v = self.random_element(&mut rng, 1.0);
            let c = self.commutator(u, &v)?;
            let is_identity = match self.space.mode {
                ScalarMode::Exact => c == self.identity(),
                ScalarMode::Float => self.approx_eq(&c, &self.identity(), 1e-9),
            };
            if !is_identity {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Upper unitriangular matrix model, defined when the pairing is the
    /// plain dot product (canonical pairing, weight 1): top row
    /// `(1, f_1..f_n, a)`, middle block `(0, I_n, x)`, bottom row
    /// `(0, ..., 0, 1)`.
    pub fn matrix_rep(&self, u: &GroupElement) -> Result<SquareMatrix> {
        self.check(u)?;
        if self.space.kind != PairingKind::Canonical
            || self.space.weight != Scalar::one(self.space.mode)
        {
            return Err(HeisError::UnsupportedRepresentation(
                "matrix model needs the plain dot-product pairing (canonical, weight 1)".into(),
            ));
        }
        let n = self.space.dim;
        let mut m = SquareMatrix::identity(n + 2, self.space.mode);
        for (j, c) in u.f.coords().iter().enumerate() {
            m.set(0, j + 1, c.clone());
        }
        m.set(0, n + 1, u.a.clone());
        for (i, c) in u.x.coords().iter().enumerate() {
            m.set(i + 1, n + 1, c.clone());
        }
        Ok(m)
    }

    /// Seeded random element with coordinates on the order of `scale`.
    pub fn random_element<R: Rng>(&self, rng: &mut R, scale: f64) -> GroupElement {
        let a = match self.space.mode {
            ScalarMode::Exact => {
                let bound = (100.0 * scale).max(1.0) as i64;
                Scalar::from_ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=10))
            }
            ScalarMode::Float => Scalar::Float(rng.gen_range(-scale..=scale)),
        };
        GroupElement {
            a,
            x: self.space.random_vector(rng, scale),
            f: self.space.random_covector(rng, scale),
        }
    }

    pub fn is_identity(&self, u: &GroupElement) -> bool {
        u.a.is_zero() && u.x.is_zero() && u.f.is_zero()
    }

    /// Coordinatewise comparison with absolute tolerance (float mode).
    pub fn approx_eq(&self, u: &GroupElement, v: &GroupElement, tol: f64) -> bool {
        u.a.approx_eq(&v.a, tol)
            && u.x.coords().iter().zip(v.x.coords()).all(|(a, b)| a.approx_eq(b, tol))
            && u.f.coords().iter().zip(v.f.coords()).all(|(a, b)| a.approx_eq(b, tol))
    }
}

/// Dense square matrix over [`Scalar`], just big enough for the unitriangular
/// model: exact multiplication and equality.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn identity(n: usize, mode: ScalarMode) -> Self {
        let mut data = vec![Scalar::zero(mode); n * n];
        for i in 0..n {
            data[i * n + i] = Scalar::one(mode);
        }
        SquareMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.n + j] = value;
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.n != other.n {
            return Err(HeisError::DimensionMismatch { expected: self.n, got: other.n });
        }
        let n = self.n;
        let mode = self.data[0].mode();
        let mut out = vec![Scalar::zero(mode); n * n];
        for i in 0..n {
            for k in 0..n {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = &out[i * n + j] + &(lhs * other.get(k, j));
                }
            }
        }
        Ok(SquareMatrix { n, data: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;

    fn h_q1() -> HeisenbergGroup {
        HeisenbergGroup::new(PairingSpace::lp(1, 2.0, ScalarMode::Exact).unwrap())
    }

    fn h_qd(d: usize) -> HeisenbergGroup {
        HeisenbergGroup::new(PairingSpace::lp(d, 2.0, ScalarMode::Exact).unwrap())
    }

    #[test]
    fn product_follows_the_group_law() {
        let g = h_q1();
        let u = g.element_from_ints(0, &[2], &[3]).unwrap();
        let v = g.element_from_ints(0, &[5], &[0]).unwrap();
        let uv = g.multiply(&u, &v).unwrap();
        assert_eq!(uv, g.element_from_ints(15, &[7], &[3]).unwrap());
    }

    #[test]
    fn product_in_dimension_two() {
        let g = h_qd(2);
        let u = g.element_from_ints(1, &[1, 0], &[0, 1]).unwrap();
        let v = g.element_from_ints(1, &[0, 1], &[1, 0]).unwrap();
        let uv = g.multiply(&u, &v).unwrap();
        assert_eq!(uv, g.element_from_ints(3, &[1, 1], &[1, 1]).unwrap());
    }

    #[test]
    fn identity_is_neutral() {
        let g = h_qd(3);
        let mut rng = seed::rng(5, "identity", 0);
        for _ in 0..100 {
            let u = g.random_element(&mut rng, 1.0);
            assert_eq!(g.multiply(&u, &g.identity()).unwrap(), u);
            assert_eq!(g.multiply(&g.identity(), &u).unwrap(), u);
        }
    }

    #[test]
    fn inverse_in_h_q1() {
        let g = h_q1();
        assert_eq!(g.inverse(&g.identity()).unwrap(), g.identity());
        let u = g.element_from_ints(0, &[2], &[3]).unwrap();
        let inv = g.inverse(&u).unwrap();
        assert_eq!(inv, g.element_from_ints(6, &[-2], &[-3]).unwrap());
        // Oracle: the defining property, via multiplication.
        assert_eq!(g.multiply(&u, &inv).unwrap(), g.identity());
        assert_eq!(g.multiply(&inv, &u).unwrap(), g.identity());
    }

    #[test]
    fn inverse_is_an_involution() {
        let g = h_qd(4);
        let mut rng = seed::rng(17, "involution", 0);
        for _ in 0..100 {
            let u = g.random_element(&mut rng, 1.0);
            let inv = g.inverse(&u).unwrap();
            assert_eq!(g.multiply(&u, &inv).unwrap(), g.identity());
            assert_eq!(g.inverse(&inv).unwrap(), u);
        }
    }

    #[test]
    fn associativity_holds_exactly() {
        let g = h_qd(3);
        let mut rng = seed::rng(29, "assoc", 0);
        for _ in 0..200 {
            let u = g.random_element(&mut rng, 1.0);
            let v = g.random_element(&mut rng, 1.0);
            let w = g.random_element(&mut rng, 1.0);
            let left = g.multiply(&g.multiply(&u, &v).unwrap(), &w).unwrap();
            let right = g.multiply(&u, &g.multiply(&v, &w).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn commutator_of_basis_elements() {
        let g = h_q1();
        let u = g.element_from_ints(0, &[0], &[1]).unwrap();
        let v = g.element_from_ints(0, &[1], &[0]).unwrap();
        let c = g.commutator(&u, &v).unwrap();
        assert_eq!(c, g.element_from_ints(1, &[0], &[0]).unwrap());
    }

    #[test]
    fn commutator_with_self_is_identity() {
        let g = h_qd(2);
        let u = g.element_from_ints(3, &[1, 4], &[2, -1]).unwrap();
        assert_eq!(g.commutator(&u, &u).unwrap(), g.identity());
    }

    #[test]
    fn commutator_matches_closed_form_and_is_antisymmetric() {
        let g = h_qd(3);
        let mut rng = seed::rng(31, "comm", 0);
        for _ in 0..200 {
            let u = g.random_element(&mut rng, 1.0);
            let v = g.random_element(&mut rng, 1.0);
            let composed = g.commutator(&u, &v).unwrap();
            assert_eq!(composed, g.commutator_closed_form(&u, &v).unwrap());
            let swapped = g.commutator(&v, &u).unwrap();
            assert_eq!(g.multiply(&composed, &swapped).unwrap(), g.identity());
        }
    }

    #[test]
    fn two_step_nilpotency() {
        let g = h_qd(3);
        let mut rng = seed::rng(37, "nilpotent", 0);
        for _ in 0..100 {
            let u = g.random_element(&mut rng, 1.0);
            let v = g.random_element(&mut rng, 1.0);
            let t = g.random_element(&mut rng, 1.0);
            let inner = g.commutator(&u, &v).unwrap();
            assert_eq!(g.commutator(&inner, &t).unwrap(), g.identity());
        }
    }

    #[test]
    fn power_closed_form_examples() {
        let g = h_q1();
        let u = g.element_from_ints(1, &[2], &[3]).unwrap();
        assert_eq!(g.power(&u, 0).unwrap(), g.identity());
        assert_eq!(g.power(&u, 1).unwrap(), u);
        let cubed = g.power(&u, 3).unwrap();
        assert_eq!(cubed, g.element_from_ints(21, &[6], &[9]).unwrap());
        assert_eq!(cubed, g.power_naive(&u, 3).unwrap());
    }

    #[test]
    fn power_center_accumulates_binomially() {
        let g = h_q1();
        let u = g.element_from_ints(0, &[1], &[1]).unwrap();
        for n in 2..=10i64 {
            let p = g.power(&u, n).unwrap();
            let expected = Scalar::from_int(n * (n - 1) / 2, ScalarMode::Exact);
            assert_eq!(p.a, expected);
            assert_eq!(p, g.power_naive(&u, n).unwrap());
        }
    }

    #[test]
    fn power_matches_repeated_multiplication_up_to_64() {
        let g = h_qd(2);
        let mut rng = seed::rng(41, "power", 0);
        for trial in 0..10 {
            let u = g.random_element(&mut rng, 1.0);
            for n in [0i64, 1, 2, 3, 7, 16, 33, 64] {
                assert_eq!(
                    g.power(&u, n).unwrap(),
                    g.power_naive(&u, n).unwrap(),
                    "trial {trial}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn negative_powers_invert() {
        let g = h_qd(2);
        let mut rng = seed::rng(43, "neg-power", 0);
        let u = g.random_element(&mut rng, 1.0);
        for n in 1..=8i64 {
            let prod = g.multiply(&g.power(&u, n).unwrap(), &g.power(&u, -n).unwrap()).unwrap();
            assert_eq!(prod, g.identity());
        }
    }

    #[test]
    fn centrality_is_structural_for_the_canonical_pairing() {
        let g = h_q1();
        assert!(g.is_central(&g.element_from_ints(5, &[0], &[0]).unwrap(), 10, 1).unwrap());
        assert!(g.is_central(&g.identity(), 10, 1).unwrap());
        let off_center = g.element_from_ints(0, &[1], &[0]).unwrap();
        assert!(!g.is_central(&off_center, 10, 1).unwrap());
        // Witness: commuting against (0, 0, e_1) leaves (-1, 0, 0).
        let v = g.element_from_ints(0, &[0], &[1]).unwrap();
        let c = g.commutator(&off_center, &v).unwrap();
        assert_eq!(c, g.element_from_ints(-1, &[0], &[0]).unwrap());
    }

    #[test]
    fn zero_pairing_makes_everything_central() {
        let space = PairingSpace::lp(2, 2.0, ScalarMode::Exact).unwrap().with_zero_pairing();
        let g = HeisenbergGroup::new(space);
        let u = g.element_from_ints(1, &[3, -2], &[5, 7]).unwrap();
        assert!(g.is_central(&u, 50, 9).unwrap());
    }

    #[test]
    fn matrix_rep_reproduces_the_three_by_three_model() {
        // (c, (b), (a)) -> [[1, a, c], [0, 1, b], [0, 0, 1]]
        let g = h_q1();
        let (a, b, c) = (7i64, -3i64, 2i64);
        let u = g.element_from_ints(c, &[b], &[a]).unwrap();
        let m = g.matrix_rep(&u).unwrap();
        let s = |v: i64| Scalar::from_int(v, ScalarMode::Exact);
        assert_eq!(m.size(), 3);
        let expected = [
            [s(1), s(a), s(c)],
            [s(0), s(1), s(b)],
            [s(0), s(0), s(1)],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                assert_eq!(m.get(i, j), e, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn matrix_rep_of_identity_is_the_identity_matrix() {
        let g = h_qd(3);
        assert_eq!(
            g.matrix_rep(&g.identity()).unwrap(),
            SquareMatrix::identity(5, ScalarMode::Exact)
        );
    }

    #[test]
    fn matrix_rep_is_a_homomorphism_exactly() {
        let g = h_qd(4);
        let mut rng = seed::rng(47, "matrix-hom", 0);
        for _ in 0..100 {
            let u = g.random_element(&mut rng, 1.0);
            let v = g.random_element(&mut rng, 1.0);
            let lhs = g.matrix_rep(&g.multiply(&u, &v).unwrap()).unwrap();
            let rhs = g.matrix_rep(&u).unwrap().mul(&g.matrix_rep(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn matrix_rep_is_injective_on_samples() {
        let g = h_qd(2);
        let mut rng = seed::rng(53, "matrix-inj", 0);
        for _ in 0..100 {
            let u = g.random_element(&mut rng, 1.0);
            let v = g.random_element(&mut rng, 1.0);
            if u != v {
                assert_ne!(g.matrix_rep(&u).unwrap(), g.matrix_rep(&v).unwrap());
            }
        }
    }

    #[test]
    fn matrix_rep_rejects_weighted_pairings() {
        let space = PairingSpace::step_lp(4, 2.0, ScalarMode::Exact).unwrap();
        let g = HeisenbergGroup::new(space);
        let u = g.identity();
        assert!(matches!(
            g.matrix_rep(&u),
            Err(HeisError::UnsupportedRepresentation(_))
        ));
    }

    #[test]
    fn elements_of_the_wrong_shape_are_rejected() {
        let g1 = h_q1();
        let g2 = h_qd(2);
        let u = g2.element_from_ints(0, &[1, 2], &[3, 4]).unwrap();
        assert!(matches!(
            g1.multiply(&u, &g1.identity()),
            Err(HeisError::DimensionMismatch { .. })
        ));
    }
}
