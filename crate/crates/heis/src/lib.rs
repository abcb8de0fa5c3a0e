//! Generalized Heisenberg groups over finite-dimensional normed models,
//! together with the numerical machinery used to probe them: iterated
//! double-limit estimation, double-limit-property checks, Schoenberg-type
//! positive-definiteness tests, and the separating-function experiments.
//!
//! The crate is split along the same lines as the experiments it backs:
//!
//! * [`scalar`] / [`spaces`] — exact-rational or float arithmetic, `l_p`
//!   and step-function models with their dual pairings and norms;
//! * [`group`] — the group `(R x E) ⋊ F` itself, with the unitriangular
//!   matrix model for dot-product pairings;
//! * [`dlp`] — bounded double sequences, iterated limits, subsequence
//!   extraction, and the PASS / FAIL / INCONCLUSIVE double-limit verdicts;
//! * [`kernels`] — Gram matrices of `exp(-||x - y||_p^p)` and their minimum
//!   eigenvalues, plus a counterexample search for `p > 2`;
//! * [`witness`] — power blow-up, commutator surjectivity onto the center,
//!   and the separating function `phi` with its case-split experiments;
//! * [`report`] — the shared JSON report schema; [`seed`] — deterministic
//!   seed derivation.
//!
//! Everything is deterministic given a root seed: identical parameters
//! reproduce identical verdicts and witnesses.

pub mod dlp;
pub mod error;
pub mod group;
pub mod kernels;
pub mod report;
pub mod scalar;
pub mod seed;
pub mod spaces;
pub mod witness;

pub use error::{HeisError, Result};
pub use group::{GroupElement, HeisenbergGroup, SquareMatrix};
pub use scalar::{Scalar, ScalarMode};
pub use spaces::{Covector, PExponent, PairingKind, PairingSpace, StepFunction, Vector};
