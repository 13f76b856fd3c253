//! Exact computer algebra for the insertion-elimination Lie algebra of
//! ladder graphs.
//!
//! * [`lie`]: generators `Z[n,m]`, the bracket, grading and involution.
//! * [`standard_module`]: the module spanned by `t[k]`, its `*`-product,
//!   truncated matrices and highest-weight checks.
//! * [`classical`]: `gl+(inf)`, its embedding, Chevalley generators.
//! * [`heisenberg`] and [`fock`]: the abelian shift algebras, the
//!   Heisenberg extension, its Fock module and the Virasoro operators.
//! * [`hopf`]: the ladder Hopf algebra and the derivation `S*Y`.
//! * [`lambda`]: the multiplicative model `Lambda` of the standard module.
//!
//! All coefficients are Gaussian rationals ([`Scalar`]); nothing is
//! approximated.

pub mod classical;
pub mod combination;
pub mod error;
pub mod fock;
pub mod heisenberg;
pub mod hopf;
pub mod lambda;
pub mod lie;
pub mod linalg;
pub mod multiset;
pub mod scalar;
pub mod standard_module;

pub use combination::{BasisKey, LinComb};
pub use error::{Error, Result};
pub use lie::{bracket, bracket_basis, GenIndex, LieElement};
pub use scalar::Scalar;
