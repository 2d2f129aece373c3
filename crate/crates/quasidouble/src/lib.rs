//! Numerical models of mono-alternative Lie loops on positive definite
//! Hermitian matrices, quasi-double group/algebra decompositions, quasi-Lie
//! bialgebras with their big-bracket calculus, and the associated
//! quasi-Poisson geometry on `SH(2)`.
//!
//! The crate is organised around the polar decomposition
//! `SL(n, C) = SU(n) * SH(n)`: `SH(n)` carries a non-associative loop
//! multiplication, `SU(n)` acts on it, and the infinitesimal picture is a
//! quasi-double Lie algebra whose dual formulation is a quasi-Lie bialgebra.
//! Every structural identity is exposed together with a seeded numerical
//! verifier so the whole construction can be checked end to end.

pub mod bialgebra;
pub mod error;
pub mod expansions;
pub mod lie_loop;
pub mod matrix;
pub mod multivector;
pub mod poisson;
pub mod quasi_double_algebra;
pub mod quasi_double_group;
pub mod report;
pub mod tensor;

pub use error::Error;
pub use matrix::{CMat, HermitianPd, SpecialUnitary, Tolerances};
pub use report::{CheckRecord, EnvBlock, SuiteReport};

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
