//! Exact arithmetic for linear combinations of Chern numbers.
//!
//! The space `C_n` of rational linear combinations of degree-`n` Chern
//! numbers has a basis indexed by the partitions of `n` (the monomial
//! `c_{i_1}···c_{i_k}` for the partition `[i_1, ..., i_k]`). This crate
//! builds that space and the distinguished vectors and subspaces living
//! inside it:
//!
//! - the Euler number `c_n` and the Pontryagin monomials `p_{i_1}···p_{i_k}`,
//!   spanning the Euler–Pontryagin subspace `EP`;
//! - the chi_y-genus components `T^p_n` obtained from the multiplicative
//!   sequence of `Q(y;x) = x + x(y+1)/(e^{x(y+1)} - 1)`, spanning the
//!   Hirzebruch–Todd subspace `HT` (Todd genus at `y = 0`, L-genus /
//!   signature at `y = 1`, Euler number at `y = -1`);
//! - products of complex projective spaces with exact Chern-number and
//!   Hodge-theoretic evaluation, serving as independent oracles.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point is used anywhere. The [`verify`] module packages the dimension,
//! identity, intersection, and detection claims as a machine-checkable
//! report suite.

pub mod charvec;
pub mod manifolds;
pub mod partitions;
pub mod qlinalg;
pub mod symbolic;
pub mod verify;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
