//! Exact-arithmetic computations on the weight lattices of the finite
//! simple Lie algebras: Weyl orbits with signatures, permutation weights,
//! rank `N-1` type-A subalgebra embeddings, Schur polynomials in power-sum
//! indeterminates, and irreducible characters computed three independent
//! ways (orbit-sum division, the permutation-weight factorization, and the
//! Freudenthal recursion).
//!
//! All arithmetic is exact: weights carry arbitrary-precision rational
//! coordinates in the fundamental-weight basis and no floating point is
//! used anywhere.

#![forbid(unsafe_code)]

pub mod charac;
pub mod permw;
pub mod rootsys;
pub mod schur;
pub mod subalg;
pub mod weylorb;

pub mod laurent;

pub use rootsys::{AlgebraId, Family, RootSystem, Weight};
