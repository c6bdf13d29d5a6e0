//! Exact Drazin inverses in matrix rings over exact fields and in small
//! scalar rings, together with closed-form identities for Drazin inverses
//! of sums, differences and products of idempotents.
//!
//! The matrix and engine layers are generic over the [`Scalar`] trait;
//! the aliases below name the concrete instantiations.

pub mod calculus;
pub mod drazin;
pub mod generators;
pub mod matrix;
pub mod ring;
pub mod scalar;

pub use drazin::{DrazinError, DrazinResult};
pub use matrix::{Matrix, MatrixError};
pub use ring::{Elt, FiniteTableRing, IntegerRing, MatrixRing, ModularScalarRing, RingContext};
pub use scalar::{Domain, Integer, ModularInt, PrimeFieldElem, Rational, Scalar};

/// Matrices over `Q`.
pub type RationalMatrix = Matrix<Rational>;
/// Matrices over `GF(p)`.
pub type PrimeFieldMatrix = Matrix<PrimeFieldElem>;
/// Matrices over `Z_n` (ring arithmetic only).
pub type ModularMatrix = Matrix<ModularInt>;
/// Matrices over `Z` (ring arithmetic only).
pub type IntegerMatrix = Matrix<Integer>;

/// `M_n(Q)`.
pub type RationalMatrixRing = MatrixRing<Rational>;
/// `M_n(GF(p))`.
pub type PrimeFieldMatrixRing = MatrixRing<PrimeFieldElem>;
