//! Five-point discrete Fourier transform toolkit.
//!
//! The crate constructs the operator family around the 5x5 DFT matrix —
//! circulant shift, reflection, position, derivative, momentum, the
//! lowering/raising pair, and the number operator N = A^T A — and computes
//! the eigenvalues and eigenvectors of N analytically through a sparse
//! ladder: the ground state solves A f0 = 0 in closed form, and each
//! further eigenvector is a raising step whose action collapses to a
//! diagonal plus an 8- or 10-entry sparse matrix on vectors of definite
//! reflection parity.
//!
//! Because the five eigenvalues are distinct, the eigensystem also
//! diagonalizes the DFT itself (Phi f_n = i^n f_n), resolving the
//! degeneracy of the DFT eigenvalues. Three independent analytic paths
//! yield the same eigenvectors — the ladder, the raising-power formula,
//! and the Newtonian basis polynomials — and a cyclic Jacobi eigensolver
//! serves as an oracle for all of them.
//!
//! The [`claims`] module packages every identity into a machine-checkable
//! registry, including the handful of published closed forms whose printed
//! coefficients are off by documented constant factors.
//!
//! All arithmetic runs either in binary64 or in arbitrary-precision mode
//! (30+ decimal digits) behind the same API; see [`scalar::Precision`].

pub mod claims;
pub mod constants;
pub mod error;
pub mod ladder;
pub mod linalg;
pub mod operators;
pub mod oracle;
pub mod rng;
pub mod scalar;
pub mod split;

pub use claims::{run_claims, ClaimEntry, ClaimKind, ClaimStatus, ClaimsReport};
pub use constants::FifthRootConstants;
pub use error::{Error, Result};
pub use ladder::{EigenPair, EigenSystem5, LadderSolver, MixingData, NewtonLadder, Spectrum5};
pub use linalg::{
    anticommutator, anticommutator_norm, commutator, commutator_norm, CMatrix, CVector,
};
pub use operators::{
    build_named_matrix, dft_matrix, fourier_basis_vector, parity_decompose, MatrixKind, Parity,
};
pub use oracle::{eigenvector_match, hermitian_eigensolver, OracleEigenResult};
pub use scalar::{Complex, Mode, Precision, Real};
pub use split::{phi_x_product, sparse_apply, LadderStep, ParityClass, SplitPair, SplitVariant};
