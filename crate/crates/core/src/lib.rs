//! Bicomplex linear algebra with a spectral decomposition pipeline.
//!
//! The crate builds four layers on top of each other:
//!
//! - [`bicomplex`] — the commutative algebra 𝕄(2) of bicomplex numbers,
//!   stored in idempotent components, with its three conjugations, modulus,
//!   null-cone handling, inversion, roots, and classification;
//! - [`ket`] — the free module 𝕄(2)ⁿ with the canonical bicomplex scalar
//!   product, the induced norm, idempotent splitting, and the complex
//!   vector-space view with its primed product;
//! - [`operator`] — dense bicomplex matrices: application, composition,
//!   component decomposition, adjoints, operator norms;
//! - [`spectral`] — a from-scratch complex Hermitian Jacobi eigensolver and
//!   the decomposition of a self-adjoint bicomplex operator into hyperbolic
//!   eigenvalues with an orthonormal 𝕄(2)-basis of eigenkets.
//!
//! [`json`] defines the wire formats shared with the command-line tool.
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to share across threads without coordination.
//!
//! # Example
//!
//! ```
//! use bicomplex::{bicomplex_spectral, Bicomplex, BicomplexMatrix};
//!
//! // diag(j): self-adjoint with the hyperbolic eigenvalue j = e1 - e2
//! let t = BicomplexMatrix::from_diagonal(&[Bicomplex::J]);
//! let d = bicomplex_spectral(&t, 1e-12).unwrap();
//! assert!((d.eigenvalues[0].x1 - 1.0).abs() < 1e-12);
//! assert!((d.eigenvalues[0].x2 + 1.0).abs() < 1e-12);
//! assert!(d.reconstruction_error < 1e-12);
//! ```

pub mod bicomplex;
pub mod complex;
pub mod error;
pub mod json;
pub mod ket;
pub mod operator;
pub mod spectral;

pub use crate::bicomplex::{
    Bicomplex, Component, Conjugation, Hyperbolic, NumberClass, DEFAULT_EPS,
};
pub use crate::complex::Complex;
pub use crate::error::{Error, Result};
pub use crate::ket::{v_orthogonal_complement, ComponentKet, Ket};
pub use crate::operator::{outer_product, BicomplexMatrix, ComplexMatrix};
pub use crate::spectral::{
    bicomplex_spectral, bicomplex_spectral_with, compact_diagonal_demo, hermitian_eigen,
    spectral_norm, CompactDemoRow, ComplexHermitianEigenResult, SpectralDecomposition,
    DEFAULT_MAX_SWEEPS, DEFAULT_TOL,
};
