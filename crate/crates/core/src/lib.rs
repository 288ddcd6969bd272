//! Exact invariant rings for `SL(2)` acting on products of projective lines.
//!
//! The crate computes unipotent, Borel, torus and `SL(2)` invariants of the
//! section ring of `O(d_1) ⊗ ... ⊗ O(d_n)` on `(P^1)^n` by exact linear
//! algebra, and checks the correspondence between the shifted `U`-invariant
//! ring and the `G`-invariant ring on `(P^1)^n × P^1` degree by degree.
//!
//! - [`exactlin`]: rationals, reduced echelon forms, kernels, solves.
//! - [`polyring`]: multihomogeneous polynomials and points.
//! - [`sl2rep`]: raising/lowering operators, weight counts, invariant bases.
//! - [`gitcore`]: polytope, walls, Hilbert vectors, restriction/extension,
//!   semistability certificates and the unipotent quotient map.

pub mod error;
pub mod exactlin;
pub mod gitcore;
pub mod polyring;
pub mod sl2rep;

pub use error::{Error, Result};
pub use exactlin::{kernel_basis, rank, rref, solve, RatMatrix, Rational, Rref};
pub use gitcore::{
    b_semistable, delta_interval, delta_points, extend, hilbert_flag, hilbert_uh, phi, rho, rho_rank, translate,
    u_semistable, verify_correspondence, walls, Config, CorrespondenceReport, DeltaData, HilbertVector, RhoRank,
    SemistabilityVerdict,
};
pub use polyring::{basis, Monomial, Multidegree, PointTuple, Polynomial};
pub use sl2rep::{
    g_inv_basis, lowering, multiplicity, raising, u_inv_basis, weight_dim, weight_operator, BasisSource, Direct, Memo,
    WeightBlock,
};
