//! Exact representation theory of bound quiver algebras over the rationals.
//!
//! Builds finite-dimensional algebras `KQ/I`, their representations and
//! morphisms, computes the Auslander-Reiten translate, checks τ-rigidity and
//! support τ-tilting pairs, and matches the summands of two such pairs.
//!
//! Vertices and summands are indexed from 0. Paths are lists of arrow indices
//! in the order the arrows are applied.

#![no_std]

extern crate alloc;

pub mod bijection;
pub mod cover;
pub mod endo;
pub mod linalg;
mod poly;
pub mod quiver;
pub mod rep;
pub mod tau;

pub use bijection::{
    all_matchings, build_report, classify_edge, compute_f_sets, find_matching, find_matching_in, hall_check,
    restricted_sets, BijectionError, BijectionReport, Condition, EdgeLabel, Enumeration, FSets, HallCheck, Permutation,
    ReportOptions,
};
pub use endo::{is_indecomposable, CertifyError, Indecomposable, IsoCertificate, Locality};
pub use linalg::{scalar, Matrix, Scalar};
pub use quiver::{
    dual_rep, injective, projective, simple, AlgebraError, Arrow, BoundQuiverAlgebra, ModuleKind, Quiver, Relation,
    VertexLabeledModuleName,
};
pub use rep::{direct_sum, hom_basis, hom_dim, HomSpace, Morphism, Representation};
pub use tau::{
    is_tau_rigid, is_tau_rigid_pair, tau, tau_minus, verify_support_pair, PairCheck, PairFailure, PairObstruction,
    PairStatus, PairVerification, SupportPair, VerifiedPair,
};
