//! Exact combinatorics of Auslander-Reiten quivers for simply-laced Dynkin
//! quivers.
//!
//! Starting from an orientation `Q` of a Dynkin diagram of type `A`, `D` or
//! `E`, this crate builds the stable translation quiver `ZQ`, cuts out the
//! window between the two canonical copies of `Q^op` (the vertices of the
//! Auslander-Reiten quiver of `kQ`), and computes on top of it:
//!
//! * dimension vectors of all indecomposables, twice (Coxeter powers and
//!   mesh knitting), together with Hom-space dimensions in the mesh category;
//! * the dimension vectors of the canonical rigid module obtained by pushing
//!   the window injectives down to the preprojective algebra, the dimension
//!   of its endomorphism algebra by two routes, and the resulting rigidity
//!   certificate `<d,d> == dim End`;
//! * the graded quiver of that endomorphism algebra (mesh arrows plus one
//!   translation arrow per non-projective vertex) with its relations;
//! * adapted orderings of the window, the induced reduced words for the
//!   longest Weyl group element, and the cluster-algebra initial seed data
//!   (exchangeable positions, exchange matrices, minor weight labels).
//!
//! All arithmetic is exact 64-bit integer arithmetic; every quantity that
//! admits two independent derivations is computed both ways and compared.

pub mod check;
pub mod dot;
pub mod dynkin;
pub mod error;
pub mod mat;
pub mod numerics;
pub mod rigid;
pub mod seed;
pub mod weyl;
pub mod zq;

pub use dynkin::{DynkinType, Family, Quiver};
pub use error::{Error, Result};
pub use weyl::WeightVector;
pub use zq::{Window, ZqVertex};
