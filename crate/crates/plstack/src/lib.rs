//! Stacked triangulations of manifolds with boundary.
//!
//! The crate provides, over abstract simplicial complexes given by facet
//! lists:
//!
//! * stars, links, boundary/interior decompositions, coning, and stellar
//!   subdivision ([`complex`]);
//! * f-, h-, g-vectors and k-stackedness ([`face_vectors`]);
//! * stellar subdivisions of the boundary realized as pyramid attachments
//!   with an exact interior-face ledger, plus subdivision schedules
//!   ([`cobordism`]);
//! * integral simplicial homology via Smith normal form ([`homology`],
//!   [`matrix`]);
//! * finite group presentations: perfectness, products, presentation-complex
//!   homology, and homomorphism counting ([`presentation`], [`perm`]).
//!
//! All arithmetic is exact. The linear algebra is generic over an integer
//! scalar ([`num::IntScalar`]); the aliases below fix the default at
//! arbitrary precision.

pub mod cobordism;
pub mod complex;
pub mod error;
pub mod face_vectors;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod num;
pub mod perm;
pub mod presentation;

/// Default exact integer scalar.
pub type Int = num_bigint::BigInt;

/// Integer matrix over the default scalar.
pub type IntMatrix = matrix::Matrix<Int>;

/// Smith normal form result over the default scalar.
pub type IntSnf = matrix::SnfResult<Int>;

pub use cobordism::{
    attach_pyramid, disk_extension_by_cone, run_schedule, verify_stack_lemma, PyramidAttachment,
    ScheduleRun, ScheduleStep, StackLemmaReport, SubdivisionSchedule,
};
pub use complex::{BoundaryDecomposition, Face, SimplicialComplex, Vertex};
pub use error::{Error, Result};
pub use face_vectors::{
    f_vector, g3_boundary_check, g_vector, h_vector, is_k_stacked, FaceVectorBundle, G3Report,
    GVector, StackednessReport,
};
pub use homology::{
    boundary_matrix, homology, is_homology_sphere, HomologyProfile, SphereCheck,
};
pub use perm::{count_homomorphisms, PermutationGroupTable, DEFAULT_HOM_BUDGET};
pub use presentation::{
    presentation_cellular_homology, presentation_complex_homology,
    presentation_complex_simplicial, AbelianizationResult, CellularHomology, GroupPresentation,
    Letter, Word,
};
