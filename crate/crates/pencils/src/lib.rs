//! Exact rigid-isotopy classification of real pencils of quadrics.
//!
//! A smooth three-dimensional intersection of two real quadrics in P^5 is
//! determined, up to rigid isotopy, by how the positive inertia index of
//! the pencil lambda0 Q0 + lambda1 Q1 jumps around the circle of parameter
//! directions. This crate computes that invariant with exact rational
//! arithmetic end to end: the discriminant det(Q0 + t Q1) is expanded
//! exactly, its real roots are isolated with Sturm sequences, inertia is
//! evaluated by symmetric elimination over Q, and the resulting odd
//! decomposition is reduced to a canonical necklace.
//!
//! Every jump decision is a +-1 call; none of it is trusted to floating
//! point.

mod discriminant;
mod error;
mod forms;
mod io;
mod isotopy;
pub mod oracle;
mod poly;
mod profile;
pub mod sample;

pub use discriminant::{
    pencil_determinant, real_pencil_roots, validate_generic, DiscriminantForm, PencilRoot,
    RootLocation,
};
pub use error::PencilError;
pub use forms::{inertia, Inertia, QuadricPencil, SymmetricForm};
pub use io::{
    parse_rational, rational_to_string, ClassifyReport, PencilInput, RootJson, CLASSIFY_SCHEMA,
};
pub use isotopy::{canonical_necklace, classify, classify_profile, interpret, IsotopyClass, TopologyVerdict};
pub use poly::{isolate_real_roots, Rat, RatPoly, RealRoot};
pub use profile::{inertia_profile, Discontinuity, InertiaProfile};
