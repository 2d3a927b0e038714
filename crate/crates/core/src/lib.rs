//! Exact combinatorics for noncommutative lattices.
//!
//! A finite T₀ space is a poset. This crate builds the Bratteli diagram of
//! the AF algebra whose primitive spectrum is a given poset, reads the
//! spectrum back off the diagram, and computes the ordered group
//! (K₀, K₀₊) from the stationary part of the diagram.
//!
//! The pipeline, module by module:
//!
//! * [`topology`]: posets from coverings or bases, open/closed sets, Hasse diagrams.
//! * [`bratteli`]: closed-set partitions, envelopes and the leveled diagram.
//! * [`spectrum`]: ideal subdiagrams, primitivity and the reconstructed poset.
//! * [`ktheory`]: integer inverses, K₀ and descriptions of the positive cone.
//!
//! [`format`] and [`dot`] hold the text and Graphviz renderings used by the CLI.

pub mod bratteli;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod iso;
pub mod ktheory;
pub mod matrix;
pub mod pointset;
pub mod spectrum;
pub mod topology;

pub use bratteli::{
    build_diagram, default_depth, required_depth, stable_incidence, BratteliDiagram,
    LevelPartition,
};
pub use error::{Error, Result};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use ktheory::{
    cone_membership, describe_cone, fibonacci_inverse_power, first_nonnegative_power,
    integer_inverse, k0_group, perron_cone, unipotent_cone, Certificate, ConeDescription,
    ConeKind, IncidenceMatrix, K0Result, MembershipVerdict,
};
pub use matrix::IntMatrix;
pub use pointset::PointSet;
pub use spectrum::{
    ideal_subdiagrams, is_primitive, prim_poset, roundtrip_check, zero_ideal_primitive,
    IdealSubdiagram, PrimSpectrum,
};
pub use topology::{GroundSpace, HasseDiagram, Poset};
