//! Geometry of 1-, 2- and 3-qubit pure states through the Hopf fibrations
//! S3 -> S2, S7 -> S4 and S15 -> S8.
//!
//! A normalized n-qubit state is read as a point on the unit sphere
//! S^(2^(n+1)-1); the matching fibration projects it to a base sphere whose
//! coordinates carry the single-qubit Bloch data and the entanglement
//! functionals (concurrence for two qubits, the generalized concurrences for
//! three). The inverse direction reconstructs whole fibers: the family of
//! states sharing one base point.
//!
//! The crate is `no_std` (with `alloc`); everything here is plain `f64`
//! arithmetic. IO, file formats and the command-line front end live in the
//! companion `hopfq-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod entanglement;
pub mod error;
pub mod fibers;
pub mod hopf;
pub mod states;
pub mod tol;

pub use algebra::{Complex64, Octonion, Quaternion};
pub use entanglement::{
    classify_leaf, concurrence, generalized_concurrences, partial_bloch_radii, reduced_density,
    separability_check, shell_radius_from_base, BlochRadii, DensityMatrix2,
    GeneralizedConcurrences, LeafDescriptor, LeafLabel,
};
pub use error::{Error, Result};
pub use fibers::{
    epsilon_path, fiber_frame, fiber_point_s15, fiber_point_s7, mes_state, projective_equal,
    FiberFrame, Ray,
};
pub use hopf::{
    entanglor_expectation, h1_ratio, hopf_s15, hopf_s15_from_concurrences, hopf_s3, hopf_s7,
    inverse_stereographic, stereo_frame, stereo_project_s3, stereo_unproject_s3, BasePoint,
    CompositionAlgebra, ExtendedPoint, StereoImage,
};
pub use states::{
    decode_three_qubit, decode_two_qubit, encode_three_qubit, encode_two_qubit, Grouping,
    OctonionPair, PureState, QuaternionPair,
};
