//! Routing on oriented star graphs.
//!
//! The crate covers the n-star graph `S_n` (nodes are permutations of
//! `1..=n`, edges swap position 1 with another position) and its two strong
//! orientations, the classic greedy router for the undirected graph, a
//! node-local router for the Fujita orientation, BFS oracles for exact
//! distances and diameters, and a harness that sweeps every pair of nodes
//! against the known distance bounds.

pub mod classify;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod perm;
pub mod routing;
pub mod topology;

pub use classify::{classify, is_alternating, ClassifiedSets};
pub use error::{Error, Result};
pub use harness::{
    lower_bound_check, table, verify, witness, Check, DiameterTableRow, SourceSet,
    VerificationReport, VerifyOptions, WitnessVariant,
};
pub use oracle::{
    bfs, diameter, distance, eccentricity, DiameterMode, DistanceField, Orientation, RankCodec,
};
pub use perm::{relative_cycles, CycleDecomposition, Parity, Perm};
pub use routing::{
    check_phase_propositions, classic_distance, classic_distance_sets, classic_route, classic_step,
    oriented_route, oriented_step, theorem2_bound, MoveKind, Phase, RouteTrace,
};
pub use topology::{arc_direction, neighbors, out_neighbors, Direction, HalfBoundary, Scheme};
