//! Upper and lower treewidth bounds for plane graphs.
//!
//! A *net* is the bramble of all connected vertex sets that touch the three
//! sides of a split peripheral walk (a 3-frame). [`net_alg`] computes a
//! minimum cover of a net through shortest paths in the face graph, and
//! [`bt_alg`] searches the graph recursively for high-order nets, producing a
//! constant `KB` with `KB <= BN(G) <= 4 KB` together with a tree decomposition
//! of width at most `4 KB - 1`.
//!
//! [`oracles`] holds brute-force reference implementations used by the test
//! suites.

#![forbid(unsafe_code)]

pub mod bt_alg;
pub mod decomposition;
mod error;
pub mod frame;
pub mod generate;
pub mod graph;
pub mod net_alg;
pub mod oracles;
pub mod plane_graph;

pub use bt_alg::{bt_alg, build_decomposition, recolor_child, BtOptions, BtRun, SearchNode};
pub use decomposition::{
    validate_tree_decomposition, DecompositionTree, TreeDecomposition, Validation, Violation,
};
pub use error::{Error, Result};
pub use frame::{crosses, default_frame, is_vine, make_frame, verify_cover, Color, ColorSet, Frame3};
pub use generate::{generate, Family};
pub use graph::SimpleGraph;
pub use net_alg::{
    extract_vine_tree, net_alg, net_alg_with, sssp_01, DistanceRow, NetAlgRoute, NetCover,
    VineTree, WeightedDigraph,
};
pub use plane_graph::{
    build_face_graph, induced_subgraph, trace_faces, Component, Dart, FaceGraph, FaceWalk, Faces,
    PlaneGraph,
};

/// Dense vertex identifier, `0..n`.
pub type Vertex = usize;
