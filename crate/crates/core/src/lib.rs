//! Mechanical classification of bipartite intrinsically knotted graphs with
//! at most 22 edges.
//!
//! The engine enumerates every connected bipartite graph with 22 edges and
//! minimum degree three, removes each one that a two-vertex planarity
//! obstruction rules out, and checks that the survivors are exactly the two
//! known examples. Around that core sit the supporting facts: ∇Y/Y∇ family
//! closures, vertex splits of the 21-edge minor-minimal graphs, and exhaustive
//! checks of the structural lemmas used along the way.

pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod moves;
pub mod pipeline;
pub mod planarity;
pub mod reduction;
pub mod store;
