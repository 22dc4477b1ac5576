//! Graph toolkit built around wheels: detect wheel subgraphs with
//! witnesses, decide whether a cycle passes through three chosen vertices
//! (returning the cycle or a Watkins-Mesner splitter certificate), analyze
//! connectivity structure, and constructively color wheel-free graphs.
//! Everything is cross-checked against brute-force oracles at desk scale.

#![forbid(unsafe_code)]

pub mod coloring;
pub mod connectivity;
pub mod cycle3;
pub mod graph;
pub mod menger;
pub mod oracle;
pub mod structure;
pub mod wheels;
pub mod zoo;

pub use graph::{Cycle, Graph, Relabeling, VertexPath};
