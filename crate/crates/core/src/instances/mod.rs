//! Core data model: graphs, set systems, TSP instances, solutions, and
//! seeded random instance generators.
//!
//! Everything is validated on construction and immutable afterwards, so
//! instances can be shared freely across concurrent workers.

mod catalog;
mod coloring;
mod gen;
mod graph;
mod setsystem;
mod tsp;

pub use catalog::{all_trees, connected_graphs_exhaustive, small_connected_catalog};
pub use coloring::Coloring;
pub use gen::{gen_graph, gen_semimetric, gen_setsystem};
pub use graph::{Graph, Ordering};
pub use setsystem::{Cover, SetSystem};
pub use tsp::{Tour, TspInstance};
