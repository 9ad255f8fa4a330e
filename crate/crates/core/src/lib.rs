pub mod error;
pub mod graph;
pub mod infinite;
pub mod io;
pub mod nets;
pub mod pretopology;
pub mod report;
pub mod solvers;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{Graph, VertexFunction, VertexSet};
