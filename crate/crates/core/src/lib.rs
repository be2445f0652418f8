//! Graph invariants, power means, and an executable catalogue of bounds on
//! the general Randić index `R_α` and the zeroth-order index `Q_α`.

pub mod bounds;
pub mod combinatorial;
pub mod graph;
pub mod indices;
pub mod means;
pub mod spectral;

pub use graph::{Family, Graph, GraphError};
