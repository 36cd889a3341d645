//! Schnyder woods and Alon-Tarsi certificates for plane triangulations.
//!
//! Graphs are combinatorial embeddings: a counterclockwise rotation per vertex
//! and the outer face listed clockwise. See [`planar`] for the conventions.

pub mod certificate;
pub mod cli;
pub mod error;
pub mod export;
pub mod graph;
pub mod planar;
pub mod poly;
pub mod schnyder;
pub mod testkit;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use planar::{GraphData, PlaneGraph, PlaneTriangulation};
