//! Exact tools for association schemes, coherent configurations and spectral feasibility.

mod error;
pub mod exact;
pub mod coherent;
pub mod graph;
pub mod scheme;
pub mod spectral;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
