//! Exact distance-Laplacian spectra of small connected graphs, and the
//! machinery to check which graphs have a largest eigenvalue of
//! multiplicity `n - 3`.

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod patterns;
pub mod spectra;
pub mod verify;

pub use families::FamilySpec;
pub use graph::{parse_graph6, to_graph6, Graph};
pub use linalg::{CharPolynomial, ExactSpectrum, IntSymMatrix, Root};
