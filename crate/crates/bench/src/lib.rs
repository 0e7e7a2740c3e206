//! Fixtures shared by the pipeline benchmarks.

use dlmkit_core::enumerate::enumerate_connected;
use dlmkit_core::graph::Graph;

/// Every `stride`-th connected graph on `n` vertices, in enumeration order.
pub fn sample_connected(n: usize, stride: usize) -> Vec<Graph> {
    enumerate_connected(n)
        .expect("order within the built-in enumeration range")
        .into_iter()
        .step_by(stride.max(1))
        .collect()
}
