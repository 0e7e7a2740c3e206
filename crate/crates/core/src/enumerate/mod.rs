//! Exhaustive generation of small graphs up to isomorphism, and ingestion
//! of graph6 corpora produced elsewhere.

mod canon;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonError, CanonicalForm, CANON_MAX_VERTICES};

use std::io::BufRead;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{parse_graph6, Graph, Graph6Error};

/// Largest order the built-in generator produces.
pub const ENUMERATION_MAX_VERTICES: usize = 9;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("built-in enumeration covers 1..={ENUMERATION_MAX_VERTICES} vertices, got {0}")]
    OutOfRange(usize),
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("line {line}: graph order {found} differs from expected {expected}")]
    WrongOrder { line: usize, expected: usize, found: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Next level of codes: every way of attaching a new vertex to a parent.
fn augment(parents: &[u64], n: usize, connected_only: bool) -> Vec<u64> {
    let first_subset = u64::from(connected_only);
    let mut codes: Vec<u64> = parents
        .par_iter()
        .flat_map_iter(|&code| {
            let parent = decode_rows(n, code);
            let mut rows = [0u64; ENUMERATION_MAX_VERTICES + 1];
            rows[..n].copy_from_slice(&parent);
            (first_subset..1u64 << n).map(move |nbrs| {
                let mut child = rows;
                child[n] = nbrs;
                for v in crate::graph::bits(nbrs) {
                    child[v] |= 1 << n;
                }
                canon::canonical_code(&child[..=n]).0
            })
        })
        .collect();
    codes.par_sort_unstable();
    codes.dedup();
    codes
}

fn decode_rows(n: usize, code: u64) -> Vec<u64> {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

fn generate(n: usize, connected_only: bool) -> Result<Vec<Graph>, EnumerateError> {
    if !(1..=ENUMERATION_MAX_VERTICES).contains(&n) {
        return Err(EnumerateError::OutOfRange(n));
    }
    // Every connected graph has a vertex whose removal keeps it connected,
    // so augmenting connected graphs by connected attachments is complete.
    let mut level = vec![0u64];
    for k in 1..n {
        level = augment(&level, k, connected_only);
    }
    Ok(level
        .into_iter()
        .map(|code| Graph::from_adjacency_rows(&decode_rows(n, code)).expect("decoded rows are valid"))
        .collect())
}

/// One canonically labeled representative of every isomorphism class of
/// connected graphs on `n` vertices, ordered by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    generate(n, true)
}

/// As [`enumerate_connected`] but including disconnected graphs.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    generate(n, false)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IngestOptions {
    pub connected_only: bool,
    /// Reject graphs whose order differs.
    pub expected_order: Option<usize>,
}

/// Parses one graph6 graph per line. Blank lines are skipped; errors carry
/// the 1-based line number and do not stop the iterator.
pub fn ingest_graph6_stream<R: BufRead>(
    reader: R,
    options: IngestOptions,
) -> impl Iterator<Item = Result<Graph, EnumerateError>> {
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line_no = i + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(e.into())),
        };
        if line.trim().is_empty() {
            return None;
        }
        let g = match parse_graph6(line.trim()) {
            Ok(g) => g,
            Err(source) => return Some(Err(EnumerateError::Parse { line: line_no, source })),
        };
        if let Some(expected) = options.expected_order {
            if g.order() != expected {
                return Some(Err(EnumerateError::WrongOrder {
                    line: line_no,
                    expected,
                    found: g.order(),
                }));
            }
        }
        (!options.connected_only || g.is_connected()).then_some(Ok(g))
    })
}
