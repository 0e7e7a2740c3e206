//! Verification engine: classification sweeps over enumerated graphs,
//! cospectral-mate search, closed-form checks and property suites.

mod classify;
mod cospectral;
mod formulas;
mod properties;
mod report;
mod sweep;

pub use classify::{classify_sweep, remark45, ClassificationReport};
pub use cospectral::{ds_check, CospectralReport};
pub use formulas::{family_structure_suites, verify_formulas, FORMULA_DEFAULT_MAX_N};
pub use properties::{interlacing_check, property_suite, PropertyConfig, DEFAULT_SEED};
pub use report::{write_records_csv, Status, SuiteResult, Verdict, VerifyReport, MAX_COUNTEREXAMPLES};
pub use sweep::{corpus_hash, Corpus, GraphRecord, Sweep, SweepOptions, CACHE_DIR_ENV};

use thiserror::Error;

use crate::enumerate::{CanonError, EnumerateError};
use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::spectra::SpectraError;

/// Largest order accepted for a supplied corpus.
pub const CORPUS_MAX_VERTICES: usize = crate::enumerate::CANON_MAX_VERTICES;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("order {n} outside the supported range {range}")]
    OutOfRange { n: usize, range: String },
    #[error("corpus graph has order {found}, expected {expected}")]
    MixedOrders { expected: usize, found: usize },
    #[error("corpus graph {0} is disconnected")]
    DisconnectedInput(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Orders with a classification claim, checked against the corpus source.
pub(crate) fn check_sweep_order(corpus: &Corpus) -> Result<(), VerifyError> {
    let n = corpus.order();
    let (ok, range) = match corpus {
        Corpus::BuiltIn(_) => ((4..=crate::enumerate::ENUMERATION_MAX_VERTICES).contains(&n), "4..=9"),
        Corpus::Graphs { .. } => ((4..=CORPUS_MAX_VERTICES).contains(&n), "4..=10"),
    };
    if ok {
        Ok(())
    } else {
        Err(VerifyError::OutOfRange { n, range: range.to_string() })
    }
}
