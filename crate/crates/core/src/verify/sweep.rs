//! Per-graph spectral records over a whole corpus, computed on a worker
//! pool and optionally cached on disk.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::VerifyError;
use crate::enumerate::{canonical_form, enumerate_connected, CanonicalForm};
use crate::graph::{parse_graph6, to_graph6, Graph};
use crate::linalg::{format_root, largest_root_of, Root};
use crate::patterns::is_p5_free;
use crate::spectra::{distance_laplacian_of_table, SpectrumKey};

/// Environment variable naming the sweep cache directory.
pub const CACHE_DIR_ENV: &str = "DLMKIT_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    /// Largest distance-Laplacian eigenvalue, exact integer or `≈` decimal.
    pub largest: String,
    pub largest_is_integer: bool,
    pub multiplicity: u32,
    pub diameter: u32,
    pub p5_free: bool,
    pub complement_components: usize,
    /// Hex of the [`SpectrumKey`] bytes.
    pub spectrum_key: String,
}

impl GraphRecord {
    pub fn compute(g: &Graph) -> Result<GraphRecord, VerifyError> {
        let table = g.distance_table()?;
        let cp = distance_laplacian_of_table(&table).char_poly();
        let (root, multiplicity) = largest_root_of(cp.as_poly()).expect("Laplacian-type matrices have a real root");
        Ok(GraphRecord {
            graph6: to_graph6(g),
            largest: format_root(&root),
            largest_is_integer: matches!(root, Root::Integer(_)),
            multiplicity,
            diameter: table.diameter(),
            p5_free: is_p5_free(g),
            complement_components: g.complement().component_count(),
            spectrum_key: hex::encode(SpectrumKey::from_char_poly(&cp).as_bytes()),
        })
    }

    pub fn graph(&self) -> Graph {
        parse_graph6(&self.graph6).expect("records hold valid graph6")
    }
}

/// Records for one corpus of connected graphs on a common order, sorted by
/// canonical form.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub n: usize,
    pub corpus_hash: String,
    pub records: Vec<GraphRecord>,
}

/// Where the graphs of a sweep come from.
#[derive(Debug, Clone)]
pub enum Corpus {
    BuiltIn(usize),
    Graphs { n: usize, graphs: Vec<Graph> },
}

impl Corpus {
    pub fn order(&self) -> usize {
        match self {
            Corpus::BuiltIn(n) | Corpus::Graphs { n, .. } => *n,
        }
    }

    fn materialize(self) -> Result<(usize, Vec<Graph>), VerifyError> {
        match self {
            Corpus::BuiltIn(n) => Ok((n, enumerate_connected(n)?)),
            Corpus::Graphs { n, graphs } => {
                if let Some(g) = graphs.iter().find(|g| g.order() != n) {
                    return Err(VerifyError::MixedOrders { expected: n, found: g.order() });
                }
                if let Some(g) = graphs.iter().find(|g| !g.is_connected()) {
                    return Err(VerifyError::DisconnectedInput(to_graph6(g)));
                }
                let mut keyed: Vec<(CanonicalForm, Graph)> = graphs
                    .into_iter()
                    .map(|g| Ok((canonical_form(&g)?, g)))
                    .collect::<Result<_, VerifyError>>()?;
                keyed.sort_by_key(|(c, _)| *c);
                Ok((n, keyed.into_iter().map(|(_, g)| g).collect()))
            }
        }
    }
}

pub fn corpus_hash(graphs: &[Graph]) -> String {
    let mut h = Sha256::new();
    for g in graphs {
        h.update(to_graph6(g).as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

fn cache_path(dir: &Path, n: usize, hash: &str) -> PathBuf {
    dir.join(format!("sweep-n{n}-{}.jsonl", &hash[..16]))
}

fn load_cache(path: &Path, expected: usize) -> Option<Vec<GraphRecord>> {
    let file = fs::File::open(path).ok()?;
    let records: Vec<GraphRecord> = BufReader::new(file)
        .lines()
        .map(|l| l.ok().and_then(|l| serde_json::from_str(&l).ok()))
        .collect::<Option<_>>()?;
    (records.len() == expected).then_some(records)
}

fn store_cache(path: &Path, records: &[GraphRecord]) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        for r in records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        w.flush()?;
    }
    fs::rename(tmp, path)
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Cache directory; `None` disables caching.
    pub cache_dir: Option<PathBuf>,
}

impl SweepOptions {
    /// Cache directory from [`CACHE_DIR_ENV`], if set.
    pub fn from_env(workers: Option<usize>) -> SweepOptions {
        SweepOptions {
            workers,
            cache_dir: std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from),
        }
    }
}

pub(crate) fn with_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, VerifyError> {
    match workers {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| VerifyError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

impl Sweep {
    pub fn run(corpus: Corpus, options: &SweepOptions) -> Result<Sweep, VerifyError> {
        let (n, graphs) = corpus.materialize()?;
        let hash = corpus_hash(&graphs);
        let path = options.cache_dir.as_deref().map(|d| cache_path(d, n, &hash));
        if let Some(records) = path.as_deref().and_then(|p| load_cache(p, graphs.len())) {
            return Ok(Sweep { n, corpus_hash: hash, records });
        }
        let records = with_pool(options.workers, || {
            graphs
                .par_iter()
                .map(GraphRecord::compute)
                .collect::<Result<Vec<_>, _>>()
        })??;
        if let Some(p) = &path {
            // A cache that cannot be written only costs a recomputation.
            let _ = store_cache(p, &records);
        }
        Ok(Sweep { n, corpus_hash: hash, records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Records with `m(∂₁) = n - 3`.
    pub fn class(&self) -> impl Iterator<Item = &GraphRecord> {
        let target = self.n.saturating_sub(3) as u32;
        self.records.iter().filter(move |r| r.multiplicity == target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_of_small_graphs() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = GraphRecord::compute(&c5).unwrap();
        assert_eq!(r.multiplicity, 2);
        assert_eq!(r.diameter, 2);
        assert!(r.p5_free);
        assert_eq!(r.complement_components, 1);
        assert_eq!(r.graph(), c5);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = GraphRecord::compute(&p4).unwrap();
        assert_eq!(r.multiplicity, 1);
        assert!(!r.largest_is_integer);
        assert!(r.largest.starts_with('≈'));
    }

    #[test]
    fn cache_round_trip_and_corpus_order() {
        let dir = tempfile::tempdir().unwrap();
        let options = SweepOptions { workers: Some(1), cache_dir: Some(dir.path().to_path_buf()) };
        let first = Sweep::run(Corpus::BuiltIn(5), &options).unwrap();
        assert_eq!(first.len(), 21);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        let second = Sweep::run(Corpus::BuiltIn(5), &options).unwrap();
        assert_eq!(first.records, second.records);

        // The same graphs relabeled and shuffled give the same sweep.
        let mut graphs: Vec<Graph> = enumerate_connected(5)
            .unwrap()
            .into_iter()
            .map(|g| g.permute(&[4, 2, 0, 1, 3]))
            .collect();
        graphs.reverse();
        let corpus = Sweep::run(Corpus::Graphs { n: 5, graphs }, &SweepOptions::default()).unwrap();
        let mults: Vec<u32> = corpus.records.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, first.records.iter().map(|r| r.multiplicity).collect::<Vec<_>>());
        assert_eq!(corpus.class().count(), 5);
    }

    #[test]
    fn corpus_validation() {
        let bad = Corpus::Graphs { n: 3, graphs: vec![Graph::empty(3).unwrap()] };
        assert!(matches!(Sweep::run(bad, &SweepOptions::default()), Err(VerifyError::DisconnectedInput(_))));
        let mixed = Corpus::Graphs { n: 3, graphs: vec![Graph::complete(4).unwrap()] };
        assert!(matches!(Sweep::run(mixed, &SweepOptions::default()), Err(VerifyError::MixedOrders { .. })));
    }
}
