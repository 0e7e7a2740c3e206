//! Exhaustive and sampled property suites over small enumerated graphs.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::formulas::family_structure_suites;
use super::report::{run_suite, Failure, SuiteBuilder, SuiteResult, VerifyReport};
use super::sweep::with_pool;
use super::VerifyError;
use crate::enumerate::{canonical_form, enumerate_all, enumerate_connected, ENUMERATION_MAX_VERTICES};
use crate::families::{classified_family_members, CLASSIFICATION_MIN_ORDER};
use crate::graph::{bits, full_mask, parse_graph6, to_graph6, DistanceTable, Graph};
use crate::linalg::{
    jacobi_eigen, numeric_eigenvalues, squarefree_decompose, within_tolerance, CharPolynomial, ExactSpectrum,
    IntSymMatrix,
};
use crate::patterns::{contains_pattern, is_cograph, is_p4_free, is_p5_free, j_graph_recognize, PatternName};
use crate::spectra::{
    complement_laplacian_spectrum, distance_laplacian_of_table, dl_spectrum, dl_spectrum_from_laplacian,
    join_laplacian_spectrum, laplacian, laplacian_spectrum,
};

pub const DEFAULT_SEED: u64 = 20_240_521;

const INTERLACING_TOL: f64 = 1e-7;
const EIGENVECTOR_TOL: f64 = 1e-6;

// Per-suite order caps; each enumerating suite runs up to `min(cap, max_n)`.
const EXACT_CAP: usize = 7;
const NUMERIC_CAP: usize = 8;
const LAPLACIAN_CAP: usize = 6;
const PATTERN_CAP: usize = 8;
const EDGE_SAMPLE_ORDER: usize = 7;
const INTERLACING_SAMPLE_ORDER: usize = 8;
const SUBMATRIX_CAP: usize = 8;
const FAMILY_CAP: usize = 9;

const CONNECTED_COUNTS: [usize; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];
const ALL_COUNTS: [usize; 9] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyConfig {
    /// Largest order any suite enumerates.
    pub max_n: usize,
    /// Sample count for each sampled suite.
    pub samples: usize,
    pub seed: u64,
    pub workers: Option<usize>,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig { max_n: 8, samples: 1000, seed: DEFAULT_SEED, workers: None }
    }
}

/// Connected graph with its distance-Laplacian data.
struct Item {
    graph: Graph,
    table: DistanceTable,
    dl: IntSymMatrix,
    poly: CharPolynomial,
    spectrum: ExactSpectrum,
}

impl Item {
    fn new(graph: Graph) -> Item {
        let table = graph.distance_table().expect("enumerated graphs are connected");
        let dl = distance_laplacian_of_table(&table);
        let poly = dl.char_poly();
        let spectrum = ExactSpectrum::from_char_poly(&poly);
        Item { graph, table, dl, poly, spectrum }
    }

    fn order(&self) -> usize {
        self.graph.order()
    }
}

struct Corpora {
    /// `connected[n]` for `1 ≤ n ≤ max_n`.
    connected: Vec<Vec<Graph>>,
    /// `all[n]` for `1 ≤ n ≤ min(max_n, EXACT_CAP)`.
    all: Vec<Vec<Graph>>,
    /// Connected graphs up to `min(max_n, NUMERIC_CAP)` with spectra.
    items: Vec<Item>,
}

impl Corpora {
    fn build(max_n: usize) -> Result<Corpora, VerifyError> {
        let mut connected = vec![Vec::new()];
        for n in 1..=max_n {
            connected.push(enumerate_connected(n)?);
        }
        let mut all = vec![Vec::new()];
        for n in 1..=max_n.min(EXACT_CAP) {
            all.push(enumerate_all(n)?);
        }
        let graphs: Vec<Graph> = connected[1..=max_n.min(NUMERIC_CAP)].iter().flatten().cloned().collect();
        let items = graphs.into_par_iter().map(Item::new).collect();
        Ok(Corpora { connected, all, items })
    }

    fn items_up_to(&self, cap: usize) -> Vec<&Item> {
        self.items.iter().filter(|it| it.order() <= cap).collect()
    }

    fn all_up_to(&self, cap: usize) -> Vec<&Graph> {
        self.all.iter().skip(1).take(cap).flatten().collect()
    }

    fn connected_up_to(&self, cap: usize) -> Vec<&Graph> {
        self.connected.iter().skip(1).take(cap).flatten().collect()
    }
}

/// Runs every property suite with orders up to `config.max_n`.
pub fn property_suite(config: &PropertyConfig) -> Result<VerifyReport, VerifyError> {
    if !(2..=ENUMERATION_MAX_VERTICES).contains(&config.max_n) {
        return Err(VerifyError::OutOfRange { n: config.max_n, range: format!("2..={ENUMERATION_MAX_VERTICES}") });
    }
    let suites = with_pool(config.workers, || run_all(config))??;
    Ok(VerifyReport::from_suites("properties", config.max_n, suites))
}

fn run_all(config: &PropertyConfig) -> Result<Vec<SuiteResult>, VerifyError> {
    let max_n = config.max_n;
    let c = Corpora::build(max_n)?;
    let mut suites = Vec::new();

    suites.extend(graph_core_suites(&c, max_n));
    suites.extend(linalg_suites(&c, config));
    suites.extend(spectra_suites(&c, config)?);
    suites.extend(pattern_suites(&c, max_n));
    suites.extend(enumeration_suites(&c, max_n)?);
    suites.extend(family_structure_suites(FAMILY_CAP)?);
    suites.push(submatrix_suite(max_n.min(SUBMATRIX_CAP))?);
    Ok(suites)
}

fn graph_core_suites(c: &Corpora, max_n: usize) -> Vec<SuiteResult> {
    let connected = c.connected_up_to(max_n.min(EXACT_CAP));
    let all = c.all_up_to(max_n.min(LAPLACIAN_CAP));
    let everything = c.connected_up_to(max_n);
    vec![
        run_suite("distance-table-matches-floyd-warshall", &connected, |g| {
            let t = g.distance_table().ok()?;
            let fw = floyd_warshall(g);
            let n = g.order();
            let ok = (0..n).all(|i| (0..n).all(|j| fw[i * n + j] == Some(t.get(i, j))));
            (!ok).then(|| Failure::of(g, "BFS distances differ from Floyd-Warshall"))
        }),
        run_suite("diameter-one-iff-complete", &connected, |g| {
            let d = g.diameter().ok()?;
            ((d == 1) != (g.is_complete() && g.order() > 1)).then(|| Failure::of(g, format!("diameter {d}")))
        }),
        run_suite("complement-involution", &all, |g| {
            (g.complement().complement() != **g).then(|| Failure::of(g, "complement twice differs"))
        }),
        run_suite("graph6-round-trip", &everything, |g| {
            let code = to_graph6(g);
            (parse_graph6(&code).ok().as_ref() != Some(*g)).then(|| Failure::of(g, format!("{code} does not round-trip")))
        }),
    ]
}

fn floyd_warshall(g: &Graph) -> Vec<Option<u32>> {
    let n = g.order();
    let mut d = vec![None; n * n];
    for i in 0..n {
        d[i * n + i] = Some(0);
        for j in bits(g.neighbors(i)) {
            d[i * n + j] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i * n + k], d[k * n + j]) {
                    if d[i * n + j].is_none_or(|x| a + b < x) {
                        d[i * n + j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn linalg_suites(c: &Corpora, config: &PropertyConfig) -> Vec<SuiteResult> {
    let items = c.items_up_to(config.max_n.min(NUMERIC_CAP));
    let mut suites = vec![
        run_suite("multiplicities-sum-to-order", &items, |it| {
            (it.spectrum.len() != it.order())
                .then(|| Failure::of(&it.graph, format!("multiplicities sum to {}", it.spectrum.len())))
        }),
        run_suite("zero-eigenvalue-simple", &items, |it| {
            let m = squarefree_decompose(it.poly.as_poly()).multiplicity_at(&BigInt::from(0));
            (m != 1).then(|| Failure::of(&it.graph, format!("zero has multiplicity {m}")))
        }),
        run_suite("squarefree-expansion-identity", &items, |it| {
            (squarefree_decompose(it.poly.as_poly()).expand() != *it.poly.as_poly())
                .then(|| Failure::of(&it.graph, "expanded factorization differs"))
        }),
        run_suite("numeric-exact-agreement", &items, |it| {
            let n = it.order();
            let max_entry = it.dl.max_abs_entry().to_f64().unwrap_or(f64::INFINITY);
            let tol = 1e-8 * (1.0 + n as f64 * max_entry);
            match numeric_eigenvalues(&it.dl) {
                Err(e) => Some(Failure::of(&it.graph, e.to_string())),
                Ok(values) => {
                    let exact = it.spectrum.expanded();
                    let ok = values.len() == exact.len()
                        && values.iter().zip(&exact).all(|(v, r)| within_tolerance(*v, r, tol));
                    (!ok).then(|| Failure::of(&it.graph, format!("numeric {values:?} vs exact {}", it.spectrum)))
                }
            }
        }),
    ];

    let one_step: Vec<(&Item, u64)> = c
        .items_up_to(config.max_n.min(LAPLACIAN_CAP))
        .into_iter()
        .filter(|it| it.order() >= 2)
        .flat_map(|it| {
            let full = full_mask(it.order());
            (0..it.order()).map(move |v| (it, full & !(1 << v)))
        })
        .collect();
    suites.push(run_suite("interlacing-one-step", &one_step, |(it, subset)| {
        (!interlaces(&it.dl, *subset)).then(|| Failure::of(&it.graph, format!("subset {subset:#b}")))
    }));

    let order = config.max_n.min(INTERLACING_SAMPLE_ORDER);
    let pool = &c.connected[order];
    let mut rng = stream(config.seed, 1);
    let samples: Vec<(&Graph, u64)> = if order < 2 {
        Vec::new()
    } else {
        (0..config.samples)
            .map(|_| {
                let g = &pool[rng.gen_range(0..pool.len())];
                (g, rng.gen_range(1..full_mask(order)))
            })
            .collect()
    };
    suites.push(run_suite("interlacing-random-subsets", &samples, |(g, subset)| {
        match interlacing_check(g, *subset) {
            Ok(true) => None,
            Ok(false) => Some(Failure::of(g, format!("subset {subset:#b}"))),
            Err(e) => Some(Failure::of(g, e.to_string())),
        }
    }));
    suites
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Numeric eigenvalues of the principal submatrix of the distance
/// Laplacian on `subset` interlace those of the full matrix.
pub fn interlacing_check(g: &Graph, subset: u64) -> Result<bool, VerifyError> {
    let n = g.order();
    if subset == 0 || subset & !full_mask(n) != 0 || subset == full_mask(n) {
        return Err(VerifyError::OutOfRange { n: subset.count_ones() as usize, range: format!("proper nonempty subset of {n} vertices") });
    }
    let dl = distance_laplacian_of_table(&g.distance_table()?);
    Ok(interlaces(&dl, subset))
}

fn interlaces(a: &IntSymMatrix, subset: u64) -> bool {
    let n = a.order();
    let idx: Vec<usize> = bits(subset).collect();
    let m = idx.len();
    let sub = a.principal_submatrix(&idx).expect("indices in range");
    let (Ok(la), Ok(lm)) = (numeric_eigenvalues(a), numeric_eigenvalues(&sub)) else {
        return false;
    };
    (0..m).all(|i| la[i] + INTERLACING_TOL >= lm[i] && lm[i] + INTERLACING_TOL >= la[n - m + i])
}

fn spectra_suites(c: &Corpora, config: &PropertyConfig) -> Result<Vec<SuiteResult>, VerifyError> {
    let exact = c.items_up_to(config.max_n.min(EXACT_CAP));
    let diameter_two: Vec<&Item> = exact.iter().copied().filter(|it| it.table.diameter() <= 2).collect();
    let nontrivial: Vec<&Item> = exact.iter().copied().filter(|it| it.order() >= 2).collect();
    let mut suites = vec![
        run_suite("diameter-two-transfer", &diameter_two, |it| match dl_spectrum_from_laplacian(&it.graph) {
            Ok(s) if s == it.spectrum => None,
            Ok(s) => Some(Failure::of(&it.graph, format!("transfer gives {s}, direct {}", it.spectrum))),
            Err(e) => Some(Failure::of(&it.graph, e.to_string())),
        }),
        run_suite("diameter-two-eigenvectors", &diameter_two, |it| diameter_two_eigenvectors(it)),
        run_suite("second-smallest-bound", &exact, |it| second_smallest(it)),
        run_suite("largest-vs-max-transmission", &nontrivial, |it| {
            let top = it.spectrum.largest()?;
            let bound = BigInt::from(it.table.transmissions().into_iter().max().unwrap_or(0) + 1);
            let cmp = top.root.cmp_integer(&bound);
            let ok = cmp != Ordering::Less && (cmp == Ordering::Equal) == it.graph.is_complete();
            (!ok).then(|| Failure::of(&it.graph, format!("largest {:?} vs max transmission + 1 = {bound}", top.root)))
        }),
    ];
    suites.push(edge_deletion_suite(c, config)?);
    suites.extend(laplacian_suites(c, config.max_n.min(LAPLACIAN_CAP)));
    Ok(suites)
}

fn diameter_two_eigenvectors(it: &Item) -> Option<Failure> {
    let n = it.order();
    let l = laplacian(&it.graph);
    let dec = match jacobi_eigen(n, &l.to_f64()) {
        Ok(d) => d,
        Err(e) => return Some(Failure::of(&it.graph, e.to_string())),
    };
    let a = it.dl.to_f64();
    for k in 0..n {
        let mu = dec.values[k];
        if mu.abs() <= EIGENVECTOR_TOL {
            continue;
        }
        let x = dec.vector(k);
        let target = 2.0 * n as f64 - mu;
        let residual = (0..n)
            .map(|i| ((0..n).map(|j| a[i * n + j] * x[j]).sum::<f64>() - target * x[i]).abs())
            .fold(0.0, f64::max);
        if residual > EIGENVECTOR_TOL {
            return Some(Failure::of(&it.graph, format!("Laplacian eigenvector for {mu} has residual {residual:e}")));
        }
    }
    None
}

fn second_smallest(it: &Item) -> Option<Failure> {
    let n = it.order();
    if n < 2 {
        return None;
    }
    let entries = it.spectrum.entries();
    let second = &entries[entries.len() - 2].root;
    let nn = BigInt::from(n);
    let w = it.graph.complement().component_count();
    let cmp = second.cmp_integer(&nn);
    let mult = it.spectrum.multiplicity_of(&nn) as usize;
    let ok = cmp != Ordering::Less && (cmp == Ordering::Equal) == (w >= 2) && mult == w - 1;
    (!ok).then(|| {
        Failure::of(&it.graph, format!("second smallest {second:?}, multiplicity of n {mult}, complement components {w}"))
    })
}

fn edge_deletion_suite(c: &Corpora, config: &PropertyConfig) -> Result<SuiteResult, VerifyError> {
    let order = config.max_n.min(EDGE_SAMPLE_ORDER);
    let items: Vec<&Item> = c.items.iter().filter(|it| it.order() == order).collect();
    let candidates: Vec<(&Item, Vec<(usize, usize)>)> = items
        .into_iter()
        .map(|it| {
            let removable: Vec<_> =
                it.graph.edges().filter(|&(u, v)| it.graph.without_edge(u, v).is_ok_and(|h| h.is_connected())).collect();
            (it, removable)
        })
        .filter(|(_, r)| !r.is_empty())
        .collect();
    let mut rng = stream(config.seed, 2);
    let samples: Vec<(&Item, (usize, usize))> = if candidates.is_empty() {
        Vec::new()
    } else {
        (0..config.samples)
            .map(|_| {
                let (it, edges) = &candidates[rng.gen_range(0..candidates.len())];
                (*it, edges[rng.gen_range(0..edges.len())])
            })
            .collect()
    };
    Ok(run_suite("edge-deletion-monotone", &samples, |(it, (u, v))| {
        let h = it.graph.without_edge(*u, *v).expect("edge exists");
        let after = match dl_spectrum(&h) {
            Ok(s) => s.expanded(),
            Err(e) => return Some(Failure::of(&h, e.to_string())),
        };
        let before = it.spectrum.expanded();
        let ok = after.iter().zip(&before).all(|(a, b)| a.cmp_exact(b) != Ordering::Less);
        (!ok).then(|| Failure::of(&it.graph, format!("deleting {u}-{v} lowers an eigenvalue: {} to {}", it.spectrum, dl_spectrum(&h).expect("connected"))))
    }))
}

fn laplacian_suites(c: &Corpora, cap: usize) -> Vec<SuiteResult> {
    let graphs = c.all_up_to(cap);
    let spectra: Vec<(&Graph, ExactSpectrum)> = graphs.par_iter().map(|g| (*g, laplacian_spectrum(g))).collect();

    let mut suites = vec![
        run_suite("laplacian-zero-multiplicity", &spectra, |(g, s)| {
            let z = s.multiplicity_of(&BigInt::from(0)) as usize;
            (z != g.component_count()).then(|| Failure::of(g, format!("zero multiplicity {z}")))
        }),
        run_suite("laplacian-two-eigenvalues", &spectra, |(g, s)| {
            ((s.distinct_count() == 2) != is_equal_cliques_plus_isolated(g))
                .then(|| Failure::of(g, format!("{} distinct Laplacian eigenvalues", s.distinct_count())))
        }),
        run_suite("laplacian-complement-rule", &spectra, |(g, s)| {
            let direct = laplacian_spectrum(&g.complement());
            match complement_laplacian_spectrum(s, g.order()) {
                Ok(t) if t == direct => None,
                Ok(t) => Some(Failure::of(g, format!("rule gives {t}, direct {direct}"))),
                Err(e) => Some(Failure::of(g, e.to_string())),
            }
        }),
    ];

    let mut pairs = Vec::new();
    for (i, (g, _)) in spectra.iter().enumerate() {
        for (j, (h, _)) in spectra.iter().enumerate() {
            if g.order() + h.order() <= cap {
                pairs.push((i, j));
            }
        }
    }
    suites.push(run_suite("laplacian-join-rule", &pairs, |&(i, j)| {
        let ((g, sg), (h, sh)) = (&spectra[i], &spectra[j]);
        let joined = g.join(h).expect("small orders");
        if joined.complement() != g.complement().disjoint_union(&h.complement()).expect("small orders") {
            return Some(Failure::of(&joined, "complement of join is not the union of complements"));
        }
        let direct = laplacian_spectrum(&joined);
        match join_laplacian_spectrum(sg, g.order(), sh, h.order()) {
            Ok(t) if t == direct => None,
            Ok(t) => Some(Failure::of(&joined, format!("rule gives {t}, direct {direct}"))),
            Err(e) => Some(Failure::of(&joined, e.to_string())),
        }
    }));
    suites
}

/// `m K_k ∪ r K_1` with `k ≥ 2`, `m ≥ 1`.
fn is_equal_cliques_plus_isolated(g: &Graph) -> bool {
    let mut clique_order = None;
    for comp in g.components() {
        let size = comp.count_ones();
        if size == 1 {
            continue;
        }
        if !bits(comp).all(|v| g.neighbors(v) == comp & !(1 << v)) {
            return false;
        }
        match clique_order {
            None => clique_order = Some(size),
            Some(k) if k == size => {}
            Some(_) => return false,
        }
    }
    clique_order.is_some()
}

fn pattern_suites(c: &Corpora, max_n: usize) -> Vec<SuiteResult> {
    let all = c.all_up_to(max_n.min(EXACT_CAP));
    let small = c.all_up_to(max_n.min(LAPLACIAN_CAP));
    let diameter_three: Vec<&Graph> = c
        .connected_up_to(max_n.min(PATTERN_CAP))
        .into_par_iter()
        .filter(|g| g.order() >= 5 && g.diameter().ok() == Some(3) && is_p5_free(g))
        .collect();
    vec![
        run_suite("cograph-iff-p4-free", &all, |g| {
            (is_cograph(g) != is_p4_free(g)).then(|| Failure::of(g, "cograph test disagrees with P4 search"))
        }),
        run_suite("cograph-iff-induced-diameter-two", &small, |g| {
            let n = g.order();
            let short = (1..=full_mask(n)).all(|mask| {
                let h = g.induced_subgraph(mask).expect("mask in range");
                !h.is_connected() || h.diameter().map_or(true, |d| d <= 2)
            });
            (short != is_cograph(g)).then(|| Failure::of(g, "induced-diameter test disagrees with cograph test"))
        }),
        run_suite("p5-free-diameter-three-contains-i", &diameter_three, |g| {
            (!PatternName::I_PATTERNS.into_iter().any(|p| contains_pattern(g, p)))
                .then(|| Failure::of(g, "contains none of I1..I5"))
        }),
        run_suite("p5-free-diameter-three-j-structure", &diameter_three, |g| {
            let avoided = [PatternName::I1, PatternName::I2, PatternName::I4, PatternName::I5];
            let free = !avoided.into_iter().any(|p| contains_pattern(g, p));
            (free && j_graph_recognize(g).is_none()).then(|| Failure::of(g, "avoids I1, I2, I4, I5 but is not J(a,b)"))
        }),
    ]
}

fn enumeration_suites(c: &Corpora, max_n: usize) -> Result<Vec<SuiteResult>, VerifyError> {
    let mut counts = SuiteBuilder::new("enumeration-counts");
    for n in 1..=max_n {
        let got = c.connected[n].len();
        if got != CONNECTED_COUNTS[n - 1] {
            counts.fail_note(format!("n={n}: {got} connected graphs, expected {}", CONNECTED_COUNTS[n - 1]));
        }
        counts.record(None);
    }
    for n in 1..c.all.len() {
        let got = c.all[n].len();
        if got != ALL_COUNTS[n - 1] {
            counts.fail_note(format!("n={n}: {got} graphs, expected {}", ALL_COUNTS[n - 1]));
        }
        counts.record(None);
    }

    let mut distinct = SuiteBuilder::new("canonical-forms-distinct");
    for n in 1..=max_n {
        let mut forms = c.connected[n].par_iter().map(canonical_form).collect::<Result<Vec<_>, _>>()?;
        let total = forms.len();
        forms.sort_unstable();
        forms.dedup();
        if forms.len() != total {
            distinct.fail_note(format!("n={n}: {} duplicate canonical forms", total - forms.len()));
        }
        distinct.record(None);
    }
    Ok(vec![counts.finish(), distinct.finish()])
}

/// Every 5-vertex principal submatrix of a classified member's distance
/// Laplacian has the member's largest eigenvalue with multiplicity ≥ 2.
fn submatrix_suite(cap: usize) -> Result<SuiteResult, VerifyError> {
    let mut cases = Vec::new();
    for n in CLASSIFICATION_MIN_ORDER..=cap {
        for m in classified_family_members(n)? {
            let dl = distance_laplacian_of_table(&m.graph.distance_table()?);
            let top = dl_spectrum(&m.graph)?.largest().and_then(|e| e.root.as_integer().cloned());
            let top = top.expect("classified members have an integral largest eigenvalue");
            for subset in (0..1u64 << n).filter(|s| s.count_ones() == 5) {
                cases.push((m.graph.clone(), dl.clone(), top.clone(), subset));
            }
        }
    }
    Ok(run_suite("principal-5-submatrix-double-eigenvalue", &cases, |(g, dl, top, subset)| {
        let idx: Vec<usize> = bits(*subset).collect();
        let sub = dl.principal_submatrix(&idx).expect("indices in range");
        let exact = squarefree_decompose(sub.char_poly().as_poly()).multiplicity_at(top);
        let target = top.to_f64().unwrap_or(f64::NAN);
        let numeric = numeric_eigenvalues(&sub)
            .map(|vals| vals.iter().filter(|v| (**v - target).abs() <= INTERLACING_TOL).count())
            .unwrap_or(0);
        (exact < 2 || numeric < 2).then(|| {
            Failure::of(g, format!("subset {subset:#b}: {top} has exact multiplicity {exact}, numeric {numeric}"))
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let config = PropertyConfig { max_n: 6, samples: 50, seed: 7, workers: Some(2) };
        let report = property_suite(&config).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert_eq!(report.suite("enumeration-counts").unwrap().checked, 12);
        // K_{2,4}, K_{3,3}+e, K_{1,5}+e, K_2∇4K_1, K_{2,2,2}: six 5-subsets each.
        assert_eq!(report.suite("principal-5-submatrix-double-eigenvalue").unwrap().checked, 30);
        assert_eq!(report.suite("edge-deletion-monotone").unwrap().checked, 50);
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let config = PropertyConfig { max_n: 5, samples: 20, seed: 11, workers: Some(1) };
        let a = property_suite(&config).unwrap();
        let b = property_suite(&PropertyConfig { workers: Some(3), ..config }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn interlacing_examples() {
        let k24 = crate::families::FamilySpec::CompleteMultipartite { parts: vec![2, 4] }.build().unwrap();
        for v in 0..6 {
            assert!(interlacing_check(&k24, 0b111111 & !(1 << v)).unwrap());
        }
        assert!(interlacing_check(&k24, 0).is_err());
        assert!(interlacing_check(&k24, 0b111111).is_err());
    }

    #[test]
    fn clique_union_shape() {
        let two_k3 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert!(is_equal_cliques_plus_isolated(&two_k3.disjoint_union(&Graph::empty(2).unwrap()).unwrap()));
        assert!(!is_equal_cliques_plus_isolated(&Graph::empty(3).unwrap()));
        let mixed = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert!(!is_equal_cliques_plus_isolated(&mixed));
    }

    #[test]
    fn order_range() {
        let bad = PropertyConfig { max_n: 10, ..PropertyConfig::default() };
        assert!(property_suite(&bad).is_err());
    }
}
