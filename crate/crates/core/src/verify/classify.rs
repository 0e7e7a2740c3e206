//! The `m(∂₁) = n - 3` class of a sweep against the expected family list.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::report::{Failure, SuiteBuilder, SuiteResult, Verdict, VerifyReport};
use super::sweep::{Corpus, GraphRecord, Sweep, SweepOptions};
use super::{check_sweep_order, VerifyError};
use crate::enumerate::{canonical_form, CanonicalForm};
use crate::families::{expected_class, FamilySpec, CLASSIFICATION_MIN_ORDER};
use crate::graph::{to_graph6, Graph};
use crate::linalg::ExactSpectrum;
use crate::spectra::dl_spectrum;

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub report: VerifyReport,
    /// Every graph of the corpus, sorted by canonical form.
    pub records: Vec<GraphRecord>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn class(&self) -> impl Iterator<Item = &GraphRecord> {
        let target = self.report.n.saturating_sub(3) as u32;
        self.records.iter().filter(move |r| r.multiplicity == target)
    }
}

struct ClassMember {
    graph: Graph,
    spectrum: ExactSpectrum,
    max_transmission: u64,
    expected: Option<FamilySpec>,
}

/// Sweeps the corpus and compares its `m(∂₁) = n - 3` class with the
/// expected families.
pub fn classify_sweep(corpus: Corpus, options: &SweepOptions) -> Result<ClassificationReport, VerifyError> {
    check_sweep_order(&corpus)?;
    let n = corpus.order();
    let sweep = Sweep::run(corpus, options)?;

    let mut expected: BTreeMap<CanonicalForm, (FamilySpec, Graph)> = BTreeMap::new();
    for spec in expected_class(n)? {
        let g = spec.build()?;
        expected.insert(canonical_form(&g)?, (spec, g));
    }

    let class_graphs: Vec<Graph> = sweep.class().map(GraphRecord::graph).collect();
    let members: Vec<ClassMember> = super::sweep::with_pool(options.workers, || {
        class_graphs
            .par_iter()
            .map(|g| {
                let cf = canonical_form(g)?;
                Ok(ClassMember {
                    spectrum: dl_spectrum(g)?,
                    max_transmission: g.transmissions()?.into_iter().max().unwrap_or(0),
                    expected: expected.get(&cf).map(|(s, _)| s.clone()),
                    graph: g.clone(),
                })
            })
            .collect::<Result<Vec<_>, VerifyError>>()
    })??;

    let found: Vec<CanonicalForm> = members.iter().map(|m| canonical_form(&m.graph)).collect::<Result<_, _>>()?;
    let missing: Vec<String> = expected
        .iter()
        .filter(|(cf, _)| !found.contains(cf))
        .map(|(_, (_, g))| to_graph6(g))
        .collect();
    let unexpected: Vec<String> =
        members.iter().filter(|m| m.expected.is_none()).map(|m| to_graph6(&m.graph)).collect();

    let suites = class_suites(n, &members);
    let verdict = if missing.is_empty() && unexpected.is_empty() { Verdict::Match } else { Verdict::Mismatch };
    let report = VerifyReport {
        kind: "classification".to_string(),
        n,
        count: sweep.len(),
        class_size: members.len(),
        verdict,
        missing,
        unexpected,
        suites,
        cospectral_groups: None,
    };
    Ok(ClassificationReport { report, records: sweep.records })
}

/// Both small orders whose class is listed explicitly.
pub fn remark45(options: &SweepOptions) -> Result<Vec<ClassificationReport>, VerifyError> {
    [4, 5].into_iter().map(|n| classify_sweep(Corpus::BuiltIn(n), options)).collect()
}

fn class_suites(n: usize, members: &[ClassMember]) -> Vec<SuiteResult> {
    let mut suites = Vec::new();
    let check = |name: &str, f: &dyn Fn(&ClassMember) -> Option<String>| {
        let mut b = SuiteBuilder::new(name);
        for m in members {
            b.record(f(m).map(|note| Failure::of(&m.graph, note)));
        }
        b.finish()
    };

    suites.push(check("class-p5-free", &|m| {
        (!crate::patterns::is_p5_free(&m.graph)).then(|| "contains an induced P5".to_string())
    }));
    if n < CLASSIFICATION_MIN_ORDER {
        return suites;
    }
    suites.push(check("class-complement-disconnected", &|m| {
        (m.graph.complement().is_connected()).then(|| "complement is connected".to_string())
    }));
    suites.push(check("class-diameter-two", &|m| match m.graph.diameter() {
        Ok(2) => None,
        Ok(d) => Some(format!("diameter {d}")),
        Err(e) => Some(e.to_string()),
    }));
    suites.push(check("class-largest-integral", &|m| {
        let top = m.spectrum.largest()?;
        (!top.root.is_integer()).then(|| format!("largest eigenvalue {:?} is not an integer", top.root))
    }));
    suites.push(check("class-largest-exceeds-transmission", &|m| {
        let top = m.spectrum.largest()?;
        let bound = BigInt::from(m.max_transmission + 2);
        (top.root.cmp_integer(&bound).is_lt())
            .then(|| format!("largest eigenvalue {:?} below max transmission + 2 = {bound}", top.root))
    }));
    suites.push(check("class-distinct-eigenvalue-split", &|m| {
        let distinct = m.spectrum.distinct_count();
        let Some(family) = m.expected.as_ref().and_then(FamilySpec::classified) else {
            return Some(format!("not a classified family member ({distinct} distinct eigenvalues)"));
        };
        let want = if family.has_four_distinct_eigenvalues() { 4 } else { 3 };
        (distinct != want).then(|| format!("{distinct} distinct eigenvalues, expected {want}"))
    }));
    suites
}
