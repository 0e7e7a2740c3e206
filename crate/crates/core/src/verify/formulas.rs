//! Closed-form spectra and structural properties of the classified families.

use rayon::prelude::*;

use super::report::{run_suite, Failure, SuiteBuilder, SuiteResult, VerifyReport};
use super::VerifyError;
use crate::families::{classified_family_members, ClassifiedFamily, FamilySpec, CLASSIFICATION_MIN_ORDER};
use crate::graph::{Graph, MAX_VERTICES};
use crate::linalg::ExactSpectrum;
use crate::patterns::{contains_pattern, is_p5_free, PatternName};
use crate::spectra::dl_spectrum;

pub const FORMULA_DEFAULT_MAX_N: usize = 14;

struct Member {
    n: usize,
    family: ClassifiedFamily,
    spec: FamilySpec,
    graph: Graph,
    spectrum: ExactSpectrum,
}

fn members(orders: impl Iterator<Item = usize>) -> Result<Vec<Member>, VerifyError> {
    let mut specs = Vec::new();
    for n in orders {
        for m in classified_family_members(n)? {
            specs.push((n, m));
        }
    }
    specs
        .into_par_iter()
        .map(|(n, m)| {
            Ok(Member { n, family: m.family, spectrum: dl_spectrum(&m.graph)?, spec: m.spec, graph: m.graph })
        })
        .collect()
}

fn check_range(max_n: usize) -> Result<(), VerifyError> {
    if (CLASSIFICATION_MIN_ORDER..=MAX_VERTICES).contains(&max_n) {
        Ok(())
    } else {
        Err(VerifyError::OutOfRange { n: max_n, range: format!("{CLASSIFICATION_MIN_ORDER}..={MAX_VERTICES}") })
    }
}

/// Exact spectra of every classified family at every `6 ≤ n ≤ max_n`
/// against their closed forms, plus the structural suites.
pub fn verify_formulas(max_n: usize) -> Result<VerifyReport, VerifyError> {
    check_range(max_n)?;
    let all = members(CLASSIFICATION_MIN_ORDER..=max_n)?;

    let mut closed = SuiteBuilder::new("closed-form-spectra");
    for m in &all {
        let formula = m.family.closed_form(m.n)?;
        closed.record((formula != m.spectrum).then(|| {
            Failure::of(&m.graph, format!("{}: computed {} but closed form {}", m.spec, m.spectrum, formula))
        }));
    }

    let mut distinct = SuiteBuilder::new("closed-forms-pairwise-distinct");
    for n in CLASSIFICATION_MIN_ORDER..=max_n {
        let forms: Vec<(ClassifiedFamily, ExactSpectrum)> = ClassifiedFamily::ALL
            .into_iter()
            .filter(|f| f.exists_at(n))
            .map(|f| Ok((f, f.closed_form(n)?)))
            .collect::<Result<_, VerifyError>>()?;
        for (i, (fa, sa)) in forms.iter().enumerate() {
            for (fb, sb) in &forms[i + 1..] {
                distinct.record((sa == sb).then(|| {
                    let g = fa.spec(n).build().expect("existing family builds");
                    Failure::of(&g, format!("{} and {} share the closed form {sa}", fa.spec(n), fb.spec(n)))
                }));
            }
        }
    }

    let mut suites = vec![closed.finish(), distinct.finish()];
    suites.extend(structure_suites(&all));
    Ok(VerifyReport::from_suites("formulas", max_n, suites))
}

/// Structural claims on every classified member with `6 ≤ n ≤ max_n`, and
/// the `J(a, b)` transmission formulas.
pub fn family_structure_suites(max_n: usize) -> Result<Vec<SuiteResult>, VerifyError> {
    check_range(max_n)?;
    Ok(structure_suites(&members(CLASSIFICATION_MIN_ORDER..=max_n)?))
}

fn structure_suites(all: &[Member]) -> Vec<SuiteResult> {
    let mut suites = vec![
        run_suite("members-connected-p5-free", all, |m| {
            (!m.graph.is_connected() || !is_p5_free(&m.graph))
                .then(|| Failure::of(&m.graph, format!("{} is disconnected or contains P5", m.spec)))
        }),
        run_suite("members-diameter-two", all, |m| {
            (m.graph.diameter().ok() != Some(2)).then(|| Failure::of(&m.graph, format!("{} diameter is not 2", m.spec)))
        }),
        run_suite("members-complement-disconnected", all, |m| {
            m.graph
                .complement()
                .is_connected()
                .then(|| Failure::of(&m.graph, format!("{} has connected complement", m.spec)))
        }),
        run_suite("members-largest-multiplicity", all, |m| {
            let top = m.spectrum.largest()?;
            let ok = top.root.is_integer() && top.multiplicity as usize == m.n - 3;
            (!ok).then(|| {
                Failure::of(&m.graph, format!("{}: largest {:?} with multiplicity {}", m.spec, top.root, top.multiplicity))
            })
        }),
        run_suite("members-distinct-eigenvalue-split", all, |m| {
            let want = if m.family.has_four_distinct_eigenvalues() { 4 } else { 3 };
            let got = m.spectrum.distinct_count();
            (got != want).then(|| Failure::of(&m.graph, format!("{}: {got} distinct eigenvalues, expected {want}", m.spec)))
        }),
        run_suite("members-j-free", all, |m| {
            PatternName::J_PATTERNS
                .into_iter()
                .find(|&p| contains_pattern(&m.graph, p))
                .map(|p| Failure::of(&m.graph, format!("{} contains {}", m.spec, p.as_str())))
        }),
    ];

    let params: Vec<(usize, usize)> = (1..=5).flat_map(|a| (1..=5).map(move |b| (a, b))).collect();
    suites.push(run_suite("j-graph-transmissions", &params, |&(a, b)| {
        let g = FamilySpec::JGraph { a, b }.build().expect("positive parameters");
        let tr: Vec<usize> = g.transmissions().expect("connected").into_iter().map(|t| t as usize).collect();
        let ok = tr[0] == a + 2 * b + 3
            && tr[a + b + 1] == 2 * a + b + 3
            && (1..=a).all(|x| tr[x] == 2 * a + b + 1)
            && (a + 1..=a + b).all(|y| tr[y] == a + 2 * b + 1);
        (!ok).then(|| Failure::of(&g, format!("J({a},{b}) transmissions {tr:?}")))
    }));
    suites
}
