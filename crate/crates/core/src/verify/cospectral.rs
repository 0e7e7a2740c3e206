//! Cospectral-mate search: graphs sharing a distance-Laplacian
//! characteristic polynomial.

use super::report::{Failure, SuiteBuilder, SuiteResult, Verdict, VerifyReport};
use super::sweep::{Corpus, Sweep, SweepOptions};
use super::{check_sweep_order, VerifyError};
use crate::enumerate::is_isomorphic;
use crate::families::expected_class;
use crate::graph::parse_graph6;
use crate::spectra::{dl_char_poly, spectrum_key};

#[derive(Debug, Clone)]
pub struct CospectralReport {
    pub report: VerifyReport,
    /// Groups of at least two graph6 codes with equal characteristic
    /// polynomials, in sweep order.
    pub groups: Vec<Vec<String>>,
}

impl CospectralReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Groups the corpus by spectrum and checks that no expected class member
/// shares its spectrum with another graph.
pub fn ds_check(corpus: Corpus, options: &SweepOptions) -> Result<CospectralReport, VerifyError> {
    check_sweep_order(&corpus)?;
    let n = corpus.order();
    let sweep = Sweep::run(corpus, options)?;

    let mut order: Vec<usize> = (0..sweep.len()).collect();
    order.sort_by(|&a, &b| sweep.records[a].spectrum_key.cmp(&sweep.records[b].spectrum_key).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match groups.last_mut() {
            Some(g) if sweep.records[g[0]].spectrum_key == sweep.records[idx].spectrum_key => g.push(idx),
            _ => groups.push(vec![idx]),
        }
    }
    let mut groups: Vec<Vec<usize>> = groups.into_iter().filter(|g| g.len() > 1).collect();
    groups.sort_by_key(|g| g[0]);

    let mut suites: Vec<SuiteResult> = Vec::new();
    let mut consistency = SuiteBuilder::new("groups-share-charpoly");
    for group in &groups {
        let polys: Vec<_> = group
            .iter()
            .map(|&i| dl_char_poly(&parse_graph6(&sweep.records[i].graph6).expect("sweep graph6")))
            .collect::<Result<_, _>>()?;
        let first = &sweep.records[group[0]];
        let ok = polys.iter().all(|p| p.coeffs() == polys[0].coeffs());
        consistency.record((!ok).then(|| Failure::of(&first.graph(), "group members differ in coefficients")));
    }
    suites.push(consistency.finish());

    let members = expected_class(n)?;
    let mut unexpected = Vec::new();
    let mut missing = Vec::new();
    for spec in &members {
        let g = spec.build()?;
        let key = hex::encode(spectrum_key(&g)?.as_bytes());
        let sharing: Vec<&super::GraphRecord> = sweep.records.iter().filter(|r| r.spectrum_key == key).collect();
        let mut b = SuiteBuilder::new(format!("ds-{}", spec.tag()));
        b.record(match sharing.as_slice() {
            [] => {
                missing.push(crate::graph::to_graph6(&g));
                Some(Failure::of(&g, format!("{spec} not present in the corpus")))
            }
            [only] if is_isomorphic(&only.graph(), &g)? => None,
            _ => {
                let mates: Vec<&str> = sharing.iter().map(|r| r.graph6.as_str()).collect();
                unexpected.extend(
                    sharing
                        .iter()
                        .filter(|r| !is_isomorphic(&r.graph(), &g).unwrap_or(false))
                        .map(|r| r.graph6.clone()),
                );
                Some(Failure::of(&g, format!("{spec} shares its spectrum with {}", mates.join(" "))))
            }
        });
        suites.push(b.finish());
    }

    let group_codes: Vec<Vec<String>> = groups
        .iter()
        .map(|g| g.iter().map(|&i| sweep.records[i].graph6.clone()).collect())
        .collect();
    let verdict = if missing.is_empty() && unexpected.is_empty() { Verdict::Match } else { Verdict::Mismatch };
    let report = VerifyReport {
        kind: "cospectral".to_string(),
        n,
        count: sweep.len(),
        class_size: members.len(),
        verdict,
        missing,
        unexpected,
        suites,
        cospectral_groups: Some(group_codes.clone()),
    };
    Ok(CospectralReport { report, groups: group_codes })
}
