//! Canonical forms by individualization–refinement.
//!
//! The search tree branches on the vertices of the first non-singleton cell
//! of an equitable ordered partition; each leaf fixes a vertex order and
//! hence an upper-triangle code. The canonical code is the largest leaf
//! code. Subtrees are skipped when an automorphism found so far (fixing
//! the current branch prefix) maps them onto an explored sibling.

use thiserror::Error;

use crate::graph::{bits, full_mask, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical form supports at most {CANON_MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// Isomorphism-class key: the order plus the canonical upper-triangle code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        usize::from(self.n)
    }

    /// Upper-triangle bits in column order, first pair most significant.
    pub fn code(&self) -> u64 {
        self.code
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * n.saturating_sub(1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_adjacency_rows(&rows).expect("decoded rows are symmetric and loop-free")
    }
}

/// Code of the graph relabeled by `lab` (old vertex → new position).
pub(crate) fn code_under(rows: &[u64], lab: &[usize]) -> u64 {
    let n = rows.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut code = 0u64;
    for (u, &row) in rows.iter().enumerate() {
        for v in bits(row >> u >> 1 << u << 1) {
            let (i, j) = if lab[u] < lab[v] { (lab[u], lab[v]) } else { (lab[v], lab[u]) };
            code |= 1 << (total - 1 - (j * (j - 1) / 2 + i));
        }
    }
    code
}

fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(rows.len());
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(rows.len());
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                scratch.clear();
                scratch.extend(bits(cell).map(|v| ((rows[v] & splitter).count_ones(), v)));
                scratch.sort_unstable();
                let mut part = 0u64;
                let mut key = scratch[0].0;
                for &(k, v) in &scratch {
                    if k != key {
                        next.push(part);
                        part = 0;
                        key = k;
                        changed = true;
                    }
                    part |= 1 << v;
                }
                next.push(part);
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<(u64, Vec<usize>)>,
    first: Option<(u64, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn record_automorphism(&mut self, reference: &[usize], lab: &[usize]) {
        // reference(g) = lab(g), so v ↦ reference⁻¹(lab(v)) preserves edges.
        let n = lab.len();
        let mut inv = vec![0; n];
        for (v, &p) in reference.iter().enumerate() {
            inv[p] = v;
        }
        let gamma: Vec<usize> = lab.iter().map(|&p| inv[p]).collect();
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.automorphisms.push(gamma);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let mut lab = vec![0; self.rows.len()];
        for (pos, &cell) in cells.iter().enumerate() {
            lab[cell.trailing_zeros() as usize] = pos;
        }
        let code = code_under(self.rows, &lab);
        if let Some((c, first)) = &self.first {
            if *c == code {
                let first = first.clone();
                self.record_automorphism(&first, &lab);
            }
        } else {
            self.first = Some((code, lab.clone()));
        }
        match &self.best {
            Some((c, _)) if *c > code => {}
            Some((c, best)) if *c == code => {
                let best = best.clone();
                self.record_automorphism(&best, &lab);
            }
            _ => self.best = Some((code, lab)),
        }
    }

    /// Orbit representative of `v` under the discovered automorphisms that
    /// fix every vertex of `prefix`.
    fn orbit_find(&self, prefix: &[usize], n: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn visit(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.rows, &mut cells);
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() {
                let orbit = self.orbit_find(prefix, self.rows.len());
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical code and a labeling (old vertex → canonical position) that
/// realizes it.
pub(crate) fn canonical_code(rows: &[u64]) -> (u64, Vec<usize>) {
    let n = rows.len();
    let mut search = Search {
        rows,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    search.visit(vec![full_mask(n)], &mut Vec::new());
    search.best.expect("search tree has at least one leaf")
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// Canonical form together with a labeling (old vertex → canonical
/// position) that maps `g` onto [`CanonicalForm::to_graph`].
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(CanonError::TooLarge(n));
    }
    let (code, lab) = canonical_code(g.rows());
    Ok((CanonicalForm { n: n as u8, code }, lab))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    Ok(a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Maximum code over every permutation, by Heap's algorithm.
    fn brute_force_code(rows: &[u64]) -> u64 {
        let n = rows.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = code_under(rows, &perm);
        let mut c = vec![0; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                best = best.max(code_under(rows, &perm));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    fn labeled_graph(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn path_invariance_and_star_distinct() {
        let p4 = path(4);
        let relabeled = p4.permute(&[2, 0, 3, 1]);
        assert_eq!(canonical_form(&p4), canonical_form(&relabeled));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&star));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let comp = c5.complement();
        // Explicit isomorphism C5 → complement: i ↦ 2i mod 5.
        let perm: Vec<usize> = (0..5).map(|i| 2 * i % 5).collect();
        assert_eq!(c5.permute(&perm), comp);
        assert_eq!(canonical_form(&c5), canonical_form(&comp));
    }

    #[test]
    fn labeling_realizes_form() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (2, 5)]).unwrap();
        let (form, lab) = canonical_labeling(&g).unwrap();
        assert_eq!(g.permute(&lab), form.to_graph());
        assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }

    #[test]
    fn order_cap() {
        assert_eq!(canonical_form(&Graph::empty(11).unwrap()), Err(CanonError::TooLarge(11)));
        assert!(canonical_form(&Graph::complete(10).unwrap()).is_ok());
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [
            Graph::complete(10).unwrap(),
            Graph::empty(10).unwrap(),
            Graph::complete(5).unwrap().disjoint_union(&Graph::complete(5).unwrap()).unwrap(),
        ] {
            let form = canonical_form(&g).unwrap();
            assert_eq!(form.to_graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn classes_match_brute_force_up_to_six() {
        use std::collections::HashMap;
        for n in 1..=6 {
            let total = n * (n - 1) / 2;
            let mut brute_to_canon: HashMap<u64, CanonicalForm> = HashMap::new();
            let mut canon_to_brute: HashMap<CanonicalForm, u64> = HashMap::new();
            for mask in 0..1u64 << total {
                let g = labeled_graph(n, mask);
                let (b, c) = (brute_force_code(g.rows()), canonical_form(&g).unwrap());
                assert_eq!(*brute_to_canon.entry(b).or_insert(c), c, "n={n} mask={mask}");
                assert_eq!(*canon_to_brute.entry(c).or_insert(b), b, "n={n} mask={mask}");
            }
            // graphs on n vertices up to isomorphism
            assert_eq!(brute_to_canon.len(), [1, 2, 4, 11, 34, 156][n - 1]);
        }
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(n in 1usize..=10, mask in any::<u64>(), seed in any::<u64>()) {
            let g = labeled_graph(n, mask & full_mask(n * (n - 1) / 2));
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed | 1;
            for i in (1..n).rev() {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                perm.swap(i, (s % (i as u64 + 1)) as usize);
            }
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute(&perm)).unwrap());
        }

        #[test]
        fn agrees_with_brute_force_isomorphism_at_six(a in 0u64..1 << 15, b in 0u64..1 << 15) {
            let (ga, gb) = (labeled_graph(6, a), labeled_graph(6, b));
            let same = brute_force_code(ga.rows()) == brute_force_code(gb.rows());
            prop_assert_eq!(canonical_form(&ga).unwrap() == canonical_form(&gb).unwrap(), same);
        }
    }
}
