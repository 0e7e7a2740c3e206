//! Induced-subgraph patterns and the structural predicates built on them.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::graph::{bits, full_mask, parse_graph6, Graph};

const FIXTURE: &str = include_str!("../data/patterns.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternName {
    P4,
    P5,
    I1,
    I2,
    I3,
    I4,
    I5,
    J1,
    J2,
    J3,
}

impl PatternName {
    pub const ALL: [PatternName; 10] = [
        PatternName::P4,
        PatternName::P5,
        PatternName::I1,
        PatternName::I2,
        PatternName::I3,
        PatternName::I4,
        PatternName::I5,
        PatternName::J1,
        PatternName::J2,
        PatternName::J3,
    ];
    pub const I_PATTERNS: [PatternName; 5] =
        [PatternName::I1, PatternName::I2, PatternName::I3, PatternName::I4, PatternName::I5];
    pub const J_PATTERNS: [PatternName; 3] = [PatternName::J1, PatternName::J2, PatternName::J3];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternName::P4 => "P4",
            PatternName::P5 => "P5",
            PatternName::I1 => "I1",
            PatternName::I2 => "I2",
            PatternName::I3 => "I3",
            PatternName::I4 => "I4",
            PatternName::I5 => "I5",
            PatternName::J1 => "J1",
            PatternName::J2 => "J2",
            PatternName::J3 => "J3",
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PatternName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        PatternName::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown pattern `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    pub name: PatternName,
    pub graph: Graph,
}

fn load_fixture() -> Vec<PatternGraph> {
    let mut out: Vec<PatternGraph> = FIXTURE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut fields = line.split_whitespace();
            let name = fields.next().and_then(|s| s.parse().ok()).expect("pattern name");
            let graph = parse_graph6(fields.next().expect("graph6 field")).expect("valid pattern graph6");
            PatternGraph { name, graph }
        })
        .collect();
    out.sort_by_key(|p| p.name);
    assert_eq!(out.len(), PatternName::ALL.len(), "pattern fixture is incomplete");
    out
}

pub fn pattern(name: PatternName) -> &'static PatternGraph {
    static PATTERNS: OnceLock<Vec<PatternGraph>> = OnceLock::new();
    let all = PATTERNS.get_or_init(load_fixture);
    &all[PatternName::ALL.iter().position(|&p| p == name).expect("listed")]
}

/// Whether some vertex subset of `g` induces a copy of `p`.
///
/// Backtracking over injections, pattern vertices taken in decreasing
/// degree order, candidates pruned by degree and by adjacency to the
/// vertices already placed.
pub fn contains_induced(g: &Graph, p: &Graph) -> bool {
    let k = p.order();
    if k > g.order() {
        return false;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(p.degree(v)));
    let mut image = vec![0usize; k];
    extend(g, p, &order, 0, 0, &mut image)
}

fn extend(g: &Graph, p: &Graph, order: &[usize], depth: usize, used: u64, image: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut candidates = full_mask(g.order()) & !used;
    for &w in &order[..depth] {
        let target = image[w];
        candidates &= if p.has_edge(v, w) {
            g.neighbors(target)
        } else {
            !g.neighbors(target)
        };
    }
    let need = p.degree(v);
    for c in bits(candidates) {
        if g.degree(c) < need {
            continue;
        }
        image[v] = c;
        if extend(g, p, order, depth + 1, used | 1 << c, image) {
            return true;
        }
    }
    false
}

pub fn contains_pattern(g: &Graph, name: PatternName) -> bool {
    contains_induced(g, &pattern(name).graph)
}

pub fn is_p4_free(g: &Graph) -> bool {
    !contains_pattern(g, PatternName::P4)
}

pub fn is_p5_free(g: &Graph) -> bool {
    !contains_pattern(g, PatternName::P5)
}

/// Recursive cograph test: a single vertex, or a graph whose own or whose
/// complement's components are all cographs.
pub fn is_cograph(g: &Graph) -> bool {
    cograph_on(g, full_mask(g.order()))
}

fn cograph_on(g: &Graph, subset: u64) -> bool {
    if subset.count_ones() <= 1 {
        return true;
    }
    let sub = g.induced_subgraph(subset).expect("nonempty subset");
    let lift = |mask: u64| -> u64 {
        let verts: Vec<usize> = bits(subset).collect();
        bits(mask).fold(0, |acc, i| acc | 1 << verts[i])
    };
    let comps = sub.components();
    if comps.len() > 1 {
        return comps.into_iter().all(|c| cograph_on(g, lift(c)));
    }
    let co = sub.complement().components();
    if co.len() > 1 {
        return co.into_iter().all(|c| cograph_on(g, lift(c)));
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JGraphMatch {
    pub a: usize,
    pub b: usize,
    /// `roots.0` is adjacent to the `a` pendants, `roots.1` to the `b`.
    pub roots: (usize, usize),
}

/// Recognizes `J(a, b)`. Parameters are reported with `a ≥ b`.
pub fn j_graph_recognize(g: &Graph) -> Option<JGraphMatch> {
    let n = g.order();
    let all = full_mask(n);
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            if g.has_edge(r1, r2) {
                continue;
            }
            let (x, y) = (g.neighbors(r1), g.neighbors(r2));
            if x == 0 || y == 0 || x & y != 0 || x | y | 1 << r1 | 1 << r2 != all {
                continue;
            }
            let independent = |s: u64| bits(s).all(|v| g.neighbors(v) & s == 0);
            let joined = bits(x).all(|v| g.neighbors(v) & y == y);
            if independent(x) && independent(y) && joined {
                let (a, b) = (x.count_ones() as usize, y.count_ones() as usize);
                return Some(if a >= b {
                    JGraphMatch { a, b, roots: (r1, r2) }
                } else {
                    JGraphMatch { a: b, b: a, roots: (r2, r1) }
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{canonical_form, enumerate_all};
    use crate::families::FamilySpec;

    fn edges(list: &[(usize, usize)]) -> Graph {
        Graph::from_edges(5, list.iter().copied()).unwrap()
    }

    #[test]
    fn fixture_matches_figure_reading() {
        let p4 = [(0, 1), (1, 2), (2, 3)];
        let with = |extra: &[(usize, usize)]| {
            let mut e = p4.to_vec();
            e.extend_from_slice(extra);
            edges(&e)
        };
        let expected = [
            (PatternName::I1, with(&[(4, 1)])),
            (PatternName::I2, with(&[(4, 0), (4, 1)])),
            (PatternName::I3, with(&[(4, 0), (4, 2)])),
            (PatternName::I4, with(&[(4, 1), (4, 2)])),
            (PatternName::I5, with(&[(4, 0), (4, 1), (4, 2)])),
            (PatternName::J1, with(&[(4, 0), (4, 3)])),
            (PatternName::J2, with(&[(4, 0), (4, 3), (4, 1)])),
            (PatternName::J3, with(&[(4, 0), (4, 1), (4, 2), (4, 3)])),
        ];
        for (name, g) in expected {
            assert_eq!(pattern(name).graph, g, "{name}");
        }
        assert_eq!(pattern(PatternName::P4).graph, FamilySpec::Path { n: 4 }.build().unwrap());
        assert_eq!(pattern(PatternName::P5).graph, FamilySpec::Path { n: 5 }.build().unwrap());
        // Each fixture line's edge list agrees with its graph6 field.
        for line in FIXTURE.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
            let mut f = line.split_whitespace();
            let name: PatternName = f.next().unwrap().parse().unwrap();
            f.next();
            let listed: Vec<(usize, usize)> = f
                .map(|e| {
                    let (u, v) = e.split_once('-').unwrap();
                    (u.parse().unwrap(), v.parse().unwrap())
                })
                .collect();
            let g = &pattern(name).graph;
            assert_eq!(Graph::from_edges(g.order(), listed).unwrap(), *g, "{name}");
        }
    }

    #[test]
    fn j_patterns_are_five_vertex_and_contain_p4() {
        for name in PatternName::J_PATTERNS {
            let g = &pattern(name).graph;
            assert_eq!(g.order(), 5);
            assert!(!is_p4_free(g), "{name}");
        }
        let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
        assert_eq!(canonical_form(&pattern(PatternName::J1).graph), canonical_form(&c5));
    }

    #[test]
    fn induced_search_examples() {
        let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
        assert!(contains_pattern(&c5, PatternName::P4));
        assert!(!is_p4_free(&c5));
        let k24 = FamilySpec::CompleteMultipartite { parts: vec![2, 4] }.build().unwrap();
        assert!(is_p5_free(&k24));
        let p5 = FamilySpec::Path { n: 5 }.build().unwrap();
        assert!(!is_p5_free(&p5));
        let j21 = FamilySpec::JGraph { a: 2, b: 1 }.build().unwrap();
        assert!(contains_pattern(&j21, PatternName::I3));
        // C_4 is not an induced subgraph of K_4 even though it is a subgraph.
        let c4 = FamilySpec::Cycle { n: 4 }.build().unwrap();
        assert!(!contains_induced(&Graph::complete(4).unwrap(), &c4));
        assert!(!contains_induced(&c4, &p5));
    }

    #[test]
    fn cograph_examples() {
        let k222 = FamilySpec::BalancedTripartite { n: 6 }.build().unwrap();
        assert!(is_cograph(&k222));
        assert!(!is_cograph(&FamilySpec::Path { n: 4 }.build().unwrap()));
        assert!(!is_cograph(&FamilySpec::Cycle { n: 5 }.build().unwrap()));
        assert!(is_cograph(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn cograph_agrees_with_p4_free_on_small_graphs() {
        for n in 1..=6 {
            for g in enumerate_all(n).unwrap() {
                assert_eq!(is_cograph(&g), is_p4_free(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn j_graph_recognition() {
        let j32 = FamilySpec::JGraph { a: 3, b: 2 }.build().unwrap();
        let m = j_graph_recognize(&j32).unwrap();
        assert_eq!((m.a, m.b), (3, 2));
        assert_eq!(m.roots, (0, 6));
        assert_eq!(j32.distance_table().unwrap().get(m.roots.0, m.roots.1), 3);
        let swapped = FamilySpec::JGraph { a: 1, b: 3 }.build().unwrap();
        assert_eq!(j_graph_recognize(&swapped).map(|m| (m.a, m.b)), Some((3, 1)));
        let i3 = &pattern(PatternName::I3).graph;
        assert_eq!(j_graph_recognize(i3).map(|m| (m.a, m.b)), Some((2, 1)));
        let k24 = FamilySpec::CompleteMultipartite { parts: vec![2, 4] }.build().unwrap();
        assert_eq!(j_graph_recognize(&k24), None);
        assert_eq!(j_graph_recognize(&FamilySpec::Path { n: 4 }.build().unwrap()).map(|m| (m.a, m.b)), Some((1, 1)));
    }
}
