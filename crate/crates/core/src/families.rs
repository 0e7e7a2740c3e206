//! Named graph families, the six families with `m(∂₁) = n - 3`, and their
//! closed-form distance-Laplacian spectra.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::linalg::ExactSpectrum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{0} is not one of the six classified families")]
    NotClassified(String),
    #[error("order {n} outside the supported range {range}")]
    OrderOutOfRange { n: usize, range: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// `K_{1,n-1}` with centre 0.
    Star { n: usize },
    /// Parts occupy consecutive vertex blocks in the given order.
    CompleteMultipartite { parts: Vec<usize> },
    /// `K_{1,n-1}` plus the edge `(1, 2)`.
    StarPlusEdge { n: usize },
    /// `K_{n/2,n/2}` plus the edge `(0, 1)` inside the first part.
    BalancedBipartitePlusEdge { n: usize },
    /// `K_2 ∇ (n-2)K_1`, the `K_2` on vertices 0 and 1.
    K2JoinEmpty { n: usize },
    /// `K_1 ∇ K_{(n-1)/2,(n-1)/2}`, the apex at vertex 0.
    K1JoinBalancedBipartite { n: usize },
    /// `K_{n/3,n/3,n/3}`.
    BalancedTripartite { n: usize },
    /// Roots 0 and `a+b+1`; pendants `1..=a` of the first root are joined to
    /// every pendant `a+1..=a+b` of the second.
    JGraph { a: usize, b: usize },
}

/// Optional parameters gathered from a command line or config.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub parts: Option<Vec<usize>>,
    pub a: Option<usize>,
    pub b: Option<usize>,
}

pub const FAMILY_TAGS: &[&str] = &[
    "complete",
    "path",
    "cycle",
    "star",
    "complete-multipartite",
    "star-plus-edge",
    "balanced-bipartite-plus-edge",
    "k2-join-empty",
    "k1-join-balanced-bipartite",
    "balanced-tripartite",
    "j-graph",
];

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

impl FamilySpec {
    pub fn from_tag(tag: &str, params: &FamilyParams) -> Result<FamilySpec, FamilyError> {
        let need_n = |family: &'static str| params.n.ok_or_else(|| invalid(family, "--n is required"));
        let spec = match tag {
            "complete" => FamilySpec::Complete { n: need_n("complete")? },
            "path" => FamilySpec::Path { n: need_n("path")? },
            "cycle" => FamilySpec::Cycle { n: need_n("cycle")? },
            "star" => FamilySpec::Star { n: need_n("star")? },
            "complete-multipartite" => FamilySpec::CompleteMultipartite {
                parts: params
                    .parts
                    .clone()
                    .ok_or_else(|| invalid("complete-multipartite", "--parts is required"))?,
            },
            "star-plus-edge" => FamilySpec::StarPlusEdge { n: need_n("star-plus-edge")? },
            "balanced-bipartite-plus-edge" => FamilySpec::BalancedBipartitePlusEdge {
                n: need_n("balanced-bipartite-plus-edge")?,
            },
            "k2-join-empty" => FamilySpec::K2JoinEmpty { n: need_n("k2-join-empty")? },
            "k1-join-balanced-bipartite" => FamilySpec::K1JoinBalancedBipartite {
                n: need_n("k1-join-balanced-bipartite")?,
            },
            "balanced-tripartite" => FamilySpec::BalancedTripartite { n: need_n("balanced-tripartite")? },
            "j-graph" => FamilySpec::JGraph {
                a: params.a.ok_or_else(|| invalid("j-graph", "--a is required"))?,
                b: params.b.ok_or_else(|| invalid("j-graph", "--b is required"))?,
            },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteMultipartite { .. } => "complete-multipartite",
            FamilySpec::StarPlusEdge { .. } => "star-plus-edge",
            FamilySpec::BalancedBipartitePlusEdge { .. } => "balanced-bipartite-plus-edge",
            FamilySpec::K2JoinEmpty { .. } => "k2-join-empty",
            FamilySpec::K1JoinBalancedBipartite { .. } => "k1-join-balanced-bipartite",
            FamilySpec::BalancedTripartite { .. } => "balanced-tripartite",
            FamilySpec::JGraph { .. } => "j-graph",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Complete { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n }
            | FamilySpec::StarPlusEdge { n }
            | FamilySpec::BalancedBipartitePlusEdge { n }
            | FamilySpec::K2JoinEmpty { n }
            | FamilySpec::K1JoinBalancedBipartite { n }
            | FamilySpec::BalancedTripartite { n } => *n,
            FamilySpec::CompleteMultipartite { parts } => parts.iter().sum(),
            FamilySpec::JGraph { a, b } => a + b + 2,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let tag = self.tag();
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(invalid(tag, format!("order {n} exceeds {MAX_VERTICES}")));
        }
        let min = match self {
            FamilySpec::Complete { .. } | FamilySpec::Path { .. } => 1,
            FamilySpec::Star { .. } => 2,
            FamilySpec::Cycle { .. }
            | FamilySpec::StarPlusEdge { .. }
            | FamilySpec::K2JoinEmpty { .. }
            | FamilySpec::K1JoinBalancedBipartite { .. }
            | FamilySpec::BalancedTripartite { .. } => 3,
            FamilySpec::BalancedBipartitePlusEdge { .. } => 4,
            FamilySpec::CompleteMultipartite { parts } => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(invalid(tag, "parts must be nonempty and positive"));
                }
                1
            }
            FamilySpec::JGraph { a, b } => {
                if *a == 0 || *b == 0 {
                    return Err(invalid(tag, "a and b must be at least 1"));
                }
                4
            }
        };
        if n < min {
            return Err(invalid(tag, format!("order must be at least {min}, got {n}")));
        }
        match self {
            FamilySpec::BalancedBipartitePlusEdge { n } if n % 2 != 0 => {
                Err(invalid(tag, format!("order must be even, got {n}")))
            }
            FamilySpec::K1JoinBalancedBipartite { n } if n % 2 == 0 => {
                Err(invalid(tag, format!("order must be odd, got {n}")))
            }
            FamilySpec::BalancedTripartite { n } if n % 3 != 0 => {
                Err(invalid(tag, format!("order must be divisible by 3, got {n}")))
            }
            _ => Ok(()),
        }
    }

    /// The labeled construction described on each variant.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match self {
            FamilySpec::Complete { n } => Graph::complete(*n)?,
            FamilySpec::Path { n } => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))?,
            FamilySpec::Cycle { n } => Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))?,
            FamilySpec::Star { n } => Graph::from_edges(*n, (1..*n).map(|i| (0, i)))?,
            FamilySpec::CompleteMultipartite { parts } => complete_multipartite(parts)?,
            FamilySpec::StarPlusEdge { n } => FamilySpec::Star { n: *n }.build()?.with_edge(1, 2)?,
            FamilySpec::BalancedBipartitePlusEdge { n } => complete_multipartite(&[n / 2, n / 2])?.with_edge(0, 1)?,
            FamilySpec::K2JoinEmpty { n } => Graph::complete(2)?.join(&Graph::empty(n - 2)?)?,
            FamilySpec::K1JoinBalancedBipartite { n } => {
                let half = (n - 1) / 2;
                Graph::complete(1)?.join(&complete_multipartite(&[half, half])?)?
            }
            FamilySpec::BalancedTripartite { n } => complete_multipartite(&[n / 3, n / 3, n / 3])?,
            FamilySpec::JGraph { a, b } => {
                let (a, b) = (*a, *b);
                let second_root = a + b + 1;
                let edges = (1..=a)
                    .map(|x| (0, x))
                    .chain((a + 1..=a + b).map(|y| (second_root, y)))
                    .chain((1..=a).flat_map(|x| (a + 1..=a + b).map(move |y| (x, y))));
                Graph::from_edges(a + b + 2, edges)?
            }
        };
        Ok(g)
    }

    /// The classified family this construction belongs to, if any.
    pub fn classified(&self) -> Option<ClassifiedFamily> {
        match self {
            FamilySpec::CompleteMultipartite { parts } if parts.len() == 2 && parts.contains(&2) => {
                Some(ClassifiedFamily::CompleteBipartiteTwo)
            }
            FamilySpec::StarPlusEdge { .. } => Some(ClassifiedFamily::StarPlusEdge),
            FamilySpec::BalancedBipartitePlusEdge { .. } => Some(ClassifiedFamily::BalancedBipartitePlusEdge),
            FamilySpec::K2JoinEmpty { .. } => Some(ClassifiedFamily::K2JoinEmpty),
            FamilySpec::K1JoinBalancedBipartite { .. } => Some(ClassifiedFamily::K1JoinBalancedBipartite),
            FamilySpec::BalancedTripartite { .. } => Some(ClassifiedFamily::BalancedTripartite),
            _ => None,
        }
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, FamilyError> {
    let n: usize = parts.iter().sum();
    let mut block = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, p));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = edges.filter(|&(u, v)| block[u] != block[v]).collect();
    Ok(Graph::from_edges(n, edges)?)
}

fn braces(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("_{{{}}}", inner.join(","))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Star { n } => write!(f, "K_{{1,{}}}", n - 1),
            FamilySpec::CompleteMultipartite { parts } => write!(f, "K{}", braces(parts)),
            FamilySpec::StarPlusEdge { n } => write!(f, "K_{{1,{}}}+e", n - 1),
            FamilySpec::BalancedBipartitePlusEdge { n } => write!(f, "K_{{{},{}}}+e", n / 2, n / 2),
            FamilySpec::K2JoinEmpty { n } => write!(f, "K_2∇{}K_1", n - 2),
            FamilySpec::K1JoinBalancedBipartite { n } => write!(f, "K_1∇K_{{{},{}}}", (n - 1) / 2, (n - 1) / 2),
            FamilySpec::BalancedTripartite { n } => write!(f, "K_{{{0},{0},{0}}}", n / 3),
            FamilySpec::JGraph { a, b } => write!(f, "J({a},{b})"),
        }
    }
}

/// The six families making up the graphs with `m(∂₁) = n - 3` for `n ≥ 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassifiedFamily {
    /// `K_{2,n-2}`
    CompleteBipartiteTwo,
    /// `K_{n/2,n/2}+e`
    BalancedBipartitePlusEdge,
    /// `K_{1,n-1}+e`
    StarPlusEdge,
    /// `K_2∇(n-2)K_1`
    K2JoinEmpty,
    /// `K_1∇K_{(n-1)/2,(n-1)/2}`
    K1JoinBalancedBipartite,
    /// `K_{n/3,n/3,n/3}`
    BalancedTripartite,
}

/// Smallest order for which the closed forms and the classification apply.
pub const CLASSIFICATION_MIN_ORDER: usize = 6;

impl ClassifiedFamily {
    pub const ALL: [ClassifiedFamily; 6] = [
        ClassifiedFamily::CompleteBipartiteTwo,
        ClassifiedFamily::BalancedBipartitePlusEdge,
        ClassifiedFamily::StarPlusEdge,
        ClassifiedFamily::K2JoinEmpty,
        ClassifiedFamily::K1JoinBalancedBipartite,
        ClassifiedFamily::BalancedTripartite,
    ];

    pub fn exists_at(self, n: usize) -> bool {
        match self {
            ClassifiedFamily::BalancedBipartitePlusEdge => n.is_multiple_of(2),
            ClassifiedFamily::K1JoinBalancedBipartite => n % 2 == 1,
            ClassifiedFamily::BalancedTripartite => n.is_multiple_of(3),
            _ => true,
        }
    }

    pub fn spec(self, n: usize) -> FamilySpec {
        match self {
            ClassifiedFamily::CompleteBipartiteTwo => FamilySpec::CompleteMultipartite { parts: vec![2, n - 2] },
            ClassifiedFamily::BalancedBipartitePlusEdge => FamilySpec::BalancedBipartitePlusEdge { n },
            ClassifiedFamily::StarPlusEdge => FamilySpec::StarPlusEdge { n },
            ClassifiedFamily::K2JoinEmpty => FamilySpec::K2JoinEmpty { n },
            ClassifiedFamily::K1JoinBalancedBipartite => FamilySpec::K1JoinBalancedBipartite { n },
            ClassifiedFamily::BalancedTripartite => FamilySpec::BalancedTripartite { n },
        }
    }

    /// Families with four distinct eigenvalues; the others have three.
    pub fn has_four_distinct_eigenvalues(self) -> bool {
        matches!(
            self,
            ClassifiedFamily::CompleteBipartiteTwo
                | ClassifiedFamily::BalancedBipartitePlusEdge
                | ClassifiedFamily::StarPlusEdge
        )
    }

    /// Closed-form distance-Laplacian spectrum at order `n ≥ 6`.
    pub fn closed_form(self, n: usize) -> Result<ExactSpectrum, FamilyError> {
        if n < CLASSIFICATION_MIN_ORDER {
            return Err(FamilyError::OrderOutOfRange { n, range: "n ≥ 6" });
        }
        if !self.exists_at(n) {
            self.spec(n).validate()?;
        }
        let n_i = n as i64;
        let bulk = (n - 3) as u32;
        let values: Vec<(i64, u32)> = match self {
            ClassifiedFamily::CompleteBipartiteTwo => vec![(2 * n_i - 2, bulk), (n_i + 2, 1), (n_i, 1), (0, 1)],
            ClassifiedFamily::BalancedBipartitePlusEdge => {
                vec![(3 * n_i / 2, bulk), (3 * n_i / 2 - 2, 1), (n_i, 1), (0, 1)]
            }
            ClassifiedFamily::StarPlusEdge => vec![(2 * n_i - 1, bulk), (2 * n_i - 3, 1), (n_i, 1), (0, 1)],
            ClassifiedFamily::K2JoinEmpty => vec![(2 * n_i - 2, bulk), (n_i, 2), (0, 1)],
            ClassifiedFamily::K1JoinBalancedBipartite => vec![((3 * n_i - 1) / 2, bulk), (n_i, 2), (0, 1)],
            ClassifiedFamily::BalancedTripartite => vec![(4 * n_i / 3, bulk), (n_i, 2), (0, 1)],
        };
        Ok(ExactSpectrum::from_integers(values))
    }
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub family: ClassifiedFamily,
    pub spec: FamilySpec,
    pub graph: Graph,
}

/// Every classified family present at order `n ≥ 6`, one graph each.
pub fn classified_family_members(n: usize) -> Result<Vec<FamilyMember>, FamilyError> {
    if !(CLASSIFICATION_MIN_ORDER..=MAX_VERTICES).contains(&n) {
        return Err(FamilyError::OrderOutOfRange { n, range: "6..=64" });
    }
    ClassifiedFamily::ALL
        .into_iter()
        .filter(|f| f.exists_at(n))
        .map(|family| {
            let spec = family.spec(n);
            let graph = spec.build()?;
            Ok(FamilyMember { family, spec, graph })
        })
        .collect()
}

pub fn closed_form_dl_spectrum(spec: &FamilySpec, n: usize) -> Result<ExactSpectrum, FamilyError> {
    let family = spec
        .classified()
        .ok_or_else(|| FamilyError::NotClassified(spec.to_string()))?;
    if spec.order() != n {
        return Err(invalid(spec.tag(), format!("spec has order {}, asked for {n}", spec.order())));
    }
    family.closed_form(n)
}

/// The graphs with `m(∂₁) = n - 3` at `n = 4` and `n = 5`.
pub fn small_n_members(n: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    match n {
        4 => Ok(vec![
            FamilySpec::Path { n: 4 },
            FamilySpec::StarPlusEdge { n: 4 },
            FamilySpec::K2JoinEmpty { n: 4 },
        ]),
        5 => Ok(vec![
            FamilySpec::CompleteMultipartite { parts: vec![2, 3] },
            FamilySpec::StarPlusEdge { n: 5 },
            FamilySpec::K2JoinEmpty { n: 5 },
            FamilySpec::K1JoinBalancedBipartite { n: 5 },
            FamilySpec::Cycle { n: 5 },
        ]),
        _ => Err(FamilyError::OrderOutOfRange { n, range: "4 or 5" }),
    }
}

/// Expected `m(∂₁) = n - 3` class for any `n ≥ 4`.
pub fn expected_class(n: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    if n < CLASSIFICATION_MIN_ORDER {
        small_n_members(n)
    } else {
        Ok(classified_family_members(n)?.into_iter().map(|m| m.spec).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::is_isomorphic;

    #[test]
    fn j_graph_construction() {
        let j = FamilySpec::JGraph { a: 2, b: 1 }.build().unwrap();
        assert_eq!(j.order(), 5);
        assert_eq!(j.edge_count(), 2 + 1 + 2);
        let d = j.distance_table().unwrap();
        assert_eq!(d.get(0, 4), 3);
        for (a, b) in [(1, 1), (2, 1), (3, 2), (4, 4)] {
            let g = FamilySpec::JGraph { a, b }.build().unwrap();
            let tr = g.transmissions().unwrap();
            let root2 = a + b + 1;
            assert_eq!(tr[0] as usize, a + 2 * b + 3);
            assert_eq!(tr[root2] as usize, 2 * a + b + 3);
            assert!((1..=a).all(|x| tr[x] as usize == 2 * a + b + 1));
            assert!((a + 1..=a + b).all(|y| tr[y] as usize == a + 2 * b + 1));
        }
    }

    #[test]
    fn star_plus_edge_and_tripartite() {
        let g = FamilySpec::StarPlusEdge { n: 6 }.build().unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(1, 2) && g.degree(0) == 5);
        let t = FamilySpec::BalancedTripartite { n: 6 }.build().unwrap();
        let k222 = FamilySpec::CompleteMultipartite { parts: vec![2, 2, 2] }.build().unwrap();
        assert_eq!(t, k222);
        assert_eq!(t.edge_count(), 12);
    }

    #[test]
    fn parameter_checks() {
        assert!(FamilySpec::BalancedTripartite { n: 7 }.build().is_err());
        assert!(FamilySpec::BalancedBipartitePlusEdge { n: 7 }.build().is_err());
        assert!(FamilySpec::K1JoinBalancedBipartite { n: 8 }.build().is_err());
        assert!(FamilySpec::JGraph { a: 0, b: 2 }.build().is_err());
        assert!(FamilySpec::CompleteMultipartite { parts: vec![2, 0] }.build().is_err());
        assert!(matches!(
            FamilySpec::from_tag("nope", &FamilyParams::default()),
            Err(FamilyError::UnknownFamily(_))
        ));
        let p = FamilyParams { n: Some(6), ..Default::default() };
        assert_eq!(FamilySpec::from_tag("k2-join-empty", &p).unwrap(), FamilySpec::K2JoinEmpty { n: 6 });
        assert!(FamilySpec::from_tag("j-graph", &p).is_err());
    }

    #[test]
    fn member_lists() {
        let names = |n| -> Vec<String> {
            classified_family_members(n).unwrap().iter().map(|m| m.spec.to_string()).collect()
        };
        assert_eq!(names(6), ["K_{2,4}", "K_{3,3}+e", "K_{1,5}+e", "K_2∇4K_1", "K_{2,2,2}"]);
        assert_eq!(names(7), ["K_{2,5}", "K_{1,6}+e", "K_2∇5K_1", "K_1∇K_{3,3}"]);
        assert_eq!(names(12).len(), 5);
        assert_eq!(names(9).len(), 5);
        assert!(classified_family_members(5).is_err());
        assert_eq!(small_n_members(4).unwrap().len(), 3);
        assert_eq!(small_n_members(5).unwrap().len(), 5);
        assert!(small_n_members(6).is_err());
    }

    #[test]
    fn members_pairwise_non_isomorphic() {
        for n in 6..=10 {
            let ms = classified_family_members(n).unwrap();
            for i in 0..ms.len() {
                for j in i + 1..ms.len() {
                    assert!(!is_isomorphic(&ms[i].graph, &ms[j].graph).unwrap());
                }
            }
        }
    }

    #[test]
    fn closed_forms_at_sample_orders() {
        let s = |f: ClassifiedFamily, n| f.closed_form(n).unwrap();
        let ints = |v: &[(i64, u32)]| ExactSpectrum::from_integers(v.iter().copied());
        assert_eq!(s(ClassifiedFamily::CompleteBipartiteTwo, 8), ints(&[(14, 5), (10, 1), (8, 1), (0, 1)]));
        assert_eq!(s(ClassifiedFamily::StarPlusEdge, 6), ints(&[(11, 3), (9, 1), (6, 1), (0, 1)]));
        assert_eq!(s(ClassifiedFamily::K1JoinBalancedBipartite, 7), ints(&[(10, 4), (7, 2), (0, 1)]));
        assert_eq!(s(ClassifiedFamily::BalancedTripartite, 6), ints(&[(8, 3), (6, 2), (0, 1)]));
        assert!(ClassifiedFamily::BalancedTripartite.closed_form(7).is_err());
        assert!(ClassifiedFamily::StarPlusEdge.closed_form(5).is_err());
        assert!(closed_form_dl_spectrum(&FamilySpec::Cycle { n: 6 }, 6).is_err());
    }
}
