use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::matrix::{CharPolynomial, IntSymMatrix};
use super::poly::IntPoly;
use super::roots::{isolate_real_roots, largest_real_root, Root};
use super::squarefree::squarefree_decompose;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub root: Root,
    pub multiplicity: u32,
}

/// Distinct real eigenvalues in descending order with exact multiplicities.
#[derive(Debug, Clone, Default)]
pub struct ExactSpectrum {
    entries: Vec<SpectrumEntry>,
}

impl ExactSpectrum {
    pub fn of_matrix(m: &IntSymMatrix) -> ExactSpectrum {
        ExactSpectrum::from_char_poly(&m.char_poly())
    }

    pub fn from_char_poly(p: &CharPolynomial) -> ExactSpectrum {
        ExactSpectrum::from_poly(p.as_poly())
    }

    /// Real roots of `p` with multiplicity. Non-real roots are dropped.
    pub fn from_poly(p: &IntPoly) -> ExactSpectrum {
        let mut entries = Vec::new();
        for (factor, e) in squarefree_decompose(p).factors {
            for root in isolate_real_roots(&factor) {
                entries.push(SpectrumEntry { root, multiplicity: e });
            }
        }
        // Roots of coprime factors are distinct, so no merging is needed.
        entries.sort_by(|a, b| b.root.cmp_exact(&a.root));
        ExactSpectrum { entries }
    }

    /// Multiset of roots; equal values are merged.
    pub fn from_roots(roots: impl IntoIterator<Item = (Root, u32)>) -> ExactSpectrum {
        let mut all: Vec<(Root, u32)> = roots.into_iter().filter(|(_, m)| *m > 0).collect();
        all.sort_by(|a, b| b.0.cmp_exact(&a.0));
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        for (root, m) in all {
            match entries.last_mut() {
                Some(last) if last.root.cmp_exact(&root) == Ordering::Equal => last.multiplicity += m,
                _ => entries.push(SpectrumEntry { root, multiplicity: m }),
            }
        }
        ExactSpectrum { entries }
    }

    pub fn from_integers(values: impl IntoIterator<Item = (i64, u32)>) -> ExactSpectrum {
        ExactSpectrum::from_roots(values.into_iter().map(|(v, m)| (Root::int(v), m)))
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Sum of multiplicities.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn largest(&self) -> Option<&SpectrumEntry> {
        self.entries.first()
    }

    pub fn smallest(&self) -> Option<&SpectrumEntry> {
        self.entries.last()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.root.is_integer())
    }

    pub fn multiplicity_of(&self, value: &BigInt) -> u32 {
        self.entries
            .iter()
            .find(|e| e.root.cmp_integer(value) == Ordering::Equal)
            .map_or(0, |e| e.multiplicity)
    }

    /// Eigenvalues repeated by multiplicity, descending.
    pub fn expanded(&self) -> Vec<Root> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.root.clone(), e.multiplicity as usize))
            .collect()
    }

    pub fn approx_expanded(&self) -> Vec<f64> {
        self.expanded().iter().map(Root::approx).collect()
    }

    /// Drops `count` copies of an integer value.
    pub fn remove_integer(&self, value: &BigInt, count: u32) -> Option<ExactSpectrum> {
        let mut out = self.clone();
        let idx = out
            .entries
            .iter()
            .position(|e| e.root.cmp_integer(value) == Ordering::Equal)?;
        let m = &mut out.entries[idx].multiplicity;
        *m = m.checked_sub(count)?;
        if *m == 0 {
            out.entries.remove(idx);
        }
        Some(out)
    }

    /// `x ↦ offset - x` applied to every eigenvalue.
    pub fn reflect(&self, offset: &BigInt) -> ExactSpectrum {
        ExactSpectrum::from_roots(self.entries.iter().map(|e| (e.root.reflect(offset), e.multiplicity)))
    }

    /// `x ↦ x + offset` applied to every eigenvalue.
    pub fn shift(&self, offset: &BigInt) -> ExactSpectrum {
        ExactSpectrum::from_roots(self.entries.iter().map(|e| (e.root.shift(offset), e.multiplicity)))
    }

    pub fn union(&self, other: &ExactSpectrum) -> ExactSpectrum {
        ExactSpectrum::from_roots(
            self.entries
                .iter()
                .chain(&other.entries)
                .map(|e| (e.root.clone(), e.multiplicity)),
        )
    }

    pub fn exact_eq(&self, other: &ExactSpectrum) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| {
                a.multiplicity == b.multiplicity && a.root.cmp_exact(&b.root) == Ordering::Equal
            })
    }
}

impl PartialEq for ExactSpectrum {
    fn eq(&self, other: &Self) -> bool {
        self.exact_eq(other)
    }
}

impl Eq for ExactSpectrum {}

/// Ten significant digits.
pub fn format_approx(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn format_root(r: &Root) -> String {
    match r {
        Root::Integer(k) => k.to_string(),
        Root::Isolated(iso) => format!("≈{}", format_approx(iso.midpoint_f64())),
    }
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_root(&e.root))?;
            if e.multiplicity > 1 {
                write!(f, "×{}", e.multiplicity)?;
            }
        }
        Ok(())
    }
}

pub fn exact_spectrum(m: &IntSymMatrix) -> ExactSpectrum {
    ExactSpectrum::of_matrix(m)
}

/// Largest eigenvalue and its multiplicity.
pub fn largest_multiplicity(s: &ExactSpectrum) -> Option<(Root, u32)> {
    s.largest().map(|e| (e.root.clone(), e.multiplicity))
}

/// Largest real root of `p` with multiplicity, without isolating the
/// other roots.
pub fn largest_root_of(p: &IntPoly) -> Option<(Root, u32)> {
    let mut best: Option<(Root, u32)> = None;
    for (factor, e) in squarefree_decompose(p).factors {
        let Some(r) = largest_real_root(&factor) else { continue };
        match &best {
            Some((b, _)) if b.cmp_exact(&r) != Ordering::Less => {}
            _ => best = Some((r, e)),
        }
    }
    best
}

/// Largest eigenvalue of `m` with multiplicity.
pub fn largest_eigenvalue(m: &IntSymMatrix) -> Option<(Root, u32)> {
    largest_root_of(m.char_poly().as_poly())
}

/// Value of a root as an integer if it is one, used by callers that
/// expect integral data.
pub fn root_as_i64(r: &Root) -> Option<i64> {
    r.as_integer().and_then(ToPrimitive::to_i64)
}

/// `|value - root| ≤ tol`, deciding with the isolating interval.
pub fn within_tolerance(value: f64, r: &Root, tol: f64) -> bool {
    match r {
        Root::Integer(k) => (k.to_f64().unwrap_or(f64::NAN) - value).abs() <= tol,
        Root::Isolated(iso) => {
            let (lo, hi) = (iso.lo().to_f64(), iso.hi().to_f64());
            value >= lo - tol && value <= hi + tol
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dl_k3() -> IntSymMatrix {
        IntSymMatrix::from_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]).unwrap()
    }

    #[test]
    fn triangle_spectrum() {
        let s = exact_spectrum(&dl_k3());
        assert_eq!(s, ExactSpectrum::from_integers([(3, 2), (0, 1)]));
        assert_eq!(s.to_string(), "3×2, 0");
        assert_eq!(s.len(), 3);
        assert_eq!(largest_multiplicity(&s), Some((Root::int(3), 2)));
        assert_eq!(largest_eigenvalue(&dl_k3()), Some((Root::int(3), 2)));
    }

    #[test]
    fn irrational_display_and_merge() {
        // P_3 adjacency: eigenvalues ±√2, 0
        let m = IntSymMatrix::from_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]).unwrap();
        let s = exact_spectrum(&m);
        assert_eq!(s.to_string(), "≈1.414213562, 0, ≈-1.414213562");
        assert!(!s.is_integral());
        let doubled = s.union(&s);
        assert_eq!(doubled.distinct_count(), 3);
        assert_eq!(doubled.len(), 6);
        // 2 - (2 - x) = x
        assert_eq!(s.reflect(&BigInt::from(2)).reflect(&BigInt::from(2)), s);
        let (top, m1) = largest_eigenvalue(&m).unwrap();
        assert_eq!(m1, 1);
        assert_eq!(top.cmp_exact(&s.entries()[0].root), Ordering::Equal);
    }

    #[test]
    fn remove_and_multiplicity() {
        let s = ExactSpectrum::from_integers([(4, 3), (0, 1)]);
        assert_eq!(s.multiplicity_of(&BigInt::from(4)), 3);
        let t = s.remove_integer(&BigInt::from(0), 1).unwrap();
        assert_eq!(t, ExactSpectrum::from_integers([(4, 3)]));
        assert!(s.remove_integer(&BigInt::from(0), 2).is_none());
    }

    #[test]
    fn approx_formatting() {
        assert_eq!(format_approx(12.3456789012345), "12.3456789");
        assert_eq!(format_approx(0.5), "0.5");
        assert_eq!(format_approx(-3.0), "-3");
    }
}
