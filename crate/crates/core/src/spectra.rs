//! Distance Laplacian and Laplacian matrices, their exact spectra, and the
//! Laplacian transfer rules for complements, joins and diameter-two graphs.

use std::fmt;

use num_bigint::{BigInt, Sign};
use thiserror::Error;

use crate::graph::{DistanceTable, Graph, GraphError};
use crate::linalg::{CharPolynomial, ExactSpectrum, IntSymMatrix, Root};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("diameter {0} exceeds 2")]
    DiameterTooLarge(u32),
    #[error("not a Laplacian spectrum: {0}")]
    MalformedSpectrum(&'static str),
}

pub fn distance_laplacian_of_table(d: &DistanceTable) -> IntSymMatrix {
    let tr = d.transmissions();
    IntSymMatrix::from_fn(d.order(), |i, j| {
        if i == j {
            tr[i] as i64
        } else {
            -i64::from(d.get(i, j))
        }
    })
    .expect("distance table is symmetric")
}

/// `Tr(G) - D(G)` for a connected graph.
pub fn distance_laplacian(g: &Graph) -> Result<IntSymMatrix, SpectraError> {
    Ok(distance_laplacian_of_table(&g.distance_table()?))
}

/// Degree diagonal minus adjacency; defined for any graph.
pub fn laplacian(g: &Graph) -> IntSymMatrix {
    IntSymMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            -i64::from(g.has_edge(i, j))
        }
    })
    .expect("adjacency is symmetric")
}

pub fn dl_spectrum(g: &Graph) -> Result<ExactSpectrum, SpectraError> {
    Ok(ExactSpectrum::of_matrix(&distance_laplacian(g)?))
}

pub fn laplacian_spectrum(g: &Graph) -> ExactSpectrum {
    ExactSpectrum::of_matrix(&laplacian(g))
}

/// Distance Laplacian spectrum of a connected graph of diameter at most two,
/// assembled from its Laplacian spectrum as `{2n - μ : μ ≠ one zero} ∪ {0}`.
pub fn dl_spectrum_from_laplacian(g: &Graph) -> Result<ExactSpectrum, SpectraError> {
    let d = g.diameter()?;
    if d > 2 {
        return Err(SpectraError::DiameterTooLarge(d));
    }
    let n = BigInt::from(g.order());
    let nonzero = remove_one_zero(&laplacian_spectrum(g))?;
    Ok(nonzero.reflect(&(&n * 2)).union(&ExactSpectrum::from_integers([(0, 1)])))
}

fn remove_one_zero(s: &ExactSpectrum) -> Result<ExactSpectrum, SpectraError> {
    s.remove_integer(&BigInt::ZERO, 1)
        .ok_or(SpectraError::MalformedSpectrum("eigenvalue 0 missing"))
}

fn check_laplacian_spectrum(s: &ExactSpectrum, n: usize) -> Result<(), SpectraError> {
    if s.len() != n {
        return Err(SpectraError::MalformedSpectrum("multiplicities do not sum to the order"));
    }
    if s.multiplicity_of(&BigInt::ZERO) == 0 {
        return Err(SpectraError::MalformedSpectrum("eigenvalue 0 missing"));
    }
    let top = &s.largest().expect("nonempty").root;
    if top.cmp_integer(&BigInt::from(n)).is_gt() {
        return Err(SpectraError::MalformedSpectrum("eigenvalue exceeds the order"));
    }
    if s.smallest().expect("nonempty").root.cmp_integer(&BigInt::ZERO).is_lt() {
        return Err(SpectraError::MalformedSpectrum("negative eigenvalue"));
    }
    Ok(())
}

/// Laplacian spectrum of the complement: `{n - μ : μ ≠ one zero} ∪ {0}`.
pub fn complement_laplacian_spectrum(s: &ExactSpectrum, n: usize) -> Result<ExactSpectrum, SpectraError> {
    check_laplacian_spectrum(s, n)?;
    let rest = remove_one_zero(s)?;
    Ok(rest
        .reflect(&BigInt::from(n))
        .union(&ExactSpectrum::from_integers([(0, 1)])))
}

/// Laplacian spectrum of `G ∇ H` for `|G| = n`, `|H| = m`.
///
/// One zero is dropped from each side; the remaining `μ_i(G)` shift by `m`,
/// the remaining `μ_j(H)` shift by `n`, and `n + m` and `0` are added, for
/// `n + m` eigenvalues in total.
pub fn join_laplacian_spectrum(
    s_g: &ExactSpectrum,
    n: usize,
    s_h: &ExactSpectrum,
    m: usize,
) -> Result<ExactSpectrum, SpectraError> {
    check_laplacian_spectrum(s_g, n)?;
    check_laplacian_spectrum(s_h, m)?;
    let g_part = remove_one_zero(s_g)?.shift(&BigInt::from(m));
    let h_part = remove_one_zero(s_h)?.shift(&BigInt::from(n));
    let ends = ExactSpectrum::from_roots([(Root::int((n + m) as i64), 1), (Root::int(0), 1)]);
    Ok(g_part.union(&h_part).union(&ends))
}

/// Byte encoding of the distance-Laplacian characteristic polynomial; equal
/// keys mean equal spectra with multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectrumKey(Vec<u8>);

impl SpectrumKey {
    pub fn from_char_poly(p: &CharPolynomial) -> SpectrumKey {
        let mut bytes = Vec::new();
        for c in p.coeffs() {
            let (sign, mag) = c.to_bytes_le();
            bytes.push(match sign {
                Sign::Minus => 0,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            });
            bytes.extend_from_slice(&(mag.len() as u32).to_le_bytes());
            if sign != Sign::NoSign {
                bytes.extend_from_slice(&mag);
            }
        }
        SpectrumKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for SpectrumKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpectrumKey({})", hex::encode(&self.0))
    }
}

pub fn dl_char_poly(g: &Graph) -> Result<CharPolynomial, SpectraError> {
    Ok(distance_laplacian(g)?.char_poly())
}

pub fn spectrum_key(g: &Graph) -> Result<SpectrumKey, SpectraError> {
    Ok(SpectrumKey::from_char_poly(&dl_char_poly(g)?))
}
