//! Exact linear algebra over ℤ plus a floating-point cross-check.

mod jacobi;
mod matrix;
mod poly;
mod roots;
mod spectrum;
mod squarefree;

pub use jacobi::{jacobi_eigen, numeric_eigenvalues, EigenDecomposition, JacobiError};
pub use matrix::{CharPolynomial, IntSymMatrix, MatrixError};
pub use poly::IntPoly;
pub use roots::{
    isolate_real_roots, largest_real_root, Dyadic, IsolatedRoot, Root, SturmChain, COMPARISON_BITS,
    ISOLATION_BITS,
};
pub use spectrum::{
    exact_spectrum, format_approx, format_root, largest_eigenvalue, largest_multiplicity, largest_root_of,
    root_as_i64, within_tolerance, ExactSpectrum, SpectrumEntry,
};
pub use squarefree::{squarefree_decompose, SquarefreeFactorization};

/// `det(xI - M)`.
pub fn char_poly(m: &IntSymMatrix) -> CharPolynomial {
    m.char_poly()
}
