#![allow(dead_code)]

use nalgebra::DMatrix;
use telepathy::linalg::DensityOperator;

/// Smallest eigenvalue of a Hermitian operator, via nalgebra.
pub fn min_eigenvalue(rho: &DensityOperator) -> f64 {
    let n = rho.dim();
    let m = DMatrix::from_fn(n, n, |i, j| rho.get(i, j));
    m.symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Asserts Hermiticity, unit trace and positive semidefiniteness.
pub fn assert_valid_density(rho: &DensityOperator) {
    assert!(rho.matrix().hermiticity_defect() < 1e-12);
    assert!((rho.trace().re - 1.0).abs() < 1e-12);
    assert!(rho.trace().im.abs() < 1e-12);
    assert!(min_eigenvalue(rho) >= -1e-10);
}
