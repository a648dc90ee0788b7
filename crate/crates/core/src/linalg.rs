//! Dense complex linear algebra for small Hilbert spaces.
//!
//! Everything here works on square row-major matrices and plain amplitude
//! vectors. Composite systems use a big-endian convention: in `a ⊗ b` the
//! left factor occupies the most significant index positions, so basis index
//! `i·dim(b) + k` is `|i⟩ ⊗ |k⟩`.
//!
//! The dimensions involved are tiny (at most 256 in this crate), so no
//! attempt is made at blocking or sparsity.

use std::fmt;
use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest dimension a tensor product may produce.
pub const MAX_DIM: usize = 4096;

/// Tolerance used by the structural checks (normalization, Hermiticity,
/// unit trace, unitarity).
pub const TOLERANCE: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn ensure_finite(values: &[Complex64]) -> Result<()> {
    if values.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

fn checked_product(a: usize, b: usize) -> Result<usize> {
    match a.checked_mul(b) {
        Some(dim) if dim <= MAX_DIM => Ok(dim),
        _ => Err(Error::DimensionOverflow {
            left: a,
            right: b,
            max: MAX_DIM,
        }),
    }
}

/// Kronecker (tensor) product.
pub trait Kron: Sized {
    fn kron(&self, other: &Self) -> Result<Self>;
}

/// `a ⊗ b` with the left operand most significant.
pub fn tensor_product<T: Kron>(a: &T, b: &T) -> Result<T> {
    a.kron(b)
}

/// A vector of complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyDimension);
        }
        ensure_finite(&amplitudes)?;
        Ok(Self { amplitudes })
    }

    /// Builds a vector from real amplitudes.
    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The computational basis vector `|index⟩`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Self::new(amplitudes)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() < TOLERANCE
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Linear combination `self + factor·other`.
    pub fn add_scaled(&self, factor: Complex64, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Self::new(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    /// The outer product `|self⟩⟨self|`.
    pub fn projector(&self) -> Matrix {
        let dim = self.dim();
        Matrix::from_fn(dim, |i, j| self.amplitudes[i] * self.amplitudes[j].conj())
    }
}

impl Kron for StateVector {
    fn kron(&self, other: &Self) -> Result<Self> {
        checked_product(self.dim(), other.dim())?;
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ok(Self { amplitudes })
    }
}

/// A square complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: data.len(),
            });
        }
        ensure_finite(&data)?;
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    fn ensure_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same_dim(other)?;
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            let out_row = &mut out[i * n..(i + 1) * n];
            for (k, &a) in row.iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                let other_row = &other.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(other_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { dim: n, data: out })
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        let amplitudes = (0..self.dim)
            .map(|i| {
                self.data[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(v.amplitudes())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        StateVector::new(amplitudes)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.ensure_same_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `max |m[i][j] − conj(m[j][i])|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Max-norm of `M†M − I`.
    pub fn unitarity_defect(&self) -> f64 {
        let product = self.dagger().mul(self).expect("square by construction");
        product
            .max_abs_diff(&Self::identity(self.dim))
            .expect("same dimension")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        &self.data[row * self.dim + col]
    }
}

impl Kron for Matrix {
    fn kron(&self, other: &Self) -> Result<Self> {
        let dim = checked_product(self.dim, other.dim)?;
        let b = other.dim;
        Ok(Self::from_fn(dim, |row, col| {
            self.get(row / b, col / b) * other.get(row % b, col % b)
        }))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self.get(i, j);
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A matrix that has passed the unitarity check `max |U†U − I| < 1e-12`.
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary(Matrix);

impl Unitary {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let defect = matrix.unitarity_defect();
        if defect < TOLERANCE {
            Ok(Self(matrix))
        } else {
            Err(Error::NotUnitary { defect })
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self(Matrix::identity(dim))
    }

    /// The two-qubit swap `Σ |ji⟩⟨ij|`.
    pub fn swap() -> Self {
        Self(Matrix::from_fn(4, |row, col| {
            let (i, j) = (col >> 1, col & 1);
            if row == (j << 1) | i {
                ONE
            } else {
                ZERO
            }
        }))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn dagger(&self) -> Self {
        Self(self.0.dagger())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.mul(&other.0)?))
    }
}

impl Kron for Unitary {
    fn kron(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.kron(&other.0)?))
    }
}

/// A Hermitian, unit-trace matrix.
///
/// Positive semidefiniteness is not checked on construction; it is verified
/// in the test suite with an eigenvalue solve.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator(Matrix);

impl DensityOperator {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let defect = matrix.hermiticity_defect();
        if defect >= TOLERANCE {
            return Err(Error::NotHermitian { defect });
        }
        let trace = matrix.trace();
        if (trace - ONE).norm() >= TOLERANCE {
            return Err(Error::NotUnitTrace { trace: trace.re });
        }
        Ok(Self(matrix))
    }

    /// `|ψ⟩⟨ψ|` for a normalized `ψ`.
    pub fn from_pure(state: &StateVector) -> Result<Self> {
        if !state.is_normalized() {
            return Err(Error::NotNormalized {
                norm_sqr: state.norm_sqr(),
            });
        }
        Self::new(state.projector())
    }

    /// `I/dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        Ok(Self(
            Matrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0)),
        ))
    }

    /// The convex combination `weight·self + (1 − weight)·other`.
    pub fn mix(&self, weight: f64, other: &Self) -> Result<Self> {
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::InvalidWeight(weight));
        }
        let a = self.0.scale(Complex64::new(weight, 0.0));
        let b = other.0.scale(Complex64::new(1.0 - weight, 0.0));
        Self::new(a.add(&b)?)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0.get(row, col)
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }
}

impl Kron for DensityOperator {
    fn kron(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.kron(&other.0)?))
    }
}

/// `U ρ U†`.
pub fn conjugate(unitary: &Unitary, rho: &DensityOperator) -> Result<DensityOperator> {
    let u = unitary.matrix();
    if u.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: rho.dim(),
        });
    }
    let out = u.mul(rho.matrix())?.mul(&u.dagger())?;
    Ok(DensityOperator(out))
}

/// Traces out every factor not listed in `keep`.
///
/// `factor_dims` gives the dimension of each tensor factor, most significant
/// first. The kept factors appear in the result in their original order,
/// regardless of the order in which `keep` lists them.
pub fn partial_trace(
    rho: &DensityOperator,
    factor_dims: &[usize],
    keep: &[usize],
) -> Result<DensityOperator> {
    let product: usize = factor_dims.iter().product();
    if factor_dims.is_empty() || factor_dims.contains(&0) || product != rho.dim() {
        return Err(Error::FactorMismatch {
            factors: factor_dims.to_vec(),
            dim: rho.dim(),
        });
    }
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut kept = vec![false; factor_dims.len()];
    for &k in keep {
        if k >= factor_dims.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                dim: factor_dims.len(),
            });
        }
        kept[k] = true;
    }

    // Split every full index into (kept index, traced index) once.
    let split: Vec<(usize, usize)> = (0..product)
        .map(|mut index| {
            let (mut kept_index, mut kept_stride) = (0, 1);
            let (mut traced_index, mut traced_stride) = (0, 1);
            for (&d, &is_kept) in factor_dims.iter().zip(&kept).rev() {
                let digit = index % d;
                index /= d;
                if is_kept {
                    kept_index += digit * kept_stride;
                    kept_stride *= d;
                } else {
                    traced_index += digit * traced_stride;
                    traced_stride *= d;
                }
            }
            (kept_index, traced_index)
        })
        .collect();

    let out_dim: usize = factor_dims
        .iter()
        .zip(&kept)
        .filter(|(_, &k)| k)
        .map(|(d, _)| d)
        .product();
    let mut out = Matrix::zeros(out_dim);
    for (i, &(row, traced_row)) in split.iter().enumerate() {
        for (j, &(col, traced_col)) in split.iter().enumerate() {
            if traced_row == traced_col {
                out.data[row * out_dim + col] += rho.get(i, j);
            }
        }
    }
    Ok(DensityOperator(out))
}

/// Probability of observing computational basis state `index`.
pub fn basis_probability(rho: &DensityOperator, index: usize) -> Result<f64> {
    if index >= rho.dim() {
        return Err(Error::IndexOutOfRange {
            index,
            dim: rho.dim(),
        });
    }
    Ok(rho.get(index, index).re.clamp(0.0, 1.0))
}
