//! The ideal quantum strategy: a shared four-qubit state, local unitaries
//! `A_i` for Alice and `B_j` for Bob, and a computational-basis measurement.
//!
//! Qubit order is `(A₁, A₂, B₁, B₂)`, big-endian, so Alice's 4-dimensional
//! factor is the most significant in `A_i ⊗ B_j`.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::game::{QuestionPair, WinningSetTable, QUESTION_COUNT};
use crate::linalg::{
    basis_probability, conjugate, DensityOperator, Kron, Matrix, StateVector, Unitary,
};

/// Dimension of the shared two-qubit-per-player state.
pub const SHARED_DIM: usize = 16;

// Operator entries over {0, ±1, ±i}; the prefactor is applied separately.
const A1: &str = "i 0 0 1; 0 -i 1 0; 0 i 1 0; 1 0 0 i";
const A2: &str = "i 1 1 i; -i 1 -1 i; i 1 -1 -i; -i 1 1 -i";
const A3: &str = "-1 -1 -1 1; 1 1 -1 1; 1 -1 1 1; 1 -1 -1 -1";
const B1: &str = "i -i 1 1; -i -i 1 -1; 1 1 -i i; -i i 1 1";
const B2: &str = "-1 i 1 i; 1 i 1 -i; 1 -i 1 i; -1 -i 1 -i";
const B3: &str = "1 0 0 1; -1 0 0 1; 0 1 1 0; 0 1 -1 0";

fn parse_entry(token: &str) -> Complex64 {
    match token {
        "0" => Complex64::new(0.0, 0.0),
        "1" => Complex64::new(1.0, 0.0),
        "-1" => Complex64::new(-1.0, 0.0),
        "i" => Complex64::new(0.0, 1.0),
        "-i" => Complex64::new(0.0, -1.0),
        other => panic!("unexpected operator entry {other:?}"),
    }
}

/// Parses a `;`-separated row listing and multiplies by `prefactor`.
fn operator(rows: &str, prefactor: f64) -> Result<Unitary> {
    let entries: Vec<Complex64> = rows
        .split(';')
        .flat_map(str::split_whitespace)
        .map(|t| parse_entry(t) * prefactor)
        .collect();
    let dim = (entries.len() as f64).sqrt() as usize;
    Unitary::new(Matrix::new(dim, entries)?)
}

/// Alice's three and Bob's three 4×4 local unitaries.
#[derive(Clone, Debug)]
pub struct StrategyOperators {
    pub alice: [Unitary; 3],
    pub bob: [Unitary; 3],
}

impl StrategyOperators {
    /// `A_i` for row `i` (1-based).
    pub fn alice_op(&self, row: usize) -> &Unitary {
        &self.alice[row - 1]
    }

    /// `B_j` for column `j` (1-based).
    pub fn bob_op(&self, col: usize) -> &Unitary {
        &self.bob[col - 1]
    }

    /// `A_i ⊗ B_j`.
    pub fn joint(&self, q: QuestionPair) -> Unitary {
        self.alice_op(q.row())
            .kron(self.bob_op(q.col()))
            .expect("16 is below the dimension ceiling")
    }
}

/// Builds the six strategy operators. Fails only if a matrix is not unitary.
pub fn build_operators() -> Result<StrategyOperators> {
    let half = 0.5;
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    Ok(StrategyOperators {
        alice: [
            operator(A1, inv_sqrt2)?,
            operator(A2, half)?,
            operator(A3, half)?,
        ],
        bob: [
            operator(B1, half)?,
            operator(B2, half)?,
            operator(B3, inv_sqrt2)?,
        ],
    })
}

struct Cache {
    joint: Vec<Unitary>,
    table: WinningSetTable,
}

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| {
        let ops = build_operators().expect("strategy operators are unitary");
        Cache {
            joint: QuestionPair::all().map(|q| ops.joint(q)).collect(),
            table: WinningSetTable::derived(),
        }
    })
}

/// `(|0011⟩ + |1100⟩ − |0110⟩ − |1001⟩) / 2`.
pub fn initial_state() -> StateVector {
    let mut amplitudes = [0.0; SHARED_DIM];
    amplitudes[0b0011] = 0.5;
    amplitudes[0b1100] = 0.5;
    amplitudes[0b0110] = -0.5;
    amplitudes[0b1001] = -0.5;
    StateVector::from_real(&amplitudes).expect("finite amplitudes")
}

/// `|ψ⟩⟨ψ|` for the ideal shared state.
pub fn initial_density() -> DensityOperator {
    DensityOperator::from_pure(&initial_state()).expect("normalized")
}

/// `(A_i ⊗ B_j) ρ (A_i ⊗ B_j)†`.
pub fn final_state(rho: &DensityOperator, q: QuestionPair) -> Result<DensityOperator> {
    if rho.dim() != SHARED_DIM {
        return Err(Error::DimensionMismatch {
            expected: SHARED_DIM,
            found: rho.dim(),
        });
    }
    conjugate(&cache().joint[q.ordinal()], rho)
}

/// Total probability of the winning outcomes for question pair `q`.
pub fn question_win_probability(rho: &DensityOperator, q: QuestionPair) -> Result<f64> {
    let rho_f = final_state(rho, q)?;
    cache()
        .table
        .get(q)
        .iter()
        .map(|xi| basis_probability(&rho_f, xi))
        .sum()
}

/// Win probability under uniformly random questions.
pub fn mean_win_probability(rho: &DensityOperator) -> Result<f64> {
    let total: f64 = QuestionPair::all()
        .map(|q| question_win_probability(rho, q))
        .sum::<Result<f64>>()?;
    Ok(total / QUESTION_COUNT as f64)
}
