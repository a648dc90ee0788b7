//! Rules of the Magic Square game.
//!
//! Alice receives a row `i`, Bob a column `j` of a 3×3 binary grid. Alice
//! answers a row with even parity, Bob a column with odd parity, and they
//! win when Alice's `j`-th entry equals Bob's `i`-th entry.
//!
//! A four-bit measurement outcome `ξ = 8a₁ + 4a₂ + 2b₁ + b₂` fixes the first
//! two entries of each answer; the third entry is forced by parity.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Number of question pairs.
pub const QUESTION_COUNT: usize = 9;

/// Number of four-bit measurement outcomes.
pub const OUTCOME_COUNT: usize = 16;

/// Rows `S₁₁ … S₃₃` of the winning-set table, `+` marking membership of the
/// outcome in column position `ξ = 0..15`.
pub const TRANSCRIBED_TABLE: [&str; QUESTION_COUNT] = [
    "++--++----++--++", // S11
    "++----++++----++", // S12
    "++----++--++++--", // S13
    "+-+-+-+--+-+-+-+", // S21
    "+-+--+-++-+--+-+", // S22
    "+-+--+-+-+-++-+-", // S23
    "-++--++-+--++--+", // S31
    "-++-+--+-++-+--+", // S32
    "-++-+--++--+-++-", // S33
];

/// Alice's row question and Bob's column question, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuestionPair {
    row: usize,
    col: usize,
}

impl QuestionPair {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if (1..=3).contains(&row) && (1..=3).contains(&col) {
            Ok(Self { row, col })
        } else {
            Err(Error::InvalidQuestion { row, col })
        }
    }

    pub fn row(self) -> usize {
        self.row
    }

    pub fn col(self) -> usize {
        self.col
    }

    /// Position in row-major order, `0..9`.
    pub fn ordinal(self) -> usize {
        (self.row - 1) * 3 + (self.col - 1)
    }

    /// All nine pairs in row-major order.
    pub fn all() -> impl Iterator<Item = QuestionPair> {
        (1..=3).flat_map(|row| (1..=3).map(move |col| QuestionPair { row, col }))
    }
}

impl fmt::Display for QuestionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Alice's rows.
    Even,
    /// Bob's columns.
    Odd,
}

impl Parity {
    fn holds(self, bits: [bool; 3]) -> bool {
        let odd = bits.iter().filter(|&&b| b).count() % 2 == 1;
        match self {
            Parity::Even => !odd,
            Parity::Odd => odd,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Three answer bits satisfying a parity constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AnswerTriple {
    bits: [bool; 3],
    parity: Parity,
}

impl AnswerTriple {
    pub fn new(bits: [bool; 3], parity: Parity) -> Result<Self> {
        if parity.holds(bits) {
            Ok(Self { bits, parity })
        } else {
            Err(Error::ParityViolation {
                bits,
                expected: parity.name(),
            })
        }
    }

    pub fn bits(&self) -> [bool; 3] {
        self.bits
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// The entry at 1-based `position`.
    pub fn entry(&self, position: usize) -> bool {
        self.bits[position - 1]
    }
}

impl fmt::Display for AnswerTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.bits.map(u8::from);
        write!(f, "({a},{b},{c})")
    }
}

/// Alice's row `(a₁, a₂, a₁ ⊕ a₂)`.
pub fn complete_alice(a1: bool, a2: bool) -> AnswerTriple {
    AnswerTriple {
        bits: [a1, a2, a1 ^ a2],
        parity: Parity::Even,
    }
}

/// Bob's column `(b₁, b₂, 1 ⊕ b₁ ⊕ b₂)`.
pub fn complete_bob(b1: bool, b2: bool) -> AnswerTriple {
    AnswerTriple {
        bits: [b1, b2, !(b1 ^ b2)],
        parity: Parity::Odd,
    }
}

/// Decodes a measurement outcome `ξ = 8a₁ + 4a₂ + 2b₁ + b₂` into the two
/// completed answers.
pub fn decode_outcome(outcome: usize) -> Result<(AnswerTriple, AnswerTriple)> {
    if outcome >= OUTCOME_COUNT {
        return Err(Error::IndexOutOfRange {
            index: outcome,
            dim: OUTCOME_COUNT,
        });
    }
    let bit = |k: usize| (outcome >> k) & 1 == 1;
    Ok((complete_alice(bit(3), bit(2)), complete_bob(bit(1), bit(0))))
}

/// Whether the answers agree at the intersection of row `i` and column `j`:
/// Alice's `j`-th entry against Bob's `i`-th entry.
pub fn is_win(q: QuestionPair, alice: &AnswerTriple, bob: &AnswerTriple) -> Result<bool> {
    for (triple, expected) in [(alice, Parity::Even), (bob, Parity::Odd)] {
        if triple.parity != expected || !expected.holds(triple.bits) {
            return Err(Error::ParityViolation {
                bits: triple.bits,
                expected: expected.name(),
            });
        }
    }
    Ok(alice.entry(q.col) == bob.entry(q.row))
}

/// A subset of the sixteen outcomes, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OutcomeSet(u16);

impl OutcomeSet {
    pub fn contains(self, outcome: usize) -> bool {
        outcome < OUTCOME_COUNT && self.0 >> outcome & 1 == 1
    }

    pub fn insert(&mut self, outcome: usize) {
        assert!(outcome < OUTCOME_COUNT, "outcome {outcome} out of range");
        self.0 |= 1 << outcome;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..OUTCOME_COUNT).filter(move |&k| self.contains(k))
    }

    pub fn bits(self) -> u16 {
        self.0
    }
}

impl FromIterator<usize> for OutcomeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = OutcomeSet::default();
        for k in iter {
            set.insert(k);
        }
        set
    }
}

impl fmt::Display for OutcomeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// The outcomes that count as a win for `q`, derived from the parity rule.
pub fn winning_set(q: QuestionPair) -> OutcomeSet {
    (0..OUTCOME_COUNT)
        .filter(|&xi| {
            let (alice, bob) = decode_outcome(xi).expect("outcome in range");
            is_win(q, &alice, &bob).expect("completed answers satisfy parity")
        })
        .collect()
}

/// Winning sets for all nine question pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinningSetTable {
    sets: [OutcomeSet; QUESTION_COUNT],
}

impl WinningSetTable {
    /// Parses the `+`/`-` rows of [`TRANSCRIBED_TABLE`].
    pub fn transcribed() -> Self {
        let sets = TRANSCRIBED_TABLE.map(|row| {
            row.chars()
                .enumerate()
                .filter(|&(_, c)| c == '+')
                .map(|(k, _)| k)
                .collect()
        });
        Self { sets }
    }

    /// Builds every set from parity completion and the intersection rule.
    pub fn derived() -> Self {
        let mut sets = [OutcomeSet::default(); QUESTION_COUNT];
        for q in QuestionPair::all() {
            sets[q.ordinal()] = winning_set(q);
        }
        Self { sets }
    }

    pub fn get(&self, q: QuestionPair) -> OutcomeSet {
        self.sets[q.ordinal()]
    }

    pub fn contains(&self, q: QuestionPair, outcome: usize) -> bool {
        self.get(q).contains(outcome)
    }
}

/// A fixed answer for every possible question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeterministicStrategy {
    alice: [AnswerTriple; 3],
    bob: [AnswerTriple; 3],
}

impl DeterministicStrategy {
    pub fn new(alice: [AnswerTriple; 3], bob: [AnswerTriple; 3]) -> Result<Self> {
        for t in &alice {
            if t.parity != Parity::Even {
                return Err(Error::ParityViolation {
                    bits: t.bits,
                    expected: "even",
                });
            }
        }
        for t in &bob {
            if t.parity != Parity::Odd {
                return Err(Error::ParityViolation {
                    bits: t.bits,
                    expected: "odd",
                });
            }
        }
        Ok(Self { alice, bob })
    }

    /// Alice's answer to row `row` (1-based).
    pub fn alice_answer(&self, row: usize) -> AnswerTriple {
        self.alice[row - 1]
    }

    /// Bob's answer to column `col` (1-based).
    pub fn bob_answer(&self, col: usize) -> AnswerTriple {
        self.bob[col - 1]
    }

    pub fn wins(&self, q: QuestionPair) -> bool {
        self.alice_answer(q.row).entry(q.col) == self.bob_answer(q.col).entry(q.row)
    }

    /// Number of the nine question pairs this strategy wins.
    pub fn win_count(&self) -> u32 {
        QuestionPair::all().filter(|&q| self.wins(q)).count() as u32
    }

    /// Win probability under uniformly random questions.
    pub fn win_probability(&self) -> Ratio<u32> {
        Ratio::new(self.win_count(), QUESTION_COUNT as u32)
    }

    /// All `4³ × 4³ = 4096` strategy pairs.
    pub fn enumerate() -> impl Iterator<Item = DeterministicStrategy> {
        let even = even_triples();
        let odd = odd_triples();
        (0..64usize).flat_map(move |a| {
            let alice = [even[a & 3], even[a >> 2 & 3], even[a >> 4 & 3]];
            (0..64usize).map(move |b| DeterministicStrategy {
                alice,
                bob: [odd[b & 3], odd[b >> 2 & 3], odd[b >> 4 & 3]],
            })
        })
    }
}

fn even_triples() -> [AnswerTriple; 4] {
    [(false, false), (false, true), (true, false), (true, true)].map(|(x, y)| complete_alice(x, y))
}

fn odd_triples() -> [AnswerTriple; 4] {
    [(false, false), (false, true), (true, false), (true, true)].map(|(x, y)| complete_bob(x, y))
}

/// Result of exhaustive classical optimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalOptimum {
    pub max_probability: Ratio<u32>,
    pub optimal_count: usize,
    pub strategies_examined: usize,
}

/// Scores every deterministic strategy pair with exact integer win counts.
pub fn classical_optimum() -> ClassicalOptimum {
    let mut best = 0;
    let mut optimal_count = 0;
    let mut examined = 0;
    for strategy in DeterministicStrategy::enumerate() {
        examined += 1;
        let wins = strategy.win_count();
        if wins > best {
            best = wins;
            optimal_count = 1;
        } else if wins == best {
            optimal_count += 1;
        }
    }
    ClassicalOptimum {
        max_probability: Ratio::new(best, QUESTION_COUNT as u32),
        optimal_count,
        strategies_examined: examined,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(row: usize, col: usize) -> QuestionPair {
        QuestionPair::new(row, col).unwrap()
    }

    fn triple(bits: [u8; 3], parity: Parity) -> AnswerTriple {
        AnswerTriple::new(bits.map(|b| b == 1), parity).unwrap()
    }

    #[test]
    fn alice_completion() {
        assert_eq!(complete_alice(false, false).bits(), [false, false, false]);
        assert_eq!(complete_alice(true, false).bits(), [true, false, true]);
        assert_eq!(complete_alice(true, true).bits(), [true, true, false]);
    }

    #[test]
    fn bob_completion() {
        assert_eq!(complete_bob(false, false).bits(), [false, false, true]);
        assert_eq!(complete_bob(true, false).bits(), [true, false, false]);
        assert_eq!(complete_bob(true, true).bits(), [true, true, true]);
    }

    #[test]
    fn win_and_loss() {
        let alice = triple([0, 0, 0], Parity::Even);
        let bob = triple([0, 0, 1], Parity::Odd);
        assert!(is_win(q(1, 1), &alice, &bob).unwrap());
        assert!(!is_win(q(3, 3), &alice, &bob).unwrap());
    }

    #[test]
    fn outcome_two_loses_question_one_one() {
        let (alice, bob) = decode_outcome(2).unwrap();
        assert_eq!(alice.bits(), [false, false, false]);
        assert_eq!(bob.bits(), [true, false, false]);
        assert!(!is_win(q(1, 1), &alice, &bob).unwrap());
    }

    #[test]
    fn swapped_roles_are_rejected() {
        let alice = triple([0, 0, 0], Parity::Even);
        let bob = triple([0, 0, 1], Parity::Odd);
        assert!(matches!(
            is_win(q(1, 1), &bob, &alice),
            Err(Error::ParityViolation { .. })
        ));
        assert!(AnswerTriple::new([true, false, false], Parity::Even).is_err());
    }

    #[test]
    fn question_bounds() {
        assert!(QuestionPair::new(0, 1).is_err());
        assert!(QuestionPair::new(1, 4).is_err());
        assert_eq!(QuestionPair::all().count(), 9);
    }

    #[test]
    fn table_rows() {
        let table = WinningSetTable::transcribed();
        let s11: Vec<_> = table.get(q(1, 1)).iter().collect();
        let s33: Vec<_> = table.get(q(3, 3)).iter().collect();
        let s21: Vec<_> = table.get(q(2, 1)).iter().collect();
        assert_eq!(s11, [0, 1, 4, 5, 10, 11, 14, 15]);
        assert_eq!(s33, [1, 2, 4, 7, 8, 11, 13, 14]);
        assert_eq!(s21, [0, 2, 4, 6, 9, 11, 13, 15]);
    }

    #[test]
    fn derived_table_matches_transcription() {
        assert_eq!(WinningSetTable::derived(), WinningSetTable::transcribed());
        for q in QuestionPair::all() {
            assert_eq!(winning_set(q).len(), 8, "S{}{}", q.row(), q.col());
        }
    }

    #[test]
    fn enumeration_covers_all_pairs_once() {
        let all: std::collections::HashSet<_> = DeterministicStrategy::enumerate().collect();
        assert_eq!(all.len(), 4096);
    }

    #[test]
    fn classical_bound_is_eight_ninths() {
        let opt = classical_optimum();
        assert_eq!(opt.max_probability, Ratio::new(8, 9));
        assert_eq!(opt.strategies_examined, 4096);
        assert!(opt.optimal_count > 0);
        assert!(DeterministicStrategy::enumerate().all(|s| s.win_count() < 9));
    }
}
