//! Exhaustive search over every deterministic classical strategy.
//!
//! ```sh
//! cargo run -p telepathy --example classical_bound
//! ```

use telepathy::game::{classical_optimum, DeterministicStrategy, QuestionPair};

fn main() {
    let opt = classical_optimum();
    println!(
        "best classical win probability: {} over {} strategy pairs ({} optimal)",
        opt.max_probability, opt.strategies_examined, opt.optimal_count
    );

    let best = DeterministicStrategy::enumerate()
        .find(|s| s.win_count() == 8)
        .expect("an optimal strategy exists");
    println!("one optimal strategy:");
    for k in 1..=3 {
        println!(
            "  row {k} -> {}   column {k} -> {}",
            best.alice_answer(k),
            best.bob_answer(k)
        );
    }
    let lost: Vec<String> = QuestionPair::all()
        .filter(|&q| !best.wins(q))
        .map(|q| q.to_string())
        .collect();
    println!("  loses on question {}", lost.join(", "));
}
