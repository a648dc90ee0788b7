//! The entangled strategy wins every question pair.
//!
//! ```sh
//! cargo run -p telepathy --example ideal_strategy
//! ```

use telepathy::game::QuestionPair;
use telepathy::strategy::{
    initial_density, initial_state, mean_win_probability, question_win_probability,
};

fn main() -> telepathy::Result<()> {
    let psi = initial_state();
    println!("shared state amplitudes:");
    for (k, a) in psi
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 0.0)
    {
        println!("  |{k:04b}⟩  {:+.3}", a.re);
    }

    let rho = initial_density();
    for q in QuestionPair::all() {
        println!(
            "question {q}: p = {:.15}",
            question_win_probability(&rho, q)?
        );
    }
    println!("mean: {:.15}", mean_win_probability(&rho)?);
    Ok(())
}
