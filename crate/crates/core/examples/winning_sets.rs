//! Prints the winning outcome sets and checks them against the transcribed
//! table.
//!
//! ```sh
//! cargo run -p telepathy --example winning_sets
//! ```

use telepathy::game::{decode_outcome, QuestionPair, WinningSetTable};

fn main() {
    let derived = WinningSetTable::derived();
    let transcribed = WinningSetTable::transcribed();

    print!("      ");
    for xi in 0..16 {
        print!("{xi:>3}");
    }
    println!();
    for q in QuestionPair::all() {
        print!("S{}{}   ", q.row(), q.col());
        for xi in 0..16 {
            print!("{:>3}", if derived.contains(q, xi) { "+" } else { "-" });
        }
        println!("   {}", derived.get(q));
    }
    println!("derived == transcribed: {}", derived == transcribed);

    let (alice, bob) = decode_outcome(0b1011).unwrap();
    println!("outcome 11 decodes to Alice {alice}, Bob {bob}");
}
