//! Win probability against acceleration, with the classical bound drawn as
//! a reference line.
//!
//! ```sh
//! cargo run -p telepathy --example win_curve
//! ```

use telepathy::rindler::CLASSICAL_THRESHOLD;
use telepathy::sweep::{run_sweep, SweepConfig};

fn main() -> telepathy::Result<()> {
    let config = SweepConfig {
        steps: 21,
        ..Default::default()
    };
    let width = 50.0;
    for rec in run_sweep(&config)? {
        // Map [5/9, 1] onto the bar width.
        let scale = |p: f64| ((p - 5.0 / 9.0) / (4.0 / 9.0) * width).round() as usize;
        let bar = scale(rec.p_simulated);
        let mark = scale(CLASSICAL_THRESHOLD);
        let line: String = (0..=width as usize)
            .map(|k| match (k <= bar, k == mark) {
                (_, true) => '|',
                (true, false) => '#',
                _ => ' ',
            })
            .collect();
        println!("r = {:.4}  p = {:.6}  {line}", rec.r, rec.p_simulated);
    }
    Ok(())
}
