//! Converts proper accelerations to the dimensionless parameter `r` and
//! evaluates the win probability.
//!
//! ```sh
//! cargo run -p telepathy --example physical_acceleration
//! ```

use std::f64::consts::PI;

use telepathy::rindler::{acceleration_to_r, simulated_p, PhysicalAcceleration};

fn main() -> telepathy::Result<()> {
    let omega = 1.0;
    println!("{:>12} {:>12} {:>12}", "a/(2πωc)", "r", "p");
    for ratio in [0.05, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0, 1e4] {
        let phys = PhysicalAcceleration::natural(ratio * 2.0 * PI * omega, omega)?;
        let r = acceleration_to_r(phys);
        println!("{ratio:>12} {:>12.6} {:>12.6}", r.value(), simulated_p(r));
    }
    Ok(())
}
