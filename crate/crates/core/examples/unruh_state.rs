//! Builds the shared state seen by accelerated detectors and compares the
//! two acceleration models.
//!
//! ```sh
//! cargo run -p telepathy --example unruh_state -- 0.5
//! ```

use telepathy::rindler::{
    closed_form_p, rindler_pair_state, shared_state_accelerated_with, simulated_p_with,
    unruh_vacuum, AccelerationParameter, UnruhModes,
};

fn main() -> telepathy::Result<()> {
    let r: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("r must be a number"))
        .unwrap_or(0.5);
    let r = AccelerationParameter::new(r)?;

    let vacuum = unruh_vacuum(r);
    println!(
        "vacuum in Rindler modes: {:.6}|00⟩ + {:.6}|11⟩",
        vacuum.amplitude(0).re,
        vacuum.amplitude(3).re
    );

    let pair = rindler_pair_state(r, UnruhModes::BobOnly);
    println!("pair state with inertial Alice (I_A II_A I_B II_B):");
    for (k, a) in pair
        .state()
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 1e-15)
    {
        println!("  |{k:04b}⟩  {:+.6}", a.re);
    }

    for modes in [UnruhModes::All, UnruhModes::BobOnly] {
        let rho = shared_state_accelerated_with(r, modes);
        let purity = rho.matrix().mul(rho.matrix())?.trace().re;
        println!(
            "{modes:?}: purity {purity:.6}, p = {:.12}",
            simulated_p_with(r, modes)
        );
    }
    println!("closed form: p = {:.12}", closed_form_p(r));
    Ok(())
}
