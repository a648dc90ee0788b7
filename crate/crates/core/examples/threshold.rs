//! Locates the acceleration at which the quantum advantage disappears.
//!
//! ```sh
//! cargo run -p telepathy --example threshold
//! ```

use telepathy::rindler::{
    analytic_threshold_r, bisect, classical_threshold_r, closed_form_p, simulated_p_with,
    AccelerationParameter, UnruhModes, CLASSICAL_THRESHOLD,
};

fn main() -> telepathy::Result<()> {
    for tolerance in [1e-3, 1e-6, 1e-9, 1e-12] {
        let root = classical_threshold_r(tolerance)?;
        println!(
            "tol {tolerance:.0e}: r* = {:.12}  (analytic {:.12})",
            root.value(),
            analytic_threshold_r()
        );
    }
    let root = classical_threshold_r(1e-12)?;
    let c = (2.0 * root.value()).cos();
    println!(
        "cos 2r* = {c:.12}, (sqrt 7 - 1)/2 = {:.12}",
        (7f64.sqrt() - 1.0) / 2.0
    );
    println!("p(r*) = {:.12}", closed_form_p(root));

    // Same question for the model in which only Bob's modes are transformed.
    let bob_only = bisect(
        |r| {
            simulated_p_with(AccelerationParameter::new(r).unwrap(), UnruhModes::BobOnly)
                - CLASSICAL_THRESHOLD
        },
        1e-6,
        std::f64::consts::FRAC_PI_4,
        1e-10,
    )?;
    println!("inertial Alice: crossing at r = {bob_only:.10}");
    Ok(())
}
