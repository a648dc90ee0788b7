//! Plain-text reports behind the command-line subcommands.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::game::classical_optimum;
use crate::rindler::{
    analytic_threshold_r, classical_threshold_r, closed_form_p, simulated_p_with,
    AccelerationParameter, UnruhModes, CLASSICAL_THRESHOLD,
};

/// Best classical win probability as an exact fraction and a decimal.
pub fn classical_report() -> String {
    let opt = classical_optimum();
    let p = opt.max_probability;
    let decimal = f64::from(*p.numer()) / f64::from(*p.denom());
    let mut out = String::new();
    writeln!(out, "max_probability: {p}").unwrap();
    writeln!(out, "decimal: {decimal:.6}").unwrap();
    writeln!(
        out,
        "optimal_strategies: {} of {}",
        opt.optimal_count, opt.strategies_examined
    )
    .unwrap();
    out
}

/// Simulated and closed-form win probability at `r`.
pub fn quantum_report(r: f64, modes: UnruhModes) -> Result<String> {
    let r = AccelerationParameter::new(r)?;
    let mut out = String::new();
    writeln!(out, "r: {:.10}", r.value()).unwrap();
    writeln!(out, "p_simulated: {:.10}", simulated_p_with(r, modes)).unwrap();
    if modes == UnruhModes::All {
        writeln!(out, "p_closed_form: {:.10}", closed_form_p(r)).unwrap();
    }
    writeln!(out, "classical_threshold: {CLASSICAL_THRESHOLD:.10}").unwrap();
    Ok(out)
}

/// Bisection root against the analytic crossing of the classical bound.
pub fn threshold_report(tolerance: f64) -> Result<String> {
    let root = classical_threshold_r(tolerance)?.value();
    let analytic = analytic_threshold_r();
    let difference = (root - analytic).abs();
    if difference >= tolerance {
        return Err(Error::ThresholdMismatch {
            root,
            analytic,
            tolerance,
        });
    }
    let mut out = String::new();
    writeln!(out, "bisection_root: {root:.12}").unwrap();
    writeln!(out, "analytic_root: {analytic:.12}").unwrap();
    writeln!(out, "difference: {difference:.3e}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_mentions_eight_ninths() {
        let text = classical_report();
        assert!(text.contains("8/9"));
        assert!(text.contains("0.888889"));
    }

    #[test]
    #[allow(clippy::approx_constant)] // decimal input of pi/4
    fn quantum_endpoints() {
        let text = quantum_report(0.0, UnruhModes::All).unwrap();
        assert!(text.contains("p_simulated: 1.0000000000"));
        let text = quantum_report(0.7853981634, UnruhModes::All).unwrap();
        assert!(text.contains("p_simulated: 0.5555555556"));
        assert!(text.contains("p_closed_form: 0.5555555556"));
        let err = quantum_report(1.0, UnruhModes::All).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("[0, pi/4]"));
    }

    #[test]
    fn threshold_agrees() {
        let text = threshold_report(1e-9).unwrap();
        assert!(text.contains("bisection_root: 0.302171"));
        assert_eq!(threshold_report(0.0).unwrap_err().exit_code(), 2);
    }
}
