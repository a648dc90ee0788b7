mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use telepathy::game::{QuestionPair, WinningSetTable};
use telepathy::linalg::{
    basis_probability, conjugate, partial_trace, DensityOperator, Kron, Matrix, StateVector,
    Unitary,
};
use telepathy::rindler::{
    acceleration_to_r, closed_form_p, partial_swap, rindler_pair_state, shared_state_accelerated,
    shared_state_accelerated_with, simulated_p, simulated_p_with, AccelerationParameter,
    PhysicalAcceleration, UnruhModes,
};
use telepathy::strategy::{build_operators, final_state, initial_density, mean_win_probability};

fn r(x: f64) -> AccelerationParameter {
    AccelerationParameter::new(x).unwrap()
}

/// Independent closed form for the Bob-only model, obtained by a
/// least-squares trigonometric fit of an independent numpy simulation
/// (residual below 5e-16) and checked here at arbitrary points.
fn bob_only_reference(x: f64) -> f64 {
    (91.0 + 24.0 * x.cos() + 20.0 * (2.0 * x).cos() + 8.0 * (3.0 * x).cos() + (4.0 * x).cos())
        / 144.0
}

#[test]
fn strategy_operators_are_unitary() {
    let ops = build_operators().unwrap();
    for u in ops.alice.iter().chain(&ops.bob) {
        assert!(u.matrix().unitarity_defect() < 1e-12);
        assert!(
            u.dagger()
                .mul(u)
                .unwrap()
                .matrix()
                .max_abs_diff(&Matrix::identity(4))
                .unwrap()
                < 1e-12
        );
    }
}

#[test]
fn partial_swap_is_an_involution() {
    let s = partial_swap();
    let squared = s.mul(&s).unwrap();
    assert!(
        squared
            .matrix()
            .max_abs_diff(&Matrix::identity(16))
            .unwrap()
            < 1e-15
    );
    assert!(s.matrix().unitarity_defect() < 1e-15);
}

#[test]
fn inertial_pair_reduces_to_singlet() {
    let pair = rindler_pair_state(AccelerationParameter::INERTIAL, UnruhModes::BobOnly);
    let rho = DensityOperator::from_pure(pair.state()).unwrap();
    let reduced = partial_trace(&rho, &[2, 2, 2, 2], &[0, 2]).unwrap();
    let singlet = StateVector::from_real(&[0.0, FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0]).unwrap();
    let expected = DensityOperator::from_pure(&singlet).unwrap();
    assert!(reduced.matrix().max_abs_diff(expected.matrix()).unwrap() < 1e-15);
}

#[test]
fn inertial_state_is_recovered_in_both_models() {
    for modes in [UnruhModes::All, UnruhModes::BobOnly] {
        let rho = shared_state_accelerated_with(AccelerationParameter::INERTIAL, modes);
        let diff = rho
            .matrix()
            .max_abs_diff(initial_density().matrix())
            .unwrap();
        assert!(diff < 1e-12, "{modes:?}: {diff}");
    }
}

#[test]
fn ideal_final_state_stays_in_winning_set() {
    let table = WinningSetTable::transcribed();
    let q = QuestionPair::new(1, 1).unwrap();
    let rho_f = final_state(&initial_density(), q).unwrap();
    let inside: f64 = table
        .get(q)
        .iter()
        .map(|xi| basis_probability(&rho_f, xi).unwrap())
        .sum();
    assert!((inside - 1.0).abs() < 1e-12);
}

#[test]
fn accelerated_states_are_valid() {
    for k in 0..=20 {
        let x = r(FRAC_PI_4 * k as f64 / 20.0);
        for modes in [UnruhModes::All, UnruhModes::BobOnly] {
            common::assert_valid_density(&shared_state_accelerated_with(x, modes));
        }
    }
}

#[test]
fn infinite_acceleration_gives_five_ninths() {
    let rho = shared_state_accelerated(AccelerationParameter::INFINITE);
    assert!((mean_win_probability(&rho).unwrap() - 5.0 / 9.0).abs() < 1e-10);
}

#[test]
fn simulation_matches_closed_form_off_grid() {
    for x in [0.013, 0.1, 0.302171, 0.5, 0.77] {
        assert!(
            (simulated_p(r(x)) - closed_form_p(r(x))).abs() < 1e-12,
            "r = {x}"
        );
    }
}

#[test]
fn bob_only_model_frozen_values() {
    // Values from an independent numpy density-matrix simulation.
    let frozen = [
        (0.1, 0.9933693363229524),
        (0.3, 0.9428473995684031),
        (0.5, 0.8542901276355983),
        (FRAC_PI_4, 0.7035674201318383),
    ];
    for (x, expected) in frozen {
        let p = simulated_p_with(r(x), UnruhModes::BobOnly);
        assert!((p - expected).abs() < 1e-12, "r = {x}: {p}");
    }
    for k in 0..=50 {
        let x = FRAC_PI_4 * k as f64 / 50.0;
        let p = simulated_p_with(r(x), UnruhModes::BobOnly);
        assert!((p - bob_only_reference(x)).abs() < 1e-12, "r = {x}");
    }
}

#[test]
fn accelerated_player_can_be_exchanged() {
    // (A1 A2 B1 B2) -> (B1 B2 A1 A2): puts the degraded modes on Alice's side.
    let exchange = Unitary::new(Matrix::from_fn(16, |row, col| {
        let swapped = ((col & 0b11) << 2) | (col >> 2);
        if row == swapped {
            1.0.into()
        } else {
            0.0.into()
        }
    }))
    .unwrap();
    for x in [0.2, 0.5, FRAC_PI_4] {
        let bob = shared_state_accelerated_with(r(x), UnruhModes::BobOnly);
        let alice = conjugate(&exchange, &bob).unwrap();
        let p_bob = mean_win_probability(&bob).unwrap();
        let p_alice = mean_win_probability(&alice).unwrap();
        assert!((p_bob - p_alice).abs() < 1e-12);
    }
    // The all-modes state is itself symmetric under the exchange.
    let all = shared_state_accelerated(r(0.4));
    let exchanged = conjugate(&exchange, &all).unwrap();
    assert!(all.matrix().max_abs_diff(exchanged.matrix()).unwrap() < 1e-15);
}

#[test]
fn per_question_outcome_distributions_are_normalized() {
    for x in [0.0, 0.3, FRAC_PI_4] {
        let rho = shared_state_accelerated(r(x));
        for q in QuestionPair::all() {
            let rho_f = final_state(&rho, q).unwrap();
            let total: f64 = (0..16)
                .map(|xi| basis_probability(&rho_f, xi).unwrap())
                .sum();
            assert!((total - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn acceleration_mapping_reference_points() {
    // Independent evaluation of acos((exp(-2*pi/a) + 1)^(-1/2)) in Python.
    let frozen = [
        (0.5, 0.001867440560910337),
        (1.0, 0.04318704852478235),
        (2.0 * PI, 0.5452076238305835),
        (10.0, 0.6308404056786772),
        (100.0, 0.7696927833485311),
    ];
    for (a, expected) in frozen {
        let got = acceleration_to_r(PhysicalAcceleration::natural(a, 1.0).unwrap()).value();
        assert!((got - expected).abs() < 1e-14, "a = {a}: {got}");
    }
}

#[test]
fn factorized_trace_matches_full_trace() {
    // Trace region II out of the full 256-dimensional two-pair state.
    for modes in [UnruhModes::All, UnruhModes::BobOnly] {
        for x in [0.0, 0.21, 0.6, FRAC_PI_4] {
            let pair = rindler_pair_state(r(x), modes);
            let both = pair.state().kron(pair.state()).unwrap();
            let rho = DensityOperator::from_pure(&both).unwrap();
            let traced = partial_trace(&rho, &[2; 8], &[0, 2, 4, 6]).unwrap();
            let full = conjugate(&partial_swap(), &traced).unwrap();
            let fast = shared_state_accelerated_with(r(x), modes);
            assert!(full.matrix().max_abs_diff(fast.matrix()).unwrap() < 1e-15);
        }
    }
}
