use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use noise_engine::OUNoiseParams;
use quantum_core::drive::DriveSpec;
use quantum_core::ode::OdeOpts;
use quantum_core::{pauli, so3};
use tcl_engine::{
    hamiltonian_generator, k2_generator_quadrature, k3_generator_general, k3_generator_with_drive,
    propagate, rotating_frame_map, second_order_generator, tcl_generator, third_order_generator,
    DephasingModel, Frame, FrameDirection, KernelMode, TclOrder,
};

fn fig2_model() -> DephasingModel {
    DephasingModel {
        omega: 1.0,
        drive: DriveSpec::new(1e-2, 1.0, std::f64::consts::FRAC_PI_4),
        noise: OUNoiseParams::new(4e-3, 0.1).unwrap(),
    }
}

fn fig3_model() -> DephasingModel {
    DephasingModel {
        omega: 1.0,
        drive: DriveSpec::new(5e-2, 1.0, std::f64::consts::FRAC_PI_4),
        noise: OUNoiseParams::new(4e-3, 0.1).unwrap(),
    }
}

/// Off-resonant sample point exercising every parameter at once.
fn detuned_model() -> DephasingModel {
    DephasingModel {
        omega: 1.3,
        drive: DriveSpec::new(0.04, 0.9, 0.7),
        noise: OUNoiseParams::new(6e-3, 0.23).unwrap(),
    }
}

#[test]
fn first_order_generator_is_the_expected_rotation_axis() {
    let undriven = DephasingModel {
        omega: 1.3,
        drive: DriveSpec::off(),
        noise: OUNoiseParams::new(1e-3, 0.1).unwrap(),
    };
    let m = hamiltonian_generator(&undriven, Frame::Lab, 2.0);
    assert!((m - so3::l_z() * 1.3).norm() < 1e-15);

    let resonant = DephasingModel {
        omega: 1.0,
        drive: DriveSpec::new(0.05, 1.0, 0.0),
        noise: undriven.noise,
    };
    let m = hamiltonian_generator(&resonant, Frame::Rotating, 17.0);
    assert!((m - so3::l_x() * 0.05).norm() < 1e-15);
}

#[test]
fn second_order_generator_switches_on_over_the_memory_time() {
    let noise = OUNoiseParams::new(6e-3, 0.23).unwrap();
    assert!(second_order_generator(&noise, KernelMode::Transient, 0.0).norm() < 1e-15);

    let late = second_order_generator(&noise, KernelMode::Transient, 200.0 * 0.23);
    let asymptotic = second_order_generator(&noise, KernelMode::Asymptotic, 0.0);
    assert!((late - asymptotic).norm() < 1e-15);
    assert!((asymptotic - so3::transverse_projector() * (-6e-3)).norm() < 1e-18);

    let at = second_order_generator(&noise, KernelMode::Transient, 0.9);
    assert!((at[(0, 0)] + 5.88012239427928695e-03).abs() < 1e-17);
    assert!((at[(1, 1)] + 5.88012239427928695e-03).abs() < 1e-17);
    assert_eq!(at[(2, 2)], 0.0);
}

#[test]
fn third_order_generator_matches_reference_values_and_column_structure() {
    let m = third_order_generator(&detuned_model(), Frame::Lab, KernelMode::Transient, 0.9);
    assert!((m[(0, 2)] - 4.96643083885687142e-05).abs() < 1e-16);
    assert!((m[(1, 2)] - 7.71785215943728757e-07).abs() < 1e-16);
    for i in 0..3 {
        for j in 0..2 {
            assert_eq!(m[(i, j)], 0.0);
        }
    }
    assert_eq!(m[(2, 2)], 0.0);

    // Resonant rotating frame: column proportional to (sin phi, -cos phi, 0).
    let m = third_order_generator(&fig3_model(), Frame::Rotating, KernelMode::Transient, 0.35);
    assert!((m[(0, 2)] - 1.22203859104499073e-05).abs() < 1e-17);
    assert!((m[(1, 2)] + 1.22203859104499090e-05).abs() < 1e-17);
    // At phi = pi/4 the two entries have equal magnitude and opposite sign.
    assert!((m[(0, 2)] + m[(1, 2)]).abs() < 1e-19);
}

#[test]
fn third_order_profile_reaches_its_asymptotic_value() {
    let model = detuned_model();
    let late = third_order_generator(&model, Frame::Rotating, KernelMode::Transient, 80.0);
    let asym = third_order_generator(&model, Frame::Rotating, KernelMode::Asymptotic, 80.0);
    assert!((late - asym).norm() < 1e-12);
}

#[test]
fn quadrature_second_order_reproduces_the_closed_form_with_drive_present() {
    let mut rng = ChaCha12Rng::seed_from_u64(43);
    for _ in 0..10 {
        let model = DephasingModel {
            omega: rng.random_range(0.5..2.0),
            drive: DriveSpec::new(
                rng.random_range(0.0..0.2),
                rng.random_range(0.5..2.0),
                rng.random_range(0.0..6.28),
            ),
            noise: OUNoiseParams::new(rng.random_range(1e-4..1e-2), rng.random_range(0.05..1.0))
                .unwrap(),
        };
        let t = rng.random_range(0.1..3.0);
        for frame in [Frame::Lab, Frame::Rotating] {
            let built = k2_generator_quadrature(&model, frame, t, 1e-14).unwrap();
            let closed = second_order_generator(&model.noise, KernelMode::Transient, t);
            assert!(
                (built.m - closed).norm() < 1e-12,
                "frame {frame:?}: deviation {}",
                (built.m - closed).norm()
            );
            assert!(built.b.norm() < 1e-13);
        }
    }
}

#[test]
fn quadrature_third_order_matches_the_closed_form_in_both_frames() {
    for (model, t) in [(detuned_model(), 0.9), (fig3_model(), 0.35), (fig2_model(), 2.0)] {
        for frame in [Frame::Lab, Frame::Rotating] {
            let built = k3_generator_general(&model, frame, t, 1e-14).unwrap();
            let closed = third_order_generator(&model, frame, KernelMode::Transient, t);
            assert!(
                (built.m - closed).norm() < 1e-10,
                "frame {frame:?}: deviation {}",
                (built.m - closed).norm()
            );
            assert!(built.b.norm() < 1e-12);
        }
    }
}

#[test]
fn third_order_vanishes_without_drive_and_scales_linearly_in_the_amplitude() {
    let mut undriven = detuned_model();
    undriven.drive = DriveSpec::off();
    let k = k3_generator_general(&undriven, Frame::Lab, 1.2, 1e-14).unwrap();
    assert!(k.m.norm() < 1e-14);

    let model = detuned_model();
    let mut doubled = model;
    doubled.drive.amplitude *= 2.0;
    let k1 = k3_generator_general(&model, Frame::Rotating, 0.8, 1e-14).unwrap();
    let k2 = k3_generator_general(&doubled, Frame::Rotating, 0.8, 1e-14).unwrap();
    assert!((k2.m - k1.m * 2.0).norm() < 1e-12 * k1.m.norm().max(1.0));
}

#[test]
fn third_order_vanishes_when_the_drive_commutes_with_the_noise_coupling() {
    let noise = OUNoiseParams::new(6e-3, 0.23).unwrap();
    let h0 = pauli::sigma_z() * Complex64::new(0.65, 0.0);
    let drive_h = |u: f64| pauli::sigma_z() * Complex64::new(0.04 * (0.9 * u + 0.7).cos(), 0.0);
    let k = k3_generator_with_drive(&h0, &drive_h, &noise, 1.1, 1e-14).unwrap();
    assert!(k.m.norm() < 1e-12);
    assert!(k.b.norm() < 1e-12);
}

fn tight() -> OdeOpts {
    OdeOpts { rtol: 1e-11, atol: 1e-14, ..Default::default() }
}

#[test]
fn second_order_propagation_matches_reference_trajectory_fixtures() {
    let grid: Vec<f64> = (0..=4000).map(|k| k as f64 * 0.25).collect();
    let r0 = Vector3::new(0.0, 0.0, 1.0);

    let fig2 = propagate(
        &fig2_model(),
        TclOrder::Second,
        Frame::Rotating,
        KernelMode::Transient,
        &r0,
        &grid,
        &tight(),
    )
    .unwrap();
    let expect_10 = Vector3::new(
        6.91999398441278113e-02,
        -6.91999398441278529e-02,
        9.95070066225991479e-01,
    );
    let expect_1000 = Vector3::new(
        -3.56084342168251494e-02,
        3.56084342168251633e-02,
        -1.36092027551393102e-01,
    );
    assert!((fig2[40] - expect_10).norm() < 1e-6, "dev {}", (fig2[40] - expect_10).norm());
    assert!((fig2[4000] - expect_1000).norm() < 1e-6, "dev {}", (fig2[4000] - expect_1000).norm());

    let fig3 = propagate(
        &fig3_model(),
        TclOrder::Second,
        Frame::Rotating,
        KernelMode::Transient,
        &r0,
        &grid,
        &tight(),
    )
    .unwrap();
    let expect_10 = Vector3::new(
        3.32316028508024941e-01,
        -3.32316028508025385e-01,
        8.79190885095462393e-01,
    );
    let expect_1000 = Vector3::new(
        -2.88053708282955921e-02,
        2.88053708282954637e-02,
        1.27439469276468403e-01,
    );
    assert!((fig3[40] - expect_10).norm() < 1e-6);
    assert!((fig3[4000] - expect_1000).norm() < 1e-6);
}

#[test]
fn third_order_propagation_matches_reference_trajectory_fixtures() {
    let grid: Vec<f64> = (0..=4000).map(|k| k as f64 * 0.25).collect();
    let r0 = Vector3::new(0.0, 0.0, 1.0);

    let fig2 = propagate(
        &fig2_model(),
        TclOrder::Third,
        Frame::Rotating,
        KernelMode::Transient,
        &r0,
        &grid,
        &tight(),
    )
    .unwrap();
    let expect_10 = Vector3::new(
        6.92270324000211490e-02,
        -6.92270324000211906e-02,
        9.95068173046294802e-01,
    );
    let expect_1000 = Vector3::new(
        -3.58007805004772889e-02,
        3.58007805004773375e-02,
        -1.36041473626333315e-01,
    );
    assert!((fig2[40] - expect_10).norm() < 1e-6);
    assert!((fig2[4000] - expect_1000).norm() < 1e-6);

    let fig3 = propagate(
        &fig3_model(),
        TclOrder::Third,
        Frame::Rotating,
        KernelMode::Transient,
        &r0,
        &grid,
        &tight(),
    )
    .unwrap();
    let expect_10 = Vector3::new(
        3.32440927858130064e-01,
        -3.32440927858129731e-01,
        8.79145424735900738e-01,
    );
    let expect_1000 = Vector3::new(
        -2.78958559944870073e-02,
        2.78958559944868928e-02,
        1.27892268853602303e-01,
    );
    assert!((fig3[40] - expect_10).norm() < 1e-6);
    assert!((fig3[4000] - expect_1000).norm() < 1e-6);
}

#[test]
fn frame_map_round_trips_and_freezes_resonant_precession() {
    let r = Vector3::new(0.3, -0.4, 0.8);
    let there = rotating_frame_map(&r, 7.3, 0.9, FrameDirection::ToRotating);
    let back = rotating_frame_map(&there, 7.3, 0.9, FrameDirection::ToLab);
    assert!((back - r).norm() < 1e-14);

    // Undriven precession at Omega viewed from a frame rotating at Omega is static.
    let omega = 1.0;
    let r0 = Vector3::new(1.0, 0.0, 0.0);
    for t in [0.5, 3.0, 12.0] {
        let lab = so3::rotation_z(omega * t) * r0;
        let rot = rotating_frame_map(&lab, t, omega, FrameDirection::ToRotating);
        assert!((rot - r0).norm() < 1e-13);
    }
}

#[test]
fn lab_and_rotating_propagations_agree_through_the_frame_map() {
    let model = fig3_model();
    let grid: Vec<f64> = (0..=200).map(|k| k as f64 * 0.1).collect();
    let r0 = Vector3::new(0.0, 0.0, 1.0);
    let lab = propagate(
        &model,
        TclOrder::Third,
        Frame::Lab,
        KernelMode::Transient,
        &r0,
        &grid,
        &tight(),
    )
    .unwrap();
    let rot = propagate(
        &model,
        TclOrder::Third,
        Frame::Rotating,
        KernelMode::Transient,
        &r0,
        &grid,
        &tight(),
    )
    .unwrap();
    for i in 0..grid.len() {
        let mapped =
            rotating_frame_map(&lab[i], grid[i], model.drive.frequency, FrameDirection::ToRotating);
        assert!((mapped - rot[i]).norm() < 1e-7, "t = {}", grid[i]);
    }
}

#[test]
fn propagation_stays_inside_the_bloch_ball_over_long_horizons() {
    let grid: Vec<f64> = (0..=1000).map(|k| k as f64 * 2.0).collect();
    let r0 = Vector3::new(0.0, 0.0, 1.0);
    let sol = propagate(
        &fig3_model(),
        TclOrder::Third,
        Frame::Rotating,
        KernelMode::Transient,
        &r0,
        &grid,
        &OdeOpts::default(),
    )
    .unwrap();
    for (t, r) in grid.iter().zip(sol.iter()) {
        assert!(r.norm() <= 1.0 + 1e-6, "t = {t}: |r| = {}", r.norm());
    }
}

#[test]
fn generator_assembly_includes_exactly_the_requested_orders() {
    let model = fig3_model();
    let t = 1.7;
    let k2 = tcl_generator(&model, TclOrder::Second, Frame::Rotating, KernelMode::Transient, t);
    let k3 = tcl_generator(&model, TclOrder::Third, Frame::Rotating, KernelMode::Transient, t);
    let expected_diff: Matrix3<f64> =
        third_order_generator(&model, Frame::Rotating, KernelMode::Transient, t);
    assert!((k3.m - k2.m - expected_diff).norm() < 1e-15);
    assert_eq!(k2.b, Vector3::zeros());
}
