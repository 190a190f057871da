use num_complex::Complex64 as C64;
use spinweave_core::field::*;
use spinweave_core::sampling::{self, trial_rng};
use spinweave_core::sectors::{
    cgamma_power, lower_all_closed_form, HigherSpinField, SectorId, SectorTensor,
};
use spinweave_core::spinor::{MinkCovector, MinkVector};
use spinweave_core::wtensor::{sym_w_decompose, WTensor};
use spinweave_core::SpinError;

fn random_wave(seed: u64, trial: u64, two_j: usize) -> PlaneWave {
    let mut r = trial_rng(seed, trial);
    let m = sampling::mass(&mut r);
    let p = Momentum::new(sampling::on_shell_covector(&mut r, m), m).unwrap();
    let main = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
    PlaneWave::solve(two_j, p, &main).unwrap()
}

#[test]
fn solved_fields_satisfy_algebraic_and_jw_equations() {
    for two_j in 1..=4 {
        for trial in 0..50 {
            let w = random_wave(11, trial, two_j);
            let scale = w.amplitude().max_abs().max(1.0);
            let alg = algebraic_residual(w.amplitude(), w.momentum()).unwrap();
            let jw = jw_residual(w.amplitude(), w.momentum()).unwrap();
            let restricted = jw_restricted_residual(w.amplitude(), w.momentum()).unwrap();
            assert!(alg <= 1e-10 * scale, "2j={two_j} algebraic {alg:e}");
            assert!(jw <= 1e-10 * scale, "2j={two_j} jw {jw:e}");
            assert!(restricted <= 1e-10 * scale, "2j={two_j} restricted {restricted:e}");
        }
    }
}

#[test]
fn tilde_sectors_are_transposes_on_solutions() {
    let w = random_wave(3, 0, 3);
    for h in 1..3 {
        let plain = w.amplitude().sector(SectorId::plain(h, 3 - h)).unwrap();
        let tilde = w.amplitude().sector(SectorId::tilde(3 - h, h)).unwrap();
        let t = spinweave_core::sectors::transpose_tilde(plain);
        assert!(t.max_diff(tilde).unwrap() < 1e-11);
    }
}

#[test]
fn random_field_is_not_a_solution() {
    let mut r = trial_rng(5, 0);
    let p = Momentum::new(sampling::on_shell_covector(&mut r, 1.0), 1.0).unwrap();
    let psi = sampling::field(&mut r, 2);
    assert!(algebraic_residual(&psi, &p).unwrap() > 1e-3);
    assert_eq!(algebraic_residual(&HigherSpinField::zeros(2), &p).unwrap(), 0.0);
}

#[test]
fn spin_one_tilde_main_matches_closed_form() {
    let p = Momentum::new(MinkCovector::from_pauli([1.25, 0.75, 0.0, 0.0]), 1.0).unwrap();
    let main = SectorTensor::from_packed(SectorId::plain(2, 0), &[C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
    let psi = solve_algebraic(2, &p, &main).unwrap();
    let closed = lower_all_closed_form(&p.raised(), &main).unwrap();
    let low = psi.sector(SectorId::tilde(2, 0)).unwrap();
    assert!(closed.max_diff(low).unwrap() < 1e-12);
}

#[test]
fn solver_is_linear() {
    let w = random_wave(9, 1, 2);
    let k = C64::new(0.3, -1.7);
    let scaled = solve_algebraic(2, w.momentum(), &w.amplitude().main().scale(k)).unwrap();
    assert!(scaled.max_diff(&w.amplitude().scale(k)).unwrap() < 1e-12);
}

#[test]
fn solver_rejects_wrong_main_sector() {
    let p = Momentum::rest(1.0).unwrap();
    let bad = SectorTensor::zeros(SectorId::plain(1, 1));
    assert!(matches!(solve_algebraic(2, &p, &bad), Err(SpinError::WrongSector { .. })));
}

#[test]
fn solution_space_has_dimension_two_j_plus_one() {
    for two_j in 1..=4 {
        let mut r = trial_rng(21, two_j as u64);
        let m = sampling::mass(&mut r);
        let p = Momentum::new(sampling::on_shell_covector(&mut r, m), m).unwrap();
        assert_eq!(solution_space_nullity(two_j, &p).unwrap(), two_j + 1, "2j={two_j}");
    }
}

#[test]
fn zero_main_sector_forces_zero_solution() {
    let p = Momentum::from_spatial(1.3, [0.2, -0.4, 0.9]).unwrap();
    let psi = solve_algebraic(3, &p, &SectorTensor::zeros(SectorId::plain(3, 0))).unwrap();
    assert_eq!(psi.max_abs(), 0.0);
}

#[test]
fn bargmann_wigner_solutions() {
    for rank in 1..=4 {
        let mut r = trial_rng(2, rank as u64);
        let m = sampling::mass(&mut r);
        let p = Momentum::new(sampling::on_shell_covector(&mut r, m), m).unwrap();
        let basis = bw_solve(rank, &p);
        assert_eq!(basis.len(), rank + 1);
        for t in &basis {
            assert!(bw_residual(t, &p).unwrap() <= 1e-10);
            assert!(jw_operator_check(t, &p).unwrap() <= 1e-10 * m.powi(rank as i32).max(1.0));
        }
    }
}

#[test]
fn negative_energy_spinor_has_gap_residual() {
    let m = 1.7;
    let p = Momentum::rest(m).unwrap();
    // (z_1, −γ z_1 / m) is the −m eigenvector in the rest frame.
    let e = positive_energy_basis(&p)[0];
    let minus = spinweave_core::dirac::DiracSpinor::new(e.u, -e.lbar);
    let t = WTensor::product(&[minus]);
    let res = bw_residual(&t, &p).unwrap();
    assert!((res - 2.0 * m * t.max_abs()).abs() < 1e-12);
}

#[test]
fn mixed_eigenvalue_tensor_jw_residual() {
    let m = 0.8;
    let p = Momentum::rest(m).unwrap();
    let e = positive_energy_basis(&p)[0];
    let minus = spinweave_core::dirac::DiracSpinor::new(e.u, -e.lbar);
    // eigenvalues (+m, −m): product γ_(1)γ_(2) gives −m², residual 2m²|t|
    let t = WTensor::product(&[e, minus]);
    let res = jw_operator_check(&t, &p).unwrap();
    assert!((res - 2.0 * m * m * t.max_abs()).abs() < 1e-12);
}

#[test]
fn bw_solutions_embed_into_generalised_solutions() {
    let mut r = trial_rng(8, 0);
    let m = sampling::mass(&mut r);
    let p = Momentum::new(sampling::on_shell_covector(&mut r, m), m).unwrap();
    for t in bw_solve(2, &p) {
        let parts = sym_w_decompose(&t).unwrap();
        let psi = solve_algebraic(2, &p, &parts[0]).unwrap();
        for (s, part) in psi.plain_part().iter().zip(&parts) {
            assert!(s.max_diff(part).unwrap() < 1e-12, "{}", s.id());
        }
    }
}

#[test]
fn plane_wave_phase_properties() {
    let w = random_wave(4, 0, 2);
    assert_eq!(plane_wave_eval(&w, &[0.0; 4]), *w.amplitude());
    let p0 = w.momentum().covector().pauli()[0];
    let period = 2.0 * std::f64::consts::PI / p0;
    let a = plane_wave_eval(&w, &[0.3, 0.0, 0.0, 0.0]);
    let b = plane_wave_eval(&w, &[0.3 + period, 0.0, 0.0, 0.0]);
    assert!(a.max_diff(&b).unwrap() < 1e-12);
    let x = plane_wave_eval(&w, &[0.1, -2.0, 0.7, 3.0]);
    for (s, t) in x.sectors().iter().zip(w.amplitude().sectors()) {
        assert!((s.norm() - t.norm()).abs() < 1e-12);
    }
}

#[test]
fn finite_differences_converge_at_second_order() {
    let w = random_wave(6, 2, 2);
    let x = [0.2, -0.1, 0.4, 0.3];
    let r: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
        .iter()
        .map(|&h| dirac_operator_fd(&w, &x, h).unwrap())
        .collect();
    for pair in r.windows(2) {
        let order = (pair[0] / pair[1]).log2();
        assert!((order - 2.0).abs() <= 0.1, "order {order}");
    }
    assert!(dirac_operator_analytic(&w, &x).unwrap() <= 1e-10);
}

#[test]
fn lagrangian_vanishes_on_shell_and_is_real() {
    for trial in 0..20 {
        let w = random_wave(12, trial, 1 + (trial as usize % 4));
        let et = energy_tensor(&w).unwrap();
        let norm2 = w.amplitude().packed().iter().map(|z| z.norm_sqr()).sum::<f64>();
        assert!(et.lagrangian.norm() <= 1e-10 * w.momentum().mass() * norm2.max(1.0));
    }
}

#[test]
fn lagrangian_is_real_off_shell_for_adjoint_pairs() {
    let mut r = trial_rng(13, 0);
    let psi = sampling::field(&mut r, 2);
    let bar = adjoint_field(&psi);
    let d: [HigherSpinField; 4] = std::array::from_fn(|_| sampling::field(&mut r, 2));
    let dbar = d.clone().map(|f| adjoint_field(&f));
    let ell = lagrangian_density(&psi, &bar, &d, &dbar, 1.1).unwrap();
    assert!(ell.im.abs() < 1e-12 * ell.norm().max(1.0));
    let z = HigherSpinField::zeros(2);
    let zb = DualField::zeros(2);
    let zero = lagrangian_density(&z, &zb, &std::array::from_fn(|_| z.clone()), &std::array::from_fn(|_| zb.clone()), 1.0).unwrap();
    assert_eq!(zero, C64::new(0.0, 0.0));
}

#[test]
fn energy_tensor_is_rank_one_along_momentum() {
    for trial in 0..20 {
        let w = random_wave(14, trial, 1 + (trial as usize % 4));
        let et = energy_tensor(&w).unwrap();
        let scale = et.singular_values()[0].max(1.0);
        assert!(et.imag_max() <= 1e-10 * scale);
        assert!(et.rank(1e-9) <= 1);
        assert!(et.factor_residual(w.momentum().covector()) <= 1e-9 * scale);
        // b-slot contraction with a vector annihilated by P
        let p = w.momentum().covector().pauli();
        let v = [p[1], -p[0], 0.0, 0.0];
        let out = et.contract_b(&v);
        assert!(out.iter().all(|z| z.norm() <= 1e-9 * scale));
    }
}

#[test]
fn field_equations_hold_for_adjoint_pairs() {
    let w = random_wave(15, 0, 3);
    let bar = adjoint_field(w.amplitude());
    let p = w.momentum().covector();
    let m = w.momentum().mass();
    let (a, b) = field_equation_residuals(w.amplitude(), &bar, p, m).unwrap();
    assert!(a <= 1e-10 && b <= 1e-10, "{a:e} {b:e}");
    let flipped = p.scale(-1.0);
    let (a, b) = field_equation_residuals(w.amplitude(), &bar, &flipped, m).unwrap();
    assert!(a > 1e-3 && b > 1e-3);
}

#[test]
fn pairing_with_adjoint_is_real() {
    let mut r = trial_rng(16, 0);
    for two_j in 0..=4 {
        for _ in 0..10 {
            let psi = sampling::field(&mut r, two_j);
            let z = pairing(&adjoint_field(&psi), &psi).unwrap();
            assert!(z.im.abs() <= 1e-12 * z.norm().max(1.0));
        }
    }
}

#[test]
fn boost_family_stays_on_solutions() {
    let main = SectorTensor::from_packed(SectorId::plain(2, 0), &[C64::new(1.0, 0.5), C64::new(-0.2, 0.0), C64::new(0.0, 1.0)]).unwrap();
    for step in 0..10 {
        let lam = step as f64 * 0.3;
        let p = Momentum::from_spatial(1.0, [lam, 0.5 * lam, 0.0]).unwrap();
        let psi = solve_algebraic(2, &p, &main).unwrap();
        assert!(algebraic_residual(&psi, &p).unwrap() <= 1e-10 * psi.max_abs().max(1.0));
    }
}

#[test]
fn power_of_unit_vector_squares_to_identity() {
    let mut r = trial_rng(17, 0);
    for two_j in 1..=6 {
        let y: MinkVector = sampling::unit_timelike(&mut r);
        let t = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
        let back = cgamma_power(&y, &cgamma_power(&y, &t, two_j).unwrap(), two_j).unwrap();
        assert!(back.max_diff(&t).unwrap() <= 1e-10);
    }
}
