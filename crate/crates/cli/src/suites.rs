//! Seeded invariant sweeps behind `spinweave verify`.

use clap::ValueEnum;
use num_complex::Complex64 as C64;
use serde_json::{json, Map, Value};
use spinweave_core::angmom::{
    casimir_of, commutation_residual, extend_rep, irreducibility_witness, jw_representation,
    AngMomBasis,
};
use spinweave_core::composite::*;
use spinweave_core::dirac::*;
use spinweave_core::field::*;
use spinweave_core::sampling::{self, trial_rng, SweepRng};
use spinweave_core::sectors::{cgamma_power, lower_all_closed_form, SectorId};
use spinweave_core::spinor::*;
use spinweave_core::tolerance as tol;
use spinweave_core::wtensor::{sym_w_compose, sym_w_decompose};
use spinweave_core::{Mat2, Result};

use crate::report::{Checker, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Clifford,
    Sectors,
    Angmom,
    Field,
    Composite,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 6] = [
        Suite::Core,
        Suite::Clifford,
        Suite::Sectors,
        Suite::Angmom,
        Suite::Field,
        Suite::Composite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Clifford => "clifford",
            Suite::Sectors => "sectors",
            Suite::Angmom => "angmom",
            Suite::Field => "field",
            Suite::Composite => "composite",
            Suite::All => "all",
        }
    }
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn rel(residual: f64, scale: f64) -> f64 {
    residual / scale.max(1.0)
}

fn momentum(r: &mut SweepRng) -> Momentum {
    let m = sampling::mass(r);
    Momentum::new(sampling::on_shell_covector(r, m), m).expect("sampled covectors are on shell")
}

/// Runs `suite` for `trials` seeded trials; trial `t` draws from stream `t`.
pub fn run(suite: Suite, seed: u64, trials: usize, tol_override: Option<f64>) -> Result<Report> {
    let mut ck = Checker::new(tol_override);
    let mut extra = Map::new();
    let modules: Vec<Suite> = match suite {
        Suite::All => Suite::MODULES.to_vec(),
        s => vec![s],
    };
    for m in modules {
        if suite == Suite::All {
            ck.set_prefix(m.name());
        }
        match m {
            Suite::Core => core(&mut ck, seed, trials),
            Suite::Clifford => clifford(&mut ck, seed, trials),
            Suite::Sectors => sectors(&mut ck, seed, trials)?,
            Suite::Angmom => {
                let table = angmom(&mut ck, seed, trials)?;
                extra.insert("casimir_table".into(), table);
            }
            Suite::Field => field(&mut ck, seed, trials)?,
            Suite::Composite => composite(&mut ck, seed, trials)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    extra.insert("trials".into(), Value::from(trials));
    Ok(ck.finish(suite.name(), seed, extra))
}

fn core(ck: &mut Checker, seed: u64, trials: usize) {
    let gram = (0..4)
        .flat_map(|a| (0..4).map(move |b| (a, b)))
        .map(|(a, b)| {
            let want = if a != b { 0.0 } else if a == 0 { 1.0 } else { -1.0 };
            (metric_g(&MinkVector::tau(a), &MinkVector::tau(b)) - want).abs()
        })
        .fold(0.0, f64::max);
    ck.residual("frame_gram", gram, tol::ALGEBRA);
    let eps = Epsilon::default();
    ck.residual("epsilon_inverse", eps.inverse_residual().max(eps.antisymmetry_residual()), tol::ALGEBRA);

    for t in 0..trials {
        let mut r = trial_rng(seed, t as u64);
        let u = sampling::spinor(&mut r);
        ck.residual("raise_lower_minus_id", raise_spinor(&lower_spinor(&u)).max_diff(&-u), tol::ROUND_TRIP);

        let y = sampling::mink_vector(&mut r);
        let z = sampling::mink_vector(&mut r);
        let mk = minkowski(&y.pauli(), &z.pauli());
        ck.residual("metric_minkowski", rel((metric_g(&y, &z) - mk).abs(), mk.abs()), tol::ALGEBRA);

        let back = herm_to_pauli(&pauli_to_herm(&y.pauli())).expect("Hermitian by construction");
        let err = back.iter().zip(y.pauli()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        ck.residual("pauli_round_trip", err, tol::ROUND_TRIP);

        let low = lower_h(&y).pauli();
        let p = y.pauli();
        let flip = [p[0], -p[1], -p[2], -p[3]];
        let err = low.iter().zip(flip).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        ck.residual("lowering_signs", err, tol::ALGEBRA);

        let worst = contraction_identities(&y).into_iter().fold(0.0, f64::max);
        ck.residual("contraction_identities", worst, tol::ALGEBRA);

        let null = MinkVector::null_from_spinor(&sampling::spinor(&mut r));
        let scale = null.pauli()[0].powi(2);
        ck.residual("null_isotropy", rel(metric_g(&null, &null).abs(), scale), tol::ALGEBRA);

        let psi = sampling::dirac_spinor(&mut r);
        let z = pair(&dirac_adjoint(&psi), &psi);
        ck.residual("adjunction_real", rel(z.im.abs(), z.norm()), tol::ALGEBRA);
    }
}

fn clifford(ck: &mut Checker, seed: u64, trials: usize) {
    for t in 0..trials {
        let mut r = trial_rng(seed, t as u64);
        let y = sampling::mink_vector(&mut r);
        let z = sampling::mink_vector(&mut r);
        ck.residual("anticommutator", clifford_residual(&y, &z), tol::DEFAULT);

        let g = gamma(&y);
        let mut chiral = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                chiral = chiral.max(g[(i, j)].norm()).max(g[(i + 2, j + 2)].norm());
            }
        }
        ck.residual("chirality_blocks", chiral, 0.0);

        let psi = sampling::dirac_spinor(&mut r);
        let chi = dirac_adjoint(&sampling::dirac_spinor(&mut r));
        let lhs = pair(&apply_gamma_transpose(&y, &chi), &psi);
        let rhs = pair(&chi, &apply_gamma(&y, &psi));
        ck.residual("transpose_adjointness", (lhs - rhs).norm(), tol::ALGEBRA);

        let u = sampling::unit_timelike(&mut r);
        let prod = gamma_lbar_to_u(&u) * gamma_u_to_lbar(&u) - Mat2::identity();
        let err = prod.iter().map(|z| z.norm()).fold(0.0, f64::max);
        ck.residual("unit_blocks_inverse", rel(err, u.pauli()[0].powi(2)), tol::ALGEBRA);
    }
}

fn sectors(ck: &mut Checker, seed: u64, trials: usize) -> Result<()> {
    let mut mismatches = 0;
    for r in 0..=6usize {
        let sum: usize = (0..=r).map(|h| SectorId::plain(r - h, h).independent_dim()).sum();
        let law: usize = (0..=r).map(|h| (r - h + 1) * (h + 1)).sum();
        if sum != law || law != (r + 1) * (r + 2) * (r + 3) / 6 {
            mismatches += 1;
        }
    }
    ck.exact("sym_w_dimension_mismatches", mismatches, 0);

    for t in 0..trials {
        let mut r = trial_rng(seed, t as u64);
        let rank = 1 + t % 4;
        let w = sampling::symmetric_w(&mut r, rank);
        let parts = sym_w_decompose(&w)?;
        let back = sym_w_compose(rank, &parts)?;
        ck.residual("sym_w_round_trip", rel(back.max_diff(&w), w.max_abs()), tol::ALGEBRA);

        let two_j = 1 + t % 6;
        let y = sampling::unit_timelike(&mut r);
        let main = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
        let there = cgamma_power(&y, &main, two_j)?;
        let back = cgamma_power(&y, &there, two_j)?;
        ck.residual("unit_lowering_round_trip", rel(back.max_diff(&main)?, main.max_abs()), tol::DEFAULT);
        let closed = lower_all_closed_form(&y, &main)?;
        ck.residual("closed_form_vs_iteration", rel(closed.max_diff(&there)?, closed.max_abs()), 1e-11);

        let v = sampling::mink_vector(&mut r);
        let g = metric_g(&v, &v);
        let small = sampling::sector_tensor(&mut r, SectorId::plain(1 + t % 4, 0));
        let n = small.id().rank();
        let want = small.scale(c(g.powi(n as i32)));
        let got = cgamma_power(&v, &small, 2 * n)?;
        ck.residual("double_power_metric_scalar", got.max_diff(&want)?, tol::ALGEBRA);
    }
    Ok(())
}

fn angmom(ck: &mut Checker, seed: u64, trials: usize) -> Result<Value> {
    let basis = AngMomBasis::standard();
    ck.residual("basis_orthonormality", basis.orthonormality_residual(), tol::ALGEBRA);
    let mut table = Vec::new();
    for rank in 0..=8usize {
        let rep = extend_rep(&basis, rank);
        let w = irreducibility_witness(&rep);
        let cas = rep.casimir();
        let measured = (0..rep.dim()).map(|i| cas[(i, i)].re).sum::<f64>() / rep.dim() as f64;
        let expected = rep.casimir_value();
        ck.with_value(&format!("casimir.r={rank}"), w.casimir_residual, 1e-11, json!(measured));
        ck.exact(&format!("commutant_dim.r={rank}"), w.commutant_dim, 1);
        ck.residual(&format!("commutation.r={rank}"), rep.commutation_residual(), tol::ALGEBRA);
        let spec = rep.j3_spectrum();
        let err = spec
            .iter()
            .enumerate()
            .map(|(a, v)| (v - (rank as f64 / 2.0 - a as f64)).abs())
            .fold(0.0, f64::max);
        ck.residual(&format!("j3_spectrum.r={rank}"), err, tol::ALGEBRA);
        table.push(json!({"r": rank, "eigenvalue": measured, "expected": expected}));
    }

    for two_j in 0..=4usize {
        let gens = jw_representation(&basis, two_j);
        let n = 2 * (two_j + 1);
        let s = two_j as f64 / 2.0;
        let cas = casimir_of(&gens);
        let mut err = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { s * s + s } else { 0.0 };
                err = err.max((cas[(i, j)] - c(want)).norm());
            }
        }
        ck.residual("jw_rep_casimir", err, 1e-11);
        ck.residual("jw_rep_commutation", commutation_residual(&gens), tol::ALGEBRA);
        ck.exact(&format!("jw_rep_dim.2j={two_j}"), gens[0].nrows(), n);
    }

    for t in 0..trials {
        let mut r = trial_rng(seed, t as u64);
        let a = Mat2::from_fn(|_, _| sampling::complex(&mut r));
        let h = a * a.adjoint() + Mat2::identity() * c(0.5);
        let b = AngMomBasis::with_metric(h)?;
        ck.residual("metric_anti_hermitian", b.anti_hermitian_residual(), tol::DEFAULT);
        let rep = extend_rep(&b, 1 + t % 5);
        ck.residual("metric_casimir", rep.casimir_residual(), tol::DEFAULT);
    }
    Ok(Value::Array(table))
}

fn field(ck: &mut Checker, seed: u64, trials: usize) -> Result<()> {
    for t in 0..trials {
        let mut r = trial_rng(seed, t as u64);
        for two_j in 1..=4usize {
            let p = momentum(&mut r);
            let main = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
            let psi = solve_algebraic(two_j, &p, &main)?;
            let scale = psi.max_abs();
            ck.residual(&format!("algebraic.2j={two_j}"), rel(algebraic_residual(&psi, &p)?, scale), tol::DEFAULT);
            ck.residual(&format!("jw.2j={two_j}"), rel(jw_residual(&psi, &p)?, scale), tol::DEFAULT);
            if t == 0 {
                ck.exact(&format!("solution_space_dim.2j={two_j}"), solution_space_nullity(two_j, &p)?, two_j + 1);
            }
        }

        let rank = 1 + t % 4;
        let p = momentum(&mut r);
        for w in bw_solve(rank, &p) {
            ck.residual("bw_per_index", bw_residual(&w, &p)?, tol::DEFAULT);
            ck.residual("bw_jw_product", rel(jw_operator_check(&w, &p)?, p.mass().powi(rank as i32)), tol::DEFAULT);
        }

        let two_j = 1 + t % 4;
        let main = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
        let wave = PlaneWave::solve(two_j, momentum(&mut r), &main)?;
        let x = [0; 4].map(|_| sampling::uniform(&mut r, -1.0, 1.0));
        let scale = wave.amplitude().max_abs();
        ck.residual("planewave_analytic", rel(dirac_operator_analytic(&wave, &x)?, scale), tol::DEFAULT);
        if t < 10 {
            let orders = fd_orders(&wave, &x)?;
            let err = orders.iter().map(|o| (o - 2.0).abs()).fold(0.0, f64::max);
            ck.residual("planewave_fd_order", err, 0.1);
        }

        let et = energy_tensor(&wave)?;
        let norm2: f64 = wave.amplitude().packed().iter().map(|z| z.norm_sqr()).sum();
        ck.residual("lagrangian_on_shell", et.lagrangian.norm() / (wave.momentum().mass() * norm2.max(1.0)), tol::DEFAULT);
        let sv = et.singular_values();
        let top = sv[0].max(1.0);
        ck.exact("energy_tensor_rank_excess", et.rank(tol::RANK).saturating_sub(1), 0);
        ck.residual("energy_tensor_along_p", et.factor_residual(wave.momentum().covector()) / top, tol::RANK);
    }
    Ok(())
}

/// Observed convergence orders over spacings `1e-2, 5e-3, 2.5e-3`.
pub fn fd_orders(wave: &PlaneWave, x: &[f64; 4]) -> Result<Vec<f64>> {
    let res = [1e-2, 5e-3, 2.5e-3]
        .iter()
        .map(|&h| dirac_operator_fd(wave, x, h))
        .collect::<Result<Vec<_>>>()?;
    Ok(res.windows(2).map(|w| (w[0] / w[1]).log2()).collect())
}

fn composite(ck: &mut Checker, seed: u64, trials: usize) -> Result<()> {
    let eps = spin2_decompose(&Spin2Field::epsilon_product())?;
    ck.with_value("spin2_epsilon_trace", (eps.dilaton - c(1.0)).norm(), tol::ALGEBRA, json!([eps.dilaton.re, eps.dilaton.im]));
    let (total, sym, dil) = reality_dimension_audit();
    ck.exact("reality_dim_total", total, 10);
    ck.exact("reality_dim_symmetric", sym, 9);
    ck.exact("reality_dim_dilatonic", dil, 1);

    for t in 0..trials {
        let mut r = trial_rng(seed, t as u64);
        let p = momentum(&mut r);
        let v = VectorField { v: Mat2::from_fn(|_, _| sampling::complex(&mut r)) };
        let ext = vector_extend(&v, &p);
        let (a, b) = (prime_residual(&ext, &p), dprime_residual(&ext, &p));
        ck.residual("vector_partner_equality", (a - b).abs(), tol::ALGEBRA);
        ck.residual("vector_prime", rel(a, ext.prime.iter().map(|z| z.norm()).fold(0.0, f64::max) * p.mass()), tol::DEFAULT);

        let y = sampling::mink_vector(&mut r);
        let g = metric_g(&y, &y);
        let cf = antisym_cycle_factor(&y);
        ck.residual("antisym_cycle_law", rel((cf - c(g * g)).norm(), g * g), tol::DEFAULT);
        for basis in antisym_orbit(&y) {
            let four = antisym_gamma_power(&y, &basis, 4);
            ck.residual("antisym_cycle_scalar", rel(four.max_diff(&basis.scale(cf)), basis.max_abs() * cf.norm()), tol::DEFAULT);
        }
        let unit = sampling::unit_timelike(&mut r);
        ck.residual("antisym_unit_factor", (antisym_cycle_factor(&unit) - c(1.0)).norm(), tol::DEFAULT);
        let f = antisym_solve(&p, sampling::complex(&mut r));
        ck.residual("antisym_solution", rel(antisym_residual(&p, &f), f.max_abs()), tol::DEFAULT);

        let data: [C64; 16] = std::array::from_fn(|_| sampling::complex(&mut r));
        let gfield = Spin2Field::symmetrized(data);
        let parts = spin2_decompose(&gfield)?;
        ck.residual("spin2_round_trip", spin2_recompose(&parts).max_diff(&gfield), tol::ALGEBRA);
        let yy = Spin2Field::symmetric_product(&y, &y);
        let s = spin2_decompose(&yy)?.dilaton;
        ck.residual("spin2_vector_trace", rel((s - c(g / 4.0)).norm(), g.abs()), tol::ALGEBRA);
        let chain = spin2_solve(&p, &parts.check)?;
        ck.residual("spin2_chain", rel(spin2_residual(&p, &chain)?, parts.check.max_abs() * p.mass().powi(2)), tol::DEFAULT);
    }
    Ok(())
}
