//! `solve`, `planewave`, `solve-vector`, `solve-antisym` and `decompose-spin2`.

use std::path::Path;

use num_complex::Complex64 as C64;
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};
use spinweave_core::composite::*;
use spinweave_core::field::*;
use spinweave_core::json::two_j_from_spin;
use spinweave_core::sampling::{self, trial_rng};
use spinweave_core::sectors::{SectorId, SectorTensor};
use spinweave_core::spinor::MinkCovector;
use spinweave_core::{tolerance as tol, Mat2, SpinError};

use crate::report::{Checker, Report};
use crate::suites::fd_orders;
use crate::CliError;

/// A command's report plus the artifact written by `--output`.
pub struct Outcome {
    pub report: Report,
    pub artifact: Option<Value>,
}

/// On-shell momentum from the rest frame, spatial components, or all four
/// covariant components.
pub fn momentum(mass: f64, components: Option<&[f64]>) -> Result<Momentum, CliError> {
    let p = match components {
        None => Momentum::rest(mass),
        Some([a, b, c]) => Momentum::from_spatial(mass, [*a, *b, *c]),
        Some([e, a, b, c]) => Momentum::new(MinkCovector::from_pauli([*e, *a, *b, *c]), mass),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "--momentum takes 3 spatial or 4 covariant components, got {}",
                other.len()
            )))
        }
    };
    Ok(p?)
}

/// Parses a JSON file, reporting the path of the offending field.
pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        CliError::Schema(format!("{}: at `{}`: {}", path.display(), at, e.into_inner()))
    })
}

fn two_j(spin: f64) -> Result<usize, CliError> {
    two_j_from_spin(spin).map_err(|e| CliError::Usage(e.to_string()))
}

fn main_sector(path: Option<&Path>, two_j: usize, seed: u64) -> Result<SectorTensor, CliError> {
    let id = SectorId::plain(two_j, 0);
    match path {
        Some(p) => {
            let t: SectorTensor = load(p)?;
            if t.id() != id {
                return Err(CliError::Schema(format!(
                    "{}: main sector must be {id}, found {}",
                    p.display(),
                    t.id()
                )));
            }
            Ok(t)
        }
        None => Ok(sampling::sector_tensor(&mut trial_rng(seed, 0), id)),
    }
}

fn pair(z: C64) -> Value {
    json!([z.re, z.im])
}

fn momentum_json(p: &Momentum) -> Value {
    json!({"mass": p.mass(), "covector": p.covector().pauli()})
}

pub struct SolveArgs<'a> {
    pub spin: f64,
    pub mass: f64,
    pub momentum: Option<&'a [f64]>,
    pub main: Option<&'a Path>,
    pub seed: u64,
    pub tol: Option<f64>,
}

pub fn solve(a: &SolveArgs) -> Result<Outcome, CliError> {
    let two_j = two_j(a.spin)?;
    let p = momentum(a.mass, a.momentum)?;
    let main = main_sector(a.main, two_j, a.seed)?;
    let wave = PlaneWave::solve(two_j, p, &main)?;
    let psi = wave.amplitude();
    let scale = psi.max_abs().max(1.0);
    let mut ck = Checker::new(a.tol);
    let alg = algebraic_residual(psi, wave.momentum())? / scale;
    let jw = jw_residual(psi, wave.momentum())? / scale;
    ck.residual("residual_algebraic", alg, tol::DEFAULT);
    ck.residual("residual_jw", jw, tol::DEFAULT);

    let et = energy_tensor(&wave)?;
    let norm2: f64 = psi.packed().iter().map(|z| z.norm_sqr()).sum();
    ck.residual("lagrangian_on_shell", et.lagrangian.norm() / (wave.momentum().mass() * norm2.max(1.0)), tol::DEFAULT);
    let top = et.singular_values()[0].max(1.0);
    ck.exact("energy_tensor_rank_excess", et.rank(tol::RANK).saturating_sub(1), 0);
    ck.residual("energy_tensor_along_p", et.factor_residual(wave.momentum().covector()) / top, tol::RANK);

    let mut extra = Map::new();
    extra.insert("residual_algebraic".into(), json!(alg));
    extra.insert("residual_jw".into(), json!(jw));
    extra.insert("lagrangian_on_shell".into(), pair(et.lagrangian));
    extra.insert(
        "energy_tensor".into(),
        json!({
            "real": et.real(),
            "imag_max": et.imag_max(),
            "rank": et.rank(tol::RANK),
            "singular_values": et.singular_values(),
        }),
    );
    extra.insert(
        "tolerances".into(),
        json!({"residual": a.tol.unwrap_or(tol::DEFAULT), "rank": tol::RANK}),
    );
    extra.insert("momentum".into(), momentum_json(wave.momentum()));
    Ok(Outcome {
        report: ck.finish("solve", a.seed, extra),
        artifact: Some(serde_json::to_value(psi).expect("fields serialize")),
    })
}

pub fn planewave(a: &SolveArgs, at: [f64; 4]) -> Result<Outcome, CliError> {
    let two_j = two_j(a.spin)?;
    let p = momentum(a.mass, a.momentum)?;
    let main = main_sector(a.main, two_j, a.seed)?;
    let wave = PlaneWave::solve(two_j, p, &main)?;
    let value = plane_wave_eval(&wave, &at);
    let scale = wave.amplitude().max_abs().max(1.0);
    let mut ck = Checker::new(a.tol);
    let analytic = dirac_operator_analytic(&wave, &at)? / scale;
    ck.residual("dirac_analytic", analytic, tol::DEFAULT);
    let mut extra = Map::new();
    if two_j > 0 {
        let orders = fd_orders(&wave, &at)?;
        let err = orders.iter().map(|o| (o - 2.0).abs()).fold(0.0, f64::max);
        ck.residual("dirac_fd_order", err, 0.1);
        extra.insert("fd_orders".into(), json!(orders));
    }
    extra.insert("at".into(), json!(at));
    extra.insert("phase".into(), json!(phase_argument(wave.momentum().covector(), &at)));
    extra.insert("momentum".into(), momentum_json(wave.momentum()));
    extra.insert("residual_analytic".into(), json!(analytic));
    Ok(Outcome {
        report: ck.finish("planewave", a.seed, extra),
        artifact: Some(serde_json::to_value(&value).expect("fields serialize")),
    })
}

fn mat_json<const R: usize, const C: usize>(m: &nalgebra::SMatrix<C64, R, C>) -> Value {
    Value::Array(
        (0..R)
            .map(|i| Value::Array((0..C).map(|j| pair(m[(i, j)])).collect()))
            .collect(),
    )
}

/// `V^{AȦ}` as a 2×2 array of `[re, im]` pairs.
pub fn solve_vector(
    mass: f64,
    components: Option<&[f64]>,
    input: Option<&Path>,
    seed: u64,
    tol_override: Option<f64>,
) -> Result<Outcome, CliError> {
    let p = momentum(mass, components)?;
    let v = match input {
        Some(path) => {
            let rows: [[C64; 2]; 2] = load(path)?;
            Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
        }
        None => {
            let mut r = trial_rng(seed, 0);
            Mat2::from_fn(|_, _| sampling::complex(&mut r))
        }
    };
    let ext = vector_extend(&VectorField { v }, &p);
    let scale = ext.prime.iter().map(|z| z.norm()).fold(1.0, f64::max) * p.mass().max(1.0);
    let (a, b) = (prime_residual(&ext, &p), dprime_residual(&ext, &p));
    let mut ck = Checker::new(tol_override);
    ck.residual("residual_prime", a / scale, tol::DEFAULT);
    ck.residual("residual_dprime", b / scale, tol::DEFAULT);
    ck.residual("partner_equality", (a - b).abs(), tol::ALGEBRA);
    let mut extra = Map::new();
    extra.insert("momentum".into(), momentum_json(&p));
    Ok(Outcome {
        report: ck.finish("solve-vector", seed, extra),
        artifact: Some(json!({"prime": mat_json(&ext.prime), "dprime": mat_json(&ext.dprime)})),
    })
}

/// Main value in `Λ²U` as a single `[re, im]` pair (default 1).
pub fn solve_antisym(
    mass: f64,
    components: Option<&[f64]>,
    input: Option<&Path>,
    seed: u64,
    tol_override: Option<f64>,
) -> Result<Outcome, CliError> {
    let p = momentum(mass, components)?;
    let main: C64 = match input {
        Some(path) => load(path)?,
        None => C64::new(1.0, 0.0),
    };
    let f = antisym_solve(&p, main);
    let mut ck = Checker::new(tol_override);
    ck.residual("residual_antisym", antisym_residual(&p, &f) / f.max_abs().max(1.0), tol::DEFAULT);
    let cf = antisym_cycle_factor(&p.raised());
    let m4 = p.mass().powi(4);
    ck.residual("cycle_factor", (cf - C64::new(m4, 0.0)).norm() / m4.max(1.0), tol::DEFAULT);
    let mut extra = Map::new();
    extra.insert("momentum".into(), momentum_json(&p));
    extra.insert("cycle_factor".into(), pair(cf));
    Ok(Outcome {
        report: ck.finish("solve-antisym", seed, extra),
        artifact: Some(json!({
            "lambda2_u": pair(f.a),
            "u_ubarstar": mat_json(&f.b),
            "lambda2_ubarstar": pair(f.c),
            "ubarstar_u": mat_json(&f.d),
        })),
    })
}

/// `G` as 16 `[re, im]` pairs in `((A·2 + Ȧ)·2 + B)·2 + Ḃ` order.
pub fn decompose_spin2(input: &Path, seed: u64, tol_override: Option<f64>) -> Result<Outcome, CliError> {
    let data: Vec<C64> = load(input)?;
    let data: [C64; 16] = data.try_into().map_err(|v: Vec<C64>| {
        CliError::Schema(format!("{}: expected 16 components, got {}", input.display(), v.len()))
    })?;
    if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(SpinError::NonFinite.into());
    }
    let g = Spin2Field::new(data)?;
    let parts = spin2_decompose(&g)?;
    let reassembly = spin2_recompose(&parts).max_diff(&g) / g.max_abs().max(1.0);
    let mut ck = Checker::new(tol_override);
    ck.residual("reassembly_residual", reassembly, tol::ALGEBRA);
    let check_part: Vec<Value> = parts.check.data().iter().map(|z| pair(*z)).collect();
    let mut extra = Map::new();
    extra.insert("check_part".into(), Value::Array(check_part.clone()));
    extra.insert("dilaton_scalar".into(), pair(parts.dilaton));
    extra.insert("reassembly_residual".into(), json!(reassembly));
    Ok(Outcome {
        report: ck.finish("decompose-spin2", seed, extra),
        artifact: Some(json!({"check_part": check_part, "dilaton_scalar": pair(parts.dilaton)})),
    })
}
