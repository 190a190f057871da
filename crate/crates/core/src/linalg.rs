//! Small dense linear-algebra helpers over `C64` (rank, nullity, conditioning).

use nalgebra::DMatrix;

use crate::{c, C64};

/// Matrix of a linear map given by its action on packed coordinates.
pub fn matrix_of<F>(n_in: usize, f: F) -> DMatrix<C64>
where
    F: Fn(&[C64]) -> Vec<C64>,
{
    let mut cols = Vec::with_capacity(n_in);
    for i in 0..n_in {
        let mut e = vec![c(0.0, 0.0); n_in];
        e[i] = c(1.0, 0.0);
        cols.push(f(&e));
    }
    let n_out = cols.first().map_or(0, Vec::len);
    DMatrix::from_fn(n_out, n_in, |r, col| cols[col][r])
}

/// Singular values in decreasing order.
pub fn singular_values(m: &DMatrix<C64>) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Numerical rank: singular values above `rel_tol · σ_max`.
pub fn rank(m: &DMatrix<C64>, rel_tol: f64) -> usize {
    let sv = singular_values(m);
    let Some(&top) = sv.first() else { return 0 };
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Dimension of the kernel, `ncols − rank`.
pub fn nullity(m: &DMatrix<C64>, rel_tol: f64) -> usize {
    m.ncols() - rank(m, rel_tol)
}

/// `σ_max / σ_min` of a square matrix (infinite when singular).
pub fn condition_number(m: &DMatrix<C64>) -> f64 {
    let sv = singular_values(m);
    match (sv.first(), sv.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        _ => f64::INFINITY,
    }
}

/// Largest absolute entry.
pub fn max_entry(m: &DMatrix<C64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}
