use num_complex::Complex64 as C64;
use proptest::prelude::*;
use spinweave_core::dirac::gamma;
use spinweave_core::linalg;
use spinweave_core::sampling::{self, trial_rng};
use spinweave_core::sectors::*;
use spinweave_core::spinor::{metric_g, MinkVector, TwoSpinor};
use spinweave_core::wtensor::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn digits(i: usize, len: usize) -> Vec<usize> {
    (0..len).map(|n| (i >> (len - 1 - n)) & 1).collect()
}

fn undigits(d: &[usize]) -> usize {
    d.iter().fold(0, |acc, &x| acc * 2 + x)
}

/// Extended Dirac map on a plain sector written from the component formula:
/// contract the last first-block index with `Y_{AḂ}`, append the new index,
/// then average over every permutation of the second block.
fn cgamma_plain_oracle(y: &MinkVector, t: &SectorTensor) -> Vec<C64> {
    let (h, k) = (t.id().h, t.id().k);
    let low = y.lowered();
    let rows = 1 << (h - 1);
    let cols = 1 << (k + 1);
    let mut raw = vec![C64::new(0.0, 0.0); rows * cols];
    for a in 0..rows {
        for bc in 0..cols {
            let b = bc >> 1;
            let cc = bc & 1;
            let mut s = C64::new(0.0, 0.0);
            for x in 0..2 {
                s += t.data()[((a << 1) | x) * (1 << k) + b] * low[(x, cc)];
            }
            raw[a * cols + bc] = s * std::f64::consts::SQRT_2;
        }
    }
    let perms = permutations(k + 1);
    let mut out = vec![C64::new(0.0, 0.0); rows * cols];
    for a in 0..rows {
        for bc in 0..cols {
            let d = digits(bc, k + 1);
            let mut s = C64::new(0.0, 0.0);
            for p in &perms {
                let pd: Vec<usize> = p.iter().map(|&i| d[i]).collect();
                s += raw[a * cols + undigits(&pd)];
            }
            out[a * cols + bc] = s / perms.len() as f64;
        }
    }
    out
}

#[test]
fn cgamma_matches_component_oracle() {
    let mut r = trial_rng(30, 0);
    for (h, k) in [(1, 0), (2, 0), (1, 1), (3, 1), (2, 2), (4, 0), (1, 3)] {
        let y = sampling::mink_vector(&mut r);
        let t = sampling::sector_tensor(&mut r, SectorId::plain(h, k));
        let got = cgamma(&y, &t).unwrap();
        let want = cgamma_plain_oracle(&y, &t);
        for (g, w) in got.data().iter().zip(&want) {
            assert!((g - w).norm() < 1e-13, "({h},{k})");
        }
    }
}

#[test]
fn cgamma_reproduces_gamma_on_spin_half() {
    let mut r = trial_rng(31, 0);
    for _ in 0..20 {
        let y = sampling::mink_vector(&mut r);
        let g = gamma(&y);
        let psi = sampling::field(&mut r, 1);
        let v = psi.packed();
        let image = psi.apply_cgamma(&y).unwrap().packed();
        for row in 0..4 {
            let want: C64 = (0..4).map(|col| g[(row, col)] * v[col]).sum();
            assert!((image[row] - want).norm() < 1e-13);
        }
    }
}

#[test]
fn sector_dimension_law_from_symmetrizer_rank() {
    for h in 0..=3 {
        for k in 0..=3 {
            let n = 1 << (h + k);
            let m = linalg::matrix_of(n, |v| symmetrize(v, h, k).unwrap());
            assert_eq!(linalg::rank(&m, 1e-10), (h + 1) * (k + 1), "({h},{k})");
        }
    }
}

#[test]
fn sym_w_dimension_count() {
    for r in 0..=6usize {
        let sum: usize = (0..=r).map(|h| (r - h + 1) * (h + 1)).sum();
        let binom = (r + 1) * (r + 2) * (r + 3) / 6;
        assert_eq!(sum, binom);
    }
    for r in 1..=4 {
        let m = linalg::matrix_of(1 << (2 * r), |v| {
            WTensor::from_data(r, v.to_vec()).unwrap().symmetrized().data().to_vec()
        });
        assert_eq!(linalg::rank(&m, 1e-10), (r + 1) * (r + 2) * (r + 3) / 6);
    }
}

#[test]
fn sym_w_round_trips() {
    let mut r = trial_rng(32, 0);
    for _ in 0..20 {
        for rank in 1..=4 {
            let t = sampling::symmetric_w(&mut r, rank);
            let parts = sym_w_decompose(&t).unwrap();
            let dims: usize = parts.iter().map(|p| p.id().independent_dim()).sum();
            assert_eq!(dims, (rank + 1) * (rank + 2) * (rank + 3) / 6);
            assert!(sym_w_compose(rank, &parts).unwrap().max_diff(&t) <= 1e-12);
            let again = sym_w_decompose(&sym_w_compose(rank, &parts).unwrap()).unwrap();
            for (a, b) in again.iter().zip(&parts) {
                assert!(a.max_diff(b).unwrap() <= 1e-12);
            }
        }
    }
}

#[test]
fn closed_form_power_matches_iteration() {
    let mut r = trial_rng(33, 0);
    for two_j in 1..=6 {
        for y in [MinkVector::tau(0), sampling::mink_vector(&mut r)] {
            let t = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
            let it = cgamma_power(&y, &t, two_j).unwrap();
            let cf = lower_all_closed_form(&y, &t).unwrap();
            assert_eq!(it.id(), SectorId::tilde(two_j, 0));
            assert!(it.max_diff(&cf).unwrap() <= 1e-11 * cf.max_abs().max(1.0));
        }
    }
}

#[test]
fn unit_vector_power_round_trip_and_cycle() {
    let mut r = trial_rng(34, 0);
    for _ in 0..50 {
        let y = sampling::unit_timelike(&mut r);
        for two_j in 1..=6 {
            let t = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
            let there = cgamma_power(&y, &t, two_j).unwrap();
            let back = cgamma_power(&y, &there, two_j).unwrap();
            assert_eq!(back.id(), t.id());
            assert!(back.max_diff(&t).unwrap() <= 1e-10);
        }
    }
}

#[test]
fn general_vector_power_squares_to_metric_power() {
    let mut r = trial_rng(35, 0);
    for two_j in 1..=4 {
        let y = sampling::mink_vector(&mut r);
        let g = metric_g(&y, &y);
        let t = sampling::sector_tensor(&mut r, SectorId::plain(two_j, 0));
        let back = cgamma_power(&y, &t, 2 * two_j).unwrap();
        let want = t.scale(C64::new(g.powi(two_j as i32), 0.0));
        assert!(back.max_diff(&want).unwrap() <= 1e-11);
    }
}

#[test]
fn isotropic_power_has_rank_at_most_one() {
    let y = MinkVector::null_from_spinor(&TwoSpinor::new(C64::new(1.0, 0.0), C64::new(0.0, 1.0)));
    let m = power_matrix(&y, SectorId::plain(2, 0), 2).unwrap();
    assert!(linalg::rank(&m, 1e-10) <= 1);
}

#[test]
fn condition_number_diverges_towards_the_cone() {
    let mut last = 0.0;
    for t in [0.5, 0.1, 0.01, 0.001] {
        let y = MinkVector::from_pauli([1.0, 0.0, 0.0, 1.0 - t]);
        assert!(metric_g(&y, &y) > 0.0);
        let cond = linalg::condition_number(&power_matrix(&y, SectorId::plain(3, 0), 3).unwrap());
        assert!(cond > last, "t = {t}: {cond} ≤ {last}");
        last = cond;
    }
    assert!(last > 1e3);
    let unit = power_matrix(&MinkVector::tau(0), SectorId::plain(3, 0), 3).unwrap();
    assert!(linalg::condition_number(&unit) < 10.0);
}

#[test]
fn cgamma_output_second_block_already_symmetric_in_first() {
    let mut r = trial_rng(36, 0);
    let y = sampling::mink_vector(&mut r);
    let t = sampling::sector_tensor(&mut r, SectorId::plain(3, 1));
    let out = cgamma(&y, &t).unwrap();
    let (h, k) = (out.id().h, out.id().k);
    let resym = symmetrize(out.data(), h, k).unwrap();
    for (a, b) in out.data().iter().zip(&resym) {
        assert!((a - b).norm() < 1e-14);
    }
}

#[test]
fn gamma_n_anticommutator() {
    let mut r = trial_rng(37, 0);
    for _ in 0..20 {
        let y = sampling::mink_vector(&mut r);
        let z = sampling::mink_vector(&mut r);
        let t = WTensor::from_data(2, sampling::complex_vec(&mut r, 16)).unwrap();
        for n in 1..=2 {
            let yz = gamma_n(&y, &gamma_n(&z, &t, n).unwrap(), n).unwrap();
            let zy = gamma_n(&z, &gamma_n(&y, &t, n).unwrap(), n).unwrap();
            let want = t.scale(C64::new(2.0 * metric_g(&y, &z), 0.0));
            assert!(yz.add(&zy).max_diff(&want) <= 1e-10);
        }
    }
}

#[test]
fn slot_sum_preserves_symmetry() {
    let mut r = trial_rng(38, 0);
    let y = sampling::mink_vector(&mut r);
    let t = sampling::symmetric_w(&mut r, 3);
    let single = gamma_n(&y, &t, 1).unwrap();
    assert!(single.asymmetry() > 1e-3);
    let sum = (1..=3).fold(WTensor::zeros(3), |acc, n| acc.add(&gamma_n(&y, &t, n).unwrap()));
    assert!(sum.asymmetry() < 1e-13);
}

#[test]
fn sector_sequence_shape() {
    let ids = sector_sequence(3);
    let names: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
    assert_eq!(
        names,
        ["plain(3,0)", "plain(2,1)", "plain(1,2)", "tilde(3,0)", "tilde(2,1)", "tilde(1,2)"]
    );
    for (i, id) in ids.iter().enumerate() {
        assert_eq!(id.successor(), Some(ids[(i + 1) % ids.len()]));
    }
}

fn sector_strategy() -> impl Strategy<Value = (SectorId, Vec<C64>)> {
    (0usize..4, 0usize..4, any::<bool>()).prop_flat_map(|(h, k, tilde)| {
        let id = if tilde { SectorId::tilde(h, k) } else { SectorId::plain(h, k) };
        let n = id.dense_len();
        (Just(id), prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64).prop_map(|(a, b)| C64::new(a, b)), n))
    })
}

proptest! {
    #[test]
    fn symmetrize_is_idempotent((id, data) in sector_strategy()) {
        let once = symmetrize(&data, id.h, id.k).unwrap();
        let twice = symmetrize(&once, id.h, id.k).unwrap();
        for (a, b) in once.iter().zip(&twice) {
            prop_assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn packed_round_trip((id, data) in sector_strategy()) {
        let t = SectorTensor::symmetrized(id, &data).unwrap();
        let back = SectorTensor::from_packed(id, &t.packed()).unwrap();
        prop_assert!(back.max_diff(&t).unwrap() < 1e-14);
    }

    #[test]
    fn transpose_is_an_involution((id, data) in sector_strategy()) {
        let t = SectorTensor::symmetrized(id, &data).unwrap();
        let tt = transpose_tilde(&t);
        if t.id().h > 0 && t.id().k > 0 {
            prop_assert_eq!((tt.id().rows(), tt.id().cols()), (t.id().cols(), t.id().rows()));
        } else {
            prop_assert_eq!(tt.id(), t.id());
        }
        prop_assert_eq!(transpose_tilde(&tt), t);
    }

    #[test]
    fn cgamma_is_linear((id, data) in sector_strategy(), a in -3.0..3.0f64, b in -3.0..3.0f64, y in prop::array::uniform4(-2.0..2.0f64)) {
        prop_assume!(id.h >= 1);
        let y = MinkVector::from_pauli(y);
        let psi = SectorTensor::symmetrized(id, &data).unwrap();
        let phi = SectorTensor::symmetrized(id, &data.iter().rev().copied().collect::<Vec<_>>()).unwrap();
        let (ca, cb) = (C64::new(a, 0.5), C64::new(-0.2, b));
        let lhs = cgamma(&y, &psi.scale(ca).try_add(&phi.scale(cb)).unwrap()).unwrap();
        let rhs = cgamma(&y, &psi).unwrap().scale(ca).try_add(&cgamma(&y, &phi).unwrap().scale(cb)).unwrap();
        prop_assert!(lhs.max_diff(&rhs).unwrap() < 1e-11);
    }
}
