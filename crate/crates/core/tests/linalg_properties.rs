//! Row reduction, kernels, solving and the subspace lattice.

mod common;

use common::oracle;
use num_traits::Zero;
use phialg_core::exactnum::{kernel, rref, solve, Matrix, SolveOutcome, Subspace, GR};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small() -> impl Strategy<Value = GR> {
    (-3i64..4, 1i64..3, -2i64..3).prop_map(|(a, b, c)| GR::from_parts((a, b), (c, 1)))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small(), rows * cols)
        .prop_map(move |e| Matrix::from_entries(rows, cols, e).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn to_rows(m: &Matrix) -> Vec<Vec<GR>> {
    m.row_iter().map(<[GR]>::to_vec).collect()
}

#[test]
fn random_rank_three_four_by_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        // three random rows plus a random combination of them
        let mut rows: Vec<Vec<GR>> = (0..3)
            .map(|_| (0..4).map(|_| GR::from_int(rng.gen_range(-5..=5))).collect())
            .collect();
        let (a, b) = (GR::from_int(rng.gen_range(-3..=3)), GR::from_ratio(rng.gen_range(-3..=3), 2));
        let combo = (0..4).map(|j| &(&a * &rows[0][j]) + &(&b * &rows[2][j])).collect();
        rows.insert(rng.gen_range(0..=3), combo);
        let expected = oracle::minor_rank(&rows);
        let m = Matrix::from_rows(4, rows).unwrap();
        let (r, pivots) = rref(&m);
        assert_eq!(pivots.len(), expected);
        assert!(expected <= 3);
        assert_eq!(r.rank(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_canonical(m in any_matrix()) {
        let (r, pivots) = rref(&m);
        prop_assert_eq!(rref(&r), (r.clone(), pivots.clone()));
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, &c) in pivots.iter().enumerate() {
            for row in 0..r.rows() {
                let expected = if row == i { GR::from_int(1) } else { GR::zero() };
                prop_assert_eq!(&r[(row, c)], &expected);
            }
        }
        prop_assert!(r.entries().iter().all(GR::is_canonical));
        prop_assert_eq!(pivots.len(), oracle::rank(&to_rows(&m)));
        // row space preserved
        prop_assert_eq!(Subspace::row_space(&m), Subspace::row_space(&r));
    }

    #[test]
    fn kernel_vectors_vanish(m in any_matrix()) {
        let k = kernel(&m);
        prop_assert_eq!(k.dim(), m.cols() - oracle::rank(&to_rows(&m)));
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_residual_is_exactly_zero(m in any_matrix(), x in proptest::collection::vec(small(), 5)) {
        let x = &x[..m.cols()];
        let rhs = Matrix::column_vector(&m.mul_vec(x).unwrap());
        match solve(&m, &rhs).unwrap() {
            SolveOutcome::Solution(sol) => {
                prop_assert_eq!(m.mul(&sol).unwrap(), rhs);
            }
            SolveOutcome::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
        }
    }

    #[test]
    fn grassmann_identity(u in matrix(3, 5), v in matrix(2, 5)) {
        let (u, v) = (Subspace::row_space(&u), Subspace::row_space(&v));
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&v).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap() && v.is_subspace_of(&sum).unwrap());
        prop_assert_eq!(u.intersect(&u).unwrap(), u.clone());
    }

    #[test]
    fn equality_ignores_generator_order(m in matrix(4, 4), seed in 0u64..1000) {
        let mut rows = to_rows(&m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..rows.len()).rev() {
            rows.swap(i, rng.gen_range(0..=i));
        }
        let shuffled = Subspace::span(4, &rows).unwrap();
        prop_assert_eq!(shuffled, Subspace::row_space(&m));
    }
}
