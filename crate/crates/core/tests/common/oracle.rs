//! Brute-force reference computations used to freeze expected values.
//!
//! Nothing here goes through the library's row reduction, subspace type,
//! bimodule tensors or derivation operators. Module actions on iterated duals
//! are evaluated from their defining pairings, derivation constraints are
//! assembled by applying the Leibniz residual to elementary maps, and ranks
//! come from a local Gaussian elimination or from determinant minors.

#![allow(dead_code, clippy::needless_range_loop)]

use num_traits::{One, Zero};
use phialg_core::{Algebra, GR};

/// Rank by plain Gaussian elimination on a row list.
pub fn rank(rows: &[Vec<GR>]) -> usize {
    let mut m: Vec<Vec<GR>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..cols {
                let sub = &f * &m[r][j];
                m[i][j] = &m[i][j] - &sub;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<GR>]) -> GR {
    let n = m.len();
    if n == 0 {
        return GR::one();
    }
    let mut acc = GR::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GR>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest `r` with a nonzero `r×r` minor.
pub fn minor_rank(m: &[Vec<GR>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for r in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, r) {
            for cs in subsets(cols, r) {
                let sub: Vec<Vec<GR>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                if !det(&sub).is_zero() {
                    return r;
                }
            }
        }
    }
    0
}

fn unit(n: usize, i: usize) -> Vec<GR> {
    let mut v = vec![GR::zero(); n];
    v[i] = GR::one();
    v
}

fn pair(f: &[GR], x: &[GR]) -> GR {
    f.iter().zip(x).map(|(a, b)| a * b).sum()
}

/// Basis actions of `A` on `A^(k)`, evaluated level by level from
/// `(a·F)(y) = F(y·a)` and `(F·a)(y) = F(a·y)`.
pub struct DualTower {
    n: usize,
    /// `left[i][p]` = coordinates of `eᵢ·x_p`.
    left: Vec<Vec<Vec<GR>>>,
    /// `right[p][i]` = coordinates of `x_p·eᵢ`.
    right: Vec<Vec<Vec<GR>>>,
}

impl DualTower {
    pub fn new(algebra: &Algebra, k: usize) -> Self {
        let n = algebra.dim();
        let mul = |a: &[GR], b: &[GR]| algebra.multiply(a, b).unwrap().into_coords();
        let mut left: Vec<Vec<Vec<GR>>> =
            (0..n).map(|i| (0..n).map(|p| mul(&unit(n, i), &unit(n, p))).collect()).collect();
        let mut right: Vec<Vec<Vec<GR>>> =
            (0..n).map(|p| (0..n).map(|i| mul(&unit(n, p), &unit(n, i))).collect()).collect();
        for _ in 0..k {
            let lower = DualTower { n, left, right };
            // coordinate q of a functional G is G(y_q)
            let new_left = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|p| {
                            let f = unit(n, p);
                            (0..n).map(|q| pair(&f, &lower.act_right(&unit(n, q), &unit(n, i)))).collect()
                        })
                        .collect()
                })
                .collect();
            let new_right = (0..n)
                .map(|p| {
                    (0..n)
                        .map(|i| {
                            let f = unit(n, p);
                            (0..n).map(|q| pair(&f, &lower.act_left(&unit(n, i), &unit(n, q)))).collect()
                        })
                        .collect()
                })
                .collect();
            left = new_left;
            right = new_right;
        }
        DualTower { n, left, right }
    }

    pub fn act_left(&self, a: &[GR], x: &[GR]) -> Vec<GR> {
        let mut out = vec![GR::zero(); self.n];
        for i in 0..self.n {
            for p in 0..self.n {
                let w = &a[i] * &x[p];
                if w.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(&self.left[i][p]) {
                    *o = &*o + &(&w * c);
                }
            }
        }
        out
    }

    pub fn act_right(&self, x: &[GR], a: &[GR]) -> Vec<GR> {
        let mut out = vec![GR::zero(); self.n];
        for p in 0..self.n {
            for i in 0..self.n {
                let w = &x[p] * &a[i];
                if w.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(&self.right[p][i]) {
                    *o = &*o + &(&w * c);
                }
            }
        }
        out
    }

    pub fn left_basis(&self, i: usize, p: usize) -> &[GR] {
        &self.left[i][p]
    }

    pub fn right_basis(&self, p: usize, i: usize) -> &[GR] {
        &self.right[p][i]
    }
}

/// A linear map `A → A^(k)` as a list of column images `D(eⱼ)`.
pub type Map = Vec<Vec<GR>>;

/// Stacked `D(ab) − D(a)·b − a·D(b)` over basis pairs.
pub fn leibniz_residual(algebra: &Algebra, tower: &DualTower, d: &Map) -> Vec<GR> {
    let n = algebra.dim();
    let apply = |v: &[GR]| -> Vec<GR> {
        let mut out = vec![GR::zero(); n];
        for (j, c) in v.iter().enumerate() {
            for (o, x) in out.iter_mut().zip(&d[j]) {
                *o = &*o + &(c * x);
            }
        }
        out
    };
    let mut res = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = algebra.multiply(&unit(n, a), &unit(n, b)).unwrap().into_coords();
            let lhs = apply(&ab);
            let t1 = tower.act_right(&d[a], &unit(n, b));
            let t2 = tower.act_left(&unit(n, a), &d[b]);
            for s in 0..n {
                res.push(&(&lhs[s] - &t1[s]) - &t2[s]);
            }
        }
    }
    res
}

/// `dim Z¹(A, A^(k))`: `n² − rank` of the residual map over elementary maps.
pub fn z1_dim(algebra: &Algebra, k: usize) -> usize {
    let n = algebra.dim();
    let tower = DualTower::new(algebra, k);
    let columns: Vec<Vec<GR>> = (0..n * n)
        .map(|idx| {
            let (q, j) = (idx / n, idx % n);
            let mut d = vec![vec![GR::zero(); n]; n];
            d[j][q] = GR::one();
            leibniz_residual(algebra, &tower, &d)
        })
        .collect();
    n * n - rank(&columns)
}

/// `δ_x` as a column list.
pub fn inner(algebra: &Algebra, tower: &DualTower, x: &[GR]) -> Map {
    let n = algebra.dim();
    (0..n)
        .map(|j| {
            let ax = tower.act_left(&unit(n, j), x);
            let xa = tower.act_right(x, &unit(n, j));
            ax.iter().zip(&xa).map(|(a, b)| a - b).collect()
        })
        .collect()
}

/// `dim B¹(A, A^(k))`: rank of `x ↦ δ_x`.
pub fn b1_dim(algebra: &Algebra, k: usize) -> usize {
    let n = algebra.dim();
    let tower = DualTower::new(algebra, k);
    let images: Vec<Vec<GR>> =
        (0..n).map(|p| inner(algebra, &tower, &unit(n, p)).concat()).collect();
    rank(&images)
}

pub fn h1_dim(algebra: &Algebra, k: usize) -> usize {
    z1_dim(algebra, k) - b1_dim(algebra, k)
}
