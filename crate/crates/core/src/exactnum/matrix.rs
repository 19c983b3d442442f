//! Dense row-major matrices over ℚ(i) with exact row reduction.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::scalar::{dot, GR};
use crate::error::{check_len, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GR>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![GR::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { GR::one() } else { GR::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GR) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GR>) -> Result<Self> {
        check_len(rows * cols, entries.len())?;
        Ok(Self { rows, cols, entries })
    }

    /// Builds a `rows.len() × cols` matrix; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<GR>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            check_len(cols, row.len())?;
            entries.extend(row);
        }
        Ok(Self { rows: n, cols, entries })
    }

    /// Integer matrix from nested literals. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| GR::from_int(x)).collect()
            })
            .collect();
        Self::from_rows(cols, data).expect("row lengths checked above")
    }

    pub fn column_vector(v: &[GR]) -> Self {
        Self { rows: v.len(), cols: 1, entries: v.to_vec() }
    }

    pub fn row_vector(v: &[GR]) -> Self {
        Self { rows: 1, cols: v.len(), entries: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GR] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<GR> {
        self.entries
    }

    pub fn row(&self, i: usize) -> &[GR] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[GR]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<GR> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &GR) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Self> {
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Self> {
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Self> {
        check_len(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GR]) -> Result<Vec<GR>> {
        check_len(self.cols, v.len())?;
        Ok(self.row_iter().map(|r| dot(r, v)).collect())
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Self> {
        check_len(self.cols, other.cols)?;
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Self> {
        check_len(self.rows, other.rows)?;
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Exact inverse, or `None` when singular or non-square.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        match solve(self, &Matrix::identity(self.rows)).ok()? {
            SolveOutcome::Solution(x) if self.rank() == self.rows => Some(x),
            _ => None,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = GR;
    fn index(&self, (i, j): (usize, usize)) -> &GR {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GR {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in self.row_iter() {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form and its pivot columns.
///
/// Pivots are chosen as the leftmost nonzero column, taking the topmost
/// remaining row with a nonzero entry there.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut r = m.clone();
    let cols = r.cols;
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..cols {
        if lead == r.rows {
            break;
        }
        let Some(p) = (lead..r.rows).find(|&i| !r[(i, c)].is_zero()) else {
            continue;
        };
        r.swap_rows(p, lead);
        let inv = r[(lead, c)].inv().expect("pivot is nonzero");
        for j in c..cols {
            if !r[(lead, j)].is_zero() {
                r[(lead, j)] *= &inv;
            }
        }
        let pivot_row: Vec<(usize, GR)> = (c..cols)
            .filter(|&j| !r[(lead, j)].is_zero())
            .map(|j| (j, r[(lead, j)].clone()))
            .collect();
        for i in 0..r.rows {
            if i == lead || r[(i, c)].is_zero() {
                continue;
            }
            let factor = r[(i, c)].clone();
            for (j, v) in &pivot_row {
                r[(i, *j)] -= &(&factor * v);
            }
        }
        pivots.push(c);
        lead += 1;
    }
    (r, pivots)
}

/// Outcome of [`solve`]; inconsistency is an ordinary result, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A particular solution with every free variable set to zero.
    Solution(Matrix),
    Inconsistent,
}

impl SolveOutcome {
    pub fn solution(self) -> Option<Matrix> {
        match self {
            SolveOutcome::Solution(x) => Some(x),
            SolveOutcome::Inconsistent => None,
        }
    }
}

/// Solves `m · x = rhs` column by column.
pub fn solve(m: &Matrix, rhs: &Matrix) -> Result<SolveOutcome> {
    check_len(m.rows, rhs.rows)?;
    let (r, pivots) = rref(&m.hstack(rhs)?);
    if pivots.iter().any(|&c| c >= m.cols) {
        return Ok(SolveOutcome::Inconsistent);
    }
    let mut x = Matrix::zeros(m.cols, rhs.cols);
    for (i, &c) in pivots.iter().enumerate() {
        for j in 0..rhs.cols {
            x[(c, j)] = r[(i, m.cols + j)].clone();
        }
    }
    Ok(SolveOutcome::Solution(x))
}

/// Basis vectors of the null space, one per free column, in column order.
pub(crate) fn null_space_vectors(m: &Matrix) -> Vec<Vec<GR>> {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![GR::zero(); m.cols];
            v[f] = GR::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -&r[(i, f)];
            }
            v
        })
        .collect()
}
