//! Subspaces of ℚ(i)ⁿ held in canonical form.

use num_traits::Zero;

use super::matrix::{null_space_vectors, rref, Matrix};
use super::scalar::GR;
use crate::error::{check_len, Result};

/// A subspace stored as the nonzero rows of its reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their canonical bases agree, so the
/// derived `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `generators`.
    pub fn row_space(generators: &Matrix) -> Self {
        let (r, pivots) = rref(generators);
        let rank = pivots.len();
        let cols = generators.cols();
        let basis = Matrix::from_entries(rank, cols, r.entries()[..rank * cols].to_vec())
            .expect("prefix of rref has rank*cols entries");
        Self { ambient_dim: cols, basis, pivots }
    }

    pub fn span<V: AsRef<[GR]>>(ambient_dim: usize, vectors: &[V]) -> Result<Self> {
        let rows = vectors
            .iter()
            .map(|v| {
                check_len(ambient_dim, v.as_ref().len())?;
                Ok(v.as_ref().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::row_space(&Matrix::from_rows(ambient_dim, rows)?))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<GR>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![GR::zero(); ambient_dim];
                v[i] = GR::from_int(1);
                v
            })
            .collect();
        Self::span(ambient_dim, &vectors).expect("coordinate vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis matrix; rows are basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[GR]> + '_ {
        self.basis.row_iter()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, v: &[GR]) -> Result<bool> {
        check_len(self.ambient_dim, v.len())?;
        let mut residual = v.to_vec();
        for (row, &c) in self.basis.row_iter().zip(&self.pivots) {
            let coeff = residual[c].clone();
            if coeff.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(&coeff * b);
                }
            }
        }
        Ok(residual.iter().all(Zero::is_zero))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// `{w : ⟨w, v⟩ = 0 for all v}` under the bilinear pairing.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// `U ∩ V = ann(ann U + ann V)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        let stacked = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        Ok(kernel(&stacked))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        Ok(self == other)
    }
}

/// Null space of `m` as a canonical subspace of dimension `cols − rank`.
pub fn kernel(m: &Matrix) -> Subspace {
    let vectors = null_space_vectors(m);
    Subspace::span(m.cols(), &vectors).expect("null vectors have cols entries")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<GR> {
        v.iter().map(|&x| GR::from_int(x)).collect()
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        assert_eq!(kernel(&Matrix::zeros(2, 3)), Subspace::full(3));
    }

    #[test]
    fn kernel_of_coordinate_row() {
        let k = kernel(&Matrix::from_ints(&[&[1, 0, 0]]));
        assert_eq!(k, Subspace::coordinate(3, &[1, 2]));
    }

    #[test]
    fn kernel_of_empty_matrix_is_full() {
        assert_eq!(kernel(&Matrix::zeros(0, 4)), Subspace::full(4));
    }

    #[test]
    fn sum_and_intersection_of_axes() {
        let e1 = Subspace::coordinate(3, &[0]);
        let e2 = Subspace::coordinate(3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate(3, &[0, 1]));
        assert_eq!(e1.intersect(&e2).unwrap(), Subspace::zero(3));
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
    }

    #[test]
    fn planes_meet_in_a_line() {
        let u = Subspace::span(3, &[ints(&[1, 0, 0]), ints(&[0, 1, 1])]).unwrap();
        let v = Subspace::span(3, &[ints(&[0, 1, 0]), ints(&[1, 0, 1])]).unwrap();
        let w = u.intersect(&v).unwrap();
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&ints(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn membership_and_mismatch() {
        let u = Subspace::span(3, &[ints(&[1, 2, 3])]).unwrap();
        assert!(u.contains(&ints(&[-2, -4, -6])).unwrap());
        assert!(!u.contains(&ints(&[1, 2, 4])).unwrap());
        assert!(u.contains(&ints(&[1, 2])).is_err());
        assert!(u.sum(&Subspace::full(2)).is_err());
        assert!(u.intersect(&Subspace::full(4)).is_err());
        assert!(u.equals(&Subspace::full(4)).is_err());
    }

    #[test]
    fn generator_order_does_not_matter() {
        let a = Subspace::span(3, &[ints(&[1, 1, 0]), ints(&[0, 2, 5])]).unwrap();
        let b = Subspace::span(3, &[ints(&[0, 2, 5]), ints(&[3, 3, 0]), ints(&[1, 3, 5])]).unwrap();
        assert_eq!(a, b);
    }
}
