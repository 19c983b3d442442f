//! Algebra isomorphisms and multiplier spaces.

use num_traits::Zero;

use crate::algebra::{Algebra, DualVector, Vector};
use crate::bimodule::Side;
use crate::error::{check_len, Result};
use crate::exactnum::{kernel, Matrix, Subspace, GR};

/// A linear map certified to be an algebra isomorphism `source → target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapWitness {
    pub map: Matrix,
    pub source: Algebra,
    pub target: Algebra,
}

/// `T` is invertible and `T(eᵢeⱼ) = T(eᵢ)T(eⱼ)` on basis pairs.
pub fn certify_isomorphism(
    map: &Matrix,
    source: &Algebra,
    target: &Algebra,
) -> Result<Option<LinearMapWitness>> {
    let n = source.dim();
    check_len(n, target.dim())?;
    check_len(n, map.rows())?;
    check_len(n, map.cols())?;
    if map.rank() != n {
        return Ok(None);
    }
    let images: Vec<Vec<GR>> = (0..n).map(|j| map.column(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = map.mul_vec(&source.multiply(&Vector::unit(n, i), &Vector::unit(n, j))?)?;
            let rhs = target.multiply(&images[i], &images[j])?;
            if lhs != rhs.into_coords() {
                return Ok(None);
            }
        }
    }
    Ok(Some(LinearMapWitness {
        map: map.clone(),
        source: source.clone(),
        target: target.clone(),
    }))
}

pub fn check_isomorphism(map: &Matrix, source: &Algebra, target: &Algebra) -> Result<bool> {
    Ok(certify_isomorphism(map, source, target)?.is_some())
}

/// For a φ-algebra of dimension ≥ 2, an invertible `T` and `ψ = φ∘T⁻¹`
/// independent of `φ`; `T` is then an isomorphism `_φA → _ψA`.
///
/// Coordinate swaps are tried first, then shears `I + E_{j,i₀}`.
pub fn independent_isomorphic_functional(algebra: &Algebra) -> Result<Option<(Matrix, DualVector)>> {
    let phi = algebra.require_phi()?;
    let n = algebra.dim();
    let i0 = phi.iter().position(|x| !x.is_zero()).expect("phi is nonzero");
    let swap = |j: usize| {
        Matrix::from_fn(n, n, |r, c| {
            let src = if c == i0 { j } else if c == j { i0 } else { c };
            if r == src { GR::from_int(1) } else { GR::zero() }
        })
    };
    let shear = |j: usize| {
        let mut t = Matrix::identity(n);
        t[(j, i0)] = GR::from_int(1);
        t
    };
    let candidates = (0..n)
        .filter(|&j| j != i0)
        .map(swap)
        .chain((0..n).filter(|&j| j != i0).map(shear));
    for t in candidates {
        let inv = t.inverse().expect("swaps and shears are invertible");
        let psi = phi.as_row().mul(&inv)?;
        if phi.as_row().vstack(&psi)?.rank() == 2 {
            return Ok(Some((t, DualVector::new(psi.row(0).to_vec()))));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierSpace {
    pub side: Side,
    /// Vectorised `n×n` maps, row-major (`T[q][j]` at `q·n + j`).
    pub basis: Subspace,
}

impl MultiplierSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn contains_map(&self, map: &Matrix) -> Result<bool> {
        self.basis.contains(map.entries())
    }

    pub fn maps(&self, n: usize) -> Vec<Matrix> {
        self.basis
            .basis_vectors()
            .map(|v| Matrix::from_entries(n, n, v.to_vec()).expect("n² entries"))
            .collect()
    }
}

/// Left multipliers satisfy `T(ab) = T(a)b`; right multipliers `T(ab) = aT(b)`.
pub fn multipliers(algebra: &Algebra, side: Side) -> MultiplierSpace {
    let n = algebra.dim();
    let c = |i, j, k| algebra.structure_constant(i, j, k);
    let col = |q: usize, j: usize| q * n + j;
    let mut op = Matrix::zeros(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                let row = (i * n + j) * n + s;
                for k in 0..n {
                    if !c(i, j, k).is_zero() {
                        op[(row, col(s, k))] += c(i, j, k);
                    }
                }
                for p in 0..n {
                    match side {
                        // T(eᵢ)·eⱼ = Σ_p T[p][i] e_p·eⱼ
                        Side::Left => {
                            if !c(p, j, s).is_zero() {
                                op[(row, col(p, i))] -= c(p, j, s);
                            }
                        }
                        // eᵢ·T(eⱼ) = Σ_p T[p][j] eᵢ·e_p
                        Side::Right => {
                            if !c(i, p, s).is_zero() {
                                op[(row, col(p, j))] -= c(i, p, s);
                            }
                        }
                    }
                }
            }
        }
    }
    MultiplierSpace { side, basis: kernel(&op) }
}
