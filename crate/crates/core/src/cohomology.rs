//! First Hochschild cohomology `H¹(A, X) = Z¹/B¹`.
//!
//! A linear map `D: A → X` is stored as an `m×n` matrix whose column `j` is
//! `D(eⱼ)`, and vectorised row-major (`index = q·n + j`) so that spaces of
//! derivations are ordinary [`Subspace`]s of `ℚ(i)^{mn}` and can be compared
//! for equality, not just dimension.

use num_traits::{One, Zero};

use crate::algebra::{canonical_left_identity, Algebra, DualVector, Vector};
use crate::bimodule::{Bimodule, ModuleElement};
use crate::error::{check_len, Error, Result};
use crate::exactnum::{kernel, solve, Matrix, Subspace, GR};

pub const MAX_PROFILE_LEVEL: usize = 6;

/// A linear map `A → X` that has passed the Leibniz check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationMatrix {
    map: Matrix,
}

impl DerivationMatrix {
    pub fn new(module: &Bimodule<'_>, map: Matrix) -> Result<Self> {
        if !leibniz_residual(module, &map)?.iter().all(Zero::is_zero) {
            return Err(Error::NotADerivation);
        }
        Ok(Self { map })
    }

    /// From a vector in the `mn`-dimensional map space.
    pub fn from_vectorized(module: &Bimodule<'_>, coords: &[GR]) -> Result<Self> {
        Self::new(module, unvectorize(module, coords)?)
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn vectorized(&self) -> &[GR] {
        self.map.entries()
    }

    pub fn apply(&self, a: &[GR]) -> Result<ModuleElement> {
        Ok(ModuleElement::new(self.map.mul_vec(a)?))
    }
}

fn unvectorize(module: &Bimodule<'_>, coords: &[GR]) -> Result<Matrix> {
    Matrix::from_entries(module.dim(), module.algebra().dim(), coords.to_vec())
}

/// The Leibniz operator `D ↦ [D(eᵢeⱼ) − D(eᵢ)·eⱼ − eᵢ·D(eⱼ)]_{i,j}` as a
/// matrix with `n²m` rows acting on vectorised maps.
pub fn leibniz_operator(module: &Bimodule<'_>) -> Matrix {
    let algebra = module.algebra();
    let n = algebra.dim();
    let m = module.dim();
    let col = |q: usize, j: usize| q * n + j;
    let mut op = Matrix::zeros(n * n * m, m * n);
    for i in 0..n {
        for j in 0..n {
            for s in 0..m {
                let row = (i * n + j) * m + s;
                for k in 0..n {
                    let c = algebra.structure_constant(i, j, k);
                    if !c.is_zero() {
                        op[(row, col(s, k))] += c;
                    }
                }
                for p in 0..m {
                    let r = &module.right_basis_action(p, j)[s];
                    if !r.is_zero() {
                        op[(row, col(p, i))] -= r;
                    }
                    let l = &module.left_basis_action(i, p)[s];
                    if !l.is_zero() {
                        op[(row, col(p, j))] -= l;
                    }
                }
            }
        }
    }
    op
}

/// `D(eᵢeⱼ) − D(eᵢ)·eⱼ − eᵢ·D(eⱼ)` stacked over basis pairs.
pub fn leibniz_residual(module: &Bimodule<'_>, map: &Matrix) -> Result<Vec<GR>> {
    let n = module.algebra().dim();
    check_len(module.dim(), map.rows())?;
    check_len(n, map.cols())?;
    leibniz_operator(module).mul_vec(map.entries())
}

/// `Z¹(A, X)`.
pub fn derivation_space(module: &Bimodule<'_>) -> Subspace {
    kernel(&leibniz_operator(module))
}

/// `δ_x: a ↦ a·x − x·a` as a map matrix.
pub fn inner_derivation(module: &Bimodule<'_>, x: &[GR]) -> Result<Matrix> {
    let n = module.algebra().dim();
    let m = module.dim();
    check_len(m, x.len())?;
    let mut map = Matrix::zeros(m, n);
    for j in 0..n {
        let ej = Vector::unit(n, j);
        let ax = module.left_act(&ej, x)?;
        let xa = module.right_act(x, &ej)?;
        for s in 0..m {
            map[(s, j)] = &ax[s] - &xa[s];
        }
    }
    Ok(map)
}

/// `B¹(A, X)`: the span of `δ_x` over basis `x`, each checked against Leibniz.
pub fn inner_derivations(module: &Bimodule<'_>) -> Result<Subspace> {
    let m = module.dim();
    let maps = (0..m)
        .map(|p| {
            let map = inner_derivation(module, &ModuleElement::unit(m, p))?;
            Ok(DerivationMatrix::new(module, map)
                .map_err(|_| Error::Internal(format!("delta of basis vector {p} fails Leibniz")))?
                .map
                .into_entries())
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(m * module.algebra().dim(), &maps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySummary {
    pub z1: Subspace,
    pub b1: Subspace,
    pub h1_dim: usize,
    /// Every derivation is inner.
    pub inner: bool,
}

pub fn h1(module: &Bimodule<'_>) -> Result<CohomologySummary> {
    let z1 = derivation_space(module);
    let b1 = inner_derivations(module)?;
    if !b1.is_subspace_of(&z1)? {
        return Err(Error::Internal("B1 is not contained in Z1".into()));
    }
    let h1_dim = z1.dim() - b1.dim();
    Ok(CohomologySummary { z1, b1, h1_dim, inner: h1_dim == 0 })
}

/// `dim H¹(A, A^(k))` for `k = 0..=max_k`.
pub fn n_weak_amenability_profile(algebra: &Algebra, max_k: usize) -> Result<Vec<(usize, usize)>> {
    if max_k > MAX_PROFILE_LEVEL {
        return Err(Error::DepthLimit { requested: max_k, limit: MAX_PROFILE_LEVEL });
    }
    (0..=max_k)
        .map(|k| Ok((k, h1(&Bimodule::nth_dual(algebra, k)?)?.h1_dim)))
        .collect()
}

/// `dim H¹(A, A^(k))` for an `n`-dimensional φ-algebra: zero for odd `k`,
/// and `n(n−2)` for even `k` once `n ≥ 2` (zero for `n = 1`).
pub fn phi_h1_closed_form(n: usize, k: usize) -> usize {
    if k % 2 == 1 || n < 2 {
        0
    } else {
        n * (n - 2)
    }
}

/// `dim Z¹(A, A^(k))` for an `n`-dimensional φ-algebra.
pub fn phi_z1_closed_form(n: usize, k: usize) -> usize {
    if k % 2 == 1 {
        n - 1
    } else {
        n * (n - 1)
    }
}

/// For a derivation into an odd dual, the element `x = −D(e)` with
/// `δ_x = D`, where `e` is the canonical left identity.
pub fn inner_witness_odd(algebra: &Algebra, derivation: &Matrix, k: usize) -> Result<ModuleElement> {
    if k.is_multiple_of(2) {
        return Err(Error::EvenDualLevel(k));
    }
    let module = Bimodule::nth_dual(algebra, k)?;
    let d = DerivationMatrix::new(&module, derivation.clone())?;
    let e = canonical_left_identity(algebra)?;
    let x = ModuleElement::new(d.apply(&e)?.iter().map(|c| -c).collect());
    if inner_derivation(&module, &x)? != *derivation {
        return Err(Error::Internal("delta_{-D(e)} differs from D".into()));
    }
    Ok(x)
}

/// `D(a) = ⟨f − φ, a⟩ b₀` into `A**`, with `⟨f, a₀⟩ = ⟨φ, b₀⟩ = 0` and
/// `⟨f, b₀⟩ = ⟨φ, a₀⟩ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonInnerWitness {
    pub f: DualVector,
    pub a0: Vector,
    pub b0: Vector,
    pub derivation: DerivationMatrix,
    /// Whether `D` happens to be inner; false exactly when `dim ker φ ≥ 2`.
    pub inner: bool,
}

pub fn make_noninner_even(algebra: &Algebra) -> Result<NonInnerWitness> {
    let phi = algebra.require_phi()?;
    let n = algebra.dim();
    let f = (0..n)
        .map(|j| DualVector::unit(n, j))
        .find(|f| {
            let pair = f.as_row().vstack(&phi.as_row()).expect("same width");
            pair.rank() == 2
        })
        .ok_or(Error::NoIndependentFunctional)?;
    let constraints = f.as_row().vstack(&phi.as_row())?;
    let solve_for = |f_val: i64, phi_val: i64| -> Result<Vector> {
        let rhs = Matrix::from_ints(&[&[f_val], &[phi_val]]);
        let x = solve(&constraints, &rhs)?
            .solution()
            .ok_or_else(|| Error::Internal("f and phi are dependent".into()))?;
        Ok(Vector::new(x.column(0)))
    };
    let a0 = solve_for(0, 1)?;
    let b0 = solve_for(1, 0)?;

    let module = Bimodule::nth_dual(algebra, 2)?;
    let map = Matrix::from_fn(n, n, |q, j| &(&f[j] - &phi[j]) * &b0[q]);
    let derivation = DerivationMatrix::new(&module, map)
        .map_err(|_| Error::Internal("<f - phi, a> b0 fails Leibniz".into()))?;
    let inner = inner_derivations(&module)?.contains(derivation.vectorized())?;
    Ok(NonInnerWitness { f, a0, b0, derivation, inner })
}

/// Maps `A → X` (with `dim A = n`) whose image lies in `target ⊆ X`.
pub fn maps_with_image_in(target: &Subspace, n: usize) -> Subspace {
    let m = target.ambient_dim();
    let ann = target.annihilator();
    let mut rows = Vec::new();
    for w in ann.basis_vectors() {
        for j in 0..n {
            let mut row = vec![GR::zero(); m * n];
            for (q, wq) in w.iter().enumerate() {
                row[q * n + j] = wq.clone();
            }
            rows.push(row);
        }
    }
    kernel(&Matrix::from_rows(m * n, rows).expect("rows have mn entries"))
}

fn check_first_dual(algebra: &Algebra, module: &Bimodule<'_>) -> Result<()> {
    let dual = Bimodule::nth_dual(algebra, 1)?;
    if !module.same_actions(&dual) {
        return Err(Error::WrongCodomain("expected the first dual A*".into()));
    }
    Ok(())
}

/// Whether `(a, b) ↦ ⟨D(a), b⟩` is antisymmetric, for a linear `D: A → A*`.
pub fn is_cyclic(module: &Bimodule<'_>, map: &Matrix) -> Result<bool> {
    let algebra = module.algebra();
    check_first_dual(algebra, module)?;
    let n = algebra.dim();
    if map.rows() != n || map.cols() != n {
        return Err(Error::WrongCodomain(format!(
            "map is {}x{}, expected {n}x{n}",
            map.rows(),
            map.cols()
        )));
    }
    // ⟨D(e_a), e_b⟩ = map[b][a]
    Ok((0..n).all(|a| (a..n).all(|b| (&map[(b, a)] + &map[(a, b)]).is_zero())))
}

/// Vectorised maps `A → A*` with antisymmetric pairing form.
pub fn antisymmetric_maps(n: usize) -> Subspace {
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut row = vec![GR::zero(); n * n];
            row[b * n + a] += &GR::one();
            row[a * n + b] += &GR::one();
            rows.push(row);
        }
    }
    kernel(&Matrix::from_rows(n * n, rows).expect("rows have n² entries"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicReport {
    pub derivation_dim: usize,
    pub inner_dim: usize,
    pub cyclic_dim: usize,
    /// Every basis derivation into `A*` is cyclic.
    pub all_derivations_cyclic: bool,
    /// Cyclic derivations form exactly `B¹(A, A*)`.
    pub cyclic_equals_inner: bool,
}

impl CyclicReport {
    /// Every cyclic derivation is inner.
    pub fn cyclically_amenable(&self) -> bool {
        self.cyclic_equals_inner
    }
}

pub fn cyclic_equivalence_report(algebra: &Algebra) -> Result<CyclicReport> {
    let module = Bimodule::nth_dual(algebra, 1)?;
    let summary = h1(&module)?;
    let mut all_cyclic = true;
    for v in summary.z1.basis_vectors() {
        all_cyclic &= is_cyclic(&module, &unvectorize(&module, v)?)?;
    }
    let cyclic = summary.z1.intersect(&antisymmetric_maps(algebra.dim()))?;
    Ok(CyclicReport {
        derivation_dim: summary.z1.dim(),
        inner_dim: summary.b1.dim(),
        cyclic_dim: cyclic.dim(),
        all_derivations_cyclic: all_cyclic,
        cyclic_equals_inner: cyclic == summary.b1,
    })
}
