//! Bimodules over an [`Algebra`], the dual-module functor and iterated duals.
//!
//! Action tensors are stored flat:
//!
//! - `left[(i·m + p)·m + q]`: coefficient of `x_q` in `eᵢ·x_p`
//! - `right[(p·n + i)·m + q]`: coefficient of `x_q` in `x_p·eᵢ`
//!
//! Duals use the dual basis, so dualising is a transposition of tensors:
//! `(eᵢ·f)(x) = f(x·eᵢ)` and `(f·eᵢ)(x) = f(eᵢ·x)`.

use num_traits::Zero;

use crate::algebra::{Algebra, Vector};
use crate::error::{check_len, Error, Result};
use crate::exactnum::{kernel, solve, Matrix, Subspace, GR};

coordinate_type!(
    /// An element of a bimodule in its fixed basis.
    ModuleElement
);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<'a> {
    algebra: &'a Algebra,
    dim: usize,
    left: Vec<GR>,
    right: Vec<GR>,
    dual_level: usize,
}

impl<'a> Bimodule<'a> {
    /// Validates tensor sizes and the three bimodule axioms on basis triples.
    pub fn new(
        algebra: &'a Algebra,
        dim: usize,
        left: Vec<GR>,
        right: Vec<GR>,
        dual_level: usize,
    ) -> Result<Self> {
        let n = algebra.dim();
        check_len(n * dim * dim, left.len())?;
        check_len(dim * n * dim, right.len())?;
        let module = Self { algebra, dim, left, right, dual_level };
        module.check_axioms()?;
        Ok(module)
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(algebra: &'a Algebra) -> Self {
        let tensor = algebra.tensor().to_vec();
        Self {
            algebra,
            dim: algebra.dim(),
            left: tensor.clone(),
            right: tensor,
            dual_level: 0,
        }
    }

    /// The `k`-th dual `A^(k)` of the regular bimodule.
    pub fn nth_dual(algebra: &'a Algebra, k: usize) -> Result<Self> {
        let mut module = Self::regular(algebra);
        for _ in 0..k {
            module = module.dual()?;
        }
        Ok(module)
    }

    /// The dual bimodule in dual-basis coordinates.
    pub fn dual(&self) -> Result<Bimodule<'a>> {
        let n = self.algebra.dim();
        let m = self.dim;
        let mut left = vec![GR::zero(); n * m * m];
        let mut right = vec![GR::zero(); m * n * m];
        for i in 0..n {
            for p in 0..m {
                for q in 0..m {
                    // (eᵢ·y_q)(x_p) = y_q(x_p·eᵢ)
                    left[(i * m + q) * m + p] = self.right[(p * n + i) * m + q].clone();
                    // (y_q·eᵢ)(x_p) = y_q(eᵢ·x_p)
                    right[(q * n + i) * m + p] = self.left[(i * m + p) * m + q].clone();
                }
            }
        }
        Bimodule::new(self.algebra, m, left, right, self.dual_level + 1)
    }

    /// The action tensors of `A^(k)` for a φ-algebra written down directly:
    ///
    /// - odd `k`: `F·a = φ(a) F` and `a·F = ⟨F, a⟩ φ`
    /// - even `k`: `G·a = ⟨G, φ⟩ a` and `a·G = φ(a) G`
    ///
    /// under `A^(2j) ≅ A` and `A^(2j+1) ≅ A*` in coordinates.
    pub fn phi_closed_form(algebra: &'a Algebra, k: usize) -> Result<Self> {
        let phi = algebra.require_phi()?;
        let n = algebra.dim();
        let mut left = vec![GR::zero(); n * n * n];
        let mut right = vec![GR::zero(); n * n * n];
        for i in 0..n {
            for p in 0..n {
                if k % 2 == 1 {
                    // eᵢ·F_p = F_p(eᵢ) φ = δ_ip φ
                    if i == p {
                        for q in 0..n {
                            left[(i * n + p) * n + q] = phi[q].clone();
                        }
                    }
                    // F_p·eᵢ = φᵢ F_p
                    right[(p * n + i) * n + p] = phi[i].clone();
                } else {
                    // eᵢ·G_p = φᵢ G_p
                    left[(i * n + p) * n + p] = phi[i].clone();
                    // G_p·eᵢ = G_p(φ) eᵢ = φ_p eᵢ
                    right[(p * n + i) * n + i] = phi[p].clone();
                }
            }
        }
        Bimodule::new(algebra, n, left, right, k)
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dual_level(&self) -> usize {
        self.dual_level
    }

    pub fn left_tensor(&self) -> &[GR] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[GR] {
        &self.right
    }

    /// Same dimension and identical action tensors; `dual_level` is ignored.
    pub fn same_actions(&self, other: &Bimodule<'_>) -> bool {
        self.dim == other.dim && self.left == other.left && self.right == other.right
    }

    /// Coordinates of `eᵢ·x_p`.
    pub fn left_basis_action(&self, i: usize, p: usize) -> &[GR] {
        let m = self.dim;
        &self.left[(i * m + p) * m..(i * m + p + 1) * m]
    }

    /// Coordinates of `x_p·eᵢ`.
    pub fn right_basis_action(&self, p: usize, i: usize) -> &[GR] {
        let (m, n) = (self.dim, self.algebra.dim());
        &self.right[(p * n + i) * m..(p * n + i + 1) * m]
    }

    fn bilinear(
        &self,
        a: &[GR],
        x: &[GR],
        basis: impl Fn(usize, usize) -> Vec<GR>,
    ) -> ModuleElement {
        let mut out = vec![GR::zero(); self.dim];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (p, xp) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = ai * xp;
                for (o, c) in out.iter_mut().zip(basis(i, p)) {
                    if !c.is_zero() {
                        *o += &(&w * &c);
                    }
                }
            }
        }
        ModuleElement::new(out)
    }

    /// `a·x`.
    pub fn left_act(&self, a: &[GR], x: &[GR]) -> Result<ModuleElement> {
        check_len(self.algebra.dim(), a.len())?;
        check_len(self.dim, x.len())?;
        Ok(self.bilinear(a, x, |i, p| self.left_basis_action(i, p).to_vec()))
    }

    /// `x·a`.
    pub fn right_act(&self, x: &[GR], a: &[GR]) -> Result<ModuleElement> {
        check_len(self.algebra.dim(), a.len())?;
        check_len(self.dim, x.len())?;
        Ok(self.bilinear(a, x, |i, p| self.right_basis_action(p, i).to_vec()))
    }

    /// Span of `{a·x}` (left) or `{x·a}` (right) over basis pairs.
    pub fn action_span(&self, side: Side) -> Subspace {
        let n = self.algebra.dim();
        let mut vectors = Vec::with_capacity(n * self.dim);
        for i in 0..n {
            for p in 0..self.dim {
                vectors.push(match side {
                    Side::Left => self.left_basis_action(i, p),
                    Side::Right => self.right_basis_action(p, i),
                });
            }
        }
        Subspace::span(self.dim, &vectors).expect("actions have module length")
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.algebra.dim();
        let m = self.dim;
        let c = |i, j, k| self.algebra.structure_constant(i, j, k);
        let combine = |coeffs: &[GR], rows: &dyn Fn(usize) -> Vec<GR>| -> Vec<GR> {
            let mut acc = vec![GR::zero(); m];
            for (q, w) in coeffs.iter().enumerate().filter(|(_, w)| !w.is_zero()) {
                for (a, r) in acc.iter_mut().zip(rows(q)) {
                    if !r.is_zero() {
                        *a += &(w * &r);
                    }
                }
            }
            acc
        };
        let products = |i: usize, j: usize| -> Vec<GR> { (0..n).map(|k| c(i, j, k).clone()).collect() };
        for i in 0..n {
            for j in 0..n {
                let ij = products(i, j);
                for p in 0..m {
                    // eᵢ·(eⱼ·x_p) = (eᵢeⱼ)·x_p
                    let lhs = combine(self.left_basis_action(j, p), &|q| {
                        self.left_basis_action(i, q).to_vec()
                    });
                    let rhs = combine(&ij, &|k| self.left_basis_action(k, p).to_vec());
                    if lhs != rhs {
                        return Err(Error::BimoduleAxiom("a(bx) = (ab)x"));
                    }
                    // (x_p·eᵢ)·eⱼ = x_p·(eᵢeⱼ)
                    let lhs = combine(self.right_basis_action(p, i), &|q| {
                        self.right_basis_action(q, j).to_vec()
                    });
                    let rhs = combine(&ij, &|k| self.right_basis_action(p, k).to_vec());
                    if lhs != rhs {
                        return Err(Error::BimoduleAxiom("(xa)b = x(ab)"));
                    }
                    // (eᵢ·x_p)·eⱼ = eᵢ·(x_p·eⱼ)
                    let lhs = combine(self.left_basis_action(i, p), &|q| {
                        self.right_basis_action(q, j).to_vec()
                    });
                    let rhs = combine(self.right_basis_action(p, j), &|q| {
                        self.left_basis_action(i, q).to_vec()
                    });
                    if lhs != rhs {
                        return Err(Error::BimoduleAxiom("(ax)b = a(xb)"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_ideal_ambient(algebra: &Algebra, ideal: &Subspace) -> Result<()> {
    check_len(algebra.dim(), ideal.ambient_dim())
}

/// `a·x ∈ I` for basis `a` and basis `x` of `I`.
pub fn is_left_ideal(algebra: &Algebra, ideal: &Subspace) -> Result<bool> {
    check_ideal_ambient(algebra, ideal)?;
    let n = algebra.dim();
    for x in ideal.basis_vectors() {
        for i in 0..n {
            if !ideal.contains(&algebra.multiply(&Vector::unit(n, i), x)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x·a ∈ I` for basis `a` and basis `x` of `I`.
pub fn is_right_ideal(algebra: &Algebra, ideal: &Subspace) -> Result<bool> {
    check_ideal_ambient(algebra, ideal)?;
    let n = algebra.dim();
    for x in ideal.basis_vectors() {
        for i in 0..n {
            if !ideal.contains(&algebra.multiply(x, &Vector::unit(n, i))?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A right modular unit `e` with `a − a·e ∈ I` for all `a`, if `I` is a left
/// ideal admitting one. Free variables of the linear system are zeroed.
pub fn modular_left_ideal_witness(algebra: &Algebra, ideal: &Subspace) -> Result<Option<Vector>> {
    if !is_left_ideal(algebra, ideal)? {
        return Ok(None);
    }
    let n = algebra.dim();
    // v ∈ I ⟺ W v = 0, with W spanning the annihilator of I
    let w = ideal.annihilator().basis().clone();
    if w.rows() == 0 {
        return Ok(Some(Vector::zeros(n)));
    }
    let mut system = Matrix::zeros(0, n);
    let mut rhs = Matrix::zeros(0, 1);
    for i in 0..n {
        let basis = Vector::unit(n, i);
        // a·e = L_a e
        let la = algebra.left_multiplication(&basis)?;
        system = system.vstack(&w.mul(&la)?)?;
        rhs = rhs.vstack(&Matrix::column_vector(&w.mul_vec(&basis)?))?;
    }
    Ok(solve(&system, &rhs)?.solution().map(|x| Vector::new(x.column(0))))
}

pub fn is_modular_left_ideal(algebra: &Algebra, ideal: &Subspace) -> Result<bool> {
    Ok(modular_left_ideal_witness(algebra, ideal)?.is_some())
}

/// `ker φ` as a subspace.
pub fn phi_kernel(algebra: &Algebra) -> Result<Subspace> {
    Ok(kernel(&algebra.require_phi()?.as_row()))
}
