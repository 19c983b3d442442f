//! The two Arens products on the bidual, built from their defining chain of
//! module actions:
//!
//! ```text
//! ⟨f·a, b⟩ = ⟨f, ab⟩          ⟨b, a·f⟩ = ⟨ba, f⟩
//! ⟨n·f, a⟩ = ⟨n, f·a⟩         ⟨a, f·n⟩ = ⟨a·f, n⟩
//! ⟨m□n, f⟩ = ⟨m, n·f⟩         ⟨f, m◊n⟩ = ⟨f·m, n⟩
//! ```
//!
//! Elements of `A*` are coordinate vectors in the dual basis and elements of
//! `A**` in the bidual basis. Only the final tensors are read back through
//! the identification `A** ≅ A`.

use num_traits::Zero;

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::exactnum::{dot, GR};

pub const MAX_TOWER_DEPTH: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArensResult {
    pub dim: usize,
    /// Structure tensor of `(A**, □)`.
    pub square: Vec<GR>,
    /// Structure tensor of `(A**, ◊)`.
    pub lozenge: Vec<GR>,
    pub regular: bool,
    /// For φ-algebras, whether both products equal `m□n = ⟨m, φ⟩ n`.
    pub matches_phi_form: Option<bool>,
}

/// The chain of actions for one algebra; every method is a literal
/// transcription of one defining identity. Basis products `eₐe_b` are
/// computed once and extended bilinearly.
struct ActionChain {
    n: usize,
    /// `basis_products[a][b]` = coordinates of `eₐe_b`.
    basis_products: Vec<Vec<Vec<GR>>>,
}

impl ActionChain {
    fn new(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let basis_products = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        algebra
                            .multiply(&Vector::unit(n, a), &Vector::unit(n, b))
                            .expect("basis vectors have length n")
                            .into_coords()
                    })
                    .collect()
            })
            .collect();
        ActionChain { n, basis_products }
    }

    fn basis(&self, i: usize) -> Vector {
        Vector::unit(self.n, i)
    }

    fn product(&self, a: &[GR], b: &[GR]) -> Vec<GR> {
        let mut out = vec![GR::zero(); self.n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let w = x * y;
                for (o, c) in out.iter_mut().zip(&self.basis_products[i][j]) {
                    if !c.is_zero() {
                        *o += &(&w * c);
                    }
                }
            }
        }
        out
    }

    /// `f·a ∈ A*`: `(f·a)(b) = f(ab)`.
    fn functional_times_element(&self, f: &[GR], a: &[GR]) -> Vec<GR> {
        (0..self.n).map(|l| dot(f, &self.product(a, &self.basis(l)))).collect()
    }

    /// `a·f ∈ A*`: `(a·f)(b) = f(ba)`.
    fn element_times_functional(&self, a: &[GR], f: &[GR]) -> Vec<GR> {
        (0..self.n).map(|l| dot(f, &self.product(&self.basis(l), a))).collect()
    }

    /// `n·f ∈ A*`: `(n·f)(a) = n(f·a)`.
    fn bidual_times_functional(&self, n: &[GR], f: &[GR]) -> Vec<GR> {
        (0..self.n)
            .map(|i| dot(n, &self.functional_times_element(f, &self.basis(i))))
            .collect()
    }

    /// `f·n ∈ A*`: `(f·n)(a) = n(a·f)`.
    fn functional_times_bidual(&self, f: &[GR], n: &[GR]) -> Vec<GR> {
        (0..self.n)
            .map(|i| dot(n, &self.element_times_functional(&self.basis(i), f)))
            .collect()
    }

    /// `m□n ∈ A**`: `(m□n)(f) = m(n·f)`.
    fn first_product(&self, m: &[GR], n: &[GR]) -> Vec<GR> {
        (0..self.n)
            .map(|j| dot(m, &self.bidual_times_functional(n, &self.basis(j))))
            .collect()
    }

    /// `m◊n ∈ A**`: `(m◊n)(f) = n(f·m)`.
    fn second_product(&self, m: &[GR], n: &[GR]) -> Vec<GR> {
        (0..self.n)
            .map(|j| dot(n, &self.functional_times_bidual(&self.basis(j), m)))
            .collect()
    }

    /// Structure tensor of `□`, reusing `n·f` across all `m`.
    fn square_tensor(&self) -> Vec<GR> {
        let n = self.n;
        let mut out = vec![GR::zero(); n * n * n];
        for k in 0..n {
            let nf: Vec<Vec<GR>> = (0..n)
                .map(|j| self.bidual_times_functional(&self.basis(k), &self.basis(j)))
                .collect();
            for p in 0..n {
                for (j, g) in nf.iter().enumerate() {
                    out[(p * n + k) * n + j] = dot(&self.basis(p), g);
                }
            }
        }
        out
    }

    /// Structure tensor of `◊`, reusing `f·m` across all `n`.
    fn lozenge_tensor(&self) -> Vec<GR> {
        let n = self.n;
        let mut out = vec![GR::zero(); n * n * n];
        for p in 0..n {
            let fm: Vec<Vec<GR>> = (0..n)
                .map(|j| self.functional_times_bidual(&self.basis(j), &self.basis(p)))
                .collect();
            for k in 0..n {
                for (j, g) in fm.iter().enumerate() {
                    out[(p * n + k) * n + j] = dot(&self.basis(k), g);
                }
            }
        }
        out
    }
}

/// `c[i][j][k] = φᵢ δⱼₖ`.
fn phi_form_tensor(phi: &[GR]) -> Vec<GR> {
    let n = phi.len();
    let mut t = vec![GR::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            t[(i * n + j) * n + j] = phi[i].clone();
        }
    }
    t
}

pub fn arens_products(algebra: &Algebra) -> ArensResult {
    let chain = ActionChain::new(algebra);
    let square = chain.square_tensor();
    let lozenge = chain.lozenge_tensor();
    let regular = square == lozenge;
    let matches_phi_form = algebra.phi().map(|phi| {
        let expected = phi_form_tensor(phi);
        square == expected && lozenge == expected
    });
    ArensResult { dim: algebra.dim(), square, lozenge, regular, matches_phi_form }
}

impl ArensResult {
    /// `(A**, □)` as an algebra in its own right.
    pub fn square_algebra(&self, label: impl Into<String>) -> Result<Algebra> {
        Algebra::new(label, self.dim, self.square.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    /// Level `l` takes the Arens products of `A^(2l)`, landing in `A^(2l+2)`.
    pub level: usize,
    pub regular: bool,
    /// The `□` tensor on `A^(2l+2)` equals the tensor of `A`.
    pub matches_base: bool,
}

/// Iterates `A → (A**, □)` and records Arens regularity of each stage.
///
pub fn bidual_tower_regularity(algebra: &Algebra, depth: usize) -> Result<Vec<TowerLevel>> {
    if depth > MAX_TOWER_DEPTH {
        return Err(Error::DepthLimit { requested: depth, limit: MAX_TOWER_DEPTH });
    }
    let base = algebra.tensor().to_vec();
    let mut current = algebra.clone();
    let mut levels = Vec::with_capacity(depth);
    for level in 0..depth {
        let result = arens_products(&current);
        levels.push(TowerLevel {
            level,
            regular: result.regular,
            matches_base: result.square == base,
        });
        current = result.square_algebra(format!("{}**", current.label()))?;
    }
    Ok(levels)
}

/// `m □ n` on arbitrary bidual coordinates.
pub fn first_arens_product(algebra: &Algebra, m: &[GR], n: &[GR]) -> Vec<GR> {
    ActionChain::new(algebra).first_product(m, n)
}

/// `m ◊ n` on arbitrary bidual coordinates.
pub fn second_arens_product(algebra: &Algebra, m: &[GR], n: &[GR]) -> Vec<GR> {
    ActionChain::new(algebra).second_product(m, n)
}
