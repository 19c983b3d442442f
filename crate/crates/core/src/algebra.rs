//! Finite-dimensional associative algebras given by structure constants.
//!
//! Basis products are `eᵢ·eⱼ = Σₖ c[i][j][k] eₖ`. A φ-algebra on `ℚ(i)ⁿ`
//! has `c[i][j][k] = φᵢ δⱼₖ`, i.e. `a·b = φ(a) b`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_len, Error, Result};
use crate::exactnum::{dot, kernel, solve, Matrix, Subspace, GR};

coordinate_type!(
    /// An element of the algebra in the fixed basis.
    Vector
);

coordinate_type!(
    /// A linear functional in the dual basis.
    DualVector
);

impl DualVector {
    /// `⟨f, v⟩`.
    pub fn pair(&self, v: &[GR]) -> GR {
        dot(&self.0, v)
    }

    pub fn as_row(&self) -> Matrix {
        Matrix::row_vector(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    mult: Vec<GR>,
    phi: Option<DualVector>,
    label: String,
}

impl Algebra {
    /// Builds an algebra from a flat `n×n×n` tensor, indexed `(i·n + j)·n + k`.
    pub fn new(label: impl Into<String>, dim: usize, mult: Vec<GR>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        check_len(dim * dim * dim, mult.len())?;
        let algebra = Self { dim, mult, phi: None, label: label.into() };
        algebra.check_associative()?;
        Ok(algebra)
    }

    /// The φ-algebra `a·b = φ(a) b` on `ℚ(i)ⁿ` with `n = phi.len()`.
    pub fn phi_algebra(phi: DualVector) -> Result<Self> {
        let n = phi.len();
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        if phi.is_zero() {
            return Err(Error::ZeroFunctional);
        }
        let mut mult = vec![GR::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                mult[(i * n + j) * n + j] = phi[i].clone();
            }
        }
        let label = format!(
            "phi-algebra[{}]",
            phi.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        );
        let mut algebra = Self::new(label, n, mult)?;
        algebra.phi = Some(phi);
        Ok(algebra)
    }

    /// All products zero.
    pub fn zero(n: usize) -> Result<Self> {
        Self::new(format!("zero-{n}"), n, vec![GR::zero(); n * n * n])
    }

    /// `ℚ(i)ⁿ` with coordinatewise product: `eᵢeᵢ = eᵢ`, all else zero.
    pub fn diagonal(n: usize) -> Result<Self> {
        let mut mult = vec![GR::zero(); n * n * n];
        for i in 0..n {
            mult[(i * n + i) * n + i] = GR::one();
        }
        Self::new(format!("diagonal-{n}"), n, mult)
    }

    /// The full matrix algebra `M_k` with basis `E_ab` at index `a·k + b`.
    pub fn full_matrix(k: usize) -> Result<Self> {
        let n = k * k;
        let mut mult = vec![GR::zero(); n * n * n];
        for a in 0..k {
            for b in 0..k {
                for d in 0..k {
                    // E_ab · E_bd = E_ad
                    let (i, j, out) = (a * k + b, b * k + d, a * k + d);
                    mult[(i * n + j) * n + out] = GR::one();
                }
            }
        }
        Self::new(format!("matrix-{k}x{k}"), n, mult)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn phi(&self) -> Option<&DualVector> {
        self.phi.as_ref()
    }

    pub fn require_phi(&self) -> Result<&DualVector> {
        self.phi.as_ref().ok_or(Error::NotPhiAlgebra)
    }

    pub fn tensor(&self) -> &[GR] {
        &self.mult
    }

    /// `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &GR {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    fn basis_product(&self, i: usize, j: usize) -> &[GR] {
        let n = self.dim;
        &self.mult[(i * n + j) * n..(i * n + j + 1) * n]
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    for m in 0..n {
                        let lhs: GR = (0..n)
                            .filter(|&l| !ij[l].is_zero())
                            .map(|l| &ij[l] * self.structure_constant(l, k, m))
                            .sum();
                        let rhs: GR = (0..n)
                            .filter(|&l| !jk[l].is_zero())
                            .map(|l| &jk[l] * self.structure_constant(i, l, m))
                            .sum();
                        if lhs != rhs {
                            return Err(Error::NotAssociative(i, j, k));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn multiply(&self, a: &[GR], b: &[GR]) -> Result<Vector> {
        check_len(self.dim, a.len())?;
        check_len(self.dim, b.len())?;
        let n = self.dim;
        let mut out = vec![GR::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let w = ai * bj;
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&w * c);
                    }
                }
            }
        }
        Ok(Vector(out))
    }

    /// Matrix of `x ↦ a·x`; column `j` holds `a·eⱼ`.
    pub fn left_multiplication(&self, a: &[GR]) -> Result<Matrix> {
        check_len(self.dim, a.len())?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.multiply(a, Vector::unit(n, j).coords())?;
            for (k, v) in col.into_coords().into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        Ok(m)
    }

    /// Matrix of `x ↦ x·a`; column `j` holds `eⱼ·a`.
    pub fn right_multiplication(&self, a: &[GR]) -> Result<Matrix> {
        check_len(self.dim, a.len())?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.multiply(Vector::unit(n, j).coords(), a)?;
            for (k, v) in col.into_coords().into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        Ok(m)
    }
}

/// The set of left identities, `particular + directions`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftIdentities {
    pub particular: Vector,
    pub directions: Subspace,
    /// A two-sided identity, when one exists.
    pub two_sided: Option<Vector>,
}

impl LeftIdentities {
    pub fn contains(&self, e: &[GR]) -> Result<bool> {
        check_len(self.particular.len(), e.len())?;
        let diff: Vec<GR> = e.iter().zip(self.particular.iter()).map(|(a, b)| a - b).collect();
        self.directions.contains(&diff)
    }
}

/// Solves `e·eₐ = eₐ` (and optionally `eₐ·e = eₐ`) for all basis `a`.
fn identity_system(algebra: &Algebra, two_sided: bool) -> (Matrix, Matrix) {
    let n = algebra.dim;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..n {
        for k in 0..n {
            let delta = if a == k { GR::one() } else { GR::zero() };
            rows.push((0..n).map(|j| algebra.structure_constant(j, a, k).clone()).collect());
            rhs.push(vec![delta.clone()]);
            if two_sided {
                rows.push((0..n).map(|j| algebra.structure_constant(a, j, k).clone()).collect());
                rhs.push(vec![delta]);
            }
        }
    }
    (
        Matrix::from_rows(n, rows).expect("rows have n entries"),
        Matrix::from_rows(1, rhs).expect("rhs rows have one entry"),
    )
}

/// Left identities by solving the linear system `e·a = a`; `None` if there are none.
pub fn left_identities(algebra: &Algebra) -> Option<LeftIdentities> {
    let (m, rhs) = identity_system(algebra, false);
    let particular = solve(&m, &rhs).ok()?.solution()?;
    let two_sided = {
        let (m2, rhs2) = identity_system(algebra, true);
        solve(&m2, &rhs2).ok()?.solution().map(|x| Vector(x.column(0)))
    };
    Some(LeftIdentities {
        particular: Vector(particular.column(0)),
        directions: kernel(&m),
        two_sided,
    })
}

/// `e = e_{i₀} / φ_{i₀}` for the lowest index with `φ_{i₀} ≠ 0`.
pub fn canonical_left_identity(algebra: &Algebra) -> Result<Vector> {
    let phi = algebra.require_phi()?;
    let (i0, p) = phi
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .ok_or(Error::ZeroFunctional)?;
    Ok(Vector::unit(algebra.dim, i0).scale(&p.inv().expect("nonzero")))
}

pub fn is_idempotent(algebra: &Algebra, a: &[GR]) -> Result<bool> {
    Ok(algebra.multiply(a, a)?.coords() == a)
}

/// `{0} ∪ {a : φ(a) = 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    pub zero: Vector,
    pub affine_point: Vector,
    pub directions: Subspace,
}

impl IdempotentSet {
    pub fn contains(&self, a: &[GR]) -> Result<bool> {
        check_len(self.zero.len(), a.len())?;
        if a == self.zero.coords() {
            return Ok(true);
        }
        let diff: Vec<GR> = a.iter().zip(self.affine_point.iter()).map(|(x, p)| x - p).collect();
        self.directions.contains(&diff)
    }
}

pub fn idempotent_set(algebra: &Algebra) -> Result<IdempotentSet> {
    let phi = algebra.require_phi()?;
    let point = solve(&phi.as_row(), &Matrix::from_ints(&[&[1]]))?
        .solution()
        .ok_or_else(|| Error::Internal("phi(e) = 1 has no solution".into()))?;
    Ok(IdempotentSet {
        zero: Vector::zeros(algebra.dim),
        affine_point: Vector(point.column(0)),
        directions: kernel(&phi.as_row()),
    })
}

/// Minimality in the sense `pAp = ℂp`.
pub fn is_minimal_idempotent(algebra: &Algebra, p: &[GR]) -> Result<bool> {
    if p.iter().all(Zero::is_zero) || !is_idempotent(algebra, p)? {
        return Err(Error::NotIdempotent);
    }
    let n = algebra.dim;
    let corners = (0..n)
        .map(|i| {
            let pa = algebra.multiply(p, Vector::unit(n, i).coords())?;
            algebra.multiply(&pa, p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(n, &corners)?.dim() == 1)
}

/// `A ⊕ ℚ(i)·1` with the adjoined unit at index `n`.
pub fn unitize(algebra: &Algebra) -> Algebra {
    let n = algebra.dim;
    let m = n + 1;
    let mut mult = vec![GR::zero(); m * m * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mult[(i * m + j) * m + k] = algebra.structure_constant(i, j, k).clone();
            }
        }
    }
    for x in 0..m {
        mult[(n * m + x) * m + x] = GR::one();
        mult[(x * m + n) * m + x] = GR::one();
    }
    Algebra::new(format!("{}+1", algebra.label), m, mult)
        .expect("unitization of an associative algebra is associative")
}

/// Jacobson radical via the trace form of the unitization.
///
/// In the unitization `U`, `rad U = {x : Tr L(x·y) = 0 for all y}` in
/// characteristic zero, and `rad A = A ∩ rad U`.
pub fn radical(algebra: &Algebra) -> Subspace {
    let n = algebra.dim;
    let unit = unitize(algebra);
    let m = n + 1;
    // Tr L(e_k)
    let traces: Vec<GR> = (0..m)
        .map(|k| (0..m).map(|j| unit.structure_constant(k, j, j)).sum())
        .collect();
    // gram[j][i] = Tr L(e_i e_j), so kernel(gram) = {x : Σ xᵢ Tr L(eᵢ eⱼ) = 0 ∀j}
    let gram = Matrix::from_fn(m, m, |j, i| dot(unit.basis_product(i, j), &traces));
    let rad_unit = kernel(&gram);
    let inside_a = rad_unit
        .intersect(&Subspace::coordinate(m, &(0..n).collect::<Vec<_>>()))
        .expect("same ambient dimension");
    let truncated: Vec<Vec<GR>> = inside_a.basis_vectors().map(|v| v[..n].to_vec()).collect();
    Subspace::span(n, &truncated).expect("truncated vectors have length n")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormReport {
    /// `max |φᵢ|²`, exact.
    pub max_modulus_sqr: BigRational,
    /// `‖φ‖_∞ ≤ 1`, which makes the ℓ¹ norm submultiplicative.
    pub admissible: bool,
}

/// Sup-norm of φ against the ℓ¹ norm on coordinates.
pub fn norm_check(algebra: &Algebra) -> Result<NormReport> {
    let phi = algebra.require_phi()?;
    let max_modulus_sqr = phi
        .iter()
        .map(GR::norm_sqr)
        .max()
        .expect("phi has at least one coordinate");
    let admissible = max_modulus_sqr <= BigRational::one();
    Ok(NormReport { max_modulus_sqr, admissible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn phi_alg(phi: &[i64]) -> Algebra {
        Algebra::phi_algebra(DualVector::from_ints(phi)).unwrap()
    }

    fn v(x: &[i64]) -> Vector {
        Vector::from_ints(x)
    }

    #[test]
    fn two_dim_products() {
        let a = phi_alg(&[1, 0]);
        let e1 = v(&[1, 0]);
        let e2 = v(&[0, 1]);
        assert_eq!(a.multiply(&e1, &e1).unwrap(), e1);
        assert_eq!(a.multiply(&e1, &e2).unwrap(), e2);
        assert!(a.multiply(&e2, &e1).unwrap().is_zero());
        assert!(a.multiply(&e2, &e2).unwrap().is_zero());
    }

    #[test]
    fn one_dim_is_the_field() {
        let a = phi_alg(&[1]);
        assert_eq!(a.tensor(), &[GR::one()]);
        let x = Vector::new(vec![GR::from_ratio(3, 7)]);
        let y = Vector::new(vec![GR::i()]);
        assert_eq!(a.multiply(&x, &y).unwrap().coords(), &[&x[0] * &y[0]]);
    }

    #[test]
    fn coordinate_functional_tensor() {
        let a = phi_alg(&[1, 0, 0]);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let expected = if i == 0 && j == k { GR::one() } else { GR::zero() };
                    assert_eq!(a.structure_constant(i, j, k), &expected);
                }
            }
        }
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(Algebra::phi_algebra(DualVector::from_ints(&[0, 0])), Err(Error::ZeroFunctional));
        assert_eq!(Algebra::phi_algebra(DualVector::zeros(0)), Err(Error::EmptyDimension));
        assert!(matches!(
            Algebra::new("bad", 2, vec![GR::zero(); 7]),
            Err(Error::DimensionMismatch { .. })
        ));
        let a = phi_alg(&[1, 0]);
        assert!(a.multiply(&v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn rejects_nonassociative_tensor() {
        // e0·e0 = e1, everything else zero except e1·e0 = e0
        let n = 2;
        let mut mult = vec![GR::zero(); 8];
        mult[1] = GR::one(); // (0,0)->1
        mult[n * n] = GR::one(); // (1,0)->0
        assert!(matches!(Algebra::new("bad", 2, mult), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn left_identities_two_dim() {
        let li = left_identities(&phi_alg(&[1, 0])).unwrap();
        assert_eq!(li.particular, v(&[1, 0]));
        assert_eq!(li.directions, Subspace::coordinate(2, &[1]));
        assert!(li.two_sided.is_none());
    }

    #[test]
    fn left_identities_one_dim() {
        let li = left_identities(&phi_alg(&[1])).unwrap();
        assert_eq!(li.particular, v(&[1]));
        assert_eq!(li.directions.dim(), 0);
        assert_eq!(li.two_sided, Some(v(&[1])));
    }

    #[test]
    fn left_identity_acts_on_random_elements() {
        let a = phi_alg(&[1, 0, 0]);
        let e = v(&[1, 5, -2]);
        let li = left_identities(&a).unwrap();
        assert!(li.contains(&e).unwrap());
        for x in [v(&[3, -1, 4]), v(&[0, 2, 9]), v(&[-6, 0, 1])] {
            assert_eq!(a.multiply(&e, &x).unwrap(), x);
        }
    }

    #[test]
    fn canonical_identity_uses_lowest_support() {
        let a = Algebra::phi_algebra(DualVector::new(vec![
            GR::zero(),
            GR::from_int(4),
            GR::from_int(1),
        ]))
        .unwrap();
        let e = canonical_left_identity(&a).unwrap();
        assert_eq!(e.coords(), &[GR::zero(), GR::from_ratio(1, 4), GR::zero()]);
        assert_eq!(canonical_left_identity(&Algebra::diagonal(2).unwrap()), Err(Error::NotPhiAlgebra));
    }

    #[test]
    fn idempotent_examples() {
        let a = phi_alg(&[1, 0]);
        assert!(is_idempotent(&a, &v(&[0, 0])).unwrap());
        assert!(is_idempotent(&a, &v(&[1, 1])).unwrap());
        assert!(!is_idempotent(&a, &v(&[2, 0])).unwrap());
        let set = idempotent_set(&a).unwrap();
        assert!(set.contains(&v(&[1, 1])).unwrap());
        assert!(!set.contains(&v(&[2, 0])).unwrap());
    }

    #[test]
    fn minimal_idempotents() {
        assert!(is_minimal_idempotent(&phi_alg(&[1, 0]), &v(&[1, 0])).unwrap());
        assert!(is_minimal_idempotent(&phi_alg(&[1, 0, 0]), &v(&[1, 1, 0])).unwrap());
        assert!(is_minimal_idempotent(&phi_alg(&[1]), &v(&[1])).unwrap());
        assert_eq!(is_minimal_idempotent(&phi_alg(&[1, 0]), &v(&[2, 0])), Err(Error::NotIdempotent));
        assert_eq!(is_minimal_idempotent(&phi_alg(&[1, 0]), &v(&[0, 0])), Err(Error::NotIdempotent));
        // diag(1,1) in C² is idempotent but not minimal
        assert!(!is_minimal_idempotent(&Algebra::diagonal(2).unwrap(), &v(&[1, 1])).unwrap());
    }

    #[test]
    fn unitize_zero_algebra() {
        let u = unitize(&Algebra::zero(1).unwrap());
        assert_eq!(u.dim(), 2);
        let li = left_identities(&u).unwrap();
        assert_eq!(li.two_sided, Some(v(&[0, 1])));
    }

    #[test]
    fn unitize_phi_algebra() {
        let u = unitize(&phi_alg(&[1, 0]));
        assert_eq!(u.dim(), 3);
        let unit = v(&[0, 0, 1]);
        for x in [v(&[1, 2, 3]), v(&[-4, 0, 7])] {
            assert_eq!(u.multiply(&unit, &x).unwrap(), x);
            assert_eq!(u.multiply(&x, &unit).unwrap(), x);
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(&phi_alg(&[1, 0, 0])), Subspace::coordinate(3, &[1, 2]));
        assert_eq!(radical(&phi_alg(&[1])), Subspace::zero(1));
        assert_eq!(radical(&Algebra::full_matrix(2).unwrap()), Subspace::zero(4));
        assert_eq!(radical(&Algebra::zero(3).unwrap()), Subspace::full(3));
        assert_eq!(radical(&Algebra::diagonal(3).unwrap()), Subspace::zero(3));
    }

    #[test]
    fn norm_examples() {
        let r = norm_check(&phi_alg(&[1, 0, 0])).unwrap();
        assert_eq!(r.max_modulus_sqr, BigRational::one());
        assert!(r.admissible);
        assert!(!norm_check(&phi_alg(&[2, 0])).unwrap().admissible);
        let half = Algebra::phi_algebra(DualVector::new(vec![GR::from_ratio(1, 2); 2])).unwrap();
        let r = norm_check(&half).unwrap();
        assert!(r.admissible);
        assert_eq!(r.max_modulus_sqr, BigRational::new(BigInt::from(1), BigInt::from(4)));
        // |3/5 + 4/5 i| = 1
        let unit_circle =
            Algebra::phi_algebra(DualVector::new(vec![GR::from_parts((3, 5), (4, 5))])).unwrap();
        assert!(norm_check(&unit_circle).unwrap().admissible);
    }

    fn small() -> impl Strategy<Value = GR> {
        (-4i64..5, 1i64..4, -3i64..4).prop_map(|(a, b, c)| GR::from_parts((a, b), (c, 1)))
    }

    fn phi_and_vectors(n: usize) -> impl Strategy<Value = (Vec<GR>, Vec<GR>, Vec<GR>, Vec<GR>)> {
        (
            proptest::collection::vec(small(), n),
            proptest::collection::vec(small(), n),
            proptest::collection::vec(small(), n),
            proptest::collection::vec(small(), n),
        )
            .prop_filter("phi nonzero", |(phi, ..)| phi.iter().any(|x| !x.is_zero()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn product_is_phi_times_vector((phi, a, b, c) in (1usize..5).prop_flat_map(phi_and_vectors)) {
            let phi = DualVector::new(phi);
            let alg = Algebra::phi_algebra(phi.clone()).unwrap();
            let ab = alg.multiply(&a, &b).unwrap();
            prop_assert_eq!(ab.clone(), Vector::new(b.clone()).scale(&phi.pair(&a)));
            let abc = alg.multiply(&ab, &c).unwrap();
            let a_bc = alg.multiply(&a, alg.multiply(&b, &c).unwrap().coords()).unwrap();
            prop_assert_eq!(&abc, &a_bc);
            let expected = Vector::new(c.clone()).scale(&(&phi.pair(&a) * &phi.pair(&b)));
            prop_assert_eq!(abc, expected);
        }

        #[test]
        fn idempotent_iff_zero_or_phi_one((phi, a, _, _) in (1usize..5).prop_flat_map(phi_and_vectors)) {
            let phi = DualVector::new(phi);
            let alg = Algebra::phi_algebra(phi.clone()).unwrap();
            let set = idempotent_set(&alg).unwrap();
            // also test the normalised copy, which lands on φ = 1
            let mut candidates = vec![a.clone()];
            let pa = phi.pair(&a);
            if !pa.is_zero() {
                candidates.push(Vector::new(a.clone()).scale(&pa.inv().unwrap()).into_coords());
            }
            for x in candidates {
                let expected = x.iter().all(Zero::is_zero) || phi.pair(&x) == GR::one();
                prop_assert_eq!(is_idempotent(&alg, &x).unwrap(), expected);
                prop_assert_eq!(set.contains(&x).unwrap(), expected);
            }
        }

        #[test]
        fn radical_is_ker_phi_and_square_zero((phi, _, _, _) in (1usize..5).prop_flat_map(phi_and_vectors)) {
            let phi = DualVector::new(phi);
            let alg = Algebra::phi_algebra(phi.clone()).unwrap();
            let rad = radical(&alg);
            let n = alg.dim();
            if n == 1 {
                prop_assert!(rad.is_zero());
            } else {
                prop_assert_eq!(&rad, &kernel(&phi.as_row()));
            }
            for x in rad.basis_vectors() {
                for y in rad.basis_vectors() {
                    prop_assert!(alg.multiply(x, y).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn no_two_sided_identity_beyond_dim_one((phi, e, _, _) in (2usize..5).prop_flat_map(phi_and_vectors)) {
            let phi = DualVector::new(phi);
            let alg = Algebra::phi_algebra(phi.clone()).unwrap();
            let li = left_identities(&alg).unwrap();
            prop_assert!(li.two_sided.is_none());
            let pe = phi.pair(&e);
            prop_assume!(!pe.is_zero());
            let e = Vector::new(e).scale(&pe.inv().unwrap());
            prop_assert!(li.contains(&e).unwrap());
            let n = alg.dim();
            let fails = (0..n).any(|b| {
                let basis = Vector::unit(n, b);
                alg.multiply(&basis, &e).unwrap() != basis
            });
            prop_assert!(fails);
        }
    }
}
