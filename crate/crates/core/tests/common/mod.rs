#![allow(dead_code)]

pub mod oracle;

use phialg_core::{Algebra, DualVector, GR};

/// φ = e₀* on ℚ(i)ⁿ.
pub fn coordinate_phi(n: usize) -> Algebra {
    let mut phi = DualVector::zeros(n).into_coords();
    phi[0] = GR::from_int(1);
    Algebra::phi_algebra(DualVector::new(phi)).unwrap()
}

/// A dense functional with complex and fractional entries.
pub fn dense_phi(n: usize) -> Algebra {
    let phi = (0..n)
        .map(|i| {
            let i = i as i64;
            GR::from_parts((i + 1, 2), ((i % 3) - 1, 3))
        })
        .collect();
    Algebra::phi_algebra(DualVector::new(phi)).unwrap()
}

/// φ supported on the last coordinate only.
pub fn last_phi(n: usize) -> Algebra {
    let mut phi = DualVector::zeros(n).into_coords();
    phi[n - 1] = GR::from_ratio(-3, 4);
    Algebra::phi_algebra(DualVector::new(phi)).unwrap()
}

pub fn fixtures(n: usize) -> Vec<Algebra> {
    vec![coordinate_phi(n), dense_phi(n), last_phi(n)]
}
