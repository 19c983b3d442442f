//! Exact computation with φ-algebras: a vector space `A` with the product
//! `a·b = φ(a) b` for a fixed nonzero functional `φ`.
//!
//! Everything runs over the Gaussian rationals ℚ(i), so ranks, kernels and
//! cohomology dimensions are computed without rounding. The crate is
//! organised bottom-up:
//!
//! - [`exactnum`]: scalars, matrices, row reduction and subspaces.
//! - [`algebra`]: structure tensors, the φ-algebra constructor, identities,
//!   idempotents, unitization and the Jacobson radical.
//! - [`bimodule`]: bimodules, the dual functor, iterated duals, action spans
//!   and ideal tests.
//! - [`arens`]: both Arens products on the bidual and regularity.
//! - [`cohomology`]: derivations, inner derivations and `H¹`.
//! - [`structure`]: isomorphism checks and multiplier algebras.

macro_rules! coordinate_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name(Vec<$crate::exactnum::GR>);

        impl $name {
            pub fn new(coords: Vec<$crate::exactnum::GR>) -> Self {
                Self(coords)
            }

            pub fn zeros(n: usize) -> Self {
                Self(vec![<$crate::exactnum::GR as num_traits::Zero>::zero(); n])
            }

            /// The `i`-th standard basis vector of length `n`.
            pub fn unit(n: usize, i: usize) -> Self {
                let mut v = Self::zeros(n);
                v.0[i] = <$crate::exactnum::GR as num_traits::One>::one();
                v
            }

            pub fn from_ints(coords: &[i64]) -> Self {
                Self(coords.iter().map(|&x| $crate::exactnum::GR::from_int(x)).collect())
            }

            pub fn coords(&self) -> &[$crate::exactnum::GR] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<$crate::exactnum::GR> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(num_traits::Zero::is_zero)
            }

            pub fn scale(&self, s: &$crate::exactnum::GR) -> Self {
                Self(self.0.iter().map(|x| x * s).collect())
            }

            /// Coordinate-wise sum. Panics on length mismatch.
            pub fn add(&self, other: &Self) -> Self {
                assert_eq!(self.len(), other.len());
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            /// Coordinate-wise difference. Panics on length mismatch.
            pub fn sub(&self, other: &Self) -> Self {
                assert_eq!(self.len(), other.len());
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
            }
        }

        impl std::ops::Deref for $name {
            type Target = [$crate::exactnum::GR];
            fn deref(&self) -> &Self::Target {
                &self.0
            }
        }

        impl AsRef<[$crate::exactnum::GR]> for $name {
            fn as_ref(&self) -> &[$crate::exactnum::GR] {
                &self.0
            }
        }

        impl From<Vec<$crate::exactnum::GR>> for $name {
            fn from(v: Vec<$crate::exactnum::GR>) -> Self {
                Self(v)
            }
        }
    };
}

pub mod algebra;
pub mod arens;
pub mod bimodule;
pub mod cohomology;
pub mod error;
pub mod exactnum;
pub mod structure;

pub use algebra::{Algebra, DualVector, Vector};
pub use bimodule::{Bimodule, ModuleElement, Side};
pub use error::{Error, Result};
pub use exactnum::{GaussianRational, Matrix, Subspace, GR};
