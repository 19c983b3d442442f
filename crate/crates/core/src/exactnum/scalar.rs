//! Gaussian rationals: exact complex scalars `re + im·i` with `re, im ∈ ℚ`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarParseError;

/// An element of ℚ(i).
///
/// Both parts are kept as reduced fractions with positive denominators, so
/// structural equality coincides with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

pub type GR = GaussianRational;

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom` as a real scalar. Panics if `denom == 0`.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_real(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`, which stays rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_real() {
            return Some(Self::from_real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    /// True when both parts are reduced with strictly positive denominators.
    pub fn is_canonical(&self) -> bool {
        fn canonical(q: &BigRational) -> bool {
            q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
        }
        canonical(&self.re) && canonical(&self.im)
    }

    /// Parses a pair of rational strings, as used in spec files.
    pub fn parse_pair(re: &str, im: &str) -> Result<Self, ScalarParseError> {
        Ok(Self::new(parse_rational(re)?, parse_rational(im)?))
    }

    /// The `["re", "im"]` text form.
    pub fn to_text_pair(&self) -> [String; 2] {
        [rational_to_text(&self.re), rational_to_text(&self.im)]
    }
}

/// Parses `"p"` or `"p/q"` (optional leading `-`, decimal digits, `q ≠ 0`)
/// and returns the reduced fraction.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarParseError> {
    let bad = || ScalarParseError::Malformed(s.to_string());
    let (num_part, den_part) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num_part.strip_prefix('-').unwrap_or(num_part);
    if !digits(unsigned) {
        return Err(bad());
    }
    let numer: BigInt = num_part.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_part {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(s.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical text: `"p"` when the denominator is 1, otherwise `"p/q"`.
pub fn rational_to_text(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_real(BigRational::one())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::from_real(q)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = rational_to_text(&self.re);
        if self.im.is_zero() {
            return f.write_str(&re);
        }
        let im = rational_to_text(&self.im.abs());
        let sign = if self.im.is_negative() { '-' } else { '+' };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{lead}{im}i")
        } else {
            write!(f, "{re}{sign}{im}i")
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_real(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like the primitive numeric types.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: GaussianRational) {
        *self -= &rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// Bilinear (not sesquilinear) pairing `Σ aᵢ bᵢ`.
pub fn dot(a: &[GR], b: &[GR]) -> GR {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = GR::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gr(re: (i64, i64), im: (i64, i64)) -> GR {
        GR::from_parts(re, im)
    }

    #[test]
    fn parse_and_render_rationals() {
        assert_eq!(rational_to_text(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(rational_to_text(&parse_rational("-6/3").unwrap()), "-2");
        assert_eq!(rational_to_text(&parse_rational("0/7").unwrap()), "0");
        assert_eq!(rational_to_text(&parse_rational("007").unwrap()), "7");
        for bad in ["", "-", "1/", "/2", "1.5", "+1", "1/-2", "a", "1 /2", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
        assert!(matches!(
            parse_rational("3/0"),
            Err(ScalarParseError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(gr((1, 2), (0, 1)).to_string(), "1/2");
        assert_eq!(gr((1, 1), (-3, 4)).to_string(), "1-3/4i");
        assert_eq!(gr((0, 1), (2, 1)).to_string(), "2i");
        assert_eq!(gr((0, 1), (-1, 1)).to_string(), "-1i");
        assert_eq!(gr((-5, 3), (1, 1)).to_string(), "-5/3+1i");
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&GR::i() * &GR::i(), GR::from_int(-1));
        assert_eq!(GR::i().inv().unwrap(), -GR::i());
        assert!(GR::zero().inv().is_none());
    }

    #[test]
    fn text_pair_round_trip() {
        let z = gr((-7, 21), (4, 6));
        let [re, im] = z.to_text_pair();
        assert_eq!(re, "-1/3");
        assert_eq!(im, "2/3");
        assert_eq!(GR::parse_pair(&re, &im).unwrap(), z);
    }

    fn arb_gr() -> impl Strategy<Value = GR> {
        (-20i64..20, 1i64..12, -20i64..20, 1i64..12)
            .prop_map(|(a, b, c, d)| GR::from_parts((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms_and_canonicity(a in arb_gr(), b in arb_gr(), c in arb_gr()) {
            let results = [
                &a + &b, &a - &b, &a * &b, -&a, a.conj(),
                &(&a * &b) * &c,
            ];
            for r in &results {
                prop_assert!(r.is_canonical());
            }
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                let q = &a / &b;
                prop_assert!(q.is_canonical());
                prop_assert_eq!(&q * &b, a.clone());
            }
            prop_assert_eq!((&a * &a.conj()).re().clone(), a.norm_sqr());
        }
    }
}
