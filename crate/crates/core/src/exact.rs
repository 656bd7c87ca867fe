//! Exact rational scalars.
//!
//! [`Rational`] is always kept in lowest terms with a positive denominator,
//! so structural equality is numeric equality. The textual form is `p/q`,
//! or just `p` when the denominator is 1, with the sign on the numerator.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom` in canonical form.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(numer, denom)))
        }
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    /// The nonnegative rational square root, if `self` is the square of a
    /// rational. A rational in lowest terms is a square iff its numerator
    /// and denominator both are.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(Rational(BigRational::new(n, d)))
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    pub fn cbrt(&self) -> Option<Self> {
        let n = exact_icbrt(self.numer())?;
        let d = exact_icbrt(self.denom())?;
        Some(Rational(BigRational::new(n, d)))
    }

    /// `max(|numer|, denom)` of the canonical form.
    pub fn naive_height(&self) -> BigInt {
        let n = self.numer().abs();
        if &n > self.denom() {
            n
        } else {
            self.denom().clone()
        }
    }

    /// Natural log of the naive height, accurate far beyond `f64` range.
    pub fn log_height(&self) -> f64 {
        log_bigint(&self.naive_height())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_bigrational(&self) -> &BigRational {
        &self.0
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn exact_icbrt(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

/// `ln(n)` for `n >= 1`, computed from the top 64 bits and the bit length.
pub fn log_bigint(n: &BigInt) -> f64 {
    let (_, mag) = n.clone().into_parts();
    let bits = mag.bits();
    if bits <= 64 {
        return mag.to_f64().unwrap_or(1.0).ln();
    }
    let shift = bits - 64;
    let top = (&mag >> shift).to_f64().unwrap_or(1.0);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty input")]
    Empty,
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `p/q` and finite decimals such as `-0.5`, all converted
    /// exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let malformed = || ParseRationalError::Malformed(s.to_string());
        if let Some((n, d)) = s.split_once('/') {
            let n = parse_int(n).ok_or_else(malformed)?;
            let d = parse_int(d).ok_or_else(malformed)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let (negative, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
            if !digits_ok(int_digits)
                || !digits_ok(frac_part)
                || (int_digits.is_empty() && frac_part.is_empty())
            {
                return Err(malformed());
            }
            let joined = format!("{int_digits}{frac_part}");
            let mut n: BigInt = joined.parse().map_err(|_| malformed())?;
            if negative {
                n = -n;
            }
            let d = num_traits::pow(BigInt::from(10), frac_part.len());
            return Ok(Rational(BigRational::new(n, d)));
        }
        parse_int(s).map(Rational::from).ok_or_else(malformed)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $imp<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $imp<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $imp<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $imp<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(self.0.$method(BigRational::from_integer(rhs.into())))
            }
        }
        impl<'a> $imp<i64> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational((&self.0).$method(BigRational::from_integer(rhs.into())))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division panics on a zero divisor, like the integer types; use
// `checked_div` where the divisor may vanish.
forward_binop!(Div, div);

impl Mul<&Rational> for i64 {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        rhs * self
    }
}

impl Mul<Rational> for i64 {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        rhs * self
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Shorthand for `Rational::new`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

/// Nonnegative canonical fractions with naive height exactly `h`, in
/// increasing order.
fn positive_of_height(h: u64) -> impl Iterator<Item = Rational> {
    let h_i = h as i64;
    // p/h with p < h, then h/q with q <= h; gcd = 1 in both cases.
    let below = (1..h_i).filter(move |p| p.gcd(&h_i) == 1).map(move |p| rat(p, h_i));
    let above = (1..=h_i)
        .rev()
        .filter(move |q| q.gcd(&h_i) == 1)
        .map(move |q| rat(h_i, q));
    below.chain(above)
}

/// All positive rationals of naive height `<= bound`, grouped by height.
pub fn positive_rationals_up_to_height(bound: u64) -> Vec<Rational> {
    (1..=bound).flat_map(positive_of_height).collect()
}

/// All rationals of naive height `<= bound`: zero first, then by height,
/// each positive value immediately followed by its negative.
pub fn rationals_up_to_height(bound: u64) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    for r in positive_rationals_up_to_height(bound) {
        let neg = -&r;
        out.push(r);
        out.push(neg);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_examples() {
        assert_eq!(rat(4, 9).sqrt(), Some(rat(2, 3)));
        assert_eq!(rat(225, 256).sqrt(), Some(rat(15, 16)));
        assert_eq!(Rational::integer(2).sqrt(), None);
        assert_eq!(rat(-4, 9).sqrt(), None);
        assert_eq!(Rational::zero().sqrt(), Some(Rational::zero()));
    }

    #[test]
    fn height_examples() {
        assert_eq!(Rational::zero().naive_height(), BigInt::from(1));
        assert_eq!(rat(-25, 9).naive_height(), BigInt::from(25));
        assert_eq!(rat(425, 72).naive_height(), BigInt::from(425));
    }

    #[test]
    fn canonical_form_on_construction() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, -7), Rational::zero());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/4".parse::<Rational>().unwrap(), rat(3, 4));
        assert_eq!("-6/8".parse::<Rational>().unwrap(), rat(-3, 4));
        assert_eq!("0.5".parse::<Rational>().unwrap(), rat(1, 2));
        assert_eq!("-1.25".parse::<Rational>().unwrap(), rat(-5, 4));
        assert_eq!(".5".parse::<Rational>().unwrap(), rat(1, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::integer(7));
        assert!(matches!("1/0".parse::<Rational>(), Err(ParseRationalError::ZeroDenominator(_))));
        for bad in ["", "a", "1/", "/2", "1.2.3", "-", "1/-", "--1", "1e3", "."] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
        assert_eq!(rat(-25, 9).to_string(), "-25/9");
        assert_eq!(Rational::integer(-8).to_string(), "-8");
    }

    #[test]
    fn serde_uses_the_string_form() {
        let json = serde_json::to_string(&rat(-125, 24)).unwrap();
        assert_eq!(json, "\"-125/24\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rat(-125, 24));
    }

    #[test]
    fn log_height_of_huge_numbers() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let expected = 400.0 * 10f64.ln();
        assert!((log_bigint(&big) - expected).abs() < 1e-9);
        assert!((rat(425, 72).log_height() - 425f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn enumeration_by_height() {
        let all = rationals_up_to_height(2);
        assert_eq!(all, vec![Rational::zero(), rat(1, 1), rat(-1, 1), rat(1, 2), rat(-1, 2), rat(2, 1), rat(-2, 1)]);
        for bound in 1..12u64 {
            let v = positive_rationals_up_to_height(bound);
            let mut dedup = v.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), v.len());
            // brute force over all p/q
            let mut brute = Vec::new();
            for p in 1..=bound as i64 {
                for q in 1..=bound as i64 {
                    let r = rat(p, q);
                    if !brute.contains(&r) {
                        brute.push(r);
                    }
                }
            }
            assert_eq!(brute.len(), v.len());
        }
    }

    #[test]
    fn cube_roots() {
        assert_eq!(rat(-8, 27).cbrt(), Some(rat(-2, 3)));
        assert_eq!(rat(2, 1).cbrt(), None);
    }
}
