//! Short Weierstrass curves `y^2 = x^3 + A x + B` over the rationals.
//!
//! Points of finite order over Q have order in {1, ..., 10, 12} (Mazur), so
//! checking `kP` for `k <= 12` certifies infinite order exactly. Canonical
//! heights are only estimated, by the doubling limit at shallow depth, and
//! the independence test built on them is a heuristic.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Largest order of a rational torsion point on an elliptic curve over Q.
pub const MAZUR_BOUND: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    a: Rational,
    b: Rational,
    discriminant: Rational,
}

impl WeierstrassCurve {
    pub fn new(a: Rational, b: Rational) -> Self {
        let discriminant = (a.pow(3) * 4 + b.square() * 27) * -16;
        WeierstrassCurve { a, b, discriminant }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn discriminant(&self) -> &Rational {
        &self.discriminant
    }

    pub fn is_elliptic(&self) -> bool {
        !self.discriminant.is_zero()
    }

    fn require_elliptic(&self) -> Result<()> {
        if self.is_elliptic() {
            Ok(())
        } else {
            Err(Error::SingularCurve)
        }
    }

    /// `x^3 + A x + B`.
    pub fn rhs(&self, x: &Rational) -> Rational {
        x.pow(3) + &self.a * x + &self.b
    }

    pub fn contains(&self, p: &EcPoint) -> bool {
        match p {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    fn require_on_curve(&self, p: &EcPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// The curve `y^2 = x^3 + lambda^4 A x + lambda^6 B`.
    pub fn scaled(&self, lambda: &Rational) -> Self {
        WeierstrassCurve::new(&self.a * lambda.pow(4), &self.b * lambda.pow(6))
    }

    pub fn add(&self, p: &EcPoint, q: &EcPoint) -> Result<EcPoint> {
        self.require_elliptic()?;
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &EcPoint) -> Result<EcPoint> {
        self.add(p, p)
    }

    /// Chord-and-tangent addition; inputs are assumed valid.
    fn add_unchecked(&self, p: &EcPoint, q: &EcPoint) -> EcPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (EcPoint::Infinity, _) => return q.clone(),
            (_, EcPoint::Infinity) => return p.clone(),
            (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                return EcPoint::Infinity;
            }
            (x1.square() * 3 + &self.a) / (y1 * 2)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = slope.square() - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        EcPoint::Affine { x: x3, y: y3 }
    }

    /// `k P` by double-and-add; negative `k` negates.
    pub fn scalar_mul(&self, k: i64, p: &EcPoint) -> Result<EcPoint> {
        self.require_elliptic()?;
        self.require_on_curve(p)?;
        let base = if k < 0 { p.negate() } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = EcPoint::Infinity;
        let mut addend = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &addend);
            }
            n >>= 1;
            if n > 0 {
                addend = self.add_unchecked(&addend, &addend);
            }
        }
        Ok(acc)
    }

    /// The first `count` multiples `P, 2P, ..., count P`.
    pub fn multiples(&self, p: &EcPoint, count: usize) -> Result<Vec<EcPoint>> {
        self.require_elliptic()?;
        self.require_on_curve(p)?;
        let mut out = Vec::with_capacity(count);
        let mut acc = EcPoint::Infinity;
        for _ in 0..count {
            acc = self.add_unchecked(&acc, p);
            out.push(acc.clone());
        }
        Ok(out)
    }

    /// All rational points of order two, sorted by abscissa.
    pub fn two_torsion(&self) -> Result<Vec<EcPoint>> {
        self.require_elliptic()?;
        let mut roots = rational_roots_of_depressed_cubic(&self.a, &self.b);
        roots.sort();
        Ok(roots
            .into_iter()
            .map(|x| EcPoint::Affine { x, y: Rational::zero() })
            .collect())
    }

    /// The order of `P` if it is at most [`MAZUR_BOUND`]; `None` certifies
    /// infinite order.
    pub fn torsion_order(&self, p: &EcPoint) -> Result<Option<u32>> {
        self.require_elliptic()?;
        self.require_on_curve(p)?;
        let mut acc = p.clone();
        for k in 1..=MAZUR_BOUND {
            if acc.is_infinity() {
                return Ok(Some(k));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }

    /// Some `lambda != 0` with `lambda^4 A = A'` and `lambda^6 B = B'`.
    pub fn isomorphism_to(&self, other: &WeierstrassCurve) -> Result<Option<Rational>> {
        self.require_elliptic()?;
        other.require_elliptic()?;
        let (a1, b1, a2, b2) = (&self.a, &self.b, &other.a, &other.b);
        let lambda = if a1.is_zero() {
            if !a2.is_zero() {
                return Ok(None);
            }
            (b2 / b1).sqrt().and_then(|l3| l3.cbrt())
        } else if b1.is_zero() {
            if !b2.is_zero() {
                return Ok(None);
            }
            (a2 / a1).sqrt().and_then(|l2| l2.sqrt())
        } else {
            if a2.is_zero() || b2.is_zero() {
                return Ok(None);
            }
            (a1 * b2 / (a2 * b1)).sqrt()
        };
        Ok(lambda.filter(|l| !l.is_zero() && &self.scaled(l) == other))
    }

    /// Doubling-limit estimates `log H(x(2^n P)) / 4^n` for `n = 1..=depth`.
    pub fn canonical_height(&self, p: &EcPoint, depth: u32) -> Result<HeightEstimate> {
        if !(1..=5).contains(&depth) {
            return Err(Error::Precondition("height depth must be in 1..=5"));
        }
        if let Some(order) = self.torsion_order(p)? {
            return Err(Error::TorsionPoint(order));
        }
        let mut sequence = Vec::with_capacity(depth as usize);
        let mut acc = p.clone();
        for n in 1..=depth {
            acc = self.add_unchecked(&acc, &acc);
            let x = acc.x().expect("non-torsion multiples are affine");
            sequence.push(x.log_height() / 4f64.powi(n as i32));
        }
        Ok(HeightEstimate { sequence })
    }

    fn height_or_zero(&self, p: &EcPoint, depth: u32) -> Result<f64> {
        match self.canonical_height(p, depth) {
            Ok(h) => Ok(h.value()),
            Err(Error::TorsionPoint(_)) => Ok(0.0),
            Err(e) => Err(e),
        }
    }

    /// Heuristic independence test: the estimated Gram determinant
    /// `h(P) h(Q) - <P,Q>^2` of the height pairing exceeds `tolerance`.
    ///
    /// This is a numerical estimate, not a proof of independence.
    pub fn independence_heuristic(&self, p: &EcPoint, q: &EcPoint, depth: u32, tolerance: f64) -> Result<bool> {
        Ok(self.height_gram_determinant(p, q, depth)? > tolerance)
    }

    pub fn height_gram_determinant(&self, p: &EcPoint, q: &EcPoint, depth: u32) -> Result<f64> {
        let hp = self.canonical_height(p, depth)?.value();
        let hq = self.canonical_height(q, depth)?.value();
        let sum = self.add(p, q)?;
        let hpq = self.height_or_zero(&sum, depth)?;
        let pairing = (hpq - hp - hq) / 2.0;
        Ok(hp * hq - pairing * pairing)
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({}) x + ({})", self.a, self.b)
    }
}

impl Serialize for WeierstrassCurve {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("A", &self.a)?;
        map.serialize_entry("B", &self.b)?;
        map.serialize_entry("discriminant", &self.discriminant)?;
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeightEstimate {
    /// Estimates at depth `1..=n`; the last entry is the reported value.
    pub sequence: Vec<f64>,
}

impl HeightEstimate {
    pub fn value(&self) -> f64 {
        *self.sequence.last().expect("depth >= 1")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EcPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EcPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        EcPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, EcPoint::Infinity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            EcPoint::Infinity => None,
            EcPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&Rational> {
        match self {
            EcPoint::Infinity => None,
            EcPoint::Affine { y, .. } => Some(y),
        }
    }

    pub fn negate(&self) -> Self {
        match self {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => EcPoint::Affine { x: x.clone(), y: -y },
        }
    }
}

impl fmt::Display for EcPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcPoint::Infinity => f.write_str("O"),
            EcPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl Serialize for EcPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EcPoint::Infinity => serializer.serialize_str("infinity"),
            EcPoint::Affine { x, y } => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("x", x)?;
                map.serialize_entry("y", y)?;
                map.end()
            }
        }
    }
}

/// Rational roots of `x^3 + a x + b`.
///
/// With `L` the lcm of the denominators of `a` and `b`, the substitution
/// `X = L x` gives the monic integer cubic `X^3 + (a L^2) X + b L^3`, whose
/// rational roots are integers by the rational root theorem. Those are
/// located by exact binary search on the cubic's monotone pieces.
fn rational_roots_of_depressed_cubic(a: &Rational, b: &Rational) -> Vec<Rational> {
    let l = a.denom().lcm(b.denom());
    let p = (a * Rational::from(&l * &l)).numer().clone();
    let r = (b * Rational::from(&l * &l * &l)).numer().clone();
    integer_roots_monic_depressed(&p, &r)
        .into_iter()
        .map(|root| Rational::from_bigints(root, l.clone()).expect("lcm is nonzero"))
        .collect()
}

fn eval_monic(p: &BigInt, r: &BigInt, x: &BigInt) -> BigInt {
    x * x * x + p * x + r
}

/// Integer roots of `X^3 + p X + r`, without factoring.
fn integer_roots_monic_depressed(p: &BigInt, r: &BigInt) -> Vec<BigInt> {
    // Cauchy bound: every real root satisfies |X| <= 1 + max(|p|, |r|).
    let bound = BigInt::one() + p.abs().max(r.abs());
    let mut roots = Vec::new();
    let mut push = |x: Option<BigInt>| {
        if let Some(x) = x {
            if !roots.contains(&x) {
                roots.push(x);
            }
        }
    };
    if !p.is_negative() {
        push(monotone_root(p, r, -bound.clone(), bound, true));
    } else {
        // Decreasing exactly where 3X^2 + p <= 0, i.e. |X| <= s := isqrt(-p/3).
        let s: BigInt = (-p / BigInt::from(3)).sqrt();
        let s1: BigInt = &s + 1;
        push(monotone_root(p, r, -bound.clone(), -s1.clone(), true));
        push(monotone_root(p, r, -s.clone(), s.clone(), false));
        push(monotone_root(p, r, s1, bound, true));
    }
    roots
}

/// Integer root of the cubic on `[lo, hi]`, where it is monotone.
fn monotone_root(p: &BigInt, r: &BigInt, mut lo: BigInt, mut hi: BigInt, increasing: bool) -> Option<BigInt> {
    if lo > hi {
        return None;
    }
    while lo <= hi {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let v = eval_monic(p, r, &mid);
        let ord = if increasing { v.cmp(&BigInt::zero()) } else { BigInt::zero().cmp(&v) };
        match ord {
            Ordering::Equal => return Some(mid),
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid - 1,
        }
    }
    None
}
