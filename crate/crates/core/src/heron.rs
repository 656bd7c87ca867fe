//! Heron triangles `O Q P` with `Q = (q, 0)` and apex `P` on `y = m x + 1`.
//!
//! Such triangles are the classes of rational points `(X : R : S : 1)` on
//! the intersection of quadrics `C_{m,q}` in P^3:
//!
//! ```text
//! (1+m^2) x1^2 + 2m x1 x4 + x4^2              = x2^2
//! (1+m^2) x1^2 + 2(m-q) x1 x4 + (1+q^2) x4^2  = x3^2
//! ```
//!
//! `C_{m,q}` is isomorphic to the quartic `C'_{m,q}` (map `psi`) and then
//! to the Weierstrass curve `E_{m,q}` (map `phi`), which is where the group
//! law lives. The intercept `b` is normalized to 1 everywhere except
//! [`build_ij`]; scaling `q` by `1/b` gives an isomorphic curve.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::geometry::{make_triangle, Point2, Rejection, TriangleRecord};
use crate::weierstrass::{EcPoint, WeierstrassCurve};

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

/// The invariants `I_{m,b,q}` and `J_{m,b,q}` of the pencil of quadrics.
pub fn build_ij(m: &Rational, b: &Rational, q: &Rational) -> (Rational, Rational) {
    let m2 = m.square();
    let m2p1 = &m2 + 1;
    let i = (b.pow(4)
        + b.pow(3) * m * q * 2
        + (&m2 * 5 + 4) * b.square() * q.square()
        + m * b * &m2p1 * q.pow(3) * 4
        + m2p1.square() * q.pow(4))
        * 256;
    let j = (b.square() * 2 + b * m * q * 2 + &m2p1 * q.square())
        * (b.pow(4) + b.pow(3) * m * q * 2
            - b.square() * (&m2 * 7 + 8) * q.square()
            - b * m * &m2p1 * q.pow(3) * 8
            - m2p1.square() * q.pow(4) * 2)
        * 4096;
    (i, j)
}

/// `E_{m,q}`. Singular (but still returned) when `m q + 1 = 0`.
pub fn build_e(m: &Rational, q: &Rational) -> Result<WeierstrassCurve> {
    if q.is_zero() {
        return Err(Error::DegenerateParams("q = 0"));
    }
    let m2p1 = m.square() + 1;
    let mq = m * q;
    let a = -(m2p1.square() * q.pow(4) + &mq * &m2p1 * q.square() * 4 + (m.square() * 5 + 4) * q.square()
        + &mq * 2
        + 1)
        / 3;
    let b = (m2p1.square() * q.pow(4) * 2 + &mq * &m2p1 * q.square() * 8 + (m.square() * 7 + 8) * q.square()
        - &mq * 2
        - 1)
        * (&m2p1 * q.square() + &mq * 2 + 2)
        / 27;
    let curve = WeierstrassCurve::new(a, b);
    debug_assert!({
        let (i, j) = build_ij(m, &int(1), q);
        curve.scaled(&int(12)) == WeierstrassCurve::new(i * -27, j * -27)
    });
    Ok(curve)
}

/// Parameters `(m, q)` of a nonsingular member of the family (`b = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeronParams {
    m: Rational,
    q: Rational,
    #[serde(skip)]
    curve: WeierstrassCurve,
}

impl HeronParams {
    pub fn new(m: Rational, q: Rational) -> Result<Self> {
        let curve = build_e(&m, &q)?;
        if !curve.is_elliptic() {
            return Err(Error::SingularCurve);
        }
        Ok(HeronParams { m, q, curve })
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }

    /// `(m q + 1) / 2`, the leading coefficient of the quartic's square root.
    fn s(&self) -> Rational {
        (&self.m * &self.q + 1) / 2
    }

    fn require_nonzero_slope(&self) -> Result<()> {
        if self.m.is_zero() {
            Err(Error::ZeroSlope)
        } else {
            Ok(())
        }
    }

    /// `b(m, q) = m^2 q^2 + 2 m q + q^2 - 1`.
    fn b_poly(&self) -> Rational {
        let (m, q) = (&self.m, &self.q);
        m.square() * q.square() + m * q * 2 + q.square() - 1
    }

    fn a_poly(&self) -> Rational {
        let (m, q) = (&self.m, &self.q);
        let m2 = m.square();
        let m2p1 = &m2 + 1;
        q.pow(6) * m2p1.pow(3) + m * q.pow(5) * m2p1.square() * 6 + q.pow(4) * (&m2 * 3 - 1) * &m2p1 * 3
            - m * q.pow(3) * (&m2 + 3) * 4
            - q.square() * (&m2 * 3 + 8) * 3
            + m * q * 6
            - 1
    }

    /// The two points `(b(m,q)/3, +-q)` of `E` whose `phi`-preimages are
    /// special; index 0 is `+q`.
    pub fn exceptional_e_points(&self) -> [EcPoint; 2] {
        let x = self.b_poly() / 3;
        [EcPoint::affine(x.clone(), self.q.clone()), EcPoint::affine(x, -&self.q)]
    }

    /// The points `(1 : +-(mq+1)/2 : 0)` at infinity of `C'`; index 0 is `+`.
    pub fn points_at_infinity(&self) -> [CQuarticPoint; 2] {
        [
            CQuarticPoint::at_infinity(self.s()),
            CQuarticPoint::at_infinity(-self.s()),
        ]
    }

    pub fn c_on_curve(&self, p: &CPoint) -> bool {
        let (m, q) = (&self.m, &self.q);
        let [x1, x2, x3, x4] = &p.coords;
        let m2p1 = m.square() + 1;
        let lhs1 = &m2p1 * x1.square() + m * x1 * x4 * 2 + x4.square();
        let lhs2 = &m2p1 * x1.square() + (m - q) * x1 * x4 * 2 + (q.square() + 1) * x4.square();
        lhs1 == x2.square() && lhs2 == x3.square()
    }

    /// Right-hand side of the quartic, homogeneous in `(x, z)`.
    fn quartic(&self, x: &Rational, z: &Rational) -> Rational {
        let (m, q) = (&self.m, &self.q);
        let one_mq = m * q + 1;
        let lead = one_mq.square() / 4;
        let c2 = (int(1) - m.square() / 2) * q.square() - m * q + Rational::new(1, 2);
        &lead * x.pow(4) + q * &one_mq * x.pow(3) * z + c2 * x.square() * z.square()
            - q * &one_mq * x * z.pow(3)
            + lead * z.pow(4)
    }

    pub fn cprime_on_curve(&self, p: &CQuarticPoint) -> bool {
        p.y.square() == self.quartic(&p.x, &p.z)
    }

    /// `C_{m,q} -> C'_{m,q}`.
    pub fn psi(&self, p: &CPoint) -> Result<CQuarticPoint> {
        self.require_nonzero_slope()?;
        let [x1, x2, x3, x4] = &p.coords;
        let x = &self.m * x1 + x4;
        let z = x1 + x2;
        if x.is_zero() && z.is_zero() {
            // (-1/m : 1/m : +-(q + 1/m) : 1)
            let plus = x3 * &self.m == (&self.m * &self.q + 1) * x4;
            let s = if plus { self.s() } else { -self.s() };
            return Ok(CQuarticPoint::at_infinity(s));
        }
        let y = x3 * &z;
        Ok(CQuarticPoint::new(x, y, z).expect("x and z not both zero"))
    }

    /// `C'_{m,q} -> C_{m,q}`; the result is scaled to `x4 = 1` when possible.
    pub fn psi_inv(&self, p: &CQuarticPoint) -> Result<CPoint> {
        self.require_nonzero_slope()?;
        let m = &self.m;
        if p.z.is_zero() {
            let inv_m = int(1) / m;
            let x3 = &self.q + &inv_m;
            let x3 = if p.y == self.s() {
                x3
            } else if p.y == -self.s() {
                -x3
            } else {
                return Err(Error::NotOnCurve);
            };
            return Ok(CPoint::new(-&inv_m, inv_m, x3, int(1)));
        }
        let (x, y) = (&p.x, &p.y);
        let x1 = (int(1) - x.square()) / 2;
        let x2 = (x.square() + 1) / 2;
        let x4 = (m * (x.square() - 1) + x * 2) / 2;
        Ok(CPoint::new(x1, x2, y.clone(), x4).normalized())
    }

    /// `C'_{m,q} -> E_{m,q}`.
    pub fn phi(&self, p: &CQuarticPoint) -> Result<EcPoint> {
        if p.z.is_zero() {
            return if p.y == self.s() {
                Ok(EcPoint::Infinity)
            } else if p.y == -self.s() {
                Ok(self.exceptional_e_points()[0].clone())
            } else {
                Err(Error::NotOnCurve)
            };
        }
        let (m, q) = (&self.m, &self.q);
        let (x, y) = (&p.x, &p.y);
        let mq = m * q;
        let one_mq = &mq + 1;
        let big_x = y * &one_mq + one_mq.square() / 2 * x.square() + q * &one_mq * x
            + (int(1) - &mq * 2 + q.square() * 2 - mq.square()) / 6;
        let big_y = &one_mq / 2
            * (q * y * 2 + &one_mq * x * y * 2 + one_mq.square() * x.pow(3) + q * &one_mq * x.square() * 3
                + x * (int(1) - mq.square() + q.square() * 2 - &mq * 2)
                - q * &one_mq);
        Ok(EcPoint::affine(big_x, big_y))
    }

    /// `E_{m,q} -> C'_{m,q}`.
    pub fn phi_inv(&self, p: &EcPoint) -> Result<CQuarticPoint> {
        let (big_x, big_y) = match p {
            EcPoint::Infinity => return Ok(CQuarticPoint::at_infinity(self.s())),
            EcPoint::Affine { x, y } => (x, y),
        };
        let (m, q) = (&self.m, &self.q);
        let one_mq = m * q + 1;
        let b = self.b_poly();
        let gap = &b - big_x * 3;
        if gap.is_zero() {
            if big_y == q {
                return Ok(CQuarticPoint::at_infinity(-self.s()));
            }
            if big_y == &-q {
                let x = m * (m * q + 2) / (&one_mq * 2);
                let y = -(m.pow(4) * q.square() + m.pow(3) * q * 4 + m.square() * 4 + 4) / (&one_mq * 8);
                return Ok(CQuarticPoint::affine(x, y));
            }
        }
        let denom = &one_mq * &gap;
        if denom.is_zero() {
            return Err(Error::ExceptionalDenominator("phi inverse"));
        }
        let x = -(big_y * 3 + (int(2) - big_x * 3) * q + m * q.square() * 2 + (m.square() + 1) * q.pow(3)) / &denom;
        let y = (big_x.pow(3) * 54 - &b * big_x.square() * 27 - big_y.square() * 27 - q * big_y * 54 + self.a_poly())
            / (&one_mq * gap.square() * 6);
        Ok(CQuarticPoint::affine(x, y))
    }

    pub fn c_to_e(&self, p: &CPoint) -> Result<EcPoint> {
        self.phi(&self.psi(p)?)
    }

    /// The C-point over `P`, scaled to `x4 = 1` but with signs untouched, so
    /// that `c_to_e(e_to_c(P)) = P`.
    pub fn e_to_c(&self, p: &EcPoint) -> Result<CPoint> {
        self.psi_inv(&self.phi_inv(p)?)
    }

    /// The triangle `O, (q, 0), (X, mX + 1)` for the class of `p`.
    pub fn triangle_from_cpoint(&self, p: &CPoint) -> Result<TriangleRecord> {
        if !self.c_on_curve(p) {
            return Err(Error::NotOnCurve);
        }
        let c = canonicalize_class(p)?;
        let [x, r, s, _] = &c.coords;
        let apex = Point2::new(x.clone(), &self.m * x + 1);
        let tri = make_triangle(Point2::origin(), Point2::new(self.q.clone(), int(0)), apex).map_err(|e| match e {
            Rejection::Degenerate => Error::DegenerateTriangle,
            Rejection::NotRational => unreachable!("curve points have rational sides"),
        })?;
        assert_eq!(&tri.sides()[1], s);
        assert_eq!(&tri.sides()[2], r);
        let record = TriangleRecord::new(tri);
        assert_eq!(record.area(), &((&self.q * (&self.m * x + 1)).abs() / 2));
        Ok(record)
    }

    /// The class `(X : R : S : 1)` of a triangle `O, (q, 0), P` with `P` on
    /// `y = m x + 1`, with `X` recovered from the side lengths alone.
    pub fn cpoint_from_triangle(&self, record: &TriangleRecord) -> Result<CPoint> {
        let tri = record.triangle();
        let [o, qv, apex] = tri.vertices();
        if o != &Point2::origin() || qv != &Point2::new(self.q.clone(), int(0)) {
            return Err(Error::Precondition("triangle must have vertices O and (q, 0) first"));
        }
        if apex.y != &self.m * &apex.x + 1 {
            return Err(Error::Precondition("apex must lie on y = m x + 1"));
        }
        let s = tri.sides()[1].clone();
        let r = tri.sides()[2].clone();
        let x = (self.q.square() + r.square() - s.square()) / (&self.q * 2);
        assert_eq!(x, apex.x);
        Ok(CPoint::new(x, r, s, int(1)))
    }

    /// Abscissa `((m^2+1) q^2 + 2 m q + 2) / 3` of the rational 2-torsion
    /// point of `E`.
    pub fn two_torsion_x(&self) -> Rational {
        let (m, q) = (&self.m, &self.q);
        let x = ((m.square() + 1) * q.square() + m * q * 2 + 2) / 3;
        debug_assert!(self.curve.rhs(&x).is_zero());
        x
    }

    /// The canonical C-point of the 2-torsion point, `(-1/m : 1/m : |q + 1/m| : 1)`.
    pub fn two_torsion_cpoint(&self) -> Result<CPoint> {
        self.require_nonzero_slope()?;
        let inv_m = int(1) / &self.m;
        let p = CPoint::new(-&inv_m, -&inv_m, -(&self.q + &inv_m), int(1));
        canonicalize_class(&p)
    }

    /// `P_{m,q} = (-((2m^2-1) q^2 + 4 m q + 1)/3, q (m q + 1)^2)` and its
    /// order, if finite.
    pub fn rank_witness_p(&self) -> Result<Witness> {
        let (m, q) = (&self.m, &self.q);
        let x = -((m.square() * 2 - 1) * q.square() + m * q * 4 + 1) / 3;
        let y = q * (m * q + 1).square();
        let point = EcPoint::affine(x, y);
        assert!(self.curve.contains(&point), "P_(m,q) must lie on E_(m,q)");
        let order = self.curve.torsion_order(&point)?;
        Ok(Witness { point, order })
    }
}

impl fmt::Display for HeronParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m, q) = ({}, {})", self.m, self.q)
    }
}

/// A point of `C_{m,q}` in P^3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CPoint {
    pub coords: [Rational; 4],
}

impl CPoint {
    pub fn new(x1: Rational, x2: Rational, x3: Rational, x4: Rational) -> Self {
        CPoint {
            coords: [x1, x2, x3, x4],
        }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        CPoint { coords: c.map(int) }
    }

    /// Scaled so that `x4 = 1`; unchanged if `x4 = 0`.
    pub fn normalized(&self) -> Self {
        let x4 = &self.coords[3];
        if x4.is_zero() || x4 == &int(1) {
            return self.clone();
        }
        CPoint {
            coords: self.coords.clone().map(|c| c / x4),
        }
    }

    /// Projective equality.
    pub fn same_point(&self, other: &CPoint) -> bool {
        (0..4).all(|i| (0..4).all(|j| &self.coords[i] * &other.coords[j] == &self.coords[j] * &other.coords[i]))
    }
}

impl fmt::Display for CPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coords;
        write!(f, "({a} : {b} : {c} : {d})")
    }
}

/// The class representative `(x1/x4 : |x2/x4| : |x3/x4| : 1)`.
pub fn canonicalize_class(p: &CPoint) -> Result<CPoint> {
    let x4 = &p.coords[3];
    if x4.is_zero() {
        return Err(Error::InfinitePoint);
    }
    let [x1, x2, x3, _] = &p.coords;
    Ok(CPoint::new(x1 / x4, (x2 / x4).abs(), (x3 / x4).abs(), int(1)))
}

/// A point of the quartic `C'_{m,q}` in weighted projective space with
/// weights (1, 2, 1), stored normalized: `z = 1`, or `z = 0` with `x = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CQuarticPoint {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl CQuarticPoint {
    /// `None` when `x = z = 0`.
    pub fn new(x: Rational, y: Rational, z: Rational) -> Option<Self> {
        if !z.is_zero() {
            let y = y / z.square();
            let x = x / &z;
            Some(CQuarticPoint { x, y, z: int(1) })
        } else if !x.is_zero() {
            let y = y / x.square();
            Some(CQuarticPoint { x: int(1), y, z: int(0) })
        } else {
            None
        }
    }

    pub fn affine(x: Rational, y: Rational) -> Self {
        CQuarticPoint { x, y, z: int(1) }
    }

    pub fn at_infinity(y: Rational) -> Self {
        CQuarticPoint { x: int(1), y, z: int(0) }
    }
}

impl fmt::Display for CQuarticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub point: EcPoint,
    /// `None` when certified of infinite order.
    pub order: Option<u32>,
}

/// `(1 + m^2)((1 + m^2) q^2 + 4 m q + 4)`, a square iff `E_{m,q}` has full
/// rational 2-torsion.
pub fn full_two_torsion_square(m: &Rational, q: &Rational) -> Rational {
    let m2p1 = m.square() + 1;
    &m2p1 * (&m2p1 * q.square() + m * q * 4 + 4)
}

pub fn has_full_two_torsion(m: &Rational, q: &Rational) -> bool {
    full_two_torsion_square(m, q).is_square()
}

/// `q(n)` from the rational parametrization of the full-2-torsion conic.
pub fn full_two_torsion_q(m: &Rational, n: &Rational) -> Result<Rational> {
    let m2 = m.square();
    let denom = m * (int(1) + &m2 * (&m2 + 2) - n.square());
    if denom.is_zero() {
        return Err(Error::DenominatorZero("m (1 + m^2 (2 + m^2) - n^2)"));
    }
    let numer = int(1) - &m2 * (&m2 * 3 + 2) + (&m2 + 1) * n * 2 + n.square();
    Ok(numer / denom)
}

/// `q = 4(2t - m)/(1 + m^2 - 4t^2)` and the point of order 4 on `E_{m,q}`.
pub fn order4_point(m: &Rational, t: &Rational) -> Result<(Rational, EcPoint)> {
    let m2 = m.square();
    let t2 = t.square();
    let d = &m2 + 1 - &t2 * 4;
    if d.is_zero() {
        return Err(Error::DenominatorZero("1 + m^2 - 4 t^2"));
    }
    let q = (t * 2 - m) * 4 / &d;
    if q.is_zero() {
        return Err(Error::DegenerateParams("q = 0"));
    }
    let params = HeronParams::new(m.clone(), q.clone())?;
    let x = (m.pow(4) - m.pow(3) * t * 24 + (&t2 * 104 + 6) * &m2 - m * t * (&t2 * 160 + 24)
        + t.pow(4) * 80
        + &t2 * 24
        + 5)
        / (d.square() * 3);
    let y = -((&m2 * 3 - m * t * 8 + &t2 * 4 - 1) * (&m2 - m * t * 4 + &t2 * 4 + 1) * 2) / d.square();
    let p = EcPoint::affine(x, y);
    let curve = params.curve();
    assert_eq!(curve.torsion_order(&p)?, Some(4), "order-4 construction failed");
    assert!(curve.double(&p)?.y().is_some_and(Rational::is_zero));
    Ok((q, p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParametricWitness {
    pub q: Rational,
    pub point: EcPoint,
    pub cpoint: CPoint,
    pub order: Option<u32>,
}

/// `q(h) = (1 - h^2)/(2h)` and the second rank witness `Q_{m,q}`, with its
/// C-point `(0 : 1 : (1 + h^2)/(2h) : 1)`.
pub fn rank_witness_q(m: &Rational, h: &Rational) -> Result<ParametricWitness> {
    if h.is_zero() || h.abs() == int(1) {
        return Err(Error::DegenerateParams("h must avoid 0 and +-1"));
    }
    let q = (int(1) - h.square()) / (h * 2);
    let params = HeronParams::new(m.clone(), q.clone())?;
    let m2 = m.square();
    let x = (h.pow(4) * (&m2 + 1) - h.pow(3) * m * 4 - h.square() * (&m2 + m * 3 - 3) * 2 + h * (m + 3) * 4
        + &m2
        + m * 6
        + 1)
        / (h.square() * 12);
    let y = (m * h.square() - h * 2 - m) * (h + 1) * (h * m - m - h - 1) / (h.pow(3) * 4);
    let point = EcPoint::affine(x, y);
    assert!(params.curve().contains(&point), "Q_(m,q) must lie on E_(m,q)");
    let cpoint = CPoint::new(int(0), int(1), (h.square() + 1) / (h * 2), int(1));
    assert!(params.c_on_curve(&cpoint));
    let order = params.curve().torsion_order(&point)?;
    Ok(ParametricWitness { q, point, cpoint, order })
}

/// `A(h) = |(1 - h^2)/(4h)|`, the area of the right triangle over `Q_{m,q}`.
pub fn congruent_number_a(h: &Rational) -> Result<Rational> {
    if h.is_zero() {
        return Err(Error::DegenerateParams("h = 0"));
    }
    Ok(((int(1) - h.square()) / (h * 4)).abs())
}

/// `q(u, m) = 2(u - m)/(1 + m^2 - u^2)` and the witness `H_{m,q}`, with its
/// C-point and the area of its right triangle.
pub fn rank_witness_h(m: &Rational, u: &Rational) -> Result<(ParametricWitness, Rational)> {
    let m2 = m.square();
    let u2 = u.square();
    let d = &m2 + 1 - &u2;
    if d.is_zero() {
        return Err(Error::DenominatorZero("1 + m^2 - u^2"));
    }
    if u == m {
        return Err(Error::DegenerateParams("u = m gives q = 0"));
    }
    let q = (u - m) * 2 / &d;
    let params = HeronParams::new(m.clone(), q.clone())?;
    let x = (m.pow(4) * 5 + (int(6) - u * 10) * m.pow(3) + (&u2 * 4 - u * 6 + 10) * &m2
        + (u.pow(3) - &u2 * 3 - u * 5 + 3) * m * 2
        - u.pow(4)
        + u.pow(3) * 6
        - u * 6
        + 5)
        / (d.square() * 3);
    let y = (m - u + 1).square() * (&m2 - u * m + 1) * 2 / d.square();
    let point = EcPoint::affine(x, y);
    assert!(params.curve().contains(&point), "H_(m,q) must lie on E_(m,q)");
    let cpoint = CPoint::new(
        q.clone(),
        (&m2 - m * u * 2 + &u2 + 1) / &d,
        -((m - 1 - u) * (m + 1 - u)) / &d,
        int(1),
    );
    assert!(params.c_on_curve(&cpoint));
    let [_, r, s, _] = &cpoint.coords;
    assert_eq!(q.square() + s.square(), r.square(), "H triangle must be right-angled at Q");
    let area = ((m - u) * (m - u - 1) * (m - u + 1) / d.square()).abs();
    assert_eq!(area, (&q * s).abs() / 2);
    let order = params.curve().torsion_order(&point)?;
    Ok((ParametricWitness { q, point, cpoint, order }, area))
}

pub fn congruent_number_h(m: &Rational, u: &Rational) -> Result<Rational> {
    rank_witness_h(m, u).map(|(_, area)| area)
}

pub fn cpoint_h(m: &Rational, u: &Rational) -> Result<CPoint> {
    rank_witness_h(m, u).map(|(w, _)| w.cpoint)
}

/// Distinct non-degenerate triangles from the multiples `k P_{m,q}`,
/// `k = 1, 2, ...`, in order of `k`.
///
/// If `P_{m,q}` is torsion only finitely many classes exist; when fewer
/// than `count` are found the partial list is returned inside
/// [`Error::WitnessTorsionExhausted`].
pub fn generate_heron_triangles(params: &HeronParams, count: usize) -> Result<Vec<TriangleRecord>> {
    params.require_nonzero_slope()?;
    if count == 0 {
        return Err(Error::Precondition("count must be at least 1"));
    }
    let curve = params.curve();
    let witness = params.rank_witness_p()?;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut multiple = EcPoint::Infinity;
    let mut k: u32 = 0;
    while out.len() < count {
        k += 1;
        if witness.order.is_some_and(|n| k >= n) {
            return Err(Error::WitnessTorsionExhausted { partial: out });
        }
        multiple = curve.add(&multiple, &witness.point)?;
        let cpoint = match params.e_to_c(&multiple) {
            Ok(c) => c,
            Err(Error::ExceptionalDenominator(_)) => continue,
            Err(e) => return Err(e),
        };
        let class = match canonicalize_class(&cpoint) {
            Ok(c) => c,
            Err(Error::InfinitePoint) => continue,
            Err(e) => return Err(e),
        };
        if !seen.insert(class.clone()) {
            continue;
        }
        match params.triangle_from_cpoint(&class) {
            Ok(rec) => out.push(rec),
            Err(Error::DegenerateTriangle) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
