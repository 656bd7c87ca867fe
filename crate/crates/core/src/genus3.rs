//! Triangles with base `O (q, 0)` and apex on the parabola `x = y^2`.
//!
//! These are the rational points of the genus-3 curve `C_q` in P^4:
//!
//! ```text
//! x1^2 + x2^2          = x3^2
//! (x1 - q x5)^2 + x2^2 = x4^2
//! x2^2                 = x1 x5
//! ```
//!
//! with apex `(x1/x5, x2/x5)` and distances `R = x3/x5`, `S = x4/x5`.

use std::fmt;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{positive_rationals_up_to_height, Rational};
use crate::geometry::{make_triangle, Point2, Rejection, TriangleRecord};

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusThreeParams {
    q: Rational,
}

impl GenusThreeParams {
    pub fn new(q: Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DegenerateParams("q = 0"));
        }
        Ok(GenusThreeParams { q })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }
}

/// A point of `C_q` in P^4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CqPoint {
    pub coords: [Rational; 5],
}

impl CqPoint {
    pub fn new(coords: [Rational; 5]) -> Self {
        CqPoint { coords }
    }

    /// Scaled to `x5 = 1` with `x3, x4 >= 0`.
    pub fn canonical(&self) -> Result<CqPoint> {
        let x5 = &self.coords[4];
        if x5.is_zero() {
            return Err(Error::InfinitePoint);
        }
        let [x1, x2, x3, x4, _] = &self.coords;
        Ok(CqPoint::new([x1 / x5, x2 / x5, (x3 / x5).abs(), (x4 / x5).abs(), int(1)]))
    }
}

impl fmt::Display for CqPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = &self.coords;
        write!(f, "({a} : {b} : {c} : {d} : {e})")
    }
}

pub fn cq_on_curve(params: &GenusThreeParams, p: &CqPoint) -> bool {
    let [x1, x2, x3, x4, x5] = &p.coords;
    let x2sq = x2.square();
    x1.square() + &x2sq == x3.square()
        && (x1 - &params.q * x5).square() + &x2sq == x4.square()
        && x2sq == x1 * x5
}

/// The two ordinary double points `(0 : 0 : 0 : +-q : 1)`. Both give a
/// degenerate triangle.
pub fn singular_points(params: &GenusThreeParams) -> [CqPoint; 2] {
    let q = &params.q;
    [
        CqPoint::new([int(0), int(0), int(0), q.clone(), int(1)]),
        CqPoint::new([int(0), int(0), int(0), -q, int(1)]),
    ]
}

fn check_u(u: &Rational) -> Result<()> {
    if u.is_zero() || u.abs() == int(1) {
        Err(Error::DegenerateParams("u must avoid 0 and +-1"))
    } else {
        Ok(())
    }
}

/// `q = (u^2+1)^2/(8u^2)` and a point giving an isosceles triangle with `S = q`.
pub fn isosceles_point(u: &Rational) -> Result<(Rational, CqPoint)> {
    check_u(u)?;
    let u2 = u.square();
    let q = (&u2 + 1).square() / (&u2 * 8);
    let p = CqPoint::new([
        (&u2 - 1).square() / (&u2 * 4),
        (&u2 - 1) / (u * 2),
        (u.pow(4) - 1) / (&u2 * 4),
        q.clone(),
        int(1),
    ]);
    let params = GenusThreeParams::new(q.clone())?;
    assert!(cq_on_curve(&params, &p));
    let rec = triangle_from_cqpoint(&params, &p)?;
    assert!(rec.triangle().is_isosceles());
    Ok((q, p))
}

/// `q = (u^2-1)^2/(4u^2)` and a point giving a triangle right-angled at `(q, 0)`.
pub fn right_point(u: &Rational) -> Result<(Rational, CqPoint)> {
    check_u(u)?;
    let u2 = u.square();
    let q = (&u2 - 1).square() / (&u2 * 4);
    let leg = (&u2 - 1) / (u * 2);
    let p = CqPoint::new([q.clone(), leg.clone(), (u.pow(4) - 1) / (&u2 * 4), leg, int(1)]);
    let params = GenusThreeParams::new(q.clone())?;
    assert!(cq_on_curve(&params, &p));
    let [_, _, r, s, _] = &p.coords;
    assert_eq!(q.square() + s.square(), r.square());
    Ok((q, p))
}

/// `(u^2-1)^3/(16u^3)`, the area `q S / 2` of the right triangle from
/// [`right_point`].
pub fn congruent_number_genus3(u: &Rational) -> Result<Rational> {
    let (q, p) = right_point(u)?;
    let n = (u.square() - 1).pow(3) / (u.pow(3) * 16);
    assert_eq!(n, &q * &p.coords[3] / 2);
    Ok(n)
}

/// The triangle `O, (q, 0), (x1/x5, x2/x5)`.
pub fn triangle_from_cqpoint(params: &GenusThreeParams, p: &CqPoint) -> Result<TriangleRecord> {
    if !cq_on_curve(params, p) {
        return Err(Error::NotOnCurve);
    }
    let c = p.canonical()?;
    let [x, y, r, s, _] = &c.coords;
    assert_eq!(x, &y.square(), "apex must lie on x = y^2");
    let apex = Point2::new(x.clone(), y.clone());
    let tri = make_triangle(Point2::origin(), Point2::new(params.q.clone(), int(0)), apex).map_err(|e| match e {
        Rejection::Degenerate => Error::DegenerateTriangle,
        Rejection::NotRational => unreachable!("curve points have rational sides"),
    })?;
    assert_eq!(&tri.sides()[1], s);
    assert_eq!(&tri.sides()[2], r);
    Ok(TriangleRecord::new(tri))
}

/// The canonical point of `C_q` for a triangle `O, (q, 0), (Y^2, Y)`.
pub fn cqpoint_from_triangle(params: &GenusThreeParams, record: &TriangleRecord) -> Result<CqPoint> {
    let tri = record.triangle();
    let [o, qv, apex] = tri.vertices();
    if o != &Point2::origin() || qv != &Point2::new(params.q.clone(), int(0)) {
        return Err(Error::Precondition("triangle must have vertices O and (q, 0) first"));
    }
    if apex.x != apex.y.square() {
        return Err(Error::Precondition("apex must lie on x = y^2"));
    }
    Ok(CqPoint::new([
        apex.x.clone(),
        apex.y.clone(),
        tri.sides()[2].clone(),
        tri.sides()[1].clone(),
        int(1),
    ]))
}

fn point_for(q: &Rational, y: &Rational) -> Option<CqPoint> {
    let x = y.square();
    let r = (x.square() + &x).sqrt()?;
    let s = ((&x - q).square() + &x).sqrt()?;
    Some(CqPoint::new([x, y.clone(), r, s, int(1)]))
}

/// Canonical points with apex `(Y^2, Y)`, `0 < Y`, `H(Y) <= height_bound`.
///
/// `Y` and `-Y` give mirror-image triangles, so only `Y > 0` is reported.
/// Sorted by the height of `Y`, then by `Y`.
pub fn search_points(params: &GenusThreeParams, height_bound: u64) -> Vec<CqPoint> {
    search_points_with_jobs(params, height_bound, 1)
}

pub fn search_points_with_jobs(params: &GenusThreeParams, height_bound: u64, jobs: usize) -> Vec<CqPoint> {
    let candidates = positive_rationals_up_to_height(height_bound);
    let jobs = jobs.max(1);
    let chunk = candidates.len().div_ceil(jobs).max(1);
    let mut hits: Vec<CqPoint> = thread::scope(|scope| {
        let handles: Vec<_> = candidates
            .chunks(chunk)
            .map(|ys| scope.spawn(|| ys.iter().filter_map(|y| point_for(&params.q, y)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("search worker panicked")).collect()
    });
    hits.sort_by(|a, b| {
        let (ya, yb) = (&a.coords[1], &b.coords[1]);
        ya.naive_height().cmp(&yb.naive_height()).then_with(|| ya.cmp(yb))
    });
    debug_assert!(hits.iter().all(|p| cq_on_curve(params, p)));
    hits
}
