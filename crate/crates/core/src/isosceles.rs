//! Rational isosceles triangles `O P1 P` with a fixed rational base `O P1`
//! and rational apex `P`.
//!
//! The apex lies on the perpendicular bisector `L` of `O P1`. Writing its
//! offset from the midpoint as `(Y1/2) * delta` along `x`, rationality of
//! `|OP|` reduces to the conic `4R^2/(X1^2+Y1^2) - 1 = delta^2`, which has
//! the rational point `(R, delta) = ((X1^2+Y1^2)/(2Y1), X1/Y1)` and so a
//! one-parameter family of solutions indexed by `t`.

use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rationals_up_to_height, Rational};
use crate::geometry::{make_triangle, squared_distance, Point2, TriangleRecord};

/// The fixed base endpoint `P1 = (X1, Y1)` at rational distance from `O`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseConfig {
    x1: Rational,
    y1: Rational,
    base_length: Rational,
}

impl BaseConfig {
    pub fn new(x1: Rational, y1: Rational) -> Result<Self> {
        if x1.is_zero() && y1.is_zero() {
            return Err(Error::InvalidBase("P1 coincides with the origin"));
        }
        let base_length = (x1.square() + y1.square())
            .sqrt()
            .ok_or(Error::InvalidBase("|O P1| is irrational"))?;
        Ok(BaseConfig {
            x1,
            y1,
            base_length,
        })
    }

    pub fn x1(&self) -> &Rational {
        &self.x1
    }

    pub fn y1(&self) -> &Rational {
        &self.y1
    }

    pub fn base_length(&self) -> &Rational {
        &self.base_length
    }

    pub fn p1(&self) -> Point2 {
        Point2::new(self.x1.clone(), self.y1.clone())
    }

    /// `X1^2 + Y1^2`.
    pub fn norm(&self) -> Rational {
        self.x1.square() + self.y1.square()
    }

    fn swapped(&self) -> Self {
        BaseConfig {
            x1: self.y1.clone(),
            y1: self.x1.clone(),
            base_length: self.base_length.clone(),
        }
    }

    /// `2 X1 x + 2 Y1 y = X1^2 + Y1^2`.
    pub fn on_bisector(&self, p: &Point2) -> bool {
        (&self.x1 * &p.x + &self.y1 * &p.y) * 2 == self.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }

    pub fn both() -> [Branch; 2] {
        [Branch::Plus, Branch::Minus]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoscelesSolution {
    pub apex: Point2,
    pub leg: Rational,
    pub t: Rational,
    pub branch: Branch,
}

impl IsoscelesSolution {
    pub fn record(&self, cfg: &BaseConfig) -> TriangleRecord {
        let tri = make_triangle(Point2::origin(), cfg.p1(), self.apex.clone())
            .expect("isosceles solutions are certified rational triangles");
        TriangleRecord::new(tri)
    }
}

/// The apex for parameter `t` on the given branch.
///
/// `Ok(None)` when the apex would be the midpoint of `O P1` (leg equal to
/// half the base), which happens exactly when `delta(t) = 0`.
pub fn isosceles_from_parameter(
    cfg: &BaseConfig,
    t: &Rational,
    branch: Branch,
) -> Result<Option<IsoscelesSolution>> {
    if cfg.y1.is_zero() {
        // L is vertical; solve in the reflected frame and reflect back.
        let solved = solve_nonzero_y1(&cfg.swapped(), t, branch)?;
        return Ok(solved.map(|s| IsoscelesSolution {
            apex: s.apex.swapped(),
            ..s
        }));
    }
    solve_nonzero_y1(cfg, t, branch)
}

fn solve_nonzero_y1(cfg: &BaseConfig, t: &Rational, branch: Branch) -> Result<Option<IsoscelesSolution>> {
    let (x1, y1) = (&cfg.x1, &cfg.y1);
    let n = cfg.norm();
    let d = t.square() * &n - 4;
    if d.is_zero() {
        return Err(Error::DenominatorZero("t^2 (X1^2 + Y1^2) = 4"));
    }
    // delta = (t^2 X1 n - 4 t n + 4 X1) / (Y1 (4 - t^2 n))
    let delta_num = t.square() * x1 * &n - t * &n * 4 + x1 * 4;
    let delta = -(delta_num / (y1 * &d));
    if delta.is_zero() {
        return Ok(None);
    }
    let x = x1 / 2 + &delta * y1 / 2 * branch.sign();
    let y = (&n - x1 * &x * 2) / (y1 * 2);
    let leg = (((t * &n - x1 * 2).square() + y1.square() * 4) / (y1 * &d * 2)).abs();
    let apex = Point2::new(x, y);
    debug_assert_eq!(squared_distance(&Point2::origin(), &apex), leg.square());
    if leg.square() * 4 <= n {
        return Ok(None);
    }
    Ok(Some(IsoscelesSolution {
        apex,
        leg,
        t: t.clone(),
        branch,
    }))
}

/// All apexes from parameters of naive height `<= height_bound` on both
/// branches, deduplicated by apex and sorted by (height of leg, apex x,
/// apex y).
pub fn enumerate_isosceles(cfg: &BaseConfig, height_bound: u64) -> Vec<IsoscelesSolution> {
    enumerate_isosceles_with_jobs(cfg, height_bound, 1)
}

pub fn enumerate_isosceles_with_jobs(cfg: &BaseConfig, height_bound: u64, jobs: usize) -> Vec<IsoscelesSolution> {
    let params = rationals_up_to_height(height_bound);
    let solve_chunk = |chunk: &[Rational]| -> Vec<IsoscelesSolution> {
        chunk
            .iter()
            .flat_map(|t| Branch::both().map(|b| isosceles_from_parameter(cfg, t, b)))
            .filter_map(|r| r.ok().flatten())
            .collect()
    };
    let jobs = jobs.max(1);
    let mut found: Vec<IsoscelesSolution> = if jobs == 1 || params.len() < 2 * jobs {
        solve_chunk(&params)
    } else {
        let chunk = params.len().div_ceil(jobs);
        thread::scope(|s| {
            let handles: Vec<_> = params.chunks(chunk).map(|c| s.spawn(move || solve_chunk(c))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    // Keep the first parameter (in enumeration order) that reaches each apex.
    found.sort_by(|a, b| a.apex.cmp(&b.apex));
    found.dedup_by(|a, b| a.apex == b.apex);
    found.sort_by(|a, b| {
        (a.leg.naive_height(), &a.apex.x, &a.apex.y).cmp(&(b.leg.naive_height(), &b.apex.x, &b.apex.y))
    });
    found
}

/// The nodal cubic `y^2 = c x (x + 1)^2` with `c = -16 (X1^2 + Y1^2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularCubic {
    pub coefficient: Rational,
}

impl SingularCubic {
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        y.square() == &self.coefficient * x * (x + 1).square()
    }

    pub fn node(&self) -> (Rational, Rational) {
        (Rational::integer(-1), Rational::zero())
    }
}

pub fn singular_cubic(cfg: &BaseConfig) -> SingularCubic {
    SingularCubic {
        coefficient: cfg.norm() * -16,
    }
}
