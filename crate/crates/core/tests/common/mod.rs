#![allow(dead_code)]

use heron_curves::exact::rat;
use heron_curves::heron::HeronParams;
use heron_curves::{EcPoint, Rational};
use proptest::prelude::*;

pub fn int(n: i64) -> Rational {
    Rational::integer(n)
}

/// Rationals `n/d` with `|n| <= bound` and `1 <= d <= bound`.
pub fn small_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational(bound: i64) -> impl Strategy<Value = Rational> {
    small_rational(bound).prop_filter("nonzero", |r| !r.is_zero())
}

/// Points `(X1, Y1)` with `X1^2 + Y1^2` a rational square.
pub fn pythagorean_point() -> impl Strategy<Value = (Rational, Rational)> {
    (1i64..8, 0i64..8, 1i64..6, 1i64..6, 0u8..8).prop_filter_map("nonzero", |(a, b, k, d, sym)| {
        if a == b {
            return None;
        }
        let x = rat(k * (a * a - b * b), d);
        let y = rat(k * 2 * a * b, d);
        let (x, y) = if sym & 1 == 1 { (y, x) } else { (x, y) };
        let x = if sym & 2 == 2 { -x } else { x };
        let y = if sym & 4 == 4 { -y } else { y };
        Some((x, y))
    })
}

/// Nonsingular `(m, q)` with `m != 0`.
pub fn heron_params(bound: i64) -> impl Strategy<Value = HeronParams> {
    (nonzero_rational(bound), nonzero_rational(bound))
        .prop_filter_map("nonsingular", |(m, q)| HeronParams::new(m, q).ok())
}

/// A point `k P + e T` on `E_{m,q}`, with `P` the first witness and `T` the
/// rational 2-torsion point.
pub fn curve_point(params: &HeronParams, k: i64, with_torsion: bool) -> EcPoint {
    let curve = params.curve();
    let p = curve.scalar_mul(k, &params.rank_witness_p().unwrap().point).unwrap();
    if with_torsion {
        let t = EcPoint::affine(params.two_torsion_x(), int(0));
        curve.add(&p, &t).unwrap()
    } else {
        p
    }
}
