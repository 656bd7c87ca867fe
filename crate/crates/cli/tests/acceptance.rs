//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use heron_curves::exact::rat;
use heron_curves::genus3::{cq_on_curve, isosceles_point, right_point, search_points, CqPoint, GenusThreeParams};
use heron_curves::geometry::{squared_distance, Point2};
use heron_curves::heron::{
    build_e, full_two_torsion_q, full_two_torsion_square, order4_point, rank_witness_h, rank_witness_q,
    CPoint, HeronParams,
};
use heron_curves::isosceles::{isosceles_from_parameter, BaseConfig, Branch};
use heron_curves::weierstrass::MAZUR_BOUND;
use heron_curves::{EcPoint, Rational, WeierstrassCurve};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

const SEED: u64 = 0x4845_524f_4e;

type Outcome = Result<String, String>;

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn random_rational(rng: &mut StdRng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("heron-curves").chain(args.iter().copied());
    let code = heron_curves_cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn worked_example() -> Outcome {
    let cfg = BaseConfig::new(int(3), int(4)).map_err(|e| e.to_string())?;
    let sol = isosceles_from_parameter(&cfg, &rat(1, 2), Branch::Minus)
        .map_err(|e| e.to_string())?
        .ok_or("no solution")?;
    ensure(sol.apex == Point2::new(rat(-25, 9), rat(125, 24)), format!("apex {}", sol.apex))?;
    ensure(sol.leg == rat(425, 72), format!("leg {}", sol.leg))?;
    let (code, out, _) = cli(&["isosceles", "--p1", "3,4", "--t", "0.5", "--branch", "-"], "");
    ensure(code == 0, "CLI failed")?;
    let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let s = &v["solutions"][0];
    ensure(s["apex"]["x"] == "-25/9" && s["apex"]["y"] == "125/24" && s["leg"] == "425/72", "CLI output differs")?;
    Ok("apex (-25/9, 125/24), leg 425/72".into())
}

fn pythagorean(rng: &mut StdRng) -> (Rational, Rational) {
    loop {
        let (a, b) = (rng.gen_range(1i64..12), rng.gen_range(0i64..12));
        if a == b {
            continue;
        }
        let k = rat(rng.gen_range(1..6), rng.gen_range(1..6));
        let (mut x, mut y) = (&k * (a * a - b * b), &k * (2 * a * b));
        if rng.gen() {
            std::mem::swap(&mut x, &mut y);
        }
        let sx = if rng.gen() { -x } else { x };
        let sy = if rng.gen() { -y } else { y };
        return (sx, sy);
    }
}

fn isosceles_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut checked = 0;
    while checked < 500 {
        let (x1, y1) = pythagorean(&mut rng);
        let cfg = BaseConfig::new(x1, y1).map_err(|e| e.to_string())?;
        let t = random_rational(&mut rng, 30);
        let branch = if rng.gen() { Branch::Plus } else { Branch::Minus };
        let Ok(Some(sol)) = isosceles_from_parameter(&cfg, &t, branch) else { continue };
        let o = Point2::origin();
        let leg2 = sol.leg.square();
        ensure(squared_distance(&o, &sol.apex) == leg2, format!("|O apex| != leg for t = {t}"))?;
        ensure(squared_distance(&sol.apex, &cfg.p1()) == leg2, format!("|apex P1| != leg for t = {t}"))?;
        ensure(cfg.on_bisector(&sol.apex), format!("apex off the bisector for t = {t}"))?;
        checked += 1;
    }
    Ok(format!("{checked} random instances, zero failures"))
}

fn curve_construction() -> Outcome {
    let e = build_e(&int(1), &int(1)).map_err(|e| e.to_string())?;
    ensure(e == WeierstrassCurve::new(int(-8), int(8)), format!("got {e}"))?;
    let p = EcPoint::affine(int(-2), int(4));
    ensure(e.contains(&p), "P not on curve")?;
    let multiples = e.multiples(&p, MAZUR_BOUND as usize).map_err(|e| e.to_string())?;
    ensure(multiples.iter().all(|m| !m.is_infinity()), "kP = O for some k <= 12")?;
    ensure(e.torsion_order(&p) == Ok(None), "torsion_order reports finite order")?;
    Ok("y^2 = x^3 - 8x + 8, (-2, 4) of infinite order".into())
}

fn rank_two() -> Outcome {
    let w = rank_witness_q(&int(1), &rat(1, 2)).map_err(|e| e.to_string())?;
    ensure(w.q == rat(3, 4), "q != 3/4")?;
    let e = build_e(&int(1), &rat(3, 4)).map_err(|e| e.to_string())?;
    let p = EcPoint::affine(rat(-73, 48), rat(147, 64));
    let q = EcPoint::affine(rat(121, 24), rat(21, 2));
    ensure(w.point == q, "Q witness differs")?;
    ensure(e.contains(&p) && e.contains(&q), "witness not on curve")?;
    ensure(e.torsion_order(&p) == Ok(None) && e.torsion_order(&q) == Ok(None), "witness is torsion")?;
    let det = e.height_gram_determinant(&p, &q, 3).map_err(|e| e.to_string())?;
    let indep = e.independence_heuristic(&p, &q, 3, 0.01).map_err(|e| e.to_string())?;
    ensure(indep, format!("heuristic says dependent (det {det:.4})"))?;
    Ok(format!("exact on-curve and infinite order; heuristic height determinant {det:.4} > 0.01"))
}

fn third_witness() -> Outcome {
    let (w, area) = rank_witness_h(&int(1), &int(3)).map_err(|e| e.to_string())?;
    ensure(w.q == rat(-4, 7), "q != -4/7")?;
    ensure(w.point == EcPoint::affine(rat(53, 147), rat(-2, 49)), "H differs")?;
    let params = HeronParams::new(int(1), w.q.clone()).map_err(|e| e.to_string())?;
    ensure(params.curve().contains(&w.point), "H not on curve")?;
    let c = CPoint::new(rat(-4, 7), rat(-5, 7), rat(3, 7), int(1));
    ensure(w.cpoint == c && params.c_on_curve(&c), "C-point differs or off the quadrics")?;
    let rec = params.triangle_from_cpoint(&c).map_err(|e| e.to_string())?;
    ensure(rec.triangle().is_right(), "not a right triangle")?;
    let formula = (&w.q * (rat(-4, 7) + 1)).abs() / 2;
    ensure(rec.area() == &rat(6, 49) && area == formula && formula == rat(6, 49), "area differs from 6/49")?;
    Ok("q = -4/7, H on curve, right triangle of area 6/49".into())
}

fn order_four() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 6);
    let mut checked = 0;
    while checked < 50 {
        let m = random_rational(&mut rng, 9);
        let t = random_rational(&mut rng, 9);
        if m.is_zero() {
            continue;
        }
        let Ok((q, p)) = order4_point(&m, &t) else { continue };
        let e = build_e(&m, &q).map_err(|e| e.to_string())?;
        ensure(e.torsion_order(&p) == Ok(Some(4)), format!("order != 4 at m = {m}, t = {t}"))?;
        checked += 1;
    }
    let (q, p) = order4_point(&int(1), &int(1)).map_err(|e| e.to_string())?;
    let e = build_e(&int(1), &q).map_err(|e| e.to_string())?;
    ensure(q == int(-2) && p == EcPoint::affine(int(1), int(2)), "instance (1, 1) differs")?;
    ensure(e.scalar_mul(2, &p) == Ok(EcPoint::affine(int(2), int(0))), "2P != (2, 0)")?;
    ensure(e.scalar_mul(4, &p) == Ok(EcPoint::Infinity), "4P != O")?;
    Ok(format!("{checked} random instances of order 4; q = -2, P = (1, 2), 2P = (2, 0), 4P = O"))
}

fn full_two_torsion() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 7);
    let mut checked = 0;
    while checked < 50 {
        let m = random_rational(&mut rng, 9);
        let n = random_rational(&mut rng, 9);
        let Ok(q) = full_two_torsion_q(&m, &n) else { continue };
        let Ok(params) = HeronParams::new(m.clone(), q) else { continue };
        let roots = params.curve().two_torsion().map_err(|e| e.to_string())?;
        ensure(roots.len() == 3, format!("{} roots at m = {m}, n = {n}", roots.len()))?;
        checked += 1;
    }
    let q = full_two_torsion_q(&int(1), &int(1)).map_err(|e| e.to_string())?;
    ensure(q == rat(1, 3), "q != 1/3")?;
    ensure(full_two_torsion_square(&int(1), &q) == rat(100, 9), "square value != 100/9")?;
    Ok(format!("{checked} random instances with three 2-torsion points; q(1,1) = 1/3, square 100/9"))
}

fn isomorphism_round_trips() -> Outcome {
    let mut points = 0;
    for (m, q) in [(int(1), int(1)), (int(1), rat(3, 4)), (int(1), rat(-4, 7))] {
        let params = HeronParams::new(m, q).map_err(|e| e.to_string())?;
        let e = params.curve();
        let witness = params.rank_witness_p().map_err(|e| e.to_string())?;
        for p in e.multiples(&witness.point, 5).map_err(|e| e.to_string())? {
            let ctx = format!("{params}, P = {p}");
            ensure(e.contains(&p), format!("{ctx}: not on E"))?;
            let quartic = params.phi_inv(&p).map_err(|e| format!("{ctx}: {e}"))?;
            ensure(params.cprime_on_curve(&quartic), format!("{ctx}: quartic point off C'"))?;
            let c = params.e_to_c(&p).map_err(|e| format!("{ctx}: {e}"))?;
            ensure(params.c_on_curve(&c), format!("{ctx}: C-point off the quadrics"))?;
            let back = params.psi(&c).map_err(|e| format!("{ctx}: {e}"))?;
            ensure(params.cprime_on_curve(&back), format!("{ctx}: psi image off C'"))?;
            ensure(params.c_to_e(&c) == Ok(p.clone()), format!("{ctx}: round trip differs"))?;
            points += 1;
        }
    }
    Ok(format!("{points} points, all intermediate points on their curves"))
}

fn heron_generation() -> Outcome {
    let start = Instant::now();
    let (code, out, err) = cli(&["heron", "gen", "--m", "1", "--q", "1", "--count", "5"], "");
    ensure(code == 0, format!("gen exited {code}: {err}"))?;
    let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let records = v["records"].as_array().ok_or("no records")?;
    ensure(records.len() == 5, format!("{} records", records.len()))?;
    let mut apexes = Vec::new();
    for r in records {
        ensure(r["sides"][0] == "1" && r["vertices"][1] == serde_json::json!(["1", "0"]), "base is not 1")?;
        let x: Rational = r["vertices"][2][0].as_str().ok_or("bad x")?.parse().map_err(|_| "bad x")?;
        let y: Rational = r["vertices"][2][1].as_str().ok_or("bad y")?.parse().map_err(|_| "bad y")?;
        ensure(y == &x + 1 && !y.is_zero(), "apex not on y = x + 1 or degenerate")?;
        ensure(!apexes.contains(&x), "duplicate triangle")?;
        apexes.push(x);
    }
    let (code, vout, verr) = cli(&["verify"], &out);
    ensure(code == 0, format!("verify exited {code}: {verr}"))?;
    let vr: Value = serde_json::from_str(&vout).map_err(|e| e.to_string())?;
    ensure(vr["failed"] == 0, "verify reported failures")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("5 distinct triangles, verify passed ({} checks), {elapsed:.2?}", vr["passed"]))
}

fn genus3_specials() -> Outcome {
    let (q, p) = isosceles_point(&int(2)).map_err(|e| e.to_string())?;
    let expected = CqPoint::new([rat(9, 16), rat(3, 4), rat(15, 16), rat(25, 32), int(1)]);
    ensure(q == rat(25, 32) && p == expected, format!("isosceles point {p} at q = {q}"))?;
    ensure(cq_on_curve(&GenusThreeParams::new(q).map_err(|e| e.to_string())?, &p), "isosceles point off C_q")?;
    let (q, p) = right_point(&int(2)).map_err(|e| e.to_string())?;
    let expected = CqPoint::new([rat(9, 16), rat(3, 4), rat(15, 16), rat(3, 4), int(1)]);
    ensure(q == rat(9, 16) && p == expected, format!("right point {p} at q = {q}"))?;
    ensure(cq_on_curve(&GenusThreeParams::new(q.clone()).map_err(|e| e.to_string())?, &p), "right point off C_q")?;
    ensure(q.square() + p.coords[3].square() == p.coords[2].square(), "q^2 + S^2 != R^2")?;
    Ok("both points on all three quadrics; q^2 + S^2 = R^2".into())
}

fn genus3_search() -> Outcome {
    let theorem = CqPoint::new([rat(9, 16), rat(3, 4), rat(15, 16), rat(25, 32), int(1)]);
    let params = GenusThreeParams::new(rat(25, 32)).map_err(|e| e.to_string())?;
    let hits = search_points(&params, 16);
    ensure(hits.contains(&theorem), "theorem point not found")?;
    let same_apex = hits.iter().filter(|h| h.coords[0] == rat(9, 16)).count();
    ensure(same_apex == 1, format!("{same_apex} representatives of the theorem point"))?;
    let right = CqPoint::new([rat(9, 16), rat(3, 4), rat(15, 16), rat(3, 4), int(1)]);
    let hits = search_points(&GenusThreeParams::new(rat(9, 16)).map_err(|e| e.to_string())?, 4);
    ensure(hits.contains(&right), "right point not found")?;
    let start = Instant::now();
    let big = search_points(&params, 64);
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("height 64 took {elapsed:?}"))?;
    Ok(format!("both points found; height-64 search: {} hits in {elapsed:.2?}", big.len()))
}

fn group_law() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 12);
    let random_point = |rng: &mut StdRng| loop {
        let m = rat(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=3));
        let q = rat(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=3));
        let Ok(params) = HeronParams::new(m, q) else { continue };
        let e = params.curve().clone();
        let p = params.rank_witness_p().unwrap().point;
        let p = if rng.gen() { e.double(&p).unwrap() } else { p };
        let t = EcPoint::affine(params.two_torsion_x(), int(0));
        let p = if rng.gen() { e.add(&p, &t).unwrap() } else { p };
        return (params, p);
    };
    for _ in 0..100 {
        let (params, p) = random_point(&mut rng);
        let e = params.curve();
        let mut acc = EcPoint::Infinity;
        for k in 1..=16 {
            acc = e.add(&acc, &p).map_err(|e| e.to_string())?;
            let fast = e.scalar_mul(k, &p).map_err(|e| e.to_string())?;
            ensure(fast == acc, format!("{params}: {k}P differs"))?;
        }
    }
    for _ in 0..100 {
        let (params, p) = random_point(&mut rng);
        let e = params.curve();
        let w = params.rank_witness_p().unwrap().point;
        let t = EcPoint::affine(params.two_torsion_x(), int(0));
        let k: i64 = rng.gen_range(1..=3);
        let q = e.scalar_mul(k, &w).map_err(|e| e.to_string())?;
        let r = if rng.gen() { t } else { e.add(&w, &t).map_err(|e| e.to_string())? };
        let left = e.add(&e.add(&p, &q).unwrap(), &r).map_err(|e| e.to_string())?;
        let right = e.add(&p, &e.add(&q, &r).unwrap()).map_err(|e| e.to_string())?;
        ensure(left == right, format!("{params}: associativity fails"))?;
    }
    Ok("100 points x k <= 16 and 100 triples, zero failures".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("worked example reproduction", worked_example),
        ("isosceles property suite", isosceles_suite),
        ("curve construction", curve_construction),
        ("rank-2 witnesses", rank_two),
        ("third witness", third_witness),
        ("order-4 family", order_four),
        ("full 2-torsion", full_two_torsion),
        ("isomorphism round trips", isomorphism_round_trips),
        ("heron generation", heron_generation),
        ("genus-3 specials", genus3_specials),
        ("genus-3 search oracle", genus3_search),
        ("group-law oracle", group_law),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
