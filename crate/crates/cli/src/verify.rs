//! Independent re-checking of emitted reports.
//!
//! Only exact rational arithmetic is shared with the generators. Distances,
//! areas, curve coefficients, quadric membership and the group law are all
//! recomputed here from the raw parameters with separate formulas; the
//! Weierstrass coefficients in particular are rebuilt from the invariants
//! `I, J` of the quadric pencil rather than from the closed forms.

use std::collections::BTreeSet;

use heron_curves::Rational;
use serde_json::{json, Value};

use crate::{Failure, SCHEMA};

type Check = Result<(), String>;

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

fn expect(cond: bool, msg: &str) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

struct Checks {
    items: Vec<Value>,
    failed: usize,
}

impl Checks {
    fn record(&mut self, item: String, result: Check) {
        let ok = result.is_ok();
        if !ok {
            self.failed += 1;
        }
        self.items.push(json!({
            "item": item,
            "ok": ok,
            "detail": result.err().unwrap_or_default(),
        }));
    }
}

/// Verifies a report and returns the verification report and whether every
/// check passed. Empty input is a report with nothing to check.
pub(crate) fn verify_report(input: &str) -> Result<(Value, bool), Failure> {
    let mut checks = Checks {
        items: Vec::new(),
        failed: 0,
    };
    let mut source = Value::Null;
    if !input.trim().is_empty() {
        let report: Value =
            serde_json::from_str(input).map_err(|e| Failure::Parse(format!("report is not valid JSON: {e}")))?;
        if !report.is_object() {
            return Err(Failure::Parse("report must be a JSON object".into()));
        }
        match report.get("schema") {
            None => {}
            Some(Value::String(s)) if s == SCHEMA => {}
            Some(other) => return Err(Failure::Parse(format!("unsupported schema {other}"))),
        }
        source = report.get("command").cloned().unwrap_or(Value::Null);
        check_report(&report, &mut checks);
    }
    let passed = checks.items.len() - checks.failed;
    let ok = checks.failed == 0;
    Ok((
        json!({
            "command": "verify",
            "source_command": source,
            "passed": passed,
            "failed": checks.failed,
            "checks": checks.items,
        }),
        ok,
    ))
}

fn check_report(report: &Value, checks: &mut Checks) {
    let command = report.get("command").and_then(Value::as_str).unwrap_or("");
    let params = &report["params"];
    match command {
        "isosceles" => {
            let p1 = point(&params["p1"]);
            for_each_record(report, checks, |t| {
                let p1 = p1.clone()?;
                expect(t.v[0] == (int(0), int(0)), "first vertex is not O")?;
                expect(t.v[1] == p1, "second vertex is not P1")?;
                expect(t.sides[1] == t.sides[2], "apex is not equidistant from O and P1")
            });
        }
        "heron curve" => checks.record("curve".into(), heron_curve(params, report)),
        "heron gen" => {
            checks.record("curve".into(), heron_curve(params, report));
            let mq = rats(params, &["m", "q"]);
            let witness = mq.clone().and_then(|mq| on_heron_curve(&mq[0], &mq[1], &report["witness"]["point"]));
            checks.record("witness".into(), witness);
            let mut apexes = BTreeSet::new();
            for_each_record(report, checks, |t| {
                let mq = mq.clone()?;
                heron_triangle(&mq[0], &mq[1], &t)?;
                expect(apexes.insert(t.v[2].clone()), "duplicate triangle")
            });
            let n = report["records"].as_array().map_or(0, Vec::len) as u64;
            let count = expect(params["count"].as_u64() == Some(n), "number of triangles differs from count");
            checks.record("count".into(), count);
        }
        "heron torsion" => checks.record("torsion".into(), heron_torsion(params, report)),
        "heron order4" => checks.record("order4".into(), heron_order4(params, report)),
        "heron witnesses" => {
            let m = rat(&params["m"]);
            for (i, w) in array(&report["witnesses"]).iter().enumerate() {
                let result = m.clone().and_then(|m| witness(&m, w));
                checks.record(format!("witnesses[{i}]"), result);
            }
        }
        "genus3 special" => {
            for (i, p) in array(&report["points"]).iter().enumerate() {
                checks.record(format!("points[{i}]"), genus3_special(p));
            }
        }
        "genus3 search" => {
            let q = rat(&params["q"]);
            let mut last = None;
            for (i, p) in array(&report["points"]).iter().enumerate() {
                let result = q.clone().and_then(|q| {
                    let c = coords(p, 5)?;
                    on_genus3_curve(&q, &c)?;
                    let canonical = c[4] == int(1) && !c[2].is_negative() && !c[3].is_negative() && c[1].is_positive();
                    expect(canonical, "point is not in canonical form")?;
                    let key = (c[1].naive_height(), c[1].clone());
                    expect(last.as_ref().map_or(true, |l| l < &key), "points are not sorted by height")?;
                    last = Some(key);
                    Ok(())
                });
                checks.record(format!("points[{i}]"), result);
            }
            for_each_record(report, checks, |t| genus3_triangle(&q.clone()?, &t));
        }
        _ => for_each_record(report, checks, |_| Ok(())),
    }
}

fn array(v: &Value) -> &[Value] {
    v.as_array().map_or(&[], Vec::as_slice)
}

fn rat(v: &Value) -> Result<Rational, String> {
    let s = v.as_str().ok_or_else(|| format!("expected a rational string, got {v}"))?;
    s.parse().map_err(|e| format!("{e}"))
}

fn rats(v: &Value, keys: &[&str]) -> Result<Vec<Rational>, String> {
    keys.iter().map(|k| rat(&v[*k]).map_err(|e| format!("{k}: {e}"))).collect()
}

/// `[x, y]` or `{"x": .., "y": ..}`.
fn point(v: &Value) -> Result<(Rational, Rational), String> {
    match v {
        Value::Array(a) if a.len() == 2 => Ok((rat(&a[0])?, rat(&a[1])?)),
        Value::Object(_) => Ok((rat(&v["x"])?, rat(&v["y"])?)),
        _ => Err(format!("expected a point, got {v}")),
    }
}

fn coords(v: &Value, n: usize) -> Result<Vec<Rational>, String> {
    let a = v.as_array().filter(|a| a.len() == n).ok_or_else(|| format!("expected {n} coordinates"))?;
    a.iter().map(rat).collect()
}

struct Tri {
    v: [(Rational, Rational); 3],
    sides: [Rational; 3],
    area: Rational,
    right: bool,
}

fn dist2(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    let dx = &a.0 - &b.0;
    let dy = &a.1 - &b.1;
    &dx * &dx + &dy * &dy
}

/// Certifies a serialized triangle record from its vertices alone.
fn triangle(rec: &Value) -> Result<Tri, String> {
    let vs = rec["vertices"].as_array().filter(|a| a.len() == 3).ok_or("expected 3 vertices")?;
    let v = [point(&vs[0])?, point(&vs[1])?, point(&vs[2])?];
    let s = coords(&rec["sides"], 3)?;
    let sides = [s[0].clone(), s[1].clone(), s[2].clone()];
    for (i, (a, b)) in [(0, 1), (1, 2), (2, 0)].into_iter().enumerate() {
        let ok = !sides[i].is_negative() && &sides[i] * &sides[i] == dist2(&v[a], &v[b]);
        expect(ok, &format!("side {i} does not match its vertices"))?;
    }
    let twice = &v[0].0 * (&v[1].1 - &v[2].1) + &v[1].0 * (&v[2].1 - &v[0].1) + &v[2].0 * (&v[0].1 - &v[1].1);
    expect(!twice.is_zero(), "vertices are collinear")?;
    let area = rat(&rec["area"])?;
    expect(area == twice.abs() / 2, "area does not match the vertices")?;
    let semi = (&sides[0] + &sides[1] + &sides[2]) / 2;
    let radicand = &semi * (&semi - &sides[0]) * (&semi - &sides[1]) * (&semi - &sides[2]);
    expect(radicand == &area * &area, "Heron's formula fails")?;

    let sq: Vec<Rational> = sides.iter().map(|s| s * s).collect();
    let right = &sq[0] + &sq[1] == sq[2] || &sq[1] + &sq[2] == sq[0] || &sq[2] + &sq[0] == sq[1];
    let isosceles = sides[0] == sides[1] || sides[1] == sides[2] || sides[2] == sides[0];
    let mut expected = BTreeSet::from(["heron"]);
    if right {
        expected.insert("right");
    }
    if isosceles {
        expected.insert("isosceles");
    }
    let tags: BTreeSet<&str> = array(&rec["tags"]).iter().filter_map(Value::as_str).collect();
    expect(tags == expected, "tags do not match the triangle")?;
    match (&rec["congruent_number"], right) {
        (Value::Null, false) => {}
        (c, true) if !c.is_null() => expect(rat(c)? == area, "congruent number differs from the area")?,
        _ => return Err("congruent number present exactly for right triangles expected".into()),
    }
    Ok(Tri { v, sides, area, right })
}

fn for_each_record(report: &Value, checks: &mut Checks, mut extra: impl FnMut(Tri) -> Check) {
    for (i, rec) in array(&report["records"]).iter().enumerate() {
        let result = triangle(rec).and_then(&mut extra);
        checks.record(format!("records[{i}]"), result);
    }
}

/// `A = -27 I / 12^4`, `B = -27 J / 12^6` with `I, J` the pencil invariants
/// at `b = 1`.
fn curve_from_invariants(m: &Rational, q: &Rational) -> (Rational, Rational) {
    let mq = m * q;
    let m2 = m * m;
    let q2 = q * q;
    let k = (&m2 + 1) * &q2;
    let i = (int(1) + &mq * 2 + (&m2 * 5 + 4) * &q2 + &mq * &k * 4 + &k * &k) * 256;
    let j = (int(2) + &mq * 2 + &k) * (int(1) + &mq * 2 - (&m2 * 7 + 8) * &q2 - &mq * &k * 8 - &k * &k * 2) * 4096;
    (i * -27 / 20736, j * -27 / 2985984)
}

fn heron_curve(params: &Value, report: &Value) -> Check {
    let mq = rats(params, &["m", "q"])?;
    expect(!mq[1].is_zero(), "q = 0 has no curve")?;
    let (a, b) = curve_from_invariants(&mq[0], &mq[1]);
    let curve = &report["curve"];
    expect(rat(&curve["A"])? == a, "coefficient A is wrong")?;
    expect(rat(&curve["B"])? == b, "coefficient B is wrong")?;
    let disc = (&a * &a * &a * 4 + &b * &b * 27) * -16;
    expect(rat(&curve["discriminant"])? == disc, "discriminant is wrong")?;
    if let Some(e) = report.get("elliptic") {
        expect(e.as_bool() == Some(!disc.is_zero()), "elliptic flag is wrong")?;
    }
    Ok(())
}

#[derive(Clone, PartialEq)]
enum Pt {
    Inf,
    At(Rational, Rational),
}

fn parse_pt(v: &Value) -> Result<Pt, String> {
    if v.as_str() == Some("infinity") {
        return Ok(Pt::Inf);
    }
    let (x, y) = point(v)?;
    Ok(Pt::At(x, y))
}

fn on_curve(a: &Rational, b: &Rational, p: &Pt) -> bool {
    match p {
        Pt::Inf => true,
        Pt::At(x, y) => y * y == x * x * x + a * x + b,
    }
}

fn add(a: &Rational, p: &Pt, q: &Pt) -> Pt {
    let (x1, y1, x2, y2) = match (p, q) {
        (Pt::Inf, _) => return q.clone(),
        (_, Pt::Inf) => return p.clone(),
        (Pt::At(x1, y1), Pt::At(x2, y2)) => (x1, y1, x2, y2),
    };
    let l = if x1 != x2 {
        (y2 - y1) / (x2 - x1)
    } else if y1 == y2 && !y1.is_zero() {
        (x1 * x1 * 3 + a) / (y1 * 2)
    } else {
        return Pt::Inf;
    };
    let x3 = &l * &l - x1 - x2;
    let y3 = l * (x1 - &x3) - y1;
    Pt::At(x3, y3)
}

/// The order of `p` if at most 12, else `None`.
fn order(a: &Rational, p: &Pt) -> Option<u32> {
    let mut acc = p.clone();
    for k in 1..=12 {
        if acc == Pt::Inf {
            return Some(k);
        }
        acc = add(a, &acc, p);
    }
    None
}

fn on_heron_curve(m: &Rational, q: &Rational, p: &Value) -> Check {
    let (a, b) = curve_from_invariants(m, q);
    expect(on_curve(&a, &b, &parse_pt(p)?), "point is not on the curve")
}

/// Both quadrics of the intersection for `(m, q)`.
fn on_quadrics(m: &Rational, q: &Rational, c: &[Rational]) -> Check {
    let (x1, x2, x3, x4) = (&c[0], &c[1], &c[2], &c[3]);
    let k = (m * m + 1) * x1 * x1;
    let first = &k + m * x1 * x4 * 2 + x4 * x4 == x2 * x2;
    let second = &k + (m - q) * x1 * x4 * 2 + (q * q + 1) * x4 * x4 == x3 * x3;
    expect(first && second, "C-point does not satisfy both quadrics")
}

/// Base `O (q, 0)`, apex on `y = m x + 1`, and the associated C-point.
fn heron_triangle(m: &Rational, q: &Rational, t: &Tri) -> Check {
    expect(t.v[0] == (int(0), int(0)) && t.v[1] == (q.clone(), int(0)), "base is not O (q, 0)")?;
    let (x, y) = &t.v[2];
    expect(y == &(m * x + 1), "apex is not on y = m x + 1")?;
    on_quadrics(m, q, &[x.clone(), t.sides[2].clone(), t.sides[1].clone(), int(1)])?;
    expect(t.area == (q * y).abs() / 2, "area differs from |q (m X + 1)| / 2")
}

fn heron_torsion(params: &Value, report: &Value) -> Check {
    let m = rat(&params["m"])?;
    let q = rat(&report["q"])?;
    let (a, b) = curve_from_invariants(&m, &q);
    expect(rat(&report["curve"]["A"])? == a && rat(&report["curve"]["B"])? == b, "curve is wrong")?;
    let points: Vec<Pt> = array(&report["two_torsion"]).iter().map(parse_pt).collect::<Result<_, _>>()?;
    for p in &points {
        let Pt::At(x, y) = p else { return Err("two-torsion point at infinity".into()) };
        expect(y.is_zero() && on_curve(&a, &b, p), &format!("({x}, {y}) is not a point of order 2"))?;
    }
    let x1 = rat(&report["two_torsion_x"])?;
    expect(points.contains(&Pt::At(x1, int(0))), "two_torsion_x is not among the 2-torsion points")?;
    let square = (&m * &m + 1) * ((&m * &m + 1) * &q * &q + &m * &q * 4 + 4);
    expect(rat(&report["square_value"])? == square, "square value is wrong")?;
    let full = square.sqrt().is_some();
    expect(report["full_two_torsion"].as_bool() == Some(full), "full 2-torsion flag is wrong")?;
    expect(points.len() == if full { 3 } else { 1 }, "wrong number of 2-torsion points")?;
    if params.get("n").is_some() {
        expect(full, "parameter n did not give full 2-torsion")?;
    }
    if let Some(c) = report.get("two_torsion_cpoint").filter(|c| !c.is_null()) {
        on_quadrics(&m, &q, &coords(c, 4)?)?;
    }
    Ok(())
}

fn heron_order4(params: &Value, report: &Value) -> Check {
    let m = rat(&params["m"])?;
    let q = rat(&report["q"])?;
    let (a, b) = curve_from_invariants(&m, &q);
    let p = parse_pt(&report["point"])?;
    expect(on_curve(&a, &b, &p), "point is not on the curve")?;
    let double = add(&a, &p, &p);
    expect(parse_pt(&report["double"])? == double, "2P is wrong")?;
    expect(matches!(&double, Pt::At(_, y) if y.is_zero()), "2P is not of order 2")?;
    expect(order(&a, &p) == Some(4), "point does not have order 4")
}

fn witness(m: &Rational, w: &Value) -> Check {
    let q = rat(&w["q"])?;
    let (a, b) = curve_from_invariants(m, &q);
    if let Some(c) = w.get("curve") {
        expect(rat(&c["A"])? == a && rat(&c["B"])? == b, "curve is wrong")?;
    }
    let kind = w["kind"].as_str().unwrap_or("");
    if kind == "independence" {
        for p in array(&w["points"]) {
            expect(on_curve(&a, &b, &parse_pt(p)?), "point is not on the curve")?;
        }
        return Ok(());
    }
    let p = parse_pt(&w["point"])?;
    expect(on_curve(&a, &b, &p), "point is not on the curve")?;
    let claimed = w["order"].as_u64().map(|n| n as u32);
    expect(order(&a, &p) == claimed, "order is wrong")?;
    if let Some(c) = w.get("cpoint") {
        on_quadrics(m, &q, &coords(c, 4)?)?;
    }
    if let Some(rec) = w.get("record") {
        let t = triangle(rec)?;
        heron_triangle(m, &q, &t)?;
        expect(t.right, "witness triangle is not right-angled")?;
        let area = w.get("congruent_number").or_else(|| w.get("area")).map(rat).transpose()?;
        expect(area.map_or(true, |x| x == t.area), "area differs from the triangle")?;
    }
    Ok(())
}

fn on_genus3_curve(q: &Rational, c: &[Rational]) -> Check {
    let (x1, x2, x3, x4, x5) = (&c[0], &c[1], &c[2], &c[3], &c[4]);
    let d = x1 - q * x5;
    let ok = x1 * x1 + x2 * x2 == x3 * x3 && &d * &d + x2 * x2 == x4 * x4 && x2 * x2 == x1 * x5;
    expect(ok, "point does not satisfy the three quadrics")
}

/// Base `O (q, 0)` and apex on `x = y^2`.
fn genus3_triangle(q: &Rational, t: &Tri) -> Check {
    expect(t.v[0] == (int(0), int(0)) && t.v[1] == (q.clone(), int(0)), "base is not O (q, 0)")?;
    let (x, y) = &t.v[2];
    expect(x == &(y * y), "apex is not on x = y^2")
}

fn genus3_special(p: &Value) -> Check {
    let q = rat(&p["q"])?;
    let c = coords(&p["point"], 5)?;
    on_genus3_curve(&q, &c)?;
    let t = triangle(&p["record"])?;
    genus3_triangle(&q, &t)?;
    let (r, s) = (&c[2] / &c[4], &c[3] / &c[4]);
    match p["family"].as_str() {
        Some("isosceles") => expect(s == q, "S differs from q"),
        Some("right") => {
            expect(&q * &q + &s * &s == &r * &r, "not right-angled at (q, 0)")?;
            expect(rat(&p["congruent_number"])? == t.area, "congruent number differs from the area")
        }
        _ => Err("unknown family".into()),
    }
}
