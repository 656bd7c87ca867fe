use serde::Serialize;
use serde_json::{json, Value};

use heron_curves::genus3::{
    congruent_number_genus3, isosceles_point, right_point, search_points_with_jobs, triangle_from_cqpoint,
    GenusThreeParams,
};
use heron_curves::heron::{
    build_e, build_ij, congruent_number_a, full_two_torsion_q, full_two_torsion_square, generate_heron_triangles,
    has_full_two_torsion, order4_point, rank_witness_h, rank_witness_q, HeronParams,
};
use heron_curves::isosceles::{enumerate_isosceles_with_jobs, isosceles_from_parameter, BaseConfig, Branch};
use heron_curves::{Error, Rational};

use crate::{Failure, Family, Genus3Command, HeronCommand, IsoscelesArgs};

const HEIGHT_DEPTH: u32 = 3;
const HEIGHT_TOLERANCE: f64 = 0.01;

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialize")
}

pub(crate) fn isosceles(args: IsoscelesArgs, jobs: usize) -> Result<Value, Failure> {
    let (x1, y1) = args.p1;
    let cfg = BaseConfig::new(x1.clone(), y1.clone())?;
    let p1 = json!([x1, y1]);
    let (params, solutions) = match &args.t {
        Some(t) => {
            let branches = args.branch.map_or(Branch::both().to_vec(), |b| vec![b]);
            let mut solutions = Vec::new();
            for b in branches {
                solutions.extend(isosceles_from_parameter(&cfg, t, b)?);
            }
            if solutions.is_empty() {
                return Err(Error::DegenerateTriangle.into());
            }
            let branch = args.branch.as_ref().map(value);
            (json!({ "p1": p1, "t": t, "branch": branch }), solutions)
        }
        None => {
            let height = args.height.expect("clap requires --height");
            let solutions = enumerate_isosceles_with_jobs(&cfg, height, jobs);
            (json!({ "p1": p1, "height": height }), solutions)
        }
    };
    let records: Vec<_> = solutions.iter().map(|s| s.record(&cfg)).collect();
    Ok(json!({
        "command": "isosceles",
        "params": params,
        "base_length": cfg.base_length(),
        "solutions": solutions,
        "records": records,
    }))
}

pub(crate) fn heron(cmd: HeronCommand) -> Result<Value, Failure> {
    match cmd {
        HeronCommand::Curve(mq) => {
            let curve = build_e(&mq.m, &mq.q)?;
            let (i, j) = build_ij(&mq.m, &Rational::one(), &mq.q);
            Ok(json!({
                "command": "heron curve",
                "params": { "m": mq.m, "q": mq.q },
                "curve": curve,
                "invariants": { "I": i, "J": j },
                "elliptic": curve.is_elliptic(),
            }))
        }
        HeronCommand::Gen { mq, count } => {
            let params = HeronParams::new(mq.m.clone(), mq.q.clone())?;
            let witness = params.rank_witness_p()?;
            let count = usize::try_from(count).map_err(|_| Failure::Parse("count too large".into()))?;
            let records = generate_heron_triangles(&params, count)?;
            Ok(json!({
                "command": "heron gen",
                "params": { "m": mq.m, "q": mq.q, "count": count },
                "curve": params.curve(),
                "witness": witness,
                "records": records,
            }))
        }
        HeronCommand::Torsion { m, q, n } => {
            let (q, params) = match (q, n) {
                (Some(q), _) => (q.clone(), json!({ "m": m, "q": q })),
                (None, Some(n)) => (full_two_torsion_q(&m, &n)?, json!({ "m": m, "n": n })),
                (None, None) => unreachable!("clap requires --q or --n"),
            };
            let hp = HeronParams::new(m.clone(), q.clone())?;
            Ok(json!({
                "command": "heron torsion",
                "params": params,
                "q": q,
                "curve": hp.curve(),
                "two_torsion_x": hp.two_torsion_x(),
                "two_torsion_cpoint": hp.two_torsion_cpoint().ok(),
                "two_torsion": hp.curve().two_torsion()?,
                "full_two_torsion": has_full_two_torsion(&m, &q),
                "square_value": full_two_torsion_square(&m, &q),
            }))
        }
        HeronCommand::Order4 { m, t } => {
            let (q, p) = order4_point(&m, &t)?;
            let hp = HeronParams::new(m.clone(), q.clone())?;
            let double = hp.curve().double(&p)?;
            Ok(json!({
                "command": "heron order4",
                "params": { "m": m, "t": t },
                "q": q,
                "curve": hp.curve(),
                "point": p,
                "double": double,
                "order": 4,
            }))
        }
        HeronCommand::Witnesses { m, q, h, u } => witnesses(m, q, h, u),
    }
}

fn p_entry(hp: &HeronParams) -> Result<Value, Failure> {
    let w = hp.rank_witness_p()?;
    Ok(json!({
        "kind": "P",
        "q": hp.q(),
        "curve": hp.curve(),
        "point": w.point,
        "order": w.order,
    }))
}

fn witnesses(m: Rational, q: Option<Rational>, h: Option<Rational>, u: Option<Rational>) -> Result<Value, Failure> {
    let mut entries = Vec::new();
    if let Some(q) = &q {
        entries.push(p_entry(&HeronParams::new(m.clone(), q.clone())?)?);
    }
    if let Some(h) = &h {
        let wq = rank_witness_q(&m, h)?;
        let hp = HeronParams::new(m.clone(), wq.q.clone())?;
        let wp = hp.rank_witness_p()?;
        let record = hp.triangle_from_cpoint(&wq.cpoint)?;
        entries.push(p_entry(&hp)?);
        entries.push(json!({
            "kind": "Q",
            "h": h,
            "q": wq.q,
            "curve": hp.curve(),
            "point": wq.point,
            "order": wq.order,
            "cpoint": wq.cpoint,
            "congruent_number": congruent_number_a(h)?,
            "record": record,
        }));
        if wp.order.is_none() && wq.order.is_none() {
            let det = hp.curve().height_gram_determinant(&wp.point, &wq.point, HEIGHT_DEPTH)?;
            entries.push(json!({
                "kind": "independence",
                "heuristic": true,
                "q": wq.q,
                "curve": hp.curve(),
                "points": [wp.point, wq.point],
                "depth": HEIGHT_DEPTH,
                "tolerance": HEIGHT_TOLERANCE,
                "determinant": det,
                "independent": det > HEIGHT_TOLERANCE,
            }));
        }
    }
    if let Some(u) = &u {
        let (w, area) = rank_witness_h(&m, u)?;
        let hp = HeronParams::new(m.clone(), w.q.clone())?;
        let record = hp.triangle_from_cpoint(&w.cpoint)?;
        entries.push(json!({
            "kind": "H",
            "u": u,
            "q": w.q,
            "curve": hp.curve(),
            "point": w.point,
            "order": w.order,
            "cpoint": w.cpoint,
            "area": area,
            "record": record,
        }));
    }
    Ok(json!({
        "command": "heron witnesses",
        "params": { "m": m, "q": q, "h": h, "u": u },
        "witnesses": entries,
    }))
}

pub(crate) fn genus3(cmd: Genus3Command, jobs: usize) -> Result<Value, Failure> {
    match cmd {
        Genus3Command::Special { u, family } => {
            let mut entries = Vec::new();
            if matches!(family, Family::Isosceles | Family::Both) {
                let (q, p) = isosceles_point(&u)?;
                let record = triangle_from_cqpoint(&GenusThreeParams::new(q.clone())?, &p)?;
                entries.push(json!({ "family": "isosceles", "q": q, "point": p, "record": record }));
            }
            if matches!(family, Family::Right | Family::Both) {
                let (q, p) = right_point(&u)?;
                let record = triangle_from_cqpoint(&GenusThreeParams::new(q.clone())?, &p)?;
                entries.push(json!({
                    "family": "right",
                    "q": q,
                    "point": p,
                    "record": record,
                    "congruent_number": congruent_number_genus3(&u)?,
                }));
            }
            Ok(json!({
                "command": "genus3 special",
                "params": { "u": u },
                "points": entries,
            }))
        }
        Genus3Command::Search { q, height } => {
            let params = GenusThreeParams::new(q.clone())?;
            let points = search_points_with_jobs(&params, height, jobs);
            let mut records = Vec::new();
            for p in &points {
                match triangle_from_cqpoint(&params, p) {
                    Ok(r) => records.push(r),
                    Err(Error::DegenerateTriangle) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(json!({
                "command": "genus3 search",
                "params": { "q": q, "height": height },
                "points": points,
                "records": records,
            }))
        }
    }
}
