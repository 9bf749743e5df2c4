//! Named end-to-end reproductions. Each demo returns its evidence together
//! with a `holds` flag computed from exact checks.

use serde_json::{json, Value};

use zkit_core::compactness::{
    decide_via_axes, decide_via_zeno, not_locally_compact_witness, verify_certificate,
    CompactCandidate, Part,
};
use zkit_core::homotopy::{
    distinguish, power_winding, z_path, DistinguishOutcome, ParallelogramLoop,
};
use zkit_core::minkowski::{Point, QuadPoint, Vector};
use zkit_core::numerics::{OneDimSet, QuadExt, Rat};
use zkit_core::region::{check_open_on_axes, rationalize, restrict_to_line, zeeman_ball};
use zkit_core::sampling::Sampler;
use zkit_core::zeno::{
    classify, first_countability_refuter, separating_neighborhood, SequenceFamily, ZenoAnswer,
};
use zkit_core::zfunction::{audit_axis_continuity, audit_n_discontinuity, ZFParams};
use zkit_core::Result;

use crate::{Cli, CliError, CliResult};

type Demo = fn(&Cli) -> Result<Value>;

const DEMOS: [(&str, &str, Demo); 10] = [
    (
        "lightlike-zeno",
        "points on a light ray converging to p are Zeno",
        lightlike_zeno,
    ),
    (
        "axial-zeno",
        "one point per timelike axis converging to p is Zeno",
        axial_zeno,
    ),
    (
        "zeeman-ball",
        "the Zeeman ball is open on every sampled axis and meets the light rays only at p",
        zeeman_ball_demo,
    ),
    (
        "f-continuity",
        "f obeys the axis bound near p and jumps from 0 to 1 along the light cone",
        f_continuity,
    ),
    (
        "compactness",
        "timelike segments are compact, lightlike segments are not",
        compactness,
    ),
    (
        "not-locally-compact",
        "every open neighborhood of p contains a Zeno sequence converging to p",
        not_locally_compact,
    ),
    (
        "density",
        "an irrational point of an open set has a rational neighbor in the set",
        density,
    ),
    (
        "refuter",
        "no countable chain of balls is a neighborhood base at p",
        refuter,
    ),
    (
        "z-path",
        "lightlike separated points are joined by a two-segment path",
        z_path_demo,
    ),
    (
        "winding",
        "distinct parallelogram loops and powers are told apart by winding numbers",
        winding_demo,
    ),
];

pub fn run(cli: &Cli, name: Option<&str>, list: bool) -> CliResult<Value> {
    if list {
        let names: Vec<Value> = DEMOS
            .iter()
            .map(|(n, d, _)| json!({"name": n, "claim": d}))
            .collect();
        return Ok(json!({"demos": names}));
    }
    let selected: Vec<_> = match name {
        Some(n) => {
            let d = DEMOS
                .iter()
                .find(|(dn, _, _)| *dn == n)
                .ok_or_else(|| CliError::Malformed(format!("unknown demo {n:?}")))?;
            vec![d]
        }
        None => DEMOS.iter().collect(),
    };
    let mut results = serde_json::Map::new();
    let mut all = true;
    for (n, claim, f) in selected {
        let mut v = f(cli)?;
        all &= v["holds"] == json!(true);
        v["claim"] = json!(claim);
        results.insert(n.to_string(), v);
    }
    Ok(json!({"seed": cli.seed, "all_hold": all, "demos": results}))
}

fn origin() -> Point {
    Point::origin(2)
}

fn separation_evidence(f: &SequenceFamily, count: usize) -> Result<Value> {
    let verdict = classify(f)?;
    let sep = separating_neighborhood(f)?;
    let excluded = sep.verify_prefix(f, count)?;
    Ok(json!({
        "family": f,
        "verdict": verdict,
        "separation": sep,
        "checked_points": count,
        "holds": verdict.is_zeno == ZenoAnswer::Yes && excluded,
    }))
}

fn lightlike_zeno(_: &Cli) -> Result<Value> {
    let f = SequenceFamily::GeometricOnLine {
        p: origin(),
        v: Vector::from_ints(&[1, 1]),
        ratio: Rat::new(1, 2),
    };
    separation_evidence(&f, 100)
}

fn axial_zeno(_: &Cli) -> Result<Value> {
    let f = SequenceFamily::RotatingAxial {
        p: origin(),
        ratio: Rat::new(1, 2),
    };
    separation_evidence(&f, 100)
}

fn zeeman_ball_demo(cli: &Cli) -> Result<Value> {
    let p = origin();
    let ball = zeeman_ball(&p, &Rat::one())?;
    let mut s = Sampler::new(cli.seed);
    let axes: Vec<_> = (0..cli.samples)
        .map(|i| {
            if i % 2 == 0 {
                s.axis_through(&p)
            } else {
                s.axis()
            }
        })
        .collect();
    let report = check_open_on_axes(ball.region(), &axes)?;
    let rays = [[1, 1], [1, -1]]
        .iter()
        .map(|d| restrict_to_line(ball.region(), &p, &Vector::from_ints(d)))
        .collect::<Result<Vec<_>>>()?;
    let only_p = rays.iter().all(|r| *r == OneDimSet::point(QuadExt::zero()));
    Ok(json!({
        "open": ball,
        "axes_checked": report.axes_checked,
        "all_open": report.all_open,
        "light_ray_traces": rays,
        "holds": report.all_open && only_p,
    }))
}

fn f_continuity(cli: &Cli) -> Result<Value> {
    let params = ZFParams::standard(origin(), Vector::from_ints(&[1, 0]))?;
    let mut s = Sampler::new(cli.seed);
    let mut worst_margin = f64::INFINITY;
    let mut worst_tail: f64 = 0.0;
    let mut ok = true;
    for _ in 0..16 {
        let axis = s.axis_through(&params.p);
        let a = audit_axis_continuity(&params, &axis, 64, &Rat::new(1, 2), cli.tol)?;
        worst_margin = worst_margin.min(a.min_margin);
        let tail = a.tail_max_from(40).unwrap_or(0.0);
        worst_tail = worst_tail.max(tail);
        ok &= a.bound_ok && tail < 1e-6;
    }
    let jump = audit_n_discontinuity(&params, 20)?;
    Ok(json!({
        "axes": 16,
        "min_margin": worst_margin,
        "tail_max_from_n40": worst_tail,
        "f_at_p": jump.f_at_p,
        "light_cone_values_all_one": jump.discontinuous,
        "holds": ok && jump.discontinuous,
    }))
}

fn compactness(_: &Cli) -> Result<Value> {
    let seg = |q: &[i64]| {
        CompactCandidate::new(vec![Part::Segment {
            p: origin(),
            q: Point::from_ints(q),
        }])
    };
    let timelike = seg(&[2, 1]);
    let lightlike = seg(&[1, 1]);
    let t_axes = decide_via_axes(&timelike)?;
    let t_zeno = decide_via_zeno(&timelike)?;
    let l_axes = decide_via_axes(&lightlike)?;
    let l_zeno = decide_via_zeno(&lightlike)?;
    let cert_ok = t_axes
        .certificate
        .as_ref()
        .is_some_and(|c| verify_certificate(&timelike, c));
    Ok(json!({
        "timelike": t_axes,
        "lightlike": l_axes,
        "holds": t_axes.compact && t_zeno.compact && cert_ok && !l_axes.compact && !l_zeno.compact,
    }))
}

fn not_locally_compact(_: &Cli) -> Result<Value> {
    let p = origin();
    let c = zeeman_ball(&p, &Rat::new(1, 10))?;
    let w = not_locally_compact_witness(&c, &p)?;
    let inside = w.family.points(50)?.iter().all(|x| c.contains(x));
    Ok(json!({
        "family": w.family,
        "verdict": w.verdict,
        "holds": inside && w.verdict.is_zeno == ZenoAnswer::Yes,
    }))
}

fn density(_: &Cli) -> Result<Value> {
    let c = zeeman_ball(&origin(), &Rat::one())?;
    let root2 = QuadExt::sqrt_of(&Rat::from_int(2))?;
    let q = QuadPoint::new(vec![
        root2.mul_rat(&Rat::new(1, 3)),
        root2.mul_rat(&Rat::new(1, 5)),
    ])?;
    let r = rationalize(&c, &q)?;
    Ok(json!({"irrational_point": q, "rational_point": r, "holds": c.contains(&r)}))
}

fn refuter(_: &Cli) -> Result<Value> {
    let p = origin();
    let chain = (1..=5)
        .map(|i| zeeman_ball(&p, &Rat::new(1, i)))
        .collect::<Result<Vec<_>>>()?;
    let report = first_countability_refuter(&chain, &p)?;
    Ok(json!({"report": report, "holds": report.all_checks_pass() && report.u.contains(&p)}))
}

fn z_path_demo(_: &Cli) -> Result<Value> {
    let path = z_path(&origin(), &Point::from_ints(&[1, 1]))?;
    Ok(json!({"holds": path.verify()? && path.segment_count() == 2, "path": path}))
}

fn winding_demo(_: &Cli) -> Result<Value> {
    let o = origin();
    let p1 = ParallelogramLoop::new(
        o.clone(),
        Vector::from_ints(&[1, 0]),
        Vector::from_ints(&[0, 1]),
    )?;
    let p2 = ParallelogramLoop::new(o, Vector::from_ints(&[2, 0]), Vector::from_ints(&[0, 1]))?;
    let center = Point::new(vec![Rat::new(1, 2), Rat::new(1, 2)]);
    let powers = (-3..=3)
        .map(|n| power_winding(&p1, n, &center))
        .collect::<Result<Vec<_>>>()?;
    let outcome = distinguish(&p1, &p2)?;
    let certified = match &outcome {
        DistinguishOutcome::Certificate(c) => c.verify(&p1, &p2)?,
        DistinguishOutcome::NotSeparableByWinding => false,
    };
    let distinct_powers = powers.windows(2).all(|w| w[0] != w[1]);
    Ok(json!({
        "power_windings": powers,
        "distinguish": outcome,
        "holds": certified && distinct_powers,
    }))
}
