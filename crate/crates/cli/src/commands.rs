use serde::Deserialize;
use serde_json::{json, Value};

use zkit_core::compactness::{
    decide_via_axes, decide_via_zeno, verify_certificate, AxisCoverCertificate, CompactCandidate,
};
use zkit_core::homotopy::{distinguish, power_winding, winding, z_path, Loop, ParallelogramLoop};
use zkit_core::minkowski::{causal_class, line_cone_params, Axis, Point, QuadPoint, Vector};
use zkit_core::numerics::{QuadraticRoots, Rat};
use zkit_core::region::{check_open_on_axes, rationalize, zeeman_ball, CertifiedOpen, Region};
use zkit_core::sampling::Sampler;
use zkit_core::zeno::{
    classify, first_countability_refuter, separating_neighborhood, zeno_inside_open,
    SequenceFamily, ZenoAnswer,
};
use zkit_core::zfunction::{audit_axis_continuity, eval_f, ZFParams};
use zkit_core::ZkitError;

use crate::{demo, Cli, CliError, CliResult, Command, Output};

/// Points listed in the first `PREVIEW` positions of generated sequences.
const PREVIEW: usize = 8;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    if cli.k == 0 {
        return Err(CliError::Malformed("k must be at least 1".to_string()));
    }
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        return Err(CliError::Malformed("tol must be positive".to_string()));
    }
    let v = match &cli.command {
        Command::ClassifyVector { v } => classify_vector(cli, v.as_deref())?,
        Command::ConeIntersect => cone_intersect(cli)?,
        Command::RegionCheck => region_check(cli)?,
        Command::ZeemanBall => zeeman_ball_cmd(cli)?,
        Command::Rationalize => rationalize_cmd(cli)?,
        Command::ZenoClassify => zeno_classify(cli)?,
        Command::ZenoInside => zeno_inside(cli)?,
        Command::RefuteFirstCountable => refute(cli)?,
        Command::CompactDecide => compact_decide(cli)?,
        Command::CertificateVerify => certificate_verify(cli)?,
        Command::FEval => f_eval(cli)?,
        Command::FScan { axes } => return f_scan(cli, *axes).map(Output::Text),
        Command::Winding => winding_cmd(cli)?,
        Command::Distinguish => distinguish_cmd(cli)?,
        Command::ZPath => z_path_cmd(cli)?,
        Command::Demo { name, list } => demo::run(cli, name.as_deref(), *list)?,
    };
    Ok(Output::Json(v))
}

/// Accepts `["1/2","3"]` as well as the unquoted `[1/2,3]`.
fn parse_vector(text: &str) -> CliResult<Vector> {
    if let Ok(v) = serde_json::from_str::<Vector>(text) {
        return Ok(v);
    }
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CliError::Malformed(format!("not a vector: {text}")))?;
    inner
        .split(',')
        .map(|c| {
            c.trim()
                .trim_matches('"')
                .parse::<Rat>()
                .map_err(|e| CliError::Malformed(e.to_string()))
        })
        .collect::<CliResult<Vec<_>>>()
        .map(Vector::new)
}

#[derive(Deserialize)]
struct VectorInput {
    v: Vector,
}

fn classify_vector(cli: &Cli, v: Option<&str>) -> CliResult<Value> {
    let v = match v {
        Some(text) => parse_vector(text)?,
        None => cli.read_input::<VectorInput>()?.v,
    };
    cli.check_dim(v.dim())?;
    Ok(json!({"v": v, "class": causal_class(&v)}))
}

#[derive(Deserialize)]
struct ConeInput {
    base: Point,
    dir: Vector,
    vertex: Point,
}

fn cone_intersect(cli: &Cli) -> CliResult<Value> {
    let input: ConeInput = cli.read_input()?;
    cli.check_dim(input.base.dim())?;
    Ok(
        match line_cone_params(&input.base, &input.dir, &input.vertex)? {
            QuadraticRoots::AllReals => json!({"all_reals": true, "params": []}),
            QuadraticRoots::Finite(ts) => {
                let points = ts
                    .iter()
                    .map(|t| {
                        let coords = input
                            .base
                            .coords()
                            .iter()
                            .zip(input.dir.coords())
                            .map(|(b, d)| t.mul_rat(d).add_rat(b))
                            .collect();
                        QuadPoint::new(coords)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                json!({"all_reals": false, "params": ts, "points": points})
            }
        },
    )
}

#[derive(Deserialize)]
struct RegionCheckInput {
    region: Region,
    #[serde(default)]
    axes: Option<Vec<Axis>>,
}

/// Points named in a region expression: centers, vertices, bases and the like.
fn distinguished_points(v: &Value, out: &mut Vec<Point>) {
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                if matches!(
                    key.as_str(),
                    "center" | "vertex" | "at" | "base" | "p" | "q" | "o"
                ) {
                    if let Ok(p) = serde_json::from_value::<Point>(val.clone()) {
                        if !out.contains(&p) {
                            out.push(p);
                        }
                        continue;
                    }
                }
                distinguished_points(val, out);
            }
        }
        Value::Array(items) => items.iter().for_each(|i| distinguished_points(i, out)),
        _ => {}
    }
}

fn region_check(cli: &Cli) -> CliResult<Value> {
    let input: RegionCheckInput = cli.read_input()?;
    input.region.validate()?;
    let (axes, sampled) = match input.axes {
        Some(axes) => (axes, false),
        None => {
            let mut anchors = vec![];
            distinguished_points(&to_value(&input.region), &mut anchors);
            let mut s = Sampler::new(cli.seed);
            let axes = (0..cli.samples as usize)
                .map(|i| match anchors.get(i % (2 * anchors.len().max(1))) {
                    Some(p) if p.dim() == 2 => s.axis_through(p),
                    _ => s.axis(),
                })
                .collect();
            (axes, true)
        }
    };
    let report = check_open_on_axes(&input.region, &axes)?;
    let mut out = to_value(&report);
    if sampled {
        out["seed"] = json!(cli.seed);
    }
    Ok(out)
}

#[derive(Deserialize)]
struct BallInput {
    p: Point,
    radius: Rat,
}

fn zeeman_ball_cmd(cli: &Cli) -> CliResult<Value> {
    let input: BallInput = cli.read_input()?;
    cli.check_dim(input.p.dim())?;
    Ok(json!({"open": zeeman_ball(&input.p, &input.radius)?}))
}

#[derive(Deserialize)]
struct RationalizeInput {
    open: CertifiedOpen,
    point: QuadPoint,
}

fn rationalize_cmd(cli: &Cli) -> CliResult<Value> {
    let input: RationalizeInput = cli.read_input()?;
    cli.check_dim(input.point.dim())?;
    let r = rationalize(&input.open, &input.point)?;
    Ok(json!({"point": r, "in_open": input.open.contains(&r)}))
}

#[derive(Deserialize)]
struct FamilyInput {
    family: SequenceFamily,
}

fn preview(f: &SequenceFamily) -> CliResult<Vec<Point>> {
    let count = f.len().map_or(PREVIEW, |n| n.min(PREVIEW));
    Ok(f.points(count)?)
}

fn zeno_classify(cli: &Cli) -> CliResult<Value> {
    let FamilyInput { family } = cli.read_input()?;
    cli.check_dim(family.limit().dim())?;
    let verdict = classify(&family)?;
    let mut out = json!({"verdict": verdict, "first_points": preview(&family)?});
    if verdict.is_zeno == ZenoAnswer::Yes {
        let sep = separating_neighborhood(&family)?;
        let checked = cli.samples as usize;
        out["separation"] = to_value(&sep);
        out["prefix_excluded"] =
            json!({"count": checked, "ok": sep.verify_prefix(&family, checked)?});
    }
    Ok(out)
}

#[derive(Deserialize)]
struct InsideInput {
    open: CertifiedOpen,
    p: Point,
}

fn zeno_inside(cli: &Cli) -> CliResult<Value> {
    let input: InsideInput = cli.read_input()?;
    cli.check_dim(input.p.dim())?;
    let family = zeno_inside_open(&input.open, &input.p)?;
    let points = preview(&family)?;
    let inside = points.iter().all(|x| input.open.contains(x));
    Ok(json!({
        "family": family,
        "verdict": classify(&family)?,
        "first_points": points,
        "all_inside": inside,
    }))
}

#[derive(Deserialize)]
struct RefuteInput {
    p: Point,
    #[serde(default)]
    neighborhoods: Option<Vec<CertifiedOpen>>,
    /// Shorthand for a chain of Zeeman balls with these radii.
    #[serde(default)]
    radii: Option<Vec<Rat>>,
}

fn refute(cli: &Cli) -> CliResult<Value> {
    let input: RefuteInput = cli.read_input()?;
    cli.check_dim(input.p.dim())?;
    let chain = match (input.neighborhoods, input.radii) {
        (Some(n), None) => n,
        (None, Some(radii)) => radii
            .iter()
            .map(|r| zeeman_ball(&input.p, r))
            .collect::<Result<Vec<_>, _>>()?,
        _ => {
            return Err(CliError::Malformed(
                "give exactly one of \"neighborhoods\" or \"radii\"".to_string(),
            ))
        }
    };
    let report = first_countability_refuter(&chain, &input.p)?;
    let mut out = to_value(&report);
    out["all_checks_pass"] = json!(report.all_checks_pass());
    Ok(out)
}

fn compact_decide(cli: &Cli) -> CliResult<Value> {
    let k: CompactCandidate = cli.read_input()?;
    if cli.k != 1 {
        return Err(ZkitError::UnsupportedDimension {
            required: 1,
            found: cli.k,
        }
        .into());
    }
    let axes = decide_via_axes(&k)?;
    let zeno = decide_via_zeno(&k)?;
    let agree = axes.compact == zeno.compact;
    let certificate_ok = axes.certificate.as_ref().map(|c| verify_certificate(&k, c));
    let mut out = json!({
        "compact": axes.compact,
        "agree": agree,
        "via_axes": axes,
        "via_zeno": zeno,
    });
    if let Some(ok) = certificate_ok {
        out["certificate_verified"] = json!(ok);
    }
    if let Some(cx) = &axes.counterexample {
        out["counterexample"] = to_value(cx);
    }
    if !agree {
        return Err(
            ZkitError::InvariantViolation("compactness deciders disagree".to_string()).into(),
        );
    }
    Ok(out)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VerifyInput {
    Cover {
        candidate: CompactCandidate,
        certificate: AxisCoverCertificate,
    },
    Open {
        open: Value,
        #[serde(default)]
        axes: Option<Vec<Axis>>,
    },
}

fn certificate_verify(cli: &Cli) -> CliResult<Value> {
    match cli.read_input::<VerifyInput>()? {
        VerifyInput::Cover {
            candidate,
            certificate,
        } => {
            Ok(json!({"kind": "axis_cover", "valid": verify_certificate(&candidate, &certificate)}))
        }
        VerifyInput::Open { open, axes } => {
            // Deserializing rebuilds the region from the certificate.
            let parsed = serde_json::from_value::<CertifiedOpen>(open);
            let c = match parsed {
                Ok(c) => c,
                Err(e) => {
                    return Ok(
                        json!({"kind": "certified_open", "valid": false, "reason": e.to_string()}),
                    )
                }
            };
            let mut out = json!({"kind": "certified_open", "valid": true, "certificate": c.kind()});
            if let Some(axes) = axes {
                let report = check_open_on_axes(c.region(), &axes)?;
                out["valid"] = json!(report.all_open);
                out["axis_check"] = to_value(&report);
            }
            Ok(out)
        }
    }
}

#[derive(Deserialize)]
struct FEvalInput {
    params: ZFParams,
    x: Point,
}

fn f_eval(cli: &Cli) -> CliResult<Value> {
    let input: FEvalInput = cli.read_input()?;
    input.params.validate()?;
    cli.check_dim(input.x.dim())?;
    let v = eval_f(&input.params, &input.x)?;
    Ok(to_value(&v))
}

#[derive(Deserialize)]
struct FScanInput {
    params: ZFParams,
    #[serde(default)]
    axes: Option<Vec<Axis>>,
    #[serde(default = "half")]
    inner_scale: Rat,
}

fn half() -> Rat {
    Rat::new(1, 2)
}

fn f_scan(cli: &Cli, count: usize) -> CliResult<String> {
    let input: FScanInput = cli.read_input()?;
    input.params.validate()?;
    cli.check_dim(input.params.p.dim())?;
    let axes = match input.axes {
        Some(a) => a,
        None => {
            eprintln!("seed: {}", cli.seed);
            let mut s = Sampler::new(cli.seed);
            (0..count)
                .map(|_| s.axis_through(&input.params.p))
                .collect()
        }
    };
    let mut csv = String::from("axis_id,n,t,f,bound\n");
    for (id, axis) in axes.iter().enumerate() {
        let audit = audit_axis_continuity(
            &input.params,
            axis,
            cli.samples,
            &input.inner_scale,
            cli.tol,
        )?;
        for s in &audit.samples {
            csv.push_str(&format!(
                "{id},{},{},{},{}\n",
                s.n,
                s.t.to_f64(),
                s.f,
                s.bound
            ));
        }
    }
    Ok(csv)
}

#[derive(Deserialize)]
struct WindingInput {
    #[serde(default, rename = "loop")]
    lp: Option<Loop>,
    #[serde(default)]
    parallelogram: Option<ParallelogramLoop>,
    x: Point,
    #[serde(default)]
    n: Option<i64>,
}

fn winding_cmd(cli: &Cli) -> CliResult<Value> {
    let input: WindingInput = cli.read_input()?;
    cli.check_dim(input.x.dim())?;
    match (input.lp, input.parallelogram) {
        (Some(lp), None) => {
            let lp = lp.power(input.n.unwrap_or(1))?;
            Ok(json!({"winding": winding(&lp, &input.x)?}))
        }
        (None, Some(p)) => {
            let n = input.n.unwrap_or(1);
            Ok(json!({"winding": power_winding(&p, n, &input.x)?, "n": n}))
        }
        _ => Err(CliError::Malformed(
            "give exactly one of \"loop\" or \"parallelogram\"".to_string(),
        )),
    }
}

#[derive(Deserialize)]
struct DistinguishInput {
    p1: ParallelogramLoop,
    p2: ParallelogramLoop,
}

fn distinguish_cmd(cli: &Cli) -> CliResult<Value> {
    let input: DistinguishInput = cli.read_input()?;
    cli.check_dim(input.p1.o.dim())?;
    let outcome = distinguish(&input.p1, &input.p2)?;
    Ok(to_value(&outcome))
}

#[derive(Deserialize)]
struct PathInput {
    p: Point,
    q: Point,
}

fn z_path_cmd(cli: &Cli) -> CliResult<Value> {
    let input: PathInput = cli.read_input()?;
    cli.check_dim(input.p.dim())?;
    let path = z_path(&input.p, &input.q)?;
    Ok(json!({"path": path, "verified": path.verify()?}))
}
