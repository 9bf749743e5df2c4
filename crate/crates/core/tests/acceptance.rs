//! The ten acceptance criteria, run as one test that reports a pass/fail
//! line per criterion on stderr.

use std::cmp::Ordering;
use std::io::Write;
use std::time::Instant;

use zkit_core::compactness::{decide_via_axes, decide_via_zeno, verify_certificate, Part};
use zkit_core::homotopy::{
    distinguish, power_winding, winding, z_path, DistinguishOutcome, ParallelogramLoop,
};
use zkit_core::minkowski::{
    causal_class, metric, CausalClass, PoincareMap, Point, QuadPoint, Vector,
};
use zkit_core::numerics::{Endpoint, OneDimSet, QuadExt, Rat};
use zkit_core::qe_cmp;
use zkit_core::region::{
    check_open_on_axes, rationalize, restrict_to_axis, restrict_to_line, zeeman_ball,
};
use zkit_core::sampling::Sampler;
use zkit_core::zeno::{
    classify, first_countability_refuter, separating_neighborhood, ExclusionProof, ZenoAnswer,
};
use zkit_core::zfunction::{audit_axis_continuity, eval_f, FCase, Profile, ZFParams};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn metric_exactness() -> Outcome {
    let mut s = Sampler::new(1);
    for i in 0..1000 {
        let dim = 2 + s.index(3);
        let v = Vector::new((0..dim).map(|_| s.small_rat()).collect());
        let w = Vector::new((0..dim).map(|_| s.small_rat()).collect());
        let axis = 1 + s.index(dim - 1);
        let m = s.slope();
        let boost = PoincareMap::boost(dim, axis, &m).map_err(|e| e.to_string())?;
        let (bv, bw) = (
            boost.apply_vector(&v).unwrap(),
            boost.apply_vector(&w).unwrap(),
        );
        ensure(metric(&bv, &bw).unwrap() == metric(&v, &w).unwrap(), || {
            format!("pair {i}: g changed under boost slope {m}")
        })?;
        ensure(causal_class(&bv) == causal_class(&v), || {
            format!("pair {i}: class changed")
        })?;
        let lambda = s.positive_rat(9, 4);
        let dil = PoincareMap::dilation(dim, lambda).unwrap();
        ensure(
            causal_class(&dil.apply_vector(&v).unwrap()) == causal_class(&v),
            || format!("pair {i}: class changed under dilation"),
        )?;
    }
    Ok("1000 boosts preserve g exactly; classes invariant under boosts and dilations".into())
}

fn zeeman_ball_certification() -> Outcome {
    let mut s = Sampler::new(2);
    let (mut through, mut total) = (0, 0);
    for _ in 0..5 {
        let p = s.point(2);
        let ball = zeeman_ball(&p, &s.positive_rat(5, 3)).unwrap();
        let mut axes = vec![];
        for i in 0..100 {
            if i < 30 {
                axes.push(s.axis_through(&p));
                through += 1;
            } else {
                axes.push(s.axis());
            }
        }
        let report = check_open_on_axes(ball.region(), &axes).map_err(|e| e.to_string())?;
        ensure(report.all_open, || {
            format!("non-open traces: {:?}", report.failures)
        })?;
        // Sampled membership agrees with the exact trace.
        for axis in &axes {
            let trace = restrict_to_axis(ball.region(), axis).unwrap();
            let dir = axis.line_dir().unwrap();
            for _ in 0..4 {
                let tau = s.rat(16, 8);
                let x = axis.base().along(dir, &tau);
                ensure(trace.contains_rat(&tau) == ball.contains(&x), || {
                    format!("trace disagrees with membership at {x:?}")
                })?;
            }
        }
        for ray in [[1, 1], [1, -1]] {
            let trace = restrict_to_line(ball.region(), &p, &Vector::from_ints(&ray)).unwrap();
            ensure(trace == OneDimSet::point(QuadExt::zero()), || {
                format!("light ray trace {trace:?} is not {{p}}")
            })?;
        }
        total += axes.len();
    }
    Ok(format!(
        "{total} axes ({through} through p) give open traces; light rays give {{p}}"
    ))
}

fn zeno_cross_check() -> Outcome {
    let mut s = Sampler::new(3);
    let mut yes = 0;
    for i in 0..200 {
        let f = s.family();
        let verdict = classify(&f).map_err(|e| e.to_string())?;
        let sep = separating_neighborhood(&f);
        ensure(sep.is_ok() == (verdict.is_zeno == ZenoAnswer::Yes), || {
            format!(
                "family {i}: verdict {:?} but separation {:?}",
                verdict.is_zeno, sep
            )
        })?;
        if let Ok(sep) = sep {
            yes += 1;
            let count = f.len().map_or(100, |n| n.min(100));
            ensure(sep.verify_prefix(&f, count).unwrap(), || {
                format!("family {i}: a point lies in the separating neighborhood")
            })?;
            if sep.proof == ExclusionProof::AllOnLightCone {
                let (_, v) = f.carrier().unwrap();
                ensure(causal_class(v) == CausalClass::Lightlike, || {
                    format!("family {i}: light-cone proof on a non-lightlike carrier")
                })?;
            }
        }
    }
    Ok(format!(
        "200 families, {yes} Zeno, every separation verified on 100 points"
    ))
}

fn compactness_equivalence() -> Outcome {
    let mut s = Sampler::new(4);
    let (mut compact, mut light) = (0, 0);
    for i in 0..500 {
        let k = s.candidate();
        let a = decide_via_axes(&k).map_err(|e| e.to_string())?;
        let z = decide_via_zeno(&k).map_err(|e| e.to_string())?;
        ensure(a.compact == z.compact, || {
            format!("candidate {i}: deciders disagree")
        })?;
        if a.compact {
            compact += 1;
            let cert = a
                .certificate
                .as_ref()
                .ok_or("compact verdict without certificate")?;
            ensure(verify_certificate(&k, cert), || {
                format!("candidate {i}: certificate fails verification")
            })?;
        }
        let has_light = k.parts.iter().any(|p| match p {
            Part::Segment { p, q } => causal_class(&(q - p)) == CausalClass::Lightlike,
            _ => false,
        });
        if has_light {
            light += 1;
            ensure(!a.compact, || {
                format!("candidate {i}: lightlike segment judged compact")
            })?;
        }
        let v = Vector::new(vec![s.small_rat(), s.small_rat()]);
        let moved = k.translate(&v);
        ensure(
            decide_via_axes(&moved).unwrap().compact == a.compact,
            || format!("candidate {i}: verdict changed under translation"),
        )?;
        ensure(
            decide_via_zeno(&moved).unwrap().compact == z.compact,
            || format!("candidate {i}: Zeno verdict changed under translation"),
        )?;
    }
    Ok(format!(
        "500 candidates agree ({compact} compact, certificates verified; {light} with lightlike segments)"
    ))
}

fn f_audits() -> Outcome {
    let mut s = Sampler::new(5);
    let p = s.point(2);
    let e = s.vector_of_class(CausalClass::Timelike);
    let params = ZFParams::new(p.clone(), e, 1.0, 1.0, Profile::Rational).unwrap();
    let mut worst_tail: f64 = 0.0;
    for i in 0..100 {
        let axis = s.axis_through(&p);
        let audit = audit_axis_continuity(&params, &axis, 64, &Rat::new(1, 2), 1e-12)
            .map_err(|e| e.to_string())?;
        ensure(audit.bound_ok && audit.min_margin >= -1e-12, || {
            format!("axis {i}: margin {}", audit.min_margin)
        })?;
        let tail = audit.tail_max_from(40).unwrap();
        worst_tail = worst_tail.max(tail);
        ensure(tail < 1e-6, || format!("axis {i}: tail max {tail}"))?;
        let lambda = s.nonzero_rat();
        let ray = Vector::new(vec![
            Rat::one(),
            if s.coin() { Rat::one() } else { -Rat::one() },
        ]);
        let on_cone = eval_f(&params, &p.along(&ray, &lambda)).unwrap();
        ensure(on_cone.f == 1.0 && on_cone.case == FCase::Cone, || {
            format!("cone value {}", on_cone.f)
        })?;
    }
    ensure(eval_f(&params, &p).unwrap().f == 0.0, || {
        "f(p) != 0".to_string()
    })?;
    Ok(format!(
        "100 axes respect the bound; worst tail max from n=40 is {worst_tail:.3e}"
    ))
}

fn random_parallelogram(s: &mut Sampler, o: &Point) -> ParallelogramLoop {
    let t = s.vector_of_class(CausalClass::Timelike);
    let sp = s.vector_of_class(CausalClass::Spacelike);
    ParallelogramLoop::new(o.clone(), t, sp).unwrap()
}

fn winding_suite() -> Outcome {
    let mut s = Sampler::new(6);
    let half = Rat::new(1, 2);
    for i in 0..100 {
        let o = s.point(2);
        let p = random_parallelogram(&mut s, &o);
        let center = &(&o + &p.t.scale(&half)) + &p.s.scale(&half);
        let w = winding(&p.to_loop(), &center).map_err(|e| e.to_string())?;
        ensure(w.abs() == 1, || format!("pair {i}: center winding {w}"))?;
        for n in -3..=3 {
            let pw = power_winding(&p, n, &center).map_err(|e| format!("pair {i}, n={n}: {e}"))?;
            ensure(pw == n * w, || format!("pair {i}: power {n} gives {pw}"))?;
        }
    }
    let mut certs = 0;
    while certs < 100 {
        let o = s.point(2);
        let p1 = random_parallelogram(&mut s, &o);
        let p2 = random_parallelogram(&mut s, &o);
        if p1.same_region(&p2) {
            continue;
        }
        match distinguish(&p1, &p2).map_err(|e| e.to_string())? {
            DistinguishOutcome::Certificate(c) => {
                ensure(c.verify(&p1, &p2).unwrap(), || {
                    format!("certificate {certs} fails")
                })?;
            }
            DistinguishOutcome::NotSeparableByWinding => {
                return Err(format!(
                    "pair {certs}: distinct regions reported inseparable"
                ));
            }
        }
        certs += 1;
    }
    Ok("100 centers wind once; powers -3..3 agree; 100 certificates self-verify".into())
}

/// An interior point of `c` near `p`: rational, with one irrational
/// coordinate, or with both irrational.
fn interior_quad_point(
    s: &mut Sampler,
    c: &zkit_core::region::CertifiedOpen,
    p: &Point,
) -> QuadPoint {
    let root = QuadExt::sqrt_of(&Rat::from_int([2, 3, 5][s.index(3)])).unwrap();
    let mode = s.index(3);
    let (a, b) = (s.nonzero_rat(), s.nonzero_rat());
    for k in 1..40 {
        let delta = Rat::new(1, 1i64 << k);
        let offset = |r: &Rat, irrational: bool| {
            let r = r * &delta;
            if irrational {
                root.mul_rat(&r)
            } else {
                QuadExt::rational(r)
            }
        };
        let coords = vec![
            offset(&a, mode >= 1).add_rat(&p.0[0]),
            offset(&b, mode == 2).add_rat(&p.0[1]),
        ];
        let q = QuadPoint::new(coords).unwrap();
        if c.region().contains_quad(&q).unwrap() {
            return q;
        }
    }
    QuadPoint::from(p.clone())
}

fn density() -> Outcome {
    let mut s = Sampler::new(7);
    let mut irrational = 0;
    for i in 0..100 {
        let p = s.point(2);
        let c = s.certified_open(&p);
        let q = interior_quad_point(&mut s, &c, &p);
        if q.as_point().is_none() {
            irrational += 1;
        }
        let r = rationalize(&c, &q).map_err(|e| format!("open {i}: {e}"))?;
        ensure(c.contains(&r), || format!("open {i}: {r:?} not in the set"))?;
    }
    Ok(format!(
        "100 rationalizations ({irrational} from irrational points) land in their sets"
    ))
}

fn refuter() -> Outcome {
    let mut s = Sampler::new(8);
    for len in 1..=10 {
        let p = s.point(2);
        let r = s.positive_rat(4, 1);
        let chain: Vec<_> = (1..=len)
            .map(|i| zeeman_ball(&p, &(&r / &Rat::from_int(i))).unwrap())
            .collect();
        let report = first_countability_refuter(&chain, &p).map_err(|e| e.to_string())?;
        ensure(report.witnesses.len() == len as usize, || {
            "missing witnesses".to_string()
        })?;
        ensure(report.u.contains(&p), || "p not in U".to_string())?;
        for w in &report.witnesses {
            ensure(
                chain[w.n_j].contains(&w.point) && !report.u.contains(&w.point),
                || format!("length {len}: witness {} fails", w.j),
            )?;
        }
    }
    Ok("chains of length 1..10 refuted with exact witnesses".into())
}

fn z_paths() -> Outcome {
    let mut s = Sampler::new(9);
    let mut lightlike = 0;
    for i in 0..200 {
        let p = s.point(2);
        let q = match i % 4 {
            0 | 1 => {
                lightlike += 1;
                &p + &s.vector_of_class(CausalClass::Lightlike)
            }
            2 => s.point(2),
            _ => {
                let class = s.nonlight_class();
                &p + &s.vector_of_class(class)
            }
        };
        let path = z_path(&p, &q).map_err(|e| e.to_string())?;
        ensure(path.segment_count() <= 2 && path.verify().unwrap(), || {
            format!("pair {i}: bad path {path:?}")
        })?;
        ensure(
            path.vertices[0] == p && path.vertices.last() == Some(&q),
            || format!("pair {i}: endpoints differ"),
        )?;
    }
    Ok(format!(
        "200 paths ({lightlike} lightlike pairs) use ≤ 2 non-lightlike segments"
    ))
}

fn random_quad(s: &mut Sampler) -> QuadExt {
    let a = s.rat(20, 6);
    if s.index(3) == 0 {
        return QuadExt::rational(a);
    }
    let c = Rat::from_int([2, 3, 5][s.index(3)]);
    QuadExt::new(a, s.rat(8, 6), c).unwrap()
}

fn random_set(s: &mut Sampler) -> OneDimSet {
    let mut set = OneDimSet::empty();
    for _ in 0..s.index(4) {
        let piece = if s.index(4) == 0 {
            OneDimSet::point(random_quad(s))
        } else {
            let (x, y) = (random_quad(s), random_quad(s));
            let (lo, hi) = if qe_cmp(&x, &y) == Ordering::Greater {
                (y, x)
            } else {
                (x, y)
            };
            let lo = if s.index(6) == 0 {
                Endpoint::NegInf
            } else {
                Endpoint::Finite(lo)
            };
            let hi = if s.index(6) == 0 {
                Endpoint::PosInf
            } else {
                Endpoint::Finite(hi)
            };
            let (lc, hc) = (s.coin(), s.coin());
            OneDimSet::interval(lo, hi, lc, hc).unwrap_or_else(|_| OneDimSet::empty())
        };
        set = set.union(&piece);
    }
    set
}

fn bracket(x: &QuadExt) -> (f64, f64) {
    let v = x.to_f64();
    let slack = 1e-9 * (1.0 + x.a().to_f64().abs() + x.b().to_f64().abs() * 3.0);
    (v - slack, v + slack)
}

fn set_algebra() -> Outcome {
    let mut s = Sampler::new(10);
    for i in 0..10_000 {
        let (a, b) = (random_set(&mut s), random_set(&mut s));
        ensure(
            a.union(&b).complement() == a.complement().intersect(&b.complement()),
            || format!("pair {i}: De Morgan (union) fails for {a:?}, {b:?}"),
        )?;
        ensure(
            a.intersect(&b).complement() == a.complement().union(&b.complement()),
            || format!("pair {i}: De Morgan (intersection) fails"),
        )?;
        ensure(a.complement().complement() == a, || {
            format!("pair {i}: double complement")
        })?;
        ensure(a.is_open() == a.complement().is_closed(), || {
            format!("pair {i}: duality")
        })?;
    }
    let (mut decided, mut ties) = (0, 0);
    for i in 0..10_000 {
        let x = random_quad(&mut s);
        let y = if s.index(10) == 0 {
            x.clone()
        } else {
            random_quad(&mut s)
        };
        let exact = qe_cmp(&x, &y);
        let ((xl, xh), (yl, yh)) = (bracket(&x), bracket(&y));
        let oracle = if xh < yl {
            Some(Ordering::Less)
        } else if yh < xl {
            Some(Ordering::Greater)
        } else {
            None
        };
        match oracle {
            Some(o) => {
                decided += 1;
                ensure(o == exact, || {
                    format!("pair {i}: qe_cmp {exact:?} vs oracle {o:?}")
                })?;
            }
            None => {
                ties += 1;
                ensure(
                    exact == Ordering::Equal || (x.to_f64() - y.to_f64()).abs() < 1e-6,
                    || format!("pair {i}: overlapping brackets"),
                )?;
            }
        }
    }
    Ok(format!(
        "10^4 set pairs satisfy the identities; qe_cmp matches the oracle on {decided} decided pairs ({ties} within bracket width)"
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("metric exactness", metric_exactness),
        ("Zeeman-ball certification", zeeman_ball_certification),
        ("Zeno classification cross-check", zeno_cross_check),
        ("compactness equivalence", compactness_equivalence),
        ("function f audits", f_audits),
        ("winding suite", winding_suite),
        ("density", density),
        ("first-countability refuter", refuter),
        ("Z-path", z_paths),
        ("one-dimensional set algebra", set_algebra),
    ];
    let mut failed = vec![];
    let mut err = std::io::stderr();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        writeln!(
            err,
            "criterion {:>2} [{tag}] {name} ({secs:.2}s): {detail}",
            i + 1
        )
        .unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
