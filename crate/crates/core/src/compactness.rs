//! Zeeman compactness of finite unions of points, closed segments and
//! completed sequence images in 1+1 spacetime, decided two ways: by a
//! finite axis cover with compact traces, and by Zeno-freeness.

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZkitError};
use crate::minkowski::{
    causal_class, line_parameter, meet_lines, require_k1, Axis, CausalClass, LineMeet, Point,
    Vector,
};
use crate::numerics::{OneDimSet, QuadExt, Rat};
use crate::region::{restrict_to_line, CertifiedOpen, Region};
use crate::zeno::{classify, zeno_inside_open, SequenceFamily, ZenoAnswer, ZenoVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Part {
    Point {
        at: Point,
    },
    Segment {
        p: Point,
        q: Point,
    },
    /// The image of the family together with its limit.
    CompletedZeno {
        family: SequenceFamily,
    },
}

impl Part {
    pub fn translate(&self, v: &Vector) -> Part {
        match self {
            Part::Point { at } => Part::Point { at: at + v },
            Part::Segment { p, q } => Part::Segment { p: p + v, q: q + v },
            Part::CompletedZeno { family } => Part::CompletedZeno {
                family: family.translate(v),
            },
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Part::Point { at } => require_k1(at.dim()),
            Part::Segment { p, q } => {
                require_k1(p.dim())?;
                q.ensure_dim(2)?;
                if p == q {
                    return Err(ZkitError::InvalidParameter(
                        "zero-length segment; use a point part".to_string(),
                    ));
                }
                Ok(())
            }
            Part::CompletedZeno { family } => {
                require_k1(family.limit().dim())?;
                family.validate()
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactCandidate {
    pub parts: Vec<Part>,
}

impl CompactCandidate {
    pub fn new(parts: Vec<Part>) -> Self {
        CompactCandidate { parts }
    }

    pub fn validate(&self) -> Result<()> {
        self.parts.iter().try_for_each(Part::validate)
    }

    pub fn translate(&self, v: &Vector) -> CompactCandidate {
        CompactCandidate {
            parts: self.parts.iter().map(|p| p.translate(v)).collect(),
        }
    }
}

/// Parameters `limit + scale·ratioⁿ` (`n ≥ 0`) together with `limit`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceTrace {
    pub limit: Rat,
    pub scale: Rat,
    pub ratio: Rat,
}

/// The trace of a candidate on an axis: a finite union of closed pieces
/// plus convergent sequences with their limits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisTrace {
    pub set: OneDimSet,
    pub sequences: Vec<SequenceTrace>,
}

impl AxisTrace {
    /// Each sequence is compact with its limit, so compactness rests on the
    /// finite part.
    pub fn is_compact(&self) -> bool {
        self.set.is_compact_1d()
            && self
                .sequences
                .iter()
                .all(|s| s.ratio.in_open_unit_interval())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisCoverCertificate {
    pub axes: Vec<Axis>,
    pub traces: Vec<AxisTrace>,
    /// For each part, the axes covering it.
    pub coverage: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Counterexample {
    /// A lightlike segment contains the completed image of `witness`.
    LightlikeSegment {
        part: usize,
        p: Point,
        q: Point,
        witness: SequenceFamily,
    },
    ZenoPart {
        part: usize,
        family: SequenceFamily,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    AxisCover,
    ZenoFree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartZenoCheck {
    pub part: usize,
    pub verdict: Option<ZenoVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactnessVerdict {
    pub compact: bool,
    pub route: Route,
    pub reasoning: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<AxisCoverCertificate>,
    /// Per-part evidence of the Zeno route for compact verdicts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeno_free: Option<Vec<PartZenoCheck>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

fn inside_ratio() -> Rat {
    Rat::new(1, 2)
}

fn lightlike_witness(p: &Point, q: &Point) -> SequenceFamily {
    SequenceFamily::ConeSequence {
        p: p.clone(),
        dir: q - p,
        ratio: inside_ratio(),
    }
}

fn vertical_axis(at: &Point) -> Axis {
    Axis::TimelikeLine {
        base: at.clone(),
        dir: Vector::basis(2, 0),
    }
}

fn push_axis(axes: &mut Vec<Axis>, axis: Axis) -> usize {
    if let Some(i) = axes.iter().position(|a| a == &axis) {
        return i;
    }
    axes.push(axis);
    axes.len() - 1
}

fn not_compact(route: Route, reasoning: Vec<String>, cx: Counterexample) -> CompactnessVerdict {
    CompactnessVerdict {
        compact: false,
        route,
        reasoning,
        certificate: None,
        zeno_free: None,
        counterexample: Some(cx),
    }
}

/// Searches for a finite axis cover whose traces are compact.
pub fn decide_via_axes(k: &CompactCandidate) -> Result<CompactnessVerdict> {
    k.validate()?;
    let mut axes = vec![];
    let mut coverage = vec![];
    for (i, part) in k.parts.iter().enumerate() {
        let covering = match part {
            Part::Point { at } => vec![push_axis(&mut axes, vertical_axis(at))],
            Part::Segment { p, q } => match Axis::line(p.clone(), q - p) {
                Ok(axis) => vec![push_axis(&mut axes, axis)],
                Err(_) => {
                    return Ok(not_compact(
                        Route::AxisCover,
                        vec![format!(
                            "part {i} lies on a light ray, which meets every axis in at most one point; no finite axis family covers it"
                        )],
                        Counterexample::LightlikeSegment {
                            part: i,
                            p: p.clone(),
                            q: q.clone(),
                            witness: lightlike_witness(p, q),
                        },
                    ))
                }
            },
            Part::CompletedZeno { family } => match family {
                SequenceFamily::FinitePrefix { points, limit } => points
                    .iter()
                    .chain(std::iter::once(limit))
                    .map(|x| push_axis(&mut axes, vertical_axis(x)))
                    .collect(),
                SequenceFamily::GeometricOnLine { p, v, .. }
                    if causal_class(v) != CausalClass::Lightlike =>
                {
                    vec![push_axis(&mut axes, Axis::line(p.clone(), v.clone())?)]
                }
                _ => {
                    return Ok(not_compact(
                        Route::AxisCover,
                        vec![format!(
                            "part {i} has infinitely many points while every axis meets it in finitely many; no finite axis family covers it"
                        )],
                        Counterexample::ZenoPart {
                            part: i,
                            family: family.clone(),
                        },
                    ))
                }
            },
        };
        coverage.push(covering);
    }
    let traces = axes
        .iter()
        .map(|a| trace_on_axis(k, a))
        .collect::<Result<Vec<_>>>()?;
    if let Some(j) = traces.iter().position(|t| !t.is_compact()) {
        return Err(ZkitError::InvariantViolation(format!(
            "trace on axis {j} is not compact"
        )));
    }
    Ok(CompactnessVerdict {
        compact: true,
        route: Route::AxisCover,
        reasoning: vec![format!(
            "{} axes cover all {} parts and every trace is closed and bounded",
            axes.len(),
            k.parts.len()
        )],
        certificate: Some(AxisCoverCertificate {
            axes,
            traces,
            coverage,
        }),
        zeno_free: None,
        counterexample: None,
    })
}

/// Compact in the natural topology plus free of completed Zeno images.
pub fn decide_via_zeno(k: &CompactCandidate) -> Result<CompactnessVerdict> {
    k.validate()?;
    let mut reasoning = vec![
        "every candidate of this class is closed and bounded, hence compact in the natural topology"
            .to_string(),
    ];
    let mut checks = vec![];
    for (i, part) in k.parts.iter().enumerate() {
        match part {
            Part::Point { .. } => checks.push(PartZenoCheck {
                part: i,
                verdict: None,
            }),
            Part::Segment { p, q } => {
                if causal_class(&(q - p)) == CausalClass::Lightlike {
                    let witness = lightlike_witness(p, q);
                    debug_assert_eq!(classify(&witness)?.is_zeno, ZenoAnswer::Yes);
                    reasoning.push(format!(
                        "part {i} is lightlike and contains the completed image of a Zeno sequence along itself"
                    ));
                    return Ok(not_compact(
                        Route::ZenoFree,
                        reasoning,
                        Counterexample::LightlikeSegment {
                            part: i,
                            p: p.clone(),
                            q: q.clone(),
                            witness,
                        },
                    ));
                }
                checks.push(PartZenoCheck {
                    part: i,
                    verdict: None,
                })
            }
            Part::CompletedZeno { family } => {
                let verdict = classify(family)?;
                if verdict.is_zeno == ZenoAnswer::Yes {
                    reasoning.push(format!(
                        "part {i} is the completed image of a Zeno sequence"
                    ));
                    return Ok(not_compact(
                        Route::ZenoFree,
                        reasoning,
                        Counterexample::ZenoPart {
                            part: i,
                            family: family.clone(),
                        },
                    ));
                }
                checks.push(PartZenoCheck {
                    part: i,
                    verdict: Some(verdict),
                });
            }
        }
    }
    reasoning.push("no part is or contains the completed image of a Zeno sequence".to_string());
    Ok(CompactnessVerdict {
        compact: true,
        route: Route::ZenoFree,
        reasoning,
        certificate: None,
        zeno_free: Some(checks),
        counterexample: None,
    })
}

/// The trace of the whole candidate on a line axis.
pub fn trace_on_axis(k: &CompactCandidate, axis: &Axis) -> Result<AxisTrace> {
    let dir = axis.line_dir().ok_or(ZkitError::UnsupportedDimension {
        required: 1,
        found: axis.base().dim().saturating_sub(1),
    })?;
    let base = axis.base();
    let mut set = OneDimSet::empty();
    let mut sequences = vec![];
    for part in &k.parts {
        match part {
            Part::Point { at } => {
                if let Some(t) = line_parameter(base, dir, at) {
                    set = set.union(&OneDimSet::point(QuadExt::rational(t)));
                }
            }
            Part::Segment { p, q } => {
                let seg = Region::ClosedSegment {
                    p: p.clone(),
                    q: q.clone(),
                };
                set = set.union(&restrict_to_line(&seg, base, dir)?);
            }
            Part::CompletedZeno { family } => {
                let on_carrier = family
                    .carrier()
                    .filter(|(p, v)| meet_lines(base, dir, p, v) == LineMeet::Same);
                if let (
                    Some((p, v)),
                    SequenceFamily::GeometricOnLine { ratio, .. }
                    | SequenceFamily::ConeSequence { ratio, .. },
                ) = (on_carrier, family)
                {
                    let limit = line_parameter(base, dir, p).expect("on carrier");
                    let scale = line_parameter(&Point::zero(2), dir, &Point::new(v.0.clone()))
                        .expect("parallel");
                    sequences.push(SequenceTrace {
                        limit,
                        scale,
                        ratio: ratio.clone(),
                    });
                    continue;
                }
                let mut pts: Vec<QuadExt> = family
                    .params_on_line(base, dir)?
                    .into_iter()
                    .map(QuadExt::rational)
                    .collect();
                if let Some(t) = line_parameter(base, dir, family.limit()) {
                    pts.push(QuadExt::rational(t));
                }
                set = set.union(&OneDimSet::points(pts));
            }
        }
    }
    Ok(AxisTrace { set, sequences })
}

fn part_covered(part: &Part, axes: &[&Axis]) -> Result<bool> {
    let on_some = |x: &Point| -> Result<bool> {
        for a in axes {
            if a.contains(x)? {
                return Ok(true);
            }
        }
        Ok(false)
    };
    Ok(match part {
        Part::Point { at } => on_some(at)?,
        Part::Segment { p, q } => {
            let mut hit = false;
            for a in axes {
                if a.contains(p)? && a.contains(q)? {
                    hit = true;
                }
            }
            hit
        }
        Part::CompletedZeno { family } => match family {
            SequenceFamily::FinitePrefix { points, limit } => {
                let mut all = on_some(limit)?;
                for x in points {
                    all = all && on_some(x)?;
                }
                all
            }
            _ => match family.carrier() {
                Some((p, v)) => axes.iter().any(|a| {
                    a.line_dir()
                        .is_some_and(|d| meet_lines(a.base(), d, p, v) == LineMeet::Same)
                }),
                None => false,
            },
        },
    })
}

/// Exact re-check of a cover certificate: the axes are axes, each part lies
/// in its listed axes, and every trace is recomputed and compact.
pub fn verify_certificate(k: &CompactCandidate, cert: &AxisCoverCertificate) -> bool {
    if k.validate().is_err()
        || cert.coverage.len() != k.parts.len()
        || cert.traces.len() != cert.axes.len()
    {
        return false;
    }
    for axis in &cert.axes {
        let valid = match axis {
            Axis::TimelikeLine { base, dir } => Axis::timelike(base.clone(), dir.clone()).is_ok(),
            Axis::SpacelikeFlat { base, dirs } => {
                Axis::spacelike(base.clone(), dirs.clone()).is_ok()
            }
        };
        if !valid || axis.base().dim() != 2 {
            return false;
        }
    }
    for (part, cover) in k.parts.iter().zip(&cert.coverage) {
        let Some(listed) = cover
            .iter()
            .map(|&j| cert.axes.get(j))
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        if !matches!(part_covered(part, &listed), Ok(true)) {
            return false;
        }
    }
    cert.axes.iter().zip(&cert.traces).all(|(axis, trace)| {
        matches!(trace_on_axis(k, axis), Ok(t) if &t == trace) && trace.is_compact()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCompactnessWitness {
    pub family: SequenceFamily,
    pub verdict: ZenoVerdict,
}

/// A Zeno family inside `c` converging to `p`: a compact set containing
/// `c` would contain its completed image.
pub fn not_locally_compact_witness(
    c: &CertifiedOpen,
    p: &Point,
) -> Result<LocalCompactnessWitness> {
    let family = zeno_inside_open(c, p)?;
    let verdict = classify(&family)?;
    Ok(LocalCompactnessWitness { family, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::zeeman_ball;

    fn pt(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    fn seg(p: &[i64], q: &[i64]) -> Part {
        Part::Segment { p: pt(p), q: pt(q) }
    }

    fn both(k: &CompactCandidate) -> (CompactnessVerdict, CompactnessVerdict) {
        (decide_via_axes(k).unwrap(), decide_via_zeno(k).unwrap())
    }

    #[test]
    fn timelike_segment() {
        let k = CompactCandidate::new(vec![seg(&[0, 0], &[2, 1])]);
        let (a, z) = both(&k);
        assert!(a.compact && z.compact);
        let cert = a.certificate.unwrap();
        assert_eq!(cert.axes.len(), 1);
        assert!(verify_certificate(&k, &cert));
    }

    #[test]
    fn lightlike_segment() {
        let k = CompactCandidate::new(vec![seg(&[0, 0], &[1, 1])]);
        let (a, z) = both(&k);
        assert!(!a.compact && !z.compact);
        assert!(matches!(
            a.counterexample,
            Some(Counterexample::LightlikeSegment { .. })
        ));
    }

    #[test]
    fn empty_candidate() {
        let (a, z) = both(&CompactCandidate::default());
        assert!(a.compact && z.compact);
        assert!(a.certificate.unwrap().axes.is_empty());
    }

    #[test]
    fn mixed_and_sequences() {
        let k = CompactCandidate::new(vec![Part::Point { at: pt(&[5, 5]) }, seg(&[0, 0], &[1, 3])]);
        let (a, z) = both(&k);
        assert!(a.compact && z.compact);
        let rot = CompactCandidate::new(vec![Part::CompletedZeno {
            family: SequenceFamily::RotatingAxial {
                p: pt(&[0, 0]),
                ratio: Rat::new(1, 2),
            },
        }]);
        let (a, z) = both(&rot);
        assert!(!a.compact && !z.compact);
        assert!(matches!(
            z.counterexample,
            Some(Counterexample::ZenoPart { .. })
        ));
        let geo = CompactCandidate::new(vec![
            Part::CompletedZeno {
                family: SequenceFamily::GeometricOnLine {
                    p: pt(&[0, 0]),
                    v: Vector::from_ints(&[1, 0]),
                    ratio: Rat::new(1, 3),
                },
            },
            Part::Point { at: pt(&[0, 0]) },
        ]);
        let (a, z) = both(&geo);
        assert!(a.compact && z.compact);
        let cert = a.certificate.unwrap();
        assert_eq!(cert.axes.len(), 1);
        assert_eq!(cert.traces[0].sequences.len(), 1);
        assert!(verify_certificate(&geo, &cert));
    }

    #[test]
    fn tampered_certificates_fail() {
        let k = CompactCandidate::new(vec![seg(&[0, 0], &[2, 1]), Part::Point { at: pt(&[7, 0]) }]);
        let cert = decide_via_axes(&k).unwrap().certificate.unwrap();
        assert!(verify_certificate(&k, &cert));
        let mut dropped = cert.clone();
        dropped.axes.pop();
        dropped.traces.pop();
        assert!(!verify_certificate(&k, &dropped));
        let mut widened = cert.clone();
        widened.traces[0].set = OneDimSet::open(QuadExt::zero(), QuadExt::from_int(1)).unwrap();
        assert!(!verify_certificate(&k, &widened));
    }

    #[test]
    fn local_compactness_witness() {
        let p = pt(&[0, 0]);
        let w = not_locally_compact_witness(&zeeman_ball(&p, &Rat::one()).unwrap(), &p).unwrap();
        assert_eq!(w.verdict.is_zeno, ZenoAnswer::Yes);
        assert!(
            not_locally_compact_witness(&zeeman_ball(&p, &Rat::one()).unwrap(), &pt(&[3, 0]))
                .is_err()
        );
    }
}
