//! Symbolic spacetime subsets, their exact traces on lines, and certified
//! Zeeman-open sets.

mod certified;
mod rationalize;

pub use certified::{
    check_open_on_axes, zeeman_ball, AxisFailure, CertifiedOpen, OpenCheckReport, Removed, Witness,
};
pub use rationalize::rationalize;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZkitError};
use crate::minkowski::{
    causal_class, line_cone_params, line_parameter, meet_lines, on_light_cone, require_k1,
    CausalClass, LineMeet, Point, QuadPoint, Vector,
};
use crate::numerics::{quadratic_roots, OneDimSet, QuadExt, QuadraticRoots, Rat};
use crate::zeno::SequenceFamily;

/// A finite expression tree over elementary subsets of spacetime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    /// Euclidean ball in frame coordinates, boundary excluded.
    OpenBall {
        center: Point,
        radius: Rat,
    },
    /// The light cone `C(vertex)`, vertex included.
    Cone {
        vertex: Point,
    },
    /// The full lightlike line `base + ℝ·dir`.
    LightRay {
        base: Point,
        dir: Vector,
    },
    Singleton {
        at: Point,
    },
    /// `{p + s(q - p) : s ∈ [0, 1]}`.
    ClosedSegment {
        p: Point,
        q: Point,
    },
    /// The full line `base + ℝ·dir` for any nonzero `dir`.
    FullLine {
        base: Point,
        dir: Vector,
    },
    /// `{o + λt + μs : λ, μ ∈ [0, 1]}`.
    ClosedParallelogram {
        o: Point,
        t: Vector,
        s: Vector,
    },
    Everything,
    Nothing,
    Union {
        members: Vec<Region>,
    },
    Intersection {
        members: Vec<Region>,
    },
    Difference {
        base: Box<Region>,
        removed: Box<Region>,
    },
    /// Points of a sequence family, plus the limit when `completed`.
    SequenceImage {
        family: SequenceFamily,
        completed: bool,
    },
}

impl Region {
    /// Checks leaf parameter invariants throughout the tree.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(ZkitError::InvalidParameter(m.to_string()));
        match self {
            Region::OpenBall { radius, .. } => {
                if !radius.is_positive() {
                    return bad("ball radius must be positive");
                }
                Ok(())
            }
            Region::LightRay { base, dir } => {
                dir.ensure_dim(base.dim())?;
                if causal_class(dir) != CausalClass::Lightlike {
                    return bad("light ray needs a lightlike direction");
                }
                Ok(())
            }
            Region::ClosedSegment { p, q } => q.ensure_dim(p.dim()),
            Region::FullLine { base, dir } => {
                dir.ensure_dim(base.dim())?;
                if dir.is_zero() {
                    return Err(ZkitError::ZeroDirection);
                }
                Ok(())
            }
            Region::ClosedParallelogram { o, t, s } => {
                t.ensure_dim(o.dim())?;
                s.ensure_dim(o.dim())?;
                if causal_class(t) != CausalClass::Timelike {
                    return bad("parallelogram edge t must be timelike");
                }
                if causal_class(s) != CausalClass::Spacelike {
                    return bad("parallelogram edge s must be spacelike");
                }
                Ok(())
            }
            Region::Cone { .. }
            | Region::Singleton { .. }
            | Region::Everything
            | Region::Nothing => Ok(()),
            Region::Union { members } | Region::Intersection { members } => {
                members.iter().try_for_each(Region::validate)
            }
            Region::Difference { base, removed } => {
                base.validate()?;
                removed.validate()
            }
            Region::SequenceImage { family, .. } => family.validate(),
        }
    }

    /// Exact membership.
    pub fn contains(&self, x: &Point) -> bool {
        match self {
            Region::OpenBall { center, radius } => {
                let d2 = x
                    .coords()
                    .iter()
                    .zip(center.coords())
                    .fold(Rat::zero(), |acc, (a, c)| acc + (a - c).square());
                d2 < radius.square()
            }
            Region::Cone { vertex } => on_light_cone(x, vertex),
            Region::LightRay { base, dir } | Region::FullLine { base, dir } => {
                line_parameter(base, dir, x).is_some()
            }
            Region::Singleton { at } => at == x,
            Region::ClosedSegment { p, q } => {
                if p == q {
                    return x == p;
                }
                line_parameter(p, &(q - p), x).is_some_and(|s| !s.is_negative() && s <= Rat::one())
            }
            Region::ClosedParallelogram { o, t, s } => match solve_2x2(t, s, &(x - o)) {
                Some((l, m)) => in_unit(&l) && in_unit(&m),
                None => false,
            },
            Region::Everything => true,
            Region::Nothing => false,
            Region::Union { members } => members.iter().any(|r| r.contains(x)),
            Region::Intersection { members } => members.iter().all(|r| r.contains(x)),
            Region::Difference { base, removed } => base.contains(x) && !removed.contains(x),
            Region::SequenceImage { family, completed } => {
                (*completed && family.limit() == x) || matches!(family.index_of(x), Ok(Some(_)))
            }
        }
    }

    /// Membership of a point with quadratic-irrational coordinates, decided
    /// on the rational line carrying it.
    pub fn contains_quad(&self, x: &QuadPoint) -> Result<bool> {
        match x.as_line_point() {
            None => Ok(self.contains(&x.as_point().expect("rational"))),
            Some((base, dir, s)) => Ok(restrict_to_line(self, &base, &dir)?.contains(&s)),
        }
    }

    pub fn translate(&self, v: &Vector) -> Region {
        match self {
            Region::OpenBall { center, radius } => Region::OpenBall {
                center: center + v,
                radius: radius.clone(),
            },
            Region::Cone { vertex } => Region::Cone { vertex: vertex + v },
            Region::LightRay { base, dir } => Region::LightRay {
                base: base + v,
                dir: dir.clone(),
            },
            Region::Singleton { at } => Region::Singleton { at: at + v },
            Region::ClosedSegment { p, q } => Region::ClosedSegment { p: p + v, q: q + v },
            Region::FullLine { base, dir } => Region::FullLine {
                base: base + v,
                dir: dir.clone(),
            },
            Region::ClosedParallelogram { o, t, s } => Region::ClosedParallelogram {
                o: o + v,
                t: t.clone(),
                s: s.clone(),
            },
            Region::Everything => Region::Everything,
            Region::Nothing => Region::Nothing,
            Region::Union { members } => Region::Union {
                members: members.iter().map(|r| r.translate(v)).collect(),
            },
            Region::Intersection { members } => Region::Intersection {
                members: members.iter().map(|r| r.translate(v)).collect(),
            },
            Region::Difference { base, removed } => Region::Difference {
                base: Box::new(base.translate(v)),
                removed: Box::new(removed.translate(v)),
            },
            Region::SequenceImage { family, completed } => Region::SequenceImage {
                family: family.translate(v),
                completed: *completed,
            },
        }
    }
}

fn in_unit(x: &Rat) -> bool {
    !x.is_negative() && x <= &Rat::one()
}

/// `(λ, μ)` with `λ·t + μ·s = w` in the plane, if `t`, `s` are independent.
pub(crate) fn solve_2x2(t: &Vector, s: &Vector, w: &Vector) -> Option<(Rat, Rat)> {
    let det = &t.0[0] * &s.0[1] - &t.0[1] * &s.0[0];
    if det.is_zero() {
        return None;
    }
    let l = (&w.0[0] * &s.0[1] - &w.0[1] * &s.0[0]) / &det;
    let m = (&t.0[0] * &w.0[1] - &t.0[1] * &w.0[0]) / &det;
    Some((l, m))
}

fn rat_point(t: Rat) -> OneDimSet {
    OneDimSet::point(QuadExt::rational(t))
}

/// Parameters `τ` with `lo ≤ a + b·τ ≤ hi` (`a`, `b` rational).
fn affine_band(a: &Rat, b: &Rat, lo: &Rat, hi: &Rat) -> Result<OneDimSet> {
    if b.is_zero() {
        return Ok(if a >= lo && a <= hi {
            OneDimSet::everything()
        } else {
            OneDimSet::empty()
        });
    }
    let x = (lo - a) / b;
    let y = (hi - a) / b;
    OneDimSet::closed_rat(&Rat::min_of(&x, &y), &Rat::max_of(&x, &y))
}

fn full_line_trace(lb: &Point, ld: &Vector, base: &Point, dir: &Vector) -> OneDimSet {
    match meet_lines(base, dir, lb, ld) {
        LineMeet::Same => OneDimSet::everything(),
        LineMeet::Parallel => OneDimSet::empty(),
        LineMeet::At(t, _) => rat_point(t),
    }
}

/// The trace of `r` on the line `base + t·dir` in 1+1 spacetime, as a set of
/// parameters `t`.
pub fn restrict_to_line(r: &Region, base: &Point, dir: &Vector) -> Result<OneDimSet> {
    require_k1(base.dim())?;
    dir.ensure_dim(2)?;
    if dir.is_zero() {
        return Err(ZkitError::ZeroDirection);
    }
    restrict_inner(r, base, dir)
}

fn restrict_inner(r: &Region, base: &Point, dir: &Vector) -> Result<OneDimSet> {
    Ok(match r {
        Region::OpenBall { center, radius } => {
            let w = base - center;
            let dot = |a: &Vector, b: &Vector| {
                a.0.iter()
                    .zip(&b.0)
                    .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
            };
            let a = dot(dir, dir);
            let b = Rat::from_int(2) * dot(dir, &w);
            let c = dot(&w, &w) - radius.square();
            match quadratic_roots(&a, &b, &c) {
                QuadraticRoots::Finite(roots) if roots.len() == 2 => {
                    OneDimSet::open(roots[0].clone(), roots[1].clone())?
                }
                _ => OneDimSet::empty(),
            }
        }
        Region::Cone { vertex } => match line_cone_params(base, dir, vertex)? {
            QuadraticRoots::AllReals => OneDimSet::everything(),
            QuadraticRoots::Finite(roots) => OneDimSet::points(roots),
        },
        Region::LightRay { base: lb, dir: ld } | Region::FullLine { base: lb, dir: ld } => {
            full_line_trace(lb, ld, base, dir)
        }
        Region::Singleton { at } => match line_parameter(base, dir, at) {
            Some(t) => rat_point(t),
            None => OneDimSet::empty(),
        },
        Region::ClosedSegment { p, q } => {
            if p == q {
                return restrict_inner(&Region::Singleton { at: p.clone() }, base, dir);
            }
            let sd = q - p;
            match meet_lines(base, dir, p, &sd) {
                LineMeet::Parallel => OneDimSet::empty(),
                LineMeet::At(t, s) => {
                    if in_unit(&s) {
                        rat_point(t)
                    } else {
                        OneDimSet::empty()
                    }
                }
                LineMeet::Same => {
                    let tp = line_parameter(base, dir, p).expect("on line");
                    let tq = line_parameter(base, dir, q).expect("on line");
                    OneDimSet::closed_rat(&Rat::min_of(&tp, &tq), &Rat::max_of(&tp, &tq))?
                }
            }
        }
        Region::ClosedParallelogram { o, t, s } => {
            let w = base - o;
            let (l0, m0) = solve_2x2(t, s, &w).ok_or_else(|| {
                ZkitError::InvalidParameter("parallelogram edges are dependent".to_string())
            })?;
            let (l1, m1) = solve_2x2(t, s, dir).expect("independent edges");
            let (zero, one) = (Rat::zero(), Rat::one());
            affine_band(&l0, &l1, &zero, &one)?.intersect(&affine_band(&m0, &m1, &zero, &one)?)
        }
        Region::Everything => OneDimSet::everything(),
        Region::Nothing => OneDimSet::empty(),
        Region::Union { members } => {
            let mut acc = OneDimSet::empty();
            for m in members {
                acc = acc.union(&restrict_inner(m, base, dir)?);
            }
            acc
        }
        Region::Intersection { members } => {
            let mut acc = OneDimSet::everything();
            for m in members {
                acc = acc.intersect(&restrict_inner(m, base, dir)?);
            }
            acc
        }
        Region::Difference { base: b, removed } => {
            restrict_inner(b, base, dir)?.difference(&restrict_inner(removed, base, dir)?)
        }
        Region::SequenceImage { family, completed } => {
            let mut set = OneDimSet::points(
                family
                    .params_on_line(base, dir)?
                    .into_iter()
                    .map(QuadExt::rational),
            );
            if *completed {
                if let Some(t) = line_parameter(base, dir, family.limit()) {
                    set = set.union(&rat_point(t));
                }
            }
            set
        }
    })
}

/// Convenience: the trace on an axis line.
pub fn restrict_to_axis(r: &Region, axis: &crate::minkowski::Axis) -> Result<OneDimSet> {
    let dir = axis.line_dir().ok_or(ZkitError::UnsupportedDimension {
        required: 1,
        found: axis.base().dim().saturating_sub(1),
    })?;
    restrict_to_line(r, axis.base(), dir)
}
