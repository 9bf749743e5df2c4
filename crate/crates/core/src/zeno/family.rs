use serde::{Deserialize, Serialize};

use crate::error::{Result, ZkitError};
use crate::minkowski::{
    causal_class, line_parameter, meet_lines, require_k1, CausalClass, LineMeet, Point, Vector,
};
use crate::numerics::{simplest_in, Endpoint, Piece, QuadExt, Rat};
use crate::region::{restrict_to_line, CertifiedOpen};

/// Closed-form point sequences converging to a limit `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SequenceFamily {
    /// `p_n = p + ratioⁿ·v`.
    GeometricOnLine { p: Point, v: Vector, ratio: Rat },
    /// `p_n = p + ratioⁿ·d_n` with `d_n = e₀ + (1 - 1/(n+2))·e₁`.
    RotatingAxial { p: Point, ratio: Rat },
    /// `p_n = p + ratioⁿ·dir` with `dir` lightlike.
    ConeSequence { p: Point, dir: Vector, ratio: Rat },
    /// `p_n = p + t_n·d_n`, where `t_n` is the simplest rational in
    /// `(0, min(ratioⁿ, h_n))` and `(l_n, h_n)` is the component around 0 of
    /// `open` restricted to the line `p + τ·d_n`. Every point lies in `open`.
    AxialWithin {
        p: Point,
        ratio: Rat,
        open: Box<CertifiedOpen>,
    },
    /// Finitely many points with a declared limit.
    FinitePrefix { points: Vec<Point>, limit: Point },
}

/// The direction `d_n = (1, (n+1)/(n+2))` of the rotating axial families.
pub fn rotating_direction(n: usize) -> Vector {
    let n = n as i64;
    Vector::new(vec![Rat::one(), Rat::new(n + 1, n + 2)])
}

/// `n` with `ratioⁿ = s`, if any.
fn geometric_index(ratio: &Rat, s: &Rat) -> Option<usize> {
    if !s.is_positive() || s > &Rat::one() {
        return None;
    }
    let mut pow = Rat::one();
    let mut n = 0;
    while &pow > s {
        pow = pow * ratio;
        n += 1;
    }
    (&pow == s).then_some(n)
}

/// `n` with `d_n ∥ w` and `w` pointing forward in time, if any.
fn rotating_index(w: &Vector) -> Option<usize> {
    if !w.0[0].is_positive() {
        return None;
    }
    let sigma = &w.0[1] / &w.0[0];
    if sigma >= Rat::one() {
        return None;
    }
    // (n+1)/(n+2) = σ  ⇔  n = (2σ - 1)/(1 - σ)
    let n = (Rat::from_int(2) * &sigma - Rat::one()) / (Rat::one() - &sigma);
    if n.is_negative() || !n.is_integer() {
        return None;
    }
    n.to_i64().map(|n| n as usize)
}

/// Membership data for one point of an `AxialWithin` family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxialMembership {
    pub n: usize,
    pub point: Point,
    pub param: Rat,
    /// Component around 0 of the open set on the line `p + τ·d_n`.
    pub component: Piece,
}

impl SequenceFamily {
    pub fn validate(&self) -> Result<()> {
        let ratio_ok = |r: &Rat| {
            if r.in_open_unit_interval() {
                Ok(())
            } else {
                Err(ZkitError::InvariantViolation(format!(
                    "ratio {r} outside (0, 1)"
                )))
            }
        };
        match self {
            SequenceFamily::GeometricOnLine { p, v, ratio } => {
                v.ensure_dim(p.dim())?;
                if v.is_zero() {
                    return Err(ZkitError::ZeroDirection);
                }
                ratio_ok(ratio)
            }
            SequenceFamily::RotatingAxial { p, ratio } => {
                require_k1(p.dim())?;
                ratio_ok(ratio)
            }
            SequenceFamily::ConeSequence { p, dir, ratio } => {
                dir.ensure_dim(p.dim())?;
                if causal_class(dir) != CausalClass::Lightlike {
                    return Err(ZkitError::InvariantViolation(
                        "cone sequence needs a lightlike direction".to_string(),
                    ));
                }
                ratio_ok(ratio)
            }
            SequenceFamily::AxialWithin { p, ratio, open } => {
                require_k1(p.dim())?;
                ratio_ok(ratio)?;
                if !open.region().contains(p) {
                    return Err(ZkitError::MembershipFailure);
                }
                Ok(())
            }
            SequenceFamily::FinitePrefix { points, limit } => {
                for (i, x) in points.iter().enumerate() {
                    x.ensure_dim(limit.dim())?;
                    if points[..i].contains(x) {
                        return Err(ZkitError::InvariantViolation(
                            "points must be distinct".to_string(),
                        ));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn limit(&self) -> &Point {
        match self {
            SequenceFamily::GeometricOnLine { p, .. }
            | SequenceFamily::RotatingAxial { p, .. }
            | SequenceFamily::ConeSequence { p, .. }
            | SequenceFamily::AxialWithin { p, .. } => p,
            SequenceFamily::FinitePrefix { limit, .. } => limit,
        }
    }

    /// Number of points; `None` for infinite families.
    pub fn len(&self) -> Option<usize> {
        match self {
            SequenceFamily::FinitePrefix { points, .. } => Some(points.len()),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn is_axial(&self) -> bool {
        matches!(
            self,
            SequenceFamily::RotatingAxial { .. } | SequenceFamily::AxialWithin { .. }
        )
    }

    /// Limit and direction of the carrier line of single-line families.
    pub fn carrier(&self) -> Option<(&Point, &Vector)> {
        match self {
            SequenceFamily::GeometricOnLine { p, v, .. } => Some((p, v)),
            SequenceFamily::ConeSequence { p, dir, .. } => Some((p, dir)),
            _ => None,
        }
    }

    /// Whether every line meets the image (limit excluded) in finitely
    /// many points: axial families and families on a lightlike line.
    pub fn image_meets_lines_finitely(&self) -> bool {
        match self {
            SequenceFamily::RotatingAxial { .. } | SequenceFamily::AxialWithin { .. } => true,
            SequenceFamily::FinitePrefix { .. } => true,
            _ => self
                .carrier()
                .is_some_and(|(_, v)| causal_class(v) == CausalClass::Lightlike),
        }
    }

    pub fn point(&self, n: usize) -> Result<Point> {
        match self {
            SequenceFamily::GeometricOnLine { p, v, ratio }
            | SequenceFamily::ConeSequence { p, dir: v, ratio } => {
                Ok(p.along(v, &ratio.pow(n as u32)))
            }
            SequenceFamily::RotatingAxial { p, ratio } => {
                Ok(p.along(&rotating_direction(n), &ratio.pow(n as u32)))
            }
            SequenceFamily::AxialWithin { .. } => Ok(self.axial_membership(n)?.point),
            SequenceFamily::FinitePrefix { points, .. } => {
                points.get(n).cloned().ok_or_else(|| {
                    ZkitError::InvalidParameter(format!("index {n} beyond finite prefix"))
                })
            }
        }
    }

    /// First `count` points (fewer for short finite prefixes).
    pub fn points(&self, count: usize) -> Result<Vec<Point>> {
        let count = self.len().map_or(count, |l| l.min(count));
        (0..count).map(|n| self.point(n)).collect()
    }

    /// The `n`-th point of an `AxialWithin` family with its membership data.
    pub fn axial_membership(&self, n: usize) -> Result<AxialMembership> {
        let SequenceFamily::AxialWithin { p, ratio, open } = self else {
            return Err(ZkitError::InvalidParameter(
                "membership data exists only for axial-within families".to_string(),
            ));
        };
        let d = rotating_direction(n);
        let trace = restrict_to_line(open.region(), p, &d)?;
        let component = trace
            .component_containing(&QuadExt::zero())
            .ok_or(ZkitError::MembershipFailure)?;
        let hi = match &component {
            Piece::Interval { lo, hi, .. } if lo < &Endpoint::Finite(QuadExt::zero()) => hi.clone(),
            _ => {
                return Err(ZkitError::InvariantViolation(
                    "certified open set is not open on a timelike axis".to_string(),
                ))
            }
        };
        let cap = Endpoint::Finite(QuadExt::rational(ratio.pow(n as u32)));
        let hi = hi.min(cap);
        let param = simplest_in(&Endpoint::Finite(QuadExt::zero()), &hi, false, false)?;
        Ok(AxialMembership {
            n,
            point: p.along(&d, &param),
            param,
            component,
        })
    }

    /// Index of `x` among the points, if it is one of them.
    pub fn index_of(&self, x: &Point) -> Result<Option<usize>> {
        if x.dim() != self.limit().dim() {
            return Ok(None);
        }
        match self {
            SequenceFamily::GeometricOnLine { p, v, ratio }
            | SequenceFamily::ConeSequence { p, dir: v, ratio } => {
                Ok(line_parameter(p, v, x).and_then(|s| geometric_index(ratio, &s)))
            }
            SequenceFamily::RotatingAxial { p, .. } | SequenceFamily::AxialWithin { p, .. } => {
                match rotating_index(&(x - p)) {
                    Some(n) if &self.point(n)? == x => Ok(Some(n)),
                    _ => Ok(None),
                }
            }
            SequenceFamily::FinitePrefix { points, .. } => Ok(points.iter().position(|q| q == x)),
        }
    }

    /// Parameters `t` of the points (limit excluded) lying on the line
    /// `base + t·dir` in 1+1 spacetime, sorted.
    pub fn params_on_line(&self, base: &Point, dir: &Vector) -> Result<Vec<Rat>> {
        require_k1(base.dim())?;
        let mut out = match self {
            SequenceFamily::FinitePrefix { points, .. } => points
                .iter()
                .filter_map(|x| line_parameter(base, dir, x))
                .collect(),
            SequenceFamily::GeometricOnLine { p, v, ratio }
            | SequenceFamily::ConeSequence { p, dir: v, ratio } => {
                match meet_lines(base, dir, p, v) {
                    LineMeet::Same => {
                        return Err(ZkitError::NotRepresentable(
                            "line carries infinitely many sequence points".to_string(),
                        ))
                    }
                    LineMeet::Parallel => vec![],
                    LineMeet::At(t, s) => {
                        geometric_index(ratio, &s).map(|_| t).into_iter().collect()
                    }
                }
            }
            SequenceFamily::RotatingAxial { p, ratio }
            | SequenceFamily::AxialWithin { p, ratio, .. } => {
                if line_parameter(base, dir, p).is_some() {
                    // A line through the limit holds at most the point on its own direction.
                    let n = rotating_index(dir).or_else(|| rotating_index(&-dir));
                    match n {
                        Some(n) => line_parameter(base, dir, &self.point(n)?)
                            .into_iter()
                            .collect(),
                        None => vec![],
                    }
                } else {
                    // |p_n - p|² ≤ 2·ratio²ⁿ, so only points with
                    // 2·ratio²ⁿ ≥ dist(p, line)² can lie on the line.
                    let w = p - base;
                    let dot = |a: &Vector, b: &Vector| {
                        a.0.iter()
                            .zip(&b.0)
                            .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
                    };
                    let dist2 = dot(&w, &w) - dot(&w, dir).square() / dot(dir, dir);
                    let mut hits = vec![];
                    let mut n = 0usize;
                    let two = Rat::from_int(2);
                    while &two * &ratio.pow(2 * n as u32) >= dist2 {
                        if let Some(t) = line_parameter(base, dir, &self.point(n)?) {
                            hits.push(t);
                        }
                        n += 1;
                    }
                    hits
                }
            }
        };
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn translate(&self, v: &Vector) -> SequenceFamily {
        match self {
            SequenceFamily::GeometricOnLine { p, v: w, ratio } => SequenceFamily::GeometricOnLine {
                p: p + v,
                v: w.clone(),
                ratio: ratio.clone(),
            },
            SequenceFamily::RotatingAxial { p, ratio } => SequenceFamily::RotatingAxial {
                p: p + v,
                ratio: ratio.clone(),
            },
            SequenceFamily::ConeSequence { p, dir, ratio } => SequenceFamily::ConeSequence {
                p: p + v,
                dir: dir.clone(),
                ratio: ratio.clone(),
            },
            SequenceFamily::AxialWithin { p, ratio, open } => SequenceFamily::AxialWithin {
                p: p + v,
                ratio: ratio.clone(),
                open: Box::new(open.translate(v)),
            },
            SequenceFamily::FinitePrefix { points, limit } => SequenceFamily::FinitePrefix {
                points: points.iter().map(|x| x + v).collect(),
                limit: limit + v,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::zeeman_ball;

    fn pt(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    #[test]
    fn rotating_points_and_indices() {
        let f = SequenceFamily::RotatingAxial {
            p: pt(&[1, 1]),
            ratio: Rat::new(1, 2),
        };
        let p3 = f.point(3).unwrap();
        assert_eq!(
            p3,
            Point::new(vec![
                Rat::new(9, 8),
                Rat::one() + Rat::new(1, 8) * Rat::new(4, 5)
            ])
        );
        assert_eq!(f.index_of(&p3).unwrap(), Some(3));
        assert_eq!(f.index_of(&pt(&[1, 1])).unwrap(), None);
    }

    #[test]
    fn geometric_indices() {
        let f = SequenceFamily::ConeSequence {
            p: pt(&[0, 0]),
            dir: Vector::from_ints(&[1, -1]),
            ratio: Rat::new(1, 3),
        };
        let x = f.point(4).unwrap();
        assert_eq!(f.index_of(&x).unwrap(), Some(4));
        let y = Point::new(vec![Rat::new(2, 81), Rat::new(-2, 81)]);
        assert_eq!(f.index_of(&y).unwrap(), None);
    }

    #[test]
    fn lines_meet_axial_images_finitely() {
        let f = SequenceFamily::RotatingAxial {
            p: pt(&[0, 0]),
            ratio: Rat::new(1, 2),
        };
        // Through the limit along d_2 = (1, 3/4): exactly p_2.
        let hits = f
            .params_on_line(&pt(&[0, 0]), &rotating_direction(2))
            .unwrap();
        assert_eq!(hits, vec![Rat::new(1, 4)]);
        // The horizontal line through p_0 = (1, 1/2).
        let hits = f
            .params_on_line(&pt(&[1, 0]), &Vector::from_ints(&[0, 1]))
            .unwrap();
        assert_eq!(hits, vec![Rat::new(1, 2)]);
        // Lightlike lines through the limit miss everything.
        assert!(f
            .params_on_line(&pt(&[0, 0]), &Vector::from_ints(&[1, 1]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn carrier_line_is_not_representable() {
        let f = SequenceFamily::GeometricOnLine {
            p: pt(&[0, 0]),
            v: Vector::from_ints(&[1, 0]),
            ratio: Rat::new(1, 2),
        };
        assert!(matches!(
            f.params_on_line(&pt(&[5, 0]), &Vector::from_ints(&[2, 0])),
            Err(ZkitError::NotRepresentable(_))
        ));
        assert_eq!(
            f.params_on_line(&pt(&[0, 1]), &Vector::from_ints(&[1, -4]))
                .unwrap(),
            vec![Rat::new(1, 4)]
        );
    }

    #[test]
    fn axial_within_stays_inside() {
        let p = pt(&[0, 0]);
        let open = zeeman_ball(&p, &Rat::new(1, 10)).unwrap();
        let f = SequenceFamily::AxialWithin {
            p: p.clone(),
            ratio: Rat::new(1, 2),
            open: Box::new(open.clone()),
        };
        f.validate().unwrap();
        for n in 0..20 {
            let m = f.axial_membership(n).unwrap();
            assert!(open.region().contains(&m.point));
            assert!(m.param <= Rat::new(1, 2).pow(n as u32));
            assert_eq!(f.index_of(&m.point).unwrap(), Some(n));
        }
    }
}
