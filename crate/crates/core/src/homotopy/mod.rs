//! Piecewise-linear loops in the 1+1 plane, exact winding numbers, the
//! parallelogram loops `γ_ts` and Z-paths.

mod parallelogram;
mod path;

pub use parallelogram::{
    distinguish, gamma_point, interior_contains, power_winding, DistinguishOutcome,
    ParallelogramLoop, WindingCertificate,
};
pub use path::{z_path, ZPath};

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZkitError};
use crate::minkowski::{require_k1, Point, Vector};
use crate::numerics::Rat;

/// A closed polygonal loop `v₀ → v₁ → … → v_{m-1} → v₀` based at `v₀`. The
/// segment leaving `vᵢ` is traversed for `u ∈ [breakpoints[i], breakpoints[i+1]]`.
/// A single vertex is the constant loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LoopRepr")]
pub struct Loop {
    vertices: Vec<Point>,
    breakpoints: Vec<Rat>,
}

#[derive(Deserialize)]
struct LoopRepr {
    vertices: Vec<Point>,
    breakpoints: Vec<Rat>,
}

impl TryFrom<LoopRepr> for Loop {
    type Error = ZkitError;

    fn try_from(r: LoopRepr) -> Result<Self> {
        Loop::new(r.vertices, r.breakpoints)
    }
}

impl Loop {
    pub fn new(vertices: Vec<Point>, breakpoints: Vec<Rat>) -> Result<Self> {
        let base = vertices
            .first()
            .ok_or_else(|| ZkitError::InvalidParameter("loop needs a vertex".to_string()))?;
        require_k1(base.dim())?;
        for v in &vertices {
            v.ensure_dim(2)?;
        }
        let m = vertices.len();
        if m > 1 && (0..m).any(|i| vertices[i] == vertices[(i + 1) % m]) {
            return Err(ZkitError::InvalidParameter(
                "consecutive loop vertices must differ".to_string(),
            ));
        }
        if breakpoints.len() != m + 1
            || !breakpoints[0].is_zero()
            || breakpoints[m] != Rat::one()
            || breakpoints.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(ZkitError::InvalidParameter(
                "breakpoints must increase strictly from 0 to 1, one per segment".to_string(),
            ));
        }
        Ok(Loop {
            vertices,
            breakpoints,
        })
    }

    /// The loop through `vertices` with equally spaced breakpoints.
    pub fn uniform(vertices: Vec<Point>) -> Result<Self> {
        let m = vertices.len() as i64;
        let breakpoints = (0..=m).map(|i| Rat::new(i, m.max(1))).collect();
        Loop::new(vertices, breakpoints)
    }

    pub fn constant(base: Point) -> Result<Self> {
        Loop::new(vec![base], vec![Rat::zero(), Rat::one()])
    }

    pub fn base(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn is_constant(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Segments `(vᵢ, vᵢ₊₁)` including the closing one.
    pub fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let m = self.vertices.len();
        let count = if m == 1 { 0 } else { m };
        (0..count).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % m]))
    }

    pub fn eval(&self, u: &Rat) -> Result<Point> {
        if u.is_negative() || u > &Rat::one() {
            return Err(ZkitError::InvalidParameter(
                "u must lie in [0, 1]".to_string(),
            ));
        }
        let m = self.vertices.len();
        if m == 1 {
            return Ok(self.base().clone());
        }
        let i = (0..m)
            .find(|&i| u <= &self.breakpoints[i + 1])
            .unwrap_or(m - 1);
        let (a, b) = (&self.breakpoints[i], &self.breakpoints[i + 1]);
        let local = (u - a) / (b - a);
        Ok(self.vertices[i].lerp(&self.vertices[(i + 1) % m], &local))
    }

    /// `self` then `other`, each at double speed.
    pub fn concat(&self, other: &Loop) -> Result<Loop> {
        if self.base() != other.base() {
            return Err(ZkitError::PreconditionViolated(
                "loops must share a base point".to_string(),
            ));
        }
        if self.is_constant() {
            return Ok(other.clone());
        }
        if other.is_constant() {
            return Ok(self.clone());
        }
        let half = Rat::new(1, 2);
        let m = self.vertices.len();
        let mut breakpoints: Vec<Rat> = self.breakpoints[..m].iter().map(|b| b * &half).collect();
        breakpoints.extend(other.breakpoints.iter().map(|b| &half + &(b * &half)));
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        Loop::new(vertices, breakpoints)
    }

    pub fn reverse(&self) -> Loop {
        let mut vertices = vec![self.base().clone()];
        vertices.extend(self.vertices[1..].iter().rev().cloned());
        let breakpoints = self
            .breakpoints
            .iter()
            .rev()
            .map(|b| Rat::one() - b)
            .collect();
        Loop {
            vertices,
            breakpoints,
        }
    }

    /// The `n`-fold concatenation; negative `n` traverses the reversed loop.
    pub fn power(&self, n: i64) -> Result<Loop> {
        if n < 0 {
            return self.reverse().power(-n);
        }
        let mut acc = Loop::constant(self.base().clone())?;
        for _ in 0..n {
            acc = acc.concat(self)?;
        }
        Ok(acc)
    }

    pub fn translate(&self, v: &Vector) -> Loop {
        Loop {
            vertices: self.vertices.iter().map(|p| p + v).collect(),
            breakpoints: self.breakpoints.clone(),
        }
    }

    pub fn on_image(&self, x: &Point) -> bool {
        if self.is_constant() {
            return self.base() == x;
        }
        self.segments().any(|(a, b)| on_segment(a, b, x))
    }
}

/// Plane coordinates `(X, Y) = (x¹, x⁰)`: space to the right, time up.
fn xy(v: &Vector) -> (&Rat, &Rat) {
    (&v.0[1], &v.0[0])
}

fn cross(v: &Vector, w: &Vector) -> Rat {
    let (vx, vy) = xy(v);
    let (wx, wy) = xy(w);
    vx * wy - vy * wx
}

fn dot(v: &Vector, w: &Vector) -> Rat {
    &v.0[0] * &w.0[0] + &v.0[1] * &w.0[1]
}

pub(crate) fn on_segment(a: &Point, b: &Point, x: &Point) -> bool {
    let ab = b - a;
    let ax = x - a;
    if !cross(&ab, &ax).is_zero() {
        return false;
    }
    let d = dot(&ab, &ax);
    !d.is_negative() && d <= dot(&ab, &ab)
}

/// The ray direction `(X, Y) = (1, y)`.
fn ray_dir(y: Rat) -> Vector {
    Vector::new(vec![y, Rat::one()])
}

/// Signed crossings of the ray `x + τ·r` (`τ > 0`) by the loop's segments.
/// A segment counts iff exactly one endpoint lies strictly below the ray's
/// line and the crossing is ahead of `x`; upward crossings count `+1`.
fn crossings(lp: &Loop, x: &Point, r: &Vector) -> i64 {
    let below = |v: &Point| cross(r, &(v - x)).is_negative();
    let mut w = 0;
    for (a, b) in lp.segments() {
        let (ba, bb) = (below(a), below(b));
        if ba == bb {
            continue;
        }
        let side = cross(&(b - a), &(x - a));
        if ba && side.is_positive() {
            w += 1;
        } else if bb && side.is_negative() {
            w -= 1;
        }
    }
    w
}

/// Exact winding number of `lp` around `x`, counterclockwise positive with
/// time up and space to the right.
pub fn winding(lp: &Loop, x: &Point) -> Result<i64> {
    x.ensure_dim(2)?;
    if lp.on_image(x) {
        return Err(ZkitError::PointOnLoop);
    }
    let vertex_on_ray = |r: &Vector| {
        lp.vertices.iter().any(|v| {
            let w = v - x;
            cross(r, &w).is_zero() && dot(r, &w).is_positive()
        })
    };
    let mut r = ray_dir(Rat::zero());
    let mut j = 1;
    while vertex_on_ray(&r) {
        r = ray_dir(Rat::new(1, 2 * j + 1));
        j += 1;
    }
    Ok(crossings(lp, x, &r))
}
