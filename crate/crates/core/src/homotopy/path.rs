use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::minkowski::{
    axis_through, causal_class, on_light_cone, require_k1, Axis, CausalClass, Point, Vector,
};
use crate::numerics::Rat;

/// A polygonal path `vertices[0] → … → vertices[m-1]`, traversing the
/// `i`-th segment for `u ∈ [breakpoints[i], breakpoints[i+1]]`, together
/// with one axis per segment containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZPath {
    pub vertices: Vec<Point>,
    pub breakpoints: Vec<Rat>,
    pub axes: Vec<Axis>,
}

impl ZPath {
    pub fn segment_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Every segment direction is non-lightlike and lies on its axis.
    pub fn verify(&self) -> Result<bool> {
        if self.axes.len() != self.segment_count() {
            return Ok(false);
        }
        for (w, axis) in self.vertices.windows(2).zip(&self.axes) {
            let d = &w[1] - &w[0];
            if matches!(causal_class(&d), CausalClass::Lightlike | CausalClass::Zero) {
                return Ok(false);
            }
            if !axis.contains(&w[0])? || !axis.contains(&w[1])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn eval(&self, u: &Rat) -> Point {
        let m = self.segment_count();
        if m == 0 {
            return self.vertices[0].clone();
        }
        let i = (0..m)
            .find(|&i| u <= &self.breakpoints[i + 1])
            .unwrap_or(m - 1);
        let (a, b) = (&self.breakpoints[i], &self.breakpoints[i + 1]);
        self.vertices[i].lerp(&self.vertices[i + 1], &((u - a) / (b - a)))
    }
}

/// A Z-continuous path from `p` to `q`: straight along the axis through both
/// when `q ∉ C(p)`, otherwise through the first `r = (p+q)/2 + j·e₁`,
/// `j = 1, 2, …`, lying on neither light cone.
pub fn z_path(p: &Point, q: &Point) -> Result<ZPath> {
    require_k1(p.dim())?;
    q.ensure_dim(2)?;
    if p == q {
        return Ok(ZPath {
            vertices: vec![p.clone()],
            breakpoints: vec![Rat::zero(), Rat::one()],
            axes: vec![],
        });
    }
    if !on_light_cone(q, p) {
        return Ok(ZPath {
            vertices: vec![p.clone(), q.clone()],
            breakpoints: vec![Rat::zero(), Rat::one()],
            axes: vec![axis_through(p, q)?],
        });
    }
    let mid = p.lerp(q, &Rat::new(1, 2));
    let e1 = Vector::basis(2, 1);
    let r = (1..)
        .map(|j| mid.along(&e1, &Rat::from_int(j)))
        .find(|r| !on_light_cone(r, p) && !on_light_cone(r, q))
        .expect("each light cone meets the candidate line at most twice");
    Ok(ZPath {
        axes: vec![axis_through(p, &r)?, axis_through(&r, q)?],
        vertices: vec![p.clone(), r, q.clone()],
        breakpoints: vec![Rat::zero(), Rat::new(1, 2), Rat::one()],
    })
}
