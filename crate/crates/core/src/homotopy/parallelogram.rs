use serde::{Deserialize, Serialize};

use super::{winding, Loop};
use crate::error::{Result, ZkitError};
use crate::minkowski::{causal_class, require_k1, CausalClass, Point, Vector};
use crate::numerics::Rat;
use crate::region::solve_2x2;

/// The loop `γ_ts` around `R_ts = {o + λt + μs : λ, μ ∈ [0, 1]}`.
///
/// `new` demands `t` timelike and `s` spacelike. `spanning` accepts any
/// independent pair, which admits distinct pairs with the same region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ParallelogramRepr")]
pub struct ParallelogramLoop {
    pub o: Point,
    pub t: Vector,
    pub s: Vector,
}

#[derive(Deserialize)]
struct ParallelogramRepr {
    o: Point,
    t: Vector,
    s: Vector,
}

impl TryFrom<ParallelogramRepr> for ParallelogramLoop {
    type Error = ZkitError;

    fn try_from(r: ParallelogramRepr) -> Result<Self> {
        ParallelogramLoop::new(r.o, r.t, r.s)
    }
}

impl ParallelogramLoop {
    pub fn new(o: Point, t: Vector, s: Vector) -> Result<Self> {
        if causal_class(&t) != CausalClass::Timelike || causal_class(&s) != CausalClass::Spacelike {
            return Err(ZkitError::InvalidParameter(
                "t must be timelike and s spacelike".to_string(),
            ));
        }
        ParallelogramLoop::spanning(o, t, s)
    }

    pub fn spanning(o: Point, t: Vector, s: Vector) -> Result<Self> {
        require_k1(o.dim())?;
        t.ensure_dim(2)?;
        s.ensure_dim(2)?;
        if solve_2x2(&t, &s, &Vector::zero(2)).is_none() {
            return Err(ZkitError::InvalidParameter(
                "t and s must be independent".to_string(),
            ));
        }
        Ok(ParallelogramLoop { o, t, s })
    }

    /// `o, o+t, o+t+s, o+s` in traversal order.
    pub fn corners(&self) -> [Point; 4] {
        let ot = &self.o + &self.t;
        let ots = &ot + &self.s;
        [self.o.clone(), ot, ots, &self.o + &self.s]
    }

    pub fn to_loop(&self) -> Loop {
        Loop::uniform(self.corners().to_vec()).expect("independent edges give distinct corners")
    }

    pub fn same_region(&self, other: &ParallelogramLoop) -> bool {
        let mine = self.corners();
        let theirs = other.corners();
        mine.iter().all(|c| theirs.contains(c)) && theirs.iter().all(|c| mine.contains(c))
    }

    fn point_at(&self, lambda: &Rat, mu: &Rat) -> Point {
        &(&self.o + &self.t.scale(lambda)) + &self.s.scale(mu)
    }

    fn coefficients(&self, x: &Point) -> (Rat, Rat) {
        solve_2x2(&self.t, &self.s, &(x - &self.o)).expect("independent edges")
    }
}

/// The four-case formula for `γ_ts(u)`.
pub fn gamma_point(p: &ParallelogramLoop, u: &Rat) -> Result<Point> {
    if u.is_negative() || u > &Rat::one() {
        return Err(ZkitError::InvalidParameter(
            "u must lie in [0, 1]".to_string(),
        ));
    }
    let four_u = u * &Rat::from_int(4);
    let one = Rat::one();
    Ok(if four_u <= one {
        p.point_at(&four_u, &Rat::zero())
    } else if four_u <= Rat::from_int(2) {
        p.point_at(&one, &(&four_u - &one))
    } else if four_u <= Rat::from_int(3) {
        p.point_at(&(Rat::from_int(3) - &four_u), &one)
    } else {
        p.point_at(&Rat::zero(), &(Rat::from_int(4) - &four_u))
    })
}

/// Whether `x = o + λt + μs` with `λ, μ ∈ (0, 1)`.
pub fn interior_contains(p: &ParallelogramLoop, x: &Point) -> Result<bool> {
    x.ensure_dim(2)?;
    let (l, m) = p.coefficients(x);
    let open_unit = |v: &Rat| v.in_open_unit_interval();
    Ok(open_unit(&l) && open_unit(&m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingCertificate {
    pub point: Point,
    pub w1: i64,
    pub w2: i64,
}

impl WindingCertificate {
    /// Recomputes both winding numbers at the certificate point.
    pub fn verify(&self, p1: &ParallelogramLoop, p2: &ParallelogramLoop) -> Result<bool> {
        let w1 = winding(&p1.to_loop(), &self.point)?;
        let w2 = winding(&p2.to_loop(), &self.point)?;
        Ok(w1 == self.w1 && w2 == self.w2 && w1 != w2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DistinguishOutcome {
    Certificate(WindingCertificate),
    /// The two parallelograms are the same point set.
    NotSeparableByWinding,
}

/// Full dyadic grids are searched up to this depth.
const GRID_DEPTH: u32 = 5;
/// Points approaching each corner from the centroid go down to `2^-CORNER_DEPTH`.
const CORNER_DEPTH: u32 = 20;

fn certificate_at(l1: &Loop, l2: &Loop, x: Point) -> Option<WindingCertificate> {
    if l1.on_image(&x) || l2.on_image(&x) {
        return None;
    }
    let w1 = winding(l1, &x).ok()?;
    let w2 = winding(l2, &x).ok()?;
    (w1 != w2).then_some(WindingCertificate { point: x, w1, w2 })
}

/// A point where the loops `γ₁`, `γ₂` have different winding numbers.
///
/// Candidates are the interior dyadic grid points of each parallelogram,
/// then points sliding from the centroid into each corner. A corner of one
/// parallelogram outside the other has a neighborhood outside it, so the
/// second sweep succeeds unless that corner is within `2^-20` of the other
/// region in relative terms.
pub fn distinguish(p1: &ParallelogramLoop, p2: &ParallelogramLoop) -> Result<DistinguishOutcome> {
    if p1.o != p2.o {
        return Err(ZkitError::PreconditionViolated(
            "parallelograms must share the base point".to_string(),
        ));
    }
    if p1 == p2 {
        return Err(ZkitError::PreconditionViolated(
            "the (t, s) pairs must differ".to_string(),
        ));
    }
    if p1.same_region(p2) {
        return Ok(DistinguishOutcome::NotSeparableByWinding);
    }
    let (l1, l2) = (p1.to_loop(), p2.to_loop());
    for depth in 1..=GRID_DEPTH {
        let n = 1i64 << depth;
        for p in [p1, p2] {
            for i in 1..n {
                for j in 1..n {
                    // Points already tried at a coarser depth have even indices.
                    if i % 2 == 0 && j % 2 == 0 {
                        continue;
                    }
                    let x = p.point_at(&Rat::new(i, n), &Rat::new(j, n));
                    if let Some(c) = certificate_at(&l1, &l2, x) {
                        return Ok(DistinguishOutcome::Certificate(c));
                    }
                }
            }
        }
    }
    let half = Rat::new(1, 2);
    for depth in 1..=CORNER_DEPTH {
        let step = Rat::new(1, 1i64 << depth);
        for p in [p1, p2] {
            let centroid = p.point_at(&half, &half);
            for corner in p.corners() {
                let x = corner.lerp(&centroid, &step);
                if let Some(c) = certificate_at(&l1, &l2, x) {
                    return Ok(DistinguishOutcome::Certificate(c));
                }
            }
        }
    }
    Err(ZkitError::SearchExhausted(format!(
        "no separating point down to dyadic depth {CORNER_DEPTH}"
    )))
}

/// Winding of `γⁿ` around `x`, computed on the concatenated loop and as
/// `n·winding(γ, x)`; the two must agree.
pub fn power_winding(p: &ParallelogramLoop, n: i64, x: &Point) -> Result<i64> {
    let lp = p.to_loop();
    let single = winding(&lp, x)?;
    let concatenated = winding(&lp.power(n)?, x)?;
    if concatenated != n * single {
        return Err(ZkitError::InvariantViolation(format!(
            "winding of the {n}-fold loop is {concatenated}, expected {}",
            n * single
        )));
    }
    Ok(concatenated)
}
