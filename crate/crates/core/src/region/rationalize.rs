use super::{restrict_to_line, CertifiedOpen};
use crate::error::{Result, ZkitError};
use crate::minkowski::{require_k1, Point, QuadPoint, Vector};
use crate::numerics::{simplest_in, simplest_in_piece, Endpoint, Piece, QuadExt, Rat};

/// Finest bracket `2^-k` tried when the time line through the point is not
/// itself a rational line.
const BRACKET_DEPTH: u32 = 256;

/// A rational point of `c` obtained from `q ∈ c` in two axis steps: first
/// the time coordinate along `q + λe₀`, then the space coordinate along the
/// spacelike line through the intermediate point. Each step picks the
/// simplest rational in the open component around the current coordinate.
pub fn rationalize(c: &CertifiedOpen, q: &QuadPoint) -> Result<Point> {
    require_k1(q.dim())?;
    if !c.region().contains_quad(q)? {
        return Err(ZkitError::MembershipFailure);
    }
    if let Some(p) = q.as_point() {
        return Ok(p);
    }
    let (x0, x1) = (&q.coords()[0], &q.coords()[1]);
    let e0 = Vector::basis(2, 0);
    let e1 = Vector::basis(2, 1);

    let t = match (x0.as_rat(), x1.as_rat()) {
        (Some(t), _) => t.clone(),
        (None, Some(s)) => {
            let base = Point::new(vec![Rat::zero(), s.clone()]);
            pick_in_component(c, &base, &e0, x0)?
        }
        (None, None) => bracket_time(c, x0, x1)?,
    };
    let s = match x1.as_rat() {
        Some(s) => s.clone(),
        None => {
            let base = Point::new(vec![t.clone(), Rat::zero()]);
            pick_in_component(c, &base, &e1, x1)?
        }
    };
    let out = Point::new(vec![t, s]);
    if !c.contains(&out) {
        return Err(ZkitError::InvariantViolation(
            "rationalized point left the region".to_string(),
        ));
    }
    Ok(out)
}

fn pick_in_component(c: &CertifiedOpen, base: &Point, dir: &Vector, x: &QuadExt) -> Result<Rat> {
    let trace = restrict_to_line(c.region(), base, dir)?;
    match trace.component_containing(x) {
        Some(piece @ Piece::Interval { .. }) => simplest_in_piece(&piece),
        _ => Err(ZkitError::InvariantViolation(
            "certified open set is not open on an axis".to_string(),
        )),
    }
}

/// Both coordinates irrational: the only rational line through `q` has the
/// direction of its irrational part, so the time step shrinks a bracket
/// around `x0` and tests each candidate `(r, x1)` exactly.
fn bracket_time(c: &CertifiedOpen, x0: &QuadExt, x1: &QuadExt) -> Result<Rat> {
    let mut eps = Rat::one();
    let half = Rat::new(1, 2);
    for _ in 0..BRACKET_DEPTH {
        let r = simplest_in(
            &Endpoint::Finite(x0.sub_rat(&eps)),
            &Endpoint::Finite(x0.add_rat(&eps)),
            false,
            false,
        )?;
        let candidate = QuadPoint::new(vec![QuadExt::rational(r.clone()), x1.clone()])?;
        if c.region().contains_quad(&candidate)? {
            return Ok(r);
        }
        eps = eps * &half;
    }
    Err(ZkitError::SearchExhausted(
        "no rational time coordinate found near the point".to_string(),
    ))
}
