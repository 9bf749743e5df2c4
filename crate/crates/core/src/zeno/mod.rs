//! Zeno sequences: families, classification, separating neighborhoods,
//! construction inside open sets, and the first-countability refuter.

mod family;
mod refuter;

pub use family::{rotating_direction, AxialMembership, SequenceFamily};
pub use refuter::{first_countability_refuter, RefuterReport, RefuterWitness};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZkitError};
use crate::minkowski::{causal_class, on_light_cone, require_k1, CausalClass, Point};
use crate::numerics::Rat;
use crate::region::{zeeman_ball, CertifiedOpen};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZenoAnswer {
    Yes,
    No,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mechanism", rename_all = "snake_case")]
pub enum ZenoReason {
    /// The completed image lies on one axis, where the sequence converges in
    /// the axis topology and hence in the Zeeman topology.
    SingleAxis { class: CausalClass },
    /// Distinct points on a light ray: the ray is discrete in the Zeeman
    /// topology, so no subsequence converges to the limit.
    LightRay,
    /// Each axis carries finitely many of the points, so the image is
    /// Zeeman closed and misses the limit.
    DistinctAxes,
    /// Convergence is a tail property; finitely many points decide nothing.
    FiniteData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZenoVerdict {
    pub is_zeno: ZenoAnswer,
    pub reason: ZenoReason,
    /// Whether the image together with the limit is Zeeman closed; `None`
    /// when undetermined.
    pub completed_image_z_closed: Option<bool>,
    /// Points per line through the limit, keyed by direction (finite
    /// prefixes only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_axis_multiplicity: Option<BTreeMap<String, usize>>,
}

/// Key of the line through `limit` and `x`: its causal class and slope.
fn line_key(limit: &Point, x: &Point) -> String {
    let w = x - limit;
    let class = causal_class(&w);
    let slope = if w.0[0].is_zero() {
        "inf".to_string()
    } else {
        (&w.0[1] / &w.0[0]).to_string()
    };
    let class = match class {
        CausalClass::Timelike => "timelike",
        CausalClass::Spacelike => "spacelike",
        CausalClass::Lightlike => "lightlike",
        CausalClass::Zero => "limit",
    };
    format!("{class}:{slope}")
}

pub fn classify(f: &SequenceFamily) -> Result<ZenoVerdict> {
    f.validate()?;
    let verdict = |is_zeno, reason| ZenoVerdict {
        is_zeno,
        reason,
        completed_image_z_closed: Some(true),
        per_axis_multiplicity: None,
    };
    Ok(match f {
        SequenceFamily::GeometricOnLine { v, .. } => match causal_class(v) {
            CausalClass::Lightlike => verdict(ZenoAnswer::Yes, ZenoReason::LightRay),
            class => verdict(ZenoAnswer::No, ZenoReason::SingleAxis { class }),
        },
        SequenceFamily::ConeSequence { .. } => verdict(ZenoAnswer::Yes, ZenoReason::LightRay),
        SequenceFamily::RotatingAxial { .. } | SequenceFamily::AxialWithin { .. } => {
            verdict(ZenoAnswer::Yes, ZenoReason::DistinctAxes)
        }
        SequenceFamily::FinitePrefix { points, limit } => {
            require_k1(limit.dim())?;
            let mut counts = BTreeMap::new();
            for x in points {
                *counts.entry(line_key(limit, x)).or_insert(0) += 1;
            }
            ZenoVerdict {
                is_zeno: ZenoAnswer::Inconclusive,
                reason: ZenoReason::FiniteData,
                completed_image_z_closed: Some(true),
                per_axis_multiplicity: Some(counts),
            }
        }
    })
}

/// Why every point of the family avoids the neighborhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionProof {
    /// Every point lies on `C(p) ∖ {p}`, which the Zeeman ball omits.
    AllOnLightCone,
    /// The whole image is the removed Zeeman-closed set.
    RemovedImage,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub neighborhood: CertifiedOpen,
    pub proof: ExclusionProof,
}

impl Separation {
    /// Re-checks exclusion of the first `count` points and membership of the
    /// limit by exact evaluation.
    pub fn verify_prefix(&self, f: &SequenceFamily, count: usize) -> Result<bool> {
        if !self.neighborhood.contains(f.limit()) {
            return Ok(false);
        }
        for n in 0..count {
            if self.neighborhood.contains(&f.point(n)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Radius of the separating neighborhoods.
const SEPARATION_RADIUS: i64 = 2;

/// A certified open neighborhood of the limit that contains none of the
/// sequence points.
pub fn separating_neighborhood(f: &SequenceFamily) -> Result<Separation> {
    let verdict = classify(f)?;
    if verdict.is_zeno != ZenoAnswer::Yes {
        return Err(ZkitError::NotZeno);
    }
    let p = f.limit();
    let radius = Rat::from_int(SEPARATION_RADIUS);
    if let Some((_, v)) = f.carrier() {
        debug_assert!(on_light_cone(&p.along(v, &Rat::one()), p));
        return Ok(Separation {
            neighborhood: zeeman_ball(p, &radius)?,
            proof: ExclusionProof::AllOnLightCone,
        });
    }
    let ball = CertifiedOpen::ball(p.clone(), radius)?;
    Ok(Separation {
        neighborhood: CertifiedOpen::remove_image(ball, f.clone())?,
        proof: ExclusionProof::RemovedImage,
    })
}

/// Ratio bound of the families built inside open sets.
pub const INSIDE_RATIO: (i64, i64) = (1, 2);

/// A Zeno family converging to `p` whose points all lie in `c`: the `n`-th
/// point sits on the `n`-th rotating axis through `p`, inside the open
/// trace of `c` there.
pub fn zeno_inside_open(c: &CertifiedOpen, p: &Point) -> Result<SequenceFamily> {
    require_k1(p.dim())?;
    if !c.contains(p) {
        return Err(ZkitError::MembershipFailure);
    }
    Ok(SequenceFamily::AxialWithin {
        p: p.clone(),
        ratio: Rat::new(INSIDE_RATIO.0, INSIDE_RATIO.1),
        open: Box::new(c.clone()),
    })
}
