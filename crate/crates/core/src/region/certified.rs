use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{restrict_to_axis, Region};
use crate::error::{Result, ZkitError};
use crate::minkowski::{Axis, Point, Vector};
use crate::numerics::{OneDimSet, Rat};
use crate::zeno::SequenceFamily;

/// What a `DiffZClosed` certificate removes from its base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Removed {
    Points {
        points: Vec<Point>,
    },
    /// The image of a sequence family, limit excluded.
    Image {
        family: SequenceFamily,
    },
}

/// Why the removed set is closed in the Zeeman topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Finite sets are closed in every Hausdorff topology finer than the
    /// natural one.
    FiniteSet,
    /// Every line meets the image in finitely many points, so its trace on
    /// each axis is closed.
    FinitePerLine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Built from open balls by finite unions and intersections.
    NaturallyOpen,
    /// `(B ∖ C(center)) ∪ {center}` for the open ball `B`.
    ZeemanBall {
        center: Point,
        radius: Rat,
    },
    /// A certified open set minus a Zeeman-closed set.
    DiffZClosed {
        base: Box<CertifiedOpen>,
        removed: Removed,
        witness: Witness,
    },
    UnionOfCertified {
        members: Vec<CertifiedOpen>,
    },
}

/// A region together with the construction that makes it Zeeman open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedOpen {
    region: Region,
    certificate: Certificate,
}

fn is_natural_open(r: &Region) -> bool {
    match r {
        Region::OpenBall { radius, .. } => radius.is_positive(),
        Region::Everything | Region::Nothing => true,
        Region::Union { members } | Region::Intersection { members } => {
            members.iter().all(is_natural_open)
        }
        _ => false,
    }
}

/// The set `(B(p, radius) ∖ C(p)) ∪ {p}`: on every axis through `p` it agrees
/// with the ball, on other axes it is the ball minus at most two points, and
/// it meets each light ray through `p` only in `p`.
pub fn zeeman_ball(p: &Point, radius: &Rat) -> Result<CertifiedOpen> {
    if !radius.is_positive() {
        return Err(ZkitError::InvalidParameter(
            "radius must be positive".to_string(),
        ));
    }
    let region = Region::Union {
        members: vec![
            Region::Difference {
                base: Box::new(Region::OpenBall {
                    center: p.clone(),
                    radius: radius.clone(),
                }),
                removed: Box::new(Region::Cone { vertex: p.clone() }),
            },
            Region::Singleton { at: p.clone() },
        ],
    };
    Ok(CertifiedOpen {
        region,
        certificate: Certificate::ZeemanBall {
            center: p.clone(),
            radius: radius.clone(),
        },
    })
}

impl CertifiedOpen {
    /// Open in the natural topology, hence in the finer Zeeman topology.
    pub fn natural(region: Region) -> Result<Self> {
        region.validate()?;
        if !is_natural_open(&region) {
            return Err(ZkitError::InvalidCertificate(
                "region is not a boolean combination of open balls".to_string(),
            ));
        }
        Ok(CertifiedOpen {
            region,
            certificate: Certificate::NaturallyOpen,
        })
    }

    pub fn ball(center: Point, radius: Rat) -> Result<Self> {
        CertifiedOpen::natural(Region::OpenBall { center, radius })
    }

    pub fn remove_points(base: CertifiedOpen, points: Vec<Point>) -> Self {
        let region = Region::Difference {
            base: Box::new(base.region.clone()),
            removed: Box::new(Region::Union {
                members: points
                    .iter()
                    .map(|p| Region::Singleton { at: p.clone() })
                    .collect(),
            }),
        };
        CertifiedOpen {
            region,
            certificate: Certificate::DiffZClosed {
                base: Box::new(base),
                removed: Removed::Points { points },
                witness: Witness::FiniteSet,
            },
        }
    }

    /// Removes the image of an infinite family whose image meets every line
    /// finitely (axial families, families on a light ray).
    pub fn remove_image(base: CertifiedOpen, family: SequenceFamily) -> Result<Self> {
        family.validate()?;
        if family.len().is_some() || !family.image_meets_lines_finitely() {
            return Err(ZkitError::InvalidCertificate(
                "removed image must be an infinite family meeting every line finitely".to_string(),
            ));
        }
        let region = Region::Difference {
            base: Box::new(base.region.clone()),
            removed: Box::new(Region::SequenceImage {
                family: family.clone(),
                completed: false,
            }),
        };
        Ok(CertifiedOpen {
            region,
            certificate: Certificate::DiffZClosed {
                base: Box::new(base),
                removed: Removed::Image { family },
                witness: Witness::FinitePerLine,
            },
        })
    }

    pub fn remove(base: CertifiedOpen, removed: Removed) -> Result<Self> {
        match removed {
            Removed::Points { points } => Ok(CertifiedOpen::remove_points(base, points)),
            Removed::Image { family } => CertifiedOpen::remove_image(base, family),
        }
    }

    pub fn union(members: Vec<CertifiedOpen>) -> Self {
        CertifiedOpen {
            region: Region::Union {
                members: members.iter().map(|m| m.region.clone()).collect(),
            },
            certificate: Certificate::UnionOfCertified { members },
        }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn kind(&self) -> &'static str {
        match self.certificate {
            Certificate::NaturallyOpen => "naturally_open",
            Certificate::ZeemanBall { .. } => "zeeman_ball",
            Certificate::DiffZClosed { .. } => "diff_z_closed",
            Certificate::UnionOfCertified { .. } => "union_of_certified",
        }
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.region.contains(x)
    }

    /// Shifts every leaf by `v`; the certificate kind is unchanged.
    pub fn translate(&self, v: &Vector) -> CertifiedOpen {
        let certificate = match &self.certificate {
            Certificate::NaturallyOpen => Certificate::NaturallyOpen,
            Certificate::ZeemanBall { center, radius } => Certificate::ZeemanBall {
                center: center + v,
                radius: radius.clone(),
            },
            Certificate::DiffZClosed {
                base,
                removed,
                witness,
            } => Certificate::DiffZClosed {
                base: Box::new(base.translate(v)),
                removed: match removed {
                    Removed::Points { points } => Removed::Points {
                        points: points.iter().map(|p| p + v).collect(),
                    },
                    Removed::Image { family } => Removed::Image {
                        family: family.translate(v),
                    },
                },
                witness: *witness,
            },
            Certificate::UnionOfCertified { members } => Certificate::UnionOfCertified {
                members: members.iter().map(|m| m.translate(v)).collect(),
            },
        };
        CertifiedOpen {
            region: self.region.translate(v),
            certificate,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "snake_case")]
enum Repr {
    NaturallyOpen {
        region: Region,
    },
    ZeemanBall {
        center: Point,
        radius: Rat,
        #[serde(default)]
        region: Option<Region>,
    },
    DiffZClosed {
        base: Box<CertifiedOpen>,
        removed: Removed,
        #[serde(default)]
        witness: Option<Witness>,
        #[serde(default)]
        region: Option<Region>,
    },
    UnionOfCertified {
        members: Vec<CertifiedOpen>,
        #[serde(default)]
        region: Option<Region>,
    },
}

impl Serialize for CertifiedOpen {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let region = Some(self.region.clone());
        let repr = match &self.certificate {
            Certificate::NaturallyOpen => Repr::NaturallyOpen {
                region: self.region.clone(),
            },
            Certificate::ZeemanBall { center, radius } => Repr::ZeemanBall {
                center: center.clone(),
                radius: radius.clone(),
                region,
            },
            Certificate::DiffZClosed {
                base,
                removed,
                witness,
            } => Repr::DiffZClosed {
                base: base.clone(),
                removed: removed.clone(),
                witness: Some(*witness),
                region,
            },
            Certificate::UnionOfCertified { members } => Repr::UnionOfCertified {
                members: members.clone(),
                region,
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CertifiedOpen {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = Repr::deserialize(d)?;
        let (built, claimed, claimed_witness) = match repr {
            Repr::NaturallyOpen { region } => (CertifiedOpen::natural(region), None, None),
            Repr::ZeemanBall {
                center,
                radius,
                region,
            } => (zeeman_ball(&center, &radius), region, None),
            Repr::DiffZClosed {
                base,
                removed,
                witness,
                region,
            } => (CertifiedOpen::remove(*base, removed), region, witness),
            Repr::UnionOfCertified { members, region } => {
                (Ok(CertifiedOpen::union(members)), region, None)
            }
        };
        let built = built.map_err(serde::de::Error::custom)?;
        if let Some(r) = claimed {
            if r != built.region {
                return Err(serde::de::Error::custom(ZkitError::InvalidCertificate(
                    "region does not match its certificate".to_string(),
                )));
            }
        }
        if let (Some(w), Certificate::DiffZClosed { witness, .. }) =
            (claimed_witness, &built.certificate)
        {
            if &w != witness {
                return Err(serde::de::Error::custom(ZkitError::InvalidCertificate(
                    "witness does not fit the removed set".to_string(),
                )));
            }
        }
        Ok(built)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxisFailure {
    pub axis: Axis,
    pub trace: OneDimSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpenCheckReport {
    pub all_open: bool,
    pub axes_checked: usize,
    pub failures: Vec<AxisFailure>,
}

/// Probes openness of the traces on finitely many axes. A clean report
/// means only that none of these axes falsifies Zeeman openness.
pub fn check_open_on_axes(region: &Region, axes: &[Axis]) -> Result<OpenCheckReport> {
    let mut failures = vec![];
    for axis in axes {
        let trace = restrict_to_axis(region, axis)?;
        if !trace.is_open() {
            failures.push(AxisFailure {
                axis: axis.clone(),
                trace,
            });
        }
    }
    Ok(OpenCheckReport {
        all_open: failures.is_empty(),
        axes_checked: axes.len(),
        failures,
    })
}
