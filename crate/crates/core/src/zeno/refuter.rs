use serde::Serialize;

use super::zeno_inside_open;
use crate::error::{Result, ZkitError};
use crate::minkowski::Point;
use crate::region::CertifiedOpen;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefuterWitness {
    pub j: usize,
    pub point: Point,
    /// Index of the neighborhood the point was drawn from.
    pub n_j: usize,
    pub in_neighborhood: bool,
    pub in_u: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefuterReport {
    pub u: CertifiedOpen,
    pub witnesses: Vec<RefuterWitness>,
}

impl RefuterReport {
    pub fn all_checks_pass(&self) -> bool {
        self.witnesses.iter().all(|w| w.in_neighborhood && !w.in_u)
    }
}

/// Given nested neighborhoods `U₀ ⊇ … ⊇ U_N` of `p`, builds a neighborhood
/// `U` of `p` containing none of them: `p_j` is the `j`-th point of a Zeno
/// family inside `U_j`, so the `p_j` sit on distinct timelike axes through
/// `p`, and `U = U₀ ∖ {p_j}`.
pub fn first_countability_refuter(
    neighborhoods: &[CertifiedOpen],
    p: &Point,
) -> Result<RefuterReport> {
    if neighborhoods.is_empty() {
        return Err(ZkitError::InvalidParameter(
            "need at least one neighborhood".to_string(),
        ));
    }
    let mut points = Vec::with_capacity(neighborhoods.len());
    for (j, u_j) in neighborhoods.iter().enumerate() {
        let family = zeno_inside_open(u_j, p)?;
        let pj = family.point(j)?;
        if let Some(i) = (0..j).find(|&i| !neighborhoods[i].contains(&pj)) {
            return Err(ZkitError::NotNested { outer: i, inner: j });
        }
        points.push(pj);
    }
    let u = CertifiedOpen::remove_points(neighborhoods[0].clone(), points.clone());
    let witnesses = points
        .into_iter()
        .enumerate()
        .map(|(j, point)| RefuterWitness {
            j,
            in_neighborhood: neighborhoods[j].contains(&point),
            in_u: u.contains(&point),
            point,
            n_j: j,
        })
        .collect();
    Ok(RefuterReport { u, witnesses })
}
