//! Finite unions of intervals and points on a parametrized line.
//!
//! Internally a set is stored by its boundary: the sorted breakpoints where
//! membership changes, a flag per breakpoint, and a flag per open gap
//! between consecutive breakpoints. Dropping breakpoints whose flag agrees
//! with both neighbouring gaps gives a unique normal form, so boolean
//! operations reduce to merging two sorted lists and structural equality is
//! set equality.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::quad::{qe_cmp, QuadExt};
use super::rat::Rat;
use crate::error::{Result, ZkitError};

/// An interval endpoint, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(QuadExt),
    PosInf,
}

impl Endpoint {
    pub fn finite(&self) -> Option<&QuadExt> {
        match self {
            Endpoint::Finite(x) => Some(x),
            _ => None,
        }
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use Endpoint::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => qe_cmp(a, b),
        }
    }
}

impl Serialize for Endpoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Endpoint::NegInf => s.serialize_str("-inf"),
            Endpoint::PosInf => s.serialize_str("+inf"),
            Endpoint::Finite(x) => x.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Endpoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Inf(String),
            Finite(QuadExt),
        }
        match Raw::deserialize(d)? {
            Raw::Finite(x) => Ok(Endpoint::Finite(x)),
            Raw::Inf(s) if s == "-inf" => Ok(Endpoint::NegInf),
            Raw::Inf(s) if s == "+inf" || s == "inf" => Ok(Endpoint::PosInf),
            Raw::Inf(s) => Err(serde::de::Error::custom(format!("bad endpoint {s:?}"))),
        }
    }
}

/// One connected component of a normal-form set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Piece {
    Interval {
        lo: Endpoint,
        hi: Endpoint,
        lo_closed: bool,
        hi_closed: bool,
    },
    Point {
        at: QuadExt,
    },
}

impl Piece {
    pub fn contains(&self, x: &QuadExt) -> bool {
        match self {
            Piece::Point { at } => at == x,
            Piece::Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => {
                let e = Endpoint::Finite(x.clone());
                let above = match lo.cmp(&e) {
                    Ordering::Less => true,
                    Ordering::Equal => *lo_closed,
                    Ordering::Greater => false,
                };
                let below = match e.cmp(hi) {
                    Ordering::Less => true,
                    Ordering::Equal => *hi_closed,
                    Ordering::Greater => false,
                };
                above && below
            }
        }
    }

    /// Open interior as `(lo, hi)`; `None` for isolated points.
    pub fn open_bounds(&self) -> Option<(&Endpoint, &Endpoint)> {
        match self {
            Piece::Interval { lo, hi, .. } => Some((lo, hi)),
            Piece::Point { .. } => None,
        }
    }
}

/// A finite union of intervals and isolated points of the real line, in
/// normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct OneDimSet {
    breaks: Vec<QuadExt>,
    at_break: Vec<bool>,
    /// `gaps[i]` covers `(breaks[i-1], breaks[i])`; `gaps.len() == breaks.len() + 1`.
    gaps: Vec<bool>,
}

impl OneDimSet {
    pub fn empty() -> Self {
        OneDimSet {
            breaks: vec![],
            at_break: vec![],
            gaps: vec![false],
        }
    }

    pub fn everything() -> Self {
        OneDimSet {
            breaks: vec![],
            at_break: vec![],
            gaps: vec![true],
        }
    }

    pub fn point(x: QuadExt) -> Self {
        OneDimSet {
            breaks: vec![x],
            at_break: vec![true],
            gaps: vec![false, false],
        }
    }

    pub fn points<I: IntoIterator<Item = QuadExt>>(xs: I) -> Self {
        xs.into_iter()
            .fold(OneDimSet::empty(), |acc, x| acc.union(&OneDimSet::point(x)))
    }

    /// Interval with the given endpoints; requires `lo < hi`.
    pub fn interval(lo: Endpoint, hi: Endpoint, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo >= hi {
            return Err(ZkitError::InvalidParameter(
                "interval needs lo < hi".to_string(),
            ));
        }
        let mut breaks = vec![];
        let mut at_break = vec![];
        let mut gaps = vec![false];
        if let Endpoint::Finite(x) = lo {
            breaks.push(x);
            at_break.push(lo_closed);
            gaps.push(false);
        }
        let last = gaps.len() - 1;
        gaps[last] = true;
        if let Endpoint::Finite(x) = hi {
            breaks.push(x);
            at_break.push(hi_closed);
            gaps.push(false);
        }
        Ok(OneDimSet {
            breaks,
            at_break,
            gaps,
        }
        .normalized())
    }

    pub fn open(lo: QuadExt, hi: QuadExt) -> Result<Self> {
        OneDimSet::interval(Endpoint::Finite(lo), Endpoint::Finite(hi), false, false)
    }

    pub fn closed(lo: QuadExt, hi: QuadExt) -> Result<Self> {
        OneDimSet::interval(Endpoint::Finite(lo), Endpoint::Finite(hi), true, true)
    }

    pub fn closed_rat(lo: &Rat, hi: &Rat) -> Result<Self> {
        if lo == hi {
            return Ok(OneDimSet::point(lo.clone().into()));
        }
        OneDimSet::closed(lo.clone().into(), hi.clone().into())
    }

    /// Builds the set from arbitrary (possibly overlapping) pieces.
    pub fn from_pieces(pieces: &[Piece]) -> Result<Self> {
        let mut acc = OneDimSet::empty();
        for p in pieces {
            let s = match p {
                Piece::Point { at } => OneDimSet::point(at.clone()),
                Piece::Interval {
                    lo,
                    hi,
                    lo_closed,
                    hi_closed,
                } => OneDimSet::interval(lo.clone(), hi.clone(), *lo_closed, *hi_closed)?,
            };
            acc = acc.union(&s);
        }
        Ok(acc)
    }

    fn normalized(mut self) -> Self {
        let mut keep_breaks = Vec::with_capacity(self.breaks.len());
        let mut keep_at = Vec::with_capacity(self.breaks.len());
        let mut keep_gaps = vec![self.gaps[0]];
        for (i, x) in self.breaks.drain(..).enumerate() {
            let left = *keep_gaps.last().unwrap();
            let right = self.gaps[i + 1];
            let at = self.at_break[i];
            if at == left && at == right {
                continue;
            }
            keep_breaks.push(x);
            keep_at.push(at);
            keep_gaps.push(right);
        }
        OneDimSet {
            breaks: keep_breaks,
            at_break: keep_at,
            gaps: keep_gaps,
        }
    }

    /// Pointwise combination of two sets by a boolean rule.
    fn combine(&self, other: &OneDimSet, rule: impl Fn(bool, bool) -> bool) -> OneDimSet {
        let (na, nb) = (self.breaks.len(), other.breaks.len());
        let (mut i, mut j) = (0, 0);
        let mut breaks = Vec::with_capacity(na + nb);
        let mut at_break = Vec::with_capacity(na + nb);
        let mut gaps = vec![rule(self.gaps[0], other.gaps[0])];
        while i < na || j < nb {
            let ord = match (self.breaks.get(i), other.breaks.get(j)) {
                (Some(x), Some(y)) => qe_cmp(x, y),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            let (x, pa, pb) = match ord {
                Ordering::Less => {
                    let r = (self.breaks[i].clone(), self.at_break[i], other.gaps[j]);
                    i += 1;
                    r
                }
                Ordering::Greater => {
                    let r = (other.breaks[j].clone(), self.gaps[i], other.at_break[j]);
                    j += 1;
                    r
                }
                Ordering::Equal => {
                    let r = (self.breaks[i].clone(), self.at_break[i], other.at_break[j]);
                    i += 1;
                    j += 1;
                    r
                }
            };
            breaks.push(x);
            at_break.push(rule(pa, pb));
            gaps.push(rule(self.gaps[i], other.gaps[j]));
        }
        OneDimSet {
            breaks,
            at_break,
            gaps,
        }
        .normalized()
    }

    pub fn union(&self, other: &OneDimSet) -> OneDimSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &OneDimSet) -> OneDimSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &OneDimSet) -> OneDimSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> OneDimSet {
        OneDimSet {
            breaks: self.breaks.clone(),
            at_break: self.at_break.iter().map(|b| !b).collect(),
            gaps: self.gaps.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.breaks.is_empty() && !self.gaps[0]
    }

    pub fn is_everything(&self) -> bool {
        self.breaks.is_empty() && self.gaps[0]
    }

    /// No isolated points and no closed finite endpoints.
    pub fn is_open(&self) -> bool {
        (0..self.breaks.len()).all(|i| !self.at_break[i] || (self.gaps[i] && self.gaps[i + 1]))
    }

    /// Every finite boundary point belongs to the set.
    pub fn is_closed(&self) -> bool {
        (0..self.breaks.len()).all(|i| self.at_break[i] || (!self.gaps[i] && !self.gaps[i + 1]))
    }

    pub fn is_bounded(&self) -> bool {
        !self.gaps[0] && !self.gaps[self.gaps.len() - 1]
    }

    pub fn is_compact_1d(&self) -> bool {
        self.is_closed() && self.is_bounded()
    }

    /// Finitely many isolated points (the empty set included).
    pub fn is_finite(&self) -> bool {
        self.gaps.iter().all(|g| !g)
    }

    pub fn contains(&self, x: &QuadExt) -> bool {
        // Number of breakpoints strictly below x.
        let idx = self
            .breaks
            .partition_point(|b| qe_cmp(b, x) == Ordering::Less);
        if idx < self.breaks.len() && qe_cmp(&self.breaks[idx], x) == Ordering::Equal {
            self.at_break[idx]
        } else {
            self.gaps[idx]
        }
    }

    pub fn contains_rat(&self, x: &Rat) -> bool {
        self.contains(&QuadExt::rational(x.clone()))
    }

    /// The connected component containing `x`.
    pub fn component_containing(&self, x: &QuadExt) -> Option<Piece> {
        self.pieces().into_iter().find(|p| p.contains(x))
    }

    /// Normal-form components in increasing order.
    pub fn pieces(&self) -> Vec<Piece> {
        let mut out = vec![];
        let mut run: Option<(Endpoint, bool)> = if self.gaps[0] {
            Some((Endpoint::NegInf, false))
        } else {
            None
        };
        for (i, x) in self.breaks.iter().enumerate() {
            let at = self.at_break[i];
            let right = self.gaps[i + 1];
            match run.take() {
                Some((lo, lo_closed)) => {
                    if at && right {
                        run = Some((lo, lo_closed));
                        continue;
                    }
                    out.push(Piece::Interval {
                        lo,
                        hi: Endpoint::Finite(x.clone()),
                        lo_closed,
                        hi_closed: at,
                    });
                    if right {
                        run = Some((Endpoint::Finite(x.clone()), false));
                    }
                }
                None => {
                    if right {
                        run = Some((Endpoint::Finite(x.clone()), at));
                    } else if at {
                        out.push(Piece::Point { at: x.clone() });
                    }
                }
            }
        }
        if let Some((lo, lo_closed)) = run {
            out.push(Piece::Interval {
                lo,
                hi: Endpoint::PosInf,
                lo_closed,
                hi_closed: false,
            });
        }
        out
    }

    /// Isolated points of the set.
    pub fn isolated_points(&self) -> Vec<QuadExt> {
        self.pieces()
            .into_iter()
            .filter_map(|p| match p {
                Piece::Point { at } => Some(at),
                _ => None,
            })
            .collect()
    }

    /// Breakpoints of the normal form (the topological boundary).
    pub fn boundary(&self) -> &[QuadExt] {
        &self.breaks
    }
}

impl fmt::Debug for OneDimSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.pieces();
        if pieces.is_empty() {
            return write!(f, "∅");
        }
        for (k, p) in pieces.iter().enumerate() {
            if k > 0 {
                write!(f, " ∪ ")?;
            }
            match p {
                Piece::Point { at } => write!(f, "{{{at}}}")?,
                Piece::Interval {
                    lo,
                    hi,
                    lo_closed,
                    hi_closed,
                } => {
                    let l = if *lo_closed { '[' } else { '(' };
                    let r = if *hi_closed { ']' } else { ')' };
                    let show = |e: &Endpoint| match e {
                        Endpoint::NegInf => "-∞".to_string(),
                        Endpoint::PosInf => "+∞".to_string(),
                        Endpoint::Finite(x) => x.to_string(),
                    };
                    write!(f, "{l}{}, {}{r}", show(lo), show(hi))?
                }
            }
        }
        Ok(())
    }
}

impl Serialize for OneDimSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pieces().serialize(s)
    }
}

impl<'de> Deserialize<'de> for OneDimSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pieces = Vec::<Piece>::deserialize(d)?;
        OneDimSet::from_pieces(&pieces).map_err(serde::de::Error::custom)
    }
}
