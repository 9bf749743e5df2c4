//! Metric, causal structure, axes and rational isometries of Minkowski
//! spacetime in a fixed orthonormal frame `e₀, …, e_k` with `g(e₀,e₀) = -1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZkitError};
use crate::numerics::{quadratic_roots, QuadExt, QuadraticRoots, Rat};

/// A spacetime point, by coordinates relative to the frame origin.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<Rat>);

/// A displacement vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<Rat>);

macro_rules! coord_common {
    ($t:ident) => {
        impl $t {
            pub fn new(coords: Vec<Rat>) -> Self {
                $t(coords)
            }

            pub fn from_ints(coords: &[i64]) -> Self {
                $t(coords.iter().map(|&c| Rat::from_int(c)).collect())
            }

            pub fn zero(dim: usize) -> Self {
                $t(vec![Rat::zero(); dim])
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[Rat] {
                &self.0
            }

            pub fn ensure_dim(&self, dim: usize) -> Result<()> {
                if self.dim() == dim {
                    Ok(())
                } else {
                    Err(ZkitError::DimensionMismatch {
                        expected: dim,
                        found: self.dim(),
                    })
                }
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

coord_common!(Point);
coord_common!(Vector);

impl Point {
    pub fn origin(dim: usize) -> Self {
        Point::zero(dim)
    }

    /// `self + t·v`.
    pub fn along(&self, v: &Vector, t: &Rat) -> Point {
        Point(self.0.iter().zip(&v.0).map(|(a, b)| a + &(b * t)).collect())
    }

    pub fn to_vector(&self) -> Vector {
        Vector(self.0.clone())
    }

    /// Midpoint-style affine combination `(1-t)·self + t·other`.
    pub fn lerp(&self, other: &Point, t: &Rat) -> Point {
        self.along(&(other - self), t)
    }
}

impl Vector {
    /// The `i`-th frame vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(dim);
        v.0[i] = Rat::one();
        v
    }

    pub fn scale(&self, t: &Rat) -> Vector {
        Vector(self.0.iter().map(|a| a * t).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn time(&self) -> &Rat {
        &self.0[0]
    }
}

impl Sub for &Point {
    type Output = Vector;
    fn sub(self, rhs: &Point) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add<&Vector> for &Point {
    type Output = Point;
    fn add(self, rhs: &Vector) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Vector) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// `g(v, w) = -v⁰w⁰ + Σ vⁱwⁱ`.
pub fn metric(v: &Vector, w: &Vector) -> Result<Rat> {
    w.ensure_dim(v.dim())?;
    Ok(g(v, w))
}

/// Unchecked metric for internal callers that have already matched dimensions.
pub(crate) fn g(v: &Vector, w: &Vector) -> Rat {
    debug_assert_eq!(v.dim(), w.dim());
    let mut acc = -(&v.0[0] * &w.0[0]);
    for (a, b) in v.0.iter().zip(&w.0).skip(1) {
        acc = acc + a * b;
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CausalClass {
    Timelike,
    Spacelike,
    Lightlike,
    Zero,
}

pub fn causal_class(v: &Vector) -> CausalClass {
    if v.is_zero() {
        return CausalClass::Zero;
    }
    match g(v, v).signum() {
        -1 => CausalClass::Timelike,
        0 => CausalClass::Lightlike,
        _ => CausalClass::Spacelike,
    }
}

/// `q ∈ C(p)`, the light cone with vertex `p` (vertex included).
pub fn on_light_cone(q: &Point, p: &Point) -> bool {
    let d = q - p;
    g(&d, &d).is_zero()
}

/// A straight timelike line or a spacelike hyperplane; for `k = 1` both are
/// lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Axis {
    TimelikeLine { base: Point, dir: Vector },
    SpacelikeFlat { base: Point, dirs: Vec<Vector> },
}

impl Axis {
    pub fn timelike(base: Point, dir: Vector) -> Result<Axis> {
        dir.ensure_dim(base.dim())?;
        if causal_class(&dir) != CausalClass::Timelike {
            return Err(ZkitError::InvalidParameter(
                "timelike axis needs a timelike direction".to_string(),
            ));
        }
        Ok(Axis::TimelikeLine { base, dir })
    }

    /// Spacelike flat spanned by `k` pairwise orthogonal spacelike vectors.
    pub fn spacelike(base: Point, dirs: Vec<Vector>) -> Result<Axis> {
        let n = base.dim();
        if dirs.len() + 1 != n {
            return Err(ZkitError::InvalidParameter(format!(
                "spacelike flat needs {} directions, got {}",
                n - 1,
                dirs.len()
            )));
        }
        for (i, d) in dirs.iter().enumerate() {
            d.ensure_dim(n)?;
            if causal_class(d) != CausalClass::Spacelike {
                return Err(ZkitError::InvalidParameter(
                    "spacelike flat needs spacelike directions".to_string(),
                ));
            }
            if dirs[..i].iter().any(|e| !g(d, e).is_zero()) {
                return Err(ZkitError::InvalidParameter(
                    "spanning directions must be pairwise orthogonal".to_string(),
                ));
            }
        }
        Ok(Axis::SpacelikeFlat { base, dirs })
    }

    /// An axis line through `base` along a non-lightlike `dir` (any `k` for
    /// timelike, `k = 1` for spacelike).
    pub fn line(base: Point, dir: Vector) -> Result<Axis> {
        match causal_class(&dir) {
            CausalClass::Timelike => Axis::timelike(base, dir),
            CausalClass::Spacelike => Axis::spacelike(base, vec![dir]),
            CausalClass::Lightlike => Err(ZkitError::LightlikeSeparation),
            CausalClass::Zero => Err(ZkitError::ZeroDirection),
        }
    }

    pub fn base(&self) -> &Point {
        match self {
            Axis::TimelikeLine { base, .. } | Axis::SpacelikeFlat { base, .. } => base,
        }
    }

    /// The direction when the axis is a line.
    pub fn line_dir(&self) -> Option<&Vector> {
        match self {
            Axis::TimelikeLine { dir, .. } => Some(dir),
            Axis::SpacelikeFlat { dirs, .. } if dirs.len() == 1 => Some(&dirs[0]),
            Axis::SpacelikeFlat { .. } => None,
        }
    }

    /// Exact incidence test, available for line axes.
    pub fn contains(&self, x: &Point) -> Result<bool> {
        let dir = self.line_dir().ok_or(ZkitError::UnsupportedDimension {
            required: 1,
            found: self.base().dim() - 1,
        })?;
        Ok(line_parameter(self.base(), dir, x).is_some())
    }

    pub fn translate(&self, v: &Vector) -> Axis {
        match self {
            Axis::TimelikeLine { base, dir } => Axis::TimelikeLine {
                base: base + v,
                dir: dir.clone(),
            },
            Axis::SpacelikeFlat { base, dirs } => Axis::SpacelikeFlat {
                base: base + v,
                dirs: dirs.clone(),
            },
        }
    }
}

/// `t` with `base + t·dir = x`, if `x` lies on the line.
pub fn line_parameter(base: &Point, dir: &Vector, x: &Point) -> Option<Rat> {
    let w = x - base;
    let i = dir.0.iter().position(|c| !c.is_zero())?;
    let t = &w.0[i] / &dir.0[i];
    if w.0.iter().zip(&dir.0).all(|(a, b)| a == &(b * &t)) {
        Some(t)
    } else {
        None
    }
}

pub(crate) fn require_k1(dim: usize) -> Result<()> {
    if dim == 2 {
        Ok(())
    } else {
        Err(ZkitError::UnsupportedDimension {
            required: 1,
            found: dim.saturating_sub(1),
        })
    }
}

/// The axis through two points of 1+1 spacetime.
pub fn axis_through(p: &Point, q: &Point) -> Result<Axis> {
    require_k1(p.dim())?;
    q.ensure_dim(2)?;
    if p == q {
        return Err(ZkitError::EqualPoints);
    }
    Axis::line(p.clone(), q - p)
}

/// Parameters `t` with `base + t·dir ∈ C(vertex)`.
pub fn line_cone_params(base: &Point, dir: &Vector, vertex: &Point) -> Result<QuadraticRoots> {
    dir.ensure_dim(base.dim())?;
    vertex.ensure_dim(base.dim())?;
    if dir.is_zero() {
        return Err(ZkitError::ZeroDirection);
    }
    let w = base - vertex;
    let a = g(dir, dir);
    let b = Rat::from_int(2) * g(dir, &w);
    let c = g(&w, &w);
    Ok(quadratic_roots(&a, &b, &c))
}

/// `x ↦ dilation · linear · x + translation`, with `linearᵀ η linear = η`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MapRepr")]
pub struct PoincareMap {
    linear: Vec<Vec<Rat>>,
    translation: Vector,
    dilation: Rat,
}

#[derive(Deserialize)]
struct MapRepr {
    linear: Vec<Vec<Rat>>,
    translation: Vector,
    dilation: Rat,
}

impl TryFrom<MapRepr> for PoincareMap {
    type Error = ZkitError;
    fn try_from(r: MapRepr) -> Result<Self> {
        PoincareMap::new(r.linear, r.translation, r.dilation)
    }
}

impl PoincareMap {
    pub fn new(linear: Vec<Vec<Rat>>, translation: Vector, dilation: Rat) -> Result<Self> {
        let n = linear.len();
        if n == 0 {
            return Err(ZkitError::InvalidParameter("empty matrix".to_string()));
        }
        for row in &linear {
            if row.len() != n {
                return Err(ZkitError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        translation.ensure_dim(n)?;
        if !dilation.is_positive() {
            return Err(ZkitError::InvalidParameter(
                "dilation must be positive".to_string(),
            ));
        }
        let m = PoincareMap {
            linear,
            translation,
            dilation,
        };
        if !m.preserves_metric() {
            return Err(ZkitError::NotLorentz);
        }
        Ok(m)
    }

    pub fn identity(dim: usize) -> Self {
        let linear = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        PoincareMap {
            linear,
            translation: Vector::zero(dim),
            dilation: Rat::one(),
        }
    }

    /// Boost in the `e₀, e_axis` plane with rapidity parametrized by the
    /// rational slope `m`: `cosh = (1+m²)/(1-m²)`, `sinh = 2m/(1-m²)`.
    pub fn boost(dim: usize, axis: usize, m: &Rat) -> Result<Self> {
        if axis == 0 || axis >= dim {
            return Err(ZkitError::InvalidParameter(format!(
                "boost axis {axis} out of range"
            )));
        }
        if m.abs() >= Rat::one() {
            return Err(ZkitError::InvalidParameter(
                "boost slope needs |m| < 1".to_string(),
            ));
        }
        let m2 = m.square();
        let den = Rat::one() - &m2;
        let ch = (Rat::one() + &m2) / &den;
        let sh = Rat::from_int(2) * m / &den;
        let mut map = PoincareMap::identity(dim);
        map.linear[0][0] = ch.clone();
        map.linear[axis][axis] = ch;
        map.linear[0][axis] = sh.clone();
        map.linear[axis][0] = sh;
        Ok(map)
    }

    pub fn boost_from_slope(m: &Rat) -> Result<Self> {
        PoincareMap::boost(2, 1, m)
    }

    pub fn translation(v: Vector) -> Self {
        let mut map = PoincareMap::identity(v.dim());
        map.translation = v;
        map
    }

    pub fn dilation(dim: usize, lambda: Rat) -> Result<Self> {
        if !lambda.is_positive() {
            return Err(ZkitError::InvalidParameter(
                "dilation must be positive".to_string(),
            ));
        }
        let mut map = PoincareMap::identity(dim);
        map.dilation = lambda;
        Ok(map)
    }

    pub fn dim(&self) -> usize {
        self.linear.len()
    }

    pub fn linear(&self) -> &[Vec<Rat>] {
        &self.linear
    }

    pub fn translation_part(&self) -> &Vector {
        &self.translation
    }

    pub fn dilation_factor(&self) -> &Rat {
        &self.dilation
    }

    fn preserves_metric(&self) -> bool {
        let n = self.dim();
        let eta = |i: usize| if i == 0 { -Rat::one() } else { Rat::one() };
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rat::zero();
                for r in 0..n {
                    acc = acc + eta(r) * &self.linear[r][i] * &self.linear[r][j];
                }
                let want = if i == j { eta(i) } else { Rat::zero() };
                if acc != want {
                    return false;
                }
            }
        }
        true
    }

    fn mat_vec(&self, x: &[Rat]) -> Vec<Rat> {
        self.linear
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
                    * &self.dilation
            })
            .collect()
    }

    pub fn apply_vector(&self, v: &Vector) -> Result<Vector> {
        v.ensure_dim(self.dim())?;
        Ok(Vector(self.mat_vec(&v.0)))
    }

    pub fn apply_point(&self, p: &Point) -> Result<Point> {
        p.ensure_dim(self.dim())?;
        Ok(&Point(self.mat_vec(&p.0)) + &self.translation)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PoincareMap) -> Result<PoincareMap> {
        if self.dim() != other.dim() {
            return Err(ZkitError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let n = self.dim();
        let linear = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Rat::zero(), |acc, r| {
                            acc + &self.linear[i][r] * &other.linear[r][j]
                        })
                    })
                    .collect()
            })
            .collect();
        let translation = &self.apply_vector(&other.translation)? + &self.translation;
        Ok(PoincareMap {
            linear,
            translation,
            dilation: &self.dilation * &other.dilation,
        })
    }
}

/// How two lines of the plane meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineMeet {
    Same,
    Parallel,
    /// Parameters on the first and second line of the common point.
    At(Rat, Rat),
}

/// Intersects `b1 + t·d1` with `b2 + s·d2` in 1+1 spacetime.
pub fn meet_lines(b1: &Point, d1: &Vector, b2: &Point, d2: &Vector) -> LineMeet {
    let det = &d1.0[0] * &d2.0[1] - &d1.0[1] * &d2.0[0];
    let w = b2 - b1;
    if det.is_zero() {
        return if line_parameter(b1, d1, b2).is_some() {
            LineMeet::Same
        } else {
            LineMeet::Parallel
        };
    }
    // t·d1 - s·d2 = w
    let t = (&w.0[0] * &d2.0[1] - &w.0[1] * &d2.0[0]) / &det;
    let s = (&w.0[0] * &d1.0[1] - &w.0[1] * &d1.0[0]) / &det;
    LineMeet::At(t, s)
}

/// A point whose coordinates are quadratic irrationals over one common
/// radicand, so that it is `base + √c·dir` for rational `base` and `dir`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct QuadPoint(Vec<QuadExt>);

impl QuadPoint {
    pub fn new(coords: Vec<QuadExt>) -> Result<Self> {
        let mut radicand: Option<&Rat> = None;
        for c in &coords {
            if let Some(r) = c.radicand() {
                match radicand {
                    Some(seen) if seen != r => return Err(ZkitError::MixedRadicand),
                    _ => radicand = Some(r),
                }
            }
        }
        Ok(QuadPoint(coords))
    }

    pub fn coords(&self) -> &[QuadExt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_point(&self) -> Option<Point> {
        self.0
            .iter()
            .map(|c| c.as_rat().cloned())
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    /// `(base, dir, √c)` with `self = base + √c·dir`; `None` when rational.
    pub fn as_line_point(&self) -> Option<(Point, Vector, QuadExt)> {
        let c = self.0.iter().find_map(|x| x.radicand())?.clone();
        let base = Point(self.0.iter().map(|x| x.a().clone()).collect());
        let dir = Vector(self.0.iter().map(|x| x.b().clone()).collect());
        let s = QuadExt::sqrt_of(&c).expect("radicand is positive");
        Some((base, dir, s))
    }
}

impl From<Point> for QuadPoint {
    fn from(p: Point) -> Self {
        QuadPoint(p.0.into_iter().map(QuadExt::rational).collect())
    }
}

impl<'de> Deserialize<'de> for QuadPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coord {
            Rat(Rat),
            Quad(QuadExt),
        }
        let raw = Vec::<Coord>::deserialize(d)?;
        let coords = raw
            .into_iter()
            .map(|c| match c {
                Coord::Rat(r) => QuadExt::rational(r),
                Coord::Quad(q) => q,
            })
            .collect();
        QuadPoint::new(coords).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    fn p(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    #[test]
    fn frame_metric() {
        let e0 = Vector::basis(2, 0);
        let e1 = Vector::basis(2, 1);
        assert_eq!(metric(&e0, &e0).unwrap(), Rat::from_int(-1));
        assert_eq!(metric(&e1, &e1).unwrap(), Rat::one());
        assert_eq!(metric(&e0, &e1).unwrap(), Rat::zero());
        assert!(metric(&e0, &Vector::basis(3, 0)).is_err());
    }

    #[test]
    fn classes() {
        assert_eq!(causal_class(&v(&[1, 0])), CausalClass::Timelike);
        assert_eq!(causal_class(&v(&[1, 1])), CausalClass::Lightlike);
        assert_eq!(causal_class(&v(&[1, 2])), CausalClass::Spacelike);
        assert_eq!(causal_class(&v(&[0, 0])), CausalClass::Zero);
    }

    #[test]
    fn light_cone_membership() {
        let o = p(&[3, -1]);
        assert!(on_light_cone(&o, &o));
        assert!(on_light_cone(&(&o + &v(&[1, 1])), &o));
        assert!(!on_light_cone(&(&o + &v(&[1, 0])), &o));
    }

    #[test]
    fn axes_through_pairs() {
        let o = p(&[0, 0]);
        assert_eq!(
            axis_through(&o, &p(&[1, 0])).unwrap(),
            Axis::TimelikeLine {
                base: o.clone(),
                dir: v(&[1, 0])
            }
        );
        assert!(matches!(
            axis_through(&o, &p(&[0, 1])).unwrap(),
            Axis::SpacelikeFlat { .. }
        ));
        assert_eq!(
            axis_through(&o, &p(&[2, 2])),
            Err(ZkitError::LightlikeSeparation)
        );
        assert_eq!(axis_through(&o, &o), Err(ZkitError::EqualPoints));
    }

    #[test]
    fn cone_params() {
        let o = p(&[0, 0]);
        assert_eq!(
            line_cone_params(&o, &v(&[1, 0]), &o).unwrap(),
            QuadraticRoots::Finite(vec![Rat::zero().into()])
        );
        assert_eq!(
            line_cone_params(&o, &v(&[1, 1]), &o).unwrap(),
            QuadraticRoots::AllReals
        );
        assert_eq!(
            line_cone_params(&p(&[0, 1]), &v(&[1, 0]), &o).unwrap(),
            QuadraticRoots::Finite(vec![Rat::from_int(-1).into(), Rat::one().into()])
        );
        assert_eq!(
            line_cone_params(&o, &v(&[0, 0]), &o),
            Err(ZkitError::ZeroDirection)
        );
    }

    #[test]
    fn boosts() {
        let id = PoincareMap::boost_from_slope(&Rat::zero()).unwrap();
        assert_eq!(id, PoincareMap::identity(2));
        let b = PoincareMap::boost_from_slope(&Rat::new(1, 2)).unwrap();
        assert_eq!(b.linear()[0][0], Rat::new(5, 3));
        assert_eq!(b.linear()[0][1], Rat::new(4, 3));
        assert_eq!(b.apply_vector(&v(&[1, 1])).unwrap(), v(&[3, 3]));
        assert!(PoincareMap::boost_from_slope(&Rat::one()).is_err());
    }

    #[test]
    fn rejects_non_lorentz() {
        let lin = vec![
            vec![Rat::from_int(2), Rat::zero()],
            vec![Rat::zero(), Rat::one()],
        ];
        assert_eq!(
            PoincareMap::new(lin, Vector::zero(2), Rat::one()),
            Err(ZkitError::NotLorentz)
        );
    }

    #[test]
    fn compose_matches_sequential_application() {
        let a = PoincareMap::boost_from_slope(&Rat::new(1, 3)).unwrap();
        let b = PoincareMap::translation(v(&[2, -5]))
            .compose(&PoincareMap::dilation(2, Rat::new(3, 2)).unwrap())
            .unwrap();
        let x = Point::new(vec![Rat::new(1, 7), Rat::new(-2, 3)]);
        let ab = a.compose(&b).unwrap();
        assert_eq!(
            ab.apply_point(&x).unwrap(),
            a.apply_point(&b.apply_point(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn line_meets() {
        let o = p(&[0, 0]);
        assert_eq!(
            meet_lines(&o, &v(&[1, 0]), &p(&[0, 2]), &v(&[0, 1])),
            LineMeet::At(Rat::zero(), Rat::from_int(-2))
        );
        assert_eq!(
            meet_lines(&o, &v(&[1, 1]), &p(&[2, 2]), &v(&[-3, -3])),
            LineMeet::Same
        );
        assert_eq!(
            meet_lines(&o, &v(&[1, 1]), &p(&[0, 2]), &v(&[1, 1])),
            LineMeet::Parallel
        );
    }

    #[test]
    fn quad_points_share_a_radicand() {
        let r2 = QuadExt::sqrt_of(&Rat::from_int(2)).unwrap();
        let r3 = QuadExt::sqrt_of(&Rat::from_int(3)).unwrap();
        assert_eq!(
            QuadPoint::new(vec![r2.clone(), r3]),
            Err(ZkitError::MixedRadicand)
        );
        let q: QuadPoint =
            serde_json::from_str(r#"["1/2", {"a":"1/1","b":"2/1","c":"2/1"}]"#).unwrap();
        let (base, dir, s) = q.as_line_point().unwrap();
        assert_eq!(base, Point::new(vec![Rat::new(1, 2), Rat::one()]));
        assert_eq!(dir, v(&[0, 2]));
        assert_eq!(s, r2);
    }

    #[test]
    fn map_json_validates() {
        let js = r#"{"linear":[["2/1","0/1"],["0/1","1/1"]],"translation":["0/1","0/1"],"dilation":"1/1"}"#;
        assert!(serde_json::from_str::<PoincareMap>(js).is_err());
        let m = PoincareMap::boost_from_slope(&Rat::new(1, 2)).unwrap();
        let back: PoincareMap = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }
}
