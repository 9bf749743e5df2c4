use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{exact_isqrt, isqrt_floor, Rat};
use crate::error::{Result, ZkitError};

/// Largest trial divisor used when pulling square factors out of a radicand.
const SQUARE_FACTOR_BOUND: u64 = 1000;

/// A degree-two algebraic number `a + b·√c` with rational `a`, `b`, `c`.
///
/// Canonical form: either `b = c = 0` (a rational), or `c` is an integer
/// greater than one that is not a perfect square, with the small square
/// factors of `c` moved into `b`. Irrationality of `√c` is therefore exact;
/// two equal numbers may still carry different radicands when a large square
/// factor survives, so equality and ordering are numeric (see [`qe_cmp`]).
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "QuadRepr", into = "QuadRepr")]
pub struct QuadExt {
    a: Rat,
    b: Rat,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct QuadRepr {
    a: Rat,
    b: Rat,
    c: Rat,
}

impl TryFrom<QuadRepr> for QuadExt {
    type Error = ZkitError;
    fn try_from(r: QuadRepr) -> Result<Self> {
        QuadExt::new(r.a, r.b, r.c)
    }
}

impl From<QuadExt> for QuadRepr {
    fn from(q: QuadExt) -> Self {
        QuadRepr {
            a: q.a,
            b: q.b,
            c: q.c,
        }
    }
}

impl QuadExt {
    /// `a + b·√c`, canonicalized. Fails when `c < 0`.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        if c.is_negative() {
            return Err(ZkitError::InvalidParameter(format!(
                "negative radicand {c}"
            )));
        }
        if b.is_zero() || c.is_zero() {
            return Ok(QuadExt::rational(a));
        }
        // √(p/q) = √(p·q)/q
        let q = c.denom().clone();
        let mut radicand = c.numer() * &q;
        let mut coeff = &b / &Rat::from_bigint(q);
        let (n, k) = pull_square_factors(&radicand);
        radicand = n;
        coeff = coeff * Rat::from_bigint(k);
        if let Some(root) = exact_isqrt(&radicand) {
            return Ok(QuadExt::rational(a + coeff * Rat::from_bigint(root)));
        }
        Ok(QuadExt {
            a,
            b: coeff,
            c: Rat::from_bigint(radicand),
        })
    }

    pub fn rational(a: Rat) -> Self {
        QuadExt {
            a,
            b: Rat::zero(),
            c: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }

    pub fn from_int(n: i64) -> Self {
        QuadExt::rational(Rat::from_int(n))
    }

    /// `√r` for `r ≥ 0`.
    pub fn sqrt_of(r: &Rat) -> Result<Self> {
        QuadExt::new(Rat::zero(), Rat::one(), r.clone())
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// The radicand when irrational.
    pub fn radicand(&self) -> Option<&Rat> {
        if self.is_rational() {
            None
        } else {
            Some(&self.c)
        }
    }

    fn with(a: Rat, b: Rat, c: &Rat) -> Self {
        if b.is_zero() {
            QuadExt::rational(a)
        } else {
            QuadExt { a, b, c: c.clone() }
        }
    }

    fn shared_radicand<'a>(&'a self, other: &'a QuadExt) -> Result<Option<&'a Rat>> {
        match (self.radicand(), other.radicand()) {
            (None, None) => Ok(None),
            (Some(c), None) | (None, Some(c)) => Ok(Some(c)),
            (Some(c1), Some(c2)) if c1 == c2 => Ok(Some(c1)),
            _ => Err(ZkitError::MixedRadicand),
        }
    }

    pub fn checked_add(&self, other: &QuadExt) -> Result<QuadExt> {
        match self.shared_radicand(other)? {
            None => Ok(QuadExt::rational(&self.a + &other.a)),
            Some(c) => Ok(QuadExt::with(&self.a + &other.a, &self.b + &other.b, c)),
        }
    }

    pub fn checked_sub(&self, other: &QuadExt) -> Result<QuadExt> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &QuadExt) -> Result<QuadExt> {
        match self.shared_radicand(other)? {
            None => Ok(QuadExt::rational(&self.a * &other.a)),
            Some(c) => {
                let a = &self.a * &other.a + &(&self.b * &other.b) * c;
                let b = &self.a * &other.b + &self.b * &other.a;
                Ok(QuadExt::with(a, b, c))
            }
        }
    }

    pub fn recip(&self) -> Result<QuadExt> {
        if self.is_rational() {
            return Ok(QuadExt::rational(self.a.recip()?));
        }
        // (a - b√c) / (a² - b²c); the denominator vanishes only for zero.
        let den = self.a.square() - &self.b.square() * &self.c;
        if den.is_zero() {
            return Err(ZkitError::DivisionByZero);
        }
        Ok(QuadExt::with(&self.a / &den, -(&self.b / &den), &self.c))
    }

    pub fn checked_div(&self, other: &QuadExt) -> Result<QuadExt> {
        self.checked_mul(&other.recip()?)
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt::with(-&self.a, -&self.b, &self.c)
    }

    pub fn add_rat(&self, r: &Rat) -> QuadExt {
        QuadExt::with(&self.a + r, self.b.clone(), &self.c)
    }

    pub fn sub_rat(&self, r: &Rat) -> QuadExt {
        QuadExt::with(&self.a - r, self.b.clone(), &self.c)
    }

    pub fn mul_rat(&self, r: &Rat) -> QuadExt {
        QuadExt::with(&self.a * r, &self.b * r, &self.c)
    }

    pub fn square(&self) -> QuadExt {
        self.checked_mul(self).expect("same radicand")
    }

    /// Sign as an ordering against zero.
    pub fn sign(&self) -> Ordering {
        sign_single(&self.a, &self.b, &self.c)
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    /// Exact `floor`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor();
        }
        // b√c = ±√(b²c) = ±√N/Q; floor(√N/Q) = floor(isqrt(N)/Q).
        let bb = self.b.square() * &self.c;
        let n = bb.numer() * bb.denom();
        let q = Rat::from_bigint(bb.denom().clone());
        let s = Rat::from_bigint(isqrt_floor(&n));
        let root_floor = (&s / &q).floor();
        let irr_floor = if self.b.is_positive() {
            root_floor
        } else {
            -(root_floor + BigInt::one())
        };
        let mut n0 = self.a.floor() + irr_floor;
        // The estimate is within two of the true floor; walk to it exactly.
        while qe_cmp(self, &QuadExt::rational(Rat::from_bigint(n0.clone()))) == Ordering::Less {
            n0 -= 1;
        }
        while qe_cmp(self, &QuadExt::rational(Rat::from_bigint(&n0 + 1))) != Ordering::Less {
            n0 += 1;
        }
        n0
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            self.a.to_f64()
        } else {
            self.a.to_f64() + self.b.to_f64() * self.c.to_f64().sqrt()
        }
    }
}

impl From<Rat> for QuadExt {
    fn from(r: Rat) -> Self {
        QuadExt::rational(r)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        qe_cmp(self, other) == Ordering::Equal
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        qe_cmp(self, other)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}·√{}", self.a, self.b, self.c)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn ord_of(r: &Rat) -> Ordering {
    r.signum().cmp(&0)
}

/// Sign of `a + b√c` for rational `a`, `b` and `c ≥ 0`.
fn sign_single(a: &Rat, b: &Rat, c: &Rat) -> Ordering {
    let sa = ord_of(a);
    let sb = if c.is_zero() {
        Ordering::Equal
    } else {
        ord_of(b)
    };
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // Opposite signs: the larger magnitude wins.
    match a.square().cmp(&(b.square() * c)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Exact comparison of two quadratic irrationals, radicands arbitrary.
///
/// For `x = a1 + b1√c1` and `y = a2 + b2√c2` this decides the sign of
/// `u + v` with `u = (a1 - a2) + b1√c1` and `v = -b2√c2`: equal signs decide
/// at once, otherwise the sign of `u² - v²` (a single-radicand number)
/// tells which magnitude dominates.
pub fn qe_cmp(x: &QuadExt, y: &QuadExt) -> Ordering {
    if let Ok(d) = x.checked_sub(y) {
        return d.sign();
    }
    let da = &x.a - &y.a;
    let su = sign_single(&da, &x.b, &x.c);
    let sv = ord_of(&-&y.b);
    if sv == Ordering::Equal {
        return su;
    }
    if su == Ordering::Equal || su == sv {
        return sv;
    }
    // u² - v² = (da² + b1²c1 - b2²c2) + 2·da·b1·√c1
    let p = da.square() + x.b.square() * &x.c - y.b.square() * &y.c;
    let q = Rat::from_int(2) * &da * &x.b;
    match sign_single(&p, &q, &x.c) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Splits `n = m·k²` by trial division up to [`SQUARE_FACTOR_BOUND`],
/// returning `(m, k)`.
fn pull_square_factors(n: &BigInt) -> (BigInt, BigInt) {
    if let Some(small) = n.to_u64() {
        let mut m = small;
        let mut k: u64 = 1;
        let mut d: u64 = 2;
        while d <= SQUARE_FACTOR_BOUND && d * d <= m {
            while m % (d * d) == 0 {
                m /= d * d;
                k *= d;
            }
            d += 1;
        }
        return (BigInt::from(m), BigInt::from(k));
    }
    let mut m = n.clone();
    let mut k = BigInt::one();
    let mut d: u64 = 2;
    while d <= SQUARE_FACTOR_BOUND {
        let dd = BigInt::from(d * d);
        if dd > m {
            break;
        }
        while (&m % &dd).is_zero() {
            m /= &dd;
            k *= d;
        }
        d += 1;
    }
    (m, k)
}

/// Real roots of the rational quadratic `a·t² + b·t + c = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum QuadraticRoots {
    /// The polynomial vanishes identically.
    AllReals,
    /// Distinct roots in increasing order (0, 1 or 2 of them).
    Finite(Vec<QuadExt>),
}

pub fn quadratic_roots(a: &Rat, b: &Rat, c: &Rat) -> QuadraticRoots {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() {
                QuadraticRoots::AllReals
            } else {
                QuadraticRoots::Finite(vec![])
            };
        }
        return QuadraticRoots::Finite(vec![QuadExt::rational(-(c / b))]);
    }
    let disc = b.square() - Rat::from_int(4) * a * c;
    let two_a = Rat::from_int(2) * a;
    let vertex = -(b / &two_a);
    match disc.signum() {
        -1 => QuadraticRoots::Finite(vec![]),
        0 => QuadraticRoots::Finite(vec![QuadExt::rational(vertex)]),
        _ => {
            let half = two_a.recip().expect("a != 0");
            let r1 = QuadExt::new(vertex.clone(), -&half, disc.clone()).expect("disc > 0");
            let r2 = QuadExt::new(vertex, half, disc).expect("disc > 0");
            let mut v = vec![r1, r2];
            v.sort();
            QuadraticRoots::Finite(v)
        }
    }
}
