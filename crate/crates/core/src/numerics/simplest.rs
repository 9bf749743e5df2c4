//! Smallest-denominator rationals inside intervals with quadratic endpoints.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::onedim::{Endpoint, Piece};
use super::quad::{qe_cmp, QuadExt};
use super::rat::Rat;
use crate::error::{Result, ZkitError};

/// The rational of smallest denominator in the interval; among those with
/// that denominator, the one nearest the midpoint (ties toward the smaller).
/// Unbounded intervals yield the integer of least absolute value.
pub fn simplest_in(lo: &Endpoint, hi: &Endpoint, lo_closed: bool, hi_closed: bool) -> Result<Rat> {
    let empty = || ZkitError::InvalidParameter("interval is empty".to_string());
    match lo.cmp(hi) {
        Ordering::Greater => return Err(empty()),
        Ordering::Equal => {
            return match lo {
                Endpoint::Finite(x) if lo_closed && hi_closed => x
                    .as_rat()
                    .cloned()
                    .ok_or_else(|| ZkitError::NotRepresentable("irrational singleton".to_string())),
                _ => Err(empty()),
            }
        }
        Ordering::Less => {}
    }
    match (lo, hi) {
        (Endpoint::Finite(l), Endpoint::Finite(h)) => {
            let q = smallest_integer_chain(l, Some(h), lo_closed, hi_closed)
                .denom()
                .clone();
            Ok(nearest_midpoint(l, h, lo_closed, hi_closed, &q))
        }
        _ => {
            let zero = QuadExt::zero();
            let zero_in = Piece::Interval {
                lo: lo.clone(),
                hi: hi.clone(),
                lo_closed,
                hi_closed,
            }
            .contains(&zero);
            if zero_in {
                return Ok(Rat::zero());
            }
            // Zero lies outside, so the finite endpoint is the one nearest it.
            match (lo, hi) {
                (Endpoint::Finite(l), _) => Ok(Rat::from_bigint(first_integer_above(l, lo_closed))),
                (_, Endpoint::Finite(h)) => Ok(Rat::from_bigint(last_integer_below(h, hi_closed))),
                _ => unreachable!("zero lies in the whole line"),
            }
        }
    }
}

/// `simplest_in` applied to a component; rational isolated points map to
/// themselves.
pub fn simplest_in_piece(piece: &Piece) -> Result<Rat> {
    match piece {
        Piece::Point { at } => at
            .as_rat()
            .cloned()
            .ok_or_else(|| ZkitError::NotRepresentable("irrational isolated point".to_string())),
        Piece::Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        } => simplest_in(lo, hi, *lo_closed, *hi_closed),
    }
}

fn first_integer_above(x: &QuadExt, closed: bool) -> BigInt {
    let f = x.floor();
    if closed && x.as_rat().is_some_and(|r| r.is_integer()) {
        f
    } else {
        f + 1
    }
}

fn last_integer_below(x: &QuadExt, closed: bool) -> BigInt {
    let c = x.ceil();
    if closed && x.as_rat().is_some_and(|r| r.is_integer()) {
        c
    } else {
        c - 1
    }
}

fn below_hi(n: &BigInt, hi: Option<&QuadExt>, hi_closed: bool) -> bool {
    match hi {
        None => true,
        Some(h) => match qe_cmp(&QuadExt::rational(Rat::from_bigint(n.clone())), h) {
            Ordering::Less => true,
            Ordering::Equal => hi_closed,
            Ordering::Greater => false,
        },
    }
}

/// Continued-fraction descent picking the smallest integer at every level;
/// the result has the least denominator in the interval.
fn smallest_integer_chain(
    lo: &QuadExt,
    hi: Option<&QuadExt>,
    lo_closed: bool,
    hi_closed: bool,
) -> Rat {
    let n = first_integer_above(lo, lo_closed);
    if below_hi(&n, hi, hi_closed) {
        return Rat::from_bigint(n);
    }
    let hi = hi.expect("an unbounded interval contains an integer");
    // Both endpoints lie in [fl, fl + 1] with no admissible integer between.
    let fl = lo.floor();
    let shift = Rat::from_bigint(fl.clone());
    let hi_off = hi.sub_rat(&shift);
    let lo_off = lo.sub_rat(&shift);
    let new_lo = hi_off.recip().expect("hi > fl");
    let inner = if lo_off.is_zero() {
        smallest_integer_chain(&new_lo, None, hi_closed, false)
    } else {
        let new_hi = lo_off.recip().expect("nonzero");
        smallest_integer_chain(&new_lo, Some(&new_hi), hi_closed, lo_closed)
    };
    Rat::from_bigint(fl) + inner.recip().expect("inner >= 1")
}

/// Among `p/q` inside the bounded interval, the one nearest the midpoint.
fn nearest_midpoint(
    lo: &QuadExt,
    hi: &QuadExt,
    lo_closed: bool,
    hi_closed: bool,
    q: &BigInt,
) -> Rat {
    let qr = Rat::from_bigint(q.clone());
    let qlo = lo.mul_rat(&qr);
    let qhi = hi.mul_rat(&qr);
    let p_min = first_integer_above(&qlo, lo_closed);
    let p_max = last_integer_below(&qhi, hi_closed);
    // m = floor((qlo + qhi) / 2), found by comparing 2m - qlo against qhi.
    let twice_le = |m: &BigInt| {
        let lhs = QuadExt::rational(Rat::from_bigint(m * 2))
            .checked_sub(&qlo)
            .expect("single radicand");
        qe_cmp(&lhs, &qhi) != Ordering::Greater
    };
    let est = ((qlo.to_f64() + qhi.to_f64()) / 2.0).floor();
    let mut m = if est.is_finite() {
        BigInt::from(est as i64)
    } else {
        p_min.clone()
    };
    while !twice_le(&m) {
        m -= 1;
    }
    while twice_le(&(&m + 1)) {
        m += 1;
    }
    // m <= mid < m + 1; m + 1 is nearer iff 2m + 1 - qlo < qhi.
    let up_nearer = {
        let lhs = QuadExt::rational(Rat::from_bigint(&m * 2 + 1))
            .checked_sub(&qlo)
            .expect("single radicand");
        qe_cmp(&lhs, &qhi) == Ordering::Less
    };
    let mut p = if up_nearer { m + 1 } else { m };
    if p < p_min {
        p = p_min;
    }
    if p > p_max {
        p = p_max;
    }
    Rat::from_big(p, q.clone()).expect("q > 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(x: Rat) -> Endpoint {
        Endpoint::Finite(QuadExt::rational(x))
    }

    #[test]
    fn integer_nearest_midpoint() {
        let r = simplest_in(&fin(Rat::new(1, 2)), &fin(Rat::new(9, 2)), false, false).unwrap();
        assert_eq!(r, Rat::from_int(2));
        let r = simplest_in(&fin(Rat::new(-1, 3)), &fin(Rat::new(5, 2)), false, false).unwrap();
        assert_eq!(r, Rat::from_int(1));
    }

    #[test]
    fn fractional_interval() {
        let r = simplest_in(&fin(Rat::new(1, 3)), &fin(Rat::new(1, 2)), false, false).unwrap();
        assert_eq!(r, Rat::new(2, 5));
        let r = simplest_in(&fin(Rat::new(1, 3)), &fin(Rat::new(1, 2)), false, true).unwrap();
        assert_eq!(r, Rat::new(1, 2));
        let r = simplest_in(&fin(Rat::zero()), &fin(Rat::one()), false, false).unwrap();
        assert_eq!(r, Rat::new(1, 2));
    }

    #[test]
    fn irrational_endpoints() {
        // (√2, √3) contains 3/2 and no integer.
        let lo = Endpoint::Finite(QuadExt::sqrt_of(&Rat::from_int(2)).unwrap());
        let hi = Endpoint::Finite(QuadExt::sqrt_of(&Rat::from_int(3)).unwrap());
        assert_eq!(simplest_in(&lo, &hi, false, false).unwrap(), Rat::new(3, 2));
        // (1/10, √2/10): 1/7 lies just above the upper end, so 1/8.
        let lo = fin(Rat::new(1, 10));
        let hi =
            Endpoint::Finite(QuadExt::new(Rat::zero(), Rat::new(1, 10), Rat::from_int(2)).unwrap());
        let r = simplest_in(&lo, &hi, false, false).unwrap();
        assert_eq!(r, Rat::new(1, 8));
    }

    #[test]
    fn unbounded() {
        assert_eq!(
            simplest_in(&Endpoint::NegInf, &Endpoint::PosInf, false, false).unwrap(),
            Rat::zero()
        );
        assert_eq!(
            simplest_in(&fin(Rat::new(5, 2)), &Endpoint::PosInf, false, false).unwrap(),
            Rat::from_int(3)
        );
        assert_eq!(
            simplest_in(&Endpoint::NegInf, &fin(Rat::from_int(-4)), false, false).unwrap(),
            Rat::from_int(-5)
        );
    }

    #[test]
    fn brute_force_agreement() {
        for a in -12i64..12 {
            for b in (a + 1)..14 {
                let lo = Rat::new(a, 4);
                let hi = Rat::new(b, 5);
                if lo >= hi {
                    continue;
                }
                let got = simplest_in(&fin(lo.clone()), &fin(hi.clone()), false, false).unwrap();
                assert!(got > lo && got < hi);
                let q = got.denom().clone();
                for d in 1i64..30 {
                    if BigInt::from(d) >= q {
                        break;
                    }
                    for n in -60i64..60 {
                        let c = Rat::new(n, d);
                        assert!(!(c > lo && c < hi), "{c} beats {got} in ({lo}, {hi})");
                    }
                }
            }
        }
    }
}
