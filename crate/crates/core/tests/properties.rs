use std::cmp::Ordering;

use proptest::prelude::*;

use zkit_core::homotopy::{gamma_point, interior_contains, winding, Loop, ParallelogramLoop};
use zkit_core::minkowski::{causal_class, metric, CausalClass, PoincareMap, Point, Vector};
use zkit_core::numerics::{Endpoint, OneDimSet, QuadExt, Rat};
use zkit_core::qe_cmp;
use zkit_core::region::{restrict_to_line, zeeman_ball, CertifiedOpen};
use zkit_core::zfunction::{eval_f, ZFParams};

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| Rat::new(a, b))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..=40, 1i64..=12, any::<bool>())
        .prop_map(|(a, b, neg)| Rat::new(if neg { -a } else { a }, b))
}

/// Slopes strictly inside (-1, 1).
fn slope() -> impl Strategy<Value = Rat> {
    (2i64..=16).prop_flat_map(|d| (-(d - 1)..=(d - 1)).prop_map(move |n| Rat::new(n, d)))
}

fn point() -> impl Strategy<Value = Point> {
    (rat(), rat()).prop_map(|(a, b)| Point::new(vec![a, b]))
}

fn vector() -> impl Strategy<Value = Vector> {
    (rat(), rat()).prop_map(|(a, b)| Vector::new(vec![a, b]))
}

fn timelike() -> impl Strategy<Value = Vector> {
    (nonzero_rat(), slope()).prop_map(|(a, m)| Vector::new(vec![a.clone(), &a * &m]))
}

fn spacelike() -> impl Strategy<Value = Vector> {
    (nonzero_rat(), slope()).prop_map(|(a, m)| Vector::new(vec![&a * &m, a]))
}

fn quad() -> impl Strategy<Value = QuadExt> {
    (
        rat(),
        rat(),
        prop::sample::select(vec![2i64, 3, 5, 7]),
        any::<bool>(),
    )
        .prop_map(|(a, b, c, irrational)| {
            if irrational {
                QuadExt::new(a, b, Rat::from_int(c)).unwrap()
            } else {
                QuadExt::rational(a)
            }
        })
}

fn set() -> impl Strategy<Value = OneDimSet> {
    let piece =
        (quad(), quad(), any::<bool>(), any::<bool>(), 0u8..8).prop_map(|(x, y, lc, hc, shape)| {
            let (lo, hi) = if qe_cmp(&x, &y) == Ordering::Greater {
                (y, x)
            } else {
                (x, y)
            };
            match shape {
                0 => OneDimSet::point(lo),
                1 => {
                    OneDimSet::interval(Endpoint::NegInf, Endpoint::Finite(hi), false, hc).unwrap()
                }
                2 => {
                    OneDimSet::interval(Endpoint::Finite(lo), Endpoint::PosInf, lc, false).unwrap()
                }
                _ => OneDimSet::interval(Endpoint::Finite(lo), Endpoint::Finite(hi), lc, hc)
                    .unwrap_or_else(|_| OneDimSet::empty()),
            }
        });
    prop::collection::vec(piece, 0..4)
        .prop_map(|ps| ps.iter().fold(OneDimSet::empty(), |acc, p| acc.union(p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn de_morgan_and_double_complement(a in set(), b in set()) {
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersect(&b.complement()));
        prop_assert_eq!(a.intersect(&b).complement(), a.complement().union(&b.complement()));
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.is_open(), a.complement().is_closed());
        prop_assert_eq!(a.difference(&b), a.intersect(&b.complement()));
    }

    #[test]
    fn qe_cmp_is_a_total_order(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(qe_cmp(&x, &y), qe_cmp(&y, &x).reverse());
        prop_assert_eq!(qe_cmp(&x, &x), Ordering::Equal);
        if qe_cmp(&x, &y) != Ordering::Greater && qe_cmp(&y, &z) != Ordering::Greater {
            prop_assert_ne!(qe_cmp(&x, &z), Ordering::Greater);
        }
    }

    #[test]
    fn boosts_preserve_the_metric(v in vector(), w in vector(), m in slope(), t in vector()) {
        let map = PoincareMap::boost_from_slope(&m).unwrap()
            .compose(&PoincareMap::translation(t)).unwrap();
        let (lv, lw) = (map.apply_vector(&v).unwrap(), map.apply_vector(&w).unwrap());
        prop_assert_eq!(metric(&lv, &lw).unwrap(), metric(&v, &w).unwrap());
        prop_assert_eq!(causal_class(&lv), causal_class(&v));
    }

    #[test]
    fn translation_commutes_with_membership(p in point(), x in point(), v in vector(), r in 1i64..5) {
        let ball = zeeman_ball(&p, &Rat::from_int(r)).unwrap();
        let moved = ball.translate(&v);
        prop_assert_eq!(moved.contains(&(&x + &v)), ball.contains(&x));
        let plain = CertifiedOpen::ball(p.clone(), Rat::from_int(r)).unwrap();
        prop_assert_eq!(plain.translate(&v).contains(&(&x + &v)), plain.contains(&x));
    }

    #[test]
    fn zeeman_ball_traces_are_open(p in point(), base in point(), dir in vector(), r in 1i64..5) {
        prop_assume!(!dir.is_zero());
        let ball = zeeman_ball(&p, &Rat::from_int(r)).unwrap();
        let trace = restrict_to_line(ball.region(), &base, &dir).unwrap();
        if causal_class(&dir) == CausalClass::Lightlike {
            prop_assert!(trace.is_finite() || trace.is_empty() || trace.is_open());
        } else {
            prop_assert!(trace.is_open());
        }
    }

    #[test]
    fn f_is_symmetric_through_p(p in point(), e in timelike(), x in point()) {
        let params = ZFParams::standard(p.clone(), e).unwrap();
        let mirrored = &p - &(&x - &p);
        prop_assert_eq!(eval_f(&params, &x).unwrap(), eval_f(&params, &mirrored).unwrap());
    }

    #[test]
    fn gamma_cases_agree(o in point(), t in timelike(), s in spacelike()) {
        let p = ParallelogramLoop::new(o, t.clone(), s.clone()).unwrap();
        let corners = p.corners();
        for (i, u) in [Rat::new(1, 4), Rat::new(1, 2), Rat::new(3, 4)].iter().enumerate() {
            prop_assert_eq!(&gamma_point(&p, u).unwrap(), &corners[i + 1]);
        }
    }

    #[test]
    fn winding_negates_and_adds(o in point(), t in timelike(), s in spacelike(), x in point()) {
        let p = ParallelogramLoop::new(o, t, s).unwrap();
        let lp = p.to_loop();
        if let Ok(w) = winding(&lp, &x) {
            prop_assert_eq!(winding(&lp.reverse(), &x).unwrap(), -w);
            prop_assert_eq!(winding(&lp.concat(&lp).unwrap(), &x).unwrap(), 2 * w);
            prop_assert_eq!(w != 0, interior_contains(&p, &x).unwrap());
            prop_assert!(w.abs() <= 1);
        }
    }

    #[test]
    fn random_polygons_reverse(vs in prop::collection::vec(point(), 3..7), x in point()) {
        if let Ok(lp) = Loop::uniform(vs) {
            if let Ok(w) = winding(&lp, &x) {
                prop_assert_eq!(winding(&lp.reverse(), &x).unwrap(), -w);
                prop_assert_eq!(winding(&lp.power(3).unwrap(), &x).unwrap(), 3 * w);
            }
        }
    }
}
