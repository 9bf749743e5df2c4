//! Seeded random inputs for property checks and CLI scans.
//!
//! The generator is SplitMix64 (`rand_xoshiro::SplitMix64`) seeded directly
//! with the 64-bit seed, so a seed reproduces the same stream on every
//! platform.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::compactness::{CompactCandidate, Part};
use crate::minkowski::{Axis, CausalClass, Point, Vector};
use crate::numerics::Rat;
use crate::region::{zeeman_ball, CertifiedOpen};
use crate::zeno::SequenceFamily;

pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    /// `a/b` with `|a| ≤ num` and `1 ≤ b ≤ den`.
    pub fn rat(&mut self, num: i64, den: i64) -> Rat {
        let a = self.int(-num, num);
        let b = self.int(1, den);
        Rat::new(a, b)
    }

    pub fn small_rat(&mut self) -> Rat {
        self.rat(12, 8)
    }

    pub fn positive_rat(&mut self, num: i64, den: i64) -> Rat {
        Rat::new(self.int(1, num), self.int(1, den))
    }

    pub fn nonzero_rat(&mut self) -> Rat {
        let r = self.positive_rat(12, 8);
        if self.coin() {
            r
        } else {
            -r
        }
    }

    /// A slope `m` with `|m| < 1`.
    pub fn slope(&mut self) -> Rat {
        let den = self.int(2, 16);
        Rat::new(self.int(-(den - 1), den - 1), den)
    }

    pub fn point(&mut self, dim: usize) -> Point {
        Point::new((0..dim).map(|_| self.small_rat()).collect())
    }

    /// A nonzero vector of the given class in the 1+1 plane.
    pub fn vector_of_class(&mut self, class: CausalClass) -> Vector {
        let a = self.nonzero_rat();
        let m = self.slope();
        let b = &a * &m;
        match class {
            CausalClass::Timelike => Vector::new(vec![a, b]),
            CausalClass::Spacelike => Vector::new(vec![b, a]),
            CausalClass::Lightlike => {
                let b = if self.coin() { a.clone() } else { -a.clone() };
                Vector::new(vec![a, b])
            }
            CausalClass::Zero => Vector::zero(2),
        }
    }

    pub fn nonlight_class(&mut self) -> CausalClass {
        if self.coin() {
            CausalClass::Timelike
        } else {
            CausalClass::Spacelike
        }
    }

    pub fn any_class(&mut self) -> CausalClass {
        [
            CausalClass::Timelike,
            CausalClass::Spacelike,
            CausalClass::Lightlike,
        ][self.index(3)]
    }

    pub fn axis_through(&mut self, p: &Point) -> Axis {
        let class = self.nonlight_class();
        let dir = self.vector_of_class(class);
        Axis::line(p.clone(), dir).expect("non-lightlike direction")
    }

    pub fn axis(&mut self) -> Axis {
        let base = self.point(2);
        self.axis_through(&base)
    }

    pub fn ratio(&mut self) -> Rat {
        let den = self.int(2, 9);
        Rat::new(self.int(1, den - 1), den)
    }

    pub fn certified_open(&mut self, p: &Point) -> CertifiedOpen {
        let radius = self.positive_rat(6, 4);
        match self.index(4) {
            0 => CertifiedOpen::ball(p.clone(), radius).expect("positive radius"),
            1 => zeeman_ball(p, &radius).expect("positive radius"),
            2 => {
                let ball = CertifiedOpen::ball(p.clone(), radius).expect("positive radius");
                let family = SequenceFamily::RotatingAxial {
                    p: p.clone(),
                    ratio: self.ratio(),
                };
                CertifiedOpen::remove_image(ball, family)
                    .expect("axial families meet lines finitely")
            }
            _ => {
                let a = zeeman_ball(p, &radius).expect("positive radius");
                let c = self.point(2);
                let b = CertifiedOpen::ball(c, self.positive_rat(6, 4)).expect("positive radius");
                CertifiedOpen::union(vec![a, b])
            }
        }
    }

    pub fn family(&mut self) -> SequenceFamily {
        let p = self.point(2);
        match self.index(5) {
            0 => {
                let class = self.any_class();
                SequenceFamily::GeometricOnLine {
                    v: self.vector_of_class(class),
                    ratio: self.ratio(),
                    p,
                }
            }
            1 => SequenceFamily::RotatingAxial {
                ratio: self.ratio(),
                p,
            },
            2 => SequenceFamily::ConeSequence {
                dir: self.vector_of_class(CausalClass::Lightlike),
                ratio: self.ratio(),
                p,
            },
            3 => SequenceFamily::AxialWithin {
                ratio: self.ratio(),
                open: Box::new(self.certified_open(&p)),
                p,
            },
            _ => {
                let count = self.index(6);
                let mut points = vec![];
                while points.len() < count {
                    let x = self.point(2);
                    if !points.contains(&x) {
                        points.push(x);
                    }
                }
                SequenceFamily::FinitePrefix { points, limit: p }
            }
        }
    }

    pub fn part(&mut self) -> Part {
        match self.index(4) {
            0 => Part::Point { at: self.point(2) },
            1 | 2 => {
                let p = self.point(2);
                let class = self.any_class();
                let q = &p + &self.vector_of_class(class);
                Part::Segment { p, q }
            }
            _ => Part::CompletedZeno {
                family: self.family(),
            },
        }
    }

    pub fn candidate(&mut self) -> CompactCandidate {
        let count = self.int(0, 4) as usize;
        CompactCandidate::new((0..count).map(|_| self.part()).collect())
    }
}
