//! The function `f` that is continuous in the Zeeman topology but not in the
//! natural one:
//!
//! ```text
//! f(x) = h(|g(e, x-p)|^(2α+β) / |g(x-p, x-p)|^α)   off C(p)
//! f(x) = 1                                        on C(p) ∖ {p}
//! f(p) = 0
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZkitError};
use crate::minkowski::{causal_class, g, line_parameter, Axis, CausalClass, Point, Vector};
use crate::numerics::Rat;

/// Profile `h` with `h(0) = 0` and `h(s) → 1` as `s → ∞`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    /// `s / (1 + s)`.
    #[default]
    Rational,
    /// `1 - exp(-s)`.
    Exponential,
    /// `tanh(s)`.
    Tanh,
}

impl Profile {
    pub fn eval(self, s: f64) -> f64 {
        if s.is_infinite() {
            return 1.0;
        }
        match self {
            Profile::Rational => s / (1.0 + s),
            Profile::Exponential => -(-s).exp_m1(),
            Profile::Tanh => s.tanh(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZFParams {
    pub p: Point,
    pub e: Vector,
    pub alpha: f64,
    pub beta: f64,
    #[serde(default)]
    pub h: Profile,
}

impl ZFParams {
    pub fn new(p: Point, e: Vector, alpha: f64, beta: f64, h: Profile) -> Result<Self> {
        let params = ZFParams {
            p,
            e,
            alpha,
            beta,
            h,
        };
        params.validate()?;
        Ok(params)
    }

    /// `α = β = 1` with the rational profile.
    pub fn standard(p: Point, e: Vector) -> Result<Self> {
        ZFParams::new(p, e, 1.0, 1.0, Profile::Rational)
    }

    pub fn validate(&self) -> Result<()> {
        self.e.ensure_dim(self.p.dim())?;
        if causal_class(&self.e) != CausalClass::Timelike {
            return Err(ZkitError::InvalidParameter(
                "e must be timelike".to_string(),
            ));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite() && self.beta > 0.0 && self.beta.is_finite())
        {
            return Err(ZkitError::InvalidParameter(
                "exponents must be positive and finite".to_string(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FCase {
    Vertex,
    Cone,
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FValue {
    pub f: f64,
    pub case: FCase,
}

fn ln_rat(x: &Rat) -> f64 {
    let v = x.to_f64();
    if v.is_normal() {
        v.ln()
    } else {
        // Outside the normal range; split numerator and denominator.
        let n = Rat::from_bigint(x.numer().clone()).to_f64();
        let d = Rat::from_bigint(x.denom().clone()).to_f64();
        n.ln() - d.ln()
    }
}

/// `a^x / b^y` for rationals `a ≥ 0`, `b > 0`, evaluated through logarithms.
fn power_ratio(a: &Rat, x: f64, b: &Rat, y: f64) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    (x * ln_rat(a) - y * ln_rat(b)).exp()
}

/// Evaluates `f` at `x`. The vertex and cone cases are decided exactly; the
/// generic case takes one floating exponentiation of exact metric values.
pub fn eval_f(params: &ZFParams, x: &Point) -> Result<FValue> {
    x.ensure_dim(params.p.dim())?;
    let w = x - &params.p;
    if w.is_zero() {
        return Ok(FValue {
            f: 0.0,
            case: FCase::Vertex,
        });
    }
    let gw = g(&w, &w);
    if gw.is_zero() {
        return Ok(FValue {
            f: 1.0,
            case: FCase::Cone,
        });
    }
    let num = g(&params.e, &w).abs();
    let s = power_ratio(
        &num,
        2.0 * params.alpha + params.beta,
        &gw.abs(),
        params.alpha,
    );
    Ok(FValue {
        f: params.h.eval(s),
        case: FCase::Generic,
    })
}

fn axis_dir_through_p<'a>(params: &ZFParams, axis: &'a Axis) -> Result<&'a Vector> {
    let u = axis.line_dir().ok_or(ZkitError::UnsupportedDimension {
        required: 1,
        found: axis.base().dim().saturating_sub(1),
    })?;
    u.ensure_dim(params.p.dim())?;
    if line_parameter(axis.base(), u, &params.p).is_none() {
        return Err(ZkitError::AxisNotThroughPoint);
    }
    Ok(u)
}

/// The sharp constant `c = |g(e,u)| / |g(u,u)|^½` with
/// `|g(e,v)| ≤ c·|g(v,v)|^½` for all `v` along the axis direction `u`.
pub fn axis_bound_constant(params: &ZFParams, axis: &Axis) -> Result<f64> {
    let u = axis_dir_through_p(params, axis)?;
    Ok(bound_constant(params, u))
}

fn bound_constant(params: &ZFParams, u: &Vector) -> f64 {
    let num = g(&params.e, u).abs();
    if num.is_zero() {
        return 0.0;
    }
    (ln_rat(&num) - 0.5 * ln_rat(&g(u, u).abs())).exp()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditSample {
    pub n: u32,
    pub t: Rat,
    pub f: f64,
    pub bound: f64,
    pub margin: f64,
    /// Largest `f` over this and all later samples.
    pub tail_max: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisAudit {
    pub c: f64,
    pub bound_ok: bool,
    /// Largest `f` over the second half of the samples (`n > samples/2`).
    pub tail_max: f64,
    pub min_margin: f64,
    pub samples: Vec<AuditSample>,
}

impl AxisAudit {
    /// Largest `f` over samples with index at least `n`.
    pub fn tail_max_from(&self, n: u32) -> Option<f64> {
        self.samples.iter().find(|s| s.n >= n).map(|s| s.tail_max)
    }
}

/// Samples `f(p + t·u)` at `t = inner_scaleⁿ`, `n = 1..=samples`, against
/// the bound `h(c^(2α+β)·|g(tu,tu)|^(β/2))`.
pub fn audit_axis_continuity(
    params: &ZFParams,
    axis: &Axis,
    samples: u32,
    inner_scale: &Rat,
    tol: f64,
) -> Result<AxisAudit> {
    if !inner_scale.in_open_unit_interval() {
        return Err(ZkitError::InvalidParameter(
            "inner scale must lie in (0, 1)".to_string(),
        ));
    }
    let u = axis_dir_through_p(params, axis)?.clone();
    let c = bound_constant(params, &u);
    let guu = g(&u, &u).abs();
    let mut rows = Vec::with_capacity(samples as usize);
    for n in 1..=samples {
        let t = inner_scale.pow(n);
        let x = params.p.along(&u, &t);
        let f = eval_f(params, &x)?.f;
        let gtt = &guu * &t.square();
        let arg = if c == 0.0 {
            0.0
        } else {
            ((2.0 * params.alpha + params.beta) * c.ln() + 0.5 * params.beta * ln_rat(&gtt)).exp()
        };
        let bound = params.h.eval(arg);
        rows.push(AuditSample {
            n,
            t,
            f,
            bound,
            margin: bound - f,
            tail_max: f,
        });
    }
    let mut running = f64::NEG_INFINITY;
    for row in rows.iter_mut().rev() {
        running = running.max(row.f);
        row.tail_max = running;
    }
    let min_margin = rows.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
    let tail_max = rows
        .iter()
        .find(|r| r.n > samples / 2)
        .map_or(0.0, |r| r.tail_max);
    Ok(AxisAudit {
        c,
        bound_ok: rows.iter().all(|r| r.margin >= -tol),
        tail_max,
        min_margin: if rows.is_empty() { 0.0 } else { min_margin },
        samples: rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayAudit {
    pub dir: Vector,
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscontinuityReport {
    pub f_at_p: f64,
    pub rays: Vec<RayAudit>,
    /// Every sampled value is exactly 1 while `f(p) = 0`.
    pub discontinuous: bool,
}

/// Evaluates `f` at `p + (1/2)ⁿ·d` for `n = 1..=count` along both lightlike
/// directions `d = e₀ ± e₁`.
pub fn audit_n_discontinuity(params: &ZFParams, count: u32) -> Result<DiscontinuityReport> {
    let dim = params.p.dim();
    if dim < 2 {
        return Err(ZkitError::UnsupportedDimension {
            required: 1,
            found: 0,
        });
    }
    let f_at_p = eval_f(params, &params.p)?.f;
    let half = Rat::new(1, 2);
    let mut rays = vec![];
    for sign in [1, -1] {
        let mut d = Vector::basis(dim, 0);
        d.0[1] = Rat::from_int(sign);
        let values = (1..=count)
            .map(|n| eval_f(params, &params.p.along(&d, &half.pow(n))).map(|v| v.f))
            .collect::<Result<Vec<_>>>()?;
        rays.push(RayAudit { dir: d, values });
    }
    let discontinuous = f_at_p == 0.0 && rays.iter().all(|r| r.values.iter().all(|&v| v == 1.0));
    Ok(DiscontinuityReport {
        f_at_p,
        rays,
        discontinuous,
    })
}
