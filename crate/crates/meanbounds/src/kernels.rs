//! Hyperbolic kernels behind the monotonicity analysis of power-mean gap
//! ratios.
//!
//! The central object is the two-parameter gap ratio
//! `((cosh r x)^(q/r) - 1) / ((cosh x)^q - 1)`; the other kernels are the
//! derivative machinery that decides where it is monotone in `x`: the
//! slope quotient of the two gaps, its sign kernel, the sinh excess under
//! argument scaling, and the curvature apparatus for the admissible range
//! of inner orders.

use crate::error::{Error, Result};
use crate::stable::{cosh_power_gap_ratio, ln_cosh, ln_sinh, ln_tanh, SignedLog};

/// Largest `sinh` argument evaluated directly; beyond it everything moves
/// to signed-log arithmetic (`sinh(690)` is about 5e299, still safely
/// below `f64::MAX` even after sums).
const DIRECT_SINH_LIMIT: f64 = 690.0;

/// Largest scaled argument fed to the excess power series.
const EXCESS_SERIES_CUTOFF: f64 = 0.5;

/// Orders at which the sinh-excess ratio degenerates (numerator or
/// denominator vanishes identically, or the limit table has a pole).
pub const EXCLUDED_RATIO_ORDERS: [f64; 5] = [-1.0, 0.0, 0.5, 1.0, 2.0];

/// Parameters `(alpha, beta, gamma)` of the cosh gap quotient; their
/// magnitudes must be finite and pairwise distinct.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelTriple {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl KernelTriple {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let (a, b, c) = (alpha.abs(), beta.abs(), gamma.abs());
        let ok = alpha.is_finite()
            && beta.is_finite()
            && gamma.is_finite()
            && a != b
            && a != c
            && b != c;
        if ok {
            Ok(KernelTriple { alpha, beta, gamma })
        } else {
            Err(Error::DegenerateTriple { alpha, beta, gamma })
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// A point `(r, q)` of the classification plane: finite, `r` outside
/// `{0, 1}` and `q` nonzero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RQPoint {
    r: f64,
    q: f64,
}

impl RQPoint {
    pub fn new(r: f64, q: f64) -> Result<Self> {
        if r.is_finite() && q.is_finite() && r != 0.0 && r != 1.0 && q != 0.0 {
            Ok(RQPoint { r, q })
        } else {
            Err(Error::ExcludedPoint { r, q })
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

/// A finite positive evaluation abscissa.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalPoint {
    x: f64,
}

impl EvalPoint {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() && x > 0.0 {
            Ok(EvalPoint { x })
        } else {
            Err(Error::InvalidEvalPoint { x })
        }
    }

    pub fn value(self) -> f64 {
        self.x
    }
}

fn sign_of_gap(u: f64, v: f64) -> f64 {
    if u > v {
        1.0
    } else {
        -1.0
    }
}

/// Quotient `(cosh(alpha x) - cosh(gamma x)) / (cosh(beta x) - cosh(gamma x))`.
///
/// Depends on the parameters only through their magnitudes. Each
/// difference factors as `2 sinh((u+v)x/2) sinh((u-v)x/2)`, so the
/// quotient is evaluated as a product of sinh factors entirely in the log
/// domain: no intermediate overflows, and full relative accuracy at every
/// `x > 0`. The value is never 0 or 1.
pub fn cosh_gap_quotient(triple: &KernelTriple, x: EvalPoint) -> f64 {
    let (a, b, c) = (
        triple.alpha().abs(),
        triple.beta().abs(),
        triple.gamma().abs(),
    );
    let half = 0.5 * x.value();
    let sign = sign_of_gap(a, c) * sign_of_gap(b, c);
    let ln_mag = ln_sinh((a + c) * half) + ln_sinh((a - c).abs() * half)
        - ln_sinh((b + c) * half)
        - ln_sinh((b - c).abs() * half);
    sign * ln_mag.exp()
}

/// Direction in which [`cosh_gap_quotient`] moves as `x` grows: `+1` for
/// strictly increasing, `-1` for strictly decreasing. Equals the sign of
/// `(a^2-b^2)(a^2-g^2)(b^2-g^2)` on the magnitudes, computed from exact
/// comparisons.
pub fn monotonicity_direction(triple: &KernelTriple) -> i32 {
    let (a, b, c) = (
        triple.alpha().abs(),
        triple.beta().abs(),
        triple.gamma().abs(),
    );
    let s = |u: f64, v: f64| if u > v { 1 } else { -1 };
    s(a, b) * s(a, c) * s(b, c)
}

fn excess_series_applies(max_scale: f64, x: f64) -> bool {
    2.0 * max_scale * x <= EXCESS_SERIES_CUTOFF
}

/// `(sinh(2 ell x) - ell sinh(2 x)) / x^3` by the odd power series
/// `sum_{n>=1} 2^(2n+1) x^(2n-2) ell (ell^(2n) - 1) / (2n+1)!`.
///
/// All terms share the sign of `ell (ell^2 - 1)`, so the truncation test
/// against the running sum is safe. Factoring out `x^3` keeps ratios of
/// two excesses well conditioned for arbitrarily small `x`.
fn sinh_excess_series_scaled(ell: f64, x: f64) -> f64 {
    let zz = 4.0 * x * x;
    let l2 = ell * ell;
    let mut coeff = 8.0 / 6.0;
    let mut lpow = l2;
    let mut sum = 0.0;
    for n in 1..=24u32 {
        let term = coeff * ell * (lpow - 1.0);
        sum += term;
        if term.abs() <= f64::EPSILON * sum.abs() {
            break;
        }
        coeff *= zz / ((2 * n + 2) as f64 * (2 * n + 3) as f64);
        lpow *= l2;
    }
    sum
}

fn sinh_excess_signed_log(ell: f64, x: f64) -> SignedLog {
    SignedLog::sinh(2.0 * ell * x).add(SignedLog::sinh(2.0 * x).scale(-ell))
}

/// Sinh excess `sinh(2 ell x) - ell sinh(2 x)`: the surplus of argument
/// scaling over linear scaling.
///
/// Strictly positive for `ell > 1` and `-1 < ell < 0`, strictly negative
/// for `0 < ell < 1` and `ell < -1`, identically zero at
/// `ell` in `{-1, 0, 1}`. Leading behaviour near zero is
/// `(4/3) ell (ell^2 - 1) x^3`. Saturates to signed infinity once the
/// exact value leaves `f64` range.
pub fn sinh_excess(ell: f64, x: EvalPoint) -> f64 {
    debug_assert!(ell.is_finite());
    let xv = x.value();
    if excess_series_applies(ell.abs().max(1.0), xv) {
        sinh_excess_series_scaled(ell, xv) * xv * xv * xv
    } else if 2.0 * xv * ell.abs().max(1.0) <= DIRECT_SINH_LIMIT {
        (2.0 * ell * xv).sinh() - ell * (2.0 * xv).sinh()
    } else {
        sinh_excess_signed_log(ell, xv).value()
    }
}

/// `1 - excess(r - 1) / excess(r)` where `excess` is [`sinh_excess`].
///
/// Rejects the degenerate orders in [`EXCLUDED_RATIO_ORDERS`]. Tends to
/// `3 / (r + 1)` as `x -> 0`; as `x -> inf` it tends to 1 for `r > 1`,
/// `1/r` for `0 < r < 1`, `+inf` for `-1 < r < 0` and `-inf` for `r < -1`.
pub fn sinh_excess_ratio(r: f64, x: EvalPoint) -> Result<f64> {
    if !r.is_finite() || EXCLUDED_RATIO_ORDERS.contains(&r) {
        return Err(Error::ExcludedRatioOrder { r });
    }
    let xv = x.value();
    let max_scale = r.abs().max((r - 1.0).abs()).max(1.0);
    let ratio = if excess_series_applies(max_scale, xv) {
        sinh_excess_series_scaled(r - 1.0, xv) / sinh_excess_series_scaled(r, xv)
    } else if 2.0 * xv * max_scale <= DIRECT_SINH_LIMIT {
        sinh_excess(r - 1.0, x) / sinh_excess(r, x)
    } else {
        sinh_excess_signed_log(r - 1.0, xv).ratio(sinh_excess_signed_log(r, xv))
    };
    Ok(1.0 - ratio)
}

/// Sign kernel `(q - 2) excess(r) - q excess(r - 1)`: it has the same sign
/// as the x-derivative of [`gap_slope_quotient`] at the same `(r, q, x)`.
///
/// Near zero it behaves like `4 r (r - 1) (q - 2(r + 1)/3) x^3`. Saturates
/// to signed infinity once the exact value leaves `f64` range.
pub fn gap_slope_kernel(point: &RQPoint, x: EvalPoint) -> f64 {
    let (r, q) = (point.r(), point.q());
    let xv = x.value();
    let max_scale = r.abs().max((r - 1.0).abs()).max(1.0);
    if excess_series_applies(max_scale, xv) {
        let scaled = (q - 2.0) * sinh_excess_series_scaled(r, xv)
            - q * sinh_excess_series_scaled(r - 1.0, xv);
        scaled * xv * xv * xv
    } else if 2.0 * xv * max_scale <= DIRECT_SINH_LIMIT {
        (q - 2.0) * sinh_excess(r, x) - q * sinh_excess(r - 1.0, x)
    } else {
        sinh_excess_signed_log(r, xv)
            .scale(q - 2.0)
            .add(sinh_excess_signed_log(r - 1.0, xv).scale(-q))
            .value()
    }
}

/// Slope quotient `(cosh r x)^(q/r) tanh(r x) / ((cosh x)^q tanh x)`: the
/// ratio of the x-derivatives of the two cosh power gaps behind
/// [`gap_ratio`], up to the positive factor `r` absorbed into neither gap.
///
/// Negative exactly when `r < 0`. Evaluated in the log domain so large
/// `q x` cannot overflow.
pub fn gap_slope_quotient(point: &RQPoint, x: EvalPoint) -> f64 {
    let (r, q) = (point.r(), point.q());
    let xv = x.value();
    let ln_mag =
        (q / r) * ln_cosh(r * xv) + ln_tanh((r * xv).abs()) - q * ln_cosh(xv) - ln_tanh(xv);
    let sign = if r > 0.0 { 1.0 } else { -1.0 };
    sign * ln_mag.exp()
}

/// Gap ratio `((cosh r x)^(q/r) - 1) / ((cosh x)^q - 1)`.
pub fn gap_ratio(point: &RQPoint, x: EvalPoint) -> f64 {
    cosh_power_gap_ratio(point.r(), 1.0, point.q(), x.value())
}

/// The pointwise limits of [`gap_ratio`]: at `x -> 0` the value is `r`;
/// at `x -> inf` it is `2^(q - q/r)` for `r > 0, q > 0`, zero for
/// `r < 0 < q`, one for `q < 0 < r` and `-inf` for `r, q < 0`.
pub fn gap_ratio_limits(point: &RQPoint) -> (f64, f64) {
    let (r, q) = (point.r(), point.q());
    let at_infinity = match (r > 0.0, q > 0.0) {
        (true, true) => (q - q / r).exp2(),
        (false, true) => 0.0,
        (true, false) => 1.0,
        (false, false) => f64::NEG_INFINITY,
    };
    (r, at_infinity)
}

fn require_inner_order(t: f64) -> Result<()> {
    if t.is_finite() && t > 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            name: "t",
            value: t,
            requirement: "finite and greater than 1",
        })
    }
}

fn require_positive_q(q: f64) -> Result<()> {
    if q.is_finite() && q > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            name: "q",
            value: q,
            requirement: "finite and positive",
        })
    }
}

/// Curvature ratio
/// `(t-1) coth((t-1)x) - (q+1) tanh x + (q-t) tanh(t x)`
/// of the growth family: the second x-derivative of [`mean_growth`] over
/// its first, at outer exponent `q` and inner order `t > 1`.
pub fn curvature_ratio(q: f64, x: EvalPoint, t: f64) -> Result<f64> {
    require_positive_q(q)?;
    require_inner_order(t)?;
    let xv = x.value();
    let d = t - 1.0;
    Ok(d / (d * xv).tanh() - (q + 1.0) * xv.tanh() + (q - t) * (t * xv).tanh())
}

/// Threshold
/// `t + (t-1) (cosh(t x) / sinh((t-1)x))^2 - cosh x cosh(t x) / (x sinh((t-1)x))`:
/// [`curvature_ratio`] is strictly decreasing in `t` at `(q, x)` exactly
/// when `q` is below this value. It exceeds `(2 + 4t)/3` for every
/// `x > 0` and tends to that limit as `x -> 0`.
///
/// Evaluated directly, which is fine for `t x` up to a few hundred; the
/// two large terms cancel to relative accuracy about `1e-16 / x^2` near
/// zero, so values below `x = 1e-4` should not be trusted past 1e-8.
pub fn curvature_threshold(x: EvalPoint, t: f64) -> Result<f64> {
    require_inner_order(t)?;
    let xv = x.value();
    let d = t - 1.0;
    let cosh_t = (t * xv).cosh();
    let sinh_d = (d * xv).sinh();
    let quot = cosh_t / sinh_d;
    Ok(t + d * quot * quot - xv.cosh() * cosh_t / (xv * sinh_d))
}

/// Partial derivative of [`curvature_ratio`] in `t`:
/// `(x / cosh^2(t x)) (q - threshold)` with the threshold from
/// [`curvature_threshold`].
pub fn curvature_ratio_dt(q: f64, x: EvalPoint, t: f64) -> Result<f64> {
    require_positive_q(q)?;
    let threshold = curvature_threshold(x, t)?;
    let xv = x.value();
    let c = (t * xv).cosh();
    Ok(xv / (c * c) * (q - threshold))
}

/// Coefficient polynomial
/// `(2n+1)(3 d (1+d)^(2n) - (3+d) d^(2n)) - 3 (1+d)^(2n+1) - 3 d^(2n+1) + 3`
/// from the small-x expansion behind [`curvature_threshold`]; strictly
/// positive for every `d > 0` once `n >= 2`.
pub fn curvature_coefficient(n: u32, delta: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::CoefficientIndex { n });
    }
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::InvalidArgument {
            name: "delta",
            value: delta,
            requirement: "finite and positive",
        });
    }
    let m = (2 * n) as i32;
    let u = 1.0 + delta;
    let upow = u.powi(m);
    let dpow = delta.powi(m);
    let k = f64::from(2 * n + 1);
    Ok(k * (3.0 * delta * upow - (3.0 + delta) * dpow) - 3.0 * upow * u - 3.0 * dpow * delta + 3.0)
}

/// Growth factor `((cosh v x)^(1/v) / cosh x)^q` of the power-mean family
/// along the inner order `v > 1`: the `q`-th power of the ratio between
/// the order-`v` and order-1 power means of `(e^x, e^(-x))`.
pub fn mean_growth(q: f64, x: f64, v: f64) -> Result<f64> {
    require_positive_q(q)?;
    require_inner_order(v)?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidArgument {
            name: "x",
            value: x,
            requirement: "finite and nonnegative",
        });
    }
    Ok((q * (ln_cosh(v * x) / v - ln_cosh(x))).exp())
}

/// x-derivative of [`mean_growth`]:
/// `q sinh((v-1)x) / (cosh x cosh(v x)) * mean_growth(q, x, v)`;
/// zero at `x = 0` and strictly positive beyond.
pub fn mean_growth_dx(q: f64, x: f64, v: f64) -> Result<f64> {
    let growth = mean_growth(q, x, v)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let ln_factor = ln_sinh((v - 1.0) * x) - ln_cosh(x) - ln_cosh(v * x);
    Ok(q * ln_factor.exp() * growth)
}
