//! Cancellation- and overflow-safe building blocks for the hyperbolic
//! expressions used throughout the crate.
//!
//! Everything here works in the log domain wherever the direct formula
//! would overflow `f64` or lose its leading digits to cancellation.

use std::f64::consts::LN_2;

/// `ln(cosh(y))`, accurate for every finite `y`.
///
/// Small `|y|` goes through `ln(1 + 2 sinh^2(y/2))`, which keeps full
/// relative precision near zero; large `|y|` uses
/// `|y| - ln 2 + ln(1 + e^(-2|y|))`, which never overflows.
pub fn ln_cosh(y: f64) -> f64 {
    let a = y.abs();
    if a < 1.0 {
        let s = (0.5 * a).sinh();
        (2.0 * s * s).ln_1p()
    } else {
        a - LN_2 + (-2.0 * a).exp().ln_1p()
    }
}

/// `ln(sinh(y))` for `y > 0`.
pub fn ln_sinh(y: f64) -> f64 {
    debug_assert!(y > 0.0);
    if y < 1.0 {
        y.sinh().ln()
    } else {
        y - LN_2 + (-(-2.0 * y).exp()).ln_1p()
    }
}

/// `ln(tanh(y))` for `y > 0`.
///
/// Uses `ln(1 - e^(-2y)) - ln(1 + e^(-2y))` above 1 so the result stays
/// strictly negative however large `y` gets; the plain difference of
/// `ln_sinh` and `ln_cosh` would round to exactly zero there.
pub fn ln_tanh(y: f64) -> f64 {
    debug_assert!(y > 0.0);
    if y < 1.0 {
        y.tanh().ln()
    } else {
        let e = (-2.0 * y).exp();
        (-e).ln_1p() - e.ln_1p()
    }
}

/// `ln(e^a + e^b)` without overflow.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi.is_infinite() {
        return hi;
    }
    hi + (lo - hi).exp().ln_1p()
}

/// `(cosh(scale * x))^(power / scale) - 1` without cancellation.
///
/// The gap vanishes only at `x = 0`; running `exp_m1` on the log form
/// keeps full relative accuracy however small the gap is. The result
/// saturates to `+inf` once the exponent leaves `f64` range; pair with
/// [`cosh_power_gap_ln`] to form ratios of two such gaps.
pub fn cosh_power_gap(scale: f64, power: f64, x: f64) -> f64 {
    cosh_power_gap_ln(scale, power, x).exp_m1()
}

/// The exponent `(power / scale) * ln(cosh(scale * x))` behind
/// [`cosh_power_gap`].
pub fn cosh_power_gap_ln(scale: f64, power: f64, x: f64) -> f64 {
    (power / scale) * ln_cosh(scale * x)
}

/// Ratio of two `cosh` power gaps sharing one exponent `power` and one
/// abscissa `x`, with a log-domain fallback when both gaps overflow.
pub fn cosh_power_gap_ratio(num_scale: f64, den_scale: f64, power: f64, x: f64) -> f64 {
    let num = cosh_power_gap(num_scale, power, x);
    let den = cosh_power_gap(den_scale, power, x);
    if num.is_infinite() && den.is_infinite() {
        (cosh_power_gap_ln(num_scale, power, x) - cosh_power_gap_ln(den_scale, power, x)).exp()
    } else {
        num / den
    }
}

/// `y * coth(y) - 1`, accurate through `y = 0` (limit 0).
///
/// Below the switch point the even series
/// `y^2/3 - y^4/45 + 2 y^6/945 - y^8/4725` is exact to well under 1 ulp;
/// above it the direct formula has no cancellation issue.
pub fn y_coth_y_minus_1(y: f64) -> f64 {
    let a = y.abs();
    if a < 0.05 {
        let u = y * y;
        u * (1.0 / 3.0 + u * (-1.0 / 45.0 + u * (2.0 / 945.0 - u / 4725.0)))
    } else {
        a / a.tanh() - 1.0
    }
}

/// Sign and log-magnitude of a real number, for sums and ratios of
/// hyperbolic terms far beyond `f64` range.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct SignedLog {
    sign: i8,
    ln_abs: f64,
}

impl SignedLog {
    pub fn zero() -> Self {
        SignedLog {
            sign: 0,
            ln_abs: f64::NEG_INFINITY,
        }
    }

    /// `sinh(y)` in signed-log form.
    pub fn sinh(y: f64) -> Self {
        if y == 0.0 {
            return Self::zero();
        }
        SignedLog {
            sign: if y > 0.0 { 1 } else { -1 },
            ln_abs: ln_sinh(y.abs()),
        }
    }

    /// Multiply by an ordinary float.
    pub fn scale(self, k: f64) -> Self {
        if k == 0.0 || self.sign == 0 {
            return Self::zero();
        }
        SignedLog {
            sign: if k > 0.0 { self.sign } else { -self.sign },
            ln_abs: self.ln_abs + k.abs().ln(),
        }
    }

    pub fn add(self, other: Self) -> Self {
        if self.sign == 0 {
            return other;
        }
        if other.sign == 0 {
            return self;
        }
        let (hi, lo) = if self.ln_abs >= other.ln_abs {
            (self, other)
        } else {
            (other, self)
        };
        let d = (lo.ln_abs - hi.ln_abs).exp();
        if hi.sign == lo.sign {
            SignedLog {
                sign: hi.sign,
                ln_abs: hi.ln_abs + d.ln_1p(),
            }
        } else if d == 1.0 {
            Self::zero()
        } else {
            SignedLog {
                sign: hi.sign,
                ln_abs: hi.ln_abs + (-d).ln_1p(),
            }
        }
    }

    /// Collapse to `f64`; huge magnitudes saturate to signed infinity.
    pub fn value(self) -> f64 {
        f64::from(self.sign) * self.ln_abs.exp()
    }

    /// `self / other` as `f64`; `other` must be nonzero.
    pub fn ratio(self, other: Self) -> f64 {
        debug_assert!(other.sign != 0);
        if self.sign == 0 {
            return 0.0;
        }
        f64::from(self.sign * other.sign) * (self.ln_abs - other.ln_abs).exp()
    }
}
