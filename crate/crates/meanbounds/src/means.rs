//! Two-argument means and the gap ratios built from their differences.
//!
//! All ratios are invariant under swapping and scaling the pair, so every
//! evaluation is routed through the log of the argument ratio. Differences
//! of nearly equal mean powers go through `exp_m1` of log quantities,
//! which keeps full relative precision arbitrarily close to the diagonal
//! `a = b`.

use crate::error::{Error, Result};
use crate::stable::{
    cosh_power_gap, cosh_power_gap_ln, cosh_power_gap_ratio, ln_cosh, y_coth_y_minus_1,
};

/// An unordered pair of distinct positive reals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PositivePair {
    a: f64,
    b: f64,
}

impl PositivePair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0 && a != b {
            Ok(PositivePair { a, b })
        } else {
            Err(Error::InvalidPair { a, b })
        }
    }

    /// The normalized pair `(e^(x/2), e^(-x/2))`: unit product, log ratio `x`.
    ///
    /// Fails when `x` is so small that both entries round to 1.
    pub fn from_log_ratio(x: f64) -> Result<Self> {
        if !x.is_finite() || x == 0.0 {
            return Err(Error::InvalidArgument {
                name: "x",
                value: x,
                requirement: "finite and nonzero",
            });
        }
        Self::new((0.5 * x).exp(), (-0.5 * x).exp())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn swapped(&self) -> Self {
        PositivePair {
            a: self.b,
            b: self.a,
        }
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(lambda * self.a, lambda * self.b)
    }

    /// `ln(a / b)`, nonzero by construction.
    pub fn log_ratio(&self) -> f64 {
        self.a.ln() - self.b.ln()
    }
}

/// Exponents `(s, t, p)` of a mean gap ratio: all finite and nonzero,
/// `s < t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentTriple {
    s: f64,
    t: f64,
    p: f64,
}

impl ExponentTriple {
    pub fn new(s: f64, t: f64, p: f64) -> Result<Self> {
        let ok = s.is_finite()
            && t.is_finite()
            && p.is_finite()
            && s != 0.0
            && t != 0.0
            && p != 0.0
            && s < t;
        if ok {
            Ok(ExponentTriple { s, t, p })
        } else {
            Err(Error::InvalidExponents { s, t, p })
        }
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Exponents `(r, s, t, p)` of the four-parameter gap ratio:
/// `0 < s < t < r` and `p > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadExponents {
    r: f64,
    s: f64,
    t: f64,
    p: f64,
}

impl QuadExponents {
    pub fn new(r: f64, s: f64, t: f64, p: f64) -> Result<Self> {
        let ok = r.is_finite()
            && s.is_finite()
            && t.is_finite()
            && p.is_finite()
            && 0.0 < s
            && s < t
            && t < r
            && p > 0.0;
        if ok {
            Ok(QuadExponents { r, s, t, p })
        } else {
            Err(Error::InvalidQuad { r, s, t, p })
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Power mean `((a^r + b^r) / 2)^(1/r)`, with the geometric mean
/// `sqrt(a b)` as its order-zero limit.
///
/// Written as `sqrt(a b) * exp(ln(cosh(r d)) / r)` with `d = ln(a/b)/2`.
/// `ln_cosh` keeps full relative precision near zero, so the formula is
/// smooth through arbitrarily small nonzero orders and never overflows
/// for large ones.
pub fn power_mean(order: f64, pair: &PositivePair) -> Result<f64> {
    if !order.is_finite() {
        return Err(Error::InvalidArgument {
            name: "order",
            value: order,
            requirement: "finite",
        });
    }
    let la = pair.a().ln();
    let lb = pair.b().ln();
    let m = 0.5 * (la + lb);
    if order == 0.0 {
        return Ok(m.exp());
    }
    let d = 0.5 * (la - lb);
    Ok((m + ln_cosh(order * d) / order).exp())
}

/// Identric mean `(1/e) (a^a / b^b)^(1/(a-b))`.
pub fn identric_mean(pair: &PositivePair) -> f64 {
    let (a, b) = (pair.a(), pair.b());
    let h = b - a;
    // (a ln a - b ln b)/(a - b) = ln b + (a/h) ln(1 + h/a): stable as b -> a
    let slope = b.ln() + a * (h / a).ln_1p() / h;
    (slope - 1.0).exp()
}

/// Gap ratio `(M_s^p - G^p) / (M_t^p - G^p)` of two power-mean gaps over
/// the geometric mean `G` of the pair.
///
/// With `h = ln(a/b)/2` the order-`s` gap factors as
/// `G^p expm1((p/s) ln cosh(s h))`, so the common `G^p` cancels and the
/// ratio is evaluated gap-over-gap in that cancellation-free form.
pub fn mean_gap_ratio(exps: &ExponentTriple, pair: &PositivePair) -> f64 {
    let h = 0.5 * pair.log_ratio();
    cosh_power_gap_ratio(exps.s(), exps.t(), exps.p(), h)
}

/// Gap ratio `(M_r^p - M_s^p) / (M_t^p - M_s^p)` with the order-`s` power
/// mean as the common base line.
pub fn mean_gap_ratio_general(exps: &QuadExponents, pair: &PositivePair) -> f64 {
    let h = 0.5 * pair.log_ratio();
    let gr = cosh_power_gap(exps.r(), exps.p(), h);
    let gs = cosh_power_gap(exps.s(), exps.p(), h);
    let gt = cosh_power_gap(exps.t(), exps.p(), h);
    if gt.is_infinite() {
        // the order-t gap (and with it the order-r gap) overflows, so the
        // baseline is subtracted in the log domain. Gap logs increase
        // strictly with the order, hence both ln_1p arguments sit in (-1, 0).
        let lr = cosh_power_gap_ln(exps.r(), exps.p(), h);
        let ls = cosh_power_gap_ln(exps.s(), exps.p(), h);
        let lt = cosh_power_gap_ln(exps.t(), exps.p(), h);
        let num = lr + (-(ls - lr).exp()).ln_1p();
        let den = lt + (-(ls - lt).exp()).ln_1p();
        (num - den).exp()
    } else {
        (gr - gs) / (gt - gs)
    }
}

/// Gap ratio `(I^p - G^p) / (A^p - G^p)` of the identric and arithmetic
/// gaps over the geometric mean.
///
/// With `h = ln(a/b)/2`: `ln(I/G) = h coth h - 1` and `ln(A/G) = ln cosh h`,
/// so both gaps reduce to `exp_m1` of smooth exponents.
pub fn identric_gap_ratio(power: f64, pair: &PositivePair) -> Result<f64> {
    if !power.is_finite() || power == 0.0 {
        return Err(Error::InvalidArgument {
            name: "power",
            value: power,
            requirement: "finite and nonzero",
        });
    }
    let h = 0.5 * pair.log_ratio();
    let num = (power * y_coth_y_minus_1(h)).exp_m1();
    let den = (power * ln_cosh(h)).exp_m1();
    Ok(num / den)
}
