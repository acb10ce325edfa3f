//! Seeded numerical verification sweeps: bound containment, monotonicity,
//! difference-quotient monotonicity transfer, and the admissible-range
//! boundary probes.
//!
//! All sweeps draw their abscissae from a counter-based generator seeded
//! explicitly, so every report is reproducible bit for bit.

use crate::bounds::BoundPair;
use crate::error::{Error, Result};
use crate::kernels::{curvature_threshold, EvalPoint};
use crate::regions::{admissible_t_range, MonotonicityClass};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 42;

/// Sweep configuration. Sample abscissae are the log ratios `x` of
/// normalized pairs `(e^(x/2), e^(-x/2))`, drawn log-uniformly from
/// `[x_min, x_max]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleConfig {
    pub seed: u64,
    pub samples: usize,
    pub x_min: f64,
    pub x_max: f64,
    /// Violation slack: a sample only counts against the claim when its
    /// margin falls below `-tolerance` (scaled by magnitude where noted).
    pub tolerance: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: DEFAULT_SEED,
            samples: 10_000,
            x_min: 1e-4,
            x_max: 40.0,
            tolerance: 1e-12,
        }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        SampleConfig {
            seed,
            ..SampleConfig::default()
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let ok = self.x_min.is_finite()
            && self.x_max.is_finite()
            && self.x_min > 0.0
            && self.x_min < self.x_max
            && self.tolerance.is_finite()
            && self.tolerance > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidConfig(format!(
                "unusable sample config {self:?}"
            )))
        }
    }

    /// Seeded log-uniform abscissae, in draw order.
    pub(crate) fn draw_xs(&self) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let lo = self.x_min.ln();
        let hi = self.x_max.ln();
        (0..self.samples)
            .map(|_| (lo + rng.gen::<f64>() * (hi - lo)).exp())
            .collect()
    }

    /// Deterministic log grid of `samples` points (endpoints included),
    /// for order-sensitive sweeps.
    pub(crate) fn grid_xs(&self) -> Vec<f64> {
        let n = self.samples.max(2);
        let lo = self.x_min.ln();
        let hi = self.x_max.ln();
        (0..n)
            .map(|i| (lo + (i as f64) * (hi - lo) / ((n - 1) as f64)).exp())
            .collect()
    }
}

/// Outcome of one sweep.
///
/// `worst_margin` is the smallest signed margin seen; positive margins
/// mean the claim held with room to spare. `witness_min` / `witness_max`
/// are the abscissae of the extreme observed values (recover the pair as
/// `(e^(x/2), e^(-x/2))`).
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub checked: usize,
    pub violations: usize,
    pub worst_margin: f64,
    pub min_observed: f64,
    pub max_observed: f64,
    pub witness_min: Option<f64>,
    pub witness_max: Option<f64>,
}

impl VerificationReport {
    pub(crate) fn empty() -> Self {
        VerificationReport {
            checked: 0,
            violations: 0,
            worst_margin: f64::INFINITY,
            min_observed: f64::INFINITY,
            max_observed: f64::NEG_INFINITY,
            witness_min: None,
            witness_max: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Record one sample. A margin is violating when it is not `>= -slack`
    /// (NaN margins violate).
    // negated comparisons are deliberate: NaN must land on the violating side
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub(crate) fn record(&mut self, x: f64, value: f64, margin: f64, slack: f64) {
        self.checked += 1;
        if !(margin >= -slack) {
            self.violations += 1;
        }
        if !(margin >= self.worst_margin) {
            self.worst_margin = margin;
        }
        if value < self.min_observed || self.witness_min.is_none() {
            self.min_observed = value.min(self.min_observed);
            if value <= self.min_observed {
                self.witness_min = Some(x);
            }
        }
        if value > self.max_observed || self.witness_max.is_none() {
            self.max_observed = value.max(self.max_observed);
            if value >= self.max_observed {
                self.witness_max = Some(x);
            }
        }
    }

    /// Combine two reports (associative; used to aggregate suite parts).
    // NaN worst margins must win the comparison, hence the negation
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn merge(mut self, other: &Self) -> Self {
        self.checked += other.checked;
        self.violations += other.violations;
        if !(other.worst_margin >= self.worst_margin) {
            self.worst_margin = other.worst_margin;
        }
        if other.min_observed < self.min_observed {
            self.min_observed = other.min_observed;
            self.witness_min = other.witness_min;
        }
        if other.max_observed > self.max_observed {
            self.max_observed = other.max_observed;
            self.witness_max = other.witness_max;
        }
        self
    }
}

/// Signed containment margin of `v` against `bounds`: the distance to the
/// nearer endpoint, absolute for endpoint magnitudes up to 10 and relative
/// beyond, `+inf` against an infinite endpoint, `-inf` for NaN values.
pub fn containment_margin(bounds: &BoundPair, v: f64) -> f64 {
    if v.is_nan() {
        return f64::NEG_INFINITY;
    }
    let lo = side_margin(v - bounds.lower, bounds.lower);
    let hi = side_margin(bounds.upper - v, bounds.upper);
    lo.min(hi)
}

fn side_margin(dist: f64, endpoint: f64) -> f64 {
    if endpoint.is_infinite() {
        f64::INFINITY
    } else if endpoint.abs() <= 10.0 {
        dist
    } else {
        dist / endpoint.abs()
    }
}

/// Sweep `ratio` over seeded sample pairs and check that every value lies
/// strictly inside `bounds` (up to the configured slack).
pub fn verify_containment(
    bounds: &BoundPair,
    ratio: impl Fn(f64) -> f64,
    cfg: &SampleConfig,
) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut report = VerificationReport::empty();
    for x in cfg.draw_xs() {
        let v = ratio(x);
        let margin = containment_margin(bounds, v);
        report.record(x, v, margin, cfg.tolerance);
    }
    Ok(report)
}

/// Check the expected monotonicity class of `f` over a deterministic
/// log grid of `cfg.samples` points.
///
/// For the monotone classes each consecutive move gets slack
/// `tolerance * max(1, |v|)`; `Constant` compares every value against the
/// first; `Neither` requires at least one slack-exceeding move in each
/// direction somewhere on the grid, and reports a single violation when
/// one direction never shows up.
pub fn verify_monotone(
    f: impl Fn(f64) -> f64,
    expected: MonotonicityClass,
    cfg: &SampleConfig,
) -> Result<VerificationReport> {
    cfg.validate()?;
    let xs = cfg.grid_xs();
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut report = VerificationReport::empty();
    match expected {
        MonotonicityClass::Increasing | MonotonicityClass::Decreasing => {
            let dir = if expected == MonotonicityClass::Increasing {
                1.0
            } else {
                -1.0
            };
            report.record(xs[0], vs[0], f64::INFINITY, cfg.tolerance);
            for i in 1..vs.len() {
                let slack = cfg.tolerance * vs[i - 1].abs().max(vs[i].abs()).max(1.0);
                let move_ = dir * (vs[i] - vs[i - 1]);
                report.record(xs[i], vs[i], move_, slack);
            }
        }
        MonotonicityClass::Constant => {
            let anchor = vs[0];
            for i in 0..vs.len() {
                let slack = cfg.tolerance * anchor.abs().max(1.0);
                let margin = slack - (vs[i] - anchor).abs();
                report.record(xs[i], vs[i], margin, 0.0);
            }
        }
        MonotonicityClass::Neither => {
            let mut best_up = f64::NEG_INFINITY;
            let mut best_down = f64::INFINITY;
            for i in 0..vs.len() {
                if i > 0 {
                    let slack = cfg.tolerance * vs[i - 1].abs().max(vs[i].abs()).max(1.0);
                    let d = vs[i] - vs[i - 1];
                    if d > slack {
                        best_up = best_up.max(d);
                    }
                    if d < -slack {
                        best_down = best_down.min(d);
                    }
                }
                report.record(xs[i], vs[i], f64::INFINITY, cfg.tolerance);
            }
            let found = best_up.is_finite() && best_down.is_finite();
            if !found {
                report.violations += 1;
            }
            report.worst_margin = if found {
                best_up.min(-best_down)
            } else {
                f64::NEG_INFINITY
            };
        }
        MonotonicityClass::Unknown => {
            return Err(Error::InvalidConfig(
                "nothing to verify for an Unknown classification".to_string(),
            ))
        }
    }
    Ok(report)
}

/// Outcome of a difference-quotient monotonicity check.
#[derive(Clone, Debug, PartialEq)]
pub enum QuotientRuleOutcome {
    /// The hypothesis could not be established numerically, so the
    /// transfer claim was not exercised.
    Inapplicable { reason: String },
    /// Hypothesis held; `direction` is the classified direction of the
    /// derivative ratio and `report` the sweep over anchored quotients.
    Checked {
        direction: MonotonicityClass,
        report: VerificationReport,
    },
}

/// Monotone transfer from derivative ratios to difference quotients: when
/// `f'/g'` is monotone on `(lo, hi)` and `g'` keeps one sign there, every
/// anchored quotient `(f(x) - f(c)) / (g(x) - g(c))` is monotone in `x`
/// the same way.
///
/// The derivative ratio is estimated by central differences, classified,
/// and the anchored quotients are then swept for a spread of anchors `c`.
pub fn verify_quotient_rule(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    interval: (f64, f64),
    cfg: &SampleConfig,
) -> Result<QuotientRuleOutcome> {
    cfg.validate()?;
    let (lo, hi) = interval;
    if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo < hi) {
        return Err(Error::InvalidConfig(format!(
            "quotient-rule interval must satisfy 0 <= lo < hi, got ({lo}, {hi})"
        )));
    }

    // derivative-ratio scan on an interior log grid
    let probe_lo = if lo > 0.0 { lo } else { hi * 1e-5 };
    let m = 96usize;
    let (llo, lhi) = (probe_lo.ln(), hi.ln());
    let ratio_tol = 1e-7;
    let mut ws = Vec::with_capacity(m);
    for i in 0..m {
        // stay strictly inside so central differences cannot step out
        let frac = (i as f64 + 0.5) / (m as f64);
        let x = (llo + frac * (lhi - llo)).exp();
        let h = (1e-5 * x.abs().max(1.0)).min(0.5 * x);
        let dg = g(x + h) - g(x - h);
        let df = f(x + h) - f(x - h);
        if dg == 0.0 || !df.is_finite() || !dg.is_finite() {
            return Ok(QuotientRuleOutcome::Inapplicable {
                reason: format!("denominator slope vanished or overflowed near x = {x}"),
            });
        }
        ws.push(df / dg);
    }
    let scale = ws.iter().fold(1.0f64, |acc, w| acc.max(w.abs()));
    let mut up = false;
    let mut down = false;
    for i in 1..m {
        let d = ws[i] - ws[i - 1];
        if d > ratio_tol * scale {
            up = true;
        }
        if d < -ratio_tol * scale {
            down = true;
        }
    }
    let direction = match (up, down) {
        (true, true) => {
            return Ok(QuotientRuleOutcome::Inapplicable {
                reason: "derivative ratio is not monotone on the interval".to_string(),
            })
        }
        (true, false) => MonotonicityClass::Increasing,
        (false, true) => MonotonicityClass::Decreasing,
        (false, false) => MonotonicityClass::Constant,
    };

    // sweep anchored difference quotients
    let anchors = 6usize;
    let mut report = VerificationReport::empty();
    for j in 0..anchors {
        let c = if j == 0 && lo == 0.0 {
            0.0
        } else {
            let frac = (j as f64) / (anchors as f64);
            (probe_lo.ln() + frac * (lhi - probe_lo.ln())).exp()
        };
        let fc = f(c);
        let gc = g(c);
        let quotient = |x: f64| (f(x) - fc) / (g(x) - gc);
        let sub = sweep_direction(&quotient, direction, probe_lo, hi, c, cfg)?;
        report = report.merge(&sub);
    }
    Ok(QuotientRuleOutcome::Checked { direction, report })
}

/// Monotonicity sweep of `f` on a log grid of `[lo, hi]`, skipping points
/// too close to the excluded anchor `c`.
fn sweep_direction(
    f: &impl Fn(f64) -> f64,
    direction: MonotonicityClass,
    lo: f64,
    hi: f64,
    c: f64,
    cfg: &SampleConfig,
) -> Result<VerificationReport> {
    let n = cfg.samples.clamp(16, 512);
    let (llo, lhi) = (lo.ln(), hi.ln());
    let xs: Vec<f64> = (0..n)
        .map(|i| (llo + (i as f64) * (lhi - llo) / ((n - 1) as f64)).exp())
        .filter(|&x| (x - c).abs() > 1e-4 * x.abs().max(c.abs()).max(1e-2))
        .collect();
    let quotient_cfg = SampleConfig {
        samples: xs.len(),
        // quotients near the anchor carry cancellation noise well above
        // the kernel tolerance, so the sweep uses a coarser slack
        tolerance: cfg.tolerance.max(1e-9),
        ..cfg.clone()
    };
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut report = VerificationReport::empty();
    match direction {
        MonotonicityClass::Constant => {
            let anchor = vs[0];
            for i in 0..vs.len() {
                let slack = quotient_cfg.tolerance * anchor.abs().max(1.0);
                let margin = slack - (vs[i] - anchor).abs();
                report.record(xs[i], vs[i], margin, 0.0);
            }
        }
        MonotonicityClass::Increasing | MonotonicityClass::Decreasing => {
            let dir = if direction == MonotonicityClass::Increasing {
                1.0
            } else {
                -1.0
            };
            for i in 1..vs.len() {
                let slack = quotient_cfg.tolerance * vs[i - 1].abs().max(vs[i].abs()).max(1.0);
                report.record(xs[i], vs[i], dir * (vs[i] - vs[i - 1]), slack);
            }
        }
        _ => {
            return Err(Error::InvalidConfig(
                "difference-quotient sweeps only handle monotone or constant directions"
                    .to_string(),
            ))
        }
    }
    Ok(report)
}

/// Outcome of an admissible-range boundary probe.
#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibleBoundaryReport {
    pub report: VerificationReport,
    /// For `q > 2`: a small-x abscissa just outside the range
    /// (`t = t_min - 1e-3`) where the threshold inequality fails, plus the
    /// failure margin. `None` when `q <= 2` (no boundary to cross).
    pub witness_outside: Option<(f64, f64)>,
}

/// Probe the admissible-range boundary at outer exponent `q`.
///
/// For `q > 2` the curvature threshold must stay above `q` along the edge
/// `t = t_min`, and stepping just outside (`t_min - 1e-3`) must produce a
/// small-x witness where it dips below `q`; a missing witness counts as a
/// violation. For `0 < q <= 2` the threshold is checked against `q`
/// across a grid of inner orders `t > 1`.
pub fn verify_admissible_boundary(q: f64, cfg: &SampleConfig) -> Result<AdmissibleBoundaryReport> {
    cfg.validate()?;
    let range = admissible_t_range(q)?;
    let mut report = VerificationReport::empty();
    let n = cfg.samples.clamp(16, 512);
    let x_lo = cfg.x_min.max(1e-3);
    let xs: Vec<f64> = (0..n)
        .map(|i| (x_lo.ln() + (i as f64) * (cfg.x_max.ln() - x_lo.ln()) / ((n - 1) as f64)).exp())
        .collect();

    if range.closed_at_min {
        for &x in &xs {
            let s = curvature_threshold(EvalPoint::new(x)?, range.t_min)?;
            report.record(x, s, s - q, cfg.tolerance);
        }
        let t_out = range.t_min - 1e-3;
        let mut witness = None;
        for i in 0..64 {
            let x = 1e-3 * (10f64).powf(i as f64 / 63.0);
            let s = curvature_threshold(EvalPoint::new(x)?, t_out)?;
            if s <= q {
                witness = Some((x, q - s));
                break;
            }
        }
        if witness.is_none() {
            report.violations += 1;
        }
        Ok(AdmissibleBoundaryReport {
            report,
            witness_outside: witness,
        })
    } else {
        for j in 1..=24 {
            let t = 1.0 + 0.25 * f64::from(j);
            for &x in xs.iter().step_by(4) {
                let s = curvature_threshold(EvalPoint::new(x)?, t)?;
                report.record(x, s, s - q, cfg.tolerance);
            }
        }
        Ok(AdmissibleBoundaryReport {
            report,
            witness_outside: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> SampleConfig {
        SampleConfig {
            samples: 400,
            ..SampleConfig::default()
        }
    }

    #[test]
    fn draws_are_deterministic_and_in_range() {
        let cfg = small_cfg();
        let a = cfg.draw_xs();
        let b = cfg.draw_xs();
        assert_eq!(a, b);
        assert!(a.iter().all(|&x| (cfg.x_min..=cfg.x_max).contains(&x)));
        let other = SampleConfig {
            seed: 7,
            ..small_cfg()
        };
        assert_ne!(a, other.draw_xs());
    }

    #[test]
    fn containment_margin_uses_relative_distance_for_large_endpoints() {
        let wide = BoundPair {
            lower: 100.0,
            upper: 1000.0,
            lower_strict: true,
            upper_strict: true,
            sharp: false,
        };
        let m = containment_margin(&wide, 990.0);
        assert!((m - 0.01).abs() < 1e-12);
        let narrow = BoundPair {
            lower: 0.5,
            upper: 1.0,
            lower_strict: true,
            upper_strict: true,
            sharp: false,
        };
        assert!((containment_margin(&narrow, 0.75) - 0.25).abs() < 1e-15);
        assert_eq!(containment_margin(&narrow, f64::NAN), f64::NEG_INFINITY);
        let unbounded = BoundPair {
            lower: f64::NEG_INFINITY,
            upper: -2.0,
            lower_strict: true,
            upper_strict: true,
            sharp: true,
        };
        assert_eq!(
            containment_margin(&unbounded, f64::NEG_INFINITY),
            f64::INFINITY
        );
        assert!(containment_margin(&unbounded, -3.0) > 0.0);
        assert!(containment_margin(&unbounded, -1.0) < 0.0);
    }

    #[test]
    fn containment_sweep_counts_violations() {
        let bounds = BoundPair {
            lower: 0.0,
            upper: 0.5,
            lower_strict: true,
            upper_strict: true,
            sharp: false,
        };
        // x / (1 + x) crosses 0.5 at x = 1, well inside the sweep range
        let report = verify_containment(&bounds, |x| x / (1.0 + x), &small_cfg()).unwrap();
        assert!(report.violations > 0);
        assert!(report.worst_margin < 0.0);
        assert!(report.max_observed > 0.5);
        let ok = verify_containment(&bounds, |_| 0.25, &small_cfg()).unwrap();
        assert_eq!(ok.violations, 0);
        assert_eq!(ok.min_observed, 0.25);
    }

    #[test]
    fn monotone_sweep_classifies_simple_functions() {
        let cfg = small_cfg();
        let inc = verify_monotone(|x| x.ln(), MonotonicityClass::Increasing, &cfg).unwrap();
        assert_eq!(inc.violations, 0);
        let dec = verify_monotone(|x| -x, MonotonicityClass::Decreasing, &cfg).unwrap();
        assert_eq!(dec.violations, 0);
        let cst = verify_monotone(|_| 3.25, MonotonicityClass::Constant, &cfg).unwrap();
        assert_eq!(cst.violations, 0);
        let wrong = verify_monotone(|x| -x, MonotonicityClass::Increasing, &cfg).unwrap();
        assert!(wrong.violations > 0);
        let bump = verify_monotone(
            |x| -(x.ln() - 1.0).powi(2),
            MonotonicityClass::Neither,
            &cfg,
        )
        .unwrap();
        assert_eq!(bump.violations, 0);
        let not_bump = verify_monotone(|x| x, MonotonicityClass::Neither, &cfg).unwrap();
        assert_eq!(not_bump.violations, 1);
        assert!(verify_monotone(|x| x, MonotonicityClass::Unknown, &cfg).is_err());
    }

    #[test]
    fn report_merge_is_associative_enough() {
        let mut a = VerificationReport::empty();
        a.record(1.0, 5.0, 0.5, 1e-12);
        let mut b = VerificationReport::empty();
        b.record(2.0, -1.0, -0.5, 1e-12);
        let mut c = VerificationReport::empty();
        c.record(3.0, 9.0, 2.0, 1e-12);
        let left = a.clone().merge(&b).merge(&c);
        let right = a.merge(&b.merge(&c));
        assert_eq!(left, right);
        assert_eq!(left.checked, 3);
        assert_eq!(left.violations, 1);
        assert_eq!(left.min_observed, -1.0);
        assert_eq!(left.max_observed, 9.0);
        assert_eq!(left.witness_min, Some(2.0));
        assert_eq!(left.witness_max, Some(3.0));
    }

    #[test]
    fn quotient_rule_handles_identical_functions() {
        let cfg = small_cfg();
        let out =
            verify_quotient_rule(|x| (2.0 * x).sinh(), |x| (2.0 * x).sinh(), (0.0, 5.0), &cfg)
                .unwrap();
        match out {
            QuotientRuleOutcome::Checked { direction, report } => {
                assert_eq!(direction, MonotonicityClass::Constant);
                assert_eq!(report.violations, 0);
            }
            other => panic!("expected Checked, got {other:?}"),
        }
    }

    #[test]
    fn quotient_rule_sees_increasing_sinh_ratio() {
        let cfg = small_cfg();
        let out =
            verify_quotient_rule(|x| (3.0 * x).sinh(), |x| (2.0 * x).sinh(), (0.0, 5.0), &cfg)
                .unwrap();
        match out {
            QuotientRuleOutcome::Checked { direction, report } => {
                assert_eq!(direction, MonotonicityClass::Increasing);
                assert_eq!(report.violations, 0, "{report:?}");
            }
            other => panic!("expected Checked, got {other:?}"),
        }
    }

    #[test]
    fn quotient_rule_rejects_non_monotone_ratios() {
        let cfg = small_cfg();
        // f'/g' = cos(x) on (0, 5) changes direction
        let out = verify_quotient_rule(|x| x.sin(), |x| x, (0.0, 5.0), &cfg).unwrap();
        assert!(matches!(out, QuotientRuleOutcome::Inapplicable { .. }));
    }

    #[test]
    fn admissible_boundary_accepts_inside_and_witnesses_outside() {
        let cfg = SampleConfig {
            samples: 200,
            ..SampleConfig::default()
        };
        let out = verify_admissible_boundary(4.0, &cfg).unwrap();
        assert_eq!(out.report.violations, 0, "{:?}", out.report);
        let (x, gap) = out.witness_outside.expect("expected an outside witness");
        assert!(x <= 1e-2);
        assert!(gap > 0.0);
        let low = verify_admissible_boundary(1.5, &cfg).unwrap();
        assert_eq!(low.report.violations, 0);
        assert!(low.witness_outside.is_none());
        assert!(verify_admissible_boundary(0.0, &cfg).is_err());
    }
}
