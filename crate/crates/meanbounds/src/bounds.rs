//! Two-sided bounds for the mean gap ratios, assembled from the case
//! analysis in [`crate::regions`].

use crate::error::{Error, Result};
use crate::means::{ExponentTriple, PositivePair, QuadExponents};
use crate::regions::{
    bound_case, general_ratio_applicable, unit_power_case, BoundCase, CaseTag, UnitPowerCase,
};

/// Default kernel abscissa for the near-diagonal limit witness.
pub const WITNESS_LOG_GAP: f64 = 1e-3;

/// Default kernel abscissa for the far-from-diagonal limit witness.
pub const WITNESS_LOG_CAP: f64 = 40.0;

/// An open two-sided bound. `lower` may be `-inf` (one branch is
/// unbounded below); `sharp` records whether both endpoints are attained
/// in the limit, i.e. cannot be improved.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundPair {
    pub lower: f64,
    pub upper: f64,
    pub lower_strict: bool,
    pub upper_strict: bool,
    pub sharp: bool,
}

impl BoundPair {
    fn strict_sharp(lower: f64, upper: f64) -> Self {
        debug_assert!(lower < upper);
        BoundPair {
            lower,
            upper,
            lower_strict: true,
            upper_strict: true,
            sharp: true,
        }
    }

    fn strict_wide(lower: f64, upper: f64) -> Self {
        debug_assert!(lower < upper);
        BoundPair {
            lower,
            upper,
            lower_strict: true,
            upper_strict: true,
            sharp: false,
        }
    }

    /// Strict interval membership; an infinite lower endpoint admits every
    /// value below the upper one.
    pub fn contains(&self, v: f64) -> bool {
        v > self.lower && v < self.upper
    }

    /// Interval width; infinite for the unbounded branch.
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// The endpoint of `bounds` approached far from the diagonal, given the
/// branch `case` (the other endpoint, at the diagonal, is always `s/t`).
pub fn far_endpoint(case: CaseTag, bounds: &BoundPair) -> f64 {
    match case {
        CaseTag::AUpper | CaseTag::BUpper | CaseTag::CLower => bounds.lower,
        _ => bounds.upper,
    }
}

/// Sharp two-sided bounds for the mean gap ratio at `(s, t, p)`.
///
/// The value at every pair of distinct positive arguments lies strictly
/// between `lower` and `upper`; both endpoints are limits of the ratio, so
/// neither can be moved. Parameters outside the covered branches give a
/// `NotCovered` error whose message names the offending configuration.
pub fn gap_ratio_bounds(exps: &ExponentTriple) -> Result<BoundPair> {
    let sel = bound_case(exps);
    let (s, t, p) = (exps.s(), exps.t(), exps.p());
    let near = s / t;
    let far = (p / t - p / s).exp2();
    Ok(match sel.case {
        CaseTag::AUpper => BoundPair::strict_sharp(far, near),
        CaseTag::ALower => BoundPair::strict_sharp(near, far.min(1.0)),
        CaseTag::BUpper => BoundPair::strict_sharp(far.max(1.0), near),
        CaseTag::BLower => BoundPair::strict_sharp(near, far),
        CaseTag::CUpper => BoundPair::strict_sharp(near, 0.0),
        CaseTag::CLower => BoundPair::strict_sharp(f64::NEG_INFINITY, near),
        CaseTag::NotCovered => {
            return Err(Error::NotCovered {
                reason: not_covered_reason(exps, &sel),
            })
        }
    })
}

fn not_covered_reason(exps: &ExponentTriple, sel: &BoundCase) -> String {
    let (s, t, p) = (exps.s(), exps.t(), exps.p());
    if !sel.boundary_exception_ok {
        if s > 0.0 {
            "t=2s and p=2s".to_string()
        } else {
            "s=2t and p=2t".to_string()
        }
    } else {
        format!("p={p} lies strictly between the branch thresholds for (s, t) = ({s}, {t})")
    }
}

/// Sharp two-sided bounds for the unit-power (`p = 1`) gap ratio,
/// assembled from its own case map. Where both are defined this agrees
/// exactly with [`gap_ratio_bounds`] at `p = 1`.
pub fn unit_power_bounds(s: f64, t: f64) -> Result<BoundPair> {
    let case = unit_power_case(s, t)?;
    let near = s / t;
    let far = (1.0 / t - 1.0 / s).exp2();
    Ok(match case {
        UnitPowerCase::A => BoundPair::strict_sharp(1.0, near),
        UnitPowerCase::B => BoundPair::strict_sharp(near, 0.0),
        UnitPowerCase::CI | UnitPowerCase::CII => BoundPair::strict_sharp(far, near),
        UnitPowerCase::DI | UnitPowerCase::DII | UnitPowerCase::DIII => {
            BoundPair::strict_sharp(near, far)
        }
        UnitPowerCase::NotCovered => {
            return Err(Error::NotCovered {
                reason: format!("p=1 is not covered for (s, t) = ({s}, {t})"),
            })
        }
    })
}

/// Two-sided bounds for the four-exponent gap ratio. Valid whenever
/// `p <= (4t + 2s)/3`, but not sharp: the true range is narrower.
pub fn general_ratio_bounds(exps: &QuadExponents) -> Result<BoundPair> {
    if !general_ratio_applicable(exps) {
        return Err(Error::NotCovered {
            reason: format!(
                "p={} exceeds (4t + 2s)/3 = {} for (s, t) = ({}, {})",
                exps.p(),
                (4.0 * exps.t() + 2.0 * exps.s()) / 3.0,
                exps.s(),
                exps.t()
            ),
        });
    }
    let (r, s, t, p) = (exps.r(), exps.s(), exps.t(), exps.p());
    let base = (-p / s).exp2();
    let lower = ((-p / r).exp2() - base) / ((-p / t).exp2() - base);
    let upper = (r - s) / (t - s);
    Ok(BoundPair::strict_wide(lower, upper))
}

/// Pairs witnessing the two endpoint limits of [`gap_ratio_bounds`]: a
/// near-diagonal pair and a far-from-diagonal pair whose kernel abscissae
/// `|t| ln(a/b) / 2` sit at [`WITNESS_LOG_GAP`] and [`WITNESS_LOG_CAP`].
pub fn limit_witnesses(exps: &ExponentTriple) -> Result<(PositivePair, PositivePair)> {
    limit_witnesses_at(exps, WITNESS_LOG_GAP, WITNESS_LOG_CAP)
}

/// [`limit_witnesses`] with caller-chosen kernel abscissae.
pub fn limit_witnesses_at(
    exps: &ExponentTriple,
    near: f64,
    far: f64,
) -> Result<(PositivePair, PositivePair)> {
    if !(near.is_finite() && far.is_finite() && 0.0 < near && near < far) {
        return Err(Error::InvalidConfig(format!(
            "witness abscissae must satisfy 0 < near < far, got ({near}, {far})"
        )));
    }
    let scale = exps.t().abs();
    Ok((
        PositivePair::from_log_ratio(2.0 * near / scale)?,
        PositivePair::from_log_ratio(2.0 * far / scale)?,
    ))
}

#[cfg(test)]
// reference literals keep their full oracle digits even where f64 rounds them
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::means::mean_gap_ratio;
    use approx::assert_relative_eq;

    fn triple(s: f64, t: f64, p: f64) -> ExponentTriple {
        ExponentTriple::new(s, t, p).unwrap()
    }

    #[test]
    fn unit_example_bounds_are_exact() {
        let b = gap_ratio_bounds(&triple(1.0, 2.0, 1.0)).unwrap();
        assert_eq!(b.lower, 0.5);
        assert_eq!(b.upper, (-0.5f64).exp2());
        assert!(b.sharp && b.lower_strict && b.upper_strict);
        assert_relative_eq!(
            b.upper,
            std::f64::consts::FRAC_1_SQRT_2,
            max_relative = 1e-15
        );
    }

    #[test]
    fn punctured_boundary_reports_not_covered() {
        let err = gap_ratio_bounds(&triple(1.0, 2.0, 2.0)).unwrap_err();
        match err {
            Error::NotCovered { reason } => assert_eq!(reason, "t=2s and p=2s"),
            other => panic!("expected NotCovered, got {other:?}"),
        }
        let err = gap_ratio_bounds(&triple(-2.0, -1.0, -2.0)).unwrap_err();
        match err {
            Error::NotCovered { reason } => assert_eq!(reason, "s=2t and p=2t"),
            other => panic!("expected NotCovered, got {other:?}"),
        }
    }

    #[test]
    fn gap_reports_mention_the_thresholds() {
        let err = gap_ratio_bounds(&triple(1.0, 4.0, 3.0)).unwrap_err();
        match err {
            Error::NotCovered { reason } => {
                assert!(reason.contains("between the branch thresholds"), "{reason}")
            }
            other => panic!("expected NotCovered, got {other:?}"),
        }
    }

    #[test]
    fn branch_endpoints_take_documented_values() {
        // mixed-sign upper branch: interval (s/t, 0)
        let c_up = gap_ratio_bounds(&triple(-1.0, 2.0, 1.0)).unwrap();
        assert_eq!(c_up.lower, -0.5);
        assert_eq!(c_up.upper, 0.0);
        // mixed-sign lower branch: unbounded below
        let c_lo = gap_ratio_bounds(&triple(-2.0, 1.0, -1.0)).unwrap();
        assert_eq!(c_lo.lower, f64::NEG_INFINITY);
        assert_eq!(c_lo.upper, -2.0);
        assert!(c_lo.contains(-1e300));
        assert!(!c_lo.contains(-2.0));
        // negative-branch upper: p > 0 drives the far limit to exactly 1
        let b_up = gap_ratio_bounds(&triple(-2.0, -1.0, 1.0)).unwrap();
        assert_eq!((b_up.lower, b_up.upper), (1.0, 2.0));
        // while p < 0 leaves the genuine limit 2^(p/t - p/s) in place
        let b_up2 = gap_ratio_bounds(&triple(-2.0, -1.0, -0.5)).unwrap();
        assert_eq!((b_up2.lower, b_up2.upper), (0.25f64.exp2(), 2.0));
        // positive-branch lower: p < 0 drives the far limit to exactly 1
        let a_lo = gap_ratio_bounds(&triple(0.5, 4.0, -0.5)).unwrap();
        assert_eq!((a_lo.lower, a_lo.upper), (0.125, 1.0));
        let a_lo2 = gap_ratio_bounds(&triple(0.5, 4.0, 0.5)).unwrap();
        assert_eq!((a_lo2.lower, a_lo2.upper), (0.125, (-0.875f64).exp2()));
    }

    #[test]
    fn far_endpoint_picks_the_non_diagonal_side() {
        let e = triple(1.0, 2.0, 1.0);
        let b = gap_ratio_bounds(&e).unwrap();
        let case = bound_case(&e).case;
        assert_eq!(case, CaseTag::ALower);
        assert_eq!(far_endpoint(case, &b), b.upper);
        let e2 = triple(1.0, 2.0, 4.0);
        let b2 = gap_ratio_bounds(&e2).unwrap();
        assert_eq!(far_endpoint(CaseTag::AUpper, &b2), b2.lower);
    }

    #[test]
    fn unit_power_bounds_match_reference_values() {
        let cii = unit_power_bounds(0.5, 0.8).unwrap();
        assert_relative_eq!(cii.lower, 0.5946035575013605, max_relative = 1e-15);
        assert_eq!(cii.upper, 0.625);
        let diii = unit_power_bounds(0.75, 2.0).unwrap();
        assert_eq!(diii.lower, 0.375);
        assert_relative_eq!(diii.upper, 0.5612310241546865, max_relative = 1e-15);
        let a = unit_power_bounds(-2.0, -1.0).unwrap();
        assert_eq!((a.lower, a.upper), (1.0, 2.0));
        assert!(unit_power_bounds(0.5, 1.0).is_err());
    }

    #[test]
    fn unit_power_bounds_agree_with_general_selector() {
        // wherever both case maps cover (s, t, 1) they must agree exactly
        let mut compared = 0usize;
        for i in -30..=30i32 {
            for j in -30..=30i32 {
                let s = f64::from(i) / 8.0;
                let t = f64::from(j) / 8.0;
                if s == 0.0 || t == 0.0 || s >= t {
                    continue;
                }
                let via_unit = unit_power_bounds(s, t);
                let via_general = ExponentTriple::new(s, t, 1.0).and_then(|e| gap_ratio_bounds(&e));
                match (via_unit, via_general) {
                    (Ok(u), Ok(g)) => {
                        assert_eq!(u, g, "bounds differ at ({s}, {t})");
                        compared += 1;
                    }
                    (Err(_), Err(_)) => {}
                    (u, g) => panic!("coverage differs at ({s}, {t}): {u:?} vs {g:?}"),
                }
            }
        }
        assert!(compared > 500, "only {compared} grid points were covered");
    }

    #[test]
    fn general_ratio_bounds_match_reference_values() {
        let e = QuadExponents::new(3.0, 1.0, 2.0, 2.0).unwrap();
        let b = general_ratio_bounds(&e).unwrap();
        // reference value computed with 60-digit arithmetic (mpmath)
        assert_relative_eq!(b.lower, 1.519842099789746330, max_relative = 1e-14);
        assert_eq!(b.upper, 2.0);
        assert!(!b.sharp);
        let off = QuadExponents::new(3.0, 1.0, 2.0, 3.5).unwrap();
        assert!(general_ratio_bounds(&off).is_err());
    }

    #[test]
    fn witness_pairs_sit_at_the_requested_abscissae() {
        let e = triple(1.0, 2.0, 1.0);
        let (near, far) = limit_witnesses(&e).unwrap();
        assert_relative_eq!(
            e.t().abs() * near.log_ratio() / 2.0,
            WITNESS_LOG_GAP,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            e.t().abs() * far.log_ratio() / 2.0,
            WITNESS_LOG_CAP,
            max_relative = 1e-14
        );
        assert!(limit_witnesses_at(&e, 0.0, 1.0).is_err());
        assert!(limit_witnesses_at(&e, 2.0, 1.0).is_err());
    }

    #[test]
    fn ratio_approaches_both_endpoints_for_the_unit_example() {
        let e = triple(1.0, 2.0, 1.0);
        let b = gap_ratio_bounds(&e).unwrap();
        let (near, far) = limit_witnesses(&e).unwrap();
        let v_near = mean_gap_ratio(&e, &near);
        let v_far = mean_gap_ratio(&e, &far);
        assert!(b.contains(v_near) && b.contains(v_far));
        assert!((v_near - b.lower).abs() < 1e-4);
        assert!((v_far - b.upper).abs() < 1e-4);
    }
}
