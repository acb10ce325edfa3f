//! Classification of the `(r, q)` plane by monotonicity of the gap-ratio
//! kernels, and the case analysis that selects two-sided bounds for the
//! mean gap ratios.

use crate::error::{Error, Result};
use crate::kernels::RQPoint;
use crate::means::{ExponentTriple, QuadExponents};
use std::fmt;

/// Monotonicity verdict for a kernel on `(0, inf)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonotonicityClass {
    Decreasing,
    Increasing,
    Constant,
    Neither,
    /// No claim either way (outside every certified region).
    Unknown,
}

impl fmt::Display for MonotonicityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MonotonicityClass::Decreasing => "dec",
            MonotonicityClass::Increasing => "inc",
            MonotonicityClass::Constant => "const",
            MonotonicityClass::Neither => "neither",
            MonotonicityClass::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// The two plane points where the slope quotient is constant in `x`
/// (values 1/2 and 2 respectively).
pub const CONSTANT_POINTS: [(f64, f64); 2] = [(0.5, 1.0), (2.0, 2.0)];

fn is_constant_point(r: f64, q: f64) -> bool {
    CONSTANT_POINTS.iter().any(|&(cr, cq)| r == cr && q == cq)
}

/// Band threshold `2 (r + 1) / 3` shared by every region border.
fn band(r: f64) -> f64 {
    2.0 * (r + 1.0) / 3.0
}

fn in_decreasing_region(r: f64, q: f64) -> bool {
    if r < 0.0 {
        q <= band(r).min(0.0)
    } else if r < 1.0 {
        q >= band(r).max(2.0 * r)
    } else {
        q <= band(r).min(2.0)
    }
}

fn in_increasing_region(r: f64, q: f64) -> bool {
    if r < 0.0 {
        q >= band(r).max(0.0)
    } else if r < 1.0 {
        q <= band(r).min(2.0 * r)
    } else {
        q >= band(r).max(2.0)
    }
}

/// Classify the slope quotient at `(r, q)`: the regions are exact, so
/// every point gets a definite verdict (`Neither` in between the bands,
/// `Constant` at the two special points).
pub fn classify_slope_quotient(point: &RQPoint) -> MonotonicityClass {
    let (r, q) = (point.r(), point.q());
    if is_constant_point(r, q) {
        MonotonicityClass::Constant
    } else if in_decreasing_region(r, q) {
        MonotonicityClass::Decreasing
    } else if in_increasing_region(r, q) {
        MonotonicityClass::Increasing
    } else {
        MonotonicityClass::Neither
    }
}

/// Classify the gap ratio at `(r, q)`: inside the monotone bands the
/// verdict transfers from the slope quotient, but outside them (and at
/// the slope quotient's two constant points) nothing is certified, so the
/// verdict is `Unknown`.
pub fn classify_gap_ratio(point: &RQPoint) -> MonotonicityClass {
    let (r, q) = (point.r(), point.q());
    if is_constant_point(r, q) {
        MonotonicityClass::Unknown
    } else if in_decreasing_region(r, q) {
        MonotonicityClass::Decreasing
    } else if in_increasing_region(r, q) {
        MonotonicityClass::Increasing
    } else {
        MonotonicityClass::Unknown
    }
}

/// Human-readable rule that produced a slope-quotient verdict.
pub fn classification_rule(point: &RQPoint) -> String {
    let (r, q) = (point.r(), point.q());
    match classify_slope_quotient(point) {
        MonotonicityClass::Constant => {
            format!("(r, q) = ({r}, {q}) is a constant point of the slope quotient")
        }
        MonotonicityClass::Decreasing => {
            if r < 0.0 {
                "r < 0 and q <= min(0, 2(r+1)/3)".to_string()
            } else if r < 1.0 {
                "0 < r < 1 and q >= max(2r, 2(r+1)/3)".to_string()
            } else {
                "r > 1 and q <= min(2, 2(r+1)/3)".to_string()
            }
        }
        MonotonicityClass::Increasing => {
            if r < 0.0 {
                "r < 0 and q >= max(0, 2(r+1)/3)".to_string()
            } else if r < 1.0 {
                "0 < r < 1 and q <= min(2r, 2(r+1)/3)".to_string()
            } else {
                "r > 1 and q >= max(2, 2(r+1)/3)".to_string()
            }
        }
        _ => "q lies strictly between the monotone bands".to_string(),
    }
}

/// Branch tags of the case analysis behind [`crate::bounds::gap_ratio_bounds`].
/// Letters split on the signs of `(s, t)`: A for `0 < s < t`, B for
/// `s < t < 0`, C for `s < 0 < t`; the suffix says which side of the
/// threshold pair `p` falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    AUpper,
    ALower,
    BUpper,
    BLower,
    CUpper,
    CLower,
    NotCovered,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::AUpper => "A_upper",
            CaseTag::ALower => "A_lower",
            CaseTag::BUpper => "B_upper",
            CaseTag::BLower => "B_lower",
            CaseTag::CUpper => "C_upper",
            CaseTag::CLower => "C_lower",
            CaseTag::NotCovered => "not_covered",
        };
        f.write_str(s)
    }
}

/// Outcome of the case selection. `boundary_exception_ok` is false when
/// the parameters hit the single punctured configuration of their sign
/// branch (where equality in `p` is not allowed).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCase {
    pub case: CaseTag,
    pub boundary_exception_ok: bool,
}

/// Select the bound branch for `(s, t, p)`.
///
/// Within each sign branch the thresholds are `edge` (twice the smaller
/// magnitude exponent, or zero in the mixed-sign branch) and
/// `2 (s + t) / 3`; `p` on or above the larger picks the upper branch,
/// `p` on or below the smaller picks the lower branch, anything strictly
/// between is not covered. One boundary point per branch is punctured:
/// `t = 2s, p = 2s` for positive exponents and `s = 2t, p = 2t` for
/// negative ones (the mixed branch's puncture sits at `p = 0`, already
/// outside the domain).
pub fn bound_case(exps: &ExponentTriple) -> BoundCase {
    let (s, t, p) = (exps.s(), exps.t(), exps.p());
    let mid = 2.0 * (s + t) / 3.0;
    let (edge, punctured, upper, lower) = if s > 0.0 {
        let edge = 2.0 * s;
        (
            edge,
            t == edge && p == edge,
            CaseTag::AUpper,
            CaseTag::ALower,
        )
    } else if t < 0.0 {
        let edge = 2.0 * t;
        (
            edge,
            s == edge && p == edge,
            CaseTag::BUpper,
            CaseTag::BLower,
        )
    } else {
        (0.0, s == -t && p == 0.0, CaseTag::CUpper, CaseTag::CLower)
    };
    let case = if punctured {
        CaseTag::NotCovered
    } else if p >= edge.max(mid) {
        upper
    } else if p <= edge.min(mid) {
        lower
    } else {
        CaseTag::NotCovered
    };
    BoundCase {
        case,
        boundary_exception_ok: !punctured,
    }
}

/// Case tags of the unit-power (`p = 1`) specialisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitPowerCase {
    A,
    B,
    CI,
    CII,
    DI,
    DII,
    DIII,
    NotCovered,
}

impl fmt::Display for UnitPowerCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UnitPowerCase::A => "a",
            UnitPowerCase::B => "b",
            UnitPowerCase::CI => "c_i",
            UnitPowerCase::CII => "c_ii",
            UnitPowerCase::DI => "d_i",
            UnitPowerCase::DII => "d_ii",
            UnitPowerCase::DIII => "d_iii",
            UnitPowerCase::NotCovered => "not_covered",
        };
        f.write_str(s)
    }
}

/// Case analysis of the `p = 1` bounds over the `(s, t)` half-plane
/// (`s < t`, both nonzero).
pub fn unit_power_case(s: f64, t: f64) -> Result<UnitPowerCase> {
    if !(s.is_finite() && t.is_finite() && s != 0.0 && t != 0.0 && s < t) {
        return Err(Error::InvalidExponents { s, t, p: 1.0 });
    }
    let cap = 1.5 - s;
    Ok(if t < 0.0 {
        UnitPowerCase::A
    } else if s < 0.0 {
        if t <= cap {
            UnitPowerCase::B
        } else {
            UnitPowerCase::NotCovered
        }
    } else if s < 0.5 {
        if t <= cap {
            UnitPowerCase::CI
        } else {
            UnitPowerCase::NotCovered
        }
    } else if s == 0.5 {
        if t < 1.0 {
            UnitPowerCase::CII
        } else if t > 1.0 {
            UnitPowerCase::DI
        } else {
            UnitPowerCase::NotCovered
        }
    } else if s < 0.75 {
        if t >= cap {
            UnitPowerCase::DII
        } else {
            UnitPowerCase::NotCovered
        }
    } else {
        UnitPowerCase::DIII
    })
}

/// Admissible inner-order range at outer exponent `q > 0`: the closed ray
/// `[1 + 3(q-2)/4, inf)` when `q > 2`, the open ray `(1, inf)` otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdmissibleRange {
    pub q: f64,
    pub t_min: f64,
    pub closed_at_min: bool,
}

impl AdmissibleRange {
    pub fn contains(&self, t: f64) -> bool {
        if self.closed_at_min {
            t >= self.t_min
        } else {
            t > self.t_min
        }
    }
}

impl fmt::Display for AdmissibleRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.closed_at_min { '[' } else { '(' };
        write!(f, "{}{}, inf)", open, self.t_min)
    }
}

/// The admissible inner-order range at outer exponent `q`.
pub fn admissible_t_range(q: f64) -> Result<AdmissibleRange> {
    if !q.is_finite() || q <= 0.0 {
        return Err(Error::InvalidArgument {
            name: "q",
            value: q,
            requirement: "finite and positive",
        });
    }
    Ok(if q > 2.0 {
        AdmissibleRange {
            q,
            t_min: 1.0 + 0.75 * (q - 2.0),
            closed_at_min: true,
        }
    } else {
        AdmissibleRange {
            q,
            t_min: 1.0,
            closed_at_min: false,
        }
    })
}

/// Whether the four-exponent bounds apply: `p <= (4t + 2s) / 3`. This is
/// the same condition as both `t/s` and `r/s` lying in the admissible
/// range at outer exponent `p/s`.
pub fn general_ratio_applicable(exps: &QuadExponents) -> bool {
    exps.p() <= (4.0 * exps.t() + 2.0 * exps.s()) / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq(r: f64, q: f64) -> RQPoint {
        RQPoint::new(r, q).unwrap()
    }

    fn triple(s: f64, t: f64, p: f64) -> ExponentTriple {
        ExponentTriple::new(s, t, p).unwrap()
    }

    #[test]
    fn slope_quotient_classification_hits_known_points() {
        use MonotonicityClass::*;
        let cases = [
            (0.3, 1.5, Decreasing),
            (0.3, 0.5, Increasing),
            (0.3, 0.7, Neither),
            (0.5, 1.0, Constant),
            (2.0, 2.0, Constant),
            (3.0, 1.0, Decreasing),
            (3.0, 4.0, Increasing),
            (3.0, 2.5, Neither),
            (-1.0, 1.0, Increasing),
            (-2.0, -1.0, Decreasing),
            (-0.5, 0.2, Neither),
            (-0.2, 0.4, Neither),
        ];
        for (r, q, want) in cases {
            assert_eq!(classify_slope_quotient(&rq(r, q)), want, "({r}, {q})");
        }
    }

    #[test]
    fn gap_ratio_classification_is_conservative() {
        use MonotonicityClass::*;
        assert_eq!(classify_gap_ratio(&rq(0.3, 1.5)), Decreasing);
        assert_eq!(classify_gap_ratio(&rq(0.3, 0.5)), Increasing);
        assert_eq!(classify_gap_ratio(&rq(0.3, 0.7)), Unknown);
        assert_eq!(classify_gap_ratio(&rq(0.5, 1.0)), Unknown);
        assert_eq!(classify_gap_ratio(&rq(2.0, 2.0)), Unknown);
    }

    #[test]
    fn region_membership_is_mutually_exclusive() {
        // dense rational grid; the monotone bands may touch only at the
        // two punctured constant points
        for i in -40..=60i32 {
            for j in -40..=60i32 {
                let r = f64::from(i) / 10.0;
                let q = f64::from(j) / 10.0;
                if r == 0.0 || r == 1.0 || q == 0.0 || is_constant_point(r, q) {
                    continue;
                }
                assert!(
                    !(in_decreasing_region(r, q) && in_increasing_region(r, q)),
                    "overlap at ({r}, {q})"
                );
            }
        }
    }

    #[test]
    fn display_strings_are_stable() {
        assert_eq!(MonotonicityClass::Decreasing.to_string(), "dec");
        assert_eq!(MonotonicityClass::Increasing.to_string(), "inc");
        assert_eq!(MonotonicityClass::Constant.to_string(), "const");
        assert_eq!(MonotonicityClass::Neither.to_string(), "neither");
        assert_eq!(MonotonicityClass::Unknown.to_string(), "unknown");
        assert_eq!(CaseTag::AUpper.to_string(), "A_upper");
        assert_eq!(CaseTag::CLower.to_string(), "C_lower");
        assert_eq!(UnitPowerCase::CII.to_string(), "c_ii");
        assert_eq!(UnitPowerCase::DIII.to_string(), "d_iii");
    }

    #[test]
    fn bound_case_selects_documented_branches() {
        assert_eq!(bound_case(&triple(1.0, 2.0, 1.0)).case, CaseTag::ALower);
        assert_eq!(bound_case(&triple(1.0, 2.0, 4.0)).case, CaseTag::AUpper);
        assert_eq!(bound_case(&triple(-2.0, -1.0, -1.0)).case, CaseTag::BUpper);
        assert_eq!(bound_case(&triple(-2.0, -1.0, -3.0)).case, CaseTag::BLower);
        assert_eq!(bound_case(&triple(-1.0, 2.0, 1.0)).case, CaseTag::CUpper);
        assert_eq!(bound_case(&triple(-2.0, 1.0, -1.0)).case, CaseTag::CLower);
        // p strictly between the thresholds is not covered
        assert_eq!(bound_case(&triple(1.0, 4.0, 3.0)).case, CaseTag::NotCovered);
    }

    #[test]
    fn bound_case_punctures_the_equality_boundary() {
        // at t = 2s the two thresholds merge and the shared value of p is excluded
        let hit = bound_case(&triple(1.0, 2.0, 2.0));
        assert_eq!(hit.case, CaseTag::NotCovered);
        assert!(!hit.boundary_exception_ok);
        // nearby parameters are fine; the thresholds themselves are inclusive
        assert_eq!(bound_case(&triple(1.0, 2.0, 2.5)).case, CaseTag::AUpper);
        assert_eq!(bound_case(&triple(1.0, 2.1, 2.0)).case, CaseTag::ALower);
        // strictly between the separated thresholds 2s and 2(s + t)/3
        assert_eq!(
            bound_case(&triple(1.0, 2.1, 2.03)).case,
            CaseTag::NotCovered
        );
        assert!(bound_case(&triple(1.0, 2.1, 2.03)).boundary_exception_ok);
        let neg = bound_case(&triple(-2.0, -1.0, -2.0));
        assert_eq!(neg.case, CaseTag::NotCovered);
        assert!(!neg.boundary_exception_ok);
    }

    #[test]
    fn mixed_sign_branch_keeps_opposite_exponents() {
        // s = -t is allowed in the mixed branch because its puncture sits
        // at p = 0, outside the domain
        let c = bound_case(&triple(-1.0, 1.0, 0.5));
        assert_eq!(c.case, CaseTag::CUpper);
        assert!(c.boundary_exception_ok);
        let d = bound_case(&triple(-1.0, 1.0, -0.5));
        assert_eq!(d.case, CaseTag::CLower);
    }

    #[test]
    fn unit_power_case_matches_documented_map() {
        use UnitPowerCase::*;
        assert_eq!(unit_power_case(-2.0, -1.0).unwrap(), A);
        assert_eq!(unit_power_case(-1.0, 2.0).unwrap(), B);
        assert_eq!(unit_power_case(-1.0, 2.6).unwrap(), NotCovered);
        assert_eq!(unit_power_case(0.25, 1.0).unwrap(), CI);
        assert_eq!(unit_power_case(0.25, 1.3).unwrap(), NotCovered);
        assert_eq!(unit_power_case(0.5, 0.8).unwrap(), CII);
        assert_eq!(unit_power_case(0.5, 2.0).unwrap(), DI);
        assert_eq!(unit_power_case(0.5, 1.0).unwrap(), NotCovered);
        assert_eq!(unit_power_case(0.6, 1.2).unwrap(), DII);
        assert_eq!(unit_power_case(0.6, 0.7).unwrap(), NotCovered);
        assert_eq!(unit_power_case(0.75, 2.0).unwrap(), DIII);
        assert_eq!(unit_power_case(1.0, 3.0).unwrap(), DIII);
        assert!(unit_power_case(2.0, 1.0).is_err());
        assert!(unit_power_case(0.0, 1.0).is_err());
    }

    #[test]
    fn admissible_range_matches_documented_form() {
        let r4 = admissible_t_range(4.0).unwrap();
        assert_eq!(r4.t_min, 2.5);
        assert!(r4.closed_at_min);
        assert!(r4.contains(2.5));
        assert!(!r4.contains(2.4));
        let r2 = admissible_t_range(2.0).unwrap();
        assert_eq!(r2.t_min, 1.0);
        assert!(!r2.closed_at_min);
        assert!(!r2.contains(1.0));
        assert!(r2.contains(1.0 + 1e-12));
        assert_eq!(r4.to_string(), "[2.5, inf)");
        assert_eq!(r2.to_string(), "(1, inf)");
        assert!(admissible_t_range(0.0).is_err());
        assert!(admissible_t_range(-1.0).is_err());
    }

    #[test]
    fn general_applicability_includes_its_boundary() {
        let boundary = QuadExponents::new(3.0, 1.0, 2.0, 10.0 / 3.0).unwrap();
        assert!(general_ratio_applicable(&boundary));
        let inside = QuadExponents::new(3.0, 1.0, 2.0, 2.0).unwrap();
        assert!(general_ratio_applicable(&inside));
        let outside = QuadExponents::new(3.0, 1.0, 2.0, 3.5).unwrap();
        assert!(!general_ratio_applicable(&outside));
    }

    #[test]
    fn classification_rule_mentions_the_active_band() {
        assert!(classification_rule(&rq(0.3, 1.5)).contains("max(2r"));
        assert!(classification_rule(&rq(3.0, 1.0)).contains("min(2"));
        assert!(classification_rule(&rq(0.5, 1.0)).contains("constant"));
        assert!(classification_rule(&rq(0.3, 0.7)).contains("between"));
    }
}
