//! Scalar extremum search over a positive interval: a dense grid scan in
//! log-x refined by golden-section iteration around the best brackets.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Search configuration. The grid is uniform in `ln x`; each local
/// extremum candidate gets its own golden-section refinement.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub x_min: f64,
    pub x_max: f64,
    /// Grid points in the initial scan.
    pub grid: usize,
    /// Refinement starts kept per extremum side.
    pub starts: usize,
    /// Iteration cap per golden-section run.
    pub max_iter: usize,
    /// Bracket width (in `ln x`) at which refinement stops.
    pub tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            x_min: 1e-4,
            x_max: 40.0,
            grid: 513,
            starts: 8,
            max_iter: 200,
            tol: 1e-10,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        let ok = self.x_min.is_finite()
            && self.x_max.is_finite()
            && self.x_min > 0.0
            && self.x_min < self.x_max
            && self.grid >= 3
            && self.starts >= 1
            && self.tol > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidConfig(format!(
                "unusable search config {self:?}"
            )))
        }
    }
}

/// Result of an extremum sweep over `f` on `[x_min, x_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtremaResult {
    pub inf: f64,
    pub sup: f64,
    pub arg_inf: f64,
    pub arg_sup: f64,
    /// False when any golden-section run hit its iteration cap first.
    pub converged: bool,
}

/// Empirical infimum and supremum of `f` over the interval.
///
/// The scan evaluates `f` on a log-uniform grid, collects every local
/// extremum bracket (interval endpoints included), refines the best
/// `starts` brackets per side by golden section, and reports the sharpest
/// values found together with their abscissae.
pub fn empirical_extrema(f: impl Fn(f64) -> f64, cfg: &SearchConfig) -> Result<ExtremaResult> {
    cfg.validate()?;
    let lo = cfg.x_min.ln();
    let hi = cfg.x_max.ln();
    let n = cfg.grid;
    let us: Vec<f64> = (0..n)
        .map(|i| lo + (i as f64) * (hi - lo) / ((n - 1) as f64))
        .collect();
    let vs: Vec<f64> = us.iter().map(|&u| f(u.exp())).collect();

    let mut converged = true;
    let (inf, arg_inf) = refine_side(&f, &us, &vs, cfg, false, &mut converged);
    let (sup, arg_sup) = refine_side(&f, &us, &vs, cfg, true, &mut converged);
    Ok(ExtremaResult {
        inf,
        sup,
        arg_inf: arg_inf.exp(),
        arg_sup: arg_sup.exp(),
        converged,
    })
}

/// Best value on one side: scans for local extremum indices, refines each
/// bracket, and keeps the sharpest result. Returns `(value, ln_x)`.
fn refine_side(
    f: &impl Fn(f64) -> f64,
    us: &[f64],
    vs: &[f64],
    cfg: &SearchConfig,
    maximize: bool,
    converged: &mut bool,
) -> (f64, f64) {
    let sgn = if maximize { -1.0 } else { 1.0 };
    let n = vs.len();
    let mut candidates: Vec<usize> = (0..n)
        .filter(|&i| {
            let left_ok = i == 0 || sgn * vs[i] <= sgn * vs[i - 1];
            let right_ok = i == n - 1 || sgn * vs[i] <= sgn * vs[i + 1];
            left_ok && right_ok
        })
        .collect();
    candidates.sort_by(|&a, &b| (sgn * vs[a]).total_cmp(&(sgn * vs[b])));
    candidates.truncate(cfg.starts);

    let mut best_v = f64::INFINITY;
    let mut best_u = us[0];
    for &i in &candidates {
        let a = us[i.saturating_sub(1)];
        let b = us[(i + 1).min(n - 1)];
        let (u, v, ok) = if b > a {
            golden_min(|u| sgn * f(u.exp()), a, b, cfg.max_iter, cfg.tol)
        } else {
            (us[i], sgn * vs[i], true)
        };
        *converged &= ok;
        if v < best_v {
            best_v = v;
            best_u = u;
        }
    }
    (sgn * best_v, best_u)
}

/// Golden-section minimization on `[a, b]`; returns `(argmin, min, hit_tol)`.
fn golden_min(
    g: impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    max_iter: usize,
    tol: f64,
) -> (f64, f64, bool) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut gc = g(c);
    let mut gd = g(d);
    let mut hit_tol = false;
    for _ in 0..max_iter {
        if b - a <= tol {
            hit_tol = true;
            break;
        }
        if gc < gd {
            b = d;
            d = c;
            gd = gc;
            c = b - INV_PHI * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + INV_PHI * (b - a);
            gd = g(d);
        }
    }
    let u = 0.5 * (a + b);
    (u, g(u).min(gc).min(gd), b - a <= tol || hit_tol)
}
