//! Parameter sweeps, derivative-free peak search, and the closed-form
//! relativistic-limit cross-check for the concurrence fill.

use rayon::prelude::*;
use serde::Serialize;

use crate::amplitudes::DomainError;
use crate::measures::{concurrence_fill, gmc_pure, measure_report, MeasureReport};
use crate::monogamy::{monogamy_report, DiscordSide, MonogamyReport};
use crate::scalar::Scalar;
use crate::state::{final_state, PureState3Q, ScatterParams};

/// Inclusive linear grid over one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange<T> {
    pub lo: T,
    pub hi: T,
    pub steps: usize,
}

impl<T: Scalar> GridRange<T> {
    pub fn new(lo: T, hi: T, steps: usize) -> Self {
        GridRange { lo, hi, steps }
    }

    pub fn points(&self) -> Vec<T> {
        let n = self.steps;
        let nf = T::from_usize(n - 1).unwrap();
        (0..n)
            .map(|k| {
                // exact endpoints: the interpolation can round past `hi`
                if k == 0 {
                    self.lo
                } else if k == n - 1 {
                    self.hi
                } else {
                    self.lo + (self.hi - self.lo) * T::from_usize(k).unwrap() / nf
                }
            })
            .collect()
    }
}

/// Which quantity families a sweep evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantitySet {
    pub ggm: bool,
    pub three_pi: bool,
    pub gmc: bool,
    pub fill: bool,
    pub sef_terms: bool,
    pub sqd_terms: bool,
    pub residuals: bool,
}

impl QuantitySet {
    /// The four tripartite measures only.
    pub fn gte() -> Self {
        QuantitySet {
            ggm: true,
            three_pi: true,
            gmc: true,
            fill: true,
            sef_terms: false,
            sqd_terms: false,
            residuals: false,
        }
    }

    pub fn all() -> Self {
        QuantitySet {
            sef_terms: true,
            sqd_terms: true,
            residuals: true,
            ..Self::gte()
        }
    }

    /// Any monogamy-family quantity requested? The monogamy columns are
    /// emitted as one block.
    pub fn wants_monogamy(&self) -> bool {
        self.sef_terms || self.sqd_terms || self.residuals
    }
}

/// One sweep over a (μ, θ, η) grid at fixed β.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec<T> {
    pub mu_values: Vec<T>,
    pub theta_range: GridRange<T>,
    pub eta_range: GridRange<T>,
    pub beta: T,
    pub quantities: QuantitySet,
}

/// One evaluated grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow<T> {
    pub mu: T,
    pub theta: T,
    pub eta: T,
    pub measures: MeasureReport<T>,
    pub monogamy: Option<MonogamyReport<T>>,
}

/// Evaluates the grid, μ-major then θ then η, deterministically ordered and
/// embarrassingly parallel over points.
pub fn sweep<T: Scalar>(spec: &SweepSpec<T>) -> Result<Vec<SweepRow<T>>, DomainError<T>> {
    if spec.mu_values.is_empty() {
        return Err(DomainError {
            param: "mu",
            value: T::zero(),
            constraint: "at least one value required",
        });
    }
    for range in [&spec.theta_range, &spec.eta_range] {
        if range.steps < 2 {
            return Err(DomainError {
                param: "steps",
                value: T::from_usize(range.steps).unwrap(),
                constraint: "grids need at least 2 steps",
            });
        }
    }
    let thetas = spec.theta_range.points();
    let etas = spec.eta_range.points();
    // validate the grid corners up front so per-point construction is total
    for &theta in [thetas[0], thetas[thetas.len() - 1]].iter() {
        for &mu in &spec.mu_values {
            ScatterParams::new(theta, etas[0], spec.beta, mu)?;
            ScatterParams::new(theta, etas[etas.len() - 1], spec.beta, mu)?;
        }
    }

    let mut grid = Vec::with_capacity(spec.mu_values.len() * thetas.len() * etas.len());
    for &mu in &spec.mu_values {
        for &theta in &thetas {
            for &eta in &etas {
                grid.push((mu, theta, eta));
            }
        }
    }
    let wants_monogamy = spec.quantities.wants_monogamy();
    let beta = spec.beta;
    Ok(grid
        .into_par_iter()
        .map(|(mu, theta, eta)| {
            let params = ScatterParams::new(theta, eta, beta, mu)
                .expect("grid points validated against the parameter domain");
            let state = final_state(&params);
            SweepRow {
                mu,
                theta,
                eta,
                measures: measure_report(&state),
                monogamy: wants_monogamy
                    .then(|| monogamy_report(&state, DiscordSide::Partner)),
            }
        })
        .collect())
}

/// The four tripartite measures a peak search can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GteMeasure {
    Ggm,
    ThreePi,
    Gmc,
    Fill,
}

impl GteMeasure {
    pub fn name(self) -> &'static str {
        match self {
            GteMeasure::Ggm => "ggm",
            GteMeasure::ThreePi => "three_pi",
            GteMeasure::Gmc => "gmc",
            GteMeasure::Fill => "fill",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "ggm" => Some(GteMeasure::Ggm),
            "three_pi" => Some(GteMeasure::ThreePi),
            "gmc" => Some(GteMeasure::Gmc),
            "fill" => Some(GteMeasure::Fill),
            _ => None,
        }
    }

    fn eval<T: Scalar>(self, s: &PureState3Q<T>) -> T {
        match self {
            GteMeasure::Ggm => crate::measures::ggm(s),
            GteMeasure::ThreePi => crate::measures::three_pi(s).value,
            GteMeasure::Gmc => gmc_pure(s),
            GteMeasure::Fill => concurrence_fill(s),
        }
    }
}

/// Search box for [`find_peak`], `(lo, hi)` per coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakBounds<T> {
    pub theta: (T, T),
    pub eta: (T, T),
    pub mu: (T, T),
}

impl<T: Scalar> PeakBounds<T> {
    /// Domain-wide angles; μ covering the structured window below the
    /// relativistic plateau.
    pub fn default_bounds() -> Self {
        let f = |x: f64| T::from_f64(x).unwrap();
        PeakBounds {
            theta: (T::theta_min(), T::PI()),
            eta: (T::zero(), T::FRAC_PI_2()),
            mu: (f(0.05), f(5.0)),
        }
    }

    fn validate(&self) -> Result<(), DomainError<T>> {
        let ok = |(lo, hi): (T, T)| lo < hi;
        if !ok(self.theta) || self.theta.0 < T::theta_min() || self.theta.1 > T::PI() {
            return Err(DomainError {
                param: "theta-bounds",
                value: self.theta.0,
                constraint: "need theta_min <= lo < hi <= pi",
            });
        }
        if !ok(self.eta) || self.eta.0 < T::zero() || self.eta.1 > T::FRAC_PI_2() {
            return Err(DomainError {
                param: "eta-bounds",
                value: self.eta.0,
                constraint: "need 0 <= lo < hi <= pi/2",
            });
        }
        if !ok(self.mu) || self.mu.0 <= T::zero() {
            return Err(DomainError {
                param: "mu-bounds",
                value: self.mu.0,
                constraint: "need 0 < lo < hi",
            });
        }
        Ok(())
    }
}

/// Converged peak-search result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeakResult<T> {
    pub theta_star: T,
    pub eta_star: T,
    pub mu_star: T,
    pub value: T,
    pub evaluations: u64,
    /// False when the simplex refinement could not beat the seed-grid best
    /// (the grid best is returned in that case).
    pub refinement_improved: bool,
}

/// Deterministic peak search: a `seed_grid³` coarse scan followed by a
/// bounds-clamped Nelder–Mead refinement (reflect 1, expand 2, contract 0.5,
/// shrink 0.5; initial simplex scale 0.05 per coordinate) from the best grid
/// cell, stopping when the simplex diameter falls below `1e-4` in every
/// coordinate. No randomness anywhere: identical inputs give identical
/// results bit for bit.
pub fn find_peak<T: Scalar>(
    measure: GteMeasure,
    bounds: PeakBounds<T>,
    seed_grid: usize,
) -> Result<PeakResult<T>, DomainError<T>> {
    bounds.validate()?;
    if seed_grid < 2 {
        return Err(DomainError {
            param: "seed-grid",
            value: T::from_usize(seed_grid).unwrap(),
            constraint: "need at least 2 points per axis",
        });
    }

    let mut evaluations: u64 = 0;
    let mut objective = |x: [T; 3]| -> T {
        evaluations += 1;
        let params = ScatterParams::new(x[0], x[1], T::zero(), x[2])
            .expect("clamped points stay inside the domain");
        measure.eval(&final_state(&params))
    };

    let axis = |lo: T, hi: T| GridRange::new(lo, hi, seed_grid).points();
    let mut best_x = [bounds.theta.0, bounds.eta.0, bounds.mu.0];
    let mut best_v = T::neg_infinity();
    for &theta in &axis(bounds.theta.0, bounds.theta.1) {
        for &eta in &axis(bounds.eta.0, bounds.eta.1) {
            for &mu in &axis(bounds.mu.0, bounds.mu.1) {
                let v = objective([theta, eta, mu]);
                if v > best_v {
                    best_v = v;
                    best_x = [theta, eta, mu];
                }
            }
        }
    }
    let grid_best = (best_x, best_v);

    let clamp = |x: [T; 3]| -> [T; 3] {
        [
            x[0].max(bounds.theta.0).min(bounds.theta.1),
            x[1].max(bounds.eta.0).min(bounds.eta.1),
            x[2].max(bounds.mu.0).min(bounds.mu.1),
        ]
    };
    let scale = T::from_f64(0.05).unwrap();
    let diam_tol = T::from_f64(1e-4).unwrap();
    const MAX_ITER: usize = 2000;

    // simplex of 4 points; we minimize the negated objective
    let mut pts: Vec<[T; 3]> = vec![grid_best.0];
    for i in 0..3 {
        let mut p = grid_best.0;
        let hi = [bounds.theta.1, bounds.eta.1, bounds.mu.1][i];
        p[i] = if p[i] + scale <= hi { p[i] + scale } else { p[i] - scale };
        pts.push(clamp(p));
    }
    let mut vals: Vec<T> = pts.iter().map(|&p| -objective(p)).collect();

    let half = T::from_f64(0.5).unwrap();
    let two = T::one() + T::one();
    for _ in 0..MAX_ITER {
        let mut order: Vec<usize> = (0..4).collect();
        order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).expect("finite objective"));
        pts = order.iter().map(|&i| pts[i]).collect();
        vals = order.iter().map(|&i| vals[i]).collect();

        let mut diameter = T::zero();
        for p in &pts[1..] {
            for c in 0..3 {
                diameter = diameter.max((p[c] - pts[0][c]).abs());
            }
        }
        if diameter < diam_tol {
            break;
        }

        let mut centroid = [T::zero(); 3];
        for p in &pts[..3] {
            for c in 0..3 {
                centroid[c] += p[c] / T::from_f64(3.0).unwrap();
            }
        }
        let worst = pts[3];
        let dir = |t: T| -> [T; 3] {
            let mut x = [T::zero(); 3];
            for c in 0..3 {
                x[c] = centroid[c] + t * (centroid[c] - worst[c]);
            }
            clamp(x)
        };

        let reflected = dir(T::one());
        let f_reflected = -objective(reflected);
        if f_reflected < vals[0] {
            let expanded = dir(two);
            let f_expanded = -objective(expanded);
            if f_expanded < f_reflected {
                pts[3] = expanded;
                vals[3] = f_expanded;
            } else {
                pts[3] = reflected;
                vals[3] = f_reflected;
            }
        } else if f_reflected < vals[2] {
            pts[3] = reflected;
            vals[3] = f_reflected;
        } else {
            let contracted = if f_reflected < vals[3] {
                dir(half)
            } else {
                dir(-half)
            };
            let f_contracted = -objective(contracted);
            if f_contracted < vals[3].min(f_reflected) {
                pts[3] = contracted;
                vals[3] = f_contracted;
            } else {
                for i in 1..4 {
                    let mut p = pts[0];
                    for c in 0..3 {
                        p[c] = pts[0][c] + half * (pts[i][c] - pts[0][c]);
                    }
                    pts[i] = clamp(p);
                    vals[i] = -objective(pts[i]);
                }
            }
        }
    }

    let mut refined = (pts[0], -vals[0]);
    for (p, v) in pts.iter().zip(&vals).skip(1) {
        if -*v > refined.1 {
            refined = (*p, -*v);
        }
    }
    let refinement_improved = refined.1 > grid_best.1;
    let (x, value) = if refinement_improved { refined } else { grid_best };
    Ok(PeakResult {
        theta_star: x[0],
        eta_star: x[1],
        mu_star: x[2],
        value,
        evaluations,
        refinement_improved,
    })
}

/// Closed-form concurrence fill in the relativistic limit `μ → ∞`.
pub fn fill_relativistic_limit<T: Scalar>(theta: T, eta: T) -> Result<T, DomainError<T>> {
    if !(theta > T::zero() && theta <= T::PI()) {
        return Err(DomainError {
            param: "theta",
            value: theta,
            constraint: "must lie in (0, pi]",
        });
    }
    if !(eta >= T::zero() && eta <= T::FRAC_PI_2()) {
        return Err(DomainError {
            param: "eta",
            value: eta,
            constraint: "must lie in [0, pi/2]",
        });
    }
    let f = |x: f64| T::from_f64(x).unwrap();
    let two = f(2.0);
    let cos_n = |n: f64| (f(n) * theta).cos();
    let a = f(17955.0) + f(14280.0) * cos_n(2.0) + f(540.0) * cos_n(4.0) - f(8.0) * cos_n(6.0)
        + (two * eta).cos()
            * (f(17885.0) + f(14392.0) * cos_n(2.0) + f(484.0) * cos_n(4.0) + f(8.0) * cos_n(6.0)
                - cos_n(8.0))
        + cos_n(8.0);
    let b = f(99.0)
        + f(29.0) * (two * eta).cos()
        + two * (f(28.0) * cos_n(2.0) + cos_n(4.0)) * eta.sin() * eta.sin();
    let sin_eta = eta.sin();
    let sin_2eta = (two * eta).sin();
    let sin_theta = theta.sin();
    let inner = a * sin_eta.powi(6) * sin_2eta.powi(4) * sin_theta.powi(16) / b.powi(8);
    Ok(f(256.0) * inner.max(T::zero()).sqrt().sqrt() / f(3.0).sqrt().sqrt())
}

/// Relative deviation record of [`limit_check`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitCheck<T> {
    pub fill_numeric: T,
    pub fill_limit: T,
    pub deviation: T,
}

/// Compares the numeric fill at a large μ against the closed-form limit:
/// `|fill_numeric − fill_limit| / max(fill_limit, 1e-12)`.
pub fn limit_check<T: Scalar>(theta: T, eta: T, mu_large: T) -> Result<LimitCheck<T>, DomainError<T>> {
    if mu_large < T::from_f64(1e3).unwrap() {
        return Err(DomainError {
            param: "mu",
            value: mu_large,
            constraint: "limit check requires mu >= 1e3",
        });
    }
    let limit = fill_relativistic_limit(theta, eta)?;
    let params = ScatterParams::new(theta, eta, T::zero(), mu_large)?;
    let numeric = concurrence_fill(&final_state(&params));
    let guard = limit.max(T::from_f64(1e-12).unwrap());
    Ok(LimitCheck {
        fill_numeric: numeric,
        fill_limit: limit,
        deviation: (numeric - limit).abs() / guard,
    })
}
