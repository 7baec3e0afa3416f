//! Closed-form tree-level Bhabha helicity amplitudes as functions of the
//! scattering angle and the dimensionless momentum `μ = |p|/mₑ`.
//!
//! The incoming electron spin is fixed to `R`; `b` selects the incoming
//! positron spin and `(r, s)` the outgoing electron/positron spins. The
//! global `e²` coupling is dropped: the post-scattering state is unit
//! normalized downstream, so any overall constant cancels from every
//! reported quantity.

use thiserror::Error;

use crate::scalar::Scalar;

/// Spin label along the quantization axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    R,
    L,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::R, Spin::L];

    pub fn flip(self) -> Spin {
        match self {
            Spin::R => Spin::L,
            Spin::L => Spin::R,
        }
    }

    /// Basis index: `R ↦ 0`, `L ↦ 1`.
    pub fn idx(self) -> usize {
        match self {
            Spin::R => 0,
            Spin::L => 1,
        }
    }
}

/// A parameter value violated its domain constraint.
#[derive(Debug, Error, Clone, PartialEq)]
#[error("{param} = {value} out of domain: {constraint}")]
pub struct DomainError<T: Scalar> {
    pub param: &'static str,
    pub value: T,
    pub constraint: &'static str,
}

/// Scattering kinematics: angle `θ ∈ [θ_min, π]` and momentum `μ > 0`.
///
/// The forward region below `θ_min = 1e-6` is excluded: the unscattered beam
/// is projected out and the `csc²(θ/2)` amplitudes diverge there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kinematics<T> {
    theta: T,
    mu: T,
}

impl<T: Scalar> Kinematics<T> {
    pub fn new(theta: T, mu: T) -> Result<Self, DomainError<T>> {
        if !(theta >= T::theta_min() && theta <= T::PI()) {
            return Err(DomainError {
                param: "theta",
                value: theta,
                constraint: "must lie in [1e-6, pi] radians",
            });
        }
        // beyond the cap the mu^4 terms (and below its inverse the 1/mu^2
        // terms, squared again under normalization) overflow the scalar
        if mu <= T::zero() || !mu.is_finite() || mu > T::MU_CAP || mu < T::one() / T::MU_CAP {
            return Err(DomainError {
                param: "mu",
                value: mu,
                constraint: "must be positive and within the representable momentum range",
            });
        }
        Ok(Kinematics { theta, mu })
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn mu(&self) -> T {
        self.mu
    }
}

/// Polarized amplitude `M(R, b; r, s)` with the coupling constant dropped.
pub fn amplitude<T: Scalar>(b: Spin, r: Spin, s: Spin, k: &Kinematics<T>) -> T {
    let table = AmpTable::new(k);
    table.get(b, r, s)
}

/// The four amplitudes of one `b` row, indexed by `(r, s)` in the order
/// `RR, RL, LR, LL`.
pub fn amplitude_row<T: Scalar>(b: Spin, k: &Kinematics<T>) -> [T; 4] {
    let table = AmpTable::new(k);
    [
        table.get(b, Spin::R, Spin::R),
        table.get(b, Spin::R, Spin::L),
        table.get(b, Spin::L, Spin::R),
        table.get(b, Spin::L, Spin::L),
    ]
}

/// Evaluated amplitude table at one kinematic point.
///
/// Kept in the algebraically printed closed form, term for term, rather than
/// any half-angle rewrite.
pub(crate) struct AmpTable<T> {
    rr_rr: T,
    rr_rl: T,
    rr_ll: T,
    rl_rr: T,
    rl_rl: T,
    rl_lr: T,
}

impl<T: Scalar> AmpTable<T> {
    pub(crate) fn new(k: &Kinematics<T>) -> Self {
        let one = T::one();
        let two = one + one;
        let four = two + two;
        let eight = four + four;
        let eleven = T::from_f64(11.0).unwrap();

        let cos = k.theta.cos();
        let cos2 = (two * k.theta).cos();
        let half = k.theta / two;
        let sin_h = half.sin();
        let csc2 = one / (sin_h * sin_h);
        let cot = half.cos() / sin_h;
        let mu2 = k.mu * k.mu;
        let mu4 = mu2 * mu2;
        let root = (one + mu2).sqrt();

        AmpTable {
            rr_rr: (two + eleven * mu2 + eight * mu4 + two * cos + mu2 * cos2) * csc2
                / (four * mu2 * (one + mu2)),
            rr_rl: -(one + mu2 * cos) * cot / (mu2 * root),
            rr_ll: (one + mu2 * (one + cos)) / (mu2 * (one + mu2)),
            rl_rr: (one + mu2 * cos) * cot / (mu2 * root),
            rl_rl: (one + mu2 * (one + cos)) * cot * cot / mu2,
            rl_lr: one - cos - one / mu2,
        }
    }

    pub(crate) fn get(&self, b: Spin, r: Spin, s: Spin) -> T {
        match (b, r, s) {
            (Spin::R, Spin::R, Spin::R) => self.rr_rr,
            (Spin::R, Spin::R, Spin::L) | (Spin::R, Spin::L, Spin::R) => self.rr_rl,
            (Spin::R, Spin::L, Spin::L) => self.rr_ll,
            (Spin::L, Spin::R, Spin::R) => self.rl_rr,
            (Spin::L, Spin::R, Spin::L) => self.rl_rl,
            (Spin::L, Spin::L, Spin::R) => self.rl_lr,
            (Spin::L, Spin::L, Spin::L) => -self.rl_rr,
        }
    }
}
