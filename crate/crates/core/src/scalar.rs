//! Generic floating-point scalar for the numeric kernels.
//!
//! Everything in this crate is generic over [`Scalar`]; `f64` is the type the
//! tolerances are calibrated for, `f32` is provided with proportionally looser
//! thresholds. Concrete aliases live at the crate root.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar with the numeric tolerances used across the crate.
///
/// The constants bundle every validation and clamping threshold in one place
/// so that `f32` instantiations degrade consistently instead of failing
/// spuriously against `f64`-scale tolerances.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Sum<Self> + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Max entrywise deviation from `M == M†` accepted by density-matrix validation.
    const TOL_HERMITIAN: Self;
    /// Max deviation of the trace from one accepted by density-matrix validation.
    const TOL_TRACE: Self;
    /// Most negative eigenvalue a density matrix may carry (PSD slack).
    const TOL_PSD: Self;
    /// Hermiticity tolerance of the eigensolver input check (looser than
    /// `TOL_HERMITIAN`: it also accepts derived matrices such as partial
    /// transposes and `√ρ·ρ̃·√ρ` products).
    const TOL_EIG_HERMITIAN: Self;
    /// Eigenvalues in `(-EIG_CLAMP, EIG_CLAMP)` are treated as zero before
    /// entropies and square roots; PSD violations at this scale are noise.
    const EIG_CLAMP: Self;
    /// An eigenvalue below `-TOL_NOT_PSD` makes `psd_sqrt` fail outright.
    const TOL_NOT_PSD: Self;
    /// Unit-norm tolerance for pure-state vectors.
    const TOL_NORM: Self;
    /// Relative spectral floor for the concurrence eigenvalue recipe: the pair
    /// marginals of a pure three-qubit state have rank ≤ 2, so the two smallest
    /// eigenvalues of `√ρ·ρ̃·√ρ` are exact zeros; flooring keeps their
    /// round-off from leaking `√ε`-size noise into the concurrence.
    const CONCURRENCE_FLOOR: Self;
    /// A Heron triangle factor may round this far below zero before it is
    /// clamped; anything lower is a genuine triangle-inequality violation.
    const TOL_HERON: Self;
    /// Discord values may round this far below zero before clamping.
    const TOL_DISCORD: Self;
    /// Tolerances of the two-route concurrence cross-check: the squared
    /// formulas must agree to `XCHECK_SQ`; the rooted values to `XCHECK_ABS`
    /// everywhere and to `XCHECK_TIGHT` whenever the concurrence is at least
    /// `XCHECK_COND` (below that the square root sits on the `√ε` noise floor).
    const XCHECK_SQ: Self;
    const XCHECK_ABS: Self;
    const XCHECK_TIGHT: Self;
    const XCHECK_COND: Self;
    /// Largest admissible scattering momentum (its fourth power, squared
    /// again under state normalization, must stay representable).
    const MU_CAP: Self;

    /// Smallest admissible scattering angle (the forward beam is projected out).
    fn theta_min() -> Self {
        Self::from_f64(1e-6).unwrap()
    }
}

impl Scalar for f64 {
    const TOL_HERMITIAN: f64 = 1e-12;
    const TOL_TRACE: f64 = 1e-12;
    const TOL_PSD: f64 = 1e-10;
    const TOL_EIG_HERMITIAN: f64 = 1e-10;
    const EIG_CLAMP: f64 = 1e-10;
    const TOL_NOT_PSD: f64 = 1e-8;
    const TOL_NORM: f64 = 1e-12;
    const CONCURRENCE_FLOOR: f64 = 1e-13;
    const TOL_HERON: f64 = 1e-12;
    const TOL_DISCORD: f64 = 1e-8;
    const XCHECK_SQ: f64 = 1e-12;
    const XCHECK_ABS: f64 = 1e-7;
    const XCHECK_TIGHT: f64 = 1e-10;
    const XCHECK_COND: f64 = 1e-4;
    const MU_CAP: f64 = 1e30;
}

impl Scalar for f32 {
    const TOL_HERMITIAN: f32 = 1e-5;
    const TOL_TRACE: f32 = 1e-5;
    const TOL_PSD: f32 = 1e-4;
    const TOL_EIG_HERMITIAN: f32 = 1e-4;
    const EIG_CLAMP: f32 = 1e-4;
    const TOL_NOT_PSD: f32 = 1e-3;
    const TOL_NORM: f32 = 1e-5;
    const CONCURRENCE_FLOOR: f32 = 1e-5;
    const TOL_HERON: f32 = 1e-5;
    const TOL_DISCORD: f32 = 1e-3;
    const XCHECK_SQ: f32 = 1e-5;
    const XCHECK_ABS: f32 = 1e-2;
    const XCHECK_TIGHT: f32 = 1e-4;
    const XCHECK_COND: f32 = 1e-2;
    const MU_CAP: f32 = 1e2;
}
