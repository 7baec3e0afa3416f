//! Construction of the three-particle spin states.
//!
//! The initial state puts the electron spin at `R` and entangles the positron
//! with the spectator, `cos η |RR⟩ + e^{iβ} sin η |LL⟩`. The post-scattering
//! state keeps only the interaction part, weighting each outgoing spin pair
//! by its amplitude and the spectator by the initial superposition, then
//! normalizes the eight-amplitude vector. That Euclidean rescaling replaces
//! the box-normalization constants, which enter only as a global factor.

use num_complex::Complex;

use crate::amplitudes::{AmpTable, DomainError, Kinematics, Spin};
use crate::qmat::{partial_trace, ComplexMatrix, DensityMatrix, QmatError, QubitLabel};
use crate::scalar::Scalar;

/// The four physical knobs: scattering angle, entanglement weight, relative
/// phase and dimensionless momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterParams<T> {
    theta: T,
    eta: T,
    beta: T,
    mu: T,
}

impl<T: Scalar> ScatterParams<T> {
    pub fn new(theta: T, eta: T, beta: T, mu: T) -> Result<Self, DomainError<T>> {
        let kin = Kinematics::new(theta, mu)?;
        if !(eta >= T::zero() && eta <= T::FRAC_PI_2()) {
            return Err(DomainError {
                param: "eta",
                value: eta,
                constraint: "must lie in [0, pi/2] radians",
            });
        }
        let two_pi = T::PI() + T::PI();
        if !(beta >= T::zero() && beta < two_pi) {
            return Err(DomainError {
                param: "beta",
                value: beta,
                constraint: "must lie in [0, 2*pi) radians",
            });
        }
        let _ = kin;
        Ok(ScatterParams { theta, eta, beta, mu })
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn eta(&self) -> T {
        self.eta
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn mu(&self) -> T {
        self.mu
    }

    pub fn kinematics(&self) -> Kinematics<T> {
        Kinematics::new(self.theta, self.mu).expect("validated on construction")
    }
}

/// Normalized pure state of the three spins over the basis
/// `|r⟩_A |s⟩_B |c⟩_C` with index `4r + 2s + c`, `R ↦ 0`, `L ↦ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState3Q<T> {
    amps: [Complex<T>; 8],
}

impl<T: Scalar> PureState3Q<T> {
    /// Wraps an amplitude vector that is already unit-norm within `TOL_NORM`.
    pub fn new(amps: [Complex<T>; 8]) -> Result<Self, DomainError<T>> {
        let norm_sq: T = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - T::one()).abs() > T::TOL_NORM {
            return Err(DomainError {
                param: "amps",
                value: norm_sq,
                constraint: "squared norm must equal one",
            });
        }
        Ok(PureState3Q { amps })
    }

    /// Normalizes an arbitrary nonzero amplitude vector.
    ///
    /// A zero vector cannot occur for in-domain scattering parameters, so it
    /// is treated as a caller bug rather than a recoverable error.
    pub fn from_unnormalized(amps: [Complex<T>; 8]) -> Self {
        let norm_sq: T = amps.iter().map(|z| z.norm_sqr()).sum();
        assert!(
            norm_sq > T::zero() && norm_sq.is_finite(),
            "amplitude vector has zero or non-finite norm"
        );
        let inv = T::one() / norm_sq.sqrt();
        let mut out = amps;
        for z in &mut out {
            *z = Complex::new(z.re * inv, z.im * inv);
        }
        PureState3Q { amps: out }
    }

    pub fn amps(&self) -> &[Complex<T>; 8] {
        &self.amps
    }

    pub fn basis_index(r: Spin, s: Spin, c: Spin) -> usize {
        4 * r.idx() + 2 * s.idx() + c.idx()
    }
}

/// The pre-scattering product-of-(A ⊗ entangled BC) state.
pub fn initial_state<T: Scalar>(p: &ScatterParams<T>) -> PureState3Q<T> {
    let zero = Complex::new(T::zero(), T::zero());
    let mut amps = [zero; 8];
    amps[PureState3Q::<T>::basis_index(Spin::R, Spin::R, Spin::R)] =
        Complex::new(p.eta.cos(), T::zero());
    amps[PureState3Q::<T>::basis_index(Spin::R, Spin::L, Spin::L)] =
        Complex::from_polar(p.eta.sin(), p.beta);
    PureState3Q::from_unnormalized(amps)
}

/// The normalized post-scattering pure state (interaction part only).
pub fn final_state<T: Scalar>(p: &ScatterParams<T>) -> PureState3Q<T> {
    let table = AmpTable::new(&p.kinematics());
    let cos_eta = p.eta.cos();
    let sin_eta = Complex::from_polar(p.eta.sin(), p.beta);
    let zero = Complex::new(T::zero(), T::zero());
    let mut amps = [zero; 8];
    for r in Spin::BOTH {
        for s in Spin::BOTH {
            amps[PureState3Q::<T>::basis_index(r, s, Spin::R)] =
                Complex::new(cos_eta * table.get(Spin::R, r, s), T::zero());
            amps[PureState3Q::<T>::basis_index(r, s, Spin::L)] =
                sin_eta * table.get(Spin::L, r, s);
        }
    }
    PureState3Q::from_unnormalized(amps)
}

/// Rank-1 projector `|ψ⟩⟨ψ|` as an 8×8 density matrix.
pub fn density<T: Scalar>(s: &PureState3Q<T>) -> DensityMatrix<T> {
    DensityMatrix::new(ComplexMatrix::outer(&s.amps[..]))
        .expect("outer product of a unit vector is a valid density matrix")
}

/// Reduced density matrix over the kept qubits (wrapper over the partial
/// trace of the full projector).
pub fn reduced<T: Scalar>(
    s: &PureState3Q<T>,
    keep: &[QubitLabel],
) -> Result<DensityMatrix<T>, QmatError<T>> {
    let traced: Vec<QubitLabel> = QubitLabel::ALL
        .into_iter()
        .filter(|q| !keep.contains(q))
        .collect();
    partial_trace(&density(s), &traced)
}
