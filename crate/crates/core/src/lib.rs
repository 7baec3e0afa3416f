//! Numerical engine for the spin state produced by tree-level Bhabha
//! scattering with an entangled spectator particle.
//!
//! The crate builds the three-qubit post-scattering state from the six
//! closed-form helicity amplitudes, and quantifies its genuine tripartite
//! entanglement (GGM, three-π, genuine multipartite concurrence, concurrence
//! fill) together with the monogamy structure of the squared entanglement of
//! formation and squared quantum discord.
//!
//! Everything is generic over the floating-point scalar through
//! [`scalar::Scalar`]; the aliases below pin the common `f64` and `f32`
//! instantiations.

pub use num_complex;

pub mod amplitudes;
pub mod explore;
pub mod measures;
pub mod monogamy;
pub mod qmat;
pub mod scalar;
pub mod state;

pub use amplitudes::{amplitude, amplitude_row, DomainError, Kinematics, Spin};
pub use explore::{
    find_peak, limit_check, sweep, fill_relativistic_limit, GridRange, GteMeasure, LimitCheck,
    PeakBounds, PeakResult, QuantitySet, SweepRow, SweepSpec,
};
pub use measures::{
    binary_entropy, concurrence_fill, concurrence_one_vs_rest, discord_brute, discord_kw,
    discord_one_vs_rest, eof, eof_from_concurrence, eof_one_vs_rest, ggm, gmc_pure,
    gmc_pure_rooted, measure_report, negativity, three_pi, wootters_concurrence, MeasureError,
    MeasureReport, PairNegativities, ThreePi,
};
pub use monogamy::{
    monogamy_report, sef_residual, sqd_residual, DiscordSide, MonogamyReport, SefTerms, SqdTerms,
};
pub use qmat::{
    hermitian_eigenvalues, hermitian_eigh, partial_trace, partial_transpose, psd_sqrt,
    von_neumann_entropy, ComplexMatrix, DensityMatrix, Party, QmatError, QubitLabel,
};
pub use scalar::Scalar;
pub use state::{density, final_state, initial_state, reduced, PureState3Q, ScatterParams};

/// `f64` instantiations (the tolerance-calibrated default).
pub type ComplexMatrix64 = qmat::ComplexMatrix<f64>;
pub type DensityMatrix64 = qmat::DensityMatrix<f64>;
pub type Kinematics64 = amplitudes::Kinematics<f64>;
pub type ScatterParams64 = state::ScatterParams<f64>;
pub type PureState64 = state::PureState3Q<f64>;
pub type MeasureReport64 = measures::MeasureReport<f64>;
pub type MonogamyReport64 = monogamy::MonogamyReport<f64>;
pub type PeakResult64 = explore::PeakResult<f64>;

/// `f32` instantiations (proportionally looser tolerances).
pub type ComplexMatrix32 = qmat::ComplexMatrix<f32>;
pub type DensityMatrix32 = qmat::DensityMatrix<f32>;
pub type Kinematics32 = amplitudes::Kinematics<f32>;
pub type ScatterParams32 = state::ScatterParams<f32>;
pub type PureState32 = state::PureState3Q<f32>;
