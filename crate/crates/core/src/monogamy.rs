//! Monogamy of the squared entanglement of formation and squared quantum
//! discord, with the focal qubit A: one-vs-rest squared term minus the two
//! pairwise squared terms. Residuals are reported raw — a tiny negative from
//! round-off is asserted against a floor, never silently clamped.

use serde::Serialize;

use crate::measures::{discord_kw, discord_one_vs_rest, eof, eof_one_vs_rest};
use crate::qmat::QubitLabel;
use crate::scalar::Scalar;
use crate::state::{reduced, PureState3Q};

/// Which side of a pair carries the projective measurement in the pairwise
/// discord terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiscordSide {
    /// Measure the partner qubit: `D(ρ_AB)` measures B, `D(ρ_AC)` measures C.
    /// This is the assignment consistent with the Koashi–Winter identity and
    /// the focal-A residual ordering.
    #[default]
    Partner,
    /// Measure the focal qubit A in both pairs (sensitivity check).
    Focal,
}

/// Squared-EoF monogamy terms and residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SefTerms<T> {
    pub ef2_a_bc: T,
    pub ef2_ab: T,
    pub ef2_ac: T,
    pub residual: T,
}

/// Squared-discord monogamy terms and residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqdTerms<T> {
    pub d2_a_bc: T,
    pub d2_ab: T,
    pub d2_ac: T,
    pub residual: T,
}

/// Both residual sets for one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonogamyReport<T> {
    pub ef2_a_bc: T,
    pub ef2_ab: T,
    pub ef2_ac: T,
    pub e_residual: T,
    pub d2_a_bc: T,
    pub d2_ab: T,
    pub d2_ac: T,
    pub d_residual: T,
}

/// Residual of the squared entanglement of formation,
/// `E_R² = E_f²(ρ_{A|BC}) − E_f²(ρ_AB) − E_f²(ρ_AC)`.
pub fn sef_residual<T: Scalar>(s: &PureState3Q<T>) -> SefTerms<T> {
    let e_one = eof_one_vs_rest(s, QubitLabel::A);
    let e_ab = eof(&reduced(s, &[QubitLabel::A, QubitLabel::B]).expect("valid pair"));
    let e_ac = eof(&reduced(s, &[QubitLabel::A, QubitLabel::C]).expect("valid pair"));
    let terms = SefTerms {
        ef2_a_bc: e_one * e_one,
        ef2_ab: e_ab * e_ab,
        ef2_ac: e_ac * e_ac,
        residual: e_one * e_one - e_ab * e_ab - e_ac * e_ac,
    };
    assert!(
        terms.residual >= -T::TOL_DISCORD,
        "squared-EoF monogamy violated beyond round-off: {:e}",
        terms.residual
    );
    terms
}

/// Residual of the squared quantum discord,
/// `D_R² = D²(ρ_{A|BC}) − D²(ρ_AB) − D²(ρ_AC)`.
pub fn sqd_residual<T: Scalar>(s: &PureState3Q<T>, side: DiscordSide) -> SqdTerms<T> {
    let d_one = discord_one_vs_rest(s, QubitLabel::A);
    let (d_ab, d_ac) = match side {
        DiscordSide::Partner => (
            discord_kw(s, QubitLabel::A, QubitLabel::B).expect("distinct parties"),
            discord_kw(s, QubitLabel::A, QubitLabel::C).expect("distinct parties"),
        ),
        DiscordSide::Focal => (
            discord_kw(s, QubitLabel::B, QubitLabel::A).expect("distinct parties"),
            discord_kw(s, QubitLabel::C, QubitLabel::A).expect("distinct parties"),
        ),
    };
    let terms = SqdTerms {
        d2_a_bc: d_one * d_one,
        d2_ab: d_ab * d_ab,
        d2_ac: d_ac * d_ac,
        residual: d_one * d_one - d_ab * d_ab - d_ac * d_ac,
    };
    if side == DiscordSide::Partner {
        assert!(
            terms.residual >= -T::TOL_DISCORD,
            "squared-discord monogamy violated beyond round-off: {:e}",
            terms.residual
        );
    }
    terms
}

/// Full monogamy report with the standard partner-side measurement.
pub fn monogamy_report<T: Scalar>(s: &PureState3Q<T>, side: DiscordSide) -> MonogamyReport<T> {
    let e = sef_residual(s);
    let d = sqd_residual(s, side);
    let report = MonogamyReport {
        ef2_a_bc: e.ef2_a_bc,
        ef2_ab: e.ef2_ab,
        ef2_ac: e.ef2_ac,
        e_residual: e.residual,
        d2_a_bc: d.d2_a_bc,
        d2_ab: d.d2_ab,
        d2_ac: d.d2_ac,
        d_residual: d.residual,
    };
    if side == DiscordSide::Partner {
        assert!(
            report.d_residual >= report.e_residual - T::TOL_DISCORD,
            "discord residual fell below the entanglement residual: D_R² = {:e}, E_R² = {:e}",
            report.d_residual,
            report.e_residual
        );
    }
    report
}
