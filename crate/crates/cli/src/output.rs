//! Serialized document shapes and the sweep CSV format.

use std::io::{self, Write};

use serde::Serialize;

use bqc_core::{MeasureReport, MonogamyReport, SweepRow, ThreePi};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ParamsEcho {
    pub theta: f64,
    pub eta: f64,
    pub beta: f64,
    pub mu: f64,
}

/// Extra diagnostics attached to a verbose measures document.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerboseMeasures {
    /// Square-root normalization of the genuine multipartite concurrence
    /// (`min_i √(2(1 − Tr ρ_i²))`), alongside the squared form reported in
    /// the main block.
    pub gmc_rooted: f64,
    pub pi_components: ThreePi<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub params: ParamsEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measures: Option<MeasureReport<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verbose: Option<VerboseMeasures>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monogamy: Option<MonogamyReport<f64>>,
    pub timing_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AmplitudeRecord {
    pub schema_version: &'static str,
    pub theta: f64,
    pub mu: f64,
    /// Row `b = R`, outgoing spins in the order RR, RL, LR, LL.
    pub row_r: [f64; 4],
    /// Row `b = L`, same ordering.
    pub row_l: [f64; 4],
    pub timing_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PeakRecord {
    pub schema_version: &'static str,
    pub measure: &'static str,
    pub theta_star: f64,
    pub eta_star: f64,
    pub mu_star: f64,
    pub value: f64,
    pub evaluations: u64,
    pub refinement_improved: bool,
    pub timing_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitRecord {
    pub schema_version: &'static str,
    pub theta: f64,
    pub eta: f64,
    pub mu: f64,
    pub fill_numeric: f64,
    pub fill_limit: f64,
    pub deviation: f64,
    pub timing_ms: f64,
}

/// Nine significant digits, scientific notation.
fn fmt(v: f64) -> String {
    format!("{v:.8e}")
}

/// Writes the sweep CSV: fixed GTE columns, optional monogamy block,
/// LF line endings.
pub fn write_sweep_csv<W: Write>(
    rows: &[SweepRow<f64>],
    with_monogamy: bool,
    out: &mut W,
) -> io::Result<()> {
    let mut header = String::from("mu,theta,eta,ggm,three_pi,gmc,fill");
    if with_monogamy {
        header.push_str(",ef2_a_bc,ef2_ab,ef2_ac,e_res,d2_a_bc,d2_ab,d2_ac,d_res");
    }
    writeln!(out, "{header}")?;
    for row in rows {
        let m = &row.measures;
        let mut line = [row.mu, row.theta, row.eta, m.ggm, m.three_pi, m.gmc, m.fill]
            .map(fmt)
            .join(",");
        if with_monogamy {
            let g = row
                .monogamy
                .as_ref()
                .expect("monogamy rows requested but not computed");
            line.push(',');
            line.push_str(
                &[
                    g.ef2_a_bc, g.ef2_ab, g.ef2_ac, g.e_residual, g.d2_a_bc, g.d2_ab, g.d2_ac,
                    g.d_residual,
                ]
                .map(fmt)
                .join(","),
            );
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}
