//! Bipartite and tripartite correlation quantifiers.
//!
//! One-vs-rest concurrence, negativity, GGM, three-π, genuine multipartite
//! concurrence, concurrence fill, Wootters concurrence, entanglement of
//! formation, and quantum discord (closed form plus a brute-force
//! measurement-minimization oracle). All entropies are in bits.

use serde::Serialize;
use thiserror::Error;

use num_complex::Complex;

use crate::qmat::{
    hermitian_eigenvalues, partial_transpose, psd_sqrt, von_neumann_entropy, ComplexMatrix,
    DensityMatrix, Party, QubitLabel,
};
use crate::scalar::Scalar;
use crate::state::{reduced, PureState3Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeasureError {
    #[error("the focal and measured parties must differ")]
    SameParty,
}

/// Binary entropy `H(x) = -x log2 x - (1-x) log2 (1-x)` with `0·log 0 = 0`.
pub fn binary_entropy<T: Scalar>(x: T) -> T {
    let mut h = T::zero();
    for p in [x, T::one() - x] {
        if p > T::zero() {
            h -= p * p.log2();
        }
    }
    h.max(T::zero())
}

fn single_qubit_marginal<T: Scalar>(s: &PureState3Q<T>, i: QubitLabel) -> DensityMatrix<T> {
    reduced(s, &[i]).expect("single-qubit reduction of a valid state")
}

fn pair_marginal<T: Scalar>(s: &PureState3Q<T>, i: QubitLabel, j: QubitLabel) -> DensityMatrix<T> {
    let mut keep = [i, j];
    keep.sort_by_key(|q| match q {
        QubitLabel::A => 0,
        QubitLabel::B => 1,
        QubitLabel::C => 2,
    });
    reduced(s, &keep).expect("pair reduction of a valid state")
}

/// One-vs-rest bipartite concurrence `C_{i(jk)}`.
///
/// Both printed routes are evaluated — `2√(det ρ_i)` and `√(2[1 − Tr ρ_i²])`
/// — and cross-asserted. The determinant route is returned: near a product
/// state the trace route sits on the `√ε` cancellation floor, so the rooted
/// values are compared tightly only where the concurrence is well
/// conditioned, while the squared forms must agree everywhere.
pub fn concurrence_one_vs_rest<T: Scalar>(s: &PureState3Q<T>, i: QubitLabel) -> T {
    let rho = single_qubit_marginal(s, i);
    let det = (rho[(0, 0)] * rho[(1, 1)] - rho[(0, 1)] * rho[(1, 0)]).re;
    let two = T::one() + T::one();
    let via_det = two * det.max(T::zero()).sqrt();
    let purity = rho.purity();
    let via_trace = (two * (T::one() - purity)).max(T::zero()).sqrt();

    let sq_gap = (via_det * via_det - via_trace * via_trace).abs();
    let gap = (via_det - via_trace).abs();
    assert!(
        sq_gap <= T::XCHECK_SQ && gap <= T::XCHECK_ABS,
        "concurrence routes disagree: det {via_det:e} vs trace {via_trace:e}"
    );
    if via_det >= T::XCHECK_COND {
        assert!(
            gap <= T::XCHECK_TIGHT,
            "conditioned concurrence routes disagree: det {via_det:e} vs trace {via_trace:e}"
        );
    }
    via_det
}

/// Generalized geometric measure of a pure three-qubit state:
/// one minus the largest single-qubit marginal eigenvalue over all cuts.
pub fn ggm<T: Scalar>(s: &PureState3Q<T>) -> T {
    let mut lambda_max = T::zero();
    for q in QubitLabel::ALL {
        let top = single_qubit_marginal(s, q).eigenvalues()[0];
        lambda_max = lambda_max.max(top);
    }
    T::one() - lambda_max
}

/// Trace-norm negativity `‖ρ^Γ‖₁ − 1` of a two-qubit state, i.e. twice the
/// absolute sum of the negative partial-transpose eigenvalues. This is the
/// normalization under which a pure-state one-vs-rest negativity equals the
/// one-vs-rest concurrence.
pub fn negativity<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    let pt = partial_transpose(rho, Party::First);
    let eig = hermitian_eigenvalues(&pt).expect("partial transpose is Hermitian");
    let two = T::one() + T::one();
    let neg_sum: T = eig.into_iter().filter(|l| *l < T::zero()).sum();
    two * neg_sum.abs()
}

/// The three residual negativities and their average.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThreePi<T> {
    pub pi_a: T,
    pub pi_b: T,
    pub pi_c: T,
    pub value: T,
}

/// Three-π entanglement: the average over focal qubits of
/// `N²_{i(jk)} − N²_{ij} − N²_{ik}`.
pub fn three_pi<T: Scalar>(s: &PureState3Q<T>) -> ThreePi<T> {
    let pair_negativity =
        |i, j| -> T { negativity(&pair_marginal(s, i, j)) };
    let residual = |i: QubitLabel, j: QubitLabel, k: QubitLabel| -> T {
        let n_one = concurrence_one_vs_rest(s, i);
        let n_ij = pair_negativity(i, j);
        let n_ik = pair_negativity(i, k);
        n_one * n_one - n_ij * n_ij - n_ik * n_ik
    };
    let pi_a = residual(QubitLabel::A, QubitLabel::B, QubitLabel::C);
    let pi_b = residual(QubitLabel::B, QubitLabel::A, QubitLabel::C);
    let pi_c = residual(QubitLabel::C, QubitLabel::A, QubitLabel::B);
    let three = T::from_f64(3.0).unwrap();
    ThreePi {
        pi_a,
        pi_b,
        pi_c,
        value: (pi_a + pi_b + pi_c) / three,
    }
}

/// Genuine multipartite concurrence of a pure state, squared normalization:
/// `min_i 2(1 − Tr ρ_i²)`.
///
/// This is the quantity the reported peak table and the measure hierarchy
/// use; the square-root normalization is [`gmc_pure_rooted`]. Both are
/// bounded by one for qubit marginals.
pub fn gmc_pure<T: Scalar>(s: &PureState3Q<T>) -> T {
    let mut min = T::infinity();
    for q in QubitLabel::ALL {
        let c = concurrence_one_vs_rest(s, q);
        min = min.min(c * c);
    }
    min
}

/// Square-root normalization of the genuine multipartite concurrence:
/// `min_i √(2(1 − Tr ρ_i²))`, equal to the smallest one-vs-rest concurrence.
pub fn gmc_pure_rooted<T: Scalar>(s: &PureState3Q<T>) -> T {
    let mut min = T::infinity();
    for q in QubitLabel::ALL {
        min = min.min(concurrence_one_vs_rest(s, q));
    }
    min
}

/// Concurrence fill: the normalized Heron area of the triangle whose sides
/// are the squared one-vs-rest concurrences.
pub fn concurrence_fill<T: Scalar>(s: &PureState3Q<T>) -> T {
    let c_sq: Vec<T> = QubitLabel::ALL
        .into_iter()
        .map(|q| {
            let c = concurrence_one_vs_rest(s, q);
            c * c
        })
        .collect();
    let two = T::one() + T::one();
    let q = (c_sq[0] + c_sq[1] + c_sq[2]) / two;
    let mut product = T::from_f64(16.0 / 3.0).unwrap() * q;
    for &side in &c_sq {
        let factor = q - side;
        assert!(
            factor >= -T::TOL_HERON,
            "triangle inequality violated: Heron factor {factor:e}"
        );
        product *= factor.max(T::zero());
    }
    product.sqrt().sqrt()
}

/// Wootters concurrence of a two-qubit mixed state.
///
/// Uses the all-Hermitian route: the eigenvalues of `√ρ · ρ̃ · √ρ` (same
/// spectrum as `ρρ̃` by similarity, but real and non-negative by
/// construction). Pair marginals of a pure three-qubit state have rank ≤ 2,
/// so eigenvalues below `CONCURRENCE_FLOOR` relative to the largest are
/// exact zeros and are floored before the square roots.
pub fn wootters_concurrence<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    assert_eq!(rho.dim(), 4, "Wootters concurrence is a two-qubit measure");
    let spin_flipped = {
        // (σy ⊗ σy) ρ* (σy ⊗ σy): entrywise s_i s_j conj(ρ[3-i][3-j])
        let sign = |i: usize| {
            if i == 0 || i == 3 {
                -T::one()
            } else {
                T::one()
            }
        };
        ComplexMatrix::from_fn(4, |i, j| {
            let z = rho[(3 - i, 3 - j)].conj();
            let s = sign(i) * sign(j);
            Complex::new(z.re * s, z.im * s)
        })
    };
    let root = psd_sqrt(rho.matrix()).expect("density matrix is PSD");
    let herm = root.mul(&spin_flipped).mul(&root);
    let eig = hermitian_eigenvalues(&herm).expect("product is Hermitian by construction");

    let floor = T::CONCURRENCE_FLOOR * eig[0].max(T::zero());
    let mut c = T::zero();
    for (idx, l) in eig.into_iter().enumerate() {
        let l = if l < floor { T::zero() } else { l };
        let r = l.max(T::zero()).sqrt();
        if idx == 0 {
            c = r;
        } else {
            c -= r;
        }
    }
    c.max(T::zero())
}

/// Entanglement of formation of a two-qubit state (bits).
pub fn eof<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    eof_from_concurrence(wootters_concurrence(rho))
}

/// `E_f = H((1 + √(1 − C²)) / 2)` for a known concurrence.
pub fn eof_from_concurrence<T: Scalar>(c: T) -> T {
    let two = T::one() + T::one();
    let x = (T::one() - c * c).max(T::zero()).sqrt();
    binary_entropy((T::one() + x) / two)
}

/// One-vs-rest entanglement of formation of the pure global state.
pub fn eof_one_vs_rest<T: Scalar>(s: &PureState3Q<T>, i: QubitLabel) -> T {
    eof_from_concurrence(concurrence_one_vs_rest(s, i))
}

/// Pairwise quantum discord `D(ρ_{i,measured})` of the pure global state via
/// the Koashi–Winter identity: `E_f(ρ_ij) − S(ρ_{i,measured}) + S(ρ_measured)`
/// with `j` the remaining qubit and the measurement on `measured`.
pub fn discord_kw<T: Scalar>(
    s: &PureState3Q<T>,
    i: QubitLabel,
    measured: QubitLabel,
) -> Result<T, MeasureError> {
    if i == measured {
        return Err(MeasureError::SameParty);
    }
    let j = QubitLabel::ALL
        .into_iter()
        .find(|&q| q != i && q != measured)
        .expect("three labels");
    let e_ij = eof(&pair_marginal(s, i, j));
    let s_ik = von_neumann_entropy(&pair_marginal(s, i, measured));
    let s_k = von_neumann_entropy(&single_qubit_marginal(s, measured));
    let d = e_ij - (s_ik - s_k);
    assert!(
        d >= -T::TOL_DISCORD,
        "Koashi-Winter discord below the round-off floor: {d:e}"
    );
    Ok(d.max(T::zero()))
}

/// One-vs-rest discord of a pure global state, which reduces to the marginal
/// entropy `S(ρ_i)`.
pub fn discord_one_vs_rest<T: Scalar>(s: &PureState3Q<T>, i: QubitLabel) -> T {
    von_neumann_entropy(&single_qubit_marginal(s, i))
}

/// Brute-force quantum discord of a two-qubit state with rank-1 projective
/// measurements on the second qubit.
///
/// Scans an `n_grid × n_grid` lattice over the Bloch sphere of measurement
/// directions and then refines deterministically around the best cell. For
/// the rank-2 marginals arising from a pure tripartite state, projective
/// measurements attain the optimum, so this independently cross-checks the
/// closed form.
pub fn discord_brute<T: Scalar>(rho: &DensityMatrix<T>, n_grid: usize) -> T {
    assert_eq!(rho.dim(), 4);
    assert!(n_grid >= 32, "grid too coarse for the measurement scan");

    let s_ab = von_neumann_entropy(rho);
    let rho_b = {
        let m = rho.matrix();
        let mut out = ComplexMatrix::zeros(2);
        for k in 0..2 {
            for l in 0..2 {
                out[(k, l)] = m[(k, l)] + m[(2 + k, 2 + l)];
            }
        }
        DensityMatrix::new(out).expect("marginal of a density matrix")
    };
    let conditional = s_ab - von_neumann_entropy(&rho_b);

    // average conditional entropy of A after projecting B along (polar, azimuth)
    let measured_entropy = |polar: T, azimuth: T| -> T {
        let two = T::one() + T::one();
        let m0 = Complex::new((polar / two).cos(), T::zero());
        let m1 = Complex::from_polar((polar / two).sin(), azimuth);
        let mut total = T::zero();
        for flip in [false, true] {
            // projector |m><m| or its complement (|m_perp> = (-m1*, m0*))
            let (a0, a1) = if flip {
                (-m1.conj(), m0.conj())
            } else {
                (m0, m1)
            };
            // sub-normalized conditioned state on A: rho_A|j [x][y] =
            // sum_{k,l} rho[(x,k),(y,l)] a_k* a_l  (projector sandwiched, B traced)
            let mut cond = ComplexMatrix::zeros(2);
            for x in 0..2 {
                for y in 0..2 {
                    let mut acc = Complex::new(T::zero(), T::zero());
                    for k in 0..2 {
                        for l in 0..2 {
                            let amp = [a0, a1][k].conj() * [a0, a1][l];
                            acc += rho[(2 * x + k, 2 * y + l)] * amp;
                        }
                    }
                    cond[(x, y)] = acc;
                }
            }
            let p = cond.trace().re;
            if p > T::from_f64(1e-12).unwrap() {
                let inv = T::one() / p;
                let normalized = ComplexMatrix::from_fn(2, |x, y| {
                    Complex::new(cond[(x, y)].re * inv, cond[(x, y)].im * inv)
                });
                let dm = DensityMatrix::new(normalized)
                    .expect("conditioned state is a valid density matrix");
                total += p * von_neumann_entropy(&dm);
            }
        }
        total
    };

    let pi = T::PI();
    let two_pi = pi + pi;
    let nf = T::from_usize(n_grid).unwrap();
    let mut best = (T::infinity(), T::zero(), T::zero());
    for ia in 0..n_grid {
        let polar = pi * T::from_usize(ia).unwrap() / (nf - T::one());
        for ip in 0..n_grid {
            let azimuth = two_pi * T::from_usize(ip).unwrap() / nf;
            let v = measured_entropy(polar, azimuth);
            if v < best.0 {
                best = (v, polar, azimuth);
            }
        }
    }
    // deterministic shrinking-window refinement around the best cell
    let (mut val, mut polar, mut azimuth) = best;
    let mut half_a = pi / nf;
    let mut half_p = two_pi / nf;
    let nine = 9usize;
    for _ in 0..10 {
        let (p0, z0) = (polar, azimuth);
        for ia in 0..nine {
            let a = (p0 - half_a
                + (half_a + half_a) * T::from_usize(ia).unwrap() / T::from_usize(nine - 1).unwrap())
            .max(T::zero())
            .min(pi);
            for ip in 0..nine {
                let z = z0 - half_p
                    + (half_p + half_p) * T::from_usize(ip).unwrap()
                        / T::from_usize(nine - 1).unwrap();
                let v = measured_entropy(a, z);
                if v < val {
                    val = v;
                    polar = a;
                    azimuth = z;
                }
            }
        }
        let quarter = T::from_f64(0.25).unwrap();
        half_a *= quarter;
        half_p *= quarter;
    }
    (val - conditional).max(T::zero())
}

/// Pairwise negativities of the three two-qubit marginals, one field per
/// focal ordering used by the three-π residuals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairNegativities<T> {
    pub ab: T,
    pub ac: T,
    pub ba: T,
    pub bc: T,
    pub ca: T,
    pub cb: T,
}

/// The four tripartite measures plus their bipartite ingredients at one
/// parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureReport<T> {
    pub ggm: T,
    pub three_pi: T,
    pub gmc: T,
    pub fill: T,
    /// `C_{A(BC)}, C_{B(AC)}, C_{C(AB)}`
    pub c_one_vs_rest: [T; 3],
    pub negativities: PairNegativities<T>,
}

/// Evaluates every measure on one state.
pub fn measure_report<T: Scalar>(s: &PureState3Q<T>) -> MeasureReport<T> {
    let n_ab = negativity(&pair_marginal(s, QubitLabel::A, QubitLabel::B));
    let n_ac = negativity(&pair_marginal(s, QubitLabel::A, QubitLabel::C));
    let n_bc = negativity(&pair_marginal(s, QubitLabel::B, QubitLabel::C));
    let report = MeasureReport {
        ggm: ggm(s),
        three_pi: three_pi(s).value,
        gmc: gmc_pure(s),
        fill: concurrence_fill(s),
        c_one_vs_rest: [
            concurrence_one_vs_rest(s, QubitLabel::A),
            concurrence_one_vs_rest(s, QubitLabel::B),
            concurrence_one_vs_rest(s, QubitLabel::C),
        ],
        negativities: PairNegativities {
            ab: n_ab,
            ac: n_ac,
            ba: n_ab,
            bc: n_bc,
            ca: n_ac,
            cb: n_bc,
        },
    };
    let tol = T::from_f64(1e-9).unwrap();
    let in_unit = |v: T| v >= -tol && v <= T::one() + tol;
    debug_assert!(
        in_unit(report.ggm)
            && in_unit(report.three_pi)
            && in_unit(report.gmc)
            && in_unit(report.fill)
            && report.c_one_vs_rest.iter().all(|&c| in_unit(c)),
        "measure out of [0, 1]"
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{final_state, initial_state, ScatterParams};
    use num_complex::Complex;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn pure(amp_pairs: &[(usize, f64)]) -> PureState3Q<f64> {
        let mut amps = [Complex::new(0.0, 0.0); 8];
        for &(i, v) in amp_pairs {
            amps[i] = Complex::new(v, 0.0);
        }
        PureState3Q::from_unnormalized(amps)
    }

    fn ghz() -> PureState3Q<f64> {
        pure(&[(0, 1.0), (7, 1.0)])
    }

    fn w_state() -> PureState3Q<f64> {
        pure(&[(1, 1.0), (2, 1.0), (4, 1.0)])
    }

    fn product() -> PureState3Q<f64> {
        pure(&[(5, 1.0)])
    }

    fn bell_pair() -> DensityMatrix<f64> {
        let inv = 0.5f64.sqrt();
        let v = [
            Complex::new(inv, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(inv, 0.0),
        ];
        DensityMatrix::new(ComplexMatrix::outer(&v)).unwrap()
    }

    #[test]
    fn concurrence_one_vs_rest_cases() {
        for q in QubitLabel::ALL {
            assert!((concurrence_one_vs_rest(&ghz(), q) - 1.0).abs() < 1e-12);
            assert!(concurrence_one_vs_rest(&product(), q) < 1e-12);
            // marginal eigenvalues {2/3, 1/3}: C = 2 sqrt(2)/3
            let c = concurrence_one_vs_rest(&w_state(), q);
            assert!((c - 2.0 * 2.0f64.sqrt() / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ggm_cases() {
        assert!((ggm(&ghz()) - 0.5).abs() < 1e-12);
        assert!(ggm(&product()).abs() < 1e-12);
        assert!((ggm(&w_state()) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn negativity_cases() {
        assert!((negativity(&bell_pair()) - 1.0).abs() < 1e-12);
        // separable product state is PPT
        let sep = DensityMatrix::new(ComplexMatrix::from_fn(4, |i, j| {
            if i == j {
                Complex::new([0.28, 0.42, 0.12, 0.18][i], 0.0)
            } else {
                Complex::new(0.0, 0.0)
            }
        }))
        .unwrap();
        assert!(negativity(&sep) < 1e-14);
        // pure state with Schmidt coefficients (sqrt 0.9, sqrt 0.1): N = 2 sqrt(0.09)
        let v = [
            Complex::new(0.9f64.sqrt(), 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.1f64.sqrt(), 0.0),
        ];
        let rho = DensityMatrix::new(ComplexMatrix::outer(&v)).unwrap();
        assert!((negativity(&rho) - 0.6).abs() < 1e-12);
    }

    #[test]
    fn three_pi_cases() {
        let t = three_pi(&ghz());
        for pi_i in [t.pi_a, t.pi_b, t.pi_c, t.value] {
            assert!((pi_i - 1.0).abs() < 1e-12);
        }
        assert!(three_pi(&product()).value.abs() < 1e-12);
        // residuals are non-negative for pure three-qubit states
        let s = final_state(&ScatterParams::new(2.21, 1.42, 0.3, 0.913).unwrap());
        let t = three_pi(&s);
        assert!(t.pi_a > -1e-9 && t.pi_b > -1e-9 && t.pi_c > -1e-9);
    }

    #[test]
    fn gmc_cases() {
        assert!((gmc_pure(&ghz()) - 1.0).abs() < 1e-12);
        assert!((gmc_pure_rooted(&ghz()) - 1.0).abs() < 1e-12);
        // biseparable: entangled AB pair, product C => zero on the C cut
        let bisep = pure(&[(0, 0.6), (6, 0.8)]); // 0.6|RRR> + 0.8|LLR>
        assert!(gmc_pure(&bisep) < 1e-12);
        // squared form = min C_i^2, rooted = min C_i, exactly
        let s = final_state(&ScatterParams::new(1.9, 1.1, 0.0, 0.8).unwrap());
        let min_c = QubitLabel::ALL
            .into_iter()
            .map(|q| concurrence_one_vs_rest(&s, q))
            .fold(f64::INFINITY, f64::min);
        assert!((gmc_pure_rooted(&s) - min_c).abs() < 1e-12);
        assert!((gmc_pure(&s) - min_c * min_c).abs() < 1e-12);
    }

    #[test]
    fn fill_cases() {
        assert!((concurrence_fill(&ghz()) - 1.0).abs() < 1e-12);
        // W state: C^2 = 8/9 each side, F = 8/9
        assert!((concurrence_fill(&w_state()) - 8.0 / 9.0).abs() < 1e-12);
        // degenerate triangle (biseparable) collapses to zero
        let bisep = pure(&[(0, 0.6), (6, 0.8)]);
        assert!(concurrence_fill(&bisep) < 1e-12);
    }

    #[test]
    fn biseparability_kills_every_measure() {
        // one vanishing cut concurrence forces all four measures to zero
        for bisep in [
            pure(&[(0, 0.6), (6, 0.8)]),        // entangled AB, product C
            pure(&[(0, 0.28), (5, 0.96)]),      // entangled AC, product B
            pure(&[(0, 1.0), (3, 2.0)]),        // entangled BC, product A
        ] {
            let r = measure_report(&bisep);
            assert!(r.ggm < 1e-8 && r.three_pi.abs() < 1e-8);
            assert!(r.gmc < 1e-8 && r.fill < 1e-8);
        }
    }

    #[test]
    fn wootters_cases() {
        assert!((wootters_concurrence(&bell_pair()) - 1.0).abs() < 1e-12);
        let mixed = DensityMatrix::new(ComplexMatrix::from_fn(4, |i, j| {
            if i == j {
                Complex::new(0.25, 0.0)
            } else {
                Complex::new(0.0, 0.0)
            }
        }))
        .unwrap();
        assert!(wootters_concurrence(&mixed) < 1e-12);
        // Werner state p·Bell + (1-p) I/4: C = (3p - 1)/2 for p > 1/3
        for (p, want) in [(0.8, 0.7), (1.0, 1.0), (1.0 / 3.0, 0.0)] {
            let bell = bell_pair();
            let werner = DensityMatrix::new(ComplexMatrix::from_fn(4, |i, j| {
                let id = if i == j { 0.25 } else { 0.0 };
                bell[(i, j)] * p + Complex::new((1.0 - p) * id, 0.0)
            }))
            .unwrap();
            assert!((wootters_concurrence(&werner) - want).abs() < 1e-10);
        }
    }

    #[test]
    fn eof_cases() {
        assert!((eof_from_concurrence(1.0f64) - 1.0).abs() < 1e-12);
        assert!(eof_from_concurrence(0.0f64) < 1e-12);
        // H(0.9) by hand
        assert!((eof_from_concurrence(0.6f64) - 0.468_995_593_589_281_2).abs() < 1e-12);
        assert!((eof_one_vs_rest(&ghz(), QubitLabel::A) - 1.0).abs() < 1e-12);
        assert!(eof_one_vs_rest(&product(), QubitLabel::A) < 1e-12);
        // W state: H(2/3)
        assert!(
            (eof_one_vs_rest(&w_state(), QubitLabel::A) - 0.918_295_834_054_489_6).abs() < 1e-12
        );
    }

    #[test]
    fn discord_kw_cases() {
        assert!(matches!(
            discord_kw(&ghz(), QubitLabel::A, QubitLabel::A),
            Err(MeasureError::SameParty)
        ));
        // product state: zero for every pair
        for i in QubitLabel::ALL {
            for k in QubitLabel::ALL {
                if i != k {
                    assert!(discord_kw(&product(), i, k).unwrap() < 1e-12);
                }
            }
        }
        // GHZ measured on B: E_f(rho_AC) - (S(rho_AB) - S(rho_B)) = 0 - (1 - 1) = 0
        assert!(discord_kw(&ghz(), QubitLabel::A, QubitLabel::B).unwrap() < 1e-12);
        // one-vs-rest discord is the marginal entropy
        let s = final_state(&ScatterParams::<f64>::new(1.4, 0.9, 2.0, 1.3).unwrap());
        let d = discord_one_vs_rest(&s, QubitLabel::A);
        let s_a = von_neumann_entropy(&reduced(&s, &[QubitLabel::A]).unwrap());
        assert!((d - s_a).abs() < 1e-14);
    }

    #[test]
    fn discord_brute_cases() {
        // product state
        let sep = DensityMatrix::new(ComplexMatrix::from_fn(4, |i, j| {
            if i == j {
                Complex::new([0.28, 0.42, 0.12, 0.18][i], 0.0)
            } else {
                Complex::new(0.0, 0.0)
            }
        }))
        .unwrap();
        assert!(discord_brute(&sep, 32) < 1e-6);
        // Bell pair has unit discord
        assert!((discord_brute(&bell_pair(), 32) - 1.0).abs() < 1e-4);
        // cross-oracle agreement on a scattering marginal
        let s = final_state(&ScatterParams::new(FRAC_PI_2, FRAC_PI_4, 0.0, 1.0).unwrap());
        let kw = discord_kw(&s, QubitLabel::A, QubitLabel::B).unwrap();
        let brute = discord_brute(
            &reduced(&s, &[QubitLabel::A, QubitLabel::B]).unwrap(),
            32,
        );
        assert!((kw - brute).abs() < 2e-3);
    }

    #[test]
    fn report_fields_consistent() {
        let s = final_state(&ScatterParams::new(2.21, 1.42, 0.0, 0.913).unwrap());
        let r = measure_report(&s);
        assert!((r.gmc - r.c_one_vs_rest.iter().map(|c| c * c).fold(f64::INFINITY, f64::min))
            .abs()
            < 1e-12);
        assert_eq!(r.negativities.ab, r.negativities.ba);
        assert_eq!(r.negativities.ac, r.negativities.ca);
        assert_eq!(r.negativities.bc, r.negativities.cb);
        for v in [r.ggm, r.three_pi, r.gmc, r.fill] {
            assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn gte_vanishes_for_initial_states() {
        // the pre-scattering state is biseparable A|(BC) for every eta
        for eta in [0.0, 0.5, FRAC_PI_4, 1.3] {
            let s = initial_state(&ScatterParams::new(1.0, eta, 0.7, 1.0).unwrap());
            let r = measure_report(&s);
            assert!(r.ggm < 1e-10 && r.three_pi.abs() < 1e-10 && r.gmc < 1e-10 && r.fill < 1e-10);
        }
    }
}
