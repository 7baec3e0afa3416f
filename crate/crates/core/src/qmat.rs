//! Dense complex-matrix kernel for dimensions 2, 4 and 8.
//!
//! Self-contained: Hermitian eigenvalues via cyclic complex Jacobi rotations,
//! partial trace, partial transpose, PSD square root and von Neumann entropy.
//! Dimensions never exceed 8, so robustness and determinism win over
//! asymptotics everywhere.

use num_complex::Complex;
use thiserror::Error;

use crate::scalar::Scalar;

/// Qubit labels of the three-particle system: `A` the outgoing electron spin,
/// `B` the outgoing positron spin, `C` the spectator spin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QubitLabel {
    A,
    B,
    C,
}

impl QubitLabel {
    pub const ALL: [QubitLabel; 3] = [QubitLabel::A, QubitLabel::B, QubitLabel::C];

    /// Weight of this qubit in the global basis index `4a + 2b + c`.
    pub fn index_weight(self) -> usize {
        match self {
            QubitLabel::A => 4,
            QubitLabel::B => 2,
            QubitLabel::C => 1,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QmatError<T: Scalar> {
    #[error("matrix is not Hermitian: max |M - M†| entry = {0:e}")]
    NotHermitian(T),
    #[error("matrix is not PSD: eigenvalue {0:e} below tolerance")]
    NotPsd(T),
    #[error("matrix is not a density matrix: trace deviates from one by {0:e}")]
    NotUnitTrace(T),
    #[error("traced subsystems must be a nonempty proper subset of {{A, B, C}}")]
    BadSubsystem,
}

/// Which factor of a two-qubit matrix a partial transpose acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Party {
    First,
    Second,
}

/// Dense square complex matrix, row-major, dimension 2, 4 or 8.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        assert!(
            dim == 2 || dim == 4 || dim == 8,
            "supported dimensions are 2, 4 and 8 (got {dim})"
        );
        ComplexMatrix {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Rank-1 outer product `v v†`.
    pub fn outer(v: &[Complex<T>]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).map(|i| self[(i, i)]).fold(
            Complex::new(T::zero(), T::zero()),
            |acc, z| acc + z,
        )
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = self[(i, j)] - self[(j, i)].conj();
                worst = worst.max(d.norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Sum of squared entry magnitudes (`Tr M†M` for Hermitian input).
    pub fn frobenius_sq(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl<T> std::ops::Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

/// Hermitian, PSD, unit-trace refinement of [`ComplexMatrix`].
///
/// Validated on construction: Hermiticity within `TOL_HERMITIAN`, trace within
/// `TOL_TRACE` of one, eigenvalues no lower than `-TOL_PSD`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    mat: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    pub fn new(mat: ComplexMatrix<T>) -> Result<Self, QmatError<T>> {
        let herm = mat.hermiticity_defect();
        if herm > T::TOL_HERMITIAN {
            return Err(QmatError::NotHermitian(herm));
        }
        let tr = mat.trace();
        let tr_defect = (tr.re - T::one()).abs().max(tr.im.abs());
        if tr_defect > T::TOL_TRACE {
            return Err(QmatError::NotUnitTrace(tr_defect));
        }
        let eig = hermitian_eigenvalues(&mat)?;
        let min = eig[eig.len() - 1];
        if min < -T::TOL_PSD {
            return Err(QmatError::NotPsd(min));
        }
        Ok(DensityMatrix { mat })
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim
    }

    /// Eigenvalues, descending. Input is Hermitian by construction.
    pub fn eigenvalues(&self) -> Vec<T> {
        hermitian_eigenvalues(&self.mat).expect("validated Hermitian")
    }

    /// `Tr ρ²`, a purity in `(0, 1]`.
    pub fn purity(&self) -> T {
        self.mat.frobenius_sq()
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for DensityMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, ij: (usize, usize)) -> &Complex<T> {
        &self.mat[ij]
    }
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues<T: Scalar>(m: &ComplexMatrix<T>) -> Result<Vec<T>, QmatError<T>> {
    let (vals, _) = hermitian_eigh(m)?;
    Ok(vals)
}

/// Full Hermitian eigendecomposition `M = V Λ V†` by cyclic complex Jacobi
/// rotations. Returns eigenvalues descending with matching eigenvector
/// columns. Deterministic; converges quadratically for these dimensions.
pub fn hermitian_eigh<T: Scalar>(
    m: &ComplexMatrix<T>,
) -> Result<(Vec<T>, ComplexMatrix<T>), QmatError<T>> {
    let defect = m.hermiticity_defect();
    if defect > T::TOL_EIG_HERMITIAN {
        return Err(QmatError::NotHermitian(defect));
    }
    let n = m.dim;
    // Work on the exactly-Hermitian average so the sub-tolerance asymmetry of
    // derived inputs cannot bias the rotations.
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        let half = T::from_f64(0.5).unwrap();
        let s = m[(i, j)] + m[(j, i)].conj();
        Complex::new(s.re * half, s.im * half)
    });
    let mut v = ComplexMatrix::identity(n);

    let frob = a.frobenius_sq().sqrt();
    let stop = (T::epsilon() * frob).max(T::min_positive_value());
    const MAX_SWEEPS: usize = 64;

    for _ in 0..MAX_SWEEPS {
        let mut off_sq = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq += a[(p, q)].norm_sqr();
            }
        }
        if off_sq.sqrt() <= stop {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let z = a[(p, q)];
                let r = z.norm();
                if r <= stop * T::from_f64(1e-3).unwrap() {
                    continue;
                }
                // Unitary plane rotation W zeroing a[p][q]:
                //   W[p][p] = c, W[p][q] = s, W[q][p] = -ū s, W[q][q] = ū c
                // with u = z/|z| and the stable tangent root of
                // t² + 2τt − 1 = 0, τ = (a_qq − a_pp) / (2|z|).
                let u = z / r;
                let tau = (a[(q, q)].re - a[(p, p)].re) / (r + r);
                let t = {
                    let tt = T::one() / (tau.abs() + (T::one() + tau * tau).sqrt());
                    if tau < T::zero() {
                        -tt
                    } else {
                        tt
                    }
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let ubar = u.conj();

                // columns p, q of both A and V
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * (ubar * s);
                    a[(k, q)] = akp * s + akq * (ubar * c);
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * (ubar * s);
                    v[(k, q)] = vkp * s + vkq * (ubar * c);
                }
                // rows p, q of A (left-multiply by W†)
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * (u * s);
                    a[(q, k)] = apk * s + aqk * (u * c);
                }
                a[(p, q)] = Complex::new(T::zero(), T::zero());
                a[(q, p)] = Complex::new(T::zero(), T::zero());
                a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
                a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .re
            .partial_cmp(&a[(i, i)].re)
            .expect("eigenvalues are finite")
    });
    let vals = order.iter().map(|&i| a[(i, i)].re).collect();
    let vecs = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok((vals, vecs))
}

/// Trace out `traced` qubits of a three-qubit density matrix.
///
/// The kept qubits retain their A < B < C ordering in the result.
pub fn partial_trace<T: Scalar>(
    rho: &DensityMatrix<T>,
    traced: &[QubitLabel],
) -> Result<DensityMatrix<T>, QmatError<T>> {
    assert_eq!(rho.dim(), 8, "partial_trace expects the three-qubit matrix");
    let mut is_traced = [false; 3];
    for &q in traced {
        is_traced[match q {
            QubitLabel::A => 0,
            QubitLabel::B => 1,
            QubitLabel::C => 2,
        }] = true;
    }
    let n_traced = is_traced.iter().filter(|&&t| t).count();
    if traced.is_empty() || n_traced == 3 {
        return Err(QmatError::BadSubsystem);
    }

    let kept: Vec<usize> = (0..3).filter(|&q| !is_traced[q]).collect();
    let traced_pos: Vec<usize> = (0..3).filter(|&q| is_traced[q]).collect();
    let weight = |q: usize| 4usize >> q;

    let kdim = 1 << kept.len();
    let tdim = 1 << traced_pos.len();
    let mut out = ComplexMatrix::zeros(kdim);
    for i in 0..kdim {
        for j in 0..kdim {
            let mut acc = Complex::new(T::zero(), T::zero());
            for t in 0..tdim {
                let mut row = 0;
                let mut col = 0;
                for (bit, &q) in kept.iter().enumerate() {
                    let w = weight(q);
                    row += w * ((i >> (kept.len() - 1 - bit)) & 1);
                    col += w * ((j >> (kept.len() - 1 - bit)) & 1);
                }
                for (bit, &q) in traced_pos.iter().enumerate() {
                    let w = weight(q) * ((t >> (traced_pos.len() - 1 - bit)) & 1);
                    row += w;
                    col += w;
                }
                acc += rho[(row, col)];
            }
            out[(i, j)] = acc;
        }
    }
    DensityMatrix::new(out)
}

/// Partial transpose of a two-qubit density matrix over one party.
///
/// The result is Hermitian and unit-trace but in general not PSD, so it is
/// returned as a plain [`ComplexMatrix`].
pub fn partial_transpose<T: Scalar>(rho: &DensityMatrix<T>, party: Party) -> ComplexMatrix<T> {
    assert_eq!(rho.dim(), 4, "partial_transpose expects a two-qubit matrix");
    transpose_party(rho.matrix(), party)
}

fn transpose_party<T: Scalar>(m: &ComplexMatrix<T>, party: Party) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(4, |i, j| {
        let (i1, i2) = (i >> 1, i & 1);
        let (j1, j2) = (j >> 1, j & 1);
        match party {
            Party::First => m[((j1 << 1) | i2, (i1 << 1) | j2)],
            Party::Second => m[((i1 << 1) | j2, (j1 << 1) | i2)],
        }
    })
}

/// Hermitian square root of a PSD Hermitian matrix.
///
/// Eigenvalues below `-TOL_NOT_PSD` are a genuine PSD violation and fail;
/// eigenvalues inside `(-TOL_NOT_PSD, EIG_CLAMP)` are round-off around an
/// exact zero and are clamped before the root (the square root would
/// otherwise amplify `ε`-size noise to `√ε`).
pub fn psd_sqrt<T: Scalar>(m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>, QmatError<T>> {
    let (vals, vecs) = hermitian_eigh(m)?;
    if vals[vals.len() - 1] < -T::TOL_NOT_PSD {
        return Err(QmatError::NotPsd(vals[vals.len() - 1]));
    }
    let n = m.dim;
    let roots: Vec<T> = vals
        .iter()
        .map(|&l| if l < T::EIG_CLAMP { T::zero() } else { l.sqrt() })
        .collect();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for (k, &r) in roots.iter().enumerate() {
                acc += vecs[(i, k)] * vecs[(j, k)].conj() * r;
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Von Neumann entropy in bits, with the `0·log 0 = 0` convention.
///
/// Eigenvalues below `EIG_CLAMP` (including round-off negatives) contribute
/// nothing; the result is clamped into `[0, log2 dim]`.
pub fn von_neumann_entropy<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    let mut s = T::zero();
    for l in rho.eigenvalues() {
        if l > T::EIG_CLAMP {
            s -= l * l.log2();
        }
    }
    s.max(T::zero())
}
