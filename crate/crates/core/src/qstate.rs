//! Minimal complex linear algebra for qubit states: 2x2 and 4x4 Hermitian
//! matrices, Pauli conjugation, Bloch vectors, eigenvalues and entropy.
//!
//! Everything here is fixed-size and allocation-free; the whole problem
//! domain lives in 2x2 (one qubit) and 4x4 (two qubits).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for Hermiticity and unit-trace checks.
pub const MATRIX_TOL: f64 = 1e-12;
/// Eigenvalues above this (negative) floor still count as non-negative.
pub const PSD_TOL: f64 = -1e-12;
/// Eigenvalues in [-ENTROPY_CLAMP, 0] are clamped to 0 before taking logs.
pub const ENTROPY_CLAMP: f64 = 1e-9;
/// Purity |Tr(rho^2) - 1| below this counts as a pure (rank-1) state.
pub const PURITY_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

type Mat2 = [[Complex64; 2]; 2];
type Mat4 = [[Complex64; 4]; 4];

// ---------------------------------------------------------------------------
// Pauli operators
// ---------------------------------------------------------------------------

/// One of the four Pauli operators, with `I` denoting the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliAxis {
    I,
    X,
    Y,
    Z,
}

impl PauliAxis {
    /// All four axes in the fixed order (I, X, Y, Z).
    pub const ALL: [PauliAxis; 4] = [PauliAxis::I, PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    /// The 2x2 matrix of this Pauli operator.
    pub fn matrix(self) -> Mat2 {
        match self {
            PauliAxis::I => [[ONE, ZERO], [ZERO, ONE]],
            PauliAxis::X => [[ZERO, ONE], [ONE, ZERO]],
            PauliAxis::Y => [
                [ZERO, Complex64::new(0.0, -1.0)],
                [Complex64::new(0.0, 1.0), ZERO],
            ],
            PauliAxis::Z => [[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]],
        }
    }
}

// ---------------------------------------------------------------------------
// Bloch vectors
// ---------------------------------------------------------------------------

/// Real three-vector (n_x, n_y, n_z) of Pauli expectation values.
///
/// For a valid density matrix the norm is at most 1; pure states sit on the
/// unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    /// Euclidean norm of the vector.
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

// ---------------------------------------------------------------------------
// Single-qubit density matrices
// ---------------------------------------------------------------------------

/// A 2x2 complex Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    entries: Mat2,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity before wrapping.
    pub fn new(entries: Mat2) -> Result<Self> {
        let asymmetry = hermiticity_defect2(&entries);
        if asymmetry > MATRIX_TOL {
            return Err(Error::NotHermitian { asymmetry });
        }
        let trace = (entries[0][0] + entries[1][1]).re;
        if (trace - 1.0).abs() > MATRIX_TOL {
            return Err(Error::NotUnitTrace { trace });
        }
        // Hermitian 2x2 eigenvalues in closed form: t/2 +- sqrt((t/2)^2 - det).
        let det = (entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]).re;
        let half = trace / 2.0;
        let disc = (half * half - det).max(0.0).sqrt();
        let min_eigenvalue = half - disc;
        if min_eigenvalue < PSD_TOL {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self { entries })
    }

    /// Construction path for internal operations that preserve validity.
    fn from_entries_unchecked(entries: Mat2) -> Self {
        Self { entries }
    }

    /// Raw matrix entries in the (|0>, |1>) basis.
    pub fn entries(&self) -> &Mat2 {
        &self.entries
    }

    /// The |0><0| projector.
    pub fn ket_zero() -> Self {
        Self::from_entries_unchecked([[ONE, ZERO], [ZERO, ZERO]])
    }

    /// The |1><1| projector.
    pub fn ket_one() -> Self {
        Self::from_entries_unchecked([[ZERO, ZERO], [ZERO, ONE]])
    }

    /// The maximally mixed state 1/2.
    pub fn maximally_mixed() -> Self {
        let h = Complex64::new(0.5, 0.0);
        Self::from_entries_unchecked([[h, ZERO], [ZERO, h]])
    }

    /// Builds rho = (1 + n.sigma)/2 from a Bloch vector with norm <= 1.
    pub fn from_bloch(n: BlochVector) -> Result<Self> {
        let norm = n.norm();
        if norm > 1.0 + MATRIX_TOL {
            return Err(Error::OutOfRange {
                name: "bloch norm",
                value: norm,
                min: 0.0,
                max: 1.0,
            });
        }
        Ok(Self::from_entries_unchecked([
            [
                Complex64::new((1.0 + n.z) / 2.0, 0.0),
                Complex64::new(n.x / 2.0, -n.y / 2.0),
            ],
            [
                Complex64::new(n.x / 2.0, n.y / 2.0),
                Complex64::new((1.0 - n.z) / 2.0, 0.0),
            ],
        ]))
    }

    /// Pauli expectation values n_k = Tr(rho sigma_k).
    pub fn bloch_vector(&self) -> BlochVector {
        let e = &self.entries;
        BlochVector {
            x: (e[0][1] + e[1][0]).re,
            y: -(e[0][1] - e[1][0]).im,
            z: (e[0][0] - e[1][1]).re,
        }
    }

    /// Conjugation sigma rho sigma by the given Pauli operator.
    ///
    /// On the Bloch sphere: X negates (n_y, n_z), Y negates (n_x, n_z),
    /// Z negates (n_x, n_y), I is the identity.
    pub fn pauli_conjugate(&self, axis: PauliAxis) -> Self {
        let sigma = axis.matrix();
        let product = mat2_mul(&sigma, &mat2_mul(&self.entries, &sigma));
        Self::from_entries_unchecked(product)
    }

    /// Purity Tr(rho^2); equals 1 exactly for pure states.
    pub fn purity(&self) -> f64 {
        let e = &self.entries;
        let mut sum = 0.0;
        for row in e {
            for v in row {
                sum += v.norm_sqr();
            }
        }
        sum
    }

    /// Whether this state is rank-1 within [`PURITY_TOL`].
    pub fn is_pure(&self) -> bool {
        (self.purity() - 1.0).abs() <= PURITY_TOL
    }
}

/// Pure state rho = (1 + n.sigma)/2 for the Bloch direction
/// n = (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)).
pub fn pure_state(theta: f64, phi: f64) -> Result<DensityMatrix> {
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::OutOfRange {
            name: "theta",
            value: theta,
            min: 0.0,
            max: std::f64::consts::PI,
        });
    }
    if !(0.0..std::f64::consts::TAU).contains(&phi) {
        return Err(Error::OutOfRange {
            name: "phi",
            value: phi,
            min: 0.0,
            max: std::f64::consts::TAU,
        });
    }
    let n = BlochVector {
        x: theta.sin() * phi.cos(),
        y: theta.sin() * phi.sin(),
        z: theta.cos(),
    };
    DensityMatrix::from_bloch(n)
}

/// Overlap score Tr(rho sigma) between two states, at least one of them pure.
///
/// For pure sigma = |phi><phi| this is the usual teleportation score
/// <phi| rho |phi>. Returns the real part clamped to [0, 1]; fails if
/// neither argument is rank-1 (the score form is only meaningful then).
pub fn trace_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if !rho.is_pure() && !sigma.is_pure() {
        return Err(Error::NotPure);
    }
    let product = mat2_mul(rho.entries(), sigma.entries());
    let tr = product[0][0] + product[1][1];
    debug_assert!(tr.im.abs() < 1e-12);
    Ok(tr.re.clamp(0.0, 1.0))
}

// ---------------------------------------------------------------------------
// Two-qubit matrices
// ---------------------------------------------------------------------------

/// A 4x4 complex Hermitian, unit-trace, positive-semidefinite matrix,
/// in the fixed product basis |00>, |01>, |10>, |11>.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitMatrix {
    entries: Mat4,
}

impl TwoQubitMatrix {
    /// Validates Hermiticity, unit trace and positivity before wrapping.
    pub fn new(entries: Mat4) -> Result<Self> {
        let asymmetry = hermiticity_defect4(&entries);
        if asymmetry > MATRIX_TOL {
            return Err(Error::NotHermitian { asymmetry });
        }
        let trace = mat4_trace(&entries).re;
        if (trace - 1.0).abs() > MATRIX_TOL {
            return Err(Error::NotUnitTrace { trace });
        }
        let eigenvalues = jacobi_eigenvalues(&entries);
        let min_eigenvalue = eigenvalues[3];
        if min_eigenvalue < PSD_TOL {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self { entries })
    }

    fn from_entries_unchecked(entries: Mat4) -> Self {
        Self { entries }
    }

    /// Raw matrix entries in the |00>, |01>, |10>, |11> basis.
    pub fn entries(&self) -> &Mat4 {
        &self.entries
    }

    /// The maximally mixed two-qubit state 1/4.
    pub fn maximally_mixed() -> Self {
        let q = Complex64::new(0.25, 0.0);
        let mut entries = [[ZERO; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = q;
        }
        Self::from_entries_unchecked(entries)
    }

    /// Eigenvalues sorted in descending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        jacobi_eigenvalues(&self.entries)
    }

    /// Real overlap Tr(self . other); both arguments are Hermitian.
    pub fn overlap(&self, other: &Self) -> f64 {
        let mut tr = ZERO;
        for i in 0..4 {
            for k in 0..4 {
                tr += self.entries[i][k] * other.entries[k][i];
            }
        }
        debug_assert!(tr.im.abs() < 1e-10);
        tr.re
    }
}

/// Eigenvalues (descending) of a 4x4 Hermitian matrix given as raw entries.
///
/// Rejects matrices whose Hermiticity defect exceeds [`MATRIX_TOL`].
pub fn hermitian_eigenvalues(entries: &Mat4) -> Result<[f64; 4]> {
    let asymmetry = hermiticity_defect4(entries);
    if asymmetry > MATRIX_TOL {
        return Err(Error::NotHermitian { asymmetry });
    }
    Ok(jacobi_eigenvalues(entries))
}

/// Von Neumann entropy S = -sum_i lambda_i log2(lambda_i), in bits.
///
/// Uses the 0 log 0 = 0 convention; eigenvalues in [-1e-9, 0] are treated
/// as numerical noise and clamped to zero, anything more negative is an
/// error. The result lies in [0, 2].
pub fn von_neumann_entropy(m: &TwoQubitMatrix) -> Result<f64> {
    let mut entropy = 0.0;
    for lambda in m.eigenvalues() {
        if lambda < -ENTROPY_CLAMP {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: lambda,
            });
        }
        let p = lambda.max(0.0);
        if p > 0.0 {
            entropy -= p * p.log2();
        }
    }
    Ok(entropy.clamp(0.0, 2.0))
}

/// Bell projector for the fixed ordering (psi-, psi+, phi-, phi+):
/// psi-+ = (|01> -+ |10>)/sqrt(2), phi-+ = (|00> -+ |11>)/sqrt(2).
///
/// The four projectors are mutually orthogonal and sum to the identity.
pub fn bell_state(which: usize) -> Result<TwoQubitMatrix> {
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    let amp = Complex64::new(inv, 0.0);
    let neg = Complex64::new(-inv, 0.0);
    let vector: [Complex64; 4] = match which {
        0 => [ZERO, amp, neg, ZERO],
        1 => [ZERO, amp, amp, ZERO],
        2 => [amp, ZERO, ZERO, neg],
        3 => [amp, ZERO, ZERO, amp],
        _ => return Err(Error::BellIndexOutOfRange { index: which }),
    };
    let mut entries = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            entries[i][j] = vector[i] * vector[j].conj();
        }
    }
    Ok(TwoQubitMatrix::from_entries_unchecked(entries))
}

/// Werner state alpha |psi-><psi-| + (1 - alpha) 1/4, with alpha in [0, 1].
///
/// Eigenvalues are (1 + 3 alpha)/4 and (1 - alpha)/4 (threefold).
pub fn werner_state(alpha: f64) -> Result<TwoQubitMatrix> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            min: 0.0,
            max: 1.0,
        });
    }
    let singlet = bell_state(0)?;
    let mut entries = *singlet.entries();
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v *= alpha;
            if i == j {
                *v += Complex64::new((1.0 - alpha) / 4.0, 0.0);
            }
        }
    }
    Ok(TwoQubitMatrix::from_entries_unchecked(entries))
}

/// Product state a (x) b of two single-qubit states.
pub fn tensor_product(a: &DensityMatrix, b: &DensityMatrix) -> TwoQubitMatrix {
    TwoQubitMatrix::from_entries_unchecked(kron2(a.entries(), b.entries()))
}

/// Conjugation (sigma (x) 1) m (sigma (x) 1) acting on the first qubit only.
///
/// This is the dense-coding encoding operation; it maps the singlet
/// projector onto the other Bell projectors.
pub fn conjugate_first_qubit(m: &TwoQubitMatrix, axis: PauliAxis) -> TwoQubitMatrix {
    let op = kron2(&axis.matrix(), &PauliAxis::I.matrix());
    let product = mat4_mul(&op, &mat4_mul(m.entries(), &op));
    TwoQubitMatrix::from_entries_unchecked(product)
}

// ---------------------------------------------------------------------------
// Fixed-size matrix arithmetic
// ---------------------------------------------------------------------------

fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub(crate) fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = ZERO;
            for k in 0..4 {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub(crate) fn mat4_trace(m: &Mat4) -> Complex64 {
    m[0][0] + m[1][1] + m[2][2] + m[3][3]
}

fn kron2(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn hermiticity_defect2(m: &Mat2) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            worst = worst.max((m[i][j] - m[j][i].conj()).norm());
        }
    }
    worst
}

fn hermiticity_defect4(m: &Mat4) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((m[i][j] - m[j][i].conj()).norm());
        }
    }
    worst
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver for 4x4 complex Hermitian matrices
// ---------------------------------------------------------------------------

const JACOBI_OFFDIAG_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a complex Hermitian 4x4 matrix by cyclic Jacobi rotations,
/// sorted in descending order.
///
/// Each sweep visits every upper-triangular pivot (p, q) and annihilates it
/// with the complex rotation J: J[p][p] = c, J[p][q] = s e^{i phi},
/// J[q][p] = -s e^{-i phi}, J[q][q] = c, where e^{i phi} is the phase of
/// the pivot entry. Sweeps continue until the off-diagonal Frobenius norm
/// drops below 1e-12; a 4x4 matrix converges in a handful of sweeps.
fn jacobi_eigenvalues(entries: &Mat4) -> [f64; 4] {
    let mut w = *entries;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&w) < JACOBI_OFFDIAG_TOL {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate_pivot(&mut w, p, q);
            }
        }
    }
    let mut eigenvalues = [w[0][0].re, w[1][1].re, w[2][2].re, w[3][3].re];
    eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    eigenvalues
}

fn off_diagonal_norm(m: &Mat4) -> f64 {
    let mut sum = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                sum += m[i][j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn rotate_pivot(w: &mut Mat4, p: usize, q: usize) {
    let pivot = w[p][q];
    let r = pivot.norm();
    if r == 0.0 {
        return;
    }
    let phase = pivot / r;
    let tau = (w[q][q].re - w[p][p].re) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Column update W <- W J.
    for k in 0..4 {
        let wkp = w[k][p];
        let wkq = w[k][q];
        w[k][p] = c * wkp - s * phase.conj() * wkq;
        w[k][q] = s * phase * wkp + c * wkq;
    }
    // Row update W <- J^dagger W.
    for k in 0..4 {
        let wpk = w[p][k];
        let wqk = w[q][k];
        w[p][k] = c * wpk - s * phase * wqk;
        w[q][k] = s * phase.conj() * wpk + c * wqk;
    }
    // The pivot is annihilated up to rounding; pin it to keep sweeps clean.
    w[p][q] = ZERO;
    w[q][p] = ZERO;
}
