//! Exact 2×2 complex linear algebra and qubit states.
//!
//! Index 0 is the ground state and index 1 the excited state, so the Bloch
//! vector (0, 0, -1) maps to `diag(0, 1)`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Slack allowed on the Bloch norm, Hermiticity, trace and eigenvalue checks.
pub const STATE_TOLERANCE: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Real 3-vector `(v_x, v_y, v_z)` parameterizing a qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    x: f64,
    y: f64,
    z: f64,
}

impl BlochVector {
    /// Rejects vectors with `|v|² > 1 + 1e-12` or non-finite components.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sq = x * x + y * y + z * z;
        if norm_sq > 1.0 + STATE_TOLERANCE {
            return Err(Error::BlochNorm(norm_sq));
        }
        Ok(Self { x, y, z })
    }

    pub(crate) fn new_unchecked(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn origin() -> Self {
        Self {
            x: 0.0,
            y: 0.0,
            z: 0.0,
        }
    }

    /// The excited state `diag(0, 1)`.
    pub fn excited() -> Self {
        Self {
            x: 0.0,
            y: 0.0,
            z: -1.0,
        }
    }

    pub fn ground() -> Self {
        Self {
            x: 0.0,
            y: 0.0,
            z: 1.0,
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Population of the excited level, `(1 - v_z) / 2`.
    pub fn excited_population(&self) -> f64 {
        0.5 * (1.0 - self.z)
    }
}

/// A general 2×2 complex matrix. Generator outputs live here; they are
/// traceless and Hermitian but not states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Operator2 {
    m: [[Complex64; 2]; 2],
}

impl Operator2 {
    pub const fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        Self {
            m: [[m00, m01], [m10, m11]],
        }
    }

    pub fn from_real(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        Self::new(m00.into(), m01.into(), m10.into(), m11.into())
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn diag(a: f64, b: f64) -> Self {
        Self::from_real(a, 0.0, 0.0, b)
    }

    pub fn pauli_x() -> Self {
        Self::from_real(0.0, 1.0, 1.0, 0.0)
    }

    pub fn pauli_y() -> Self {
        Self::new(
            ZERO,
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            ZERO,
        )
    }

    pub fn pauli_z() -> Self {
        Self::diag(1.0, -1.0)
    }

    /// `|g><e|`, the unit-normalized lowering operator.
    pub fn lowering() -> Self {
        Self::from_real(0.0, 1.0, 0.0, 0.0)
    }

    /// `|e><g|`.
    pub fn raising() -> Self {
        Self::from_real(0.0, 0.0, 1.0, 0.0)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Self::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|z| z * k)
    }

    pub fn is_finite(&self) -> bool {
        self.entries()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other)
            .entries()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let m = &self.m;
        Self::new(f(m[0][0]), f(m[0][1]), f(m[1][0]), f(m[1][1]))
    }

    fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let (a, b) = (&self.m, &other.m);
        Self::new(
            f(a[0][0], b[0][0]),
            f(a[0][1], b[0][1]),
            f(a[1][0], b[1][0]),
            f(a[1][1], b[1][1]),
        )
    }
}

impl Add for Operator2 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl Sub for Operator2 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Mul for Operator2 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.m, &rhs.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl Mul<Complex64> for Operator2 {
    type Output = Self;

    fn mul(self, k: Complex64) -> Self {
        self.map(|z| z * k)
    }
}

/// A validated qubit density matrix: Hermitian, unit trace, positive
/// semidefinite (all within [`STATE_TOLERANCE`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2(Operator2);

impl DensityMatrix2 {
    pub fn new(op: Operator2) -> Result<Self> {
        if !op.is_finite() {
            return Err(Error::NonFinite);
        }
        let herm_dev = op.max_abs_diff(&op.adjoint());
        if herm_dev > STATE_TOLERANCE {
            return Err(Error::NotHermitian(herm_dev));
        }
        let tr = op.trace();
        if (tr.re - 1.0).abs() > STATE_TOLERANCE || tr.im.abs() > STATE_TOLERANCE {
            return Err(Error::InvalidTrace(tr.re));
        }
        let (_, low) = hermitian_eigenvalues(&op);
        if low < -STATE_TOLERANCE {
            return Err(Error::NotPsd(low));
        }
        Ok(Self(op))
    }

    /// Builds the state from its real diagonal and upper off-diagonal entry.
    pub fn from_parts(rho00: f64, rho01: Complex64, rho11: f64) -> Result<Self> {
        Self::new(Operator2::new(
            rho00.into(),
            rho01,
            rho01.conj(),
            rho11.into(),
        ))
    }

    pub fn maximally_mixed() -> Self {
        Self(Operator2::diag(0.5, 0.5))
    }

    pub fn as_operator(&self) -> &Operator2 {
        &self.0
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0.get(row, col)
    }

    /// Eigenvalues in descending order (these are also the singular values).
    pub fn eigenvalues(&self) -> (f64, f64) {
        let (hi, lo) = hermitian_eigenvalues(&self.0);
        (hi, lo.max(0.0))
    }
}

/// Eigenvalues of the Hermitian part of `op`, descending.
fn hermitian_eigenvalues(op: &Operator2) -> (f64, f64) {
    let a = op.get(0, 0).re;
    let d = op.get(1, 1).re;
    let b = 0.5 * (op.get(0, 1) + op.get(1, 0).conj());
    let mean = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    (mean + half_gap, mean - half_gap)
}

/// `(I + v_x σ_x + v_y σ_y + v_z σ_z) / 2`.
pub fn from_bloch(v: BlochVector) -> DensityMatrix2 {
    let off = Complex64::new(0.5 * v.x, -0.5 * v.y);
    DensityMatrix2(Operator2::new(
        (0.5 * (1.0 + v.z)).into(),
        off,
        off.conj(),
        (0.5 * (1.0 - v.z)).into(),
    ))
}

pub fn to_bloch(rho: &DensityMatrix2) -> BlochVector {
    let off = rho.get(0, 1);
    BlochVector {
        x: 2.0 * off.re,
        y: -2.0 * off.im,
        z: rho.get(0, 0).re - rho.get(1, 1).re,
    }
}

/// Real part of `tr(a b)`; exact overlap for Hermitian arguments.
pub fn overlap(a: &DensityMatrix2, b: &DensityMatrix2) -> f64 {
    (a.0 * b.0).trace().re
}

/// `tr ρ²`, in `[1/2, 1]` for a qubit.
pub fn purity(rho: &DensityMatrix2) -> f64 {
    overlap(rho, rho)
}

/// `tr(ρ_now ρ_ref) / tr(ρ_ref²)`.
pub fn relative_purity(reference: &DensityMatrix2, now: &DensityMatrix2) -> f64 {
    overlap(now, reference) / purity(reference)
}

/// `v_x² + v_y²`.
pub fn coherence(v: &BlochVector) -> f64 {
    v.x * v.x + v.y * v.y
}

/// Singular values `(σ₁, σ₂)`, descending, from the closed form
/// `σ² = (T ± √(T² − 4Δ))/2` with `T = tr(M†M)` and `Δ = |det M|²`.
///
/// The radicand is formed as `(α − δ)² + 4|β|²` over the entries of `M†M`,
/// which equals `T² − 4Δ` but cannot go negative, and `σ₂` is recovered as
/// `|det M| / σ₁` to avoid cancellation.
pub fn singular_values(m: &Operator2) -> Result<(f64, f64)> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let [a, b, c, d] = m.entries();
    let alpha = a.norm_sqr() + c.norm_sqr();
    let delta = b.norm_sqr() + d.norm_sqr();
    let beta = a.conj() * b + c.conj() * d;
    let total = alpha + delta;
    let radicand = (alpha - delta) * (alpha - delta) + 4.0 * beta.norm_sqr();
    let s1 = (0.5 * (total + radicand.sqrt())).sqrt();
    if s1 == 0.0 {
        return Ok((0.0, 0.0));
    }
    let s2 = (m.det().norm() / s1).min(s1);
    if !(s1.is_finite() && s2.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok((s1, s2))
}

/// `σ₁ + σ₂`.
pub fn trace_norm(m: &Operator2) -> Result<f64> {
    singular_values(m).map(|(s1, s2)| s1 + s2)
}

/// `√(σ₁² + σ₂²)`.
pub fn hs_norm(m: &Operator2) -> Result<f64> {
    singular_values(m).map(|(s1, s2)| s1.hypot(s2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_op(rng: &mut impl Rng) -> Operator2 {
        let mut z = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        Operator2::new(z(), z(), z(), z())
    }

    // Jacobi rotation on M†M: an independent trigonometric route to the
    // eigenvalues, then square roots.
    fn jacobi_singular_values(m: &Operator2) -> (f64, f64) {
        let h = m.adjoint() * *m;
        let alpha = h.get(0, 0).re;
        let delta = h.get(1, 1).re;
        let beta = h.get(0, 1).norm();
        let theta = 0.5 * (2.0 * beta).atan2(alpha - delta);
        let (s, c) = theta.sin_cos();
        let e1 = alpha * c * c + delta * s * s + 2.0 * beta * s * c;
        let e2 = alpha * s * s + delta * c * c - 2.0 * beta * s * c;
        let (hi, lo) = if e1 >= e2 { (e1, e2) } else { (e2, e1) };
        (hi.max(0.0).sqrt(), lo.max(0.0).sqrt())
    }

    #[test]
    fn from_bloch_examples() {
        let mixed = from_bloch(BlochVector::origin());
        assert_eq!(mixed, DensityMatrix2::maximally_mixed());

        let excited = from_bloch(BlochVector::excited());
        assert_eq!(*excited.as_operator(), Operator2::diag(0.0, 1.0));

        let plus = from_bloch(BlochVector::new(1.0, 0.0, 0.0).unwrap());
        assert_eq!(plus.get(0, 1), Complex64::new(0.5, 0.0));
        assert_eq!(plus.get(1, 0), Complex64::new(0.5, 0.0));
    }

    #[test]
    fn bloch_norm_is_validated() {
        assert!(BlochVector::new(1.0, 0.0, 1e-5).is_err());
        assert!(BlochVector::new(0.6, 0.8, 0.0).is_ok());
        assert!(BlochVector::new(1.0 + 4e-13, 0.0, 0.0).is_ok());
        assert!(matches!(
            BlochVector::new(f64::NAN, 0.0, 0.0),
            Err(Error::NonFinite)
        ));
    }

    #[test]
    fn density_matrix_validation() {
        assert!(matches!(
            DensityMatrix2::new(Operator2::diag(0.7, 0.7)),
            Err(Error::InvalidTrace(_))
        ));
        assert!(matches!(
            DensityMatrix2::new(Operator2::diag(1.2, -0.2)),
            Err(Error::NotPsd(_))
        ));
        assert!(matches!(
            DensityMatrix2::new(Operator2::from_real(0.5, 0.1, 0.2, 0.5)),
            Err(Error::NotHermitian(_))
        ));
        assert!(DensityMatrix2::new(Operator2::diag(1.0, 0.0)).is_ok());
    }

    #[test]
    fn to_bloch_examples() {
        let ground = DensityMatrix2::new(Operator2::diag(1.0, 0.0)).unwrap();
        assert_eq!(to_bloch(&ground), BlochVector::ground());
        assert_eq!(
            to_bloch(&DensityMatrix2::maximally_mixed()),
            BlochVector::origin()
        );
    }

    #[test]
    fn purity_examples() {
        assert_eq!(purity(&DensityMatrix2::maximally_mixed()), 0.5);
        let pure = from_bloch(BlochVector::new(0.0, 0.6, 0.8).unwrap());
        assert!((purity(&pure) - 1.0).abs() < 1e-15);
        let r06 = from_bloch(BlochVector::new(0.0, 0.6, 0.0).unwrap());
        // direct 2×2 trace: 2·(1/2)² + 2·|0.3|² = 0.68
        assert!((purity(&r06) - 0.68).abs() < 1e-15);
    }

    #[test]
    fn relative_purity_examples() {
        let rho = from_bloch(BlochVector::new(0.3, -0.2, 0.4).unwrap());
        assert!((relative_purity(&rho, &rho) - 1.0).abs() < 1e-15);
        let g = from_bloch(BlochVector::ground());
        let e = from_bloch(BlochVector::excited());
        assert_eq!(relative_purity(&g, &e), 0.0);
        let mixed = DensityMatrix2::maximally_mixed();
        assert!((relative_purity(&mixed, &rho) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn coherence_examples() {
        assert_eq!(coherence(&BlochVector::excited()), 0.0);
        assert_eq!(coherence(&BlochVector::new(1.0, 0.0, 0.0).unwrap()), 1.0);
        let v = BlochVector::new(0.6, 0.8, 0.0).unwrap();
        assert!((coherence(&v) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn singular_value_examples() {
        assert_eq!(singular_values(&Operator2::identity()).unwrap(), (1.0, 1.0));
        let (s1, s2) = singular_values(&Operator2::diag(3.0, -4.0)).unwrap();
        assert!((s1 - 4.0).abs() < 1e-14 && (s2 - 3.0).abs() < 1e-14);
        let bad = Operator2::from_real(f64::INFINITY, 0.0, 0.0, 1.0);
        assert_eq!(singular_values(&bad), Err(Error::NonFinite));
        assert_eq!(singular_values(&Operator2::zero()).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn singular_values_match_jacobi_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_op(&mut rng);
            let (s1, s2) = singular_values(&m).unwrap();
            let (o1, o2) = jacobi_singular_values(&m);
            assert!((s1 - o1).abs() < 1e-10, "{s1} vs {o1}");
            assert!((s2 - o2).abs() < 1e-10, "{s2} vs {o2}");
        }
    }

    #[test]
    fn norm_examples() {
        let id = Operator2::identity();
        assert_eq!(trace_norm(&id).unwrap(), 2.0);
        assert!((hs_norm(&id).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        let proj = Operator2::diag(1.0, 0.0);
        assert_eq!(trace_norm(&proj).unwrap(), 1.0);
        assert_eq!(hs_norm(&proj).unwrap(), 1.0);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let m = random_op(&mut rng);
            let direct = (m.adjoint() * m).trace().re;
            let hs = hs_norm(&m).unwrap();
            assert!((hs * hs - direct).abs() < 1e-12);
            let tn = trace_norm(&m).unwrap();
            assert!(hs <= tn + 1e-12 && tn <= 2f64.sqrt() * hs + 1e-12);
        }
    }

    #[test]
    fn equal_singular_values_stay_equal() {
        // traceless Hermitian: both singular values are |eigenvalue|
        let c = Complex64::new(0.3, -0.1);
        let m = Operator2::new((-0.2).into(), c, c.conj(), 0.2.into());
        let (s1, s2) = singular_values(&m).unwrap();
        assert!((s1 - s2).abs() <= 1e-15);
    }
}
