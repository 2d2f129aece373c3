//! Dense complex matrix kernel: Hermitian eigendecomposition based square
//! roots and logarithms, the matrix exponential, polar projection onto
//! `SU(n) * SH(n)`, and seeded sampling of group and loop elements.
//!
//! Everything here works on small matrices (n <= 8). Accuracy and
//! determinism are preferred over speed throughout: square roots and
//! logarithms of Hermitian positive definite matrices go through a full
//! eigendecomposition, never through an iteration whose convergence depends
//! on conditioning.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Error;
use crate::Result;

/// Dense square complex matrix used as the substrate for all group and loop
/// elements.
pub type CMat = DMatrix<Complex64>;

/// Numerical tolerances used by invariant checks.
///
/// `sym` bounds the Hermitian/unitary symmetry defect, `det` the departure of
/// the determinant from one, `mat` general matrix identities and `alg` exact
/// structure-constant contractions.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub sym: f64,
    pub det: f64,
    pub mat: f64,
    pub alg: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            sym: 1e-10,
            det: 1e-10,
            mat: 1e-10,
            alg: 1e-12,
        }
    }
}

impl Tolerances {
    pub fn with_mat(tol: f64) -> Self {
        Tolerances {
            sym: tol,
            det: tol,
            mat: tol,
            ..Tolerances::default()
        }
    }
}

/// Frobenius norm of a complex matrix.
pub fn fro_norm(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Frobenius distance between two matrices.
pub fn fro_dist(a: &CMat, b: &CMat) -> f64 {
    fro_norm(&(a - b))
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn adjoint(m: &CMat) -> CMat {
    m.adjoint()
}

fn is_finite(m: &CMat) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

fn hermitian_defect(m: &CMat) -> f64 {
    fro_dist(m, &m.adjoint())
}

fn unitary_defect(m: &CMat) -> f64 {
    fro_dist(&(m.adjoint() * m), &identity(m.nrows()))
}

fn det_defect(m: &CMat) -> f64 {
    (m.determinant() - Complex64::new(1.0, 0.0)).norm()
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues and a unitary
/// matrix of eigenvectors.
fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let eig = m.clone().symmetric_eigen();
    let vals = eig.eigenvalues.iter().copied().collect();
    (vals, eig.eigenvectors)
}

/// Rebuild `V f(D) V^*` from an eigendecomposition.
fn hermitian_function(m: &CMat, f: impl Fn(f64) -> f64) -> CMat {
    let (vals, vecs) = hermitian_eigen(m);
    let n = m.nrows();
    let mut diag = CMat::zeros(n, n);
    for (i, v) in vals.iter().enumerate() {
        diag[(i, i)] = Complex64::new(f(*v), 0.0);
    }
    &vecs * diag * vecs.adjoint()
}

fn min_eigenvalue(m: &CMat) -> f64 {
    let (vals, _) = hermitian_eigen(m);
    vals.into_iter().fold(f64::INFINITY, f64::min)
}

/// Hermitian positive definite matrix, the element type of the loop `SH(n)`.
///
/// Construction validates Hermitian symmetry and positivity; loop elements
/// additionally carry determinant one, checked by [`HermitianPd::new_unimodular`].
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianPd {
    m: CMat,
}

impl HermitianPd {
    /// Validating constructor. Rejects non-finite or non-Hermitian input and
    /// matrices with an eigenvalue at or below zero.
    pub fn new(m: CMat, tol: &Tolerances) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::invalid("matrix must be square and non-empty"));
        }
        if !is_finite(&m) {
            return Err(Error::invalid("matrix has non-finite entries"));
        }
        let sym = hermitian_defect(&m);
        if sym > tol.sym {
            return Err(Error::invalid(format!(
                "matrix is not Hermitian (defect {sym:e})"
            )));
        }
        let min_eig = min_eigenvalue(&m);
        if min_eig <= 0.0 {
            return Err(Error::NotPositiveDefinite { min_eig });
        }
        Ok(HermitianPd { m })
    }

    /// Validating constructor that additionally requires `det = 1`.
    pub fn new_unimodular(m: CMat, tol: &Tolerances) -> Result<Self> {
        let d = det_defect(&m);
        if d > tol.det {
            return Err(Error::invalid(format!(
                "determinant differs from one by {d:e}"
            )));
        }
        HermitianPd::new(m, tol)
    }

    /// Wraps a matrix that is Hermitian positive definite by construction.
    /// Validity is only checked in debug builds.
    pub(crate) fn from_trusted(m: CMat) -> Self {
        debug_assert!(hermitian_defect(&m) < 1e-8, "trusted HPD is not Hermitian");
        HermitianPd { m }
    }

    pub fn identity(n: usize) -> Self {
        HermitianPd { m: identity(n) }
    }

    pub fn from_diagonal(entries: &[f64]) -> Result<Self> {
        if entries.iter().any(|&x| x <= 0.0) {
            return Err(Error::NotPositiveDefinite {
                min_eig: entries.iter().copied().fold(f64::INFINITY, f64::min),
            });
        }
        let n = entries.len();
        let mut m = CMat::zeros(n, n);
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        Ok(HermitianPd { m })
    }

    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn inverse(&self) -> HermitianPd {
        // an HPD matrix is always invertible; go through the eigenbasis to
        // keep the result exactly Hermitian
        HermitianPd::from_trusted(symmetrize(&hermitian_function(&self.m, |x| 1.0 / x)))
    }

    /// Defects against the invariants (symmetry, positivity, determinant).
    pub fn invariant_defects(&self) -> (f64, f64, f64) {
        (
            hermitian_defect(&self.m),
            min_eigenvalue(&self.m),
            det_defect(&self.m),
        )
    }
}

/// Special unitary matrix, the element type of the group factor `SU(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialUnitary {
    m: CMat,
}

impl SpecialUnitary {
    pub fn new(m: CMat, tol: &Tolerances) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::invalid("matrix must be square and non-empty"));
        }
        if !is_finite(&m) {
            return Err(Error::invalid("matrix has non-finite entries"));
        }
        let u = unitary_defect(&m);
        if u > tol.sym {
            return Err(Error::invalid(format!(
                "matrix is not unitary (defect {u:e})"
            )));
        }
        let d = det_defect(&m);
        if d > tol.det {
            return Err(Error::invalid(format!(
                "determinant differs from one by {d:e}"
            )));
        }
        Ok(SpecialUnitary { m })
    }

    pub(crate) fn from_trusted(m: CMat) -> Self {
        debug_assert!(unitary_defect(&m) < 1e-8, "trusted SU is not unitary");
        SpecialUnitary { m }
    }

    pub fn identity(n: usize) -> Self {
        SpecialUnitary { m: identity(n) }
    }

    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    /// Group inverse, the conjugate transpose.
    pub fn inverse(&self) -> SpecialUnitary {
        SpecialUnitary {
            m: self.m.adjoint(),
        }
    }

    pub fn invariant_defects(&self) -> (f64, f64) {
        (unitary_defect(&self.m), det_defect(&self.m))
    }
}

/// Projects onto the Hermitian part, used to scrub roundoff after operations
/// that are Hermitian by construction.
pub(crate) fn symmetrize(m: &CMat) -> CMat {
    (m + m.adjoint()).scale(0.5)
}

/// Principal square root of a Hermitian positive definite matrix.
///
/// The root is computed in the eigenbasis, so it is itself Hermitian positive
/// definite and satisfies `r * r = a` to machine precision.
pub fn hermitian_sqrt(a: &HermitianPd) -> Result<HermitianPd> {
    let (vals, vecs) = hermitian_eigen(a.matrix());
    if let Some(&min) = vals
        .iter()
        .filter(|v| **v <= 0.0)
        .min_by(|a, b| a.partial_cmp(b).unwrap())
    {
        return Err(Error::NotPositiveDefinite { min_eig: min });
    }
    let n = a.dim();
    let mut diag = CMat::zeros(n, n);
    for (i, v) in vals.iter().enumerate() {
        diag[(i, i)] = Complex64::new(v.sqrt(), 0.0);
    }
    let root = &vecs * diag * vecs.adjoint();
    Ok(HermitianPd::from_trusted(symmetrize(&root)))
}

/// Hermitian logarithm of a Hermitian positive definite matrix, computed in
/// the eigenbasis. Traceless whenever `det a = 1`.
pub fn matrix_log_hpd(a: &HermitianPd) -> Result<CMat> {
    let (vals, vecs) = hermitian_eigen(a.matrix());
    if let Some(&min) = vals
        .iter()
        .filter(|v| **v <= 0.0)
        .min_by(|a, b| a.partial_cmp(b).unwrap())
    {
        return Err(Error::NotPositiveDefinite { min_eig: min });
    }
    let n = a.dim();
    let mut diag = CMat::zeros(n, n);
    for (i, v) in vals.iter().enumerate() {
        diag[(i, i)] = Complex64::new(v.ln(), 0.0);
    }
    Ok(symmetrize(&(&vecs * diag * vecs.adjoint())))
}

const EXP_MAX_TERMS: usize = 64;

/// Matrix exponential by scaling and squaring with a Taylor core.
///
/// The argument is scaled so its norm is below 1/2, the series is summed to
/// machine precision and the result squared back up.
pub fn matrix_exp(x: &CMat) -> Result<CMat> {
    if x.nrows() != x.ncols() || x.nrows() == 0 {
        return Err(Error::invalid("matrix must be square and non-empty"));
    }
    if !is_finite(x) {
        return Err(Error::invalid("matrix has non-finite entries"));
    }
    let norm = fro_norm(x);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = x.scale(0.5f64.powi(squarings as i32) as f64);
    let n = x.nrows();
    let mut result = identity(n);
    let mut term = identity(n);
    let mut converged = false;
    for k in 1..=EXP_MAX_TERMS {
        term = (&term * &scaled).scale(1.0 / k as f64);
        result += &term;
        if fro_norm(&term) < 1e-18 * fro_norm(&result).max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::numerical(format!(
            "matrix exponential did not converge in {EXP_MAX_TERMS} terms"
        )));
    }
    let mut out = result;
    for _ in 0..squarings {
        out = &out * &out;
    }
    Ok(out)
}

/// Exponential of a Hermitian matrix, returned as a positive definite element.
pub fn exp_hermitian(h: &CMat) -> Result<HermitianPd> {
    let e = matrix_exp(h)?;
    Ok(HermitianPd::from_trusted(symmetrize(&e)))
}

/// Exponential of an anti-Hermitian traceless matrix, returned as a special
/// unitary element after renormalising the determinant.
pub fn exp_anti_hermitian(a: &CMat) -> Result<SpecialUnitary> {
    let e = matrix_exp(a)?;
    Ok(SpecialUnitary::from_trusted(renormalize_det(&e)))
}

/// Divides by the principal n-th root of the determinant so the result has
/// determinant exactly one up to roundoff.
pub(crate) fn renormalize_det(m: &CMat) -> CMat {
    let n = m.nrows() as f64;
    let d = m.determinant();
    let root = Complex64::from_polar(d.norm().powf(1.0 / n), d.arg() / n);
    m.scale(1.0).map(|z| z / root)
}

const SU_LOG_MAX_SQRTS: usize = 40;
const SU_LOG_SERIES_RADIUS: f64 = 0.25;

/// Principal anti-Hermitian logarithm of a special unitary matrix.
///
/// Square roots are taken until the argument is close to the identity, the
/// log series is summed there, and the result is doubled back up. The branch
/// is principal (eigenangles in `(-pi, pi]`); the output is projected onto
/// traceless anti-Hermitian form to scrub roundoff.
pub fn matrix_log_su(g: &SpecialUnitary) -> Result<CMat> {
    let n = g.dim();
    let mut u = g.matrix().clone();
    let mut doublings = 0u32;
    while fro_dist(&u, &identity(n)) > SU_LOG_SERIES_RADIUS {
        if doublings as usize >= SU_LOG_MAX_SQRTS {
            return Err(Error::numerical(
                "unitary logarithm: square root budget exhausted",
            ));
        }
        u = unitary_sqrt(&u)?;
        doublings += 1;
    }
    let x = &u - identity(n);
    // log(I + X) = X - X^2/2 + X^3/3 - ...
    let mut log = CMat::zeros(n, n);
    let mut pow = identity(n);
    let mut converged = false;
    for k in 1..=EXP_MAX_TERMS {
        pow = &pow * &x;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        log += pow.scale(sign / k as f64);
        if fro_norm(&pow) / (k as f64) < 1e-18 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::numerical("unitary logarithm series did not converge"));
    }
    log = log.scale(2.0f64.powi(doublings as i32));
    // project onto anti-Hermitian traceless form
    log = (&log - log.adjoint()).scale(0.5);
    let tr = log.trace() / Complex64::new(n as f64, 0.0);
    for i in 0..n {
        log[(i, i)] -= tr;
    }
    Ok(log)
}

/// Principal square root of a unitary matrix with spectrum away from -1,
/// via the commutative Newton iteration `Y <- (Y + Y^{-1} U) / 2`.
fn unitary_sqrt(u: &CMat) -> Result<CMat> {
    let mut y = u.clone();
    for _ in 0..60 {
        let y_inv = y
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::numerical("unitary square root: singular iterate"))?;
        let next = (&y + y_inv * u).scale(0.5);
        let delta = fro_dist(&next, &y);
        y = next;
        if delta < 1e-15 {
            return Ok(y);
        }
    }
    Err(Error::numerical("unitary square root did not converge"))
}

/// Polar projection of a determinant-one matrix onto `SU(n) * SH(n)`.
///
/// Returns `(g, a)` with `d = g a`, `a = ((d^* d))^{1/2}` and `g = d a^{-1}`.
pub fn polar_project(d: &CMat, tol: &Tolerances) -> Result<(SpecialUnitary, HermitianPd)> {
    if d.nrows() != d.ncols() || d.nrows() == 0 {
        return Err(Error::invalid("matrix must be square and non-empty"));
    }
    let dd = det_defect(d);
    if dd > tol.det {
        return Err(Error::invalid(format!(
            "polar projection requires det = 1 (defect {dd:e})"
        )));
    }
    let gram = symmetrize(&(d.adjoint() * d));
    let a = hermitian_sqrt(&HermitianPd::from_trusted(gram))
        .map_err(|_| Error::numerical("polar projection: Gram matrix not positive definite"))?;
    let g = d * a.inverse().matrix();
    let g = renormalize_det(&g);
    let udef = unitary_defect(&g);
    if udef > tol.sym.max(1e-8) {
        return Err(Error::numerical(format!(
            "polar projection produced a non-unitary factor (defect {udef:e})"
        )));
    }
    Ok((SpecialUnitary::from_trusted(g), a))
}

// ---------------------------------------------------------------------------
// bases of sh(n) and su(n)
// ---------------------------------------------------------------------------

/// Orthonormal basis of `sh(n)`, the Hermitian traceless matrices, under the
/// real trace form `tr(a b)`.
///
/// For `n = 2` the order is the diagonal generator, the real off-diagonal
/// generator and the imaginary off-diagonal generator, each scaled by
/// `1/sqrt(2)`.
pub fn sh_basis(n: usize) -> Vec<CMat> {
    let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
    let mut basis = Vec::with_capacity(n * n - 1);
    // traceless diagonal generators
    for d in 1..n {
        let mut m = CMat::zeros(n, n);
        let norm = 1.0 / ((d * (d + 1)) as f64).sqrt();
        for i in 0..d {
            m[(i, i)] = Complex64::new(norm, 0.0);
        }
        m[(d, d)] = Complex64::new(-(d as f64) * norm, 0.0);
        basis.push(m);
    }
    // off-diagonal pairs: symmetric then antisymmetric-imaginary
    for p in 0..n {
        for q in (p + 1)..n {
            let mut s = CMat::zeros(n, n);
            s[(p, q)] = Complex64::new(inv_sqrt2, 0.0);
            s[(q, p)] = Complex64::new(inv_sqrt2, 0.0);
            basis.push(s);
            let mut a = CMat::zeros(n, n);
            a[(p, q)] = Complex64::new(0.0, inv_sqrt2);
            a[(q, p)] = Complex64::new(0.0, -inv_sqrt2);
            basis.push(a);
        }
    }
    basis
}

/// Orthonormal dual basis of `su(n)` with respect to the pairing
/// `<x, xi> = Im tr(x xi)`: the `i`-multiples of the `sh(n)` basis.
pub fn su_basis(n: usize) -> Vec<CMat> {
    sh_basis(n)
        .into_iter()
        .map(|e| e.map(|z| z * Complex64::new(0.0, 1.0)))
        .collect()
}

/// Coordinates of a Hermitian traceless matrix in the `sh(n)` basis.
pub fn sh_coords(h: &CMat) -> Vec<f64> {
    sh_basis(h.nrows())
        .iter()
        .map(|e| (h * e).trace().re)
        .collect()
}

/// Coordinates of an anti-Hermitian traceless matrix in the `su(n)` basis.
pub fn su_coords(a: &CMat) -> Vec<f64> {
    // a = sum c_k (i e_k)  =>  c_k = tr((-i a) e_k)
    let minus_i = Complex64::new(0.0, -1.0);
    sh_basis(a.nrows())
        .iter()
        .map(|e| (a.map(|z| z * minus_i) * e).trace().re)
        .collect()
}

/// Hermitian traceless matrix with the given `sh(n)` coordinates.
pub fn sh_from_coords(n: usize, coords: &[f64]) -> CMat {
    let mut m = CMat::zeros(n, n);
    for (c, e) in coords.iter().zip(sh_basis(n)) {
        m += e.scale(1.0).map(|z| z * Complex64::new(*c, 0.0));
    }
    m
}

/// Anti-Hermitian traceless matrix with the given `su(n)` coordinates.
pub fn su_from_coords(n: usize, coords: &[f64]) -> CMat {
    let mut m = CMat::zeros(n, n);
    for (c, e) in coords.iter().zip(su_basis(n)) {
        m += e.scale(1.0).map(|z| z * Complex64::new(*c, 0.0));
    }
    m
}

// ---------------------------------------------------------------------------
// seeded sampling
// ---------------------------------------------------------------------------

fn gaussian_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    CMat::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex64::new(re, im)
    })
}

fn remove_trace(m: &mut CMat) {
    let n = m.nrows();
    let tr = m.trace() / Complex64::new(n as f64, 0.0);
    for i in 0..n {
        m[(i, i)] -= tr;
    }
}

/// Random Hermitian traceless matrix of the given Frobenius norm.
/// Deterministic for a fixed seed.
pub fn sample_sh_tangent(n: usize, scale: f64, seed: u64) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = gaussian_matrix(n, &mut rng);
    let mut h = (&g + g.adjoint()).scale(0.5);
    remove_trace(&mut h);
    let norm = fro_norm(&h);
    if norm == 0.0 || scale == 0.0 {
        return CMat::zeros(n, n);
    }
    h.scale(scale / norm)
}

/// Random anti-Hermitian traceless matrix of the given Frobenius norm.
pub fn sample_su_tangent(n: usize, scale: f64, seed: u64) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e37_79b9_7f4a_7c15));
    let g = gaussian_matrix(n, &mut rng);
    let mut a = (&g - g.adjoint()).scale(0.5);
    remove_trace(&mut a);
    let norm = fro_norm(&a);
    if norm == 0.0 || scale == 0.0 {
        return CMat::zeros(n, n);
    }
    a.scale(scale / norm)
}

/// Random traceless complex matrix (a tangent vector of the full group).
pub fn sample_sl_tangent(n: usize, scale: f64, seed: u64) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x517c_c1b7_2722_0a95));
    let mut g = gaussian_matrix(n, &mut rng);
    remove_trace(&mut g);
    let norm = fro_norm(&g);
    if norm == 0.0 || scale == 0.0 {
        return CMat::zeros(n, n);
    }
    g.scale(scale / norm)
}

/// Random loop element `exp` of a scaled Hermitian traceless matrix.
pub fn sample_sh(n: usize, scale: f64, seed: u64) -> HermitianPd {
    let h = sample_sh_tangent(n, scale, seed);
    let e = matrix_exp(&h).expect("exponential of a bounded tangent converges");
    HermitianPd::from_trusted(renormalize_det(&symmetrize(&e)))
}

/// Random group element `exp` of a scaled anti-Hermitian traceless matrix.
pub fn sample_su(n: usize, scale: f64, seed: u64) -> SpecialUnitary {
    let a = sample_su_tangent(n, scale, seed);
    let e = matrix_exp(&a).expect("exponential of a bounded tangent converges");
    SpecialUnitary::from_trusted(renormalize_det(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn sqrt_of_identity_is_identity() {
        let a = HermitianPd::identity(3);
        let r = hermitian_sqrt(&a).unwrap();
        assert!(fro_dist(r.matrix(), &identity(3)) < 1e-14);
    }

    #[test]
    fn sqrt_of_diagonal_is_forced() {
        let a = HermitianPd::from_diagonal(&[4.0, 0.25]).unwrap();
        let r = hermitian_sqrt(&a).unwrap();
        let expected = HermitianPd::from_diagonal(&[2.0, 0.5]).unwrap();
        assert!(fro_dist(r.matrix(), expected.matrix()) < 1e-14);
    }

    #[test]
    fn sqrt_resquares_to_input() {
        for seed in 0..20 {
            let a = sample_sh(3, 0.8, seed);
            let r = hermitian_sqrt(&a).unwrap();
            let rr = r.matrix() * r.matrix();
            assert!(fro_dist(&rr, a.matrix()) < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn sqrt_rejects_indefinite() {
        let m = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ]));
        let err = HermitianPd::new(m, &tol()).unwrap_err();
        assert!(matches!(err, Error::NotPositiveDefinite { .. }));
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z = CMat::zeros(2, 2);
        assert!(fro_dist(&matrix_exp(&z).unwrap(), &identity(2)) < 1e-15);
    }

    #[test]
    fn exp_of_diagonal() {
        let ln2 = 2.0_f64.ln();
        let mut d = CMat::zeros(2, 2);
        d[(0, 0)] = Complex64::new(ln2, 0.0);
        d[(1, 1)] = Complex64::new(-ln2, 0.0);
        let e = matrix_exp(&d).unwrap();
        let expected = HermitianPd::from_diagonal(&[2.0, 0.5]).unwrap();
        assert!(fro_dist(&e, expected.matrix()) < 1e-14);
    }

    #[test]
    fn exp_log_round_trip_on_hermitian_traceless() {
        for seed in 0..20 {
            let x = sample_sh_tangent(2, 1.0, seed);
            let a = exp_hermitian(&x).unwrap();
            let back = matrix_log_hpd(&a).unwrap();
            assert!(fro_dist(&back, &x) < 1e-10, "seed {seed}");
            let fwd = matrix_exp(&back).unwrap();
            assert!(fro_dist(&fwd, a.matrix()) < 1e-11, "seed {seed}");
        }
    }

    #[test]
    fn log_of_identity_is_zero() {
        let a = HermitianPd::identity(4);
        assert!(fro_norm(&matrix_log_hpd(&a).unwrap()) < 1e-14);
    }

    #[test]
    fn log_of_diagonal() {
        let a = HermitianPd::from_diagonal(&[2.0, 0.5]).unwrap();
        let l = matrix_log_hpd(&a).unwrap();
        let ln2 = 2.0_f64.ln();
        assert!((l[(0, 0)].re - ln2).abs() < 1e-14);
        assert!((l[(1, 1)].re + ln2).abs() < 1e-14);
    }

    #[test]
    fn su_log_round_trip() {
        for seed in 0..20 {
            let x = sample_su_tangent(3, 0.9, seed);
            let g = exp_anti_hermitian(&x).unwrap();
            let back = matrix_log_su(&g).unwrap();
            assert!(fro_dist(&back, &x) < 1e-10, "seed {seed}");
        }
    }

    #[test]
    fn polar_of_unitary_is_trivial() {
        let g = sample_su(2, 0.5, 11);
        let (u, a) = polar_project(g.matrix(), &tol()).unwrap();
        assert!(fro_dist(u.matrix(), g.matrix()) < 1e-11);
        assert!(fro_dist(a.matrix(), &identity(2)) < 1e-11);
    }

    #[test]
    fn polar_of_hermitian_is_trivial() {
        let a = sample_sh(2, 0.5, 12);
        let (u, h) = polar_project(a.matrix(), &tol()).unwrap();
        assert!(fro_dist(u.matrix(), &identity(2)) < 1e-11);
        assert!(fro_dist(h.matrix(), a.matrix()) < 1e-11);
    }

    #[test]
    fn polar_recomposes_random_sl2() {
        for seed in 0..20 {
            let x = sample_sl_tangent(2, 0.7, seed);
            let d = renormalize_det(&matrix_exp(&x).unwrap());
            let (g, a) = polar_project(&d, &tol()).unwrap();
            let recomposed = g.matrix() * a.matrix();
            assert!(fro_dist(&recomposed, &d) < 1e-11, "seed {seed}");
            // re-projection returns the same pair
            let (g2, a2) = polar_project(&recomposed, &tol()).unwrap();
            assert!(fro_dist(g2.matrix(), g.matrix()) < 1e-10);
            assert!(fro_dist(a2.matrix(), a.matrix()) < 1e-10);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_su(2, 0.1, 42);
        let b = sample_su(2, 0.1, 42);
        assert_eq!(a.matrix(), b.matrix());
    }

    #[test]
    fn sample_with_zero_scale_is_identity() {
        let a = sample_sh(2, 0.0, 5);
        assert!(fro_dist(a.matrix(), &identity(2)) < 1e-15);
    }

    #[test]
    fn sampled_sh_passes_invariants() {
        let a = sample_sh(3, 0.1, 7);
        let (sym, min_eig, det) = a.invariant_defects();
        assert!(sym < 1e-12);
        assert!(min_eig > 0.0);
        assert!(det < 1e-12);
    }

    #[test]
    fn bases_are_orthonormal_and_dual() {
        for n in 2..=4 {
            let es = sh_basis(n);
            let eps = su_basis(n);
            assert_eq!(es.len(), n * n - 1);
            for (i, e) in es.iter().enumerate() {
                assert!(fro_norm(&(e - e.adjoint())) < 1e-15, "sh basis Hermitian");
                assert!(e.trace().norm() < 1e-15, "sh basis traceless");
                for (j, f) in es.iter().enumerate() {
                    let form = (e * f).trace().re;
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((form - expected).abs() < 1e-14);
                }
                for (j, xi) in eps.iter().enumerate() {
                    // pairing <x, xi> = Im tr(x xi)
                    let pairing = (e * xi).trace().im;
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((pairing - expected).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn coords_round_trip() {
        let x = sample_sh_tangent(3, 1.3, 3);
        let c = sh_coords(&x);
        assert!(fro_dist(&sh_from_coords(3, &c), &x) < 1e-13);
        let a = sample_su_tangent(3, 1.3, 4);
        let c = su_coords(&a);
        assert!(fro_dist(&su_from_coords(3, &c), &a) < 1e-13);
    }
}
