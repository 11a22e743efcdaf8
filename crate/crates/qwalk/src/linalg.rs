//! Dense complex linear-algebra kernels: Hermitian and unitary
//! eigendecomposition, SVD-based rank / null space / pseudo-inverse,
//! Kronecker products and row-stacking vectorization.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};
use crate::scalar::{scaled_tol, Scalar};

pub type CMatrix<T> = DMatrix<Complex<T>>;
pub type CVector<T> = DVector<Complex<T>>;

/// Default relative tolerance for rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Eigenvalues with a matching orthonormal eigenvector matrix (one column
/// per eigenvalue, same order).
#[derive(Debug, Clone)]
pub struct SpectralResult<T: Scalar> {
    pub eigenvalues: Vec<Complex<T>>,
    pub eigenvectors: CMatrix<T>,
}

pub fn identity<T: Scalar>(n: usize) -> CMatrix<T> {
    CMatrix::<T>::identity(n, n)
}

pub fn frobenius_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    a.norm()
}

pub fn hermiticity_defect<T: Scalar>(a: &CMatrix<T>) -> T {
    (a - a.adjoint()).norm()
}

pub fn unitarity_defect<T: Scalar>(u: &CMatrix<T>) -> T {
    (u.adjoint() * u - identity::<T>(u.ncols())).norm()
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
pub fn eig_hermitian<T: Scalar>(a: &CMatrix<T>) -> Result<SpectralResult<T>> {
    if a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "eig_hermitian needs a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let scale = frobenius_norm(a).max(T::one());
    let defect = hermiticity_defect(a);
    if defect > scaled_tol::<T>(1e-10) * scale {
        return Err(Error::NotHermitian {
            defect: defect.to_f64(),
        });
    }
    // Work on the exactly Hermitian part so the solver sees a clean input.
    let h = (a + a.adjoint()).scale(T::lift(0.5));
    let eig = h.symmetric_eigen();
    let n = a.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());
    let eigenvalues = order
        .iter()
        .map(|&i| Complex::new(eig.eigenvalues[i], T::zero()))
        .collect();
    let eigenvectors = CMatrix::<T>::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(SpectralResult {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigendecomposition of a unitary matrix, eigenvalues sorted by phase in
/// `[0, 2pi)`.
///
/// Works by simultaneous diagonalization of the commuting Hermitian pair
/// `(U+U^)/2` and `(U-U^)/(2i)`: diagonalize the first, then diagonalize the
/// second inside each degenerate block. Eigenvectors of distinct unitary
/// eigenvalues differ in at least one of the two Hermitian parts, so the
/// second pass resolves every block exactly.
pub fn eig_unitary<T: Scalar>(u: &CMatrix<T>) -> Result<SpectralResult<T>> {
    if u.nrows() != u.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "eig_unitary needs a square matrix, got {}x{}",
            u.nrows(),
            u.ncols()
        )));
    }
    let defect = unitarity_defect(u);
    if defect > scaled_tol::<T>(1e-10) {
        return Err(Error::NotUnitary {
            defect: defect.to_f64(),
        });
    }
    let n = u.nrows();
    let half = Complex::new(T::lift(0.5), T::zero());
    let neg_half_i = Complex::new(T::zero(), T::lift(-0.5));
    let h_re = (u + u.adjoint()) * half; // real parts of the eigenvalues
    let h_im = (u - u.adjoint()) * neg_half_i; // imaginary parts

    let first = eig_hermitian(&h_re)?;
    let block_tol = scaled_tol::<T>(1e-9);

    let mut vectors: Vec<CVector<T>> = Vec::with_capacity(n);
    let mut values: Vec<Complex<T>> = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n
            && (first.eigenvalues[end].re - first.eigenvalues[end - 1].re).abs() <= block_tol
        {
            end += 1;
        }
        let k = end - start;
        let block = first.eigenvectors.columns(start, k).clone_owned();
        let sub = block.adjoint() * &h_im * &block; // k x k Hermitian
        let inner = eig_hermitian(&sub)?;
        let refined = &block * &inner.eigenvectors;
        for j in 0..k {
            let v = refined.column(j).clone_owned();
            // Rayleigh quotient on U, projected back to the unit circle.
            let lambda = (v.adjoint() * u * &v)[(0, 0)];
            let r = (lambda.re * lambda.re + lambda.im * lambda.im).sqrt();
            let lambda = if r > T::zero() {
                lambda.unscale(r)
            } else {
                Complex::new(T::one(), T::zero())
            };
            vectors.push(v);
            values.push(lambda);
        }
        start = end;
    }

    let phase = |z: Complex<T>| -> T {
        let mut p = z.im.atan2(z.re);
        if p < T::zero() {
            p += T::two_pi();
        }
        // Guard against -eps wrapping to just under 2pi.
        if T::two_pi() - p < scaled_tol::<T>(1e-12) {
            p = T::zero();
        }
        p
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| phase(values[i]).partial_cmp(&phase(values[j])).unwrap());
    let eigenvalues = order.iter().map(|&i| values[i]).collect();
    let eigenvectors = CMatrix::<T>::from_fn(n, n, |r, c| vectors[order[c]][r]);
    Ok(SpectralResult {
        eigenvalues,
        eigenvectors,
    })
}

fn svd_of<T: Scalar>(a: &CMatrix<T>) -> (CMatrix<T>, Vec<T>, CMatrix<T>) {
    let svd = a.clone().svd(true, true);
    let u = svd.u.expect("svd requested u");
    let v_t = svd.v_t.expect("svd requested v_t");
    (u, svd.singular_values.as_slice().to_vec(), v_t)
}

/// Numerical rank at relative tolerance `tol` (cutoff `tol * sigma_max`).
pub fn rank<T: Scalar>(a: &CMatrix<T>, tol: T) -> usize {
    let (_, sigma, _) = svd_of(a);
    let smax = sigma.iter().cloned().fold(T::zero(), |m, s| m.max(s));
    if smax == T::zero() {
        return 0;
    }
    sigma.iter().filter(|&&s| s > tol * smax).count()
}

/// Orthonormal basis for the null space of `a` at relative tolerance `tol`.
/// Returns an `ncols x nullity` matrix (possibly with zero columns).
pub fn nullspace<T: Scalar>(a: &CMatrix<T>, tol: T) -> CMatrix<T> {
    let n = a.ncols();
    // The thin SVD only yields min(m, n) right singular vectors; pad with
    // zero rows so the full right factor is available for wide matrices.
    let work = if a.nrows() < n {
        let mut p = CMatrix::<T>::zeros(n, n);
        p.rows_mut(0, a.nrows()).copy_from(a);
        p
    } else {
        a.clone()
    };
    let (_, sigma, v_t) = svd_of(&work);
    let smax = sigma.iter().cloned().fold(T::zero(), |m, s| m.max(s));
    let r = if smax == T::zero() {
        0
    } else {
        sigma.iter().filter(|&&s| s > tol * smax).count()
    };
    let nullity = n - r;
    let mut basis = CMatrix::<T>::zeros(n, nullity);
    for (j, row) in (r..n).enumerate() {
        for i in 0..n {
            basis[(i, j)] = v_t[(row, i)].conj();
        }
    }
    basis
}

/// Moore-Penrose pseudo-inverse; singular values below `tol * sigma_max`
/// are treated as exactly zero.
pub fn pseudo_inverse<T: Scalar>(a: &CMatrix<T>, tol: T) -> CMatrix<T> {
    let (u, sigma, v_t) = svd_of(a);
    let smax = sigma.iter().cloned().fold(T::zero(), |m, s| m.max(s));
    let k = sigma.len();
    let mut inv = CMatrix::<T>::zeros(k, k);
    for i in 0..k {
        if smax > T::zero() && sigma[i] > tol * smax {
            inv[(i, i)] = Complex::new(T::one() / sigma[i], T::zero());
        }
    }
    v_t.adjoint() * inv * u.adjoint()
}

pub fn kron<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    a.kronecker(b)
}

/// Row-stacking vectorization: rows of `a` become consecutive segments of
/// the output column. Under this convention `vec(A X B) = (A kron B^T) vec(X)`
/// and conjugation superoperators `rho -> A rho B^` become `A kron conj(B)`.
pub fn vectorize<T: Scalar>(a: &CMatrix<T>) -> CVector<T> {
    CVector::<T>::from_vec(a.transpose().as_slice().to_vec())
}

pub fn devectorize<T: Scalar>(v: &CVector<T>, rows: usize, cols: usize) -> Result<CMatrix<T>> {
    if v.len() != rows * cols {
        return Err(Error::DimensionMismatch(format!(
            "cannot reshape a length-{} vector into {}x{}",
            v.len(),
            rows,
            cols
        )));
    }
    Ok(CMatrix::<T>::from_row_slice(rows, cols, v.as_slice()))
}

/// Orthonormalize the columns of `a`, dropping directions whose singular
/// value falls below `tol` (absolute; the inputs are near-unit vectors).
pub fn orthonormalize_columns<T: Scalar>(a: &CMatrix<T>, tol: T) -> CMatrix<T> {
    if a.ncols() == 0 {
        return a.clone();
    }
    let (u, sigma, _) = svd_of(a);
    let keep = sigma.iter().filter(|&&s| s > tol).count();
    u.columns(0, keep).clone_owned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    type M = CMatrix<f64>;

    fn pauli_x() -> M {
        M::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)])
    }

    #[test]
    fn hermitian_pauli_x() {
        let r = eig_hermitian(&pauli_x()).unwrap();
        assert!((r.eigenvalues[0].re + 1.0).abs() < 1e-12);
        assert!((r.eigenvalues[1].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_zero_matrix() {
        let r = eig_hermitian(&M::zeros(3, 3)).unwrap();
        assert!(r.eigenvalues.iter().all(|l| l.norm() == 0.0));
        assert!(unitarity_defect(&r.eigenvectors) < 1e-12);
    }

    #[test]
    fn hermitian_four_cycle_spectrum() {
        // 4-cycle adjacency: spectrum {-2, 0, 0, 2} (2 cos(2 pi k / 4)).
        let mut a = M::zeros(4, 4);
        for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            a[(i, j)] = c(1., 0.);
            a[(j, i)] = c(1., 0.);
        }
        let r = eig_hermitian(&a).unwrap();
        let got: Vec<f64> = r.eigenvalues.iter().map(|l| l.re).collect();
        for (g, e) in got.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert!((g - e).abs() < 1e-10, "{g} vs {e}");
        }
        let recon = &r.eigenvectors
            * M::from_diagonal(&CVector::from_vec(r.eigenvalues.clone()))
            * r.eigenvectors.adjoint();
        assert!((recon - a).norm() < 1e-10);
    }

    #[test]
    fn hermitian_rejects_asymmetric() {
        let a = M::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        assert!(matches!(eig_hermitian(&a), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn unitary_identity() {
        let r = eig_unitary(&identity::<f64>(5)).unwrap();
        assert!(r.eigenvalues.iter().all(|l| (l - c::<f64>(1., 0.)).norm() < 1e-12));
    }

    #[test]
    fn unitary_diag_phases() {
        let u = M::from_diagonal(&CVector::from_vec(vec![c(1., 0.), c(0., 1.)]));
        let r = eig_unitary(&u).unwrap();
        let phases: Vec<f64> = r.eigenvalues.iter().map(|l| l.im.atan2(l.re)).collect();
        assert!((phases[0] - 0.0).abs() < 1e-12);
        assert!((phases[1] - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn unitary_rejects_nonunitary() {
        let a = M::from_diagonal(&CVector::from_vec(vec![c(2., 0.), c(1., 0.)]));
        assert!(matches!(eig_unitary(&a), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn unitary_random_reconstruction() {
        // Seeded Haar-like unitary via orthonormalization of a pseudo-random
        // complex matrix; self-consistency oracle on the reconstruction.
        let n = 7;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let raw = M::from_fn(n, n, |_, _| c(next(), next()));
        let u = orthonormalize_columns(&raw, 1e-12);
        assert_eq!(u.ncols(), n);
        assert!(unitarity_defect(&u) < 1e-12);
        let r = eig_unitary(&u).unwrap();
        let recon = &r.eigenvectors
            * M::from_diagonal(&CVector::from_vec(r.eigenvalues.clone()))
            * r.eigenvectors.adjoint();
        assert!((recon - &u).norm() < 1e-9);
        assert!(unitarity_defect(&r.eigenvectors) < 1e-9);
    }

    #[test]
    fn nullspace_wide_row() {
        let a = M::from_row_slice(1, 2, &[c(1., 0.), c(1., 0.)]);
        let ns = nullspace(&a, 1e-10);
        assert_eq!(ns.ncols(), 1);
        let x = ns.column(0);
        assert!((a.clone() * x).norm() < 1e-12);
        assert!((ns.column(0).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nullspace_identity_empty() {
        assert_eq!(nullspace(&identity::<f64>(4), 1e-10).ncols(), 0);
    }

    #[test]
    fn nullspace_rank_one_rows() {
        let a = M::from_row_slice(
            2,
            3,
            &[c(1., 0.), c(2., 0.), c(3., 0.), c(1., 0.), c(2., 0.), c(3., 0.)],
        );
        assert_eq!(rank(&a, 1e-10), 1);
        let ns = nullspace(&a, 1e-10);
        assert_eq!(ns.ncols(), 2);
        assert!((a * &ns).norm() < 1e-10);
        assert!(unitarity_defect(&ns) < 1e-10);
    }

    #[test]
    fn pinv_diagonal() {
        let a = M::from_diagonal(&CVector::from_vec(vec![c(2., 0.), c(0., 0.)]));
        let p = pseudo_inverse(&a, 1e-12);
        assert!((p[(0, 0)] - c::<f64>(0.5, 0.)).norm() < 1e-12);
        assert!(p[(1, 1)].norm() < 1e-12);
    }

    #[test]
    fn pinv_invertible_matches_inverse() {
        let a = M::from_row_slice(2, 2, &[c(1., 0.), c(1., 0.), c(0., 1.), c(2., 0.)]);
        let p = pseudo_inverse(&a, 1e-12);
        let inv = a.clone().try_inverse().unwrap();
        assert!((p - inv).norm() < 1e-9);
    }

    #[test]
    fn pinv_projector_is_itself() {
        let mut p = M::zeros(3, 3);
        p[(0, 0)] = c(1., 0.);
        assert!((pseudo_inverse(&p, 1e-12) - &p).norm() < 1e-12);
    }

    #[test]
    fn pinv_moore_penrose_conditions() {
        let a = M::from_row_slice(
            3,
            2,
            &[c(1., 1.), c(0., 2.), c(3., 0.), c(1., -1.), c(0., 0.), c(2., 1.)],
        );
        let p = pseudo_inverse(&a, 1e-12);
        assert!((&a * &p * &a - &a).norm() < 1e-8);
        assert!((&p * &a * &p - &p).norm() < 1e-8);
        assert!(hermiticity_defect(&(&a * &p)) < 1e-8);
        assert!(hermiticity_defect(&(&p * &a)) < 1e-8);
    }

    #[test]
    fn vectorize_row_stacking_order() {
        let a = M::from_row_slice(
            3,
            3,
            &(0..9).map(|k| c(k as f64 + 1.0, 0.)).collect::<Vec<_>>(),
        );
        let v = vectorize(&a);
        for k in 0..9 {
            assert_eq!(v[k].re, k as f64 + 1.0);
        }
        let back = devectorize(&v, 3, 3).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn kron_identity() {
        assert_eq!(kron(&identity::<f64>(2), &identity::<f64>(2)), identity::<f64>(4));
    }

    #[test]
    fn roth_identity_random_triples() {
        let mut state = 42u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for _ in 0..5 {
            let a = M::from_fn(3, 3, |_, _| c(next(), next()));
            let x = M::from_fn(3, 3, |_, _| c(next(), next()));
            let b = M::from_fn(3, 3, |_, _| c(next(), next()));
            let lhs = vectorize(&(&a * &x * &b));
            let rhs = kron(&a, &b.transpose()) * vectorize(&x);
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn generic_scalar_smoke_f32() {
        let a = CMatrix::<f32>::from_row_slice(
            2,
            2,
            &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)],
        );
        let r = eig_hermitian(&a).unwrap();
        assert!((r.eigenvalues[0].re + 1.0).abs() < 1e-5);
    }
}
