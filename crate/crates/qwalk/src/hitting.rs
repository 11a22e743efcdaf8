//! Measured-walk dynamics: first-hit probabilities, the vectorized
//! superoperators N and Y, the closed-form hitting time through the
//! pseudo-inverse of I - N, the truncated-series cross-check, and a
//! classical random-walk baseline.

use std::io::Write as IoWrite;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::linalg::{
    frobenius_norm, hermiticity_defect, identity, kron, pseudo_inverse, vectorize, CMatrix,
    CVector,
};
use crate::scalar::{c, scaled_tol, Scalar};
use crate::spectral::TrappedSubspace;
use crate::walk::{WalkKind, WalkOperator};

/// Default ceiling on the walk dimension D for the D^2 x D^2 superoperator
/// path.
pub const DEFAULT_SUPEROP_GUARD: usize = 256;

/// A discrete walk together with the arrival measurement {P_f, Q_f} and the
/// initial density operator.
#[derive(Debug, Clone)]
pub struct MeasuredWalkSetup<T: Scalar> {
    pub operator: WalkOperator<T>,
    pub final_vertex: usize,
    /// |x_f><x_f| (x) I_coin.
    pub p_f: CMatrix<T>,
    /// I - P_f.
    pub q_f: CMatrix<T>,
    pub rho0: CMatrix<T>,
    /// Set when the initial state is pure; enables the state-vector fast
    /// path, which agrees with the density iteration exactly.
    pub pure_initial: Option<CVector<T>>,
}

impl<T: Scalar> MeasuredWalkSetup<T> {
    pub fn new(operator: WalkOperator<T>, final_vertex: usize, rho0: CMatrix<T>) -> Result<Self> {
        let mut s = Self::build(operator, final_vertex)?;
        let dim = s.operator.dim;
        if rho0.nrows() != dim || rho0.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "initial density is {}x{}, walk dimension is {dim}",
                rho0.nrows(),
                rho0.ncols()
            )));
        }
        let tol = scaled_tol::<T>(1e-10);
        if hermiticity_defect(&rho0) > tol {
            return Err(Error::InvalidDensity("initial state is not Hermitian".into()));
        }
        let trace: T = (0..dim).map(|i| rho0[(i, i)].re).fold(T::zero(), |a, b| a + b);
        if (trace - T::one()).abs() > tol {
            return Err(Error::InvalidDensity(format!(
                "initial state has trace {}",
                trace.to_f64()
            )));
        }
        let spec = crate::linalg::eig_hermitian(&rho0)?;
        if let Some(l) = spec.eigenvalues.first() {
            if l.re < -tol {
                return Err(Error::InvalidDensity(format!(
                    "initial state has negative eigenvalue {}",
                    l.re.to_f64()
                )));
            }
        }
        s.rho0 = rho0;
        Ok(s)
    }

    /// Build from a normalized pure state; keeps the vector for the fast path.
    pub fn from_pure(
        operator: WalkOperator<T>,
        final_vertex: usize,
        psi: CVector<T>,
    ) -> Result<Self> {
        let mut s = Self::build(operator, final_vertex)?;
        if psi.len() != s.operator.dim {
            return Err(Error::DimensionMismatch(format!(
                "initial vector has length {}, walk dimension is {}",
                psi.len(),
                s.operator.dim
            )));
        }
        let norm = psi.norm();
        if (norm - T::one()).abs() > scaled_tol::<T>(1e-10) {
            return Err(Error::NotNormalized {
                norm: norm.to_f64(),
            });
        }
        s.rho0 = &psi * psi.adjoint();
        s.pure_initial = Some(psi);
        Ok(s)
    }

    /// Pure state localized at `vertex` with coin amplitudes `alpha`.
    pub fn from_vertex_coin(
        operator: WalkOperator<T>,
        final_vertex: usize,
        vertex: usize,
        alpha: &CVector<T>,
    ) -> Result<Self> {
        let d = operator.graph.degree();
        let n = operator.graph.num_vertices();
        if vertex >= n {
            return Err(Error::Range(format!("vertex {vertex} out of range 0..{n}")));
        }
        if alpha.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "coin amplitude vector has length {}, degree is {d}",
                alpha.len()
            )));
        }
        let mut psi = CVector::<T>::zeros(operator.dim);
        for i in 0..d {
            psi[vertex * d + i] = alpha[i];
        }
        Self::from_pure(operator, final_vertex, psi)
    }

    fn build(operator: WalkOperator<T>, final_vertex: usize) -> Result<Self> {
        if operator.kind != WalkKind::Discrete {
            return Err(Error::WrongKind(
                "measured hitting times are defined for discrete walks".into(),
            ));
        }
        let n = operator.graph.num_vertices();
        if final_vertex >= n {
            return Err(Error::Range(format!(
                "final vertex {final_vertex} out of range 0..{n}"
            )));
        }
        let d = operator.graph.degree();
        let dim = operator.dim;
        let mut p_f = CMatrix::<T>::zeros(dim, dim);
        for i in 0..d {
            let k = final_vertex * d + i;
            p_f[(k, k)] = c(1.0, 0.0);
        }
        let q_f = identity::<T>(dim) - &p_f;
        Ok(MeasuredWalkSetup {
            operator,
            final_vertex,
            p_f,
            q_f,
            rho0: CMatrix::<T>::zeros(dim, dim),
            pure_initial: None,
        })
    }

    fn dim(&self) -> usize {
        self.operator.dim
    }
}

/// First-arrival probability at step t by literal density iteration:
/// rho <- Q_f U rho U^ Q_f applied t-1 times, then Tr{P_f U rho U^ P_f}.
pub fn first_hit_probability<T: Scalar>(s: &MeasuredWalkSetup<T>, t: usize) -> Result<T> {
    if t < 1 {
        return Err(Error::Range("t must be >= 1".into()));
    }
    let u = &s.operator.matrix;
    let mut rho = s.rho0.clone();
    for _ in 1..t {
        let m = &s.q_f * u * &rho * u.adjoint() * &s.q_f;
        rho = m;
    }
    let hit = &s.p_f * u * &rho * u.adjoint() * &s.p_f;
    let p: T = (0..s.dim()).map(|i| hit[(i, i)].re).fold(T::zero(), |a, b| a + b);
    Ok(p.max(T::zero()))
}

/// First-hit series p(1..T) with running cumulative and survival columns.
#[derive(Debug, Clone, Serialize)]
pub struct PSeries {
    pub p: Vec<f64>,
    pub cumulative: Vec<f64>,
    pub survival: Vec<f64>,
}

impl PSeries {
    /// CSV rows "t,p,cumulative,survival" with a header line.
    pub fn write_csv<W: IoWrite>(&self, mut w: W) -> Result<()> {
        writeln!(w, "t,p,cumulative,survival")?;
        for t in 0..self.p.len() {
            writeln!(
                w,
                "{},{:.12e},{:.12e},{:.12e}",
                t + 1,
                self.p[t],
                self.cumulative[t],
                self.survival[t]
            )?;
        }
        Ok(())
    }
}

/// Compute p(t) for t = 1..T. Pure initial states iterate the state vector
/// (psi <- Q_f U psi, p(t) = |P_f U psi|^2); density states iterate Eq.-(8)
/// style. Survival is the norm remaining after step t.
pub fn p_series<T: Scalar>(s: &MeasuredWalkSetup<T>, t_max: usize) -> Result<PSeries> {
    if t_max < 1 {
        return Err(Error::Range("T must be >= 1".into()));
    }
    let u = &s.operator.matrix;
    let mut p = Vec::with_capacity(t_max);
    let mut survival = Vec::with_capacity(t_max);
    match &s.pure_initial {
        Some(psi0) => {
            let mut psi = psi0.clone();
            for _ in 0..t_max {
                let stepped = u * &psi;
                let hit = &s.p_f * &stepped;
                p.push(hit.norm_squared().to_f64());
                psi = &s.q_f * stepped;
                survival.push(psi.norm_squared().to_f64());
            }
        }
        None => {
            let mut rho = s.rho0.clone();
            for _ in 0..t_max {
                let stepped = u * &rho * u.adjoint();
                let hit = &s.p_f * &stepped * &s.p_f;
                let pt: T = (0..s.dim())
                    .map(|i| hit[(i, i)].re)
                    .fold(T::zero(), |a, b| a + b);
                p.push(pt.max(T::zero()).to_f64());
                rho = &s.q_f * &stepped * &s.q_f;
                let tr: T = (0..s.dim())
                    .map(|i| rho[(i, i)].re)
                    .fold(T::zero(), |a, b| a + b);
                survival.push(tr.to_f64());
            }
        }
    }
    let mut cumulative = Vec::with_capacity(t_max);
    let mut acc = 0.0;
    for &pt in &p {
        acc += pt;
        cumulative.push(acc);
    }
    Ok(PSeries {
        p,
        cumulative,
        survival,
    })
}

/// Superoperators N = (Q_f U) (x) (Q_f U)* and Y = (P_f U) (x) (P_f U)*
/// under the row-stacking convention, so that
/// p(t) = vec(I)^T  Y N^{t-1} vec(rho0).
pub fn superoperator_matrices<T: Scalar>(
    s: &MeasuredWalkSetup<T>,
    max_dim: usize,
) -> Result<(CMatrix<T>, CMatrix<T>)> {
    let dim = s.dim();
    if dim > max_dim {
        return Err(Error::ResourceGuard(format!(
            "superoperator path needs a {0}x{0} matrix (D = {dim} > guard {max_dim}); \
             use the truncated method",
            dim * dim
        )));
    }
    let qu = &s.q_f * &s.operator.matrix;
    let pu = &s.p_f * &s.operator.matrix;
    let n = kron(&qu, &qu.map(|z| z.conj()));
    let y = kron(&pu, &pu.map(|z| z.conj()));
    Ok((n, y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    Finite,
    Infinite,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    ClosedForm,
    Truncated,
    Both,
}

#[derive(Debug, Clone, Serialize)]
pub struct HittingResult {
    pub classification: Classification,
    /// Expected first-arrival time; omitted when classified INFINITE.
    pub tau: Option<f64>,
    pub total_hit_probability: f64,
    /// Upper bound on the total hitting probability: 1 - Tr{P rho0}.
    pub escape_mass: f64,
    pub method: Method,
    pub truncation_t: Option<usize>,
    /// Imaginary residue of the closed-form trace functional.
    pub residual: Option<f64>,
}

fn trapped_mass<T: Scalar>(trapped: &TrappedSubspace<T>, rho0: &CMatrix<T>) -> T {
    let pr = &trapped.projector * rho0;
    let tr: T = (0..rho0.nrows())
        .map(|i| pr[(i, i)].re)
        .fold(T::zero(), |a, b| a + b);
    tr.max(T::zero()).min(T::one())
}

/// Closed-form hitting time tau = vec(I)^T Y pinv(I - N)^2 vec(rho0).
///
/// If rho0 overlaps the trapped projector beyond `tol` (in the Frobenius
/// sense, |P rho0| > tol), the hitting time is infinite and tau is omitted.
pub fn hitting_time_closed_form<T: Scalar>(
    s: &MeasuredWalkSetup<T>,
    trapped: &TrappedSubspace<T>,
    tol: T,
    max_dim: usize,
) -> Result<HittingResult> {
    let dim = s.dim();
    if trapped.projector.nrows() != dim {
        return Err(Error::DimensionMismatch(format!(
            "trapped projector is {}x{}, walk dimension is {dim}",
            trapped.projector.nrows(),
            trapped.projector.ncols()
        )));
    }
    let escape = (T::one() - trapped_mass(trapped, &s.rho0)).max(T::zero()).to_f64();
    let overlap = frobenius_norm(&(&trapped.projector * &s.rho0));
    if overlap > tol {
        return Ok(HittingResult {
            classification: Classification::Infinite,
            tau: None,
            total_hit_probability: escape,
            escape_mass: escape,
            method: Method::ClosedForm,
            truncation_t: None,
            residual: None,
        });
    }
    let (n, y) = superoperator_matrices(s, max_dim)?;
    let m = pseudo_inverse(&(identity::<T>(dim * dim) - &n), tol);
    let rho_v = vectorize(&s.rho0);
    let id_v = vectorize(&identity::<T>(dim));
    // vec(I) is real, so the transpose functional is the trace functional.
    let tau_c = (id_v.transpose() * &y * (&m * (&m * &rho_v)))[(0, 0)];
    let hit_c = (id_v.transpose() * &y * (&m * &rho_v))[(0, 0)];
    let residual = tau_c.im.to_f64().abs();
    let tau = tau_c.re.to_f64();
    let total = hit_c.re.to_f64().clamp(0.0, 1.0);
    Ok(HittingResult {
        classification: Classification::Finite,
        tau: Some(tau.max(0.0)),
        total_hit_probability: total,
        escape_mass: escape,
        method: Method::ClosedForm,
        truncation_t: None,
        residual: Some(residual),
    })
}

/// Truncated hitting time tau_T = sum_{t<=T} t p(t) with the surviving norm
/// n_T; FINITE only when n_T <= tail_tol.
pub fn hitting_time_truncated<T: Scalar>(
    s: &MeasuredWalkSetup<T>,
    t_max: usize,
    tail_tol: f64,
) -> Result<HittingResult> {
    if tail_tol < 0.0 {
        return Err(Error::Range("tail tolerance must be nonnegative".into()));
    }
    let series = p_series(s, t_max)?;
    let tau: f64 = series
        .p
        .iter()
        .enumerate()
        .map(|(i, &p)| (i + 1) as f64 * p)
        .sum();
    let survival = *series.survival.last().unwrap();
    let total = *series.cumulative.last().unwrap();
    let classification = if survival <= tail_tol {
        Classification::Finite
    } else {
        Classification::Inconclusive
    };
    Ok(HittingResult {
        classification,
        tau: Some(tau),
        total_hit_probability: total.clamp(0.0, 1.0),
        escape_mass: survival,
        method: Method::Truncated,
        truncation_t: Some(t_max),
        residual: None,
    })
}

/// sum_{t=1}^{T} p(t).
pub fn total_hitting_probability<T: Scalar>(s: &MeasuredWalkSetup<T>, t_max: usize) -> Result<f64> {
    let series = p_series(s, t_max)?;
    Ok(series.cumulative.last().copied().unwrap().clamp(0.0, 1.0))
}

/// Expected first-passage time of the simple random walk, by solving
/// h(final) = 0, h(v) = 1 + (1/d) sum_i h(v(i)).
pub fn classical_hitting_time(g: &ColoredGraph, start: usize, finish: usize) -> Result<f64> {
    let n = g.num_vertices();
    if start >= n || finish >= n {
        return Err(Error::Range(format!(
            "vertices must lie in 0..{n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if start == finish {
        return Ok(0.0);
    }
    let d = g.degree() as f64;
    // Unknowns: h(v) for v != finish.
    let idx = |v: usize| if v < finish { v } else { v - 1 };
    let m = n - 1;
    let mut a = DMatrix::<f64>::zeros(m, m);
    let mut b = DVector::<f64>::from_element(m, 1.0);
    for v in 0..n {
        if v == finish {
            continue;
        }
        let r = idx(v);
        a[(r, r)] += 1.0;
        for i in 1..=g.degree() {
            let w = g.neighbor(v, i);
            if w != finish {
                a[(r, idx(w))] -= 1.0 / d;
            }
        }
        let _ = &mut b;
    }
    let lu = a.lu();
    let h = lu
        .solve(&b)
        .ok_or_else(|| Error::InvalidDimension("first-passage system is singular".into()))?;
    Ok(h[idx(start)])
}

/// Generating-function cross-check utility: tau(l) = d/dl [l * hit(l)] at
/// l = 1 - eps, where O(l) = l (I - l N)^{-1}; used by tests to corroborate
/// the closed form numerically.
pub fn generating_function_tau<T: Scalar>(
    s: &MeasuredWalkSetup<T>,
    eps: f64,
    max_dim: usize,
) -> Result<f64> {
    let (n, y) = superoperator_matrices(s, max_dim)?;
    let dim = s.dim();
    let rho_v = vectorize(&s.rho0);
    let id_v = vectorize(&identity::<T>(dim));
    // Hit-generating function p(l) = sum_t p(t) l^t = vec(I)^T Y l (I - lN)^{-1} vec(rho0);
    // tau = p'(1), evaluated here by a central difference at l = 1 - eps.
    let p_of_l = |l: f64| -> Result<f64> {
        let resolvent = (identity::<T>(dim * dim) - n.scale(T::lift(l)))
            .lu()
            .solve(&rho_v)
            .ok_or_else(|| Error::InvalidDimension("resolvent solve failed".into()))?;
        Ok(l * (id_v.transpose() * &y * resolvent)[(0, 0)].re.to_f64())
    };
    let l0 = 1.0 - eps;
    let h = eps / 8.0;
    Ok((p_of_l(l0 + h)? - p_of_l(l0 - h)?) / (2.0 * h))
}

/// Structured result file for a hit run.
#[derive(Debug, Clone, Serialize)]
pub struct HitReport {
    pub closed_form: Option<HittingResult>,
    pub truncated: HittingResult,
    pub agreement: Option<f64>,
    pub tail_tol: f64,
    pub rank_tol: f64,
}
