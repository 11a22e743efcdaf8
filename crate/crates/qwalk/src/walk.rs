//! Walk construction: coins, shift operators, the discrete evolution
//! unitary U = S (I x C), and continuous-time adjacency Hamiltonians with
//! their propagators.
//!
//! Basis ordering contract, shared by every module: the basis state
//! (vertex v, color i) has index v*d + (i-1).

use nalgebra::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, PermutationAutomorphism};
use crate::linalg::{eig_hermitian, identity, kron, unitarity_defect, CMatrix};
use crate::scalar::{c, scaled_tol, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoinLabel {
    Grover,
    Dft,
    Custom,
    Random(u64),
}

#[derive(Debug, Clone)]
pub struct Coin<T: Scalar> {
    pub dim: usize,
    pub matrix: CMatrix<T>,
    pub label: CoinLabel,
}

impl<T: Scalar> Coin<T> {
    fn checked(dim: usize, matrix: CMatrix<T>, label: CoinLabel) -> Result<Self> {
        let defect = unitarity_defect(&matrix);
        if defect > scaled_tol::<T>(1e-12) {
            return Err(Error::NotUnitary {
                defect: defect.to_f64(),
            });
        }
        Ok(Coin { dim, matrix, label })
    }

    /// The Grover coin 2|Psi><Psi| - I: diagonal 2/d - 1, off-diagonal 2/d.
    pub fn grover(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Range("coin dimension must be >= 1".into()));
        }
        let off = 2.0 / d as f64;
        let m = CMatrix::<T>::from_fn(d, d, |i, j| {
            if i == j {
                c(off - 1.0, 0.0)
            } else {
                c(off, 0.0)
            }
        });
        Coin::checked(d, m, CoinLabel::Grover)
    }

    /// The DFT coin: entry (j,k) = omega^(jk) / sqrt(d), omega = exp(2 pi i / d).
    pub fn dft(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Range("coin dimension must be >= 1".into()));
        }
        let scale = 1.0 / (d as f64).sqrt();
        let m = CMatrix::<T>::from_fn(d, d, |j, k| {
            let angle = 2.0 * std::f64::consts::PI * ((j * k) % d) as f64 / d as f64;
            c(scale * angle.cos(), scale * angle.sin())
        });
        Coin::checked(d, m, CoinLabel::Dft)
    }

    /// Reproducible pseudo-random unitary: modified Gram-Schmidt on a seeded
    /// complex matrix with uniform entries.
    pub fn random(d: usize, seed: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::Range("coin dimension must be >= 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cols: Vec<Vec<Complex<T>>> = (0..d)
            .map(|_| {
                (0..d)
                    .map(|_| c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                    .collect()
            })
            .collect();
        for j in 0..d {
            for k in 0..j {
                let proj: Complex<T> = (0..d).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..d {
                    let sub = proj * cols[k][i];
                    cols[j][i] -= sub;
                }
            }
            let norm_sq: T = (0..d)
                .map(|i| cols[j][i].re * cols[j][i].re + cols[j][i].im * cols[j][i].im)
                .fold(T::zero(), |a, b| a + b);
            let inv = T::one() / norm_sq.sqrt();
            for i in 0..d {
                cols[j][i] = cols[j][i].scale(inv);
            }
        }
        let m = CMatrix::<T>::from_fn(d, d, |i, j| cols[j][i]);
        Coin::checked(d, m, CoinLabel::Random(seed))
    }

    pub fn custom(matrix: CMatrix<T>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "coin must be square and nonempty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Coin::checked(matrix.nrows(), matrix, CoinLabel::Custom)
    }

    /// Parse a coin matrix from text: one row per line, entries "re,im"
    /// (or bare "re") separated by whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<Complex<T>>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    let (re, im) = match tok.split_once(',') {
                        Some((re, im)) => (re, im),
                        None => (tok, "0"),
                    };
                    match (re.parse::<f64>(), im.parse::<f64>()) {
                        (Ok(re), Ok(im)) => Ok(c(re, im)),
                        _ => Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("bad matrix entry {tok:?}"),
                        }),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let d = rows.len();
        if d == 0 || rows.iter().any(|r| r.len() != d) {
            return Err(Error::Parse {
                line: 1,
                msg: "coin file must contain a square matrix".into(),
            });
        }
        Coin::custom(CMatrix::<T>::from_fn(d, d, |i, j| rows[i][j]))
    }

    /// The uniform coin state (1/sqrt(d)) sum_i |i>.
    pub fn uniform_state(d: usize) -> crate::linalg::CVector<T> {
        let amp = 1.0 / (d as f64).sqrt();
        crate::linalg::CVector::<T>::from_fn(d, |_, _| c(amp, 0.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkKind {
    Discrete,
    Continuous,
}

/// A constructed walk: the discrete unitary U = S (I x C) on dimension N*d,
/// or the continuous 0/1 adjacency Hamiltonian on dimension N.
#[derive(Debug, Clone)]
pub struct WalkOperator<T: Scalar> {
    pub kind: WalkKind,
    pub dim: usize,
    pub matrix: CMatrix<T>,
    pub graph: ColoredGraph,
    pub coin: Option<Coin<T>>,
}

/// The shift permutation S = sum_{v,i} |v(i), i><v, i|.
pub fn shift_operator<T: Scalar>(g: &ColoredGraph) -> CMatrix<T> {
    let n = g.num_vertices();
    let d = g.degree();
    let dim = n * d;
    let mut s = CMatrix::<T>::zeros(dim, dim);
    for v in 0..n {
        for i in 1..=d {
            let w = g.neighbor(v, i);
            s[(w * d + (i - 1), v * d + (i - 1))] = c(1.0, 0.0);
        }
    }
    s
}

/// Discrete evolution operator U = S (I x C).
pub fn discrete_evolution<T: Scalar>(g: &ColoredGraph, coin: Coin<T>) -> Result<WalkOperator<T>> {
    if coin.dim != g.degree() {
        return Err(Error::DimensionMismatch(format!(
            "coin dimension {} != graph degree {}",
            coin.dim,
            g.degree()
        )));
    }
    let s = shift_operator::<T>(g);
    let u = &s * kron(&identity::<T>(g.num_vertices()), &coin.matrix);
    Ok(WalkOperator {
        kind: WalkKind::Discrete,
        dim: g.num_vertices() * g.degree(),
        matrix: u,
        graph: g.clone(),
        coin: Some(coin),
    })
}

/// Continuous walk Hamiltonian: the 0/1 adjacency matrix of the graph.
pub fn adjacency_hamiltonian<T: Scalar>(g: &ColoredGraph) -> WalkOperator<T> {
    let n = g.num_vertices();
    let mut h = CMatrix::<T>::zeros(n, n);
    for (u, v, _) in g.edges() {
        h[(u, v)] = c(1.0, 0.0);
        h[(v, u)] = c(1.0, 0.0);
    }
    WalkOperator {
        kind: WalkKind::Continuous,
        dim: n,
        matrix: h,
        graph: g.clone(),
        coin: None,
    }
}

/// exp(i H t) via the Hermitian eigendecomposition.
pub fn propagator<T: Scalar>(h: &WalkOperator<T>, t: T) -> Result<CMatrix<T>> {
    if h.kind != WalkKind::Continuous {
        return Err(Error::WrongKind(
            "propagator is defined for continuous walks only".into(),
        ));
    }
    let spec = eig_hermitian(&h.matrix)?;
    let n = h.dim;
    let mut d = CMatrix::<T>::zeros(n, n);
    for (i, lambda) in spec.eigenvalues.iter().enumerate() {
        let angle = lambda.re * t;
        d[(i, i)] = Complex::new(angle.cos(), angle.sin());
    }
    Ok(&spec.eigenvectors * d * spec.eigenvectors.adjoint())
}

/// Matrix representation P_v x P_c of a graph automorphism on the walk space.
pub fn automorphism_matrix<T: Scalar>(
    g: &ColoredGraph,
    a: &PermutationAutomorphism,
) -> Result<CMatrix<T>> {
    if !g.is_automorphism(a)? {
        return Err(Error::InvalidDimension(
            "supplied permutation is not an automorphism of the graph".into(),
        ));
    }
    let n = g.num_vertices();
    let d = g.degree();
    let mut pv = CMatrix::<T>::zeros(n, n);
    for v in 0..n {
        pv[(a.vertex_perm[v], v)] = c(1.0, 0.0);
    }
    let mut pc = CMatrix::<T>::zeros(d, d);
    for i in 1..=d {
        pc[(a.color_perm[i - 1] - 1, i - 1)] = c(1.0, 0.0);
    }
    Ok(kron(&pv, &pc))
}
