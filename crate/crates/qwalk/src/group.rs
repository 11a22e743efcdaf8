//! Finite groups as explicit multiplication tables, plus the
//! representation-theoretic predicates used to certify infinite hitting
//! times: hook-length irrep dimensions for S_n, character inner products,
//! and the discrete/continuous sufficiency criteria.

use nalgebra::Complex;
use serde::Serialize;

use crate::error::{Error, Result};

/// Exhaustive associativity checking is cubic; above this order we spot-sample.
const ASSOC_EXHAUSTIVE_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>, // mul[a * order + b] = a*b
    identity: usize,
}

impl FiniteGroup {
    pub fn from_table(mul: Vec<usize>, identity: usize) -> Result<Self> {
        let order2 = mul.len();
        let order = (order2 as f64).sqrt().round() as usize;
        if order * order != order2 || order == 0 {
            return Err(Error::InvalidGroup(format!(
                "table length {order2} is not a positive square"
            )));
        }
        if identity >= order || mul.iter().any(|&x| x >= order) {
            return Err(Error::InvalidGroup("element index out of range".into()));
        }
        let g = FiniteGroup {
            order,
            mul,
            identity,
        };
        for a in 0..order {
            if g.mul(g.identity, a) != a || g.mul(a, g.identity) != a {
                return Err(Error::InvalidGroup(format!(
                    "element {identity} is not a two-sided identity"
                )));
            }
            if !(0..order).any(|b| g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
            }
        }
        if order <= ASSOC_EXHAUSTIVE_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails on ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Deterministic spot sample.
            let mut state = 0x5deece66du64;
            for _ in 0..50_000 {
                let mut next = |m: usize| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 33) as usize % m
                };
                let (a, b, c) = (next(order), next(order), next(order));
                if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails on ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Closure of a set of permutation generators (each a bijection of
    /// `0..k`). Element 0 is the identity; the rest follow in breadth-first
    /// discovery order. Returns the group and the indices of the generators.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<(Self, Vec<usize>)> {
        if gens.is_empty() {
            return Err(Error::InvalidGroup("no generators supplied".into()));
        }
        let k = gens[0].len();
        for (i, p) in gens.iter().enumerate() {
            if p.len() != k || !is_permutation(p) {
                return Err(Error::InvalidGroup(format!(
                    "generator {i} is not a permutation of 0..{k}"
                )));
            }
        }
        let id: Vec<usize> = (0..k).collect();
        let mut elements: Vec<Vec<usize>> = vec![id.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(id, 0usize);
        let mut frontier = vec![0usize];
        while let Some(e) = frontier.pop() {
            for gen in gens {
                let prod = compose(&elements[e], gen);
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elements.len());
                    frontier.push(elements.len());
                    elements.push(prod);
                }
            }
        }
        let order = elements.len();
        let mut mul = vec![0usize; order * order];
        for a in 0..order {
            for b in 0..order {
                let prod = compose(&elements[a], &elements[b]);
                mul[a * order + b] = index[&prod];
            }
        }
        let gen_indices = gens.iter().map(|g| index[g]).collect();
        Ok((FiniteGroup::from_table(mul, 0)?, gen_indices))
    }

    /// Cyclic group Z_n under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let mul = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        FiniteGroup::from_table(mul, 0)
    }

    /// Elementary Abelian 2-group Z_2^n under bitwise XOR.
    pub fn elementary_abelian_2(n: usize) -> Result<Self> {
        if n == 0 || n > 20 {
            return Err(Error::Range(format!("Z_2^n supported for 1 <= n <= 20, got {n}")));
        }
        let size = 1usize << n;
        let mul = (0..size)
            .flat_map(|a| (0..size).map(move |b| a ^ b))
            .collect();
        FiniteGroup::from_table(mul, 0)
    }

    /// Symmetric group S_n; also returns the element indices of all
    /// transpositions (i j), ordered lexicographically, which form the
    /// involutive generating set used for its Cayley graph.
    pub fn symmetric(n: usize) -> Result<(Self, Vec<usize>)> {
        if n == 0 || n > 7 {
            return Err(Error::Range(format!(
                "explicit S_n tables supported for 1 <= n <= 7, got {n}"
            )));
        }
        if n == 1 {
            return Ok((FiniteGroup::from_table(vec![0], 0)?, vec![]));
        }
        let mut gens = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(i, j);
                gens.push(p);
            }
        }
        FiniteGroup::from_permutations(&gens)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Partition of the elements into conjugacy classes, each class sorted,
    /// classes ordered by smallest member (so the identity class is first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let inv: Vec<usize> = (0..self.order).map(|a| self.inverse(a)).collect();
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order)
                .map(|g| self.mul(self.mul(g, a), inv[g]))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| {
        if x < seen.len() && !seen[x] {
            seen[x] = true;
            true
        } else {
            false
        }
    })
}

/// (a then b) as functions: (a*b)(x) = a(b(x)), matching row-then-column
/// composition of permutation matrices.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

// ---------------------------------------------------------------------------
// Hook lengths and S_n irrep dimensions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct IrrepDimensionReport {
    /// Irrep dimensions, one per partition of n, ascending.
    pub dims: Vec<u128>,
    pub max_dim: u128,
    pub group_label: String,
}

/// All partitions of `n` with parts descending, in reverse-lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Dimension of the S_n irrep labeled by `partition`, by the hook-length
/// formula f = n! / prod(hooks), in exact integer arithmetic.
pub fn hook_dimension(partition: &[usize]) -> u128 {
    let n: usize = partition.iter().sum();
    let mut hooks: u128 = 1;
    for (i, &row) in partition.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = partition[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(n) / hooks
}

pub fn sn_irrep_dims(n: usize) -> Result<IrrepDimensionReport> {
    if n == 0 || n > 12 {
        return Err(Error::Range(format!(
            "sn_irrep_dims supports 1 <= n <= 12, got {n}"
        )));
    }
    let mut dims: Vec<u128> = partitions(n).iter().map(|p| hook_dimension(p)).collect();
    dims.sort_unstable();
    let max_dim = *dims.last().unwrap();
    Ok(IrrepDimensionReport {
        dims,
        max_dim,
        group_label: format!("S_{n}"),
    })
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

pub type C64 = Complex<f64>;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub class_sizes: Vec<usize>,
    /// One row per irrep, one column per conjugacy class. The first column
    /// must be the identity class, so row[0] is the irrep dimension.
    pub characters: Vec<Vec<C64>>,
}

impl CharacterTable {
    pub fn new(class_sizes: Vec<usize>, characters: Vec<Vec<C64>>) -> Result<Self> {
        let t = CharacterTable {
            class_sizes,
            characters,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn group_order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    fn validate(&self) -> Result<()> {
        let k = self.class_sizes.len();
        if k == 0 || self.class_sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidGroup("class sizes must be positive".into()));
        }
        if self.characters.iter().any(|row| row.len() != k) {
            return Err(Error::DimensionMismatch(
                "character row length differs from number of classes".into(),
            ));
        }
        let order = self.group_order();
        let dim_sq: f64 = self
            .characters
            .iter()
            .map(|row| row[0].re * row[0].re)
            .sum();
        if (dim_sq - order as f64).abs() > 1e-6 {
            return Err(Error::InvalidGroup(format!(
                "sum of squared dimensions {dim_sq} does not equal group order {order}"
            )));
        }
        for (i, phi) in self.characters.iter().enumerate() {
            for (j, chi) in self.characters.iter().enumerate() {
                let ip = self.inner_product(phi, chi)?;
                let expect = if i == j { 1.0 } else { 0.0 };
                if (ip - C64::new(expect, 0.0)).norm() > 1e-9 {
                    return Err(Error::InvalidGroup(format!(
                        "rows {i} and {j} violate character orthogonality"
                    )));
                }
            }
        }
        Ok(())
    }

    /// (phi|chi) = (1/|G|) sum over classes of size * phi * conj(chi).
    pub fn inner_product(&self, phi: &[C64], chi: &[C64]) -> Result<C64> {
        if phi.len() != self.class_sizes.len() || chi.len() != self.class_sizes.len() {
            return Err(Error::DimensionMismatch(
                "class function length differs from number of classes".into(),
            ));
        }
        let order = self.group_order() as f64;
        let sum: C64 = self
            .class_sizes
            .iter()
            .zip(phi.iter().zip(chi))
            .map(|(&s, (p, x))| C64::new(s as f64, 0.0) * p * x.conj())
            .sum();
        Ok(sum / order)
    }

    pub fn max_irrep_dim(&self) -> u128 {
        self.characters
            .iter()
            .map(|row| row[0].re.round() as u128)
            .max()
            .unwrap_or(0)
    }

    /// Parse from structured text: a class-labels line, a class-sizes line,
    /// then one character row per irrep. Entries are `re` or `re,im`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<(usize, &str)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            rows.push((lineno + 1, line));
        }
        if rows.len() < 3 {
            return Err(Error::Parse {
                line: rows.last().map_or(1, |r| r.0),
                msg: "expected a labels line, a sizes line, and at least one character row".into(),
            });
        }
        let n_classes = rows[0].1.split_whitespace().count();
        let (sizes_line, sizes_str) = rows[1];
        let class_sizes: Vec<usize> = sizes_str
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: sizes_line,
                    msg: format!("bad class size {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        if class_sizes.len() != n_classes {
            return Err(Error::Parse {
                line: sizes_line,
                msg: format!(
                    "{} class sizes for {} class labels",
                    class_sizes.len(),
                    n_classes
                ),
            });
        }
        let mut characters = Vec::new();
        for &(lineno, line) in &rows[2..] {
            let row: Vec<C64> = line
                .split_whitespace()
                .map(|t| parse_complex(t).ok_or(Error::Parse {
                    line: lineno,
                    msg: format!("bad character entry {t:?}"),
                }))
                .collect::<Result<_>>()?;
            if row.len() != n_classes {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("{} entries for {} classes", row.len(), n_classes),
                });
            }
            characters.push(row);
        }
        CharacterTable::new(class_sizes, characters)
    }
}

fn parse_complex(tok: &str) -> Option<C64> {
    match tok.split_once(',') {
        Some((re, im)) => Some(C64::new(re.parse().ok()?, im.parse().ok()?)),
        None => Some(C64::new(tok.parse().ok()?, 0.0)),
    }
}

// ---------------------------------------------------------------------------
// Infinite-hitting-time predicates
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The criterion guarantees infinite hitting times for some initial state.
    Sufficient,
    /// The criterion does not apply; it is one-directional, so nothing is
    /// ruled out. The numerical spectral path remains available.
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictionReport {
    pub verdict: Verdict,
    pub group_label: String,
    pub max_irrep_dim: Option<u128>,
    pub coin_dim: Option<usize>,
    pub abelian: Option<bool>,
    pub detail: String,
}

/// Discrete-walk criterion for a Cayley graph on S_n with the transposition
/// generating set: sufficient if some irrep dimension exceeds the coin
/// dimension.
pub fn predict_infinite_hitting_discrete_sn(n: usize, coin_dim: usize) -> Result<PredictionReport> {
    let report = sn_irrep_dims(n)?;
    Ok(verdict_from_max_dim(
        report.group_label,
        report.max_dim,
        coin_dim,
    ))
}

/// Discrete-walk criterion from a user-supplied character table.
pub fn predict_infinite_hitting_discrete_table(
    table: &CharacterTable,
    coin_dim: usize,
    label: &str,
) -> PredictionReport {
    verdict_from_max_dim(label.to_string(), table.max_irrep_dim(), coin_dim)
}

/// Discrete-walk criterion for a general group: needs a character table,
/// otherwise the caller is pointed at the numerical spectral path.
pub fn predict_infinite_hitting_discrete(
    group: &FiniteGroup,
    table: Option<&CharacterTable>,
    coin_dim: usize,
) -> Result<PredictionReport> {
    match table {
        Some(t) => {
            if t.group_order() != group.order() {
                return Err(Error::DimensionMismatch(format!(
                    "character table is for a group of order {}, not {}",
                    t.group_order(),
                    group.order()
                )));
            }
            Ok(predict_infinite_hitting_discrete_table(
                t,
                coin_dim,
                &format!("group of order {}", group.order()),
            ))
        }
        None => {
            if group.is_abelian() {
                // All irreps are one-dimensional; no table needed.
                return Ok(PredictionReport {
                    verdict: Verdict::Inconclusive,
                    group_label: format!("Abelian group of order {}", group.order()),
                    max_irrep_dim: Some(1),
                    coin_dim: Some(coin_dim),
                    abelian: Some(true),
                    detail: "Abelian groups have only one-dimensional irreps; \
                             the degeneracy criterion cannot trigger"
                        .into(),
                });
            }
            Err(Error::InsufficientData(
                "irrep dimensions of a general non-Abelian group are not computed here; \
                 supply a character table or use the numerical spectral analysis (analyze)"
                    .into(),
            ))
        }
    }
}

fn verdict_from_max_dim(label: String, max_dim: u128, coin_dim: usize) -> PredictionReport {
    let sufficient = max_dim > coin_dim as u128;
    PredictionReport {
        verdict: if sufficient {
            Verdict::Sufficient
        } else {
            Verdict::Inconclusive
        },
        group_label: label,
        max_irrep_dim: Some(max_dim),
        coin_dim: Some(coin_dim),
        abelian: None,
        detail: format!(
            "max irrep dimension {max_dim} {} coin dimension {coin_dim}",
            if sufficient { ">" } else { "<=" }
        ),
    }
}

/// Continuous-walk criterion: sufficient iff the group is non-Abelian.
pub fn predict_infinite_hitting_continuous(group: &FiniteGroup) -> PredictionReport {
    let abelian = group.is_abelian();
    PredictionReport {
        verdict: if abelian {
            Verdict::Inconclusive
        } else {
            Verdict::Sufficient
        },
        group_label: format!("group of order {}", group.order()),
        max_irrep_dim: None,
        coin_dim: None,
        abelian: Some(abelian),
        detail: if abelian {
            "Abelian group: every irrep is one-dimensional, criterion does not apply".into()
        } else {
            "non-Abelian group: some irrep has dimension > 1, so the adjacency spectrum \
             is degenerate and the walk traps some initial states"
                .into()
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2n_is_abelian() {
        for n in 1..=6 {
            assert!(FiniteGroup::elementary_abelian_2(n).unwrap().is_abelian());
        }
    }

    #[test]
    fn z6_is_abelian() {
        assert!(FiniteGroup::cyclic(6).unwrap().is_abelian());
    }

    #[test]
    fn s3_is_not_abelian() {
        let (s3, gens) = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(gens.len(), 3);
        assert!(!s3.is_abelian());
        assert_eq!(s3.conjugacy_classes().len(), 3);
    }

    #[test]
    fn bad_table_rejected() {
        // Identity not two-sided.
        assert!(FiniteGroup::from_table(vec![0, 0, 0, 0], 0).is_err());
    }

    #[test]
    fn sn_dims_small() {
        let r = sn_irrep_dims(3).unwrap();
        assert_eq!(r.dims, vec![1, 1, 2]);
        assert_eq!(sn_irrep_dims(1).unwrap().dims, vec![1]);
        assert_eq!(sn_irrep_dims(6).unwrap().max_dim, 16);
        assert!(sn_irrep_dims(0).is_err());
        assert!(sn_irrep_dims(13).is_err());
    }

    #[test]
    fn sn_dims_sum_of_squares() {
        for n in 1..=10 {
            let r = sn_irrep_dims(n).unwrap();
            let sum: u128 = r.dims.iter().map(|d| d * d).sum();
            assert_eq!(sum, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn s5_dims() {
        let mut dims = sn_irrep_dims(5).unwrap().dims;
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 4, 4, 5, 5, 6]);
    }

    fn s3_table() -> CharacterTable {
        // Classes: e, transpositions (3), 3-cycles (2).
        CharacterTable::new(
            vec![1, 3, 2],
            vec![
                vec![C64::new(1., 0.), C64::new(1., 0.), C64::new(1., 0.)],
                vec![C64::new(1., 0.), C64::new(-1., 0.), C64::new(1., 0.)],
                vec![C64::new(2., 0.), C64::new(0., 0.), C64::new(-1., 0.)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn regular_character_multiplicities() {
        // Regular character of Z_2 is (2, 0); trivial irrep occurs once.
        let z2 = CharacterTable::new(
            vec![1, 1],
            vec![
                vec![C64::new(1., 0.), C64::new(1., 0.)],
                vec![C64::new(1., 0.), C64::new(-1., 0.)],
            ],
        )
        .unwrap();
        let reg = vec![C64::new(2., 0.), C64::new(0., 0.)];
        let ip = z2.inner_product(&reg, &z2.characters[0]).unwrap();
        assert!((ip - C64::new(1., 0.)).norm() < 1e-12);

        // Regular character of S_3 against the 2-dim irrep: multiplicity 2.
        let t = s3_table();
        let reg = vec![C64::new(6., 0.), C64::new(0., 0.), C64::new(0., 0.)];
        let ip = t.inner_product(&reg, &t.characters[2]).unwrap();
        assert!((ip - C64::new(2., 0.)).norm() < 1e-12);
    }

    #[test]
    fn irreducible_self_inner_product_is_one() {
        let t = s3_table();
        for row in &t.characters {
            let ip = t.inner_product(row, row).unwrap();
            assert!((ip - C64::new(1., 0.)).norm() < 1e-9);
        }
    }

    #[test]
    fn inner_product_length_mismatch() {
        let t = s3_table();
        assert!(t.inner_product(&[C64::new(1., 0.)], &t.characters[0].clone()).is_err());
    }

    #[test]
    fn table_parse_roundtrip() {
        let text = "# S3\n e t c\n 1 3 2\n 1 1 1\n 1 -1 1\n 2 0 -1\n";
        let t = CharacterTable::parse(text).unwrap();
        assert_eq!(t.group_order(), 6);
        assert_eq!(t.max_irrep_dim(), 2);
        assert!(CharacterTable::parse("a b\n1 1\n1 2\n").is_err());
    }

    #[test]
    fn discrete_predicate_sn() {
        let r = predict_infinite_hitting_discrete_sn(6, 15).unwrap();
        assert_eq!(r.verdict, Verdict::Sufficient);
        let r = predict_infinite_hitting_discrete_sn(5, 10).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn discrete_predicate_abelian_inconclusive() {
        for n in 1..=6 {
            let g = FiniteGroup::elementary_abelian_2(n).unwrap();
            let r = predict_infinite_hitting_discrete(&g, None, 1).unwrap();
            assert_eq!(r.verdict, Verdict::Inconclusive);
        }
    }

    #[test]
    fn discrete_predicate_needs_table() {
        let (s3, _) = FiniteGroup::symmetric(3).unwrap();
        assert!(matches!(
            predict_infinite_hitting_discrete(&s3, None, 3),
            Err(Error::InsufficientData(_))
        ));
        let r = predict_infinite_hitting_discrete(&s3, Some(&{
            let t = s3_table();
            t
        }), 1)
        .unwrap();
        assert_eq!(r.verdict, Verdict::Sufficient);
    }

    #[test]
    fn continuous_predicate() {
        let (s3, _) = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(
            predict_infinite_hitting_continuous(&s3).verdict,
            Verdict::Sufficient
        );
        let (s6_small, _) = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(
            predict_infinite_hitting_continuous(&s6_small).verdict,
            Verdict::Sufficient
        );
        let z8 = FiniteGroup::elementary_abelian_2(3).unwrap();
        assert_eq!(
            predict_infinite_hitting_continuous(&z8).verdict,
            Verdict::Inconclusive
        );
    }

    #[test]
    fn max_dim_vs_binomial_threshold() {
        // max irrep dim exceeds C(n,2) exactly for n >= 6 in this range.
        for n in 2..=10usize {
            let binom = (n * (n - 1) / 2) as u128;
            let max = sn_irrep_dims(n).unwrap().max_dim;
            assert_eq!(max > binom, n >= 6, "n = {n}: max {max} vs C(n,2) {binom}");
        }
    }
}
