//! d-regular, d-edge-colored undirected graphs: hypercubes, Cayley graphs,
//! automorphism verification, and the text file format.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Group provenance of a Cayley graph: vertex `g` is connected along color
/// `i` to `g * generators[i-1]`.
#[derive(Debug, Clone)]
pub struct CayleyMeta {
    pub group: FiniteGroup,
    pub generators: Vec<usize>,
}

/// A d-regular undirected graph with a d-edge-coloring. Colors run 1..=d and
/// the color-i neighbor map is an involution on every edge.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    num_vertices: usize,
    degree: usize,
    neighbor: Vec<usize>, // (v, color i) at v * degree + (i - 1)
    connected: bool,
    cayley: Option<CayleyMeta>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationAutomorphism {
    /// Permutation of 0..N-1.
    pub vertex_perm: Vec<usize>,
    /// Permutation of colors: entry i-1 is the image of color i (1-based).
    pub color_perm: Vec<usize>,
}

impl PermutationAutomorphism {
    pub fn direction_preserving(vertex_perm: Vec<usize>, degree: usize) -> Self {
        PermutationAutomorphism {
            vertex_perm,
            color_perm: (1..=degree).collect(),
        }
    }
}

impl ColoredGraph {
    /// Validate and wrap a raw neighbor table.
    pub fn new(num_vertices: usize, degree: usize, neighbor: Vec<usize>) -> Result<Self> {
        if num_vertices == 0 || degree == 0 {
            return Err(Error::InvalidDimension(
                "graph needs at least one vertex and degree >= 1".into(),
            ));
        }
        if neighbor.len() != num_vertices * degree {
            return Err(Error::DimensionMismatch(format!(
                "neighbor table length {} != N*d = {}",
                neighbor.len(),
                num_vertices * degree
            )));
        }
        let g = ColoredGraph {
            num_vertices,
            degree,
            neighbor,
            connected: false,
            cayley: None,
        };
        for v in 0..num_vertices {
            let mut seen = vec![false; num_vertices];
            for i in 1..=degree {
                let w = g.neighbor(v, i);
                if w >= num_vertices {
                    return Err(Error::Range(format!(
                        "neighbor {w} of vertex {v} out of range"
                    )));
                }
                if w == v {
                    return Err(Error::InvalidDimension(format!(
                        "self-loop at vertex {v}, color {i}"
                    )));
                }
                if g.neighbor(w, i) != v {
                    return Err(Error::InvalidDimension(format!(
                        "color {i} is not an involution on edge ({v},{w})"
                    )));
                }
                if seen[w] {
                    return Err(Error::InvalidDimension(format!(
                        "vertices {v} and {w} share more than one edge"
                    )));
                }
                seen[w] = true;
            }
        }
        Ok(ColoredGraph {
            connected: g.compute_connected(),
            ..g
        })
    }

    fn compute_connected(&self) -> bool {
        let mut seen = vec![false; self.num_vertices];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for i in 1..=self.degree {
                let w = self.neighbor(v, i);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.num_vertices
    }

    /// The n-dimensional hypercube: vertices are n-bit strings by binary
    /// value, and the color-i edge flips bit i-1.
    pub fn hypercube(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension("hypercube dimension must be >= 1".into()));
        }
        if n > 16 {
            return Err(Error::ResourceGuard(format!(
                "hypercube dimension {n} exceeds the desk-scale limit of 16"
            )));
        }
        let size = 1usize << n;
        let mut neighbor = vec![0usize; size * n];
        for v in 0..size {
            for i in 1..=n {
                neighbor[v * n + (i - 1)] = v ^ (1 << (i - 1));
            }
        }
        let mut g = ColoredGraph::new(size, n, neighbor)?;
        g.cayley = Some(CayleyMeta {
            group: FiniteGroup::elementary_abelian_2(n)?,
            generators: (0..n).map(|i| 1usize << i).collect(),
        });
        Ok(g)
    }

    /// Cayley graph of `group` with an ordered involutive generating set:
    /// vertex `g` is connected along color `i` to `g * generators[i-1]`.
    /// A non-generating set yields a valid but disconnected graph.
    pub fn cayley(group: &FiniteGroup, generators: &[usize]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidDimension("empty generator set".into()));
        }
        for (idx, &s) in generators.iter().enumerate() {
            if s >= group.order() {
                return Err(Error::Range(format!("generator index {s} out of range")));
            }
            if s == group.identity() {
                return Err(Error::IdentityGenerator);
            }
            if group.mul(s, s) != group.identity() {
                return Err(Error::NonInvolutiveGenerator { index: idx });
            }
            if generators[..idx].contains(&s) {
                return Err(Error::InvalidDimension(format!(
                    "generator {s} listed more than once"
                )));
            }
        }
        let n = group.order();
        let d = generators.len();
        let mut neighbor = vec![0usize; n * d];
        for g in 0..n {
            for (i, &s) in generators.iter().enumerate() {
                neighbor[g * d + i] = group.mul(g, s);
            }
        }
        let mut graph = ColoredGraph::new(n, d, neighbor)?;
        graph.cayley = Some(CayleyMeta {
            group: group.clone(),
            generators: generators.to_vec(),
        });
        Ok(graph)
    }

    /// Cayley graph of S_n over the full transposition generating set.
    pub fn sn_transposition_cayley(n: usize) -> Result<Self> {
        let (group, transpositions) = FiniteGroup::symmetric(n)?;
        ColoredGraph::cayley(&group, &transpositions)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn cayley_meta(&self) -> Option<&CayleyMeta> {
        self.cayley.as_ref()
    }

    /// Neighbor of `v` along the color-`i` edge (colors are 1-based).
    pub fn neighbor(&self, v: usize, color: usize) -> usize {
        debug_assert!(color >= 1 && color <= self.degree);
        self.neighbor[v * self.degree + (color - 1)]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        (1..=self.degree).any(|i| self.neighbor(u, i) == v)
    }

    /// Each undirected edge once, as (u, v, color) with u < v.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.num_vertices {
            for i in 1..=self.degree {
                let v = self.neighbor(u, i);
                if u < v {
                    out.push((u, v, i));
                }
            }
        }
        out
    }

    /// Check whether the supplied permutation pair is an automorphism of the
    /// colored graph: mapping the color-i neighbor of v must agree with the
    /// color_perm(i) neighbor of the mapped v.
    pub fn is_automorphism(&self, a: &PermutationAutomorphism) -> Result<bool> {
        if a.vertex_perm.len() != self.num_vertices {
            return Err(Error::DimensionMismatch(format!(
                "vertex permutation has length {}, graph has {} vertices",
                a.vertex_perm.len(),
                self.num_vertices
            )));
        }
        if a.color_perm.len() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "color permutation has length {}, graph has degree {}",
                a.color_perm.len(),
                self.degree
            )));
        }
        if !is_bijection(&a.vertex_perm, self.num_vertices)
            || !a.color_perm.iter().all(|&c| c >= 1 && c <= self.degree)
            || !is_bijection(
                &a.color_perm.iter().map(|&c| c - 1).collect::<Vec<_>>(),
                self.degree,
            )
        {
            return Err(Error::DimensionMismatch(
                "permutation entries are not a bijection of the expected range".into(),
            ));
        }
        for v in 0..self.num_vertices {
            for i in 1..=self.degree {
                let mapped_neighbor = a.vertex_perm[self.neighbor(v, i)];
                let neighbor_of_mapped = self.neighbor(a.vertex_perm[v], a.color_perm[i - 1]);
                if mapped_neighbor != neighbor_of_mapped {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The |G| left translations of a Cayley graph, each a
    /// direction-preserving automorphism.
    pub fn left_translations(&self) -> Result<Vec<PermutationAutomorphism>> {
        let meta = self.cayley.as_ref().ok_or(Error::MissingGroupMetadata)?;
        let group = &meta.group;
        Ok((0..group.order())
            .map(|a| {
                let vertex_perm = (0..group.order()).map(|g| group.mul(a, g)).collect();
                PermutationAutomorphism::direction_preserving(vertex_perm, self.degree)
            })
            .collect())
    }

    /// Serialize to the text format: "N d" header, then one "u v color" line
    /// per undirected edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {}", self.num_vertices, self.degree).unwrap();
        for (u, v, color) in self.edges() {
            writeln!(s, "{u} {v} {color}").unwrap();
        }
        s
    }

    /// Parse the text format, validating every coloring invariant. Errors
    /// carry the offending line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty graph file".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse_usize = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
            tok.ok_or(Error::Parse {
                line,
                msg: format!("missing {what}"),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line,
                msg: format!("bad {what}"),
            })
        };
        let n = parse_usize(it.next(), header_line, "vertex count")?;
        let d = parse_usize(it.next(), header_line, "degree")?;
        if n == 0 || d == 0 {
            return Err(Error::Parse {
                line: header_line,
                msg: "vertex count and degree must be positive".into(),
            });
        }
        let mut neighbor = vec![usize::MAX; n * d];
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let u = parse_usize(it.next(), lineno, "source vertex")?;
            let v = parse_usize(it.next(), lineno, "target vertex")?;
            let color = parse_usize(it.next(), lineno, "color")?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex out of range 0..{n}"),
                });
            }
            if color == 0 || color > d {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("color out of range 1..{d}"),
                });
            }
            for (a, b) in [(u, v), (v, u)] {
                let slot = &mut neighbor[a * d + (color - 1)];
                if *slot != usize::MAX && *slot != b {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex {a} already has a color-{color} edge"),
                    });
                }
                *slot = b;
            }
        }
        if let Some(pos) = neighbor.iter().position(|&x| x == usize::MAX) {
            return Err(Error::Parse {
                line: header_line,
                msg: format!(
                    "vertex {} is missing its color-{} edge",
                    pos / d,
                    pos % d + 1
                ),
            });
        }
        ColoredGraph::new(n, d, neighbor)
    }
}

fn is_bijection(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.iter().all(|&x| {
        if x < n && !seen[x] {
            seen[x] = true;
            true
        } else {
            false
        }
    })
}
