//! Brute-force graph oracles: known strongly regular families, direct
//! verification of strong regularity, exact closed-walk traces, and
//! rotation classes of prime-length closed walks.

use crate::feasibility::SrgParams;
use crate::primes::is_prime;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is not regular: vertex {u} has degree {degree_u} but vertex {v} has degree {degree_v}")]
    NotRegular {
        u: usize,
        degree_u: usize,
        v: usize,
        degree_v: usize,
    },
    #[error(
        "graph is not strongly regular: {relation} vertices {u} and {v} share \
         {found} common neighbours, expected {expected}"
    )]
    NotStronglyRegular {
        u: usize,
        v: usize,
        relation: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("complete and empty graphs are excluded (degree bound 0 < k < n-1 fails)")]
    TrivialGraph,
    #[error("walk enumeration would exceed the budget of {budget} steps")]
    BudgetExceeded { budget: u64 },
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParameter(String),
}

/// Simple undirected graph on vertices `0..n`, stored as dense adjacency
/// rows (O(1) membership, linear row iteration).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            adj: vec![vec![false; vertex_count]; vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut graph = Self::new(vertex_count);
        for (u, v) in edges {
            graph.add_edge(u, v);
        }
        graph
    }

    /// Inserts the undirected edge `{u, v}`. Panics on self-loops and
    /// out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].iter().filter(|&&a| a).count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u]
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u][v] {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Flips every non-diagonal adjacency.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut graph = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u][v] {
                    graph.add_edge(u, v);
                }
            }
        }
        graph
    }

    fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.adj[u]
            .iter()
            .zip(&self.adj[v])
            .filter(|(&a, &b)| a && b)
            .count()
    }

    /// Checks strong regularity by exhaustive pair counting and returns the
    /// witnessed parameters.
    pub fn verify_srg(&self) -> Result<SrgParams, GraphError> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(GraphError::TrivialGraph);
        }
        let k = self.degree(0);
        for v in 1..n {
            let dv = self.degree(v);
            if dv != k {
                return Err(GraphError::NotRegular {
                    u: 0,
                    degree_u: k,
                    v,
                    degree_v: dv,
                });
            }
        }
        if k == 0 || k == n - 1 {
            return Err(GraphError::TrivialGraph);
        }
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..n {
            for v in u + 1..n {
                let found = self.common_neighbours(u, v);
                let (slot, relation) = if self.adj[u][v] {
                    (&mut lambda, "adjacent")
                } else {
                    (&mut mu, "nonadjacent")
                };
                match *slot {
                    None => *slot = Some(found),
                    Some(expected) if expected != found => {
                        return Err(GraphError::NotStronglyRegular {
                            u,
                            v,
                            relation,
                            found,
                            expected,
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        // 0 < k < n-1 guarantees both an adjacent and a nonadjacent pair.
        let params = SrgParams::new(
            n as u64,
            k as u64,
            lambda.expect("k > 0 forces an adjacent pair") as u64,
            mu.expect("k < n-1 forces a nonadjacent pair") as u64,
        );
        // Double counting of paths leaving a neighbourhood makes this an
        // identity for every strongly regular graph.
        assert!(params.identity_ok());
        Ok(params)
    }

    /// `t_0 ..= t_L` with `t_l` the number of closed walks of length `l`,
    /// i.e. the trace of the l-th adjacency power, in exact integers.
    pub fn trace_walks(&self, max_len: usize) -> Vec<BigInt> {
        let n = self.vertex_count();
        let mut traces = Vec::with_capacity(max_len + 1);
        traces.push(BigInt::from(n as u64)); // trace of the identity
        if max_len == 0 {
            return traces;
        }
        // power[u][v] = number of walks of the current length from u to v
        let mut power: Vec<Vec<BigInt>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| if u == v { BigInt::from(1) } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        for _ in 1..=max_len {
            let mut next = vec![vec![BigInt::zero(); n]; n];
            for u in 0..n {
                for w in 0..n {
                    if power[u][w].is_zero() {
                        continue;
                    }
                    for v in self.neighbors(w) {
                        next[u][v] += &power[u][w];
                    }
                }
            }
            power = next;
            let trace = (0..n).map(|u| power[u][u].clone()).sum();
            traces.push(trace);
        }
        traces
    }

    /// Enumerates all closed walks of prime length `p` and groups them
    /// under cyclic rotation of the vertex sequence. In a simple graph
    /// every class has exactly `p` members: a rotation period `d < p`
    /// would divide `p`, forcing `d = 1` and hence a self-loop.
    pub fn rotation_classes(&self, p: u64, budget: u64) -> Result<RotationClassStats, GraphError> {
        assert!(is_prime(p), "rotation classes require a prime walk length");
        let n = self.vertex_count();
        let len = p as usize;
        let max_degree = (0..n).map(|u| self.degree(u)).max().unwrap_or(0);
        let estimate = (n as u128).checked_mul(pow_u128(max_degree as u128, len - 1));
        match estimate {
            Some(e) if e <= budget as u128 => {}
            _ if max_degree == 0 => {}
            _ => return Err(GraphError::BudgetExceeded { budget }),
        }

        let mut classes: HashMap<Vec<usize>, u64> = HashMap::new();
        let mut total_walks: u64 = 0;
        let mut steps: u64 = 0;
        let mut walk = Vec::with_capacity(len);
        for start in 0..n {
            walk.push(start);
            self.extend_walk(&mut walk, len, budget, &mut steps, &mut |w| {
                *classes.entry(min_rotation(w)).or_insert(0) += 1;
                total_walks += 1;
            })?;
            walk.pop();
        }
        let class_count = classes.len() as u64;
        let all_classes_size_p = classes.values().all(|&size| size == p);
        Ok(RotationClassStats {
            walk_length: p,
            total_walks,
            class_count,
            all_classes_size_p,
        })
    }

    fn extend_walk(
        &self,
        walk: &mut Vec<usize>,
        len: usize,
        budget: u64,
        steps: &mut u64,
        record: &mut impl FnMut(&[usize]),
    ) -> Result<(), GraphError> {
        if walk.len() == len {
            if self.adj[walk[len - 1]][walk[0]] {
                record(walk);
            }
            return Ok(());
        }
        let last = *walk.last().expect("walk starts nonempty");
        for next in self.neighbors(last) {
            *steps += 1;
            if *steps > budget {
                return Err(GraphError::BudgetExceeded { budget });
            }
            walk.push(next);
            self.extend_walk(walk, len, budget, steps, record)?;
            walk.pop();
        }
        Ok(())
    }

    /// Plain text edge list: first line `n m`, then one `u v` line per edge.
    pub fn write_edge_list(&self, mut out: impl Write) -> io::Result<()> {
        let edges = self.edges();
        writeln!(out, "{} {}", self.vertex_count(), edges.len())?;
        for (u, v) in edges {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn edge_list_string(&self) -> String {
        let mut buffer = Vec::new();
        self.write_edge_list(&mut buffer).expect("write to Vec");
        String::from_utf8(buffer).expect("ascii output")
    }
}

fn pow_u128(base: u128, exp: usize) -> u128 {
    if base == 0 {
        return if exp == 0 { 1 } else { 0 };
    }
    let mut result: u128 = 1;
    for _ in 0..exp {
        result = result.saturating_mul(base);
    }
    result
}

/// Lexicographically smallest cyclic rotation, the canonical class label.
fn min_rotation(walk: &[usize]) -> Vec<usize> {
    let len = walk.len();
    (0..len)
        .map(|shift| {
            let mut rotated = Vec::with_capacity(len);
            rotated.extend_from_slice(&walk[shift..]);
            rotated.extend_from_slice(&walk[..shift]);
            rotated
        })
        .min()
        .expect("walks are nonempty")
}

/// Statistics of the rotation equivalence classes of closed walks of prime
/// length `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RotationClassStats {
    pub walk_length: u64,
    pub total_walks: u64,
    pub class_count: u64,
    pub all_classes_size_p: bool,
}

/// Named constructions used as oracle fixtures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Kneser graph K(5,2): parameters (10, 3, 0, 1).
    Petersen,
    /// Quadratic-residue graph on a prime q = 1 (mod 4).
    Paley(u64),
    /// 2-subsets of an m-set, adjacent when they intersect; m >= 4.
    Triangular(u32),
    /// Rook's graph on an m x m grid; m >= 2.
    Lattice(u32),
    /// The 5-cycle, the smallest conference graph.
    Cycle5,
    ComplementOf(Box<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Paley(q) => paley(*q),
            FamilySpec::Triangular(m) => triangular(*m),
            FamilySpec::Lattice(m) => lattice(*m),
            FamilySpec::Cycle5 => Ok(cycle(5)),
            FamilySpec::ComplementOf(inner) => Ok(inner.build()?.complement()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Paley(q) => write!(f, "paley:{q}"),
            FamilySpec::Triangular(m) => write!(f, "triangular:{m}"),
            FamilySpec::Lattice(m) => write!(f, "lattice:{m}"),
            FamilySpec::Cycle5 => write!(f, "cycle5"),
            FamilySpec::ComplementOf(inner) => write!(f, "complement:{inner}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let invalid = |msg: String| GraphError::InvalidFamilyParameter(msg);
        match s {
            "petersen" => return Ok(FamilySpec::Petersen),
            "cycle5" => return Ok(FamilySpec::Cycle5),
            _ => {}
        }
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("unknown family '{s}'")))?;
        match name {
            "paley" => Ok(FamilySpec::Paley(arg.parse().map_err(|_| {
                invalid(format!("paley expects an integer, got '{arg}'"))
            })?)),
            "triangular" => Ok(FamilySpec::Triangular(arg.parse().map_err(|_| {
                invalid(format!("triangular expects an integer, got '{arg}'"))
            })?)),
            "lattice" => Ok(FamilySpec::Lattice(arg.parse().map_err(|_| {
                invalid(format!("lattice expects an integer, got '{arg}'"))
            })?)),
            "complement" => Ok(FamilySpec::ComplementOf(Box::new(arg.parse()?))),
            _ => Err(invalid(format!("unknown family '{name}'"))),
        }
    }
}

/// Builds the named fixture graph.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.build()
}

fn two_subsets(m: usize) -> Vec<(usize, usize)> {
    let mut subsets = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            subsets.push((a, b));
        }
    }
    subsets
}

fn petersen() -> Graph {
    // Kneser(5,2): 2-subsets of a 5-set, adjacent when disjoint.
    let vertices = two_subsets(5);
    let n = vertices.len();
    let mut graph = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = vertices[i];
            let (c, d) = vertices[j];
            if a != c && a != d && b != c && b != d {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

fn paley(q: u64) -> Result<Graph, GraphError> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(GraphError::InvalidFamilyParameter(format!(
            "paley requires a prime q = 1 (mod 4), got {q}"
        )));
    }
    let n = q as usize;
    // Nonzero quadratic residues; q = 1 (mod 4) makes -1 a residue, so the
    // difference relation is symmetric.
    let mut residue = vec![false; n];
    for x in 1..n {
        residue[x * x % n] = true;
    }
    let mut graph = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if residue[(v - u) % n] {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(graph)
}

fn triangular(m: u32) -> Result<Graph, GraphError> {
    if m < 4 {
        return Err(GraphError::InvalidFamilyParameter(format!(
            "triangular requires m >= 4, got {m}"
        )));
    }
    let vertices = two_subsets(m as usize);
    let n = vertices.len();
    let mut graph = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = vertices[i];
            let (c, d) = vertices[j];
            if a == c || a == d || b == c || b == d {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}

fn lattice(m: u32) -> Result<Graph, GraphError> {
    if m < 2 {
        return Err(GraphError::InvalidFamilyParameter(format!(
            "lattice requires m >= 2, got {m}"
        )));
    }
    let m = m as usize;
    let mut graph = Graph::new(m * m);
    for u in 0..m * m {
        for v in u + 1..m * m {
            let (row_u, col_u) = (u / m, u % m);
            let (row_v, col_v) = (v / m, v % m);
            if row_u == row_v || col_u == col_v {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(graph)
}

fn cycle(n: usize) -> Graph {
    let mut graph = Graph::new(n);
    for u in 0..n {
        graph.add_edge(u, (u + 1) % n);
    }
    graph
}
