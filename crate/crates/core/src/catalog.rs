//! Named graph families with fixed labelings, and the eccentric graphs they
//! are known to have.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::ProductIndexMap;

/// A named family with its parameters.
///
/// Labelings: paths and cycles in natural order; star center 0; double star
/// centers 0 and 1 with the `s` leaves of 0 listed first; `H_t` triangle
/// `{0,1,2}` with pendants `3..3+t` on 0 and `3+t..3+2t` on 1; `K_{s,t}` parts
/// `0..s` and `s..s+t`; grids and hypercubes in row-major tuple order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, `n >= 1`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `S_n`: a center and `n >= 1` leaves.
    Star(usize),
    /// `S_{s,t}`, `s, t >= 1`.
    DoubleStar(usize, usize),
    /// `K_n`, `n >= 1`.
    Complete(usize),
    /// `K_{s,t}`, `s, t >= 1`.
    CompleteBipartite(usize, usize),
    /// `H_t`, `t >= 0`.
    HGraph(usize),
    /// `P_m □ P_n`, `m, n >= 2`.
    Grid(usize, usize),
    /// `P_2^k`, `k >= 1`.
    Hypercube(usize),
}

fn bad(msg: &str) -> Error {
    Error::Input(msg.to_string())
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn clique_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            edges.push((u, v));
        }
    }
    edges
}

fn grid_graph(sizes: &[usize]) -> Result<Graph> {
    let map = ProductIndexMap::new(sizes)?;
    let mut edges = Vec::new();
    for index in 0..map.len() {
        for f in 0..sizes.len() {
            if map.coordinate(index, f) + 1 < sizes[f] {
                edges.push((index, index + map.stride(f)));
            }
        }
    }
    Graph::new(map.len(), edges)
}

pub fn build_family(spec: FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Path(n) => {
            if n == 0 {
                return Err(bad("path needs at least one vertex"));
            }
            Graph::new(n, path_edges(n))
        }
        Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle needs at least three vertices"));
            }
            let mut edges = path_edges(n);
            edges.push((0, n - 1));
            Graph::new(n, edges)
        }
        Star(n) => {
            if n == 0 {
                return Err(bad("star needs at least one leaf"));
            }
            Graph::new(n + 1, (1..=n).map(|i| (0, i)))
        }
        DoubleStar(s, t) => {
            if s == 0 || t == 0 {
                return Err(bad("double star needs s, t >= 1"));
            }
            let mut edges = vec![(0, 1)];
            edges.extend((2..2 + s).map(|i| (0, i)));
            edges.extend((2 + s..2 + s + t).map(|i| (1, i)));
            Graph::new(2 + s + t, edges)
        }
        Complete(n) => {
            if n == 0 {
                return Err(bad("complete graph needs at least one vertex"));
            }
            Graph::new(n, clique_edges(&(0..n).collect::<Vec<_>>()))
        }
        CompleteBipartite(s, t) => {
            if s == 0 || t == 0 {
                return Err(bad("complete bipartite graph needs s, t >= 1"));
            }
            let edges = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v)));
            Graph::new(s + t, edges)
        }
        HGraph(t) => {
            let mut edges = vec![(0, 1), (0, 2), (1, 2)];
            edges.extend((3..3 + t).map(|i| (0, i)));
            edges.extend((3 + t..3 + 2 * t).map(|i| (1, i)));
            Graph::new(3 + 2 * t, edges)
        }
        Grid(m, n) => {
            if m < 2 || n < 2 {
                return Err(bad("grid sides must be at least 2"));
            }
            grid_graph(&[m, n])
        }
        Hypercube(k) => {
            if k == 0 || k > 16 {
                return Err(bad("hypercube dimension must be in 1..=16"));
            }
            grid_graph(&vec![2; k])
        }
    }
}

/// The eccentric graph of `spec`, labeled by the family's own labels.
///
/// `E(S_n) = K_{n+1}` and the exact double star and `H` labelings for paths
/// are derived here rather than quoted; the tests confirm them by brute force.
pub fn expected_eccentric(spec: FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Path(n) if n <= 3 => build_family(Complete(n)),
        Path(n) if n % 2 == 0 => {
            let last = n - 1;
            let mut edges = vec![(0, last)];
            edges.extend((n / 2..=n - 2).map(|i| (0, i)));
            edges.extend((1..n / 2).map(|i| (i, last)));
            Graph::new(n, edges)
        }
        Path(n) => {
            let (mid, last) = ((n - 1) / 2, n - 1);
            let mut edges = vec![(0, mid), (0, last), (mid, last)];
            edges.extend(((n + 1) / 2..=n - 2).map(|i| (0, i)));
            edges.extend((1..=(n - 3) / 2).map(|i| (i, last)));
            Graph::new(n, edges)
        }
        Cycle(n) => {
            build_family(spec)?;
            let edges: Vec<(usize, usize)> = if n % 2 == 0 {
                (0..n / 2).map(|i| (i, i + n / 2)).collect()
            } else {
                (0..n).map(|i| (i, (i + (n - 1) / 2) % n)).collect()
            };
            Graph::new(n, edges)
        }
        Complete(_) => build_family(spec),
        Star(n) => build_family(Complete(n + 1)).and_then(|g| {
            build_family(spec)?;
            Ok(g)
        }),
        // K_{1,t} and K_{s,1} are stars
        CompleteBipartite(s, t) if s == 1 || t == 1 => {
            build_family(spec)?;
            build_family(Complete(s + t))
        }
        CompleteBipartite(s, t) => {
            build_family(spec)?;
            let mut edges = clique_edges(&(0..s).collect::<Vec<_>>());
            edges.extend(clique_edges(&(s..s + t).collect::<Vec<_>>()));
            Graph::new(s + t, edges)
        }
        _ => Err(bad("no closed-form eccentric graph for this family")),
    }
}
