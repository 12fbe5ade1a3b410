//! Simple undirected graphs, BFS distances, girth and small-graph isomorphism.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Marker stored in BFS tables for vertices not reachable from the source.
pub const UNREACHABLE: u32 = u32::MAX;

/// Largest vertex count accepted by [`find_isomorphism`].
pub const MAX_ISOMORPHISM_VERTICES: usize = 16;

/// A simple undirected graph on the vertex set `0..n`.
///
/// Edges are stored normalized (`u < v`), sorted and deduplicated; adjacency
/// lists are sorted. The value is immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing and deduplicating pairs.
    ///
    /// Rejects `n == 0`, out-of-range endpoints and self-loops.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::Input("a graph needs at least one vertex".into()));
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, normalized))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// Trusted constructor: every pair must already satisfy `u < v < n`.
    pub(crate) fn from_normalized(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Sorted list of normalized edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Hop counts from `source`; unreachable vertices hold [`UNREACHABLE`].
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        self.bfs_into(source, &mut dist, &mut VecDeque::new());
        dist
    }

    fn bfs_into(&self, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
        dist.iter_mut().for_each(|d| *d = UNREACHABLE);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn num_components(&self) -> usize {
        self.components().len()
    }

    /// All-pairs hop distances by one BFS per vertex, `O(n (n + m))`.
    pub fn distances(&self) -> Result<DistanceData> {
        let n = self.n;
        let mut dist = vec![0u32; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            self.bfs_into(s, row, &mut queue);
            if row.contains(&UNREACHABLE) {
                return Err(Error::Domain("graph is not connected".into()));
            }
        }
        Ok(DistanceData::from_table(n, dist))
    }

    /// Length of the shortest cycle, or 0 for a forest.
    ///
    /// Runs a BFS from every vertex and closes a cycle at every non-tree edge;
    /// the minimum over all sources is exact for unweighted graphs.
    pub fn girth(&self) -> usize {
        let n = self.n;
        let mut best = usize::MAX;
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = UNREACHABLE);
            queue.clear();
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                // any cycle closed below depth d has length >= 2d
                if 2 * dist[u] as usize >= best {
                    break 'bfs;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min((dist[u] + dist[w]) as usize + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    /// A graph is a forest iff it has exactly `n - c` edges for `c` components.
    pub fn is_forest(&self) -> bool {
        self.num_edges() + self.num_components() == self.n
    }

    /// Union of edge sets over the common vertex set `0..n`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::Input(format!(
                "cannot unite graphs on {} and {} vertices",
                self.n, other.n
            )));
        }
        let edges = self.edges.iter().chain(&other.edges).copied().collect();
        Ok(Graph::from_normalized(self.n, edges))
    }

    /// Image of the graph under the vertex permutation `map` (`v ↦ map[v]`).
    pub fn relabel(&self, map: &[usize]) -> Result<Graph> {
        check_permutation(map, self.n)?;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (map[u], map[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(Graph::from_normalized(self.n, edges))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::Input("induced subgraph needs at least one vertex".into()));
        }
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n || position[v] != usize::MAX {
                return Err(Error::Input(format!("bad or repeated vertex {v}")));
            }
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (position[u], position[v]);
                (a != usize::MAX && b != usize::MAX).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        Ok(Graph::from_normalized(vertices.len(), edges))
    }

    /// Adjacency rows as bitmasks; only valid for `n <= 64`.
    fn bitmasks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }
}

/// Validates that `map` is a permutation of `0..n`.
pub fn check_permutation(map: &[usize], n: usize) -> Result<()> {
    if map.len() != n {
        return Err(Error::Input(format!(
            "vertex map has length {} but the graph has {n} vertices",
            map.len()
        )));
    }
    let mut hit = vec![false; n];
    for &t in map {
        if t >= n || hit[t] {
            return Err(Error::Input("vertex map is not a bijection".into()));
        }
        hit[t] = true;
    }
    Ok(())
}

/// All-pairs distance table with eccentricities, diameter and radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    diameter: u32,
    radius: u32,
}

impl DistanceData {
    fn from_table(n: usize, dist: Vec<u32>) -> Self {
        let ecc: Vec<u32> = dist
            .chunks(n)
            .map(|row| row.iter().copied().max().unwrap_or(0))
            .collect();
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let radius = ecc.iter().copied().min().unwrap_or(0);
        DistanceData { n, dist, ecc, diameter, radius }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    #[inline]
    pub fn ecc(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }
}

/// Searches for a bijection `f` with `{u, v} ∈ E(a) ⇔ {f(u), f(v)} ∈ E(b)`.
///
/// Backtracking over vertices of `a` in a connectivity-first order; candidates
/// in `b` must match degree and the multiset of neighbor degrees. Limited to
/// [`MAX_ISOMORPHISM_VERTICES`] vertices.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let limit = MAX_ISOMORPHISM_VERTICES;
    if a.n > limit || b.n > limit {
        return Err(Error::UnsupportedSize(format!(
            "isomorphism search supports at most {limit} vertices"
        )));
    }
    if a.n != b.n || a.num_edges() != b.num_edges() {
        return Ok(None);
    }
    let sig_a: Vec<_> = (0..a.n).map(|v| signature(a, v)).collect();
    let sig_b: Vec<_> = (0..b.n).map(|v| signature(b, v)).collect();
    let (mut sorted_a, mut sorted_b) = (sig_a.clone(), sig_b.clone());
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    let order = search_order(a);
    let mut search = Search {
        adj_a: a.bitmasks(),
        adj_b: b.bitmasks(),
        sig_a,
        sig_b,
        order,
        map: vec![usize::MAX; a.n],
        used: vec![false; b.n],
    };
    Ok(search.extend(0).then_some(search.map))
}

fn signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Max-degree start, then repeatedly the vertex with most already-placed neighbors.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut placed = vec![false; g.n];
    let mut links = vec![0usize; g.n];
    let mut order = Vec::with_capacity(g.n);
    for _ in 0..g.n {
        let next = (0..g.n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Search {
    adj_a: Vec<u64>,
    adj_b: Vec<u64>,
    sig_a: Vec<(usize, Vec<usize>)>,
    sig_b: Vec<(usize, Vec<usize>)>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.adj_b.len() {
            if self.used[w] || self.sig_a[v] != self.sig_b[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&x| {
                let in_a = self.adj_a[v] >> x & 1;
                let in_b = self.adj_b[w] >> self.map[x] & 1;
                in_a == in_b
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

/// Checks that `map` carries the edge set of `a` exactly onto that of `b`.
pub fn is_isomorphism(a: &Graph, b: &Graph, map: &[usize]) -> bool {
    a.n == b.n && a.relabel(map).is_ok_and(|image| image.edges == b.edges)
}
