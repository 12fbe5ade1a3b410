//! Trees: Prüfer generation, stems, diametrical paths and the induced-subtree
//! decomposition of the eccentric graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eccentric::eccentric_graph_from;
use crate::error::{Error, Result};
use crate::graph::{DistanceData, Graph};

/// Largest `n` accepted by [`enumerate_trees`]; `8^6 = 262,144` labeled trees.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// A connected acyclic [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.num_edges() + 1 != graph.num_vertices() || !graph.is_connected() {
            return Err(Error::Input("graph is not a tree".into()));
        }
        Ok(Tree { graph })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Tree::new(Graph::new(n, edges)?)
    }

    /// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
    pub fn from_prufer(sequence: &[usize], n: usize) -> Result<Self> {
        if n < 2 || sequence.len() + 2 != n {
            return Err(Error::Input(format!(
                "a Prüfer sequence for {n} vertices must have length {}",
                n.saturating_sub(2)
            )));
        }
        if let Some(&bad) = sequence.iter().find(|&&x| x >= n) {
            return Err(Error::Input(format!("Prüfer entry {bad} is outside 0..{n}")));
        }
        Ok(Tree { graph: decode_prufer(sequence, n) })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.graph.degree(v) == 1
    }

    /// A tree is a path exactly when no vertex has degree above two.
    pub fn is_path(&self) -> bool {
        self.graph.max_degree() <= 2
    }

    pub fn distances(&self) -> DistanceData {
        self.graph.distances().expect("trees are connected")
    }
}

fn decode_prufer(sequence: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let leaf = (0..n).find(|&j| degree[j] == 1).expect("a leaf always remains");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut last = (0..n).filter(|&j| degree[j] == 1);
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    edges.push((u, v));
    Graph::from_normalized(n, edges)
}

/// Uniformly random labeled tree on `n` vertices; deterministic in `(n, seed)`.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree> {
    if n < 2 {
        return Err(Error::Input("random trees need at least two vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Tree::from_prufer(&sequence, n)
}

/// Iterator over labeled trees, one per Prüfer sequence rank.
#[derive(Clone, Debug)]
pub struct PruferTrees {
    n: usize,
    next: u64,
    end: u64,
}

impl PruferTrees {
    /// Total number of labeled trees on `n` vertices, `n^(n-2)`.
    pub fn count(n: usize) -> u64 {
        (n as u64).pow(n.saturating_sub(2) as u32)
    }

    /// Trees whose Prüfer rank lies in `start..end`; used to split sweeps.
    pub fn range(n: usize, start: u64, end: u64) -> Result<Self> {
        check_enumeration_size(n)?;
        let total = Self::count(n);
        Ok(PruferTrees { n, next: start.min(total), end: end.min(total) })
    }

    fn sequence_for(&self, mut rank: u64) -> Vec<usize> {
        let n = self.n as u64;
        let mut seq = vec![0usize; self.n - 2];
        for slot in seq.iter_mut().rev() {
            *slot = (rank % n) as usize;
            rank /= n;
        }
        seq
    }
}

impl Iterator for PruferTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.next >= self.end {
            return None;
        }
        let seq = self.sequence_for(self.next);
        self.next += 1;
        Some(Tree { graph: decode_prufer(&seq, self.n) })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for PruferTrees {}

fn check_enumeration_size(n: usize) -> Result<()> {
    if !(2..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "tree enumeration supports 2..={MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )));
    }
    Ok(())
}

/// Every labeled tree on `n` vertices exactly once.
pub fn enumerate_trees(n: usize) -> Result<PruferTrees> {
    PruferTrees::range(n, 0, PruferTrees::count(n))
}

/// Path from `leaf` to the nearest vertex of degree greater than two, both ends included.
pub fn stem_at(t: &Tree, leaf: usize) -> Result<Vec<usize>> {
    let g = t.graph();
    if leaf >= g.num_vertices() || g.degree(leaf) != 1 {
        return Err(Error::Input(format!("vertex {leaf} is not a leaf")));
    }
    if t.is_path() {
        return Err(Error::NoStem);
    }
    let mut stem = vec![leaf];
    let mut prev = leaf;
    let mut cur = g.neighbors(leaf)[0];
    while g.degree(cur) == 2 {
        stem.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    // a leaf here would make the whole tree a path
    debug_assert!(g.degree(cur) > 2);
    stem.push(cur);
    Ok(stem)
}

/// A longest shortest path, stored so that the first vertex is below the last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiametricalPath {
    vertices: Vec<usize>,
}

impl DiametricalPath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Vertices of the unique tree path from `u` to `v`.
fn tree_path(t: &Tree, d: &DistanceData, u: usize, v: usize) -> Vec<usize> {
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = t
            .graph()
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| d.get(u, w) + 1 == d.get(u, cur))
            .expect("a tree path always steps closer");
        path.push(cur);
    }
    path.reverse();
    path
}

fn paths_with(t: &Tree, d: &DistanceData) -> Vec<DiametricalPath> {
    let n = t.num_vertices();
    let diameter = d.diameter();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d.get(u, v) == diameter {
                out.push(DiametricalPath { vertices: tree_path(t, d, u, v) });
            }
        }
    }
    out
}

/// Every diametrical path, one per unordered endpoint pair, sorted.
pub fn diametrical_paths(t: &Tree) -> Vec<DiametricalPath> {
    paths_with(t, &t.distances())
}

/// Vertex subset of a tree together with the tree it induces.
///
/// Vertex `i` of [`InducedSubtree::tree`] is original vertex `vertices()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubtree {
    vertices: Vec<usize>,
    tree: Tree,
}

impl InducedSubtree {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    /// Maps an edge of [`InducedSubtree::tree`] back to original labels.
    pub fn lift(&self, (u, v): (usize, usize)) -> (usize, usize) {
        let (a, b) = (self.vertices[u], self.vertices[v]);
        (a.min(b), a.max(b))
    }
}

fn validate_path(t: &Tree, d: &DistanceData, p: &DiametricalPath) -> Result<()> {
    let vs = p.vertices();
    let ok = vs.len() == d.diameter() as usize + 1
        && vs.iter().all(|&v| v < t.num_vertices())
        && vs.windows(2).all(|w| t.graph().has_edge(w[0], w[1]))
        && d.get(vs[0], vs[vs.len() - 1]) == d.diameter();
    if ok {
        Ok(())
    } else {
        Err(Error::Input("path is not a diametrical path of the tree".into()))
    }
}

fn induced_with(
    t: &Tree,
    d: &DistanceData,
    all: &[DiametricalPath],
    p: &DiametricalPath,
) -> Result<InducedSubtree> {
    validate_path(t, d, p)?;
    let (a, b) = p.endpoints();
    let n = t.num_vertices();
    let mut removed = vec![false; n];
    for other in all.iter().filter(|q| *q != p) {
        let (x, y) = other.endpoints();
        for z in [x, y] {
            if z == a || z == b || removed[z] {
                continue;
            }
            let stem = stem_at(t, z)?;
            // the branching vertex closing the stem stays
            for &s in &stem[..stem.len() - 1] {
                removed[s] = true;
            }
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let tree = Tree::new(t.graph().induced_subgraph(&vertices)?)?;
    Ok(InducedSubtree { vertices, tree })
}

/// Subtree left after removing stems at leaves, other than the endpoints of
/// `p`, that end some other diametrical path. Degrees are those of `t`.
pub fn induced_subtree(t: &Tree, p: &DiametricalPath) -> Result<InducedSubtree> {
    let d = t.distances();
    validate_path(t, &d, p)?;
    induced_with(t, &d, &paths_with(t, &d), p)
}

/// Diametrical paths of a tree and the subtree each one induces.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub paths: Vec<DiametricalPath>,
    pub subtrees: Vec<InducedSubtree>,
}

pub fn decompose(t: &Tree) -> TreeDecomposition {
    let d = t.distances();
    let paths = paths_with(t, &d);
    let subtrees = paths
        .iter()
        .map(|p| induced_with(t, &d, &paths, p).expect("paths come from the tree itself"))
        .collect();
    TreeDecomposition { paths, subtrees }
}

/// Outcome of comparing `E(T)` with the union of the induced subtrees' eccentric graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCheck {
    pub holds: bool,
    /// Some edge present in exactly one of the two graphs.
    pub mismatch: Option<(usize, usize)>,
}

/// Lifts each `E(T_i)` into the vertex set of `t`, unites them and compares
/// the result with `E(t)`.
pub fn check_structure_theorem(t: &Tree) -> StructureCheck {
    let d = t.distances();
    let direct = eccentric_graph_from(&d);
    let decomposition = decompose(t);
    let mut lifted = Vec::new();
    for sub in &decomposition.subtrees {
        let local = eccentric_graph_from(&sub.tree().distances());
        lifted.extend(local.edges().iter().map(|&e| sub.lift(e)));
    }
    let union = Graph::from_normalized(t.num_vertices(), lifted);
    let mismatch = symmetric_difference(direct.edges(), union.edges());
    StructureCheck { holds: mismatch.is_none(), mismatch }
}

fn symmetric_difference(a: &[(usize, usize)], b: &[(usize, usize)]) -> Option<(usize, usize)> {
    a.iter()
        .find(|e| b.binary_search(e).is_err())
        .or_else(|| b.iter().find(|e| a.binary_search(e).is_err()))
        .copied()
}

/// 3 for even diameter, 0 for odd diameter with a unique diametrical path, 4 otherwise.
pub fn predicted_tree_girth(t: &Tree) -> usize {
    let d = t.distances();
    if d.diameter() % 2 == 0 {
        3
    } else if diametrical_pair_count(&d) == 1 {
        0
    } else {
        4
    }
}

fn diametrical_pair_count(d: &DistanceData) -> usize {
    let n = d.num_vertices();
    let diameter = d.diameter();
    (0..n).map(|u| (u + 1..n).filter(|&v| d.get(u, v) == diameter).count()).sum()
}

/// True iff no `v1 ~ v2 ~ v3` in `E(T)` has strictly increasing eccentricities,
/// i.e. every vertex's eccentricity is extreme among its `E(T)`-neighbors'.
pub fn check_monotone_exclusion(t: &Tree) -> bool {
    let d = t.distances();
    let e = eccentric_graph_from(&d);
    (0..t.num_vertices()).all(|mid| {
        let here = d.ecc(mid);
        let below = e.neighbors(mid).iter().any(|&w| d.ecc(w) < here);
        let above = e.neighbors(mid).iter().any(|&w| d.ecc(w) > here);
        !(below && above)
    })
}

/// For odd diameter with a single diametrical path `v0 … vL`: `E(T)` is acyclic
/// and every vertex has exactly one `E(T)`-neighbor in `{v0, vL}`.
///
/// Returns `None` when the tree is outside that case.
pub fn check_unique_path_structure(t: &Tree) -> Option<bool> {
    let d = t.distances();
    if d.diameter() % 2 == 0 {
        return None;
    }
    let paths = paths_with(t, &d);
    if paths.len() != 1 {
        return None;
    }
    let (a, b) = paths[0].endpoints();
    let e = eccentric_graph_from(&d);
    let single_end = (0..t.num_vertices())
        .all(|v| usize::from(e.has_edge(v, a)) + usize::from(e.has_edge(v, b)) == 1);
    Some(e.is_forest() && single_end)
}

/// Any two diametrical paths of a tree share a vertex.
pub fn diametrical_paths_intersect(t: &Tree) -> bool {
    let paths = diametrical_paths(t);
    paths.iter().enumerate().all(|(i, p)| {
        paths[i + 1..].iter().all(|q| p.vertices().iter().any(|&v| q.contains(v)))
    })
}
