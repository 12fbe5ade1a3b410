//! Cartesian and Kronecker graph products and the eccentricity facts about them.
//!
//! Product vertices are tuples `(x_1, …, x_k)` flattened row-major with the
//! first factor most significant; [`ProductIndexMap`] is the only place that
//! convention lives.

use std::collections::VecDeque;

use crate::eccentric::{eccentric_graph, eccentric_graph_from, EccentricityProfile};
use crate::error::{Error, Result};
use crate::graph::{DistanceData, Graph, UNREACHABLE};
use crate::tree::Tree;

/// Default cap on the number of vertices of a product graph.
pub const DEFAULT_PRODUCT_CAP: usize = 20_000;

/// Mixed-radix bijection between tuples and flat vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndexMap {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl ProductIndexMap {
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::Input("factor sizes must be positive".into()));
        }
        let mut strides = vec![1; sizes.len()];
        let mut len: usize = 1;
        for i in (0..sizes.len()).rev() {
            strides[i] = len;
            len = len
                .checked_mul(sizes[i])
                .ok_or_else(|| Error::Resource("product size overflows".into()))?;
        }
        Ok(ProductIndexMap { sizes: sizes.to_vec(), strides, len })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of product vertices.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.sizes.len());
        tuple.iter().zip(&self.strides).map(|(x, s)| x * s).sum()
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        self.sizes
            .iter()
            .zip(&self.strides)
            .map(|(&size, &stride)| index / stride % size)
            .collect()
    }

    pub fn coordinate(&self, index: usize, factor: usize) -> usize {
        index / self.strides[factor] % self.sizes[factor]
    }

    pub fn stride(&self, factor: usize) -> usize {
        self.strides[factor]
    }
}

fn index_map(factors: &[&Graph], cap: usize) -> Result<ProductIndexMap> {
    let sizes: Vec<usize> = factors.iter().map(|g| g.num_vertices()).collect();
    let map = ProductIndexMap::new(&sizes)?;
    if map.len() > cap {
        return Err(Error::Resource(format!(
            "product has {} vertices, above the cap of {cap}",
            map.len()
        )));
    }
    Ok(map)
}

/// Cartesian product with the default vertex cap.
pub fn cartesian_product(factors: &[&Graph]) -> Result<(Graph, ProductIndexMap)> {
    cartesian_product_capped(factors, DEFAULT_PRODUCT_CAP)
}

/// Tuples are adjacent when they differ in exactly one coordinate, by an edge
/// of that factor.
pub fn cartesian_product_capped(factors: &[&Graph], cap: usize) -> Result<(Graph, ProductIndexMap)> {
    if factors.len() < 2 {
        return Err(Error::Input("a product needs at least two factors".into()));
    }
    for g in factors {
        if g.num_vertices() < 2 || !g.is_connected() {
            return Err(Error::Input(
                "product factors must be connected with at least two vertices".into(),
            ));
        }
    }
    let map = index_map(factors, cap)?;
    let mut edges = Vec::new();
    for index in 0..map.len() {
        for (f, g) in factors.iter().enumerate() {
            let x = map.coordinate(index, f);
            let base = index - x * map.stride(f);
            for &y in g.neighbors(x) {
                if y > x {
                    edges.push((index, base + y * map.stride(f)));
                }
            }
        }
    }
    Ok((Graph::from_normalized(map.len(), edges), map))
}

/// Kronecker (tensor) product: adjacent iff adjacent in both coordinates.
pub fn kronecker_product_graph(a: &Graph, b: &Graph) -> Result<Graph> {
    kronecker_product_graph_capped(a, b, DEFAULT_PRODUCT_CAP)
}

pub fn kronecker_product_graph_capped(a: &Graph, b: &Graph, cap: usize) -> Result<Graph> {
    if a.num_vertices() < 2 || b.num_vertices() < 2 {
        return Err(Error::Input("kronecker factors need at least two vertices".into()));
    }
    let map = index_map(&[a, b], cap)?;
    let mut edges = Vec::new();
    for &(u1, v1) in a.edges() {
        for &(u2, v2) in b.edges() {
            edges.push(ordered(map.encode(&[u1, u2]), map.encode(&[v1, v2])));
            edges.push(ordered(map.encode(&[u1, v2]), map.encode(&[v1, u2])));
        }
    }
    Ok(Graph::from_normalized(map.len(), edges))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn factor_distances(factors: &[&Graph]) -> Result<Vec<DistanceData>> {
    factors.iter().map(|g| g.distances()).collect()
}

/// Verifies, by BFS on the product, that distances and eccentricities are the
/// sums of the factor values for every pair of product vertices.
///
/// Runs one BFS per source without storing the full product table.
pub fn check_additivity(factors: &[&Graph]) -> Result<bool> {
    let (product, map) = cartesian_product(factors)?;
    let fd = factor_distances(factors)?;
    let n = product.num_vertices();
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        bfs(&product, s, &mut dist, &mut queue);
        let st = map.decode(s);
        let mut ecc = 0;
        for (t, &d) in dist.iter().enumerate() {
            let expected: u32 = (0..fd.len()).map(|f| fd[f].get(st[f], map.coordinate(t, f))).sum();
            if d != expected {
                return Ok(false);
            }
            ecc = ecc.max(d);
        }
        let expected_ecc: u32 = (0..fd.len()).map(|f| fd[f].ecc(st[f])).sum();
        if ecc != expected_ecc {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bfs(g: &Graph, s: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
    dist.iter_mut().for_each(|d| *d = UNREACHABLE);
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

/// For all product vertices `u, v`: `v` is eccentric to `u` in the product iff
/// `v_i` is eccentric to `u_i` in every factor.
pub fn check_componentwise_eccentric(factors: &[&Graph]) -> Result<bool> {
    let (product, map) = cartesian_product(factors)?;
    let profile = EccentricityProfile::new(&product)?;
    let fd = factor_distances(factors)?;
    let n = product.num_vertices();
    for u in 0..n {
        let ut = map.decode(u);
        for v in 0..n {
            let componentwise = (0..fd.len()).all(|f| {
                let vf = map.coordinate(v, f);
                fd[f].get(vf, ut[f]) == fd[f].ecc(ut[f])
            });
            if profile.is_eccentric(v, u) != componentwise {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A path `u - v - w` in the eccentric graph of one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EccentricTriple {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl EccentricTriple {
    pub fn new(u: usize, v: usize, w: usize) -> Self {
        EccentricTriple { u, v, w }
    }
}

/// Builds the four product vertices of the 4-cycle guaranteed when factor `s`
/// has an `E`-path whose middle has the largest eccentricity and factor `t` one
/// whose middle has the smallest.
///
/// `fillers` supplies, for each remaining factor in order, an edge `(u_i, v_i)`
/// of its eccentric graph with `e(u_i) >= e(v_i)`. The result is
/// `[a, b, c, d]` as flat indices, adjacent cyclically in `E(product)`.
pub fn four_cycle_witness(
    factors: &[&Graph],
    s: usize,
    s_triple: EccentricTriple,
    t: usize,
    t_triple: EccentricTriple,
    fillers: &[(usize, usize)],
) -> Result<[usize; 4]> {
    let k = factors.len();
    if s >= k || t >= k || s == t {
        return Err(Error::Precondition("s and t must be distinct factor indices".into()));
    }
    if fillers.len() + 2 != k {
        return Err(Error::Precondition(format!(
            "expected {} filler edges, got {}",
            k - 2,
            fillers.len()
        )));
    }
    let fd = factor_distances(factors)?;
    let adjacent = |f: usize, a: usize, b: usize| {
        let d = &fd[f];
        let n = d.num_vertices();
        a < n && b < n && a != b && d.get(a, b) == d.ecc(a).min(d.ecc(b))
    };
    let triple_ok = |f: usize, tr: EccentricTriple| adjacent(f, tr.u, tr.v) && adjacent(f, tr.v, tr.w);

    if !triple_ok(s, s_triple) || fd[s].ecc(s_triple.v) < fd[s].ecc(s_triple.u).max(fd[s].ecc(s_triple.w)) {
        return Err(Error::Precondition(
            "factor s needs an E-path whose middle has maximal eccentricity".into(),
        ));
    }
    if !triple_ok(t, t_triple) || fd[t].ecc(t_triple.v) > fd[t].ecc(t_triple.u).min(fd[t].ecc(t_triple.w)) {
        return Err(Error::Precondition(
            "factor t needs an E-path whose middle has minimal eccentricity".into(),
        ));
    }
    let others: Vec<usize> = (0..k).filter(|&f| f != s && f != t).collect();
    for (&f, &(u, v)) in others.iter().zip(fillers) {
        if !adjacent(f, u, v) || fd[f].ecc(u) < fd[f].ecc(v) {
            return Err(Error::Precondition(format!(
                "filler for factor {f} must be an E-edge (u, v) with e(u) >= e(v)"
            )));
        }
    }

    let map = ProductIndexMap::new(&factors.iter().map(|g| g.num_vertices()).collect::<Vec<_>>())?;
    let build = |xs: usize, xt: usize, filler_upper: bool| {
        let mut tuple = vec![0; k];
        tuple[s] = xs;
        tuple[t] = xt;
        for (&f, &(u, v)) in others.iter().zip(fillers) {
            tuple[f] = if filler_upper { u } else { v };
        }
        map.encode(&tuple)
    };
    let (su, sv, sw) = (s_triple.u, s_triple.v, s_triple.w);
    let (tu, tv, tw) = (t_triple.u, t_triple.v, t_triple.w);
    Ok([
        build(su, tv, false),
        build(sv, tw, true),
        build(sw, tv, false),
        build(sv, tu, true),
    ])
}

fn constant_eccentricity(g: &Graph) -> Result<()> {
    let d = g.distances()?;
    if d.radius() != d.diameter() {
        return Err(Error::Precondition("factor is not self-centered".into()));
    }
    Ok(())
}

/// For self-centered `a` and `b`, `E(a □ b)` equals `E(a) × E(b)` as labeled graphs.
pub fn check_kronecker_correspondence(a: &Graph, b: &Graph) -> Result<bool> {
    constant_eccentricity(a)?;
    constant_eccentricity(b)?;
    let (product, _) = cartesian_product(&[a, b])?;
    let lhs = eccentric_graph(&product)?;
    let rhs = kronecker_product_graph(&eccentric_graph(a)?, &eccentric_graph(b)?)?;
    Ok(lhs == rhs)
}

/// Girth prediction for general products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductGirthPrediction {
    Girth(usize),
    NotCovered,
}

/// 3 when every factor has eccentric girth 3; 4 when at least two factors
/// have eccentric girth at least 3 (and not all are 3); otherwise not covered.
pub fn predict_girth_from_factor_girths(girths: &[usize]) -> ProductGirthPrediction {
    if !girths.is_empty() && girths.iter().all(|&g| g == 3) {
        ProductGirthPrediction::Girth(3)
    } else if girths.iter().filter(|&&g| g >= 3).count() >= 2 {
        ProductGirthPrediction::Girth(4)
    } else {
        ProductGirthPrediction::NotCovered
    }
}

pub fn predicted_product_girth_general(factors: &[&Graph]) -> Result<ProductGirthPrediction> {
    let girths = factors
        .iter()
        .map(|g| Ok(eccentric_graph(g)?.girth()))
        .collect::<Result<Vec<_>>>()?;
    Ok(predict_girth_from_factor_girths(&girths))
}

/// True iff two distinct vertices share at least two neighbors.
pub fn has_four_cycle(g: &Graph) -> bool {
    let n = g.num_vertices();
    let mut count = vec![0u32; n];
    for u in 0..n {
        count.iter_mut().for_each(|c| *c = 0);
        for &w in g.neighbors(u) {
            for &x in g.neighbors(w) {
                if x != u {
                    count[x] += 1;
                    if count[x] >= 2 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Predicted eccentric girth of a product of trees: 0, 3, 6 or 4.
pub fn predicted_tree_product_girth(factors: &[&Tree]) -> Result<usize> {
    if factors.len() < 2 {
        return Err(Error::Input("a product needs at least two factors".into()));
    }
    let eccentric: Vec<Graph> = factors
        .iter()
        .map(|t| eccentric_graph(t.graph()))
        .collect::<Result<_>>()?;
    let girths: Vec<usize> = eccentric.iter().map(Graph::girth).collect();
    if girths.iter().all(|&g| g == 0) {
        return Ok(0);
    }
    if girths.iter().all(|&g| g == 3) {
        return Ok(3);
    }
    let non_edges: Vec<usize> =
        (0..factors.len()).filter(|&i| factors[i].num_vertices() != 2).collect();
    if let [only] = non_edges[..] {
        if girths[only] == 3 && !has_four_cycle(&eccentric[only]) {
            return Ok(6);
        }
    }
    Ok(4)
}

/// Eccentric graph of `P_m □ P_n` from the corner rule: each vertex is joined
/// to the opposite corner of every quadrant it lies in.
pub fn grid_eccentric_closed_form(m: usize, n: usize) -> Result<Graph> {
    if m < 3 || n < 3 {
        return Err(Error::UnsupportedSize(format!(
            "the grid corner rule is stated for m, n >= 3, got {m}x{n}"
        )));
    }
    // 1-based (i, j) -> (i-1)·n + (j-1)
    let label = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let (m_hi, m_lo) = (m.div_ceil(2), m / 2);
    let (n_hi, n_lo) = (n.div_ceil(2), n / 2);
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            let mut corners = Vec::new();
            if i <= m_hi && j <= n_hi {
                corners.push((m, n));
            }
            if i > m_lo && j > n_lo {
                corners.push((1, 1));
            }
            if i <= m_hi && j > n_lo {
                corners.push((m, 1));
            }
            if i > m_lo && j <= n_hi {
                corners.push((1, n));
            }
            for (ci, cj) in corners {
                edges.push(ordered(label(i, j), label(ci, cj)));
            }
        }
    }
    Ok(Graph::from_normalized(m * n, edges))
}

/// Eccentric girth of `P_m □ P_n` by the parity rule for `m, n >= 3`:
/// 0 if both even, 4 if exactly one is even, 3 if both odd.
pub fn grid_eccentric_girth(m: usize, n: usize) -> Result<usize> {
    if m < 3 || n < 3 {
        return Err(Error::UnsupportedSize("parity rule is stated for m, n >= 3".into()));
    }
    Ok(match (m % 2, n % 2) {
        (0, 0) => 0,
        (1, 1) => 3,
        _ => 4,
    })
}

/// Shape of `E(C_n □ C_m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleProductShape {
    /// Disjoint edges.
    Matching { edges: usize },
    /// Disjoint cycles of equal length.
    Cycles { count: usize, length: usize },
    /// Both cycles odd: the Kronecker product of two odd cycles.
    OddKronecker,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleProductReport {
    pub shape: CycleProductShape,
    pub predicted_girth: usize,
}

/// Closed-form description of `E(C_n □ C_m)`.
pub fn cycle_product_structure(n: usize, m: usize) -> Result<CycleProductReport> {
    if n < 3 || m < 3 {
        return Err(Error::Input("cycles need at least three vertices".into()));
    }
    let (shape, predicted_girth) = match (n % 2 == 0, m % 2 == 0) {
        (true, true) => (CycleProductShape::Matching { edges: n * m / 2 }, 0),
        (true, false) => (CycleProductShape::Cycles { count: n / 2, length: 2 * m }, 2 * m),
        (false, true) => (CycleProductShape::Cycles { count: m / 2, length: 2 * n }, 2 * n),
        (false, false) => (CycleProductShape::OddKronecker, if n == 3 && m == 3 { 3 } else { 4 }),
    };
    Ok(CycleProductReport { shape, predicted_girth })
}

/// Measures the shape of an arbitrary eccentric graph of a cycle product, for
/// comparison with [`cycle_product_structure`].
pub fn observed_cycle_product_shape(e: &Graph) -> CycleProductShape {
    let n = e.num_vertices();
    let degrees: Vec<usize> = (0..n).map(|v| e.degree(v)).collect();
    if degrees.iter().all(|&d| d == 1) {
        return CycleProductShape::Matching { edges: e.num_edges() };
    }
    if degrees.iter().all(|&d| d == 2) {
        let comps = e.components();
        let length = comps[0].len();
        if comps.iter().all(|c| c.len() == length) {
            return CycleProductShape::Cycles { count: comps.len(), length };
        }
    }
    CycleProductShape::OddKronecker
}

/// The map `f` from `C_n □ C_n` onto `C_n × C_n` for odd `n`, as a flat permutation.
///
/// In 1-based coordinates `f(1,1) = (1,1)`, `f(i,1) = (n+2-i, n+2-i)` for
/// `i >= 2`, and `f(i,j) = f(i,1) + (j-1, 1-j)` mod `n` with residue 0 read as `n`.
pub fn cn_cn_isomorphism(n: usize) -> Result<Vec<usize>> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Precondition(format!("n must be odd and at least 3, got {n}")));
    }
    let map = ProductIndexMap::new(&[n, n])?;
    let wrap = |x: i64| {
        let r = x.rem_euclid(n as i64) as usize;
        if r == 0 {
            n
        } else {
            r
        }
    };
    let mut perm = vec![0; n * n];
    for i in 1..=n {
        let s = if i == 1 { 1 } else { n + 2 - i } as i64;
        for j in 1..=n {
            let shift = j as i64 - 1;
            let (a, b) = (wrap(s + shift), wrap(s - shift));
            perm[map.encode(&[i - 1, j - 1])] = map.encode(&[a - 1, b - 1]);
        }
    }
    Ok(perm)
}

/// Composes [`cn_cn_isomorphism`] with the relabeling `i ↦ i·(n-1)/2` of each
/// coordinate, giving an isomorphism `C_n □ C_n → E(C_n □ C_n)` on labels.
pub fn cn_cn_eccentric_isomorphism(n: usize) -> Result<Vec<usize>> {
    let f = cn_cn_isomorphism(n)?;
    let map = ProductIndexMap::new(&[n, n])?;
    let step = (n - 1) / 2;
    Ok(f.iter()
        .map(|&x| {
            let t = map.decode(x);
            map.encode(&[t[0] * step % n, t[1] * step % n])
        })
        .collect())
}

/// Eccentric graph of a Cartesian product of trees.
pub fn tree_product_eccentric(factors: &[&Tree]) -> Result<Graph> {
    let graphs: Vec<&Graph> = factors.iter().map(|t| t.graph()).collect();
    let (product, _) = cartesian_product(&graphs)?;
    Ok(eccentric_graph_from(&product.distances()?))
}
