//! Eccentric graph and eccentricity matrix of a connected graph.
//!
//! `u` is eccentric to `v` when `d(u, v) = e(v)`. The eccentric graph joins
//! `u` and `v` when either is eccentric to the other, which is the same as
//! `d(u, v) = min(e(u), e(v))`; the latter form is what both builders here use.

use crate::error::{Error, Result};
use crate::graph::{DistanceData, Graph};
use crate::matrix::IntMatrix;

/// A graph together with its distance table and per-vertex eccentric sets.
#[derive(Clone, Debug)]
pub struct EccentricityProfile {
    graph: Graph,
    distances: DistanceData,
    eccentric_sets: Vec<Vec<usize>>,
}

impl EccentricityProfile {
    pub fn new(graph: &Graph) -> Result<Self> {
        let distances = connected_distances(graph)?;
        let n = graph.num_vertices();
        let eccentric_sets = (0..n)
            .map(|v| {
                let e = distances.ecc(v);
                (0..n).filter(|&u| distances.get(u, v) == e).collect()
            })
            .collect();
        Ok(EccentricityProfile { graph: graph.clone(), distances, eccentric_sets })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceData {
        &self.distances
    }

    /// Vertices eccentric to `v`, ascending.
    pub fn eccentric_set(&self, v: usize) -> &[usize] {
        &self.eccentric_sets[v]
    }

    /// True iff `u` is eccentric **to** `v`, i.e. `d(u, v) = e(v)`.
    pub fn is_eccentric(&self, u: usize, v: usize) -> bool {
        self.distances.get(u, v) == self.distances.ecc(v)
    }

    pub fn eccentric_graph(&self) -> Graph {
        eccentric_graph_from(&self.distances)
    }
}

/// Distances of `g`, rejecting single vertices and disconnected graphs.
fn connected_distances(g: &Graph) -> Result<DistanceData> {
    if g.num_vertices() < 2 {
        return Err(Error::Domain("eccentric graphs need at least two vertices".into()));
    }
    g.distances()
}

#[inline]
fn is_eccentric_pair(d: &DistanceData, u: usize, v: usize) -> bool {
    d.get(u, v) == d.ecc(u).min(d.ecc(v))
}

/// Eccentric graph computed from an existing distance table.
pub fn eccentric_graph_from(d: &DistanceData) -> Graph {
    let n = d.num_vertices();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if is_eccentric_pair(d, u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_normalized(n, edges)
}

pub fn eccentric_graph(g: &Graph) -> Result<Graph> {
    Ok(eccentric_graph_from(&connected_distances(g)?))
}

/// Distance matrix with every entry zeroed unless it equals `min(e(u), e(v))`.
pub fn eccentricity_matrix_from(d: &DistanceData) -> IntMatrix {
    let n = d.num_vertices();
    IntMatrix::from_fn(n, n, |u, v| {
        if u != v && is_eccentric_pair(d, u, v) {
            d.get(u, v)
        } else {
            0
        }
    })
    .expect("distance tables are never empty")
}

pub fn eccentricity_matrix(g: &Graph) -> Result<IntMatrix> {
    Ok(eccentricity_matrix_from(&connected_distances(g)?))
}

/// Girth of the eccentric graph (0 when it is acyclic).
pub fn eccentric_girth(g: &Graph) -> Result<usize> {
    Ok(eccentric_graph(g)?.girth())
}
