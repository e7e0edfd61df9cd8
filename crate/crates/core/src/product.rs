//! Lexicographic product `G1[G2]`.
//!
//! Vertex `(j, k)` with `j ∈ V(G1)`, `k ∈ V(G2)` gets flat id `j * |V(G2)| + k`,
//! so the copy of `G2` above `j` (a "layer") is a contiguous id block.
//! `(j, k) ~ (j', k')` iff `j ~ j'` in `G1`, or `j == j'` and `k ~ k'` in `G2`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Position of a product vertex: layer `j` (a vertex of the outer factor) and
/// position `k` inside the layer (a vertex of the inner factor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex {
    pub j: usize,
    pub k: usize,
}

impl ProductVertex {
    pub fn flat(self, inner_order: usize) -> VertexId {
        self.j * inner_order + self.k
    }

    pub fn from_flat(id: VertexId, inner_order: usize) -> Self {
        Self {
            j: id / inner_order,
            k: id % inner_order,
        }
    }
}

pub fn lex_product(outer: &Graph, inner: &Graph) -> Graph {
    let v2 = inner.order();
    let mut edges = Vec::with_capacity(outer.size() * v2 * v2 + outer.order() * inner.size());
    for j in 0..outer.order() {
        for (k, k2) in inner.edges() {
            edges.push((j * v2 + k, j * v2 + k2));
        }
    }
    for (j, j2) in outer.edges() {
        for k in 0..v2 {
            for k2 in 0..v2 {
                edges.push((j * v2 + k, j2 * v2 + k2));
            }
        }
    }
    let labels = (0..outer.order())
        .flat_map(|j| (0..v2).map(move |k| format!("q{j}·s{k}")))
        .collect();
    // Factors are non-empty by construction of `Graph`.
    Graph::from_edges(outer.order() * v2, edges, Some(labels))
        .expect("lexicographic product of valid graphs is simple")
}

/// Closed-form degree of `(j, k)`: `d1(j) * |V(G2)| + d2(k)`.
pub fn product_degree(outer: &Graph, inner: &Graph, j: VertexId, k: VertexId) -> Result<usize> {
    Ok(outer.degree(j)? * inner.order() + inner.degree(k)?)
}

/// Closed-form size `|E(G2)| * |V(G1)| + |E(G1)| * |V(G2)|^2`.
pub fn product_size(outer: &Graph, inner: &Graph) -> usize {
    inner.size() * outer.order() + outer.size() * inner.order() * inner.order()
}

/// Maps a flat id of `G1[G2]` back to `(j, k)`, checking range.
pub fn split(outer: &Graph, inner: &Graph, id: VertexId) -> Result<ProductVertex> {
    let order = outer.order() * inner.order();
    if id >= order {
        return Err(Error::InvalidVertex { vertex: id, order });
    }
    Ok(ProductVertex::from_flat(id, inner.order()))
}
