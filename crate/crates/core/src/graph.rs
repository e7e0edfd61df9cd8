//! Immutable simple undirected graphs and the generator families used throughout the crate.
//!
//! Vertex ids are dense and 0-based. Every generator numbers its vertices
//! deterministically: centers first, then layer by layer outwards, so colorings
//! and reports built on top of them are reproducible.

use std::collections::VecDeque;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense 0-based vertex index, always `< order`.
pub type VertexId = usize;

/// A finite simple undirected graph with per-vertex labels.
///
/// Neighbor lists are sorted and duplicate free; the adjacency relation is
/// symmetric and loop free. Graphs never change after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    labels: Vec<String>,
    size: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; loops, duplicates and out-of-range endpoints are rejected.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); order];
        let mut size = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::InvalidVertex { vertex: x, order });
                }
            }
            if u == v {
                return Err(Error::MalformedGraph(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            size += 1;
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedGraph(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        let labels = match labels {
            Some(labels) if labels.len() != order => {
                return Err(Error::MalformedGraph(format!(
                    "{} labels for {order} vertices",
                    labels.len()
                )))
            }
            Some(labels) => labels,
            None => (0..order).map(|v| format!("v{v}")).collect(),
        };
        Ok(Self {
            adjacency,
            labels,
            size,
        })
    }

    fn with_prefix(order: usize, edges: Vec<(VertexId, VertexId)>, prefix: &str) -> Self {
        let labels = (0..order).map(|v| format!("{prefix}{v}")).collect();
        Self::from_edges(order, edges, Some(labels)).expect("generator produced an invalid graph")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Result<&str> {
        self.check(v)?;
        Ok(&self.labels[v])
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.check(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check(v)?;
        Ok(self.adjacency[v].len())
    }

    /// All neighbor lists, indexed by vertex id.
    pub fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.adjacency
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// δ(G).
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq = self.degrees();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.order()
    }

    /// A proper 2-coloring (sides 0/1, vertex 0's component rooted at side 0)
    /// or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side: Vec<Option<u8>> = vec![None; self.order()];
        for root in 0..self.order() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &v in &self.adjacency[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(1 - s);
                            queue.push_back(v);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            order: self.order(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn from_json(json: GraphJson) -> Result<Self> {
        Self::from_edges(
            json.order,
            json.edges.into_iter().map(|[u, v]| (u, v)),
            json.labels,
        )
    }
}

/// On-disk graph schema: `{"order": n, "edges": [[u,v],...], "labels": [...]}`.
///
/// Written with `u < v` and edges sorted; labels may be omitted on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub order: usize,
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

/// Path on `l` vertices `q0 .. q{l-1}`.
pub fn path(l: usize) -> Result<Graph> {
    require(l >= 1, "path needs l >= 1")?;
    let edges = (1..l).map(|j| (j - 1, j)).collect();
    Ok(Graph::with_prefix(l, edges, "q"))
}

pub fn cycle(p: usize) -> Result<Graph> {
    require(p >= 3, "cycle needs p >= 3")?;
    let edges = (0..p).map(|j| (j, (j + 1) % p)).collect();
    Ok(Graph::with_prefix(p, edges, "c"))
}

pub fn complete(t: usize) -> Result<Graph> {
    require(t >= 1, "complete graph needs t >= 1")?;
    let edges = (0..t)
        .flat_map(|u| (u + 1..t).map(move |v| (u, v)))
        .collect();
    Ok(Graph::with_prefix(t, edges, "p"))
}

/// Star on `m` vertices in total: center `s0` joined to leaves `s1 .. s{m-1}`.
pub fn star(m: usize) -> Result<Graph> {
    require(m >= 2, "star needs m >= 2")?;
    let edges = (1..m).map(|k| (0, k)).collect();
    Ok(Graph::with_prefix(m, edges, "s"))
}

/// Spider with `m` legs of length two: center `s0`, middle ring `s1 .. sm`,
/// and outer vertex `s{m+i}` hanging off `s{i}`. 2m+1 vertices, 2m edges.
pub fn double_star(m: usize) -> Result<Graph> {
    spider(m, 2, "double star")
}

/// Spider with `m` legs of length three. 3m+1 vertices, 3m edges.
pub fn triple_star(m: usize) -> Result<Graph> {
    spider(m, 3, "triple star")
}

fn spider(m: usize, legs: usize, name: &str) -> Result<Graph> {
    require(m >= 2, &format!("{name} needs m >= 2"))?;
    let order = legs * m + 1;
    let mut edges = Vec::with_capacity(legs * m);
    for i in 1..=m {
        edges.push((0, i));
        for depth in 1..legs {
            edges.push(((depth - 1) * m + i, depth * m + i));
        }
    }
    Ok(Graph::with_prefix(order, edges, "s"))
}

/// Uniform random connected graph on `n` vertices: a random recursive tree
/// plus every remaining pair independently with probability `p`.
#[allow(clippy::needless_range_loop)]
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    require(n >= 1, "random graph needs n >= 1")?;
    require((0.0..=1.0).contains(&p), "edge probability must lie in [0, 1]")?;
    let mut edges = Vec::new();
    let mut tree = vec![usize::MAX; n];
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        tree[v] = parent;
        edges.push((parent, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if tree[v] != u && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges, None)
}
