use std::time::{Duration, Instant};

use super::{check_r, greedy_upper_bound, lemma1_lower_bound, SolveError, SolveResult, SolverConfig};
use crate::coloring::Coloring;
use crate::graph::Graph;

/// How many search nodes pass between clock reads.
const CLOCK_STRIDE: u64 = 1 << 12;

/// Branch-and-bound `χ_r`.
///
/// Decides feasibility for each palette size `k` from `min(r, Δ) + 1` up to
/// (but excluding) the greedy bound; the first feasible `k` wins, otherwise the
/// greedy coloring is optimal. Vertices are colored in flat-id order. A new
/// color may only be the next unused one, which removes palette permutations.
pub fn exact_chi_r(g: &Graph, r: usize, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    check_r(r)?;
    let start = Instant::now();
    let lower = lemma1_lower_bound(g, r);
    let (upper, greedy) = greedy_upper_bound(g, r)?;
    let mut nodes = 0u64;
    for k in lower..upper {
        let mut search = Search::new(g, r, k, config.forecast, config.budget.map(|b| (start, b)));
        let found = search.run();
        nodes += search.nodes;
        if search.timed_out {
            return Err(SolveError::Timeout {
                budget: config.budget.unwrap_or_default(),
                nodes_explored: nodes,
                lower: k,
                upper,
            });
        }
        if found {
            return Ok(SolveResult {
                chi_r: k,
                witness: Coloring::new(search.colors).expect("search assigns colors from 1"),
                nodes_explored: nodes,
                elapsed: start.elapsed(),
            });
        }
    }
    Ok(SolveResult {
        chi_r: upper,
        witness: greedy,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

struct Search<'g> {
    adj: &'g [Vec<usize>],
    /// `min(r, d(v))`.
    quota: Vec<usize>,
    k: usize,
    forecast: bool,
    deadline: Option<(Instant, Duration)>,
    colors: Vec<usize>,
    /// `counts[v * (k + 1) + c]`: colored neighbors of `v` holding color `c`.
    counts: Vec<u16>,
    distinct: Vec<usize>,
    uncolored: Vec<usize>,
    nodes: u64,
    timed_out: bool,
}

impl<'g> Search<'g> {
    fn new(
        g: &'g Graph,
        r: usize,
        k: usize,
        forecast: bool,
        deadline: Option<(Instant, Duration)>,
    ) -> Self {
        let adj = g.adjacency();
        let n = adj.len();
        Self {
            adj,
            quota: adj.iter().map(|l| r.min(l.len())).collect(),
            k,
            forecast,
            deadline,
            colors: vec![0; n],
            counts: vec![0; n * (k + 1)],
            distinct: vec![0; n],
            uncolored: adj.iter().map(Vec::len).collect(),
            nodes: 0,
            timed_out: false,
        }
    }

    fn run(&mut self) -> bool {
        // Neighbors of v avoid v's own color, so at most k - 1 can show up.
        if self.quota.iter().any(|&q| q + 1 > self.k) {
            return false;
        }
        self.descend(0, 0)
    }

    fn descend(&mut self, v: usize, max_used: usize) -> bool {
        if v == self.adj.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(CLOCK_STRIDE) {
            if let Some((start, budget)) = self.deadline {
                if start.elapsed() >= budget {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        let stride = self.k + 1;
        for c in 1..=self.k.min(max_used + 1) {
            if self.counts[v * stride + c] != 0 {
                continue;
            }
            if self.assign(v, c) && self.descend(v + 1, max_used.max(c)) {
                return true;
            }
            self.unassign(v, c);
            if self.timed_out {
                return false;
            }
        }
        false
    }

    /// Colors `v` and reports whether every affected quota is still reachable.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        let stride = self.k + 1;
        self.colors[v] = c;
        for &u in self.adj[v].iter() {
            let slot = &mut self.counts[u * stride + c];
            if *slot == 0 {
                self.distinct[u] += 1;
            }
            *slot += 1;
            self.uncolored[u] -= 1;
        }
        self.reachable(v) && self.adj[v].iter().all(|&u| self.reachable(u))
    }

    fn unassign(&mut self, v: usize, c: usize) {
        let stride = self.k + 1;
        self.colors[v] = 0;
        for &u in self.adj[v].iter() {
            let slot = &mut self.counts[u * stride + c];
            *slot -= 1;
            if *slot == 0 {
                self.distinct[u] -= 1;
            }
            self.uncolored[u] += 1;
        }
    }

    fn reachable(&self, u: usize) -> bool {
        let (seen, open, quota) = (self.distinct[u], self.uncolored[u], self.quota[u]);
        if open == 0 {
            return seen >= quota;
        }
        if !self.forecast {
            return true;
        }
        // Unseen colors still available to u's neighbors, excluding u's own.
        let fresh = (self.k - 1).saturating_sub(seen);
        seen + open.min(fresh) >= quota
    }
}
