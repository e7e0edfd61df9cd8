use super::{check_r, InvalidInput};
use crate::coloring::Coloring;
use crate::graph::Graph;

/// Sequential r-dynamic coloring in flat-id order.
///
/// Each vertex takes the smallest color that keeps the coloring proper and
/// leaves every neighbor able to reach its quota `min(r, d)` (distinct colors
/// seen plus neighbors still uncolored). When no existing color qualifies a
/// fresh one is opened, which never lowers any neighbor's reachable count, so
/// the result is always r-dynamic.
pub fn greedy_upper_bound(g: &Graph, r: usize) -> Result<(usize, Coloring), InvalidInput> {
    check_r(r)?;
    let adj = g.adjacency();
    let n = adj.len();
    let quota: Vec<usize> = adj.iter().map(|l| r.min(l.len())).collect();
    let mut colors = vec![0usize; n];
    // neighbor_colors[v]: sorted distinct colors among v's colored neighbors.
    let mut neighbor_colors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut uncolored: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut used = 0;

    for v in 0..n {
        let fits = |c: usize| {
            neighbor_colors[v].binary_search(&c).is_err()
                && adj[v].iter().all(|&u| {
                    let known = &neighbor_colors[u];
                    let gain = usize::from(known.binary_search(&c).is_err());
                    known.len() + gain + uncolored[u] > quota[u]
                })
        };
        let c = (1..=used).find(|&c| fits(c)).unwrap_or(used + 1);
        used = used.max(c);
        colors[v] = c;
        for &u in &adj[v] {
            if let Err(pos) = neighbor_colors[u].binary_search(&c) {
                neighbor_colors[u].insert(pos, c);
            }
            uncolored[u] -= 1;
        }
    }
    let coloring = Coloring::new(colors).expect("greedy assigns colors from 1");
    Ok((coloring.palette_size(), coloring))
}
