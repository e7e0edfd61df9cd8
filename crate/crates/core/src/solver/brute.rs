use std::time::Instant;

use super::{check_r, lemma1_lower_bound, InvalidInput, SolveResult};
use crate::coloring::{satisfies_r_dynamic, Coloring};
use crate::graph::Graph;

/// Exhaustive oracle: for `k` from the lower bound upward, enumerate every map
/// `V -> {1..k}` with vertex 0 pinned to color 1 and return the first that is
/// r-dynamic. Refuses graphs larger than `cap`.
pub fn brute_force_chi_r(g: &Graph, r: usize, cap: usize) -> Result<SolveResult, InvalidInput> {
    check_r(r)?;
    let n = g.order();
    if n > cap {
        return Err(InvalidInput::Cap { order: n, cap });
    }
    let start = Instant::now();
    let mut scratch = vec![0u32; n + 1];
    let mut nodes = 0u64;
    for k in lemma1_lower_bound(g, r)..=n {
        let mut colors = vec![1usize; n];
        loop {
            nodes += 1;
            if satisfies_r_dynamic(g, &colors, r, &mut scratch) {
                return Ok(SolveResult {
                    chi_r: k,
                    witness: Coloring::new(colors).expect("colors start at 1"),
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
            if !advance(&mut colors[1..], k) {
                break;
            }
        }
    }
    // Distinct colors on every vertex always qualify.
    unreachable!("a rainbow coloring with n colors is r-dynamic for every r")
}

/// Odometer step over `{1..k}^len`; false once every tuple has been visited.
fn advance(digits: &mut [usize], k: usize) -> bool {
    for d in digits.iter_mut().rev() {
        if *d < k {
            *d += 1;
            return true;
        }
        *d = 1;
    }
    false
}
