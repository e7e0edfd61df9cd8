//! Vertex-level colorings for the cases that spell one out.
//!
//! Nothing here self-certifies: callers run the result through
//! [`crate::coloring::is_r_dynamic`]. The top-range map for path products is
//! reproduced as printed (consecutive layer palettes overlap); the corrected
//! variant is available separately from [`repair_coloring`].

use super::{predict, Family, Instance};
use crate::coloring::Coloring;
use crate::error::Result;

/// The printed coloring for `(instance, r)`, or `None` when the matching case
/// gives only palette sizes (or no case matches).
pub fn construct_coloring(instance: &Instance, r: usize) -> Result<Option<Coloring>> {
    let prediction = predict(instance, r)?;
    let colors = match (instance.family, prediction.case_id.as_str()) {
        (Family::CompletePath, "case1") => {
            let (m, n) = instance.mn();
            // Layer j alternates 2j+1, 2j+2 along the path.
            layered(m, n, |j, k| 2 * j + 1 + k % 2)
        }
        (Family::CompletePath, "case3") => {
            let (m, n) = instance.mn();
            layered(m, n, |j, k| j * n + k + 1)
        }
        (Family::CompletePath, _) | (Family::Cycle | Family::Complete, _) => return Ok(None),
        (_, case) => {
            let Some((outer, inner)) = instance.factors()? else {
                return Ok(None);
            };
            let (l, block) = (outer.order(), inner.order());
            match case {
                "case1" => {
                    let side = inner.bipartition().expect("star-like factors are trees");
                    layered(l, block, |j, k| 2 * (j % 2) + usize::from(side[k]) + 1)
                }
                "case3" | "case4" => layered(l, block, |j, k| (j % 2) * block + k + 1),
                "case6" => {
                    let palettes = printed_top_palettes(instance.family, instance.lm().1);
                    layered(l, block, |j, k| {
                        let palette = &palettes[j % 3];
                        palette[k % palette.len()]
                    })
                }
                _ => return Ok(None),
            }
        }
    };
    Ok(Some(Coloring::new(colors).expect("constructed colors start at 1")))
}

/// Corrected top-range coloring for path products: layer `j` takes its own
/// block of `|V(F)|` colors, cycling through three blocks.
pub fn repair_coloring(instance: &Instance, r: usize) -> Result<Option<Coloring>> {
    let prediction = predict(instance, r)?;
    if prediction.case_id != "case6" {
        return Ok(None);
    }
    let Some((outer, inner)) = instance.factors()? else {
        return Ok(None);
    };
    let block = inner.order();
    let colors = layered(outer.order(), block, |j, k| (j % 3) * block + k + 1);
    Ok(Some(Coloring::new(colors).expect("constructed colors start at 1")))
}

fn layered(layers: usize, block: usize, color: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..layers)
        .flat_map(|j| (0..block).map(move |k| (j, k)))
        .map(|(j, k)| color(j, k))
        .collect()
}

/// Printed palettes for layers `j ≡ 0, 1, 2 (mod 3)`; vertex `k` of a layer
/// takes entry `k` (wrapping when the palette is shorter than the layer).
fn printed_top_palettes(family: Family, m: usize) -> [Vec<usize>; 3] {
    match family {
        Family::PathStar => [
            (1..=m).collect(),
            (m..=2 * m).collect(),
            (2 * m + 1..=3 * m).collect(),
        ],
        _ => {
            let legs = if family == Family::PathDoubleStar { 2 } else { 3 };
            let b = legs * m + 1;
            [
                (1..=legs * m).collect(),
                (b + 1..=2 * b).collect(),
                (2 * b + 1..=3 * b).collect(),
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_r_dynamic, Violation};

    fn check(inst: Instance, r: usize) -> (bool, usize) {
        let g = inst.graph().unwrap();
        let c = construct_coloring(&inst, r).unwrap().unwrap();
        (is_r_dynamic(&g, &c, r).unwrap().is_valid(), c.palette_size())
    }

    #[test]
    fn alternating_star_layers() {
        let c = construct_coloring(&Instance::path_star(3, 4), 2).unwrap().unwrap();
        assert_eq!(c.colors(), &[1, 2, 2, 2, 3, 4, 4, 4, 1, 2, 2, 2]);
        assert_eq!(check(Instance::path_star(3, 4), 2), (true, 4));
    }

    #[test]
    fn explicit_cases_validate() {
        for l in 2..=4 {
            for m in 3..=4 {
                for r in 1..=3 {
                    assert_eq!(check(Instance::path_star(l, m), r), (true, 4));
                }
            }
        }
        for m in 3..=4 {
            for r in m + 1..=2 * m - 1 {
                assert_eq!(check(Instance::path_star(2, m), r), (true, 2 * m));
            }
            assert_eq!(check(Instance::path_star(3, m), m + 1), (true, 2 * m));
        }
        for r in 1..=5 {
            assert_eq!(check(Instance::complete_path(3, 3), r), (true, 6));
            assert_eq!(check(Instance::complete_path(3, 4), r), (true, 6));
        }
        let c = construct_coloring(&Instance::complete_path(3, 3), 8).unwrap().unwrap();
        assert_eq!(c.colors(), &(1..=9).collect::<Vec<_>>()[..]);
        assert_eq!(check(Instance::complete_path(3, 3), 8), (true, 9));
    }

    #[test]
    fn printed_top_range_overlaps() {
        let inst = Instance::path_star(3, 3);
        let g = inst.graph().unwrap();
        for r in 7..=8 {
            let c = construct_coloring(&inst, r).unwrap().unwrap();
            assert_eq!(c.colors(), &[1, 2, 3, 3, 4, 5, 7, 8, 9]);
            let verdict = is_r_dynamic(&g, &c, r).unwrap();
            assert!(verdict
                .violations
                .contains(&Violation::ProperEdge { u: 2, v: 3, color: 3 }));
            let fixed = repair_coloring(&inst, r).unwrap().unwrap();
            assert!(is_r_dynamic(&g, &fixed, r).unwrap().is_valid());
            assert_eq!(fixed.palette_size(), 9);
        }
    }

    #[test]
    fn palette_only_cases() {
        assert_eq!(construct_coloring(&Instance::path_star(3, 6), 4).unwrap(), None);
        assert_eq!(construct_coloring(&Instance::path_star(3, 4), 7).unwrap(), None);
        assert_eq!(construct_coloring(&Instance::complete_path(3, 4), 6).unwrap(), None);
        assert_eq!(construct_coloring(&Instance::cycle(6), 2).unwrap(), None);
        assert_eq!(repair_coloring(&Instance::path_star(3, 4), 2).unwrap(), None);
    }
}
