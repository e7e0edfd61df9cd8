//! Vertex colorings and the two r-dynamic conditions.
//!
//! A coloring `c` of `G` is r-dynamic when it is proper and every vertex `v`
//! sees at least `min(r, d(v))` distinct colors on its open neighborhood.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Total map from vertex ids to colors `1..=palette_size`.
///
/// Colors need not be contiguous; `palette_size` is the largest color used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoringJson", into = "ColoringJson")]
pub struct Coloring {
    colors: Vec<usize>,
}

/// File schema `{"colors": [c_0, c_1, ...]}` indexed by flat vertex id.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringJson {
    pub colors: Vec<usize>,
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = Error;

    fn try_from(json: ColoringJson) -> Result<Self> {
        Coloring::new(json.colors)
    }
}

impl From<Coloring> for ColoringJson {
    fn from(c: Coloring) -> Self {
        ColoringJson { colors: c.colors }
    }
}

impl Coloring {
    /// Rejects color 0, which would mean "unassigned".
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::PartialColoring(format!(
                "vertex {v} has color 0; colors start at 1"
            )));
        }
        Ok(Self { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> Option<usize> {
        self.colors.get(v).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette_size(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut used = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.order() {
            return Err(Error::PartialColoring(format!(
                "{} colors for {} vertices",
                self.colors.len(),
                g.order()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Both endpoints of an edge share a color.
    ProperEdge { u: VertexId, v: VertexId, color: usize },
    /// A vertex sees fewer distinct neighbor colors than `min(r, d(v))`.
    NeighborhoodDeficit {
        vertex: VertexId,
        observed: usize,
        required: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::ProperEdge { u, v, color } => {
                write!(f, "edge {u}-{v} is monochromatic (color {color})")
            }
            Violation::NeighborhoodDeficit {
                vertex,
                observed,
                required,
            } => write!(
                f,
                "vertex {vertex} sees {observed} neighbor colors, needs {required}"
            ),
        }
    }
}

/// Outcome of a check: valid iff no violations were found.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<Verdict> {
    c.check_total(g)?;
    let violations = g
        .edges()
        .filter(|&(u, v)| c.colors[u] == c.colors[v])
        .map(|(u, v)| Violation::ProperEdge {
            u,
            v,
            color: c.colors[u],
        })
        .collect();
    Ok(Verdict { violations })
}

/// `|c(N(v))|`.
pub fn neighborhood_color_count(g: &Graph, c: &Coloring, v: VertexId) -> Result<usize> {
    c.check_total(g)?;
    let mut seen: Vec<usize> = g.neighbors(v)?.iter().map(|&u| c.colors[u]).collect();
    seen.sort_unstable();
    seen.dedup();
    Ok(seen.len())
}

/// Checks both conditions and lists every violation (not fail-fast).
pub fn is_r_dynamic(g: &Graph, c: &Coloring, r: usize) -> Result<Verdict> {
    if r < 1 {
        return Err(Error::InvalidR(r));
    }
    let mut verdict = is_proper(g, c)?;
    for v in 0..g.order() {
        let required = r.min(g.adjacency()[v].len());
        let observed = neighborhood_color_count(g, c, v)?;
        if observed < required {
            verdict.violations.push(Violation::NeighborhoodDeficit {
                vertex: v,
                observed,
                required,
            });
        }
    }
    Ok(verdict)
}

/// Early-exit boolean form of [`is_r_dynamic`] over a raw color slice.
///
/// `colors` must have one positive entry per vertex and `scratch` must have
/// length greater than the largest color; it is left zeroed on return.
pub fn satisfies_r_dynamic(g: &Graph, colors: &[usize], r: usize, scratch: &mut [u32]) -> bool {
    let adj = g.adjacency();
    for (u, list) in adj.iter().enumerate() {
        if list.iter().any(|&v| colors[v] == colors[u]) {
            return false;
        }
    }
    for list in adj {
        let required = r.min(list.len());
        let mut distinct = 0;
        for &u in list {
            let slot = &mut scratch[colors[u]];
            if *slot == 0 {
                distinct += 1;
            }
            *slot += 1;
        }
        for &u in list {
            scratch[colors[u]] = 0;
        }
        if distinct < required {
            return false;
        }
    }
    true
}
