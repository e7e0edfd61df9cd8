//! Closed-form predictions of `χ_r` for the product families, and the explicit
//! colorings behind them.
//!
//! Every in-range `(family, params, r)` falls into exactly one case. Cases whose
//! value is only given through worked examples carry an inferred closed form
//! ([`Hypothesis`]) that the sweep confirms or refutes against the exact solver.

mod construct;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use construct::{construct_coloring, repair_coloring};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::product::lex_product;

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `P_l[K_{1,m}]`
    PathStar,
    /// `P_l[K_{1,m,m}]`
    PathDoubleStar,
    /// `P_l[K_{1,m,m,m}]`
    PathTripleStar,
    /// `K_m[P_n]`
    CompletePath,
    /// `C_p`, with `p` stored as `n`
    Cycle,
    /// `K_t`, with `t` stored as `n`
    Complete,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::PathStar,
        Family::PathDoubleStar,
        Family::PathTripleStar,
        Family::CompletePath,
        Family::Cycle,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PathStar => "path-star",
            Family::PathDoubleStar => "path-double-star",
            Family::PathTripleStar => "path-triple-star",
            Family::CompletePath => "complete-path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }

    fn uses(self) -> (bool, bool, bool) {
        match self {
            Family::PathStar | Family::PathDoubleStar | Family::PathTripleStar => (true, true, false),
            Family::CompletePath => (false, true, true),
            Family::Cycle | Family::Complete => (false, false, true),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family member: `l` is the path length of the outer factor, `m` the
/// star / complete-graph parameter, `n` the inner path length, cycle length
/// or clique size depending on the family. Unused parameters are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Instance {
    pub family: Family,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
}

impl Instance {
    /// Keeps exactly the parameters the family uses; a missing one is an error.
    pub fn new(family: Family, l: Option<usize>, m: Option<usize>, n: Option<usize>) -> Result<Self> {
        let (use_l, use_m, use_n) = family.uses();
        let pick = |used: bool, value: Option<usize>, name: &str| match (used, value) {
            (true, None) => Err(Error::InvalidParameter(format!("{family} needs --{name}"))),
            (true, v) => Ok(v),
            (false, _) => Ok(None),
        };
        Ok(Self {
            family,
            l: pick(use_l, l, "l")?,
            m: pick(use_m, m, "m")?,
            n: pick(use_n, n, "n")?,
        })
    }

    pub fn path_star(l: usize, m: usize) -> Self {
        Self { family: Family::PathStar, l: Some(l), m: Some(m), n: None }
    }

    pub fn path_double_star(l: usize, m: usize) -> Self {
        Self { family: Family::PathDoubleStar, l: Some(l), m: Some(m), n: None }
    }

    pub fn path_triple_star(l: usize, m: usize) -> Self {
        Self { family: Family::PathTripleStar, l: Some(l), m: Some(m), n: None }
    }

    pub fn complete_path(m: usize, n: usize) -> Self {
        Self { family: Family::CompletePath, l: None, m: Some(m), n: Some(n) }
    }

    pub fn cycle(p: usize) -> Self {
        Self { family: Family::Cycle, l: None, m: None, n: Some(p) }
    }

    pub fn complete(t: usize) -> Self {
        Self { family: Family::Complete, l: None, m: None, n: Some(t) }
    }

    fn lm(&self) -> (usize, usize) {
        (self.l.unwrap_or(0), self.m.unwrap_or(0))
    }

    fn mn(&self) -> (usize, usize) {
        (self.m.unwrap_or(0), self.n.unwrap_or(0))
    }

    /// Outer and inner factor of a product family.
    pub fn factors(&self) -> Result<Option<(Graph, Graph)>> {
        let (l, m) = self.lm();
        Ok(Some(match self.family {
            Family::PathStar => (graph::path(l)?, graph::star(m)?),
            Family::PathDoubleStar => (graph::path(l)?, graph::double_star(m)?),
            Family::PathTripleStar => (graph::path(l)?, graph::triple_star(m)?),
            Family::CompletePath => {
                let (m, n) = self.mn();
                (graph::complete(m)?, graph::path(n)?)
            }
            Family::Cycle | Family::Complete => return Ok(None),
        }))
    }

    pub fn graph(&self) -> Result<Graph> {
        match self.factors()? {
            Some((outer, inner)) => Ok(lex_product(&outer, &inner)),
            None if self.family == Family::Cycle => graph::cycle(self.n.unwrap_or(0)),
            None => graph::complete(self.n.unwrap_or(0)),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (name, v) in [("l", self.l), ("m", self.m), ("n", self.n)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

/// Closed form inferred from worked examples, never asserted as ground truth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub value: usize,
    pub formula: String,
    pub provenance: String,
}

const INFERRED: &str = "inferred from proof examples";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PredictedValue {
    Exact { value: usize },
    LowerBoundOnly { value: usize },
    /// Printed as `base + i` with the offset `i` left undefined.
    Parametric {
        base: usize,
        hypothesis: Option<Hypothesis>,
    },
    Uncovered,
}

impl PredictedValue {
    pub fn kind(&self) -> &'static str {
        match self {
            PredictedValue::Exact { .. } => "exact",
            PredictedValue::LowerBoundOnly { .. } => "lower-bound",
            PredictedValue::Parametric { .. } => "parametric",
            PredictedValue::Uncovered => "uncovered",
        }
    }

    /// The literal value for exact and lower-bound predictions.
    pub fn value(&self) -> Option<usize> {
        match *self {
            PredictedValue::Exact { value } | PredictedValue::LowerBoundOnly { value } => Some(value),
            _ => None,
        }
    }

    pub fn hypothesis(&self) -> Option<&Hypothesis> {
        match self {
            PredictedValue::Parametric { hypothesis, .. } => hypothesis.as_ref(),
            _ => None,
        }
    }
}

/// Lower bound attached to every in-range `K_m[P_n]` prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: usize,
    pub case_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub instance: Instance,
    pub r: usize,
    pub case_id: String,
    pub value: PredictedValue,
    pub lower_bound: Option<LowerBound>,
    pub notes: Vec<String>,
}

/// Claimed minimum and maximum degree of a product family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeClaim {
    pub min: usize,
    pub max: usize,
}

pub const CASE6_READING: &str =
    "top range applied with l >= 3 (printed 'l <= 2' has no matching degree values)";

/// Per-family constants of `P_l[F]`: layer size, claimed δ, Δ at `l = 2` and at `l >= 3`.
struct PathShape {
    block: usize,
    min_degree: usize,
    max_two: usize,
    max_long: usize,
}

fn path_shape(family: Family, m: usize) -> Option<PathShape> {
    let (block, min_degree, max_two, max_long) = match family {
        Family::PathStar => (m, m + 1, 2 * m - 1, 3 * m - 1),
        Family::PathDoubleStar => (2 * m + 1, 2 * m + 2, 3 * m + 1, 5 * m + 2),
        Family::PathTripleStar => (3 * m + 1, 3 * m + 2, 4 * m + 1, 7 * m + 2),
        _ => return None,
    };
    Some(PathShape { block, min_degree, max_two, max_long })
}

pub fn degree_claims(instance: &Instance) -> Option<DegreeClaim> {
    match instance.family {
        Family::PathStar | Family::PathDoubleStar | Family::PathTripleStar => {
            let (l, m) = instance.lm();
            if l < 2 || m < 2 {
                return None;
            }
            let shape = path_shape(instance.family, m)?;
            let max = if l == 2 { shape.max_two } else { shape.max_long };
            Some(DegreeClaim { min: shape.min_degree, max })
        }
        Family::CompletePath => {
            let (m, n) = instance.mn();
            match (m, n) {
                (m, 2) if m >= 2 => Some(DegreeClaim { min: 2 * m - 1, max: 2 * m - 1 }),
                (m, n) if m >= 2 && n >= 3 => Some(DegreeClaim {
                    min: (m - 1) * n + 1,
                    max: (m - 1) * n + 2,
                }),
                _ => None,
            }
        }
        Family::Cycle | Family::Complete => None,
    }
}

fn exact(value: usize) -> PredictedValue {
    PredictedValue::Exact { value }
}

fn parametric(base: usize, value: usize, formula: String) -> PredictedValue {
    PredictedValue::Parametric {
        base,
        hypothesis: Some(Hypothesis {
            value,
            formula,
            provenance: INFERRED.to_string(),
        }),
    }
}

pub fn predict(instance: &Instance, r: usize) -> Result<Prediction> {
    if r < 1 {
        return Err(Error::InvalidR(r));
    }
    let mut prediction = Prediction {
        instance: *instance,
        r,
        case_id: "uncovered".to_string(),
        value: PredictedValue::Uncovered,
        lower_bound: None,
        notes: Vec::new(),
    };
    let (case_id, value) = match instance.family {
        Family::PathStar | Family::PathDoubleStar | Family::PathTripleStar => {
            predict_path(instance, r, &mut prediction.notes)
        }
        Family::CompletePath => {
            let (m, n) = instance.mn();
            prediction.lower_bound = complete_path_lower_bound(m, n, r);
            predict_complete_path(m, n, r)
        }
        Family::Cycle => match instance.n {
            Some(p) if p >= 3 && r >= 2 => match p {
                5 => Some(("p5", exact(5))),
                p if p % 3 == 0 => Some(("p-mod3", exact(3))),
                _ => Some(("p-other", exact(4))),
            },
            _ => None,
        },
        Family::Complete => match instance.n {
            Some(t) if t >= 1 => Some(("clique", exact(t))),
            _ => None,
        },
    }
    .unwrap_or(("uncovered", PredictedValue::Uncovered));
    prediction.case_id = case_id.to_string();
    prediction.value = value;
    Ok(prediction)
}

fn predict_path(
    instance: &Instance,
    r: usize,
    notes: &mut Vec<String>,
) -> Option<(&'static str, PredictedValue)> {
    let (l, m) = instance.lm();
    if l < 2 {
        return None;
    }
    if m == 2 {
        // Two vertices per row of the star; only r <= 5 is stated.
        return match (instance.family, r) {
            (Family::PathStar, 1..=3) => Some(("m2", exact(4))),
            (Family::PathStar, 4) => Some(("m2", exact(5))),
            (Family::PathStar, 5) => Some(("m2", exact(6))),
            _ => None,
        };
    }
    if m < 3 {
        return None;
    }
    let shape = path_shape(instance.family, m)?;
    let block = shape.block;
    let delta = shape.min_degree;
    let big = if l == 2 { shape.max_two } else { shape.max_long };
    let case = if r <= 3 {
        ("case1", exact(4))
    } else if r < delta {
        ("case2", parametric(r, 2 * (r - 1), format!("r + (r - 2) = {}", 2 * (r - 1))))
    } else if l == 2 {
        if r > big {
            return None;
        }
        ("case3", exact(2 * block))
    } else if r == delta {
        ("case4", exact(2 * block))
    } else if r + m <= big + 1 {
        let value = 2 * block + r - delta;
        (
            "case5",
            parametric(2 * block, value, format!("{} + (r - δ) = {value}", 2 * block)),
        )
    } else if r <= big {
        notes.push(CASE6_READING.to_string());
        ("case6", exact(3 * block))
    } else {
        return None;
    };
    Some(case)
}

fn predict_complete_path(m: usize, n: usize, r: usize) -> Option<(&'static str, PredictedValue)> {
    if m >= 3 && n == 2 {
        return Some(("n2", exact(2 * m)));
    }
    if m < 3 || n < 3 {
        return None;
    }
    let delta = (m - 1) * n + 1;
    Some(if r < 2 * m {
        ("case1", exact(2 * m))
    } else if r <= delta {
        let i = 2 + (r - 2 * m) / (m - 1);
        ("case2", parametric(r, r + i, format!("r + 2 + floor((r - 2m)/(m - 1)) = {}", r + i)))
    } else {
        ("case3", exact(m * n))
    })
}

fn complete_path_lower_bound(m: usize, n: usize, r: usize) -> Option<LowerBound> {
    if m < 3 || n < 3 {
        return None;
    }
    let delta = (m - 1) * n + 1;
    let (value, case) = if r < 2 * m {
        (2 * m, "case1")
    } else if r <= delta {
        (r + 2, "case2")
    } else {
        (m * n, "case3")
    };
    Some(LowerBound {
        value,
        case_id: case.to_string(),
    })
}
