//! Parameter sweeps: for each `(instance, r)` build the graph, fetch the
//! prediction, replay and validate any explicit coloring, solve exactly within
//! a budget, and classify how prediction and exact value relate.

mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use report::{emit_report, render_csv, render_json, render_markdown, ReportFormat, CSV_HEADER};

use crate::coloring::is_r_dynamic;
use crate::error::{Error, Result};
use crate::formulas::{
    construct_coloring, degree_claims, predict, repair_coloring, Family, Instance, PredictedValue,
};
use crate::graph::Graph;
use crate::solver::{exact_chi_r, SolveError, SolverConfig};

/// Products larger than this are constructed and validated but not solved.
pub const DEFAULT_EXACT_CAP: usize = 30;

/// Inclusive integer range written `a..b` (or a single `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub fn single(v: usize) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("malformed range '{s}', expected a..b"));
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let span = match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Span::new(parse(a)?, parse(b)?)
            }
            None => Span::single(parse(s)?),
        };
        if span.lo > span.hi {
            return Err(bad());
        }
        Ok(span)
    }
}

impl TryFrom<String> for Span {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Span> for String {
    fn from(s: Span) -> String {
        s.to_string()
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// `auto` sweeps `r = 1..=Δ` of each instance's product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum RSpan {
    Auto,
    Fixed(Span),
}

impl FromStr for RSpan {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            Ok(RSpan::Auto)
        } else {
            let span: Span = s.parse()?;
            if span.lo == 0 {
                return Err(Error::InvalidR(0));
            }
            Ok(RSpan::Fixed(span))
        }
    }
}

impl TryFrom<String> for RSpan {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RSpan> for String {
    fn from(s: RSpan) -> String {
        match s {
            RSpan::Auto => "auto".to_string(),
            RSpan::Fixed(span) => span.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub family: Family,
    pub l: Option<Span>,
    pub m: Option<Span>,
    pub n: Option<Span>,
    pub r: RSpan,
    pub budget_secs: u64,
    pub exact_cap: usize,
    pub jobs: usize,
    pub forecast: bool,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(family: Family, r: RSpan) -> Self {
        Self {
            family,
            l: None,
            m: None,
            n: None,
            r,
            budget_secs: crate::solver::DEFAULT_BUDGET.as_secs(),
            exact_cap: DEFAULT_EXACT_CAP,
            jobs: 1,
            forecast: true,
            seed: 0,
        }
    }

    pub fn with_l(mut self, span: Span) -> Self {
        self.l = Some(span);
        self
    }

    pub fn with_m(mut self, span: Span) -> Self {
        self.m = Some(span);
        self
    }

    pub fn with_n(mut self, span: Span) -> Self {
        self.n = Some(span);
        self
    }

    /// Instances in lexicographic `(l, m, n)` order.
    pub fn instances(&self) -> Result<Vec<Instance>> {
        let opt = |s: Option<Span>| -> Vec<Option<usize>> {
            match s {
                Some(span) => span.iter().map(Some).collect(),
                None => vec![None],
            }
        };
        let mut out = Vec::new();
        for &l in &opt(self.l) {
            for &m in &opt(self.m) {
                for &n in &opt(self.n) {
                    out.push(Instance::new(self.family, l, m, n)?);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionStatus {
    Valid,
    Invalid,
    NotConstructive,
}

impl ConstructionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionStatus::Valid => "valid",
            ConstructionStatus::Invalid => "invalid",
            ConstructionStatus::NotConstructive => "not-constructive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Match,
    Mismatch,
    HypothesisConfirmed,
    HypothesisRefuted,
    Timeout,
    Uncovered,
    /// Product above the exact-solving cap: only construction was checked.
    ValidatedOnly,
}

impl Agreement {
    pub const ALL: [Agreement; 7] = [
        Agreement::Match,
        Agreement::Mismatch,
        Agreement::HypothesisConfirmed,
        Agreement::HypothesisRefuted,
        Agreement::Timeout,
        Agreement::Uncovered,
        Agreement::ValidatedOnly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Agreement::Match => "match",
            Agreement::Mismatch => "mismatch",
            Agreement::HypothesisConfirmed => "hypothesis-confirmed",
            Agreement::HypothesisRefuted => "hypothesis-refuted",
            Agreement::Timeout => "timeout",
            Agreement::Uncovered => "uncovered",
            Agreement::ValidatedOnly => "validated-only",
        }
    }

    pub fn is_discrepancy(self) -> bool {
        matches!(self, Agreement::Mismatch | Agreement::HypothesisRefuted)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub family: Family,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub r: usize,
    pub case_id: String,
    pub predicted_kind: String,
    pub predicted_value: Option<usize>,
    pub hypothesis_value: Option<usize>,
    pub exact_value: Option<usize>,
    pub construction_status: ConstructionStatus,
    pub agreement: Agreement,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    /// Verdict on the corrected top-range coloring, when one exists.
    pub repair_status: Option<ConstructionStatus>,
    pub lower_bound: Option<usize>,
    pub notes: Vec<String>,
}

impl Row {
    pub fn instance(&self) -> Instance {
        Instance {
            family: self.family,
            l: self.l,
            m: self.m,
            n: self.n,
        }
    }
}

/// Something a sweep noticed beyond the per-row agreement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub instance: Instance,
    pub r: Option<usize>,
    pub kind: FindingKind,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingKind {
    DegreeClaim,
    LowerBoundViolated,
    ConstructionInvalid,
    ConstructionPaletteMismatch,
}

/// `χ_{Δ+1}` compared with `χ_Δ` for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityCheck {
    pub instance: Instance,
    pub max_degree: usize,
    pub chi_at_max: usize,
    pub chi_above_max: Option<usize>,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub tool_version: String,
    pub config: SweepConfig,
    pub rows: Vec<Row>,
    pub summary: BTreeMap<Agreement, usize>,
    pub stability_checks: Vec<StabilityCheck>,
    pub findings: Vec<Finding>,
}

impl SweepReport {
    pub fn discrepancies(&self) -> usize {
        self.rows.iter().filter(|r| r.agreement.is_discrepancy()).count()
            + self
                .stability_checks
                .iter()
                .filter(|s| s.holds == Some(false))
                .count()
    }

    fn summarize(rows: &[Row]) -> BTreeMap<Agreement, usize> {
        let mut summary: BTreeMap<Agreement, usize> =
            Agreement::ALL.iter().map(|&a| (a, 0)).collect();
        for row in rows {
            *summary.get_mut(&row.agreement).unwrap() += 1;
        }
        summary
    }
}

struct Prepared {
    instance: Instance,
    graph: Graph,
    rs: Vec<usize>,
}

pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    if config.budget_secs < 1 {
        return Err(Error::InvalidParameter("budget must be at least 1 s".into()));
    }
    let solver = SolverConfig {
        budget: Some(Duration::from_secs(config.budget_secs)),
        forecast: config.forecast,
        ..SolverConfig::default()
    };
    let mut findings = Vec::new();
    let mut prepared = Vec::new();
    for instance in config.instances()? {
        let graph = instance.graph()?;
        if let Some(claim) = degree_claims(&instance) {
            let actual = (graph.min_degree(), graph.max_degree());
            if actual != (claim.min, claim.max) {
                findings.push(Finding {
                    instance,
                    r: None,
                    kind: FindingKind::DegreeClaim,
                    detail: format!(
                        "claimed (δ, Δ) = ({}, {}), constructed product has ({}, {})",
                        claim.min, claim.max, actual.0, actual.1
                    ),
                });
            }
        }
        let rs = match config.r {
            RSpan::Auto => (1..=graph.max_degree().max(1)).collect(),
            RSpan::Fixed(span) => span.iter().collect(),
        };
        prepared.push(Prepared { instance, graph, rs });
    }

    let items: Vec<(&Prepared, usize)> = prepared
        .iter()
        .flat_map(|p| p.rs.iter().map(move |&r| (p, r)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let results: Vec<Result<(Row, Vec<Finding>)>> = pool.install(|| {
        items
            .par_iter()
            .map(|&(p, r)| evaluate(&p.instance, &p.graph, r, config.exact_cap, &solver))
            .collect()
    });
    let mut rows = Vec::with_capacity(results.len());
    for result in results {
        let (row, mut extra) = result?;
        rows.push(row);
        findings.append(&mut extra);
    }

    let stability_checks = if config.r == RSpan::Auto {
        stability_spot_check(&prepared, &rows, config.exact_cap, &solver)
    } else {
        Vec::new()
    };

    Ok(SweepReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        summary: SweepReport::summarize(&rows),
        rows,
        stability_checks,
        findings,
    })
}

fn evaluate(
    instance: &Instance,
    graph: &Graph,
    r: usize,
    exact_cap: usize,
    solver: &SolverConfig,
) -> Result<(Row, Vec<Finding>)> {
    let prediction = predict(instance, r)?;
    let mut findings = Vec::new();
    let mut finding = |kind, detail: String| {
        findings.push(Finding {
            instance: *instance,
            r: Some(r),
            kind,
            detail,
        })
    };

    let repair_status = repair_coloring(instance, r)?
        .map(|c| is_r_dynamic(graph, &c, r))
        .transpose()?
        .map(|v| {
            if v.is_valid() {
                ConstructionStatus::Valid
            } else {
                ConstructionStatus::Invalid
            }
        });
    let construction_status = match construct_coloring(instance, r)? {
        None => ConstructionStatus::NotConstructive,
        Some(c) => {
            let verdict = is_r_dynamic(graph, &c, r)?;
            if verdict.is_valid() {
                if let Some(v) = prediction.value.value() {
                    if c.palette_size() != v {
                        finding(
                            FindingKind::ConstructionPaletteMismatch,
                            format!("construction uses {} colors, prediction {v}", c.palette_size()),
                        );
                    }
                }
                ConstructionStatus::Valid
            } else {
                let first = verdict.violations[0];
                let repaired = match repair_status {
                    Some(status) => format!("; corrected palette is {}", status.as_str()),
                    None => String::new(),
                };
                finding(
                    FindingKind::ConstructionInvalid,
                    format!(
                        "printed coloring has {} violations, first: {first}{repaired}",
                        verdict.violations.len()
                    ),
                );
                ConstructionStatus::Invalid
            }
        }
    };

    let (exact, nodes, elapsed_ms) = if graph.order() > exact_cap {
        (ExactOutcome::Skipped, 0, 0)
    } else {
        match exact_chi_r(graph, r, solver) {
            Ok(res) => (
                ExactOutcome::Solved(res.chi_r),
                res.nodes_explored,
                res.elapsed.as_millis() as u64,
            ),
            Err(SolveError::Timeout { nodes_explored, budget, .. }) => {
                (ExactOutcome::TimedOut, nodes_explored, budget.as_millis() as u64)
            }
            Err(SolveError::Invalid(e)) => return Err(e.into()),
        }
    };

    let exact_value = match exact {
        ExactOutcome::Solved(v) => Some(v),
        _ => None,
    };
    if let (Some(bound), Some(v)) = (&prediction.lower_bound, exact_value) {
        if v < bound.value {
            finding(
                FindingKind::LowerBoundViolated,
                format!("exact {v} below stated lower bound {} ({})", bound.value, bound.case_id),
            );
        }
    }

    let agreement = classify(&prediction.value, exact);
    let row = Row {
        family: instance.family,
        l: instance.l,
        m: instance.m,
        n: instance.n,
        r,
        case_id: prediction.case_id,
        predicted_kind: prediction.value.kind().to_string(),
        predicted_value: prediction.value.value(),
        hypothesis_value: prediction.value.hypothesis().map(|h| h.value),
        exact_value,
        construction_status,
        agreement,
        nodes_explored: nodes,
        elapsed_ms,
        repair_status,
        lower_bound: prediction.lower_bound.map(|b| b.value),
        notes: prediction.notes,
    };
    Ok((row, findings))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactOutcome {
    Solved(usize),
    TimedOut,
    Skipped,
}

/// Maps a prediction and an exact outcome onto an agreement class.
pub fn classify(predicted: &PredictedValue, exact: ExactOutcome) -> Agreement {
    if *predicted == PredictedValue::Uncovered {
        return Agreement::Uncovered;
    }
    let value = match exact {
        ExactOutcome::TimedOut => return Agreement::Timeout,
        ExactOutcome::Skipped => return Agreement::ValidatedOnly,
        ExactOutcome::Solved(v) => v,
    };
    match predicted {
        PredictedValue::Exact { value: p } if *p == value => Agreement::Match,
        PredictedValue::Exact { .. } => Agreement::Mismatch,
        PredictedValue::LowerBoundOnly { value: p } if value >= *p => Agreement::Match,
        PredictedValue::LowerBoundOnly { .. } => Agreement::Mismatch,
        PredictedValue::Parametric {
            hypothesis: Some(h),
            ..
        } if h.value == value => Agreement::HypothesisConfirmed,
        PredictedValue::Parametric { .. } => Agreement::HypothesisRefuted,
        PredictedValue::Uncovered => Agreement::Uncovered,
    }
}

/// Re-solves the first instance with a known `χ_Δ` at `r = Δ + 1`.
fn stability_spot_check(
    prepared: &[Prepared],
    rows: &[Row],
    exact_cap: usize,
    solver: &SolverConfig,
) -> Vec<StabilityCheck> {
    for p in prepared {
        let max_degree = p.graph.max_degree();
        if max_degree == 0 || p.graph.order() > exact_cap {
            continue;
        }
        let at_max = rows
            .iter()
            .find(|row| row.instance() == p.instance && row.r == max_degree)
            .and_then(|row| row.exact_value);
        let Some(chi_at_max) = at_max else { continue };
        let above = exact_chi_r(&p.graph, max_degree + 1, solver).ok().map(|res| res.chi_r);
        return vec![StabilityCheck {
            instance: p.instance,
            max_degree,
            chi_at_max,
            chi_above_max: above,
            holds: above.map(|v| v == chi_at_max),
        }];
    }
    Vec::new()
}
