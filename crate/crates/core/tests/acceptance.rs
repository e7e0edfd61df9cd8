//! Acceptance suite. Runs as a plain binary (`harness = false`) so that each
//! criterion prints exactly one `PASS`/`FAIL` line; the process exits non-zero
//! when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rdyn::formulas::repair_coloring;
use rdyn::graph::{complete, cycle, double_star, path, random_connected, star, triple_star};
use rdyn::sweep::{render_csv, sweep, Agreement, RSpan, Span, SweepConfig};
use rdyn::{
    brute_force_chi_r, construct_coloring, exact_chi_r, greedy_upper_bound, is_r_dynamic,
    lemma1_lower_bound, lex_product, predict, Family, Graph, Instance, PredictedValue,
    SolverConfig, Violation,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn config() -> SolverConfig {
    SolverConfig::default()
}

fn chi(g: &Graph, r: usize) -> Result<usize, String> {
    exact_chi_r(g, r, &config())
        .map(|res| res.chi_r)
        .map_err(|e| format!("solver failed at r={r}: {e}"))
}

fn expect_chi(what: &str, g: &Graph, r: usize, expected: usize) -> Result<(), String> {
    let got = chi(g, r)?;
    ensure(got == expected, || format!("{what} r={r}: exact {got}, expected {expected}"))
}

fn criterion_01_complete_graphs() -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for t in 1..=6 {
        let g = complete(t).unwrap();
        for r in 1..=t + 2 {
            expect_chi(&format!("K_{t}"), &g, r, t)?;
            checked += 1;
        }
    }
    let took = within(Duration::from_secs(5), started)?;
    Ok(format!("{checked} pairs in {took:.2?}"))
}

fn criterion_02_cycles() -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for p in 3..=12 {
        let expected = match p {
            5 => 5,
            p if p % 3 == 0 => 3,
            _ => 4,
        };
        let g = cycle(p).unwrap();
        for r in 2..=3 {
            expect_chi(&format!("C_{p}"), &g, r, expected)?;
            checked += 1;
        }
    }
    let took = within(Duration::from_secs(10), started)?;
    Ok(format!("{checked} pairs in {took:.2?}"))
}

fn criterion_03_path_star_low_r() -> Outcome {
    let mut checked = 0;
    for l in 2..=4 {
        for m in 3..=4 {
            let g = Instance::path_star(l, m).graph().unwrap();
            for r in 1..=3 {
                expect_chi(&format!("P_{l}[star {m}]"), &g, r, 4)?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs equal 4"))
}

fn criterion_04_two_layer_star() -> Outcome {
    let mut checked = 0;
    for m in 3..=4 {
        let g = Instance::path_star(2, m).graph().unwrap();
        ensure(g.min_degree() == m + 1 && g.max_degree() == 2 * m - 1, || {
            format!("P_2[star {m}] degrees ({}, {})", g.min_degree(), g.max_degree())
        })?;
        for r in m + 1..=2 * m - 1 {
            expect_chi(&format!("P_2[star {m}]"), &g, r, 2 * m)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs equal 2m"))
}

fn criterion_05_complete_path() -> Outcome {
    let mut checked = 0;
    for (m, n) in [(3, 3), (3, 4)] {
        let g = Instance::complete_path(m, n).graph().unwrap();
        for r in 1..2 * m {
            expect_chi(&format!("K_{m}[P_{n}]"), &g, r, 2 * m)?;
            checked += 1;
        }
    }
    let g = Instance::complete_path(3, 3).graph().unwrap();
    let top = g.max_degree();
    expect_chi("K_3[P_3]", &g, top, 9)?;
    Ok(format!("{} pairs, top r={top} gives 9", checked + 1))
}

fn criterion_06_complete_path_lower_bounds() -> Outcome {
    let mut checked = 0;
    for (m, n) in [(3, 3), (3, 4)] {
        let inst = Instance::complete_path(m, n);
        let g = inst.graph().unwrap();
        let mut rs: Vec<usize> = (1..2 * m).collect();
        if (m, n) == (3, 3) {
            rs.push(g.max_degree());
        }
        for r in rs {
            let bound = predict(&inst, r)
                .unwrap()
                .lower_bound
                .ok_or_else(|| format!("{inst} r={r}: no lower bound attached"))?;
            let exact = chi(&g, r)?;
            ensure(exact >= bound.value, || {
                format!("{inst} r={r}: exact {exact} below bound {} ({})", bound.value, bound.case_id)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} bounds hold"))
}

fn explicit_case(family: Family, case_id: &str) -> bool {
    match family {
        Family::CompletePath => matches!(case_id, "case1" | "case3"),
        _ => matches!(case_id, "case1" | "case3" | "case4"),
    }
}

fn check_construction(inst: &Instance, r: usize) -> Result<bool, String> {
    let prediction = predict(inst, r).unwrap();
    if !explicit_case(inst.family, &prediction.case_id) {
        return Ok(false);
    }
    let g = inst.graph().unwrap();
    let c = construct_coloring(inst, r)
        .unwrap()
        .ok_or_else(|| format!("{inst} r={r} {}: no coloring", prediction.case_id))?;
    let verdict = is_r_dynamic(&g, &c, r).unwrap();
    ensure(verdict.is_valid(), || {
        format!("{inst} r={r} {}: {}", prediction.case_id, verdict.violations[0])
    })?;
    let predicted = prediction.value.value();
    ensure(predicted == Some(c.palette_size()), || {
        format!("{inst} r={r}: palette {} vs predicted {predicted:?}", c.palette_size())
    })?;
    Ok(true)
}

fn top_range_verdict(inst: &Instance, r: usize) -> (bool, Vec<Violation>, bool) {
    let g = inst.graph().unwrap();
    let printed = construct_coloring(inst, r).unwrap().expect("top range is constructive");
    let verdict = is_r_dynamic(&g, &printed, r).unwrap();
    let repaired = repair_coloring(inst, r).unwrap().expect("top range has a corrected map");
    let repaired_ok = is_r_dynamic(&g, &repaired, r).unwrap().is_valid();
    (verdict.is_valid(), verdict.violations, repaired_ok)
}

fn criterion_07_constructions() -> Outcome {
    let mut pairs: Vec<(Instance, usize)> = Vec::new();
    for l in 2..=4 {
        for m in 3..=4 {
            pairs.extend((1..=3).map(|r| (Instance::path_star(l, m), r)));
        }
    }
    for m in 3..=4 {
        pairs.extend((m + 1..2 * m).map(|r| (Instance::path_star(2, m), r)));
    }
    for (m, n) in [(3, 3), (3, 4)] {
        pairs.extend((1..2 * m).map(|r| (Instance::complete_path(m, n), r)));
    }
    pairs.push((Instance::complete_path(3, 3), 8));
    for family in [Family::PathDoubleStar, Family::PathTripleStar] {
        for l in 2..=3 {
            let inst = Instance::new(family, Some(l), Some(3), None).unwrap();
            let top = inst.graph().unwrap().max_degree();
            pairs.extend((1..=top).map(|r| (inst, r)));
        }
    }
    let mut validated = 0;
    for (inst, r) in &pairs {
        if check_construction(inst, *r)? {
            validated += 1;
        }
    }

    let inst = Instance::path_star(3, 3);
    let r = inst.graph().unwrap().max_degree();
    ensure(predict(&inst, r).unwrap().case_id == "case6", || "top range is not case6".into())?;
    let first = top_range_verdict(&inst, r);
    let second = top_range_verdict(&inst, r);
    ensure(first == second, || "top-range verdict differs between runs".into())?;
    let (valid, violations, repaired_ok) = first;
    let verdict = if valid { "valid" } else { "invalid" };
    let detail = violations.first().map(|v| format!(", {v}")).unwrap_or_default();
    Ok(format!(
        "{validated} explicit colorings valid; printed top-range palette on {inst} r={r} is {verdict}{detail}; corrected map valid={repaired_ok}"
    ))
}

fn criterion_08_oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let graphs = 210;
    let cfg = SolverConfig { budget: None, ..config() };
    for i in 0..graphs {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(n, p, &mut rng).unwrap();
        for r in 1..=3 {
            let exact = exact_chi_r(&g, r, &cfg).map_err(|e| e.to_string())?.chi_r;
            let brute = brute_force_chi_r(&g, r, 12).map_err(|e| e.to_string())?.chi_r;
            ensure(exact == brute, || {
                format!("graph #{i} (n={n}, edges {:?}) r={r}: exact {exact}, brute {brute}", g.edges().collect::<Vec<_>>())
            })?;
        }
    }
    let took = within(Duration::from_secs(120), started)?;
    Ok(format!("{graphs} graphs x 3 radii agree in {took:.2?}"))
}

fn zoo() -> Vec<(String, Graph)> {
    let mut zoo = Vec::new();
    for k in 1..=8 {
        zoo.push((format!("P_{k}"), path(k).unwrap()));
        zoo.push((format!("K_{k}"), complete(k).unwrap()));
    }
    for k in 3..=8 {
        zoo.push((format!("C_{k}"), cycle(k).unwrap()));
    }
    for k in 2..=8 {
        zoo.push((format!("star {k}"), star(k).unwrap()));
    }
    for k in 2..=3 {
        zoo.push((format!("double star {k}"), double_star(k).unwrap()));
    }
    zoo.push(("triple star 2".into(), triple_star(2).unwrap()));
    zoo
}

fn criterion_09_structural_formulas() -> Outcome {
    let zoo = zoo();
    let mut pairs = 0;
    for (name1, g1) in &zoo {
        for (name2, g2) in &zoo {
            let product = lex_product(g1, g2);
            let (v1, v2) = (g1.order(), g2.order());
            let expected = g2.size() * v1 + g1.size() * v2 * v2;
            ensure(product.size() == expected, || {
                format!("{name1}[{name2}]: size {} vs {expected}", product.size())
            })?;
            for j in 0..v1 {
                for k in 0..v2 {
                    let expected = g1.degree(j).unwrap() * v2 + g2.degree(k).unwrap();
                    let got = product.degree(j * v2 + k).unwrap();
                    ensure(got == expected, || {
                        format!("{name1}[{name2}] vertex ({j},{k}): degree {got} vs {expected}")
                    })?;
                }
            }
            pairs += 1;
        }
    }
    ensure(pairs >= 100, || format!("only {pairs} pairs"))?;
    Ok(format!("{pairs} factor pairs from a zoo of {}", zoo.len()))
}

/// `χ_r` for `r = 1..=Δ+1`.
fn profile_above(g: &Graph) -> Result<Vec<usize>, String> {
    (1..=g.max_degree() + 1).map(|r| chi(g, r)).collect()
}

fn check_chain(name: &str, g: &Graph) -> Result<usize, String> {
    let values = profile_above(g)?;
    for (i, &value) in values.iter().enumerate() {
        let r = i + 1;
        let lower = lemma1_lower_bound(g, r);
        let (upper, _) = greedy_upper_bound(g, r).map_err(|e| e.to_string())?;
        ensure(lower <= value && value <= upper && upper <= g.order(), || {
            format!("{name} r={r}: bounds {lower} <= {value} <= {upper} <= {} broken", g.order())
        })?;
    }
    ensure(values.windows(2).all(|w| w[0] <= w[1]), || format!("{name}: not monotone {values:?}"))?;
    if g.max_degree() > 0 {
        let n = values.len();
        ensure(values[n - 2] == values[n - 1], || format!("{name}: unstable above Δ {values:?}"))?;
    }
    Ok(values.len())
}

fn check_product_relations(name: &str, g1: &Graph, g2: &Graph) -> Result<(), String> {
    let chi1 = chi(g1, 1)?;
    let chi2 = chi(g2, 1)?;
    let product = chi(&lex_product(g1, g2), 1)?;
    if g1.size() > 0 {
        ensure(product + 2 >= chi1 + 2 * chi2, || {
            format!("{name}: χ={product} below χ1+2χ2-2 = {}", chi1 + 2 * chi2 - 2)
        })?;
    }
    ensure(product <= chi1 * chi2, || format!("{name}: χ={product} above χ1·χ2 = {}", chi1 * chi2))?;
    let collapsed = chi(&lex_product(g1, &complete(chi2).unwrap()), 1)?;
    ensure(product == collapsed, || format!("{name}: χ={product} but G1[K_χ2] gives {collapsed}"))
}

fn criterion_10_bounds_and_monotonicity() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for t in 1..=6 {
        graphs.push((format!("K_{t}"), complete(t).unwrap()));
    }
    for p in 3..=12 {
        graphs.push((format!("C_{p}"), cycle(p).unwrap()));
    }
    let mut products = Vec::new();
    for l in 2..=4 {
        for m in 3..=4 {
            products.push(Instance::path_star(l, m));
        }
    }
    products.push(Instance::complete_path(3, 3));
    products.push(Instance::complete_path(3, 4));
    let mut solved = 0;
    for (name, g) in &graphs {
        solved += check_chain(name, g)?;
    }
    for inst in &products {
        let name = inst.to_string();
        solved += check_chain(&name, &inst.graph().unwrap())?;
        let (g1, g2) = inst.factors().unwrap().expect("product family");
        check_product_relations(&name, &g1, &g2)?;
    }
    Ok(format!(
        "{solved} (graph, r) values over {} graphs; product relations on {} products",
        graphs.len() + products.len(),
        products.len()
    ))
}

fn criterion_11_parametric_classification() -> Outcome {
    let configs = [
        SweepConfig::new(Family::PathStar, RSpan::Auto)
            .with_l(Span::single(3))
            .with_m(Span::new(3, 4)),
        SweepConfig::new(Family::CompletePath, RSpan::Auto)
            .with_m(Span::single(3))
            .with_n(Span::single(4)),
    ];
    let (mut confirmed, mut refuted) = (0, 0);
    for cfg in &configs {
        let report = sweep(cfg).map_err(|e| e.to_string())?;
        let csv = render_csv(&report).map_err(|e| e.to_string())?;
        ensure(csv.lines().count() == report.rows.len() + 1, || "incomplete CSV report".into())?;
        for row in &report.rows {
            let parametric = matches!(
                predict(&row.instance(), row.r).unwrap().value,
                PredictedValue::Parametric { .. }
            );
            if !parametric {
                continue;
            }
            match row.agreement {
                Agreement::HypothesisConfirmed => confirmed += 1,
                Agreement::HypothesisRefuted => refuted += 1,
                other => {
                    return Err(format!(
                        "{} r={}: parametric row classified {}",
                        row.instance(),
                        row.r,
                        other.as_str()
                    ))
                }
            }
        }
    }
    ensure(confirmed + refuted > 0, || "no parametric rows swept".into())?;
    Ok(format!("{confirmed} confirmed, {refuted} refuted"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("criterion_01_complete_graphs", criterion_01_complete_graphs),
        ("criterion_02_cycles", criterion_02_cycles),
        ("criterion_03_path_star_low_r", criterion_03_path_star_low_r),
        ("criterion_04_two_layer_star", criterion_04_two_layer_star),
        ("criterion_05_complete_path", criterion_05_complete_path),
        ("criterion_06_complete_path_lower_bounds", criterion_06_complete_path_lower_bounds),
        ("criterion_07_constructions", criterion_07_constructions),
        ("criterion_08_oracle_equivalence", criterion_08_oracle_equivalence),
        ("criterion_09_structural_formulas", criterion_09_structural_formulas),
        ("criterion_10_bounds_and_monotonicity", criterion_10_bounds_and_monotonicity),
        ("criterion_11_parametric_classification", criterion_11_parametric_classification),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let started = Instant::now();
        match run() {
            Ok(detail) => println!("PASS {name} ({:.2?}): {detail}", started.elapsed()),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name} ({:.2?}): {reason}", started.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
