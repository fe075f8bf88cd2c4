use std::io::Write;

use jaco_core::clique::{
    canonical_cover, clique_census, clique_number, maximal_cliques, min_clique_cover,
    vertex_clique_degrees,
};
use jaco_core::pascal::{
    clique_matrix, clique_matrix_inverse, complete_clique_degree, eta_complete,
    max_degree_clique_sizes, CliqueMatrix,
};
use jaco_core::verify::oracle::{brute_circumference, brute_girth};
use jaco_core::verify::{
    regenerate_table, run_all, run_claim, ClaimParams, ClaimReport, Status, TableParams,
    DEFAULT_SEED,
};
use jaco_core::{Budgets, ExportFormat, JacoError, JacoTypeGraph, SequenceSpec};
use serde_json::{json, Value};

use crate::{
    emit, usage, CensusArgs, CliResult, Format, GraphArgs, PascalArgs, PascalView, TablesArgs,
    VerifyArgs, EXIT_OK, EXIT_REFUTED,
};

fn load(a: &GraphArgs, command: &str) -> CliResult<(JacoTypeGraph, Budgets)> {
    let budgets = a.budgets.budgets()?;
    let spec = a
        .family
        .spec()?
        .ok_or_else(|| usage(format!("{command} needs --family")))?;
    let n = match (a.n, &spec) {
        (Some(n), _) => n,
        (None, SequenceSpec::Explicit { terms }) => terms.len(),
        (None, _) => return Err(usage(format!("{command} needs --n"))),
    };
    Ok((JacoTypeGraph::build(&spec, n)?, budgets))
}

fn name(g: &JacoTypeGraph) -> String {
    format!("J_{}({})", g.n(), g.spec())
}

fn set_text(c: &[usize]) -> String {
    let labels: Vec<String> = c.iter().map(|v| format!("v{v}")).collect();
    format!("{{{}}}", labels.join(","))
}

fn sets_text(cs: &[Vec<usize>]) -> String {
    cs.iter().map(|c| set_text(c)).collect::<Vec<_>>().join(" ")
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub(crate) fn build(a: &GraphArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = a
        .output
        .format("build", &[Format::Dot, Format::EdgeList, Format::Json])?;
    let (g, _) = load(a, "build")?;
    let export = match format {
        Format::Dot => ExportFormat::Dot,
        Format::EdgeList => ExportFormat::EdgeList,
        _ => ExportFormat::Json,
    };
    emit(&g.export(export), a.output.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

pub(crate) fn census(a: &CensusArgs, out: &mut dyn Write) -> CliResult<i32> {
    let ga = &a.graph;
    let format = ga
        .output
        .format("census", &[Format::Text, Format::Csv, Format::Json])?;
    let (g, budgets) = load(ga, "census")?;
    budgets.check_census("clique census", g.n())?;
    let census = clique_census(&g, a.max_size)?;
    let text = match format {
        Format::Csv => census.to_csv(),
        Format::Json => {
            let mut v = census.to_json();
            if let Value::Object(map) = &mut v {
                map.insert("graph".into(), Value::String(name(&g)));
            }
            pretty(&v)
        }
        _ => {
            let mut s = format!("{} clique census\n", name(&g));
            for (k, c) in census.counts().iter().enumerate() {
                s.push_str(&format!("K_{}: {c}\n", k + 1));
            }
            s
        }
    };
    emit(&text, ga.output.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

pub(crate) fn degrees(a: &GraphArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = a
        .output
        .format("degrees", &[Format::Text, Format::Csv, Format::Json])?;
    let (g, budgets) = load(a, "degrees")?;
    budgets.check_census("vertex clique degrees", g.n())?;
    let table = vertex_clique_degrees(&g)?;
    let text = match format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let mut v = table.to_json();
            if let Value::Object(map) = &mut v {
                map.insert("graph".into(), Value::String(name(&g)));
            }
            pretty(&v)
        }
        _ => {
            let mut s = format!(
                "{} vertex clique degrees (l = 1..{})\n",
                name(&g),
                table.max_size()
            );
            for v in 1..=table.order() {
                let row: Vec<String> = table.row(v).iter().map(u64::to_string).collect();
                s.push_str(&format!("v{v}: {}\n", row.join(" ")));
            }
            s
        }
    };
    emit(&text, a.output.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

pub(crate) fn maximal(a: &GraphArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = a
        .output
        .format("maximal", &[Format::Text, Format::Csv, Format::Json])?;
    let (g, budgets) = load(a, "maximal")?;
    budgets.check_census("maximal clique enumeration", g.n())?;
    let cliques = maximal_cliques(&g);
    let text = match format {
        Format::Csv => {
            let mut s = String::from("clique,size,vertices\n");
            for (k, c) in cliques.iter().enumerate() {
                let vs: Vec<String> = c.iter().map(usize::to_string).collect();
                s.push_str(&format!("{},{},{}\n", k + 1, c.len(), vs.join(" ")));
            }
            s
        }
        Format::Json => pretty(&json!({
            "graph": name(&g),
            "count": cliques.len(),
            "cliques": cliques,
        })),
        _ => {
            let omega = cliques.iter().map(Vec::len).max().unwrap_or(0);
            let mut s = format!(
                "{}: {} maximal cliques, clique number {omega}\n",
                name(&g),
                cliques.len()
            );
            for c in &cliques {
                s.push_str(&format!("{}\n", set_text(c)));
            }
            s
        }
    };
    emit(&text, a.output.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

const CYCLE_RATIONALE: &str = "exhaustive longest-cycle search is exponential in n";

pub(crate) fn invariants(a: &GraphArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = a
        .output
        .format("invariants", &[Format::Text, Format::Json])?;
    let (g, budgets) = load(a, "invariants")?;
    budgets.check_census("invariants", g.n())?;
    let n = g.n();
    let (delta, jaconian) = g.jaconian_set();
    let omega = clique_number(&g);
    let girth = brute_girth(&g);

    let circumference = match brute_circumference(&g, budgets.cycle, budgets.force) {
        Ok(c) => Ok(c),
        Err(JacoError::BudgetExceeded { budget, .. }) => Err(format!(
            "not computed: n = {n} exceeds the cycle-search budget {budget} ({CYCLE_RATIONALE}); pass --force to search anyway"
        )),
        Err(e) => return Err(e.into()),
    };
    let canonical = match canonical_cover(&g) {
        Ok(c) => Ok(c.cliques),
        Err(JacoError::PreconditionViolation(_)) => {
            Err("not defined: the sequence is not non-decreasing".to_string())
        }
        Err(e) => return Err(e.into()),
    };
    let minimum = min_clique_cover(&g, budgets.census, budgets.force)?.cliques;

    let text = match format {
        Format::Json => {
            let circ = match &circumference {
                Ok(c) => json!({
                    "length": c.as_ref().map(Vec::len),
                    "cycle": c,
                }),
                Err(why) => json!({ "skipped": why }),
            };
            let canon = match &canonical {
                Ok(c) => json!({ "size": c.len(), "cliques": c }),
                Err(why) => json!({ "skipped": why }),
            };
            pretty(&json!({
                "graph": name(&g),
                "n": n,
                "arcs": g.arc_count(),
                "max_degree": delta,
                "jaconian_set": jaconian,
                "prime_jaconian_vertex": g.prime_jaconian_vertex(),
                "clique_number": omega,
                "girth": girth,
                "circumference": circ,
                "canonical_cover": canon,
                "minimum_cover": { "size": minimum.len(), "cliques": minimum },
            }))
        }
        _ => {
            let mut s = format!("graph: {}\norder: {n}\narcs: {}\n", name(&g), g.arc_count());
            s.push_str(&format!("max degree: {delta}\n"));
            s.push_str(&format!("jaconian set: {}\n", set_text(&jaconian)));
            s.push_str(&format!(
                "prime jaconian vertex: {}\n",
                g.prime_jaconian_vertex()
                    .map_or("none".to_string(), |v| format!("v{v}"))
            ));
            s.push_str(&format!("clique number: {omega}\n"));
            s.push_str(&format!(
                "girth: {}\n",
                girth.map_or("none (acyclic)".to_string(), |x| x.to_string())
            ));
            match &circumference {
                Ok(Some(c)) => {
                    let vs: Vec<String> = c.iter().map(|v| format!("v{v}")).collect();
                    s.push_str(&format!("circumference: {} ({})\n", c.len(), vs.join(",")));
                }
                Ok(None) => s.push_str("circumference: none (acyclic)\n"),
                Err(why) => s.push_str(&format!("circumference: {why}\n")),
            }
            match &canonical {
                Ok(c) => s.push_str(&format!("canonical cover: {} {}\n", c.len(), sets_text(c))),
                Err(why) => s.push_str(&format!("canonical cover: {why}\n")),
            }
            s.push_str(&format!(
                "minimum clique cover: {} {}\n",
                minimum.len(),
                sets_text(&minimum)
            ));
            s
        }
    };
    emit(&text, a.output.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn matrix_text(m: &CliqueMatrix) -> String {
    let mut s = String::new();
    for r in m.rows() {
        let row: Vec<String> = r.iter().map(i64::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub(crate) fn pascal(a: &PascalArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = a
        .output
        .format("pascal", &[Format::Text, Format::Csv, Format::Json])?;
    let n = a.n;
    let text = match a.what {
        PascalView::Matrix | PascalView::Inverse => {
            let (label, m) = if a.what == PascalView::Matrix {
                ("matrix", clique_matrix(n)?)
            } else {
                ("inverse", clique_matrix_inverse(n)?)
            };
            match format {
                Format::Csv => m.to_csv(),
                Format::Json => pretty(&json!({
                    "what": label,
                    "n": n,
                    "determinant": m.determinant()?.to_string(),
                    "rows": m.rows(),
                })),
                _ => format!(
                    "{label} n={n} det={}\n{}",
                    m.determinant()?,
                    matrix_text(&m)
                ),
            }
        }
        PascalView::Degrees => {
            let n64 = n as u64;
            let rows: Vec<(u64, u64, u64)> = (1..=n64)
                .map(|l| Ok((l, eta_complete(n64, l)?, complete_clique_degree(n64, l)?)))
                .collect::<Result<_, JacoError>>()?;
            let peak = max_degree_clique_sizes(n64);
            match format {
                Format::Csv => {
                    let mut s = String::from("l,eta,degree\n");
                    for (l, e, d) in &rows {
                        s.push_str(&format!("{l},{e},{d}\n"));
                    }
                    s
                }
                Format::Json => pretty(&json!({
                    "n": n,
                    "eta": rows.iter().map(|r| r.1).collect::<Vec<_>>(),
                    "degree": rows.iter().map(|r| r.2).collect::<Vec<_>>(),
                    "peak_sizes": peak,
                })),
                _ => {
                    let mut s = format!("K_{n}: clique census and vertex clique degree by size\n");
                    for (l, e, d) in &rows {
                        s.push_str(&format!("K_{l}: eta={e} degree={d}\n"));
                    }
                    let peak: Vec<String> = peak.iter().map(u64::to_string).collect();
                    s.push_str(&format!("peak degree sizes: {}\n", peak.join(",")));
                    s
                }
            }
        }
    };
    emit(&text, a.output.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

pub(crate) fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = a.output.format("verify", &[Format::Text, Format::Json])?;
    let params = ClaimParams {
        family: a.family.spec()?,
        n: a.n,
        seed: a.seed.unwrap_or(DEFAULT_SEED),
        budgets: a.budgets.budgets()?,
    };
    let reports: Vec<ClaimReport> = match &a.claim {
        Some(id) => vec![run_claim(id, &params)?],
        None => run_all(&params),
    };
    let text = match format {
        Format::Json if a.claim.is_some() => pretty(&reports[0]),
        Format::Json => pretty(&reports),
        _ => {
            let mut s: String = reports.iter().map(ClaimReport::to_text).collect();
            let count = |st: Status| reports.iter().filter(|r| r.status == st).count();
            s.push_str(&format!(
                "{} claims: {} verified, {} partial, {} refuted (seed {})\n",
                reports.len(),
                count(Status::Verified),
                count(Status::Partial),
                count(Status::Refuted),
                params.seed
            ));
            s
        }
    };
    emit(&text, a.output.out.as_deref(), out)?;
    let refuted = reports.iter().any(|r| r.status == Status::Refuted);
    Ok(if refuted { EXIT_REFUTED } else { EXIT_OK })
}

pub(crate) fn tables(a: &TablesArgs, out: &mut dyn Write) -> CliResult<i32> {
    let format = a
        .output
        .format("tables", &[Format::Text, Format::Csv, Format::Json])?;
    let params = TableParams {
        k: a.k,
        variant: a.variant,
    };
    let ids: Vec<u8> = a.id.map_or_else(|| (1..=5).collect(), |id| vec![id]);
    let diffs = ids
        .iter()
        .map(|&id| regenerate_table(id, &params))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match format {
        Format::Csv => {
            let mut s = String::from("table,row,col,paper,computed,match\n");
            for d in &diffs {
                s.extend(d.to_csv().lines().skip(1).map(|l| format!("{l}\n")));
            }
            s
        }
        Format::Json if diffs.len() == 1 => pretty(&diffs[0]),
        Format::Json => pretty(&diffs),
        _ => diffs.iter().map(|d| d.to_text()).collect(),
    };
    emit(&text, a.output.out.as_deref(), out)?;
    let mismatched = diffs.iter().any(|d| d.mismatch_count > 0);
    Ok(if mismatched { EXIT_REFUTED } else { EXIT_OK })
}
