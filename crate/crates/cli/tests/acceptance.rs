//! Acceptance criteria, one check per criterion. Every comparison is exact.
//!
//! Run with `cargo test -p jaco-cli --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use jaco_cli::run;
use jaco_core::clique::{clique_census, vertex_clique_degrees};
use jaco_core::pascal::{
    binomial, clique_matrix, clique_matrix_inverse, join_census, CliqueMatrix,
};
use jaco_core::verify::oracle::{
    brute_circumference, in_degree_by_scan, pascal_row, recurrence_census, subset_census,
    subset_vertex_degrees, validate_cover, validate_cycle,
};
use jaco_core::verify::tables::{TABLE1, TABLE2, TABLE3};
use jaco_core::verify::{
    regenerate_table, run_claim, ClaimParams, DenseGraph, Status, TableParams, Witness,
};
use jaco_core::{CliqueCensus, JacoTypeGraph, SequenceSpec, SetVariant, UndirectedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SUBSET_CAP: usize = 14;

fn jaco(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("jaco").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn graph(spec: &SequenceSpec, n: usize) -> JacoTypeGraph {
    JacoTypeGraph::build(spec, n).unwrap()
}

fn oracle_census<G: UndirectedGraph>(g: &G) -> CliqueCensus {
    subset_census(g, SUBSET_CAP, false).unwrap()
}

fn five_families() -> Vec<SequenceSpec> {
    vec![
        SequenceSpec::PositiveIntegers,
        SequenceSpec::Fibonacci,
        SequenceSpec::modulo(5),
        SequenceSpec::set_sequence(3, SetVariant::Definitional),
        SequenceSpec::LinearJaco,
    ]
}

fn ac1_table1() {
    let (code, out) = jaco(&["tables", "--id", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("100 cells, 100 match, 0 mismatch"), "{out}");
    let diff = regenerate_table(1, &TableParams::default()).unwrap();
    assert_eq!((diff.cells.len(), diff.mismatch_count), (100, 0));
    for n in 1..=10 {
        let oracle = oracle_census(&DenseGraph::complete(n));
        for l in 1..=10 {
            let cell = diff.cell(n, l).unwrap();
            assert_eq!(cell.paper, TABLE1[n - 1][l - 1]);
            assert_eq!(cell.computed, oracle.eta(l), "n={n} l={l}");
        }
    }
}

fn ac2_table2() {
    let diff = regenerate_table(2, &TableParams::default()).unwrap();
    assert_eq!((diff.cells.len(), diff.mismatch_count), (100, 0));
    for n in 1..=10usize {
        let oracle = subset_vertex_degrees(&DenseGraph::complete(n), SUBSET_CAP, false).unwrap();
        for l in 1..=10usize {
            let cell = diff.cell(n, l).unwrap();
            let choose = if l <= n {
                binomial(n as u64 - 1, l as u64 - 1).unwrap()
            } else {
                0
            };
            assert_eq!(cell.paper, TABLE2[n - 1][l - 1]);
            assert_eq!(cell.computed, choose, "n={n} l={l}");
            for row in &oracle {
                assert_eq!(row.get(l - 1).copied().unwrap_or(0), choose, "n={n} l={l}");
            }
        }
    }
}

fn ac3_example() {
    let g = graph(&SequenceSpec::PositiveIntegers, 8);
    let census = clique_census(&g, None).unwrap();
    assert_eq!(census.counts(), &[8, 16, 14, 6, 1]);
    // values stated in the worked example
    assert_eq!(&census.counts()[..3], &[8, 16, 14]);
    let oracle = oracle_census(&g);
    assert_eq!(
        (census.eta(4), census.eta(5)),
        (oracle.eta(4), oracle.eta(5))
    );
    assert_eq!(oracle.counts(), census.counts());
    let (code, out) = jaco(&["census", "--family", "s1", "--n", "8", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "l,count\n1,8\n2,16\n3,14\n4,6\n5,1\n");
}

fn ac4_table3() {
    let diff = regenerate_table(3, &TableParams::default()).unwrap();
    for c in diff.cells.iter().filter(|c| c.row <= 8) {
        assert!(c.matches(), "n={} l={}", c.row, c.col);
    }
    let cell = diff.cell(9, 3).unwrap();
    assert_eq!((cell.paper, cell.computed), (12, 14));
    assert_eq!(TABLE3[8][2], 12);
    let s2 = SequenceSpec::Fibonacci;
    assert_eq!(oracle_census(&graph(&s2, 9)).eta(3), 14);
    for n in 9..=12 {
        let oracle = oracle_census(&graph(&s2, n));
        let incremental = recurrence_census(&s2, n).unwrap();
        for l in 1..=7 {
            let c = diff.cell(n, l).unwrap();
            assert_eq!(c.computed, oracle.eta(l), "n={n} l={l}");
            assert_eq!(c.computed, incremental.eta(l), "n={n} l={l}");
        }
    }
}

fn ac5_table4() {
    let (code, out) = jaco(&["tables", "--id", "4", "--k", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("54 cells, 54 match, 0 mismatch"), "{out}");
    let s3 = SequenceSpec::modulo(5);
    let terms = s3.terms(18).unwrap();
    let g18 = graph(&s3, 18);
    for n in 4..=18usize {
        let census = clique_census(&graph(&s3, n), None).unwrap();
        assert_eq!(census.eta(2), 2 * n as u64 - 4, "n={n}");
        assert_eq!(census.eta(3), n as u64 - 3, "n={n}");
        assert_eq!(in_degree_by_scan(&terms, n), 2, "v{n}");
        assert_eq!(g18.in_degree(n), 2, "v{n}");
    }
}

fn ac6_pascal() {
    for n in 1..=12 {
        let a = clique_matrix(n).unwrap();
        let inv = clique_matrix_inverse(n).unwrap();
        let id = CliqueMatrix::identity(n);
        assert_eq!(a.mul(&inv).unwrap(), id);
        assert_eq!(inv.mul(&a).unwrap(), id);
        assert_eq!(a.determinant().unwrap(), 1);
    }
    for n in 1..=20usize {
        let census = clique_census(&DenseGraph::complete(n), None)
            .unwrap()
            .with_empty();
        let row = pascal_row(n);
        for j in 0..=n {
            assert_eq!(census.eta(j), census.eta(n - j), "n={n} j={j}");
            assert_eq!(census.eta(j), row[j], "n={n} j={j}");
        }
        assert_eq!(census.eta(0), 1);
    }
    for n in 1..=10usize {
        let mut census = clique_census(&DenseGraph::complete(1), None).unwrap();
        let mut g = DenseGraph::complete(1);
        for _ in 1..n {
            census = join_census(&census).unwrap();
            g = g.join_with_universal_vertex();
        }
        assert_eq!(oracle_census(&g), census);
        for l in 1..=10 {
            assert_eq!(census.eta(l), TABLE1[n - 1][l - 1], "n={n} l={l}");
        }
    }
}

fn ac7_join() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a41_434f);
    let mut failures = 0;
    for _ in 0..50 {
        let n = rng.random_range(0..=9usize);
        let p = rng.random_range(0.1..0.9);
        let g = DenseGraph::random(n, p, &mut rng);
        let before = oracle_census(&g);
        let after = oracle_census(&g.join_with_universal_vertex());
        for l in 0..=n {
            let eta_l = if l == 0 { 1 } else { before.eta(l) };
            if after.eta(l + 1) != before.eta(l + 1) + eta_l {
                failures += 1;
            }
        }
    }
    assert_eq!(failures, 0);
    let report = run_claim("P-2.2.3", &ClaimParams::default()).unwrap();
    assert_eq!(report.status, Status::Verified);
    assert!(report.checks.iter().all(|c| c.failures == 0));
}

fn find<'a>(reports: &'a [Value], id: &str) -> &'a Value {
    reports
        .iter()
        .find(|r| r["claim_id"] == id)
        .unwrap_or_else(|| panic!("{id} missing"))
}

fn check<'a>(report: &'a Value, prefix: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["label"].as_str().unwrap().starts_with(prefix))
        .unwrap_or_else(|| panic!("{} has no check {prefix}", report["claim_id"]))
}

fn sets(v: &Value) -> Vec<Vec<usize>> {
    serde_json::from_value(v.clone()).unwrap()
}

fn ac8_campaign() {
    let (code, out) = jaco(&["verify", "--all", "--format", "json"]);
    assert_eq!(code, 1);
    let reports: Vec<Value> = serde_json::from_str::<Value>(&out)
        .unwrap()
        .as_array()
        .unwrap()
        .clone();

    let l211 = find(&reports, "L-2.1.1");
    assert_eq!(l211["status"], "verified");
    assert!(l211["range"]
        .as_str()
        .unwrap()
        .starts_with("5 families, n <= 30"));
    assert_eq!(check(l211, "in-degree stability")["instances"], 5 * 29);

    let p212 = find(&reports, "P-2.1.2");
    assert_eq!(p212["status"], "refuted");
    assert_eq!(check(p212, "girth 3 as printed")["status"], "refuted");
    assert_eq!(
        check(p212, "girth 3 for non-decreasing")["status"],
        "verified"
    );
    assert_eq!(p212["witness"]["kind"], "sequence");
    assert_eq!(p212["witness"]["terms"], serde_json::json!([2, 0, 0]));
    assert_eq!(p212["witness"]["n"], 3);

    let p214 = find(&reports, "P-2.1.4");
    assert_eq!(p214["status"], "refuted");
    let w = &p214["witness"];
    assert_eq!(
        (w["kind"].as_str(), w["graph"].as_str()),
        (Some("cover"), Some("J_8(s1)"))
    );
    let (claimed, minimum) = (sets(&w["claimed"]), sets(&w["minimum"]));
    assert_eq!((claimed.len(), minimum.len()), (4, 3));
    assert_eq!(w["revalidated"], true);
    let j8 = graph(&SequenceSpec::PositiveIntegers, 8);
    assert!(validate_cover(&j8, &claimed) && validate_cover(&j8, &minimum));
    let (_, text) = jaco(&["verify", "--claim", "P-2.1.4"]);
    assert!(
        text.contains("minimum cover of size 3 [{v1,v2} {v2,v3,v4} {v4,v5,v6,v7,v8}]"),
        "{text}"
    );

    for (id, range) in [("T-2.3.4", "J_1(s1)..J_25(s1)"), ("C-2.3.5", "odd n <= 25")] {
        let r = find(&reports, id);
        assert_eq!(r["status"], "verified", "{id}");
        assert_eq!(r["range"], range);
    }
    let t234 = find(&reports, "T-2.3.4");
    assert_eq!(check(t234, "number of maximal cliques")["instances"], 25);
    assert_eq!(check(t234, "maximal-clique sizes")["status"], "verified");

    let l236 = find(&reports, "L-2.3.6");
    assert_eq!(l236["status"], "verified");
    assert!(l236["range"].as_str().unwrap().starts_with("2 <= l <= 30"));

    let l237 = find(&reports, "L-2.3.7");
    assert_eq!(check(l237, "C(d^-(v_{n+1}), i - 1)")["status"], "verified");
    assert_eq!(check(l237, "incremental census")["instances"], 25);
    assert_eq!(check(l237, "C(n+1, i)")["status"], "refuted");
    let rows: Vec<&str> = l237["witness"]["mismatches"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["instance"].as_str().unwrap())
        .collect();
    assert!(rows.iter().any(|r| r.starts_with("row n=6 ")), "{rows:?}");
}

fn ac9_circumference() {
    let g = graph(&SequenceSpec::PositiveIntegers, 8);
    let witness = [2usize, 3, 5, 7, 8, 6, 4];
    assert!(validate_cycle(&g, &witness));
    for k in 0..witness.len() {
        let (a, b) = (witness[k], witness[(k + 1) % witness.len()]);
        let (i, j) = (a.min(b), a.max(b));
        assert!(2 * i >= j);
    }
    let started = Instant::now();
    let cycle = brute_circumference(&g, 20, false).unwrap().unwrap();
    assert!(started.elapsed() < Duration::from_secs(10));
    assert!(validate_cycle(&g, &cycle));
    assert!(cycle.len() >= 7);

    let params = ClaimParams {
        family: Some(SequenceSpec::PositiveIntegers),
        n: Some(8),
        ..ClaimParams::default()
    };
    let started = Instant::now();
    let report = run_claim("P-2.1.3", &params).unwrap();
    assert!(started.elapsed() < Duration::from_secs(10));
    assert_eq!(report.status, Status::Refuted);
    assert_eq!(
        report
            .check("stated circumference of J_8(s1) is 5")
            .unwrap()
            .status,
        Status::Refuted
    );
    assert_eq!(
        report
            .check("circumference equals clique number")
            .unwrap()
            .status,
        Status::Refuted
    );
    match &report.witness {
        Some(Witness::Cycle {
            graph,
            cycle,
            length,
            claimed,
            revalidated,
        }) => {
            assert_eq!(graph, "J_8(s1)");
            assert_eq!((*length, *claimed), (cycle.len(), 5));
            assert!(*length >= 7 && *revalidated);
            assert!(validate_cycle(&g, cycle));
        }
        other => panic!("expected a cycle witness, got {other:?}"),
    }
}

fn ac10_properties() {
    for spec in five_families() {
        for n in 1..=SUBSET_CAP {
            let g = graph(&spec, n);
            let census = clique_census(&g, None).unwrap();
            assert_eq!(census, oracle_census(&g), "{spec} n={n}");
            let degrees = vertex_clique_degrees(&g).unwrap();
            for l in 1..=census.clique_number() {
                assert_eq!(
                    degrees.column_sum(l),
                    l as u128 * census.eta(l) as u128,
                    "{spec} n={n} l={l}"
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a41_434f);
    for _ in 0..100 {
        let n = rng.random_range(1..=12usize);
        let mut t = rng.random_range(0..=2u64);
        let terms: Vec<u64> = (0..n)
            .map(|_| {
                let cur = t;
                t += rng.random_range(0..=2u64);
                cur
            })
            .collect();
        let spec = SequenceSpec::explicit(terms);
        let mut g = graph(&spec, 1);
        for m in 1..n {
            let next = g.extend().unwrap();
            for i in 1..=m {
                assert_eq!(next.in_degree(i), g.in_degree(i), "{spec} m={m} v{i}");
            }
            g = next;
        }
        let census = clique_census(&g, None).unwrap();
        let degrees = vertex_clique_degrees(&g).unwrap();
        for l in 1..=census.clique_number() {
            assert_eq!(degrees.column_sum(l), l as u128 * census.eta(l) as u128);
        }
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, &str, fn()); 10] = [
        (
            "AC-1",
            "table 1 reproduced from explicit complete graphs",
            ac1_table1,
        ),
        (
            "AC-2",
            "table 2 vertex clique degrees equal C(n-1, l-1)",
            ac2_table2,
        ),
        ("AC-3", "J_8(s1) census (8, 16, 14, 6, 1)", ac3_example),
        (
            "AC-4",
            "table 3 consistent region and (9, K_3) diff",
            ac4_table3,
        ),
        (
            "AC-5",
            "table 4 with k = 5 and its linear patterns",
            ac5_table4,
        ),
        (
            "AC-6",
            "Pascal matrix inverse, determinant, symmetry, joins",
            ac6_pascal,
        ),
        (
            "AC-7",
            "join recurrence on 50 seeded random graphs",
            ac7_join,
        ),
        ("AC-8", "verify --all claim campaign", ac8_campaign),
        (
            "AC-9",
            "circumference adjudication on J_8(s1)",
            ac9_circumference,
        ),
        (
            "AC-10",
            "census, column-sum and extension property suites",
            ac10_properties,
        ),
    ];
    let mut failed = Vec::new();
    for (id, title, f) in criteria {
        let started = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f));
        let ms = started.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("[PASS] {id} {title} ({ms} ms)"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("[FAIL] {id} {title}: {msg}");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
