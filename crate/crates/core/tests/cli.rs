use bounded_expansion::cli::{run, Outcome};
use bounded_expansion::graph::parse_graph6;
use bounded_expansion::Graph;
use serde_json::Value;

fn bexp(args: &[&str], stdin: &str) -> Outcome {
    run(std::iter::once("bexp").chain(args.iter().copied()), &mut stdin.as_bytes())
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

const C5: &str = "0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn pi_exact_of_c5() {
    let out = bexp(&["pi-exact"], C5);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["result"]["pi"], 4);
    assert_eq!(v["subcommand"], "pi-exact");
}

#[test]
fn nested_queue_pair_exits_one() {
    let out = bexp(&["layout-check", "--layout", "tests/data/k4-bad.layout"], "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(out.code, 1);
    let v = json(&out);
    let violations = v["result"]["violations"].as_array().unwrap();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0]["edges"], serde_json::json!([[0, 3], [1, 2]]));
}

#[test]
fn graph6_round_trip() {
    let out = bexp(&["convert", "--to", "graph6"], "0 1\n1 2\n");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "Bg\n");
    assert_eq!(parse_graph6(out.stdout.trim()).unwrap(), Graph::path(3));
    let single = bexp(&["convert", "--to", "graph6"], "0 1\n2\n");
    assert_eq!(single.stdout, "B_\n");
    let back = bexp(&["convert", "--to", "edgelist", "--format", "graph6"], &out.stdout);
    assert_eq!(back.stdout, "0 1\n1 2\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bexp(&["no-such-command"], "").code, 2);
    assert_eq!(bexp(&["grad"], C5).code, 2);
    let missing = bexp(&["hadwiger", "--input", "tests/data/does-not-exist"], "");
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.contains("does-not-exist"));
    let garbage = bexp(&["pi-exact"], "0 x\n");
    assert_eq!(garbage.code, 2);
}

#[test]
fn cap_exceeded_explains() {
    let k13: String = (0..13).flat_map(|u| (u + 1..13).map(move |v| format!("{u} {v}\n"))).collect();
    let out = bexp(&["grad", "--depth", "1"], &k13);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--cap"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn help_and_version_exit_zero() {
    let help = bexp(&["--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("audit-random"));
    assert_eq!(bexp(&["--version"], "").code, 0);
}

#[test]
fn report_schema() {
    let out = bexp(&["audit-grads", "--depth", "1"], C5);
    let v = json(&out);
    for key in ["subcommand", "inputs", "result", "checks", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v.get("seed").is_none());
    for c in v["checks"].as_array().unwrap() {
        assert!(c["name"].is_string() && c["pass"].is_boolean());
        assert!(c["lhs"].is_object() && c["rhs"].is_object());
    }
    let grad = json(&bexp(&["grad", "--depth", "0"], C5));
    assert_eq!(grad["result"]["value_num"], 1);
    assert_eq!(grad["result"]["value_den"], 1);
}

#[test]
fn seed_determines_gnp() {
    let a = bexp(&["gnp", "--n", "50", "--p", "0.1", "--seed", "4"], "");
    let b = bexp(&["gnp", "--n", "50", "--p", "0.1", "--seed", "4"], "");
    let c = bexp(&["gnp", "--n", "50", "--p", "0.1", "--seed", "5"], "");
    assert_eq!(a, b);
    assert_ne!(a.stdout, c.stdout);
    let g = bounded_expansion::graph::parse_edge_list(&a.stdout).unwrap();
    assert_eq!(g.n(), 50);
    let report = json(&bexp(&["gnp", "--n", "50", "--p", "0.1", "--seed", "4", "--json"], ""));
    assert_eq!(report["seed"], 4);
    assert_eq!(report["result"]["m"].as_u64().unwrap() as usize, g.m());
}

#[test]
fn audit_random_csv() {
    let out = bexp(&["audit-random", "--lemma", "degree-tail", "--params", "n=1000", "--trials", "4", "--seed", "1", "--csv"], "");
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "trial,seed,statistic,pass");
    assert_eq!(lines.len(), 5);
    assert!(lines[2].starts_with("1,2,"));
    let bad = bexp(&["audit-random", "--lemma", "cycles", "--params", "c"], "");
    assert_eq!(bad.code, 2);
}

#[test]
fn colouring_subcommands() {
    let knd = json(&bexp(&["colour-knd", "--n", "4", "--d", "2", "--A", "1", "--B", "2"], ""));
    assert!(knd["result"]["colours_used"].as_u64().unwrap() <= 17);
    let kn = bexp(&["colour-knprime", "--n", "5"], "");
    assert_eq!(kn.code, 0);
    let thue = json(&bexp(&["thue", "--length", "10"], ""));
    assert_eq!(thue["result"]["word"], "abcacbabcb");
    let sub = bexp(&["colour-subdivision", "--t", "2"], C5);
    assert_eq!(sub.code, 0, "{}", sub.stderr);
    let star = bexp(&["nonrep-check", "--colouring", "tests/data/c5.colouring", "--mode", "proper"], C5);
    assert_eq!(star.code, 0, "{}", star.stdout);
}

#[test]
fn drawing_and_layout_subcommands() {
    let k4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    let d = json(&bexp(&["drawing-audit", "--drawing", "tests/data/k4.drawing", "--k", "1"], k4));
    assert_eq!(d["result"]["crossings"], 1);
    let q = json(&bexp(&["queue-number"], k4));
    assert_eq!(q["result"]["pages"], 2);
    let s = json(&bexp(&["stack-number"], k4));
    assert_eq!(s["result"]["pages"], 2);
    let j = json(&bexp(&["jump-number", "--input", "tests/data/b2.poset"], ""));
    assert_eq!(j["result"]["jump_number"], 1);
    let c = bexp(&["contract-queue", "--layout", "tests/data/c5.layout", "--parts", "tests/data/c5.parts", "--radius", "0"], C5);
    assert_eq!(c.code, 2, "radius-1 part with radius 0 must be rejected");
}
