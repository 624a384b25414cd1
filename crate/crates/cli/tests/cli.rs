use std::collections::HashSet;
use std::path::Path;
use std::process::{Command, Output};

use pxgraph::colorings::color_k3_l2;
use pxgraph::graph::complete_graph;
use pxgraph::io;
use serde_json::Value;

fn pxgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pxgraph")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path = path.to_str().unwrap().to_owned();
    let mut full = args.to_vec();
    full.extend(["--out", &path]);
    let out = pxgraph(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn generate_complete_header_and_round_trip() {
    let out = pxgraph(&["generate", "complete", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("4 6 0"));
    let back = io::from_str(&text).unwrap();
    assert_eq!(back.graph.as_ref(), &complete_graph(4).unwrap());
    assert!(back.coloring.is_none());
}

#[test]
fn generate_rejects_bad_probability_and_missing_seed() {
    assert_eq!(code(&pxgraph(&["generate", "gnp", "--n", "5", "--p", "1.5", "--seed", "1"])), 64);
    assert_eq!(code(&pxgraph(&["generate", "gnp", "--n", "5", "--p", "0.5"])), 64);
    assert_eq!(code(&pxgraph(&["generate", "girth5", "--n", "30", "--delta", "5"])), 64);
}

#[test]
fn gnp_is_deterministic_per_seed() {
    let a = stdout(&pxgraph(&["generate", "gnp", "--n", "30", "--p", "0.3", "--seed", "7"]));
    let b = stdout(&pxgraph(&["generate", "gnp", "--n", "30", "--p", "0.3", "--seed", "7"]));
    let c = stdout(&pxgraph(&["generate", "gnp", "--n", "30", "--p", "0.3", "--seed", "8"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn girth5_output_rechecks() {
    let out = pxgraph(&["generate", "girth5", "--n", "30", "--delta", "5", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    let g = io::from_str(&stdout(&out)).unwrap().graph;
    let n = g.n();
    let adj: Vec<HashSet<u32>> = (0..n as u32).map(|v| g.neighbors(v).iter().map(|&(w, _)| w).collect()).collect();
    assert!(adj.iter().all(|a| a.len() >= 5));
    // no triangle and no 4-cycle: adjacent vertices share no neighbour, any two share at most one
    for u in 0..n {
        for v in u + 1..n {
            let common = adj[u].intersection(&adj[v]).count();
            if adj[u].contains(&(v as u32)) {
                assert_eq!(common, 0);
            } else {
                assert!(common <= 1);
            }
        }
    }
}

#[test]
fn color_schemes() {
    let out = pxgraph(&["color", "--scheme", "spanning", "--n", "2"]);
    assert_eq!(stdout(&out), "2 1 2\n0 1 1\n");

    let out = pxgraph(&["color", "--scheme", "k3l2", "--n", "6"]);
    assert_eq!(stdout(&out), io::to_string(&color_k3_l2(6).unwrap()));
}

#[test]
fn random_coloring_needs_seed_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "in.g", &["generate", "gnp", "--n", "12", "--p", "0.5", "--seed", "4"]);
    let a = pxgraph(&["color", "--scheme", "random", "--colors", "2", "--seed", "3", &g]);
    let b = pxgraph(&["color", "--scheme", "random", "--colors", "2", "--seed", "3", &g]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let parsed = io::from_str(&stdout(&a)).unwrap();
    assert_eq!(parsed.graph.as_ref(), io::from_str(&std::fs::read_to_string(&g).unwrap()).unwrap().graph.as_ref());
    assert_eq!(code(&pxgraph(&["color", "--scheme", "random", &g])), 64);
}

#[test]
fn named_scheme_on_non_complete_input_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "b.g", &["generate", "bipartite", "--m", "3", "--n", "3"]);
    assert_eq!(code(&pxgraph(&["color", "--scheme", "k3l2", &g])), 65);
}

#[test]
fn redblue_colours_subgraph_red() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "b.g", &["generate", "bipartite", "--m", "2", "--n", "2"]);
    let c = io::from_str(&stdout(&pxgraph(&["color", "--scheme", "redblue", &g]))).unwrap().coloring.unwrap();
    assert_eq!(c.graph().m(), 6);
    assert_eq!(c.count(1), 4);
    assert_eq!(c.color(0, 1), Some(2));
    assert_eq!(c.color(0, 2), Some(1));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "k8.g", &["color", "--scheme", "k3l2", "--n", "8"]);
    let out = pxgraph(&["verify", &good, "--k", "3", "--l", "2", "--mode", "exhaustive"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["subsets_checked"], 56);

    // all colour 1
    let plain = write(dir.path(), "plain.g", &["generate", "complete", "--n", "8"]);
    let text = std::fs::read_to_string(&plain).unwrap();
    let mut mono = String::from("8 28 1\n");
    for line in text.lines().skip(1) {
        mono.push_str(&format!("{line} 1\n"));
    }
    let mono_path = dir.path().join("mono.g");
    std::fs::write(&mono_path, mono).unwrap();
    let out = pxgraph(&["verify", mono_path.to_str().unwrap(), "--k", "3", "--l", "2"]);
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "fail");
    assert_eq!(report["failures"][0]["achieved"], 0);

    assert_eq!(code(&pxgraph(&["verify", &good, "--k", "3", "--l", "0"])), 64);
    assert_eq!(code(&pxgraph(&["verify", &good, "--k", "3", "--l", "1", "--mode", "sample:5"])), 64);
    assert_eq!(code(&pxgraph(&["verify", &good, "--k", "3", "--l", "1", "--mode", "sample:x", "--seed", "1"])), 64);
    assert_eq!(code(&pxgraph(&["verify", &plain, "--k", "3", "--l", "1"])), 65);
    assert_eq!(code(&pxgraph(&["verify", &good, "--k", "3", "--l", "1", "--node-limit", "0"])), 64);

    let out = pxgraph(&["verify", &good, "--k", "3", "--l", "1", "--mode", "sample:10", "--seed", "5"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["subsets_checked"], 10);
}

#[test]
fn bounds_table() {
    let t = stdout(&pxgraph(&["bounds", "--k", "3", "--l", "1"]));
    let row = |name: &str| t.lines().find(|l| l.starts_with(name)).unwrap().split_whitespace().nth(1).unwrap().to_owned();
    assert_eq!(row("explicit_threshold"), "311");
    let prob: f64 = row("probabilistic_threshold").parse().unwrap();
    // 2k(k+l) ln(1 / (1 - 2^-(2k-3))) with k=3, l=1
    let expected = 24.0 * (8.0f64 / 7.0).ln();
    assert!((prob - expected).abs() < 1e-6);
    assert_eq!(row("base_a"), "8/7");
    assert!(t.contains("no closed form"));

    let t = stdout(&pxgraph(&["bounds", "--k", "3", "--l", "2"]));
    assert!(t.lines().any(|l| l.starts_with("explicit_threshold") && l.ends_with(" 799")));
    assert_eq!(code(&pxgraph(&["bounds", "--k", "2", "--l", "1"])), 64);
}

#[test]
fn path_rate_matches_analytic() {
    let out = pxgraph(&["experiment", "path-rate", "--k", "3", "--len", "4", "--trials", "100000", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    let rate = r["rate"].as_f64().unwrap();
    let sd = (0.125f64 * 0.875 / 100_000.0).sqrt();
    assert!((rate - 0.125).abs() < 4.0 * sd, "rate {rate}");
    assert_eq!(code(&pxgraph(&["experiment", "path-rate", "--k", "3", "--trials", "10"])), 64);
}

#[test]
fn sweep_emits_csv_and_saturation() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("sweep.json");
    let out = pxgraph(&[
        "experiment", "sweep", "--k", "3", "--c", "5", "--n", "20,40", "--trials", "2", "--subsets", "3", "--seed", "2",
        "--json", json.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,p,k,l,trials,success_fraction,ci_low,ci_high,indeterminate_fraction,elapsed_ms"));
    assert_eq!(lines.clone().count(), 2);
    assert!(lines.next().unwrap().starts_with("20,1.000000,3,1,2,"));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("n=20") && err.contains("saturated=true"));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(saved["points"][1]["threshold"]["saturated"], true);
    assert_eq!(saved["config"]["seed"], 2);
}

#[test]
fn mc_named_colouring_always_succeeds() {
    let out = pxgraph(&["experiment", "mc", "--family", "complete", "--n", "6", "--k", "3", "--l", "2", "--scheme", "k3l2", "--trials", "1"]);
    assert_eq!(code(&out), 0);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["success_fraction"], 1.0);
    let random = ["experiment", "mc", "--family", "complete", "--n", "6", "--k", "3", "--l", "1", "--scheme", "random", "--trials", "3"];
    assert_eq!(code(&pxgraph(&random)), 64);
}

#[test]
fn decompose_partitions_edges() {
    for n in [6usize, 7] {
        let out = pxgraph(&["decompose", "--n", &n.to_string()]);
        assert_eq!(code(&out), 0);
        let r: Value = serde_json::from_slice(&out.stdout).unwrap();
        let cyclic = n % 2 == 1;
        assert_eq!(r["kind"], if cyclic { "cycles" } else { "paths" });
        let mut seen = HashSet::new();
        for m in r["members"].as_array().unwrap() {
            let vs: Vec<u64> = m.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
            assert_eq!(vs.len(), n);
            let mut pairs: Vec<(u64, u64)> = vs.windows(2).map(|w| (w[0], w[1])).collect();
            if cyclic {
                pairs.push((vs[n - 1], vs[0]));
            }
            for (a, b) in pairs {
                assert!(seen.insert((a.min(b), a.max(b))));
            }
        }
        assert_eq!(seen.len(), n * (n - 1) / 2);
    }
}

#[test]
fn jobs_must_be_positive() {
    assert_eq!(code(&pxgraph(&["--jobs", "0", "bounds", "--k", "3", "--l", "1"])), 64);
    assert_eq!(code(&pxgraph(&["--jobs", "2", "bounds", "--k", "3", "--l", "1"])), 0);
    assert_eq!(code(&pxgraph(&["--help"])), 0);
    assert_eq!(code(&pxgraph(&["nonsense"])), 64);
}
