use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use pxgraph::coloring::color_uniform_random;
use pxgraph::colorings::{color_k3_l2, color_kn1_l2, color_spanning, red_blue_from_subgraph};
use pxgraph::constructions::{
    base_a, base_a_f64, explicit_threshold, girth5_min_degree_graph, probabilistic_threshold, sauer_order_bound,
};
use pxgraph::experiments::{
    bipartite_n2, common_neighbor_stats, gnp_threshold_sweep, monte_carlo_success, path_properness_rate,
    sweep_csv, threshold_probability, ColoringScheme, ExperimentConfig, GraphFamily, SubsetSampling, SweepConfig,
};
use pxgraph::graph::{complete_bipartite, complete_graph, gnp_random};
use pxgraph::ham::{ham_cycle_decomposition, ham_path_decomposition};
use pxgraph::io::{self, ColoredGraph};
use pxgraph::verifier::{kappa_complete_formula, verify_coloring, SubsetMode, VerifyOptions};
use pxgraph::{Budget, EdgeColoring, Graph, Seed};

use crate::args::{ColorArgs, Command, ExperimentKind, Family, GenerateKind, McArgs, McScheme, Mode, Scheme, VerifyArgs};
use crate::{CliError, EXIT_PARTIAL};

type CmdResult = Result<u8, CliError>;

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Generate { kind, out } => generate(kind, out.as_deref()),
        Command::Color(args) => color(args),
        Command::Verify(args) => verify(args),
        Command::Decompose { n } => decompose(n),
        Command::Bounds { k, l } => bounds(k as usize, l as usize),
        Command::Experiment { kind } => experiment(kind),
    }
}

fn need_seed(seed: Option<u64>, what: &str) -> Result<Seed, CliError> {
    seed.map(Seed).ok_or_else(|| CliError::usage(format!("--seed is required for {what}")))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    let res = match out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            w.write_all(text.as_bytes())?;
            w.flush()
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush())
        }
    };
    res.map_err(|e| CliError::data(format!("cannot write output: {e}")))
}

fn read_input(path: &Path) -> Result<ColoredGraph, CliError> {
    let f = File::open(path).map_err(|e| CliError::data(format!("cannot open {}: {e}", path.display())))?;
    io::read(BufReader::new(f)).map_err(|e| CliError::data(format!("{}: {e}", path.display())))
}

fn round6(v: Value) -> Value {
    match v {
        Value::Number(x) if x.is_f64() => {
            let f = x.as_f64().unwrap();
            json!((f * 1e6).round() / 1e6)
        }
        Value::Array(xs) => Value::Array(xs.into_iter().map(round6).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, round6(v))).collect()),
        other => other,
    }
}

/// Pretty JSON with every float rounded to six decimals.
fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serialisable");
    let mut s = serde_json::to_string_pretty(&round6(v)).expect("serialisable");
    s.push('\n');
    s
}

fn graph_text(g: &Graph) -> String {
    let mut buf = Vec::new();
    io::write_graph(&mut buf, g).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii")
}

fn generate(kind: GenerateKind, out: Option<&Path>) -> CmdResult {
    let g = match kind {
        GenerateKind::Complete { n } => complete_graph(n)?,
        GenerateKind::Bipartite { m, n } => complete_bipartite(m, n)?,
        GenerateKind::Gnp { n, p, seed } => gnp_random(n, p, need_seed(seed, "gnp")?)?,
        GenerateKind::Girth5 { n, delta, seed } => {
            let g = girth5_min_degree_graph(n, delta, need_seed(seed, "girth5")?)?;
            eprintln!("girth {:?}, min degree {}", g.girth(), g.min_degree());
            g
        }
    };
    write_out(out, &graph_text(&g))?;
    Ok(0)
}

fn color(args: ColorArgs) -> CmdResult {
    let input = args.input.as_deref().map(read_input).transpose()?;
    let complete_order = |input: &Option<ColoredGraph>| -> Result<usize, CliError> {
        match (args.n, input) {
            (Some(_), Some(_)) => Err(CliError::usage("give either --n or an input file, not both")),
            (Some(n), None) => Ok(n),
            (None, Some(cg)) if cg.graph.is_complete() => Ok(cg.graph.n()),
            (None, Some(_)) => Err(CliError::data(format!("scheme {:?} needs a complete graph", args.scheme))),
            (None, None) => Err(CliError::usage("give --n or an input file")),
        }
    };
    let coloring: EdgeColoring = match args.scheme {
        Scheme::K3l2 => color_k3_l2(complete_order(&input)?)?,
        Scheme::Kn1l2 => color_kn1_l2(complete_order(&input)?)?,
        Scheme::Spanning => color_spanning(complete_order(&input)?)?,
        Scheme::Random => {
            let seed = need_seed(args.seed, "the random scheme")?;
            let g = match (&input, args.n) {
                (Some(_), Some(_)) => return Err(CliError::usage("give either --n or an input file, not both")),
                (Some(cg), None) => cg.graph.clone(),
                (None, Some(n)) => Arc::new(complete_graph(n)?),
                (None, None) => return Err(CliError::usage("give --n or an input file")),
            };
            color_uniform_random(g, args.colors, seed)?
        }
        Scheme::Redblue => {
            let cg = input.ok_or_else(|| CliError::usage("redblue needs the red subgraph as input file"))?;
            red_blue_from_subgraph(&cg.graph)?
        }
    };
    write_out(args.out.as_deref(), &io::to_string(&coloring))?;
    Ok(0)
}

fn budget(node_limit: Option<u64>, time_limit_ms: Option<u64>) -> Budget {
    let mut b = Budget::default();
    if let Some(n) = node_limit {
        b.node_limit = n;
    }
    b.time_limit = time_limit_ms.map(Duration::from_millis);
    b
}

fn verify(args: VerifyArgs) -> CmdResult {
    let cg = read_input(&args.input)?;
    let coloring = cg
        .coloring
        .ok_or_else(|| CliError::data(format!("{} has no colouring (header r = 0)", args.input.display())))?;
    let mode = match args.mode {
        Mode::Exhaustive => SubsetMode::Exhaustive,
        Mode::Sample(count) => SubsetMode::Sampled { count, seed: need_seed(args.seed, "sampled mode")? },
    };
    let opts = VerifyOptions {
        budget: budget(args.node_limit, args.time_limit_ms),
        keep_witnesses: args.witnesses,
        max_exhaustive_vertices: args.max_exhaustive,
        graph_id: Some(args.input.display().to_string()),
        ..VerifyOptions::default()
    };
    let l = args.l as usize;
    eprintln!("verifying n={} k={} l={} mode={:?}", coloring.graph().n(), args.k, l, args.mode);
    let report = verify_coloring(&coloring, args.k, l, mode, &opts)?;
    eprintln!(
        "{:?}: {} subsets, {} failures, {} indeterminate, {} ms",
        report.verdict,
        report.subsets_checked,
        report.failures.len(),
        report.indeterminate.len(),
        report.elapsed_ms
    );
    write_out(args.out.as_deref(), &to_json(&report))?;
    Ok(report.verdict.exit_code() as u8)
}

fn decompose(n: usize) -> CmdResult {
    let (kind, members) = if n % 2 == 0 {
        ("paths", ham_path_decomposition(n)?)
    } else {
        ("cycles", ham_cycle_decomposition(n)?)
    };
    let members: Vec<_> = members.into_iter().map(|m| m.vertices).collect();
    write_out(None, &to_json(&json!({ "n": n, "kind": kind, "members": members })))?;
    Ok(0)
}

fn bounds(k: usize, l: usize) -> CmdResult {
    let explicit = explicit_threshold(k, l)?;
    let probabilistic = probabilistic_threshold(k, l)?;
    let a = base_a(k)?;
    let delta = l * (k - 1) + k;
    let sauer = sauer_order_bound(delta, 5)?;
    let mut out = String::new();
    out.push_str(&format!("k                        {k}\n"));
    out.push_str(&format!("l                        {l}\n"));
    out.push_str(&format!("explicit_threshold       {explicit}\n"));
    out.push_str(&format!("probabilistic_threshold  {probabilistic:.6}\n"));
    out.push_str(&format!("base_a                   {}/{} = {:.6}\n", a.numer(), a.denom(), base_a_f64(k)?));
    out.push_str(&format!("sauer_order_bound        {sauer} (min degree {delta}, girth 5)\n"));
    for n in [k, k + 1, 2 * k, 10 * k] {
        let label = format!("kappa_{k}(K_{n})");
        out.push_str(&format!("{label:<25}{}\n", kappa_complete_formula(n, k)?));
    }
    match bipartite_n2(k, l) {
        Ok(r) => out.push_str(&format!("bipartite_n2             {} ({})\n", r.n, r.label)),
        Err(_) => out.push_str("bipartite_n2             undefined for l > k\n"),
    }
    out.push_str("bipartite_n3             no closed form (existence only)\n");
    write_out(None, &out)?;
    Ok(0)
}

fn experiment(kind: ExperimentKind) -> CmdResult {
    match kind {
        ExperimentKind::Mc(args) => mc(args),
        ExperimentKind::PathRate { k, len, trials, seed } => {
            let len = match len {
                Some(len) => len,
                None if k >= 2 => 2 * k - 2,
                None => return Err(CliError::usage("k must be at least 2")),
            };
            let r = path_properness_rate(k, len, trials, need_seed(seed, "path-rate")?)?;
            write_out(None, &to_json(&r))?;
            Ok(0)
        }
        ExperimentKind::Sweep { k, l, c, n, trials, seed, subsets, contrast, node_limit, json } => {
            let mut cfg = SweepConfig::new(k, l, c, n, trials, need_seed(seed, "sweep")?);
            cfg.subsets = subsets;
            cfg.contrast = contrast;
            cfg.budget = budget(node_limit, None);
            sweep(cfg, json)
        }
        ExperimentKind::CommonNeighbors { n, p, k, samples, seed } => {
            let r = common_neighbor_stats(n, p, k, samples, need_seed(seed, "common-neighbors")?)?;
            write_out(None, &to_json(&r))?;
            Ok(0)
        }
        ExperimentKind::Threshold { k, c, n } => {
            let mut out = String::from("n,raw,p,saturated\n");
            for n in n {
                let t = threshold_probability(n, k, c)?;
                out.push_str(&format!("{n},{:.6},{:.6},{}\n", t.raw, t.p, t.saturated));
            }
            write_out(None, &out)?;
            Ok(0)
        }
        ExperimentKind::N2 { k, l } => {
            write_out(None, &to_json(&bipartite_n2(k, l)?))?;
            Ok(0)
        }
    }
}

fn mc(args: McArgs) -> CmdResult {
    let family = match args.family {
        Family::Complete => GraphFamily::Complete { n: args.n },
        Family::Bipartite => GraphFamily::Bipartite {
            m: args.m.ok_or_else(|| CliError::usage("--m is required for the bipartite family"))?,
            n: args.n,
        },
        Family::Gnp => GraphFamily::Gnp {
            n: args.n,
            p: args.p.ok_or_else(|| CliError::usage("--p is required for the gnp family"))?,
        },
    };
    let scheme = match args.scheme {
        McScheme::K3l2 => ColoringScheme::K3l2,
        McScheme::Kn1l2 => ColoringScheme::Kn1l2,
        McScheme::Spanning => ColoringScheme::Spanning,
        McScheme::Random => ColoringScheme::Random { colors: args.colors },
    };
    let sampled = matches!(args.subsets, Mode::Sample(_));
    let randomized = sampled || args.scheme == McScheme::Random || args.family == Family::Gnp;
    let seed = match (args.seed, randomized) {
        (Some(s), _) => Seed(s),
        (None, true) => return Err(CliError::usage("--seed is required when graphs, colourings or subsets are sampled")),
        // nothing is drawn, so the seed is never used
        (None, false) => Seed(0),
    };
    let mut cfg = ExperimentConfig::new(family, args.k, args.l as usize, scheme, args.trials, seed);
    if let Mode::Sample(count) = args.subsets {
        cfg.subsets = SubsetSampling::Sampled { count };
    }
    cfg.max_exhaustive_vertices = args.max_exhaustive;
    cfg.budget = budget(args.node_limit, None);
    cfg.keep_verdicts = args.verdicts;
    eprintln!("running {} trials", cfg.trials);
    let r = monte_carlo_success(&cfg)?;
    eprintln!(
        "success {:.6} [{:.6}, {:.6}], indeterminate {:.6}, {} ms",
        r.success_fraction, r.ci_low, r.ci_high, r.indeterminate_fraction, r.elapsed_ms
    );
    write_out(None, &to_json(&r))?;
    Ok(if r.indeterminate > 0 { EXIT_PARTIAL } else { 0 })
}

fn sweep(cfg: SweepConfig, json_out: Option<PathBuf>) -> CmdResult {
    eprintln!("config {}", serde_json::to_string(&round6(serde_json::to_value(&cfg).expect("serialisable"))).unwrap());
    for &n in &cfg.n_values {
        let t = threshold_probability(n, cfg.k, cfg.c)?;
        eprintln!("n={n} raw={:.6} p={:.6} saturated={}", t.raw, t.p, t.saturated);
    }
    let points = gnp_threshold_sweep(&cfg)?;
    write_out(None, &sweep_csv(&points))?;
    if let Some(path) = json_out {
        write_out(Some(&path), &to_json(&json!({ "config": cfg, "points": points })))?;
    }
    let partial = points.iter().any(|p| p.result.indeterminate > 0);
    Ok(if partial { EXIT_PARTIAL } else { 0 })
}
