use crate::args::{CheckArgs, CheckProperty, Cli, Command, Construct, GraphFormat, Random, ReportFormat, SolveArgs, SolveMode};
use anyhow::{bail, Context, Result};
use dhp_core::checkers::{
    check_critical, check_degree_bound, check_dhp, check_saturated_critical, check_snp, check_snp_minimal,
    check_supercyclic, find_minimal_obstacle, Property, Verdict,
};
use dhp_core::constructions::{
    bipartite_product, builtin_biplane, design_to_bigraph, develop_difference_set, import_design, iterated_product,
    pad_with_universal, pair_gadget, ProductLayout,
};
use dhp_core::cycles::{find_cycle_covering, find_disjoint_cycle_cover, solve_degree_split, solve_high_degree};
use dhp_core::graph::bipartite_complement;
use dhp_core::graph::io::{parse_bigraph, serialize_bigraph, serialize_bigraph_json, ParseMode};
use dhp_core::random::{
    chernoff_degree_check, check_hamiltonian, count_bad_pairs, run_sweep, sample_gnnp, scan_obstacles_size3,
    threshold_p, Measures, SweepConfig,
};
use dhp_core::{Bigraph, Error, Side, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::path::Path;

/// 3 for an exhausted budget, 2 for everything else that stops a run.
pub fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(err) if err.is_budget() => 3,
        _ => 2,
    }
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    config: &'a Cli,
    #[serde(flatten)]
    body: T,
}

fn report_json<T: Serialize>(cli: &Cli, body: T) -> String {
    let mut s = serde_json::to_string_pretty(&Report { config: cli, body }).expect("report serializes");
    s.push('\n');
    s
}

fn config_comment(cli: &Cli) -> String {
    format!("# config {}\n", serde_json::to_string(cli).expect("config serializes"))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn parse_mode(cli: &Cli) -> ParseMode {
    if cli.global.strict {
        ParseMode::Strict
    } else {
        ParseMode::Lenient
    }
}

fn read_graph_file(cli: &Cli, path: &Path) -> Result<Bigraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_bigraph(&text, parse_mode(cli))
        .map_err(Error::from)
        .with_context(|| format!("in {}", path.display()))
}

fn read_input(cli: &Cli) -> Result<Bigraph> {
    match &cli.global.input {
        Some(p) => read_graph_file(cli, p),
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
            parse_bigraph(&text, parse_mode(cli)).map_err(Error::from).context("in stdin")
        }
    }
}

/// A graph in the selected format. Edge lists carry the config and each
/// extra as `#` comment lines, JSON carries them as fields.
fn graph_text(cli: &Cli, g: &Bigraph, header: Option<String>, extras: Vec<(&str, Value)>) -> String {
    match cli.global.format {
        GraphFormat::EdgeList => {
            let mut s = config_comment(cli);
            for (k, v) in &extras {
                s.push_str(&format!("# {k} {v}\n"));
            }
            if let Some(h) = header {
                s.push_str(&h);
            }
            s.push_str(&serialize_bigraph(g));
            s
        }
        GraphFormat::Json => {
            let mut body: serde_json::Map<String, Value> = serde_json::from_str(&serialize_bigraph_json(g)).expect("graph json");
            for (k, v) in extras {
                body.insert(k.to_string(), v);
            }
            report_json(cli, body)
        }
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    let out = cli.global.output.as_deref();
    match &cli.command {
        Command::Check(a) => check(cli, a),
        Command::Solve(a) => solve(cli, a),
        Command::Construct(a) => {
            let (g, header, extras) = construct(cli, &a.what)?;
            emit(out, &graph_text(cli, &g, header, extras))?;
            Ok(0)
        }
        Command::Random(a) => random(cli, &a.what),
        Command::Fmt => {
            let g = read_input(cli)?;
            emit(out, &graph_text(cli, &g, None, vec![]))?;
            Ok(0)
        }
    }
}

fn check(cli: &Cli, a: &CheckArgs) -> Result<u8> {
    let g = read_input(cli)?;
    let budget = cli.global.budget();
    let out = cli.global.output.as_deref();
    let property = match a.property {
        CheckProperty::Design => {
            let (code, body) = match dhp_core::constructions::verify_design(&g) {
                Ok(spec) => (0, json!({ "property": "design", "holds": true, "design": spec })),
                Err(v) => (1, json!({ "property": "design", "holds": false, "violation": v, "message": v.to_string() })),
            };
            emit(out, &report_json(cli, body))?;
            return Ok(code);
        }
        CheckProperty::DegreeBound => {
            let r = check_degree_bound(&g, !a.no_verify, &budget)?;
            let body = json!({ "property": "degree-bound", "holds": true, "report": r });
            emit(out, &report_json(cli, body))?;
            return Ok(0);
        }
        CheckProperty::Obstacle => {
            let s_max = a.s_max.unwrap_or(g.nx());
            let (code, body) = match find_minimal_obstacle(&g, s_max, &budget) {
                Ok(None) => (0, json!({ "property": "obstacle", "holds": true, "obstacle": null })),
                Ok(Some(o)) => (1, json!({ "property": "obstacle", "holds": false, "obstacle": o })),
                Err(e) if e.is_budget() => (3, json!({ "property": "obstacle", "budget_exhausted": true })),
                Err(e) => return Err(e.into()),
            };
            emit(out, &report_json(cli, body))?;
            return Ok(code);
        }
        CheckProperty::Dhp => Property::Dhp,
        CheckProperty::Snp => Property::Snp,
        CheckProperty::Supercyclic => Property::Supercyclic,
        CheckProperty::Critical => Property::Critical,
        CheckProperty::SaturatedCritical => Property::SaturatedCritical,
        CheckProperty::SnpMinimal => Property::SnpMinimal,
    };
    let result = match property {
        Property::Dhp => check_dhp(&g, &budget),
        Property::Snp => check_snp(&g, &budget),
        Property::Supercyclic => check_supercyclic(&g, &budget),
        Property::Critical => check_critical(&g, &budget),
        Property::SaturatedCritical => check_saturated_critical(&g, &budget),
        Property::SnpMinimal => check_snp_minimal(&g, &budget),
    };
    let (code, verdict) = match result {
        Ok(v) => (if v.holds { 0 } else { 1 }, v),
        Err(e) if e.is_budget() => {
            eprintln!("dhp: {e}");
            (3, Verdict::undecided(property))
        }
        Err(e) => return Err(e.into()),
    };
    emit(out, &report_json(cli, verdict))?;
    Ok(code)
}

fn parse_index_list(s: &str, bound: usize, what: &str) -> Result<Vec<usize>> {
    let mut v = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| Error::InvalidInput(format!("{what}: {tok:?} is not an index")))?;
        if i >= bound {
            return Err(Error::InvalidInput(format!("{what}: index {i} out of range (< {bound})")).into());
        }
        v.push(i);
    }
    Ok(v)
}

fn solve(cli: &Cli, a: &SolveArgs) -> Result<u8> {
    let g = read_input(cli)?;
    let budget = cli.global.budget();
    let found = |ok: bool| if ok { "found" } else { "none" };
    let result: dhp_core::Result<(bool, Value)> = (|| match a.mode {
        SolveMode::CoverCycle => {
            let xs = if a.xs == "all" {
                VertexSet::all(&g, Side::X)
            } else {
                let list = parse_index_list(&a.xs, g.nx(), "--xs").map_err(|e| Error::InvalidInput(e.to_string()))?;
                VertexSet::xs(&g, list)
            };
            let c = find_cycle_covering(&g, &xs, a.exact, &budget)?;
            Ok((c.is_some(), json!({ "result": found(c.is_some()), "cycle": c })))
        }
        SolveMode::CycleCover => {
            let cs = find_disjoint_cycle_cover(&g, &budget)?;
            Ok((cs.is_some(), json!({ "result": found(cs.is_some()), "cycles": cs })))
        }
        SolveMode::DegreeSplit => {
            let r = solve_degree_split(&g, &budget)?;
            let ok = r.cycle.is_some();
            Ok((ok, json!({ "result": found(ok), "report": r })))
        }
        SolveMode::HighDegree => {
            let r = solve_high_degree(&g, a.k, &budget)?;
            let ok = r.cycle.is_some();
            Ok((ok, json!({ "result": found(ok), "report": r })))
        }
        SolveMode::Hamiltonian => {
            let c = check_hamiltonian(&g, a.limit, &budget)?;
            Ok((c.is_some(), json!({ "result": found(c.is_some()), "cycle": c })))
        }
    })();
    let (code, body) = match result {
        Ok((ok, body)) => (if ok { 0 } else { 1 }, body),
        Err(e) if e.is_budget() => (3, json!({ "result": "budget-exceeded", "error": e.to_string() })),
        Err(e) => return Err(e.into()),
    };
    emit(cli.global.output.as_deref(), &report_json(cli, body))?;
    Ok(code)
}

type Built = (Bigraph, Option<String>, Vec<(&'static str, Value)>);

fn construct(cli: &Cli, what: &Construct) -> Result<Built> {
    Ok(match what {
        Construct::PairGadget { n } => (pair_gadget(*n)?, None, vec![]),
        Construct::Biplane { order } => (builtin_biplane(*order)?, None, vec![]),
        Construct::DifferenceSet { v, set, lambda } => {
            let ds = parse_index_list(set, *v, "--set")?;
            let spec = develop_difference_set(*v, &ds, *lambda)?;
            (design_to_bigraph(&spec), None, vec![("design", json!({ "v": spec.v, "k": spec.k, "lambda": spec.lambda }))])
        }
        Construct::Design { file } => {
            let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            (design_to_bigraph(&import_design(&text)?), None, vec![])
        }
        Construct::Product { left, right } => {
            let g = read_graph_file(cli, left)?;
            let h = read_graph_file(cli, right)?;
            let layout = ProductLayout::of(&g, &h);
            let p = bipartite_product(&g, &h)?;
            match cli.global.format {
                GraphFormat::EdgeList => (p, Some(layout.header()), vec![]),
                GraphFormat::Json => (p, None, vec![("layout", json!(layout))]),
            }
        }
        Construct::Power { k } => {
            let (p, rep) = iterated_product(&read_input(cli)?, *k)?;
            (p, None, vec![("power", json!(rep))])
        }
        Construct::Pad { n } => (pad_with_universal(&read_input(cli)?, *n)?, None, vec![]),
        Construct::Complete { nx, ny } => (Bigraph::complete(*nx, *ny), None, vec![]),
        Construct::Complement => (bipartite_complement(&read_input(cli)?), None, vec![]),
    })
}

fn random(cli: &Cli, what: &Random) -> Result<u8> {
    let out = cli.global.output.as_deref();
    match what {
        Random::Sweep {
            n_list,
            c_list,
            trials,
            measure,
            kind,
            small_n_limit,
            independent_seeds,
            keep_trials,
            out: report_path,
            report,
        } => {
            let config = SweepConfig {
                n_list: n_list.clone(),
                c_list: c_list.clone(),
                trials: *trials,
                master_seed: cli.global.seed,
                measures: measure.parse::<Measures>()?,
                kind: (*kind).into(),
                small_n_limit: *small_n_limit,
                common_random_numbers: !independent_seeds,
                keep_trials: *keep_trials,
                budget: cli.global.budget(),
            };
            let format = report.unwrap_or_else(|| match report_path.as_ref().and_then(|p| p.extension()) {
                Some(ext) if ext == "json" => ReportFormat::Json,
                _ => ReportFormat::Csv,
            });
            if *keep_trials && format == ReportFormat::Csv {
                bail!(Error::Config("--keep-trials needs a JSON report".into()));
            }
            let rep = run_sweep(&config)?;
            let text = match format {
                ReportFormat::Json => report_json(cli, json!({ "cells": rep.cells })),
                ReportFormat::Csv => config_comment(cli) + &rep.to_csv(),
            };
            emit(report_path.as_deref().or(out), &text)?;
            Ok(0)
        }
        Random::Sample { n, p, c, kind } => {
            let params = match (p, c) {
                (Some(p), _) => json!({ "n": n, "p": p }),
                (None, Some(c)) => json!(threshold_p(*n, *c, (*kind).into())?),
                (None, None) => bail!(Error::Config("give --p or --c".into())),
            };
            let prob = params["p"].as_f64().expect("p is numeric");
            let g = sample_gnnp(*n, prob, cli.global.seed)?;
            emit(out, &graph_text(cli, &g, None, vec![("sample", params)]))?;
            Ok(0)
        }
        Random::Threshold { n, c, kind } => {
            let t = threshold_p(*n, *c, (*kind).into())?;
            if t.clamped {
                eprintln!("dhp: warning: threshold formula left [0, 1] and was clamped to {}", t.p);
            }
            emit(out, &report_json(cli, t))?;
            Ok(0)
        }
        Random::Stats { p } => {
            let g = read_input(cli)?;
            let (n0, n1) = count_bad_pairs(&g);
            let obstacle3 = if g.nx() >= 3 { scan_obstacles_size3(&g)? } else { None };
            let surrogate = n0 + n1 == 0 && obstacle3.is_none();
            let degree = p.map(|p| chernoff_degree_check(&g, p));
            let body = json!({
                "n0": n0,
                "n1": n1,
                "n_bad": n0 + n1,
                "pair_ok": n0 + n1 == 0,
                "obstacle3": obstacle3,
                "surrogate_dhp": surrogate,
                "max_degree": g.max_degree(),
                "degree_check": degree,
            });
            emit(out, &report_json(cli, body))?;
            Ok(0)
        }
    }
}
