//! Command-line front end: parse an instance and its values, run the
//! requested computation, and print canonical text or JSON.
//!
//! Exit codes: 0 on success (and on verified equality), 1 when a
//! verification finds an inequality (an instance bug, never a theorem
//! failure), 2 on usage or parse errors.

mod opts;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value as Json};

use cis::instance::split_top_level;
use cis::instances::Universe;
use cis::poly::poly_from_roots;
use cis::rep::{
    enumerate_res_reps, enumerate_syl_reps, flush_pair, res_from_syl, sort_pair, syl_from_res,
    BoolMatrix, SylPair, Trace,
};
use cis::resultant::{
    permanent, resultant_product, sylvester_matrix, theorem_sweep, verify_main_theorem,
    RootVectors, SquareMatrix,
};
use cis::term::TermExponent;
use cis::{Instance, Value};

use opts::{Cli, Command, Format, InstanceOpts, OutputOpts, RepCommand, RootOpts};

const EXIT_UNEQUAL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Instance plus the parameters it was built from, kept for JSON echoes.
struct Context {
    instance: Instance,
    params: Json,
}

fn parse_universe(spec: &str) -> Result<Universe, String> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad universe bound `{lo}`"))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad universe bound `{hi}`"))?;
        return Universe::int_range(lo, hi).map_err(|e| e.to_string());
    }
    let labels: Vec<String> = spec
        .split(',')
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .collect();
    Universe::new(labels).map_err(|e| e.to_string())
}

fn simple_instance(tag: &str) -> Result<Instance, String> {
    match tag {
        "tropical" => Ok(Instance::tropical()),
        "boolean" | "bool" => Ok(Instance::boolean()),
        "cofinite" | "topology" => Ok(Instance::cofinite()),
        "polygon" | "compact-convex" => Ok(Instance::polygon()),
        "ideal" | "ideals" => Ok(Instance::Ideal),
        other => Err(format!("unknown or parameterized inner instance `{other}`")),
    }
}

fn build_instance(opts: &InstanceOpts) -> Result<Context, String> {
    let mut universe = opts.universe.clone();
    let mut inner = opts.inner.clone();
    let mut len = opts.len;
    let mut dims = opts.dims.clone();
    let mut dim_m: Option<usize> = None;
    let mut dim_n: Option<usize> = None;

    if let Some(params) = &opts.params {
        for piece in split_top_level(params, ',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| format!("expected key=value in --params, got `{piece}`"))?;
            match key.trim() {
                "universe" => universe = Some(value.trim().to_string()),
                "inner" => inner = Some(value.trim().to_string()),
                "len" | "L" => len = Some(value.trim().parse().map_err(|_| "bad len".to_string())?),
                "dims" => dims = Some(value.trim().to_string()),
                "m" => dim_m = Some(value.trim().parse().map_err(|_| "bad m".to_string())?),
                "n" => dim_n = Some(value.trim().parse().map_err(|_| "bad n".to_string())?),
                other => return Err(format!("unknown parameter `{other}`")),
            }
        }
    }

    let tag = opts.instance.as_str();
    let (instance, params) = match tag {
        "powerset" | "power-set" => {
            let spec = universe
                .as_deref()
                .ok_or("powerset needs --universe (e.g. --universe 1..5)")?;
            (
                Instance::power_set(parse_universe(spec)?),
                json!({ "universe": spec }),
            )
        }
        "sequences" | "seq" => {
            let inner_tag = inner.as_deref().unwrap_or("boolean");
            let len = len.unwrap_or(16);
            (
                Instance::sequences(simple_instance(inner_tag)?, len).map_err(|e| e.to_string())?,
                json!({ "inner": inner_tag, "len": len }),
            )
        }
        "termset" | "term-set" => {
            let (m, n) = if let Some(dims) = &dims {
                let (m, n) = dims.split_once(',').ok_or("--dims wants the form m,n")?;
                (
                    m.trim().parse().map_err(|_| "bad dimension".to_string())?,
                    n.trim().parse().map_err(|_| "bad dimension".to_string())?,
                )
            } else if let (Some(m), Some(n)) = (dim_m, dim_n) {
                (m, n)
            } else {
                return Err("termset needs --dims m,n".into());
            };
            (
                Instance::term_set(m, n).map_err(|e| e.to_string())?,
                json!({ "m": m, "n": n }),
            )
        }
        simple => (simple_instance(simple)?, json!({})),
    };
    Ok(Context { instance, params })
}

fn parse_values(instance: &Instance, list: &str) -> Result<Vec<Value>, String> {
    split_top_level(list, ',')
        .iter()
        .map(|piece| piece.trim())
        .filter(|piece| !piece.is_empty())
        .map(|piece| instance.parse_value(piece).map_err(|e| e.to_string()))
        .collect()
}

fn parse_roots(ctx: &Context, roots: &RootOpts) -> Result<RootVectors, String> {
    let alphas = parse_values(&ctx.instance, &roots.alphas)?;
    let betas = parse_values(&ctx.instance, &roots.betas)?;
    RootVectors::new(alphas, betas).map_err(|e| e.to_string())
}

fn job_json(ctx: &Context, roots: Option<&RootVectors>, result: Json, trace: Vec<String>) -> Json {
    let fmt_all = |values: &[Value]| -> Json {
        values
            .iter()
            .map(|v| Json::String(ctx.instance.format_value(v)))
            .collect()
    };
    json!({
        "instance": ctx.instance.tag(),
        "params": ctx.params,
        "alphas": roots.map(|r| fmt_all(&r.alphas)).unwrap_or(json!([])),
        "betas": roots.map(|r| fmt_all(&r.betas)).unwrap_or(json!([])),
        "result": result,
        "trace": trace,
    })
}

fn emit(output: &OutputOpts, text: String, json: Json) {
    match output.format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{json}"),
    }
}

fn format_matrix(ctx: &Context, matrix: &SquareMatrix) -> Vec<String> {
    matrix
        .rows()
        .map(|row| {
            row.iter()
                .map(|v| ctx.instance.format_value(v))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn bool_matrix_json(matrix: &BoolMatrix) -> Json {
    (0..matrix.rows())
        .map(|i| {
            (0..matrix.cols())
                .map(|j| Json::from(u8::from(matrix.get(i, j))))
                .collect::<Json>()
        })
        .collect()
}

fn read_bool_matrix(path: &str) -> Result<BoolMatrix, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    BoolMatrix::parse_text(&text).map_err(|e| format!("{path}: {e}"))
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Resultant {
            instance,
            roots,
            output,
        } => {
            let ctx = build_instance(&instance)?;
            let roots = parse_roots(&ctx, &roots)?;
            let value = resultant_product(&ctx.instance, &roots).map_err(|e| e.to_string())?;
            let formatted = ctx.instance.format_value(&value);
            emit(
                &output,
                formatted.clone(),
                job_json(&ctx, Some(&roots), Json::String(formatted), vec![]),
            );
            Ok(0)
        }
        Command::Sylvester {
            instance,
            roots,
            output,
        } => {
            let ctx = build_instance(&instance)?;
            let roots = parse_roots(&ctx, &roots)?;
            let f = poly_from_roots(&ctx.instance, &roots.alphas).map_err(|e| e.to_string())?;
            let g = poly_from_roots(&ctx.instance, &roots.betas).map_err(|e| e.to_string())?;
            let matrix = sylvester_matrix(&ctx.instance, &f, &g).map_err(|e| e.to_string())?;
            let value = permanent(&ctx.instance, &matrix).map_err(|e| e.to_string())?;
            let formatted = ctx.instance.format_value(&value);
            let trace = if output.trace {
                format_matrix(&ctx, &matrix)
            } else {
                vec![]
            };
            let mut text = String::new();
            if output.trace {
                text.push_str("M:\n");
                for row in &trace {
                    text.push_str(row);
                    text.push('\n');
                }
            }
            text.push_str(&formatted);
            emit(
                &output,
                text,
                job_json(&ctx, Some(&roots), Json::String(formatted), trace),
            );
            Ok(0)
        }
        Command::Verify {
            instance,
            roots,
            output,
        } => {
            let ctx = build_instance(&instance)?;
            let roots = parse_roots(&ctx, &roots)?;
            let verdict = verify_main_theorem(&ctx.instance, &roots).map_err(|e| e.to_string())?;
            let r = ctx.instance.format_value(&verdict.resultant);
            let s = ctx.instance.format_value(&verdict.sylvester);
            let equal = verdict.equal();
            let word = if equal { "EQUAL" } else { "UNEQUAL" };
            emit(
                &output,
                format!("R = {r}, S = {s}, {word}"),
                job_json(
                    &ctx,
                    Some(&roots),
                    json!({ "resultant": r, "sylvester": s, "equal": equal }),
                    vec![],
                ),
            );
            Ok(if equal { 0 } else { EXIT_UNEQUAL })
        }
        Command::Permanent {
            instance,
            file,
            output,
        } => {
            let ctx = build_instance(&instance)?;
            let text = fs::read_to_string(&file).map_err(|e| format!("{file}: {e}"))?;
            let mut rows: Vec<Vec<Value>> = Vec::new();
            for line in text.lines() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let row: Result<Vec<Value>, String> = line
                    .split_whitespace()
                    .map(|tok| ctx.instance.parse_value(tok).map_err(|e| e.to_string()))
                    .collect();
                rows.push(row?);
            }
            let matrix = SquareMatrix::from_rows(rows).map_err(|e| e.to_string())?;
            let value = permanent(&ctx.instance, &matrix).map_err(|e| e.to_string())?;
            let formatted = ctx.instance.format_value(&value);
            emit(
                &output,
                formatted.clone(),
                job_json(&ctx, None, Json::String(formatted), vec![]),
            );
            Ok(0)
        }
        Command::Rep(rep) => run_rep(rep),
        Command::Axioms {
            instance,
            samples,
            budget,
            output,
        } => {
            let ctx = build_instance(&instance)?;
            let samples = match samples {
                Some(list) => parse_values(&ctx.instance, &list)?,
                None => ctx.instance.sample_pool(),
            };
            let report = ctx
                .instance
                .check_axioms(&samples, budget)
                .map_err(|e| e.to_string())?;
            let passed = report.all_passed();
            let mut text = report.to_string();
            text.push_str(if passed {
                "all axioms hold"
            } else {
                "AXIOM FAILURES FOUND"
            });
            let outcomes: Json = report
                .outcomes
                .iter()
                .map(|o| {
                    json!({
                        "axiom": o.axiom.name(),
                        "law": o.axiom.law(),
                        "passed": o.passed,
                        "witness": o.witness,
                        "triples": o.triples_checked,
                    })
                })
                .collect();
            emit(
                &output,
                text,
                job_json(
                    &ctx,
                    None,
                    json!({ "all_passed": passed, "axioms": outcomes }),
                    vec![],
                ),
            );
            Ok(if passed { 0 } else { EXIT_UNEQUAL })
        }
        Command::Sweep {
            instance,
            max_m,
            max_n,
            draws,
            seed,
            output,
        } => {
            let instances: Vec<Instance> = match &instance {
                Some(tag) => vec![
                    build_instance(&InstanceOpts {
                        instance: tag.clone(),
                        universe: Some("1..5".into()),
                        inner: None,
                        len: None,
                        dims: Some("3,2".into()),
                        params: None,
                    })?
                    .instance,
                ],
                None => default_sweep_instances(),
            };
            let mut lines = Vec::new();
            let mut results = Vec::new();
            let mut all_equal = true;
            for inst in &instances {
                let cells =
                    theorem_sweep(inst, max_m, max_n, draws, seed).map_err(|e| e.to_string())?;
                let equal = cells.iter().filter(|c| c.verdict.equal()).count();
                all_equal &= equal == cells.len();
                lines.push(format!(
                    "{}: {}/{} equal",
                    inst.describe(),
                    equal,
                    cells.len()
                ));
                results.push(json!({
                    "instance": inst.describe(),
                    "cells": cells.len(),
                    "equal": equal,
                }));
            }
            let text = lines.join("\n");
            let json = json!({
                "instance": instance,
                "params": { "max_m": max_m, "max_n": max_n, "draws": draws, "seed": seed },
                "alphas": [],
                "betas": [],
                "result": results,
                "trace": [],
            });
            emit(&output, text, json);
            Ok(if all_equal { 0 } else { EXIT_UNEQUAL })
        }
    }
}

fn default_sweep_instances() -> Vec<Instance> {
    vec![
        Instance::tropical(),
        Instance::boolean(),
        Instance::power_set(Universe::int_range(1, 5).unwrap()),
        Instance::cofinite(),
        Instance::polygon(),
        Instance::sequences(Instance::boolean(), 16).unwrap(),
        Instance::Ideal,
        Instance::term_set(3, 2).unwrap(),
    ]
}

fn trace_text(trace: &Trace, snapshots: bool) -> String {
    let mut out = String::new();
    for step in &trace.steps {
        out.push_str(&step.to_string());
        out.push('\n');
        if snapshots {
            out.push_str(&format!("S1:\n{}\nS2:\n{}\n", step.s1_after, step.s2_after));
        }
    }
    out
}

fn pair_text(pair: &SylPair) -> String {
    format!("S1:\n{}\nS2:\n{}", pair.s1, pair.s2)
}

fn rep_json(result: Json, trace: &Trace) -> Json {
    json!({
        "instance": Json::Null,
        "params": {},
        "alphas": [],
        "betas": [],
        "result": result,
        "trace": trace.lines(),
    })
}

fn run_rep(rep: RepCommand) -> Result<u8, String> {
    match rep {
        RepCommand::SylFromRes { file, output } => {
            let matrix = read_bool_matrix(&file)?;
            let pair = syl_from_res(&matrix).map_err(|e| e.to_string())?;
            let mut text = String::new();
            if output.trace {
                let sums = matrix
                    .col_sums()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                text.push_str(&format!("c = [{sums}]\n"));
            }
            text.push_str(&pair_text(&pair));
            emit(
                &output,
                text,
                rep_json(
                    json!({ "s1": bool_matrix_json(&pair.s1), "s2": bool_matrix_json(&pair.s2) }),
                    &Trace::default(),
                ),
            );
            Ok(0)
        }
        RepCommand::ResFromSyl {
            s1_file,
            s2_file,
            output,
        } => {
            let pair = SylPair::new(read_bool_matrix(&s1_file)?, read_bool_matrix(&s2_file)?)
                .map_err(|e| e.to_string())?;
            let (matrix, trace) = res_from_syl(&pair).map_err(|e| e.to_string())?;
            let mut text = String::new();
            if output.trace {
                text.push_str(&trace_text(&trace, output.snapshots));
            }
            text.push_str(&format!("R:\n{matrix}"));
            emit(
                &output,
                text,
                rep_json(json!({ "r": bool_matrix_json(&matrix) }), &trace),
            );
            Ok(0)
        }
        RepCommand::Sort {
            s1_file,
            s2_file,
            output,
        } => {
            let pair = SylPair::new(read_bool_matrix(&s1_file)?, read_bool_matrix(&s2_file)?)
                .map_err(|e| e.to_string())?;
            let (sorted, trace) = sort_pair(&pair).map_err(|e| e.to_string())?;
            let mut text = String::new();
            if output.trace {
                text.push_str(&trace_text(&trace, output.snapshots));
            }
            text.push_str(&pair_text(&sorted));
            emit(
                &output,
                text,
                rep_json(
                    json!({ "s1": bool_matrix_json(&sorted.s1), "s2": bool_matrix_json(&sorted.s2) }),
                    &trace,
                ),
            );
            Ok(0)
        }
        RepCommand::Flush {
            s1_file,
            s2_file,
            output,
        } => {
            let pair = SylPair::new(read_bool_matrix(&s1_file)?, read_bool_matrix(&s2_file)?)
                .map_err(|e| e.to_string())?;
            let (flushed, trace) = flush_pair(&pair).map_err(|e| e.to_string())?;
            let mut text = String::new();
            if output.trace {
                text.push_str(&trace_text(&trace, output.snapshots));
            }
            text.push_str(&pair_text(&flushed));
            emit(
                &output,
                text,
                rep_json(
                    json!({ "s1": bool_matrix_json(&flushed.s1), "s2": bool_matrix_json(&flushed.s2) }),
                    &trace,
                ),
            );
            Ok(0)
        }
        RepCommand::Enumerate {
            mu,
            nu,
            list,
            output,
        } => {
            let parse_exps = |src: &str| -> Result<Vec<u32>, String> {
                src.split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u32>()
                            .map_err(|_| format!("bad exponent `{p}`"))
                    })
                    .collect()
            };
            let term = TermExponent::new(parse_exps(&mu)?, parse_exps(&nu)?);
            let res = enumerate_res_reps(&term).map_err(|e| e.to_string())?;
            let syl = enumerate_syl_reps(&term).map_err(|e| e.to_string())?;
            let mut text = format!("res-reps: {}\nsyl-reps: {}", res.len(), syl.len());
            if list {
                for (k, m) in res.iter().enumerate() {
                    text.push_str(&format!("\nres-rep {}:\n{m}", k + 1));
                }
                for (k, pair) in syl.iter().enumerate() {
                    text.push_str(&format!(
                        "\nsyl-rep {} S1:\n{}\nsyl-rep {} S2:\n{}",
                        k + 1,
                        pair.s1,
                        k + 1,
                        pair.s2
                    ));
                }
            }
            let mut result = json!({ "res_reps": res.len(), "syl_reps": syl.len() });
            if list {
                result["res"] = res.iter().map(bool_matrix_json).collect();
                result["syl"] = syl
                    .iter()
                    .map(
                        |p| json!({ "s1": bool_matrix_json(&p.s1), "s2": bool_matrix_json(&p.s2) }),
                    )
                    .collect();
            }
            emit(&output, text, rep_json(result, &Trace::default()));
            Ok(0)
        }
    }
}
