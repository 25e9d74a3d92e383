use serde::Serialize;
use serde_json::{json, Value};
use specyc::constructions::{family_catalog, Family};
use specyc::detectors::{
    has_k_edge_disjoint_cycles_with_budget, has_repeated_cycle_length,
    has_triangle_packing_with_budget, max_fan, triangle_packing_with_budget, Witness,
    DEFAULT_NODE_BUDGET,
};
use specyc::search::{
    count, for_each_graph, spex, turan_number, verify_with_population, Predicate, SearchMode,
    SpexParams, Status, TheoremSpec, CONNECTED_COUNTS, GRAPH_COUNTS,
};
use specyc::spectral::spectral_radius;
use specyc::{build, canonical_form, from_graph6, to_graph6, FamilySpec, Graph};

use crate::args::{
    Cli, Command, ConstructArgs, DetectArgs, EnumerateArgs, Mode, SpexArgs, TuranArgs, VerifyArgs,
    What,
};
use crate::output::{
    core_exit_code, diagnostic, emit, info, now, read_input, report_diagnostics, write_csv,
    Envelope, Failure,
};

type Outcome = Result<u8, Failure>;

/// Rejects flag combinations a command cannot honour, before any work.
pub fn validate(cli: &Cli) -> Result<(), Failure> {
    let g = &cli.global;
    if !(g.tol > 0.0 && g.tol < 1.0) {
        return Err(Failure::Usage(format!(
            "tolerance must lie in (0, 1), got {}",
            g.tol
        )));
    }
    if g.workers == Some(0) {
        return Err(Failure::Usage("workers must be positive".into()));
    }
    let csv_ok = matches!(
        cli.command,
        Command::Rho | Command::Spex(_) | Command::Turan(_) | Command::Verify(_)
    );
    if g.csv.is_some() && !csv_ok {
        return Err(Failure::Usage(
            "--csv is supported by rho, spex, turan and verify".into(),
        ));
    }
    let reads_input = matches!(
        cli.command,
        Command::Rho | Command::Detect(_) | Command::Verify(_)
    );
    if g.input.is_some() && !reads_input {
        return Err(Failure::Usage(
            "--in is supported by rho, detect and verify".into(),
        ));
    }
    match &cli.command {
        Command::Detect(a) if a.k == Some(0) => Err(Failure::Usage("--k must be positive".into())),
        Command::Detect(a) if a.budget == Some(0) => {
            Err(Failure::Usage("--budget must be positive".into()))
        }
        Command::Construct(a) if a.json && a.catalog => {
            Err(Failure::Usage("--catalog already prints JSON".into()))
        }
        _ => Ok(()),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let env = Envelope {
        command: command_name(&cli.command),
        config: serde_json::to_value(cli).expect("config serializes"),
        started_at: now(),
    };
    match &cli.command {
        Command::Construct(a) => construct(cli, a, env),
        Command::Rho => rho(cli, env),
        Command::Detect(a) => detect(cli, a),
        Command::Enumerate(a) => enumerate(cli, a, env),
        Command::Spex(a) => run_spex(cli, a, env),
        Command::Turan(a) => turan(cli, a, env),
        Command::Verify(a) => run_verify(cli, a, env),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Construct(_) => "construct",
        Command::Rho => "rho",
        Command::Detect(_) => "detect",
        Command::Enumerate(_) => "enumerate",
        Command::Spex(_) => "spex",
        Command::Turan(_) => "turan",
        Command::Verify(_) => "verify",
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Constructed {
    family: Family,
    graph6: String,
    canonical_graph6: String,
    order: usize,
    size: usize,
    partition: Vec<Vec<usize>>,
}

fn construct(cli: &Cli, a: &ConstructArgs, env: Envelope) -> Outcome {
    let out = cli.global.out.as_deref();
    if a.catalog {
        env.write(out, &family_catalog())?;
        return Ok(0);
    }
    let family: Family = a.family.as_deref().expect("required by clap").parse()?;
    let mut spec = FamilySpec::new(family);
    spec.n = a.n;
    spec.k = a.k;
    spec.a = a.a;
    spec.b = a.b;
    spec.embed = a.embed.as_deref().map(from_graph6).transpose()?;
    let built = build(&spec)?;
    if a.json {
        env.write(
            out,
            &Constructed {
                family,
                graph6: to_graph6(&built.graph),
                canonical_graph6: canonical_form(&built.graph),
                order: built.graph.order(),
                size: built.graph.size(),
                partition: built
                    .partition
                    .cells()
                    .iter()
                    .map(|c| c.as_slice().to_vec())
                    .collect(),
            },
        )?;
    } else {
        emit(out, &format!("{}\n", to_graph6(&built.graph)))?;
    }
    Ok(0)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RhoRecord {
    line: usize,
    graph6: String,
    order: usize,
    size: usize,
    rho: f64,
    perron: Vec<f64>,
    iterations: u64,
    residual: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RhoRow<'a> {
    line: usize,
    graph6: &'a str,
    order: usize,
    size: usize,
    rho: f64,
}

fn rho(cli: &Cli, env: Envelope) -> Outcome {
    let input = read_input(cli.global.input.as_deref())?;
    let bad_input = report_diagnostics(&input);
    let mut records = Vec::new();
    for (line, g) in &input.graphs {
        let s = spectral_radius(g, cli.global.tol)?;
        records.push(RhoRecord {
            line: *line,
            graph6: to_graph6(g),
            order: g.order(),
            size: g.size(),
            rho: s.rho,
            perron: s.perron,
            iterations: s.iterations,
            residual: s.residual,
        });
    }
    info(
        cli.global.verbose,
        &format!("computed {} spectral radii", records.len()),
    );
    if let Some(path) = &cli.global.csv {
        write_csv(
            path,
            records.iter().map(|r| RhoRow {
                line: r.line,
                graph6: &r.graph6,
                order: r.order,
                size: r.size,
                rho: specyc::report::round_sig(r.rho),
            }),
        )?;
    }
    env.write(
        cli.global.out.as_deref(),
        &json!({"tolerance": cli.global.tol, "graphs": records}),
    )?;
    Ok(if bad_input { 2 } else { 0 })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct DetectLine {
    line: usize,
    graph6: String,
    result: Value,
    witness: Option<Witness>,
    nodes_explored: u64,
}

fn detect_one(g: &Graph, a: &DetectArgs) -> specyc::Result<(Value, Option<Witness>, u64)> {
    let budget = a.budget.unwrap_or(DEFAULT_NODE_BUDGET);
    Ok(match (a.what, a.k) {
        (What::RepeatedLength, _) => {
            let d = has_repeated_cycle_length(g)?;
            (json!(d.found()), d.witness, d.nodes_explored)
        }
        (What::EdgeDisjointCycles, k) => {
            let d = has_k_edge_disjoint_cycles_with_budget(g, k.unwrap_or(2), budget)?;
            (json!(d.found()), d.witness, d.nodes_explored)
        }
        (What::TrianglePacking, Some(k)) => {
            let d = has_triangle_packing_with_budget(g, k, budget)?;
            (json!(d.found()), d.witness, d.nodes_explored)
        }
        (What::TrianglePacking, None) => {
            let p = triangle_packing_with_budget(g, budget)?;
            let witness = (p.nu > 0).then_some(p.witness);
            (json!(p.nu), witness, p.nodes_explored)
        }
        (What::Fan, k) => {
            let f = max_fan(g);
            let result = match k {
                Some(k) => json!(f.k >= k),
                None => json!(f.k),
            };
            (result, f.witness, g.order() as u64)
        }
    })
}

fn detect(cli: &Cli, a: &DetectArgs) -> Outcome {
    let input = read_input(cli.global.input.as_deref())?;
    let mut status = if report_diagnostics(&input) { 2 } else { 0 };
    let mut text = String::new();
    for (line, g) in &input.graphs {
        match detect_one(g, a) {
            Ok((result, witness, nodes_explored)) => {
                let rec = DetectLine {
                    line: *line,
                    graph6: to_graph6(g),
                    result,
                    witness,
                    nodes_explored,
                };
                text.push_str(&serde_json::to_string(&rec).expect("record serializes"));
                text.push('\n');
            }
            Err(e) => {
                diagnostic(e.code(), &e.to_string(), Some(*line));
                status = status.max(core_exit_code(&e));
            }
        }
    }
    emit(cli.global.out.as_deref(), &text)?;
    Ok(status)
}

fn enumerate(cli: &Cli, a: &EnumerateArgs, env: Envelope) -> Outcome {
    let out = cli.global.out.as_deref();
    if a.count {
        let c = count(a.n, a.connected)?;
        let known = if a.n <= 10 {
            Some(if a.connected {
                CONNECTED_COUNTS[a.n]
            } else {
                GRAPH_COUNTS[a.n]
            })
        } else {
            None
        };
        env.write(
            out,
            &json!({"n": a.n, "connectedOnly": a.connected, "count": c, "knownCount": known}),
        )?;
        return Ok(0);
    }
    let mut text = String::new();
    let mut lines = 0u64;
    for_each_graph(a.n, a.connected, |g| {
        text.push_str(&to_graph6(&g));
        text.push('\n');
        lines += 1;
    })?;
    info(
        cli.global.verbose,
        &format!("{lines} graphs of order {}", a.n),
    );
    emit(out, &text)?;
    Ok(0)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SpexRow<'a> {
    n: usize,
    predicate: String,
    mode: &'a str,
    best: &'a str,
    edges: usize,
    objective: f64,
    visited: u64,
    budget_exhausted: bool,
}

fn run_spex(cli: &Cli, a: &SpexArgs, env: Envelope) -> Outcome {
    let predicate = Predicate::parse(&a.predicate, a.k)?;
    let params = SpexParams {
        n: a.n,
        predicate,
        mode: match a.mode {
            Mode::Exhaustive => SearchMode::Exhaustive,
            Mode::Hillclimb => SearchMode::Hillclimb,
        },
        seed: a.seed,
        budget: a.budget,
        restarts: a.restarts,
    };
    let r = spex(&params)?;
    info(
        cli.global.verbose,
        &format!(
            "best objective {:.12} after {} evaluations",
            r.objective, r.visited
        ),
    );
    if let Some(path) = &cli.global.csv {
        write_csv(
            path,
            [SpexRow {
                n: r.n,
                predicate: r.predicate.to_string(),
                mode: match r.mode {
                    SearchMode::Exhaustive => "EXHAUSTIVE",
                    SearchMode::Hillclimb => "HILLCLIMB",
                },
                best: &r.best,
                edges: r.edges,
                objective: specyc::report::round_sig(r.objective),
                visited: r.visited,
                budget_exhausted: r.budget_exhausted,
            }],
        )?;
    }
    env.write(cli.global.out.as_deref(), &r)?;
    Ok(0)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TuranRow<'a> {
    n: usize,
    predicate: String,
    max_edges: usize,
    extremal_graph6: &'a str,
}

fn turan(cli: &Cli, a: &TuranArgs, env: Envelope) -> Outcome {
    let predicate = Predicate::parse(&a.predicate, a.k)?;
    let r = turan_number(a.n, predicate)?;
    if let Some(path) = &cli.global.csv {
        write_csv(
            path,
            r.extremal.iter().map(|g6| TuranRow {
                n: r.n,
                predicate: r.predicate.to_string(),
                max_edges: r.max_edges,
                extremal_graph6: g6,
            }),
        )?;
    }
    env.write(cli.global.out.as_deref(), &r)?;
    Ok(0)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifyRow<'a> {
    n: usize,
    check: &'a str,
    status: Status,
    margin: Option<f64>,
    extremal_graph6: Option<&'a str>,
}

fn run_verify(cli: &Cli, a: &VerifyArgs, env: Envelope) -> Outcome {
    let spec = TheoremSpec {
        id: a.theorem.parse()?,
        n_min: a.n_min,
        n_max: a.n_max,
        k: a.k,
        seed: a.seed,
        budget: a.budget,
        restarts: a.restarts,
        n_step: a.n_step,
        random_n_max: a.random_n_max,
    };
    let mut exit = 0;
    let population = match cli.global.input.as_deref() {
        Some(path) => {
            let input = read_input(Some(path))?;
            if report_diagnostics(&input) {
                exit = 2;
            }
            Some(input.graphs.into_iter().map(|(_, g)| g).collect::<Vec<_>>())
        }
        None => None,
    };
    let report = verify_with_population(&spec, population.as_deref())?;
    info(
        cli.global.verbose,
        &format!(
            "{} finished in {:.3}s",
            spec.id,
            report.wall_time.as_secs_f64()
        ),
    );
    if let Some(path) = &cli.global.csv {
        write_csv(
            path,
            report.per_n.iter().map(|e| VerifyRow {
                n: e.n,
                check: &e.check,
                status: e.status,
                margin: e.margin.map(specyc::report::round_sig),
                extremal_graph6: e.extremal_graph6.as_deref(),
            }),
        )?;
    }
    env.write(cli.global.out.as_deref(), &report)?;
    let status = match report.status {
        Status::Fail => 1,
        Status::Skipped => 3,
        _ => 0,
    };
    Ok(if exit == 2 { 2 } else { status })
}
