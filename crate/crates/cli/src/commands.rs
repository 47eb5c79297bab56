use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use irregmix::bounds::{self, BoundReport, Parameter};
use irregmix::eml::{evaluate, sweep_verify, EmlContext, EvalOptions, SweepConfig, TheoremId};
use irregmix::graph::{cartesian_product, double_cover, join, parse_family, write_edge_list, write_graph6, Family};
use irregmix::oracles;
use irregmix::spectra::principal_ratio;
use irregmix::weights::parse_index_list;
use irregmix::{Error, Graph, Partition, Polynomial, Result, SpectralData, VertexSet};
use serde_json::{json, Value};

use crate::input::read_graph_file;
use crate::output::{normalize, num, nums, opt_num, record, Output, Table};
use crate::{BoundsArgs, EmlArgs, GenArgs, OracleArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

fn graph_info(g: &Graph) -> Value {
    json!({ "n": g.n(), "m": g.edge_count() })
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    normalize(serde_json::to_value(v).expect("report types serialize"))
}

fn parse_set(n: usize, text: &str) -> Result<VertexSet> {
    VertexSet::from_indices(n, parse_index_list(text)?)
}

fn parse_floats(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Input(format!("bad number {t:?}"))))
        .collect()
}

pub fn analyze(g: &Graph) -> Result<Output> {
    let spec = SpectralData::new(g)?;
    let pr = principal_ratio(g, &spec);
    let ev = spec.eigenvalues();
    let head = &ev[..ev.len().min(5)];
    let tail = &ev[ev.len().saturating_sub(5)..];
    let mu = &spec.laplacian;
    let mut table = Table::new(&["quantity", "value"]);
    let scalars: [(&'static str, Value); 13] = [
        ("n", json!(g.n())),
        ("m", json!(g.edge_count())),
        ("min_degree", json!(g.min_degree())),
        ("max_degree", json!(g.max_degree())),
        ("avg_degree", num(g.avg_degree())),
        ("lambda1", num(spec.lambda1())),
        ("lambda", num(spec.lambda)),
        ("sigma", num(spec.sigma)),
        ("mu_1", num(mu[1])),
        ("mu_max", num(mu[mu.len() - 1])),
        ("nu_min", num(spec.nu_min)),
        ("nu_max", num(spec.nu_max)),
        ("gamma", num(pr.gamma)),
    ];
    for (k, v) in scalars {
        table.push(vec![json!(k), v]);
    }
    table.push(vec![json!("gamma_lower"), num(pr.lower)]);
    table.push(vec![json!("gamma_upper"), opt_num(pr.upper)]);
    let json = record(json!({
        "command": "analyze",
        "graph": {
            "n": g.n(),
            "m": g.edge_count(),
            "regular": g.is_regular(),
            "bipartite": g.is_bipartite(),
            "diameter": g.diameter(),
        },
        "degrees": { "min": g.min_degree(), "max": g.max_degree(), "avg": num(g.avg_degree()) },
        "eigenvalues": { "first": nums(head), "last": nums(tail) },
        "lambda1": num(spec.lambda1()),
        "lambda": num(spec.lambda),
        "sigma": num(spec.sigma),
        "laplacian": { "mu_1": num(mu[1]), "mu_max": num(mu[mu.len() - 1]) },
        "nu_min": num(spec.nu_min),
        "nu_max": num(spec.nu_max),
        "gamma": num(pr.gamma),
        "gamma_bounds": {
            "lower": num(pr.lower),
            "upper": opt_num(pr.upper),
            "tau": opt_num(spec.tau()),
            "distance": pr.distance,
        },
    }));
    Ok(Output { json, table, violation: false })
}

fn parse_theorems(text: &str) -> Result<Vec<TheoremId>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    text.split(',').map(|t| TheoremId::from_str(t.trim())).collect()
}

pub fn eml(g: &Graph, args: &EmlArgs) -> Result<Output> {
    let poly = args.poly.as_deref().map(Polynomial::parse).transpose()?;
    if args.sweep {
        let config = SweepConfig {
            theorems: parse_theorems(&args.theorems)?,
            max_exhaustive: args.max_exhaustive,
            samples: args.samples,
            seed: args.seed,
            k: args.k,
            poly,
            tol_slack: args.tol_slack,
        };
        let summary = sweep_verify(g, &config)?;
        let mut table =
            Table::new(&["theorem", "evaluated", "inapplicable", "tight", "violations", "min_slack", "skipped"]);
        for t in &summary.theorems {
            table.push(vec![
                json!(t.theorem.name()),
                json!(t.evaluated),
                json!(t.inapplicable),
                json!(t.tight),
                json!(t.violations),
                opt_num(t.min_slack),
                json!(t.skipped),
            ]);
        }
        let mut body = to_json(&summary);
        if let Value::Object(o) = &mut body {
            o.insert("command".into(), json!("eml-sweep"));
            o.insert("graph".into(), graph_info(g));
        }
        return Ok(Output { json: record(body), table, violation: summary.violations > 0 });
    }

    let theorem = TheoremId::from_str(args.theorem.as_deref().unwrap_or_default())?;
    let n = g.n();
    let s = parse_set(n, args.s.as_deref().unwrap_or_default())?;
    let t = match &args.t {
        Some(t) => parse_set(n, t)?,
        None if theorem.single_set() => s.clone(),
        None => s.complement(),
    };
    let opts = EvalOptions {
        k: args.k,
        poly,
        partition: args.partition.as_deref().map(|p| Partition::parse(n, p)).transpose()?,
        super_x: args.x.as_deref().map(parse_floats).transpose()?,
        super_y: args.y.as_deref().map(parse_floats).transpose()?,
    };
    let ctx = EmlContext::new(g)?;
    let report = evaluate(&ctx, theorem, &s, &t, &opts)?;
    let violated = report.violated_at(args.tol_slack);
    let mut table = Table::new(&["theorem", "S", "T", "lhs", "rhs", "slack", "tight", "applicable", "reason"]);
    table.push(vec![
        json!(theorem.name()),
        json!(join_indices(&report.s)),
        json!(join_indices(&report.t)),
        num(report.lhs),
        num(report.rhs),
        num(report.slack),
        json!(report.tight),
        json!(report.applicable),
        json!(report.reason),
    ]);
    let mut body = to_json(&report);
    if let Value::Object(o) = &mut body {
        o.insert("command".into(), json!("eml"));
        o.insert("graph".into(), graph_info(g));
        o.insert("violated".into(), json!(violated));
    }
    Ok(Output { json: record(body), table, violation: violated })
}

fn join_indices(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn exact_value(g: &Graph, param: Parameter, k: usize, budget: Option<usize>) -> Result<usize> {
    match param {
        Parameter::ZeroForcing => oracles::zero_forcing_exact_with_limit(g, budget.unwrap_or(oracles::ZERO_FORCING_LIMIT)),
        Parameter::Integrity => oracles::vertex_integrity_exact_with_limit(g, budget.unwrap_or(oracles::INTEGRITY_LIMIT)),
        Parameter::Routing => oracles::routing_number_exact_with_limit(g, budget.unwrap_or(oracles::ROUTING_LIMIT)),
        Parameter::KIndependence => {
            oracles::k_independence_exact_with_limit(g, k, budget.unwrap_or(oracles::K_INDEPENDENCE_LIMIT))
        }
    }
}

pub fn bounds(g: &Graph, args: &BoundsArgs) -> Result<Output> {
    let param = Parameter::from_str(&args.param)?;
    let poly = args.poly.as_deref().map(Polynomial::parse).transpose()?;
    let mut reports: Vec<BoundReport> = match param {
        Parameter::ZeroForcing => bounds::zero_forcing_lb(g)?,
        Parameter::Integrity => bounds::integrity_lb(g)?,
        Parameter::Routing => bounds::routing_bounds(g)?,
        Parameter::KIndependence => bounds::k_independence_ub(g, args.k, poly.as_ref())?,
    };
    let oracle = if args.oracle { Some(exact_value(g, param, args.k, args.budget)?) } else { None };
    if let Some(v) = oracle {
        reports = reports.into_iter().map(|r| r.with_oracle(v as u64)).collect();
    }
    let violation = reports.iter().any(|r| !r.consistent());
    let mut table =
        Table::new(&["parameter", "variant", "value", "rounded", "applicable", "clamped", "oracle", "consistent", "reason"]);
    for r in &reports {
        table.push(vec![
            json!(param.name()),
            json!(r.variant.to_string()),
            num(r.value),
            json!(r.rounded),
            json!(r.applicable),
            json!(r.clamped),
            json!(r.oracle),
            json!(r.consistent()),
            json!(r.reason),
        ]);
    }
    let mut body = json!({
        "command": "bounds",
        "graph": graph_info(g),
        "parameter": param.name(),
        "oracle": oracle,
        "bounds": to_json(&reports),
    });
    if param == Parameter::KIndependence {
        body["k"] = json!(args.k);
    }
    if oracle.is_some() {
        for (b, r) in body["bounds"].as_array_mut().into_iter().flatten().zip(&reports) {
            b["consistent"] = json!(r.consistent());
        }
    }
    Ok(Output { json: record(body), table, violation })
}

pub fn oracle(g: &Graph, args: &OracleArgs) -> Result<Output> {
    let name = args.param.to_ascii_lowercase().replace('_', "-");
    let mut extra = json!({});
    let value = match name.as_str() {
        "grundy" | "grundy-domination" => {
            let seq = oracles::grundy_dominating_sequence_with_limit(g, args.budget.unwrap_or(oracles::GRUNDY_LIMIT))?;
            extra = json!({ "sequence": seq.sequence, "footprints": to_json(&seq.footprints) });
            seq.len()
        }
        "walks" => {
            let s = parse_set(g.n(), args.s.as_deref().ok_or_else(|| Error::Input("walks needs --s".into()))?)?;
            let t = parse_set(g.n(), args.t.as_deref().ok_or_else(|| Error::Input("walks needs --t".into()))?)?;
            let limit = args.budget.unwrap_or(oracles::WALK_N_LIMIT);
            extra = json!({ "k": args.k, "S": s.to_vec(), "T": t.to_vec() });
            oracles::walk_count_enumeration_with_limit(g, args.k, &s, &t, limit, oracles::WALK_K_LIMIT)? as usize
        }
        "routing" if args.perm.is_some() => {
            let perm = parse_index_list(args.perm.as_deref().unwrap())?;
            extra = json!({ "permutation": perm });
            oracles::rt_of_permutation_with_limit(g, &perm, args.budget.unwrap_or(oracles::ROUTING_LIMIT))?
        }
        _ => {
            let param = Parameter::from_str(&name)?;
            if param == Parameter::KIndependence {
                extra = json!({ "k": args.k });
            }
            exact_value(g, param, args.k, args.budget)?
        }
    };
    let mut table = Table::new(&["parameter", "value"]);
    table.push(vec![json!(name), json!(value)]);
    let mut body = json!({ "command": "oracle", "graph": graph_info(g), "parameter": name, "value": value });
    if let (Value::Object(b), Value::Object(e)) = (&mut body, extra) {
        b.extend(e);
    }
    Ok(Output { json: record(body), table, violation: false })
}

fn operand(text: &str) -> Result<Graph> {
    if Path::new(text).is_file() {
        read_graph_file(Path::new(text))
    } else {
        parse_family(text)?.build()
    }
}

fn need(v: Option<usize>, family: &str, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Input(format!("{family} needs --{flag}")))
}

fn need_graph(v: &Option<String>, family: &str, flag: &str) -> Result<Graph> {
    operand(v.as_deref().ok_or_else(|| Error::Input(format!("{family} needs --{flag}")))?)
}

fn generate(args: &GenArgs) -> Result<Graph> {
    let family = args.family.trim();
    if family.contains(':') {
        return parse_family(family)?.build();
    }
    let f = family.to_ascii_lowercase();
    let built = match f.as_str() {
        "complete" => Family::Complete(need(args.n, &f, "n")?),
        "complete_minus_edge" => Family::CompleteMinusEdge(need(args.n, &f, "n")?),
        "path" => Family::Path(need(args.n, &f, "n")?),
        "cycle" => Family::Cycle(need(args.n, &f, "n")?),
        "complete_bipartite" => Family::CompleteBipartite(need(args.a, &f, "a")?, need(args.b, &f, "b")?),
        "cocktail_party" => Family::CocktailParty(need(args.m.or(args.n), &f, "m")?),
        "kite" => Family::Kite { r: need(args.r, &f, "r")?, s: need(args.s, &f, "s")? },
        "join" => return Ok(join(&need_graph(&args.left, &f, "left")?, &need_graph(&args.right, &f, "right")?)),
        "cartesian_product" | "product" => {
            return Ok(cartesian_product(&need_graph(&args.left, &f, "left")?, &need_graph(&args.right, &f, "right")?))
        }
        "double_cover" => return Ok(double_cover(&need_graph(&args.of, &f, "of")?)),
        _ => parse_family(family)?,
    };
    built.build()
}

pub fn gen(args: &GenArgs) -> Result<()> {
    let g = generate(args)?;
    let format = args.graph_format.unwrap_or_else(|| match args.output.as_ref().and_then(|p| p.extension()) {
        Some(e) if e == "txt" || e == "edges" => GraphFormat::Edges,
        _ => GraphFormat::Graph6,
    });
    let text = match format {
        GraphFormat::Graph6 => format!("{}\n", write_graph6(&g)),
        GraphFormat::Edges => write_edge_list(&g),
    };
    match &args.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            use std::io::Write;
            match std::io::stdout().lock().write_all(text.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Input(format!("cannot write stdout: {e}"))),
                _ => Ok(()),
            }
        }
    }
}
