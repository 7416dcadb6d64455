use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use super::{Cli, Command, FormatArg, Lemma, ModeArg, RunReport, StructureArg, VERSION};
use crate::error::{Error, Result};
use crate::grads::{
    audit_grad_inequalities_with_cap, grad_with_cap, hadwiger_model, hadwiger_with_cap, top_grad_with, verify_witness,
    DensityReport, TopMinorMode, GRAD_CAP, HADWIGER_CAP,
};
use crate::graph::{
    audit_crossing_lemma, audit_crossings_per_edge, count_crossings, encode_graph6, parse_graph, subdivide_uniform,
    write_edge_list, Drawing, Graph, GraphFormat,
};
use crate::layouts::{
    audit_jump_queue, contract_queue_layout, queue_number_with_cap, stack_number_with_cap, validate_layout, Layout,
    Poset, JUMP_NUMBER_CAP, LAYOUT_CAP,
};
use crate::nonrep::{
    acyclic_from_subdivision, check_star_acyclic, colour_kn_prime, colour_knd, colour_subdivision, find_repetition,
    knd_parameters, pi_exact_with_cap, thue_word, Colouring, ColouringMode, PI_CAP,
};
use crate::randexp::{
    audit_degree_tail, audit_shallow_top_density, audit_short_cycles, audit_small_subgraph_density, sample_gnp,
};
use crate::report::Check;

pub(super) struct Executed {
    pub report: RunReport,
    /// Plain-text output used instead of the JSON report unless `--json` is given.
    pub text: Option<String>,
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
    inputs: BTreeMap<String, Value>,
}

impl Ctx<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        let mut text = String::new();
        if path == "-" {
            self.stdin.read_to_string(&mut text)?;
        } else {
            text = std::fs::read_to_string(Path::new(path)).map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
        }
        Ok(text)
    }

    fn graph(&mut self) -> Result<Graph> {
        let path = self.cli.global.input.clone();
        self.inputs.insert("input".into(), json!(path));
        let text = self.read(&path)?;
        let format = self.cli.global.format.map(|f| match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        });
        parse_graph(&text, format)
    }

    fn file(&mut self, key: &str, path: &Path) -> Result<String> {
        self.inputs.insert(key.into(), json!(path.display().to_string()));
        self.read(&path.display().to_string())
    }

    fn param(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.into(), json!(value));
    }

    fn cap(&mut self, default: usize) -> usize {
        let cap = self.cli.global.cap.unwrap_or(default);
        self.param("cap", cap);
        cap
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("library types serialise")
}

fn density_result(g: &Graph, r: &DensityReport) -> (Value, Vec<Check>) {
    let verified = verify_witness(g, &r.witness);
    let mut check = Check::holds("witness verifies against the input graph", verified.is_ok());
    if let Err(msg) = verified {
        check = check.with_note(msg);
    }
    let result = json!({
        "value_num": r.value.numer(),
        "value_den": r.value.denom(),
        "value": to_value(r).get("value").cloned(),
        "witness": to_value(&r.witness),
    });
    (result, vec![check])
}

fn parse_parts(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut parts = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let part = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line: i + 1, msg: format!("bad vertex {t:?}") }))
            .collect::<Result<Vec<_>>>()?;
        parts.push(part);
    }
    Ok(parts)
}

fn parse_params(pairs: &[String]) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for pair in pairs.iter().filter(|p| !p.trim().is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("parameter {pair:?} is not key=value")))?;
        let v: f64 = v.trim().parse().map_err(|_| Error::invalid(format!("parameter {k} is not a number")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn whole(params: &BTreeMap<String, f64>, key: &str, default: usize) -> Result<usize> {
    match params.get(key) {
        None => Ok(default),
        Some(&v) if v >= 0.0 && v.fract() == 0.0 => Ok(v as usize),
        Some(v) => Err(Error::invalid(format!("parameter {key} = {v} must be a non-negative integer"))),
    }
}

pub(super) fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Executed> {
    let mut ctx = Ctx { cli, stdin, inputs: BTreeMap::new() };
    let mut seed = None;
    let mut text = None;
    let (name, result, checks): (&str, Value, Vec<Check>) = match &cli.command {
        Command::Grad { depth } => {
            ctx.param("depth", depth);
            let cap = ctx.cap(GRAD_CAP);
            let g = ctx.graph()?;
            let r = grad_with_cap(&g, *depth, cap)?;
            let (result, checks) = density_result(&g, &r);
            ("grad", result, checks)
        }
        Command::Topgrad { depth, mode } => {
            ctx.param("depth", depth);
            let mode = match mode {
                ModeArg::Strict => TopMinorMode::Strict,
                ModeArg::Loose => TopMinorMode::Loose,
            };
            ctx.param("mode", mode);
            let cap = ctx.cap(GRAD_CAP);
            let g = ctx.graph()?;
            let r = top_grad_with(&g, *depth, mode, cap)?;
            let (result, checks) = density_result(&g, &r);
            ("topgrad", result, checks)
        }
        Command::AuditGrads { depth } => {
            ctx.param("depth", depth);
            let cap = ctx.cap(GRAD_CAP);
            let g = ctx.graph()?;
            let audit = audit_grad_inequalities_with_cap(&g, *depth, cap)?;
            ("audit-grads", to_value(&audit), audit.checks)
        }
        Command::Hadwiger => {
            let cap = ctx.cap(HADWIGER_CAP);
            let g = ctx.graph()?;
            let h = hadwiger_with_cap(&g, cap)?;
            let model = if g.n() <= HADWIGER_CAP { Some(hadwiger_model(&g)?) } else { None };
            ("hadwiger", json!({ "hadwiger": h, "model": model }), vec![])
        }
        Command::LayoutCheck { layout } => {
            let layout_text = ctx.file("layout", layout)?;
            let g = ctx.graph()?;
            let layout = Layout::parse(&layout_text)?;
            let check = validate_layout(&g, &layout)?;
            let checks = vec![Check::holds("no two edges on a page conflict", check.valid)];
            ("layout-check", json!({ "pages": layout.page_count(), "valid": check.valid, "violations": check.violations }), checks)
        }
        Command::QueueNumber | Command::StackNumber => {
            let cap = ctx.cap(LAYOUT_CAP);
            let g = ctx.graph()?;
            let queue = matches!(cli.command, Command::QueueNumber);
            let (k, layout) = if queue { queue_number_with_cap(&g, cap)? } else { stack_number_with_cap(&g, cap)? };
            let check = validate_layout(&g, &layout)?;
            let checks = vec![Check::holds("witness layout is valid", check.valid)];
            let result = json!({ "pages": k, "layout": layout, "layout_text": layout.to_text() });
            (if queue { "queue-number" } else { "stack-number" }, result, checks)
        }
        Command::ContractQueue { layout, parts, radius } => {
            ctx.param("radius", radius);
            let layout_text = ctx.file("layout", layout)?;
            let parts_text = ctx.file("parts", parts)?;
            let g = ctx.graph()?;
            let layout = Layout::parse(&layout_text)?;
            let parts = parse_parts(&parts_text)?;
            let out = contract_queue_layout(&g, &layout, &parts, *radius)?;
            let checks = out.checks.clone();
            ("contract-queue", to_value(&out), checks)
        }
        Command::JumpNumber => {
            let cap = ctx.cap(JUMP_NUMBER_CAP);
            let path = cli.global.input.clone();
            ctx.param("input", &path);
            let p = Poset::parse(&ctx.read(&path)?)?;
            let audit = audit_jump_queue(&p, cap)?;
            let checks = audit.checks.clone();
            ("jump-number", to_value(&audit), checks)
        }
        Command::Thue { length } => {
            ctx.param("length", length);
            let w = thue_word(*length);
            ("thue", json!({ "length": w.len(), "word": w.to_string() }), vec![])
        }
        Command::NonrepCheck { colouring, max_half, mode } => {
            let ctext = ctx.file("colouring", colouring)?;
            let g = ctx.graph()?;
            let c = Colouring::parse(g, &ctext)?;
            let half = max_half.unwrap_or(c.graph().n() / 2);
            ctx.param("max_half", half);
            let rep = find_repetition(&c, half)?;
            let mut checks = vec![Check::holds("no repetitive path", rep.is_none())];
            let mut structure = None;
            if let Some(mode) = mode {
                let mode = match mode {
                    StructureArg::Proper => ColouringMode::Proper,
                    StructureArg::Star => ColouringMode::Star,
                    StructureArg::Acyclic => ColouringMode::Acyclic,
                    StructureArg::StrongStar => ColouringMode::StrongStar,
                };
                ctx.param("mode", mode);
                let s = check_star_acyclic(&c, mode);
                checks.push(Check::holds(format!("colouring is {}", to_value(mode).as_str().unwrap_or("")), s.valid));
                structure = Some(s);
            }
            let result = json!({
                "colours_used": c.colours_used(),
                "repetition": rep,
                "structure": structure,
            });
            ("nonrep-check", result, checks)
        }
        Command::PiExact => {
            let cap = ctx.cap(PI_CAP);
            let g = ctx.graph()?;
            let (pi, c) = pi_exact_with_cap(&g, cap)?;
            let clean = find_repetition(&c, g.n() / 2)?.is_none();
            let checks = vec![Check::holds("witness colouring is non-repetitive", clean)];
            ("pi-exact", json!({ "pi": pi, "colouring": c }), checks)
        }
        Command::ColourSubdivision { colouring, t } => {
            ctx.param("t", t);
            let ctext = match colouring {
                Some(path) => Some(ctx.file("colouring", path)?),
                None => None,
            };
            let g = ctx.graph()?;
            let c = match ctext {
                Some(text) => Colouring::parse(g.clone(), &text)?,
                None => pi_exact_with_cap(&g, ctx.cap(PI_CAP))?.1,
            };
            let sg = subdivide_uniform(&g, *t);
            let out = colour_subdivision(&c, &sg)?;
            let clean = find_repetition(&out, out.graph().n() / 2)?.is_none();
            let used = out.colours_used();
            let bound = c.colours_used() + if *t == 0 { 0 } else if *t <= 2 { *t } else { 3 };
            let checks = vec![
                Check::holds("subdivision colouring is non-repetitive", clean),
                Check::le(
                    "colours <= base colours + fresh colours",
                    crate::report::Quantity::int(used as i64),
                    crate::report::Quantity::int(bound as i64),
                ),
            ];
            let result = json!({ "colours_used": used, "bound": bound, "colouring": out, "edges": write_edge_list(sg.result()) });
            ("colour-subdivision", result, checks)
        }
        Command::ColourKnprime { n } => {
            ctx.param("n", n);
            let k = colour_kn_prime(*n)?;
            let clean = find_repetition(&k.colouring, k.colouring.graph().n() / 2)?.is_none();
            let mut checks = k.checks.clone();
            checks.push(Check::holds("colouring is non-repetitive", clean));
            ("colour-knprime", to_value(&k), checks)
        }
        Command::ColourKnd { n, d, a, b } => {
            let (da, db) = knd_parameters(*n, *d);
            let (a, b) = (a.unwrap_or(da), b.unwrap_or(db));
            ctx.param("n", n);
            ctx.param("d", d);
            ctx.param("A", a);
            ctx.param("B", b);
            let k = colour_knd(*n, *d, a, b)?;
            let clean = find_repetition(&k.colouring, k.colouring.graph().n() / 2)?.is_none();
            let mut checks = k.checks.clone();
            checks.push(Check::holds("colouring is non-repetitive", clean));
            ("colour-knd", to_value(&k), checks)
        }
        Command::AcyclicFromSubdivision { colouring } => {
            let ctext = ctx.file("colouring", colouring)?;
            let g = ctx.graph()?;
            let sub = subdivide_uniform(&g, 1);
            let c = Colouring::parse(sub.result().clone(), &ctext)?;
            let out = acyclic_from_subdivision(&g, &c)?;
            let checks = out.checks.clone();
            ("acyclic-from-subdivision", to_value(&out), checks)
        }
        Command::Gnp { n, p } => {
            let s = cli.global.seed.unwrap_or(0);
            seed = Some(s);
            ctx.param("n", n);
            ctx.param("p", p);
            let sample = sample_gnp(*n, *p, s)?;
            text = Some(format!("# G(n={n}, p={p}) seed={s}\n{}", write_edge_list(&sample.graph)));
            ("gnp", json!({ "n": n, "m": sample.graph.m(), "edges": sample.graph.edges().collect::<Vec<_>>() }), vec![])
        }
        Command::AuditRandom { lemma, params, trials } => {
            let s = cli.global.seed.unwrap_or(0);
            seed = Some(s);
            let params = parse_params(params)?;
            ctx.param("trials", trials);
            let get = |k: &str, default: f64| params.get(k).copied().unwrap_or(default);
            let report = match lemma {
                Lemma::DegreeTail => {
                    audit_degree_tail(get("d", 1.0), get("alpha", 2.0), whole(&params, "n", 100_000)?, *trials, s)?
                }
                Lemma::Density => {
                    audit_small_subgraph_density(get("d", 0.5), get("eps", 0.5), whole(&params, "n", 60)?, *trials, s)?
                }
                Lemma::TopDensity => {
                    audit_shallow_top_density(get("d", 0.5), whole(&params, "r", 1)?, whole(&params, "n", 12)?, *trials, s)?
                }
                Lemma::Cycles => {
                    audit_short_cycles(get("c", 1.0), whole(&params, "n", 10_000)?, *trials, whole(&params, "t", 6)?, s)?
                }
            };
            ctx.param("lemma", report.audit.clone());
            for (k, v) in &report.parameters {
                ctx.param(k, v);
            }
            if cli.global.csv {
                text = Some(report.to_csv());
            }
            let checks = report.checks.clone();
            ("audit-random", to_value(&report), checks)
        }
        Command::Convert { to } => {
            let g = ctx.graph()?;
            let out = match to {
                FormatArg::Edgelist => write_edge_list(&g),
                FormatArg::Graph6 => encode_graph6(&g)? + "\n",
            };
            ctx.param("to", if *to == FormatArg::Graph6 { "graph6" } else { "edgelist" });
            text = Some(out.clone());
            ("convert", json!({ "n": g.n(), "m": g.m(), "output": out }), vec![])
        }
        Command::DrawingAudit { drawing, k } => {
            let dtext = ctx.file("drawing", drawing)?;
            let g = ctx.graph()?;
            let d = Drawing::parse(g, &dtext)?;
            let crossings = count_crossings(&d);
            let lemma = audit_crossing_lemma(&d);
            let mut checks = vec![lemma.check.clone()];
            let per_edge = k.map(|k| audit_crossings_per_edge(&d, k));
            if let Some(p) = &per_edge {
                ctx.param("k", p.k);
                checks.push(p.per_edge.clone());
                checks.push(p.density.clone());
            }
            let result = json!({ "crossings": crossings, "crossing_lemma": lemma, "per_edge": per_edge });
            ("drawing-audit", result, checks)
        }
    };
    let report = RunReport {
        subcommand: name.to_string(),
        inputs: Value::Object(ctx.inputs.into_iter().collect()),
        result,
        checks,
        seed,
        version: VERSION.to_string(),
    };
    Ok(Executed { report, text })
}
