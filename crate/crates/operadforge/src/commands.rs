//! Command implementations. Every command renders its report into a string
//! and an exit code; errors are usage or domain errors.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use linkcheck::SweepSummary;
use posetkit::{order_complex, PosetJson};
use serde::Serialize;
use serde_json::{json, Value};
use stratlab::{
    boundary_colimit, extend_left, extend_right, fm1_model, interval_nullbordism_model, interval_with_w3,
    null_surgery_model, recognize, stratified_euler, trivial_bimodule_model, validate_model, CellModel,
    EquivariantComplex, Flavor, LedgerKind, ModelJson, Recognition, StratError,
};
use treekit::{
    colored_to_dot, enumerate_colored, enumerate_trees, label_range, tree_to_dot, Color, LabeledTree, Scheme, Slot,
    TreeJson,
};

use crate::cli::{BoundaryArgs, Cli, Command, ExampleName, Format, SchemeArg, SideArg, StratCommand, Suite};

/// Rendered output and exit status of a command.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Enumerate { labels, scheme, count } => enumerate(cli.format, *labels, *scheme, *count),
        Command::Verify { suite, labels_max, sample } => verify(cli, *suite, *labels_max, *sample),
        Command::Example { name } => example(cli.format, *name),
        Command::Stratlab { command } => stratlab(cli, command),
        Command::Euler(args) => euler(cli.format, args),
        Command::Betti { poset, model, arity, flavor } => betti(cli.format, poset.as_deref(), model, *arity, flavor),
        Command::Ledger { d, m, kind } => ledger(cli.format, *d, *m, kind),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn no_dot(what: &str) -> anyhow::Error {
    anyhow!("{what} has no DOT rendering; use --format json or table")
}

/// Leaves and children of every vertex in slot order, e.g. `{1,{2,3}}`.
fn plain_tree(t: &LabeledTree) -> String {
    fn go(t: &LabeledTree, v: usize, out: &mut String) {
        out.push('{');
        for (i, s) in t.slots(v).into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            match s {
                Slot::Label(l) => {
                    let _ = write!(out, "{l}");
                }
                Slot::Child(c) => go(t, c, out),
            }
        }
        out.push('}');
    }
    let mut out = String::new();
    go(t, t.root(), &mut out);
    out
}

fn enumerate(format: Format, labels: usize, scheme: SchemeArg, count: bool) -> Result<Outcome> {
    let set = label_range(labels);
    let (names, jsons, dots): (Vec<String>, Vec<TreeJson>, Vec<String>) = match scheme {
        SchemeArg::Plain => {
            let trees = enumerate_trees(&set)?;
            (
                trees.iter().map(plain_tree).collect(),
                trees.iter().map(TreeJson::from_tree).collect(),
                trees.iter().map(tree_to_dot).collect(),
            )
        }
        s => {
            let scheme = match s {
                SchemeArg::Rbw => Scheme::Rbw,
                SchemeArg::Five => Scheme::FiveColor,
                _ => Scheme::RwLocal,
            };
            let trees = enumerate_colored(&set, scheme)?;
            (
                trees.iter().map(|t| t.compact()).collect(),
                trees.iter().map(TreeJson::from_colored).collect(),
                trees.iter().map(colored_to_dot).collect(),
            )
        }
    };
    log::info!("enumerated {} trees on {labels} labels", names.len());
    let scheme_name = format!("{scheme:?}").to_lowercase();
    let stdout = match (format, count) {
        (Format::Json, true) => to_json(&json!({ "labels": labels, "scheme": scheme_name, "count": names.len() }))?,
        (Format::Json, false) => {
            to_json(&json!({ "labels": labels, "scheme": scheme_name, "count": names.len(), "trees": jsons }))?
        }
        (Format::Table, true) => format!("{}\n", names.len()),
        (Format::Table, false) => names.iter().map(|n| format!("{n}\n")).collect(),
        (Format::Dot, true) => return Err(no_dot("a count")),
        (Format::Dot, false) => dots.concat(),
    };
    Ok(Outcome::ok(stdout))
}

fn verify(cli: &Cli, suite: Suite, labels_max: Option<usize>, sample: usize) -> Result<Outcome> {
    let scheme = match suite {
        Suite::Five => Scheme::FiveColor,
        Suite::Rwlocal => Scheme::RwLocal,
        _ => Scheme::Rbw,
    };
    let labels_max = labels_max.unwrap_or(if suite == Suite::Five { 3 } else { 4 });
    let mut trees = linkcheck::corpus(scheme, labels_max)?;
    if sample > 0 {
        trees.extend(linkcheck::sample_corpus(scheme, labels_max + 1, sample, cli.seed)?);
    }
    log::info!("verifying {suite:?} on {} trees", trees.len());
    match suite {
        Suite::Links => report_sweep(cli, linkcheck::sweep_link_balls(&trees)),
        Suite::JoinDecomp => report_sweep(cli, linkcheck::sweep_join_decomposition(&trees)),
        Suite::SysIso => report_sweep(cli, linkcheck::sweep_sys_iso(&trees)),
        Suite::Elementary => report_sweep(cli, linkcheck::sweep_elementary(&trees)),
        Suite::Five => report_sweep(cli, linkcheck::sweep_five_links(&trees)),
        Suite::Rwlocal => report_sweep(cli, linkcheck::sweep_rwlocal_links(&trees)),
    }
}

fn report_sweep<C: Serialize>(cli: &Cli, summary: SweepSummary<C>) -> Result<Outcome> {
    let passed = summary.passed();
    if let (false, Some(path)) = (passed, &cli.dump_counterexample) {
        fs::write(path, to_json(&summary)?).with_context(|| format!("writing {}", path.display()))?;
    }
    let stdout = match cli.format {
        Format::Json => to_json(&json!({
            "name": summary.name,
            "trees": summary.trees,
            "checked": summary.checked,
            "failures": summary.failures,
            "errors": summary.errors,
            "passed": passed,
        }))?,
        Format::Table => {
            let mut out = format!(
                "{}: {} trees, {} certificates, {} failures, {} errors: {}\n",
                summary.name,
                summary.trees,
                summary.checked,
                summary.failures.len(),
                summary.errors.len(),
                if passed { "PASS" } else { "FAIL" }
            );
            if let Some(f) = summary.failures.first() {
                let _ = writeln!(out, "first failure: {}", serde_json::to_string(f)?);
            }
            for e in summary.errors.iter().take(5) {
                let _ = writeln!(out, "error: {e}");
            }
            out
        }
        Format::Dot => return Err(no_dot("a sweep report")),
    };
    Ok(Outcome { code: if passed { EXIT_OK } else { EXIT_FAILED }, stdout })
}

/// One stated value of a worked example against the computed one.
#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    expected: Value,
    computed: Value,
    ok: bool,
}

fn check<T: Serialize + PartialEq>(name: &'static str, expected: T, computed: T) -> Check {
    let ok = expected == computed;
    Check { name, expected: json!(expected), computed: json!(computed), ok }
}

fn example(format: Format, name: ExampleName) -> Result<Outcome> {
    let (title, checks, report): (&str, Vec<Check>, Value) = match name {
        ExampleName::Hexagons => {
            let r = stratlab::hexagons()?;
            let checks = vec![
                check("components", 2, r.recognition.components),
                check("edges per component", vec![6, 6], r.cycle_lengths.clone()),
                check("f-vector", vec![12, 12], r.recognition.f_vector.clone()),
                check("A3 acts without fixed cells", true, r.alternating_free),
                check("transpositions swap the components", true, r.transpositions_swap),
            ];
            ("hexagons", checks, json!(r))
        }
        ExampleName::Chi48 => {
            let r = stratlab::chi48()?;
            let checks = vec![
                check("closed surface", true, r.recognition.kind == stratlab::StructureKind::ClosedSurface),
                check("euler characteristic (cells)", r.stated, r.euler),
                check("euler characteristic (strata)", r.stated, r.stratified_euler),
                check("free action", true, r.action.free),
            ];
            ("chi48", checks, json!(r))
        }
        ExampleName::Fm1Pentagons => {
            let r = stratlab::fm1_pentagons()?;
            let checks = vec![
                check("pentagons", 24, r.pentagons),
                check("components", 24, r.arity4_space.components),
                check("euler characteristic", 24, r.arity4_space.euler),
                check("arity-3 boundary points", 12, r.arity3_boundary.cells),
                check("model validates", true, r.valid),
            ];
            ("fm1-pentagons", checks, json!(r))
        }
        ExampleName::NullChain => {
            let r = stratlab::null_chain()?;
            let checks = vec![
                check("O2(3) is a circle", (stratlab::StructureKind::Circles, 1), (r.step1.kind, r.step1.components)),
                check("O3(4) is a sphere", true, r.step3_is_sphere),
            ];
            ("null-chain", checks, json!(r))
        }
    };
    let matches = checks.iter().all(|c| c.ok);
    let stdout = match format {
        Format::Json => to_json(&json!({ "example": title, "checks": checks, "matches": matches, "report": report }))?,
        Format::Table => {
            let mut out = format!("{title}\n");
            let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &checks {
                let _ = writeln!(
                    out,
                    "  {:width$}  expected {:<12} computed {:<12} {}",
                    c.name,
                    c.expected.to_string(),
                    c.computed.to_string(),
                    if c.ok { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(
                out,
                "{}",
                if matches { "matches the stated values" } else { "differs from the stated values" }
            );
            out
        }
        Format::Dot => return Err(no_dot("an example report")),
    };
    Ok(Outcome { code: if matches { EXIT_OK } else { EXIT_FAILED }, stdout })
}

/// A built-in model by name, or a model JSON file.
pub fn load_model(name: &str) -> Result<CellModel> {
    let model = match name {
        "fm1" => fm1_model(4)?,
        "interval" => interval_nullbordism_model()?,
        "interval-w3" => interval_with_w3()?,
        "null" => null_surgery_model()?,
        "trivial" => trivial_bimodule_model(&fm1_model(4)?)?,
        _ if name.starts_with("fm1-") => {
            let n: usize = name[4..].parse().with_context(|| format!("bad truncation in `{name}`"))?;
            fm1_model(n)?
        }
        _ if Path::new(name).extension().is_some_and(|e| e == "json") => {
            let text = fs::read_to_string(name).with_context(|| format!("reading {name}"))?;
            let json: ModelJson = serde_json::from_str(&text).with_context(|| format!("parsing {name}"))?;
            CellModel::from_json(&json)?
        }
        _ => bail!("unknown model `{name}` (built-ins: fm1, fm1-2 … fm1-5, interval, interval-w3, null, trivial)"),
    };
    Ok(model)
}

fn parse_flavor(s: &str) -> Result<Flavor> {
    s.parse::<Flavor>().map_err(|e| anyhow!(e))
}

fn colimit(args: &BoundaryArgs) -> Result<(CellModel, EquivariantComplex)> {
    let model = load_model(&args.model.model)?;
    let cx = boundary_colimit(&model, args.arity, parse_flavor(&args.flavor)?)?;
    Ok((model, cx))
}

fn recognition_table(title: &str, r: &Recognition) -> String {
    let mut out = format!("{title}\n");
    let _ = writeln!(out, "  structure   {:?}", r.kind);
    let _ = writeln!(out, "  dimension   {}", r.dim.map_or("-".to_string(), |d| d.to_string()));
    let _ = writeln!(out, "  f-vector    {:?}", r.f_vector);
    let _ = writeln!(out, "  euler       {}", r.euler);
    let _ = writeln!(out, "  components  {} {:?}", r.components, r.component_sizes);
    let _ = writeln!(out, "  betti (mod 2) {:?}", r.betti);
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "  witness     {w}");
    }
    out
}

fn stratlab(cli: &Cli, command: &StratCommand) -> Result<Outcome> {
    match command {
        StratCommand::Boundary(args) => {
            let (_, cx) = colimit(args)?;
            let stdout = match cli.format {
                Format::Json => to_json(&cx.to_json())?,
                Format::Dot => cx.to_dot(),
                Format::Table => {
                    let mut out = recognition_table(
                        &format!("{} boundary colimit of {} in arity {}", args.flavor, args.model.model, args.arity),
                        &recognize(&cx),
                    );
                    let free = stratlab::free_action_check(&cx);
                    let _ = writeln!(
                        out,
                        "  free action {} ({} fixed cell/permutation pairs)",
                        free.free, free.fixed_count
                    );
                    out
                }
            };
            Ok(Outcome::ok(stdout))
        }
        StratCommand::Extend { model, side, output } => {
            let input = load_model(&model.model)?;
            let result = match side {
                SideArg::Left => extend_left(&input),
                SideArg::Right => extend_right(&input),
            };
            let out = match result {
                Ok(m) => m,
                Err(StratError::Invalid(report) | StratError::OutputInvalid(report)) => {
                    let stdout = match cli.format {
                        Format::Json => to_json(&report)?,
                        _ => format!("surgery refused: {report}\n"),
                    };
                    return Ok(Outcome { code: EXIT_FAILED, stdout });
                }
                Err(e) => return Err(e.into()),
            };
            if let Some(path) = output {
                fs::write(path, to_json(&out.to_json())?).with_context(|| format!("writing {}", path.display()))?;
            }
            let stdout = match cli.format {
                Format::Json => to_json(&validate_model(&out))?,
                Format::Table => validation_table(&out),
                Format::Dot => return Err(no_dot("a model")),
            };
            Ok(Outcome::ok(stdout))
        }
        StratCommand::Validate { model } => {
            let model = load_model(&model.model)?;
            let report = validate_model(&model);
            let stdout = match cli.format {
                Format::Json => to_json(&report)?,
                Format::Table => validation_table(&model),
                Format::Dot => return Err(no_dot("a validation report")),
            };
            Ok(Outcome { code: if report.ok { EXIT_OK } else { EXIT_FAILED }, stdout })
        }
        StratCommand::Space { model, color, arity } => {
            let model = load_model(&model.model)?;
            let color =
                Color::from_char(color.to_ascii_uppercase()).ok_or_else(|| anyhow!("unknown color `{color}`"))?;
            let space = model.space(color, *arity)?;
            let cx = EquivariantComplex::from(space);
            let stdout = match cli.format {
                Format::Json => to_json(&json!({ "complex": cx.to_json(), "recognition": recognize(&cx) }))?,
                Format::Dot => cx.to_dot(),
                Format::Table => recognition_table(&format!("{color}({arity}) of {}", model.name()), &recognize(&cx)),
            };
            Ok(Outcome::ok(stdout))
        }
        StratCommand::Export { model } => {
            let model = load_model(&model.model)?;
            match cli.format {
                Format::Dot => Err(no_dot("a model")),
                _ => Ok(Outcome::ok(to_json(&model.to_json())?)),
            }
        }
        StratCommand::Example { name } => example(cli.format, *name),
    }
}

fn validation_table(model: &CellModel) -> String {
    let report = validate_model(model);
    let mut out = format!("{} ({} model, truncation {})\n", model.name(), model.kind(), model.truncation());
    for s in &report.spaces {
        let _ = writeln!(
            out,
            "  {}({})  cells {:>5}  interior {:>5}  f-vector {:?}  euler {:>4}  top dim {} (ledger {})",
            s.color,
            s.arity,
            s.cells,
            s.interior,
            s.f_vector,
            s.euler,
            s.top_dim.map_or("-".to_string(), |d| d.to_string()),
            s.expected_dim
        );
    }
    for v in &report.violations {
        let _ = writeln!(out, "  violation {:?} in {}({}): {}", v.kind, v.color, v.arity, v.detail);
    }
    let _ = writeln!(out, "{}", if report.ok { "valid" } else { "INVALID" });
    out
}

fn euler(format: Format, args: &BoundaryArgs) -> Result<Outcome> {
    let (model, cx) = colimit(args)?;
    let cells = cx.euler();
    let strata = stratified_euler(&model, args.arity, parse_flavor(&args.flavor)?)?;
    let stdout = match format {
        Format::Json => to_json(&json!({
            "model": model.name(),
            "arity": args.arity,
            "flavor": args.flavor,
            "f_vector": cx.f_vector(),
            "euler": cells,
            "stratified_euler": strata,
        }))?,
        Format::Table => format!("euler {cells} (cells {:?}), stratified {strata}\n", cx.f_vector()),
        Format::Dot => return Err(no_dot("an Euler characteristic")),
    };
    Ok(Outcome { code: if cells == strata { EXIT_OK } else { EXIT_FAILED }, stdout })
}

fn betti(
    format: Format,
    poset: Option<&Path>,
    model: &Option<String>,
    arity: Option<usize>,
    flavor: &str,
) -> Result<Outcome> {
    let p = match (poset, model, arity) {
        (Some(path), _, _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let json: PosetJson = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            json.to_poset()?
        }
        (None, Some(model), Some(arity)) => {
            let model = load_model(model)?;
            boundary_colimit(&model, arity, parse_flavor(flavor)?)?.poset
        }
        _ => bail!("give either --poset FILE or --model NAME --arity M"),
    };
    let betti = gf2homology::betti(&order_complex(&p));
    let stdout = match format {
        Format::Json => to_json(&json!({ "elements": p.len(), "betti": betti }))?,
        Format::Table => format!("betti (mod 2) {betti:?}\n"),
        Format::Dot => return Err(no_dot("Betti numbers")),
    };
    Ok(Outcome::ok(stdout))
}

fn ledger(format: Format, d: usize, m: usize, kind: &str) -> Result<Outcome> {
    let kind: LedgerKind = kind.parse().map_err(|e: String| anyhow!(e))?;
    if d == 0 || m < 2 {
        bail!("the ledger needs d ≥ 1 and m ≥ 2");
    }
    let value = stratlab::dimension_ledger(d, m, kind);
    let stdout = match format {
        Format::Json => to_json(&json!({ "d": d, "m": m, "kind": kind, "dimension": value }))?,
        Format::Table => format!("{value}\n"),
        Format::Dot => return Err(no_dot("a ledger entry")),
    };
    Ok(Outcome::ok(stdout))
}
