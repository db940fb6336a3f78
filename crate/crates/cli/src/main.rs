use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use bifree::biset::{BisetElement, BisetPair, DoubleBurnsideRing, TensorProduct, TwistedClassTable};
use bifree::group::{build_group, GroupContext};
use bifree::units::{search_orthogonal, theorem_report};
use bifree::DEFAULT_ORDER_CAP;
use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

mod render;

#[derive(Parser, Debug)]
#[command(
    name = "bifree",
    version,
    about = "Burnside rings, bifree bisets and orthogonal units of small finite groups"
)]
struct Cli {
    /// Largest group order that will be built.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP, value_parser = parse_positive)]
    cap: usize,

    /// Worker threads for the searches (default: one per core).
    #[arg(long, global = true, value_parser = parse_positive)]
    workers: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for the order and sampling of `check`; results never depend on it otherwise.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Subgroup classes, normalizers, centralizers and Out(G).
    GroupInfo { spec: String },

    /// Table of marks, and optionally the unit group of B(G).
    Burnside {
        spec: String,
        /// Also list the units of B(G) as coefficient vectors.
        #[arg(long)]
        units: bool,
    },

    /// Twisted diagonal classes of G×H, or a tensor product of two elements.
    Biset {
        g: String,
        h: String,
        /// List the class table (the default).
        #[arg(long, conflicts_with = "tensor")]
        classes: bool,
        /// Multiply A in B(G,H) by B in B(H,K). Elements are labels or
        /// `{label: coefficient}` JSON objects.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        tensor: Option<Vec<String>>,
        /// The group K for `--tensor` (default: G).
        #[arg(long, value_name = "K", requires = "tensor")]
        with: Option<String>,
    },

    /// Orthogonal units of B(G,H), or the full verification report for G.
    Units {
        g: String,
        /// Defaults to G.
        h: Option<String>,
        /// Run every structural check on B(G,G) and report each result.
        #[arg(long)]
        report: bool,
    },

    /// Randomized self-checks over a few groups, in seed-dependent order.
    Check {
        /// Groups to check.
        #[arg(default_values_t = ["C1", "C2", "C3", "S3", "C2xC2", "A4"].map(String::from))]
        specs: Vec<String>,
        /// Random basis pairs per group for the tensor cross-check.
        #[arg(long, default_value_t = 20)]
        pairs: usize,
    },
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// A command's JSON result and whether everything it verified passed.
struct Outcome {
    value: Value,
    passed: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            eprint!("{e}");
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            emit(Format::Json, &json!({ "error": { "kind": "usage", "message": first } }));
            return ExitCode::from(2);
        }
    };
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("could not size the worker pool: {e}");
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            emit(cli.format, &outcome.value);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            emit(cli.format, &failure(&e));
            ExitCode::FAILURE
        }
    }
}

fn emit(format: Format, value: &Value) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Text => render::text(value),
    };
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn failure(e: &anyhow::Error) -> Value {
    use bifree::Error;
    let mut object = json!({ "kind": "error", "message": format!("{e:#}") });
    if let Some(err) = e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        let kind = match err {
            Error::OrderCap { .. } | Error::AboveCap { .. } => "order_cap",
            Error::Parse { .. } => "parse",
            Error::InvalidGroup(_) => "invalid_group",
            Error::NotSubgroup(_) => "not_subgroup",
            Error::NotIntegral { .. } => "not_integral",
            Error::Mismatch(_) => "mismatch",
            Error::NotFrobeniusComplement(_) => "not_frobenius_complement",
            Error::UnknownLabel(_) => "unknown_label",
            Error::Inconsistent(_) => "inconsistent",
        };
        object["kind"] = json!(kind);
        if let Error::Parse { position, .. } = err {
            object["position"] = json!(position);
        }
    }
    json!({ "error": object })
}

fn progress(message: &str) {
    eprintln!("bifree: {message}");
}

fn run(cli: &Cli) -> Result<Outcome> {
    let mut groups = Groups {
        cap: cli.cap,
        contexts: Vec::new(),
        rings: Vec::new(),
    };
    match &cli.command {
        Command::GroupInfo { spec } => {
            let ctx = groups.context(spec)?;
            group_info(&ctx).map(Outcome::ok)
        }
        Command::Burnside { spec, units } => {
            let ring = groups.ring(spec)?;
            burnside(&ring, *units).map(Outcome::ok)
        }
        Command::Biset {
            g,
            h,
            tensor: Some(ab),
            with,
            ..
        } => {
            let k = with.as_deref().unwrap_or(g);
            biset_tensor(&mut groups, [g, h, k], &ab[0], &ab[1])
        }
        Command::Biset { g, h, .. } => biset_classes(&mut groups, g, h).map(Outcome::ok),
        Command::Units { g, h, report } => units(&mut groups, g, h.as_deref(), *report),
        Command::Check { specs, pairs } => check(&mut groups, specs, *pairs, cli.seed),
    }
}

/// Groups built so far, so that equal specs share one context.
struct Groups {
    cap: usize,
    contexts: Vec<(String, Arc<GroupContext>)>,
    rings: Vec<(String, Arc<DoubleBurnsideRing>)>,
}

impl Groups {
    fn context(&mut self, spec: &str) -> Result<Arc<GroupContext>> {
        if let Some((_, c)) = self.contexts.iter().find(|(s, _)| s == spec) {
            return Ok(c.clone());
        }
        let group = build_group(spec, self.cap).with_context(|| format!("building {spec:?}"))?;
        let ctx = GroupContext::new(group);
        self.contexts.push((spec.to_string(), ctx.clone()));
        Ok(ctx)
    }

    fn ring(&mut self, spec: &str) -> Result<Arc<DoubleBurnsideRing>> {
        if let Some((_, r)) = self.rings.iter().find(|(s, _)| s == spec) {
            return Ok(r.clone());
        }
        let ctx = self.context(spec)?;
        progress(&format!("building the class table of {}", ctx.name()));
        let ring = Arc::new(DoubleBurnsideRing::new(ctx));
        self.rings.push((spec.to_string(), ring.clone()));
        Ok(ring)
    }

    fn table(&mut self, g: &str, h: &str) -> Result<Arc<TwistedClassTable>> {
        if g == h {
            return Ok(self.ring(g)?.table().clone());
        }
        let (gc, hc) = (self.context(g)?, self.context(h)?);
        progress(&format!("building the class table of {} × {}", gc.name(), hc.name()));
        Ok(Arc::new(TwistedClassTable::new(gc, hc)))
    }
}

fn group_info(ctx: &GroupContext) -> Result<Value> {
    let g = ctx.group();
    let lattice = ctx.lattice();
    let out = ctx.out();
    let classes: Vec<Value> = lattice
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": i,
                "order": c.order(),
                "size": c.size(),
                "normalizer_order": c.normalizer.order(),
                "centralizer_order": c.centralizer.order(),
                "generators": c.generators,
                "representative": c.representative.members(),
            })
        })
        .collect();
    Ok(json!({
        "group": ctx.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "cyclic": g.is_cyclic(),
        "nilpotent": g.is_nilpotent(),
        "subgroups": lattice.subgroup_count(),
        "class_count": lattice.len(),
        "classes": classes,
        "automorphisms": out.automorphisms().len(),
        "inner_automorphisms": out.inner_count(),
        "out_order": out.order(),
    }))
}

fn burnside(ring: &DoubleBurnsideRing, with_units: bool) -> Result<Value> {
    let tom = ring.burnside();
    let mut value = json!({
        "group": ring.group().name(),
        "labels": tom.labels(),
        "marks": tom.rows(),
    });
    if with_units {
        let found = tom.unit_group();
        value["unit_count"] = json!(found.len());
        value["units"] = json!(found.iter().map(|u| &u.coeffs).collect::<Vec<_>>());
    }
    Ok(value)
}

fn biset_classes(groups: &mut Groups, g: &str, h: &str) -> Result<Value> {
    let table = groups.table(g, h)?;
    let classes: Vec<Value> = table
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "label": table.label(i),
                "order": c.order(),
                "left_class": c.left_class,
                "right_class": c.right_class,
                "orbit": c.orbit,
                "normalizer_order": c.normalizer_order,
                "left_centralizer": c.left_centralizer,
                "right_centralizer": c.right_centralizer,
                "n_alpha": c.n_alpha,
                "n_alpha_inv": c.n_alpha_inv,
            })
        })
        .collect();
    Ok(json!({
        "left": table.left().name(),
        "right": table.right().name(),
        "class_count": table.len(),
        "classes": classes,
        "marks": table.mark_rows(),
    }))
}

/// An element given as a single class label or a `{label: coefficient}` object.
fn parse_element(table: &Arc<TwistedClassTable>, text: &str) -> Result<BisetElement> {
    let value = if text.trim_start().starts_with('{') {
        serde_json::from_str(text).with_context(|| format!("parsing element {text:?}"))?
    } else {
        json!({ text: 1 })
    };
    Ok(BisetElement::from_json(table.clone(), &value)?)
}

fn biset_tensor(groups: &mut Groups, [g, h, k]: [&str; 3], a: &str, b: &str) -> Result<Outcome> {
    let (left, right, target) = (groups.table(g, h)?, groups.table(h, k)?, groups.table(g, k)?);
    let product = TensorProduct::new(left.clone(), right.clone(), target)?;
    let (a, b) = (parse_element(&left, a)?, parse_element(&right, b)?);
    let result = product.multiply(&a, &b)?;
    let mackey = result.marks();
    let formula = product.tensor_marks(&a, &b)?;
    let agree = mackey == formula;
    Ok(Outcome {
        value: json!({
            "left": left.left().name(),
            "middle": left.right().name(),
            "right": right.right().name(),
            "a": a.to_json(),
            "b": b.to_json(),
            "product": result.to_json(),
            "marks": mackey,
            "mark_formula": formula,
            "agree": agree,
        }),
        passed: agree,
    })
}

fn units(groups: &mut Groups, g: &str, h: Option<&str>, report: bool) -> Result<Outcome> {
    let h = h.unwrap_or(g);
    if report {
        if h != g {
            bail!("--report takes a single group");
        }
        let ring = groups.ring(g)?;
        progress(&format!("searching orthogonal units of {}", ring.group().name()));
        let report = theorem_report(&ring, groups.cap)?;
        let passed = report.passed;
        return Ok(Outcome {
            value: serde_json::to_value(report)?,
            passed,
        });
    }
    let pair = if g == h {
        BisetPair::square(groups.ring(g)?)
    } else {
        BisetPair::new(groups.context(g)?, groups.context(h)?)
    };
    progress(&format!(
        "searching orthogonal units of {} × {}",
        pair.left_ring().group().name(),
        pair.right_ring().group().name()
    ));
    let found = search_orthogonal(&pair, groups.cap)?;
    Ok(Outcome::ok(json!({
        "left": pair.left_ring().group().name(),
        "right": pair.right_ring().group().name(),
        "count": found.len(),
        "uniform": found.iter().filter(|u| u.is_uniform()).count(),
        "units": found.iter().map(|u| u.to_json()).collect::<Vec<_>>(),
    })))
}

enum Task {
    Report(String),
    Tensor(String, u64),
    Dual(String),
}

fn check(groups: &mut Groups, specs: &[String], pairs: usize, seed: u64) -> Result<Outcome> {
    let mut tasks = Vec::new();
    for (i, spec) in specs.iter().enumerate() {
        tasks.push(Task::Report(spec.clone()));
        tasks.push(Task::Tensor(spec.clone(), seed.wrapping_add(i as u64)));
        tasks.push(Task::Dual(spec.clone()));
    }
    tasks.shuffle(&mut StdRng::seed_from_u64(seed));

    let mut results = Vec::new();
    for task in &tasks {
        let (name, outcome) = match task {
            Task::Report(spec) => {
                progress(&format!("report for {spec}"));
                let ring = groups.ring(spec)?;
                let report = theorem_report(&ring, groups.cap)?;
                let failed: Vec<&str> = report
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                (
                    format!("report {spec}"),
                    (
                        report.passed,
                        format!("{} units; failed: {failed:?}", report.unit_count),
                    ),
                )
            }
            Task::Tensor(spec, sample_seed) => {
                let ring = groups.ring(spec)?;
                (
                    format!("mark formula {spec}"),
                    tensor_sample(&ring, pairs, *sample_seed)?,
                )
            }
            Task::Dual(spec) => {
                let ring = groups.ring(spec)?;
                (format!("duality {spec}"), dual_involution(&ring)?)
            }
        };
        results.push(json!({ "name": name, "passed": outcome.0, "detail": outcome.1 }));
    }
    let passed = results.iter().all(|r| r["passed"] == json!(true));
    Ok(Outcome {
        value: json!({ "seed": seed, "checks": results, "passed": passed }),
        passed,
    })
}

/// Random basis pairs: marks of the Mackey product against the mark formula.
fn tensor_sample(ring: &DoubleBurnsideRing, pairs: usize, seed: u64) -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let table = ring.table();
    for _ in 0..pairs {
        let (i, j) = (rng.gen_range(0..table.len()), rng.gen_range(0..table.len()));
        let (a, b) = (
            BisetElement::basis(table.clone(), i),
            BisetElement::basis(table.clone(), j),
        );
        let mackey = ring.tensor().multiply(&a, &b)?.marks();
        let formula = ring.tensor().tensor_marks(&a, &b)?;
        if mackey != formula {
            return Ok((false, format!("{} · {} disagree", table.label(i), table.label(j))));
        }
    }
    Ok((true, format!("{pairs} basis pairs agree")))
}

fn dual_involution(ring: &DoubleBurnsideRing) -> Result<(bool, String)> {
    let table = ring.table();
    for i in 0..table.len() {
        let x = BisetElement::basis(table.clone(), i);
        let d = ring.dual(&x);
        if ring.dual(&d) != x {
            return Ok((false, format!("dual is not an involution at {}", table.label(i))));
        }
        if d.marks()
            .iter()
            .zip(0..)
            .any(|(&m, k)| m != x.mark_at(ring.dual_map()[k]))
        {
            return Ok((false, format!("dual changes marks at {}", table.label(i))));
        }
    }
    if ring.dual(&ring.identity()) != ring.identity() {
        return Ok((false, "[G]° ≠ [G]".into()));
    }
    Ok((true, format!("{} classes", table.len())))
}
