//! `gentle`: homological invariants of gentle algebras from the command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use gentle_core::generate::{default_arrow_count, gen_gentle, GeneratorConfig};
use gentle_core::homdim::{self, ResolutionLadder};
use gentle_core::io::{parse, serialize};
use gentle_core::oracle::check_equalities;
use gentle_core::surface::{surface_model, PolygonSource};
use gentle_core::{Dimension, GentlePresentation, ThreadSet, VertexId};

#[derive(Parser)]
#[command(name = "gentle", version, about = "Homological invariants of gentle algebras")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file presents a gentle algebra.
    Validate { file: PathBuf },
    /// List permitted and forbidden threads.
    Threads { file: PathBuf },
    /// The AG-invariant as pairs (m, n).
    Ag { file: PathBuf },
    /// Boundary components, elementary polygons and genus of the ribbon surface.
    Surface { file: PathBuf },
    /// Global dimension.
    Gldim { file: PathBuf },
    /// Self-injective dimension.
    Injdim { file: PathBuf },
    /// Nonprojective Gorenstein-projective modules.
    Gp { file: PathBuf },
    /// Minimal projective resolution of a simple or injective module.
    Resolve(ResolveArgs),
    /// Projective dimensions of all simple and injective modules.
    PdTable { file: PathBuf },
    /// Compare every invariant against linear algebra over a finite field.
    Check(CheckArgs),
    /// Write a random gentle presentation.
    Gen(GenArgs),
    /// The opposite algebra.
    Opposite { file: PathBuf },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("module").required(true).args(["simple", "injective"])))]
struct ResolveArgs {
    file: PathBuf,
    /// Resolve the simple module at this vertex.
    #[arg(long, value_name = "VERTEX")]
    simple: Option<String>,
    /// Resolve the indecomposable injective module at this vertex.
    #[arg(long, value_name = "VERTEX")]
    injective: Option<String>,
    /// Number of terms to print for infinite resolutions.
    #[arg(long, value_name = "K", default_value_t = 8)]
    max_terms: usize,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Field characteristic, 2 or 3.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=3))]
    field: u32,
    /// Resolution length cap: `auto` or a number no smaller than the sound cap.
    #[arg(long, default_value = "auto", value_parser = parse_cap)]
    cap: Cap,
}

#[derive(Clone, Copy)]
enum Cap {
    Auto,
    Fixed(u32),
}

fn parse_cap(s: &str) -> Result<Cap, String> {
    if s == "auto" {
        return Ok(Cap::Auto);
    }
    s.parse()
        .map(Cap::Fixed)
        .map_err(|_| format!("expected `auto` or a number, got `{s}`"))
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    vertices: usize,
    #[arg(long)]
    seed: u64,
    /// Target number of arrows (default: vertices - 1 + vertices / 2).
    #[arg(long)]
    arrows: Option<usize>,
    /// Reject presentations containing a full-relation cycle.
    #[arg(long)]
    no_full_cycles: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// A message for stderr and the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn semantic(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path) -> Result<GentlePresentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    parse(&text).map_err(|e| Failure {
        code: e.exit_code() as u8,
        message: format!("{}:\n{e}", path.display()),
    })
}

fn vertex(a: &GentlePresentation, name: &str) -> Result<VertexId, Failure> {
    a.vertex_by_name(name)
        .ok_or_else(|| Failure::semantic(format!("unknown vertex `{name}`")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn invariant<T>(r: Result<T, impl std::fmt::Display>) -> Result<T, Failure> {
    r.map_err(|e| Failure::semantic(e.to_string()))
}

fn names(a: &GentlePresentation, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| a.vertex_name(v).to_string()).collect()
}

fn dimension(d: Dimension, json: bool) -> String {
    if json {
        to_json(&d)
    } else {
        d.to_string()
    }
}

fn presentation_json(a: &GentlePresentation) -> Value {
    let raw = a.to_raw();
    json!({
        "vertices": raw.vertices,
        "arrows": raw.arrows.iter().map(|x| json!({"name": x.name, "source": x.source, "target": x.target})).collect::<Vec<_>>(),
        "relations": raw.relations.iter().map(|(x, y)| [x, y]).collect::<Vec<_>>(),
    })
}

fn validate(a: &GentlePresentation, json: bool) -> Outcome {
    let (v, e, r) = (a.vertex_count(), a.arrow_count(), a.relations().len());
    Ok(if json {
        to_json(&json!({"valid": true, "vertices": v, "arrows": e, "relations": r}))
    } else {
        format!("gentle: {v} vertices, {e} arrows, {r} relations")
    })
}

fn threads(a: &GentlePresentation, json: bool) -> Outcome {
    let t = ThreadSet::new(a);
    let render = |ts: &[gentle_core::Thread]| ts.iter().map(|x| x.render(a)).collect::<Vec<_>>();
    let cycles: Vec<String> = t
        .infinite_cycles
        .iter()
        .map(|c| c.iter().map(|&x| a.arrow_name(x)).collect::<Vec<_>>().join("·"))
        .collect();
    if json {
        return Ok(to_json(&json!({
            "permitted": render(&t.permitted),
            "forbidden": render(&t.forbidden_finite),
            "infinite_forbidden": cycles,
        })));
    }
    let mut out = format!("permitted ({}):\n", t.permitted.len());
    for s in render(&t.permitted) {
        out += &format!("  {s}\n");
    }
    out += &format!("forbidden ({}):\n", t.forbidden_count());
    for s in render(&t.forbidden_finite) {
        out += &format!("  {s}\n");
    }
    for s in cycles {
        out += &format!("  ({s})^infinity\n");
    }
    Ok(out.trim_end().to_string())
}

fn ag(a: &GentlePresentation, json: bool) -> Outcome {
    let phi = invariant(gentle_core::ag_invariant(a))?;
    Ok(if json { to_json(&phi) } else { phi.to_string() })
}

fn surface(a: &GentlePresentation, json: bool) -> Outcome {
    let model = invariant(surface_model(a))?;
    let stats = invariant(model.stats())?;
    let polygons: Vec<Value> = model
        .polygons
        .iter()
        .map(|p| {
            json!({
                "arcs": names(a, &p.arc_sides),
                "c": p.c_number,
                "boundary_component": p.boundary_component,
                "from_full_relation_cycle": matches!(p.source, PolygonSource::FullRelationCycle(_)),
            })
        })
        .collect();
    if json {
        let marked: Vec<usize> = model.boundary_components.iter().map(|b| b.marked_point_count()).collect();
        return Ok(to_json(&json!({
            "stats": stats,
            "marked_points_per_boundary": marked,
            "polygons": polygons,
        })));
    }
    let mut out = format!(
        "boundary components {}, marked points {}, arcs {}, polygons {}\nEuler characteristic {}, genus {}\n",
        stats.boundary_count,
        stats.marked_total,
        stats.arc_count,
        stats.polygon_count,
        stats.euler_characteristic,
        stats.genus
    );
    for (i, p) in model.polygons.iter().enumerate() {
        out += &format!(
            "polygon {i}: arcs {{{}}}, c = {}, boundary {}\n",
            names(a, &p.arc_sides).join(","),
            p.c_number,
            p.boundary_component
        );
    }
    Ok(out.trim_end().to_string())
}

fn gp(a: &GentlePresentation, json: bool) -> Outcome {
    let report = invariant(homdim::gorenstein_projectives(a))?;
    let modules: Vec<String> = report.nonprojectives.iter().map(|w| w.render_walk(a)).collect();
    if json {
        return Ok(to_json(&json!({
            "projectives": names(a, &report.projectives),
            "nonprojectives": modules,
            "count_by_formula": report.count_by_formula,
        })));
    }
    let mut out = format!(
        "{} nonprojective Gorenstein-projective modules (AG count {})\n",
        modules.len(),
        report.count_by_formula
    );
    for m in modules {
        out += &format!("  {m}\n");
    }
    Ok(out.trim_end().to_string())
}

fn resolve(a: &GentlePresentation, args: &ResolveArgs, json: bool) -> Outcome {
    let ladder: ResolutionLadder = match (&args.simple, &args.injective) {
        (Some(v), _) => homdim::resolution_of_simple(a, vertex(a, v)?, args.max_terms),
        (_, Some(v)) => homdim::resolution_of_injective(a, vertex(a, v)?, args.max_terms),
        _ => unreachable!("clap requires one of --simple and --injective"),
    };
    let degrees: Vec<Vec<String>> = ladder.degrees.iter().map(|d| names(a, d)).collect();
    if json {
        return Ok(to_json(&json!({
            "degrees": degrees,
            "terminates": ladder.terminates,
            "period": ladder.period,
            "pd": ladder.length(),
        })));
    }
    let mut out = String::new();
    for (k, d) in degrees.iter().enumerate() {
        let term: Vec<String> = d.iter().map(|v| format!("P({v})")).collect();
        out += &format!("{k}: {}\n", term.join(" ⊕ "));
    }
    if let Some(p) = ladder.period {
        out += &format!("degrees {}..{} repeat\n", p.start, p.start + p.length - 1);
    }
    out += &format!("pd = {}", ladder.length());
    Ok(out)
}

fn pd_table(a: &GentlePresentation, json: bool) -> Outcome {
    let rows = homdim::pd_table(a);
    if json {
        return Ok(to_json(&rows));
    }
    let width = rows.iter().map(|r| r.vertex.len()).max().unwrap_or(1).max(6);
    let mut out = format!("{:<width$}  pd S      pd I\n", "vertex");
    for r in &rows {
        out += &format!("{:<width$}  {:<8}  {}\n", r.vertex, r.simple.to_string(), r.injective);
    }
    Ok(out.trim_end().to_string())
}

fn check(a: &GentlePresentation, args: &CheckArgs, json: bool) -> Outcome {
    let cap = match args.cap {
        Cap::Auto => None,
        Cap::Fixed(n) => Some(n),
    };
    let report = invariant(check_equalities(a, args.field, cap))?;
    let text = if json {
        to_json(&report)
    } else {
        let mut out = format!("over F_{} with cap {}\n", report.field, report.cap);
        for c in &report.checks {
            let mark = if c.agree { "ok  " } else { "FAIL" };
            out += &format!("{mark} {}: {} | {}\n", c.name, c.combinatorial, c.oracle);
        }
        let failed = report.failures().count();
        out += &format!("{} checks, {failed} disagreements", report.checks.len());
        out
    };
    if report.all_agree() {
        Ok(text)
    } else {
        println!("{text}");
        Err(Failure::semantic("the combinatorial and linear computations disagree"))
    }
}

fn generate(args: &GenArgs) -> Outcome {
    let cfg = GeneratorConfig {
        vertex_count: args.vertices,
        target_arrow_count: args.arrows.unwrap_or_else(|| default_arrow_count(args.vertices)),
        seed: args.seed,
        allow_full_cycles: !args.no_full_cycles,
    };
    let a = invariant(gen_gentle(&cfg))?;
    let text = format!("# generated: vertices {} seed {}\n{}", args.vertices, args.seed, serialize(&a));
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::semantic(format!("{}: {e}", path.display())))?;
            Ok(format!("wrote {}", path.display()))
        }
        None => Ok(text.trim_end().to_string()),
    }
}

fn opposite(a: &GentlePresentation, json: bool) -> Outcome {
    let op = a.opposite();
    Ok(if json {
        to_json(&presentation_json(&op))
    } else {
        serialize(&op).trim_end().to_string()
    })
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => validate(&load(file)?, json),
        Command::Threads { file } => threads(&load(file)?, json),
        Command::Ag { file } => ag(&load(file)?, json),
        Command::Surface { file } => surface(&load(file)?, json),
        Command::Gldim { file } => Ok(dimension(homdim::gldim(&load(file)?), json)),
        Command::Injdim { file } => Ok(dimension(homdim::injdim(&load(file)?), json)),
        Command::Gp { file } => gp(&load(file)?, json),
        Command::Resolve(args) => resolve(&load(&args.file)?, args, json),
        Command::PdTable { file } => pd_table(&load(file)?, json),
        Command::Check(args) => check(&load(&args.file)?, args, json),
        Command::Gen(args) => generate(args),
        Command::Opposite { file } => opposite(&load(file)?, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
