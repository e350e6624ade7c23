//! `postulatum` — classify parallel-postulate behaviour in mixed geometry
//! models, map the square model's zones, and check the headline claims.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain precondition violated, 4 I/O failure.

mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use postulatum::sphere_plane::{
    classify_plane, classify_sphere, GreatCircle, ParseTripleError, PlanarLine, SpherePoint,
};
use postulatum::square_model::{
    classify, degree_of_negation, exact_zone_map, explore_finite, zone_measures_mc, Chord,
    ParseChordError,
};
use postulatum::{denial_verdict, run_verify, Point2, Rational, REGISTRY};

const DEFAULT_LINE: &str = "1,1:0,1/2";

#[derive(Parser)]
#[command(
    name = "postulatum",
    version,
    about = "Exact parallel-postulate classification in mixed geometry models"
)]
struct Cli {
    /// JSON file supplying defaults for any flag; explicit flags win.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the parallels through one point.
    Classify {
        /// square | sphere | euclidean-plane.
        #[arg(long)]
        model: Option<String>,
        /// The line: `x1,y1:x2,y2` (square), `x,y,z` (sphere normal),
        /// `a,b,c` (planar line ax+by+c=0).
        #[arg(long)]
        line: Option<String>,
        /// The point: `x,y` (square, plane) or `x,y,z` (sphere ray).
        #[arg(long)]
        point: Option<String>,
        /// Write the JSON here instead of standard output.
        #[arg(long, value_name = "PATH")]
        json_out: Option<PathBuf>,
    },
    /// Exact zone map or Monte Carlo zone measures of the square model.
    Zones {
        /// The square-model line, default CE.
        #[arg(long)]
        line: Option<String>,
        /// exact | mc.
        #[arg(long)]
        mode: Option<String>,
        /// Monte Carlo sample count.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Render the exact map to this SVG file.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        json_out: Option<PathBuf>,
    },
    /// Re-derive the headline claims; fails loudly if any breaks.
    Verify {
        /// y-coordinate of E = (0, e), strictly between A and D; default 1/2.
        #[arg(long)]
        e: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Emit the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Smarandachely-denied verdict for a registered model.
    Sdenied {
        /// square | sphere | euclidean-plane | sphere-plane.
        #[arg(long)]
        model: Option<String>,
        /// Sampling budget beyond the critical instances.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "PATH")]
        json_out: Option<PathBuf>,
    },
    /// Search the square model for FiniteMany (or CountablyInfinite)
    /// instances; reports findings or their absence.
    ExploreFinite {
        #[arg(long)]
        instances: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "PATH")]
        json_out: Option<PathBuf>,
    },
}

/// Config-file mirror of the flags; any subset may be present.
#[derive(Deserialize, Default)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct FileConfig {
    model: Option<String>,
    line: Option<String>,
    point: Option<String>,
    mode: Option<String>,
    samples: Option<u64>,
    seed: Option<u64>,
    budget: Option<u64>,
    instances: Option<u64>,
    e: Option<String>,
    json: Option<bool>,
    svg: Option<PathBuf>,
    json_out: Option<PathBuf>,
}

enum Failure {
    Verification,
    Usage(String),
    Domain(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification => "verification failed",
            Failure::Usage(m) | Failure::Domain(m) | Failure::Io(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let file = load_config(cli.config.as_deref())?;
    match cli.command {
        Command::Classify {
            model,
            line,
            point,
            json_out,
        } => cmd_classify(
            model.or(file.model).unwrap_or_else(|| "square".to_string()),
            line.or(file.line),
            point.or(file.point),
            json_out.or(file.json_out).as_deref(),
        ),
        Command::Zones {
            line,
            mode,
            samples,
            seed,
            svg,
            json_out,
        } => cmd_zones(
            line.or(file.line).unwrap_or_else(|| DEFAULT_LINE.to_string()),
            mode.or(file.mode).unwrap_or_else(|| "exact".to_string()),
            samples.or(file.samples).unwrap_or(100_000),
            resolve_seed(seed, file.seed)?,
            svg.or(file.svg).as_deref(),
            json_out.or(file.json_out).as_deref(),
        ),
        Command::Verify { e, seed, json } => cmd_verify(
            e.or(file.e).unwrap_or_else(|| "1/2".to_string()),
            resolve_seed(seed, file.seed)?,
            json || file.json.unwrap_or(false),
        ),
        Command::Sdenied {
            model,
            budget,
            seed,
            json_out,
        } => cmd_sdenied(
            model
                .or(file.model)
                .ok_or_else(|| Failure::Usage("--model is required for sdenied".to_string()))?,
            budget.or(file.budget).unwrap_or(100),
            resolve_seed(seed, file.seed)?,
            json_out.or(file.json_out).as_deref(),
        ),
        Command::ExploreFinite {
            instances,
            seed,
            json_out,
        } => cmd_explore_finite(
            instances.or(file.instances).unwrap_or(10_000),
            resolve_seed(seed, file.seed)?,
            json_out.or(file.json_out).as_deref(),
        ),
    }
}

fn load_config(path: Option<&Path>) -> Result<FileConfig, Failure> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("invalid config {}: {e}", path.display())))
}

fn resolve_seed(flag: Option<u64>, file: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag.or(file) {
        return Ok(seed);
    }
    match std::env::var("POSTULATUM_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("POSTULATUM_SEED must be an integer, got `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("output values serialize");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn required(value: Option<String>, what: &str) -> Result<String, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{what} is required")))
}

fn parse_chord(s: &str) -> Result<Chord, Failure> {
    Chord::from_str(s).map_err(|e| match e {
        ParseChordError::Invalid(domain) => Failure::Domain(domain.to_string()),
        grammar => Failure::Usage(grammar.to_string()),
    })
}

fn parse_point(s: &str) -> Result<Point2, Failure> {
    s.parse().map_err(|e: postulatum::exact_geom::ParsePointError| Failure::Usage(e.to_string()))
}

fn parse_triple<T>(s: &str) -> Result<T, Failure>
where
    T: FromStr<Err = ParseTripleError>,
{
    T::from_str(s).map_err(|e| match e {
        ParseTripleError::Zero(_) => Failure::Domain(e.to_string()),
        grammar => Failure::Usage(grammar.to_string()),
    })
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    s.parse()
        .map_err(|e: postulatum::rational::ParseRationalError| Failure::Usage(e.to_string()))
}

fn cmd_classify(
    model: String,
    line: Option<String>,
    point: Option<String>,
    json_out: Option<&Path>,
) -> Result<(), Failure> {
    match model.as_str() {
        "square" => {
            let l = parse_chord(&line.unwrap_or_else(|| DEFAULT_LINE.to_string()))?;
            let p = parse_point(&required(point, "--point")?)?;
            let c = classify(&p, &l).map_err(|e| Failure::Domain(e.to_string()))?;
            write_json(&json!({ "model": "square", "point": p, "line": l, "classification": c }), json_out)
        }
        "sphere" => {
            let l: GreatCircle = parse_triple(&required(line, "--line")?)?;
            let p: SpherePoint = parse_triple(&required(point, "--point")?)?;
            let kind = classify_sphere(&p, &l).map_err(|e| Failure::Domain(e.to_string()))?;
            write_json(
                &json!({ "model": "sphere", "point": p, "line": l, "kind": kind.label() }),
                json_out,
            )
        }
        "euclidean-plane" => {
            let l: PlanarLine = parse_triple(&required(line, "--line")?)?;
            let p = parse_point(&required(point, "--point")?)?;
            let (kind, parallel) =
                classify_plane(&p, &l).map_err(|e| Failure::Domain(e.to_string()))?;
            write_json(
                &json!({
                    "model": "euclidean-plane",
                    "point": p,
                    "line": l,
                    "kind": kind.label(),
                    "parallel": parallel,
                }),
                json_out,
            )
        }
        other => Err(Failure::Usage(format!(
            "model `{other}` does not support classify; use square, sphere, or euclidean-plane"
        ))),
    }
}

fn cmd_zones(
    line: String,
    mode: String,
    samples: u64,
    seed: u64,
    svg_out: Option<&Path>,
    json_out: Option<&Path>,
) -> Result<(), Failure> {
    let l = parse_chord(&line)?;
    match mode.as_str() {
        "exact" => {
            let map = exact_zone_map(&l);
            let degree = degree_of_negation(&l);
            if let Some(path) = svg_out {
                let doc = svg::render_zone_map(&map, &l);
                fs::write(path, doc)
                    .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
            }
            write_json(
                &json!({ "line": l, "zone_map": map, "degree_of_negation": degree }),
                json_out,
            )
        }
        "mc" => {
            if svg_out.is_some() {
                return Err(Failure::Usage(
                    "--svg renders the exact map; use --mode exact".to_string(),
                ));
            }
            let measures = zone_measures_mc(&l, samples, seed);
            write_json(&json!({ "line": l, "measures": measures }), json_out)
        }
        other => Err(Failure::Usage(format!(
            "unknown mode `{other}`; use exact or mc"
        ))),
    }
}

fn cmd_verify(e: String, seed: u64, as_json: bool) -> Result<(), Failure> {
    let e = parse_rational(&e)?;
    let report = run_verify(&e, seed).map_err(|err| Failure::Domain(err.to_string()))?;
    if as_json {
        write_json(&report, None)?;
    } else {
        println!("verifying against line {} (seed {})", report.line, report.seed);
        for claim in &report.claims {
            let status = if claim.pass { "PASS" } else { "FAIL" };
            println!("{status}  {}", claim.name);
            println!("      {}", claim.detail);
        }
        let passed = report.claims.iter().filter(|c| c.pass).count();
        println!("{passed}/{} claims hold", report.claims.len());
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_sdenied(
    model: String,
    budget: u64,
    seed: u64,
    json_out: Option<&Path>,
) -> Result<(), Failure> {
    let verdict = denial_verdict(&model, budget, seed).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown model `{model}`; registered models: {}",
            REGISTRY.join(", ")
        ))
    })?;
    write_json(&verdict, json_out)
}

fn cmd_explore_finite(
    instances: u64,
    seed: u64,
    json_out: Option<&Path>,
) -> Result<(), Failure> {
    if instances == 0 {
        return Err(Failure::Usage("--instances must be at least 1".to_string()));
    }
    let report = explore_finite(instances, seed);
    write_json(&report, json_out)
}
