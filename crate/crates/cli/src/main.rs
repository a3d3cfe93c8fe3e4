//! `hyptile` command-line front end.
//!
//! Exit codes: 0 success, 1 malformed request or I/O failure, 2 input outside
//! the domain (domain, contract, infeasible, data errors), 3 construction
//! failure (construction, geometry, closure, search, degenerate errors),
//! 4 a verification suite ran but some check failed.

use std::f64::consts::PI;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hyptile::construct::{
    build_chain, equilateral_tile, isosceles_triangle_tile, regular_polygon, rhombic_tile,
    solve_equilateral_even_gon,
};
use hyptile::hyp::{regular_angle_for_area, regular_metrics};
use hyptile::pi_expr::PiExpr;
use hyptile::polygon::PolygonDoc;
use hyptile::svg::{render, SvgStyle};
use hyptile::tiling::{
    angle_combinations, degree_audit, gs_condition, margulis_check, quadrilateral_gs_candidate, regular_tiles,
    scalene_witness, TilingGraph,
};
use hyptile::verify::{self, SUITES};
use hyptile::{Angle, Exec, GeomError, HPoint, Length, Polygon};

#[derive(Parser)]
#[command(name = "hyptile", version, about = "Hyperbolic polygon tiles: construction, verification, rendering")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polygon and write it as JSON.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run a verification suite and write its report.
    Verify {
        /// One of the suite names, or `all`.
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Report file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run batches on one thread.
        #[arg(long)]
        sequential: bool,
        /// Omit the runtime field so reports compare byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Combinatorial audits.
    Audit {
        #[command(subcommand)]
        kind: AuditKind,
    },
    /// Render a polygon JSON file in the Poincaré disk.
    Render {
        /// Polygon JSON file.
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct OutArgs {
    /// Polygon JSON file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write a Poincaré-disk SVG.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Regular n-gon from its interior angle or its area.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_num, conflicts_with = "area", required_unless_present = "area")]
        angle: Option<f64>,
        #[arg(long, value_parser = parse_num)]
        area: Option<f64>,
    },
    /// Isosceles triangle tile of the given area.
    IsoTriangle {
        #[arg(long, value_parser = parse_num)]
        area: f64,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Rhombic tile of the given area.
    Rhombus {
        #[arg(long, value_parser = parse_num)]
        area: f64,
    },
    /// Centrally symmetric equilateral 2n-gon from n half-angles.
    EquilateralEven {
        #[arg(long, value_delimiter = ',', value_parser = parse_num, required = true)]
        angles: Vec<f64>,
    },
    /// Equilateral even n-gon tile of the given area.
    EquilateralTile {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_num)]
        area: f64,
    },
    /// Open equilateral chain with the given internal angles.
    Chain {
        #[arg(long, value_parser = parse_num)]
        side: f64,
        #[arg(long, value_delimiter = ',', value_parser = parse_num, required = true)]
        angles: Vec<f64>,
    },
}

#[derive(Subcommand)]
enum AuditKind {
    /// Vertex-degree audit of a tiling graph JSON file.
    Graph {
        input: PathBuf,
        /// Defaults to the value implied by χ and the face count.
        #[arg(long)]
        k: Option<i64>,
    },
    /// Integer combinations of angles summing to 2π, with the tiling predicates.
    Combos {
        #[arg(long, value_delimiter = ',', value_parser = parse_num, required = true)]
        angles: Vec<f64>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Scalene triangle whose angles satisfy only Σ kᵢθᵢ = 2π.
    Scalene {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        k: Vec<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn parse_num(s: &str) -> Result<f64, String> {
    s.parse::<PiExpr>().map(PiExpr::value).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Geom(GeomError),
    ChecksFailed,
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure::Geom(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Geom(e) => match e {
                GeomError::Domain(_) | GeomError::Contract(_) | GeomError::Infeasible(_) | GeomError::Data(_) => 2,
                GeomError::Construction(_)
                | GeomError::Geometry(_)
                | GeomError::Closure { .. }
                | GeomError::SearchExhausted(_)
                | GeomError::Degenerate(_) => 3,
            },
            Failure::ChecksFailed => 4,
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn write_out(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Usage(format!("stdout: {e}"))),
                _ => Ok(()),
            }
        }
    }
}

fn read_in(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn angles(v: &[f64]) -> Vec<Angle> {
    v.iter().map(|&a| Angle(a)).collect()
}

fn polygon_doc(p: &Polygon, kind: &str) -> PolygonDoc {
    PolygonDoc::from_polygon(p)
        .with("construction", kind)
        .with("area", p.area().ok())
        .with("perimeter", p.perimeter())
        .with("side_lengths", p.side_lengths())
        .with("interior_angles", p.interior_angles())
}

fn construct(kind: ConstructKind, out: OutArgs) -> CliResult<()> {
    let (doc, points, closed) = match kind {
        ConstructKind::Regular { n, angle, area } => {
            let theta = match (angle, area) {
                (Some(a), _) => Angle(a),
                (None, Some(a)) => regular_angle_for_area(n, a)?,
                (None, None) => return Err(Failure::Usage("give --angle or --area".into())),
            };
            let p = regular_polygon(n, theta)?;
            let doc = polygon_doc(&p, "regular").with("metrics", regular_metrics(n, theta)?);
            (doc, p.vertices().to_vec(), true)
        }
        ConstructKind::IsoTriangle { area, k } => {
            let (p, params) = isosceles_triangle_tile(area, k)?;
            (polygon_doc(&p, "iso-triangle").with("params", params), p.vertices().to_vec(), true)
        }
        ConstructKind::Rhombus { area } => {
            let (p, params) = rhombic_tile(area)?;
            (polygon_doc(&p, "rhombus").with("params", params), p.vertices().to_vec(), true)
        }
        ConstructKind::EquilateralEven { angles: a } => {
            let s = solve_equilateral_even_gon(&angles(&a))?;
            let doc = polygon_doc(&s.polygon, "equilateral-even")
                .with("side", s.side.0)
                .with("angle_residual", s.angle_residual)
                .with("roots", s.roots);
            (doc, s.polygon.vertices().to_vec(), true)
        }
        ConstructKind::EquilateralTile { n, area } => {
            let (p, params) = equilateral_tile(n, area)?;
            let doc = polygon_doc(&p, "equilateral-tile")
                .with("params", params)
                .with("sigma", params.sigma)
                .with("m", params.m)
                .with("theta1_over_pi", params.theta1.0 / PI)
                .with("theta_over_pi", params.theta.0 / PI);
            (doc, p.vertices().to_vec(), true)
        }
        ConstructKind::Chain { side, angles: a } => {
            let c = build_chain(Length(side), &angles(&a))?;
            let mut doc = PolygonDoc {
                model: "hyperboloid".into(),
                vertices: c.vertices().iter().map(HPoint::coords).collect(),
                extra: Default::default(),
            };
            doc = doc
                .with("construction", "chain")
                .with("open", true)
                .with("side", side)
                .with("internal_angles", &a)
                .with("endpoint_angle_sum", c.endpoint_angle_sum())
                .with("embedded", c.is_embedded());
            (doc, c.vertices().to_vec(), false)
        }
    };
    if let Some(svg) = &out.svg {
        write_out(Some(svg), &render(&[&points], closed, &SvgStyle::default()))?;
    }
    write_out(out.out.as_ref(), &doc.to_json())
}

fn run_verify(suite: &str, seed: u64, out: Option<PathBuf>, sequential: bool, no_timing: bool) -> CliResult<()> {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Failure::Usage(format!(
            "unknown suite '{suite}' (expected one of {}, all)",
            SUITES.join(", ")
        )));
    }
    let exec = if sequential { Exec::Sequential } else { Exec::default() };
    let start = Instant::now();
    let mut report = verify::run(suite, seed, exec)?;
    if !no_timing {
        report.runtime_seconds = Some(start.elapsed().as_secs_f64());
    }
    write_out(out.as_ref(), &report.to_json())?;
    for s in &report.suites {
        eprintln!("{}: {}", s.suite, if s.passed { "pass" } else { "FAIL" });
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn audit(kind: AuditKind) -> CliResult<()> {
    let v: Value = match kind {
        AuditKind::Graph { input, k } => {
            let g = TilingGraph::from_json(&read_in(&input)?)?;
            let k = match k {
                Some(k) => k,
                None => {
                    let implied = g.implied_k();
                    if (implied - implied.round()).abs() > 1e-9 {
                        return Err(GeomError::Domain(format!("implied k = {implied} is not an integer; pass --k")).into());
                    }
                    implied.round() as i64
                }
            };
            serde_json::to_value(degree_audit(&g, k)?).expect("audit serializes")
        }
        AuditKind::Combos { angles: a, tol } => {
            let sols = angle_combinations(&angles(&a), tol)?;
            json!({
                "angles": a,
                "tolerance": tol,
                "solutions": sols,
                "gs_condition": gs_condition(&sols),
                "quadrilateral_candidate_conjectural": (a.len() == 4).then(|| quadrilateral_gs_candidate(&sols)),
                "margulis": margulis_check(&angles(&a)),
                "regular_tiles": a.iter().map(|&t| regular_tiles(Angle(t))).collect::<Vec<_>>(),
            })
        }
        AuditKind::Scalene { k, seed } => {
            let k: [u32; 3] = k
                .try_into()
                .map_err(|_| Failure::Usage("--k takes exactly three coefficients".into()))?;
            let t = scalene_witness(k, seed)?;
            json!({ "k": k, "seed": seed, "angles": t.map(|a| a.0) })
        }
    };
    write_out(None, &serde_json::to_string_pretty(&v).expect("json"))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Construct { kind, out } => construct(kind, out),
        Command::Verify {
            suite,
            seed,
            out,
            sequential,
            no_timing,
        } => run_verify(&suite, seed, out, sequential, no_timing),
        Command::Audit { kind } => audit(kind),
        Command::Render { input, out } => {
            let doc = PolygonDoc::from_json(&read_in(&input)?)?;
            let closed = doc.extra.get("open") != Some(&Value::Bool(true));
            let pts = if closed {
                doc.to_polygon()?.vertices().to_vec()
            } else {
                doc.vertices
                    .iter()
                    .map(|c| HPoint::new(c[0], c[1], c[2]))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| GeomError::Data(e.to_string()))?
            };
            write_out(Some(&out), &render(&[&pts], closed, &SvgStyle::default()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Geom(e) => eprintln!("error: {e}"),
                Failure::ChecksFailed => eprintln!("verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
