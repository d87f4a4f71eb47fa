use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use minsurf::bounds::{self, BoundSet, TopologyProfile};
use minsurf::export;
use minsurf::intrinsic::mesh::build_mesh;
use minsurf::intrinsic::verify::distance_field;
use minsurf::suite::{load_surface, run_checks, CheckKind, RunConfig};
use minsurf::Error;

/// Numerical laboratory for branched minimal surfaces from Weierstrass data.
#[derive(Parser)]
#[command(name = "minsurf", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the topological bound set for a surface or an explicit profile.
    Bounds(BoundsArgs),
    /// Run verification checks and report pass/fail.
    Verify(VerifyArgs),
    /// Export a surface mesh.
    Export(ExportArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// Surface name (plane, catenoid, enneper, henneberg:<m>) or JSON path.
    #[arg(long, conflicts_with_all = ["index", "branching", "ends"])]
    surface: Option<String>,
    /// Morse index for an explicit profile.
    #[arg(long, requires = "ends")]
    index: Option<u32>,
    /// Total branching order for an explicit profile.
    #[arg(long, default_value_t = 0)]
    branching: u32,
    /// Number of ends for an explicit profile.
    #[arg(long, requires = "index")]
    ends: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Surface name (plane, catenoid, enneper, henneberg:<m>) or JSON path.
    #[arg(long)]
    surface: String,
    /// Checks to run.
    #[arg(long = "check", value_enum, required = true)]
    checks: Vec<CheckArg>,
    /// Intrinsic ball radii for the monotonicity check (comma separated,
    /// strictly increasing).
    #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5, 1.0])]
    radii: Vec<f64>,
    /// Extrinsic radius for the chord-arc check.
    #[arg(long = "R", default_value_t = 1.0)]
    big_r: f64,
    /// Radial resolution.
    #[arg(long = "nr", default_value_t = 128)]
    n_r: usize,
    /// Angular resolution.
    #[arg(long = "ntheta", default_value_t = 256)]
    n_theta: usize,
    /// Stencil order (1-3) for graph distances.
    #[arg(long, default_value_t = 2)]
    stencil: usize,
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Output file (stdout when omitted).
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Surface name (plane, catenoid, enneper, henneberg:<m>) or JSON path.
    #[arg(long)]
    surface: String,
    /// Radial resolution.
    #[arg(long = "nr", default_value_t = 128)]
    n_r: usize,
    /// Angular resolution.
    #[arg(long = "ntheta", default_value_t = 256)]
    n_theta: usize,
    /// Stencil order (1-3); affects the optional distance attribute.
    #[arg(long, default_value_t = 2)]
    stencil: usize,
    /// Attach the intrinsic distance from the base point as a PLY attribute.
    #[arg(long)]
    with_distance: bool,
    /// Mesh format.
    #[arg(long, value_enum, default_value_t = MeshFormat::Ply)]
    format: MeshFormat,
    /// Output file.
    #[arg(short = 'o', long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Monotonicity,
    #[value(name = "chord-arc")]
    ChordArc,
    Laplacian,
    Oracle,
    Symmetry,
    Curvature,
}

impl From<CheckArg> for CheckKind {
    fn from(c: CheckArg) -> CheckKind {
        match c {
            CheckArg::Monotonicity => CheckKind::Monotonicity,
            CheckArg::ChordArc => CheckKind::ChordArc,
            CheckArg::Laplacian => CheckKind::Laplacian,
            CheckArg::Oracle => CheckKind::Oracle,
            CheckArg::Symmetry => CheckKind::Symmetry,
            CheckArg::Curvature => CheckKind::Curvature,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeshFormat {
    Ply,
    Obj,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io { .. } | Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<ExitCode, Error> {
    let (profile, label): (TopologyProfile, String) = match (&args.surface, args.index, args.ends) {
        (Some(name), None, None) => {
            let surface = load_surface(name)?;
            (surface.data.topology_profile()?, name.clone())
        }
        (None, Some(index), Some(ends)) => {
            let set = BoundSet::new(index, args.branching, ends)?;
            println!("{}", serde_json::to_string_pretty(&set).expect("serializes"));
            return Ok(ExitCode::SUCCESS);
        }
        _ => {
            return Err(Error::Parse(
                "provide either --surface or both --index and --ends".into(),
            ))
        }
    };
    let index = bounds::index_lower_bound(&profile)?;
    let set = BoundSet::new(index, profile.branching_order, profile.ends.len() as u32)?;
    let out = serde_json::json!({
        "surface": label,
        "orientable": profile.orientable,
        "genus": profile.genus,
        "ends": profile.ends,
        "bounds": set,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let config = RunConfig {
        surface: args.surface,
        checks: args.checks.into_iter().map(CheckKind::from).collect(),
        radii: args.radii,
        big_r: args.big_r,
        n_r: args.n_r,
        n_theta: args.n_theta,
        stencil: args.stencil,
        ..RunConfig::default()
    };
    let report = run_checks(&config)?;
    let text = match args.format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
    };
    match &args.output {
        Some(path) => std::fs::write(path, text.as_bytes()).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })?,
        None => println!("{text}"),
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_export(args: ExportArgs) -> Result<ExitCode, Error> {
    let surface = load_surface(&args.surface)?;
    let mesh = build_mesh(&surface.data, args.n_r, args.n_theta, args.stencil)?;
    match args.format {
        MeshFormat::Ply => {
            let dist = if args.with_distance {
                let source = mesh.nearest_vertex(surface.data.base_point());
                Some(distance_field(&mesh, source))
            } else {
                None
            };
            export::write_ply(&args.output, &mesh, dist.as_ref())?;
        }
        MeshFormat::Obj => export::write_obj(&args.output, &mesh)?,
    }
    Ok(ExitCode::SUCCESS)
}
