//! Command-line front end for the hvswitch library.
//!
//! Exit codes: 0 for hv-convex / success, 1 for a valid but not hv-convex
//! input, 2 for invalid input, 3 for an internal disagreement between the
//! two hv-convexity conditions (which would mean a library bug).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hvswitch::characterize::{even_run_witness, window_certificate, window_size};
use hvswitch::enumerate::{census_to_csv, census_with_jobs, SearchSpace};
use hvswitch::generate::{gen_curl_33, gen_curl_35, gen_window, CurlStyle};
use hvswitch::lattice::LatticeSet;
use hvswitch::spiral::{SpiralClass, SquaredSpiral};
use hvswitch::switching::SwitchingPair;

mod render;

use render::{render_ascii, render_svg, Drawable, RenderSpec};

const EXIT_NOT_CONVEX: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hvswitch",
    about = "Geometry of hv-convex switching components: validation, generators, census, rendering",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a file and report classification, hv-sequence, and the
    /// hv-convexity verdict from both conditions.
    Check(CheckArgs),
    /// Generate a spiral from one of the constructive families.
    Gen(GenArgs),
    /// Enumerate a search space and write the hv-convexity census as CSV.
    Census(CensusArgs),
    /// Render a spiral or switching as ASCII art or SVG.
    Render(RenderArgs),
    /// Print the horizontal and vertical projections of a lattice set.
    Project(ProjectArgs),
    /// Apply a switching to a host set and write the dual set.
    Dual(DualArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileKind {
    Spiral,
    Switching,
}

#[derive(Args)]
struct CheckArgs {
    /// Input file (JSON; switching files may also be `i j c` text).
    input: PathBuf,
    #[arg(long, value_enum, default_value = "spiral")]
    kind: FileKind,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Window of size n (4n vertices, nested rectangles).
    Window {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curl with hv-sequence (3,3)_h.
    Curl33 {
        #[arg(long)]
        h: u32,
        #[arg(long, value_enum, default_value = "consecutive")]
        style: StyleArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 16-vertex curl with hv-sequence (3,5)_2.
    Curl35 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Consecutive,
    LConnected,
}

impl From<StyleArg> for CurlStyle {
    fn from(s: StyleArg) -> CurlStyle {
        match s {
            StyleArg::Consecutive => CurlStyle::Consecutive,
            StyleArg::LConnected => CurlStyle::LConnected,
        }
    }
}

#[derive(Args)]
struct CensusArgs {
    /// Grid side m: spirals fit an m x m box up to translation.
    #[arg(long)]
    grid: u32,
    /// Largest allowed vertex count (even).
    #[arg(long)]
    max_vertices: u32,
    #[arg(long, default_value = "1")]
    jobs: usize,
    /// Census CSV path; the run manifest lands next to it.
    #[arg(long)]
    out: PathBuf,
    /// Raise the cost guard to the long-running bound.
    #[arg(long)]
    long_running: bool,
    /// Ignore the cost guard entirely.
    #[arg(long)]
    override_cost_guard: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Spiral or switching file; the kind is auto-detected.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ascii")]
    format: FormatArg,
    #[arg(long, default_value = "2")]
    cell_size: u32,
    /// Label vertices and shade free regions.
    #[arg(long)]
    labels: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

#[derive(Args)]
struct ProjectArgs {
    /// Lattice-set file: JSON `{"points": ...}` or `i j` text lines.
    input: PathBuf,
}

#[derive(Args)]
struct DualArgs {
    /// Host lattice-set file.
    #[arg(long)]
    set: PathBuf,
    /// Switching file whose s0 the host contains.
    #[arg(long)]
    switching: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Census(args) => cmd_census(args),
        Command::Render(args) => cmd_render(args),
        Command::Project(args) => cmd_project(args),
        Command::Dual(args) => cmd_dual(args),
    }
    .unwrap_or_else(|fail| {
        eprintln!("error: {}", fail.message);
        ExitCode::from(fail.code)
    })
}

struct Fail {
    code: u8,
    message: String,
}

fn invalid(message: impl Into<String>) -> Fail {
    Fail {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

fn read_file(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), Fail> {
    match out {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| invalid(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_spiral(path: &Path) -> Result<SquaredSpiral, Fail> {
    let text = read_file(path)?;
    SquaredSpiral::from_json(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_switching(path: &Path) -> Result<SwitchingPair, Fail> {
    let text = read_file(path)?;
    let trimmed = text.trim_start();
    let parsed = if trimmed.starts_with('{') {
        SwitchingPair::from_json(&text)
    } else {
        SwitchingPair::from_text(&text)
    };
    parsed.map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_lattice_set(path: &Path) -> Result<LatticeSet, Fail> {
    let text = read_file(path)?;
    if text.trim_start().starts_with('{') {
        LatticeSet::from_json(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
    } else {
        LatticeSet::from_text(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
    }
}

fn verdict(pair: &SwitchingPair) -> Result<bool, Fail> {
    let cover = pair.is_hv_convex_by_cover();
    let pairs = pair.is_hv_convex_by_pairs();
    println!("hv-convex (cover): {}", yes_no(cover));
    println!("hv-convex (pairs): {}", yes_no(pairs));
    if cover != pairs {
        return Err(Fail {
            code: EXIT_INTERNAL,
            message: "internal error: the two hv-convexity conditions disagree".into(),
        });
    }
    Ok(cover)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, Fail> {
    let convex = match args.kind {
        FileKind::Spiral => {
            let spiral = load_spiral(&args.input)?;
            println!("kind: spiral");
            println!("vertices: {}", spiral.len());
            let class = spiral.classify();
            println!(
                "classification: {}",
                match class {
                    SpiralClass::Window => "window",
                    SpiralClass::Curl => "curl",
                }
            );
            println!("hv-sequence: {}", spiral.hv_sequence().to_string_explicit());
            let pair = spiral.to_switching();
            let convex = verdict(&pair)?;
            match class {
                SpiralClass::Window => match window_certificate(&spiral).unwrap() {
                    Some(cert) => {
                        let r = cert.rect;
                        println!(
                            "certificate: rect [{}, {}] x [{}, {}], witness ({}, {}), size {}",
                            r.min_i,
                            r.max_i,
                            r.min_j,
                            r.max_j,
                            cert.witness.i.as_f64(),
                            cert.witness.j.as_f64(),
                            window_size(&cert, &spiral)
                        );
                    }
                    None => println!("certificate: none"),
                },
                SpiralClass::Curl => {
                    if let Some(w) = even_run_witness(&spiral).unwrap() {
                        println!(
                            "even-run witness: v=({}, {}) w=({}, {}) with {} vertices between",
                            w.v.i,
                            w.v.j,
                            w.w.i,
                            w.w.j,
                            w.between.len()
                        );
                    }
                }
            }
            convex
        }
        FileKind::Switching => {
            let pair = load_switching(&args.input)?;
            println!("kind: switching");
            println!("component size: {}", pair.component_len());
            verdict(&pair)?
        }
    };
    println!(
        "verdict: {}",
        if convex { "hv-convex" } else { "not hv-convex" }
    );
    Ok(if convex {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NOT_CONVEX)
    })
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Fail> {
    let (spiral, out) = match args.family {
        GenFamily::Window { n, out } => (gen_window(n).map_err(|e| invalid(e.to_string()))?, out),
        GenFamily::Curl33 { h, style, out } => (
            gen_curl_33(h, style.into()).map_err(|e| invalid(e.to_string()))?,
            out,
        ),
        GenFamily::Curl35 { out } => (gen_curl_35(), out),
    };
    eprintln!("hv-sequence: {}", spiral.hv_sequence().to_string_explicit());
    let mut json = spiral.to_json();
    json.push('\n');
    write_output(out.as_ref(), &json)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(args: CensusArgs) -> Result<ExitCode, Fail> {
    let space =
        SearchSpace::new(args.grid, args.max_vertices).map_err(|e| invalid(e.to_string()))?;
    let allowed = args.override_cost_guard
        || (args.long_running && space.within_long_running_guard())
        || space.within_interactive_guard();
    if !allowed {
        return Err(invalid(format!(
            "space (grid {}, max vertices {}) exceeds the cost guard; \
             pass --long-running or --override-cost-guard",
            args.grid, args.max_vertices
        )));
    }
    let entries = census_with_jobs(space, args.jobs);
    let csv = census_to_csv(&entries);
    std::fs::write(&args.out, &csv).map_err(|e| invalid(format!("{}: {e}", args.out.display())))?;
    let manifest = serde_json::json!({
        "grid_side": args.grid,
        "max_vertices": args.max_vertices,
        "jobs": args.jobs,
        "rows": entries.len(),
        "library_version": env!("CARGO_PKG_VERSION"),
    });
    let manifest_path = args.out.with_extension("manifest.json");
    std::fs::write(&manifest_path, format!("{manifest:#}\n"))
        .map_err(|e| invalid(format!("{}: {e}", manifest_path.display())))?;
    eprintln!(
        "census: {} rows -> {} (manifest {})",
        entries.len(),
        args.out.display(),
        manifest_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(args: RenderArgs) -> Result<ExitCode, Fail> {
    let text = read_file(&args.input)?;
    // A spiral file has "vertices"; a switching file has "s0"/"s1".
    let drawable = if let Ok(s) = SquaredSpiral::from_json(&text) {
        Drawable::Spiral(s)
    } else {
        match SwitchingPair::from_json(&text) {
            Ok(p) => Drawable::Switching(p),
            Err(_) => {
                return Err(invalid(format!(
                    "{}: neither a spiral nor a switching file",
                    args.input.display()
                )))
            }
        }
    };
    let spec = RenderSpec {
        cell_size: args.cell_size.max(1),
        labels: args.labels,
    };
    let rendered = match args.format {
        FormatArg::Ascii => render_ascii(&drawable, spec),
        FormatArg::Svg => render_svg(&drawable, spec),
    };
    write_output(args.out.as_ref(), &rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_project(args: ProjectArgs) -> Result<ExitCode, Fail> {
    let set = load_lattice_set(&args.input)?;
    let h = set
        .horizontal_projection()
        .map_err(|e| invalid(e.to_string()))?;
    let v = set
        .vertical_projection()
        .map_err(|e| invalid(e.to_string()))?;
    println!("points: {}", set.len());
    println!("H (rows, bottom-up): {h}");
    println!("V (columns, left-right): {v}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_dual(args: DualArgs) -> Result<ExitCode, Fail> {
    let host = load_lattice_set(&args.set)?;
    let pair = load_switching(&args.switching)?;
    let dual = pair.dual_set(&host).map_err(|e| invalid(e.to_string()))?;
    let mut json = dual.to_json();
    json.push('\n');
    write_output(args.out.as_ref(), &json)?;
    Ok(ExitCode::SUCCESS)
}
