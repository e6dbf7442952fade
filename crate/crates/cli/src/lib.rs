//! Command-line front end. [`run`] is the whole program; `main` only wires
//! it to the process streams.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use billiard_core::tables::{self, summarize};
use billiard_core::unfold::{realize_with_tolerance, DEFAULT_TOLERANCE};
use billiard_core::veech::ClassificationRecord;
use billiard_core::{
    build_surface, build_table, classify_regular, classify_triangle, compare_constructions,
    cone_points, euler_genus, make_regular, profile, regular_ngon_index, Error, PolygonSpec,
    TriangleSpec, REGISTRY_VERSION, VERSION,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

/// Environment variable holding the default output format.
pub const FORMAT_ENV: &str = "BILLIARD_FORMAT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "billiard",
    about = "Unfold rational billiards into flat surfaces and classify their lattice property",
    disable_version_flag = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    format: Format,

    /// Relative closure tolerance for side lengths.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE, value_parser = positive_f64)]
    tolerance: f64,

    /// Print artifact and registry versions.
    #[arg(long)]
    version: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide the lattice property of a triangle or regular polygon.
    Classify(Subject),
    /// Singularity profile from the angle formula.
    Unfold {
        #[command(flatten)]
        subject: Subject,
        /// Differential order: 1 translation, 2 half-translation.
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
    /// Glue the translation surface explicitly and summarize it.
    Surface {
        #[command(flatten)]
        subject: Subject,
        /// Write the serialized surface to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Relate the translation and half-translation constructions.
    Compare(Subject),
    /// Index of the regular n-gon Veech group in D(2,n,inf).
    Index {
        #[arg(long)]
        regular: i64,
    },
    /// Survey table of all triangles up to a denominator.
    Table {
        #[arg(long)]
        max_denominator: i64,
    },
    /// Draw the unfolded copies of a triangle as SVG.
    ExportSvg {
        #[arg(long)]
        triangle: TriangleSpec,
        /// Side lengths; side i joins the vertices of angles i and i+1.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        sides: Vec<f64>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Subject {
    /// Triangle numerators `a,b,c` (angles aπ/d, bπ/d, cπ/d).
    #[arg(long)]
    triangle: Option<TriangleSpec>,
    /// Regular polygon with this many sides.
    #[arg(long)]
    regular: Option<i64>,
    /// Angles as comma-separated fractions of π.
    #[arg(long)]
    polygon: Option<PolygonSpec>,
}

impl Subject {
    fn polygon(&self) -> Result<PolygonSpec, Failure> {
        match (&self.triangle, self.regular, &self.polygon) {
            (Some(t), _, _) => Ok(t.to_polygon()),
            (_, Some(n), _) => Ok(make_regular(n)?),
            (_, _, Some(p)) => Ok(p.clone()),
            _ => Err(Failure::Usage(
                "one of --triangle, --regular, --polygon is required".into(),
            )),
        }
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

enum Failure {
    Core(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs the program on `argv` (including the program name). Data goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_INVALID
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    if cli.version {
        writeln!(
            out,
            "billiard {VERSION} (theorem registry {REGISTRY_VERSION})"
        )?;
        return Ok(());
    }
    let Some(command) = cli.command else {
        return Err(Failure::Usage(
            "a subcommand is required; see `billiard --help`".into(),
        ));
    };
    let format = cli.format;
    if format == Format::Csv && !matches!(command, Command::Table { .. }) {
        return Err(Failure::Usage(
            "csv output is only available for `table`".into(),
        ));
    }
    match command {
        Command::Classify(subject) => {
            let record = match (subject.triangle, subject.regular) {
                (Some(t), _) => ClassificationRecord::for_triangle(t, &classify_triangle(&t)?),
                (_, Some(n)) => ClassificationRecord::for_regular(n as u64, &classify_regular(n)?),
                _ => {
                    return Err(Failure::Usage(
                        "classify takes --triangle or --regular".into(),
                    ))
                }
            };
            emit(out, format, &record, || classification_text(&record))
        }
        Command::Unfold { subject, k } => {
            let p = subject.polygon()?;
            let prof = profile(&p, k)?;
            emit(out, format, &prof, || format!("{p}\n{prof}"))
        }
        Command::Surface {
            subject,
            emit: path,
        } => {
            let p = subject.polygon()?;
            let surface = build_surface(&p)?;
            let euler = euler_genus(&surface)?;
            let prof = cone_points(&surface)?;
            let summary = SurfaceSummary {
                polygon: p.to_string(),
                n: surface.n(),
                copy_count: surface.copies().len(),
                edge_pairs: surface.pairs().len(),
                vertex_classes: surface.vertex_classes().len(),
                euler_characteristic: euler.characteristic(),
                genus: euler.genus,
                orders: prof.stratum(),
            };
            if let Some(path) = path {
                let mut text = serde_json::to_string_pretty(&surface.to_record())?;
                text.push('\n');
                std::fs::write(path, text)?;
            }
            emit(out, format, &summary, || summary.text())
        }
        Command::Compare(subject) => {
            let p = subject.polygon()?;
            let rel = compare_constructions(&p)?;
            emit(out, format, &rel, || {
                format!(
                    "{p}: {} ({} branch points)\n",
                    rel.variant, rel.branch_point_count
                )
            })
        }
        Command::Index { regular } => {
            let index = regular_ngon_index(regular)?;
            emit(out, format, &index, || format!("{index}\n"))
        }
        Command::Table { max_denominator } => {
            let rows = build_table(max_denominator)?;
            match format {
                Format::Csv => tables::write_csv(&rows, &mut *out)?,
                Format::Json => writeln!(out, "{}", tables::to_json(&rows)?)?,
                Format::Text => {
                    for row in &rows {
                        let c = &row.classification;
                        let group = c.veech_group.map(|g| g.to_string()).unwrap_or_default();
                        writeln!(
                            out,
                            "{:<14} {:<20} genus {:<3} {:<11} {}",
                            row.triangle.to_string(),
                            row.shape.to_string(),
                            row.abelian_genus,
                            c.status.to_string(),
                            group
                        )?;
                    }
                    let s = summarize(&rows);
                    writeln!(
                        out,
                        "{} triangles: {} lattice, {} non-lattice, {} unknown ({} tori)",
                        s.rows, s.lattice, s.non_lattice, s.unknown, s.torus
                    )?;
                }
            }
            Ok(())
        }
        Command::ExportSvg {
            triangle,
            sides,
            out: path,
        } => {
            let p = triangle.to_polygon().with_side_lengths(sides)?;
            let layout = realize_with_tolerance(&p, cli.tolerance)?;
            std::fs::write(path, layout.to_svg())?;
            Ok(())
        }
    }
}

fn emit<T: Serialize, F: FnOnce() -> String>(
    out: &mut dyn Write,
    format: Format,
    value: &T,
    text: F,
) -> Result<(), Failure> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value)?)?,
        _ => write!(out, "{}", text())?,
    }
    Ok(())
}

fn or_dash<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_owned(), |v| v.to_string())
}

fn classification_text(r: &ClassificationRecord) -> String {
    let subject = match (r.triangle, r.regular) {
        (Some(t), _) => t.to_string(),
        (_, Some(n)) => format!("regular {n}-gon"),
        _ => String::new(),
    };
    let tags: Vec<String> = r.theorem_tags.iter().map(ToString::to_string).collect();
    format!(
        "{subject}: {}\n  veech group: {}\n  ambient group: {} (index {})\n  torus: {}\n  theorems: {}\n",
        r.status,
        or_dash(r.veech_group),
        or_dash(r.ambient_group),
        or_dash(r.index),
        r.torus,
        if tags.is_empty() { "-".to_owned() } else { tags.join(", ") },
    )
}

#[derive(Debug, Serialize)]
struct SurfaceSummary {
    polygon: String,
    #[serde(rename = "N")]
    n: u64,
    copy_count: usize,
    edge_pairs: usize,
    vertex_classes: usize,
    euler_characteristic: i64,
    genus: u64,
    /// Orders of the non-removable zeros.
    orders: Vec<i64>,
}

impl SurfaceSummary {
    fn text(&self) -> String {
        format!(
            "{}: {} copies (N = {}), {} edge pairs, {} vertices, χ = {}, genus {}, zeros {:?}\n",
            self.polygon,
            self.copy_count,
            self.n,
            self.edge_pairs,
            self.vertex_classes,
            self.euler_characteristic,
            self.genus,
            self.orders
        )
    }
}
