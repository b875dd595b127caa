use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quadorder_bench::report::{read_records_csv, write_adjusted_csv, write_records_csv};
use quadorder_bench::{
    adjusted_times, fit_families, fit_line, fit_plane, format_table, report_rows, run_experiment,
    run_matrix, MatrixConfig, RunConfig,
};
use quadorder_core::scene_io::{load_scene, save_scene};
use quadorder_core::scenes::{gen_nested_spheres, gen_packed_spheres, Scene};
use quadorder_core::tracker::{Method, Prefilter, TrackerConfig};
use quadorder_core::PrecisionSchedule;

#[derive(Parser)]
#[command(
    name = "quadorder",
    about = "Order line-quadric intersections exactly and benchmark the methods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Packed,
    Nested,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Approx,
    Extended,
    Resultant,
}

#[derive(Clone, Copy, ValueEnum)]
enum PrefilterArg {
    Working,
    Storage,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Line,
    Plane,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a scene and write it as a scene file.
    GenScene {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Nesting depth for nested scenes.
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Accepted for symmetry with `run`; scene generation is deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Track sampled lines through one scene with one method.
    Run {
        #[arg(long, conflicts_with = "kind")]
        scene: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value = "resultant")]
        method: MethodArg,
        #[arg(long, default_value_t = 1000)]
        lines: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Escalate when the root difference is below 2^threshold-exp.
        #[arg(long, default_value_t = -16, allow_hyphen_values = true)]
        threshold_exp: i32,
        /// Final-stage precision of the extended method, in multiples of single precision.
        #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
        precision_multiplier: u32,
        #[arg(long, value_enum, default_value = "working")]
        prefilter: PrefilterArg,
        #[arg(long)]
        out_csv: Option<PathBuf>,
    },
    /// Fit the timing model to a CSV written by `run`.
    Fit {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, value_enum, default_value = "line")]
        model: Model,
    },
    /// Run the desk-scale matrix and print the summary table.
    Report {
        #[arg(long, default_value_t = 1000)]
        nested_lines: usize,
        #[arg(long, default_value_t = 11000)]
        packed_lines: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Directory for per-run and adjusted-time CSVs.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn build_scene(kind: Kind, n: usize) -> quadorder_core::Result<Scene> {
    match kind {
        Kind::Packed => gen_packed_spheres(),
        Kind::Nested => gen_nested_spheres(n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type AnyResult = Result<(), Box<dyn std::error::Error>>;

fn run(cli: Cli) -> AnyResult {
    match cli.command {
        Command::GenScene {
            kind,
            n,
            seed: _,
            out,
        } => {
            let scene = build_scene(kind, n)?;
            save_scene(&scene, &out)?;
            println!(
                "wrote {} quadrics to {}",
                scene.quadrics.len(),
                out.display()
            );
        }
        Command::Run {
            scene,
            kind,
            n,
            method,
            lines,
            seed,
            threshold_exp,
            precision_multiplier,
            prefilter,
            out_csv,
        } => {
            let scene = match (scene, kind) {
                (Some(path), _) => load_scene(&path)?,
                (None, Some(kind)) => build_scene(kind, n)?,
                (None, None) => return Err("either --scene or --kind is required".into()),
            };
            let method = match method {
                MethodArg::Approx => Method::Approximate,
                MethodArg::Extended => Method::Extended(PrecisionSchedule::scaled(
                    24,
                    precision_multiplier as usize,
                )?),
                MethodArg::Resultant => Method::resultant(),
            };
            let mut tracker = TrackerConfig::new(method);
            tracker.threshold = 2f64.powi(threshold_exp);
            tracker.prefilter = match prefilter {
                PrefilterArg::Working => Prefilter::Working,
                PrefilterArg::Storage => Prefilter::Storage,
            };
            let exp = run_experiment(
                &scene,
                &RunConfig {
                    tracker,
                    lines,
                    seed,
                },
            )?;
            let t = &exp.tally;
            println!(
                "scene {} n={} method {}",
                scene.kind.name(),
                scene.n,
                method.name()
            );
            println!(
                "lines {}  error lines {}  rate {:.4}",
                t.lines,
                t.error_lines,
                t.error_rate()
            );
            println!(
                "comparisons {}  escalations {}  ties {}  fallbacks {}  phantoms {}",
                t.comparisons, t.escalations, t.ties, t.fallbacks, t.phantoms
            );
            if let Some(path) = out_csv {
                write_records_csv(BufWriter::new(File::create(&path)?), &exp.records)?;
                println!("wrote {}", path.display());
            }
        }
        Command::Fit { csv, model } => {
            let records = read_records_csv(File::open(&csv)?)?;
            let timed: Vec<_> = records
                .into_iter()
                .filter(|r| r.line_index >= quadorder_bench::WARMUP_LINES)
                .collect();
            let fit = match model {
                Model::Line => fit_line(&timed)?,
                Model::Plane => fit_plane(&timed)?,
            };
            if let Some(q) = fit.per_quadric {
                println!("ms/quadric {q:.6}");
            }
            println!("ms/comp    {:.6}", fit.per_comparison);
            println!("const ms   {:.6}", fit.constant);
            println!("residual   {:.6}", fit.residual);
            println!("samples    {}", fit.samples);
        }
        Command::Report {
            nested_lines,
            packed_lines,
            seed,
            out_dir,
        } => {
            let config = MatrixConfig {
                nested_lines,
                packed_lines,
                seed,
                ..MatrixConfig::default()
            };
            let runs = run_matrix(&config, |msg| eprintln!("running {msg}"))?;
            let fits = fit_families(&runs);
            print!("{}", format_table(&report_rows(&runs, &fits)));
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(&dir)?;
                for r in &runs {
                    let name = format!("{}-{}-{}.csv", r.kind.name(), r.n, r.method.name());
                    write_records_csv(
                        BufWriter::new(File::create(dir.join(name))?),
                        &r.experiment.records,
                    )?;
                }
                for f in &fits {
                    if let Ok(fit) = &f.fit {
                        let name = format!("adjusted-{}-{}.csv", f.family.name(), f.method.name());
                        let points = adjusted_times(&f.records, fit);
                        write_adjusted_csv(BufWriter::new(File::create(dir.join(name))?), &points)?;
                    }
                }
                eprintln!("wrote CSVs to {}", dir.display());
            }
        }
    }
    Ok(())
}
