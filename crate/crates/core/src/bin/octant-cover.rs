//! Command-line front end. Exit codes: 0 success, 1 violation found,
//! 2 usage or input error, 3 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use octant_cover::coloring::{
    closed_form_bound, color_set, threshold, ExhaustiveTwoColorer, Palette, DEFAULT_NODE_BUDGET,
};
use octant_cover::duality::{coverage_count, decompose_cover, decompose_triangle_cover, triangle_to_octant, CoverInstance};
use octant_cover::generate::{generate, Kind};
use octant_cover::geom::{OrderedPointSet, Point3};
use octant_cover::io;
use octant_cover::partition::build_partition;
use octant_cover::search::{sweep, Generator};
use octant_cover::svg;
use octant_cover::verify::{empirical_min_threshold, verify};
use octant_cover::wedgegraph::{build_wedge_graph, four_color, verify_weak};
use octant_cover::{Error, Result};

#[derive(Parser)]
#[command(name = "octant-cover", version, about = "Cover decomposition of octant translates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Chain,
    Antichain,
    Grid,
    Random,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Chain => Kind::Chain,
            KindArg::Antichain => Kind::Antichain,
            KindArg::Grid => Kind::Grid,
            KindArg::Random => Kind::Random,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
    Family,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Artifact {
    Partition,
    Coloring,
    Wedgegraph,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated point instance.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Color an instance with k colors; writes `id color` lines.
    Color {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Check that every wedge with at least m points shows d colors.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dump the important-point partition as `id -> owner|S` lines.
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decompose an octant cover into k classes; prints `index class`.
    Decompose {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decompose a cover by triangle homothets into k classes.
    Triangles {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the wedge-isolable pair graph and 4-color it.
    Wedgegraph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact minimal thresholds over generated instances.
    Search {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Largest instance size (exhaustive, family) or instance size (random).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        distinct: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Chain)]
        family: KindArg,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Directory receiving point and coloring files of the worst instances.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// List every instance, not only the worst ones.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit an SVG figure.
    Render {
        #[arg(long, value_enum)]
        artifact: Artifact,
        #[arg(long)]
        input: PathBuf,
        /// Coloring file (artifact `coloring`); computed when omitted.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the proven threshold m(k) and the closed-form bound.
    Threshold {
        #[arg(long)]
        k: u32,
    },
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn instance(path: &Path) -> Result<OrderedPointSet> {
    io::parse_instance(&read(path)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { kind, n, seed, output } => {
            if n == 0 {
                return Err(Error::Domain("n must be at least 1".into()));
            }
            let pts = generate(kind.into(), n, seed);
            write_out(output.as_deref(), &io::emit_points(&pts))?;
        }
        Command::Color { k, input, output, budget } => {
            let set = instance(&input)?;
            let base = ExhaustiveTwoColorer { node_budget: budget };
            let coloring = color_set(&set, &Palette::first(k)?, &base)?;
            write_out(output.as_deref(), &io::emit_coloring(&coloring))?;
        }
        Command::Verify { input, coloring, m, d, format } => {
            let set = instance(&input)?;
            let coloring = io::parse_coloring(&read(&coloring)?)?;
            let violations = verify(&set, &coloring, m, d)?;
            match format {
                Format::Text => {
                    for v in &violations {
                        println!(
                            "violation apex=({}, {}) time={} colors={} witness={:?}",
                            v.apex.a, v.apex.b, v.time, v.distinct_colors_found, v.witness
                        );
                    }
                    if violations.is_empty() {
                        println!("ok: every wedge with at least {m} points shows {d} colors");
                        println!("empirical minimum m: {}", empirical_min_threshold(&set, &coloring, d)?);
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({ "ok": violations.is_empty(), "m": m, "d": d, "violations": violations })
                ),
            }
            if !violations.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Partition { input, output } => {
            let set = instance(&input)?;
            write_out(output.as_deref(), &io::emit_partition(&set, &build_partition(&set)))?;
        }
        Command::Decompose { k, input, budget, format } => {
            let cover = io::parse_cover(&read(&input)?)?;
            let base = ExhaustiveTwoColorer { node_budget: budget };
            let dec = decompose_cover(&cover, k, &base)?;
            report_decomposition(&cover, &dec.class_of, k, format)?;
        }
        Command::Triangles { k, input, budget, format } => {
            let (triangles, targets) = io::parse_triangles(&read(&input)?)?;
            let base = ExhaustiveTwoColorer { node_budget: budget };
            let dec = decompose_triangle_cover(&triangles, &targets, k, &base)?;
            let octants = triangles.iter().map(triangle_to_octant).collect::<Result<Vec<_>>>()?;
            let lifted = targets
                .iter()
                .enumerate()
                .map(|(i, (u, v))| octant_cover::duality::lift(i, u, v))
                .collect();
            report_decomposition(&CoverInstance::new(octants, lifted)?, &dec.class_of, k, format)?;
        }
        Command::Wedgegraph { input, svg: svg_path, format } => {
            let set = instance(&input)?;
            let graph = build_wedge_graph(&set);
            let coloring = four_color(&graph)?;
            let weak = verify_weak(&set, &coloring)?;
            match format {
                Format::Text => {
                    println!("# {} vertices, {} edges", graph.n(), graph.edges.len());
                    for (p, q) in &graph.edges {
                        println!("edge {p} {q}");
                    }
                    for (id, c) in coloring.iter() {
                        println!("color {id} {c}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({ "graph": graph, "coloring": coloring, "weak_ok": weak.is_empty() })
                ),
            }
            if let Some(p) = svg_path {
                fs::write(p, svg::render_wedge_graph(&set, &graph, Some(&coloring)))?;
            }
            if !weak.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Search {
            mode,
            n,
            colors,
            distinct,
            seed,
            count,
            family,
            budget,
            witness_dir,
            all,
            format,
        } => {
            let generator = match mode {
                Mode::Exhaustive => Generator::Exhaustive { n_max: n },
                Mode::Random => Generator::Random { n, count, seed },
                Mode::Family => Generator::Family {
                    kind: family.into(),
                    n_max: n,
                    seed,
                },
            };
            let report = sweep(&generator, colors, distinct, budget)?;
            let mut files = std::collections::BTreeMap::new();
            if let Some(dir) = &witness_dir {
                fs::create_dir_all(dir)?;
                for r in report.results.iter().filter(|r| report.argmax.contains(&r.instance_id)) {
                    let pts = dir.join(format!("{}.pts", r.instance_id));
                    let points: Vec<Point3> = r.set.to_point3();
                    fs::write(&pts, io::emit_ranks(&points))?;
                    if let Some(w) = &r.witness {
                        fs::write(dir.join(format!("{}.col", r.instance_id)), io::emit_coloring(w))?;
                    }
                    files.insert(r.instance_id.clone(), pts.display().to_string());
                }
            }
            match format {
                Format::Text => {
                    println!("instance-id, min-threshold, witness-file");
                    for r in &report.results {
                        if all || report.argmax.contains(&r.instance_id) || r.threshold.is_none() {
                            println!(
                                "{}, {}, {}",
                                r.instance_id,
                                r.threshold.map_or("budget-exhausted".into(), |t| t.to_string()),
                                files.get(&r.instance_id).map_or("-", String::as_str)
                            );
                        }
                    }
                    println!(
                        "# {} instances, colors={}, distinct={}: max min-threshold {} (certified lower bound for the extremal value)",
                        report.instances, colors, distinct, report.max_threshold
                    );
                }
                Format::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
            }
            if !report.budget_exhausted.is_empty() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Render {
            artifact,
            input,
            coloring,
            k,
            output,
        } => {
            let set = instance(&input)?;
            let doc = match artifact {
                Artifact::Partition => svg::render_partition(&set, &build_partition(&set)),
                Artifact::Coloring => {
                    let c = match coloring {
                        Some(p) => io::parse_coloring(&read(&p)?)?,
                        None => color_set(&set, &Palette::first(k)?, &ExhaustiveTwoColorer::default())?,
                    };
                    svg::render_coloring(&set, &c)
                }
                Artifact::Wedgegraph => {
                    let g = build_wedge_graph(&set);
                    let c = four_color(&g)?;
                    svg::render_wedge_graph(&set, &g, Some(&c))
                }
            };
            write_out(output.as_deref(), &doc)?;
        }
        Command::Threshold { k } => {
            println!("m({k}) <= {}", threshold(k)?);
            if k >= 2 {
                println!("closed form: {}", closed_form_bound(k)?);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_decomposition(cover: &CoverInstance, class_of: &[u32], k: usize, format: Format) -> Result<()> {
    let dec = octant_cover::duality::Decomposition {
        class_of: class_of.to_vec(),
    };
    let min_cov = dec.empirical_min_coverage(cover, k);
    match format {
        Format::Text => {
            for (i, c) in class_of.iter().enumerate() {
                println!("{i} {c}");
            }
            println!("# every target covered at least {min_cov} times is covered by all {k} classes");
        }
        Format::Json => {
            let coverage = (0..cover.targets.len())
                .map(|t| coverage_count(cover, t))
                .collect::<Result<Vec<_>>>()?;
            println!(
                "{}",
                json!({ "class_of": class_of, "coverage": coverage, "empirical_min_coverage": min_cov })
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExhausted { .. } => 3,
                Error::Contract(_) => 1,
                _ => 2,
            })
        }
    }
}
