//! Command-line surface of the positroid toolkit.  Data travels as JSON on
//! stdin/stdout (or `--input`/`--output` files); diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 a `--assert`ed predicate is false, 2 input or
//! validation error, 3 size-limit refusal.

use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use positroids::cells::{boundary_codimk, dimension, dualize, intersection_mpos, poset_dot};
use positroids::enumeration::{
    mat_maximal, mpos_with_jobs, pos_enumerate_with_jobs, positroid_order,
};
use positroids::graph::dot_graph;
use positroids::json::{
    BasesJson, BoundaryJson, CellRecord, CheckReport, DepSetJson, LeDiagramJson, NecklaceJson,
    OrderReport, WitnessJson,
};
use positroids::le::{
    bases_from_le, diagram_from_necklace, is_le, necklace_from_bases, render_ascii, LeDiagram,
};
use positroids::oracle::{all_depsets, census, CensusKind};
use positroids::sets::DepSet;
use positroids::witness::{realize_nice, Rational, WitnessMatrix};
use positroids::{BasesSet, Error};

#[derive(Parser)]
#[command(name = "positroids", version, about = "Rank-2 positroid toolkit")]
struct Cli {
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report matroid/positroid status, loops, components and cell dimension
    Check {
        /// Dependency-set JSON file (stdin when omitted)
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Exit with status 1 unless the property holds
        #[arg(long, value_enum)]
        assert: Option<AssertKind>,
    },
    /// Convert between Le diagrams and bases families
    Le {
        #[command(subcommand)]
        direction: LeDirection,
    },
    /// Grassmann necklace of a bases family
    Necklace {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Maximal matroids whose dependent sets contain the input
    Mat {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// All positroids the worklist reaches from a matroid
    Pos {
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Expand worklist generations on this many threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Maximal positroids whose dependent sets contain the input
    Mpos {
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Codimension-k boundary cells of a positroid cell
    Boundary {
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        codim: usize,
    },
    /// Maximal positroids in the common boundary of several cells
    Intersect {
        /// Dependency-set JSON files
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Cell dimension of a nice dependency set
    Dim {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Exact rational witness matrix for a nice dependency set
    Realize {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Relabeling that makes a matroid nice
    Order {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Bases of the dual matroid
    Dual {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Enumerate all matroid or positroid dependency sets on [n]
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: CensusArg,
        /// Cross-validate against the exhaustive subset sweep (n <= 6)
        #[arg(long)]
        slow: bool,
    },
    /// Render a graph, Le diagram or boundary poset
    Render {
        #[arg(long, value_enum)]
        target: RenderTarget,
        #[arg(long, value_enum)]
        format: RenderFormat,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LeDirection {
    /// Le diagram JSON -> bases family
    ToBases {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Bases family -> Le diagram via the necklace (may violate the Le
    /// condition when the input is not a positroid)
    FromBases {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AssertKind {
    Matroid,
    Positroid,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusArg {
    Matroids,
    Nice,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderTarget {
    Graph,
    Lediagram,
    Poset,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Dot,
}

#[derive(Serialize)]
struct DimReport {
    dim: usize,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::SizeLimit { .. }) => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn read_text(path: &Option<PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn read_depset(path: &Option<PathBuf>) -> anyhow::Result<DepSet> {
    let text = read_text(path)?;
    let json: DepSetJson = serde_json::from_str(&text).context("parsing dependency-set JSON")?;
    Ok(DepSet::try_from(json)?)
}

fn read_bases(path: &Option<PathBuf>) -> anyhow::Result<BasesSet> {
    let text = read_text(path)?;
    let json: BasesJson = serde_json::from_str(&text).context("parsing bases JSON")?;
    Ok(BasesSet::try_from(json)?)
}

fn read_diagram(path: &Option<PathBuf>) -> anyhow::Result<LeDiagram> {
    let text = read_text(path)?;
    let json: LeDiagramJson = serde_json::from_str(&text).context("parsing Le-diagram JSON")?;
    Ok(LeDiagram::try_from(json)?)
}

fn emit(output: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(output: &Option<PathBuf>, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    emit(output, &text)
}

fn records(sets: &[DepSet]) -> Vec<CellRecord> {
    sets.iter().map(CellRecord::from).collect()
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let out = &cli.output;
    match cli.command {
        Command::Check { input, assert } => {
            let d = read_depset(&input)?;
            let report = CheckReport::from(&d);
            emit_json(out, &report)?;
            let ok = match assert {
                None => true,
                Some(AssertKind::Matroid) => report.is_matroid,
                Some(AssertKind::Positroid) => report.is_positroid,
            };
            Ok(if ok { 0 } else { 1 })
        }
        Command::Le { direction } => {
            match direction {
                LeDirection::ToBases { input } => {
                    let diagram = read_diagram(&input)?;
                    let bases = bases_from_le(&diagram)?;
                    emit_json(out, &BasesJson::from(&bases))?;
                }
                LeDirection::FromBases { input } => {
                    let bases = read_bases(&input)?;
                    let diagram = diagram_from_necklace(&necklace_from_bases(&bases)?)?;
                    if !is_le(&diagram) {
                        eprintln!(
                            "note: result violates the Le condition; the input is not a positroid"
                        );
                    } else if bases_from_le(&diagram)? != bases {
                        eprintln!("note: diagram does not recover the input bases; the input is not a positroid");
                    }
                    emit_json(out, &LeDiagramJson::from(&diagram))?;
                }
            }
            Ok(0)
        }
        Command::Necklace { input } => {
            let bases = read_bases(&input)?;
            let neck = necklace_from_bases(&bases)?;
            emit_json(out, &NecklaceJson::from(&neck))?;
            Ok(0)
        }
        Command::Mat { input } => {
            let d = read_depset(&input)?;
            emit_json(out, &records(&mat_maximal(&d)?))?;
            Ok(0)
        }
        Command::Pos { input, jobs } => {
            let d = read_depset(&input)?;
            emit_json(out, &records(&pos_enumerate_with_jobs(&d, jobs.max(1))?))?;
            Ok(0)
        }
        Command::Mpos { input, jobs } => {
            let d = read_depset(&input)?;
            emit_json(out, &records(&mpos_with_jobs(&d, jobs.max(1))?))?;
            Ok(0)
        }
        Command::Boundary { input, codim } => {
            if codim == 0 {
                bail!("--codim must be at least 1");
            }
            let d = read_depset(&input)?;
            let boundary = boundary_codimk(&d, codim)?;
            emit_json(out, &BoundaryJson::new(&boundary, codim))?;
            Ok(0)
        }
        Command::Intersect { files } => {
            let mut cells = Vec::with_capacity(files.len());
            for f in &files {
                cells.push(read_depset(&Some(f.clone()))?);
            }
            emit_json(out, &records(&intersection_mpos(&cells)?))?;
            Ok(0)
        }
        Command::Dim { input } => {
            let d = read_depset(&input)?;
            emit_json(
                out,
                &DimReport {
                    dim: dimension(&d)?,
                },
            )?;
            Ok(0)
        }
        Command::Realize { input } => {
            let d = read_depset(&input)?;
            let witness: WitnessMatrix<Rational> = realize_nice(&d)?;
            emit_json(out, &WitnessJson::from(&witness))?;
            Ok(0)
        }
        Command::Order { input } => {
            let d = read_depset(&input)?;
            let relabeling = positroid_order(&d)?;
            let relabeled = d.relabel(&relabeling);
            emit_json(
                out,
                &OrderReport {
                    perm: relabeling.image().to_vec(),
                    relabeled: DepSetJson::from(&relabeled),
                },
            )?;
            Ok(0)
        }
        Command::Dual { input } => {
            let bases = read_bases(&input)?;
            emit_json(out, &BasesJson::from(&dualize(&bases)?))?;
            Ok(0)
        }
        Command::Census { n, kind, slow } => {
            let kind = match kind {
                CensusArg::Matroids => CensusKind::Matroids,
                CensusArg::Nice => CensusKind::Nice,
            };
            let result = census(n, kind)?;
            if slow {
                let mut swept: Vec<DepSet> = all_depsets(n)?
                    .into_iter()
                    .filter(|d| match kind {
                        CensusKind::Matroids => positroids::is_matroid(d),
                        CensusKind::Nice => positroids::is_nice(d),
                    })
                    .collect();
                swept.sort_unstable();
                if swept != result {
                    bail!("structural census disagrees with the exhaustive sweep");
                }
                eprintln!("note: exhaustive sweep confirmed {} sets", result.len());
            }
            let json: Vec<DepSetJson> = result.iter().map(DepSetJson::from).collect();
            emit_json(out, &json)?;
            Ok(0)
        }
        Command::Render {
            target,
            format,
            input,
        } => {
            let text = match (target, format) {
                (RenderTarget::Graph, RenderFormat::Dot) => dot_graph(&read_depset(&input)?),
                (RenderTarget::Lediagram, RenderFormat::Ascii) => {
                    render_ascii(&read_diagram(&input)?)
                }
                (RenderTarget::Poset, RenderFormat::Dot) => poset_dot(&read_depset(&input)?)?,
                (RenderTarget::Graph, RenderFormat::Ascii) => {
                    bail!("graph rendering is DOT-only; use --format dot")
                }
                (RenderTarget::Lediagram, RenderFormat::Dot) => {
                    bail!("Le diagrams render as ASCII; use --format ascii")
                }
                (RenderTarget::Poset, RenderFormat::Ascii) => {
                    bail!("poset rendering is DOT-only; use --format dot")
                }
            };
            emit(out, &text)?;
            Ok(0)
        }
    }
}
