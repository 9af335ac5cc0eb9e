//! Command-line surface for graph spectra from equitable partitions.
//!
//! Exit codes: 0 success (or verdict true), 1 verdict false, 2 input error,
//! 3 numeric failure, 4 precondition violation.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use eqspec::error::Error;
use eqspec::graph::{parse_edge_list, Graph};
use eqspec::localspec::{
    crossed_via_quotient_idempotents, is_walk_regular, local_spectrum_from_quotient,
    reconstruct_spectrum,
};
use eqspec::partition::{
    distance_partition, equitable_witness, parse_partition, quotient_matrix, vertex_partition,
    Partition,
};
use eqspec::spectra::{adjacency_eigen, quotient_eigen};
use eqspec::{families, Real};

use report::{Payload, Report};

#[derive(Parser)]
#[command(name = "eqspec", version, about = "Graph spectra from equitable partitions")]
struct Cli {
    /// Eigenvalue deduplication tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: Real,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Partition hung from a vertex: the coarsest equitable refinement of
    /// ({u}, rest), or the plain distance partition.
    #[arg(long, global = true, value_enum, default_value_t = Seed::Refined)]
    seed_partition: Seed,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Seed {
    Refined,
    Distance,
}

#[derive(Subcommand)]
enum Command {
    /// Full spectrum of the adjacency matrix (direct eigendecomposition).
    Spectrum { graph: PathBuf },
    /// Local spectrum of one vertex, read off its quotient matrix.
    LocalSpectrum {
        graph: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Quotient matrix of a vertex partition or an explicit partition file.
    Quotient {
        graph: PathBuf,
        #[arg(long, conflicts_with = "partition")]
        vertex: Option<usize>,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Crossed local multiplicities from one vertex: one row per graph
    /// eigenvalue, one column per cell, plus the column-sum row.
    Crossed {
        graph: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Whole spectrum reconstructed from per-vertex quotients only.
    Reconstruct { graph: PathBuf },
    /// Verdict checks; the exit code reports the verdict.
    Check {
        graph: PathBuf,
        #[arg(long, conflicts_with = "equitable")]
        walk_regular: bool,
        /// Partition file to test for equitability.
        #[arg(long)]
        equitable: Option<PathBuf>,
    },
    /// List fixture families, or emit one as edge-list text.
    Families {
        /// Family name; omit to list the available ones.
        name: Option<String>,
        /// Family parameters, e.g. `cycle 5`.
        args: Vec<usize>,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SelfLoop { .. }
        | Error::BadToken { .. }
        | Error::BadEdgeLine { .. }
        | Error::BadGraph6 { .. }
        | Error::VertexOutOfRange { .. }
        | Error::Disconnected { .. }
        | Error::InvalidPartition { .. }
        | Error::InvalidArgument(_) => 2,
        Error::IntegerOverflow
        | Error::WalkCountOverflow { .. }
        | Error::NoConvergence
        | Error::AmbiguousClustering { .. }
        | Error::NotSymmetric { .. }
        | Error::RoundingResidual { .. }
        | Error::MultiplicitySum { .. } => 3,
        Error::NotEquitable(_)
        | Error::InvalidQuotient { .. }
        | Error::DimensionMismatch { .. }
        | Error::RepeatedEigenvalue { .. }
        | Error::NotSymmetrizable { .. }
        | Error::BaseCellNotSingleton { .. }
        | Error::EigenvalueMismatch { .. }
        | Error::NonsimpleEigenvalue { .. }
        | Error::DegenerateEigenpair
        | Error::NotTridiagonal { .. }
        | Error::NotWalkRegular { .. } => 4,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        Failure { code: exit_code_for(&err), message: err.to_string() }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|err| Failure {
        code: 2,
        message: format!("cannot read {}: {err}", path.display()),
    })
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_edge_list(&read_file(path)?)?)
}

/// Hash of the canonical edge-list serialization, so reports identify their
/// input independently of formatting details.
fn graph_hash(g: &Graph) -> String {
    let mut canonical = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        canonical.push_str(&format!("{u} {v}\n"));
    }
    let digest = Sha256::digest(canonical.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn hang_partition(g: &Graph, vertex: usize, seed: Seed) -> Result<Partition, Failure> {
    Ok(match seed {
        Seed::Refined => vertex_partition(g, vertex)?,
        Seed::Distance => distance_partition(g, vertex)?,
    })
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let tol = cli.tol;
    let render = |report: Report| match cli.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_text(),
    };

    match &cli.command {
        Command::Spectrum { graph } => {
            let g = load_graph(graph)?;
            let (_, spectrum) = adjacency_eigen(&g, tol)?;
            let report = Report {
                command: "spectrum".to_string(),
                graph_hash: graph_hash(&g),
                tolerance: tol,
                payload: Payload::Spectrum(spectrum),
            };
            Ok((render(report), 0))
        }
        Command::LocalSpectrum { graph, vertex } => {
            let g = load_graph(graph)?;
            let partition = hang_partition(&g, *vertex, cli.seed_partition)?;
            let quotient = quotient_matrix(&g, &partition)?;
            let entries = local_spectrum_from_quotient(&quotient, tol)?;
            let report = Report {
                command: "local-spectrum".to_string(),
                graph_hash: graph_hash(&g),
                tolerance: tol,
                payload: Payload::LocalSpectrum { vertex: *vertex, entries, partition, quotient },
            };
            Ok((render(report), 0))
        }
        Command::Quotient { graph, vertex, partition } => {
            let g = load_graph(graph)?;
            let partition = match (vertex, partition) {
                (Some(u), None) => hang_partition(&g, *u, cli.seed_partition)?,
                (None, Some(path)) => parse_partition(&read_file(path)?, g.order())?,
                _ => {
                    return Err(Failure {
                        code: 2,
                        message: "quotient needs exactly one of --vertex or --partition"
                            .to_string(),
                    })
                }
            };
            let quotient = quotient_matrix(&g, &partition)?;
            let eigen = quotient_eigen(&quotient, tol)?;
            let report = Report {
                command: "quotient".to_string(),
                graph_hash: graph_hash(&g),
                tolerance: tol,
                payload: Payload::Quotient {
                    partition,
                    spectrum: eigen.spectrum().clone(),
                    quotient,
                },
            };
            Ok((render(report), 0))
        }
        Command::Crossed { graph, vertex } => {
            let g = load_graph(graph)?;
            let partition = hang_partition(&g, *vertex, cli.seed_partition)?;
            let quotient = quotient_matrix(&g, &partition)?;
            let (_, full_spectrum) = adjacency_eigen(&g, tol)?;
            let table = crossed_via_quotient_idempotents(&quotient, &full_spectrum, tol)?;
            let report = Report {
                command: "crossed".to_string(),
                graph_hash: graph_hash(&g),
                tolerance: tol,
                payload: Payload::Crossed { vertex: *vertex, table },
            };
            Ok((render(report), 0))
        }
        Command::Reconstruct { graph } => {
            let g = load_graph(graph)?;
            let spectrum = reconstruct_spectrum(&g, tol)?;
            let report = Report {
                command: "reconstruct".to_string(),
                graph_hash: graph_hash(&g),
                tolerance: tol,
                payload: Payload::Spectrum(spectrum),
            };
            Ok((render(report), 0))
        }
        Command::Check { graph, walk_regular, equitable } => {
            let g = load_graph(graph)?;
            let (check, verdict, witness) = match (walk_regular, equitable) {
                (true, None) => ("walk-regular".to_string(), is_walk_regular(&g, tol)?, None),
                (false, Some(path)) => {
                    let partition = parse_partition(&read_file(path)?, g.order())?;
                    match equitable_witness(&g, &partition) {
                        None => ("equitable".to_string(), true, None),
                        Some(w) => ("equitable".to_string(), false, Some(w.to_string())),
                    }
                }
                _ => {
                    return Err(Failure {
                        code: 2,
                        message: "check needs exactly one of --walk-regular or --equitable"
                            .to_string(),
                    })
                }
            };
            let code = u8::from(!verdict);
            let report = Report {
                command: "check".to_string(),
                graph_hash: graph_hash(&g),
                tolerance: tol,
                payload: Payload::Verdict { check, verdict, witness },
            };
            Ok((render(report), code))
        }
        Command::Families { name, args } => {
            let Some(name) = name else {
                return Ok((families_listing(), 0));
            };
            let g = build_family(name, args)?;
            Ok((edge_list_text(&g), 0))
        }
    }
}

fn families_listing() -> String {
    [
        "cycle <n>                 cycle on n >= 3 vertices",
        "complete <n>              complete graph on n >= 1 vertices",
        "complete-bipartite <a> <b>",
        "petersen                  the Petersen graph",
        "hypercube <d>             d-dimensional hypercube",
        "subdivided-complete <r>   K_r with every edge subdivided",
        "cone:<family> <params..>  apex joined to every vertex of the base",
        "",
    ]
    .join("\n")
}

fn build_family(name: &str, args: &[usize]) -> Result<Graph, Failure> {
    let arity = |expected: usize| -> Result<(), Failure> {
        if args.len() == expected {
            Ok(())
        } else {
            Err(Failure {
                code: 2,
                message: format!("family {name} takes {expected} parameter(s), got {}", args.len()),
            })
        }
    };
    let g = match name {
        "cycle" => {
            arity(1)?;
            families::cycle(args[0])?
        }
        "complete" => {
            arity(1)?;
            families::complete(args[0])?
        }
        "complete-bipartite" => {
            arity(2)?;
            families::complete_bipartite(args[0], args[1])?
        }
        "petersen" => {
            arity(0)?;
            families::petersen()
        }
        "hypercube" => {
            arity(1)?;
            families::hypercube(args[0])?
        }
        "subdivided-complete" => {
            arity(1)?;
            families::subdivided_complete(args[0])?
        }
        other => {
            // allow `cone <family> <params...>`
            if let Some(base) = other.strip_prefix("cone:") {
                families::cone(&build_family(base, args)?)
            } else {
                return Err(Failure {
                    code: 2,
                    message: format!("unknown family {other:?}; run `eqspec families` to list"),
                });
            }
        }
    };
    Ok(g)
}

fn edge_list_text(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
