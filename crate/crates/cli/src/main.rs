use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qpmut_cli::commands::{self, JacobianFields, VerifyFlags};
use qpmut_cli::config::{FileConfig, Settings};
use qpmut_cli::failure::{Exit, Failure};
use qpmut_cli::input::{self, split_labels, Loaded};
use qpmut_cli::server;

/// Mutation of quivers with potential and verification of the resulting
/// derived equivalences.
#[derive(Debug, Parser)]
#[command(name = "qpmut", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// TOML file with degree_bound, field, seed and reduction_cap.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Path-length bound for the completed path algebra.
    #[arg(long, global = true)]
    degree_bound: Option<usize>,
    /// Read coefficients over this field (`Q` or `GF(p)`).
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for randomized isomorphism tests.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Maximum number of reduction passes.
    #[arg(long, global = true)]
    reduction_cap: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

/// A QP document path, `-` for stdin, or a fixture name.
#[derive(Debug, Args)]
struct Source {
    #[arg(value_name = "QP")]
    positional: Option<String>,
    #[arg(short, long, value_name = "QP", conflicts_with = "positional")]
    input: Option<String>,
}

impl Source {
    fn load(&self, s: &Settings) -> Result<Loaded, Failure> {
        let src = self
            .positional
            .as_deref()
            .or(self.input.as_deref())
            .ok_or_else(|| Failure::input("no input QP given"))?;
        input::load(src, s.field)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document and print a summary.
    Parse(Source),
    /// Print the canonical form of a document.
    Emit(Source),
    /// Mutate at a vertex set.
    Mutate {
        #[command(flatten)]
        source: Source,
        #[arg(short, long, value_name = "LABELS")]
        vertices: String,
        /// Rescale arrows so these cycles get coefficient 1 and print the potential.
        #[arg(long, value_name = "CYCLE", value_delimiter = ',')]
        normalize: Vec<String>,
    },
    /// Dimension, Cartan matrix and radical layers of the Jacobian algebra.
    Jacobian {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        dim: bool,
        #[arg(long)]
        cartan: bool,
        #[arg(long)]
        layers: bool,
    },
    /// Print the Nakayama permutation.
    Nakayama(Source),
    /// Decide whether the Jacobian algebra is selfinjective.
    CheckSelfinjective(Source),
    /// σ-orbits of the vertices and whether each can be mutated.
    Orbits(Source),
    /// Build the silting complex at a vertex set and check the comparison theorem.
    VerifyTheorem {
        #[command(flatten)]
        source: Source,
        #[arg(short, long, value_name = "LABELS")]
        vertices: String,
        /// Skip the comparison over the opposite QP.
        #[arg(long)]
        skip_opposite: bool,
        /// Include wall-clock timings (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
        #[arg(long, value_name = "CYCLE", value_delimiter = ',')]
        normalize: Vec<String>,
    },
    /// Apply and verify a sequence of orbit mutations.
    Chain {
        #[command(flatten)]
        source: Source,
        /// One orbit per flag, or several separated by `;`.
        #[arg(long = "orbits", value_name = "LABELS", required = true)]
        orbits: Vec<String>,
    },
    /// Serve the JSON API.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn settings(g: &Global) -> Result<Settings, Failure> {
    let file = match &g.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let flags = FileConfig {
        degree_bound: g.degree_bound,
        field: g.field.clone(),
        seed: g.seed,
        reduction_cap: g.reduction_cap,
    };
    Settings::resolve(&file, &flags)
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<(String, Exit), Failure> {
    let s = settings(&cli.global)?;
    match &cli.command {
        Command::Parse(src) => {
            let l = src.load(&s)?;
            Ok((
                pretty(&commands::summary(&l.qp, l.name.as_deref())),
                Exit::Ok,
            ))
        }
        Command::Emit(src) => {
            let l = src.load(&s)?;
            Ok((commands::document(&l.qp, l.name).to_json(), Exit::Ok))
        }
        Command::Mutate {
            source,
            vertices,
            normalize,
        } => {
            let l = source.load(&s)?;
            let (mu, exit) = commands::mutate(&l.qp, &split_labels(vertices), &s)?;
            if normalize.is_empty() {
                Ok((commands::document(&mu, l.name).to_json(), exit))
            } else {
                Ok((format!("{}\n", commands::normalized(&mu, normalize)?), exit))
            }
        }
        Command::Jacobian {
            source,
            dim,
            cartan,
            layers,
        } => {
            let l = source.load(&s)?;
            let fields = JacobianFields {
                dim: *dim,
                cartan: *cartan,
                layers: *layers,
            };
            let (v, exit) = commands::jacobian(&l.qp, &s, fields)?;
            Ok((pretty(&v), exit))
        }
        Command::Nakayama(src) => {
            let l = src.load(&s)?;
            Ok((format!("{}\n", commands::nakayama(&l.qp, &s)?), Exit::Ok))
        }
        Command::CheckSelfinjective(src) => {
            let l = src.load(&s)?;
            let (v, exit) = commands::check_selfinjective(&l.qp, &s)?;
            Ok((pretty(&v), exit))
        }
        Command::Orbits(src) => {
            let l = src.load(&s)?;
            let sigma = commands::nakayama(&l.qp, &s)?;
            let v = serde_json::json!({ "nakayama": sigma.to_string(), "orbits": commands::orbits(&l.qp, &sigma) });
            Ok((pretty(&v), Exit::Ok))
        }
        Command::VerifyTheorem {
            source,
            vertices,
            skip_opposite,
            timings,
            normalize,
        } => {
            let l = source.load(&s)?;
            let flags = VerifyFlags {
                skip_opposite: *skip_opposite,
                timings: *timings,
                normalize: normalize.clone(),
            };
            let (v, exit) = commands::verify(&l.qp, &split_labels(vertices), &s, &flags)?;
            Ok((pretty(&v), exit))
        }
        Command::Chain { source, orbits } => {
            let l = source.load(&s)?;
            let steps: Vec<Vec<String>> = orbits
                .iter()
                .flat_map(|o| o.split(';').map(split_labels).collect::<Vec<_>>())
                .collect();
            let (v, exit) = commands::chain(&l.qp, &steps, &s, l.name)?;
            Ok((pretty(&v), exit))
        }
        Command::Serve { host, port } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(server::serve(s, host, *port))?;
            Ok((String::new(), Exit::Ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, exit) = match run(&cli) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("{}", f.to_json());
            return ExitCode::from(f.exit.code() as u8);
        }
    };
    let written = match &cli.global.output {
        Some(p) => std::fs::write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("{}", Failure::from(e).to_json());
        return ExitCode::from(Exit::Precondition.code() as u8);
    }
    ExitCode::from(exit.code() as u8)
}
