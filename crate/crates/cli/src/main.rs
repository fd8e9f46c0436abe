use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use planar_rook::bratteli::{BratteliGraph, Format};
use planar_rook::chartable::character_table;
use planar_rook::diagram::cardinality_breakdown;
use planar_rook::verify::{self, Mutation, Status, VerifyConfig};
use planar_rook::witness::check_cap;
use planar_rook::{cardinality, enumerate_planar, x_of, AlgebraElement, Diagram, VerifyError, DEFAULT_DIAGRAM_CAP};

#[derive(Parser)]
#[command(name = "prook", version, about = "Exact computations in the colored planar rook monoid algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print |P_{n,c}|.
    Count {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        c: usize,
        /// Also print the term for each size composition.
        #[arg(long)]
        breakdown: bool,
    },
    /// List every diagram of P_{n,c} in canonical order.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        c: usize,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Literal)]
        format: DiagramFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "PROOK_CAP", default_value_t = DEFAULT_DIAGRAM_CAP)]
        cap: u64,
    },
    /// Multiply two diagram (or algebra element) literals, or spot-check
    /// associativity on random triples.
    Mul {
        #[arg(required_unless_present = "check_assoc")]
        left: Option<String>,
        #[arg(required_unless_present = "check_assoc")]
        right: Option<String>,
        /// Print the product as a matrix over {0, u1, ..., uc}.
        #[arg(long)]
        as_matrix: bool,
        /// Check (ab)d = a(bd) on random triples from P_{n,c} instead.
        #[arg(long, requires_all = ["n", "c"], conflicts_with_all = ["left", "right", "as_matrix"])]
        check_assoc: bool,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        c: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, env = "PROOK_CAP", default_value_t = DEFAULT_DIAGRAM_CAP)]
        cap: u64,
    },
    /// Expand x_d in the diagram basis, or rewrite an element in the x basis.
    Xbasis {
        literal: String,
        /// Treat the literal as an algebra element and print its x-coordinates.
        #[arg(long)]
        coords: bool,
    },
    /// Character table of every irreducible module.
    Chartable {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        c: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recompute every entry as a matrix trace.
        #[arg(long)]
        verify: bool,
        #[arg(long, env = "PROOK_CAP", default_value_t = DEFAULT_DIAGRAM_CAP)]
        cap: u64,
    },
    /// Bratteli diagram up to level n.
    Bratteli {
        #[arg(short)]
        c: usize,
        #[arg(short)]
        n: usize,
        /// dot or json
        #[arg(long, default_value = "dot")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant suite and print a JSON report.
    Verify {
        #[arg(long, env = "PROOK_N_CAP", default_value_t = 3)]
        n_cap: usize,
        #[arg(long, env = "PROOK_C_CAP", default_value_t = 2)]
        c_cap: usize,
        #[arg(long, env = "PROOK_CAP", default_value_t = DEFAULT_DIAGRAM_CAP)]
        cap: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        inject_mutant: Option<MutantArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Literal,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutantArg {
    FlipXSign,
}

enum Failure {
    /// Exit code 1.
    Verification(String),
    /// Exit code 2.
    Usage(String),
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Failed(w) => Failure::Verification(w.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(out: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(bytes).map_err(usage),
    }
}

fn check_c(c: usize) -> Result<(), Failure> {
    if c == 0 {
        return Err(usage("-c must be at least 1"));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { n, c, breakdown } => {
            check_c(c)?;
            let mut text = format!("{}\n", cardinality(n, c));
            if breakdown {
                for (comp, term) in cardinality_breakdown(n, c) {
                    let parts: Vec<String> = comp.iter().map(usize::to_string).collect();
                    text.push_str(&format!("({}) {term}\n", parts.join(",")));
                }
            }
            emit(None, text.as_bytes())
        }
        Command::Enumerate { n, c, format, out, cap } => {
            check_c(c)?;
            check_cap(n, c, cap)?;
            let mut text = String::new();
            for d in enumerate_planar(n, c) {
                match format {
                    DiagramFormat::Literal => text.push_str(&format!("{d}\n")),
                    DiagramFormat::Matrix => text.push_str(&format!("{}\n", d.display_matrix())),
                }
            }
            emit(out.as_ref(), text.as_bytes())
        }
        Command::Mul { left, right, as_matrix, check_assoc, n, c, seed, samples, cap } => {
            if check_assoc {
                let (n, c) = (n.expect("required by clap"), c.expect("required by clap"));
                check_c(c)?;
                check_cap(n, c, cap)?;
                let sample = verify::sample_diagrams(n, c, 3 * samples, seed);
                for t in sample.chunks(3) {
                    let lhs = t[0].multiply(&t[1]).and_then(|ab| ab.multiply(&t[2])).map_err(usage)?;
                    let rhs = t[1].multiply(&t[2]).and_then(|bd| t[0].multiply(&bd)).map_err(usage)?;
                    if lhs != rhs {
                        return Err(Failure::Verification(format!("not associative: {}; {}; {}", t[0], t[1], t[2])));
                    }
                }
                return emit(None, format!("ok: {samples} triples from P_{{{n},{c}}} (seed {seed})\n").as_bytes());
            }
            let (left, right) = (left.expect("required by clap"), right.expect("required by clap"));
            if let (Ok(a), Ok(b)) = (left.parse::<Diagram>(), right.parse::<Diagram>()) {
                let p = a.multiply(&b).map_err(usage)?;
                let text = if as_matrix { p.display_matrix() } else { format!("{p}\n") };
                return emit(None, text.as_bytes());
            }
            if as_matrix {
                return Err(usage("--as-matrix needs two diagram literals"));
            }
            let a: AlgebraElement = left.parse().map_err(usage)?;
            let b: AlgebraElement = right.parse().map_err(usage)?;
            emit(None, format!("{}\n", a.mul(&b).map_err(usage)?).as_bytes())
        }
        Command::Xbasis { literal, coords } => {
            if coords {
                let g: AlgebraElement = literal.parse().map_err(usage)?;
                let mut terms: Vec<_> = g.to_x_coordinates().into_iter().collect();
                terms.sort_by_key(|(d, _)| d.enumeration_key());
                let items: Vec<String> = terms.iter().map(|(d, q)| format!("{q} * x[{d}]")).collect();
                let text = if items.is_empty() { "0".to_string() } else { items.join(" + ") };
                return emit(None, format!("{text}\n").as_bytes());
            }
            let d: Diagram = literal.parse().map_err(usage)?;
            emit(None, format!("{}\n", x_of(&d).map_err(usage)?).as_bytes())
        }
        Command::Chartable { n, c, format: TableFormat::Csv, out, verify, cap } => {
            check_c(c)?;
            check_cap(n, c, cap)?;
            let table = character_table(n, c);
            if verify {
                table.verify_by_trace()?;
            }
            emit(out.as_ref(), table.to_csv().as_bytes())
        }
        Command::Bratteli { c, n, format, out } => {
            check_c(c)?;
            let format: Format = format.parse().map_err(usage)?;
            emit(out.as_ref(), &BratteliGraph::build(c, n).emit(format))
        }
        Command::Verify { n_cap, c_cap, cap, out, inject_mutant } => {
            let config = VerifyConfig {
                n_cap,
                c_cap,
                diagram_cap: cap,
                mutation: inject_mutant.map(|MutantArg::FlipXSign| Mutation::FlipXSign),
            };
            let report = verify::run(&config)?;
            emit(out.as_ref(), report.to_json().as_bytes())?;
            match report.status {
                Status::Pass => Ok(()),
                Status::Fail => {
                    let names: Vec<&str> = report.failures().map(|c| c.name).collect();
                    Err(Failure::Verification(format!("failed checks: {}", names.join(", "))))
                }
                Status::CapExceeded => Err(Failure::Usage("resource cap exceeded".into())),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("prook: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("prook: {msg}");
            ExitCode::from(2)
        }
    }
}
