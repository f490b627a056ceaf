use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heckez::export::Format;
use heckez::{Basis, Permutation};
use heckez_cli::element::{ElementSpec, Endpoint};
use heckez_cli::{check_n, prepare, verify, CliError, Result, HECKE_MAX_N, SYMFUNC_MAX_N};

/// Exact computation in centers of type-A Iwahori-Hecke algebras over Q(v).
///
/// Set HECKEZ_CACHE_DIR to keep class polynomial and character tables on disk
/// between runs.
#[derive(Parser)]
#[command(name = "heckez", version, about)]
struct Cli {
    /// Raise the bound on n (default 6, or 8 for symmetric-function-only commands)
    #[arg(long, global = true)]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Latex,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    E,
    H,
    P,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check identities exactly at degree n; exits 1 if any fails
    Verify {
        #[arg(long, required_unless_present = "list")]
        n: Option<usize>,
        /// `all`, or a comma-separated list of identity names (see --list)
        #[arg(long, default_value = "all")]
        identity: String,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        /// List the identity names and exit
        #[arg(long)]
        list: bool,
    },
    /// Character table chi^lambda(T_{w_mu}) of H_n
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Geck-Rouquier basis f*_lambda of Z(H_n) on the T_w basis
    Grbasis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Frobenius image of a central element, e.g. --elem nt2:2,1
    Psi {
        #[arg(long)]
        n: usize,
        /// FAMILY:PARTITION with FAMILY one of gr, n1, nt2, nf, idem
        #[arg(long)]
        elem: ElementSpec,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
    },
    /// Class polynomials: one row with --w, otherwise the whole table
    Classpoly {
        #[arg(long)]
        n: usize,
        /// Permutation in one-line notation, e.g. "3 2 1"
        #[arg(long)]
        w: Option<Permutation>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transition matrix between central families (N1 NT2 NF GR IDEM) or
    /// symmetric-function bases (m e h p s)
    Transition {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: Endpoint,
        #[arg(long)]
        to: Endpoint,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every standard table for n into a directory
    Export {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let max = cli.max_n;
    match cli.command {
        Command::Verify {
            n,
            identity,
            json,
            list,
        } => {
            if list {
                for id in verify::IDENTITIES {
                    println!("{:<17} {}", id.name, id.about);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let n = n.expect("required by clap");
            let ids = verify::select(&identity).map_err(CliError::Usage)?;
            check_n(n, HECKE_MAX_N, max)?;
            prepare(n);
            let report = verify::run(n, &ids);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("{report}");
            }
            return Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Chartable { n, format, out } => {
            check_n(n, HECKE_MAX_N, max)?;
            prepare(n);
            emit(&heckez_cli::chartable(n, format.into()), out.as_ref())?;
        }
        Command::Grbasis { n, format, out } => {
            check_n(n, HECKE_MAX_N, max)?;
            prepare(n);
            emit(&heckez_cli::grbasis(n, format.into()), out.as_ref())?;
        }
        Command::Psi { n, elem, basis } => {
            check_n(n, HECKE_MAX_N, max)?;
            prepare(n);
            emit(&heckez_cli::psi(n, &elem, basis.into())?, None)?;
        }
        Command::Classpoly { n, w, format, out } => {
            check_n(n, HECKE_MAX_N, max)?;
            prepare(n);
            let text = match w {
                Some(w) => heckez_cli::classpoly_row(n, &w)?,
                None => heckez_cli::classpoly_table(n, format.into()),
            };
            emit(&text, out.as_ref())?;
        }
        Command::Transition {
            n,
            from,
            to,
            format,
            out,
        } => {
            let limit = if heckez_cli::is_symfunc_only(from, to) {
                SYMFUNC_MAX_N
            } else {
                HECKE_MAX_N
            };
            check_n(n, limit, max)?;
            let m = heckez_cli::transition(n, from, to)?;
            emit(&heckez::export::transition_matrix(&m, format.into()), out.as_ref())?;
        }
        Command::Export { n, out } => {
            check_n(n, HECKE_MAX_N, max)?;
            prepare(n);
            for name in heckez_cli::export_bundle(n, &out)? {
                eprintln!("wrote {}", out.join(name).display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
