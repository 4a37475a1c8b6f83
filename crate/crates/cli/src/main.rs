//! `charp`: command-line access to the verification suite and the engine.
//!
//! Exit status: 0 success, 1 a check failed, 2 usage or input error,
//! 3 Gröbner budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use charp_core::field::is_prime;
use charp_core::groebner::{buchberger, Budget, IdealBasis};
use charp_core::numerics::{
    betti_consistency, feasible_characteristics, hypersurface_invariants, torsor_invariants, InvariantRecord,
    SurfaceKind, TorsorKind,
};
use charp_core::suite::{report, CheckId, CheckStatus, ReportFormat, Suite};
use charp_core::{Derivation, Error, MonomialOrder, Ring};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "charp",
    version,
    about = "Exact checks for an additive vector field on P^3 in characteristic 5"
)]
struct Cli {
    /// Characteristic of the base field.
    #[arg(long, global = true, default_value_t = 5, value_parser = parse_prime)]
    p: u64,

    /// Monomial order for Gröbner computations.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,

    /// Seed for the randomized quintic of check C12.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Maximum number of S-pairs per Gröbner computation.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_PAIRS, value_parser = parse_budget)]
    budget: usize,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Run only these checks (verify only); repeat or separate with commas.
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_check)]
    only: Vec<CheckId>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the checks C1–C14 and print the report.
    Verify,
    /// Basis of the degree-d invariants of a derivation given as `var -> poly` lines.
    Kernel {
        file: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Reduced Gröbner basis of the ideal given one generator per line.
    Groebner {
        file: PathBuf,
        /// Ring variables, highest first; inferred from the file when omitted.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Numerical invariants of surfaces and torsors.
    Invariants {
        #[command(subcommand)]
        which: InvariantsCommand,
    },
}

#[derive(Subcommand, Debug)]
enum InvariantsCommand {
    /// chi and K^2 of a smooth surface of degree d in P^3.
    Hypersurface {
        #[arg(long)]
        d: i64,
    },
    /// chi and K^2 of the total space of a degree-p torsor.
    Torsor {
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        k2: i64,
        #[arg(long, value_enum, default_value_t = TorsorArg::AlphaP)]
        kind: TorsorArg,
    },
    /// Characteristics where a non-classical numerical Godeaux surface can exist.
    Feasible {
        #[arg(long, value_enum)]
        kind: GodeauxKind,
    },
    /// c2 and Betti numbers from chi, K^2 and b1.
    Betti {
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        k2: i64,
        #[arg(long, default_value_t = 0)]
        b1: i64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TorsorArg {
    AlphaP,
    MuP,
    Etale,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GodeauxKind {
    Singular,
    Supersingular,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if is_prime(p) && p <= u32::MAX as u64 {
        Ok(p)
    } else {
        Err(format!("{p} is not a prime"))
    }
}

fn parse_budget(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("budget must be a positive integer, got `{s}`")),
    }
}

fn parse_check(s: &str) -> Result<CheckId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A command failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Budget { .. } => EXIT_BUDGET,
            Error::Overflow(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("charp: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    if !cli.only.is_empty() && !matches!(cli.command, Command::Verify) {
        return Err(usage("--only applies to `verify`"));
    }
    let budget = Budget::new(cli.budget)?;
    match &cli.command {
        Command::Verify => cmd_verify(cli, budget),
        Command::Kernel { file, degree } => Ok((cmd_kernel(cli, file, *degree)?, 0)),
        Command::Groebner { file, vars } => Ok((cmd_groebner(cli, file, vars.as_deref(), budget)?, 0)),
        Command::Invariants { which } => Ok((cmd_invariants(cli, which)?, 0)),
    }
}

fn cmd_verify(cli: &Cli, budget: Budget) -> Result<(String, u8), Failure> {
    let suite = Suite::new(cli.seed, budget);
    let p = suite.construction().ring.characteristic() as u64;
    if cli.p != p {
        return Err(usage(format!(
            "the bundled construction is in characteristic {p}, not {}",
            cli.p
        )));
    }
    let results = if cli.only.is_empty() {
        suite.run_all()
    } else {
        suite.run_selected(&cli.only)
    };
    let format = match cli.format {
        FormatArg::Json => ReportFormat::Json,
        FormatArg::Text => ReportFormat::Text,
    };
    let code = if results.iter().any(|r| r.status == CheckStatus::Fail) {
        EXIT_FAIL
    } else if results.iter().any(|r| r.status == CheckStatus::BudgetExceeded) {
        EXIT_BUDGET
    } else {
        0
    };
    Ok((report(&results, format), code))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cmd_kernel(cli: &Cli, file: &Path, degree: u32) -> Result<String, Failure> {
    let derivation = Derivation::parse_with_ring(&read(file)?, cli.p)?;
    let basis = derivation.graded_kernel(degree)?;
    Ok(match cli.format {
        FormatArg::Json => json_line(&json!({
            "variables": derivation.ring().names(),
            "degree": degree,
            "dimension": basis.len(),
            "basis": basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        })),
        FormatArg::Text => {
            let mut out: String = basis.iter().map(|b| format!("{b}\n")).collect();
            out.push_str(&format!("dim {}\n", basis.len()));
            out
        }
    })
}

/// Distinct identifiers of `text` outside comment lines, in natural order
/// (`x2` before `x10`).
fn infer_variables(text: &str) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.starts_with('#')) {
        let mut chars = line.char_indices().peekable();
        while let Some((start, c)) = chars.next() {
            if !(c.is_ascii_alphabetic() || c == '_') {
                continue;
            }
            let mut end = start + c.len_utf8();
            while let Some(&(i, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = i + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let name = &line[start..end];
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
    }
    names.sort_by_key(|a| natural_key(a));
    names
}

fn natural_key(name: &str) -> (String, u64, String) {
    let stem = name.trim_end_matches(|c: char| c.is_ascii_digit());
    let digits = &name[stem.len()..];
    (stem.to_string(), digits.parse().unwrap_or(0), name.to_string())
}

fn cmd_groebner(cli: &Cli, file: &Path, vars: Option<&[String]>, budget: Budget) -> Result<String, Failure> {
    let text = read(file)?;
    let mut names = match vars {
        Some(v) => v.to_vec(),
        None => infer_variables(&text),
    };
    if names.is_empty() {
        // constants only; any ring will do
        names.push("x".into());
    }
    let order: MonomialOrder = cli.order.into();
    let ring = Ring::with_order_new(&names, cli.p, order)?;
    let ideal = IdealBasis::parse(&ring, &text)?;
    let gb = buchberger(&ideal, order, budget)?;
    let basis: Vec<String> = gb.polynomials().iter().map(|g| g.to_string()).collect();
    Ok(match cli.format {
        FormatArg::Json => json_line(&json!({
            "variables": ring.names(),
            "order": order.name(),
            "pairs_processed": gb.pairs_processed(),
            "basis": basis,
        })),
        FormatArg::Text => basis.iter().map(|b| format!("{b}\n")).collect(),
    })
}

fn record_text(r: &InvariantRecord) -> String {
    let mut s = format!("chi={} K^2={}", r.chi, r.k2);
    if let Some(b) = r.pg_lower_bound {
        s.push_str(&format!(" pg>={b}"));
    }
    s.push('\n');
    s
}

fn cmd_invariants(cli: &Cli, which: &InvariantsCommand) -> Result<String, Failure> {
    let json_out = cli.format == FormatArg::Json;
    Ok(match which {
        InvariantsCommand::Hypersurface { d } => {
            let r = hypersurface_invariants(*d, cli.p)?;
            if json_out {
                json_line(&json!(r))
            } else {
                record_text(&r)
            }
        }
        InvariantsCommand::Torsor { chi, k2, kind } => {
            let kind = match kind {
                TorsorArg::AlphaP => TorsorKind::AlphaP,
                TorsorArg::MuP => TorsorKind::MuP,
                TorsorArg::Etale => TorsorKind::EtaleZp,
            };
            let base = InvariantRecord::new(cli.p, *chi, *k2, SurfaceKind::Classical);
            let r = torsor_invariants(&base, kind)?;
            if json_out {
                json_line(&json!(r))
            } else {
                record_text(&r)
            }
        }
        InvariantsCommand::Feasible { kind } => {
            let kind = match kind {
                GodeauxKind::Singular => SurfaceKind::Singular,
                GodeauxKind::Supersingular => SurfaceKind::Supersingular,
            };
            let ps = feasible_characteristics(kind)?;
            if json_out {
                json_line(&json!(ps))
            } else {
                let words: Vec<String> = ps.iter().map(u64::to_string).collect();
                format!("{}\n", words.join(" "))
            }
        }
        InvariantsCommand::Betti { chi, k2, b1 } => {
            let b = betti_consistency(*chi, *k2, *b1)?;
            if json_out {
                json_line(&json!(b))
            } else {
                format!("c2={} b1={b1} b2={} b3={}\n", b.c2, b.b2, b.b3)
            }
        }
    })
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
