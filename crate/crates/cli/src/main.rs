//! `unijones` command-line front end.

mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unijones::braid::{parse_braid, BraidWord};
use unijones::invariants::{a_gamma_framed, ado, ado_link, j_gamma, link_coloured_jones, unified_jones_framed};
use unijones::knots::{lookup, TABLE};
use unijones::oracles::{bracket_to_d, burau_alexander, kauffman_jones};
use unijones::quotient::groebner::GroebnerLimits;
use unijones::quotient::{reduce_mod_ij, willetts_member_with, LevelIdealJ, WillettsIdeal};
use unijones::ring::{LaurentPoly, VarSet};
use unijones::Error;

use output::Report;

#[derive(Parser, Debug)]
#[command(name = "unijones", version, about = "Unified coloured Jones and ADO invariants of braid closures")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for the state sums (default: all cores).
    #[arg(long, env = "UNIJONES_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute invariants of one braid closure.
    Compute(ComputeArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[command(subcommand)]
        suite: verify::Suite,
    },
    /// Independent reference computations.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
    /// Level ideals and their quotients.
    Ideal {
        #[command(subcommand)]
        op: IdealCmd,
    },
    /// List the built-in knot table.
    Table {
        /// Also print the Jones and Alexander polynomials.
        #[arg(long)]
        invariants: bool,
    },
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Braid such as "B3: 1 -2 1 -2", or a table name such as 4_1.
    #[arg(long)]
    braid: String,
    /// Unified Jones class at `--level` (the default when nothing else is asked for).
    #[arg(long)]
    unified: bool,
    #[arg(long, default_value_t = 2)]
    level: u32,
    /// Coloured Jones polynomial of colour M (all components coloured M).
    #[arg(long, value_name = "M")]
    jones: Option<u32>,
    /// ADO invariant at the 2N-th root of unity.
    #[arg(long, value_name = "N")]
    ado: Option<u32>,
    /// The raw state sum at level N.
    #[arg(long, value_name = "N")]
    agamma: Option<u32>,
    /// Framing override, one integer per component.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    framing: Option<Vec<i64>>,
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Jones polynomial from the Kauffman bracket, in `d = -A^2`.
    Jones { braid: String },
    /// Alexander polynomial from the reduced Burau matrix.
    Alexander { braid: String },
}

#[derive(Subcommand, Debug)]
enum IdealCmd {
    /// Print the level generator (and with `--willetts` the Willetts generators).
    Gen {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        willetts: bool,
    },
    /// Canonical representative of a polynomial in `x, d` modulo the level ideal.
    Reduce {
        #[arg(long)]
        level: u32,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Decide membership in the Willetts ideal over Q.
    WillettsMember {
        #[arg(long)]
        level: u32,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = GroebnerLimits::default().max_basis)]
        max_basis: usize,
        #[arg(long, default_value_t = GroebnerLimits::default().max_pairs)]
        max_pairs: usize,
    },
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    ChecksFailed,
}

pub fn read_braid(text: &str) -> Result<BraidWord, Error> {
    match lookup(text.trim()) {
        Some(k) => Ok(k.braid()),
        None => parse_braid(text),
    }
}

fn compute(a: &ComputeArgs, format: Format) -> Result<Report, Error> {
    let b = read_braid(&a.braid)?;
    let link = b.close();
    let l = link.components;
    if let Some(f) = &a.framing {
        if f.len() != l {
            return Err(Error::InvalidArgument(format!("{} framings given for {l} components", f.len())));
        }
    }
    let knot_framing = a.framing.as_ref().map(|f| f[0]);
    let mut r = Report::new(format);
    r.meta("braid", b.to_string());
    r.meta("components", l.to_string());
    r.meta("writhe", b.writhe().to_string());
    let nothing_else = a.jones.is_none() && a.ado.is_none() && a.agamma.is_none();
    if a.unified || nothing_else {
        if l != 1 {
            return Err(Error::NotAKnot(l));
        }
        let u = unified_jones_framed(&b, a.level, knot_framing)?;
        r.meta("level", a.level.to_string());
        r.value("unified", u.to_string());
    }
    if let Some(m) = a.jones {
        if a.framing.is_some() {
            return Err(Error::InvalidArgument("--jones is framing independent; drop --framing".into()));
        }
        r.value("jones", link_coloured_jones(&b, &vec![m; l], true)?.to_string());
    }
    if let Some(n) = a.ado {
        let v = if l == 1 { ado(&b, n)? } else { ado_link(&b, n)? };
        r.value("ado", v.to_string());
    }
    if let Some(n) = a.agamma {
        let v = if l == 1 {
            a_gamma_framed(&b, n, knot_framing)?
        } else {
            j_gamma(&b, &vec![n; l], a.framing.as_deref())?
        };
        r.value("agamma", v.to_string());
    }
    Ok(r)
}

fn oracle(cmd: &OracleCmd, format: Format) -> Result<Report, Error> {
    let mut r = Report::new(format);
    match cmd {
        OracleCmd::Jones { braid } => {
            let b = read_braid(braid)?;
            r.meta("braid", b.to_string());
            let bracket = kauffman_jones(&b)?;
            r.meta("bracket", bracket.to_string());
            r.value("jones", bracket_to_d(&bracket)?.to_string());
        }
        OracleCmd::Alexander { braid } => {
            let b = read_braid(braid)?;
            r.meta("braid", b.to_string());
            r.value("alexander", burau_alexander(&b)?.to_string());
        }
    }
    Ok(r)
}

fn ideal(cmd: &IdealCmd, format: Format) -> Result<Report, Error> {
    let mut r = Report::new(format);
    match cmd {
        IdealCmd::Gen { level, willetts } => {
            r.meta("level", level.to_string());
            r.value("generator", LevelIdealJ::new(*level)?.generator().to_string());
            if *willetts {
                for (k, g) in WillettsIdeal::new(*level)?.generators().iter().enumerate() {
                    r.value(&format!("willetts.{k}"), g.to_string());
                }
            }
        }
        IdealCmd::Reduce { level, poly } => {
            let p = LaurentPoly::parse(&VarSet::xd(), poly)?;
            r.meta("level", level.to_string());
            r.value("reduced", reduce_mod_ij(&p, *level)?.to_string());
        }
        IdealCmd::WillettsMember { level, poly, max_basis, max_pairs } => {
            if *max_basis == 0 || *max_pairs == 0 {
                return Err(Error::InvalidArgument("limits must be positive".into()));
            }
            let p = LaurentPoly::parse(&VarSet::xd(), poly)?;
            let limits = GroebnerLimits { max_basis: *max_basis, max_pairs: *max_pairs };
            let member = willetts_member_with(&p, &WillettsIdeal::new(*level)?, limits)?;
            r.meta("level", level.to_string());
            r.value("member", member.to_string());
        }
    }
    Ok(r)
}

fn table(with_invariants: bool, format: Format) -> Result<Report, Error> {
    let mut r = Report::new(format);
    for k in TABLE {
        let b = k.braid();
        let mut line = b.to_string();
        if with_invariants {
            let j = bracket_to_d(&kauffman_jones(&b)?)?;
            line = format!("{line} | jones {j} | alexander {}", burau_alexander(&b)?);
        }
        r.value(k.name, line);
    }
    Ok(r)
}

fn run(cli: &Cli) -> Result<Status, Error> {
    let report = match &cli.command {
        Command::Compute(a) => compute(a, cli.format)?,
        Command::Verify { suite } => return verify::run(suite, cli.format),
        Command::Oracle { which } => oracle(which, cli.format)?,
        Command::Ideal { op } => ideal(op, cli.format)?,
        Command::Table { invariants } => table(*invariants, cli.format)?,
    };
    report.print();
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit(_) => 3,
                ref e if e.is_input_error() => 2,
                _ => 1,
            })
        }
    }
}
