use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use deltaq_core::delta_ops::{ghry_sides, lhs_hook_closed, lhs_nu, rhs_hook, rhs_nu, span_dimension_report, HookParams};
use deltaq_core::hall_littlewood::{hl_p, hl_q, modified_macdonald_full, modified_macdonald_t0};
use deltaq_core::parking::{delta_side_combinatorial, enumerate_pfs};
use deltaq_core::verify::{self, Check, Status};
use deltaq_core::{Basis, Partition, SymFunc};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

/// Exact checks of Delta-operator and Hall-Littlewood identities.
#[derive(Parser)]
#[command(name = "deltaq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite or a single identity; exits 1 if anything mismatches.
    Verify {
        #[arg(long, conflicts_with = "id")]
        suite: Option<String>,
        #[arg(long, requires = "params")]
        id: Option<String>,
        /// Identity parameters such as `k=1,m=3,n=5` or `nu=[2,1],n=4`.
        #[arg(long)]
        params: Option<String>,
        /// Size bound overriding the suite default.
        #[arg(long)]
        nmax: Option<usize>,
        /// Write one JSON report per line here.
        #[arg(long)]
        out: Option<String>,
        /// List suites and identity ids.
        #[arg(long)]
        list: bool,
    },
    /// Print a symmetric function in a chosen basis.
    Expand {
        #[arg(long, value_enum)]
        what: Expansion,
        /// Partition for P, Q, Htilde0 and Htilde.
        #[arg(long)]
        mu: Option<String>,
        /// `nu=[..],n=..` for lhs_nu/rhs_nu, `k=..,m=..,n=..` for the hook
        /// sides, `n=..,k=..` for ghry.
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value = "s")]
        basis: String,
        /// Emit `partition,coefficient` rows.
        #[arg(long)]
        csv: bool,
    },
    /// List the parking functions of size n as CSV.
    Pf {
        #[arg(long)]
        n: usize,
        /// Add area, dinv, word and ides columns.
        #[arg(long)]
        stats: bool,
    },
    /// Combinatorial side of the Delta conjecture in the Schur basis.
    Deltaside {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Keep only the `t^0` part.
        #[arg(long)]
        t0: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Rank of the span of `Delta_{s_nu} e_n` as JSON.
    Span {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu_max: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Expansion {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "Htilde0")]
    Htilde0,
    #[value(name = "Htilde")]
    Htilde,
    #[value(name = "lhs_nu")]
    LhsNu,
    #[value(name = "rhs_nu")]
    RhsNu,
    #[value(name = "lhs_hook")]
    LhsHook,
    #[value(name = "rhs_hook")]
    RhsHook,
    #[value(name = "ghry")]
    Ghry,
}

fn main() -> ExitCode {
    match run(Cli::parse(), &mut io::stdout().lock()) {
        Ok(code) => code,
        // a closed downstream pipe is a normal way to stop reading
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    let io_kind = |c: &(dyn std::error::Error + 'static)| {
        if let Some(e) = c.downcast_ref::<io::Error>() {
            return Some(e.kind());
        }
        match c.downcast_ref::<csv::Error>()?.kind() {
            csv::ErrorKind::Io(e) => Some(e.kind()),
            _ => None,
        }
    };
    e.chain().any(|c| io_kind(c) == Some(io::ErrorKind::BrokenPipe))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            suite,
            id,
            params,
            nmax,
            out: report_path,
            list,
        } => {
            if list {
                print_registry(out)?;
                return Ok(ExitCode::SUCCESS);
            }
            let checks = match (suite, id) {
                (Some(name), None) => verify::suite(&name, nmax)?,
                (None, Some(id)) => vec![Check {
                    id,
                    params: verify::parse_params(params.as_deref().unwrap_or(""))?,
                }],
                _ => bail!("pass --suite or --id (see --list)"),
            };
            run_verify(&checks, report_path.as_deref(), out)
        }
        Command::Expand {
            what,
            mu,
            params,
            basis,
            csv,
        } => {
            let basis: Basis = basis.parse()?;
            for f in expansion(what, mu.as_deref(), params.as_deref())? {
                print_symfunc(out, &f, basis, csv)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pf { n, stats } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["cars", "areas"];
            if stats {
                header.extend(["area", "dinv", "word", "ides"]);
            }
            w.write_record(&header)?;
            for pf in enumerate_pfs(n) {
                let mut row = vec![join(pf.cars()), join(pf.path().area_seq())];
                if stats {
                    row.extend([
                        pf.area().to_string(),
                        pf.dinv().to_string(),
                        join(&pf.word()),
                        join(&pf.ides()),
                    ]);
                }
                w.write_record(&row)?;
            }
            w.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Deltaside { n, k, t0, csv } => {
            print_symfunc(out, &delta_side_combinatorial(n, k, t0)?, Basis::Schur, csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Span { n, nu_max } => {
            let report = span_dimension_report(n, nu_max.unwrap_or(n))?;
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verify(checks: &[Check], path: Option<&str>, out: &mut impl Write) -> Result<ExitCode> {
    let reports = verify::run_suite(checks)?;
    if let Some(path) = path {
        let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {path}"))?);
        for r in &reports {
            serde_json::to_writer(&mut w, r)?;
            writeln!(w)?;
        }
        w.flush()?;
    }
    for r in reports.iter().filter(|r| r.status != Status::Equal || reports.len() == 1) {
        writeln!(out, "{}", r.summary())?;
    }
    let (equal, mismatch, skipped) = verify::tally(&reports);
    writeln!(out, "{equal} equal, {mismatch} mismatch, {skipped} skipped")?;
    Ok(if mismatch > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn print_registry(out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "suites:")?;
    for (name, default, what) in verify::SUITES {
        writeln!(out, "  {name:<10} N={default:<3} {what}")?;
    }
    writeln!(out, "  all        every suite at its default")?;
    writeln!(out, "identities:")?;
    for (id, _) in verify::IDENTITIES {
        writeln!(out, "  {id}")?;
    }
    Ok(())
}

fn expansion(what: Expansion, mu: Option<&str>, params: Option<&str>) -> Result<Vec<SymFunc>> {
    let mu = || -> Result<Partition> { Ok(mu.context("--mu is required")?.parse()?) };
    let params = verify::parse_params(params.unwrap_or(""))?;
    let get = |key: &str| -> Result<usize> {
        params
            .get(key)
            .with_context(|| format!("--params needs `{key}`"))?
            .parse()
            .with_context(|| format!("`{key}` must be a nonnegative integer"))
    };
    let nu = || -> Result<Partition> { Ok(params.get("nu").context("--params needs `nu`")?.parse()?) };
    let hook = || -> Result<HookParams> { Ok(HookParams::new(get("k")?, get("m")?, get("n")?)?) };
    Ok(match what {
        Expansion::P => vec![hl_p(&mu()?, false)],
        Expansion::Q => vec![hl_q(&mu()?)],
        Expansion::Htilde0 => vec![modified_macdonald_t0(&mu()?)],
        Expansion::Htilde => vec![modified_macdonald_full(&mu()?)?],
        Expansion::LhsNu => vec![lhs_nu(&nu()?, get("n")?)?],
        Expansion::RhsNu => vec![rhs_nu(&nu()?, get("n")?)?],
        Expansion::LhsHook => vec![lhs_hook_closed(&hook()?)],
        Expansion::RhsHook => vec![rhs_hook(&hook()?)],
        Expansion::Ghry => {
            let (l, r) = ghry_sides(get("n")?, get("k")?)?;
            vec![l, r]
        }
    })
}

fn print_symfunc(out: &mut impl Write, f: &SymFunc, basis: Basis, csv: bool) -> Result<()> {
    if !csv {
        writeln!(out, "{}", f.render_in(basis))?;
        return Ok(());
    }
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["partition", "coefficient"])?;
    for (p, c) in f.basis_convert(basis) {
        w.write_record([format!("{}{}", basis.prefix(), p), c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
