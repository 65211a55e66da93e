use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use linial_core::linial::LinialFamily;
use linial_core::suite;
use linial_core::RootSystemId;

mod output;
mod render;

use output::{ErrorInfo, OutputEnvelope, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "linial", version, about = "Characteristic quasi-polynomials of extended Linial arrangements")]
struct Cli {
    /// Emit a JSON envelope instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// With --json, print only the result payload.
    #[arg(long, global = true, requires = "json")]
    raw: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system data for every supported system.
    Table,
    /// Generalized Eulerian polynomial.
    Eulerian(EulerianArgs),
    /// Ehrhart quasi-polynomial of the fundamental alcove.
    Ehrhart(EhrhartArgs),
    /// Characteristic quasi-polynomial of the extended Linial arrangement.
    Charquasi(CharquasiArgs),
    /// Admissible residues, divisors and m0.
    Admissible(SystemArg),
    /// Toy polynomial R(S^{m+1}) g for the default symmetric g.
    Toy(ToyArgs),
    /// Certify that all roots lie on Re t = mh/2.
    CheckLine(CheckLineArgs),
    /// Roots of the limit polynomial.
    LimitRoots(SystemArg),
    /// Independent enumeration oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Track scaled roots of a constituent towards the limit.
    Track(TrackArgs),
    /// Run the reproduction suite and print a pass/fail matrix.
    VerifyAll(VerifyAllArgs),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Count points of (Z/q)^l off the arrangement by brute force.
    Modq(ModqArgs),
}

fn parse_system(s: &str) -> Result<RootSystemId, String> {
    s.parse().map_err(|e: linial_core::Error| e.to_string())
}

#[derive(Args, Debug, Serialize)]
struct SystemArg {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
}

#[derive(Args, Debug, Serialize)]
struct EulerianArgs {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
    /// Print the lower half R' instead.
    #[arg(long)]
    half: bool,
}

#[derive(Args, Debug, Serialize)]
struct EhrhartArgs {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
    /// Also print the first N lattice counts from the generating function.
    #[arg(long, value_name = "N")]
    series: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct CharquasiArgs {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
    #[arg(short = 'm', value_name = "M")]
    m: usize,
    /// Use the half Eulerian polynomial.
    #[arg(long)]
    half: bool,
    /// Print only the constituent of residue D.
    #[arg(long, value_name = "D", allow_negative_numbers = true)]
    constituent: Option<i64>,
}

#[derive(Args, Debug, Serialize)]
struct ToyArgs {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
    #[arg(short = 'm', value_name = "M")]
    m: usize,
}

#[derive(Args, Debug, Serialize)]
struct CheckLineArgs {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
    #[arg(short = 'm', value_name = "M")]
    m: usize,
    /// Residue of the constituent to check.
    #[arg(short = 'd', value_name = "D", default_value_t = 1, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, conflicts_with = "numeric")]
    exact: bool,
    #[arg(long)]
    numeric: bool,
    /// Distance from the line tolerated by --numeric.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args, Debug, Serialize)]
struct ModqArgs {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
    #[arg(short = 'm', value_name = "M")]
    m: usize,
    #[arg(short = 'q', value_name = "Q")]
    q: u64,
    /// Allow q <= m*h.
    #[arg(long)]
    unsafe_q: bool,
}

#[derive(Args, Debug, Serialize)]
struct TrackArgs {
    #[arg(value_name = "PHI", value_parser = parse_system)]
    system: RootSystemId,
    #[arg(short = 'd', value_name = "D", default_value_t = 1)]
    d: usize,
    #[arg(long, value_name = "M,...", value_delimiter = ',', required = true)]
    m_list: Vec<usize>,
}

#[derive(Args, Debug, Serialize)]
struct VerifyAllArgs {
    /// Run only these criteria.
    #[arg(long, value_name = "ID,...", value_delimiter = ',')]
    only: Vec<u8>,
}

/// What a command produced: a JSON payload, its human rendering, and whether
/// every check it ran passed.
struct Report {
    result: Value,
    human: String,
    ok: bool,
}

impl Report {
    fn new<T: Serialize>(result: &T, human: String) -> Self {
        Report {
            result: serde_json::to_value(result).expect("serializable result"),
            human,
            ok: true,
        }
    }
}

fn family(id: RootSystemId) -> linial_core::Result<LinialFamily> {
    LinialFamily::new(id)
}

fn run(command: &Command) -> linial_core::Result<Report> {
    use linial_core::{ehrhart, rootdata, verify};
    Ok(match command {
        Command::Table => {
            let rows = rootdata::catalog()
                .into_iter()
                .map(rootdata::lookup)
                .collect::<linial_core::Result<Vec<_>>>()?;
            Report::new(&rows, render::table(&rows))
        }
        Command::Eulerian(a) => {
            let fam = family(a.system)?;
            let p = if a.half { fam.half_eulerian() } else { fam.eulerian() };
            Report::new(p.as_poly(), format!("{}\n", p.as_poly().display_in('x')))
        }
        Command::Ehrhart(a) => {
            let fam = family(a.system)?;
            let l = fam.ehrhart();
            match a.series {
                None => Report::new(l, render::quasi(l, 't')),
                Some(n) => {
                    let counts: Vec<String> = ehrhart::series_coeffs(a.system, n)?.iter().map(|c| c.to_string()).collect();
                    let human = format!("{}series: {}\n", render::quasi(l, 't'), counts.join(", "));
                    Report::new(&output::EhrhartWithSeries { quasi: l, series: counts }, human)
                }
            }
        }
        Command::Charquasi(a) => {
            let fam = family(a.system)?;
            match (a.constituent, a.half) {
                (Some(d), false) => {
                    let p = fam.char_constituent(a.m, d);
                    Report::new(&p, format!("{}\n", p.display_in('t')))
                }
                (Some(d), true) => {
                    let p = fam.half_constituent(a.m, d);
                    Report::new(&p, format!("{}\n", p.display_in('t')))
                }
                (None, half) => {
                    let q = if half { fam.half_char_quasi(a.m) } else { fam.char_quasi(a.m) };
                    Report::new(&q, render::quasi(&q, 't'))
                }
            }
        }
        Command::Admissible(a) => {
            let r = family(a.system)?.admissible_residues();
            Report::new(&r, render::admissible(&r))
        }
        Command::Toy(a) => {
            let p = family(a.system)?.toy_poly(a.m, None)?;
            Report::new(&p, format!("{}\n", p.display_in('t')))
        }
        Command::CheckLine(a) => {
            let fam = family(a.system)?;
            let p = fam.char_constituent(a.m, a.d);
            let mh = (a.m * fam.coxeter_number()) as i64;
            let report = if a.numeric {
                verify::check_on_line_numeric(&p, mh, a.tol)?
            } else {
                verify::check_on_line_exact(&p, mh)?
            };
            let human = render::line_check(&report);
            let ok = report.on_line;
            Report { ok, ..Report::new(&report, human) }
        }
        Command::LimitRoots(a) => {
            let set = verify::find_roots(&verify::limit_poly(a.system)?)?;
            let out = output::LimitRoots {
                max_real_part: set.max_real_part(),
                set,
            };
            let human = render::limit_roots(&out);
            Report::new(&out, human)
        }
        Command::Oracle(OracleCommand::Modq(a)) => {
            let count = verify::bruteforce_modq(a.system, a.m, a.q, a.unsafe_q)?;
            let expected = family(a.system)?.char_quasi(a.m).value(a.q as i64);
            let out = output::ModqCount {
                count,
                char_quasi: expected.to_string(),
                agrees: expected == linial_core::ratpoly::int(count),
            };
            let human = format!(
                "count = {}\nchar_quasi(q) = {}\n{}\n",
                out.count,
                out.char_quasi,
                if out.agrees { "agree" } else { "DISAGREE" }
            );
            Report { ok: out.agrees, ..Report::new(&out, human) }
        }
        Command::Track(a) => {
            let fam = family(a.system)?;
            let r = verify::asymptotic_track(&fam, a.d, &a.m_list)?;
            Report::new(&r, render::track(&r))
        }
        Command::VerifyAll(a) => {
            let ids: Vec<u8> = if a.only.is_empty() {
                suite::CRITERIA.iter().map(|(id, _)| *id).collect()
            } else {
                a.only.clone()
            };
            let outcomes: Vec<suite::CriterionOutcome> = ids.into_iter().map(suite::run_criterion).collect();
            let ok = outcomes.iter().all(|o| o.passed);
            let human: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            Report { ok, ..Report::new(&outcomes, human) }
        }
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Table => "table",
        Command::Eulerian(_) => "eulerian",
        Command::Ehrhart(_) => "ehrhart",
        Command::Charquasi(_) => "charquasi",
        Command::Admissible(_) => "admissible",
        Command::Toy(_) => "toy",
        Command::CheckLine(_) => "check-line",
        Command::LimitRoots(_) => "limit-roots",
        Command::Oracle(OracleCommand::Modq(_)) => "oracle modq",
        Command::Track(_) => "track",
        Command::VerifyAll(_) => "verify-all",
    }
}

fn inputs(c: &Command) -> Value {
    let v = match c {
        Command::Table => Ok(Value::Object(Default::default())),
        Command::Eulerian(a) => serde_json::to_value(a),
        Command::Ehrhart(a) => serde_json::to_value(a),
        Command::Charquasi(a) => serde_json::to_value(a),
        Command::Admissible(a) | Command::LimitRoots(a) => serde_json::to_value(a),
        Command::Toy(a) => serde_json::to_value(a),
        Command::CheckLine(a) => serde_json::to_value(a),
        Command::Oracle(OracleCommand::Modq(a)) => serde_json::to_value(a),
        Command::Track(a) => serde_json::to_value(a),
        Command::VerifyAll(a) => serde_json::to_value(a),
    };
    v.expect("serializable inputs")
}

fn emit(text: &str, out: Option<&PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli.command);
    let mut envelope = OutputEnvelope {
        command: command_name(&cli.command).to_string(),
        inputs: inputs(&cli.command),
        result: None,
        error: None,
        schema_version: SCHEMA_VERSION,
    };
    let (text, code) = match outcome {
        Ok(report) => {
            let code = if report.ok { ExitCode::SUCCESS } else { ExitCode::FAILURE };
            let text = if !cli.json {
                report.human
            } else if cli.raw {
                output::to_compact_json(&report.result)
            } else {
                envelope.result = Some(report.result);
                output::to_json(&envelope)
            };
            (text, code)
        }
        Err(e) => {
            let info = ErrorInfo {
                name: e.name().to_string(),
                message: e.to_string(),
            };
            if cli.json {
                envelope.error = Some(info);
                (output::to_json(&envelope), ExitCode::FAILURE)
            } else {
                eprintln!("error[{}]: {}", info.name, info.message);
                return ExitCode::FAILURE;
            }
        }
    };
    if let Err(e) = emit(&text, cli.out.as_ref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::FAILURE;
    }
    code
}
