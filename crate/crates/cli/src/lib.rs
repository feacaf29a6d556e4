//! Command-line front end: one subcommand per theorem sum, plus orbit
//! counting, sweep verification and action-table dumps.
//!
//! Exit status: 0 on success, 1 on a failed check, 2 on a usage error,
//! 3 on an internal-consistency failure.

use std::collections::BTreeMap;
use std::io::Write;

use burnside_kit::oracles::{brute_fixed_count, cycles_action, subsets_action, words_action};
use burnside_kit::theorems::{
    corollary_fermat_check, corollary_wilson_check, cycle_fixed_count, fermat_check, fermat_sum, fermat_terms,
    lucas_check, lucas_inner_sum, lucas_params, lucas_prime_reduce, lucas_terms, necklace_count, wilson_check,
    wilson_terms, DivisorTerm,
};
use burnside_kit::{binomial, divisors, euler_phi, is_prime, residue, CyclicAction, Error, Natural, DEFAULT_BUDGET};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

/// Environment variable overriding the action-size budget (decimal element count).
pub const BUDGET_ENV: &str = "BURNSIDE_KIT_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "burnside-kit", version, about = "Orbit-counting divisibility sums and their brute-force checks")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler's totient of n
    Phi {
        #[arg(long)]
        n: u64,
    },
    /// sum_{d|n} phi(n/d) a^d and its divisibility by n
    Fermat {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        n: u64,
    },
    /// Number of length-n necklaces over a letters
    Necklaces {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        n: u64,
    },
    /// sum_{d|n} phi(n/d)^2 (n/d)^(d-1) (d-1)! and its divisibility by n
    Wilson {
        #[arg(long)]
        n: u64,
    },
    /// Block-rotation subset sum for (n, m, r) and its divisibility by n
    Lucas {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
    },
    /// C(m, r) mod p from base-p digits, compared with the direct binomial
    LucasPrime {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
    },
    /// Count orbits of a concrete action directly and by the divisor formula
    Orbits(ActionArgs),
    /// Sweep a theorem over a parameter range
    Verify(VerifyArgs),
    /// Print the generator table of a concrete action
    DumpAction(ActionArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ActionKind {
    Words,
    Cycles,
    Subsets,
}

#[derive(Debug, Args)]
struct ActionArgs {
    #[arg(long, value_enum)]
    action: ActionKind,
    /// Alphabet size (words)
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    n: u64,
    /// Universe size (subsets)
    #[arg(long)]
    m: Option<u64>,
    /// Subset size (subsets)
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Fermat,
    Wilson,
    Lucas,
    Burnside,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long)]
    max_n: u64,
    /// Largest alphabet size (fermat)
    #[arg(long, conflicts_with = "max_m")]
    max_a: Option<u64>,
    /// Largest universe size (lucas)
    #[arg(long)]
    max_m: Option<u64>,
    /// Seed for the random actions (burnside)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random actions (burnside)
    #[arg(long, default_value_t = 200)]
    count: u64,
    /// Largest random action size (burnside)
    #[arg(long, default_value_t = 2000)]
    max_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub divisor: String,
    pub term: String,
}

/// The outcome of one command. Numbers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub value: Option<String>,
    pub modulus: Option<String>,
    pub residue: Option<String>,
    pub check: Check,
    pub details: Vec<Detail>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Pass,
    Fail,
}

impl Check {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Check::Pass
        } else {
            Check::Fail
        }
    }
}

impl Report {
    fn new(command: &str, inputs: &[(&str, u64)]) -> Self {
        Report {
            command: command.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            value: None,
            modulus: None,
            residue: None,
            check: Check::Pass,
            details: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Sets value, modulus and residue, and makes the check `n | value`.
    fn divisibility(mut self, value: &Natural, n: u64) -> Result<Self, Error> {
        let rem = residue(value, n)?;
        self.value = Some(value.to_string());
        self.modulus = Some(n.to_string());
        self.residue = Some(rem.to_string());
        self.check = Check::from_bool(rem == 0);
        Ok(self)
    }

    fn terms<T: ToString>(mut self, terms: &[DivisorTerm<T>]) -> Self {
        self.details = terms
            .iter()
            .map(|t| Detail {
                divisor: t.divisor.to_string(),
                term: t.value.to_string(),
            })
            .collect();
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out += &format!("inputs: {}\n", inputs.join(" "));
        for (label, field) in [("value", &self.value), ("modulus", &self.modulus), ("residue", &self.residue)] {
            if let Some(v) = field {
                out += &format!("{label}: {v}\n");
            }
        }
        let check = match self.check {
            Check::Pass => "pass",
            Check::Fail => "fail",
        };
        out += &format!("check: {check}\n");
        for d in &self.details {
            out += &format!("term d={}: {}\n", d.divisor, d.term);
        }
        for note in &self.notes {
            out += &format!("note: {note}\n");
        }
        out
    }
}

enum Output {
    Report(Report),
    Table(String),
}

/// Failure that aborts a command before a report is produced.
enum Abort {
    Usage(String),
    Inconsistent(String),
}

impl From<Error> for Abort {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(msg) => Abort::Inconsistent(msg),
            other => Abort::Usage(other.to_string()),
        }
    }
}

fn budget_from_env() -> Result<usize, Abort> {
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Abort::Usage(format!("{BUDGET_ENV} must be a decimal element count, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`. Diagnostics go to `err`. Returns the exit status.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let result = budget_from_env().and_then(|budget| execute(&cli.command, budget));
    emit(result, cli.format, out, err)
}

fn emit(result: Result<Output, Abort>, format: Format, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match result {
        Ok(Output::Table(table)) => {
            let _ = write!(out, "{table}");
            EXIT_OK
        }
        Ok(Output::Report(report)) => {
            let _ = match format {
                Format::Text => write!(out, "{}", report.to_text()),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes")),
            };
            match report.check {
                Check::Pass => EXIT_OK,
                Check::Fail => EXIT_CHECK_FAILED,
            }
        }
        Err(Abort::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Abort::Inconsistent(msg)) => {
            let _ = writeln!(err, "internal consistency failure: {msg}");
            EXIT_INCONSISTENT
        }
    }
}

fn execute(command: &Command, budget: usize) -> Result<Output, Abort> {
    let report = match *command {
        Command::Phi { n } => {
            let mut report = Report::new("phi", &[("n", n)]);
            report.value = Some(euler_phi(n)?.to_string());
            report
        }
        Command::Fermat { a, n } => {
            let terms = fermat_terms::<Natural>(a, n)?;
            let value = fermat_sum::<Natural>(a, n)?;
            Report::new("fermat", &[("a", a), ("n", n)]).divisibility(&value, n)?.terms(&terms)
        }
        Command::Necklaces { a, n } => {
            let mut report = Report::new("necklaces", &[("a", a), ("n", n)]).terms(&fermat_terms::<Natural>(a, n)?);
            report.value = Some(necklace_count::<Natural>(a, n)?.to_string());
            report
        }
        Command::Wilson { n } => {
            let terms = wilson_terms::<Natural>(n)?;
            let value: Natural = terms.iter().map(|t| &t.value).sum();
            Report::new("wilson", &[("n", n)]).divisibility(&value, n)?.terms(&terms)
        }
        Command::Lucas { n, m, r } => {
            let terms = lucas_terms::<Natural>(n, m, r)?;
            let value: Natural = terms.iter().map(|t| &t.value).sum();
            let mut report = Report::new("lucas", &[("n", n), ("m", m), ("r", r)])
                .divisibility(&value, n)?
                .terms(&terms);
            // also enforces the identity term = C(m, r)
            report.check = Check::from_bool(lucas_check(n, m, r)?);
            report
        }
        Command::LucasPrime { p, m, r } => {
            let reduced = lucas_prime_reduce(p, m, r)?;
            let direct = residue(&binomial::<Natural>(m, r as i64)?, p)?;
            let mut report = Report::new("lucas-prime", &[("p", p), ("m", m), ("r", r)]);
            report.value = Some(reduced.to_string());
            report.modulus = Some(p.to_string());
            report.residue = Some(reduced.to_string());
            report.check = Check::from_bool(reduced == direct);
            report.notes.push(format!("direct C({m}, {r}) mod {p} = {direct}"));
            report
        }
        Command::Orbits(ref args) => {
            let action = build_action(args, budget)?;
            let burnside = action.orbit_count_burnside()?;
            let direct = action.orbit_count_direct();
            let mut report = Report::new("orbits", &action_inputs(args));
            report.value = Some(burnside.to_string());
            report.check = Check::from_bool(burnside == direct);
            report.details = action
                .divisor_fixed_counts()
                .iter()
                .map(|t| Detail {
                    divisor: t.divisor.to_string(),
                    term: (t.multiplicity as u128 * t.fixed as u128).to_string(),
                })
                .collect();
            report.notes.push(format!("size = {}", action.size()));
            report.notes.push(format!("direct orbit count = {direct}"));
            report
        }
        Command::Verify(ref args) => verify(args, budget)?,
        Command::DumpAction(ref args) => return Ok(Output::Table(build_action(args, budget)?.to_table())),
    };
    Ok(Output::Report(report))
}

fn required(value: Option<u64>, flag: &str, action: &str) -> Result<u64, Abort> {
    value.ok_or_else(|| Abort::Usage(format!("--{flag} is required for --action {action}")))
}

fn build_action(args: &ActionArgs, budget: usize) -> Result<CyclicAction, Abort> {
    Ok(match args.action {
        ActionKind::Words => words_action(required(args.a, "a", "words")?, args.n, budget)?,
        ActionKind::Cycles => cycles_action(args.n, budget)?,
        ActionKind::Subsets => {
            let m = required(args.m, "m", "subsets")?;
            let r = required(args.r, "r", "subsets")?;
            subsets_action(args.n, m, r, budget)?
        }
    })
}

fn action_inputs(args: &ActionArgs) -> Vec<(&'static str, u64)> {
    let mut inputs = vec![("n", args.n)];
    for (name, value) in [("a", args.a), ("m", args.m), ("r", args.r)] {
        if let Some(v) = value {
            inputs.push((name, v));
        }
    }
    inputs
}

/// Collects sweep failures; an internal-consistency error anywhere aborts with status 3.
struct Sweep {
    points: u64,
    failures: Vec<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { points: 0, failures: Vec::new() }
    }

    fn point(&mut self, outcome: Result<bool, Error>, label: impl FnOnce() -> String) -> Result<(), Abort> {
        self.points += 1;
        match outcome {
            Ok(true) => Ok(()),
            Ok(false) => {
                self.failures.push(label());
                Ok(())
            }
            Err(Error::Inconsistent(msg)) => Err(Abort::Inconsistent(format!("{}: {msg}", label()))),
            Err(e) => {
                self.failures.push(format!("{}: {e}", label()));
                Ok(())
            }
        }
    }
}

/// Whether an oracle action of this size fits the budget.
fn within(size: Option<u128>, budget: usize) -> bool {
    size.is_some_and(|s| s <= budget as u128)
}

fn oracle_matches(action: &CyclicAction, closed: impl Fn(u64) -> Result<Natural, Error>) -> Result<bool, Error> {
    for d in divisors(action.n())?.iter() {
        if Natural::from(brute_fixed_count(action, d)?) != closed(d)? {
            return Ok(false);
        }
    }
    Ok(action.orbit_count_burnside()? == action.orbit_count_direct())
}

fn verify(args: &VerifyArgs, budget: usize) -> Result<Report, Abort> {
    let max_n = args.max_n;
    let mut sweep = Sweep::new();
    let mut inputs = vec![("max-n", max_n)];
    match args.theorem {
        Theorem::Fermat => {
            let max_a = args.max_a.unwrap_or(10);
            inputs.push(("max-a", max_a));
            for n in 1..=max_n {
                for a in 0..=max_a {
                    sweep.point(fermat_check(a, n), || format!("fermat a={a} n={n}"))?;
                    let size = u32::try_from(n).ok().and_then(|e| (a as u128).checked_pow(e));
                    if within(size, budget) {
                        let outcome = words_action(a, n, budget).and_then(|action| {
                            let count = necklace_count::<Natural>(a, n)?;
                            let laws = oracle_matches(&action, |d| Ok(Natural::from(a).pow(d as u32)))?;
                            Ok(laws && count == Natural::from(action.orbit_count_direct()))
                        });
                        sweep.point(outcome, || format!("words oracle a={a} n={n}"))?;
                    }
                    if is_prime(n) {
                        sweep.point(corollary_fermat_check(a, n), || format!("fermat corollary a={a} p={n}"))?;
                    }
                }
            }
        }
        Theorem::Wilson => {
            for n in 1..=max_n {
                sweep.point(wilson_check(n), || format!("wilson n={n}"))?;
                let size = (1..n).try_fold(1u128, |acc, k| acc.checked_mul(k as u128));
                if within(size, budget) {
                    let outcome = cycles_action(n, budget)
                        .and_then(|action| oracle_matches(&action, |d| cycle_fixed_count::<Natural>(n, d)));
                    sweep.point(outcome, || format!("cycles oracle n={n}"))?;
                }
                if is_prime(n) {
                    sweep.point(corollary_wilson_check(n), || format!("wilson corollary p={n}"))?;
                }
            }
        }
        Theorem::Lucas => {
            let max_m = args.max_m.unwrap_or(24);
            inputs.push(("max-m", max_m));
            for n in 1..=max_n {
                for m in 0..=max_m {
                    for r in 0..=m {
                        sweep.point(lucas_check(n, m, r), || format!("lucas n={n} m={m} r={r}"))?;
                        if within(binomial::<u128>(m, r as i64).ok(), budget) {
                            let params = lucas_params(n, m, r)?;
                            let outcome = subsets_action(n, m, r, budget)
                                .and_then(|action| oracle_matches(&action, |d| lucas_inner_sum(&params, d)));
                            sweep.point(outcome, || format!("subsets oracle n={n} m={m} r={r}"))?;
                        }
                        if is_prime(n) {
                            let outcome = lucas_prime_reduce(n, m, r).and_then(|reduced| {
                                Ok(reduced == residue(&binomial::<Natural>(m, r as i64)?, n)?)
                            });
                            sweep.point(outcome, || format!("lucas corollary p={n} m={m} r={r}"))?;
                        }
                    }
                }
            }
        }
        Theorem::Burnside => {
            inputs.extend([("seed", args.seed), ("count", args.count), ("max-size", args.max_size as u64)]);
            if max_n == 0 {
                return Err(Abort::Usage("--max-n must be positive".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            for trial in 0..args.count {
                let n = rng.gen_range(1..=max_n);
                let size = rng.gen_range(0..=args.max_size);
                let outcome = CyclicAction::random(n, size, &mut rng).and_then(|action| {
                    let agree = action.orbit_count_burnside()? == action.orbit_count_direct();
                    let divisible = action.fixed_point_total() % n as u128 == 0;
                    Ok(agree && divisible && action.gcd_collapse_check())
                });
                sweep.point(outcome, || format!("random action {trial} n={n} size={size}"))?;
            }
        }
    }
    let name = match args.theorem {
        Theorem::Fermat => "fermat",
        Theorem::Wilson => "wilson",
        Theorem::Lucas => "lucas",
        Theorem::Burnside => "burnside",
    };
    let mut report = Report::new("verify", &inputs);
    report.inputs.insert("theorem".into(), name.into());
    report.value = Some(sweep.points.to_string());
    report.check = Check::from_bool(sweep.failures.is_empty());
    report.notes = sweep.failures;
    Ok(report)
}
