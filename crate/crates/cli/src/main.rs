use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use peaklab::checks::{find, registry, Check, Degrees, Outcome};
use peaklab::combinatorics::Composition;
use peaklab::cyclotomic::CycloNumber;
use peaklab::descent_peak::{basis, basis_element, BasisId, BasisKind, DescentAlgElement};
use peaklab::eulerian::{multiplication_table, pi_basis};
use peaklab::lie_idempotents::{canonical, dynkin, klyachko, peak_variant};
use peaklab::report::report;
use peaklab::scalar::{rat, Rational, Scalar};
use peaklab::structure_theory::{cartan_matrix, radical_powers};

#[derive(Parser)]
#[command(name = "peaklab", version, about = "Exact computations in the descent and peak algebras of S_n")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Delta,
    Xi,
    Pi,
    Gamma,
    TildeXi,
}

impl Basis {
    fn kind(self) -> BasisKind {
        match self {
            Basis::Delta => BasisKind::Delta,
            Basis::Xi => BasisKind::Xi,
            Basis::Pi => BasisKind::Pi,
            Basis::Gamma => BasisKind::Gamma,
            Basis::TildeXi => BasisKind::TildeXi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Coords {
    Delta,
    Xi,
    Pi,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Dynkin,
    Canonical,
    Klyachko,
    PeakDynkin,
    PeakCanonical,
}

#[derive(Subcommand)]
enum Command {
    /// Print a basis element of D_n.
    Element {
        #[arg(long, value_enum)]
        basis: Basis,
        #[arg(long)]
        n: usize,
        /// A dot-joined composition (delta, xi, tilde-xi) or a comma-joined
        /// peak set (pi, gamma); defaults to n, respectively the empty set.
        #[arg(long, allow_hyphen_values = true)]
        index: Option<String>,
        /// Print coordinates in a named basis instead of the permutation expansion.
        #[arg(long, value_enum)]
        coords: Option<Coords>,
    },
    /// Run a registered check, or `all`, for every applicable n ≤ n-max.
    Verify {
        check: String,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// List the registered checks.
    Checks,
    /// Write the JSON report of dimensions, Cartan matrices, radicals and conjectures.
    Report {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Print a Lie idempotent of degree n.
    Idempotent {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
    /// The Eulerian peak algebra in the Π^{n,k} basis.
    Eulerian {
        #[arg(long)]
        n: usize,
        /// Print the multiplication table.
        #[arg(long)]
        table: bool,
    },
    /// The Cartan matrix of P_n over odd partitions.
    Cartan {
        #[arg(long)]
        n: usize,
    },
    /// Dimensions of Rad P_n, (Rad P_n)², … down to zero.
    Radical {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    /// Bad input or an uncomputable request.
    Usage(String),
    /// A check failed or output could not be written.
    Failed(String),
}

impl From<peaklab::Error> for Failure {
    fn from(e: peaklab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| emit(&cli.out, &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Failed(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Element { basis, n, index, coords } => element(*basis, *n, index.as_deref(), *coords, format),
        Command::Verify { check, n_max } => verify(check, *n_max, format),
        Command::Checks => Ok(check_list(format)),
        Command::Report { n_max } => Ok(pretty(&report(*n_max)?)),
        Command::Idempotent { kind, n } => idempotent(*kind, *n, format),
        Command::Eulerian { n, table } => eulerian(*n, *table, format),
        Command::Cartan { n } => cartan(*n, format),
        Command::Radical { n } => radical(*n, format),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(format: Format, cmd: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Text => "text",
    };
    Failure::Usage(format!("{cmd} does not support --format {name}"))
}

fn coord_map<K: ToString, F: Scalar>(coords: impl IntoIterator<Item = (K, F)>) -> Value {
    Value::Object(coords.into_iter().map(|(k, c)| (k.to_string(), json!(c.to_string()))).collect())
}

fn named_coords(x: &DescentAlgElement, which: Coords) -> Result<(&'static str, Value), peaklab::Error> {
    Ok(match which {
        Coords::Delta => ("Delta", coord_map(x.delta_coords().into_iter().map(|(d, c)| (Composition::from_descent_set(&d), c)))),
        Coords::Xi => ("Xi", coord_map(x.xi_coords())),
        Coords::Pi => ("Pi", coord_map(x.pi_coords()?.into_iter().map(|(p, c)| (p.key(), c)))),
        Coords::Gamma => ("Gamma", coord_map(x.gamma_coords()?.into_iter().map(|(p, c)| (p.key(), c)))),
    })
}

fn element(b: Basis, n: usize, index: Option<&str>, coords: Option<Coords>, format: Option<Format>) -> CmdResult {
    let id = BasisId::parse(b.kind(), n, index)?;
    let format = format.unwrap_or(Format::Json);
    if let Some(which) = coords {
        let (name, map) = named_coords(&basis(&id), which)?;
        return match format {
            Format::Json => Ok(pretty(&json!({"basis": name, "coords": map}))),
            Format::Text | Format::Csv => {
                let mut s = String::new();
                for (k, c) in map.as_object().expect("object") {
                    let _ = writeln!(s, "{k},{}", c.as_str().unwrap_or_default());
                }
                Ok(s)
            }
        };
    }
    let perms = basis_element(&id)?;
    match format {
        Format::Json => Ok(pretty(&json!({"element": id.to_string(), "n": n, "expansion": perms.to_json()}))),
        Format::Text => Ok(format!("{id} = {perms}\n")),
        Format::Csv => {
            let mut s = String::from("perm,coeff\n");
            for (p, c) in perms.terms() {
                let _ = writeln!(s, "{p},{c}");
            }
            Ok(s)
        }
    }
}

fn check_list(format: Option<Format>) -> String {
    let checks = registry();
    if format == Some(Format::Json) {
        let v: Vec<Value> = checks
            .iter()
            .map(|c| json!({"id": c.id, "statement": c.statement, "min_n": c.min_n, "max_n": c.max_n, "odd_only": c.degrees == Degrees::Odd}))
            .collect();
        return pretty(&json!(v));
    }
    let mut s = String::new();
    for c in checks {
        let odd = if c.degrees == Degrees::Odd { ", odd n" } else { "" };
        let _ = writeln!(s, "{:<28} n = {}..{}{odd}  {}", c.id, c.min_n, c.max_n, c.statement);
    }
    s
}

struct CheckRun {
    id: &'static str,
    degrees: Vec<usize>,
    /// The failing degree and its witness, if any.
    failure: Option<(usize, String)>,
}

fn run_check(check: &Check, n_max: usize) -> CheckRun {
    let mut out = CheckRun { id: check.id, degrees: Vec::new(), failure: None };
    for n in check.degrees_up_to(n_max) {
        out.degrees.push(n);
        match check.run(n) {
            Ok(Outcome::Pass) => {}
            Ok(Outcome::Fail(w)) => out.failure = Some((n, w)),
            Err(e) => out.failure = Some((n, format!("error: {e}"))),
        }
        if out.failure.is_some() {
            break;
        }
    }
    out
}

/// Runs the checks on a small thread pool; results keep registry order.
fn run_all(checks: &[&Check], n_max: usize) -> Vec<CheckRun> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CheckRun>>> = Mutex::new((0..checks.len()).map(|_| None).collect());
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(checks.len()).max(1);
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(check) = checks.get(i) else { break };
                let r = run_check(check, n_max);
                slots.lock().expect("no poisoned lock")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("no poisoned lock").into_iter().map(|r| r.expect("every check ran")).collect()
}

fn verify(id: &str, n_max: usize, format: Option<Format>) -> CmdResult {
    let checks: Vec<&Check> = if id == "all" {
        registry().iter().collect()
    } else {
        vec![find(id).ok_or_else(|| Failure::Usage(format!("unknown check {id:?}; `peaklab checks` lists them")))?]
    };
    let runs = run_all(&checks, n_max);
    let failed = runs.iter().filter(|r| r.failure.is_some()).count();
    let text = if format == Some(Format::Json) {
        let v: Vec<Value> = runs
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "degrees": r.degrees,
                    "passed": r.failure.is_none(),
                    "witness": r.failure.as_ref().map(|(n, w)| json!({"n": n, "witness": w})),
                })
            })
            .collect();
        pretty(&json!({"n_max": n_max, "checks": v, "failed": failed}))
    } else {
        let mut s = String::new();
        for r in &runs {
            match &r.failure {
                None if r.degrees.is_empty() => {
                    let _ = writeln!(s, "skip  {} (no applicable n ≤ {n_max})", r.id);
                }
                None => {
                    let _ = writeln!(s, "pass  {} n = {:?}", r.id, r.degrees);
                }
                Some((n, w)) => {
                    let _ = writeln!(s, "FAIL  {} n = {n}: {w}", r.id);
                }
            }
        }
        let _ = writeln!(s, "{} of {} checks passed", runs.len() - failed, runs.len());
        s
    };
    if failed > 0 {
        let (id, (n, w)) = runs.iter().find_map(|r| r.failure.as_ref().map(|f| (r.id, f))).expect("a failure");
        print!("{text}");
        return Err(Failure::Failed(format!("first failure: {id} at n = {n}: {w}")));
    }
    Ok(text)
}

fn rational_json(x: &DescentAlgElement) -> Result<Value, peaklab::Error> {
    let mut v = json!({
        "n": x.degree(),
        "xi": named_coords(x, Coords::Xi)?.1,
        "delta": named_coords(x, Coords::Delta)?.1,
    });
    if x.is_peak() {
        v["pi"] = named_coords(x, Coords::Pi)?.1;
    }
    Ok(v)
}

fn idempotent(kind: Kind, n: usize, format: Option<Format>) -> CmdResult {
    peaklab::error::check_degree(n)?;
    if n == 0 {
        return Err(Failure::Usage("Lie idempotents need n ≥ 1".into()));
    }
    let inv_n = rat(1, n as i64);
    let (name, mut v, text) = match kind {
        Kind::Klyachko => {
            let k = klyachko(n).scale(&CycloNumber::from_rational(&inv_n));
            let delta = k.delta_vec();
            let coords: BTreeMap<String, Value> = delta
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (Composition::from_mask(n, m as u32).to_string(), c.to_json()))
                .collect();
            let text = delta
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| format!("({c})Δ^{{{}}}", Composition::from_mask(n, m as u32)))
                .collect::<Vec<_>>()
                .join(" + ");
            ("(1/n)κ_n(ε)", json!({"n": n, "root_of_unity_order": n, "delta": coords}), text)
        }
        _ => {
            let x = match kind {
                Kind::Dynkin => dynkin(n).scale(&inv_n),
                Kind::Canonical => canonical(n),
                Kind::PeakDynkin => peak_variant(&dynkin(n).scale(&inv_n))?,
                Kind::PeakCanonical => peak_variant(&canonical(n))?,
                Kind::Klyachko => unreachable!(),
            };
            let name = match kind {
                Kind::Dynkin => "(1/n)ω_n",
                Kind::Canonical => "ρ_n",
                Kind::PeakDynkin => "(1/2n)ω̃_n",
                _ => "(1/2)ρ̃_n",
            };
            (name, rational_json(&x)?, x.to_string())
        }
    };
    match format.unwrap_or(Format::Json) {
        Format::Json => {
            v["idempotent"] = json!(name);
            Ok(pretty(&v))
        }
        Format::Text => Ok(format!("{name} = {text}\n")),
        f => Err(unsupported(f, "idempotent")),
    }
}

fn eulerian(n: usize, table: bool, format: Option<Format>) -> CmdResult {
    peaklab::error::check_degree(n)?;
    let format = format.unwrap_or(Format::Text);
    if !table {
        let b = pi_basis(n);
        return match format {
            Format::Json => {
                let v: Result<Vec<Value>, _> = b.iter().map(rational_json).collect();
                Ok(pretty(&json!({"n": n, "dimension": b.len(), "basis": v?})))
            }
            Format::Text => {
                let mut s = format!("dim Ẽ_{n} = {}\n", b.len());
                for (k, x) in b.iter().enumerate() {
                    let _ = writeln!(s, "Π^{{{n},{k}}} = {x}");
                }
                Ok(s)
            }
            f => Err(unsupported(f, "eulerian without --table")),
        };
    }
    let t = multiplication_table(n)?;
    let combo = |coords: &[Rational]| -> String {
        let terms: Vec<String> = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}·Π^{{{n},{k}}}"))
            .collect();
        if terms.is_empty() { "0".into() } else { terms.join(" + ") }
    };
    match format {
        Format::Json => {
            let v: Vec<Vec<Vec<String>>> =
                t.iter().map(|row| row.iter().map(|e| e.iter().map(ToString::to_string).collect()).collect()).collect();
            Ok(pretty(&json!({"n": n, "basis": "Pi^{n,k}", "table": v})))
        }
        Format::Text => {
            let mut s = String::new();
            for (i, row) in t.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    let _ = writeln!(s, "Π^{{{n},{i}}} ∗ Π^{{{n},{j}}} = {}", combo(e));
                }
            }
            Ok(s)
        }
        Format::Csv => {
            let mut s = String::from("i,j");
            for k in 0..t.len() {
                let _ = write!(s, ",k{k}");
            }
            s.push('\n');
            for (i, row) in t.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    let _ = write!(s, "{i},{j}");
                    for c in e {
                        let _ = write!(s, ",{c}");
                    }
                    s.push('\n');
                }
            }
            Ok(s)
        }
    }
}

fn cartan(n: usize, format: Option<Format>) -> CmdResult {
    let c = cartan_matrix(n)?;
    match format.unwrap_or(Format::Json) {
        Format::Json => Ok(pretty(&json!({
            "n": c.n,
            "partitions": c.partitions.iter().map(|p| p.key()).collect::<Vec<_>>(),
            "entries": c.entries,
        }))),
        Format::Csv => Ok(c.to_csv()),
        Format::Text => {
            let mut s = String::new();
            for (p, row) in c.partitions.iter().zip(&c.entries) {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "{:>12}  {}", p.key(), cells.join(" "));
            }
            Ok(s)
        }
    }
}

fn radical(n: usize, format: Option<Format>) -> CmdResult {
    let dims: Vec<usize> = radical_powers(n)?.iter().map(|s| s.dim()).collect();
    match format.unwrap_or(Format::Text) {
        Format::Json => Ok(pretty(&json!({"n": n, "radical_chain_dims": dims, "nilpotency_index": dims.len()}))),
        Format::Text => {
            let chain: Vec<String> = dims.iter().map(ToString::to_string).collect();
            Ok(format!("dim (Rad P_{n})^j for j = 1..{}: {}\nnilpotency index: {}\n", dims.len(), chain.join(" "), dims.len()))
        }
        f => Err(unsupported(f, "radical")),
    }
}
