//! Command-line front end for the `circular-peaks` library.
//!
//! [`run`] takes the argument vector and two sinks and returns the process
//! exit code: 0 on success, 1 on a usage or validation error, 2 when a
//! verification suite reports a failed check.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use circular_peaks::chains::{chain_count_formula, chain_oracle, zeta, zeta_polynomial};
use circular_peaks::complex::{
    check_generating_form, euler_characteristic, euler_characteristic_closed_form,
    f_generating_series, f_polynomial, face_table, faces, moebius, printed_f_generating_form,
    PeakComplex, POSET_CAP,
};
use circular_peaks::exact_algebra::{rational_to_string, BiSeries, ExactPoly};
use circular_peaks::hilbert::{
    graded_dimensions, hilbert_polynomial_a, hilbert_series_b, numerator_a, Algebra,
};
use circular_peaks::hvector::{h_generating_series, h_polynomial, h_vector, printed_h_generating_form};
use circular_peaks::peak_sets::{from_dyck, max_peak_count, to_dyck, witness, DyckPrefix};
use circular_peaks::perm::{enumerate_cp_class, PERMUTATION_CAP};
use circular_peaks::verify::{self, Check, Outcome, VerifyConfig};
use circular_peaks::{Error, PeakSet, Permutation};

/// Largest `n` accepted by commands that only evaluate closed forms.
pub const CLOSED_FORM_CAP: usize = 2000;
/// Largest truncation order for `series`.
pub const SERIES_ORDER_CAP: usize = 120;
/// Largest truncation order for `hilbert`.
pub const HILBERT_ORDER_CAP: usize = 5000;

#[derive(Parser, Debug)]
#[command(
    name = "circular-peaks",
    version,
    about = "Circular peak sets, the complex P_n and its invariants, in exact arithmetic"
)]
struct Cli {
    /// Output format (json by default; verify prints a table by default)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    P,
    H,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Circular peak and circular descent sets of a permutation
    Stats {
        #[arg(long)]
        perm: String,
    },
    /// All permutations of [n] with the given circular peak set
    EnumCp(SetArgs),
    /// A permutation realizing a circular peak set
    Witness(SetArgs),
    /// Dyck-path encoding of a peak set, or decoding with --word
    Dyck {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Faces of P_n (all of them with Hasse covers, or one dimension)
    Faces {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        dim: Option<isize>,
    },
    /// The f-vector and f-polynomial of P_n
    Fvector(NArgs),
    /// The h-vector and h-polynomial of P_n
    Hvector(NArgs),
    /// Zeta polynomial of P_n, or its value at --i
    Zeta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Chain counts from the closed formula next to direct enumeration
    Chains {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Moebius function from a face to one face above it or to all of them
    Moebius {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
        #[arg(long)]
        upper: Option<String>,
    },
    /// Reduced Euler characteristic of P_n
    Euler(NArgs),
    /// Graded dimensions of the algebras A and B
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, ignore_case = true)]
        algebra: AlgebraArg,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Expansion of the bivariate generating function of P_n(x) or H_n(x)
    Series {
        #[arg(long, value_enum, ignore_case = true)]
        which: Which,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct NArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct SetArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated elements; empty for the empty set
    #[arg(long, default_value = "")]
    set: String,
}

/// A table for `--format csv`.
struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

struct Report {
    json: Value,
    table: Table,
    /// Text used instead of JSON when no format is given (verify only).
    default_text: Option<String>,
    failed: bool,
}

impl Report {
    fn new(json: Value, headers: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Self {
            json,
            table: Table { headers, rows },
            default_text: None,
            failed: false,
        }
    }
}

#[derive(Debug)]
struct CliError(String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

type CmdResult = Result<Report, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

/// Parses `argv` (program name first), runs the command and writes its output.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let report = match dispatch(cli.command) {
        Ok(r) => r,
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
    };
    let written = match (cli.format, &report.default_text) {
        (None, Some(text)) => out.write_all(text.as_bytes()),
        (Some(Format::Csv), _) => write_csv(out, &report.table),
        _ => serde_json::to_string(&report.json)
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}")),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 1;
    }
    if report.failed {
        2
    } else {
        0
    }
}

fn write_csv(out: &mut dyn Write, table: &Table) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.headers)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    w.flush()
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Stats { perm } => stats(&perm),
        Command::EnumCp(a) => enum_cp(a.n, &a.set),
        Command::Witness(a) => witness_cmd(a.n, &a.set),
        Command::Dyck { n, set, word } => dyck(n, set.as_deref(), word.as_deref()),
        Command::Faces { n, dim } => faces_cmd(n, dim),
        Command::Fvector(a) => fvector(a.n),
        Command::Hvector(a) => hvector(a.n),
        Command::Zeta { n, i } => zeta_cmd(n, i),
        Command::Chains { n, i } => chains(n, i),
        Command::Moebius { n, set, upper } => moebius_cmd(n, &set, upper.as_deref()),
        Command::Euler(a) => euler(a.n),
        Command::Hilbert { n, algebra, order } => hilbert(n, algebra, order),
        Command::Series { which, order } => series(which, order),
        Command::Verify { suite, max_n } => verify_cmd(&suite, max_n),
    }
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n < 3 {
        return Err(usage(format!("--n must be at least 3, got {n}")));
    }
    if n > CLOSED_FORM_CAP {
        return Err(usage(format!("--n is limited to {CLOSED_FORM_CAP}, got {n}")));
    }
    Ok(())
}

fn check_poset_n(n: usize, what: &str) -> Result<(), CliError> {
    check_n(n)?;
    if n > POSET_CAP {
        return Err(usage(format!(
            "{what} enumerates the whole complex and is limited to n <= {POSET_CAP}, got {n}"
        )));
    }
    Ok(())
}

fn parse_list(text: &str) -> Result<Vec<usize>, CliError> {
    let text = text.trim();
    let text = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(text);
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| usage(format!("{t:?} is not a positive integer")))
        })
        .collect()
}

fn spaced(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn strings<T: ToString>(values: &[T]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn stats(text: &str) -> CmdResult {
    let perm = Permutation::parse(text)?;
    let s = perm.statistics();
    Ok(Report::new(
        json!({ "perm": perm.values(), "cp": s.cp, "cdes": s.cdes }),
        vec!["perm", "cp", "cdes"],
        vec![vec![spaced(perm.values()), spaced(&s.cp), spaced(&s.cdes)]],
    ))
}

fn enum_cp(n: usize, set: &str) -> CmdResult {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if n > PERMUTATION_CAP {
        return Err(usage(format!(
            "enum-cp walks all of S_n and is limited to n <= {PERMUTATION_CAP}, got {n}"
        )));
    }
    let elements = parse_list(set)?;
    let class = enumerate_cp_class(n, &elements)?;
    let mut sorted = elements.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let perms: Vec<&[usize]> = class.iter().map(Permutation::values).collect();
    let rows = perms.iter().map(|p| vec![n.to_string(), spaced(p)]).collect();
    Ok(Report::new(
        json!({ "n": n, "set": sorted, "count": class.len(), "permutations": perms }),
        vec!["n", "permutation"],
        rows,
    ))
}

fn witness_cmd(n: usize, set: &str) -> CmdResult {
    check_n(n)?;
    let s = PeakSet::parse(n, set)?;
    let w = witness(&s)?;
    let cp = w.circular_peak_set();
    Ok(Report::new(
        json!({ "n": n, "set": s.elements(), "witness": w.values(), "cp": cp }),
        vec!["n", "set", "witness", "cp"],
        vec![vec![n.to_string(), spaced(s.elements()), spaced(w.values()), spaced(&cp)]],
    ))
}

fn dyck(n: Option<usize>, set: Option<&str>, word: Option<&str>) -> CmdResult {
    let (s, w) = match (set, word) {
        (Some(_), Some(_)) => return Err(usage("give either --set or --word, not both")),
        (None, None) => return Err(usage("dyck needs --set (with --n) or --word")),
        (Some(set), None) => {
            let n = n.ok_or_else(|| usage("dyck --set needs --n"))?;
            check_n(n)?;
            let s = PeakSet::parse(n, set)?;
            let w = to_dyck(&s)?;
            (s, w)
        }
        (None, Some(word)) => {
            let w: DyckPrefix = word.parse()?;
            let n = n.unwrap_or(w.len() + 1);
            check_n(n)?;
            (from_dyck(n, &w)?, w)
        }
    };
    let (len, height) = w.endpoint();
    Ok(Report::new(
        json!({ "n": s.n(), "set": s.elements(), "word": w.to_string(), "endpoint": [len, height] }),
        vec!["n", "set", "word", "length", "height"],
        vec![vec![
            s.n().to_string(),
            spaced(s.elements()),
            w.to_string(),
            len.to_string(),
            height.to_string(),
        ]],
    ))
}

fn faces_cmd(n: usize, dim: Option<isize>) -> CmdResult {
    check_poset_n(n, "faces")?;
    if let Some(dim) = dim {
        let list = faces(n, dim);
        let sets: Vec<&[usize]> = list.iter().map(PeakSet::elements).collect();
        let rows = sets.iter().map(|s| vec![dim.to_string(), spaced(s)]).collect();
        return Ok(Report::new(
            json!({ "n": n, "dim": dim, "count": list.len(), "faces": sets }),
            vec!["dim", "face"],
            rows,
        ));
    }
    let complex = PeakComplex::new(n)?;
    let covers = complex.covers();
    let sets: Vec<&[usize]> = complex.faces().iter().map(PeakSet::elements).collect();
    let rows = complex
        .faces()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let above: Vec<usize> = covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect();
            vec![i.to_string(), f.dim().to_string(), spaced(f.elements()), spaced(&above)]
        })
        .collect();
    Ok(Report::new(
        json!({ "n": n, "count": sets.len(), "faces": sets, "covers": covers }),
        vec!["index", "dim", "face", "covered_by"],
        rows,
    ))
}

fn fvector(n: usize) -> CmdResult {
    check_n(n)?;
    let table = face_table(n);
    let rows = table
        .rows()
        .map(|(dim, count)| vec![n.to_string(), dim.to_string(), count.to_string()])
        .collect();
    Ok(Report::new(
        json!({ "n": n, "f": strings(&table.f), "polynomial": f_polynomial(n).to_string() }),
        vec!["n", "dim", "count"],
        rows,
    ))
}

fn hvector(n: usize) -> CmdResult {
    check_n(n)?;
    let h = h_vector(n)?;
    let rows = h
        .h
        .iter()
        .enumerate()
        .map(|(i, v)| vec![n.to_string(), i.to_string(), v.to_string()])
        .collect();
    Ok(Report::new(
        json!({ "n": n, "h": strings(&h.h), "polynomial": h_polynomial(n).to_string() }),
        vec!["n", "i", "h"],
        rows,
    ))
}

fn zeta_cmd(n: usize, i: Option<usize>) -> CmdResult {
    check_n(n)?;
    match i {
        Some(i) => {
            let value = zeta(n, i)?;
            Ok(Report::new(
                json!({ "n": n, "i": i, "zeta": value.to_string() }),
                vec!["n", "i", "zeta"],
                vec![vec![n.to_string(), i.to_string(), value.to_string()]],
            ))
        }
        None => {
            let p = zeta_polynomial(n);
            let rows = p
                .coeff_strings()
                .into_iter()
                .enumerate()
                .map(|(k, c)| vec![n.to_string(), k.to_string(), c])
                .collect();
            Ok(Report::new(
                json!({ "n": n, "coefficients": p.coeff_strings(), "polynomial": p.to_string() }),
                vec!["n", "degree", "coefficient"],
                rows,
            ))
        }
    }
}

fn chains(n: usize, i: Option<usize>) -> CmdResult {
    check_n(n)?;
    let longest = max_peak_count(n) + 1;
    let range = match i {
        Some(0) => return Err(usage("--i must be at least 1")),
        Some(i) => i..=i,
        None => 1..=longest,
    };
    let complex = if n <= POSET_CAP {
        Some(PeakComplex::new(n)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for i in range {
        let value = rational_to_string(&chain_count_formula(n, i));
        let oracle = match &complex {
            Some(_) => Some(chain_oracle(n, i)?.to_string()),
            None => None,
        };
        let matched = oracle.as_ref().map(|o| *o == value);
        items.push(json!({ "n": n, "i": i, "value": value, "oracle_value": oracle, "match": matched }));
        rows.push(vec![
            n.to_string(),
            i.to_string(),
            value,
            oracle.unwrap_or_default(),
            matched.map(|m| m.to_string()).unwrap_or_default(),
        ]);
    }
    Ok(Report::new(
        Value::Array(items),
        vec!["n", "i", "value", "oracle_value", "match"],
        rows,
    ))
}

fn moebius_cmd(n: usize, set: &str, upper: Option<&str>) -> CmdResult {
    check_poset_n(n, "moebius")?;
    let lower = PeakSet::parse(n, set)?;
    lower.check_valid()?;
    let complex = PeakComplex::new(n)?;
    let from = complex.index_of(&lower).expect("valid faces are enumerated");
    let oracle = complex.moebius_from(from);
    let targets: Vec<usize> = match upper {
        Some(text) => {
            let t = PeakSet::parse(n, text)?;
            t.check_valid()?;
            if !lower.is_subset(&t) {
                return Err(usage(format!("{lower} is not contained in {t}")));
            }
            vec![complex.index_of(&t).expect("valid faces are enumerated")]
        }
        None => (0..complex.len()).filter(|&j| oracle[j].is_some()).collect(),
    };
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for j in targets {
        let t = &complex.faces()[j];
        let mu = moebius(&lower, t)?;
        let rec = oracle[j].expect("target lies above the lower face");
        items.push(json!({ "lower": lower.elements(), "upper": t.elements(), "mu": mu, "oracle": rec }));
        rows.push(vec![
            spaced(lower.elements()),
            spaced(t.elements()),
            mu.to_string(),
            rec.to_string(),
        ]);
    }
    Ok(Report::new(
        json!({ "n": n, "intervals": items }),
        vec!["lower", "upper", "mu", "oracle"],
        rows,
    ))
}

fn euler(n: usize) -> CmdResult {
    check_n(n)?;
    let chi = rational_to_string(&euler_characteristic(n));
    let closed = rational_to_string(&euler_characteristic_closed_form(n));
    Ok(Report::new(
        json!({ "n": n, "euler": chi, "closed_form": closed }),
        vec!["n", "euler", "closed_form"],
        vec![vec![n.to_string(), chi, closed]],
    ))
}

fn hilbert(n: usize, algebra: AlgebraArg, order: Option<usize>) -> CmdResult {
    check_n(n)?;
    let algebra = match algebra {
        AlgebraArg::A => Algebra::A,
        AlgebraArg::B => Algebra::B,
    };
    let order = match (order, algebra) {
        (Some(o), _) if o > HILBERT_ORDER_CAP => {
            return Err(usage(format!("--order is limited to {HILBERT_ORDER_CAP}, got {o}")))
        }
        (Some(o), _) => o,
        (None, Algebra::A) => 10,
        (None, Algebra::B) => max_peak_count(n) + 1,
    };
    let dims = graded_dimensions(n, algebra, order);
    let rows = dims
        .dims
        .iter()
        .enumerate()
        .map(|(i, d)| vec![n.to_string(), algebra.to_string(), i.to_string(), d.to_string()])
        .collect();
    let mut json = json!({ "n": n, "algebra": algebra, "dims": strings(&dims.dims) });
    match algebra {
        Algebra::A => {
            let form = numerator_a(n);
            json["hilbert_polynomial"] = json!(hilbert_polynomial_a(n).to_string());
            json["numerator"] = json!(form.numerator.coeff_strings());
            json["denominator_exponent"] = json!(form.denominator_exponent);
        }
        Algebra::B => {
            json["series"] = json!(hilbert_series_b(n).coeff_strings());
        }
    }
    Ok(Report::new(json, vec!["n", "algebra", "degree", "dim"], rows))
}

fn series(which: Which, order: usize) -> CmdResult {
    if order > SERIES_ORDER_CAP {
        return Err(usage(format!("--order is limited to {SERIES_ORDER_CAP}, got {order}")));
    }
    let (name, expansion, printed, expected): (_, BiSeries, _, fn(usize) -> ExactPoly) = match which {
        Which::P => ("P", f_generating_series(order), printed_f_generating_form(order), f_polynomial),
        Which::H => ("H", h_generating_series(order), printed_h_generating_form(order), h_polynomial),
    };
    let report = check_generating_form(printed, order, expected);
    let mut coefficients = Vec::new();
    let mut rows = Vec::new();
    for k in 3..=order {
        let c = expansion.coeff(k);
        for (d, v) in c.coeff_strings().into_iter().enumerate() {
            rows.push(vec![k.to_string(), d.to_string(), v]);
        }
        coefficients.push(json!({ "n": k, "coefficients": c.coeff_strings(), "polynomial": c.to_string() }));
    }
    Ok(Report::new(
        json!({
            "which": name,
            "order": order,
            "coefficients": coefficients,
            "printed_form": {
                "matches": report.matches(),
                "first_mismatch": report.first_mismatch,
                "detail": report.detail,
            },
        }),
        vec!["n", "degree", "coefficient"],
        rows,
    ))
}

fn verify_cmd(suite: &str, max_n: Option<usize>) -> CmdResult {
    let config = VerifyConfig::new(max_n)?;
    let checks = verify::run(suite, &config)?;
    let failed = checks.iter().any(Check::failed);
    let rows = checks
        .iter()
        .map(|c| vec![c.suite.to_string(), c.name.clone(), c.outcome.to_string(), c.detail.clone()])
        .collect();
    let mut report = Report::new(
        serde_json::to_value(&checks).map_err(|e| usage(e.to_string()))?,
        vec!["suite", "check", "outcome", "detail"],
        rows,
    );
    report.default_text = Some(verify_table(&checks));
    report.failed = failed;
    Ok(report)
}

fn verify_table(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.suite.len()).max().unwrap_or(0);
    let mut text = String::new();
    for c in checks {
        text += &format!("{:<10} {:<width$}  {}  ({})\n", c.outcome, c.suite, c.name, c.detail);
    }
    let count = |o| checks.iter().filter(|c| c.outcome == o).count();
    text += &format!(
        "{} checks: {} passed, {} documented, {} failed\n",
        checks.len(),
        count(Outcome::Pass),
        count(Outcome::Documented),
        count(Outcome::Fail)
    );
    text
}
