//! `fc`: full-commutativity toolkit for the groups G(m,p,n).
//!
//! Exit codes: 0 pass, 1 verification or table mismatch, 2 usage error,
//! 3 compute cap exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fc_core::app::{self, Method};
use fc_core::canonical;
use fc_core::cayley::DEFAULT_ELEMENT_CAP;
use fc_core::group::{format_element, make_group, parse_element, GensetKind, GroupSpec};
use fc_core::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "fc", version, about = "fully commutative elements of G(m,p,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMethod {
    Brute,
    Criterion,
    Patterns,
}

#[derive(Args)]
struct GroupArgs {
    /// Group parameters as m,p,n (e.g. 3,1,4)
    #[arg(long, value_parser = parse_group_triple)]
    group: (u32, u32, usize),
    /// Generating set: coxeterB|gm1n|classical|affine|star|symAdjacent|symStar
    #[arg(long, value_parser = parse_genset)]
    gens: GensetKind,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
    /// Group-order cap (elements explored)
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: u128,
    /// Allow the large gated table columns (slow)
    #[arg(long)]
    big: bool,
    /// Print witnesses/evidence with the verdict
    #[arg(long)]
    explain: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List all fully commutative elements, sorted by (length, text)
    List {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decide full commutativity of one element
    Check {
        #[command(flatten)]
        group: GroupArgs,
        /// Element text, e.g. "321;(1,1,1)"
        element: String,
        /// Decision procedure
        #[arg(long, value_enum, default_value = "brute")]
        method: CheckMethod,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print the canonical reduced word of one element
    Canonical {
        #[command(flatten)]
        group: GroupArgs,
        element: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Per-length counts of fully commutative elements
    Count {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Recompute a published table and diff it cell by cell
    Table {
        /// Table id: 2, 4, 4r, 5, or 6
        id: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a named verifier (pi, deciders, counts, star, mm3, all)
    Verify {
        name: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit per-length totals and first differences for a family
    Conjectures {
        /// Family: affine, star, or classical
        family: String,
        /// Rank n
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Inclusive parameter range lo..hi for m
        #[arg(long, default_value = "2,6", value_parser = parse_range)]
        params: (u32, u32),
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_group_triple(s: &str) -> Result<(u32, u32, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected m,p,n".to_string());
    }
    let m = parts[0].trim().parse().map_err(|_| "bad m")?;
    let p = parts[1].trim().parse().map_err(|_| "bad p")?;
    let n = parts[2].trim().parse().map_err(|_| "bad n")?;
    Ok((m, p, n))
}

fn parse_genset(s: &str) -> Result<GensetKind, String> {
    GensetKind::parse(s).ok_or_else(|| format!("unknown generating set {s}"))
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected lo,hi".to_string());
    }
    let lo = parts[0].trim().parse().map_err(|_| "bad lo")?;
    let hi = parts[1].trim().parse().map_err(|_| "bad hi")?;
    Ok((lo, hi))
}

fn spec_of(args: &GroupArgs) -> Result<GroupSpec, Error> {
    let (m, p, n) = args.group;
    make_group(m, p, n, args.gens)
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::GroupCapExceeded { .. }
        | Error::WordCapExceeded { .. }
        | Error::ClassCapExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

#[derive(Serialize)]
struct HistogramOut {
    schema_version: u32,
    m: u32,
    p: u32,
    n: usize,
    genset: String,
    counts: Vec<(usize, u64)>,
    total: u64,
}

fn render_histogram(hist: &app::LengthHistogram, format: Format) -> String {
    let rows: Vec<(usize, u64)> = hist
        .counts
        .iter()
        .enumerate()
        .map(|(l, &c)| (l, c))
        .collect();
    match format {
        Format::Csv => {
            let mut out = String::from("length,count\n");
            for (l, c) in &rows {
                out.push_str(&format!("{l},{c}\n"));
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(&HistogramOut {
            schema_version: SCHEMA_VERSION,
            m: hist.m,
            p: hist.p,
            n: hist.n,
            genset: hist.genset.as_str().to_string(),
            counts: rows,
            total: hist.total(),
        })
        .expect("serializable")
            + "\n",
        Format::Md => {
            let mut out = String::from("| length | count |\n|---:|---:|\n");
            for (l, c) in &rows {
                out.push_str(&format!("| {l} | {c} |\n"));
            }
            out.push_str(&format!("| total | {} |\n", hist.total()));
            out
        }
    }
}

#[derive(Serialize)]
struct ListOut {
    schema_version: u32,
    m: u32,
    p: u32,
    n: usize,
    genset: String,
    elements: Vec<(u32, String)>,
}

fn run_list(group: &GroupArgs, common: &CommonArgs) -> Result<ExitCode, Error> {
    let spec = spec_of(group)?;
    let listing = app::fc_element_listing(&spec, common.cap)?;
    match common.format {
        Format::Csv => {
            println!("length,element");
            for (l, text) in &listing {
                println!("{l},{text}");
            }
        }
        Format::Json => {
            let out = ListOut {
                schema_version: SCHEMA_VERSION,
                m: spec.m,
                p: spec.p,
                n: spec.n,
                genset: spec.genset.as_str().to_string(),
                elements: listing,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Md => {
            println!("| length | element |\n|---:|:---|");
            for (l, text) in &listing {
                println!("| {l} | {text} |");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CheckOut {
    schema_version: u32,
    element: String,
    length: u32,
    fully_commutative: bool,
    method: String,
    reduced_expression_count: Option<String>,
    canonical_word: Option<String>,
    pattern_witness: Option<(String, Vec<usize>)>,
}

fn run_check(
    group: &GroupArgs,
    element: &str,
    method: CheckMethod,
    common: &CommonArgs,
) -> Result<ExitCode, Error> {
    let spec = spec_of(group)?;
    let (method, name) = match method {
        CheckMethod::Brute => (Method::Brute, "brute"),
        CheckMethod::Criterion => (Method::Criterion, "criterion"),
        CheckMethod::Patterns => (Method::Patterns, "patterns"),
    };
    let res = app::check_element(&spec, element, method, common.cap)?;
    match common.format {
        Format::Json => {
            let out = CheckOut {
                schema_version: SCHEMA_VERSION,
                element: format_element(&res.element),
                length: res.length,
                fully_commutative: res.fully_commutative,
                method: name.to_string(),
                reduced_expression_count: res
                    .reduced_expression_count
                    .as_ref()
                    .map(|c| c.to_string()),
                canonical_word: res.canonical_word.clone(),
                pattern_witness: res.pattern_witness.clone(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        _ => {
            let verdict = if res.fully_commutative {
                "fully commutative"
            } else {
                "NOT fully commutative"
            };
            println!(
                "{} (length {}): {verdict} [{name}]",
                format_element(&res.element),
                res.length
            );
            if common.explain {
                if let Some(count) = &res.reduced_expression_count {
                    println!("  reduced expressions: {count}");
                }
                if let Some(word) = &res.canonical_word {
                    println!("  canonical word: {word}");
                }
                if let Some((pattern, cols)) = &res.pattern_witness {
                    let cols: Vec<usize> = cols.iter().map(|c| c + 1).collect();
                    println!("  contains pattern {pattern} at columns {cols:?}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_canonical(group: &GroupArgs, element: &str, common: &CommonArgs) -> Result<ExitCode, Error> {
    let spec = spec_of(group)?;
    let g = parse_element(element, &spec)?;
    let word = canonical::canonical_word(&spec, &g)?;
    if common.explain {
        let expanded = canonical::word_from_canonical(&word);
        println!("{word}  ->  {expanded}");
    } else {
        println!("{word}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_count(group: &GroupArgs, common: &CommonArgs) -> Result<ExitCode, Error> {
    let spec = spec_of(group)?;
    let hist = app::fc_histogram(&spec, common.cap)?;
    print!("{}", render_histogram(&hist, common.format));
    Ok(ExitCode::SUCCESS)
}

/// Columns above these parameters are slow enough to gate behind --big.
fn param_limit(table_id: &str, big: bool) -> u64 {
    if big {
        return u64::MAX;
    }
    match table_id {
        "2" => 5,
        "4r" => 4,
        _ => u64::MAX,
    }
}

#[derive(Serialize)]
struct TableOut {
    schema_version: u32,
    table: String,
    columns: Vec<TableColumnOut>,
    matches: bool,
}

#[derive(Serialize)]
struct TableColumnOut {
    param: u64,
    computed: Vec<u64>,
    expected: Vec<u64>,
    mismatched_lengths: Vec<usize>,
}

fn run_table(id: &str, common: &CommonArgs) -> Result<ExitCode, Error> {
    let limit = param_limit(id, common.big);
    if limit != u64::MAX {
        eprintln!(
            "note: columns with parameter > {limit} are skipped; pass --big to compute them (slow)"
        );
    }
    let rep = app::reproduce_table(id, limit, common.cap)?;
    match common.format {
        Format::Json => {
            let out = TableOut {
                schema_version: SCHEMA_VERSION,
                table: rep.table_id.clone(),
                columns: rep
                    .columns
                    .iter()
                    .map(|c| TableColumnOut {
                        param: c.param,
                        computed: c.computed.clone(),
                        expected: c.expected.clone(),
                        mismatched_lengths: c.mismatched_lengths.clone(),
                    })
                    .collect(),
                matches: rep.matches(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Csv => {
            println!("param,length,count");
            for col in &rep.columns {
                for (l, c) in col.computed.iter().enumerate() {
                    println!("{},{l},{c}", col.param);
                }
            }
        }
        Format::Md => {
            let width = rep
                .columns
                .iter()
                .map(|c| c.computed.len())
                .max()
                .unwrap_or(0);
            print!("| length |");
            for col in &rep.columns {
                print!(" {} |", col.param);
            }
            println!();
            print!("|---:|");
            for _ in &rep.columns {
                print!("---:|");
            }
            println!();
            for l in 0..width {
                print!("| {l} |");
                for col in &rep.columns {
                    print!(" {} |", col.computed.get(l).copied().unwrap_or(0));
                }
                println!();
            }
            print!("| total |");
            for col in &rep.columns {
                print!(" {} |", col.computed.iter().sum::<u64>());
            }
            println!();
        }
    }
    // keep stdout clean for csv/json consumers; the diff goes to stderr
    if rep.matches() {
        eprintln!("table {id}: all cells match");
        Ok(ExitCode::SUCCESS)
    } else {
        for col in &rep.columns {
            if !col.matches() {
                eprintln!(
                    "table {id} column {}: mismatch at lengths {:?} (computed {:?}, expected {:?})",
                    col.param, col.mismatched_lengths, col.computed, col.expected
                );
            }
        }
        Ok(ExitCode::from(1))
    }
}

fn run_verify(name: &str, common: &CommonArgs) -> Result<ExitCode, Error> {
    let cap = common.cap;
    let mut reports = Vec::new();
    let all = name == "all";
    if all || name == "pi" {
        for (m, n) in [(3u32, 3usize), (4, 3), (3, 4)] {
            reports.push(app::verify_pi_theorem(m, n, cap)?);
        }
    }
    if all || name == "deciders" {
        for spec in [
            make_group(2, 1, 4, GensetKind::CoxeterB)?,
            make_group(3, 1, 3, GensetKind::Gm1n)?,
        ] {
            reports.push(app::verify_decider_agreement(&spec, cap)?);
        }
    }
    if all || name == "counts" {
        for (m, n) in [(3u32, 3usize), (4, 3), (3, 4)] {
            reports.push(app::verify_counts(m, n, cap)?);
        }
    }
    if all || name == "star" {
        for n in [4usize, 5] {
            reports.push(app::verify_star_factorizations(n, cap)?);
        }
    }
    if all || name == "mm3" {
        for m in 3..=5u32 {
            reports.push(app::verify_unique_expression_mm3(m, cap)?);
        }
    }
    if reports.is_empty() {
        eprintln!("unknown verifier {name}; expected pi, deciders, counts, star, mm3, or all");
        return Ok(ExitCode::from(2));
    }
    let mut failed = false;
    for rep in &reports {
        let status = if rep.passed() { "pass" } else { "FAIL" };
        println!(
            "{status} {} ({}, {:.2?})",
            rep.check_id, rep.universe, rep.elapsed
        );
        if !rep.passed() {
            failed = true;
            if common.explain {
                for c in &rep.counterexamples {
                    println!("  counterexample: {c}");
                }
            }
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_conjectures(
    family: &str,
    n: usize,
    params: (u32, u32),
    common: &CommonArgs,
) -> Result<ExitCode, Error> {
    let data = app::conjecture_data(family, n, params.0..=params.1, common.cap)?;
    println!("family {family}, n = {n}, m = {}..={}", params.0, params.1);
    for (hist, total) in data.histograms.iter().zip(&data.totals) {
        println!(
            "m = {}: total {total}, by length {:?}",
            hist.m, hist.counts
        );
    }
    println!("first differences of totals: {:?}", data.differences);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::List { group, common } => run_list(group, common),
        Command::Check {
            group,
            element,
            method,
            common,
        } => run_check(group, element, *method, common),
        Command::Canonical {
            group,
            element,
            common,
        } => run_canonical(group, element, common),
        Command::Count { group, common } => run_count(group, common),
        Command::Table { id, common } => run_table(id, common),
        Command::Verify { name, common } => run_verify(name, common),
        Command::Conjectures {
            family,
            n,
            params,
            common,
        } => run_conjectures(family, *n, *params, common),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_for(&err)
        }
    }
}
