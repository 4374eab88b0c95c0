//! `conemin` — minimum generators of convex cones from the command line.
//!
//! Subcommands: `member`, `reduce`, `minimize`, `lineality`,
//! `decompose`, `verify`, `random`. Generator files go in and come out
//! in the same plain-text format, so commands compose in pipelines.
//!
//! Exit codes: 0 for success (including "is a member"), 1 for a
//! negative result (non-member, failed verification), 2 for usage and
//! parse errors.

mod conefile;
mod report;

use conefile::{format_cone_file, parse_cone_file, parse_row};
use conemin_core::cone::{
    decompose_jobs, lineal_part_jobs, member, minimize, reduce_ci, GeneratorSet,
};
use conemin_core::linalg::{extract_basis, RVector};
use conemin_core::lp::{solve_feasibility, FeasibilityResult};
use conemin_core::oracle::{random_instance, verify_minimum, InstanceSpec};
use report::{decimal_string, digest, json_indices, json_vector, json_vectors, Json};

const USAGE: &str = "\
conemin — minimum-cardinality generators of convex cones (exact rational arithmetic)

usage: conemin <command> [arguments] [flags]

commands:
  member <file> <point>       test whether the point (quoted rationals, e.g. \"1 1\")
                              lies in the cone; prints the coefficient certificate
                              or the Farkas witness (exit 1 on non-membership)
  reduce <file>               remove generators contained in the cone of the others
  minimize <file>             compute a minimum-cardinality generator
  lineality <file>            print the generators lying in the lineality space
  decompose <file>            report lineal part, conic part, lineality basis, and
                              the projected conic part
  verify <file> <candidate>   check that the candidate file is a minimum generator
                              of the first file's cone (exit 1 when it is not)
  random --n N --m M [--d D] [--seed S] [--bound B]
                              emit a seeded random generator file (defaults:
                              d = 0, seed = 0, bound = 5)

flags:
  --format text|json          output format (default text)
  --jobs N                    worker threads for the lineality membership tests
  --decimal K                 render text-mode rationals as K-digit decimals;
                              lossy, marked with a comment, not valid as input
";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}

fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            2
        }
    }
}

fn dispatch(args: &[String]) -> Result<i32, String> {
    let command = match args.first() {
        Some(c) => c.as_str(),
        None => return Err("missing command (try `conemin help`)".to_string()),
    };
    let rest = &args[1..];
    match command {
        "member" => cmd_member(rest),
        "reduce" => cmd_reduce_or_minimize(rest, false),
        "minimize" => cmd_reduce_or_minimize(rest, true),
        "lineality" => cmd_lineality(rest),
        "decompose" => cmd_decompose(rest),
        "verify" => cmd_verify(rest),
        "random" => cmd_random(rest),
        "help" | "--help" | "-h" => {
            print!("{}", USAGE);
            Ok(0)
        }
        other => Err(format!("unknown command `{}` (try `conemin help`)", other)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
}

struct Options {
    positionals: Vec<String>,
    format: OutputFormat,
    jobs: usize,
    decimal: Option<usize>,
    named: Vec<(String, String)>,
}

impl Options {
    fn named_value(&self, key: &str) -> Option<&str> {
        self.named
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

/// Splits arguments into positionals, the shared flags, and whatever
/// named `--key value` flags the command allows.
fn parse_options(args: &[String], allowed_named: &[&str]) -> Result<Options, String> {
    let mut opts = Options {
        positionals: Vec::new(),
        format: OutputFormat::Text,
        jobs: 1,
        decimal: None,
        named: Vec::new(),
    };
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        if let Some(name) = arg.strip_prefix("--") {
            let value = iter
                .next()
                .ok_or_else(|| format!("flag --{} requires a value", name))?;
            match name {
                "format" => {
                    opts.format = match value.as_str() {
                        "text" => OutputFormat::Text,
                        "json" => OutputFormat::Json,
                        other => return Err(format!("invalid format `{}`", other)),
                    };
                }
                "jobs" => {
                    opts.jobs = value
                        .parse::<usize>()
                        .ok()
                        .filter(|&j| j >= 1)
                        .ok_or_else(|| format!("invalid job count `{}`", value))?;
                }
                "decimal" => {
                    opts.decimal = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| format!("invalid digit count `{}`", value))?,
                    );
                }
                _ if allowed_named.contains(&name) => {
                    opts.named.push((name.to_string(), value.clone()));
                }
                _ => return Err(format!("unknown flag --{}", name)),
            }
        } else {
            opts.positionals.push(arg.clone());
        }
    }
    Ok(opts)
}

fn load_generators(path: &str) -> Result<GeneratorSet, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
    parse_cone_file(&text).map_err(|e| format!("{}: {}", path, e))
}

fn render_vector(v: &RVector, decimal: Option<usize>) -> String {
    match decimal {
        None => v.to_string(),
        Some(k) => v
            .entries()
            .iter()
            .map(|r| decimal_string(r, k))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

const LOSSY_MARK: &str = "# decimal approximation (lossy)\n";

/// Generator rows in the cone-file format; with `--decimal` the rows
/// are approximations and the output is marked as such.
fn render_generator_output(s: &GeneratorSet, decimal: Option<usize>) -> String {
    match decimal {
        None => format_cone_file(s),
        Some(k) => {
            let mut out = String::from(LOSSY_MARK);
            out.push_str(&format!("{} {}\n", s.ambient_dim(), s.len()));
            for v in s.vectors() {
                out.push_str(&render_vector(v, Some(k)));
                out.push('\n');
            }
            out
        }
    }
}

fn input_fields(op: &'static str, s: &GeneratorSet) -> Vec<(&'static str, Json)> {
    vec![
        ("operation", Json::Str(op.to_string())),
        ("input_digest", Json::Str(digest(&format_cone_file(s)))),
        ("ambient_dim", Json::UInt(s.ambient_dim())),
        ("input_size", Json::UInt(s.len())),
    ]
}

fn cmd_member(args: &[String]) -> Result<i32, String> {
    let opts = parse_options(args, &[])?;
    let [file, point] = opts.positionals.as_slice() else {
        return Err("member needs <file> and <point>".to_string());
    };
    let s = load_generators(file)?;
    let c = parse_row(0, point, s.ambient_dim()).map_err(|e| format!("point: {}", e))?;

    let system = s.feasibility_system(&c);
    let result = solve_feasibility(&system);
    let mut fields = input_fields("member", &s);
    fields.push(("point", json_vector(&c)));
    match result {
        FeasibilityResult::Feasible(y) => {
            fields.push(("member", Json::Bool(true)));
            fields.push(("lambda", json_vector(&y)));
            match opts.format {
                OutputFormat::Text => {
                    println!("member: yes");
                    println!("lambda: {}", render_vector(&y, opts.decimal));
                }
                OutputFormat::Json => println!("{}", Json::Object(fields)),
            }
            Ok(0)
        }
        FeasibilityResult::Infeasible(z) => {
            fields.push(("member", Json::Bool(false)));
            fields.push(("farkas", json_vector(&z)));
            match opts.format {
                OutputFormat::Text => {
                    println!("member: no");
                    println!("farkas: {}", render_vector(&z, opts.decimal));
                }
                OutputFormat::Json => println!("{}", Json::Object(fields)),
            }
            Ok(1)
        }
    }
}

fn cmd_reduce_or_minimize(args: &[String], minimizing: bool) -> Result<i32, String> {
    let opts = parse_options(args, &[])?;
    let [file] = opts.positionals.as_slice() else {
        return Err(format!(
            "{} needs exactly one <file>",
            if minimizing { "minimize" } else { "reduce" }
        ));
    };
    let s = load_generators(file)?;
    let out = if minimizing { minimize(&s) } else { reduce_ci(&s) };

    match opts.format {
        OutputFormat::Text => print!("{}", render_generator_output(&out, opts.decimal)),
        OutputFormat::Json => {
            let op: &'static str = if minimizing { "minimize" } else { "reduce" };
            let mut fields = input_fields(op, &s);
            fields.push(("output_size", Json::UInt(out.len())));
            if minimizing {
                // The lineality dimension of the cone, read off the
                // (small) output set.
                let d = decompose_jobs(&out, opts.jobs).lineality_dim;
                fields.push(("lineality_dim", Json::UInt(d)));
            }
            fields.push(("output", json_vectors(out.vectors())));
            println!("{}", Json::Object(fields));
        }
    }
    Ok(0)
}

fn cmd_lineality(args: &[String]) -> Result<i32, String> {
    let opts = parse_options(args, &[])?;
    let [file] = opts.positionals.as_slice() else {
        return Err("lineality needs exactly one <file>".to_string());
    };
    let s = load_generators(file)?;
    let lineal_indices = lineal_part_jobs(&s, opts.jobs);
    let lineal = s.subset(&lineal_indices);
    let basis_indices: Vec<usize> = extract_basis(lineal.vectors())
        .into_iter()
        .map(|pos| lineal_indices[pos])
        .collect();

    match opts.format {
        OutputFormat::Text => print!("{}", render_generator_output(&lineal, opts.decimal)),
        OutputFormat::Json => {
            let mut fields = input_fields("lineality", &s);
            fields.push(("lineal_indices", json_indices(&lineal_indices)));
            fields.push(("basis_indices", json_indices(&basis_indices)));
            fields.push(("lineality_dim", Json::UInt(basis_indices.len())));
            fields.push(("output_size", Json::UInt(lineal.len())));
            fields.push(("output", json_vectors(lineal.vectors())));
            println!("{}", Json::Object(fields));
        }
    }
    Ok(0)
}

fn cmd_decompose(args: &[String]) -> Result<i32, String> {
    let opts = parse_options(args, &[])?;
    let [file] = opts.positionals.as_slice() else {
        return Err("decompose needs exactly one <file>".to_string());
    };
    let s = load_generators(file)?;
    let d = decompose_jobs(&s, opts.jobs);

    match opts.format {
        OutputFormat::Text => {
            let mut out = String::new();
            if opts.decimal.is_some() {
                out.push_str(LOSSY_MARK);
            }
            out.push_str(&format!("ambient_dim: {}\n", s.ambient_dim()));
            out.push_str(&format!("lineality_dim: {}\n", d.lineality_dim));
            out.push_str(&index_line("lineal_indices", &d.lineal_indices));
            out.push_str(&index_line("conic_indices", &d.conic_indices));
            out.push_str(&index_line("basis_indices", &d.basis_indices));
            out.push_str("projected_conic:\n");
            for v in &d.projected_conic {
                out.push_str(&render_vector(v, opts.decimal));
                out.push('\n');
            }
            print!("{}", out);
        }
        OutputFormat::Json => {
            let mut fields = input_fields("decompose", &s);
            fields.push(("lineality_dim", Json::UInt(d.lineality_dim)));
            fields.push(("lineal_indices", json_indices(&d.lineal_indices)));
            fields.push(("conic_indices", json_indices(&d.conic_indices)));
            fields.push(("basis_indices", json_indices(&d.basis_indices)));
            fields.push(("projected_conic", json_vectors(&d.projected_conic)));
            println!("{}", Json::Object(fields));
        }
    }
    Ok(0)
}

fn index_line(label: &str, ix: &[usize]) -> String {
    if ix.is_empty() {
        format!("{}:\n", label)
    } else {
        let joined = ix
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        format!("{}: {}\n", label, joined)
    }
}

fn cmd_verify(args: &[String]) -> Result<i32, String> {
    let opts = parse_options(args, &[])?;
    let [file, candidate_file] = opts.positionals.as_slice() else {
        return Err("verify needs <file> and <candidate-file>".to_string());
    };
    let s = load_generators(file)?;
    let g = load_generators(candidate_file)?;
    if s.ambient_dim() != g.ambient_dim() {
        return Err(format!(
            "dimension mismatch: {} is {}-dimensional, {} is {}-dimensional",
            file,
            s.ambient_dim(),
            candidate_file,
            g.ambient_dim()
        ));
    }

    let report = verify_minimum(&s, &g);
    let mut issues: Vec<String> = Vec::new();
    if !report.generates_same_cone {
        for (i, v) in s.vectors().iter().enumerate() {
            if member(v, &g).is_none() {
                issues.push(format!(
                    "input row {} ({}) is not generated by the candidate",
                    i, v
                ));
            }
        }
        for (j, w) in g.vectors().iter().enumerate() {
            if member(w, &s).is_none() {
                issues.push(format!("candidate row {} ({}) lies outside the input cone", j, w));
            }
        }
    } else if !report.size_matches() {
        issues.push(format!(
            "candidate has {} generators, recomputed minimum is {}",
            report.candidate_size, report.expected_size
        ));
        for j in 0..g.len() {
            let others: Vec<usize> = (0..g.len()).filter(|&k| k != j).collect();
            if member(g.vector(j), &g.subset(&others)).is_some() {
                issues.push(format!(
                    "candidate row {} ({}) is redundant: it lies in the cone of the other rows",
                    j,
                    g.vector(j)
                ));
                break;
            }
        }
    } else if let Some(b) = report.bruteforce_size {
        if b != report.candidate_size {
            issues.push(format!(
                "brute-force subset minimum {} disagrees with candidate size {}",
                b, report.candidate_size
            ));
        }
    }
    let ok = report.passed();

    match opts.format {
        OutputFormat::Text => {
            if ok {
                let brute = match report.bruteforce_size {
                    Some(b) => format!(", brute force agrees ({})", b),
                    None => String::new(),
                };
                println!(
                    "verify: ok (candidate size {} = recomputed minimum {}{})",
                    report.candidate_size, report.expected_size, brute
                );
            } else {
                println!("verify: FAIL");
                for issue in &issues {
                    println!("  - {}", issue);
                }
            }
        }
        OutputFormat::Json => {
            let mut fields = input_fields("verify", &s);
            fields.push((
                "candidate_digest",
                Json::Str(digest(&format_cone_file(&g))),
            ));
            fields.push(("candidate_size", Json::UInt(report.candidate_size)));
            fields.push(("expected_size", Json::UInt(report.expected_size)));
            fields.push(("lineality_dim", Json::UInt(report.lineality_dim)));
            fields.push((
                "bruteforce_size",
                report.bruteforce_size.map_or(Json::Null, Json::UInt),
            ));
            fields.push(("cone_equal", Json::Bool(report.generates_same_cone)));
            fields.push(("ok", Json::Bool(ok)));
            fields.push((
                "issues",
                Json::Array(issues.iter().map(|i| Json::Str(i.clone())).collect()),
            ));
            println!("{}", Json::Object(fields));
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_random(args: &[String]) -> Result<i32, String> {
    let opts = parse_options(args, &["n", "m", "d", "seed", "bound"])?;
    if !opts.positionals.is_empty() {
        return Err("random takes no positional arguments".to_string());
    }
    let parse_num = |key: &str, default: Option<u64>| -> Result<u64, String> {
        match opts.named_value(key) {
            Some(v) => v
                .parse::<u64>()
                .map_err(|_| format!("invalid value for --{}: `{}`", key, v)),
            None => default.ok_or_else(|| format!("random requires --{}", key)),
        }
    };
    let n = parse_num("n", None)?;
    let m = parse_num("m", None)?;
    let d = parse_num("d", Some(0))?;
    let seed = parse_num("seed", Some(0))?;
    let bound = parse_num("bound", Some(5))?;

    let spec = InstanceSpec {
        ambient_dim: n as usize,
        generator_count: m as usize,
        lineality_dim_target: d as usize,
        seed,
        coefficient_bound: bound,
    };
    let s = random_instance(&spec).map_err(|e| e.to_string())?;

    match opts.format {
        OutputFormat::Text => print!("{}", render_generator_output(&s, opts.decimal)),
        OutputFormat::Json => {
            let mut fields = vec![
                ("operation", Json::Str("random".to_string())),
                ("input_digest", Json::Str(digest(&format_cone_file(&s)))),
                ("ambient_dim", Json::UInt(s.ambient_dim())),
                ("input_size", Json::UInt(s.len())),
                ("seed", Json::UInt(seed as usize)),
            ];
            fields.push(("output", json_vectors(s.vectors())));
            println!("{}", Json::Object(fields));
        }
    }
    Ok(0)
}
