use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use m0n::diagram::render_svg;
use m0n::document::PatternDocument;
use m0n::ngon::{canonicalize, Polygon};
use m0n::signs::{sign_of_ordering, TieBreak};
use m0n::solver::{SolveOptions, Solver};
use m0n::urelations::{
    enumerate_consistent, extended_relations, primitive_relations, EnumerateOptions, RelationSet, SignPattern,
    DEFAULT_CAP,
};
use m0n::verify::{verify, VerifyOptions};
use m0n::Error;
use serde_json::json;

const MAX_RELATIONS_N: usize = 12;
const VERIFY_CAP: usize = 8;
const STREAM_ABOVE: usize = 8;

#[derive(Parser)]
#[command(name = "m0n", version, about = "Sign patterns, u-relations and dihedral orderings of the n-gon")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the u-relations of the n-gon.
    Relations {
        n: usize,
        /// Only the primitive relations u_c + (crossing chords) = 1.
        #[arg(long, conflicts_with = "extended")]
        primitive: bool,
        /// All extended relations, one per four cyclic intervals (default).
        #[arg(long)]
        extended: bool,
    },
    /// Count consistent sign patterns and compare with (n-1)!/2.
    Count {
        n: usize,
        /// Test only the primitive relations.
        #[arg(long)]
        primitive_only: bool,
        /// Largest n to enumerate.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write the consistent patterns to this file, one per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find the dihedral ordering whose chart makes a pattern positive.
    Solve {
        n: usize,
        #[command(flatten)]
        input: PatternInput,
        /// Which shortest negative chord to resolve first.
        #[arg(long, default_value = "first")]
        tie_break: TieBreak,
        #[arg(long)]
        max_iters: Option<usize>,
    },
    /// Sign pattern of the chart of an ordering.
    SignOf {
        n: usize,
        /// Comma or space separated labels, e.g. "1,4,2,5,3".
        #[arg(long)]
        ordering: String,
    },
    /// Check consistent patterns against orderings, the solver and points.
    Verify {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random orderings for the point check when n >= 8.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = VERIFY_CAP)]
        cap: usize,
    },
    /// Draw a pattern as an SVG polygon with negative chords in red.
    Diagram {
        n: usize,
        #[command(flatten)]
        input: PatternInput,
        /// Vertex captions, e.g. the solved ordering.
        #[arg(long)]
        labels: Option<String>,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PatternInput {
    /// Signs over {+,-} in canonical chord order.
    #[arg(long, allow_hyphen_values = true)]
    pattern: Option<String>,
    /// PatternDocument JSON file, or "-" for standard input.
    #[arg(long)]
    document: Option<String>,
}

enum Failure {
    Verify(String),
    Inconsistent,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InconsistentInput => Failure::Inconsistent,
            Error::IterationBoundExceeded { .. } => Failure::Verify(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconsistent) => {
            eprintln!("inconsistent: the pattern violates an extended u-relation");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Relations { n, primitive, .. } => relations(cli.json, *n, *primitive),
        Command::Count { n, primitive_only, cap, out } => count(cli.json, *n, *primitive_only, *cap, out.as_ref()),
        Command::Solve { n, input, tie_break, max_iters } => {
            solve(cli.json, *n, input, SolveOptions { max_iters: *max_iters, tie_break: *tie_break })
        }
        Command::SignOf { n, ordering } => sign_of(cli.json, *n, ordering),
        Command::Verify { n, seed, samples, cap } => run_verify(cli.json, *n, *seed, *samples, *cap),
        Command::Diagram { n, input, labels, out } => diagram(*n, input, labels.as_deref(), out.as_ref()),
    }
}

fn parse_word(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Failure::Usage(format!("bad label {t:?}"))))
        .collect()
}

fn read_pattern(n: usize, input: &PatternInput) -> Result<(Polygon, SignPattern), Failure> {
    if let Some(text) = &input.pattern {
        let poly = Polygon::new(n)?;
        let s = SignPattern::parse(n, text)?;
        return Ok((poly, s));
    }
    let path = input.document.as_deref().expect("clap requires one input");
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path)?
    };
    let doc = PatternDocument::from_json(&text)?;
    if doc.n != n {
        return Err(Failure::Usage(format!("document is for n = {}, not {n}", doc.n)));
    }
    Ok(doc.pattern()?)
}

fn relations(as_json: bool, n: usize, primitive: bool) -> Outcome {
    if !(4..=MAX_RELATIONS_N).contains(&n) {
        return Err(Failure::Usage(format!("relations need 4 <= n <= {MAX_RELATIONS_N}, got {n}")));
    }
    let poly = Polygon::new(n)?;
    let rels = if primitive { primitive_relations(&poly) } else { extended_relations(&poly) };
    let mut stdout = io::stdout().lock();
    if as_json {
        let pair = |cs: &[m0n::Chord]| cs.iter().map(|c| [c.i, c.j]).collect::<Vec<_>>();
        let items: Vec<_> =
            rels.iter().map(|r| json!({ "t1": pair(&r.t1), "t2": pair(&r.t2), "cuts": r.cuts })).collect();
        writeln!(stdout, "{}", serde_json::to_string_pretty(&items).expect("plain data"))?;
    } else {
        for r in &rels {
            writeln!(stdout, "{r}")?;
        }
    }
    Ok(())
}

fn factorial_half(n: usize) -> u64 {
    (3..n as u64).product()
}

fn count(as_json: bool, n: usize, primitive_only: bool, cap: usize, out: Option<&PathBuf>) -> Outcome {
    let poly = Polygon::new(n)?;
    let set = if primitive_only { RelationSet::PrimitiveOnly } else { RelationSet::Extended };
    let report = |done: u64, total: u64| {
        eprint!("\rchecked {done} of {total} patterns");
        if done == total {
            eprintln!();
        }
    };
    let progress: Option<&(dyn Fn(u64, u64) + Sync)> = if n > STREAM_ABOVE { Some(&report) } else { None };
    let opts = EnumerateOptions { set, cap, collect: out.is_some(), progress };
    let result = enumerate_consistent(&poly, &opts)?;
    if let (Some(path), Some(patterns)) = (out, &result.patterns) {
        let mut file = io::BufWriter::new(fs::File::create(path)?);
        for s in patterns {
            writeln!(file, "{s}")?;
        }
        file.flush()?;
    }
    let realizable = factorial_half(n);
    let label = if primitive_only { "primitive" } else { "extended" };
    let agree = result.count == realizable;
    if as_json {
        let doc = json!({ "n": n, "relations": label, "consistent": result.count, "realizable": realizable, "agree": agree });
        println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
    } else {
        let verdict = if agree { "=" } else { "!=" };
        println!("n = {n}: {label}-consistent {} {verdict} {realizable} realizable", result.count);
    }
    Ok(())
}

fn solve(as_json: bool, n: usize, input: &PatternInput, opts: SolveOptions) -> Outcome {
    let (poly, s) = read_pattern(n, input)?;
    let solver = Solver::new(&poly);
    let (alpha, trace) = solver.solve(&s, &opts)?;
    if as_json {
        let mut doc = PatternDocument::new(&poly, &s);
        doc.ordering = Some(alpha.word().to_vec());
        doc.trace = Some(trace.steps.iter().map(|t| t.to_string()).collect());
        println!("{}", doc.to_json());
    } else {
        println!("ordering: {alpha}");
        println!("iterations: {}", trace.iterations);
        print!("{trace}");
    }
    Ok(())
}

fn sign_of(as_json: bool, n: usize, ordering: &str) -> Outcome {
    let word = parse_word(ordering)?;
    if word.len() != n {
        return Err(Failure::Usage(format!("ordering has {} labels, expected {n}", word.len())));
    }
    let poly = Polygon::new(n)?;
    let alpha = canonicalize(&word)?;
    let s = sign_of_ordering(&poly, &alpha);
    if as_json {
        let mut doc = PatternDocument::new(&poly, &s);
        doc.ordering = Some(alpha.word().to_vec());
        println!("{}", doc.to_json());
    } else {
        println!("{s}");
    }
    Ok(())
}

fn run_verify(as_json: bool, n: usize, seed: u64, samples: usize, cap: usize) -> Outcome {
    let poly = Polygon::new(n)?;
    let report = verify(&poly, &VerifyOptions { seed, samples, cap: Some(cap) })?;
    if as_json {
        let suites: Vec<_> = report
            .suites
            .iter()
            .map(|s| json!({ "name": s.name, "passed": s.passed, "checked": s.checked, "detail": s.detail }))
            .collect();
        let doc = json!({ "n": n, "passed": report.passed(), "suites": suites });
        println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
    } else {
        for s in &report.suites {
            println!("{s}");
        }
    }
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = report.suites.iter().filter(|s| !s.passed).map(|s| s.name).collect();
        Err(Failure::Verify(failed.join(", ")))
    }
}

fn diagram(n: usize, input: &PatternInput, labels: Option<&str>, out: Option<&PathBuf>) -> Outcome {
    let (poly, s) = read_pattern(n, input)?;
    let labels = labels.map(parse_word).transpose()?;
    let svg = render_svg(&poly, &s, labels.as_deref())?;
    match out {
        Some(path) => fs::write(path, svg)?,
        None => io::stdout().lock().write_all(svg.as_bytes())?,
    }
    Ok(())
}
