//! `prefas`: solve, transform and check programs with preferences on rules.
//!
//! Exit status: 0 when something was found (or no violation), 1 when
//! nothing was found (or a violation), 2 on any error.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use prefas::verify::{self, FuzzReport, GenParams, Property, Violation};
use prefas::{parse_program_with, solve, transform, Limits, LiteralSet, ParseOptions, PrefProgram, Semantics, Witness};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "prefas",
    version,
    about = "Preferred answer sets for logic programs with preferences on rules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print answer sets and preferred answer sets.
    Solve(SolveArgs),
    /// Rewrite a program into a plain one whose answer sets are the
    /// GNO-preferred answer sets (after dropping `__` atoms).
    Transform(TransformArgs),
    /// Check the expected properties on a program or on random programs.
    Check(CheckArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Program file, or `-` for standard input.
    file: PathBuf,
    #[arg(long, short, default_value = "g")]
    semantics: Semantics,
    /// Print a JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Print the generating set or fragment set behind each preferred set.
    #[arg(long)]
    witness: bool,
    /// Accept atoms in the reserved `__` namespace (transformed programs).
    #[arg(long)]
    allow_reserved: bool,
    /// Drop `__` atoms from printed sets.
    #[arg(long)]
    project: bool,
}

#[derive(Args)]
struct TransformArgs {
    file: PathBuf,
    /// Write here instead of standard output.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Program file; omit together with `--random`.
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    file: Option<PathBuf>,
    /// Check generated programs instead of a file.
    #[arg(long)]
    random: bool,
    /// Property to check, repeatable or comma separated; `all` for every one.
    #[arg(long, short, value_delimiter = ',', default_value = "all")]
    property: Vec<String>,
    /// First seed; program `i` uses `seed + i`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Upper bound on rules per generated program.
    #[arg(long, default_value_t = GenParams::default().n_rules)]
    rules: usize,
    /// Upper bound on atoms per generated program.
    #[arg(long, default_value_t = GenParams::default().n_atoms)]
    atoms: usize,
    #[arg(long, default_value_t = GenParams::default().pref_density)]
    pref_density: f64,
    /// Generate only stratified programs.
    #[arg(long)]
    stratified: bool,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Transform(args) => cmd_transform(&args),
        Command::Check(args) => cmd_check(&args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn limits() -> anyhow::Result<Limits> {
    Limits::from_env().map_err(anyhow::Error::msg)
}

fn read_source(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path, allow_reserved: bool) -> anyhow::Result<PrefProgram> {
    let text = read_source(path)?;
    let parsed =
        parse_program_with(&text, ParseOptions { allow_reserved }).with_context(|| path.display().to_string())?;
    parsed.close().with_context(|| path.display().to_string())
}

/// The machine-readable form of `solve`.
#[derive(Serialize)]
struct SolveResult {
    program_path: String,
    semantics: Semantics,
    answer_sets: Vec<Vec<String>>,
    preferred: Vec<Vec<String>>,
    witnesses: Vec<Witness>,
}

fn strip_reserved(sets: &[LiteralSet]) -> Vec<LiteralSet> {
    let mut out: Vec<LiteralSet> = Vec::new();
    for s in sets {
        let kept: LiteralSet = s.iter().filter(|l| !l.atom.is_reserved()).collect();
        if !out.contains(&kept) {
            out.push(kept);
        }
    }
    out.sort_by_cached_key(LiteralSet::sorted_strings);
    out
}

fn cmd_solve(args: &SolveArgs) -> anyhow::Result<bool> {
    let lpp = load(&args.file, args.allow_reserved)?;
    let mut sol = solve(&lpp, args.semantics, &limits()?)?;
    if args.project {
        sol.answer_sets = strip_reserved(&sol.answer_sets);
        let projected = strip_reserved(&sol.preferred);
        if projected.len() != sol.preferred.len() {
            // witnesses no longer line up one to one
            sol.witnesses.clear();
        }
        sol.preferred = projected;
    }
    let found = sol.found();

    let mut out = io::stdout().lock();
    if args.json {
        let doc = SolveResult {
            program_path: args.file.display().to_string(),
            semantics: sol.semantics,
            answer_sets: sol.answer_sets.iter().map(LiteralSet::sorted_strings).collect(),
            preferred: sol.preferred.iter().map(LiteralSet::sorted_strings).collect(),
            witnesses: sol.witnesses,
        };
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)?;
        return Ok(found);
    }

    let print_family = |out: &mut dyn Write, sets: &[LiteralSet], witnesses: Option<&[Witness]>| -> io::Result<()> {
        for (i, s) in sets.iter().enumerate() {
            match witnesses.and_then(|w| w.get(i)) {
                Some(w) => writeln!(out, "{s}  witness: {w}")?,
                None => writeln!(out, "{s}")?,
            }
        }
        Ok(())
    };
    let witnesses = args.witness.then_some(sol.witnesses.as_slice());
    if sol.semantics == Semantics::As {
        writeln!(out, "answer sets: {}", sol.answer_sets.len())?;
        print_family(&mut out, &sol.answer_sets, witnesses)?;
    } else {
        writeln!(out, "answer sets: {}", sol.answer_sets.len())?;
        print_family(&mut out, &sol.answer_sets, None)?;
        writeln!(
            out,
            "preferred answer sets ({}): {}",
            sol.semantics,
            sol.preferred.len()
        )?;
        print_family(&mut out, &sol.preferred, witnesses)?;
    }
    Ok(found)
}

fn cmd_transform(args: &TransformArgs) -> anyhow::Result<bool> {
    let lpp = load(&args.file, false)?;
    let text = transform(&lpp).to_string();
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(true)
}

fn parse_properties(names: &[String]) -> anyhow::Result<BTreeSet<Property>> {
    let mut out = BTreeSet::new();
    for name in names.iter().map(|n| n.trim()) {
        if name == "all" {
            out.extend(Property::ALL);
        } else {
            out.insert(name.parse::<Property>().map_err(anyhow::Error::msg)?);
        }
    }
    if out.is_empty() {
        bail!("no property selected");
    }
    Ok(out)
}

/// `check` on a single file.
#[derive(Serialize)]
struct FileCheck {
    program_path: String,
    properties: Vec<Property>,
    violations: Vec<Violation>,
}

fn cmd_check(args: &CheckArgs) -> anyhow::Result<bool> {
    let properties = parse_properties(&args.property)?;
    let limits = limits()?;
    let mut out = io::stdout().lock();

    if let Some(path) = &args.file {
        let lpp = load(path, false)?;
        let (violations, _, _) = verify::check_program(&lpp, args.seed, &properties, &limits)?;
        let clean = violations.is_empty();
        if args.json {
            let doc = FileCheck {
                program_path: path.display().to_string(),
                properties: properties.into_iter().collect(),
                violations,
            };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        } else {
            let names: Vec<_> = properties.iter().map(|p| p.name()).collect();
            writeln!(
                out,
                "checked {} [{}]: {} violation(s)",
                path.display(),
                names.join(", "),
                violations.len()
            )?;
            for v in &violations {
                writeln!(out, "{v}")?;
            }
        }
        return Ok(clean);
    }

    let params = GenParams {
        n_rules: args.rules,
        n_atoms: args.atoms,
        pref_density: args.pref_density,
        stratified: args.stratified,
        seed: args.seed,
        ..GenParams::default()
    };
    params.validate().map_err(anyhow::Error::msg)?;
    let report = verify::fuzz(&params, args.count, &properties, &limits);
    if args.json {
        serde_json::to_writer_pretty(&mut out, &report)?;
        writeln!(out)?;
    } else {
        print_fuzz(&mut out, &report)?;
    }
    if !report.errors.is_empty() {
        bail!("{} program(s) could not be checked", report.errors.len());
    }
    Ok(report.violations.is_empty())
}

fn print_fuzz(out: &mut dyn Write, report: &FuzzReport) -> io::Result<()> {
    let names: Vec<_> = report.properties.iter().map(|p| p.name()).collect();
    writeln!(
        out,
        "checked {} random program(s) from seed {} [{}]: {} violation(s), {} error(s)",
        report.count,
        report.params.seed,
        names.join(", "),
        report.violations.len(),
        report.errors.len()
    )?;
    let s = &report.strictness;
    writeln!(
        out,
        "strict GNO in G: {} program(s) {:?}",
        s.gno_strictly_in_g, s.gno_strictly_in_g_seeds
    )?;
    writeln!(
        out,
        "strict G in D: {} program(s) {:?}",
        s.g_strictly_in_d, s.g_strictly_in_d_seeds
    )?;
    for v in &report.violations {
        writeln!(out, "seed {}: {}", v.seed, v.violation)?;
    }
    for e in &report.errors {
        writeln!(out, "seed {}: error: {}", e.seed, e.error)?;
    }
    Ok(())
}
