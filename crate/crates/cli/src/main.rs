use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use headchar::chartable::character_table;
use headchar::corpus::{builtin, builtin_catalog, parse_corpus, render_survey, survey, GroupSpec};
use headchar::heads::{Check, HeadAnalysis, Verdict};
use headchar::structure::{
    carter_brute_force, carter_subgroup, derived_subgroup_of, is_nilpotent, is_solvable,
};
use headchar::{Error, Group};

/// Exit status for a failed verification.
const EXIT_FAIL: u8 = 1;
/// Exit status for unmet preconditions: unknown group, non-solvable input,
/// unreadable corpus.
const EXIT_PRECONDITION: u8 = 2;

#[derive(Parser)]
#[command(name = "headchar", version, about = "Character tables, Carter subgroups and head characters of small solvable groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, solvability, nilpotency, class count and exponent.
    Info {
        /// Catalog name or corpus file.
        group: String,
    },
    /// Canonical character table.
    Chartab {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// A Carter subgroup: order, generators and |C/C'|.
    Carter {
        group: String,
        /// Cross-check against exhaustive subgroup enumeration.
        #[arg(long)]
        brute_force: bool,
    },
    /// Head-character report as JSON.
    Heads { group: String },
    /// Run one verifier; exit 0 on pass or skip, 1 on fail, 2 on unmet
    /// preconditions.
    Verify {
        group: String,
        #[arg(long)]
        theorem: Theorem,
    },
    /// One report per corpus line plus a summary line.
    Survey {
        /// Corpus file; the bundled catalog when omitted.
        #[arg(long)]
        corpus: Option<String>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    /// Head fields are the cyclotomic fields of the linear characters of C.
    A,
    /// Lower bound on rational irreducibles from a Sylow 2-subgroup of C.
    B,
    /// Rational-field hypothesis implies self-normalizing Sylow 2-subgroups.
    C,
    /// Degree, restriction, linear-stability and class-number properties.
    Isaacs,
    /// Invariant-constituent maps: inverse bijections, extension, Galois.
    T22,
    /// Fields of values of extension sets agree across each layer.
    T23,
    /// Heads do not depend on the choice of Carter subgroup.
    Carter,
}

impl Theorem {
    fn check(self) -> Check {
        match self {
            Theorem::A => Check::HeadFields,
            Theorem::B => Check::RationalCount,
            Theorem::C => Check::SylowSelfNormalizing,
            Theorem::Isaacs => Check::HeadProperties,
            Theorem::T22 => Check::ConstituentMaps,
            Theorem::T23 => Check::ExtensionFields,
            Theorem::Carter => Check::CarterChoice,
        }
    }
}

fn resolve(arg: &str) -> Result<Vec<GroupSpec>, Error> {
    match builtin(arg) {
        Ok(spec) => Ok(vec![spec]),
        Err(Error::UnknownGroup(_)) if Path::new(arg).is_file() => parse_corpus(arg),
        Err(e) => Err(e),
    }
}

/// A single group: the first spec of a file, or a catalog entry.
fn resolve_one(arg: &str) -> Result<(String, Group), Error> {
    let spec = resolve(arg)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::UnknownGroup(format!("{arg} (empty corpus)")))?;
    Ok((spec.name.clone(), spec.build()?))
}

fn info(arg: &str) -> Result<ExitCode, Error> {
    for spec in resolve(arg)? {
        let g = spec.build()?;
        let table = character_table(&g)?;
        println!("group: {}", spec.name);
        println!("order: {}", g.order());
        println!("solvable: {}", is_solvable(&g));
        println!("nilpotent: {}", is_nilpotent(&g));
        println!("classes: {}", table.class_count());
        println!("exponent: {}", g.exponent());
    }
    Ok(ExitCode::SUCCESS)
}

fn chartab(arg: &str, json: bool) -> Result<ExitCode, Error> {
    let (_, g) = resolve_one(arg)?;
    let table = character_table(&g)?;
    if json {
        println!("{}", serde_json::to_string(&table.to_json(&g)).expect("tables serialize"));
    } else {
        print!("{}", table.render_text(&g));
    }
    Ok(ExitCode::SUCCESS)
}

fn carter(arg: &str, brute_force: bool) -> Result<ExitCode, Error> {
    let (name, g) = resolve_one(arg)?;
    let c = carter_subgroup(&g)?;
    let gens: Vec<String> = c.generators().iter().map(|&x| g.element(x).to_string()).collect();
    println!("group: {name}");
    println!("carter order: {}", c.order());
    println!("generators: {}", gens.join(" "));
    println!("|C/C'|: {}", c.order() / derived_subgroup_of(&g, &c).order());
    if brute_force {
        let all = carter_brute_force(&g)?;
        let one_class = !all.is_empty() && g.conjugates(&all[0]) == all;
        let agrees = one_class && all.contains(&c);
        println!("brute force: {} self-normalizing nilpotent subgroups, one class: {one_class}", all.len());
        println!("agrees: {agrees}");
        if !agrees {
            return Ok(ExitCode::from(EXIT_FAIL));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn heads(arg: &str) -> Result<ExitCode, Error> {
    let (name, g) = resolve_one(arg)?;
    let report = HeadAnalysis::new(&g)?.report(&name)?;
    println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    Ok(ExitCode::SUCCESS)
}

fn verify(arg: &str, theorem: Theorem) -> Result<ExitCode, Error> {
    let (name, g) = resolve_one(arg)?;
    let check = theorem.check();
    let result = HeadAnalysis::new(&g)?.verify(check)?;
    println!("{name} {}: {}", check.name(), result.verdict);
    for line in &result.diagnostics {
        println!("  {line}");
    }
    Ok(match result.verdict {
        Verdict::Pass | Verdict::Skip => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(EXIT_FAIL),
    })
}

fn run_survey(corpus: Option<&str>, jobs: Option<usize>) -> Result<ExitCode, Error> {
    let specs = match corpus {
        Some(path) => parse_corpus(path)?,
        None => builtin_catalog(),
    };
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let entries = survey(&specs, jobs)?;
    print!("{}", render_survey(&specs, &entries));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Info { group } => info(group),
        Command::Chartab { group, json } => chartab(group, *json),
        Command::Carter { group, brute_force } => carter(group, *brute_force),
        Command::Heads { group } => heads(group),
        Command::Verify { group, theorem } => verify(group, *theorem),
        Command::Survey { corpus, jobs } => run_survey(corpus.as_deref(), *jobs),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_PRECONDITION)
    })
}
