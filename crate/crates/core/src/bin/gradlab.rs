use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gradlab::corpus::{self, CorpusSpec, Family, PartialCorpusSpec};
use gradlab::runner::{self, Command, Mode, RunReport, Runner};
use gradlab::{catalog, instance, Budget, InstanceDocument};

#[derive(Parser)]
#[command(name = "gradlab", version, about = "Simplicity of semigroup-graded algebras over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args, Clone)]
struct Run {
    /// Instance file: JSON documents, one per line or a JSON array
    #[arg(long, group = "source")]
    input: Option<String>,
    /// Built-in catalog entry
    #[arg(long, group = "source")]
    catalog: Option<String>,
    /// Generate a corpus from this seed
    #[arg(long, group = "source")]
    corpus: Option<u64>,
    /// Corpus size
    #[arg(long, default_value_t = 20)]
    count: usize,
    /// Emit one canonical JSON report per line
    #[arg(long)]
    json: bool,
    /// Element-enumeration budget (overrides GRADLAB_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// Include wall-clock timings in reports
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Brute,
    Criterion,
    Both,
    Jespers,
}

#[derive(Subcommand)]
enum Sub {
    /// Parse and validate instances
    Validate(Run),
    /// Idempotents, cancellativity and local groups
    SemigroupReport(Run),
    /// Center, upper central series, hypercentrality
    GroupReport(Run),
    /// Components, graded simplicity and criterion hypotheses
    GradedReport(Run),
    /// Decide simplicity by brute force, by the corner criterion, or both
    Check {
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[command(flatten)]
        run: Run,
    },
    /// Build the partial skew group ring of a partial action
    PskewBuild(Run),
    /// Graded simplicity of the partial skew ring against G-simplicity
    #[command(name = "lemma33")]
    SkewGraded(Run),
    /// Simplicity of the partial skew ring three ways
    #[command(name = "theorem34")]
    SkewSimple(Run),
    /// Minimal-support central element of the whole algebra
    #[command(name = "lemma21-witness")]
    CentralWitness(Run),
    /// Graded simplicity along the upper central series quotients
    #[command(name = "chain23")]
    QuotientChain(Run),
    /// Print a generated corpus as JSON lines
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Partial actions instead of graded algebras
        #[arg(long)]
        partial: bool,
        /// Restrict to these families (comma separated)
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
        /// Restrict to these groups by name (comma separated)
        #[arg(long, value_delimiter = ',')]
        group: Vec<String>,
        /// Allow instances that fail the criterion hypotheses
        #[arg(long)]
        any_hypotheses: bool,
    },
    /// List catalog entries, or print one
    Catalog { name: Option<String> },
}

fn budget(flag: Option<u64>) -> Result<Budget, String> {
    let n = match flag {
        Some(n) => Some(n),
        None => match std::env::var("GRADLAB_BUDGET") {
            Ok(s) => Some(s.trim().parse().map_err(|_| format!("GRADLAB_BUDGET is not a number: {s:?}"))?),
            Err(_) => None,
        },
    };
    Ok(match n {
        Some(n) => {
            let mut b = Budget::with_enumeration(n);
            b.exhaustive_simplicity = b.exhaustive_simplicity.min(n);
            b
        }
        None => Budget::default(),
    })
}

fn load(run: &Run, command: Command) -> Result<Vec<InstanceDocument>, String> {
    let docs = if let Some(path) = &run.input {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        instance::parse_instances(&text).map_err(|e| format!("{path}: {e}"))?
    } else if let Some(name) = &run.catalog {
        vec![catalog::get(name).map_err(|e| e.to_string())?]
    } else if let Some(seed) = run.corpus {
        let generated = if command.wants_partial_actions() {
            corpus::partial_corpus(&PartialCorpusSpec::new(seed, run.count))
        } else {
            corpus::graded_corpus(&CorpusSpec::new(seed, run.count))
        };
        generated.map_err(|e| e.to_string())?
    } else {
        return Err("one of --input, --catalog or --corpus is required".into());
    };
    Ok(docs)
}

fn print(report: &RunReport, json: bool) {
    if json {
        println!("{}", report.to_json());
        return;
    }
    let detail = match &report.error {
        Some(err) => err.message.clone(),
        None => serde_json::to_string(&report.verdict).unwrap_or_default(),
    };
    println!("{} [{}] {:?}: {}", report.instance, report.command, report.status, detail);
}

fn execute(command: Command, run: &Run) -> u8 {
    let budget = match budget(run.budget) {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let docs = match load(run, command) {
        Ok(d) => d,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let runner = Runner {
        budget,
        timing: run.timing,
        ..Runner::default()
    };
    let reports = runner.run_all(command, &docs);
    for r in &reports {
        print(r, run.json);
    }
    runner::overall_exit_code(&reports) as u8
}

fn corpus_command(
    seed: u64,
    count: usize,
    partial: bool,
    family: Vec<String>,
    group: Vec<String>,
    any_hypotheses: bool,
) -> u8 {
    let groups = (!group.is_empty()).then_some(group);
    let docs = if partial {
        let mut spec = PartialCorpusSpec::new(seed, count);
        spec.groups = groups;
        spec.hypercentral_only = !any_hypotheses;
        corpus::partial_corpus(&spec)
    } else {
        let mut spec = CorpusSpec::new(seed, count);
        if !family.is_empty() {
            let mut fams = Vec::new();
            for f in &family {
                match Family::parse(f) {
                    Some(f) => fams.push(f),
                    None => {
                        eprintln!("error: unknown family {f:?}");
                        return 2;
                    }
                }
            }
            spec.families = fams;
        }
        spec.groups = groups;
        spec.require_hypotheses = !any_hypotheses;
        corpus::graded_corpus(&spec)
    };
    match docs {
        Ok(docs) => {
            for d in docs {
                println!("{}", d.to_canonical_json());
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Sub::Validate(r) => execute(Command::Validate, &r),
        Sub::SemigroupReport(r) => execute(Command::SemigroupReport, &r),
        Sub::GroupReport(r) => execute(Command::GroupReport, &r),
        Sub::GradedReport(r) => execute(Command::GradedReport, &r),
        Sub::Check { mode, run } => {
            let mode = match mode {
                ModeArg::Brute => Mode::Brute,
                ModeArg::Criterion => Mode::Criterion,
                ModeArg::Both => Mode::Both,
                ModeArg::Jespers => Mode::Jespers,
            };
            execute(Command::Check(mode), &run)
        }
        Sub::PskewBuild(r) => execute(Command::PskewBuild, &r),
        Sub::SkewGraded(r) => execute(Command::SkewGradedSimplicity, &r),
        Sub::SkewSimple(r) => execute(Command::SkewSimplicity, &r),
        Sub::CentralWitness(r) => execute(Command::CentralWitness, &r),
        Sub::QuotientChain(r) => execute(Command::QuotientChain, &r),
        Sub::Corpus {
            seed,
            count,
            partial,
            family,
            group,
            any_hypotheses,
        } => corpus_command(seed, count, partial, family, group, any_hypotheses),
        Sub::Catalog { name: None } => {
            for n in catalog::names() {
                println!("{n}");
            }
            0
        }
        Sub::Catalog { name: Some(n) } => match catalog::get(&n) {
            Ok(d) => {
                println!("{}", d.to_canonical_json());
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
    };
    ExitCode::from(code)
}
