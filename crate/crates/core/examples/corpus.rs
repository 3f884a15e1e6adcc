//! Seeded corpus generation and a cross-validation run over it.

use gradlab::corpus::{graded_corpus, partial_corpus, CorpusSpec, Family, PartialCorpusSpec};
use gradlab::runner::{overall_exit_code, Command, Mode, Runner};

fn main() -> gradlab::Result<()> {
    let mut spec = CorpusSpec::new(42, 14);
    spec.families = vec![Family::GroupAlgebra, Family::GoodMatrix, Family::Groupoid];
    let docs = graded_corpus(&spec)?;
    let runner = Runner::default();
    let reports = runner.run_all(Command::Check(Mode::Both), &docs);
    for r in &reports {
        println!("{:32} {:?} agreement {}", r.instance, r.status, r.verdict["verdict"]["agreement"]);
    }
    println!("exit status {}", overall_exit_code(&reports));

    let partials = partial_corpus(&PartialCorpusSpec::new(42, 8))?;
    let reports = runner.run_all(Command::SkewSimplicity, &partials);
    for r in &reports {
        println!("{:32} {:?} agreement {}", r.instance, r.status, r.verdict["agreement"]);
    }
    Ok(())
}
