//! A deliberately wrong corner decider must be caught as a falsification
//! (exit status 1); the real one never is.

use gradlab::corpus::{self, CorpusSpec};
use gradlab::criterion::{self, Verdict};
use gradlab::runner::{overall_exit_code, Command, Mode, Runner, Status};
use gradlab::{catalog, Budget, GradedAlgebra, Result};

fn inverted(r: &GradedAlgebra, e: usize, f: Option<&[u32]>, budget: &Budget) -> Result<Verdict> {
    let mut v = criterion::decide_corner_criterion(r, e, f, budget)?;
    v.predicted_simple = !v.predicted_simple;
    Ok(v)
}

fn field_test_ignored(r: &GradedAlgebra, e: usize, f: Option<&[u32]>, budget: &Budget) -> Result<Verdict> {
    let mut v = criterion::decide_corner_criterion(r, e, f, budget)?;
    v.predicted_simple = v.graded_simple;
    Ok(v)
}

#[test]
fn inverted_prediction_is_exit_1() {
    let runner = Runner {
        corner: inverted,
        ..Runner::default()
    };
    let rep = runner.run(Command::Check(Mode::Both), &catalog::get("m2-gf2-good-grading").unwrap());
    assert_eq!(rep.status, Status::Falsified);
    assert_eq!(rep.exit_code, 1);
    assert!(rep.falsification);
    assert_eq!(rep.verdict["verdict"]["agreement"], false);
}

#[test]
fn dropping_the_field_test_is_caught_on_the_corpus() {
    let docs = corpus::graded_corpus(&CorpusSpec::new(8, 60)).unwrap();
    let buggy = Runner {
        corner: field_test_ignored,
        ..Runner::default()
    };
    let reports = buggy.run_all(Command::Check(Mode::Both), &docs);
    assert!(reports.iter().any(|r| r.falsification));
    assert_eq!(overall_exit_code(&reports), 1);
    // the bug only ever surfaces where graded simplicity and simplicity differ
    for r in reports.iter().filter(|r| r.falsification) {
        assert_eq!(r.verdict["verdict"]["graded_simple"], true);
        assert_eq!(r.verdict["verdict"]["brute_simple"], false);
    }

    let honest = Runner::default().run_all(Command::Check(Mode::Both), &docs);
    assert!(honest.iter().all(|r| !r.falsification));
    assert_eq!(overall_exit_code(&honest), 0);
}

#[test]
fn criterion_alone_never_reports_falsification() {
    let runner = Runner {
        corner: inverted,
        ..Runner::default()
    };
    // without brute force there is nothing to disagree with
    let rep = runner.run(Command::Check(Mode::Criterion), &catalog::get("m2-gf2-good-grading").unwrap());
    assert_eq!(rep.exit_code, 0);
}
