//! The corner criterion for semigroup-graded algebras: check the
//! hypotheses at an idempotent, predict simplicity from the center of a
//! corner, and compare with brute force.

use gradlab::catalog;
use gradlab::criterion::{check_hypotheses, cross_validate, default_idempotent, predictions_for_all_f};
use gradlab::instance::Payload;
use gradlab::Budget;

fn main() -> gradlab::Result<()> {
    let budget = Budget::default();
    for name in ["gf2-c2-group-algebra", "m2-gf2-good-grading", "groupoid-m2-gf2", "gf2-left-zero-grading"] {
        let doc = catalog::get(name)?;
        let Payload::GradedAlgebra { graded, e } = &doc.payload else { unreachable!() };
        let e = e.or_else(|| default_idempotent(graded)).expect("an idempotent");
        let h = check_hypotheses(graded, e, &budget)?;
        println!("{name} at e = {e}: hypotheses met = {}", h.all_met);
        if !h.all_met {
            println!("  {h:?}");
            continue;
        }
        let v = cross_validate(graded, e, &budget)?;
        println!(
            "  graded simple {}, corner center field {}, predicted {}, brute force {:?}",
            v.graded_simple, v.corner_center_is_field, v.predicted_simple, v.brute_simple
        );
        for (f, p) in predictions_for_all_f(graded, e, &budget)? {
            println!("  f = {f:?} predicts {p}");
        }
    }
    Ok(())
}
