//! Group-graded algebras: the center-is-a-field criterion, central elements
//! of minimal support, and graded simplicity along the upper central series.

use gradlab::catalog;
use gradlab::criterion::{decide_jespers, minimal_support_central, quotient_chain};
use gradlab::instance::Payload;
use gradlab::{Budget, Subspace};

fn main() -> gradlab::Result<()> {
    let budget = Budget::default();
    for name in ["gf2-c3-group-algebra", "gf3-c3-group-algebra", "m2-gf3-good-grading-q8", "gf2-d4-group-algebra"] {
        let doc = catalog::get(name)?;
        let Payload::GradedAlgebra { graded, .. } = &doc.payload else { unreachable!() };
        let v = decide_jespers(graded, &budget)?;
        println!("{name}: predicted {}, brute force {:?}", v.predicted_simple, v.brute_simple);
        let whole = Subspace::full(graded.algebra().field(), graded.dim());
        if let Ok(Some(c)) = minimal_support_central(graded, &whole, &budget) {
            println!("  central element {:?} with support {}", c.element, c.support_size);
        }
        let chain = quotient_chain(graded, &budget)?;
        let levels: Vec<bool> = chain.levels.iter().map(|l| l.graded_simple).collect();
        println!("  chain levels graded simple: {levels:?}");
    }
    Ok(())
}
