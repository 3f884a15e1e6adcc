//! Partial actions on finite-dimensional algebras: the partial skew group
//! ring, G-simplicity, and the three-way simplicity check.

use gradlab::catalog;
use gradlab::instance::Payload;
use gradlab::partial::PermutationAction;
use gradlab::{groups, Budget, Field};

fn main() -> gradlab::Result<()> {
    let budget = Budget::default();
    for name in catalog::partial_names() {
        let doc = catalog::get(name)?;
        let Payload::PartialAction(pa) = &doc.payload else { unreachable!() };
        let ring = pa.build_pskew()?;
        let report = pa.check_skew_simplicity(&budget)?;
        println!(
            "{name}: skew ring of dim {}, G-simple {}, simple {}, all assertions agree {}",
            ring.graded.dim(),
            report.g_simple,
            report.assertion_i,
            report.agreement
        );
    }

    // C3 rotating three points, restricted to two of them
    let f = Field::new(2)?;
    let act = PermutationAction::new(f, groups::cyclic(3), vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]])?;
    let pa = act.restrict_to(&[0, 1], vec![])?;
    let dims: Vec<usize> = pa.domains().iter().map(|d| d.dim()).collect();
    println!("restriction to two points: domain dims {dims:?}");
    println!("  {:?}", pa.is_g_simple(&budget)?);
    println!("  {:?}", pa.check_skew_graded_simplicity(&budget)?.agreement);
    Ok(())
}
