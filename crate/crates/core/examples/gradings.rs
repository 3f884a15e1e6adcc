//! Graded algebras: components, decomposition, graded ideals and graded
//! simplicity, and coarsening by a normal subgroup.

use gradlab::algebras::constructions::{group_algebra, matrix_algebra};
use gradlab::{groups, Budget, Field, GradedAlgebra};

fn main() -> gradlab::Result<()> {
    let budget = Budget::default();
    let f = Field::new(2)?;

    let c2 = groups::cyclic(2);
    let m2 = GradedAlgebra::with_group(matrix_algebra(f, 2), &c2, vec![0, 1, 1, 0])?;
    println!("M2(GF(2)) with E12, E21 in degree 1");
    println!("  component 0: {:?}", m2.component(0).basis());
    println!("  decompose (1,1,0,1): {:?}", m2.decompose(&[1, 1, 0, 1])?);
    println!("  graded simple: {:?}", m2.is_graded_simple(&budget)?);

    let c4 = groups::cyclic(4);
    let r = GradedAlgebra::with_group(group_algebra(f, &c4), &c4, (0..4).collect())?;
    println!("GF(2)[C4] graded by C4: {:?}", r.is_graded_simple(&budget)?);
    println!("  but simple: {}", r.algebra().is_simple(&budget)?.is_simple());
    let two = c4.generated(&[2]);
    let coarse = r.coarsen_by_quotient(&two)?;
    println!("  coarsened to C4/{{0,2}}: {:?}", coarse.is_graded_simple(&budget)?);
    let ideal = r.algebra().ideal_closure(&[vec![1, 0, 1, 0]])?;
    println!("  ideal of 1 + g^2 is graded for C4: {}", r.is_graded_ideal(&ideal.space)?);
    Ok(())
}
