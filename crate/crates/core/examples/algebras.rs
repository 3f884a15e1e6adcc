//! Algebras by structure constants: ideals, simplicity, centers, corners.

use gradlab::algebras::constructions::{diagonal_algebra, group_algebra, matrix_algebra};
use gradlab::{groups, Budget, Field};

fn main() -> gradlab::Result<()> {
    let f = Field::new(2)?;
    let budget = Budget::default();

    let m2 = matrix_algebra(f, 2);
    println!("M2(GF(2)): simple = {:?}", m2.is_simple(&budget)?);
    println!("  center {:?}", m2.center()?.space.basis());
    let corner = m2.corner(&[1, 0, 0, 0])?;
    println!("  corner at E11 has dimension {}", corner.algebra.dim());

    let c2 = group_algebra(f, &groups::cyclic(2));
    println!("GF(2)[C2]: {:?}", c2.is_simple(&budget)?);
    let ideal = c2.ideal_closure(&[vec![1, 1]])?;
    println!("  ideal generated by 1 + g: {:?}", ideal.space.basis());

    let d = diagonal_algebra(f, 3);
    println!("GF(2)^3: idempotents {:?}", d.find_idempotents(None, budget.enumeration)?);
    println!("  field: {}", d.is_field(budget.enumeration)?);
    Ok(())
}
