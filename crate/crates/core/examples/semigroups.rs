//! Semigroup tables: idempotents, cancellativity at an idempotent, local
//! groups, and semigroups built from groupoids.

use gradlab::catalog::symmetric_inverse_monoid;
use gradlab::{groups, GroupoidTable, SemigroupTable};

fn main() -> gradlab::Result<()> {
    let left_zero = SemigroupTable::new(vec![vec![0, 0], vec![1, 1]], None)?;
    println!("left zero band: idempotents {:?}", left_zero.idempotents());
    println!("  cancellative at 0: {}", left_zero.is_cancellative_at(0)?);

    let inv = symmetric_inverse_monoid(2);
    println!("symmetric inverse monoid on 2 points: {} elements, zero {:?}", inv.len(), inv.zero());
    println!("  inverse semigroup: {}", inv.is_inverse_semigroup());
    for e in inv.idempotents() {
        if inv.is_nonzero(e) {
            let local = inv.nonzero_local_group(e)?.map(|(g, _)| g.len());
            println!("  e = {e}: cancellative {}, local group order {local:?}", inv.is_cancellative_at(e)?);
        }
    }

    let groupoid = GroupoidTable::full(2, &groups::cyclic(2));
    let s = groupoid.to_semigroup();
    println!("groupoid of 2 objects over C2: {} morphisms, semigroup of order {}", groupoid.morphisms(), s.len());
    for &e in groupoid.identities() {
        println!("  identity {e}: cancellative {}", s.is_cancellative_at(e)?);
    }
    Ok(())
}
