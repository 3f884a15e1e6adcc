//! Exact subspace arithmetic over GF(p).

use gradlab::fflinalg::{self, Field, Subspace};

fn main() -> gradlab::Result<()> {
    let f = Field::new(3)?;
    let u = Subspace::rref(f, 4, &[vec![1, 2, 0, 1], vec![2, 1, 1, 0]])?;
    let v = Subspace::rref(f, 4, &[vec![0, 0, 1, 2], vec![1, 0, 0, 0]])?;
    println!("U = {:?}", u.basis());
    println!("V = {:?}", v.basis());
    println!("U + V has dimension {}", u.sum(&v)?.dim());
    println!("U ∩ V = {:?}", u.intersect(&v)?.basis());

    let m = vec![vec![1, 1, 0], vec![0, 1, 1]];
    let k = fflinalg::kernel(f, 3, &m)?;
    println!("kernel of {m:?} over GF(3): {:?}", k.basis());

    // lines of GF(3)^2, one representative each
    let plane = Subspace::full(f, 2);
    let lines: Vec<_> = plane.projective_points().collect();
    println!("{} lines in GF(3)^2: {lines:?}", plane.projective_count());
    Ok(())
}
