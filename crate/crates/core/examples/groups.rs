//! Centers, upper central series and hypercentrality of small groups.

use gradlab::groups;

fn main() {
    for name in ["c6", "v4", "s3", "d4", "q8", "d6"] {
        let g = groups::by_name(name).expect("known group");
        let series = g.upper_central_series();
        let orders: Vec<usize> = series.chain.iter().map(|z| z.len()).collect();
        println!(
            "{name}: order {}, center {:?}, series orders {orders:?}, hypercentral {}",
            g.len(),
            g.center(),
            g.is_hypercentral()
        );
    }
    let d4 = groups::dihedral(4);
    println!("D4 has {} subgroups", d4.subgroups().len());
    let (q, _) = d4.quotient(&d4.center()).expect("the center is normal");
    println!("D4 / Z(D4) has order {} and is abelian: {}", q.len(), q.is_abelian());
}
