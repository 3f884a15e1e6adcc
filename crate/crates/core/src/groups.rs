//! Finite groups by Cayley table: centers, quotients and the upper central
//! series. For finite groups hypercentral means nilpotent, which is the same
//! as the upper central series reaching the whole group.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroups::SemigroupTable;

/// A subgroup as a set of element indices.
pub type Subgroup = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    table: SemigroupTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl Serialize for GroupTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GroupTable", 2)?;
        st.serialize_field("n", &self.len())?;
        st.serialize_field("table", self.table.table())?;
        st.end()
    }
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let sg = SemigroupTable::new(table, None)?;
        GroupTable::from_semigroup(&sg).ok_or_else(|| {
            Error::NotAGroup(format!("table of order {n} has no identity or lacks inverses"))
        })
    }

    /// Recognises a group among semigroup tables.
    pub fn from_semigroup(sg: &SemigroupTable) -> Option<Self> {
        let n = sg.len();
        if sg.zero().is_some() {
            return None;
        }
        let identity = (0..n).find(|&e| (0..n).all(|g| sg.mul(e, g) == g && sg.mul(g, e) == g))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let h = (0..n).find(|&h| sg.mul(g, h) == identity && sg.mul(h, g) == identity)?;
            inverse.push(h);
        }
        Some(GroupTable {
            table: sg.clone(),
            identity,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table.mul(g, h)
    }

    pub fn as_semigroup(&self) -> &SemigroupTable {
        &self.table
    }

    pub fn elements(&self) -> Subgroup {
        (0..self.len()).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        BTreeSet::from([self.identity])
    }

    /// `[g, h] = g h g⁻¹ h⁻¹`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.len()).all(|g| (0..self.len()).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn center(&self) -> Subgroup {
        let n = self.len();
        (0..n)
            .filter(|&g| (0..n).all(|h| self.mul(g, h) == self.mul(h, g)))
            .collect()
    }

    pub fn is_subgroup(&self, s: &Subgroup) -> bool {
        s.contains(&self.identity)
            && s.iter().all(|&g| s.contains(&self.inv(g)) && s.iter().all(|&h| s.contains(&self.mul(g, h))))
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.is_subgroup(s)
            && (0..self.len()).all(|g| s.iter().all(|&x| s.contains(&self.mul(self.mul(g, x), self.inv(g)))))
    }

    /// The subgroup generated by a set of elements.
    pub fn generated(&self, gens: &[usize]) -> Subgroup {
        let mut s: Subgroup = BTreeSet::from([self.identity]);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if s.insert(y) {
                    frontier.push(y);
                }
            }
        }
        s
    }

    /// All subgroups: cyclic subgroups, closed under joins.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut out: BTreeSet<Subgroup> = (0..self.len()).map(|a| self.generated(&[a])).collect();
        loop {
            let current: Vec<Subgroup> = out.iter().cloned().collect();
            let mut grew = false;
            for (i, a) in current.iter().enumerate() {
                for b in &current[i + 1..] {
                    let gens: Vec<usize> = a.union(b).copied().collect();
                    grew |= out.insert(self.generated(&gens));
                }
            }
            if !grew {
                return out.into_iter().collect();
            }
        }
    }

    /// Quotient by a normal subgroup. Cosets are labelled in increasing order
    /// of their least element index. Returns the quotient and the projection.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
        let as_vec = || normal.iter().copied().collect::<Vec<_>>();
        if !self.is_subgroup(normal) {
            return Err(Error::NotASubgroup(as_vec()));
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal(as_vec()));
        }
        let n = self.len();
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if proj[g] != usize::MAX {
                continue;
            }
            let label = reps.len();
            reps.push(g);
            for &x in normal {
                proj[self.mul(g, x)] = label;
            }
        }
        let table: Vec<Vec<usize>> = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| proj[self.mul(a, b)]).collect())
            .collect();
        Ok((GroupTable::new(table)?, proj))
    }

    /// `Z_0 = {e}`, `Z_{i+1} = {g : [g, h] ∈ Z_i for all h}`, until it stops growing.
    pub fn upper_central_series(&self) -> CentralSeries {
        let n = self.len();
        let mut chain = vec![self.trivial_subgroup()];
        loop {
            let last = chain.last().expect("nonempty");
            let next: Subgroup = (0..n)
                .filter(|&g| (0..n).all(|h| last.contains(&self.commutator(g, h))))
                .collect();
            if &next == last {
                break;
            }
            debug_assert!(self.is_normal(&next));
            chain.push(next);
        }
        let reaches_group = chain.last().map(|z| z.len()) == Some(n);
        CentralSeries {
            chain,
            terminated: true,
            reaches_group,
        }
    }

    pub fn is_hypercentral(&self) -> bool {
        self.upper_central_series().reaches_group
    }

    /// Hypercentrality by its defining property: each nontrivial factor group
    /// along the series has a nontrivial center.
    pub fn is_hypercentral_by_quotients(&self) -> bool {
        let mut current = self.trivial_subgroup();
        loop {
            if current.len() == self.len() {
                return true;
            }
            let (q, proj) = self.quotient(&current).expect("series terms are normal");
            let center = q.center();
            if center.len() == 1 {
                return false;
            }
            current = (0..self.len()).filter(|&g| center.contains(&proj[g])).collect();
        }
    }

    /// Checks `Z(G/Z_i) = Z_{i+1}/Z_i` for every term of the series, including
    /// the terminal step. Returns the first failing index.
    pub fn check_quotient_centers(&self) -> std::result::Result<(), usize> {
        let series = self.upper_central_series();
        for (i, z) in series.chain.iter().enumerate() {
            let next = series.chain.get(i + 1).unwrap_or(z);
            let (q, proj) = self.quotient(z).map_err(|_| i)?;
            let image: Subgroup = next.iter().map(|&g| proj[g]).collect();
            if q.center() != image {
                return Err(i);
            }
        }
        Ok(())
    }
}

/// The upper central series of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralSeries {
    /// `Z_0 ⊊ Z_1 ⊊ ... ⊊ Z_k` with `Z_{k+1} = Z_k`.
    pub chain: Vec<Subgroup>,
    /// Always true for finite groups: the chain has stabilised.
    pub terminated: bool,
    pub reaches_group: bool,
}

pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    GroupTable::new(table).expect("cyclic group")
}

/// Dihedral group of order `2n`; element `r^a s^b` has index `a + n b`.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 1);
    let mul = |x: usize, y: usize| {
        let (a, b) = (x % n, x / n);
        let (c, d) = (y % n, y / n);
        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
        rot + n * ((b + d) % 2)
    };
    let table = (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect();
    GroupTable::new(table).expect("dihedral group")
}

/// Symmetric group on `k` points; permutations in lexicographic order,
/// composed as functions (`(στ)(i) = σ(τ(i))`).
pub fn symmetric(k: usize) -> GroupTable {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).expect("exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    perms_to_group(&out)
}

pub(crate) fn perms_to_group(perms: &[Vec<usize>]) -> GroupTable {
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&t.iter().map(|&i| s[i]).collect()))
                .collect()
        })
        .collect();
    GroupTable::new(table).expect("permutation group")
}

pub fn klein_four() -> GroupTable {
    direct_product(&cyclic(2), &cyclic(2))
}

/// Quaternion group: index `4s + u` is `(-1)^s` times unit `u ∈ {1, i, j, k}`.
pub fn quaternion() -> GroupTable {
    // unit products: (unit, sign flip)
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let table = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (u, s) = UNITS[x % 4][y % 4];
                    4 * ((x / 4 + y / 4 + s) % 2) + u
                })
                .collect()
        })
        .collect();
    GroupTable::new(table).expect("quaternion group")
}

/// `G × H` with `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (m, k) = (g.len(), h.len());
    let table = (0..m * k)
        .map(|x| {
            (0..m * k)
                .map(|y| g.mul(x / k, y / k) * k + h.mul(x % k, y % k))
                .collect()
        })
        .collect();
    GroupTable::new(table).expect("direct product")
}

/// Groups addressable by name: `c1`..`c12`, `d3`..`d6`, `s3`, `v4`
/// (also `klein4`), `q8`, `c2xc4`, `c2xc2xc2`.
pub fn by_name(name: &str) -> Option<GroupTable> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "s3" => return Some(symmetric(3)),
        "v4" | "klein4" => return Some(klein_four()),
        "q8" => return Some(quaternion()),
        "c2xc4" => return Some(direct_product(&cyclic(2), &cyclic(4))),
        "c2xc2xc2" => return Some(direct_product(&klein_four(), &cyclic(2))),
        _ => {}
    }
    let (kind, num) = lower.split_at(1);
    let n: usize = num.parse().ok()?;
    match kind {
        "c" if (1..=12).contains(&n) => Some(cyclic(n)),
        "d" if (3..=6).contains(&n) => Some(dihedral(n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> Subgroup {
        xs.iter().copied().collect()
    }

    #[test]
    fn orders_and_identities() {
        assert_eq!(cyclic(5).len(), 5);
        assert_eq!(dihedral(4).len(), 8);
        assert_eq!(symmetric(3).len(), 6);
        assert_eq!(quaternion().len(), 8);
        assert_eq!(klein_four().len(), 4);
        assert_eq!(symmetric(3).identity(), 0);
        assert!(!quaternion().is_abelian());
        assert!(matches!(GroupTable::new(vec![vec![0, 0], vec![1, 1]]), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn centers() {
        assert_eq!(cyclic(4).center(), cyclic(4).elements());
        assert_eq!(symmetric(3).center(), set(&[0]));
        // r^2 has index 2 in D4
        assert_eq!(dihedral(4).center(), set(&[0, 2]));
        assert_eq!(quaternion().center(), set(&[0, 4]));
    }

    #[test]
    fn quotients() {
        let d4 = dihedral(4);
        let (q, proj) = d4.quotient(&d4.trivial_subgroup()).unwrap();
        assert_eq!(q.len(), 8);
        assert_eq!(proj, (0..8).collect::<Vec<_>>());
        let (q, _) = d4.quotient(&d4.elements()).unwrap();
        assert_eq!(q.len(), 1);
        let (q, _) = d4.quotient(&set(&[0, 2])).unwrap();
        assert_eq!(q.len(), 4);
        assert!(q.is_abelian());
        assert!((0..4).all(|g| q.mul(g, g) == q.identity()));
        let s3 = symmetric(3);
        let transposition = (0..6).find(|&g| g != 0 && s3.mul(g, g) == 0).unwrap();
        assert!(matches!(s3.quotient(&set(&[0, transposition])), Err(Error::NotNormal(_))));
        assert!(matches!(s3.quotient(&set(&[0, 1, 2])), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn central_series() {
        let c4 = cyclic(4);
        assert_eq!(c4.upper_central_series().chain, vec![set(&[0]), c4.elements()]);
        let s3 = symmetric(3);
        let series = s3.upper_central_series();
        assert_eq!(series.chain, vec![set(&[0])]);
        assert!(series.terminated && !series.reaches_group);
        let d4 = dihedral(4);
        assert_eq!(
            d4.upper_central_series().chain,
            vec![set(&[0]), set(&[0, 2]), d4.elements()]
        );
    }

    #[test]
    fn hypercentrality_two_ways() {
        for name in ["c1", "c2", "c6", "v4", "d3", "d4", "d5", "d6", "s3", "q8", "c2xc4", "c2xc2xc2"] {
            let g = by_name(name).unwrap();
            assert_eq!(g.is_hypercentral(), g.is_hypercentral_by_quotients(), "{name}");
            assert_eq!(g.check_quotient_centers(), Ok(()), "{name}");
        }
        assert!(dihedral(4).is_hypercentral());
        assert!(!symmetric(3).is_hypercentral());
        assert!(!dihedral(3).is_hypercentral());
        assert!(quaternion().is_hypercentral());
    }

    #[test]
    fn subgroup_enumeration() {
        // D4 has 10 subgroups, Q8 has 6, S3 has 6, C2^3 has 1 + 7 + 7 + 1
        assert_eq!(dihedral(4).subgroups().len(), 10);
        assert_eq!(by_name("c2xc2xc2").unwrap().subgroups().len(), 16);
        assert_eq!(quaternion().subgroups().len(), 6);
        assert_eq!(symmetric(3).subgroups().len(), 6);
    }
}
