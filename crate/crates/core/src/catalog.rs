//! Built-in instances with known answers.

use crate::algebras::constructions::{
    diagonal_algebra, group_algebra, irreducible_quadratic, matrix_algebra, polynomial_quotient,
};
use crate::error::{Error, Result};
use crate::fflinalg::Field;
use crate::gradings::GradedAlgebra;
use crate::groups::{self, GroupTable};
use crate::instance::{InstanceDocument, Meta, Payload};
use crate::partial::{PartialAction, PermutationAction};
use crate::semigroups::{GroupoidTable, SemigroupTable};

const GRADED: &[&str] = &[
    "gf2-c2-group-algebra",
    "gf2-c3-group-algebra",
    "gf3-c3-group-algebra",
    "gf2-d4-group-algebra",
    "m2-gf2-good-grading",
    "m2-gf3-good-grading-q8",
    "gf2xgf2-trivial-grading",
    "gf2-c2-with-zero",
    "groupoid-m2-gf2",
    "gf2-left-zero-grading",
    "gf2-s3-group-algebra",
];

const PARTIAL: &[&str] = &["c2-swap-global", "c2-partial-corner", "d4-square-global", "gf9-galois-c2"];

const OTHER: &[&str] = &[
    "gf4",
    "left-zero-2",
    "semilattice-2",
    "symmetric-inverse-monoid-2",
    "groupoid-2-c2-with-zero",
    "group-s3",
    "group-d4",
    "group-q8",
    "group-v4",
    "group-c2xc4",
    "group-c6",
];

/// Every catalog entry name.
pub fn names() -> Vec<&'static str> {
    GRADED.iter().chain(PARTIAL).chain(OTHER).copied().collect()
}

pub fn graded_names() -> &'static [&'static str] {
    GRADED
}

pub fn partial_names() -> &'static [&'static str] {
    PARTIAL
}

fn gf(p: u32) -> Field {
    Field::new(p).expect("catalog primes are valid")
}

fn graded(name: &str, g: GradedAlgebra, e: Option<usize>) -> InstanceDocument {
    InstanceDocument::new(Payload::GradedAlgebra { graded: g, e }, Meta::named(name))
}

fn group_graded(p: u32, group: &GroupTable) -> GradedAlgebra {
    GradedAlgebra::with_group(group_algebra(gf(p), group), group, (0..group.len()).collect())
        .expect("group algebra grading")
}

/// The symmetric inverse monoid on `k` points: partial injections of
/// `0..k`, composed right to left, with the empty map as zero.
pub fn symmetric_inverse_monoid(k: usize) -> SemigroupTable {
    // a partial map is a vector of images, k meaning undefined
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let total = (k + 1).pow(k as u32);
    for code in 0..total {
        let mut m = Vec::with_capacity(k);
        let mut c = code;
        for _ in 0..k {
            m.push(c % (k + 1));
            c /= k + 1;
        }
        let defined: Vec<usize> = m.iter().copied().filter(|&x| x < k).collect();
        let mut sorted = defined.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == defined.len() {
            maps.push(m);
        }
    }
    let index = |m: &Vec<usize>| maps.iter().position(|x| x == m).expect("closed");
    let table = maps
        .iter()
        .map(|a| {
            maps.iter()
                .map(|b| {
                    let c: Vec<usize> = b.iter().map(|&x| if x < k { a[x] } else { k }).collect();
                    index(&c)
                })
                .collect()
        })
        .collect();
    SemigroupTable::new(table, None).expect("partial injections form a semigroup")
}

fn square_action() -> PermutationAction {
    let d4 = groups::dihedral(4);
    // r^a s^b sends vertex x to a + (-1)^b x
    let points = (0..8)
        .map(|g: usize| {
            let (a, b) = (g % 4, g / 4);
            (0..4).map(|x| if b == 0 { (x + a) % 4 } else { (a + 4 - x) % 4 }).collect()
        })
        .collect();
    PermutationAction::new(gf(2), d4, points).expect("square symmetries")
}

fn partial_corner() -> PartialAction {
    let id = vec![vec![1, 0], vec![0, 1]];
    PartialAction::new(
        groups::cyclic(2),
        diagonal_algebra(gf(2), 2),
        vec![id.clone(), vec![vec![1, 0]]],
        vec![id, vec![vec![1, 0]]],
        vec![],
    )
    .expect("partial corner action")
}

/// Looks up a catalog entry by name.
pub fn get(name: &str) -> Result<InstanceDocument> {
    let doc = match name {
        "gf2-c2-group-algebra" => graded(name, group_graded(2, &groups::cyclic(2)), None),
        "gf2-c3-group-algebra" => graded(name, group_graded(2, &groups::cyclic(3)), None),
        "gf3-c3-group-algebra" => graded(name, group_graded(3, &groups::cyclic(3)), None),
        "gf2-d4-group-algebra" => graded(name, group_graded(2, &groups::dihedral(4)), None),
        "gf2-s3-group-algebra" => graded(name, group_graded(2, &groups::symmetric(3)), None),
        "m2-gf2-good-grading" => {
            let g = GradedAlgebra::with_group(matrix_algebra(gf(2), 2), &groups::cyclic(2), vec![0, 1, 1, 0])?;
            graded(name, g, None)
        }
        "m2-gf3-good-grading-q8" => {
            // deg E_ab = g_a g_b⁻¹ for (g_0, g_1) = (1, i)
            let q8 = groups::quaternion();
            let t = [q8.identity(), 1];
            let deg = (0..4).map(|x| q8.mul(t[x / 2], q8.inv(t[x % 2]))).collect();
            graded(name, GradedAlgebra::with_group(matrix_algebra(gf(3), 2), &q8, deg)?, None)
        }
        "gf2xgf2-trivial-grading" => graded(name, GradedAlgebra::trivial(diagonal_algebra(gf(2), 2)), None),
        "gf2-c2-with-zero" => {
            let sg = groups::cyclic(2).as_semigroup().with_adjoined_zero();
            graded(name, GradedAlgebra::new(group_algebra(gf(2), &groups::cyclic(2)), sg, vec![0, 1])?, Some(0))
        }
        "groupoid-m2-gf2" => {
            let groupoid = GroupoidTable::full(2, &groups::cyclic(1));
            let g = GradedAlgebra::new(matrix_algebra(gf(2), 2), groupoid.to_semigroup(), vec![0, 1, 2, 3])?;
            graded(name, g, Some(groupoid.identity(0)))
        }
        "gf2-left-zero-grading" => {
            let lz = SemigroupTable::new(vec![vec![0, 0], vec![1, 1]], None)?;
            graded(name, GradedAlgebra::new(diagonal_algebra(gf(2), 2), lz, vec![0, 1])?, Some(0))
        }
        "c2-swap-global" => {
            let act = PermutationAction::new(gf(2), groups::cyclic(2), vec![vec![0, 1], vec![1, 0]])?;
            InstanceDocument::new(Payload::PartialAction(act.restrict_to(&[0, 1], vec![])?), Meta::named(name))
        }
        "c2-partial-corner" => InstanceDocument::new(Payload::PartialAction(partial_corner()), Meta::named(name)),
        "d4-square-global" => {
            let pa = square_action().restrict_to(&[0, 1, 2, 3], vec![])?;
            InstanceDocument::new(Payload::PartialAction(pa), Meta::named(name))
        }
        "gf9-galois-c2" => {
            let act =
                PermutationAction::with_extension(gf(3), groups::cyclic(2), vec![vec![0], vec![0]], true, vec![false, true])?;
            InstanceDocument::new(Payload::PartialAction(act.restrict_to(&[0], vec![])?), Meta::named(name))
        }
        "gf4" => {
            let f = gf(2);
            let alg = polynomial_quotient(f, &irreducible_quadratic(f));
            InstanceDocument::new(Payload::Algebra(alg), Meta::named(name))
        }
        "left-zero-2" => {
            let lz = SemigroupTable::new(vec![vec![0, 0], vec![1, 1]], None)?;
            InstanceDocument::new(Payload::Semigroup(lz), Meta::named(name))
        }
        "semilattice-2" => {
            let sl = SemigroupTable::new(vec![vec![0, 0], vec![0, 1]], None)?;
            InstanceDocument::new(Payload::Semigroup(sl), Meta::named(name))
        }
        "symmetric-inverse-monoid-2" => {
            InstanceDocument::new(Payload::Semigroup(symmetric_inverse_monoid(2)), Meta::named(name))
        }
        "groupoid-2-c2-with-zero" => {
            let sg = GroupoidTable::full(2, &groups::cyclic(2)).to_semigroup();
            InstanceDocument::new(Payload::Semigroup(sg), Meta::named(name))
        }
        _ => match name.strip_prefix("group-").and_then(groups::by_name) {
            Some(g) => InstanceDocument::new(Payload::Group(g), Meta::named(name)),
            None => return Err(Error::Shape(format!("no catalog entry named {name:?}"))),
        },
    };
    Ok(doc)
}

/// The named groups used for structural checks.
pub fn groups() -> Vec<(&'static str, GroupTable)> {
    ["c1", "c2", "c3", "c4", "c6", "c8", "v4", "c2xc4", "c2xc2xc2", "s3", "d4", "q8", "d5", "d6"]
        .into_iter()
        .map(|n| (n, groups::by_name(n).expect("known group")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_and_round_trips() {
        for name in names() {
            let doc = get(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(doc.name(), name);
            let again = crate::instance::parse_instance(&doc.to_canonical_json()).unwrap();
            assert_eq!(again, doc, "{name}");
        }
        assert!(get("no-such-entry").is_err());
    }

    #[test]
    fn inverse_monoid_shape() {
        let s = symmetric_inverse_monoid(2);
        assert_eq!(s.len(), 7);
        assert!(s.is_inverse_semigroup());
        assert!(s.zero().is_some());
    }
}
