//! Deterministic random instances.
//!
//! Graded families: group algebras `K[G]`; good gradings of `M_n(K[H])` with
//! `deg(E_ab ⊗ h) = t_a h t_b⁻¹` for a subgroup `H ≤ G` and a tuple `t`;
//! twisted group algebras of elementary abelian 2-groups over GF(3) with a
//! sign cocycle `(-1)^{xᵀBy}`; direct sums; `M_m(K[H])` graded by the full
//! groupoid with vertex group `H` (plus a zero); group gradings with a zero
//! adjoined; and small partial skew group rings.
//!
//! Partial actions are restrictions of permutation actions on `C^X`, with
//! `C` = GF(p) or GF(p²), to a coordinate ideal `C^Y`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebras::constructions::{direct_product, group_algebra, matrix_algebra, tensor, twisted_group_algebra};
use crate::criterion::check_hypotheses;
use crate::error::{Error, Result};
use crate::fflinalg::Field;
use crate::gradings::GradedAlgebra;
use crate::groups::{self, GroupTable, Subgroup};
use crate::instance::{InstanceDocument, Meta, Payload};
use crate::partial::{PartialAction, PermutationAction};
use crate::semigroups::GroupoidTable;
use crate::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    GroupAlgebra,
    GoodMatrix,
    Twisted,
    DirectSum,
    Groupoid,
    ThetaAdjoined,
    PartialSkew,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::GroupAlgebra,
        Family::GoodMatrix,
        Family::Twisted,
        Family::DirectSum,
        Family::Groupoid,
        Family::ThetaAdjoined,
        Family::PartialSkew,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GroupAlgebra => "group-algebra",
            Family::GoodMatrix => "good-matrix",
            Family::Twisted => "twisted",
            Family::DirectSum => "direct-sum",
            Family::Groupoid => "groupoid",
            Family::ThetaAdjoined => "theta-adjoined",
            Family::PartialSkew => "partial-skew",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

const HYPERCENTRAL: &[&str] = &["c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "v4", "c2xc4", "c2xc2xc2", "d4", "q8"];
const NON_HYPERCENTRAL: &[&str] = &["s3"];

/// Requested shape of a graded corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub families: Vec<Family>,
    pub primes: Vec<u32>,
    pub max_dim: usize,
    pub max_group: usize,
    /// Restrict to these group names; all known groups when `None`.
    pub groups: Option<Vec<String>>,
    /// Emit only instances meeting the corner-criterion hypotheses.
    pub require_hypotheses: bool,
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        CorpusSpec {
            seed,
            count,
            families: Family::ALL.to_vec(),
            primes: vec![2, 3],
            max_dim: 10,
            max_group: 8,
            groups: None,
            require_hypotheses: true,
        }
    }
}

fn group_pool(names: &Option<Vec<String>>, max_group: usize, hypercentral_only: bool) -> Result<Vec<(String, GroupTable)>> {
    let candidates: Vec<String> = match names {
        Some(n) => n.clone(),
        None => HYPERCENTRAL.iter().chain(NON_HYPERCENTRAL).map(|s| s.to_string()).collect(),
    };
    let mut pool = Vec::new();
    for name in candidates {
        let g = groups::by_name(&name).ok_or_else(|| Error::Unsatisfiable(format!("unknown group {name:?}")))?;
        if g.len() > max_group || (hypercentral_only && !g.is_hypercentral()) {
            continue;
        }
        pool.push((name, g));
    }
    if pool.is_empty() {
        return Err(Error::Unsatisfiable(if hypercentral_only {
            "no hypercentral group of the requested order is available".into()
        } else {
            "no group of the requested order is available".into()
        }));
    }
    Ok(pool)
}

fn check_primes(primes: &[u32]) -> Result<Vec<Field>> {
    if primes.is_empty() {
        return Err(Error::Unsatisfiable("no primes requested".into()));
    }
    primes
        .iter()
        .map(|&p| {
            if ![2, 3, 5].contains(&p) {
                return Err(Error::Unsatisfiable(format!("corpus primes are limited to 2, 3, 5; got {p}")));
            }
            Field::new(p)
        })
        .collect()
}

/// `H` as a group on `0..|H|` together with its elements in `G`.
fn subgroup_table(g: &GroupTable, h: &Subgroup) -> (GroupTable, Vec<usize>) {
    let elems: Vec<usize> = h.iter().copied().collect();
    let sg = g.as_semigroup().restrict(&elems).expect("subgroups are closed");
    (GroupTable::from_semigroup(&sg).expect("subgroup"), elems)
}

struct Generator<'a> {
    rng: ChaCha8Rng,
    fields: Vec<Field>,
    pool: Vec<(String, GroupTable)>,
    spec: &'a CorpusSpec,
}

type Candidate = (GradedAlgebra, Option<usize>, String);

impl Generator<'_> {
    fn field(&mut self) -> Field {
        *self.fields.choose(&mut self.rng).expect("nonempty")
    }

    fn group(&mut self) -> (String, GroupTable) {
        self.pool.choose(&mut self.rng).expect("nonempty").clone()
    }

    fn group_algebra(&mut self, f: Field, name: &str, g: &GroupTable) -> Option<Candidate> {
        if g.len() > self.spec.max_dim {
            return None;
        }
        let r = GradedAlgebra::with_group(group_algebra(f, g), g, (0..g.len()).collect()).ok()?;
        Some((r, None, format!("K[{name}]")))
    }

    fn good_matrix(&mut self, f: Field, name: &str, g: &GroupTable) -> Option<Candidate> {
        let n = self.rng.gen_range(2..=3);
        let subgroups: Vec<Subgroup> = g
            .subgroups()
            .into_iter()
            .filter(|h| n * n * h.len() <= self.spec.max_dim)
            .collect();
        let h = subgroups.choose(&mut self.rng)?.clone();
        let (ht, elems) = subgroup_table(g, &h);
        let t: Vec<usize> = (0..n).map(|_| self.rng.gen_range(0..g.len())).collect();
        let k = elems.len();
        let alg = tensor(&matrix_algebra(f, n), &group_algebra(f, &ht));
        let deg = (0..alg.dim())
            .map(|x| {
                let (ab, hh) = (x / k, x % k);
                g.mul(g.mul(t[ab / n], elems[hh]), g.inv(t[ab % n]))
            })
            .collect();
        let r = GradedAlgebra::with_group(alg, g, deg).ok()?;
        Some((r, None, format!("M{n}(K[H]), |H| = {k}, graded by {name} via {t:?}")))
    }

    fn twisted(&mut self) -> Option<Candidate> {
        let f = Field::new(3).ok()?;
        if !self.fields.contains(&f) {
            return None;
        }
        let k = self.rng.gen_range(1..=3);
        let order = 1usize << k;
        if order > self.spec.max_dim || order > self.spec.max_group {
            return None;
        }
        let name = ["c2", "v4", "c2xc2xc2"][k - 1];
        if let Some(allowed) = &self.spec.groups {
            if !allowed.iter().any(|a| a == name) {
                return None;
            }
        }
        let g = groups::by_name(name).expect("known");
        let form: Vec<Vec<usize>> = (0..k).map(|_| (0..k).map(|_| self.rng.gen_range(0..2)).collect()).collect();
        // element index bits, most significant first, are its coordinates
        let bit = |x: usize, i: usize| (x >> (k - 1 - i)) & 1;
        let alg = twisted_group_algebra(f, &g, |x, y| {
            let mut s = 0;
            for i in 0..k {
                for j in 0..k {
                    s += bit(x, i) * form[i][j] * bit(y, j);
                }
            }
            if s % 2 == 1 {
                2
            } else {
                1
            }
        })
        .ok()?;
        let r = GradedAlgebra::with_group(alg, &g, (0..order).collect()).ok()?;
        Some((r, None, format!("twisted K[{name}] with form {form:?}")))
    }

    fn group_graded(&mut self, f: Field, name: &str, g: &GroupTable) -> Option<Candidate> {
        if self.rng.gen_bool(0.5) {
            self.group_algebra(f, name, g)
        } else {
            self.good_matrix(f, name, g)
        }
    }

    fn direct_sum(&mut self, f: Field, name: &str, g: &GroupTable) -> Option<Candidate> {
        let (a, _, la) = self.group_graded(f, name, g)?;
        let (b, _, lb) = self.group_graded(f, name, g)?;
        if a.dim() + b.dim() > self.spec.max_dim {
            return None;
        }
        let alg = direct_product(a.algebra(), b.algebra());
        let deg = a.deg().iter().chain(b.deg()).copied().collect();
        let r = GradedAlgebra::with_group(alg, g, deg).ok()?;
        Some((r, None, format!("({la}) x ({lb})")))
    }

    fn groupoid(&mut self, f: Field, name: &str, g: &GroupTable) -> Option<Candidate> {
        let m = self.rng.gen_range(2..=3);
        if m * m * g.len() > self.spec.max_dim {
            return None;
        }
        let groupoid = GroupoidTable::full(m, g);
        let alg = tensor(&matrix_algebra(f, m), &group_algebra(f, g));
        let r = GradedAlgebra::new(alg, groupoid.to_semigroup(), (0..m * m * g.len()).collect()).ok()?;
        let e = groupoid.identity(self.rng.gen_range(0..m));
        Some((r, Some(e), format!("M{m}(K[{name}]) graded by its groupoid")))
    }

    fn theta_adjoined(&mut self, f: Field, name: &str, g: &GroupTable) -> Option<Candidate> {
        let (r, _, label) = self.group_graded(f, name, g)?;
        let sg = g.as_semigroup().with_adjoined_zero();
        let r = GradedAlgebra::new(r.algebra().clone(), sg, r.deg().to_vec()).ok()?;
        Some((r, Some(g.identity()), format!("{label}, zero adjoined")))
    }

    fn partial_skew(&mut self, f: Field, name: &str, g: &GroupTable) -> Option<Candidate> {
        let pa = random_partial_action(&mut self.rng, f, g, 6, self.spec.max_dim).ok()??;
        let ring = pa.build_pskew().ok()?;
        Some((ring.graded, None, format!("partial skew ring over {name}")))
    }

    fn candidate(&mut self, family: Family) -> Option<Candidate> {
        let f = self.field();
        let (name, g) = self.group();
        match family {
            Family::GroupAlgebra => self.group_algebra(f, &name, &g),
            Family::GoodMatrix => self.good_matrix(f, &name, &g),
            Family::Twisted => self.twisted(),
            Family::DirectSum => self.direct_sum(f, &name, &g),
            Family::Groupoid => self.groupoid(f, &name, &g),
            Family::ThetaAdjoined => self.theta_adjoined(f, &name, &g),
            Family::PartialSkew => self.partial_skew(f, &name, &g),
        }
    }
}

/// Generates `count` graded algebras, cycling through the requested
/// families. Identical specs give identical output.
pub fn graded_corpus(spec: &CorpusSpec) -> Result<Vec<InstanceDocument>> {
    if spec.families.is_empty() {
        return Err(Error::Unsatisfiable("no families requested".into()));
    }
    if spec.max_dim == 0 {
        return Err(Error::Unsatisfiable("max_dim must be positive".into()));
    }
    let fields = check_primes(&spec.primes)?;
    let pool = group_pool(&spec.groups, spec.max_group, spec.require_hypotheses)?;
    let mut gen = Generator {
        rng: ChaCha8Rng::seed_from_u64(spec.seed),
        fields,
        pool,
        spec,
    };
    let budget = Budget::default();
    let mut out = Vec::with_capacity(spec.count);
    let mut failures = 0usize;
    let limit = 200 * spec.count.max(1);
    while out.len() < spec.count {
        // a family that keeps failing yields its slot to the next one
        let family = spec.families[(out.len() + failures / 50) % spec.families.len()];
        let accepted = gen.candidate(family).filter(|(r, e, _)| {
            !spec.require_hypotheses
                || e.or_else(|| crate::criterion::default_idempotent(r))
                    .is_some_and(|e| check_hypotheses(r, e, &budget).is_ok_and(|h| h.all_met))
        });
        match accepted {
            Some((graded, e, notes)) => {
                let meta = Meta {
                    name: format!("corpus-{}-{}-{}", spec.seed, out.len(), family.name()),
                    seed: Some(spec.seed),
                    notes: Some(notes),
                };
                out.push(InstanceDocument::new(Payload::GradedAlgebra { graded, e }, meta));
                failures = 0;
            }
            None => {
                failures += 1;
                if failures > limit {
                    return Err(Error::Unsatisfiable(format!(
                        "could not generate a {} instance within the bounds",
                        family.name()
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// Requested shape of a partial-action corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub primes: Vec<u32>,
    pub max_group: usize,
    pub max_algebra_dim: usize,
    pub max_pskew_dim: usize,
    pub groups: Option<Vec<String>>,
    pub hypercentral_only: bool,
}

impl PartialCorpusSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        PartialCorpusSpec {
            seed,
            count,
            primes: vec![2, 3],
            max_group: 8,
            max_algebra_dim: 8,
            max_pskew_dim: 32,
            groups: None,
            hypercentral_only: true,
        }
    }
}

/// A random restriction of a permutation action, or `None` when the draw
/// exceeds the bounds. Units are `{1_A}` plus, sometimes, further
/// idempotents of `A`.
pub fn random_partial_action(
    rng: &mut ChaCha8Rng,
    f: Field,
    g: &GroupTable,
    max_algebra_dim: usize,
    max_pskew_dim: usize,
) -> Result<Option<PartialAction>> {
    let subgroups = g.subgroups();
    let orbits = rng.gen_range(1..=2);
    let mut action: Option<PermutationAction> = None;
    for _ in 0..orbits {
        let h = subgroups.choose(rng).expect("trivial subgroup exists");
        let next = PermutationAction::on_cosets(f, g, h)?;
        action = Some(match action {
            None => next,
            Some(a) => a.disjoint_union(&next)?,
        });
    }
    let mut action = action.expect("at least one orbit");
    if rng.gen_bool(0.25) {
        // GF(p²) coefficients, twisted along an index-2 subgroup half the time
        let index_two: Vec<&Subgroup> = subgroups.iter().filter(|h| 2 * h.len() == g.len()).collect();
        let twist = match index_two.choose(rng) {
            Some(h) if rng.gen_bool(0.5) => (0..g.len()).map(|x| !h.contains(&x)).collect(),
            _ => vec![false; g.len()],
        };
        action = PermutationAction::with_extension(f, g.clone(), action.points.clone(), true, twist)?;
    }
    let size = action.points[0].len();
    let coeff = if action.quadratic { 2 } else { 1 };
    let mut subset: Vec<usize> = (0..size).filter(|_| rng.gen_bool(0.6)).collect();
    if subset.is_empty() {
        subset.push(rng.gen_range(0..size));
    }
    if subset.len() * coeff > max_algebra_dim {
        return Ok(None);
    }
    let y: BTreeSet<usize> = subset.iter().copied().collect();
    let pskew_dim: usize = (0..g.len())
        .map(|x| y.iter().filter(|&&p| y.contains(&action.points[x][p])).count() * coeff)
        .sum();
    if pskew_dim > max_pskew_dim {
        return Ok(None);
    }
    let dim = subset.len() * coeff;
    // the identity of GF(p²) on the basis 1, t is (1, 0)
    let unit_on = |blocks: &[usize]| {
        let mut u = vec![0; dim];
        for &b in blocks {
            u[b * coeff] = 1;
        }
        u
    };
    let all: Vec<usize> = (0..subset.len()).collect();
    let mut units = vec![unit_on(&all)];
    for block in 0..subset.len() {
        if subset.len() > 1 && rng.gen_bool(0.2) {
            units.push(unit_on(&[block]));
        }
    }
    Ok(Some(action.restrict_to(&subset, units)?))
}

/// Generates `count` partial actions. The first entries are the hand-built
/// catalog actions; the rest are random restrictions.
pub fn partial_corpus(spec: &PartialCorpusSpec) -> Result<Vec<InstanceDocument>> {
    let fields = check_primes(&spec.primes)?;
    let pool = group_pool(&spec.groups, spec.max_group, spec.hypercentral_only)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for name in crate::catalog::partial_names() {
        if out.len() == spec.count {
            break;
        }
        let doc = crate::catalog::get(name)?;
        if let Payload::PartialAction(pa) = &doc.payload {
            let fits = pa.group().len() <= spec.max_group
                && fields.contains(&pa.algebra().field())
                && pa.build_pskew()?.graded.dim() <= spec.max_pskew_dim
                && (!spec.hypercentral_only || pa.group().is_hypercentral());
            if fits {
                out.push(doc);
            }
        }
    }
    let mut failures = 0usize;
    let limit = 200 * spec.count.max(1);
    while out.len() < spec.count {
        let f = *fields.choose(&mut rng).expect("nonempty");
        let (name, g) = pool.choose(&mut rng).expect("nonempty").clone();
        match random_partial_action(&mut rng, f, &g, spec.max_algebra_dim, spec.max_pskew_dim)? {
            Some(pa) => {
                let meta = Meta {
                    name: format!("partial-{}-{}", spec.seed, out.len()),
                    seed: Some(spec.seed),
                    notes: Some(format!("restricted action of {name} over GF({})", f.p())),
                };
                out.push(InstanceDocument::new(Payload::PartialAction(pa), meta));
                failures = 0;
            }
            None => {
                failures += 1;
                if failures > limit {
                    return Err(Error::Unsatisfiable("partial action bounds too tight".into()));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let spec = CorpusSpec::new(7, 30);
        let a: Vec<String> = graded_corpus(&spec).unwrap().iter().map(|d| d.to_canonical_json()).collect();
        let b: Vec<String> = graded_corpus(&spec).unwrap().iter().map(|d| d.to_canonical_json()).collect();
        assert_eq!(a, b);
        let p = PartialCorpusSpec::new(7, 12);
        let a: Vec<String> = partial_corpus(&p).unwrap().iter().map(|d| d.to_canonical_json()).collect();
        let b: Vec<String> = partial_corpus(&p).unwrap().iter().map(|d| d.to_canonical_json()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn good_matrix_batch() {
        let mut spec = CorpusSpec::new(1, 10);
        spec.families = vec![Family::GoodMatrix];
        let docs = graded_corpus(&spec).unwrap();
        assert_eq!(docs.len(), 10);
    }

    #[test]
    fn s3_with_hypotheses_is_unsatisfiable() {
        let mut spec = CorpusSpec::new(1, 5);
        spec.groups = Some(vec!["s3".into()]);
        assert!(matches!(graded_corpus(&spec), Err(Error::Unsatisfiable(_))));
        spec.require_hypotheses = false;
        spec.families = vec![Family::GroupAlgebra];
        let docs = graded_corpus(&spec).unwrap();
        assert_eq!(docs.len(), 5);
    }
}
