//! Simplicity criteria for graded algebras, each paired with the brute-force
//! decision so that a disagreement is visible.
//!
//! * [`decide_corner_criterion`]: for a grading by a semigroup `G` with a
//!   nonzero idempotent `e` at which `G` is cancellative, such that the
//!   nonzero part of `eGe` is a hypercentral group, and a nonzero idempotent
//!   `f ∈ R_e`: `R` is simple iff it is graded simple and the center of
//!   `f R_{eGe} f` is a field.
//! * [`decide_jespers`]: for a unital algebra graded by a hypercentral
//!   group: simple iff graded simple with a field as center.
//! * [`minimal_support_central`]: central elements of minimal support in
//!   an ideal that is graded for the coarser grading by `G/Z(G)`.
//! * [`quotient_chain`]: graded simplicity for every `G/Z_i(G)` along the
//!   upper central series, which forces simplicity.

use serde::{Deserialize, Serialize};

use crate::algebras::{Algebra, FieldCheck, Simplicity, SubAlgebra};
use crate::error::{Error, Result};
use crate::fflinalg::{is_zero, Subspace};
use crate::gradings::{GradedAlgebra, GradedSimplicity};
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub e: usize,
    pub e_nonzero_idempotent: bool,
    pub cancellative_at_e: bool,
    #[serde(rename = "eGe_nonzero_is_group")]
    pub ege_nonzero_is_group: bool,
    #[serde(rename = "eGe_hypercentral")]
    pub ege_hypercentral: bool,
    pub idempotent_f: Option<Vec<u32>>,
    pub all_met: bool,
}

/// Evaluates each hypothesis of the corner criterion at `e`. `f` is the first
/// nonzero idempotent of `R_e` in enumeration order.
pub fn check_hypotheses(r: &GradedAlgebra, e: usize, budget: &Budget) -> Result<HypothesisReport> {
    let sg = r.semigroup();
    if e >= sg.len() {
        return Err(Error::Shape(format!("{e} is not a semigroup element")));
    }
    let e_nonzero_idempotent = sg.mul(e, e) == e && sg.is_nonzero(e);
    let mut report = HypothesisReport {
        e,
        e_nonzero_idempotent,
        cancellative_at_e: false,
        ege_nonzero_is_group: false,
        ege_hypercentral: false,
        idempotent_f: None,
        all_met: false,
    };
    if e_nonzero_idempotent {
        report.cancellative_at_e = sg.is_cancellative_at(e)?;
        if let Some((local, _)) = sg.nonzero_local_group(e)? {
            report.ege_nonzero_is_group = true;
            report.ege_hypercentral = local.is_hypercentral();
        }
        let re = r.component(e);
        report.idempotent_f = r
            .algebra()
            .find_idempotents(Some(&re), budget.enumeration)?
            .into_iter()
            .next();
    }
    report.all_met = report.e_nonzero_idempotent
        && report.cancellative_at_e
        && report.ege_nonzero_is_group
        && report.ege_hypercentral
        && report.idempotent_f.is_some();
    Ok(report)
}

/// The idempotent used when none is specified: the identity of a grading
/// group; otherwise the first nonzero idempotent meeting the hypotheses at
/// the semigroup level, or failing that the first nonzero idempotent.
pub fn default_idempotent(r: &GradedAlgebra) -> Option<usize> {
    if let Some(g) = r.group() {
        return Some(g.identity());
    }
    let sg = r.semigroup();
    let candidates: Vec<usize> = sg.idempotents().into_iter().filter(|&e| sg.is_nonzero(e)).collect();
    let suitable = candidates.iter().copied().find(|&e| {
        sg.is_cancellative_at(e).unwrap_or(false)
            && matches!(sg.nonzero_local_group(e), Ok(Some((ref h, _))) if h.is_hypercentral())
    });
    suitable.or_else(|| candidates.first().copied())
}

/// Why an algebra is not a field, in coordinates of the graded algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldWitness {
    ZeroRing,
    NonCommuting { left: Vec<u32>, right: Vec<u32> },
    NoIdentity,
    NonInvertible { element: Vec<u32> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded: Option<GradedSimplicity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<FieldWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<Simplicity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub graded_simple: bool,
    pub corner_center_is_field: bool,
    pub predicted_simple: bool,
    pub brute_simple: Option<bool>,
    pub agreement: Option<bool>,
    /// The idempotent `f` used for the corner (absent for the group-graded
    /// criterion, which uses the whole center).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<u32>>,
    pub corner_dim: usize,
    pub center_dim: usize,
    pub witnesses: Witnesses,
}

impl Verdict {
    /// Fills in the brute-force answer and the agreement flag.
    pub fn with_brute(mut self, brute: Simplicity) -> Self {
        let simple = brute.is_simple();
        self.brute_simple = Some(simple);
        self.agreement = Some(simple == self.predicted_simple);
        if !simple {
            self.witnesses.brute = Some(brute);
        }
        self
    }
}

/// Field check on a subalgebra, with witnesses mapped back through `lift`.
fn field_verdict(
    sub: &SubAlgebra,
    lift: impl Fn(&[u32]) -> Vec<u32>,
    budget: &Budget,
) -> Result<Option<FieldWitness>> {
    let alg = &sub.algebra;
    let basis = |i: usize| {
        let mut v = vec![0; alg.dim()];
        v[i] = 1;
        lift(&sub.embed(&v))
    };
    Ok(match alg.field_check(budget.enumeration)? {
        FieldCheck::Field => None,
        FieldCheck::ZeroRing => Some(FieldWitness::ZeroRing),
        FieldCheck::NoIdentity => Some(FieldWitness::NoIdentity),
        FieldCheck::NonCommuting { left, right } => Some(FieldWitness::NonCommuting {
            left: basis(left),
            right: basis(right),
        }),
        FieldCheck::NonInvertible { element } => Some(FieldWitness::NonInvertible {
            element: lift(&sub.embed(&element)),
        }),
    })
}

fn graded_part(r: &GradedAlgebra, budget: &Budget) -> Result<(bool, Option<GradedSimplicity>)> {
    let g = r.is_graded_simple(budget)?;
    Ok(if g.is_graded_simple() { (true, None) } else { (false, Some(g)) })
}

/// The corner criterion. `f` defaults to the idempotent chosen by
/// [`check_hypotheses`]; a supplied `f` must be a nonzero idempotent of `R_e`.
pub fn decide_corner_criterion(
    r: &GradedAlgebra,
    e: usize,
    f: Option<&[u32]>,
    budget: &Budget,
) -> Result<Verdict> {
    let report = check_hypotheses(r, e, budget)?;
    if !report.all_met {
        return Err(Error::HypothesesUnmet(Box::new(report)));
    }
    let f: Vec<u32> = match f {
        Some(f) => {
            r.algebra().field().check_vector(r.dim(), f)?;
            if is_zero(f) || !r.algebra().is_idempotent(f) || r.homogeneous_degree(f) != Some(e) {
                return Err(Error::Precondition(
                    "f must be a nonzero idempotent of the degree-e component".into(),
                ));
            }
            f.to_vec()
        }
        None => report.idempotent_f.clone().expect("all_met implies f"),
    };
    let (_, local) = r.semigroup().nonzero_local_group(e)?.expect("all_met implies a local group");
    let (s, basis) = r.subalgebra_on_subset(&local)?;
    let f_s: Vec<u32> = basis.iter().map(|&i| f[i]).collect();
    let corner = s.algebra().corner(&f_s)?;
    let center = corner.algebra.center()?;
    let dim = r.dim();
    let lift = |v: &[u32]| {
        let in_s = corner.embed(&center.embed(v));
        let mut out = vec![0; dim];
        for (k, &i) in basis.iter().enumerate() {
            out[i] = in_s[k];
        }
        out
    };
    let center_sub = SubAlgebra {
        space: Subspace::full(r.algebra().field(), center.algebra.dim()),
        algebra: center.algebra.clone(),
    };
    let center_witness = field_verdict(&center_sub, lift, budget)?;
    let (graded_simple, graded) = graded_part(r, budget)?;
    let corner_center_is_field = center_witness.is_none();
    Ok(Verdict {
        graded_simple,
        corner_center_is_field,
        predicted_simple: graded_simple && corner_center_is_field,
        brute_simple: None,
        agreement: None,
        f: Some(f),
        corner_dim: corner.algebra.dim(),
        center_dim: center.algebra.dim(),
        witnesses: Witnesses {
            graded,
            center: center_witness,
            brute: None,
        },
    })
}

/// Runs the corner criterion and brute force on the same instance.
pub fn cross_validate(r: &GradedAlgebra, e: usize, budget: &Budget) -> Result<Verdict> {
    let verdict = decide_corner_criterion(r, e, None, budget)?;
    Ok(verdict.with_brute(r.algebra().is_simple(budget)?))
}

/// The corner-criterion prediction for every nonzero idempotent of `R_e`.
pub fn predictions_for_all_f(r: &GradedAlgebra, e: usize, budget: &Budget) -> Result<Vec<(Vec<u32>, bool)>> {
    let report = check_hypotheses(r, e, budget)?;
    if !report.all_met {
        return Err(Error::HypothesesUnmet(Box::new(report)));
    }
    let idempotents = r.algebra().find_idempotents(Some(&r.component(e)), budget.enumeration)?;
    idempotents
        .into_iter()
        .map(|f| {
            let v = decide_corner_criterion(r, e, Some(&f), budget)?;
            Ok((f, v.predicted_simple))
        })
        .collect()
}

fn require_unital_hypercentral(r: &GradedAlgebra) -> Result<()> {
    let group = r.group().ok_or(Error::GroupGradingRequired)?;
    if !r.algebra().is_unital() {
        return Err(Error::Precondition("the algebra has no identity element".into()));
    }
    if !group.is_hypercentral() {
        return Err(Error::Precondition("the grading group is not hypercentral".into()));
    }
    Ok(())
}

/// Group-graded criterion: graded simple with a field as center. Also runs
/// brute force.
pub fn decide_jespers(r: &GradedAlgebra, budget: &Budget) -> Result<Verdict> {
    require_unital_hypercentral(r)?;
    let center = r.algebra().center()?;
    let center_witness = field_verdict(&center, |v| v.to_vec(), budget)?;
    let (graded_simple, graded) = graded_part(r, budget)?;
    let corner_center_is_field = center_witness.is_none();
    let verdict = Verdict {
        graded_simple,
        corner_center_is_field,
        predicted_simple: graded_simple && corner_center_is_field,
        brute_simple: None,
        agreement: None,
        f: None,
        corner_dim: r.dim(),
        center_dim: center.algebra.dim(),
        witnesses: Witnesses {
            graded,
            center: center_witness,
            brute: None,
        },
    };
    Ok(verdict.with_brute(r.algebra().is_simple(budget)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralElement {
    pub element: Vec<u32>,
    pub support_size: usize,
    /// Smallest support among all nonzero elements of the ideal, when the
    /// ideal is small enough to enumerate.
    pub ideal_min_support: Option<usize>,
}

/// Searches `I ∩ R_{Z(G)} ∩ Z(R)` for a nonzero element of minimal support.
///
/// Requires a unital, graded simple, group-graded `R` and a nonzero ideal
/// `I` that is graded for the induced `G/Z(G)`-grading. A `None` result on
/// such input contradicts the existence of central elements of small
/// support.
pub fn minimal_support_central(
    r: &GradedAlgebra,
    ideal: &Subspace,
    budget: &Budget,
) -> Result<Option<CentralElement>> {
    let group = r.group().ok_or(Error::GroupGradingRequired)?;
    let alg = r.algebra();
    if !alg.is_unital() {
        return Err(Error::Precondition("the algebra has no identity element".into()));
    }
    if ideal.ambient_dim() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: ideal.ambient_dim(),
        });
    }
    if ideal.is_zero() {
        return Err(Error::Precondition("the ideal must be nonzero".into()));
    }
    if !alg.is_ideal(ideal) {
        return Err(Error::Precondition("the subspace is not an ideal".into()));
    }
    let center_g = group.center();
    if !r.coarsen_by_quotient(&center_g)?.is_graded_ideal(ideal)? {
        return Err(Error::Precondition("the ideal is not graded for G/Z(G)".into()));
    }
    if !r.is_graded_simple(budget)?.is_graded_simple() {
        return Err(Error::Precondition("the algebra is not graded simple".into()));
    }
    let f = alg.field();
    let central_degrees = Subspace::coordinate(
        f,
        r.dim(),
        (0..r.dim()).filter(|&i| center_g.contains(&r.deg()[i])),
    );
    let search = ideal.intersect(&central_degrees)?.intersect(&alg.center()?.space)?;
    let required = search.count();
    if required > budget.enumeration as u128 {
        return Err(Error::budget(required, budget.enumeration));
    }
    let support = |v: &[u32]| r.support(v).map(|s| s.len());
    let mut best: Option<(usize, Vec<u32>)> = None;
    for v in search.nonzero_vectors() {
        let s = support(&v)?;
        if best.as_ref().map_or(true, |(b, _)| s < *b) {
            best = Some((s, v));
        }
    }
    let ideal_min_support = if ideal.count() <= budget.enumeration as u128 {
        let mut m = usize::MAX;
        for v in ideal.projective_points() {
            m = m.min(support(&v)?);
        }
        Some(m)
    } else {
        None
    };
    Ok(best.map(|(support_size, element)| CentralElement {
        element,
        support_size,
        ideal_min_support,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLevel {
    pub level: usize,
    pub subgroup: Vec<usize>,
    pub quotient_order: usize,
    pub graded_simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub all_levels_graded_simple: bool,
    pub levels: Vec<ChainLevel>,
}

/// Graded simplicity for `G/Z_i(G)` at every term `Z_i` of the upper central
/// series, up to and including `Z_k = G` (the trivial grading).
pub fn quotient_chain(r: &GradedAlgebra, budget: &Budget) -> Result<ChainReport> {
    let group = r.group().ok_or(Error::GroupGradingRequired)?;
    let series = group.upper_central_series();
    if !series.reaches_group {
        return Err(Error::Precondition("the grading group is not hypercentral".into()));
    }
    let mut levels = Vec::with_capacity(series.chain.len());
    for (level, z) in series.chain.iter().enumerate() {
        let coarse = r.coarsen_by_quotient(z)?;
        levels.push(ChainLevel {
            level,
            subgroup: z.iter().copied().collect(),
            quotient_order: group.len() / z.len(),
            graded_simple: coarse.is_graded_simple(budget)?.is_graded_simple(),
        });
    }
    Ok(ChainReport {
        all_levels_graded_simple: levels.iter().all(|l| l.graded_simple),
        levels,
    })
}

/// The brute-force answer alone, for algebras without a usable grading.
pub fn brute_simple(alg: &Algebra, budget: &Budget) -> Result<Simplicity> {
    alg.is_simple(budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::constructions::{diagonal_algebra, group_algebra, matrix_algebra};
    use crate::fflinalg::Field;
    use crate::groups;
    use crate::semigroups::SemigroupTable;

    fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    fn group_graded(p: u32, g: &groups::GroupTable) -> GradedAlgebra {
        GradedAlgebra::with_group(group_algebra(gf(p), g), g, (0..g.len()).collect()).unwrap()
    }

    fn m2_good() -> GradedAlgebra {
        GradedAlgebra::with_group(matrix_algebra(gf(2), 2), &groups::cyclic(2), vec![0, 1, 1, 0])
            .unwrap()
    }

    #[test]
    fn hypothesis_examples() {
        let b = Budget::default();
        let r = group_graded(2, &groups::cyclic(2));
        let rep = check_hypotheses(&r, 0, &b).unwrap();
        assert!(rep.all_met);
        assert_eq!(rep.idempotent_f, Some(vec![1, 0]));

        let left_zero = SemigroupTable::new(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        let r = GradedAlgebra::new(diagonal_algebra(gf(2), 2), left_zero, vec![0, 1]).unwrap();
        let rep = check_hypotheses(&r, 0, &b).unwrap();
        assert!(!rep.cancellative_at_e);
        assert!(!rep.all_met);

        // a line with zero product has no nonzero idempotent
        let nil = Algebra::new(gf(2), 1, &[]).unwrap();
        let r = GradedAlgebra::trivial(nil);
        let rep = check_hypotheses(&r, 0, &b).unwrap();
        assert_eq!(rep.idempotent_f, None);
        assert!(!rep.all_met);
    }

    #[test]
    fn corner_criterion_examples() {
        let b = Budget::default();
        let v = cross_validate(&group_graded(2, &groups::cyclic(2)), 0, &b).unwrap();
        assert!(v.graded_simple && !v.corner_center_is_field && !v.predicted_simple);
        assert_eq!((v.corner_dim, v.center_dim), (2, 2));
        assert_eq!(v.agreement, Some(true));

        let v = cross_validate(&m2_good(), 0, &b).unwrap();
        assert_eq!(v.f, Some(vec![1, 0, 0, 0]));
        let v = decide_corner_criterion(&m2_good(), 0, Some(&[1, 0, 0, 1]), &b).unwrap();
        assert_eq!(v.corner_dim, 4);
        assert!(v.graded_simple && v.corner_center_is_field && v.predicted_simple);

        let v = cross_validate(&group_graded(2, &groups::cyclic(3)), 0, &b).unwrap();
        assert!(v.graded_simple && !v.corner_center_is_field);
        assert_eq!(v.brute_simple, Some(false));
        assert_eq!(v.agreement, Some(true));
    }

    #[test]
    fn hypotheses_unmet_is_an_error() {
        let left_zero = SemigroupTable::new(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        let r = GradedAlgebra::new(diagonal_algebra(gf(2), 2), left_zero, vec![0, 1]).unwrap();
        let err = cross_validate(&r, 0, &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::HypothesesUnmet(_)));
    }

    #[test]
    fn jespers_examples() {
        let b = Budget::default();
        let v = decide_jespers(&m2_good(), &b).unwrap();
        assert!(v.predicted_simple);
        assert_eq!(v.agreement, Some(true));
        let v = decide_jespers(&group_graded(3, &groups::cyclic(3)), &b).unwrap();
        assert!(!v.predicted_simple && !v.corner_center_is_field);
        assert_eq!(v.agreement, Some(true));
        let v = decide_jespers(&GradedAlgebra::trivial(diagonal_algebra(gf(2), 1)), &b).unwrap();
        assert!(v.predicted_simple && v.brute_simple == Some(true));
        let s3 = groups::symmetric(3);
        assert!(matches!(decide_jespers(&group_graded(2, &s3), &b), Err(Error::Precondition(_))));
    }

    #[test]
    fn minimal_support_examples() {
        let b = Budget::default();
        let m = m2_good();
        let w = minimal_support_central(&m, &Subspace::full(gf(2), 4), &b).unwrap().unwrap();
        assert_eq!(w.element, vec![1, 0, 0, 1]);
        assert_eq!(w.support_size, 1);
        let r = group_graded(2, &groups::cyclic(2));
        let w = minimal_support_central(&r, &Subspace::full(gf(2), 2), &b).unwrap().unwrap();
        assert_eq!(w.element, vec![1, 0]);
        assert_eq!(w.ideal_min_support, Some(1));
        assert!(matches!(
            minimal_support_central(&r, &Subspace::zero(gf(2), 2), &b),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn quotient_chain_examples() {
        let b = Budget::default();
        let c = quotient_chain(&m2_good(), &b).unwrap();
        assert_eq!(c.levels.len(), 2);
        assert!(c.all_levels_graded_simple);
        let c = quotient_chain(&group_graded(2, &groups::cyclic(2)), &b).unwrap();
        assert!(c.levels[0].graded_simple && !c.levels[1].graded_simple);
        assert!(!c.all_levels_graded_simple);
        let c = quotient_chain(&GradedAlgebra::trivial(matrix_algebra(gf(3), 2)), &b).unwrap();
        assert_eq!(c.levels.len(), 1);
        assert!(c.all_levels_graded_simple);
    }

    #[test]
    fn prediction_is_independent_of_f() {
        let b = Budget::default();
        let preds = predictions_for_all_f(&m2_good(), 0, &b).unwrap();
        assert_eq!(preds.len(), 3);
        assert!(preds.iter().all(|(_, p)| *p));
    }
}
