//! Semigroup gradings with homogeneous bases.
//!
//! A grading assigns each basis vector a degree in a finite semigroup `G`;
//! the component `R_g` is the span of the basis vectors of degree `g`.
//!
//! Graded simplicity only needs homogeneous generators. If `I` is a nonzero
//! graded ideal, some `I ∩ R_g` is nonzero, so `I` contains a nonzero
//! homogeneous `v`. Conversely the ideal generated by a homogeneous `v` is
//! spanned by the products `a v b` of basis vectors, which are homogeneous
//! again, so that ideal is graded. Hence `R` is graded simple iff every
//! nonzero homogeneous element generates `R`, and it suffices to check one
//! element per line in each component.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebras::Algebra;
use crate::error::{Error, Result};
use crate::fflinalg::{is_zero, Subspace};
use crate::groups::{GroupTable, Subgroup};
use crate::semigroups::SemigroupTable;
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    algebra: Algebra,
    semigroup: SemigroupTable,
    group: Option<GroupTable>,
    deg: Vec<usize>,
}

impl GradedAlgebra {
    /// Checks `R_g R_h ⊆ R_{gh}` on all basis pairs and that no basis vector
    /// has the zero element as its degree.
    pub fn new(algebra: Algebra, semigroup: SemigroupTable, deg: Vec<usize>) -> Result<Self> {
        if deg.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: deg.len(),
            });
        }
        for (i, &g) in deg.iter().enumerate() {
            if g >= semigroup.len() {
                return Err(Error::Shape(format!(
                    "degree {g} of basis vector {i} is not a semigroup element"
                )));
            }
            if semigroup.zero() == Some(g) {
                return Err(Error::ThetaComponent(i));
            }
        }
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                let target = semigroup.mul(deg[i], deg[j]);
                let product = algebra.basis_product(i, j);
                if product.iter().enumerate().any(|(k, &c)| c != 0 && deg[k] != target) {
                    return Err(Error::GradingViolation(i, j));
                }
            }
        }
        let group = GroupTable::from_semigroup(&semigroup);
        Ok(GradedAlgebra {
            algebra,
            semigroup,
            group,
            deg,
        })
    }

    pub fn with_group(algebra: Algebra, group: &GroupTable, deg: Vec<usize>) -> Result<Self> {
        Self::new(algebra, group.as_semigroup().clone(), deg)
    }

    /// The trivial grading by the one-element group.
    pub fn trivial(algebra: Algebra) -> Self {
        let deg = vec![0; algebra.dim()];
        Self::new(algebra, SemigroupTable::new(vec![vec![0]], None).expect("trivial"), deg)
            .expect("trivial grading")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn semigroup(&self) -> &SemigroupTable {
        &self.semigroup
    }

    /// The grading semigroup as a group, when it is one.
    pub fn group(&self) -> Option<&GroupTable> {
        self.group.as_ref()
    }

    pub fn deg(&self) -> &[usize] {
        &self.deg
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn component(&self, g: usize) -> Subspace {
        let indices = (0..self.dim()).filter(|&i| self.deg[i] == g);
        Subspace::coordinate(self.algebra.field(), self.dim(), indices)
    }

    /// Degrees with a nonzero component, ascending.
    pub fn grading_support(&self) -> BTreeSet<usize> {
        self.deg.iter().copied().collect()
    }

    /// Homogeneous parts of `v` in increasing order of degree; zero parts are
    /// omitted.
    pub fn decompose(&self, v: &[u32]) -> Result<Vec<(usize, Vec<u32>)>> {
        self.algebra.field().check_vector(self.dim(), v)?;
        let mut parts: Vec<(usize, Vec<u32>)> = Vec::new();
        for g in self.grading_support() {
            let part: Vec<u32> = (0..self.dim())
                .map(|i| if self.deg[i] == g { v[i] } else { 0 })
                .collect();
            if !is_zero(&part) {
                parts.push((g, part));
            }
        }
        Ok(parts)
    }

    pub fn support(&self, v: &[u32]) -> Result<BTreeSet<usize>> {
        Ok(self.decompose(v)?.into_iter().map(|(g, _)| g).collect())
    }

    /// The degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self, v: &[u32]) -> Option<usize> {
        let parts = self.decompose(v).ok()?;
        match parts.as_slice() {
            [(g, _)] => Some(*g),
            _ => None,
        }
    }

    /// `Σ_g (I ∩ R_g) = I`.
    pub fn is_graded_ideal(&self, ideal: &Subspace) -> Result<bool> {
        let f = self.algebra.field();
        let mut sum = Subspace::zero(f, self.dim());
        for g in self.grading_support() {
            sum = sum.sum(&ideal.intersect(&self.component(g))?)?;
        }
        Ok(&sum == ideal)
    }

    /// Decides graded simplicity by closing one representative of every line
    /// in every component. As for ungraded simplicity, an algebra with
    /// `R·R = 0` is not graded simple.
    pub fn is_graded_simple(&self, budget: &Budget) -> Result<GradedSimplicity> {
        let alg = &self.algebra;
        if alg.dim() == 0 {
            return Err(Error::ZeroAlgebra);
        }
        if alg.has_zero_product() {
            return Ok(GradedSimplicity::ZeroProduct);
        }
        let support = self.grading_support();
        if support.len() == 1 {
            // every ideal is graded
            let degree = *support.first().expect("nonempty");
            return Ok(match alg.is_simple(budget)? {
                crate::algebras::Simplicity::Simple => GradedSimplicity::GradedSimple,
                crate::algebras::Simplicity::ZeroProduct => GradedSimplicity::ZeroProduct,
                crate::algebras::Simplicity::ProperIdeal { generator, ideal } => {
                    GradedSimplicity::ProperGradedIdeal {
                        degree,
                        generator,
                        ideal,
                    }
                }
            });
        }
        let components: Vec<(usize, Subspace)> =
            support.iter().map(|&g| (g, self.component(g))).collect();
        let required: u128 = components
            .iter()
            .map(|(_, c)| c.projective_count())
            .fold(0u128, u128::saturating_add);
        if required > budget.enumeration as u128 {
            return Err(Error::budget(required, budget.enumeration));
        }
        for (degree, comp) in &components {
            for v in comp.projective_points() {
                if !alg.generates_everything(&v) {
                    let ideal = alg.ideal_closure(&[v.clone()])?.space;
                    return Ok(GradedSimplicity::ProperGradedIdeal {
                        degree: *degree,
                        generator: v,
                        ideal,
                    });
                }
            }
        }
        Ok(GradedSimplicity::GradedSimple)
    }

    /// Regrades a group-graded algebra by `G/N` through the quotient map.
    pub fn coarsen_by_quotient(&self, normal: &Subgroup) -> Result<GradedAlgebra> {
        let group = self.group.as_ref().ok_or(Error::GroupGradingRequired)?;
        let (quotient, proj) = group.quotient(normal)?;
        let deg = self.deg.iter().map(|&g| proj[g]).collect();
        GradedAlgebra::with_group(self.algebra.clone(), &quotient, deg)
    }

    /// `R_H = ⊕_{g ∈ H} R_g` for a subsemigroup `H`, graded by `H` (element
    /// `i` of the new grading is the `i`-th smallest element of `H`). Also
    /// returns the basis indices of `R` that span `R_H`.
    pub fn subalgebra_on_subset(&self, subset: &[usize]) -> Result<(GradedAlgebra, Vec<usize>)> {
        let h: Vec<usize> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(&g) = h.iter().find(|&&g| g >= self.semigroup.len()) {
            return Err(Error::Shape(format!("{g} is not a semigroup element")));
        }
        if !self.semigroup.is_closed(&h) {
            return Err(Error::NotClosed(h));
        }
        let sub_table = self.semigroup.restrict(&h)?;
        let basis: Vec<usize> = (0..self.dim()).filter(|&i| h.contains(&self.deg[i])).collect();
        let n = basis.len();
        let alg = Algebra::from_fn(self.algebra.field(), n, |x, y| {
            let product = self.algebra.basis_product(basis[x], basis[y]);
            basis.iter().map(|&k| product[k]).collect()
        })?;
        let deg = basis
            .iter()
            .map(|&i| h.iter().position(|&g| g == self.deg[i]).expect("degree in H"))
            .collect();
        Ok((GradedAlgebra::new(alg, sub_table, deg)?, basis))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GradedSimplicity {
    GradedSimple,
    ZeroProduct,
    ProperGradedIdeal {
        degree: usize,
        generator: Vec<u32>,
        ideal: Subspace,
    },
}

impl GradedSimplicity {
    pub fn is_graded_simple(&self) -> bool {
        matches!(self, GradedSimplicity::GradedSimple)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::constructions::{diagonal_algebra, group_algebra, matrix_algebra};
    use crate::fflinalg::Field;
    use crate::groups;

    fn gf2() -> Field {
        Field::new(2).unwrap()
    }

    fn c2_group_algebra() -> GradedAlgebra {
        let c2 = groups::cyclic(2);
        GradedAlgebra::with_group(group_algebra(gf2(), &c2), &c2, vec![0, 1]).unwrap()
    }

    fn m2_good() -> GradedAlgebra {
        GradedAlgebra::with_group(matrix_algebra(gf2(), 2), &groups::cyclic(2), vec![0, 1, 1, 0])
            .unwrap()
    }

    #[test]
    fn validation_examples() {
        c2_group_algebra();
        m2_good();
        let err = GradedAlgebra::with_group(matrix_algebra(gf2(), 2), &groups::cyclic(2), vec![0, 0, 1, 0])
            .unwrap_err();
        assert!(matches!(err, Error::GradingViolation(1, 2)), "{err:?}");
        let theta = groups::cyclic(2).as_semigroup().with_adjoined_zero();
        let err = GradedAlgebra::new(diagonal_algebra(gf2(), 2), theta, vec![0, 2]).unwrap_err();
        assert!(matches!(err, Error::ThetaComponent(1)));
    }

    #[test]
    fn decomposition_examples() {
        let r = c2_group_algebra();
        assert!(r.decompose(&[0, 0]).unwrap().is_empty());
        assert_eq!(r.decompose(&[1, 1]).unwrap(), vec![(0, vec![1, 0]), (1, vec![0, 1])]);
        let m = m2_good();
        assert_eq!(
            m.decompose(&[1, 1, 0, 0]).unwrap(),
            vec![(0, vec![1, 0, 0, 0]), (1, vec![0, 1, 0, 0])]
        );
        assert_eq!(m.support(&[1, 1, 0, 0]).unwrap().len(), 2);
    }

    #[test]
    fn graded_ideal_examples() {
        let r = c2_group_algebra();
        let f = gf2();
        assert!(r.is_graded_ideal(&Subspace::zero(f, 2)).unwrap());
        assert!(r.is_graded_ideal(&Subspace::full(f, 2)).unwrap());
        let aug = Subspace::rref(f, 2, &[vec![1, 1]]).unwrap();
        assert!(!r.is_graded_ideal(&aug).unwrap());
        assert!(m2_good().is_graded_ideal(&Subspace::full(f, 4)).unwrap());
    }

    #[test]
    fn graded_simplicity_examples() {
        let b = Budget::default();
        assert!(c2_group_algebra().is_graded_simple(&b).unwrap().is_graded_simple());
        assert!(m2_good().is_graded_simple(&b).unwrap().is_graded_simple());
        let trivial = GradedAlgebra::trivial(diagonal_algebra(gf2(), 2));
        match trivial.is_graded_simple(&b).unwrap() {
            GradedSimplicity::ProperGradedIdeal { generator, .. } => assert_eq!(generator, vec![1, 0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coarsening_examples() {
        let d4 = groups::dihedral(4);
        let r = GradedAlgebra::with_group(group_algebra(gf2(), &d4), &d4, (0..8).collect()).unwrap();
        let same = r.coarsen_by_quotient(&d4.trivial_subgroup()).unwrap();
        assert_eq!(same.deg(), r.deg());
        let flat = r.coarsen_by_quotient(&d4.elements()).unwrap();
        assert!(flat.deg().iter().all(|&g| g == 0));
        let v = r.coarsen_by_quotient(&d4.center()).unwrap();
        let q = v.group().unwrap();
        assert_eq!(q.len(), 4);
        assert!(q.is_abelian());
        assert!((0..4).all(|g| q.mul(g, g) == q.identity()));
        let not_normal: Subgroup = [0, 4].into_iter().collect();
        assert!(matches!(r.coarsen_by_quotient(&not_normal), Err(Error::NotNormal(_))));
    }

    #[test]
    fn subalgebra_examples() {
        let r = c2_group_algebra();
        let (whole, idx) = r.subalgebra_on_subset(&[0, 1]).unwrap();
        assert_eq!(whole.algebra(), r.algebra());
        assert_eq!(idx, vec![0, 1]);
        let (re, _) = r.subalgebra_on_subset(&[0]).unwrap();
        assert_eq!(re.dim(), 1);
        assert!(re.algebra().is_field(100).unwrap());
        let (diag, idx) = m2_good().subalgebra_on_subset(&[0]).unwrap();
        assert_eq!(diag.dim(), 2);
        assert_eq!(idx, vec![0, 3]);
        let c3 = groups::cyclic(3);
        let r3 = GradedAlgebra::with_group(group_algebra(gf2(), &c3), &c3, vec![0, 1, 2]).unwrap();
        assert!(matches!(r3.subalgebra_on_subset(&[1]), Err(Error::NotClosed(_))));
    }
}
