//! Finite-dimensional associative algebras over GF(p), given by structure
//! constants `b_i · b_j = Σ_k c_ijk b_k` on a fixed basis.
//!
//! Ideals are linear subspaces closed under left and right multiplication by
//! every basis vector. Over GF(p) the integer multiples in the usual
//! "smallest ideal containing x" description are already scalar multiples,
//! so `ideal_closure` only has to take the span and close under products.

pub mod constructions;
mod simplicity;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fflinalg::{self, is_zero, unit_vector, Echelon, Field, Subspace};
use crate::Budget;

/// A structure constant `(i, j, k, c)`: `b_i · b_j` has coefficient `c` on `b_k`.
pub type Constant = (usize, usize, usize, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// `products[i * dim + j]` is `b_i · b_j` as sparse `(k, c)` pairs, sorted by `k`.
    products: Vec<Vec<(usize, u32)>>,
    identity: Option<Vec<u32>>,
}

impl Algebra {
    /// Builds and validates an algebra. Repeated `(i, j, k)` entries are summed.
    pub fn new(field: Field, dim: usize, constants: &[Constant]) -> Result<Self> {
        let mut dense = vec![vec![0u32; dim]; dim * dim];
        for &(i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Shape(format!(
                    "structure constant ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if c >= field.p() {
                return Err(Error::NotReduced { value: c, p: field.p() });
            }
            let slot = &mut dense[i * dim + j][k];
            *slot = field.add(*slot, c);
        }
        Self::from_dense(field, dim, dense)
    }

    /// Builds an algebra from a function giving `b_i · b_j` as a dense vector.
    pub fn from_fn(field: Field, dim: usize, f: impl Fn(usize, usize) -> Vec<u32>) -> Result<Self> {
        let mut dense = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                field.check_vector(dim, &v)?;
                dense.push(v);
            }
        }
        Self::from_dense(field, dim, dense)
    }

    fn from_dense(field: Field, dim: usize, dense: Vec<Vec<u32>>) -> Result<Self> {
        let products = dense
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|&(_, c)| c != 0).collect())
            .collect();
        let mut alg = Algebra {
            field,
            dim,
            products,
            identity: None,
        };
        alg.check_associative()?;
        alg.identity = alg.locate_identity();
        Ok(alg)
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = self.right_mul_basis(&self.basis_product(i, j), k);
                    let right = self.left_mul_basis(i, &self.basis_product(j, k));
                    if left != right {
                        return Err(Error::NonAssociativeAlgebra(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Solves `u b_j = b_j = b_j u` for all `j`.
    fn locate_identity(&self) -> Option<Vec<u32>> {
        let d = self.dim;
        if d == 0 {
            return None;
        }
        let mut rows = Vec::with_capacity(2 * d * d);
        let mut rhs = Vec::with_capacity(2 * d * d);
        for j in 0..d {
            for k in 0..d {
                let mut left = vec![0; d];
                let mut right = vec![0; d];
                for i in 0..d {
                    left[i] = self.coefficient(i, j, k);
                    right[i] = self.coefficient(j, i, k);
                }
                rows.push(left);
                rows.push(right);
                let target = u32::from(j == k);
                rhs.push(target);
                rhs.push(target);
            }
        }
        fflinalg::solve(self.field, d, &rows, &rhs).ok().flatten()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> Option<&[u32]> {
        self.identity.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.identity.is_some()
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u32 {
        self.products[i * self.dim + j]
            .iter()
            .find(|&&(kk, _)| kk == k)
            .map_or(0, |&(_, c)| c)
    }

    /// Structure constants in canonical order (`i`, then `j`, then `k`), zeros omitted.
    pub fn constants(&self) -> Vec<Constant> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in &self.products[i * d + j] {
                    out.push((i, j, k, c));
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for &(k, c) in &self.products[i * self.dim + j] {
            out[k] = c;
        }
        out
    }

    /// `b_i · v`.
    pub fn left_mul_basis(&self, i: usize, v: &[u32]) -> Vec<u32> {
        let d = self.dim;
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; d];
        for (j, &x) in v.iter().enumerate() {
            if x != 0 {
                for &(k, c) in &self.products[i * d + j] {
                    acc[k] += (x * c) as u64;
                }
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    /// `v · b_i`.
    pub fn right_mul_basis(&self, v: &[u32], i: usize) -> Vec<u32> {
        let d = self.dim;
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; d];
        for (j, &x) in v.iter().enumerate() {
            if x != 0 {
                for &(k, c) in &self.products[j * d + i] {
                    acc[k] += (x * c) as u64;
                }
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    /// Bilinear product `x · y`.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Result<Vec<u32>> {
        self.field.check_vector(self.dim, x)?;
        self.field.check_vector(self.dim, y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let d = self.dim;
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; d];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = (a * b) as u64;
                for &(k, c) in &self.products[i * d + j] {
                    acc[k] += ab * c as u64;
                }
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let d = self.dim;
        (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .find(|&(i, j)| self.products[i * d + j] != self.products[j * d + i])
    }

    /// True when every product of basis vectors vanishes.
    pub fn has_zero_product(&self) -> bool {
        self.products.iter().all(|v| v.is_empty())
    }

    pub fn is_idempotent(&self, v: &[u32]) -> bool {
        v.len() == self.dim && self.mul_unchecked(v, v) == v
    }

    /// Whether a subspace is closed under multiplication by basis vectors on
    /// both sides.
    pub fn is_ideal(&self, space: &Subspace) -> bool {
        space.ambient_dim() == self.dim
            && space.basis().iter().all(|v| {
                (0..self.dim).all(|i| {
                    space.contains_unchecked(&self.left_mul_basis(i, v))
                        && space.contains_unchecked(&self.right_mul_basis(v, i))
                })
            })
    }

    /// Smallest two-sided ideal containing the generators.
    pub fn ideal_closure(&self, generators: &[Vec<u32>]) -> Result<Ideal> {
        let mut ech = Echelon::new(self.field, self.dim);
        let mut queue = Vec::new();
        for g in generators {
            self.field.check_vector(self.dim, g)?;
            if ech.insert(g.clone()) {
                queue.push(g.clone());
            }
        }
        Ok(Ideal {
            space: self.close_under_products(ech, queue, None).into_subspace(),
        })
    }

    /// Worklist closure under `b_i · _` and `_ · b_i`. Stops early once the
    /// rank reaches `stop_at` (used when only "is it everything?" matters).
    pub(crate) fn close_under_products(
        &self,
        mut ech: Echelon,
        mut queue: Vec<Vec<u32>>,
        stop_at: Option<usize>,
    ) -> Echelon {
        let stop = stop_at.unwrap_or(usize::MAX);
        while let Some(v) = queue.pop() {
            if ech.rank() >= stop {
                break;
            }
            for i in 0..self.dim {
                for w in [self.left_mul_basis(i, &v), self.right_mul_basis(&v, i)] {
                    if !is_zero(&w) && ech.insert(w.clone()) {
                        queue.push(w);
                    }
                }
            }
        }
        ech
    }

    pub(crate) fn generates_everything(&self, v: &[u32]) -> bool {
        let mut ech = Echelon::new(self.field, self.dim);
        ech.insert(v.to_vec());
        self.close_under_products(ech, vec![v.to_vec()], Some(self.dim)).rank() == self.dim
    }

    /// Brute-force simplicity: `A·A ≠ 0` and every nonzero element generates
    /// `A` as a two-sided ideal.
    ///
    /// Small algebras are decided by enumerating one element per line
    /// (closures are invariant under nonzero scaling). When the number of
    /// lines exceeds `budget.exhaustive_simplicity` the same predicate is
    /// decided by an irreducibility certificate for `A` as a module over its
    /// multiplication algebra; see [`Algebra::is_simple_certified`].
    pub fn is_simple(&self, budget: &Budget) -> Result<Simplicity> {
        if self.dim == 0 {
            return Err(Error::ZeroAlgebra);
        }
        let full = Subspace::full(self.field, self.dim);
        if full.projective_count() <= budget.exhaustive_simplicity as u128 {
            self.is_simple_exhaustive(budget.exhaustive_simplicity)
        } else {
            self.is_simple_certified(budget)
        }
    }

    /// Enumerates every line of `A` and closes it.
    pub fn is_simple_exhaustive(&self, limit: u64) -> Result<Simplicity> {
        if self.dim == 0 {
            return Err(Error::ZeroAlgebra);
        }
        if self.has_zero_product() {
            return Ok(Simplicity::ZeroProduct);
        }
        let full = Subspace::full(self.field, self.dim);
        let required = full.projective_count();
        if required > limit as u128 {
            return Err(Error::budget(required, limit));
        }
        for v in full.projective_points() {
            if !self.generates_everything(&v) {
                let ideal = self.ideal_closure(&[v.clone()])?.space;
                return Ok(Simplicity::ProperIdeal { generator: v, ideal });
            }
        }
        Ok(Simplicity::Simple)
    }

    /// Decides simplicity with Norton's irreducibility criterion: for a
    /// singular element `θ` of the multiplication algebra `M`, `A` has no
    /// proper nonzero ideal iff every nonzero vector of `ker θ` generates `A`
    /// and some nonzero vector of `ker θᵀ` generates the dual under `Mᵀ`.
    /// Only `ker θ` is enumerated, so this scales to dimensions where full
    /// enumeration cannot.
    pub fn is_simple_certified(&self, budget: &Budget) -> Result<Simplicity> {
        if self.dim == 0 {
            return Err(Error::ZeroAlgebra);
        }
        if self.has_zero_product() {
            return Ok(Simplicity::ZeroProduct);
        }
        simplicity::certify(self, budget)
    }

    /// Induced algebra on a subspace closed under multiplication, on the
    /// subspace's canonical basis.
    pub fn restrict(&self, space: &Subspace) -> Result<SubAlgebra> {
        if space.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: space.ambient_dim(),
            });
        }
        let basis = space.basis();
        let k = basis.len();
        let mut dense = Vec::with_capacity(k * k);
        for u in basis {
            for v in basis {
                let w = self.mul_unchecked(u, v);
                dense.push(space.coordinates(&w).ok_or(Error::NotASubalgebra)?);
            }
        }
        let algebra = Algebra::from_dense(self.field, k, dense)?;
        Ok(SubAlgebra {
            space: space.clone(),
            algebra,
        })
    }

    /// The center, as the solution space of `[v, b_i] = 0` for every `i`.
    pub fn center(&self) -> Result<SubAlgebra> {
        let d = self.dim;
        let f = self.field;
        let mut rows = Vec::with_capacity(d * d);
        for i in 0..d {
            for k in 0..d {
                let row: Vec<u32> = (0..d)
                    .map(|j| f.sub(self.coefficient(j, i, k), self.coefficient(i, j, k)))
                    .collect();
                if !is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        let space = fflinalg::kernel(f, d, &rows)?;
        self.restrict(&space)
    }

    /// All nonzero idempotents of a subspace, in enumeration order.
    pub fn find_idempotents(&self, search_space: Option<&Subspace>, limit: u64) -> Result<Vec<Vec<u32>>> {
        let full;
        let space = match search_space {
            Some(s) => s,
            None => {
                full = Subspace::full(self.field, self.dim);
                &full
            }
        };
        if space.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: space.ambient_dim(),
            });
        }
        let required = space.count();
        if required > limit as u128 {
            return Err(Error::budget(required, limit));
        }
        Ok(space.nonzero_vectors().filter(|v| self.is_idempotent(v)).collect())
    }

    /// The corner subring `fAf`, spanned by the `f b_i f`. Its identity is `f`.
    pub fn corner(&self, f: &[u32]) -> Result<SubAlgebra> {
        self.field.check_vector(self.dim, f)?;
        if is_zero(f) || !self.is_idempotent(f) {
            return Err(Error::NotAnIdempotent);
        }
        let rows: Vec<Vec<u32>> = (0..self.dim)
            .map(|i| {
                let fb = self.mul_unchecked(f, &unit_vector(self.dim, i));
                self.mul_unchecked(&fb, f)
            })
            .collect();
        let space = Subspace::rref(self.field, self.dim, &rows)?;
        self.restrict(&space)
    }

    /// Exhaustive field test: commutative, unital, and `v·A = A` for one
    /// representative `v` of every line.
    pub fn field_check(&self, limit: u64) -> Result<FieldCheck> {
        if self.dim == 0 {
            return Ok(FieldCheck::ZeroRing);
        }
        if let Some((left, right)) = self.noncommuting_pair() {
            return Ok(FieldCheck::NonCommuting { left, right });
        }
        if self.identity.is_none() {
            return Ok(FieldCheck::NoIdentity);
        }
        let full = Subspace::full(self.field, self.dim);
        if full.projective_count() > limit as u128 {
            // commutative and unital: a field exactly when simple, and any
            // element of a proper ideal is a non-unit
            let budget = Budget {
                enumeration: limit,
                exhaustive_simplicity: 0,
            };
            return Ok(match self.is_simple_certified(&budget)? {
                Simplicity::Simple => FieldCheck::Field,
                Simplicity::ProperIdeal { generator, .. } => FieldCheck::NonInvertible { element: generator },
                Simplicity::ZeroProduct => FieldCheck::ZeroRing,
            });
        }
        for v in full.projective_points() {
            let images: Vec<Vec<u32>> = (0..self.dim).map(|i| self.right_mul_basis(&v, i)).collect();
            if fflinalg::rank(self.field, self.dim, &images) < self.dim {
                return Ok(FieldCheck::NonInvertible { element: v });
            }
        }
        Ok(FieldCheck::Field)
    }

    pub fn is_field(&self, limit: u64) -> Result<bool> {
        Ok(self.field_check(limit)? == FieldCheck::Field)
    }
}

/// A two-sided ideal of the algebra that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ideal {
    pub space: Subspace,
}

impl Ideal {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.space.is_full()
    }
}

/// A subalgebra: its subspace of the parent and the induced algebra on the
/// subspace's canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubAlgebra {
    pub space: Subspace,
    pub algebra: Algebra,
}

impl SubAlgebra {
    /// Parent coordinates of an element given on the subalgebra basis.
    pub fn embed(&self, coords: &[u32]) -> Vec<u32> {
        self.space.combination(coords)
    }

    /// Subalgebra coordinates of a parent element, if it lies in the subalgebra.
    pub fn project(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.space.coordinates(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Simplicity {
    Simple,
    /// All products vanish; excluded from simplicity by convention.
    ZeroProduct,
    ProperIdeal { generator: Vec<u32>, ideal: Subspace },
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FieldCheck {
    Field,
    ZeroRing,
    NonCommuting { left: usize, right: usize },
    NoIdentity,
    NonInvertible { element: Vec<u32> },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    /// GF(p)[C_n] on basis g^0..g^{n-1}.
    fn cyclic_group_algebra(p: u32, n: usize) -> Algebra {
        let c: Vec<Constant> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n, 1)))
            .collect();
        Algebra::new(gf(p), n, &c).unwrap()
    }

    /// M2(GF(p)) on E11, E12, E21, E22.
    fn m2(p: u32) -> Algebra {
        let mut c = Vec::new();
        for (x, (a, b)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            for (y, (cc, d)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                if b == cc {
                    c.push((x, y, 2 * a + d, 1));
                }
            }
        }
        Algebra::new(gf(p), 4, &c).unwrap()
    }

    fn gf2_squared() -> Algebra {
        Algebra::new(gf(2), 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]).unwrap()
    }

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn validation_and_identity() {
        let a = cyclic_group_algebra(2, 2);
        assert_eq!(a.identity(), Some(&[1, 0][..]));
        assert_eq!(m2(2).identity(), Some(&[1, 0, 0, 1][..]));
        // (b1 b1) b2 != b1 (b1 b2): b0 b0 = b1, everything else 0 except b1 b0 = b1
        let err = Algebra::new(gf(2), 2, &[(0, 0, 1, 1), (1, 0, 1, 1)]).unwrap_err();
        assert!(matches!(err, Error::NonAssociativeAlgebra(..)));
        assert!(Algebra::new(gf(2), 1, &[(0, 0, 1, 1)]).is_err());
        assert!(Algebra::new(gf(2), 1, &[(0, 0, 0, 2)]).is_err());
        let nil = Algebra::new(gf(2), 1, &[]).unwrap();
        assert_eq!(nil.identity(), None);
    }

    #[test]
    fn multiplication_examples() {
        let a = cyclic_group_algebra(2, 2);
        assert_eq!(a.mul(&[1, 1], &[0, 0]).unwrap(), vec![0, 0]);
        assert_eq!(a.mul(&[1, 1], &[1, 1]).unwrap(), vec![0, 0]);
        let m = m2(2);
        assert_eq!(m.mul(&[0, 1, 0, 0], &[0, 0, 1, 0]).unwrap(), vec![1, 0, 0, 0]);
        assert!(m.mul(&[1], &[1, 0, 0, 0]).is_err());
    }

    #[test]
    fn ideal_closure_examples() {
        let a = cyclic_group_algebra(2, 2);
        assert!(a.ideal_closure(&[vec![0, 0]]).unwrap().is_zero());
        let i = a.ideal_closure(&[vec![1, 1]]).unwrap();
        assert_eq!(i.space.basis(), &[vec![1, 1]]);
        let m = m2(2);
        assert!(m.ideal_closure(&[vec![1, 0, 0, 0]]).unwrap().is_whole());
        assert!(a.is_ideal(&i.space));
    }

    #[test]
    fn simplicity_examples() {
        let k = Algebra::new(gf(2), 1, &[(0, 0, 0, 1)]).unwrap();
        assert!(k.is_simple(&budget()).unwrap().is_simple());
        assert!(m2(2).is_simple(&budget()).unwrap().is_simple());
        match cyclic_group_algebra(2, 2).is_simple(&budget()).unwrap() {
            Simplicity::ProperIdeal { ideal, .. } => assert_eq!(ideal.basis(), &[vec![1, 1]]),
            other => panic!("unexpected {other:?}"),
        }
        let nil = Algebra::new(gf(2), 1, &[]).unwrap();
        assert_eq!(nil.is_simple(&budget()).unwrap(), Simplicity::ZeroProduct);
        let zero = Algebra::new(gf(2), 0, &[]).unwrap();
        assert!(matches!(zero.is_simple(&budget()), Err(Error::ZeroAlgebra)));
    }

    #[test]
    fn certified_route_matches_exhaustive() {
        let cases = [
            m2(2),
            m2(3),
            cyclic_group_algebra(2, 2),
            cyclic_group_algebra(2, 3),
            cyclic_group_algebra(3, 3),
            gf2_squared(),
            Algebra::new(gf(2), 1, &[(0, 0, 0, 1)]).unwrap(),
        ];
        for a in &cases {
            let ex = a.is_simple_exhaustive(1 << 20).unwrap();
            let ce = a.is_simple_certified(&budget()).unwrap();
            assert_eq!(ex.is_simple(), ce.is_simple());
            if let Simplicity::ProperIdeal { ideal, .. } = ce {
                assert!(a.is_ideal(&ideal) && !ideal.is_zero() && !ideal.is_full());
            }
        }
    }

    #[test]
    fn center_examples() {
        let a = cyclic_group_algebra(2, 3);
        assert_eq!(a.center().unwrap().space.dim(), 3);
        let z = m2(2).center().unwrap();
        assert_eq!(z.space.basis(), &[vec![1, 0, 0, 1]]);
    }

    #[test]
    fn idempotent_examples() {
        let a = cyclic_group_algebra(2, 2);
        assert_eq!(a.find_idempotents(None, 1 << 20).unwrap(), vec![vec![1, 0]]);
        let m = m2(2);
        let diag = Subspace::coordinate(gf(2), 4, [0, 3]);
        assert_eq!(
            m.find_idempotents(Some(&diag), 1 << 20).unwrap(),
            vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![1, 0, 0, 1]]
        );
        let nil = Algebra::new(gf(2), 1, &[]).unwrap();
        assert!(nil.find_idempotents(None, 1 << 20).unwrap().is_empty());
        assert!(matches!(m.find_idempotents(None, 4), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn corner_examples() {
        let m = m2(2);
        assert_eq!(m.corner(&[1, 0, 0, 1]).unwrap().space.dim(), 4);
        let c = m.corner(&[1, 0, 0, 0]).unwrap();
        assert_eq!(c.space.basis(), &[vec![1, 0, 0, 0]]);
        assert_eq!(c.algebra.identity(), Some(&[1][..]));
        let c = gf2_squared().corner(&[1, 0]).unwrap();
        assert_eq!(c.space.dim(), 1);
        assert!(matches!(m.corner(&[0, 1, 0, 0]), Err(Error::NotAnIdempotent)));
    }

    #[test]
    fn field_examples() {
        let gf3 = Algebra::new(gf(3), 1, &[(0, 0, 0, 1)]).unwrap();
        assert!(gf3.is_field(1 << 20).unwrap());
        // GF(2)[x]/(x^2+x+1): x*x = x + 1
        let gf4 = Algebra::new(
            gf(2),
            2,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
        )
        .unwrap();
        assert!(gf4.is_field(1 << 20).unwrap());
        assert_eq!(
            cyclic_group_algebra(2, 2).field_check(1 << 20).unwrap(),
            FieldCheck::NonInvertible { element: vec![1, 1] }
        );
        assert!(matches!(m2(2).field_check(1 << 20).unwrap(), FieldCheck::NonCommuting { .. }));
    }
}
