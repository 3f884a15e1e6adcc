//! Partial actions of finite groups on finite-dimensional algebras and their
//! partial skew group rings.
//!
//! A partial action of `G` on `A` is a family of ideals `D_g` with ring
//! isomorphisms `α_g : D_{g⁻¹} → D_g` such that `α_e = id_A`,
//! `α_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh}` and `α_g ∘ α_h = α_{gh}` on
//! `D_{h⁻¹} ∩ D_{(gh)⁻¹}`. The skew ring `A ⋆ G` has basis `u δ_g` for `u` in
//! the canonical basis of `D_g`, with
//! `(a δ_g)(b δ_h) = α_g(α_{g⁻¹}(a) b) δ_{gh}`.
//!
//! In finite dimension a set of local units contains an identity of `A`, and
//! each `D_g` that has local units has an identity `1_g`; both are required.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebras::constructions::irreducible_quadratic;
use crate::algebras::{Algebra, Ideal};
use crate::error::{Error, Result};
use crate::fflinalg::{is_zero, unit_vector, Echelon, Field, Subspace};
use crate::gradings::GradedAlgebra;
use crate::groups::GroupTable;
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAction {
    group: GroupTable,
    algebra: Algebra,
    domains: Vec<Subspace>,
    /// `maps[g][k]` is `α_g` of the `k`-th basis vector of `D_{g⁻¹}`.
    maps: Vec<Vec<Vec<u32>>>,
    identities: Vec<Vec<u32>>,
    units: Vec<Vec<u32>>,
}

fn axiom(axiom: &'static str, detail: String) -> Error {
    Error::PartialActionAxiom { axiom, detail }
}

impl PartialAction {
    /// Validates a partial action. Domains are given by spanning rows; the
    /// map for `g` lists the images of the canonical basis of `D_{g⁻¹}`.
    /// An empty unit set stands for `{1_A}`.
    pub fn new(
        group: GroupTable,
        algebra: Algebra,
        domain_rows: Vec<Vec<Vec<u32>>>,
        maps: Vec<Vec<Vec<u32>>>,
        units: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let n = group.len();
        let f = algebra.field();
        let d = algebra.dim();
        if d == 0 {
            return Err(Error::ZeroAlgebra);
        }
        if domain_rows.len() != n || maps.len() != n {
            return Err(Error::Shape(format!(
                "expected {n} domains and maps, found {} and {}",
                domain_rows.len(),
                maps.len()
            )));
        }
        let mut domains = Vec::with_capacity(n);
        for (g, rows) in domain_rows.iter().enumerate() {
            let dg = Subspace::rref(f, d, rows)?;
            for v in dg.basis() {
                for i in 0..d {
                    for (side, w) in [("left", algebra.left_mul_basis(i, v)), ("right", algebra.right_mul_basis(v, i))] {
                        if !dg.contains_unchecked(&w) {
                            return Err(axiom(
                                "ideal",
                                format!("D_{g} is not an ideal: {side} product of {v:?} with basis vector {i} leaves it"),
                            ));
                        }
                    }
                }
            }
            domains.push(dg);
        }
        let e = group.identity();
        if !domains[e].is_full() {
            return Err(axiom("identity", "D_e is not the whole algebra".into()));
        }
        for (g, images) in maps.iter().enumerate() {
            let source = &domains[group.inv(g)];
            if images.len() != source.dim() {
                return Err(Error::Shape(format!(
                    "map for {g} has {} rows, expected dim D_{} = {}",
                    images.len(),
                    group.inv(g),
                    source.dim()
                )));
            }
            for v in images {
                f.check_vector(d, v)?;
                if !domains[g].contains_unchecked(v) {
                    return Err(axiom("codomain", format!("α_{g} maps into {v:?}, outside D_{g}")));
                }
            }
        }
        let mut pa = PartialAction {
            group,
            algebra,
            domains,
            maps,
            identities: Vec::new(),
            units: Vec::new(),
        };
        pa.check_isomorphisms()?;
        pa.check_compatibility()?;
        pa.identities = pa.locate_identities()?;
        pa.units = pa.check_units(units)?;
        Ok(pa)
    }

    fn check_isomorphisms(&self) -> Result<()> {
        let e = self.group.identity();
        let f = self.algebra.field();
        for g in 0..self.group.len() {
            let source = &self.domains[self.group.inv(g)];
            let images = &self.maps[g];
            if g == e && images.as_slice() != source.basis() {
                return Err(axiom("identity", "α_e is not the identity".into()));
            }
            if crate::fflinalg::rank(f, self.algebra.dim(), images) != self.domains[g].dim()
                || source.dim() != self.domains[g].dim()
            {
                return Err(axiom("bijective", format!("α_{g} is not a bijection D_{} → D_{g}", self.group.inv(g))));
            }
            for (a, u) in source.basis().iter().enumerate() {
                for (b, v) in source.basis().iter().enumerate() {
                    let lhs = self.apply(g, &self.algebra.mul_unchecked(u, v)).expect("ideal");
                    let rhs = self.algebra.mul_unchecked(&images[a], &images[b]);
                    if lhs != rhs {
                        return Err(axiom(
                            "multiplicative",
                            format!("α_{g} does not preserve the product of basis vectors {a} and {b}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_compatibility(&self) -> Result<()> {
        let n = self.group.len();
        let f = self.algebra.field();
        let d = self.algebra.dim();
        for g in 0..n {
            let ginv = self.group.inv(g);
            for h in 0..n {
                let gh = self.group.mul(g, h);
                let source = self.domains[ginv].intersect(&self.domains[h])?;
                let image: Vec<Vec<u32>> = source
                    .basis()
                    .iter()
                    .map(|x| self.apply(g, x).expect("in domain"))
                    .collect();
                let target = self.domains[g].intersect(&self.domains[gh])?;
                if Subspace::rref(f, d, &image)? != target {
                    return Err(axiom(
                        "domains",
                        format!("α_{g}(D_{ginv} ∩ D_{h}) differs from D_{g} ∩ D_{gh} (g = {g}, h = {h})"),
                    ));
                }
                let hinv = self.group.inv(h);
                let ghinv = self.group.inv(gh);
                let common = self.domains[hinv].intersect(&self.domains[ghinv])?;
                for x in common.basis() {
                    let inner = self.apply(h, x).expect("in domain");
                    let composed = self.apply(g, &inner);
                    let direct = self.apply(gh, x);
                    if composed.is_none() || composed != direct {
                        return Err(axiom(
                            "composition",
                            format!("α_{g}(α_{h}(x)) differs from α_{gh}(x) at x = {x:?}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn locate_identities(&self) -> Result<Vec<Vec<u32>>> {
        self.domains
            .iter()
            .enumerate()
            .map(|(g, dg)| {
                if dg.is_zero() {
                    return Ok(vec![0; self.algebra.dim()]);
                }
                let sub = self.algebra.restrict(dg)?;
                match sub.algebra.identity() {
                    Some(one) => Ok(sub.embed(one)),
                    None => Err(Error::NoLocalIdentity(g)),
                }
            })
            .collect()
    }

    fn check_units(&self, units: Vec<Vec<u32>>) -> Result<Vec<Vec<u32>>> {
        let one = self.identities[self.group.identity()].clone();
        if units.is_empty() {
            return Ok(vec![one]);
        }
        let mut seen = BTreeSet::new();
        for u in &units {
            self.algebra.field().check_vector(self.algebra.dim(), u)?;
            if is_zero(u) || !self.algebra.is_idempotent(u) {
                return Err(Error::InvalidLocalUnits(format!("{u:?} is not a nonzero idempotent")));
            }
            if !seen.insert(u.clone()) {
                return Err(Error::InvalidLocalUnits(format!("{u:?} is listed twice")));
            }
        }
        // the corner fAf is all of A exactly when f is the identity
        if !units.contains(&one) {
            return Err(Error::InvalidLocalUnits(
                "no unit f satisfies fAf = A; the identity of A must be included".into(),
            ));
        }
        Ok(units)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn domain(&self, g: usize) -> &Subspace {
        &self.domains[g]
    }

    pub fn domains(&self) -> &[Subspace] {
        &self.domains
    }

    /// Images of the canonical basis of `D_{g⁻¹}` under `α_g`.
    pub fn map_rows(&self, g: usize) -> &[Vec<u32>] {
        &self.maps[g]
    }

    /// The identity `1_g` of `D_g`.
    pub fn local_identity(&self, g: usize) -> &[u32] {
        &self.identities[g]
    }

    pub fn units(&self) -> &[Vec<u32>] {
        &self.units
    }

    /// `α_g(x)` for `x ∈ D_{g⁻¹}`; `None` outside the domain.
    pub fn apply(&self, g: usize, x: &[u32]) -> Option<Vec<u32>> {
        let source = &self.domains[self.group.inv(g)];
        let coords = source.coordinates(x)?;
        let f = self.algebra.field();
        let mut out = vec![0; self.algebra.dim()];
        for (c, image) in coords.iter().zip(&self.maps[g]) {
            if *c != 0 {
                f.axpy(&mut out, *c, image);
            }
        }
        Some(out)
    }

    /// `(a δ_g)(b δ_h)` computed from the defining formula, as the pair
    /// `(gh, α_g(α_{g⁻¹}(a) b))`.
    pub fn skew_product(&self, g: usize, a: &[u32], h: usize, b: &[u32]) -> Option<(usize, Vec<u32>)> {
        let pulled = self.apply(self.group.inv(g), a)?;
        if !self.domains[h].contains_unchecked(b) {
            return None;
        }
        let prod = self.algebra.mul_unchecked(&pulled, b);
        Some((self.group.mul(g, h), self.apply(g, &prod)?))
    }

    /// Builds `A ⋆ G` graded by `G`. Associativity is verified on all basis
    /// triples; a failure is reported as [`Error::SkewAssociativity`].
    pub fn build_pskew(&self) -> Result<PartialSkewRing> {
        let n = self.group.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut labels = Vec::new();
        offsets.push(0);
        for g in 0..n {
            for k in 0..self.domains[g].dim() {
                labels.push(SkewBasisLabel { g, k });
            }
            offsets.push(labels.len());
        }
        let dim = labels.len();
        let product = |x: usize, y: usize| {
            let (lx, ly) = (labels[x], labels[y]);
            let a = &self.domains[lx.g].basis()[lx.k];
            let b = &self.domains[ly.g].basis()[ly.k];
            let (gh, c) = self.skew_product(lx.g, a, ly.g, b).expect("basis vectors lie in their domains");
            let coords = self.domains[gh].coordinates(&c).expect("product lies in D_gh");
            let mut out = vec![0; dim];
            out[offsets[gh]..offsets[gh + 1]].copy_from_slice(&coords);
            out
        };
        let algebra = Algebra::from_fn(self.algebra.field(), dim, product).map_err(|err| match err {
            Error::NonAssociativeAlgebra(i, j, k) => Error::SkewAssociativity(i, j, k),
            other => other,
        })?;
        let deg = labels.iter().map(|l| l.g).collect();
        let graded = GradedAlgebra::with_group(algebra, &self.group, deg)?;
        Ok(PartialSkewRing {
            graded,
            labels,
            offsets,
            domains: self.domains.clone(),
        })
    }

    /// Smallest `G`-invariant ideal containing the generators: alternate
    /// ideal closure with adding `α_g(I ∩ D_{g⁻¹})` until nothing changes.
    pub fn g_invariant_closure(&self, generators: &[Vec<u32>]) -> Result<Ideal> {
        let mut ideal = self.algebra.ideal_closure(generators)?;
        loop {
            let mut ech = Echelon::from_subspace(&ideal.space);
            let mut added = Vec::new();
            for g in 0..self.group.len() {
                let part = ideal.space.intersect(&self.domains[self.group.inv(g)])?;
                for x in part.basis() {
                    let y = self.apply(g, x).expect("in domain");
                    if ech.insert(y.clone()) {
                        added.push(y);
                    }
                }
            }
            if added.is_empty() {
                return Ok(ideal);
            }
            let mut gens = ideal.space.basis().to_vec();
            gens.extend(added);
            ideal = self.algebra.ideal_closure(&gens)?;
        }
    }

    pub fn is_g_invariant(&self, ideal: &Subspace) -> Result<bool> {
        for g in 0..self.group.len() {
            let part = ideal.intersect(&self.domains[self.group.inv(g)])?;
            for x in part.basis() {
                if !ideal.contains_unchecked(&self.apply(g, x).expect("in domain")) {
                    return Ok(false);
                }
            }
        }
        Ok(self.algebra.is_ideal(ideal))
    }

    /// Whether `A` and `0` are the only `G`-invariant ideals. On failure the
    /// witness is the smallest proper closure of a single element, ordered
    /// by dimension and then by canonical basis.
    pub fn is_g_simple(&self, budget: &Budget) -> Result<GSimplicity> {
        let full = Subspace::full(self.algebra.field(), self.algebra.dim());
        let required = full.projective_count();
        if required > budget.enumeration as u128 {
            return Err(Error::budget(required, budget.enumeration));
        }
        let mut best: Option<(Vec<u32>, Subspace)> = None;
        for v in full.projective_points() {
            let closure = self.g_invariant_closure(&[v.clone()])?.space;
            if closure.is_full() {
                continue;
            }
            let better = best.as_ref().map_or(true, |(_, b)| {
                (closure.dim(), closure.basis()) < (b.dim(), b.basis())
            });
            if better {
                best = Some((v, closure));
            }
        }
        Ok(match best {
            None => GSimplicity::GSimple,
            Some((generator, ideal)) => GSimplicity::ProperInvariantIdeal { generator, ideal },
        })
    }

    /// Graded simplicity of `A ⋆ G` against `G`-simplicity of `A`.
    pub fn check_skew_graded_simplicity(&self, budget: &Budget) -> Result<SkewGradedReport> {
        let ring = self.build_pskew()?;
        let graded_simple = ring.graded.is_graded_simple(budget)?.is_graded_simple();
        let g_simple = self.is_g_simple(budget)?;
        Ok(SkewGradedReport {
            pskew_dim: ring.graded.dim(),
            graded_simple,
            g_simple: g_simple.is_g_simple(),
            agreement: graded_simple == g_simple.is_g_simple(),
            witness: g_simple,
        })
    }

    /// The three equivalent assertions for a hypercentral group: (i) `A ⋆ G`
    /// is simple; (ii) `A` is `G`-simple and some `f ∈ E` has a field as
    /// the center of the corner at `f δ_e`; (iii) the same for every `f ∈ E`.
    pub fn check_skew_simplicity(&self, budget: &Budget) -> Result<SkewSimplicityReport> {
        if !self.group.is_hypercentral() {
            return Err(Error::Precondition("the group is not hypercentral".into()));
        }
        let ring = self.build_pskew()?;
        let skew = ring.graded.algebra();
        let simple = skew.is_simple(budget)?.is_simple();
        let g_simple = self.is_g_simple(budget)?.is_g_simple();
        let e = self.group.identity();
        let mut corners = Vec::with_capacity(self.units.len());
        for f in &self.units {
            let corner = skew.corner(&ring.embed(e, f)?)?;
            let center = corner.algebra.center()?;
            corners.push(UnitCorner {
                f: f.clone(),
                corner_dim: corner.algebra.dim(),
                center_dim: center.algebra.dim(),
                center_is_field: center.algebra.is_field(budget.enumeration)?,
            });
        }
        let some = corners.iter().any(|c| c.center_is_field);
        let every = corners.iter().all(|c| c.center_is_field);
        let (i, ii, iii) = (simple, g_simple && some, g_simple && every);
        Ok(SkewSimplicityReport {
            pskew_dim: ring.graded.dim(),
            g_simple,
            corners,
            assertion_i: i,
            assertion_ii: ii,
            assertion_iii: iii,
            agreement: i == ii && ii == iii,
        })
    }
}

/// Basis label `u_k δ_g`, with `u_k` the `k`-th canonical basis vector of `D_g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SkewBasisLabel {
    pub g: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSkewRing {
    pub graded: GradedAlgebra,
    pub labels: Vec<SkewBasisLabel>,
    offsets: Vec<usize>,
    domains: Vec<Subspace>,
}

impl PartialSkewRing {
    /// Coordinates of `a δ_g` for `a ∈ D_g`.
    pub fn embed(&self, g: usize, a: &[u32]) -> Result<Vec<u32>> {
        let coords = self.domains[g]
            .coordinates(a)
            .ok_or_else(|| Error::Precondition(format!("element does not lie in D_{g}")))?;
        let mut out = vec![0; self.graded.dim()];
        out[self.offsets[g]..self.offsets[g + 1]].copy_from_slice(&coords);
        Ok(out)
    }

    /// The element of `A ⋆ G` as a list of `(g, a_g)` with `a_g ∈ D_g` nonzero.
    pub fn split(&self, v: &[u32]) -> Vec<(usize, Vec<u32>)> {
        (0..self.domains.len())
            .filter_map(|g| {
                let coords = &v[self.offsets[g]..self.offsets[g + 1]];
                (!is_zero(coords)).then(|| (g, self.domains[g].combination(coords)))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GSimplicity {
    GSimple,
    ProperInvariantIdeal { generator: Vec<u32>, ideal: Subspace },
}

impl GSimplicity {
    pub fn is_g_simple(&self) -> bool {
        matches!(self, GSimplicity::GSimple)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewGradedReport {
    pub pskew_dim: usize,
    pub graded_simple: bool,
    pub g_simple: bool,
    pub agreement: bool,
    pub witness: GSimplicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitCorner {
    pub f: Vec<u32>,
    pub corner_dim: usize,
    pub center_dim: usize,
    pub center_is_field: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewSimplicityReport {
    pub pskew_dim: usize,
    pub g_simple: bool,
    pub corners: Vec<UnitCorner>,
    pub assertion_i: bool,
    pub assertion_ii: bool,
    pub assertion_iii: bool,
    pub agreement: bool,
}

/// A global action of `G` on `C^X` for a finite set `X`, where `C` is GF(p)
/// or GF(p²): `g` moves coordinate `x` to `points[g][x]`, applying the
/// Frobenius of GF(p²) when `twist[g]` is set (`twist` must be a
/// homomorphism to C2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationAction {
    pub field: Field,
    pub group: GroupTable,
    pub points: Vec<Vec<usize>>,
    pub quadratic: bool,
    pub twist: Vec<bool>,
}

impl PermutationAction {
    pub fn new(field: Field, group: GroupTable, points: Vec<Vec<usize>>) -> Result<Self> {
        let twist = vec![false; group.len()];
        Self::with_extension(field, group, points, false, twist)
    }

    pub fn with_extension(
        field: Field,
        group: GroupTable,
        points: Vec<Vec<usize>>,
        quadratic: bool,
        twist: Vec<bool>,
    ) -> Result<Self> {
        let n = group.len();
        if points.len() != n || twist.len() != n {
            return Err(Error::Shape("one permutation and one twist flag per group element".into()));
        }
        let size = points[0].len();
        for (g, perm) in points.iter().enumerate() {
            let distinct: BTreeSet<usize> = perm.iter().copied().collect();
            if perm.len() != size || distinct.len() != size || perm.iter().any(|&x| x >= size) {
                return Err(Error::Shape(format!("points[{g}] is not a permutation of 0..{size}")));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = group.mul(g, h);
                if (0..size).any(|x| points[g][points[h][x]] != points[gh][x]) {
                    return Err(Error::Shape(format!("permutations do not compose: {g}, {h}")));
                }
                if twist[gh] != (twist[g] ^ twist[h]) {
                    return Err(Error::Shape("twist is not a homomorphism to C2".into()));
                }
            }
        }
        if !quadratic && twist.iter().any(|&t| t) {
            return Err(Error::Shape("a twist needs the quadratic extension".into()));
        }
        Ok(PermutationAction {
            field,
            group,
            points,
            quadratic,
            twist,
        })
    }

    /// The action on the cosets of `H`, labelled by least representative.
    pub fn on_cosets(field: Field, group: &GroupTable, subgroup: &BTreeSet<usize>) -> Result<Self> {
        if !group.is_subgroup(subgroup) {
            return Err(Error::NotASubgroup(subgroup.iter().copied().collect()));
        }
        let n = group.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for g in 0..n {
            if label[g] == usize::MAX {
                for &h in subgroup {
                    label[group.mul(g, h)] = count;
                }
                count += 1;
            }
        }
        let rep: Vec<usize> = (0..count).map(|c| label.iter().position(|&l| l == c).expect("label")).collect();
        let points = (0..n)
            .map(|g| rep.iter().map(|&r| label[group.mul(g, r)]).collect())
            .collect();
        Self::new(field, group.clone(), points)
    }

    /// Disjoint union of two actions of the same group.
    pub fn disjoint_union(&self, other: &PermutationAction) -> Result<Self> {
        let shift = self.points[0].len();
        let points = self
            .points
            .iter()
            .zip(&other.points)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&x| x + shift)).collect())
            .collect();
        Self::with_extension(self.field, self.group.clone(), points, self.quadratic, self.twist.clone())
    }

    fn coefficient_degree(&self) -> usize {
        if self.quadratic {
            2
        } else {
            1
        }
    }

    /// The coefficient ring `C` and, for GF(p²), the matrix of the Frobenius
    /// on the basis `1, t` (`frob[c]` is the image of basis vector `c`).
    fn coefficients(&self) -> (Algebra, Vec<Vec<u32>>) {
        let f = self.field;
        if !self.quadratic {
            return (
                crate::algebras::constructions::diagonal_algebra(f, 1),
                vec![vec![1]],
            );
        }
        let c = crate::algebras::constructions::polynomial_quotient(f, &irreducible_quadratic(f));
        let t = unit_vector(2, 1);
        let mut power = unit_vector(2, 0);
        for _ in 0..f.p() {
            power = c.mul_unchecked(&power, &t);
        }
        (c, vec![unit_vector(2, 0), power])
    }

    /// Restricts the action on `B = C^X` to the ideal `A = C^Y`:
    /// `D_g = A ∩ β_g(A)` and `α_g = β_g` on `D_{g⁻¹}`.
    pub fn restrict_to(&self, subset: &[usize], units: Vec<Vec<u32>>) -> Result<PartialAction> {
        let size = self.points[0].len();
        let y: Vec<usize> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if y.is_empty() || y.iter().any(|&x| x >= size) {
            return Err(Error::Shape("subset must be a nonempty set of points".into()));
        }
        let deg = self.coefficient_degree();
        let (coeff, frob) = self.coefficients();
        let dim = y.len() * deg;
        let f = self.field;
        let position = |x: usize| y.iter().position(|&p| p == x);
        let algebra = Algebra::from_fn(f, dim, |a, b| {
            let mut out = vec![0; dim];
            if a / deg == b / deg {
                let block = a / deg;
                let prod = coeff.basis_product(a % deg, b % deg);
                out[block * deg..(block + 1) * deg].copy_from_slice(&prod);
            }
            out
        })?;
        let n = self.group.len();
        let mut domains = Vec::with_capacity(n);
        let mut maps = Vec::with_capacity(n);
        for g in 0..n {
            let ginv = self.group.inv(g);
            let rows: Vec<Vec<u32>> = y
                .iter()
                .enumerate()
                .filter(|&(_, &x)| position(self.points[ginv][x]).is_some())
                .flat_map(|(i, _)| (0..deg).map(move |c| unit_vector(dim, i * deg + c)))
                .collect();
            domains.push(rows);
            let mut images = Vec::new();
            for &x in &y {
                let Some(target) = position(self.points[g][x]) else { continue };
                for c in 0..deg {
                    let coeff_image = if self.twist[g] { frob[c].clone() } else { unit_vector(deg, c) };
                    let mut v = vec![0; dim];
                    v[target * deg..(target + 1) * deg].copy_from_slice(&coeff_image);
                    images.push(v);
                }
            }
            maps.push(images);
        }
        PartialAction::new(self.group.clone(), algebra, domains, maps, units)
    }
}
