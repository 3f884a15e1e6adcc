//! Exact linear algebra over prime fields GF(p).
//!
//! Vectors are dense `Vec<u32>` of residues. Every [`Subspace`] stores its
//! basis in reduced row-echelon form, so two subspaces are equal exactly when
//! their representations are equal.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A prime field GF(p) with 2 <= p <= 251.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=251).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u32, mut e: u32) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        (a % self.p != 0).then(|| self.pow(a, self.p - 2))
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn check_vector(self, dim: usize, v: &[u32]) -> Result<()> {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        match v.iter().find(|&&x| x >= self.p) {
            Some(&value) => Err(Error::NotReduced { value, p: self.p }),
            None => Ok(()),
        }
    }

    /// `dst += c * src`.
    #[inline]
    pub fn axpy(self, dst: &mut [u32], c: u32, src: &[u32]) {
        if c == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = (*d + c * s) % self.p;
            }
        }
    }

    pub fn scale(self, v: &mut [u32], c: u32) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn add_vectors(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vectors(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.p)
    }
}

pub fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn unit_vector(dim: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// Incrementally maintained reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, ambient: usize) -> Self {
        Echelon {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Echelon {
            field: s.field,
            ambient: s.ambient,
            rows: s.rows.clone(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Removes from `v` its components along the current pivots.
    pub fn reduce(&self, v: &mut [u32]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                self.field.axpy(v, self.field.neg(c), row);
            }
        }
    }

    /// Adds `v` to the span; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce(&mut v);
        let Some(q) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let s = f.inv(v[q]).expect("nonzero pivot");
        f.scale(&mut v, s);
        for row in self.rows.iter_mut() {
            let c = row[q];
            if c != 0 {
                f.axpy(row, f.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&pc| pc < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            field: self.field,
            ambient: self.ambient,
            rows: self.rows,
            pivots: self.pivots,
        }
    }
}

/// A linear subspace of GF(p)^n with its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient", &self.ambient)?;
        st.serialize_field("basis", &self.rows)?;
        st.serialize_field("p", &self.field.p)?;
        st.end()
    }
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Echelon::new(field, ambient).into_subspace()
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given rows, in canonical reduced row-echelon form.
    pub fn rref(field: Field, ambient: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut ech = Echelon::new(field, ambient);
        for r in rows {
            field.check_vector(ambient, r)?;
            ech.insert(r.clone());
        }
        Ok(ech.into_subspace())
    }

    /// Span of standard basis vectors.
    pub fn coordinate(field: Field, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        Subspace {
            field,
            ambient,
            rows: idx.iter().map(|&i| unit_vector(ambient, i)).collect(),
            pivots: idx,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        self.field.check_vector(self.ambient, v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        Echelon::from_subspace(self).reduce(&mut w);
        is_zero(&w)
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<u32> = self.pivots.iter().map(|&pc| v[pc]).collect();
        (self.combination(&coords) == v).then_some(coords)
    }

    /// `sum_r coeffs[r] * basis[r]`.
    pub fn combination(&self, coeffs: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.ambient];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            self.field.axpy(&mut out, c, row);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains_unchecked(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let mut ech = Echelon::from_subspace(self);
        for r in &other.rows {
            ech.insert(r.clone());
        }
        Ok(ech.into_subspace())
    }

    /// Intersection via the Zassenhaus stacking: rows `(s | s)` and `(t | 0)`;
    /// the reduced rows whose left half vanishes span the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let n = self.ambient;
        let mut ech = Echelon::new(self.field, 2 * n);
        for s in &self.rows {
            let mut row = s.clone();
            row.extend_from_slice(s);
            ech.insert(row);
        }
        for t in &other.rows {
            let mut row = t.clone();
            row.extend(std::iter::repeat(0).take(n));
            ech.insert(row);
        }
        let lower: Vec<Vec<u32>> = ech
            .rows
            .iter()
            .zip(&ech.pivots)
            .filter(|(_, &pc)| pc >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Subspace::rref(self.field, n, &lower)
    }

    /// Number of vectors, saturating.
    pub fn count(&self) -> u128 {
        (self.field.p as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Number of one-dimensional subspaces, saturating.
    pub fn projective_count(&self) -> u128 {
        match (self.field.p as u128).checked_pow(self.dim() as u32) {
            Some(n) => (n - 1) / (self.field.p as u128 - 1),
            None => u128::MAX,
        }
    }

    /// All nonzero vectors. Coefficients on the canonical basis count upward
    /// with the first basis vector as the least significant digit.
    pub fn nonzero_vectors(&self) -> NonzeroVectors<'_> {
        NonzeroVectors {
            space: self,
            digits: vec![0; self.dim()],
            done: self.dim() == 0,
        }
    }

    /// One representative per line: the first nonzero coefficient is 1.
    pub fn projective_points(&self) -> ProjectivePoints<'_> {
        let k = self.dim();
        let mut digits = vec![0; k];
        if k > 0 {
            digits[0] = 1;
        }
        ProjectivePoints {
            space: self,
            lead: 0,
            digits,
            done: k == 0,
        }
    }
}

pub struct NonzeroVectors<'a> {
    space: &'a Subspace,
    digits: Vec<u32>,
    done: bool,
}

impl Iterator for NonzeroVectors<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let p = self.space.field.p;
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                return None;
            }
            self.digits[i] += 1;
            if self.digits[i] < p {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(self.space.combination(&self.digits))
    }
}

pub struct ProjectivePoints<'a> {
    space: &'a Subspace,
    lead: usize,
    digits: Vec<u32>,
    done: bool,
}

impl Iterator for ProjectivePoints<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.space.combination(&self.digits);
        // advance the digits after the leading 1
        let p = self.space.field.p;
        let k = self.digits.len();
        let mut i = self.lead + 1;
        loop {
            if i == k {
                self.digits[self.lead] = 0;
                self.lead += 1;
                if self.lead == k {
                    self.done = true;
                } else {
                    self.digits[self.lead] = 1;
                }
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < p {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

fn check_rows(field: Field, ncols: usize, rows: &[Vec<u32>]) -> Result<()> {
    rows.iter().try_for_each(|r| field.check_vector(ncols, r))
}

/// Null space `{x : rows . x = 0}` of a matrix with `ncols` columns.
pub fn kernel(field: Field, ncols: usize, rows: &[Vec<u32>]) -> Result<Subspace> {
    check_rows(field, ncols, rows)?;
    let reduced = Subspace::rref(field, ncols, rows)?;
    let pivots = reduced.pivots();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0; ncols];
        x[free] = 1;
        for (row, &pc) in reduced.basis().iter().zip(pivots) {
            x[pc] = field.neg(row[free]);
        }
        basis.push(x);
    }
    Subspace::rref(field, ncols, &basis)
}

/// One solution of `rows . x = b`, free variables set to zero; `None` when
/// the system is inconsistent.
pub fn solve(field: Field, ncols: usize, rows: &[Vec<u32>], b: &[u32]) -> Result<Option<Vec<u32>>> {
    if b.len() != rows.len() {
        return Err(Error::DimensionMismatch {
            expected: rows.len(),
            found: b.len(),
        });
    }
    check_rows(field, ncols, rows)?;
    field.check_vector(b.len(), b)?;
    let mut ech = Echelon::new(field, ncols + 1);
    for (r, &rhs) in rows.iter().zip(b) {
        let mut aug = r.clone();
        aug.push(rhs);
        ech.insert(aug);
    }
    if ech.pivots.last() == Some(&ncols) {
        return Ok(None);
    }
    let mut x = vec![0; ncols];
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        x[pc] = row[ncols];
    }
    Ok(Some(x))
}

/// Rank of a list of vectors.
pub fn rank(field: Field, ncols: usize, rows: &[Vec<u32>]) -> usize {
    let mut ech = Echelon::new(field, ncols);
    for r in rows {
        ech.insert(r.clone());
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn field_construction() {
        assert!(gf(2).p() == 2);
        assert!(matches!(Field::new(4), Err(Error::NotPrime(4))));
        assert!(matches!(Field::new(1), Err(Error::ModulusOutOfRange(1))));
        assert!(matches!(Field::new(257), Err(Error::ModulusOutOfRange(257))));
        assert!(Field::new(251).is_ok());
    }

    #[test]
    fn rref_examples() {
        let s = Subspace::rref(gf(2), 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(s.basis(), &[vec![1, 0], vec![0, 1]]);
        let s = Subspace::rref(gf(2), 2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(s.basis(), &[vec![1, 1]]);
        let s = Subspace::rref(gf(3), 2, &[vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(s.basis(), &[vec![1, 2]]);
        assert!(matches!(
            Subspace::rref(gf(2), 2, &[vec![1, 1, 0]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::rref(gf(2), 2, &[vec![1, 1]]).unwrap();
        assert!(s.contains(&[1, 1]).unwrap());
        assert!(!s.contains(&[1, 0]).unwrap());
        let t = Subspace::rref(gf(3), 2, &[vec![1, 2]]).unwrap();
        assert!(t.contains(&[2, 1]).unwrap());
        assert!(s.contains(&[1]).is_err());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let f = gf(2);
        let s = Subspace::rref(f, 2, &[vec![1, 0]]).unwrap();
        let t = Subspace::rref(f, 2, &[vec![0, 1]]).unwrap();
        assert_eq!(s.sum(&t).unwrap().dim(), 2);
        assert_eq!(s.intersect(&t).unwrap().dim(), 0);
        assert_eq!(s.sum(&s).unwrap(), s);
        assert_eq!(s.intersect(&s).unwrap(), s);
        let full = Subspace::full(f, 2);
        let diag = Subspace::rref(f, 2, &[vec![1, 1]]).unwrap();
        assert_eq!(full.intersect(&diag).unwrap(), diag);
        assert!(s.sum(&Subspace::zero(f, 3)).is_err());
    }

    #[test]
    fn solve_examples() {
        let f = gf(2);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(solve(f, 2, &id, &[1, 1]).unwrap(), Some(vec![1, 1]));
        assert_eq!(solve(f, 1, &[vec![0]], &[1]).unwrap(), None);
        assert_eq!(solve(gf(3), 1, &[vec![2]], &[1]).unwrap(), Some(vec![2]));
        assert!(solve(f, 2, &id, &[1]).is_err());
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(gf(3), 3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert_eq!((v[0] + v[1] + v[2]) % 3, 0);
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        let f = gf(3);
        let s = Subspace::full(f, 3);
        assert_eq!(s.nonzero_vectors().count(), 26);
        assert_eq!(s.projective_points().count(), 13);
        assert_eq!(s.projective_count(), 13);
        for v in s.projective_points() {
            assert_eq!(*v.iter().find(|&&x| x != 0).unwrap(), 1);
        }
        let d = Subspace::full(gf(2), 2);
        let order: Vec<_> = d.nonzero_vectors().collect();
        assert_eq!(order, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(Subspace::zero(f, 2).nonzero_vectors().count(), 0);
        assert_eq!(Subspace::zero(f, 2).projective_points().count(), 0);
    }

    #[test]
    fn fermat_and_associativity_exhaustive_small_primes() {
        for p in [2u32, 3, 5, 7, 11, 13, 17] {
            let f = gf(p);
            for a in 0..p {
                if a != 0 {
                    assert_eq!(f.mul(a, f.pow(a, p - 2)), 1);
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..p {
                    for c in 0..p {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            assert_eq!(f.inv(0), None);
        }
    }
}
