//! Finite semigroups given by Cayley tables.
//!
//! Predicates here are brute force: tables are tiny, and an `O(n^3)` or
//! `O(n^4)` sweep is both exact and fast. When a table has a zero element
//! `θ`, "nonzero" means "not `θ`"; otherwise every element is nonzero.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::GroupTable;

/// A finite semigroup on `0..n` with `table[g][h] = gh`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemigroupTable {
    n: usize,
    table: Vec<Vec<usize>>,
    zero: Option<usize>,
}

impl SemigroupTable {
    /// Validates shape and associativity.
    ///
    /// A declared zero is checked. Without a declaration, a zero element is
    /// detected for tables with at least two elements; the one-element table
    /// is treated as the trivial group and has no zero.
    pub fn new(table: Vec<Vec<usize>>, zero: Option<usize>) -> Result<Self> {
        Self::build(table, zero, true)
    }

    fn build(table: Vec<Vec<usize>>, zero: Option<usize>, detect: bool) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Shape("semigroup table is empty".into()));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "table row {r} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Shape(format!("table row {r} contains out-of-range entry {x}")));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return Err(Error::NonAssociativeTable(g, h, k));
                    }
                }
            }
        }
        let mut s = SemigroupTable { n, table, zero: None };
        s.zero = match zero {
            Some(z) => {
                if z >= n || !s.is_zero_element(z) {
                    return Err(Error::NotAZero(z));
                }
                Some(z)
            }
            None if detect && n >= 2 => (0..n).find(|&z| s.is_zero_element(z)),
            None => None,
        };
        Ok(s)
    }

    fn is_zero_element(&self, z: usize) -> bool {
        (0..self.n).all(|g| self.table[z][g] == z && self.table[g][z] == z)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn is_nonzero(&self, g: usize) -> bool {
        Some(g) != self.zero
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&g| self.is_nonzero(g))
    }

    /// The same semigroup with a fresh zero element `θ = n` adjoined.
    pub fn with_adjoined_zero(&self) -> SemigroupTable {
        let n = self.n;
        let mut table: Vec<Vec<usize>> = self
            .table
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(n);
                r
            })
            .collect();
        table.push(vec![n; n + 1]);
        SemigroupTable {
            n: n + 1,
            table,
            zero: Some(n),
        }
    }

    /// All `g` with `gg = g`, including `θ` when present.
    pub fn idempotents(&self) -> BTreeSet<usize> {
        (0..self.n).filter(|&g| self.mul(g, g) == g).collect()
    }

    fn check_nonzero_idempotent(&self, e: usize) -> Result<()> {
        if e >= self.n || self.mul(e, e) != e {
            return Err(Error::NotIdempotent(e));
        }
        if Some(e) == self.zero {
            return Err(Error::ZeroIdempotent(e));
        }
        Ok(())
    }

    /// Whether `e·a·x·b·e = e·a·y·b·e ≠ θ` forces `x = y`.
    ///
    /// For fixed `(a, b)` the map `x ↦ e·a·x·b·e` must be injective on the
    /// elements it sends to a nonzero value; that sweeps every quadruple.
    pub fn is_cancellative_at(&self, e: usize) -> Result<bool> {
        self.check_nonzero_idempotent(e)?;
        let n = self.n;
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            let ea = self.mul(e, a);
            for b in 0..n {
                let be = self.mul(b, e);
                seen.iter_mut().for_each(|s| *s = usize::MAX);
                for x in 0..n {
                    let v = self.mul(self.mul(ea, x), be);
                    if !self.is_nonzero(v) {
                        continue;
                    }
                    if seen[v] != usize::MAX {
                        return Ok(false);
                    }
                    seen[v] = x;
                }
            }
        }
        Ok(true)
    }

    /// The local subsemigroup `eGe`, as a sorted element list.
    pub fn local_elements(&self, e: usize) -> Result<Vec<usize>> {
        if e >= self.n || self.mul(e, e) != e {
            return Err(Error::NotIdempotent(e));
        }
        let set: BTreeSet<usize> = (0..self.n).map(|g| self.mul(self.mul(e, g), e)).collect();
        Ok(set.into_iter().collect())
    }

    /// `eGe` together with its induced table (element `i` of the table is
    /// `elements[i]`).
    pub fn local_subsemigroup(&self, e: usize) -> Result<(Vec<usize>, SemigroupTable)> {
        let elements = self.local_elements(e)?;
        let table = self.restrict(&elements)?;
        Ok((elements, table))
    }

    /// Induced table on a subset closed under multiplication. The zero is
    /// kept if it lies in the subset; no other element becomes a zero.
    pub fn restrict(&self, subset: &[usize]) -> Result<SemigroupTable> {
        let index = |g: usize| subset.iter().position(|&x| x == g);
        let mut table = Vec::with_capacity(subset.len());
        for &g in subset {
            let mut row = Vec::with_capacity(subset.len());
            for &h in subset {
                match index(self.mul(g, h)) {
                    Some(i) => row.push(i),
                    None => return Err(Error::NotClosed(subset.to_vec())),
                }
            }
            table.push(row);
        }
        let zero = self.zero.and_then(index);
        SemigroupTable::build(table, zero, false)
    }

    pub fn is_closed(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .all(|&g| subset.iter().all(|&h| subset.contains(&self.mul(g, h))))
    }

    /// If the nonzero elements of `eGe` form a group with identity `e`,
    /// returns that group and the embedding of its elements into `self`.
    pub fn nonzero_local_group(&self, e: usize) -> Result<Option<(GroupTable, Vec<usize>)>> {
        let elements: Vec<usize> = self
            .local_elements(e)?
            .into_iter()
            .filter(|&g| self.is_nonzero(g))
            .collect();
        if !elements.contains(&e) || !self.is_closed(&elements) {
            return Ok(None);
        }
        let index = |g: usize| elements.iter().position(|&x| x == g).expect("closed");
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|&g| elements.iter().map(|&h| index(self.mul(g, h))).collect())
            .collect();
        Ok(GroupTable::new(table).ok().map(|grp| (grp, elements)))
    }

    /// A nonzero pair `(g, h)` with `h ∉ G¹gG¹`, or `None` when every nonzero
    /// element generates all nonzero elements as a two-sided ideal.
    pub fn simplicity_witness(&self) -> Option<(usize, usize)> {
        for g in self.nonzero_elements() {
            let mut ideal = vec![false; self.n];
            ideal[g] = true;
            for a in 0..self.n {
                ideal[self.mul(a, g)] = true;
                ideal[self.mul(g, a)] = true;
                for b in 0..self.n {
                    ideal[self.mul(self.mul(a, g), b)] = true;
                }
            }
            if let Some(h) = self.nonzero_elements().find(|&h| !ideal[h]) {
                return Some((g, h));
            }
        }
        None
    }

    pub fn is_simple_semigroup(&self) -> bool {
        self.simplicity_witness().is_none()
    }

    /// Inverses of `x`: all `y` with `xyx = x` and `yxy = y`.
    pub fn inverses_of(&self, x: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| {
                self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y
            })
            .collect()
    }

    /// Every element has exactly one inverse.
    pub fn is_inverse_semigroup(&self) -> bool {
        (0..self.n).all(|x| self.inverses_of(x).len() == 1)
    }
}

/// A finite groupoid: morphisms with domain and codomain, composition
/// `g∘h` defined exactly when `d(g) = c(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidTable {
    objects: usize,
    /// `(domain, codomain)` per morphism.
    ends: Vec<(usize, usize)>,
    compose: Vec<Vec<Option<usize>>>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
}

impl GroupoidTable {
    pub fn new(
        objects: usize,
        ends: Vec<(usize, usize)>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let m = ends.len();
        let bad = |msg: String| Err(Error::InvalidGroupoid(msg));
        if compose.len() != m || compose.iter().any(|r| r.len() != m) {
            return bad(format!("composition table must be {m}x{m}"));
        }
        if let Some(&(d, c)) = ends.iter().find(|&&(d, c)| d >= objects || c >= objects) {
            return bad(format!("object index out of range in ({d}, {c})"));
        }
        for g in 0..m {
            for h in 0..m {
                let defined = ends[g].0 == ends[h].1;
                match (compose[g][h], defined) {
                    (Some(gh), true) => {
                        if gh >= m || ends[gh] != (ends[h].0, ends[g].1) {
                            return bad(format!("composite {g}∘{h} has wrong endpoints"));
                        }
                    }
                    (None, false) => {}
                    (Some(_), false) => return bad(format!("{g}∘{h} defined but d({g}) != c({h})")),
                    (None, true) => return bad(format!("{g}∘{h} undefined but d({g}) = c({h})")),
                }
            }
        }
        for g in 0..m {
            for h in 0..m {
                for k in 0..m {
                    if let (Some(gh), Some(hk)) = (compose[g][h], compose[h][k]) {
                        if compose[gh][k] != compose[g][hk] {
                            return bad(format!("composition not associative at ({g}, {h}, {k})"));
                        }
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(objects);
        for x in 0..objects {
            let id = (0..m).find(|&i| {
                ends[i] == (x, x)
                    && (0..m).all(|g| {
                        (ends[g].0 != x || compose[g][i] == Some(g))
                            && (ends[g].1 != x || compose[i][g] == Some(g))
                    })
            });
            match id {
                Some(i) => identities.push(i),
                None => return bad(format!("object {x} has no identity morphism")),
            }
        }
        let mut inverses = Vec::with_capacity(m);
        for g in 0..m {
            let (d, c) = ends[g];
            let inv = (0..m).find(|&h| {
                compose[g][h] == Some(identities[c]) && compose[h][g] == Some(identities[d])
            });
            match inv {
                Some(h) => inverses.push(h),
                None => return bad(format!("morphism {g} is not invertible")),
            }
        }
        Ok(GroupoidTable {
            objects,
            ends,
            compose,
            identities,
            inverses,
        })
    }

    /// The connected groupoid on `objects` objects whose vertex groups are
    /// `vertex`. Morphism `(c ← d, h)` has index `(c * objects + d) * |H| + h`
    /// and composes as `(a ← b, h)(b ← d, k) = (a ← d, hk)`.
    pub fn full(objects: usize, vertex: &GroupTable) -> Self {
        let k = vertex.len();
        let idx = |c: usize, d: usize, h: usize| (c * objects + d) * k + h;
        let mut ends = Vec::new();
        for c in 0..objects {
            for d in 0..objects {
                for _ in 0..k {
                    ends.push((d, c));
                }
            }
        }
        let m = ends.len();
        let mut compose = vec![vec![None; m]; m];
        for (a, b, h) in (0..objects).flat_map(|a| (0..objects).flat_map(move |b| (0..k).map(move |h| (a, b, h)))) {
            for (d, kk) in (0..objects).flat_map(|d| (0..k).map(move |kk| (d, kk))) {
                compose[idx(a, b, h)][idx(b, d, kk)] = Some(idx(a, d, vertex.mul(h, kk)));
            }
        }
        GroupoidTable::new(objects, ends, compose).expect("full groupoid is valid")
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// Morphisms plus an adjoined zero `θ` (index = number of morphisms);
    /// undefined composites become `θ`.
    pub fn to_semigroup(&self) -> SemigroupTable {
        let m = self.ends.len();
        let theta = m;
        let mut table = vec![vec![theta; m + 1]; m + 1];
        for g in 0..m {
            for h in 0..m {
                if let Some(gh) = self.compose[g][h] {
                    table[g][h] = gh;
                }
            }
        }
        SemigroupTable::new(table, Some(theta)).expect("groupoid semigroup is associative")
    }
}
