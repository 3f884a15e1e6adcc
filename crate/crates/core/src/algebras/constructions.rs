//! Standard algebras used by the catalog, the corpus generator and tests.

use super::Algebra;
use crate::error::Result;
use crate::fflinalg::{unit_vector, Field};
use crate::groups::GroupTable;

/// The group algebra `K[G]` on the basis `{g}` in table order.
pub fn group_algebra(field: Field, group: &GroupTable) -> Algebra {
    let n = group.len();
    Algebra::from_fn(field, n, |i, j| unit_vector(n, group.mul(i, j))).expect("group algebra")
}

/// Twisted group algebra: `u_g u_h = α(g, h) u_{gh}`. Fails validation unless
/// `α` is a 2-cocycle with values in `GF(p)^×`.
pub fn twisted_group_algebra(
    field: Field,
    group: &GroupTable,
    cocycle: impl Fn(usize, usize) -> u32,
) -> Result<Algebra> {
    let n = group.len();
    Algebra::from_fn(field, n, |i, j| {
        let mut v = vec![0; n];
        v[group.mul(i, j)] = cocycle(i, j) % field.p();
        v
    })
}

/// Full matrix algebra `M_n(K)`; matrix unit `E_ab` has index `a * n + b`.
pub fn matrix_algebra(field: Field, n: usize) -> Algebra {
    let d = n * n;
    Algebra::from_fn(field, d, |x, y| {
        let (a, b) = (x / n, x % n);
        let (c, e) = (y / n, y % n);
        if b == c {
            unit_vector(d, a * n + e)
        } else {
            vec![0; d]
        }
    })
    .expect("matrix algebra")
}

/// `A ⊗ B` with `a_i ⊗ b_j` at index `i * dim B + j`.
pub fn tensor(a: &Algebra, b: &Algebra) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let f = a.field();
    Algebra::from_fn(f, da * db, |x, y| {
        let pa = a.basis_product(x / db, y / db);
        let pb = b.basis_product(x % db, y % db);
        let mut out = vec![0; da * db];
        for (i, &ca) in pa.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in pb.iter().enumerate() {
                out[i * db + j] = f.mul(ca, cb);
            }
        }
        out
    })
    .expect("tensor product of associative algebras")
}

/// `A × B`: basis of `A` followed by basis of `B`, cross products zero.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    Algebra::from_fn(a.field(), d, |x, y| {
        let mut out = vec![0; d];
        if x < da && y < da {
            out[..da].copy_from_slice(&a.basis_product(x, y));
        } else if x >= da && y >= da {
            out[da..].copy_from_slice(&b.basis_product(x - da, y - da));
        }
        out
    })
    .expect("direct product")
}

/// `K[x]/(f)` on the basis `1, x, ..., x^{n-1}` for monic `f` of degree `n`,
/// given by its lower coefficients `f = x^n + c_{n-1} x^{n-1} + ... + c_0`.
pub fn polynomial_quotient(field: Field, lower: &[u32]) -> Algebra {
    let n = lower.len();
    // x^k reduced, for k < 2n - 1
    let mut powers: Vec<Vec<u32>> = (0..n).map(|k| unit_vector(n, k)).collect();
    for k in n..(2 * n).saturating_sub(1) {
        let prev = &powers[k - 1];
        let mut next = vec![0; n];
        next[1..].copy_from_slice(&prev[..n - 1]);
        let top = prev[n - 1];
        for (slot, &c) in next.iter_mut().zip(lower) {
            *slot = field.sub(*slot, field.mul(top, c));
        }
        powers.push(next);
    }
    Algebra::from_fn(field, n, |i, j| powers[i + j].clone()).expect("commutative quotient")
}

/// `K^n` with componentwise multiplication.
pub fn diagonal_algebra(field: Field, n: usize) -> Algebra {
    Algebra::from_fn(field, n, |i, j| {
        if i == j {
            unit_vector(n, i)
        } else {
            vec![0; n]
        }
    })
    .expect("diagonal algebra")
}

/// An irreducible monic quadratic over GF(p), as lower coefficients.
pub fn irreducible_quadratic(field: Field) -> [u32; 2] {
    let p = field.p();
    for c1 in 0..p {
        for c0 in 1..p {
            let has_root = (0..p).any(|x| (field.mul(x, x) + field.mul(c1, x) + c0) % p == 0);
            if !has_root {
                return [c0, c1];
            }
        }
    }
    unreachable!("every prime field has an irreducible quadratic")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::Budget;

    fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn shapes_and_identities() {
        let m3 = matrix_algebra(gf(2), 3);
        assert_eq!(m3.dim(), 9);
        assert!(m3.is_unital());
        assert!(m3.is_simple(&Budget::default()).unwrap().is_simple());
        let t = tensor(&matrix_algebra(gf(2), 2), &group_algebra(gf(2), &groups::cyclic(2)));
        assert_eq!(t.dim(), 8);
        assert!(!t.is_simple(&Budget::default()).unwrap().is_simple());
        assert_eq!(diagonal_algebra(gf(3), 3).identity(), Some(&[1, 1, 1][..]));
    }

    #[test]
    fn quadratic_extensions_are_fields() {
        for p in [2, 3, 5, 7] {
            let f = gf(p);
            let k = polynomial_quotient(f, &irreducible_quadratic(f));
            assert!(k.is_field(1 << 20).unwrap(), "p = {p}");
        }
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(!polynomial_quotient(gf(2), &[1, 0]).is_field(1 << 20).unwrap());
    }

    #[test]
    fn quaternion_twist_over_gf3_is_simple() {
        let v4 = groups::klein_four();
        // (-1)^β for the bilinear form β = x0 y0 + x1 y1 + x1 y0 gives
        // u_a^2 = u_b^2 = -1 and u_a u_b = -u_b u_a
        let alg = twisted_group_algebra(gf(3), &v4, |x, y| {
            let (x0, x1) = (x / 2, x % 2);
            let (y0, y1) = (y / 2, y % 2);
            if (x0 * y0 + x1 * y1 + x1 * y0) % 2 == 1 {
                2
            } else {
                1
            }
        })
        .unwrap();
        assert!(alg.is_simple(&Budget::default()).unwrap().is_simple());
    }

    #[test]
    fn certificate_without_prime_field_eigenvalues() {
        let budget = Budget::default();
        let gf32 = polynomial_quotient(gf(2), &[1, 0, 1, 0, 0]);
        let gf81 = polynomial_quotient(gf(3), &[2, 1, 0, 0]);
        assert!(gf32.is_field(4).unwrap() && gf81.is_field(4).unwrap());
        let cases = [gf32.clone(), gf81.clone(), direct_product(&gf32, &gf32), direct_product(&gf81, &gf81)];
        for (i, a) in cases.iter().enumerate() {
            let ex = a.is_simple_exhaustive(1 << 20).unwrap();
            let ce = a.is_simple_certified(&budget).unwrap();
            assert_eq!(ex.is_simple(), ce.is_simple(), "case {i}");
            assert_eq!(ce.is_simple(), i < 2, "case {i}");
            // past the enumeration limit the field test goes through the certificate
            assert_eq!(a.is_field(100).unwrap(), a.is_field(1 << 20).unwrap(), "case {i}");
        }
    }
}
