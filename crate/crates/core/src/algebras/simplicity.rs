//! Irreducibility certificate for `A` as a module over its multiplication
//! algebra `M = ⟨1, L_i, R_i⟩`, whose submodules are exactly the ideals of `A`.
//!
//! Let `θ ∈ M` be singular. If a proper nonzero ideal `W` meets `ker θ`, some
//! vector of `ker θ` fails to generate `A`. Otherwise `θ` is injective on `W`,
//! so `θ(W) = W` and every `w ∈ ker θᵀ` annihilates `W`; the `Mᵀ`-span of
//! such a `w` then lies in the proper subspace `W^⊥`. So checking all lines
//! of `ker θ` plus a single vector of `ker θᵀ` decides irreducibility.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Algebra, Simplicity};
use crate::error::{Error, Result};
use crate::fflinalg::{self, is_zero, Echelon, Field, Subspace};
use crate::Budget;

type Matrix = Vec<Vec<u32>>;

const ATTEMPTS: usize = 48;
const HIGH_DEGREE_ATTEMPTS: usize = 6;
const MAX_DEGREE: usize = 8;
const MAX_POLYNOMIALS: u64 = 2187;
const SEED: u64 = 0x6772_6164_6c61_62;

fn mat_mul(f: Field, a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let p = f.p() as u64;
    let mut out = vec![vec![0u32; d]; d];
    for i in 0..d {
        let mut acc = vec![0u64; d];
        for (k, &x) in a[i].iter().enumerate() {
            if x != 0 {
                for (j, &y) in b[k].iter().enumerate() {
                    acc[j] += (x as u64) * (y as u64);
                }
            }
        }
        out[i] = acc.into_iter().map(|v| (v % p) as u32).collect();
    }
    out
}

fn transpose(m: &Matrix) -> Matrix {
    let d = m.len();
    (0..d).map(|j| (0..d).map(|i| m[i][j]).collect()).collect()
}

fn mat_vec(f: Field, m: &Matrix, v: &[u32]) -> Vec<u32> {
    m.iter()
        .map(|row| {
            let s: u64 = row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
            (s % f.p() as u64) as u32
        })
        .collect()
}

/// Matrices (column convention) of `v ↦ b_i v` and `v ↦ v b_i`.
fn generators(alg: &Algebra) -> Vec<Matrix> {
    let d = alg.dim();
    let mut out = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut left = vec![vec![0; d]; d];
        let mut right = vec![vec![0; d]; d];
        for c in 0..d {
            for (r, x) in alg.basis_product(i, c).into_iter().enumerate() {
                left[r][c] = x;
            }
            for (r, x) in alg.basis_product(c, i).into_iter().enumerate() {
                right[r][c] = x;
            }
        }
        out.push(left);
        out.push(right);
    }
    out
}

fn random_element(f: Field, gens: &[Matrix], rng: &mut ChaCha8Rng) -> Matrix {
    let d = gens[0].len();
    let mut acc = vec![vec![0u32; d]; d];
    for _ in 0..4 {
        let len = rng.gen_range(1..=3);
        let mut word = gens[rng.gen_range(0..gens.len())].clone();
        for _ in 1..len {
            word = mat_mul(f, &word, &gens[rng.gen_range(0..gens.len())]);
        }
        let c = rng.gen_range(1..f.p());
        for (row, wrow) in acc.iter_mut().zip(&word) {
            f.axpy(row, c, wrow);
        }
    }
    acc
}

fn shifted(f: Field, m: &Matrix, lambda: u32) -> Matrix {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = f.sub(row[i], lambda);
    }
    out
}

/// Monic irreducible polynomials of the given degree, coefficients low to high.
fn irreducibles(f: Field, degree: usize) -> Vec<Vec<u32>> {
    let p = f.p() as usize;
    let monic = |n: usize, code: usize| {
        let mut c = Vec::with_capacity(n + 1);
        let mut x = code;
        for _ in 0..n {
            c.push((x % p) as u32);
            x /= p;
        }
        c.push(1);
        c
    };
    // remainder of a modulo the monic b
    let divides = |b: &[u32], a: &[u32]| {
        let mut r = a.to_vec();
        let m = b.len() - 1;
        for top in (m..r.len()).rev() {
            let c = r[top];
            if c != 0 {
                for (i, &bi) in b.iter().enumerate() {
                    let k = top - m + i;
                    r[k] = f.sub(r[k], f.mul(c, bi));
                }
            }
        }
        r[..m].iter().all(|&x| x == 0)
    };
    let mut out = Vec::new();
    for code in 0..p.pow(degree as u32) {
        let q = monic(degree, code);
        let reducible = (1..=degree / 2).any(|k| (0..p.pow(k as u32)).any(|c| divides(&monic(k, c), &q)));
        if !reducible {
            out.push(q);
        }
    }
    out
}

/// `q(m)` by Horner's rule.
fn evaluate(f: Field, q: &[u32], m: &Matrix) -> Matrix {
    let d = m.len();
    let mut acc = vec![vec![0u32; d]; d];
    for &c in q.iter().rev() {
        acc = mat_mul(f, &acc, m);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] = f.add(row[i], c);
        }
    }
    acc
}

enum Probe {
    /// A singular element of `M` with small nonzero nullity, or `0` if none is found.
    Singular(Matrix),
    /// Some `θ ∈ M` is killed by an irreducible polynomial of degree `dim A`,
    /// so `K[θ]` is a field acting on `A` with no invariant subspaces.
    Irreducible,
}

///
/// First tries `θ - λ` for random `θ`; when `M` has no eigenvalues in the
/// prime field (a field extension, say) it moves on to `q(θ)` for
/// irreducible `q` of increasing degree.
fn choose_singular(alg: &Algebra, gens: &[Matrix]) -> Result<Probe> {
    let f = alg.field();
    let d = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ d as u64);
    let thetas: Vec<Matrix> = (0..ATTEMPTS).map(|_| random_element(f, gens, &mut rng)).collect();
    let mut best: Option<(usize, Matrix)> = None;
    let shifts: Vec<u32> = (0..f.p().min(16)).collect();
    for theta in &thetas {
        for &lambda in &shifts {
            let m = shifted(f, theta, lambda);
            let nullity = fflinalg::kernel(f, d, &m)?.dim();
            if d == 1 && nullity == 1 {
                return Ok(Probe::Irreducible);
            }
            if nullity == 0 || nullity == d {
                continue;
            }
            if best.as_ref().map_or(true, |(k, _)| nullity < *k) {
                best = Some((nullity, m));
            }
            if nullity == 1 {
                return Ok(Probe::Singular(best.expect("set").1));
            }
        }
    }
    let mut degree = 2;
    while best.is_none() && degree <= d.min(MAX_DEGREE) && (f.p() as u64).pow(degree as u32) <= MAX_POLYNOMIALS {
        let polys = irreducibles(f, degree);
        for theta in &thetas[..HIGH_DEGREE_ATTEMPTS] {
            for q in &polys {
                let m = evaluate(f, q, theta);
                let nullity = fflinalg::kernel(f, d, &m)?.dim();
                if nullity == d && degree == d {
                    return Ok(Probe::Irreducible);
                }
                if nullity == 0 || nullity == d {
                    continue;
                }
                if best.as_ref().map_or(true, |(k, _)| nullity < *k) {
                    best = Some((nullity, m));
                }
            }
        }
        degree += 1;
    }
    Ok(Probe::Singular(best.map_or_else(|| vec![vec![0; d]; d], |(_, m)| m)))
}

fn spin(f: Field, d: usize, ops: &[Matrix], start: Vec<u32>) -> Subspace {
    let mut ech = Echelon::new(f, d);
    ech.insert(start.clone());
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        for op in ops {
            let w = mat_vec(f, op, &v);
            if !is_zero(&w) && ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    ech.into_subspace()
}

pub(super) fn certify(alg: &Algebra, budget: &Budget) -> Result<Simplicity> {
    let f = alg.field();
    let d = alg.dim();
    let gens = generators(alg);
    let theta = match choose_singular(alg, &gens)? {
        Probe::Singular(m) => m,
        Probe::Irreducible => return Ok(Simplicity::Simple),
    };
    let kernel = fflinalg::kernel(f, d, &theta)?;
    let required = kernel.projective_count();
    if required > budget.enumeration as u128 {
        return Err(Error::budget(required, budget.enumeration));
    }
    for v in kernel.projective_points() {
        if !alg.generates_everything(&v) {
            let ideal = alg.ideal_closure(&[v.clone()])?.space;
            return Ok(Simplicity::ProperIdeal { generator: v, ideal });
        }
    }
    let dual_kernel = fflinalg::kernel(f, d, &transpose(&theta))?;
    let w = dual_kernel.basis()[0].clone();
    let dual_ops: Vec<Matrix> = gens.iter().map(transpose).collect();
    let orbit = spin(f, d, &dual_ops, w);
    if orbit.is_full() {
        return Ok(Simplicity::Simple);
    }
    // the annihilator of a proper Mᵀ-submodule is a proper nonzero ideal
    let annihilator = fflinalg::kernel(f, d, orbit.basis())?;
    let generator = annihilator.basis()[0].clone();
    let ideal = alg.ideal_closure(&[generator.clone()])?.space;
    Ok(Simplicity::ProperIdeal { generator, ideal })
}
