use std::sync::OnceLock;

use proptest::prelude::*;

use gradlab::corpus::{self, CorpusSpec, PartialCorpusSpec};
use gradlab::fflinalg::{self, is_zero, unit_vector};
use gradlab::instance::Payload;
use gradlab::{Budget, Field, GradedAlgebra, PartialAction, Subspace};

fn graded_instances() -> &'static [GradedAlgebra] {
    static CELL: OnceLock<Vec<GradedAlgebra>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut spec = CorpusSpec::new(5, 80);
        spec.require_hypotheses = false;
        spec.max_dim = 8;
        corpus::graded_corpus(&spec)
            .unwrap()
            .into_iter()
            .filter_map(|d| match d.payload {
                Payload::GradedAlgebra { graded, .. } => Some(graded),
                _ => None,
            })
            .collect()
    })
}

fn partial_actions() -> &'static [PartialAction] {
    static CELL: OnceLock<Vec<PartialAction>> = OnceLock::new();
    CELL.get_or_init(|| {
        corpus::partial_corpus(&PartialCorpusSpec::new(5, 40))
            .unwrap()
            .into_iter()
            .filter_map(|d| match d.payload {
                Payload::PartialAction(pa) => Some(pa),
                _ => None,
            })
            .collect()
    })
}

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u32, 3, 5]).prop_map(|p| Field::new(p).unwrap())
}

fn reduce(f: Field, raw: &[u32]) -> Vec<u32> {
    raw.iter().map(|&x| x % f.p()).collect()
}

fn rows(f: Field, n: usize, raw: &[Vec<u32>]) -> Vec<Vec<u32>> {
    raw.iter().map(|r| reduce(f, &r[..n])).collect()
}

fn raw_rows() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..5, 6), 0..5)
}

fn vector(len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..5, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_canonical(f in field(), n in 1usize..=6, raw in raw_rows()) {
        let rows = rows(f, n, &raw);
        let s = Subspace::rref(f, n, &rows).unwrap();
        prop_assert_eq!(&Subspace::rref(f, n, s.basis()).unwrap(), &s);
        for r in &rows {
            prop_assert!(s.contains(r).unwrap());
        }
        prop_assert_eq!(s.dim(), fflinalg::rank(f, n, &rows));
    }

    #[test]
    fn sum_and_intersection_dimensions(f in field(), n in 1usize..=6, a in raw_rows(), b in raw_rows()) {
        let u = Subspace::rref(f, n, &rows(f, n, &a)).unwrap();
        let v = Subspace::rref(f, n, &rows(f, n, &b)).unwrap();
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&sum) && v.is_subspace_of(&sum));
    }

    #[test]
    fn kernel_is_annihilated(f in field(), n in 1usize..=6, raw in raw_rows()) {
        let rows = rows(f, n, &raw);
        let k = fflinalg::kernel(f, n, &rows).unwrap();
        prop_assert_eq!(k.dim() + fflinalg::rank(f, n, &rows), n);
        for v in k.basis() {
            for r in &rows {
                let dot = r.iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                prop_assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn decomposition_is_a_bijection(idx in any::<prop::sample::Index>(), raw in vector(12)) {
        let r = idx.get(graded_instances());
        let f = r.algebra().field();
        let v = reduce(f, &raw[..r.dim()]);
        let parts = r.decompose(&v).unwrap();
        let mut total = vec![0; r.dim()];
        let mut seen = std::collections::BTreeSet::new();
        for (g, part) in &parts {
            prop_assert!(!is_zero(part));
            prop_assert_eq!(r.homogeneous_degree(part), Some(*g));
            prop_assert!(seen.insert(*g));
            f.axpy(&mut total, 1, part);
        }
        prop_assert_eq!(total, v);
    }

    #[test]
    fn closure_of_homogeneous_elements_is_graded(idx in any::<prop::sample::Index>(), i in any::<prop::sample::Index>(), c in 1u32..5) {
        let r = idx.get(graded_instances());
        let f = r.algebra().field();
        let mut v = unit_vector(r.dim(), i.index(r.dim()));
        f.scale(&mut v, 1 + (c - 1) % (f.p() - 1));
        let closure = r.algebra().ideal_closure(&[v]).unwrap();
        prop_assert!(r.algebra().is_ideal(&closure.space));
        prop_assert!(r.is_graded_ideal(&closure.space).unwrap());
    }

    #[test]
    fn simple_implies_graded_simple(idx in any::<prop::sample::Index>()) {
        let r = idx.get(graded_instances());
        let budget = Budget::default();
        if r.algebra().is_simple(&budget).unwrap().is_simple() {
            prop_assert!(r.is_graded_simple(&budget).unwrap().is_graded_simple());
        }
    }

    #[test]
    fn coarser_graded_simplicity_implies_finer(idx in any::<prop::sample::Index>(), n in any::<prop::sample::Index>()) {
        let r = idx.get(graded_instances());
        let Some(g) = r.group() else { return Ok(()) };
        let normals: Vec<_> = g.subgroups().into_iter().filter(|s| g.is_normal(s)).collect();
        let normal = n.get(&normals);
        let coarse = r.coarsen_by_quotient(normal).unwrap();
        let budget = Budget::default();
        if coarse.is_graded_simple(&budget).unwrap().is_graded_simple() {
            prop_assert!(r.is_graded_simple(&budget).unwrap().is_graded_simple());
        }
        // ideals graded for the finer grading stay graded for the coarser one
        let closure = r.algebra().ideal_closure(&[unit_vector(r.dim(), 0)]).unwrap();
        prop_assert!(coarse.is_graded_ideal(&closure.space).unwrap());
    }

    #[test]
    fn skew_product_matches_ring_multiplication(
        idx in any::<prop::sample::Index>(),
        g in any::<prop::sample::Index>(),
        h in any::<prop::sample::Index>(),
        ca in vector(8),
        cb in vector(8),
    ) {
        let pa = idx.get(partial_actions());
        let ring = pa.build_pskew().unwrap();
        let f = pa.algebra().field();
        let n = pa.group().len();
        let (g, h) = (g.index(n), h.index(n));
        let a = pa.domain(g).combination(&reduce(f, &ca[..pa.domain(g).dim()]));
        let b = pa.domain(h).combination(&reduce(f, &cb[..pa.domain(h).dim()]));
        let product = ring.graded.algebra().mul(&ring.embed(g, &a).unwrap(), &ring.embed(h, &b).unwrap()).unwrap();
        let (gh, c) = pa.skew_product(g, &a, h, &b).unwrap();
        prop_assert_eq!(gh, pa.group().mul(g, h));
        prop_assert_eq!(product, ring.embed(gh, &c).unwrap());
    }

    #[test]
    fn invariant_ideals_give_graded_ideals(idx in any::<prop::sample::Index>(), raw in vector(8)) {
        let pa = idx.get(partial_actions());
        let f = pa.algebra().field();
        let v = reduce(f, &raw[..pa.algebra().dim()]);
        let ideal = pa.g_invariant_closure(std::slice::from_ref(&v)).unwrap();
        prop_assert!(pa.is_g_invariant(&ideal.space).unwrap());
        let ring = pa.build_pskew().unwrap();
        let mut rows = Vec::new();
        for g in 0..pa.group().len() {
            for x in ideal.space.intersect(pa.domain(g)).unwrap().basis() {
                rows.push(ring.embed(g, x).unwrap());
            }
        }
        let star = Subspace::rref(f, ring.graded.dim(), &rows).unwrap();
        prop_assert!(ring.graded.algebra().is_ideal(&star));
        prop_assert!(ring.graded.is_graded_ideal(&star).unwrap());
        prop_assert_eq!(star.is_zero(), is_zero(&v));
    }
}
