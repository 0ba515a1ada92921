//! Property tests: ring axioms in every coefficient mode, homomorphy of
//! specialization, valuation additivity, and the combinatorial invariants
//! that hold for all inputs.

use proptest::prelude::*;

use akw_core::coeff::{specialize, CoeffDomain, CycElt, ParameterSpec, Scalar};
use akw_core::combinatorics::{
    dominates, enumerate_multipartitions, standard_tableaux, tableau_dominates,
};

fn rational_scalar() -> impl Strategy<Value = Scalar> {
    (any::<i32>(), 1i32..200).prop_map(|(a, b)| {
        let d = CoeffDomain::Rational;
        d.from_i64(a as i64).div(&d.from_i64(b as i64)).unwrap()
    })
}

fn gf_scalar(p: u64) -> impl Strategy<Value = Scalar> {
    (0..p as i64).prop_map(move |v| CoeffDomain::PrimeField(p).from_i64(v))
}

fn cyc_scalar(e: u32) -> impl Strategy<Value = Scalar> {
    proptest::collection::vec(-20i64..20, akw_core::coeff::cyclotomic::euler_phi(e) as usize)
        .prop_map(move |coeffs| {
            let mut acc = CoeffDomain::Cyclotomic(e).zero();
            for (k, c) in coeffs.into_iter().enumerate() {
                let term = Scalar::Cyc(CycElt::zeta_pow(e, k as i64))
                    .mul(&CoeffDomain::Cyclotomic(e).from_i64(c));
                acc = acc.add(&term);
            }
            acc
        })
}

fn sym_scalar() -> impl Strategy<Value = Scalar> {
    // small polynomials in q and Q_1
    proptest::collection::vec((-5i64..=5, 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
        let p = ParameterSpec::symbolic(1);
        let mut acc = p.domain.zero();
        for (c, a, b) in terms {
            let t = p
                .domain
                .from_i64(c)
                .mul(&p.q.pow(a as i64))
                .mul(&p.qq[0].pow(b as i64));
            acc = acc.add(&t);
        }
        acc
    })
}

fn ring_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(&b.add(c)), a.add(b).add(c));
    assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert!(a.sub(a).is_zero());
    if !a.is_zero() {
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ring_axioms(a in rational_scalar(), b in rational_scalar(), c in rational_scalar()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn prime_field_ring_axioms(a in gf_scalar(13), b in gf_scalar(13), c in gf_scalar(13)) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn cyclotomic_ring_axioms(a in cyc_scalar(5), b in cyc_scalar(5), c in cyc_scalar(5)) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn symbolic_ring_axioms(a in sym_scalar(), b in sym_scalar(), c in sym_scalar()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in sym_scalar(), b in sym_scalar(), qv in 2i64..9, q1 in 1i64..9) {
        let d = CoeffDomain::Rational;
        let params = ParameterSpec::concrete(1, d.clone(), d.from_i64(qv), vec![d.from_i64(q1)]).unwrap();
        let sa = specialize(&a, &params).unwrap();
        let sb = specialize(&b, &params).unwrap();
        prop_assert_eq!(specialize(&a.mul(&b), &params).unwrap(), sa.mul(&sb));
        prop_assert_eq!(specialize(&a.add(&b), &params).unwrap(), sa.add(&sb));
    }

    #[test]
    fn valuation_is_additive(na in 0u32..4, nb in 0u32..4, ca in 1i64..5, cb in 1i64..5) {
        // f = c (t-1)^n (t+1): valuations add under products
        let base = CoeffDomain::Rational;
        let dom = CoeffDomain::lifted(base);
        let t = dom.t();
        let tm1 = t.sub(&dom.one());
        let tp1 = t.add(&dom.one());
        let f = dom.from_i64(ca).mul(&tm1.pow(na as i64)).mul(&tp1);
        let g = dom.from_i64(cb).mul(&tm1.pow(nb as i64));
        let val = |x: &Scalar| match x {
            Scalar::TR(t) => t.valuation_at_t1().unwrap(),
            _ => unreachable!(),
        };
        prop_assert_eq!(val(&f.mul(&g)), val(&f) + val(&g));
    }
}

#[test]
fn cyclotomic_root_has_exact_order() {
    for e in [2u32, 3, 4, 6, 12] {
        let z = Scalar::Cyc(CycElt::zeta_pow(e, 1));
        assert_eq!(z.multiplicative_order(), Some(e));
    }
}

#[test]
fn standard_tableaux_are_dominated_by_initial() {
    for l in enumerate_multipartitions(2, 4).unwrap() {
        let tabs = standard_tableaux(&l);
        for t in &tabs {
            assert!(tableau_dominates(&tabs[0], t));
        }
    }
}

#[test]
fn dominance_antisymmetry_exhaustive() {
    for (r, n) in [(3usize, 4u32), (2, 5), (3, 5)] {
        let all = enumerate_multipartitions(r, n).unwrap();
        for a in &all {
            for b in &all {
                if dominates(a, b).unwrap() && dominates(b, a).unwrap() {
                    assert_eq!(a, b);
                }
            }
        }
    }
}
