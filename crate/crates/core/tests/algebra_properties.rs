use std::sync::Arc;

use num::{BigInt, Zero};
use proptest::prelude::*;

use pascal_subwords::algebra::{
    add, convolve, delta, element_h, element_p, eta, exponential, int, inverse, power, scale, zeta,
    IncidenceElement, Rational,
};
use pascal_subwords::posets::{PosetKind, PosetUniverse};
use pascal_subwords::suites::{self, universe, words};

fn ab3() -> Arc<PosetUniverse> {
    words("ab", 3).unwrap()
}

/// Sparse random element: about a third of the comparable pairs get a small
/// rational, the rest are zero.
fn sparse(u: Arc<PosetUniverse>) -> impl Strategy<Value = IncidenceElement> {
    let pairs = u.pair_count();
    prop::collection::vec((0u8..3, -4i64..=4, 1i64..=3), pairs).prop_map(move |cells| {
        let mut it = cells.into_iter();
        IncidenceElement::from_fn(&u, |_, _| {
            let (keep, num, den) = it.next().unwrap();
            if keep == 0 {
                Rational::new(BigInt::from(num), BigInt::from(den))
            } else {
                Rational::zero()
            }
        })
    })
}

fn unit_diagonal(f: IncidenceElement) -> IncidenceElement {
    f.map(|x, y, v| if x == y { int(1) } else { v.clone() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convolution_is_associative(
        (f, g, k) in (sparse(ab3()), sparse(ab3()), sparse(ab3()))
    ) {
        // the strategies each build their own universe; move everything onto one
        let u = ab3();
        let rebase = |e: &IncidenceElement| IncidenceElement::from_dense(&u, &e.to_dense()).unwrap();
        let (f, g, k) = (rebase(&f), rebase(&g), rebase(&k));
        let left = convolve(&convolve(&f, &g).unwrap(), &k).unwrap();
        let right = convolve(&f, &convolve(&g, &k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn delta_is_the_unit(f in sparse(ab3())) {
        let d = delta(f.universe());
        prop_assert_eq!(convolve(&d, &f).unwrap(), f.clone());
        prop_assert_eq!(convolve(&f, &d).unwrap(), f);
    }

    #[test]
    fn inverse_is_two_sided(f in sparse(ab3())) {
        let f = unit_diagonal(f);
        let g = inverse(&f).unwrap();
        let d = delta(f.universe());
        prop_assert_eq!(convolve(&f, &g).unwrap(), d.clone());
        prop_assert_eq!(convolve(&g, &f).unwrap(), d);
    }

    #[test]
    fn powers_add_exponents(f in sparse(ab3()), a in -2i64..=2, b in -2i64..=2) {
        let f = unit_diagonal(f);
        let lhs = power(&f, a + b).unwrap();
        let rhs = convolve(&power(&f, a).unwrap(), &power(&f, b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exponential_inverts_through_negation(f in sparse(ab3())) {
        let f = f.map(|x, y, v| if x == y { int(0) } else { v.clone() });
        let e = exponential(&f).unwrap();
        prop_assert_eq!(inverse(&e).unwrap(), exponential(&scale(&int(-1), &f)).unwrap());
    }

    #[test]
    fn addition_distributes(f in sparse(ab3()), g in sparse(ab3())) {
        let u = f.universe().clone();
        let g = IncidenceElement::from_dense(&u, &g.to_dense()).unwrap();
        let p = element_p(&u);
        let lhs = convolve(&add(&f, &g).unwrap(), &p).unwrap();
        let rhs = add(&convolve(&f, &p).unwrap(), &convolve(&g, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn dense_round_trip() {
    let u = ab3();
    let p = element_p(&u);
    assert_eq!(IncidenceElement::from_dense(&u, &p.to_dense()).unwrap(), p);
}

#[test]
fn exponential_rejects_nonzero_diagonal() {
    let u = ab3();
    assert!(exponential(&element_p(&u)).is_err());
}

#[test]
fn exp_theorem_and_lemma_on_the_four_universes() {
    for u in [
        words("ab", 4).unwrap(),
        words("abc", 3).unwrap(),
        universe(PosetKind::Permutations { max_length: 4 }).unwrap(),
        universe(PosetKind::Chain { max: 8 }).unwrap(),
    ] {
        for c in [
            suites::check_exp_theorem(&u).unwrap(),
            suites::check_power_lemma(&u).unwrap(),
        ] {
            assert!(c.passed, "{c}");
        }
    }
}

#[test]
fn power_theorem_and_conjugation() {
    for u in [
        words("ab", 4).unwrap(),
        universe(PosetKind::Permutations { max_length: 4 }).unwrap(),
    ] {
        for c in [
            suites::check_powers_of_p(&u, -3..=3).unwrap(),
            suites::check_conjugation(&u, [-3, -2, 2, 3]).unwrap(),
            suites::check_exp_inverse(&u).unwrap(),
            suites::check_alternating_inverse(&u).unwrap(),
        ] {
            assert!(c.passed, "{c}");
        }
    }
}

#[test]
fn eta_powers_count_saturated_chains_in_boolean_algebras() {
    for n in 0..=6 {
        let u = universe(PosetKind::Boolean { n }).unwrap();
        let e = eta(&u);
        assert_eq!(element_h(&u), e);
        assert_eq!(element_p(&u), zeta(&u));
        for l in 0..=n + 1 {
            let el = power(&e, l as i64).unwrap();
            let fact: i64 = (1..=l as i64).product();
            for x in 0..u.len() {
                for &y in u.upper(x) {
                    let want = if u.rank(y) == u.rank(x) + l {
                        int(fact)
                    } else {
                        int(0)
                    };
                    assert_eq!(el.get(x, y), want);
                }
            }
        }
    }
}

#[test]
fn boolean_mobius_and_exponential() {
    for n in 0..=6 {
        assert!(suites::check_boolean_exp(n).unwrap().passed);
        assert!(suites::check_boolean_mobius(n).unwrap().passed);
    }
}
