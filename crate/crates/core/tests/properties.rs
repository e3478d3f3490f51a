mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use prism_core::multiplus::{check_family, ne_reachable};
use prism_core::pipedream::Direction;
use prism_core::pipedream::{d_bot, is_plus_diagram, min_plus, word_of, LabeledFamily};
use prism_core::srcomplex::demazure_product;
use prism_core::{
    schubert, IntPolynomial, Monomial, MultiPlus, Permutation, PlusDiagram, PrismModel,
};

use common::perm;

fn polynomial() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, 4), -5i64..=5), 0..6).prop_map(|terms| {
        let mut p = IntPolynomial::zero();
        for (exps, c) in terms {
            p.add_term(
                Monomial::from_counts(exps.into_iter().map(|e| e as usize)),
                c,
            );
        }
        p
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(&w).unwrap())
}

proptest! {
    #[test]
    fn divided_difference_squares_to_zero(f in polynomial(), i in 1usize..4) {
        prop_assert!(f.divided_difference(i).unwrap().divided_difference(i).unwrap().is_zero());
    }

    #[test]
    fn distant_divided_differences_commute(f in polynomial()) {
        let a = f.divided_difference(1).unwrap().divided_difference(3).unwrap();
        let b = f.divided_difference(3).unwrap().divided_difference(1).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn divided_differences_satisfy_braid(f in polynomial(), i in 1usize..3) {
        let d = |g: &IntPolynomial, k| g.divided_difference(k).unwrap();
        prop_assert_eq!(d(&d(&d(&f, i), i + 1), i), d(&d(&d(&f, i + 1), i), i + 1));
    }

    #[test]
    fn leibniz_rule(f in polynomial(), g in polynomial(), i in 1usize..4) {
        let lhs = (&f * &g).divided_difference(i).unwrap();
        let rhs = &(&f.divided_difference(i).unwrap() * &g)
            + &(&f.swap_vars(i) * &g.divided_difference(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_and_json_round_trip(f in polynomial()) {
        prop_assert_eq!(f.to_string().parse::<IntPolynomial>().unwrap(), f.clone());
        prop_assert_eq!(IntPolynomial::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn phi_is_a_weight_preserving_bijection(w in permutation(5)) {
        let model = PrismModel::new(&w);
        let all = model.all_prism();
        let product: usize = w.bigrass_set().iter().map(|u| min_plus(u).len()).product();
        prop_assert_eq!(all.len(), product);
        let mut images = BTreeSet::new();
        for t in &all {
            let q = model.phi(t).unwrap();
            prop_assert_eq!(&model.phi_inv(&q).unwrap(), t);
            let supp = q.supp();
            prop_assert_eq!(supp.weight(), t.weight());
            prop_assert_eq!(supp.len(), t.stats().total);
            prop_assert_eq!(model.is_minimal(t), supp.len() == w.length());
            prop_assert!(is_plus_diagram(&supp, &w));
            images.insert(q);
        }
        prop_assert_eq!(images.len(), all.len());
    }

    #[test]
    fn unstable_triples_match_southwest_long_moves(w in permutation(5)) {
        let model = PrismModel::new(&w);
        let mp = MultiPlus::new(&w).unwrap();
        for t in model.min_prism() {
            let q = model.phi(&t).unwrap();
            let has_triple = !model.unstable_triples(&t).is_empty();
            let has_move = !mp.long_moves_in(&q, Direction::SouthWest, true).is_empty();
            prop_assert_eq!(has_triple, has_move, "{}", t);
        }
    }

    #[test]
    fn stable_tableaux_are_fiber_minima(w in permutation(5)) {
        let model = PrismModel::new(&w);
        let mp = MultiPlus::new(&w).unwrap();
        let images: BTreeSet<_> = model.prism().iter().map(|t| model.phi(t).unwrap()).collect();
        let minima: BTreeSet<_> = min_plus(&w).iter().map(|p| mp.fiber_minimum(p).unwrap()).collect();
        prop_assert_eq!(images, minima);
    }

    #[test]
    fn fiber_minimum_is_a_fixed_point(w in permutation(5)) {
        let mp = MultiPlus::new(&w).unwrap();
        for p in min_plus(&w) {
            let fiber = mp.fiber(&p).unwrap();
            prop_assert!(!fiber.is_empty());
            let m = mp.fiber_minimum(&p).unwrap();
            prop_assert!(mp.long_moves_in(&m, Direction::SouthWest, true).is_empty());
            for q in &fiber {
                prop_assert!(mp.leq(&m, q).unwrap());
                prop_assert_eq!(q.supp(), p);
            }
        }
    }

    #[test]
    fn reduced_words_have_demazure_product_w(w in permutation(6)) {
        for p in min_plus(&w) {
            prop_assert_eq!(demazure_product(&word_of(&p)), w.clone());
        }
    }
}

#[test]
fn divided_differences_lower_schubert_polynomials() {
    for w in Permutation::all(5) {
        let s = schubert(&w);
        for i in 1..5 {
            let d = s.divided_difference(i).unwrap();
            if w.has_ascent(i) {
                assert!(d.is_zero(), "{w} {i}");
            } else {
                assert_eq!(d, schubert(&w.times_simple(i)), "{w} {i}");
            }
        }
    }
}

#[test]
fn label_order_matches_reachability_in_s6() {
    let mut families = 0;
    for u in Permutation::all(6).filter(Permutation::is_bigrassmannian) {
        let fam = LabeledFamily::new(&u).unwrap();
        let mut failures = Vec::new();
        check_family(&fam, &mut failures);
        assert!(failures.is_empty(), "{u}: {failures:?}");
        let bottom = d_bot(&u);
        let up = ne_reachable(&bottom);
        assert_eq!(up.len(), fam.len(), "{u}");
        families += 1;
    }
    assert!(families > 0);
}

#[test]
fn minimality_matches_support_size() {
    let w = perm("42513");
    let model = PrismModel::new(&w);
    let min: Vec<_> = model.min_prism();
    let filtered: Vec<_> = model
        .all_prism()
        .into_iter()
        .filter(|t| model.is_minimal(t))
        .collect();
    assert_eq!(min, filtered);
}

#[test]
fn supports_are_plus_diagrams() {
    for w in Permutation::all(4) {
        let model = PrismModel::new(&w);
        for t in model.all_prism() {
            let supp: PlusDiagram = model.phi(&t).unwrap().supp();
            if !model.shape.essentials.is_empty() {
                assert!(is_plus_diagram(&supp, &w), "{w}");
            }
        }
    }
}
