mod common;

use std::collections::{BTreeMap, BTreeSet};

use prism_core::multiplus::{family_for, lambda_run, FinitePoset};
use prism_core::pipedream::{chute_jumps, is_reduced_pipe_dream, min_plus};
use prism_core::prism::PrismError;
use prism_core::srcomplex::{check_conjecture, int_plus, k_moves};
use prism_core::{Cell, IntPolynomial, MultiPlus, Permutation, PrismModel};

use common::*;

#[test]
fn ex7_long_moves_are_the_hasse_edges() {
    let mp = MultiPlus::new(&perm(EX7_W)).unwrap();
    let fiber = mp.fiber(&cells(7, EX7_SUPPORT)).unwrap();
    let names: BTreeMap<_, _> = EX7_VERTICES
        .iter()
        .map(|(v, _)| (ex7_vertex(&mp, v), *v))
        .collect();
    let mut edges = BTreeSet::new();
    for q in &fiber {
        for r in mp.long_moves(q, true) {
            let (a, b) = (names[q], names[&r]);
            edges.insert(if mp.leq(q, &r).unwrap() {
                (a, b)
            } else {
                (b, a)
            });
        }
    }
    let want: BTreeSet<(&str, &str)> = EX7_COVERS.into_iter().collect();
    assert_eq!(edges, want);
}

#[test]
fn ex7_extremes() {
    let mp = MultiPlus::new(&perm(EX7_W)).unwrap();
    let fiber = mp.fiber(&cells(7, EX7_SUPPORT)).unwrap();
    let poset = FinitePoset::new(fiber.len(), |i, j| mp.leq(&fiber[i], &fiber[j]).unwrap());
    assert!(poset.is_lattice());
    let top = ex7_vertex(&mp, "a");
    let bottom = ex7_vertex(&mp, "f");
    for q in &fiber {
        assert!(mp.leq(q, &top).unwrap());
        assert!(mp.leq(&bottom, q).unwrap());
    }
    assert_eq!(
        mp.meet(&ex7_vertex(&mp, "b"), &ex7_vertex(&mp, "c"))
            .unwrap(),
        ex7_vertex(&mp, "d")
    );
    assert_eq!(
        mp.join(&ex7_vertex(&mp, "d"), &ex7_vertex(&mp, "e"))
            .unwrap(),
        ex7_vertex(&mp, "c")
    );
}

#[test]
fn ex7_essential_boxes_in_row_major_order() {
    let cells: Vec<Cell> = perm(EX7_W).essential_set().iter().map(|e| e.cell).collect();
    let want: Vec<Cell> = [(1, 4), (3, 2), (3, 4), (5, 2), (5, 4)]
        .into_iter()
        .map(|(r, c)| Cell::new(r, c))
        .collect();
    assert_eq!(cells, want);
}

#[test]
fn the_42513_fiber() {
    let w = perm("42513");
    let mp = MultiPlus::new(&w).unwrap();
    let p = cells(5, "11 12 13 21 23 31");
    assert!(is_reduced_pipe_dream(&p, &w));
    let fiber = mp.fiber(&p).unwrap();
    assert_eq!(fiber.len(), 2);
    let min = mp.fiber_minimum(&p).unwrap();
    assert!(fiber.contains(&min));
}

#[test]
fn pink_one_is_replaceable_in_42513() {
    let w = perm("42513");
    let model = PrismModel::new(&w);
    let pink = model
        .shape
        .essentials
        .iter()
        .position(|e| e.rect.top == 2 && e.rect.bottom == 3 && e.rect.width == 2)
        .expect("a 2x2 rectangle");
    let unstable: Vec<_> = model
        .min_prism()
        .into_iter()
        .filter(|t| !model.unstable_triples(t).is_empty())
        .collect();
    assert_eq!(unstable.len(), 2);
    for t in &unstable {
        let triples = model.unstable_triples(t);
        assert!(triples.iter().any(|x| x.c == pink
            && x.cell == Cell::new(2, 1)
            && x.antidiagonal == 2
            && x.low == 1
            && x.high == 2));
        assert_eq!(t.fillings[pink][0], 1);
    }
}

#[test]
fn colour_free_246135() {
    let w = perm("246135");
    let model = PrismModel::new(&w);
    let rows = |t: &BTreeMap<Cell, u8>| -> Vec<Vec<u8>> {
        (1..=3)
            .map(|r| {
                t.iter()
                    .filter(|(c, _)| c.row == r)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect()
    };
    let got: BTreeSet<Vec<Vec<u8>>> = model
        .prism()
        .iter()
        .map(|t| rows(&model.grassmannian_reduce(t).unwrap()))
        .collect();
    let want: BTreeSet<Vec<Vec<u8>>> = [
        [2, 3, 1],
        [2, 3, 2],
        [2, 3, 3],
        [1, 2, 1],
        [1, 2, 2],
        [1, 3, 1],
        [1, 3, 2],
        [1, 3, 3],
    ]
    .into_iter()
    .map(|[a, b, c]| vec![vec![1], vec![2, a], vec![3, b, c]])
    .collect();
    assert_eq!(got, want);
}

#[test]
fn reduction_needs_a_grassmannian_permutation() {
    let model = PrismModel::new(&perm("42513"));
    let t = &model.prism()[0];
    assert!(matches!(
        model.grassmannian_reduce(t),
        Err(PrismError::NotGrassmannian(_))
    ));
}

#[test]
fn table_row_1432() {
    let model = PrismModel::new(&perm("1432"));
    let want: IntPolynomial = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"
        .parse()
        .unwrap();
    assert_eq!(model.prism().len(), 5);
    assert_eq!(model.prism_polynomial(), want);
}

#[test]
fn lambda_run_stays_in_family() {
    let u = perm("1267345");
    let fam = family_for(&u).unwrap();
    let members: Vec<_> = fam.members.iter().map(|m| m.base).collect();
    for p in members.iter().step_by(3) {
        for q in members.iter().step_by(5) {
            for toward_meet in [true, false] {
                let run = lambda_run(&fam, p, q, toward_meet).unwrap();
                assert_eq!(run.steps.len(), u.length() + 1);
                assert!(run
                    .steps
                    .iter()
                    .all(|s| fam.contains(s) && s.is_subset(&p.union(q))));
            }
        }
    }
}

#[test]
fn chute_overlay_in_1432() {
    let w = perm("1432");
    let p = cells(4, "12 21 22");
    let jump = chute_jumps(&p)
        .into_iter()
        .find(|j| j.from == Cell::new(2, 1))
        .unwrap();
    assert_eq!(jump.result, cells(4, "12 13 22"));
    let moves = k_moves(&p);
    assert!(moves.contains(&cells(4, "12 13 21 22")));
    let mp = MultiPlus::new(&w).unwrap();
    let mut failures = Vec::new();
    assert!(mp.check_chute_overlays(&mut failures) > 0);
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn interior_diagrams_contain_facets() {
    for w in Permutation::all(4) {
        let ints = int_plus(&w);
        for p in min_plus(&w) {
            assert!(ints.contains(&p), "{w}");
        }
    }
}

#[test]
fn some_interior_diagram_is_not_a_facet() {
    let strict = Permutation::all(4).any(|w| int_plus(&w).len() > min_plus(&w).len());
    assert!(strict);
}

#[test]
fn k_moves_are_needed_somewhere_in_s4() {
    let reports: Vec<_> = Permutation::all(4).map(|w| check_conjecture(&w)).collect();
    assert!(reports.iter().all(|r| r.kmove_connected));
    assert!(reports.iter().any(|r| !r.plain_connected));
}

#[test]
fn bigrassmannian_conjecture_is_trivial() {
    for w in Permutation::all(5).filter(Permutation::is_bigrassmannian) {
        let r = check_conjecture(&w);
        assert!(r.conjecture_holds && r.witnesses.is_empty());
    }
}
