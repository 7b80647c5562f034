//! Properties of scheme unfolding: prefix coherence across depths,
//! substitution correctness, and the guardedness gate.

mod common;

use coalg::rps::{prefix_equal, subtree_census, PrefixVerdict};
use coalg::{Scheme, SchemeError, Signature, Term, TreePrefix};
use common::*;
use std::collections::BTreeMap;

#[test]
fn prefixes_grow_coherently_with_depth() {
    let mut rng = rng(0xd0);
    for _ in 0..50 {
        let scheme = random_guarded_scheme(&mut rng);
        let root = scheme_root(&mut rng);
        let mut previous = scheme.unfold(&root, 0).unwrap();
        for depth in 1..=6 {
            let current = scheme.unfold(&root, depth).unwrap();
            assert!(
                previous.prefix_of(&current),
                "depth {} is not a prefix of depth {depth}:\n  {previous}\n  {current}",
                depth - 1
            );
            previous = current;
        }
    }
}

#[test]
fn deeper_unfoldings_compare_equal_under_the_wildcard() {
    let mut rng = rng(0xd1);
    for _ in 0..30 {
        let scheme = random_guarded_scheme(&mut rng);
        let root = scheme_root(&mut rng);
        for depth in 0..=5 {
            // A scheme against itself at different depths: the shallower
            // side's cut points are wildcards, so comparison at the lower
            // depth must succeed.
            let verdict = prefix_equal(&scheme, &root, &scheme, &root, depth).unwrap();
            assert_eq!(verdict, PrefixVerdict::Equal);
        }
    }
}

/// Unfolding φ(t) equals unfolding φ(x) with the variable leaves grafted,
/// when t is built from givens and variables only.
#[test]
fn substitution_commutes_with_unfolding() {
    let mut rng = rng(0xd2);
    for _ in 0..40 {
        let scheme = random_guarded_scheme(&mut rng);
        // A pure-given argument: g(c) or f(z, c) or c.
        let argument = match rng.gen_range(0..3) {
            0 => Term::app("c", []),
            1 => Term::app("g", [Term::app("c", [])]),
            _ => Term::app("f", [Term::var("z"), Term::app("c", [])]),
        };
        let applied = Term::app("F", [argument.clone()]);
        let generic = Term::app("F", [Term::var("hole")]);
        for depth in 0..=5 {
            let direct = scheme.unfold(&applied, depth).unwrap();
            let template = scheme.unfold(&generic, depth).unwrap();
            let mut env = BTreeMap::new();
            env.insert("hole".to_string(), pure_term_tree(&argument));
            let grafted = graft_vars(&template, &env);
            assert_eq!(direct, grafted, "depth {depth}");
        }
    }
}

use rand::Rng;

#[test]
fn guardedness_gate() {
    // φ(z) = φ(z) is rejected...
    let givens = Signature::new([(s("a"), 1)]).unwrap();
    let unguarded = Scheme::new(
        givens.clone(),
        [(s("φ"), vec![s("z")], Term::app("φ", [Term::var("z")]))],
    );
    assert_eq!(
        unguarded.unwrap_err(),
        SchemeError::Unguarded {
            path: vec![s("φ"), s("φ")]
        }
    );

    // ...while the plus-times scheme is accepted.
    let (scheme, root) = plus_times_scheme();
    assert!(scheme.unfold(&root, 3).is_ok());
}

#[test]
fn figure_prefixes_are_reproduced_exactly() {
    let (scheme, root) = plus_times_scheme();
    let depth3 = scheme.unfold(&root, 3).unwrap();
    let expected3 = TreePrefix::Node(
        s("+"),
        vec![
            TreePrefix::Var(s("z")),
            TreePrefix::Node(
                s("+"),
                vec![
                    TreePrefix::Node(
                        s("×"),
                        vec![TreePrefix::Node(s("⋆"), vec![]), TreePrefix::Var(s("z"))],
                    ),
                    TreePrefix::Bottom,
                ],
            ),
        ],
    );
    assert_eq!(depth3, expected3);
    assert_eq!(depth3.to_string(), "+(z, +(×(⋆, z), ⊥))");

    let depth4 = scheme.unfold(&root, 4).unwrap();
    assert_eq!(depth4.to_string(), "+(z, +(×(⋆, z), +(×(⋆, ×(⋆, z)), ⊥)))");
    assert!(depth3.prefix_of(&depth4));
}

#[test]
fn census_grows_on_the_figure_scheme_and_stalls_on_spines() {
    let (scheme, root) = plus_times_scheme();
    let mut previous = 0;
    for depth in 3..=7 {
        let census = subtree_census(&scheme.unfold(&root, depth).unwrap());
        assert!(
            census > previous,
            "census should grow with depth on a non-rational solution"
        );
        previous = census;
    }

    let givens = Signature::new([(s("a"), 1)]).unwrap();
    let spine = Scheme::new(
        givens,
        [(
            s("φ"),
            vec![s("z")],
            Term::app("a", [Term::app("φ", [Term::var("z")])]),
        )],
    )
    .unwrap();
    for depth in 0..=8 {
        let census = subtree_census(
            &spine
                .unfold(&Term::app("φ", [Term::var("z")]), depth)
                .unwrap(),
        );
        assert!(census <= 2);
    }
}
