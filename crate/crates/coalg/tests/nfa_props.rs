//! Properties of the powerset instance: derivative-based membership agrees
//! with naive forward simulation, equivalence checking is exact and
//! symmetric, and the behaviours realizable by small unary automata match a
//! brute-force enumeration of the same.

mod common;

use coalg::kernel::{behaviour_at, behaviours_up_to, bisim_decide, equiv_bounded, DisjointUnion, Side};
use coalg::{BisimVerdict, Nfa, StateSet, Verdict};
use common::*;
use std::collections::BTreeSet;

#[test]
fn membership_agrees_with_naive_simulation() {
    let mut rng = rng(0xb0);
    let alphabet = letters(&["a", "b"]);
    let words = all_words(&alphabet, 8);
    for _ in 0..60 {
        let nfa = random_nfa(&mut rng, 5, &alphabet);
        let det = nfa.determinize();
        let mut starts: Vec<StateSet> = nfa
            .states()
            .map(|state| StateSet::singleton(state.clone()))
            .collect();
        starts.push(random_state_set(&mut rng, &nfa));
        for start in starts {
            // The shared-prefix table and the naive per-word oracle must
            // agree everywhere.
            for (word, accepted) in behaviours_up_to(&det, &start, 8) {
                assert_eq!(accepted, naive_accepts(&nfa, &start, &word));
            }
            // Spot-check the fold-based evaluation path too.
            for word in words.iter().take(20) {
                assert_eq!(
                    behaviour_at(&det, &start, word).unwrap(),
                    naive_accepts(&nfa, &start, word)
                );
            }
        }
    }
}

#[test]
fn equivalence_is_reflexive_and_symmetric() {
    let mut rng = rng(0xb1);
    let alphabet = letters(&["a", "b"]);
    for _ in 0..40 {
        let left = random_nfa(&mut rng, 4, &alphabet);
        let right = random_nfa(&mut rng, 4, &alphabet);
        let start_left = random_state_set(&mut rng, &left);
        let start_right = random_state_set(&mut rng, &right);

        assert_eq!(
            left.equivalent(&start_left, &left, &start_left).unwrap(),
            Verdict::Equivalent
        );

        let forward = left.equivalent(&start_left, &right, &start_right).unwrap();
        let backward = right.equivalent(&start_right, &left, &start_left).unwrap();
        // Length-lexicographic exploration makes the counterexample (if any)
        // identical in both directions.
        assert_eq!(forward, backward);
    }
}

#[test]
fn bounded_equivalence_matches_exhaustive_word_comparison() {
    let mut rng = rng(0xb2);
    let alphabet = letters(&["a", "b"]);
    for _ in 0..40 {
        let left = random_nfa(&mut rng, 3, &alphabet);
        let right = random_nfa(&mut rng, 3, &alphabet);
        let start_left = random_state_set(&mut rng, &left);
        let start_right = random_state_set(&mut rng, &right);
        let det_left = left.determinize();
        let det_right = right.determinize();
        let union = DisjointUnion::new(&det_left, &det_right).unwrap();

        for depth in 0..=4usize {
            let verdict = equiv_bounded(
                &union,
                &Side::Left(start_left.clone()),
                &Side::Right(start_right.clone()),
                depth,
            );
            // Oracle: compare membership on every word of length <= depth.
            let mismatch = all_words(&alphabet, depth)
                .into_iter()
                .find(|w| {
                    naive_accepts(&left, &start_left, w) != naive_accepts(&right, &start_right, w)
                });
            match (mismatch, verdict) {
                (None, Verdict::Equivalent) => {}
                (Some(least), Verdict::Distinguished(found)) => {
                    assert_eq!(found, least, "counterexample must be length-lex least");
                }
                (expected, got) => panic!("verdict mismatch: oracle {expected:?}, got {got:?}"),
            }
        }
    }
}

#[test]
fn exact_equivalence_verdicts_match_the_bounded_check() {
    let mut rng = rng(0xb3);
    let alphabet = letters(&["a", "b"]);
    for _ in 0..30 {
        let left = random_nfa(&mut rng, 3, &alphabet);
        let right = random_nfa(&mut rng, 3, &alphabet);
        let start_left = random_state_set(&mut rng, &left);
        let start_right = random_state_set(&mut rng, &right);
        let det_left = left.determinize();
        let det_right = right.determinize();
        let union = DisjointUnion::new(&det_left, &det_right).unwrap();

        let exact = left.equivalent(&start_left, &right, &start_right).unwrap();
        if exact == Verdict::Equivalent {
            // Bisimilarity implies bounded equivalence at every depth.
            assert!(equiv_bounded(
                &union,
                &Side::Left(start_left.clone()),
                &Side::Right(start_right.clone()),
                10
            )
            .is_equivalent());
        }
    }
}

#[test]
fn bisimulation_relations_are_closed_and_output_matching() {
    let mut rng = rng(0xb4);
    let alphabet = letters(&["a", "b"]);
    let mut bisimilar_seen = 0;
    for _ in 0..60 {
        let nfa = random_nfa(&mut rng, 4, &alphabet);
        let det = nfa.determinize();
        let s1 = random_state_set(&mut rng, &nfa);
        let s2 = random_state_set(&mut rng, &nfa);
        if let BisimVerdict::Bisimilar(relation) = bisim_decide(&det, &s1, &s2, 1 << 16) {
            use coalg::Determinized;
            bisimilar_seen += 1;
            for (l, r) in &relation {
                assert_eq!(det.observe(l), det.observe(r));
                for letter in nfa.alphabet() {
                    let next = (det.step(l, letter), det.step(r, letter));
                    assert!(
                        relation.contains(&next),
                        "bisimulation must be closed under derivatives"
                    );
                }
            }
        }
    }
    assert!(bisimilar_seen > 0, "seed should produce some bisimilar pairs");
}

/// Every membership profile (on words up to length 8) realizable by a
/// 3-state automaton over a single letter, computed through derivatives,
/// equals the brute-force enumeration of the same profiles.
#[test]
fn unary_three_state_behaviours_match_brute_force() {
    let alphabet = letters(&["a"]);
    let states = ["0", "1", "2"];
    let subsets: Vec<Vec<String>> = (0u8..8)
        .map(|mask| {
            states
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, s)| s.to_string())
                .collect()
        })
        .collect();

    let mut via_derivatives: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut via_oracle: BTreeSet<Vec<bool>> = BTreeSet::new();
    for t0 in 0..8u8 {
        for t1 in 0..8u8 {
            for t2 in 0..8u8 {
                let transitions: Vec<((String, String), StateSet)> = [t0, t1, t2]
                    .iter()
                    .enumerate()
                    .map(|(i, mask)| {
                        (
                            (i.to_string(), s("a")),
                            StateSet::from_states(subsets[*mask as usize].iter().cloned()),
                        )
                    })
                    .collect();
                for accepting in &subsets {
                    let nfa = Nfa::new(
                        alphabet.clone(),
                        states.iter().map(|x| x.to_string()),
                        accepting.clone(),
                        transitions.clone(),
                    )
                    .unwrap();
                    let det = nfa.determinize();
                    for start in &subsets {
                        let start = StateSet::from_states(start.iter().cloned());
                        let profile: Vec<bool> = behaviours_up_to(&det, &start, 8)
                            .into_iter()
                            .map(|(_, accepted)| accepted)
                            .collect();
                        via_derivatives.insert(profile);
                        let oracle_profile: Vec<bool> = (0..=8)
                            .map(|n| naive_accepts(&nfa, &start, &vec![s("a"); n]))
                            .collect();
                        via_oracle.insert(oracle_profile);
                    }
                }
            }
        }
    }
    assert_eq!(via_derivatives, via_oracle);
}
