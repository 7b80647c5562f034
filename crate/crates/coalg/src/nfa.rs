//! Non-deterministic finite automata under the finite powerset effect.
//!
//! An [`Nfa`] is a Moore-style automaton whose transitions return *sets* of
//! successor states and whose output is acceptance. Determinizing it is the
//! classical subset construction: effect values are [`StateSet`]s, the
//! lifted output is "meets an accepting state" (the join of the state
//! outputs) and the lifted transition is the union of the per-state
//! successor sets. Since there are only finitely many subsets, behavioural
//! equivalence is decidable exactly; [`Nfa::equivalent`] picks the pair
//! budget that makes [`bisim_decide`](crate::kernel::bisim_decide) complete.
//!
//! There are no epsilon transitions: every input letter takes exactly one
//! derivative step.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::kernel::{bisim_decide, BisimVerdict, Determinized, DisjointUnion, Side, Verdict};

/// A sorted, duplicate-free set of state names: one value of the finite
/// powerset effect, in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct StateSet(BTreeSet<String>);

impl StateSet {
    pub fn empty() -> Self {
        StateSet(BTreeSet::new())
    }

    pub fn singleton(state: impl Into<String>) -> Self {
        let mut set = BTreeSet::new();
        set.insert(state.into());
        StateSet(set)
    }

    pub fn from_states(states: impl IntoIterator<Item = String>) -> Self {
        StateSet(states.into_iter().collect())
    }

    pub fn contains(&self, state: &str) -> bool {
        self.0.contains(state)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &String> {
        self.0.iter()
    }

    pub fn union_with(&mut self, other: &StateSet) {
        self.0.extend(other.0.iter().cloned());
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s)?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NfaError {
    UnknownState(String),
    UnknownLetter(String),
    DuplicateState(String),
    DuplicateLetter(String),
    /// Exact equivalence needs both automata to read the same alphabet.
    AlphabetMismatch,
}

impl fmt::Display for NfaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NfaError::UnknownState(s) => write!(f, "undeclared state `{s}`"),
            NfaError::UnknownLetter(l) => write!(f, "undeclared letter `{l}`"),
            NfaError::DuplicateState(s) => write!(f, "state `{s}` declared twice"),
            NfaError::DuplicateLetter(l) => write!(f, "letter `{l}` declared twice"),
            NfaError::AlphabetMismatch => f.write_str("automata have different alphabets"),
        }
    }
}

/// A non-deterministic finite automaton. Transitions not listed are empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    alphabet: Vec<String>,
    states: BTreeSet<String>,
    accepting: BTreeSet<String>,
    transitions: BTreeMap<(String, String), StateSet>,
}

impl Nfa {
    /// Builds an automaton, validating that accepting states and all
    /// transition endpoints are declared. The alphabet is kept sorted; a
    /// missing `(state, letter)` entry denotes the empty successor set.
    pub fn new(
        alphabet: impl IntoIterator<Item = String>,
        states: impl IntoIterator<Item = String>,
        accepting: impl IntoIterator<Item = String>,
        transitions: impl IntoIterator<Item = ((String, String), StateSet)>,
    ) -> Result<Self, NfaError> {
        let mut sorted_alphabet = BTreeSet::new();
        for letter in alphabet {
            if !sorted_alphabet.insert(letter.clone()) {
                return Err(NfaError::DuplicateLetter(letter));
            }
        }
        let mut state_set = BTreeSet::new();
        for state in states {
            if !state_set.insert(state.clone()) {
                return Err(NfaError::DuplicateState(state));
            }
        }
        let mut accepting_set = BTreeSet::new();
        for state in accepting {
            if !state_set.contains(&state) {
                return Err(NfaError::UnknownState(state));
            }
            accepting_set.insert(state);
        }
        let mut table = BTreeMap::new();
        for ((state, letter), successors) in transitions {
            if !state_set.contains(&state) {
                return Err(NfaError::UnknownState(state));
            }
            if !sorted_alphabet.contains(&letter) {
                return Err(NfaError::UnknownLetter(letter));
            }
            for successor in successors.iter() {
                if !state_set.contains(successor) {
                    return Err(NfaError::UnknownState(successor.clone()));
                }
            }
            table
                .entry((state, letter))
                .or_insert_with(StateSet::empty)
                .union_with(&successors);
        }
        Ok(Nfa {
            alphabet: sorted_alphabet.into_iter().collect(),
            states: state_set,
            accepting: accepting_set,
            transitions: table,
        })
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn states(&self) -> impl Iterator<Item = &String> {
        self.states.iter()
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn is_accepting(&self, state: &str) -> bool {
        self.accepting.contains(state)
    }

    /// The successor set of one state under one letter.
    pub fn successors(&self, state: &str, letter: &str) -> StateSet {
        self.transitions
            .get(&(String::from(state), String::from(letter)))
            .cloned()
            .unwrap_or_else(StateSet::empty)
    }

    /// Validates that `set` only mentions declared states.
    pub fn check_state_set(&self, set: &StateSet) -> Result<(), NfaError> {
        for state in set.iter() {
            if !self.states.contains(state) {
                return Err(NfaError::UnknownState(state.clone()));
            }
        }
        Ok(())
    }

    /// The subset construction: the determinized view of this automaton.
    pub fn determinize(&self) -> SubsetSystem<'_> {
        SubsetSystem { nfa: self }
    }

    /// Exact behavioural equivalence of two start sets, possibly in two
    /// different automata over the same alphabet.
    ///
    /// The reachable pairs of subsets number at most `2^{|X1|} · 2^{|X2|}`,
    /// so the pair exploration is run with exactly that budget and always
    /// terminates with a verdict. Counterexamples are length-lexicographically
    /// minimal.
    pub fn equivalent(
        &self,
        start: &StateSet,
        other: &Nfa,
        other_start: &StateSet,
    ) -> Result<Verdict<String>, NfaError> {
        if self.alphabet != other.alphabet {
            return Err(NfaError::AlphabetMismatch);
        }
        self.check_state_set(start)?;
        other.check_state_set(other_start)?;
        let left = self.determinize();
        let right = other.determinize();
        let union = DisjointUnion::new(&left, &right).expect("alphabets checked above");
        let budget = subset_pair_bound(self.state_count(), other.state_count());
        match bisim_decide(
            &union,
            &Side::Left(start.clone()),
            &Side::Right(other_start.clone()),
            budget,
        ) {
            BisimVerdict::Bisimilar(_) => Ok(Verdict::Equivalent),
            BisimVerdict::Distinguished(word) => Ok(Verdict::Distinguished(word)),
            BisimVerdict::BudgetExceeded => {
                unreachable!("pair budget covers all reachable subset pairs")
            }
        }
    }
}

/// `2^m · 2^n`, saturating. Covers every pair of subsets of the two state
/// spaces, i.e. everything the product exploration can reach.
fn subset_pair_bound(m: usize, n: usize) -> usize {
    1usize
        .checked_shl(m as u32)
        .and_then(|l| l.checked_mul(1usize.checked_shl(n as u32)?))
        .unwrap_or(usize::MAX)
}

/// The determinized automaton: states are [`StateSet`]s.
pub struct SubsetSystem<'a> {
    nfa: &'a Nfa,
}

impl Determinized for SubsetSystem<'_> {
    type Carrier = StateSet;
    type Output = bool;
    type Letter = String;

    fn alphabet(&self) -> &[String] {
        &self.nfa.alphabet
    }

    fn observe(&self, set: &StateSet) -> bool {
        set.iter().any(|s| self.nfa.accepting.contains(s))
    }

    fn step(&self, set: &StateSet, letter: &String) -> StateSet {
        let mut successors = StateSet::empty();
        for state in set.iter() {
            successors.union_with(&self.nfa.successors(state, letter));
        }
        successors
    }
}
