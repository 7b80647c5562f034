//! The determinization kernel.
//!
//! Every instance in this crate follows the same pattern: a finite machine
//! with effectful transitions is turned into a deterministic system whose
//! states are *effect values* in canonical form — sorted state sets for
//! automata, canonical polynomials for grammars, normalized stack actions
//! for stack machines. A [`Determinized`] system exposes exactly what the
//! queries need: an observation per effect value and one derivative per
//! input letter.
//!
//! On top of that interface the kernel offers
//!
//! - [`behaviour_at`]: the output reached after consuming a word (language
//!   membership, series coefficient, stack predicate — depending on the
//!   instance),
//! - [`behaviours_up_to`]: all such outputs for words up to a length bound,
//!   sharing derivative work along common prefixes,
//! - [`equiv_bounded`]: a depth-bounded behavioural-equivalence check
//!   returning the least distinguishing word if one exists within the bound,
//! - [`bisim_decide`]: an exact decision by exploring reachable pairs of
//!   canonical effect values, which terminates whenever that pair space is
//!   finite (automata) and is budgeted otherwise (grammars, stack machines).
//!
//! Exploration is breadth-first with letters in alphabet order, so every
//! reported counterexample is the length-lexicographically least word on
//! which the behaviours differ.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A deterministic system over canonical effect values.
///
/// `Carrier` values must be canonical: structural equality (`Ord`/`Eq`) has
/// to coincide with semantic equality of effect values, since the kernel
/// memoizes on them. Instances guarantee this by construction (sorted sets,
/// canonical polynomials, lookahead-minimized stack tables).
pub trait Determinized {
    type Carrier: Clone + Ord;
    type Output: Clone + Eq;
    type Letter: Clone + Ord + fmt::Debug;

    /// The input alphabet, in the (sorted) order used for exploration.
    fn alphabet(&self) -> &[Self::Letter];

    /// The output observable at an effect value.
    fn observe(&self, state: &Self::Carrier) -> Self::Output;

    /// The derivative of an effect value along one input letter.
    fn step(&self, state: &Self::Carrier, letter: &Self::Letter) -> Self::Carrier;
}

/// Errors raised by kernel queries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KernelError {
    /// A query word used a letter outside the system's alphabet.
    UnknownLetter(String),
    /// Two systems were combined whose alphabets differ.
    AlphabetMismatch,
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::UnknownLetter(l) => write!(f, "letter {l} is not in the alphabet"),
            KernelError::AlphabetMismatch => f.write_str("systems have different alphabets"),
        }
    }
}

fn check_word<D: Determinized>(sys: &D, word: &[D::Letter]) -> Result<(), KernelError> {
    for letter in word {
        if !sys.alphabet().contains(letter) {
            return Err(KernelError::UnknownLetter(alloc::format!("{letter:?}")));
        }
    }
    Ok(())
}

/// Evaluates the behaviour of `start` at `word`: the observation after
/// taking one derivative per letter.
pub fn behaviour_at<D: Determinized>(
    sys: &D,
    start: &D::Carrier,
    word: &[D::Letter],
) -> Result<D::Output, KernelError> {
    check_word(sys, word)?;
    let mut state = start.clone();
    for letter in word {
        state = sys.step(&state, letter);
    }
    Ok(sys.observe(&state))
}

/// The behaviour of `start` on every word of length at most `max_len`, in
/// length-lexicographic order. Derivatives are shared along prefixes, so
/// this costs one [`Determinized::step`] per listed word rather than one per
/// letter of every word.
pub fn behaviours_up_to<D: Determinized>(
    sys: &D,
    start: &D::Carrier,
    max_len: usize,
) -> Vec<(Vec<D::Letter>, D::Output)> {
    let mut table = Vec::new();
    let mut frontier = VecDeque::new();
    frontier.push_back((start.clone(), Vec::new()));
    while let Some((state, word)) = frontier.pop_front() {
        table.push((word.clone(), sys.observe(&state)));
        if word.len() < max_len {
            for letter in sys.alphabet() {
                let mut extended = word.clone();
                extended.push(letter.clone());
                frontier.push_back((sys.step(&state, letter), extended));
            }
        }
    }
    table
}

/// The verdict of a bounded equivalence check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict<L> {
    Equivalent,
    /// The least word (length-lexicographically) with differing behaviour.
    Distinguished(Vec<L>),
}

impl<L> Verdict<L> {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent)
    }
}

/// Compares the behaviours of two effect values on all words of length at
/// most `depth`. Returns [`Verdict::Equivalent`] iff [`behaviour_at`] agrees
/// on every such word; otherwise the least distinguishing word.
///
/// Visited pairs are memoized: once a pair has been seen under some word,
/// any later word reaching the same pair can only lead to longer
/// counterexamples, so skipping it is sound.
pub fn equiv_bounded<D: Determinized>(
    sys: &D,
    left: &D::Carrier,
    right: &D::Carrier,
    depth: usize,
) -> Verdict<D::Letter> {
    explore(sys, left, right, Some(depth), None).into_verdict()
}

/// The outcome of an exact bisimulation check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BisimVerdict<C, L> {
    /// The two values are bisimilar; the witnessing relation is the set of
    /// reachable pairs, closed under derivatives, with matching outputs.
    Bisimilar(Vec<(C, C)>),
    /// The least word with differing behaviour.
    Distinguished(Vec<L>),
    /// The reachable pair space exceeded the budget before closure.
    BudgetExceeded,
}

impl<C, L> BisimVerdict<C, L> {
    pub fn is_bisimilar(&self) -> bool {
        matches!(self, BisimVerdict::Bisimilar(_))
    }
}

/// Decides behavioural equivalence by closing the set of reachable pairs of
/// canonical effect values under derivatives, comparing outputs along the
/// way. `budget` bounds the number of distinct pairs explored; systems with
/// finitely many reachable effect values (determinized NFAs) are decided
/// exactly once the budget covers that bound.
pub fn bisim_decide<D: Determinized>(
    sys: &D,
    left: &D::Carrier,
    right: &D::Carrier,
    budget: usize,
) -> BisimVerdict<D::Carrier, D::Letter> {
    explore(sys, left, right, None, Some(budget)).into_bisim()
}

enum Exploration<C, L> {
    Closed(Vec<(C, C)>),
    Distinguished(Vec<L>),
    OutOfBudget,
}

impl<C, L> Exploration<C, L> {
    fn into_verdict(self) -> Verdict<L> {
        match self {
            Exploration::Closed(_) => Verdict::Equivalent,
            Exploration::Distinguished(word) => Verdict::Distinguished(word),
            Exploration::OutOfBudget => unreachable!("depth-bounded exploration has no budget"),
        }
    }

    fn into_bisim(self) -> BisimVerdict<C, L> {
        match self {
            Exploration::Closed(relation) => BisimVerdict::Bisimilar(relation),
            Exploration::Distinguished(word) => BisimVerdict::Distinguished(word),
            Exploration::OutOfBudget => BisimVerdict::BudgetExceeded,
        }
    }
}

/// Breadth-first product exploration; the common core of [`equiv_bounded`]
/// and [`bisim_decide`]. Pairs are dequeued in order of their least
/// discovery word, so the first output mismatch is the least distinguishing
/// word overall.
fn explore<D: Determinized>(
    sys: &D,
    left: &D::Carrier,
    right: &D::Carrier,
    depth: Option<usize>,
    budget: Option<usize>,
) -> Exploration<D::Carrier, D::Letter> {
    let mut visited = BTreeSet::new();
    let mut queue = VecDeque::new();
    visited.insert((left.clone(), right.clone()));
    queue.push_back((left.clone(), right.clone(), Vec::new()));

    while let Some((l, r, word)) = queue.pop_front() {
        if sys.observe(&l) != sys.observe(&r) {
            return Exploration::Distinguished(word);
        }
        if depth.is_some_and(|d| word.len() >= d) {
            continue;
        }
        for letter in sys.alphabet() {
            let next = (sys.step(&l, letter), sys.step(&r, letter));
            if visited.contains(&next) {
                continue;
            }
            if budget.is_some_and(|b| visited.len() >= b) {
                return Exploration::OutOfBudget;
            }
            visited.insert(next.clone());
            let mut extended = word.clone();
            extended.push(letter.clone());
            queue.push_back((next.0, next.1, extended));
        }
    }
    Exploration::Closed(visited.into_iter().collect())
}

/// One value of a disjoint union: an effect value of the left or of the
/// right component system.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Side<A, B> {
    Left(A),
    Right(B),
}

/// The disjoint union of two determinized systems over the same alphabet
/// and output type. Queries across two machines (is this state of system A
/// equivalent to that state of system B?) run on the union.
pub struct DisjointUnion<'a, A, B> {
    left: &'a A,
    right: &'a B,
}

impl<'a, A, B> DisjointUnion<'a, A, B>
where
    A: Determinized,
    B: Determinized<Letter = A::Letter, Output = A::Output>,
{
    pub fn new(left: &'a A, right: &'a B) -> Result<Self, KernelError> {
        if left.alphabet() != right.alphabet() {
            return Err(KernelError::AlphabetMismatch);
        }
        Ok(DisjointUnion { left, right })
    }
}

impl<A, B> Determinized for DisjointUnion<'_, A, B>
where
    A: Determinized,
    B: Determinized<Letter = A::Letter, Output = A::Output>,
{
    type Carrier = Side<A::Carrier, B::Carrier>;
    type Output = A::Output;
    type Letter = A::Letter;

    fn alphabet(&self) -> &[Self::Letter] {
        self.left.alphabet()
    }

    fn observe(&self, state: &Self::Carrier) -> Self::Output {
        match state {
            Side::Left(l) => self.left.observe(l),
            Side::Right(r) => self.right.observe(r),
        }
    }

    fn step(&self, state: &Self::Carrier, letter: &Self::Letter) -> Self::Carrier {
        match state {
            Side::Left(l) => Side::Left(self.left.step(l, letter)),
            Side::Right(r) => Side::Right(self.right.step(r, letter)),
        }
    }
}
