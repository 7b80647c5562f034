//! Finite-state behaviour of automata with side effects.
//!
//! A machine whose transitions carry a computational effect — a set of
//! successors, a weighted combination of sentential forms, a stack
//! transformation — determinizes into an ordinary Moore automaton whose
//! states are effect values. This crate implements that construction
//! generically and instantiates it for:
//!
//! - [`nfa`]: non-deterministic finite automata under the finite powerset
//!   effect; subset construction, regular-language membership and exact
//!   equivalence checking.
//! - [`cfg`]: semiring-weighted context-free grammars under the polynomial
//!   effect; word-derivative evaluation of series coefficients, the lifted
//!   module/monoid algebra on output–derivative pairs, and a brute-force
//!   derivation oracle.
//! - [`stack`]: deterministic and non-deterministic stack machines under the
//!   stack effect; run semantics on configurations and bounded language
//!   probes for (deterministic) context-free languages.
//! - [`rps`]: recursive program schemes over a ranked signature, unravelled
//!   into finite prefixes of their (possibly infinite) solution trees.
//!
//! The shared machinery lives in [`kernel`]: behaviour evaluation by
//! iterated derivatives, depth-bounded equivalence checking, and exact
//! bisimulation over canonical effect values. [`poly`] and [`semiring`]
//! provide the exact arithmetic everything else is built on.
//!
//! The crate is `no_std` (with `alloc`); parsing, file formats and the
//! command-line front end live in the companion `coalg-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cfg;
pub mod kernel;
pub mod nfa;
pub mod poly;
pub mod rps;
pub mod semiring;
pub mod stack;

pub use cfg::{GrammarError, LiftedPair, WeightedGrammar};
pub use kernel::{behaviour_at, bisim_decide, equiv_bounded, BisimVerdict, Determinized, Verdict};
pub use nfa::{Nfa, StateSet};
pub use poly::{Gen, PolyError, Polynomial, Word};
pub use rps::{Scheme, SchemeError, Signature, Term, TreePrefix};
pub use semiring::{BigInt, BigUint, Bool, Semiring};
pub use stack::{Configuration, StackAction, StackMachine, StackPredicate};
