//! Stack machines under the stack effect.
//!
//! A [`StackAction`] is a bounded-lookahead stack transformer: applied to a
//! stack (a word over the stack alphabet, top at the left) it yields a
//! successor state and a new stack, and beyond its lookahead `k` it is
//! uniform — on a long stack `w·u` with `|w| = k` it reads only `w` and
//! drags `u` along unchanged. The representation stores one entry per stack
//! word of length exactly `k` (a replacement *prefix*) and one per shorter
//! stack (a full replacement), which forces uniformity by construction.
//! Actions are kept with the least lookahead consistent with their tables,
//! so structural equality is semantic equality.
//!
//! A deterministic [`StackMachine`] assigns one action per state and input
//! letter and a bounded [`StackPredicate`] per state; it consumes exactly
//! one letter per step (there are no spontaneous moves), so its language —
//! relative to a chosen initial stack — is a real-time deterministic
//! context-free language. The non-deterministic variant replaces the action
//! by a clause list (stack pattern, successor, replacement); a clause fires
//! when its pattern is a prefix of the stack, and a step with no applicable
//! clause drops that branch. Non-deterministic machines reach the ordinary
//! context-free languages.
//!
//! Determinizing a deterministic machine internalizes whole actions as
//! effect values: the lifted transition is Kleisli composition
//! ([`StackAction::compose_with`]) and the lifted output evaluates the
//! state predicate after the action ([`StackAction::observe_with`]).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::kernel::Determinized;

/// A stack over the stack alphabet; index 0 is the top.
pub type Stack = Vec<String>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StackError {
    EmptyStackAlphabet,
    Duplicate(String),
    UnknownState(String),
    UnknownLetter(String),
    UnknownStackSymbol(String),
    /// A deterministic machine is missing the action for `(state, letter)`.
    MissingTransition(String, String),
    /// Actions/predicates built over different stack alphabets were mixed.
    StackAlphabetMismatch,
    /// A lookahead table is not total or has entries of the wrong length.
    MalformedTable(String),
    /// The operation needs a deterministic machine.
    Nondeterministic,
}

impl fmt::Display for StackError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StackError::EmptyStackAlphabet => f.write_str("stack alphabet must be non-empty"),
            StackError::Duplicate(x) => write!(f, "`{x}` declared twice"),
            StackError::UnknownState(s) => write!(f, "undeclared state `{s}`"),
            StackError::UnknownLetter(l) => write!(f, "undeclared letter `{l}`"),
            StackError::UnknownStackSymbol(g) => write!(f, "undeclared stack symbol `{g}`"),
            StackError::MissingTransition(s, l) => {
                write!(f, "missing transition for state `{s}` on letter `{l}`")
            }
            StackError::StackAlphabetMismatch => f.write_str("stack alphabets differ"),
            StackError::MalformedTable(msg) => write!(f, "malformed lookahead table: {msg}"),
            StackError::Nondeterministic => {
                f.write_str("operation requires a deterministic machine")
            }
        }
    }
}

fn check_symbols(gamma: &[String], word: &[String]) -> Result<(), StackError> {
    for symbol in word {
        if gamma.binary_search(symbol).is_err() {
            return Err(StackError::UnknownStackSymbol(symbol.clone()));
        }
    }
    Ok(())
}

fn canonical_gamma(gamma: Vec<String>) -> Result<Vec<String>, StackError> {
    if gamma.is_empty() {
        return Err(StackError::EmptyStackAlphabet);
    }
    let set: BTreeSet<String> = gamma.into_iter().collect();
    Ok(set.into_iter().collect())
}

/// All stack words of exactly `len` symbols, in lexicographic order.
fn words_of(gamma: &[String], len: usize) -> Vec<Stack> {
    let mut words: Vec<Stack> = alloc::vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * gamma.len());
        for w in &words {
            for symbol in gamma {
                let mut e = w.clone();
                e.push(symbol.clone());
                next.push(e);
            }
        }
        words = next;
    }
    words
}

/// A bounded-lookahead stack transformer into states of type `Q`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct StackAction<Q> {
    gamma: Vec<String>,
    lookahead: usize,
    /// Full results for stacks shorter than the lookahead.
    at_short: BTreeMap<Stack, (Q, Stack)>,
    /// Replacement prefixes for the topmost `lookahead` symbols.
    at_k: BTreeMap<Stack, (Q, Stack)>,
}

impl<Q: Clone + Ord> StackAction<Q> {
    /// The identity action: leaves every stack unchanged and enters `state`.
    pub fn unit(gamma: Vec<String>, state: Q) -> Self {
        let gamma: BTreeSet<String> = gamma.into_iter().collect();
        let mut at_k = BTreeMap::new();
        at_k.insert(Vec::new(), (state, Vec::new()));
        StackAction {
            gamma: gamma.into_iter().collect(),
            lookahead: 0,
            at_short: BTreeMap::new(),
            at_k,
        }
    }

    /// Builds an action from total lookahead tables and normalizes it to the
    /// least equivalent lookahead. The stack alphabet is sorted and deduped.
    pub fn new(
        gamma: Vec<String>,
        lookahead: usize,
        at_short: BTreeMap<Stack, (Q, Stack)>,
        at_k: BTreeMap<Stack, (Q, Stack)>,
    ) -> Result<Self, StackError> {
        let gamma = canonical_gamma(gamma)?;
        let mut expected_short = 0usize;
        let mut level = 1usize;
        for _ in 0..lookahead {
            expected_short += level;
            level = level.saturating_mul(gamma.len());
        }
        if at_short.len() != expected_short {
            return Err(StackError::MalformedTable(alloc::format!(
                "expected {expected_short} short entries, found {}",
                at_short.len()
            )));
        }
        if at_k.len() != level {
            return Err(StackError::MalformedTable(alloc::format!(
                "expected {level} lookahead entries, found {}",
                at_k.len()
            )));
        }
        for (pattern, (_, replacement)) in &at_short {
            if pattern.len() >= lookahead {
                return Err(StackError::MalformedTable(alloc::format!(
                    "short entry of length {}",
                    pattern.len()
                )));
            }
            check_symbols(&gamma, pattern)?;
            check_symbols(&gamma, replacement)?;
        }
        for (pattern, (_, replacement)) in &at_k {
            if pattern.len() != lookahead {
                return Err(StackError::MalformedTable(alloc::format!(
                    "lookahead entry of length {} instead of {lookahead}",
                    pattern.len()
                )));
            }
            check_symbols(&gamma, pattern)?;
            check_symbols(&gamma, replacement)?;
        }
        Ok(StackAction {
            gamma,
            lookahead,
            at_short,
            at_k,
        }
        .normalize())
    }

    /// Assembles an action from per-pattern entries: the lookahead is the
    /// longest pattern, shorter patterns are exact short-stack results and
    /// full-length patterns are prefix rules.
    pub fn from_entries(
        gamma: Vec<String>,
        entries: impl IntoIterator<Item = (Stack, Q, Stack)>,
    ) -> Result<Self, StackError> {
        let mut at_short = BTreeMap::new();
        let mut at_k = BTreeMap::new();
        let entries: Vec<_> = entries.into_iter().collect();
        let lookahead = entries.iter().map(|(p, _, _)| p.len()).max().unwrap_or(0);
        for (pattern, state, replacement) in entries {
            let table = if pattern.len() == lookahead {
                &mut at_k
            } else {
                &mut at_short
            };
            if table.insert(pattern.clone(), (state, replacement)).is_some() {
                return Err(StackError::MalformedTable(alloc::format!(
                    "duplicate pattern of length {}",
                    pattern.len()
                )));
            }
        }
        Self::new(gamma, lookahead, at_short, at_k)
    }

    pub fn lookahead(&self) -> usize {
        self.lookahead
    }

    pub fn gamma(&self) -> &[String] {
        &self.gamma
    }

    /// The normalized tables: lookahead, short entries, lookahead entries.
    pub fn tables(
        &self,
    ) -> (
        usize,
        &BTreeMap<Stack, (Q, Stack)>,
        &BTreeMap<Stack, (Q, Stack)>,
    ) {
        (self.lookahead, &self.at_short, &self.at_k)
    }

    /// States mentioned anywhere in the tables.
    pub fn states(&self) -> BTreeSet<&Q> {
        self.at_short
            .values()
            .chain(self.at_k.values())
            .map(|(q, _)| q)
            .collect()
    }

    /// Evaluates the action: the successor state and the transformed stack.
    pub fn apply(&self, stack: &[String]) -> (Q, Stack) {
        if stack.len() < self.lookahead {
            let (state, replacement) = &self.at_short[stack];
            (state.clone(), replacement.clone())
        } else {
            let (prefix, rest) = stack.split_at(self.lookahead);
            let (state, replacement) = &self.at_k[prefix];
            let mut result = replacement.clone();
            result.extend(rest.iter().cloned());
            (state.clone(), result)
        }
    }

    /// Kleisli composition: runs `self`, then the action `continuation`
    /// assigns to the reached state, on the transformed stack.
    pub fn compose_with<R: Clone + Ord, E>(
        &self,
        mut continuation: impl FnMut(&Q) -> Result<StackAction<R>, E>,
    ) -> Result<StackAction<R>, E>
    where
        E: From<StackError>,
    {
        let mut continuations: BTreeMap<Q, StackAction<R>> = BTreeMap::new();
        for state in self.states() {
            if !continuations.contains_key(state) {
                let action = continuation(state)?;
                if action.gamma != self.gamma {
                    return Err(E::from(StackError::StackAlphabetMismatch));
                }
                continuations.insert(state.clone(), action);
            }
        }
        let extra = continuations
            .values()
            .map(|a| a.lookahead)
            .max()
            .unwrap_or(0);
        let lookahead = self.lookahead + extra;

        let mut at_short = BTreeMap::new();
        let mut at_k = BTreeMap::new();
        for len in 0..=lookahead {
            for stack in words_of(&self.gamma, len) {
                let (mid_state, mid_stack) = self.apply(&stack);
                let (state, result) = continuations[&mid_state].apply(&mid_stack);
                if len < lookahead {
                    at_short.insert(stack, (state, result));
                } else {
                    at_k.insert(stack, (state, result));
                }
            }
        }
        Ok(StackAction {
            gamma: self.gamma.clone(),
            lookahead,
            at_short,
            at_k,
        }
        .normalize())
    }

    /// Evaluates a per-state predicate after this action: the resulting
    /// stack predicate maps `w` to `predicate(r(w))` at `t(w)`.
    pub fn observe_with<E>(
        &self,
        mut predicate: impl FnMut(&Q) -> Result<StackPredicate, E>,
    ) -> Result<StackPredicate, E>
    where
        E: From<StackError>,
    {
        let mut predicates: BTreeMap<Q, StackPredicate> = BTreeMap::new();
        for state in self.states() {
            if !predicates.contains_key(state) {
                let p = predicate(state)?;
                if p.gamma != self.gamma {
                    return Err(E::from(StackError::StackAlphabetMismatch));
                }
                predicates.insert(state.clone(), p);
            }
        }
        let extra = predicates.values().map(|p| p.lookahead).max().unwrap_or(0);
        let lookahead = self.lookahead + extra;

        let mut accept_short = BTreeSet::new();
        let mut accept_k = BTreeSet::new();
        for len in 0..=lookahead {
            for stack in words_of(&self.gamma, len) {
                let (state, result) = self.apply(&stack);
                if predicates[&state].eval(&result) {
                    if len < lookahead {
                        accept_short.insert(stack);
                    } else {
                        accept_k.insert(stack);
                    }
                }
            }
        }
        Ok(StackPredicate {
            gamma: self.gamma.clone(),
            lookahead,
            accept_short,
            accept_k,
        }
        .normalize())
    }

    /// Shrinks the lookahead while every group of sibling entries agrees on
    /// all extensions, keeping the representation canonical.
    fn normalize(mut self) -> Self {
        'reduce: while self.lookahead > 0 {
            let shorter = self.lookahead - 1;
            let mut reduced_k = BTreeMap::new();
            for prefix in words_of(&self.gamma, shorter) {
                // All one-symbol extensions must act as (q, rep·γ), and the
                // short entry for the prefix itself must be exactly (q, rep).
                let mut common: Option<(Q, Stack)> = None;
                for symbol in &self.gamma {
                    let mut extended = prefix.clone();
                    extended.push(symbol.clone());
                    let (state, replacement) = &self.at_k[&extended];
                    if replacement.last() != Some(symbol) {
                        break 'reduce;
                    }
                    let stem: Stack = replacement[..replacement.len() - 1].to_vec();
                    match &common {
                        None => common = Some((state.clone(), stem)),
                        Some((q, rep)) if q == state && *rep == stem => {}
                        Some(_) => break 'reduce,
                    }
                }
                let (state, stem) = common.expect("stack alphabet is non-empty");
                if self.at_short.get(&prefix) != Some(&(state.clone(), stem.clone())) {
                    break 'reduce;
                }
                reduced_k.insert(prefix, (state, stem));
            }
            self.at_short.retain(|pattern, _| pattern.len() < shorter);
            self.at_k = reduced_k;
            self.lookahead = shorter;
        }
        self
    }
}

/// A bounded predicate on stacks: membership is determined by the topmost
/// `lookahead` symbols (or by the whole stack when it is shorter).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct StackPredicate {
    gamma: Vec<String>,
    lookahead: usize,
    accept_short: BTreeSet<Stack>,
    accept_k: BTreeSet<Stack>,
}

impl StackPredicate {
    /// Builds a predicate from the accepted short stacks and accepted
    /// lookahead prefixes; normalizes to the least lookahead.
    pub fn new(
        gamma: Vec<String>,
        lookahead: usize,
        accept_short: impl IntoIterator<Item = Stack>,
        accept_k: impl IntoIterator<Item = Stack>,
    ) -> Result<Self, StackError> {
        let gamma = canonical_gamma(gamma)?;
        let mut short_set = BTreeSet::new();
        for stack in accept_short {
            if stack.len() >= lookahead {
                return Err(StackError::MalformedTable(alloc::format!(
                    "short entry of length {}",
                    stack.len()
                )));
            }
            check_symbols(&gamma, &stack)?;
            short_set.insert(stack);
        }
        let mut k_set = BTreeSet::new();
        for stack in accept_k {
            if stack.len() != lookahead {
                return Err(StackError::MalformedTable(alloc::format!(
                    "lookahead entry of length {} instead of {lookahead}",
                    stack.len()
                )));
            }
            check_symbols(&gamma, &stack)?;
            k_set.insert(stack);
        }
        Ok(StackPredicate {
            gamma,
            lookahead,
            accept_short: short_set,
            accept_k: k_set,
        }
        .normalize())
    }

    /// The predicate that rejects every stack.
    pub fn never(gamma: Vec<String>) -> Self {
        StackPredicate {
            gamma,
            lookahead: 0,
            accept_short: BTreeSet::new(),
            accept_k: BTreeSet::new(),
        }
    }

    pub fn lookahead(&self) -> usize {
        self.lookahead
    }

    /// The normalized tables: lookahead, accepted short stacks, accepted
    /// lookahead prefixes.
    pub fn tables(&self) -> (usize, &BTreeSet<Stack>, &BTreeSet<Stack>) {
        (self.lookahead, &self.accept_short, &self.accept_k)
    }

    pub fn eval(&self, stack: &[String]) -> bool {
        if stack.len() < self.lookahead {
            self.accept_short.contains(stack)
        } else {
            self.accept_k.contains(&stack[..self.lookahead])
        }
    }

    fn normalize(mut self) -> Self {
        'reduce: while self.lookahead > 0 {
            let shorter = self.lookahead - 1;
            let mut reduced_k = BTreeSet::new();
            for prefix in words_of(&self.gamma, shorter) {
                let mut value: Option<bool> = None;
                for symbol in &self.gamma {
                    let mut extended = prefix.clone();
                    extended.push(symbol.clone());
                    let v = self.accept_k.contains(&extended);
                    match value {
                        None => value = Some(v),
                        Some(previous) if previous == v => {}
                        Some(_) => break 'reduce,
                    }
                }
                let v = value.expect("stack alphabet is non-empty");
                if self.accept_short.contains(&prefix) != v {
                    break 'reduce;
                }
                if v {
                    reduced_k.insert(prefix);
                }
            }
            self.accept_short.retain(|stack| stack.len() < shorter);
            self.accept_k = reduced_k;
            self.lookahead = shorter;
        }
        self
    }
}

/// A machine configuration: a control state plus a stack.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Configuration {
    pub state: String,
    pub stack: Stack,
}

impl Configuration {
    pub fn new(state: impl Into<String>, stack: Stack) -> Self {
        Configuration {
            state: state.into(),
            stack,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, ", self.state)?;
        if self.stack.is_empty() {
            f.write_str("eps")?;
        } else {
            for (i, symbol) in self.stack.iter().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                f.write_str(symbol)?;
            }
        }
        f.write_str(")")
    }
}

/// One alternative of a non-deterministic transition: if `pattern` is a
/// prefix of the stack, replace it by `replacement` and enter `next`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Clause {
    pub pattern: Stack,
    pub next: String,
    pub replacement: Stack,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TransitionTable {
    Deterministic(BTreeMap<(String, String), StackAction<String>>),
    Nondeterministic(BTreeMap<(String, String), Vec<Clause>>),
}

/// The run result: acceptance plus the configurations reached after the
/// whole word (a singleton for deterministic machines).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Run {
    pub accepted: bool,
    pub configurations: BTreeSet<Configuration>,
}

/// A finite-state machine over `(state, stack)` configurations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StackMachine {
    states: BTreeSet<String>,
    alphabet: Vec<String>,
    gamma: Vec<String>,
    outputs: BTreeMap<String, StackPredicate>,
    table: TransitionTable,
}

impl StackMachine {
    /// Builds a machine. Deterministic tables must be total on
    /// states × alphabet; missing output predicates default to rejection.
    pub fn new(
        states: impl IntoIterator<Item = String>,
        alphabet: impl IntoIterator<Item = String>,
        gamma: impl IntoIterator<Item = String>,
        outputs: impl IntoIterator<Item = (String, StackPredicate)>,
        table: TransitionTable,
    ) -> Result<Self, StackError> {
        let mut state_set = BTreeSet::new();
        for state in states {
            if !state_set.insert(state.clone()) {
                return Err(StackError::Duplicate(state));
            }
        }
        let mut letter_set = BTreeSet::new();
        for letter in alphabet {
            if !letter_set.insert(letter.clone()) {
                return Err(StackError::Duplicate(letter));
            }
        }
        let mut gamma_set = BTreeSet::new();
        for symbol in gamma {
            if !gamma_set.insert(symbol.clone()) {
                return Err(StackError::Duplicate(symbol));
            }
        }
        if gamma_set.is_empty() {
            return Err(StackError::EmptyStackAlphabet);
        }
        let gamma: Vec<String> = gamma_set.into_iter().collect();

        let mut output_map = BTreeMap::new();
        for (state, predicate) in outputs {
            if !state_set.contains(&state) {
                return Err(StackError::UnknownState(state));
            }
            if predicate.gamma != gamma {
                return Err(StackError::StackAlphabetMismatch);
            }
            output_map.insert(state, predicate);
        }

        match &table {
            TransitionTable::Deterministic(actions) => {
                for ((state, letter), action) in actions {
                    if !state_set.contains(state) {
                        return Err(StackError::UnknownState(state.clone()));
                    }
                    if !letter_set.contains(letter) {
                        return Err(StackError::UnknownLetter(letter.clone()));
                    }
                    if action.gamma != gamma {
                        return Err(StackError::StackAlphabetMismatch);
                    }
                    for successor in action.states() {
                        if !state_set.contains(successor) {
                            return Err(StackError::UnknownState(successor.clone()));
                        }
                    }
                }
                for state in &state_set {
                    for letter in &letter_set {
                        if !actions.contains_key(&(state.clone(), letter.clone())) {
                            return Err(StackError::MissingTransition(
                                state.clone(),
                                letter.clone(),
                            ));
                        }
                    }
                }
            }
            TransitionTable::Nondeterministic(clauses) => {
                for ((state, letter), alternatives) in clauses {
                    if !state_set.contains(state) {
                        return Err(StackError::UnknownState(state.clone()));
                    }
                    if !letter_set.contains(letter) {
                        return Err(StackError::UnknownLetter(letter.clone()));
                    }
                    for clause in alternatives {
                        if !state_set.contains(&clause.next) {
                            return Err(StackError::UnknownState(clause.next.clone()));
                        }
                        check_symbols(&gamma, &clause.pattern)?;
                        check_symbols(&gamma, &clause.replacement)?;
                    }
                }
            }
        }

        Ok(StackMachine {
            states: state_set,
            alphabet: letter_set.into_iter().collect(),
            gamma,
            outputs: output_map,
            table,
        })
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn gamma(&self) -> &[String] {
        &self.gamma
    }

    pub fn states(&self) -> impl Iterator<Item = &String> {
        self.states.iter()
    }

    pub fn is_deterministic(&self) -> bool {
        matches!(self.table, TransitionTable::Deterministic(_))
    }

    pub fn table(&self) -> &TransitionTable {
        &self.table
    }

    /// The output predicate of a state (rejection if none was declared).
    pub fn output(&self, state: &str) -> StackPredicate {
        self.outputs
            .get(state)
            .cloned()
            .unwrap_or_else(|| StackPredicate::never(self.gamma.clone()))
    }

    /// The action of a deterministic machine at `(state, letter)`.
    pub fn action(&self, state: &str, letter: &str) -> Result<&StackAction<String>, StackError> {
        match &self.table {
            TransitionTable::Deterministic(actions) => actions
                .get(&(String::from(state), String::from(letter)))
                .ok_or_else(|| StackError::MissingTransition(state.into(), letter.into())),
            TransitionTable::Nondeterministic(_) => Err(StackError::Nondeterministic),
        }
    }

    fn check_configuration(&self, configuration: &Configuration) -> Result<(), StackError> {
        if !self.states.contains(&configuration.state) {
            return Err(StackError::UnknownState(configuration.state.clone()));
        }
        check_symbols(&self.gamma, &configuration.stack)
    }

    fn check_word(&self, word: &[String]) -> Result<(), StackError> {
        for letter in word {
            if self.alphabet.binary_search(letter).is_err() {
                return Err(StackError::UnknownLetter(letter.clone()));
            }
        }
        Ok(())
    }

    fn successors(&self, configurations: &BTreeSet<Configuration>, letter: &str) -> BTreeSet<Configuration> {
        let mut next = BTreeSet::new();
        match &self.table {
            TransitionTable::Deterministic(actions) => {
                for c in configurations {
                    let action = &actions[&(c.state.clone(), String::from(letter))];
                    let (state, stack) = action.apply(&c.stack);
                    next.insert(Configuration { state, stack });
                }
            }
            TransitionTable::Nondeterministic(clauses) => {
                for c in configurations {
                    let Some(alternatives) = clauses.get(&(c.state.clone(), String::from(letter)))
                    else {
                        continue;
                    };
                    for clause in alternatives {
                        if c.stack.starts_with(&clause.pattern) {
                            let mut stack = clause.replacement.clone();
                            stack.extend(c.stack[clause.pattern.len()..].iter().cloned());
                            next.insert(Configuration {
                                state: clause.next.clone(),
                                stack,
                            });
                        }
                    }
                }
            }
        }
        next
    }

    fn any_accepting(&self, configurations: &BTreeSet<Configuration>) -> bool {
        configurations
            .iter()
            .any(|c| self.output(&c.state).eval(&c.stack))
    }

    /// Runs the machine on a word from a start configuration.
    pub fn run(&self, start: &Configuration, word: &[String]) -> Result<Run, StackError> {
        self.check_configuration(start)?;
        self.check_word(word)?;
        let mut configurations = BTreeSet::new();
        configurations.insert(start.clone());
        for letter in word {
            configurations = self.successors(&configurations, letter);
        }
        Ok(Run {
            accepted: self.any_accepting(&configurations),
            configurations,
        })
    }

    /// All accepted words of length at most `max_len`, in
    /// length-lexicographic order, sharing configuration sets along common
    /// prefixes.
    pub fn language_probe(
        &self,
        start: &Configuration,
        max_len: usize,
    ) -> Result<Vec<Vec<String>>, StackError> {
        self.check_configuration(start)?;
        let mut accepted = Vec::new();
        let mut frontier = alloc::collections::VecDeque::new();
        let mut initial = BTreeSet::new();
        initial.insert(start.clone());
        frontier.push_back((initial, Vec::new()));
        while let Some((configurations, word)) = frontier.pop_front() {
            if self.any_accepting(&configurations) {
                accepted.push(word.clone());
            }
            if word.len() < max_len && !configurations.is_empty() {
                for letter in &self.alphabet {
                    let mut extended = word.clone();
                    extended.push(letter.clone());
                    frontier.push_back((self.successors(&configurations, letter), extended));
                }
            }
        }
        Ok(accepted)
    }

    /// The determinized view of a deterministic machine: effect values are
    /// whole stack actions over the machine's states.
    pub fn determinized(&self) -> Result<StackSystem<'_>, StackError> {
        match self.table {
            TransitionTable::Deterministic(_) => Ok(StackSystem { machine: self }),
            TransitionTable::Nondeterministic(_) => Err(StackError::Nondeterministic),
        }
    }

    /// The unit effect value for a start state.
    pub fn unit_action(&self, state: &str) -> Result<StackAction<String>, StackError> {
        if !self.states.contains(state) {
            return Err(StackError::UnknownState(state.into()));
        }
        Ok(StackAction::unit(self.gamma.clone(), String::from(state)))
    }
}

/// The determinized deterministic stack machine as a kernel system.
pub struct StackSystem<'a> {
    machine: &'a StackMachine,
}

impl Determinized for StackSystem<'_> {
    type Carrier = StackAction<String>;
    type Output = StackPredicate;
    type Letter = String;

    fn alphabet(&self) -> &[String] {
        &self.machine.alphabet
    }

    fn observe(&self, action: &StackAction<String>) -> StackPredicate {
        action
            .observe_with(|state| Ok::<_, StackError>(self.machine.output(state)))
            .expect("machine outputs are validated at construction")
    }

    fn step(&self, action: &StackAction<String>, letter: &String) -> StackAction<String> {
        action
            .compose_with(|state| self.machine.action(state, letter).cloned())
            .expect("deterministic tables are total and validated")
    }
}
