//! Shared helpers for the integration suites: seeded generators for random
//! systems, and independent oracles (naive simulation, CYK) that never touch
//! the derivative machinery they are used to check.

#![allow(dead_code)]

use coalg::stack::{Clause, Stack, TransitionTable};
use coalg::BigUint;
use coalg::{
    Bool, Gen, Nfa, Polynomial, Scheme, Semiring, Signature, StackAction, StackMachine,
    StackPredicate, StateSet, Term, TreePrefix, WeightedGrammar, Word,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn s(x: &str) -> String {
    x.to_string()
}

pub fn letters(names: &[&str]) -> Vec<String> {
    names.iter().map(|n| s(n)).collect()
}

/// All words over `alphabet` of length at most `max_len`, in
/// length-lexicographic order.
pub fn all_words(alphabet: &[String], max_len: usize) -> Vec<Vec<String>> {
    let mut words = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in alphabet {
                let mut e = w.clone();
                e.push(l.clone());
                next.push(e.clone());
                words.push(e);
            }
        }
        frontier = next;
    }
    words
}

// ---------------------------------------------------------------------------
// NFAs
// ---------------------------------------------------------------------------

/// A random automaton with up to `max_states` states over the given letters.
pub fn random_nfa(rng: &mut ChaCha8Rng, max_states: usize, alphabet: &[String]) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let states: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let accepting: Vec<String> = states
        .iter()
        .filter(|_| rng.gen_bool(0.4))
        .cloned()
        .collect();
    let mut transitions = Vec::new();
    for state in &states {
        for letter in alphabet {
            let successors: Vec<String> = states
                .iter()
                .filter(|_| rng.gen_bool(0.3))
                .cloned()
                .collect();
            if !successors.is_empty() {
                transitions.push((
                    (state.clone(), letter.clone()),
                    StateSet::from_states(successors),
                ));
            }
        }
    }
    Nfa::new(
        alphabet.to_vec(),
        states.clone(),
        accepting,
        transitions,
    )
    .expect("generated automaton is well-formed")
}

pub fn random_state_set(rng: &mut ChaCha8Rng, nfa: &Nfa) -> StateSet {
    StateSet::from_states(nfa.states().filter(|_| rng.gen_bool(0.5)).cloned())
}

/// Forward set simulation, written directly against the transition relation.
pub fn naive_accepts(nfa: &Nfa, start: &StateSet, word: &[String]) -> bool {
    let mut current: Vec<String> = start.iter().cloned().collect();
    for letter in word {
        let mut next: Vec<String> = Vec::new();
        for state in &current {
            for successor in nfa.successors(state, letter).iter() {
                if !next.contains(successor) {
                    next.push(successor.clone());
                }
            }
        }
        current = next;
    }
    current.iter().any(|state| nfa.is_accepting(state))
}

// ---------------------------------------------------------------------------
// Polynomials and grammars
// ---------------------------------------------------------------------------

pub fn nat(n: u32) -> BigUint {
    BigUint::from(n)
}

pub fn random_nat(rng: &mut ChaCha8Rng, max: u32) -> BigUint {
    nat(rng.gen_range(0..=max))
}

/// A random polynomial with at most `max_terms` terms of length at most
/// `max_len`, over the given generators.
pub fn random_poly<S: Semiring>(
    rng: &mut ChaCha8Rng,
    gens: &[Gen],
    max_terms: usize,
    max_len: usize,
    mut coeff: impl FnMut(&mut ChaCha8Rng) -> S,
) -> Polynomial<S> {
    let terms = rng.gen_range(0..=max_terms);
    let mut poly = Polynomial::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_len);
        let word: Word = (0..len)
            .map(|_| gens[rng.gen_range(0..gens.len())].clone())
            .collect();
        poly = poly.add(&Polynomial::monomial(coeff(rng), word));
    }
    poly
}

pub fn random_poly_nat(rng: &mut ChaCha8Rng, gens: &[Gen]) -> Polynomial<BigUint> {
    random_poly(rng, gens, 3, 3, |r| random_nat(r, 2))
}

pub fn random_poly_bool(rng: &mut ChaCha8Rng, gens: &[Gen]) -> Polynomial<Bool> {
    random_poly(rng, gens, 3, 3, |r| Bool(r.gen_bool(0.7)))
}

pub struct GrammarShape {
    pub nonterminals: Vec<String>,
    pub terminals: Vec<String>,
    /// Generators rule bodies may use; restrict to variables for grammars in
    /// rules-only form.
    pub body_gens: Vec<Gen>,
}

pub fn grammar_shape(rng: &mut ChaCha8Rng, vars_only: bool) -> GrammarShape {
    let all_nts = ["A", "B", "C"];
    let n = rng.gen_range(1..=all_nts.len());
    let nonterminals: Vec<String> = all_nts[..n].iter().map(|x| s(x)).collect();
    let terminals = letters(&["a", "b"]);
    let mut body_gens: Vec<Gen> = nonterminals.iter().map(|n| Gen::var(n.clone())).collect();
    if !vars_only {
        body_gens.extend(terminals.iter().map(|t| Gen::ter(t.clone())));
    }
    GrammarShape {
        nonterminals,
        terminals,
        body_gens,
    }
}

/// A random weighted grammar: at most 3 nonterminals over {a, b}, rules with
/// at most 3 terms of length at most 3 and coefficients at most 2. Kept
/// sparse so that iterated derivatives stay desk-sized.
pub fn random_grammar<S: Semiring>(
    rng: &mut ChaCha8Rng,
    vars_only: bool,
    mut coeff: impl FnMut(&mut ChaCha8Rng) -> S,
) -> WeightedGrammar<S> {
    let shape = grammar_shape(rng, vars_only);
    let mut outputs = Vec::new();
    for n in &shape.nonterminals {
        if rng.gen_bool(0.6) {
            outputs.push((n.clone(), coeff(rng)));
        }
    }
    let mut rules = Vec::new();
    for n in &shape.nonterminals {
        for t in &shape.terminals {
            if rng.gen_bool(0.55) {
                continue; // no derivative for this letter
            }
            let poly = random_poly(rng, &shape.body_gens, 2, 2, &mut coeff);
            rules.push(((n.clone(), t.clone()), poly));
        }
    }
    WeightedGrammar::new(shape.terminals, shape.nonterminals, outputs, rules)
        .expect("generated grammar is well-formed")
}

pub fn random_grammar_nat(rng: &mut ChaCha8Rng, vars_only: bool) -> WeightedGrammar<BigUint> {
    random_grammar(rng, vars_only, |r| random_nat(r, 2))
}

pub fn random_grammar_bool(rng: &mut ChaCha8Rng, vars_only: bool) -> WeightedGrammar<Bool> {
    random_grammar(rng, vars_only, |r| Bool(r.gen_bool(0.5)))
}

/// Checks that every derivative of `start` along words of length at most
/// `depth` stays below `max_terms` polynomial terms, on the product-rule
/// route and (if requested) the algebra-evaluation route. Used to rejection-
/// sample grammars whose iterated derivatives would outgrow a desk-scale
/// test.
pub fn derivatives_stay_small<S: Semiring>(
    grammar: &WeightedGrammar<S>,
    start: &Polynomial<S>,
    depth: usize,
    max_terms: usize,
    both_routes: bool,
) -> bool {
    let mut frontier = vec![start.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for v in &frontier {
            if v.term_count() > max_terms {
                return false;
            }
            for letter in grammar.terminals() {
                next.push(grammar.deriv_of(v, letter));
                if both_routes {
                    let w = grammar
                        .step_via_algebra(v)
                        .expect("carrier stays over declared generators")
                        .deriv(letter);
                    if w.term_count() > max_terms {
                        return false;
                    }
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    frontier.iter().all(|v| v.term_count() <= max_terms)
}

/// The total series mass `Σ_{|w| ≤ depth} coefficient(w)` of a start
/// polynomial over the naturals. With all rule coefficients positive this
/// bounds the number of leftmost derivations the exhaustive oracle walks.
pub fn series_mass(
    grammar: &WeightedGrammar<BigUint>,
    start: &Polynomial<BigUint>,
    depth: usize,
) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut frontier = vec![start.clone()];
    for _ in 0..=depth {
        let mut next = Vec::new();
        for v in &frontier {
            total += grammar.out_of(v);
            for letter in grammar.terminals() {
                next.push(grammar.deriv_of(v, letter));
            }
        }
        frontier = next;
    }
    total
}

/// A random grammar + start pair whose derivative tower stays desk-sized up
/// to `depth`, by rejection sampling.
pub fn tame_grammar_nat(
    rng: &mut ChaCha8Rng,
    vars_only: bool,
    depth: usize,
) -> (WeightedGrammar<BigUint>, Polynomial<BigUint>) {
    loop {
        let grammar = random_grammar_nat(rng, vars_only);
        let start = random_carrier(rng, &grammar, vars_only, |r| random_nat(r, 2));
        if derivatives_stay_small(&grammar, &start, depth, 200, true) {
            return (grammar, start);
        }
    }
}

/// A random carrier polynomial over a grammar's declared generators.
pub fn random_carrier<S: Semiring>(
    rng: &mut ChaCha8Rng,
    grammar: &WeightedGrammar<S>,
    vars_only: bool,
    coeff: impl FnMut(&mut ChaCha8Rng) -> S,
) -> Polynomial<S> {
    let mut gens: Vec<Gen> = grammar
        .nonterminals()
        .map(|n| Gen::var(n.clone()))
        .collect();
    if !vars_only {
        gens.extend(grammar.terminals().iter().map(|t| Gen::ter(t.clone())));
    }
    random_poly(rng, &gens, 3, 3, coeff)
}

/// The balanced-parentheses grammar over the booleans.
pub fn dyck_grammar() -> WeightedGrammar<Bool> {
    WeightedGrammar::new(
        letters(&["(", ")"]),
        [s("D")],
        [(s("D"), Bool(true))],
        [(
            (s("D"), s("(")),
            Polynomial::monomial(
                Bool(true),
                [Gen::var("D"), Gen::ter(")"), Gen::var("D")]
                    .into_iter()
                    .collect(),
            ),
        )],
    )
    .unwrap()
}

/// Even-length palindromes over {a, b}: deriv(P, x) = P·'x'.
pub fn palindrome_grammar() -> WeightedGrammar<Bool> {
    let rule = |letter: &str| {
        (
            (s("P"), s(letter)),
            Polynomial::monomial(
                Bool(true),
                [Gen::var("P"), Gen::ter(letter)].into_iter().collect(),
            ),
        )
    };
    WeightedGrammar::new(
        letters(&["a", "b"]),
        [s("P")],
        [(s("P"), Bool(true))],
        [rule("a"), rule("b")],
    )
    .unwrap()
}

/// Derivation-tree counting for `A → AA | a`: the second nonterminal carries
/// the derivative tower (deriv(B, a) = B·B, out(B) = 1).
pub fn counting_grammar() -> WeightedGrammar<BigUint> {
    WeightedGrammar::new(
        [s("a")],
        [s("A"), s("B")],
        [(s("B"), nat(1))],
        [
            ((s("A"), s("a")), Polynomial::unit(Gen::var("B"))),
            (
                (s("B"), s("a")),
                Polynomial::monomial(nat(1), [Gen::var("B"), Gen::var("B")].into_iter().collect()),
            ),
        ],
    )
    .unwrap()
}

/// Direct derivation-tree count for the production grammar `A → AA | a`:
/// trees(w) = [w = a] + Σ over proper splits of trees(u)·trees(v).
/// Written against the productions themselves, independent of any grammar
/// encoding.
pub fn binary_tree_count(len: usize) -> BigUint {
    let mut table: Vec<BigUint> = vec![BigUint::from(0u32); len + 1];
    if len >= 1 {
        table[1] = BigUint::from(1u32);
    }
    for n in 2..=len {
        let mut total = BigUint::from(0u32);
        for split in 1..n {
            total += &table[split] * &table[n - split];
        }
        table[n] = total;
    }
    table[len].clone()
}

// ---------------------------------------------------------------------------
// CYK over grammars in Chomsky normal form
// ---------------------------------------------------------------------------

pub struct CnfGrammar {
    pub start: &'static str,
    pub accepts_empty: bool,
    /// `X → 'a'` rules.
    pub terminal_rules: Vec<(&'static str, &'static str)>,
    /// `X → Y Z` rules.
    pub binary_rules: Vec<(&'static str, &'static str, &'static str)>,
}

/// Standard CYK recognition.
pub fn cyk_accepts(grammar: &CnfGrammar, word: &[String]) -> bool {
    if word.is_empty() {
        return grammar.accepts_empty;
    }
    let n = word.len();
    // table[len - 1][i]: nonterminals deriving word[i .. i + len]
    let mut table: Vec<Vec<Vec<&'static str>>> = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for (lhs, t) in &grammar.terminal_rules {
            if word[i] == *t && !table[0][i].contains(lhs) {
                table[0][i].push(lhs);
            }
        }
    }
    for len in 2..=n {
        for i in 0..=n - len {
            for split in 1..len {
                for (lhs, left, right) in &grammar.binary_rules {
                    if table[split - 1][i].contains(left)
                        && table[len - split - 1][i + split].contains(right)
                        && !table[len - 1][i].contains(lhs)
                    {
                        table[len - 1][i].push(lhs);
                    }
                }
            }
        }
    }
    table[n - 1][0].contains(&grammar.start)
}

/// Balanced parentheses in CNF: S → SS | LT | LR, T → SR, L → '(', R → ')'.
pub fn dyck_cnf() -> CnfGrammar {
    CnfGrammar {
        start: "S",
        accepts_empty: true,
        terminal_rules: vec![("L", "("), ("R", ")")],
        binary_rules: vec![("S", "S", "S"), ("S", "L", "T"), ("S", "L", "R"), ("T", "S", "R")],
    }
}

/// Even-length palindromes over {a, b} in CNF:
/// S → AA | BB | AX | BY, X → SA, Y → SB, A → 'a', B → 'b'.
pub fn palindrome_cnf() -> CnfGrammar {
    CnfGrammar {
        start: "S",
        accepts_empty: true,
        terminal_rules: vec![("A", "a"), ("B", "b")],
        binary_rules: vec![
            ("S", "A", "A"),
            ("S", "B", "B"),
            ("S", "A", "X"),
            ("S", "B", "Y"),
            ("X", "S", "A"),
            ("Y", "S", "B"),
        ],
    }
}

// ---------------------------------------------------------------------------
// Stack machines
// ---------------------------------------------------------------------------

pub fn stack_of(symbols: &[&str]) -> Stack {
    symbols.iter().map(|x| s(x)).collect()
}

pub fn gamma_az() -> Vec<String> {
    letters(&["A", "Z"])
}

/// All stacks over `gamma` of length at most `max_len`.
pub fn all_stacks(gamma: &[String], max_len: usize) -> Vec<Stack> {
    all_words(gamma, max_len)
}

/// A random action over `gamma` into `states`, with lookahead at most 2.
pub fn random_action(
    rng: &mut ChaCha8Rng,
    gamma: &[String],
    states: &[String],
) -> StackAction<String> {
    let lookahead = rng.gen_range(0..=2);
    let mut entries = Vec::new();
    for len in 0..=lookahead {
        for pattern in all_stacks(gamma, len) {
            if pattern.len() != len {
                continue;
            }
            let state = states[rng.gen_range(0..states.len())].clone();
            let replacement_len = rng.gen_range(0..=2);
            let replacement: Stack = (0..replacement_len)
                .map(|_| gamma[rng.gen_range(0..gamma.len())].clone())
                .collect();
            entries.push((pattern, state, replacement));
        }
    }
    // Keep only patterns of exactly the intended lengths: all_stacks
    // enumerates cumulative lengths, so filter duplicates.
    let mut by_pattern: BTreeMap<Stack, (String, Stack)> = BTreeMap::new();
    for (pattern, state, replacement) in entries {
        by_pattern.insert(pattern, (state, replacement));
    }
    StackAction::from_entries(
        gamma.to_vec(),
        by_pattern
            .into_iter()
            .map(|(p, (q, r))| (p, q, r)),
    )
    .expect("generated action tables are total")
}

/// The deterministic machine for { aⁿbⁿ } with initial stack symbol Z.
pub fn anbn_machine() -> StackMachine {
    let gamma = gamma_az();
    let top_z = StackPredicate::new(gamma.clone(), 1, [], [stack_of(&["Z"])]).unwrap();
    let push_a = |state: &str| {
        StackAction::from_entries(gamma.clone(), [(Vec::new(), s(state), stack_of(&["A"]))])
            .unwrap()
    };
    let pop_a = StackAction::from_entries(
        gamma.clone(),
        [
            (stack_of(&["A"]), s("q1"), Vec::new()),
            (stack_of(&["Z"]), s("dead"), stack_of(&["Z"])),
            (Vec::new(), s("dead"), Vec::new()),
        ],
    )
    .unwrap();
    let dead = || StackAction::unit(gamma.clone(), s("dead"));
    let mut actions = BTreeMap::new();
    actions.insert((s("q0"), s("a")), push_a("q0"));
    actions.insert((s("q0"), s("b")), pop_a.clone());
    actions.insert((s("q1"), s("a")), dead());
    actions.insert((s("q1"), s("b")), pop_a);
    actions.insert((s("dead"), s("a")), dead());
    actions.insert((s("dead"), s("b")), dead());
    StackMachine::new(
        [s("q0"), s("q1"), s("dead")],
        letters(&["a", "b"]),
        gamma,
        [(s("q0"), top_z.clone()), (s("q1"), top_z)],
        TransitionTable::Deterministic(actions),
    )
    .unwrap()
}

/// The non-deterministic even-palindrome machine over {a, b}: push letters
/// in the first phase, guess the midpoint, pop matching letters in the
/// second; accept when only the initial Z remains.
pub fn palindrome_machine() -> StackMachine {
    let gamma = letters(&["a", "b", "Z"]);
    let top_z = StackPredicate::new(gamma.clone(), 1, [], [stack_of(&["Z"])]).unwrap();
    let mut clauses: BTreeMap<(String, String), Vec<Clause>> = BTreeMap::new();
    for letter in ["a", "b"] {
        clauses.insert(
            (s("push"), s(letter)),
            vec![
                // Keep pushing...
                Clause {
                    pattern: Vec::new(),
                    next: s("push"),
                    replacement: stack_of(&[letter]),
                },
                // ...or guess that the second half starts here.
                Clause {
                    pattern: stack_of(&[letter]),
                    next: s("pop"),
                    replacement: Vec::new(),
                },
            ],
        );
        clauses.insert(
            (s("pop"), s(letter)),
            vec![Clause {
                pattern: stack_of(&[letter]),
                next: s("pop"),
                replacement: Vec::new(),
            }],
        );
    }
    StackMachine::new(
        [s("push"), s("pop")],
        letters(&["a", "b"]),
        gamma,
        [(s("push"), top_z.clone()), (s("pop"), top_z)],
        TransitionTable::Nondeterministic(clauses),
    )
    .unwrap()
}

// ---------------------------------------------------------------------------
// Recursive program schemes
// ---------------------------------------------------------------------------

/// The scheme φ(z) = z + φ(⋆ × z) and the root φ(z).
pub fn plus_times_scheme() -> (Scheme, Term) {
    let givens = Signature::new([(s("+"), 2), (s("×"), 2), (s("⋆"), 0)]).unwrap();
    let body = Term::app(
        "+",
        [
            Term::var("z"),
            Term::app("φ", [Term::app("×", [Term::app("⋆", []), Term::var("z")])]),
        ],
    );
    let scheme = Scheme::new(givens, [(s("φ"), vec![s("z")], body)]).unwrap();
    (scheme, Term::app("φ", [Term::var("z")]))
}

/// Random guarded scheme over givens {f/2, g/1, c/0} with defined symbols
/// F/1 and G/2; bodies have a given at the root, so every recursive call is
/// guarded.
pub fn random_guarded_scheme(rng: &mut ChaCha8Rng) -> Scheme {
    let givens = Signature::new([(s("f"), 2), (s("g"), 1), (s("c"), 0)]).unwrap();
    let defs = [(s("F"), 1usize), (s("G"), 2usize)];

    fn random_term(
        rng: &mut ChaCha8Rng,
        params: &[String],
        defs: &[(String, usize)],
        depth: usize,
    ) -> Term {
        let pick = if depth == 0 {
            rng.gen_range(0..2)
        } else {
            rng.gen_range(0..5)
        };
        match pick {
            0 => Term::var(params[rng.gen_range(0..params.len())].clone()),
            1 => Term::app("c", []),
            2 => Term::app("g", [random_term(rng, params, defs, depth - 1)]),
            3 => {
                let (name, arity) = defs[rng.gen_range(0..defs.len())].clone();
                Term::app(
                    name,
                    (0..arity)
                        .map(|_| random_term(rng, params, defs, depth - 1))
                        .collect::<Vec<_>>(),
                )
            }
            _ => Term::app(
                "f",
                [
                    random_term(rng, params, defs, depth - 1),
                    random_term(rng, params, defs, depth - 1),
                ],
            ),
        }
    }

    let definitions: Vec<(String, Vec<String>, Term)> = defs
        .iter()
        .map(|(name, arity)| {
            let params: Vec<String> = (0..*arity).map(|i| format!("x{i}")).collect();
            let defs_owned: Vec<(String, usize)> = defs
                .iter()
                .map(|(n, a)| (n.clone(), *a))
                .collect();
            // Root is always a given symbol, so the body is guarded by
            // construction.
            let body = match rng.gen_range(0..3) {
                0 => Term::app("g", [random_term(rng, &params, &defs_owned, 2)]),
                1 => Term::app(
                    "f",
                    [
                        random_term(rng, &params, &defs_owned, 2),
                        random_term(rng, &params, &defs_owned, 2),
                    ],
                ),
                _ => Term::app(
                    "f",
                    [
                        random_term(rng, &params, &defs_owned, 1),
                        Term::app("g", [random_term(rng, &params, &defs_owned, 1)]),
                    ],
                ),
            };
            (name.clone(), params, body)
        })
        .collect();
    Scheme::new(givens, definitions).expect("given-rooted bodies are guarded")
}

/// A random root applying a defined symbol to variable leaves.
pub fn scheme_root(rng: &mut ChaCha8Rng) -> Term {
    if rng.gen_bool(0.5) {
        Term::app("F", [Term::var("z")])
    } else {
        Term::app("G", [Term::var("z"), Term::app("c", [])])
    }
}

/// The prefix tree of a term containing no defined symbols.
pub fn pure_term_tree(term: &Term) -> TreePrefix {
    match term {
        Term::Var(v) => TreePrefix::Var(v.clone()),
        Term::App(symbol, args) => {
            TreePrefix::Node(symbol.clone(), args.iter().map(pure_term_tree).collect())
        }
    }
}

/// Replaces variable leaves by given trees.
pub fn graft_vars(prefix: &TreePrefix, env: &BTreeMap<String, TreePrefix>) -> TreePrefix {
    match prefix {
        TreePrefix::Bottom => TreePrefix::Bottom,
        TreePrefix::Var(v) => env.get(v).cloned().unwrap_or_else(|| prefix.clone()),
        TreePrefix::Node(symbol, children) => TreePrefix::Node(
            symbol.clone(),
            children.iter().map(|c| graft_vars(c, env)).collect(),
        ),
    }
}

// ---------------------------------------------------------------------------
// A non-commutative semiring for rejection tests: 2×2 boolean matrices
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BoolMat2(pub [[bool; 2]; 2]);

impl fmt::Display for BoolMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Semiring for BoolMat2 {
    const COMMUTATIVE: bool = false;

    fn zero() -> Self {
        BoolMat2([[false; 2]; 2])
    }

    fn one() -> Self {
        BoolMat2([[true, false], [false, true]])
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut m = [[false; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = self.0[i][j] || rhs.0[i][j];
            }
        }
        BoolMat2(m)
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut m = [[false; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    m[i][j] |= self.0[i][k] && rhs.0[k][j];
                }
            }
        }
        BoolMat2(m)
    }

    fn parse_coefficient(_text: &str) -> Option<Self> {
        None
    }
}
