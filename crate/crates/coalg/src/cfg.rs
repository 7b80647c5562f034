//! Weighted context-free grammars under the polynomial effect.
//!
//! A [`WeightedGrammar`] is a finite system of nonterminals, each with an
//! output weight (its empty-word coefficient) and, per input letter, a
//! *derivative polynomial* over nonterminals and terminals: the grammar is
//! supplied pre-differentiated, matching the coalgebra signature directly.
//! The carrier of the determinized system is the whole polynomial module:
//! evaluating the behaviour of a polynomial `v` at a word `w` yields the
//! coefficient of `w` in the formal power series denoted by `v` — over the
//! boolean semiring, context-free language membership.
//!
//! Derivatives of composite carriers follow the product rule
//!
//! ```text
//! out(u·v)        = out(u) · out(v)
//! deriv(u·v, a)   = deriv(u, a) · v  +  out(u) · deriv(v, a)
//! ```
//!
//! extended linearly to sums ([`WeightedGrammar::step`]). The same data
//! supports a second evaluation route through the lifted algebra on
//! output/derivative pairs ([`LiftedPair`]): pairs multiply by
//!
//! ```text
//! (o₁,δ₁) ∗ (o₂,δ₂) = (o₁·o₂, a ↦ δ₁(a)·⟨o₂,δ₂⟩ + o₁·δ₂(a))
//! ```
//!
//! where `⟨o,δ⟩ = o·ε + Σ_b b·δ(b)` re-presents a pair as a single carrier
//! polynomial ([`LiftedPair::fuse`]). Interpreting every generator of a
//! polynomial in this algebra ([`WeightedGrammar::step_via_algebra`]) is the
//! generalized powerset construction itself; the two routes are behaviourally
//! equivalent, which the test suite checks rather than assumes.
//!
//! [`WeightedGrammar::oracle_coefficient`] is an independent correctness
//! oracle: it sums rule weights over all leftmost derivations, never touching
//! the derivative engine.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::kernel::Determinized;
use crate::poly::{Gen, Polynomial, Word};
use crate::semiring::Semiring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GrammarError {
    /// Grammars need a commutative weight semiring: only then do polynomials
    /// form the effect monad this instance is built on.
    NonCommutativeSemiring,
    /// A name was declared both as nonterminal and terminal, or twice.
    DuplicateName(String),
    UndeclaredNonterminal(String),
    UndeclaredTerminal(String),
    /// A polynomial mentions a generator the grammar does not declare.
    UndeclaredGenerator(String),
    /// The derivation oracle was asked for a word longer than its bound.
    OracleBound { word_len: usize, bound: usize },
}

impl fmt::Display for GrammarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrammarError::NonCommutativeSemiring => {
                f.write_str("grammars require a commutative coefficient semiring")
            }
            GrammarError::DuplicateName(n) => write!(f, "name `{n}` declared twice"),
            GrammarError::UndeclaredNonterminal(n) => write!(f, "undeclared nonterminal `{n}`"),
            GrammarError::UndeclaredTerminal(n) => write!(f, "undeclared terminal `{n}`"),
            GrammarError::UndeclaredGenerator(n) => write!(f, "undeclared generator `{n}`"),
            GrammarError::OracleBound { word_len, bound } => write!(
                f,
                "oracle bound exceeded: word length {word_len} > bound {bound}"
            ),
        }
    }
}

/// An output weight together with one derivative polynomial per letter:
/// one value of the lifted algebra on `S × (S⟨X+Σ⟩)^Σ`.
///
/// Canonical form: zero derivatives are never stored, so structural equality
/// is semantic equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LiftedPair<S: Semiring> {
    out: S,
    derivs: BTreeMap<String, Polynomial<S>>,
}

impl<S: Semiring> LiftedPair<S> {
    /// The additive unit `(0, a ↦ 0)`.
    pub fn zero() -> Self {
        LiftedPair {
            out: S::zero(),
            derivs: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `(1, a ↦ 0)`.
    pub fn one() -> Self {
        LiftedPair {
            out: S::one(),
            derivs: BTreeMap::new(),
        }
    }

    pub fn new(out: S, derivs: impl IntoIterator<Item = (String, Polynomial<S>)>) -> Self {
        let mut pair = LiftedPair {
            out,
            derivs: BTreeMap::new(),
        };
        for (letter, poly) in derivs {
            if !poly.is_zero() {
                pair.derivs.insert(letter, poly);
            }
        }
        pair
    }

    /// The letter embedding: `(0, ρ_b)` with `ρ_b(b) = 1·ε` and zero
    /// elsewhere.
    pub fn pointing(letter: impl Into<String>) -> Self {
        LiftedPair::new(S::zero(), [(letter.into(), Polynomial::one())])
    }

    pub fn out(&self) -> &S {
        &self.out
    }

    /// The derivative at `letter` (zero if absent).
    pub fn deriv(&self, letter: &str) -> Polynomial<S> {
        self.derivs
            .get(letter)
            .cloned()
            .unwrap_or_else(Polynomial::zero)
    }

    /// Letters with a non-zero derivative, in order.
    pub fn nonzero_letters(&self) -> impl Iterator<Item = &String> {
        self.derivs.keys()
    }

    /// Pointwise sum.
    pub fn add(&self, rhs: &Self) -> Self {
        let mut derivs = self.derivs.clone();
        for (letter, poly) in &rhs.derivs {
            let sum = match derivs.remove(letter) {
                None => poly.clone(),
                Some(existing) => existing.add(poly),
            };
            if !sum.is_zero() {
                derivs.insert(letter.clone(), sum);
            }
        }
        LiftedPair {
            out: self.out.add(&rhs.out),
            derivs,
        }
    }

    /// Pointwise scalar multiple.
    pub fn scale(&self, s: &S) -> Self {
        let mut scaled = LiftedPair {
            out: s.mul(&self.out),
            derivs: BTreeMap::new(),
        };
        for (letter, poly) in &self.derivs {
            let p = poly.scale(s);
            if !p.is_zero() {
                scaled.derivs.insert(letter.clone(), p);
            }
        }
        scaled
    }

    /// The lifted monoid multiplication
    /// `(o₁,δ₁) ∗ (o₂,δ₂) = (o₁·o₂, a ↦ δ₁(a)·⟨o₂,δ₂⟩ + o₁·δ₂(a))`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let fused = rhs.fuse();
        let mut derivs: BTreeMap<String, Polynomial<S>> = BTreeMap::new();
        for (letter, d1) in &self.derivs {
            let contribution = d1.mul(&fused);
            if !contribution.is_zero() {
                derivs.insert(letter.clone(), contribution);
            }
        }
        if !self.out.is_zero() {
            for (letter, d2) in &rhs.derivs {
                let contribution = d2.scale(&self.out);
                let sum = match derivs.remove(letter) {
                    None => contribution,
                    Some(existing) => existing.add(&contribution),
                };
                if !sum.is_zero() {
                    derivs.insert(letter.clone(), sum);
                }
            }
        }
        LiftedPair {
            out: self.out.mul(&rhs.out),
            derivs,
        }
    }

    /// `⟨o,δ⟩ = o·ε + Σ_b b·δ(b)`: the polynomial that acts like a state
    /// with output `o` and derivatives `δ` — behaviourally equivalent to the
    /// pair it came from.
    pub fn fuse(&self) -> Polynomial<S> {
        let mut fused = Polynomial::monomial(self.out.clone(), Word::empty());
        for (letter, poly) in &self.derivs {
            let pointed = Polynomial::unit(Gen::ter(letter.clone())).mul(poly);
            fused = fused.add(&pointed);
        }
        fused
    }
}

/// A weighted context-free grammar in coalgebra form: outputs plus one
/// derivative polynomial per nonterminal and letter. Missing outputs and
/// rules are zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedGrammar<S: Semiring> {
    terminals: Vec<String>,
    nonterminals: BTreeSet<String>,
    outputs: BTreeMap<String, S>,
    rules: BTreeMap<String, BTreeMap<String, Polynomial<S>>>,
}

impl<S: Semiring> WeightedGrammar<S> {
    /// Builds a grammar, rejecting non-commutative coefficient semirings,
    /// name clashes between the two generator spaces, and rule polynomials
    /// over undeclared generators.
    pub fn new(
        terminals: impl IntoIterator<Item = String>,
        nonterminals: impl IntoIterator<Item = String>,
        outputs: impl IntoIterator<Item = (String, S)>,
        rules: impl IntoIterator<Item = ((String, String), Polynomial<S>)>,
    ) -> Result<Self, GrammarError> {
        if !S::COMMUTATIVE {
            return Err(GrammarError::NonCommutativeSemiring);
        }
        let mut terminal_set = BTreeSet::new();
        for t in terminals {
            if !terminal_set.insert(t.clone()) {
                return Err(GrammarError::DuplicateName(t));
            }
        }
        let mut nonterminal_set = BTreeSet::new();
        for n in nonterminals {
            if terminal_set.contains(&n) || !nonterminal_set.insert(n.clone()) {
                return Err(GrammarError::DuplicateName(n));
            }
        }
        let mut grammar = WeightedGrammar {
            terminals: terminal_set.into_iter().collect(),
            nonterminals: nonterminal_set,
            outputs: BTreeMap::new(),
            rules: BTreeMap::new(),
        };
        for (n, weight) in outputs {
            if !grammar.nonterminals.contains(&n) {
                return Err(GrammarError::UndeclaredNonterminal(n));
            }
            if !weight.is_zero() {
                grammar.outputs.insert(n, weight);
            }
        }
        for ((n, letter), poly) in rules {
            if !grammar.nonterminals.contains(&n) {
                return Err(GrammarError::UndeclaredNonterminal(n));
            }
            if grammar.terminals.binary_search(&letter).is_err() {
                return Err(GrammarError::UndeclaredTerminal(letter));
            }
            grammar.validate_polynomial(&poly)?;
            if !poly.is_zero() {
                grammar.rules.entry(n).or_default().insert(letter, poly);
            }
        }
        Ok(grammar)
    }

    pub fn terminals(&self) -> &[String] {
        &self.terminals
    }

    pub fn nonterminals(&self) -> impl Iterator<Item = &String> {
        self.nonterminals.iter()
    }

    /// The output weight of a nonterminal (zero if none was declared).
    pub fn output(&self, nonterminal: &str) -> S {
        self.outputs
            .get(nonterminal)
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// The derivative polynomial of a nonterminal at a letter.
    pub fn rule(&self, nonterminal: &str, letter: &str) -> Polynomial<S> {
        self.rules
            .get(nonterminal)
            .and_then(|by_letter| by_letter.get(letter))
            .cloned()
            .unwrap_or_else(Polynomial::zero)
    }

    /// Checks that a polynomial only uses declared generators.
    pub fn validate_polynomial(&self, poly: &Polynomial<S>) -> Result<(), GrammarError> {
        for g in poly.generators() {
            match g {
                Gen::Var(n) if !self.nonterminals.contains(n) => {
                    return Err(GrammarError::UndeclaredGenerator(n.clone()))
                }
                Gen::Ter(t) if self.terminals.binary_search(t).is_err() => {
                    return Err(GrammarError::UndeclaredGenerator(t.clone()))
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn gen_output(&self, g: &Gen) -> S {
        match g {
            Gen::Var(n) => self.output(n),
            Gen::Ter(_) => S::zero(),
        }
    }

    /// The non-zero derivatives of a single generator, as pairs
    /// `(letter, polynomial)`.
    fn gen_derivs(&self, g: &Gen) -> BTreeMap<String, Polynomial<S>> {
        match g {
            Gen::Var(n) => self.rules.get(n).cloned().unwrap_or_default(),
            Gen::Ter(t) => {
                let mut derivs = BTreeMap::new();
                derivs.insert(t.clone(), Polynomial::one());
                derivs
            }
        }
    }

    /// The generator's image in the lifted algebra: its output and
    /// derivatives as a pair. For terminals this is the pointing.
    fn gen_pair(&self, g: &Gen) -> LiftedPair<S> {
        LiftedPair::new(self.gen_output(g), self.gen_derivs(g))
    }

    /// The output of a carrier polynomial: multiplicative on words
    /// (empty word ↦ 1, terminals ↦ 0, nonterminals ↦ their output),
    /// linear on sums.
    pub fn out_of(&self, v: &Polynomial<S>) -> S {
        let mut total = S::zero();
        for (word, coefficient) in v.terms() {
            let mut factor = coefficient.clone();
            for g in word.gens() {
                if factor.is_zero() {
                    break;
                }
                factor = factor.mul(&self.gen_output(g));
            }
            total = total.add(&factor);
        }
        total
    }

    /// The derivative of a carrier polynomial at one letter, by the product
    /// rule with the literal suffix as multiplier.
    pub fn deriv_of(&self, v: &Polynomial<S>, letter: &str) -> Polynomial<S> {
        let mut total = Polynomial::zero();
        for (word, coefficient) in v.terms() {
            let d = self.word_deriv(word, letter);
            total = total.add(&d.scale(coefficient));
        }
        total
    }

    /// Product rule along one word, processed from the right:
    /// `deriv(g·u, a) = deriv(g, a)·u + out(g)·deriv(u, a)`.
    fn word_deriv(&self, word: &Word, letter: &str) -> Polynomial<S> {
        let mut deriv = Polynomial::zero();
        let mut suffix = Word::empty();
        for g in word.gens().collect::<Vec<_>>().into_iter().rev() {
            let own = match g {
                Gen::Var(n) => self.rule(n, letter),
                Gen::Ter(t) if t == letter => Polynomial::one(),
                Gen::Ter(_) => Polynomial::zero(),
            };
            let mut next = own.mul_word(&suffix);
            let out = self.gen_output(g);
            if !out.is_zero() {
                next = next.add(&deriv.scale(&out));
            }
            deriv = next;
            suffix = Word::single(g.clone()).concat(&suffix);
        }
        deriv
    }

    /// The determinized coalgebra structure at `v`: its output and all
    /// letter derivatives, assembled through the product rule.
    pub fn step(&self, v: &Polynomial<S>) -> Result<LiftedPair<S>, GrammarError> {
        self.validate_polynomial(v)?;
        let derivs: Vec<_> = self
            .terminals
            .iter()
            .map(|letter| (letter.clone(), self.deriv_of(v, letter)))
            .collect();
        Ok(LiftedPair::new(self.out_of(v), derivs))
    }

    /// The same coalgebra structure computed by the powerset-construction
    /// route: every generator is interpreted in the lifted algebra and the
    /// polynomial is evaluated with the lifted sum, scalar action and
    /// multiplication. Behaviourally equivalent to [`step`](Self::step); the
    /// derivative polynomials themselves may differ syntactically.
    pub fn step_via_algebra(&self, v: &Polynomial<S>) -> Result<LiftedPair<S>, GrammarError> {
        self.validate_polynomial(v)?;
        let mut total = LiftedPair::zero();
        for (word, coefficient) in v.terms() {
            let mut factor = LiftedPair::one();
            for g in word.gens() {
                factor = factor.mul(&self.gen_pair(g));
            }
            total = total.add(&factor.scale(coefficient));
        }
        Ok(total)
    }

    /// The coefficient of `word` in the series denoted by `start`: the
    /// output after one derivative per letter.
    pub fn coefficient(&self, start: &Polynomial<S>, word: &[String]) -> Result<S, GrammarError> {
        self.validate_polynomial(start)?;
        self.check_word(word)?;
        let mut v = start.clone();
        for letter in word {
            v = self.deriv_of(&v, letter);
        }
        Ok(self.out_of(&v))
    }

    fn check_word(&self, word: &[String]) -> Result<(), GrammarError> {
        for letter in word {
            if self.terminals.binary_search(letter).is_err() {
                return Err(GrammarError::UndeclaredTerminal(letter.clone()));
            }
        }
        Ok(())
    }

    /// Independent oracle: the coefficient of `word` as the weighted count
    /// of leftmost derivations.
    ///
    /// Every nonterminal `x` is read back as classical productions
    /// `x → out(x)·ε + Σ_a a·rule(x, a)`; each non-erasing alternative
    /// starts with a terminal, so rewriting the leftmost nonterminal either
    /// erases it or extends the matched terminal prefix, and exhaustive
    /// expansion with prefix pruning terminates. The result is the sum over
    /// all derivations of the product of the rule weights used — computed
    /// without any derivative machinery.
    pub fn oracle_coefficient(
        &self,
        start: &Polynomial<S>,
        word: &[String],
        bound: usize,
    ) -> Result<S, GrammarError> {
        self.validate_polynomial(start)?;
        self.check_word(word)?;
        if word.len() > bound {
            return Err(GrammarError::OracleBound {
                word_len: word.len(),
                bound,
            });
        }

        // Alternatives of each nonterminal: (weight, sentential form).
        let mut alternatives: BTreeMap<String, Vec<(S, Vec<Gen>)>> = BTreeMap::new();
        for n in &self.nonterminals {
            let mut alts = Vec::new();
            let erase = self.output(n);
            if !erase.is_zero() {
                alts.push((erase, Vec::new()));
            }
            if let Some(by_letter) = self.rules.get(n) {
                for (letter, poly) in by_letter {
                    for (w, c) in poly.terms() {
                        let mut form = Vec::with_capacity(w.len() + 1);
                        form.push(Gen::ter(letter.clone()));
                        form.extend(w.gens().cloned());
                        alts.push((c.clone(), form));
                    }
                }
            }
            alternatives.insert(n.clone(), alts);
        }

        let mut total = S::zero();
        // Work items: (sentential form suffix, unmatched target suffix index, weight).
        let mut pending: Vec<(Vec<Gen>, usize, S)> = Vec::new();
        for (w, c) in start.terms() {
            pending.push((w.gens().cloned().collect(), 0, c.clone()));
        }
        while let Some((mut form, mut matched, weight)) = pending.pop() {
            // Strip the terminal prefix, matching it against the target.
            let mut pruned = false;
            while let Some(Gen::Ter(t)) = form.first() {
                if matched < word.len() && &word[matched] == t {
                    matched += 1;
                    form.remove(0);
                } else {
                    pruned = true;
                    break;
                }
            }
            if pruned {
                continue;
            }
            match form.first() {
                None => {
                    if matched == word.len() {
                        total = total.add(&weight);
                    }
                }
                Some(Gen::Var(n)) => {
                    let n = n.clone();
                    for (c, alt) in &alternatives[&n] {
                        let mut next = alt.clone();
                        next.extend(form.iter().skip(1).cloned());
                        pending.push((next, matched, weight.mul(c)));
                    }
                }
                Some(Gen::Ter(_)) => unreachable!("terminal prefix was stripped"),
            }
        }
        Ok(total)
    }

    /// The determinized view: carriers are polynomials, outputs are
    /// coefficients.
    pub fn system(&self) -> GrammarSystem<'_, S> {
        GrammarSystem { grammar: self }
    }
}

/// The determinized grammar as a kernel system.
pub struct GrammarSystem<'a, S: Semiring> {
    grammar: &'a WeightedGrammar<S>,
}

impl<S: Semiring> Determinized for GrammarSystem<'_, S> {
    type Carrier = Polynomial<S>;
    type Output = S;
    type Letter = String;

    fn alphabet(&self) -> &[String] {
        &self.grammar.terminals
    }

    fn observe(&self, v: &Polynomial<S>) -> S {
        self.grammar.out_of(v)
    }

    fn step(&self, v: &Polynomial<S>, letter: &String) -> Polynomial<S> {
        self.grammar.deriv_of(v, letter)
    }
}
