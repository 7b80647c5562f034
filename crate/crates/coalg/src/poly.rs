//! Polynomials: finite weighted languages over a generator alphabet.
//!
//! A [`Polynomial`] is a finite formal sum `Σ s_w · w` of words over
//! [`Gen`]erators with coefficients in a [`Semiring`]. Generators come in two
//! kinds: *variables* (grammar nonterminals, automaton states) and
//! *terminals* (input letters embedded into the carrier). With generators
//! `X + Σ` this is exactly the free module-with-monoid carrier used by the
//! weighted-grammar instance: substitution acts on variables and leaves
//! terminals fixed, which makes `(unit, substitute)` the monad structure of
//! the terminal-extended polynomial monad.
//!
//! Canonical form: no stored coefficient is zero and terms are kept in
//! length-lexicographic word order, so structural equality coincides with
//! semantic equality and rendering is deterministic.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::semiring::Semiring;

/// A generator: a named variable or a named terminal.
///
/// Within one grammar the two name spaces are disjoint (validated at grammar
/// construction); the polynomial layer itself only needs a total order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    Var(String),
    Ter(String),
}

impl Gen {
    pub fn var(name: impl Into<String>) -> Self {
        Gen::Var(name.into())
    }

    pub fn ter(name: impl Into<String>) -> Self {
        Gen::Ter(name.into())
    }

    pub fn name(&self) -> &str {
        match self {
            Gen::Var(n) | Gen::Ter(n) => n,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            Gen::Var(_) => 0,
            Gen::Ter(_) => 1,
        }
    }
}

// Ordered by name first so that serialization order is "lexicographic by
// generator identifier"; the kind only breaks ties.
impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name()
            .cmp(other.name())
            .then(self.kind_rank().cmp(&other.kind_rank()))
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Var(n) => f.write_str(n),
            Gen::Ter(n) => write!(f, "'{n}'"),
        }
    }
}

/// A finite word of generators, ordered length-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Gen) -> Self {
        Word(alloc::vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend(other.0.iter().cloned());
        Word(letters)
    }

    pub fn gens(&self) -> impl Iterator<Item = &Gen> {
        self.0.iter()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("eps");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromIterator<Gen> for Word {
    fn from_iter<T: IntoIterator<Item = Gen>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Errors from polynomial operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    /// Substitution hit a variable with no assigned image.
    UnboundVariable(String),
    /// The operation needs commutative coefficients (substitution is only a
    /// monad multiplication when the semiring commutes).
    NonCommutativeCoefficients,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::UnboundVariable(v) => write!(f, "unbound variable `{v}` in substitution"),
            PolyError::NonCommutativeCoefficients => {
                f.write_str("substitution requires a commutative coefficient semiring")
            }
        }
    }
}

/// A finite formal sum of weighted words, in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Polynomial<S: Semiring> {
    terms: BTreeMap<Word, S>,
}

impl<S: Semiring> Polynomial<S> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `1·ε`.
    pub fn one() -> Self {
        Self::monomial(S::one(), Word::empty())
    }

    /// The monad unit: the single-letter word `g` with coefficient one.
    pub fn unit(g: Gen) -> Self {
        Self::monomial(S::one(), Word::single(g))
    }

    pub fn monomial(coefficient: S, word: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(word, coefficient);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (S, Word)>) -> Self {
        let mut poly = Self::zero();
        for (coefficient, word) in terms {
            poly.insert(word, coefficient);
        }
        poly
    }

    fn insert(&mut self, word: Word, coefficient: S) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.remove(&word) {
            None => {
                self.terms.insert(word, coefficient);
            }
            Some(existing) => {
                let sum = existing.add(&coefficient);
                if !sum.is_zero() {
                    self.terms.insert(word, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `word`, zero if absent.
    pub fn coefficient(&self, word: &Word) -> S {
        self.terms.get(word).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in length-lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    /// All generators occurring in some term.
    pub fn generators(&self) -> impl Iterator<Item = &Gen> {
        self.terms.keys().flat_map(|w| w.gens())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut sum = self.clone();
        for (word, coefficient) in rhs.terms() {
            sum.insert(word.clone(), coefficient.clone());
        }
        sum
    }

    /// Left scalar multiple `s · p`.
    pub fn scale(&self, s: &S) -> Self {
        let mut scaled = Self::zero();
        for (word, coefficient) in self.terms() {
            scaled.insert(word.clone(), s.mul(coefficient));
        }
        scaled
    }

    /// The bilinear extension of word concatenation: the coefficient of `w`
    /// in `p · q` is the sum of `p(u)·q(v)` over all splittings `w = u v`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut product = Self::zero();
        for (u, s) in self.terms() {
            for (v, t) in rhs.terms() {
                product.insert(u.concat(v), s.mul(t));
            }
        }
        product
    }

    /// Right multiplication by a single word, a common special case in the
    /// derivative product rule.
    pub fn mul_word(&self, suffix: &Word) -> Self {
        if suffix.is_empty() {
            return self.clone();
        }
        let mut product = Self::zero();
        for (u, s) in self.terms() {
            product.insert(u.concat(suffix), s.clone());
        }
        product
    }

    /// The monad multiplication: replaces every variable by its assigned
    /// polynomial, leaves terminals in place, and recombines linearly. Each
    /// word `g₁…gₙ` becomes the product `σ(g₁)·…·σ(gₙ)`.
    ///
    /// Only defined over commutative coefficients; every variable occurring
    /// in `self` must be assigned.
    pub fn substitute(&self, assignment: &BTreeMap<String, Self>) -> Result<Self, PolyError> {
        if !S::COMMUTATIVE {
            return Err(PolyError::NonCommutativeCoefficients);
        }
        let mut result = Self::zero();
        for (word, coefficient) in self.terms() {
            let mut factor = Self::one();
            for g in word.gens() {
                let image = match g {
                    Gen::Var(name) => assignment
                        .get(name)
                        .ok_or_else(|| PolyError::UnboundVariable(name.clone()))?
                        .clone(),
                    Gen::Ter(_) => Self::unit(g.clone()),
                };
                factor = factor.mul(&image);
            }
            result = result.add(&factor.scale(coefficient));
        }
        Ok(result)
    }
}

impl<S: Semiring> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (word, coefficient)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{coefficient}*{word}")?;
        }
        Ok(())
    }
}
