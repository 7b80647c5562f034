//! Recursive program schemes and their tree unfoldings.
//!
//! A [`Scheme`] defines new operations over a ranked signature of *givens*
//! by mutually recursive bodies. Guardedness — every recursive call sits
//! strictly below at least one given symbol — makes the unravelling
//! productive: each defined operation denotes a unique (possibly infinite)
//! tree over the givens.
//!
//! [`Scheme::unfold`] materializes a finite prefix of that tree as a
//! [`TreePrefix`]. The depth budget counts *given* symbols along a path:
//! a defined occurrence is expanded while fewer than `depth - 1` givens
//! stand above it, and is cut to the truncation leaf `⊥` otherwise, while
//! fully expanded given/variable structure is kept whole. Truncation is
//! therefore explicit: `⊥` marks exactly the places where the approximation
//! stops, and prefixes at increasing depths form a chain in the prefix
//! order (`⊥` below everything), approximating the solution tree.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SchemeError {
    DuplicateSymbol(String),
    UnknownSymbol(String),
    /// `symbol` was applied to the wrong number of arguments.
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    /// A variable name is not a parameter of the enclosing definition.
    UnknownVariable(String),
    /// A recursive call with no given symbol above it; the path lists the
    /// chain of applied symbols from the defining operation to the call.
    Unguarded { path: Vec<String> },
    /// Two schemes with different given signatures were compared.
    SignatureMismatch,
}

impl fmt::Display for SchemeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeError::DuplicateSymbol(s) => write!(f, "symbol `{s}` declared twice"),
            SchemeError::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            SchemeError::ArityMismatch {
                symbol,
                expected,
                found,
            } => write!(
                f,
                "symbol `{symbol}` has arity {expected} but was applied to {found} arguments"
            ),
            SchemeError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            SchemeError::Unguarded { path } => {
                f.write_str("unguarded recursion: ")?;
                for (i, symbol) in path.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" -> ")?;
                    }
                    f.write_str(symbol)?;
                }
                Ok(())
            }
            SchemeError::SignatureMismatch => f.write_str("schemes have different given signatures"),
        }
    }
}

/// A ranked signature: finitely many symbols with exact arities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature(BTreeMap<String, usize>);

impl Signature {
    pub fn new(symbols: impl IntoIterator<Item = (String, usize)>) -> Result<Self, SchemeError> {
        let mut map = BTreeMap::new();
        for (symbol, arity) in symbols {
            if map.insert(symbol.clone(), arity).is_some() {
                return Err(SchemeError::DuplicateSymbol(symbol));
            }
        }
        Ok(Signature(map))
    }

    pub fn arity(&self, symbol: &str) -> Option<usize> {
        self.0.get(symbol).copied()
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.0.contains_key(symbol)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&String, usize)> {
        self.0.iter().map(|(s, a)| (s, *a))
    }
}

/// A finite term over givens, defined operations and variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn app(symbol: impl Into<String>, args: impl IntoIterator<Item = Term>) -> Self {
        Term::App(symbol.into(), args.into_iter().collect())
    }

    fn substitute(&self, env: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Var(v) => env.get(v).cloned().unwrap_or_else(|| Term::Var(v.clone())),
            Term::App(symbol, args) => Term::App(
                symbol.clone(),
                args.iter().map(|a| a.substitute(env)).collect(),
            ),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(symbol, args) => {
                f.write_str(symbol)?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// One defined operation: named parameters and a body term.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Definition {
    parameters: Vec<String>,
    body: Term,
}

/// A guarded recursive program scheme.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scheme {
    givens: Signature,
    defined: BTreeMap<String, Definition>,
}

impl Scheme {
    /// Builds a scheme: names must not clash, bodies must be well-ranked
    /// with variables drawn from the definition's parameters, and every
    /// defined-symbol occurrence must be guarded by a given symbol above it
    /// (in particular it must not be the body root).
    pub fn new(
        givens: Signature,
        definitions: impl IntoIterator<Item = (String, Vec<String>, Term)>,
    ) -> Result<Self, SchemeError> {
        let mut defined = BTreeMap::new();
        for (name, parameters, body) in definitions {
            if givens.contains(&name) || defined.contains_key(&name) {
                return Err(SchemeError::DuplicateSymbol(name));
            }
            defined.insert(name, Definition { parameters, body });
        }
        let scheme = Scheme { givens, defined };
        for (name, definition) in &scheme.defined {
            let parameters: BTreeSet<&String> = definition.parameters.iter().collect();
            scheme.check_term(&definition.body, Some(&parameters))?;
            let mut path = alloc::vec![name.clone()];
            scheme.check_guarded(&definition.body, false, &mut path)?;
        }
        Ok(scheme)
    }

    pub fn givens(&self) -> &Signature {
        &self.givens
    }

    pub fn arity_of_defined(&self, symbol: &str) -> Option<usize> {
        self.defined.get(symbol).map(|d| d.parameters.len())
    }

    /// The definitions: name, parameters, body.
    pub fn definitions(&self) -> impl Iterator<Item = (&String, &[String], &Term)> {
        self.defined
            .iter()
            .map(|(name, d)| (name, d.parameters.as_slice(), &d.body))
    }

    pub fn is_symbol(&self, name: &str) -> bool {
        self.givens.contains(name) || self.defined.contains_key(name)
    }

    /// Validates a term against this scheme. With `parameters = None` any
    /// variable is allowed (free variables stand for themselves in roots
    /// passed to [`unfold`](Self::unfold)).
    fn check_term(
        &self,
        term: &Term,
        parameters: Option<&BTreeSet<&String>>,
    ) -> Result<(), SchemeError> {
        match term {
            Term::Var(v) => {
                if self.is_symbol(v) {
                    // A bare symbol name must be written as an application.
                    return Err(SchemeError::ArityMismatch {
                        symbol: v.clone(),
                        expected: self
                            .givens
                            .arity(v)
                            .or_else(|| self.arity_of_defined(v))
                            .unwrap_or(0),
                        found: 0,
                    });
                }
                if let Some(allowed) = parameters {
                    if !allowed.contains(v) {
                        return Err(SchemeError::UnknownVariable(v.clone()));
                    }
                }
                Ok(())
            }
            Term::App(symbol, args) => {
                let arity = self
                    .givens
                    .arity(symbol)
                    .or_else(|| self.arity_of_defined(symbol))
                    .ok_or_else(|| SchemeError::UnknownSymbol(symbol.clone()))?;
                if arity != args.len() {
                    return Err(SchemeError::ArityMismatch {
                        symbol: symbol.clone(),
                        expected: arity,
                        found: args.len(),
                    });
                }
                for a in args {
                    self.check_term(a, parameters)?;
                }
                Ok(())
            }
        }
    }

    /// Checks a root term supplied from outside (free variables allowed).
    pub fn check_root(&self, term: &Term) -> Result<(), SchemeError> {
        self.check_term(term, None)
    }

    fn check_guarded(
        &self,
        term: &Term,
        under_given: bool,
        path: &mut Vec<String>,
    ) -> Result<(), SchemeError> {
        if let Term::App(symbol, args) = term {
            let is_defined = self.defined.contains_key(symbol);
            path.push(symbol.clone());
            if is_defined && !under_given {
                return Err(SchemeError::Unguarded { path: path.clone() });
            }
            let below_given = under_given || !is_defined;
            for a in args {
                self.check_guarded(a, below_given, path)?;
            }
            path.pop();
        }
        Ok(())
    }

    /// Unravels `root` to the prefix of its solution tree with `depth`
    /// productive layers: defined operations are expanded while fewer than
    /// `depth - 1` given symbols stand above them, remaining calls become
    /// `⊥`, and given/variable structure is kept in full.
    ///
    /// Guardedness bounds the expansion work, so this always terminates.
    pub fn unfold(&self, root: &Term, depth: usize) -> Result<TreePrefix, SchemeError> {
        self.check_root(root)?;
        Ok(self.grow(root, depth))
    }

    fn grow(&self, term: &Term, budget: usize) -> TreePrefix {
        match term {
            Term::Var(v) => TreePrefix::Var(v.clone()),
            Term::App(symbol, args) => {
                if let Some(definition) = self.defined.get(symbol) {
                    if budget < 2 {
                        return TreePrefix::Bottom;
                    }
                    let env: BTreeMap<String, Term> = definition
                        .parameters
                        .iter()
                        .cloned()
                        .zip(args.iter().cloned())
                        .collect();
                    self.grow(&definition.body.substitute(&env), budget)
                } else {
                    TreePrefix::Node(
                        symbol.clone(),
                        args.iter()
                            .map(|a| self.grow(a, budget.saturating_sub(1)))
                            .collect(),
                    )
                }
            }
        }
    }
}

/// A finite, explicitly truncated tree over givens and variables. `Bottom`
/// (`⊥`) marks where the prefix was cut.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TreePrefix {
    Bottom,
    Var(String),
    Node(String, Vec<TreePrefix>),
}

impl TreePrefix {
    pub fn is_complete(&self) -> bool {
        match self {
            TreePrefix::Bottom => false,
            TreePrefix::Var(_) => true,
            TreePrefix::Node(_, children) => children.iter().all(|c| c.is_complete()),
        }
    }

    /// Prefix order: `⊥` is below everything, other nodes must match
    /// exactly and compare childwise.
    pub fn prefix_of(&self, other: &TreePrefix) -> bool {
        match (self, other) {
            (TreePrefix::Bottom, _) => true,
            (TreePrefix::Var(a), TreePrefix::Var(b)) => a == b,
            (TreePrefix::Node(f, xs), TreePrefix::Node(g, ys)) => {
                f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| x.prefix_of(y))
            }
            _ => false,
        }
    }
}

impl fmt::Display for TreePrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreePrefix::Bottom => f.write_str("⊥"),
            TreePrefix::Var(v) => f.write_str(v),
            TreePrefix::Node(symbol, children) => {
                f.write_str(symbol)?;
                if !children.is_empty() {
                    f.write_str("(")?;
                    for (i, c) in children.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{c}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// The verdict of a bounded prefix comparison.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrefixVerdict {
    Equal,
    /// The first differing position in left-to-right preorder, as the list
    /// of child indices from the root.
    DiffersAt(Vec<usize>),
}

/// Compares the unfoldings of two roots at the given depth, treating `⊥` as
/// a wildcard: two prefixes are equal when they agree wherever both are
/// defined.
pub fn prefix_equal(
    left_scheme: &Scheme,
    left_root: &Term,
    right_scheme: &Scheme,
    right_root: &Term,
    depth: usize,
) -> Result<PrefixVerdict, SchemeError> {
    if left_scheme.givens != right_scheme.givens {
        return Err(SchemeError::SignatureMismatch);
    }
    let left = left_scheme.unfold(left_root, depth)?;
    let right = right_scheme.unfold(right_root, depth)?;
    let mut path = Vec::new();
    Ok(match first_difference(&left, &right, &mut path) {
        None => PrefixVerdict::Equal,
        Some(at) => PrefixVerdict::DiffersAt(at),
    })
}

fn first_difference(
    left: &TreePrefix,
    right: &TreePrefix,
    path: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    match (left, right) {
        (TreePrefix::Bottom, _) | (_, TreePrefix::Bottom) => None,
        (TreePrefix::Var(a), TreePrefix::Var(b)) if a == b => None,
        (TreePrefix::Node(f, xs), TreePrefix::Node(g, ys))
            if f == g && xs.len() == ys.len() =>
        {
            for (i, (x, y)) in xs.iter().zip(ys).enumerate() {
                path.push(i);
                if let Some(found) = first_difference(x, y, path) {
                    return Some(found);
                }
                path.pop();
            }
            None
        }
        _ => Some(path.clone()),
    }
}

/// The number of distinct complete (`⊥`-free) subtrees of a prefix.
///
/// On prefixes of a rational tree this count stays bounded as the depth
/// grows; on properly algebraic trees it keeps growing.
pub fn subtree_census(prefix: &TreePrefix) -> usize {
    fn collect<'a>(prefix: &'a TreePrefix, seen: &mut BTreeSet<&'a TreePrefix>) -> bool {
        match prefix {
            TreePrefix::Bottom => false,
            TreePrefix::Var(_) => {
                seen.insert(prefix);
                true
            }
            TreePrefix::Node(_, children) => {
                let mut complete = true;
                for c in children {
                    complete &= collect(c, seen);
                }
                if complete {
                    seen.insert(prefix);
                }
                complete
            }
        }
    }
    let mut seen = BTreeSet::new();
    collect(prefix, &mut seen);
    seen.len()
}
