//! The line-oriented document format.
//!
//! Every document starts with a header line `#kind nfa|grammar|stackmachine|scheme`
//! followed by `key: value` lines; blank lines are ignored. Words are
//! dot-separated (`eps` for the empty word) and all names are
//! whitespace-free tokens. Parsing reports the offending line and column,
//! distinguishing syntax from validation (semantic) errors, and every
//! document can be printed back in canonical form.
//!
//! ```text
//! #kind nfa                     #kind grammar
//! alphabet: a b                 semiring: bool | nat | int
//! states: 0 1                   terminals: a b
//! accepting: 1                  nonterminals: A B
//! trans: 0 a -> 0 1             output: A 1
//! trans: 0 b -> 0               rule: A a -> 1*A.B + 1*'b'
//!                               prod: A -> 1*eps + 1*'a'.B   (alternative)
//!
//! #kind stackmachine            #kind scheme
//! mode: det | nondet            givens: +/2 ×/2 ⋆/0
//! alphabet: a b                 def: φ(z) = +(z, φ(×(⋆, z)))
//! states: q0 q1
//! stack-alphabet: A Z
//! accept: q0 -> Z
//! trans: q0 a : eps -> q0 A
//! trans: q0 b : A -> q1 eps
//! ```
//!
//! Grammar documents use either pre-differentiated `rule:` lines
//! (`rule: X a -> p` gives the derivative of `X` along `a`) or classical
//! `prod: X -> p` productions whose alternatives are `eps` or start with a
//! terminal; the two forms cannot be mixed. Machine `trans:` lines list one
//! stack pattern each: patterns of the maximal length for a `(state,
//! letter)` pair rewrite the top of larger stacks, shorter patterns give
//! the whole result for exactly that stack (deterministic mode requires
//! total tables; non-deterministic clauses fire on any stack they prefix).
//! `accept:` patterns work the same way, with an optional explicit `k=N`
//! lookahead.

use crate::text::{parse_poly, parse_term};
use coalg::stack::{Clause, TransitionTable};
use coalg::{
    BigInt, BigUint, Bool, Gen, Nfa, Polynomial, Scheme, Semiring, Signature, StackAction,
    StackMachine, StackPredicate, StateSet, Term, WeightedGrammar, Word,
};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DocErrorKind {
    Syntax,
    Semantic,
}

/// A diagnostic with position information. Lines and columns are 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DocError {
    pub line: usize,
    pub column: usize,
    pub kind: DocErrorKind,
    pub message: String,
}

impl DocError {
    fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        DocError {
            line,
            column,
            kind: DocErrorKind::Syntax,
            message: message.into(),
        }
    }

    fn semantic(line: usize, message: impl Into<String>) -> Self {
        DocError {
            line,
            column: 1,
            kind: DocErrorKind::Semantic,
            message: message.into(),
        }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            DocErrorKind::Syntax => "syntax error",
            DocErrorKind::Semantic => "validation error",
        };
        write!(
            f,
            "{kind} at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for DocError {}

/// A grammar over one of the built-in semirings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyGrammar {
    Bool(WeightedGrammar<Bool>),
    Nat(WeightedGrammar<BigUint>),
    Int(WeightedGrammar<BigInt>),
}

impl AnyGrammar {
    pub fn semiring_name(&self) -> &'static str {
        match self {
            AnyGrammar::Bool(_) => "bool",
            AnyGrammar::Nat(_) => "nat",
            AnyGrammar::Int(_) => "int",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Document {
    Nfa(Nfa),
    Grammar(AnyGrammar),
    Machine(StackMachine),
    Scheme(Scheme),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Nfa(_) => "nfa",
            Document::Grammar(_) => "grammar",
            Document::Machine(_) => "stackmachine",
            Document::Scheme(_) => "scheme",
        }
    }
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    value: &'a str,
    /// Column where the value starts, for diagnostics.
    value_column: usize,
}

/// Parses a document, running all structural validation.
pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let mut lines = Vec::new();
    let mut kind: Option<(&str, usize)> = None;
    for (index, raw) in text.lines().enumerate() {
        let number = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if kind.is_none() {
            let Some(rest) = trimmed.strip_prefix("#kind") else {
                return Err(DocError::syntax(
                    number,
                    1,
                    "expected a `#kind nfa|grammar|stackmachine|scheme` header",
                ));
            };
            kind = Some((rest.trim(), number));
            continue;
        }
        let Some(colon) = raw.find(':') else {
            return Err(DocError::syntax(number, 1, "expected a `key: value` line"));
        };
        let key = raw[..colon].trim();
        lines.push(Line {
            number,
            key,
            value: raw[colon + 1..].trim(),
            value_column: colon + 2,
        });
    }
    let Some((kind, header_line)) = kind else {
        return Err(DocError::syntax(1, 1, "empty document"));
    };
    match kind {
        "nfa" => parse_nfa(&lines),
        "grammar" => parse_grammar(&lines),
        "stackmachine" => parse_machine(&lines),
        "scheme" => parse_scheme(&lines),
        other => Err(DocError::syntax(
            header_line,
            7,
            format!("unknown document kind `{other}`"),
        )),
    }
}

fn tokens(value: &str) -> Vec<&str> {
    value.split_whitespace().collect()
}

fn single_section<'a>(
    lines: &'a [Line<'a>],
    key: &str,
) -> Result<&'a Line<'a>, DocError> {
    let mut found = None;
    for line in lines {
        if line.key == key {
            if found.is_some() {
                return Err(DocError::syntax(
                    line.number,
                    1,
                    format!("`{key}:` given twice"),
                ));
            }
            found = Some(line);
        }
    }
    found.ok_or_else(|| DocError::syntax(1, 1, format!("missing `{key}:` line")))
}

fn expect_keys(lines: &[Line<'_>], allowed: &[&str]) -> Result<(), DocError> {
    for line in lines {
        if !allowed.contains(&line.key) {
            return Err(DocError::syntax(
                line.number,
                1,
                format!("unknown key `{}`", line.key),
            ));
        }
    }
    Ok(())
}

fn parse_stack_word(token: &str) -> Vec<String> {
    if token == "eps" {
        Vec::new()
    } else {
        token.split('.').map(|s| s.to_string()).collect()
    }
}

// ---------------------------------------------------------------------------
// NFA documents
// ---------------------------------------------------------------------------

fn parse_nfa(lines: &[Line<'_>]) -> Result<Document, DocError> {
    expect_keys(lines, &["alphabet", "states", "accepting", "trans"])?;
    let alphabet = tokens(single_section(lines, "alphabet")?.value);
    let states = tokens(single_section(lines, "states")?.value);
    let accepting = match lines.iter().find(|l| l.key == "accepting") {
        Some(line) => tokens(line.value),
        None => Vec::new(),
    };
    let mut transitions = Vec::new();
    for line in lines.iter().filter(|l| l.key == "trans") {
        let parts = tokens(line.value);
        if parts.len() < 3 || parts[2] != "->" {
            return Err(DocError::syntax(
                line.number,
                line.value_column,
                "expected `trans: <state> <letter> -> <state>*`",
            ));
        }
        let successors =
            StateSet::from_states(parts[3..].iter().map(|s| s.to_string()));
        transitions.push((
            (parts[0].to_string(), parts[1].to_string()),
            successors,
        ));
    }
    let nfa = Nfa::new(
        alphabet.iter().map(|s| s.to_string()),
        states.iter().map(|s| s.to_string()),
        accepting.iter().map(|s| s.to_string()),
        transitions,
    )
    .map_err(|e| DocError::semantic(1, e.to_string()))?;
    Ok(Document::Nfa(nfa))
}

// ---------------------------------------------------------------------------
// Grammar documents
// ---------------------------------------------------------------------------

fn parse_grammar(lines: &[Line<'_>]) -> Result<Document, DocError> {
    expect_keys(
        lines,
        &["semiring", "terminals", "nonterminals", "output", "rule", "prod"],
    )?;
    let semiring = single_section(lines, "semiring")?;
    match semiring.value {
        "bool" => Ok(Document::Grammar(AnyGrammar::Bool(parse_grammar_body::<
            Bool,
        >(lines)?))),
        "nat" => Ok(Document::Grammar(AnyGrammar::Nat(parse_grammar_body::<
            BigUint,
        >(lines)?))),
        "int" => Ok(Document::Grammar(AnyGrammar::Int(parse_grammar_body::<
            BigInt,
        >(lines)?))),
        other => Err(DocError::syntax(
            semiring.number,
            semiring.value_column,
            format!("unknown semiring `{other}` (expected bool, nat or int)"),
        )),
    }
}

fn parse_grammar_body<S: Semiring>(lines: &[Line<'_>]) -> Result<WeightedGrammar<S>, DocError> {
    let terminals = tokens(single_section(lines, "terminals")?.value);
    let nonterminals = tokens(single_section(lines, "nonterminals")?.value);

    let has_rules = lines.iter().any(|l| l.key == "rule" || l.key == "output");
    let has_prods = lines.iter().any(|l| l.key == "prod");
    if has_rules && has_prods {
        let line = lines.iter().find(|l| l.key == "prod").unwrap();
        return Err(DocError::semantic(
            line.number,
            "a grammar uses either `rule:`/`output:` lines or `prod:` lines, not both",
        ));
    }

    let mut outputs: Vec<(String, S)> = Vec::new();
    let mut rules: BTreeMap<(String, String), (usize, Polynomial<S>)> = BTreeMap::new();

    if has_prods {
        // Classical productions: out(x) is the weight of the empty
        // alternative; an alternative starting with terminal `a` becomes
        // part of the derivative along `a`.
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        for line in lines.iter().filter(|l| l.key == "prod") {
            let parts = tokens(line.value);
            if parts.len() < 3 || parts[1] != "->" {
                return Err(DocError::syntax(
                    line.number,
                    line.value_column,
                    "expected `prod: <nonterminal> -> <polynomial>`",
                ));
            }
            let name = parts[0].to_string();
            if let Some(previous) = seen.insert(name.clone(), line.number) {
                return Err(DocError::semantic(
                    line.number,
                    format!("productions for `{name}` already given on line {previous}"),
                ));
            }
            let body = line.value[line.value.find("->").unwrap() + 2..].trim();
            let poly: Polynomial<S> = parse_poly(body)
                .map_err(|e| DocError::syntax(line.number, line.value_column, e))?;
            for (word, coefficient) in poly.terms() {
                match word.gens().next() {
                    None => outputs.push((name.clone(), coefficient.clone())),
                    Some(Gen::Ter(letter)) => {
                        let rest: Word = word.gens().skip(1).cloned().collect();
                        let entry = rules
                            .entry((name.clone(), letter.clone()))
                            .or_insert_with(|| (line.number, Polynomial::zero()));
                        entry.1 = entry
                            .1
                            .add(&Polynomial::monomial(coefficient.clone(), rest));
                    }
                    Some(Gen::Var(_)) => {
                        return Err(DocError::semantic(
                            line.number,
                            format!(
                                "production alternative `{word}` of `{name}` must be eps or start with a terminal"
                            ),
                        ));
                    }
                }
            }
        }
    } else {
        for line in lines.iter().filter(|l| l.key == "output") {
            let parts = tokens(line.value);
            if parts.len() != 2 {
                return Err(DocError::syntax(
                    line.number,
                    line.value_column,
                    "expected `output: <nonterminal> <coefficient>`",
                ));
            }
            let weight = S::parse_coefficient(parts[1]).ok_or_else(|| {
                DocError::syntax(
                    line.number,
                    line.value_column,
                    format!("invalid coefficient `{}`", parts[1]),
                )
            })?;
            outputs.push((parts[0].to_string(), weight));
        }
        for line in lines.iter().filter(|l| l.key == "rule") {
            let parts = tokens(line.value);
            if parts.len() < 4 || parts[2] != "->" {
                return Err(DocError::syntax(
                    line.number,
                    line.value_column,
                    "expected `rule: <nonterminal> <letter> -> <polynomial>`",
                ));
            }
            let key = (parts[0].to_string(), parts[1].to_string());
            if let Some((previous, _)) = rules.get(&key) {
                return Err(DocError::semantic(
                    line.number,
                    format!(
                        "rule for `{} {}` already given on line {previous}",
                        key.0, key.1
                    ),
                ));
            }
            let body = line.value[line.value.find("->").unwrap() + 2..].trim();
            let poly: Polynomial<S> = parse_poly(body)
                .map_err(|e| DocError::syntax(line.number, line.value_column, e))?;
            rules.insert(key, (line.number, poly));
        }
    }

    WeightedGrammar::new(
        terminals.iter().map(|s| s.to_string()),
        nonterminals.iter().map(|s| s.to_string()),
        outputs,
        rules.into_iter().map(|(key, (_, poly))| (key, poly)),
    )
    .map_err(|e| DocError::semantic(1, e.to_string()))
}

// ---------------------------------------------------------------------------
// Stack machine documents
// ---------------------------------------------------------------------------

fn parse_machine(lines: &[Line<'_>]) -> Result<Document, DocError> {
    expect_keys(
        lines,
        &["mode", "alphabet", "states", "stack-alphabet", "accept", "trans"],
    )?;
    let mode = single_section(lines, "mode")?;
    let deterministic = match mode.value {
        "det" => true,
        "nondet" => false,
        other => {
            return Err(DocError::syntax(
                mode.number,
                mode.value_column,
                format!("unknown mode `{other}` (expected det or nondet)"),
            ))
        }
    };
    let alphabet = tokens(single_section(lines, "alphabet")?.value);
    let states = tokens(single_section(lines, "states")?.value);
    let gamma: Vec<String> = {
        let mut symbols: Vec<String> = tokens(single_section(lines, "stack-alphabet")?.value)
            .iter()
            .map(|s| s.to_string())
            .collect();
        symbols.sort();
        symbols.dedup();
        symbols
    };

    // Accept lines: `accept: <state> [k=<n>] -> <pattern>*`.
    let mut outputs: Vec<(String, StackPredicate)> = Vec::new();
    for line in lines.iter().filter(|l| l.key == "accept") {
        let parts = tokens(line.value);
        let arrow = parts.iter().position(|t| *t == "->");
        let Some(arrow) = arrow else {
            return Err(DocError::syntax(
                line.number,
                line.value_column,
                "expected `accept: <state> [k=<n>] -> <pattern>*`",
            ));
        };
        if arrow == 0 {
            return Err(DocError::syntax(
                line.number,
                line.value_column,
                "missing state before `->`",
            ));
        }
        let state = parts[0].to_string();
        let mut explicit_k = None;
        for t in &parts[1..arrow] {
            if let Some(n) = t.strip_prefix("k=") {
                explicit_k = Some(n.parse::<usize>().map_err(|_| {
                    DocError::syntax(line.number, line.value_column, "invalid lookahead")
                })?);
            } else {
                return Err(DocError::syntax(
                    line.number,
                    line.value_column,
                    format!("unexpected token `{t}` before `->`"),
                ));
            }
        }
        let patterns: Vec<Vec<String>> =
            parts[arrow + 1..].iter().map(|t| parse_stack_word(t)).collect();
        let lookahead = explicit_k
            .unwrap_or_else(|| patterns.iter().map(|p| p.len()).max().unwrap_or(0));
        let accept_short: Vec<Vec<String>> = patterns
            .iter()
            .filter(|p| p.len() < lookahead)
            .cloned()
            .collect();
        let accept_k: Vec<Vec<String>> = patterns
            .iter()
            .filter(|p| p.len() >= lookahead)
            .cloned()
            .collect();
        let predicate = StackPredicate::new(gamma.clone(), lookahead, accept_short, accept_k)
            .map_err(|e| DocError::semantic(line.number, e.to_string()))?;
        outputs.push((state, predicate));
    }

    // Transition lines: `trans: <state> <letter> : <pattern> -> <state> <replacement>`.
    struct Entry {
        line: usize,
        pattern: Vec<String>,
        next: String,
        replacement: Vec<String>,
    }
    let mut grouped: BTreeMap<(String, String), Vec<Entry>> = BTreeMap::new();
    for line in lines.iter().filter(|l| l.key == "trans") {
        let parts = tokens(line.value);
        if parts.len() != 7 || parts[2] != ":" || parts[4] != "->" {
            return Err(DocError::syntax(
                line.number,
                line.value_column,
                "expected `trans: <state> <letter> : <pattern> -> <state> <replacement>`",
            ));
        }
        grouped
            .entry((parts[0].to_string(), parts[1].to_string()))
            .or_default()
            .push(Entry {
                line: line.number,
                pattern: parse_stack_word(parts[3]),
                next: parts[5].to_string(),
                replacement: parse_stack_word(parts[6]),
            });
    }

    let table = if deterministic {
        let mut actions = BTreeMap::new();
        for ((state, letter), entries) in grouped {
            let first_line = entries.first().map(|e| e.line).unwrap_or(1);
            let action = StackAction::from_entries(
                gamma.clone(),
                entries
                    .into_iter()
                    .map(|e| (e.pattern, e.next, e.replacement)),
            )
            .map_err(|e| {
                DocError::semantic(
                    first_line,
                    format!("action for `{state} {letter}`: {e}"),
                )
            })?;
            actions.insert((state, letter), action);
        }
        TransitionTable::Deterministic(actions)
    } else {
        let mut clauses = BTreeMap::new();
        for ((state, letter), entries) in grouped {
            clauses.insert(
                (state, letter),
                entries
                    .into_iter()
                    .map(|e| Clause {
                        pattern: e.pattern,
                        next: e.next,
                        replacement: e.replacement,
                    })
                    .collect::<Vec<_>>(),
            );
        }
        TransitionTable::Nondeterministic(clauses)
    };

    let machine = StackMachine::new(
        states.iter().map(|s| s.to_string()),
        alphabet.iter().map(|s| s.to_string()),
        gamma,
        outputs,
        table,
    )
    .map_err(|e| DocError::semantic(1, e.to_string()))?;
    Ok(Document::Machine(machine))
}

// ---------------------------------------------------------------------------
// Scheme documents
// ---------------------------------------------------------------------------

fn parse_scheme(lines: &[Line<'_>]) -> Result<Document, DocError> {
    expect_keys(lines, &["givens", "def"])?;
    let givens_line = single_section(lines, "givens")?;
    let mut givens = Vec::new();
    for token in tokens(givens_line.value) {
        let Some((name, arity)) = token.rsplit_once('/') else {
            return Err(DocError::syntax(
                givens_line.number,
                givens_line.value_column,
                format!("expected `name/arity`, found `{token}`"),
            ));
        };
        let arity: usize = arity.parse().map_err(|_| {
            DocError::syntax(
                givens_line.number,
                givens_line.value_column,
                format!("invalid arity in `{token}`"),
            )
        })?;
        givens.push((name.to_string(), arity));
    }
    let signature =
        Signature::new(givens).map_err(|e| DocError::semantic(givens_line.number, e.to_string()))?;

    // Headers first so bodies can mention later definitions.
    struct RawDef<'a> {
        line: usize,
        name: String,
        params: Vec<String>,
        body_text: &'a str,
    }
    let mut raw_defs: Vec<RawDef<'_>> = Vec::new();
    for line in lines.iter().filter(|l| l.key == "def") {
        let Some((head, body)) = line.value.split_once('=') else {
            return Err(DocError::syntax(
                line.number,
                line.value_column,
                "expected `def: name(params) = term`",
            ));
        };
        let head = head.trim();
        let (name, params) = match head.split_once('(') {
            None => (head.to_string(), Vec::new()),
            Some((name, rest)) => {
                let Some(inner) = rest.trim().strip_suffix(')') else {
                    return Err(DocError::syntax(
                        line.number,
                        line.value_column,
                        "unterminated parameter list",
                    ));
                };
                let params: Vec<String> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner.split(',').map(|p| p.trim().to_string()).collect()
                };
                (name.trim().to_string(), params)
            }
        };
        raw_defs.push(RawDef {
            line: line.number,
            name,
            params,
            body_text: body.trim(),
        });
    }

    // A throwaway scheme carrying only the symbol table, for term parsing.
    let header_scheme = Scheme::new(
        signature.clone(),
        raw_defs
            .iter()
            .map(|d| (d.name.clone(), d.params.clone(), Term::var("_"))),
    );
    // Placeholder bodies may be rejected (e.g. duplicate names); map those
    // errors to the right line.
    let header_scheme = match header_scheme {
        Ok(s) => s,
        Err(e) => {
            let line = raw_defs.first().map(|d| d.line).unwrap_or(1);
            return Err(DocError::semantic(line, e.to_string()));
        }
    };

    let mut definitions = Vec::new();
    for def in &raw_defs {
        let body = parse_term(def.body_text, &header_scheme)
            .map_err(|e| DocError::syntax(def.line, 1, e))?;
        definitions.push((def.name.clone(), def.params.clone(), body));
    }
    let scheme = Scheme::new(signature, definitions).map_err(|e| {
        // Attach guardedness/validation errors to the offending definition.
        let line = match &e {
            coalg::SchemeError::Unguarded { path } => raw_defs
                .iter()
                .find(|d| Some(&d.name) == path.first())
                .map(|d| d.line)
                .unwrap_or(1),
            _ => raw_defs.first().map(|d| d.line).unwrap_or(1),
        };
        DocError::semantic(line, e.to_string())
    })?;
    Ok(Document::Scheme(scheme))
}

// ---------------------------------------------------------------------------
// Canonical rendering
// ---------------------------------------------------------------------------

fn render_stack_word(word: &[String]) -> String {
    if word.is_empty() {
        "eps".to_string()
    } else {
        word.join(".")
    }
}

/// Prints a document in canonical form; parsing the output reproduces the
/// document exactly.
pub fn render_document(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Nfa(nfa) => {
            out.push_str("#kind nfa\n");
            out.push_str(&format!("alphabet: {}\n", nfa.alphabet().join(" ")));
            let states: Vec<String> = nfa.states().cloned().collect();
            out.push_str(&format!("states: {}\n", states.join(" ")));
            let accepting: Vec<String> = nfa
                .states()
                .filter(|s| nfa.is_accepting(s))
                .cloned()
                .collect();
            out.push_str(&format!("accepting: {}\n", accepting.join(" ")));
            for state in nfa.states() {
                for letter in nfa.alphabet() {
                    let successors = nfa.successors(state, letter);
                    if successors.is_empty() {
                        continue;
                    }
                    let names: Vec<String> = successors.iter().cloned().collect();
                    out.push_str(&format!(
                        "trans: {state} {letter} -> {}\n",
                        names.join(" ")
                    ));
                }
            }
        }
        Document::Grammar(grammar) => match grammar {
            AnyGrammar::Bool(g) => render_grammar(&mut out, "bool", g),
            AnyGrammar::Nat(g) => render_grammar(&mut out, "nat", g),
            AnyGrammar::Int(g) => render_grammar(&mut out, "int", g),
        },
        Document::Machine(machine) => {
            out.push_str("#kind stackmachine\n");
            out.push_str(&format!(
                "mode: {}\n",
                if machine.is_deterministic() { "det" } else { "nondet" }
            ));
            out.push_str(&format!("alphabet: {}\n", machine.alphabet().join(" ")));
            let states: Vec<String> = machine.states().cloned().collect();
            out.push_str(&format!("states: {}\n", states.join(" ")));
            out.push_str(&format!("stack-alphabet: {}\n", machine.gamma().join(" ")));
            for state in machine.states() {
                let predicate = machine.output(state);
                let (lookahead, short, k) = predicate.tables();
                let mut patterns: Vec<String> =
                    short.iter().map(|p| render_stack_word(p)).collect();
                patterns.extend(k.iter().map(|p| render_stack_word(p)));
                if patterns.is_empty() && lookahead == 0 {
                    continue; // never-accepting states need no line
                }
                out.push_str(&format!(
                    "accept: {state} k={lookahead} -> {}\n",
                    patterns.join(" ")
                ));
            }
            match machine.table() {
                TransitionTable::Deterministic(actions) => {
                    for ((state, letter), action) in actions {
                        let (_, short, k) = action.tables();
                        for (pattern, (next, replacement)) in short.iter().chain(k.iter()) {
                            out.push_str(&format!(
                                "trans: {state} {letter} : {} -> {next} {}\n",
                                render_stack_word(pattern),
                                render_stack_word(replacement)
                            ));
                        }
                    }
                }
                TransitionTable::Nondeterministic(clauses) => {
                    for ((state, letter), alternatives) in clauses {
                        for clause in alternatives {
                            out.push_str(&format!(
                                "trans: {state} {letter} : {} -> {} {}\n",
                                render_stack_word(&clause.pattern),
                                clause.next,
                                render_stack_word(&clause.replacement)
                            ));
                        }
                    }
                }
            }
        }
        Document::Scheme(scheme) => {
            out.push_str("#kind scheme\n");
            let symbols: Vec<String> = scheme
                .givens()
                .symbols()
                .map(|(name, arity)| format!("{name}/{arity}"))
                .collect();
            out.push_str(&format!("givens: {}\n", symbols.join(" ")));
            for (name, params, body) in scheme.definitions() {
                out.push_str(&format!("def: {name}({}) = {body}\n", params.join(", ")));
            }
        }
    }
    out
}

fn render_grammar<S: Semiring>(out: &mut String, tag: &str, grammar: &WeightedGrammar<S>) {
    out.push_str("#kind grammar\n");
    out.push_str(&format!("semiring: {tag}\n"));
    out.push_str(&format!("terminals: {}\n", grammar.terminals().join(" ")));
    let nonterminals: Vec<String> = grammar.nonterminals().cloned().collect();
    out.push_str(&format!("nonterminals: {}\n", nonterminals.join(" ")));
    for n in grammar.nonterminals() {
        let weight = grammar.output(n);
        if !weight.is_zero() {
            out.push_str(&format!("output: {n} {weight}\n"));
        }
    }
    for n in grammar.nonterminals() {
        for letter in grammar.terminals() {
            let poly = grammar.rule(n, letter);
            if !poly.is_zero() {
                out.push_str(&format!("rule: {n} {letter} -> {poly}\n"));
            }
        }
    }
}
