//! The five queries, shared by all document kinds where they make sense.
//!
//! Exit status convention: 0 for positive answers (accept / equivalent /
//! computed), 1 for negative answers (reject / distinguished / no verdict
//! within budget), 2 for input errors of any kind.

use crate::doc::{AnyGrammar, Document};
use crate::text::{parse_poly, parse_state_list, parse_term, parse_word, render_word};
use coalg::kernel::{
    behaviour_at, behaviours_up_to, bisim_decide, equiv_bounded, BisimVerdict, Determinized,
    DisjointUnion, Side, Verdict,
};
use coalg::rps::{prefix_equal, subtree_census, PrefixVerdict};
use coalg::{Configuration, Nfa, Semiring, StateSet, WeightedGrammar};
use std::fmt::Write as _;

/// A successfully executed query: the report text plus whether the answer
/// was positive.
pub struct Report {
    pub text: String,
    pub positive: bool,
}

impl Report {
    fn positive(text: impl Into<String>) -> Self {
        Report {
            text: text.into(),
            positive: true,
        }
    }

    fn negative(text: impl Into<String>) -> Self {
        Report {
            text: text.into(),
            positive: false,
        }
    }
}

pub type CommandResult = Result<Report, String>;

fn no_stack_flag(stack: &Option<String>, kind: &str) -> Result<(), String> {
    if stack.is_some() {
        return Err(format!("--stack applies to stack machines, not to {kind} documents"));
    }
    Ok(())
}

fn parse_start_set(nfa: &Nfa, start: &str) -> Result<StateSet, String> {
    let states = parse_state_list(start)?;
    let set = StateSet::from_states(states);
    nfa.check_state_set(&set).map_err(|e| e.to_string())?;
    Ok(set)
}

fn machine_start(
    machine: &coalg::StackMachine,
    start: &str,
    stack: &Option<String>,
) -> Result<Configuration, String> {
    let Some(stack) = stack else {
        return Err("stack machine queries need --stack <initial stack>".into());
    };
    let symbols = if stack == "eps" {
        Vec::new()
    } else {
        parse_word(stack)?
    };
    let configuration = Configuration::new(start.trim(), symbols);
    // Run on the empty word validates the configuration.
    machine
        .run(&configuration, &[])
        .map_err(|e| e.to_string())?;
    Ok(configuration)
}

// ---------------------------------------------------------------------------
// member
// ---------------------------------------------------------------------------

pub fn member(doc: &Document, start: &str, word: &str, stack: &Option<String>) -> CommandResult {
    let word = parse_word(word)?;
    let accepted = match doc {
        Document::Nfa(nfa) => {
            no_stack_flag(stack, "nfa")?;
            let set = parse_start_set(nfa, start)?;
            behaviour_at(&nfa.determinize(), &set, &word).map_err(|e| e.to_string())?
        }
        Document::Grammar(grammar) => {
            no_stack_flag(stack, "grammar")?;
            match grammar {
                AnyGrammar::Bool(g) => !grammar_coefficient(g, start, &word)?.is_zero(),
                AnyGrammar::Nat(g) => !grammar_coefficient(g, start, &word)?.is_zero(),
                AnyGrammar::Int(g) => !grammar_coefficient(g, start, &word)?.is_zero(),
            }
        }
        Document::Machine(machine) => {
            let configuration = machine_start(machine, start, stack)?;
            machine
                .run(&configuration, &word)
                .map_err(|e| e.to_string())?
                .accepted
        }
        Document::Scheme(_) => return Err("member does not apply to schemes".into()),
    };
    Ok(if accepted {
        Report::positive("accept")
    } else {
        Report::negative("reject")
    })
}

fn grammar_coefficient<S: Semiring>(
    grammar: &WeightedGrammar<S>,
    start: &str,
    word: &[String],
) -> Result<S, String> {
    let start = parse_poly::<S>(start)?;
    grammar.coefficient(&start, word).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// coeff
// ---------------------------------------------------------------------------

pub fn coeff(doc: &Document, start: &str, word: &str) -> CommandResult {
    let word = parse_word(word)?;
    let Document::Grammar(grammar) = doc else {
        return Err("coeff applies to grammar documents only".into());
    };
    let rendered = match grammar {
        AnyGrammar::Bool(g) => grammar_coefficient(g, start, &word)?.to_string(),
        AnyGrammar::Nat(g) => grammar_coefficient(g, start, &word)?.to_string(),
        AnyGrammar::Int(g) => grammar_coefficient(g, start, &word)?.to_string(),
    };
    Ok(Report::positive(rendered))
}

// ---------------------------------------------------------------------------
// equiv
// ---------------------------------------------------------------------------

pub enum EquivMode {
    Bounded(usize),
    Exact { budget: usize },
}

fn report_equiv<C, L: Clone + std::fmt::Display>(
    outcome: BisimVerdict<C, L>,
    budget: usize,
) -> Report {
    match outcome {
        BisimVerdict::Bisimilar(relation) => Report::positive(format!(
            "equivalent (bisimulation of size {})",
            relation.len()
        )),
        BisimVerdict::Distinguished(word) => {
            let rendered: Vec<String> = word.iter().map(|l| l.to_string()).collect();
            Report::negative(format!("distinguished by {}", render_word(&rendered)))
        }
        BisimVerdict::BudgetExceeded => Report::negative(format!(
            "budget exceeded after {budget} canonical state pairs (no verdict)"
        )),
    }
}

fn report_bounded<L: Clone + std::fmt::Display>(verdict: Verdict<L>, depth: usize) -> Report {
    match verdict {
        Verdict::Equivalent => Report::positive(format!("equivalent up to depth {depth}")),
        Verdict::Distinguished(word) => {
            let rendered: Vec<String> = word.iter().map(|l| l.to_string()).collect();
            Report::negative(format!("distinguished by {}", render_word(&rendered)))
        }
    }
}

fn equiv_systems<A, B>(
    left: &A,
    right: &B,
    start_left: A::Carrier,
    start_right: B::Carrier,
    mode: &EquivMode,
) -> Result<Report, String>
where
    A: Determinized,
    B: Determinized<Letter = A::Letter, Output = A::Output>,
    A::Letter: std::fmt::Display,
{
    let union = DisjointUnion::new(left, right).map_err(|e| e.to_string())?;
    let left_start = Side::Left(start_left);
    let right_start = Side::Right(start_right);
    Ok(match mode {
        EquivMode::Bounded(depth) => {
            report_bounded(equiv_bounded(&union, &left_start, &right_start, *depth), *depth)
        }
        EquivMode::Exact { budget } => report_equiv(
            bisim_decide(&union, &left_start, &right_start, *budget),
            *budget,
        ),
    })
}

pub fn equiv(
    doc_a: &Document,
    doc_b: &Document,
    start_a: &str,
    start_b: &str,
    mode: EquivMode,
) -> CommandResult {
    match (doc_a, doc_b) {
        (Document::Nfa(left), Document::Nfa(right)) => {
            let set_a = parse_start_set(left, start_a)?;
            let set_b = parse_start_set(right, start_b)?;
            // Exact equivalence of automata always terminates: the pair
            // space is finite, so use its exact bound as the budget.
            let mode = match mode {
                EquivMode::Exact { .. } => EquivMode::Exact {
                    budget: subset_pair_budget(left, right),
                },
                bounded => bounded,
            };
            equiv_systems(
                &left.determinize(),
                &right.determinize(),
                set_a,
                set_b,
                &mode,
            )
        }
        (Document::Grammar(left), Document::Grammar(right)) => match (left, right) {
            (AnyGrammar::Bool(a), AnyGrammar::Bool(b)) => equiv_grammars(a, b, start_a, start_b, &mode),
            (AnyGrammar::Nat(a), AnyGrammar::Nat(b)) => equiv_grammars(a, b, start_a, start_b, &mode),
            (AnyGrammar::Int(a), AnyGrammar::Int(b)) => equiv_grammars(a, b, start_a, start_b, &mode),
            _ => Err(format!(
                "grammars use different semirings ({} vs {})",
                left.semiring_name(),
                right.semiring_name()
            )),
        },
        (Document::Machine(left), Document::Machine(right)) => {
            let sys_a = left.determinized().map_err(|e| e.to_string())?;
            let sys_b = right.determinized().map_err(|e| e.to_string())?;
            let unit_a = left.unit_action(start_a.trim()).map_err(|e| e.to_string())?;
            let unit_b = right
                .unit_action(start_b.trim())
                .map_err(|e| e.to_string())?;
            equiv_systems(&sys_a, &sys_b, unit_a, unit_b, &mode)
        }
        (Document::Scheme(left), Document::Scheme(right)) => {
            let EquivMode::Bounded(depth) = mode else {
                return Err(
                    "schemes support only depth-bounded comparison; use --depth".into(),
                );
            };
            let root_a = parse_term(start_a, left)?;
            let root_b = parse_term(start_b, right)?;
            match prefix_equal(left, &root_a, right, &root_b, depth)
                .map_err(|e| e.to_string())?
            {
                PrefixVerdict::Equal => {
                    Ok(Report::positive(format!("equal up to depth {depth}")))
                }
                PrefixVerdict::DiffersAt(path) => {
                    let rendered: Vec<String> =
                        path.iter().map(|i| i.to_string()).collect();
                    Ok(Report::negative(format!(
                        "differs at path {}",
                        if rendered.is_empty() {
                            "root".to_string()
                        } else {
                            rendered.join(".")
                        }
                    )))
                }
            }
        }
        _ => Err(format!(
            "cannot compare a {} document with a {} document",
            doc_a.kind(),
            doc_b.kind()
        )),
    }
}

fn subset_pair_budget(left: &Nfa, right: &Nfa) -> usize {
    1usize
        .checked_shl(left.state_count() as u32)
        .and_then(|l| l.checked_mul(1usize.checked_shl(right.state_count() as u32)?))
        .unwrap_or(usize::MAX)
}

fn equiv_grammars<S: Semiring>(
    left: &WeightedGrammar<S>,
    right: &WeightedGrammar<S>,
    start_a: &str,
    start_b: &str,
    mode: &EquivMode,
) -> CommandResult {
    let poly_a = parse_poly::<S>(start_a)?;
    let poly_b = parse_poly::<S>(start_b)?;
    left.validate_polynomial(&poly_a).map_err(|e| e.to_string())?;
    right.validate_polynomial(&poly_b).map_err(|e| e.to_string())?;
    equiv_systems(&left.system(), &right.system(), poly_a, poly_b, mode)
}

// ---------------------------------------------------------------------------
// unfold
// ---------------------------------------------------------------------------

pub fn unfold(doc: &Document, root: &str, depth: usize, census: bool) -> CommandResult {
    let Document::Scheme(scheme) = doc else {
        return Err("unfold applies to scheme documents only".into());
    };
    let root = parse_term(root, scheme)?;
    let prefix = scheme.unfold(&root, depth).map_err(|e| e.to_string())?;
    let mut text = prefix.to_string();
    if census {
        write!(text, "\ndistinct complete subtrees: {}", subtree_census(&prefix)).unwrap();
    }
    Ok(Report::positive(text))
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

pub fn enumerate(
    doc: &Document,
    start: &str,
    max_len: usize,
    stack: &Option<String>,
) -> CommandResult {
    let mut lines = Vec::new();
    match doc {
        Document::Nfa(nfa) => {
            no_stack_flag(stack, "nfa")?;
            let set = parse_start_set(nfa, start)?;
            for (word, accepted) in behaviours_up_to(&nfa.determinize(), &set, max_len) {
                if accepted {
                    lines.push(render_word(&word));
                }
            }
        }
        Document::Grammar(grammar) => {
            no_stack_flag(stack, "grammar")?;
            match grammar {
                AnyGrammar::Bool(g) => {
                    // Boolean grammars list accepted words, like automata.
                    let start = parse_poly(start)?;
                    g.validate_polynomial(&start).map_err(|e| e.to_string())?;
                    for (word, coefficient) in behaviours_up_to(&g.system(), &start, max_len) {
                        if !coefficient.is_zero() {
                            lines.push(render_word(&word));
                        }
                    }
                }
                AnyGrammar::Nat(g) => enumerate_weighted(g, start, max_len, &mut lines)?,
                AnyGrammar::Int(g) => enumerate_weighted(g, start, max_len, &mut lines)?,
            }
        }
        Document::Machine(machine) => {
            let configuration = machine_start(machine, start, stack)?;
            for word in machine
                .language_probe(&configuration, max_len)
                .map_err(|e| e.to_string())?
            {
                lines.push(render_word(&word));
            }
        }
        Document::Scheme(_) => return Err("enumerate does not apply to schemes".into()),
    }
    Ok(Report::positive(lines.join("\n")))
}

fn enumerate_weighted<S: Semiring>(
    grammar: &WeightedGrammar<S>,
    start: &str,
    max_len: usize,
    lines: &mut Vec<String>,
) -> Result<(), String> {
    let start = parse_poly::<S>(start)?;
    grammar
        .validate_polynomial(&start)
        .map_err(|e| e.to_string())?;
    for (word, coefficient) in behaviours_up_to(&grammar.system(), &start, max_len) {
        if !coefficient.is_zero() {
            lines.push(format!("{} {}", render_word(&word), coefficient));
        }
    }
    Ok(())
}
