//! Textual syntax for words, polynomials and terms.
//!
//! - Words are dot-separated letters, `eps` for the empty word: `a.a.b`.
//! - Polynomials are sums of weighted words: `2*A.B + 1*'a'`, `0` for the
//!   zero polynomial. Variables are bare names, terminals are quoted.
//! - Terms are functional: `+(z, φ(×(⋆, z)))`; a bare name is a nullary
//!   symbol if the scheme declares it and a variable otherwise.

use coalg::{Gen, Polynomial, Scheme, Semiring, Term, Word};

/// Splits on `separator`, ignoring separators inside single quotes.
fn split_quoted(text: &str, separator: char) -> Vec<String> {
    let mut parts = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    for c in text.chars() {
        if c == '\'' {
            quoted = !quoted;
            current.push(c);
        } else if c == separator && !quoted {
            parts.push(core::mem::take(&mut current));
        } else {
            current.push(c);
        }
    }
    parts.push(current);
    parts
}

/// Parses a dot-separated word of bare letters; `eps` is the empty word.
pub fn parse_word(text: &str) -> Result<Vec<String>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty word; write `eps` for the empty word".into());
    }
    if text == "eps" {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    for part in text.split('.') {
        if part.is_empty() {
            return Err(format!("empty letter in word `{text}`"));
        }
        letters.push(part.to_string());
    }
    Ok(letters)
}

/// Parses a comma-separated set of state names.
pub fn parse_state_list(text: &str) -> Result<Vec<String>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty state list".into());
    }
    Ok(text
        .split(',')
        .map(|part| part.trim().to_string())
        .filter(|part| !part.is_empty())
        .collect())
}

fn parse_generator(token: &str) -> Result<Gen, String> {
    let token = token.trim();
    if token.is_empty() {
        return Err("empty generator".into());
    }
    if let Some(inner) = token.strip_prefix('\'') {
        let inner = inner
            .strip_suffix('\'')
            .ok_or_else(|| format!("unterminated quote in `{token}`"))?;
        if inner.is_empty() {
            return Err("empty terminal name".into());
        }
        return Ok(Gen::ter(inner));
    }
    if token.contains('\'') {
        return Err(format!("stray quote in `{token}`"));
    }
    Ok(Gen::var(token))
}

fn parse_generator_word(text: &str) -> Result<Word, String> {
    let text = text.trim();
    if text == "eps" {
        return Ok(Word::empty());
    }
    let mut gens = Vec::new();
    for part in split_quoted(text, '.') {
        gens.push(parse_generator(&part)?);
    }
    Ok(gens.into_iter().collect())
}

/// Parses the textual polynomial syntax: `coeff*word + coeff*word + ...`,
/// variables bare, terminals quoted, `eps` for the empty word, `0` for the
/// zero polynomial.
pub fn parse_poly<S: Semiring>(text: &str) -> Result<Polynomial<S>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty polynomial; write `0` for the zero polynomial".into());
    }
    if text == "0" {
        return Ok(Polynomial::zero());
    }
    let mut poly = Polynomial::zero();
    for summand in split_quoted(text, '+') {
        let summand = summand.trim();
        if summand.is_empty() {
            return Err(format!("empty summand in `{text}`"));
        }
        let parts = split_quoted(summand, '*');
        if parts.len() != 2 {
            return Err(format!(
                "expected `coefficient*word`, found `{summand}`"
            ));
        }
        let coefficient = S::parse_coefficient(parts[0].trim())
            .ok_or_else(|| format!("invalid coefficient `{}`", parts[0].trim()))?;
        let word = parse_generator_word(&parts[1])?;
        poly = poly.add(&Polynomial::monomial(coefficient, word));
    }
    Ok(poly)
}

/// Parses a term; bare names that the scheme declares as symbols become
/// nullary applications, other bare names become variables.
pub fn parse_term(text: &str, scheme: &Scheme) -> Result<Term, String> {
    let mut parser = TermParser {
        chars: text.chars().collect(),
        position: 0,
    };
    let term = parser.term(scheme)?;
    parser.skip_space();
    if parser.position != parser.chars.len() {
        return Err(format!(
            "trailing input after term at column {}",
            parser.position + 1
        ));
    }
    Ok(term)
}

struct TermParser {
    chars: Vec<char>,
    position: usize,
}

impl TermParser {
    fn skip_space(&mut self) {
        while self
            .chars
            .get(self.position)
            .is_some_and(|c| c.is_whitespace())
        {
            self.position += 1;
        }
    }

    fn name(&mut self) -> Result<String, String> {
        self.skip_space();
        let start = self.position;
        while self
            .chars
            .get(self.position)
            .is_some_and(|c| !c.is_whitespace() && !matches!(c, '(' | ')' | ','))
        {
            self.position += 1;
        }
        if start == self.position {
            return Err(format!("expected a name at column {}", start + 1));
        }
        Ok(self.chars[start..self.position].iter().collect())
    }

    fn eat(&mut self, expected: char) -> bool {
        self.skip_space();
        if self.chars.get(self.position) == Some(&expected) {
            self.position += 1;
            true
        } else {
            false
        }
    }

    fn term(&mut self, scheme: &Scheme) -> Result<Term, String> {
        let name = self.name()?;
        if self.eat('(') {
            let mut args = Vec::new();
            if !self.eat(')') {
                loop {
                    args.push(self.term(scheme)?);
                    if self.eat(')') {
                        break;
                    }
                    if !self.eat(',') {
                        return Err(format!(
                            "expected `,` or `)` at column {}",
                            self.position + 1
                        ));
                    }
                }
            }
            Ok(Term::app(name, args))
        } else if scheme.is_symbol(&name) {
            Ok(Term::app(name, []))
        } else {
            Ok(Term::var(name))
        }
    }
}

/// Renders a word for reports: dot-separated, `eps` when empty.
pub fn render_word(word: &[String]) -> String {
    if word.is_empty() {
        "eps".to_string()
    } else {
        word.join(".")
    }
}
