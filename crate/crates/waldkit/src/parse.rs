//! The ideal text format.
//!
//! ```text
//! # comment lines start with '#'
//! vars x1 x2 x3        (or `vars 3` for the default names x1..x3)
//! x1*x2
//! x2^2*x3              (powers with '^', factors '*'-separated or juxtaposed)
//! ```
//!
//! Every non-empty, non-comment line after the `vars` line is one monomial
//! generator. Juxtaposed factors like `x1x2` are resolved by greedy longest
//! match against the declared variable names.

use std::fmt;
use std::sync::Arc;

use waldschmidt::{Monomial, MonomialIdeal, VariableContext};

/// A parse failure with its 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn is_comment_or_blank(line: &str) -> bool {
    let trimmed = line.trim_start();
    trimmed.is_empty() || trimmed.starts_with('#')
}

/// Parses the ideal file format into a canonical monomial ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    let mut lines = text.lines().enumerate();
    let (ctx, _vars_line) = loop {
        match lines.next() {
            None => return Err(ParseError::new(1, 1, "missing `vars` line")),
            Some((idx, line)) if is_comment_or_blank(line) => {
                let _ = idx;
            }
            Some((idx, line)) => break (parse_vars_line(idx + 1, line)?, idx),
        }
    };

    let mut generators: Vec<Monomial> = Vec::new();
    let mut last_line = 1;
    for (idx, line) in lines {
        last_line = idx + 1;
        if is_comment_or_blank(line) {
            continue;
        }
        generators.push(parse_monomial_line(&ctx, idx + 1, line)?);
    }
    if generators.is_empty() {
        return Err(ParseError::new(last_line, 1, "no generators: the zero ideal is not representable"));
    }
    MonomialIdeal::new(&ctx, generators)
        .map_err(|e| ParseError::new(last_line, 1, e.to_string()))
}

fn parse_vars_line(line_no: usize, line: &str) -> Result<Arc<VariableContext>, ParseError> {
    let mut tokens = tokens_with_columns(line);
    let (col, head) = tokens
        .next()
        .ok_or_else(|| ParseError::new(line_no, 1, "expected `vars`"))?;
    if head != "vars" {
        return Err(ParseError::new(line_no, col, format!("expected `vars`, found {head:?}")));
    }
    let rest: Vec<(usize, &str)> = tokens.collect();
    if rest.is_empty() {
        return Err(ParseError::new(line_no, line.len() + 1, "expected a count or variable names"));
    }
    if rest.len() == 1 && rest[0].1.chars().all(|c| c.is_ascii_digit()) {
        let (col, token) = rest[0];
        let n: usize = token
            .parse()
            .map_err(|_| ParseError::new(line_no, col, format!("bad variable count {token:?}")))?;
        if n == 0 {
            return Err(ParseError::new(line_no, col, "variable count must be positive"));
        }
        return VariableContext::with_default_names(n)
            .map_err(|e| ParseError::new(line_no, col, e.to_string()));
    }
    let names: Vec<String> = rest.iter().map(|(_, t)| t.to_string()).collect();
    for (col, token) in &rest {
        if names.iter().filter(|n| n == token).count() > 1 {
            return Err(ParseError::new(line_no, *col, format!("duplicate variable {token:?}")));
        }
    }
    VariableContext::new(names).map_err(|e| ParseError::new(line_no, rest[0].0, e.to_string()))
}

/// Whitespace-separated tokens paired with their 1-based starting columns.
fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |token| {
        let offset = token.as_ptr() as usize - line.as_ptr() as usize;
        (offset + 1, token)
    })
}

fn parse_monomial_line(
    ctx: &Arc<VariableContext>,
    line_no: usize,
    line: &str,
) -> Result<Monomial, ParseError> {
    let bytes = line.as_bytes();
    let mut exponents = vec![0u32; ctx.len()];
    let mut pos = 0usize;
    let mut saw_factor = false;
    loop {
        while pos < bytes.len() && (bytes[pos] as char).is_whitespace() {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        if bytes[pos] == b'*' {
            if !saw_factor {
                return Err(ParseError::new(line_no, pos + 1, "unexpected `*` before any factor"));
            }
            pos += 1;
            continue;
        }
        // greedy longest match over the declared names
        let rest = &line[pos..];
        let mut best: Option<usize> = None;
        for i in 0..ctx.len() {
            let name = ctx.name(i);
            if rest.starts_with(name) {
                match best {
                    Some(b) if ctx.name(b).len() >= name.len() => {}
                    _ => best = Some(i),
                }
            }
        }
        let var = best.ok_or_else(|| {
            ParseError::new(line_no, pos + 1, format!("no variable name matches at {rest:?}"))
        })?;
        pos += ctx.name(var).len();
        let mut exp: u32 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let digit_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if digit_start == pos {
                return Err(ParseError::new(line_no, pos + 1, "expected digits after `^`"));
            }
            exp = line[digit_start..pos]
                .parse()
                .map_err(|_| ParseError::new(line_no, digit_start + 1, "exponent too large"))?;
        }
        exponents[var] = exponents[var].checked_add(exp).ok_or_else(|| {
            ParseError::new(line_no, pos, "total exponent overflows")
        })?;
        saw_factor = true;
    }
    if !saw_factor {
        return Err(ParseError::new(line_no, 1, "empty monomial"));
    }
    if exponents.iter().all(|&e| e == 0) {
        return Err(ParseError::new(line_no, 1, "monomial has degree zero"));
    }
    Ok(Monomial::new(ctx, exponents).expect("exponent vector built from context"))
}

/// Renders an ideal in the same file format, one generator per line.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let ctx = ideal.context();
    let mut out = String::from("vars");
    for i in 0..ctx.len() {
        out.push(' ');
        out.push_str(ctx.name(i));
    }
    out.push('\n');
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
