//! Text form of polynomials.
//!
//! ```text
//! poly  := sign? term (('+' | '-') term)*
//! term  := coeff ('*' var ('^' nat)?)*  |  var ('^' nat)? ('*' var ('^' nat)?)*
//! coeff := nat ('/' posint)?
//! ```
//!
//! The printer in `k3lat_core` emits the first form with a coefficient on
//! every term; the parser also takes bare monomials such as `x^2*y`.

use std::collections::BTreeMap;

use k3lat_core::{BigInt, BigRational, MultiPoly, Vars};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII slice")
    }

    fn natural(&mut self) -> Result<BigInt, ParseError> {
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.error("expected digits");
        }
        Ok(digits.parse().expect("decimal digits"))
    }

    fn identifier(&mut self) -> &str {
        self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_')
    }
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

/// Parses `text` as a polynomial over `vars`.
pub fn parse_poly(text: &str, vars: &Vars) -> Result<MultiPoly, ParseError> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    cur.skip_ws();
    let mut negative = match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            true
        }
        Some(b'+') => {
            cur.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        cur.skip_ws();
        let (coeff, exps) = parse_term(&mut cur, vars)?;
        let entry = terms.entry(exps).or_insert_with(BigRational::zero);
        if negative {
            *entry -= coeff;
        } else {
            *entry += coeff;
        }
        cur.skip_ws();
        negative = match cur.peek() {
            None => break,
            Some(b'+') => false,
            Some(b'-') => true,
            Some(_) => return cur.error("expected `+` or `-`"),
        };
        cur.pos += 1;
    }
    Ok(MultiPoly::from_terms(vars, terms).expect("exponent vectors match the universe"))
}

fn parse_term(cur: &mut Cursor<'_>, vars: &Vars) -> Result<(BigRational, Vec<u32>), ParseError> {
    let mut exps = vec![0u32; vars.len()];
    let coeff = match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let n = cur.natural()?;
            if cur.peek() == Some(b'/') {
                cur.pos += 1;
                let d = cur.natural()?;
                if d.is_zero() {
                    return cur.error("zero denominator");
                }
                BigRational::new(n, d)
            } else {
                BigRational::from_integer(n)
            }
        }
        Some(c) if is_ident_start(c) => {
            parse_factor(cur, vars, &mut exps)?;
            BigRational::one()
        }
        _ => return cur.error("expected a coefficient or a variable"),
    };
    loop {
        let save = cur.pos;
        cur.skip_ws();
        if cur.peek() != Some(b'*') {
            cur.pos = save;
            break;
        }
        cur.pos += 1;
        cur.skip_ws();
        parse_factor(cur, vars, &mut exps)?;
    }
    Ok((coeff, exps))
}

fn parse_factor(cur: &mut Cursor<'_>, vars: &Vars, exps: &mut [u32]) -> Result<(), ParseError> {
    let start = cur.pos;
    if !cur.peek().is_some_and(is_ident_start) {
        return cur.error("expected a variable");
    }
    let name = cur.identifier().to_owned();
    let Ok(i) = vars.index_of(&name) else {
        return Err(ParseError { offset: start, message: format!("unknown variable `{name}`") });
    };
    let mut e = 1u32;
    if cur.peek() == Some(b'^') {
        cur.pos += 1;
        let at = cur.pos;
        let n = cur.natural()?;
        e = u32::try_from(&n).map_err(|_| ParseError { offset: at, message: "exponent too large".into() })?;
    }
    exps[i] = exps[i]
        .checked_add(e)
        .ok_or_else(|| ParseError { offset: start, message: "exponent too large".into() })?;
    Ok(())
}

/// Identifiers of `text` in order of first appearance.
pub fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    while let Some(c) = cur.peek() {
        if is_ident_start(c) {
            let name = cur.identifier();
            if !out.iter().any(|o| o == name) {
                out.push(name.to_owned());
            }
        } else if c.is_ascii_digit() {
            cur.take_while(|c| c.is_ascii_digit());
        } else {
            cur.pos += 1;
        }
    }
    out
}
