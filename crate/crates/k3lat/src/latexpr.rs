//! Lattice expressions.
//!
//! ```text
//! lattice  := base (';' modifier)*
//! modifier := 'scale=' int
//! base     := 'A1' | 'D4' | 'E7' | 'E8' | 'U' | 'K3'
//!           | 'I(' nat ',' nat ')' | 'span(' int ')'
//!           | 'sum=[' lattice (',' lattice)* ']'
//! ```
//!
//! For example `sum=[span(2),E8,E8]` or `sum=[U;scale=2,U;scale=2]`.

use std::fmt;

use k3lat_core::lattice::Standard;
use k3lat_core::Lattice;

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeExpr {
    Named(Standard),
    Sum(Vec<LatticeExpr>),
    Scaled(Box<LatticeExpr>, i64),
}

impl LatticeExpr {
    pub fn build(&self) -> Result<Lattice> {
        match self {
            LatticeExpr::Named(s) => Ok(Lattice::standard(s)?),
            LatticeExpr::Sum(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| CliError::Lattice("empty sum".into()))?.build()?;
                it.try_fold(first, |acc, p| Ok(acc.direct_sum(&p.build()?)))
            }
            LatticeExpr::Scaled(inner, k) => Ok(inner.build()?.rescale(*k)?),
        }
    }
}

impl fmt::Display for LatticeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeExpr::Named(s) => match s {
                Standard::A1 => f.write_str("A1"),
                Standard::D4 => f.write_str("D4"),
                Standard::E7 => f.write_str("E7"),
                Standard::E8 => f.write_str("E8"),
                Standard::U => f.write_str("U"),
                Standard::K3 => f.write_str("K3"),
                Standard::I(m, n) => write!(f, "I({m},{n})"),
                Standard::ScaledI(m, n, k) => write!(f, "I({m},{n});scale={k}"),
                Standard::Span(k) => write!(f, "span({k})"),
            },
            LatticeExpr::Sum(parts) => {
                f.write_str("sum=[")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str("]")
            }
            LatticeExpr::Scaled(inner, k) => write!(f, "{inner};scale={k}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn error(&self, msg: &str) -> CliError {
        CliError::Lattice(format!("{msg} at offset {}", self.pos))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
            .count();
        let n = rest[..len].parse().map_err(|_| self.error("expected an integer"))?;
        self.pos += len;
        Ok(n)
    }

    fn natural(&mut self) -> Result<usize> {
        let n = self.integer()?;
        usize::try_from(n).map_err(|_| self.error("expected a non-negative integer"))
    }

    fn lattice(&mut self) -> Result<LatticeExpr> {
        let mut expr = self.base()?;
        while self.eat(";") {
            self.expect("scale=")?;
            let k = self.integer()?;
            expr = LatticeExpr::Scaled(Box::new(expr), k);
        }
        Ok(expr)
    }

    fn base(&mut self) -> Result<LatticeExpr> {
        if self.eat("sum=[") {
            let mut parts = vec![self.lattice()?];
            while self.eat(",") {
                parts.push(self.lattice()?);
            }
            self.expect("]")?;
            return Ok(LatticeExpr::Sum(parts));
        }
        if self.eat("span(") {
            let k = self.integer()?;
            self.expect(")")?;
            return Ok(LatticeExpr::Named(Standard::Span(k)));
        }
        if self.eat("I(") {
            let m = self.natural()?;
            self.expect(",")?;
            let n = self.natural()?;
            self.expect(")")?;
            return Ok(LatticeExpr::Named(Standard::I(m, n)));
        }
        for (token, s) in [
            ("A1", Standard::A1),
            ("D4", Standard::D4),
            ("E7", Standard::E7),
            ("E8", Standard::E8),
            ("K3", Standard::K3),
            ("U", Standard::U),
        ] {
            if self.eat(token) {
                return Ok(LatticeExpr::Named(s));
            }
        }
        Err(self.error("expected a lattice name"))
    }
}

pub fn parse_lattice_expr(src: &str) -> Result<LatticeExpr> {
    let mut p = Parser { src, pos: 0 };
    let expr = p.lattice()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.error("trailing input"));
    }
    Ok(expr)
}

/// A lattice expression, or a Gram matrix given as JSON.
pub fn parse_lattice(src: &str) -> Result<Lattice> {
    if src.trim_start().starts_with('[') {
        let gram = crate::jsonio::matrix_from_json(&crate::jsonio::parse(src)?)?;
        return Ok(Lattice::new(gram)?);
    }
    parse_lattice_expr(src)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_modifiers() {
        assert_eq!(parse_lattice("E8").unwrap(), Lattice::e8());
        assert_eq!(parse_lattice("I(2,3);scale=2").unwrap(), Lattice::odd_unimodular(2, 3).rescale(2).unwrap());
        let p0 = parse_lattice("sum=[span(2), D4, D4, D4, D4]").unwrap();
        assert_eq!(p0, k3lat_core::lattice::d4_quartet::p0());
        let u2u2 = parse_lattice("sum=[U;scale=2,U;scale=2]").unwrap();
        assert_eq!(u2u2.rank(), 4);
        assert_eq!(u2u2.det(), 16.into());
        assert_eq!(parse_lattice("span(-4)").unwrap().det(), (-4).into());
        assert_eq!(parse_lattice("[[0,1],[1,0]]").unwrap(), Lattice::u());
    }

    #[test]
    fn display_round_trip() {
        for s in ["K3", "I(2,3);scale=2", "sum=[span(2),E8,E8]", "sum=[U,sum=[E7,A1];scale=-1];scale=3"] {
            assert_eq!(parse_lattice_expr(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "E9", "sum=[]", "sum=[U", "I(2)", "U;scale", "span(x)", "U U", "I(-1,2)", "[[1,2],[3,4]]"] {
            assert!(parse_lattice(s).is_err(), "{s}");
        }
        assert!(parse_lattice("U;scale=0").is_err());
    }
}
