//! Declarative field-specification files.
//!
//! One assignment per line, `#` starts a comment:
//!
//! ```text
//! # uniform magnetic field along x3 plus a Faraday-consistent pair
//! B3 = x1^2 - 2*x2
//! E2 = x1
//! rho = 0
//! j1 = 3/2*t
//! ```
//!
//! Targets are `E1..E3`, `B1..B3`, `rho`, `j1..j3`; unassigned components are
//! zero. Expressions use `+ - * / ^ ( )`, integer or decimal literals, the
//! imaginary unit `i` and the variables `x1 x2 x3 t`. Division is only by
//! nonzero constants and exponents are non-negative integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::fields::EMField3;
use crate::algebra::{GaussianRational, MultiPoly};
use crate::error::{Error, Result};

/// Parses a field specification into an [`EMField3`].
pub fn parse_field_spec(text: &str) -> Result<EMField3> {
    let mut field = EMField3::default();
    let mut seen = std::collections::HashSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let eq = line.find('=').ok_or_else(|| Error::Parse {
            line: line_no,
            column: 1,
            message: "expected `<component> = <expression>`".into(),
        })?;
        let target = line[..eq].trim();
        let target_col = line.find(target).unwrap_or(0) + 1;
        let slot: &mut MultiPoly = match target {
            "E1" => &mut field.e[0],
            "E2" => &mut field.e[1],
            "E3" => &mut field.e[2],
            "B1" => &mut field.b[0],
            "B2" => &mut field.b[1],
            "B3" => &mut field.b[2],
            "rho" => &mut field.rho,
            "j1" => &mut field.j[0],
            "j2" => &mut field.j[1],
            "j3" => &mut field.j[2],
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    column: target_col,
                    message: format!("unknown component `{other}`"),
                })
            }
        };
        if !seen.insert(target.to_string()) {
            return Err(Error::Parse {
                line: line_no,
                column: target_col,
                message: format!("component `{target}` assigned twice"),
            });
        }
        *slot = parse_expression(&line[eq + 1..], line_no, eq + 2)?;
    }
    Ok(field)
}

/// Parses a single polynomial expression. `line` and `col_offset` locate the
/// text in the enclosing file for error messages.
pub fn parse_expression(src: &str, line: usize, col_offset: usize) -> Result<MultiPoly> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        line,
        col_offset,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col_offset: usize,
}

impl Parser {
    fn err(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col_offset + self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let start = self.pos;
            let rhs = self.unary()?;
            acc = if c == '*' {
                &acc * &rhs
            } else {
                let divisor = rhs.as_constant().ok_or_else(|| {
                    self.pos = start;
                    self.err("division is only allowed by constants".into())
                })?;
                let inv = divisor.inv().ok_or_else(|| {
                    self.pos = start;
                    self.err("division by zero".into())
                })?;
                acc.scale(&inv)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected a non-negative integer exponent".into()));
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let n: u32 = digits
                .parse()
                .map_err(|_| self.err(format!("exponent `{digits}` too large")))?;
            let mut acc = MultiPoly::int(1);
            for _ in 0..n {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let var = |k| MultiPoly::var(k).expect("axis");
                match name.as_str() {
                    "x1" => Ok(var(1)),
                    "x2" => Ok(var(2)),
                    "x3" => Ok(var(3)),
                    "t" => Ok(var(4)),
                    "i" => Ok(MultiPoly::constant(GaussianRational::imag(1, 1))),
                    _ => {
                        self.pos = start;
                        Err(self.err(format!(
                            "unknown variable `{name}` (expected x1, x2, x3, t or i)"
                        )))
                    }
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of expression".into())),
        }
    }

    fn number(&mut self) -> Result<MultiPoly> {
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_ascii_digit() || self.chars[self.pos] == '.') {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let (int_part, frac_part) = match text.split_once('.') {
            Some((a, b)) => (a, b),
            None => (text.as_str(), ""),
        };
        if frac_part.contains('.') || (int_part.is_empty() && frac_part.is_empty()) {
            self.pos = start;
            return Err(self.err(format!("malformed number `{text}`")));
        }
        let digits = format!("{int_part}{frac_part}");
        let num: BigInt = digits.parse().map_err(|_| {
            Error::Parse {
                line: self.line,
                column: self.col_offset + start,
                message: format!("malformed number `{text}`"),
            }
        })?;
        let den: BigInt = Pow::pow(BigInt::from(10), frac_part.len());
        let value = BigRational::new(num, den);
        if value.is_zero() {
            return Ok(MultiPoly::zero());
        }
        Ok(MultiPoly::from(value))
    }
}
