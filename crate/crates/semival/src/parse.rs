//! Polynomial expressions such as `x^15+x^16` or `-135/32*x^83`.
//!
//! Grammar (whitespace ignored, multiplication always explicit):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits | variable | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, and `/` only divides by nonzero
//! constants.

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::{Coeff, Field};
use crate::mpoly::{BiPoly, MPoly};
use crate::poly::Poly;

pub const MAX_EXPONENT: usize = 4096;
pub const MAX_DEGREE: usize = 65536;
pub const MAX_DEPTH: usize = 256;
pub const MAX_LITERAL_DIGITS: usize = 1024;
// term pairs times coefficient words allowed per multiplication
const MAX_MUL_COST: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("exponent above {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("degree above {MAX_DEGREE}")]
    DegreeTooLarge,
    #[error("nesting deeper than {MAX_DEPTH}")]
    TooDeep,
    #[error("integer literal longer than {MAX_LITERAL_DIGITS} digits")]
    LiteralTooLong,
    #[error("expression too large to expand")]
    TooLarge,
    #[error("division by a nonconstant expression")]
    NonConstantDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a positive integer")]
    NotAPositiveInteger,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

type PResult<T> = std::result::Result<T, ParseError>;

fn err<T>(pos: usize, kind: ParseErrorKind) -> PResult<T> {
    Err(ParseError { pos, kind })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
    field: Field,
    vars: &'a [&'a str],
    depth: usize,
}

impl<'a> Parser<'a> {
    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn here(&self) -> usize {
        self.offset + self.pos
    }

    fn fail<T>(&self, kind: ParseErrorKind) -> PResult<T> {
        err(self.here(), kind)
    }

    fn unexpected<T>(&mut self) -> PResult<T> {
        match self.peek() {
            None => self.fail(ParseErrorKind::UnexpectedEnd),
            Some(_) => {
                let rest = std::str::from_utf8(&self.src[self.pos..]).unwrap_or("");
                let c = rest.chars().next().unwrap_or('\u{fffd}');
                self.fail(ParseErrorKind::UnexpectedChar(c))
            }
        }
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.fail(ParseErrorKind::TooDeep);
        }
        Ok(())
    }

    fn expr(&mut self) -> PResult<MPoly> {
        self.enter()?;
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> PResult<MPoly> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.here();
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = self.mul(&acc, &rhs, at)?;
            } else {
                if !rhs.is_constant() {
                    return err(at, ParseErrorKind::NonConstantDivisor);
                }
                let inv = rhs
                    .coeff(&vec![0; self.nvars()])
                    .inv()
                    .map_err(|_| ParseError { pos: at, kind: ParseErrorKind::DivisionByZero })?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<MPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.enter()?;
                let v = self.unary()?;
                self.depth -= 1;
                Ok(-v)
            }
            Some(b'+') => {
                self.pos += 1;
                self.enter()?;
                let v = self.unary()?;
                self.depth -= 1;
                Ok(v)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult<MPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        let at = self.here();
        self.pos += 1;
        if !matches!(self.peek(), Some(b'0'..=b'9')) {
            return self.fail(ParseErrorKind::Expected("a nonnegative integer exponent"));
        }
        let start = self.pos;
        let digits = self.digits()?;
        let k: usize = match digits.parse() {
            Ok(k) if k <= MAX_EXPONENT => k,
            _ => return err(self.offset + start, ParseErrorKind::ExponentTooLarge),
        };
        self.pow(&base, k, at)
    }

    fn digits(&mut self) -> PResult<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos - start > MAX_LITERAL_DIGITS {
            return err(self.offset + start, ParseErrorKind::LiteralTooLong);
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn atom(&mut self) -> PResult<MPoly> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let d = self.digits()?;
                let n: BigInt = d.parse().expect("ascii digits");
                Ok(MPoly::constant(self.field.from_bigint(&n), self.nvars()))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return match self.peek() {
                        None => self.fail(ParseErrorKind::UnexpectedEnd),
                        Some(_) => self.fail(ParseErrorKind::Expected("')'")),
                    };
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MPoly::var(self.field, self.nvars(), i)),
                    None => err(
                        self.offset + start,
                        ParseErrorKind::UnknownVariable(name.to_string()),
                    ),
                }
            }
            _ => self.unexpected(),
        }
    }

    fn mul(&self, a: &MPoly, b: &MPoly, at: usize) -> PResult<MPoly> {
        let da = a.total_degree().unwrap_or(0);
        let db = b.total_degree().unwrap_or(0);
        if da + db > MAX_DEGREE {
            return err(at, ParseErrorKind::DegreeTooLarge);
        }
        let words = 2 + (max_bits(a) + max_bits(b)) / 64;
        if (a.len() as u128) * (b.len() as u128) * words > MAX_MUL_COST {
            return err(at, ParseErrorKind::TooLarge);
        }
        Ok(a * b)
    }

    fn pow(&self, base: &MPoly, k: usize, at: usize) -> PResult<MPoly> {
        if base.total_degree().unwrap_or(0).saturating_mul(k) > MAX_DEGREE {
            return err(at, ParseErrorKind::DegreeTooLarge);
        }
        let mut acc = MPoly::one(self.field, self.nvars());
        let mut sq = base.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq, at)?;
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(&sq, &sq, at)?;
            }
        }
        Ok(acc)
    }
}

fn max_bits(p: &MPoly) -> u128 {
    p.terms()
        .map(|(_, c)| match c {
            Coeff::Rational(r) => (r.numer().bits() + r.denom().bits()) as u128,
            Coeff::Prime { .. } => 64,
        })
        .max()
        .unwrap_or(0)
}

fn parse_in(text: &str, offset: usize, vars: &[&str], field: Field) -> PResult<MPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        offset,
        field,
        vars,
        depth: 0,
    };
    if p.peek().is_none() {
        return p.fail(ParseErrorKind::Empty);
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.unexpected();
    }
    Ok(v)
}

/// Polynomial in the given variables.
pub fn parse_poly_in(text: &str, vars: &[&str], field: Field) -> PResult<MPoly> {
    parse_in(text, 0, vars, field)
}

/// Univariate polynomial in `x` (or `t`; the two may not be mixed).
pub fn parse_univariate(text: &str, field: Field) -> PResult<Poly> {
    parse_univariate_at(text, 0, field)
}

fn parse_univariate_at(text: &str, offset: usize, field: Field) -> PResult<Poly> {
    let var = if uses_identifier(text, "t") && !uses_identifier(text, "x") {
        "t"
    } else {
        "x"
    };
    let p = parse_in(text, offset, &[var], field)?;
    Ok(p.to_poly_in(0).expect("single variable"))
}

fn uses_identifier(text: &str, name: &str) -> bool {
    text.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .any(|w| w == name)
}

/// Polynomial in `x` and `y`.
pub fn parse_bipoly(text: &str, field: Field) -> PResult<BiPoly> {
    parse_in(text, 0, &["x", "y"], field)
}

/// Comma separated univariate polynomials.
pub fn parse_poly_list(text: &str, field: Field) -> PResult<Vec<Poly>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_univariate_at(piece, offset, field)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Comma separated positive integers.
pub fn parse_generators(text: &str) -> PResult<Vec<usize>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let t = piece.trim();
        match t.parse::<usize>() {
            Ok(n) if n > 0 && t.bytes().all(|b| b.is_ascii_digit()) => out.push(n),
            _ if t.is_empty() => {
                return err(offset + lead, ParseErrorKind::Empty);
            }
            _ => return err(offset + lead, ParseErrorKind::NotAPositiveInteger),
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rational_coefficients() {
        let p = parse_univariate("-135/32*x^83-15/16*x^75", Q).unwrap();
        assert_eq!(p.to_string(), "-15/16*x^75-135/32*x^83");
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let p = parse_univariate("-x^2", Q).unwrap();
        assert_eq!(p, Poly::from_int_terms(Q, &[(2, -1)]));
        let p = parse_univariate("(-x)^3 + 2*(x+1)^2", Q).unwrap();
        assert_eq!(p, Poly::from_int_terms(Q, &[(3, -1), (2, 2), (1, 4), (0, 2)]));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_univariate("x^2 + 3x", Q).unwrap_err();
        assert_eq!(e.pos, 7);
        let e = parse_univariate("x + z", Q).unwrap_err();
        assert_eq!(e, ParseError { pos: 4, kind: ParseErrorKind::UnknownVariable("z".into()) });
        let e = parse_poly_list("x^4,x^6,y", Q).unwrap_err();
        assert_eq!(e.pos, 8);
        assert_eq!(parse_univariate("1/(x-x)", Q).unwrap_err().kind, ParseErrorKind::DivisionByZero);
        assert_eq!(parse_univariate("x^5000", Q).unwrap_err().kind, ParseErrorKind::ExponentTooLarge);
        assert_eq!(parse_univariate("", Q).unwrap_err().kind, ParseErrorKind::Empty);
    }

    #[test]
    fn bivariate() {
        let f = parse_bipoly("y^6-2*x^2*y^3-4*x*y^3-y^3+x^4", Q).unwrap();
        assert_eq!(f.to_string(), "y^6-2*x^2*y^3-4*x*y^3-y^3+x^4");
    }

    #[test]
    fn generator_lists() {
        assert_eq!(parse_generators("4, 6,13").unwrap(), vec![4, 6, 13]);
        assert_eq!(parse_generators("4,0").unwrap_err().pos, 2);
    }
}
