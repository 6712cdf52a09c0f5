//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! expr     := ('+'|'-')? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' integer)?
//! base     := rational | 'i' | identifier | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! integer  := ('-')? digit+        (a sign only in exponents)
//! ```
//!
//! Multiplication must be written explicitly. Negative exponents are
//! accepted only when parsing into the Laurent ring, and only on bases that
//! are a single term.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{degree_cap, AnyPoly, LaurentPoly, MPoly};
use crate::scalar::{GaussRat, PiScalar};

const MAX_NESTING: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Poly,
    Laurent,
}

/// An expression together with the ring and ordered variable list it is to
/// be read in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySource {
    pub text: String,
    pub ring: Ring,
    pub variables: Vec<String>,
}

impl PolySource {
    pub fn new(text: impl Into<String>, ring: Ring, variables: &[&str]) -> Self {
        PolySource {
            text: text.into(),
            ring,
            variables: variables.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("`i` is reserved for the imaginary unit")]
    ReservedVariable,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("negative exponent in polynomial ring")]
    NegativeExponent,
    #[error("malformed rational: {0}")]
    MalformedRational(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
    #[error("exponent {0} exceeds the degree cap")]
    ExponentTooLarge(String),
    #[error("parentheses nested too deeply")]
    NestingTooDeep,
    #[error("only a single nonzero term can be raised to a negative power")]
    NonMonomialInverse,
    #[error("{0}")]
    Arithmetic(String),
}

/// A parse failure with its 1-based position in the source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.kind
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("number `{s}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&ch) = chars.peek() {
        let pos = Pos { line, column };
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Int(s), pos));
            continue;
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        } else {
            match ch {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError {
                        line,
                        column,
                        kind: ParseErrorKind::UnexpectedChar(other),
                    })
                }
            }
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

fn is_identifier(s: &str) -> bool {
    let mut it = s.chars();
    matches!(it.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && it.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Checks a declared variable list: identifiers, no `i`, no repeats.
pub fn validate_variables(vars: &[String]) -> Result<(), ParseError> {
    let err = |kind| ParseError {
        line: 0,
        column: 0,
        kind,
    };
    for (k, v) in vars.iter().enumerate() {
        if v == "i" {
            return Err(err(ParseErrorKind::ReservedVariable));
        }
        if !is_identifier(v) {
            return Err(err(ParseErrorKind::InvalidVariable(v.clone())));
        }
        if vars[..k].contains(v) {
            return Err(err(ParseErrorKind::DuplicateVariable(v.clone())));
        }
    }
    Ok(())
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    ring: Ring,
    vars: &'a [String],
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error_at(&self, pos: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: pos.line,
            column: pos.column,
            kind,
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        self.error_at(
            self.pos(),
            ParseErrorKind::Unexpected {
                expected,
                found: self.peek().describe(),
            },
        )
    }

    fn arity(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let start = self.pos();
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            acc = acc
                .try_mul(&rhs)
                .map_err(|e| self.error_at(start, ParseErrorKind::Arithmetic(e.to_string())))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let digits = match self.bump() {
            (Tok::Int(s), _) => s,
            (tok, tpos) => {
                return Err(self.error_at(
                    tpos,
                    ParseErrorKind::Unexpected {
                        expected: "an integer exponent",
                        found: tok.describe(),
                    },
                ))
            }
        };
        let magnitude = digits
            .parse::<u64>()
            .ok()
            .filter(|&k| k <= degree_cap())
            .ok_or_else(|| self.error_at(pos, ParseErrorKind::ExponentTooLarge(digits.clone())))?;
        if negative && magnitude > 0 && self.ring == Ring::Poly {
            return Err(self.error_at(pos, ParseErrorKind::NegativeExponent));
        }
        let k = if negative {
            -(magnitude as i64)
        } else {
            magnitude as i64
        };
        if k < 0 && (base.len() != 1) {
            return Err(self.error_at(pos, ParseErrorKind::NonMonomialInverse));
        }
        base.try_pow_signed(k)
            .map_err(|e| self.error_at(pos, ParseErrorKind::Arithmetic(e.to_string())))
    }

    fn base(&mut self) -> Result<LaurentPoly, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(num) => {
                let mut q = BigRational::from_integer(num.parse::<BigInt>().unwrap());
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        (Tok::Int(den), _) => {
                            let d: BigInt = den.parse().unwrap();
                            if d.is_zero() {
                                return Err(self.error_at(
                                    dpos,
                                    ParseErrorKind::MalformedRational("zero denominator".into()),
                                ));
                            }
                            q /= BigRational::from_integer(d);
                        }
                        (t, _) => {
                            return Err(self.error_at(
                                dpos,
                                ParseErrorKind::MalformedRational(format!(
                                    "expected a positive integer denominator, found {}",
                                    t.describe()
                                )),
                            ))
                        }
                    }
                }
                Ok(LaurentPoly::constant(self.arity(), GaussRat::from_real(q)))
            }
            Tok::Ident(name) => {
                if name == "i" {
                    return Ok(LaurentPoly::constant(self.arity(), GaussRat::i()));
                }
                match self.vars.iter().position(|v| *v == name) {
                    Some(j) => Ok(LaurentPoly::var(self.arity(), j)),
                    None => Err(self.error_at(pos, ParseErrorKind::UnknownIdentifier(name))),
                }
            }
            Tok::LParen => {
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    return Err(self.error_at(pos, ParseErrorKind::NestingTooDeep));
                }
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                self.depth -= 1;
                Ok(inner)
            }
            _ => Err(self.error_at(
                pos,
                ParseErrorKind::Unexpected {
                    expected: "a number, `i`, a variable or `(`",
                    found: tok.describe(),
                },
            )),
        }
    }
}

fn parse_laurent_in(text: &str, ring: Ring, vars: &[String]) -> Result<LaurentPoly, ParseError> {
    validate_variables(vars)?;
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        ring,
        vars,
        depth: 0,
    };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(value)
}

/// Parses `src` into its declared ring.
pub fn parse_poly(src: &PolySource) -> Result<AnyPoly, ParseError> {
    let value = parse_laurent_in(&src.text, src.ring, &src.variables)?;
    Ok(match src.ring {
        Ring::Laurent => AnyPoly::Laurent(value),
        Ring::Poly => AnyPoly::Poly(
            value
                .to_poly()
                .expect("negative exponents are rejected while parsing"),
        ),
    })
}

pub fn parse_mpoly(text: &str, vars: &[&str]) -> Result<MPoly, ParseError> {
    match parse_poly(&PolySource::new(text, Ring::Poly, vars))? {
        AnyPoly::Poly(p) => Ok(p),
        AnyPoly::Laurent(_) => unreachable!(),
    }
}

pub fn parse_laurent(text: &str, vars: &[&str]) -> Result<LaurentPoly, ParseError> {
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    parse_laurent_in(text, Ring::Laurent, &vars)
}

/// Parses an exact scalar such as `-3/2` or `1/2+3*i`.
pub fn parse_scalar(text: &str) -> Result<GaussRat, ParseError> {
    Ok(parse_laurent_in(text, Ring::Poly, &[])?.constant_term())
}

/// Parses a value of ℚ(i) ⊕ ℚ(i)π written with the reserved name `pi`.
pub fn parse_pi_scalar(text: &str) -> Result<PiScalar, ParseError> {
    let p = parse_laurent_in(text, Ring::Poly, &["pi".to_string()])?;
    if p.total_degree().unwrap_or(0) > 1 {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::Arithmetic("not linear in pi".into()),
        });
    }
    Ok(PiScalar::new(p.coeff(&[0]), p.coeff(&[1])))
}
