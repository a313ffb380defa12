//! Surface syntax for algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' '-'? int)?
//! atom   := int | symbol | 'X(' coords ')' | 'E(' coords ')' | 'Y' | 'D'
//!         | '[' expr ',' expr ']' | '(' expr ')'
//! coords := '-'? int (',' '-'? int)*
//! ```
//!
//! Columns in diagnostics count characters from 1.

use std::fmt;

use expoweyl_core::expolyring::ExpoPoly;
use expoweyl_core::lattice::LatticeVector;
use expoweyl_core::scalars::{Field, FieldScalar};
use expoweyl_core::weylalg::{WeylAlgebra, WeylElement};
use expoweyl_core::wittalg::WittElement;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    /// Column of the first character of this node.
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Symbol(String),
    X(Vec<i64>),
    E(Vec<i64>),
    Y,
    D,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Bracket(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn syntax(column: usize, what: impl fmt::Display) -> CliError {
    CliError::parse(format!("syntax error at column {column}: {what}"))
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '√'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '√'
}

fn lex(text: &str) -> CliResult<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
            continue;
        }
        if is_ident_start(c) {
            let start = i;
            i += 1;
            while i < chars.len() && is_ident_continue(chars[i]) {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            other => return Err(syntax(col, format!("unexpected character '{other}'"))),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> CliResult<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.column(), format!("expected {want}, found {}", self.peek())))
        }
    }

    fn expr(&mut self) -> CliResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let column = lhs.column;
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr { kind: ExprKind::Add(Box::new(lhs), Box::new(rhs)), column };
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr { kind: ExprKind::Sub(Box::new(lhs), Box::new(rhs)), column };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> CliResult<Expr> {
        let mut lhs = self.factor()?;
        loop {
            let column = lhs.column;
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = Expr { kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)), column };
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = Expr { kind: ExprKind::Div(Box::new(lhs), Box::new(rhs)), column };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> CliResult<Expr> {
        if *self.peek() == Tok::Minus {
            let (_, column) = self.bump();
            let inner = self.factor()?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), column });
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = self.signed_int()?;
        let column = base.column;
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), column })
    }

    fn signed_int(&mut self) -> CliResult<i64> {
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        let (tok, col) = self.bump();
        let Tok::Int(n) = tok else {
            return Err(syntax(col, format!("expected an integer, found {tok}")));
        };
        let n = if neg { -n } else { n };
        i64::try_from(&n).map_err(|_| syntax(col, "integer out of range"))
    }

    fn coords(&mut self) -> CliResult<Vec<i64>> {
        self.expect(Tok::LParen)?;
        let mut out = vec![self.signed_int()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.signed_int()?);
        }
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn atom(&mut self) -> CliResult<Expr> {
        let (tok, column) = self.bump();
        let kind = match tok {
            Tok::Int(n) => ExprKind::Int(n),
            Tok::Ident(name) => match name.as_str() {
                "X" => ExprKind::X(self.coords()?),
                "E" => ExprKind::E(self.coords()?),
                "Y" => ExprKind::Y,
                "D" => ExprKind::D,
                _ => ExprKind::Symbol(name),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(Expr { kind: inner.kind, column });
            }
            Tok::LBracket => {
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBracket)?;
                ExprKind::Bracket(Box::new(a), Box::new(b))
            }
            other => return Err(syntax(column, format!("unexpected {other}"))),
        };
        Ok(Expr { kind, column })
    }
}

/// Parses `text` into an expression tree.
pub fn parse(text: &str) -> CliResult<Expr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.column(), format!("unexpected {}", p.peek())));
    }
    Ok(e)
}

fn at(column: usize, e: impl fmt::Display) -> CliError {
    CliError::operation(format!("{e} (at column {column})"))
}

fn lookup(field: &Field, name: &str, column: usize) -> CliResult<FieldScalar> {
    field.symbol(name).map_err(|_| CliError::parse(format!("unknown symbol '{name}' at column {column}")))
}

fn check_arity(want: usize, got: &[i64], column: usize) -> CliResult<LatticeVector> {
    if want != got.len() {
        return Err(CliError::parse(format!(
            "coordinate arity mismatch at column {column}: expected {want}, found {}",
            got.len()
        )));
    }
    Ok(LatticeVector(got.to_vec()))
}

/// Evaluates a generator-free expression to a scalar.
pub fn eval_scalar(e: &Expr, field: &Field) -> CliResult<FieldScalar> {
    let rec = |x: &Expr| eval_scalar(x, field);
    Ok(match &e.kind {
        ExprKind::Int(n) => field.from_rational(BigRational::from_integer(n.clone())),
        ExprKind::Symbol(s) => lookup(field, s, e.column)?,
        ExprKind::Neg(a) => -&rec(a)?,
        ExprKind::Add(a, b) => &rec(a)? + &rec(b)?,
        ExprKind::Sub(a, b) => &rec(a)? - &rec(b)?,
        ExprKind::Mul(a, b) => &rec(a)? * &rec(b)?,
        ExprKind::Div(a, b) => rec(a)?.checked_div(&rec(b)?).map_err(|err| at(b.column, err))?,
        ExprKind::Pow(a, k) => rec(a)?.pow(*k).map_err(|err| at(a.column, err))?,
        ExprKind::X(_) | ExprKind::E(_) | ExprKind::Y | ExprKind::D | ExprKind::Bracket(..) => {
            return Err(CliError::parse(format!("expected a scalar at column {}", e.column)));
        }
    })
}

/// Inverse of a nonzero scalar times a single monomial, the only units.
fn invert(v: &WeylElement) -> Option<WeylElement> {
    let alg = v.algebra();
    if v.d_degree() != Some(0) {
        return None;
    }
    let f = v.part(0);
    let (m, c) = f.terms().iter().next().filter(|_| f.len() == 1)?;
    let inv = alg.ring().term(m.inverse(), c.inv().ok()?);
    Some(alg.from_poly(inv))
}

/// Evaluates an expression in `alg`, multiplying factors left to right.
pub fn eval(e: &Expr, alg: &WeylAlgebra) -> CliResult<WeylElement> {
    let rec = |x: &Expr| eval(x, alg);
    let ring = alg.ring();
    Ok(match &e.kind {
        ExprKind::Int(_) | ExprKind::Symbol(_) => alg.scalar(eval_scalar(e, alg.field())?),
        ExprKind::X(c) => alg.x_pow(&check_arity(ring.rank(), c, e.column)?)?,
        ExprKind::E(c) => alg.exp(&check_arity(ring.e_len(), c, e.column)?)?,
        ExprKind::Y => alg.y_pow(1),
        ExprKind::D => alg.d_pow(1),
        ExprKind::Neg(a) => -&rec(a)?,
        ExprKind::Add(a, b) => &rec(a)? + &rec(b)?,
        ExprKind::Sub(a, b) => &rec(a)? - &rec(b)?,
        ExprKind::Mul(a, b) => rec(a)?.try_mul(&rec(b)?)?,
        ExprKind::Div(a, b) => {
            let d = rec(b)?;
            let inv = invert(&d).ok_or_else(|| at(b.column, format!("cannot divide by {d}")))?;
            rec(a)?.try_mul(&inv)?
        }
        ExprKind::Pow(a, k) => {
            let base = rec(a)?;
            let base = if *k < 0 {
                invert(&base).ok_or_else(|| at(a.column, format!("{base} is not invertible")))?
            } else {
                base
            };
            let mut acc = alg.one();
            for _ in 0..k.unsigned_abs() {
                acc = acc.try_mul(&base)?;
            }
            acc
        }
        ExprKind::Bracket(a, b) => rec(a)?.commutator(&rec(b)?)?,
    })
}

/// Parses and normalizes `text` in `alg`.
pub fn parse_element(text: &str, alg: &WeylAlgebra) -> CliResult<WeylElement> {
    eval(&parse(text)?, alg)
}

/// Parses `text` as a scalar of `field`.
pub fn parse_scalar(text: &str, field: &Field) -> CliResult<FieldScalar> {
    eval_scalar(&parse(text)?, field)
}

/// Parses `text` as a `∂`-free element of the coefficient ring.
pub fn parse_poly(text: &str, alg: &WeylAlgebra) -> CliResult<ExpoPoly> {
    let v = parse_element(text, alg)?;
    match v.d_degree() {
        None => Ok(alg.ring().zero()),
        Some(0) => Ok(v.part(0)),
        Some(_) => Err(CliError::parse(format!("expected an element free of D, found {v}"))),
    }
}

/// Types with a canonical textual form that [`parse_element`] reads back.
pub trait Canonical: fmt::Display {}

impl Canonical for WeylElement {}
impl Canonical for ExpoPoly {}
impl Canonical for WittElement {}
impl Canonical for FieldScalar {}

pub fn print_canonical<T: Canonical>(v: &T) -> String {
    v.to_string()
}
