//! Surface syntax for symmetric-function expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := INT factor | INT | primary ('o' primary)*
//! primary := atom | '(' expr ')'
//! atom    := ('s' | 'p' | 'h') '[' INT (',' INT)* ']'
//! ```
//!
//! `o` is plethysm and associates to the right. Every expression must be
//! homogeneous; its degree is known after parsing.

use std::fmt;

use plethyrs_core::alphabet::{eval_at, eval_schur_at, BivariatePoly};
use plethyrs_core::plethysm::{iterated, plethysm, PlethysmExpression};
use plethyrs_core::symfunc::{schur_to_p_with, CharacterMemo};
use plethyrs_core::{BigInt, BigRational, Error, PSeries, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    Power,
    Complete,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Schur => 's',
            Basis::Power => 'p',
            Basis::Complete => 'h',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expression {
    Atom(Basis, Partition),
    Const(BigInt),
    Scale(BigInt, Box<Expression>),
    Compose(Box<Expression>, Box<Expression>),
    Product(Box<Expression>, Box<Expression>),
    Sum(Box<Expression>, Box<Expression>),
    Difference(Box<Expression>, Box<Expression>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("parts must be positive")]
    ZeroPart,
    #[error("index {0:?} is not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("integer too large")]
    Overflow,
    #[error("degrees {left} and {right} differ")]
    NotHomogeneous { left: u32, right: u32 },
    #[error("plethysm with a degree-0 inner function")]
    ConstantInner,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Letter(char),
    Int(BigInt),
    Sym(char),
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Letter(c) | Token::Sym(c) => write!(f, "{c:?}"),
            Token::Int(n) => write!(f, "integer {n}"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = text[i..].chars().next().expect("in bounds");
        match c {
            c if c.is_whitespace() => i += c.len_utf8(),
            's' | 'p' | 'h' | 'o' => {
                out.push((Token::Letter(c), i));
                i += 1;
            }
            '[' | ']' | ',' | '(' | ')' | '+' | '-' | '*' => {
                out.push((Token::Sym(c), i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Token::Int(n), start));
            }
            other => {
                return Err(ParseError { offset: i, kind: ParseErrorKind::UnexpectedChar(other) })
            }
        }
    }
    out.push((Token::End, text.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

type Parsed = (Expression, u32);

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind: ParseErrorKind::Unexpected { expected, found: self.peek().to_string() },
        }
    }

    fn expect_sym(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == Token::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> Result<Parsed, ParseError> {
        let (mut lhs, degree) = self.term()?;
        loop {
            let op = match self.peek() {
                Token::Sym('+') => '+',
                Token::Sym('-') => '-',
                _ => return Ok((lhs, degree)),
            };
            let (_, at) = self.bump();
            let (rhs, d) = self.term()?;
            if d != degree {
                return Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::NotHomogeneous { left: degree, right: d },
                });
            }
            lhs = if op == '+' {
                Expression::Sum(Box::new(lhs), Box::new(rhs))
            } else {
                Expression::Difference(Box::new(lhs), Box::new(rhs))
            };
        }
    }

    fn term(&mut self) -> Result<Parsed, ParseError> {
        let (mut lhs, mut degree) = self.factor()?;
        while *self.peek() == Token::Sym('*') {
            self.bump();
            let (rhs, d) = self.factor()?;
            lhs = Expression::Product(Box::new(lhs), Box::new(rhs));
            degree += d;
        }
        Ok((lhs, degree))
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Token::Int(_) | Token::Sym('(') | Token::Letter('s' | 'p' | 'h')
        )
    }

    fn factor(&mut self) -> Result<Parsed, ParseError> {
        if let Token::Int(n) = self.peek().clone() {
            self.bump();
            if self.starts_factor() {
                let (inner, d) = self.factor()?;
                return Ok((Expression::Scale(n, Box::new(inner)), d));
            }
            return Ok((Expression::Const(n), 0));
        }
        self.factor_chain()
    }

    /// `primary ('o' primary)*`, nested to the right.
    fn factor_chain(&mut self) -> Result<Parsed, ParseError> {
        let (outer, d_outer) = self.primary()?;
        if *self.peek() != Token::Letter('o') {
            return Ok((outer, d_outer));
        }
        let (_, at) = self.bump();
        let (inner, d_inner) = self.factor_chain()?;
        if d_inner == 0 {
            return Err(ParseError { offset: at, kind: ParseErrorKind::ConstantInner });
        }
        Ok((Expression::Compose(Box::new(outer), Box::new(inner)), d_outer * d_inner))
    }

    fn primary(&mut self) -> Result<Parsed, ParseError> {
        match self.peek().clone() {
            Token::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect_sym(')', "')'")?;
                Ok(inner)
            }
            Token::Letter(c @ ('s' | 'p' | 'h')) => {
                self.bump();
                let basis = match c {
                    's' => Basis::Schur,
                    'p' => Basis::Power,
                    _ => Basis::Complete,
                };
                let start = self.offset();
                self.expect_sym('[', "'['")?;
                let mut parts = vec![self.part()?];
                while *self.peek() == Token::Sym(',') {
                    self.bump();
                    parts.push(self.part()?);
                }
                self.expect_sym(']', "']' or ','")?;
                let lam = Partition::new(parts.clone()).map_err(|_| ParseError {
                    offset: start,
                    kind: ParseErrorKind::NotWeaklyDecreasing(parts),
                })?;
                let d = lam.weight();
                Ok((Expression::Atom(basis, lam), d))
            }
            _ => Err(self.unexpected("an atom or '('")),
        }
    }

    fn part(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        let Token::Int(n) = self.peek().clone() else {
            return Err(self.unexpected("a part"));
        };
        self.bump();
        let n = u32::try_from(n).map_err(|_| ParseError { offset: at, kind: ParseErrorKind::Overflow })?;
        if n == 0 {
            return Err(ParseError { offset: at, kind: ParseErrorKind::ZeroPart });
        }
        Ok(n)
    }
}

/// Parses and type-checks an expression.
pub fn parse(text: &str) -> Result<TypedExpression, ParseError> {
    let mut parser = Parser { tokens: tokenize(text)?, pos: 0 };
    let (expr, degree) = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(TypedExpression { expr, degree })
}

/// A parsed expression with its degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypedExpression {
    pub expr: Expression,
    pub degree: u32,
}

impl TypedExpression {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The plethysm chain when the expression is a composition of Schur
    /// atoms only.
    pub fn as_chain(&self) -> Option<PlethysmExpression> {
        let mut chain = Vec::new();
        collect_chain(&self.expr, &mut chain).then_some(())?;
        PlethysmExpression::new(chain).ok()
    }

    pub fn to_pseries(&self, memo: &impl CharacterMemo) -> Result<PSeries, Error> {
        match self.as_chain() {
            Some(chain) => iterated(memo, &chain),
            None => to_pseries(memo, &self.expr),
        }
    }

    /// `f[A]` by plethystic substitution into the alphabet `A`.
    pub fn eval_alphabet(
        &self,
        memo: &impl CharacterMemo,
        alphabet: &BivariatePoly,
    ) -> Result<BivariatePoly, Error> {
        eval_alphabet(memo, &self.expr, alphabet)
    }
}

impl fmt::Display for TypedExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expr.fmt(f)
    }
}

fn collect_chain(e: &Expression, out: &mut Vec<Partition>) -> bool {
    match e {
        Expression::Atom(Basis::Schur, lam) => {
            out.push(lam.clone());
            true
        }
        Expression::Compose(f, g) => collect_chain(f, out) && collect_chain(g, out),
        _ => false,
    }
}

fn complete(memo: &impl CharacterMemo, lam: &Partition) -> PSeries {
    lam.parts()
        .iter()
        .fold(PSeries::one(), |acc, &n| acc.multiply(&schur_to_p_with(memo, &Partition::row(n))))
}

fn to_pseries(memo: &impl CharacterMemo, e: &Expression) -> Result<PSeries, Error> {
    Ok(match e {
        Expression::Atom(Basis::Schur, lam) => schur_to_p_with(memo, lam),
        Expression::Atom(Basis::Power, lam) => PSeries::p(lam.clone()),
        Expression::Atom(Basis::Complete, lam) => complete(memo, lam),
        Expression::Const(n) => PSeries::one().scale(&BigRational::from_integer(n.clone())),
        Expression::Scale(n, inner) => {
            to_pseries(memo, inner)?.scale(&BigRational::from_integer(n.clone()))
        }
        Expression::Compose(f, g) => plethysm(&to_pseries(memo, f)?, &to_pseries(memo, g)?)?,
        Expression::Product(f, g) => to_pseries(memo, f)?.multiply(&to_pseries(memo, g)?),
        Expression::Sum(f, g) => to_pseries(memo, f)?.checked_add(&to_pseries(memo, g)?)?,
        Expression::Difference(f, g) => to_pseries(memo, f)?.checked_sub(&to_pseries(memo, g)?)?,
    })
}

fn eval_alphabet(
    memo: &impl CharacterMemo,
    e: &Expression,
    a: &BivariatePoly,
) -> Result<BivariatePoly, Error> {
    let int = |n: &BigInt| BigRational::from_integer(n.clone());
    Ok(match e {
        Expression::Atom(Basis::Schur, lam) => eval_schur_at(memo, lam, a),
        Expression::Atom(Basis::Power, lam) => eval_at(&PSeries::p(lam.clone()), a),
        Expression::Atom(Basis::Complete, lam) => eval_at(&complete(memo, lam), a),
        Expression::Const(n) => BivariatePoly::one().scale(&int(n)),
        Expression::Scale(n, inner) => eval_alphabet(memo, inner, a)?.scale(&int(n)),
        Expression::Compose(f, g) => {
            let inner = eval_alphabet(memo, g, a)?;
            eval_alphabet(memo, f, &inner)?
        }
        Expression::Product(f, g) => eval_alphabet(memo, f, a)?.mul(&eval_alphabet(memo, g, a)?),
        Expression::Sum(f, g) => eval_alphabet(memo, f, a)?.add(&eval_alphabet(memo, g, a)?),
        Expression::Difference(f, g) => {
            eval_alphabet(memo, f, a)?.sub(&eval_alphabet(memo, g, a)?)
        }
    })
}

/// Binding strength used to decide where parentheses are needed.
fn level(e: &Expression) -> u8 {
    match e {
        Expression::Sum(..) | Expression::Difference(..) => 1,
        Expression::Product(..) => 2,
        Expression::Scale(..) | Expression::Const(_) | Expression::Compose(..) => 3,
        Expression::Atom(..) => 4,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expression, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Atom(basis, lam) => {
                write!(f, "{}[", basis.letter())?;
                for (i, part) in lam.parts().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{part}")?;
                }
                f.write_str("]")
            }
            Expression::Const(n) => write!(f, "{n}"),
            Expression::Scale(n, inner) => {
                write!(f, "{n} ")?;
                match **inner {
                    Expression::Scale(..) | Expression::Const(_) | Expression::Compose(..) => {
                        write!(f, "{inner}")
                    }
                    _ => write_at(f, inner, 4),
                }
            }
            Expression::Compose(outer, inner) => {
                write_at(f, outer, 4)?;
                f.write_str(" o ")?;
                match **inner {
                    Expression::Compose(..) => write!(f, "{inner}"),
                    _ => write_at(f, inner, 4),
                }
            }
            Expression::Product(a, b) => {
                write_at(f, a, 2)?;
                f.write_str(" * ")?;
                write_at(f, b, 3)
            }
            Expression::Sum(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(" + ")?;
                write_at(f, b, 2)
            }
            Expression::Difference(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(" - ")?;
                write_at(f, b, 2)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        let e = parse("s[2] o s[3] o s[2]").unwrap();
        assert_eq!(e.degree(), 12);
        assert_eq!(e.as_chain(), Some(PlethysmExpression::rows(&[2, 3, 2]).unwrap()));
        assert!(matches!(e.expr, Expression::Compose(_, ref inner) if matches!(**inner, Expression::Compose(..))));
        let e = parse("s[2]o s[2] o s[2] o s[2] o s[2]").unwrap();
        assert_eq!(e.degree(), 32);
    }

    #[test]
    fn sums_and_errors() {
        let e = parse("s[2] o s[2] + s[1,1] o s[2]").unwrap();
        assert_eq!(e.degree(), 4);
        assert!(matches!(e.expr, Expression::Sum(..)));
        let err = parse("s[1,2]").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NotWeaklyDecreasing(vec![1, 2]));
        assert_eq!(err.offset, 1);
        let err = parse("s[2] + s[3]").unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(matches!(err.kind, ParseErrorKind::NotHomogeneous { left: 2, right: 3 }));
        assert_eq!(parse("s[2] $").unwrap_err().offset, 5);
        assert!(parse("s[2] o 3").is_err());
        assert_eq!(parse("s[2] o (3)").unwrap_err().kind, ParseErrorKind::ConstantInner);
        assert_eq!(parse("s[0]").unwrap_err().kind, ParseErrorKind::ZeroPart);
        assert!(parse("s[2] s[2]").is_err());
    }

    #[test]
    fn scalars_and_products() {
        let e = parse("2 s[2] * s[1] - s[3]").unwrap();
        assert_eq!(e.degree(), 3);
        let e = parse("3").unwrap();
        assert_eq!(e.degree(), 0);
        assert_eq!(parse("2 * s[2]").unwrap().degree(), 2);
    }

    #[test]
    fn render_roundtrip() {
        for text in [
            "s[2] o s[3] o s[2]",
            "s[2] o s[2] + s[1,1] o s[2]",
            "2 s[2] * s[1] - s[3]",
            "(s[2] o s[2]) o s[2]",
            "s[2] o (s[1] * s[1])",
            "s[4] - (s[3] * s[1] - s[2,2])",
            "3 (s[2] + p[1,1])",
            "h[2,1] * (p[3] + s[2,1])",
            "2 3 s[1]",
            "s[2] * (s[1] * s[1])",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
