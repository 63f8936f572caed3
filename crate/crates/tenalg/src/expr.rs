//! The calculator's expression language: lexer, AST, and a precedence
//! climbing parser.
//!
//! Grammar:
//!
//! ```text
//! expr  := term (('+'|'-') term)*
//! term  := unary (INFIX unary)*        INFIX ∈ { *, ^, @, o_s, o_a, ; }
//! unary := '-' unary | atom
//! atom  := RATIONAL | 'e'INT | 'f'INT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
//! ```
//!
//! Precedence, tightest first: `*` `^`, then `@`, then `o_s` `o_a`, then
//! `;`, then `+` `-`; all infix operators associate left. `·` is accepted
//! as a synonym for `*`, and `;` builds joint elements — both so that
//! every printed result parses back.

use crate::scalar::Scalar;
use crate::space::Side;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Concat,
    Wedge,
    Square,
    CircleSym,
    CircleAntisym,
    JointPair,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Concat => "*",
            BinOp::Wedge => "^",
            BinOp::Square => "@",
            BinOp::CircleSym => "o_s",
            BinOp::CircleAntisym => "o_a",
            BinOp::JointPair => ";",
        }
    }

    fn level(self) -> u8 {
        match self {
            BinOp::Concat | BinOp::Wedge => 4,
            BinOp::Square => 3,
            BinOp::CircleSym | BinOp::CircleAntisym => 2,
            BinOp::JointPair => 1,
            BinOp::Add | BinOp::Sub => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Symm,
    Asymm,
    Antipode,
    Counit,
    Delta,
    Lap,
    LapSlow,
    Dual,
    Pow,
    PhiTensor,
    PhiSym,
    PhiAntisym,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Symm => "symm",
            Func::Asymm => "asymm",
            Func::Antipode => "S",
            Func::Counit => "eps",
            Func::Delta => "delta",
            Func::Lap => "lap",
            Func::LapSlow => "lap_slow",
            Func::Dual => "dual",
            Func::Pow => "pow",
            Func::PhiTensor => "phi_t",
            Func::PhiSym => "phi_s",
            Func::PhiAntisym => "phi_a",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "symm" => Func::Symm,
            "asymm" => Func::Asymm,
            "S" => Func::Antipode,
            "eps" => Func::Counit,
            "delta" => Func::Delta,
            "lap" => Func::Lap,
            "lap_slow" => Func::LapSlow,
            "dual" => Func::Dual,
            "pow" => Func::Pow,
            "phi_t" => Func::PhiTensor,
            "phi_s" => Func::PhiSym,
            "phi_a" => Func::PhiAntisym,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Func::Lap | Func::LapSlow | Func::Dual | Func::Pow => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Rational(Scalar),
    Generator(Side, u32),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Generator(Side, u32),
    Op(BinOp),
    Minus,
    Plus,
    Slash,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "{n}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Generator(side, ix) => write!(f, "{}{ix}", side.letter()),
            Token::Op(op) => write!(f, "{}", op.symbol()),
            Token::Minus => write!(f, "-"),
            Token::Plus => write!(f, "+"),
            Token::Slash => write!(f, "/"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
            Token::Comma => write!(f, ","),
            Token::Eof => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    while pos < chars.len() {
        let c = chars[pos];
        let (tline, tcol) = (line, col);
        let single = |token: Token| -> Option<Token> { Some(token) };
        let token = match c {
            '\n' => {
                pos += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                pos += 1;
                col += 1;
                continue;
            }
            '+' => single(Token::Plus),
            '-' => single(Token::Minus),
            '*' | '·' => single(Token::Op(BinOp::Concat)),
            '^' => single(Token::Op(BinOp::Wedge)),
            '@' => single(Token::Op(BinOp::Square)),
            ';' => single(Token::Op(BinOp::JointPair)),
            '/' => single(Token::Slash),
            '(' => single(Token::LParen),
            ')' => single(Token::RParen),
            ',' => single(Token::Comma),
            _ => None,
        };
        if let Some(token) = token {
            pos += 1;
            col += 1;
            tokens.push((token, tline, tcol));
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                digits.push(chars[pos]);
                pos += 1;
                col += 1;
            }
            tokens.push((Token::Int(digits.parse().expect("digits")), tline, tcol));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
                word.push(chars[pos]);
                pos += 1;
                col += 1;
            }
            let token = match word.as_str() {
                "o_s" => Token::Op(BinOp::CircleSym),
                "o_a" => Token::Op(BinOp::CircleAntisym),
                _ => classify_word(&word, tline, tcol)?,
            };
            tokens.push((token, tline, tcol));
            continue;
        }
        return Err(ParseError {
            line: tline,
            col: tcol,
            message: format!("unexpected character '{c}'"),
        });
    }
    tokens.push((Token::Eof, line, col));
    Ok(tokens)
}

fn classify_word(word: &str, line: usize, col: usize) -> Result<Token, ParseError> {
    let mut it = word.chars();
    let head = it.next().expect("nonempty");
    let tail: String = it.collect();
    if (head == 'e' || head == 'f') && !tail.is_empty() && tail.chars().all(|c| c.is_ascii_digit())
    {
        let index: u32 = tail.parse().map_err(|_| ParseError {
            line,
            col,
            message: format!("generator index {tail} out of range"),
        })?;
        if index == 0 {
            return Err(ParseError {
                line,
                col,
                message: "generator indices start at 1".to_string(),
            });
        }
        let side = if head == 'e' { Side::U } else { Side::V };
        return Ok(Token::Generator(side, index));
    }
    Ok(Token::Ident(word.to_string()))
}

struct Parser {
    tokens: Vec<(Token, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, line, col) = self.tokens[self.pos];
        (line, col)
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }

    fn expect(&mut self, token: Token) -> Result<(), ParseError> {
        if *self.peek() == token {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected '{token}', found '{}'", self.peek())))
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.parse_binary(1)?;
        loop {
            let op = match self.peek() {
                Token::Plus => BinOp::Add,
                Token::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let right = self.parse_binary(1)?;
            left = Expr::Binary(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn parse_binary(&mut self, min_level: u8) -> Result<Expr, ParseError> {
        let mut left = self.parse_unary()?;
        loop {
            let op = match self.peek() {
                Token::Op(op) if op.level() >= min_level => *op,
                _ => break,
            };
            self.bump();
            let right = self.parse_binary(op.level() + 1)?;
            left = Expr::Binary(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn parse_unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Token::Minus {
            self.bump();
            let inner = self.parse_unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Token::Int(numer) => {
                self.bump();
                if *self.peek() == Token::Slash {
                    self.bump();
                    match self.bump() {
                        Token::Int(denom) => {
                            if denom.is_zero() {
                                return Err(self.error("zero denominator"));
                            }
                            Ok(Expr::Rational(BigRational::new(numer, denom)))
                        }
                        other => Err(self.error(format!(
                            "expected an integer denominator, found '{other}'"
                        ))),
                    }
                } else {
                    Ok(Expr::Rational(BigRational::from_integer(numer)))
                }
            }
            Token::Generator(side, index) => {
                self.bump();
                Ok(Expr::Generator(side, index))
            }
            Token::Ident(name) => {
                self.bump();
                let func = Func::from_name(&name)
                    .ok_or_else(|| self.error(format!("unknown identifier '{name}'")))?;
                self.expect(Token::LParen)?;
                let mut args = vec![self.parse_expr()?];
                while *self.peek() == Token::Comma {
                    self.bump();
                    args.push(self.parse_expr()?);
                }
                self.expect(Token::RParen)?;
                if args.len() != func.arity() {
                    return Err(self.error(format!(
                        "{} takes {} argument(s), found {}",
                        func.name(),
                        func.arity(),
                        args.len()
                    )));
                }
                if func == Func::Pow {
                    check_pow_exponent(&args[1]).map_err(|message| self.error(message))?;
                }
                Ok(Expr::Call(func, args))
            }
            Token::LParen => {
                self.bump();
                let inner = self.parse_expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => Err(self.error(format!("expected an expression, found '{other}'"))),
        }
    }
}

fn check_pow_exponent(e: &Expr) -> Result<(), String> {
    match e {
        Expr::Rational(r) if r.is_integer() && !r.is_negative() => Ok(()),
        _ => Err("pow expects a nonnegative integer literal exponent".to_string()),
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.parse_expr()?;
    if *parser.peek() != Token::Eof {
        return Err(parser.error(format!("unexpected '{}' after expression", parser.peek())));
    }
    Ok(expr)
}

/// Exponent of a checked `pow` call; parse validation guarantees a small
/// nonnegative integer literal.
pub fn pow_exponent(e: &Expr) -> Option<usize> {
    match e {
        Expr::Rational(r) if r.is_integer() && !r.is_negative() => r.to_integer().to_usize(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn gen(side: Side, ix: u32) -> Expr {
        Expr::Generator(side, ix)
    }

    #[test]
    fn precedence_square_binds_tighter_than_plus() {
        let ast = parse("e1 @ e2 + 1/2").unwrap();
        assert_eq!(
            ast,
            Expr::Binary(
                BinOp::Add,
                Box::new(Expr::Binary(
                    BinOp::Square,
                    Box::new(gen(Side::U, 1)),
                    Box::new(gen(Side::U, 2))
                )),
                Box::new(Expr::Rational(frac(1, 2)))
            )
        );
    }

    #[test]
    fn function_call_parses() {
        let ast = parse("symm(e1 * e2)").unwrap();
        assert_eq!(
            ast,
            Expr::Call(
                Func::Symm,
                vec![Expr::Binary(
                    BinOp::Concat,
                    Box::new(gen(Side::U, 1)),
                    Box::new(gen(Side::U, 2))
                )]
            )
        );
    }

    #[test]
    fn doubled_operator_is_a_syntax_error() {
        let err = parse("e1 @ @ e2").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("expected an expression"));
    }

    #[test]
    fn concat_tighter_than_square_tighter_than_circle() {
        // parses as e1 o_s ((e2*e3) @ e4)
        let ast = parse("e1 o_s e2 * e3 @ e4").unwrap();
        assert_eq!(
            ast,
            Expr::Binary(
                BinOp::CircleSym,
                Box::new(gen(Side::U, 1)),
                Box::new(Expr::Binary(
                    BinOp::Square,
                    Box::new(Expr::Binary(
                        BinOp::Concat,
                        Box::new(gen(Side::U, 2)),
                        Box::new(gen(Side::U, 3))
                    )),
                    Box::new(gen(Side::U, 4))
                ))
            )
        );
    }

    #[test]
    fn left_associativity() {
        let ast = parse("e1 - e2 - e3").unwrap();
        assert_eq!(
            ast,
            Expr::Binary(
                BinOp::Sub,
                Box::new(Expr::Binary(
                    BinOp::Sub,
                    Box::new(gen(Side::U, 1)),
                    Box::new(gen(Side::U, 2))
                )),
                Box::new(gen(Side::U, 3))
            )
        );
    }

    #[test]
    fn rationals_and_unary_minus() {
        assert_eq!(parse("3/4").unwrap(), Expr::Rational(frac(3, 4)));
        assert_eq!(parse("3 / 4").unwrap(), Expr::Rational(frac(3, 4)));
        assert_eq!(
            parse("-5").unwrap(),
            Expr::Neg(Box::new(Expr::Rational(int(5))))
        );
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn middle_dot_is_concat() {
        assert_eq!(parse("2·e1").unwrap(), parse("2*e1").unwrap());
    }

    #[test]
    fn generators_and_identifiers() {
        assert_eq!(parse("f12").unwrap(), gen(Side::V, 12));
        assert!(parse("e0").is_err());
        let err = parse("foo(e1)").unwrap_err();
        assert!(err.message.contains("unknown identifier"));
        let err = parse("ee1").unwrap_err();
        assert!(err.message.contains("unknown identifier"));
    }

    #[test]
    fn arity_and_pow_literal_checks() {
        assert!(parse("lap(e1)").is_err());
        assert!(parse("symm(e1, e2)").is_err());
        assert!(parse("pow(e1, -1)").is_err());
        assert!(parse("pow(e1, 1/2)").is_err());
        assert!(parse("pow(e1, 3)").is_ok());
    }

    #[test]
    fn error_positions_are_line_and_column() {
        let err = parse("e1 +\n  %").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
    }

    #[test]
    fn joint_pair_parses_below_circle() {
        let ast = parse("1·e1;f1 + 2").unwrap();
        assert_eq!(
            ast,
            Expr::Binary(
                BinOp::Add,
                Box::new(Expr::Binary(
                    BinOp::JointPair,
                    Box::new(Expr::Binary(
                        BinOp::Concat,
                        Box::new(Expr::Rational(int(1))),
                        Box::new(gen(Side::U, 1))
                    )),
                    Box::new(gen(Side::V, 1))
                )),
                Box::new(Expr::Rational(int(2)))
            )
        );
    }

    #[test]
    fn trailing_input_rejected() {
        assert!(parse("e1 e2").is_err());
        assert!(parse("").is_err());
    }
}
