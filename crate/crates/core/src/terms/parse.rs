//! Recursive-descent parser for terms and identities.
//!
//! ```text
//! identity ::= term ("=" | "≈") term
//! term     ::= unary ( ("/\" unary)* | ("\/" unary)* )
//! unary    ::= ("~" | "¬") unary | atom
//! atom     ::= ident | "(" term ")" | ("up" | "dn") "(" term ")"
//! ```
//!
//! `/\` may also be written `∧` or `meet`, `\/` as `∨` or `join`. Meet and
//! join chains are left-associative; mixing them without parentheses is an
//! error. `up(t)` and `dn(t)` desugar to `t \/ ~t` and `t /\ ~t`.

use super::{Identity, Term};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedEnd { expected: &'static str },
    UnexpectedToken { found: String, expected: &'static str },
    UnknownSymbol(char),
    MixedOperators,
    MissingEquals,
    TrailingInput(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "unexpected end of input, expected {expected}")
            }
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "unexpected `{found}`, expected {expected}")
            }
            ParseErrorKind::UnknownSymbol(c) => write!(f, "unknown symbol `{c}`"),
            ParseErrorKind::MixedOperators => {
                write!(f, "meet and join cannot be mixed without parentheses")
            }
            ParseErrorKind::MissingEquals => write!(f, "expected an identity `lhs = rhs`"),
            ParseErrorKind::TrailingInput(s) => write!(f, "unexpected trailing input `{s}`"),
        }
    }
}

/// Syntax error; `offset` counts characters from the start of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

/// Result of [`parse`]: a bare term or a full identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Term(Term),
    Identity(Identity),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Meet,
    Join,
    Neg,
    LParen,
    RParen,
    Equals,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::Meet => "/\\".into(),
            Tok::Join => "\\/".into(),
            Tok::Neg => "~".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Equals => "=".into(),
        }
    }
}

fn lex(text: &str) -> Result<(Vec<(Tok, usize)>, usize), ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '/' if chars.get(i + 1) == Some(&'\\') => {
                i += 2;
                Tok::Meet
            }
            '\\' if chars.get(i + 1) == Some(&'/') => {
                i += 2;
                Tok::Join
            }
            '∧' => {
                i += 1;
                Tok::Meet
            }
            '∨' => {
                i += 1;
                Tok::Join
            }
            '~' | '¬' => {
                i += 1;
                Tok::Neg
            }
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            '=' | '≈' => {
                i += 1;
                Tok::Equals
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                match word.as_str() {
                    "meet" => Tok::Meet,
                    "join" => Tok::Join,
                    _ => Tok::Ident(word),
                }
            }
            other => {
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::UnknownSymbol(other),
                })
            }
        };
        toks.push((tok, start));
    }
    Ok((toks, chars.len()))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn error_here(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            None => ParseError {
                offset: self.end,
                kind: ParseErrorKind::UnexpectedEnd { expected },
            },
            Some(t) => ParseError {
                offset: self.offset(),
                kind: ParseErrorKind::UnexpectedToken {
                    found: t.text(),
                    expected,
                },
            },
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_here(expected))
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.unary()?;
        let mut chain: Option<Tok> = None;
        while let Some(op) = self.peek().cloned() {
            if op != Tok::Meet && op != Tok::Join {
                break;
            }
            if let Some(prev) = &chain {
                if *prev != op {
                    return Err(ParseError {
                        offset: self.offset(),
                        kind: ParseErrorKind::MixedOperators,
                    });
                }
            }
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == Tok::Meet {
                Term::meet(acc, rhs)
            } else {
                Term::join(acc, rhs)
            };
            chain = Some(op);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.peek() == Some(&Tok::Neg) {
            self.pos += 1;
            return Ok(Term::neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let sugar = name == "up" || name == "dn";
                if sugar && self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let inner = self.term()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(if name == "up" {
                        Term::up(inner)
                    } else {
                        Term::dn(inner)
                    })
                } else {
                    Ok(Term::Var(name))
                }
            }
            _ => Err(self.error_here("a term")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some((t, o)) => Err(ParseError {
                offset: *o,
                kind: ParseErrorKind::TrailingInput(t.text()),
            }),
        }
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    let (toks, end) = lex(text)?;
    Ok(Parser { toks, pos: 0, end })
}

/// Parses a term or, when an `=`/`≈` is present, an identity.
pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    let mut p = parser(text)?;
    let lhs = p.term()?;
    if p.peek() == Some(&Tok::Equals) {
        p.pos += 1;
        let rhs = p.term()?;
        p.finish()?;
        Ok(Parsed::Identity(Identity::new(lhs, rhs)))
    } else {
        p.finish()?;
        Ok(Parsed::Term(lhs))
    }
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = parser(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    match parse(text)? {
        Parsed::Identity(e) => Ok(e),
        Parsed::Term(_) => Err(ParseError {
            offset: text.chars().count(),
            kind: ParseErrorKind::MissingEquals,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }
    fn y() -> Term {
        Term::var("y")
    }

    #[test]
    fn de_morgan_identity() {
        let e = parse_identity("~(x /\\ y) = ~x \\/ ~y").unwrap();
        assert_eq!(e.lhs, Term::neg(Term::meet(x(), y())));
        assert_eq!(e.rhs, Term::join(Term::neg(x()), Term::neg(y())));
    }

    #[test]
    fn single_variable_is_a_term() {
        assert_eq!(parse("x").unwrap(), Parsed::Term(x()));
    }

    #[test]
    fn unbalanced_parenthesis_reports_end_offset() {
        let err = parse("x /\\ (").unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(matches!(err.kind, ParseErrorKind::UnexpectedEnd { .. }));
    }

    #[test]
    fn alternative_spellings() {
        let a = parse_identity("¬(x ∧ y) ≈ ¬x ∨ ¬y").unwrap();
        let b = parse_identity("~(x meet y) = ~x join ~y").unwrap();
        let c = parse_identity("~(x /\\ y) = ~x \\/ ~y").unwrap();
        assert_eq!(a, c);
        assert_eq!(b, c);
    }

    #[test]
    fn sugar_desugars() {
        assert_eq!(parse_term("up(x)").unwrap(), Term::join(x(), Term::neg(x())));
        assert_eq!(parse_term("dn(x)").unwrap(), Term::meet(x(), Term::neg(x())));
        // without parentheses `up` is just a variable name
        assert_eq!(parse_term("up /\\ dn").unwrap(), Term::meet(Term::var("up"), Term::var("dn")));
    }

    #[test]
    fn meet_and_join_chains_are_left_associative() {
        assert_eq!(
            parse_term("x /\\ y /\\ x").unwrap(),
            Term::meet(Term::meet(x(), y()), x())
        );
    }

    #[test]
    fn mixing_operators_requires_parentheses() {
        let err = parse_term("x /\\ y \\/ x").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MixedOperators);
        assert_eq!(err.offset, 7);
        assert!(parse_term("(x /\\ y) \\/ x").is_ok());
    }

    #[test]
    fn negation_binds_tightest() {
        assert_eq!(parse_term("~x /\\ y").unwrap(), Term::meet(Term::neg(x()), y()));
    }

    #[test]
    fn error_paths() {
        assert_eq!(parse("x # y").unwrap_err().kind, ParseErrorKind::UnknownSymbol('#'));
        assert!(matches!(parse("x y").unwrap_err().kind, ParseErrorKind::TrailingInput(_)));
        assert_eq!(parse_identity("x /\\ y").unwrap_err().kind, ParseErrorKind::MissingEquals);
        assert!(matches!(
            parse("x = = y").unwrap_err().kind,
            ParseErrorKind::UnexpectedToken { .. }
        ));
        assert!(parse("x = y = z").is_err());
        assert!(parse("").is_err());
    }
}
