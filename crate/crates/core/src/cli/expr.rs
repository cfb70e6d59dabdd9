//! Expression syntax.
//!
//! ```text
//! product := postfix (('*')? postfix)*
//! postfix := atom ("'" | "^-1")*
//! atom    := '0' | '1' | letter | '(' product ')'
//! letter  := 'g' digits | 'a'..='z'
//! ```
//!
//! `g` immediately followed by digits names the generator with that index,
//! so `g27` is generator 27 while `g` alone is generator 6.

use std::fmt;

use thiserror::Error;

use crate::element::{Alphabet, Element, Letter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expression {
    Literal(Element),
    Generator(Letter),
    Inverse(Box<Expression>),
    Product(Vec<Expression>),
    ZeroLit,
    OneLit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown letter `{name}` at position {position}: alphabet has {size} generators")]
    UnknownLetter {
        name: String,
        position: usize,
        size: usize,
    },
}

impl ParseError {
    pub fn is_syntax(&self) -> bool {
        matches!(self, ParseError::Syntax { .. })
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn starts_atom(c: char) -> bool {
        c == '(' || c == '0' || c == '1' || c.is_ascii_lowercase()
    }

    fn product(&mut self) -> Result<Expression, ParseError> {
        let mut factors = vec![self.postfix()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    factors.push(self.postfix()?);
                }
                Some(c) if Self::starts_atom(c) => factors.push(self.postfix()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expression::Product(factors)
        })
    }

    fn postfix(&mut self) -> Result<Expression, ParseError> {
        let mut e = self.atom()?;
        loop {
            self.skip_ws();
            if self.src[self.pos..].starts_with('\'') {
                self.pos += 1;
            } else if self.src[self.pos..].starts_with("^-1") {
                self.pos += 3;
            } else {
                break;
            }
            e = Expression::Inverse(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expression, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('0') => {
                self.pos += 1;
                Ok(Expression::ZeroLit)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Expression::OneLit)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.product()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                let mut index = c as u32 - 'a' as u32;
                if c == 'g' {
                    let digits = self.src[self.pos..]
                        .chars()
                        .take_while(char::is_ascii_digit)
                        .count();
                    if digits > 0 {
                        let text = &self.src[self.pos..self.pos + digits];
                        index = text.parse().map_err(|_| ParseError::Syntax {
                            position: start,
                            message: "generator index too large".into(),
                        })?;
                        self.pos += digits;
                    }
                }
                let letter = Letter(index);
                if !self.alphabet.contains(letter) {
                    return Err(ParseError::UnknownLetter {
                        name: self.src[start..self.pos].to_string(),
                        position: start,
                        size: self.alphabet.finite_size().unwrap_or(0),
                    });
                }
                Ok(Expression::Generator(letter))
            }
            Some(c) => Err(self.syntax(format!("unexpected `{c}`"))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Expression, ParseError> {
    let mut parser = Parser {
        src: text,
        pos: 0,
        alphabet,
    };
    let e = parser.product()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(parser.syntax("trailing input"));
    }
    Ok(e)
}

/// Folds products with the normal-form product and inverses with the
/// involution. Literals are taken as given.
pub fn evaluate(e: &Expression) -> Element {
    match e {
        Expression::Literal(x) => x.clone(),
        Expression::Generator(l) => Element::generator(*l),
        Expression::Inverse(inner) => evaluate(inner).inverse(),
        Expression::Product(factors) => factors
            .iter()
            .fold(Element::one(), |acc, f| acc.product(&evaluate(f))),
        Expression::ZeroLit => Element::Zero,
        Expression::OneLit => Element::one(),
    }
}

pub fn parse_element(text: &str, alphabet: &Alphabet) -> Result<Element, ParseError> {
    parse(text, alphabet).map(|e| evaluate(&e))
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Literal(x) => write!(f, "({x})"),
            Expression::Generator(l) => write!(f, "{l}"),
            Expression::Inverse(inner) => write!(f, "({inner})'"),
            Expression::Product(factors) => {
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Expression::ZeroLit => f.write_str("0"),
            Expression::OneLit => f.write_str("1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> Alphabet {
        Alphabet::finite(2).unwrap()
    }

    fn g(i: u32) -> Expression {
        Expression::Generator(Letter(i))
    }

    fn inv(e: Expression) -> Expression {
        Expression::Inverse(Box::new(e))
    }

    #[test]
    fn grammar() {
        assert_eq!(
            parse("a a'", &two()).unwrap(),
            Expression::Product(vec![g(0), inv(g(0))])
        );
        let three = Alphabet::finite(3).unwrap();
        assert_eq!(
            parse("(ab)' c", &three).unwrap(),
            Expression::Product(vec![inv(Expression::Product(vec![g(0), g(1)])), g(2)])
        );
        assert_eq!(
            parse("a^-1*b", &two()).unwrap(),
            Expression::Product(vec![inv(g(0)), g(1)])
        );
        assert_eq!(parse("  1 ", &two()).unwrap(), Expression::OneLit);
        assert_eq!(parse("a''", &two()).unwrap(), inv(inv(g(0))));
    }

    #[test]
    fn indexed_generators() {
        let inf = Alphabet::countably_infinite();
        assert_eq!(parse("g27", &inf).unwrap(), g(27));
        assert_eq!(parse("g", &inf).unwrap(), g(6));
        assert_eq!(
            parse("g3a", &inf).unwrap(),
            Expression::Product(vec![g(3), g(0)])
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse("q", &two()),
            Err(ParseError::UnknownLetter { position: 0, .. })
        ));
        assert!(matches!(
            parse("a )", &two()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse("(a", &two()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse("", &two()),
            Err(ParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse("a * ", &two()),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(parse("A", &two()), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn evaluation() {
        let ev = |s: &str| parse_element(s, &two()).unwrap().to_string();
        assert_eq!(ev("a a'"), "1");
        assert_eq!(ev("a b'"), "0");
        assert_eq!(ev("b (ab)'"), "a'");
        assert_eq!(ev("b'a'a b"), "b'a'ab");
        assert_eq!(ev("0 a"), "0");
    }
}
