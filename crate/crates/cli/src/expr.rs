//! Expression syntax shared by every subcommand.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := ['-' | '+'] ([coeff '*'] atom | '0')
//! atom  := Z[n,m] | E[i,j] | e[i] | f[i] | h[i] | t[k]
//!        | '[' expr ',' expr ']' | '(' expr ')' | phi '(' expr ')'
//! coeff := int ['/' nat] ['i']
//! ```
//!
//! Whitespace is ignored between tokens. Every error carries the byte offset
//! at which parsing stopped.

use std::fmt;

use ladder_core::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// The literal `0`, which belongs to every universe.
    Zero,
    Gen(u64, u64),
    Unit(u64, u64),
    ChevalleyE(u64),
    ChevalleyF(u64),
    Coroot(u64),
    Basis(u64),
    Phi(Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    Scaled(Scalar, Box<Expr>),
    Sum(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    /// The offending input with a caret under the error position.
    pub fn render(&self, input: &str) -> String {
        format!("{input}\n{}^ {}", " ".repeat(self.offset), self.message)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.into(),
        }
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

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", byte as char)))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(b) => self.error(format!("expected {wanted}, found '{}'", b as char)),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn index(&mut self) -> Result<u64, ParseError> {
        if self.peek() == Some(b'-') {
            return Err(self.error("indices must be non-negative"));
        }
        let start = self.pos;
        let Some(text) = self.digits() else {
            return Err(self.unexpected("an index"));
        };
        text.parse().map_err(|_| ParseError {
            offset: start,
            message: format!("index {text} is out of range"),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else if self.eat(b'-') {
                let t = self.term()?;
                terms.push(Expr::Scaled(Scalar::from(-1), Box::new(t)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let body = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.scaled()?
        } else {
            self.atom()?
        };
        Ok(if negative {
            Expr::Scaled(Scalar::from(-1), Box::new(body))
        } else {
            body
        })
    }

    /// A term starting with a coefficient: either `coeff '*' atom` or `0`.
    fn scaled(&mut self) -> Result<Expr, ParseError> {
        let num: BigInt = self.digits().expect("caller saw a digit").parse().expect("digits");
        let mut value = BigRational::from_integer(num);
        let mut plain = true;
        if self.eat(b'/') {
            let at = self.pos;
            let Some(den) = self.digits() else {
                return Err(self.unexpected("a denominator"));
            };
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return Err(ParseError {
                    offset: at,
                    message: "zero denominator".into(),
                });
            }
            value /= BigRational::from_integer(den);
            plain = false;
        }
        let coeff = if self.eat(b'i') {
            plain = false;
            Scalar::new(BigRational::zero(), value)
        } else {
            Scalar::from(value)
        };
        if self.eat(b'*') {
            return Ok(Expr::Scaled(coeff, Box::new(self.atom()?)));
        }
        if plain && coeff.is_zero() {
            return Ok(Expr::Zero);
        }
        Err(self.unexpected("'*' after coefficient"))
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters")
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(b',')?;
                let y = self.expr()?;
                self.expect(b']')?;
                Ok(Expr::Bracket(Box::new(x), Box::new(y)))
            }
            Some(b'(') => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(b')')?;
                Ok(x)
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().to_string();
                match name.as_str() {
                    "Z" | "E" => {
                        self.expect(b'[')?;
                        let a = self.index()?;
                        self.expect(b',')?;
                        let b = self.index()?;
                        self.expect(b']')?;
                        Ok(if name == "Z" { Expr::Gen(a, b) } else { Expr::Unit(a, b) })
                    }
                    "e" | "f" | "h" | "t" => {
                        self.expect(b'[')?;
                        let i = self.index()?;
                        self.expect(b']')?;
                        Ok(match name.as_str() {
                            "e" => Expr::ChevalleyE(i),
                            "f" => Expr::ChevalleyF(i),
                            "h" => Expr::Coroot(i),
                            _ => Expr::Basis(i),
                        })
                    }
                    "phi" => {
                        self.expect(b'(')?;
                        let x = self.expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Phi(Box::new(x)))
                    }
                    _ => Err(ParseError {
                        offset: start,
                        message: format!("unknown symbol '{name}'"),
                    }),
                }
            }
            _ => Err(self.unexpected("a generator, '[' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scaled(c: Scalar, e: Expr) -> Expr {
        Expr::Scaled(c, Box::new(e))
    }

    #[test]
    fn single_generator() {
        assert_eq!(parse("Z[1,0]").unwrap(), Expr::Gen(1, 0));
        assert_eq!(parse("  Z [ 1 , 0 ] ").unwrap(), Expr::Gen(1, 0));
    }

    #[test]
    fn bracket_node() {
        assert_eq!(
            parse("[Z[1,0],Z[0,1]]").unwrap(),
            Expr::Bracket(Box::new(Expr::Gen(1, 0)), Box::new(Expr::Gen(0, 1)))
        );
    }

    #[test]
    fn sum_with_exact_coefficients() {
        assert_eq!(
            parse("2*Z[1,1] - 1/3*Z[0,2]").unwrap(),
            Expr::Sum(vec![
                scaled(Scalar::from(2), Expr::Gen(1, 1)),
                scaled(Scalar::from(-1), scaled(Scalar::ratio(1, 3), Expr::Gen(0, 2))),
            ])
        );
    }

    #[test]
    fn imaginary_and_signed_coefficients() {
        let i_half = &Scalar::ratio(1, 2) * &Scalar::i();
        assert_eq!(parse("1/2i*E[0,1]").unwrap(), scaled(i_half, Expr::Unit(0, 1)));
        assert_eq!(
            parse("-3*h[2]").unwrap(),
            scaled(Scalar::from(-1), scaled(Scalar::from(3), Expr::Coroot(2)))
        );
    }

    #[test]
    fn zero_literal_and_phi() {
        assert_eq!(parse("0").unwrap(), Expr::Zero);
        assert_eq!(parse("phi(E[1,2])").unwrap(), Expr::Phi(Box::new(Expr::Unit(1, 2))));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse("Z[1,").unwrap_err().offset, 4);
        assert_eq!(parse("Z[-1,0]").unwrap_err().offset, 2);
        assert_eq!(parse("Z[1,0] Z[0,1]").unwrap_err().offset, 7);
        assert_eq!(parse("Q[1]").unwrap_err().offset, 0);
        assert_eq!(parse("2 Z[1,1]").unwrap_err().offset, 2);
        assert_eq!(parse("1/0*Z[0,0]").unwrap_err().offset, 2);
        assert_eq!(parse("Z[99999999999999999999999,0]").unwrap_err().offset, 2);
        assert_eq!(parse("").unwrap_err().offset, 0);
    }

    #[test]
    fn caret_rendering() {
        let err = parse("Z[1,x]").unwrap_err();
        assert_eq!(err.render("Z[1,x]"), "Z[1,x]\n    ^ expected an index, found 'x'");
    }
}
