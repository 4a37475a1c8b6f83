//! Text form of polynomials.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer | identifier ('^' integer)?
//! ```
//!
//! Whitespace is insignificant. Printing uses least non-negative residues
//! and lists terms in decreasing monomial order, e.g.
//! `2*x2^2*x3^3 + x1*x3^4`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{add_mod, mul_mod, neg_mod};

use super::{Monomial, Polynomial, RingRef};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn integer(&mut self) -> Result<u128> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<u128>().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn identifier(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }
}

impl Polynomial {
    /// Parses a polynomial in the text grammar; every identifier must be a
    /// variable of `ring`.
    pub fn parse(ring: &RingRef, text: &str) -> Result<Polynomial> {
        let p = ring.characteristic();
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match parser.peek() {
                None if first => return parser.err("empty polynomial"),
                None => return parser.err("dangling operator"),
                Some(b'+') => {
                    parser.pos += 1;
                }
                Some(b'-') => {
                    parser.pos += 1;
                    negative = true;
                }
                Some(_) if first => {}
                Some(c) => return parser.err(format!("expected `+` or `-`, found `{}`", c as char)),
            }
            first = false;

            let mut coeff = 1u32 % p;
            let mut mono = Monomial::one(ring.nvars());
            loop {
                match parser.peek() {
                    Some(c) if c.is_ascii_digit() => {
                        let v = parser.integer()?;
                        coeff = mul_mod(coeff, (v % p as u128) as u32, p);
                    }
                    Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                        let at = parser.pos;
                        let name = parser.identifier();
                        let Some(index) = ring.index_of(name) else {
                            parser.pos = at;
                            return parser.err(format!("unknown variable `{name}`"));
                        };
                        let mut power = 1u32;
                        if parser.peek() == Some(b'^') {
                            parser.pos += 1;
                            let v = parser.integer()?;
                            power = u32::try_from(v).or_else(|_| parser.err("exponent too large"))?;
                        }
                        mono = mono.mul(&Monomial::variable(ring.nvars(), index, power));
                    }
                    Some(c) => return parser.err(format!("unexpected `{}`", c as char)),
                    None => return parser.err("expected a factor"),
                }
                if parser.peek() == Some(b'*') {
                    parser.pos += 1;
                } else {
                    break;
                }
            }
            if negative {
                coeff = neg_mod(coeff, p);
            }
            let e = acc.entry(mono).or_insert(0);
            *e = add_mod(*e, coeff, p);

            match parser.peek() {
                None => break,
                Some(b'+') | Some(b'-') => continue,
                Some(c) => return parser.err(format!("unexpected `{}`", c as char)),
            }
        }
        Ok(Polynomial::from_map(ring, acc))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &RingRef, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                if *c != 1 {
                    write!(f, "{c}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}
