//! Text → polynomial.
//!
//! ```text
//! poly   := sign? term (('+'|'-') term)*
//! term   := coeff? factor*
//! factor := var ('^' nat)?
//! var    := 'z' | 'zb' | 'w' | 'wb' | 'u'
//! coeff  := '(' gauss ')' | rat | rat? 'i'
//! gauss  := rat? (('+'|'-') rat? 'i')?
//! rat    := '-'? nat ('/' nat)?
//! ```
//!
//! Whitespace and `*` between factors are optional. A leading sign on the
//! first term is accepted, and the parenthesised form is read as any signed
//! sum of real and imaginary literals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::polynomial::{Form, Monomial, Polynomial, Var};
use super::real::RealPolynomial;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable `{var}` at {pos} is not available in {form} form")]
    ForbiddenVariable { pos: usize, var: String, form: Form },
    #[error("negative exponent at {pos}")]
    NegativeExponent { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Nat(BigInt),
    I,
    Var(Var),
    /// real coordinate `x1`..`x4`
    X(usize),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'i' => Tok::I,
            b'u' => Tok::Var(Var::U),
            b'z' | b'w' => {
                let barred = bytes.get(i + 1) == Some(&b'b');
                let v = match (c, barred) {
                    (b'z', false) => Var::Z,
                    (b'z', true) => Var::Zb,
                    (b'w', false) => Var::W,
                    _ => Var::Wb,
                };
                if barred {
                    i += 1;
                }
                Tok::Var(v)
            }
            b'x' => match bytes.get(i + 1) {
                Some(d @ b'1'..=b'4') => {
                    i += 1;
                    Tok::X((d - b'1') as usize)
                }
                _ => {
                    return Err(ParseError::Syntax { pos: i, msg: "expected x1..x4".into() })
                }
            },
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: BigInt = text[i..j].parse().expect("ascii digits");
                i = j;
                out.push((start, Tok::Nat(n)));
                continue;
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{}`", text[i..].chars().next().unwrap_or('?')),
                })
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

/// Parsed term before it is committed to a concrete variable set.
struct RawTerm {
    coeff: GaussianRational,
    factors: Vec<(usize, Tok, u32)>,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.here(), msg: msg.into() })
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.bump() {
            Some(Tok::Nat(n)) => Ok(n),
            _ => {
                self.pos -= 1;
                self.err("expected a natural number")
            }
        }
    }

    /// `nat ('/' nat)?`, after any sign has been consumed.
    fn unsigned_rat(&mut self) -> Result<BigRational, ParseError> {
        let n = self.nat()?;
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let at = self.here();
            let d = self.nat()?;
            if d.is_zero() {
                return Err(ParseError::Syntax { pos: at, msg: "zero denominator".into() });
            }
            return Ok(BigRational::new(n, d));
        }
        Ok(BigRational::from_integer(n))
    }

    /// `rat? 'i'?` without sign; `None` if neither is present.
    fn literal(&mut self) -> Result<Option<GaussianRational>, ParseError> {
        let mag = match self.peek() {
            Some(Tok::Nat(_)) => Some(self.unsigned_rat()?),
            _ => None,
        };
        if self.peek() == Some(&Tok::I) {
            self.bump();
            return Ok(Some(GaussianRational::imag(mag.unwrap_or_else(BigRational::one))));
        }
        Ok(mag.map(GaussianRational::real))
    }

    fn paren_coeff(&mut self) -> Result<GaussianRational, ParseError> {
        let mut acc = GaussianRational::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                Some(Tok::Plus) if !first => {
                    self.bump();
                    false
                }
                Some(Tok::RParen) if !first => break,
                _ if first => false,
                _ => return self.err("expected `+`, `-` or `)` in coefficient"),
            };
            let Some(lit) = self.literal()? else {
                return self.err("expected a number or `i` in coefficient");
            };
            if neg {
                acc -= &lit;
            } else {
                acc += &lit;
            }
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let start = self.pos;
        let mut coeff = match self.peek() {
            Some(Tok::LParen) => {
                self.bump();
                let c = self.paren_coeff()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return self.err("expected `)`");
                }
                c
            }
            _ => self.literal()?.unwrap_or_else(GaussianRational::one),
        };
        let mut factors = Vec::new();
        loop {
            let save = self.pos;
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            }
            match self.peek() {
                Some(Tok::Var(_)) | Some(Tok::X(_)) => {
                    let at = self.here();
                    let v = self.bump().expect("peeked");
                    let mut e = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        if self.peek() == Some(&Tok::Minus) {
                            return Err(ParseError::NegativeExponent { pos: self.here() });
                        }
                        let at = self.here();
                        let n = self.nat()?;
                        e = u32::try_from(n).map_err(|_| ParseError::Syntax {
                            pos: at,
                            msg: "exponent too large".into(),
                        })?;
                    }
                    factors.push((at, v, e));
                }
                // a trailing `*` or a literal after factors is malformed
                Some(Tok::Nat(_)) | Some(Tok::I) | Some(Tok::LParen) if !factors.is_empty() || self.pos > start => {
                    return self.err("unexpected number after term");
                }
                _ => {
                    if self.pos != save {
                        return self.err("expected a variable after `*`");
                    }
                    break;
                }
            }
        }
        if self.pos == start {
            return self.err("expected a term");
        }
        if factors.is_empty() && coeff.is_zero() {
            coeff = GaussianRational::zero();
        }
        Ok(RawTerm { coeff, factors })
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        let mut terms = Vec::new();
        let mut neg = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if neg {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.bump() {
                None => break,
                Some(Tok::Plus) => neg = false,
                Some(Tok::Minus) => neg = true,
                Some(_) => {
                    self.pos -= 1;
                    return self.err("expected `+` or `-`");
                }
            }
        }
        Ok(terms)
    }
}

fn parse_raw(text: &str) -> Result<Vec<RawTerm>, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax { pos: 0, msg: "empty input".into() });
    }
    let mut p = Parser { toks, pos: 0, end: text.len() };
    p.poly()
}

/// Parses polynomial text in the given form.
pub fn parse_poly(text: &str, form: Form) -> Result<Polynomial, ParseError> {
    let mut out = Polynomial::zero(form);
    for t in parse_raw(text)? {
        let mut mono = Monomial::ONE;
        for (pos, tok, e) in t.factors {
            let v = match tok {
                Tok::Var(v) => v,
                Tok::X(i) => {
                    return Err(ParseError::ForbiddenVariable { pos, var: format!("x{}", i + 1), form })
                }
                _ => unreachable!("factors hold variables only"),
            };
            if !v.allowed_in(form) {
                return Err(ParseError::ForbiddenVariable { pos, var: v.name().into(), form });
            }
            match v {
                Var::Z => mono.j += e,
                Var::Zb => mono.k += e,
                Var::W | Var::U => mono.m += e,
                Var::Wb => mono.l += e,
            }
        }
        out.add_term(mono, t.coeff);
    }
    Ok(out)
}

/// Parses a real polynomial in `x1..x4` with rational coefficients.
pub fn parse_real(text: &str) -> Result<RealPolynomial, ParseError> {
    let mut out = RealPolynomial::zero();
    for t in parse_raw(text)? {
        if !t.coeff.is_real() {
            return Err(ParseError::Syntax { pos: 0, msg: "real polynomial with a complex coefficient".into() });
        }
        let mut exps = [0u32; 4];
        for (pos, tok, e) in t.factors {
            match tok {
                Tok::X(i) => exps[i] += e,
                Tok::Var(v) => {
                    return Err(ParseError::ForbiddenVariable { pos, var: v.name().into(), form: Form::Ambient })
                }
                _ => unreachable!("factors hold variables only"),
            }
        }
        out.add_term(exps, t.coeff.re);
    }
    Ok(out)
}
