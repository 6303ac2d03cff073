//! Canonical text form of polynomials, plus the variable-name conventions
//! shared by reports and test fixtures.
//!
//! Rendering writes terms in descending grevlex order, e.g.
//! `x1*u1 + 2*x2*u2` or `u2^2 - u1*u3`; ξ variables render as `u`. The
//! parser accepts exactly the same grammar (plus redundant whitespace and
//! explicit rational coefficients like `3/4`).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Polynomial};
use crate::{Error, Rational};

/// Names for k[ξ1..ξn]: `u1..un`.
pub fn xi_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("u{i}")).collect()
}

/// Names for k[ξ0..ξn] (homogenized ξ-ring): `u0..un`.
pub fn hat_xi_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("u{i}")).collect()
}

/// Names for k[x1..xn, ξ1..ξn]: `x1..xn, u1..un`.
pub fn x_xi_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("u{i}")));
    names
}

/// Names for k[x0..xn, ξ0..ξn] (homogenized 2(n+1)-variable ring).
pub fn hat_x_xi_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    names.extend((0..=n).map(|i| format!("u{i}")));
    names
}

/// Renders a polynomial with the given variable names, terms in descending
/// grevlex order. The zero polynomial renders as `0`.
pub fn render_polynomial(p: &Polynomial, names: &[String]) -> String {
    assert_eq!(names.len(), p.nvars(), "one name per variable");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Monomial, &Rational)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(render_rational(&abs));
        }
        for (idx, &e) in m.exponents().iter().enumerate() {
            if e == 1 {
                factors.push(names[idx].clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", names[idx], e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `numer` or `numer/denom` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let err = |msg: &str| Error::Parse {
        line: 1,
        column: 1,
        message: format!("{msg}: {s:?}"),
    };
    let t = s.trim();
    let (numer, denom) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n: BigInt = numer.parse().map_err(|_| err("invalid integer"))?;
    let d: BigInt = match denom {
        Some(d) => d.parse().map_err(|_| err("invalid denominator"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Parses the rendered polynomial grammar back into a polynomial over the
/// given variable names.
pub fn parse_polynomial(input: &str, names: &[String]) -> Result<Polynomial, Error> {
    let name_index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let nvars = names.len();
    let tokens = tokenize(input)?;
    let mut pos = 0;
    let mut poly = Polynomial::zero(nvars);

    // poly := [sign] term (sign term)*
    let mut sign = Rational::one();
    match tokens.get(pos) {
        Some(Token::Plus) => pos += 1,
        Some(Token::Minus) => {
            sign = -sign;
            pos += 1;
        }
        _ => {}
    }
    loop {
        let (term, next) = parse_term(&tokens, pos, &name_index, nvars, input)?;
        poly = &poly + &term.scale(&sign);
        pos = next;
        match tokens.get(pos) {
            None => break,
            Some(Token::Plus) => {
                sign = Rational::one();
                pos += 1;
            }
            Some(Token::Minus) => {
                sign = -Rational::one();
                pos += 1;
            }
            Some(tok) => {
                return Err(parse_err(input, tok.offset(), "expected + or - between terms"));
            }
        }
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star(usize),
    Caret(usize),
    Number(String, usize),
    Name(String, usize),
}

impl Token {
    fn offset(&self) -> usize {
        match self {
            Token::Plus | Token::Minus => 0,
            Token::Star(o) | Token::Caret(o) => *o,
            Token::Number(_, o) | Token::Name(_, o) => *o,
        }
    }
}

fn parse_err(input: &str, offset: usize, message: &str) -> Error {
    let mut line = 1;
    let mut column = 1;
    for (i, ch) in input.char_indices() {
        if i >= offset {
            break;
        }
        if ch == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>, Error> {
    let mut tokens = Vec::new();
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (off, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star(off));
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret(off));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '/') {
                    s.push(chars[i].1);
                    i += 1;
                }
                tokens.push(Token::Number(s, off));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                    s.push(chars[i].1);
                    i += 1;
                }
                tokens.push(Token::Name(s, off));
            }
            _ => return Err(parse_err(input, off, &format!("unexpected character {ch:?}"))),
        }
    }
    Ok(tokens)
}

fn parse_term(
    tokens: &[Token],
    mut pos: usize,
    names: &HashMap<&str, usize>,
    nvars: usize,
    input: &str,
) -> Result<(Polynomial, usize), Error> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; nvars];
    let mut saw_factor = false;
    loop {
        match tokens.get(pos) {
            Some(Token::Number(s, off)) => {
                let r = parse_rational(s)
                    .map_err(|_| parse_err(input, *off, &format!("invalid rational {s:?}")))?;
                coeff *= r;
                pos += 1;
                saw_factor = true;
            }
            Some(Token::Name(s, off)) => {
                let Some(&idx) = names.get(s.as_str()) else {
                    return Err(parse_err(input, *off, &format!("unknown variable {s:?}")));
                };
                let mut exp = 1u32;
                if let Some(Token::Caret(_)) = tokens.get(pos + 1) {
                    match tokens.get(pos + 2) {
                        Some(Token::Number(e, eoff)) => {
                            exp = e.parse().map_err(|_| {
                                parse_err(input, *eoff, &format!("invalid exponent {e:?}"))
                            })?;
                            pos += 3;
                        }
                        _ => return Err(parse_err(input, *off, "expected exponent after ^")),
                    }
                } else {
                    pos += 1;
                }
                exps[idx] += exp;
                saw_factor = true;
            }
            Some(tok) if !saw_factor => {
                return Err(parse_err(input, tok.offset(), "expected a term"));
            }
            _ => break,
        }
        // optional * between factors
        if let Some(Token::Star(_)) = tokens.get(pos) {
            pos += 1;
        } else {
            break;
        }
    }
    if !saw_factor {
        return Err(parse_err(input, input.len(), "expected a term"));
    }
    Ok((
        Polynomial::term(Monomial::from_exponents(exps), coeff),
        pos,
    ))
}
