//! The plain-text polynomial grammar.
//!
//! ```text
//! poly   := "0" | term (("+" | "-") term)*
//! term   := ["-"] [coeff "*"] symbol+
//! symbol := "[" list "|" list "]"
//! ```
//!
//! This is what `Display` prints for a `MinorPolynomial`, so printed
//! polynomials read back unchanged. Index lists may come in any order; the
//! sign of sorting them is absorbed into the coefficient and a repeated
//! index makes the term vanish.

use minorrel_core::relations::{MinorPolynomial, MinorSymbol};
use minorrel_core::{Error, Result};
use num_bigint::BigInt;

#[derive(Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Int(BigInt),
    Sym(Vec<u8>, Vec<u8>),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn index_list(s: &str) -> Result<Vec<u8>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u8>()
                .map_err(|_| bad(format!("bad index {:?} in minor symbol", x.trim())))
        })
        .collect()
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        match ch {
            c if c.is_whitespace() => {}
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '0'..='9' => {
                let mut end = i + 1;
                while let Some(&(j, c)) = chars.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                out.push(Tok::Int(s[i..end].parse().expect("digits")));
            }
            '[' => {
                let close = s[i..].find(']').ok_or_else(|| bad("unclosed '[' in polynomial"))? + i;
                let body = &s[i + 1..close];
                let (r, c) = body
                    .split_once('|')
                    .ok_or_else(|| bad(format!("minor symbol without '|': [{body}]")))?;
                out.push(Tok::Sym(index_list(r)?, index_list(c)?));
                while chars.peek().is_some_and(|&(j, _)| j <= close) {
                    chars.next();
                }
            }
            c => return Err(bad(format!("unexpected character {c:?} in polynomial"))),
        }
    }
    Ok(out)
}

/// Parses one polynomial in minors.
pub fn parse_polynomial(s: &str) -> Result<MinorPolynomial> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(bad("empty polynomial"));
    }
    if toks == [Tok::Int(BigInt::from(0))] {
        return Ok(MinorPolynomial::new());
    }
    let mut p = MinorPolynomial::new();
    let mut k = 0;
    let mut first = true;
    while k < toks.len() {
        let mut c = BigInt::from(1);
        match toks[k] {
            Tok::Plus if !first => k += 1,
            Tok::Minus => {
                c = -c;
                k += 1;
            }
            _ if first => {}
            _ => return Err(bad("expected '+' or '-' between terms")),
        }
        first = false;
        if let Some(Tok::Int(v)) = toks.get(k) {
            if toks.get(k + 1) != Some(&Tok::Star) {
                return Err(bad("a coefficient must be followed by '*'"));
            }
            c *= v;
            k += 2;
        }
        let mut mono = Vec::new();
        let mut vanishes = false;
        while let Some(Tok::Sym(r, cl)) = toks.get(k) {
            match MinorSymbol::from_lists(r, cl)? {
                Some((sym, sign)) => {
                    if sign < 0 {
                        c = -c;
                    }
                    mono.push(sym);
                }
                None => vanishes = true,
            }
            k += 1;
        }
        if mono.is_empty() && !vanishes {
            return Err(bad("a term needs at least one minor symbol"));
        }
        if !vanishes {
            p.add_term(mono, c);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_display_output() {
        let s = "1 * [1,2|1,2][1,2|3,4] - 1 * [1,2|1,3][1,2|2,4] + 1 * [1,2|1,4][1,2|2,3]";
        let p = parse_polynomial(s).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), s);
    }

    #[test]
    fn leading_sign_and_implicit_coefficient() {
        let p = parse_polynomial("-[1|1][2|2] + 2*[1|2] [2|1]").unwrap();
        assert_eq!(p.to_string(), "-1 * [1|1][2|2] + 2 * [1|2][2|1]");
    }

    #[test]
    fn unsorted_lists_carry_a_sign() {
        let p = parse_polynomial("[2,1|1,2]").unwrap();
        assert_eq!(p.to_string(), "-1 * [1,2|1,2]");
        assert!(parse_polynomial("[1,1|1,2]").unwrap().is_zero());
        assert!(parse_polynomial("0").unwrap().is_zero());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "+", "3", "[1,2|1]", "[1|1] [", "[a|1]", "2 [1|1]", "[1|1] [2|2] 3 * [1|2]", "[0|1]"] {
            assert!(parse_polynomial(s).is_err(), "{s:?}");
        }
    }
}
