//! Text syntax: `-2*t1^-3*t2 + 1`, `t^2 - 1`, `u*t - 1`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use super::{GroupRingElem, MultiLaurent, NablaFn, TorsionFn};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

fn var_name(nvars: usize, i: usize) -> String {
    if nvars == 1 {
        "t".to_string()
    } else {
        alloc::format!("t{}", i + 1)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, factors: &[(String, i64)]) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let mut parts: Vec<String> = Vec::new();
    if factors.is_empty() || !mag.is_one() {
        parts.push(mag.to_string());
    }
    for (name, e) in factors {
        if *e == 1 {
            parts.push(name.clone());
        } else {
            parts.push(alloc::format!("{name}^{e}"));
        }
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for MultiLaurent {
    /// Terms in decreasing lexicographic order of exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let factors: Vec<(String, i64)> =
                e.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (var_name(self.nvars(), i), x)).collect();
            write_term(f, k == 0, c, &factors)?;
        }
        Ok(())
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (h, c)) in terms.into_iter().rev().enumerate() {
            let mut factors: Vec<(String, i64)> = Vec::new();
            if h.torsion {
                factors.push(("u".to_string(), 1));
            }
            for (i, &x) in h.exponents.iter().enumerate() {
                if x != 0 {
                    factors.push((var_name(self.nvars(), i), x));
                }
            }
            write_term(f, k == 0, c, &factors)?;
        }
        Ok(())
    }
}

impl fmt::Display for TorsionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / (t - 1)", self.numerator),
            d => write!(f, "({}) / (t - 1)^{}", self.numerator, d),
        }
    }
}

impl fmt::Display for NablaFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / (t - t^-1)", self.numerator),
            d => write!(f, "({}) / (t - t^-1)^{}", self.numerator, d),
        }
    }
}

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError { column: self.pos + 1, message: message.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| core::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.digits() {
            Some(d) => match d.parse::<i64>() {
                Ok(v) => Ok(if neg { -v } else { v }),
                Err(_) => self.err("exponent out of range"),
            },
            None => self.err("expected integer"),
        }
    }
}

/// A parsed monomial: variable index (None for a bare `t`) and exponent.
type Factor = (Option<usize>, i64);

fn parse_terms(text: &str) -> Result<Vec<(BigInt, Vec<Factor>)>, ParseError> {
    let mut sc = Scanner { s: text.as_bytes(), pos: 0 };
    let mut out = Vec::new();
    sc.skip_ws();
    if sc.peek().is_none() {
        return sc.err("empty polynomial");
    }
    let mut first = true;
    loop {
        sc.skip_ws();
        let mut neg = false;
        match sc.peek() {
            Some(b'+') if !first => sc.pos += 1,
            Some(b'-') => {
                neg = true;
                sc.pos += 1
            }
            None => break,
            _ if first => {}
            _ => return sc.err("expected '+' or '-'"),
        }
        first = false;
        sc.skip_ws();
        let mut coeff = BigInt::one();
        let mut factors = Vec::new();
        let mut expect_factor = true;
        if let Some(d) = sc.digits() {
            coeff = d.parse::<BigInt>().unwrap();
            expect_factor = false;
            sc.skip_ws();
            if sc.peek() == Some(b'*') {
                sc.pos += 1;
                sc.skip_ws();
                expect_factor = true;
            }
        }
        while expect_factor {
            match sc.peek() {
                Some(b't') => {
                    sc.pos += 1;
                    let idx = match sc.digits() {
                        Some(d) => match d.parse::<usize>() {
                            Ok(i) if i >= 1 => Some(i - 1),
                            _ => return sc.err("variable index must be at least 1"),
                        },
                        None => None,
                    };
                    let mut e = 1;
                    if sc.peek() == Some(b'^') {
                        sc.pos += 1;
                        e = sc.int()?;
                    }
                    factors.push((idx, e));
                }
                Some(b'u') => {
                    sc.pos += 1;
                    factors.push((Some(usize::MAX), 1));
                }
                _ => return sc.err("expected variable"),
            }
            sc.skip_ws();
            if sc.peek() == Some(b'*') {
                sc.pos += 1;
                sc.skip_ws();
            } else {
                expect_factor = false;
            }
        }
        if neg {
            coeff = -coeff;
        }
        out.push((coeff, factors));
    }
    Ok(out)
}

impl MultiLaurent {
    /// Parses the text syntax. With `nvars = None` the variable count is
    /// inferred: a bare `t` means one variable, otherwise the largest index.
    pub fn parse(text: &str, nvars: Option<usize>) -> Result<MultiLaurent, ParseError> {
        let terms = parse_terms(text)?;
        let bad = |m: &str| Err(ParseError { column: 1, message: m.to_string() });
        let mut bare = false;
        let mut max_idx = 0usize;
        for (_, fs) in &terms {
            for (i, _) in fs {
                match i {
                    None => bare = true,
                    Some(usize::MAX) => return bad("torsion symbol u is not allowed here"),
                    Some(k) => max_idx = max_idx.max(k + 1),
                }
            }
        }
        if bare && max_idx > 0 {
            return bad("cannot mix t with indexed variables");
        }
        let n = match nvars {
            Some(n) => {
                if (bare && n != 1) || max_idx > n {
                    return bad("variable out of range");
                }
                n
            }
            None if bare => 1,
            None => max_idx,
        };
        let mut out = MultiLaurent::zero(n);
        for (c, fs) in terms {
            let mut e = vec![0i64; n];
            for (i, x) in fs {
                e[i.unwrap_or(0)] += x;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl core::str::FromStr for MultiLaurent {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        MultiLaurent::parse(s, None)
    }
}
