//! Ideal literals: `ideal := "(" term {"," term} ")"`, `term := factor {"*"
//! factor}`, `factor := variable ["^" integer]`. The literal `1` denotes the
//! unit monomial. When every variable name is a single character, adjacent
//! factors may be juxtaposed (`xy^2`).

use crate::error::{Error, Result};
use crate::ring::AmbientRing;

pub(super) fn parse_generators(ring: &AmbientRing, text: &str) -> Result<Vec<Vec<i64>>> {
    let s = text.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("ideal must be parenthesized: `{text}`")))?;
    if inner.trim().is_empty() {
        return Err(Error::ZeroIdeal);
    }
    inner.split(',').map(|t| parse_term(ring, t.trim())).collect()
}

pub(crate) fn parse_term(ring: &AmbientRing, term: &str) -> Result<Vec<i64>> {
    let mut exp = vec![0i64; ring.dim()];
    if term == "1" {
        return Ok(exp);
    }
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let single_char = ring.names().iter().all(|n| n.chars().count() == 1);
    for factor in term.split('*') {
        let factor = factor.trim();
        for (name, power) in split_factor(factor, single_char)? {
            let v = ring
                .variable_exponent(&name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            for (e, x) in exp.iter_mut().zip(&v) {
                *e = x
                    .checked_mul(power)
                    .and_then(|y| e.checked_add(y))
                    .ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(exp)
}

fn split_factor(factor: &str, single_char: bool) -> Result<Vec<(String, i64)>> {
    let bad = || Error::Parse(format!("bad factor `{factor}`"));
    let name_char = |c: char| c.is_ascii_alphanumeric() || c == '_';
    if !single_char {
        let (base, power) = match factor.split_once('^') {
            Some((b, p)) => (b.trim(), p.trim().parse::<i64>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        if base.is_empty() || power < 0 || !base.chars().all(name_char) {
            return Err(bad());
        }
        return Ok(vec![(base.to_string(), power)]);
    }
    let mut out: Vec<(String, i64)> = Vec::new();
    let mut chars = factor.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        if c == '^' {
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let last = out.last_mut().ok_or_else(bad)?;
            if last.1 != 1 || digits.is_empty() {
                return Err(bad());
            }
            last.1 = digits.parse().map_err(|_| bad())?;
        } else if name_char(c) && !c.is_ascii_digit() {
            out.push((c.to_string(), 1));
        } else {
            return Err(bad());
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}
