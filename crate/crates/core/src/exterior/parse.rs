//! Form expressions: `w0 + i w1`, `2/3 w2 - i w5`, `w0^w1 + (1+i) w2^w3`.
//! Complex coefficients with both parts need parentheses.

use num_traits::{One, Zero};

use super::{ExteriorError, PForm};
use crate::exact::{CScalar, Scalar};

fn perr(msg: impl Into<String>) -> ExteriorError {
    ExteriorError::Parse(msg.into())
}

/// Split at top-level `+`/`-`, keeping the sign with each term.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>, ExteriorError> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(perr("unbalanced `)`"));
                }
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                // A sign directly after `/` belongs to nothing valid; let the
                // coefficient parser reject it.
                if !cur.trim().is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                    neg = ch == '-';
                } else {
                    neg ^= ch == '-';
                    cur.clear();
                }
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(perr("unbalanced `(`"));
    }
    if cur.trim().is_empty() {
        if terms.is_empty() {
            return Err(perr("empty expression"));
        }
        return Err(perr("dangling sign"));
    }
    terms.push((neg, cur));
    Ok(terms)
}

fn parse_coeff(s: &str) -> Result<CScalar, ExteriorError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if t.is_empty() {
        return Ok(CScalar::one());
    }
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(&t);
    inner
        .parse::<CScalar>()
        .map_err(|_| perr(format!("malformed coefficient `{s}`")))
}

/// Parse a homogeneous form of the given degree over `dim` dual basis
/// symbols `w0 … w{dim−1}`.
pub fn parse_form(expr: &str, dim: usize, degree: usize) -> Result<PForm, ExteriorError> {
    if expr.trim() == "0" {
        return Ok(PForm::zero(dim, degree));
    }
    let mut out = PForm::zero(dim, degree);
    for (neg, term) in split_terms(expr)? {
        let term = term.trim();
        let start = term
            .char_indices()
            .find(|&(i, c)| c == 'w' && term[i + 1..].starts_with(|d: char| d.is_ascii_digit()))
            .map(|(i, _)| i);
        let (coeff_s, mono_s) = match start {
            Some(i) => (&term[..i], &term[i..]),
            None => (term, ""),
        };
        let mut c = parse_coeff(coeff_s)?;
        if neg {
            c = -c;
        }
        let mut idx = Vec::new();
        if !mono_s.is_empty() {
            for f in mono_s.split(['^', '∧']) {
                let f = f.trim();
                let k: usize = f
                    .strip_prefix('w')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| perr(format!("malformed basis symbol `{f}`")))?;
                if k >= dim {
                    return Err(perr(format!("`w{k}` out of range for dimension {dim}")));
                }
                idx.push(k);
            }
        }
        if idx.len() != degree {
            return Err(ExteriorError::Degree {
                expected: degree,
                got: idx.len(),
            });
        }
        out = out.add(&PForm::monomial(dim, &idx, c));
    }
    Ok(out)
}

pub fn parse_one_form(expr: &str, dim: usize) -> Result<PForm, ExteriorError> {
    parse_form(expr, dim, 1)
}

fn is_negative(c: &CScalar) -> bool {
    c.re.signum() < 0 || (c.re.is_zero() && c.im.signum() < 0)
}

fn coeff_text(c: &CScalar, bare: bool) -> String {
    let one = Scalar::one();
    if c.im.is_zero() {
        if c.re == one && !bare {
            String::new()
        } else {
            format!("{} ", c.re)
        }
    } else if c.re.is_zero() {
        if c.im == one {
            "i ".into()
        } else {
            format!("{}i ", c.im)
        }
    } else {
        format!("({c}) ")
    }
}

/// Inverse of [`parse_form`].
pub fn format_form(f: &PForm) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (n, (&m, c)) in f.terms().iter().enumerate() {
        let neg = is_negative(c);
        let mag = if neg { -c } else { c.clone() };
        if n == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono: Vec<String> = (0..f.dim())
            .filter(|k| m & (1 << k) != 0)
            .map(|k| format!("w{k}"))
            .collect();
        let coeff = coeff_text(&mag, mono.is_empty());
        if mono.is_empty() {
            s.push_str(coeff.trim_end());
        } else {
            s.push_str(&coeff);
            s.push_str(&mono.join("^"));
        }
    }
    s
}
