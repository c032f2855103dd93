//! Line-oriented algebra files:
//!
//! ```text
//! dim 6
//! basis X0 X1 X2 X3 X4 X5
//! bracket X0 X1 = 1 X2
//! bracket X1 X5 = 1 X4   # comment
//! ```

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{LieAlgebra, LieError, RawAlgebra};
use crate::exact::Scalar;

fn err(line: usize, col: usize, msg: impl Into<String>) -> LieError {
    LieError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((b, &s[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out.into_iter()
        .map(|(b, t)| (s[..b].chars().count() + 1, t))
        .collect()
}

/// Parse the file grammar into unchecked constants.
pub fn parse_raw(text: &str) -> Result<RawAlgebra, LieError> {
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut constants: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();

    for (ln, full) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = full.split('#').next().unwrap();
        let toks = tokens(line);
        let Some(&(c0, kw)) = toks.first() else {
            continue;
        };
        match kw {
            "dim" => {
                if dim.is_some() {
                    return Err(err(ln, c0, "duplicate `dim` line"));
                }
                let &(c, v) = toks.get(1).ok_or_else(|| err(ln, c0, "`dim` needs a value"))?;
                let n: usize = v
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| err(ln, c, format!("invalid dimension `{v}`")))?;
                if let Some(&(c, _)) = toks.get(2) {
                    return Err(err(ln, c, "unexpected token after dimension"));
                }
                dim = Some(n);
            }
            "basis" => {
                let n = dim.ok_or_else(|| err(ln, c0, "`basis` before `dim`"))?;
                if labels.is_some() {
                    return Err(err(ln, c0, "duplicate `basis` line"));
                }
                let ls: Vec<String> = toks[1..].iter().map(|t| t.1.to_string()).collect();
                if ls.len() != n {
                    return Err(err(ln, c0, format!("expected {n} basis labels, found {}", ls.len())));
                }
                for (i, &(c, t)) in toks[1..].iter().enumerate() {
                    if ls[..i].iter().any(|x| x == t) {
                        return Err(err(ln, c, format!("duplicate label `{t}`")));
                    }
                }
                labels = Some(ls);
            }
            "bracket" => {
                let n = dim.ok_or_else(|| err(ln, c0, "`bracket` before `dim`"))?;
                let ls = labels.get_or_insert_with(|| (0..n).map(|i| format!("X{i}")).collect());
                let index = |&(c, t): &(usize, &str)| {
                    ls.iter()
                        .position(|l| l == t)
                        .ok_or_else(|| err(ln, c, format!("unknown basis element `{t}` (index out of range)")))
                };
                if toks.len() < 4 || toks[3].1 != "=" {
                    return Err(err(ln, c0, "expected `bracket Xi Xj = c Xk + …`"));
                }
                let i = index(&toks[1])?;
                let j = index(&toks[2])?;
                if i >= j {
                    return Err(err(ln, toks[1].0, "i < j required"));
                }
                if let Some(prev) = seen.insert((i, j), ln) {
                    return Err(err(
                        ln,
                        c0,
                        format!("duplicate bracket [{}, {}] (first on line {prev})", ls[i], ls[j]),
                    ));
                }
                let rhs = &toks[4..];
                let mut row = BTreeMap::new();
                let mut k = 0;
                if rhs.len() == 1 && rhs[0].1 == "0" {
                    k = 1;
                }
                while k < rhs.len() {
                    let (cc, ct) = rhs[k];
                    let coeff: Scalar = ct
                        .parse()
                        .map_err(|_| err(ln, cc, format!("malformed rational `{ct}`")))?;
                    let basis_tok = rhs
                        .get(k + 1)
                        .ok_or_else(|| err(ln, cc, "coefficient without basis element"))?;
                    let target = index(basis_tok)?;
                    if row.contains_key(&target) {
                        return Err(err(ln, basis_tok.0, "basis element repeated in one bracket"));
                    }
                    if !coeff.is_zero() {
                        row.insert(target, coeff);
                    }
                    k += 2;
                    if k < rhs.len() {
                        if rhs[k].1 != "+" {
                            return Err(err(ln, rhs[k].0, "expected `+` between terms"));
                        }
                        k += 1;
                        if k == rhs.len() {
                            return Err(err(ln, rhs[k - 1].0, "dangling `+`"));
                        }
                    }
                }
                if !row.is_empty() {
                    constants.insert((i, j), row);
                }
            }
            other => return Err(err(ln, c0, format!("unknown keyword `{other}`"))),
        }
    }
    let dim = dim.ok_or_else(|| err(1, 1, "missing `dim` line"))?;
    Ok(RawAlgebra {
        dim,
        labels: labels.unwrap_or_else(|| (0..dim).map(|i| format!("X{i}")).collect()),
        constants,
    })
}

/// Parse and validate.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, LieError> {
    LieAlgebra::new(parse_raw(text)?)
}

/// Canonical text: `dim`, `basis`, then one `bracket` line per nonzero pair
/// with every coefficient written out.
pub fn print_algebra(g: &LieAlgebra) -> String {
    let mut s = format!("dim {}\nbasis {}\n", g.dim(), g.labels().join(" "));
    for (&(i, j), row) in g.constants() {
        let terms: Vec<String> = row
            .iter()
            .map(|(&k, c)| format!("{c} {}", g.label(k)))
            .collect();
        s.push_str(&format!(
            "bracket {} {} = {}\n",
            g.label(i),
            g.label(j),
            terms.join(" + ")
        ));
    }
    s
}
