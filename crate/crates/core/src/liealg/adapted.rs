//! Recognition of adapted bases for quasi-filiform algebras.
//!
//! Each shape lists, per bracket `[Xi, Xj]`, a fixed part and the range of
//! basis vectors that may carry free coefficients; any bracket not listed
//! must vanish.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{AlgebraClass, LieAlgebra};
use crate::exact::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdaptedCheck {
    pub adapted: bool,
    /// Which shape matched (1–4).
    pub case: Option<u8>,
    pub reason: String,
}

#[derive(Default)]
struct Rule {
    fixed: BTreeMap<usize, Scalar>,
    free: Vec<usize>,
}

struct Shape {
    case: u8,
    rules: BTreeMap<(usize, usize), Rule>,
}

impl Shape {
    fn new(case: u8) -> Self {
        Shape {
            case,
            rules: BTreeMap::new(),
        }
    }

    fn fixed(&mut self, i: usize, j: usize, k: usize, c: i64) {
        self.rules
            .entry((i, j))
            .or_default()
            .fixed
            .insert(k, Scalar::int(c));
    }

    fn free(&mut self, i: usize, j: usize, ks: impl IntoIterator<Item = usize>) {
        self.rules.entry((i, j)).or_default().free.extend(ks);
    }

    /// First violated constraint, if any.
    fn violation(&self, g: &LieAlgebra) -> Option<String> {
        let n = g.dim();
        let empty = Rule::default();
        for i in 0..n {
            for j in i + 1..n {
                let rule = self.rules.get(&(i, j)).unwrap_or(&empty);
                let actual: BTreeMap<usize, Scalar> = g.bracket_basis(i, j).into_iter().collect();
                for k in 0..n {
                    let a = actual.get(&k).cloned().unwrap_or_default();
                    let want = rule.fixed.get(&k).cloned().unwrap_or_default();
                    if rule.free.contains(&k) && !rule.fixed.contains_key(&k) {
                        continue;
                    }
                    if a != want {
                        return Some(format!(
                            "case {}: [{}, {}] has coefficient {a} on {} where the shape requires {want}",
                            self.case,
                            g.label(i),
                            g.label(j),
                            g.label(k)
                        ));
                    }
                }
            }
        }
        None
    }
}

fn sign(i: usize) -> i64 {
    if (i - 1) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn shape_l_plus_r(n: usize) -> Shape {
    let d = 2 * n;
    let mut s = Shape::new(1);
    for i in 1..=d - 3 {
        s.fixed(0, i, i + 1, 1);
    }
    for i in 1..d {
        for j in i + 1..=(d - 3).saturating_sub(i) {
            s.free(i, j, i + j + 1..=d - 2);
        }
    }
    for i in 1..=d.saturating_sub(4) {
        s.free(i, d - 1, i + 2..=d - 2);
    }
    s
}

fn shape_l_2n_r(n: usize, r: usize) -> Shape {
    let d = 2 * n;
    let top = d - 1;
    let mut s = Shape::new(2);
    for i in 1..=d - 3 {
        s.fixed(0, i, i + 1, 1);
    }
    s.free(0, top, r + 2..=d - 2);
    for i in 1..d {
        for j in i + 1..d - 1 {
            if j < r.saturating_sub(i) {
                s.free(i, j, i + j + 1..=top);
            } else if j <= (d - 3).saturating_sub(i) && r < i + j {
                s.free(i, j, i + j + 1..=d - 2);
            }
        }
    }
    for i in 1..=(d - 3).saturating_sub(r) {
        s.free(i, top, r + i + 1..=d - 2);
    }
    s.fixed(1, r - 1, top, 1);
    for i in 2..=(r - 1) / 2 {
        s.fixed(i, r - i, top, sign(i));
        s.free(i, r - i, r + 1..=d - 2);
    }
    s
}

fn shape_t_2n(n: usize) -> Shape {
    let d = 2 * n;
    let top = d - 1;
    let mut s = Shape::new(3);
    for i in 1..=d - 4 {
        s.fixed(0, i, i + 1, 1);
    }
    s.fixed(0, top, d - 2, 1);
    for i in 1..d {
        for j in i + 1..=(d - 4).saturating_sub(i) {
            s.free(i, j, i + j + 1..=top);
        }
    }
    s.fixed(1, d - 4, top, 1);
    for i in 2..=n - 2 {
        s.fixed(i, d - 3 - i, top, sign(i));
        s.free(i, d - 3 - i, [d - 2]);
    }
    // Brackets landing on X_{2n−2} with total weight 2n−2. They are forced by
    // Jacobi together with [X0, X_{2n−1}] = X_{2n−2} and occur in the graded
    // model itself.
    for i in 1..=n - 2 {
        s.fixed(i, d - 2 - i, d - 2, sign(i) * (n - 1 - i) as i64);
    }
    s
}

fn shape_n6_3() -> Shape {
    let mut s = Shape::new(4);
    for i in 1..=3 {
        s.fixed(0, i, i + 1, 1);
    }
    s.fixed(1, 2, 5, 1);
    s.fixed(1, 5, 4, 1);
    s
}

/// Does the stored basis realize one of the four adapted shapes?
pub fn is_adapted_basis(g: &LieAlgebra) -> AdaptedCheck {
    let rep = g.report();
    let d = g.dim();
    let no = |reason: String| AdaptedCheck {
        adapted: false,
        case: None,
        reason,
    };
    let AlgebraClass::QuasiFiliform { r } = rep.class else {
        return no(format!("not quasi-filiform ({})", rep.class));
    };
    if d % 2 != 0 {
        return no("odd dimension".into());
    }
    let n = d / 2;
    let mut shapes = Vec::new();
    if r == 1 {
        shapes.push(shape_l_plus_r(n));
    } else {
        if n >= 3 && r % 2 == 1 && r >= 3 && r <= d - 3 {
            shapes.push(shape_l_2n_r(n, r));
        }
        if n >= 3 && r == d - 3 {
            shapes.push(shape_t_2n(n));
        }
        if d == 6 && r == 3 {
            shapes.push(shape_n6_3());
        }
    }
    let mut first_failure = None;
    for s in &shapes {
        match s.violation(g) {
            None => {
                return AdaptedCheck {
                    adapted: true,
                    case: Some(s.case),
                    reason: format!("matches case {}", s.case),
                }
            }
            Some(why) => {
                first_failure.get_or_insert(why);
            }
        }
    }
    no(first_failure.unwrap_or_else(|| format!("no adapted shape for form t{r}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn catalog_models_are_adapted() {
        assert_eq!(is_adapted_basis(&catalog::l_plus_r(3).unwrap()).case, Some(1));
        assert_eq!(is_adapted_basis(&catalog::l_2n_r(4, 5).unwrap()).case, Some(2));
        assert_eq!(is_adapted_basis(&catalog::t_2n(4).unwrap()).case, Some(3));
        assert_eq!(is_adapted_basis(&catalog::n6_3()).case, Some(4));
        assert!(!is_adapted_basis(&catalog::filiform(6).unwrap()).adapted);
    }
}
