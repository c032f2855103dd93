//! Sparse multivariate polynomials over ℚ(i) and 1-forms/p-forms whose
//! coefficients are such polynomials.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::exact::{CScalar, Scalar, UPoly};
use crate::exterior::{wedge_sign, Mask, PForm};

/// Sorted `(variable, exponent)` pairs.
pub type Monomial = Vec<(usize, u32)>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, CScalar>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![], c);
        p
    }

    pub fn var(v: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(v, 1)], CScalar::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: CScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, CScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-CScalar::one())
    }

    pub fn scale(&self, c: &CScalar) -> Self {
        let mut p = Self::zero();
        for (m, x) in &self.terms {
            p.add_term(m.clone(), x * c);
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                p.add_term(mono_mul(a, b), x * y);
            }
        }
        p
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|&(v, _)| v))
            .collect()
    }

    /// Replace `v` by `val`.
    pub fn substitute(&self, v: usize, val: &MPoly) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            let e = m.iter().find(|(x, _)| *x == v).map_or(0, |&(_, e)| e);
            let rest: Monomial = m.iter().copied().filter(|(x, _)| *x != v).collect();
            let mut term = Self::zero();
            term.add_term(rest, c.clone());
            for _ in 0..e {
                term = term.mul(val);
            }
            p = p.add(&term);
        }
        p
    }

    /// `self / v` when `v` divides every monomial.
    pub fn divide_by_var(&self, v: usize) -> Option<Self> {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            let pos = m.iter().position(|&(x, _)| x == v)?;
            let mut m = m.clone();
            if m[pos].1 == 1 {
                m.remove(pos);
            } else {
                m[pos].1 -= 1;
            }
            p.add_term(m, c.clone());
        }
        Some(p)
    }

    /// Read as `Σ_u a_u(t) · u` with each `u` in `linear` occurring to the
    /// first power, `t` the only other variable, and all coefficients real.
    pub fn as_linear_in(&self, linear: &BTreeSet<usize>, t: usize) -> Option<BTreeMap<usize, UPoly>> {
        let mut rows: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (m, c) in &self.terms {
            if !c.is_real() {
                return None;
            }
            let mut u = None;
            let mut deg = 0;
            for &(v, e) in m {
                if v == t {
                    deg = e as usize;
                } else if linear.contains(&v) && e == 1 && u.is_none() {
                    u = Some(v);
                } else {
                    return None;
                }
            }
            let e = rows.entry(u?).or_default().entry(deg).or_insert_with(Scalar::zero);
            *e += &c.re;
        }
        Some(
            rows.into_iter()
                .map(|(u, cs)| {
                    let top = cs.keys().max().copied().unwrap_or(0);
                    let mut v = vec![Scalar::zero(); top + 1];
                    for (k, c) in cs {
                        v[k] = c;
                    }
                    (u, UPoly::new(v))
                })
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        )
    }

    /// Value with every variable assigned.
    pub fn eval(&self, vals: &dyn Fn(usize) -> CScalar) -> CScalar {
        let mut s = CScalar::zero();
        for (m, c) in &self.terms {
            let mut x = c.clone();
            for &(v, e) in m {
                x = &x * &vals(v).pow(e);
            }
            s += &x;
        }
        s
    }

    /// Divide by the coefficient of the leading monomial.
    pub fn monic(&self) -> Self {
        match self.terms.values().next() {
            Some(c) => self.scale(&c.recip().unwrap()),
            None => self.clone(),
        }
    }

    /// `2 b3*l1 - b5*l0`-style text.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        // Highest total degree first reads most naturally.
        let mut terms: Vec<(&Monomial, &CScalar)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(m.iter().map(|e| e.1).sum::<u32>()));
        for (n, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.re.signum() < 0 || (c.re.is_zero() && c.im.signum() < 0);
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let vars: Vec<String> = m
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        names[v].clone()
                    } else {
                        format!("{}^{e}", names[v])
                    }
                })
                .collect();
            let coeff = if mag.is_one() && !vars.is_empty() {
                String::new()
            } else if mag.is_real() || (mag.re.is_zero() && !vars.is_empty()) {
                format!("{mag}")
            } else {
                format!("({mag})")
            };
            match (coeff.is_empty(), vars.is_empty()) {
                (true, _) => s.push_str(&vars.join("*")),
                (false, true) => s.push_str(&coeff),
                (false, false) => s.push_str(&format!("{coeff}*{}", vars.join("*"))),
            }
        }
        s
    }
}

/// A `p`-form with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymForm {
    pub dim: usize,
    pub terms: BTreeMap<Mask, MPoly>,
}

impl SymForm {
    pub fn zero(dim: usize) -> Self {
        SymForm {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        let mut f = Self::zero(dim);
        f.terms.insert(0, MPoly::constant(CScalar::one()));
        f
    }

    fn add_term(&mut self, m: Mask, p: MPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&p);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `Σ_k x_k · f_k` for variables `x_k` and concrete forms `f_k`.
    pub fn combination(dim: usize, parts: &[(usize, PForm)]) -> Self {
        let mut f = Self::zero(dim);
        for (v, form) in parts {
            for (&m, c) in form.terms() {
                f.add_term(m, MPoly::var(*v).scale(c));
            }
        }
        f
    }

    pub fn wedge(&self, o: &Self) -> Self {
        let mut f = Self::zero(self.dim);
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                if let Some(neg) = wedge_sign(a, b) {
                    let p = x.mul(y);
                    f.add_term(a | b, if neg { p.neg() } else { p });
                }
            }
        }
        f
    }

    pub fn map(&self, op: impl Fn(&MPoly) -> MPoly) -> Self {
        let mut f = Self::zero(self.dim);
        for (&m, p) in &self.terms {
            f.add_term(m, op(p));
        }
        f
    }
}
