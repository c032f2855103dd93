//! Exhaustive search for integrable coframes, with its own Gaussian-integer
//! exterior algebra. Nothing here calls into the library's form code.

use std::ops::{Add, Mul, Neg, Sub};

use nilcx::exact::{CScalar, Matrix, Scalar};
use nilcx::exterior::PForm;
use nilcx::liealg::LieAlgebra;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gi(pub i64, pub i64);

impl Gi {
    pub fn conj(self) -> Self {
        Gi(self.0, -self.1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0 && self.1 == 0
    }
}

impl Add for Gi {
    type Output = Gi;
    fn add(self, o: Gi) -> Gi {
        Gi(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for Gi {
    type Output = Gi;
    fn sub(self, o: Gi) -> Gi {
        Gi(self.0 - o.0, self.1 - o.1)
    }
}

impl Neg for Gi {
    type Output = Gi;
    fn neg(self) -> Gi {
        Gi(-self.0, -self.1)
    }
}

impl Mul for Gi {
    type Output = Gi;
    fn mul(self, o: Gi) -> Gi {
        Gi(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
}

/// The coefficient alphabet.
pub const ALPHABET: [Gi; 5] = [Gi(0, 0), Gi(1, 0), Gi(-1, 0), Gi(0, 1), Gi(0, -1)];

/// Sparse form: `(mask, coefficient)` with distinct masks.
pub type Form = Vec<(u32, Gi)>;

fn sign(a: u32, b: u32) -> i64 {
    let mut swaps = 0;
    for i in 0..32 {
        if b & (1 << i) != 0 {
            swaps += (a >> (i + 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn wedge(a: &Form, b: &Form) -> Form {
    let mut terms: Vec<(u32, Gi)> = Vec::with_capacity(a.len() * b.len());
    for &(ma, ca) in a {
        for &(mb, cb) in b {
            if ma & mb == 0 {
                let p = ca * cb;
                terms.push((ma | mb, if sign(ma, mb) > 0 { p } else { -p }));
            }
        }
    }
    collect(terms)
}

/// Sort by mask, merge equal masks, drop zeros.
fn collect(mut terms: Vec<(u32, Gi)>) -> Form {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out: Form = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = last.1 + c,
            _ => out.push((m, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

fn conj(a: &Form) -> Form {
    a.iter().map(|&(m, c)| (m, c.conj())).collect()
}

pub fn one_form(coeffs: &[Gi]) -> Form {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, &c)| (1u32 << k, c))
        .collect()
}

/// `dw_k(X_i, X_j) = −w_k([X_i, X_j])`, read straight off the constants.
pub struct Brute {
    dw: Vec<Form>,
}

impl Brute {
    pub fn new(g: &LieAlgebra) -> Self {
        let dim = g.dim();
        let mut dw = vec![Form::new(); dim];
        for (&(i, j), row) in g.constants() {
            for (&k, c) in row {
                assert!(c.is_integer(), "integer structure constants expected");
                let v: i64 = c.numer().try_into().unwrap();
                dw[k].push(((1 << i) | (1 << j), Gi(-v, 0)));
            }
        }
        Brute { dw }
    }

    pub fn d1(&self, theta: &Form) -> Form {
        let mut terms = Vec::new();
        for &(m, c) in theta {
            for &(mm, v) in &self.dw[m.trailing_zeros() as usize] {
                terms.push((mm, c * v));
            }
        }
        collect(terms)
    }

    /// `d` of a wedge of 1-forms by the Leibniz rule.
    pub fn d_product(&self, thetas: &[Form]) -> Form {
        let mut terms = Vec::new();
        for k in 0..thetas.len() {
            let mut t: Form = vec![(0, Gi(if k % 2 == 0 { 1 } else { -1 }, 0))];
            for (i, th) in thetas.iter().enumerate() {
                t = if i == k { wedge(&t, &self.d1(th)) } else { wedge(&t, th) };
            }
            terms.extend(t);
        }
        collect(terms)
    }

    /// `Ω ∧ Ω̄ ≠ 0` and `dθ ∧ Ω = 0` for every `θ` — the classical
    /// `d Λ^{1,0} ⊂ ⟨Λ^{1,0}⟩`.
    pub fn is_integrable_coframe(&self, thetas: &[Form]) -> bool {
        let omega = thetas.iter().fold(vec![(0u32, Gi(1, 0))], |acc, t| wedge(&acc, t));
        if wedge(&omega, &conj(&omega)).is_empty() {
            return false;
        }
        thetas.iter().all(|t| wedge(&self.d1(t), &omega).is_empty())
    }
}

/// Coordinates spanning `V_1 = ann [g, g]`, when `[g, g]` is spanned by basis
/// vectors.
pub fn v1_coordinates(g: &LieAlgebra) -> Vec<usize> {
    let dim = g.dim();
    let mut hit = vec![false; dim];
    let mut images = Vec::new();
    for row in g.constants().values() {
        let mut v = vec![Scalar::int(0); dim];
        for (&k, c) in row {
            hit[k] = true;
            v[k] = c.clone();
        }
        images.push(v);
    }
    let rank = if images.is_empty() { 0 } else { Matrix::from_rows(images).rank() };
    assert_eq!(rank, hit.iter().filter(|&&h| h).count(), "[g, g] not spanned by basis vectors");
    (0..dim).filter(|&k| !hit[k]).collect()
}

/// Column order used by [`search`]: `V_1` coordinates last.
fn column_order(g: &LieAlgebra) -> Vec<usize> {
    let v1 = v1_coordinates(g);
    let mut order: Vec<usize> = (0..g.dim()).filter(|k| !v1.contains(k)).collect();
    order.extend(&v1);
    order
}

/// Whether the span of `thetas` is one of the subspaces [`search`] visits.
pub fn in_search_space(g: &LieAlgebra, thetas: &[PForm]) -> bool {
    let order = column_order(g);
    let rows: Vec<Vec<CScalar>> = thetas
        .iter()
        .map(|t| {
            let c = t.coeffs();
            order.iter().map(|&k| c[k].clone()).collect()
        })
        .collect();
    let (r, _) = Matrix::from_rows(rows).rref();
    let alphabet: Vec<CScalar> = ALPHABET.iter().map(|a| CScalar::int(a.0, a.1)).collect();
    r.to_rows().iter().flatten().all(|x| alphabet.contains(x))
}

pub struct SearchResult {
    pub candidates: usize,
    pub found: usize,
    pub first: Option<Vec<Vec<Gi>>>,
}

/// Every `n`-dimensional `L ⊂ g* ⊗ ℂ` whose reduced echelon basis has
/// entries in the alphabet, coordinates ordered with `V_1` last.
///
/// A nilpotent algebra with a complex structure has a nonzero closed
/// (1,0)-form, so `L ∩ (V_1 ⊗ ℂ) ≠ 0`: the last pivot sits on a `V_1`
/// coordinate. Only those pivot patterns are enumerated.
pub fn search(g: &LieAlgebra, stop_at_first: bool) -> SearchResult {
    let b = Brute::new(g);
    let dim = g.dim();
    let n = dim / 2;
    let order = column_order(g);
    let first_v1 = dim - v1_coordinates(g).len();

    let mut candidates = 0;
    let mut found = 0;
    let mut first = None;
    for pivots in combinations(dim, n) {
        if *pivots.last().unwrap() < first_v1 {
            continue;
        }
        // (row, position) slots that range over the alphabet.
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..dim).filter(|q| !pivots.contains(q)).map(move |q| (r, q)))
            .collect();
        let mut digits = vec![0usize; slots.len()];
        loop {
            candidates += 1;
            let mut rows = vec![vec![Gi::default(); dim]; n];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][order[p]] = Gi(1, 0);
            }
            for (&(r, q), &dgt) in slots.iter().zip(&digits) {
                rows[r][order[q]] = ALPHABET[dgt];
            }
            let forms: Vec<Form> = rows.iter().map(|r| one_form(r)).collect();
            if b.is_integrable_coframe(&forms) {
                found += 1;
                if first.is_none() {
                    first = Some(rows);
                }
                if stop_at_first {
                    return SearchResult { candidates, found, first };
                }
            }
            // Odometer.
            let mut k = 0;
            while k < digits.len() && digits[k] == ALPHABET.len() - 1 {
                digits[k] = 0;
                k += 1;
            }
            if k == digits.len() {
                break;
            }
            digits[k] += 1;
        }
    }
    SearchResult { candidates, found, first }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn to_pform(row: &[Gi]) -> PForm {
    let c: Vec<CScalar> = row.iter().map(|g| CScalar::int(g.0, g.1)).collect();
    PForm::from_coeffs(&c)
}

pub fn from_pform(f: &PForm) -> Vec<Gi> {
    f.coeffs()
        .iter()
        .map(|c| {
            assert!(c.re.is_integer() && c.im.is_integer());
            Gi(c.re.numer().try_into().unwrap(), c.im.numer().try_into().unwrap())
        })
        .collect()
}
