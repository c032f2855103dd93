//! Spinors `Λg* ⊗ ℂ` under the Clifford action of `g ⊕ g*`, their
//! annihilators, the canonical form `Ω ∧ exp(B + iω)`, and integrability.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{CScalar, Matrix, Scalar};
use crate::exterior::{d_mask, format_form, interior_mask, wedge_sign, Mask, PForm};
use crate::liealg::{LieAlgebra, Subspace};
use crate::structures::{gcs_type, is_isotropic, GeneralizedVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpinorError {
    #[error("zero spinor")]
    Zero,
    #[error("not maximal isotropic")]
    NotMaximalIsotropic,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    Ambient(usize, usize),
    #[error("ambient dimension {0} exceeds the cap {1}")]
    TooLarge(usize, usize),
}

/// Default cap on `dim g`; spinor space has dimension `2^dim`.
pub const MAX_DIM: usize = 10;

/// A mixed-degree element of `Λg* ⊗ ℂ`.
#[derive(Clone, PartialEq, Eq)]
pub struct Spinor {
    dim: usize,
    terms: BTreeMap<Mask, CScalar>,
}

impl Spinor {
    pub fn zero(dim: usize) -> Self {
        Spinor {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::from_form(&PForm::one(dim))
    }

    pub fn from_form(f: &PForm) -> Self {
        Spinor {
            dim: f.dim(),
            terms: f.terms().clone(),
        }
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Mask, CScalar)>) -> Self {
        let mut s = Self::zero(dim);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    fn add_term(&mut self, m: Mask, c: CScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(CScalar::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Mask, CScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree-`p` part.
    pub fn component(&self, p: usize) -> PForm {
        PForm::from_terms(
            self.dim,
            p,
            self.terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == p)
                .map(|(&m, c)| (m, c.clone())),
        )
    }

    /// One form per degree `0..=dim`.
    pub fn components(&self) -> Vec<PForm> {
        (0..=self.dim).map(|p| self.component(p)).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (&m, c) in &o.terms {
            s.add_term(m, c.clone());
        }
        s
    }

    pub fn scale(&self, c: &CScalar) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(&m, x)| (m, x * c)))
    }

    /// `f ∧ self`.
    pub fn wedge_left(&self, f: &PForm) -> Self {
        let mut s = Self::zero(self.dim);
        for (&a, x) in f.terms() {
            for (&b, y) in &self.terms {
                if let Some(neg) = wedge_sign(a, b) {
                    let p = x * y;
                    s.add_term(a | b, if neg { -p } else { p });
                }
            }
        }
        s
    }

    pub fn interior_basis(&self, k: usize) -> Self {
        let mut s = Self::zero(self.dim);
        for (&m, c) in &self.terms {
            if let Some((r, neg)) = interior_mask(k, m) {
                s.add_term(r, if neg { -c } else { c.clone() });
            }
        }
        s
    }

    fn wedge_basis(&self, k: usize) -> Self {
        let bit: Mask = 1 << k;
        let mut s = Self::zero(self.dim);
        for (&m, c) in &self.terms {
            if let Some(neg) = wedge_sign(bit, m) {
                s.add_term(m | bit, if neg { -c } else { c.clone() });
            }
        }
        s
    }

    pub fn d(&self, g: &LieAlgebra) -> Self {
        let mut s = Self::zero(self.dim);
        for (&m, c) in &self.terms {
            for (r, x) in d_mask(g, m) {
                s.add_term(r, c.scale(&x));
            }
        }
        s
    }

    /// Divide by the first nonzero coefficient in degree-lex order.
    pub fn normalized(&self) -> Result<Self, SpinorError> {
        let lead = self
            .terms
            .iter()
            .min_by_key(|(&m, _)| (m.count_ones(), m.reverse_bits()))
            .map(|(_, c)| c.clone())
            .ok_or(SpinorError::Zero)?;
        Ok(self.scale(&lead.recip().expect("nonzero")))
    }

    /// Equality up to a nonzero complex factor.
    pub fn projectively_equal(&self, o: &Self) -> bool {
        match (self.normalized(), o.normalized()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| {
                let s = format_form(c);
                if s.contains(" + ") || s.contains(" - ") {
                    format!("({s})")
                } else {
                    s
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spinor({self})")
    }
}

impl Serialize for Spinor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `(X + ξ)∘ρ = i_X ρ + ξ ∧ ρ`.
pub fn clifford_act(v: &GeneralizedVector<CScalar>, r: &Spinor) -> Spinor {
    assert_eq!(v.dim(), r.dim, "ambient mismatch");
    let mut s = Spinor::zero(r.dim);
    for k in 0..r.dim {
        if !v.vec[k].is_zero() {
            s = s.add(&r.interior_basis(k).scale(&v.vec[k]));
        }
        if !v.form[k].is_zero() {
            s = s.add(&r.wedge_basis(k).scale(&v.form[k]));
        }
    }
    s
}

/// Images `e_j ∘ ρ` of the `2·dim` basis vectors of the double.
fn clifford_columns(r: &Spinor) -> Vec<Spinor> {
    (0..r.dim)
        .map(|k| r.interior_basis(k))
        .chain((0..r.dim).map(|k| r.wedge_basis(k)))
        .collect()
}

/// Columns as a dense matrix over the monomials they touch.
fn dense(cols: &[Spinor], extra: Option<&Spinor>) -> Matrix<CScalar> {
    let mut rows: BTreeMap<Mask, usize> = BTreeMap::new();
    for s in cols.iter().chain(extra) {
        for &m in s.terms.keys() {
            let n = rows.len();
            rows.entry(m).or_insert(n);
        }
    }
    let mut a = Matrix::zeros(rows.len(), cols.len() + extra.is_some() as usize);
    for (j, s) in cols.iter().chain(extra).enumerate() {
        for (m, c) in &s.terms {
            a.set(rows[m], j, c.clone());
        }
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicSubspace {
    pub space: Subspace<CScalar>,
}

impl IsotropicSubspace {
    /// Wrap `space` after checking isotropy.
    pub fn new(space: Subspace<CScalar>) -> Option<Self> {
        is_isotropic(&space).then_some(IsotropicSubspace { space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_maximal(&self) -> bool {
        2 * self.space.dim() == self.space.ambient()
    }

    pub fn basis(&self) -> Vec<GeneralizedVector<CScalar>> {
        self.space
            .basis()
            .iter()
            .map(|v| GeneralizedVector::from_stacked(v))
            .collect()
    }

    pub fn meets_conjugate_trivially(&self) -> bool {
        let n = self.space.ambient();
        let conj = Subspace::span(
            n,
            self.space.basis().iter().map(|v| v.iter().map(|c| c.conj()).collect()),
        );
        self.space.sum(&conj).dim() == 2 * self.space.dim()
    }
}

#[derive(Debug, Clone)]
pub struct Annihilator {
    pub space: IsotropicSubspace,
    pub pure: bool,
}

/// `L_ρ = {v : v∘ρ = 0}`.
pub fn annihilator(r: &Spinor) -> Result<Annihilator, SpinorError> {
    if r.is_zero() {
        return Err(SpinorError::Zero);
    }
    let a = dense(&clifford_columns(r), None);
    let l = Subspace::span(2 * r.dim, a.nullspace());
    let space = IsotropicSubspace::new(l).expect("annihilators are isotropic");
    let pure = space.is_maximal();
    Ok(Annihilator { space, pure })
}

/// `Ω ∧ exp(B + iω)` with `Ω = θ_1 ∧ … ∧ θ_k`.
pub fn spinor_from_data(dim: usize, omega_forms: &[PForm], b: &PForm, w: &PForm) -> Spinor {
    let omega = omega_forms
        .iter()
        .fold(PForm::one(dim), |acc, t| acc.wedge(t));
    let f = b.add(&w.scale(&CScalar::i()));
    let mut e = Spinor::one(dim);
    let mut term = PForm::one(dim);
    let mut fact = Scalar::one();
    for s in 1..=dim / 2 {
        term = term.wedge(&f);
        fact = fact * Scalar::int(s as i64);
        if term.is_zero() {
            break;
        }
        e = e.add(&Spinor::from_form(&term.scale(&CScalar::real(fact.recip().unwrap()))));
    }
    e.wedge_left(&omega)
}

/// `ω^{n−k} ∧ Ω ∧ Ω̄ ≠ 0` on `dim g = 2n`.
pub fn cond_nondegenerate(dim: usize, omega_forms: &[PForm], w: &PForm) -> bool {
    let k = omega_forms.len();
    let n = dim / 2;
    if dim % 2 == 1 || k > n {
        return false;
    }
    let omega = omega_forms
        .iter()
        .fold(PForm::one(dim), |acc, t| acc.wedge(t));
    !w.wedge_pow(n - k)
        .wedge(&omega)
        .wedge(&omega.conj())
        .is_zero()
}

#[derive(Debug, Clone, Serialize)]
pub struct Integrability {
    pub closed: bool,
    /// Some `v` with `dρ = v∘ρ`, stacked `(X; ξ)`.
    pub solution: Option<Vec<CScalar>>,
}

/// Decide `dρ = v∘ρ` for some `v` in the complexified double.
pub fn integrability(g: &LieAlgebra, r: &Spinor) -> Result<Integrability, SpinorError> {
    if r.is_zero() {
        return Err(SpinorError::Zero);
    }
    if r.dim != g.dim() {
        return Err(SpinorError::Ambient(r.dim, g.dim()));
    }
    let dr = r.d(g);
    if dr.is_zero() {
        return Ok(Integrability {
            closed: true,
            solution: Some(vec![CScalar::zero(); 2 * r.dim]),
        });
    }
    let cols = clifford_columns(r);
    let a = dense(&cols, Some(&dr));
    let m = a.ncols() - 1;
    let coeff = Matrix::from_rows(a.to_rows().into_iter().map(|row| row[..m].to_vec()).collect());
    let rhs: Vec<CScalar> = a.to_rows().into_iter().map(|row| row[m].clone()).collect();
    Ok(Integrability {
        closed: false,
        solution: coeff.solve(&rhs),
    })
}

/// Incremental sparse row echelon form, rows keyed by pivot column.
struct SparseEchelon {
    rows: HashMap<usize, BTreeMap<usize, CScalar>>,
}

impl SparseEchelon {
    fn new() -> Self {
        SparseEchelon { rows: HashMap::new() }
    }

    fn insert(&mut self, mut row: BTreeMap<usize, CScalar>) {
        loop {
            let Some((&p, lead)) = row.iter().next() else { return };
            let lead = lead.clone();
            match self.rows.get(&p) {
                Some(piv) => {
                    for (&c, x) in piv {
                        let e = row.entry(c).or_insert_with(CScalar::zero);
                        *e -= &(&lead * x);
                        if e.is_zero() {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = lead.recip().expect("nonzero");
                    for x in row.values_mut() {
                        *x = &*x * &inv;
                    }
                    self.rows.insert(p, row);
                    return;
                }
            }
        }
    }

    /// The unique kernel vector, if the kernel in `ncols` unknowns is a line.
    fn kernel_line(&self, ncols: usize) -> Option<Vec<CScalar>> {
        let free: Vec<usize> = (0..ncols).filter(|c| !self.rows.contains_key(c)).collect();
        if free.len() != 1 {
            return None;
        }
        let mut x = vec![CScalar::zero(); ncols];
        x[free[0]] = CScalar::one();
        let mut pivots: Vec<usize> = self.rows.keys().copied().collect();
        pivots.sort_unstable_by(|a, b| b.cmp(a));
        for p in pivots {
            let mut s = CScalar::zero();
            for (&c, a) in self.rows[&p].iter().skip(1) {
                s += &(a * &x[c]);
            }
            x[p] = -s;
        }
        Some(x)
    }
}

/// Generator of `{ρ : v∘ρ = 0 for all v ∈ L}`. Pure spinors have the parity
/// of the type, so only those degrees are unknowns.
pub fn spinor_line_from_l(dim: usize, l: &IsotropicSubspace) -> Result<Spinor, SpinorError> {
    if dim > MAX_DIM {
        return Err(SpinorError::TooLarge(dim, MAX_DIM));
    }
    if l.space.ambient() != 2 * dim {
        return Err(SpinorError::Ambient(l.space.ambient(), 2 * dim));
    }
    if !l.is_maximal() {
        return Err(SpinorError::NotMaximalIsotropic);
    }
    let parity = gcs_type(&l.space) % 2;
    let masks: Vec<Mask> = (0..(1u32 << dim))
        .filter(|m| m.count_ones() as usize % 2 == parity)
        .collect();
    let index: HashMap<Mask, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut ech = SparseEchelon::new();
    for v in l.basis() {
        // Coefficient of each output monomial in v∘ρ, as a row in the unknowns.
        let mut eqs: BTreeMap<Mask, BTreeMap<usize, CScalar>> = BTreeMap::new();
        for &m in &masks {
            let unit = Spinor::from_terms(dim, [(m, CScalar::one())]);
            for (out, c) in clifford_act(&v, &unit).terms {
                eqs.entry(out).or_default().insert(index[&m], c);
            }
        }
        for row in eqs.into_values() {
            ech.insert(row);
        }
    }
    let x = ech
        .kernel_line(masks.len())
        .ok_or(SpinorError::NotMaximalIsotropic)?;
    let s = Spinor::from_terms(dim, masks.iter().zip(x).map(|(&m, c)| (m, c)));
    s.normalized()
}

/// Coframe `θ_1 … θ_n` spanning the `(1,0)` forms of `J` — the `+i`
/// eigenforms of `J*`, i.e. left eigenvectors of the matrix of `J`.
pub fn coframe_of_j(j: &Matrix<Scalar>) -> Vec<PForm> {
    let n = j.nrows();
    let jt = j.transpose().map(|x| CScalar::real(x.clone()));
    let shifted = jt.sub(&Matrix::identity(n).scale(&CScalar::i()));
    shifted
        .nullspace()
        .into_iter()
        .map(|v| PForm::from_coeffs(&v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_basics() {
        let r = Spinor::from_form(&PForm::basis(2, 0).wedge(&PForm::basis(2, 1)));
        let x0 = GeneralizedVector::<Scalar>::vector(vec![Scalar::one(), Scalar::zero()]).complexify();
        assert_eq!(clifford_act(&x0, &r), Spinor::from_form(&PForm::basis(2, 1)));
        let w0 = GeneralizedVector::<Scalar>::covector(vec![Scalar::one(), Scalar::zero()]).complexify();
        assert_eq!(clifford_act(&w0, &Spinor::one(2)), Spinor::from_form(&PForm::basis(2, 0)));
    }

    #[test]
    fn trivial_lines() {
        let a = annihilator(&Spinor::one(4)).unwrap();
        assert!(a.pure);
        let line = spinor_line_from_l(4, &a.space).unwrap();
        assert_eq!(line, Spinor::one(4));
    }
}
