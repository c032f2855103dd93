//! Exterior algebra over `g* ⊗ ℂ`: wedge, interior product, the invariant
//! differential, Lie derivatives, the annihilator filtration `V_i` and nil
//! degrees.
//!
//! A monomial `ω_{i1}∧…∧ω_{ip}` with `i1 < … < ip` is stored as the bitmask
//! with bits `i1, …, ip` set.

mod parse;

pub use parse::{format_form, parse_form, parse_one_form};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{CScalar, Field, Matrix, Scalar};
use crate::liealg::{LieAlgebra, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    Ambient(usize, usize),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("independence required")]
    Dependent,
    #[error("expected a {expected}-form, got degree {got}")]
    Degree { expected: usize, got: usize },
    #[error("{0}")]
    Parse(String),
    #[error("filtration fails the recursive characterization at level {0}")]
    Inconsistent(usize),
}

pub type Mask = u32;

/// Sign of `ω_a ∧ ω_b` relative to the sorted monomial `a | b`, or `None`
/// when they share an index.
pub fn wedge_sign(a: Mask, b: Mask) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        swaps += (a >> y).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

/// `i_{X_k}` of the monomial `m`: `None` if `k ∉ m`, else the remaining
/// monomial and whether the sign is negative.
pub fn interior_mask(k: usize, m: Mask) -> Option<(Mask, bool)> {
    let bit = 1 << k;
    if m & bit == 0 {
        return None;
    }
    let below = (m & (bit - 1)).count_ones();
    Some((m & !bit, below % 2 == 1))
}

/// `d` of a monomial, as `(monomial, coefficient)` pairs.
pub fn d_mask(g: &LieAlgebra, m: Mask) -> Vec<(Mask, Scalar)> {
    let mut out: BTreeMap<Mask, Scalar> = BTreeMap::new();
    let mut rest = m;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let bit: Mask = 1 << k;
        let pre = m & (bit - 1);
        let post = m & !(bit | (bit - 1));
        let s_neg = pre.count_ones() % 2 == 1;
        for ((a, b), c) in g.dual_differential(k) {
            let ab: Mask = (1 << a) | (1 << b);
            let Some(n1) = wedge_sign(pre, ab) else { continue };
            let Some(n2) = wedge_sign(pre | ab, post) else { continue };
            let neg = s_neg ^ n1 ^ n2;
            let e = out.entry(pre | ab | post).or_default();
            if neg {
                *e -= c;
            } else {
                *e += c;
            }
        }
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// A homogeneous complex `p`-form on `g`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Mask, CScalar>,
}

impl PForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= 31, "ambient dimension too large");
        PForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: CScalar) -> Self {
        let mut f = Self::zero(dim, 0);
        f.add_term(0, c);
        f
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, CScalar::one())
    }

    /// The dual basis element `ω_k`.
    pub fn basis(dim: usize, k: usize) -> Self {
        Self::monomial(dim, &[k], CScalar::one())
    }

    /// `c · ω_{i1}∧…∧ω_{ip}` for any order of indices (sign applied).
    pub fn monomial(dim: usize, idx: &[usize], c: CScalar) -> Self {
        let mut f = Self::one(dim).scale(&c);
        for &i in idx {
            assert!(i < dim, "index out of range");
            f = f.wedge(&Self::basis_raw(dim, i));
        }
        f
    }

    fn basis_raw(dim: usize, k: usize) -> Self {
        let mut f = Self::zero(dim, 1);
        f.terms.insert(1 << k, CScalar::one());
        f
    }

    /// 1-form with the given coordinates in the dual basis.
    pub fn from_coeffs(coeffs: &[CScalar]) -> Self {
        let mut f = Self::zero(coeffs.len(), 1);
        for (k, c) in coeffs.iter().enumerate() {
            f.add_term(1 << k, c.clone());
        }
        f
    }

    pub fn from_real_coeffs(coeffs: &[Scalar]) -> Self {
        Self::from_coeffs(&crate::exact::complexify(coeffs))
    }

    pub fn from_terms(dim: usize, degree: usize, terms: impl IntoIterator<Item = (Mask, CScalar)>) -> Self {
        let mut f = Self::zero(dim, degree);
        for (m, c) in terms {
            assert_eq!(m.count_ones() as usize, degree, "inconsistent degree");
            f.add_term(m, c);
        }
        f
    }

    fn add_term(&mut self, m: Mask, c: CScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Mask, CScalar> {
        &self.terms
    }

    pub fn coeff(&self, m: Mask) -> CScalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinates of a 1-form.
    pub fn coeffs(&self) -> Vec<CScalar> {
        assert_eq!(self.degree, 1, "coordinates are defined for 1-forms");
        (0..self.dim).map(|k| self.coeff(1 << k)).collect()
    }

    pub fn conj(&self) -> Self {
        PForm {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(&m, c)| (m, c.conj())).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn scale(&self, s: &CScalar) -> Self {
        let mut f = Self::zero(self.dim, self.degree);
        for (&m, c) in &self.terms {
            f.add_term(m, c * s);
        }
        f
    }

    pub fn neg(&self) -> Self {
        self.scale(&-CScalar::one())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim, "ambient mismatch");
        assert!(
            self.degree == o.degree || self.is_zero() || o.is_zero(),
            "degree mismatch"
        );
        let mut f = self.clone();
        if f.is_zero() {
            f.degree = o.degree;
        }
        for (&m, c) in &o.terms {
            f.add_term(m, c.clone());
        }
        f
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Graded product; panics on ambient mismatch (see [`wedge`]).
    pub fn wedge(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim, "ambient mismatch");
        let mut f = Self::zero(self.dim, self.degree + o.degree);
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                if let Some(neg) = wedge_sign(a, b) {
                    let p = x * y;
                    f.add_term(a | b, if neg { -p } else { p });
                }
            }
        }
        f
    }

    /// `self^k` under the wedge product; `self^0 = 1`.
    pub fn wedge_pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.dim), |acc, _| acc.wedge(self))
    }

    /// Contraction with `X_k` in the first slot.
    pub fn interior_basis(&self, k: usize) -> Self {
        let mut f = Self::zero(self.dim, self.degree.saturating_sub(1));
        for (&m, c) in &self.terms {
            if let Some((r, neg)) = interior_mask(k, m) {
                f.add_term(r, if neg { -c } else { c.clone() });
            }
        }
        f
    }

    pub fn interior_vec<F: Field + Into<CScalar>>(&self, x: &[F]) -> Self {
        let mut f = Self::zero(self.dim, self.degree.saturating_sub(1));
        for (k, xk) in x.iter().enumerate() {
            if !xk.is_zero() {
                f = f.add(&self.interior_basis(k).scale(&xk.clone().into()));
            }
        }
        f
    }

    /// Invariant differential; panics on ambient mismatch.
    pub fn d(&self, g: &LieAlgebra) -> Self {
        assert_eq!(self.dim, g.dim(), "ambient mismatch");
        let mut f = Self::zero(self.dim, self.degree + 1);
        for (&m, c) in &self.terms {
            for (r, s) in d_mask(g, m) {
                f.add_term(r, c.scale(&s));
            }
        }
        f
    }

    /// The form evaluated on basis vectors `(X_{i1}, …, X_{ip})`.
    pub fn eval_basis(&self, idx: &[usize]) -> CScalar {
        assert_eq!(idx.len(), self.degree);
        idx.iter()
            .fold(self.clone(), |f, &k| f.interior_basis(k))
            .coeff(0)
    }
}

impl fmt::Display for PForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_form(self))
    }
}

impl fmt::Debug for PForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-form[{}]", self.degree, format_form(self))
    }
}

impl Serialize for PForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn same_ambient(a: usize, b: usize) -> Result<(), ExteriorError> {
    if a == b {
        Ok(())
    } else {
        Err(ExteriorError::Ambient(a, b))
    }
}

pub fn wedge(a: &PForm, b: &PForm) -> Result<PForm, ExteriorError> {
    same_ambient(a.dim, b.dim)?;
    Ok(a.wedge(b))
}

pub fn interior(x: &[CScalar], a: &PForm) -> Result<PForm, ExteriorError> {
    same_ambient(x.len(), a.dim)?;
    Ok(a.interior_vec(x))
}

pub fn differential(g: &LieAlgebra, a: &PForm) -> Result<PForm, ExteriorError> {
    same_ambient(g.dim(), a.dim)?;
    Ok(a.d(g))
}

/// `ℒ_X = i_X∘d + d∘i_X`.
pub fn lie_derivative(g: &LieAlgebra, x: &[CScalar], a: &PForm) -> Result<PForm, ExteriorError> {
    same_ambient(g.dim(), a.dim)?;
    same_ambient(g.dim(), x.len())?;
    let t1 = a.d(g).interior_vec(x);
    let t2 = a.interior_vec(x).d(g);
    Ok(t1.add(&t2))
}

/// The chain `V_0 = 0 ⊂ V_1 ⊂ … ⊂ V_m = g*`, `V_i = ann(g^i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    /// `V_0 … V_m`.
    pub spaces: Vec<Subspace>,
    /// `dim V_i / V_{i−1}` for `i = 1 … m`.
    pub quotient_dims: Vec<usize>,
    /// Smallest `j ≥ 1` with `dim V_{i+1}/V_i = 1` for all `j ≤ i < m`;
    /// absent when no such `j < m` exists.
    pub j_index: Option<usize>,
    /// The lower central series `g^0 … g^m` that the `V_i` annihilate.
    pub lcs: Vec<Subspace>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiltrationSummary {
    pub dims: Vec<usize>,
    pub quotient_dims: Vec<usize>,
    pub j_index: Option<usize>,
}

impl Filtration {
    pub fn nilindex(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    pub fn summary(&self) -> FiltrationSummary {
        FiltrationSummary {
            dims: self.dims(),
            quotient_dims: self.quotient_dims.clone(),
            j_index: self.j_index,
        }
    }

    /// `V_i`, saturating at `g*` beyond the nilindex.
    pub fn space(&self, i: usize) -> &Subspace {
        &self.spaces[i.min(self.nilindex())]
    }
}

/// `i_{X_k} dφ` for a real 1-form `φ`, as real coordinates.
fn contract_d(g: &LieAlgebra, phi: &[Scalar], k: usize) -> Vec<Scalar> {
    PForm::from_real_coeffs(phi)
        .d(g)
        .interior_basis(k)
        .coeffs()
        .into_iter()
        .map(|c| c.re)
        .collect()
}

pub fn annihilator_filtration(g: &LieAlgebra) -> Result<Filtration, ExteriorError> {
    let lcs = g.lower_central_series();
    if lcs.last().unwrap().dim() != 0 {
        return Err(ExteriorError::NotNilpotent);
    }
    let spaces: Vec<Subspace> = lcs.iter().map(|s| s.annihilator()).collect();
    for i in 1..spaces.len() {
        for phi in spaces[i].basis() {
            for k in 0..g.dim() {
                if !spaces[i - 1].contains(&contract_d(g, phi, k)) {
                    return Err(ExteriorError::Inconsistent(i));
                }
            }
        }
    }
    let quotient_dims: Vec<usize> = spaces.windows(2).map(|w| w[1].dim() - w[0].dim()).collect();
    let m = quotient_dims.len();
    // quotient_dims[i] = dim V_{i+1}/V_i
    let j_index = (1..m).find(|&j| quotient_dims[j..].iter().all(|&q| q == 1));
    Ok(Filtration {
        spaces,
        quotient_dims,
        j_index,
        lcs,
    })
}

/// The filtration rebuilt from `V_0 = 0` by `φ ∈ V_i ⟺ i_X dφ ∈ V_{i−1}`
/// for every basis vector `X`, up to level `m`.
pub fn recursive_filtration(g: &LieAlgebra, levels: usize) -> Vec<Subspace> {
    let n = g.dim();
    let mut out = vec![Subspace::zero(n)];
    for _ in 0..levels {
        let prev = out.last().unwrap();
        // Linear conditions: for each k, i_{X_k} dω_a reduced modulo V_{i−1}
        // must vanish. Collect them as a matrix acting on φ's coordinates.
        let annihilator_rows = prev.annihilator(); // vectors killing V_{i−1}
        let mut rows = Vec::new();
        for k in 0..n {
            for v in annihilator_rows.basis() {
                // φ ↦ ⟨i_{X_k} dφ, v⟩, linear in φ
                let row: Vec<Scalar> = (0..n)
                    .map(|a| {
                        let img = contract_d(g, &crate::liealg::unit(n, a), k);
                        img.iter().zip(v).map(|(x, y)| x * y).sum()
                    })
                    .collect();
                rows.push(row);
            }
        }
        let next = if rows.is_empty() {
            Subspace::full(n)
        } else {
            Subspace::span(n, Matrix::from_rows(rows).nullspace())
        };
        out.push(next);
    }
    out
}

/// Smallest `i` with `a ∈ Λ^p V_i`, decided by `i_X a = 0` for all
/// `X ∈ g^i`.
pub fn nil_degree(f: &Filtration, a: &PForm) -> usize {
    (0..=f.nilindex())
        .find(|&i| {
            f.lcs[i]
                .basis()
                .iter()
                .all(|x| a.interior_vec(x).is_zero())
        })
        .unwrap()
}

fn independent(thetas: &[PForm]) -> bool {
    thetas.is_empty()
        || !thetas
            .iter()
            .skip(1)
            .fold(thetas[0].clone(), |acc, t| acc.wedge(t))
            .is_zero()
}

/// `a ∈ 𝓘(θ_1, …, θ_m)`, decided by `a ∧ θ_1 ∧ … ∧ θ_m = 0`.
pub fn ideal_member(a: &PForm, thetas: &[PForm]) -> Result<bool, ExteriorError> {
    for t in thetas {
        same_ambient(a.dim, t.dim)?;
        if t.degree != 1 {
            return Err(ExteriorError::Degree {
                expected: 1,
                got: t.degree,
            });
        }
    }
    if !independent(thetas) {
        return Err(ExteriorError::Dependent);
    }
    Ok(thetas.iter().fold(a.clone(), |acc, t| acc.wedge(t)).is_zero())
}

/// Rank of complex 1-forms modulo a rational subspace of `g*`.
pub fn rank_modulo(v: &Subspace, forms: &[PForm]) -> usize {
    let vc = v.complexify();
    let coords: Vec<Vec<CScalar>> = forms.iter().map(|t| t.coeffs()).collect();
    vc.rank_modulo(&coords)
}

/// Nil degrees non-decreasing, and for each `i` the forms with nil degree
/// above `i` independent modulo `V_i`.
pub fn is_appropriate(f: &Filtration, thetas: &[PForm]) -> bool {
    let nils: Vec<usize> = thetas.iter().map(|t| nil_degree(f, t)).collect();
    if nils.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    (0..=f.nilindex()).all(|i| {
        let above: Vec<PForm> = thetas
            .iter()
            .zip(&nils)
            .filter(|(_, &n)| n > i)
            .map(|(t, _)| t.clone())
            .collect();
        rank_modulo(&f.spaces[i], &above) == above.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    fn w(dim: usize, k: usize) -> PForm {
        PForm::basis(dim, k)
    }

    #[test]
    fn wedge_basics() {
        let a = w(2, 0).wedge(&w(2, 1));
        assert_eq!(a, w(2, 1).wedge(&w(2, 0)).neg());
        let i = CScalar::i();
        let t = w(2, 0).add(&w(2, 1).scale(&i));
        let p = t.wedge(&t.conj());
        assert_eq!(p, a.scale(&CScalar::int(0, -2)));
    }

    #[test]
    fn interior_signs() {
        let a = w(2, 0).wedge(&w(2, 1));
        assert_eq!(a.interior_basis(0), w(2, 1));
        assert_eq!(a.interior_basis(1), w(2, 0).neg());
        assert!(PForm::one(2).interior_basis(0).is_zero());
    }

    #[test]
    fn differential_conventions() {
        let g = catalog::l_plus_r(2).unwrap();
        assert_eq!(w(4, 2).d(&g), w(4, 0).wedge(&w(4, 1)).neg());
        assert!(w(4, 3).d(&g).is_zero());
        let n = catalog::n6_3();
        assert_eq!(w(6, 5).d(&n), w(6, 1).wedge(&w(6, 2)).neg());
    }

    #[test]
    fn filtration_of_small_algebras() {
        let f = annihilator_filtration(&catalog::filiform(4).unwrap()).unwrap();
        assert_eq!(f.quotient_dims, vec![2, 1, 1]);
        assert_eq!(f.j_index, Some(1));
        let f = annihilator_filtration(&catalog::dim6(&Scalar::int(0))).unwrap();
        assert_eq!(f.quotient_dims, vec![2, 1, 2, 1]);
        assert_eq!(f.j_index, Some(3));
        let f = annihilator_filtration(&catalog::abelian(3).unwrap()).unwrap();
        assert_eq!(f.quotient_dims, vec![3]);
        assert_eq!(f.j_index, None);
    }
}
