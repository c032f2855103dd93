//! Lie algebras given by rational structure constants: validation, the
//! lower central series, the associated graded algebra, changes of basis,
//! the named catalog and adapted-basis recognition.

mod adapted;
pub mod catalog;
mod io;
mod subspace;

pub use adapted::{is_adapted_basis, AdaptedCheck};
pub use catalog::{catalog, catalog_list, CatalogEntry, CatalogParams};
pub use io::{parse_algebra, print_algebra};
pub use subspace::Subspace;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{Field, Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("Jacobi identity fails on ({a}, {b}, {c}): residual {residual}")]
    Jacobi {
        a: String,
        b: String,
        c: String,
        residual: String,
    },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("singular change of basis")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0}")]
    Parameter(String),
    #[error("{0}")]
    Malformed(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("irrational normalization, supply T manually")]
    IrrationalNormalization,
}

/// Unchecked structure constants. Only `i < j` pairs are stored; use
/// [`LieAlgebra::new`] to obtain a value the rest of the crate accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    pub constants: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

impl RawAlgebra {
    pub fn new(dim: usize) -> Self {
        RawAlgebra {
            dim,
            labels: (0..dim).map(|i| format!("X{i}")).collect(),
            constants: BTreeMap::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = labels;
        self
    }

    /// Adds `c·X_k` to `[X_i, X_j]`, flipping the sign when `i > j`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> &mut Self {
        assert_ne!(i, j, "[X_i, X_i] is zero");
        let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        let e = self.constants.entry((a, b)).or_default();
        let v = e.remove(&k).unwrap_or_default() + c;
        if !v.is_zero() {
            e.insert(k, v);
        }
        if e.is_empty() {
            self.constants.remove(&(a, b));
        }
        self
    }

    /// `[X_i, X_j] = c·X_k` with an integer coefficient.
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: i64) -> &mut Self {
        self.add(i, j, k, Scalar::int(c))
    }
}

/// A Lie algebra whose Jacobi identity has been verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    raw: RawAlgebra,
    /// `dω_k` as `((i, j), coeff)` with `i < j`, coefficient of `ω_i∧ω_j`.
    dual_d: Vec<Vec<((usize, usize), Scalar)>>,
}

impl LieAlgebra {
    pub fn new(raw: RawAlgebra) -> Result<Self, LieError> {
        let n = raw.dim;
        if n == 0 {
            return Err(LieError::Malformed("dimension must be positive".into()));
        }
        if raw.labels.len() != n {
            return Err(LieError::Malformed(format!(
                "{} labels for dimension {n}",
                raw.labels.len()
            )));
        }
        for (&(i, j), row) in &raw.constants {
            if i >= j || j >= n || row.keys().any(|&k| k >= n) {
                return Err(LieError::Malformed(format!("bad bracket index ({i}, {j})")));
            }
        }
        let mut dual_d = vec![Vec::new(); n];
        for (&(i, j), row) in &raw.constants {
            for (&k, c) in row {
                dual_d[k].push(((i, j), -c));
            }
        }
        let g = LieAlgebra { raw, dual_d };
        g.check_jacobi()?;
        Ok(g)
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim();
        let e = |i: usize| unit::<Scalar>(n, i);
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let t1 = self.bracket(&self.bracket(&e(a), &e(b)), &e(c));
                    let t2 = self.bracket(&self.bracket(&e(b), &e(c)), &e(a));
                    let t3 = self.bracket(&self.bracket(&e(c), &e(a)), &e(b));
                    let res: Vec<Scalar> = (0..n).map(|k| &(&t1[k] + &t2[k]) + &t3[k]).collect();
                    if res.iter().any(|x| !x.is_zero()) {
                        return Err(LieError::Jacobi {
                            a: self.label(a).into(),
                            b: self.label(b).into(),
                            c: self.label(c).into(),
                            residual: self.format_vector(&res),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.raw.dim
    }

    pub fn label(&self, i: usize) -> &str {
        &self.raw.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.raw.labels
    }

    pub fn raw(&self) -> &RawAlgebra {
        &self.raw
    }

    pub fn constants(&self) -> &BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> {
        &self.raw.constants
    }

    /// Same structure constants, labels ignored.
    pub fn same_constants(&self, o: &LieAlgebra) -> bool {
        self.dim() == o.dim() && self.raw.constants == o.raw.constants
    }

    /// `C^k_{ij}` for any ordering of `i`, `j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        if i == j {
            return Scalar::zero();
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        self.raw
            .constants
            .get(&(a, b))
            .and_then(|r| r.get(&k))
            .map(|c| if s < 0 { -c } else { c.clone() })
            .unwrap_or_default()
    }

    /// `[X_i, X_j]` as sparse `(k, coeff)` pairs.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        if i == j {
            return vec![];
        }
        let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.raw.constants.get(&(a, b)) {
            None => vec![],
            Some(r) => r
                .iter()
                .map(|(&k, c)| (k, if neg { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn bracket<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (&(i, j), row) in &self.raw.constants {
            let a = x[i].mul_ref(&y[j]).sub_ref(&x[j].mul_ref(&y[i]));
            if a.is_zero() {
                continue;
            }
            for (&k, c) in row {
                out[k] = out[k].add_ref(&a.mul_ref(&F::from_scalar(c.clone())));
            }
        }
        out
    }

    /// Matrix of `ad_X` acting on column vectors.
    pub fn ad<F: Field>(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols = (0..n).map(|j| self.bracket(x, &unit(n, j))).collect();
        Matrix::from_cols(cols, n)
    }

    /// `dω_k` for the dual basis, as `((i, j), c)` meaning `c·ω_i∧ω_j`.
    pub fn dual_differential(&self, k: usize) -> &[((usize, usize), Scalar)] {
        &self.dual_d[k]
    }

    pub fn is_abelian(&self) -> bool {
        self.raw.constants.is_empty()
    }

    pub fn format_vector<F: Field>(&self, v: &[F]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c} {}", self.label(k)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// `g^0 = g ⊃ g^1 ⊃ …`, stopping at zero or when the series stalls.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let n = self.dim();
        let mut series = vec![Subspace::<Scalar>::full(n)];
        loop {
            let prev = series.last().unwrap();
            let mut gens = Vec::new();
            for v in prev.basis() {
                for k in 0..n {
                    let b = self.bracket(v, &unit(n, k));
                    if b.iter().any(|x| !x.is_zero()) {
                        gens.push(b);
                    }
                }
            }
            let next = Subspace::span(n, gens);
            let stalled = next.dim() == prev.dim();
            let done = next.dim() == 0;
            if !stalled {
                series.push(next);
            }
            if stalled || done {
                return series;
            }
        }
    }

    pub fn report(&self) -> StructureReport {
        let series = self.lower_central_series();
        let lcs_dims: Vec<usize> = series.iter().map(|s| s.dim()).collect();
        let nilpotent = *lcs_dims.last().unwrap() == 0;
        let dim = self.dim();
        if !nilpotent {
            return StructureReport {
                dim,
                nilindex: None,
                lcs_dims,
                form_vector: vec![],
                class: AlgebraClass::NotNilpotent,
            };
        }
        let m = lcs_dims.len() - 1;
        let p: Vec<usize> = lcs_dims.windows(2).map(|w| w[0] - w[1]).collect();
        let class = if m <= 1 {
            AlgebraClass::Abelian
        } else if m + 1 == dim {
            AlgebraClass::Filiform
        } else if m + 2 == dim {
            // Two excess dimensions over a filiform shape: p_1 = 3, or p_1 = 2
            // and exactly one later p_r = 2.
            let r = if p[0] == 3 {
                1
            } else {
                p[1..].iter().position(|&x| x == 2).map_or(1, |i| i + 2)
            };
            AlgebraClass::QuasiFiliform { r }
        } else {
            AlgebraClass::OtherNilpotent
        };
        StructureReport {
            dim,
            nilindex: Some(m),
            lcs_dims,
            form_vector: p,
            class,
        }
    }

    /// Nilindex `m` (smallest `m` with `g^m = 0`).
    pub fn nilindex(&self) -> Result<usize, LieError> {
        self.report().nilindex.ok_or(LieError::NotNilpotent)
    }
}

pub(crate) fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum AlgebraClass {
    Abelian,
    Filiform,
    /// Form `t_r`; `r = 1` means `{3,1,…,1}`.
    QuasiFiliform { r: usize },
    OtherNilpotent,
    NotNilpotent,
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraClass::Abelian => write!(f, "abelian"),
            AlgebraClass::Filiform => write!(f, "filiform"),
            AlgebraClass::QuasiFiliform { r } => write!(f, "quasi-filiform t{r}"),
            AlgebraClass::OtherNilpotent => write!(f, "other-nilpotent"),
            AlgebraClass::NotNilpotent => write!(f, "not-nilpotent"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub nilindex: Option<usize>,
    pub lcs_dims: Vec<usize>,
    pub form_vector: Vec<usize>,
    pub class: AlgebraClass,
}

/// Check Jacobi and compute the series data.
pub fn validate(raw: &RawAlgebra) -> Result<StructureReport, LieError> {
    Ok(LieAlgebra::new(raw.clone())?.report())
}

/// An invertible change of basis; column `j` holds the coordinates of the new
/// basis vector `Y_j` in the old basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    matrix: Matrix<Scalar>,
}

impl BasisChange {
    pub fn new(matrix: Matrix<Scalar>) -> Result<Self, LieError> {
        if matrix.nrows() != matrix.ncols() || matrix.det().is_zero() {
            return Err(LieError::Singular);
        }
        Ok(BasisChange { matrix })
    }

    pub fn identity(n: usize) -> Self {
        BasisChange {
            matrix: Matrix::identity(n),
        }
    }

    /// Basis permutation `Y_j = X_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Result<Self, LieError> {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            if i >= n {
                return Err(LieError::Singular);
            }
            m.set(i, j, Scalar::one());
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.matrix
    }
}

/// Structure constants of `g` in the basis `Y_j = Σ_i T_{ij} X_i`.
pub fn change_basis(g: &LieAlgebra, t: &BasisChange) -> Result<LieAlgebra, LieError> {
    let n = g.dim();
    if t.matrix.nrows() != n {
        return Err(LieError::DimensionMismatch(n, t.matrix.nrows()));
    }
    let inv = t.matrix.inverse().ok_or(LieError::Singular)?;
    let cols: Vec<Vec<Scalar>> = (0..n).map(|j| t.matrix.col(j)).collect();
    let mut raw = RawAlgebra::new(n).with_labels(g.labels().to_vec());
    for a in 0..n {
        for b in a + 1..n {
            let v = inv.mul_vec(&g.bracket(&cols[a], &cols[b]));
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    raw.add(a, b, k, c);
                }
            }
        }
    }
    LieAlgebra::new(raw)
}

/// True iff `change_basis(g, T)` has exactly the constants of `h`.
pub fn verify_isomorphism(g: &LieAlgebra, h: &LieAlgebra, t: &BasisChange) -> Result<bool, LieError> {
    if g.dim() != h.dim() {
        return Err(LieError::DimensionMismatch(g.dim(), h.dim()));
    }
    Ok(change_basis(g, t)?.same_constants(h))
}

/// The associated graded algebra `gr(g) = ⊕ g^{i−1}/g^i`.
///
/// Each slice is represented by the reduced rows of `g^{i−1}` whose pivot is
/// not a pivot of `g^i`; the new basis is ordered by pivot column and keeps
/// the original labels, so naturally graded inputs in a homogeneous basis
/// come back unchanged.
pub fn graded(g: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    let n = g.dim();
    let series = g.lower_central_series();
    if series.last().unwrap().dim() != 0 {
        return Err(LieError::NotNilpotent);
    }
    // (pivot, weight, vector)
    let mut basis: Vec<(usize, usize, Vec<Scalar>)> = Vec::new();
    for w in 1..series.len() {
        let (hi, lo) = (&series[w - 1], &series[w]);
        for (row, &p) in hi.basis().iter().zip(hi.pivots()) {
            if !lo.pivots().contains(&p) {
                basis.push((p, w, row.clone()));
            }
        }
    }
    basis.sort_by_key(|b| b.0);
    let t = Matrix::from_cols(basis.iter().map(|b| b.2.clone()).collect(), n);
    let inv = t.inverse().ok_or(LieError::Singular)?;
    let weight: Vec<usize> = basis.iter().map(|b| b.1).collect();
    let mut raw = RawAlgebra::new(n).with_labels(g.labels().to_vec());
    for a in 0..n {
        for b in a + 1..n {
            let target = weight[a] + weight[b];
            let v = inv.mul_vec(&g.bracket(&basis[a].2, &basis[b].2));
            for (k, c) in v.into_iter().enumerate() {
                if weight[k] == target && !c.is_zero() {
                    raw.add(a, b, k, c);
                }
            }
        }
    }
    LieAlgebra::new(raw)
}

/// Normalizing change of basis for the dimension-6 `t_3` family
/// `[X0,Xi]=X_{i+1}`, `[X1,X3]=bX4`, `[X1,X2]=bX3−X5`, `[X5,X1]=aX4`.
///
/// Returns `T` with `Y0=αX0, Y1=βX1+X0, Y2=αβX2, Y3=α²βX3, Y4=α³βX4,
/// Y5=−αβ²X5`, where `β = −1/(b−√|a|)` (or `−1/(2√|a|)` when `b = √|a|`)
/// and `α = bβ + 1`.
pub fn t3_normalization(a: &Scalar, b: &Scalar) -> Result<BasisChange, LieError> {
    if a.is_zero() && b.is_zero() {
        return Err(LieError::Parameter(
            "a = b = 0 is already the graded algebra; no normalization applies".into(),
        ));
    }
    let s = a.abs().sqrt_exact().ok_or(LieError::IrrationalNormalization)?;
    let beta = if b != &s {
        -(Scalar::one() / (b - &s))
    } else {
        -(Scalar::one() / (Scalar::int(2) * &s))
    };
    let alpha = b * &beta + Scalar::one();
    let mut m = Matrix::zeros(6, 6);
    m.set(0, 0, alpha.clone());
    m.set(1, 1, beta.clone());
    m.set(0, 1, Scalar::one());
    m.set(2, 2, &alpha * &beta);
    m.set(3, 3, &alpha.pow(2) * &beta);
    m.set(4, 4, &alpha.pow(3) * &beta);
    m.set(5, 5, -(&alpha * &beta.pow(2)));
    BasisChange::new(m).map_err(|_| {
        LieError::Parameter(format!(
            "normalization is singular for a = {a}, b = {b} (α = {alpha})"
        ))
    })
}

/// Map from the presentation `dim6(δ=1)` onto Salamon's `n_{6,3}`:
/// `Y = (X0, X1, X2, X3, −X5, X4)`.
pub fn salamon_isomorphism() -> BasisChange {
    let mut m = Matrix::zeros(6, 6);
    for (j, (i, c)) in [(0, 1), (1, 1), (2, 1), (3, 1), (5, -1), (4, 1)].into_iter().enumerate() {
        m.set(i, j, Scalar::int(c));
    }
    BasisChange::new(m).expect("fixture is invertible")
}
