//! Complex structures, symplectic forms, and generalized complex structures
//! on the double `g ⊕ g*`.
//!
//! Vectors of the double are written `(X; ξ)`, the `g` coordinates first.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{CScalar, Field, Matrix, Scalar};
use crate::exterior::PForm;
use crate::liealg::{LieAlgebra, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("odd dimension {0}: an even dimension is required")]
    OddDimension(usize),
    #[error("matrix of size {got} where {want} is required")]
    Shape { want: usize, got: usize },
    #[error("not a complex structure: {0}")]
    NotComplex(String),
    #[error("not symplectic: {0}")]
    NotSymplectic(String),
    #[error("degenerate coframe")]
    DegenerateCoframe,
    #[error("expected a {0}-form")]
    Degree(usize),
}

fn even(g: &LieAlgebra) -> Result<usize, StructureError> {
    if g.dim() % 2 == 1 {
        Err(StructureError::OddDimension(g.dim()))
    } else {
        Ok(g.dim() / 2)
    }
}

/// An endomorphism of `g`, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    pub matrix: Matrix<Scalar>,
}

impl Endomorphism {
    pub fn new(matrix: Matrix<Scalar>) -> Self {
        Endomorphism { matrix }
    }

    /// `J X_i = images[i]`.
    pub fn from_images(images: Vec<Vec<Scalar>>) -> Self {
        let n = images.len();
        Endomorphism {
            matrix: Matrix::from_cols(images, n),
        }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// `N(X, Y) = [JX,JY] − [X,Y] − J[JX,Y] − J[X,JY]`.
pub fn nijenhuis(g: &LieAlgebra, j: &Endomorphism, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let (jx, jy) = (j.apply(x), j.apply(y));
    let a = g.bracket(&jx, &jy);
    let b = g.bracket(x, y);
    let c = j.apply(&g.bracket(&jx, y));
    let d = j.apply(&g.bracket(x, &jy));
    (0..g.dim())
        .map(|k| &(&(&a[k] - &b[k]) - &c[k]) - &d[k])
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexCheck {
    pub ok: bool,
    pub squares_to_minus_one: bool,
    /// First basis pair `(i, j)` with nonzero Nijenhuis tensor.
    pub failing_pair: Option<(usize, usize)>,
}

pub fn is_complex_structure(g: &LieAlgebra, j: &Endomorphism) -> Result<ComplexCheck, StructureError> {
    even(g)?;
    let n = g.dim();
    if j.dim() != n || j.matrix.ncols() != n {
        return Err(StructureError::Shape { want: n, got: j.dim() });
    }
    let sq = j.matrix.mul(&j.matrix);
    if sq != Matrix::identity(n).neg() {
        return Ok(ComplexCheck {
            ok: false,
            squares_to_minus_one: false,
            failing_pair: None,
        });
    }
    let e = |i| crate::liealg::unit::<Scalar>(n, i);
    for a in 0..n {
        for b in a + 1..n {
            if nijenhuis(g, j, &e(a), &e(b)).iter().any(|c| !c.is_zero()) {
                return Ok(ComplexCheck {
                    ok: false,
                    squares_to_minus_one: true,
                    failing_pair: Some((a, b)),
                });
            }
        }
    }
    Ok(ComplexCheck {
        ok: true,
        squares_to_minus_one: true,
        failing_pair: None,
    })
}

/// Matrix `W_{ij} = w(X_i, X_j)` of a 2-form.
pub fn two_form_matrix<F: Field>(w: &PForm, conv: impl Fn(&CScalar) -> F) -> Matrix<F> {
    let n = w.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m.set(i, j, conv(&w.eval_basis(&[i, j])));
            }
        }
    }
    m
}

/// `w^n ≠ 0` and `dw = 0`.
pub fn is_symplectic(g: &LieAlgebra, w: &PForm) -> Result<bool, StructureError> {
    let n = even(g)?;
    if w.degree() != 2 && !w.is_zero() {
        return Err(StructureError::Degree(2));
    }
    Ok(!w.wedge_pow(n).is_zero() && w.d(g).is_zero())
}

/// `X + ξ`, coordinates over `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedVector<F: Field = Scalar> {
    pub vec: Vec<F>,
    pub form: Vec<F>,
}

impl<F: Field> GeneralizedVector<F> {
    pub fn new(vec: Vec<F>, form: Vec<F>) -> Self {
        assert_eq!(vec.len(), form.len(), "ambient mismatch");
        GeneralizedVector { vec, form }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![F::zero(); n], vec![F::zero(); n])
    }

    pub fn vector(vec: Vec<F>) -> Self {
        let n = vec.len();
        Self::new(vec, vec![F::zero(); n])
    }

    pub fn covector(form: Vec<F>) -> Self {
        let n = form.len();
        Self::new(vec![F::zero(); n], form)
    }

    /// `(X; ξ)` as one `2n` column.
    pub fn from_stacked(v: &[F]) -> Self {
        let n = v.len() / 2;
        Self::new(v[..n].to_vec(), v[n..].to_vec())
    }

    pub fn stacked(&self) -> Vec<F> {
        self.vec.iter().chain(&self.form).cloned().collect()
    }

    pub fn dim(&self) -> usize {
        self.vec.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.vec.iter().zip(&o.vec).map(|(a, b)| a.add_ref(b)).collect(),
            self.form.iter().zip(&o.form).map(|(a, b)| a.add_ref(b)).collect(),
        )
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(
            self.vec.iter().map(|a| a.mul_ref(s)).collect(),
            self.form.iter().map(|a| a.mul_ref(s)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.vec.iter().chain(&self.form).all(|a| a.is_zero())
    }
}

impl GeneralizedVector<Scalar> {
    pub fn complexify(&self) -> GeneralizedVector<CScalar> {
        GeneralizedVector::new(
            crate::exact::complexify(&self.vec),
            crate::exact::complexify(&self.form),
        )
    }
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)))
}

/// `⟨X+ξ, Y+η⟩ = ½(ξ(Y) + η(X))`.
pub fn pairing<F: Field>(v: &GeneralizedVector<F>, w: &GeneralizedVector<F>) -> F {
    let half = F::from_scalar(Scalar::ratio(1, 2));
    dot(&v.form, &w.vec).add_ref(&dot(&w.form, &v.vec)).mul_ref(&half)
}

/// The matrix `½[[0, I], [I, 0]]` of the pairing.
pub fn pairing_matrix<F: Field>(n: usize) -> Matrix<F> {
    let half = F::from_scalar(Scalar::ratio(1, 2));
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m.set(i, n + i, half.clone());
        m.set(n + i, i, half.clone());
    }
    m
}

/// `(ℒ_X η)(Z) = −η([X, Z])` for invariant forms.
fn lie_derivative_1form<F: Field>(g: &LieAlgebra, x: &[F], eta: &[F]) -> Vec<F> {
    let n = g.dim();
    (0..n)
        .map(|z| dot(eta, &g.bracket(x, &crate::liealg::unit(n, z))).neg_ref())
        .collect()
}

/// `[X+ξ, Y+η] = [X,Y] + ℒ_X η − ℒ_Y ξ`; the exact term `½d(i_Xη − i_Yξ)`
/// vanishes because contractions of invariant forms are constants.
pub fn courant<F: Field>(
    g: &LieAlgebra,
    v: &GeneralizedVector<F>,
    w: &GeneralizedVector<F>,
) -> GeneralizedVector<F> {
    let xy = g.bracket(&v.vec, &w.vec);
    let lx = lie_derivative_1form(g, &v.vec, &w.form);
    let ly = lie_derivative_1form(g, &w.vec, &v.form);
    GeneralizedVector::new(xy, lx.iter().zip(&ly).map(|(a, b)| a.sub_ref(b)).collect())
}

/// An endomorphism of `g ⊕ g*` acting on stacked columns `(X; ξ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleEndo {
    pub matrix: Matrix<Scalar>,
}

impl DoubleEndo {
    pub fn new(matrix: Matrix<Scalar>) -> Self {
        DoubleEndo { matrix }
    }

    pub fn apply(&self, v: &GeneralizedVector<Scalar>) -> GeneralizedVector<Scalar> {
        GeneralizedVector::from_stacked(&self.matrix.mul_vec(&v.stacked()))
    }

    /// The `+i` eigenspace in the complexified double.
    pub fn plus_i_eigenspace(&self) -> Subspace<CScalar> {
        let m = self.matrix.map(|x| CScalar::real(x.clone()));
        let shifted = m.sub(&Matrix::identity(m.nrows()).scale(&CScalar::i()));
        Subspace::span(m.nrows(), shifted.nullspace())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcsReport {
    pub square_ok: bool,
    pub orthogonal_ok: bool,
    pub eigenspace_dim: usize,
    /// Present only when the `+i` eigenspace has dimension `2n`.
    pub isotropic_ok: Option<bool>,
    pub transverse_ok: Option<bool>,
    pub involutive_ok: Option<bool>,
    #[serde(rename = "type")]
    pub type_k: Option<usize>,
}

impl GcsReport {
    pub fn valid(&self) -> bool {
        self.square_ok
            && self.orthogonal_ok
            && self.isotropic_ok == Some(true)
            && self.transverse_ok == Some(true)
            && self.involutive_ok == Some(true)
    }
}

/// Is the subspace closed under the Courant bracket?
pub fn courant_involutive(g: &LieAlgebra, l: &Subspace<CScalar>) -> bool {
    let b: Vec<GeneralizedVector<CScalar>> =
        l.basis().iter().map(|v| GeneralizedVector::from_stacked(v)).collect();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !l.contains(&courant(g, &b[i], &b[j]).stacked()) {
                return false;
            }
        }
    }
    true
}

/// Codimension of the projection of `L` onto `g ⊗ ℂ`.
pub fn gcs_type(l: &Subspace<CScalar>) -> usize {
    let n = l.ambient() / 2;
    let proj: Vec<Vec<CScalar>> = l.basis().iter().map(|v| v[..n].to_vec()).collect();
    let rank = if proj.is_empty() {
        0
    } else {
        Matrix::from_rows(proj).rank()
    };
    n - rank
}

/// Check the three defining conditions and compute the type.
pub fn gcs_validate(g: &LieAlgebra, jj: &DoubleEndo) -> Result<GcsReport, StructureError> {
    even(g)?;
    let d = 2 * g.dim();
    if jj.matrix.nrows() != d || jj.matrix.ncols() != d {
        return Err(StructureError::Shape {
            want: d,
            got: jj.matrix.nrows(),
        });
    }
    let m = &jj.matrix;
    let square_ok = m.mul(m) == Matrix::identity(d).neg();
    let p = pairing_matrix::<Scalar>(g.dim());
    let orthogonal_ok = m.transpose().mul(&p).mul(m) == p;
    let l = jj.plus_i_eigenspace();
    let mut rep = GcsReport {
        square_ok,
        orthogonal_ok,
        eigenspace_dim: l.dim(),
        isotropic_ok: None,
        transverse_ok: None,
        involutive_ok: None,
        type_k: None,
    };
    if l.dim() == g.dim() {
        rep.isotropic_ok = Some(is_isotropic(&l));
        let conj = Subspace::span(d, l.basis().iter().map(|v| v.iter().map(|c| c.conj()).collect()));
        rep.transverse_ok = Some(l.sum(&conj).dim() == d);
        rep.involutive_ok = Some(courant_involutive(g, &l));
        rep.type_k = Some(gcs_type(&l));
    }
    Ok(rep)
}

pub fn is_isotropic(l: &Subspace<CScalar>) -> bool {
    let b: Vec<GeneralizedVector<CScalar>> =
        l.basis().iter().map(|v| GeneralizedVector::from_stacked(v)).collect();
    b.iter()
        .enumerate()
        .all(|(i, v)| b[i..].iter().all(|w| pairing(v, w).is_zero()))
}

/// `𝒥_J = [[−J, 0], [0, Jᵀ]]`, i.e. `X + ξ ↦ −JX + J*ξ`.
pub fn gcs_from_complex(g: &LieAlgebra, j: &Endomorphism) -> Result<DoubleEndo, StructureError> {
    let check = is_complex_structure(g, j)?;
    if !check.ok {
        return Err(StructureError::NotComplex(match check.failing_pair {
            Some((a, b)) => format!("Nijenhuis tensor nonzero on ({}, {})", g.label(a), g.label(b)),
            None => "J² ≠ −Id".into(),
        }));
    }
    let n = g.dim();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    let jt = j.matrix.transpose();
    for a in 0..n {
        for b in 0..n {
            m.set(a, b, -j.matrix.get(a, b));
            m.set(n + a, n + b, jt.get(a, b).clone());
        }
    }
    Ok(DoubleEndo::new(m))
}

/// `𝒥_ω = [[0, −ω♭⁻¹], [ω♭, 0]]` with `ω♭(X) = i_X ω`. Its `+i` eigenspace
/// is `{X − i·i_X ω}`.
pub fn gcs_from_symplectic(g: &LieAlgebra, w: &PForm) -> Result<DoubleEndo, StructureError> {
    if !is_symplectic(g, w)? {
        let why = if w.d(g).is_zero() { "degenerate" } else { "not closed" };
        return Err(StructureError::NotSymplectic(why.into()));
    }
    let n = g.dim();
    // (ω♭ X)_j = ω(X, X_j) = Σ_i X_i W_ij, so ω♭ = Wᵀ.
    let flat = two_form_matrix(w, |c| c.re.clone()).transpose();
    let inv = flat.inverse().expect("nondegenerate");
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for a in 0..n {
        for b in 0..n {
            m.set(a, n + b, -inv.get(a, b));
            m.set(n + a, b, flat.get(a, b).clone());
        }
    }
    Ok(DoubleEndo::new(m))
}

/// The real `J` with `J*θ_i = iθ_i`: `J = Θ⁻¹ D Θ` where the rows of `Θ`
/// are the `θ_i` then their conjugates and `D = diag(i, …, −i, …)`.
pub fn j_from_coframe(g: &LieAlgebra, thetas: &[PForm]) -> Result<Endomorphism, StructureError> {
    let n = even(g)?;
    if thetas.len() != n || thetas.iter().any(|t| t.degree() != 1 || t.dim() != g.dim()) {
        return Err(StructureError::DegenerateCoframe);
    }
    let mut rows: Vec<Vec<CScalar>> = thetas.iter().map(|t| t.coeffs()).collect();
    rows.extend(thetas.iter().map(|t| t.conj().coeffs()));
    let theta = Matrix::from_rows(rows);
    let inv = theta.inverse().ok_or(StructureError::DegenerateCoframe)?;
    let mut dmat = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        dmat.set(k, k, CScalar::i());
        dmat.set(n + k, n + k, -CScalar::i());
    }
    let j = inv.mul(&dmat).mul(&theta);
    let real = j.map(|c| {
        debug_assert!(c.im.is_zero());
        c.re.clone()
    });
    Ok(Endomorphism::new(real))
}

/// Basis of `2n` vectors `e_k ± ε^k` that diagonalizes the pairing, with
/// the count of `+` and `−` values.
pub fn pairing_signature(n: usize) -> (Vec<GeneralizedVector<Scalar>>, usize, usize) {
    let mut basis = Vec::new();
    for k in 0..n {
        let e = crate::liealg::unit::<Scalar>(n, k);
        basis.push(GeneralizedVector::new(e.clone(), e.clone()));
    }
    for k in 0..n {
        let e = crate::liealg::unit::<Scalar>(n, k);
        basis.push(GeneralizedVector::new(e.clone(), e.iter().map(|x| -x).collect()));
    }
    let mut plus = 0;
    let mut minus = 0;
    for (i, v) in basis.iter().enumerate() {
        for (j, w) in basis.iter().enumerate() {
            let p = pairing(v, w);
            if i != j {
                assert!(p.is_zero());
            } else if p == Scalar::one() {
                plus += 1;
            } else if p == -Scalar::one() {
                minus += 1;
            }
        }
    }
    (basis, plus, minus)
}
