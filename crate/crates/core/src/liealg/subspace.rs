use crate::exact::{CScalar, Field, Matrix, Scalar};

/// A linear subspace of `F^n`, held as the nonzero rows of a reduced echelon
/// basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F: Field = Scalar> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = Matrix::<F>::identity(ambient).to_rows();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let vs: Vec<Vec<F>> = vectors.into_iter().collect();
        if vs.is_empty() {
            return Self::zero(ambient);
        }
        assert!(vs.iter().all(|v| v.len() == ambient), "ambient mismatch");
        let (r, pivots) = Matrix::from_rows(vs).rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    /// {x : ⟨r, x⟩ = 0 for every r}.
    pub fn kernel_of(ambient: usize, rows: Vec<Vec<F>>) -> Self {
        if rows.is_empty() {
            return Self::full(ambient);
        }
        Self::span(ambient, Matrix::from_rows(rows).nullspace())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The residue of `v` after clearing every pivot coordinate; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.sub_ref(&c.mul_ref(y));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, o: &Self) -> bool {
        o.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, o: &Self) -> Self {
        Self::span(
            self.ambient,
            self.rows.iter().chain(&o.rows).cloned().collect::<Vec<_>>(),
        )
    }

    /// Orthogonal complement under the coordinate pairing; for a subspace of
    /// `g` this is its annihilator in `g*`, and vice versa.
    pub fn annihilator(&self) -> Self {
        Self::kernel_of(self.ambient, self.rows.clone())
    }

    /// Rank of a family of vectors modulo this subspace.
    pub fn rank_modulo(&self, vs: &[Vec<F>]) -> usize {
        let red: Vec<Vec<F>> = vs.iter().map(|v| self.reduce(v)).collect();
        if red.is_empty() {
            0
        } else {
            Matrix::from_rows(red).rank()
        }
    }
}

impl Subspace<Scalar> {
    pub fn complexify(&self) -> Subspace<CScalar> {
        Subspace {
            ambient: self.ambient,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().cloned().map(CScalar::real).collect())
                .collect(),
            pivots: self.pivots.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Scalar> {
        x.iter().map(|&a| Scalar::int(a)).collect()
    }

    #[test]
    fn membership_and_annihilator() {
        let s = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[1, 2, 1])));
        assert!(!s.contains(&v(&[1, 0, 0])));
        let a = s.annihilator();
        assert_eq!(a.dim(), 1);
        assert!(a.contains(&v(&[1, -1, 1])));
        assert_eq!(s.rank_modulo(&[v(&[1, 0, 0]), v(&[0, 1, 0])]), 1);
    }
}
