//! Exact arithmetic: rationals, Gaussian rationals, univariate polynomials
//! with Sturm root counting, and dense matrices over either field.

mod complex;
mod matrix;
mod poly;
mod scalar;

pub use complex::CScalar;
pub use matrix::Matrix;
pub use poly::{has_nonreal_root, real_root_count, UPoly};
pub use scalar::Scalar;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    Parse(String),
    #[error("indeterminate root count")]
    IndeterminateRootCount,
    #[error("no roots")]
    NoRoots,
}

/// The two coefficient fields used throughout: ℚ and ℚ(i).
///
/// Arithmetic goes through borrowed methods so generic code never has to
/// clone big rationals just to satisfy operator signatures.
pub trait Field:
    Clone + Eq + Hash + Ord + Debug + Display + Zero + One + Send + Sync + 'static
{
    fn from_scalar(s: Scalar) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, o: &Self) -> Self {
        self.mul_ref(&o.inv().expect("division by zero"))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_scalar(Scalar::int(n))
    }
}

impl Field for Scalar {
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl Field for CScalar {
    fn from_scalar(s: Scalar) -> Self {
        CScalar::real(s)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

/// Lift a rational vector into ℚ(i).
pub fn complexify(v: &[Scalar]) -> Vec<CScalar> {
    v.iter().cloned().map(CScalar::real).collect()
}
