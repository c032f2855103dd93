//! Named algebras.
//!
//! All algebras are given in a homogeneous basis `X0, X1, …`; brackets not
//! listed are zero.

use serde::Serialize;

use super::{LieAlgebra, LieError, RawAlgebra};
use crate::exact::Scalar;

fn build(raw: RawAlgebra) -> LieAlgebra {
    LieAlgebra::new(raw).expect("catalog entries satisfy Jacobi")
}

fn sign(i: usize) -> i64 {
    if (i - 1) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `L_{2n−1} ⊕ ℝ`: `[X0,Xi] = X_{i+1}` for `1 ≤ i ≤ 2n−3`, `X_{2n−1}` central.
pub fn l_plus_r(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::Parameter("l_plus_r requires n ≥ 2".into()));
    }
    let mut raw = RawAlgebra::new(2 * n);
    for i in 1..=2 * n - 3 {
        raw.set(0, i, i + 1, 1);
    }
    Ok(build(raw))
}

/// `L_{2n,r}`: the filiform chain plus `[Xi, X_{r−i}] = (−1)^{i−1} X_{2n−1}`.
pub fn l_2n_r(n: usize, r: usize) -> Result<LieAlgebra, LieError> {
    if n < 3 || r % 2 == 0 || r < 3 || r > 2 * n - 3 {
        return Err(LieError::Parameter(format!(
            "l_2n_r requires n ≥ 3, r odd, 3 ≤ r ≤ 2n−3 (got n = {n}, r = {r})"
        )));
    }
    let mut raw = RawAlgebra::new(2 * n);
    for i in 1..=2 * n - 3 {
        raw.set(0, i, i + 1, 1);
    }
    for i in 1..=(r - 1) / 2 {
        raw.set(i, r - i, 2 * n - 1, sign(i));
    }
    Ok(build(raw))
}

/// `T_{2n,2n−3}`.
pub fn t_2n(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 3 {
        return Err(LieError::Parameter(format!("t_2n requires n ≥ 3 (got n = {n})")));
    }
    let top = 2 * n - 1;
    let mut raw = RawAlgebra::new(2 * n);
    for i in 1..=2 * n - 4 {
        raw.set(0, i, i + 1, 1);
    }
    raw.set(0, top, 2 * n - 2, 1);
    for i in 1..=n - 2 {
        raw.set(i, 2 * n - 3 - i, top, sign(i));
        raw.set(i, 2 * n - 2 - i, 2 * n - 2, sign(i) * (n - 1 - i) as i64);
    }
    Ok(build(raw))
}

/// `N_{6,3}`: `[X0,Xi] = X_{i+1}` (i = 1,2,3), `[X1,X2] = X5`, `[X1,X5] = X4`.
pub fn n6_3() -> LieAlgebra {
    dim6(&Scalar::int(1))
}

/// The dimension-6 family: as `N_{6,3}` but `[X1,X5] = δ X4`.
pub fn dim6(delta: &Scalar) -> LieAlgebra {
    let mut raw = RawAlgebra::new(6);
    for i in 1..=3 {
        raw.set(0, i, i + 1, 1);
    }
    raw.set(1, 2, 5, 1);
    raw.add(1, 5, 4, delta.clone());
    build(raw)
}

/// Salamon's presentation of `n_{6,3}`, labelled `X1 … X6`.
pub fn n6_3_salamon() -> LieAlgebra {
    let mut raw = RawAlgebra::new(6).with_labels((1..=6).map(|i| format!("X{i}")).collect());
    raw.set(0, 1, 2, 1);
    raw.set(0, 2, 3, 1);
    raw.set(0, 3, 5, 1);
    raw.set(1, 2, 4, -1);
    raw.set(1, 4, 5, -1);
    build(raw)
}

/// The un-normalized dimension-6 `t_3` family with parameters `a`, `b`.
pub fn t3(a: &Scalar, b: &Scalar) -> LieAlgebra {
    let mut raw = RawAlgebra::new(6);
    for i in 1..=3 {
        raw.set(0, i, i + 1, 1);
    }
    raw.add(1, 3, 4, b.clone());
    raw.add(1, 2, 3, b.clone());
    raw.set(1, 2, 5, -1);
    raw.add(5, 1, 4, a.clone());
    build(raw)
}

/// The model filiform algebra of dimension `d`: `[X0,Xi] = X_{i+1}`.
pub fn filiform(d: usize) -> Result<LieAlgebra, LieError> {
    if d < 3 {
        return Err(LieError::Parameter(format!("filiform requires dimension ≥ 3 (got {d})")));
    }
    let mut raw = RawAlgebra::new(d);
    for i in 1..=d - 2 {
        raw.set(0, i, i + 1, 1);
    }
    Ok(build(raw))
}

pub fn abelian(d: usize) -> Result<LieAlgebra, LieError> {
    if d == 0 {
        return Err(LieError::Parameter("abelian requires dimension ≥ 1".into()));
    }
    Ok(build(RawAlgebra::new(d)))
}

#[derive(Debug, Clone, Default)]
pub struct CatalogParams {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub delta: Option<Scalar>,
    pub a: Option<Scalar>,
    pub b: Option<Scalar>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static str,
    pub description: &'static str,
}

pub fn catalog_list() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "l_plus_r",
            params: "--n N (n ≥ 2)",
            description: "L_{2n-1} ⊕ R, quasi-filiform t1, dimension 2n",
        },
        CatalogEntry {
            name: "l_2n_r",
            params: "--n N --r R (n ≥ 3, r odd, 3 ≤ r ≤ 2n-3)",
            description: "L_{2n,r}, quasi-filiform t_r",
        },
        CatalogEntry {
            name: "t_2n",
            params: "--n N (n ≥ 3)",
            description: "T_{2n,2n-3}, quasi-filiform t_{2n-3}",
        },
        CatalogEntry {
            name: "n6_3",
            params: "",
            description: "N_{6,3} (equal to dim6 with delta = 1)",
        },
        CatalogEntry {
            name: "n6_3_salamon",
            params: "",
            description: "n_{6,3} in Salamon's basis X1..X6",
        },
        CatalogEntry {
            name: "dim6",
            params: "--delta D (rational)",
            description: "dimension-6 t3 family with [X1,X5] = delta X4",
        },
        CatalogEntry {
            name: "t3",
            params: "--a A --b B (rational)",
            description: "un-normalized dimension-6 t3 family",
        },
        CatalogEntry {
            name: "filiform",
            params: "--n D (dimension, D ≥ 3)",
            description: "model filiform algebra [X0,Xi] = X_{i+1}",
        },
        CatalogEntry {
            name: "abelian",
            params: "--n D (dimension, D ≥ 1)",
            description: "abelian algebra",
        },
    ]
}

fn need<T: Clone>(v: &Option<T>, flag: &str, name: &str) -> Result<T, LieError> {
    v.clone()
        .ok_or_else(|| LieError::Parameter(format!("{name} requires --{flag}")))
}

/// Look up a catalog algebra by its command-line name.
pub fn catalog(name: &str, p: &CatalogParams) -> Result<LieAlgebra, LieError> {
    match name {
        "l_plus_r" => l_plus_r(need(&p.n, "n", name)?),
        "l_2n_r" => l_2n_r(need(&p.n, "n", name)?, need(&p.r, "r", name)?),
        "t_2n" => t_2n(need(&p.n, "n", name)?),
        "n6_3" => Ok(n6_3()),
        "n6_3_salamon" => Ok(n6_3_salamon()),
        "dim6" => Ok(dim6(&need(&p.delta, "delta", name)?)),
        "t3" => Ok(t3(&need(&p.a, "a", name)?, &need(&p.b, "b", name)?)),
        "filiform" => filiform(need(&p.n, "n", name)?),
        "abelian" => abelian(need(&p.n, "n", name)?),
        other => Err(LieError::Parameter(format!(
            "unknown catalog name `{other}` (see `catalog --list`)"
        ))),
    }
}
