//! Nil-degree profiles and the polynomial systems they induce.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::mpoly::{MPoly, SymForm};
use super::ClassifyError;
use crate::exact::{Matrix, Scalar};
use crate::exterior::{Filtration, PForm};
use crate::liealg::{AlgebraClass, LieAlgebra};

/// Nil degrees `(nil θ_1, …, nil θ_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NilProfile {
    pub degrees: Vec<usize>,
}

impl NilProfile {
    pub fn new(degrees: Vec<usize>) -> Self {
        NilProfile { degrees }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// How many entries equal `level`.
    pub fn count_at(&self, level: usize) -> usize {
        self.degrees.iter().filter(|&&d| d == level).count()
    }
}

impl fmt::Display for NilProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Profiles of length `k` for a quasi-filiform `g` of form `t_r`.
///
/// For `r ≥ 3` these are `(1, r, r+1, …, r+k−2)` and, when `k < r`,
/// `(1, r, r, r+1, …, r+k−3)`. For `r = 1` every non-decreasing sequence
/// starting at 1 with `nil θ_i ≤ min(i, nil g)` is returned.
pub fn nil_profiles(g: &LieAlgebra, k: usize) -> Result<Vec<NilProfile>, ClassifyError> {
    let rep = g.report();
    let AlgebraClass::QuasiFiliform { r } = rep.class else {
        return Err(ClassifyError::OutOfScope(rep.class.to_string()));
    };
    if k == 0 {
        return Ok(vec![]);
    }
    if k == 1 {
        return Ok(vec![NilProfile::new(vec![1])]);
    }
    if r == 1 {
        let m = rep.nilindex.unwrap();
        let mut out = Vec::new();
        let mut cur = vec![1];
        generic(&mut cur, k, m, &mut out);
        return Ok(out);
    }
    let p1: Vec<usize> = std::iter::once(1).chain((0..k - 1).map(|i| r + i)).collect();
    let mut out = vec![NilProfile::new(p1)];
    if k >= 3 && k < r {
        let p2: Vec<usize> = [1, r, r]
            .into_iter()
            .chain((0..k - 3).map(|i| r + 1 + i))
            .collect();
        out.push(NilProfile::new(p2));
    }
    Ok(out)
}

fn generic(cur: &mut Vec<usize>, k: usize, m: usize, out: &mut Vec<NilProfile>) {
    if cur.len() == k {
        out.push(NilProfile::new(cur.clone()));
        return;
    }
    let i = cur.len() + 1;
    for d in *cur.last().unwrap()..=i.min(m) {
        cur.push(d);
        generic(cur, k, m, out);
        cur.pop();
    }
}

/// Why a profile cannot occur, from dimension counts alone.
pub fn profile_obstruction(f: &Filtration, p: &NilProfile) -> Option<String> {
    let m = f.nilindex();
    let dims = f.dims();
    if let Some(&d) = p.degrees.iter().find(|&&d| d > m) {
        return Some(format!("nil degree {d} exceeds the nilindex {m}"));
    }
    if p.degrees.windows(2).any(|w| w[0] > w[1]) || p.degrees.first() != Some(&1) {
        return Some("profile must be non-decreasing and start at 1".into());
    }
    for (i, &d) in p.degrees.iter().enumerate() {
        // θ_1 … θ_{i+1} and their conjugates are independent inside V_d ⊗ ℂ.
        let need = 2 * (i + 1);
        if p.degrees[i + 1..].first() != Some(&d) && dims[d] < need {
            return Some(format!("dim V{d} = {} < {need}", dims[d]));
        }
    }
    for level in 1..=m {
        let c = p.count_at(level);
        let q = f.quotient_dims[level - 1];
        if c > q {
            return Some(format!(
                "{c} forms of nil degree {level} but dim V{level}/V{} = {q}",
                level - 1
            ));
        }
    }
    None
}

/// The filtration's complement vectors: `levels[L−1]` completes `V_{L−1}`
/// to `V_L`; each vector is an RREF row of `V_L`, labelled by its pivot.
#[derive(Debug, Clone)]
pub struct AdaptedBasis {
    pub levels: Vec<Vec<(usize, Vec<Scalar>)>>,
}

impl AdaptedBasis {
    pub fn new(f: &Filtration) -> Self {
        let mut levels = Vec::new();
        for l in 1..f.spaces.len() {
            let prev: BTreeSet<usize> = f.spaces[l - 1].pivots().iter().copied().collect();
            let cur = &f.spaces[l];
            levels.push(
                cur.pivots()
                    .iter()
                    .zip(cur.basis())
                    .filter(|(p, _)| !prev.contains(p))
                    .map(|(&p, v)| (p, v.clone()))
                    .collect(),
            );
        }
        AdaptedBasis { levels }
    }

    /// Vectors spanning `V_level`, in level order.
    pub fn up_to(&self, level: usize) -> impl Iterator<Item = &(usize, Vec<Scalar>)> {
        self.levels[..level].iter().flatten()
    }

    pub fn top(&self, level: usize) -> &[(usize, Vec<Scalar>)] {
        &self.levels[level - 1]
    }
}

/// One equation: the coefficient of a wedge monomial in
/// `θ_{j1} ∧ … ∧ θ_{js} ∧ dθ_i` (the `θ_j` of lower nil degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    /// 0-based `i`.
    pub theta: usize,
    pub monomial: u32,
    pub poly: MPoly,
}

#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub profile: NilProfile,
    /// Variable names; the last one is the ratio `t`.
    pub names: Vec<String>,
    /// Unknowns of each `θ_i`, with the adapted basis vector they multiply.
    pub theta_vars: Vec<Vec<(usize, Vec<Scalar>)>>,
    /// The unknowns on `V_{nil θ_i} / V_{nil θ_i − 1}`.
    pub top_vars: Vec<Vec<usize>>,
    pub equations: Vec<Equation>,
    pub side_conditions: Vec<String>,
    pub t: usize,
}

impl ConstraintSystem {
    pub fn display(&self, p: &MPoly) -> String {
        p.display(&self.names)
    }

    pub fn equation_strings(&self) -> Vec<String> {
        self.equations.iter().map(|e| self.display(&e.poly)).collect()
    }

    pub fn theta_form(&self, i: usize, dim: usize) -> SymForm {
        let parts: Vec<(usize, PForm)> = self.theta_vars[i]
            .iter()
            .map(|(v, e)| (*v, PForm::from_real_coeffs(e)))
            .collect();
        SymForm::combination(dim, &parts)
    }

    /// Lower nil degree than `θ_i`.
    pub fn predecessors(&self, i: usize) -> Vec<usize> {
        let d = self.profile.degrees[i];
        (0..i).filter(|&j| self.profile.degrees[j] < d).collect()
    }
}

fn prefix(i: usize) -> String {
    match i {
        0 => "l".into(),
        1 => "b".into(),
        2 => "g".into(),
        _ => format!("c{}_", i + 1),
    }
}

/// Unknown coefficients for each `θ_i` on `V_{nil θ_i}`, and the equations
/// `θ_{j1} ∧ … ∧ θ_{js} ∧ dθ_i = 0` over the `θ_j` of lower nil degree.
pub fn extract_constraints(
    g: &LieAlgebra,
    f: &Filtration,
    profile: &NilProfile,
) -> Result<ConstraintSystem, ClassifyError> {
    if let Some(&d) = profile.degrees.iter().find(|&&d| d == 0 || d > f.nilindex()) {
        return Err(ClassifyError::Profile(format!("nil degree {d} out of range")));
    }
    let basis = AdaptedBasis::new(f);
    let dim = g.dim();
    let mut names = Vec::new();
    let mut theta_vars = Vec::new();
    let mut top_vars = Vec::new();
    for (i, &d) in profile.degrees.iter().enumerate() {
        let mut vars = Vec::new();
        let mut top = Vec::new();
        for (level, vecs) in basis.levels[..d].iter().enumerate() {
            for (p, v) in vecs {
                names.push(format!("{}{p}", prefix(i)));
                vars.push((names.len() - 1, v.clone()));
                if level + 1 == d {
                    top.push(names.len() - 1);
                }
            }
        }
        theta_vars.push(vars);
        top_vars.push(top);
    }
    names.push("t".into());
    let t = names.len() - 1;
    let mut sys = ConstraintSystem {
        profile: profile.clone(),
        names,
        theta_vars,
        top_vars,
        equations: Vec::new(),
        side_conditions: Vec::new(),
        t,
    };

    let thetas: Vec<SymForm> = (0..profile.len()).map(|i| sys.theta_form(i, dim)).collect();
    for i in 0..profile.len() {
        let dparts: Vec<(usize, PForm)> = sys.theta_vars[i]
            .iter()
            .map(|(v, e)| (*v, PForm::from_real_coeffs(e).d(g)))
            .collect();
        let dtheta = SymForm::combination(dim, &dparts);
        let lhs = sys
            .predecessors(i)
            .iter()
            .fold(SymForm::one(dim), |acc, &j| acc.wedge(&thetas[j]))
            .wedge(&dtheta);
        for (m, p) in lhs.terms {
            sys.equations.push(Equation {
                theta: i,
                monomial: m,
                poly: p,
            });
        }
    }

    let first = &sys.theta_vars[0];
    sys.side_conditions.push(if first.len() == 2 {
        format!(
            "Im({}·conj({})) ≠ 0",
            sys.names[first[0].0], sys.names[first[1].0]
        )
    } else {
        "θ1 ∧ conj(θ1) ≠ 0".into()
    });
    for (i, top) in sys.top_vars.iter().enumerate() {
        let vs: Vec<&str> = top.iter().map(|&v| sys.names[v].as_str()).collect();
        if vs.len() == 1 {
            sys.side_conditions.push(format!("{} ≠ 0", vs[0]));
        } else {
            sys.side_conditions
                .push(format!("({}) ≠ 0  [nil θ{} = {}]", vs.join(", "), i + 1, profile.degrees[i]));
        }
    }
    for level in 1..=f.nilindex() {
        let at: Vec<String> = (0..profile.len())
            .filter(|&i| profile.degrees[i] == level)
            .map(|i| format!("θ{}", i + 1))
            .collect();
        if at.len() > 1 {
            sys.side_conditions
                .push(format!("{} independent modulo V{}", at.join(", "), level - 1));
        }
    }
    Ok(sys)
}

/// `θ_i` as a concrete form from values of its unknowns.
pub fn theta_from_values(sys: &ConstraintSystem, i: usize, vals: &[crate::exact::CScalar]) -> PForm {
    let dim = sys.theta_vars[i].first().map_or(0, |(_, e)| e.len());
    let cols: Vec<Vec<Scalar>> = sys.theta_vars[i].iter().map(|(_, e)| e.clone()).collect();
    let m = Matrix::from_cols(cols, dim).map(|x| crate::exact::CScalar::real(x.clone()));
    PForm::from_coeffs(&m.mul_vec(vals))
}
