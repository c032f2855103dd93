//! Deciding whether a nilpotent Lie algebra carries a generalized complex
//! structure of type `n` (equivalently a complex structure), with
//! replayable obstruction certificates and verified witnesses.
//!
//! The decision runs in three layers. The type bound `k ≤ 2n − m + j − 2`
//! disposes of filiform-like algebras outright. For quasi-filiform algebras
//! every admissible nil-degree profile of the coframe `θ_1 … θ_n` is reduced
//! to a polynomial system; with `dim V_1 = 2` the ratio `t = λ_1/λ_0` of
//! `θ_1` must then be a non-real root of a univariate polynomial, which a
//! Sturm count can rule out. Profiles that survive go to a bounded search
//! for an explicit coframe, accepted only after full verification.

mod mpoly;
mod system;
mod witness;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

pub use mpoly::{MPoly, Monomial, SymForm};
pub use system::{
    extract_constraints, nil_profiles, profile_obstruction, theta_from_values, AdaptedBasis,
    ConstraintSystem, Equation, NilProfile,
};
pub use witness::{normalize, verify_witness, Stage, WitnessReport};

use crate::exact::{has_nonreal_root, real_root_count, CScalar, Matrix, Scalar, UPoly};
use crate::exterior::{annihilator_filtration, ExteriorError, Filtration, PForm};
use crate::liealg::{AlgebraClass, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("out of classified scope: {0}")]
    OutOfScope(String),
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error("theorem inapplicable: no index j with dim V_(i+1)/V_i = 1 for all i ≥ j")]
    TheoremInapplicable,
    #[error("odd dimension {0}")]
    OddDimension(usize),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Node budget for the witness search per profile.
pub const SEARCH_BUDGET: usize = 200_000;

pub(crate) fn ser_matrix_opt<S: Serializer>(m: &Option<Matrix<Scalar>>, s: S) -> Result<S::Ok, S::Error> {
    m.as_ref()
        .map(|m| {
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .serialize(s)
}

/// Upper bound on the type of any generalized complex structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeBound {
    pub n: usize,
    pub nilindex: usize,
    pub j: usize,
    pub k_max: usize,
}

impl TypeBound {
    /// No structure of type `n`, hence no complex structure.
    pub fn excludes_complex(&self) -> bool {
        self.k_max < self.n
    }
}

/// `k ≤ 2n − m + j − 2` when `j > 1`, `k ≤ 2n − m` when `j = 1`.
pub fn type_bound(g: &LieAlgebra) -> Result<TypeBound, ClassifyError> {
    let dim = g.dim();
    if dim % 2 == 1 {
        return Err(ClassifyError::OddDimension(dim));
    }
    let f = annihilator_filtration(g)?;
    let j = f.j_index.ok_or(ClassifyError::TheoremInapplicable)?;
    let m = f.nilindex();
    let n = dim / 2;
    let k_max = if j > 1 { (2 * n + j - 2).saturating_sub(m) } else { (2 * n).saturating_sub(m) };
    Ok(TypeBound { n, nilindex: m, j, k_max })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContradictionKind {
    /// Dimension counts rule the profile out.
    ProfileInadmissible,
    /// Some top component is forced to vanish for every `t`.
    ForcedVanishing,
    /// `t` must be a root of a polynomial whose roots are all real.
    RealRootsOnly,
    /// The type bound is below `n`.
    TypeBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Contradiction {
    pub kind: ContradictionKind,
    pub detail: String,
    pub polynomial: Option<UPoly>,
    /// Distinct real roots of `polynomial`.
    pub real_roots: Option<usize>,
}

/// One step of an elimination trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// `λ_0 = 0` would make `θ_1` real up to scale.
    BranchLambda0 { reason: String },
    Substitute { assignments: Vec<(String, String)> },
    /// Nonzero top unknowns divided out of an equation.
    Factor { equation: usize, factors: Vec<String>, result: String },
    /// An equation in `t` alone.
    Relation { equation: usize, polynomial: UPoly },
    /// Linear system on the top components of the `θ`s at one level.
    LevelReduction {
        level: usize,
        thetas: Vec<usize>,
        eliminated: Vec<String>,
        unknowns: Vec<String>,
        rows: Vec<Vec<UPoly>>,
        minor_size: usize,
        polynomial: UPoly,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub profile: Option<NilProfile>,
    pub equations: Vec<String>,
    pub side_conditions: Vec<String>,
    pub steps: Vec<Step>,
    pub conclusion: Contradiction,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub thetas: Vec<PForm>,
    pub report: WitnessReport,
}

/// What is left when neither a contradiction nor a witness was found.
#[derive(Debug, Clone, Serialize)]
pub struct Residual {
    pub equations: Vec<String>,
    pub side_conditions: Vec<String>,
    pub steps: Vec<Step>,
    pub polynomial: Option<UPoly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Admits,
    Obstructed,
    Undecided,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Admits => "admits",
            Outcome::Obstructed => "obstructed",
            Outcome::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileVerdict {
    pub profile: NilProfile,
    pub outcome: Outcome,
    pub certificate: Option<Certificate>,
    pub witness: Option<Witness>,
    pub residual: Option<Residual>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub class: AlgebraClass,
    pub bound: Option<TypeBound>,
    pub profiles: Vec<ProfileVerdict>,
    pub witness: Option<Witness>,
    /// Set when the type bound alone obstructs.
    pub certificate: Option<Certificate>,
}

enum End {
    Contradiction(Contradiction),
    /// `t` must be a root of this polynomial (with a non-real root).
    Relation(UPoly),
    NoRelation,
}

fn to_upoly(p: &MPoly, t: usize) -> Option<UPoly> {
    let mut c: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (m, x) in p.terms() {
        if !x.is_real() || m.iter().any(|&(v, _)| v != t) {
            return None;
        }
        c.insert(m.first().map_or(0, |&(_, e)| e as usize), x.re.clone());
    }
    let top = c.keys().max().copied()?;
    let mut v = vec![Scalar::zero(); top + 1];
    for (k, x) in c {
        v[k] = x;
    }
    Some(UPoly::new(v))
}

/// Rows constraining the top component of `θ_a` after eliminating its lower
/// unknowns with constant pivots; rows still mentioning them are dropped.
fn reduce_theta(sys: &ConstraintSystem, eqs: &[MPoly], a: usize) -> (Vec<String>, Vec<Vec<UPoly>>) {
    let vars: BTreeSet<usize> = sys.theta_vars[a].iter().map(|(v, _)| *v).collect();
    let top = &sys.top_vars[a];
    let mut rows: Vec<BTreeMap<usize, UPoly>> = eqs
        .iter()
        .filter_map(|e| e.as_linear_in(&vars, sys.t))
        .filter(|r| !r.is_empty())
        .collect();
    let mut eliminated = Vec::new();
    for &x in vars.iter().filter(|v| !top.contains(v)) {
        let Some(pi) = rows
            .iter()
            .position(|r| r.get(&x).is_some_and(|p| p.degree() == Some(0)))
        else {
            continue;
        };
        let prow = rows.remove(pi);
        let inv = prow[&x].coeff(0).recip().unwrap();
        for r in rows.iter_mut() {
            if let Some(px) = r.get(&x).cloned() {
                let f = px.scale(&inv);
                for (u, pu) in &prow {
                    let cur = r.entry(*u).or_insert_with(|| UPoly::new(vec![]));
                    *cur = cur.sub(&f.mul(pu));
                }
                r.retain(|_, p| !p.is_zero());
            }
        }
        eliminated.push(sys.names[x].clone());
    }
    let mut out: Vec<Vec<UPoly>> = Vec::new();
    for r in rows {
        if !r.keys().all(|u| top.contains(u)) {
            continue;
        }
        let row: Vec<UPoly> = top
            .iter()
            .map(|u| r.get(u).cloned().unwrap_or_else(|| UPoly::new(vec![])))
            .collect();
        let lead = row.iter().find(|p| !p.is_zero()).unwrap().leading();
        let row: Vec<UPoly> = row.iter().map(|p| p.scale(&lead.recip().unwrap())).collect();
        if !out.contains(&row) {
            out.push(row);
        }
    }
    (eliminated, out)
}

fn det(m: &[Vec<UPoly>]) -> UPoly {
    match m.len() {
        0 => UPoly::constant(Scalar::one()),
        1 => m[0][0].clone(),
        n => {
            let mut s = UPoly::new(vec![]);
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<UPoly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][c].mul(&det(&minor));
                s = if c % 2 == 0 { s.add(&term) } else { s.sub(&term) };
            }
            s
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Monic gcd of all `s × s` minors; zero if they all vanish.
fn minors_gcd(rows: &[Vec<UPoly>], s: usize) -> UPoly {
    let q = rows.first().map_or(0, |r| r.len());
    let mut g = UPoly::new(vec![]);
    if s == 0 || rows.len() < s || q < s {
        return g;
    }
    for rs in subsets(rows.len(), s) {
        for cs in subsets(q, s) {
            let m: Vec<Vec<UPoly>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect())
                .collect();
            g = g.gcd(&det(&m));
            if g.degree() == Some(0) {
                return g;
            }
        }
    }
    g
}

/// The `θ_1 = e_a + t e_b` branch: substitute, factor, reduce level by
/// level, and combine the resulting relations on `t`.
fn t_path(sys: &ConstraintSystem) -> (Vec<Step>, End) {
    let names = &sys.names;
    let (l0, l1) = (sys.theta_vars[0][0].0, sys.theta_vars[0][1].0);
    let t = sys.t;
    let mut steps = vec![
        Step::BranchLambda0 {
            reason: format!(
                "{} = 0 makes θ1 a complex multiple of a real form, so θ1 ∧ conj(θ1) = 0",
                names[l0]
            ),
        },
        Step::Substitute {
            assignments: vec![(names[l0].clone(), "1".into()), (names[l1].clone(), "t".into())],
        },
    ];
    let mut eqs: Vec<MPoly> = sys
        .equations
        .iter()
        .map(|e| {
            e.poly
                .substitute(l0, &MPoly::constant(CScalar::one()))
                .substitute(l1, &MPoly::var(t))
        })
        .collect();

    let single: Vec<usize> = sys.top_vars[1..]
        .iter()
        .filter(|v| v.len() == 1)
        .map(|v| v[0])
        .collect();
    let mut relations = Vec::new();
    for (k, e) in eqs.iter_mut().enumerate() {
        let mut removed = Vec::new();
        for &u in &single {
            while !e.is_zero() {
                match e.divide_by_var(u) {
                    Some(q) => {
                        *e = q;
                        removed.push(names[u].clone());
                    }
                    None => break,
                }
            }
        }
        if !removed.is_empty() {
            steps.push(Step::Factor {
                equation: k,
                factors: removed,
                result: e.display(names),
            });
        }
        if let Some(p) = to_upoly(e, t) {
            steps.push(Step::Relation {
                equation: k,
                polynomial: p.clone(),
            });
            if p.degree() == Some(0) {
                return (
                    steps,
                    End::Contradiction(Contradiction {
                        kind: ContradictionKind::ForcedVanishing,
                        detail: format!("equation {k} reduces to a nonzero constant"),
                        polynomial: Some(p),
                        real_roots: Some(0),
                    }),
                );
            }
            relations.push(p);
        }
    }

    let degrees = &sys.profile.degrees;
    let levels: BTreeSet<usize> = degrees[1..].iter().copied().collect();
    for level in levels {
        let at: Vec<usize> = (1..degrees.len()).filter(|&a| degrees[a] == level).collect();
        let reds: Vec<(Vec<String>, Vec<Vec<UPoly>>)> =
            at.iter().map(|&a| reduce_theta(sys, &eqs, a)).collect();
        let shared = reds.windows(2).all(|w| w[0].1 == w[1].1);
        let groups: Vec<Vec<usize>> = if shared {
            vec![(0..at.len()).collect()]
        } else {
            (0..at.len()).map(|i| vec![i]).collect()
        };
        for group in groups {
            let (elim, rows) = &reds[group[0]];
            let q = sys.top_vars[at[group[0]]].len();
            let s = q + 1 - group.len();
            let g = minors_gcd(rows, s);
            if g.is_zero() {
                continue;
            }
            let thetas: Vec<usize> = group.iter().map(|&i| at[i] + 1).collect();
            steps.push(Step::LevelReduction {
                level,
                thetas: thetas.clone(),
                eliminated: elim.clone(),
                unknowns: sys.top_vars[at[group[0]]].iter().map(|&u| names[u].clone()).collect(),
                rows: rows.clone(),
                minor_size: s,
                polynomial: g.clone(),
            });
            if g.degree() == Some(0) {
                let ts: Vec<String> = thetas.iter().map(|i| format!("θ{i}")).collect();
                return (
                    steps,
                    End::Contradiction(Contradiction {
                        kind: ContradictionKind::ForcedVanishing,
                        detail: format!(
                            "the top components of {} cannot be independent and nonzero for any t",
                            ts.join(", ")
                        ),
                        polynomial: Some(g),
                        real_roots: Some(0),
                    }),
                );
            }
            relations.push(g);
        }
    }

    let Some(first) = relations.first() else {
        return (steps, End::NoRelation);
    };
    let g = relations.iter().fold(first.monic(), |acc, p| acc.gcd(p));
    if g.degree() == Some(0) {
        return (
            steps,
            End::Contradiction(Contradiction {
                kind: ContradictionKind::ForcedVanishing,
                detail: "the relations on t have no common root".into(),
                polynomial: Some(g),
                real_roots: Some(0),
            }),
        );
    }
    if !has_nonreal_root(&g).unwrap() {
        let r = real_root_count(&g).unwrap();
        return (
            steps,
            End::Contradiction(Contradiction {
                kind: ContradictionKind::RealRootsOnly,
                detail: format!("t = λ1/λ0 must be non-real, but every root of {g} is real"),
                polynomial: Some(g),
                real_roots: Some(r),
            }),
        );
    }
    (steps, End::Relation(g))
}

fn certificate(sys: &ConstraintSystem, steps: Vec<Step>, c: Contradiction) -> Certificate {
    Certificate {
        profile: Some(sys.profile.clone()),
        equations: sys.equation_strings(),
        side_conditions: sys.side_conditions.clone(),
        steps,
        conclusion: c,
    }
}

fn witness(g: &LieAlgebra, thetas: Vec<PForm>) -> Witness {
    let report = verify_witness(g, &thetas);
    Witness { thetas, report }
}

/// Decide one profile.
pub fn decide_profile(g: &LieAlgebra, profile: &NilProfile) -> Result<ProfileVerdict, ClassifyError> {
    let f = annihilator_filtration(g)?;
    decide_with(g, &f, profile)
}

fn decide_with(g: &LieAlgebra, f: &Filtration, profile: &NilProfile) -> Result<ProfileVerdict, ClassifyError> {
    let verdict = |outcome, certificate, witness, residual| ProfileVerdict {
        profile: profile.clone(),
        outcome,
        certificate,
        witness,
        residual,
    };
    if let Some(reason) = profile_obstruction(f, profile) {
        let cert = Certificate {
            profile: Some(profile.clone()),
            equations: vec![],
            side_conditions: vec![],
            steps: vec![],
            conclusion: Contradiction {
                kind: ContradictionKind::ProfileInadmissible,
                detail: reason,
                polynomial: None,
                real_roots: None,
            },
        };
        return Ok(verdict(Outcome::Obstructed, Some(cert), None, None));
    }
    let sys = extract_constraints(g, f, profile)?;
    let basis = AdaptedBasis::new(f);
    let mut search = witness::Search {
        g,
        f,
        basis: &basis,
        profile,
        budget: SEARCH_BUDGET,
    };
    let residual = |steps, polynomial| Residual {
        equations: sys.equation_strings(),
        side_conditions: sys.side_conditions.clone(),
        steps,
        polynomial,
    };
    if sys.theta_vars[0].len() != 2 {
        let mut chosen = Vec::new();
        return Ok(match search.run(&mut chosen) {
            Some(w) => verdict(Outcome::Admits, None, Some(witness(g, w)), None),
            None => verdict(Outcome::Undecided, None, None, Some(residual(vec![], None))),
        });
    }
    let (steps, end) = t_path(&sys);
    let (ts, poly) = match end {
        End::Contradiction(c) => {
            return Ok(verdict(Outcome::Obstructed, Some(certificate(&sys, steps, c)), None, None))
        }
        End::Relation(p) => {
            let roots: Vec<CScalar> = p.gaussian_roots().into_iter().filter(|r| !r.is_real()).collect();
            (roots, Some(p))
        }
        End::NoRelation => (vec![CScalar::i()], None),
    };
    for t in &ts {
        if let Some(w) = search.run_from(witness::theta1_at(&basis, t)) {
            return Ok(verdict(Outcome::Admits, None, Some(witness(g, w)), None));
        }
    }
    Ok(verdict(Outcome::Undecided, None, None, Some(residual(steps, poly))))
}

fn bound_certificate(b: &TypeBound) -> Certificate {
    Certificate {
        profile: None,
        equations: vec![],
        side_conditions: vec![],
        steps: vec![],
        conclusion: Contradiction {
            kind: ContradictionKind::TypeBound,
            detail: format!(
                "type ≤ {} < n = {} (nilindex {}, j = {})",
                b.k_max, b.n, b.nilindex, b.j
            ),
            polynomial: None,
            real_roots: None,
        },
    }
}

/// Full decision for `g`.
pub fn classify(g: &LieAlgebra) -> Result<Verdict, ClassifyError> {
    let dim = g.dim();
    if dim % 2 == 1 {
        return Err(ClassifyError::OddDimension(dim));
    }
    let class = g.report().class;
    if matches!(class, AlgebraClass::NotNilpotent | AlgebraClass::Abelian) {
        return Err(ClassifyError::OutOfScope(class.to_string()));
    }
    let bound = match type_bound(g) {
        Ok(b) => Some(b),
        Err(ClassifyError::TheoremInapplicable) => None,
        Err(e) => return Err(e),
    };
    if let Some(b) = bound.as_ref().filter(|b| b.excludes_complex()) {
        return Ok(Verdict {
            outcome: Outcome::Obstructed,
            class,
            certificate: Some(bound_certificate(b)),
            bound,
            profiles: vec![],
            witness: None,
        });
    }
    if !matches!(class, AlgebraClass::QuasiFiliform { .. }) {
        return Err(ClassifyError::OutOfScope(class.to_string()));
    }
    let f = annihilator_filtration(g)?;
    let mut profiles = Vec::new();
    for p in nil_profiles(g, dim / 2)? {
        let v = decide_with(g, &f, &p)?;
        let done = v.outcome == Outcome::Admits;
        profiles.push(v);
        if done {
            break;
        }
    }
    let witness = profiles.iter().find_map(|p| p.witness.clone());
    let outcome = if witness.is_some() {
        Outcome::Admits
    } else if profiles.iter().all(|p| p.outcome == Outcome::Obstructed) {
        Outcome::Obstructed
    } else {
        Outcome::Undecided
    };
    Ok(Verdict {
        outcome,
        class,
        bound,
        profiles,
        witness,
        certificate: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("certificate does not replay: {0}")]
pub struct ReplayError(pub String);

/// Recompute a certificate from `g` alone and recheck its conclusion.
pub fn replay(g: &LieAlgebra, cert: &Certificate) -> Result<(), ReplayError> {
    let fail = |s: &str| Err(ReplayError(s.into()));
    let err = |e: ClassifyError| ReplayError(e.to_string());
    match cert.conclusion.kind {
        ContradictionKind::TypeBound => {
            let b = type_bound(g).map_err(err)?;
            if !b.excludes_complex() {
                return fail("the type bound does not exclude type n");
            }
            if bound_certificate(&b) != *cert {
                return fail("bound data differ");
            }
            Ok(())
        }
        ContradictionKind::ProfileInadmissible => {
            let f = annihilator_filtration(g).map_err(|e| err(e.into()))?;
            let p = cert.profile.as_ref().ok_or(ReplayError("missing profile".into()))?;
            match profile_obstruction(&f, p) {
                Some(r) if r == cert.conclusion.detail => Ok(()),
                _ => fail("profile is not inadmissible for the stated reason"),
            }
        }
        ContradictionKind::ForcedVanishing | ContradictionKind::RealRootsOnly => {
            let f = annihilator_filtration(g).map_err(|e| err(e.into()))?;
            let p = cert.profile.as_ref().ok_or(ReplayError("missing profile".into()))?;
            let sys = extract_constraints(g, &f, p).map_err(err)?;
            if sys.equation_strings() != cert.equations {
                return fail("equations differ");
            }
            if sys.theta_vars[0].len() != 2 {
                return fail("no t-parametrization for this algebra");
            }
            let (steps, end) = t_path(&sys);
            if steps != cert.steps {
                return fail("elimination trace differs");
            }
            let End::Contradiction(c) = end else {
                return fail("recomputation reaches no contradiction");
            };
            if c != cert.conclusion {
                return fail("conclusion differs");
            }
            let poly = c.polynomial.as_ref().ok_or(ReplayError("missing polynomial".into()))?;
            match c.kind {
                ContradictionKind::RealRootsOnly => {
                    if has_nonreal_root(poly) != Ok(false)
                        || real_root_count(poly).ok() != c.real_roots
                    {
                        return fail("root count does not check");
                    }
                }
                _ => {
                    if poly.degree() != Some(0) {
                        return fail("expected a nonzero constant");
                    }
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn minors_of_identity() {
        let one = UPoly::constant(Scalar::one());
        let z = UPoly::new(vec![]);
        let rows = vec![vec![one.clone(), z.clone()], vec![z, one]];
        assert_eq!(minors_gcd(&rows, 2), UPoly::constant(Scalar::one()));
        assert!(minors_gcd(&rows, 3).is_zero());
    }

    #[test]
    fn dim6_relation_is_t2_plus_delta() {
        for d in [-1, 0, 1, 2] {
            let g = catalog::dim6(&Scalar::int(d));
            let f = annihilator_filtration(&g).unwrap();
            let p = NilProfile::new(vec![1, 3, 4]);
            let sys = extract_constraints(&g, &f, &p).unwrap();
            let (_, end) = t_path(&sys);
            let want = UPoly::from_ints(&[d, 0, 1]);
            match end {
                End::Relation(q) => assert!(d > 0 && q == want, "δ={d}: {q}"),
                End::Contradiction(c) => assert_eq!(c.polynomial, Some(want), "δ={d}"),
                End::NoRelation => panic!("δ={d}: no relation"),
            }
        }
    }
}
