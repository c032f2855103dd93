//! Witness verification and the bounded search for integrable coframes.

use num_traits::{One, Zero};
use serde::Serialize;

use super::system::{AdaptedBasis, NilProfile};
use crate::exact::{CScalar, Matrix, Scalar};
use crate::exterior::{is_appropriate, nil_degree, Filtration, PForm};
use crate::liealg::LieAlgebra;
use crate::spinor::{annihilator, cond_nondegenerate, integrability, Spinor};
use crate::structures::{gcs_from_complex, gcs_validate, is_complex_structure, j_from_coframe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    /// `Ω ∧ Ω̄ ≠ 0`.
    Nondegenerate,
    /// `dΩ = 0`.
    Closed,
    /// Annihilator maximal isotropic and transverse to its conjugate.
    Pure,
    /// The induced `J` is integrable.
    Complex,
    /// `𝒥_J` is a generalized complex structure of type `n`.
    Gcs,
}

impl Stage {
    pub const ALL: [Stage; 5] = [
        Stage::Nondegenerate,
        Stage::Closed,
        Stage::Pure,
        Stage::Complex,
        Stage::Gcs,
    ];
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Stage::Nondegenerate => "nondegenerate",
            Stage::Closed => "closed",
            Stage::Pure => "pure",
            Stage::Complex => "complex",
            Stage::Gcs => "gcs",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub ok: bool,
    /// Stages run, in order, with their outcome; stops at the first failure.
    pub stages: Vec<(Stage, bool)>,
    pub failed: Option<Stage>,
    #[serde(serialize_with = "super::ser_matrix_opt")]
    pub j: Option<Matrix<Scalar>>,
}

fn omega(dim: usize, thetas: &[PForm]) -> PForm {
    thetas.iter().fold(PForm::one(dim), |acc, t| acc.wedge(t))
}

/// Run the five checks in order. Wrong count or ambient → fails at the
/// first stage.
pub fn verify_witness(g: &LieAlgebra, thetas: &[PForm]) -> WitnessReport {
    let dim = g.dim();
    let n = dim / 2;
    let mut stages = Vec::new();
    let mut j = None;
    let shape_ok = dim % 2 == 0
        && thetas.len() == n
        && thetas.iter().all(|t| t.dim() == dim && t.degree() == 1);
    for stage in Stage::ALL {
        let pass = shape_ok
            && match stage {
                Stage::Nondegenerate => cond_nondegenerate(dim, thetas, &PForm::zero(dim, 2)),
                Stage::Closed => {
                    integrability(g, &Spinor::from_form(&omega(dim, thetas))).is_ok_and(|r| r.closed)
                }
                Stage::Pure => annihilator(&Spinor::from_form(&omega(dim, thetas)))
                    .is_ok_and(|a| a.pure && a.space.meets_conjugate_trivially()),
                Stage::Complex => match j_from_coframe(g, thetas) {
                    Ok(jm) => {
                        let ok = is_complex_structure(g, &jm).is_ok_and(|c| c.ok);
                        j = Some(jm.matrix);
                        ok
                    }
                    Err(_) => false,
                },
                Stage::Gcs => {
                    let jm = crate::structures::Endomorphism::new(j.clone().unwrap());
                    gcs_from_complex(g, &jm)
                        .ok()
                        .and_then(|jj| gcs_validate(g, &jj).ok())
                        .is_some_and(|r| r.valid() && r.type_k == Some(n))
                }
            };
        stages.push((stage, pass));
        if !pass {
            return WitnessReport {
                ok: false,
                stages,
                failed: Some(stage),
                j,
            };
        }
    }
    WitnessReport {
        ok: true,
        stages,
        failed: None,
        j,
    }
}

/// Scale so the lowest-index nonzero coefficient is 1.
pub fn normalize(t: &PForm) -> PForm {
    match t.terms().values().next() {
        Some(c) if !c.is_one() => t.scale(&c.recip().unwrap()),
        _ => t.clone(),
    }
}

fn wedge_all(dim: usize, forms: &[PForm]) -> PForm {
    omega(dim, forms)
}

/// `θ_1 ∧ … ∧ θ_i ∧ θ̄_1 ∧ … ∧ θ̄_i ≠ 0`.
fn partially_nondegenerate(dim: usize, thetas: &[PForm]) -> bool {
    let conj: Vec<PForm> = thetas.iter().map(|t| t.conj()).collect();
    !wedge_all(dim, thetas).wedge(&wedge_all(dim, &conj)).is_zero()
}

/// Coefficients tried when combining solution vectors.
const COEFFS: [(i64, i64); 4] = [(0, 1), (0, -1), (1, 0), (-1, 0)];

pub(crate) struct Search<'a> {
    pub g: &'a LieAlgebra,
    pub f: &'a Filtration,
    pub basis: &'a AdaptedBasis,
    pub profile: &'a NilProfile,
    /// Node budget; the search gives up (undecided) when it runs out.
    pub budget: usize,
}

impl Search<'_> {
    /// Complex 1-forms on `V_{nil θ_i}` solving `θ_{j1} ∧ … ∧ dθ = 0`,
    /// reduced modulo the span of `chosen`.
    fn solutions(&self, i: usize, chosen: &[PForm]) -> Vec<PForm> {
        let dim = self.g.dim();
        let d = self.profile.degrees[i];
        let prefix = (0..i)
            .filter(|&j| self.profile.degrees[j] < d)
            .fold(PForm::one(dim), |acc, j| acc.wedge(&chosen[j]));
        let vecs: Vec<&Vec<Scalar>> = self.basis.up_to(d).map(|(_, v)| v).collect();
        let images: Vec<PForm> = vecs
            .iter()
            .map(|v| prefix.wedge(&PForm::from_real_coeffs(v).d(self.g)))
            .collect();
        let mut masks: Vec<u32> = images.iter().flat_map(|f| f.terms().keys().copied()).collect();
        masks.sort_unstable();
        masks.dedup();
        let kernel: Vec<Vec<CScalar>> = if masks.is_empty() {
            (0..vecs.len()).map(|k| crate::liealg::unit(vecs.len(), k)).collect()
        } else {
            let rows: Vec<Vec<CScalar>> = masks
                .iter()
                .map(|&m| images.iter().map(|f| f.coeff(m)).collect())
                .collect();
            Matrix::from_rows(rows).nullspace()
        };
        // Back to ω-coordinates, sorted by leading index.
        let mut sols: Vec<PForm> = kernel
            .into_iter()
            .map(|x| {
                let mut c = vec![CScalar::zero(); dim];
                for (xk, v) in x.iter().zip(&vecs) {
                    for (a, va) in v.iter().enumerate() {
                        c[a] += &xk.scale(va);
                    }
                }
                normalize(&PForm::from_coeffs(&c))
            })
            .collect();
        sols.sort_by_key(|s| s.terms().keys().next().map(|m| m.trailing_zeros()));
        // Greedy basis modulo chosen.
        let mut span: Vec<Vec<CScalar>> = chosen.iter().map(|t| t.coeffs()).collect();
        let mut rank = if span.is_empty() { 0 } else { Matrix::from_rows(span.clone()).rank() };
        let mut out = Vec::new();
        for s in sols {
            span.push(s.coeffs());
            let r = Matrix::from_rows(span.clone()).rank();
            if r > rank {
                rank = r;
                out.push(s);
            } else {
                span.pop();
            }
        }
        out
    }

    fn candidates(sols: &[PForm]) -> impl Iterator<Item = PForm> + '_ {
        let singles = sols.iter().cloned();
        let pairs = (0..sols.len()).flat_map(move |a| {
            (a + 1..sols.len()).flat_map(move |b| {
                COEFFS
                    .iter()
                    .map(move |&(re, im)| sols[a].add(&sols[b].scale(&CScalar::int(re, im))))
            })
        });
        let triples = (0..sols.len()).flat_map(move |a| {
            (a + 1..sols.len()).flat_map(move |b| {
                (b + 1..sols.len()).flat_map(move |c| {
                    COEFFS.iter().flat_map(move |&(r1, i1)| {
                        COEFFS.iter().map(move |&(r2, i2)| {
                            sols[a]
                                .add(&sols[b].scale(&CScalar::int(r1, i1)))
                                .add(&sols[c].scale(&CScalar::int(r2, i2)))
                        })
                    })
                })
            })
        });
        singles.chain(pairs).chain(triples)
    }

    /// Depth-first search extending `chosen`; the last level is accepted
    /// only if the full witness verifies.
    pub fn run(&mut self, chosen: &mut Vec<PForm>) -> Option<Vec<PForm>> {
        let dim = self.g.dim();
        let i = chosen.len();
        if i == self.profile.len() {
            return verify_witness(self.g, chosen).ok.then(|| chosen.clone());
        }
        let sols = self.solutions(i, chosen);
        let target = self.profile.degrees[i];
        for cand in Self::candidates(&sols) {
            if self.budget == 0 {
                return None;
            }
            self.budget -= 1;
            let cand = normalize(&cand);
            if nil_degree(self.f, &cand) != target {
                continue;
            }
            chosen.push(cand);
            if partially_nondegenerate(dim, chosen) && is_appropriate(self.f, chosen) {
                if let Some(w) = self.run(chosen) {
                    return Some(w);
                }
            }
            chosen.pop();
        }
        None
    }

    /// As [`run`](Self::run) with `θ_1` fixed.
    pub fn run_from(&mut self, theta1: PForm) -> Option<Vec<PForm>> {
        let mut chosen = vec![normalize(&theta1)];
        if !partially_nondegenerate(self.g.dim(), &chosen) {
            return None;
        }
        self.run(&mut chosen)
    }
}

/// `θ_1 = e_a + t·e_b` on the two-dimensional `V_1`.
pub(crate) fn theta1_at(basis: &AdaptedBasis, t: &CScalar) -> PForm {
    let v1 = basis.top(1);
    let a = PForm::from_real_coeffs(&v1[0].1);
    let b = PForm::from_real_coeffs(&v1[1].1);
    a.add(&b.scale(t))
}
