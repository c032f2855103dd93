#![allow(dead_code)]

use nilcx::exact::{CScalar, Scalar};
use nilcx::exterior::{parse_one_form, PForm};
use nilcx::liealg::LieAlgebra;

pub fn q(n: i64) -> Scalar {
    Scalar::int(n)
}

pub fn c(re: i64, im: i64) -> CScalar {
    CScalar::int(re, im)
}

pub fn forms(dim: usize, exprs: &[&str]) -> Vec<PForm> {
    exprs.iter().map(|e| parse_one_form(e, dim).unwrap()).collect()
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect()
}

/// `[X, Y]` straight from the stored constants, without the library's
/// bracket routine.
pub fn bracket_oracle(g: &LieAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = g.dim();
    let mut out = vec![q(0); n];
    for a in 0..n {
        for b in 0..n {
            if x[a] == q(0) || y[b] == q(0) || a == b {
                continue;
            }
            let (lo, hi, s) = if a < b { (a, b, q(1)) } else { (b, a, q(-1)) };
            if let Some(row) = g.constants().get(&(lo, hi)) {
                for (&k, v) in row {
                    out[k] = &out[k] + &(&(&x[a] * &y[b]) * &(&s * v));
                }
            }
        }
    }
    out
}

/// Value of a real 2-form on basis vectors, read from its coefficient map.
pub fn two_form_value(w: &PForm, i: usize, j: usize) -> Scalar {
    if i == j {
        return q(0);
    }
    let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    let m = (1u32 << lo) | (1u32 << hi);
    &w.coeff(m).re * &q(s)
}

/// Witness coframes for the algebras that admit complex structures.
pub fn l3r_witness() -> Vec<PForm> {
    forms(4, &["w0 + i w1", "w2 + i w3"])
}

pub fn n63_witness() -> Vec<PForm> {
    forms(6, &["w0 + i w1", "w3 + i w5", "w2 + i w4"])
}
