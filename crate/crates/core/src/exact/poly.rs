use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CScalar, ExactError, Scalar};

/// Polynomial in one variable over ℚ, coefficients lowest degree first.
/// The leading coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Scalar::int(x)).collect())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c · t^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// True when the polynomial is `c·t^a` for some nonzero `c`.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::default();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![Scalar::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] / &lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&c * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Scalar::int(k as i64))
                .collect(),
        )
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, made monic.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_c(&self, x: &CScalar) -> CScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(CScalar::zero(), |acc, c| &(&acc * x) + &CScalar::real(c.clone()))
    }

    /// Sturm sequence p, p', −rem(p_{k−1}, p_k), …
    pub fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let r = seq.last().unwrap().div_rem(&next).1.neg();
            seq.push(next);
            next = r;
        }
        seq
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        let sf = self.square_free();
        if sf.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let ints = sf.integer_coeffs();
        let mut roots = Vec::new();
        // Zero root handled separately so the constant term is nonzero below.
        let low = ints.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            roots.push(Scalar::zero());
        }
        let (a0, an) = (&ints[low], ints.last().unwrap());
        for p in divisors(a0) {
            for q in divisors(an) {
                for s in [1i64, -1] {
                    let cand = Scalar::new(&p * BigInt::from(s), q.clone()).unwrap();
                    if sf.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Non-real roots lying in ℚ(i), each listed once. Rational roots are
    /// divided out and the remainder is solved when it is quadratic; roots
    /// of higher-degree irreducible remainders are not reported.
    pub fn gaussian_roots(&self) -> Vec<CScalar> {
        let mut rest = self.square_free();
        if rest.degree().unwrap_or(0) < 2 {
            return vec![];
        }
        for r in rest.rational_roots() {
            let lin = UPoly::new(vec![-r, Scalar::one()]);
            rest = rest.div_rem(&lin).0;
        }
        if rest.degree() != Some(2) {
            return vec![];
        }
        let (c, b, a) = (rest.coeff(0), rest.coeff(1), rest.coeff(2));
        let disc = &b * &b - &Scalar::int(4) * &a * &c;
        // The disc is negative: the rational roots are already gone.
        let Some(s) = (-&disc).sqrt_exact() else {
            return vec![];
        };
        let two_a = &Scalar::int(2) * &a;
        let re = -(&b / &two_a);
        let im = (&s / &two_a).abs();
        vec![
            CScalar::new(re.clone(), im.clone()),
            CScalar::new(re, -im),
        ]
    }

    /// Integer coefficients with content 1 and positive leading term.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let l = Scalar::lcm_denoms(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * &Scalar::from(l.clone())).numer().clone())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }
}

/// Positive divisors by trial division; the inputs here are small.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let nz: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots, by a Sturm sequence of the square-free part.
pub fn real_root_count(p: &UPoly) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::IndeterminateRootCount);
    }
    let seq = p.square_free().sturm_sequence();
    let at_pos = sign_changes(seq.iter().map(|q| q.leading().signum()));
    let at_neg = sign_changes(seq.iter().map(|q| {
        let s = q.leading().signum();
        if q.degree().unwrap() % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg - at_pos)
}

/// True iff the square-free part has more roots than it has real ones.
pub fn has_nonreal_root(p: &UPoly) -> Result<bool, ExactError> {
    match p.degree() {
        None => Err(ExactError::IndeterminateRootCount),
        Some(0) => Err(ExactError::NoRoots),
        Some(_) => Ok(p.square_free().degree().unwrap() > real_root_count(p)?),
    }
}

impl fmt::Display for UPoly {
    /// Descending powers of `t`, e.g. `t^2 - 1`, `2t`, `-1/2t^3 + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a == Scalar::one();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !unit {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for UPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_counts() {
        assert_eq!(real_root_count(&UPoly::from_ints(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(real_root_count(&UPoly::from_ints(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(real_root_count(&UPoly::from_ints(&[0, -1, 0, 1])).unwrap(), 3);
        assert_eq!(real_root_count(&UPoly::from_ints(&[0, 0, 1])).unwrap(), 1);
        assert_eq!(real_root_count(&UPoly::from_ints(&[5])).unwrap(), 0);
        assert!(real_root_count(&UPoly::default()).is_err());
    }

    #[test]
    fn nonreal_detection() {
        assert!(has_nonreal_root(&UPoly::from_ints(&[1, 0, 1])).unwrap());
        assert!(!has_nonreal_root(&UPoly::from_ints(&[-1, 0, 1])).unwrap());
        assert!(!has_nonreal_root(&UPoly::from_ints(&[0, 0, 1])).unwrap());
        assert_eq!(
            has_nonreal_root(&UPoly::from_ints(&[3])),
            Err(ExactError::NoRoots)
        );
    }

    #[test]
    fn division_and_gcd() {
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&UPoly::from_ints(&[2, 2])), b);
        let sq = UPoly::from_ints(&[1, 1]).pow(3).mul(&UPoly::t());
        assert_eq!(sq.square_free(), UPoly::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn roots_in_gaussian_rationals() {
        let p = UPoly::from_ints(&[1, 0, 1]).mul(&UPoly::from_ints(&[-2, 1]));
        assert_eq!(p.rational_roots(), vec![Scalar::int(2)]);
        assert_eq!(p.gaussian_roots(), vec![CScalar::int(0, 1), CScalar::int(0, -1)]);
        // (2t − 1)² + 1 → t = 1/2 ± i/2
        let q = UPoly::from_ints(&[2, -4, 4]);
        let r = q.gaussian_roots();
        assert_eq!(r[0], CScalar::new(Scalar::ratio(1, 2), Scalar::ratio(1, 2)));
        assert!(q.eval_c(&r[1]).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(UPoly::from_ints(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(UPoly::from_ints(&[0, 2]).to_string(), "2t");
        assert_eq!(UPoly::from_ints(&[0, 0, 1]).to_string(), "t^2");
        assert_eq!(UPoly::from_ints(&[1, 0, -1]).to_string(), "-t^2 + 1");
    }
}
