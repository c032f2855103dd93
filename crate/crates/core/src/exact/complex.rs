use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{ExactError, Scalar};

/// An element of the Gaussian rationals `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl CScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        CScalar { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        CScalar {
            re,
            im: Scalar::zero(),
        }
    }

    pub fn i() -> Self {
        CScalar {
            re: Scalar::zero(),
            im: Scalar::one(),
        }
    }

    pub fn int(re: i64, im: i64) -> Self {
        CScalar {
            re: Scalar::int(re),
            im: Scalar::int(im),
        }
    }

    pub fn conj(&self) -> Self {
        CScalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        CScalar {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(CScalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CScalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Zero for CScalar {
    fn zero() -> Self {
        CScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for CScalar {
    fn one() -> Self {
        CScalar::real(Scalar::one())
    }
}

impl From<Scalar> for CScalar {
    fn from(s: Scalar) -> Self {
        CScalar::real(s)
    }
}

impl From<i64> for CScalar {
    fn from(n: i64) -> Self {
        CScalar::real(Scalar::int(n))
    }
}

impl Add<&CScalar> for &CScalar {
    type Output = CScalar;
    fn add(self, rhs: &CScalar) -> CScalar {
        CScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&CScalar> for &CScalar {
    type Output = CScalar;
    fn sub(self, rhs: &CScalar) -> CScalar {
        CScalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&CScalar> for &CScalar {
    type Output = CScalar;
    fn mul(self, rhs: &CScalar) -> CScalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return CScalar::real(&self.re * &rhs.re);
        }
        CScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&CScalar> for &CScalar {
    type Output = CScalar;
    fn div(self, rhs: &CScalar) -> CScalar {
        self * &rhs.recip().expect("division by zero")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CScalar> for CScalar {
            type Output = CScalar;
            fn $m(self, rhs: CScalar) -> CScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CScalar> for CScalar {
            type Output = CScalar;
            fn $m(self, rhs: &CScalar) -> CScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<CScalar> for &CScalar {
            type Output = CScalar;
            fn $m(self, rhs: CScalar) -> CScalar {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for CScalar {
    type Output = CScalar;
    fn neg(self) -> CScalar {
        CScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &CScalar {
    type Output = CScalar;
    fn neg(self) -> CScalar {
        CScalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl AddAssign<&CScalar> for CScalar {
    fn add_assign(&mut self, rhs: &CScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&CScalar> for CScalar {
    fn sub_assign(&mut self, rhs: &CScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl fmt::Display for CScalar {
    /// `a`, `bi`, `a+bi`, `a-bi`; unit imaginary parts print as `i` / `-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |im: &Scalar| -> String {
            if im == &Scalar::one() {
                "i".to_string()
            } else if im == &-Scalar::one() {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", im_part(&self.im)),
            (false, false) => {
                let s = im_part(&self.im);
                if s.starts_with('-') {
                    write!(f, "{}{}", self.re, s)
                } else {
                    write!(f, "{}+{}", self.re, s)
                }
            }
        }
    }
}

impl fmt::Debug for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CScalar {
    type Err = ExactError;

    /// Accepts `a`, `bi`, `i`, `-i`, `a+bi`, `a-bi` with rational `a`, `b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(ExactError::Parse("empty complex literal".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(CScalar::real(t.parse()?));
        };
        // Split at the last sign that is not the leading character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im {
            "" | "+" => Scalar::one(),
            "-" => -Scalar::one(),
            other => other.trim_start_matches('+').parse()?,
        };
        let re = if re.is_empty() {
            Scalar::zero()
        } else {
            re.parse()?
        };
        Ok(CScalar { re, im })
    }
}

impl serde::Serialize for CScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
