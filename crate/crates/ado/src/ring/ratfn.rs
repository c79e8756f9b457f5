use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{Color, CycNum, WeightLaurent};
use crate::error::{AdoError, Result};

/// A rational function in `t` over `Q(ζ_{2N})`, kept in canonical form:
/// `gcd(num, den) = 1`, the denominator has lowest exponent 0 and lowest
/// coefficient 1. Equality of values is equality of representations.
#[derive(Clone, PartialEq)]
pub struct WeightRat {
    num: WeightLaurent,
    den: WeightLaurent,
}

impl WeightRat {
    pub fn zero(color: Color) -> Self {
        WeightRat {
            num: WeightLaurent::zero(color),
            den: WeightLaurent::one(color),
        }
    }

    pub fn one(color: Color) -> Self {
        WeightRat {
            num: WeightLaurent::one(color),
            den: WeightLaurent::one(color),
        }
    }

    pub fn from_laurent(num: WeightLaurent) -> Self {
        WeightRat {
            den: WeightLaurent::one(num.color()),
            num,
        }
    }

    pub fn from_scalar(color: Color, c: CycNum) -> Self {
        Self::from_laurent(WeightLaurent::scalar(color, c))
    }

    pub fn monomial(color: Color, exp: i64, coeff: CycNum) -> Self {
        Self::from_laurent(WeightLaurent::monomial(color, exp, coeff))
    }

    pub fn new(num: WeightLaurent, den: WeightLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(AdoError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(num.color()));
        }
        if den.is_one() {
            return Ok(Self::from_laurent(num));
        }
        let color = num.color();
        let (np, nshift) = num.to_poly();
        let (dp, dshift) = den.to_poly();
        let g = poly_gcd(color, &np, &dp);
        let nq = poly_div_exact(color, &np, &g);
        let dq = poly_div_exact(color, &dp, &g);
        // Scale so the denominator's constant term is 1; it is nonzero since
        // t does not divide dq.
        let scale = dq[0]
            .inverse()
            .expect("constant term of reduced denominator is nonzero");
        let nq: Vec<CycNum> = nq.iter().map(|c| c * &scale).collect();
        let dq: Vec<CycNum> = dq.iter().map(|c| c * &scale).collect();
        Ok(WeightRat {
            num: WeightLaurent::from_poly(color, &nq, nshift - dshift),
            den: WeightLaurent::from_poly(color, &dq, 0),
        })
    }

    pub fn color(&self) -> Color {
        self.num.color()
    }

    pub fn num(&self) -> &WeightLaurent {
        &self.num
    }

    pub fn den(&self) -> &WeightLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial, when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&WeightLaurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<WeightRat> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Result<WeightRat> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.color());
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &CycNum) -> WeightRat {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator unchanged")
    }

    /// `t ↦ t^{−1}`.
    pub fn invert_t(&self) -> WeightRat {
        Self::new(self.num.invert_t(), self.den.invert_t()).expect("denominator stays nonzero")
    }

    /// `t ↦ t^{−1}` and `ζ ↦ ζ^{−1}` together.
    pub fn galois_mirror(&self) -> WeightRat {
        Self::new(self.num.galois_mirror(), self.den.galois_mirror())
            .expect("denominator stays nonzero")
    }

    /// Evaluate at a numeric `t`; `ill_conditioned` flags a near-vanishing
    /// denominator.
    pub fn eval(&self, t: Complex64) -> (Complex64, bool) {
        let n = self.num.eval(t);
        let d = self.den.eval(t);
        (n / d, d.norm() < 1e-9)
    }
}

impl Add for &WeightRat {
    type Output = WeightRat;
    fn add(self, rhs: &WeightRat) -> WeightRat {
        if self.den.is_one() && rhs.den.is_one() {
            return WeightRat::from_laurent(&self.num + &rhs.num);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        WeightRat::new(num, &self.den * &rhs.den).expect("denominators nonzero")
    }
}

impl Sub for &WeightRat {
    type Output = WeightRat;
    fn sub(self, rhs: &WeightRat) -> WeightRat {
        self + &(-rhs)
    }
}

impl Neg for &WeightRat {
    type Output = WeightRat;
    fn neg(self) -> WeightRat {
        WeightRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &WeightRat {
    type Output = WeightRat;
    fn mul(self, rhs: &WeightRat) -> WeightRat {
        if self.is_zero() || rhs.is_zero() {
            return WeightRat::zero(self.color());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return WeightRat::from_laurent(&self.num * &rhs.num);
        }
        WeightRat::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominators nonzero")
    }
}

impl Div for &WeightRat {
    type Output = WeightRat;
    fn div(self, rhs: &WeightRat) -> WeightRat {
        assert!(!rhs.is_zero(), "division by zero WeightRat");
        WeightRat::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("checked nonzero")
    }
}

impl fmt::Debug for WeightRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

fn trim(mut v: Vec<CycNum>) -> Vec<CycNum> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Division with remainder in `Q(ζ)[t]`, ascending coefficients.
fn poly_divmod(num: &[CycNum], den: &[CycNum]) -> (Vec<CycNum>, Vec<CycNum>) {
    let dd = den.len() - 1;
    let lead_inv = den[dd].inverse().expect("leading coefficient nonzero");
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (vec![], trim(rem));
    }
    let mut quot = vec![CycNum::zero(den[0].color()); rem.len() - dd];
    for k in (0..=rem.len() - 1 - dd).rev() {
        let c = &rem[k + dd] * &lead_inv;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * d);
            }
            quot[k] = c;
        }
    }
    (quot, trim(rem))
}

fn poly_div_exact(color: Color, num: &[CycNum], den: &[CycNum]) -> Vec<CycNum> {
    let _ = color;
    let (q, r) = poly_divmod(num, den);
    assert!(r.is_empty(), "exact polynomial division left a remainder");
    q
}

/// Monic gcd in `Q(ζ)[t]` by the Euclidean algorithm; remainders are made
/// monic at each step to keep coefficients small.
fn poly_gcd(color: Color, a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        let (_, mut rem) = poly_divmod(&r0, &r1);
        if let Some(lead) = rem.last() {
            let inv = lead.inverse().expect("nonzero leading coefficient");
            rem = rem.iter().map(|c| c * &inv).collect();
        }
        r0 = r1;
        r1 = rem;
    }
    if r0.is_empty() {
        return vec![CycNum::one(color)];
    }
    let inv = r0
        .last()
        .unwrap()
        .inverse()
        .expect("nonzero leading coefficient");
    r0.iter().map(|c| c * &inv).collect()
}
