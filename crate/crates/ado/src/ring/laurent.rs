use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{Color, CycNum};

/// A Laurent polynomial in the formal variable `t = ζ^λ` with `CycNum`
/// coefficients. No zero coefficients are stored, so equality is term-wise.
#[derive(Clone, PartialEq)]
pub struct WeightLaurent {
    color: Color,
    terms: BTreeMap<i64, CycNum>,
}

impl WeightLaurent {
    pub fn zero(color: Color) -> Self {
        WeightLaurent {
            color,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(color: Color) -> Self {
        Self::monomial(color, 0, CycNum::one(color))
    }

    pub fn monomial(color: Color, exp: i64, coeff: CycNum) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        WeightLaurent { color, terms }
    }

    pub fn scalar(color: Color, coeff: CycNum) -> Self {
        Self::monomial(color, 0, coeff)
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycNum)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> CycNum {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.color))
    }

    fn insert(&mut self, exp: i64, coeff: CycNum) {
        if !coeff.is_zero() {
            self.terms.insert(exp, coeff);
        }
    }

    pub fn scale(&self, c: &CycNum) -> WeightLaurent {
        let mut out = Self::zero(self.color);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.insert(*e, a * c);
        }
        out
    }

    pub fn shift(&self, k: i64) -> WeightLaurent {
        let mut out = Self::zero(self.color);
        for (e, a) in &self.terms {
            out.insert(e + k, a.clone());
        }
        out
    }

    /// `t ↦ t^{−1}`.
    pub fn invert_t(&self) -> WeightLaurent {
        let mut out = Self::zero(self.color);
        for (e, a) in &self.terms {
            out.insert(-e, a.clone());
        }
        out
    }

    /// `t ↦ t^{−1}` together with `ζ ↦ ζ^{−1}` on the coefficients.
    pub fn galois_mirror(&self) -> WeightLaurent {
        let mut out = Self::zero(self.color);
        for (e, a) in &self.terms {
            out.insert(-e, a.galois_conj());
        }
        out
    }

    /// Ordinary polynomial form: ascending coefficient vector with a nonzero
    /// constant term, plus the stripped power of `t`. Zero maps to `([], 0)`.
    pub(crate) fn to_poly(&self) -> (Vec<CycNum>, i64) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![CycNum::zero(self.color); (hi - lo) as usize + 1];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (v, lo)
            }
            _ => (vec![], 0),
        }
    }

    pub(crate) fn from_poly(color: Color, poly: &[CycNum], shift: i64) -> Self {
        let mut out = Self::zero(color);
        for (k, c) in poly.iter().enumerate() {
            out.insert(shift + k as i64, c.clone());
        }
        out
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| c.eval() * t.powi(*e as i32))
            .sum()
    }
}

impl Add for &WeightLaurent {
    type Output = WeightLaurent;
    fn add(self, rhs: &WeightLaurent) -> WeightLaurent {
        debug_assert_eq!(self.color, rhs.color);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let sum = &out.coeff(*e) + c;
            if sum.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(*e, sum);
            }
        }
        out
    }
}

impl Sub for &WeightLaurent {
    type Output = WeightLaurent;
    fn sub(self, rhs: &WeightLaurent) -> WeightLaurent {
        self + &(-rhs)
    }
}

impl Neg for &WeightLaurent {
    type Output = WeightLaurent;
    fn neg(self) -> WeightLaurent {
        let mut out = WeightLaurent::zero(self.color);
        for (e, c) in &self.terms {
            out.insert(*e, -c);
        }
        out
    }
}

impl Mul for &WeightLaurent {
    type Output = WeightLaurent;
    fn mul(self, rhs: &WeightLaurent) -> WeightLaurent {
        debug_assert_eq!(self.color, rhs.color);
        let mut out = WeightLaurent::zero(self.color);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                let add = c1 * c2;
                let sum = &out.coeff(e) + &add;
                if sum.is_zero() {
                    out.terms.remove(&e);
                } else {
                    out.terms.insert(e, sum);
                }
            }
        }
        out
    }
}

impl fmt::Debug for WeightLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{e}")?,
            }
        }
        Ok(())
    }
}
