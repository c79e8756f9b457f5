use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::Color;

/// The `M`-th cyclotomic polynomial `Φ_M` as an ascending integer
/// coefficient vector, computed by exact division of `z^M − 1` by the
/// `Φ_d` for proper divisors `d | M`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    static CACHE: Lazy<Mutex<HashMap<u32, Vec<BigInt>>>> = Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap().get(&m) {
        return p.clone();
    }
    assert!(m >= 1);
    // z^M - 1
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    CACHE.lock().unwrap().insert(m, num.clone());
    num
}

/// Exact division of integer polynomials (ascending coefficients), panics on
/// a nonzero remainder. Divisors here are monic so no fractions appear.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder");
    quot
}

/// An element of the cyclotomic field `Q(ζ_{2N})`, stored as a polynomial in
/// `ζ` reduced modulo `Φ_{2N}`. The representation is canonical, so equality
/// is coefficient-wise.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    color: Color,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    fn modulus(color: Color) -> Vec<BigRational> {
        cyclotomic_polynomial(color.two_n())
            .into_iter()
            .map(BigRational::from_integer)
            .collect()
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn zero(color: Color) -> Self {
        CycNum {
            color,
            coeffs: vec![BigRational::zero(); color.degree()],
        }
    }

    pub fn one(color: Color) -> Self {
        Self::from_rational(color, BigRational::one())
    }

    pub fn from_rational(color: Color, r: BigRational) -> Self {
        let mut c = Self::zero(color);
        c.coeffs[0] = r;
        c
    }

    pub fn from_i64(color: Color, v: i64) -> Self {
        Self::from_rational(color, BigRational::from_integer(v.into()))
    }

    /// Canonical representative of `ζ^k`; periodic with period `2N`.
    pub fn zeta_pow(color: Color, k: i64) -> Self {
        let two_n = color.two_n() as i64;
        let k = k.rem_euclid(two_n) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        Self::from_poly(color, poly)
    }

    /// Reduce an arbitrary polynomial in `ζ` modulo `Φ_{2N}`.
    fn from_poly(color: Color, mut poly: Vec<BigRational>) -> Self {
        let modulus = Self::modulus(color);
        let deg = color.degree();
        while poly.len() > deg {
            let k = poly.len() - 1;
            let c = poly[k].clone();
            if !c.is_zero() {
                for (i, m) in modulus.iter().enumerate() {
                    let idx = k - deg + i;
                    let delta = &c * m;
                    poly[idx] -= delta;
                }
            }
            poly.pop();
        }
        poly.resize(deg, BigRational::zero());
        CycNum {
            color,
            coeffs: poly,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Rational part, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[z]`
    /// against `Φ_{2N}`.
    pub fn inverse(&self) -> Option<CycNum> {
        if self.is_zero() {
            return None;
        }
        // Maintain r = a*self + b*Φ; we only need the `a` cofactor.
        let mut r0 = Self::modulus(self.color);
        let mut r1 = trim(self.coeffs.clone());
        let mut a0: Vec<BigRational> = vec![];
        let mut a1 = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, rem) = rat_poly_divmod(&r0, &r1);
            let a2 = poly_sub(&a0, &poly_mul(&q, &a1));
            r0 = r1;
            r1 = rem;
            a0 = a1;
            a1 = a2;
        }
        assert!(!r1.is_empty(), "Φ_{{2N}} is squarefree; gcd must be a unit");
        let scale = r1[0].recip();
        let inv: Vec<BigRational> = a1.into_iter().map(|c| c * &scale).collect();
        Some(Self::from_poly(self.color, inv))
    }

    /// Galois automorphism `ζ ↦ ζ^{−1}`.
    pub fn galois_conj(&self) -> CycNum {
        let mut acc = Self::zero(self.color);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = Self::zeta_pow(self.color, -(k as i64));
                acc = &acc + &term.scale_rational(c);
            }
        }
        acc
    }

    /// Multiply by a rational scalar.
    pub fn scale_by(&self, r: &BigRational) -> CycNum {
        self.scale_rational(r)
    }

    fn scale_rational(&self, r: &BigRational) -> CycNum {
        CycNum {
            color: self.color,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Numeric evaluation at `ζ = exp(πi/N)`.
    pub fn eval(&self) -> Complex64 {
        let zeta = Complex64::from_polar(1.0, std::f64::consts::PI / self.color.n() as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut p = Complex64::new(1.0, 0.0);
        for c in &self.coeffs {
            acc += p * c.to_f64().unwrap_or(f64::NAN);
            p *= zeta;
        }
        acc
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn rat_poly_divmod(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = den.len() - 1;
    let lead = den[dd].recip();
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (vec![], trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for k in (0..=rem.len() - 1 - dd).rev() {
        let c = &rem[k + dd] * &lead;
        if !c.is_zero() {
            quot[k] = c.clone();
            for (i, d) in den.iter().enumerate() {
                let delta = &c * d;
                rem[k + i] -= delta;
            }
        }
    }
    (trim(quot), trim(rem))
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        debug_assert_eq!(self.color, rhs.color);
        CycNum {
            color: self.color,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        debug_assert_eq!(self.color, rhs.color);
        CycNum {
            color: self.color,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            color: self.color,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        debug_assert_eq!(self.color, rhs.color);
        let deg = self.color.degree();
        let mut prod = vec![BigRational::zero(); 2 * deg];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycNum::from_poly(self.color, prod)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn zpow(f: &mut fmt::Formatter<'_>, k: usize) -> fmt::Result {
            match k {
                0 => Ok(()),
                1 => write!(f, "*z"),
                _ => write!(f, "*z^{k}"),
            }
        }
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            zpow(f, k)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
