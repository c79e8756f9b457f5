//! Exact arithmetic foundation: the cyclotomic field `Q(ζ_{2N})` and the
//! field of rational functions in the formal variable `t = ζ^λ` over it.

mod cyclotomic;
mod laurent;
mod ratfn;

pub use cyclotomic::{cyclotomic_polynomial, CycNum};
pub use laurent::WeightLaurent;
pub use ratfn::WeightRat;

/// The color `N ≥ 2` of the invariant; fixes the root of unity `ζ = ζ_{2N}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(pub u32);

impl Color {
    pub fn n(self) -> u32 {
        self.0
    }

    pub fn two_n(self) -> u32 {
        2 * self.0
    }

    /// Degree of `Q(ζ_{2N})` over `Q`, i.e. Euler phi of `2N`.
    pub fn degree(self) -> usize {
        euler_phi(self.two_n()) as usize
    }
}

pub(crate) fn euler_phi(mut m: u32) -> u32 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `[aλ + b]_ζ = (t^a ζ^b − t^{−a} ζ^{−b}) / (ζ − ζ^{−1})`.
pub fn weight_qint(color: Color, a: i64, b: i64) -> WeightRat {
    let zb = CycNum::zeta_pow(color, b);
    let zb_inv = CycNum::zeta_pow(color, -b);
    let mut num = WeightLaurent::monomial(color, a, zb);
    num = &num - &WeightLaurent::monomial(color, -a, zb_inv);
    let den = &CycNum::zeta_pow(color, 1) - &CycNum::zeta_pow(color, -1);
    let den_inv = den.inverse().expect("ζ − ζ^{-1} is nonzero for N ≥ 2");
    WeightRat::from_laurent(num.scale(&den_inv))
}

/// Falling factorial `[aλ+b; i]_ζ = [aλ+b]_ζ [aλ+b−1]_ζ ⋯ [aλ+b+1−i]_ζ`.
pub fn weight_qfact(color: Color, a: i64, b: i64, i: u32) -> WeightRat {
    let mut acc = WeightRat::one(color);
    for s in 0..i as i64 {
        acc = &acc * &weight_qint(color, a, b - s);
    }
    acc
}

/// Quantum integer `[k]_ζ` as a field element.
pub fn qint_zeta(color: Color, k: i64) -> CycNum {
    let num = &CycNum::zeta_pow(color, k) - &CycNum::zeta_pow(color, -k);
    let den = &CycNum::zeta_pow(color, 1) - &CycNum::zeta_pow(color, -1);
    &num * &den.inverse().expect("ζ − ζ^{-1} is nonzero")
}

/// Balanced Gaussian binomial `[m over r]_ζ`. Requires `m < N` so that no
/// factor in the denominator vanishes.
pub fn qbinom_zeta(color: Color, m: u32, r: u32) -> CycNum {
    assert!(r <= m, "qbinom_zeta: r > m");
    assert!(m < color.n(), "qbinom_zeta at ζ needs m < N");
    let mut num = CycNum::one(color);
    let mut den = CycNum::one(color);
    for k in 1..=r {
        num = &num * &qint_zeta(color, (m - r + k) as i64);
        den = &den * &qint_zeta(color, k as i64);
    }
    &num * &den
        .inverse()
        .expect("denominator factors [k]_ζ with k < N are nonzero")
}

#[cfg(test)]
mod tests;
