//! The colored Alexander invariant of a braid closure, by two independent
//! routes: a quantum partial trace and the truncated-Lawrence trace formula.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{AdoError, Result};
use crate::lawrence::{max_lawrence_weight, trace_y_all, truncated_lawrence_matrix};
use crate::linalg::Matrix;
use crate::qrep::{braid_matrix, h_single, state_count};
use crate::ring::{weight_qfact, Color, CycNum, WeightRat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    Direct,
    Lawrence,
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pipeline::Direct => write!(f, "direct"),
            Pipeline::Lawrence => write!(f, "lawrence"),
        }
    }
}

/// Partial trace over all tensor slots but the first: the `N×N` matrix
/// `P[a][b] = Σ_c M[(a,c),(b,c)]`.
pub fn partial_trace_tail(color: Color, m: &Matrix, n: usize) -> Matrix {
    let nn = color.n() as usize;
    let tail = state_count(color, n - 1);
    Matrix::from_fn(color, nn, nn, |a, b| {
        let mut acc = WeightRat::zero(color);
        for c in 0..tail {
            acc = &acc + &m[(a * tail + c, b * tail + c)];
        }
        acc
    })
}

/// Extract `s` from `m = s · id`; errors if the matrix is not scalar.
fn scalar_of(m: &Matrix) -> Result<WeightRat> {
    let first = m[(0, 0)].clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let ok = if i == j {
                m[(i, j)] == first
            } else {
                m[(i, j)].is_zero()
            };
            if !ok {
                return Err(AdoError::NonScalar);
            }
        }
    }
    Ok(first)
}

/// `id ⊗ h ⊗ ⋯ ⊗ h` on `X^{⊗n}`.
fn pivot_tail(color: Color, n: usize) -> Matrix {
    let mut m = Matrix::identity(color, color.n() as usize);
    let h = h_single(color);
    for _ in 1..n {
        m = m.kron(&h);
    }
    m
}

/// Framing normalization `t^{(N−1) e(β)}` shared by both pipelines.
fn framing(color: Color, word: &BraidWord) -> WeightRat {
    WeightRat::monomial(
        color,
        (color.n() as i64 - 1) * word.exponent_sum(),
        CycNum::one(color),
    )
}

/// The invariant by the quantum definition: partial trace of
/// `(id ⊗ h^{⊗(n−1)}) ρ(β)` over the last `n−1` slots, which is scalar on
/// the first factor, times the framing factor.
pub fn direct_invariant(color: Color, word: &BraidWord) -> Result<WeightRat> {
    word.require_knot()?;
    let n = word.strands();
    let rho = braid_matrix(color, word);
    let weighted = pivot_tail(color, n).mul(&rho);
    let partial = partial_trace_tail(color, &weighted, n);
    let s = scalar_of(&partial)?;
    Ok(&framing(color, word) * &s)
}

/// The coefficient `C_i(λ, …, λ) = [λ; N−1] / [nλ − 2i; N−1]` of the trace
/// formula.
pub fn coefficient_c(color: Color, n: usize, i: u32) -> WeightRat {
    let num = weight_qfact(color, 1, 0, color.n() - 1);
    let den = weight_qfact(color, n as i64, -2 * i as i64, color.n() - 1);
    &num / &den
}

///`C_0` for `n = k + 1` strands written as the telescoping sum
/// `Σ_{i=0}^{N−1} ([kλ; i]/[(k+1)λ; i]) t^{−i−(N−1)k} ζ^{−2i}`; an
/// independent route to the same coefficient.
pub fn coefficient_c0_sum_form(color: Color, k: i64) -> WeightRat {
    let mut acc = WeightRat::zero(color);
    for i in 0..color.n() {
        let ratio = &weight_qfact(color, k, 0, i) / &weight_qfact(color, k + 1, 0, i);
        let mono = WeightRat::monomial(
            color,
            -(i as i64) - (color.n() as i64 - 1) * k,
            CycNum::zeta_pow(color, -2 * i as i64),
        );
        acc = &acc + &(&ratio * &mono);
    }
    acc
}

/// The invariant by the trace formula over truncated Lawrence
/// representations:
/// `t^{(N−1)e(β)} Σ_{i=0}^{N−1} C_i Σ_{j=0}^{n−1} tr l_{n, i+Nj}(β)`.
pub fn lawrence_invariant(color: Color, word: &BraidWord) -> Result<WeightRat> {
    word.require_knot()?;
    let n = word.strands();
    let traces = trace_y_all(color, word)?;
    let top = max_lawrence_weight(color, n);
    let mut acc = WeightRat::zero(color);
    for i in 0..color.n() {
        let mut inner = WeightRat::zero(color);
        for j in 0..n as u32 {
            let m = i + color.n() * j;
            if m <= top {
                inner = &inner + &traces[m as usize];
            }
        }
        if !inner.is_zero() {
            acc = &acc + &(&coefficient_c(color, n, i) * &inner);
        }
    }
    Ok(&framing(color, word) * &acc)
}

pub fn invariant(color: Color, word: &BraidWord, pipeline: Pipeline) -> Result<WeightRat> {
    match pipeline {
        Pipeline::Direct => direct_invariant(color, word),
        Pipeline::Lawrence => lawrence_invariant(color, word),
    }
}

/// Brute-force check of the two-strand trace identity underlying the trace
/// formula: `tr_2((id ⊗ h) ρ(w)) = Σ_{i<N} C_i(λ,λ) l_{2,i}(w) · id`.
pub fn lemma_two_strand_check(color: Color, word: &BraidWord) -> Result<()> {
    assert_eq!(word.strands(), 2);
    let rho = braid_matrix(color, word);
    let weighted = pivot_tail(color, 2).mul(&rho);
    let lhs = partial_trace_tail(color, &weighted, 2);
    let mut scalar = WeightRat::zero(color);
    for i in 0..color.n() {
        let f_i = truncated_lawrence_matrix(color, word, i)?;
        assert_eq!(f_i.rows(), 1);
        scalar = &scalar + &(&coefficient_c(color, 2, i) * &f_i[(0, 0)]);
    }
    let rhs = Matrix::identity(color, color.n() as usize).scale(&scalar);
    if lhs == rhs {
        Ok(())
    } else {
        Err(AdoError::BasisInconsistency)
    }
}
