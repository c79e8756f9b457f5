//! The N-dimensional weight representation of quantum sl2 at `ζ = ζ_{2N}`,
//! its braiding operator, and highest-weight vectors of tensor powers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::braid::BraidWord;
use crate::error::{AdoError, Result};
use crate::linalg::Matrix;
use crate::ring::{qbinom_zeta, qint_zeta, weight_qfact, weight_qint, Color, CycNum, WeightRat};

/// Dimension of the `n`-fold tensor power.
pub fn state_count(color: Color, n: usize) -> usize {
    (color.n() as usize).pow(n as u32)
}

/// Digits of a linear index, first tensor slot most significant.
pub fn digits(color: Color, n: usize, idx: usize) -> Vec<u32> {
    let base = color.n() as usize;
    let mut out = vec![0u32; n];
    let mut rest = idx;
    for slot in (0..n).rev() {
        out[slot] = (rest % base) as u32;
        rest /= base;
    }
    out
}

pub fn index_of(color: Color, digits: &[u32]) -> usize {
    let base = color.n() as usize;
    digits
        .iter()
        .fold(0usize, |acc, &d| acc * base + d as usize)
}

/// Total weight (digit sum) of a linear index.
pub fn weight_of(color: Color, n: usize, idx: usize) -> u32 {
    digits(color, n, idx).iter().sum()
}

/// Ascending linear indices of the weight-`m` subspace `X_{n,m}`.
pub fn weight_indices(color: Color, n: usize, m: u32) -> Vec<usize> {
    (0..state_count(color, n))
        .filter(|&i| weight_of(color, n, i) == m)
        .collect()
}

pub fn weight_dim(color: Color, n: usize, m: u32) -> usize {
    weight_indices(color, n, m).len()
}

/// Top weight of `X_n`, namely `n(N−1)`.
pub fn max_weight(color: Color, n: usize) -> u32 {
    n as u32 * (color.n() - 1)
}

fn pair_index(color: Color, a: u32, b: u32) -> usize {
    (a * color.n() + b) as usize
}

/// The braiding operator on `X ⊗ X` in the divided-power basis `v̂_i ⊗ v̂_j`:
///
/// `R̂(v̂_i ⊗ v̂_j) = t^{−(i+j)} Σ_k ζ^{2(i−k)(j+k)} ζ^{k(k−1)/2}
///   [k+j; j]_binom [λ−j; k] (ζ−ζ^{−1})^k  v̂_{j+k} ⊗ v̂_{i−k}`,
///
/// the sum running over `0 ≤ k ≤ i` with `j + k ≤ N − 1`.
pub fn r_matrix_hat(color: Color) -> Matrix {
    let nn = color.n();
    let dim = (nn * nn) as usize;
    let mut m = Matrix::zeros(color, dim, dim);
    let eps = &CycNum::zeta_pow(color, 1) - &CycNum::zeta_pow(color, -1);
    for i in 0..nn {
        for j in 0..nn {
            let col = pair_index(color, i, j);
            for k in 0..=i.min(nn - 1 - j) {
                let row = pair_index(color, j + k, i - k);
                let mut z = CycNum::zeta_pow(
                    color,
                    2 * (i - k) as i64 * (j + k) as i64 + (k as i64 * (k as i64 - 1)) / 2,
                );
                z = &z * &qbinom_zeta(color, k + j, j);
                let mut eps_pow = CycNum::one(color);
                for _ in 0..k {
                    eps_pow = &eps_pow * &eps;
                }
                z = &z * &eps_pow;
                let coeff = weight_qfact(color, 1, -(j as i64), k).scale(&z);
                m[(row, col)] = &m[(row, col)]
                    + &(&coeff
                        * &WeightRat::monomial(color, -((i + j) as i64), CycNum::one(color)));
            }
        }
    }
    m
}

/// Change of basis `v_j = [λ; j] v̂_j` applied to `r_matrix_hat`, giving the
/// braiding in the `v` basis actually used for braid closures.
fn r_matrix_uncached(color: Color) -> Matrix {
    let hat = r_matrix_hat(color);
    let nn = color.n();
    let fact: Vec<WeightRat> = (0..nn).map(|i| weight_qfact(color, 1, 0, i)).collect();
    let fact_inv: Vec<WeightRat> = fact
        .iter()
        .map(|f| f.inverse().expect("[λ; i] is nonzero for i < N"))
        .collect();
    let dim = (nn * nn) as usize;
    Matrix::from_fn(color, dim, dim, |row, col| {
        if hat[(row, col)].is_zero() {
            return WeightRat::zero(color);
        }
        let (a, b) = ((row / nn as usize) as u32, (row % nn as usize) as u32);
        let (i, j) = ((col / nn as usize) as u32, (col % nn as usize) as u32);
        let scale = &(&fact[i as usize] * &fact[j as usize])
            * &(&fact_inv[a as usize] * &fact_inv[b as usize]);
        &hat[(row, col)] * &scale
    })
}

/// Blockwise inverse of the braiding; each pair weight `i + j` is invariant,
/// so inversion happens block by block.
fn r_matrix_inverse_uncached(color: Color, r: &Matrix) -> Matrix {
    let nn = color.n();
    let dim = (nn * nn) as usize;
    let mut out = Matrix::zeros(color, dim, dim);
    for w in 0..=2 * (nn - 1) {
        let idx: Vec<usize> = (0..dim)
            .filter(|&p| (p as u32 / nn) + (p as u32 % nn) == w)
            .collect();
        let block = r.submatrix(&idx, &idx);
        let inv = block.inverse().expect("braiding blocks are invertible");
        for (bi, &gi) in idx.iter().enumerate() {
            for (bj, &gj) in idx.iter().enumerate() {
                out[(gi, gj)] = inv[(bi, bj)].clone();
            }
        }
    }
    out
}

type RPair = Arc<(Matrix, Matrix)>;

static R_CACHE: Lazy<Mutex<HashMap<Color, RPair>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn r_pair(color: Color) -> RPair {
    let mut cache = R_CACHE.lock().unwrap();
    cache
        .entry(color)
        .or_insert_with(|| {
            let r = r_matrix_uncached(color);
            let r_inv = r_matrix_inverse_uncached(color, &r);
            Arc::new((r, r_inv))
        })
        .clone()
}

pub fn r_matrix(color: Color) -> Matrix {
    r_pair(color).0.clone()
}

pub fn r_matrix_inverse(color: Color) -> Matrix {
    r_pair(color).1.clone()
}

/// Apply the two-site operator `g` (an `N²×N²` matrix) at tensor slots
/// `pos, pos + 1` (1-based) from the left: returns `G · m`.
fn apply_two_site(color: Color, g: &Matrix, m: &Matrix, n: usize, pos: usize) -> Matrix {
    let base = color.n() as usize;
    let tail = base.pow((n - pos - 1) as u32);
    let chunk = base * base * tail;
    let states = state_count(color, n);
    let mut out = Matrix::zeros(color, states, m.cols());
    for head in 0..states / chunk {
        for t in 0..tail {
            for q_out in 0..base * base {
                let row_out = head * chunk + q_out * tail + t;
                for q_in in 0..base * base {
                    let coeff = &g[(q_out, q_in)];
                    if coeff.is_zero() {
                        continue;
                    }
                    let row_in = head * chunk + q_in * tail + t;
                    for c in 0..m.cols() {
                        let v = &m[(row_in, c)];
                        if !v.is_zero() {
                            out[(row_out, c)] = &out[(row_out, c)] + &(coeff * v);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The image of the braid word under the braid-group representation on
/// `X^{⊗n}`, as a dense `N^n × N^n` matrix.
pub fn braid_matrix(color: Color, word: &BraidWord) -> Matrix {
    let n = word.strands();
    let pair = r_pair(color);
    let mut m = Matrix::identity(color, state_count(color, n));
    for &g in word.letters().iter().rev() {
        let op = if g > 0 { &pair.0 } else { &pair.1 };
        m = apply_two_site(color, op, &m, n, g.unsigned_abs() as usize);
    }
    m
}

/// Restrict a weight-preserving operator on `X^{⊗n}` to `X_{n,m}`. Fails if
/// the operator mixes weights.
pub fn weight_block(color: Color, m: &Matrix, n: usize, weight: u32) -> Result<Matrix> {
    let idx = weight_indices(color, n, weight);
    let states = state_count(color, n);
    for &col in &idx {
        for row in 0..states {
            if weight_of(color, n, row) != weight && !m[(row, col)].is_zero() {
                return Err(AdoError::WeightMixing);
            }
        }
    }
    Ok(m.submatrix(&idx, &idx))
}

/// Restriction of the braid representation to `X_{n,m}`, computed blockwise.
pub fn braid_matrix_block(color: Color, word: &BraidWord, weight: u32) -> Result<Matrix> {
    let n = word.strands();
    let full = braid_matrix(color, word);
    weight_block(color, &full, n, weight)
}

/// Which n-fold coproduct to use; only `A` commutes with the braiding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    A,
    B,
}

fn e_single(color: Color) -> Matrix {
    let nn = color.n() as usize;
    let mut m = Matrix::zeros(color, nn, nn);
    for i in 1..nn {
        m[(i - 1, i)] = weight_qint(color, 1, 1 - i as i64);
    }
    m
}

fn f_single(color: Color) -> Matrix {
    let nn = color.n() as usize;
    let mut m = Matrix::zeros(color, nn, nn);
    for i in 0..nn - 1 {
        m[(i + 1, i)] = WeightRat::from_scalar(color, qint_zeta(color, i as i64 + 1));
    }
    m
}

/// `K^p` on a single factor: diagonal `t^p ζ^{−2pi}`.
fn k_single_pow(color: Color, p: i64) -> Matrix {
    let nn = color.n() as usize;
    let mut m = Matrix::zeros(color, nn, nn);
    for i in 0..nn {
        m[(i, i)] = WeightRat::monomial(color, p, CycNum::zeta_pow(color, -2 * p * i as i64));
    }
    m
}

/// The pivot `h = K^{1−N}` on a single factor.
pub fn h_single(color: Color) -> Matrix {
    k_single_pow(color, 1 - color.n() as i64)
}

fn coproduct_sum(color: Color, n: usize, left: &Matrix, mid: &Matrix, right: &Matrix) -> Matrix {
    let states = state_count(color, n);
    let mut total = Matrix::zeros(color, states, states);
    for p in 0..n {
        let mut term = Matrix::identity(color, 1);
        for slot in 0..n {
            let factor = if slot < p {
                left
            } else if slot == p {
                mid
            } else {
                right
            };
            term = term.kron(factor);
        }
        total = total.add(&term);
    }
    total
}

/// The `n`-fold coproduct action of `E` on `X^{⊗n}`.
pub fn e_matrix(color: Color, n: usize, conv: Convention) -> Matrix {
    let e = e_single(color);
    let id = Matrix::identity(color, color.n() as usize);
    let k = k_single_pow(color, 1);
    match conv {
        Convention::A => coproduct_sum(color, n, &id, &e, &k),
        Convention::B => coproduct_sum(color, n, &k, &e, &id),
    }
}

/// The `n`-fold coproduct action of `F` on `X^{⊗n}`.
pub fn f_matrix(color: Color, n: usize, conv: Convention) -> Matrix {
    let f = f_single(color);
    let id = Matrix::identity(color, color.n() as usize);
    let k_inv = k_single_pow(color, -1);
    match conv {
        Convention::A => coproduct_sum(color, n, &k_inv, &f, &id),
        Convention::B => coproduct_sum(color, n, &id, &f, &k_inv),
    }
}

/// Basis of the highest-weight subspace `Y_{n,m} = ker E ∩ X_{n,m}`, in
/// weight-block coordinates (rows ordered like `weight_indices`). Columns are
/// normalized so the rows whose first tensor digit is 0 form the identity.
pub fn highest_weight_basis(color: Color, n: usize, m: u32) -> Result<Matrix> {
    let idx = weight_indices(color, n, m);
    if idx.is_empty() {
        return Ok(Matrix::zeros(color, 0, 0));
    }
    let e = e_matrix(color, n, Convention::A);
    let kernel = if m == 0 {
        Matrix::identity(color, idx.len())
    } else {
        let lower = weight_indices(color, n, m - 1);
        e.submatrix(&lower, &idx).nullspace()
    };
    let zero_rows: Vec<usize> = idx
        .iter()
        .enumerate()
        .filter(|(_, &full)| digits(color, n, full)[0] == 0)
        .map(|(block_row, _)| block_row)
        .collect();
    if kernel.cols() != zero_rows.len() {
        return Err(AdoError::RankDeficient);
    }
    if kernel.cols() == 0 {
        return Ok(Matrix::zeros(color, idx.len(), 0));
    }
    let s = kernel.submatrix(&zero_rows, &(0..kernel.cols()).collect::<Vec<_>>());
    let s_inv = s.inverse().map_err(|_| AdoError::BasisInconsistency)?;
    Ok(kernel.mul(&s_inv))
}

/// Rows of a weight block whose first tensor digit is 0, in block coordinates.
pub fn first_digit_zero_rows(color: Color, n: usize, m: u32) -> Vec<usize> {
    weight_indices(color, n, m)
        .iter()
        .enumerate()
        .filter(|(_, &full)| digits(color, n, full)[0] == 0)
        .map(|(block_row, _)| block_row)
        .collect()
}
