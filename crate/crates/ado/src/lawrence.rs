//! Truncated Lawrence representations extracted from highest-weight vectors,
//! plus the classical Burau/Alexander machinery used to calibrate them.

use crate::braid::BraidWord;
use crate::error::{AdoError, Result};
use crate::linalg::Matrix;
use crate::qrep::{
    braid_matrix, braid_matrix_block, first_digit_zero_rows, highest_weight_basis, weight_block,
};
use crate::ring::{Color, CycNum, WeightRat};

/// Top weight carrying a nonzero truncated Lawrence representation,
/// `(n−1)(N−1)`.
pub fn max_lawrence_weight(color: Color, n: usize) -> u32 {
    (n as u32 - 1) * (color.n() - 1)
}

/// The truncated Lawrence matrix `l_{n,m}(β)`: the action of the braid on the
/// highest-weight subspace `Y_{n,m}`, read off in the normalized basis. The
/// defining identity `ρ(β) P = P l_{n,m}(β)` is verified exactly.
pub fn truncated_lawrence_matrix(color: Color, word: &BraidWord, m: u32) -> Result<Matrix> {
    let n = word.strands();
    let b = braid_matrix_block(color, word, m)?;
    let p = highest_weight_basis(color, n, m)?;
    let bp = b.mul(&p);
    let zero_rows = first_digit_zero_rows(color, n, m);
    let all_cols: Vec<usize> = (0..p.cols()).collect();
    let l = bp.submatrix(&zero_rows, &all_cols);
    if p.mul(&l) != bp {
        return Err(AdoError::BasisInconsistency);
    }
    Ok(l)
}

/// Traces of `l_{n,m}(β)` for every weight `0 ≤ m ≤ (n−1)(N−1)`, obtained
/// from the weight-block traces of `ρ(β)` by unfolding
/// `tr X_m = Σ_{k=0}^{N−1} tr Y_{m−k}`.
pub fn trace_y_all(color: Color, word: &BraidWord) -> Result<Vec<WeightRat>> {
    let n = word.strands();
    let full = braid_matrix(color, word);
    let top = max_lawrence_weight(color, n);
    let mut tr_y: Vec<WeightRat> = Vec::with_capacity(top as usize + 1);
    for m in 0..=top {
        let block = weight_block(color, &full, n, m)?;
        let mut t = block.trace();
        for k in 1..color.n() {
            if k <= m {
                let idx = (m - k) as usize;
                if idx < tr_y.len() {
                    t = &t - &tr_y[idx];
                }
            }
        }
        tr_y.push(t);
    }
    Ok(tr_y)
}

pub fn trace_y(color: Color, word: &BraidWord, m: u32) -> Result<WeightRat> {
    if m > max_lawrence_weight(color, word.strands()) {
        return Ok(WeightRat::zero(color));
    }
    Ok(trace_y_all(color, word)?[m as usize].clone())
}

/// Unreduced Burau matrix of the word, over the `N = 2` coefficient field
/// with `x = t^{−2}`. `σ_i: e_i ↦ (1−x) e_i + e_{i+1}, e_{i+1} ↦ x e_i`.
fn burau_unreduced(word: &BraidWord) -> Matrix {
    let c = Color(2);
    let n = word.strands();
    let x = WeightRat::monomial(c, -2, CycNum::one(c));
    let x_inv = WeightRat::monomial(c, 2, CycNum::one(c));
    let one = WeightRat::one(c);
    let mut m = Matrix::identity(c, n);
    for &g in word.letters().iter().rev() {
        let i = g.unsigned_abs() as usize - 1;
        let mut s = Matrix::identity(c, n);
        if g > 0 {
            s[(i, i)] = &one - &x;
            s[(i + 1, i)] = one.clone();
            s[(i, i + 1)] = x.clone();
            s[(i + 1, i + 1)] = WeightRat::zero(c);
        } else {
            // inverse crossing: invert the 2x2 block
            s[(i, i)] = WeightRat::zero(c);
            s[(i + 1, i)] = x_inv.clone();
            s[(i, i + 1)] = one.clone();
            s[(i + 1, i + 1)] = &one - &x_inv;
        }
        m = s.mul(&m);
    }
    m
}

/// Burau representation on the quotient by the fixed vector `Σ e_i`,
/// in the basis `[e_1], …, [e_{n−1}]`.
pub fn burau_quotient(word: &BraidWord) -> Matrix {
    let c = Color(2);
    let n = word.strands();
    let u = burau_unreduced(word);
    Matrix::from_fn(c, n - 1, n - 1, |i, j| &u[(i, j)] - &u[(n - 1, j)])
}

/// Alexander polynomial of the closure via the Burau determinant formula,
/// normalized so the unknot gives 1:
/// `Δ(β̂) = t^{e(β)} (t^{−1} − t)/(t^{−n} − t^{n}) det(I − B̄(β))`.
pub fn alexander_via_burau(word: &BraidWord) -> Result<WeightRat> {
    word.require_knot()?;
    let c = Color(2);
    let n = word.strands() as i64;
    let b = burau_quotient(word);
    let det = Matrix::identity(c, b.rows()).sub(&b).determinant();
    let t = |e: i64| WeightRat::monomial(c, e, CycNum::one(c));
    let num = &t(-1) - &t(1);
    let den = &t(-n) - &t(n);
    Ok(&(&t(word.exponent_sum()) * &(&num / &den)) * &det)
}

/// Matrix induced on the `k`-th exterior power: minors over `k`-subsets in
/// lexicographic order.
pub fn exterior_power(m: &Matrix, k: usize) -> Matrix {
    let subsets = k_subsets(m.rows(), k);
    Matrix::from_fn(m.color(), subsets.len(), subsets.len(), |i, j| {
        m.submatrix(&subsets[i], &subsets[j]).determinant()
    })
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // next lexicographic k-subset of {0..n-1}
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
