//! Empirical growth oracle for prefix counts.
//!
//! Fits `ln c(n) ≈ α + β n + γ ln(n + 1)` by least squares over the top half of
//! `0..=n_max`. A fitted ratio `e^β` above [`EXPONENTIAL_RATIO`] is read as
//! exponential growth; otherwise the degree is refit with `β = 0`. The result
//! never feeds the structural sparsity decision and exists only to cross-check
//! it.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::automaton::BuchiAutomaton;
use crate::error::{Error, Result};

pub const EXPONENTIAL_RATIO: f64 = 1.05;

#[derive(Clone, Debug, PartialEq)]
pub enum Growth {
    /// Counts bounded by a polynomial; `degree` is the rounded fitted exponent.
    Polynomial { degree: u32, exponent: f64 },
    /// Counts growing like `ratio^n`.
    Exponential { ratio: f64 },
}

impl Growth {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, Growth::Polynomial { .. })
    }
}

pub(crate) fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// Solves `m x = b` for small dense systems by Gaussian elimination with
/// partial pivoting.
#[allow(clippy::needless_range_loop)]
fn solve<const N: usize>(mut m: [[f64; N]; N], mut b: [f64; N]) -> Option<[f64; N]> {
    for col in 0..N {
        let pivot = (col..N).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[pivot][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..N {
            let f = m[row][col] / m[col][col];
            for k in col..N {
                m[row][k] -= f * m[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; N];
    for row in (0..N).rev() {
        let s: f64 = (row + 1..N).map(|k| m[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / m[row][row];
    }
    Some(x)
}

fn least_squares<const N: usize>(rows: &[([f64; N], f64)]) -> [f64; N] {
    let mut m = [[0.0; N]; N];
    let mut b = [0.0; N];
    for (x, y) in rows {
        for i in 0..N {
            for j in 0..N {
                m[i][j] += x[i] * x[j];
            }
            b[i] += x[i] * y;
        }
    }
    solve(m, b).unwrap_or([0.0; N])
}

/// Classifies the growth of `prefix_count(a, n)` for `n ≤ n_max`.
pub fn growth_oracle(a: &BuchiAutomaton, n_max: usize) -> Result<Growth> {
    if n_max < 8 {
        return Err(Error::domain("the growth oracle needs n_max ≥ 8"));
    }
    let a = a.trim()?;
    let counts = a.prefix_counts(n_max)?;
    let samples: Vec<(f64, f64, f64)> = (n_max / 2..=n_max)
        .map(|n| (n as f64, libm::log(n as f64 + 1.0), ln_big(&counts[n])))
        .collect();
    let full: Vec<([f64; 3], f64)> = samples.iter().map(|&(n, l, y)| ([1.0, n, l], y)).collect();
    let [_, beta, _] = least_squares(&full);
    let ratio = libm::exp(beta);
    if ratio > EXPONENTIAL_RATIO {
        return Ok(Growth::Exponential { ratio });
    }
    let reduced: Vec<([f64; 2], f64)> = samples.iter().map(|&(_, l, y)| ([1.0, l], y)).collect();
    let [_, gamma] = least_squares(&reduced);
    Ok(Growth::Polynomial {
        degree: libm::round(gamma.max(0.0)) as u32,
        exponent: gamma,
    })
}
