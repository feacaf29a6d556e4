use num_rational::Ratio;

use super::{total, Compositions, DivisorTerm};
use crate::arith::{self, binomial, divisors, euler_phi, lift, require_divisor, residue, Count};
use crate::error::{Error, Result};
use crate::Natural;

/// `m = m_quot * n + m_rem` and `r = r_quot * n + r_rem`, with both remainders in `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LucasParams {
    pub n: u64,
    pub m: u64,
    pub r: u64,
    pub m_quot: u64,
    pub m_rem: u64,
    pub r_quot: u64,
    pub r_rem: u64,
}

impl LucasParams {
    pub fn new(n: u64, m: u64, r: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive { what: "n" });
        }
        Ok(LucasParams {
            n,
            m,
            r,
            m_quot: m / n,
            m_rem: m % n,
            r_quot: r / n,
            r_rem: r % n,
        })
    }
}

pub fn lucas_params(n: u64, m: u64, r: u64) -> Result<LucasParams> {
    LucasParams::new(n, m, r)
}

/// Size of the leftover block: `r_rem + (n/d) j`, possibly negative.
fn leftover_size(params: &LucasParams, d: u64, j: i64) -> i64 {
    params.r_rem as i64 + (params.n / d) as i64 * j
}

/// `d * r_quot - j`, the total of any composition with mean `r_quot - j/d`.
fn composition_total(params: &LucasParams, d: u64, j: i64) -> Option<u64> {
    let target = Ratio::from_integer(params.r_quot as i64) - Ratio::new(j, d as i64);
    let scaled = target * Ratio::from_integer(d as i64);
    debug_assert!(scaled.is_integer());
    u64::try_from(scaled.to_integer()).ok()
}

/// Fixed-point count of an element of order `n/d` in the subset action,
/// evaluated term by term: every `j` in `-(d-1)..=d-1`, every composition
/// with the required mean, no pruning beyond the binomial conventions.
pub fn lucas_inner_sum_literal<T: Count>(params: &LucasParams, d: u64) -> Result<T> {
    require_divisor(params.n, d)?;
    let d_parts = usize::try_from(d).map_err(|_| Error::Overflow)?;
    let span = d as i64 - 1;
    let mut acc = T::zero();
    for j in -span..=span {
        let leftover = binomial::<T>(params.m_rem, leftover_size(params, d, j))?;
        let Some(total) = composition_total(params, d, j) else {
            continue;
        };
        let mean = Ratio::new(total, d);
        for alpha in Compositions::new(total, d_parts) {
            debug_assert_eq!(alpha.length(), mean);
            let mut term = leftover.clone();
            for &part in alpha.parts() {
                term = arith::mul(&term, &binomial::<T>(params.m_quot, part as i64)?)?;
            }
            acc = arith::add(&acc, &term)?;
        }
    }
    Ok(acc)
}

/// Same quantity as [`lucas_inner_sum_literal`]. Skips `j` whose leftover
/// binomial vanishes and sums the composition products by convolving the
/// per-block polynomial `sum_a C(m_quot, a) x^a` with itself `d` times.
pub fn lucas_inner_sum<T: Count>(params: &LucasParams, d: u64) -> Result<T> {
    require_divisor(params.n, d)?;
    let span = d as i64 - 1;
    let mut wanted = Vec::new();
    for j in -span..=span {
        let leftover = binomial::<T>(params.m_rem, leftover_size(params, d, j))?;
        if leftover.is_zero() {
            continue;
        }
        if let Some(total) = composition_total(params, d, j) {
            wanted.push((total, leftover));
        }
    }
    let Some(max_total) = wanted.iter().map(|(t, _)| *t).max() else {
        return Ok(T::zero());
    };
    let coeffs = block_power_coefficients::<T>(params.m_quot, d, max_total)?;
    let mut acc = T::zero();
    for (total, leftover) in wanted {
        if let Some(c) = coeffs.get(total as usize) {
            acc = arith::add(&acc, &arith::mul(c, &leftover)?)?;
        }
    }
    Ok(acc)
}

/// Coefficients of `x^0..=x^max_degree` in `(sum_a C(height, a) x^a)^d`.
fn block_power_coefficients<T: Count>(height: u64, d: u64, max_degree: u64) -> Result<Vec<T>> {
    let top = height.min(max_degree);
    let block: Vec<T> = (0..=top).map(|a| binomial::<T>(height, a as i64)).collect::<Result<_>>()?;
    let mut poly = vec![T::one()];
    for _ in 0..d {
        let len = (poly.len() + block.len() - 1).min(max_degree as usize + 1);
        let mut next = vec![T::zero(); len];
        for (i, p) in poly.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (a, b) in block.iter().enumerate() {
                if i + a >= len {
                    break;
                }
                next[i + a] = arith::add(&next[i + a], &arith::mul(p, b)?)?;
            }
        }
        poly = next;
    }
    Ok(poly)
}

/// `phi(n/d) * lucas_inner_sum(params, d)` for each divisor `d` of `n`.
pub fn lucas_terms<T: Count>(n: u64, m: u64, r: u64) -> Result<Vec<DivisorTerm<T>>> {
    let params = LucasParams::new(n, m, r)?;
    divisors(n)?
        .iter()
        .map(|d| {
            let value = arith::mul(&lift::<T>(euler_phi(n / d)?)?, &lucas_inner_sum::<T>(&params, d)?)?;
            Ok(DivisorTerm { divisor: d, value })
        })
        .collect()
}

pub fn lucas_sum<T: Count>(n: u64, m: u64, r: u64) -> Result<T> {
    total(&lucas_terms(n, m, r)?)
}

/// Whether `n` divides the sum. The identity-element term must also equal
/// `C(m, r)`; a mismatch is reported as an internal-consistency error.
pub fn lucas_check(n: u64, m: u64, r: u64) -> Result<bool> {
    let params = LucasParams::new(n, m, r)?;
    let whole = lucas_inner_sum::<Natural>(&params, n)?;
    let expected = binomial::<Natural>(m, r as i64)?;
    if whole != expected {
        return Err(Error::Inconsistent(format!(
            "identity term {whole} differs from C({m}, {r}) = {expected}"
        )));
    }
    Ok(residue(&lucas_sum::<Natural>(n, m, r)?, n)? == 0)
}

/// `C(m, r) mod p` as a product of digit binomials, peeling one base-`p`
/// digit at a time via `C(m, r) = C(m_quot, r_quot) C(m_rem, r_rem) (mod p)`.
pub fn lucas_prime_reduce(p: u64, m: u64, r: u64) -> Result<u64> {
    arith::require_prime(p)?;
    let mut product = 1 % p;
    let (mut m, mut r) = (m, r);
    while (m > 0 || r > 0) && product != 0 {
        let step = LucasParams::new(p, m, r)?;
        let digit = residue(&binomial::<Natural>(step.m_rem, step.r_rem as i64)?, p)?;
        product = ((product as u128 * digit as u128) % p as u128) as u64;
        (m, r) = (step.m_quot, step.r_quot);
    }
    Ok(product)
}
