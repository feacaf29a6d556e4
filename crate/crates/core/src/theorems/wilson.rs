use super::{total, DivisorTerm};
use crate::arith::{self, divisors, euler_phi, factorial, lift, pow, require_divisor, residue, Count};
use crate::error::Result;
use crate::Natural;

/// Number of `n`-cycles fixed by a shift of order `n/d`: `phi(n/d) (n/d)^(d-1) (d-1)!`.
pub fn cycle_fixed_count<T: Count>(n: u64, d: u64) -> Result<T> {
    require_divisor(n, d)?;
    let q = n / d;
    let head = arith::mul(&lift::<T>(euler_phi(q)?)?, &pow::<T>(q, d - 1)?)?;
    arith::mul(&head, &factorial::<T>(d - 1)?)
}

/// `phi(n/d)^2 (n/d)^(d-1) (d-1)!` for each divisor `d` of `n`.
pub fn wilson_terms<T: Count>(n: u64) -> Result<Vec<DivisorTerm<T>>> {
    divisors(n)?
        .iter()
        .map(|d| {
            let value = arith::mul(&lift::<T>(euler_phi(n / d)?)?, &cycle_fixed_count::<T>(n, d)?)?;
            Ok(DivisorTerm { divisor: d, value })
        })
        .collect()
}

pub fn wilson_sum<T: Count>(n: u64) -> Result<T> {
    total(&wilson_terms(n)?)
}

pub fn wilson_check(n: u64) -> Result<bool> {
    Ok(residue(&wilson_sum::<Natural>(n)?, n)? == 0)
}

/// `(p-1)! = -1 (mod p)`, plus the prime shape of the sum: `(p-1)^2 + (p-1)!`.
pub fn corollary_wilson_check(p: u64) -> Result<bool> {
    arith::require_prime(p)?;
    let fact = factorial::<Natural>(p - 1)?;
    let wilson = residue(&(fact.clone() + 1u32), p)? == 0;
    let shape = wilson_sum::<Natural>(p)? == Natural::from(p - 1).pow(2) + fact;
    Ok(wilson && shape)
}
