use super::{exact_quotient, total, DivisorTerm};
use crate::arith::{self, divisors, euler_phi, lift, pow, residue, Count};
use crate::error::Result;
use crate::Natural;

/// `phi(n/d) * a^d` for each divisor `d` of `n`.
pub fn fermat_terms<T: Count>(a: u64, n: u64) -> Result<Vec<DivisorTerm<T>>> {
    divisors(n)?
        .iter()
        .map(|d| {
            let value = arith::mul(&lift::<T>(euler_phi(n / d)?)?, &pow::<T>(a, d)?)?;
            Ok(DivisorTerm { divisor: d, value })
        })
        .collect()
}

/// `sum_{d | n} phi(n/d) a^d`.
pub fn fermat_sum<T: Count>(a: u64, n: u64) -> Result<T> {
    total(&fermat_terms(a, n)?)
}

/// Number of length-`n` necklaces over an `a`-letter alphabet.
pub fn necklace_count<T: Count>(a: u64, n: u64) -> Result<T> {
    exact_quotient(fermat_sum(a, n)?, n, "fermat sum")
}

pub fn fermat_check(a: u64, n: u64) -> Result<bool> {
    Ok(residue(&fermat_sum::<Natural>(a, n)?, n)? == 0)
}

/// `a^p = a (mod p)`, plus the prime shape of the sum: `(p-1) a + a^p`, divisible by `p`.
pub fn corollary_fermat_check(a: u64, p: u64) -> Result<bool> {
    arith::require_prime(p)?;
    let a_big = Natural::from(a);
    let a_pow = pow::<Natural>(a, p)?;
    let little = residue(&a_pow, p)? == residue(&a_big, p)?;
    let sum = fermat_sum::<Natural>(a, p)?;
    let shape = sum == Natural::from(p - 1) * &a_big + &a_pow;
    Ok(little && shape && residue(&sum, p)? == 0)
}
