//! Integer primitives shared by the rest of the crate.
//!
//! Everything that produces a potentially large value (factorials, binomials,
//! powers) is generic over [`Count`], so the same code runs over exact
//! [`Natural`](crate::Natural) values or over machine integers with overflow
//! reported as [`Error::Overflow`].

use std::fmt;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive};

use crate::error::{Error, Result};

/// A nonnegative integer type the theorem sums can be evaluated in.
pub trait Count:
    Integer + CheckedAdd + CheckedMul + FromPrimitive + ToPrimitive + Clone + fmt::Debug + fmt::Display + Send + Sync
{
}

impl<T> Count for T where
    T: Integer + CheckedAdd + CheckedMul + FromPrimitive + ToPrimitive + Clone + fmt::Debug + fmt::Display + Send + Sync
{
}

pub fn lift<T: Count>(x: u64) -> Result<T> {
    T::from_u64(x).ok_or(Error::Overflow)
}

pub(crate) fn add<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn pow<T: Count>(base: u64, exp: u64) -> Result<T> {
    let exp = usize::try_from(exp).map_err(|_| Error::Overflow)?;
    num_traits::checked_pow(lift::<T>(base)?, exp).ok_or(Error::Overflow)
}

pub(crate) fn sum<'a, T: Count + 'a>(values: impl IntoIterator<Item = &'a T>) -> Result<T> {
    values.into_iter().try_fold(T::zero(), |acc, v| add(&acc, v))
}

/// `value mod n` as a machine integer.
pub fn residue<T: Count>(value: &T, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive { what: "modulus" });
    }
    // n fits in u64, so the remainder does too
    let n_t = lift::<T>(n)?;
    Ok(value.mod_floor(&n_t).to_u64().expect("remainder below a u64 modulus"))
}

/// Greatest common divisor, with `gcd(0, n) = n`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn require_positive(n: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive { what })
    } else {
        Ok(())
    }
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Euler's totient: the number of `1 <= k <= n` coprime to `n`.
pub fn euler_phi(n: u64) -> Result<u64> {
    require_positive(n, "n")?;
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// The positive divisors of `n`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: u64,
    divisors: Vec<u64>,
}

impl DivisorList {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.divisors.binary_search(&d).is_ok()
    }
}

impl<'a> IntoIterator for &'a DivisorList {
    type Item = u64;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, u64>>;

    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter().copied()
    }
}

pub fn divisors(n: u64) -> Result<DivisorList> {
    require_positive(n, "n")?;
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(DivisorList { n, divisors: low })
}

pub(crate) fn require_divisor(n: u64, d: u64) -> Result<()> {
    require_positive(n, "n")?;
    if d == 0 || n % d != 0 {
        Err(Error::NotDivisor { d, n })
    } else {
        Ok(())
    }
}

pub fn factorial<T: Count>(k: u64) -> Result<T> {
    (2..=k).try_fold(T::one(), |acc, i| mul(&acc, &lift(i)?))
}

/// Binomial coefficient, zero whenever `r < 0` or `r > m`.
pub fn binomial<T: Count>(m: u64, r: i64) -> Result<T> {
    let Ok(r) = u64::try_from(r) else {
        return Ok(T::zero());
    };
    if r > m {
        return Ok(T::zero());
    }
    let k = r.min(m - r);
    let mut c = T::one();
    for i in 0..k {
        // c * (m - i) is divisible by i + 1 at every step
        c = mul(&c, &lift(m - i)?)? / lift(i + 1)?;
    }
    Ok(c)
}
