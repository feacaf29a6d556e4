//! Closed-form divisor sums for the generalized Fermat, Wilson and Lucas
//! congruences, together with their prime-modulus corollaries.
//!
//! Each sum has the shape `sum_{d | n} phi(n/d) * F(d)` where `F(d)` is the
//! number of points fixed by a group element of order `n/d`. The sums are
//! evaluated exactly and only reduced mod `n` by the `*_check` functions.

mod composition;
mod fermat;
mod lucas;
mod wilson;

pub use composition::{Composition, Compositions};
pub use fermat::{corollary_fermat_check, fermat_check, fermat_sum, fermat_terms, necklace_count};
pub use lucas::{
    lucas_check, lucas_inner_sum, lucas_inner_sum_literal, lucas_params, lucas_prime_reduce, lucas_sum,
    lucas_terms, LucasParams,
};
pub use wilson::{corollary_wilson_check, cycle_fixed_count, wilson_check, wilson_sum, wilson_terms};

use crate::arith::{self, Count};
use crate::error::{Error, Result};

/// One divisor's contribution `phi(n/d) * F(d)` to a theorem sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTerm<T> {
    pub divisor: u64,
    pub value: T,
}

pub(crate) fn total<T: Count>(terms: &[DivisorTerm<T>]) -> Result<T> {
    arith::sum(terms.iter().map(|t| &t.value))
}

/// `value / n`, which must be exact.
pub(crate) fn exact_quotient<T: Count>(value: T, n: u64, what: &str) -> Result<T> {
    let (q, rem) = value.div_rem(&arith::lift(n)?);
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inconsistent(format!("{what} = {value} is not divisible by {n}")))
    }
}
