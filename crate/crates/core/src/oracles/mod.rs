//! The three concrete `Z_n` actions, built extensionally so that their fixed
//! points and orbits can be counted by brute force.
//!
//! - [`words_action`]: rotating the coordinates of words of length `n`.
//! - [`cycles_action`]: adding a constant to every entry of an `n`-cycle.
//! - [`subsets_action`]: rotating the blocks of a block universe, acting on `r`-subsets.

mod cycles;
mod subsets;
mod words;

pub use cycles::{construct_pi, cycles_action, pi_forms, CanonicalCycle};
pub use subsets::{subsets_action, BlockUniverse, Element};
pub use words::{words_action, Word};

use crate::arith::require_divisor;
use crate::burnside::CyclicAction;
use crate::error::{Error, Result};

/// Number of points fixed by the element `d` (taken mod `n`) of the acting group.
pub fn brute_fixed_count(action: &CyclicAction, d: u64) -> Result<u64> {
    require_divisor(action.n(), d)?;
    Ok(action.fixed_points(d % action.n())?.len() as u64)
}

pub(crate) fn check_budget(size: Option<u128>, budget: usize) -> Result<usize> {
    match size {
        Some(s) if s <= budget as u128 => Ok(s as usize),
        other => Err(Error::BudgetExceeded {
            size: other.unwrap_or(u128::MAX),
            budget,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::DEFAULT_BUDGET;

    #[test]
    fn brute_fixed_count_values() {
        let words = words_action(2, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(brute_fixed_count(&words, 4), Ok(16));
        assert_eq!(brute_fixed_count(&words, 2), Ok(4));
        assert_eq!(brute_fixed_count(&words, 3), Err(Error::NotDivisor { d: 3, n: 4 }));
        let cycles = cycles_action(6, DEFAULT_BUDGET).unwrap();
        assert_eq!(brute_fixed_count(&cycles, 2), Ok(6));
        assert_eq!(brute_fixed_count(&cycles, 6), Ok(120));
    }
}
