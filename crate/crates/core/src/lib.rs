//! Orbit counting for cyclic group actions and the divisor sums it yields.
//!
//! For an action of `Z_n` on a finite set, the number of orbits is
//! `(1/n) * sum_{d | n} phi(n/d) |X^d|`, so `n` divides that sum. Three
//! actions turn this into congruences:
//!
//! - rotating words of length `n` over `a` letters gives `n | sum phi(n/d) a^d`,
//!   which at a prime is Fermat's little theorem;
//! - shifting the entries of `n`-cycles gives
//!   `n | sum phi(n/d)^2 (n/d)^(d-1) (d-1)!`, which at a prime is Wilson's theorem;
//! - rotating blocks of a partitioned set acting on its `r`-subsets gives a
//!   composition-indexed sum whose prime case is Lucas's theorem.
//!
//! [`theorems`] evaluates the closed forms exactly; [`oracles`] builds the
//! actions themselves so every closed form can be checked against brute force
//! through the generic engine in [`burnside`].
//!
//! Sums are generic over [`Count`]; use [`Natural`] for exact values or a
//! machine integer such as `u64` for speed, in which case overflow is an error.

pub mod arith;
pub mod burnside;
pub mod error;
pub mod oracles;
pub mod theorems;

pub use arith::{binomial, divisors, euler_phi, factorial, gcd, is_prime, residue, Count, DivisorList};
pub use burnside::{make_action, CyclicAction, FixedSet, DEFAULT_BUDGET};
pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = num_bigint::BigUint;

/// Machine-width alternative to [`Natural`].
pub type Wide = u128;
