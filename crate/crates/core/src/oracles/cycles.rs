use std::collections::BTreeSet;

use super::check_budget;
use crate::arith::{gcd, require_divisor};
use crate::burnside::CyclicAction;
use crate::error::{Error, Result};

/// An `n`-cycle on the residues mod `n`, written starting from 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCycle {
    entries: Vec<u64>,
}

impl CanonicalCycle {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCycle("empty cycle".into()));
        }
        let mut seen = vec![false; n];
        for &e in &entries {
            let slot = seen
                .get_mut(e as usize)
                .ok_or_else(|| Error::InvalidCycle(format!("entry {e} is not a residue mod {n}")))?;
            if std::mem::replace(slot, true) {
                return Err(Error::InvalidCycle(format!("entry {e} repeated")));
            }
        }
        if entries[0] != 0 {
            return Err(Error::InvalidCycle("cycle must start at 0".into()));
        }
        Ok(CanonicalCycle { entries })
    }

    /// Rotates a cycle written from any starting point so that it begins at 0.
    pub fn canonicalize(mut entries: Vec<u64>) -> Result<Self> {
        let start = entries
            .iter()
            .position(|&e| e == 0)
            .ok_or_else(|| Error::InvalidCycle("cycle does not contain 0".into()))?;
        entries.rotate_left(start);
        Self::new(entries)
    }

    pub fn n(&self) -> u64 {
        self.entries.len() as u64
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Adds `g` to every entry mod `n`.
    pub fn shift(&self, g: u64) -> Self {
        let n = self.n();
        let mut shifted: Vec<u64> = self.entries.iter().map(|&e| (e + g % n) % n).collect();
        let start = shifted.iter().position(|&e| e == 0).expect("a permutation contains 0");
        shifted.rotate_left(start);
        CanonicalCycle { entries: shifted }
    }

    /// The elements of `Z_n` whose shift leaves this cycle unchanged.
    pub fn stabilizer(&self) -> Vec<u64> {
        (0..self.n()).filter(|&g| self.shift(g) == *self).collect()
    }

    /// Lexicographic rank of the entries after the leading 0 among all
    /// arrangements of `1..n`.
    pub fn rank(&self) -> usize {
        let tail = &self.entries[1..];
        let mut rank = 0usize;
        for (i, &e) in tail.iter().enumerate() {
            let smaller_later = tail[i + 1..].iter().filter(|&&x| x < e).count();
            rank = rank * (tail.len() - i) + smaller_later;
        }
        rank
    }

    fn from_tail(tail: &[u64]) -> Self {
        let mut entries = Vec::with_capacity(tail.len() + 1);
        entries.push(0);
        entries.extend_from_slice(tail);
        CanonicalCycle { entries }
    }
}

/// Next permutation in lexicographic order, in place; false after the last one.
fn next_permutation(v: &mut [u64]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a larger successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `Z_n` acting on the `(n-1)!` canonical `n`-cycles by adding `g` to each entry.
pub fn cycles_action(n: u64, budget: usize) -> Result<CyclicAction> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    let size = (1..n).try_fold(1u128, |acc, k| acc.checked_mul(k as u128));
    let size = check_budget(size, budget)?;
    let mut tail: Vec<u64> = (1..n).collect();
    let mut image = Vec::with_capacity(size);
    loop {
        let cycle = CanonicalCycle::from_tail(&tail);
        debug_assert_eq!(cycle.rank(), image.len());
        image.push(cycle.shift(1).rank());
        if !next_permutation(&mut tail) {
            break;
        }
    }
    CyclicAction::new(n, image)
}

/// The cycle `(0, a_2, .., a_d, g, a_2 + g, .., a_d + g, .., (n/d - 1) g, .., a_d + (n/d - 1) g)`
/// built from a generator `g` of the subgroup of multiples of `d` and
/// representatives `a_2..a_d` of the other cosets of that subgroup.
pub fn construct_pi(n: u64, d: u64, g: u64, reps: &[u64]) -> Result<CanonicalCycle> {
    require_divisor(n, d)?;
    if g >= n {
        return Err(Error::ElementOutOfRange { g, n });
    }
    if gcd(g, n) != d {
        return Err(Error::InvalidRepresentatives(format!(
            "g = {g} does not have order {} in Z_{n}",
            n / d
        )));
    }
    if reps.len() as u64 != d - 1 {
        return Err(Error::InvalidRepresentatives(format!(
            "expected {} representatives, got {}",
            d - 1,
            reps.len()
        )));
    }
    let mut classes = BTreeSet::from([0u64]);
    for &a in reps {
        if a >= n {
            return Err(Error::InvalidRepresentatives(format!("{a} is not a residue mod {n}")));
        }
        if !classes.insert(a % d) {
            return Err(Error::InvalidRepresentatives(format!(
                "{a} repeats the class {} mod {d}",
                a % d
            )));
        }
    }
    let mut entries = Vec::with_capacity(n as usize);
    for j in 0..n / d {
        let offset = (j * g) % n;
        entries.push(offset);
        entries.extend(reps.iter().map(|&a| (a + offset) % n));
    }
    CanonicalCycle::new(entries).map_err(|e| Error::Inconsistent(format!("constructed cycle is invalid: {e}")))
}

/// Every cycle [`construct_pi`] can produce for the divisor `d`, over all
/// valid `g` and all ordered representative tuples.
pub fn pi_forms(n: u64, d: u64) -> Result<Vec<CanonicalCycle>> {
    require_divisor(n, d)?;
    let quotient = n / d;
    let generators: Vec<u64> = (0..n).filter(|&g| gcd(g, n) == d).collect();
    let mut class_order: Vec<u64> = (1..d).collect();
    let mut forms = Vec::new();
    loop {
        // choose a lift c + k d for each class c, k in 0..n/d
        let slots = class_order.len();
        let mut lifts = vec![0u64; slots];
        loop {
            let reps: Vec<u64> = class_order.iter().zip(&lifts).map(|(&c, &k)| c + k * d).collect();
            for &g in &generators {
                forms.push(construct_pi(n, d, g, &reps)?);
            }
            let Some(pos) = lifts.iter().rposition(|&k| k + 1 < quotient) else {
                break;
            };
            lifts[pos] += 1;
            lifts[pos + 1..].fill(0);
        }
        if !next_permutation(&mut class_order) {
            break;
        }
    }
    Ok(forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::DEFAULT_BUDGET;

    #[test]
    fn example_cycle() {
        let pi = construct_pi(12, 4, 8, &[9, 6, 3]).unwrap();
        assert_eq!(pi.entries(), &[0, 9, 6, 3, 8, 5, 2, 11, 4, 1, 10, 7]);
        assert_eq!(pi.stabilizer(), vec![0, 4, 8]);
    }

    #[test]
    fn identity_block_structure() {
        for n in 1..8u64 {
            let reps: Vec<u64> = (1..n).collect();
            let pi = construct_pi(n, n, 0, &reps).unwrap();
            assert_eq!(pi.entries(), reps_with_zero(n).as_slice());
        }
    }

    fn reps_with_zero(n: u64) -> Vec<u64> {
        (0..n).collect()
    }

    #[test]
    fn construct_pi_rejections() {
        assert!(matches!(construct_pi(12, 4, 4, &[1, 2]), Err(Error::InvalidRepresentatives(_))));
        assert!(matches!(construct_pi(12, 4, 6, &[1, 2, 3]), Err(Error::InvalidRepresentatives(_))));
        assert!(matches!(construct_pi(12, 4, 8, &[1, 5, 3]), Err(Error::InvalidRepresentatives(_))));
        assert!(matches!(construct_pi(12, 4, 8, &[4, 2, 3]), Err(Error::InvalidRepresentatives(_))));
        assert!(matches!(construct_pi(12, 4, 8, &[1, 2, 15]), Err(Error::InvalidRepresentatives(_))));
        assert_eq!(construct_pi(12, 5, 8, &[]), Err(Error::NotDivisor { d: 5, n: 12 }));
        assert_eq!(construct_pi(12, 4, 12, &[1, 2, 3]), Err(Error::ElementOutOfRange { g: 12, n: 12 }));
    }

    #[test]
    fn canonical_forms() {
        let c = CanonicalCycle::canonicalize(vec![2, 0, 1]).unwrap();
        assert_eq!(c.entries(), &[0, 1, 2]);
        assert_eq!(c.shift(1), c);
        assert!(CanonicalCycle::new(vec![1, 0]).is_err());
        assert!(CanonicalCycle::new(vec![0, 0]).is_err());
        assert!(CanonicalCycle::new(vec![0, 2]).is_err());
        let c = CanonicalCycle::new(vec![0, 2, 1, 3]).unwrap();
        assert_eq!(c.shift(2).entries(), &[0, 3, 1, 2]);
    }

    #[test]
    fn ranks_follow_lexicographic_order() {
        let mut tail: Vec<u64> = (1..5).collect();
        let mut expected = 0;
        loop {
            assert_eq!(CanonicalCycle::from_tail(&tail).rank(), expected);
            expected += 1;
            if !next_permutation(&mut tail) {
                break;
            }
        }
        assert_eq!(expected, 24);
    }

    #[test]
    fn small_actions() {
        let two = cycles_action(2, DEFAULT_BUDGET).unwrap();
        assert_eq!(two.size(), 1);
        assert_eq!(two.fixed_points(1).unwrap().len(), 1);
        let one = cycles_action(1, DEFAULT_BUDGET).unwrap();
        assert_eq!(one.size(), 1);
        let six = cycles_action(6, DEFAULT_BUDGET).unwrap();
        assert_eq!(six.size(), 120);
        assert_eq!(six.fixed_points(3).unwrap().len(), 8);
        assert!(six.gcd_collapse_check());
        assert!(matches!(cycles_action(12, DEFAULT_BUDGET), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn pi_form_counts() {
        assert_eq!(pi_forms(12, 4).unwrap().len(), 324);
        let forms: BTreeSet<_> = pi_forms(12, 4).unwrap().into_iter().collect();
        assert_eq!(forms.len(), 324);
        assert!(forms.contains(&construct_pi(12, 4, 8, &[9, 6, 3]).unwrap()));
    }
}
