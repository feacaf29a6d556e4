use super::check_budget;
use crate::burnside::CyclicAction;
use crate::error::{Error, Result};

/// A word of length `n` over the letters `1..=a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    entries: Vec<u64>,
}

impl Word {
    pub fn new(entries: Vec<u64>, a: u64) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NonPositive { what: "word length" });
        }
        if entries.iter().any(|&e| e == 0 || e > a) {
            return Err(Error::InvalidWord(format!("word letters must lie in 1..={a}")));
        }
        Ok(Word { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Base-`a` digits, first position most significant, letter `k` as digit `k - 1`.
    pub fn from_index(mut index: usize, a: u64, n: usize) -> Self {
        let a = a as usize;
        let mut entries = vec![0; n];
        for slot in entries.iter_mut().rev() {
            *slot = (index % a) as u64 + 1;
            index /= a;
        }
        Word { entries }
    }

    pub fn index(&self, a: u64) -> usize {
        self.entries
            .iter()
            .fold(0usize, |acc, &e| acc * a as usize + (e - 1) as usize)
    }

    /// The entry at position `t` moves to position `t + 1 (mod n)`.
    pub fn rotate(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.rotate_right(1);
        Word { entries }
    }
}

/// `Z_n` acting on the `a^n` words of length `n` by rotation.
pub fn words_action(a: u64, n: u64, budget: usize) -> Result<CyclicAction> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n" });
    }
    let size = u32::try_from(n)
        .ok()
        .and_then(|e| (a as u128).checked_pow(e));
    let size = check_budget(size, budget)?;
    let len = n as usize;
    let image = (0..size)
        .map(|i| Word::from_index(i, a, len).rotate().index(a))
        .collect();
    CyclicAction::new(n, image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::DEFAULT_BUDGET;

    #[test]
    fn indexing() {
        let w = Word::from_index(6, 2, 4);
        assert_eq!(w.entries(), &[1, 2, 2, 1]);
        assert_eq!(w.index(2), 6);
        assert_eq!(w.rotate().entries(), &[1, 1, 2, 2]);
        assert!(Word::new(vec![1, 3], 2).is_err());
        assert_eq!(Word::new(vec![2, 1], 2).unwrap().index(2), 2);
    }

    #[test]
    fn small_actions() {
        for n in 1..6 {
            let one = words_action(1, n, DEFAULT_BUDGET).unwrap();
            assert_eq!(one.size(), 1);
            assert_eq!(one.orbit_count_direct(), 1);
        }
        let w = words_action(2, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(w.size(), 16);
        assert_eq!(w.orbit_count_direct(), 6);
        assert_eq!(w.orbit_count_burnside(), Ok(6));
        assert_eq!(w.fixed_points(1).unwrap().len(), 2);
        assert_eq!(w.fixed_points(3).unwrap().len(), 2);
        assert_eq!(w.fixed_points(2).unwrap().len(), 4);
        assert_eq!(words_action(0, 3, DEFAULT_BUDGET).unwrap().size(), 0);
    }

    #[test]
    fn budget() {
        assert_eq!(
            words_action(10, 7, 1_000_000),
            Err(Error::BudgetExceeded { size: 10_000_000, budget: 1_000_000 })
        );
        assert!(matches!(words_action(10, 100, 10), Err(Error::BudgetExceeded { .. })));
    }
}
