use num_rational::Ratio;

/// A tuple of `d` nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(!parts.is_empty(), "a composition has at least one part");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn d(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The mean part size `(1/d) * sum(parts)`.
    pub fn length(&self) -> Ratio<u64> {
        Ratio::new(self.total(), self.d() as u64)
    }
}

/// All compositions of `total` into `d` parts, each part at most `max_part`,
/// in lexicographic order of the part tuple.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
    max_part: u64,
}

impl Compositions {
    pub fn new(total: u64, d: usize) -> Self {
        Self::bounded(total, d, u64::MAX)
    }

    pub fn bounded(total: u64, d: usize, max_part: u64) -> Self {
        assert!(d > 0, "a composition has at least one part");
        let mut parts = vec![0; d];
        let current = fill_right(&mut parts, 0, total, max_part).then_some(parts);
        Compositions { current, max_part }
    }
}

/// Lexicographically smallest way to place `amount` into `parts[from..]`:
/// pack it into the rightmost slots. Returns false if it does not fit.
fn fill_right(parts: &mut [u64], from: usize, mut amount: u64, max_part: u64) -> bool {
    for slot in parts[from..].iter_mut().rev() {
        let take = amount.min(max_part);
        *slot = take;
        amount -= take;
    }
    amount == 0
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.as_mut()?;
        let out = Composition { parts: parts.clone() };
        let d = parts.len();
        let mut suffix = 0;
        let mut advanced = false;
        for i in (0..d.saturating_sub(1)).rev() {
            suffix += parts[i + 1];
            if suffix > 0 && parts[i] < self.max_part {
                parts[i] += 1;
                let placed = fill_right(parts, i + 1, suffix - 1, self.max_part);
                debug_assert!(placed);
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(total: u64, d: usize, max_part: u64) -> Vec<Vec<u64>> {
        let top = total.min(max_part);
        let mut all = vec![vec![]];
        for _ in 0..d {
            all = all
                .into_iter()
                .flat_map(|prefix: Vec<u64>| {
                    (0..=top).map(move |a| {
                        let mut p = prefix.clone();
                        p.push(a);
                        p
                    })
                })
                .collect();
        }
        all.retain(|p| p.iter().sum::<u64>() == total);
        all.sort();
        all
    }

    #[test]
    fn small_listing() {
        let got: Vec<Vec<u64>> = Compositions::new(2, 2).map(|c| c.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let single: Vec<_> = Compositions::new(5, 1).collect();
        assert_eq!(single, vec![Composition::new(vec![5])]);
        assert_eq!(Compositions::new(0, 3).count(), 1);
    }

    #[test]
    fn matches_filtered_product() {
        for d in 1..=4 {
            for total in 0..=7 {
                for max_part in [0, 1, 2, 3, u64::MAX] {
                    let got: Vec<Vec<u64>> = Compositions::bounded(total, d, max_part)
                        .map(|c| c.parts().to_vec())
                        .collect();
                    assert_eq!(got, brute(total, d, max_part), "d={d} total={total} max={max_part}");
                }
            }
        }
    }

    #[test]
    fn infeasible_bound_is_empty() {
        assert_eq!(Compositions::bounded(7, 3, 2).count(), 0);
    }

    #[test]
    fn length_is_mean() {
        let c = Composition::new(vec![1, 0, 2, 3]);
        assert_eq!(c.length(), Ratio::new(3, 2));
        assert_eq!(c.d(), 4);
    }
}
