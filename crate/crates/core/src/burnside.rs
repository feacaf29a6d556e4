//! Actions of the cyclic group `Z_n` on finite indexed sets.
//!
//! An action is stored extensionally as the permutation the generator `1`
//! induces on `0..size`. Every other element `g` acts by the `g`-th power of
//! that permutation. Orbits can be counted two ways, by direct traversal and
//! by the divisor-indexed fixed-point average, and the two must agree.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::{divisors, euler_phi, gcd};
use crate::error::{Error, Result};

/// Default cap on the number of elements an oracle action may materialize.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicAction {
    n: u64,
    image: Vec<usize>,
}

/// The points fixed by one group element, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSet {
    pub g: u64,
    pub indices: Vec<usize>,
}

impl FixedSet {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// One term of the orbit formula: `phi(n/d)` elements each fixing `fixed` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorFixedCount {
    pub divisor: u64,
    pub multiplicity: u64,
    pub fixed: u64,
}

pub fn make_action(n: u64, generator_image: Vec<usize>) -> Result<CyclicAction> {
    CyclicAction::new(n, generator_image)
}

impl CyclicAction {
    /// Validates that `generator_image` is a permutation whose order divides `n`.
    pub fn new(n: u64, generator_image: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive { what: "n" });
        }
        let size = generator_image.len();
        let mut seen = vec![false; size];
        for &j in &generator_image {
            if j >= size || seen[j] {
                return Err(Error::NotPermutation { size });
            }
            seen[j] = true;
        }
        let action = CyclicAction { n, image: generator_image };
        let mut order = 1u64;
        let mut divides = true;
        for len in action.cycle_lengths() {
            let len = len as u64;
            divides &= n % len == 0;
            order = order
                .checked_div(gcd(order, len))
                .and_then(|o| o.checked_mul(len))
                .unwrap_or(u64::MAX);
        }
        if !divides {
            return Err(Error::NotCyclicAction { n, order });
        }
        Ok(action)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn generator_image(&self) -> &[usize] {
        &self.image
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        let mut lengths = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// The permutation induced by `g`, by square-and-multiply on the generator table.
    pub fn power(&self, g: u64) -> Vec<usize> {
        let mut result: Vec<usize> = (0..self.size()).collect();
        let mut base = self.image.clone();
        let mut e = g;
        while e > 0 {
            if e & 1 == 1 {
                result = result.iter().map(|&x| base[x]).collect();
            }
            base = base.iter().map(|&x| base[x]).collect();
            e >>= 1;
        }
        result
    }

    pub fn fixed_points(&self, g: u64) -> Result<FixedSet> {
        if g >= self.n {
            return Err(Error::ElementOutOfRange { g, n: self.n });
        }
        let table = self.power(g);
        let indices = (0..self.size()).filter(|&i| table[i] == i).collect();
        Ok(FixedSet { g, indices })
    }

    fn fixed_count_by_divisor(&self, d: u64) -> u64 {
        // the element d of Z_n is d mod n; d = n is the identity
        let table = self.power(d % self.n);
        table.iter().enumerate().filter(|&(i, &j)| i == j).count() as u64
    }

    /// Orbit count by marking each orbit once; does not use fixed points.
    pub fn orbit_count_direct(&self) -> u64 {
        self.orbit_sizes().len() as u64
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.cycle_lengths()
    }

    /// `(divisor, phi(n/d), |X^d|)` for every divisor `d` of `n`.
    pub fn divisor_fixed_counts(&self) -> Vec<DivisorFixedCount> {
        divisors(self.n)
            .expect("n is positive")
            .iter()
            .map(|d| DivisorFixedCount {
                divisor: d,
                multiplicity: euler_phi(self.n / d).expect("n/d is positive"),
                fixed: self.fixed_count_by_divisor(d),
            })
            .collect()
    }

    /// `(1/n) * sum_{d | n} phi(n/d) |X^d|`, failing if the division is not exact.
    pub fn orbit_count_burnside(&self) -> Result<u64> {
        let total: u128 = self
            .divisor_fixed_counts()
            .iter()
            .map(|t| t.multiplicity as u128 * t.fixed as u128)
            .sum();
        let n = self.n as u128;
        if total % n != 0 {
            return Err(Error::Inconsistent(format!(
                "fixed-point total {total} is not divisible by n = {n}"
            )));
        }
        u64::try_from(total / n).map_err(|_| Error::Overflow)
    }

    /// `sum_{g=0}^{n-1} |X^g|`, one element at a time.
    pub fn fixed_point_total(&self) -> u128 {
        (0..self.n)
            .map(|g| self.fixed_points(g).expect("g < n").len() as u128)
            .sum()
    }

    /// True iff every `g` fixes exactly the points fixed by `gcd(g, n)`.
    pub fn gcd_collapse_check(&self) -> bool {
        (0..self.n).all(|g| {
            let d = gcd(g, self.n) % self.n;
            self.fixed_points(g).expect("g < n").indices
                == self.fixed_points(d).expect("d < n").indices
        })
    }

    /// A random action of `Z_n` on `size` points: the generator is a random
    /// relabelling of a product of disjoint cycles whose lengths divide `n`.
    pub fn random<R: Rng + ?Sized>(n: u64, size: usize, rng: &mut R) -> Result<Self> {
        let lengths: Vec<usize> = divisors(n)?
            .iter()
            .filter_map(|d| usize::try_from(d).ok())
            .collect();
        let mut labels: Vec<usize> = (0..size).collect();
        labels.shuffle(rng);
        let mut image = vec![0; size];
        let mut start = 0;
        while start < size {
            let room = size - start;
            let fitting: Vec<usize> = lengths.iter().copied().filter(|&l| l <= room).collect();
            let len = fitting[rng.gen_range(0..fitting.len())];
            let cycle = &labels[start..start + len];
            for (k, &x) in cycle.iter().enumerate() {
                image[x] = cycle[(k + 1) % len];
            }
            start += len;
        }
        CyclicAction::new(n, image)
    }

    /// Text dump: a header `n=<n> size=<size>` then one `i -> j` line per index.
    pub fn to_table(&self) -> String {
        let mut out = format!("n={} size={}\n", self.n, self.size());
        for (i, j) in self.image.iter().enumerate() {
            writeln!(out, "{i} -> {j}").expect("writing to a String");
        }
        out
    }

    pub fn parse_table(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::MalformedTable(msg);
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input".into()))?;
        let (n, size) = parse_header(header).ok_or_else(|| bad(format!("bad header {header:?}")))?;
        let mut image = vec![None; size];
        for line in lines {
            let (i, j) = line
                .split_once("->")
                .and_then(|(i, j)| Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?)))
                .ok_or_else(|| bad(format!("bad mapping line {line:?}")))?;
            let slot = image.get_mut(i).ok_or_else(|| bad(format!("index {i} out of range")))?;
            if slot.replace(j).is_some() {
                return Err(bad(format!("index {i} mapped twice")));
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, j)| j.ok_or_else(|| bad(format!("index {i} has no mapping"))))
            .collect::<Result<Vec<_>>>()?;
        CyclicAction::new(n, image)
    }
}

fn parse_header(line: &str) -> Option<(u64, usize)> {
    let mut parts = line.split_whitespace();
    let n = parts.next()?.strip_prefix("n=")?.parse().ok()?;
    let size = parts.next()?.strip_prefix("size=")?.parse().ok()?;
    parts.next().is_none().then_some((n, size))
}
