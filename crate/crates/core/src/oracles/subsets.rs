use super::check_budget;
use crate::burnside::CyclicAction;
use crate::error::Result;
use crate::theorems::LucasParams;

/// A point `(block, x)`: block `0` is the loose block, blocks `1..=n` rotate.
pub type Element = (u64, u64);

/// `n` rotating blocks of `height` points each plus one loose block of `loose` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockUniverse {
    pub n: u64,
    pub height: u64,
    pub loose: u64,
}

impl BlockUniverse {
    pub fn from_params(params: &LucasParams) -> Self {
        BlockUniverse {
            n: params.n,
            height: params.m_quot,
            loose: params.m_rem,
        }
    }

    pub fn size(&self) -> u64 {
        self.n * self.height + self.loose
    }

    /// All points in lexicographic order of `(block, x)`.
    pub fn elements(&self) -> Vec<Element> {
        let loose = (1..=self.loose).map(|x| (0, x));
        let blocks = (1..=self.n).flat_map(|k| (1..=self.height).map(move |x| (k, x)));
        loose.chain(blocks).collect()
    }

    /// The block rotation: `(k, x) -> (k + 1, x)` for `k < n`, `(n, x) -> (1, x)`, loose points fixed.
    pub fn rotate(&self, (k, x): Element) -> Element {
        match k {
            0 => (0, x),
            k if k == self.n => (1, x),
            k => (k + 1, x),
        }
    }

    fn position(&self, (k, x): Element) -> usize {
        if k == 0 {
            (x - 1) as usize
        } else {
            (self.loose + (k - 1) * self.height + (x - 1)) as usize
        }
    }
}

/// Pascal table `choose[v][k]` for `v <= m`, `k <= r`.
fn pascal(m: usize, r: usize) -> Vec<Vec<u128>> {
    let mut table = vec![vec![0u128; r + 1]; m + 1];
    for v in 0..=m {
        table[v][0] = 1;
        for k in 1..=r.min(v) {
            table[v][k] = table[v - 1][k - 1].saturating_add(table[v - 1][k]);
        }
    }
    table
}

/// Rank of a sorted `r`-subset of `0..m` in lexicographic order.
fn lex_rank(combo: &[usize], m: usize, choose: &[Vec<u128>]) -> usize {
    let r = combo.len();
    let mut rank = 0u128;
    let mut next = 0;
    for (i, &c) in combo.iter().enumerate() {
        for v in next..c {
            rank += choose[m - 1 - v][r - 1 - i];
        }
        next = c + 1;
    }
    rank as usize
}

fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let r = combo.len();
    let Some(i) = (0..r).rposition(|i| combo[i] < m - r + i) else {
        return false;
    };
    combo[i] += 1;
    for t in i + 1..r {
        combo[t] = combo[t - 1] + 1;
    }
    true
}

/// `Z_n` acting on the `r`-subsets of the block universe for `m = M n + m0`.
pub fn subsets_action(n: u64, m: u64, r: u64, budget: usize) -> Result<CyclicAction> {
    let params = LucasParams::new(n, m, r)?;
    let universe = BlockUniverse::from_params(&params);
    let size = crate::arith::binomial::<u128>(m, r as i64).ok();
    let size = check_budget(size, budget)?;
    if size == 0 {
        return CyclicAction::new(n, Vec::new());
    }
    let (m, r) = (m as usize, r as usize);
    let elements = universe.elements();
    let rotated: Vec<usize> = elements.iter().map(|&e| universe.position(universe.rotate(e))).collect();
    let choose = pascal(m, r);
    let mut combo: Vec<usize> = (0..r).collect();
    let mut image = Vec::with_capacity(size);
    loop {
        debug_assert_eq!(lex_rank(&combo, m, &choose), image.len());
        let mut moved: Vec<usize> = combo.iter().map(|&i| rotated[i]).collect();
        moved.sort_unstable();
        image.push(lex_rank(&moved, m, &choose));
        if !next_combination(&mut combo, m) {
            break;
        }
    }
    CyclicAction::new(n, image)
}
