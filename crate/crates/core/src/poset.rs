//! Partial orders on coordinate positions and level structures.
//!
//! Positions are 1-based in every public signature, matching how codes and
//! posets are written down; internally they are bit indices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Elem;

/// Largest supported poset.
pub const MAX_POSET_SIZE: usize = 64;

/// The JSON poset schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PosetKind {
    Antichain {
        n: usize,
    },
    Chain {
        n: usize,
    },
    Leveled {
        levels: Vec<usize>,
    },
    /// `covers` holds `[lower, upper]` pairs, 1-based.
    Cover {
        n: usize,
        covers: Vec<[usize; 2]>,
    },
}

/// A finite partial order on positions `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `down[i]` has bit `j` set iff `j ≤ i`.
    down: Vec<u64>,
}

impl Poset {
    pub fn new(kind: &PosetKind) -> Result<Self> {
        match kind {
            PosetKind::Antichain { n } => Self::from_covers(*n, &[]),
            PosetKind::Chain { n } => {
                let covers: Vec<[usize; 2]> = (1..*n).map(|i| [i, i + 1]).collect();
                Self::from_covers(*n, &covers)
            }
            PosetKind::Leveled { levels } => Self::leveled(levels),
            PosetKind::Cover { n, covers } => Self::from_covers(*n, covers),
        }
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Self::new(&PosetKind::Antichain { n })
    }

    pub fn chain(n: usize) -> Result<Self> {
        Self::new(&PosetKind::Chain { n })
    }

    /// Hierarchical poset: every position of level `i` lies below every
    /// position of level `j > i`; levels are contiguous blocks.
    pub fn leveled(sizes: &[usize]) -> Result<Self> {
        let levels = LevelStructure::new(sizes.to_vec())?;
        let n = levels.total();
        check_size(n)?;
        let mut down = vec![0u64; n];
        let mut below = 0u64;
        for range in levels.ranges() {
            let block: u64 = range.clone().fold(0, |m, i| m | 1 << i);
            for i in range {
                down[i] = below | 1 << i;
            }
            below |= block;
        }
        Ok(Poset { n, down })
    }

    /// Transitive closure of `[lower, upper]` cover pairs.
    pub fn from_covers(n: usize, covers: &[[usize; 2]]) -> Result<Self> {
        check_size(n)?;
        let mut down: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &[lo, hi] in covers {
            if lo == 0 || hi == 0 || lo > n || hi > n {
                return Err(Error::input(format!(
                    "cover pair [{lo}, {hi}] out of range 1..={n}"
                )));
            }
            if lo == hi {
                return Err(Error::input(format!("cover pair [{lo}, {hi}] is a loop")));
            }
            down[hi - 1] |= 1 << (lo - 1);
        }
        // Warshall on bitsets
        for k in 0..n {
            for i in 0..n {
                if down[i] >> k & 1 == 1 {
                    down[i] |= down[k];
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && down[i] >> j & 1 == 1 && down[j] >> i & 1 == 1 {
                    return Err(Error::input(format!(
                        "cover pairs contain a cycle through {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Poset { n, down })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `i ≤ j` for 1-based positions.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.down[j - 1] >> (i - 1) & 1 == 1
    }

    /// The Hasse diagram as sorted `[lower, upper]` pairs.
    pub fn covers(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        for hi in 0..self.n {
            let strict = self.down[hi] & !(1 << hi);
            for lo in 0..self.n {
                if strict >> lo & 1 == 0 {
                    continue;
                }
                // lo ⋖ hi unless some m sits strictly between
                let between = (0..self.n)
                    .any(|m| m != lo && strict >> m & 1 == 1 && self.down[m] >> lo & 1 == 1);
                if !between {
                    out.push([lo + 1, hi + 1]);
                }
            }
        }
        out.sort();
        out
    }

    /// Smallest ideal (down-set) containing `positions`.
    pub fn ideal_closure(&self, positions: &[usize]) -> Result<Vec<usize>> {
        let mut mask = 0u64;
        for &p in positions {
            if p == 0 || p > self.n {
                return Err(Error::input(format!(
                    "position {p} out of range 1..={}",
                    self.n
                )));
            }
            mask |= self.down[p - 1];
        }
        Ok(bits(mask))
    }

    fn closure_mask(&self, support: u64) -> u64 {
        (0..self.n)
            .filter(|&i| support >> i & 1 == 1)
            .fold(0, |m, i| m | self.down[i])
    }

    /// `w_P(v) = |⟨supp v⟩|`.
    pub fn weight(&self, v: &[Elem]) -> Result<usize> {
        if v.len() != self.n {
            return Err(Error::input(format!(
                "word length {} does not match poset size {}",
                v.len(),
                self.n
            )));
        }
        Ok(self.weight_unchecked(v))
    }

    pub(crate) fn weight_unchecked(&self, v: &[Elem]) -> usize {
        let support = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        self.closure_mask(support).count_ones() as usize
    }

    /// Same positions, order reversed.
    pub fn dual(&self) -> Poset {
        let mut down = vec![0u64; self.n];
        for (j, &d) in self.down.iter().enumerate() {
            for (i, slot) in down.iter_mut().enumerate() {
                if d >> i & 1 == 1 {
                    *slot |= 1 << j;
                }
            }
        }
        Poset { n: self.n, down }
    }

    /// Positions grouped by height: level 1 holds the minimal elements,
    /// level `k` the elements whose longest chain below has `k - 1` others.
    pub fn height_levels(&self) -> Vec<Vec<usize>> {
        let mut height = vec![0usize; self.n];
        // increasing down-set size is a linear extension
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| self.down[i].count_ones());
        for &i in &order {
            height[i] = (0..self.n)
                .filter(|&j| j != i && self.down[i] >> j & 1 == 1)
                .map(|j| height[j] + 1)
                .max()
                .unwrap_or(0);
        }
        let levels = height.iter().max().map_or(0, |h| h + 1);
        let mut out = vec![Vec::new(); levels];
        for (i, h) in height.iter().enumerate() {
            out[*h].push(i + 1);
        }
        out
    }

    /// Level sizes of a hierarchical poset whose levels are contiguous
    /// blocks of positions.
    pub fn level_structure(&self) -> Result<LevelStructure> {
        let levels = self.height_levels();
        for (a, lower) in levels.iter().enumerate() {
            for upper in &levels[a + 1..] {
                for &i in lower {
                    for &j in upper {
                        if !self.le(i, j) {
                            return Err(Error::input(format!(
                                "poset is not hierarchical: position {i} (level {}) is not below {j}",
                                a + 1
                            )));
                        }
                    }
                }
            }
        }
        let mut next = 1;
        for (a, level) in levels.iter().enumerate() {
            if level.first() != Some(&next) || level.last() != Some(&(next + level.len() - 1)) {
                return Err(Error::input(format!(
                    "level {} occupies positions {level:?}, not a contiguous block starting at {next}",
                    a + 1
                )));
            }
            next += level.len();
        }
        LevelStructure::new(levels.iter().map(Vec::len).collect())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::input("poset must have at least one position"))
    } else if n > MAX_POSET_SIZE {
        Err(Error::input(format!(
            "poset size {n} exceeds {MAX_POSET_SIZE}"
        )))
    } else {
        Ok(())
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// Ordered partition of `1..=N` into contiguous levels of sizes
/// `n_1, …, n_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LevelStructure {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl LevelStructure {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::input("level structure needs at least one level"));
        }
        if sizes.contains(&0) {
            return Err(Error::input(format!(
                "level sizes must be positive: {sizes:?}"
            )));
        }
        let mut offsets = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for s in &sizes {
            acc += s;
            offsets.push(acc);
        }
        Ok(LevelStructure { sizes, offsets })
    }

    /// One level per position.
    pub fn singletons(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn levels(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// 0-based coordinate ranges of each level.
    pub fn ranges(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.offsets.windows(2).map(|w| w[0]..w[1])
    }

    /// Level (1-based) of a 1-based position.
    pub fn level_of(&self, position: usize) -> Option<usize> {
        if position == 0 || position > self.total() {
            return None;
        }
        Some(self.offsets.partition_point(|&o| o < position))
    }

    pub fn check_length(&self, n: usize) -> Result<()> {
        if n == self.total() {
            Ok(())
        } else {
            Err(Error::input(format!(
                "word length {n} does not match level sizes {:?} (total {})",
                self.sizes,
                self.total()
            )))
        }
    }

    /// Contiguous slices `v^1, …, v^s`.
    pub fn split<'a>(&self, v: &'a [Elem]) -> Result<Vec<&'a [Elem]>> {
        self.check_length(v.len())?;
        Ok(self.ranges().map(|r| &v[r]).collect())
    }
}

impl TryFrom<Vec<usize>> for LevelStructure {
    type Error = Error;
    fn try_from(sizes: Vec<usize>) -> Result<Self> {
        Self::new(sizes)
    }
}

impl From<LevelStructure> for Vec<usize> {
    fn from(l: LevelStructure) -> Self {
        l.sizes
    }
}
