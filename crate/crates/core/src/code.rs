//! Linear codes over a [`RingSpec`], stored as explicit codeword sets.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{check_cap, saturating_pow, Error, Result, DEFAULT_CAP};
use crate::ring::{Elem, RingSpec};

/// A word of `R^N`, as element indices.
pub type Word = Vec<Elem>;

/// `Σ_j u_j v_j` in the ring.
pub fn inner_product(ring: &RingSpec, u: &[Elem], v: &[Elem]) -> Result<Elem> {
    if u.len() != v.len() {
        return Err(Error::input(format!(
            "inner product of words of length {} and {}",
            u.len(),
            v.len()
        )));
    }
    Ok(dot(ring, u, v))
}

#[inline]
pub(crate) fn dot(ring: &RingSpec, u: &[Elem], v: &[Elem]) -> Elem {
    u.iter()
        .zip(v)
        .fold(0, |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)))
}

/// Iterates `R^n` in lexicographic order of element indices.
pub(crate) struct AmbientWords {
    q: Elem,
    next: Option<Word>,
}

impl AmbientWords {
    pub(crate) fn new(q: usize, n: usize) -> Self {
        AmbientWords {
            q: q as Elem,
            next: Some(vec![0; n]),
        }
    }
}

impl Iterator for AmbientWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.q {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// An R-submodule of `R^N`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ring: Arc<RingSpec>,
    n: usize,
    generators: Vec<Word>,
    codewords: Vec<Word>,
}

impl PartialEq for LinearCode {
    /// Codes are equal when they are the same submodule of the same space;
    /// generator lists are not compared.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.codewords == other.codewords
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// The submodule generated by `generators`, with the default cap.
    pub fn span(ring: Arc<RingSpec>, n: usize, generators: Vec<Word>) -> Result<Self> {
        Self::span_with_cap(ring, n, generators, DEFAULT_CAP)
    }

    /// `{ Σ r_i g_i }`, built one generator at a time as
    /// `span(g_1..g_i) = span(g_1..g_{i-1}) + R·g_i`. The cap bounds the
    /// number of codewords held at any point.
    pub fn span_with_cap(
        ring: Arc<RingSpec>,
        n: usize,
        generators: Vec<Word>,
        cap: u64,
    ) -> Result<Self> {
        for g in &generators {
            check_word(&ring, n, g)?;
        }
        let mut set: HashSet<Word> = HashSet::new();
        let mut list = vec![vec![0; n]];
        set.insert(vec![0; n]);
        for g in &generators {
            extend_span(&ring, &mut set, &mut list, g, cap)?;
        }
        list.sort();
        Ok(LinearCode {
            ring,
            n,
            generators,
            codewords: list,
        })
    }

    /// Wraps an explicit word set, checking that it is a submodule, and
    /// picks a small generating set greedily.
    pub fn from_codewords(ring: Arc<RingSpec>, n: usize, mut words: Vec<Word>) -> Result<Self> {
        for w in &words {
            check_word(&ring, n, w)?;
        }
        words.sort();
        words.dedup();
        let code = Self::with_greedy_generators(ring, n, words)?;
        if !code.is_submodule() {
            return Err(Error::input(
                "word set is not closed under R-linear combinations",
            ));
        }
        Ok(code)
    }

    fn with_greedy_generators(ring: Arc<RingSpec>, n: usize, codewords: Vec<Word>) -> Result<Self> {
        let mut set: HashSet<Word> = HashSet::new();
        let mut list = vec![vec![0; n]];
        set.insert(vec![0; n]);
        let mut generators = Vec::new();
        for w in &codewords {
            if !set.contains(w) {
                extend_span(&ring, &mut set, &mut list, w, u64::MAX)?;
                generators.push(w.clone());
            }
        }
        if list.len() != codewords.len() {
            return Err(Error::input(
                "word set is not closed under R-linear combinations",
            ));
        }
        Ok(LinearCode {
            ring,
            n,
            generators,
            codewords,
        })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// Code length `N`.
    pub fn length(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    /// All codewords in lexicographic order.
    pub fn codewords(&self) -> &[Word] {
        &self.codewords
    }

    /// `|C|`.
    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn contains(&self, w: &[Elem]) -> bool {
        self.codewords
            .binary_search_by(|c| c.as_slice().cmp(w))
            .is_ok()
    }

    /// Closure under addition and scalar multiplication, checked on every
    /// codeword.
    pub fn is_submodule(&self) -> bool {
        let r = &self.ring;
        self.contains(&vec![0; self.n])
            && self.codewords.iter().all(|u| {
                r.elements().all(|s| {
                    let su: Word = u.iter().map(|&x| r.mul(s, x)).collect();
                    self.contains(&su)
                }) && self.codewords.iter().all(|v| {
                    let sum: Word = u.iter().zip(v).map(|(&a, &b)| r.add(a, b)).collect();
                    self.contains(&sum)
                })
            })
    }

    /// `C⊥` with the default cap.
    pub fn dual(&self) -> Result<Self> {
        self.dual_with_cap(DEFAULT_CAP)
    }

    /// All `v ∈ R^N` orthogonal to every generator, found by scanning the
    /// whole ambient space.
    pub fn dual_with_cap(&self, cap: u64) -> Result<Self> {
        let q = self.ring.size();
        check_cap(saturating_pow(q, self.n), cap)?;
        let words: Vec<Word> = AmbientWords::new(q, self.n)
            .filter(|v| self.generators.iter().all(|g| dot(&self.ring, g, v) == 0))
            .collect();
        Self::with_greedy_generators(self.ring.clone(), self.n, words)
    }
}

fn check_word(ring: &RingSpec, n: usize, w: &[Elem]) -> Result<()> {
    if w.len() != n {
        return Err(Error::input(format!(
            "word {w:?} has length {}, expected {n}",
            w.len()
        )));
    }
    if let Some(&bad) = w.iter().find(|&&x| x as usize >= ring.size()) {
        return Err(Error::input(format!(
            "element {bad} out of range for a ring of size {}",
            ring.size()
        )));
    }
    Ok(())
}

fn extend_span(
    ring: &RingSpec,
    set: &mut HashSet<Word>,
    list: &mut Vec<Word>,
    g: &[Elem],
    cap: u64,
) -> Result<()> {
    let multiples: Vec<Word> = ring
        .elements()
        .skip(1)
        .map(|r| g.iter().map(|&x| ring.mul(r, x)).collect())
        .collect();
    let base = list.len();
    for i in 0..base {
        for m in &multiples {
            let w: Word = list[i]
                .iter()
                .zip(m)
                .map(|(&a, &b)| ring.add(a, b))
                .collect();
            if set.insert(w.clone()) {
                list.push(w);
                check_cap(list.len() as u128, cap)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingKind;

    fn f2() -> Arc<RingSpec> {
        Arc::new(RingSpec::new(RingKind::Zm { m: 2 }).unwrap())
    }

    fn z4() -> Arc<RingSpec> {
        Arc::new(RingSpec::new(RingKind::Zm { m: 4 }).unwrap())
    }

    #[test]
    fn span_example() {
        let c = LinearCode::span(f2(), 4, vec![vec![1, 0, 1, 0], vec![0, 1, 1, 1]]).unwrap();
        assert_eq!(
            c.codewords(),
            &[
                vec![0, 0, 0, 0],
                vec![0, 1, 1, 1],
                vec![1, 0, 1, 0],
                vec![1, 1, 0, 1]
            ]
        );
        assert!(c.is_submodule());
    }

    #[test]
    fn span_edge_cases() {
        let c = LinearCode::span(z4(), 1, vec![vec![2]]).unwrap();
        assert_eq!(c.codewords(), &[vec![0], vec![2]]);
        let zero = LinearCode::span(z4(), 3, vec![]).unwrap();
        assert_eq!(zero.codewords(), &[vec![0, 0, 0]]);
        assert!(LinearCode::span(z4(), 2, vec![vec![1]]).is_err());
        assert!(LinearCode::span(z4(), 1, vec![vec![4]]).is_err());
        let capped =
            LinearCode::span_with_cap(f2(), 8, vec![vec![1; 8], vec![0, 1, 0, 1, 0, 1, 0, 1]], 3);
        assert!(matches!(capped, Err(Error::Resource { .. })));
    }

    #[test]
    fn inner_products() {
        let r = f2();
        assert_eq!(inner_product(&r, &[1, 0, 1, 0], &[1, 0, 1, 1]).unwrap(), 0);
        assert_eq!(inner_product(&r, &[1, 0, 1, 0], &[0, 1, 0, 1]).unwrap(), 0);
        assert_eq!(inner_product(&r, &[1, 1], &[1, 0]).unwrap(), 1);
        assert_eq!(inner_product(&z4(), &[1, 2], &[2, 1]).unwrap(), 0);
        assert!(inner_product(&r, &[1], &[1, 0]).is_err());
    }

    #[test]
    fn duals() {
        let c1 = LinearCode::span(f2(), 3, vec![vec![0, 0, 1]]).unwrap();
        assert_eq!(
            c1.dual().unwrap().codewords(),
            &[vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]]
        );
        let c = LinearCode::span(f2(), 4, vec![vec![1, 0, 1, 0], vec![0, 1, 1, 1]]).unwrap();
        let d = c.dual().unwrap();
        assert_eq!(
            d.codewords(),
            &[
                vec![0, 0, 0, 0],
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 1],
                vec![1, 1, 1, 0]
            ]
        );
        assert_eq!(d.dual().unwrap(), c);
        let zero = LinearCode::span(z4(), 2, vec![]).unwrap();
        assert_eq!(zero.dual().unwrap().size(), 16);
        assert!(matches!(
            zero.dual_with_cap(15),
            Err(Error::Resource {
                needed: 16,
                cap: 15
            })
        ));
    }

    #[test]
    fn from_codewords_checks_closure() {
        let ok = LinearCode::from_codewords(z4(), 1, vec![vec![2], vec![0]]).unwrap();
        assert_eq!(ok.generators(), &[vec![2]]);
        assert!(LinearCode::from_codewords(z4(), 1, vec![vec![0], vec![1]]).is_err());
    }

    #[test]
    fn ambient_iteration_is_lexicographic() {
        let words: Vec<Word> = AmbientWords::new(3, 2).collect();
        assert_eq!(words.len(), 9);
        assert!(words.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(AmbientWords::new(2, 0).count(), 1);
    }
}
