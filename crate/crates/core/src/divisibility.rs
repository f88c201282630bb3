//! Deciders for n-divisibility and strong n-divisibility.
//!
//! A word is n-divisible when it factors as `W_0 W_1 ... W_n` with
//! `W_1 > W_2 > ... > W_n`, every comparison strict (a differing position,
//! not a prefix relation). Strict comparisons survive extending either side
//! to the right, so any left-to-right sequence of disjoint, strictly
//! decreasing factors can be stretched into such a tiling.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lcp::LcpTable;
use crate::word::{compare_letters, is_primitive, Letter, Word};

/// An n-division in tiling form. `cuts` holds `c_0 < c_1 < ... < c_n = |W|`;
/// `W_0 = W[..c_0]` and `W_i = W[c_{i-1}..c_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Division {
    pub cuts: Vec<usize>,
    /// For each adjacent pair `(W_i, W_{i+1})`, the 1-based position where they differ.
    pub comparison_positions: Vec<usize>,
}

impl Division {
    /// Number of decreasing factors `n`.
    pub fn order(&self) -> usize {
        self.cuts.len() - 1
    }

    pub fn prefix<'w>(&self, w: &'w [Letter]) -> &'w [Letter] {
        &w[..self.cuts[0]]
    }

    /// The factors `W_1, ..., W_n`.
    pub fn factors<'w>(&self, w: &'w [Letter]) -> Vec<&'w [Letter]> {
        self.cuts.windows(2).map(|c| &w[c[0]..c[1]]).collect()
    }

    /// Builds the tiling from disjoint, left-to-right factor spans `[start, end)`.
    /// Gaps are absorbed into the factor on their left and the last factor is
    /// stretched to the end of the word. Returns `None` when the spans are not
    /// strictly decreasing or overlap.
    pub fn from_spans(w: &[Letter], spans: &[(usize, usize)]) -> Option<Division> {
        if spans.is_empty() {
            return None;
        }
        for s in spans {
            if s.0 >= s.1 || s.1 > w.len() {
                return None;
            }
        }
        for pair in spans.windows(2) {
            if pair[0].1 > pair[1].0 {
                return None;
            }
            if !compare_letters(&w[pair[0].0..pair[0].1], &w[pair[1].0..pair[1].1]).is_greater() {
                return None;
            }
        }
        let mut cuts: Vec<usize> = spans.iter().map(|s| s.0).collect();
        cuts.push(w.len());
        let division = Division {
            comparison_positions: comparison_positions(w, &cuts)?,
            cuts,
        };
        Some(division)
    }

    /// Checks the tiling and every strict comparison.
    pub fn validate(&self, w: &[Letter]) -> std::result::Result<(), String> {
        if self.cuts.len() < 2 {
            return Err("a division needs at least one factor".into());
        }
        if *self.cuts.last().unwrap() != w.len() {
            return Err(format!(
                "last cut {} does not end the word of length {}",
                self.cuts.last().unwrap(),
                w.len()
            ));
        }
        if self.cuts.windows(2).any(|c| c[0] >= c[1]) {
            return Err(format!("cuts {:?} are not strictly increasing", self.cuts));
        }
        match comparison_positions(w, &self.cuts) {
            Some(pos) if pos == self.comparison_positions => Ok(()),
            Some(pos) => Err(format!(
                "recorded comparison positions {:?} differ from actual {:?}",
                self.comparison_positions, pos
            )),
            None => Err("factors are not strictly decreasing".into()),
        }
    }
}

fn comparison_positions(w: &[Letter], cuts: &[usize]) -> Option<Vec<usize>> {
    cuts.windows(3)
        .map(|c| match compare_letters(&w[c[0]..c[1]], &w[c[1]..c[2]]) {
            crate::word::CompareResult::Greater(p) => Some(p),
            _ => None,
        })
        .collect()
}

/// Dynamic-programming table: `best[a][b]` is the maximum number of factors in
/// a strictly decreasing tiling chain whose first factor is `W[a..b]`.
/// Stored as suffix maxima over `b` so each transition is O(1).
struct ChainTable<'a> {
    n: usize,
    lcp: LcpTable,
    word: &'a [Letter],
    /// `suffix_best[a * (n + 1) + b] = max_{b' >= b} best[a][b']`.
    suffix_best: Vec<u32>,
}

impl<'a> ChainTable<'a> {
    fn new(word: &'a [Letter]) -> Self {
        let n = word.len();
        let lcp = LcpTable::new(word);
        let stride = n + 1;
        let mut table = ChainTable {
            n,
            lcp,
            word,
            suffix_best: vec![0u32; stride * stride],
        };
        for a in (0..n).rev() {
            let mut running = 0u32;
            for b in (a + 1..=n).rev() {
                running = running.max(table.best(a, b));
                table.suffix_best[a * stride + b] = running;
            }
        }
        table
    }

    /// Smallest end `c` such that `W[a..b] > W[b..c]` strictly, if any.
    fn min_next_end(&self, a: usize, b: usize) -> Option<usize> {
        if b >= self.n {
            return None;
        }
        let common = self.lcp.lcp(a, b);
        if common >= b - a || b + common >= self.n {
            return None;
        }
        (self.word[a + common] > self.word[b + common]).then_some(b + common + 1)
    }

    fn suffix(&self, a: usize, b: usize) -> u32 {
        if b > self.n {
            0
        } else {
            self.suffix_best[a * (self.n + 1) + b]
        }
    }

    fn best(&self, a: usize, b: usize) -> u32 {
        match self.min_next_end(a, b) {
            Some(c) => 1 + self.suffix(b, c),
            None => 1,
        }
    }

    fn max_chain(&self) -> usize {
        (0..self.n).map(|a| self.suffix(a, a + 1)).max().unwrap_or(0) as usize
    }

    /// Lexicographically least cut vector of an n-division, if one exists.
    fn least_division(&self, n: usize) -> Option<Vec<usize>> {
        let need = n as u32;
        let first = (0..self.n).find(|&a| self.suffix(a, a + 1) >= need)?;
        let mut cuts = vec![first];
        if n == 1 {
            cuts.push(self.n);
            return Some(cuts);
        }
        let second = (first + 1..=self.n).find(|&b| self.best(first, b) >= need)?;
        cuts.push(second);
        // cuts holds c_0..c_i; factor i+1 starts at c_i.
        for i in 1..n - 1 {
            let (prev, cur) = (cuts[i - 1], cuts[i]);
            let lo = self.min_next_end(prev, cur)?;
            let remaining = need - i as u32;
            let next = (lo..=self.n).find(|&c| self.best(cur, c) >= remaining)?;
            cuts.push(next);
        }
        cuts.push(self.n);
        Some(cuts)
    }
}

/// Decides n-divisibility; the witness is the lexicographically least cut vector.
pub fn is_n_divisible(w: &[Letter], n: usize) -> Result<Option<Division>> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if w.len() < n {
        return Ok(None);
    }
    let table = ChainTable::new(w);
    Ok(table.least_division(n).map(|cuts| Division {
        comparison_positions: comparison_positions(w, &cuts)
            .expect("chain table produced a non-decreasing tiling"),
        cuts,
    }))
}

/// Largest n for which `w` is n-divisible; 0 for the empty word.
pub fn max_divisibility(w: &[Letter]) -> usize {
    ChainTable::new(w).max_chain()
}

/// A strong n-division: each `W_i` starts with `periods[i]^exponent`, all periods distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongDivision {
    pub division: Division,
    pub periods: Vec<Word>,
    pub exponent: usize,
}

impl StrongDivision {
    pub fn validate(&self, w: &[Letter]) -> std::result::Result<(), String> {
        self.division.validate(w)?;
        if self.periods.len() != self.division.order() {
            return Err("one period per factor is required".into());
        }
        let distinct: BTreeSet<&[Letter]> = self.periods.iter().map(|z| z.letters()).collect();
        if distinct.len() != self.periods.len() {
            return Err("periods are not pairwise distinct".into());
        }
        for (factor, z) in self.division.factors(w).iter().zip(&self.periods) {
            let power = z.pow(self.exponent);
            if !factor.starts_with(&power) {
                return Err(format!("factor does not start with {z}^{}", self.exponent));
            }
        }
        Ok(())
    }
}

/// Decides strong n-divisibility with periods from `periods` raised to `exponent`
/// (`None` means the default `2n`). The witness has the lexicographically least
/// cut vector.
pub fn is_strongly_n_divisible(
    w: &Word,
    n: usize,
    periods: &[Word],
    exponent: Option<usize>,
) -> Result<Option<StrongDivision>> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if periods.is_empty() {
        return Err(Error::Domain("the period set must be nonempty".into()));
    }
    let k = exponent.unwrap_or(2 * n);
    if k == 0 {
        return Err(Error::Domain("exponent must be positive".into()));
    }
    for z in periods {
        if !is_primitive(z) {
            return Err(Error::NotPrimitive(z.to_string()));
        }
    }
    let zs: Vec<&[Letter]> = periods
        .iter()
        .map(|z| z.letters())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if zs.len() < n {
        return Ok(None);
    }

    // Candidate starts: (position, period index) where z^k begins.
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for p in 0..w.len() {
        for (zi, z) in zs.iter().enumerate() {
            let len = z.len() * k;
            if p + len <= w.len() && w[p..p + len].chunks(z.len()).all(|c| c == *z) {
                candidates.push((p, zi));
            }
        }
    }
    let search = StrongSearch {
        w,
        lcp: LcpTable::new(w),
        zs: &zs,
        k,
        n,
        candidates: &candidates,
    };
    let mut failed = HashSet::new();
    let mut chosen = Vec::new();
    for (idx, &(p, zi)) in candidates.iter().enumerate() {
        chosen.push((p, zi));
        let lower = p + zs[zi].len() * k;
        if search.extend(idx, lower, &mut chosen, &mut failed) {
            let mut cuts: Vec<usize> = chosen.iter().map(|c| c.0).collect();
            cuts.push(w.len());
            let division = Division {
                comparison_positions: comparison_positions(w, &cuts)
                    .expect("strong search produced a non-decreasing tiling"),
                cuts,
            };
            let alphabet = w.alphabet();
            let periods = chosen
                .iter()
                .map(|&(_, zi)| Word::new(alphabet, zs[zi].to_vec()))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Some(StrongDivision {
                division,
                periods,
                exponent: k,
            }));
        }
        chosen.pop();
    }
    Ok(None)
}

struct StrongSearch<'a> {
    w: &'a [Letter],
    lcp: LcpTable,
    zs: &'a [&'a [Letter]],
    k: usize,
    n: usize,
    candidates: &'a [(usize, usize)],
}

type FailKey = (usize, usize, Vec<usize>);

impl StrongSearch<'_> {
    /// `chosen` ends with the current factor, starting at candidate `cur_idx`;
    /// the current factor must end at or after `lower`.
    fn extend(
        &self,
        cur_idx: usize,
        lower: usize,
        chosen: &mut Vec<(usize, usize)>,
        failed: &mut HashSet<FailKey>,
    ) -> bool {
        if chosen.len() == self.n {
            return lower <= self.w.len();
        }
        let mut used: Vec<usize> = chosen.iter().map(|c| c.1).collect();
        used.sort_unstable();
        let key = (cur_idx, lower, used);
        if failed.contains(&key) {
            return false;
        }
        let cur = self.candidates[cur_idx].0;
        let start = self.candidates.partition_point(|c| c.0 < lower);
        for idx in start..self.candidates.len() {
            let (next, zi) = self.candidates[idx];
            if chosen.iter().any(|c| c.1 == zi) {
                continue;
            }
            let common = self.lcp.lcp(cur, next);
            if common >= next - cur || next + common >= self.w.len() {
                continue;
            }
            if self.w[cur + common] <= self.w[next + common] {
                continue;
            }
            let next_lower = (next + self.zs[zi].len() * self.k).max(next + common + 1);
            chosen.push((next, zi));
            if self.extend(idx, next_lower, chosen, failed) {
                return true;
            }
            chosen.pop();
        }
        failed.insert(key);
        false
    }
}

/// Every primitive word of length `len` over `1..=l`, as period set for strong division.
pub fn primitive_periods(alphabet: crate::word::Alphabet, len: usize) -> Vec<Word> {
    crate::word::all_words(alphabet.size(), len)
        .filter(|z| is_primitive(z))
        .map(|z| Word::new(alphabet, z).expect("letters generated inside the alphabet"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn w3(text: &str) -> Word {
        Word::latin(Alphabet::new(3).unwrap(), text).unwrap()
    }

    #[test]
    fn cba_is_three_divisible() {
        let w = w3("cba");
        let d = is_n_divisible(&w, 3).unwrap().unwrap();
        assert_eq!(d.cuts, [0, 1, 2, 3]);
        let f: Vec<&[u32]> = d.factors(&w);
        assert_eq!(f, [&[3][..], &[2], &[1]]);
        assert_eq!(d.comparison_positions, [1, 1]);
        d.validate(&w).unwrap();
    }

    #[test]
    fn abc_is_not_two_divisible() {
        assert_eq!(is_n_divisible(&w3("abc"), 2).unwrap(), None);
    }

    #[test]
    fn every_nonempty_word_is_one_divisible() {
        let w = w3("ba");
        let d = is_n_divisible(&w, 1).unwrap().unwrap();
        assert_eq!(d.cuts, [0, 2]);
        assert!(d.prefix(&w).is_empty());
        assert_eq!(is_n_divisible(&w3(""), 1).unwrap(), None);
        assert!(is_n_divisible(&w, 0).is_err());
    }

    #[test]
    fn max_divisibility_examples() {
        assert_eq!(max_divisibility(&w3("")), 0);
        assert_eq!(max_divisibility(&w3("cba")), 3);
        assert_eq!(max_divisibility(&w3("aaaa")), 1);
    }

    #[test]
    fn gaps_are_absorbed_to_the_left() {
        // "b" at 0 and "a" at 2 with "c" in between.
        let w = w3("bca");
        let d = Division::from_spans(&w, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(d.cuts, [0, 2, 3]);
        d.validate(&w).unwrap();
        assert!(Division::from_spans(&w, &[(0, 2), (1, 3)]).is_none());
    }

    #[test]
    fn strong_division_on_decreasing_squares() {
        let w = w3("ccbbaa");
        let z = vec![w3("a"), w3("b"), w3("c")];
        let s = is_strongly_n_divisible(&w, 3, &z, Some(2)).unwrap().unwrap();
        assert_eq!(s.division.cuts, [0, 2, 4, 6]);
        assert_eq!(
            s.periods.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            ["c", "b", "a"]
        );
        s.validate(&w).unwrap();
    }

    #[test]
    fn strong_division_needs_room_and_distinct_periods() {
        let z = vec![w3("a"), w3("b"), w3("c")];
        // |W| = 5 < n * k * min|z| = 6.
        assert_eq!(
            is_strongly_n_divisible(&w3("ccbba"), 3, &z, Some(2)).unwrap(),
            None
        );
        assert_eq!(
            is_strongly_n_divisible(&w3("abc"), 2, &[w3("ab")], Some(1)).unwrap(),
            None
        );
        assert!(matches!(
            is_strongly_n_divisible(&w3("abc"), 2, &[w3("aa")], None),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn strong_division_uses_default_exponent() {
        // k = 2n = 4 for n = 2.
        let w = w3("bbbbaaaa");
        let z = vec![w3("a"), w3("b")];
        let s = is_strongly_n_divisible(&w, 2, &z, None).unwrap().unwrap();
        assert_eq!(s.exponent, 4);
        assert_eq!(s.division.cuts, [0, 4, 8]);
        assert_eq!(
            is_strongly_n_divisible(&w3("bbbaaaa"), 2, &z, None).unwrap(),
            None
        );
    }
}
