//! High powers of short periods: scanning, small and large selective
//! heights, representative sets, the forcing lemma and greedy periodic
//! decomposition.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::divisibility::Division;
use crate::error::{Error, Result};
use crate::word::{canonical_rotation, compare_letters, is_primitive, Letter, Word};

/// A factor `period^exponent` of a host word starting at `position`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerOccurrence {
    pub position: usize,
    pub period: Word,
    pub exponent: usize,
}

impl PowerOccurrence {
    pub fn len(&self) -> usize {
        self.period.len() * self.exponent
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn end(&self) -> usize {
        self.position + self.len()
    }

    /// Canonical name of the period's word-cycle.
    pub fn class(&self) -> Vec<Letter> {
        canonical_rotation(&self.period)
    }
}

/// Representatives numbered 1..=t from left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeSet {
    pub representatives: Vec<PowerOccurrence>,
}

impl RepresentativeSet {
    pub fn new(mut representatives: Vec<PowerOccurrence>) -> Self {
        representatives.sort_by_key(|r| r.position);
        Self { representatives }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Representative with 1-based index `j`.
    pub fn get(&self, j: usize) -> Option<&PowerOccurrence> {
        j.checked_sub(1).and_then(|i| self.representatives.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &PowerOccurrence)> {
        self.representatives.iter().enumerate().map(|(i, r)| (i + 1, r))
    }

    /// Checks disjointness, order, primitivity, exponent bound and class distinctness.
    pub fn validate(&self, w: &[Letter], min_exponent: usize) -> std::result::Result<(), String> {
        let mut seen = std::collections::BTreeSet::new();
        let mut last_end = 0;
        for (j, r) in self.iter() {
            if r.position < last_end {
                return Err(format!("representative {j} overlaps its left neighbour"));
            }
            if r.end() > w.len() || w[r.position..r.end()] != r.period.repeat(r.exponent)[..] {
                return Err(format!("representative {j} does not match the word"));
            }
            if !is_primitive(&r.period) {
                return Err(format!("representative {j} has a non-primitive period"));
            }
            if r.exponent <= min_exponent {
                return Err(format!("representative {j} has exponent {}", r.exponent));
            }
            if !seen.insert(r.class()) {
                return Err(format!("representative {j} repeats a cycle class"));
            }
            last_end = r.end();
        }
        Ok(())
    }
}

/// A maximal run `[start, end)` of period `t` whose length is at least `2t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Run {
    pub start: usize,
    pub end: usize,
}

/// Maximal runs of period `t` (`w[i] == w[i + t]` throughout) spanning at least `min_len` letters.
pub(crate) fn periodic_runs(w: &[Letter], t: usize, min_len: usize) -> Vec<Run> {
    let mut runs = Vec::new();
    if t == 0 || w.len() <= t {
        return runs;
    }
    let mut i = 0;
    let limit = w.len() - t;
    while i < limit {
        if w[i] != w[i + t] {
            i += 1;
            continue;
        }
        let start = i;
        while i < limit && w[i] == w[i + t] {
            i += 1;
        }
        let end = i + t;
        if end - start >= min_len {
            runs.push(Run { start, end });
        }
    }
    runs
}

/// All maximal occurrences `z^m` with `|z| = t`, `z` primitive and `m > k`,
/// left to right. Each maximal run is reported once, at its leftmost start.
pub fn scan_powers(w: &Word, t: usize, k: usize) -> Vec<PowerOccurrence> {
    periodic_runs(w, t, (k + 1) * t)
        .into_iter()
        .filter(|r| is_primitive(&w[r.start..r.start + t]))
        .map(|r| PowerOccurrence {
            position: r.start,
            period: w.factor(r.start, r.start + t),
            exponent: (r.end - r.start) / t,
        })
        .collect()
}

/// Result of the small selective height computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectiveHeight {
    pub height: usize,
    pub witness: RepresentativeSet,
    /// `false` when the exact search hit its node budget and a greedy
    /// selection was reported instead (a lower bound).
    pub exact: bool,
}

const SELECTION_BUDGET: u64 = 2_000_000;

/// Maximum number of pairwise disjoint factors `z^m` (`|z| = t`, `m > k`)
/// whose periods lie in pairwise distinct cycle classes, with a witness.
pub fn small_selective_height(w: &Word, t: usize, k: usize) -> SelectiveHeight {
    small_selective_height_with_budget(w, t, k, SELECTION_BUDGET)
}

pub fn small_selective_height_with_budget(w: &Word, t: usize, k: usize, budget: u64) -> SelectiveHeight {
    let window = (k + 1) * t;
    let mut by_class: BTreeMap<Vec<Letter>, Vec<Run>> = BTreeMap::new();
    for run in periodic_runs(w, t, window) {
        let z = &w[run.start..run.start + t];
        if is_primitive(z) {
            by_class.entry(canonical_rotation(z)).or_default().push(run);
        }
    }
    let classes: Vec<Vec<Run>> = by_class.into_values().collect();
    let mut search = Selection {
        classes: &classes,
        window,
        memo: HashMap::new(),
        nodes: 0,
        budget,
    };
    let all_free = vec![true; classes.len()];
    let (starts, exact) = match search.best(0, &all_free) {
        Some(_) => (search.reconstruct(), true),
        None => (greedy_selection(&classes, window), false),
    };
    let mut reps: Vec<PowerOccurrence> = starts
        .iter()
        .map(|&(start, _)| PowerOccurrence {
            position: start,
            period: w.factor(start, start + t),
            exponent: k + 1,
        })
        .collect();
    reps.sort_by_key(|r| r.position);
    // Stretch each window to the right inside its run, up to the next representative.
    for i in 0..reps.len() {
        let limit = reps.get(i + 1).map_or(w.len(), |r| r.position);
        let r = &reps[i];
        let mut m = r.exponent;
        while r.position + (m + 1) * t <= limit
            && w[r.position + m * t..r.position + (m + 1) * t] == r.period[..]
        {
            m += 1;
        }
        reps[i].exponent = m;
    }
    SelectiveHeight {
        height: reps.len(),
        witness: RepresentativeSet::new(reps),
        exact,
    }
}

struct Selection<'a> {
    classes: &'a [Vec<Run>],
    window: usize,
    memo: HashMap<(usize, Vec<bool>), usize>,
    nodes: u64,
    budget: u64,
}

impl Selection<'_> {
    /// Earliest window start `>= pos` for class `c`.
    fn earliest(&self, c: usize, pos: usize) -> Option<usize> {
        self.classes[c]
            .iter()
            .filter(|r| r.end >= self.window && r.end - self.window >= pos)
            .map(|r| r.start.max(pos))
            .min()
    }

    /// Live classes (still unused and with a window at or after `pos`).
    fn key(&self, pos: usize, free: &[bool]) -> Vec<bool> {
        free.iter()
            .enumerate()
            .map(|(c, &f)| f && self.earliest(c, pos).is_some())
            .collect()
    }

    fn options(&self, pos: usize, free: &[bool]) -> Vec<(usize, usize)> {
        let mut opts: Vec<(usize, usize)> = (0..self.classes.len())
            .filter(|&c| free[c])
            .filter_map(|c| self.earliest(c, pos).map(|s| (s, c)))
            .collect();
        opts.sort();
        // Some optimal solution picks first a window starting before the earliest possible end.
        if let Some(first_end) = opts.iter().map(|o| o.0 + self.window).min() {
            opts.retain(|o| o.0 < first_end);
        }
        opts
    }

    fn best(&mut self, pos: usize, free: &[bool]) -> Option<usize> {
        let key = (pos, self.key(pos, free));
        if let Some(&v) = self.memo.get(&key) {
            return Some(v);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let mut best = 0;
        let mut next = free.to_vec();
        for (s, c) in self.options(pos, free) {
            next[c] = false;
            best = best.max(1 + self.best(s + self.window, &next)?);
            next[c] = true;
        }
        self.memo.insert(key, best);
        Some(best)
    }

    fn reconstruct(&mut self) -> Vec<(usize, usize)> {
        let mut free = vec![true; self.classes.len()];
        let mut pos = 0;
        let mut out = Vec::new();
        let mut remaining = self.best(0, &free).unwrap_or(0);
        while remaining > 0 {
            let step = self.options(pos, &free).into_iter().find(|&(s, c)| {
                let mut next = free.clone();
                next[c] = false;
                self.best(s + self.window, &next) == Some(remaining - 1)
            });
            let Some((s, c)) = step else { break };
            out.push((s, c));
            free[c] = false;
            pos = s + self.window;
            remaining -= 1;
        }
        out
    }
}

fn greedy_selection(classes: &[Vec<Run>], window: usize) -> Vec<(usize, usize)> {
    let mut free = vec![true; classes.len()];
    let mut pos = 0;
    let mut out = Vec::new();
    loop {
        let pick = (0..classes.len())
            .filter(|&c| free[c])
            .filter_map(|c| {
                classes[c]
                    .iter()
                    .filter(|r| r.end >= window && r.end - window >= pos)
                    .map(|r| r.start.max(pos))
                    .min()
                    .map(|s| (s, c))
            })
            .min();
        let Some((s, c)) = pick else { break };
        out.push((s, c));
        free[c] = false;
        pos = s + window;
    }
    out
}

/// Large selective height: the longest left-to-right sequence of disjoint
/// factors `z^m` (`|z| = t`, `m > k`) in which adjacent factors are
/// prefix-related. Two powers of equal-length periods are prefix-related
/// exactly when the periods coincide, so the answer is the best count of
/// disjoint `z^{k+1}` over a single period `z`.
pub fn large_selective_height(w: &Word, t: usize, k: usize) -> (usize, Vec<PowerOccurrence>) {
    let window = (k + 1) * t;
    let mut starts: BTreeMap<&[Letter], Vec<usize>> = BTreeMap::new();
    for run in periodic_runs(w, t, window) {
        for s in run.start..=run.end - window {
            let z = &w[s..s + t];
            if is_primitive(z) {
                starts.entry(z).or_default().push(s);
            }
        }
    }
    let mut best: Vec<PowerOccurrence> = Vec::new();
    for (z, mut positions) in starts {
        positions.sort_unstable();
        let mut picked = Vec::new();
        let mut free_from = 0;
        for p in positions {
            if p >= free_from {
                picked.push(p);
                free_from = p + window;
            }
        }
        if picked.len() > best.len() {
            best = picked
                .into_iter()
                .map(|p| PowerOccurrence {
                    position: p,
                    period: w.factor(p, p + z.len()),
                    exponent: k + 1,
                })
                .collect();
        }
    }
    (best.len(), best)
}

/// Looks for the configurations that force n-divisibility and returns a
/// validated n-division built from them:
///
/// * a power of a primitive period `x` with `|x| >= n` covering `x^{2n}`:
///   `n` distinct rotations of `x`, sorted decreasingly, fit into consecutive
///   `x^2` windows;
/// * `2n - 1` disjoint powers (exponent `> n`) of periods from one word-cycle:
///   with `x` the cycle's least rotation and `v'_i` the `|x|` letters after
///   each `x`-aligned power, `n` of the `v'_i` lie on the same side of `x`,
///   and `v'_1, x v'_2, ..., x^{n-1} v'_n` (or the mirrored choice) decrease.
pub fn forcing_check(w: &Word, n: usize) -> Result<Option<Division>> {
    if n < 2 {
        return Err(Error::Domain("the forcing check needs n >= 2".into()));
    }
    let len = w.len();
    // Periods of length >= n repeated 2n times.
    for t in n..=len / (2 * n) {
        for run in periodic_runs(w, t, 2 * n * t) {
            if !is_primitive(&w[run.start..run.start + t]) {
                continue;
            }
            let mut offsets: Vec<usize> = (0..n).collect();
            let rot = |o: usize| &w[run.start + o..run.start + o + t];
            offsets.sort_by(|&a, &b| rot(b).cmp(rot(a)));
            let spans: Vec<(usize, usize)> = offsets
                .iter()
                .enumerate()
                .map(|(i, &o)| {
                    let s = run.start + 2 * i * t + o;
                    (s, s + t)
                })
                .collect();
            if let Some(d) = Division::from_spans(w, &spans) {
                return Ok(Some(d));
            }
        }
    }
    // 2n - 1 powers from one word-cycle.
    for t in 1..=len / (n + 1) {
        let mut blocks: BTreeMap<Vec<Letter>, Vec<(usize, usize)>> = BTreeMap::new();
        for run in periodic_runs(w, t, (n + 1) * t) {
            let z = &w[run.start..run.start + t];
            if !is_primitive(z) {
                continue;
            }
            let x = canonical_rotation(z);
            let q = (run.start..run.start + t)
                .find(|&q| w[q..q + t] == x[..])
                .expect("a run of period t contains every rotation of its period");
            let p = (run.end - q) / t;
            if q + (p + 1) * t <= len {
                blocks.entry(x).or_default().push((q, p));
            }
        }
        for (x, list) in blocks {
            // Keep blocks whose x^p v' spans are pairwise disjoint.
            let mut chosen: Vec<(usize, usize)> = Vec::new();
            for (q, p) in list {
                if chosen.last().is_none_or(|&(q0, p0)| q0 + (p0 + 1) * t <= q) {
                    chosen.push((q, p));
                }
            }
            if chosen.len() < 2 * n - 1 {
                continue;
            }
            chosen.truncate(2 * n - 1);
            let v = |(q, p): (usize, usize)| &w[q + p * t..q + (p + 1) * t];
            let greater: Vec<(usize, usize)> = chosen
                .iter()
                .copied()
                .filter(|&b| compare_letters(v(b), &x).is_greater())
                .take(n)
                .collect();
            let less: Vec<(usize, usize)> = chosen
                .iter()
                .copied()
                .filter(|&b| compare_letters(v(b), &x).is_less())
                .take(n)
                .collect();
            let spans: Vec<(usize, usize)> = if greater.len() == n {
                // x^{j-1} v'_j
                greater
                    .iter()
                    .enumerate()
                    .map(|(j, &(q, p))| (q + (p - j) * t, q + (p + 1) * t))
                    .collect()
            } else if less.len() == n {
                // x^{n-j} v'_j
                less.iter()
                    .enumerate()
                    .map(|(j, &(q, p))| (q + (p - (n - 1 - j)) * t, q + (p + 1) * t))
                    .collect()
            } else {
                continue;
            };
            if let Some(d) = Division::from_spans(w, &spans) {
                return Ok(Some(d));
            }
        }
    }
    Ok(None)
}

/// One piece of a periodic decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Segment {
    Block(PowerOccurrence),
    Gap { position: usize, factor: Word },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShirshovDecomposition {
    pub segments: Vec<Segment>,
}

impl ShirshovDecomposition {
    pub fn blocks(&self) -> impl Iterator<Item = &PowerOccurrence> {
        self.segments.iter().filter_map(|s| match s {
            Segment::Block(b) => Some(b),
            Segment::Gap { .. } => None,
        })
    }

    pub fn gaps(&self) -> impl Iterator<Item = &Word> {
        self.segments.iter().filter_map(|s| match s {
            Segment::Gap { factor, .. } => Some(factor),
            Segment::Block(_) => None,
        })
    }

    pub fn block_count(&self) -> usize {
        self.blocks().count()
    }

    /// Concatenation of all segments.
    pub fn reassemble(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for s in &self.segments {
            match s {
                Segment::Block(b) => out.extend(b.period.repeat(b.exponent)),
                Segment::Gap { factor, .. } => out.extend_from_slice(factor),
            }
        }
        out
    }
}

/// Greedy left-to-right split into periodic blocks (`|z| < n`, exponent `> k`)
/// and the gaps between them. At each position the block covering the most
/// letters wins; ties go to the shorter period.
pub fn shirshov_decompose(w: &Word, n: usize, k: usize) -> Result<ShirshovDecomposition> {
    if n < 2 {
        return Err(Error::Domain("decomposition needs n >= 2".into()));
    }
    let len = w.len();
    let mut segments = Vec::new();
    let mut gap_start = 0;
    let mut p = 0;
    while p < len {
        let mut best: Option<(usize, usize)> = None; // (covered, t)
        for t in 1..n {
            if p + t > len || !is_primitive(&w[p..p + t]) {
                continue;
            }
            let mut reach = p + t;
            while reach < len && w[reach] == w[reach - t] {
                reach += 1;
            }
            let m = (reach - p) / t;
            if m > k && best.is_none_or(|(covered, _)| m * t > covered) {
                best = Some((m * t, t));
            }
        }
        match best {
            Some((covered, t)) => {
                if gap_start < p {
                    segments.push(Segment::Gap {
                        position: gap_start,
                        factor: w.factor(gap_start, p),
                    });
                }
                segments.push(Segment::Block(PowerOccurrence {
                    position: p,
                    period: w.factor(p, p + t),
                    exponent: covered / t,
                }));
                p += covered;
                gap_start = p;
            }
            None => p += 1,
        }
    }
    if gap_start < len {
        segments.push(Segment::Gap {
            position: gap_start,
            factor: w.factor(gap_start, len),
        });
    }
    Ok(ShirshovDecomposition { segments })
}
