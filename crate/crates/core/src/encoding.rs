//! Numbered families of pairwise non-conjugate primitive cycles, their
//! antichains, the pair and padding encodings, and a search for large
//! good families.

use serde::{Deserialize, Serialize};

use crate::dilworth::{max_antichain, min_chain_cover, ChainColoring, OccurrencePoset, PosetElement};
use crate::error::{Error, Result};
use crate::word::{
    canonical_rotation, is_primitive, primitive_necklaces, rotate, Alphabet, Letter, WordFormat,
};

pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;

/// Cycles of common length `t` over `l` letters, numbered from 1 in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FamilyJson", try_from = "FamilyJson")]
pub struct CycleClassFamily {
    t: usize,
    l: u32,
    cycles: Vec<Vec<Letter>>,
}

impl CycleClassFamily {
    pub fn new(t: usize, l: u32, cycles: Vec<Vec<Letter>>) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidFamily("period length must be positive".into()));
        }
        if l == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let mut classes = Vec::with_capacity(cycles.len());
        for (i, c) in cycles.iter().enumerate() {
            if c.len() != t {
                return Err(Error::InvalidFamily(format!(
                    "cycle {} has length {}, expected {t}",
                    i + 1,
                    c.len()
                )));
            }
            if let Some(&a) = c.iter().find(|&&a| a == 0 || a > l) {
                return Err(Error::LetterOutOfRange { letter: a, size: l });
            }
            if !is_primitive(c) {
                return Err(Error::InvalidFamily(format!("cycle {} is not primitive", i + 1)));
            }
            let class = canonical_rotation(c);
            if let Some(k) = classes.iter().position(|x| *x == class) {
                return Err(Error::InvalidFamily(format!(
                    "cycles {} and {} are conjugate",
                    k + 1,
                    i + 1
                )));
            }
            classes.push(class);
        }
        Ok(Self { t, l, cycles })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[Vec<Letter>] {
        &self.cycles
    }

    /// The length-t word starting at position `j` of cycle `i` (both 1-based).
    pub fn w(&self, i: usize, j: usize) -> Vec<Letter> {
        rotate(&self.cycles[i - 1], j - 1)
    }

    /// All words `w(i, j)`, positioned at their cycle number.
    pub fn order(&self) -> ClassOrder {
        let mut elements = Vec::new();
        let mut origin = Vec::new();
        for i in 1..=self.len() {
            for j in 1..=self.t {
                elements.push(PosetElement {
                    position: i,
                    payload: self.w(i, j),
                });
                origin.push((i, j));
            }
        }
        ClassOrder {
            poset: OccurrencePoset::new(elements),
            origin,
        }
    }

    fn format(&self) -> WordFormat {
        WordFormat::for_alphabet(Alphabet::new(self.l).expect("l > 0"))
    }
}

/// `u ≺ v` iff `u` is lexicographically less than `v` and its cycle number is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOrder {
    pub poset: OccurrencePoset,
    /// `(cycle, position)` per element, both 1-based.
    pub origin: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CycleJson {
    number: usize,
    word: String,
    /// Informational; ignored when reading.
    #[serde(default)]
    canonical: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FamilyJson {
    t: usize,
    l: u32,
    cycles: Vec<CycleJson>,
}

impl From<CycleClassFamily> for FamilyJson {
    fn from(f: CycleClassFamily) -> Self {
        let format = f.format();
        FamilyJson {
            t: f.t,
            l: f.l,
            cycles: f
                .cycles
                .iter()
                .enumerate()
                .map(|(i, c)| CycleJson {
                    number: i + 1,
                    word: format.render(c),
                    canonical: format.render(&canonical_rotation(c)),
                })
                .collect(),
        }
    }
}

impl TryFrom<FamilyJson> for CycleClassFamily {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<Self> {
        let format = WordFormat::for_alphabet(Alphabet::new(j.l)?);
        let mut entries = j.cycles;
        entries.sort_by_key(|c| c.number);
        let cycles = entries
            .iter()
            .map(|c| format.parse_letters(&c.word))
            .collect::<Result<Vec<_>>>()?;
        CycleClassFamily::new(j.t, j.l, cycles)
    }
}

/// Outcome of the antichain search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Goodness {
    pub n: usize,
    pub good: bool,
    /// A size-n antichain as `(cycle, position)` pairs when the family is bad.
    pub antichain: Option<Vec<(usize, usize)>>,
    /// A cover by at most `n - 1` chains when the family is good.
    pub chain_cover: Option<ChainColoring>,
    pub nodes: u64,
}

pub fn is_n_good(x: &CycleClassFamily, n: usize) -> Result<Goodness> {
    is_n_good_with_cap(x, n, DEFAULT_SEARCH_CAP)
}

/// Exhaustive branch-and-bound search for an antichain of size `n`.
pub fn is_n_good_with_cap(x: &CycleClassFamily, n: usize, cap: u64) -> Result<Goodness> {
    if n < 2 {
        return Err(Error::Domain("goodness needs n >= 2".into()));
    }
    let order = x.order();
    let mut search = AntichainSearch {
        poset: &order.poset,
        target: n,
        nodes: 0,
        cap,
    };
    let all: Vec<usize> = (0..order.poset.len()).collect();
    let mut chosen = Vec::new();
    let found = search.extend(&mut chosen, &all)?;
    let nodes = search.nodes;
    if found {
        Ok(Goodness {
            n,
            good: false,
            antichain: Some(chosen.iter().map(|&e| order.origin[e]).collect()),
            chain_cover: None,
            nodes,
        })
    } else {
        Ok(Goodness {
            n,
            good: true,
            antichain: None,
            chain_cover: Some(min_chain_cover(&order.poset)),
            nodes,
        })
    }
}

struct AntichainSearch<'a> {
    poset: &'a OccurrencePoset,
    target: usize,
    nodes: u64,
    cap: u64,
}

impl AntichainSearch<'_> {
    fn extend(&mut self, chosen: &mut Vec<usize>, candidates: &[usize]) -> Result<bool> {
        if chosen.len() >= self.target {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::SearchCapExceeded { cap: self.cap });
        }
        for (k, &e) in candidates.iter().enumerate() {
            if chosen.len() + candidates.len() - k < self.target {
                break;
            }
            let rest: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&f| !self.poset.comparable(e, f))
                .collect();
            chosen.push(e);
            if self.extend(chosen, &rest)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

/// Largest antichain size, computed through a minimum chain cover.
pub fn antichain_number(x: &CycleClassFamily) -> usize {
    max_antichain(&x.order().poset).len()
}

/// A split of every cycle's positions into adjacent pairs, described by the
/// 0-based position where the first pair starts (0 or 1) in each cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub offsets: Vec<usize>,
}

impl Pairing {
    pub fn uniform(offset: usize, cycles: usize) -> Self {
        Self {
            offsets: vec![offset; cycles],
        }
    }

    pub fn per_cycle(offsets: Vec<usize>) -> Self {
        Self { offsets }
    }

    /// From explicit 0-based position pairs per cycle. Each pair must be two
    /// cyclically adjacent positions and the pairs must partition `0..t`.
    pub fn from_pairs(t: usize, pairs: &[Vec<(usize, usize)>]) -> Result<Self> {
        if t % 2 == 1 {
            return Err(Error::OddPeriod(t));
        }
        let mut offsets = Vec::with_capacity(pairs.len());
        for (i, cycle) in pairs.iter().enumerate() {
            let mut covered = vec![false; t];
            let mut parity = None;
            for &(a, b) in cycle {
                if a >= t || b >= t || b != (a + 1) % t {
                    return Err(Error::NonAdjacentPairing(format!(
                        "cycle {}: ({a}, {b}) is not an adjacent pair",
                        i + 1
                    )));
                }
                if covered[a] || covered[b] {
                    return Err(Error::NonAdjacentPairing(format!(
                        "cycle {}: position covered twice",
                        i + 1
                    )));
                }
                covered[a] = true;
                covered[b] = true;
                if *parity.get_or_insert(a % 2) != a % 2 {
                    return Err(Error::NonAdjacentPairing(format!(
                        "cycle {}: pairs start at both parities",
                        i + 1
                    )));
                }
            }
            if covered.iter().any(|c| !c) {
                return Err(Error::NonAdjacentPairing(format!(
                    "cycle {}: pairs do not cover every position",
                    i + 1
                )));
            }
            offsets.push(parity.unwrap_or(0));
        }
        Ok(Self { offsets })
    }
}

/// Replaces each pair `(a_i, a_j)` by the letter `b_{i,j} = (i - 1) l + j` of an
/// `l^2`-letter alphabet; the letter order matches `i l + j`.
pub fn pair_encode(x: &CycleClassFamily, pairing: &Pairing) -> Result<CycleClassFamily> {
    if x.t % 2 == 1 {
        return Err(Error::OddPeriod(x.t));
    }
    if pairing.offsets.len() != x.len() {
        return Err(Error::NonAdjacentPairing(format!(
            "{} offsets for {} cycles",
            pairing.offsets.len(),
            x.len()
        )));
    }
    if let Some(&o) = pairing.offsets.iter().find(|&&o| o > 1) {
        return Err(Error::NonAdjacentPairing(format!("offset {o} is not 0 or 1")));
    }
    let l = x.l;
    let square = l
        .checked_mul(l)
        .ok_or_else(|| Error::Domain("squared alphabet too large".into()))?;
    let cycles = x
        .cycles
        .iter()
        .zip(&pairing.offsets)
        .map(|(c, &o)| rotate(c, o).chunks(2).map(|p| (p[0] - 1) * l + p[1]).collect())
        .collect();
    CycleClassFamily::new(x.t / 2, square, cycles)
}

/// Inverse of [`pair_encode`] given the source alphabet size and pairing.
pub fn pair_decode(y: &CycleClassFamily, l: u32, pairing: &Pairing) -> Result<CycleClassFamily> {
    if u64::from(y.l) != u64::from(l) * u64::from(l) {
        return Err(Error::AlphabetMismatch {
            left: y.l,
            right: l.saturating_mul(l),
        });
    }
    let t = 2 * y.t;
    let cycles = y
        .cycles
        .iter()
        .zip(&pairing.offsets)
        .map(|(c, &o)| {
            let flat: Vec<Letter> = c
                .iter()
                .flat_map(|&b| [(b - 1) / l + 1, (b - 1) % l + 1])
                .collect();
            rotate(&flat, (t - o % t) % t)
        })
        .collect();
    CycleClassFamily::new(t, l, cycles)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignedEncoding {
    pub family: CycleClassFamily,
    /// Common start parity of every pair (0-based).
    pub offset: usize,
    /// Images `(cycle, position)` of the antichain members starting at that parity.
    pub images: Vec<(usize, usize)>,
}

/// Pairs positions so that the majority parity among the antichain's start
/// positions begins a pair, and tracks the images of those members.
pub fn pair_encode_with_alignment(
    x: &CycleClassFamily,
    antichain: &[(usize, usize)],
) -> Result<AlignedEncoding> {
    if x.t % 2 == 1 {
        return Err(Error::OddPeriod(x.t));
    }
    let odd = antichain.iter().filter(|&&(_, j)| (j - 1) % 2 == 1).count();
    let offset = usize::from(2 * odd > antichain.len());
    let family = pair_encode(x, &Pairing::uniform(offset, x.len()))?;
    let images = antichain
        .iter()
        .filter(|&&(_, j)| (j - 1) % 2 == offset)
        .map(|&(i, j)| (i, (j - 1 - offset) / 2 + 1))
        .collect();
    Ok(AlignedEncoding {
        family,
        offset,
        images,
    })
}

/// Shifts every letter up by one, making room for a new least letter, and
/// pads each cycle with that letter up to length `2^s`.
pub fn pad_encode(x: &CycleClassFamily, s: u32) -> Result<CycleClassFamily> {
    let target = 1usize
        .checked_shl(s)
        .ok_or_else(|| Error::Domain(format!("2^{s} is too large")))?;
    if target < x.t {
        return Err(Error::Domain(format!(
            "2^{s} = {target} is below the period length {}",
            x.t
        )));
    }
    let cycles = x
        .cycles
        .iter()
        .map(|c| {
            let mut padded: Vec<Letter> = c.iter().map(|&a| a + 1).collect();
            padded.resize(target, 1);
            padded
        })
        .collect();
    CycleClassFamily::new(target, x.l + 1, cycles)
}

/// Smallest `s` with `2^s >= t`.
pub fn padding_exponent(t: usize) -> u32 {
    t.max(1).next_power_of_two().trailing_zeros()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BethEstimate {
    pub t: usize,
    pub l: u32,
    pub n: usize,
    /// Size of the largest good family found: a lower bound.
    pub value: usize,
    pub family: Option<CycleClassFamily>,
    /// Whether every ordering up to the size cap was examined.
    pub exhaustive: bool,
    pub nodes: u64,
}

/// Searches orderings of distinct primitive cycles for the largest n-good
/// family of at most `cap` cycles. Bad prefixes are pruned, since appending
/// cycles never destroys an antichain.
pub fn beth_empirical(t: usize, l: u32, n: usize, cap: usize, budget: u64) -> Result<BethEstimate> {
    if n < 2 {
        return Err(Error::Domain("goodness needs n >= 2".into()));
    }
    if t == 0 || l == 0 {
        return Err(Error::Domain("t and l must be positive".into()));
    }
    let necklaces = primitive_necklaces(l, t);
    let mut search = BethSearch {
        t,
        l,
        n,
        cap: cap.min(necklaces.len()),
        budget,
        necklaces,
        nodes: 0,
        best: Vec::new(),
        exhausted_budget: false,
    };
    if search.cap > 0 {
        let mut used = vec![false; search.necklaces.len()];
        search.dfs(&mut Vec::new(), &mut used);
    }
    let family = if search.best.is_empty() {
        None
    } else {
        Some(search.family(&search.best)?)
    };
    Ok(BethEstimate {
        t,
        l,
        n,
        value: search.best.len(),
        family,
        exhaustive: !search.exhausted_budget,
        nodes: search.nodes,
    })
}

struct BethSearch {
    t: usize,
    l: u32,
    n: usize,
    cap: usize,
    budget: u64,
    necklaces: Vec<Vec<Letter>>,
    nodes: u64,
    best: Vec<usize>,
    exhausted_budget: bool,
}

impl BethSearch {
    fn family(&self, order: &[usize]) -> Result<CycleClassFamily> {
        CycleClassFamily::new(
            self.t,
            self.l,
            order.iter().map(|&i| self.necklaces[i].clone()).collect(),
        )
    }

    /// Returns `false` once the search should stop.
    fn dfs(&mut self, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if order.len() > self.best.len() {
            self.best = order.clone();
        }
        if self.best.len() >= self.cap {
            return false;
        }
        if order.len() >= self.cap {
            return true;
        }
        for i in 0..self.necklaces.len() {
            if used[i] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted_budget = true;
                return false;
            }
            order.push(i);
            let good = self
                .family(order)
                .map(|f| antichain_number(&f) < self.n)
                .unwrap_or(false);
            if good {
                used[i] = true;
                let go_on = self.dfs(order, used);
                used[i] = false;
                if !go_on {
                    order.pop();
                    return false;
                }
            }
            order.pop();
        }
        true
    }
}
