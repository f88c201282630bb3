//! The occurrence order on tagged factors, maximum antichains and minimum
//! chain covers (bipartite matching), and the chain coloring of the period
//! rotations inside a representative set.

use serde::{Deserialize, Serialize};

use crate::power::RepresentativeSet;
use crate::word::{compare_letters, Letter};

/// A factor tagged with its position. Elements at equal positions are never related.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetElement {
    pub position: usize,
    pub payload: Vec<Letter>,
}

/// `u ≺ v` iff `u.payload` is lexicographically less than `v.payload`
/// (strictly comparable) and `u.position < v.position`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrencePoset {
    pub elements: Vec<PosetElement>,
}

impl OccurrencePoset {
    pub fn new(elements: Vec<PosetElement>) -> Self {
        Self { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn related(&self, u: usize, v: usize) -> bool {
        let (a, b) = (&self.elements[u], &self.elements[v]);
        a.position < b.position && compare_letters(&a.payload, &b.payload).is_less()
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.related(u, v) || self.related(v, u)
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.comparable(u, v)))
    }
}

/// A partition of the poset into chains. `colors[e]` is the 1-based color of
/// element `e`; `chains[c - 1]` lists the elements of color `c` in increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainColoring {
    pub colors: Vec<usize>,
    pub chains: Vec<Vec<usize>>,
}

impl ChainColoring {
    pub fn color_count(&self) -> usize {
        self.chains.len()
    }

    pub fn color(&self, element: usize) -> usize {
        self.colors[element]
    }

    /// Checks that colors partition the elements and every color class is a chain.
    pub fn validate(&self, p: &OccurrencePoset) -> Result<(), String> {
        if self.colors.len() != p.len() {
            return Err(format!("{} colors for {} elements", self.colors.len(), p.len()));
        }
        let mut seen = vec![false; p.len()];
        for (c, chain) in self.chains.iter().enumerate() {
            if chain.is_empty() {
                return Err(format!("color {} is empty", c + 1));
            }
            for &e in chain {
                if e >= p.len() || seen[e] {
                    return Err(format!("element {e} is listed twice or out of range"));
                }
                seen[e] = true;
                if self.colors[e] != c + 1 {
                    return Err(format!(
                        "element {e} has color {} but sits in chain {}",
                        self.colors[e],
                        c + 1
                    ));
                }
            }
            for pair in chain.windows(2) {
                if !p.related(pair[0], pair[1]) {
                    return Err(format!(
                        "elements {} and {} of color {} are not ordered",
                        pair[0],
                        pair[1],
                        c + 1
                    ));
                }
            }
        }
        if let Some(e) = seen.iter().position(|s| !s) {
            return Err(format!("element {e} has no chain"));
        }
        Ok(())
    }

    /// Builds a coloring from an explicit color per element (1-based) and
    /// validates it.
    pub fn from_colors(p: &OccurrencePoset, colors: Vec<usize>) -> Result<Self, String> {
        let count = colors.iter().copied().max().unwrap_or(0);
        let mut chains = vec![Vec::new(); count];
        for (e, &c) in colors.iter().enumerate() {
            if c == 0 {
                return Err(format!("element {e} has color 0"));
            }
            chains[c - 1].push(e);
        }
        for chain in &mut chains {
            chain.sort_by_key(|&e| (p.elements[e].position, e));
        }
        let coloring = Self { colors, chains };
        coloring.validate(p)?;
        Ok(coloring)
    }
}

/// Maximum matching in the comparability bipartite graph (left copy `u`,
/// right copy `v`, edge when `u ≺ v`).
struct Matching {
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
    adj: Vec<Vec<usize>>,
}

impl Matching {
    fn new(p: &OccurrencePoset) -> Self {
        let n = p.len();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| p.related(u, v)).collect())
            .collect();
        let mut m = Self {
            succ: vec![None; n],
            pred: vec![None; n],
            adj,
        };
        for u in 0..n {
            let mut visited = vec![false; n];
            m.augment(u, &mut visited);
        }
        m
    }

    fn augment(&mut self, u: usize, visited: &mut [bool]) -> bool {
        for i in 0..self.adj[u].len() {
            let v = self.adj[u][i];
            if visited[v] {
                continue;
            }
            visited[v] = true;
            if self.pred[v].is_none_or(|w| self.augment(w, visited)) {
                self.pred[v] = Some(u);
                self.succ[u] = Some(v);
                return true;
            }
        }
        false
    }
}

/// Minimum chain cover. Chains are numbered by their minimal element's
/// position (ties by element index) and colors follow chain numbers.
pub fn min_chain_cover(p: &OccurrencePoset) -> ChainColoring {
    let m = Matching::new(p);
    let mut chains: Vec<Vec<usize>> = (0..p.len())
        .filter(|&e| m.pred[e].is_none())
        .map(|start| {
            let mut chain = vec![start];
            while let Some(next) = m.succ[*chain.last().unwrap()] {
                chain.push(next);
            }
            chain
        })
        .collect();
    chains.sort_by_key(|c| (p.elements[c[0]].position, c[0]));
    let mut colors = vec![0; p.len()];
    for (c, chain) in chains.iter().enumerate() {
        for &e in chain {
            colors[e] = c + 1;
        }
    }
    ChainColoring { colors, chains }
}

/// Maximum antichain, read off a minimum vertex cover of the matching graph.
pub fn max_antichain(p: &OccurrencePoset) -> Vec<usize> {
    let m = Matching::new(p);
    let n = p.len();
    let mut left = vec![false; n];
    let mut right = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| m.succ[u].is_none()).collect();
    for &u in &stack {
        left[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &v in &m.adj[u] {
            if right[v] || m.succ[u] == Some(v) {
                continue;
            }
            right[v] = true;
            if let Some(w) = m.pred[v] {
                if !left[w] {
                    left[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&e| left[e] && !right[e]).collect()
}

/// The period rotations of a representative set as poset elements:
/// element `(j, o)` is the rotation of representative `j`'s period starting
/// at offset `o`, positioned at `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativePoset {
    pub poset: OccurrencePoset,
    /// `(representative index (1-based), offset)` per element.
    pub origin: Vec<(usize, usize)>,
}

impl RepresentativePoset {
    pub fn new(omega: &RepresentativeSet) -> Self {
        let mut elements = Vec::new();
        let mut origin = Vec::new();
        for (j, r) in omega.iter() {
            let z = &r.period;
            for o in 0..z.len() {
                let payload: Vec<Letter> = z[o..].iter().chain(&z[..o]).copied().collect();
                elements.push(PosetElement { position: j, payload });
                origin.push((j, o));
            }
        }
        Self {
            poset: OccurrencePoset::new(elements),
            origin,
        }
    }

    /// Element index of rotation `o` of representative `j`.
    pub fn element(&self, j: usize, o: usize) -> Option<usize> {
        self.origin.iter().position(|&x| x == (j, o))
    }

    /// Longest antichain taking at most one rotation per representative, with
    /// payloads strictly decreasing from left to right.
    pub fn decreasing_antichain(&self) -> Vec<usize> {
        let els = &self.poset.elements;
        let n = els.len();
        let mut best = vec![1usize; n];
        let mut back = vec![None; n];
        for e in 0..n {
            for f in 0..e {
                if els[f].position < els[e].position
                    && compare_letters(&els[f].payload, &els[e].payload).is_greater()
                    && best[f] + 1 > best[e]
                {
                    best[e] = best[f] + 1;
                    back[e] = Some(f);
                }
            }
        }
        let Some(mut e) = (0..n).max_by_key(|&e| (best[e], std::cmp::Reverse(e))) else {
            return Vec::new();
        };
        let mut out = vec![e];
        while let Some(f) = back[e] {
            out.push(f);
            e = f;
        }
        out.reverse();
        out
    }
}

/// The chain coloring of a representative set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeColoring {
    pub poset: RepresentativePoset,
    pub coloring: ChainColoring,
}

impl RepresentativeColoring {
    /// Color of rotation `o` of representative `j`.
    pub fn color_of(&self, j: usize, o: usize) -> Option<usize> {
        self.poset.element(j, o).map(|e| self.coloring.color(e))
    }
}

/// An antichain of `n` or more rotations. When `distinct_representatives`
/// holds, its members come from distinct representatives with strictly
/// decreasing payloads, so the host word is strongly n-divisible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("antichain of size {} among the period rotations", antichain.len())]
pub struct AntichainTooLarge {
    /// `(representative index, offset)` pairs.
    pub antichain: Vec<(usize, usize)>,
    pub payloads: Vec<Vec<Letter>>,
    pub distinct_representatives: bool,
    /// The minimum chain cover, with at least `n` colors.
    pub coloring: RepresentativeColoring,
}

/// Colors the period rotations of `omega` by a minimum chain cover. Fails
/// with a certificate when `n` or more colors are needed.
pub fn color_representatives(
    omega: &RepresentativeSet,
    n: usize,
) -> Result<RepresentativeColoring, Box<AntichainTooLarge>> {
    let rp = RepresentativePoset::new(omega);
    let coloring = min_chain_cover(&rp.poset);
    let result = RepresentativeColoring { poset: rp, coloring };
    if result.coloring.color_count() < n {
        return Ok(result);
    }
    let decreasing = result.poset.decreasing_antichain();
    let (antichain, distinct) = if decreasing.len() >= n {
        (decreasing, true)
    } else {
        (max_antichain(&result.poset.poset), false)
    };
    let distinct = distinct || {
        let mut reps: Vec<usize> = antichain.iter().map(|&e| result.poset.origin[e].0).collect();
        reps.dedup();
        reps.len() == antichain.len()
            && antichain.windows(2).all(|w| {
                compare_letters(
                    &result.poset.poset.elements[w[0]].payload,
                    &result.poset.poset.elements[w[1]].payload,
                )
                .is_greater()
            })
    };
    Err(Box::new(AntichainTooLarge {
        antichain: antichain.iter().map(|&e| result.poset.origin[e]).collect(),
        payloads: antichain
            .iter()
            .map(|&e| result.poset.poset.elements[e].payload.clone())
            .collect(),
        distinct_representatives: distinct,
        coloring: result,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::max_antichain_by_subsets;
    use crate::power::small_selective_height;
    use crate::word::{Alphabet, Word};
    use rand::{Rng, SeedableRng};

    fn el(position: usize, payload: &[Letter]) -> PosetElement {
        PosetElement {
            position,
            payload: payload.to_vec(),
        }
    }

    #[test]
    fn trivial_posets() {
        let anti = OccurrencePoset::new(vec![el(0, &[1]), el(0, &[2]), el(0, &[3])]);
        assert_eq!(max_antichain(&anti).len(), 3);
        assert_eq!(min_chain_cover(&anti).color_count(), 3);

        let chain = OccurrencePoset::new((0..5).map(|i| el(i, &[i as Letter + 1])).collect());
        assert_eq!(max_antichain(&chain).len(), 1);
        let c = min_chain_cover(&chain);
        assert_eq!(c.chains, [vec![0, 1, 2, 3, 4]]);
        c.validate(&chain).unwrap();

        let empty = OccurrencePoset::default();
        assert!(max_antichain(&empty).is_empty());
        assert_eq!(min_chain_cover(&empty).color_count(), 0);
    }

    #[test]
    fn prefix_related_payloads_are_unrelated() {
        let p = OccurrencePoset::new(vec![el(0, &[1]), el(1, &[1, 2])]);
        assert!(!p.comparable(0, 1));
        assert_eq!(max_antichain(&p).len(), 2);
    }

    #[test]
    fn dilworth_equality_on_random_posets() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let size = rng.random_range(0..=10);
            let elements: Vec<PosetElement> = (0..size)
                .map(|_| {
                    let len = rng.random_range(1..=3);
                    let payload: Vec<Letter> = (0..len).map(|_| rng.random_range(1..=2)).collect();
                    el(rng.random_range(0..6), &payload)
                })
                .collect();
            let p = OccurrencePoset::new(elements);
            let anti = max_antichain(&p);
            let cover = min_chain_cover(&p);
            cover.validate(&p).unwrap();
            assert!(p.is_antichain(&anti));
            assert_eq!(anti.len(), cover.color_count());
            assert_eq!(
                anti.len(),
                max_antichain_by_subsets(p.len(), &|a, b| p.related(a, b))
            );
        }
    }

    #[test]
    fn chains_are_numbered_by_minimal_position() {
        let p = OccurrencePoset::new(vec![el(3, &[1]), el(1, &[2]), el(2, &[1])]);
        let c = min_chain_cover(&p);
        let firsts: Vec<usize> = c.chains.iter().map(|ch| p.elements[ch[0]].position).collect();
        let mut sorted = firsts.clone();
        sorted.sort();
        assert_eq!(firsts, sorted);
    }

    fn omega(text: &str, k: usize) -> RepresentativeSet {
        let w = Word::latin(Alphabet::new(3).unwrap(), text).unwrap();
        small_selective_height(&w, 2, k).witness
    }

    #[test]
    fn two_coloring_of_two_representatives() {
        let text = format!("{}c{}", "ab".repeat(7), "ac".repeat(7));
        let om = omega(&text, 6);
        assert_eq!(om.len(), 2);
        let c = color_representatives(&om, 3).unwrap();
        assert_eq!(c.coloring.color_count(), 2);
        c.coloring.validate(&c.poset.poset).unwrap();
    }

    #[test]
    fn empty_representative_set() {
        let c = color_representatives(&RepresentativeSet::default(), 3).unwrap();
        assert_eq!(c.coloring.color_count(), 0);
    }

    #[test]
    fn decreasing_representatives_are_rejected() {
        // cb > ca > ba as rotations of three distinct classes, left to right.
        let text = format!("{}{}{}", "cb".repeat(7), "ca".repeat(7), "ba".repeat(7));
        let om = omega(&text, 6);
        assert_eq!(om.len(), 3);
        let err = color_representatives(&om, 3).unwrap_err();
        assert!(err.distinct_representatives);
        assert!(err.antichain.len() >= 3);
        assert!(err.coloring.coloring.color_count() >= 3);
    }
}
