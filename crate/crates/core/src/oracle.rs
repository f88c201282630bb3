//! Brute-force reference implementations. They follow the definitions
//! literally and share no code path with the fast deciders, so the
//! verification suites can compare the two.

use std::collections::BTreeSet;

use crate::word::{canonical_rotation, compare_letters, is_primitive, Letter};

/// Lexicographically least cut vector `(c_0, ..., c_n = |W|)` of an n-division,
/// found by enumerating cut tuples in lexicographic order.
pub fn division_by_enumeration(w: &[Letter], n: usize) -> Option<Vec<usize>> {
    fn rec(w: &[Letter], n: usize, cuts: &mut Vec<usize>) -> bool {
        let len = w.len();
        if cuts.len() == n {
            cuts.push(len);
            let ok = cuts
                .windows(3)
                .all(|c| compare_letters(&w[c[0]..c[1]], &w[c[1]..c[2]]).is_greater());
            if ok {
                return true;
            }
            cuts.pop();
            return false;
        }
        let from = cuts.last().map_or(0, |&c| c + 1);
        // Leave room for the remaining nonempty factors.
        let remaining = n - cuts.len();
        for c in from..=len.saturating_sub(remaining) {
            if c >= len {
                break;
            }
            cuts.push(c);
            if rec(w, n, cuts) {
                return true;
            }
            cuts.pop();
        }
        false
    }
    if n == 0 || w.len() < n {
        return None;
    }
    let mut cuts = Vec::new();
    rec(w, n, &mut cuts).then_some(cuts)
}

pub fn max_divisibility_by_enumeration(w: &[Letter]) -> usize {
    (1..=w.len())
        .take_while(|&n| division_by_enumeration(w, n).is_some())
        .last()
        .unwrap_or(0)
}

/// Strong n-divisibility by enumerating cut tuples and period assignments.
pub fn strongly_divisible_by_enumeration(w: &[Letter], n: usize, periods: &[Vec<Letter>], k: usize) -> bool {
    if n == 0 {
        return false;
    }
    let mut found = false;
    enumerate_cuts(w.len(), n, &mut Vec::new(), &mut |cuts| {
        if found {
            return;
        }
        let decreasing = cuts
            .windows(3)
            .all(|c| compare_letters(&w[c[0]..c[1]], &w[c[1]..c[2]]).is_greater());
        if !decreasing {
            return;
        }
        let options: Vec<Vec<usize>> = cuts
            .windows(2)
            .map(|c| {
                let factor = &w[c[0]..c[1]];
                periods
                    .iter()
                    .enumerate()
                    .filter(|(_, z)| factor.starts_with(&z.repeat(k)))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if distinct_choice(&options, &mut Vec::new()) {
            found = true;
        }
    });
    found
}

fn enumerate_cuts(len: usize, n: usize, cuts: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cuts.len() == n {
        cuts.push(len);
        f(cuts);
        cuts.pop();
        return;
    }
    let from = cuts.last().map_or(0, |&c| c + 1);
    for c in from..len {
        cuts.push(c);
        enumerate_cuts(len, n, cuts, f);
        cuts.pop();
    }
}

fn distinct_choice(options: &[Vec<usize>], used: &mut Vec<usize>) -> bool {
    let Some((first, rest)) = options.split_first() else {
        return true;
    };
    for &o in first {
        if !used.contains(&o) {
            used.push(o);
            if distinct_choice(rest, used) {
                return true;
            }
            used.pop();
        }
    }
    false
}

/// Every factor `z^m` with `|z| = t`, `z` primitive and `m > k`, as
/// `(start, end, canonical class)`.
pub fn power_factors(w: &[Letter], t: usize, k: usize) -> Vec<(usize, usize, Vec<Letter>)> {
    let mut out = Vec::new();
    if t == 0 {
        return out;
    }
    for s in 0..w.len() {
        if s + t > w.len() || !is_primitive(&w[s..s + t]) {
            continue;
        }
        let z = &w[s..s + t];
        let mut m = 1;
        while s + (m + 1) * t <= w.len() && &w[s + m * t..s + (m + 1) * t] == z {
            m += 1;
            if m > k {
                out.push((s, s + m * t, canonical_rotation(z)));
            }
        }
    }
    out
}

/// Small selective height by exhaustive search over disjoint selections with
/// pairwise distinct cycle classes.
pub fn small_selective_height_by_search(w: &[Letter], t: usize, k: usize) -> usize {
    let factors = power_factors(w, t, k);
    fn rec(
        factors: &[(usize, usize, Vec<Letter>)],
        from: usize,
        pos: usize,
        classes: &mut BTreeSet<Vec<Letter>>,
    ) -> usize {
        let mut best = classes.len();
        for i in from..factors.len() {
            let (s, e, c) = &factors[i];
            if *s < pos || classes.contains(c) {
                continue;
            }
            classes.insert(c.clone());
            best = best.max(rec(factors, i + 1, *e, classes));
            classes.remove(c);
        }
        best
    }
    let mut sorted = factors;
    sorted.sort();
    rec(&sorted, 0, 0, &mut BTreeSet::new())
}

/// Large selective height by exhaustive search: disjoint powers, left to right,
/// each adjacent pair prefix-related.
pub fn large_selective_height_by_search(w: &[Letter], t: usize, k: usize) -> usize {
    let mut factors = power_factors(w, t, k);
    factors.sort();
    fn rec(w: &[Letter], f: &[(usize, usize, Vec<Letter>)], last: usize, from: usize) -> usize {
        let (ls, le, _) = &f[last];
        let mut best = 1;
        for i in from..f.len() {
            let (s, e, _) = &f[i];
            if s < le {
                continue;
            }
            if compare_letters(&w[*ls..*le], &w[*s..*e]).is_comparable() {
                continue;
            }
            best = best.max(1 + rec(w, f, i, i + 1));
        }
        best
    }
    (0..factors.len())
        .map(|i| rec(w, &factors, i, i + 1))
        .max()
        .unwrap_or(0)
}

/// Maximum antichain size of a strict order given as a relation matrix, by
/// enumerating all subsets.
pub fn max_antichain_by_subsets(size: usize, related: &dyn Fn(usize, usize) -> bool) -> usize {
    assert!(size <= 24, "subset enumeration is limited to 24 elements");
    let mut best = 0;
    for mask in 0u32..(1u32 << size) {
        let members: Vec<usize> = (0..size).filter(|&i| mask >> i & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        let ok = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| a == b || (!related(a, b) && !related(b, a)))
        });
        if ok {
            best = members.len();
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        assert_eq!(division_by_enumeration(&[3, 2, 1], 3), Some(vec![0, 1, 2, 3]));
        assert_eq!(division_by_enumeration(&[1, 2, 3], 2), None);
        assert_eq!(max_divisibility_by_enumeration(&[1, 1, 1, 1]), 1);
        assert_eq!(max_divisibility_by_enumeration(&[]), 0);
    }

    #[test]
    fn power_factor_listing() {
        // (ab)^3 with k = 1: (ab)^2 at 0, 1 (as (ba)^2), 2 and (ab)^3 at 0.
        let f = power_factors(&[1, 2, 1, 2, 1, 2], 2, 1);
        let spans: Vec<(usize, usize)> = f.iter().map(|x| (x.0, x.1)).collect();
        assert_eq!(spans, [(0, 4), (0, 6), (1, 5), (2, 6)]);
    }
}
