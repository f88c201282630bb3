//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout; exits nonzero when the outcome
//! differs from the expected set of failing criteria below.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shirshov::bounds::{beth2, beth3, beth_nminus1, co1_bound, height_lower, psi_lower};
use shirshov::verify::{corpus, run_suite, Scale, Suite, SuiteReport, DEFAULT_SEED};
use shirshov::word::{all_words, canonical_rotation};
use shirshov::{
    build_rauzy, certify_extremal, generate_extremal, is_n_divisible, max_antichain, min_chain_cover,
    trajectory_cycle_stats, Alphabet, Letter, Word,
};

/// Criteria whose claims fail on the stated corpora; the printed lines carry
/// the counterexamples.
const KNOWN_FAILURES: &[u32] = &[4];

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
}

fn line(id: u32, pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        id,
        pass,
        detail: detail.into(),
    }
}

/// `u > v`: they differ at some position before either ends, and `u` is larger there.
fn greater(u: &[Letter], v: &[Letter]) -> bool {
    u.iter().zip(v).find(|(a, b)| a != b).is_some_and(|(a, b)| a > b)
}

fn less(u: &[Letter], v: &[Letter]) -> bool {
    greater(v, u)
}

/// Lexicographically least `[c_1, ..., c_n, |w|]` with `w[c_i..c_{i+1}]` strictly decreasing.
fn cuts_by_enumeration(w: &[Letter], n: usize) -> Option<Vec<usize>> {
    fn rec(w: &[Letter], n: usize, cuts: &mut Vec<usize>) -> bool {
        if cuts.len() == n {
            let last = *cuts.last().unwrap();
            if last >= w.len() {
                return false;
            }
            cuts.push(w.len());
            let ok = (1..n).all(|i| greater(&w[cuts[i - 1]..cuts[i]], &w[cuts[i]..cuts[i + 1]]));
            if !ok {
                cuts.pop();
            }
            return ok;
        }
        let from = cuts.last().map_or(0, |&c| c + 1);
        for c in from..w.len() {
            cuts.push(c);
            if rec(w, n, cuts) {
                return true;
            }
            cuts.pop();
        }
        false
    }
    let mut cuts = Vec::new();
    rec(w, n, &mut cuts).then_some(cuts)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut words = 0;
    let mut disagreements = Vec::new();
    for (l, max_len) in [(2u32, 10usize), (3, 8)] {
        for len in 1..=max_len {
            for w in all_words(l, len) {
                words += 1;
                for n in 1..=len {
                    let fast = is_n_divisible(&w, n).unwrap().map(|d| d.cuts);
                    let slow = cuts_by_enumeration(&w, n);
                    if fast != slow {
                        disagreements.push(format!("{w:?} n={n}: {fast:?} vs {slow:?}"));
                    }
                    if slow.is_none() {
                        break;
                    }
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    line(
        1,
        disagreements.is_empty() && secs < 60.0,
        format!(
            "{words} words, {} disagreements, {secs:.1} s",
            disagreements.len()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut violations = 0;
    for _ in 0..1000 {
        let p = corpus::random_poset(&mut rng, 12);
        let els = &p.elements;
        let related = |u: usize, v: usize| {
            (els[u].position < els[v].position && less(&els[u].payload, &els[v].payload))
                || (els[v].position < els[u].position && less(&els[v].payload, &els[u].payload))
        };
        let size = els.len();
        let brute = (0u32..1 << size)
            .filter(|&mask| {
                (0..size).all(|u| {
                    mask >> u & 1 == 0 || (u + 1..size).all(|v| mask >> v & 1 == 0 || !related(u, v))
                })
            })
            .map(u32::count_ones)
            .max()
            .unwrap_or(0) as usize;
        let cover = min_chain_cover(&p);
        let anti = max_antichain(&p);
        let chains_ok = cover.chains.iter().all(|c| {
            c.windows(2).all(|w| {
                els[w[0]].position < els[w[1]].position && less(&els[w[0]].payload, &els[w[1]].payload)
            })
        });
        let partition = {
            let mut all: Vec<usize> = cover.chains.concat();
            all.sort_unstable();
            all == (0..size).collect::<Vec<_>>()
        };
        let anti_ok = anti
            .iter()
            .enumerate()
            .all(|(i, &u)| anti[i + 1..].iter().all(|&v| !related(u, v)));
        if cover.chains.len() != anti.len() || anti.len() != brute || !chains_ok || !partition || !anti_ok {
            violations += 1;
        }
    }
    line(
        2,
        violations == 0,
        format!("1000 posets, {violations} violations"),
    )
}

fn suite(s: Suite) -> SuiteReport {
    run_suite(s, Scale::Small, DEFAULT_SEED).unwrap()
}

fn first_violation(r: &SuiteReport) -> String {
    r.violations
        .first()
        .map_or(String::new(), |v| format!("; first: {v}"))
}

fn criterion_3() -> Outcome {
    let r = suite(Suite::Theorem1);
    line(
        3,
        r.passes() && r.checked == 500,
        format!(
            "{} words, {} strongly 3-divisible, {} violations{}",
            r.checked,
            r.skipped,
            r.violations.len(),
            first_violation(&r)
        ),
    )
}

fn criterion_4() -> Outcome {
    let r = suite(Suite::Potential);
    let summary = r
        .notes
        .iter()
        .find(|n| n.contains("audited"))
        .cloned()
        .unwrap_or_default();
    line(
        4,
        r.passes(),
        format!(
            "{} sets, {} skipped; {summary}{}",
            r.checked,
            r.skipped,
            first_violation(&r)
        ),
    )
}

/// Every cut vector whose factors start with `z^8` for pairwise distinct
/// two-letter primitive `z` and decrease strictly.
fn strongly_4_divisible_by_enumeration(w: &[Letter]) -> bool {
    let k = 8;
    let starts: Vec<usize> = (0..w.len())
        .filter(|&i| i + 2 * k <= w.len() && w[i] != w[i + 1] && (0..2 * k).all(|j| w[i + j] == w[i + j % 2]))
        .collect();
    let m = starts.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let cuts = [starts[a], starts[b], starts[c], starts[d], w.len()];
                    let periods: HashSet<&[Letter]> = cuts[..4].iter().map(|&i| &w[i..i + 2]).collect();
                    if periods.len() == 4
                        && cuts[..4].iter().zip(&cuts[1..]).all(|(&s, &e)| e - s >= 2 * k)
                        && (1..4).all(|i| greater(&w[cuts[i - 1]..cuts[i]], &w[cuts[i]..cuts[i + 1]]))
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for l in 9..=12u32 {
        let (w, plan) = generate_extremal(4, l, None).unwrap();
        let cert = certify_extremal(&w, &plan).unwrap();
        // (l - 2^3)(4 - 2)(4 - 3)/2 = l - 8.
        let formula = u64::from(l) - 8;
        let classes: HashSet<Vec<Letter>> = plan
            .edges
            .iter()
            .map(|e| canonical_rotation(&[e.u, e.v]))
            .collect();
        let distinct = classes.len() == plan.edges.len();
        let height = cert.small_height.height as u64;
        ok &= cert.small_height.exact && height >= formula && distinct;
        let mut part = format!(
            "l={l}: height {height} vs formula {formula} (ratio {})",
            height / formula
        );
        if l == 9 {
            let strong = strongly_4_divisible_by_enumeration(w.letters());
            ok &= !strong && cert.strong_division.is_none();
            part.push_str(if strong {
                ", strongly 4-divisible"
            } else {
                ", not strongly 4-divisible"
            });
        }
        parts.push(part);
    }
    let secs = start.elapsed();
    ok &= secs < Duration::from_secs(300);
    line(
        5,
        ok,
        format!("{}; {:.1} s", parts.join("; "), secs.as_secs_f64()),
    )
}

fn criterion_6() -> Outcome {
    let r = suite(Suite::Encodings);
    line(
        6,
        r.passes() && r.checked >= 1000,
        format!(
            "{} families, {} violations{}",
            r.checked,
            r.violations.len(),
            first_violation(&r)
        ),
    )
}

fn criterion_7() -> Outcome {
    let r = suite(Suite::Forcing);
    line(
        7,
        r.passes(),
        format!(
            "{} checks, {} violations{}",
            r.checked,
            r.violations.len(),
            first_violation(&r)
        ),
    )
}

fn criterion_8() -> Outcome {
    let alphabet = Alphabet::new(2).unwrap();
    let mut checks = 0;
    let mut failures = 0;
    for len in 1..=12 {
        for letters in all_words(2, len) {
            let w = Word::new(alphabet, letters.clone()).unwrap();
            for r in (1..=3).filter(|&r| r <= len) {
                checks += 1;
                let g = build_rauzy(&w, r).unwrap();
                let edges: HashSet<&[Letter]> = letters.windows(r + 1).collect();
                if g.trajectory.len() != len - r || g.edges.len() != edges.len() {
                    failures += 1;
                }
            }
        }
    }
    let w = Word::new(alphabet, [1, 2].repeat(10)).unwrap();
    let stats = trajectory_cycle_stats(&w, 2, 3, 0).unwrap();
    let two_cycles: Vec<usize> = stats
        .cycles
        .iter()
        .filter(|c| c.length == 2)
        .map(|c| c.traversals)
        .collect();
    let ab = two_cycles == [9];
    line(
        8,
        failures == 0 && ab,
        format!("{checks} checks, {failures} failures; (ab)^10 2-cycle traversals {two_cycles:?}"),
    )
}

fn criterion_9() -> Outcome {
    let cases = [
        // (2*3 - 1)(4 - 1)(4 - 2)/2 = 5*3*2/2
        ("beth2(3,4)", beth2(3, 4), 15u64),
        // (2*3 - 1)(4 - 1)(4 - 2) = 5*3*2
        ("beth3(3,4)", beth3(3, 4), 30),
        // (4 - 2)(5 - 1) = 2*4
        ("beth_nminus1(4,5)", beth_nminus1(4, 5), 8),
        // (10 - 2^3)(4 - 2)(4 - 3)/2 = 2*2*1/2
        ("psi_lower(4,10)", psi_lower(4, 10), 2),
        // (2 - 1)*4^2/4 + 1 = 4 + 1
        ("height_lower(2,4)", height_lower(2, 4), 5),
        // 2(4 - 1) * beth2(3,4) = 6*15
        ("co1_bound(2,3,4)", co1_bound(2, 3, 4), 90),
    ];
    let mut wrong = Vec::new();
    for (name, got, want) in cases {
        let got = got.map(|r| r.value.to_string()).unwrap_or_else(|e| e.to_string());
        if got != want.to_string() {
            wrong.push(format!("{name} = {got}, expected {want}"));
        }
    }
    line(
        9,
        wrong.is_empty(),
        format!("6 golden values, mismatches: {wrong:?}"),
    )
}

fn main() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ];
    for o in &outcomes {
        println!(
            "{} criterion {}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.detail
        );
    }
    let failing: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert_eq!(
        failing, KNOWN_FAILURES,
        "failing criteria differ from the known set"
    );
}
