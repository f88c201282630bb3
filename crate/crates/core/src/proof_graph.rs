//! Graphs on (color, letter) vertices built from a colored representative
//! set: the undirected graph for 2-letter periods, directed triangles for
//! 3-letter periods and directed cycles for longer periods, with audits of
//! the counting arguments run against them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dilworth::RepresentativeColoring;
use crate::error::{Error, Result};
use crate::power::RepresentativeSet;
use crate::word::{rotate, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorLetterVertex {
    pub color: usize,
    pub letter: Letter,
}

impl ColorLetterVertex {
    pub fn new(color: usize, letter: Letter) -> Self {
        Self { color, letter }
    }

    fn label(&self) -> String {
        format!("{}:{}", self.color, self.letter)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub from: ColorLetterVertex,
    pub to: ColorLetterVertex,
    pub weight: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Gamma,
    Triangle,
    Cycle,
}

/// Edges sorted by weight; `weights` is the number of representatives `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofGraph {
    pub kind: GraphKind,
    pub weights: usize,
    pub edges: Vec<WeightedEdge>,
}

impl ProofGraph {
    pub fn from_edges(kind: GraphKind, weights: usize, mut edges: Vec<WeightedEdge>) -> Self {
        edges.sort_by_key(|e| e.weight);
        Self { kind, weights, edges }
    }

    pub fn is_directed(&self) -> bool {
        self.kind != GraphKind::Gamma
    }

    pub fn edges_of_weight(&self, j: usize) -> impl Iterator<Item = &WeightedEdge> {
        self.edges.iter().filter(move |e| e.weight == j)
    }

    pub fn vertices(&self) -> BTreeSet<ColorLetterVertex> {
        self.edges.iter().flat_map(|e| [e.from, e.to]).collect()
    }

    pub fn to_dot(&self) -> String {
        let (head, arrow) = if self.is_directed() {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        let mut out = format!("{head} {:?} {{\n", format!("{:?}", self.kind).to_lowercase());
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", v.label(), v.label());
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" {arrow} \"{}\" [label=\"{}\"];",
                e.from.label(),
                e.to.label(),
                e.weight
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Colors every letter of every representative's period by the color of
/// the rotation that starts at it.
pub fn colored_letters(
    omega: &RepresentativeSet,
    coloring: &RepresentativeColoring,
) -> Result<Vec<Vec<ColorLetterVertex>>> {
    let expected: usize = omega.representatives.iter().map(|r| r.period.len()).sum();
    if coloring.poset.origin.len() != expected {
        return Err(Error::ColoringMismatch(format!(
            "coloring has {} elements, the representatives have {expected} rotations",
            coloring.poset.origin.len()
        )));
    }
    omega
        .iter()
        .map(|(j, r)| {
            (0..r.period.len())
                .map(|o| {
                    let e = coloring.poset.element(j, o).ok_or_else(|| {
                        Error::ColoringMismatch(format!("no element for representative {j}, offset {o}"))
                    })?;
                    if coloring.poset.poset.elements[e].payload != rotate(&r.period, o) {
                        return Err(Error::ColoringMismatch(format!(
                            "element for representative {j}, offset {o} has a different payload"
                        )));
                    }
                    Ok(ColorLetterVertex::new(coloring.coloring.color(e), r.period[o]))
                })
                .collect()
        })
        .collect()
}

fn require_period(omega: &RepresentativeSet, len: usize) -> Result<()> {
    match omega.representatives.iter().find(|r| r.period.len() != len) {
        Some(r) => Err(Error::Domain(format!(
            "expected periods of length {len}, found {}",
            r.period.len()
        ))),
        None => Ok(()),
    }
}

fn cyclic_edges(letters: &[Vec<ColorLetterVertex>]) -> Vec<WeightedEdge> {
    let mut edges = Vec::new();
    for (i, cycle) in letters.iter().enumerate() {
        for o in 0..cycle.len() {
            edges.push(WeightedEdge {
                from: cycle[o],
                to: cycle[(o + 1) % cycle.len()],
                weight: i + 1,
            });
        }
    }
    edges
}

/// One undirected edge per 2-letter representative, between its two colored letters.
pub fn build_gamma(omega: &RepresentativeSet, coloring: &RepresentativeColoring) -> Result<ProofGraph> {
    require_period(omega, 2)?;
    let letters = colored_letters(omega, coloring)?;
    let edges = letters
        .iter()
        .enumerate()
        .map(|(i, c)| WeightedEdge {
            from: c[0],
            to: c[1],
            weight: i + 1,
        })
        .collect();
    Ok(ProofGraph::from_edges(GraphKind::Gamma, omega.len(), edges))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorPairCount {
    pub colors: (usize, usize),
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GammaViolation {
    ColorOutOfRange {
        weight: usize,
        color: usize,
    },
    PairCount {
        colors: (usize, usize),
        edges: usize,
        bound: usize,
    },
    Monotonicity {
        colors: (usize, usize),
        earlier: usize,
        later: usize,
    },
    Total {
        edges: usize,
        bound: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaAudit {
    pub pair_counts: Vec<ColorPairCount>,
    pub total: usize,
    pub total_bound: usize,
    pub colors_used: usize,
    pub violations: Vec<GammaViolation>,
}

impl GammaAudit {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Edge oriented so that the endpoint with the smaller color comes first.
fn oriented(e: &WeightedEdge) -> (ColorLetterVertex, ColorLetterVertex) {
    if e.from.color <= e.to.color {
        (e.from, e.to)
    } else {
        (e.to, e.from)
    }
}

/// Per color pair: at most `2l - 1` edges, and along increasing weights both
/// letters weakly increase with at least one strict increase. Overall: at most
/// `(2l - 1)(n - 1)(n - 2) / 2` edges and colors in `1..n`.
pub fn audit_gamma(g: &ProofGraph, l: usize, n: usize) -> GammaAudit {
    let mut violations = Vec::new();
    let mut groups: BTreeMap<(usize, usize), Vec<&WeightedEdge>> = BTreeMap::new();
    let mut colors = BTreeSet::new();
    for e in &g.edges {
        for c in [e.from.color, e.to.color] {
            colors.insert(c);
            if c == 0 || c >= n {
                violations.push(GammaViolation::ColorOutOfRange {
                    weight: e.weight,
                    color: c,
                });
            }
        }
        let (a, b) = oriented(e);
        groups.entry((a.color, b.color)).or_default().push(e);
    }
    let pair_bound = (2 * l).saturating_sub(1);
    let mut pair_counts = Vec::new();
    for (&colors, edges) in &groups {
        pair_counts.push(ColorPairCount {
            colors,
            edges: edges.len(),
        });
        if edges.len() > pair_bound {
            violations.push(GammaViolation::PairCount {
                colors,
                edges: edges.len(),
                bound: pair_bound,
            });
        }
        for pair in edges.windows(2) {
            let (a1, b1) = oriented(pair[0]);
            let (a2, b2) = oriented(pair[1]);
            let weak = a1.letter <= a2.letter && b1.letter <= b2.letter;
            let strict = a1.letter < a2.letter || b1.letter < b2.letter;
            if !(weak && strict) {
                violations.push(GammaViolation::Monotonicity {
                    colors,
                    earlier: pair[0].weight,
                    later: pair[1].weight,
                });
            }
        }
    }
    let total_bound = pair_bound * n.saturating_sub(1) * n.saturating_sub(2) / 2;
    if g.edges.len() > total_bound {
        violations.push(GammaViolation::Total {
            edges: g.edges.len(),
            bound: total_bound,
        });
    }
    GammaAudit {
        pair_counts,
        total: g.edges.len(),
        total_bound,
        colors_used: colors.len(),
        violations,
    }
}

/// A directed triangle `A -> B -> C -> A` per 3-letter representative,
/// following the period's reading direction.
pub fn build_triangle_graph(
    omega: &RepresentativeSet,
    coloring: &RepresentativeColoring,
) -> Result<ProofGraph> {
    require_period(omega, 3)?;
    let letters = colored_letters(omega, coloring)?;
    Ok(ProofGraph::from_edges(
        GraphKind::Triangle,
        omega.len(),
        cyclic_edges(&letters),
    ))
}

/// A weight-`j` triangle whose three sides all carry other edges of smaller weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleViolation {
    pub weight: usize,
    pub vertices: [ColorLetterVertex; 3],
    pub other_weights: [usize; 3],
}

/// For every weight-`j` triangle whose sides all carry parallel edges of other
/// weights `a, b, c`, one of them must exceed `j`. Returns the first
/// configuration where the smallest parallel weights on all sides are below `j`.
pub fn check_triangle_lemma(g: &ProofGraph) -> Option<TriangleViolation> {
    for j in 1..=g.weights {
        let tri: Vec<&WeightedEdge> = g.edges_of_weight(j).collect();
        if tri.len() != 3 {
            continue;
        }
        let others: Option<Vec<usize>> = tri
            .iter()
            .map(|side| {
                g.edges
                    .iter()
                    .filter(|e| e.weight != j && e.from == side.from && e.to == side.to)
                    .map(|e| e.weight)
                    .min()
            })
            .collect();
        if let Some(others) = others {
            if others.iter().all(|&w| w < j) {
                return Some(TriangleViolation {
                    weight: j,
                    vertices: [tri[0].from, tri[1].from, tri[2].from],
                    other_weights: [others[0], others[1], others[2]],
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedGraph {
    pub graph: ProofGraph,
    /// Weights in `1..=t` with no surviving edge.
    pub missing_weights: Vec<usize>,
}

/// Keeps, for every ordered vertex pair, only the edge of least weight.
pub fn reduce_multiedges(g: &ProofGraph) -> ReducedGraph {
    let mut best: BTreeMap<(ColorLetterVertex, ColorLetterVertex), usize> = BTreeMap::new();
    for e in &g.edges {
        let w = best.entry((e.from, e.to)).or_insert(e.weight);
        *w = (*w).min(e.weight);
    }
    let edges: Vec<WeightedEdge> = best
        .into_iter()
        .map(|((from, to), weight)| WeightedEdge { from, to, weight })
        .collect();
    let present: BTreeSet<usize> = edges.iter().map(|e| e.weight).collect();
    ReducedGraph {
        missing_weights: (1..=g.weights).filter(|j| !present.contains(j)).collect(),
        graph: ProofGraph::from_edges(g.kind, g.weights, edges),
    }
}

/// A directed cycle per representative, one edge per period letter.
pub fn build_cycle_graph(omega: &RepresentativeSet, coloring: &RepresentativeColoring) -> Result<ProofGraph> {
    if let Some(first) = omega.representatives.first() {
        require_period(omega, first.period.len())?;
    }
    let letters = colored_letters(omega, coloring)?;
    Ok(ProofGraph::from_edges(
        GraphKind::Cycle,
        omega.len(),
        cyclic_edges(&letters),
    ))
}

/// `values[j - 1]` is the letter sum over the weight-`j` cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiPotential {
    pub values: Vec<u64>,
}

impl PiPotential {
    pub fn get(&self, j: usize) -> Option<u64> {
        j.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }
}

pub fn pi_potential(g: &ProofGraph) -> PiPotential {
    let mut values = vec![0u64; g.weights];
    for e in &g.edges {
        if let Some(v) = values.get_mut(e.weight.wrapping_sub(1)) {
            *v += u64::from(e.from.letter);
        }
    }
    PiPotential { values }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CycleViolation {
    NotIncreasing { weight: usize, pi: u64, next: u64 },
    FirstTooSmall { pi: u64, bound: u64 },
    TooLarge { weight: usize, pi: u64, bound: u64 },
    TooManyRepresentatives { t: usize, bound: usize },
    SharedVertexSet { first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleAudit {
    pub pi: PiPotential,
    pub t: usize,
    pub t_bound: usize,
    pub violations: Vec<CycleViolation>,
}

impl CycleAudit {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations other than the bound on `t` and on individual potentials.
    pub fn potential_violations(&self) -> impl Iterator<Item = &CycleViolation> {
        self.violations.iter().filter(|v| {
            matches!(
                v,
                CycleViolation::NotIncreasing { .. }
                    | CycleViolation::FirstTooSmall { .. }
                    | CycleViolation::SharedVertexSet { .. }
            )
        })
    }
}

/// Checks `π(j+1) >= π(j) + 1`, `π(1) > n - 1`, `π(j) <= (l-1)(n-1)`,
/// `t <= (l-2)(n-1)` and that no two weights span the same vertex set.
pub fn audit_cycle_graph(g: &ProofGraph, l: usize, n: usize) -> CycleAudit {
    let pi = pi_potential(g);
    let mut violations = Vec::new();
    for (i, pair) in pi.values.windows(2).enumerate() {
        if pair[1] < pair[0] + 1 {
            violations.push(CycleViolation::NotIncreasing {
                weight: i + 1,
                pi: pair[0],
                next: pair[1],
            });
        }
    }
    let low = n.saturating_sub(1) as u64;
    if let Some(&first) = pi.values.first() {
        if first <= low {
            violations.push(CycleViolation::FirstTooSmall {
                pi: first,
                bound: low,
            });
        }
    }
    let high = (l.saturating_sub(1) * n.saturating_sub(1)) as u64;
    for (i, &p) in pi.values.iter().enumerate() {
        if p > high {
            violations.push(CycleViolation::TooLarge {
                weight: i + 1,
                pi: p,
                bound: high,
            });
        }
    }
    let t_bound = l.saturating_sub(2) * n.saturating_sub(1);
    if g.weights > t_bound {
        violations.push(CycleViolation::TooManyRepresentatives {
            t: g.weights,
            bound: t_bound,
        });
    }
    let mut seen: BTreeMap<BTreeSet<ColorLetterVertex>, usize> = BTreeMap::new();
    for j in 1..=g.weights {
        let set: BTreeSet<ColorLetterVertex> = g.edges_of_weight(j).map(|e| e.from).collect();
        if let Some(&first) = seen.get(&set) {
            violations.push(CycleViolation::SharedVertexSet { first, second: j });
        } else {
            seen.insert(set, j);
        }
    }
    CycleAudit {
        pi,
        t: g.weights,
        t_bound,
        violations,
    }
}
