//! The lower-bound construction: a word made of blocks `(a_u a_v)^m`, one per
//! edge of a graph on the letters built in "big steps", and a certificate of
//! its properties.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::dilworth::{color_representatives, ChainColoring, RepresentativeColoring, RepresentativePoset};
use crate::divisibility::{is_strongly_n_divisible, primitive_periods, StrongDivision};
use crate::error::{Error, Result};
use crate::power::{small_selective_height, PowerOccurrence, RepresentativeSet, SelectiveHeight};
use crate::proof_graph::{audit_gamma, build_gamma, GammaAudit};
use crate::word::{canonical_rotation, Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlannedEdge {
    /// Big-step index `i`.
    pub step: u32,
    /// Group `g` in `1..n`: the edges joining the g-th new vertex to all earlier ones.
    pub group: usize,
    pub u: Letter,
    pub v: Letter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigStepPlan {
    pub n: usize,
    pub l: u32,
    pub exponent: usize,
    pub edges: Vec<PlannedEdge>,
}

impl BigStepPlan {
    /// Steps `i = 2 ..= l - 2^{n-1} + 1`; at step `i` the vertices are
    /// `v_0 = i` and `v_g = i + 2^{n-2} + ... + 2^{n-1-g}`, and group `g`
    /// joins `v_0, ..., v_{g-1}` to `v_g`.
    pub fn new(n: usize, l: u32, exponent: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::Domain("the construction needs n >= 4".into()));
        }
        let span = 1u64
            .checked_shl(n as u32 - 1)
            .filter(|&s| s < u64::from(u32::MAX))
            .ok_or_else(|| Error::Domain(format!("n = {n} is too large")))?;
        if u64::from(l) <= span {
            return Err(Error::Domain(format!(
                "the construction needs l > 2^(n-1) = {span}"
            )));
        }
        if exponent <= 2 * n {
            return Err(Error::Domain(format!(
                "block exponent must exceed 2n = {}",
                2 * n
            )));
        }
        let span = span as u32;
        let mut edges = Vec::new();
        for i in 2..=l - span + 1 {
            let vertices: Vec<u32> = (0..n)
                .map(|g| i + (1..=g).map(|e| 1u32 << (n - 1 - e)).sum::<u32>())
                .collect();
            for (g, &vg) in vertices.iter().enumerate().skip(1) {
                for &va in &vertices[..g] {
                    edges.push(PlannedEdge {
                        step: i,
                        group: g,
                        u: va,
                        v: vg,
                    });
                }
            }
        }
        Ok(Self {
            n,
            l,
            exponent,
            edges,
        })
    }

    pub fn step_count(&self) -> usize {
        self.edges.iter().map(|e| e.step).collect::<BTreeSet<_>>().len()
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.l).expect("l > 2^(n-1) > 0")
    }

    /// Concatenation of `(a_u a_v)^m` over the edges in order.
    pub fn word(&self) -> Word {
        let letters = self
            .edges
            .iter()
            .flat_map(|e| [e.u, e.v].repeat(self.exponent))
            .collect();
        Word::new(self.alphabet(), letters).expect("plan letters lie in 1..=l")
    }

    /// The blocks as a representative set.
    pub fn representatives(&self) -> RepresentativeSet {
        let alphabet = self.alphabet();
        RepresentativeSet::new(
            self.edges
                .iter()
                .enumerate()
                .map(|(j, e)| PowerOccurrence {
                    position: 2 * self.exponent * j,
                    period: Word::new(alphabet, vec![e.u, e.v]).expect("letters in range"),
                    exponent: self.exponent,
                })
                .collect(),
        )
    }

    /// Number of smaller neighbours of `letter` at step `i`.
    pub fn vertex_type(&self, step: u32, letter: Letter) -> usize {
        self.edges
            .iter()
            .filter(|e| e.step == step && e.v == letter)
            .count()
    }

    /// Endpoint range, primitivity of every period and edge uniqueness.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if e.u == e.v {
                return Err(format!("loop at letter {}", e.u));
            }
            if !(1..=self.l).contains(&e.u) || !(1..=self.l).contains(&e.v) {
                return Err(format!("edge ({}, {}) leaves 1..={}", e.u, e.v, self.l));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(format!("edge ({}, {}) repeats", e.u, e.v));
            }
        }
        Ok(())
    }
}

/// Builds the plan and its word; `exponent` defaults to `2n + 1`.
pub fn generate_extremal(n: usize, l: u32, exponent: Option<usize>) -> Result<(Word, BigStepPlan)> {
    let plan = BigStepPlan::new(n, l, exponent.unwrap_or(2 * n + 1))?;
    Ok((plan.word(), plan))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalCertificate {
    pub n: usize,
    pub l: u32,
    pub edge_count: usize,
    pub distinct_classes: usize,
    pub small_height: SelectiveHeight,
    /// `(l - 2^{n-1})(n-2)(n-3)/2`.
    pub psi_formula: u64,
    /// `(l - 2^{n-1}) n(n-1)/2`, the number of edges in the plan.
    pub literal_count_formula: u64,
    /// Color of each block rotation: vertex type of its first letter, plus one.
    pub type_coloring: ChainColoring,
    pub type_coloring_valid: std::result::Result<(), String>,
    /// Strong n-divisibility over primitive 2-letter periods with exponent `2n`.
    pub strong_division: Option<StrongDivision>,
    /// Longest strictly decreasing selection of block rotations, one per block,
    /// as `(block, offset, rotation text)`.
    pub decreasing_antichain: Vec<(usize, usize, String)>,
    /// Colors used by a minimum chain cover of the block rotations.
    pub chain_cover_colors: usize,
    pub gamma_audit: GammaAudit,
}

impl ExtremalCertificate {
    pub fn height_meets_formula(&self) -> bool {
        self.small_height.height as u64 >= self.psi_formula
    }
}

pub fn certify_extremal(word: &Word, plan: &BigStepPlan) -> Result<ExtremalCertificate> {
    if word.letters() != plan.word().letters() {
        return Err(Error::Domain("word does not match the plan".into()));
    }
    plan.validate().map_err(Error::Domain)?;
    let n = plan.n;
    let l = u64::from(plan.l);
    let small_height = small_selective_height(word, 2, 2 * n);
    let distinct_classes = plan
        .edges
        .iter()
        .map(|e| canonical_rotation(&[e.u, e.v]))
        .collect::<BTreeSet<_>>()
        .len();
    let psi_formula = bounds::psi_lower(n as u64, l)?
        .value
        .try_into()
        .map_err(|_| Error::Domain("psi_lower does not fit in u64".into()))?;
    let literal_count_formula = (l - (1u64 << (n - 1))) * (n as u64) * (n as u64 - 1) / 2;

    let omega = plan.representatives();
    let rp = RepresentativePoset::new(&omega);
    let colors: Vec<usize> = rp
        .origin
        .iter()
        .map(|&(j, o)| {
            let e = plan.edges[j - 1];
            let first = if o == 0 { e.u } else { e.v };
            plan.vertex_type(e.step, first) + 1
        })
        .collect();
    let (type_coloring, type_coloring_valid) = match ChainColoring::from_colors(&rp.poset, colors.clone()) {
        Ok(c) => (c, Ok(())),
        Err(msg) => (
            ChainColoring {
                colors,
                chains: Vec::new(),
            },
            Err(msg),
        ),
    };

    let periods = primitive_periods(plan.alphabet(), 2);
    let strong_division = is_strongly_n_divisible(word, n, &periods, Some(2 * n))?;

    let decreasing_antichain = rp
        .decreasing_antichain()
        .into_iter()
        .map(|e| {
            let (j, o) = rp.origin[e];
            let text = Word::new(plan.alphabet(), rp.poset.elements[e].payload.clone())
                .map(|w| w.to_string())
                .unwrap_or_default();
            (j, o, text)
        })
        .collect();

    let coloring: RepresentativeColoring = match color_representatives(&small_height.witness, n) {
        Ok(c) => c,
        Err(too_large) => too_large.coloring,
    };
    let gamma = build_gamma(&small_height.witness, &coloring)?;
    let gamma_audit = audit_gamma(&gamma, plan.l as usize, n);

    Ok(ExtremalCertificate {
        n,
        l: plan.l,
        edge_count: plan.edges.len(),
        distinct_classes,
        small_height,
        psi_formula,
        literal_count_formula,
        type_coloring,
        type_coloring_valid,
        strong_division,
        decreasing_antichain,
        chain_cover_colors: coloring.coloring.color_count(),
        gamma_audit,
    })
}
