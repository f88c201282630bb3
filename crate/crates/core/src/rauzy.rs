//! Rauzy graphs of a word: vertices are the distinct length-r factors, edges
//! the distinct length-(r+1) factors, and the word itself traces a trajectory.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

pub const DEFAULT_CYCLE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RauzyGraph {
    pub order: usize,
    /// Distinct length-r factors in order of first occurrence.
    pub vertices: Vec<Word>,
    /// Distinct edges `(from, to)` in order of first traversal.
    pub edges: Vec<(usize, usize)>,
    /// Edge index of every step of the sliding window, `|W| - r` in total.
    pub trajectory: Vec<usize>,
}

pub fn build_rauzy(w: &Word, r: usize) -> Result<RauzyGraph> {
    if r == 0 {
        return Err(Error::Domain("the graph order must be positive".into()));
    }
    if w.len() < r {
        return Err(Error::WordTooShort {
            len: w.len(),
            order: r,
        });
    }
    let mut vertex_index: HashMap<&[u32], usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut walk = Vec::with_capacity(w.len() - r + 1);
    for i in 0..=w.len() - r {
        let f = &w[i..i + r];
        let next = vertex_index.len();
        let v = *vertex_index.entry(f).or_insert_with(|| {
            vertices.push(w.factor(i, i + r));
            next
        });
        walk.push(v);
    }
    let mut edge_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let trajectory = walk
        .windows(2)
        .map(|p| {
            let key = (p[0], p[1]);
            let next = edge_index.len();
            *edge_index.entry(key).or_insert_with(|| {
                edges.push(key);
                next
            })
        })
        .collect();
    Ok(RauzyGraph {
        order: r,
        vertices,
        edges,
        trajectory,
    })
}

impl RauzyGraph {
    /// Vertices visited by the sliding window, one more than the step count.
    pub fn walk(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.trajectory.len() + 1);
        match self.trajectory.first() {
            Some(&e) => out.push(self.edges[e].0),
            None if !self.vertices.is_empty() => out.push(0),
            None => {}
        }
        out.extend(self.trajectory.iter().map(|&e| self.edges[e].1));
        out
    }

    /// Simple cycles with fewer than `max_len_exclusive` edges, each listed
    /// from its earliest-occurring vertex.
    pub fn simple_cycles(&self, max_len_exclusive: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut cycles = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; n];
        for anchor in 0..n {
            path.push(anchor);
            on_path[anchor] = true;
            self.extend(
                anchor,
                &adj,
                max_len_exclusive,
                cap,
                &mut path,
                &mut on_path,
                &mut cycles,
            )?;
            on_path[anchor] = false;
            path.pop();
        }
        Ok(cycles)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        anchor: usize,
        adj: &[Vec<usize>],
        max_len_exclusive: usize,
        cap: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        cycles: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let last = *path.last().expect("path starts at the anchor");
        for &next in &adj[last] {
            if next == anchor {
                if path.len() < max_len_exclusive {
                    if cycles.len() >= cap {
                        return Err(Error::CycleCapExceeded { cap });
                    }
                    cycles.push(path.clone());
                }
            } else if next > anchor && !on_path[next] && path.len() + 1 < max_len_exclusive {
                path.push(next);
                on_path[next] = true;
                self.extend(anchor, adj, max_len_exclusive, cap, path, on_path, cycles)?;
                on_path[next] = false;
                path.pop();
            }
        }
        Ok(())
    }

    /// Times the walk starts at the cycle's anchor and follows the whole cycle back to it.
    pub fn traversals(&self, cycle: &[usize]) -> usize {
        let walk = self.walk();
        let len = cycle.len();
        if len == 0 || walk.len() <= len {
            return 0;
        }
        (0..walk.len() - len)
            .filter(|&i| (0..=len).all(|k| walk[i + k] == cycle[k % len]))
            .count()
    }

    /// How often the trajectory crosses each distinct edge.
    pub fn edge_multiplicity(&self) -> Vec<usize> {
        let mut counts = vec![0; self.edges.len()];
        for &e in &self.trajectory {
            counts[e] += 1;
        }
        counts
    }

    /// DOT rendering; edge width is the number of crossings by the trajectory.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph \"rauzy{}\" {{\n", self.order);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{v}\"];");
        }
        for ((a, b), m) in self.edges.iter().zip(self.edge_multiplicity()) {
            let _ = writeln!(out, "  v{a} -> v{b} [penwidth={m}];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTraversal {
    /// Vertex texts, starting at the anchor.
    pub vertices: Vec<String>,
    pub length: usize,
    pub traversals: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleStats {
    pub order: usize,
    pub max_cycle_len: usize,
    pub threshold: usize,
    pub steps: usize,
    pub distinct_edges: usize,
    pub cycles: Vec<CycleTraversal>,
    /// Cycles traversed more than `threshold` times.
    pub over_threshold: usize,
}

/// Simple cycles with fewer than `n` edges and how often the trajectory completes each.
pub fn trajectory_cycle_stats(w: &Word, r: usize, n: usize, d: usize) -> Result<CycleStats> {
    trajectory_cycle_stats_with_cap(w, r, n, d, DEFAULT_CYCLE_CAP)
}

pub fn trajectory_cycle_stats_with_cap(
    w: &Word,
    r: usize,
    n: usize,
    d: usize,
    cap: usize,
) -> Result<CycleStats> {
    let g = build_rauzy(w, r)?;
    let cycles: Vec<CycleTraversal> = g
        .simple_cycles(n, cap)?
        .into_iter()
        .map(|c| CycleTraversal {
            vertices: c.iter().map(|&v| g.vertices[v].to_string()).collect(),
            length: c.len(),
            traversals: g.traversals(&c),
        })
        .collect();
    Ok(CycleStats {
        order: r,
        max_cycle_len: n,
        threshold: d,
        steps: g.trajectory.len(),
        distinct_edges: g.edges.len(),
        over_threshold: cycles.iter().filter(|c| c.traversals > d).count(),
        cycles,
    })
}
