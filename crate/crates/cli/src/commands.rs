use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Subcommand;
use serde::Serialize;
use serde_json::json;

use shirshov::divisibility::primitive_periods;
use shirshov::encoding::{
    is_n_good_with_cap, padding_exponent, pair_encode_with_alignment, DEFAULT_SEARCH_CAP,
};
use shirshov::proof_graph::TriangleViolation;
use shirshov::rauzy::trajectory_cycle_stats_with_cap;
use shirshov::rauzy::DEFAULT_CYCLE_CAP;
use shirshov::verify::{run_suite, Scale, Suite, SuiteReport};
use shirshov::{
    audit_cycle_graph, audit_gamma, beth_empirical, bound_table, build_cycle_graph, build_gamma, build_rauzy,
    build_triangle_graph, certify_extremal, check_triangle_lemma, color_representatives, generate_extremal,
    is_n_divisible, is_strongly_n_divisible, large_selective_height, pad_encode, pair_encode,
    reduce_multiedges, small_selective_height, Alphabet, BoundReport, CycleAudit, CycleClassFamily,
    GammaAudit, Goodness, Pairing, ProofGraph, RepresentativeSet, Word, WordFormat,
};

use crate::input::WordOpts;
use crate::output::{Report, Status};
use crate::{Cli, Command};

#[derive(Debug, Subcommand)]
pub enum EncodeKind {
    /// Replace adjacent letter pairs by letters of the squared alphabet.
    Pair {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Start every pair at this 0-based parity; by default the parity is
        /// aligned with an antichain of the source when one exists.
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=1))]
        offset: Option<u64>,
    },
    /// Shift letters up and pad each cycle with a new least letter to length 2^s.
    Pad {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Padding exponent (default: least s with 2^s >= t).
        #[arg(long)]
        s: Option<u32>,
    },
}

pub fn run(cli: &Cli) -> Result<Report> {
    let opts = &cli.words;
    let budget = cli.budget;
    match &cli.command {
        Command::Divide {
            source,
            n,
            strong,
            periods,
            exp,
        } => divide(
            opts,
            &source.load(opts)?,
            *n as usize,
            strong.then_some((*periods, *exp)),
        ),
        Command::Height {
            source,
            period_len,
            exp,
            large,
        } => height(
            opts,
            &source.load(opts)?,
            *period_len as usize,
            *exp,
            *large,
            budget,
        ),
        Command::Omega {
            source,
            period_len,
            n,
            exp,
        } => omega(opts, &source.load(opts)?, *period_len as usize, *n as usize, *exp),
        Command::Rauzy {
            source,
            order,
            max_cycle,
            threshold,
            dot,
        } => rauzy(
            &source.load(opts)?,
            *order as usize,
            *max_cycle,
            *threshold,
            dot.as_ref(),
            budget,
        ),
        Command::Extremal { n, l, exp, word_out } => extremal(opts, *n, *l, *exp, word_out.as_ref()),
        Command::Encode { kind } => encode(kind, budget),
        Command::BethSearch { t, l, n, cap } => beth_search(*t, *l, *n, *cap, budget),
        Command::Bounds { l, n, m, d, grid } => bounds(*l, *n, *m, *d, *grid),
        Command::Verify { suite, scale } => verify(suite, scale, cli.seed),
    }
}

fn divide(opts: &WordOpts, w: &Word, n: usize, strong: Option<(usize, Option<usize>)>) -> Result<Report> {
    let render_factors = |cuts: &[usize]| -> Vec<String> {
        cuts.windows(2)
            .map(|c| opts.render_letters(&w[c[0]..c[1]]))
            .collect()
    };
    match strong {
        None => {
            let division = is_n_divisible(w, n)?;
            let factors = division.as_ref().map(|d| render_factors(&d.cuts));
            let text = match (&division, &factors) {
                (Some(d), Some(f)) => format!(
                    "{n}-divisible: prefix \"{}\", factors {}\n",
                    opts.render_letters(d.prefix(w)),
                    f.join(" > ")
                ),
                _ => "none\n".to_string(),
            };
            let body = json!({
                "word": opts.render(w),
                "n": n,
                "strong": false,
                "divisible": division.is_some(),
                "division": division,
                "factors": factors,
            });
            Report::new("divide", Status::from_bool(division.is_some()), &body, text)
        }
        Some((len, exp)) => {
            let periods = primitive_periods(w.alphabet(), len);
            if periods.is_empty() {
                bail!(
                    "no primitive periods of length {len} over {} letters",
                    w.alphabet().size()
                );
            }
            let found = is_strongly_n_divisible(w, n, &periods, exp)?;
            let exponent = exp.unwrap_or(2 * n);
            let text = match &found {
                Some(sd) => format!(
                    "strongly {n}-divisible with periods {}: {}\n",
                    sd.periods
                        .iter()
                        .map(|z| opts.render(z))
                        .collect::<Vec<_>>()
                        .join(", "),
                    render_factors(&sd.division.cuts).join(" > ")
                ),
                None => "none\n".to_string(),
            };
            let body = json!({
                "word": opts.render(w),
                "n": n,
                "strong": true,
                "period_len": len,
                "exponent": exponent,
                "divisible": found.is_some(),
                "division": found.as_ref().map(|sd| &sd.division),
                "periods": found.as_ref().map(|sd| sd.periods.iter().map(|z| opts.render(z)).collect::<Vec<_>>()),
                "factors": found.as_ref().map(|sd| render_factors(&sd.division.cuts)),
            });
            Report::new("divide", Status::from_bool(found.is_some()), &body, text)
        }
    }
}

#[derive(Serialize)]
struct Block {
    position: usize,
    period: String,
    exponent: usize,
}

fn blocks(opts: &WordOpts, omega: &RepresentativeSet) -> Vec<Block> {
    omega
        .representatives
        .iter()
        .map(|r| Block {
            position: r.position,
            period: opts.render(&r.period),
            exponent: r.exponent,
        })
        .collect()
}

fn blocks_text(blocks: &[Block]) -> String {
    let mut out = String::new();
    for (j, b) in blocks.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {:>3}: ({})^{} at {}",
            j + 1,
            b.period,
            b.exponent,
            b.position
        );
    }
    out
}

fn height(opts: &WordOpts, w: &Word, t: usize, k: usize, large: bool, budget: Option<u64>) -> Result<Report> {
    if large {
        let (h, witness) = large_selective_height(w, t, k);
        let witness = blocks(opts, &RepresentativeSet::new(witness));
        let text = format!("large selective height {h}\n{}", blocks_text(&witness));
        let body = json!({ "word_length": w.len(), "period_len": t, "exp": k, "large": true,
            "height": h, "witness": witness });
        return Report::new("height", Status::Found, &body, text);
    }
    let h = match budget {
        Some(b) => shirshov::power::small_selective_height_with_budget(w, t, k, b),
        None => small_selective_height(w, t, k),
    };
    let witness = blocks(opts, &h.witness);
    let text = format!(
        "small selective height {}{}\n{}",
        h.height,
        if h.exact {
            ""
        } else {
            " (lower bound, budget exhausted)"
        },
        blocks_text(&witness)
    );
    let body = json!({ "word_length": w.len(), "period_len": t, "exp": k, "large": false,
        "height": h.height, "exact": h.exact, "witness": witness });
    Report::new("height", Status::Found, &body, text)
}

#[derive(Serialize)]
#[serde(tag = "graph", rename_all = "snake_case")]
enum GraphAudit {
    Gamma(GammaAudit),
    Triangle {
        violation: Option<TriangleViolation>,
        missing_weights: Vec<usize>,
    },
    Cycle(CycleAudit),
}

fn omega(opts: &WordOpts, w: &Word, t: usize, n: usize, exp: Option<usize>) -> Result<Report> {
    let k = exp.unwrap_or(2 * n);
    let l = w.alphabet().size() as usize;
    let h = small_selective_height(w, t, k);
    let periods = primitive_periods(w.alphabet(), t);
    let strong = if periods.is_empty() {
        None
    } else {
        is_strongly_n_divisible(w, n, &periods, Some(k))?
    };
    let reps = blocks(opts, &h.witness);
    let (coloring, antichain) = match color_representatives(&h.witness, n) {
        Ok(c) => (c, None),
        Err(too_large) => {
            let antichain = json!({
                "members": too_large.antichain,
                "payloads": too_large.payloads.iter().map(|p| opts.render_letters(p)).collect::<Vec<_>>(),
                "distinct_representatives": too_large.distinct_representatives,
            });
            (too_large.coloring, Some(antichain))
        }
    };
    let colors: Vec<Vec<usize>> = h
        .witness
        .iter()
        .map(|(j, r)| {
            (0..r.period.len())
                .filter_map(|o| coloring.color_of(j, o))
                .collect()
        })
        .collect();
    let (graph, audit, passes): (ProofGraph, GraphAudit, bool) = match t {
        2 => {
            let g = build_gamma(&h.witness, &coloring)?;
            let a = audit_gamma(&g, l, n);
            let ok = a.passes();
            (g, GraphAudit::Gamma(a), ok)
        }
        3 => {
            let g = build_triangle_graph(&h.witness, &coloring)?;
            let violation = check_triangle_lemma(&g);
            let reduced = reduce_multiedges(&g);
            let ok = violation.is_none() && reduced.missing_weights.is_empty();
            (
                g,
                GraphAudit::Triangle {
                    violation,
                    missing_weights: reduced.missing_weights,
                },
                ok,
            )
        }
        _ => {
            let g = build_cycle_graph(&h.witness, &coloring)?;
            let a = audit_cycle_graph(&g, l, n);
            let ok = a.passes();
            (g, GraphAudit::Cycle(a), ok)
        }
    };
    let colors_used = coloring.coloring.color_count();
    let ok = passes && antichain.is_none();
    let mut text = format!(
        "{} representatives (height {}{}), {} colors\n{}",
        reps.len(),
        h.height,
        if h.exact { "" } else { ", lower bound" },
        colors_used,
        blocks_text(&reps)
    );
    let _ = writeln!(text, "audit: {}", if ok { "pass" } else { "violation" });
    if antichain.is_some() {
        let _ = writeln!(text, "  antichain of size >= {n} among the period rotations");
    }
    if let Some(sd) = &strong {
        let _ = writeln!(text, "  strongly {n}-divisible at cuts {:?}", sd.division.cuts);
    }
    let body = json!({
        "word_length": w.len(),
        "period_len": t,
        "n": n,
        "exp": k,
        "height": h.height,
        "exact": h.exact,
        "representatives": reps,
        "colors": colors,
        "colors_used": colors_used,
        "antichain": antichain,
        "audit": audit,
        "passes": ok,
        "strong_division": strong.as_ref().map(|sd| json!({
            "cuts": sd.division.cuts,
            "periods": sd.periods.iter().map(|z| opts.render(z)).collect::<Vec<_>>(),
            "exponent": sd.exponent,
        })),
    });
    Ok(Report::new("omega", Status::from_bool(ok), &body, text)?.with_dot(graph.to_dot()))
}

fn rauzy(
    w: &Word,
    r: usize,
    max_cycle: usize,
    threshold: usize,
    dot: Option<&PathBuf>,
    budget: Option<u64>,
) -> Result<Report> {
    let g = build_rauzy(w, r)?;
    let cap = budget.map_or(DEFAULT_CYCLE_CAP, |b| b as usize);
    let stats = trajectory_cycle_stats_with_cap(w, r, max_cycle, threshold, cap)?;
    if let Some(path) = dot {
        fs::write(path, g.to_dot()).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut text = format!(
        "order {r}: {} vertices, {} edges, {} steps\n{} cycles shorter than {max_cycle}, {} traversed more than {threshold} times\n",
        g.vertices.len(),
        g.edges.len(),
        stats.steps,
        stats.cycles.len(),
        stats.over_threshold
    );
    for c in &stats.cycles {
        let _ = writeln!(text, "  {} x{}", c.vertices.join(" -> "), c.traversals);
    }
    let body = json!({ "vertices": g.vertices.len(), "stats": stats });
    Ok(Report::new("rauzy", Status::Found, &body, text)?.with_dot(g.to_dot()))
}

fn extremal(
    opts: &WordOpts,
    n: usize,
    l: u32,
    exp: Option<usize>,
    word_out: Option<&PathBuf>,
) -> Result<Report> {
    let (w, plan) = generate_extremal(n, l, exp)?;
    let cert = certify_extremal(&w, &plan)?;
    let rendered = opts.render(&w);
    if let Some(path) = word_out {
        fs::write(path, format!("{rendered}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    let ok = cert.height_meets_formula();
    let text = format!(
        "n = {n}, l = {l}: {} blocks, {} distinct classes, word length {}\n\
         small selective height {} (formula {}, {})\n\
         strongly {n}-divisible: {}\n\
         decreasing rotations: {}, chain cover colors: {}\n",
        cert.edge_count,
        cert.distinct_classes,
        w.len(),
        cert.small_height.height,
        cert.psi_formula,
        if ok { "met" } else { "not met" },
        cert.strong_division
            .as_ref()
            .map_or("no".to_string(), |sd| format!("yes, cuts {:?}", sd.division.cuts)),
        cert.decreasing_antichain.len(),
        cert.chain_cover_colors,
    );
    let body = json!({
        "word": if word_out.is_some() { None } else { Some(rendered) },
        "word_file": word_out,
        "word_length": w.len(),
        "plan": plan,
        "certificate": cert,
    });
    Report::new("extremal", Status::from_bool(ok), &body, text)
}

fn load_family(path: &PathBuf) -> Result<CycleClassFamily> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing family {}", path.display()))
}

fn goodness(x: &CycleClassFamily, n: usize, budget: Option<u64>) -> Result<Goodness> {
    Ok(is_n_good_with_cap(x, n, budget.unwrap_or(DEFAULT_SEARCH_CAP))?)
}

fn encode(kind: &EncodeKind, budget: Option<u64>) -> Result<Report> {
    match kind {
        EncodeKind::Pair { family, n, offset } => {
            let x = load_family(family)?;
            let before = goodness(&x, *n, budget)?;
            let (y, offset) = match (offset, &before.antichain) {
                (Some(o), _) => (
                    pair_encode(&x, &Pairing::uniform(*o as usize, x.len()))?,
                    *o as usize,
                ),
                (None, Some(antichain)) => {
                    let aligned = pair_encode_with_alignment(&x, antichain)?;
                    (aligned.family, aligned.offset)
                }
                (None, None) => (pair_encode(&x, &Pairing::uniform(0, x.len()))?, 0),
            };
            let after = goodness(&y, *n, budget)?;
            let ok = !before.good || after.good;
            let text = format!(
                "pair encoding at offset {offset}: source {n}-good = {}, image {n}-good = {}\n",
                before.good, after.good
            );
            let body = json!({ "n": n, "offset": offset, "source": x, "encoded": y,
                "source_goodness": before, "encoded_goodness": after, "lemma_holds": ok });
            Report::new("encode-pair", Status::from_bool(ok), &body, text)
        }
        EncodeKind::Pad { family, n, s } => {
            let x = load_family(family)?;
            let s = s.unwrap_or_else(|| padding_exponent(x.t()));
            let y = pad_encode(&x, s)?;
            let target = (1usize << s) * (n - 1) + 1;
            let before = goodness(&x, *n, budget)?;
            let after = goodness(&y, target, budget)?;
            let ok = !before.good || after.good;
            let text = format!(
                "padding to length {}: source {n}-good = {}, image {target}-good = {}\n",
                y.t(),
                before.good,
                after.good
            );
            let body = json!({ "n": n, "s": s, "target_n": target, "source": x, "encoded": y,
                "source_goodness": before, "encoded_goodness": after, "lemma_holds": ok });
            Report::new("encode-pad", Status::from_bool(ok), &body, text)
        }
    }
}

fn beth_search(t: usize, l: u32, n: usize, cap: usize, budget: Option<u64>) -> Result<Report> {
    let est = beth_empirical(t, l, n, cap, budget.unwrap_or(DEFAULT_SEARCH_CAP))?;
    let mut text = format!(
        "largest {n}-good family of {t}-cycles over {l} letters found: {}{}\n",
        est.value,
        if est.exhaustive {
            " (exhaustive up to the cap)"
        } else {
            " (budget exhausted, lower bound)"
        }
    );
    if let Some(f) = &est.family {
        let format = WordFormat::for_alphabet(Alphabet::new(l)?);
        for (i, c) in f.cycles().iter().enumerate() {
            let _ = writeln!(text, "  {}: {}", i + 1, format.render(c));
        }
    }
    Report::new("beth-search", Status::Found, &est, text)
}

fn bounds(l: u64, n: u64, m: u64, d: u64, grid: bool) -> Result<Report> {
    let cells: Vec<(u64, u64)> = if grid {
        (2..=l).flat_map(|a| (2..=n).map(move |b| (a, b))).collect()
    } else {
        vec![(l, n)]
    };
    let mut rows: Vec<serde_json::Value> = Vec::new();
    let mut text = String::new();
    for (a, b) in cells {
        let table: Vec<BoundReport> = bound_table(a, b, m, d);
        let _ = writeln!(text, "l = {a}, n = {b}, m = {m}, d = {d}");
        for r in &table {
            let value = r.value.to_string();
            let shown = if value.len() > 40 {
                format!("{}... ({} digits)", &value[..20], r.digits)
            } else {
                value
            };
            let params: Vec<String> = r
                .params
                .iter()
                .map(|p| format!("{}={}", p.name, p.value))
                .collect();
            let _ = writeln!(
                text,
                "  {:<14} {:<14} {:<40} {:?}",
                r.name,
                params.join(","),
                shown,
                r.rounding
            );
        }
        rows.push(json!({ "l": a, "n": b, "m": m, "d": d, "bounds": table }));
    }
    Report::new("bounds", Status::Found, &json!({ "rows": rows }), text)
}

fn verify(suite: &str, scale: &str, seed: u64) -> Result<Report> {
    let scale: Scale = scale.parse().map_err(anyhow::Error::msg)?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(anyhow::Error::msg)?]
    };
    let reports: Vec<SuiteReport> = suites
        .into_iter()
        .map(|s| run_suite(s, scale, seed))
        .collect::<shirshov::Result<_>>()?;
    let ok = reports.iter().all(SuiteReport::passes);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(
            text,
            "{} {:<13} checked {:>6} skipped {:>5} violations {:>3} ({} ms)",
            if r.passes() { "PASS" } else { "FAIL" },
            r.suite.name(),
            r.checked,
            r.skipped,
            r.violations.len(),
            r.elapsed_ms
        );
        for note in &r.notes {
            let _ = writeln!(text, "     {note}");
        }
    }
    let body = json!({ "seed": seed, "passes": ok, "suites": reports });
    Report::new("verify", Status::from_bool(ok), &body, text)
}
