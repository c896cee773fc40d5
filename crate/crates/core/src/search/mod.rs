//! Exact and heuristic extremal search.
//!
//! [`brute_force_ex`] computes `ex(n, H, F)` by walking every `F`-free graph on
//! `n` vertices once per isomorphism class. [`hill_climb`] gives lower bounds
//! where that is out of reach, and [`rebalance_step`] is the part-balancing move
//! on apex-plus-multipartite hosts.

mod checkpoint;
mod climb;
pub mod enumerate;
mod rebalance;

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use checkpoint::Checkpoint;
pub use climb::{hill_climb, hill_climb_with, ClimbOptions, ClimbResult};
pub use rebalance::{rebalance_step, RebalanceOutcome};

use crate::chromatic::ChromaticProfile;
use crate::construct::{kbar, star_free_construction, theorem_construction, turan};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::subgraph::{contains, count_copies, CopyCount};

/// Default order limit for the exhaustive search.
pub const DEFAULT_MAX_ORDER: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    #[serde(with = "crate::report::decimal")]
    pub optimum: CopyCount,
    /// Canonical graph6 strings of every graph attaining the optimum.
    pub witnesses: BTreeSet<String>,
    /// Isomorphism classes generated at order `n`, before the `F` filter.
    pub graphs_enumerated: u64,
    /// `F`-free isomorphism classes at order `n`.
    pub ffree_count: u64,
    /// `H` itself contains `F`, so every `F`-free graph scores zero.
    pub degenerate: bool,
    /// Named constructions of order `n` that were `F`-free and checked against the optimum.
    pub constructions_checked: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Lift the [`DEFAULT_MAX_ORDER`] limit.
    pub allow_large: bool,
    /// Resume from and periodically write to this file.
    pub checkpoint: Option<PathBuf>,
    /// Frontier graphs scored between checkpoint writes.
    pub chunk: Option<usize>,
}

#[derive(Default)]
struct Partial {
    optimum: Option<BigUint>,
    witnesses: BTreeSet<String>,
    enumerated: u64,
    ffree: u64,
}

impl Partial {
    fn offer(&mut self, value: BigUint, witness: String) {
        match &self.optimum {
            Some(best) if value < *best => {}
            Some(best) if value == *best => {
                self.witnesses.insert(witness);
            }
            _ => {
                self.optimum = Some(value);
                self.witnesses = BTreeSet::from([witness]);
            }
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.enumerated += other.enumerated;
        self.ffree += other.ffree;
        match (&self.optimum, other.optimum) {
            (_, None) => {}
            (None, Some(v)) => {
                self.optimum = Some(v);
                self.witnesses = other.witnesses;
            }
            (Some(a), Some(b)) => {
                if b > *a {
                    self.optimum = Some(b);
                    self.witnesses = other.witnesses;
                } else if b == *a {
                    self.witnesses.extend(other.witnesses);
                }
            }
        }
        self
    }
}

/// Scores every `F`-free graph of order `n` below `root`.
fn score_subtree(root: &Graph, n: usize, pattern: &Graph, forbidden: &Graph) -> Partial {
    let mut part = Partial::default();
    if root.order() == n {
        // the root is F-free and canonical by construction
        part.enumerated = 1;
    }
    let mut enumerated = 0u64;
    let mut scored: Vec<(BigUint, String)> = Vec::new();
    enumerate::descend(
        root,
        n,
        Some(forbidden),
        &mut |g| {
            let g6 = graph6::encode(g).expect("small order");
            scored.push((count_copies(pattern, g), g6));
        },
        &mut |k| enumerated += k as u64,
    );
    part.enumerated += enumerated;
    part.ffree = scored.len() as u64;
    for (v, g6) in scored {
        part.offer(v, g6);
    }
    part
}

/// Exact `ex(n, H, F)` with every extremal graph, by exhaustive isomorph-free search.
pub fn brute_force_ex(n: usize, pattern: &Graph, forbidden: &Graph) -> Result<SearchResult> {
    brute_force_ex_with(n, pattern, forbidden, &SearchOptions::default())
}

pub fn brute_force_ex_with(
    n: usize,
    pattern: &Graph,
    forbidden: &Graph,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    if n > DEFAULT_MAX_ORDER && !opts.allow_large {
        return Err(Error::Capacity(format!(
            "exhaustive search above n = {DEFAULT_MAX_ORDER} needs an explicit override (asked for n = {n})"
        )));
    }
    if n > enumerate::MAX_PARENT_ORDER + 1 {
        return Err(Error::Capacity(format!(
            "exhaustive search supports n <= {}",
            enumerate::MAX_PARENT_ORDER + 1
        )));
    }
    let degenerate = contains(pattern, forbidden);
    let pattern_g6 = graph6::encode(pattern)?;
    let forbidden_g6 = graph6::encode(forbidden)?;

    let mut state = match opts.checkpoint.as_deref().filter(|p| p.exists()) {
        Some(path) => {
            let cp = Checkpoint::load(path)?;
            if cp.n != n || cp.pattern != pattern_g6 || cp.forbidden != forbidden_g6 {
                return Err(Error::invalid(format!(
                    "checkpoint {} belongs to a different instance",
                    path.display()
                )));
            }
            cp
        }
        None => {
            let depth = split_depth(n);
            let frontier = enumerate::level(depth, Some(forbidden));
            Checkpoint {
                n,
                pattern: pattern_g6,
                forbidden: forbidden_g6,
                depth,
                optimum: None,
                enumerated: if depth == n { frontier.len() as u64 } else { 0 },
                ffree: 0,
                witnesses: Vec::new(),
                pending: frontier
                    .iter()
                    .map(|g| graph6::encode(g).expect("small order"))
                    .collect(),
            }
        }
    };

    let chunk = opts
        .chunk
        .unwrap_or_else(|| 4 * rayon::current_num_threads())
        .max(1);
    let mut total = Partial {
        optimum: state.optimum.clone(),
        witnesses: state.witnesses.iter().cloned().collect(),
        enumerated: state.enumerated,
        ffree: state.ffree,
    };
    while !state.pending.is_empty() {
        let take = if opts.checkpoint.is_some() {
            chunk
        } else {
            state.pending.len()
        };
        let batch: Vec<String> = state
            .pending
            .drain(..take.min(state.pending.len()))
            .collect();
        let roots = batch
            .iter()
            .map(|g6| graph6::decode(g6))
            .collect::<Result<Vec<_>>>()?;
        let partial = roots
            .par_iter()
            .map(|root| {
                let mut p = score_subtree(root, n, pattern, forbidden);
                if root.order() == n {
                    // level-n roots were counted when the frontier was built
                    p.enumerated -= 1;
                }
                p
            })
            .reduce(Partial::default, Partial::merge);
        total = total.merge(partial);
        state.optimum = total.optimum.clone();
        state.witnesses = total.witnesses.iter().cloned().collect();
        state.enumerated = total.enumerated;
        state.ffree = total.ffree;
        if let Some(path) = &opts.checkpoint {
            state.store(path)?;
        }
    }

    let optimum = total.optimum.unwrap_or_default();
    let mut result = SearchResult {
        optimum,
        witnesses: total.witnesses,
        graphs_enumerated: total.enumerated,
        ffree_count: total.ffree,
        degenerate,
        constructions_checked: 0,
    };
    result.constructions_checked = check_constructions(&result, n, pattern, forbidden)?;
    Ok(result)
}

fn split_depth(n: usize) -> usize {
    n.min(n.saturating_sub(2).max(4))
}

/// Every named construction of order `n` that avoids `F` must score at most the optimum.
fn check_constructions(
    result: &SearchResult,
    n: usize,
    pattern: &Graph,
    forbidden: &Graph,
) -> Result<usize> {
    let mut candidates: Vec<(String, Graph)> = Vec::new();
    for r in 1..=n.max(1) {
        candidates.push((format!("T({n},{r})"), turan(n, r)?));
    }
    for t in 2..=n.max(2) {
        candidates.push((format!("star-free({n},{t})"), star_free_construction(n, t)?));
    }
    for s in 1..=n {
        candidates.push((format!("Kbar({s},{})", n - s), kbar(s, n - s)?));
    }
    if let Ok(profile) = ChromaticProfile::compute(forbidden) {
        if let Ok(g) = theorem_construction(&profile, n) {
            candidates.push(("theorem".into(), g));
        }
    }
    let mut checked = 0;
    for (name, g) in candidates {
        if contains(&g, forbidden) {
            continue;
        }
        checked += 1;
        let value = count_copies(pattern, &g);
        if value > result.optimum {
            return Err(Error::InternalInvariant(format!(
                "construction {name} has {value} copies, above the exhaustive optimum {}",
                result.optimum
            )));
        }
    }
    Ok(checked)
}
