//! Randomized local search for `F`-free graphs with many copies of `H`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::{contains, contains_through_edge, count_copies, CopyCount};

#[derive(Clone, Debug)]
pub struct ClimbOptions {
    pub steps: usize,
    pub restarts: usize,
    pub seed: u64,
    /// F-free starting graph for restart 0; the others start empty.
    pub start: Option<Graph>,
}

impl Default for ClimbOptions {
    fn default() -> Self {
        ClimbOptions {
            steps: 10_000,
            restarts: 4,
            seed: 0,
            start: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClimbResult {
    pub graph: Graph,
    pub count: CopyCount,
    pub restart: usize,
    pub accepted_moves: usize,
}

pub fn hill_climb(
    n: usize,
    pattern: &Graph,
    forbidden: &Graph,
    steps: usize,
    restarts: usize,
    seed: u64,
) -> Result<ClimbResult> {
    let opts = ClimbOptions {
        steps,
        restarts,
        seed,
        start: None,
    };
    hill_climb_with(n, pattern, forbidden, &opts)
}

/// Best result over `restarts` independent climbs; ties go to the lowest restart index,
/// so the outcome depends only on the seed.
pub fn hill_climb_with(
    n: usize,
    pattern: &Graph,
    forbidden: &Graph,
    opts: &ClimbOptions,
) -> Result<ClimbResult> {
    if forbidden.edge_count() == 0 && forbidden.order() <= n {
        return Err(Error::invalid(format!(
            "every graph on {n} vertices contains the edgeless graph on {} vertices",
            forbidden.order()
        )));
    }
    if let Some(start) = &opts.start {
        if start.order() != n {
            return Err(Error::invalid(format!(
                "starting graph has {} vertices, expected {n}",
                start.order()
            )));
        }
        if contains(start, forbidden) {
            return Err(Error::invalid(
                "starting graph contains the forbidden graph",
            ));
        }
    }
    let restarts = opts.restarts.max(1);
    let runs: Vec<ClimbResult> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let start = match (&opts.start, r) {
                (Some(g), 0) => g.clone(),
                _ => Graph::empty(n),
            };
            climb_once(
                start,
                pattern,
                forbidden,
                opts.steps,
                opts.seed.wrapping_add(r as u64),
                r,
            )
        })
        .collect();
    let mut best = runs.into_iter();
    let first = best.next().expect("at least one restart");
    Ok(best.fold(first, |a, b| if b.count > a.count { b } else { a }))
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let u = rng.random_range(0..n);
    let mut v = rng.random_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u.min(v), u.max(v))
}

fn random_pair_where(rng: &mut ChaCha8Rng, g: &Graph, want_edge: bool) -> Option<(usize, usize)> {
    let n = g.order();
    let total = n * (n - 1) / 2;
    let have = g.edge_count();
    let available = if want_edge { have } else { total - have };
    if available == 0 {
        return None;
    }
    loop {
        let (u, v) = random_pair(rng, n);
        if g.has_edge(u, v) == want_edge {
            return Some((u, v));
        }
    }
}

fn climb_once(
    mut g: Graph,
    pattern: &Graph,
    forbidden: &Graph,
    steps: usize,
    seed: u64,
    restart: usize,
) -> ClimbResult {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut count = count_copies(pattern, &g);
    let mut accepted = 0;
    if n < 2 {
        return ClimbResult {
            graph: g,
            count,
            restart,
            accepted_moves: 0,
        };
    }
    for _ in 0..steps {
        let mut next = g.clone();
        match rng.random_range(0..3u8) {
            0 => {
                let Some((u, v)) = random_pair_where(&mut rng, &g, false) else {
                    continue;
                };
                next.add_edge(u, v);
                if contains_through_edge(&next, forbidden, u, v) {
                    continue;
                }
            }
            1 => {
                let Some((u, v)) = random_pair_where(&mut rng, &g, true) else {
                    continue;
                };
                next.remove_edge(u, v);
            }
            _ => {
                let (Some((a, b)), Some((u, v))) = (
                    random_pair_where(&mut rng, &g, true),
                    random_pair_where(&mut rng, &g, false),
                ) else {
                    continue;
                };
                next.remove_edge(a, b);
                next.add_edge(u, v);
                if contains_through_edge(&next, forbidden, u, v) {
                    continue;
                }
            }
        }
        let value = count_copies(pattern, &next);
        if value >= count {
            g = next;
            count = value;
            accepted += 1;
            debug_assert!(
                !contains(&g, forbidden),
                "accepted move created the forbidden graph"
            );
        }
    }
    ClimbResult {
        graph: g,
        count,
        restart,
        accepted_moves: accepted,
    }
}
