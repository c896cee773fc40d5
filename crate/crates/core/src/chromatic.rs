//! Chromatic number, optimal colorings and the parameters derived from them:
//! the smallest achievable color class and the family of bipartite graphs
//! spanned by two classes of an optimal coloring.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bitset;
use crate::canon::canonical_form;
use crate::error::Result;
use crate::graph::Graph;

/// A partition of the vertex set into independent sets. Classes are sorted
/// internally and listed by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProperColoring {
    pub classes: Vec<Vec<usize>>,
}

impl ProperColoring {
    pub fn from_colors(colors: &[usize]) -> Self {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        classes.sort();
        ProperColoring { classes }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class sizes, ascending.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.order()];
        for class in &self.classes {
            for (i, &u) in class.iter().enumerate() {
                if u >= g.order() || seen[u] {
                    return false;
                }
                seen[u] = true;
                if class[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s) && self.classes.iter().all(|c| !c.is_empty())
    }
}

/// χ, σ and the two-class family of a graph, plus the class-size multiset of
/// every optimal coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticProfile {
    pub chi: usize,
    pub sigma: usize,
    /// Canonical graph6 strings of the bipartite graphs induced by two classes.
    pub pair_family: BTreeSet<String>,
    /// Ascending class sizes of each optimal coloring, deduplicated.
    pub class_size_profiles: BTreeSet<Vec<usize>>,
}

impl ChromaticProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        let chi = chromatic_number(g);
        let mut sigma = usize::MAX;
        let mut pair_family = BTreeSet::new();
        let mut class_size_profiles = BTreeSet::new();
        for coloring in OptimalColorings::with_chi(g, chi) {
            let sizes = coloring.class_sizes();
            sigma = sigma.min(sizes.first().copied().unwrap_or(0));
            class_size_profiles.insert(sizes);
            collect_pairs(g, &coloring, &mut pair_family)?;
        }
        Ok(ChromaticProfile {
            chi,
            sigma: if sigma == usize::MAX { 0 } else { sigma },
            pair_family,
            class_size_profiles,
        })
    }

    /// Smallest second class size over optimal colorings whose smallest class has size σ.
    pub fn partner_class_size(&self) -> Option<usize> {
        self.class_size_profiles
            .iter()
            .filter(|p| p.first() == Some(&self.sigma))
            .filter_map(|p| p.get(1).copied())
            .min()
    }
}

fn collect_pairs(g: &Graph, coloring: &ProperColoring, out: &mut BTreeSet<String>) -> Result<()> {
    let k = coloring.classes.len();
    for i in 0..k {
        for j in i + 1..k {
            let mut vs: Vec<usize> = coloring.classes[i]
                .iter()
                .chain(&coloring.classes[j])
                .copied()
                .collect();
            vs.sort_unstable();
            out.insert(canonical_form(&g.induced(&vs))?);
        }
    }
    Ok(())
}

/// Exact chromatic number. The order-0 graph has χ = 0.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lower = clique_number(g);
    let upper = greedy_coloring_size(g);
    let order = search_order(g);
    (lower..upper)
        .find(|&k| {
            let mut colors = vec![usize::MAX; n];
            colorable(g, &order, 0, k, 0, &mut colors)
        })
        .unwrap_or(upper)
}

/// Every proper coloring with exactly χ(G) classes, each partition once.
pub fn enumerate_optimal_colorings(g: &Graph) -> OptimalColorings<'_> {
    OptimalColorings::with_chi(g, chromatic_number(g))
}

/// Smallest class size achievable in an optimal coloring.
pub fn sigma(g: &Graph) -> usize {
    enumerate_optimal_colorings(g)
        .filter_map(|c| c.class_sizes().first().copied())
        .min()
        .unwrap_or(0)
}

/// Bipartite graphs induced on pairs of classes of optimal colorings, as
/// canonical graph6 strings. Empty when χ < 2.
pub fn pair_family(g: &Graph) -> Result<BTreeSet<String>> {
    let mut out = BTreeSet::new();
    for coloring in enumerate_optimal_colorings(g) {
        collect_pairs(g, &coloring, &mut out)?;
    }
    Ok(out)
}

pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, cand: &mut [u64], size: usize, best: &mut usize) {
        if bitset::is_empty(cand) {
            *best = (*best).max(size);
            return;
        }
        while !bitset::is_empty(cand) {
            if size + bitset::count(cand) <= *best {
                return;
            }
            let v = bitset::iter(cand).next().unwrap();
            bitset::remove(cand, v);
            let mut next = cand.to_vec();
            bitset::and_assign(&mut next, g.row(v));
            grow(g, &mut next, size + 1, best);
        }
    }
    let mut all = vec![0u64; g.words()];
    bitset::fill(&mut all, g.order());
    let mut best = 0;
    grow(g, &mut all, 0, &mut best);
    best
}

/// Size of a DSATUR-style greedy coloring.
fn greedy_coloring_size(g: &Graph) -> usize {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut sat: Vec<usize> = g
                    .neighbors(v)
                    .filter_map(|u| (colors[u] != usize::MAX).then_some(colors[u]))
                    .collect();
                sat.sort_unstable();
                sat.dedup();
                (sat.len(), g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        let c = (0..)
            .find(|&c| g.neighbors(v).all(|u| colors[u] != c))
            .unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Vertices ordered so each next vertex has the most already-ordered neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = g.neighbors(v).filter(|&u| placed[u]).count();
                (back, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    order
}

fn colorable(
    g: &Graph,
    order: &[usize],
    i: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).all(|u| colors[u] != c) {
            colors[v] = c;
            if colorable(g, order, i + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Iterator over partitions of the vertex set into exactly `k` independent
/// sets. Vertices are colored in index order and a new color may only be
/// opened by the lowest vertex of its class, so each partition appears once.
pub struct OptimalColorings<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    masks: Vec<Vec<u64>>,
    /// `used[v]`: colors opened by vertices before `v`.
    used: Vec<usize>,
    next_try: Vec<usize>,
    depth: usize,
    done: bool,
}

impl<'a> OptimalColorings<'a> {
    /// Partitions into exactly `k` classes; with `k = χ(G)` these are the optimal colorings.
    pub fn with_chi(g: &'a Graph, k: usize) -> Self {
        let n = g.order();
        OptimalColorings {
            g,
            k,
            colors: vec![usize::MAX; n],
            masks: vec![vec![0u64; g.words()]; k],
            used: vec![0; n + 1],
            next_try: vec![0; n + 1],
            depth: 0,
            done: k == 0 && n > 0,
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        bitset::remove(&mut self.masks[c], v);
        self.colors[v] = usize::MAX;
    }
}

impl Iterator for OptimalColorings<'_> {
    type Item = ProperColoring;

    fn next(&mut self) -> Option<ProperColoring> {
        let n = self.g.order();
        loop {
            if self.done {
                return None;
            }
            if self.depth == n {
                let out = ProperColoring::from_colors(&self.colors);
                if n == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                    self.unassign(self.depth);
                }
                return Some(out);
            }
            let v = self.depth;
            let used = self.used[v];
            let limit = (used + 1).min(self.k);
            let mut placed = false;
            while self.next_try[v] < limit {
                let c = self.next_try[v];
                self.next_try[v] += 1;
                if bitset::intersects(self.g.row(v), &self.masks[c]) {
                    continue;
                }
                let opened = used.max(c + 1);
                if n - v - 1 < self.k - opened {
                    continue;
                }
                self.colors[v] = c;
                bitset::insert(&mut self.masks[c], v);
                self.used[v + 1] = opened;
                self.next_try[v + 1] = 0;
                self.depth += 1;
                placed = true;
                break;
            }
            if !placed {
                if v == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.unassign(self.depth);
            }
        }
    }
}
