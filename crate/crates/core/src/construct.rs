//! Named host graphs: Turán graphs, joins, complete multipartite graphs and
//! the apex-plus-multipartite shape `K_c + K_{m_1,...,m_r}`.
//!
//! Every realized construction labels apex vertices first (`0..c`) and then
//! the parts in the order given.

use serde::{Deserialize, Serialize};

use crate::chromatic::ChromaticProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Symbolic form of `K_c + K_{m_1,...,m_r}`: a clique of `apex_clique`
/// universal vertices joined to a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionDescriptor {
    pub apex_clique: usize,
    pub part_sizes: Vec<usize>,
}

impl ConstructionDescriptor {
    pub fn new(apex_clique: usize, part_sizes: Vec<usize>) -> Self {
        ConstructionDescriptor {
            apex_clique,
            part_sizes,
        }
    }

    /// `K_c + T(m, r)`.
    pub fn apex_turan(apex_clique: usize, m: usize, r: usize) -> Result<Self> {
        Ok(ConstructionDescriptor::new(
            apex_clique,
            turan_part_sizes(m, r)?,
        ))
    }

    pub fn order(&self) -> usize {
        self.apex_clique + self.part_sizes.iter().sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        let n = self.order();
        let c = self.apex_clique;
        let inside: usize = self
            .part_sizes
            .iter()
            .map(|&m| m * m.saturating_sub(1) / 2)
            .sum();
        c * c.saturating_sub(1) / 2 + c * (n - c) + pairs(n - c) - inside
    }

    /// Vertex ranges of the parts in the realized graph.
    pub fn part_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = self.apex_clique;
        self.part_sizes
            .iter()
            .map(|&m| {
                let r = start..start + m;
                start += m;
                r
            })
            .collect()
    }

    pub fn realize(&self) -> Graph {
        let n = self.order();
        let c = self.apex_clique;
        let mut part_of = vec![usize::MAX; n];
        for (p, range) in self.part_ranges().into_iter().enumerate() {
            for v in range {
                part_of[v] = p;
            }
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if u < c || part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Part orders of `T(n, r)`: the first `n mod r` parts get `ceil(n / r)`.
pub fn turan_part_sizes(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 {
        return Err(Error::invalid("Turán graph needs at least one part"));
    }
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|i| q + usize::from(i < rem)).collect())
}

/// The Turán graph `T(n, r)`.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    Ok(ConstructionDescriptor::new(0, turan_part_sizes(n, r)?).realize())
}

/// `G + G'`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = g.disjoint_union(h);
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.add_edge(u, g.order() + v);
        }
    }
    out
}

pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if let Some(i) = sizes.iter().position(|&m| m == 0) {
        return Err(Error::invalid(format!(
            "part {i} of a complete multipartite graph is empty"
        )));
    }
    Ok(ConstructionDescriptor::new(0, sizes.to_vec()).realize())
}

/// `K̄_{s,t} = K_s + T(t, 1)`: a complete bipartite graph whose `s`-side is a clique.
pub fn kbar(s: usize, t: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::invalid("kbar requires s >= 1"));
    }
    Ok(ConstructionDescriptor::new(s, vec![t]).realize())
}

/// Disjoint copies of `K_t` plus one smaller clique on the leftover vertices.
/// Every degree is below `t`, so the result has no `K_{1,t}`.
pub fn star_free_construction(n: usize, t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::invalid("star size t must be at least 2"));
    }
    let mut g = Graph::empty(n);
    for start in (0..n).step_by(t) {
        let end = (start + t).min(n);
        for u in start..end {
            for v in u + 1..end {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Descriptor of `K_{σ-1} + T(n-σ+1, χ-1)` for a forbidden graph with the given profile.
pub fn theorem_descriptor(profile: &ChromaticProfile, n: usize) -> Result<ConstructionDescriptor> {
    if profile.chi < 2 {
        return Err(Error::invalid(format!(
            "construction needs a forbidden graph with chromatic number >= 2, got {}",
            profile.chi
        )));
    }
    let apex = profile.sigma - 1;
    if n < apex {
        return Err(Error::invalid(format!(
            "order {n} is smaller than the apex clique size {apex}"
        )));
    }
    ConstructionDescriptor::apex_turan(apex, n - apex, profile.chi - 1)
}

pub fn theorem_construction(profile: &ChromaticProfile, n: usize) -> Result<Graph> {
    Ok(theorem_descriptor(profile, n)?.realize())
}
