//! Closed-form `N(K_{b_1,...,b_k}, K_c + K_{m_1,...,m_r})`.
//!
//! An injective map of the pattern into the host is edge-preserving exactly
//! when no host part receives vertices from two different pattern classes;
//! apex vertices are unconstrained. The labeled count is therefore a sum over
//! how many vertices of each class land on the apex clique, times the number
//! of ways to spread the remaining vertices over the parts with one class per
//! part. Dividing by `|Aut(K_{b_1,...,b_k})|` gives the copy count.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::construct::ConstructionDescriptor;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Mixed-radix index over vectors `x` with `0 <= x_i <= bound_i`.
struct Radix {
    bounds: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl Radix {
    fn new(bounds: &[usize]) -> Self {
        let mut strides = Vec::with_capacity(bounds.len());
        let mut size = 1;
        for &b in bounds {
            strides.push(size);
            size *= b + 1;
        }
        Radix {
            bounds: bounds.to_vec(),
            strides,
            size,
        }
    }

    fn digits(&self, mut idx: usize) -> Vec<usize> {
        self.bounds
            .iter()
            .map(|&b| {
                let d = idx % (b + 1);
                idx /= b + 1;
                d
            })
            .collect()
    }
}

/// Part sizes of a complete multipartite graph, listed by the smallest vertex
/// of each part, or `None` if the graph is not complete multipartite.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut part = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        if part[v] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let members: Vec<usize> = (v..n).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &u in &members {
            if part[u] != usize::MAX {
                return None;
            }
            part[u] = id;
        }
        sizes.push(members.len());
    }
    for u in 0..n {
        for w in u + 1..n {
            if g.has_edge(u, w) == (part[u] == part[w]) {
                return None;
            }
        }
    }
    Some(sizes)
}

/// Exact copy count of `K_{pattern_parts}` in the realization of `host`.
pub fn count_multipartite_in_construction(
    pattern_parts: &[usize],
    host: &ConstructionDescriptor,
) -> Result<BigUint> {
    if let Some(i) = pattern_parts.iter().position(|&b| b == 0) {
        return Err(Error::invalid(format!("pattern class {i} is empty")));
    }
    let c = host.apex_clique;
    let radix = Radix::new(pattern_parts);

    // spread[s]: weighted ways to place s_i residual vertices of class i into
    // the parts, one class per part, weight prod_j C(m_j, y_j).
    let mut spread = vec![BigUint::zero(); radix.size];
    spread[0] = BigUint::one();
    for &m in &host.part_sizes {
        let mut next = spread.clone();
        for (idx, ways) in spread.iter().enumerate() {
            if ways.is_zero() {
                continue;
            }
            let placed = radix.digits(idx);
            for (i, &b) in pattern_parts.iter().enumerate() {
                for y in 1..=(b - placed[i]).min(m) {
                    next[idx + y * radix.strides[i]] += ways * binomial(m, y);
                }
            }
        }
        spread = next;
    }

    // Labeled count: sum over apex loads x of
    //   prod_i C(b_i, x_i) * c!/(c-X)! * prod_i (b_i - x_i)! * spread[b - x].
    let full = radix.size - 1;
    let mut labeled = BigUint::zero();
    for idx in 0..radix.size {
        let x = radix.digits(idx);
        let total: usize = x.iter().sum();
        if total > c {
            continue;
        }
        let rest = &spread[full - idx];
        if rest.is_zero() {
            continue;
        }
        let mut term = factorial(c) / factorial(c - total);
        for (i, &b) in pattern_parts.iter().enumerate() {
            term *= binomial(b, x[i]) * factorial(b - x[i]);
        }
        labeled += term * rest;
    }

    let mut multiplicity: BTreeMap<usize, usize> = BTreeMap::new();
    let mut aut = BigUint::one();
    for &b in pattern_parts {
        aut *= factorial(b);
        *multiplicity.entry(b).or_default() += 1;
    }
    for &k in multiplicity.values() {
        aut *= factorial(k);
    }
    let (q, r) = (&labeled / &aut, &labeled % &aut);
    if !r.is_zero() {
        return Err(Error::InternalInvariant(format!(
            "labeled count {labeled} not divisible by automorphism count {aut}"
        )));
    }
    Ok(q)
}
