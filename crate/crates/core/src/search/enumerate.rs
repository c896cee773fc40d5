//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `k + 1` vertices is produced from a graph on `k` vertices by
//! adding a vertex `v` with some neighbourhood. The child is kept only when
//! `v` lies in the automorphism orbit of the vertex that the canonical
//! labeling puts last, i.e. when the parent is the child's canonical parent;
//! children of one parent are deduplicated by canonical form. Graphs that
//! contain the forbidden graph are dropped at every level, which loses
//! nothing because containment is inherited by supergraphs.

use std::collections::HashSet;

use crate::canon::canonical_labeling;
use crate::graph::Graph;
use crate::subgraph::contains_through_vertex;

/// Largest order the generator will extend from (masks are `u64`).
pub(crate) const MAX_PARENT_ORDER: usize = 20;

/// Canonical children of `parent`, split into those avoiding `forbidden`
/// (returned, in canonical labeling) and a count of all canonical children.
pub fn canonical_children(parent: &Graph, forbidden: Option<&Graph>) -> (Vec<Graph>, usize) {
    let k = parent.order();
    assert!(
        k <= MAX_PARENT_ORDER,
        "parent order {k} too large for augmentation"
    );
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut kept = Vec::new();
    let mut total = 0;
    for mask in 0u64..(1u64 << k) {
        let mut child = parent.with_order(k + 1);
        for u in 0..k {
            if mask >> u & 1 == 1 {
                child.add_edge(u, k);
            }
        }
        let lab = canonical_labeling(&child).expect("order within canonical bound");
        let last = lab
            .labeling
            .iter()
            .position(|&p| p == k)
            .expect("labeling is a permutation");
        let orbits = lab.orbits();
        if orbits[last] != orbits[k] {
            continue;
        }
        if !seen.insert(lab.canonical.clone()) {
            continue;
        }
        total += 1;
        if let Some(f) = forbidden {
            if contains_through_vertex(&child, f, k) {
                continue;
            }
        }
        kept.push(lab.canonical);
    }
    (kept, total)
}

/// All graphs on `depth` vertices avoiding `forbidden`, one per isomorphism class.
pub fn level(depth: usize, forbidden: Option<&Graph>) -> Vec<Graph> {
    let mut frontier = if forbidden.is_some_and(|f| f.order() == 0) {
        Vec::new()
    } else {
        vec![Graph::empty(0)]
    };
    for _ in 0..depth {
        frontier = frontier
            .iter()
            .flat_map(|g| canonical_children(g, forbidden).0)
            .collect();
    }
    frontier
}

/// Visits every graph of order `target` descending from `root` (inclusive when
/// `root` already has that order). `on_level` receives the number of canonical
/// children generated at the target level before the forbidden-graph filter.
pub fn descend(
    root: &Graph,
    target: usize,
    forbidden: Option<&Graph>,
    visit: &mut dyn FnMut(&Graph),
    on_level: &mut dyn FnMut(usize),
) {
    if root.order() == target {
        visit(root);
        return;
    }
    let (children, total) = canonical_children(root, forbidden);
    if root.order() + 1 == target {
        on_level(total);
    }
    for child in &children {
        descend(child, target, forbidden, visit, on_level);
    }
}

/// Number of isomorphism classes of graphs on `n` vertices avoiding `forbidden`.
pub fn count_classes(n: usize, forbidden: Option<&Graph>) -> usize {
    let mut count = 0;
    for root in level(n.min(4), forbidden) {
        descend(&root, n, forbidden, &mut |_| count += 1, &mut |_| {});
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_match_known_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| count_classes(n, None)).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn triangle_free_counts() {
        // triangle-free graphs on 1..=6 vertices: 1, 2, 3, 7, 14, 38
        let k3 = Graph::complete(3);
        let counts: Vec<usize> = (1..=6).map(|n| count_classes(n, Some(&k3))).collect();
        assert_eq!(counts, vec![1, 2, 3, 7, 14, 38]);
    }

    #[test]
    fn children_are_canonical_and_free() {
        let k3 = Graph::complete(3);
        for parent in level(4, Some(&k3)) {
            let (kids, total) = canonical_children(&parent, Some(&k3));
            assert!(kids.len() <= total);
            for kid in kids {
                assert_eq!(canonical_labeling(&kid).unwrap().canonical, kid);
                assert!(!crate::subgraph::contains(&kid, &k3));
            }
        }
    }
}
