//! Balancing two parts of `K_c + K_{m_1,...,m_r}`.

use crate::construct::ConstructionDescriptor;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RebalanceOutcome {
    pub descriptor: ConstructionDescriptor,
    pub graph: Graph,
    /// The parts already differed by at most one; nothing moved.
    pub balanced: bool,
}

/// Moves `floor((m_j - m_i) / 2)` vertices from part `j` to part `i`.
pub fn rebalance_step(
    host: &ConstructionDescriptor,
    i: usize,
    j: usize,
) -> Result<RebalanceOutcome> {
    let r = host.part_sizes.len();
    if i >= r || j >= r {
        return Err(Error::invalid(format!(
            "part index out of range: ({i}, {j}) with {r} parts"
        )));
    }
    let (mi, mj) = (host.part_sizes[i], host.part_sizes[j]);
    if i == j || mj <= mi + 1 && mi <= mj + 1 {
        return Ok(RebalanceOutcome {
            descriptor: host.clone(),
            graph: host.realize(),
            balanced: true,
        });
    }
    if mj < mi {
        return Err(Error::invalid(format!(
            "part {j} ({mj}) must be the larger one, part {i} has {mi}"
        )));
    }
    let moved = (mj - mi) / 2;
    let mut descriptor = host.clone();
    descriptor.part_sizes[i] += moved;
    descriptor.part_sizes[j] -= moved;
    Ok(RebalanceOutcome {
        graph: descriptor.realize(),
        descriptor,
        balanced: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_to_balanced_bipartite() {
        let d = ConstructionDescriptor::new(0, vec![1, 5]);
        let out = rebalance_step(&d, 0, 1).unwrap();
        assert_eq!(out.descriptor.part_sizes, vec![3, 3]);
        assert_eq!(d.realize().edge_count(), 5);
        assert_eq!(out.graph.edge_count(), 9);
        assert!(!out.balanced);
    }

    #[test]
    fn apex_clique_kept() {
        let d = ConstructionDescriptor::new(1, vec![2, 4]);
        let out = rebalance_step(&d, 0, 1).unwrap();
        assert_eq!(out.descriptor, ConstructionDescriptor::new(1, vec![3, 3]));
        assert_eq!(d.realize().edge_count(), 8 + 6);
        assert_eq!(out.graph.edge_count(), 9 + 6);
    }

    #[test]
    fn nearly_equal_parts_are_balanced() {
        let d = ConstructionDescriptor::new(0, vec![3, 4]);
        let out = rebalance_step(&d, 0, 1).unwrap();
        assert!(out.balanced);
        assert_eq!(out.descriptor, d);
        assert!(rebalance_step(&d, 1, 0).unwrap().balanced);
    }

    #[test]
    fn wrong_direction_or_range() {
        let d = ConstructionDescriptor::new(0, vec![6, 2]);
        assert!(rebalance_step(&d, 0, 1).is_err());
        assert!(rebalance_step(&d, 0, 2).is_err());
        assert_eq!(
            rebalance_step(&d, 1, 0).unwrap().descriptor.part_sizes,
            vec![4, 4]
        );
    }

    #[test]
    fn edges_strictly_increase() {
        for c in 0..3 {
            for a in 0..=8 {
                for b in a + 2..=8 {
                    let d = ConstructionDescriptor::new(c, vec![a, b]);
                    let out = rebalance_step(&d, 0, 1).unwrap();
                    assert!(out.graph.edge_count() > d.realize().edge_count());
                }
            }
        }
    }
}
