//! Greedy embedding of a colored graph into a partitioned host whose parts are
//! almost completely joined to each other.
//!
//! Two color classes of `F` go onto a given `K_{s,t}` inside one part; every
//! other class is placed in its own remaining part, inside the common
//! neighbourhood of everything placed so far. When every part has at least
//! `|V(F)|^2` vertices and each vertex misses at most `|A_j|/|V(F)|` vertices
//! of every other part `A_j`, the common neighbourhood never runs dry: the at
//! most `|V(F)|-1` placed vertices exclude at most `(|V(F)|-1)|A_j|/|V(F)|`
//! vertices of `A_j`, leaving at least `|V(F)|` to choose from.

use crate::bitset;
use crate::chromatic::{chromatic_number, ProperColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A host graph together with a partition of its vertices into parts `A_1..A_r`.
#[derive(Clone, Debug)]
pub struct HostPartition {
    pub host: Graph,
    pub parts: Vec<Vec<usize>>,
}

impl HostPartition {
    /// Checks that the parts are disjoint and cover the vertex set.
    pub fn new(host: Graph, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; host.order()];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= host.order() {
                    return Err(Error::invalid(format!(
                        "part {i} names vertex {v} outside the host"
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::invalid(format!(
                        "vertex {v} lies in parts {} and {i}",
                        owner[v]
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::invalid(format!("vertex {v} is in no part")));
        }
        Ok(HostPartition { host, parts })
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }

    /// Every vertex misses at most `|A_j| / pattern_order` vertices of each other part `A_j`.
    pub fn check_cross_degree(&self, pattern_order: usize) -> Result<()> {
        let words = self.host.words();
        let masks: Vec<Vec<u64>> = self
            .parts
            .iter()
            .map(|p| {
                let mut m = vec![0u64; words];
                p.iter().for_each(|&v| bitset::insert(&mut m, v));
                m
            })
            .collect();
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                for (j, other) in self.parts.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let hits = bitset::intersection_count(self.host.row(v), &masks[j]);
                    let missed = other.len() - hits;
                    if missed * pattern_order > other.len() {
                        return Err(Error::Precondition(format!(
                            "cross-degree: vertex {v} of part {i} misses {missed} of the {} vertices of part {j} (allowed {}/{pattern_order})",
                            other.len(),
                            other.len()
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A complete bipartite subgraph `K_{s,t}` of the host lying inside one part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KstWitness {
    pub small: Vec<usize>,
    pub large: Vec<usize>,
}

/// Embeds `f` into `host`, sending color class `s_class` onto `witness.small`
/// and `t_class` onto `witness.large`. Returns `map[u]` = image of `u`.
pub fn greedy_embed(
    f: &Graph,
    coloring: &ProperColoring,
    s_class: usize,
    t_class: usize,
    host: &HostPartition,
    witness: &KstWitness,
) -> Result<Vec<usize>> {
    let k = f.order();
    if k <= 1 {
        return match (k, host.host.order()) {
            (0, _) => Ok(Vec::new()),
            (_, 0) => Err(Error::Precondition("host has no vertices".into())),
            _ => Ok(vec![witness.small.first().copied().unwrap_or(0)]),
        };
    }
    let witness_part = check_preconditions(f, coloring, s_class, t_class, host, witness)?;

    let g = &host.host;
    let mut map = vec![usize::MAX; k];
    let mut used = vec![0u64; g.words()];
    let mut common = vec![0u64; g.words()];
    bitset::fill(&mut common, g.order());

    let mut small = witness.small.clone();
    let mut large = witness.large.clone();
    small.sort_unstable();
    large.sort_unstable();
    for (class, images) in [(s_class, &small), (t_class, &large)] {
        for (&u, &x) in coloring.classes[class].iter().zip(images.iter()) {
            map[u] = x;
            bitset::insert(&mut used, x);
            bitset::and_assign(&mut common, g.row(x));
        }
    }

    let mut rest: Vec<usize> = (0..coloring.classes.len())
        .filter(|&c| c != s_class && c != t_class)
        .collect();
    rest.sort_by_key(|&c| std::cmp::Reverse(coloring.classes[c].len()));
    let targets = (0..host.parts.len()).filter(|&j| j != witness_part);

    for (class, part) in rest.into_iter().zip(targets) {
        let mut pool = vec![0u64; g.words()];
        host.parts[part]
            .iter()
            .for_each(|&v| bitset::insert(&mut pool, v));
        bitset::and_assign(&mut pool, &common);
        bitset::and_not_assign(&mut pool, &used);
        let members = &coloring.classes[class];
        let chosen: Vec<usize> = bitset::iter(&pool).take(members.len()).collect();
        if chosen.len() < members.len() {
            return Err(Error::InternalInvariant(format!(
                "common neighbourhood in part {part} has {} vertices, class {class} needs {}",
                chosen.len(),
                members.len()
            )));
        }
        for (&u, &x) in members.iter().zip(&chosen) {
            map[u] = x;
            bitset::insert(&mut used, x);
        }
        for &x in &chosen {
            bitset::and_assign(&mut common, g.row(x));
        }
    }

    if let Some(u) = map.iter().position(|&x| x == usize::MAX) {
        return Err(Error::InternalInvariant(format!(
            "vertex {u} of F was never placed"
        )));
    }
    if let Some((a, b)) = f.edges().find(|&(a, b)| !g.has_edge(map[a], map[b])) {
        return Err(Error::InternalInvariant(format!(
            "edge {a}-{b} of F maps to the non-edge {}-{}",
            map[a], map[b]
        )));
    }
    Ok(map)
}

/// Validates every hypothesis of the embedding and returns the part holding the witness.
fn check_preconditions(
    f: &Graph,
    coloring: &ProperColoring,
    s_class: usize,
    t_class: usize,
    host: &HostPartition,
    witness: &KstWitness,
) -> Result<usize> {
    let k = f.order();
    let fail = |msg: String| Err(Error::Precondition(msg));

    if let Some((i, p)) = host.parts.iter().enumerate().find(|(_, p)| p.len() < k * k) {
        return fail(format!(
            "part-size: part {i} has {} vertices, needs at least {}",
            p.len(),
            k * k
        ));
    }
    if !coloring.is_proper_for(f) {
        return fail("coloring: not a proper coloring of F".into());
    }
    let chi = chromatic_number(f);
    if coloring.num_classes() != chi {
        return fail(format!(
            "coloring: {} classes but chi(F) = {chi}",
            coloring.num_classes()
        ));
    }
    if coloring.num_classes() > host.parts.len() + 1 {
        return fail(format!(
            "coloring: {} classes cannot fit {} parts",
            coloring.num_classes(),
            host.parts.len()
        ));
    }
    if s_class == t_class || s_class >= coloring.num_classes() || t_class >= coloring.num_classes()
    {
        return fail(format!(
            "class-choice: classes {s_class} and {t_class} must be two distinct classes"
        ));
    }
    if witness.small.len() != coloring.classes[s_class].len()
        || witness.large.len() != coloring.classes[t_class].len()
    {
        return fail(format!(
            "witness-size: witness is K_{{{},{}}} but the chosen classes have sizes {} and {}",
            witness.small.len(),
            witness.large.len(),
            coloring.classes[s_class].len(),
            coloring.classes[t_class].len()
        ));
    }
    let mut all: Vec<usize> = witness
        .small
        .iter()
        .chain(&witness.large)
        .copied()
        .collect();
    let parts: Vec<Option<usize>> = all.iter().map(|&v| host.part_of(v)).collect();
    let part = match parts.first() {
        Some(&Some(p)) if parts.iter().all(|&q| q == Some(p)) => p,
        _ => return fail("witness-part: witness vertices do not lie in a single part".into()),
    };
    all.sort_unstable();
    all.dedup();
    if all.len() != witness.small.len() + witness.large.len() {
        return fail("witness-part: witness sides overlap".into());
    }
    for &a in &witness.small {
        for &b in &witness.large {
            if !host.host.has_edge(a, b) {
                return fail(format!("witness-complete: {a}-{b} is not an edge"));
            }
        }
    }
    host.check_cross_degree(k)?;
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::enumerate_optimal_colorings;
    use crate::construct::{complete_multipartite, ConstructionDescriptor};

    fn edge_preserving(f: &Graph, g: &Graph, map: &[usize]) -> bool {
        let mut sorted = map.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == map.len() && f.edges().all(|(a, b)| g.has_edge(map[a], map[b]))
    }

    /// Complete multipartite host with parts of the given sizes plus extra edges
    /// inside part 0.
    fn host_with_inside(sizes: &[usize], inside: &[(usize, usize)]) -> HostPartition {
        let d = ConstructionDescriptor::new(0, sizes.to_vec());
        let mut g = d.realize();
        for &(a, b) in inside {
            g.add_edge(a, b);
        }
        let parts = d.part_ranges().into_iter().map(|r| r.collect()).collect();
        HostPartition::new(g, parts).unwrap()
    }

    #[test]
    fn triangle_into_two_parts() {
        let f = Graph::complete(3);
        let coloring = ProperColoring {
            classes: vec![vec![0], vec![1], vec![2]],
        };
        let host = host_with_inside(&[9, 9], &[(0, 1)]);
        let w = KstWitness {
            small: vec![0],
            large: vec![1],
        };
        let map = greedy_embed(&f, &coloring, 0, 1, &host, &w).unwrap();
        assert!(edge_preserving(&f, &host.host, &map));
        assert_eq!(map, vec![0, 1, 9]);
    }

    #[test]
    fn c5_into_three_parts() {
        let f = Graph::cycle(5);
        // classes {0}, {1,3}, {2,4}
        let coloring = ProperColoring {
            classes: vec![vec![0], vec![1, 3], vec![2, 4]],
        };
        let host = host_with_inside(&[25, 25, 25], &[(0, 1), (0, 2)]);
        let w = KstWitness {
            small: vec![0],
            large: vec![1, 2],
        };
        let map = greedy_embed(&f, &coloring, 0, 1, &host, &w).unwrap();
        assert!(edge_preserving(&f, &host.host, &map));
    }

    #[test]
    fn k222_into_two_parts() {
        let f = complete_multipartite(&[2, 2, 2]).unwrap();
        let coloring = enumerate_optimal_colorings(&f).next().unwrap();
        let host = host_with_inside(&[36, 36], &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        let w = KstWitness {
            small: vec![0, 1],
            large: vec![2, 3],
        };
        let map = greedy_embed(&f, &coloring, 0, 1, &host, &w).unwrap();
        assert!(edge_preserving(&f, &host.host, &map));
    }

    #[test]
    fn small_patterns_are_vacuous() {
        let host = host_with_inside(&[2, 2], &[]);
        let w = KstWitness {
            small: vec![],
            large: vec![],
        };
        let none = ProperColoring { classes: vec![] };
        assert_eq!(
            greedy_embed(&Graph::empty(0), &none, 0, 1, &host, &w).unwrap(),
            Vec::<usize>::new()
        );
        let one = ProperColoring {
            classes: vec![vec![0]],
        };
        assert_eq!(
            greedy_embed(&Graph::empty(1), &one, 0, 1, &host, &w).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn precondition_clauses_are_named() {
        let f = Graph::complete(3);
        let coloring = ProperColoring {
            classes: vec![vec![0], vec![1], vec![2]],
        };
        let w = KstWitness {
            small: vec![0],
            large: vec![1],
        };

        let small = host_with_inside(&[8, 9], &[(0, 1)]);
        let err = greedy_embed(&f, &coloring, 0, 1, &small, &w).unwrap_err();
        assert!(
            matches!(&err, Error::Precondition(m) if m.starts_with("part-size")),
            "{err}"
        );

        let no_edge = host_with_inside(&[9, 9], &[]);
        let err = greedy_embed(&f, &coloring, 0, 1, &no_edge, &w).unwrap_err();
        assert!(
            matches!(&err, Error::Precondition(m) if m.starts_with("witness-complete")),
            "{err}"
        );

        let split = host_with_inside(&[9, 9], &[]);
        let w2 = KstWitness {
            small: vec![0],
            large: vec![9],
        };
        let err = greedy_embed(&f, &coloring, 0, 1, &split, &w2).unwrap_err();
        assert!(
            matches!(&err, Error::Precondition(m) if m.starts_with("witness-part")),
            "{err}"
        );

        let bad = ProperColoring {
            classes: vec![vec![0, 1], vec![2]],
        };
        let host = host_with_inside(&[9, 9], &[(0, 1)]);
        let err = greedy_embed(&f, &bad, 0, 1, &host, &w).unwrap_err();
        assert!(
            matches!(&err, Error::Precondition(m) if m.starts_with("coloring")),
            "{err}"
        );
    }

    #[test]
    fn cross_degree_budget_enforced() {
        // F = K3: each vertex may miss at most 9/3 = 3 vertices of the other part
        let f = Graph::complete(3);
        let coloring = ProperColoring {
            classes: vec![vec![0], vec![1], vec![2]],
        };
        let w = KstWitness {
            small: vec![0],
            large: vec![1],
        };
        let mut host = host_with_inside(&[9, 9], &[(0, 1)]);
        for x in 9..12 {
            host.host.remove_edge(0, x);
        }
        assert!(greedy_embed(&f, &coloring, 0, 1, &host, &w).is_ok());
        host.host.remove_edge(0, 12);
        let err = greedy_embed(&f, &coloring, 0, 1, &host, &w).unwrap_err();
        assert!(
            matches!(&err, Error::Precondition(m) if m.starts_with("cross-degree")),
            "{err}"
        );
    }

    #[test]
    fn partition_validation() {
        let g = Graph::empty(4);
        assert!(HostPartition::new(g.clone(), vec![vec![0, 1], vec![2]]).is_err());
        assert!(HostPartition::new(g.clone(), vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(HostPartition::new(g, vec![vec![0, 1], vec![2, 3]]).is_ok());
    }
}
