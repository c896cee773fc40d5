//! Canonical labeling and automorphism groups.
//!
//! Individualization-refinement search: equitable refinement of an ordered
//! partition, branching on the first non-singleton cell, and keeping the leaf
//! whose relabeled adjacency matrix is lexicographically smallest. Automorphisms
//! are collected whenever two leaves give the same matrix; they prune sibling
//! branches that lie in a common orbit of the pointwise stabilizer of the
//! current prefix. The group order falls out of the orbit sizes along the first
//! path of the search tree.

use num_bigint::BigUint;

use crate::bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted by the canonical labeling routines.
pub const MAX_CANON_ORDER: usize = 64;

#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    pub canonical: Graph,
    /// Automorphisms found during the search; they generate the full group.
    pub generators: Vec<Vec<usize>>,
    pub group_order: BigUint,
}

impl CanonicalLabeling {
    /// Orbit representative (smallest member) of every vertex under the automorphism group.
    pub fn orbits(&self) -> Vec<usize> {
        orbits(self.labeling.len(), self.generators.iter())
    }
}

pub fn canonical_labeling(g: &Graph) -> Result<CanonicalLabeling> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::Capacity(format!(
            "canonical labeling supports at most {MAX_CANON_ORDER} vertices, got {n}"
        )));
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut cells = if n == 0 {
        vec![]
    } else {
        vec![(0..n).collect::<Vec<_>>()]
    };
    refine(g, &mut cells);
    search.explore(cells, &mut Vec::new());

    let first = search.first.expect("search reaches at least one leaf");
    let best = search.best.expect("search reaches at least one leaf");
    let mut group_order = BigUint::from(1u32);
    for depth in 0..first.path.len() {
        let fixed = &first.path[..depth];
        let orbit = orbits(n, search.autos.iter().filter(|a| fixes(a, fixed)));
        let rep = orbit[first.path[depth]];
        let size = orbit.iter().filter(|&&r| r == rep).count();
        group_order *= BigUint::from(size);
    }
    Ok(CanonicalLabeling {
        canonical: g.permuted(&best.labeling),
        labeling: best.labeling,
        generators: search.autos,
        group_order,
    })
}

/// Isomorphism-invariant graph6 string.
pub fn canonical_form(g: &Graph) -> Result<String> {
    graph6::encode(&canonical_labeling(g)?.canonical)
}

pub fn automorphism_count(g: &Graph) -> Result<BigUint> {
    Ok(canonical_labeling(g)?.group_order)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_labeling(a)?.canonical == canonical_labeling(b)?.canonical)
}

/// Orbit representatives of the group generated by `perms` on `0..n`.
pub fn orbits<'a>(n: usize, perms: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in perms {
        for (v, &w) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

fn fixes(perm: &[usize], points: &[usize]) -> bool {
    points.iter().all(|&v| perm[v] == v)
}

/// Refines an ordered partition until it is equitable. Cells are split by the
/// number of neighbours in a splitter cell, pieces ordered by that number, so
/// the resulting sequence of cells is independent of vertex names.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let words = g.words();
    let mut mask = vec![0u64; words];
    'restart: loop {
        for s in 0..cells.len() {
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &cells[s] {
                bitset::insert(&mut mask, v);
            }
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let counts: Vec<usize> = cells[c]
                    .iter()
                    .map(|&v| bitset::intersection_count(g.row(v), &mask))
                    .collect();
                if counts.iter().all(|&k| k == counts[0]) {
                    continue;
                }
                let mut keys: Vec<usize> = counts.clone();
                keys.sort_unstable();
                keys.dedup();
                let pieces: Vec<Vec<usize>> = keys
                    .iter()
                    .map(|&k| {
                        cells[c]
                            .iter()
                            .zip(&counts)
                            .filter(|&(_, &kc)| kc == k)
                            .map(|(&v, _)| v)
                            .collect()
                    })
                    .collect();
                cells.splice(c..=c, pieces);
                continue 'restart;
            }
        }
        return;
    }
}

struct Leaf {
    path: Vec<usize>,
    labeling: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when the caller should unwind to the node at depth `d`.
    fn explore(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) -> Option<usize> {
        let depth = prefix.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let mut children = cells[target].clone();
        children.sort_unstable();

        let mut explored: Vec<usize> = Vec::new();
        let mut orbit_cache: Option<(usize, Vec<usize>)> = None;
        for &w in &children {
            if !explored.is_empty() {
                let stale = orbit_cache
                    .as_ref()
                    .is_none_or(|(k, _)| *k != self.autos.len());
                if stale {
                    let orb = orbits(
                        self.g.order(),
                        self.autos.iter().filter(|a| fixes(a, prefix)),
                    );
                    orbit_cache = Some((self.autos.len(), orb));
                }
                let orb = &orbit_cache.as_ref().unwrap().1;
                if explored.iter().any(|&e| orb[e] == orb[w]) {
                    continue;
                }
            }

            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![w]);
            next.push(cells[target].iter().copied().filter(|&v| v != w).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut next);

            prefix.push(w);
            let jump = self.explore(next, prefix);
            prefix.pop();
            explored.push(w);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], prefix: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let mut labeling = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            labeling[c[0]] = i;
        }
        let cert = certificate(self.g, &labeling);

        let Some(first) = &self.first else {
            let leaf = Leaf {
                path: prefix.to_vec(),
                labeling,
                cert,
            };
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                labeling: leaf.labeling.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };

        if cert == first.cert {
            let auto = automorphism_between(&first.labeling, &labeling);
            let diverge = first
                .path
                .iter()
                .zip(prefix)
                .take_while(|(a, b)| a == b)
                .count();
            self.autos.push(auto);
            return Some(diverge);
        }
        let best = self.best.as_mut().unwrap();
        if cert == best.cert {
            let auto = automorphism_between(&best.labeling, &labeling);
            self.autos.push(auto);
        } else if cert < best.cert {
            *best = Leaf {
                path: prefix.to_vec(),
                labeling,
                cert,
            };
        }
        None
    }
}

/// Two labelings giving the same relabeled graph differ by the automorphism
/// `v -> to^{-1}(from(v))`.
fn automorphism_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut inv_to = vec![0; to.len()];
    for (v, &p) in to.iter().enumerate() {
        inv_to[p] = v;
    }
    from.iter().map(|&p| inv_to[p]).collect()
}

/// Adjacency rows of the relabeled graph, in canonical vertex order.
fn certificate(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let n = g.order();
    let words = g.words();
    let mut cert = vec![0u64; n * words];
    for v in 0..n {
        let row = &mut cert[labeling[v] * words..(labeling[v] + 1) * words];
        for u in g.neighbors(v) {
            bitset::insert(row, labeling[u]);
        }
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::complete_multipartite;

    fn factorial(n: usize) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(
            canonical_form(&Graph::complete(3)).unwrap(),
            canonical_form(&a).unwrap()
        );
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(
            automorphism_count(&Graph::complete(4)).unwrap(),
            BigUint::from(24u32)
        );
        assert_eq!(
            automorphism_count(&Graph::cycle(5)).unwrap(),
            BigUint::from(10u32)
        );
        assert_eq!(
            automorphism_count(&Graph::cycle(4)).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            automorphism_count(&Graph::petersen()).unwrap(),
            BigUint::from(120u32)
        );
        assert_eq!(
            automorphism_count(&Graph::empty(0)).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn large_symmetric_groups() {
        assert_eq!(
            automorphism_count(&Graph::complete(16)).unwrap(),
            factorial(16)
        );
        assert_eq!(
            automorphism_count(&Graph::empty(12)).unwrap(),
            factorial(12)
        );
        // K_{3,3,3}: (3!)^3 * 3!
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(automorphism_count(&k333).unwrap(), BigUint::from(1296u32));
        // 2K_3: (3!)^2 * 2
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(automorphism_count(&two).unwrap(), BigUint::from(72u32));
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = Graph::petersen();
        let lab = canonical_labeling(&g).unwrap();
        for a in &lab.generators {
            assert_eq!(g.permuted(a), g);
        }
        assert!(lab.orbits().iter().all(|&r| r == 0));
    }

    #[test]
    fn capacity_error_above_bound() {
        assert!(matches!(
            canonical_form(&Graph::empty(MAX_CANON_ORDER + 1)),
            Err(Error::Capacity(_))
        ));
    }
}
