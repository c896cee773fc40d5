//! Subgraph containment and exact copy counting.
//!
//! Copies are counted as injective edge-preserving maps `V(H) -> V(G)` divided
//! by `|Aut(H)|`. The map search places pattern vertices one at a time; the
//! candidates for each are the common neighbourhood of the images of its
//! already-placed neighbours, computed as a word-parallel AND of adjacency rows.

mod multipartite;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

pub use multipartite::{count_multipartite_in_construction, multipartite_parts};

use crate::bitset;
use crate::canon;
use crate::construct::complete_multipartite;
use crate::graph::Graph;

/// Exact number of copies of a pattern in a host.
pub type CopyCount = BigUint;

/// Placement order for the pattern vertices and, per position, the earlier
/// positions adjacent to it.
#[derive(Clone, Debug)]
struct Plan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Plan {
    /// `forced` pattern vertices are placed first, in the given order; the rest
    /// follow by descending degree, ties broken by adjacency to placed vertices.
    fn new(pattern: &Graph, forced: &[usize]) -> Plan {
        let k = pattern.order();
        let mut placed = vec![false; k];
        let mut order: Vec<usize> = Vec::with_capacity(k);
        for &u in forced {
            placed[u] = true;
            order.push(u);
        }
        while order.len() < k {
            let u = (0..k)
                .filter(|&u| !placed[u])
                .max_by_key(|&u| {
                    let links = pattern.neighbors(u).filter(|&w| placed[w]).count();
                    (pattern.degree(u), links, std::cmp::Reverse(u))
                })
                .unwrap();
            placed[u] = true;
            order.push(u);
        }
        let back = (0..k)
            .map(|i| {
                (0..i)
                    .filter(|&j| pattern.has_edge(order[i], order[j]))
                    .collect()
            })
            .collect();
        let degree = order.iter().map(|&u| pattern.degree(u)).collect();
        Plan {
            order,
            back,
            degree,
        }
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    plan: Plan,
    /// Host vertices whose degree reaches each pattern position's degree.
    eligible: Vec<Vec<u64>>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &Graph, host: &'a Graph, forced: &[usize]) -> Self {
        let plan = Plan::new(pattern, forced);
        let words = host.words();
        let host_deg = host.degrees();
        let eligible = plan
            .degree
            .iter()
            .map(|&d| {
                let mut m = vec![0u64; words];
                for (v, &hd) in host_deg.iter().enumerate() {
                    if hd >= d {
                        bitset::insert(&mut m, v);
                    }
                }
                m
            })
            .collect();
        Matcher {
            host,
            plan,
            eligible,
        }
    }

    fn candidates(&self, pos: usize, images: &[usize], used: &[u64], out: &mut [u64]) {
        out.copy_from_slice(&self.eligible[pos]);
        for &j in &self.plan.back[pos] {
            bitset::and_assign(out, self.host.row(images[j]));
        }
        bitset::and_not_assign(out, used);
    }

    /// Counts completions from `pos` onward. `images[..pos]` is already placed.
    fn count_from(
        &self,
        pos: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<u64>,
        bufs: &mut [Vec<u64>],
    ) -> u128 {
        let k = self.plan.order.len();
        if pos == k {
            return 1;
        }
        let (buf, rest) = bufs.split_first_mut().unwrap();
        self.candidates(pos, images, used, buf);
        if pos + 1 == k {
            return bitset::count(buf) as u128;
        }
        let mut total = 0u128;
        for x in bitset::iter(buf) {
            images.push(x);
            bitset::insert(used, x);
            total += self.count_from(pos + 1, images, used, rest);
            bitset::remove(used, x);
            images.pop();
        }
        total
    }

    fn exists_from(
        &self,
        pos: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<u64>,
        bufs: &mut [Vec<u64>],
    ) -> Option<Vec<usize>> {
        let k = self.plan.order.len();
        if pos == k {
            return Some(images.clone());
        }
        let (buf, rest) = bufs.split_first_mut().unwrap();
        self.candidates(pos, images, used, buf);
        for x in bitset::iter(buf) {
            images.push(x);
            bitset::insert(used, x);
            let found = self.exists_from(pos + 1, images, used, rest);
            bitset::remove(used, x);
            images.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn buffers(&self) -> Vec<Vec<u64>> {
        vec![vec![0u64; self.host.words()]; self.plan.order.len()]
    }

    /// Runs the search with `images` fixed for the leading positions. Returns
    /// false when the fixed images are not themselves a partial embedding.
    fn seed(&self, fixed: &[usize], used: &mut [u64]) -> bool {
        for (pos, &x) in fixed.iter().enumerate() {
            if bitset::contains(used, x) || !bitset::contains(&self.eligible[pos], x) {
                return false;
            }
            if self.plan.back[pos]
                .iter()
                .any(|&j| !self.host.has_edge(fixed[j], x))
            {
                return false;
            }
            bitset::insert(used, x);
        }
        true
    }

    fn count_with(&self, fixed: &[usize]) -> u128 {
        let mut used = vec![0u64; self.host.words()];
        if !self.seed(fixed, &mut used) {
            return 0;
        }
        let mut images = fixed.to_vec();
        let mut bufs = self.buffers();
        self.count_from(
            fixed.len(),
            &mut images,
            &mut used,
            &mut bufs[fixed.len()..],
        )
    }

    fn find_with(&self, fixed: &[usize]) -> Option<Vec<usize>> {
        let mut used = vec![0u64; self.host.words()];
        if !self.seed(fixed, &mut used) {
            return None;
        }
        let mut images = fixed.to_vec();
        let mut bufs = self.buffers();
        self.exists_from(
            fixed.len(),
            &mut images,
            &mut used,
            &mut bufs[fixed.len()..],
        )
        .map(|imgs| self.to_map(&imgs))
    }

    /// Converts placement-order images into a map indexed by pattern vertex.
    fn to_map(&self, images: &[usize]) -> Vec<usize> {
        let mut map = vec![0; images.len()];
        for (pos, &u) in self.plan.order.iter().enumerate() {
            map[u] = images[pos];
        }
        map
    }
}

fn trivially_absent(host: &Graph, pattern: &Graph) -> bool {
    pattern.order() > host.order()
        || pattern.edge_count() > host.edge_count()
        || pattern.max_degree() > host.max_degree()
}

/// Number of injective edge-preserving maps `V(H) -> V(G)` (labeled copies).
pub fn count_embeddings(pattern: &Graph, host: &Graph) -> u128 {
    if pattern.order() == 0 {
        return 1;
    }
    if trivially_absent(host, pattern) {
        return 0;
    }
    let m = Matcher::new(pattern, host, &[]);
    let mut first = vec![0u64; host.words()];
    m.candidates(0, &[], &vec![0u64; host.words()], &mut first);
    let starts: Vec<usize> = bitset::iter(&first).collect();
    if pattern.order() == 1 {
        return starts.len() as u128;
    }
    starts.par_iter().map(|&x| m.count_with(&[x])).sum()
}

/// `|Aut(H)|`, from the canonical labeling search when the order allows and by
/// counting self-embeddings otherwise.
pub fn pattern_automorphisms(pattern: &Graph) -> BigUint {
    match canon::automorphism_count(pattern) {
        Ok(a) => a,
        Err(_) => BigUint::from(count_embeddings(pattern, pattern)),
    }
}

/// `N(H, G)`: the number of (not necessarily induced) subgraphs of `G` isomorphic to `H`.
pub fn count_copies(pattern: &Graph, host: &Graph) -> CopyCount {
    let raw = BigUint::from(count_embeddings(pattern, host));
    if raw.is_zero() {
        return raw;
    }
    let aut = pattern_automorphisms(pattern);
    let (q, r) = (&raw / &aut, &raw % &aut);
    assert!(
        r.is_zero(),
        "embedding count {raw} not divisible by |Aut(H)| = {aut}"
    );
    q
}

/// Some copy of `pattern` in `host`, as a map from pattern vertices to host vertices.
pub fn find_copy(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.order() == 0 {
        return Some(Vec::new());
    }
    if trivially_absent(host, pattern) {
        return None;
    }
    Matcher::new(pattern, host, &[]).find_with(&[])
}

/// True iff `host` has a subgraph isomorphic to `pattern`.
pub fn contains(host: &Graph, pattern: &Graph) -> bool {
    find_copy(host, pattern).is_some()
}

/// True iff some copy of `pattern` in `host` uses vertex `v`.
pub fn contains_through_vertex(host: &Graph, pattern: &Graph, v: usize) -> bool {
    if pattern.order() == 0 || trivially_absent(host, pattern) {
        return false;
    }
    let orbits = pattern_orbit_reps(pattern);
    orbits
        .into_iter()
        .any(|u| Matcher::new(pattern, host, &[u]).find_with(&[v]).is_some())
}

/// True iff some copy of `pattern` in `host` uses the edge `uv`.
pub fn contains_through_edge(host: &Graph, pattern: &Graph, u: usize, v: usize) -> bool {
    if !host.has_edge(u, v) || trivially_absent(host, pattern) {
        return false;
    }
    pattern.edges().any(|(a, b)| {
        let m = Matcher::new(pattern, host, &[a, b]);
        m.find_with(&[u, v]).is_some() || m.find_with(&[v, u]).is_some()
    })
}

fn pattern_orbit_reps(pattern: &Graph) -> Vec<usize> {
    match canon::canonical_labeling(pattern) {
        Ok(lab) => {
            let orb = lab.orbits();
            (0..pattern.order()).filter(|&u| orb[u] == u).collect()
        }
        Err(_) => (0..pattern.order()).collect(),
    }
}

/// True iff `host` has no `K_{s,t}` subgraph. Argument order does not matter.
pub fn is_kst_free(host: &Graph, s: usize, t: usize) -> bool {
    let (s, t) = (s.min(t), s.max(t));
    if s == 0 {
        return host.order() < t;
    }
    let kst = complete_multipartite(&[s, t]).expect("positive part sizes");
    !contains(host, &kst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{join, kbar, turan};

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&Graph::complete(4), &Graph::complete(3)));
        assert!(!contains(&turan(8, 2).unwrap(), &Graph::complete(3)));
        let host = join(&Graph::complete(1), &turan(6, 2).unwrap());
        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert!(!contains(&host, &k222));
        assert!(contains(&Graph::empty(3), &Graph::empty(2)));
        assert!(contains(&Graph::empty(0), &Graph::empty(0)));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_copies(&Graph::complete(3), &Graph::complete(4)), n(4));
        assert_eq!(
            count_copies(&Graph::complete(2), &turan(6, 2).unwrap()),
            n(9)
        );
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(count_copies(&c4, &turan(6, 2).unwrap()), n(9));
        assert_eq!(count_copies(&Graph::cycle(5), &Graph::complete(5)), n(12));
        assert_eq!(count_copies(&Graph::empty(2), &Graph::empty(4)), n(6));
        assert_eq!(count_copies(&Graph::empty(0), &Graph::cycle(4)), n(1));
        assert_eq!(count_copies(&Graph::complete(5), &Graph::complete(4)), n(0));
    }

    #[test]
    fn kst_free_examples() {
        assert!(is_kst_free(&Graph::cycle(6), 2, 2));
        assert!(!is_kst_free(&Graph::complete(4), 2, 2));
        assert!(is_kst_free(&kbar(2, 5).unwrap(), 3, 3));
        assert!(!is_kst_free(&kbar(2, 5).unwrap(), 5, 2));
    }

    #[test]
    fn anchored_containment() {
        // triangle 0-1-2 plus pendant vertex 3 on vertex 2
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let k3 = Graph::complete(3);
        assert!(contains_through_vertex(&g, &k3, 0));
        assert!(!contains_through_vertex(&g, &k3, 3));
        assert!(contains_through_edge(&g, &k3, 0, 1));
        assert!(!contains_through_edge(&g, &k3, 2, 3));
        assert!(!contains_through_edge(&g, &k3, 1, 3));
    }

    #[test]
    fn found_copy_preserves_edges() {
        let host = Graph::petersen();
        let c5 = Graph::cycle(5);
        let map = find_copy(&host, &c5).unwrap();
        for (a, b) in c5.edges() {
            assert!(host.has_edge(map[a], map[b]));
        }
        assert!(find_copy(&host, &Graph::cycle(4)).is_none());
    }
}
