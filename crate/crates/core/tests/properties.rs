use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use turanbench::canon::{automorphism_count, canonical_form, is_isomorphic};
use turanbench::chromatic::{chromatic_number, enumerate_optimal_colorings, sigma, ProperColoring};
use turanbench::construct::{
    complete_multipartite, join, star_free_construction, turan, ConstructionDescriptor,
};
use turanbench::embedding::{greedy_embed, HostPartition, KstWitness};
use turanbench::graph6;
use turanbench::subgraph::{count_copies, count_multipartite_in_construction};
use turanbench::Graph;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            },
        )
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Injective edge-preserving maps, by trying every injective map.
fn naive_embeddings(h: &Graph, g: &Graph) -> u64 {
    fn go(h: &Graph, g: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        if map.len() == h.order() {
            let ok = h.edges().all(|(a, b)| g.has_edge(map[a], map[b]));
            return ok as u64;
        }
        let mut total = 0;
        for x in 0..g.order() {
            if !used[x] {
                used[x] = true;
                map.push(x);
                total += go(h, g, map, used);
                map.pop();
                used[x] = false;
            }
        }
        total
    }
    go(h, g, &mut Vec::new(), &mut vec![false; g.order()])
}

fn naive_automorphisms(g: &Graph) -> u64 {
    all_permutations(g.order())
        .iter()
        .filter(|p| g.edges().all(|(a, b)| g.has_edge(p[a], p[b])))
        .count() as u64
}

fn naive_chromatic(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|code| {
                let colors = digits(code, k, n);
                g.edges().all(|(a, b)| colors[a] != colors[b])
            })
        })
        .unwrap()
}

fn digits(mut code: u64, k: usize, n: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let d = (code % k as u64) as usize;
            code /= k as u64;
            d
        })
        .collect()
}

fn turan_edges_formula(n: usize, r: usize) -> usize {
    let (q, rem) = (n / r, n % r);
    let squares = rem * (q + 1) * (q + 1) + (r - rem) * q * q;
    (n * n - squares) / 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let text = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn turan_edge_count(n in 0usize..40, r in 1usize..8) {
        prop_assert_eq!(turan(n, r).unwrap().edge_count(), turan_edges_formula(n, r));
    }

    #[test]
    fn join_edge_count(a in graph_strategy(7), b in graph_strategy(7)) {
        let j = join(&a, &b);
        prop_assert_eq!(j.order(), a.order() + b.order());
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
    }

    #[test]
    fn star_free_max_degree(n in 1usize..30, t in 2usize..8) {
        let g = star_free_construction(n, t).unwrap();
        prop_assert_eq!(g.max_degree(), (t - 1).min(n - 1));
    }

    #[test]
    fn canonical_form_is_invariant(g in graph_strategy(10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn isomorphism_matches_brute_force(a in graph_strategy(5), b in graph_strategy(5)) {
        let brute = a.order() == b.order()
            && all_permutations(a.order()).iter().any(|p| a.permuted(p) == b);
        prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), brute);
    }

    #[test]
    fn automorphisms_match_brute_force(g in graph_strategy(7)) {
        prop_assert_eq!(automorphism_count(&g).unwrap(), BigUint::from(naive_automorphisms(&g)));
    }

    #[test]
    fn copies_match_naive(h in graph_strategy(4), g in graph_strategy(7)) {
        let raw = naive_embeddings(&h, &g);
        let aut = naive_automorphisms(&h);
        prop_assert_eq!(raw % aut, 0);
        prop_assert_eq!(count_copies(&h, &g), BigUint::from(raw / aut));
    }

    #[test]
    fn copies_monotone_under_edge_addition(h in graph_strategy(4), g in graph_strategy(8), pick in any::<u64>()) {
        let n = g.order();
        if n < 2 {
            return Ok(());
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let (u, v) = pairs[(pick % pairs.len() as u64) as usize];
        let (mut smaller, mut bigger) = (g.clone(), g);
        smaller.remove_edge(u, v);
        bigger.add_edge(u, v);
        prop_assert!(count_copies(&h, &bigger) >= count_copies(&h, &smaller));
    }

    #[test]
    fn chromatic_matches_naive(g in graph_strategy(6)) {
        prop_assert_eq!(chromatic_number(&g), naive_chromatic(&g));
    }

    #[test]
    fn optimal_colorings_match_naive(g in graph_strategy(6)) {
        let k = naive_chromatic(&g);
        let n = g.order();
        let mut naive = BTreeSet::new();
        if k == 0 {
            naive.insert(Vec::new());
        } else {
            for code in 0..(k as u64).pow(n as u32) {
                let colors = digits(code, k, n);
                if g.edges().all(|(a, b)| colors[a] != colors[b]) {
                    let mut classes = ProperColoring::from_colors(&colors).classes;
                    classes.sort();
                    naive.insert(classes);
                }
            }
        }
        let lib: BTreeSet<Vec<Vec<usize>>> = enumerate_optimal_colorings(&g)
            .map(|c| {
                let mut classes = c.classes;
                classes.sort();
                classes
            })
            .collect();
        prop_assert_eq!(&lib, &naive);
        let naive_sigma = naive.iter().filter_map(|c| c.iter().map(Vec::len).min()).min().unwrap_or(0);
        prop_assert_eq!(sigma(&g), naive_sigma);
    }

    #[test]
    fn closed_form_matches_backtracking(
        pattern in proptest::collection::vec(1usize..=3, 0..=3),
        c in 0usize..=3,
        parts in proptest::collection::vec(1usize..=4, 0..=3),
    ) {
        let d = ConstructionDescriptor::new(c, parts);
        prop_assume!(d.order() <= 12);
        let closed = count_multipartite_in_construction(&pattern, &d).unwrap();
        let h = complete_multipartite(&pattern).unwrap();
        prop_assert_eq!(closed, count_copies(&h, &d.realize()));
    }
}

/// A partitioned host meeting the embedding hypotheses, with a planted `K_{s,t}` in part 0.
fn random_host(
    rng: &mut ChaCha8Rng,
    k: usize,
    num_parts: usize,
    s: usize,
    t: usize,
) -> (HostPartition, KstWitness) {
    let sizes: Vec<usize> = (0..num_parts)
        .map(|_| k * k + rng.random_range(0..6))
        .collect();
    let mut g = complete_multipartite(&sizes).unwrap();
    let d = ConstructionDescriptor::new(0, sizes.clone());
    let ranges = d.part_ranges();
    let part_of: Vec<usize> = (0..g.order())
        .map(|v| ranges.iter().position(|r| r.contains(&v)).unwrap())
        .collect();
    let mut missed = vec![vec![0usize; num_parts]; g.order()];
    let budget = |j: usize| sizes[j] / k;
    let attempts = rng.random_range(0..g.order() * 4);
    for _ in 0..attempts {
        let u = rng.random_range(0..g.order());
        let v = rng.random_range(0..g.order());
        let (pu, pv) = (part_of[u], part_of[v]);
        if pu == pv || !g.has_edge(u, v) {
            continue;
        }
        if missed[u][pv] < budget(pv) && missed[v][pu] < budget(pu) {
            g.remove_edge(u, v);
            missed[u][pv] += 1;
            missed[v][pu] += 1;
        }
    }
    let mut inside: Vec<usize> = ranges[0].clone().collect();
    for i in (1..inside.len()).rev() {
        inside.swap(i, rng.random_range(0..=i));
    }
    let small = inside[..s].to_vec();
    let large = inside[s..s + t].to_vec();
    for &a in &small {
        for &b in &large {
            g.add_edge(a, b);
        }
    }
    let parts = ranges.into_iter().map(|r| r.collect()).collect();
    (
        HostPartition::new(g, parts).unwrap(),
        KstWitness { small, large },
    )
}

#[test]
fn greedy_embedding_on_random_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_241_015);
    let patterns = [
        Graph::complete(3),
        Graph::cycle(5),
        Graph::path(4),
        complete_multipartite(&[2, 2, 2]).unwrap(),
        complete_multipartite(&[1, 1, 2]).unwrap(),
        Graph::complete(4),
    ];
    for trial in 0..100 {
        let f = &patterns[trial % patterns.len()];
        let colorings: Vec<ProperColoring> = enumerate_optimal_colorings(f).collect();
        let coloring = &colorings[rng.random_range(0..colorings.len())];
        let chi = coloring.num_classes();
        let s_class = rng.random_range(0..chi);
        let t_class = (s_class + 1 + rng.random_range(0..chi - 1)) % chi;
        let (s, t) = (
            coloring.classes[s_class].len(),
            coloring.classes[t_class].len(),
        );
        let extra = rng.random_range(0..2);
        let (host, witness) = random_host(&mut rng, f.order(), chi - 1 + extra, s, t);
        let map = greedy_embed(f, coloring, s_class, t_class, &host, &witness)
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        assert_eq!(
            distinct.len(),
            f.order(),
            "trial {trial}: map not injective"
        );
        for (a, b) in f.edges() {
            assert!(
                host.host.has_edge(map[a], map[b]),
                "trial {trial}: edge {a}-{b} lost"
            );
        }
        for &u in &coloring.classes[s_class] {
            assert!(witness.small.contains(&map[u]));
        }
        for &u in &coloring.classes[t_class] {
            assert!(witness.large.contains(&map[u]));
        }
    }
}
