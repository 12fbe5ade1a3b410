use ecclab::eccentric::{eccentric_graph, eccentricity_matrix, EccentricityProfile};
use ecclab::graph::{find_isomorphism, is_isomorphism, Graph};
use ecclab::matrix::{determinant, determinant_oracle, kronecker_matrix, IntMatrix};
use ecclab::product::{cartesian_product, check_additivity, check_componentwise_eccentric, ProductIndexMap};
use ecclab::tree::{
    check_monotone_exclusion, check_structure_theorem, predicted_tree_girth, random_tree, Tree,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Connected graphs: a random tree plus random chords.
fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), proptest::collection::vec((0usize..64, 0usize..64), 0..8)).prop_map(
        |(n, seed, chords)| {
            let t = random_tree(n, seed).unwrap();
            let mut edges = t.graph().edges().to_vec();
            edges.extend(chords.into_iter().map(|(a, b)| (a % n, b % n)).filter(|(a, b)| a != b));
            Graph::new(n, edges).unwrap()
        },
    )
}

fn arb_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Tree> {
    (min_n..=max_n, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed).unwrap())
}

fn arb_matrix(max: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(move |n| {
        proptest::collection::vec(-range..=range, n * n).prop_map(move |v| {
            IntMatrix::from_fn(n, n, |i, j| v[i * n + j]).unwrap()
        })
    })
}

/// Shortest cycle by extending simple paths from their least vertex.
fn girth_oracle(g: &Graph) -> usize {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, best: &mut usize) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                *best = (*best).min(path.len());
            } else if w > start && !path.contains(&w) && path.len() + 1 < *best {
                path.push(w);
                extend(g, start, path, best);
                path.pop();
            }
        }
    }
    let mut best = usize::MAX;
    for s in 0..g.num_vertices() {
        extend(g, s, &mut vec![s], &mut best);
    }
    if best == usize::MAX {
        0
    } else {
        best
    }
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.num_vertices();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn girth_matches_cycle_enumeration(g in arb_graph(8)) {
        prop_assert_eq!(g.girth(), girth_oracle(&g));
    }

    #[test]
    fn forest_iff_acyclic(g in arb_graph(8)) {
        prop_assert_eq!(g.is_forest(), girth_oracle(&g) == 0);
    }

    #[test]
    fn relabeled_graphs_are_isomorphic(g in arb_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.num_vertices()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        let found = find_isomorphism(&g, &h).unwrap().expect("relabeling is an isomorphism");
        prop_assert!(is_isomorphism(&g, &h, &found));
        let back = find_isomorphism(&h, &g).unwrap().expect("isomorphism is symmetric");
        prop_assert!(is_isomorphism(&h, &g, &back));
    }

    #[test]
    fn eccentric_graph_matches_floyd_warshall(g in arb_connected(10)) {
        let d = floyd_warshall(&g);
        let n = g.num_vertices();
        let ecc: Vec<u32> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
        let e = eccentric_graph(&g).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                let expected = d[u][v] == ecc[u] || d[u][v] == ecc[v];
                prop_assert_eq!(e.has_edge(u, v), expected, "pair ({}, {})", u, v);
            }
        }
    }

    #[test]
    fn eccentricity_matrix_supports_eccentric_graph(g in arb_connected(10)) {
        let m = eccentricity_matrix(&g).unwrap();
        let e = eccentric_graph(&g).unwrap();
        let d = floyd_warshall(&g);
        prop_assert!(m.is_symmetric());
        for u in 0..g.num_vertices() {
            for v in 0..g.num_vertices() {
                let entry = m.get(u, v);
                if e.has_edge(u, v) {
                    prop_assert_eq!(entry, &BigInt::from(d[u][v]));
                } else {
                    prop_assert_eq!(entry, &BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn eccentric_graph_of_tree_is_connected(t in arb_tree(2, 30)) {
        prop_assert!(eccentric_graph(t.graph()).unwrap().is_connected());
    }

    #[test]
    fn profile_relation_is_eccentricity(g in arb_connected(9)) {
        let p = EccentricityProfile::new(&g).unwrap();
        let d = floyd_warshall(&g);
        for u in 0..g.num_vertices() {
            let ecc = *d[u].iter().max().unwrap();
            for v in 0..g.num_vertices() {
                prop_assert_eq!(p.is_eccentric(v, u), d[u][v] == ecc);
            }
        }
    }

    #[test]
    fn tree_girth_rule(t in arb_tree(2, 40)) {
        let girth = eccentric_graph(t.graph()).unwrap().girth();
        prop_assert!([0, 3, 4].contains(&girth));
        prop_assert_eq!(girth, predicted_tree_girth(&t));
    }

    #[test]
    fn tree_structure_and_exclusion(t in arb_tree(2, 30)) {
        prop_assert!(check_structure_theorem(&t).holds);
        prop_assert!(check_monotone_exclusion(&t));
    }

    #[test]
    fn index_map_round_trip(sizes in proptest::collection::vec(1usize..6, 1..5), seed in any::<usize>()) {
        let map = ProductIndexMap::new(&sizes).unwrap();
        let i = seed % map.len();
        prop_assert_eq!(map.encode(&map.decode(i)), i);
    }

    #[test]
    fn small_products_are_additive(a in arb_connected(5), b in arb_connected(5)) {
        prop_assert!(check_additivity(&[&a, &b]).unwrap());
        prop_assert!(check_componentwise_eccentric(&[&a, &b]).unwrap());
    }

    #[test]
    fn product_edge_count(a in arb_connected(6), b in arb_connected(6)) {
        let (p, _) = cartesian_product(&[&a, &b]).unwrap();
        let expected = a.num_vertices() * b.num_edges() + b.num_vertices() * a.num_edges();
        prop_assert_eq!(p.num_edges(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn bareiss_matches_leibniz(m in arb_matrix(7, 9)) {
        prop_assert_eq!(determinant(&m).unwrap(), determinant_oracle(&m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn kronecker_determinant_identity(a in arb_matrix(4, 5), b in arb_matrix(3, 5)) {
        let k = kronecker_matrix(&a, &b);
        let (n, p) = (a.rows() as u32, b.rows() as u32);
        let expected = determinant(&a).unwrap().pow(p) * determinant(&b).unwrap().pow(n);
        prop_assert_eq!(determinant(&k).unwrap(), expected);
    }
}
