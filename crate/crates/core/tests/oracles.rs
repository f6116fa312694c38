use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semirep_core::*;

/// Green's relations straight from the definitions, with `S¹` as `S` plus a
/// formal identity.
fn naive_classes(s: &Semigroup) -> [Vec<usize>; 3] {
    let n = s.size();
    let with_one: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
    let mul = |a: Option<usize>, b: usize| a.map_or(b, |a| s.mul(a, b));
    let mulr = |a: usize, b: Option<usize>| b.map_or(a, |b| s.mul(a, b));
    let right = |x: usize| -> BTreeSet<usize> { with_one.iter().map(|&u| mulr(x, u)).collect() };
    let left = |x: usize| -> BTreeSet<usize> { with_one.iter().map(|&u| mul(u, x)).collect() };
    let two = |x: usize| -> BTreeSet<usize> {
        with_one
            .iter()
            .flat_map(|&u| with_one.iter().map(move |&v| mulr(mul(u, x), v)))
            .collect()
    };
    let label = |ideals: Vec<BTreeSet<usize>>| -> Vec<usize> {
        let mut seen: Vec<&BTreeSet<usize>> = Vec::new();
        ideals
            .iter()
            .map(|i| match seen.iter().position(|x| *x == i) {
                Some(k) => k,
                None => {
                    seen.push(i);
                    seen.len() - 1
                }
            })
            .collect()
    };
    [
        label((0..n).map(right).collect()),
        label((0..n).map(left).collect()),
        label((0..n).map(two).collect()),
    ]
}

fn same_partition(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|x| (0..a.len()).all(|y| (a[x] == a[y]) == (b[x] == b[y])))
}

/// Number of conjugacy classes of elements of order prime to `p` (all of
/// them when `p == 0`).
fn p_regular_classes(g: &MaxSubgroup, p: u64) -> usize {
    let n = g.len();
    let order = |x: usize| {
        let mut k = 1;
        let mut y = x;
        while y != g.identity_pos() {
            y = g.product(y, x);
            k += 1;
        }
        k as u64
    };
    let mut class_of = vec![usize::MAX; n];
    let mut count = 0;
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        for h in 0..n {
            let c = g.product(g.product(g.inverse(h), x), h);
            class_of[c] = x;
        }
        if p == 0 || order(x) % p != 0 {
            count += 1;
        }
    }
    count
}

fn brauer_count(s: &Semigroup, p: u64) -> usize {
    let green = green_structure(s).unwrap();
    green
        .regular_classes()
        .into_iter()
        .map(|j| p_regular_classes(&maximal_subgroup(s, green.idempotents_in(j)[0]).unwrap(), p))
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn green_matches_definitions(gens in prop::collection::vec(prop::collection::vec(0usize..3, 3), 1..=3)) {
        let s = Semigroup::from_transformations(&gens).unwrap();
        let g = green_structure(&s).unwrap();
        let [r, l, j] = naive_classes(&s);
        prop_assert!(same_partition(&r, &g.r_of));
        prop_assert!(same_partition(&l, &g.l_of));
        prop_assert!(same_partition(&j, &g.j_of));
        for x in 0..s.size() {
            let idempotent_in_class = (0..s.size()).any(|y| g.j_of[y] == g.j_of[x] && s.mul(y, y) == y);
            prop_assert_eq!(g.regular[g.j_of[x]], idempotent_in_class);
        }
    }
}

#[test]
fn symmetric_group_counts_match_conjugacy_classes() {
    let cfg = SearchConfig::default();
    let monoids = [
        vec![vec![1, 0], vec![0, 0]],
        vec![vec![1, 0, 2], vec![1, 2, 0]],
        vec![vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 2]],
        vec![vec![1, 0, 2], vec![0, 0, 2]],
    ];
    for gens in monoids {
        let s = Semigroup::from_transformations(&gens).unwrap();
        for (field, p) in [(Field::Rational, 0), (Field::Prime(2), 2), (Field::Prime(3), 3), (Field::Prime(5), 5)] {
            let c = all_irreducibles(&s, field, &cfg, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
            // symmetric groups split over every prime field
            assert_eq!(c.reports.len(), brauer_count(&s, p), "{gens:?} over {field}");
        }
    }
}

fn cyclic(n: usize) -> Semigroup {
    Semigroup::from_transformations(&[(1..=n).map(|i| i % n).collect()]).unwrap()
}

#[test]
fn cyclic_groups_over_non_splitting_fields() {
    // over Q the simples of C_n are indexed by the divisors d of n, of dimension phi(d)
    let cfg = SearchConfig::default();
    for (n, dims) in [(3, vec![1, 2]), (4, vec![1, 1, 2]), (5, vec![1, 4]), (6, vec![1, 1, 2, 2])] {
        let s = cyclic(n);
        let c = all_irreducibles(&s, Field::Rational, &cfg, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        let mut got: Vec<usize> = c.reports.iter().map(|r| r.simple_dim).collect();
        got.sort();
        assert_eq!(got, dims, "C_{n}");
        for r in &c.reports {
            let endo = semirep_core::module::hom_dim(&r.simple, &r.simple).unwrap();
            assert_eq!(endo, r.simple_dim, "C_{n}: endomorphism field has the module's dimension");
        }
    }
    // over F_2, x^2 + x + 1 is irreducible, so C_3 has a 2-dimensional simple
    let c = all_irreducibles(&cyclic(3), Field::Prime(2), &cfg, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
    assert_eq!(c.reports.iter().map(|r| r.simple_dim).collect::<Vec<_>>(), vec![1, 2]);
}

#[test]
fn t3_counts_match_partitions() {
    // p-regular classes of S_k are partitions of k with no part divisible by p
    let s = Semigroup::from_transformations(&[vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 2]]).unwrap();
    for (p, want) in [(2, 1 + 1 + 2), (3, 1 + 2 + 2), (5, 1 + 2 + 3), (7, 6)] {
        assert_eq!(brauer_count(&s, p), want);
    }
}
