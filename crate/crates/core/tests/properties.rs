//! Property tests over randomly chosen groups, symmetries and elements.

use abelian_magic::array::{Dihedral, GroupArray};
use abelian_magic::construct::construct;
use abelian_magic::field::gf_make;
use abelian_magic::group::{abelian_groups_of_order, crt_isomorphism, AbelianGroup};
use abelian_magic::io::{from_csv, from_json, to_csv, to_json};
use abelian_magic::kotzig::{complete_mapping, kotzig_gamma};
use abelian_magic::latin::ddmols_prime_power;
use abelian_magic::verify::verify;
use proptest::prelude::*;

/// Every group of order n² for 3 <= n <= 12.
fn groups() -> Vec<AbelianGroup> {
    (3..=12u64)
        .flat_map(|n| abelian_groups_of_order(n * n))
        .collect()
}

fn any_group() -> impl Strategy<Value = AbelianGroup> {
    prop::sample::select(groups())
}

/// A group together with coordinates of one of its elements.
fn group_and_element() -> impl Strategy<Value = (AbelianGroup, Vec<u64>)> {
    any_group().prop_flat_map(|g| {
        let coords: Vec<_> = g.moduli().iter().map(|&m| 0..m).collect();
        (Just(g), coords)
    })
}

fn any_symmetry() -> impl Strategy<Value = Dihedral> {
    prop::sample::select(Dihedral::ALL.to_vec())
}

/// A random presentation of a random group, plus a second presentation of the same group.
fn two_presentations() -> impl Strategy<Value = (AbelianGroup, AbelianGroup)> {
    any_group()
        .prop_flat_map(|g| {
            let primary = g.primary_moduli();
            let merges = prop::collection::vec(0..primary.len().max(1), primary.len());
            (Just(g), Just(primary), merges)
        })
        .prop_map(|(g, primary, slots)| {
            // Multiply primary factors of distinct primes into shared slots where possible.
            let mut buckets: Vec<Vec<u64>> = vec![Vec::new(); primary.len()];
            for (q, slot) in primary.iter().zip(slots) {
                let coprime = |b: &Vec<u64>| b.iter().all(|&x| num_gcd(x, *q) == 1);
                let target = if coprime(&buckets[slot]) {
                    slot
                } else {
                    buckets.iter().position(coprime).unwrap()
                };
                buckets[target].push(*q);
            }
            let moduli: Vec<u64> = buckets
                .iter()
                .filter(|b| !b.is_empty())
                .map(|b| b.iter().product())
                .collect();
            (g, AbelianGroup::new(&moduli).unwrap())
        })
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetries_preserve_magic((g, s) in (any_group(), any_symmetry())) {
        let a = construct(&g).unwrap();
        let mu = verify(&a).magic_sum.unwrap();
        let b = a.transformed(s);
        let r = verify(&b);
        prop_assert!(r.is_magic_square());
        prop_assert_eq!(r.magic_sum.unwrap(), mu);
    }

    #[test]
    fn translation_shifts_the_sum((g, c) in group_and_element()) {
        let a = construct(&g).unwrap();
        let n = a.side() as u64;
        let c = g.element(&c).unwrap();
        let mu = verify(&a).magic_sum.unwrap();
        let r = verify(&a.translated(&c).unwrap());
        prop_assert!(r.is_magic_square());
        prop_assert_eq!(r.magic_sum.unwrap(), &mu + &c.scale(n));
    }

    #[test]
    fn crt_isomorphism_is_a_homomorphism(((src, dst), x, y) in (two_presentations(), any::<u64>(), any::<u64>())) {
        let iso = crt_isomorphism(&src, &dst).unwrap();
        let n = src.order() as usize;
        let (x, y) = (src.coords_at(x as usize % n), src.coords_at(y as usize % n));
        let lhs = iso.apply_coords(&src.add_coords(&x, &y));
        let rhs = dst.add_coords(&iso.apply_coords(&x), &iso.apply_coords(&y));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(iso.inverse().apply_coords(&iso.apply_coords(&x)), x);
    }

    #[test]
    fn reexpressed_squares_stay_magic((src, dst) in two_presentations()) {
        let a = construct(&src).unwrap();
        let b = a.reexpress(&crt_isomorphism(&src, &dst).unwrap()).unwrap();
        prop_assert_eq!(b.group(), &dst);
        prop_assert!(verify(&b).is_magic_square());
    }

    #[test]
    fn serialization_round_trips(g in any_group()) {
        let a = construct(&g).unwrap();
        prop_assert_eq!(from_json(&to_json(&a)).unwrap(), a.clone());
        prop_assert_eq!(from_csv(&to_csv(&a), &g).unwrap(), a);
    }

    #[test]
    fn magic_sum_times_side_is_the_group_sum(g in any_group()) {
        let a = construct(&g).unwrap();
        let mu = verify(&a).magic_sum.unwrap();
        prop_assert_eq!(mu.scale(a.side() as u64), g.element_sum());
    }

    #[test]
    fn kotzig_columns_vanish((order, j) in (2u64..=48, 2usize..=9)) {
        for g in abelian_groups_of_order(order) {
            match kotzig_gamma(j, &g) {
                Ok(ka) => {
                    prop_assert!(ka.rows_are_permutations());
                    prop_assert!(ka.column_sum().unwrap().is_zero());
                }
                Err(_) => prop_assert!(j % 2 == 1 && !g.in_class_g()),
            }
        }
    }

    #[test]
    fn field_axioms((p, t, x, y, z) in (prop::sample::select(vec![2u64, 3, 5, 7]), 1u32..=4, any::<u64>(), any::<u64>(), any::<u64>())) {
        let f = gf_make(p, t).unwrap();
        let q = f.order();
        let (x, y, z) = (x % q, y % q, z % q);
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.add(x, f.neg(x)), 0);
        if x != 0 {
            prop_assert_eq!(f.mul(x, f.inverse(x).unwrap()), 1);
        }
    }
}

#[test]
fn kronecker_products_of_ddmols() {
    for (p, q) in [(4, 5), (5, 7), (4, 4), (7, 8)] {
        let pair = ddmols_prime_power(p)
            .unwrap()
            .kronecker(&ddmols_prime_power(q).unwrap());
        assert_eq!(pair.side(), (p * q) as usize);
        assert!(pair.is_valid(), "{p} x {q}");
    }
}

#[test]
fn complete_mappings_on_small_class_g_groups() {
    for order in 2..=64 {
        for g in abelian_groups_of_order(order)
            .into_iter()
            .filter(AbelianGroup::in_class_g)
        {
            let m = complete_mapping(&g).unwrap();
            let n = g.order() as usize;
            let mut images = vec![false; n];
            let mut diffs = vec![false; n];
            for i in 0..n {
                let x = g.coords_at(i);
                let y = g.coords_at(m.table()[i]);
                images[m.table()[i]] = true;
                diffs[g.index_of(&g.add_coords(&x, &y))] = true;
            }
            assert!(images.iter().all(|&b| b) && diffs.iter().all(|&b| b), "{g}");
        }
    }
}

#[test]
fn dihedral_orbit_of_a_square_has_eight_members() {
    let a = construct(&AbelianGroup::new(&[5, 5]).unwrap()).unwrap();
    let images: Vec<GroupArray> = Dihedral::ALL.iter().map(|&d| a.transformed(d)).collect();
    for (i, x) in images.iter().enumerate() {
        for y in &images[i + 1..] {
            assert_ne!(x, y);
        }
    }
}
