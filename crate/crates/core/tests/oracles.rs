//! Brute-force oracles checked against the library's constructions.

use abelian_magic::classical::int_kotzig;
use abelian_magic::field::gf_make;
use abelian_magic::group::{abelian_groups_of_order, AbelianGroup};
use abelian_magic::kotzig::complete_mapping;

/// Search a `j × k` array with rows permuting `1..=k` and equal column sums.
/// Row 0 is fixed to the identity; the last row is forced by the column target.
/// Returns `None` when the node budget runs out.
fn kotzig_search(j: usize, k: usize, budget: u64) -> Option<bool> {
    let total = j * (k + 1);
    if total % 2 == 1 {
        // Row sums add to j·k(k+1)/2, so each of the k columns needs j(k+1)/2.
        return Some(false);
    }
    let target = total / 2;
    if j == 1 {
        return Some(k == 1);
    }
    struct S {
        j: usize,
        k: usize,
        target: usize,
        col: Vec<usize>,
        used: Vec<Vec<bool>>,
        nodes: u64,
        budget: u64,
    }
    fn dfs(s: &mut S, r: usize, c: usize) -> Option<bool> {
        s.nodes += 1;
        if s.nodes > s.budget {
            return None;
        }
        if r == s.j - 1 {
            // The last row is what remains in each column.
            let mut seen = vec![false; s.k + 1];
            return Some(s.col.iter().all(|&sum| {
                let need = s.target.wrapping_sub(sum);
                (1..=s.k).contains(&need) && !std::mem::replace(&mut seen[need], true)
            }));
        }
        if c == s.k {
            return dfs(s, r + 1, 0);
        }
        // Rows below r, including the forced last row.
        let rest = s.j - 1 - r;
        let ideal = (s.target.saturating_sub(s.col[c])) as f64 / (rest + 1) as f64;
        let mut options: Vec<usize> = (1..=s.k).filter(|&x| !s.used[r][x]).collect();
        options.sort_by(|a, b| {
            (*a as f64 - ideal)
                .abs()
                .total_cmp(&(*b as f64 - ideal).abs())
        });
        for x in options {
            let after = s.col[c] + x;
            if after + rest > s.target || after + rest * s.k < s.target {
                continue;
            }
            // Second-to-last row: reserve the forced last-row entry now.
            let forced = (rest == 1).then(|| s.target - after);
            if forced.is_some_and(|y| s.used[s.j - 1][y]) {
                continue;
            }
            if let Some(y) = forced {
                s.used[s.j - 1][y] = true;
            }
            s.used[r][x] = true;
            s.col[c] = after;
            let result = dfs(s, r, c + 1);
            s.col[c] -= x;
            s.used[r][x] = false;
            if let Some(y) = forced {
                s.used[s.j - 1][y] = false;
            }
            match result {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
    let mut s = S {
        j,
        k,
        target,
        col: (1..=k).collect(),
        used: vec![vec![false; k + 1]; j],
        nodes: 0,
        budget,
    };
    dfs(&mut s, 1, 0)
}

#[test]
fn integer_kotzig_matches_search() {
    for j in 2..=9 {
        for k in 1..=15 {
            let searched =
                kotzig_search(j, k, 5_000_000).unwrap_or_else(|| panic!("budget at j={j}, k={k}"));
            match int_kotzig(j, k) {
                Ok(a) => {
                    assert!(searched, "j={j}, k={k}: built but search found none");
                    let target = (j * (k + 1) / 2) as u64;
                    for i in 0..j {
                        let mut row = a.row(i).to_vec();
                        row.sort_unstable();
                        assert_eq!(
                            row,
                            (1..=k as u64).collect::<Vec<_>>(),
                            "j={j}, k={k}, row {i}"
                        );
                    }
                    for c in 0..k {
                        assert_eq!(
                            (0..j).map(|i| a.get(i, c)).sum::<u64>(),
                            target,
                            "j={j}, k={k}, column {c}"
                        );
                    }
                }
                Err(_) => assert!(
                    !searched,
                    "j={j}, k={k}: search found one but the constructor refused"
                ),
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("a larger element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Exhaustive search over all permutations for a complete mapping.
fn has_complete_mapping(g: &AbelianGroup) -> bool {
    let n = g.order() as usize;
    let elems: Vec<Vec<u64>> = (0..n).map(|i| g.coords_at(i)).collect();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        let mut hit = vec![false; n];
        let ok = (0..n).all(|x| {
            !std::mem::replace(
                &mut hit[g.index_of(&g.add_coords(&elems[x], &elems[p[x]]))],
                true,
            )
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

#[test]
fn complete_mappings_agree_with_exhaustion() {
    for order in 2..=9 {
        for g in abelian_groups_of_order(order) {
            let exists = has_complete_mapping(&g);
            assert_eq!(complete_mapping(&g).is_ok(), exists, "{g}");
            assert_eq!(g.in_class_g(), exists, "{g}");
        }
    }
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    // Coefficients low to high; b is monic.
    while a.len() >= b.len() {
        let lead = *a.last().unwrap();
        let shift = a.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p * p - lead * c % p) % p;
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn monic_polys(p: u64, degree: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..p.pow(degree as u32)).map(move |mut code| {
        let mut c: Vec<u64> = (0..degree)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect();
        c.push(1);
        c
    })
}

fn irreducible(f: &[u64], p: u64) -> bool {
    let t = f.len() - 1;
    (1..=t / 2).all(|d| monic_polys(p, d).all(|g| !poly_rem(f.to_vec(), &g, p).is_empty()))
}

#[test]
fn field_moduli_are_the_first_irreducibles() {
    for (p, t) in [
        (2u64, 2u32),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 2),
        (3, 3),
        (5, 2),
        (7, 2),
    ] {
        let f = gf_make(p, t).unwrap();
        let modulus = f.modulus();
        assert!(irreducible(&modulus, p), "GF({p}^{t})");
        let first = monic_polys(p, t as usize)
            .find(|g| irreducible(g, p))
            .unwrap();
        assert_eq!(modulus, first, "GF({p}^{t})");
        for x in 1..f.order() {
            assert_eq!(
                (1..f.order()).filter(|&y| f.mul(x, y) == 1).count(),
                1,
                "GF({p}^{t}) element {x}"
            );
        }
    }
}
