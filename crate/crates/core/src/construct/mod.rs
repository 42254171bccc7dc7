//! Magic squares over every Abelian group of order `n²`, `n > 2`.
//!
//! The dispatcher splits the group by its Sylow 2-subgroup, builds a square
//! over one part from explicit constructions, and extends it to the whole
//! group with [`swl::swl`] and a Kotzig array over the rest.

pub mod direct;
pub mod pairs;
pub mod placement;
pub mod swl;

pub use direct::{
    lemma_2pow_pair, lemma_k2m_m, lemma_k2m_m_with_bases, lemma_z4n_zn, obs_z2_z2pow, obs_z4_z2pow,
};
pub use pairs::{lemma_gl2, lemma_p_pair};

use crate::array::GroupArray;
use crate::classical::cyclic_magic_square;
use crate::error::{Error, Result};
use crate::figures;
use crate::group::{crt_isomorphism, AbelianGroup, PrimaryFactor};
use crate::kotzig::kotzig_gamma;
use crate::numtheory::exact_sqrt;
use crate::verify::verify;

/// Largest group order [`construct`] accepts.
pub const MAX_CONSTRUCT_ORDER: u64 = 1 << 22;

/// A constructed square together with the chain of steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub square: GroupArray,
    pub route: String,
}

pub(crate) struct Built {
    pub(crate) square: GroupArray,
    pub(crate) route: String,
}

impl Built {
    pub(crate) fn new(square: GroupArray, route: impl Into<String>) -> Self {
        Self {
            square,
            route: route.into(),
        }
    }
}

/// Check that a construction produced a magic square, optionally with a
/// given magic sum. Any failure is a bug in the construction.
pub(crate) fn gate(a: GroupArray, expected: Option<&[u64]>, what: &str) -> Result<GroupArray> {
    let report = verify(&a);
    if !report.is_magic_square() {
        return Err(Error::ConstructionFailure(format!(
            "{what} produced a {} array over {}",
            report.classification.as_str(),
            a.group()
        )));
    }
    if let (Some(want), Some(mu)) = (expected, report.magic_sum.as_ref()) {
        if mu.coords() != want {
            return Err(Error::ConstructionFailure(format!(
                "{what} produced magic sum {mu}, expected {want:?}"
            )));
        }
    }
    Ok(a)
}

fn group_of(factors: &[PrimaryFactor]) -> AbelianGroup {
    let moduli: Vec<u64> = factors.iter().map(PrimaryFactor::modulus).collect();
    AbelianGroup::new(&moduli).expect("prime powers are valid moduli")
}

fn is_cyclic(factors: &[PrimaryFactor]) -> bool {
    factors.windows(2).all(|w| w[0].prime != w[1].prime)
}

fn cyclic(side: usize) -> Result<Built> {
    Ok(Built::new(
        cyclic_magic_square(side)?,
        format!("cyclic({side})"),
    ))
}

fn trivial_square() -> GroupArray {
    GroupArray::new(AbelianGroup::trivial(), 1, 1, Vec::new()).expect("1x1 over the trivial group")
}

/// Extend `base` to `base.group() ⊕ rest` with a Kotzig array over `rest`.
fn extend(base: Built, rest: &[PrimaryFactor]) -> Result<Built> {
    if rest.is_empty() {
        return Ok(base);
    }
    let h = group_of(rest);
    let side = base.square.side();
    let ka = kotzig_gamma(side, &h)?;
    Ok(Built {
        square: swl::swl(&base.square, &ka)?,
        route: format!("swl({}, kotzig({side}, {h}))", base.route),
    })
}

fn side_of(factors: &[PrimaryFactor]) -> Result<usize> {
    let order: u64 = factors.iter().map(PrimaryFactor::modulus).product();
    exact_sqrt(order)
        .map(|s| s as usize)
        .ok_or_else(|| Error::invalid(format!("order {order} is not a perfect square")))
}

/// Odd order: factors are sorted by (prime, exponent).
fn odd(factors: &[PrimaryFactor]) -> Result<Built> {
    let side = side_of(factors)?;
    if side == 1 {
        return Ok(Built::new(trivial_square(), "trivial"));
    }
    if is_cyclic(factors) {
        return cyclic(side);
    }
    let p = factors[0].prime;
    let own: Vec<usize> = (0..factors.len())
        .filter(|&i| factors[i].prime == p)
        .collect();
    let (base, taken) =
        if let Some(&i) = own.iter().find(|&&i| factors[i].exponent.is_multiple_of(2)) {
            let e = factors[i].exponent;
            (cyclic(p.pow(e / 2) as usize)?, vec![i])
        } else {
            let (i, j) = (own[0], own[1]);
            let (b, g) = (factors[i].exponent, factors[j].exponent);
            (pairs::p_pair(p, b, g)?, vec![i, j])
        };
    let rest: Vec<PrimaryFactor> = (0..factors.len())
        .filter(|i| !taken.contains(i))
        .map(|i| factors[i])
        .collect();
    extend(base, &rest)
}

/// Magic square over an Abelian group of odd order `n²`, `n ≥ 3`.
pub fn thm_odd(g: &AbelianGroup) -> Result<GroupArray> {
    if g.order().is_multiple_of(2) {
        return Err(Error::invalid(format!("{g} has even order")));
    }
    finish(g, checked_side(g)?, |_| odd(g.primary()))
}

/// Sylow 2-subgroup with exponents sorted ascending.
fn two_power(exps: &[u32]) -> Result<Built> {
    let total: u32 = exps.iter().sum();
    if total % 2 == 1 {
        return Err(Error::invalid("order 2^(odd) is not a perfect square"));
    }
    let alpha = total / 2;
    if alpha < 2 {
        return Err(Error::nonexistence("no magic square of side 2 exists"));
    }
    if exps.len() == 1 {
        return cyclic(1 << alpha);
    }
    if alpha == 2 {
        let (a, name) = match exps {
            [1, 3] => (figures::z2_z8(), "Z_2+Z_8"),
            [2, 2] => (figures::z4_z4(), "Z_4+Z_4"),
            [1, 1, 2] => (figures::z2_z2_z4(), "Z_2+Z_2+Z_4"),
            _ => (figures::z2_4(), "Z_2^4"),
        };
        return Ok(Built::new(a, format!("figure({name})")));
    }
    let two = |e: &[u32]| -> Vec<PrimaryFactor> {
        e.iter()
            .map(|&exponent| PrimaryFactor { prime: 2, exponent })
            .collect()
    };
    let (b1, b2) = (exps[0], exps[1]);
    let peel = |h: &[u32], k: Vec<u32>| -> Result<Built> {
        let base = two_power(&k)?;
        extend(base, &two(h))
    };
    if b1 == 1 && b2 == 1 {
        return peel(&[1, 1], exps[2..].to_vec());
    }
    if b1 == 2 {
        return peel(&[2], exps[1..].to_vec());
    }
    if b2 == 2 {
        let mut k = vec![b1];
        k.extend_from_slice(&exps[2..]);
        return peel(&[2], k);
    }
    if b1 % 2 == 0 {
        return extend(cyclic(1 << (b1 / 2))?, &two(&exps[1..]));
    }
    let i = (1..exps.len())
        .find(|&i| exps[i] % 2 == 1)
        .expect("an even total has a second odd exponent");
    let base = pairs::p_pair(2, b1, exps[i])?;
    let rest: Vec<u32> = (1..exps.len())
        .filter(|&j| j != i)
        .map(|j| exps[j])
        .collect();
    extend(base, &two(&rest))
}

/// Magic square over an Abelian 2-group of order `2^{2α}`, `α ≥ 2`.
pub fn thm_2power(g: &AbelianGroup) -> Result<GroupArray> {
    if g.primary().iter().any(|f| f.prime != 2) {
        return Err(Error::invalid(format!("{g} is not a 2-group")));
    }
    finish(g, checked_side(g)?, |_| {
        two_power(&g.primary().iter().map(|f| f.exponent).collect::<Vec<_>>())
    })
}

fn general(g: &AbelianGroup, side: usize) -> Result<Built> {
    let factors = g.primary();
    let twos: Vec<u32> = factors
        .iter()
        .filter(|f| f.prime == 2)
        .map(|f| f.exponent)
        .collect();
    let odds: Vec<PrimaryFactor> = factors.iter().copied().filter(|f| f.prime != 2).collect();
    let beta = side.trailing_zeros();
    if beta == 0 {
        return odd(&odds);
    }
    if odds.is_empty() {
        return two_power(&twos);
    }
    if beta >= 2 {
        let base = two_power(&twos)?;
        return extend(base, &odds);
    }
    let k = side >> 1;
    if twos == [1, 1] {
        let base = odd(&odds)?;
        let ka = kotzig_gamma(k, &AbelianGroup::new(&[2, 2])?)?;
        return Ok(Built {
            square: swl::swl(&base.square, &ka)?,
            route: format!("swl({}, kotzig({k}, Z_2+Z_2))", base.route),
        });
    }
    if is_cyclic(factors) {
        return cyclic(side);
    }
    // Sylow 2-subgroup Z_4: pair Z_4 with two same-parity factors of one odd prime.
    let (i, j) = (0..odds.len())
        .flat_map(|i| (i + 1..odds.len()).map(move |j| (i, j)))
        .find(|&(i, j)| {
            odds[i].prime == odds[j].prime
                && (odds[i].exponent + odds[j].exponent).is_multiple_of(2)
        })
        .ok_or_else(|| {
            Error::ConstructionFailure(format!("no same-parity pair of odd factors in {g}"))
        })?;
    let (p, a, b) = (odds[i].prime, odds[i].exponent, odds[j].exponent);
    let base = pairs::gl2(p, a, b)?;
    let rest: Vec<PrimaryFactor> = (0..odds.len())
        .filter(|&x| x != i && x != j)
        .map(|x| odds[x])
        .collect();
    extend(base, &rest)
}

fn checked_side(g: &AbelianGroup) -> Result<usize> {
    let n = exact_sqrt(g.order())
        .ok_or_else(|| Error::invalid(format!("|{g}| = {} is not a perfect square", g.order())))?;
    if n == 2 {
        return Err(Error::nonexistence(
            "no magic square of side 2 exists over a group of order 4",
        ));
    }
    if g.order() > MAX_CONSTRUCT_ORDER {
        return Err(Error::ResourceLimit(format!(
            "order {} exceeds the limit {MAX_CONSTRUCT_ORDER}",
            g.order()
        )));
    }
    Ok(n as usize)
}

fn finish(
    g: &AbelianGroup,
    side: usize,
    build: impl FnOnce(usize) -> Result<Built>,
) -> Result<GroupArray> {
    Ok(finish_route(g, side, build)?.square)
}

fn finish_route(
    g: &AbelianGroup,
    side: usize,
    build: impl FnOnce(usize) -> Result<Built>,
) -> Result<Construction> {
    let built = build(side)?;
    let iso = crt_isomorphism(built.square.group(), g)?;
    let square = gate(built.square.reexpress(&iso)?, None, "construct")?;
    Ok(Construction {
        square,
        route: built.route,
    })
}

/// Magic square over any Abelian group of order `n²` with `n ≠ 2`, in the
/// caller's presentation.
pub fn construct(g: &AbelianGroup) -> Result<GroupArray> {
    Ok(construct_with_route(g)?.square)
}

/// Like [`construct`], also reporting which constructions were combined.
pub fn construct_with_route(g: &AbelianGroup) -> Result<Construction> {
    let side = checked_side(g)?;
    finish_route(g, side, |side| general(g, side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::abelian_groups_of_order;

    #[test]
    fn gate_rejects_non_magic() {
        let a = GroupArray::from_ints(
            AbelianGroup::cyclic(9).unwrap(),
            &[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]],
        )
        .unwrap();
        assert!(matches!(
            gate(a, None, "t"),
            Err(Error::ConstructionFailure(_))
        ));
        assert!(matches!(
            gate(figures::z9(), Some(&[1]), "t"),
            Err(Error::ConstructionFailure(_))
        ));
    }

    #[test]
    fn every_group_up_to_side_twelve() {
        for n in (1..=12u64).filter(|&n| n != 2) {
            for g in abelian_groups_of_order(n * n) {
                let c = construct_with_route(&g).unwrap_or_else(|e| panic!("{g}: {e}"));
                assert_eq!(c.square.group(), &g);
                assert_eq!(c.square.side() as u64, n);
                assert!(verify(&c.square).is_magic_square(), "{g} via {}", c.route);
            }
        }
    }

    #[test]
    fn rejects() {
        let g = |m: &[u64]| AbelianGroup::new(m).unwrap();
        assert!(matches!(
            construct(&g(&[2, 2])),
            Err(Error::Nonexistence(_))
        ));
        assert!(matches!(construct(&g(&[4])), Err(Error::Nonexistence(_))));
        assert!(matches!(construct(&g(&[8])), Err(Error::InvalidInput(_))));
        assert!(matches!(thm_odd(&g(&[4, 4])), Err(Error::InvalidInput(_))));
        assert!(matches!(thm_2power(&g(&[9])), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn odd_and_two_power_entry_points_keep_presentation() {
        let g = AbelianGroup::new(&[3, 75]).unwrap();
        assert_eq!(thm_odd(&g).unwrap().group(), &g);
        let h = AbelianGroup::new(&[2, 4, 8]).unwrap();
        assert_eq!(thm_2power(&h).unwrap().group(), &h);
    }
}
