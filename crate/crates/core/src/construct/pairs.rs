//! Two-generator groups `Z_{p^β} ⊕ Z_{p^γ}` and `Z_{4n^α} ⊕ Z_{n^β}`.

use crate::array::GroupArray;
use crate::classical::cyclic_magic_square;
use crate::error::{Error, Result};
use crate::figures;
use crate::group::{crt_isomorphism, AbelianGroup};
use crate::kotzig::kotzig_gamma;
use crate::latin::znzn_square;
use crate::numtheory::is_prime;
use crate::verify::verify;

use super::direct::{lemma_2pow_pair, lemma_k2m_m, lemma_z4n_zn, obs_z2_z2pow, obs_z4_z2pow};
use super::placement::{solve_placement, DEFAULT_PLACEMENT_BUDGET};
use super::swl::swl;
use super::{gate, Built};

fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| Error::ResourceLimit(format!("{p}^{e} overflows")))
}

/// Magic square over `Z_{p^β} ⊕ Z_{p^γ}` (in that presentation) of side
/// `p^{(β+γ)/2}`, for `1 ≤ β ≤ γ`, `β + γ` even and `p^{β+γ} > 4`.
pub fn lemma_p_pair(p: u64, beta: u32, gamma: u32) -> Result<GroupArray> {
    Ok(p_pair(p, beta, gamma)?.square)
}

pub(crate) fn p_pair(p: u64, beta: u32, gamma: u32) -> Result<Built> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if beta < 1 || beta > gamma || (beta + gamma) % 2 == 1 {
        return Err(Error::invalid(format!(
            "need 1 <= beta <= gamma with beta + gamma even, got ({beta}, {gamma})"
        )));
    }
    if p == 2 && beta + gamma == 2 {
        return Err(Error::invalid(
            "Z_2+Z_2 has order 4; no magic square of side 2 exists",
        ));
    }
    let (pb, pg) = (checked_pow(p, beta)?, checked_pow(p, gamma)?);
    let target = AbelianGroup::new(&[pb, pg])?;
    let built = if beta.is_multiple_of(2) {
        if p == 2 && beta == 2 && gamma == 2 {
            Built::new(figures::z4_z4(), "figure(Z_4+Z_4)")
        } else if p == 2 && beta == 2 {
            Built::new(
                obs_z4_z2pow(gamma / 2)?,
                format!("obs_z4_z2pow({})", gamma / 2),
            )
        } else {
            let side = checked_pow(p, beta / 2)? as usize;
            let sq = cyclic_magic_square(side)?;
            let ka = kotzig_gamma(side, &AbelianGroup::cyclic(pg)?)?;
            Built::new(
                swl(&sq, &ka)?,
                format!("swl(cyclic({side}), kotzig({side}, Z_{pg}))"),
            )
        }
    } else if beta == gamma {
        Built::new(znzn_square(pb)?, format!("znzn({pb})"))
    } else if p == 2 && beta == 1 {
        let alpha = gamma.div_ceil(2);
        Built::new(obs_z2_z2pow(alpha)?, format!("obs_z2_z2pow({alpha})"))
    } else if p == 2 && gamma == beta + 2 {
        let delta = (beta - 1) / 2;
        Built::new(lemma_2pow_pair(delta)?, format!("lemma_2pow_pair({delta})"))
    } else {
        let k = checked_pow(p, (gamma - beta) / 2)? as usize;
        Built::new(lemma_k2m_m(k, pb)?, format!("lemma_k2m_m({k}, {pb})"))
    };
    let iso = crt_isomorphism(built.square.group(), &target)?;
    Ok(Built {
        square: gate(built.square.reexpress(&iso)?, None, "lemma_p_pair")?,
        route: built.route,
    })
}

/// Magic square over `Z_{4n^α} ⊕ Z_{n^β}` of side `2n^{(α+β)/2}` for odd
/// `n > 1`, `1 ≤ α ≤ β`, `α + β` even.
///
/// `α = β` is the explicit `Z_{4N} ⊕ Z_N` square. Even `α` composes the cyclic
/// square of `Z_{4n^α}` with a Kotzig array over `Z_{n^β}`. Odd `α < β` lifts
/// the square `Y` for `(α, β-2)` by embedding `Z_{n^{β-2}}` as `n²·Z_{n^β}` and
/// adding one of `n²` integer residual blocks to each of `n²` copies.
pub fn lemma_gl2(n: u64, alpha: u32, beta: u32) -> Result<GroupArray> {
    Ok(gl2(n, alpha, beta)?.square)
}

pub(crate) fn gl2(n: u64, alpha: u32, beta: u32) -> Result<Built> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!("n must be odd and > 1, got {n}")));
    }
    if alpha < 1 || alpha > beta || (alpha + beta) % 2 == 1 {
        return Err(Error::invalid(format!(
            "need 1 <= alpha <= beta with alpha + beta even, got ({alpha}, {beta})"
        )));
    }
    let na = checked_pow(n, alpha)?;
    let nb = checked_pow(n, beta)?;
    if alpha == beta {
        return Ok(Built::new(lemma_z4n_zn(na)?, format!("lemma_z4n_zn({na})")));
    }
    if alpha.is_multiple_of(2) {
        let side = 2 * checked_pow(n, alpha / 2)? as usize;
        let sq = cyclic_magic_square(side)?;
        let ka = kotzig_gamma(side, &AbelianGroup::cyclic(nb)?)?;
        return Ok(Built::new(
            swl(&sq, &ka)?,
            format!("swl(cyclic({side}), kotzig({side}, Z_{nb}))"),
        ));
    }

    let inner = gl2(n, alpha, beta - 2)?;
    let y = &inner.square;
    let side = y.side();
    let m = (side / 2) as u64;
    let n2 = n * n;
    let count = n2 as usize;

    // Residual block t (t = 0..n²) at 0-based (i, j).
    let residual = |t: u64, i: usize, j: usize| -> u64 {
        let odd_row = |j: usize| if j.is_multiple_of(2) { t } else { n2 - 1 - t };
        if i.is_multiple_of(2) {
            odd_row(j)
        } else {
            n2 - 1 - odd_row(j)
        }
    };
    // Diagonal residuals are 2m·t and 2m(n²-1-t); lines carry m(n²-1).
    let zb = AbelianGroup::cyclic(nb)?;
    let line = (m as u128 * (n2 - 1) as u128 % nb as u128) as u64;
    let excess = |value: u128| -> Vec<u64> {
        vec![((value % nb as u128 + nb as u128 - line as u128) % nb as u128) as u64]
    };
    let main: Vec<Vec<u64>> = (0..n2).map(|t| excess(2 * m as u128 * t as u128)).collect();
    let back: Vec<Vec<u64>> = (0..n2)
        .map(|t| excess(2 * m as u128 * (n2 - 1 - t) as u128))
        .collect();
    let placement = solve_placement(&zb, n as usize, &main, &back, DEFAULT_PLACEMENT_BUDGET)?;

    let group = AbelianGroup::new(&[4 * na, nb])?;
    let big = side * n as usize;
    let out = GroupArray::from_fn(group, big, big, |r, c| {
        let (p, i, q, j) = (r / side, r % side, c / side, c % side);
        let jj = if placement.reversed(p, q) {
            side - 1 - j
        } else {
            j
        };
        let t = placement.block(p, q) as u64;
        let yv = y.coords(i, jj);
        vec![yv[0], (n2 * yv[1] + residual(t, i, jj)) % nb]
    })?;
    debug_assert!(count == placement.k() * placement.k());

    let delta0 = verify(y).magic_sum.expect("inner square is magic");
    let d = delta0.coords();
    let first = (n as u128 * d[0] as u128 % (4 * na) as u128) as u64;
    let second =
        ((n as u128 * n2 as u128 * d[1] as u128 + n as u128 * line as u128) % nb as u128) as u64;
    Ok(Built {
        square: gate(out, Some(&[first, second]), "lemma_gl2")?,
        route: format!("gl2_lift({n}, {}; {})", count, inner.route),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn magic(a: &GroupArray) -> bool {
        verify(a).is_magic_square()
    }

    #[test]
    fn p_pair_routes() {
        let a = lemma_p_pair(3, 1, 3).unwrap();
        assert_eq!((a.side(), a.group().moduli()), (9, &[3u64, 27][..]));
        assert!(magic(&a));
        assert_eq!(lemma_p_pair(2, 1, 3).unwrap(), obs_z2_z2pow(2).unwrap());
        let b = lemma_p_pair(3, 3, 3).unwrap();
        assert_eq!(verify(&b).magic_sum.unwrap().coords(), &[0, 0]);
        for (p, b, g) in [
            (2, 2, 2),
            (2, 2, 4),
            (2, 4, 4),
            (3, 2, 2),
            (3, 2, 4),
            (5, 1, 1),
            (2, 3, 5),
            (2, 1, 5),
            (2, 3, 7),
            (5, 1, 3),
        ] {
            let a = lemma_p_pair(p, b, g).unwrap();
            assert!(magic(&a), "({p}, {b}, {g})");
        }
    }

    #[test]
    fn p_pair_preconditions() {
        assert!(matches!(lemma_p_pair(2, 1, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(lemma_p_pair(3, 1, 2), Err(Error::InvalidInput(_))));
        assert!(matches!(lemma_p_pair(3, 3, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(lemma_p_pair(4, 1, 1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn gl2_routes() {
        assert_eq!(lemma_gl2(3, 1, 1).unwrap(), figures::z12_z3());
        let a = lemma_gl2(3, 1, 3).unwrap();
        assert_eq!((a.side(), a.group().moduli()), (18, &[12u64, 27][..]));
        assert!(magic(&a));
        let b = lemma_gl2(5, 2, 2).unwrap();
        assert_eq!(verify(&b).magic_sum.unwrap().coords(), &[75, 0]);
        assert!(magic(&lemma_gl2(3, 2, 4).unwrap()));
        assert!(magic(&lemma_gl2(5, 1, 3).unwrap()));
        assert!(magic(&lemma_gl2(3, 1, 5).unwrap()));
        assert!(magic(&lemma_gl2(3, 3, 5).unwrap()));
        assert!(lemma_gl2(3, 3, 1).is_err());
        assert!(lemma_gl2(4, 1, 1).is_err());
    }
}
