//! Explicit constructions for two-generator groups that the composition
//! step cannot reach on its own.

use crate::array::GroupArray;
use crate::classical::{cyclic_magic_square, int_magic_square, IntSquare};
use crate::error::{Error, Result};
use crate::figures;
use crate::group::AbelianGroup;
use crate::latin::znzn_square;
use crate::verify::verify;

use super::gate;

/// Magic square over `Z_2 ⊕ Z_{2^{2α-1}}` of side `2^α`, magic sum `(0, -2^{α-1})`.
///
/// Row 0 is `0, 1, …, 2^{α-1}-1` followed by the remaining values with
/// adjacent pairs swapped; row 1 complements row 0 to `2^{α+1}-1`; each
/// further pair of rows in the top half adds `2^{α+1}`; the bottom half
/// repeats the top half with first coordinate 1.
pub fn obs_z2_z2pow(alpha: u32) -> Result<GroupArray> {
    if !(2..=15).contains(&alpha) {
        return Err(Error::out_of_domain(format!(
            "need 2 <= alpha <= 15, got {alpha}"
        )));
    }
    let side = 1usize << alpha;
    let half = side / 2;
    let modulus = 1u64 << (2 * alpha - 1);
    let step = 1u64 << (alpha + 1);
    let row0: Vec<u64> = (0..side as u64)
        .map(|j| match j {
            j if j < half as u64 => j,
            j if j % 2 == 0 => j + 1,
            j => j - 1,
        })
        .collect();
    let group = AbelianGroup::new(&[2, modulus])?;
    let out = GroupArray::from_fn(group, side, side, |i, j| {
        let top = i % half;
        let base = if top.is_multiple_of(2) {
            row0[j]
        } else {
            step - 1 - row0[j]
        };
        let value = (base + step * (top / 2) as u64) % modulus;
        vec![(i / half) as u64, value]
    })?;
    let mu = (modulus - (1 << (alpha - 1))) % modulus;
    gate(out, Some(&[0, mu]), "obs_z2_z2pow")
}

/// Magic square over `Z_{2^{2δ+1}} ⊕ Z_{2^{2δ+3}}` of side `2^{2δ+2}`.
///
/// `δ = 0` is the reference `Z_2 ⊕ Z_8` square. `δ = 1` tiles four copies of
/// the `Z_2 ⊕ Z_32` square, reading its `Z_2` coordinate as `4·Z_8` and
/// adding `0, 1, 2, 3` to the first coordinate of the four quadrants.
/// `δ ≥ 2` combines an integer square `A` of side `2^δ` with the
/// `Z_2 ⊕ Z_{2^{2δ+3}}` square `B`: block `(i, j)` holds
/// `(2^{2δ}·b₁ + a_{i,j}, b₂)`.
pub fn lemma_2pow_pair(delta: u32) -> Result<GroupArray> {
    match delta {
        0 => gate(figures::z2_z8(), None, "lemma_2pow_pair"),
        1 => {
            let b = obs_z2_z2pow(3)?;
            let group = AbelianGroup::new(&[8, 32])?;
            let out = GroupArray::from_fn(group, 16, 16, |r, c| {
                let tag = (2 * (r / 8) + c / 8) as u64;
                let x = b.coords(r % 8, c % 8);
                vec![4 * x[0] + tag, x[1]]
            })?;
            gate(out, Some(&[0, 24]), "lemma_2pow_pair")
        }
        d if d <= 6 => {
            let a = int_magic_square(1 << d)?;
            let b = obs_z2_z2pow(d + 2)?;
            let scale = 1u64 << (2 * d);
            let block = b.side();
            let side = block * a.side();
            let group = AbelianGroup::new(&[1 << (2 * d + 1), 1 << (2 * d + 3)])?;
            let out = GroupArray::from_fn(group, side, side, |r, c| {
                let x = b.coords(r % block, c % block);
                vec![scale * x[0] + a.get(r / block, c / block), x[1]]
            })?;
            gate(out, None, "lemma_2pow_pair")
        }
        d => Err(Error::ResourceLimit(format!(
            "delta = {d} would give a side of 2^{}",
            2 * d + 2
        ))),
    }
}

/// Magic square over `Z_{k²m} ⊕ Z_m` of side `km` from the default bases:
/// the integer square of side `k` and the `Z_m ⊕ Z_m` square.
pub fn lemma_k2m_m(k: usize, m: u64) -> Result<GroupArray> {
    if k < 3 {
        return Err(Error::out_of_domain(format!("need k >= 3, got {k}")));
    }
    let b = match znzn_square(m) {
        Ok(b) => b,
        Err(Error::Unsupported(msg))
        | Err(Error::InvalidInput(msg))
        | Err(Error::Nonexistence(msg)) => {
            return Err(Error::out_of_domain(format!(
                "no Z_m+Z_m base for m = {m}: {msg}"
            )))
        }
        Err(e) => return Err(e),
    };
    lemma_k2m_m_with_bases(&int_magic_square(k)?, &b)
}

/// Kronecker-type product of an integer magic square `A` (side `k`, entries
/// `0..k²`) and a `Z_m ⊕ Z_m` magic square `B`:
/// `c_{qk+r, q'k+r'} = (k²·b₁(q,q') + a(r,r'), b₂(q,q'))`.
/// The magic sum is `(k³μ_B₁ + m·μ_A, k·μ_B₂)`.
pub fn lemma_k2m_m_with_bases(a: &IntSquare, b: &GroupArray) -> Result<GroupArray> {
    if !a.is_magic() {
        return Err(Error::invalid("A must be an integer magic square on 0..k²"));
    }
    let bm = b.group().moduli();
    if bm.len() != 2 || bm[0] != bm[1] || b.side() as u64 != bm[0] {
        return Err(Error::invalid("B must be a square of side m over Z_m+Z_m"));
    }
    let mu_b = match verify(b).magic_sum {
        Some(mu) if verify(b).is_magic_square() => mu,
        _ => return Err(Error::invalid("B is not a magic square")),
    };
    let (k, m) = (a.side(), bm[0]);
    let k2 = (k * k) as u64;
    let big = k2 * m;
    let group = AbelianGroup::new(&[big, m])?;
    let side = k * m as usize;
    let out = GroupArray::from_fn(group, side, side, |u, v| {
        let (q1, r1, q2, r2) = (u / k, u % k, v / k, v % k);
        let x = b.coords(q1, q2);
        vec![k2 * x[0] + a.get(r1, r2), x[1]]
    })?;
    let k3 = (k2 as u128 * k as u128) % big as u128;
    let first =
        (k3 * mu_b.coords()[0] as u128 + m as u128 * a.magic_constant() as u128) % big as u128;
    let second = (k as u64 % m) * mu_b.coords()[1] % m;
    gate(out, Some(&[first as u64, second]), "lemma_k2m_m")
}

/// Magic square over `Z_4 ⊕ Z_{2^{2γ}}` of side `2^{γ+1}`: the cyclic square of
/// side `2^γ` in each quadrant, tagged `0, 1, 2, 3` in the `Z_4` coordinate.
pub fn obs_z4_z2pow(gamma: u32) -> Result<GroupArray> {
    if !(2..=12).contains(&gamma) {
        return Err(Error::out_of_domain(format!(
            "need 2 <= gamma <= 12, got {gamma}"
        )));
    }
    let half = 1usize << gamma;
    let a = cyclic_magic_square(half)?;
    let group = AbelianGroup::new(&[4, 1 << (2 * gamma)])?;
    let out = GroupArray::from_fn(group, 2 * half, 2 * half, |r, c| {
        let tag = (2 * (r / half) + c / half) as u64;
        vec![tag, a.coords(r % half, c % half)[0]]
    })?;
    gate(out, None, "obs_z4_z2pow")
}

/// Magic square over `Z_{4n} ⊕ Z_n` of side `2n` for odd `n ≥ 3`, magic sum `(3n, 0)`.
pub fn lemma_z4n_zn(n: u64) -> Result<GroupArray> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::out_of_domain(format!("need odd n >= 3, got {n}")));
    }
    if n > 1 << 12 {
        return Err(Error::ResourceLimit(format!("side {} is too large", 2 * n)));
    }
    let w = 2 * n as usize;
    let nn = n as usize;
    // Two rows over Z_{4n} with column sums 4n-1, then swap within columns n and 2n-1.
    let mut top: Vec<u64> = (0..w as u64).collect();
    let mut bottom: Vec<u64> = (0..w as u64).map(|j| 4 * n - 1 - j).collect();
    for col in [nn, w - 1] {
        std::mem::swap(&mut top[col], &mut bottom[col]);
    }
    let group = AbelianGroup::new(&[4 * n, n])?;
    let mut out = GroupArray::from_fn(group, w, w, |i, j| {
        if i < nn {
            vec![top[j], i as u64]
        } else {
            vec![bottom[j], (i - nn) as u64]
        }
    })?;
    // Diagonal repairs, 0-based.
    let mid = nn.div_ceil(2) - 1;
    let far = (3 * nn).div_ceil(2) - 1;
    out.swap_cells((mid, mid), (mid, far));
    out.swap_cells((nn, mid), (nn, far));
    if n % 4 == 1 {
        out.swap_cells((nn, nn - 1), (nn, nn));
        out.swap_cells((0, nn - 1), (0, nn));
    }
    gate(out, Some(&[3 * n, 0]), "lemma_z4n_zn")
}
