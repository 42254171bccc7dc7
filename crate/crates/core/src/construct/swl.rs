//! Composing a magic square over `Γ₀` with a Kotzig array over `H` into a
//! magic square over `Γ₀ ⊕ H`.
//!
//! With `sq` of side `m` (magic sum `δ`) and a Kotzig array `h` of `m` rows
//! over `H` with `|H| = k²`, block `s` is `X^s(i, j) = (sq(i, j), h[(i+j) mod m][s])`.
//! Every row and column of a block sums to `(δ, 0)`. The `k²` blocks are laid
//! out in a `k × k` grid, some with reversed columns, so that both diagonals
//! also sum to `(kδ, 0)`.

use crate::array::GroupArray;
use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::kotzig::KotzigArrayG;
use crate::numtheory::exact_sqrt;
use crate::verify::verify;

use super::gate;
use super::placement::{solve_placement, BlockPlacement, DEFAULT_PLACEMENT_BUDGET};

/// Main- and back-diagonal residuals of every block, in `H` coordinates.
pub fn block_residuals(ka: &KotzigArrayG) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let h = ka.group();
    let m = ka.rows();
    let mut main = Vec::with_capacity(ka.cols());
    let mut back = Vec::with_capacity(ka.cols());
    for s in 0..ka.cols() {
        let mut d = vec![0; h.rank()];
        for i in 0..m {
            h.add_assign_coords(&mut d, ka.coords((2 * i) % m, s));
        }
        main.push(d);
        back.push(h.scale_coords(ka.coords(m - 1, s), m as u64));
    }
    (main, back)
}

/// Assemble the composite square from a solved placement.
pub fn assemble(
    sq: &GroupArray,
    ka: &KotzigArrayG,
    placement: &BlockPlacement,
) -> Result<GroupArray> {
    let m = sq.side();
    let k = placement.k();
    let group = sq.group().direct_sum(ka.group());
    GroupArray::from_fn(group, m * k, m * k, |r, c| {
        let (p, i, q, j) = (r / m, r % m, c / m, c % m);
        let jj = if placement.reversed(p, q) {
            m - 1 - j
        } else {
            j
        };
        let s = placement.block(p, q);
        let mut cell = sq.coords(i, jj).to_vec();
        cell.extend_from_slice(ka.coords((i + jj) % m, s));
        cell
    })
}

/// Magic square over `sq.group() ⊕ ka.group()` with magic sum `(kδ, 0)`.
pub fn swl(sq: &GroupArray, ka: &KotzigArrayG) -> Result<GroupArray> {
    swl_with_budget(sq, ka, DEFAULT_PLACEMENT_BUDGET)
}

pub fn swl_with_budget(sq: &GroupArray, ka: &KotzigArrayG, budget: u64) -> Result<GroupArray> {
    let report = verify(sq);
    let delta = match (report.is_magic_square(), report.magic_sum) {
        (true, Some(mu)) => mu,
        _ => return Err(Error::invalid("the base array is not a magic square")),
    };
    let m = sq.side();
    if m < 2 {
        return Err(Error::invalid("the base square needs side at least 2"));
    }
    if ka.rows() != m {
        return Err(Error::invalid(format!(
            "Kotzig array has {} rows but the base square has side {m}",
            ka.rows()
        )));
    }
    if !ka.is_valid() || !ka.column_sum().is_some_and(|s| s.is_zero()) {
        return Err(Error::invalid(
            "Kotzig array must be valid with zero column sums",
        ));
    }
    let h: &AbelianGroup = ka.group();
    let k = exact_sqrt(h.order())
        .ok_or_else(|| Error::invalid(format!("|{h}| = {} is not a perfect square", h.order())))?
        as usize;

    let (main, back) = block_residuals(ka);
    let placement = solve_placement(h, k, &main, &back, budget)?;
    let out = assemble(sq, ka, &placement)?;

    let mut expected = sq.group().scale_coords(delta.coords(), k as u64);
    expected.extend(std::iter::repeat_n(0, h.rank()));
    gate(out, Some(&expected), "swl")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::cyclic_magic_square;
    use crate::figures;
    use crate::kotzig::kotzig_gamma;

    fn grp(m: &[u64]) -> AbelianGroup {
        AbelianGroup::new(m).unwrap()
    }

    #[test]
    fn klein_extension_of_z3_z3() {
        let ka = kotzig_gamma(3, &grp(&[2, 2])).unwrap();
        let out = swl(&figures::z3_z3(), &ka).unwrap();
        assert_eq!(out.group().moduli(), &[3, 3, 2, 2]);
        assert_eq!(verify(&out).magic_sum.unwrap().coords(), &[0, 0, 0, 0]);
    }

    #[test]
    fn z9_by_z9() {
        let ka = kotzig_gamma(3, &grp(&[9])).unwrap();
        let out = swl(&figures::z9(), &ka).unwrap();
        assert_eq!(verify(&out).magic_sum.unwrap().coords(), &[0, 0]);
    }

    #[test]
    fn even_sides() {
        for (side, h) in [
            (4usize, vec![2u64, 2]),
            (4, vec![4]),
            (4, vec![16]),
            (6, vec![9]),
            (4, vec![3, 3]),
        ] {
            let sq = cyclic_magic_square(side).unwrap();
            let ka = kotzig_gamma(side, &grp(&h)).unwrap();
            let out = swl(&sq, &ka).unwrap();
            assert!(verify(&out).is_magic_square(), "side {side} with {h:?}");
        }
    }

    #[test]
    fn mismatched_rows() {
        let ka = kotzig_gamma(4, &grp(&[2, 2])).unwrap();
        assert!(matches!(
            swl(&figures::z3_z3(), &ka),
            Err(Error::InvalidInput(_))
        ));
    }
}
