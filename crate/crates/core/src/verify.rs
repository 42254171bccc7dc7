//! Independent verifier for magic squares and rectangles.
//!
//! Everything is recomputed from the entries; nothing about how an array was
//! built is trusted.

use serde::{Deserialize, Serialize};

use crate::array::GroupArray;
use crate::group::{AbelianGroup, GroupElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Bijective square whose rows, columns and both diagonals share one sum.
    MagicSquare,
    /// Bijective square with a common row and column sum, diagonals off.
    SemiMagic,
    /// Bijective, rows share one sum and columns share one (possibly different) sum.
    MagicRectangle,
    NotMagic,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::MagicSquare => "magic-square",
            Classification::SemiMagic => "semi-magic",
            Classification::MagicRectangle => "magic-rectangle",
            Classification::NotMagic => "not-magic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub row_sums: Vec<GroupElement>,
    pub col_sums: Vec<GroupElement>,
    /// Sum over `(i, i)`; square arrays only.
    pub diag_sum: Option<GroupElement>,
    /// Sum over `(i, n-1-i)`; square arrays only.
    pub anti_diag_sum: Option<GroupElement>,
    /// Every element of the group occurs exactly once.
    pub bijective: bool,
    pub classification: Classification,
    /// Common line sum for magic and semi-magic squares.
    pub magic_sum: Option<GroupElement>,
}

impl VerificationReport {
    /// Common row sum, if all rows agree.
    pub fn row_constant(&self) -> Option<&GroupElement> {
        constant(&self.row_sums)
    }

    pub fn col_constant(&self) -> Option<&GroupElement> {
        constant(&self.col_sums)
    }

    pub fn is_magic_square(&self) -> bool {
        self.classification == Classification::MagicSquare
    }

    /// The rectangle property ignores diagonals, so every magic or
    /// semi-magic square also satisfies it.
    pub fn is_magic_rectangle(&self) -> bool {
        self.bijective && self.row_constant().is_some() && self.col_constant().is_some()
    }
}

fn constant(sums: &[GroupElement]) -> Option<&GroupElement> {
    let first = sums.first()?;
    sums.iter().all(|s| s == first).then_some(first)
}

fn line_sum(
    group: &AbelianGroup,
    cells: impl Iterator<Item = (usize, usize)>,
    a: &GroupArray,
) -> GroupElement {
    let mut acc = vec![0u64; group.rank()];
    for (i, j) in cells {
        group.add_assign_coords(&mut acc, a.coords(i, j));
    }
    group.element(&acc).expect("sums stay in the group")
}

/// Whether the entries are exactly the elements of the group, once each.
pub fn is_bijective(a: &GroupArray) -> bool {
    let group = a.group();
    let cells = a.rows() * a.cols();
    if cells as u64 != group.order() {
        return false;
    }
    let mut seen = vec![false; cells];
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let idx = group.index_of(a.coords(i, j));
            if std::mem::replace(&mut seen[idx], true) {
                return false;
            }
        }
    }
    true
}

pub fn verify(a: &GroupArray) -> VerificationReport {
    let group = a.group();
    let (m, n) = (a.rows(), a.cols());
    let row_sums: Vec<GroupElement> = (0..m)
        .map(|i| line_sum(group, (0..n).map(|j| (i, j)), a))
        .collect();
    let col_sums: Vec<GroupElement> = (0..n)
        .map(|j| line_sum(group, (0..m).map(|i| (i, j)), a))
        .collect();
    let (diag_sum, anti_diag_sum) = if m == n {
        (
            Some(line_sum(group, (0..n).map(|i| (i, i)), a)),
            Some(line_sum(group, (0..n).map(|i| (i, n - 1 - i)), a)),
        )
    } else {
        (None, None)
    };
    let bijective = is_bijective(a);

    let rho = constant(&row_sums).cloned();
    let sigma = constant(&col_sums).cloned();
    let semi = match (&rho, &sigma) {
        (Some(r), Some(s)) if m == n && r == s => Some(r.clone()),
        _ => None,
    };
    let diagonals_match = semi
        .as_ref()
        .is_some_and(|mu| diag_sum.as_ref() == Some(mu) && anti_diag_sum.as_ref() == Some(mu));

    let (classification, magic_sum) = if !bijective {
        (Classification::NotMagic, None)
    } else if diagonals_match {
        (Classification::MagicSquare, semi)
    } else if semi.is_some() {
        (Classification::SemiMagic, semi)
    } else if rho.is_some() && sigma.is_some() {
        (Classification::MagicRectangle, None)
    } else {
        (Classification::NotMagic, None)
    };

    VerificationReport {
        row_sums,
        col_sums,
        diag_sum,
        anti_diag_sum,
        bijective,
        classification,
        magic_sum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: u64) -> AbelianGroup {
        AbelianGroup::cyclic(n).unwrap()
    }

    #[test]
    fn side_two_rectangle() {
        let a = GroupArray::from_ints(cyc(4), &[vec![0, 1], vec![3, 2]]).unwrap();
        let r = verify(&a);
        assert_eq!(r.classification, Classification::MagicRectangle);
        assert_eq!(r.row_constant().unwrap().coords(), &[1]);
        assert_eq!(r.col_constant().unwrap().coords(), &[3]);
        assert!(r.is_magic_rectangle() && !r.is_magic_square());
    }

    #[test]
    fn repeated_entries_are_not_magic() {
        let a = GroupArray::from_ints(cyc(4), &[vec![0, 0], vec![0, 0]]).unwrap();
        let r = verify(&a);
        assert!(!r.bijective);
        assert_eq!(r.classification, Classification::NotMagic);
    }

    #[test]
    fn semi_magic_square() {
        // Rows and columns of this Z_9 array sum to 3, but the diagonals do not.
        let a =
            GroupArray::from_ints(cyc(9), &[vec![0, 1, 2], vec![4, 5, 3], vec![8, 6, 7]]).unwrap();
        let r = verify(&a);
        assert_eq!(r.classification, Classification::SemiMagic);
        assert_eq!(r.magic_sum.as_ref().unwrap().coords(), &[3]);
        assert!(r.is_magic_rectangle());
    }

    #[test]
    fn non_square_has_no_diagonals() {
        let a = GroupArray::from_fn(cyc(6), 2, 3, |i, j| vec![(3 * i + j) as u64]).unwrap();
        let r = verify(&a);
        assert!(r.diag_sum.is_none() && r.anti_diag_sum.is_none());
    }
}
