//! Reference arrays, transcribed cell for cell. Several double as base cases
//! for the constructors; the rest are golden data for tests and examples.
//!
//! Tables are written in the CSV cell syntax, one row per line.

use crate::array::GroupArray;
use crate::group::AbelianGroup;
use crate::io::from_csv;

fn table(moduli: &[u64], text: &str) -> GroupArray {
    let group = AbelianGroup::new(moduli).expect("figure groups are valid");
    from_csv(text, &group).expect("figure tables are well formed")
}

/// A `Z_4` magic rectangle of side 2 (row sum 1, column sum 3).
pub fn mr_z4() -> GroupArray {
    table(&[4], "0;1\n3;2")
}

/// A `Z_16` magic rectangle with row sum 6 and column sum 14.
pub fn mr_z16() -> GroupArray {
    table(&[16], "0;1;2;3\n7;6;5;4\n8;9;10;11\n15;14;13;12")
}

/// The five side-2 arrays over `Z_4` and `Z_2 ⊕ Z_2` listed as
/// representatives of the best one can do without a magic square.
pub fn side_two_arrays() -> Vec<GroupArray> {
    vec![
        table(&[4], "0;1\n3;2"),
        table(&[4], "0;2\n3;1"),
        table(&[2, 2], "(0,0);(0,1)\n(1,0);(1,1)"),
        table(&[2, 2], "(0,0);(1,1)\n(1,0);(0,1)"),
        table(&[2, 2], "(0,0);(1,1)\n(0,1);(1,0)"),
    ]
}

/// `Z_3 ⊕ Z_3` square of side 3, entry `(i, j)` at row `i`, column `j`.
pub fn z3_z3() -> GroupArray {
    table(
        &[3, 3],
        "(0,0);(0,1);(0,2)\n\
         (1,0);(1,1);(1,2)\n\
         (2,0);(2,1);(2,2)",
    )
}

/// `Z_9` square of side 3 (the classical 3×3 square shifted to `0..8`).
pub fn z9() -> GroupArray {
    table(&[9], "7;0;5\n2;4;6\n3;8;1")
}

/// 3×4 Kotzig array over `Z_2 ⊕ Z_2` with zero column sums.
pub fn kotzig_3x4() -> GroupArray {
    table(
        &[2, 2],
        "(0,0);(0,1);(1,0);(1,1)\n\
         (0,0);(1,0);(1,1);(0,1)\n\
         (0,0);(1,1);(0,1);(1,0)",
    )
}

/// Side-6 square over `Z_3 ⊕ Z_3 ⊕ Z_2 ⊕ Z_2` glued from [`z3_z3`] and [`kotzig_3x4`].
pub fn z3_z3_z2_z2() -> GroupArray {
    table(
        &[3, 3, 2, 2],
        "(0,0,0,0);(0,1,0,0);(0,2,0,0);(0,2,0,1);(0,1,1,1);(0,0,1,0)\n\
         (1,0,0,0);(1,1,0,0);(1,2,0,0);(1,2,1,0);(1,1,0,1);(1,0,1,1)\n\
         (2,0,0,0);(2,1,0,0);(2,2,0,0);(2,2,1,1);(2,1,1,0);(2,0,0,1)\n\
         (0,2,1,0);(0,1,0,1);(0,0,1,1);(0,0,0,1);(0,1,1,0);(0,2,1,1)\n\
         (1,2,1,1);(1,1,1,0);(1,0,0,1);(1,0,1,0);(1,1,1,1);(1,2,0,1)\n\
         (2,2,0,1);(2,1,1,1);(2,0,1,0);(2,0,1,1);(2,1,0,1);(2,2,1,0)",
    )
}

/// `Z_2 ⊕ Z_8` square of side 4.
pub fn z2_z8() -> GroupArray {
    table(
        &[2, 8],
        "(0,0);(0,1);(0,3);(0,2)\n\
         (0,7);(0,6);(0,4);(0,5)\n\
         (1,0);(1,1);(1,3);(1,2)\n\
         (1,7);(1,6);(1,4);(1,5)",
    )
}

/// `Z_2 ⊕ Z_32` square of side 8.
pub fn z2_z32() -> GroupArray {
    table(
        &[2, 32],
        "(0,0);(0,1);(0,2);(0,3);(0,5);(0,4);(0,7);(0,6)\n\
         (0,15);(0,14);(0,13);(0,12);(0,10);(0,11);(0,8);(0,9)\n\
         (0,16);(0,17);(0,18);(0,19);(0,21);(0,20);(0,23);(0,22)\n\
         (0,31);(0,30);(0,29);(0,28);(0,26);(0,27);(0,24);(0,25)\n\
         (1,0);(1,1);(1,2);(1,3);(1,5);(1,4);(1,7);(1,6)\n\
         (1,15);(1,14);(1,13);(1,12);(1,10);(1,11);(1,8);(1,9)\n\
         (1,16);(1,17);(1,18);(1,19);(1,21);(1,20);(1,23);(1,22)\n\
         (1,31);(1,30);(1,29);(1,28);(1,26);(1,27);(1,24);(1,25)",
    )
}

/// `Z_27 ⊕ Z_3` square of side 9 built from [`z9`] and [`z3_z3`].
pub fn z27_z3() -> GroupArray {
    table(
        &[27, 3],
        "(7,0);(0,0);(5,0);(7,1);(0,1);(5,1);(7,2);(0,2);(5,2)\n\
         (2,0);(4,0);(6,0);(2,1);(4,1);(6,1);(2,2);(4,2);(6,2)\n\
         (3,0);(8,0);(1,0);(3,1);(8,1);(1,1);(3,2);(8,2);(1,2)\n\
         (16,0);(9,0);(14,0);(16,1);(9,1);(14,1);(16,2);(9,2);(14,2)\n\
         (11,0);(13,0);(15,0);(11,1);(13,1);(15,1);(11,2);(13,2);(15,2)\n\
         (12,0);(17,0);(10,0);(12,1);(17,1);(10,1);(12,2);(17,2);(10,2)\n\
         (25,0);(18,0);(23,0);(25,1);(18,1);(23,1);(25,2);(18,2);(23,2)\n\
         (20,0);(22,0);(24,0);(20,1);(22,1);(24,1);(20,2);(22,2);(24,2)\n\
         (21,0);(26,0);(19,0);(21,1);(26,1);(19,1);(21,2);(26,2);(19,2)",
    )
}

/// `Z_4 ⊕ Z_4` square of side 4.
pub fn z4_z4() -> GroupArray {
    table(
        &[4, 4],
        "(1,1);(0,2);(3,3);(2,0)\n\
         (0,3);(1,0);(2,1);(3,2)\n\
         (2,2);(3,1);(0,0);(1,3)\n\
         (3,0);(2,3);(1,2);(0,1)",
    )
}

/// `Z_2 ⊕ Z_2 ⊕ Z_4` square of side 4.
pub fn z2_z2_z4() -> GroupArray {
    table(
        &[2, 2, 4],
        "(0,0,3);(0,0,2);(0,1,3);(0,1,2)\n\
         (0,0,0);(0,0,1);(0,1,0);(0,1,1)\n\
         (1,0,0);(1,0,1);(1,1,0);(1,1,1)\n\
         (1,0,3);(1,0,2);(1,1,3);(1,1,2)",
    )
}

/// `Z_2^4` square of side 4.
pub fn z2_4() -> GroupArray {
    table(
        &[2, 2, 2, 2],
        "(0,0,0,0);(0,1,0,0);(0,0,0,1);(0,1,0,1)\n\
         (1,1,0,0);(1,0,0,0);(1,1,0,1);(1,0,0,1)\n\
         (0,0,1,0);(0,1,1,0);(0,0,1,1);(0,1,1,1)\n\
         (1,1,1,0);(1,0,1,0);(1,1,1,1);(1,0,1,1)",
    )
}

/// `Z_12 ⊕ Z_3` square of side 6.
pub fn z12_z3() -> GroupArray {
    table(
        &[12, 3],
        "(0,0);(1,0);(2,0);(8,0);(4,0);(6,0)\n\
         (0,1);(4,1);(2,1);(8,1);(1,1);(6,1)\n\
         (0,2);(1,2);(2,2);(8,2);(4,2);(6,2)\n\
         (11,0);(7,0);(9,0);(3,0);(10,0);(5,0)\n\
         (11,1);(10,1);(9,1);(3,1);(7,1);(5,1)\n\
         (11,2);(10,2);(9,2);(3,2);(7,2);(5,2)",
    )
}
