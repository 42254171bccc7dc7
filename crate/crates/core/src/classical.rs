//! Integer magic squares, their cyclic-group reinterpretation, and integer
//! Kotzig arrays.
//!
//! Integer squares use the entries `0..n²` (not `1..=n²`), so their magic
//! constant is `n(n²-1)/2` and they drop straight into `Z_{n²}`.

use crate::array::GroupArray;
use crate::error::{Error, Result};
use crate::group::AbelianGroup;

/// An `n × n` integer square on the entries `0..n²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSquare {
    n: usize,
    entries: Vec<u64>,
}

impl IntSquare {
    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("integer square must be n x n"));
        }
        Ok(Self {
            n,
            entries: rows.concat(),
        })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n).map(<[u64]>::to_vec).collect()
    }

    /// `n(n²-1)/2`, the line sum of a magic square on `0..n²`.
    pub fn magic_constant(&self) -> u64 {
        let n = self.n as u64;
        n * (n * n - 1) / 2
    }

    /// All `2n+2` line sums, rows first, then columns, main and back diagonal.
    pub fn line_sums(&self) -> Vec<u64> {
        let n = self.n;
        let mut sums: Vec<u64> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j)).sum())
            .collect();
        sums.extend((0..n).map(|j| (0..n).map(|i| self.get(i, j)).sum::<u64>()));
        sums.push((0..n).map(|i| self.get(i, i)).sum());
        sums.push((0..n).map(|i| self.get(i, n - 1 - i)).sum());
        sums
    }

    /// Entries are a permutation of `0..n²` and every line sums to the magic constant.
    pub fn is_magic(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        let permutation = sorted.iter().enumerate().all(|(i, &v)| v == i as u64);
        let c = self.magic_constant();
        permutation && self.line_sums().iter().all(|&s| s == c)
    }

    /// The same square read in `Z_{n²}`.
    pub fn to_cyclic(&self) -> GroupArray {
        let group = AbelianGroup::cyclic((self.n * self.n) as u64).expect("n >= 2");
        GroupArray::new(group, self.n, self.n, self.entries.clone()).expect("entries lie in 0..n²")
    }
}

/// Magic square of side `n` on `0..n²`: Siamese method for odd `n`,
/// complement pattern for `n ≡ 0 (mod 4)`, LUX for `n ≡ 2 (mod 4)`.
pub fn int_magic_square(n: usize) -> Result<IntSquare> {
    if n <= 2 {
        return Err(Error::nonexistence(format!(
            "no magic square of side {n} exists (need n > 2)"
        )));
    }
    let entries = match n % 4 {
        0 => doubly_even(n),
        2 => lux(n),
        _ => siamese(n),
    };
    Ok(IntSquare { n, entries })
}

fn siamese(n: usize) -> Vec<u64> {
    let mut grid = vec![u64::MAX; n * n];
    let (mut i, mut j) = (0, n / 2);
    for v in 0..(n * n) as u64 {
        grid[i * n + j] = v;
        let (ni, nj) = ((i + n - 1) % n, (j + 1) % n);
        if grid[ni * n + nj] == u64::MAX {
            (i, j) = (ni, nj);
        } else {
            i = (i + 1) % n;
        }
    }
    grid
}

fn doubly_even(n: usize) -> Vec<u64> {
    let last = (n * n - 1) as u64;
    (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n % 4, idx % n % 4);
            let v = idx as u64;
            if i == j || i + j == 3 {
                last - v
            } else {
                v
            }
        })
        .collect()
}

fn lux(n: usize) -> Vec<u64> {
    let h = n / 2;
    let m = (h - 1) / 2;
    let base = siamese(h);
    // Offsets within each 2×2 block, row-major.
    const L: [u64; 4] = [3, 0, 1, 2];
    const U: [u64; 4] = [0, 3, 1, 2];
    const X: [u64; 4] = [0, 3, 2, 1];
    let mut grid = vec![0; n * n];
    for bi in 0..h {
        for bj in 0..h {
            let pattern = match bi {
                _ if bi == m && bj == m => U,
                _ if bi == m + 1 && bj == m => L,
                _ if bi <= m => L,
                _ if bi == m + 1 => U,
                _ => X,
            };
            let v = base[bi * h + bj];
            for (k, off) in pattern.iter().enumerate() {
                grid[(2 * bi + k / 2) * n + 2 * bj + k % 2] = 4 * v + off;
            }
        }
    }
    grid
}

/// `Z_{n²}`-magic square of side `n`; magic sum `n(n²-1)/2 mod n²`.
pub fn cyclic_magic_square(n: usize) -> Result<GroupArray> {
    Ok(int_magic_square(n)?.to_cyclic())
}

/// A `rows × cols` array, each row a permutation of `1..=cols`, all column
/// sums equal to `rows(cols+1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntKotzigArray {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl IntKotzigArray {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        let rows_ok = (0..self.rows).all(|i| {
            let mut r = self.row(i).to_vec();
            r.sort_unstable();
            r.iter().enumerate().all(|(k, &v)| v == k as u64 + 1)
        });
        let target = (self.rows * (self.cols + 1)) as u64;
        rows_ok && target.is_multiple_of(2) && self.column_sums().iter().all(|&s| 2 * s == target)
    }
}

/// Integer Kotzig array; exists iff `j > 1` and `j(k-1)` is even.
///
/// Even `j` stacks pairs of rows `1..=k` and `k..=1`. Odd `j` (hence odd `k`)
/// starts from a three-row block with rows `i`, `i + (k-1)/2 mod k` and the
/// complement to the column target, then adds pairs.
pub fn int_kotzig(j: usize, k: usize) -> Result<IntKotzigArray> {
    if j <= 1 || k == 0 || !(j * (k - 1)).is_multiple_of(2) {
        return Err(Error::nonexistence(format!(
            "no {j}x{k} Kotzig array (need j > 1 and j(k-1) even)"
        )));
    }
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(j);
    if j % 2 == 1 {
        let h = (k - 1) / 2;
        let a: Vec<u64> = (0..k).map(|i| i as u64).collect();
        let b: Vec<u64> = (0..k).map(|i| ((i + h) % k) as u64).collect();
        let c: Vec<u64> = (0..k).map(|i| 3 * h as u64 - a[i] - b[i]).collect();
        for row in [a, b, c] {
            rows.push(row.into_iter().map(|v| v + 1).collect());
        }
    }
    while rows.len() < j {
        rows.push((1..=k as u64).collect());
        rows.push((1..=k as u64).rev().collect());
    }
    Ok(IntKotzigArray {
        rows: j,
        cols: k,
        entries: rows.concat(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    #[test]
    fn magic_constants() {
        assert_eq!(int_magic_square(3).unwrap().magic_constant(), 12);
        assert_eq!(int_magic_square(4).unwrap().magic_constant(), 30);
        let six = int_magic_square(6).unwrap();
        assert!(six.line_sums().iter().all(|&s| s == 105));
        assert!(six.is_magic());
    }

    #[test]
    fn small_sides_do_not_exist() {
        for n in 0..=2 {
            assert!(matches!(int_magic_square(n), Err(Error::Nonexistence(_))));
            assert!(cyclic_magic_square(n).is_err());
        }
    }

    #[test]
    fn siamese_three_is_the_classical_square() {
        let s = int_magic_square(3).unwrap();
        assert_eq!(s.rows(), vec![vec![7, 0, 5], vec![2, 4, 6], vec![3, 8, 1]]);
    }

    #[test]
    fn all_methods_are_magic() {
        for n in 3..=40 {
            assert!(int_magic_square(n).unwrap().is_magic(), "side {n}");
        }
    }

    #[test]
    fn cyclic_sums() {
        for (n, mu) in [(3, 3), (4, 14), (5, 60 % 25), (6, 105 % 36)] {
            let r = verify(&cyclic_magic_square(n).unwrap());
            assert!(r.is_magic_square());
            assert_eq!(r.magic_sum.unwrap().coords(), &[mu]);
        }
    }

    #[test]
    fn kotzig_examples() {
        let k = int_kotzig(2, 4).unwrap();
        assert_eq!(k.row(0), &[1, 2, 3, 4]);
        assert_eq!(k.row(1), &[4, 3, 2, 1]);
        assert!(k.column_sums().iter().all(|&s| s == 5));
        assert!(int_kotzig(3, 3)
            .unwrap()
            .column_sums()
            .iter()
            .all(|&s| s == 6));
        let big = int_kotzig(5, 7).unwrap();
        assert!(big.is_valid());
        assert!(big.column_sums().iter().all(|&s| s == 20));
    }

    #[test]
    fn kotzig_conditions() {
        assert!(int_kotzig(1, 5).is_err());
        assert!(int_kotzig(3, 4).is_err());
        for j in 2..=9 {
            for k in 1..=15 {
                match int_kotzig(j, k) {
                    Ok(a) => assert!(a.is_valid(), "{j}x{k}"),
                    Err(_) => assert!(j * (k - 1) % 2 == 1),
                }
            }
        }
    }
}
