//! Doubly diagonal orthogonal Latin squares and the `Z_n ⊕ Z_n` squares they give.

use crate::array::GroupArray;
use crate::error::{Error, Result};
use crate::field::{gf_make, FiniteField};
use crate::figures;
use crate::group::AbelianGroup;
use crate::numtheory::prime_power;

/// Two `n × n` grids over the symbols `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinPair {
    n: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

fn is_permutation(n: usize, symbols: impl Iterator<Item = usize>) -> bool {
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in symbols {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return false;
        }
        count += 1;
    }
    count == n
}

impl LatinPair {
    pub fn new(n: usize, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if n == 0 || a.len() != n * n || b.len() != n * n {
            return Err(Error::invalid("grids must both be n x n with n >= 1"));
        }
        Ok(Self { n, a, b })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn a(&self, i: usize, j: usize) -> usize {
        self.a[i * self.n + j]
    }

    pub fn b(&self, i: usize, j: usize) -> usize {
        self.b[i * self.n + j]
    }

    fn grid_is_latin(&self, g: &[usize]) -> bool {
        let n = self.n;
        (0..n).all(|i| is_permutation(n, (0..n).map(|j| g[i * n + j])))
            && (0..n).all(|j| is_permutation(n, (0..n).map(|i| g[i * n + j])))
    }

    fn grid_is_diagonal(&self, g: &[usize]) -> bool {
        let n = self.n;
        is_permutation(n, (0..n).map(|i| g[i * n + i]))
            && is_permutation(n, (0..n).map(|i| g[i * n + n - 1 - i]))
    }

    pub fn is_latin(&self) -> bool {
        self.grid_is_latin(&self.a) && self.grid_is_latin(&self.b)
    }

    /// All `n²` ordered pairs `(A(i,j), B(i,j))` are distinct.
    pub fn is_orthogonal(&self) -> bool {
        let n = self.n;
        is_permutation(n * n, self.a.iter().zip(&self.b).map(|(&x, &y)| x * n + y))
    }

    /// Both grids carry every symbol on the main and on the back diagonal.
    pub fn is_doubly_diagonal(&self) -> bool {
        self.grid_is_diagonal(&self.a) && self.grid_is_diagonal(&self.b)
    }

    pub fn is_valid(&self) -> bool {
        self.is_latin() && self.is_orthogonal() && self.is_doubly_diagonal()
    }

    /// Product pair of side `m·n`, symbol `x·n + y` in cell `(i·n + k, j·n + l)`.
    pub fn kronecker(&self, other: &LatinPair) -> LatinPair {
        let (m, n) = (self.n, other.n);
        let size = m * n;
        let mut a = Vec::with_capacity(size * size);
        let mut b = Vec::with_capacity(size * size);
        for r in 0..size {
            for c in 0..size {
                let (i, k, j, l) = (r / n, r % n, c / n, c % n);
                a.push(self.a(i, j) * n + other.a(k, l));
                b.push(self.b(i, j) * n + other.b(k, l));
            }
        }
        LatinPair { n: size, a, b }
    }

    pub fn rows_a(&self) -> Vec<Vec<usize>> {
        self.a.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn rows_b(&self) -> Vec<Vec<usize>> {
        self.b.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// Both grids as CSV, separated by a blank line.
    pub fn to_csv(&self) -> String {
        let grid = |rows: Vec<Vec<usize>>| -> String {
            rows.iter()
                .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(";") + "\n")
                .collect()
        };
        format!("{}\n{}", grid(self.rows_a()), grid(self.rows_b()))
    }
}

/// Field elements ordered so that mirrored positions are related: for odd
/// characteristic `e_{q-1-j} = -e_j` (zero in the middle), for characteristic
/// two `e_{q-1-j} = e_j + 1`.
pub fn symmetric_ordering(f: &FiniteField) -> Result<Vec<u64>> {
    let q = f.order();
    if q < 4 {
        return Err(Error::nonexistence(format!(
            "no doubly diagonal ordering is used for fields of order {q} < 4"
        )));
    }
    let len = q as usize;
    let mut order = vec![u64::MAX; len];
    let mut placed = vec![false; len];
    let mut front = 0;
    if f.characteristic() != 2 {
        order[len / 2] = 0;
        placed[0] = true;
    }
    for x in f.elements() {
        if placed[x as usize] {
            continue;
        }
        let partner = if f.characteristic() == 2 {
            f.add(x, 1)
        } else {
            f.neg(x)
        };
        order[front] = x;
        order[len - 1 - front] = partner;
        placed[x as usize] = true;
        placed[partner as usize] = true;
        front += 1;
    }
    Ok(order)
}

/// DDMOLS of prime-power side `q ≥ 4`: `A(i,j) = a·e_i + e_j`,
/// `B(i,j) = b·e_i + e_j` under the symmetric ordering, with `(a, b)` the two
/// smallest multipliers that keep rows, columns and both diagonals Latin.
pub fn ddmols_prime_power(q: u64) -> Result<LatinPair> {
    let Some((p, t)) = prime_power(q) else {
        return Err(Error::invalid(format!("{q} is not a prime power")));
    };
    if q < 4 {
        return Err(Error::nonexistence(format!(
            "no pair of doubly diagonal orthogonal Latin squares of side {q}"
        )));
    }
    let f = gf_make(p, t)?;
    let e = symmetric_ordering(&f)?;
    let mut position = vec![0usize; e.len()];
    for (idx, &x) in e.iter().enumerate() {
        position[x as usize] = idx;
    }
    let minus_one = f.neg(1);
    let mut admissible = f.elements().filter(|&x| x != 0 && x != 1 && x != minus_one);
    let (a, b) = match (admissible.next(), admissible.next()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::nonexistence(format!(
                "GF({q}) has too few admissible multipliers"
            )))
        }
    };
    let n = q as usize;
    let grid = |mult: u64| -> Vec<usize> {
        (0..n * n)
            .map(|cell| {
                let (i, j) = (cell / n, cell % n);
                position[f.add(f.mul(mult, e[i]), e[j]) as usize]
            })
            .collect()
    };
    Ok(LatinPair {
        n,
        a: grid(a),
        b: grid(b),
    })
}

/// `Z_n ⊕ Z_n`-magic square of side `n` for `n = 3` or a prime power `n ≥ 4`.
/// Every line sum is `(s, s)` with `s = 0 + 1 + … + (n-1) mod n`.
pub fn znzn_square(n: u64) -> Result<GroupArray> {
    match n {
        0 | 1 => return Err(Error::invalid(format!("side {n} is too small"))),
        2 => {
            return Err(Error::nonexistence(
                "no magic square of side 2 exists over any group",
            ))
        }
        3 => return Ok(figures::z3_z3()),
        _ => {}
    }
    if prime_power(n).is_none() {
        return Err(Error::Unsupported(format!(
            "side {n} is not a prime power; build Z_{n}+Z_{n} with the general constructor"
        )));
    }
    let pair = ddmols_prime_power(n)?;
    let group = AbelianGroup::new(&[n, n])?;
    let side = n as usize;
    GroupArray::from_fn(group, side, side, |i, j| {
        vec![pair.a(i, j) as u64, pair.b(i, j) as u64]
    })
}
