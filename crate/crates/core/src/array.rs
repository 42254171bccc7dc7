//! Rectangular grids of group elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{write_coords, AbelianGroup, GroupElement, Isomorphism};

/// An `rows × cols` grid over one group presentation. Coordinates are stored
/// flat, row-major, `rank` values per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupArray {
    group: AbelianGroup,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// The eight symmetries of a square grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dihedral {
    Identity,
    Rotate90,
    Rotate180,
    Rotate270,
    /// Reverse the order of the columns.
    MirrorColumns,
    /// Reverse the order of the rows.
    MirrorRows,
    Transpose,
    AntiTranspose,
}

impl Dihedral {
    pub const ALL: [Dihedral; 8] = [
        Dihedral::Identity,
        Dihedral::Rotate90,
        Dihedral::Rotate180,
        Dihedral::Rotate270,
        Dihedral::MirrorColumns,
        Dihedral::MirrorRows,
        Dihedral::Transpose,
        Dihedral::AntiTranspose,
    ];

    fn swaps_axes(self) -> bool {
        matches!(
            self,
            Dihedral::Rotate90
                | Dihedral::Rotate270
                | Dihedral::Transpose
                | Dihedral::AntiTranspose
        )
    }

    /// Source cell of output cell `(i, j)` for a source of shape `rows × cols`.
    fn source(self, i: usize, j: usize, rows: usize, cols: usize) -> (usize, usize) {
        match self {
            Dihedral::Identity => (i, j),
            Dihedral::Rotate90 => (rows - 1 - j, i),
            Dihedral::Rotate180 => (rows - 1 - i, cols - 1 - j),
            Dihedral::Rotate270 => (j, cols - 1 - i),
            Dihedral::MirrorColumns => (i, cols - 1 - j),
            Dihedral::MirrorRows => (rows - 1 - i, j),
            Dihedral::Transpose => (j, i),
            Dihedral::AntiTranspose => (rows - 1 - j, cols - 1 - i),
        }
    }
}

impl GroupArray {
    pub fn new(group: AbelianGroup, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid(
                "arrays must have at least one row and column",
            ));
        }
        let rank = group.rank();
        if data.len() != rows * cols * rank {
            return Err(Error::invalid(format!(
                "expected {} coordinates for a {rows}x{cols} array, got {}",
                rows * cols * rank,
                data.len()
            )));
        }
        if rank > 0 {
            for (cell, chunk) in data.chunks(rank).enumerate() {
                if !group.contains_coords(chunk) {
                    return Err(Error::Parse {
                        row: cell / cols,
                        col: cell % cols,
                        message: format!("{chunk:?} is not an element of {group}"),
                    });
                }
            }
        }
        Ok(Self {
            group,
            rows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        group: AbelianGroup,
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> Vec<u64>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols * group.rank());
        for i in 0..rows {
            for j in 0..cols {
                let coords = entry(i, j);
                if coords.len() != group.rank() {
                    return Err(Error::invalid(format!("cell ({i},{j}) has wrong rank")));
                }
                data.extend(coords);
            }
        }
        Self::new(group, rows, cols, data)
    }

    /// Build from nested rows of coordinate tuples.
    pub fn from_rows(group: AbelianGroup, rows: &[Vec<Vec<u64>>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("ragged rows"));
        }
        Self::from_fn(group, rows.len(), cols, |i, j| rows[i][j].clone())
    }

    /// Build a cyclic-group array from plain integers.
    pub fn from_ints(group: AbelianGroup, rows: &[Vec<u64>]) -> Result<Self> {
        if group.rank() != 1 {
            return Err(Error::invalid("integer entries need a rank-one group"));
        }
        let nested: Vec<Vec<Vec<u64>>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| vec![v]).collect())
            .collect();
        Self::from_rows(group, &nested)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length; only meaningful for squares.
    pub fn side(&self) -> usize {
        self.rows
    }

    pub fn coords(&self, i: usize, j: usize) -> &[u64] {
        let rank = self.group.rank();
        let at = (i * self.cols + j) * rank;
        &self.data[at..at + rank]
    }

    pub fn get(&self, i: usize, j: usize) -> GroupElement {
        self.group
            .element(self.coords(i, j))
            .expect("stored coordinates are always valid")
    }

    pub fn raw(&self) -> &[u64] {
        &self.data
    }

    pub(crate) fn swap_cells(&mut self, a: (usize, usize), b: (usize, usize)) {
        let rank = self.group.rank();
        let ia = (a.0 * self.cols + a.1) * rank;
        let ib = (b.0 * self.cols + b.1) * rank;
        for k in 0..rank {
            self.data.swap(ia + k, ib + k);
        }
    }

    /// Nested coordinate rows, as used by the JSON format.
    pub fn to_rows(&self) -> Vec<Vec<Vec<u64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.coords(i, j).to_vec()).collect())
            .collect()
    }

    pub fn transformed(&self, sym: Dihedral) -> GroupArray {
        let (rows, cols) = if sym.swaps_axes() {
            (self.cols, self.rows)
        } else {
            (self.rows, self.cols)
        };
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..rows {
            for j in 0..cols {
                let (si, sj) = sym.source(i, j, self.rows, self.cols);
                data.extend_from_slice(self.coords(si, sj));
            }
        }
        GroupArray {
            group: self.group.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Add `c` to every entry.
    pub fn translated(&self, c: &GroupElement) -> Result<GroupArray> {
        if c.moduli() != self.group.moduli() {
            return Err(Error::PresentationMismatch {
                left: c.moduli().to_vec(),
                right: self.group.moduli().to_vec(),
            });
        }
        let rank = self.group.rank();
        let mut data = self.data.clone();
        if rank > 0 {
            for chunk in data.chunks_mut(rank) {
                self.group.add_assign_coords(chunk, c.coords());
            }
        }
        Ok(GroupArray {
            data,
            ..self.clone()
        })
    }

    /// Rewrite every entry through an isomorphism into its target presentation.
    pub fn reexpress(&self, iso: &Isomorphism) -> Result<GroupArray> {
        if iso.source().moduli() != self.group.moduli() {
            return Err(Error::PresentationMismatch {
                left: iso.source().moduli().to_vec(),
                right: self.group.moduli().to_vec(),
            });
        }
        let target = iso.target().clone();
        let mut data = Vec::with_capacity(self.rows * self.cols * target.rank());
        for i in 0..self.rows {
            for j in 0..self.cols {
                data.extend(iso.apply_coords(self.coords(i, j)));
            }
        }
        GroupArray::new(target, self.rows, self.cols, data)
    }
}

impl fmt::Display for GroupArray {
    /// Aligned plain-text grid.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let mut s = String::new();
                        write_coords(&mut s, self.coords(i, j)).expect("writing to a String");
                        s
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z16() -> AbelianGroup {
        AbelianGroup::cyclic(16).unwrap()
    }

    fn sample() -> GroupArray {
        GroupArray::from_fn(z16(), 4, 4, |i, j| vec![(4 * i + j) as u64]).unwrap()
    }

    #[test]
    fn rejects_out_of_range_entries() {
        let err =
            GroupArray::from_ints(AbelianGroup::cyclic(4).unwrap(), &[vec![0, 1], vec![4, 2]]);
        assert!(matches!(err, Err(Error::Parse { row: 1, col: 0, .. })));
    }

    #[test]
    fn rotations_compose() {
        let a = sample();
        let twice = a
            .transformed(Dihedral::Rotate90)
            .transformed(Dihedral::Rotate90);
        assert_eq!(twice, a.transformed(Dihedral::Rotate180));
        let back = a
            .transformed(Dihedral::Rotate90)
            .transformed(Dihedral::Rotate270);
        assert_eq!(back, a);
        assert_eq!(a.transformed(Dihedral::Transpose).coords(0, 1), &[4]);
        assert_eq!(a.transformed(Dihedral::MirrorColumns).coords(0, 0), &[3]);
    }

    #[test]
    fn rectangles_transpose_shape() {
        let r = GroupArray::from_fn(AbelianGroup::cyclic(6).unwrap(), 2, 3, |i, j| {
            vec![(3 * i + j) as u64]
        })
        .unwrap();
        let t = r.transformed(Dihedral::Rotate90);
        assert_eq!((t.rows(), t.cols()), (3, 2));
        assert_eq!(t.coords(0, 0), &[3]);
    }

    #[test]
    fn pretty_output() {
        let a = GroupArray::from_ints(AbelianGroup::cyclic(4).unwrap(), &[vec![0, 1], vec![3, 2]])
            .unwrap();
        assert_eq!(a.to_string(), "0 1\n3 2\n");
    }
}
