//! Arranging `k²` blocks in a `k × k` grid so that both grid diagonals
//! collect residuals summing to zero.
//!
//! Each block has a main-diagonal residual and a back-diagonal residual.
//! Reversing a block's columns swaps the two. Blocks on the grid's main
//! diagonal contribute their (effective) main residual, blocks on the grid's
//! anti-diagonal their back residual, and for odd `k` the center block
//! contributes both.

use crate::error::{Error, Result};
use crate::group::AbelianGroup;

/// Default node budget for [`solve_placement`].
pub const DEFAULT_PLACEMENT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPlacement {
    k: usize,
    blocks: Vec<usize>,
    reversed: Vec<bool>,
}

impl BlockPlacement {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Block index at grid position `(p, q)`.
    pub fn block(&self, p: usize, q: usize) -> usize {
        self.blocks[p * self.k + q]
    }

    /// Whether the block at `(p, q)` has its columns reversed.
    pub fn reversed(&self, p: usize, q: usize) -> bool {
        self.reversed[p * self.k + q]
    }

    /// Check bijectivity and both diagonal conditions against the residuals.
    pub fn satisfies(&self, group: &AbelianGroup, main: &[Vec<u64>], back: &[Vec<u64>]) -> bool {
        let k = self.k;
        let mut seen = vec![false; k * k];
        if self
            .blocks
            .iter()
            .any(|&b| b >= k * k || std::mem::replace(&mut seen[b], true))
        {
            return false;
        }
        let eff = |p: usize, q: usize, want_main: bool| -> &[u64] {
            let b = self.block(p, q);
            if want_main != self.reversed(p, q) {
                &main[b]
            } else {
                &back[b]
            }
        };
        let mut d = vec![0; group.rank()];
        let mut a = vec![0; group.rank()];
        for p in 0..k {
            group.add_assign_coords(&mut d, eff(p, p, true));
            group.add_assign_coords(&mut a, eff(p, k - 1 - p, false));
        }
        AbelianGroup::is_zero_coords(&d) && AbelianGroup::is_zero_coords(&a)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Center,
    Main(usize),
    Anti(usize),
}

struct Search<'a> {
    group: &'a AbelianGroup,
    main: &'a [Vec<u64>],
    back: &'a [Vec<u64>],
    slots: Vec<Slot>,
    last_main: Option<usize>,
    last_anti: Option<usize>,
    used: Vec<bool>,
    chosen: Vec<(usize, bool)>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Effective (main, back) residual of block `b` with the given orientation.
    fn eff(&self, b: usize, rev: bool) -> (&[u64], &[u64]) {
        if rev {
            (&self.back[b], &self.main[b])
        } else {
            (&self.main[b], &self.back[b])
        }
    }

    fn dfs(&mut self, idx: usize, pm: Vec<u64>, pa: Vec<u64>) -> Option<bool> {
        if idx == self.slots.len() {
            return Some(AbelianGroup::is_zero_coords(&pm) && AbelianGroup::is_zero_coords(&pa));
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let slot = self.slots[idx];
        let closes_main =
            matches!(slot, Slot::Center | Slot::Main(_)) && self.last_main.is_none_or(|l| l == idx);
        let closes_anti =
            matches!(slot, Slot::Center | Slot::Anti(_)) && self.last_anti.is_none_or(|l| l == idx);
        let need_m = self.group.neg_coords(&pm);
        let need_a = self.group.neg_coords(&pa);

        // Rank candidates: closing the partial sum first, then zero residuals, then the rest.
        let mut ranked: Vec<(u8, usize, bool)> = Vec::new();
        for b in (0..self.used.len()).filter(|&b| !self.used[b]) {
            for rev in [false, true] {
                if rev && self.main[b] == self.back[b] {
                    continue;
                }
                let (m, a) = self.eff(b, rev);
                let uses_m = matches!(slot, Slot::Center | Slot::Main(_));
                let uses_a = matches!(slot, Slot::Center | Slot::Anti(_));
                if (closes_main && m != need_m.as_slice())
                    || (closes_anti && a != need_a.as_slice())
                {
                    continue;
                }
                let closing =
                    (!uses_m || m == need_m.as_slice()) && (!uses_a || a == need_a.as_slice());
                let zero = (!uses_m || AbelianGroup::is_zero_coords(m))
                    && (!uses_a || AbelianGroup::is_zero_coords(a));
                let rank = match (closing, zero) {
                    (true, _) => 0,
                    (false, true) => 1,
                    _ => 2,
                };
                ranked.push((rank, b, rev));
            }
        }
        ranked.sort_by_key(|&(r, b, rev)| (r, b, rev));

        for (_, b, rev) in ranked {
            let (m, a) = self.eff(b, rev);
            let mut nm = pm.clone();
            let mut na = pa.clone();
            if matches!(slot, Slot::Center | Slot::Main(_)) {
                self.group.add_assign_coords(&mut nm, m);
            }
            if matches!(slot, Slot::Center | Slot::Anti(_)) {
                self.group.add_assign_coords(&mut na, a);
            }
            self.used[b] = true;
            self.chosen.push((b, rev));
            match self.dfs(idx + 1, nm, na) {
                Some(false) => {}
                done => return done,
            }
            self.used[b] = false;
            self.chosen.pop();
        }
        Some(false)
    }
}

/// Find a placement of `k²` blocks whose diagonal residuals (`main[b]`,
/// `back[b]`, coordinates in `group`) sum to zero along both grid diagonals.
pub fn solve_placement(
    group: &AbelianGroup,
    k: usize,
    main: &[Vec<u64>],
    back: &[Vec<u64>],
    budget: u64,
) -> Result<BlockPlacement> {
    let blocks = k * k;
    if k == 0 || main.len() != blocks || back.len() != blocks {
        return Err(Error::invalid("need k >= 1 and k² residual pairs"));
    }
    let center = (k % 2 == 1).then_some(k / 2);
    let mut slots = Vec::new();
    if center.is_some() {
        slots.push(Slot::Center);
    }
    slots.extend((0..k).filter(|&p| Some(p) != center).map(Slot::Main));
    slots.extend((0..k).filter(|&p| Some(p) != center).map(Slot::Anti));
    let last_of = |want: fn(&Slot) -> bool| slots.iter().rposition(want);
    let last_main = last_of(|s| matches!(s, Slot::Main(_)));
    let last_anti = last_of(|s| matches!(s, Slot::Anti(_)));

    let mut search = Search {
        group,
        main,
        back,
        slots: slots.clone(),
        last_main,
        last_anti,
        used: vec![false; blocks],
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    let zero = vec![0; group.rank()];
    match search.dfs(0, zero.clone(), zero) {
        Some(true) => {}
        Some(false) => {
            return Err(Error::ConstructionFailure(format!(
                "no block placement exists for k = {k} over {group}"
            )))
        }
        None => {
            return Err(Error::ConstructionFailure(format!(
                "block placement search for k = {k} over {group} exceeded {budget} nodes"
            )))
        }
    }

    let mut grid = vec![usize::MAX; blocks];
    let mut reversed = vec![false; blocks];
    for (slot, &(b, rev)) in slots.iter().zip(&search.chosen) {
        let (p, q) = match *slot {
            Slot::Center => (k / 2, k / 2),
            Slot::Main(p) => (p, p),
            Slot::Anti(p) => (p, k - 1 - p),
        };
        grid[p * k + q] = b;
        reversed[p * k + q] = rev;
    }
    let mut rest = (0..blocks).filter(|&b| !search.used[b]);
    for cell in grid.iter_mut().filter(|c| **c == usize::MAX) {
        *cell = rest.next().expect("one block per free cell");
    }
    Ok(BlockPlacement {
        k,
        blocks: grid,
        reversed,
    })
}
