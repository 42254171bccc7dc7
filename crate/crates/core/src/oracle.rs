//! Brute-force ground truth for small squares, independent of the constructions.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::array::{Dihedral, GroupArray};
use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::numtheory::exact_sqrt;
use crate::verify::verify;

/// Default node budget for [`backtrack_search`].
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Largest side accepted for exact counting.
pub const MAX_COUNT_SIDE: usize = 4;

/// Largest side accepted for finding a single square.
pub const MAX_FIND_SIDE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    FindOne,
    CountAll,
    /// Count squares up to the eight symmetries of the grid.
    CountOrbits,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub group: AbelianGroup,
    pub side: usize,
    pub mode: SearchMode,
    pub node_budget: u64,
    /// Shuffles the candidate order; `None` tries elements in index order.
    pub seed: Option<u64>,
}

impl SearchConfig {
    /// Side taken from `|group|`, default budget, no shuffling.
    pub fn new(group: AbelianGroup, mode: SearchMode) -> Result<Self> {
        let side = exact_sqrt(group.order()).ok_or_else(|| {
            Error::invalid(format!(
                "|{group}| = {} is not a perfect square",
                group.order()
            ))
        })? as usize;
        Ok(Self {
            group,
            side,
            mode,
            node_budget: DEFAULT_NODE_BUDGET,
            seed: None,
        })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    fn validate(&self) -> Result<()> {
        if (self.side as u64).checked_mul(self.side as u64) != Some(self.group.order()) {
            return Err(Error::invalid(format!(
                "side {} does not match |{}| = {}",
                self.side,
                self.group,
                self.group.order()
            )));
        }
        if self.node_budget == 0 {
            return Err(Error::invalid("node budget must be positive"));
        }
        let limit = match self.mode {
            SearchMode::FindOne => MAX_FIND_SIDE,
            _ => MAX_COUNT_SIDE,
        };
        if self.side > limit {
            return Err(Error::out_of_domain(format!(
                "side {} is above the search limit {limit} for {:?}",
                self.side, self.mode
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult {
    Found(GroupArray),
    /// The search space was exhausted without a magic square.
    NoSquare,
    Count(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: SearchResult,
    pub nodes: u64,
}

struct Searcher {
    n: usize,
    group: AbelianGroup,
    add: Vec<u32>,
    neg: Vec<u32>,
    candidates: Vec<u32>,
    /// Cells in visiting order.
    order: Vec<usize>,
    /// Line ids through each cell: rows, columns, diagonal, anti-diagonal.
    cell_lines: Vec<Vec<usize>>,
    line_sum: Vec<u32>,
    line_empty: Vec<usize>,
    cells: Vec<u32>,
    used: Vec<bool>,
    mu: Option<u32>,
    mode: SearchMode,
    nodes: u64,
    budget: u64,
    count: u64,
    orbits: HashSet<Vec<u64>>,
    found: Option<GroupArray>,
}

enum Flow {
    Continue,
    Stop,
    OutOfBudget,
}

/// The `2n + 2` lines of an `n × n` grid, indexed per cell.
fn cell_lines(n: usize) -> Vec<Vec<usize>> {
    (0..n * n)
        .map(|cell| {
            let (r, c) = (cell / n, cell % n);
            let mut ids = vec![r, n + c];
            if r == c {
                ids.push(2 * n);
            }
            if r + c == n - 1 {
                ids.push(2 * n + 1);
            }
            ids
        })
        .collect()
}

/// Greedy visiting order: always continue in a line with the fewest empty
/// cells, so that lines complete (and force their last cell) early.
fn visiting_order(n: usize, lines: &[Vec<usize>]) -> Vec<usize> {
    let mut empty = vec![n; 2 * n + 2];
    let mut filled = vec![false; n * n];
    let mut order = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        let cell = (0..n * n)
            .filter(|&c| !filled[c])
            .min_by_key(|&c| (lines[c].iter().map(|&l| empty[l]).min(), c))
            .expect("an empty cell remains");
        filled[cell] = true;
        for &l in &lines[cell] {
            empty[l] -= 1;
        }
        order.push(cell);
    }
    order
}

impl Searcher {
    fn sum(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.used.len() + b as usize]
    }

    fn array(&self) -> GroupArray {
        let n = self.n;
        GroupArray::from_fn(self.group.clone(), n, n, |i, j| {
            self.group.coords_at(self.cells[i * n + j] as usize)
        })
        .expect("cells are group elements")
    }

    /// Element forced at `cell` by the lines it completes, or `None` if free.
    /// `Err(())` when two completed lines demand different elements.
    fn forced(&self, cell: usize) -> std::result::Result<Option<u32>, ()> {
        let Some(mu) = self.mu else {
            return Ok(None);
        };
        let mut want: Option<u32> = None;
        for &l in &self.cell_lines[cell] {
            if self.line_empty[l] != 1 {
                continue;
            }
            let x = self.sum(mu, self.neg[self.line_sum[l] as usize]);
            match want {
                Some(w) if w != x => return Err(()),
                _ => want = Some(x),
            }
        }
        Ok(want)
    }

    fn place(&mut self, step: usize, cell: usize, x: u32) -> Flow {
        let saved_mu = self.mu;
        let mut consistent = true;
        for k in 0..self.cell_lines[cell].len() {
            let l = self.cell_lines[cell][k];
            self.line_sum[l] = self.sum(self.line_sum[l], x);
            self.line_empty[l] -= 1;
            if self.line_empty[l] == 0 {
                match self.mu {
                    None => self.mu = Some(self.line_sum[l]),
                    Some(mu) => consistent &= mu == self.line_sum[l],
                }
            }
        }
        self.used[x as usize] = true;
        self.cells[cell] = x;
        let flow = if consistent {
            self.dfs(step + 1)
        } else {
            Flow::Continue
        };
        self.used[x as usize] = false;
        for k in 0..self.cell_lines[cell].len() {
            let l = self.cell_lines[cell][k];
            self.line_sum[l] = self.sum(self.line_sum[l], self.neg[x as usize]);
            self.line_empty[l] += 1;
        }
        self.mu = saved_mu;
        flow
    }

    fn dfs(&mut self, step: usize) -> Flow {
        if step == self.order.len() {
            match self.mode {
                SearchMode::FindOne => {
                    self.found = Some(self.array());
                    return Flow::Stop;
                }
                SearchMode::CountAll => self.count += 1,
                SearchMode::CountOrbits => {
                    let canon = orbit_canonical(&self.array());
                    self.orbits.insert(canon.raw().to_vec());
                }
            }
            return Flow::Continue;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::OutOfBudget;
        }
        let cell = self.order[step];
        match self.forced(cell) {
            Err(()) => Flow::Continue,
            Ok(Some(x)) if self.used[x as usize] => Flow::Continue,
            Ok(Some(x)) => self.place(step, cell, x),
            Ok(None) => {
                for k in 0..self.candidates.len() {
                    let x = self.candidates[k];
                    if self.used[x as usize] {
                        continue;
                    }
                    match self.place(step, cell, x) {
                        Flow::Continue => {}
                        done => return done,
                    }
                }
                Flow::Continue
            }
        }
    }
}

/// Backtracking over all placements, one cell at a time. The magic sum is
/// fixed by the first completed line; the last empty cell of every line is
/// forced, and a line that completes with a different sum is abandoned.
///
/// Exhausting the node budget is reported as [`Error::BudgetExhausted`]
/// rather than as a (possibly wrong) negative answer.
pub fn backtrack_search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let g = &cfg.group;
    let order = g.order() as usize;
    let elems: Vec<Vec<u64>> = (0..order).map(|i| g.coords_at(i)).collect();
    let mut add = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            add[a * order + b] = g.index_of(&g.add_coords(&elems[a], &elems[b])) as u32;
        }
    }
    let neg: Vec<u32> = elems
        .iter()
        .map(|x| g.index_of(&g.neg_coords(x)) as u32)
        .collect();
    let mut candidates: Vec<u32> = (0..order as u32).collect();
    if let Some(seed) = cfg.seed {
        candidates.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let n = cfg.side;
    let lines = cell_lines(n);
    let mut s = Searcher {
        n,
        group: g.clone(),
        add,
        neg,
        candidates,
        order: visiting_order(n, &lines),
        cell_lines: lines,
        line_sum: vec![0; 2 * n + 2],
        line_empty: vec![n; 2 * n + 2],
        cells: vec![0; order],
        used: vec![false; order],
        mu: None,
        mode: cfg.mode,
        nodes: 0,
        budget: cfg.node_budget,
        count: 0,
        orbits: HashSet::new(),
        found: None,
    };
    if let Flow::OutOfBudget = s.dfs(0) {
        return Err(Error::BudgetExhausted {
            budget: cfg.node_budget,
        });
    }
    let result = match cfg.mode {
        SearchMode::FindOne => match s.found {
            Some(a) => {
                debug_assert!(verify(&a).is_magic_square());
                SearchResult::Found(a)
            }
            None => SearchResult::NoSquare,
        },
        SearchMode::CountAll => SearchResult::Count(s.count),
        SearchMode::CountOrbits => SearchResult::Count(s.orbits.len() as u64),
    };
    Ok(SearchOutcome {
        result,
        nodes: s.nodes,
    })
}

/// Lexicographic minimum of `(rows, cols, coordinates)` over the eight grid
/// symmetries. Two arrays share an orbit exactly when their forms agree.
pub fn orbit_canonical(a: &GroupArray) -> GroupArray {
    Dihedral::ALL
        .iter()
        .map(|&d| a.transformed(d))
        .min_by(|x, y| (x.rows(), x.cols(), x.raw()).cmp(&(y.rows(), y.cols(), y.raw())))
        .expect("eight symmetries")
}

/// One symmetry class of side-2 placements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side2Orbit {
    pub representative: GroupArray,
    /// Number of the 24 placements in this class.
    pub size: usize,
    /// Rows share a sum and columns share a sum.
    pub rectangle: bool,
    /// The rows share a sum, or the columns do.
    pub one_family_constant: bool,
    /// The two diagonals have the same sum.
    pub diagonals_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side2Census {
    pub magic_square_count: u64,
    pub rectangle_orbit_representatives: Vec<GroupArray>,
    /// Every orbit of the 24 placements, in canonical order.
    pub orbits: Vec<Side2Orbit>,
}

/// Enumerate all 24 placements of a group of order 4 in a 2×2 grid.
pub fn exhaustive_side2(g: &AbelianGroup) -> Result<Side2Census> {
    if g.order() != 4 {
        return Err(Error::invalid(format!("{g} does not have order 4")));
    }
    let mut perm: Vec<usize> = (0..4).collect();
    let mut all = Vec::with_capacity(24);
    permutations(&mut perm, 0, &mut |p| all.push(p.to_vec()));

    let mut magic = 0;
    let mut orbits: Vec<Side2Orbit> = Vec::new();
    for p in all {
        let a = GroupArray::from_fn(g.clone(), 2, 2, |i, j| g.coords_at(p[2 * i + j]))?;
        let report = verify(&a);
        if report.is_magic_square() {
            magic += 1;
        }
        let canon = orbit_canonical(&a);
        match orbits.iter_mut().find(|o| o.representative == canon) {
            Some(o) => o.size += 1,
            None => orbits.push(Side2Orbit {
                representative: canon,
                size: 1,
                rectangle: report.is_magic_rectangle(),
                one_family_constant: report.row_constant().is_some()
                    || report.col_constant().is_some(),
                diagonals_agree: report.diag_sum == report.anti_diag_sum,
            }),
        }
    }
    orbits.sort_by(|x, y| x.representative.raw().cmp(y.representative.raw()));
    Ok(Side2Census {
        magic_square_count: magic,
        rectangle_orbit_representatives: orbits
            .iter()
            .filter(|o| o.rectangle)
            .map(|o| o.representative.clone())
            .collect(),
        orbits,
    })
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures;

    fn grp(m: &[u64]) -> AbelianGroup {
        AbelianGroup::new(m).unwrap()
    }

    #[test]
    fn finds_side_three() {
        for m in [&[9u64][..], &[3, 3]] {
            let cfg = SearchConfig::new(grp(m), SearchMode::FindOne).unwrap();
            let SearchResult::Found(a) = backtrack_search(&cfg).unwrap().result else {
                panic!("no square over {m:?}");
            };
            assert!(verify(&a).is_magic_square());
        }
    }

    #[test]
    fn side_two_counts_zero() {
        for m in [&[4u64][..], &[2, 2]] {
            let cfg = SearchConfig::new(grp(m), SearchMode::CountAll).unwrap();
            assert_eq!(
                backtrack_search(&cfg).unwrap().result,
                SearchResult::Count(0)
            );
            assert_eq!(exhaustive_side2(&grp(m)).unwrap().magic_square_count, 0);
        }
    }

    #[test]
    fn orbit_counts_divide_totals() {
        let g = grp(&[9]);
        let all =
            backtrack_search(&SearchConfig::new(g.clone(), SearchMode::CountAll).unwrap()).unwrap();
        let orb =
            backtrack_search(&SearchConfig::new(g, SearchMode::CountOrbits).unwrap()).unwrap();
        let (SearchResult::Count(a), SearchResult::Count(o)) = (all.result, orb.result) else {
            panic!("counts expected");
        };
        // Distinct entries mean no symmetry fixes a square, so every orbit has size 8.
        assert_eq!((a, o), (8 * 27, 27));
    }

    #[test]
    fn seeded_search_is_deterministic() {
        let cfg = SearchConfig::new(grp(&[3, 3]), SearchMode::FindOne)
            .unwrap()
            .with_seed(7);
        assert_eq!(
            backtrack_search(&cfg).unwrap(),
            backtrack_search(&cfg).unwrap()
        );
    }

    #[test]
    fn budget_is_reported() {
        let cfg = SearchConfig::new(grp(&[16]), SearchMode::CountAll)
            .unwrap()
            .with_budget(10);
        assert!(matches!(
            backtrack_search(&cfg),
            Err(Error::BudgetExhausted { budget: 10 })
        ));
        let big = SearchConfig::new(grp(&[36]), SearchMode::FindOne).unwrap();
        assert!(matches!(backtrack_search(&big), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn canonical_forms() {
        let a = figures::z9();
        assert_eq!(
            orbit_canonical(&a),
            orbit_canonical(&a.transformed(Dihedral::Rotate180))
        );
        let two = figures::side_two_arrays();
        assert_ne!(orbit_canonical(&two[0]), orbit_canonical(&two[1]));
    }

    #[test]
    fn side_two_census() {
        let c4 = exhaustive_side2(&grp(&[4])).unwrap();
        let c22 = exhaustive_side2(&grp(&[2, 2])).unwrap();
        assert_eq!(c4.orbits.iter().map(|o| o.size).sum::<usize>(), 24);
        assert_eq!(c22.orbits.iter().map(|o| o.size).sum::<usize>(), 24);
        assert!(exhaustive_side2(&grp(&[9])).is_err());
    }
}
