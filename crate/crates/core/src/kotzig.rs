//! Complete mappings and Kotzig arrays over Abelian groups.
//!
//! A Kotzig array over `Γ` has `j` rows, each a permutation of `Γ`, and all
//! column sums equal. The arrays built here have every column summing to 0.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::array::GroupArray;
use crate::error::{Error, Result};
use crate::group::{crt_isomorphism, AbelianGroup, GroupElement};

/// Largest 2-part chunk for which a complete mapping is searched.
pub const MAX_CHUNK_ORDER: u64 = 1 << 12;

/// A permutation `σ` of `Γ` such that `x ↦ x + σ(x)` is also a permutation.
/// Stored as a table over lexicographic element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteMapping {
    group: AbelianGroup,
    table: Vec<usize>,
}

impl CompleteMapping {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply_coords(&self, x: &[u64]) -> Vec<u64> {
        self.group.coords_at(self.table[self.group.index_of(x)])
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.moduli() != self.group.moduli() {
            return Err(Error::PresentationMismatch {
                left: x.moduli().to_vec(),
                right: self.group.moduli().to_vec(),
            });
        }
        self.group.element(&self.apply_coords(x.coords()))
    }

    /// Exhaustive check that both `σ` and `x ↦ x + σ(x)` are bijections.
    pub fn is_valid(&self) -> bool {
        let n = self.group.order() as usize;
        if self.table.len() != n {
            return false;
        }
        let mut image = vec![false; n];
        let mut sums = vec![false; n];
        for (x, &s) in self.table.iter().enumerate() {
            if s >= n || std::mem::replace(&mut image[s], true) {
                return false;
            }
            let xc = self.group.coords_at(x);
            let sum = self.group.add_coords(&xc, &self.group.coords_at(s));
            if std::mem::replace(&mut sums[self.group.index_of(&sum)], true) {
                return false;
            }
        }
        true
    }
}

fn chunk_cache() -> &'static Mutex<HashMap<Vec<u64>, Vec<usize>>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u64>, Vec<usize>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Complete mapping of a small group by backtracking: repeatedly assign the
/// unmapped element with the fewest options left. Each attempt has a node
/// budget; later attempts shuffle ties with a fixed-seed RNG, so results are
/// reproducible.
fn search_complete_mapping(group: &AbelianGroup) -> Option<Vec<usize>> {
    let n = group.order() as usize;
    let add: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let xc = group.coords_at(x);
            (0..n)
                .map(|y| group.index_of(&group.add_coords(&xc, &group.coords_at(y))))
                .collect()
        })
        .collect();

    struct State<'a> {
        add: &'a [Vec<usize>],
        table: Vec<usize>,
        used_image: Vec<bool>,
        used_sum: Vec<bool>,
        nodes: u64,
        budget: u64,
        rng: Option<ChaCha8Rng>,
    }

    fn options<'s>(st: &'s State<'_>, x: usize) -> impl Iterator<Item = usize> + 's {
        (0..st.add.len()).filter(move |&y| !st.used_image[y] && !st.used_sum[st.add[x][y]])
    }

    fn dfs(st: &mut State, remaining: usize) -> Option<bool> {
        if remaining == 0 {
            return Some(true);
        }
        st.nodes += 1;
        if st.nodes > st.budget {
            return None;
        }
        let mut best: Vec<usize> = Vec::new();
        let mut best_count = usize::MAX;
        for x in (0..st.add.len()).filter(|&x| st.table[x] == usize::MAX) {
            let count = options(st, x).count();
            if count == 0 {
                return Some(false);
            }
            if count < best_count {
                best_count = count;
                best.clear();
            }
            if count == best_count {
                best.push(x);
            }
        }
        let x = match st.rng.as_mut() {
            Some(rng) => *best.choose(rng).expect("remaining > 0"),
            None => best[0],
        };
        let mut candidates: Vec<usize> = options(st, x).collect();
        if let Some(rng) = st.rng.as_mut() {
            candidates.shuffle(rng);
        }
        for y in candidates {
            let s = st.add[x][y];
            st.table[x] = y;
            st.used_image[y] = true;
            st.used_sum[s] = true;
            match dfs(st, remaining - 1) {
                Some(false) => {}
                found_or_out => return found_or_out,
            }
            st.table[x] = usize::MAX;
            st.used_image[y] = false;
            st.used_sum[s] = false;
        }
        Some(false)
    }

    const ATTEMPTS: u64 = 64;
    for attempt in 0..ATTEMPTS {
        let mut st = State {
            add: &add,
            table: vec![usize::MAX; n],
            used_image: vec![false; n],
            used_sum: vec![false; n],
            nodes: 0,
            budget: 64 * n as u64,
            rng: (attempt > 0).then(|| ChaCha8Rng::seed_from_u64(attempt)),
        };
        match dfs(&mut st, n) {
            Some(true) => return Some(st.table),
            // The search space is exhausted: no mapping exists at all.
            Some(false) => return None,
            None => {}
        }
    }
    None
}

fn chunk_mapping(moduli: &[u64]) -> Result<Vec<usize>> {
    if let Some(t) = chunk_cache().lock().expect("cache lock").get(moduli) {
        return Ok(t.clone());
    }
    let group = AbelianGroup::new(moduli)?;
    if group.order() > MAX_CHUNK_ORDER {
        return Err(Error::ResourceLimit(format!(
            "complete-mapping search over {group} exceeds order bound {MAX_CHUNK_ORDER}"
        )));
    }
    let table = search_complete_mapping(&group).ok_or_else(|| {
        Error::ConstructionFailure(format!("no complete mapping found for {group}"))
    })?;
    chunk_cache()
        .lock()
        .expect("cache lock")
        .insert(moduli.to_vec(), table.clone());
    Ok(table)
}

/// Complete mapping of `g`, which must be of odd order or have more than one
/// involution. Odd order uses the identity. Otherwise the even cyclic factors
/// are grouped in pairs (a triple if their number is odd), each chunk gets a
/// searched mapping, the odd part keeps the identity, and the product is
/// carried back to the caller's presentation.
pub fn complete_mapping(g: &AbelianGroup) -> Result<CompleteMapping> {
    if !g.in_class_g() {
        return Err(Error::nonexistence(format!(
            "{g} has a unique involution, so it has no complete mapping"
        )));
    }
    let n = g.order() as usize;
    if g.order() % 2 == 1 {
        return Ok(CompleteMapping {
            group: g.clone(),
            table: (0..n).collect(),
        });
    }
    let primary = g.primary_presentation();
    let moduli = primary.moduli();
    let evens = moduli.iter().take_while(|&&m| m % 2 == 0).count();
    let mut chunks: Vec<std::ops::Range<usize>> =
        (0..evens / 2).map(|c| 2 * c..2 * c + 2).collect();
    if evens % 2 == 1 {
        let last = chunks.pop().expect("at least two even factors");
        chunks.push(last.start..last.end + 1);
    }
    let tables = chunks
        .iter()
        .map(|r| {
            let sub = &moduli[r.clone()];
            Ok((r.clone(), AbelianGroup::new(sub)?, chunk_mapping(sub)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let to_primary = crt_isomorphism(g, &primary)?;
    let back = to_primary.inverse();
    let table = (0..n)
        .map(|x| {
            let mut c = to_primary.apply_coords(&g.coords_at(x));
            for (range, sub, t) in &tables {
                let image = sub.coords_at(t[sub.index_of(&c[range.clone()])]);
                c[range.clone()].copy_from_slice(&image);
            }
            g.index_of(&back.apply_coords(&c))
        })
        .collect();
    Ok(CompleteMapping {
        group: g.clone(),
        table,
    })
}

/// A `j × |Γ|` Kotzig array over `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KotzigArrayG {
    array: GroupArray,
}

impl KotzigArrayG {
    /// Wrap an existing array after checking the Kotzig conditions.
    pub fn new(array: GroupArray) -> Result<Self> {
        let ka = Self { array };
        if !ka.is_valid() {
            return Err(Error::invalid(
                "rows must be permutations of the group with equal column sums",
            ));
        }
        Ok(ka)
    }

    pub fn group(&self) -> &AbelianGroup {
        self.array.group()
    }

    pub fn rows(&self) -> usize {
        self.array.rows()
    }

    pub fn cols(&self) -> usize {
        self.array.cols()
    }

    /// Entry `h_{i,s}`, zero-based.
    pub fn coords(&self, i: usize, s: usize) -> &[u64] {
        self.array.coords(i, s)
    }

    pub fn as_array(&self) -> &GroupArray {
        &self.array
    }

    pub fn into_array(self) -> GroupArray {
        self.array
    }

    pub fn column_sums(&self) -> Vec<GroupElement> {
        let g = self.group();
        (0..self.cols())
            .map(|s| {
                let mut acc = vec![0; g.rank()];
                for i in 0..self.rows() {
                    g.add_assign_coords(&mut acc, self.coords(i, s));
                }
                g.element(&acc).expect("sums stay in the group")
            })
            .collect()
    }

    /// The shared column sum, if all columns agree.
    pub fn column_sum(&self) -> Option<GroupElement> {
        let sums = self.column_sums();
        let first = sums.first()?.clone();
        sums.iter().all(|s| *s == first).then_some(first)
    }

    pub fn rows_are_permutations(&self) -> bool {
        let g = self.group();
        let n = g.order() as usize;
        if self.cols() != n {
            return false;
        }
        (0..self.rows()).all(|i| {
            let mut seen = vec![false; n];
            (0..n).all(|s| !std::mem::replace(&mut seen[g.index_of(self.coords(i, s))], true))
        })
    }

    pub fn is_valid(&self) -> bool {
        self.rows_are_permutations() && self.column_sum().is_some()
    }

    fn map_rows(&self, mut f: impl FnMut(usize, usize, &[u64]) -> Vec<u64>) -> KotzigArrayG {
        let array = GroupArray::from_fn(self.group().clone(), self.rows(), self.cols(), |i, s| {
            f(i, s, self.coords(i, s))
        })
        .expect("row maps stay in the group");
        KotzigArrayG { array }
    }

    /// Subtract each row's first entry from the whole row, so the first
    /// column is zero and every column sums to 0.
    pub fn normalize_rows(&self) -> KotzigArrayG {
        let g = self.group().clone();
        let firsts: Vec<Vec<u64>> = (0..self.rows())
            .map(|i| self.coords(i, 0).to_vec())
            .collect();
        self.map_rows(|i, _, x| g.sub_coords(x, &firsts[i]))
    }

    /// Column `s` of the result is column `pi[s]` of `self`.
    pub fn permute_columns(&self, pi: &[usize]) -> Result<KotzigArrayG> {
        let n = self.cols();
        let mut seen = vec![false; n];
        if pi.len() != n
            || pi
                .iter()
                .any(|&c| c >= n || std::mem::replace(&mut seen[c], true))
        {
            return Err(Error::invalid("column map is not a permutation"));
        }
        Ok(self.map_rows(|i, s, _| self.coords(i, pi[s]).to_vec()))
    }

    /// Add `c` to every entry of row `i`; every column sum moves by `c`.
    pub fn translate_row(&self, i: usize, c: &GroupElement) -> Result<KotzigArrayG> {
        if c.moduli() != self.group().moduli() {
            return Err(Error::PresentationMismatch {
                left: c.moduli().to_vec(),
                right: self.group().moduli().to_vec(),
            });
        }
        if i >= self.rows() {
            return Err(Error::invalid(format!("row {i} out of range")));
        }
        let g = self.group().clone();
        Ok(self.map_rows(|r, _, x| {
            if r == i {
                g.add_coords(x, c.coords())
            } else {
                x.to_vec()
            }
        }))
    }
}

/// Kotzig array with `j` rows over `g` and zero column sums; exists iff
/// `j > 1` and either `j` is even or `g` is in the complete-mapping class.
///
/// Even `j` alternates the lexicographic enumeration `E` with `-E`. Odd `j`
/// starts with `E`, `σE`, `-(E + σE)` for a complete mapping `σ`, then adds
/// `(E, -E)` pairs.
pub fn kotzig_gamma(j: usize, g: &AbelianGroup) -> Result<KotzigArrayG> {
    if j <= 1 {
        return Err(Error::nonexistence(format!(
            "a Kotzig array needs at least two rows, got {j}"
        )));
    }
    if j % 2 == 1 && !g.in_class_g() {
        return Err(Error::nonexistence(format!(
            "no Kotzig array with an odd number of rows ({j}) over {g}, which has a unique involution"
        )));
    }
    let elements = g.enumerate_elements()?;
    let n = elements.len();
    let sigma = if j % 2 == 1 {
        Some(complete_mapping(g)?)
    } else {
        None
    };
    let lead = if sigma.is_some() { 3 } else { 0 };
    let array = GroupArray::from_fn(g.clone(), j, n, |i, s| {
        let e = elements[s].coords();
        match (i, &sigma) {
            (0, Some(_)) => e.to_vec(),
            (1, Some(m)) => m.apply_coords(e),
            (2, Some(m)) => g.neg_coords(&g.add_coords(e, &m.apply_coords(e))),
            _ if (i - lead) % 2 == 0 => e.to_vec(),
            _ => g.neg_coords(e),
        }
    })?;
    Ok(KotzigArrayG { array })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures;

    fn grp(m: &[u64]) -> AbelianGroup {
        AbelianGroup::new(m).unwrap()
    }

    #[test]
    fn identity_for_odd_groups() {
        let m = complete_mapping(&grp(&[9])).unwrap();
        assert_eq!(m.table(), (0..9).collect::<Vec<_>>().as_slice());
        assert!(m.is_valid());
    }

    #[test]
    fn klein_four_mapping() {
        let m = complete_mapping(&grp(&[2, 2])).unwrap();
        assert!(m.is_valid());
        assert_eq!(m.table(), &[0, 2, 3, 1]);
    }

    #[test]
    fn unique_involution_has_no_mapping() {
        for g in [grp(&[8]), grp(&[2]), grp(&[12, 3]), grp(&[4, 9])] {
            assert!(matches!(complete_mapping(&g), Err(Error::Nonexistence(_))));
        }
    }

    #[test]
    fn mixed_presentations() {
        for m in [
            &[6, 2][..],
            &[2, 2, 2],
            &[12, 6],
            &[4, 4],
            &[2, 8],
            &[10, 2, 3],
        ] {
            let cm = complete_mapping(&grp(m)).unwrap();
            assert!(cm.is_valid(), "{m:?}");
        }
    }

    #[test]
    fn klein_odd_rows_reproduce_the_figure() {
        let ka = kotzig_gamma(3, &grp(&[2, 2])).unwrap();
        assert_eq!(ka.as_array(), &figures::kotzig_3x4());
    }

    #[test]
    fn even_rows_pair_with_negation() {
        let ka = kotzig_gamma(2, &grp(&[5])).unwrap();
        let rows: Vec<Vec<u64>> = (0..2)
            .map(|i| (0..5).map(|s| ka.coords(i, s)[0]).collect())
            .collect();
        assert_eq!(rows, vec![vec![0, 1, 2, 3, 4], vec![0, 4, 3, 2, 1]]);
        assert!(ka.column_sum().unwrap().is_zero());
    }

    #[test]
    fn odd_rows_need_the_class() {
        assert!(matches!(
            kotzig_gamma(3, &grp(&[4])),
            Err(Error::Nonexistence(_))
        ));
        assert!(matches!(
            kotzig_gamma(1, &grp(&[3])),
            Err(Error::Nonexistence(_))
        ));
        assert!(kotzig_gamma(4, &grp(&[4])).unwrap().is_valid());
    }

    #[test]
    fn row_operations() {
        let ka = kotzig_gamma(3, &grp(&[3, 3])).unwrap();
        let c = grp(&[3, 3]).element(&[1, 2]).unwrap();
        let shifted = ka.translate_row(0, &c).unwrap();
        assert_eq!(shifted.column_sum().unwrap(), c);
        let back = shifted.translate_row(1, &-&c).unwrap();
        assert!(back.column_sum().unwrap().is_zero());
        let norm = shifted.normalize_rows();
        assert!((0..3).all(|i| norm.coords(i, 0) == [0, 0]));
        assert!(norm.column_sum().unwrap().is_zero());
        let pi: Vec<usize> = (0..9).rev().collect();
        assert!(ka.permute_columns(&pi).unwrap().is_valid());
        assert!(ka.permute_columns(&[0; 9]).is_err());
    }
}
