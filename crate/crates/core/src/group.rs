//! Finite Abelian groups given as direct sums of cyclic groups.
//!
//! A group is carried in the presentation the caller chose (`Z_12 ⊕ Z_3`
//! stays `[12, 3]`), together with its primary decomposition into
//! prime-power cyclic factors. Elements are residue tuples tagged with the
//! presentation they belong to; arithmetic between different presentations
//! is refused. [`Isomorphism`] converts between presentations that share a
//! primary decomposition via the Chinese remainder theorem.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, mod_inverse, mul_mod};

/// Largest group that [`AbelianGroup::enumerate_elements`] will list.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 22;

/// A cyclic factor `Z_{p^e}` of the primary decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimaryFactor {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimaryFactor {
    pub fn modulus(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    moduli: Arc<[u64]>,
    primary: Vec<PrimaryFactor>,
    order: u64,
}

impl AbelianGroup {
    /// `Z_{m_1} ⊕ … ⊕ Z_{m_t}`. An empty list gives the trivial group.
    pub fn new(moduli: &[u64]) -> Result<Self> {
        if let Some(bad) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::invalid(format!("modulus {bad} is smaller than 2")));
        }
        let order = moduli
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .ok_or_else(|| Error::invalid("group order overflows u64"))?;
        let mut primary: Vec<PrimaryFactor> = moduli
            .iter()
            .flat_map(|&m| factorize(m))
            .map(|(prime, exponent)| PrimaryFactor { prime, exponent })
            .collect();
        primary.sort();
        Ok(Self {
            moduli: moduli.into(),
            primary,
            order,
        })
    }

    pub fn trivial() -> Self {
        Self::new(&[]).expect("empty presentation is valid")
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n])
    }

    /// Parse the comma-separated literal used on the command line, e.g. `27,3`.
    /// An empty string (or `1`) denotes the trivial group.
    pub fn parse(literal: &str) -> Result<Self> {
        let trimmed = literal.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Self::trivial());
        }
        let moduli = trimmed
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::invalid(format!("bad modulus {part:?} in group literal")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&moduli)
    }

    /// The direct sum with `other`; coordinates of `self` come first.
    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let moduli: Vec<u64> = self
            .moduli
            .iter()
            .chain(other.moduli.iter())
            .copied()
            .collect();
        Self::new(&moduli).expect("moduli of valid groups stay valid")
    }

    /// The group presented by its own primary moduli.
    pub fn primary_presentation(&self) -> AbelianGroup {
        Self::new(&self.primary_moduli()).expect("prime powers are valid moduli")
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Primary factors sorted by `(prime, exponent)`.
    pub fn primary(&self) -> &[PrimaryFactor] {
        &self.primary
    }

    pub fn primary_moduli(&self) -> Vec<u64> {
        self.primary.iter().map(PrimaryFactor::modulus).collect()
    }

    pub fn is_isomorphic(&self, other: &AbelianGroup) -> bool {
        self.primary == other.primary
    }

    /// Cyclic iff no prime occurs twice in the primary decomposition.
    pub fn is_cyclic(&self) -> bool {
        self.primary.windows(2).all(|w| w[0].prime != w[1].prime)
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> u64 {
        let even = self.primary.iter().filter(|f| f.prime == 2).count() as u32;
        (1u64 << even) - 1
    }

    /// Membership in the class of groups that are of odd order or have
    /// more than one involution.
    pub fn in_class_g(&self) -> bool {
        self.order % 2 == 1 || self.involution_count() > 1
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            moduli: self.moduli.clone(),
            coords: vec![0; self.rank()],
        }
    }

    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if !self.contains_coords(coords) {
            return Err(Error::invalid(format!(
                "coordinates {coords:?} do not lie in Z{:?}",
                self.moduli()
            )));
        }
        Ok(GroupElement {
            moduli: self.moduli.clone(),
            coords: coords.to_vec(),
        })
    }

    /// Reduce arbitrary integers into an element.
    pub fn element_reduced(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::invalid("wrong number of coordinates"));
        }
        let reduced: Vec<u64> = coords
            .iter()
            .zip(self.moduli.iter())
            .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
            .collect();
        self.element(&reduced)
    }

    /// Every element in lexicographic coordinate order, starting with zero.
    pub fn enumerate_elements(&self) -> Result<Vec<GroupElement>> {
        self.enumerate_elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn enumerate_elements_bounded(&self, bound: u64) -> Result<Vec<GroupElement>> {
        if self.order > bound {
            return Err(Error::ResourceLimit(format!(
                "group of order {} exceeds enumeration bound {bound}",
                self.order
            )));
        }
        Ok((0..self.order as usize)
            .map(|i| GroupElement {
                moduli: self.moduli.clone(),
                coords: self.coords_at(i),
            })
            .collect())
    }

    /// Sum of all group elements, computed coordinatewise in closed form.
    pub fn element_sum(&self) -> GroupElement {
        let coords = self
            .moduli
            .iter()
            .map(|&m| {
                // Each residue of Z_m repeats order/m times.
                let reps = (self.order / m) % m;
                let tri = ((m as u128 * (m as u128 - 1) / 2) % m as u128) as u64;
                mul_mod(reps, tri, m)
            })
            .collect();
        GroupElement {
            moduli: self.moduli.clone(),
            coords,
        }
    }

    pub fn contains_coords(&self, coords: &[u64]) -> bool {
        coords.len() == self.rank() && coords.iter().zip(self.moduli.iter()).all(|(c, m)| c < m)
    }

    /// Lexicographic rank of a coordinate tuple (first coordinate most significant).
    pub fn index_of(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(self.moduli.iter())
            .fold(0u64, |acc, (&c, &m)| acc * m + c) as usize
    }

    pub fn coords_at(&self, mut index: usize) -> Vec<u64> {
        let mut coords = vec![0; self.rank()];
        for (slot, &m) in coords.iter_mut().zip(self.moduli.iter()).rev() {
            *slot = index as u64 % m;
            index /= m as usize;
        }
        coords
    }

    pub fn add_assign_coords(&self, acc: &mut [u64], x: &[u64]) {
        for ((a, &b), &m) in acc.iter_mut().zip(x).zip(self.moduli.iter()) {
            *a = (*a + b) % m;
        }
    }

    pub fn add_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = a.to_vec();
        self.add_assign_coords(&mut out, b);
        out
    }

    pub fn neg_coords(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(self.moduli.iter())
            .map(|(&c, &m)| (m - c) % m)
            .collect()
    }

    pub fn sub_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.add_coords(a, &self.neg_coords(b))
    }

    pub fn scale_coords(&self, x: &[u64], k: u64) -> Vec<u64> {
        x.iter()
            .zip(self.moduli.iter())
            .map(|(&c, &m)| mul_mod(c, k % m, m))
            .collect()
    }

    pub fn is_zero_coords(x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "Z_1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z_{m}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// A residue tuple tagged with the presentation it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    moduli: Arc<[u64]>,
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn is_zero(&self) -> bool {
        AbelianGroup::is_zero_coords(&self.coords)
    }

    fn check_same(&self, other: &GroupElement) -> Result<()> {
        if self.moduli != other.moduli {
            return Err(Error::PresentationMismatch {
                left: self.moduli.to_vec(),
                right: other.moduli.to_vec(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(self.moduli.iter())
            .map(|((&a, &b), &m)| (a + b) % m)
            .collect();
        Ok(GroupElement {
            moduli: self.moduli.clone(),
            coords,
        })
    }

    pub fn try_sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.try_add(&-other)
    }

    /// `k·self`.
    pub fn scale(&self, k: u64) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.moduli.iter())
            .map(|(&c, &m)| mul_mod(c, k % m, m))
            .collect();
        GroupElement {
            moduli: self.moduli.clone(),
            coords,
        }
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;

    /// Panics when the operands come from different presentations; use
    /// [`GroupElement::try_add`] for a checked variant.
    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.moduli.iter())
            .map(|(&c, &m)| (m - c) % m)
            .collect();
        GroupElement {
            moduli: self.moduli.clone(),
            coords,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.coords)
    }
}

/// `5` for rank one, `(1,2)` otherwise.
pub(crate) fn write_coords(f: &mut impl fmt::Write, coords: &[u64]) -> fmt::Result {
    if coords.len() == 1 {
        return write!(f, "{}", coords[0]);
    }
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// Primary slots of a presentation: `(factor, modulus index)` sorted by factor
/// then index, so equal decompositions line up slot by slot.
fn primary_slots(group: &AbelianGroup) -> Vec<(PrimaryFactor, usize)> {
    let mut slots: Vec<(PrimaryFactor, usize)> = group
        .moduli()
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| {
            factorize(m)
                .into_iter()
                .map(move |(prime, exponent)| (PrimaryFactor { prime, exponent }, i))
        })
        .collect();
    slots.sort();
    slots
}

/// An explicit isomorphism between two presentations of the same group.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    src: AbelianGroup,
    dst: AbelianGroup,
    /// For each source coordinate: the primary slots it feeds, with their moduli.
    split: Vec<Vec<(usize, u64)>>,
    /// For each target coordinate: `(slot, crt coefficient)`.
    join: Vec<Vec<(usize, u64)>>,
    slots: usize,
}

impl Isomorphism {
    pub fn source(&self) -> &AbelianGroup {
        &self.src
    }

    pub fn target(&self) -> &AbelianGroup {
        &self.dst
    }

    pub fn apply_coords(&self, x: &[u64]) -> Vec<u64> {
        let mut primary = vec![0u64; self.slots];
        for (c, parts) in x.iter().zip(&self.split) {
            for &(slot, q) in parts {
                primary[slot] = c % q;
            }
        }
        self.join
            .iter()
            .zip(self.dst.moduli())
            .map(|(parts, &m)| {
                parts.iter().fold(0u64, |acc, &(slot, coeff)| {
                    (acc + mul_mod(primary[slot], coeff, m)) % m
                })
            })
            .collect()
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.moduli() != self.src.moduli() {
            return Err(Error::PresentationMismatch {
                left: x.moduli().to_vec(),
                right: self.src.moduli().to_vec(),
            });
        }
        self.dst.element(&self.apply_coords(x.coords()))
    }

    pub fn inverse(&self) -> Isomorphism {
        crt_isomorphism(&self.dst, &self.src).expect("inverse of an isomorphism exists")
    }
}

/// Build the CRT isomorphism between two presentations with identical
/// primary decompositions. Factors with equal `(p, e)` are matched in order
/// of their coordinate index.
pub fn crt_isomorphism(src: &AbelianGroup, dst: &AbelianGroup) -> Result<Isomorphism> {
    if !src.is_isomorphic(dst) {
        return Err(Error::NoIsomorphism {
            src: src.moduli().to_vec(),
            dst: dst.moduli().to_vec(),
        });
    }
    let src_slots = primary_slots(src);
    let dst_slots = primary_slots(dst);
    let mut split = vec![Vec::new(); src.rank()];
    for (slot, (factor, i)) in src_slots.iter().enumerate() {
        split[*i].push((slot, factor.modulus()));
    }
    let mut join = vec![Vec::new(); dst.rank()];
    for (slot, (factor, j)) in dst_slots.iter().enumerate() {
        let m = dst.moduli()[*j];
        let q = factor.modulus();
        let cofactor = m / q;
        let inv = mod_inverse(cofactor % q, q).expect("coprime prime-power parts");
        join[*j].push((slot, mul_mod(cofactor, inv, m)));
    }
    Ok(Isomorphism {
        src: src.clone(),
        dst: dst.clone(),
        split,
        join,
        slots: src_slots.len(),
    })
}

/// All Abelian groups of order `n`, one per isomorphism class, each in
/// invariant-factor form with the largest factor first (`[12, 3]`).
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianGroup> {
    let mut groups = vec![Vec::<u64>::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for parts in partitions(e) {
            for base in &groups {
                let len = base.len().max(parts.len());
                let factors: Vec<u64> = (0..len)
                    .map(|i| {
                        base.get(i).copied().unwrap_or(1)
                            * p.pow(parts.get(i).copied().unwrap_or(0))
                    })
                    .collect();
                next.push(factors);
            }
        }
        groups = next;
    }
    groups
        .into_iter()
        .map(|moduli| AbelianGroup::new(&moduli).expect("invariant factors are >= 2"))
        .collect()
}

/// Partitions of `n` into non-increasing parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: &[u64]) -> AbelianGroup {
        AbelianGroup::new(m).unwrap()
    }

    #[test]
    fn make_group_examples() {
        let z4 = g(&[4]);
        assert_eq!(
            (z4.order(), z4.primary_moduli(), z4.involution_count()),
            (4, vec![4], 1)
        );
        assert_eq!(g(&[6]).primary_moduli(), vec![2, 3]);
        let z12_3 = g(&[12, 3]);
        assert_eq!(z12_3.primary_moduli(), vec![4, 3, 3]);
        assert_eq!(z12_3.order(), 36);
        assert!(!z12_3.in_class_g());
        assert!(matches!(
            AbelianGroup::new(&[4, 1]),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(AbelianGroup::trivial().order(), 1);
    }

    #[test]
    fn involutions_match_exhaustive_count() {
        for moduli in [&[12u64, 3][..], &[2, 2, 4], &[8], &[9, 3], &[2, 6, 10], &[]] {
            let group = g(moduli);
            let brute = group
                .enumerate_elements()
                .unwrap()
                .iter()
                .filter(|x| !x.is_zero() && x.scale(2).is_zero())
                .count() as u64;
            assert_eq!(group.involution_count(), brute, "{moduli:?}");
        }
    }

    #[test]
    fn class_g_membership() {
        assert!(g(&[9]).in_class_g());
        assert!(g(&[2, 2]).in_class_g());
        assert!(!g(&[8]).in_class_g());
        assert!(AbelianGroup::trivial().in_class_g());
    }

    #[test]
    fn crt_examples() {
        let iso = crt_isomorphism(&g(&[6]), &g(&[2, 3])).unwrap();
        assert_eq!(iso.apply_coords(&[5]), vec![1, 2]);
        let iso = crt_isomorphism(&g(&[12, 3]), &g(&[4, 3, 3])).unwrap();
        assert_eq!(iso.apply_coords(&[1, 0]), vec![1, 1, 0]);
        let id = crt_isomorphism(&g(&[4, 9]), &g(&[4, 9])).unwrap();
        for x in g(&[4, 9]).enumerate_elements().unwrap() {
            assert_eq!(id.apply(&x).unwrap(), x);
        }
        assert!(matches!(
            crt_isomorphism(&g(&[4]), &g(&[2, 2])),
            Err(Error::NoIsomorphism { .. })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let els: Vec<Vec<u64>> = g(&[2, 2])
            .enumerate_elements()
            .unwrap()
            .iter()
            .map(|x| x.coords().to_vec())
            .collect();
        assert_eq!(els, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let z3: Vec<u64> = g(&[3])
            .enumerate_elements()
            .unwrap()
            .iter()
            .map(|x| x.coords()[0])
            .collect();
        assert_eq!(z3, vec![0, 1, 2]);
        assert!(matches!(
            g(&[64, 64]).enumerate_elements_bounded(100),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn element_sum_matches_brute_force() {
        for n in 1..=40u64 {
            for group in abelian_groups_of_order(n) {
                let brute = group
                    .enumerate_elements()
                    .unwrap()
                    .iter()
                    .fold(group.zero(), |acc, x| &acc + x);
                assert_eq!(group.element_sum(), brute, "{group}");
            }
        }
    }

    #[test]
    fn mixing_presentations_is_refused() {
        let a = g(&[6]).element(&[1]).unwrap();
        let b = g(&[2, 3]).element(&[1, 1]).unwrap();
        assert!(matches!(
            a.try_add(&b),
            Err(Error::PresentationMismatch { .. })
        ));
    }

    #[test]
    fn groups_of_order_are_counted_by_partitions() {
        assert_eq!(abelian_groups_of_order(16).len(), 5);
        assert_eq!(abelian_groups_of_order(36).len(), 4);
        assert_eq!(abelian_groups_of_order(256).len(), 22);
        let reps: Vec<Vec<u64>> = abelian_groups_of_order(36)
            .iter()
            .map(|g| g.moduli().to_vec())
            .collect();
        assert!(reps.contains(&vec![36]));
        assert!(reps.contains(&vec![6, 6]));
        assert!(reps.contains(&vec![12, 3]));
        assert!(reps.contains(&vec![18, 2]));
    }

    #[test]
    fn parse_literals() {
        assert_eq!(AbelianGroup::parse("27,3").unwrap().moduli(), &[27, 3]);
        assert_eq!(AbelianGroup::parse(" 2, 2 ").unwrap().moduli(), &[2, 2]);
        assert_eq!(AbelianGroup::parse("").unwrap().order(), 1);
        assert!(AbelianGroup::parse("3,x").is_err());
    }
}
