//! Sets of lengths `L(B)`, factorization enumeration `Z(B)`, factorization
//! distance, catenary degree, and the atom-pair sweep.

use crate::atoms::AtomSet;
use crate::error::{invalid, Error, Result};
use crate::sequence::{divides_idx, Sequence};
use crate::Limits;
use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use hashbrown::HashMap;

/// A finite set of factorization lengths, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LengthSet {
    values: Vec<u64>,
}

impl LengthSet {
    pub fn from_values(mut values: Vec<u64>) -> LengthSet {
        values.sort_unstable();
        values.dedup();
        LengthSet { values }
    }

    /// The discrete interval `[a, b]`.
    pub fn interval(a: u64, b: u64) -> LengthSet {
        LengthSet { values: (a..=b).collect() }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn card(&self) -> usize {
        self.values.len()
    }

    pub fn minimum(&self) -> Option<u64> {
        self.values.first().copied()
    }

    pub fn maximum(&self) -> Option<u64> {
        self.values.last().copied()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    /// `k + L`.
    pub fn shifted(&self, k: u64) -> LengthSet {
        LengthSet { values: self.values.iter().map(|&v| v + k).collect() }
    }

    /// Sumset `L + L'`.
    pub fn sumset(&self, other: &LengthSet) -> LengthSet {
        let mut out = Vec::with_capacity(self.values.len() * other.values.len());
        for &a in &self.values {
            for &b in &other.values {
                out.push(a + b);
            }
        }
        LengthSet::from_values(out)
    }

    pub fn is_subset_of(&self, other: &LengthSet) -> bool {
        self.values.iter().all(|&v| other.contains(v))
    }

    /// The set of successive distances; empty for |L| <= 1.
    pub fn delta(&self) -> Vec<u64> {
        let mut gaps: Vec<u64> = self
            .values
            .windows(2)
            .map(|w| w[1] - w[0])
            .collect();
        gaps.sort_unstable();
        gaps.dedup();
        gaps
    }

    pub(crate) fn from_bits(bits: u128, offset: u64) -> LengthSet {
        let mut values = Vec::new();
        let mut b = bits;
        while b != 0 {
            values.push(b.trailing_zeros() as u64 + offset);
            b &= b - 1;
        }
        LengthSet { values }
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A factorization of a zero-sum sequence into atoms, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factorization {
    atoms: Vec<Sequence>,
    product: Sequence,
}

impl Factorization {
    /// Builds a factorization from a multiset of atoms, validating each.
    pub fn new(mut atoms: Vec<Sequence>) -> Result<Factorization> {
        if atoms.is_empty() {
            return Err(invalid("a factorization needs at least one atom"));
        }
        for a in &atoms {
            if !a.is_atom()? {
                return Err(invalid("factorization member is not an atom"));
            }
        }
        atoms.sort_unstable();
        let mut product = atoms[0].clone();
        for a in &atoms[1..] {
            product = product.mul(a)?;
        }
        Ok(Factorization { atoms, product })
    }

    pub fn atoms(&self) -> &[Sequence] {
        &self.atoms
    }

    /// `|z|`: the number of atoms counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.atoms.len() as u64
    }

    pub fn product(&self) -> &Sequence {
        &self.product
    }
}

/// `d(z, z')`: remove the greatest common sub-multiset of atoms and take the
/// larger remaining length. Errors if the products differ.
pub fn distance(z1: &Factorization, z2: &Factorization) -> Result<u64> {
    if z1.product != z2.product {
        return Err(Error::DifferentProducts);
    }
    let mut common = 0u64;
    let (mut i, mut j) = (0usize, 0usize);
    while i < z1.atoms.len() && j < z2.atoms.len() {
        match z1.atoms[i].cmp(&z2.atoms[j]) {
            core::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
        }
    }
    Ok((z1.length() - common).max(z2.length() - common))
}

/// Memoized set-of-lengths engine over a fixed atom source.
///
/// The recursion covers the minimal support element: every factorization of
/// `B` must use an atom containing `min supp(B)`, so
/// `L(B) = union over such atoms U of 1 + L(B U^{-1})`, with
/// `L(0^k A) = k + L(A)` handled up front. The memo is keyed by the
/// remaining zero-free sequence and is bounded by an explicit key cap.
pub struct LengthMemo<'a> {
    atoms: &'a AtomSet,
    by_element: HashMap<u64, Vec<u32>>,
    /// Support bitmasks per atom, for groups of order at most 64.
    masks: Option<Vec<u64>>,
    memo: HashMap<Box<[(u64, u64)]>, u128>,
    memo_limit: u64,
}

impl<'a> LengthMemo<'a> {
    pub fn new(atoms: &'a AtomSet, limits: &Limits) -> LengthMemo<'a> {
        let mut by_element: HashMap<u64, Vec<u32>> = HashMap::new();
        for (id, atom) in atoms.atoms().iter().enumerate() {
            for &(e, _) in atom.entries_idx() {
                by_element.entry(e).or_default().push(id as u32);
            }
        }
        let masks = (atoms.group().order() <= 64).then(|| {
            atoms
                .atoms()
                .iter()
                .map(|a| support_mask(a.entries_idx()))
                .collect()
        });
        LengthMemo {
            atoms,
            by_element,
            masks,
            memo: HashMap::new(),
            memo_limit: limits.memo_limit,
        }
    }

    pub fn atom_set(&self) -> &'a AtomSet {
        self.atoms
    }

    /// Exact `L(B)`. Requires `sigma(B) = 0` and `supp(B)` inside the atom
    /// source's subset (which guarantees the source is complete for `B`).
    pub fn length_set(&mut self, b: &Sequence) -> Result<LengthSet> {
        if b.group() != self.atoms.group() {
            return Err(invalid("sequence group differs from atom source group"));
        }
        if !b.is_zero_sum() {
            return Err(Error::NotZeroSum);
        }
        for &(e, _) in b.entries_idx() {
            if self.atoms.subset_idx().binary_search(&e).is_err() {
                return Err(invalid("sequence leaves the atom source subset"));
            }
        }
        let zeros = b.multiplicity_idx(0);
        let rest: Vec<(u64, u64)> = b
            .entries_idx()
            .iter()
            .copied()
            .filter(|&(e, _)| e != 0)
            .collect();
        let len: u64 = rest.iter().map(|&(_, m)| m).sum();
        if len > 127 {
            return Err(Error::GuardExceeded { guard: "length-set sequence length (127)" });
        }
        let bits = self.lengths_of(&rest)?;
        Ok(LengthSet::from_bits(bits, zeros))
    }

    fn lengths_of(&mut self, entries: &[(u64, u64)]) -> Result<u128> {
        lengths_rec(
            self.atoms,
            &self.by_element,
            self.masks.as_deref(),
            &mut self.memo,
            self.memo_limit,
            entries,
        )
    }

    /// Number of memo keys currently held.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Decides whether `B` factors into exactly `k` atoms, without
    /// computing the whole length set. Needs only a shared reference, so
    /// sweeps can fan it out across workers.
    pub fn has_length(&self, b: &Sequence, k: u64) -> Result<bool> {
        if b.group() != self.atoms.group() {
            return Err(invalid("sequence group differs from atom source group"));
        }
        if !b.is_zero_sum() {
            return Err(Error::NotZeroSum);
        }
        for &(e, _) in b.entries_idx() {
            if self.atoms.subset_idx().binary_search(&e).is_err() {
                return Err(invalid("sequence leaves the atom source subset"));
            }
        }
        let d = self.atoms.davenport().max(1);
        Ok(self.has_length_rec(b.entries_idx(), k, d))
    }

    fn has_length_rec(&self, entries: &[(u64, u64)], k: u64, d: u64) -> bool {
        let len: u64 = entries.iter().map(|&(_, m)| m).sum();
        if k == 0 || len == 0 {
            return k == 0 && len == 0;
        }
        // zeros each take one (0) atom; the rest need 2..=D elements apiece
        let zeros = entries.first().filter(|&&(e, _)| e == 0).map_or(0, |&(_, m)| m);
        if zeros > k {
            return false;
        }
        let nonzero = len - zeros;
        let slots = k - zeros;
        if nonzero < 2 * slots || nonzero > d * slots {
            return false;
        }
        let g = entries[0].0;
        let cmask = self.masks.as_ref().map(|_| support_mask(entries));
        if let Some(candidates) = self.by_element.get(&g) {
            for &id in candidates {
                if let (Some(masks), Some(cmask)) = (&self.masks, cmask) {
                    if masks[id as usize] & !cmask != 0 {
                        continue;
                    }
                }
                let atom = self.atoms.atoms()[id as usize].entries_idx();
                if divides_idx(atom, entries) {
                    let rest = subtract_entries(entries, atom);
                    if self.has_length_rec(&rest, k - 1, d) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Convenience wrapper: one-shot `L(B)`.
pub fn length_set(b: &Sequence, atoms: &AtomSet, limits: &Limits) -> Result<LengthSet> {
    LengthMemo::new(atoms, limits).length_set(b)
}

fn support_mask(entries: &[(u64, u64)]) -> u64 {
    entries.iter().fold(0u64, |m, &(e, _)| m | (1 << e))
}

fn lengths_rec(
    atoms: &AtomSet,
    by_element: &HashMap<u64, Vec<u32>>,
    masks: Option<&[u64]>,
    memo: &mut HashMap<Box<[(u64, u64)]>, u128>,
    memo_limit: u64,
    entries: &[(u64, u64)],
) -> Result<u128> {
    if entries.is_empty() {
        return Ok(1);
    }
    if let Some(&bits) = memo.get(entries) {
        return Ok(bits);
    }
    let g = entries[0].0;
    let cmask = masks.map(|_| support_mask(entries));
    let mut acc = 0u128;
    if let Some(candidates) = by_element.get(&g) {
        for &id in candidates {
            if let (Some(masks), Some(cmask)) = (masks, cmask) {
                if masks[id as usize] & !cmask != 0 {
                    continue;
                }
            }
            let atom = &atoms.atoms()[id as usize];
            if divides_idx(atom.entries_idx(), entries) {
                let rest = subtract_entries(entries, atom.entries_idx());
                acc |= lengths_rec(atoms, by_element, masks, memo, memo_limit, &rest)? << 1;
            }
        }
    }
    if memo.len() as u64 >= memo_limit {
        return Err(Error::MemoLimit { cap: memo_limit });
    }
    memo.insert(entries.into(), acc);
    Ok(acc)
}

/// Decides whether `B` has a factorization into exactly `k` atoms, without
/// computing the whole length set.
pub fn has_factorization_of_length(b: &Sequence, atoms: &AtomSet, k: u64, limits: &Limits) -> Result<bool> {
    LengthMemo::new(atoms, limits).has_length(b, k)
}

fn subtract_entries(big: &[(u64, u64)], small: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut out = Vec::with_capacity(big.len());
    let mut it = small.iter().peekable();
    for &(e, m) in big {
        let mut keep = m;
        if let Some(&&(se, sm)) = it.peek() {
            if se == e {
                keep = m - sm;
                it.next();
            }
        }
        if keep > 0 {
            out.push((e, keep));
        }
    }
    out
}

/// All factorizations of `B`, each exactly once (atoms chosen non-decreasing
/// in the canonical atom order), as sorted atom-id multisets.
pub(crate) fn factorization_ids(
    b: &Sequence,
    atoms: &AtomSet,
    limits: &Limits,
) -> Result<Vec<Vec<u32>>> {
    if b.group() != atoms.group() {
        return Err(invalid("sequence group differs from atom source group"));
    }
    if !b.is_zero_sum() {
        return Err(Error::NotZeroSum);
    }
    for &(e, _) in b.entries_idx() {
        if atoms.subset_idx().binary_search(&e).is_err() {
            return Err(invalid("sequence leaves the atom source subset"));
        }
    }
    let dividing: Vec<u32> = (0..atoms.atoms().len() as u32)
        .filter(|&id| divides_idx(atoms.atoms()[id as usize].entries_idx(), b.entries_idx()))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec_factorizations(
        b.entries_idx().to_vec(),
        &dividing,
        0,
        atoms,
        limits.max_factorizations,
        &mut cur,
        &mut out,
    )?;
    Ok(out)
}

fn rec_factorizations(
    rem: Vec<(u64, u64)>,
    dividing: &[u32],
    start: usize,
    atoms: &AtomSet,
    cap: u64,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) -> Result<()> {
    if rem.is_empty() {
        if out.len() as u64 >= cap {
            return Err(Error::TooManyFactorizations { cap });
        }
        out.push(cur.clone());
        return Ok(());
    }
    for (pos, &id) in dividing.iter().enumerate().skip(start) {
        let atom = &atoms.atoms()[id as usize];
        if divides_idx(atom.entries_idx(), &rem) {
            let next = subtract_entries(&rem, atom.entries_idx());
            cur.push(id);
            rec_factorizations(next, dividing, pos, atoms, cap, cur, out)?;
            cur.pop();
        }
    }
    Ok(())
}

/// All factorizations of `B`, each exactly once.
pub fn enumerate_factorizations(
    b: &Sequence,
    atoms: &AtomSet,
    limits: &Limits,
) -> Result<Vec<Factorization>> {
    let ids = factorization_ids(b, atoms, limits)?;
    Ok(ids
        .into_iter()
        .map(|z| Factorization {
            atoms: z.iter().map(|&id| atoms.atoms()[id as usize].clone()).collect(),
            product: b.clone(),
        })
        .collect())
}

fn id_distance(z1: &[u32], z2: &[u32]) -> u64 {
    let mut common = 0u64;
    let (mut i, mut j) = (0usize, 0usize);
    while i < z1.len() && j < z2.len() {
        match z1[i].cmp(&z2[j]) {
            core::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
        }
    }
    (z1.len() as u64 - common).max(z2.len() as u64 - common)
}

/// `c(B)`: 0 when `B` has at most one factorization, else the bottleneck of
/// the factorization graph (the smallest `N` whose distance-at-most-`N`
/// subgraph on `Z(B)` is connected), computed as the maximum edge of a
/// minimum spanning tree under the distance metric.
pub fn catenary_of_element(b: &Sequence, atoms: &AtomSet, limits: &Limits) -> Result<u64> {
    let z = factorization_ids(b, atoms, limits)?;
    let n = z.len();
    if n <= 1 {
        return Ok(0);
    }
    let mut best_edge = alloc::vec![u64::MAX; n];
    let mut used = alloc::vec![false; n];
    best_edge[0] = 0;
    let mut bottleneck = 0u64;
    for _ in 0..n {
        let mut u = usize::MAX;
        for v in 0..n {
            if !used[v] && (u == usize::MAX || best_edge[v] < best_edge[u]) {
                u = v;
            }
        }
        used[u] = true;
        bottleneck = bottleneck.max(best_edge[u]);
        for v in 0..n {
            if !used[v] {
                let d = id_distance(&z[u], &z[v]);
                if d < best_edge[v] {
                    best_edge[v] = d;
                }
            }
        }
    }
    Ok(bottleneck)
}

/// Exact `L(U V)` for every unordered pair of atoms (including `U = V`)
/// whose lengths are both at least `min_atom_len`. Pairs are returned as
/// indices into `atoms.atoms()`.
pub fn pair_length_sets(
    atoms: &AtomSet,
    min_atom_len: u64,
    limits: &Limits,
) -> Result<Vec<((u32, u32), LengthSet)>> {
    let ids: Vec<u32> = (0..atoms.atoms().len() as u32)
        .filter(|&id| atoms.atoms()[id as usize].len() >= min_atom_len)
        .collect();
    if (ids.len() as u64) > limits.max_sweep_atoms {
        return Err(Error::GuardExceeded { guard: "max_sweep_atoms" });
    }
    let mut memo = LengthMemo::new(atoms, limits);
    let mut out = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i..] {
            let product = atoms.atoms()[a as usize].mul(&atoms.atoms()[b as usize])?;
            out.push(((a, b), memo.length_set(&product)?));
        }
    }
    Ok(out)
}

/// `L(U (-U))` for every atom `U` in the set, optionally restricted to a
/// given atom length. Requires a negation-closed subset (in particular the
/// whole group).
pub fn mirror_length_sets(
    atoms: &AtomSet,
    atom_len: Option<u64>,
    limits: &Limits,
) -> Result<Vec<(u32, LengthSet)>> {
    let mut memo = LengthMemo::new(atoms, limits);
    let mut out = Vec::new();
    for (id, atom) in atoms.atoms().iter().enumerate() {
        if let Some(len) = atom_len {
            if atom.len() != len {
                continue;
            }
        }
        let product = atom.mul(&atom.negate())?;
        out.push((id as u32, memo.length_set(&product)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::enumerate_atoms;
    use crate::group::FiniteAbelianGroup;
    use alloc::string::String;
    use alloc::vec;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeSet;

    fn g(factors: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::make_group(factors).unwrap()
    }

    fn whole(group: &FiniteAbelianGroup) -> crate::AtomSet {
        enumerate_atoms(group, &group.elements().collect::<Vec<_>>(), &Limits::default()).unwrap()
    }

    fn seq(group: &FiniteAbelianGroup, literal: &str) -> Sequence {
        Sequence::parse(group, literal).unwrap()
    }

    fn lset(values: &[u64]) -> LengthSet {
        LengthSet::from_values(values.to_vec())
    }

    #[test]
    fn empty_sequence_has_length_zero() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let l = length_set(&Sequence::empty(&c6), &atoms, &Limits::default()).unwrap();
        assert_eq!(l, lset(&[0]));
    }

    #[test]
    fn non_zero_sum_is_rejected() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        assert_eq!(
            length_set(&seq(&c6, "(1)"), &atoms, &Limits::default()),
            Err(Error::NotZeroSum)
        );
    }

    #[test]
    fn lemma_31_pairs_over_c6() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits::default();
        let mut memo = LengthMemo::new(&atoms, &limits);
        let w = seq(&c6, "(1)^6");
        let v = seq(&c6, "(1)^4 (2)");
        let check = |memo: &mut LengthMemo, a: &Sequence, b: &Sequence, want: &[u64]| {
            let l = memo.length_set(&a.mul(b).unwrap()).unwrap();
            assert_eq!(l, lset(want));
        };
        check(&mut memo, &w, &w.negate(), &[2, 6]);
        check(&mut memo, &v, &v.negate(), &[2, 4, 5]);
        check(&mut memo, &w.negate(), &v, &[2, 5]);
        // zeros shift lengths
        let with_zeros = seq(&c6, "(0)^3 (1)^6 (5)^6");
        check(&mut memo, &with_zeros, &Sequence::empty(&c6), &[5, 9]);
    }

    #[test]
    fn lemma_32_examples_over_c2_5() {
        let c25 = g(&[2, 2, 2, 2, 2]);
        let atoms = whole(&c25);
        let limits = Limits::default();
        let mut memo = LengthMemo::new(&atoms, &limits);
        let u13 = seq(&c25, "(1,1,1,0,0) (1,0,0,0,0) (0,1,0,0,0) (0,0,1,0,0)");
        assert_eq!(memo.length_set(&u13.mul(&u13).unwrap()).unwrap(), lset(&[2, 4]));
        let u = seq(&c25, "(1,1,1,1,1) (1,0,0,0,0) (0,1,0,0,0) (0,0,1,0,0) (0,0,0,1,0) (0,0,0,0,1)");
        let v1 = seq(&c25, "(1,0,0,0,0) (0,1,0,0,0) (0,0,1,0,0) (0,0,0,1,0) (0,0,1,1,1) (1,1,0,0,1)");
        let v2 = seq(&c25, "(1,0,0,0,0) (1,1,0,0,0) (0,0,1,0,0) (0,0,0,1,0) (0,0,0,0,1) (0,1,1,1,1)");
        assert_eq!(memo.length_set(&u.mul(&v1).unwrap()).unwrap(), lset(&[2, 4, 5]));
        assert_eq!(memo.length_set(&u.mul(&v2).unwrap()).unwrap(), lset(&[2, 3, 5]));
        let b = u.mul(&u).unwrap().mul(&v1).unwrap().mul(&v2).unwrap();
        assert_eq!(memo.length_set(&b).unwrap(), LengthSet::interval(4, 11));
    }

    #[test]
    fn factorization_enumeration_examples() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits::default();
        // an atom factors uniquely
        let w = seq(&c6, "(1)^6");
        let zs = enumerate_factorizations(&w, &atoms, &limits).unwrap();
        assert_eq!(zs.len(), 1);
        assert_eq!(zs[0].length(), 1);
        // W(-W) has exactly the two factorizations of lengths 2 and 6
        let b = seq(&c6, "(1)^6 (5)^6");
        let lens: BTreeSet<u64> = enumerate_factorizations(&b, &atoms, &limits)
            .unwrap()
            .iter()
            .map(Factorization::length)
            .collect();
        assert_eq!(lens, BTreeSet::from([2, 6]));
        let c3 = g(&[3]);
        let atoms3 = whole(&c3);
        let b3 = seq(&c3, "(1)^3 (2)^3");
        let lens3: BTreeSet<u64> = enumerate_factorizations(&b3, &atoms3, &limits)
            .unwrap()
            .iter()
            .map(Factorization::length)
            .collect();
        assert_eq!(lens3, BTreeSet::from([2, 3]));
    }

    #[test]
    fn factorization_cap() {
        let c2 = g(&[2]);
        let atoms = whole(&c2);
        let limits = Limits { max_factorizations: 0, ..Limits::default() };
        let b = seq(&c2, "(1)^2");
        assert!(matches!(
            enumerate_factorizations(&b, &atoms, &limits),
            Err(Error::TooManyFactorizations { .. })
        ));
    }

    #[test]
    fn distance_examples() {
        let c6 = g(&[6]);
        let w = seq(&c6, "(1)^6");
        let nw = w.negate();
        let pair = seq(&c6, "(1) (5)");
        let z1 = Factorization::new(vec![w, nw]).unwrap();
        let z2 = Factorization::new(vec![pair.clone(); 6]).unwrap();
        assert_eq!(distance(&z1, &z1).unwrap(), 0);
        assert_eq!(distance(&z1, &z2).unwrap(), 6);
        let other = Factorization::new(vec![pair]).unwrap();
        assert_eq!(distance(&z1, &other), Err(Error::DifferentProducts));
    }

    #[test]
    fn distinct_factorizations_are_at_distance_2_or_more() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits::default();
        // all zero-sum B with |B| <= 8, every pair of distinct factorizations
        let bs = all_zero_sum(&c6, 8);
        for b in bs {
            let zs = factorization_ids(&b, &atoms, &limits).unwrap();
            for i in 0..zs.len() {
                for j in (i + 1)..zs.len() {
                    assert!(id_distance(&zs[i], &zs[j]) >= 2);
                }
            }
        }
    }

    #[test]
    fn catenary_examples() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits::default();
        assert_eq!(
            catenary_of_element(&seq(&c6, "(1)^6"), &atoms, &limits).unwrap(),
            0
        );
        assert_eq!(
            catenary_of_element(&seq(&c6, "(1)^6 (5)^6"), &atoms, &limits).unwrap(),
            6
        );
        // c over C3 with |B| <= 12 peaks at 3
        let c3 = g(&[3]);
        let atoms3 = whole(&c3);
        let mut cmax = 0;
        for b in all_zero_sum(&c3, 12) {
            cmax = cmax.max(catenary_of_element(&b, &atoms3, &limits).unwrap());
        }
        assert_eq!(cmax, 3);
    }

    #[test]
    fn pair_sweep_over_c6_long_atoms() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let pairs = pair_length_sets(&atoms, 5, &Limits::default()).unwrap();
        let sets: BTreeSet<LengthSet> = pairs.into_iter().map(|(_, l)| l).collect();
        let nontrivial: BTreeSet<LengthSet> =
            sets.iter().filter(|l| l.card() > 1).cloned().collect();
        assert_eq!(
            nontrivial,
            BTreeSet::from([lset(&[2, 6]), lset(&[2, 4, 5]), lset(&[2, 5])])
        );
        let with25: Vec<&LengthSet> = nontrivial
            .iter()
            .filter(|l| l.contains(2) && l.contains(5))
            .collect();
        assert_eq!(with25.len(), 2);
    }

    #[test]
    fn one_in_lengths_iff_atom() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits::default();
        let mut memo = LengthMemo::new(&atoms, &limits);
        for b in all_zero_sum(&c6, 7) {
            let l = memo.length_set(&b).unwrap();
            assert_eq!(l.contains(1), b.is_atom().unwrap_or(false), "B = {b}");
            assert_eq!(l.contains(0), b.is_empty());
            assert!(!l.is_empty());
        }
    }

    fn all_zero_sum(group: &FiniteAbelianGroup, max_len: u64) -> Vec<Sequence> {
        let mut out = Vec::new();
        let mut stack: Vec<(u64, u64)> = Vec::new();
        fn rec(
            group: &FiniteAbelianGroup,
            from: u64,
            left: u64,
            stack: &mut Vec<(u64, u64)>,
            out: &mut Vec<Sequence>,
        ) {
            let s = Sequence::from_indexed(group, stack.clone());
            if s.is_zero_sum() {
                out.push(s);
            }
            if left == 0 {
                return;
            }
            for e in from..group.order() {
                for m in 1..=left {
                    stack.push((e, m));
                    rec(group, e + 1, left - m, stack, out);
                    stack.pop();
                }
            }
        }
        rec(group, 0, max_len, &mut stack, &mut out);
        out
    }

    #[test]
    fn oracle_memo_matches_enumeration() {
        let limits = Limits::default();
        for factors in [vec![6], vec![2, 4]] {
            let grp = g(&factors);
            let atoms = whole(&grp);
            let mut memo = LengthMemo::new(&atoms, &limits);
            for b in all_zero_sum(&grp, 9) {
                let via_memo = memo.length_set(&b).unwrap();
                let via_enum: Vec<u64> = {
                    let mut lens: Vec<u64> = factorization_ids(&b, &atoms, &limits)
                        .unwrap()
                        .iter()
                        .map(|z| z.len() as u64)
                        .collect();
                    if b.is_empty() {
                        lens.push(0);
                    }
                    lens
                };
                assert_eq!(via_memo, LengthSet::from_values(via_enum), "B = {b}");
            }
        }
    }

    #[test]
    fn g_norm_sandwich_on_random_sequences() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits::default();
        let mut memo = LengthMemo::new(&atoms, &limits);
        let gen = c6.element(&[1]).unwrap();
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut tested = 0;
        while tested < 200 {
            let len = rng.random_range(1..=12u32);
            let picks: Vec<(u64, u64)> =
                (0..len).map(|_| (rng.random_range(1..6u64), 1)).collect();
            let b = Sequence::from_indexed(&c6, picks);
            if !b.is_zero_sum() {
                continue;
            }
            tested += 1;
            let l = memo.length_set(&b).unwrap();
            let norm = b.g_norm(&gen).unwrap();
            let (num, den) = (*norm.numer() as u64, *norm.denom() as u64);
            assert_eq!(den, 1, "zero-sum norms are integers");
            assert!(l.maximum().unwrap() <= num);
            assert!(l.minimum().unwrap() * 5 >= num);
        }
    }

    #[test]
    fn sumset_containment_on_random_pairs() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits::default();
        let mut memo = LengthMemo::new(&atoms, &limits);
        let mut rng = StdRng::seed_from_u64(0xabcd);
        let mut tested = 0;
        while tested < 100 {
            let mk = |rng: &mut StdRng| {
                let len = rng.random_range(1..=8u32);
                let picks: Vec<(u64, u64)> =
                    (0..len).map(|_| (rng.random_range(0..6u64), 1)).collect();
                Sequence::from_indexed(&c6, picks)
            };
            let (a, b) = (mk(&mut rng), mk(&mut rng));
            if !a.is_zero_sum() || !b.is_zero_sum() {
                continue;
            }
            tested += 1;
            let la = memo.length_set(&a).unwrap();
            let lb = memo.length_set(&b).unwrap();
            let lab = memo.length_set(&a.mul(&b).unwrap()).unwrap();
            assert!(la.sumset(&lb).is_subset_of(&lab));
        }
    }

    #[test]
    fn memo_limit_is_enforced() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let limits = Limits { memo_limit: 1, ..Limits::default() };
        let mut memo = LengthMemo::new(&atoms, &limits);
        let b = seq(&c6, "(1)^6 (5)^6 (2)^3");
        assert!(matches!(
            memo.length_set(&b),
            Err(Error::MemoLimit { .. })
        ));
    }

    #[test]
    fn length_set_display() {
        assert_eq!(std::format!("{}", lset(&[2, 4, 5])), String::from("{2,4,5}"));
    }
}
