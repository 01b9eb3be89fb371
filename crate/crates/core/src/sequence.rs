//! Sequences over a subset of a finite abelian group: the elements of the
//! free abelian monoid `F(G_0)`, stored as multiplicity-compressed multisets
//! in the canonical element order.

use crate::error::{invalid, Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use hashbrown::HashSet;
use num_rational::Ratio;

/// Hard cap on `|S|` for the subset-sum dynamic programs
/// (`is_zero_sum_free`, `proper_subsequence_sums`, atom tests).
pub const SUBSET_SUM_CAP: u64 = 64;

/// A finite multiset over a group, with entries sorted in the canonical
/// element order. Equality is structural; the canonical order on sequences
/// (used for atom lists, factorization multisets, and memo keys) is the
/// lexicographic order on the entry lists.
#[derive(Clone, Debug)]
pub struct Sequence {
    group: FiniteAbelianGroup,
    /// (element index, multiplicity), strictly increasing indices, mult >= 1.
    entries: Vec<(u64, u64)>,
    len: u64,
    sum: u64,
}

impl PartialEq for Sequence {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.entries == other.entries
    }
}
impl Eq for Sequence {}

impl PartialOrd for Sequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Sequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .invariant_factors()
            .cmp(other.group.invariant_factors())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}
impl Hash for Sequence {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.invariant_factors().hash(state);
        self.entries.hash(state);
    }
}

impl Sequence {
    /// The empty sequence, the identity of `F(G_0)`.
    pub fn empty(group: &FiniteAbelianGroup) -> Sequence {
        Sequence {
            group: group.clone(),
            entries: Vec::new(),
            len: 0,
            sum: 0,
        }
    }

    /// Builds a sequence from (element, multiplicity) pairs. Zero
    /// multiplicities are dropped and duplicate elements merged.
    pub fn new(group: &FiniteAbelianGroup, pairs: &[(GroupElement, u64)]) -> Result<Sequence> {
        let mut indexed = Vec::with_capacity(pairs.len());
        for (el, mult) in pairs {
            indexed.push((group.index_of(el)?, *mult));
        }
        Ok(Self::from_indexed(group, indexed))
    }

    /// Builds a sequence from (element index, multiplicity) pairs in the
    /// canonical index order of `group`.
    pub fn from_indexed(group: &FiniteAbelianGroup, mut pairs: Vec<(u64, u64)>) -> Sequence {
        pairs.retain(|&(_, m)| m > 0);
        pairs.sort_unstable();
        let mut entries: Vec<(u64, u64)> = Vec::with_capacity(pairs.len());
        for (e, m) in pairs {
            debug_assert!(e < group.order());
            match entries.last_mut() {
                Some(last) if last.0 == e => last.1 += m,
                _ => entries.push((e, m)),
            }
        }
        let mut len = 0u64;
        let mut sum = 0u64;
        for &(e, m) in &entries {
            len += m;
            for _ in 0..(m % group_sum_period(group, e)) {
                sum = group.add_idx(sum, e);
            }
        }
        Sequence { group: group.clone(), entries, len, sum }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// `|S|`: the number of elements counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sigma(S)`, the sum of all elements.
    pub fn sum(&self) -> GroupElement {
        self.group.element_at(self.sum)
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sum == 0
    }

    /// The distinct elements, in canonical order.
    pub fn support(&self) -> Vec<GroupElement> {
        self.entries
            .iter()
            .map(|&(e, _)| self.group.element_at(e))
            .collect()
    }

    /// Multiplicity `v_g(S)`.
    pub fn multiplicity(&self, g: &GroupElement) -> Result<u64> {
        let idx = self.group.index_of(g)?;
        Ok(self.multiplicity_idx(idx))
    }

    /// Iterates over (element, multiplicity) entries in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (GroupElement, u64)> + '_ {
        self.entries
            .iter()
            .map(|&(e, m)| (self.group.element_at(e), m))
    }

    pub(crate) fn entries_idx(&self) -> &[(u64, u64)] {
        &self.entries
    }


    pub(crate) fn multiplicity_idx(&self, idx: u64) -> u64 {
        match self.entries.binary_search_by_key(&idx, |&(e, _)| e) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => 0,
        }
    }

    /// Multiset union `S * T`.
    pub fn mul(&self, other: &Sequence) -> Result<Sequence> {
        self.check_same_group(other)?;
        let mut merged = self.entries.clone();
        merged.extend_from_slice(&other.entries);
        Ok(Sequence::from_indexed(&self.group, merged))
    }

    /// Multiset difference `T^{-1} S`; errors unless `other` divides `self`.
    pub fn divide(&self, other: &Sequence) -> Result<Sequence> {
        self.check_same_group(other)?;
        let mut out = Vec::with_capacity(self.entries.len());
        let mut it = other.entries.iter().peekable();
        for &(e, m) in &self.entries {
            let mut keep = m;
            if let Some(&&(oe, om)) = it.peek() {
                if oe == e {
                    if om > m {
                        return Err(Error::NotASubsequence);
                    }
                    keep = m - om;
                    it.next();
                }
            }
            if keep > 0 {
                out.push((e, keep));
            }
        }
        if it.next().is_some() {
            return Err(Error::NotASubsequence);
        }
        Ok(Sequence::from_indexed(&self.group, out))
    }

    /// True if `other` is a subsequence of `self`.
    pub fn divisible_by(&self, other: &Sequence) -> bool {
        if self.group != other.group || other.len > self.len {
            return false;
        }
        divides_idx(&other.entries, &self.entries)
    }

    /// `-S`: element-wise negation, re-canonicalized.
    pub fn negate(&self) -> Sequence {
        let pairs = self
            .entries
            .iter()
            .map(|&(e, m)| (self.group.neg_idx(e), m))
            .collect();
        Sequence::from_indexed(&self.group, pairs)
    }

    /// True iff no nonempty subsequence sums to zero.
    pub fn is_zero_sum_free(&self) -> Result<bool> {
        let (all, _) = self.subsequence_sum_sets()?;
        Ok(!all.contains(0))
    }

    /// The set of sums of nonempty proper subsequences.
    pub fn proper_subsequence_sums(&self) -> Result<Vec<GroupElement>> {
        let (_, proper) = self.subsequence_sum_sets()?;
        let mut idxs = proper.into_sorted_indices();
        idxs.sort_unstable();
        Ok(idxs.into_iter().map(|i| self.group.element_at(i)).collect())
    }

    /// True iff `S` is an atom: nonempty, zero-sum, and no proper nonempty
    /// subsequence sums to zero. The empty sequence is rejected.
    pub fn is_atom(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(invalid("the empty sequence is not a candidate atom"));
        }
        if self.sum != 0 {
            return Ok(false);
        }
        let (_, proper) = self.subsequence_sum_sets()?;
        Ok(!proper.contains(0))
    }

    /// Sums of (all, proper) nonempty subsequences, as index sets.
    pub(crate) fn subsequence_sum_sets(&self) -> Result<(SumSet, SumSet)> {
        if self.len > SUBSET_SUM_CAP {
            return Err(Error::GuardExceeded { guard: "subset-sum sequence length (64)" });
        }
        let mut all = SumSet::new(&self.group);
        let mut proper = SumSet::new(&self.group);
        let mut prefix_nonempty = false;
        for &(e, m) in &self.entries {
            for _ in 0..m {
                // proper subsequences of P*e: any nonempty sub of P (incl. P
                // itself), a proper sub of P extended by e, or e alone when
                // P is nonempty
                let mut next_proper = all.clone();
                next_proper.union_translated(&proper, e, &self.group);
                if prefix_nonempty {
                    next_proper.insert(e);
                }
                all.union_translated(&all.clone(), e, &self.group);
                all.insert(e);
                proper = next_proper;
                prefix_nonempty = true;
            }
        }
        Ok((all, proper))
    }

    /// `||S||_g`: writes every element as `k*g` with `k in [1, ord(g)]`
    /// (zero is written `ord(g) * g`) and returns the coefficient sum over
    /// `ord(g)`.
    pub fn g_norm(&self, g: &GroupElement) -> Result<Ratio<i64>> {
        let n = self.group.element_order(g)?;
        if n < 2 {
            return Err(invalid("g-norm requires ord(g) >= 2"));
        }
        let gi = self.group.index_of(g)?;
        // coefficient lookup within <g>
        let mut coeff_of = hashbrown::HashMap::new();
        let mut acc = 0u64;
        for k in 1..=n {
            acc = self.group.add_idx(acc, gi);
            coeff_of.entry(acc).or_insert(k);
        }
        let mut total: u64 = 0;
        for &(e, m) in &self.entries {
            let k = coeff_of.get(&e).ok_or(Error::NotInCyclicSpan)?;
            total += k * m;
        }
        Ok(Ratio::new(total as i64, n as i64))
    }

    /// Cross number `k(S) = sum multiplicity / ord(element)`.
    pub fn cross_number(&self) -> Result<Ratio<i64>> {
        if self.multiplicity_idx(0) > 0 {
            return Err(Error::ZeroElementInCrossNumber);
        }
        let mut total = Ratio::new(0i64, 1i64);
        for &(e, m) in &self.entries {
            total += Ratio::new(m as i64, self.group.order_of_idx(e) as i64);
        }
        Ok(total)
    }

    /// Parses the sequence literal grammar: whitespace-separated terms
    /// `(c1,...,cr)^m` with `^1` omissible; the empty string is the empty
    /// sequence.
    pub fn parse(group: &FiniteAbelianGroup, literal: &str) -> Result<Sequence> {
        let mut pairs: Vec<(u64, u64)> = Vec::new();
        for term in literal.split_whitespace() {
            let (coords_part, mult) = match term.split_once(")^") {
                Some((c, m)) => {
                    let mult: u64 = m
                        .parse()
                        .map_err(|_| invalid(format!("bad multiplicity in term {term:?}")))?;
                    (format!("{c})"), mult)
                }
                None => (String::from(term), 1),
            };
            let inner = coords_part
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| invalid(format!("bad term {term:?}")))?;
            let coords: Vec<i64> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<i64>()
                            .map_err(|_| invalid(format!("bad coordinate {c:?} in {term:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            let el = group.element_signed(&coords)?;
            pairs.push((group.index_of(&el)?, mult));
        }
        Ok(Sequence::from_indexed(group, pairs))
    }

    fn check_same_group(&self, other: &Sequence) -> Result<()> {
        if self.group != other.group {
            return Err(invalid("sequences over different groups"));
        }
        Ok(())
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(e, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.group.element_at(e))?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn divides_idx(small: &[(u64, u64)], big: &[(u64, u64)]) -> bool {
    let mut it = big.iter();
    'outer: for &(e, m) in small {
        for &(be, bm) in it.by_ref() {
            if be == e {
                if bm < m {
                    return false;
                }
                continue 'outer;
            }
            if be > e {
                return false;
            }
        }
        return false;
    }
    true
}

fn group_sum_period(group: &FiniteAbelianGroup, e: u64) -> u64 {
    // adding e ord(e) times is a no-op; keeps from_indexed linear in entry
    // count even for large multiplicities
    group.order_of_idx(e)
}

/// A set of group-element indices, as a bitset for groups of order <= 128
/// and a hash set beyond.
#[derive(Clone, Debug)]
pub(crate) enum SumSet {
    Bits(u128),
    Wide(HashSet<u64>),
}

impl SumSet {
    pub(crate) fn new(group: &FiniteAbelianGroup) -> SumSet {
        if group.order() <= 128 {
            SumSet::Bits(0)
        } else {
            SumSet::Wide(HashSet::new())
        }
    }

    pub(crate) fn insert(&mut self, idx: u64) {
        match self {
            SumSet::Bits(b) => *b |= 1u128 << idx,
            SumSet::Wide(s) => {
                s.insert(idx);
            }
        }
    }

    pub(crate) fn contains(&self, idx: u64) -> bool {
        match self {
            SumSet::Bits(b) => b >> idx & 1 == 1,
            SumSet::Wide(s) => s.contains(&idx),
        }
    }

    /// `self |= { x + e : x in other }`.
    pub(crate) fn union_translated(&mut self, other: &SumSet, e: u64, group: &FiniteAbelianGroup) {
        match (self, other) {
            (SumSet::Bits(b), SumSet::Bits(ob)) => {
                if group.is_elementary_2() {
                    // index addition is XOR; translate with a butterfly
                    *b |= xor_translate(*ob, e);
                    return;
                }
                let mut rem = *ob;
                while rem != 0 {
                    let i = rem.trailing_zeros() as u64;
                    rem &= rem - 1;
                    *b |= 1u128 << group.add_idx(i, e);
                }
            }
            (SumSet::Wide(s), SumSet::Wide(os)) => {
                for &x in os.iter() {
                    s.insert(group.add_idx(x, e));
                }
            }
            _ => unreachable!("sum sets over the same group share a representation"),
        }
    }

    pub(crate) fn into_sorted_indices(self) -> Vec<u64> {
        match self {
            SumSet::Bits(mut b) => {
                let mut out = Vec::new();
                while b != 0 {
                    out.push(b.trailing_zeros() as u64);
                    b &= b - 1;
                }
                out
            }
            SumSet::Wide(s) => {
                let mut v: Vec<u64> = s.into_iter().collect();
                v.sort_unstable();
                v
            }
        }
    }
}

/// Permutes a bitset over indices `0..128` by XOR with `e`.
fn xor_translate(bits: u128, e: u64) -> u128 {
    const fn mask(k: u32) -> u128 {
        // bits whose index has bit k clear
        let mut m = 0u128;
        let mut i = 0u32;
        while i < 128 {
            if (i >> k) & 1 == 0 {
                m |= 1u128 << i;
            }
            i += 1;
        }
        m
    }
    const MASKS: [u128; 7] = [mask(0), mask(1), mask(2), mask(3), mask(4), mask(5), mask(6)];
    let mut b = bits;
    let mut rem = e;
    while rem != 0 {
        let k = rem.trailing_zeros();
        rem &= rem - 1;
        let s = 1u32 << k;
        let m = MASKS[k as usize];
        b = ((b & m) << s) | ((b >> s) & m);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn c6() -> FiniteAbelianGroup {
        FiniteAbelianGroup::make_group(&[6]).unwrap()
    }

    fn seq(group: &FiniteAbelianGroup, literal: &str) -> Sequence {
        Sequence::parse(group, literal).unwrap()
    }

    #[test]
    fn construction_merges_and_drops_zeros() {
        let g = c6();
        let s = seq(&g, "(1)^2 (1)^3");
        assert_eq!(s.len(), 5);
        assert_eq!(s.entries().count(), 1);
        let t = Sequence::new(&g, &[(g.element(&[2]).unwrap(), 0)]).unwrap();
        assert!(t.is_empty());
        let full = seq(&g, "(1)^6");
        assert_eq!(full.len(), 6);
        assert!(full.is_zero_sum());
    }

    #[test]
    fn empty_is_identity() {
        let g = FiniteAbelianGroup::make_group(&[2, 4]).unwrap();
        let e = Sequence::empty(&g);
        assert_eq!(e.len(), 0);
        assert!(e.is_zero_sum());
        let s = seq(&g, "(1,3)^2 (0,2)");
        assert_eq!(s.mul(&e).unwrap(), s);
    }

    #[test]
    fn mul_divide_cancel() {
        let g = c6();
        let s = seq(&g, "(1)^4 (2)");
        let t = seq(&g, "(1)^2 (3)");
        assert_eq!(s.mul(&t).unwrap().divide(&t).unwrap(), s);
        assert_eq!(seq(&g, "(1)^6").divide(&seq(&g, "(1)^2")).unwrap(), seq(&g, "(1)^4"));
        assert_eq!(s.mul(&t).unwrap().sum(), g.add(&s.sum(), &t.sum()).unwrap());
    }

    #[test]
    fn divide_rejects_non_subsequence() {
        let g = c6();
        let s = seq(&g, "(1)^2");
        let t = seq(&g, "(1)^3");
        assert_eq!(s.divide(&t), Err(Error::NotASubsequence));
        let u = seq(&g, "(2)");
        assert_eq!(s.divide(&u), Err(Error::NotASubsequence));
    }

    #[test]
    fn negate_examples() {
        let g = c6();
        assert_eq!(seq(&g, "(1)^4 (2)").negate(), seq(&g, "(5)^4 (4)"));
        let e2 = FiniteAbelianGroup::make_group(&[2, 2]).unwrap();
        let s = seq(&e2, "(1,0) (0,1) (1,1)");
        assert_eq!(s.negate(), s);
        let empty = Sequence::empty(&g);
        assert_eq!(empty.negate(), empty);
    }

    #[test]
    fn zero_sum_free_examples() {
        let g = c6();
        assert!(seq(&g, "(1)^5").is_zero_sum_free().unwrap());
        assert!(!seq(&g, "(1)^6").is_zero_sum_free().unwrap());
        assert!(!seq(&g, "(0) (1)^2").is_zero_sum_free().unwrap());
    }

    #[test]
    fn zero_sum_free_cap() {
        let g = c6();
        let s = seq(&g, "(1)^65");
        assert!(matches!(s.is_zero_sum_free(), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn proper_subsequence_sums_examples() {
        let g = c6();
        let sums = |s: &Sequence| -> Vec<Vec<u64>> {
            s.proper_subsequence_sums()
                .unwrap()
                .iter()
                .map(|e| e.coords().to_vec())
                .collect()
        };
        assert_eq!(sums(&seq(&g, "(1)^2")), [[1]]);
        assert!(Sequence::empty(&g).proper_subsequence_sums().unwrap().is_empty());
        let e2 = FiniteAbelianGroup::make_group(&[2, 2]).unwrap();
        let s = seq(&e2, "(1,0) (0,1)");
        assert_eq!(sums(&s), [vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn g_norm_examples() {
        let g = c6();
        let gen = g.element(&[1]).unwrap();
        assert_eq!(seq(&g, "(1)^6").g_norm(&gen).unwrap(), Ratio::new(1, 1));
        assert_eq!(seq(&g, "(1)^4 (2)").g_norm(&gen).unwrap(), Ratio::new(1, 1));
        assert_eq!(seq(&g, "(5)^6").g_norm(&gen).unwrap(), Ratio::new(5, 1));
        // zero element counts as ord(g) * g
        assert_eq!(seq(&g, "(0)").g_norm(&gen).unwrap(), Ratio::new(1, 1));
    }

    #[test]
    fn g_norm_errors() {
        let g = FiniteAbelianGroup::make_group(&[2, 4]).unwrap();
        let h = g.element(&[0, 1]).unwrap();
        let s = seq(&g, "(1,0)");
        assert_eq!(s.g_norm(&h), Err(Error::NotInCyclicSpan));
        let z = g.zero();
        assert!(s.g_norm(&z).is_err());
    }

    #[test]
    fn cross_number_examples() {
        let g = c6();
        assert_eq!(seq(&g, "(1)^6").cross_number().unwrap(), Ratio::new(1, 1));
        let c2 = FiniteAbelianGroup::make_group(&[2]).unwrap();
        assert_eq!(seq(&c2, "(1)^2").cross_number().unwrap(), Ratio::new(1, 1));
        // atom g^3 (3g): 3/6 + 1/2 = 1
        assert_eq!(seq(&g, "(1)^3 (3)").cross_number().unwrap(), Ratio::new(1, 1));
        assert_eq!(
            seq(&g, "(0) (1)").cross_number(),
            Err(Error::ZeroElementInCrossNumber)
        );
    }

    #[test]
    fn literal_roundtrip_examples() {
        let g = FiniteAbelianGroup::make_group(&[2, 4]).unwrap();
        let s = seq(&g, "(1,0)^3 (0,2)");
        assert_eq!(format!("{s}"), "(0,2) (1,0)^3");
        assert_eq!(Sequence::parse(&g, &format!("{s}")).unwrap(), s);
        assert_eq!(Sequence::parse(&g, "").unwrap(), Sequence::empty(&g));
        // signed coordinates reduce
        assert_eq!(seq(&FiniteAbelianGroup::make_group(&[6]).unwrap(), "(-1)"),
                   seq(&FiniteAbelianGroup::make_group(&[6]).unwrap(), "(5)"));
        assert!(Sequence::parse(&g, "(1,0").is_err());
        assert!(Sequence::parse(&g, "(1)").is_err());
    }

    #[test]
    fn is_atom_basics() {
        let g = c6();
        assert!(seq(&g, "(1)^6").is_atom().unwrap());
        assert!(!seq(&g, "(1)^7").is_atom().unwrap());
        assert!(seq(&g, "(0)").is_atom().unwrap());
        assert!(!seq(&g, "(0)^2").is_atom().unwrap());
        assert!(Sequence::empty(&g).is_atom().is_err());
    }

    #[test]
    fn xor_translate_matches_index_addition() {
        let g = FiniteAbelianGroup::make_group(&[2; 7]).unwrap();
        let bits: u128 = 0x0123_4567_89ab_cdef_0fed_cba9_8765_4321;
        for e in [0u64, 1, 5, 63, 127] {
            let fast = xor_translate(bits, e);
            let mut slow = 0u128;
            for i in 0..128u64 {
                if bits >> i & 1 == 1 {
                    slow |= 1u128 << g.add_idx(i, e);
                }
            }
            assert_eq!(fast, slow, "e = {e}");
        }
    }

    // brute-force oracle over all 2^|S| subsequences
    fn zsf_brute(s: &Sequence) -> bool {
        let g = s.group().clone();
        let elems: Vec<u64> = s
            .entries()
            .flat_map(|(e, m)| {
                let idx = g.index_of(&e).unwrap();
                core::iter::repeat_n(idx, m as usize)
            })
            .collect();
        for mask in 1u64..(1 << elems.len()) {
            let mut acc = 0u64;
            for (i, &e) in elems.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc = g.add_idx(acc, e);
                }
            }
            if acc == 0 {
                return false;
            }
        }
        true
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn zsf_matches_brute_force(factors in proptest::collection::vec(2u64..7, 1..3),
                                   picks in proptest::collection::vec((0u64..1000, 1u64..4), 0..5)) {
            let g = FiniteAbelianGroup::make_group(&factors).unwrap();
            let pairs: Vec<(u64, u64)> = picks.iter().map(|&(e, m)| (e % g.order(), m)).collect();
            let s = Sequence::from_indexed(&g, pairs);
            prop_assume!(s.len() <= 12);
            prop_assert_eq!(s.is_zero_sum_free().unwrap(), zsf_brute(&s));
        }

        #[test]
        fn sum_is_homomorphic(picks_a in proptest::collection::vec((0u64..6, 1u64..4), 0..4),
                              picks_b in proptest::collection::vec((0u64..6, 1u64..4), 0..4)) {
            let g = c6();
            let a = Sequence::from_indexed(&g, picks_a);
            let b = Sequence::from_indexed(&g, picks_b);
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.sum(), g.add(&a.sum(), &b.sum()).unwrap());
            prop_assert_eq!(ab.len(), a.len() + b.len());
        }

        #[test]
        fn g_norm_is_homomorphic(picks_a in proptest::collection::vec((0u64..6, 1u64..4), 0..4),
                                 picks_b in proptest::collection::vec((0u64..6, 1u64..4), 0..4)) {
            let g = c6();
            let gen = g.element(&[1]).unwrap();
            let a = Sequence::from_indexed(&g, picks_a);
            let b = Sequence::from_indexed(&g, picks_b);
            let lhs = a.mul(&b).unwrap().g_norm(&gen).unwrap();
            prop_assert_eq!(lhs, a.g_norm(&gen).unwrap() + b.g_norm(&gen).unwrap());
        }

        #[test]
        fn negate_is_involution(picks in proptest::collection::vec((0u64..8, 1u64..4), 0..5)) {
            let g = FiniteAbelianGroup::make_group(&[2, 4]).unwrap();
            let s = Sequence::from_indexed(&g, picks);
            prop_assert_eq!(s.negate().negate(), s.clone());
            prop_assert_eq!(s.negate().len(), s.len());
            prop_assert_eq!(s.negate().sum(), g.neg(&s.sum()).unwrap());
        }

        #[test]
        fn literal_roundtrip(picks in proptest::collection::vec((0u64..8, 1u64..5), 0..5)) {
            let g = FiniteAbelianGroup::make_group(&[2, 4]).unwrap();
            let s = Sequence::from_indexed(&g, picks);
            let rendered = format!("{s}");
            prop_assert_eq!(Sequence::parse(&g, &rendered).unwrap(), s);
        }
    }
}
