//! Derived arithmetic invariants: distance sets, bounded Delta(G_0) and
//! Delta*(G), elasticities, daleth, LCN predicates and bounded m(G).
//!
//! Sweeps that cannot be exhaustive at desk scale are *bounded*: they carry
//! the bound they ran with, and reported values are honest observations
//! under that bound rather than claims about the full (infinite) sweep.

use crate::atoms::AtomSet;
use crate::error::{invalid, Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::lengths::{LengthMemo, LengthSet};
use crate::sequence::Sequence;
use crate::Limits;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use num_integer::Integer;
use num_rational::Ratio;

/// Whether a reported value is exact or an under-approximation from a
/// bounded sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// The sweep covered all sequences of length at most the bound.
    Bounded(u64),
}

/// A computed invariant, ready for rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub invariant: &'static str,
    pub group: String,
    pub subset: Option<String>,
    pub value: InvariantValue,
    pub mode: Mode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Integer(u64),
    Rational(Ratio<i64>),
    IntegerSet(Vec<u64>),
    Undefined,
}

/// Canonical rendering of a subset: elements in canonical order, space
/// separated.
pub fn render_subset(elements: &[GroupElement]) -> String {
    use core::fmt::Write;
    let mut sorted: Vec<&GroupElement> = elements.iter().collect();
    sorted.sort();
    sorted.dedup();
    let mut out = String::new();
    for (i, el) in sorted.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{el}");
    }
    out
}

/// `Delta(L)`: the successive distances of a finite length set.
pub fn delta_of(l: &LengthSet) -> Vec<u64> {
    l.delta()
}

/// Union of `Delta(L(B))` over every zero-sum sequence `B` over the atom
/// source's subset with `|B| <= size_bound`. Zeros never contribute (they
/// only shift length sets), so the sweep runs over the zero-free part of
/// the subset. An under-approximation of `Delta(G_0)`.
pub fn delta_bounded(
    atoms: &AtomSet,
    size_bound: u64,
    limits: &Limits,
) -> Result<BTreeSet<u64>> {
    if size_bound < 2 {
        return Err(invalid("size bound must be at least 2"));
    }
    let subset: Vec<u64> = atoms
        .subset_idx()
        .iter()
        .copied()
        .filter(|&e| e != 0)
        .collect();
    check_multiset_guard(subset.len() as u64, size_bound, limits)?;
    let mut memo = LengthMemo::new(atoms, limits);
    let mut out = BTreeSet::new();
    for_each_zero_sum(atoms.group(), &subset, size_bound, &mut |b| {
        let l = memo.length_set(b)?;
        out.extend(l.delta());
        Ok(())
    })?;
    Ok(out)
}

/// Per-subset result of a bounded Delta* sweep.
#[derive(Clone, Debug)]
pub struct DeltaStarBounded {
    /// Size bound the sweep ran with.
    pub bound: u64,
    /// `(subset, gcd of observed distances)` for every nonempty subset of
    /// the nonzero elements with at least one observed distance.
    pub per_subset: Vec<(Vec<GroupElement>, u64)>,
    /// The set of per-subset gcds (the bounded Delta* observation).
    pub gcds: BTreeSet<u64>,
}

/// Bounded `Delta*(G)`: for each subset `G_0` of `G` with a nonempty
/// observed distance set, the gcd of the observed distances (valid because
/// `min Delta(G_0) = gcd Delta(G_0)`); the returned set collects these
/// gcds. Subsets containing zero are folded into their zero-free part,
/// which has the same distance set.
pub fn delta_star_bounded(
    group: &FiniteAbelianGroup,
    size_bound: u64,
    limits: &Limits,
) -> Result<DeltaStarBounded> {
    if group.order() > limits.max_subset_sweep_order as u64 {
        return Err(Error::GuardExceeded { guard: "max_subset_sweep_order" });
    }
    let all: Vec<GroupElement> = group.elements().collect();
    let atoms = crate::atoms::enumerate_atoms(group, &all, limits)?;
    let nonzero = group.order() - 1;
    check_multiset_guard(nonzero, size_bound, limits)?;

    // observed distance bitmask per support mask over the nonzero elements
    let mut by_mask: hashbrown::HashMap<u32, u64> = hashbrown::HashMap::new();
    let subset: Vec<u64> = (1..group.order()).collect();
    let mut memo = LengthMemo::new(&atoms, limits);
    for_each_zero_sum(group, &subset, size_bound, &mut |b| {
        let gaps = memo.length_set(b)?.delta();
        if gaps.is_empty() {
            return Ok(());
        }
        let mut mask = 0u32;
        for &(e, _) in b.entries_idx() {
            mask |= 1 << (e - 1);
        }
        let slot = by_mask.entry(mask).or_insert(0);
        for d in gaps {
            debug_assert!(d < 64);
            *slot |= 1 << d;
        }
        Ok(())
    })?;

    // superset accumulation: every subset sees the distances of all
    // sequences supported inside it
    let n = nonzero as usize;
    let mut table = alloc::vec![0u64; 1usize << n];
    for (mask, bits) in by_mask {
        table[mask as usize] |= bits;
    }
    for b in 0..n {
        for mask in 0..table.len() {
            if mask >> b & 1 == 1 {
                table[mask] |= table[mask ^ (1 << b)];
            }
        }
    }
    let mut per_subset = Vec::new();
    let mut gcds = BTreeSet::new();
    for (mask, &bits) in table.iter().enumerate() {
        if bits == 0 {
            continue;
        }
        let mut g = 0u64;
        let mut rem = bits;
        while rem != 0 {
            g = g.gcd(&(rem.trailing_zeros() as u64));
            rem &= rem - 1;
        }
        let elements: Vec<GroupElement> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| group.element_at(i as u64 + 1))
            .collect();
        gcds.insert(g);
        per_subset.push((elements, g));
    }
    Ok(DeltaStarBounded { bound: size_bound, per_subset, gcds })
}

/// `rho(L) = max L / min L`; 1 for `{0}`. A zero in any other set cannot
/// arise from a valid sequence and is rejected.
pub fn rho_of(l: &LengthSet) -> Result<Ratio<i64>> {
    let (min, max) = match (l.minimum(), l.maximum()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(invalid("elasticity of an empty set")),
    };
    if min == 0 {
        if max == 0 {
            return Ok(Ratio::new(1, 1));
        }
        return Err(invalid("length set contains 0 alongside other values"));
    }
    Ok(Ratio::new(max as i64, min as i64))
}

/// Exact `rho_k(G_0)`: the maximum of `max L(B)` over all products `B` of
/// `k` atoms. The sweep runs over non-decreasing atom tuples ordered by
/// length, pruned with the bound `max L(B) <= z + (|B| - z)/2` where `z`
/// counts zero atoms.
pub fn rho_k(atoms: &AtomSet, k: u32, limits: &Limits) -> Result<u64> {
    if k == 0 {
        return Err(invalid("rho_k needs k >= 1"));
    }
    if k > limits.max_rho_k {
        return Err(Error::GuardExceeded { guard: "max_rho_k" });
    }
    if atoms.atoms().len() as u64 > limits.max_sweep_atoms {
        return Err(Error::GuardExceeded { guard: "max_sweep_atoms" });
    }
    // atom ids sorted by decreasing length
    let mut order: Vec<u32> = (0..atoms.atoms().len() as u32).collect();
    order.sort_by_key(|&id| core::cmp::Reverse(atoms.atoms()[id as usize].len()));
    let mut memo = LengthMemo::new(atoms, limits);
    let mut best = 0u64;
    let mut chosen: Vec<u32> = Vec::with_capacity(k as usize);
    rho_rec(atoms, &order, k, 0, &mut chosen, &mut best, &mut memo)?;
    Ok(best)
}

fn rho_rec(
    atoms: &AtomSet,
    order: &[u32],
    k: u32,
    start: usize,
    chosen: &mut Vec<u32>,
    best: &mut u64,
    memo: &mut LengthMemo,
) -> Result<()> {
    if chosen.len() == k as usize {
        let mut product = atoms.atoms()[chosen[0] as usize].clone();
        for &id in &chosen[1..] {
            product = product.mul(&atoms.atoms()[id as usize])?;
        }
        let l = memo.length_set(&product)?;
        if let Some(max) = l.maximum() {
            *best = (*best).max(max);
        }
        return Ok(());
    }
    let remaining = k as usize - chosen.len();
    let cur_len: u64 = chosen
        .iter()
        .map(|&id| atoms.atoms()[id as usize].len())
        .sum();
    let cur_zeros: u64 = chosen
        .iter()
        .filter(|&&id| atoms.atoms()[id as usize].multiplicity_idx(0) > 0)
        .count() as u64;
    for pos in start..order.len() {
        let id = order[pos];
        let len = atoms.atoms()[id as usize].len();
        let total = cur_len + len * remaining as u64;
        let zeros = cur_zeros + remaining as u64; // at most
        let bound = zeros.min(total) + (total - zeros.min(total)) / 2;
        if bound <= *best {
            break; // lengths only shrink from here
        }
        chosen.push(id);
        rho_rec(atoms, order, k, pos, chosen, best, memo)?;
        chosen.pop();
    }
    Ok(())
}

/// Exact daleth: `max { min(L \ {2}) : 2 in L, |L| >= 2 }` over all atom
/// pair products.
///
/// A value of `D = D(G_0)` forces a factorization of `U V` into `D` atoms
/// of total length `|U| + |V| <= 2 D`, so all of them have length 2; a
/// length-2 atom inside an atom of length at least 3 would contradict
/// minimality, so each splits across the pair and `V = -U`. Hence after
/// scanning every mirror pair `(U, -U)`, a best value of at least `D - 1`
/// is already exact; otherwise the full pruned pair sweep runs.
pub fn daleth(atoms: &AtomSet, limits: &Limits) -> Result<u64> {
    let d = atoms.davenport();
    let group = atoms.group();
    let symmetric = atoms
        .subset_idx()
        .iter()
        .all(|&e| atoms.subset_idx().binary_search(&group.neg_idx(e)).is_ok());
    let mut best: Option<u64> = None;
    let mut memo = LengthMemo::new(atoms, limits);
    if symmetric {
        for atom in atoms.atoms() {
            let l = memo.length_set(&atom.mul(&atom.negate())?)?;
            record_daleth(&l, &mut best);
        }
        if d >= 3 {
            if let Some(b) = best {
                if b >= d - 1 {
                    return Ok(b);
                }
            }
        }
    }
    // full sweep, largest pairs first, pruned once no pair can beat best
    if atoms.atoms().len() as u64 > limits.max_sweep_atoms {
        return Err(Error::GuardExceeded { guard: "max_sweep_atoms" });
    }
    let mut order: Vec<u32> = (0..atoms.atoms().len() as u32).collect();
    order.sort_by_key(|&id| core::cmp::Reverse(atoms.atoms()[id as usize].len()));
    for (i, &a) in order.iter().enumerate() {
        let la = atoms.atoms()[a as usize].len();
        if la + la <= 2 * best.unwrap_or(0) {
            break;
        }
        for &b in &order[i..] {
            let u = &atoms.atoms()[a as usize];
            let v = &atoms.atoms()[b as usize];
            if (u.len() + v.len()) / 2 <= best.unwrap_or(0) {
                break;
            }
            if u.multiplicity_idx(0) > 0 || v.multiplicity_idx(0) > 0 {
                continue; // pairs with the zero atom have L = {2}
            }
            let l = memo.length_set(&u.mul(v)?)?;
            record_daleth(&l, &mut best);
        }
    }
    best.ok_or(Error::UndefinedDaleth)
}

fn record_daleth(l: &LengthSet, best: &mut Option<u64>) {
    if l.card() < 2 {
        return;
    }
    let candidate = l
        .values()
        .iter()
        .copied()
        .find(|&v| v != 2)
        .expect("a length set with two values has one besides 2");
    if best.is_none_or(|b| candidate > b) {
        *best = Some(candidate);
    }
}

/// True iff every atom over the subset has cross number at least 1. The
/// zero atom `(0)` counts with cross number 1.
pub fn is_lcn_set(atoms: &AtomSet) -> Result<bool> {
    for atom in atoms.atoms() {
        if atom.multiplicity_idx(0) > 0 {
            continue; // the atom (0), cross number 1
        }
        if atom.cross_number()? < Ratio::new(1, 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of a bounded `m(G)` sweep.
#[derive(Clone, Debug)]
pub struct MBounded {
    /// Max over non-half-factorial LCN subsets of the observed distance gcd;
    /// `None` when no subset qualifies under the bound.
    pub value: Option<u64>,
    /// Size bound on the pair products that generated the observations.
    pub bound: u64,
    /// A subset realizing the maximum.
    pub witness: Option<Vec<GroupElement>>,
}

/// Bounded `m(G)`: sweeps atom pair products of length at most
/// `size_bound`, tags observed distances by support, and maximizes the
/// observed-distance gcd over subsets that are LCN-sets and show at least
/// one distance. Observations come from pair products only, so the value is
/// an over-approximation of the true `min Delta` per subset.
pub fn m_bounded(
    group: &FiniteAbelianGroup,
    size_bound: u64,
    limits: &Limits,
) -> Result<MBounded> {
    if group.order() > limits.max_subset_sweep_order as u64 {
        return Err(Error::GuardExceeded { guard: "max_subset_sweep_order" });
    }
    let all: Vec<GroupElement> = group.elements().collect();
    let atoms = crate::atoms::enumerate_atoms(group, &all, limits)?;
    let n = (group.order() - 1) as usize;
    let ids: Vec<u32> = (0..atoms.atoms().len() as u32)
        .filter(|&id| atoms.atoms()[id as usize].multiplicity_idx(0) == 0)
        .collect();
    let mut memo = LengthMemo::new(&atoms, limits);
    let mut table = alloc::vec![0u64; 1usize << n];
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i..] {
            let u = &atoms.atoms()[a as usize];
            let v = &atoms.atoms()[b as usize];
            if u.len() + v.len() > size_bound {
                continue;
            }
            let product = u.mul(v)?;
            let gaps = memo.length_set(&product)?.delta();
            if gaps.is_empty() {
                continue;
            }
            let mut mask = 0usize;
            for &(e, _) in product.entries_idx() {
                mask |= 1 << (e - 1);
            }
            for d in gaps {
                table[mask] |= 1 << d;
            }
        }
    }
    for b in 0..n {
        for mask in 0..table.len() {
            if mask >> b & 1 == 1 {
                table[mask] |= table[mask ^ (1 << b)];
            }
        }
    }
    // LCN markers: a subset fails if it contains the support of a low-cross
    // atom
    let mut bad = alloc::vec![false; 1usize << n];
    for atom in atoms.atoms() {
        if atom.multiplicity_idx(0) > 0 {
            continue;
        }
        if atom.cross_number()? < Ratio::new(1, 1) {
            let mut mask = 0usize;
            for &(e, _) in atom.entries_idx() {
                mask |= 1 << (e - 1);
            }
            bad[mask] = true;
        }
    }
    for b in 0..n {
        for mask in 0..bad.len() {
            if mask >> b & 1 == 1 && bad[mask ^ (1 << b)] {
                bad[mask] = true;
            }
        }
    }
    let mut best: Option<(u64, usize)> = None;
    for mask in 1..table.len() {
        if bad[mask] || table[mask] == 0 {
            continue;
        }
        let mut g = 0u64;
        let mut rem = table[mask];
        while rem != 0 {
            g = g.gcd(&(rem.trailing_zeros() as u64));
            rem &= rem - 1;
        }
        if best.is_none_or(|(b, _)| g > b) {
            best = Some((g, mask));
        }
    }
    Ok(MBounded {
        value: best.map(|(g, _)| g),
        bound: size_bound,
        witness: best.map(|(_, mask)| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| group.element_at(i as u64 + 1))
                .collect()
        }),
    })
}

/// Visits every nonempty zero-sum sequence over the given element indices
/// with length at most `size_bound`, in canonical generation order.
pub(crate) fn for_each_zero_sum(
    group: &FiniteAbelianGroup,
    subset: &[u64],
    size_bound: u64,
    visit: &mut dyn FnMut(&Sequence) -> Result<()>,
) -> Result<()> {
    let mut stack: Vec<(u64, u64)> = Vec::new();
    rec_zero_sum(group, subset, 0, 0, size_bound, &mut stack, visit)
}

fn rec_zero_sum(
    group: &FiniteAbelianGroup,
    subset: &[u64],
    from: usize,
    sum: u64,
    left: u64,
    stack: &mut Vec<(u64, u64)>,
    visit: &mut dyn FnMut(&Sequence) -> Result<()>,
) -> Result<()> {
    if sum == 0 && !stack.is_empty() {
        visit(&Sequence::from_indexed(group, stack.clone()))?;
    }
    if left == 0 {
        return Ok(());
    }
    for (pos, &e) in subset.iter().enumerate().skip(from) {
        let mut acc = sum;
        for m in 1..=left {
            acc = group.add_idx(acc, e);
            stack.push((e, m));
            rec_zero_sum(group, subset, pos + 1, acc, left - m, stack, visit)?;
            stack.pop();
        }
    }
    Ok(())
}

fn check_multiset_guard(subset_size: u64, size_bound: u64, limits: &Limits) -> Result<()> {
    // C(size_bound + s, s) multisets, computed with saturation
    let mut count: u64 = 1;
    for i in 1..=subset_size {
        count = count.saturating_mul(size_bound + i) / i;
        if count > limits.max_multisets {
            return Err(Error::GuardExceeded { guard: "max_multisets" });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::enumerate_atoms;
    use alloc::vec;

    fn g(factors: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::make_group(factors).unwrap()
    }

    fn whole(group: &FiniteAbelianGroup) -> AtomSet {
        enumerate_atoms(group, &group.elements().collect::<Vec<_>>(), &Limits::default()).unwrap()
    }

    fn subset_atoms(group: &FiniteAbelianGroup, idx: &[u64]) -> AtomSet {
        let els: Vec<GroupElement> = idx.iter().map(|&i| group.element_at(i)).collect();
        enumerate_atoms(group, &els, &Limits::default()).unwrap()
    }

    fn lset(values: &[u64]) -> LengthSet {
        LengthSet::from_values(values.to_vec())
    }

    #[test]
    fn delta_of_examples() {
        assert_eq!(delta_of(&lset(&[2, 4, 5])), vec![1, 2]);
        assert_eq!(delta_of(&lset(&[7])), Vec::<u64>::new());
        assert_eq!(delta_of(&LengthSet::interval(4, 11)), vec![1]);
    }

    #[test]
    fn delta_bounded_c6_reaches_full_interval() {
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        let got = delta_bounded(&atoms, 16, &Limits::default()).unwrap();
        assert_eq!(got, BTreeSet::from([1, 2, 3, 4]));
    }

    #[test]
    fn delta_bounded_on_subsets() {
        let c6 = g(&[6]);
        // {g, -g}: the only nontrivial pair sets are 2k + 4*[0,k]
        let atoms = subset_atoms(&c6, &[1, 5]);
        let got = delta_bounded(&atoms, 12, &Limits::default()).unwrap();
        assert_eq!(got, BTreeSet::from([4]));
        // half-factorial singleton
        let atoms = subset_atoms(&c6, &[1]);
        assert!(delta_bounded(&atoms, 12, &Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn delta_star_bounded_examples() {
        let limits = Limits::default();
        let c6 = g(&[6]);
        let ds = delta_star_bounded(&c6, 16, &limits).unwrap();
        assert_eq!(ds.gcds.iter().max(), Some(&4));
        let c24 = g(&[2, 4]);
        let ds = delta_star_bounded(&c24, 16, &limits).unwrap();
        assert_eq!(ds.gcds.iter().max(), Some(&2));
        let c3 = g(&[3]);
        let ds = delta_star_bounded(&c3, 12, &limits).unwrap();
        assert_eq!(ds.gcds, BTreeSet::from([1]));
    }

    #[test]
    fn delta_star_gcd_monotone_in_bound() {
        let c6 = g(&[6]);
        let limits = Limits::default();
        let small = delta_star_bounded(&c6, 8, &limits).unwrap();
        let large = delta_star_bounded(&c6, 12, &limits).unwrap();
        for (subset, g_small) in &small.per_subset {
            if let Some((_, g_large)) = large
                .per_subset
                .iter()
                .find(|(s, _)| s == subset)
            {
                assert!(g_large <= g_small, "subset {subset:?}");
            }
        }
    }

    #[test]
    fn delta_star_guard() {
        let c33 = g(&[3, 3, 3]);
        assert!(matches!(
            delta_star_bounded(&c33, 12, &Limits::default()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn rho_of_examples() {
        assert_eq!(rho_of(&lset(&[2, 6])).unwrap(), Ratio::new(3, 1));
        assert_eq!(rho_of(&lset(&[0])).unwrap(), Ratio::new(1, 1));
        assert_eq!(rho_of(&lset(&[3, 5, 7])).unwrap(), Ratio::new(7, 3));
        assert!(rho_of(&lset(&[0, 2])).is_err());
        assert!(rho_of(&LengthSet::default()).is_err());
    }

    #[test]
    fn rho_k_examples() {
        let limits = Limits::default();
        let c6 = g(&[6]);
        let atoms = whole(&c6);
        assert_eq!(rho_k(&atoms, 2, &limits).unwrap(), 6);
        assert_eq!(rho_k(&atoms, 3, &limits).unwrap(), 7);
        let c2 = g(&[2]);
        let atoms2 = whole(&c2);
        assert_eq!(rho_k(&atoms2, 2, &limits).unwrap(), 2);
        assert!(matches!(
            rho_k(&atoms, 4, &limits),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn rho_2_matches_davenport_on_small_groups() {
        let limits = Limits::default();
        for factors in [vec![3], vec![5], vec![2, 2], vec![2, 4], vec![8], vec![3, 3]] {
            let grp = g(&factors);
            let atoms = whole(&grp);
            assert_eq!(
                rho_k(&atoms, 2, &limits).unwrap(),
                atoms.davenport(),
                "group {factors:?}"
            );
        }
    }

    #[test]
    fn daleth_examples() {
        let limits = Limits::default();
        assert_eq!(daleth(&whole(&g(&[6])), &limits).unwrap(), 6);
        assert_eq!(daleth(&whole(&g(&[2, 4])), &limits).unwrap(), 4);
        assert_eq!(daleth(&whole(&g(&[2, 2, 4])), &limits).unwrap(), 5);
    }

    #[test]
    fn daleth_undefined_for_c2() {
        // over C2 every pair length set is {2}
        assert_eq!(
            daleth(&whole(&g(&[2])), &Limits::default()),
            Err(Error::UndefinedDaleth)
        );
    }

    #[test]
    fn daleth_equals_davenport_iff_cyclic_or_elementary2() {
        let limits = Limits::default();
        for factors in [
            vec![3],
            vec![4],
            vec![5],
            vec![6],
            vec![2, 2],
            vec![2, 2, 2],
            vec![2, 2, 2, 2],
            vec![2, 4],
            vec![2, 6],
            vec![2, 2, 4],
            vec![3, 3],
        ] {
            let grp = g(&factors);
            let atoms = whole(&grp);
            let d = atoms.davenport();
            let val = daleth(&atoms, &limits).unwrap();
            assert!(val <= d);
            let cyclic_or_e2 = grp.rank() <= 1 || grp.is_elementary_2();
            assert_eq!(val == d, cyclic_or_e2, "group {factors:?}");
        }
    }

    #[test]
    fn lcn_examples() {
        let c6 = g(&[6]);
        assert!(is_lcn_set(&subset_atoms(&c6, &[1])).unwrap());
        // subsets of elementary 2-groups are always LCN
        let e16 = g(&[2, 2, 2, 2]);
        assert!(is_lcn_set(&whole(&e16)).unwrap());
        // {g, 2g} in C4: the atom (2g) g^2 has cross number 1/2 + 2/4 = 1;
        // {g,-g} in C4: g(-g) has cross number 1/2 < 1
        let c4 = g(&[4]);
        assert!(!is_lcn_set(&subset_atoms(&c4, &[1, 3])).unwrap());
    }

    #[test]
    fn m_bounded_c4_c4_is_1() {
        let c44 = g(&[4, 4]);
        let got = m_bounded(&c44, 16, &Limits::default()).unwrap();
        assert_eq!(got.value, Some(1));
    }

    #[test]
    fn render_subset_is_canonical() {
        let c6 = g(&[6]);
        let a = c6.element(&[3]).unwrap();
        let b = c6.element(&[1]).unwrap();
        assert_eq!(render_subset(&[a, b.clone(), b]), "(1) (3)");
    }
}
