//! Atom (minimal zero-sum sequence) testing and exhaustive enumeration over
//! a subset `G_0` of a finite abelian group; Davenport constants.
//!
//! Enumeration is a depth-first search over sequences whose entries are
//! non-decreasing in the canonical element order, so each atom is generated
//! exactly once. A partial sequence is extended only while it stays
//! zero-sum free; when an extension closes the sum to zero the candidate's
//! minimality is confirmed (a zero-sum-free prefix plus a closing element
//! can still contain an interior zero-sum using that element).

use crate::error::{invalid, Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::sequence::{Sequence, SumSet};
use crate::Limits;
use alloc::vec::Vec;

/// Visitor over run-length-compressed canonical index entries.
pub type AtomVisitor<'v> = dyn FnMut(&[(u64, u64)]) + 'v;

/// The complete set of atoms over a subset `G_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomSet {
    group: FiniteAbelianGroup,
    subset: Vec<u64>,
    atoms: Vec<Sequence>,
    davenport: u64,
}

impl AtomSet {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// The subset `G_0`, in canonical order.
    pub fn subset(&self) -> Vec<GroupElement> {
        self.subset.iter().map(|&i| self.group.element_at(i)).collect()
    }

    pub(crate) fn subset_idx(&self) -> &[u64] {
        &self.subset
    }

    /// All atoms, canonically sorted.
    pub fn atoms(&self) -> &[Sequence] {
        &self.atoms
    }

    /// `D(G_0)`: the maximal atom length (0 if there are no atoms).
    pub fn davenport(&self) -> u64 {
        self.davenport
    }

    /// Rebuilds an atom set from stored parts, revalidating that every
    /// sequence is an atom supported on the subset. Does not re-prove
    /// completeness.
    pub fn from_parts(
        group: &FiniteAbelianGroup,
        subset: &[GroupElement],
        mut atoms: Vec<Sequence>,
    ) -> Result<AtomSet> {
        let subset = subset_indices(group, subset)?;
        for atom in &atoms {
            if atom.group() != group || !atom.is_atom()? {
                return Err(invalid("stored sequence is not an atom over this group"));
            }
            for &(e, _) in atom.entries_idx() {
                if subset.binary_search(&e).is_err() {
                    return Err(invalid("stored atom leaves the subset"));
                }
            }
        }
        atoms.sort_unstable();
        atoms.dedup();
        let davenport = atoms.iter().map(Sequence::len).max().unwrap_or(0);
        Ok(AtomSet { group: group.clone(), subset, atoms, davenport })
    }
}

/// True iff `s` is an atom. Errors on the empty sequence.
pub fn is_atom(s: &Sequence) -> Result<bool> {
    s.is_atom()
}

/// Enumerates the complete atom set over `subset`.
pub fn enumerate_atoms(
    group: &FiniteAbelianGroup,
    subset: &[GroupElement],
    limits: &Limits,
) -> Result<AtomSet> {
    let subset = subset_indices(group, subset)?;
    let mut atoms = Vec::new();
    for_each_atom_idx(group, &subset, group.order(), limits, &mut |entries| {
        atoms.push(Sequence::from_indexed(group, entries.to_vec()));
    })?;
    atoms.sort_unstable();
    let davenport = atoms.iter().map(Sequence::len).max().unwrap_or(0);
    Ok(AtomSet { group: group.clone(), subset, atoms, davenport })
}

/// Enumerates atoms over the whole group.
pub fn whole_group(group: &FiniteAbelianGroup, limits: &Limits) -> Result<AtomSet> {
    let all: Vec<GroupElement> = group.elements().collect();
    enumerate_atoms(group, &all, limits)
}

/// `D(G_0)` by streaming enumeration, without materializing the atom set.
pub fn davenport(
    group: &FiniteAbelianGroup,
    subset: &[GroupElement],
    limits: &Limits,
) -> Result<u64> {
    let subset = subset_indices(group, subset)?;
    let mut best = 0u64;
    for_each_atom_idx(group, &subset, group.order(), limits, &mut |entries| {
        let len: u64 = entries.iter().map(|&(_, m)| m).sum();
        if len > best {
            best = len;
        }
    })?;
    Ok(best)
}

/// All atoms of exactly length `len`, canonically sorted; the search depth
/// is capped at `len` so no full atom set is built.
pub fn atoms_of_length(
    group: &FiniteAbelianGroup,
    subset: &[GroupElement],
    len: u64,
    limits: &Limits,
) -> Result<Vec<Sequence>> {
    if len == 0 {
        return Err(invalid("atom length must be at least 1"));
    }
    let subset = subset_indices(group, subset)?;
    let mut atoms = Vec::new();
    for_each_atom_idx(group, &subset, len, limits, &mut |entries| {
        let total: u64 = entries.iter().map(|&(_, m)| m).sum();
        if total == len {
            atoms.push(Sequence::from_indexed(group, entries.to_vec()));
        }
    })?;
    atoms.sort_unstable();
    Ok(atoms)
}

/// Streams every atom over the subset with length at most `max_len` to the
/// visitor, as run-length-compressed canonical index entries, each atom
/// exactly once, without materializing the atom set.
pub fn for_each_atom(
    group: &FiniteAbelianGroup,
    subset: &[GroupElement],
    max_len: u64,
    limits: &Limits,
    visit: &mut AtomVisitor<'_>,
) -> Result<()> {
    let subset = subset_indices(group, subset)?;
    for_each_atom_idx(group, &subset, max_len, limits, visit)
}

pub(crate) fn for_each_atom_idx(
    group: &FiniteAbelianGroup,
    subset: &[u64],
    max_len: u64,
    limits: &Limits,
    visit: &mut AtomVisitor<'_>,
) -> Result<()> {
    if group.order() > limits.max_enumeration_order {
        return Err(Error::GuardExceeded { guard: "max_enumeration_order" });
    }
    if subset.is_empty() {
        return Err(invalid("atom enumeration needs a nonempty subset"));
    }
    let max_len = max_len.min(group.order());
    let mut state = Dfs {
        group,
        subset,
        max_len,
        entries: Vec::new(),
        len: 0,
        visit,
    };
    state.recurse(0, 0, &SumSet::new(group), &SumSet::new(group));
    Ok(())
}

struct Dfs<'a> {
    group: &'a FiniteAbelianGroup,
    subset: &'a [u64],
    max_len: u64,
    entries: Vec<(u64, u64)>,
    len: u64,
    visit: &'a mut AtomVisitor<'a>,
}

impl Dfs<'_> {
    fn recurse(&mut self, start: usize, sum: u64, all: &SumSet, proper: &SumSet) {
        if self.len >= self.max_len {
            return;
        }
        for (pos, &e) in self.subset.iter().enumerate().skip(start) {
            let mut next_all = all.clone();
            next_all.union_translated(all, e, self.group);
            next_all.insert(e);
            if next_all.contains(0) {
                // the extended prefix has a zero-sum subsequence: either it
                // closes an atom here or every further extension is doomed
                if self.group.add_idx(sum, e) == 0 {
                    let mut next_proper = all.clone();
                    next_proper.union_translated(proper, e, self.group);
                    if self.len > 0 {
                        next_proper.insert(e);
                    }
                    if !next_proper.contains(0) {
                        self.push(e);
                        debug_assert!(Sequence::from_indexed(
                            self.group,
                            self.entries.clone()
                        )
                        .is_atom()
                        .unwrap());
                        (self.visit)(&self.entries);
                        self.pop(e);
                    }
                }
                continue;
            }
            let mut next_proper = all.clone();
            next_proper.union_translated(proper, e, self.group);
            if self.len > 0 {
                next_proper.insert(e);
            }
            self.push(e);
            self.recurse(pos, self.group.add_idx(sum, e), &next_all, &next_proper);
            self.pop(e);
        }
    }

    fn push(&mut self, e: u64) {
        match self.entries.last_mut() {
            Some(last) if last.0 == e => last.1 += 1,
            _ => self.entries.push((e, 1)),
        }
        self.len += 1;
    }

    fn pop(&mut self, e: u64) {
        let last = self.entries.last_mut().expect("pop on empty stack");
        debug_assert_eq!(last.0, e);
        if last.1 == 1 {
            self.entries.pop();
        } else {
            last.1 -= 1;
        }
        self.len -= 1;
    }
}

/// Canonical atom representatives of an elementary 2-group under basis
/// change: every squarefree atom of length `k` maps to
/// `{e_1, ..., e_{k-1}, e_1 + ... + e_{k-1}}`, and every atom with a repeat
/// is `g^2`. Used by symmetry-reduced sweeps.
pub fn elementary2_atom_representatives(group: &FiniteAbelianGroup) -> Result<Vec<Sequence>> {
    if !group.is_elementary_2() || group.rank() == 0 {
        return Err(invalid("representatives need a nontrivial elementary 2-group"));
    }
    let r = group.rank();
    let unit = |i: usize| {
        let mut c = alloc::vec![0u64; r];
        c[i] = 1;
        group.element(&c).unwrap()
    };
    let mut reps = Vec::new();
    reps.push(Sequence::new(group, &[(group.zero(), 1)])?);
    reps.push(Sequence::new(group, &[(unit(0), 2)])?);
    for k in 3..=(r as u64 + 1) {
        let mut pairs: Vec<(GroupElement, u64)> =
            (0..(k as usize - 1)).map(|i| (unit(i), 1)).collect();
        let mut c = alloc::vec![0u64; r];
        for coord in c.iter_mut().take(k as usize - 1) {
            *coord = 1;
        }
        pairs.push((group.element(&c)?, 1));
        reps.push(Sequence::new(group, &pairs)?);
    }
    Ok(reps)
}

fn subset_indices(group: &FiniteAbelianGroup, subset: &[GroupElement]) -> Result<Vec<u64>> {
    let mut idx = Vec::with_capacity(subset.len());
    for el in subset {
        idx.push(group.index_of(el)?);
    }
    idx.sort_unstable();
    idx.dedup();
    Ok(idx)
}
