//! Finite abelian groups in invariant-factor form and their elements.
//!
//! A group is stored as its invariant factors `(n_1, ..., n_r)` with
//! `1 < n_1 | n_2 | ... | n_r`; the trivial group is the empty factor list.
//! Elements are coordinate vectors in that basis. The canonical total order
//! on elements is the lexicographic order on coordinate vectors, and the
//! element with index `i` (in mixed-radix counting order) is the `i`-th
//! element in that order. Index `0` is always the zero element.

use crate::error::{invalid, Result};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use num_integer::Integer;

/// Addition, negation and element-order tables are precomputed below this
/// group order; larger groups fall back to coordinate arithmetic.
const TABLE_LIMIT: u64 = 512;

#[derive(Debug)]
struct GroupRepr {
    factors: Vec<u64>,
    order: u64,
    exponent: u64,
    /// Mixed-radix weights: index = sum coords[i] * weights[i].
    weights: Vec<u64>,
    tables: Option<Tables>,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    neg: Vec<u32>,
    ord: Vec<u32>,
}

/// A finite abelian group `C_{n_1} + ... + C_{n_r}` with `n_1 | ... | n_r`.
///
/// Cheap to clone (shared representation) and immutable once constructed.
#[derive(Clone, Debug)]
pub struct FiniteAbelianGroup {
    repr: Arc<GroupRepr>,
}

/// An element of a [`FiniteAbelianGroup`], as a reduced coordinate vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    /// Coordinates in the invariant-factor basis, `coords[i] < n_i`.
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.repr.factors == other.repr.factors
    }
}
impl Eq for FiniteAbelianGroup {}

impl FiniteAbelianGroup {
    /// Builds the group isomorphic to the direct sum of the given cyclic
    /// groups, canonicalized to invariant-factor form. Every factor must be
    /// at least 2; the empty list gives the trivial group.
    pub fn make_group(factors: &[u64]) -> Result<Self> {
        for &f in factors {
            if f < 2 {
                return Err(invalid(format!("cyclic factor {f} must be at least 2")));
            }
        }
        let invariant = invariant_factors(factors)?;
        let mut order: u64 = 1;
        for &f in &invariant {
            order = order
                .checked_mul(f)
                .ok_or_else(|| invalid("group order overflows u64"))?;
        }
        let exponent = invariant.last().copied().unwrap_or(1);
        // weights[i] = product of factors after i, so lexicographic order on
        // coordinates equals numeric order on indices
        let mut weights = vec![1u64; invariant.len()];
        for i in (0..invariant.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * invariant[i + 1];
        }
        let mut repr = GroupRepr {
            factors: invariant,
            order,
            exponent,
            weights,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            repr.tables = Some(build_tables(&repr));
        }
        Ok(FiniteAbelianGroup { repr: Arc::new(repr) })
    }

    /// Parses a comma-separated factor list such as `"2,2,4"`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Self::make_group(&[]);
        }
        let mut factors = Vec::new();
        for part in spec.split(',') {
            let f: u64 = part
                .trim()
                .parse()
                .map_err(|_| invalid(format!("bad group factor {part:?}")))?;
            factors.push(f);
        }
        Self::make_group(&factors)
    }

    /// The invariant factors `(n_1, ..., n_r)`.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.repr.factors
    }

    pub fn order(&self) -> u64 {
        self.repr.order
    }

    pub fn exponent(&self) -> u64 {
        self.repr.exponent
    }

    pub fn rank(&self) -> usize {
        self.repr.factors.len()
    }

    /// `D*(G) = 1 + sum (n_i - 1)`.
    pub fn d_star(&self) -> u64 {
        1 + self.repr.factors.iter().map(|&f| f - 1).sum::<u64>()
    }

    /// True if every invariant factor is 2.
    pub fn is_elementary_2(&self) -> bool {
        self.repr.factors.iter().all(|&f| f == 2)
    }

    /// Comma-separated factor list, e.g. `"2,2,4"`; empty for the trivial group.
    pub fn spec_string(&self) -> String {
        let parts: Vec<String> = self.repr.factors.iter().map(|f| format!("{f}")).collect();
        parts.join(",")
    }

    /// Rendered name, e.g. `"C2xC2xC4"`; `"C1"` for the trivial group.
    pub fn name(&self) -> String {
        if self.repr.factors.is_empty() {
            return String::from("C1");
        }
        let parts: Vec<String> = self.repr.factors.iter().map(|f| format!("C{f}")).collect();
        parts.join("x")
    }

    /// Builds an element from coordinates, reducing each modulo its factor.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(invalid(format!(
                "element has {} coordinates, group has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        let reduced = coords
            .iter()
            .zip(&self.repr.factors)
            .map(|(&c, &f)| c % f)
            .collect();
        Ok(GroupElement { coords: reduced })
    }

    /// Builds an element from signed coordinates (negatives wrap).
    pub fn element_signed(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(invalid("coordinate count mismatch"));
        }
        let reduced = coords
            .iter()
            .zip(&self.repr.factors)
            .map(|(&c, &f)| c.rem_euclid(f as i64) as u64)
            .collect();
        Ok(GroupElement { coords: reduced })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.rank()] }
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check_element(g)?;
        self.check_element(h)?;
        let coords = g
            .coords
            .iter()
            .zip(&h.coords)
            .zip(&self.repr.factors)
            .map(|((&a, &b), &f)| (a + b) % f)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn neg(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check_element(g)?;
        let coords = g
            .coords
            .iter()
            .zip(&self.repr.factors)
            .map(|(&a, &f)| (f - a) % f)
            .collect();
        Ok(GroupElement { coords })
    }

    /// Least `k >= 1` with `k*g = 0`.
    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        self.check_element(g)?;
        let mut ord = 1u64;
        for (&a, &f) in g.coords.iter().zip(&self.repr.factors) {
            ord = ord.lcm(&(f / f.gcd(&a)));
        }
        Ok(ord)
    }

    /// All elements in canonical (lexicographic coordinate) order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.repr.order).map(move |i| self.element_at(i))
    }

    fn check_element(&self, g: &GroupElement) -> Result<()> {
        if g.coords.len() != self.rank() {
            return Err(invalid("coordinate count mismatch"));
        }
        if g.coords.iter().zip(&self.repr.factors).any(|(&c, &f)| c >= f) {
            return Err(invalid("coordinate not reduced"));
        }
        Ok(())
    }

    /// Canonical index of an element (position in `elements()` order).
    pub fn index_of(&self, g: &GroupElement) -> Result<u64> {
        self.check_element(g)?;
        Ok(g.coords
            .iter()
            .zip(&self.repr.weights)
            .map(|(&c, &w)| c * w)
            .sum())
    }

    /// The element with canonical index `i`. Panics if `i >= order`.
    pub fn element_at(&self, i: u64) -> GroupElement {
        assert!(i < self.repr.order, "element index out of range");
        let mut rem = i;
        let coords = self
            .repr
            .weights
            .iter()
            .map(|&w| {
                let c = rem / w;
                rem %= w;
                c
            })
            .collect();
        GroupElement { coords }
    }

    // Index arithmetic used by the search engines. Indices are canonical
    // element positions (see `element_at`); callers must keep them in range.

    pub fn add_idx(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.repr.tables {
            return t.add[(a * self.repr.order + b) as usize] as u64;
        }
        let mut out = 0u64;
        let mut ra = a;
        let mut rb = b;
        for (&f, &w) in self.repr.factors.iter().zip(&self.repr.weights) {
            let ca = ra / w;
            let cb = rb / w;
            ra %= w;
            rb %= w;
            out += ((ca + cb) % f) * w;
        }
        out
    }

    pub fn neg_idx(&self, a: u64) -> u64 {
        if let Some(t) = &self.repr.tables {
            return t.neg[a as usize] as u64;
        }
        let mut out = 0u64;
        let mut ra = a;
        for (&f, &w) in self.repr.factors.iter().zip(&self.repr.weights) {
            let ca = ra / w;
            ra %= w;
            out += ((f - ca) % f) * w;
        }
        out
    }

    pub fn order_of_idx(&self, a: u64) -> u64 {
        if let Some(t) = &self.repr.tables {
            return t.ord[a as usize] as u64;
        }
        let mut ord = 1u64;
        let mut ra = a;
        for (&f, &w) in self.repr.factors.iter().zip(&self.repr.weights) {
            let ca = ra / w;
            ra %= w;
            ord = ord.lcm(&(f / f.gcd(&ca)));
        }
        ord
    }
}

fn build_tables(repr: &GroupRepr) -> Tables {
    let n = repr.order as usize;
    let decode = |i: u64| -> Vec<u64> {
        let mut rem = i;
        repr.weights
            .iter()
            .map(|&w| {
                let c = rem / w;
                rem %= w;
                c
            })
            .collect()
    };
    let coords: Vec<Vec<u64>> = (0..repr.order).map(decode).collect();
    let encode = |c: &[u64]| -> u32 {
        c.iter()
            .zip(&repr.weights)
            .map(|(&x, &w)| x * w)
            .sum::<u64>() as u32
    };
    let mut add = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let c: Vec<u64> = coords[a]
                .iter()
                .zip(&coords[b])
                .zip(&repr.factors)
                .map(|((&x, &y), &f)| (x + y) % f)
                .collect();
            add.push(encode(&c));
        }
    }
    let neg = (0..n)
        .map(|a| {
            let c: Vec<u64> = coords[a]
                .iter()
                .zip(&repr.factors)
                .map(|(&x, &f)| (f - x) % f)
                .collect();
            encode(&c)
        })
        .collect();
    let ord = (0..n)
        .map(|a| {
            let mut o = 1u64;
            for (&x, &f) in coords[a].iter().zip(&repr.factors) {
                o = o.lcm(&(f / f.gcd(&x)));
            }
            o as u32
        })
        .collect();
    Tables { add, neg, ord }
}

/// Regroups arbitrary cyclic factors into the invariant-factor chain:
/// split into prime powers, then repeatedly peel off the largest remaining
/// power of each prime and multiply them together.
fn invariant_factors(factors: &[u64]) -> Result<Vec<u64>> {
    use alloc::collections::BTreeMap;
    let mut powers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &f in factors {
        let mut rem = f;
        let mut p = 2u64;
        while p * p <= rem {
            if rem % p == 0 {
                let mut q = 1u64;
                while rem % p == 0 {
                    rem /= p;
                    q *= p;
                }
                powers.entry(p).or_default().push(q);
            }
            p += 1;
        }
        if rem > 1 {
            powers.entry(rem).or_default().push(rem);
        }
    }
    for v in powers.values_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    let rounds = powers.values().map(Vec::len).max().unwrap_or(0);
    let mut chain = Vec::with_capacity(rounds);
    for round in 0..rounds {
        let mut n = 1u64;
        for v in powers.values() {
            if let Some(&q) = v.get(round) {
                n = n
                    .checked_mul(q)
                    .ok_or_else(|| invalid("group order overflows u64"))?;
            }
        }
        chain.push(n);
    }
    chain.reverse();
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(factors: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::make_group(factors).unwrap()
    }

    #[test]
    fn make_group_canonicalizes() {
        assert_eq!(g(&[2, 4]).invariant_factors(), &[2, 4]);
        assert_eq!(g(&[2, 3]).invariant_factors(), &[6]);
        assert_eq!(g(&[4, 2, 2, 2]).invariant_factors(), &[2, 2, 2, 4]);
        assert_eq!(g(&[6, 8]).invariant_factors(), &[2, 24]);
        assert_eq!(g(&[]).invariant_factors(), &[] as &[u64]);
    }

    #[test]
    fn make_group_rejects_small_factors() {
        assert!(FiniteAbelianGroup::make_group(&[1]).is_err());
        assert!(FiniteAbelianGroup::make_group(&[2, 0]).is_err());
    }

    #[test]
    fn group_stats() {
        let c24 = g(&[2, 4]);
        assert_eq!(c24.order(), 8);
        assert_eq!(c24.exponent(), 4);
        assert_eq!(c24.rank(), 2);
        let t = g(&[]);
        assert_eq!(t.order(), 1);
        assert_eq!(t.exponent(), 1);
        assert_eq!(t.rank(), 0);
    }

    #[test]
    fn d_star_values() {
        assert_eq!(g(&[6]).d_star(), 6);
        assert_eq!(g(&[2, 2, 2, 4]).d_star(), 7);
        assert_eq!(g(&[]).d_star(), 1);
    }

    #[test]
    fn add_and_neg() {
        let c24 = g(&[2, 4]);
        let a = c24.element(&[1, 3]).unwrap();
        let b = c24.element(&[1, 2]).unwrap();
        assert_eq!(c24.add(&a, &b).unwrap().coords(), &[0, 1]);
        let c6 = g(&[6]);
        let x = c6.element(&[1]).unwrap();
        assert_eq!(c6.neg(&x).unwrap().coords(), &[5]);
        assert_eq!(c6.add(&x, &c6.zero()).unwrap(), x);
    }

    #[test]
    fn add_rejects_mismatched_coords() {
        let c6 = g(&[6]);
        let c24 = g(&[2, 4]);
        let x = c6.element(&[1]).unwrap();
        let y = c24.element(&[1, 1]).unwrap();
        assert!(c6.add(&x, &y).is_err());
    }

    #[test]
    fn element_orders() {
        let c6 = g(&[6]);
        assert_eq!(c6.element_order(&c6.element(&[1]).unwrap()).unwrap(), 6);
        let c24 = g(&[2, 4]);
        assert_eq!(c24.element_order(&c24.element(&[1, 2]).unwrap()).unwrap(), 2);
        assert_eq!(c6.element_order(&c6.zero()).unwrap(), 1);
    }

    #[test]
    fn elements_enumeration() {
        let c22 = g(&[2, 2]);
        let got: Vec<_> = c22.elements().map(|e| e.coords().to_vec()).collect();
        assert_eq!(got, [[0, 0], [0, 1], [1, 0], [1, 1]]);
        let c3 = g(&[3]);
        assert_eq!(c3.elements().count(), 3);
        let t = g(&[]);
        let all: Vec<_> = t.elements().collect();
        assert_eq!(all, [t.zero()]);
    }

    #[test]
    fn index_roundtrip_and_order() {
        let c234 = g(&[2, 3, 4]);
        let mut prev = None;
        for (i, e) in c234.elements().enumerate() {
            assert_eq!(c234.index_of(&e).unwrap(), i as u64);
            assert_eq!(c234.element_at(i as u64), e);
            if let Some(p) = prev {
                assert!(p < e, "elements must be strictly increasing");
            }
            prev = Some(e);
        }
    }

    #[test]
    fn names_and_specs() {
        let c224 = g(&[2, 2, 4]);
        assert_eq!(c224.name(), "C2xC2xC4");
        assert_eq!(c224.spec_string(), "2,2,4");
        assert_eq!(FiniteAbelianGroup::parse_spec("2, 2,4").unwrap(), c224);
        assert_eq!(g(&[]).name(), "C1");
    }

    proptest! {
        #[test]
        fn make_group_is_order_independent(mut factors in proptest::collection::vec(2u64..13, 1..5)) {
            let a = FiniteAbelianGroup::make_group(&factors).unwrap();
            factors.reverse();
            let b = FiniteAbelianGroup::make_group(&factors).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn add_neg_is_zero(factors in proptest::collection::vec(2u64..8, 1..4), seed in 0u64..10_000) {
            let grp = FiniteAbelianGroup::make_group(&factors).unwrap();
            let e = grp.element_at(seed % grp.order());
            let n = grp.neg(&e).unwrap();
            prop_assert_eq!(grp.add(&e, &n).unwrap(), grp.zero());
            let ord = grp.element_order(&e).unwrap();
            prop_assert_eq!(grp.exponent() % ord, 0);
        }

        #[test]
        fn idx_arithmetic_matches_elementwise(factors in proptest::collection::vec(2u64..7, 1..4), a in 0u64..10_000, b in 0u64..10_000) {
            let grp = FiniteAbelianGroup::make_group(&factors).unwrap();
            let (a, b) = (a % grp.order(), b % grp.order());
            let (ea, eb) = (grp.element_at(a), grp.element_at(b));
            let sum = grp.add(&ea, &eb).unwrap();
            prop_assert_eq!(grp.index_of(&sum).unwrap(), grp.add_idx(a, b));
            prop_assert_eq!(grp.index_of(&grp.neg(&ea).unwrap()).unwrap(), grp.neg_idx(a));
            prop_assert_eq!(grp.element_order(&ea).unwrap(), grp.order_of_idx(a));
        }
    }
}
