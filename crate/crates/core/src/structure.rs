//! Structural classification of finite length sets (intervals, arithmetical
//! multiprogressions, almost arithmetical multiprogressions) and generators
//! for the closed-form families of length sets used by the verification
//! checks.

use crate::error::{invalid, Error, Result};
use crate::lengths::LengthSet;
use crate::Limits;
use alloc::vec::Vec;
use alloc::{format, vec};

/// An AMP structure on a set `L`: `L` is an interval of
/// `min L + period + difference * Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmpDescriptor {
    pub difference: u64,
    /// Period `D` with `{0, d} <= D <= [0, d]`, sorted.
    pub period: Vec<u64>,
    /// Maximal `l` with `min L + l * d` in `L`.
    pub length: u64,
    /// `min L`.
    pub offset: u64,
}

/// An AAMP structure: `L = shift + (initial u central u final)` where the
/// central part is an AMP with `min = 0`, `initial <= [-bound, -1]` and
/// `final <= max central + [1, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AampDescriptor {
    /// Structure of the central part (`offset` is 0 by construction).
    pub core: AmpDescriptor,
    /// The bound `M`.
    pub bound: u64,
    /// The shift `y`.
    pub shift: u64,
    /// Initial part, as negative offsets from the shift.
    pub initial: Vec<i64>,
    /// Final part, as offsets from the shift (all exceed `max central`).
    pub final_part: Vec<u64>,
}

/// True iff `L = [min L, max L]`.
pub fn is_interval(l: &LengthSet) -> bool {
    match (l.minimum(), l.maximum()) {
        (Some(a), Some(b)) => l.card() as u64 == b - a + 1,
        _ => false,
    }
}

fn check_period(difference: u64, period: &[u64]) -> Result<Vec<u64>> {
    if difference == 0 {
        return Err(invalid("AMP difference must be at least 1"));
    }
    let mut p = period.to_vec();
    p.sort_unstable();
    p.dedup();
    if p.first() != Some(&0) || p.last() != Some(&difference) {
        return Err(invalid("period must contain 0 and the difference"));
    }
    if p.iter().any(|&x| x > difference) {
        return Err(invalid("period entries must lie in [0, difference]"));
    }
    Ok(p)
}

/// Checks whether `L` is an AMP with the given difference and period:
/// `L = (min L + period + difference * Z) n [min L, max L]`.
pub fn is_amp(l: &LengthSet, difference: u64, period: &[u64]) -> Result<Option<AmpDescriptor>> {
    let period = check_period(difference, period)?;
    let (min, max) = match (l.minimum(), l.maximum()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(invalid("AMP test needs a nonempty set")),
    };
    // generate (min + period + d*Z) n [min, max]
    let mut expected = Vec::new();
    let mut base = min;
    'outer: loop {
        for &p in &period {
            let v = base + p;
            if v > max {
                if p == 0 {
                    break 'outer;
                }
                continue;
            }
            expected.push(v);
        }
        base += difference;
        if base > max {
            break;
        }
    }
    expected.sort_unstable();
    expected.dedup();
    if expected != l.values() {
        return Ok(None);
    }
    let mut length = 0;
    while l.contains(min + (length + 1) * difference) {
        length += 1;
    }
    Ok(Some(AmpDescriptor { difference, period, length, offset: min }))
}

/// Lists every `(difference, period)` pair with difference at most the
/// `max_amp_difference` guard for which `L` is an AMP, in canonical order
/// (difference ascending, then period lexicographic).
pub fn amp_decompositions(l: &LengthSet, limits: &Limits) -> Result<Vec<AmpDescriptor>> {
    let (min, max) = match (l.minimum(), l.maximum()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(invalid("AMP search needs a nonempty set")),
    };
    if max - min > limits.max_amp_span {
        return Err(Error::GuardExceeded { guard: "max_amp_span" });
    }
    let mut out = Vec::new();
    for d in 1..=limits.max_amp_difference {
        // periods: {0, d} plus any subset of [1, d-1]
        let interior = d - 1;
        for mask in 0..(1u64 << interior) {
            let mut period = vec![0u64];
            for b in 0..interior {
                if mask >> b & 1 == 1 {
                    period.push(b + 1);
                }
            }
            period.push(d);
            if let Some(desc) = is_amp(l, d, &period)? {
                out.push(desc);
            }
        }
    }
    Ok(out)
}

/// Searches for an AAMP split of `L` with the given difference, period and
/// bound `M`. Splits are highly non-unique; the first valid one under the
/// canonical order (shift ascending, then central part as long as possible)
/// is returned.
pub fn is_aamp(
    l: &LengthSet,
    difference: u64,
    period: &[u64],
    bound: u64,
) -> Result<Option<AampDescriptor>> {
    let period = check_period(difference, period)?;
    let (min, max) = match (l.minimum(), l.maximum()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(invalid("AAMP test needs a nonempty set")),
    };
    let residues: Vec<bool> = {
        let mut r = vec![false; difference as usize];
        for &p in &period {
            r[(p % difference) as usize] = true;
        }
        r
    };
    for &shift in l.values() {
        if shift - min > bound {
            break; // initial part would exceed [-M, -1]
        }
        // whole-set containment in shift + period + d*Z
        let contained = l.values().iter().all(|&x| {
            let rel = x as i64 - shift as i64;
            residues[rel.rem_euclid(difference as i64) as usize]
        });
        if !contained {
            continue;
        }
        let uppers: Vec<u64> = l
            .values()
            .iter()
            .copied()
            .filter(|&x| x >= shift && max - x <= bound)
            .collect();
        for &central_max in uppers.iter().rev() {
            let central: Vec<u64> = l
                .values()
                .iter()
                .copied()
                .filter(|&x| x >= shift && x <= central_max)
                .map(|x| x - shift)
                .collect();
            let central_set = LengthSet::from_values(central);
            if let Some(core) = is_amp(&central_set, difference, &period)? {
                let initial: Vec<i64> = l
                    .values()
                    .iter()
                    .copied()
                    .filter(|&x| x < shift)
                    .map(|x| x as i64 - shift as i64)
                    .collect();
                let final_part: Vec<u64> = l
                    .values()
                    .iter()
                    .copied()
                    .filter(|&x| x > central_max)
                    .map(|x| x - shift)
                    .collect();
                return Ok(Some(AampDescriptor {
                    core,
                    bound,
                    shift,
                    initial,
                    final_part,
                }));
            }
        }
    }
    Ok(None)
}

/// The closed-form families of length sets used by the checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `y + 2k + [0, k]`.
    TheoremA { y: u64, k: u64 },
    /// `y + 2k + 3*[0, k]`.
    Lemma72 { y: u64, k: u64 },
    /// `3k + 2*[0, 2k]`, `k >= 1`.
    Lemma54 { k: u64 },
    /// Both maximal-pair families at a given `n >= 2`, deduplicated:
    /// `{2, 2m, 2n-2m+2, 2n, 2n+1}` for `m in [1, n]` and
    /// `{2} u {2n-2i, 2n+1-2i : i in [0, (v-1)/2]}` for odd `v in [3, 2n-3]`.
    Prop53 { n: u64 },
    /// `y + 2k + base + 4*[0, k]` for one of the nine period-4 AMP cases.
    Amp4C6 { case: Amp4Case, y: u64, k: u64 },
}

/// The nine base sets of the period-4 AMP families over the order-6 cyclic
/// group, keyed by period then variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Amp4Case {
    P1A,
    P1B,
    P1C,
    P2A,
    P2B,
    P2C,
    P3A,
    P3B,
    P3C,
}

impl Amp4Case {
    pub fn parse(s: &str) -> Result<Amp4Case> {
        Ok(match s {
            "1a" => Amp4Case::P1A,
            "1b" => Amp4Case::P1B,
            "1c" => Amp4Case::P1C,
            "2a" => Amp4Case::P2A,
            "2b" => Amp4Case::P2B,
            "2c" => Amp4Case::P2C,
            "3a" => Amp4Case::P3A,
            "3b" => Amp4Case::P3B,
            "3c" => Amp4Case::P3C,
            _ => return Err(invalid(format!("unknown AMP case {s:?}"))),
        })
    }

    pub fn all() -> [Amp4Case; 9] {
        [
            Amp4Case::P1A,
            Amp4Case::P1B,
            Amp4Case::P1C,
            Amp4Case::P2A,
            Amp4Case::P2B,
            Amp4Case::P2C,
            Amp4Case::P3A,
            Amp4Case::P3B,
            Amp4Case::P3C,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Amp4Case::P1A => "1a",
            Amp4Case::P1B => "1b",
            Amp4Case::P1C => "1c",
            Amp4Case::P2A => "2a",
            Amp4Case::P2B => "2b",
            Amp4Case::P2C => "2c",
            Amp4Case::P3A => "3a",
            Amp4Case::P3B => "3b",
            Amp4Case::P3C => "3c",
        }
    }

    /// The base set added to `y + 2k + 4*[0,k]`.
    pub fn base(&self) -> &'static [u64] {
        match self {
            Amp4Case::P1A => &[4, 5, 6, 8],
            Amp4Case::P1B => &[4, 5, 6, 8, 9],
            Amp4Case::P1C => &[5, 6, 7, 9, 10, 11],
            Amp4Case::P2A => &[3, 4, 6, 7],
            Amp4Case::P2B => &[4, 5, 7, 8, 9],
            Amp4Case::P2C => &[5, 6, 8, 9, 10, 12],
            Amp4Case::P3A => &[3, 5, 6, 7],
            Amp4Case::P3B => &[4, 6, 7, 8, 10],
            Amp4Case::P3C => &[4, 6, 7, 8, 10, 11],
        }
    }

    /// The AMP period the family's members carry (for `k >= 1`).
    pub fn period(&self) -> &'static [u64] {
        match self {
            Amp4Case::P1A | Amp4Case::P1B | Amp4Case::P1C => &[0, 1, 2, 4],
            Amp4Case::P2A | Amp4Case::P2B | Amp4Case::P2C => &[0, 1, 3, 4],
            Amp4Case::P3A | Amp4Case::P3B | Amp4Case::P3C => &[0, 2, 3, 4],
        }
    }
}

impl Family {
    /// Parses a family by name and integer/string parameters, as used by
    /// the CLI (`amp4_c6` takes its case label as the first parameter).
    pub fn parse(name: &str, params: &[&str]) -> Result<Family> {
        let int = |s: &str| -> Result<u64> {
            s.trim()
                .parse()
                .map_err(|_| invalid(format!("bad family parameter {s:?}")))
        };
        let expect = |n: usize| -> Result<()> {
            if params.len() != n {
                return Err(invalid(format!(
                    "family {name} takes {n} parameter(s), got {}",
                    params.len()
                )));
            }
            Ok(())
        };
        match name {
            "theorem_a" => {
                expect(2)?;
                Ok(Family::TheoremA { y: int(params[0])?, k: int(params[1])? })
            }
            "lemma72" => {
                expect(2)?;
                Ok(Family::Lemma72 { y: int(params[0])?, k: int(params[1])? })
            }
            "lemma54" => {
                expect(1)?;
                Ok(Family::Lemma54 { k: int(params[0])? })
            }
            "prop53" => {
                expect(1)?;
                Ok(Family::Prop53 { n: int(params[0])? })
            }
            "amp4_c6" => {
                expect(3)?;
                Ok(Family::Amp4C6 {
                    case: Amp4Case::parse(params[0])?,
                    y: int(params[1])?,
                    k: int(params[2])?,
                })
            }
            _ => Err(invalid(format!("unknown family {name:?}"))),
        }
    }

    /// Evaluates the family to its set (or deduplicated sets for `prop53`).
    pub fn sets(&self) -> Result<Vec<LengthSet>> {
        match *self {
            Family::TheoremA { y, k } => {
                Ok(vec![LengthSet::from_values((0..=k).map(|j| y + 2 * k + j).collect())])
            }
            Family::Lemma72 { y, k } => Ok(vec![LengthSet::from_values(
                (0..=k).map(|j| y + 2 * k + 3 * j).collect(),
            )]),
            Family::Lemma54 { k } => {
                if k < 1 {
                    return Err(invalid("lemma54 needs k >= 1"));
                }
                Ok(vec![LengthSet::from_values(
                    (0..=2 * k).map(|j| 3 * k + 2 * j).collect(),
                )])
            }
            Family::Prop53 { n } => {
                if n < 2 {
                    return Err(invalid("prop53 needs n >= 2"));
                }
                let mut out = Vec::new();
                for m in 1..=n {
                    out.push(LengthSet::from_values(vec![
                        2,
                        2 * m,
                        2 * n - 2 * m + 2,
                        2 * n,
                        2 * n + 1,
                    ]));
                }
                let mut v = 3;
                while v + 3 <= 2 * n {
                    let mut values = vec![2];
                    for i in 0..=(v - 1) / 2 {
                        values.push(2 * n - 2 * i);
                        values.push(2 * n + 1 - 2 * i);
                    }
                    out.push(LengthSet::from_values(values));
                    v += 2;
                }
                out.sort();
                out.dedup();
                Ok(out)
            }
            Family::Amp4C6 { case, y, k } => {
                let mut values = Vec::new();
                for &b in case.base() {
                    for j in 0..=k {
                        values.push(y + 2 * k + b + 4 * j);
                    }
                }
                Ok(vec![LengthSet::from_values(values)])
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lset(values: &[u64]) -> LengthSet {
        LengthSet::from_values(values.to_vec())
    }

    #[test]
    fn interval_examples() {
        assert!(is_interval(&LengthSet::interval(4, 11)));
        assert!(!is_interval(&lset(&[2, 4, 5])));
        assert!(is_interval(&lset(&[7])));
    }

    #[test]
    fn is_amp_examples() {
        let desc = is_amp(&lset(&[2, 5, 6, 9]), 4, &[0, 3, 4]).unwrap().unwrap();
        assert_eq!(desc.length, 1);
        assert_eq!(desc.offset, 2);
        // a singleton is an AMP of length 0 for any valid period
        let desc = is_amp(&lset(&[7]), 4, &[0, 3, 4]).unwrap().unwrap();
        assert_eq!(desc.length, 0);
        assert!(is_amp(&lset(&[2, 4, 5]), 4, &[0, 3, 4]).unwrap().is_none());
        assert!(is_amp(&lset(&[2, 5]), 4, &[0, 1, 5]).is_err());
        assert!(is_amp(&lset(&[2, 5]), 0, &[0]).is_err());
    }

    #[test]
    fn amp_decomposition_examples() {
        let limits = Limits::default();
        let decs = amp_decompositions(&lset(&[2, 5]), &limits).unwrap();
        assert!(decs
            .iter()
            .any(|d| d.difference == 3 && d.period == [0, 3]));
        assert!(decs
            .iter()
            .any(|d| d.difference == 4 && d.period == [0, 3, 4]));
        let ints = amp_decompositions(&LengthSet::interval(3, 6), &limits).unwrap();
        assert!(ints
            .iter()
            .any(|d| d.difference == 1 && d.period == [0, 1]));
        let decs = amp_decompositions(&lset(&[3, 4, 7]), &limits).unwrap();
        assert!(decs
            .iter()
            .any(|d| d.difference == 4 && d.period == [0, 1, 4]));
    }

    #[test]
    fn amp_span_guard() {
        let wide = lset(&[0, 100]);
        assert!(matches!(
            amp_decompositions(&wide, &Limits::default()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn aamp_examples() {
        // every AMP is an AAMP with M = 0
        let l = lset(&[2, 5, 6, 9]);
        let desc = is_aamp(&l, 4, &[0, 3, 4], 0).unwrap().unwrap();
        assert!(desc.initial.is_empty());
        assert!(desc.final_part.is_empty());
        assert_eq!(desc.shift, 2);
        // {2,4,5} as d=1 AAMP with M=2: some valid split must exist
        let l = lset(&[2, 4, 5]);
        let desc = is_aamp(&l, 1, &[0, 1], 2).unwrap().unwrap();
        let mut rebuilt: Vec<u64> = desc
            .initial
            .iter()
            .map(|&x| (desc.shift as i64 + x) as u64)
            .collect();
        for v in 0..=desc.core.length {
            // period {0,1}: the central part is the full interval
            let _ = v;
        }
        let central: Vec<u64> = l
            .values()
            .iter()
            .copied()
            .filter(|&x| x >= desc.shift && x - desc.shift <= desc.core.length)
            .collect();
        rebuilt.extend(central);
        rebuilt.extend(desc.final_part.iter().map(|&x| desc.shift + x));
        rebuilt.sort_unstable();
        assert_eq!(rebuilt, l.values());
        // {2,5} with M = 0, d = 4, period {0,3,4}: truncated interval
        assert!(is_aamp(&lset(&[2, 5]), 4, &[0, 3, 4], 0).unwrap().is_some());
        // and a genuine failure
        assert!(is_aamp(&lset(&[2, 3]), 4, &[0, 4], 0).unwrap().is_none());
    }

    #[test]
    fn family_examples() {
        let f = Family::parse("theorem_a", &["0", "1"]).unwrap();
        assert_eq!(f.sets().unwrap(), [lset(&[2, 3])]);
        let f = Family::parse("lemma54", &["1"]).unwrap();
        assert_eq!(f.sets().unwrap(), [lset(&[3, 5, 7])]);
        let f = Family::parse("prop53", &["3"]).unwrap();
        assert_eq!(
            f.sets().unwrap(),
            [lset(&[2, 4, 5, 6, 7]), lset(&[2, 4, 6, 7]), lset(&[2, 6, 7])]
        );
        assert!(Family::parse("nonesuch", &[]).is_err());
        assert!(Family::parse("prop53", &["1"]).unwrap().sets().is_err());
    }

    #[test]
    fn lemma72_members_are_amps_with_difference_3() {
        for k in 1..4u64 {
            for y in [0u64, 2] {
                let l = &Family::Lemma72 { y, k }.sets().unwrap()[0];
                let desc = is_amp(l, 3, &[0, 3]).unwrap().unwrap();
                assert_eq!(desc.length, k);
            }
        }
    }

    #[test]
    fn amp4_families_have_their_period() {
        for case in Amp4Case::all() {
            for k in 1..3u64 {
                let l = &Family::Amp4C6 { case, y: 0, k }.sets().unwrap()[0];
                assert!(
                    is_amp(l, 4, case.period()).unwrap().is_some(),
                    "case {} k={k}: {l}",
                    case.name()
                );
            }
        }
    }

    #[test]
    fn prop53_members_avoid_low_odds() {
        for n in 2..6u64 {
            for l in (Family::Prop53 { n }).sets().unwrap() {
                for &v in l.values() {
                    if v != 2 {
                        assert!((4..=2 * n + 1).contains(&v), "n={n}: {l}");
                    }
                }
            }
        }
    }
}
