//! Invariant sweeps across whole families of groups: properties that the
//! unit tests spot-check are verified here over every group in range.

use zerosum_core::atoms::enumerate_atoms;
use zerosum_core::invariants::daleth;
use zerosum_core::{Error, GroupElement, Limits};
use zerosum_lab::groups::abelian_groups_up_to;

/// daleth(G) <= D(G) always, with equality exactly over the cyclic groups
/// and elementary 2-groups, across every group of order in [3, 16].
#[test]
fn daleth_meets_davenport_iff_cyclic_or_elementary_2() {
    let limits = Limits::default();
    for group in abelian_groups_up_to(16) {
        let all: Vec<GroupElement> = group.elements().collect();
        let atoms = enumerate_atoms(&group, &all, &limits).unwrap();
        let d = atoms.davenport();
        let value = match daleth(&atoms, &limits) {
            Ok(v) => v,
            Err(Error::UndefinedDaleth) => continue,
            Err(e) => panic!("daleth({}): {e}", group.name()),
        };
        assert!(value <= d, "{}", group.name());
        let expected = group.rank() <= 1 || group.is_elementary_2();
        assert_eq!(value == d, expected, "{}: daleth {value}, D {d}", group.name());
    }
}

/// Increasing the bound never increases a subset's observed distance gcd.
#[test]
fn delta_star_gcds_shrink_with_larger_bounds() {
    use zerosum_core::invariants::delta_star_bounded;
    let limits = Limits::default();
    for factors in [vec![6u64], vec![2, 4], vec![8]] {
        let group = zerosum_core::FiniteAbelianGroup::make_group(&factors).unwrap();
        let small = delta_star_bounded(&group, 10, &limits).unwrap();
        let large = delta_star_bounded(&group, 14, &limits).unwrap();
        for (subset, g_small) in &small.per_subset {
            if let Some((_, g_large)) = large.per_subset.iter().find(|(s, _)| s == subset) {
                assert!(g_large <= g_small, "{factors:?} {subset:?}");
            }
        }
    }
}
