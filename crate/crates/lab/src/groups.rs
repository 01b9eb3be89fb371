//! Enumeration of finite abelian groups by order.

use zerosum_core::FiniteAbelianGroup;

/// All abelian groups of the given order, one per isomorphism class, in
/// invariant-factor form.
pub fn abelian_groups_of_order(n: u64) -> Vec<FiniteAbelianGroup> {
    assert!(n >= 1);
    let mut out = vec![vec![]];
    let mut rem = n;
    let mut p = 2u64;
    while p * p <= rem {
        if rem.is_multiple_of(p) {
            let mut e = 0u32;
            while rem.is_multiple_of(p) {
                rem /= p;
                e += 1;
            }
            out = extend_with_prime(out, p, e);
        }
        p += 1;
    }
    if rem > 1 {
        out = extend_with_prime(out, rem, 1);
    }
    let mut groups: Vec<FiniteAbelianGroup> = out
        .into_iter()
        .map(|factors| FiniteAbelianGroup::make_group(&factors).expect("prime powers are >= 2"))
        .collect();
    groups.sort_by(|a, b| a.invariant_factors().cmp(b.invariant_factors()));
    groups.dedup();
    groups
}

/// All abelian groups with order in `[3, max_order]`.
pub fn abelian_groups_up_to(max_order: u64) -> Vec<FiniteAbelianGroup> {
    (3..=max_order).flat_map(abelian_groups_of_order).collect()
}

fn extend_with_prime(lists: Vec<Vec<u64>>, p: u64, e: u32) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for part in partitions(e) {
        for base in &lists {
            let mut factors = base.clone();
            for &k in &part {
                factors.push(p.pow(k));
            }
            out.push(factors);
        }
    }
    out
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_by_order() {
        assert_eq!(abelian_groups_of_order(1).len(), 1);
        assert_eq!(abelian_groups_of_order(12).len(), 2);
        assert_eq!(abelian_groups_of_order(16).len(), 5);
        assert_eq!(abelian_groups_of_order(8).len(), 3);
        assert_eq!(abelian_groups_of_order(30).len(), 1);
    }

    #[test]
    fn order_12_forms() {
        let got: Vec<Vec<u64>> = abelian_groups_of_order(12)
            .iter()
            .map(|g| g.invariant_factors().to_vec())
            .collect();
        assert_eq!(got, [vec![2, 6], vec![12]]);
    }
}
