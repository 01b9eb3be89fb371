//! Bounded sequence sweeps shared by the checks and the acceptance suite.

use zerosum_core::{FiniteAbelianGroup, GroupElement, Sequence};

/// Every nonempty zero-sum sequence over `subset` with `|B| <= bound`, in
/// canonical generation order.
pub fn zero_sum_sequences(
    group: &FiniteAbelianGroup,
    subset: &[GroupElement],
    bound: u64,
) -> Vec<Sequence> {
    let mut idx: Vec<u64> = subset
        .iter()
        .map(|e| group.index_of(e).expect("subset element"))
        .collect();
    idx.sort_unstable();
    idx.dedup();
    let mut out = Vec::new();
    rec(group, &idx, 0, 0, bound, &mut Vec::new(), &mut out);
    out
}

fn rec(
    group: &FiniteAbelianGroup,
    idx: &[u64],
    from: usize,
    sum: u64,
    left: u64,
    stack: &mut Vec<(u64, u64)>,
    out: &mut Vec<Sequence>,
) {
    if sum == 0 && !stack.is_empty() {
        out.push(Sequence::from_indexed(group, stack.clone()));
    }
    if left == 0 {
        return;
    }
    for (pos, &e) in idx.iter().enumerate().skip(from) {
        let mut acc = sum;
        for m in 1..=left {
            acc = group.add_idx(acc, e);
            stack.push((e, m));
            rec(group, idx, pos + 1, acc, left - m, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_counts() {
        let c3 = FiniteAbelianGroup::make_group(&[3]).unwrap();
        let all: Vec<GroupElement> = c3.elements().collect();
        let seqs = zero_sum_sequences(&c3, &all, 3);
        // every sequence is zero-sum and nonempty, each generated once
        assert!(seqs.iter().all(|s| s.is_zero_sum() && !s.is_empty()));
        let mut dedup = seqs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), seqs.len());
    }
}
