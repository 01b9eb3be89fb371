//! Core algorithms for the arithmetic of zero-sum sequences over finite
//! abelian groups: atom (minimal zero-sum sequence) enumeration, sets of
//! lengths, factorization distances and catenary degrees, and the derived
//! invariants built from them (distance sets, elasticities, daleth, cross
//! numbers, multiprogression structure).
//!
//! Everything in this crate is deterministic and allocation-only; IO, disk
//! caching, parallel sweep drivers and the CLI live in the companion crate.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod atoms;
pub mod error;
pub mod group;
pub mod invariants;
pub mod lengths;
pub mod sequence;
pub mod structure;

pub use atoms::AtomSet;
pub use error::{Error, Result};
pub use group::{FiniteAbelianGroup, GroupElement};
pub use lengths::{Factorization, LengthMemo, LengthSet};
pub use sequence::Sequence;

/// Guard values for the search and enumeration engines.
///
/// Every potentially explosive sweep checks one of these before running and
/// fails with [`Error::GuardExceeded`] naming the guard instead of silently
/// blowing up. The CLI maps each field to an override flag.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Cap on `|Z(B)|` during full factorization enumeration.
    pub max_factorizations: u64,
    /// Cap on the number of memo keys in a length-set memo table.
    pub memo_limit: u64,
    /// Cap on `|S|` for the subset-sum dynamic programs.
    pub max_subset_sum_len: u32,
    /// Cap on `|G|` for atom enumeration and related whole-group searches.
    pub max_enumeration_order: u64,
    /// Cap on `|G|` for sweeps over all subsets of `G`.
    pub max_subset_sweep_order: u32,
    /// Cap on the number of multisets visited by a bounded sequence sweep.
    pub max_multisets: u64,
    /// Cap on `k` for the k-th elasticity sweep.
    pub max_rho_k: u32,
    /// Cap on `|A(G_0)|` for elasticity and pair sweeps.
    pub max_sweep_atoms: u64,
    /// Cap on the AMP difference searched by `amp_decompositions`.
    pub max_amp_difference: u64,
    /// Cap on `max L - min L` for AMP decomposition searches.
    pub max_amp_span: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_factorizations: 1_000_000,
            memo_limit: 10_000_000,
            max_subset_sum_len: 64,
            max_enumeration_order: 128,
            max_subset_sweep_order: 16,
            max_multisets: 50_000_000,
            max_rho_k: 3,
            max_sweep_atoms: 20_000,
            max_amp_difference: 8,
            max_amp_span: 64,
        }
    }
}
