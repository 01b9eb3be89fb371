//! Witness catalog: the explicit sequences the verification checks work
//! with, constructed once in invariant-factor coordinates.
//!
//! Element names follow the standard basis conventions: over the rank-5
//! elementary 2-group, `e_I` is the sum of the basis vectors indexed by
//! `I`, `e0 = e_{[1,5]}`, `U_I = e_I * prod_{i in I} e_i`, and
//! `V_I = e_I * e0 * prod_{i not in I} e_i`.

use zerosum_core::{FiniteAbelianGroup, GroupElement, Sequence};

/// The rank-5 elementary 2-group with its fixed basis.
pub struct C25 {
    pub group: FiniteAbelianGroup,
}

impl C25 {
    pub fn new() -> C25 {
        C25 { group: FiniteAbelianGroup::make_group(&[2, 2, 2, 2, 2]).unwrap() }
    }

    /// `e_I` for 1-based index set `I`; `e(&[])` is zero, `e(&[1,..,5])` is `e0`.
    pub fn e(&self, idx: &[usize]) -> GroupElement {
        let mut coords = [0u64; 5];
        for &i in idx {
            coords[i - 1] ^= 1;
        }
        self.group.element(&coords).unwrap()
    }

    pub fn e0(&self) -> GroupElement {
        self.e(&[1, 2, 3, 4, 5])
    }

    fn seq(&self, parts: &[(GroupElement, u64)]) -> Sequence {
        Sequence::new(&self.group, parts).unwrap()
    }

    /// `U_I = e_I prod_{i in I} e_i`.
    pub fn u_of(&self, idx: &[usize]) -> Sequence {
        let mut parts = vec![(self.e(idx), 1)];
        for &i in idx {
            parts.push((self.e(&[i]), 1));
        }
        self.seq(&parts)
    }

    /// `V_I = e_I e0 prod_{i not in I} e_i`.
    pub fn v_of(&self, idx: &[usize]) -> Sequence {
        let mut parts = vec![(self.e(idx), 1), (self.e0(), 1)];
        for i in 1..=5 {
            if !idx.contains(&i) {
                parts.push((self.e(&[i]), 1));
            }
        }
        self.seq(&parts)
    }

    /// `U = e0 e1 ... e5`.
    pub fn u(&self) -> Sequence {
        self.u_of(&[1, 2, 3, 4, 5])
    }

    /// `U^k`.
    pub fn u_pow(&self, k: u64) -> Sequence {
        let mut parts = vec![(self.e0(), k)];
        for i in 1..=5 {
            parts.push((self.e(&[i]), k));
        }
        self.seq(&parts)
    }

    /// `V1 = e1 e2 e3 e4 e_{345} e_{125}`.
    pub fn v1(&self) -> Sequence {
        self.seq(&[
            (self.e(&[1]), 1),
            (self.e(&[2]), 1),
            (self.e(&[3]), 1),
            (self.e(&[4]), 1),
            (self.e(&[3, 4, 5]), 1),
            (self.e(&[1, 2, 5]), 1),
        ])
    }

    /// `V2 = e1 e_{12} e3 e4 e5 e_{2345}`.
    pub fn v2(&self) -> Sequence {
        self.seq(&[
            (self.e(&[1]), 1),
            (self.e(&[1, 2]), 1),
            (self.e(&[3]), 1),
            (self.e(&[4]), 1),
            (self.e(&[5]), 1),
            (self.e(&[2, 3, 4, 5]), 1),
        ])
    }

    /// `U1' = e_{1234} e1 e2 e3 e4`.
    pub fn u1p(&self) -> Sequence {
        self.u_of(&[1, 2, 3, 4])
    }

    /// `U2' = e1 e2 e_{13} e_{24} e_{34}`.
    pub fn u2p(&self) -> Sequence {
        self.seq(&[
            (self.e(&[1]), 1),
            (self.e(&[2]), 1),
            (self.e(&[1, 3]), 1),
            (self.e(&[2, 4]), 1),
            (self.e(&[3, 4]), 1),
        ])
    }

    /// `U3' = e_{12} e_{13} e_{24} e3 e4`.
    pub fn u3p(&self) -> Sequence {
        self.seq(&[
            (self.e(&[1, 2]), 1),
            (self.e(&[1, 3]), 1),
            (self.e(&[2, 4]), 1),
            (self.e(&[3]), 1),
            (self.e(&[4]), 1),
        ])
    }

    /// `U4' = e_{12} e_{13} e_{24} e_{34}`.
    pub fn u4p(&self) -> Sequence {
        self.seq(&[
            (self.e(&[1, 2]), 1),
            (self.e(&[1, 3]), 1),
            (self.e(&[2, 4]), 1),
            (self.e(&[3, 4]), 1),
        ])
    }

    /// `A1 = U^2 U_{12}`, `A2 = U^2 U_{1234}`, `A3 = U^3 U_{12}`,
    /// `A4 = U^3 V_{12}`: the four period-4 seed products.
    pub fn a1(&self) -> Sequence {
        self.u_pow(2).mul(&self.u_of(&[1, 2])).unwrap()
    }

    pub fn a2(&self) -> Sequence {
        self.u_pow(2).mul(&self.u_of(&[1, 2, 3, 4])).unwrap()
    }

    pub fn a3(&self) -> Sequence {
        self.u_pow(3).mul(&self.u_of(&[1, 2])).unwrap()
    }

    pub fn a4(&self) -> Sequence {
        self.u_pow(3).mul(&self.v_of(&[1, 2])).unwrap()
    }

    /// `W = e0 e_{12} e_{34} e5`.
    pub fn w_pair(&self) -> Sequence {
        self.seq(&[
            (self.e0(), 1),
            (self.e(&[1, 2]), 1),
            (self.e(&[3, 4]), 1),
            (self.e(&[5]), 1),
        ])
    }

    /// `W = e1 e2 e3 e4 e_{125} e_{345}`.
    pub fn w_triple(&self) -> Sequence {
        self.seq(&[
            (self.e(&[1]), 1),
            (self.e(&[2]), 1),
            (self.e(&[3]), 1),
            (self.e(&[4]), 1),
            (self.e(&[1, 2, 5]), 1),
            (self.e(&[3, 4, 5]), 1),
        ])
    }

    /// `(e1 e2 e_{12})^2`, realizing `{2,3}`.
    pub fn b23(&self) -> Sequence {
        self.seq(&[(self.e(&[1]), 2), (self.e(&[2]), 2), (self.e(&[1, 2]), 2)])
    }

    /// Companion to a reduced sequence over `{g, -g, 3g}`:
    /// `U^{2r} ((e1+e2+e3)(e4+e5+e0))^t prod_{i<=s} e_i^2`. The two factors
    /// of the middle atom coincide (`e4+e5+e0 = e_{123}`), so it is
    /// `e_{123}^2`.
    pub fn companion(&self, r: u64, t: u64, s: u64) -> Sequence {
        debug_assert_eq!(
            self.group
                .add(
                    &self.group.add(&self.e(&[4]), &self.e(&[5])).unwrap(),
                    &self.e0()
                )
                .unwrap(),
            self.e(&[1, 2, 3])
        );
        let mut out = self.u_pow(2 * r);
        out = out.mul(&self.seq(&[(self.e(&[1, 2, 3]), 2 * t)])).unwrap();
        for i in 1..=s {
            out = out.mul(&self.seq(&[(self.e(&[i as usize]), 2)])).unwrap();
        }
        out
    }
}

impl Default for C25 {
    fn default() -> Self {
        Self::new()
    }
}

/// The order-6 cyclic group with generator `g = (1)`.
pub struct C6 {
    pub group: FiniteAbelianGroup,
}

impl C6 {
    pub fn new() -> C6 {
        C6 { group: FiniteAbelianGroup::make_group(&[6]).unwrap() }
    }

    /// Builds a sequence from `(coefficient, multiplicity)` pairs where the
    /// element is `coefficient * g`.
    pub fn seq(&self, parts: &[(i64, u64)]) -> Sequence {
        let pairs: Vec<(GroupElement, u64)> = parts
            .iter()
            .map(|&(c, m)| (self.group.element_signed(&[c]).unwrap(), m))
            .collect();
        Sequence::new(&self.group, &pairs).unwrap()
    }

    /// The realization of the period-4 AMP family `case` at shift 0 and the
    /// given `k`, as a zero-sum sequence over `{g, -g, 2g, 4g}`.
    pub fn amp4_witness(&self, case: zerosum_core::structure::Amp4Case, k: u64) -> Sequence {
        use zerosum_core::structure::Amp4Case::*;
        match case {
            P1A => self.seq(&[(2, 2), (1, 6 * k + 6), (-1, 6 * k + 10)]),
            P1B => self.seq(&[(2, 1), (4, 1), (1, 6 * k + 8), (-1, 6 * k + 8)]),
            P1C => self.seq(&[(2, 2), (1, 6 * k + 12), (-1, 6 * k + 10)]),
            P2A => self.seq(&[(2, 1), (4, 1), (1, 6 * k + 6), (-1, 6 * k + 6)]),
            P2B => self.seq(&[(2, 2), (1, 6 * k + 10), (-1, 6 * k + 8)]),
            P2C => self.seq(&[(2, 2), (1, 6 * k + 10), (-1, 6 * k + 14)]),
            P3A => self.seq(&[(2, 2), (1, 6 * k + 8), (-1, 6 * k + 6)]),
            P3B => self.seq(&[(2, 2), (1, 6 * k + 8), (-1, 6 * k + 12)]),
            P3C => self.seq(&[(2, 1), (4, 1), (1, 6 * k + 10), (-1, 6 * k + 10)]),
        }
    }

    /// The five `(2g) g^{v+4} (-g)^{w+2}` realizations of the period-4 seed
    /// sets, paired with their length sets.
    pub fn period4_seeds(&self) -> Vec<(Sequence, Vec<u64>)> {
        let mk = |v: u64, w: u64| self.seq(&[(2, 1), (1, v + 4), (-1, w + 2)]);
        vec![
            (mk(2, 6), vec![3, 4, 7]),
            (mk(6, 4), vec![3, 6, 7]),
            (mk(8, 6), vec![4, 5, 8, 9]),
            (mk(6, 10), vec![4, 7, 8, 11]),
            (mk(12, 10), vec![5, 8, 9, 12, 13]),
        ]
    }
}

impl Default for C6 {
    fn default() -> Self {
        Self::new()
    }
}

/// The rank-3 elementary 3-group with its fixed basis.
pub struct C33 {
    pub group: FiniteAbelianGroup,
}

impl C33 {
    pub fn new() -> C33 {
        C33 { group: FiniteAbelianGroup::make_group(&[3, 3, 3]).unwrap() }
    }

    /// `U = e1^2 e2^2 e3^2 (e1+e2+e3)`.
    pub fn u(&self) -> Sequence {
        let g = &self.group;
        Sequence::new(
            g,
            &[
                (g.element(&[1, 0, 0]).unwrap(), 2),
                (g.element(&[0, 1, 0]).unwrap(), 2),
                (g.element(&[0, 0, 1]).unwrap(), 2),
                (g.element(&[1, 1, 1]).unwrap(), 1),
            ],
        )
        .unwrap()
    }

    pub fn u_pow(&self, k: u64) -> Sequence {
        let mut out = self.u();
        for _ in 1..k {
            out = out.mul(&self.u()).unwrap();
        }
        out
    }
}

impl Default for C33 {
    fn default() -> Self {
        Self::new()
    }
}

/// The square of the order-4 cyclic group with its fixed basis.
pub struct C44 {
    pub group: FiniteAbelianGroup,
}

impl C44 {
    pub fn new() -> C44 {
        C44 { group: FiniteAbelianGroup::make_group(&[4, 4]).unwrap() }
    }

    /// `U = e2^3 e1 (e1+e2) (e1+2e2)^2`, the atom whose mirror product has
    /// the full interval `[2, 7]` as its length set.
    pub fn u(&self) -> Sequence {
        let g = &self.group;
        Sequence::new(
            g,
            &[
                (g.element(&[0, 1]).unwrap(), 3),
                (g.element(&[1, 0]).unwrap(), 1),
                (g.element(&[1, 1]).unwrap(), 1),
                (g.element(&[1, 2]).unwrap(), 2),
            ],
        )
        .unwrap()
    }
}

impl Default for C44 {
    fn default() -> Self {
        Self::new()
    }
}

/// The direct sum of cyclic groups of orders 6 and 8 (invariant factors
/// `(2, 24)`) with a basis `(e1, e2)` of orders 6 and 8, carrying the
/// rank-2 witness atom for the maximal-pair length-set memberships.
pub struct C6C8 {
    pub group: FiniteAbelianGroup,
    pub n1: u64,
    pub n2: u64,
}

impl C6C8 {
    pub fn new() -> C6C8 {
        C6C8 {
            group: FiniteAbelianGroup::make_group(&[6, 8]).unwrap(),
            n1: 6,
            n2: 8,
        }
    }

    /// `e1`, of order 6.
    pub fn e1(&self) -> GroupElement {
        self.group.element(&[1, 4]).unwrap()
    }

    /// `e2`, of order 8.
    pub fn e2(&self) -> GroupElement {
        self.group.element(&[0, 3]).unwrap()
    }

    fn combo(&self, a: i64, b: i64) -> GroupElement {
        // a*e1 + b*e2 in (2, 24) coordinates
        let e1 = [1i64, 4];
        let e2 = [0i64, 3];
        self.group
            .element_signed(&[a * e1[0] + b * e2[0], a * e1[1] + b * e2[1]])
            .unwrap()
    }

    /// `V = e2^{n2-1} e1^{n1-3} (e1 + m e2)^2 (e1 + e2)` with `m = n2/2`.
    pub fn v(&self) -> Sequence {
        let m = (self.n2 / 2) as i64;
        Sequence::new(
            &self.group,
            &[
                (self.e2(), self.n2 - 1),
                (self.e1(), self.n1 - 3),
                (self.combo(1, m), 2),
                (self.combo(1, 1), 1),
            ],
        )
        .unwrap()
    }

    /// The displayed seed atoms, paired with the factorization length each
    /// one drives when completed with `h(-h)` pairs; lengths 2 and
    /// `n1+n2-1` come from `{V, -V}` and the all-pairs factorization.
    pub fn seed_atoms(&self) -> Vec<(Sequence, u64)> {
        let m = (self.n2 / 2) as i64;
        let (n1, n2) = (self.n1, self.n2);
        let seq = |parts: &[(GroupElement, u64)]| Sequence::new(&self.group, parts).unwrap();
        vec![
            // (e1+e2)(-e1)(-e2) -> length n1+n2-2
            (
                seq(&[(self.combo(1, 1), 1), (self.combo(-1, 0), 1), (self.combo(0, -1), 1)]),
                n1 + n2 - 2,
            ),
            // (-e2) e1^{n1-3} (e1+m e2)^2 (e1+e2) -> length n2
            (
                seq(&[
                    (self.combo(0, -1), 1),
                    (self.e1(), n1 - 3),
                    (self.combo(1, m), 2),
                    (self.combo(1, 1), 1),
                ]),
                n2,
            ),
            // (e1+m e2)^2 (-e1)^2 -> length n1+n2-3
            (
                seq(&[(self.combo(1, m), 2), (self.combo(-1, 0), 2)]),
                n1 + n2 - 3,
            ),
            // (e1+m e2)(-e1-e2)(-e2)^{m-1} -> length n1+m
            (
                seq(&[
                    (self.combo(1, m), 1),
                    (self.combo(-1, -1), 1),
                    (self.combo(0, -1), m as u64 - 1),
                ]),
                n1 + self.n2 / 2,
            ),
            // (e1+m e2)(-e1) e2^m -> length n1+m-1
            (
                seq(&[
                    (self.combo(1, m), 1),
                    (self.combo(-1, 0), 1),
                    (self.e2(), m as u64),
                ]),
                n1 + self.n2 / 2 - 1,
            ),
            // (e1+m e2)(-e1-e2) e2^{m+1} -> length n1+m-2
            (
                seq(&[
                    (self.combo(1, m), 1),
                    (self.combo(-1, -1), 1),
                    (self.e2(), m as u64 + 1),
                ]),
                n1 + self.n2 / 2 - 2,
            ),
        ]
    }

    /// The claimed length memberships of `L(V(-V))`.
    pub fn claimed_lengths(&self) -> Vec<u64> {
        let (n1, n2, m) = (self.n1, self.n2, self.n2 / 2);
        let mut v = vec![
            2,
            n1 + m - 2,
            n1 + m - 1,
            n1 + m,
            n2,
            n1 + n2 - 3,
            n1 + n2 - 2,
            n1 + n2 - 1,
        ];
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl Default for C6C8 {
    fn default() -> Self {
        Self::new()
    }
}

/// The two closed forms of the maximal atoms over a group
/// `C2 + C_{2n}`: `g^{2n-1} h (g-h)` for `g` of order `2n` and `h`
/// outside `<g>`, and `e g^v (g+e)^{2n-v}` for odd `v in [3, 2n-3]` with
/// `e` of order 2 outside `<g>`. Returned sorted and deduplicated.
pub fn c2_c2n_maximal_atoms(group: &FiniteAbelianGroup) -> Vec<Sequence> {
    let two_n = group.exponent();
    let mut out = Vec::new();
    let in_span = |g: &GroupElement, h: &GroupElement| -> bool {
        let mut acc = group.zero();
        for _ in 0..two_n {
            acc = group.add(&acc, g).unwrap();
            if &acc == h {
                return true;
            }
        }
        false
    };
    for g in group.elements() {
        if group.element_order(&g).unwrap() != two_n {
            continue;
        }
        for h in group.elements() {
            if h == group.zero() || in_span(&g, &h) {
                continue;
            }
            let gmh = group.add(&g, &group.neg(&h).unwrap()).unwrap();
            out.push(
                Sequence::new(group, &[(g.clone(), two_n - 1), (h.clone(), 1), (gmh, 1)])
                    .unwrap(),
            );
            if group.element_order(&h).unwrap() == 2 {
                let mut v = 3;
                while v + 3 <= two_n {
                    let gpe = group.add(&g, &h).unwrap();
                    out.push(
                        Sequence::new(
                            group,
                            &[(h.clone(), 1), (g.clone(), v), (gpe, two_n - v)],
                        )
                        .unwrap(),
                    );
                    v += 2;
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c25_witnesses_are_atoms() {
        let c = C25::new();
        for s in [c.u(), c.v1(), c.v2(), c.u1p(), c.u2p(), c.u3p(), c.u4p()] {
            assert!(s.is_atom().unwrap(), "{s}");
        }
        for idx in [vec![1, 2], vec![1, 2, 3], vec![1, 2, 3, 4]] {
            assert!(c.u_of(&idx).is_atom().unwrap());
            assert!(c.v_of(&idx).is_atom().unwrap());
        }
        assert!(c.w_pair().is_atom().unwrap());
        assert!(c.w_triple().is_atom().unwrap());
    }

    #[test]
    fn amp4_witnesses_are_zero_sum() {
        let c = C6::new();
        for case in zerosum_core::structure::Amp4Case::all() {
            for k in 0..3 {
                assert!(c.amp4_witness(case, k).is_zero_sum(), "{} k={k}", case.name());
            }
        }
    }

    #[test]
    fn c6c8_v_is_an_atom_of_length_13() {
        let w = C6C8::new();
        assert_eq!(w.group.invariant_factors(), &[2, 24]);
        assert_eq!(w.group.element_order(&w.e1()).unwrap(), 6);
        assert_eq!(w.group.element_order(&w.e2()).unwrap(), 8);
        let v = w.v();
        assert_eq!(v.len(), 13);
        assert!(v.is_atom().unwrap());
        for (seed, _) in w.seed_atoms() {
            assert!(seed.is_atom().unwrap(), "{seed}");
        }
    }

    #[test]
    fn c2_c2n_forms_count_at_n2() {
        let g = FiniteAbelianGroup::make_group(&[2, 4]).unwrap();
        assert_eq!(c2_c2n_maximal_atoms(&g).len(), 8);
    }
}
