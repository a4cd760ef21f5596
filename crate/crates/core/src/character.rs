//! One-dimensional characters of permutation groups.
//!
//! A character is stored as a full value table over the group's sorted
//! element list. Internally every value is a power of a fixed root of
//! unity `ζ_m`, so the table is an exponent vector; the full
//! multiplicativity check at construction is integer arithmetic, and the
//! cyclotomic values are materialized once.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::Limits;

/// Recipes for the characters the counting corollaries need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharacterSpec {
    /// `χ ≡ 1`.
    Trivial,
    /// The restriction of the alternating character of `S_d`: `+1` on even
    /// permutations, `−1` on odd ones.
    Sign,
    /// On a cyclic group of order `b`, the character with kernel of order
    /// exactly `a` (a divisor of `b`): `χ(gᵗ) = ζ_mᵗ` with `m = b/a` for
    /// the canonical generator `g`.
    Cyclic(usize),
    /// On a dihedral group of order `2b` with `b` odd: `+1` on the cyclic
    /// subgroup of order `b`, `−1` off it.
    Dihedral,
    /// The character with kernel exactly `R`, for `R ⊴ W` with cyclic
    /// quotient of order coprime to `|R|`: `χ(gᵗr) = ζ_mᵗ`.
    Kernel(PermGroup),
}

/// A one-dimensional character `χ: W → roots of unity`, stored as a total
/// value table over the group elements. Construction validates the full
/// `|W|²` multiplicativity table; a value that fails it never escapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    group: PermGroup,
    value_order: usize,
    exps: Vec<u32>,
    values: Vec<CycloNum>,
}

impl Character {
    /// Builds and validates a character from per-element exponents of
    /// `ζ_modulus`. The modulus is normalized down to the exact image
    /// order so the cyclotomic degree stays minimal.
    pub(crate) fn from_exponents(
        group: PermGroup,
        modulus: usize,
        exps_raw: Vec<u32>,
    ) -> Result<Character> {
        debug_assert_eq!(exps_raw.len(), group.order());
        let g = exps_raw
            .iter()
            .fold(modulus, |acc, &e| num_integer::gcd(acc, e as usize));
        let value_order = modulus / g;
        let exps: Vec<u32> = if g == modulus {
            vec![0; exps_raw.len()]
        } else {
            exps_raw.iter().map(|&e| e / g as u32).collect()
        };

        let identity_idx = group
            .index_of(&Permutation::identity(group.degree()))
            .expect("groups contain the identity");
        if exps[identity_idx] != 0 {
            return Err(Error::NotMultiplicative);
        }
        if value_order > 1 {
            // full multiplicativity table; for the constant character the
            // table is identically 1 = 1·1 and needs no enumeration
            let m = value_order as u64;
            let rank_to_idx = group.rank_index_table();
            let elements = group.elements();
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    let prod = a.times(b);
                    let k = rank_to_idx[prod.lehmer_rank()];
                    debug_assert!(k >= 0);
                    let want = (exps[i] as u64 + exps[j] as u64) % m;
                    if exps[k as usize] as u64 != want {
                        return Err(Error::NotMultiplicative);
                    }
                }
            }
        }

        let powers: Vec<CycloNum> = (0..value_order)
            .map(|t| CycloNum::zeta_pow(value_order, t as i64).expect("order >= 1"))
            .collect();
        let values = exps.iter().map(|&e| powers[e as usize].clone()).collect();
        Ok(Character {
            group,
            value_order,
            exps,
            values,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Every value is a `value_order`-th root of unity, and
    /// `value_order` is the exact order of the image.
    pub fn value_order(&self) -> usize {
        self.value_order
    }

    pub fn is_trivial(&self) -> bool {
        self.value_order == 1
    }

    /// The value on a group element, or `None` off the group.
    pub fn value_of(&self, p: &Permutation) -> Option<&CycloNum> {
        self.group.index_of(p).map(|i| &self.values[i])
    }

    /// Value table in element order (`group().elements()`).
    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    /// Exponent table: `χ(elements[i]) = ζ_{value_order}^{exp_at(i)}`.
    pub(crate) fn exp_at(&self, element_index: usize) -> u32 {
        self.exps[element_index]
    }

    /// The subgroup `{σ : χ(σ) = 1}`.
    pub fn kernel_of(&self) -> PermGroup {
        let degree = self.group.degree();
        let set: BTreeSet<Permutation> = self
            .group
            .elements()
            .iter()
            .zip(&self.exps)
            .filter(|&(_, &e)| e == 0)
            .map(|(p, _)| p.clone())
            .collect();
        let limits = Limits {
            max_degree: degree,
            max_group_order: set.len(),
            ..Limits::default()
        };
        PermGroup::from_elements(degree, set, &limits).expect("kernel is a subgroup")
    }

    /// `(1/|W|) Σ_σ χ(σ)`: `1` for the trivial character, `0` otherwise
    /// (orthogonality with the trivial character).
    pub fn mean_value(&self) -> Result<BigRational> {
        let mut sum = CycloNum::zero();
        for v in &self.values {
            sum = sum.add(v);
        }
        let mean = sum.scale(&BigRational::new(
            BigInt::from(1),
            BigInt::from(self.group.order() as i64),
        ));
        mean.as_rational()
    }
}

/// Constructs the character described by `spec` on `W`, validating the
/// spec's hypothesis and the resulting value table.
pub fn make_character(w: &PermGroup, spec: &CharacterSpec) -> Result<Character> {
    match spec {
        CharacterSpec::Trivial => {
            Character::from_exponents(w.clone(), 1, vec![0; w.order()])
        }
        CharacterSpec::Sign => {
            let exps = w
                .elements()
                .iter()
                .map(|e| if e.sign() == 1 { 0 } else { 1 })
                .collect();
            Character::from_exponents(w.clone(), 2, exps)
        }
        CharacterSpec::Cyclic(a) => {
            let c = w.classify();
            if !c.is_cyclic {
                return Err(Error::NotCyclic);
            }
            let b = c.order;
            if *a == 0 || b % a != 0 {
                return Err(Error::InvalidDivisor {
                    divisor: *a,
                    order: b,
                });
            }
            let m = b / a;
            let g = c.cyclic_generator.expect("cyclic groups have a generator");
            let mut exps = vec![0u32; w.order()];
            let mut acc = Permutation::identity(w.degree());
            for t in 0..b {
                let idx = w.index_of(&acc).expect("powers stay in the group");
                exps[idx] = (t % m) as u32;
                acc = acc.times(&g);
            }
            Character::from_exponents(w.clone(), m, exps)
        }
        CharacterSpec::Dihedral => {
            let c = w.classify();
            if !c.is_dihedral_2b_odd {
                return Err(Error::NotDihedralOdd);
            }
            // the cyclic subgroup of order b is exactly the set of
            // odd-order elements; everything off it is an involution
            let exps = w
                .elements()
                .iter()
                .map(|e| if e.order() % 2 == 1 { 0 } else { 1 })
                .collect();
            Character::from_exponents(w.clone(), 2, exps)
        }
        CharacterSpec::Kernel(r) => {
            let (m, g) = w.kernel_quotient_data(r)?;
            let mut coset_reps = Vec::with_capacity(m);
            let mut acc = Permutation::identity(w.degree());
            for _ in 0..m {
                coset_reps.push(acc.inverse());
                acc = acc.times(&g);
            }
            let exps = w
                .elements()
                .iter()
                .map(|e| {
                    let t = coset_reps
                        .iter()
                        .position(|ginv| r.contains(&ginv.times(e)))
                        .expect("cosets of the generator partition W");
                    t as u32
                })
                .collect();
            Character::from_exponents(w.clone(), m, exps)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn limits() -> Limits {
        Limits::default()
    }

    fn p(text: &str, d: usize) -> Permutation {
        Permutation::parse(text, d).unwrap()
    }

    fn group(d: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().map(|t| p(t, d)).collect();
        PermGroup::close(d, &gens, &limits()).unwrap()
    }

    #[test]
    fn trivial_character_is_all_ones() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let chi = make_character(&s3, &CharacterSpec::Trivial).unwrap();
        assert!(chi.is_trivial());
        assert!(chi.values().iter().all(|v| v.is_one()));
        assert_eq!(chi.mean_value().unwrap(), BigRational::one());
        assert_eq!(chi.kernel_of().order(), 6);
    }

    #[test]
    fn sign_character_on_s3() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let chi = make_character(&s3, &CharacterSpec::Sign).unwrap();
        assert_eq!(chi.value_order(), 2);
        assert_eq!(
            chi.value_of(&p("(1 2)", 3)).unwrap(),
            &CycloNum::from_integer(-1)
        );
        assert_eq!(chi.mean_value().unwrap(), BigRational::zero());
        let kernel = chi.kernel_of();
        assert_eq!(kernel.order(), 3);
        assert!(kernel.contains(&p("(1 2 3)", 3)));
    }

    #[test]
    fn cyclic_character_on_c4_with_kernel_two() {
        let c4 = group(4, &["(1 2 3 4)"]);
        let chi = make_character(&c4, &CharacterSpec::Cyclic(2)).unwrap();
        assert_eq!(
            chi.value_of(&p("(1 2 3 4)", 4)).unwrap(),
            &CycloNum::from_integer(-1)
        );
        let kernel = chi.kernel_of();
        assert_eq!(kernel.order(), 2);
        assert!(kernel.contains(&p("(1 3)(2 4)", 4)));
    }

    #[test]
    fn cyclic_character_degenerate_divisor() {
        let c3 = group(3, &["(1 2 3)"]);
        let chi = make_character(&c3, &CharacterSpec::Cyclic(3)).unwrap();
        assert!(chi.is_trivial());
    }

    #[test]
    fn cyclic_character_injective_on_c3() {
        let c3 = group(3, &["(1 2 3)"]);
        let chi = make_character(&c3, &CharacterSpec::Cyclic(1)).unwrap();
        assert_eq!(chi.value_order(), 3);
        assert_eq!(chi.kernel_of().order(), 1);
        assert_eq!(chi.mean_value().unwrap(), BigRational::zero());
    }

    #[test]
    fn cyclic_spec_rejects_non_cyclic_group() {
        let klein = group(4, &["(1 2)", "(3 4)"]);
        assert_eq!(
            make_character(&klein, &CharacterSpec::Cyclic(1)).unwrap_err(),
            Error::NotCyclic
        );
    }

    #[test]
    fn cyclic_spec_rejects_non_divisor() {
        let c4 = group(4, &["(1 2 3 4)"]);
        assert_eq!(
            make_character(&c4, &CharacterSpec::Cyclic(3)).unwrap_err(),
            Error::InvalidDivisor { divisor: 3, order: 4 }
        );
    }

    #[test]
    fn dihedral_character_on_s3_matches_sign() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let delta = make_character(&s3, &CharacterSpec::Dihedral).unwrap();
        let sign = make_character(&s3, &CharacterSpec::Sign).unwrap();
        assert_eq!(delta, sign);
        assert_eq!(delta.kernel_of().order(), 3);
    }

    #[test]
    fn dihedral_spec_rejects_c4() {
        let c4 = group(4, &["(1 2 3 4)"]);
        assert_eq!(
            make_character(&c4, &CharacterSpec::Dihedral).unwrap_err(),
            Error::NotDihedralOdd
        );
    }

    #[test]
    fn kernel_character_on_s3() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let a3 = group(3, &["(1 2 3)"]);
        let chi = make_character(&s3, &CharacterSpec::Kernel(a3.clone())).unwrap();
        assert_eq!(chi.kernel_of().elements(), a3.elements());
        assert_eq!(chi.mean_value().unwrap(), BigRational::zero());
    }

    #[test]
    fn kernel_character_on_c6() {
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        let r = group(6, &["(1 3 5)(2 4 6)"]);
        let chi = make_character(&c6, &CharacterSpec::Kernel(r.clone())).unwrap();
        assert_eq!(chi.value_order(), 2);
        assert_eq!(chi.kernel_of().elements(), r.elements());
    }

    #[test]
    fn kernel_character_invariant_under_generator_choice() {
        // any generating coset of the quotient yields the same kernel and
        // the same mean value
        let cases = [
            (group(3, &["(1 2 3)", "(1 2)"]), group(3, &["(1 2 3)"])),
            (group(6, &["(1 2 3 4 5 6)"]), group(6, &["(1 3 5)(2 4 6)"])),
            (group(6, &["(1 2 3 4 5 6)"]), group(6, &["(1 4)(2 5)(3 6)"])),
        ];
        for (w, r) in cases {
            let (m, _) = w.kernel_quotient_data(&r).unwrap();
            let reference = make_character(&w, &CharacterSpec::Kernel(r.clone())).unwrap();
            for g in w.elements() {
                // coset order of g in W/R
                let mut t = 1;
                let mut acc = g.clone();
                while !r.contains(&acc) {
                    acc = acc.times(g);
                    t += 1;
                }
                if t != m {
                    continue;
                }
                // rebuild the character for this generating coset
                let mut coset_reps = Vec::with_capacity(m);
                let mut power = Permutation::identity(w.degree());
                for _ in 0..m {
                    coset_reps.push(power.inverse());
                    power = power.times(g);
                }
                let exps: Vec<u32> = w
                    .elements()
                    .iter()
                    .map(|e| {
                        coset_reps
                            .iter()
                            .position(|ginv| r.contains(&ginv.times(e)))
                            .unwrap() as u32
                    })
                    .collect();
                let chi = Character::from_exponents(w.clone(), m, exps).unwrap();
                assert_eq!(chi.kernel_of().elements(), r.elements());
                assert_eq!(chi.mean_value().unwrap(), reference.mean_value().unwrap());
            }
        }
    }

    #[test]
    fn dihedral_kernel_contains_all_odd_order_subgroups() {
        // subgroups of these groups need at most two generators, so
        // closing every pair enumerates all subgroups
        for w in [group(3, &["(1 2 3)", "(1 2)"]), group(5, &["(1 2 3 4 5)", "(2 5)(3 4)"])] {
            let delta = make_character(&w, &CharacterSpec::Dihedral).unwrap();
            let h = delta.kernel_of();
            assert_eq!(h.order() * 2, w.order());
            for a in w.elements() {
                for b in w.elements() {
                    let sub =
                        PermGroup::close(w.degree(), &[a.clone(), b.clone()], &limits()).unwrap();
                    if sub.order() % 2 == 1 {
                        assert!(sub.is_subgroup_of(&h));
                    }
                }
            }
        }
    }

    #[test]
    fn value_powers_are_roots_of_unity() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        for spec in [CharacterSpec::Trivial, CharacterSpec::Sign, CharacterSpec::Dihedral] {
            let chi = make_character(&s3, &spec).unwrap();
            let order = s3.order() as u64;
            assert!(chi.values().iter().all(|v| v.pow(order).is_one()));
        }
    }
}
