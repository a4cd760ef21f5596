//! Coset actions, tensor products of induced monomial representations,
//! their orbit decomposition, and the identities that certify it.
//!
//! The induced monomial representation of `S_d` attached to `(W, χ)` is
//! never materialized as matrices: its basis is labeled by the canonical
//! left transversal of `W`, a group element `ζ` acts by permuting labels
//! via `ζ·rep(i) = rep(j)·σ` and scaling by `χ(σ)`. The pair
//! (label permutation, cocycle value) is the whole structure.
//!
//! `decompose` splits the tensor product of several such representations
//! into transitive constituents: one summand per `S_d`-orbit of label
//! tuples, carrying the orbit's stabilizer and the one-dimensional
//! character `ψ` obtained by restricting the product cocycle to it. The
//! master identity equates the k-fold internal product of cycle indices
//! with the sum of the summands' indices, and specializing all power sums
//! to 1 turns it into an orbit count certified by two independent paths.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use crate::character::Character;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::group::{intersect, PermGroup};
use crate::perm::{factorial, symmetric_generators, Permutation};
use crate::zpoly::{
    cycle_index, coefficient_sum, internal_product_multi, CycleIndexPoly, VarPoly,
};
use crate::Limits;

/// The canonical left coset space of `W` in `S_d`: ordered transversal,
/// the reverse index, and an `S_d`-wide lookup table from any element to
/// the index of its coset.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    group: PermGroup,
    transversal: Vec<Permutation>,
    index_of: BTreeMap<Permutation, usize>,
    coset_of_rank: Vec<u32>,
}

impl CosetSpace {
    pub fn new(group: PermGroup) -> CosetSpace {
        let transversal = group.left_transversal();
        let index_of: BTreeMap<Permutation, usize> = transversal
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let mut coset_of_rank = vec![0u32; factorial(group.degree())];
        for (i, rep) in transversal.iter().enumerate() {
            for w in group.elements() {
                coset_of_rank[rep.times(w).lehmer_rank()] = i as u32;
            }
        }
        CosetSpace {
            group,
            transversal,
            index_of,
            coset_of_rank,
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Canonical representatives, sorted; `transversal()[0]` is the
    /// identity, representing `W` itself.
    pub fn transversal(&self) -> &[Permutation] {
        &self.transversal
    }

    /// Number of cosets `d!/|W|`.
    pub fn size(&self) -> usize {
        self.transversal.len()
    }

    /// Position of a canonical representative.
    pub fn index_of(&self, rep: &Permutation) -> Option<usize> {
        self.index_of.get(rep).copied()
    }

    /// Index of the coset containing an arbitrary element of `S_d`.
    pub fn coset_index(&self, p: &Permutation) -> usize {
        self.coset_of_rank[p.lehmer_rank()] as usize
    }

    /// The coset action: `ζ·rep(i) = rep(j)·σ` for unique `j` and
    /// `σ ∈ W`; returns `(j, σ)`.
    pub fn coset_action(&self, zeta: &Permutation, i: usize) -> Result<(usize, Permutation)> {
        if zeta.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.group.degree(),
                found: zeta.degree(),
            });
        }
        if i >= self.transversal.len() {
            return Err(Error::Parse(String::from("coset index out of range")));
        }
        let moved = zeta.times(&self.transversal[i]);
        let j = self.coset_of_rank[moved.lehmer_rank()] as usize;
        let sigma = self.transversal[j].inverse().times(&moved);
        debug_assert!(self.group.contains(&sigma));
        Ok((j, sigma))
    }
}

/// The tensor product of the induced monomial representations attached to
/// `(W_1, χ_1), …, (W_k, χ_k)` over a common `S_d`, presented through its
/// label set `I_1 × ⋯ × I_k`.
#[derive(Debug, Clone)]
pub struct ProductSpec {
    degree: usize,
    factors: Vec<(CosetSpace, Character)>,
}

/// One transitive constituent of the decomposition: the orbit of a label
/// tuple, its stabilizer, and the restriction `ψ` of the product cocycle.
#[derive(Debug, Clone)]
pub struct OrbitSummand {
    rep_indices: Vec<usize>,
    representative: Vec<Permutation>,
    orbit_size: usize,
    stabilizer: PermGroup,
    psi: Character,
    psi_trivial: bool,
}

impl OrbitSummand {
    /// Transversal indices of the lexicographically least tuple in the
    /// orbit.
    pub fn rep_indices(&self) -> &[usize] {
        &self.rep_indices
    }

    /// The representative tuple `(ω_1,…,ω_k)` itself.
    pub fn representative(&self) -> &[Permutation] {
        &self.representative
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    /// `ω_1W_1ω_1⁻¹ ∩ ⋯ ∩ ω_kW_kω_k⁻¹`.
    pub fn stabilizer(&self) -> &PermGroup {
        &self.stabilizer
    }

    /// The one-dimensional character of the stabilizer restricting the
    /// product cocycle.
    pub fn psi(&self) -> &Character {
        &self.psi
    }

    pub fn psi_trivial(&self) -> bool {
        self.psi_trivial
    }
}

/// The two sides of the master identity, returned for test surfacing;
/// `equal` must be true for every feasible spec.
#[derive(Debug, Clone)]
pub struct MasterIdentityCheck {
    pub lhs: CycleIndexPoly,
    pub rhs: CycleIndexPoly,
    pub equal: bool,
}

impl ProductSpec {
    /// Builds the product from the factor characters; each character
    /// carries its group. Requires `k ≥ 1` and a common degree.
    pub fn new(characters: Vec<Character>) -> Result<ProductSpec> {
        let Some(first) = characters.first() else {
            return Err(Error::Parse(String::from("need at least one factor")));
        };
        let degree = first.group().degree();
        for chi in &characters {
            if chi.group().degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: chi.group().degree(),
                });
            }
        }
        let factors = characters
            .into_iter()
            .map(|chi| (CosetSpace::new(chi.group().clone()), chi))
            .collect();
        Ok(ProductSpec { degree, factors })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[(CosetSpace, Character)] {
        &self.factors
    }

    /// `Π_m d!/|W_m|`, the number of label tuples.
    pub fn orbit_space_size(&self) -> u128 {
        self.factors
            .iter()
            .map(|(space, _)| space.size() as u128)
            .product()
    }

    /// Component-wise coset action plus the product cocycle
    /// `β = Π_m χ_m(σ_m)`.
    pub fn product_action(
        &self,
        zeta: &Permutation,
        indices: &[usize],
    ) -> Result<(Vec<usize>, CycloNum)> {
        if indices.len() != self.factors.len() {
            return Err(Error::Parse(String::from("tuple arity mismatch")));
        }
        let mut moved = Vec::with_capacity(indices.len());
        let mut beta = CycloNum::one();
        for ((space, chi), &i) in self.factors.iter().zip(indices) {
            let (j, sigma) = space.coset_action(zeta, i)?;
            beta = beta.mul(chi.value_of(&sigma).expect("sigma lies in W"));
            moved.push(j);
        }
        Ok((moved, beta))
    }

    fn strides(&self) -> (Vec<usize>, usize) {
        let sizes: Vec<usize> = self.factors.iter().map(|(s, _)| s.size()).collect();
        let mut strides = vec![1usize; sizes.len()];
        for m in (0..sizes.len().saturating_sub(1)).rev() {
            strides[m] = strides[m + 1] * sizes[m + 1];
        }
        let total = strides[0] * sizes[0];
        (strides, total)
    }

    /// Orbit decomposition of the label set under the product action of
    /// `S_d`, one summand per orbit, sorted by (lex-least) representative.
    pub fn decompose(&self, limits: &Limits) -> Result<Vec<OrbitSummand>> {
        let size = self.orbit_space_size();
        if size > limits.max_orbit_space as u128 {
            return Err(Error::BoundExceeded {
                what: "orbit space",
                size,
                limit: limits.max_orbit_space,
            });
        }
        let (strides, total) = self.strides();
        let gens = symmetric_generators(self.degree);
        // label action tables per generator and factor
        let tables: Vec<Vec<Vec<u32>>> = gens
            .iter()
            .map(|g| {
                self.factors
                    .iter()
                    .map(|(space, _)| {
                        space
                            .transversal()
                            .iter()
                            .map(|rep| space.coset_index(&g.times(rep)) as u32)
                            .collect()
                    })
                    .collect()
            })
            .collect();

        let decode = |code: usize| -> Vec<usize> {
            strides.iter().zip(self.factors.iter()).map(|(&st, (space, _))| {
                code / st % space.size()
            }).collect()
        };

        let mut visited = vec![false; total];
        let mut summands = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..total {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            queue.push_back(start);
            let mut orbit_size = 0usize;
            while let Some(code) = queue.pop_front() {
                orbit_size += 1;
                for per_factor in &tables {
                    let mut next = 0usize;
                    let mut rest = code;
                    for (m, &st) in strides.iter().enumerate() {
                        let idx = rest / st;
                        rest %= st;
                        next += per_factor[m][idx] as usize * st;
                    }
                    if !visited[next] {
                        visited[next] = true;
                        queue.push_back(next);
                    }
                }
            }
            summands.push(self.build_summand(decode(start), orbit_size)?);
        }
        Ok(summands)
    }

    fn build_summand(&self, rep_indices: Vec<usize>, orbit_size: usize) -> Result<OrbitSummand> {
        let representative: Vec<Permutation> = rep_indices
            .iter()
            .zip(&self.factors)
            .map(|(&i, (space, _))| space.transversal()[i].clone())
            .collect();
        let conjugates: Vec<PermGroup> = representative
            .iter()
            .zip(&self.factors)
            .map(|(omega, (space, _))| space.group().conjugate(omega))
            .collect::<Result<_>>()?;
        let stabilizer = intersect(&conjugates)?;
        assert_eq!(
            orbit_size * stabilizer.order(),
            factorial(self.degree),
            "orbit-stabilizer accounting failed"
        );

        // ψ(ζ) = Π_m χ_m(ω_m⁻¹ ζ ω_m), assembled as exponents of ζ_L
        let value_order = self
            .factors
            .iter()
            .fold(1usize, |acc, (_, chi)| num_integer::lcm(acc, chi.value_order()));
        let inverses: Vec<Permutation> = representative.iter().map(|p| p.inverse()).collect();
        let exps: Vec<u32> = stabilizer
            .elements()
            .iter()
            .map(|zeta| {
                let mut e = 0usize;
                for ((omega, omega_inv), (space, chi)) in representative
                    .iter()
                    .zip(&inverses)
                    .zip(&self.factors)
                {
                    let sigma = omega_inv.times(zeta).times(omega);
                    let idx = space
                        .group()
                        .index_of(&sigma)
                        .expect("stabilizer elements conjugate into W");
                    e += chi.exp_at(idx) as usize * (value_order / chi.value_order());
                }
                (e % value_order) as u32
            })
            .collect();
        let psi = Character::from_exponents(stabilizer, value_order, exps)?;
        let psi_trivial = psi.is_trivial();
        Ok(OrbitSummand {
            rep_indices,
            representative,
            orbit_size,
            stabilizer: psi.group().clone(),
            psi,
            psi_trivial,
        })
    }

    /// Both sides of the master identity: the k-fold internal product of
    /// the factor cycle indices against the sum of stabilizer indices over
    /// the orbit decomposition.
    pub fn verify_master_identity(&self, limits: &Limits) -> Result<MasterIdentityCheck> {
        let chars: Vec<&Character> = self.factors.iter().map(|(_, chi)| chi).collect();
        let lhs = internal_product_multi(self.degree, &chars)?;
        let mut rhs = CycleIndexPoly::zero(self.degree);
        for summand in self.decompose(limits)? {
            rhs = rhs.add(&cycle_index(summand.stabilizer(), summand.psi())?)?;
        }
        let equal = lhs == rhs;
        Ok(MasterIdentityCheck { lhs, rhs, equal })
    }

    /// The number of orbits whose `ψ` is trivial, certified along two
    /// independent paths: the orbit decomposition and the coefficient sum
    /// of the internal product. Disagreement is an internal failure.
    pub fn count_trivial_psi(&self, limits: &Limits) -> Result<u64> {
        let orbit_count = self
            .decompose(limits)?
            .iter()
            .filter(|s| s.psi_trivial())
            .count() as u64;
        let chars: Vec<&Character> = self.factors.iter().map(|(_, chi)| chi).collect();
        let n = coefficient_sum(&internal_product_multi(self.degree, &chars)?)?;
        if !n.is_integer() || n.is_negative() {
            return Err(Error::NonIntegerCount(alloc::format!("{n}")));
        }
        let n_int = n.to_integer().to_u64();
        if n_int != Some(orbit_count) {
            return Err(Error::PathsDisagree(alloc::format!(
                "orbit count {orbit_count} vs coefficient sum {n}"
            )));
        }
        Ok(orbit_count)
    }

    /// The weighted inventory over `t` values: for each summand with
    /// stabilizer `H` and character `ψ`, the stabilizer permutes the
    /// coordinates of words in `{0,…,t−1}^d`; an `H`-orbit of words
    /// contributes its weight monomial `Π_j x_{word[j]}` exactly when it
    /// splits into the maximal number `|H : Ker ψ|` of `Ker ψ`-orbits.
    pub fn weighted_inventory(&self, t: usize, limits: &Limits) -> Result<VarPoly> {
        if t == 0 {
            return Err(Error::Parse(String::from("need at least one value")));
        }
        let summands = self.decompose(limits)?;
        let words = (t as u128)
            .checked_pow(self.degree as u32)
            .unwrap_or(u128::MAX);
        let work = words.saturating_mul(summands.len() as u128);
        if work > limits.max_expansion as u128 {
            return Err(Error::BoundExceeded {
                what: "weighted inventory",
                size: work,
                limit: limits.max_expansion,
            });
        }
        let words = words as usize;
        let d = self.degree;
        let mut out = VarPoly::zero(t, d);

        let decode = |mut code: usize| -> Vec<u8> {
            let mut w = vec![0u8; d];
            for slot in w.iter_mut().rev() {
                *slot = (code % t) as u8;
                code /= t;
            }
            w
        };
        let encode = |w: &[u8]| -> usize {
            w.iter().fold(0usize, |acc, &v| acc * t + v as usize)
        };
        let apply = |p: &Permutation, w: &[u8]| -> Vec<u8> {
            let mut out = vec![0u8; d];
            for (j, &v) in w.iter().enumerate() {
                out[p.image_of(j + 1) - 1] = v;
            }
            out
        };

        for summand in &summands {
            let h = summand.stabilizer();
            let kernel = summand.psi().kernel_of();
            let max_suborbits = h.order() / kernel.order();
            let mut visited = vec![false; words];
            for start in 0..words {
                if visited[start] {
                    continue;
                }
                let word = decode(start);
                let orbit: BTreeSet<Vec<u8>> =
                    h.elements().iter().map(|p| apply(p, &word)).collect();
                for member in &orbit {
                    visited[encode(member)] = true;
                }
                let mut suborbits = 0usize;
                let mut seen: BTreeSet<&Vec<u8>> = BTreeSet::new();
                for member in &orbit {
                    if seen.contains(member) {
                        continue;
                    }
                    suborbits += 1;
                    for k in kernel.elements() {
                        let image = apply(k, member);
                        if let Some(existing) = orbit.get(&image) {
                            seen.insert(existing);
                        }
                    }
                }
                if suborbits == max_suborbits {
                    let mut exps = vec![0u32; t];
                    for &v in &word {
                        exps[v as usize] += 1;
                    }
                    out.add_term(exps, CycloNum::one());
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::{make_character, CharacterSpec};
    use crate::zpoly::expand_truncated;
    use num_rational::BigRational;

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

    fn trivial_on(w: &PermGroup) -> Character {
        make_character(w, &CharacterSpec::Trivial).unwrap()
    }

    #[test]
    fn coset_action_identity_fixes_everything() {
        let w = group(3, &["(1 2)"]);
        let space = CosetSpace::new(w);
        let id = Permutation::identity(3);
        for i in 0..space.size() {
            let (j, sigma) = space.coset_action(&id, i).unwrap();
            assert_eq!(j, i);
            assert!(sigma.is_identity());
        }
    }

    #[test]
    fn coset_action_inside_own_coset() {
        let w = group(3, &["(1 2)"]);
        let space = CosetSpace::new(w);
        let zeta = p("(1 2)", 3);
        let i = space.index_of(&Permutation::identity(3)).unwrap();
        let (j, sigma) = space.coset_action(&zeta, i).unwrap();
        assert_eq!(j, i);
        assert_eq!(sigma, p("(1 2)", 3));
    }

    #[test]
    fn coset_action_moves_to_canonical_rep() {
        let w = group(3, &["(1 2)"]);
        let space = CosetSpace::new(w);
        let i = space.index_of(&p("(2 3)", 3)).unwrap();
        let (j, sigma) = space.coset_action(&p("(1 2)", 3), i).unwrap();
        assert_eq!(space.transversal()[j], p("(1 2 3)", 3));
        assert!(sigma.is_identity());
    }

    #[test]
    fn product_action_degenerate_single_trivial_factor() {
        let w = group(3, &["(1 3)"]);
        let spec = ProductSpec::new(vec![trivial_on(&w)]).unwrap();
        for zeta in PermGroup::symmetric(3, &limits()).unwrap().elements() {
            for i in 0..3 {
                let (tuple, beta) = spec.product_action(zeta, &[i]).unwrap();
                let (j, _) = spec.factors()[0].0.coset_action(zeta, i).unwrap();
                assert_eq!(tuple, vec![j]);
                assert!(beta.is_one());
            }
        }
    }

    #[test]
    fn product_action_cocycle_value() {
        let w = group(3, &["(1 3)"]);
        let sign = make_character(&w, &CharacterSpec::Sign).unwrap();
        let spec = ProductSpec::new(vec![sign, trivial_on(&w)]).unwrap();
        let (tuple, beta) = spec.product_action(&p("(1 3)", 3), &[0, 0]).unwrap();
        assert_eq!(tuple, vec![0, 0]);
        assert_eq!(beta, CycloNum::from_integer(-1));
    }

    #[test]
    fn decompose_single_factor_is_transitive() {
        let w = group(3, &["(1 2)"]);
        let chi = make_character(&w, &CharacterSpec::Sign).unwrap();
        let spec = ProductSpec::new(vec![chi.clone()]).unwrap();
        let summands = spec.decompose(&limits()).unwrap();
        assert_eq!(summands.len(), 1);
        let s = &summands[0];
        assert_eq!(s.rep_indices(), &[0]);
        assert_eq!(s.orbit_size(), 3);
        assert_eq!(s.stabilizer().elements(), w.elements());
        assert_eq!(s.psi(), &chi);
    }

    #[test]
    fn decompose_two_order_two_factors() {
        let w = group(3, &["(1 3)"]);
        let spec = ProductSpec::new(vec![trivial_on(&w), trivial_on(&w)]).unwrap();
        let summands = spec.decompose(&limits()).unwrap();
        assert_eq!(summands.len(), 2);
        assert_eq!(summands[0].orbit_size(), 3);
        assert_eq!(summands[0].stabilizer().order(), 2);
        assert_eq!(summands[1].orbit_size(), 6);
        assert_eq!(summands[1].stabilizer().order(), 1);
        assert!(summands.iter().all(|s| s.psi_trivial()));
    }

    #[test]
    fn decompose_free_action() {
        let w1 = group(3, &["(1 2)"]);
        let w2 = group(3, &["(1 2 3)"]);
        let spec = ProductSpec::new(vec![trivial_on(&w1), trivial_on(&w2)]).unwrap();
        let summands = spec.decompose(&limits()).unwrap();
        assert_eq!(summands.len(), 1);
        assert_eq!(summands[0].orbit_size(), 6);
        assert_eq!(summands[0].stabilizer().order(), 1);
    }

    #[test]
    fn master_identity_on_worked_example() {
        let w = group(3, &["(1 3)"]);
        let spec = ProductSpec::new(vec![trivial_on(&w), trivial_on(&w)]).unwrap();
        let check = spec.verify_master_identity(&limits()).unwrap();
        assert!(check.equal);
        let chars: Vec<&Character> = spec.factors().iter().map(|(_, c)| c).collect();
        assert_eq!(check.lhs, internal_product_multi(3, &chars).unwrap());
    }

    #[test]
    fn count_both_paths_on_examples() {
        let w = group(3, &["(1 3)"]);
        let sign = make_character(&w, &CharacterSpec::Sign).unwrap();
        let spec = ProductSpec::new(vec![sign, trivial_on(&w)]).unwrap();
        assert_eq!(spec.count_trivial_psi(&limits()).unwrap(), 1);

        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let sign3 = make_character(&s3, &CharacterSpec::Sign).unwrap();
        let spec = ProductSpec::new(vec![sign3, trivial_on(&s3)]).unwrap();
        assert_eq!(spec.count_trivial_psi(&limits()).unwrap(), 0);
    }

    #[test]
    fn decompose_respects_bound() {
        let w = group(3, &["(1 3)"]);
        let spec = ProductSpec::new(vec![trivial_on(&w), trivial_on(&w)]).unwrap();
        let tight = Limits {
            max_orbit_space: 8,
            ..Limits::default()
        };
        assert!(spec.decompose(&tight).unwrap_err().is_resource_bound());
    }

    #[test]
    fn weighted_inventory_sign_on_s2() {
        let s2 = group(2, &["(1 2)"]);
        let sign = make_character(&s2, &CharacterSpec::Sign).unwrap();
        let spec = ProductSpec::new(vec![sign.clone()]).unwrap();
        let inv = spec.weighted_inventory(2, &limits()).unwrap();
        assert_eq!(inv.terms().len(), 1);
        assert_eq!(inv.terms()[&vec![1, 1]], CycloNum::one());
        let expanded = expand_truncated(
            &internal_product_multi(2, &[&sign]).unwrap(),
            2,
            &limits(),
        )
        .unwrap();
        assert_eq!(inv, expanded);
    }

    #[test]
    fn weighted_inventory_single_value_counts_orbits() {
        let w = group(3, &["(1 3)"]);
        let spec = ProductSpec::new(vec![trivial_on(&w), trivial_on(&w)]).unwrap();
        let inv = spec.weighted_inventory(1, &limits()).unwrap();
        // all-trivial characters: every orbit qualifies with weight x0^3
        assert_eq!(inv.terms().len(), 1);
        assert_eq!(
            inv.terms()[&vec![3]].as_rational().unwrap(),
            BigRational::from_integer(2.into())
        );
    }
}
