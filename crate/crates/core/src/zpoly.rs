//! Generalized cycle indices in the power-sum basis, the internal product,
//! the coefficient-sum functional, and truncated expansion into finitely
//! many variables.
//!
//! A cycle index `Z(χ) = |W|⁻¹ Σ_σ χ(σ) p₁^{c₁(σ)}⋯p_d^{c_d(σ)}` lives in
//! the degree-`d` slice of symmetric functions, written in the basis of
//! power-sum monomials; a monomial is identified with its exponent vector,
//! a [`CycleType`]. In that basis the internal product is diagonal:
//! `(f ∗ g)[t] = z_t · f[t] · g[t]`, and the index of the trivial
//! character on the full symmetric group is the identity element.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::character::Character;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::CycleType;
use crate::Limits;

/// A polynomial in the power sums `p₁,…,p_d`, homogeneous of degree `d`
/// in the grading where `p_s` has degree `s`. Keys are cycle types; zero
/// coefficients are never stored, so term-map equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndexPoly {
    degree: usize,
    terms: BTreeMap<CycleType, CycloNum>,
}

impl CycleIndexPoly {
    pub fn zero(degree: usize) -> CycleIndexPoly {
        CycleIndexPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The identity element of the internal product on degree-`d`
    /// symmetric functions: the cycle index of the trivial character on
    /// the full `S_d`, whose type-`t` coefficient is `1/z_t`.
    pub fn identity_element(degree: usize) -> CycleIndexPoly {
        let mut terms = BTreeMap::new();
        for t in CycleType::all_of_degree(degree) {
            let z = t.z();
            terms.insert(
                t,
                CycloNum::from_rational(BigRational::new(BigInt::one(), z)),
            );
        }
        CycleIndexPoly { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Terms sorted by cycle type (lexicographic on count vectors).
    pub fn terms(&self) -> &BTreeMap<CycleType, CycloNum> {
        &self.terms
    }

    /// Coefficient of the power-sum monomial with the given type; zero
    /// when absent.
    pub fn coefficient(&self, t: &CycleType) -> CycloNum {
        self.terms.get(t).cloned().unwrap_or_else(CycloNum::zero)
    }

    fn add_term(&mut self, t: CycleType, c: CycloNum) {
        debug_assert_eq!(t.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&t) {
            None => {
                self.terms.insert(t, c);
            }
            Some(prev) => {
                let sum = prev.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(t, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &CycleIndexPoly) -> Result<CycleIndexPoly> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }
}

/// The generalized cycle index `Z(χ) = |W|⁻¹ Σ_σ χ(σ) Π_s p_s^{c_s(σ)}`,
/// with exact cyclotomic coefficients.
pub fn cycle_index(w: &PermGroup, chi: &Character) -> Result<CycleIndexPoly> {
    if w.degree() != chi.group().degree() || w.elements() != chi.group().elements() {
        return Err(Error::CharacterGroupMismatch);
    }
    let mut poly = CycleIndexPoly::zero(w.degree());
    let inv_order = BigRational::new(BigInt::one(), BigInt::from(w.order() as i64));
    for (e, v) in w.elements().iter().zip(chi.values()) {
        poly.add_term(e.cycle_type(), v.scale(&inv_order));
    }
    Ok(poly)
}

/// The internal product, diagonal in the power-sum basis:
/// `(f ∗ g)[t] = z_t · f[t] · g[t]`.
pub fn internal_product(f: &CycleIndexPoly, g: &CycleIndexPoly) -> Result<CycleIndexPoly> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch {
            expected: f.degree,
            found: g.degree,
        });
    }
    let mut out = CycleIndexPoly::zero(f.degree);
    for (t, a) in &f.terms {
        if let Some(b) = g.terms.get(t) {
            let z = CycloNum::from_rational(BigRational::from_integer(t.z()));
            out.add_term(t.clone(), z.mul(a).mul(b));
        }
    }
    Ok(out)
}

/// The k-fold internal product `Z(χ_1) ∗ ⋯ ∗ Z(χ_k)`, evaluated without
/// materializing element tuples: elements of each group are bucketed by
/// cycle type, and each common type `t` contributes
/// `z_t^{k-1} · Π_m (Σ_{σ∈W_m, type t} χ_m(σ)) / Π_m |W_m|`.
///
/// The empty product (`k = 0`) is the ring identity.
pub fn internal_product_multi(
    degree: usize,
    factors: &[&Character],
) -> Result<CycleIndexPoly> {
    for chi in factors {
        if chi.group().degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: chi.group().degree(),
            });
        }
    }
    if factors.is_empty() {
        return Ok(CycleIndexPoly::identity_element(degree));
    }
    let buckets: Vec<BTreeMap<CycleType, CycloNum>> = factors
        .iter()
        .map(|chi| {
            let mut by_type: BTreeMap<CycleType, CycloNum> = BTreeMap::new();
            for (e, v) in chi.group().elements().iter().zip(chi.values()) {
                match by_type.remove(&e.cycle_type()) {
                    None => {
                        by_type.insert(e.cycle_type(), v.clone());
                    }
                    Some(prev) => {
                        by_type.insert(e.cycle_type(), prev.add(v));
                    }
                }
            }
            by_type
        })
        .collect();

    let mut denom = BigInt::one();
    for chi in factors {
        denom *= BigInt::from(chi.group().order() as i64);
    }
    let scale = BigRational::new(BigInt::one(), denom);

    let mut out = CycleIndexPoly::zero(degree);
    'types: for (t, first_sum) in &buckets[0] {
        let mut coeff = first_sum.clone();
        for bucket in &buckets[1..] {
            let Some(s) = bucket.get(t) else { continue 'types };
            coeff = coeff.mul(s);
        }
        let z = t.z();
        let mut z_power = BigRational::one();
        for _ in 1..factors.len() {
            z_power *= BigRational::from_integer(z.clone());
        }
        out.add_term(t.clone(), coeff.scale(&(z_power * &scale)));
    }
    Ok(out)
}

/// The sum of all coefficients, equivalently the evaluation at
/// `p_1 = ⋯ = p_d = 1`. Must land in the rationals; anything else signals
/// an internal inconsistency upstream.
pub fn coefficient_sum(f: &CycleIndexPoly) -> Result<BigRational> {
    let mut sum = CycloNum::zero();
    for c in f.terms.values() {
        sum = sum.add(c);
    }
    sum.as_rational()
}

/// A polynomial in the variables `x_0,…,x_{vars−1}` with cyclotomic
/// coefficients, homogeneous of total degree `degree`. Keys are exponent
/// vectors; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarPoly {
    vars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, CycloNum>,
}

impl VarPoly {
    pub fn zero(vars: usize, degree: usize) -> VarPoly {
        VarPoly {
            vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, CycloNum> {
        &self.terms
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: CycloNum) {
        debug_assert_eq!(exps.len(), self.vars);
        debug_assert_eq!(
            exps.iter().map(|&e| e as usize).sum::<usize>(),
            self.degree
        );
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(prev) => {
                let sum = prev.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
        }
    }
}

impl fmt::Display for VarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (exps, c)) in self.terms.iter().enumerate() {
            write_joined_coefficient(f, c, n == 0)?;
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, " x{i}")?,
                    _ => write!(f, " x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Substitutes `p_s ↦ x_0^s + ⋯ + x_{t−1}^s` and expands into monomials
/// of total degree `d`.
pub fn expand_truncated(
    poly: &CycleIndexPoly,
    t: usize,
    limits: &Limits,
) -> Result<VarPoly> {
    if t == 0 {
        return Err(Error::Parse(alloc::string::String::from(
            "need at least one variable",
        )));
    }
    let monomials = (t as u128)
        .checked_pow(poly.degree as u32)
        .unwrap_or(u128::MAX);
    if monomials > limits.max_expansion as u128 {
        return Err(Error::BoundExceeded {
            what: "truncated expansion",
            size: monomials,
            limit: limits.max_expansion,
        });
    }
    let mut out = VarPoly::zero(t, poly.degree);
    for (cycle_type, coeff) in &poly.terms {
        // running product over the power sums of this monomial
        let mut partial: BTreeMap<Vec<u32>, CycloNum> = BTreeMap::new();
        partial.insert(vec![0u32; t], coeff.clone());
        for (idx, &count) in cycle_type.counts().iter().enumerate() {
            let s = idx + 1;
            for _ in 0..count {
                let mut next: BTreeMap<Vec<u32>, CycloNum> = BTreeMap::new();
                for (exps, c) in &partial {
                    for var in 0..t {
                        let mut e = exps.clone();
                        e[var] += s as u32;
                        match next.remove(&e) {
                            None => {
                                next.insert(e, c.clone());
                            }
                            Some(prev) => {
                                next.insert(e, prev.add(c));
                            }
                        }
                    }
                }
                partial = next;
            }
        }
        for (exps, c) in partial {
            out.add_term(exps, c);
        }
    }
    Ok(out)
}

/// Writes `coeff *` with the joining sign: rational coefficients join
/// with ` + ` / ` - `, irrational ones are parenthesized.
fn write_joined_coefficient(f: &mut fmt::Formatter<'_>, c: &CycloNum, first: bool) -> fmt::Result {
    use num_traits::Signed;
    match c.as_rational() {
        Ok(q) => {
            if first {
                write!(f, "{q} *")
            } else if q.is_negative() {
                write!(f, " - {} *", -q)
            } else {
                write!(f, " + {q} *")
            }
        }
        Err(_) => {
            if first {
                write!(f, "({c}) *")
            } else {
                write!(f, " + ({c}) *")
            }
        }
    }
}

impl fmt::Display for CycleIndexPoly {
    /// Terms sorted by cycle type in lexicographic order, rendered as
    /// `coeff * p1^a1 … pd^ad` with zero exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (t, c)) in self.terms.iter().enumerate() {
            write_joined_coefficient(f, c, n == 0)?;
            for (i, &e) in t.counts().iter().enumerate() {
                let s = i + 1;
                match e {
                    0 => {}
                    1 => write!(f, " p{s}")?,
                    _ => write!(f, " p{s}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::{make_character, CharacterSpec};
    use crate::perm::Permutation;
    use alloc::string::ToString;
    use num_traits::Zero;

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

    fn ctype(counts: &[u32]) -> CycleType {
        CycleType::from_counts(counts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> CycloNum {
        CycloNum::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn cycle_index_of_s3_trivial() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let z = cycle_index(&s3, &make_character(&s3, &CharacterSpec::Trivial).unwrap()).unwrap();
        assert_eq!(z.coefficient(&ctype(&[3, 0, 0])), q(1, 6));
        assert_eq!(z.coefficient(&ctype(&[1, 1, 0])), q(1, 2));
        assert_eq!(z.coefficient(&ctype(&[0, 0, 1])), q(1, 3));
        assert_eq!(z.terms().len(), 3);
    }

    #[test]
    fn cycle_index_of_s3_sign() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let z = cycle_index(&s3, &make_character(&s3, &CharacterSpec::Sign).unwrap()).unwrap();
        assert_eq!(z.coefficient(&ctype(&[3, 0, 0])), q(1, 6));
        assert_eq!(z.coefficient(&ctype(&[1, 1, 0])), q(-1, 2));
        assert_eq!(z.coefficient(&ctype(&[0, 0, 1])), q(1, 3));
    }

    #[test]
    fn cycle_index_of_c3_injective_character() {
        let c3 = group(3, &["(1 2 3)"]);
        let z = cycle_index(&c3, &make_character(&c3, &CharacterSpec::Cyclic(1)).unwrap()).unwrap();
        assert_eq!(z.coefficient(&ctype(&[3, 0, 0])), q(1, 3));
        assert_eq!(z.coefficient(&ctype(&[0, 0, 1])), q(-1, 3));
        assert_eq!(z.terms().len(), 2);
    }

    #[test]
    fn identity_element_matches_symmetric_group_index() {
        for d in 1..=5 {
            let sd = PermGroup::symmetric(d, &limits()).unwrap();
            let z = cycle_index(&sd, &make_character(&sd, &CharacterSpec::Trivial).unwrap())
                .unwrap();
            assert_eq!(z, CycleIndexPoly::identity_element(d));
        }
    }

    #[test]
    fn cycle_index_rejects_foreign_character() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let c3 = group(3, &["(1 2 3)"]);
        let chi = make_character(&c3, &CharacterSpec::Trivial).unwrap();
        assert_eq!(
            cycle_index(&s3, &chi).unwrap_err(),
            Error::CharacterGroupMismatch
        );
    }

    #[test]
    fn internal_product_identity() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let h = CycleIndexPoly::identity_element(3);
        for spec in [CharacterSpec::Trivial, CharacterSpec::Sign] {
            let z = cycle_index(&s3, &make_character(&s3, &spec).unwrap()).unwrap();
            assert_eq!(internal_product(&z, &h).unwrap(), z);
            assert_eq!(internal_product(&h, &z).unwrap(), z);
        }
    }

    #[test]
    fn internal_product_of_s3_indices() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let triv = cycle_index(&s3, &make_character(&s3, &CharacterSpec::Trivial).unwrap())
            .unwrap();
        let sign = cycle_index(&s3, &make_character(&s3, &CharacterSpec::Sign).unwrap()).unwrap();
        let tt = internal_product(&triv, &triv).unwrap();
        assert_eq!(tt, triv);
        let st = internal_product(&sign, &triv).unwrap();
        assert_eq!(st, sign);
        assert_eq!(coefficient_sum(&tt).unwrap(), BigRational::one());
        assert_eq!(coefficient_sum(&st).unwrap(), BigRational::zero());
    }

    #[test]
    fn multi_product_on_order_two_subgroups() {
        let w = group(3, &["(1 3)"]);
        let chi = make_character(&w, &CharacterSpec::Trivial).unwrap();
        let prod = internal_product_multi(3, &[&chi, &chi]).unwrap();
        assert_eq!(prod.coefficient(&ctype(&[3, 0, 0])), q(3, 2));
        assert_eq!(prod.coefficient(&ctype(&[1, 1, 0])), q(1, 2));
        assert_eq!(prod.terms().len(), 2);
    }

    #[test]
    fn multi_product_with_disjoint_types() {
        let w1 = group(3, &["(1 2)"]);
        let w2 = group(3, &["(1 2 3)"]);
        let c1 = make_character(&w1, &CharacterSpec::Trivial).unwrap();
        let c2 = make_character(&w2, &CharacterSpec::Trivial).unwrap();
        let prod = internal_product_multi(3, &[&c1, &c2]).unwrap();
        assert_eq!(prod.coefficient(&ctype(&[3, 0, 0])), q(1, 1));
        assert_eq!(prod.terms().len(), 1);
    }

    #[test]
    fn multi_product_degenerate_arities() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let chi = make_character(&s3, &CharacterSpec::Sign).unwrap();
        let single = internal_product_multi(3, &[&chi]).unwrap();
        assert_eq!(single, cycle_index(&s3, &chi).unwrap());
        let empty = internal_product_multi(3, &[]).unwrap();
        assert_eq!(empty, CycleIndexPoly::identity_element(3));
    }

    #[test]
    fn coefficient_sum_equals_mean_value() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let c4 = group(4, &["(1 2 3 4)"]);
        for (w, spec) in [
            (&s3, CharacterSpec::Trivial),
            (&s3, CharacterSpec::Sign),
            (&s3, CharacterSpec::Dihedral),
            (&c4, CharacterSpec::Cyclic(1)),
            (&c4, CharacterSpec::Cyclic(2)),
        ] {
            let chi = make_character(w, &spec).unwrap();
            let z = cycle_index(w, &chi).unwrap();
            assert_eq!(coefficient_sum(&z).unwrap(), chi.mean_value().unwrap());
        }
    }

    #[test]
    fn expand_truncated_s2() {
        let s2 = group(2, &["(1 2)"]);
        let triv = cycle_index(&s2, &make_character(&s2, &CharacterSpec::Trivial).unwrap())
            .unwrap();
        let sign = cycle_index(&s2, &make_character(&s2, &CharacterSpec::Sign).unwrap()).unwrap();
        let e_triv = expand_truncated(&triv, 2, &limits()).unwrap();
        assert_eq!(e_triv.terms().len(), 3);
        assert_eq!(e_triv.terms()[&vec![2, 0]], CycloNum::one());
        assert_eq!(e_triv.terms()[&vec![1, 1]], CycloNum::one());
        assert_eq!(e_triv.terms()[&vec![0, 2]], CycloNum::one());
        let e_sign = expand_truncated(&sign, 2, &limits()).unwrap();
        assert_eq!(e_sign.terms().len(), 1);
        assert_eq!(e_sign.terms()[&vec![1, 1]], CycloNum::one());
    }

    #[test]
    fn expand_truncated_single_variable() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let z = cycle_index(&s3, &make_character(&s3, &CharacterSpec::Trivial).unwrap()).unwrap();
        let e = expand_truncated(&z, 1, &limits()).unwrap();
        assert_eq!(e.terms().len(), 1);
        assert_eq!(
            e.terms()[&vec![3]].as_rational().unwrap(),
            coefficient_sum(&z).unwrap()
        );
    }

    #[test]
    fn expand_respects_bound() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let z = cycle_index(&s3, &make_character(&s3, &CharacterSpec::Trivial).unwrap()).unwrap();
        let tight = Limits {
            max_expansion: 7,
            ..Limits::default()
        };
        assert!(expand_truncated(&z, 2, &tight).unwrap_err().is_resource_bound());
    }

    #[test]
    fn display_renders_sorted_terms() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let z = cycle_index(&s3, &make_character(&s3, &CharacterSpec::Trivial).unwrap()).unwrap();
        assert_eq!(z.to_string(), "1/3 * p3 + 1/2 * p1 p2 + 1/6 * p1^3");
    }
}
