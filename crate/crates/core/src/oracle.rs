//! Independent brute-force ground truth: similarity classes of permutation
//! tuples under the simultaneous left action of `S_d` and right actions of
//! the factor groups.
//!
//! Two k-tuples `(a_1,…,a_k)` and `(b_1,…,b_k)` of permutations are
//! similar when `b_m = ζ a_m w_m` for a single `ζ ∈ S_d` and some
//! `w_m ∈ W_m`. The classes biject with superpositions of k graphs whose
//! automorphism groups are the `W_m`, and with the orbits of the label
//! tuples in the product coset space; the test suites exercise that
//! cross-check. This module is never a performance path.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{factorial, symmetric_generators, Permutation};
use crate::Limits;

/// Result of the tuple sweep: class count, lex-least representative per
/// class, and class sizes, listed in representative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleOrbitReport {
    pub degree: usize,
    pub factors: usize,
    pub class_count: usize,
    pub class_reps: Vec<Vec<Permutation>>,
    pub class_sizes: Vec<usize>,
}

/// Union-find sweep over all `(d!)^k` tuples, applying the generators of
/// `S_d` on the left of every component simultaneously and the generators
/// of each `W_m` on the right of its component.
pub fn t_similarity_count(groups: &[PermGroup], limits: &Limits) -> Result<TupleOrbitReport> {
    let Some(first) = groups.first() else {
        return Err(Error::Parse(alloc::string::String::from(
            "need at least one group",
        )));
    };
    let degree = first.degree();
    for g in groups {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let k = groups.len();
    let n = factorial(degree);
    let total_wide = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total_wide > limits.max_tuple_space as u128 {
        return Err(Error::BoundExceeded {
            what: "tuple space",
            size: total_wide,
            limit: limits.max_tuple_space,
        });
    }
    let total = total_wide as usize;

    let all: Vec<Permutation> = (0..n).map(|r| Permutation::from_lehmer_rank(degree, r)).collect();
    let left_tables: Vec<Vec<u32>> = symmetric_generators(degree)
        .iter()
        .map(|zeta| all.iter().map(|a| zeta.times(a).lehmer_rank() as u32).collect())
        .collect();
    let right_tables: Vec<Vec<Vec<u32>>> = groups
        .iter()
        .map(|w| {
            w.generators()
                .iter()
                .map(|g| all.iter().map(|a| a.times(g).lehmer_rank() as u32).collect())
                .collect()
        })
        .collect();

    let mut strides = vec![1usize; k];
    for m in (0..k - 1).rev() {
        strides[m] = strides[m + 1] * n;
    }

    let mut uf = UnionFind::new(total);
    let mut digits = vec![0usize; k];
    for code in 0..total {
        let mut rest = code;
        for (m, &st) in strides.iter().enumerate() {
            digits[m] = rest / st;
            rest %= st;
        }
        for table in &left_tables {
            let moved = digits
                .iter()
                .zip(&strides)
                .map(|(&r, &st)| table[r] as usize * st)
                .sum::<usize>();
            uf.union(code, moved);
        }
        for (m, tables) in right_tables.iter().enumerate() {
            for table in tables {
                let moved =
                    code - digits[m] * strides[m] + table[digits[m]] as usize * strides[m];
                uf.union(code, moved);
            }
        }
    }

    // gather classes by root, keyed by least member
    let mut least_of_root = vec![usize::MAX; total];
    let mut size_of_root = vec![0usize; total];
    for code in 0..total {
        let root = uf.find(code);
        size_of_root[root] += 1;
        if least_of_root[root] == usize::MAX {
            least_of_root[root] = code; // ascending scan: first hit is least
        }
    }
    let mut classes: Vec<(usize, usize)> = (0..total)
        .filter(|&c| size_of_root[c] > 0)
        .map(|root| (least_of_root[root], size_of_root[root]))
        .collect();
    classes.sort();

    let class_reps: Vec<Vec<Permutation>> = classes
        .iter()
        .map(|&(code, _)| {
            let mut rest = code;
            strides
                .iter()
                .map(|&st| {
                    let r = rest / st;
                    rest %= st;
                    all[r].clone()
                })
                .collect()
        })
        .collect();
    let class_sizes: Vec<usize> = classes.iter().map(|&(_, s)| s).collect();
    debug_assert_eq!(class_sizes.iter().sum::<usize>(), total);

    Ok(TupleOrbitReport {
        degree,
        factors: k,
        class_count: classes.len(),
        class_reps,
        class_sizes,
    })
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // attach the larger root index under the smaller one so that
            // roots are the least member of their class
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn single_symmetric_factor_is_transitive() {
        let s3 = PermGroup::symmetric(3, &limits()).unwrap();
        let report = t_similarity_count(&[s3], &limits()).unwrap();
        assert_eq!(report.class_count, 1);
        assert_eq!(report.class_sizes, vec![6]);
    }

    #[test]
    fn two_order_two_factors() {
        let w = group(3, &["(1 3)"]);
        let report = t_similarity_count(&[w.clone(), w], &limits()).unwrap();
        assert_eq!(report.class_count, 2);
        assert_eq!(report.class_sizes, vec![12, 24]);
        assert_eq!(report.class_sizes.iter().sum::<usize>(), 36);
    }

    #[test]
    fn free_case_single_class() {
        let w1 = group(3, &["(1 2)"]);
        let w2 = group(3, &["(1 2 3)"]);
        let report = t_similarity_count(&[w1, w2], &limits()).unwrap();
        assert_eq!(report.class_count, 1);
        assert_eq!(report.class_sizes, vec![36]);
    }

    #[test]
    fn respects_tuple_bound() {
        let w = group(3, &["(1 3)"]);
        let tight = Limits {
            max_tuple_space: 30,
            ..Limits::default()
        };
        assert!(t_similarity_count(&[w.clone(), w], &tight)
            .unwrap_err()
            .is_resource_bound());
    }

    #[test]
    fn reps_are_least_members() {
        let w = group(3, &["(1 3)"]);
        let report = t_similarity_count(&[w.clone(), w], &limits()).unwrap();
        // first class contains the identity tuple
        assert!(report.class_reps[0].iter().all(|p| p.is_identity()));
        // reps strictly increasing
        for pair in report.class_reps.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }
}
