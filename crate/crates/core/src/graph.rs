//! Multigraphs, brute-force automorphism groups, and the superposition
//! counting drivers.
//!
//! A superposition of k graphs on the same d vertices is an overlay of
//! relabeled copies, counted up to simultaneous relabeling. The drivers
//! below reduce every count to the algebra over the automorphism groups;
//! each also accepts groups directly, since the statements are about
//! groups and graphs are just one source of them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::character::{make_character, Character, CharacterSpec};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::monomial::ProductSpec;
use crate::perm::{all_permutations, CycleType, Permutation};
use crate::Limits;

/// An undirected multigraph on vertices `1..=d`; loops allowed. Edges map
/// unordered pairs (stored with `u ≤ v`) to multiplicities `≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: BTreeMap<(usize, usize), u64>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Result<Multigraph> {
        if vertex_count == 0 {
            return Err(Error::Parse(String::from("vertex count must be positive")));
        }
        Ok(Multigraph {
            vertex_count,
            edges: BTreeMap::new(),
        })
    }

    /// Adds `mult` parallel copies of the edge `{u, v}` (a loop when
    /// `u = v`).
    pub fn add_edge(&mut self, u: usize, v: usize, mult: u64) -> Result<()> {
        for point in [u, v] {
            if point < 1 || point > self.vertex_count {
                return Err(Error::PointOutOfRange {
                    point,
                    degree: self.vertex_count,
                });
            }
        }
        if mult == 0 {
            return Err(Error::Parse(String::from("edge multiplicity must be >= 1")));
        }
        let key = (u.min(v), u.max(v));
        *self.edges.entry(key).or_insert(0) += mult;
        Ok(())
    }

    /// Parses the graph file format: first line the vertex count, then
    /// edge lines `u v` or `u v mult`; `#` starts a comment; repeated edge
    /// lines accumulate multiplicity.
    pub fn parse(text: &str) -> Result<Multigraph> {
        let mut lines = text
            .lines()
            .map(|l| match l.find('#') {
                Some(i) => l[..i].trim(),
                None => l.trim(),
            })
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse(String::from("empty graph file")))?;
        let d: usize = header
            .parse()
            .map_err(|_| Error::Parse(String::from("expected first line to be the vertex count")))?;
        let mut graph = Multigraph::new(d)?;
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (u, v, mult) = match fields.as_slice() {
                [u, v] => (u, v, "1"),
                [u, v, m] => (u, v, *m),
                _ => return Err(Error::Parse(format!("malformed edge line: {line}"))),
            };
            let parse_num = |s: &str| -> Result<u64> {
                s.parse()
                    .map_err(|_| Error::Parse(format!("malformed edge line: {line}")))
            };
            graph.add_edge(
                parse_num(u)? as usize,
                parse_num(v)? as usize,
                parse_num(mult)?,
            )?;
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.edges
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.edges
            .get(&(u.min(v), u.max(v)))
            .copied()
            .unwrap_or(0)
    }

    /// The automorphism group `{σ : mult(σu, σv) = mult(u, v)}` by
    /// exhaustive filtration of `S_d`.
    pub fn automorphism_group(&self, limits: &Limits) -> Result<PermGroup> {
        let d = self.vertex_count;
        crate::group::check_degree(d, limits)?;
        let set: BTreeSet<Permutation> = all_permutations(d)
            .into_iter()
            .filter(|p| {
                self.edges.iter().all(|(&(u, v), &m)| {
                    self.multiplicity(p.image_of(u), p.image_of(v)) == m
                })
            })
            .collect();
        PermGroup::from_elements(d, set, limits)
    }
}

fn automorphism_groups(graphs: &[Multigraph], limits: &Limits) -> Result<Vec<PermGroup>> {
    let Some(first) = graphs.first() else {
        return Err(Error::Parse(String::from("need at least one graph")));
    };
    let d = first.vertex_count();
    for g in graphs {
        if g.vertex_count() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: g.vertex_count(),
            });
        }
    }
    graphs.iter().map(|g| g.automorphism_group(limits)).collect()
}

/// The number of distinct superpositions of the given graphs: orbit count
/// of the product coset space with all characters trivial, certified along
/// both counting paths.
pub fn superposition_count(graphs: &[Multigraph], limits: &Limits) -> Result<u64> {
    superposition_count_groups(&automorphism_groups(graphs, limits)?, limits)
}

/// Group-level form of [`superposition_count`].
pub fn superposition_count_groups(groups: &[PermGroup], limits: &Limits) -> Result<u64> {
    let chars = groups
        .iter()
        .map(|w| make_character(w, &CharacterSpec::Trivial))
        .collect::<Result<Vec<Character>>>()?;
    ProductSpec::new(chars)?.count_trivial_psi(limits)
}

/// Closed-form superposition count `(d!)^{k−1}/(|W_1|⋯|W_k|)`, valid
/// exactly when the groups share no non-identity cycle type (so the
/// product action is free). Errors with a witnessing tuple otherwise; the
/// value is asserted against the orbit count.
pub fn free_action_count(graphs: &[Multigraph], limits: &Limits) -> Result<u64> {
    free_action_count_groups(&automorphism_groups(graphs, limits)?, limits)
}

/// Group-level form of [`free_action_count`].
pub fn free_action_count_groups(groups: &[PermGroup], limits: &Limits) -> Result<u64> {
    let Some(first) = groups.first() else {
        return Err(Error::Parse(String::from("need at least one group")));
    };
    let d = first.degree();
    // cycle-type buckets per group; the hypothesis is that the only type
    // they share is the identity's
    let buckets: Vec<BTreeMap<CycleType, &Permutation>> = groups
        .iter()
        .map(|w| {
            let mut least_of_type: BTreeMap<CycleType, &Permutation> = BTreeMap::new();
            for e in w.elements() {
                least_of_type.entry(e.cycle_type()).or_insert(e);
            }
            least_of_type
        })
        .collect();
    let common: Vec<&CycleType> = buckets[0]
        .keys()
        .filter(|t| !t.is_identity_type() && buckets[1..].iter().all(|b| b.contains_key(*t)))
        .collect();
    if let Some(t) = common.first() {
        let witness: Vec<String> = buckets
            .iter()
            .map(|b| format!("{}", b[*t]))
            .collect();
        return Err(Error::HypothesisViolated(format!(
            "cycle type {t} is shared by all factors, witness ({})",
            witness.join(", ")
        )));
    }

    let mut value = BigRational::one();
    let d_factorial = BigRational::from_integer(BigInt::from(crate::perm::factorial(d) as u64));
    for _ in 1..groups.len() {
        value *= &d_factorial;
    }
    for w in groups {
        value /= BigRational::from_integer(BigInt::from(w.order() as u64));
    }
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerCount(format!("{value}")));
    }
    let closed_form = value.to_integer().to_u64().ok_or_else(|| {
        Error::NonIntegerCount(String::from("count does not fit in 64 bits"))
    })?;
    let orbit_count = superposition_count_groups(groups, limits)?;
    if closed_form != orbit_count {
        return Err(Error::PathsDisagree(format!(
            "closed form {closed_form} vs orbit count {orbit_count}"
        )));
    }
    Ok(closed_form)
}

/// Counts superpositions whose automorphism group satisfies the constraint
/// encoded by a character on the first factor: the first factor carries
/// `make_character(W_1, first_spec)`, all remaining factors the trivial
/// character, and the count runs through both counting paths.
pub fn count_with_character(
    graphs: &[Multigraph],
    first_spec: &CharacterSpec,
    limits: &Limits,
) -> Result<u64> {
    count_with_character_groups(&automorphism_groups(graphs, limits)?, first_spec, limits)
}

/// Group-level form of [`count_with_character`].
pub fn count_with_character_groups(
    groups: &[PermGroup],
    first_spec: &CharacterSpec,
    limits: &Limits,
) -> Result<u64> {
    let Some(first) = groups.first() else {
        return Err(Error::Parse(String::from("need at least one group")));
    };
    let mut chars = Vec::with_capacity(groups.len());
    chars.push(make_character(first, first_spec)?);
    for w in &groups[1..] {
        chars.push(make_character(w, &CharacterSpec::Trivial)?);
    }
    ProductSpec::new(chars)?.count_trivial_psi(limits)
}
