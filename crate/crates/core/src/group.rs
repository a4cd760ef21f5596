//! Subgroups of `S_d` as fully enumerated element sets.
//!
//! Groups are stored explicitly (no stabilizer-chain machinery): the
//! supported degrees are small, and explicit sets make cosets, stabilizers,
//! and character tables direct lookups. All element lists are sorted
//! lexicographically by image sequence, which fixes every representative
//! choice in the crate deterministically.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{factorial, symmetric_generators, Permutation};
use crate::Limits;

/// Hard cap on the degree: Lehmer ranks of `S_d` must fit comfortably in
/// `usize` tables.
pub const MAX_SUPPORTED_DEGREE: usize = 12;

/// A subgroup of `S_d`: generators plus the fully enumerated, sorted
/// element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// The trivial subgroup of `S_d`.
    pub fn trivial(degree: usize, limits: &Limits) -> Result<PermGroup> {
        PermGroup::close(degree, &[], limits)
    }

    /// The full symmetric group `S_d`.
    pub fn symmetric(degree: usize, limits: &Limits) -> Result<PermGroup> {
        PermGroup::close(degree, &symmetric_generators(degree), limits)
    }

    /// Breadth-first closure of a generating set. The degree is explicit so
    /// that the empty generating set still names its ambient `S_d`.
    pub fn close(degree: usize, generators: &[Permutation], limits: &Limits) -> Result<PermGroup> {
        check_degree(degree, limits)?;
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let set = close_set(degree, generators, limits.max_group_order)?;
        let mut gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        gens.sort();
        gens.dedup();
        Ok(PermGroup {
            degree,
            generators: gens,
            elements: set.into_iter().collect(),
        })
    }

    /// Wraps an explicit element set as a group, computing a small
    /// generating set greedily (lex-least missing element first). The
    /// greedy closure doubles as the closure check: a set that is not a
    /// subgroup is rejected.
    pub fn from_elements(degree: usize, elements: BTreeSet<Permutation>, limits: &Limits) -> Result<PermGroup> {
        check_degree(degree, limits)?;
        if elements.is_empty() || !elements.contains(&Permutation::identity(degree)) {
            return Err(Error::NotAGroup);
        }
        for e in &elements {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: e.degree(),
                });
            }
        }
        let mut generators: Vec<Permutation> = Vec::new();
        let mut closed: BTreeSet<Permutation> = BTreeSet::new();
        closed.insert(Permutation::identity(degree));
        loop {
            let missing = elements.iter().find(|e| !closed.contains(*e));
            let Some(next) = missing else { break };
            generators.push(next.clone());
            closed = close_set(degree, &generators, limits.max_group_order)?;
            if closed.iter().any(|e| !elements.contains(e)) {
                return Err(Error::NotAGroup);
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: elements.into_iter().collect(),
        })
    }

    /// Trusted constructor for images of groups under bijections that
    /// preserve the group structure (conjugation).
    fn from_parts(degree: usize, mut generators: Vec<Permutation>, set: BTreeSet<Permutation>) -> PermGroup {
        generators.sort();
        generators.dedup();
        PermGroup {
            degree,
            generators,
            elements: set.into_iter().collect(),
        }
    }

    /// Parses the group file format: first line `degree d`, then one
    /// generator per non-empty, non-comment line, in cycle notation.
    pub fn parse(text: &str, limits: &Limits) -> Result<PermGroup> {
        let mut lines = text
            .lines()
            .map(|l| match l.find('#') {
                Some(i) => l[..i].trim(),
                None => l.trim(),
            })
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse(String::from("empty group file")))?;
        let degree = header
            .strip_prefix("degree")
            .map(str::trim)
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(String::from("expected first line 'degree d'")))?;
        if degree == 0 {
            return Err(Error::Parse(String::from("degree must be positive")));
        }
        let mut generators = Vec::new();
        for line in lines {
            generators.push(Permutation::parse(line, degree)?);
        }
        PermGroup::close(degree, &generators, limits)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements sorted lexicographically by image sequence.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    /// Position of an element in the sorted element list.
    pub(crate) fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// Lookup table from the Lehmer rank of any element of `S_d` to its
    /// position in this group's element list, or `-1`.
    pub(crate) fn rank_index_table(&self) -> Vec<i32> {
        let mut table = vec![-1i32; factorial(self.degree)];
        for (i, e) in self.elements.iter().enumerate() {
            table[e.lehmer_rank()] = i as i32;
        }
        table
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Canonical left transversal of `W` in `S_d`: one representative per
    /// coset `σW`, each the lexicographically least member of its coset,
    /// listed in lexicographic order. The identity represents `W` itself.
    pub fn left_transversal(&self) -> Vec<Permutation> {
        let n = factorial(self.degree);
        let mut covered = vec![false; n];
        let mut reps = Vec::with_capacity(n / self.order());
        for rank in 0..n {
            if covered[rank] {
                continue;
            }
            let rep = Permutation::from_lehmer_rank(self.degree, rank);
            for w in &self.elements {
                covered[rep.times(w).lehmer_rank()] = true;
            }
            reps.push(rep);
        }
        reps
    }

    /// The group `gWg⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> Result<PermGroup> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        let g_inv = g.inverse();
        let conj = |w: &Permutation| g.times(w).times(&g_inv);
        let set: BTreeSet<Permutation> = self.elements.iter().map(conj).collect();
        let gens: Vec<Permutation> = self.generators.iter().map(conj).collect();
        debug_assert_eq!(set.len(), self.elements.len());
        Ok(PermGroup::from_parts(self.degree, gens, set))
    }

    /// Structural flags used by the character constructors.
    pub fn classify(&self) -> GroupClassification {
        let order = self.order();
        let element_orders: Vec<usize> = self.elements.iter().map(|e| e.order()).collect();
        let cyclic_generator = self
            .elements
            .iter()
            .zip(&element_orders)
            .find(|&(_, &o)| o == order)
            .map(|(e, _)| e.clone());
        let is_cyclic = cyclic_generator.is_some();

        let mut b = None;
        if order % 2 == 0 && order >= 6 {
            let half = order / 2;
            if half % 2 == 1 {
                // a cyclic subgroup of order b = |W|/2 whose complement
                // consists entirely of involutions
                for (e, &o) in self.elements.iter().zip(&element_orders) {
                    if o != half {
                        continue;
                    }
                    let h: BTreeSet<Permutation> =
                        (0..half).map(|t| e.power(t)).collect();
                    let outside_ok = self
                        .elements
                        .iter()
                        .zip(&element_orders)
                        .all(|(x, &xo)| h.contains(x) || xo == 2);
                    if outside_ok {
                        b = Some(half);
                        break;
                    }
                }
            }
        }
        GroupClassification {
            order,
            is_cyclic,
            cyclic_generator,
            is_dihedral_2b_odd: b.is_some(),
            b,
        }
    }

    /// For a normal subgroup `R ⊴ W` with cyclic quotient of order coprime
    /// to `|R|`: returns `m = |W/R|` and the lexicographically least
    /// element of `W` whose coset generates `W/R`. Solvability of `R` is
    /// asserted by the caller, not checked here.
    pub fn kernel_quotient_data(&self, r: &PermGroup) -> Result<(usize, Permutation)> {
        if r.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: r.degree(),
            });
        }
        if !r.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        for g in self.elements() {
            let g_inv = g.inverse();
            if r.elements()
                .iter()
                .any(|x| !r.contains(&g.times(x).times(&g_inv)))
            {
                return Err(Error::NotNormal);
            }
        }
        let m = self.order() / r.order();
        let mut generator = None;
        for w in &self.elements {
            // order of wR in W/R
            let mut t = 1;
            let mut acc = w.clone();
            while !r.contains(&acc) {
                acc = acc.times(w);
                t += 1;
            }
            if t == m {
                generator = Some(w.clone());
                break;
            }
        }
        let Some(generator) = generator else {
            return Err(Error::QuotientNotCyclic);
        };
        if num_integer::gcd(m, r.order()) != 1 {
            return Err(Error::OrdersNotCoprime {
                quotient: m,
                kernel: r.order(),
            });
        }
        Ok((m, generator))
    }
}

pub(crate) fn check_degree(degree: usize, limits: &Limits) -> Result<()> {
    if degree == 0 {
        return Err(Error::Parse(String::from("degree must be positive")));
    }
    let cap = limits.max_degree.min(MAX_SUPPORTED_DEGREE);
    if degree > cap {
        return Err(Error::BoundExceeded {
            what: "permutation degree",
            size: degree as u128,
            limit: cap,
        });
    }
    Ok(())
}

fn close_set(
    degree: usize,
    generators: &[Permutation],
    max_order: usize,
) -> Result<BTreeSet<Permutation>> {
    let mut set = BTreeSet::new();
    set.insert(Permutation::identity(degree));
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
    while let Some(e) = frontier.pop() {
        for g in generators {
            let n = g.times(&e);
            if set.insert(n.clone()) {
                if set.len() > max_order {
                    return Err(Error::BoundExceeded {
                        what: "group order",
                        size: set.len() as u128,
                        limit: max_order,
                    });
                }
                frontier.push(n);
            }
        }
    }
    Ok(set)
}

/// Set intersection of groups of common degree, as a group.
pub fn intersect(groups: &[PermGroup]) -> Result<PermGroup> {
    let Some(first) = groups.first() else {
        return Err(Error::Parse(String::from("intersect needs at least one group")));
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
    let mut set: BTreeSet<Permutation> = first.elements().iter().cloned().collect();
    for g in &groups[1..] {
        set.retain(|e| g.contains(e));
    }
    // an intersection of subgroups is a subgroup; the loose limits here
    // only guard the degree cap
    let limits = Limits {
        max_group_order: set.len().max(1),
        max_degree: degree,
        ..Limits::default()
    };
    PermGroup::from_elements(degree, set, &limits)
}

/// Structural facts about a group, as needed by character constructors:
/// cyclicity (with the canonical generator: lex-least element of maximal
/// order) and the dihedral-of-order-2b shape with `b` odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupClassification {
    pub order: usize,
    pub is_cyclic: bool,
    pub cyclic_generator: Option<Permutation>,
    pub is_dihedral_2b_odd: bool,
    pub b: Option<usize>,
}
