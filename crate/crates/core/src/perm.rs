//! Permutations of `{1,…,d}`, cycle types, and the centralizer order `z`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A permutation of `{1,…,d}`, stored by its image sequence:
/// `images[v-1]` is the image of `v`. Ordering is lexicographic on the
/// image sequence, which is the canonical order used everywhere in this
/// crate (transversal representatives, generator choices, orbit
/// representatives).
///
/// Permutations of different degrees never interoperate; mixing them is an
/// error, not padding.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// The identity on `{1,…,d}`.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree as u8).collect(),
        }
    }

    /// Builds a permutation from a 1-based image sequence, validating that
    /// it is a bijection of `{1,…,d}`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        if d > u8::MAX as usize {
            return Err(Error::Parse(String::from("degree too large")));
        }
        let mut seen = vec![false; d];
        for &v in images {
            if v < 1 || v > d {
                return Err(Error::PointOutOfRange { point: v, degree: d });
            }
            if seen[v - 1] {
                return Err(Error::RepeatedPoint { point: v });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the point `v` (1-based).
    pub fn image_of(&self, v: usize) -> usize {
        self.images[v - 1] as usize
    }

    /// The 1-based image sequence.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Function composition: `(p.compose(q))(v) = p(q(v))`, so `q` acts
    /// first. Errors on degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.times(other))
    }

    /// Same-degree composition for internal use.
    pub(crate) fn times(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&v| self.images[v as usize - 1])
                .collect(),
        }
    }

    /// `self` composed with itself `e` times; `power(0)` is the identity.
    pub fn power(&self, e: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> usize {
        self.cycle_type()
            .counts()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .fold(1usize, |acc, (i, _)| num_integer::lcm(acc, i + 1))
    }

    /// +1 for even permutations, −1 for odd.
    pub fn sign(&self) -> i32 {
        let t = self.cycle_type();
        // an s-cycle is a product of s−1 transpositions
        let transpositions: usize = t
            .counts()
            .iter()
            .enumerate()
            .map(|(i, &c)| i * c as usize)
            .sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Disjoint cycle decomposition in canonical form: cycles sorted by
    /// smallest element, each rotated to start at its smallest element,
    /// fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 1..=d {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut v = self.image_of(start);
            while v != start {
                seen[v - 1] = true;
                cycle.push(v);
                v = self.image_of(v);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// The cycle-structure vector `(c_1,…,c_d)`.
    pub fn cycle_type(&self) -> CycleType {
        let d = self.degree();
        let mut counts = vec![0u32; d];
        let mut seen = vec![false; d];
        for start in 1..=d {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut len = 1usize;
            let mut v = self.image_of(start);
            while v != start {
                seen[v - 1] = true;
                len += 1;
                v = self.image_of(v);
            }
            counts[len - 1] += 1;
        }
        CycleType { counts }
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the
    /// identity. Unlisted points are fixed. Singleton cycles are accepted.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        if degree < 1 || degree > u8::MAX as usize {
            return Err(Error::Parse(String::from("degree out of range")));
        }
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut listed = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::Parse(String::from("empty permutation text")));
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse(String::from("expected '('")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(String::from("unbalanced parentheses")))?;
            let body = &rest[1..close];
            rest = rest[close + 1..].trim_start();
            let mut cycle = Vec::new();
            for token in body.split_whitespace() {
                let point: usize = token
                    .parse()
                    .map_err(|_| Error::Parse(String::from("expected a point number")))?;
                if point < 1 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if listed[point - 1] {
                    return Err(Error::RepeatedPoint { point });
                }
                listed[point - 1] = true;
                cycle.push(point);
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    /// Lehmer rank of the image sequence within `S_d` in lexicographic
    /// order: `0` for the identity, `d! − 1` for the reversal.
    pub(crate) fn lehmer_rank(&self) -> usize {
        let d = self.degree();
        let mut rank = 0usize;
        let mut factorial = FACTORIALS[d];
        for i in 0..d {
            factorial /= d - i;
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank += smaller * factorial;
        }
        rank
    }

    /// Inverse of [`lehmer_rank`](Self::lehmer_rank).
    pub(crate) fn from_lehmer_rank(degree: usize, mut rank: usize) -> Permutation {
        let mut pool: Vec<u8> = (1..=degree as u8).collect();
        let mut images = Vec::with_capacity(degree);
        let mut factorial = FACTORIALS[degree];
        for i in 0..degree {
            factorial /= degree - i;
            let idx = rank / factorial;
            rank %= factorial;
            images.push(pool.remove(idx));
        }
        Permutation { images }
    }
}

/// `0!` through `12!`; degrees beyond 12 would overflow the rank space
/// and are rejected long before this table is consulted.
pub(crate) const FACTORIALS: [usize; 13] = [
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800, 479001600,
];

pub(crate) fn factorial(d: usize) -> usize {
    FACTORIALS[d]
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The cycle-structure vector `(c_1,…,c_d)` of a permutation of `d`
/// points: `c_s` is the number of `s`-cycles, and `Σ s·c_s = d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    counts: Vec<u32>,
}

impl CycleType {
    /// Builds a cycle type from counts, validating `Σ s·c_s = d` where
    /// `d = counts.len()`.
    pub fn from_counts(counts: Vec<u32>) -> Result<CycleType> {
        let d = counts.len();
        let weighted: usize = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c as usize)
            .sum();
        if weighted != d {
            return Err(Error::Parse(String::from(
                "cycle counts do not sum to the degree",
            )));
        }
        Ok(CycleType { counts })
    }

    /// The type of the identity: `d` fixed points.
    pub fn identity(degree: usize) -> CycleType {
        let mut counts = vec![0u32; degree];
        if degree > 0 {
            counts[0] = degree as u32;
        }
        CycleType { counts }
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    /// `counts()[s-1]` is the number of `s`-cycles.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn is_identity_type(&self) -> bool {
        self.counts
            .iter()
            .enumerate()
            .all(|(i, &c)| if i == 0 { c as usize == self.degree() } else { c == 0 })
    }

    /// The centralizer order `z = Π_s s^{c_s} · c_s!`; the number of
    /// permutations in `S_d` with this cycle type is `d!/z`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &c) in self.counts.iter().enumerate() {
            let s = i as u64 + 1;
            for _ in 0..c {
                z *= s;
            }
            for j in 1..=c as u64 {
                z *= j;
            }
        }
        z
    }

    /// All cycle types of degree `d`, in lexicographic order on the count
    /// vectors.
    pub fn all_of_degree(d: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        let mut counts = vec![0u32; d];
        // choose counts for cycle lengths d, d-1, …, 1 with remaining weight
        fn rec(s: usize, remaining: usize, counts: &mut Vec<u32>, out: &mut Vec<CycleType>) {
            if s == 0 {
                if remaining == 0 {
                    out.push(CycleType {
                        counts: counts.clone(),
                    });
                }
                return;
            }
            if s == 1 {
                counts[0] = remaining as u32;
                out.push(CycleType {
                    counts: counts.clone(),
                });
                counts[0] = 0;
                return;
            }
            for c in 0..=(remaining / s) as u32 {
                counts[s - 1] = c;
                rec(s - 1, remaining - s * c as usize, counts, out);
            }
            counts[s - 1] = 0;
        }
        rec(d, d, &mut counts, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lexicographically next image sequence, in place. Returns `false` once
/// the sequence is the last one (descending).
pub(crate) fn next_permutation(seq: &mut [u8]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// All elements of `S_d` in lexicographic order of image sequences.
pub(crate) fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(factorial(degree));
    let mut seq: Vec<u8> = (1..=degree as u8).collect();
    loop {
        out.push(Permutation { images: seq.clone() });
        if !next_permutation(&mut seq) {
            break;
        }
    }
    out
}

/// Generators of `S_d`: the transposition `(1 2)` and the long cycle
/// `(1 2 … d)`. Empty for `d ≤ 1`.
pub(crate) fn symmetric_generators(degree: usize) -> Vec<Permutation> {
    if degree <= 1 {
        return Vec::new();
    }
    let mut swap: Vec<usize> = (1..=degree).collect();
    swap.swap(0, 1);
    let transposition = Permutation::from_images(&swap).expect("valid");
    if degree == 2 {
        return vec![transposition];
    }
    let mut rot: Vec<usize> = (2..=degree).collect();
    rot.push(1);
    let long_cycle = Permutation::from_images(&rot).expect("valid");
    vec![transposition, long_cycle]
}
