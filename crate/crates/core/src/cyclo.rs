//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Elements are stored as coefficient vectors of length `φ(n)` over the
//! arbitrary-precision rationals, reduced modulo the n-th cyclotomic
//! polynomial `Φ_n`. Reduction modulo `Φ_n` (rather than `xⁿ − 1`) makes
//! the representation per order canonical, so zero-testing and equality
//! are exact coefficient comparisons after order unification.
//!
//! Mixed-order operands are unified upward into `Q(ζ_lcm)`; orders are not
//! minimized after each operation. A minimization pass exists for display
//! and for explicit normalization.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            phi -= phi / p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn divisors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

/// The n-th cyclotomic polynomial `Φ_n`, with integer coefficients listed
/// from the constant term up; the degree is `φ(n)` and the polynomial is
/// monic. `Π_{m|n} Φ_m = xⁿ − 1` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPolynomial {
    n: usize,
    coefficients: Vec<BigInt>,
}

impl CyclotomicPolynomial {
    pub fn new(n: usize) -> Result<CyclotomicPolynomial> {
        if n == 0 {
            return Err(Error::Parse(String::from("cyclotomic order must be >= 1")));
        }
        Ok(CyclotomicPolynomial {
            n,
            coefficients: cyclotomic_coeffs(n),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Coefficients from the constant term up; length `φ(n) + 1`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// Exact division of integer polynomials with monic divisor; panics on a
/// nonzero remainder, which cannot happen for cyclotomic factors.
fn poly_div_exact(numerator: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(divisor.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = numerator.to_vec();
    let dn = divisor.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dn)];
    for i in (dn..rem.len()).rev() {
        let lead = rem[i].clone();
        if lead.is_zero() {
            continue;
        }
        quot[i - dn] = lead.clone();
        for (j, c) in divisor.iter().enumerate() {
            let t = &lead * c;
            rem[i - dn + j] -= t;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Coefficients of `Φ_n`, computed by dividing `xⁿ − 1` by the product of
/// all lower-order cyclotomic factors.
fn cyclotomic_coeffs(n: usize) -> Vec<BigInt> {
    let mut memo: Vec<Option<Vec<BigInt>>> = vec![None; n + 1];
    for m in divisors(n) {
        // x^m - 1
        let mut quot = vec![BigInt::zero(); m + 1];
        quot[0] = BigInt::from(-1);
        quot[m] = BigInt::one();
        for k in divisors(m) {
            if k < m {
                let phi_k = memo[k].as_ref().expect("computed in divisor order");
                quot = poly_div_exact(&quot, phi_k);
            }
        }
        memo[m] = Some(quot);
    }
    memo[n].take().expect("n divides n")
}

/// Reduces a rational polynomial (coefficients from the constant term up)
/// modulo `Φ_n`, returning exactly `φ(n)` coefficients.
fn reduce_mod_cyclotomic(mut coeffs: Vec<BigRational>, n: usize) -> Vec<BigRational> {
    let deg = euler_phi(n);
    if coeffs.len() <= deg {
        coeffs.resize(deg, BigRational::zero());
        return coeffs;
    }
    let phi: Vec<BigRational> = cyclotomic_coeffs(n)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    debug_assert_eq!(phi.len() - 1, deg);
    while coeffs.len() > deg {
        let lead = coeffs.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = coeffs.len() - deg;
        for (j, c) in phi[..deg].iter().enumerate() {
            let t = &lead * c;
            coeffs[shift + j] -= t;
        }
    }
    coeffs.resize(deg, BigRational::zero());
    coeffs
}

/// An exact element of `Q(ζ_n)`: the value `Σ coeffs[i]·ζ_nⁱ`, reduced
/// modulo `Φ_n`, so `coeffs.len() == φ(n)`.
#[derive(Clone)]
pub struct CycloNum {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero() -> CycloNum {
        CycloNum {
            order: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> CycloNum {
        CycloNum {
            order: 1,
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_rational(q: BigRational) -> CycloNum {
        CycloNum {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(v: i64) -> CycloNum {
        CycloNum::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `ζ_n^(k mod n)`, reduced modulo `Φ_n`.
    pub fn zeta_pow(n: usize, k: i64) -> Result<CycloNum> {
        if n == 0 {
            return Err(Error::Parse(String::from("root-of-unity order must be >= 1")));
        }
        let e = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Ok(CycloNum {
            order: n,
            coeffs: reduce_mod_cyclotomic(coeffs, n),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients over the power basis `1, ζ, …, ζ^{φ(n)−1}`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, or [`Error::NotRational`] when the element does
    /// not lie in `Q`.
    pub fn as_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational)
        }
    }

    /// Re-expresses the element in `Q(ζ_m)` for a multiple `m` of the
    /// current order, via `ζ_n = ζ_m^{m/n}`.
    fn raised_to_order(&self, m: usize) -> CycloNum {
        debug_assert_eq!(m % self.order, 0);
        if m == self.order {
            return self.clone();
        }
        let step = m / self.order;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        CycloNum {
            order: m,
            coeffs: reduce_mod_cyclotomic(poly, m),
        }
    }

    fn unified(&self, other: &CycloNum) -> (CycloNum, CycloNum) {
        let l = num_integer::lcm(self.order, other.order);
        (self.raised_to_order(l), other.raised_to_order(l))
    }

    pub fn add(&self, other: &CycloNum) -> CycloNum {
        let (mut a, b) = self.unified(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycloNum) -> CycloNum {
        let (mut a, b) = self.unified(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNum) -> CycloNum {
        let (a, b) = self.unified(other);
        let mut prod = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        CycloNum {
            order: a.order,
            coeffs: reduce_mod_cyclotomic(prod, a.order),
        }
    }

    pub fn scale(&self, q: &BigRational) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> CycloNum {
        let mut acc = CycloNum::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The same value over the smallest cyclotomic subfield `Q(ζ_m)`,
    /// `m | order`, that contains it. Solved exactly by expressing the
    /// element in the embedded power basis of each candidate subfield.
    pub fn to_minimal_order(&self) -> CycloNum {
        for m in divisors(self.order) {
            if m == self.order {
                break;
            }
            let dim = euler_phi(m);
            // columns: ζ_m^i embedded into Q(ζ_order)
            let mut columns = Vec::with_capacity(dim);
            for i in 0..dim {
                let basis = CycloNum::zeta_pow(m, i as i64)
                    .expect("m >= 1")
                    .raised_to_order(self.order);
                columns.push(basis.coeffs);
            }
            if let Some(solution) = solve_exact(&columns, &self.coeffs) {
                return CycloNum {
                    order: m,
                    coeffs: solution,
                };
            }
        }
        self.clone()
    }
}

/// Solves `Σ_i x_i·columns[i] = target` exactly over the rationals.
/// Returns `None` when the system is inconsistent.
fn solve_exact(columns: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let cols = columns.len();
    // augmented matrix, row major
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut next_row = 0usize;
    for col in 0..cols {
        let Some(p) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, p);
        let inv = m[next_row][col].clone();
        for c in col..=cols {
            let v = &m[next_row][c] / &inv;
            m[next_row][c] = v;
        }
        for r in 0..rows {
            if r != next_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let t = &f * &m[next_row][c];
                    m[r][c] -= t;
                }
            }
        }
        pivot_of_col[col] = next_row;
        next_row += 1;
        if next_row == rows {
            break;
        }
    }
    // consistency: no pivot-free row with nonzero rhs
    for r in 0..rows {
        if (0..cols).all(|c| m[r][c].is_zero()) && !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut solution = vec![BigRational::zero(); cols];
    for (col, &pr) in pivot_of_col.iter().enumerate() {
        if pr != usize::MAX {
            solution[col] = m[pr][cols].clone();
        }
    }
    // verify (free columns were set to zero)
    for r in 0..target.len() {
        let mut acc = BigRational::zero();
        for (i, c) in columns.iter().enumerate() {
            acc += &solution[i] * &c[r];
        }
        if acc != target[r] {
            return None;
        }
    }
    Some(solution)
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unified(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl core::ops::Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::add(self, rhs)
    }
}

impl core::ops::Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::sub(self, rhs)
    }
}

impl core::ops::Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::mul(self, rhs)
    }
}

impl core::ops::Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::neg(self)
    }
}

impl fmt::Display for CycloNum {
    /// Minimal-order rendering: pure rationals as `p/q` or an integer,
    /// everything else as `a0 + a1*z + a2*z^2 … (z = zeta_n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.to_minimal_order();
        if x.order == 1 {
            return write!(f, "{}", x.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (z = zeta_{})", x.order)
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn zeta(n: usize, k: i64) -> CycloNum {
        CycloNum::zeta_pow(n, k).unwrap()
    }

    #[test]
    fn zeta_one_is_one() {
        assert!(zeta(1, 0).is_one());
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(zeta(4, 2), CycloNum::from_integer(-1));
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let s = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(s, CycloNum::from_integer(-1));
    }

    #[test]
    fn mul_of_inverse_roots() {
        assert!(zeta(3, 1).mul(&zeta(3, 2)).is_one());
    }

    #[test]
    fn difference_of_squares_over_q_i() {
        let one = CycloNum::one();
        let i = zeta(4, 1);
        let prod = one.add(&i).mul(&one.sub(&i));
        assert_eq!(prod, CycloNum::from_integer(2));
    }

    #[test]
    fn cross_order_equality() {
        assert_eq!(zeta(6, 2), zeta(3, 1));
        assert_ne!(zeta(6, 1), zeta(3, 1));
    }

    #[test]
    fn as_rational_values() {
        let s = zeta(3, 0).add(&zeta(3, 1)).add(&zeta(3, 2));
        assert_eq!(s.as_rational().unwrap(), BigRational::zero());
        assert_eq!(
            zeta(4, 2).as_rational().unwrap(),
            BigRational::from_integer(BigInt::from(-1))
        );
        assert_eq!(zeta(3, 1).as_rational(), Err(Error::NotRational));
    }

    #[test]
    fn roots_of_unity_identities_up_to_24() {
        for n in 1..=24 {
            assert!(zeta(n, 1).pow(n as u64).is_one(), "zeta_{n}^{n} != 1");
            if n >= 2 {
                let mut s = CycloNum::zero();
                for j in 0..n {
                    s = s.add(&zeta(n, j as i64));
                }
                assert!(s.is_zero(), "sum of all zeta_{n}^j != 0");
            }
        }
    }

    #[test]
    fn cyclotomic_product_recovers_x_n_minus_one() {
        for n in 1..=24usize {
            let mut prod = vec![BigInt::one()];
            for m in divisors(n) {
                let phi = CyclotomicPolynomial::new(m).unwrap();
                let mut next = vec![BigInt::zero(); prod.len() + phi.degree()];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in phi.coefficients().iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expect = vec![BigInt::zero(); n + 1];
            expect[0] = BigInt::from(-1);
            expect[n] = BigInt::one();
            assert_eq!(prod, expect, "product of cyclotomic factors at n = {n}");
        }
    }

    #[test]
    fn phi_degree_is_totient() {
        for n in 1..=30 {
            assert_eq!(CyclotomicPolynomial::new(n).unwrap().degree(), euler_phi(n));
        }
    }

    #[test]
    fn minimal_order_descends() {
        let x = zeta(6, 2); // equals zeta_3
        assert_eq!(x.to_minimal_order().order(), 3);
        let y = zeta(12, 6); // equals -1
        assert_eq!(y.to_minimal_order().order(), 1);
        // Q(zeta_6) = Q(zeta_3), so zeta_6 itself descends to order 3
        let z = zeta(6, 1);
        let m = z.to_minimal_order();
        assert_eq!(m.order(), 3);
        assert_eq!(m, z);
        // sqrt(2) = zeta_8 + zeta_8^7 lies in no smaller cyclotomic field
        let s = zeta(8, 1).add(&zeta(8, 7));
        assert_eq!(s.to_minimal_order().order(), 8);
    }

    #[test]
    fn display_formats() {
        assert_eq!(CycloNum::from_integer(-1).to_string(), "-1");
        assert_eq!(
            CycloNum::from_rational(BigRational::new(BigInt::from(3), BigInt::from(2)))
                .to_string(),
            "3/2"
        );
        assert_eq!(zeta(3, 1).to_string(), "1*z (z = zeta_3)");
        let x = CycloNum::one().add(&zeta(4, 1));
        assert_eq!(x.to_string(), "1 + 1*z (z = zeta_4)");
    }
}
