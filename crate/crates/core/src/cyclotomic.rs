//! Exact arithmetic in the cyclotomic field Q(zeta_m), power basis mod Phi_m.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    assert!(m >= 1);
    // x^m - 1 divided by Phi_k for every proper divisor k.
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for k in 1..m {
        if m.is_multiple_of(k) {
            num = poly_div_monic(&num, &cyclotomic_polynomial(k));
        }
    }
    num
}

fn poly_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

pub fn euler_phi(m: usize) -> usize {
    (1..=m).filter(|&k| gcd(k, m) == 1).count()
}

/// `Some((p, a))` when `m = p^a` with `a >= 1`.
pub fn prime_power(m: usize) -> Option<(usize, u32)> {
    if m < 2 {
        return None;
    }
    let p = (2..=m).find(|p| m.is_multiple_of(*p)).unwrap();
    let mut k = m;
    let mut a = 0;
    while k.is_multiple_of(p) {
        k /= p;
        a += 1;
    }
    (k == 1).then_some((p, a))
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An element of Q(zeta_m) written in the basis 1, zeta, ..., zeta^(phi(m)-1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycNum {
    m: usize,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(m: usize) -> Self {
        CycNum {
            m,
            coeffs: vec![BigRational::zero(); euler_phi(m)],
        }
    }

    pub fn from_int(m: usize, k: i64) -> Self {
        let mut z = CycNum::zero(m);
        z.coeffs[0] = BigRational::from_integer(k.into());
        z
    }

    pub fn from_rational(m: usize, num: i64, den: i64) -> Self {
        let mut z = CycNum::zero(m);
        z.coeffs[0] = BigRational::new(num.into(), den.into());
        z
    }

    pub fn one(m: usize) -> Self {
        CycNum::from_int(m, 1)
    }

    /// zeta_m^k for any integer k.
    pub fn zeta_pow(m: usize, k: i64) -> Self {
        let mut v = vec![0i128; m];
        v[k.rem_euclid(m as i64) as usize] = 1;
        CycNum::from_group_ring(m, &v)
    }

    /// Reduces sum_k v[k] zeta^k (k taken mod m) to the power basis.
    pub fn from_group_ring(m: usize, v: &[i128]) -> Self {
        let mut full = vec![BigRational::zero(); m.max(1)];
        for (k, &c) in v.iter().enumerate() {
            if c != 0 {
                full[k % m] += BigRational::from_integer(BigInt::from(c));
            }
        }
        CycNum::reduce(m, full)
    }

    fn reduce(m: usize, mut full: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        for i in (deg..full.len()).rev() {
            let c = std::mem::take(&mut full[i]);
            if c.is_zero() {
                continue;
            }
            for (j, &pc) in phi.iter().enumerate().take(deg) {
                full[i - deg + j] -= &c * BigRational::from_integer(pc.into());
            }
        }
        full.truncate(deg);
        full.resize(deg, BigRational::zero());
        CycNum { m, coeffs: full }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every power-basis coefficient is an integer, i.e. the element lies in Z[zeta].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The value when the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// The value when the element is a rational integer fitting in i128.
    pub fn as_integer(&self) -> Option<i128> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| q.to_integer().to_i128())
    }

    /// Image under zeta -> 1 modulo `p`, for integral elements.
    pub fn residue_at_one_mod(&self, p: usize) -> Option<usize> {
        if !self.is_integral() {
            return None;
        }
        let s: BigInt = self.coeffs.iter().map(|c| c.to_integer()).sum();
        let r = s.mod_floor_pos(p);
        Some(r)
    }

    /// Complex conjugation zeta -> zeta^-1.
    pub fn conj(&self) -> Self {
        let mut full = vec![BigRational::zero(); self.m];
        for (k, c) in self.coeffs.iter().enumerate() {
            full[(self.m - k) % self.m] += c;
        }
        CycNum::reduce(self.m, full)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.m, other.m, "mixing Q(zeta_{}) and Q(zeta_{})", self.m, other.m);
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidParameter("inverse of zero".into()));
        }
        // Solve self * x = 1 as a linear system in the power basis.
        let n = self.coeffs.len();
        let mut mat: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        let mut basis = CycNum::one(self.m);
        let zeta = CycNum::zeta_pow(self.m, 1);
        let mut columns = Vec::with_capacity(n);
        for _ in 0..n {
            columns.push((self * &basis).coeffs);
            basis = &basis * &zeta;
        }
        for i in 0..n {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(if i == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            });
            mat.push(row);
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !mat[r][col].is_zero())
                .ok_or_else(|| Error::Inconsistency("singular multiplication matrix".into()))?;
            mat.swap(col, pivot);
            let pv = mat[col][col].clone();
            for x in mat[col].iter_mut() {
                *x /= &pv;
            }
            let pivot_row = mat[col].clone();
            for (r, row) in mat.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                        *x -= &f * p;
                    }
                }
            }
        }
        Ok(CycNum {
            m: self.m,
            coeffs: mat.into_iter().map(|row| row[n].clone()).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }
}

trait ModFloorPos {
    fn mod_floor_pos(&self, p: usize) -> usize;
}

impl ModFloorPos for BigInt {
    fn mod_floor_pos(&self, p: usize) -> usize {
        let p = BigInt::from(p);
        let mut r = self % &p;
        if r.is_negative() {
            r += &p;
        }
        r.to_usize().unwrap()
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.check(rhs);
        CycNum {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.check(rhs);
        CycNum {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.check(rhs);
        let n = self.coeffs.len();
        let mut full = vec![BigRational::zero(); (2 * n).max(self.m)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                full[i + j] += a * b;
            }
        }
        CycNum::reduce(self.m, full)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
