//! Brute-force character theory of G(de,e,n), used to check the closed formulas.
//!
//! Elements are monomial matrices. Characters of G(de,1,n) are computed as
//! induced characters from the Young-type subgroup prod G(de,1,n_i), with
//! symmetric group values from the Murnaghan-Nakayama rule. Fake degrees come
//! from the graded character of the coinvariant algebra,
//! prod (1 - X^d_i) / det(1 - X w), averaged against the character.

use std::collections::HashMap;

use crate::combinatorics::{factorial, GroupSpec, Multipartition, Partition};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Default cap on the group order for brute-force computations.
pub const DEFAULT_BOUND: u128 = 5000;

/// The monomial matrix sending e_j to zeta^exps[j] e_perm[j], zeta = exp(2 pi i / m).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub exps: Vec<u32>,
    pub perm: Vec<usize>,
    pub m: u32,
}

impl GroupElement {
    pub fn identity(m: u32, n: usize) -> Self {
        GroupElement {
            exps: vec![0; n],
            perm: (0..n).collect(),
            m,
        }
    }

    pub fn permutation(m: u32, perm: Vec<usize>) -> Self {
        GroupElement {
            exps: vec![0; perm.len()],
            perm,
            m,
        }
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let n = self.perm.len();
        let mut exps = vec![0; n];
        let mut perm = vec![0; n];
        for j in 0..n {
            let k = other.perm[j];
            exps[j] = (other.exps[j] + self.exps[k]) % self.m;
            perm[j] = self.perm[k];
        }
        GroupElement { exps, perm, m: self.m }
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.perm.len();
        let mut exps = vec![0; n];
        let mut perm = vec![0; n];
        for j in 0..n {
            let k = self.perm[j];
            perm[k] = j;
            exps[k] = (self.m - self.exps[j]) % self.m;
        }
        GroupElement { exps, perm, m: self.m }
    }

    /// Cycles of the underlying permutation as (length, exponent sum mod m).
    pub fn cycles(&self) -> Vec<(usize, u32)> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut j, mut len, mut sum) = (start, 0, 0);
            while !seen[j] {
                seen[j] = true;
                sum = (sum + self.exps[j]) % self.m;
                len += 1;
                j = self.perm[j];
            }
            out.push((len, sum));
        }
        out
    }

    /// The determinant is zeta^(sum of exponents) times the sign of the permutation.
    pub fn det_exponent_sum(&self) -> u32 {
        self.exps.iter().sum::<u32>() % self.m
    }
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Every element of G(de,e,n); fails if the order exceeds `bound`.
pub fn group_elements(group: &GroupSpec, bound: u128) -> Result<Vec<GroupElement>> {
    let order = group.order();
    if order > bound {
        return Err(Error::BoundExceeded { order, bound });
    }
    let m = group.de() as u32;
    let n = group.n;
    let perms = permutations(n);
    let mut out = Vec::with_capacity(order as usize);
    let mut exps = vec![0u32; n];
    loop {
        if exps.iter().sum::<u32>() % group.e as u32 == 0 {
            for p in &perms {
                out.push(GroupElement {
                    exps: exps.clone(),
                    perm: p.clone(),
                    m,
                });
            }
        }
        // Next exponent vector in base m.
        let mut k = 0;
        while k < n && exps[k] + 1 == m {
            exps[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        exps[k] += 1;
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// Character value of the symmetric group: `lambda` at cycle type `mu`.
pub fn symmetric_character(lambda: &Partition, mu: &[u32]) -> i64 {
    let mut memo = HashMap::new();
    let beta: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &a)| a as i64 + j as i64)
        .collect();
    let mut mu: Vec<u32> = mu.to_vec();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    mn_rule(&beta, &mu, &mut memo)
}

fn mn_rule(beta: &[i64], mu: &[u32], memo: &mut HashMap<(Vec<i64>, Vec<u32>), i64>) -> i64 {
    let Some((&first, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = first as i64;
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - l;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rule(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Group-ring value sum_k v[k] zeta^k, with `v.len() == m`.
type ZetaVec = Vec<i128>;

fn zeta_mul(a: &[i128], b: &[i128]) -> ZetaVec {
    let m = a.len();
    let mut out = vec![0; m];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[(i + j) % m] += x * y;
        }
    }
    out
}

fn zeta_conj(a: &[i128]) -> ZetaVec {
    let m = a.len();
    (0..m).map(|k| a[(m - k) % m]).collect()
}

/// Character of E_mp at `g`, scaled by prod n_i!, as a group-ring vector.
fn scaled_character(mp: &Multipartition, g: &GroupElement, perms: &[Vec<usize>]) -> ZetaVec {
    let m = g.m as usize;
    let mut block = Vec::with_capacity(g.perm.len());
    for (i, c) in mp.components().iter().enumerate() {
        block.extend(std::iter::repeat_n(i, c.size() as usize));
    }
    let mut out = vec![0i128; m];
    let mut memo = HashMap::new();
    let betas: Vec<Vec<i64>> = mp
        .components()
        .iter()
        .map(|c| {
            c.parts()
                .iter()
                .enumerate()
                .map(|(j, &a)| a as i64 + j as i64)
                .collect()
        })
        .collect();
    for p in perms {
        let x = GroupElement::permutation(g.m, p.clone());
        let h = x.inverse().compose(g).compose(&x);
        if (0..h.perm.len()).any(|j| block[h.perm[j]] != block[j]) {
            continue;
        }
        let mut value: i64 = 1;
        let mut twist: usize = 0;
        for (i, beta) in betas.iter().enumerate() {
            let mut cycle_type: Vec<u32> = Vec::new();
            let mut seen = vec![false; h.perm.len()];
            for start in 0..h.perm.len() {
                if block[start] != i || seen[start] {
                    continue;
                }
                let (mut j, mut len) = (start, 0);
                while !seen[j] {
                    seen[j] = true;
                    twist += i * h.exps[j] as usize;
                    len += 1;
                    j = h.perm[j];
                }
                cycle_type.push(len);
            }
            cycle_type.sort_unstable_by(|a, b| b.cmp(a));
            value *= mn_rule(beta, &cycle_type, &mut memo);
            if value == 0 {
                break;
            }
        }
        out[twist % m] += value as i128;
    }
    out
}

fn young_index(mp: &Multipartition) -> i128 {
    mp.components()
        .iter()
        .map(|c| factorial(c.size() as usize) as i128)
        .product()
}

/// Value at `g` of the G(de,1,n) character labelled by `mp` (de = number of components).
pub fn character_value(mp: &Multipartition, g: &GroupElement) -> Result<CycNum> {
    if mp.num_components() != g.m as usize || mp.size() as usize != g.perm.len() {
        return Err(Error::Mismatch(format!(
            "{mp} does not label a character of this group"
        )));
    }
    let perms = permutations(g.perm.len());
    let v = scaled_character(mp, g, &perms);
    let value = CycNum::from_group_ring(g.m as usize, &v);
    Ok(&value * &CycNum::from_rational(g.m as usize, 1, young_index(mp) as i64))
}

/// A conjugacy class: a representative and its size.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub size: usize,
}

/// G(de,e,n) with its conjugacy classes, for brute-force character computations.
#[derive(Clone, Debug)]
pub struct OracleGroup {
    group: GroupSpec,
    classes: Vec<ConjugacyClass>,
    perms: Vec<Vec<usize>>,
}

impl OracleGroup {
    pub fn new(group: &GroupSpec, bound: u128) -> Result<Self> {
        let elements = group_elements(group, bound)?;
        let index: HashMap<&GroupElement, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        let inverses: Vec<GroupElement> = elements.iter().map(GroupElement::inverse).collect();
        for i in 0..elements.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut size = 0;
            for (x, xi) in elements.iter().zip(&inverses) {
                let conj = x.compose(&elements[i]).compose(xi);
                let k = index[&conj];
                if class_of[k] == usize::MAX {
                    class_of[k] = c;
                    size += 1;
                }
            }
            classes.push(ConjugacyClass {
                representative: elements[i].clone(),
                size,
            });
        }
        Ok(OracleGroup {
            group: *group,
            classes,
            perms: permutations(group.n),
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    fn check_label(&self, mp: &Multipartition) -> Result<()> {
        if mp.num_components() != self.group.de() || mp.size() as usize != self.group.n {
            return Err(Error::Mismatch(format!(
                "{mp} does not label a character of {}",
                self.group
            )));
        }
        Ok(())
    }

    /// Class values of the G(de,1,n) character `mp` restricted to this group.
    pub fn character(&self, mp: &Multipartition) -> Result<Vec<CycNum>> {
        self.check_label(mp)?;
        let m = self.group.de();
        let inv = CycNum::from_rational(m, 1, young_index(mp) as i64);
        Ok(self
            .classes
            .iter()
            .map(|c| &CycNum::from_group_ring(m, &scaled_character(mp, &c.representative, &self.perms)) * &inv)
            .collect())
    }

    /// (1/|W|) sum over w of a(w) * conj(b(w)).
    pub fn inner_product(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        let m = self.group.de();
        let mut total = CycNum::zero(m);
        for ((c, x), y) in self.classes.iter().zip(a).zip(b) {
            total = &total + &(&CycNum::from_int(m, c.size as i64) * &(x * &y.conj()));
        }
        &total * &CycNum::from_rational(m, 1, self.group.order() as i64)
    }

    /// Graded multiplicity of the restricted character `mp` in the coinvariant algebra.
    pub fn fake_degree(&self, mp: &Multipartition) -> Result<LaurentPoly> {
        self.check_label(mp)?;
        let m = self.group.de();
        let degrees = self.group.degrees();
        let top: usize = degrees.iter().map(|d| *d as usize - 1).sum();
        // prod (1 - X^d_i), truncated.
        let mut numer = vec![0i128; top + 1];
        numer[0] = 1;
        for &d in &degrees {
            let d = d as usize;
            for k in (d..=top).rev() {
                numer[k] -= numer[k - d];
            }
        }
        let mut totals: Vec<ZetaVec> = vec![vec![0; m]; top + 1];
        for class in &self.classes {
            let chi = zeta_conj(&scaled_character(mp, &class.representative, &self.perms));
            if chi.iter().all(|&c| c == 0) {
                continue;
            }
            // 1 / det(1 - X w) as a power series with group-ring coefficients.
            let mut series: Vec<ZetaVec> = vec![vec![0; m]; top + 1];
            series[0][0] = 1;
            for (len, sum) in class.representative.cycles() {
                let mut next: Vec<ZetaVec> = vec![vec![0; m]; top + 1];
                for (deg, coeff) in series.iter().enumerate() {
                    let mut k = 0;
                    while deg + k * len <= top {
                        let shift = (k * sum as usize) % m;
                        for (t, &c) in coeff.iter().enumerate() {
                            next[deg + k * len][(t + shift) % m] += c;
                        }
                        k += 1;
                    }
                }
                series = next;
            }
            for j in 0..=top {
                let mut coeff = vec![0i128; m];
                for (k, &a) in numer.iter().enumerate().take(j + 1) {
                    if a != 0 {
                        for t in 0..m {
                            coeff[t] += a * series[j - k][t];
                        }
                    }
                }
                let contrib = zeta_mul(&chi, &coeff);
                for t in 0..m {
                    totals[j][t] += class.size as i128 * contrib[t];
                }
            }
        }
        let denom = self.group.order() as i128 * young_index(mp);
        let mut out = LaurentPoly::zero();
        for (j, t) in totals.iter().enumerate() {
            let value = CycNum::from_group_ring(m, t)
                .as_integer()
                .ok_or_else(|| Error::Inconsistency(format!("coefficient {j} for {mp} is not rational")))?;
            if value % denom != 0 {
                return Err(Error::Inconsistency(format!(
                    "coefficient {j} for {mp} is not an integer multiplicity"
                )));
            }
            out.add_term(j as i64, value / denom);
        }
        Ok(out)
    }
}

/// Fake degree of the restriction of E_mp to `group`, by brute force.
pub fn oracle_fake_degree(group: &GroupSpec, mp: &Multipartition, bound: u128) -> Result<LaurentPoly> {
    OracleGroup::new(group, bound)?.fake_degree(mp)
}
