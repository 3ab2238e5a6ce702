//! Poincaré polynomials, fake degrees, the invariants a and b, special
//! characters and families for the spetsial groups G(e,1,n) and G(e,e,n).

use std::fmt;

use crate::combinatorics::{
    binomial, enumerate_multipartitions, GroupSpec, Multipartition, MultipartitionOrbit, Partition,
};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::symbols::{similarity_classes, Symbol, SymbolType, Weight};

/// prod (X^d_i - 1) / (X - 1) over the reflection degrees.
pub fn poincare_polynomial(group: &GroupSpec) -> LaurentPoly {
    let x_minus_one = LaurentPoly::x_pow_minus_one(1);
    group
        .degrees()
        .into_iter()
        .map(|d| {
            LaurentPoly::x_pow_minus_one(d as i64)
                .div_exact(&x_minus_one)
                .expect("X - 1 divides X^d - 1")
        })
        .product()
}

/// The set {a_j + j} of a partition with increasing parts a_0 <= a_1 <= ...
fn beta_set(parts: &[u32]) -> Vec<i64> {
    parts.iter().enumerate().map(|(j, &a)| a as i64 + j as i64).collect()
}

fn delta(set: &[i64], y: i64) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for (idx, &a) in set.iter().enumerate() {
        for &b in &set[..idx] {
            p = &p * &(LaurentPoly::monomial(1, a * y) - LaurentPoly::monomial(1, b * y));
        }
    }
    p
}

fn theta(set: &[i64], y: i64) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for &a in set {
        for l in 1..=a {
            p = &p * &LaurentPoly::x_pow_minus_one(l * y);
        }
    }
    p
}

/// Fake degree of the G(de,1,n) character labelled by `mp`, from its
/// hook-type product formula. The number of components gives de.
pub fn fake_degree_ge1n(mp: &Multipartition) -> Result<LaurentPoly> {
    fake_degree_ge1n_padded(mp, &vec![0; mp.num_components()])
}

/// As [`fake_degree_ge1n`], with `extra[i]` leading zero parts added to
/// component i before forming the beta-sets. The result does not depend on `extra`.
pub fn fake_degree_ge1n_padded(mp: &Multipartition, extra: &[usize]) -> Result<LaurentPoly> {
    let de = mp.num_components() as i64;
    let n = mp.size() as i64;
    let mut num: LaurentPoly = (1..=n).map(|h| LaurentPoly::x_pow_minus_one(de * h)).product();
    let mut den = LaurentPoly::one();
    for (i, c) in mp.components().iter().enumerate() {
        let parts = c.padded(c.len() + extra[i]);
        let set = beta_set(&parts);
        let c_i: i64 = (0..set.len() as u64).map(|l| binomial(l, 2) as i64).sum();
        num = &num * &delta(&set, de);
        num = num.shift(i as i64 * c.size() as i64);
        den = &den * &theta(&set, de);
        den = den.shift(de * c_i);
    }
    num.div_exact(&den)
}

/// Fake degree shared by the components of the G(de,e,n) character labelled by `mp`.
pub fn fake_degree(group: &GroupSpec, mp: &Multipartition) -> Result<LaurentPoly> {
    let orbit = MultipartitionOrbit::new(*group, mp)?;
    if group.e == 1 {
        return fake_degree_ge1n(mp);
    }
    if group.n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut sum = LaurentPoly::zero();
    for j in 0..group.e {
        sum = &sum + &fake_degree_ge1n(&mp.rotate(j * group.d))?;
    }
    let n = group.n as i64;
    let d = group.d as i64;
    let e = group.e as i64;
    let r = (&sum * &LaurentPoly::x_pow_minus_one(n * d)).div_exact(&LaurentPoly::x_pow_minus_one(n * d * e))?;
    r.div_scalar(orbit.stabilizer_order as i128)
}

/// b: the lowest degree in which the character occurs in the coinvariants.
pub fn b_value(group: &GroupSpec, mp: &Multipartition) -> Result<u64> {
    let r = fake_degree(group, mp)?;
    let v = r
        .valuation()
        .ok_or_else(|| Error::Inconsistency(format!("fake degree of {mp} vanishes")))?;
    Ok(v as u64)
}

fn require_spetsial(group: &GroupSpec) -> Result<()> {
    if group.is_spetsial() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{group} is not spetsial")))
    }
}

/// The symbol that carries a and the families: Λ^{1,0}_b for G(e,1,n), Λ^{1,0}_d for G(e,e,n).
pub fn spetsial_symbol(group: &GroupSpec, mp: &Multipartition) -> Result<Symbol> {
    require_spetsial(group)?;
    Symbol::new(group, mp, SymbolType::new(1, 0), &Weight::spetsial(group))
}

/// a, read off as a^c of the spetsial symbol.
pub fn a_value(group: &GroupSpec, mp: &Multipartition) -> Result<u64> {
    Ok(spetsial_symbol(group, mp)?.a_c() as u64)
}

/// Special means a = b, which happens exactly for distinguished spetsial symbols.
pub fn is_special(group: &GroupSpec, mp: &Multipartition) -> Result<bool> {
    Ok(spetsial_symbol(group, mp)?.is_distinguished())
}

/// An irreducible character of G(de,e,n): a rotation orbit and a component
/// index in `1..=stabilizer_order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub orbit: MultipartitionOrbit,
    pub component: usize,
}

impl IrrepLabel {
    pub fn multipartition(&self) -> &Multipartition {
        &self.orbit.representative
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbit.stabilizer_order > 1 {
            write!(f, "{}#{}", self.orbit, self.component)
        } else {
            write!(f, "{}", self.orbit)
        }
    }
}

/// Every irreducible character, grouped by orbit.
pub fn irreps(group: &GroupSpec) -> Vec<IrrepLabel> {
    enumerate_multipartitions(group)
        .into_iter()
        .flat_map(|o| {
            (1..=o.stabilizer_order).map(move |l| IrrepLabel {
                orbit: o.clone(),
                component: l,
            })
        })
        .collect()
}

/// A family of characters together with its special members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub members: Vec<IrrepLabel>,
    pub special: Vec<IrrepLabel>,
}

/// Families: similarity classes of spetsial symbols, except that for
/// G(e,e,n) each component of a stuttering orbit forms its own family.
pub fn families(group: &GroupSpec) -> Result<Vec<Family>> {
    require_spetsial(group)?;
    let orbits = enumerate_multipartitions(group);
    let symbols = orbits
        .iter()
        .map(|o| spetsial_symbol(group, &o.representative))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let (stutter, rest): (Vec<usize>, Vec<usize>) =
        (0..orbits.len()).partition(|&i| group.e > 1 && orbits[i].is_stuttering());
    let rest_symbols: Vec<Symbol> = rest.iter().map(|&i| symbols[i].clone()).collect();
    for class in similarity_classes(&rest_symbols)? {
        let mut members = Vec::new();
        let mut special = Vec::new();
        for idx in class {
            let i = rest[idx];
            for l in 1..=orbits[i].stabilizer_order {
                let label = IrrepLabel {
                    orbit: orbits[i].clone(),
                    component: l,
                };
                if symbols[i].is_distinguished() {
                    special.push(label.clone());
                }
                members.push(label);
            }
        }
        out.push(Family { members, special });
    }
    for i in stutter {
        for l in 1..=orbits[i].stabilizer_order {
            let label = IrrepLabel {
                orbit: orbits[i].clone(),
                component: l,
            };
            let special = if symbols[i].is_distinguished() {
                vec![label.clone()]
            } else {
                vec![]
            };
            out.push(Family {
                members: vec![label],
                special,
            });
        }
    }
    Ok(out)
}

/// Checks a <= b for every character, as expected for a spetsial group.
pub fn check_spetsial(group: &GroupSpec) -> Result<bool> {
    require_spetsial(group)?;
    for o in enumerate_multipartitions(group) {
        if a_value(group, &o.representative)? > b_value(group, &o.representative)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// b for G(e,1,n) by the closed beta-set formula, with row 0 padded to
/// k+1 parts and the other rows to k parts.
pub fn b_closed_form_ge1n(mp: &Multipartition, k: usize) -> Result<i64> {
    let e = mp.num_components();
    let sets = padded_beta_sets(mp, |i| if i == 0 { k + 1 } else { k })?;
    let mut b = 0i64;
    for (i, set) in sets.iter().enumerate() {
        b += e as i64 * lower_pair_sum(set);
        b += i as i64 * set.iter().sum::<i64>();
    }
    b -= (0..k as u64).map(|l| binomial(e as u64 * l + 1, 2) as i64).sum::<i64>();
    Ok(b)
}

/// b for G(e,e,n) by the closed beta-set formula, with every row padded to k parts.
pub fn b_closed_form_geen(mp: &Multipartition, k: usize) -> Result<i64> {
    let e = mp.num_components();
    let sets = padded_beta_sets(mp, |_| k)?;
    let mut b: i64 = sets.iter().map(|s| e as i64 * lower_pair_sum(s)).sum();
    b += (0..e)
        .map(|j| {
            (0..e)
                .map(|i| i as i64 * sets[(i + j) % e].iter().sum::<i64>())
                .sum::<i64>()
        })
        .min()
        .unwrap_or(0);
    b -= (0..k as u64).map(|l| binomial(e as u64 * l, 2) as i64).sum::<i64>();
    Ok(b)
}

fn padded_beta_sets(mp: &Multipartition, len: impl Fn(usize) -> usize) -> Result<Vec<Vec<i64>>> {
    mp.components()
        .iter()
        .enumerate()
        .map(|(i, c): (usize, &Partition)| {
            let l = len(i);
            if c.len() > l {
                return Err(Error::Mismatch(format!(
                    "component {i} of {mp} needs more than {l} parts"
                )));
            }
            Ok(beta_set(&c.padded(l)))
        })
        .collect()
}

fn lower_pair_sum(set: &[i64]) -> i64 {
    // set is strictly increasing, so set[j] is the smaller element of len-1-j pairs.
    set.iter()
        .enumerate()
        .map(|(j, &b)| b * (set.len() - 1 - j) as i64)
        .sum()
}
