//! Truncated induction (j-induction) between imprimitive groups, computed on
//! multipartitions and symbols.

use std::collections::BTreeSet;

use crate::combinatorics::{enumerate_multipartitions, GroupSpec, Multipartition, MultipartitionOrbit, Partition};
use crate::error::{Error, Result};
use crate::symbols::{Presymbol, Symbol, SymbolType, Weight};

/// j from G(e,1,n') x G(e,1,n'') to G(e,1,n'+n''): the componentwise sum.
pub fn j_sum(a: &Multipartition, b: &Multipartition) -> Result<Multipartition> {
    a.add(b)
}

/// Splits E_mp into the blocks it is j-induced from: for each component i and
/// each part m of the conjugate of mp_i, the character sign (x) gamma^i of G(e,1,m).
/// Returns (i, conjugate of mp_i) for the non-empty components.
pub fn decompose_irrep(mp: &Multipartition) -> Vec<(usize, Partition)> {
    mp.components()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(i, c)| (i, c.conjugate()))
        .collect()
}

/// Inverse of [`decompose_irrep`]: the j-sum of the blocks.
pub fn recompose(num_components: usize, blocks: &[(usize, Partition)]) -> Result<Multipartition> {
    let mut acc = Multipartition::empty(num_components);
    for (i, dual) in blocks {
        if *i >= num_components {
            return Err(Error::InvalidParameter(format!("twist {i} out of range")));
        }
        for &m in dual.parts() {
            acc = j_sum(&acc, &Multipartition::single(num_components, *i, Partition::column(m)))?;
        }
    }
    Ok(acc)
}

fn kappa_first(i: u32, s1: u32, s: u32, s2: u32, r1: u32) -> u32 {
    if i <= s1 {
        i
    } else if i <= s {
        s1
    } else if i <= s2 + r1 {
        i - s2
    } else {
        r1
    }
}

/// Writes the distinguished symbol Λ^{r,s}_b(mp) as a sum Λ' + Λ'' of
/// distinguished symbols of types `first` = (r',s') and (r-r', s-s'), and
/// returns the underlying multipartitions (β', β''), with β' + β'' = mp.
pub fn split_symbol(
    mp: &Multipartition,
    ty: SymbolType,
    first: SymbolType,
) -> Result<(Multipartition, Multipartition)> {
    let (r, s, r1, s1) = (ty.r, ty.s, first.r, first.s);
    if r == 0 || s > r || r1 > r || s1 > s || s1 > r1 || s - s1 > r - r1 {
        return Err(Error::InvalidParameter(format!(
            "cannot split type ({r},{s}) off type ({r1},{s1})"
        )));
    }
    let (r2, s2) = (r - r1, s - s1);
    let sym = Symbol::of(mp, ty, &Weight::b(mp.num_components()))?;
    if !sym.is_distinguished() {
        return Err(Error::NotDistinguished(format!("{sym} of type ({r},{s})")));
    }
    let lam = sym.representative();
    let mut rows1 = Vec::with_capacity(lam.rows().len());
    let mut rows2 = Vec::with_capacity(lam.rows().len());
    for row in lam.rows() {
        let mut a_row = Vec::with_capacity(row.len());
        let mut b_row = Vec::with_capacity(row.len());
        for &x in row {
            let (q, rem) = (x / r as u64, (x % r as u64) as u32);
            let k1 = kappa_first(rem, s1, s, s2, r1);
            a_row.push(q * r1 as u64 + k1 as u64);
            b_row.push(q * r2 as u64 + (rem - k1) as u64);
        }
        rows1.push(a_row);
        rows2.push(b_row);
    }
    let beta1 = Presymbol::new(first, rows1)?.multipartition()?;
    let beta2 = Presymbol::new(SymbolType::new(r2, s2), rows2)?.multipartition()?;
    Ok((beta1, beta2))
}

/// j from G(e,1,n) to G(ef,1,n).
///
/// Both multipartitions are read as symbols of type (0,0) and weight b. Each
/// position of the target takes the entry of the source position with the
/// same number of later positions; target positions with no partner get 0.
pub fn j_to_ef(mp: &Multipartition, f: usize) -> Result<Multipartition> {
    if f == 0 {
        return Err(Error::InvalidParameter("f must be at least 1".into()));
    }
    let e = mp.num_components();
    let ty = SymbolType::new(0, 0);
    let wb = Weight::b(e);
    let depth = wb.min_depth(mp);
    let source = Presymbol::from_multipartition(mp, ty, &wb.shape(depth))?;
    let target_depth = depth.div_ceil(f);
    let target_shape = Weight::b(e * f).shape(target_depth);
    let mut rows: Vec<Vec<u64>> = target_shape.iter().map(|&l| vec![0; l]).collect();
    let src: Vec<u64> = source
        .positions_in_order()
        .into_iter()
        .map(|p| source.entry(p))
        .collect();
    let target = Presymbol::protosymbol(ty, &target_shape).positions_in_order();
    if target.len() < src.len() {
        return Err(Error::Inconsistency("target shape too small".into()));
    }
    for (&(i, j), &v) in target.iter().rev().zip(src.iter().rev()) {
        rows[i][j] = v;
    }
    Presymbol::new(ty, rows)
        .map_err(|_| Error::Inconsistency(format!("j-induction of {mp} gave a non-increasing row")))?
        .multipartition()
}

/// j from the symmetric group S_m to G(e,1,m) of the character `lambda`.
pub fn j_from_symmetric(lambda: &Partition, e: usize) -> Result<Multipartition> {
    j_to_ef(&Multipartition::new(vec![lambda.clone()]), e)
}

/// j from G(e,e,n) to G(e,1,n), for orbits whose symbol Λ^{r,0}_d is
/// distinguished: the unique lift α with r(Λ^{r,0}_d(α)) distinguished.
pub fn j_geen_to_ge1n(orbit: &MultipartitionOrbit, r: u32) -> Result<Multipartition> {
    let group = orbit.group;
    if group.d != 1 {
        return Err(Error::Unsupported(format!("{group} is not of the form G(e,e,n)")));
    }
    let e = group.e;
    let ty = SymbolType::new(r, 0);
    let sym = Symbol::new(&group, &orbit.representative, ty, &Weight::d(e))?;
    if !sym.is_distinguished() {
        return Err(Error::NotDistinguished(format!("{sym} of type ({r},0)")));
    }
    let shape = Weight::d(e).shape(sym.depth());
    let mut found = Vec::new();
    for lift in orbit.lifts() {
        let p = Presymbol::from_multipartition(&lift, ty, &shape)?;
        if p.rotate().is_monotone() {
            found.push(lift);
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::Inconsistency(format!(
            "{orbit}: {k} lifts have a distinguished rotated symbol"
        ))),
    }
}

/// {α in P(e,1,n) : Λ^{r,s}_b(α) distinguished}.
pub fn springer_set_ge1n(e: usize, n: usize, ty: SymbolType) -> Result<Vec<Multipartition>> {
    let wb = Weight::b(e);
    let mut out = Vec::new();
    for mp in Multipartition::all(e, n as u32) {
        if Symbol::of(&mp, ty, &wb)?.is_distinguished() {
            out.push(mp);
        }
    }
    Ok(out)
}

/// Lifts to G(e,1,m) of the special characters of G(e,e,m).
pub fn geen_special_lifts(e: usize, m: usize) -> Result<Vec<Multipartition>> {
    let group = GroupSpec::geen(e, m)?;
    let mut out = Vec::new();
    for orbit in enumerate_multipartitions(&group) {
        let sym = Symbol::new(&group, &orbit.representative, SymbolType::new(1, 0), &Weight::d(e))?;
        if sym.is_distinguished() {
            out.push(j_geen_to_ge1n(&orbit, 1)?);
        }
    }
    Ok(out)
}

/// Special characters of G(e,1,m).
pub fn ge1n_specials(e: usize, m: usize) -> Result<Vec<Multipartition>> {
    springer_set_ge1n(e, m, SymbolType::new(1, 0))
}

/// The same set as [`springer_set_ge1n`], built by j-inducing special characters
/// of G(e,e,n_1) x ... x G(e,e,n_s) x G(e,1,n_{s+1}) x ... x G(e,1,n_r).
pub fn springer_set_ge1n_constructive(e: usize, n: usize, ty: SymbolType) -> Result<Vec<Multipartition>> {
    let mut kinds: Vec<Vec<Vec<Multipartition>>> = Vec::new();
    let geen: Vec<Vec<Multipartition>> = (0..=n).map(|m| geen_special_lifts(e, m)).collect::<Result<_>>()?;
    let ge1n: Vec<Vec<Multipartition>> = (0..=n).map(|m| ge1n_specials(e, m)).collect::<Result<_>>()?;
    for k in 0..ty.r {
        kinds.push(if k < ty.s { geen.clone() } else { ge1n.clone() });
    }
    let mut partial: BTreeSet<Multipartition> = BTreeSet::from([Multipartition::empty(e)]);
    for by_size in &kinds {
        let mut next = BTreeSet::new();
        for x in &partial {
            let used = x.size() as usize;
            for specials in by_size.iter().take(n - used + 1) {
                for y in specials {
                    next.insert(j_sum(x, y)?);
                }
            }
        }
        partial = next;
    }
    Ok(partial.into_iter().filter(|x| x.size() as usize == n).collect())
}

/// Orbits of G(e,e,n) whose symbol Λ^{r,0}_d is distinguished.
pub fn springer_set_geen(e: usize, n: usize, r: u32) -> Result<Vec<MultipartitionOrbit>> {
    if n == 2 && e > 2 {
        return Err(Error::Unsupported(format!(
            "G({e},{e},2) is dihedral; use the dihedral Springer set"
        )));
    }
    let group = GroupSpec::geen(e, n)?;
    let mut out = Vec::new();
    for orbit in enumerate_multipartitions(&group) {
        if Symbol::new(&group, &orbit.representative, SymbolType::new(r, 0), &Weight::d(e))?.is_distinguished() {
            out.push(orbit);
        }
    }
    Ok(out)
}
