//! Pseudoparabolic subgroups, Springer representations, and the lattice
//! stabilizer computations behind them.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinatorics::{enumerate_multipartitions, GroupSpec, Partition};
use crate::cyclotomic::{prime_power, CycNum};
use crate::error::{Error, Result};
use crate::invariants::IrrepLabel;
use crate::symbols::{Symbol, SymbolType, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// Z[ζ]^n.
    L1,
    /// Vectors of L1 whose coordinate sum lies in (1-ζ)Z[ζ].
    L2,
    /// The dihedral lattice {v e_1 - conj(v) e_2 : v in Z[ζ]}.
    L0,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LatticeKind::L1 => "L1",
            LatticeKind::L2 => "L2",
            LatticeKind::L0 => "L0",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "L1" | "1" => Ok(LatticeKind::L1),
            "L2" | "2" => Ok(LatticeKind::L2),
            "L0" | "0" => Ok(LatticeKind::L0),
            _ => Err(Error::Parse(format!("unknown lattice {s:?}"))),
        }
    }
}

/// Membership of a vector with coordinates in Q(ζ_e).
pub fn membership_l(v: &[CycNum], lattice: LatticeKind) -> Result<bool> {
    let Some(e) = v.first().map(CycNum::modulus) else {
        return Ok(true);
    };
    if v.iter().any(|x| x.modulus() != e) {
        return Err(Error::Mismatch("coordinates over different cyclotomic fields".into()));
    }
    match lattice {
        LatticeKind::L1 => Ok(v.iter().all(CycNum::is_integral)),
        LatticeKind::L2 => {
            if !v.iter().all(CycNum::is_integral) {
                return Ok(false);
            }
            let Some((p, _)) = prime_power(e) else {
                return Ok(true);
            };
            let sum = v.iter().fold(CycNum::zero(e), |acc, x| &acc + x);
            Ok(sum.residue_at_one_mod(p) == Some(0))
        }
        LatticeKind::L0 => {
            if v.len() != 2 {
                return Err(Error::InvalidParameter("L0 lives in rank 2".into()));
            }
            Ok(v[0].is_integral() && v[1] == -&v[0].conj())
        }
    }
}

/// A reflection of G(e,1,n) or of the dihedral group G(e,e,2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reflection {
    /// s_{ij}^{(k)}: e_i -> ζ^k e_j and e_j -> ζ^-k e_i, with i < j.
    Transposition { i: usize, j: usize, k: usize },
    /// t_i^{(k)}: e_i -> ζ^k e_i, with 1 <= k < e.
    Diagonal { i: usize, k: usize },
    /// s_i = [[0, ζ^i], [ζ^-i, 0]].
    Dihedral { i: usize },
}

impl Reflection {
    /// w·v over Q(ζ_e).
    pub fn apply(&self, e: usize, v: &[CycNum]) -> Vec<CycNum> {
        let mut out = v.to_vec();
        match *self {
            Reflection::Transposition { i, j, k } => {
                out[j] = &CycNum::zeta_pow(e, k as i64) * &v[i];
                out[i] = &CycNum::zeta_pow(e, -(k as i64)) * &v[j];
            }
            Reflection::Diagonal { i, k } => out[i] = &CycNum::zeta_pow(e, k as i64) * &v[i],
            Reflection::Dihedral { i } => {
                out[0] = &CycNum::zeta_pow(e, i as i64) * &v[1];
                out[1] = &CycNum::zeta_pow(e, -(i as i64)) * &v[0];
            }
        }
        out
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reflection::Transposition { i, j, k } => write!(f, "s{}{}^{k}", i + 1, j + 1),
            Reflection::Diagonal { i, k } => write!(f, "t{}^{k}", i + 1),
            Reflection::Dihedral { i } => write!(f, "s_{i}"),
        }
    }
}

/// All n(n-1)e/2 + n(e-1) reflections of G(e,1,n).
pub fn reflections(e: usize, n: usize) -> Vec<Reflection> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.extend((0..e).map(|k| Reflection::Transposition { i, j, k }));
        }
    }
    for i in 0..n {
        out.extend((1..e).map(|k| Reflection::Diagonal { i, k }));
    }
    out
}

/// The reflections s_0, ..., s_{e-1} of G(e,e,2).
pub fn dihedral_reflections(e: usize) -> Vec<Reflection> {
    (0..e).map(|i| Reflection::Dihedral { i }).collect()
}

/// Reflections w with v - w·v in the lattice. For L0 the candidates are the
/// dihedral reflections, otherwise those of G(e,1,n).
pub fn stabilizer_reflections(v: &[CycNum], lattice: LatticeKind) -> Result<BTreeSet<Reflection>> {
    let e = v
        .first()
        .map(CycNum::modulus)
        .ok_or_else(|| Error::InvalidParameter("empty vector".into()))?;
    let candidates = match lattice {
        LatticeKind::L0 => dihedral_reflections(e),
        _ => reflections(e, v.len()),
    };
    let mut out = BTreeSet::new();
    for w in candidates {
        let wv = w.apply(e, v);
        let diff: Vec<CycNum> = v.iter().zip(&wv).map(|(a, b)| a - b).collect();
        let in_lattice = match lattice {
            // v - w·v has the shape (u, -conj u) whenever v does, so only u matters.
            LatticeKind::L0 => diff[0].is_integral(),
            _ => membership_l(&diff, lattice)?,
        };
        if in_lattice {
            out.insert(w);
        }
    }
    Ok(out)
}

/// A direct factor of a pseudoparabolic subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Ge1n { e: usize, m: usize },
    Geen { e: usize, m: usize },
    Sym { m: usize },
}

impl Factor {
    pub fn size(&self) -> usize {
        match *self {
            Factor::Ge1n { m, .. } | Factor::Geen { m, .. } | Factor::Sym { m } => m,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Ge1n { e, m } => write!(f, "G({e},1,{m})"),
            Factor::Geen { e, m } => write!(f, "G({e},{e},{m})"),
            Factor::Sym { m } => write!(f, "S{m}"),
        }
    }
}

/// A product of factors, up to conjugacy. Trivial factors are normalised:
/// rank 0 factors are dropped and G(e,e,1) is written S1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PseudoparabolicShape {
    pub factors: Vec<Factor>,
}

impl PseudoparabolicShape {
    fn normalised(factors: Vec<Factor>) -> Self {
        let mut factors: Vec<Factor> = factors
            .into_iter()
            .filter(|f| f.size() > 0)
            .map(|f| match f {
                Factor::Geen { m: 1, .. } => Factor::Sym { m: 1 },
                f => f,
            })
            .collect();
        factors.sort_by(|a, b| {
            let rank = |f: &Factor| match f {
                Factor::Ge1n { .. } => 0,
                Factor::Geen { .. } => 1,
                Factor::Sym { .. } => 2,
            };
            rank(a).cmp(&rank(b)).then(b.size().cmp(&a.size()))
        });
        PseudoparabolicShape { factors }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(Factor::size).sum()
    }
}

impl fmt::Display for PseudoparabolicShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Weak compositions of `n` into `k` non-negative parts, as non-increasing tuples.
fn multisets(n: usize, k: usize, max: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=n.min(max)).rev() {
        for mut rest in multisets(n - first, k - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn check_nondihedral(group: &GroupSpec) -> Result<()> {
    if !group.is_spetsial() {
        return Err(Error::Unsupported(format!("{group} is not spetsial")));
    }
    if group.d == 1 && group.e > 1 && group.n == 2 {
        return Err(Error::Unsupported(format!(
            "{group} is dihedral; use the dihedral operations"
        )));
    }
    Ok(())
}

fn lattice_prime(group: &GroupSpec, lattice: LatticeKind) -> Result<Option<usize>> {
    let p = prime_power(group.de()).map(|(p, _)| p);
    match lattice {
        LatticeKind::L0 => Err(Error::InvalidParameter(format!(
            "L0 is only used for dihedral groups, not {group}"
        ))),
        LatticeKind::L1 if group.d == 1 && group.e > 1 && p.is_some() => Err(Error::InvalidParameter(format!(
            "L1 is not a primitive root lattice of {group}; use L2"
        ))),
        _ => Ok(p),
    }
}

/// Pseudoparabolic subgroups of a spetsial imprimitive non-dihedral group.
pub fn pseudoparabolics(group: &GroupSpec, lattice: LatticeKind) -> Result<Vec<PseudoparabolicShape>> {
    check_nondihedral(group)?;
    let p = lattice_prime(group, lattice)?;
    let (e, n) = (group.de(), group.n);
    let ge1n = group.e == 1;
    // Wreath-type blocks: (kind of block 0, kind of the other blocks, number of other blocks).
    let others = p.map_or(0, |p| p - 1);
    let mut out = BTreeSet::new();
    for wreath_total in 0..=n {
        for m in Partition::all((n - wreath_total) as u32) {
            let syms: Vec<Factor> = m.parts().iter().map(|&m| Factor::Sym { m: m as usize }).collect();
            for n0 in 0..=wreath_total {
                let mut first = Vec::new();
                let rest_kind: fn(usize, usize) -> Factor = if ge1n {
                    first.push(Factor::Ge1n { e, m: n0 });
                    if lattice == LatticeKind::L2 && p.is_some() {
                        |e, m| Factor::Geen { e, m }
                    } else {
                        |e, m| Factor::Ge1n { e, m }
                    }
                } else {
                    first.push(Factor::Geen { e, m: n0 });
                    |e, m| Factor::Geen { e, m }
                };
                for rest in multisets(wreath_total - n0, others, wreath_total - n0) {
                    let mut factors = first.clone();
                    factors.extend(rest.iter().map(|&m| rest_kind(e, m)));
                    factors.extend(syms.iter().cloned());
                    out.insert(PseudoparabolicShape::normalised(factors));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The symbol type whose distinguished symbols give the Springer representations.
pub fn springer_type(group: &GroupSpec, lattice: LatticeKind) -> Result<SymbolType> {
    check_nondihedral(group)?;
    let p = lattice_prime(group, lattice)?;
    let ge1n = group.e == 1;
    Ok(match (p, ge1n, lattice) {
        (None, _, _) => SymbolType::new(1, 0),
        (Some(p), true, LatticeKind::L2) => SymbolType::new(p as u32, p as u32 - 1),
        (Some(p), _, _) => SymbolType::new(p as u32, 0),
    })
}

/// Springer representations: characters whose spetsial-weight symbol of
/// [`springer_type`] is distinguished. Every component of an orbit is included.
pub fn springer_reps(group: &GroupSpec, lattice: LatticeKind) -> Result<Vec<IrrepLabel>> {
    let ty = springer_type(group, lattice)?;
    let weight = Weight::spetsial(group);
    let mut out = Vec::new();
    for orbit in enumerate_multipartitions(group) {
        if Symbol::new(group, &orbit.representative, ty, &weight)?.is_distinguished() {
            out.extend((1..=orbit.stabilizer_order).map(|component| IrrepLabel {
                orbit: orbit.clone(),
                component,
            }));
        }
    }
    Ok(out)
}

/// An irreducible character χ_b (or χ'_b) of G(e,e,2); the subscript is its b-value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralIrrep {
    pub b: usize,
    pub primed: bool,
}

impl DihedralIrrep {
    pub fn new(b: usize) -> Self {
        DihedralIrrep { b, primed: false }
    }

    pub fn primed(b: usize) -> Self {
        DihedralIrrep { b, primed: true }
    }

    pub fn dimension(&self, e: usize) -> usize {
        if self.b == 0 || self.b == e || 2 * self.b == e {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for DihedralIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{}_{}", if self.primed { "'" } else { "" }, self.b)
    }
}

impl std::str::FromStr for DihedralIrrep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (primed, rest) = if let Some(r) = t.strip_prefix("chi'_") {
            (true, r)
        } else if let Some(r) = t.strip_prefix("chi_") {
            (false, r)
        } else {
            return Err(Error::Parse(format!("bad dihedral label {s:?}")));
        };
        let b = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad dihedral label {s:?}")))?;
        Ok(DihedralIrrep { b, primed })
    }
}

fn check_dihedral(e: usize) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidParameter(format!("G({e},{e},2) is not dihedral")));
    }
    Ok(())
}

/// Irreducible characters of G(e,e,2).
pub fn dihedral_irreps(e: usize) -> Result<Vec<DihedralIrrep>> {
    check_dihedral(e)?;
    Ok(dihedral_irreps_of(e))
}

fn dihedral_irreps_of(d: usize) -> Vec<DihedralIrrep> {
    let mut out: Vec<DihedralIrrep> = (0..=(d - 1) / 2).map(DihedralIrrep::new).collect();
    if d.is_multiple_of(2) {
        out.push(DihedralIrrep::new(d / 2));
        out.push(DihedralIrrep::primed(d / 2));
    }
    out.push(DihedralIrrep::new(d));
    out
}

/// Trivial, reflection and sign for d >= 3; for d <= 2 every character.
pub fn dihedral_is_special(d: usize, chi: DihedralIrrep) -> bool {
    d <= 2 || (!chi.primed && (chi.b <= 1 || chi.b == d))
}

/// j from G(d,d,2), or G'(d,d,2) when `primed`, to G(e,e,2), for special characters.
pub fn dihedral_j_induce(d: usize, e: usize, primed: bool, chi: DihedralIrrep) -> Result<DihedralIrrep> {
    check_dihedral(e)?;
    if d == 0 || !e.is_multiple_of(d) {
        return Err(Error::InvalidParameter(format!("{d} does not divide {e}")));
    }
    if primed && !(e / d).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("G'({d},{d},2) needs e/d even")));
    }
    let irreps = if d == 1 {
        vec![DihedralIrrep::new(0), DihedralIrrep::new(1)]
    } else {
        dihedral_irreps_of(d)
    };
    if !irreps.contains(&chi) {
        return Err(Error::InvalidParameter(format!(
            "{chi} is not a character of G({d},{d},2)"
        )));
    }
    if d == e {
        return Ok(chi);
    }
    if !dihedral_is_special(d, chi) {
        return Err(Error::Unsupported(format!("j-induction of the non-special {chi}")));
    }
    Ok(match chi.b {
        0 => DihedralIrrep::new(0),
        b if b == d && primed && 2 * d == e => DihedralIrrep::primed(d),
        b if b == d => DihedralIrrep::new(d),
        _ => DihedralIrrep::new(1),
    })
}

/// A reflection subgroup G(d,d,2) = <s_0, s_{e/d}> or G'(d,d,2) = <s_1, s_{e/d+1}> of G(e,e,2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralSubgroup {
    pub d: usize,
    pub primed: bool,
}

impl DihedralSubgroup {
    /// The indices i of the reflections s_i it contains.
    pub fn reflection_indices(&self, e: usize) -> BTreeSet<usize> {
        let step = e / self.d;
        let offset = usize::from(self.primed);
        (0..self.d).map(|k| (offset + k * step) % e).collect()
    }
}

impl fmt::Display for DihedralSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d;
        write!(f, "G{}({d},{d},2)", if self.primed { "'" } else { "" })
    }
}

fn is_prime_power(d: usize) -> bool {
    prime_power(d).is_some()
}

/// Pseudoparabolic reflection subgroups of G(e,e,2), the whole group included.
pub fn dihedral_pseudoparabolics(e: usize) -> Result<Vec<DihedralSubgroup>> {
    check_dihedral(e)?;
    let mut out = Vec::new();
    for d in (1..=e).filter(|d| e.is_multiple_of(*d)) {
        if d == 1 || d == e || is_prime_power(d) {
            out.push(DihedralSubgroup { d, primed: false });
        }
    }
    for d in (1..=e).filter(|d| e.is_multiple_of(*d) && (e / d).is_multiple_of(2)) {
        if d == 1 || (2 * d < e && is_prime_power(d)) {
            out.push(DihedralSubgroup { d, primed: true });
        }
    }
    Ok(out)
}

/// Springer representations of G(e,e,2).
pub fn dihedral_springer(e: usize) -> Result<Vec<DihedralIrrep>> {
    check_dihedral(e)?;
    if e == 2 {
        return dihedral_irreps(2);
    }
    let mut set: BTreeSet<DihedralIrrep> = [0, 1, e].into_iter().map(DihedralIrrep::new).collect();
    set.extend(
        (2..e)
            .filter(|&d| e.is_multiple_of(d) && is_prime_power(d))
            .map(DihedralIrrep::new),
    );
    Ok(dihedral_irreps_of(e).into_iter().filter(|c| set.contains(c)).collect())
}

/// The same set, as j-inductions of special characters of the pseudoparabolic subgroups.
pub fn dihedral_springer_constructive(e: usize) -> Result<Vec<DihedralIrrep>> {
    let mut set = BTreeSet::new();
    for h in dihedral_pseudoparabolics(e)? {
        let irreps = if h.d == 1 {
            vec![DihedralIrrep::new(0), DihedralIrrep::new(1)]
        } else {
            dihedral_irreps_of(h.d)
        };
        for chi in irreps.into_iter().filter(|&c| dihedral_is_special(h.d, c)) {
            set.insert(dihedral_j_induce(h.d, e, h.primed, chi)?);
        }
    }
    Ok(dihedral_irreps_of(e).into_iter().filter(|c| set.contains(c)).collect())
}

/// A point v_1 (with v = v_1 e_1 - conj(v_1) e_2) whose stabilizer has exactly the
/// reflections of `h`, for e >= 3. Uses q = a prime not dividing e when d = 1.
pub fn dihedral_witness(e: usize, h: DihedralSubgroup) -> Result<CycNum> {
    check_dihedral(e)?;
    if e < 3 {
        return Err(Error::Unsupported(
            "the rank-2 lattice model degenerates for e = 2".into(),
        ));
    }
    let z = |k: i64| CycNum::zeta_pow(e, k);
    let one = CycNum::one(e);
    if h.d == 1 {
        let q = (2..)
            .find(|q: &usize| !e.is_multiple_of(*q) && prime_power(*q).is_some_and(|(p, a)| p == *q && a == 1))
            .unwrap();
        let inv_q = CycNum::from_rational(e, 1, q as i64);
        let num = if h.primed { &one - &z(1) } else { &z(1) - &z(-1) };
        return Ok(&num * &inv_q);
    }
    let den = &one - &z(-((e / h.d) as i64));
    let num = if h.primed { &one + &z(1) } else { one };
    num.div(&den)
}

/// Indices i with v_1 + ζ^i conj(v_1) integral.
pub fn dihedral_stabilizer(e: usize, v1: &CycNum) -> Result<BTreeSet<usize>> {
    let v = vec![v1.clone(), -&v1.conj()];
    Ok(stabilizer_reflections(&v, LatticeKind::L0)?
        .into_iter()
        .filter_map(|r| match r {
            Reflection::Dihedral { i } => Some(i),
            _ => None,
        })
        .filter(|&i| i < e)
        .collect())
}
