//! Presymbols and symbols of type (r,s) and weight m.
//!
//! A presymbol is a tuple of rows of non-negative integers. The symbol of a
//! multipartition is its class under shifting; [`Symbol`] keeps the
//! representatives of minimal shape, one per element of the rotation orbit.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{GroupSpec, Multipartition, MultipartitionOrbit, Partition};
use crate::error::{Error, Result};

/// Row lengths of a protosymbol, modulo adding the same integer to every entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<usize>);

impl Weight {
    /// Normalises so that the smallest entry is 0.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let Some(&min) = entries.iter().min() else {
            return Err(Error::InvalidParameter("empty weight".into()));
        };
        Ok(Weight(entries.into_iter().map(|x| x - min).collect()))
    }

    /// (1, 0, ..., 0).
    pub fn b(rows: usize) -> Self {
        let mut v = vec![0; rows];
        v[0] = 1;
        Weight(v)
    }

    /// (0, ..., 0).
    pub fn d(rows: usize) -> Self {
        Weight(vec![0; rows])
    }

    /// The weight (1,0,...,0) repeated e times, for G(de,e,n).
    pub fn spetsial(group: &GroupSpec) -> Self {
        let v: Vec<usize> = (0..group.de()).map(|i| usize::from(i % group.d == 0)).collect();
        Weight::new(v).expect("de >= 1")
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Entries must agree on rows congruent mod d, so rotation preserves the weight.
    pub fn check_group(&self, group: &GroupSpec) -> Result<()> {
        if self.0.len() != group.de() {
            return Err(Error::Mismatch(format!(
                "weight has {} entries, {group} needs {}",
                self.0.len(),
                group.de()
            )));
        }
        for i in 0..self.0.len() {
            if self.0[i] != self.0[i % group.d] {
                return Err(Error::InvalidParameter(format!(
                    "weight {self} is not constant on rows congruent mod {}",
                    group.d
                )));
            }
        }
        Ok(())
    }

    /// Row lengths after `depth` shifts.
    pub fn shape(&self, depth: usize) -> Vec<usize> {
        self.0.iter().map(|m| m + depth).collect()
    }

    /// Fewest shifts giving room for every component of `mp`.
    pub fn min_depth(&self, mp: &Multipartition) -> usize {
        mp.components()
            .iter()
            .zip(&self.0)
            .map(|(c, &m)| c.len().saturating_sub(m))
            .max()
            .unwrap_or(0)
    }

    /// Parses `b`, `d`, or a comma-separated list of entries.
    pub fn parse(s: &str, group: &GroupSpec) -> Result<Self> {
        match s.trim() {
            "b" => Ok(Weight::b(group.de())),
            "d" => Ok(Weight::d(group.de())),
            "spetsial" => Ok(Weight::spetsial(group)),
            t => {
                let v = t
                    .split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::Parse(format!("bad weight {s:?}")))?;
                Weight::new(v)
            }
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Symbol type (r, s) with `s <= r` in all uses here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolType {
    pub r: u32,
    pub s: u32,
}

impl SymbolType {
    pub fn new(r: u32, s: u32) -> Self {
        SymbolType { r, s }
    }
}

impl FromStr for SymbolType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("expected r,s, got {s:?}")))?;
        match v.as_slice() {
            [r, s] => Ok(SymbolType::new(*r, *s)),
            _ => Err(Error::Parse(format!("expected r,s, got {s:?}"))),
        }
    }
}

/// Strict total order on positions (row, column) of a presymbol with `rows` rows.
///
/// Columns come first; within a column the order is row 0, then rows
/// `rows-1` down to 1.
pub fn prec(rows: usize, a: (usize, usize), b: (usize, usize)) -> bool {
    position_key(rows, a) < position_key(rows, b)
}

fn position_key(rows: usize, (i, j): (usize, usize)) -> (usize, usize) {
    (j, if i == 0 { 0 } else { rows - i })
}

/// A tuple of weakly increasing rows together with its type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Presymbol {
    rows: Vec<Vec<u64>>,
    ty: SymbolType,
}

impl Presymbol {
    pub fn new(ty: SymbolType, rows: Vec<Vec<u64>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidParameter(format!("row {i} is not increasing")));
            }
        }
        Ok(Presymbol { rows, ty })
    }

    /// The protosymbol: row 0 is 0, r, 2r, ...; other rows are s, r+s, 2r+s, ...
    pub fn protosymbol(ty: SymbolType, shape: &[usize]) -> Self {
        let (r, s) = (ty.r as u64, ty.s as u64);
        let rows = shape
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                let off = if i == 0 { 0 } else { s };
                (0..len as u64).map(|j| j * r + off).collect()
            })
            .collect();
        Presymbol { rows, ty }
    }

    /// `mp` zero-padded to `shape`, plus the protosymbol.
    pub fn from_multipartition(mp: &Multipartition, ty: SymbolType, shape: &[usize]) -> Result<Self> {
        if mp.num_components() != shape.len() {
            return Err(Error::Mismatch(format!(
                "{mp} has {} components, shape has {} rows",
                mp.num_components(),
                shape.len()
            )));
        }
        let phi = Presymbol::protosymbol(ty, shape);
        let mut rows = Vec::with_capacity(shape.len());
        for ((c, &len), prow) in mp.components().iter().zip(shape).zip(&phi.rows) {
            if c.len() > len {
                return Err(Error::Mismatch(format!("shape {shape:?} too small for {mp}")));
            }
            rows.push(c.padded(len).iter().zip(prow).map(|(&a, &p)| a as u64 + p).collect());
        }
        Ok(Presymbol { rows, ty })
    }

    pub fn symbol_type(&self) -> SymbolType {
        self.ty
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, (i, j): (usize, usize)) -> u64 {
        self.rows[i][j]
    }

    pub fn protosymbol_of_shape(&self) -> Presymbol {
        Presymbol::protosymbol(self.ty, &self.shape())
    }

    /// The (r,s)-shift: prepend 0 to row 0 and s to other rows, adding r to old entries.
    pub fn shift(&self) -> Presymbol {
        let (r, s) = (self.ty.r as u64, self.ty.s as u64);
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut v = Vec::with_capacity(row.len() + 1);
                v.push(if i == 0 { 0 } else { s });
                v.extend(row.iter().map(|x| x + r));
                v
            })
            .collect();
        Presymbol { rows, ty: self.ty }
    }

    pub fn shifted(&self, times: usize) -> Presymbol {
        (0..times).fold(self.clone(), |p, _| p.shift())
    }

    /// Inverse of [`Presymbol::shift`], when this presymbol is a shift.
    pub fn unshift(&self) -> Option<Presymbol> {
        let (r, s) = (self.ty.r as u64, self.ty.s as u64);
        let mut rows = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let first = if i == 0 { 0 } else { s };
            if row.first() != Some(&first) {
                return None;
            }
            let rest: Option<Vec<u64>> = row[1..].iter().map(|x| x.checked_sub(r)).collect();
            let rest = rest?;
            if rest.first().is_some_and(|&x| x < first) {
                return None;
            }
            rows.push(rest);
        }
        Some(Presymbol { rows, ty: self.ty })
    }

    /// Presymbol minus the protosymbol of the same shape.
    pub fn multipartition(&self) -> Result<Multipartition> {
        let phi = self.protosymbol_of_shape();
        let mut comps = Vec::with_capacity(self.rows.len());
        for (row, prow) in self.rows.iter().zip(&phi.rows) {
            let parts: Option<Vec<u32>> = row
                .iter()
                .zip(prow)
                .map(|(a, p)| a.checked_sub(*p).map(|x| x as u32))
                .collect();
            let parts = parts.ok_or_else(|| Error::InvalidParameter(format!("{self} lies below its protosymbol")))?;
            if parts.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "{self} is not a presymbol of type ({},{})",
                    self.ty.r, self.ty.s
                )));
            }
            comps.push(Partition::new(parts));
        }
        Ok(Multipartition::new(comps))
    }

    /// Row `i` of the result is row `i + step` of `self` (indices mod the number of rows).
    pub fn rotate_rows(&self, step: usize) -> Presymbol {
        let k = self.rows.len();
        Presymbol {
            rows: (0..k).map(|i| self.rows[(i + step) % k].clone()).collect(),
            ty: self.ty,
        }
    }

    /// Row i of the result is row i-1, and row 0 receives the last row. This is the
    /// rotation that relates the weight-d and weight-b symbols of one multipartition.
    pub fn rotate(&self) -> Presymbol {
        self.rotate_rows(self.rows.len().saturating_sub(1))
    }

    /// All positions sorted along the order [`prec`].
    pub fn positions_in_order(&self) -> Vec<(usize, usize)> {
        let k = self.rows.len();
        let mut pos: Vec<(usize, usize)> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| (0..row.len()).map(move |j| (i, j)))
            .collect();
        pos.sort_by_key(|&p| position_key(k, p));
        pos
    }

    /// Entries are weakly increasing along the order [`prec`].
    pub fn is_monotone(&self) -> bool {
        let seq: Vec<u64> = self.positions_in_order().into_iter().map(|p| self.entry(p)).collect();
        seq.windows(2).all(|w| w[0] <= w[1])
    }

    /// Sum over pairs p < q of min(entry p, entry q) - protosymbol entry at p.
    pub fn a_c(&self) -> i64 {
        let mut vals: Vec<u64> = self.rows.iter().flatten().copied().collect();
        vals.sort_unstable();
        let n = vals.len();
        let min_sum: i64 = vals
            .iter()
            .enumerate()
            .map(|(k, &v)| v as i64 * (n - 1 - k) as i64)
            .sum();
        let phi = self.protosymbol_of_shape();
        let phi_sum: i64 = self
            .positions_in_order()
            .into_iter()
            .enumerate()
            .map(|(idx, p)| phi.entry(p) as i64 * (n - 1 - idx) as i64)
            .sum();
        min_sum - phi_sum
    }

    /// Sum over positions p of (number of positions after p) * (entry - protosymbol entry).
    pub fn b_c(&self) -> i64 {
        let phi = self.protosymbol_of_shape();
        let order = self.positions_in_order();
        let n = order.len();
        order
            .into_iter()
            .enumerate()
            .map(|(idx, p)| (self.entry(p) as i64 - phi.entry(p) as i64) * (n - 1 - idx) as i64)
            .sum()
    }

    /// Entries as a sorted list.
    pub fn entry_multiset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Presymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                if row.is_empty() {
                    "-".to_string()
                } else {
                    row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "{}", rows.join("|"))
    }
}

/// Parses `0,5|1|2` style rows; `-` is an empty row.
pub fn parse_rows(s: &str) -> Result<Vec<Vec<u64>>> {
    s.split('|')
        .map(|row| {
            let t = row.trim();
            if t.is_empty() || t == "-" {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad symbol {s:?}")))
                })
                .collect()
        })
        .collect()
}

/// The symbol of type (r,s) and weight m of a rotation orbit of multipartitions.
#[derive(Clone, Debug)]
pub struct Symbol {
    orbit: MultipartitionOrbit,
    ty: SymbolType,
    weight: Weight,
    depth: usize,
    reps: Vec<Presymbol>,
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.orbit == other.orbit && self.ty == other.ty && self.weight == other.weight
    }
}

impl Eq for Symbol {}

impl Symbol {
    pub fn new(group: &GroupSpec, mp: &Multipartition, ty: SymbolType, weight: &Weight) -> Result<Self> {
        weight.check_group(group)?;
        let orbit = MultipartitionOrbit::new(*group, mp)?;
        let depth = weight.min_depth(&orbit.representative);
        let shape = weight.shape(depth);
        let reps = orbit
            .lifts()
            .iter()
            .map(|l| Presymbol::from_multipartition(l, ty, &shape))
            .collect::<Result<Vec<_>>>()?;
        Ok(Symbol {
            orbit,
            ty,
            weight: weight.clone(),
            depth,
            reps,
        })
    }

    /// Symbol of a multipartition for G(e,1,n), where there is no rotation.
    pub fn of(mp: &Multipartition, ty: SymbolType, weight: &Weight) -> Result<Self> {
        let group = GroupSpec::ge1n(mp.num_components(), mp.size() as usize)?;
        Symbol::new(&group, mp, ty, weight)
    }

    pub fn orbit(&self) -> &MultipartitionOrbit {
        &self.orbit
    }

    pub fn symbol_type(&self) -> SymbolType {
        self.ty
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Number of shifts above the weight in the minimal shape.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Minimal-shape presymbols, one per element of the orbit, starting with the
    /// one built from the orbit representative.
    pub fn representatives(&self) -> &[Presymbol] {
        &self.reps
    }

    pub fn representative(&self) -> &Presymbol {
        &self.reps[0]
    }

    /// The least presymbol among the rotation representatives.
    pub fn canonical(&self) -> &Presymbol {
        self.reps.iter().min().expect("non-empty orbit")
    }

    /// Representatives shifted to a larger depth.
    pub fn representatives_at_depth(&self, depth: usize) -> Vec<Presymbol> {
        assert!(depth >= self.depth);
        self.reps.iter().map(|p| p.shifted(depth - self.depth)).collect()
    }

    /// Some representative is weakly increasing along the order on positions.
    pub fn is_distinguished(&self) -> bool {
        self.distinguished_representative().is_some()
    }

    pub fn distinguished_representative(&self) -> Option<&Presymbol> {
        self.reps.iter().find(|p| p.is_monotone())
    }

    /// Least a^c over the representatives.
    pub fn a_c(&self) -> i64 {
        self.reps.iter().map(Presymbol::a_c).min().expect("non-empty orbit")
    }

    /// Least b^c over the representatives.
    pub fn b_c(&self) -> i64 {
        self.reps.iter().map(Presymbol::b_c).min().expect("non-empty orbit")
    }

    /// Two symbols of the same type and weight are similar when some
    /// representatives have equal entry multisets at a common shape.
    pub fn similar(&self, other: &Symbol) -> Result<bool> {
        if self.ty != other.ty || self.weight != other.weight {
            return Err(Error::Mismatch("similarity needs a common type and weight".into()));
        }
        let depth = self.depth.max(other.depth);
        let mine: Vec<Vec<u64>> = self
            .representatives_at_depth(depth)
            .iter()
            .map(Presymbol::entry_multiset)
            .collect();
        Ok(other
            .representatives_at_depth(depth)
            .iter()
            .any(|p| mine.contains(&p.entry_multiset())))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

/// Builds the symbol of every orbit of the group.
pub fn symbols_for_group(group: &GroupSpec, ty: SymbolType, weight: &Weight) -> Result<Vec<Symbol>> {
    crate::combinatorics::enumerate_multipartitions(group)
        .iter()
        .map(|o| Symbol::new(group, &o.representative, ty, weight))
        .collect()
}

/// Partitions symbols of one type and weight into similarity classes, in
/// order of first appearance. Returns indices into `symbols`.
pub fn similarity_classes(symbols: &[Symbol]) -> Result<Vec<Vec<usize>>> {
    if let Some(first) = symbols.first() {
        if symbols.iter().any(|s| s.ty != first.ty || s.weight != first.weight) {
            return Err(Error::Mismatch("similarity needs a common type and weight".into()));
        }
    }
    let depth = symbols.iter().map(|s| s.depth).max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..symbols.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut owner: HashMap<Vec<u64>, usize> = HashMap::new();
    for (idx, sym) in symbols.iter().enumerate() {
        for rep in sym.representatives_at_depth(depth) {
            let key = rep.entry_multiset();
            match owner.get(&key) {
                Some(&o) => {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, idx));
                    if a != b {
                        parent[b.max(a)] = a.min(b);
                    }
                }
                None => {
                    owner.insert(key, idx);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    for idx in 0..symbols.len() {
        let root = find(&mut parent, idx);
        let c = *class_of_root.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(idx);
    }
    Ok(classes)
}
