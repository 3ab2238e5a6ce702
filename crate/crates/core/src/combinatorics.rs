//! Partitions, multipartitions and their rotation orbits.
//!
//! The group G(de,e,n) is described by [`GroupSpec`] with fields `d`, `e`, `n`.
//! Irreducible characters of G(de,1,n) are labelled by de-multipartitions of n;
//! those of G(de,e,n) by orbits of the rotation that shifts components by `d`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The imprimitive reflection group G(de,e,n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub d: usize,
    pub e: usize,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(d: usize, e: usize, n: usize) -> Result<Self> {
        if d == 0 || e == 0 {
            return Err(Error::InvalidParameter(format!(
                "G(de,e,n) needs d, e >= 1 (got d={d}, e={e})"
            )));
        }
        Ok(GroupSpec { d, e, n })
    }

    /// Builds G(m,p,n) in the usual notation; `p` must divide `m`.
    pub fn from_mpn(m: usize, p: usize, n: usize) -> Result<Self> {
        if m == 0 || p == 0 || !m.is_multiple_of(p) {
            return Err(Error::InvalidParameter(format!(
                "G({m},{p},{n}) needs p >= 1 dividing m >= 1"
            )));
        }
        GroupSpec::new(m / p, p, n)
    }

    /// G(e,1,n).
    pub fn ge1n(e: usize, n: usize) -> Result<Self> {
        GroupSpec::new(e, 1, n)
    }

    /// G(e,e,n).
    pub fn geen(e: usize, n: usize) -> Result<Self> {
        GroupSpec::new(1, e, n)
    }

    pub fn de(&self) -> usize {
        self.d * self.e
    }

    /// (de)^n n! / e.
    pub fn order(&self) -> u128 {
        let mut o: u128 = 1;
        for k in 1..=self.n {
            o *= (self.de() * k) as u128;
        }
        o / self.e as u128
    }

    /// G(e,1,n) and G(e,e,n) are the spetsial imprimitive groups.
    pub fn is_spetsial(&self) -> bool {
        self.e == 1 || self.d == 1
    }

    /// Reflection degrees: de*i for 1 <= i < n, together with d*n.
    pub fn degrees(&self) -> Vec<u64> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut deg: Vec<u64> = (1..self.n).map(|i| (self.de() * i) as u64).collect();
        deg.push((self.d * self.n) as u64);
        deg
    }

    /// The group G(de,1,n) containing this one.
    pub fn overgroup(&self) -> GroupSpec {
        GroupSpec {
            d: self.de(),
            e: 1,
            n: self.n,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.de(), self.e, self.n)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `m,p,n` (with or without a surrounding `G(...)`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix("G(").and_then(|x| x.strip_suffix(')')).unwrap_or(t);
        let nums: Vec<usize> = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("expected m,p,n, got {s:?}")))?;
        match nums.as_slice() {
            [m, p, n] => GroupSpec::from_mpn(*m, *p, *n),
            _ => Err(Error::Parse(format!("expected m,p,n, got {s:?}"))),
        }
    }
}

/// An integer partition, stored as weakly increasing positive parts.
///
/// The ordering puts larger partitions first and, among partitions of the same
/// size, compares the parts from the largest down, larger first. So `[n]` is the
/// smallest partition of `n` and `[1^n]` the largest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Normalises arbitrary parts: zeros are dropped and the rest sorted.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `[n]`.
    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// Parts in weakly increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts with leading zeros so that there are exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.len(), "padding {self} to {len} entries");
        let mut v = vec![0; len - self.len()];
        v.extend_from_slice(&self.0);
        v
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let largest = self.0.last().copied().unwrap_or(0);
        let parts = (1..=largest)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition::new(parts)
    }

    /// Number of standard tableaux, i.e. the degree of the symmetric group character.
    pub fn dimension(&self) -> u128 {
        let rows: Vec<u32> = self.0.iter().rev().copied().collect();
        let cols = self.conjugate();
        let cols: Vec<u32> = cols.0.iter().rev().copied().collect();
        let mut num = factorial(self.size() as usize);
        let mut den: u128 = 1;
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate().take(r as usize) {
                let hook = (r as usize - j) + (c as usize - i) - 1;
                den *= hook as u128;
            }
        }
        let g = gcd(num, den);
        num /= g;
        den /= g;
        debug_assert_eq!(den, 1);
        num
    }

    /// All partitions of `n`, in increasing order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.0.iter().rev().cmp(self.0.iter().rev()))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().rev().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        Ok(Partition::new(parts))
    }
}

/// A tuple of partitions, one per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition(components)
    }

    /// The multipartition with `p` in component `i` and empty components elsewhere.
    pub fn single(num_components: usize, i: usize, p: Partition) -> Self {
        let mut c = vec![Partition::empty(); num_components];
        c[i] = p;
        Multipartition(c)
    }

    pub fn empty(num_components: usize) -> Self {
        Multipartition(vec![Partition::empty(); num_components])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn num_components(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// Longest component (number of parts).
    pub fn max_len(&self) -> usize {
        self.0.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// Component `i` of the result is component `i + step` of `self`.
    pub fn rotate(&self, step: usize) -> Multipartition {
        let k = self.0.len();
        if k == 0 {
            return self.clone();
        }
        Multipartition((0..k).map(|i| self.0[(i + step) % k].clone()).collect())
    }

    /// Componentwise sum of parts aligned at the largest part.
    pub fn add(&self, other: &Multipartition) -> Result<Multipartition> {
        if self.num_components() != other.num_components() {
            return Err(Error::Mismatch(format!(
                "cannot add multipartitions with {} and {} components",
                self.num_components(),
                other.num_components()
            )));
        }
        let comps = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                let len = a.len().max(b.len());
                let sum = a.padded(len).iter().zip(b.padded(len)).map(|(x, y)| x + y).collect();
                Partition::new(sum)
            })
            .collect();
        Ok(Multipartition(comps))
    }

    /// Conjugates every component.
    pub fn conjugate(&self) -> Multipartition {
        Multipartition(self.0.iter().map(Partition::conjugate).collect())
    }

    /// Parses `2|-|1` style text, checking the component count when given.
    pub fn parse(s: &str, num_components: Option<usize>) -> Result<Multipartition> {
        let comps = s.split('|').map(Partition::from_str).collect::<Result<Vec<_>>>()?;
        if let Some(k) = num_components {
            if comps.len() != k {
                return Err(Error::Mismatch(format!(
                    "{s:?} has {} components, expected {k}",
                    comps.len()
                )));
            }
        }
        Ok(Multipartition(comps))
    }

    /// All multipartitions of `n` with `num_components` components, in increasing order.
    pub fn all(num_components: usize, n: u32) -> Vec<Multipartition> {
        let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(num_components);
        fn rec(
            k: usize,
            rem: u32,
            by_size: &[Vec<Partition>],
            cur: &mut Vec<Partition>,
            out: &mut Vec<Multipartition>,
        ) {
            if cur.len() == k {
                if rem == 0 {
                    out.push(Multipartition(cur.clone()));
                }
                return;
            }
            if cur.len() + 1 == k {
                for p in &by_size[rem as usize] {
                    cur.push(p.clone());
                    rec(k, 0, by_size, cur, out);
                    cur.pop();
                }
                return;
            }
            for size in 0..=rem {
                for p in &by_size[size as usize] {
                    cur.push(p.clone());
                    rec(k, rem - size, by_size, cur, out);
                    cur.pop();
                }
            }
        }
        if num_components == 0 {
            if n == 0 {
                out.push(Multipartition(Vec::new()));
            }
            return out;
        }
        rec(num_components, n, &by_size, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", comps.join("|"))
    }
}

/// Number of `j` in `0..e` with `r^j(mp) = mp`, where `r` shifts by `d` components.
pub fn stabilizer_order(group: &GroupSpec, mp: &Multipartition) -> usize {
    (0..group.e).filter(|&j| mp.rotate(j * group.d) == *mp).count()
}

/// The least element of the rotation orbit of `mp`.
pub fn canonical_representative(group: &GroupSpec, mp: &Multipartition) -> Multipartition {
    (0..group.e).map(|j| mp.rotate(j * group.d)).min().expect("e >= 1")
}

/// A rotation orbit of de-multipartitions: an irreducible character of G(de,1,n)
/// restricted to G(de,e,n), which splits into `stabilizer_order` components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultipartitionOrbit {
    pub group: GroupSpec,
    pub representative: Multipartition,
    pub stabilizer_order: usize,
}

impl MultipartitionOrbit {
    pub fn new(group: GroupSpec, mp: &Multipartition) -> Result<Self> {
        if mp.num_components() != group.de() {
            return Err(Error::Mismatch(format!(
                "{mp} has {} components but {group} needs {}",
                mp.num_components(),
                group.de()
            )));
        }
        if mp.size() as usize != group.n {
            return Err(Error::Mismatch(format!("{mp} is not a multipartition of {}", group.n)));
        }
        Ok(MultipartitionOrbit {
            group,
            representative: canonical_representative(&group, mp),
            stabilizer_order: stabilizer_order(&group, mp),
        })
    }

    /// The distinct elements of the orbit, starting with the representative.
    pub fn lifts(&self) -> Vec<Multipartition> {
        let k = self.group.e / self.stabilizer_order;
        (0..k).map(|j| self.representative.rotate(j * self.group.d)).collect()
    }

    /// Every rotation fixes the representative.
    pub fn is_stuttering(&self) -> bool {
        self.stabilizer_order == self.group.e && self.group.e > 1
    }

    /// Dimension of each irreducible component.
    pub fn component_dimension(&self) -> u128 {
        irrep_dimension(&self.representative) / self.stabilizer_order as u128
    }
}

impl fmt::Display for MultipartitionOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative)
    }
}

/// Rotation orbits of de-multipartitions of n, ordered by representative.
pub fn enumerate_multipartitions(group: &GroupSpec) -> Vec<MultipartitionOrbit> {
    Multipartition::all(group.de(), group.n as u32)
        .into_iter()
        .filter(|mp| canonical_representative(group, mp) == *mp)
        .map(|mp| MultipartitionOrbit {
            group: *group,
            stabilizer_order: stabilizer_order(group, &mp),
            representative: mp,
        })
        .collect()
}

/// Degree of the G(de,1,n) character labelled by `mp`.
pub fn irrep_dimension(mp: &Multipartition) -> u128 {
    let n = mp.size() as usize;
    let mut dim = factorial(n);
    for c in mp.components() {
        dim /= factorial(c.size() as usize);
    }
    for c in mp.components() {
        dim *= c.dimension();
    }
    dim
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
