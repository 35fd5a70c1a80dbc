//! Integer partitions and the symbolic partition families used to describe
//! branching supports: full sets, boxes and their punctured variants.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on `n` for explicit enumeration.
pub const DEFAULT_ENUMERATION_CAP: u32 = 60;

/// A partition stored as its weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&x| x == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Two-row partition `(x, n-x)`.
    pub fn two_row(n: u32, x: u32) -> Result<Self> {
        if x > n || 2 * x < n {
            return Err(Error::InvalidPartition(format!("two-row ({x},{})", n as i64 - x as i64)));
        }
        Ok(Partition::from_unsorted(vec![x, n - x]))
    }

    /// Hook `(y, 1^(n-y))`.
    pub fn hook(n: u32, y: u32) -> Result<Self> {
        if y == 0 || y > n {
            return Err(Error::InvalidPartition(format!("hook arm {y} for n={n}")));
        }
        let mut parts = vec![y];
        parts.extend(std::iter::repeat(1).take((n - y) as usize));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first() as usize;
        let mut out = vec![0u32; first];
        for &r in &self.parts {
            for c in out.iter_mut().take(r as usize) {
                *c += 1;
            }
        }
        Partition { parts: out }
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_subpartition_of(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Part-wise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// Hook, two-row, or conjugate of a two-row.
    pub fn is_thin(&self) -> bool {
        self.len() <= 2 || self.part(1) <= 1 || self.first() <= 2
    }

    pub fn normalized_width(&self) -> Result<u32> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(self.first().max(self.len() as u32))
    }

    pub fn fits_in_box(&self, t: u32) -> bool {
        self.first() <= t && self.len() as u32 <= t
    }

    /// Prepends `first` as a new top row.
    pub fn with_first_row(&self, first: u32) -> Result<Partition> {
        let mut parts = vec![first];
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// Drops the first row.
    pub fn tail(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[6,2]`, `(6,2)`, `6,2`, `[4,1^3]`, `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t)
            .trim();
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for tok in inner.split(',') {
                let tok = tok.trim();
                let (base, exp) = match tok.split_once('^') {
                    Some((b, e)) => (b.trim(), e.trim()),
                    None => (tok, "1"),
                };
                let bad = || Error::Parse(format!("bad partition token '{tok}' in '{s}'"));
                let b: u32 = base.parse().map_err(|_| bad())?;
                let e: usize = exp.parse().map_err(|_| bad())?;
                parts.extend(std::iter::repeat(b).take(e));
            }
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate(n: u32) -> Vec<Partition> {
    enumerate_bounded(n, n, n as usize)
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len` parts,
/// in descending lexicographic order.
pub fn enumerate_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 || (max as u64) * (slots as u64) < rem as u64 {
            return;
        }
        let mut x = max.min(rem);
        while x >= 1 {
            cur.push(x);
            rec(rem - x, x, slots - 1, cur, out);
            cur.pop();
            x -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`, by the pentagonal-number recurrence.
pub fn partition_count(n: u32) -> u128 {
    let n = n as usize;
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
            k += 1;
        }
        p[m] = acc as u128;
    }
    p[n]
}

/// `A ∪ A'`.
pub fn closure<'a>(items: impl IntoIterator<Item = &'a Partition>) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    for p in items {
        out.insert(p.conjugate());
        out.insert(p.clone());
    }
    out
}

/// Sorts into descending lexicographic order and removes duplicates.
pub fn sort_desc(v: &mut Vec<Partition>) {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.dedup();
}

/// A set of partitions of a fixed `n`, given symbolically where possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", try_from = "RawSet")]
pub enum SymbolicPartitionSet {
    Full { n: u32 },
    PuncturedFull { n: u32 },
    Box { n: u32, t: u32 },
    PuncturedBox { n: u32, t: u32 },
    Explicit { n: u32, members: Vec<Partition> },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawSet {
    Full { n: u32 },
    PuncturedFull { n: u32 },
    Box { n: u32, t: u32 },
    PuncturedBox { n: u32, t: u32 },
    Explicit { n: u32, members: Vec<Partition> },
}

impl TryFrom<RawSet> for SymbolicPartitionSet {
    type Error = Error;
    fn try_from(r: RawSet) -> Result<Self> {
        match r {
            RawSet::Full { n } => Ok(Self::full(n)),
            RawSet::PuncturedFull { n } => Self::punctured_full(n),
            RawSet::Box { n, t } => Ok(Self::boxed(n, t)),
            RawSet::PuncturedBox { n, t } => Self::punctured_box(n, t),
            RawSet::Explicit { n, members } => Self::explicit(n, members, false),
        }
    }
}

impl SymbolicPartitionSet {
    pub fn full(n: u32) -> Self {
        Self::Full { n }
    }

    pub fn punctured_full(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSet(format!("punctured full set needs n >= 3, got {n}")));
        }
        Ok(Self::PuncturedFull { n })
    }

    pub fn boxed(n: u32, t: u32) -> Self {
        Self::Box { n, t }
    }

    pub fn punctured_box(n: u32, t: u32) -> Result<Self> {
        if 2 * t <= n || t + 2 > n {
            return Err(Error::InvalidSet(format!("punctured box needs n/2 < t <= n-2, got n={n}, t={t}")));
        }
        Ok(Self::PuncturedBox { n, t })
    }

    /// Explicit set; with `require_closed` the set must be conjugation-closed.
    pub fn explicit(n: u32, mut members: Vec<Partition>, require_closed: bool) -> Result<Self> {
        for m in &members {
            if m.size() != n {
                return Err(Error::SizeMismatch { expected: n, got: m.size() });
            }
        }
        sort_desc(&mut members);
        if require_closed {
            let set: BTreeSet<&Partition> = members.iter().collect();
            if let Some(bad) = members.iter().find(|m| !set.contains(&m.conjugate())) {
                return Err(Error::InvalidSet(format!("not conjugation-closed: {bad} lacks its conjugate")));
            }
        }
        Ok(Self::Explicit { n, members })
    }

    pub fn n(&self) -> u32 {
        match self {
            Self::Full { n }
            | Self::PuncturedFull { n }
            | Self::Box { n, .. }
            | Self::PuncturedBox { n, .. }
            | Self::Explicit { n, .. } => *n,
        }
    }

    /// The excluded conjugate-closed pair for punctured variants.
    pub fn excluded(&self) -> Vec<Partition> {
        match *self {
            Self::PuncturedFull { n } => closure(&[Partition { parts: vec![n - 1, 1] }]).into_iter().collect(),
            Self::PuncturedBox { n, t } => {
                let a = Partition { parts: vec![t, n - t - 1, 1] };
                let mut b = vec![t, 2];
                b.extend(std::iter::repeat(1).take((n - t - 2) as usize));
                let b = Partition { parts: b };
                closure([&a, &b]).into_iter().collect()
            }
            _ => Vec::new(),
        }
    }

    pub fn contains(&self, lambda: &Partition) -> Result<bool> {
        let n = self.n();
        if lambda.size() != n {
            return Err(Error::SizeMismatch { expected: n, got: lambda.size() });
        }
        Ok(match self {
            Self::Full { .. } => true,
            Self::Box { t, .. } => lambda.fits_in_box(*t),
            Self::PuncturedFull { .. } => !self.excluded().contains(lambda),
            Self::PuncturedBox { t, .. } => lambda.fits_in_box(*t) && !self.excluded().contains(lambda),
            Self::Explicit { members, .. } => members.binary_search_by(|m| lambda.cmp(m)).is_ok(),
        })
    }

    pub fn materialize(&self) -> Result<Vec<Partition>> {
        self.materialize_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Members in descending lexicographic order.
    pub fn materialize_with_cap(&self, cap: u32) -> Result<Vec<Partition>> {
        if let Self::Explicit { members, .. } = self {
            return Ok(members.clone());
        }
        let n = self.n();
        if n > cap {
            return Err(Error::TooLarge { n, cap });
        }
        let excluded = self.excluded();
        let mut out = match *self {
            Self::Box { t, .. } | Self::PuncturedBox { t, .. } => enumerate_bounded(n, t, t as usize),
            _ => enumerate(n),
        };
        out.retain(|p| !excluded.contains(p));
        Ok(out)
    }
}

impl fmt::Display for SymbolicPartitionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Full { n } => write!(f, "P({n})"),
            Self::PuncturedFull { n } => write!(f, "°P({n})"),
            Self::Box { n, t } => write!(f, "B_{n}({t})"),
            Self::PuncturedBox { n, t } => write!(f, "°B_{n}({t})"),
            Self::Explicit { members, .. } => {
                write!(f, "{{")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl FromStr for SymbolicPartitionSet {
    type Err = Error;

    /// `full:N`, `pfull:N`, `box:N:T`, `pbox:N:T`, or `{[3,1],[2,2]}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let mut members = Vec::new();
            let mut depth = 0;
            let mut start = 0;
            for (i, c) in body.char_indices() {
                match c {
                    '[' => {
                        if depth == 0 {
                            start = i;
                        }
                        depth += 1;
                    }
                    ']' => {
                        depth -= 1;
                        if depth == 0 {
                            members.push(body[start..=i].parse::<Partition>()?);
                        }
                    }
                    _ => {}
                }
            }
            let n = members.first().map(Partition::size).unwrap_or(0);
            return Self::explicit(n, members, false).map_err(|e| Error::Parse(e.to_string()));
        }
        let fields: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<u32> {
            fields
                .get(i)
                .and_then(|x| x.trim().parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad set descriptor '{s}'")))
        };
        let r = match (fields[0], fields.len()) {
            ("full", 2) => Ok(Self::full(num(1)?)),
            ("pfull", 2) => Self::punctured_full(num(1)?),
            ("box", 3) => Ok(Self::boxed(num(1)?, num(2)?)),
            ("pbox", 3) => Self::punctured_box(num(1)?, num(2)?),
            _ => return Err(Error::Parse(format!("bad set descriptor '{s}'"))),
        };
        r.map_err(|e| Error::Parse(e.to_string()))
    }
}
