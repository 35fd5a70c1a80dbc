//! Labelled complete `p`-ary trees indexing the irreducible characters of
//! Sylow `p`-subgroups of `S_{p^k}`, their cyclic-rotation orbits, and the
//! statistics (people, generations, value) read off them.
//!
//! A tree with `k` levels has labels in `[0, p]`. Vertices labelled in
//! `[1, p-1]` are *people*. Trees are stored as preorder label arrays; since
//! every subtree at a given depth has the same size, comparing preorder arrays
//! compares label first and then the children in order.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on the number of orbits an enumeration may produce.
pub const DEFAULT_GUARD: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledTree {
    p: u32,
    height: u32,
    labels: Vec<u8>,
}

fn subtree_len(p: u32, height: u32) -> usize {
    let mut len = 0usize;
    let mut level = 1usize;
    for _ in 0..=height {
        len += level;
        level *= p as usize;
    }
    len
}

fn chunks(p: u32, height: u32, labels: &[u8]) -> impl Iterator<Item = &[u8]> {
    let s = subtree_len(p, height - 1);
    labels[1..].chunks(s)
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl LabelledTree {
    pub fn leaf(p: u32, label: u32) -> Result<Self> {
        if p < 2 || p > 255 {
            return Err(Error::InvalidTree(format!("arity {p} out of range")));
        }
        if label > p {
            return Err(Error::InvalidTree(format!("label {label} exceeds p={p}")));
        }
        Ok(LabelledTree { p, height: 0, labels: vec![label as u8] })
    }

    pub fn node(p: u32, label: u32, children: &[LabelledTree]) -> Result<Self> {
        if label > p {
            return Err(Error::InvalidTree(format!("label {label} exceeds p={p}")));
        }
        if children.len() != p as usize {
            return Err(Error::InvalidTree(format!("expected {p} children, got {}", children.len())));
        }
        let h = children[0].height;
        if children.iter().any(|c| c.height != h || c.p != p) {
            return Err(Error::InvalidTree("children differ in height or arity".into()));
        }
        let mut labels = Vec::with_capacity(1 + p as usize * children[0].labels.len());
        labels.push(label as u8);
        for c in children {
            labels.extend_from_slice(&c.labels);
        }
        Ok(LabelledTree { p, height: h + 1, labels })
    }

    /// Every vertex at one label.
    pub fn constant(p: u32, levels: u32, label: u32) -> Result<Self> {
        if levels == 0 {
            return Err(Error::InvalidTree("a tree needs at least one level".into()));
        }
        let mut t = Self::leaf(p, label)?;
        for _ in 1..levels {
            t = Self::node(p, label, &vec![t; p as usize])?;
        }
        Ok(t)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Number of levels `k`; the tree indexes a character of `P_{p^k}`.
    pub fn levels(&self) -> u32 {
        self.height + 1
    }

    pub fn root_label(&self) -> u32 {
        self.labels[0] as u32
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn children(&self) -> Vec<LabelledTree> {
        if self.height == 0 {
            return Vec::new();
        }
        chunks(self.p, self.height, &self.labels)
            .map(|c| LabelledTree { p: self.p, height: self.height - 1, labels: c.to_vec() })
            .collect()
    }

    /// Replaces every person label by `1`.
    pub fn collapse_people(&self) -> LabelledTree {
        let p = self.p as u8;
        let labels = self.labels.iter().map(|&l| if l >= 1 && l < p { 1 } else { l }).collect();
        LabelledTree { labels, ..self.clone() }
    }

    /// Parses `e`, `(T1|...|Tp;e)`, or the shorthand `X(a;b;...)` whose first
    /// entry labels the leaves and last entry the root.
    pub fn parse(s: &str, p: u32) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos, p)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in tree '{s}'")));
        }
        Ok(t)
    }
}

fn parse_number(chars: &[char], pos: &mut usize) -> Result<u32> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Parse(format!("expected a label at offset {start}")));
    }
    chars[start..*pos].iter().collect::<String>().parse().map_err(|_| Error::Parse("label overflow".into()))
}

fn expect(chars: &[char], pos: &mut usize, c: char) -> Result<()> {
    if chars.get(*pos) == Some(&c) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::Parse(format!("expected '{c}' at offset {}", *pos)))
    }
}

fn parse_tree(chars: &[char], pos: &mut usize, p: u32) -> Result<LabelledTree> {
    let perr = |e: Error| Error::Parse(e.to_string());
    match chars.get(*pos) {
        Some('X') => {
            *pos += 1;
            expect(chars, pos, '(')?;
            let mut t = LabelledTree::leaf(p, parse_number(chars, pos)?).map_err(perr)?;
            while chars.get(*pos) == Some(&';') {
                *pos += 1;
                let l = parse_number(chars, pos)?;
                t = LabelledTree::node(p, l, &vec![t; p as usize]).map_err(perr)?;
            }
            expect(chars, pos, ')')?;
            Ok(t)
        }
        Some('(') => {
            *pos += 1;
            let mut kids = vec![parse_tree(chars, pos, p)?];
            while chars.get(*pos) == Some(&'|') {
                *pos += 1;
                kids.push(parse_tree(chars, pos, p)?);
            }
            expect(chars, pos, ';')?;
            let l = parse_number(chars, pos)?;
            expect(chars, pos, ')')?;
            LabelledTree::node(p, l, &kids).map_err(perr)
        }
        _ => LabelledTree::leaf(p, parse_number(chars, pos)?).map_err(perr),
    }
}

impl fmt::Display for LabelledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.height == 0 {
            return write!(f, "{}", self.labels[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.children().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ";{})", self.labels[0])
    }
}

/// Nested `{"label": e, "children": [...]}`; leaves have no children.
impl Serialize for LabelledTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LabelledTree", 2)?;
        st.serialize_field("label", &self.root_label())?;
        st.serialize_field("children", &self.children())?;
        st.end()
    }
}

/// A rotation orbit, held by its lexicographically least representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct TreeOrbit(LabelledTree);

impl TreeOrbit {
    pub fn tree(&self) -> &LabelledTree {
        &self.0
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn levels(&self) -> u32 {
        self.0.levels()
    }
}

impl fmt::Display for TreeOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn canon(p: u32, height: u32, labels: &[u8]) -> Vec<u8> {
    if height == 0 {
        return labels.to_vec();
    }
    let kids: Vec<Vec<u8>> = chunks(p, height, labels).map(|c| canon(p, height - 1, c)).collect();
    let n = kids.len();
    let best = (0..n)
        .min_by(|&a, &b| (0..n).map(|i| &kids[(a + i) % n]).cmp((0..n).map(|i| &kids[(b + i) % n])))
        .unwrap_or(0);
    let mut out = Vec::with_capacity(labels.len());
    out.push(labels[0]);
    for i in 0..n {
        out.extend_from_slice(&kids[(best + i) % n]);
    }
    out
}

/// Recursively rotates children into their least arrangement.
pub fn canonicalize(t: &LabelledTree) -> TreeOrbit {
    TreeOrbit(LabelledTree { labels: canon(t.p, t.height, &t.labels), ..t.clone() })
}

fn admissible(p: u32, height: u32, labels: &[u8]) -> bool {
    let l = labels[0] as u32;
    if height == 0 {
        return l < p;
    }
    let kids: Vec<&[u8]> = chunks(p, height, labels).collect();
    if !kids.iter().all(|c| admissible(p, height - 1, c)) {
        return false;
    }
    let forms: Vec<Vec<u8>> = kids.iter().map(|c| canon(p, height - 1, c)).collect();
    let all_equal = forms.iter().all(|f| *f == forms[0]);
    if l < p {
        all_equal
    } else {
        !all_equal
    }
}

pub fn is_admissible(t: &LabelledTree) -> bool {
    admissible(t.p, t.height, &t.labels)
}

/// Number of admissible orbits with `k` levels.
pub fn irr_count(p: u32, k: u32) -> BigUint {
    let pb = BigUint::from(p);
    let mut a = pb.clone();
    for _ in 1..k {
        let pow = num_traits::pow(a.clone(), p as usize);
        a = (pow - &a) / &pb + &pb * &a;
    }
    if k == 0 {
        BigUint::one()
    } else {
        a
    }
}

pub fn enumerate_irr(p: u32, k: u32) -> Result<Vec<TreeOrbit>> {
    enumerate_irr_guarded(p, k, DEFAULT_GUARD)
}

/// All admissible orbits with `k >= 1` levels, sorted.
pub fn enumerate_irr_guarded(p: u32, k: u32, guard: u64) -> Result<Vec<TreeOrbit>> {
    if !is_prime(p) || p > 255 {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidTree("a tree needs at least one level".into()));
    }
    let count = irr_count(p, k);
    if count > BigUint::from(guard) {
        return Err(Error::GuardExceeded { count: count.to_string(), guard });
    }
    let mut level: Vec<TreeOrbit> = (0..p).map(|e| TreeOrbit(LabelledTree::leaf(p, e).unwrap())).collect();
    for _ in 1..k {
        let mut next = Vec::with_capacity(count.to_usize().unwrap_or(0));
        for t in &level {
            for e in 0..p {
                next.push(TreeOrbit(LabelledTree::node(p, e, &vec![t.0.clone(); p as usize])?));
            }
        }
        let a = level.len();
        let mut idx = vec![0usize; p as usize];
        loop {
            let mixed = idx.iter().any(|&i| i != idx[0]);
            let least = (1..idx.len()).all(|r| idx[..] <= *rotate(&idx, r));
            if mixed && least {
                let kids: Vec<LabelledTree> = idx.iter().map(|&i| level[i].0.clone()).collect();
                next.push(TreeOrbit(LabelledTree::node(p, p, &kids)?));
            }
            let mut pos = idx.len();
            while pos > 0 && idx[pos - 1] == a - 1 {
                idx[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
        }
        next.sort();
        level = next;
    }
    Ok(level)
}

fn rotate(v: &[usize], r: usize) -> Vec<usize> {
    v[r..].iter().chain(&v[..r]).copied().collect()
}

/// People, generation counts and value of a tree or character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub eta: u64,
    /// `gamma[i]` is the number of people with exactly `i` generations of
    /// people below them; trailing zeros are trimmed, so `gamma.len()` is the value.
    pub gamma: Vec<u64>,
    pub value: u32,
    /// Number of vertices labelled `p`; the degree is `p` to this power.
    pub degree_exponent: u32,
    /// Vertex count per label `0..=p`.
    pub label_counts: Vec<u64>,
}

impl TreeStats {
    pub fn gamma(&self, i: usize) -> u64 {
        self.gamma.get(i).copied().unwrap_or(0)
    }

    fn empty(p: u32) -> Self {
        TreeStats { eta: 0, gamma: Vec::new(), value: 0, degree_exponent: 0, label_counts: vec![0; p as usize + 1] }
    }

    fn absorb(&mut self, other: &TreeStats) {
        self.eta += other.eta;
        if self.gamma.len() < other.gamma.len() {
            self.gamma.resize(other.gamma.len(), 0);
        }
        for (a, b) in self.gamma.iter_mut().zip(&other.gamma) {
            *a += b;
        }
        self.value = self.value.max(other.value);
        self.degree_exponent += other.degree_exponent;
        for (a, b) in self.label_counts.iter_mut().zip(&other.label_counts) {
            *a += b;
        }
    }
}

fn stats_rec(p: u32, height: u32, labels: &[u8], st: &mut TreeStats) -> u32 {
    let l = labels[0] as u32;
    st.label_counts[l as usize] += 1;
    if l == p {
        st.degree_exponent += 1;
    }
    let mut below = 0;
    if height > 0 {
        for c in chunks(p, height, labels) {
            let d = stats_rec(p, height - 1, c, st);
            let person = (c[0] as u32 >= 1 && (c[0] as u32) < p) as u32;
            below = below.max(d + person);
        }
    }
    if l >= 1 && l < p {
        st.eta += 1;
        let i = below as usize;
        if st.gamma.len() <= i {
            st.gamma.resize(i + 1, 0);
        }
        st.gamma[i] += 1;
    }
    below
}

pub fn tree_stats(t: &LabelledTree) -> TreeStats {
    let mut st = TreeStats::empty(t.p);
    stats_rec(t.p, t.height, &t.labels, &mut st);
    st.value = st.gamma.len() as u32;
    st
}

fn punct_rec(p: u32, height: u32, labels: &[u8]) -> (bool, bool) {
    let l = labels[0] as u32;
    let person = l >= 1 && l < p;
    let mut ok = true;
    let mut with_people = 0;
    if height > 0 {
        for c in chunks(p, height, labels) {
            let (has, good) = punct_rec(p, height - 1, c);
            ok &= good;
            with_people += has as u32;
        }
    }
    if l != 0 && with_people > 1 {
        ok = false;
    }
    if person && with_people > 0 {
        ok = false;
    }
    (person || with_people > 0, ok)
}

/// Every pair of people meets at a `0`-labelled closest common ancestor.
pub fn people_meet_at_zero(t: &LabelledTree) -> bool {
    punct_rec(t.p, t.height, &t.labels).1
}

/// One direct factor `P_{p^k}` of `P_n`; exponent `0` carries no tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Component {
    pub exponent: u32,
    pub orbit: Option<TreeOrbit>,
}

/// An irreducible character of `P_n` as a tuple of tree orbits along the
/// `p`-adic digits of `n`, lowest exponent first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CharDescriptor {
    pub p: u32,
    pub n: u32,
    pub components: Vec<Component>,
}

/// Exponents of `n` in base `p`, each repeated by its digit, ascending.
pub fn p_adic_exponents(p: u32, n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut e = 0;
    while rest > 0 {
        for _ in 0..rest % p {
            out.push(e);
        }
        rest /= p;
        e += 1;
    }
    out
}

impl CharDescriptor {
    /// `orbits` lists the trees for the exponent `>= 1` components in
    /// ascending order of levels; exponent-0 factors are filled in.
    pub fn new(p: u32, n: u32, orbits: Vec<TreeOrbit>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let exps = p_adic_exponents(p, n);
        let needed: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
        let given: Vec<u32> = orbits.iter().map(TreeOrbit::levels).collect();
        if needed != given {
            return Err(Error::Descriptor(format!(
                "n={n} needs trees with levels {needed:?}, got {given:?}"
            )));
        }
        let mut trees = orbits.into_iter();
        let mut components = Vec::with_capacity(exps.len());
        for e in exps {
            let orbit = if e == 0 { None } else { trees.next() };
            if let Some(o) = &orbit {
                if o.p() != p {
                    return Err(Error::Descriptor(format!("tree arity {} differs from p={p}", o.p())));
                }
                if !is_admissible(o.tree()) {
                    return Err(Error::Descriptor(format!("{o} is not admissible")));
                }
            }
            components.push(Component { exponent: e, orbit });
        }
        Ok(CharDescriptor { p, n, components })
    }

    /// Builds from trees in any order; `n` defaults to the sum of `p^levels`.
    pub fn from_trees(p: u32, n: Option<u32>, trees: &[LabelledTree]) -> Result<Self> {
        let mut orbits: Vec<TreeOrbit> = trees.iter().map(canonicalize).collect();
        orbits.sort_by_key(TreeOrbit::levels);
        let sum: u32 = orbits.iter().map(|o| p.pow(o.levels())).sum();
        let n = n.unwrap_or(sum);
        if n < sum {
            return Err(Error::Descriptor(format!("trees need n >= {sum}, got {n}")));
        }
        Self::new(p, n, orbits)
    }

    /// Parses trees separated by `*`, e.g. `X(1;0)*2`.
    pub fn parse(s: &str, p: u32, n: Option<u32>) -> Result<Self> {
        let mut trees = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let bytes: Vec<char> = s.chars().collect();
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '*' if depth == 0 => {
                    trees.push(LabelledTree::parse(&bytes[start..i].iter().collect::<String>(), p)?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        let last: String = bytes[start..].iter().collect();
        if !last.trim().is_empty() {
            trees.push(LabelledTree::parse(&last, p)?);
        }
        Self::from_trees(p, n, &trees).map_err(|e| match e {
            Error::Parse(_) => e,
            other => Error::Parse(other.to_string()),
        })
    }

    pub fn trees(&self) -> impl Iterator<Item = &TreeOrbit> {
        self.components.iter().filter_map(|c| c.orbit.as_ref())
    }

    pub fn stats(&self) -> TreeStats {
        let mut st = TreeStats::empty(self.p);
        for t in self.trees() {
            st.absorb(&tree_stats(t.tree()));
        }
        st
    }

    pub fn degree(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.p), self.stats().degree_exponent as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.trees().all(|t| t.tree().labels().iter().all(|&l| l == 0))
    }
}

impl fmt::Display for CharDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.trees().map(|t| t.to_string()).collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

/// Characters of `P_n` agreeing after every person label is collapsed to one value.
pub fn equivalent_0p(a: &CharDescriptor, b: &CharDescriptor) -> bool {
    a.p == b.p
        && a.n == b.n
        && a.trees().zip(b.trees()).all(|(x, y)| {
            canonicalize(&x.tree().collapse_people()) == canonicalize(&y.tree().collapse_people())
        })
}

/// Key whose equality is the `~_{0,p}` relation.
pub fn class_key_0p(c: &CharDescriptor) -> Vec<TreeOrbit> {
    c.trees().map(|t| canonicalize(&t.tree().collapse_people())).collect()
}

/// All characters of `P_n`, components enumerated lexicographically.
pub fn enumerate_chars(p: u32, n: u32, guard: u64) -> Result<Vec<CharDescriptor>> {
    let exps: Vec<u32> = p_adic_exponents(p, n).into_iter().filter(|&e| e > 0).collect();
    let mut total = BigUint::one();
    for &e in &exps {
        total *= irr_count(p, e);
    }
    if total > BigUint::from(guard) {
        return Err(Error::GuardExceeded { count: total.to_string(), guard });
    }
    let mut lists = std::collections::BTreeMap::new();
    for &e in &exps {
        if let std::collections::btree_map::Entry::Vacant(v) = lists.entry(e) {
            v.insert(enumerate_irr_guarded(p, e, guard)?);
        }
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; exps.len()];
    loop {
        let orbits = exps.iter().zip(&idx).map(|(e, &i)| lists[e][i].clone()).collect();
        out.push(CharDescriptor::new(p, n, orbits)?);
        let mut pos = idx.len();
        while pos > 0 && idx[pos - 1] == lists[&exps[pos - 1]].len() - 1 {
            idx[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        idx[pos - 1] += 1;
    }
    Ok(out)
}
