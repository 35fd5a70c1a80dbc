//! Littlewood–Richardson coefficients, Young-subgroup restriction, and the
//! ★-product of partition sets.
//!
//! Coefficients are counted by building LR tableaux one letter at a time: the
//! cells holding letter `j` form a horizontal strip, and the reverse reading
//! word stays a lattice word exactly when, for every row `r`, the number of
//! `j`s in rows `0..=r` is at most the number of `j-1`s in rows `0..r`.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::partitions::{sort_desc, Partition, SymbolicPartitionSet as S};

type Expansion = BTreeMap<Partition, u64>;

thread_local! {
    static COEFF_CACHE: RefCell<HashMap<(Partition, Partition, Partition), u64>> = RefCell::new(HashMap::new());
    static PRODUCT_CACHE: RefCell<HashMap<(Partition, Partition), Vec<(Partition, u64)>>> = RefCell::new(HashMap::new());
}

struct Builder<'a> {
    nu: &'a [u32],
    bound: Option<&'a Partition>,
    out: Expansion,
}

impl Builder<'_> {
    fn letter(&mut self, j: usize, shape: &mut Vec<u32>, prev: &[u32]) {
        if j == self.nu.len() {
            *self.out.entry(Partition::from_unsorted(shape.clone())).or_insert(0) += 1;
            return;
        }
        let old = shape.clone();
        let mut counts = vec![0u32; old.len() + 1];
        self.row(j, 0, self.nu[j], 0, 0, &old, prev, &mut counts, shape);
    }

    #[allow(clippy::too_many_arguments)]
    fn row(
        &mut self,
        j: usize,
        r: usize,
        left: u32,
        placed: u32,
        prev_above: u32,
        old: &[u32],
        prev: &[u32],
        counts: &mut Vec<u32>,
        shape: &mut Vec<u32>,
    ) {
        if left == 0 {
            let new_prev: Vec<u32> = counts.clone();
            let saved = shape.clone();
            self.letter(j + 1, shape, &new_prev);
            *shape = saved;
            return;
        }
        if r > old.len() {
            return;
        }
        let old_r = old.get(r).copied().unwrap_or(0);
        let mut cap = if r == 0 { left } else { (old[r - 1] - old_r).min(left) };
        if j > 0 {
            // lattice: placed + a <= sum of previous letter strictly above row r
            cap = cap.min(prev_above.saturating_sub(placed));
        }
        if let Some(b) = self.bound {
            cap = cap.min(b.part(r).saturating_sub(old_r));
        }
        let next_prev_above = prev_above + prev.get(r).copied().unwrap_or(0);
        for a in (0..=cap).rev() {
            if r == shape.len() {
                if a == 0 {
                    continue;
                }
                shape.push(a);
            } else {
                shape[r] = old_r + a;
            }
            counts[r] = a;
            self.row(j, r + 1, left - a, placed + a, next_prev_above, old, prev, counts, shape);
            counts[r] = 0;
            if r == old.len() {
                shape.truncate(old.len());
            } else {
                shape[r] = old_r;
            }
        }
    }
}

fn expand(mu: &Partition, nu: &Partition, bound: Option<&Partition>) -> Expansion {
    let mut b = Builder { nu: nu.parts(), bound, out: BTreeMap::new() };
    let mut shape = mu.parts().to_vec();
    b.letter(0, &mut shape, &[]);
    b.out
}

/// The product `s_mu * s_nu` as a map from `lambda` to `LR(lambda; mu, nu)`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Vec<(Partition, u64)> {
    let key = (mu.clone(), nu.clone());
    if let Some(v) = PRODUCT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let v: Vec<(Partition, u64)> = expand(mu, nu, None).into_iter().collect();
    PRODUCT_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= crate::cache_capacity() {
            c.clear();
        }
        c.insert(key, v.clone());
    });
    v
}

pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let want = mu.size() + nu.size();
    if lambda.size() != want {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: want });
    }
    if !mu.is_subpartition_of(lambda) || !nu.is_subpartition_of(lambda) {
        return Ok(0);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = COEFF_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return Ok(v);
    }
    let v = expand(mu, nu, Some(lambda)).get(lambda).copied().unwrap_or(0);
    COEFF_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= crate::cache_capacity() {
            c.clear();
        }
        c.insert(key, v);
    });
    Ok(v)
}

/// Multiplicity of `mu^1 × … × mu^t` in the restriction of `lambda` to the
/// Young subgroup with block sizes `|mu^i|`.
pub fn lr_multi(lambda: &Partition, factors: &[Partition]) -> Result<u64> {
    let total: u32 = factors.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: total });
    }
    let Some((last, init)) = factors.split_last() else {
        return Ok(1);
    };
    let mut cur: Expansion = BTreeMap::from([(Partition::empty(), 1)]);
    for f in init {
        let mut next = Expansion::new();
        for (kappa, c) in &cur {
            for (k2, d) in expand(kappa, f, Some(lambda)) {
                *next.entry(k2).or_insert(0) += c * d;
            }
        }
        cur = next;
    }
    let mut acc = 0;
    for (kappa, c) in &cur {
        acc += c * lr_coeff(lambda, kappa, last)?;
    }
    Ok(acc)
}

/// Constituents of `lambda` restricted to `S_{b1} × … × S_{bt}`, with
/// multiplicities, in descending order of the tuples.
pub fn restrict_to_young(lambda: &Partition, blocks: &[u32]) -> Result<Vec<(Vec<Partition>, u64)>> {
    let total: u32 = blocks.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: total });
    }
    let mut out = Vec::new();
    restrict_rec(lambda, blocks, 1, &mut Vec::new(), &mut out)?;
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

fn restrict_rec(
    lambda: &Partition,
    blocks: &[u32],
    mult: u64,
    prefix: &mut Vec<Partition>,
    out: &mut Vec<(Vec<Partition>, u64)>,
) -> Result<()> {
    let Some((&b, rest)) = blocks.split_first() else {
        out.push((prefix.clone(), mult));
        return Ok(());
    };
    if rest.is_empty() {
        prefix.push(lambda.clone());
        out.push((prefix.clone(), mult));
        prefix.pop();
        return Ok(());
    }
    let rest_size = lambda.size() - b;
    let len = lambda.len();
    for mu in crate::partitions::enumerate_bounded(b, lambda.first(), len) {
        if !mu.is_subpartition_of(lambda) {
            continue;
        }
        for kappa in crate::partitions::enumerate_bounded(rest_size, lambda.first(), len) {
            let c = lr_coeff(lambda, &mu, &kappa)?;
            if c > 0 {
                prefix.push(mu.clone());
                restrict_rec(&kappa, rest, mult * c, prefix, out)?;
                prefix.pop();
            }
        }
    }
    Ok(())
}

fn common_size(a: &[Partition]) -> Result<Option<u32>> {
    let Some(first) = a.first() else { return Ok(None) };
    let n = first.size();
    if let Some(bad) = a.iter().find(|p| p.size() != n) {
        return Err(Error::SizeMismatch { expected: n, got: bad.size() });
    }
    Ok(Some(n))
}

/// `A ★ B`: every partition appearing in some product `s_mu s_nu`, `mu ∈ A`, `nu ∈ B`.
pub fn star_explicit(a: &[Partition], b: &[Partition]) -> Result<Vec<Partition>> {
    common_size(a)?;
    common_size(b)?;
    let mut out = BTreeSet::new();
    for mu in a {
        for nu in b {
            out.extend(lr_product(mu, nu).into_iter().map(|(l, _)| l));
        }
    }
    let mut v: Vec<Partition> = out.into_iter().collect();
    sort_desc(&mut v);
    Ok(v)
}

fn support_of_product(factors: &[&Partition]) -> BTreeSet<Partition> {
    let mut cur = BTreeSet::from([Partition::empty()]);
    for f in factors {
        let mut next = BTreeSet::new();
        for k in &cur {
            next.extend(lr_product(k, f).into_iter().map(|(l, _)| l));
        }
        cur = next;
    }
    cur
}

/// `M(q, A)`: the support of all products over not-all-equal `q`-tuples from `A`.
pub fn mixed_set(q: usize, a: &[Partition]) -> Result<Vec<Partition>> {
    if q < 2 {
        return Err(Error::InvalidSet(format!("mixed set needs q >= 2, got {q}")));
    }
    common_size(a)?;
    let mut items = a.to_vec();
    sort_desc(&mut items);
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; q];
    if items.len() >= 2 {
        loop {
            if idx.iter().any(|&i| i != idx[0]) {
                let fs: Vec<&Partition> = idx.iter().map(|&i| &items[i]).collect();
                out.extend(support_of_product(&fs));
            }
            // next nondecreasing index tuple
            let mut pos = q;
            while pos > 0 && idx[pos - 1] == items.len() - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            let v = idx[pos - 1];
            for x in idx.iter_mut().skip(pos) {
                *x = v;
            }
        }
    }
    let mut v: Vec<Partition> = out.into_iter().collect();
    sort_desc(&mut v);
    Ok(v)
}

#[derive(Clone, Copy)]
enum Kind {
    Full(u32),
    Boxed(u32, u32),
    PFull(u32),
    PBox(u32, u32),
}

fn kind(s: &S) -> Option<Kind> {
    Some(match *s {
        S::Full { n } => Kind::Full(n),
        S::Box { n, t } if t >= n => Kind::Full(n),
        S::Box { n, t } => Kind::Boxed(n, t),
        S::PuncturedFull { n } => Kind::PFull(n),
        S::PuncturedBox { n, t } => Kind::PBox(n, t),
        S::Explicit { .. } => return None,
    })
}

fn box_of(n: u32, t: u32) -> S {
    if t >= n {
        S::full(n)
    } else {
        S::boxed(n, t)
    }
}

fn big_box_ok(x: u32, a: u32) -> bool {
    x < 2 * a && a <= x
}

fn pbox_ok(y: u32, b: u32) -> bool {
    y + 2 < 2 * b && b + 5 <= y
}

fn star_ordered(l: Kind, r: Kind) -> Option<S> {
    use Kind::*;
    let as_box = |k: Kind| match k {
        Full(n) => Some((n, n)),
        Boxed(n, t) => Some((n, t)),
        _ => None,
    };
    if let (Some((x, a)), Some((y, b))) = (as_box(l), as_box(r)) {
        if big_box_ok(x, a) && big_box_ok(y, b) {
            return Some(box_of(x + y, a + b));
        }
        return None;
    }
    match (l, r) {
        (PFull(x), PFull(y)) if x >= 5 && y >= 5 => Some(S::full(x + y)),
        (PFull(x), PBox(y, b)) if x >= 5 && pbox_ok(y, b) => Some(S::PuncturedBox { n: x + y, t: x + b }),
        (Full(x), PBox(y, b)) if pbox_ok(y, b) => Some(S::PuncturedBox { n: x + y, t: x + b }),
        (Boxed(x, a), PBox(y, b)) if big_box_ok(x, a) && a < x && pbox_ok(y, b) => Some(box_of(x + y, a + b)),
        (PBox(x, a), PBox(y, b)) if pbox_ok(x, a) && pbox_ok(y, b) => Some(box_of(x + y, a + b)),
        _ => match (as_box(l), r) {
            (Some((x, a)), PFull(y)) if big_box_ok(x, a) && y >= 5 => Some(box_of(x + y, a + y)),
            _ => None,
        },
    }
}

/// Closed-form ★ on the symbolic families. Inputs outside the known rules are
/// an error; callers should then materialize and use [`star_explicit`].
pub fn star_symbolic(a: &S, b: &S) -> Result<S> {
    let no_rule = || Error::NoSymbolicRule(format!("{a} ★ {b}"));
    let (ka, kb) = (kind(a).ok_or_else(no_rule)?, kind(b).ok_or_else(no_rule)?);
    star_ordered(ka, kb).or_else(|| star_ordered(kb, ka)).ok_or_else(no_rule)
}
