#![allow(dead_code)]

//! Explicit permutation model of `C_5 ≀ C_5` on 25 points, independent of
//! the analytic class data.

use std::collections::HashMap;

pub const P: usize = 5;
pub const POINTS: usize = P * P;

/// `(x; h)` sends point `(b, j)` to `(b + h, j + x_b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Elem {
    pub x: [u8; P],
    pub h: u8,
}

impl Elem {
    pub fn perm(&self) -> [u8; POINTS] {
        let mut out = [0u8; POINTS];
        for b in 0..P {
            for j in 0..P {
                let nb = (b + self.h as usize) % P;
                let nj = (j + self.x[b] as usize) % P;
                out[b * P + j] = (nb * P + nj) as u8;
            }
        }
        out
    }
}

pub fn all_elements() -> Vec<Elem> {
    let mut v = Vec::with_capacity(15625);
    for code in 0..P.pow(P as u32 + 1) {
        let mut c = code;
        let mut x = [0u8; P];
        for xi in &mut x {
            *xi = (c % P) as u8;
            c /= P;
        }
        v.push(Elem { x, h: (c % P) as u8 });
    }
    v
}

pub fn compose(a: &[u8; POINTS], b: &[u8; POINTS]) -> [u8; POINTS] {
    // first a, then b
    let mut out = [0u8; POINTS];
    for i in 0..POINTS {
        out[i] = b[a[i] as usize];
    }
    out
}

pub fn inverse(a: &[u8; POINTS]) -> [u8; POINTS] {
    let mut out = [0u8; POINTS];
    for i in 0..POINTS {
        out[a[i] as usize] = i as u8;
    }
    out
}

pub fn cycle_type(a: &[u8; POINTS]) -> Vec<u32> {
    let mut seen = [false; POINTS];
    let mut out = Vec::new();
    for s in 0..POINTS {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = a[i] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Conjugacy classes as lists of element indices, found by closing under
/// conjugation by the two generators.
pub fn brute_classes(elems: &[Elem]) -> Vec<Vec<usize>> {
    let perms: Vec<[u8; POINTS]> = elems.iter().map(Elem::perm).collect();
    let index: HashMap<[u8; POINTS], usize> = perms.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    assert_eq!(index.len(), elems.len(), "elements must be distinct permutations");
    let mut gx = [0u8; P];
    gx[0] = 1;
    let gens = [Elem { x: gx, h: 0 }.perm(), Elem { x: [0; P], h: 1 }.perm()];
    let mut class_of = vec![usize::MAX; elems.len()];
    let mut classes = Vec::new();
    for start in 0..elems.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class_of[start] = id;
        let mut k = 0;
        while k < members.len() {
            let cur = perms[members[k]];
            for g in &gens {
                let conj = compose(&compose(&inverse(g), &cur), g);
                let j = index[&conj];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        classes.push(members);
    }
    classes
}
