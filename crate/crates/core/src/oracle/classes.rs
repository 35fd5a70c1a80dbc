//! Conjugacy classes of `P_1`, `C_p` and `C_p ≀ C_p`, and the character
//! values of their irreducibles.
//!
//! An element of `C_p ≀ C_p` is `(x; h)` with base vector `x ∈ Z_p^p` and top
//! rotation `h`. For `h = 0` the class is the rotation orbit of `x`; for
//! `h ≠ 0` it is determined by `h` and `Σ x mod p`.

use serde::Serialize;

use super::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::trees::LabelledTree;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentClass {
    /// The trivial group `P_1`.
    Point,
    /// `j ∈ Z_p` in `C_p`.
    Cyclic(u32),
    /// Base element, represented by the least rotation of its exponent vector.
    Base(Vec<u32>),
    /// `h = j ≠ 0`, base exponents summing to `s`.
    Skew { j: u32, s: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub class: ComponentClass,
    pub size: u64,
    /// Cycle lengths of the element acting on `p^k` points, descending.
    pub cycles: Vec<u32>,
}

fn least_rotation(x: &[u32]) -> Vec<u32> {
    (0..x.len()).map(|r| x[r..].iter().chain(&x[..r]).copied().collect::<Vec<u32>>()).min().unwrap_or_default()
}

/// Classes of `P_{p^exponent}` for `exponent <= 2`.
pub fn component_classes(p: u32, exponent: u32) -> Result<Vec<ClassInfo>> {
    match exponent {
        0 => Ok(vec![ClassInfo { class: ComponentClass::Point, size: 1, cycles: vec![1] }]),
        1 => Ok((0..p)
            .map(|j| ClassInfo {
                class: ComponentClass::Cyclic(j),
                size: 1,
                cycles: if j == 0 { vec![1; p as usize] } else { vec![p] },
            })
            .collect()),
        2 => {
            let mut out = Vec::new();
            let total = (p as u64).pow(p);
            for code in 0..total {
                let mut x = Vec::with_capacity(p as usize);
                let mut c = code;
                for _ in 0..p {
                    x.push((c % p as u64) as u32);
                    c /= p as u64;
                }
                x.reverse();
                if least_rotation(&x) != x {
                    continue;
                }
                let size = if x.iter().all(|&v| v == x[0]) { 1 } else { p as u64 };
                let mut cycles: Vec<u32> = Vec::new();
                for &v in &x {
                    if v == 0 {
                        cycles.extend(std::iter::repeat(1).take(p as usize));
                    } else {
                        cycles.push(p);
                    }
                }
                cycles.sort_unstable_by(|a, b| b.cmp(a));
                out.push(ClassInfo { class: ComponentClass::Base(x), size, cycles });
            }
            let skew_size = (p as u64).pow(p - 1);
            for j in 1..p {
                for s in 0..p {
                    let cycles = if s == 0 { vec![p; p as usize] } else { vec![p * p] };
                    out.push(ClassInfo { class: ComponentClass::Skew { j, s }, size: skew_size, cycles });
                }
            }
            Ok(out)
        }
        _ => Err(Error::OracleScale(format!("p-adic exponent {exponent} > 2"))),
    }
}

/// Value of the character indexed by `tree` (absent for `P_1`) on `class`.
pub fn component_value(p: u32, tree: Option<&LabelledTree>, class: &ComponentClass) -> Result<CyclotomicInt> {
    let z = |e: u64| CyclotomicInt::zeta_pow(p, (e % p as u64) as i64);
    let mismatch = || Error::OracleInconsistency(format!("class {class:?} does not match tree"));
    match (tree, class) {
        (None, ComponentClass::Point) => Ok(CyclotomicInt::one(p)),
        (Some(t), ComponentClass::Cyclic(j)) if t.levels() == 1 => Ok(z(t.root_label() as u64 * *j as u64)),
        (Some(t), ComponentClass::Base(x)) if t.levels() == 2 => {
            let kids: Vec<u64> = t.children().iter().map(|c| c.root_label() as u64).collect();
            if t.root_label() < p {
                let sum: u64 = x.iter().map(|&v| v as u64).sum();
                Ok(z(kids[0] * sum))
            } else {
                let n = x.len();
                let mut acc = CyclotomicInt::zero(p);
                for r in 0..n {
                    let e: u64 = (0..n).map(|i| kids[i] * x[(i + r) % n] as u64).sum();
                    acc += &z(e);
                }
                Ok(acc)
            }
        }
        (Some(t), ComponentClass::Skew { j, s }) if t.levels() == 2 => {
            if t.root_label() == p {
                return Ok(CyclotomicInt::zero(p));
            }
            let eps = t.children()[0].root_label() as u64;
            Ok(z(t.root_label() as u64 * *j as u64 + eps * *s as u64))
        }
        _ => Err(mismatch()),
    }
}
