//! Symmetric-group character values by the Murnaghan–Nakayama rule, using
//! beta-sets: removing a border strip of length `r` moves one bead down `r`
//! places, with sign given by the parity of the beads it jumps over.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;

thread_local! {
    static MN_CACHE: RefCell<HashMap<(Partition, Vec<u32>), BigInt>> = RefCell::new(HashMap::new());
}

/// `χ^λ` on the class of cycle type `cycle_type`.
pub fn mn_char(lambda: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: cycle_type.size() });
    }
    Ok(mn_rec(lambda, cycle_type.parts()))
}

fn mn_rec(lambda: &Partition, cycles: &[u32]) -> BigInt {
    let Some((&r, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    if lambda.len() == 1 || lambda.first() == 1 {
        // one row or column: every strip is forced
        let sign = if lambda.first() == 1 { cycles.iter().map(|&c| (c - 1) as usize).sum::<usize>() % 2 } else { 0 };
        return if sign == 0 { BigInt::one() } else { -BigInt::one() };
    }
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let len = lambda.len() as u32;
    let beta: Vec<u32> = lambda.parts().iter().enumerate().map(|(i, &x)| x + len - 1 - i as u32).collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb.iter().enumerate().map(|(j, &x)| x - (len - 1 - j as u32)).collect();
        let mu = Partition::from_unsorted(parts);
        let v = mn_rec(&mu, rest);
        if jumped % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    MN_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= crate::cache_capacity() {
            c.clear();
        }
        c.insert(key, total.clone());
    });
    total
}

/// `χ^λ(1)`.
pub fn dimension(lambda: &Partition) -> BigInt {
    let ones = Partition::new(vec![1; lambda.size() as usize]).unwrap();
    mn_rec(lambda, ones.parts())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn s5_values() {
        assert_eq!(mn_char(&p("[4,1]"), &p("[5]")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_char(&p("[3,2]"), &p("[5]")).unwrap(), BigInt::from(0));
        assert_eq!(mn_char(&p("[3,1,1]"), &p("[5]")).unwrap(), BigInt::from(1));
        assert_eq!(mn_char(&p("[3,1,1]"), &p("[2,2,1]")).unwrap(), BigInt::from(-2));
        assert_eq!(dimension(&p("[3,2]")), BigInt::from(5));
    }

    #[test]
    fn dimensions_match_hook_lengths() {
        for lam in crate::partitions::enumerate(12) {
            let conj = lam.conjugate();
            let mut hooks = BigInt::one();
            for (i, &row) in lam.parts().iter().enumerate() {
                for j in 0..row {
                    hooks *= row - j + conj.part(j as usize) - i as u32 - 1;
                }
            }
            let fact: BigInt = (1..=12u32).map(BigInt::from).product();
            assert_eq!(dimension(&lam), fact / hooks, "{lam}");
        }
    }

    #[test]
    fn column_orthogonality_s6() {
        let all = crate::partitions::enumerate(6);
        for a in &all {
            for b in &all {
                let s: BigInt = all.iter().map(|l| mn_char(l, a).unwrap() * mn_char(l, b).unwrap()).sum();
                if a != b {
                    assert!(s.is_zero(), "{a} {b}");
                } else {
                    assert!(s > BigInt::zero());
                }
            }
        }
    }
}
