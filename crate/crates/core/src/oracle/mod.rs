//! Brute-force Sylow branching multiplicities for `p`-adic exponents ≤ 2.
//!
//! `[χ^λ↓, θ] = |P_n|⁻¹ Σ_g χ^λ(g) conj(θ(g))`, summed class by class. Since
//! `χ^λ` only sees cycle types, the class sums `Σ |g^P| conj(θ(g))` are first
//! gathered per cycle type.

pub mod classes;
pub mod cyclotomic;
pub mod mn;
pub mod verify;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use once_cell::sync::OnceCell;
use rayon::prelude::*;

pub use classes::{ClassInfo, ComponentClass};
pub use cyclotomic::CyclotomicInt;
pub use mn::{dimension, mn_char};

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};
use crate::trees::{is_prime, p_adic_exponents, CharDescriptor};

/// Largest `n` for which full `Ω(θ)` sweeps are offered.
pub const FULL_OMEGA_CAP: u32 = 30;

/// A conjugacy class of `P_n`: one class per direct factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub parts: Vec<ComponentClass>,
    pub size: u128,
    pub cycle_type: Partition,
}

pub struct Oracle {
    p: u32,
    n: u32,
    order: BigInt,
    exponents: Vec<u32>,
    tables: BTreeMap<u32, Vec<ClassInfo>>,
    cycle_types: Vec<Partition>,
    chi: OnceCell<(Vec<Partition>, Vec<Vec<BigInt>>)>,
}

/// Per-cycle-type class sums of `conj(θ)`, aligned with [`Oracle::cycle_types`].
pub struct ThetaSums(Vec<CyclotomicInt>);

fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = a.iter().chain(b).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

impl Oracle {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let exponents = p_adic_exponents(p, n);
        let mut tables = BTreeMap::new();
        for &e in &exponents {
            if !tables.contains_key(&e) {
                tables.insert(e, classes::component_classes(p, e)?);
            }
        }
        let mut order = BigInt::from(1);
        let mut cts: Vec<Vec<u32>> = vec![Vec::new()];
        for e in &exponents {
            let t = &tables[e];
            order *= t.iter().map(|c| BigInt::from(c.size)).sum::<BigInt>();
            let mut local: Vec<&Vec<u32>> = t.iter().map(|c| &c.cycles).collect();
            local.sort();
            local.dedup();
            let mut next: Vec<Vec<u32>> = cts.iter().flat_map(|a| local.iter().map(move |b| merge(a, b))).collect();
            next.sort();
            next.dedup();
            cts = next;
        }
        let mut cycle_types: Vec<Partition> = cts.into_iter().map(|c| Partition::new(c).unwrap()).collect();
        crate::partitions::sort_desc(&mut cycle_types);
        Ok(Oracle { p, n, order, exponents, tables, cycle_types, chi: OnceCell::new() })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `|P_n|`.
    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn cycle_types(&self) -> &[Partition] {
        &self.cycle_types
    }

    /// All classes of `P_n` as products of factor classes.
    pub fn classes(&self) -> Vec<ConjClass> {
        let mut out = vec![ConjClass { parts: Vec::new(), size: 1, cycle_type: Partition::empty() }];
        for e in &self.exponents {
            let mut next = Vec::with_capacity(out.len() * self.tables[e].len());
            for c in &out {
                for info in &self.tables[e] {
                    let mut parts = c.parts.clone();
                    parts.push(info.class.clone());
                    next.push(ConjClass {
                        parts,
                        size: c.size * info.size as u128,
                        cycle_type: Partition::new(merge(c.cycle_type.parts(), &info.cycles)).unwrap(),
                    });
                }
            }
            out = next;
        }
        out
    }

    fn check(&self, theta: &CharDescriptor) -> Result<()> {
        if theta.p != self.p || theta.n != self.n {
            return Err(Error::Descriptor(format!(
                "character of P_{} at p={} given to oracle for n={}, p={}",
                theta.n, theta.p, self.n, self.p
            )));
        }
        Ok(())
    }

    pub fn theta_value(&self, theta: &CharDescriptor, g: &ConjClass) -> Result<CyclotomicInt> {
        self.check(theta)?;
        let mut acc = CyclotomicInt::one(self.p);
        for (comp, class) in theta.components.iter().zip(&g.parts) {
            let v = classes::component_value(self.p, comp.orbit.as_ref().map(|o| o.tree()), class)?;
            acc = &acc * &v;
        }
        Ok(acc)
    }

    pub fn theta_sums(&self, theta: &CharDescriptor) -> Result<ThetaSums> {
        self.check(theta)?;
        let mut acc: BTreeMap<Vec<u32>, CyclotomicInt> = BTreeMap::from([(Vec::new(), CyclotomicInt::one(self.p))]);
        for comp in &theta.components {
            let tree = comp.orbit.as_ref().map(|o| o.tree());
            let mut local: BTreeMap<&Vec<u32>, CyclotomicInt> = BTreeMap::new();
            for info in &self.tables[&comp.exponent] {
                let v = classes::component_value(self.p, tree, &info.class)?.conj();
                local
                    .entry(&info.cycles)
                    .or_insert_with(|| CyclotomicInt::zero(self.p))
                    .add_scaled(&BigInt::from(info.size), &v);
            }
            let mut next: BTreeMap<Vec<u32>, CyclotomicInt> = BTreeMap::new();
            for (a, x) in &acc {
                for (b, y) in &local {
                    *next.entry(merge(a, b)).or_insert_with(|| CyclotomicInt::zero(self.p)) += &(x * y);
                }
            }
            acc = next;
        }
        let sums = self
            .cycle_types
            .iter()
            .map(|ct| acc.remove(ct.parts()).unwrap_or_else(|| CyclotomicInt::zero(self.p)))
            .collect();
        Ok(ThetaSums(sums))
    }

    fn finish(&self, total: CyclotomicInt, what: impl Fn() -> String) -> Result<u64> {
        let k = total
            .as_integer()
            .ok_or_else(|| Error::OracleInconsistency(format!("irrational inner product {total} for {}", what())))?;
        let (q, r) = k.div_rem(&self.order);
        if !r.is_zero() {
            return Err(Error::OracleInconsistency(format!("{k} not divisible by |P_n| = {} for {}", self.order, what())));
        }
        if q.is_negative() {
            return Err(Error::OracleInconsistency(format!("negative multiplicity {q} for {}", what())));
        }
        q.to_u64().ok_or_else(|| Error::OracleInconsistency(format!("multiplicity {q} overflows")))
    }

    fn mult_from_row(&self, row: &[BigInt], sums: &ThetaSums, what: impl Fn() -> String) -> Result<u64> {
        let mut total = CyclotomicInt::zero(self.p);
        for (chi, s) in row.iter().zip(&sums.0) {
            if !chi.is_zero() {
                total.add_scaled(chi, s);
            }
        }
        self.finish(total, what)
    }

    /// `χ^λ` on each of [`Self::cycle_types`].
    pub fn chi_row(&self, lambda: &Partition) -> Result<Vec<BigInt>> {
        self.cycle_types.iter().map(|ct| mn_char(lambda, ct)).collect()
    }

    pub fn mult_with(&self, lambda: &Partition, sums: &ThetaSums) -> Result<u64> {
        if lambda.size() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, got: lambda.size() });
        }
        self.mult_from_row(&self.chi_row(lambda)?, sums, || lambda.to_string())
    }

    /// `[χ^λ↓_{P_n}, θ]`.
    pub fn restriction_mult(&self, lambda: &Partition, theta: &CharDescriptor) -> Result<u64> {
        self.mult_with(lambda, &self.theta_sums(theta)?)
    }

    /// The same multiplicity summed over every class without grouping.
    pub fn restriction_mult_direct(&self, lambda: &Partition, theta: &CharDescriptor) -> Result<u64> {
        let mut total = CyclotomicInt::zero(self.p);
        for g in self.classes() {
            let chi = mn_char(lambda, &g.cycle_type)? * BigInt::from(g.size);
            total.add_scaled(&chi, &self.theta_value(theta, &g)?.conj());
        }
        self.finish(total, || format!("{lambda} (direct)"))
    }

    fn chi_table(&self) -> Result<&(Vec<Partition>, Vec<Vec<BigInt>>)> {
        if self.n > FULL_OMEGA_CAP {
            return Err(Error::OracleScale(format!("full sweep at n={} above cap {FULL_OMEGA_CAP}", self.n)));
        }
        self.chi.get_or_try_init(|| {
            let parts = enumerate(self.n);
            let rows = parts.par_iter().map(|l| self.chi_row(l)).collect::<Result<Vec<_>>>()?;
            Ok((parts, rows))
        })
    }

    /// Multiplicity of `θ` in every `λ ⊢ n`, in descending lexicographic order of `λ`.
    pub fn multiplicities(&self, theta: &CharDescriptor) -> Result<Vec<(Partition, u64)>> {
        let sums = self.theta_sums(theta)?;
        let (parts, rows) = self.chi_table()?;
        parts
            .iter()
            .zip(rows)
            .map(|(l, row)| Ok((l.clone(), self.mult_from_row(row, &sums, || format!("{l} / {theta}"))?)))
            .collect()
    }

    /// `Ω(θ)` by direct computation.
    pub fn omega_oracle(&self, theta: &CharDescriptor) -> Result<Vec<Partition>> {
        Ok(self.multiplicities(theta)?.into_iter().filter(|(_, m)| *m > 0).map(|(l, _)| l).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(s: &str) -> CharDescriptor {
        CharDescriptor::parse(s, 5, None).unwrap()
    }

    #[test]
    fn wreath_class_count() {
        let o = Oracle::new(5, 25).unwrap();
        let cl = o.classes();
        assert_eq!(cl.len(), 649);
        assert_eq!(cl.iter().map(|c| c.size).sum::<u128>(), 15625);
        assert_eq!(o.order(), &BigInt::from(15625));
        assert_eq!(o.cycle_types().len(), 7);
    }

    #[test]
    fn order_five_multiplicities() {
        let o = Oracle::new(5, 5).unwrap();
        let l: Partition = "[4,1]".parse().unwrap();
        assert_eq!(o.restriction_mult(&l, &th("1")).unwrap(), 1);
        assert_eq!(o.restriction_mult(&l, &th("0")).unwrap(), 0);
    }

    #[test]
    fn grouped_equals_direct() {
        let o = Oracle::new(5, 25).unwrap();
        for t in ["X(1;2)", "X(0;3)", "(0|1|0|2|4;5)", "X(0;0)"] {
            let theta = th(t);
            for l in ["[20,5]", "[19,6]", "[10,8,4,3]", "[24,1]"] {
                let l: Partition = l.parse().unwrap();
                assert_eq!(o.restriction_mult(&l, &theta).unwrap(), o.restriction_mult_direct(&l, &theta).unwrap());
            }
        }
        assert_eq!(o.restriction_mult(&"[20,5]".parse().unwrap(), &th("X(1;2)")).unwrap(), 0);
    }

    #[test]
    fn exponent_three_is_out_of_scale() {
        assert!(matches!(Oracle::new(5, 125), Err(Error::OracleScale(_))));
    }
}
