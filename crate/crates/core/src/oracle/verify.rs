//! Comparison of computed `Ω(θ)` against the closed-form description.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{dimension, Oracle};
use crate::error::Result;
use crate::omega::{boundary_claims, capital_m, little_m, omega_shape, Claim, OmegaDescription};
use crate::partitions::Partition;
use crate::trees::CharDescriptor;

const MAX_LISTED: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theta: String,
    pub shape: String,
    pub passed: bool,
    pub mismatches: Vec<String>,
    #[serde(skip)]
    pub millis: u64,
}

fn listed(label: &str, items: &[&Partition]) -> String {
    let shown: Vec<String> = items.iter().take(MAX_LISTED).map(|p| p.to_string()).collect();
    let more = if items.len() > MAX_LISTED { format!(" (+{} more)", items.len() - MAX_LISTED) } else { String::new() };
    format!("{label}: {}{more}", shown.join(" "))
}

/// Checks a precomputed multiplicity vector against every claim made for `θ`.
pub fn check_against_shape(theta: &CharDescriptor, mults: &[(Partition, u64)]) -> Result<Vec<String>> {
    let shape = omega_shape(theta)?;
    let omega: BTreeSet<&Partition> = mults.iter().filter(|(_, m)| *m > 0).map(|(l, _)| l).collect();
    let mut bad = Vec::new();
    if let Some(exact) = shape.materialize()? {
        let exact: BTreeSet<&Partition> = exact.iter().collect();
        let missing: Vec<&Partition> = exact.difference(&omega).copied().collect();
        let extra: Vec<&Partition> = omega.difference(&exact).copied().collect();
        if !missing.is_empty() {
            bad.push(listed("predicted but absent", &missing));
        }
        if !extra.is_empty() {
            bad.push(listed("present but not predicted", &extra));
        }
    } else if let OmegaDescription::Bounded { m, big_m, .. } = shape {
        let mut errs: Vec<&Partition> = Vec::new();
        for (l, mult) in mults {
            let w = l.normalized_width()?;
            let inside = *mult > 0;
            if (w <= m && !inside) || (w > big_m && inside) || (w > m && l.is_thin() && inside) {
                errs.push(l);
            }
        }
        if !errs.is_empty() {
            bad.push(listed("outside the bounded description", &errs));
        }
    }
    let widest = omega.iter().map(|l| l.normalized_width()).collect::<Result<Vec<_>>>()?.into_iter().max();
    let expect_big = capital_m(theta)?;
    if widest != Some(expect_big) {
        bad.push(format!("largest width {widest:?}, expected {expect_big}"));
    }
    let n = theta.n;
    let first_gap = mults
        .iter()
        .filter(|(_, m)| *m == 0)
        .map(|(l, _)| l.normalized_width())
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min();
    let inner = first_gap.map(|w| w - 1).unwrap_or(n);
    let expect_small = little_m(theta)?;
    if inner != expect_small {
        bad.push(format!("largest contained box {inner}, expected {expect_small}"));
    }
    for (l, claim) in boundary_claims(theta)? {
        let got = mults.iter().find(|(x, _)| *x == l).map(|(_, m)| *m).unwrap_or(0);
        let ok = match claim {
            Claim::Exactly(k) => got == k,
            Claim::AtLeast(k) => got >= k,
        };
        if !ok {
            bad.push(format!("multiplicity {got} at {l}, expected {claim:?}"));
        }
    }
    Ok(bad)
}

pub fn verify_theta(oracle: &Oracle, theta: &CharDescriptor) -> Result<VerificationReport> {
    let start = Instant::now();
    let mults = oracle.multiplicities(theta)?;
    let mismatches = check_against_shape(theta, &mults)?;
    Ok(VerificationReport {
        theta: theta.to_string(),
        shape: omega_shape(theta)?.to_string(),
        passed: mismatches.is_empty(),
        mismatches,
        millis: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub p: u32,
    pub n: u32,
    pub characters: usize,
    pub failures: usize,
    /// Partitions where `Σ_θ [χ^λ↓, θ]·θ(1) ≠ χ^λ(1)`.
    pub completeness_failures: Vec<String>,
    pub reports: Vec<VerificationReport>,
}

/// Verifies every character in `thetas` and, when `thetas` is all of
/// `Irr(P_n)`, the degree identity for each `λ`.
pub fn verify_sweep(oracle: &Oracle, thetas: &[CharDescriptor], complete: bool) -> Result<SweepReport> {
    let results: Vec<(VerificationReport, Vec<u64>)> = thetas
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let mults = oracle.multiplicities(t)?;
            let mismatches = check_against_shape(t, &mults)?;
            let report = VerificationReport {
                theta: t.to_string(),
                shape: omega_shape(t)?.to_string(),
                passed: mismatches.is_empty(),
                mismatches,
                millis: start.elapsed().as_millis() as u64,
            };
            Ok((report, mults.into_iter().map(|(_, m)| m).collect()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut completeness_failures = Vec::new();
    if complete {
        let parts = crate::partitions::enumerate(oracle.n());
        let degrees: Vec<BigInt> = thetas.iter().map(|t| BigInt::from(t.degree())).collect();
        for (i, l) in parts.iter().enumerate() {
            let s: BigInt = results.iter().zip(&degrees).map(|((_, m), d)| d * m[i]).sum();
            if s != dimension(l) {
                completeness_failures.push(l.to_string());
            }
        }
    }
    let reports: Vec<VerificationReport> = results.into_iter().map(|(r, _)| r).collect();
    Ok(SweepReport {
        p: oracle.p(),
        n: oracle.n(),
        characters: reports.len(),
        failures: reports.iter().filter(|r| !r.passed).count(),
        completeness_failures,
        reports,
    })
}
