//! Sylow branching coefficients of symmetric groups at odd primes.
//!
//! For a Sylow `p`-subgroup `P_n` of `S_n` and a linear or higher irreducible
//! character `θ` of `P_n`, this crate describes the set `Ω(θ)` of partitions
//! `λ ⊢ n` whose character restricts to `P_n` with `θ` as a constituent.
//!
//! * [`partitions`]: partitions and symbolic partition sets.
//! * [`lr`]: Littlewood–Richardson coefficients and the ★-product.
//! * [`trees`]: labelled `p`-ary trees indexing `Irr(P_{p^k})`.
//! * [`omega`]: closed-form descriptions of `Ω(θ)`.
//! * [`oracle`]: brute-force character computation for `p`-adic exponents ≤ 2.

pub mod error;
pub mod lr;
pub mod omega;
pub mod oracle;
pub mod partitions;
pub mod trees;

pub use error::{Error, Result};
pub use partitions::{Partition, SymbolicPartitionSet};

use once_cell::sync::Lazy;

/// Entry bound for the per-thread memo tables, read from `SYLOW_CACHE_SIZE`.
pub fn cache_capacity() -> usize {
    static CAP: Lazy<usize> = Lazy::new(|| {
        std::env::var("SYLOW_CACHE_SIZE").ok().and_then(|v| v.parse().ok()).unwrap_or(1 << 20)
    });
    *CAP
}
