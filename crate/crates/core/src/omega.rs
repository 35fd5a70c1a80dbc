//! Closed-form descriptions of `Ω(θ)`, the partitions whose restriction to
//! `P_n` contains `θ`, for primes `p >= 5`.
//!
//! Each factor `P_{p^k}` contributes a shape determined by its tree's
//! statistics; shapes of different factors are combined with ★.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr::star_symbolic;
use crate::partitions::{Partition, SymbolicPartitionSet as S};
use crate::trees::{people_meet_at_zero, tree_stats, CharDescriptor, LabelledTree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaDescription {
    /// `Ω(θ)` is exactly this set.
    ExactSet { set: S },
    /// `B_n(inner) ⊔ closure{(boundary, μ) : μ ∈ tail}`.
    ExactLayered { n: u32, inner: u32, boundary: u32, tail: S },
    /// `B_n(m) ⊆ Ω(θ) ⊆ B_n(M)`, with no thin partition outside `B_n(m)`.
    Bounded { n: u32, m: u32, big_m: u32, no_thin_outside_inner: bool },
}

#[derive(Serialize)]
#[serde(untagged)]
enum DescriptionJson<'a> {
    Set(&'a S),
    Other(OtherJson<'a>),
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum OtherJson<'a> {
    Layered { n: u32, inner: u32, boundary: u32, tail: &'a S },
    Bounded {
        n: u32,
        m: u32,
        #[serde(rename = "M")]
        big_m: u32,
        no_thin_outside_inner: bool,
    },
}

/// Exact sets serialize as the set itself, e.g. `{"kind":"box","n":25,"t":24}`.
impl Serialize for OmegaDescription {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let j = match self {
            Self::ExactSet { set } => DescriptionJson::Set(set),
            Self::ExactLayered { n, inner, boundary, tail } => {
                DescriptionJson::Other(OtherJson::Layered { n: *n, inner: *inner, boundary: *boundary, tail })
            }
            Self::Bounded { n, m, big_m, no_thin_outside_inner } => DescriptionJson::Other(OtherJson::Bounded {
                n: *n,
                m: *m,
                big_m: *big_m,
                no_thin_outside_inner: *no_thin_outside_inner,
            }),
        };
        j.serialize(s)
    }
}

impl OmegaDescription {
    pub fn n(&self) -> u32 {
        match self {
            Self::ExactSet { set } => set.n(),
            Self::ExactLayered { n, .. } | Self::Bounded { n, .. } => *n,
        }
    }

    /// Inner and outer box widths used when this shape is combined with a bounded one.
    fn widths(&self) -> (u32, u32) {
        match *self {
            Self::ExactSet { ref set } => match *set {
                S::Full { n } | S::PuncturedFull { n } => (n, n),
                S::Box { t, .. } | S::PuncturedBox { t, .. } => (t, t),
                S::Explicit { .. } => unreachable!("component shapes are symbolic"),
            },
            Self::ExactLayered { inner, boundary, .. } => (inner, boundary),
            Self::Bounded { m, big_m, .. } => (m, big_m),
        }
    }

    /// Materializes an exact description as a sorted member list.
    pub fn materialize(&self) -> Result<Option<Vec<Partition>>> {
        Ok(match self {
            Self::ExactSet { set } => Some(set.materialize()?),
            Self::ExactLayered { n, inner, boundary, tail } => {
                let mut v = S::boxed(*n, *inner).materialize()?;
                for mu in tail.materialize()? {
                    let l = mu.with_first_row(*boundary)?;
                    v.push(l.conjugate());
                    v.push(l);
                }
                crate::partitions::sort_desc(&mut v);
                Some(v)
            }
            Self::Bounded { .. } => None,
        })
    }
}

impl std::fmt::Display for OmegaDescription {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::ExactSet { set } => write!(f, "{set}"),
            Self::ExactLayered { n, inner, boundary, tail } => {
                write!(f, "B_{n}({inner}) ⊔ cl{{({boundary},μ) : μ ∈ {tail}}}")
            }
            Self::Bounded { n, m, big_m, .. } => write!(f, "B_{n}({m}) ⊆ Ω ⊆ B_{n}({big_m})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    In,
    Out,
    Unknown,
}

impl std::fmt::Display for Membership {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Membership::In => "In",
            Membership::Out => "Out",
            Membership::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub m: u32,
    #[serde(rename = "M")]
    pub big_m: u32,
    pub gap: u32,
    pub gamma1: u64,
    /// `gap - gamma1`, always in `{0, 1, 2}`.
    pub c: u32,
}

/// A multiplicity claim on a boundary partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Claim {
    Exactly(u64),
    AtLeast(u64),
}

fn check_prime(theta: &CharDescriptor) -> Result<()> {
    if theta.p < 5 {
        return Err(Error::UnsupportedPrime(theta.p));
    }
    Ok(())
}

fn is_p_power(p: u32, n: u32) -> bool {
    let mut x = 1u64;
    while x < n as u64 {
        x *= p as u64;
    }
    x == n as u64 && n > 1
}

/// `M(θ) = n - γ₀`, the largest normalized width in `Ω(θ)`.
pub fn capital_m(theta: &CharDescriptor) -> Result<u32> {
    check_prime(theta)?;
    Ok(theta.n - theta.stats().gamma(0) as u32)
}

fn component_punctured(t: &LabelledTree) -> bool {
    let st = tree_stats(t);
    st.value == 1 && st.eta >= 2 && people_meet_at_zero(t)
}

/// Value 1 with a punctured box as `Ω(θ)`: a single component of value 1
/// whose people pairwise meet at `0`, all other components trivial.
pub fn is_punctured(theta: &CharDescriptor) -> Result<bool> {
    check_prime(theta)?;
    let st = theta.stats();
    if st.value != 1 {
        return Err(Error::Descriptor(format!("puncturedness needs value 1, got {}", st.value)));
    }
    let values: Vec<(u32, &LabelledTree)> = theta.trees().map(|t| (tree_stats(t.tree()).value, t.tree())).collect();
    let ones: Vec<&LabelledTree> = values.iter().filter(|(v, _)| *v == 1).map(|(_, t)| *t).collect();
    Ok(ones.len() == 1 && values.iter().all(|(v, _)| *v <= 1) && component_punctured(ones[0]))
}

/// `m(θ)`, the largest `t` with `B_n(t) ⊆ Ω(θ)`.
pub fn little_m(theta: &CharDescriptor) -> Result<u32> {
    check_prime(theta)?;
    let st = theta.stats();
    let base = theta.n - (st.gamma(0) + st.gamma(1)) as u32;
    let adjust = match st.value {
        0 if is_p_power(theta.p, theta.n) => 2,
        1 if is_punctured(theta)? => 1,
        _ => 0,
    };
    Ok(base - adjust)
}

fn component_shape(p: u32, exponent: u32, tree: Option<&LabelledTree>) -> Result<OmegaDescription> {
    let q = p.pow(exponent);
    let Some(tree) = tree else {
        return Ok(OmegaDescription::ExactSet { set: S::full(1) });
    };
    let st = tree_stats(tree);
    let g0 = st.gamma(0) as u32;
    Ok(match st.value {
        0 => OmegaDescription::ExactSet { set: S::punctured_full(q)? },
        1 if component_punctured(tree) => OmegaDescription::ExactSet { set: S::punctured_box(q, q - g0)? },
        1 => OmegaDescription::ExactSet { set: S::boxed(q, q - g0) },
        _ if exponent == 2 => OmegaDescription::ExactLayered {
            n: q,
            inner: q - p - 1,
            boundary: q - p,
            tail: S::boxed(p, p - 1),
        },
        _ => OmegaDescription::Bounded {
            n: q,
            m: q - g0 - st.gamma(1) as u32,
            big_m: q - g0,
            no_thin_outside_inner: true,
        },
    })
}

/// The description of `Ω(θ)`.
pub fn omega_shape(theta: &CharDescriptor) -> Result<OmegaDescription> {
    check_prime(theta)?;
    let shapes = theta
        .components
        .iter()
        .map(|c| component_shape(theta.p, c.exponent, c.orbit.as_ref().map(|o| o.tree())))
        .collect::<Result<Vec<_>>>()?;
    if shapes.len() == 1 {
        return Ok(shapes.into_iter().next().unwrap());
    }
    let all_exact = shapes.iter().all(|s| matches!(s, OmegaDescription::ExactSet { .. }));
    if all_exact {
        let mut acc: Option<S> = None;
        for s in &shapes {
            let OmegaDescription::ExactSet { set } = s else { unreachable!() };
            acc = Some(match acc {
                None => set.clone(),
                Some(a) => star_symbolic(&a, set)?,
            });
        }
        return Ok(OmegaDescription::ExactSet { set: acc.unwrap() });
    }
    let (m, big_m) = shapes.iter().map(OmegaDescription::widths).fold((0, 0), |(a, b), (c, d)| (a + c, b + d));
    Ok(OmegaDescription::Bounded { n: theta.n, m, big_m, no_thin_outside_inner: true })
}

/// Decides `λ ∈ Ω(θ)` where the description allows it.
pub fn omega_member(theta: &CharDescriptor, lambda: &Partition) -> Result<Membership> {
    if lambda.size() != theta.n {
        return Err(Error::SizeMismatch { expected: theta.n, got: lambda.size() });
    }
    let yes = |b: bool| if b { Membership::In } else { Membership::Out };
    Ok(match omega_shape(theta)? {
        OmegaDescription::ExactSet { set } => yes(set.contains(lambda)?),
        OmegaDescription::ExactLayered { inner, boundary, tail, .. } => {
            let on_layer = |l: &Partition| l.first() == boundary && tail.contains(&l.tail()).unwrap_or(false);
            yes(lambda.fits_in_box(inner) || on_layer(lambda) || on_layer(&lambda.conjugate()))
        }
        OmegaDescription::Bounded { m, big_m, .. } => {
            let w = lambda.normalized_width()?;
            if w <= m {
                Membership::In
            } else if w > big_m || lambda.is_thin() {
                Membership::Out
            } else {
                Membership::Unknown
            }
        }
    })
}

/// A box contained in `Ω(θ)` for every `θ ∈ Irr(P_n)`.
pub fn omega_intersection_lower(p: u32, n: u32) -> Result<S> {
    if p < 5 {
        return Err(Error::UnsupportedPrime(p));
    }
    Ok(S::boxed(n, (p - 2) * n / p))
}

pub fn gap_report(theta: &CharDescriptor) -> Result<GapReport> {
    let m = little_m(theta)?;
    let big_m = capital_m(theta)?;
    let gamma1 = theta.stats().gamma(1);
    let gap = big_m - m;
    let c = gap - gamma1 as u32;
    debug_assert!(c <= 2);
    debug_assert!((gap as u64).saturating_sub(2) * (theta.p as u64).pow(2) <= theta.n as u64);
    Ok(GapReport { m, big_m, gap, gamma1, c })
}

/// Known boundary multiplicities for characters of `P_{p^k}`.
pub fn boundary_claims(theta: &CharDescriptor) -> Result<Vec<(Partition, Claim)>> {
    check_prime(theta)?;
    let n = theta.n;
    if !is_p_power(theta.p, n) {
        return Ok(Vec::new());
    }
    let st = theta.stats();
    let pair = |w: u32| -> Result<Vec<Partition>> {
        let two = Partition::two_row(n, w)?;
        let hook = Partition::hook(n, w)?;
        Ok(crate::partitions::closure([&two, &hook]).into_iter().collect())
    };
    Ok(match st.value {
        0 => pair(n)?.into_iter().map(|l| (l, Claim::Exactly(1))).collect(),
        1 => pair(capital_m(theta)?)?.into_iter().map(|l| (l, Claim::Exactly(1))).collect(),
        _ => pair(little_m(theta)?)?.into_iter().map(|l| (l, Claim::AtLeast(2))).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(s: &str, n: Option<u32>) -> CharDescriptor {
        CharDescriptor::parse(s, 5, n).unwrap()
    }

    #[test]
    fn rank_three_pairs() {
        let rows = [
            ("X(0;0;0)", 123, 125),
            ("X(0;0;1)", 124, 124),
            ("X(0;1;0)", 119, 120),
            ("X(1;0;0)", 99, 100),
            ("X(0;1;1)", 119, 120),
            ("X(1;0;1)", 99, 100),
            ("X(1;1;0)", 95, 100),
            ("X(1;1;1)", 95, 100),
        ];
        for (s, m, big) in rows {
            let t = th(s, None);
            assert_eq!((little_m(&t).unwrap(), capital_m(&t).unwrap()), (m, big), "{s}");
            let g = gap_report(&t).unwrap();
            assert!(g.c <= 2);
        }
    }

    #[test]
    fn shapes_at_25() {
        let s = |x: &str| omega_shape(&th(x, None)).unwrap();
        assert_eq!(s("X(0;0)"), OmegaDescription::ExactSet { set: S::punctured_full(25).unwrap() });
        assert_eq!(s("X(0;3)"), OmegaDescription::ExactSet { set: S::boxed(25, 24) });
        assert_eq!(s("X(2;0)"), OmegaDescription::ExactSet { set: S::punctured_box(25, 20).unwrap() });
        assert_eq!(s("(1|2|0|0|0;5)"), OmegaDescription::ExactSet { set: S::boxed(25, 23) });
        assert_eq!(s("(1|0|0|0|0;5)"), OmegaDescription::ExactSet { set: S::boxed(25, 24) });
        assert!(matches!(s("X(1;1)"), OmegaDescription::ExactLayered { inner: 19, boundary: 20, .. }));
        assert_eq!(little_m(&th("X(2;0)", None)).unwrap(), 19);
    }

    #[test]
    fn composite_shapes() {
        let t = th("X(1;1;0)", None);
        assert_eq!(
            omega_shape(&t).unwrap(),
            OmegaDescription::Bounded { n: 125, m: 95, big_m: 100, no_thin_outside_inner: true }
        );
        let t = th("0", Some(6));
        assert_eq!(omega_shape(&t).unwrap(), OmegaDescription::ExactSet { set: S::full(6) });
        let t = th("3*X(1;1)", None);
        assert_eq!(
            omega_shape(&t).unwrap(),
            OmegaDescription::Bounded { n: 30, m: 23, big_m: 24, no_thin_outside_inner: true }
        );
        let t = th("0*X(4;0)", Some(31));
        assert_eq!(omega_shape(&t).unwrap(), OmegaDescription::ExactSet { set: S::PuncturedBox { n: 31, t: 26 } });
        assert!(is_punctured(&t).unwrap());
        assert_eq!(little_m(&t).unwrap(), 25);
    }

    #[test]
    fn membership_by_thin_threshold() {
        let t = th("X(1;1;0)", None);
        let l = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(omega_member(&t, &l("[98,27]")).unwrap(), Membership::Out);
        assert_eq!(omega_member(&t, &l("[98,20,7]")).unwrap(), Membership::Unknown);
        assert_eq!(omega_member(&t, &l("[95,30]")).unwrap(), Membership::In);
        assert_eq!(omega_member(&t, &l("[101,24]")).unwrap(), Membership::Out);
    }

    #[test]
    fn small_primes_rejected() {
        let t = CharDescriptor::parse("X(1;0)", 3, None).unwrap();
        assert_eq!(capital_m(&t), Err(Error::UnsupportedPrime(3)));
        assert!(omega_intersection_lower(3, 9).is_err());
        assert_eq!(omega_intersection_lower(5, 25).unwrap(), S::boxed(25, 15));
    }
}
