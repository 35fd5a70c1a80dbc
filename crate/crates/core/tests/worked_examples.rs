use sylow_core::omega::{capital_m, is_punctured, little_m, omega_member, omega_shape, Membership, OmegaDescription};
use sylow_core::partitions::{enumerate, Partition, SymbolicPartitionSet as S};
use sylow_core::trees::CharDescriptor;

fn theta(s: &str) -> CharDescriptor {
    CharDescriptor::parse(s, 5, None).unwrap()
}

const ONE: &str = "(0|0|0|0|0;0)";

#[test]
fn rank_three_value_one_exact_box() {
    let t = theta(&format!("((0|0|0|0|0;1)|{ONE}|{ONE}|(2|2|2|2|2;0)|(0|0|1|0|3;5);5)"));
    let st = t.stats();
    assert_eq!((st.value, st.eta, st.gamma(0)), (1, 8, 8));
    assert_eq!(t.degree(), 25u32.into());
    assert!(!is_punctured(&t).unwrap());
    assert_eq!(omega_shape(&t).unwrap(), OmegaDescription::ExactSet { set: S::boxed(125, 117) });
    assert_eq!((little_m(&t).unwrap(), capital_m(&t).unwrap()), (117, 117));
}

#[test]
fn rank_three_value_one_punctured() {
    let t = theta(&format!("({ONE}|{ONE}|{ONE}|{ONE}|(3|3|3|3|3;0);5)"));
    let st = t.stats();
    assert_eq!((st.value, st.eta), (1, 5));
    assert!(is_punctured(&t).unwrap());
    assert_eq!(omega_shape(&t).unwrap(), OmegaDescription::ExactSet { set: S::punctured_box(125, 120).unwrap() });
    assert_eq!((little_m(&t).unwrap(), capital_m(&t).unwrap()), (119, 120));
}

#[test]
fn rank_three_value_two_bounds() {
    let t = theta(&format!("({ONE}|(1|1|1|1|1;2)|(3|3|3|3|3;0)|(2|0|0|0|0;5)|(1|1|1|1|1;1);5)"));
    let st = t.stats();
    assert_eq!((st.value, st.eta, st.gamma(0), st.gamma(1)), (2, 18, 16, 2));
    assert_eq!((little_m(&t).unwrap(), capital_m(&t).unwrap()), (107, 109));
    let at = |parts: Vec<u32>| omega_member(&t, &Partition::from_unsorted(parts)).unwrap();
    assert_eq!(at(vec![107, 18]), Membership::In);
    assert_eq!(at(vec![108, 17]), Membership::Out);
    assert_eq!(at(vec![108, 3, 3, 3, 2, 2, 2, 2]), Membership::Unknown);
    assert_eq!(at(vec![110, 15]), Membership::Out);
}

/// `Ω(θ) = B_125(inner) ⊔ closure{(boundary, μ) : μ ∈ tail}` exactly for
/// these two; the bounded description must never contradict it.
#[test]
fn membership_agrees_with_exact_layered_sets() {
    for (s, inner, boundary, tail) in [("X(0;1;1)", 119, 120, S::boxed(5, 4)), ("X(1;0;1)", 99, 100, S::boxed(25, 24))] {
        let t = theta(s);
        assert_eq!((little_m(&t).unwrap(), capital_m(&t).unwrap()), (inner, boundary));
        let on_layer = |x: &Partition| x.first() == boundary && tail.contains(&x.tail()).unwrap();
        let mut decided = 0;
        for w in (inner - 1)..=(boundary + 1) {
            for mu in enumerate(125 - w) {
                let Ok(l) = mu.with_first_row(w) else { continue };
                for lam in [l.conjugate(), l] {
                    let exact = lam.fits_in_box(inner) || on_layer(&lam) || on_layer(&lam.conjugate());
                    let got = omega_member(&t, &lam).unwrap();
                    let wrong = if exact { Membership::Out } else { Membership::In };
                    assert_ne!(got, wrong, "{s} {lam}");
                    decided += (got != Membership::Unknown) as usize;
                }
            }
        }
        assert!(decided > 0);
    }
}
