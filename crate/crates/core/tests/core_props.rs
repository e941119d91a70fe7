use continuants::continuant::{continuant_pair, pair_is_coprime, trivial_orbit, trivially_equal};
use continuants::{cf_value, continuant, split_identity_check, unit_extraction_normal_form, ExtRational, Sequence};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn seqs(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=10, 0..=max_len)
}

/// Textbook continuant by expansion along the first element, independent of
/// the library's pair recurrence.
fn naive(a: &[u64]) -> BigUint {
    match a.len() {
        0 => BigUint::from(1u32),
        1 => BigUint::from(a[0]),
        _ => a[0] * naive(&a[1..]) + naive(&a[2..]),
    }
}

fn s(v: &[u64]) -> Sequence {
    Sequence::new(v.to_vec()).unwrap()
}

proptest! {
    #[test]
    fn recurrence(a in seqs(12).prop_filter("t ≥ 2", |v| v.len() >= 2)) {
        let t = a.len();
        let lhs = continuant(&s(&a));
        let rhs = a[t - 1] * continuant(&s(&a[..t - 1])) + continuant(&s(&a[..t - 2]));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, naive(&a));
    }

    #[test]
    fn symmetry(a in seqs(12)) {
        let seq = s(&a);
        prop_assert_eq!(continuant(&seq), continuant(&seq.reversed()));
    }

    #[test]
    fn unit_extraction(a in seqs(11).prop_filter("nonempty", |v| !v.is_empty())) {
        let mut bumped = a.clone();
        bumped[0] += 1;
        let mut split = vec![1, a[0]];
        split.extend_from_slice(&a[1..]);
        prop_assert_eq!(continuant(&s(&bumped)), continuant(&s(&split)));
        prop_assert!(trivially_equal(&s(&bumped), &s(&split)).unwrap());
    }

    #[test]
    fn split_identity(a in seqs(12)) {
        let whole = continuant(&s(&a));
        for cut in 0..=a.len() {
            prop_assert_eq!(&split_identity_check(&s(&a[..cut]), &s(&a[cut..])), &whole);
        }
    }

    #[test]
    fn coprime_pairs(a in seqs(12).prop_filter("nonempty", |v| !v.is_empty())) {
        let p = continuant_pair(&s(&a));
        prop_assert!(pair_is_coprime(&p));
        prop_assert!(p.full >= p.truncated && p.truncated >= BigUint::from(1u32));
    }

    #[test]
    fn cf_identity(a in seqs(12), a0 in 0u64..=10) {
        let mut with_lead = vec![a0];
        with_lead.extend_from_slice(&a);
        // ⟨a0, a⟩ by expansion, allowing a0 = 0.
        let num = if a.is_empty() { BigUint::from(a0) } else { a0 * naive(&a) + naive(&a[1..]) };
        let expected = BigRational::new(BigInt::from(num), BigInt::from(naive(&a)));
        prop_assert_eq!(cf_value(&s(&a), a0), ExtRational::Finite(expected));
    }

    #[test]
    fn orbit_preserves_value(a in prop::collection::vec(1u64..=6, 1..=8)) {
        let seq = s(&a);
        let v = continuant(&seq);
        let orbit = trivial_orbit(&seq).unwrap();
        prop_assert!(orbit.iter().all(|o| continuant(o) == v));
        let nf = unit_extraction_normal_form(&seq).unwrap();
        prop_assert_eq!(&nf, &orbit[0]);
        prop_assert_eq!(unit_extraction_normal_form(&seq.reversed()).unwrap(), nf);
    }
}

#[test]
fn worked_examples() {
    assert_eq!(continuant(&s(&[2, 4, 5, 1, 1])), BigUint::from(103u32));
    assert_eq!(continuant(&s(&[2, 5, 4, 1, 1])), BigUint::from(103u32));
    assert_eq!(continuant(&s(&[1, 1, 1, 1, 1])), BigUint::from(8u32));
    assert!(trivially_equal(&s(&[2, 4, 5, 1, 1]), &s(&[1, 1, 4, 5, 1, 1])).unwrap());
    assert!(Sequence::new(vec![2, 0]).is_err());
}

/// Top-left entry of the product of `[[a, 1], [1, 0]]` matrices.
fn matrix(a: &[u64]) -> BigUint {
    let one = BigUint::from(1u32);
    let zero = BigUint::from(0u32);
    let mut m = [[one.clone(), zero.clone()], [zero, one]];
    for &x in a {
        m = [
            [&m[0][0] * x + &m[0][1], m[0][0].clone()],
            [&m[1][0] * x + &m[1][1], m[1][0].clone()],
        ];
    }
    m[0][0].clone()
}

#[test]
fn big_values_stay_exact() {
    let a: Vec<u64> = (0..60).map(|i| 1_000_000_007u64 + i).collect();
    assert_eq!(continuant(&s(&a)), matrix(&a));
    assert_eq!(matrix(&[2, 4, 5, 1, 1]), BigUint::from(103u32));
}
