use std::cmp::Ordering;

use continuants::continuant::{trivially_equal, unit_extraction_normal_form};
use continuants::reflect::{
    a_prime_value, a_value, apply_reflection, classify, lemma13_tail_condition, majorizes, transitive_maximize,
    transitive_minimize, MajorizationVerdict, ReflectionKind, ReflectionSpec,
};
use continuants::{continuant, Sequence};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn s(v: &[u64]) -> Sequence {
    Sequence::new(v.to_vec()).unwrap()
}

fn k(v: &[u64]) -> BigUint {
    continuant(&s(v))
}

/// Every sequence of length `len` over `1..=max`, in lexicographic order.
fn all_of_len(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=max).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

fn all_up_to(len: usize, max: u64) -> Vec<Vec<u64>> {
    (0..=len).flat_map(|l| all_of_len(l, max)).collect()
}

fn specs(len: usize) -> Vec<ReflectionSpec> {
    ReflectionSpec::all_for(len).collect()
}

#[test]
fn classifier_agrees_with_direct_comparison() {
    for a in all_up_to(6, 4) {
        let seq = s(&a);
        let before = continuant(&seq);
        for spec in specs(a.len()) {
            let after = continuant(&apply_reflection(&seq, spec).unwrap());
            let c = classify(&seq, spec).unwrap();
            assert_eq!(c.sign, after.cmp(&before), "{a:?} {spec:?}");
            let expected = match after.cmp(&before) {
                Ordering::Greater => c.kind == ReflectionKind::Increasing,
                Ordering::Less => c.kind == ReflectionKind::Decreasing,
                Ordering::Equal => matches!(c.kind, ReflectionKind::Trivial | ReflectionKind::Neutral),
            };
            assert!(expected, "{a:?} {spec:?} {c:?}");
        }
    }
}

/// An equality-preserving reflection is explained by symmetry and unit
/// extraction alone.
#[test]
fn equal_reflections_are_trivial() {
    let mut equal = 0;
    for a in all_up_to(6, 4) {
        let seq = s(&a);
        for spec in specs(a.len()) {
            let reflected = apply_reflection(&seq, spec).unwrap();
            if continuant(&reflected) == continuant(&seq) {
                equal += 1;
                assert!(trivially_equal(&seq, &reflected).unwrap(), "{a:?} {spec:?}");
                assert_eq!(classify(&seq, spec).unwrap().kind, ReflectionKind::Trivial);
            }
        }
    }
    assert!(equal > 0);
}

#[test]
fn a_prime_shares_sign_when_ends_differ() {
    for a in all_up_to(6, 4) {
        let seq = s(&a);
        for spec in specs(a.len()) {
            let v = &a[spec.lo - 1..spec.hi];
            if v[0] != v[v.len() - 1] {
                let sa = a_value(&seq, spec).unwrap();
                let sp = a_prime_value(&seq, spec).unwrap();
                assert_eq!(sa.cmp(&BigRational::zero()), sp.cmp(&BigRational::zero()), "{a:?} {spec:?}");
            }
        }
    }
}

fn permutations(elems: &[u64]) -> Vec<Vec<u64>> {
    let mut v = elems.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
    out
}

#[test]
fn transitive_paths_are_monotone_and_extremal() {
    let multisets = all_up_to(6, 4).into_iter().filter(|a| !a.is_empty() && a.windows(2).all(|w| w[0] <= w[1]));
    for ms in multisets {
        let perms = permutations(&ms);
        let t = ms.len();
        let bound = t * (t - 1) / 2;
        let values: Vec<BigUint> = perms.iter().map(|p| k(p)).collect();
        let min = values.iter().min().unwrap();
        let max_v = perms.iter().filter(|p| p[0] == ms[0]).map(|p| k(p)).max().unwrap();
        for p in &perms {
            let down = transitive_minimize(&s(p)).unwrap();
            assert_eq!(&down.value, min, "{p:?}");
            assert!(down.steps.len() <= bound);
            assert!(down.steps.iter().all(|st| st.after <= st.before));
            if p[0] == ms[0] {
                let up = transitive_maximize(&s(p)).unwrap();
                assert_eq!(up.value, max_v, "{p:?}");
                assert!(up.steps.len() <= bound);
                assert!(up.steps.iter().all(|st| st.after >= st.before));
                assert_eq!(up.result.as_slice(), ms.as_slice());
            }
        }
    }
}

#[test]
fn maximize_rejects_interior_minimum() {
    assert!(transitive_maximize(&s(&[2, 1, 3])).is_err());
    let t = transitive_maximize(&s(&[3, 2, 1])).unwrap();
    assert!(t.reversed);
    assert_eq!(t.result, s(&[1, 2, 3]));
}

proptest! {
    #[test]
    fn majorization_orders_values(
        x in prop::collection::vec(1u64..=4, 0..=6),
        y in prop::collection::vec(1u64..=4, 0..=6),
        z in prop::collection::vec(1u64..=4, 0..=4),
    ) {
        let verdict = majorizes(&s(&x), &s(&y), z.len());
        let lx = k(&[x.clone(), z.clone()].concat());
        let ly = k(&[y.clone(), z.clone()].concat());
        match verdict {
            MajorizationVerdict::StrictlyMajorized => prop_assert!(ly < lx),
            MajorizationVerdict::Majorized => prop_assert!(ly <= lx),
            MajorizationVerdict::NotMajorized => {}
        }
    }
}

/// `⟨x_1..x_{i−1}, 1, z⟩ ≥ ⟨x_1..x_{i−1}+1, z⟩` for `i ≥ 2`. The gap is
/// `(⟨x_1..x_{i−1}⟩ − ⟨x_1..x_{i−2}⟩)·⟨z_2..z_j⟩`, so it is strict exactly
/// when the tail is nonempty and the head is not the single element 1.
#[test]
fn appended_unit_versus_bumped_last() {
    for head in all_up_to(4, 4).into_iter().filter(|h| !h.is_empty()) {
        for tail in all_up_to(3, 4) {
            let mut left = head.clone();
            left.push(1);
            left.extend_from_slice(&tail);
            let mut right = head.clone();
            *right.last_mut().unwrap() += 1;
            right.extend_from_slice(&tail);
            let (l, r) = (k(&left), k(&right));
            assert!(l >= r);
            let strict = !tail.is_empty() && head != [1];
            assert_eq!(l > r, strict, "{head:?} {tail:?}");
        }
    }
}

/// Under `j·z_1 > 1`, strict head inequality and
/// `⟨y_1..y_k+1⟩ ≤ ⟨x_1..x_i+1⟩`, the value comparison is strict.
#[test]
fn bumped_heads_give_strict_order() {
    let heads: Vec<Vec<u64>> = all_up_to(3, 3).into_iter().filter(|h| !h.is_empty()).collect();
    let tails: Vec<Vec<u64>> = all_up_to(3, 3).into_iter().filter(|z| !z.is_empty()).collect();
    let bump = |h: &[u64]| {
        let mut v = h.to_vec();
        *v.last_mut().unwrap() += 1;
        k(&v)
    };
    let mut hits = 0;
    for x in &heads {
        for y in &heads {
            if !(k(y) < k(x) && bump(y) <= bump(x)) {
                continue;
            }
            for z in &tails {
                if z.len() as u64 * z[0] <= 1 {
                    continue;
                }
                hits += 1;
                assert!(k(&[y.clone(), z.clone()].concat()) < k(&[x.clone(), z.clone()].concat()), "{x:?} {y:?} {z:?}");
            }
        }
    }
    assert!(hits > 100);
}

/// The prefix condition is necessary and sufficient for `⟨z, x⟩ > ⟨z, y⟩`.
#[test]
fn prefix_tail_condition_is_exact() {
    let heads: Vec<Vec<u64>> = all_up_to(3, 3);
    let prefixes: Vec<Vec<u64>> = all_up_to(3, 3).into_iter().filter(|z| !z.is_empty()).collect();
    let mut checked = 0;
    for x in &heads {
        for y in &heads {
            if k(x) <= k(y) {
                assert!(lemma13_tail_condition(&s(x), &s(y), &s(&[1])).is_err());
                continue;
            }
            for z in &prefixes {
                let cond = lemma13_tail_condition(&s(x), &s(y), &s(z)).unwrap();
                let holds = k(&[z.clone(), x.clone()].concat()) > k(&[z.clone(), y.clone()].concat());
                assert_eq!(cond, holds, "{x:?} {y:?} {z:?}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
    assert!(lemma13_tail_condition(&s(&[2]), &s(&[1]), &s(&[])).is_err());
}

#[test]
fn prefix_condition_examples() {
    // Threshold (⟨1⟩ − ⟨∅⟩)/(5 − 2) = 0 < [1] = 1; ⟨1,5⟩ = 6 > ⟨1,1,1⟩ = 3.
    assert!(lemma13_tail_condition(&s(&[5]), &s(&[1, 1]), &s(&[1])).unwrap());
    assert!(k(&[1, 5]) > k(&[1, 1, 1]));
    // x = (2,2,2), y = (1,2,1,2) against prefix (1,2): threshold
    // (⟨2,1,2⟩ − ⟨2,2⟩)/(⟨2,2,2⟩ − ⟨1,2,1,2⟩) = 3 exceeds [2;1] = 3 only weakly.
    assert!(!lemma13_tail_condition(&s(&[2, 2, 2]), &s(&[1, 2, 1, 2]), &s(&[1, 2])).unwrap());
    assert_eq!(k(&[1, 2, 2, 2, 2]), k(&[1, 2, 1, 2, 1, 2]));
}

/// `⟨a, b^p, c⟩ ≤ ⟨a−1, b^p, c+1⟩` for `a ≥ c+1`, strict for `a > c+1`; with a
/// tail satisfying `j·z_1 > 1` the strict form survives.
#[test]
fn unit_shift_between_ends() {
    for a in 1..=5u64 {
        for b in 1..=5u64 {
            for c in 1..=5u64 {
                if a < c + 1 {
                    continue;
                }
                for p in 0..=4usize {
                    let mid = vec![b; p];
                    let lhs = [vec![a], mid.clone(), vec![c]].concat();
                    let rhs = [vec![a - 1], mid.clone(), vec![c + 1]].concat();
                    if a - 1 == 0 {
                        continue;
                    }
                    assert!(k(&lhs) <= k(&rhs));
                    assert_eq!(k(&lhs) < k(&rhs), a > c + 1, "{a} {b} {c} {p}");
                    if a >= c + 2 {
                        for z in all_up_to(3, 3).into_iter().filter(|z| z.len() as u64 * z.first().unwrap_or(&0) > 1) {
                            let l = k(&[lhs.clone(), z.clone()].concat());
                            let r = k(&[rhs.clone(), z.clone()].concat());
                            assert!(l < r, "{a} {b} {c} {p} {z:?}");
                        }
                    }
                }
            }
        }
    }
}

/// `[0; h^r, g] ≤ 1/h` for `0 < h < g ≤ +∞`, equality only at `r = 1`,
/// `g = +∞`. An infinite last term truncates the fraction.
#[test]
fn tail_fraction_bound() {
    let frac = |terms: &[u64]| -> BigRational {
        let mut acc = BigRational::zero();
        for &t in terms.iter().rev() {
            acc = (BigRational::from_integer(t.into()) + acc).recip();
        }
        acc
    };
    for h in 1..=6u64 {
        let bound = BigRational::new(1.into(), h.into());
        for r in 0..=5usize {
            let reps = vec![h; r];
            for g in h + 1..=6 {
                let v = frac(&[reps.clone(), vec![g]].concat());
                assert!(v < bound, "h={h} r={r} g={g}");
                let lib = continuants::cf_value(&s(&[reps.clone(), vec![g]].concat()), 0);
                assert_eq!(lib.into_finite().unwrap(), v);
            }
            let v = frac(&reps);
            assert!(v <= bound);
            assert_eq!(v == bound, r == 1, "h={h} r={r}");
        }
    }
    assert_eq!(frac(&[1]), BigRational::one());
}

#[test]
fn normal_form_examples() {
    assert_eq!(unit_extraction_normal_form(&s(&[5])).unwrap(), s(&[1, 3, 1]));
    assert_eq!(
        unit_extraction_normal_form(&s(&[2, 2])).unwrap(),
        unit_extraction_normal_form(&s(&[1, 1, 2])).unwrap()
    );
}
