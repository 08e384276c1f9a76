//! Cross-module integration checks on whole codes.

use qtwoblock_core::{
    central_intersection_bound, classify, css_distance_exact, CodeClass, CodeSpec, CssSide,
    Distance, FiniteGroup, GroupAlgebraElement, PrimeField, TwoBlockCode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;

fn f2() -> PrimeField {
    PrimeField::binary()
}

fn golden_code() -> TwoBlockCode {
    let g = FiniteGroup::alternating4();
    let a = GroupAlgebraElement::from_terms(&g, f2(), "1, x, y, x^-1*y*x").unwrap();
    let b = GroupAlgebraElement::from_terms(&g, f2(), "1, x, y, y*x").unwrap();
    TwoBlockCode::from_group_algebra(&a, &b).unwrap()
}

/// Computed truth for the tetrahedral-group pair, cross-checked against an
/// independent all-vectors sweep at low weight: the exhaustive distances are
/// d_Z = 2 (a weight-2 logical exists because (1+y) annihilates b from the
/// left) and d_X = 3.
#[test]
fn golden_pair_exhaustive_distances() {
    let code = golden_code();
    assert_eq!((code.n(), code.k()), (24, 5));
    let dz = css_distance_exact(code.css(), CssSide::Z, 1 << 24).unwrap();
    let dx = css_distance_exact(code.css(), CssSide::X, 1 << 24).unwrap();
    assert_eq!(dz.value, Distance::Finite(2));
    assert_eq!(dx.value, Distance::Finite(3));
    // the weight-2 witness sits entirely in the right block and is a left
    // annihilator of b
    let w = dz.witness.unwrap();
    let support = w.support();
    assert_eq!(support.len(), 2);
    assert!(support.iter().all(|&i| i >= 12), "witness in the B block: {support:?}");
    let pair = code.group_algebra_pair().unwrap();
    let u = GroupAlgebraElement::from_support(
        pair.group.clone(),
        f2(),
        &support.iter().map(|&i| i - 12).collect::<Vec<_>>(),
    );
    assert!(u.product(&pair.b).unwrap().is_zero());
}

/// Swapping the operands permutes the qubit halves, so every parameter is
/// preserved; the scan relies on this for its (a,b) <-> (b,a) dedup.
#[test]
fn block_swap_preserves_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let groups = [
        FiniteGroup::cyclic(5).unwrap(),
        FiniteGroup::dihedral(3).unwrap(),
        FiniteGroup::alternating4(),
    ];
    for group in &groups {
        for p in [2u64, 3] {
            let field = PrimeField::new(p).unwrap();
            for _ in 0..8 {
                let coeffs = |rng: &mut ChaCha8Rng| {
                    (0..group.order()).map(|_| rng.gen_range(0..p as i64)).collect::<Vec<_>>()
                };
                let a = GroupAlgebraElement::from_coeffs(group.clone(), field, coeffs(&mut rng));
                let b = GroupAlgebraElement::from_coeffs(group.clone(), field, coeffs(&mut rng));
                let ab = TwoBlockCode::from_group_algebra(&a, &b).unwrap();
                let ba = TwoBlockCode::from_group_algebra(&b, &a).unwrap();
                assert_eq!((ab.n(), ab.k()), (ba.n(), ba.k()));
                if ab.k() > 0 && group.order() <= 6 {
                    let d = |c: &TwoBlockCode, s| {
                        css_distance_exact(c.css(), s, 1 << 22).unwrap().value
                    };
                    assert_eq!(d(&ab, CssSide::Z), d(&ba, CssSide::Z));
                    assert_eq!(d(&ab, CssSide::X), d(&ba, CssSide::X));
                }
            }
        }
    }
}

#[test]
fn classification_evidence_is_swap_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    let groups = [FiniteGroup::dihedral(4).unwrap(), FiniteGroup::alternating4()];
    for group in &groups {
        for p in [2u64, 5] {
            let field = PrimeField::new(p).unwrap();
            for _ in 0..10 {
                let coeffs = |rng: &mut ChaCha8Rng| {
                    (0..group.order()).map(|_| rng.gen_range(0..p as i64)).collect::<Vec<_>>()
                };
                let a = GroupAlgebraElement::from_coeffs(group.clone(), field, coeffs(&mut rng));
                let b = GroupAlgebraElement::from_coeffs(group.clone(), field, coeffs(&mut rng));
                let ca = classify(&TwoBlockCode::from_group_algebra(&a, &b).unwrap()).unwrap();
                let cb = classify(&TwoBlockCode::from_group_algebra(&b, &a).unwrap()).unwrap();
                assert_eq!(ca.evidence.group_abelian, cb.evidence.group_abelian);
                assert_eq!(ca.evidence.group_semisimple, cb.evidence.group_semisimple);
                assert_eq!(
                    ca.evidence.support_a_cyclic || ca.evidence.support_b_cyclic,
                    cb.evidence.support_a_cyclic || cb.evidence.support_b_cyclic
                );
                assert_eq!(
                    ca.evidence.support_a_semisimple || ca.evidence.support_b_semisimple,
                    cb.evidence.support_a_semisimple || cb.evidence.support_b_semisimple
                );
                assert_eq!(ca.label, cb.label);
            }
        }
    }
}

/// With trivial intersection the bound degenerates to d0 itself, which the
/// equivalence with the hypergraph product makes exact on this instance.
#[test]
fn klein_bound_with_trivial_intersection() {
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let klein = c2.direct_product(&c2).unwrap();
    let a = GroupAlgebraElement::from_terms(&klein, f2(), "1, x").unwrap();
    let b = GroupAlgebraElement::from_terms(&klein, f2(), "1, y").unwrap();
    let code = TwoBlockCode::from_group_algebra(&a, &b).unwrap();
    let rep = central_intersection_bound(&code, 1 << 20).unwrap();
    assert_eq!(rep.c, 1);
    assert!(rep.central && rep.gcd_ok);
    assert_eq!(rep.bound, Some(rep.d0));
    assert_eq!(rep.d0, Distance::Finite(2));
    let dz = css_distance_exact(code.css(), CssSide::Z, 1 << 20).unwrap();
    assert_eq!(dz.value, Distance::Finite(2), "bound is exact at c = 1 here");
}

#[test]
fn spec_text_full_pipeline() {
    let text = "\
[field] p = 2
[group] kind = product cyclic 2, cyclic 3
[a] terms = 1, x
[b] terms = 1, y
";
    let spec = CodeSpec::parse(text).unwrap();
    let code = spec.build(Path::new(".")).unwrap();
    assert_eq!((code.n(), code.k()), (12, 2));
    let c = classify(&code).unwrap();
    assert_eq!(c.label, CodeClass::Abelian);
    let dz = css_distance_exact(code.css(), CssSide::Z, 1 << 20).unwrap();
    assert_eq!(dz.value, Distance::Finite(2));
}
