use dchain_core::algebra::rational::{int, rat};
use dchain_core::ortho::{hermite, laguerre};
use dchain_core::wronskian::{parity_split, parity_split_constant, wronskian_of};
use dchain_core::{
    check_translation_equivalence_h, check_translation_equivalence_l, hermite_wronskian,
    laguerre_pseudo_wronskian, AlphaParam, MayaDiagram, UniversalCharacter,
};
use proptest::prelude::*;

fn diagram(max: i64, len: usize) -> impl Strategy<Value = MayaDiagram> {
    prop::collection::btree_set(1i64..=max, 0..=len)
        .prop_map(|s| MayaDiagram::new(s.into_iter().collect()).unwrap())
}

fn alpha() -> impl Strategy<Value = AlphaParam> {
    (-30i64..=30, 2i64..=7)
        .prop_filter_map("non-integer", |(p, q)| AlphaParam::new(rat(p, q)).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Derivatives of Hermite polynomials carry `2^i`, so the true Wronskian
    /// equals `2^{m(m-1)/2}` times the normalized determinant.
    #[test]
    fn hermite_matches_true_wronskian(d in diagram(9, 5)) {
        let fs: Vec<_> = d.entries().iter().map(|&n| hermite(n as usize)).collect();
        let m = d.len() as i32;
        let w = wronskian_of(&fs).unwrap();
        let h = hermite_wronskian(&d).unwrap().poly;
        prop_assert_eq!(w, h.scale(&int(2).pow(m * (m - 1) / 2)));
    }

    #[test]
    fn hermite_degree(d in diagram(9, 5)) {
        let h = hermite_wronskian(&d).unwrap().poly;
        let sum: i64 = d.entries().iter().sum();
        let m = d.len() as i64;
        prop_assert_eq!(h.degree(), Some((sum - m * (m - 1) / 2) as usize));
    }

    #[test]
    fn laguerre_without_shadow_is_true_wronskian(d in diagram(7, 4), a in alpha()) {
        let fs: Vec<_> = d.entries().iter().map(|&n| laguerre(n as usize, a.value())).collect();
        let uc = UniversalCharacter::new(d.clone(), MayaDiagram::empty());
        prop_assert_eq!(wronskian_of(&fs).unwrap(), laguerre_pseudo_wronskian(&uc, &a).unwrap().poly);
    }

    #[test]
    fn hermite_translation(d in diagram(7, 4), k in 1usize..=3) {
        let c = check_translation_equivalence_h(&d, k).unwrap();
        prop_assert!(c != int(0));
    }

    #[test]
    fn laguerre_translation(n in diagram(4, 2), l in diagram(4, 2), k1 in 0usize..=2, k2 in 0usize..=2, a in alpha()) {
        let uc = UniversalCharacter::new(n, l);
        let p = check_translation_equivalence_l(&uc, k1, k2, &a).unwrap();
        let r = uc.second.len();
        prop_assert_eq!(p.z_power, 2 * r * k2 + k2 * k2.saturating_sub(1));
        prop_assert_eq!(p.alpha_shift, k1 as i64 - k2 as i64);
    }

    #[test]
    fn parity_split_proportional(d in diagram(9, 5)) {
        let (uc, e) = parity_split(&d);
        let h = hermite_wronskian(&d).unwrap().poly;
        let l = laguerre_pseudo_wronskian(&uc, &AlphaParam::new(rat(1, 2)).unwrap()).unwrap().poly;
        prop_assert!(parity_split_constant(&h, &l, e).is_some());
    }
}

#[test]
fn umemura_staircase_is_monomial() {
    for m in 1..=5i64 {
        let d = MayaDiagram::new((1..=m).map(|i| 2 * i - 1).collect()).unwrap();
        let h = hermite_wronskian(&d).unwrap().poly;
        let deg = (m * (m + 1) / 2) as usize;
        assert_eq!(h.degree(), Some(deg));
        assert_eq!(h.valuation(), Some(deg));
    }
}

#[test]
fn parity_split_negative_gauge() {
    let d = MayaDiagram::new(vec![1, 2, 4]).unwrap();
    let (uc, e) = parity_split(&d);
    assert_eq!(uc.first.entries(), &[0]);
    assert_eq!(uc.second.entries(), &[1, 2]);
    assert_eq!(e, -4);
}

#[test]
fn pseudo_wronskian_json_shape() {
    let a = AlphaParam::new(rat(1, 2)).unwrap();
    let uc = UniversalCharacter::new(MayaDiagram::new(vec![1]).unwrap(), MayaDiagram::empty());
    let w = laguerre_pseudo_wronskian(&uc, &a).unwrap();
    let v: serde_json::Value = serde_json::to_value(&w).unwrap();
    assert_eq!(v["z_power"], "1/2");
    assert_eq!(v["exp_coeff"], "-1/2");
    assert_eq!(v["alpha"], "1/2");
    assert_eq!(v["poly"], serde_json::json!(["3/2", "-1/1"]));
}
