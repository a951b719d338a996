use dchain_core::algebra::rational::{int, rat};
use dchain_core::painleve::okamoto_coincides_with_gh;
use dchain_core::{
    build_even_chain, build_odd_chain, hermite_wronskian, latex, log_derivative_ratio, piv_families,
    piv_from_chain, piv_residual, pv_from_chain, pv_residual, AlphaParam, CyclicStructure, Error,
    MayaDiagram, PainleveReport, Polynomial, RationalFunction,
};

fn gh_diagram(l: i64, m: i64) -> MayaDiagram {
    MayaDiagram::new((l..l + m).collect()).unwrap()
}

#[test]
fn gh_y0_is_the_log_derivative() {
    for l in 1..=3i64 {
        for m in 1..=3i64 {
            let cs = CyclicStructure::gh(vec![(l as usize, m as usize)]).unwrap();
            let fam = piv_families(&cs).unwrap();
            let y0 = fam.iter().find(|f| f.first_flip == 0).unwrap();
            assert_eq!(y0.instance.c_sq, int(1));
            let top = hermite_wronskian(&gh_diagram(l, m)).unwrap().poly;
            let bottom = hermite_wronskian(&gh_diagram(l - 1, m)).unwrap().poly;
            assert_eq!(y0.instance.u, log_derivative_ratio(&top, &bottom).unwrap(), "({l},{m})");
        }
    }
}

#[test]
fn gh_families_are_rotations() {
    let cs = CyclicStructure::gh(vec![(2, 1)]).unwrap();
    let fam = piv_families(&cs).unwrap();
    let firsts: Vec<i64> = fam.iter().map(|f| f.first_flip).collect();
    assert_eq!(firsts, vec![2, 3, 0]);
    for f in &fam {
        assert!(piv_residual(&f.instance).unwrap().is_zero());
    }
}

#[test]
fn perturbed_piv_parameter_fails() {
    let cs = CyclicStructure::okamoto(vec![1, 1]).unwrap();
    for f in piv_families(&cs).unwrap() {
        let mut bad = f.instance.clone();
        bad.a += int(1);
        assert!(!piv_residual(&bad).unwrap().is_zero());
    }
}

#[test]
fn okamoto_coincidence_flag() {
    assert!(okamoto_coincides_with_gh(&CyclicStructure::okamoto(vec![1, 0]).unwrap()));
    assert!(!okamoto_coincides_with_gh(&CyclicStructure::okamoto(vec![0, 0]).unwrap()));
    assert!(!okamoto_coincides_with_gh(&CyclicStructure::okamoto(vec![2, 2]).unwrap()));
}

#[test]
fn piv_requires_period_three() {
    let sol = build_odd_chain(&CyclicStructure::trivial(), None, &int(2)).unwrap();
    assert_eq!(piv_from_chain(&sol), Err(Error::WrongPeriod { expected: 3, got: 1 }));
    let five = CyclicStructure::gh(vec![(1, 1), (3, 1)]).unwrap();
    assert!(matches!(piv_families(&five), Err(Error::WrongPeriod { .. })));
}

#[test]
fn piv_zero_u_rejected() {
    let cs = CyclicStructure::gh(vec![(1, 1)]).unwrap();
    let mut inst = piv_families(&cs).unwrap().remove(0).instance;
    inst.u = RationalFunction::zero();
    assert_eq!(piv_residual(&inst), Err(Error::ZeroDenominator));
}

#[test]
fn pv_two_two() {
    let a = AlphaParam::new(rat(2, 5)).unwrap();
    let s = CyclicStructure::okamoto(vec![0]).unwrap();
    let sol = build_even_chain(&s, &s, None, &a, &int(2)).unwrap();
    let inst = pv_from_chain(&sol).unwrap();
    assert!(pv_residual(&inst).unwrap().is_zero());
    assert_eq!(inst.a, rat(1, 8));
    assert_eq!(inst.b, rat(-1, 8));
    assert_eq!(inst.d, int(-2));
    assert_eq!(inst.c, int(2) * (rat(2, 5) + int(1)));
    let mut bad = inst.clone();
    bad.d += int(1);
    assert!(!pv_residual(&bad).unwrap().is_zero());
}

#[test]
fn pv_constant_y_rejected() {
    let a = AlphaParam::new(rat(1, 3)).unwrap();
    let s = CyclicStructure::okamoto(vec![0]).unwrap();
    let sol = build_even_chain(&s, &s, None, &a, &int(2)).unwrap();
    let mut inst = pv_from_chain(&sol).unwrap();
    inst.y = RationalFunction::one();
    assert_eq!(pv_residual(&inst), Err(Error::ZeroDenominator));
}

#[test]
fn reports_and_latex() {
    let cs = CyclicStructure::okamoto(vec![1, 1]).unwrap();
    let fam = piv_families(&cs).unwrap();
    let r = PainleveReport::from_piv(&fam[0].instance).unwrap();
    assert!(r.residual_zero);
    assert_eq!(r.params["c_sq"], "1/3");
    let v = serde_json::to_value(&r).unwrap();
    for key in ["equation", "params", "solution_num", "solution_den", "variable", "residual_zero"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let tex = latex::piv(&fam[0].instance);
    assert!(tex.contains("\\frac{1}{\\sqrt{3}}"));

    let a = AlphaParam::new(rat(1, 3)).unwrap();
    let gh = CyclicStructure::gh(vec![(1, 1)]).unwrap();
    let sol = build_even_chain(&gh, &CyclicStructure::trivial(), None, &a, &int(2)).unwrap();
    let inst = pv_from_chain(&sol).unwrap();
    let r = PainleveReport::from_pv(&inst).unwrap();
    assert_eq!(r.equation, "PV");
    assert_eq!(r.variable, "t");
    assert!(r.residual_zero);
    assert_eq!(
        RationalFunction::new(r.solution_num.clone(), r.solution_den.clone()).unwrap(),
        inst.y
    );
    assert!(latex::pv(&inst).starts_with("y(t) = "));
    assert_eq!(latex::polynomial(&Polynomial::from_ints(&[1, 0, 1]), "t"), "t^{2} + 1");
}
