use dchain_bench::{alpha, even_structure, hankel_hermite, odd_structure, staircase};
use dchain_core::{
    build_even_chain, build_odd_chain, det_cofactor, det_poly_matrix, hermite_wronskian, int, verify_chain,
};

#[test]
fn fixtures_are_valid() {
    let m = hankel_hermite(4);
    assert_eq!(det_poly_matrix(&m), det_cofactor(&m));
    assert_eq!(hermite_wronskian(&staircase(3)).unwrap().poly.degree(), Some(3));
    let odd = build_odd_chain(&odd_structure(), None, &int(2)).unwrap();
    assert!(verify_chain(&odd).unwrap().passed());
    let (cs1, cs2) = even_structure();
    let even = build_even_chain(&cs1, &cs2, None, &alpha(), &int(2)).unwrap();
    assert!(verify_chain(&even).unwrap().passed());
}
