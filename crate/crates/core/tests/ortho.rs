use dchain_core::algebra::rational::{int, rat};
use dchain_core::ortho::{hermite, laguerre};
use dchain_core::{Polynomial, Rational};
use proptest::prelude::*;

fn factorial(n: i64) -> Rational {
    (1..=n).fold(int(1), |a, i| a * int(i))
}

/// Generalized binomial `C(x, j)` for rational `x`.
fn binom(x: &Rational, j: i64) -> Rational {
    (0..j).fold(int(1), |a, i| a * (x - int(i))) / factorial(j)
}

/// `H_n(z) = n! Σ_m (-1)^m (2z)^{n-2m} / (m! (n-2m)!)`.
fn hermite_explicit(n: i64) -> Polynomial {
    let mut c = vec![int(0); n as usize + 1];
    for m in 0..=n / 2 {
        let sign = if m % 2 == 0 { int(1) } else { int(-1) };
        c[(n - 2 * m) as usize] = sign * factorial(n) * int(2).pow((n - 2 * m) as i32)
            / (factorial(m) * factorial(n - 2 * m));
    }
    Polynomial::new(c)
}

/// `L_n^a(z) = Σ_i (-1)^i C(n+a, n-i) z^i / i!`.
fn laguerre_explicit(n: i64, a: &Rational) -> Polynomial {
    let top = a + int(n);
    Polynomial::new(
        (0..=n)
            .map(|i| {
                let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                sign * binom(&top, n - i) / factorial(i)
            })
            .collect(),
    )
}

#[test]
fn hermite_matches_explicit_sum() {
    for n in 0..=15 {
        assert_eq!(hermite(n as usize), hermite_explicit(n), "H_{n}");
    }
}

#[test]
fn hermite_ode_and_derivative() {
    let z = Polynomial::z();
    for n in 1..=12usize {
        let h = hermite(n);
        let ode = &(&h.derivative().derivative() - &(&z * &h.derivative()).scale(&int(2)))
            + &h.scale(&int(2 * n as i64));
        assert!(ode.is_zero());
        assert_eq!(h.derivative(), hermite(n - 1).scale(&int(2 * n as i64)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laguerre_matches_explicit_sum(n in 0i64..=10, p in -20i64..=20, q in 1i64..=7) {
        let a = rat(p, q);
        prop_assert_eq!(laguerre(n as usize, &a), laguerre_explicit(n, &a));
    }

    #[test]
    fn laguerre_ode(n in 0usize..=10, p in -20i64..=20, q in 1i64..=7) {
        let a = rat(p, q);
        let l = laguerre(n, &a);
        let z = Polynomial::z();
        let lin = Polynomial::new(vec![&a + int(1), int(-1)]);
        let ode = &(&(&z * &l.derivative().derivative()) + &(&lin * &l.derivative()))
            + &l.scale(&int(n as i64));
        prop_assert!(ode.is_zero());
    }

    #[test]
    fn laguerre_derivative_rule(n in 1usize..=10, p in -20i64..=20, q in 1i64..=7) {
        let a = rat(p, q);
        prop_assert_eq!(laguerre(n, &a).derivative(), -laguerre(n - 1, &(&a + int(1))));
    }
}
