//! Hermite Wronskians and Laguerre pseudo-Wronskians with gauge bookkeeping.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{int, rat, serde_opt_str, serde_str};
use crate::algebra::{det_poly_matrix, PolyMatrix, Polynomial, Rational};
use crate::error::Error;
use crate::maya::{MayaDiagram, UniversalCharacter};
use crate::ortho::{falling_factorial, hermite_signed, laguerre_signed, AlphaParam};

/// Prefactor `z^A e^{B z}` of the analytic Wronskian, in the variable
/// whose square enters the Gaussian (`z = x^2` for the isotonic case).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeExponents {
    #[serde(with = "serde_str")]
    pub z_power: Rational,
    #[serde(with = "serde_str")]
    pub exp_coeff: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoWronskian {
    pub poly: Polynomial,
    #[serde(flatten)]
    pub gauge: GaugeExponents,
    pub m: usize,
    pub r: usize,
    #[serde(with = "serde_opt_str")]
    pub alpha: Option<Rational>,
}

fn check_non_negative(d: &MayaDiagram) -> Result<(), Error> {
    match d.entries().iter().find(|&&e| e < 0) {
        Some(&e) => Err(Error::NegativeIndex(e)),
        None => Ok(()),
    }
}

/// `det[(n_j)_i H_{n_j - i}(z)]`, rows `i`, columns `j`.
pub fn hermite_wronskian(d: &MayaDiagram) -> Result<PseudoWronskian, Error> {
    check_non_negative(d)?;
    let m = d.len();
    let gauge = GaugeExponents {
        z_power: Rational::zero(),
        exp_coeff: rat(-(m as i64), 2),
    };
    let poly = if m == 0 {
        Polynomial::one()
    } else {
        let n = d.entries();
        let mat = PolyMatrix::from_fn(m, |i, j| {
            hermite_signed(n[j] - i as i64).scale(&falling_factorial(&int(n[j]), i))
        })?;
        det_poly_matrix(&mat)
    };
    Ok(PseudoWronskian {
        poly,
        gauge,
        m,
        r: 0,
        alpha: None,
    })
}

/// `A = (m-r)^2/4 - r(r-1) + α(m-r)/2`.
pub fn laguerre_gauge(m: usize, r: usize, alpha: &Rational) -> GaugeExponents {
    let d = int(m as i64 - r as i64);
    let r = int(r as i64);
    let z_power = &d * &d / int(4) - &r * (&r - int(1)) + alpha * &d / int(2);
    GaugeExponents {
        z_power,
        exp_coeff: -(int(m as i64) + r) / int(2),
    }
}

/// Pseudo-Wronskian with columns `(-1)^i L_{n-i}^{α+i}` for `n ∈ N` and
/// `(l-α)_i z^{M-1-i} L_l^{-α-i}` for `l ∈ L`, `M = m + r`.
pub fn laguerre_pseudo_wronskian(uc: &UniversalCharacter, alpha: &AlphaParam) -> Result<PseudoWronskian, Error> {
    check_non_negative(&uc.first)?;
    check_non_negative(&uc.second)?;
    let a = alpha.value();
    let (m, r) = (uc.first.len(), uc.second.len());
    let size = m + r;
    let gauge = laguerre_gauge(m, r, a);
    let poly = if size == 0 {
        Polynomial::one()
    } else {
        let ns = uc.first.entries();
        let ls = uc.second.entries();
        let mat = PolyMatrix::from_fn(size, |i, j| {
            let ii = i as i64;
            if j < m {
                let p = laguerre_signed(ns[j] - ii, &(a + int(ii)));
                if i % 2 == 1 {
                    -p
                } else {
                    p
                }
            } else {
                let l = ls[j - m];
                let c = falling_factorial(&(int(l) - a), i);
                laguerre_signed(l, &(-a - int(ii)))
                    .scale(&c)
                    .shift(size - 1 - i)
            }
        })?;
        det_poly_matrix(&mat)
    };
    Ok(PseudoWronskian {
        poly,
        gauge,
        m,
        r,
        alpha: Some(a.clone()),
    })
}

/// Ratio `𝓗^{(d ⊕ k)} / 𝓗^{(d)}`, which must be a nonzero constant.
pub fn check_translation_equivalence_h(d: &MayaDiagram, k: usize) -> Result<Rational, Error> {
    if !d.is_canonical() {
        return Err(Error::NotProportional(format!("{d} is not canonical")));
    }
    let lhs = hermite_wronskian(&d.translate(k))?.poly;
    let rhs = hermite_wronskian(d)?.poly;
    lhs.proportionality(&rhs)
        .ok_or_else(|| Error::NotProportional(format!("H^({d}+{k}) vs H^({d})")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LProportionality {
    pub z_power: usize,
    pub alpha_shift: i64,
    #[serde(with = "serde_str")]
    pub constant: Rational,
}

/// Checks `𝓛^{(N⊕k1)⊗(L⊕k2)}(z;α) = C z^{2rk2 + k2(k2-1)} 𝓛^{N⊗L}(z;α+k1-k2)`.
pub fn check_translation_equivalence_l(
    uc: &UniversalCharacter,
    k1: usize,
    k2: usize,
    alpha: &AlphaParam,
) -> Result<LProportionality, Error> {
    if !uc.first.is_canonical() || !uc.second.is_canonical() {
        return Err(Error::NotProportional(format!("{uc} is not canonical")));
    }
    let r = uc.second.len();
    let z_power = 2 * r * k2 + k2 * k2.saturating_sub(1);
    let alpha_shift = k1 as i64 - k2 as i64;
    let lhs = laguerre_pseudo_wronskian(&uc.translate(k1, k2), alpha)?.poly;
    let rhs = laguerre_pseudo_wronskian(uc, &alpha.shifted(alpha_shift))?
        .poly
        .shift(z_power);
    let constant = lhs
        .proportionality(&rhs)
        .ok_or_else(|| Error::NotProportional(format!("L^({uc} + ({k1},{k2}))")))?;
    Ok(LProportionality {
        z_power,
        alpha_shift,
        constant,
    })
}

/// True Wronskian of `f_1..f_n` by formal differentiation.
pub fn wronskian_of(fs: &[Polynomial]) -> Result<Polynomial, Error> {
    let n = fs.len();
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut rows = vec![fs.to_vec()];
    for i in 1..n {
        let next = rows[i - 1].iter().map(Polynomial::derivative).collect();
        rows.push(next);
    }
    Ok(det_poly_matrix(&PolyMatrix::new(rows)?))
}

/// Constant `C` with `h(x) x^{max(0,-e)} = C x^{max(0,e)} l(x^2)`, if any.
pub fn parity_split_constant(h: &Polynomial, l: &Polynomial, exponent: i64) -> Option<Rational> {
    let lhs = h.shift(exponent.min(0).unsigned_abs() as usize);
    let rhs = l.compose_square().shift(exponent.max(0) as usize);
    lhs.proportionality(&rhs)
}

/// Splits `N` by parity: odd `2a+1` gives `a` in the first slot, even `2b` gives `b`
/// in the second, and returns the gauge exponent `2A` at `α = 1/2`.
pub fn parity_split(d: &MayaDiagram) -> (UniversalCharacter, i64) {
    let a: Vec<i64> = d.entries().iter().filter(|e| *e % 2 != 0).map(|e| (e - 1) / 2).collect();
    let b: Vec<i64> = d.entries().iter().filter(|e| *e % 2 == 0).map(|e| e / 2).collect();
    let (m, r) = (a.len(), b.len());
    let g = laguerre_gauge(m, r, &rat(1, 2));
    let two_a = &g.z_power * int(2);
    debug_assert!(two_a.is_integer());
    let uc = UniversalCharacter::new(MayaDiagram::new(a).unwrap(), MayaDiagram::new(b).unwrap());
    (uc, two_a.to_integer().try_into().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[i64]) -> MayaDiagram {
        MayaDiagram::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_wronskian(&md(&[1])).unwrap().poly, Polynomial::from_ints(&[0, 2]));
        assert_eq!(
            hermite_wronskian(&md(&[1, 2])).unwrap().poly,
            Polynomial::from_ints(&[2, 0, 4])
        );
        assert_eq!(hermite_wronskian(&md(&[])).unwrap().poly, Polynomial::one());
        assert_eq!(hermite_wronskian(&md(&[-1, 2])), Err(Error::NegativeIndex(-1)));
    }

    #[test]
    fn laguerre_examples() {
        let a = AlphaParam::new(rat(1, 2)).unwrap();
        let w = laguerre_pseudo_wronskian(&UniversalCharacter::new(md(&[1]), md(&[])), &a).unwrap();
        assert_eq!(w.poly, Polynomial::new(vec![rat(3, 2), int(-1)]));
        assert_eq!(w.gauge.z_power, rat(1, 2));
        assert_eq!(w.gauge.exp_coeff, rat(-1, 2));
        let w = laguerre_pseudo_wronskian(&UniversalCharacter::new(md(&[]), md(&[0])), &a).unwrap();
        assert_eq!(w.poly, Polynomial::one());
        let w = laguerre_pseudo_wronskian(&UniversalCharacter::new(md(&[1]), md(&[1])), &a).unwrap();
        assert_eq!(w.poly, Polynomial::new(vec![rat(-3, 8), int(0), rat(-1, 2)]));
    }

    #[test]
    fn translation_h_examples() {
        assert!(check_translation_equivalence_h(&md(&[1]), 1).is_ok());
        assert!(check_translation_equivalence_h(&md(&[]), 2).is_ok());
        assert!(check_translation_equivalence_h(&md(&[1, 3]), 1).is_ok());
    }

    #[test]
    fn translation_l_examples() {
        let a = AlphaParam::new(rat(1, 3)).unwrap();
        let e = UniversalCharacter::default();
        assert_eq!(check_translation_equivalence_l(&e, 1, 1, &a).unwrap().z_power, 0);
        let p = check_translation_equivalence_l(&UniversalCharacter::new(md(&[1]), md(&[])), 1, 0, &a).unwrap();
        assert_eq!((p.z_power, p.alpha_shift), (0, 1));
        let p = check_translation_equivalence_l(&UniversalCharacter::new(md(&[]), md(&[1])), 0, 1, &a).unwrap();
        assert_eq!((p.z_power, p.alpha_shift), (2, -1));
    }
}
