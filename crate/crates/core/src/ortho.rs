//! Hermite and Laguerre polynomials and factorial coefficients.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, int, is_integer, parse_rational};
use crate::algebra::{Polynomial, Rational};
use crate::error::Error;

/// Non-integer rational parameter of the isotonic oscillator.
///
/// Negative integers are rejected as well, so that every shifted
/// parameter `alpha + i` stays off the integer lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct AlphaParam {
    value: Rational,
}

impl AlphaParam {
    pub fn new(value: Rational) -> Result<Self, Error> {
        if is_integer(&value) {
            return Err(Error::IntegerAlpha(format_rational(&value)));
        }
        Ok(AlphaParam { value })
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        Self::new(parse_rational(s)?)
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// `alpha + n`.
    pub fn shifted(&self, n: i64) -> AlphaParam {
        AlphaParam {
            value: &self.value + int(n),
        }
    }
}

impl TryFrom<String> for AlphaParam {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        Self::parse(&s)
    }
}

impl From<AlphaParam> for String {
    fn from(a: AlphaParam) -> String {
        format_rational(&a.value)
    }
}

/// Physicists' Hermite polynomial `H_n`.
pub fn hermite(n: usize) -> Polynomial {
    let two_z = Polynomial::from_ints(&[0, 2]);
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_z.clone();
    for k in 1..n {
        let next = &(&two_z * &cur) - &prev.scale(&int(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_n` with `H_n = 0` for negative `n`.
pub fn hermite_signed(n: i64) -> Polynomial {
    if n < 0 {
        Polynomial::zero()
    } else {
        hermite(n as usize)
    }
}

/// Generalized Laguerre polynomial `L_n^a`.
pub fn laguerre(n: usize, a: &Rational) -> Polynomial {
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::new(vec![a + Rational::one(), int(-1)]);
    for k in 2..=n {
        let kk = int(k as i64);
        let lin = Polynomial::new(vec![int(2 * k as i64 - 1) + a, int(-1)]);
        let next = &(&lin * &cur) - &prev.scale(&(int(k as i64 - 1) + a));
        prev = cur;
        cur = next.scale(&(Rational::one() / kk));
    }
    cur
}

/// `L_n^a` with `L_n^a = 0` for negative `n`.
pub fn laguerre_signed(n: i64, a: &Rational) -> Polynomial {
    if n < 0 {
        Polynomial::zero()
    } else {
        laguerre(n as usize, a)
    }
}

/// `x (x - 1) ... (x - i + 1)`.
pub fn falling_factorial(x: &Rational, i: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..i {
        acc *= x - int(j as i64);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `x (x + 1) ... (x + i - 1)`.
pub fn rising_factorial(x: &Rational, i: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..i {
        acc *= x + int(j as i64);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite(0), Polynomial::one());
        assert_eq!(hermite(2), Polynomial::from_ints(&[-2, 0, 4]));
        assert_eq!(hermite(3), Polynomial::from_ints(&[0, -12, 0, 8]));
        assert!(hermite_signed(-1).is_zero());
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, &rat(5, 7)), Polynomial::one());
        assert_eq!(laguerre(1, &rat(1, 2)), Polynomial::new(vec![rat(3, 2), int(-1)]));
        assert_eq!(
            laguerre(2, &int(0)),
            Polynomial::new(vec![int(1), int(-2), rat(1, 2)])
        );
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(falling_factorial(&int(3), 2), int(6));
        assert_eq!(falling_factorial(&rat(7, 3), 0), int(1));
        assert_eq!(falling_factorial(&int(2), 3), int(0));
        assert_eq!(rising_factorial(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(rising_factorial(&rat(-9, 4), 0), int(1));
        assert_eq!(rising_factorial(&int(-1), 3), int(0));
    }

    #[test]
    fn alpha_rejects_integers() {
        assert!(AlphaParam::new(int(2)).is_err());
        assert!(AlphaParam::new(int(-3)).is_err());
        assert!(AlphaParam::new(int(0)).is_err());
        assert!(AlphaParam::parse("1/3").is_ok());
        assert_eq!(AlphaParam::parse("1/3").unwrap().shifted(2).value(), &rat(7, 3));
    }
}
