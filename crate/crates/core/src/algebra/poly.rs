use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, int, lcm, parse_rational, Rational};
use super::zpoly::ZPoly;

/// Dense univariate polynomial over the rationals, ascending coefficients.
///
/// The zero polynomial has an empty coefficient list; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut v = vec![Rational::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by `z^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); n];
        v.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: v }
    }

    /// Divides by `z^n`; the low coefficients must vanish.
    pub fn unshift(&self, n: usize) -> Option<Self> {
        if self.coeffs.iter().take(n).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(n).cloned().collect()))
    }

    /// `p(z^2)`.
    pub fn compose_square(&self) -> Self {
        let mut v = vec![Rational::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = c.clone();
        }
        Self::new(v)
    }

    /// `p(c z)`.
    pub fn compose_scale(&self, c: &Rational) -> Self {
        let mut f = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a * &f);
            f *= c;
        }
        Self::new(v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let dl = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        (Self::new(q), Self::new(r))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (a, _) = self.to_zpoly();
        let (b, _) = other.to_zpoly();
        Self::from_zpoly(&ZPoly::gcd(&a, &b)).monic()
    }

    /// Integer polynomial `z` and positive `d` with `self = z / d`.
    pub(crate) fn to_zpoly(&self) -> (ZPoly, BigInt) {
        let mut d = BigInt::one();
        for c in &self.coeffs {
            d = lcm(&d, c.denom());
        }
        let z = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&d / c.denom()))
            .collect();
        (ZPoly::new(z), d)
    }

    pub(crate) fn from_zpoly(z: &ZPoly) -> Self {
        Self::new(z.0.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Exact ratio `self / other` when the two are proportional.
    pub fn proportionality(&self, other: &Polynomial) -> Option<Rational> {
        if self.is_zero() || other.is_zero() || self.degree() != other.degree() {
            return None;
        }
        let k = self.leading().unwrap() / other.leading().unwrap();
        (other.scale(&k) == *self).then_some(k)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(v: &[S]) -> Result<Self, crate::Error> {
        Ok(Self::new(
            v.iter()
                .map(|s| parse_rational(s.as_ref()))
                .collect::<Result<_, _>>()?,
        ))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}z", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}z^{}", if show_coeff { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        Polynomial::from_strings(&v).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut v = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Polynomial::new(v)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self + &(-o)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        if self.coeffs.len() > 8 && o.coeffs.len() > 8 {
            let (a, da) = self.to_zpoly();
            let (b, db) = o.to_zpoly();
            let d = Rational::from_integer(da * db);
            return Polynomial::new(
                a.mul(&b)
                    .0
                    .into_iter()
                    .map(|c| Rational::from_integer(c) / &d)
                    .collect(),
            );
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: &Polynomial) -> Polynomial {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Horner evaluation of `p` at `x0`.
pub fn eval_at(p: &Polynomial, x0: &Rational) -> Rational {
    p.eval(x0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn eval_examples() {
        let h2 = Polynomial::from_ints(&[-2, 0, 4]);
        assert_eq!(eval_at(&h2, &int(1)), int(2));
        assert_eq!(eval_at(&Polynomial::zero(), &rat(3, 7)), int(0));
        let cube = Polynomial::monomial(int(1), 3);
        assert_eq!(eval_at(&cube, &rat(-2, 3)), rat(-8, 27));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::from_ints(&[0, 0]).degree(), None);
        assert_eq!(Polynomial::from_ints(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn division() {
        let a = Polynomial::from_ints(&[-1, 0, 1]);
        let b = Polynomial::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Polynomial::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let (q, r) = Polynomial::from_ints(&[1, 0, 1]).div_rem(&Polynomial::from_ints(&[0, 2]));
        assert_eq!(q, Polynomial::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, Polynomial::from_ints(&[1]));
    }

    #[test]
    fn gcd_is_monic() {
        let g = Polynomial::new(vec![rat(1, 2), int(3)]);
        let a = &g * &Polynomial::from_ints(&[5, 0, 1]);
        let b = &g * &Polynomial::from_ints(&[1, 7]);
        assert_eq!(a.gcd(&b), g.monic());
    }

    #[test]
    fn large_product_matches_schoolbook() {
        let a = Polynomial::new((0..12).map(|i| rat(i - 5, i + 1)).collect());
        let b = Polynomial::new((0..10).map(|i| rat(2 * i + 1, 3)).collect());
        let mut v = vec![Rational::zero(); 21];
        for i in 0..12 {
            for j in 0..10 {
                v[i + j] += a.coeff(i) * b.coeff(j);
            }
        }
        assert_eq!(&a * &b, Polynomial::new(v));
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[-2, 0, 4]).to_string(), "4*z^2 - 2");
        assert_eq!(Polynomial::from_ints(&[0, -1]).to_string(), "-z");
    }

    #[test]
    fn serde_is_ascending_strings() {
        let p = Polynomial::from_ints(&[-2, 0, 4]);
        assert_eq!(p.to_strings(), vec!["-2/1", "0/1", "4/1"]);
    }
}
