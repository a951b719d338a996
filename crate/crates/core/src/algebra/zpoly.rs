//! Dense integer polynomials used internally by the determinant and gcd kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct ZPoly(pub Vec<BigInt>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_default();
            let b = o.0.get(i).cloned().unwrap_or_default();
            out.push(a + b);
        }
        ZPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly(self.0.iter().map(|c| c * k).collect())
    }

    /// Multiplication by `z^n`.
    pub fn shift(&self, n: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); n];
        out.extend(self.0.iter().cloned());
        ZPoly(out)
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_default();
            let b = o.0.get(i).cloned().unwrap_or_default();
            out.push(a - b);
        }
        ZPoly::new(out)
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> ZPoly {
        ZPoly(self.0.iter().map(|c| c / k).collect())
    }

    /// Division known to be exact in Z[x].
    pub fn div_exact(&self, d: &ZPoly) -> ZPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut r = self.0.clone();
        let dl = d.lead();
        let dd = d.degree();
        let n = self.degree();
        assert!(n >= dd, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = &r[i + dd];
            if c.is_zero() {
                continue;
            }
            let (qc, rem) = c.div_rem(dl);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (j, dc) in d.0.iter().enumerate() {
                r[i + j] -= &qc * dc;
            }
            q[i] = qc;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        ZPoly::new(q)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) a mod d.
    pub fn prem(&self, d: &ZPoly) -> ZPoly {
        let mut r = self.0.clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return self.clone();
        }
        let dl = d.lead().clone();
        loop {
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
            if r.is_empty() || r.len() - 1 < dd {
                break;
            }
            let deg = r.len() - 1;
            let lc = r[deg].clone();
            for c in r.iter_mut() {
                *c *= &dl;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[deg - dd + j] -= &lc * dc;
            }
        }
        ZPoly::new(r)
    }

    /// Primitive gcd, leading coefficient positive.
    pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let mut a = a.primitive();
        let mut b = b.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                return ZPoly::one();
            }
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn exact_division() {
        let a = zp(&[-1, 0, 1]);
        let b = zp(&[1, 1]);
        assert_eq!(a.div_exact(&b), zp(&[-1, 1]));
    }

    #[test]
    fn gcd_of_products() {
        let g = zp(&[3, 2]);
        let a = g.mul(&zp(&[1, 0, 5]));
        let b = g.mul(&zp(&[7, -1]));
        assert_eq!(ZPoly::gcd(&a, &b), g);
        assert_eq!(ZPoly::gcd(&zp(&[2, 4]), &zp(&[3])), zp(&[1]));
    }
}
