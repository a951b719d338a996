use num_bigint::BigInt;
use num_traits::One;

use super::poly::Polynomial;
use super::rational::{lcm, Rational};
use super::zpoly::ZPoly;
use crate::error::Error;

/// Square matrix of polynomials, row-major, size at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Polynomial>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix);
        }
        Ok(PolyMatrix { n, rows })
    }

    /// Builds from a generator `f(row, col)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Result<Self, Error> {
        Self::new((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }
}

/// Exact determinant by fraction-free elimination.
///
/// Each row is scaled to integer coefficients, Bareiss elimination runs in
/// Z[z] with exact division by the previous pivot, and a zero pivot is
/// replaced by a row swap (the determinant is zero when the whole column
/// below the pivot vanishes).
pub fn det_poly_matrix(m: &PolyMatrix) -> Polynomial {
    let n = m.n;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<ZPoly>> = Vec::with_capacity(n);
    for row in &m.rows {
        let mut d = BigInt::one();
        for e in row {
            for c in e.coeffs() {
                d = lcm(&d, c.denom());
            }
        }
        scale *= &d;
        a.push(
            row.iter()
                .map(|e| {
                    ZPoly::new(
                        e.coeffs()
                            .iter()
                            .map(|c| c.numer() * (&d / c.denom()))
                            .collect(),
                    )
                })
                .collect(),
        );
    }
    let mut sign = false;
    let mut prev = ZPoly::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let mut d = Polynomial::from_zpoly(&a[n - 1][n - 1]);
    if sign {
        d = -d;
    }
    d.scale(&(Rational::one() / Rational::from_integer(scale)))
}

/// Laplace expansion along the first row; exponential, kept as an oracle.
pub fn det_cofactor(m: &PolyMatrix) -> Polynomial {
    fn rec(rows: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
        if cols.len() == 1 {
            return rows[0][cols[0]].clone();
        }
        let mut acc = Polynomial::zero();
        for (idx, &c) in cols.iter().enumerate() {
            let e = &rows[0][c];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = rec(&rows[1..], &rest);
            let t = e * &minor;
            acc = if idx % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }
    let cols: Vec<usize> = (0..m.n).collect();
    rec(&m.rows, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn examples() {
        let one = PolyMatrix::new(vec![vec![p(&[1])]]).unwrap();
        assert_eq!(det_poly_matrix(&one), p(&[1]));

        let m = PolyMatrix::new(vec![vec![p(&[0, 2]), p(&[-2, 0, 4])], vec![p(&[1]), p(&[0, 4])]]).unwrap();
        assert_eq!(det_poly_matrix(&m), p(&[2, 0, 4]));

        let t = PolyMatrix::new(vec![
            vec![p(&[1]), p(&[0, 1]), p(&[0, 0, 1])],
            vec![p(&[]), p(&[1]), p(&[0, 2])],
            vec![p(&[]), p(&[]), p(&[2])],
        ])
        .unwrap();
        assert_eq!(det_poly_matrix(&t), p(&[2]));
    }

    #[test]
    fn zero_pivot_swaps() {
        let m = PolyMatrix::new(vec![vec![p(&[]), p(&[1])], vec![p(&[0, 1]), p(&[3])]]).unwrap();
        assert_eq!(det_poly_matrix(&m), p(&[0, -1]));
        let s = PolyMatrix::new(vec![vec![p(&[]), p(&[1])], vec![p(&[]), p(&[3])]]).unwrap();
        assert!(det_poly_matrix(&s).is_zero());
    }

    #[test]
    fn rejects_empty_and_ragged() {
        assert!(PolyMatrix::new(vec![]).is_err());
        assert!(PolyMatrix::new(vec![vec![p(&[1]), p(&[1])]]).is_err());
    }
}
