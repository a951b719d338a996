//! Rational Painlevé IV and V solutions from chains of period 3 and 4.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{int, rat, serde_str};
use crate::algebra::{Polynomial, Rational, RationalFunction};
use crate::chain::{build_odd_chain, chain_parameters, ChainSolution, VariableMap};
use crate::error::Error;
use crate::maya::{build_diagram, minimal_flip_chain, CyclicStructure};

/// `u(x) = w_1(x) - Δx/2` with `y(t) = c u(x)`, `t = x/c`, `c^2 = 2/Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PIVInstance {
    pub u: RationalFunction,
    #[serde(with = "serde_str")]
    pub c_sq: Rational,
    #[serde(with = "serde_str")]
    pub a: Rational,
    #[serde(with = "serde_str")]
    pub b: Rational,
}

/// Rational PV solution `y(t)`, `t = x^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PVInstance {
    pub y: RationalFunction,
    #[serde(with = "serde_str")]
    pub a: Rational,
    #[serde(with = "serde_str")]
    pub b: Rational,
    #[serde(with = "serde_str")]
    pub c: Rational,
    #[serde(with = "serde_str")]
    pub d: Rational,
}

fn x_poly(c: Rational) -> RationalFunction {
    RationalFunction::from_poly(Polynomial::monomial(c, 1))
}

/// PIV data of a period-3 chain: `a = -(Δ + ε_23 + 2ε_12)/Δ`, `b = -2ε_23^2/Δ^2`.
pub fn piv_from_chain(sol: &ChainSolution) -> Result<PIVInstance, Error> {
    if sol.period != 3 || sol.variable() != VariableMap::Linear {
        return Err(Error::WrongPeriod { expected: 3, got: sol.period });
    }
    let w1 = sol.terms[0].reduced()?;
    let delta = &sol.delta;
    let u = &w1 - &x_poly(delta / int(2));
    let (_, eps) = chain_parameters(sol);
    let a = -(delta + &eps[1] + &eps[0] * int(2)) / delta;
    let b = -(&eps[1] * &eps[1]) * int(2) / (delta * delta);
    Ok(PIVInstance {
        u,
        c_sq: int(2) / delta,
        a,
        b,
    })
}

/// Residual of PIV for `y(t) = c u(c t)` after multiplying through by `1/(c^3)`:
///
/// `u'' - [u'^2/(2u) + (3/2)u^3 + (4/c^2) x u^2 + (2/c^2)(x^2/c^2 - a) u + b/(c^4 u)]`.
///
/// Only `c^2` enters, so the residual is a rational function of `x`.
pub fn piv_residual(inst: &PIVInstance) -> Result<RationalFunction, Error> {
    let u = &inst.u;
    if u.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let s = Rational::one() / &inst.c_sq;
    let u1 = u.derivative();
    let u2 = u1.derivative();
    let inv_u = u.recip()?;
    let u_sq = u * u;
    let t1 = (&(&u1 * &u1) * &inv_u).scale(&rat(1, 2));
    let t2 = (&u_sq * u).scale(&rat(3, 2));
    let t3 = &x_poly(&s * int(4)) * &u_sq;
    let quad = RationalFunction::from_poly(Polynomial::new(vec![
        -(&inst.a) * &s * int(2),
        Rational::zero(),
        &s * &s * int(2),
    ]));
    let t4 = &quad * u;
    let t5 = inv_u.scale(&(&inst.b * &s * &s));
    let rhs = &(&(&t1 + &t2) + &(&t3 + &t4)) + &t5;
    Ok(&u2 - &rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PIVFamilyMember {
    pub first_flip: i64,
    pub order: Vec<i64>,
    pub instance: PIVInstance,
}

/// The three rotations of the default chain of a 3-cyclic structure, one per
/// choice of first flip.
pub fn piv_families(cs: &CyclicStructure) -> Result<Vec<PIVFamilyMember>, Error> {
    if cs.period() != 3 {
        return Err(Error::WrongPeriod { expected: 3, got: cs.period() });
    }
    if cs.is_degenerate() {
        return Err(Error::DegenerateStructure);
    }
    (0..3)
        .map(|i| {
            let perm = [i, (i + 1) % 3, (i + 2) % 3];
            let sol = build_odd_chain(cs, Some(&perm), &int(2))?;
            Ok(PIVFamilyMember {
                first_flip: sol.chain_labels.flips[0].level,
                order: sol.chain_labels.flips.iter().map(|f| f.level).collect(),
                instance: piv_from_chain(&sol)?,
            })
        })
        .collect()
}

/// Whether a 3-Okamoto diagram is also 3-cyclic under unit translation.
pub fn okamoto_coincides_with_gh(cs: &CyclicStructure) -> bool {
    cs.k() == 3 && minimal_flip_chain(&build_diagram(cs).0, 1).len() == 3
}

/// PV data of a period-4 chain: `y = 1 - Δz/(2v)` where `w_1 + w_2 = v(z)/x`.
pub fn pv_from_chain(sol: &ChainSolution) -> Result<PVInstance, Error> {
    if sol.period != 4 || sol.variable() != VariableMap::Square {
        return Err(Error::WrongPeriod { expected: 4, got: sol.period });
    }
    let v = &sol.terms[0].reduced()? + &sol.terms[1].reduced()?;
    if v.is_zero() {
        return Err(Error::DegenerateDenominator("w_1 + w_2 vanishes identically".into()));
    }
    let delta = &sol.delta;
    let q = x_poly(delta / int(2)).checked_div(&v)?;
    let y = &RationalFunction::one() - &q;
    if y.is_zero() {
        return Err(Error::DegenerateDenominator("y vanishes identically".into()));
    }
    let (_, eps) = chain_parameters(sol);
    let d2 = delta * delta;
    Ok(PVInstance {
        y,
        a: &eps[0] * &eps[0] / (&d2 * int(2)),
        b: -(&eps[2] * &eps[2]) / (&d2 * int(2)),
        c: (delta - &eps[3] + &eps[1]) / int(4),
        d: -d2 / int(32),
    })
}

/// PV residual multiplied by `t^2 y (y - 1)`.
pub fn pv_residual(inst: &PVInstance) -> Result<RationalFunction, Error> {
    let y = &inst.y;
    let one = RationalFunction::one();
    let ym1 = y - &one;
    if y.is_zero() || ym1.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let t = x_poly(Rational::one());
    let t2 = &t * &t;
    let y1 = y.derivative();
    let y2 = y1.derivative();
    let yy = y * y;
    let lhs = &(&(&t2 * y) * &ym1) * &y2;
    let k1 = &ym1.scale(&rat(1, 2)) + y;
    let r1 = &(&t2 * &k1) * &(&y1 * &y1);
    let r2 = &(&(&t * y) * &ym1) * &y1;
    let cube = &(&ym1 * &ym1) * &ym1;
    let r3 = &cube * &(&yy.scale(&inst.a) + &RationalFunction::constant(inst.b.clone()));
    let r4 = (&(&t * &yy) * &ym1).scale(&inst.c);
    let r5 = (&(&t2 * &yy) * &(y + &one)).scale(&inst.d);
    let rhs = &(&(&r1 - &r2) + &r3) + &(&r4 + &r5);
    Ok(&lhs - &rhs)
}

/// Machine-readable Painlevé result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PainleveReport {
    pub equation: String,
    pub params: BTreeMap<String, String>,
    pub solution_num: Polynomial,
    pub solution_den: Polynomial,
    pub variable: String,
    pub residual_zero: bool,
}

impl PainleveReport {
    /// The rational part `u(x)`; `y(t) = c u(c t)` with `c^2` in the params.
    pub fn from_piv(inst: &PIVInstance) -> Result<Self, Error> {
        use crate::algebra::format_rational;
        let residual_zero = piv_residual(inst)?.is_zero();
        let mut params = BTreeMap::new();
        params.insert("a".into(), format_rational(&inst.a));
        params.insert("b".into(), format_rational(&inst.b));
        params.insert("c_sq".into(), format_rational(&inst.c_sq));
        let variable = if inst.c_sq.is_one() { "t" } else { "x" };
        Ok(PainleveReport {
            equation: "PIV".into(),
            params,
            solution_num: inst.u.num().clone(),
            solution_den: inst.u.den().clone(),
            variable: variable.into(),
            residual_zero,
        })
    }

    pub fn from_pv(inst: &PVInstance) -> Result<Self, Error> {
        use crate::algebra::format_rational;
        let residual_zero = pv_residual(inst)?.is_zero();
        let mut params = BTreeMap::new();
        for (k, v) in [("a", &inst.a), ("b", &inst.b), ("c", &inst.c), ("d", &inst.d)] {
            params.insert(k.into(), format_rational(v));
        }
        Ok(PainleveReport {
            equation: "PV".into(),
            params,
            solution_num: inst.y.num().clone(),
            solution_den: inst.y.den().clone(),
            variable: "t".into(),
            residual_zero,
        })
    }
}
