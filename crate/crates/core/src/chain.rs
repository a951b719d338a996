//! Dressing-chain solutions from Wronskian ladders and their exact verification.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, int, lcm, rat, serde_opt_str, serde_str, serde_vec_str};
use crate::algebra::zpoly::ZPoly;
use crate::algebra::{log_derivative_ratio, Polynomial, Rational, RationalFunction};
use crate::error::Error;
use crate::maya::{
    build_diagram, flip_chain_of, uc_flip_chain, CyclicStructure, Sign, Slot, SlotFlip, SlotFlipChain,
    UniversalCharacter,
};
use crate::ortho::AlphaParam;
use crate::wronskian::{hermite_wronskian, laguerre_pseudo_wronskian, PseudoWronskian};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VariableMap {
    #[serde(rename = "z=x")]
    Linear,
    #[serde(rename = "z=x^2")]
    Square,
}

/// `w(x) = lin x + inv/x + (dz/dx) d/dz log(prev/next)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WTerm {
    #[serde(with = "serde_str")]
    pub lin: Rational,
    #[serde(with = "serde_str")]
    pub inv: Rational,
    pub prev: Polynomial,
    pub next: Polynomial,
    pub variable: VariableMap,
}

impl WTerm {
    /// `w(x)` for `z = x`, and `v(z) = x w(x)` for `z = x^2`.
    pub fn reduced(&self) -> Result<RationalFunction, Error> {
        let ld = log_derivative_ratio(&self.prev, &self.next)?;
        Ok(match self.variable {
            VariableMap::Linear => {
                let lin = RationalFunction::from_poly(Polynomial::monomial(self.lin.clone(), 1));
                let inv = RationalFunction::inverse_power(self.inv.clone(), 1);
                &(&lin + &inv) + &ld
            }
            VariableMap::Square => {
                let base = Polynomial::new(vec![self.inv.clone(), self.lin.clone()]);
                &RationalFunction::from_poly(base) + &ld.mul_poly(&Polynomial::from_ints(&[0, 2]))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSolution {
    pub period: usize,
    #[serde(with = "serde_str")]
    pub delta: Rational,
    #[serde(with = "serde_str")]
    pub omega: Rational,
    #[serde(with = "serde_opt_str")]
    pub alpha: Option<Rational>,
    pub terms: Vec<WTerm>,
    /// Seed energies `E(ν_i)` along the chain.
    #[serde(with = "serde_vec_str")]
    pub energies: Vec<Rational>,
    /// `ε_{i,i+1}`, the last entry being `ε_{p,1} - Δ`.
    #[serde(with = "serde_vec_str")]
    pub expected_eps: Vec<Rational>,
    pub ladder: Vec<PseudoWronskian>,
    pub chain_labels: SlotFlipChain,
}

impl ChainSolution {
    pub fn variable(&self) -> VariableMap {
        self.terms
            .first()
            .map_or(VariableMap::Linear, |t| t.variable)
    }

    /// Reduced forms of all terms, see [`WTerm::reduced`].
    pub fn reduced_terms(&self) -> Result<Vec<RationalFunction>, Error> {
        self.terms.iter().map(WTerm::reduced).collect()
    }
}

fn two() -> Rational {
    int(2)
}

fn check_omega(omega: &Rational) -> Result<(), Error> {
    if *omega != two() {
        return Err(Error::UnsupportedOmega(format_rational(omega)));
    }
    Ok(())
}

fn expected_from_energies(energies: &[Rational], delta: &Rational) -> Vec<Rational> {
    let p = energies.len();
    (0..p)
        .map(|i| {
            let e = &energies[i] - &energies[(i + 1) % p];
            if i + 1 == p {
                e - delta
            } else {
                e
            }
        })
        .collect()
}

fn lin_of(sign: Sign, omega: &Rational) -> Rational {
    let h = omega / two();
    match sign {
        Sign::Negative => h,
        Sign::Positive => -h,
    }
}

/// Odd-period chain of harmonic-oscillator extensions.
///
/// `perm[i]` selects which default-order flip is applied at step `i`.
pub fn build_odd_chain(
    cs: &CyclicStructure,
    perm: Option<&[usize]>,
    omega: &Rational,
) -> Result<ChainSolution, Error> {
    check_omega(omega)?;
    let p = cs.period();
    if p.is_multiple_of(2) {
        return Err(Error::OddPeriodRequired(p));
    }
    let mut chain = flip_chain_of(cs)?;
    let (d0, _) = build_diagram(cs);
    if let Some(perm) = perm {
        chain = chain.permuted(&d0, perm)?;
    }
    let mut ladder = vec![hermite_wronskian(&d0)?];
    let mut d = d0;
    for f in &chain.flips {
        d = d.flip_at(f.level);
        ladder.push(hermite_wronskian(&d)?);
    }
    let terms = chain
        .flips
        .iter()
        .enumerate()
        .map(|(i, f)| WTerm {
            lin: lin_of(f.sign, omega),
            inv: Rational::zero(),
            prev: ladder[i].poly.clone(),
            next: ladder[i + 1].poly.clone(),
            variable: VariableMap::Linear,
        })
        .collect();
    let energies: Vec<Rational> = chain.flips.iter().map(|f| int(f.level) * omega).collect();
    let delta = int(cs.k() as i64) * omega;
    let expected_eps = expected_from_energies(&energies, &delta);
    let chain_labels = SlotFlipChain {
        flips: chain
            .flips
            .iter()
            .map(|f| SlotFlip {
                slot: Slot::First,
                level: f.level,
                sign: f.sign,
            })
            .collect(),
    };
    Ok(ChainSolution {
        period: p,
        delta,
        omega: omega.clone(),
        alpha: None,
        terms,
        energies,
        expected_eps,
        ladder,
        chain_labels,
    })
}

/// Even-period chain of isotonic-oscillator extensions labelled by the
/// universal character of `cs1 ⊗ cs2`.
pub fn build_even_chain(
    cs1: &CyclicStructure,
    cs2: &CyclicStructure,
    perm: Option<&[usize]>,
    alpha: &AlphaParam,
    omega: &Rational,
) -> Result<ChainSolution, Error> {
    check_omega(omega)?;
    let (uc0, mut chain) = uc_flip_chain(cs1, cs2)?;
    if let Some(perm) = perm {
        chain = chain.permuted(&uc0, perm)?;
    }
    let p = chain.len();
    let ladder_entry = |uc: &UniversalCharacter| -> Result<PseudoWronskian, Error> {
        let w = laguerre_pseudo_wronskian(uc, alpha)?;
        if w.poly.is_zero() {
            return Err(Error::SampleDegenerate(format_rational(alpha.value())));
        }
        Ok(w)
    };
    let mut ladder = vec![ladder_entry(&uc0)?];
    let mut uc = uc0;
    for f in &chain.flips {
        uc = uc.flip(f.slot, f.level);
        ladder.push(ladder_entry(&uc)?);
    }
    let terms = chain
        .flips
        .iter()
        .enumerate()
        .map(|(i, f)| WTerm {
            lin: lin_of(f.sign, omega),
            inv: -(&ladder[i + 1].gauge.z_power - &ladder[i].gauge.z_power) * two(),
            prev: ladder[i].poly.clone(),
            next: ladder[i + 1].poly.clone(),
            variable: VariableMap::Square,
        })
        .collect();
    let a = alpha.value();
    let energies: Vec<Rational> = chain
        .flips
        .iter()
        .map(|f| match f.slot {
            Slot::First => two() * int(f.level) * omega,
            Slot::Second => two() * (int(f.level) - a) * omega,
        })
        .collect();
    let delta = two() * int(cs1.k() as i64) * omega;
    let expected_eps = expected_from_energies(&energies, &delta);
    Ok(ChainSolution {
        period: p,
        delta,
        omega: omega.clone(),
        alpha: Some(a.clone()),
        terms,
        energies,
        expected_eps,
        ladder,
        chain_labels: chain,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationReport {
    pub residual_constant: bool,
    #[serde(with = "serde_opt_str")]
    pub value: Option<Rational>,
    #[serde(with = "serde_str")]
    pub expected: Rational,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub period: usize,
    #[serde(with = "serde_str")]
    pub delta: Rational,
    pub equations: Vec<EquationReport>,
    pub sum_rule: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.sum_rule && self.equations.iter().all(|e| e.matched)
    }
}

/// Residual of equation `i`: `-(w_i + w_{i+1})' + w_{i+1}^2 - w_i^2`.
///
/// For `z = x^2` each `w = v/x` and the residual is evaluated in ℚ(z) as
/// `-2 s' + s (1 + d)/z` with `s = v_i + v_{i+1}`, `d = v_{i+1} - v_i`.
pub fn chain_residuals(sol: &ChainSolution) -> Result<Vec<RationalFunction>, Error> {
    let ws = sol.reduced_terms()?;
    let p = ws.len();
    let inv_z = RationalFunction::inverse_power(Rational::one(), 1);
    (0..p)
        .map(|i| {
            let a = &ws[i];
            let b = &ws[(i + 1) % p];
            let s = a + b;
            let d = b - a;
            Ok(match sol.variable() {
                VariableMap::Linear => &(-s.derivative()) + &(&s * &d),
                VariableMap::Square => {
                    let one_d = &d + &RationalFunction::one();
                    &s.derivative().scale(&int(-2)) + &(&(&s * &one_d) * &inv_z)
                }
            })
        })
        .collect()
}

/// Checks every chain equation and the sum rule `Σ w_i = (Δ/2) x`.
///
/// Works with integer numerators over the product of the ladder entries
/// involved, so no gcd is taken; [`chain_residuals`] is the reduced
/// rational-function counterpart.
pub fn verify_chain(sol: &ChainSolution) -> Result<VerificationReport, Error> {
    let forms = sol.terms.iter().map(LogForm::of_term).collect::<Result<Vec<_>, _>>()?;
    let variable = sol.variable();
    let mult = match variable {
        VariableMap::Linear => ZPoly::one(),
        VariableMap::Square => ZPoly::new(vec![BigInt::zero(), BigInt::from(2)]),
    };
    let p = forms.len();
    let equations = (0..p)
        .map(|i| {
            let a = &forms[i];
            let b = &forms[(i + 1) % p];
            let value = residual_constant(&a.add(b, 1), &b.add(a, -1), &mult, variable);
            let e = &sol.expected_eps[i];
            EquationReport {
                residual_constant: value.is_some(),
                matched: value.as_ref() == Some(e),
                value,
                expected: e.clone(),
            }
        })
        .collect();
    let mut total = LogForm {
        poly: Polynomial::monomial(-(&sol.delta / two()), 1),
        logs: vec![],
    };
    for f in &forms {
        total = total.add(f, 1);
    }
    let (n, _, _) = numerators(&[&total], &mult);
    Ok(VerificationReport {
        period: sol.period,
        delta: sol.delta.clone(),
        equations,
        sum_rule: n[0].is_zero(),
    })
}

/// `poly + m(z) Σ σ_k F_k'/F_k` with primitive integer `F_k`, where the
/// multiplier `m` is shared by a whole chain.
#[derive(Clone, Debug)]
struct LogForm {
    poly: Polynomial,
    logs: Vec<(ZPoly, Rational)>,
}

impl LogForm {
    fn of_term(t: &WTerm) -> Result<LogForm, Error> {
        if t.prev.is_zero() || t.next.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut f = LogForm {
            poly: Polynomial::zero(),
            logs: vec![],
        };
        match t.variable {
            VariableMap::Linear => {
                f.poly = Polynomial::monomial(t.lin.clone(), 1);
                f.push(ZPoly::new(vec![BigInt::zero(), BigInt::one()]), t.inv.clone());
            }
            VariableMap::Square => f.poly = Polynomial::new(vec![t.inv.clone(), t.lin.clone()]),
        }
        f.push(t.prev.to_zpoly().0, Rational::one());
        f.push(t.next.to_zpoly().0, -Rational::one());
        Ok(f)
    }

    fn push(&mut self, p: ZPoly, s: Rational) {
        if s.is_zero() || p.degree() == 0 {
            return;
        }
        let p = p.primitive();
        match self.logs.iter_mut().find(|(q, _)| *q == p) {
            Some(e) => e.1 += s,
            None => self.logs.push((p, s)),
        }
        self.logs.retain(|(_, s)| !s.is_zero());
    }

    /// `self + sign * o`.
    fn add(&self, o: &LogForm, sign: i64) -> LogForm {
        let k = int(sign);
        let mut out = LogForm {
            poly: &self.poly + &o.poly.scale(&k),
            logs: self.logs.clone(),
        };
        for (p, s) in &o.logs {
            out.push(p.clone(), s * &k);
        }
        out
    }
}

/// Integer numerators `N_f` with `f = N_f / (Q D)`, `D` the product of all factors.
fn numerators(forms: &[&LogForm], mult: &ZPoly) -> (Vec<ZPoly>, ZPoly, BigInt) {
    let mut basis: Vec<ZPoly> = vec![];
    let mut q = BigInt::one();
    for f in forms {
        for (p, s) in &f.logs {
            if !basis.contains(p) {
                basis.push(p.clone());
            }
            q = lcm(&q, s.denom());
        }
        for c in f.poly.coeffs() {
            q = lcm(&q, c.denom());
        }
    }
    let d = basis.iter().fold(ZPoly::one(), |acc, p| acc.mul(p));
    let cofactors: Vec<ZPoly> = (0..basis.len())
        .map(|k| {
            let others = basis
                .iter()
                .enumerate()
                .filter(|(m, _)| *m != k)
                .fold(ZPoly::one(), |acc, (_, p)| acc.mul(p));
            basis[k].derivative().mul(&others).mul(mult)
        })
        .collect();
    let nums = forms
        .iter()
        .map(|f| {
            let (zp, den) = f.poly.to_zpoly();
            let mut n = zp.scale(&(&q / den)).mul(&d);
            for (p, s) in &f.logs {
                let k = basis.iter().position(|b| b == p).unwrap();
                let c = s.numer() * (&q / s.denom());
                n = n.add(&cofactors[k].scale(&c));
            }
            n
        })
        .collect();
    (nums, d, q)
}

fn constant_ratio(num: &ZPoly, den: &ZPoly) -> Option<Rational> {
    if num.is_zero() {
        return Some(Rational::zero());
    }
    if num.degree() != den.degree() {
        return None;
    }
    let (ln, ld) = (num.lead(), den.lead());
    (num.scale(ld) == den.scale(ln)).then(|| Rational::new(ln.clone(), ld.clone()))
}

/// Value of `-s' + s d` (for `z = x`) or `-2 s' + s (1 + d)/z` (for `z = x^2`), if constant.
fn residual_constant(s: &LogForm, d: &LogForm, mult: &ZPoly, variable: VariableMap) -> Option<Rational> {
    let (n, den, q) = numerators(&[s, d], mult);
    let (ns, nd) = (&n[0], &n[1]);
    let qz = ZPoly::new(vec![q.clone()]);
    let wronsk = ns.mul(&den.derivative()).sub(&ns.derivative().mul(&den));
    let den_sq = den.mul(&den).scale(&(&q * &q));
    match variable {
        VariableMap::Linear => {
            let r = wronsk.mul(&qz).add(&ns.mul(nd));
            constant_ratio(&r, &den_sq)
        }
        VariableMap::Square => {
            let r = wronsk
                .scale(&(&q * BigInt::from(2)))
                .shift(1)
                .add(&ns.mul(&den.mul(&qz).add(nd)));
            constant_ratio(&r, &den_sq.shift(1))
        }
    }
}

/// `Δ` and the raw `ε_{i,i+1} = E(ν_i) - E(ν_{i+1})`, cyclically, summing to zero.
pub fn chain_parameters(sol: &ChainSolution) -> (Rational, Vec<Rational>) {
    let p = sol.energies.len();
    let eps = (0..p)
        .map(|i| &sol.energies[i] - &sol.energies[(i + 1) % p])
        .collect();
    (sol.delta.clone(), eps)
}

/// Crum potential `V - 2 (log W)''` split into a rational part in `z`
/// and the harmonic part `harmonic x^2 + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Potential {
    pub rational_part: RationalFunction,
    #[serde(with = "serde_str")]
    pub harmonic: Rational,
    #[serde(with = "serde_str")]
    pub constant: Rational,
}

/// Potential of the extension labelled by `d`, with `z = sqrt(ω/2) x`.
pub fn potential_of(d: &crate::maya::MayaDiagram, omega: &Rational) -> Result<Potential, Error> {
    let h = hermite_wronskian(d)?.poly;
    let h1 = h.derivative();
    let num = &(&h.derivative().derivative() * &h) - &(&h1 * &h1);
    let log2 = RationalFunction::new(num, &h * &h)?;
    let m = int(d.len() as i64);
    Ok(Potential {
        rational_part: log2.scale(&-omega.clone()),
        harmonic: omega * omega / int(4),
        constant: &m * omega - omega / two(),
    })
}

/// Inputs of [`build_even_chain`] apart from `α` and `ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenChainInput {
    pub first: CyclicStructure,
    pub second: CyclicStructure,
    pub perm: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampledReport {
    #[serde(with = "serde_str")]
    pub alpha: Rational,
    pub report: VerificationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaSampledReport {
    pub samples: Vec<SampledReport>,
    pub passed: bool,
}

/// Five default `α` samples.
pub fn default_alpha_samples() -> Vec<AlphaParam> {
    [rat(1, 3), rat(2, 5), rat(7, 3), rat(5, 7), rat(9, 4)]
        .into_iter()
        .map(|a| AlphaParam::new(a).unwrap())
        .collect()
}

/// Builds and verifies the even chain at each `α` sample.
///
/// Every residual is a rational function of `α` of bounded degree, so
/// agreement at enough samples certifies the identity in `α`.
pub fn alpha_sampled_verify(input: &EvenChainInput, samples: &[AlphaParam]) -> Result<AlphaSampledReport, Error> {
    for (i, a) in samples.iter().enumerate() {
        if samples[..i].contains(a) {
            return Err(Error::Parse(format!(
                "duplicate alpha sample {}",
                format_rational(a.value())
            )));
        }
    }
    let mut out = Vec::with_capacity(samples.len());
    for a in samples {
        let sol = build_even_chain(&input.first, &input.second, input.perm.as_deref(), a, &two())?;
        out.push(SampledReport {
            alpha: a.value().clone(),
            report: verify_chain(&sol)?,
        });
    }
    let passed = out.iter().all(|s| s.report.passed());
    Ok(AlphaSampledReport { samples: out, passed })
}
