//! Self-test suite: one outcome per acceptance criterion, all checks exact.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{int, rat};
use crate::algebra::{Polynomial, Rational, RationalFunction};
use crate::chain::{
    build_even_chain, build_odd_chain, default_alpha_samples, potential_of, verify_chain, ChainSolution,
};
use crate::error::Error;
use crate::maya::{
    build_diagram, enumerate_structures, flip_chain_of, minimal_flip_chain, CyclicStructure, Degeneracy,
    MayaDiagram, UniversalCharacter,
};
use crate::ortho::{hermite, laguerre, AlphaParam};
use crate::painleve::{piv_families, piv_residual, pv_from_chain, pv_residual, PVInstance};
use crate::wronskian::{
    check_translation_equivalence_h, check_translation_equivalence_l, hermite_wronskian,
    laguerre_pseudo_wronskian, parity_split, parity_split_constant,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {} {}: {} ({} ms, budget {} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_ms,
            self.budget_ms
        )
    }
}

/// Identifiers accepted by [`run`].
pub const CRITERIA: [&str; 8] = ["1", "2", "3", "4", "5", "6", "7", "8"];

/// Runs all criteria in order.
pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA.iter().flat_map(|id| run(id).unwrap()).collect()
}

/// Runs one criterion, possibly producing several sub-lines.
pub fn run(id: &str) -> Result<Vec<CriterionOutcome>, Error> {
    let (budget, f): (u64, fn() -> Vec<Check>) = match id {
        "1" => (1, crit1),
        "2" => (5, crit2),
        "3" => (30, crit3),
        "4" => (120, crit4),
        "5" => (60, crit5),
        "6" => (300, crit6),
        "7" => (60, crit7),
        "8" => (30, crit8),
        _ => return Err(Error::Parse(format!("unknown criterion {id}"))),
    };
    let start = Instant::now();
    let checks = f();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget);
    Ok(checks
        .into_iter()
        .map(|c| {
            let in_budget = elapsed <= budget;
            let detail = if in_budget {
                c.detail
            } else {
                format!("{}; over time budget", c.detail)
            };
            CriterionOutcome {
                id: c.id,
                name: c.name,
                passed: c.passed && in_budget,
                detail,
                elapsed_ms: elapsed.as_millis(),
                budget_ms: budget.as_millis(),
            }
        })
        .collect())
}

struct Check {
    id: String,
    name: String,
    passed: bool,
    detail: String,
}

/// Counts successes and keeps the first few failure descriptions.
#[derive(Default)]
struct Tally {
    ok: usize,
    failures: Vec<String>,
    total_failures: usize,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.ok += 1;
        } else {
            self.total_failures += 1;
            if self.failures.len() < 3 {
                self.failures.push(what());
            }
        }
    }

    fn check(self, id: &str, name: &str, what: &str) -> Check {
        let passed = self.total_failures == 0 && self.ok > 0;
        let detail = if self.total_failures == 0 {
            format!("{} {what} verified", self.ok)
        } else {
            format!(
                "{}/{} {what} failed, e.g. {}",
                self.total_failures,
                self.ok + self.total_failures,
                self.failures.join("; ")
            )
        };
        Check {
            id: id.into(),
            name: name.into(),
            passed,
            detail,
        }
    }
}

fn omega() -> Rational {
    int(2)
}

fn three_alphas() -> Vec<AlphaParam> {
    default_alpha_samples().into_iter().take(3).collect()
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

fn crit1() -> Vec<Check> {
    let mut deriv = Tally::default();
    for a in default_alpha_samples() {
        let a = a.value();
        for n in 0..=10usize {
            let lhs = laguerre(n, a).derivative();
            let rhs = if n == 0 {
                Polynomial::zero()
            } else {
                -laguerre(n - 1, &(a + int(1)))
            };
            deriv.record(lhs == rhs, || format!("n={n}, a={a}"));
        }
    }
    let mut bridge = Tally::default();
    for j in 0..=5usize {
        let sign = if j % 2 == 0 { int(1) } else { int(-1) };
        let two_pow = |e: usize| int(2).pow(e as i32);
        let even = laguerre(j, &rat(-1, 2))
            .compose_square()
            .scale(&(&sign * two_pow(2 * j) * factorial(j)));
        bridge.record(hermite(2 * j) == even, || format!("H_{}", 2 * j));
        let odd = laguerre(j, &rat(1, 2))
            .compose_square()
            .shift(1)
            .scale(&(&sign * two_pow(2 * j + 1) * factorial(j)));
        bridge.record(hermite(2 * j + 1) == odd, || format!("H_{}", 2 * j + 1));
    }
    let mut t = deriv;
    t.ok += bridge.ok;
    t.total_failures += bridge.total_failures;
    t.failures.extend(bridge.failures);
    vec![t.check("1", "orthogonal-polynomial identities", "Laguerre derivative and Hermite-Laguerre identities")]
}

fn odd_structures(bound: usize) -> Vec<CyclicStructure> {
    let mut out = Vec::new();
    for p in [1usize, 3, 5] {
        for k in [1usize, 3, 5] {
            if k <= p {
                out.extend(enumerate_structures(p, k, bound).unwrap());
            }
        }
    }
    out
}

fn crit2() -> Vec<Check> {
    let mut t = Tally::default();
    let mut skipped = 0;
    for cs in odd_structures(3) {
        let chain = match flip_chain_of(&cs) {
            Ok(c) => c,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let (d, _) = build_diagram(&cs);
        let k = cs.k();
        let realized = chain.replay(&d) == d.translate(k);
        let counted = chain.satisfies_count_rule(k);
        let minimal = cs.is_degenerate() || minimal_flip_chain(&d, k).multiset() == chain.multiset();
        t.record(realized && counted && minimal, || format!("{cs}"));
    }
    let mut c = t.check("2", "Maya cyclicity", "structures");
    c.detail.push_str(&format!(", {skipped} overlapping structures excluded"));
    vec![c]
}

fn subsets(max: i64, size: usize) -> Vec<MayaDiagram> {
    let mut out = vec![];
    for mask in 0u32..(1 << max) {
        if mask.count_ones() as usize <= size {
            let v = (1..=max).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            out.push(MayaDiagram::new(v).unwrap());
        }
    }
    out
}

fn crit3() -> Vec<Check> {
    let mut h = Tally::default();
    let mut h_consts = Vec::new();
    for d in subsets(7, 4) {
        for k in 1..=3 {
            let r = check_translation_equivalence_h(&d, k);
            if let Ok(c) = &r {
                if h_consts.len() < 2 && d.len() >= 2 {
                    h_consts.push(format!("{d}+{k}: {c}"));
                }
            }
            h.record(r.is_ok(), || format!("{d} + {k}"));
        }
    }
    let mut l = Tally::default();
    let mut l_consts = Vec::new();
    let small = subsets(3, 2);
    for a in three_alphas() {
        for n in &small {
            for s in &small {
                let uc = UniversalCharacter::new(n.clone(), s.clone());
                for k1 in 0..=2 {
                    for k2 in 0..=2 {
                        let r = check_translation_equivalence_l(&uc, k1, k2, &a);
                        if let Ok(p) = &r {
                            if l_consts.len() < 2 && k2 > 0 && !s.is_empty() {
                                l_consts.push(format!("{uc}+({k1},{k2}): z^{} C={}", p.z_power, p.constant));
                            }
                        }
                        l.record(r.is_ok(), || format!("{uc} + ({k1},{k2}) at {}", a.value()));
                    }
                }
            }
        }
    }
    let mut a = h.check("3a", "Hermite translation equivalence", "translations");
    a.detail.push_str(&format!(", constants e.g. {}", h_consts.join(", ")));
    let mut b = l.check("3b", "Laguerre translation equivalence", "translations");
    b.detail.push_str(&format!(", constants e.g. {}", l_consts.join(", ")));
    vec![a, b]
}

fn scaled(c: i64, w: &Rational) -> Rational {
    int(c) * w
}

fn crit4() -> Vec<Check> {
    let w = omega();
    let mut all = Tally::default();
    let mut gh5 = Tally::default();
    let mut ok5 = Tally::default();
    let mut eps45_offsets = Vec::new();
    for cs in odd_structures(3) {
        if cs.degeneracy() == Degeneracy::Overlap {
            continue;
        }
        let sol = match build_odd_chain(&cs, None, &w) {
            Ok(s) => s,
            Err(e) => {
                all.record(false, || format!("{cs}: {e}"));
                continue;
            }
        };
        let rep = verify_chain(&sol);
        all.record(matches!(&rep, Ok(r) if r.passed()), || format!("{cs}"));
        if cs.period() != 5 || cs.is_degenerate() {
            continue;
        }
        let l = sol.chain_labels.flips.iter().map(|f| f.level).collect::<Vec<_>>();
        let got = &sol.expected_eps;
        if cs.k() == 1 {
            let (l1, m1, l2, m2) = (l[0], l[1] - l[0], l[2], l[3] - l[2]);
            if l1 + m1 >= l2 {
                continue;
            }
            let table = vec![
                scaled(-m1, &w),
                scaled(l1 - l2 + m1, &w),
                scaled(-m2, &w),
                scaled(l2 + m2, &w),
                scaled(-(l1 + 1), &w),
            ];
            gh5.record(*got == table, || format!("{cs}"));
        } else if cs.k() == 3 {
            let a1 = (l[0] - 1) / 3;
            let a2 = (l[1] - 2) / 3;
            let (l1, m1) = (l[2], l[3] - l[2]);
            let table = vec![
                scaled(-1 - 3 * (a2 - a1), &w),
                scaled(2 + 3 * a2 - l1, &w),
                scaled(-m1, &w),
                scaled(l1 + m1 - 3, &w),
                scaled(-4 - 3 * a1, &w),
            ];
            if got[3] != table[3] && eps45_offsets.is_empty() {
                eps45_offsets.push(format!("eps45 computed {} vs table {}", got[3], table[3]));
            }
            ok5.record(*got == table, || format!("{cs}"));
        }
    }
    let mut c = ok5.check("4c", "odd chains, k=3 period-5 table", "structures");
    if !eps45_offsets.is_empty() {
        c.detail.push_str(&format!(
            "; {}; the printed table sums to -6w while every chain forces -Delta = -3w",
            eps45_offsets[0]
        ));
    }
    vec![
        all.check("4a", "odd chains, residuals and sum rule", "chains"),
        gh5.check("4b", "odd chains, k=1 period-5 table", "structures"),
        c,
    ]
}

fn crit5() -> Vec<Check> {
    let mut res = Tally::default();
    let mut gh = Tally::default();
    let mut ok = Tally::default();
    let mut flagged = 0;
    for lam in 1..=3i64 {
        for mu in 1..=3i64 {
            let cs = CyclicStructure::gh(vec![(lam as usize, mu as usize)]).unwrap();
            match piv_families(&cs) {
                Ok(fam) => {
                    for m in &fam {
                        res.record(piv_residual(&m.instance).map(|r| r.is_zero()) == Ok(true), || {
                            format!("GH ({lam},{mu}) first flip {}", m.first_flip)
                        });
                    }
                    let m0 = fam.iter().find(|m| m.first_flip == 0).unwrap();
                    let a = int(-(1 - mu - 2 * lam));
                    let b = int(-2 * mu * mu);
                    gh.record(m0.instance.a == a && m0.instance.b == b, || format!("GH ({lam},{mu})"));
                }
                Err(e) => res.record(false, || format!("GH ({lam},{mu}): {e}")),
            }
        }
    }
    for a1 in 0..=2i64 {
        for a2 in 0..=2i64 {
            let cs = CyclicStructure::okamoto(vec![a1 as usize, a2 as usize]).unwrap();
            if crate::painleve::okamoto_coincides_with_gh(&cs) {
                flagged += 1;
            }
            match piv_families(&cs) {
                Ok(fam) => {
                    for m in &fam {
                        res.record(piv_residual(&m.instance).map(|r| r.is_zero()) == Ok(true), || {
                            format!("Okamoto ({a1},{a2}) first flip {}", m.first_flip)
                        });
                    }
                    let m0 = fam.iter().find(|m| m.first_flip == 0).unwrap();
                    let a = int(a1 + a2);
                    let s = int(-1 + 3 * (a1 - a2));
                    let b = rat(-2, 9) * &s * &s;
                    ok.record(m0.instance.a == a && m0.instance.b == b, || format!("Okamoto ({a1},{a2})"));
                }
                Err(e) => res.record(false, || format!("Okamoto ({a1},{a2}): {e}")),
            }
        }
    }
    let mut c = ok.check("5c", "PIV Okamoto closed forms", "structures");
    c.detail.push_str(&format!(", {flagged} coincide with GH diagrams"));
    vec![
        res.check("5a", "PIV residuals", "family members"),
        gh.check("5b", "PIV GH closed forms", "structures"),
        c,
    ]
}

/// The even decompositions exercised by the acceptance suite, with parameters ≤ `bound`.
pub fn even_cases(bound: usize) -> Vec<(String, CyclicStructure, CyclicStructure)> {
    let r = 1..=bound;
    let z = 0..=bound;
    let mut out = vec![];
    let t = CyclicStructure::trivial();
    out.push(("p=2".to_string(), t.clone(), t.clone()));
    for l in r.clone() {
        for m in r.clone() {
            out.push(("(3,1)".into(), CyclicStructure::gh(vec![(l, m)]).unwrap(), t.clone()));
        }
    }
    for a in z.clone() {
        for b in z.clone() {
            let s1 = CyclicStructure::okamoto(vec![a]).unwrap();
            let s2 = CyclicStructure::okamoto(vec![b]).unwrap();
            out.push(("(2,2)".into(), s1, s2));
        }
    }
    for l1 in r.clone() {
        for m1 in r.clone() {
            for l2 in r.clone() {
                for m2 in r.clone() {
                    let s = CyclicStructure::gh(vec![(l1, m1), (l2, m2)]).unwrap();
                    out.push(("(5,1)".into(), s, t.clone()));
                }
            }
        }
    }
    for a in z.clone() {
        for l in r.clone() {
            for m in r.clone() {
                for b in z.clone() {
                    let s1 = CyclicStructure::new(2, vec![a], vec![(l, m)]).unwrap();
                    let s2 = CyclicStructure::okamoto(vec![b]).unwrap();
                    out.push(("(4,2)".into(), s1, s2));
                }
            }
        }
    }
    for a1 in z.clone() {
        for a2 in z.clone() {
            for b1 in z.clone() {
                for b2 in z.clone() {
                    let s1 = CyclicStructure::okamoto(vec![a1, a2]).unwrap();
                    let s2 = CyclicStructure::okamoto(vec![b1, b2]).unwrap();
                    out.push(("(3,3) k=3".into(), s1, s2));
                }
            }
        }
    }
    for l in r.clone() {
        for m in r.clone() {
            for rho in r.clone() {
                for s in r.clone() {
                    let s1 = CyclicStructure::gh(vec![(l, m)]).unwrap();
                    let s2 = CyclicStructure::gh(vec![(rho, s)]).unwrap();
                    out.push(("(3,3) k=1".into(), s1, s2));
                }
            }
        }
    }
    out
}

fn even_degenerate(s1: &CyclicStructure, s2: &CyclicStructure) -> bool {
    s1.degeneracy() == Degeneracy::Overlap || s2.degeneracy() == Degeneracy::Overlap
}

fn crit6() -> Vec<Check> {
    let w = omega();
    let mut t = Tally::default();
    let mut disp = Tally::default();
    let mut skipped = 0;
    for (label, s1, s2) in even_cases(2) {
        if even_degenerate(&s1, &s2) {
            skipped += 1;
            continue;
        }
        for a in three_alphas() {
            let sol = match build_even_chain(&s1, &s2, None, &a, &w) {
                Ok(s) => s,
                Err(e) => {
                    t.record(false, || format!("{label} {s1} x {s2}: {e}"));
                    continue;
                }
            };
            let rep = verify_chain(&sol);
            t.record(matches!(&rep, Ok(r) if r.passed()), || {
                format!("{label} {s1} x {s2} at {}", a.value())
            });
            let al = a.value();
            let eps = &sol.expected_eps;
            let lv: Vec<i64> = sol.chain_labels.flips.iter().map(|f| f.level).collect();
            let two_w = &w * int(2);
            match label.as_str() {
                "(3,1)" => {
                    let (l, m) = (int(lv[0]), int(lv[1] - lv[0]));
                    let table = vec![
                        -&two_w * &m,
                        &two_w * (&l + &m),
                        &two_w * al,
                        &two_w * (int(-1) - &l - al),
                    ];
                    disp.record(*eps == table, || format!("(3,1) {s1}"));
                }
                "(2,2)" => {
                    let b1 = (lv[2] - 1) / 2;
                    disp.record(eps[1] == &two_w * (al - int(1 + 2 * b1)), || format!("(2,2) {s2}"));
                }
                "(3,3) k=1" => {
                    let rho = int(lv[3]);
                    disp.record(eps[2] == &two_w * (al - rho), || format!("(3,3) {s2}"));
                }
                _ => {}
            }
        }
    }
    let mut a = t.check("6a", "even chains, residuals and sum rule", "chains");
    a.detail.push_str(&format!(", {skipped} overlapping structures excluded"));
    vec![a, disp.check("6b", "even chains, displayed energy differences", "chains")]
}

fn pv_cases() -> Vec<(bool, CyclicStructure, CyclicStructure)> {
    even_cases(2)
        .into_iter()
        .filter(|(l, _, _)| l == "(3,1)" || l == "(2,2)")
        .map(|(l, a, b)| (l == "(3,1)", a, b))
        .collect()
}

/// Closed-form PV parameters as printed for the two period-4 families.
pub fn pv_display_params(three_one: bool, sol: &ChainSolution) -> [Rational; 4] {
    let lv: Vec<i64> = sol.chain_labels.flips.iter().map(|f| f.level).collect();
    let al = sol.alpha.clone().unwrap();
    if three_one {
        let (l, m) = (int(lv[0]), int(lv[1] - lv[0]));
        [
            int(2) * &m * &m,
            int(-2) * &al * &al,
            int(4) * (&al + int(2) * &l + &m + int(1)),
            rat(-1, 2),
        ]
    } else {
        let a1 = int((lv[0] - 1) / 2);
        let b1 = int((lv[2] - 1) / 2);
        let sa = int(1) + int(2) * &a1;
        let sb = int(1) + int(2) * &b1;
        [
            &sa * &sa / int(8),
            -(&sb * &sb) / int(8),
            int(8) * (&al + int(1) + &a1 - &b1),
            int(-2),
        ]
    }
}

fn crit7() -> Vec<Check> {
    let w = omega();
    let mut res = Tally::default();
    let mut disp = Tally::default();
    for (three_one, s1, s2) in pv_cases() {
        for a in three_alphas() {
            let sol = match build_even_chain(&s1, &s2, None, &a, &w) {
                Ok(s) => s,
                Err(e) => {
                    res.record(false, || format!("{s1} x {s2}: {e}"));
                    continue;
                }
            };
            let inst: PVInstance = match pv_from_chain(&sol) {
                Ok(i) => i,
                Err(e) => {
                    res.record(false, || format!("{s1} x {s2}: {e}"));
                    continue;
                }
            };
            res.record(pv_residual(&inst).map(|r| r.is_zero()) == Ok(true), || {
                format!("{s1} x {s2} at {}", a.value())
            });
            let shown = pv_display_params(three_one, &sol);
            let got = [inst.a.clone(), inst.b.clone(), inst.c.clone(), inst.d.clone()];
            disp.record(got == shown, || {
                format!(
                    "{} {s1} x {s2} at {}: computed (a,b,c,d)=({},{},{},{}) vs printed ({},{},{},{})",
                    if three_one { "(3,1)" } else { "(2,2)" },
                    a.value(),
                    got[0],
                    got[1],
                    got[2],
                    got[3],
                    shown[0],
                    shown[1],
                    shown[2],
                    shown[3]
                )
            });
        }
    }
    let mut b = disp.check("7b", "PV parameters match printed closed forms", "instances");
    if !b.passed {
        b.detail.push_str("; with the residual-verified parameters the printed values are not attainable");
    }
    vec![res.check("7a", "PV residual vanishes with chain parameters", "instances"), b]
}

fn crit8() -> Vec<Check> {
    let w = omega();
    let mut t = Tally::default();
    for m in 1..=4i64 {
        let d = MayaDiagram::new((1..=m).map(|i| 2 * i - 1).collect()).unwrap();
        let ok = potential_of(&d, &w)
            .map(|p| p.rational_part == RationalFunction::inverse_power(int(m * (m + 1)), 2))
            .unwrap_or(false);
        let mono = hermite_wronskian(&d)
            .map(|h| h.poly.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 && h.poly.degree() == Some((m * (m + 1) / 2) as usize))
            .unwrap_or(false);
        t.record(ok && mono, || format!("staircase m={m}"));
    }
    let one = build_odd_chain(&CyclicStructure::trivial(), None, &w)
        .and_then(|s| Ok((s.reduced_terms()?, s.delta.clone())))
        .map(|(ws, delta)| ws == vec![RationalFunction::from_poly(Polynomial::monomial(delta / int(2), 1))])
        .unwrap_or(false);
    t.record(one, || "1-step chain".into());
    for a in default_alpha_samples() {
        let triv = CyclicStructure::trivial();
        let ok = build_even_chain(&triv, &triv, None, &a, &w)
            .and_then(|s| {
                let v = s.reduced_terms()?;
                let c = &s.expected_eps[0] / &s.delta + rat(1, 2);
                let target = Polynomial::new(vec![c, &s.delta / int(4)]);
                Ok(v[1] == RationalFunction::from_poly(target))
            })
            .unwrap_or(false);
        t.record(ok, || format!("2-step chain at {}", a.value()));
    }
    let half = AlphaParam::new(rat(1, 2)).unwrap();
    for d in subsets(7, 7) {
        let (uc, e) = parity_split(&d);
        let ok = match (hermite_wronskian(&d), laguerre_pseudo_wronskian(&uc, &half)) {
            (Ok(h), Ok(l)) => parity_split_constant(&h.poly, &l.poly, e).is_some(),
            _ => false,
        };
        t.record(ok, || format!("parity split of {d}"));
    }
    vec![t.check("8", "degeneration oracles", "oracle instances")]
}
