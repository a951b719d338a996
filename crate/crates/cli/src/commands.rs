//! Command implementations returning serializable reports.

use dchain_core::acceptance;
use dchain_core::{
    build_diagram, build_even_chain, build_odd_chain, enumerate_structures, flip_chain_of, int,
    okamoto_coincides_with_gh, piv_families, piv_from_chain, pv_from_chain, uc_flip_chain, verify_chain,
    ChainSolution, Error, MayaDiagram, PainleveReport, Rational, UniversalCharacter,
};
use rayon::prelude::*;

use crate::job::{resolve_shift, Job};
use crate::report::{
    BuildReport, ChainCheck, EnumEntry, EnumReport, ErrorBody, PainleveEntry, PainleveOutput, SelftestReport,
    VerifyReport,
};

fn omega() -> Rational {
    int(2)
}

pub fn enumerate(period: usize, shift: Option<usize>, bound: usize) -> Result<EnumReport, Error> {
    if period == 0 {
        return Err(Error::Parse("--period must be at least 1".into()));
    }
    let k = resolve_shift(&[period], shift)?;
    let structures = enumerate_structures(period, k, bound)?;
    let entries: Vec<EnumEntry> = structures
        .into_par_iter()
        .map(|cs| {
            let (diagram, _) = build_diagram(&cs);
            EnumEntry {
                degeneracy: cs.degeneracy(),
                flip_chain: flip_chain_of(&cs).ok(),
                diagram,
                structure: cs,
            }
        })
        .collect();
    Ok(EnumReport {
        period,
        shift: k,
        bound,
        count: entries.len(),
        structures: entries,
    })
}

/// One solution for odd periods, one per `α` sample for even periods.
pub fn solutions(job: &Job) -> Result<Vec<ChainSolution>, Error> {
    match job {
        Job::Odd { cs, perm } => Ok(vec![build_odd_chain(cs, perm.as_deref(), &omega())?]),
        Job::Even {
            first,
            second,
            perm,
            alphas,
        } => alphas
            .par_iter()
            .map(|a| build_even_chain(first, second, perm.as_deref(), a, &omega()))
            .collect(),
    }
}

pub fn build(job: &Job) -> Result<BuildReport, Error> {
    let seed = match job {
        Job::Odd { cs, .. } => UniversalCharacter::new(build_diagram(cs).0, MayaDiagram::empty()),
        Job::Even { first, second, .. } => uc_flip_chain(first, second)?.0,
    };
    Ok(BuildReport {
        period: job.period(),
        shift: job.shift(),
        seed,
        solutions: solutions(job)?,
    })
}

fn entry(alpha: Option<Rational>, first_flip: Option<i64>, order: Option<Vec<i64>>, r: Result<PainleveReport, Error>) -> PainleveEntry {
    let (report, error) = match r {
        Ok(r) => (Some(r), None),
        Err(e) => (
            None,
            Some(ErrorBody {
                kind: e.kind().into(),
                message: e.to_string(),
            }),
        ),
    };
    PainleveEntry {
        alpha,
        first_flip,
        order,
        report,
        error,
    }
}

fn painleve_of(sol: &ChainSolution) -> Option<PainleveEntry> {
    let order = || sol.chain_labels.flips.iter().map(|f| f.level).collect::<Vec<_>>();
    match (sol.period, sol.alpha.is_some()) {
        (3, false) => Some(entry(
            None,
            sol.chain_labels.flips.first().map(|f| f.level),
            Some(order()),
            piv_from_chain(sol).and_then(|i| PainleveReport::from_piv(&i)),
        )),
        (4, true) => Some(entry(
            sol.alpha.clone(),
            None,
            Some(order()),
            pv_from_chain(sol).and_then(|i| PainleveReport::from_pv(&i)),
        )),
        _ => None,
    }
}

pub fn verify(job: &Job) -> Result<VerifyReport, Error> {
    let sols = solutions(job)?;
    let checked: Vec<(ChainCheck, Option<PainleveEntry>)> = sols
        .par_iter()
        .map(|sol| {
            Ok((
                ChainCheck {
                    alpha: sol.alpha.clone(),
                    report: verify_chain(sol)?,
                },
                painleve_of(sol),
            ))
        })
        .collect::<Result<_, Error>>()?;
    let (chains, painleve): (Vec<_>, Vec<_>) = checked.into_iter().unzip();
    let painleve: Vec<PainleveEntry> = painleve.into_iter().flatten().collect();
    let passed = chains.iter().all(|c| c.report.passed()) && painleve.iter().all(PainleveEntry::passed);
    Ok(VerifyReport {
        passed,
        period: job.period(),
        shift: job.shift(),
        chains,
        painleve,
    })
}

pub fn painleve(job: &Job) -> Result<PainleveOutput, Error> {
    let (entries, coincides) = match (job, job.period()) {
        (Job::Odd { cs, .. }, 3) => {
            let fam = piv_families(cs)?;
            let entries = fam
                .par_iter()
                .map(|m| {
                    entry(
                        None,
                        Some(m.first_flip),
                        Some(m.order.clone()),
                        PainleveReport::from_piv(&m.instance),
                    )
                })
                .collect();
            (entries, Some(okamoto_coincides_with_gh(cs)))
        }
        (Job::Even { .. }, 4) => {
            let sols = solutions(job)?;
            let entries = sols.par_iter().filter_map(painleve_of).collect();
            (entries, None)
        }
        (_, p) => {
            let expected = if p % 2 == 1 { 3 } else { 4 };
            return Err(Error::WrongPeriod { expected, got: p });
        }
    };
    let entries: Vec<PainleveEntry> = entries;
    Ok(PainleveOutput {
        passed: entries.iter().all(PainleveEntry::passed),
        period: job.period(),
        shift: job.shift(),
        coincides_with_gh: coincides,
        entries,
    })
}

pub fn selftest(criterion: Option<&str>) -> Result<SelftestReport, Error> {
    let criteria = match criterion {
        Some(id) => acceptance::run(id)?,
        None => acceptance::run_all(),
    };
    Ok(SelftestReport {
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    })
}
