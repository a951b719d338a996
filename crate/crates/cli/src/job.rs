//! Resolution of command-line flags into core inputs.

use dchain_core::chain::default_alpha_samples;
use dchain_core::{AlphaParam, CyclicStructure, Error};

#[derive(Clone, Debug)]
pub enum Job {
    Odd {
        cs: CyclicStructure,
        perm: Option<Vec<usize>>,
    },
    Even {
        first: CyclicStructure,
        second: CyclicStructure,
        perm: Option<Vec<usize>>,
        alphas: Vec<AlphaParam>,
    },
}

impl Job {
    pub fn period(&self) -> usize {
        match self {
            Job::Odd { cs, .. } => cs.period(),
            Job::Even { first, second, .. } => first.period() + second.period(),
        }
    }

    pub fn shift(&self) -> usize {
        match self {
            Job::Odd { cs, .. } => cs.k(),
            Job::Even { first, .. } => first.k(),
        }
    }
}

/// Raw flag values shared by `build`, `verify` and `painleve`.
#[derive(Clone, Debug, Default)]
pub struct JobFlags {
    pub period: usize,
    pub shift: Option<usize>,
    pub case: Option<String>,
    pub params: Option<String>,
    pub alpha: Option<String>,
    pub perm: Option<String>,
}

pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid {what} entry '{}'", t.trim())))
        })
        .collect()
}

pub fn parse_alphas(s: &str) -> Result<Vec<AlphaParam>, Error> {
    let out: Vec<AlphaParam> = s
        .split(',')
        .map(|t| AlphaParam::parse(t.trim()))
        .collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err(Error::Parse("empty alpha list".into()));
    }
    for (i, a) in out.iter().enumerate() {
        if out[..i].contains(a) {
            return Err(Error::Parse(format!("duplicate alpha sample {}", String::from(a.clone()))));
        }
    }
    Ok(out)
}

/// Translations compatible with a period, or with both slots of an even case.
fn shift_candidates(periods: &[usize]) -> Vec<usize> {
    let min = periods.iter().copied().min().unwrap_or(0);
    (1..=min)
        .filter(|k| periods.iter().all(|p| (p - k) % 2 == 0))
        .collect()
}

pub fn resolve_shift(periods: &[usize], shift: Option<usize>) -> Result<usize, Error> {
    let cands = shift_candidates(periods);
    let p = periods.iter().sum();
    match shift {
        Some(k) if cands.contains(&k) => Ok(k),
        Some(k) => Err(Error::InvalidParity { p, k }),
        None if cands.len() == 1 => Ok(cands[0]),
        None if cands.is_empty() => Err(Error::InvalidParity { p, k: 0 }),
        None => Err(Error::Parse(format!(
            "--shift is ambiguous for this period, choose one of {cands:?}"
        ))),
    }
}

/// `k - 1` Okamoto lengths followed by `(λ, μ)` pairs.
pub fn structure_from_params(p: usize, k: usize, nums: &[usize]) -> Result<CyclicStructure, Error> {
    if nums.len() != p - 1 {
        return Err(Error::InvalidStructure(format!(
            "period {p} needs {} parameters, got {}",
            p - 1,
            nums.len()
        )));
    }
    let okamoto = nums[..k - 1].to_vec();
    let blocks = nums[k - 1..].chunks(2).map(|c| (c[0], c[1])).collect();
    CyclicStructure::new(k, okamoto, blocks)
}

pub fn resolve(f: &JobFlags) -> Result<Job, Error> {
    let p = f.period;
    if p == 0 {
        return Err(Error::Parse("--period must be at least 1".into()));
    }
    let nums: Vec<usize> = parse_list(f.params.as_deref().unwrap_or(""), "params")?;
    let perm = f.perm.as_deref().map(|s| parse_list(s, "perm")).transpose()?;
    if p % 2 == 1 {
        if f.case.is_some() {
            return Err(Error::EvenPeriodRequired(p));
        }
        if f.alpha.is_some() {
            return Err(Error::Parse("--alpha applies to even periods only".into()));
        }
        let k = resolve_shift(&[p], f.shift)?;
        let cs = structure_from_params(p, k, &nums)?;
        return Ok(Job::Odd { cs, perm });
    }
    let (p1, p2) = match &f.case {
        Some(c) => {
            let v: Vec<usize> = parse_list(c, "case")?;
            if v.len() != 2 || v[0] == 0 || v[1] == 0 || v[0] + v[1] != p {
                return Err(Error::Parse(format!("case '{c}' must be two positive periods summing to {p}")));
            }
            (v[0], v[1])
        }
        None if p == 2 => (1, 1),
        None => return Err(Error::Parse(format!("--case is required for period {p}"))),
    };
    let k = resolve_shift(&[p1, p2], f.shift)?;
    if nums.len() != p1 + p2 - 2 {
        return Err(Error::InvalidStructure(format!(
            "case ({p1},{p2}) needs {} parameters, got {}",
            p1 + p2 - 2,
            nums.len()
        )));
    }
    let first = structure_from_params(p1, k, &nums[..p1 - 1])?;
    let second = structure_from_params(p2, k, &nums[p1 - 1..])?;
    let alphas = match &f.alpha {
        Some(s) => parse_alphas(s)?,
        None => default_alpha_samples(),
    };
    Ok(Job::Even {
        first,
        second,
        perm,
        alphas,
    })
}
