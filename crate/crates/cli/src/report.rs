//! Serializable command outputs and their text and LaTeX renderings.

use std::fmt::Write;

use dchain_core::acceptance::CriterionOutcome;
use dchain_core::algebra::rational::serde_opt_str;
use dchain_core::{
    format_rational, latex, parse_rational, ChainSolution, CyclicStructure, Degeneracy, Error, FlipChain,
    MayaDiagram, PIVInstance, PVInstance, PainleveReport, Rational, RationalFunction, UniversalCharacter, VerificationReport,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

pub trait Render: Serialize {
    fn text(&self) -> String;
    fn latex(&self) -> String;

    fn render(&self, format: Format) -> Result<String, Error> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Parse(e.to_string()))?;
                s.push('\n');
                s
            }
            Format::Text => self.text(),
            Format::Latex => self.latex(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

impl ErrorReport {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        ErrorReport {
            error: ErrorBody {
                kind: kind.into(),
                message: message.into(),
            },
        }
    }
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        ErrorReport::new(e.kind(), e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumEntry {
    pub structure: CyclicStructure,
    pub diagram: MayaDiagram,
    pub degeneracy: Degeneracy,
    pub flip_chain: Option<FlipChain>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumReport {
    pub period: usize,
    pub shift: usize,
    pub bound: usize,
    pub count: usize,
    pub structures: Vec<EnumEntry>,
}

fn levels(c: &Option<FlipChain>) -> String {
    match c {
        Some(c) => {
            let items: Vec<String> = c.flips.iter().map(|f| format!("{}{}", f.level, f.sign)).collect();
            items.join(" ")
        }
        None => "-".into(),
    }
}

impl Render for EnumReport {
    fn text(&self) -> String {
        let mut s = format!(
            "period {} shift {} bound {}: {} structures\n",
            self.period, self.shift, self.bound, self.count
        );
        for e in &self.structures {
            let _ = writeln!(
                s,
                "{}  diagram {}  {:?}  chain {}",
                e.structure,
                e.diagram,
                e.degeneracy,
                levels(&e.flip_chain)
            );
        }
        s
    }

    fn latex(&self) -> String {
        let mut s = String::from("\\begin{array}{lll}\n");
        for e in &self.structures {
            let _ = writeln!(
                s,
                "{} & {} & {} \\\\",
                latex::structure(&e.structure),
                latex::maya(&e.diagram),
                levels(&e.flip_chain)
            );
        }
        s.push_str("\\end{array}\n");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub period: usize,
    pub shift: usize,
    /// Starting diagram, with an empty second slot for odd periods.
    pub seed: UniversalCharacter,
    pub solutions: Vec<ChainSolution>,
}

fn alpha_tag(a: &Option<Rational>) -> String {
    a.as_ref().map_or(String::new(), |a| format!(" alpha={}", format_rational(a)))
}

fn w_name(sol: &ChainSolution) -> &'static str {
    match sol.variable() {
        dchain_core::VariableMap::Linear => "w",
        dchain_core::VariableMap::Square => "v",
    }
}

fn var_name(sol: &ChainSolution) -> &'static str {
    match sol.variable() {
        dchain_core::VariableMap::Linear => "x",
        dchain_core::VariableMap::Square => "z",
    }
}

impl Render for BuildReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for sol in &self.solutions {
            let _ = writeln!(
                s,
                "period {} delta {}{}",
                sol.period,
                format_rational(&sol.delta),
                alpha_tag(&sol.alpha)
            );
            for (i, w) in sol.reduced_terms().unwrap_or_default().iter().enumerate() {
                let _ = writeln!(s, "  {}_{} = {}", w_name(sol), i + 1, w);
            }
        }
        s
    }

    fn latex(&self) -> String {
        let mut s = String::new();
        for sol in &self.solutions {
            let var = var_name(sol);
            let mut uc = self.seed.clone();
            for (i, w) in sol.ladder.iter().enumerate() {
                if i > 0 {
                    let f = sol.chain_labels.flips[i - 1];
                    uc = uc.flip(f.slot, f.level);
                }
                let label = match sol.variable() {
                    dchain_core::VariableMap::Linear => latex::hermite_label(&uc.first),
                    dchain_core::VariableMap::Square => {
                        format!("\\mathcal{{L}}^{{{}}}(z)", latex::universal_character(&uc))
                    }
                };
                let _ = writeln!(s, "{label} = {}", latex::polynomial(&w.poly, "z"));
            }
            for (i, w) in sol.reduced_terms().unwrap_or_default().iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{}_{{{}}}({var}) = {}",
                    w_name(sol),
                    i + 1,
                    latex::rational_function(w, var)
                );
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCheck {
    #[serde(with = "serde_opt_str")]
    pub alpha: Option<Rational>,
    pub report: VerificationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PainleveEntry {
    #[serde(with = "serde_opt_str")]
    pub alpha: Option<Rational>,
    pub first_flip: Option<i64>,
    pub order: Option<Vec<i64>>,
    pub report: Option<PainleveReport>,
    pub error: Option<ErrorBody>,
}

impl PainleveEntry {
    pub fn passed(&self) -> bool {
        self.report.as_ref().is_none_or(|r| r.residual_zero)
    }

    fn text(&self) -> String {
        let mut head = String::new();
        if let Some(a) = &self.alpha {
            let _ = write!(head, " alpha={}", format_rational(a));
        }
        if let Some(f) = self.first_flip {
            let _ = write!(head, " first_flip={f}");
        }
        match (&self.report, &self.error) {
            (Some(r), _) => {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let sol = RationalFunction::new(r.solution_num.clone(), r.solution_den.clone())
                    .map_or_else(|_| "?".into(), |f| f.to_string());
                format!(
                    "{}{head} {} residual_zero={}\n  solution = {sol}\n",
                    r.equation,
                    params.join(" "),
                    r.residual_zero
                )
            }
            (None, Some(e)) => format!("error{head}: {} {}\n", e.kind, e.message),
            (None, None) => String::new(),
        }
    }

    fn latex(&self) -> String {
        match self.report.as_ref().and_then(|r| instance_latex(r).ok()) {
            Some(s) => s + "\n",
            None => String::new(),
        }
    }
}

fn param(r: &PainleveReport, key: &str) -> Result<Rational, Error> {
    let s = r
        .params
        .get(key)
        .ok_or_else(|| Error::Parse(format!("missing parameter {key}")))?;
    parse_rational(s)
}

/// LaTeX of the instance stored in a report.
pub fn instance_latex(r: &PainleveReport) -> Result<String, Error> {
    let f = RationalFunction::new(r.solution_num.clone(), r.solution_den.clone())?;
    match r.equation.as_str() {
        "PIV" => Ok(latex::piv(&PIVInstance {
            u: f,
            c_sq: param(r, "c_sq")?,
            a: param(r, "a")?,
            b: param(r, "b")?,
        })),
        "PV" => Ok(latex::pv(&PVInstance {
            y: f,
            a: param(r, "a")?,
            b: param(r, "b")?,
            c: param(r, "c")?,
            d: param(r, "d")?,
        })),
        other => Err(Error::Parse(format!("unknown equation {other}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub period: usize,
    pub shift: usize,
    pub chains: Vec<ChainCheck>,
    pub painleve: Vec<PainleveEntry>,
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{} period {} shift {}\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.period,
            self.shift
        );
        for c in &self.chains {
            let _ = writeln!(
                s,
                "chain{} delta={} sum_rule={} passed={}",
                alpha_tag(&c.alpha),
                format_rational(&c.report.delta),
                c.report.sum_rule,
                c.report.passed()
            );
            for (i, e) in c.report.equations.iter().enumerate() {
                let value = e.value.as_ref().map_or("nonconstant".into(), format_rational);
                let _ = writeln!(
                    s,
                    "  eq{} value={value} expected={} match={}",
                    i + 1,
                    format_rational(&e.expected),
                    e.matched
                );
            }
        }
        for p in &self.painleve {
            s.push_str(&p.text());
        }
        s
    }

    fn latex(&self) -> String {
        let mut s = String::new();
        for c in &self.chains {
            for (i, e) in c.report.equations.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "\\varepsilon_{{{}}} = {}",
                    i + 1,
                    e.value.as_ref().map_or("?".into(), latex::rational)
                );
            }
        }
        for p in &self.painleve {
            s.push_str(&p.latex());
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PainleveOutput {
    pub passed: bool,
    pub period: usize,
    pub shift: usize,
    pub coincides_with_gh: Option<bool>,
    pub entries: Vec<PainleveEntry>,
}

impl Render for PainleveOutput {
    fn text(&self) -> String {
        let mut s = format!(
            "{} period {} shift {}\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.period,
            self.shift
        );
        if let Some(c) = self.coincides_with_gh {
            let _ = writeln!(s, "coincides_with_gh={c}");
        }
        for e in &self.entries {
            s.push_str(&e.text());
        }
        s
    }

    fn latex(&self) -> String {
        self.entries.iter().map(PainleveEntry::latex).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub criteria: Vec<CriterionOutcome>,
}

impl Render for SelftestReport {
    fn text(&self) -> String {
        let mut s: String = self.criteria.iter().map(|c| c.line() + "\n").collect();
        let failed = self.criteria.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            s,
            "selftest: {} passed, {failed} failed",
            self.criteria.len() - failed
        );
        s
    }

    fn latex(&self) -> String {
        let mut s = String::from("\\begin{tabular}{lll}\n");
        for c in &self.criteria {
            let _ = writeln!(
                s,
                "{} & {} & {} \\\\",
                c.id,
                c.name,
                if c.passed { "pass" } else { "fail" }
            );
        }
        s.push_str("\\end{tabular}\n");
        s
    }
}
