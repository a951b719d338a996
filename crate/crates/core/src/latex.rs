//! LaTeX rendering of polynomials, rational functions and Painlevé solutions.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Polynomial, Rational, RationalFunction};
use crate::maya::{CyclicStructure, MayaDiagram, UniversalCharacter};
use crate::painleve::{PIVInstance, PVInstance};

pub fn rational(q: &Rational) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
}

/// `4 z^{2} - 2`, highest degree first.
pub fn polynomial(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{i}}}"),
        };
        if i == 0 {
            out.push_str(&rational(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{} {mono}", rational(&a)));
        }
    }
    out
}

pub fn rational_function(r: &RationalFunction, var: &str) -> String {
    if r.den().is_constant() {
        return polynomial(r.num(), var);
    }
    format!("\\frac{{{}}}{{{}}}", polynomial(r.num(), var), polynomial(r.den(), var))
}

pub fn maya(d: &MayaDiagram) -> String {
    let items: Vec<String> = d.entries().iter().map(i64::to_string).collect();
    format!("\\left({}\\right)", items.join(","))
}

/// Block notation `((l|α_l)_k, ..., (λ|μ)_k)`, empty blocks omitted.
pub fn structure(cs: &CyclicStructure) -> String {
    let k = cs.k();
    let mut items: Vec<String> = cs
        .okamoto_lengths()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, a)| format!("\\left({}\\mid {a}\\right)_{{{k}}}", i + 1))
        .collect();
    items.extend(
        cs.second_type()
            .iter()
            .map(|(l, m)| format!("\\left({l}\\mid {m}\\right)_{{{k}}}")),
    );
    format!("\\left({}\\right)", items.join(","))
}

pub fn universal_character(uc: &UniversalCharacter) -> String {
    format!("{}\\otimes{}", maya(&uc.first), maya(&uc.second))
}

/// `\mathcal{H}^{(N)}(z)`.
pub fn hermite_label(d: &MayaDiagram) -> String {
    format!("\\mathcal{{H}}^{{{}}}(z)", maya(d))
}

fn sqrt_of(q: &Rational) -> String {
    if q.numer().is_one() {
        format!("\\frac{{1}}{{\\sqrt{{{}}}}}", q.denom())
    } else {
        format!("\\sqrt{{{}}}", rational(q))
    }
}

/// `y(t) = c\,u(c t)` with `u` written out in `x`.
pub fn piv(inst: &PIVInstance) -> String {
    let u = rational_function(&inst.u, "x");
    let head = if inst.c_sq.is_one() {
        "y(t) = u(t)".to_string()
    } else {
        let c = sqrt_of(&inst.c_sq);
        format!("y(t) = {c}\\, u\\!\\left({c}\\, t\\right)")
    };
    format!(
        "{head},\\quad u(x) = {u},\\quad a = {},\\ b = {}",
        rational(&inst.a),
        rational(&inst.b)
    )
}

pub fn pv(inst: &PVInstance) -> String {
    format!(
        "y(t) = {},\\quad a = {},\\ b = {},\\ c = {},\\ d = {}",
        rational_function(&inst.y, "t"),
        rational(&inst.a),
        rational(&inst.b),
        rational(&inst.c),
        rational(&inst.d)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn renders() {
        assert_eq!(rational(&rat(-3, 4)), "-\\frac{3}{4}");
        assert_eq!(polynomial(&Polynomial::from_ints(&[-2, 0, 4]), "z"), "4 z^{2} - 2");
        assert_eq!(polynomial(&Polynomial::from_ints(&[0, -1]), "z"), "-z");
        let r = RationalFunction::inverse_power(int(2), 1);
        assert_eq!(rational_function(&r, "x"), "\\frac{2}{x}");
        assert_eq!(sqrt_of(&rat(1, 3)), "\\frac{1}{\\sqrt{3}}");
        let cs = CyclicStructure::new(3, vec![1, 0], vec![(4, 2)]).unwrap();
        assert_eq!(
            structure(&cs),
            "\\left(\\left(1\\mid 1\\right)_{3},\\left(4\\mid 2\\right)_{3}\\right)"
        );
    }
}
