//! First-order definitions of sparse sets from their normal forms.
//!
//! A chain `c_0 + Σ c_i r^{-δ(n_1 + ... + n_i)}` is the set of
//! `z = c_0 + c_1 x_1 + ... + c_{d-1} x_{d-1}` with every `x_i` in
//! `D_δ = r^{-δN}` and `x_1 ≥ x_2 ≥ ... ≥ x_{d-1}`, since the partial sums
//! `δ(n_1 + ... + n_i)` are exactly the nondecreasing sequences in `δN`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::expsum::{to_exp_sum, ExpChain, ExpSumDescription};
use crate::normal_form::SparseNormalForm;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningFormula {
    /// One formula per chain, joined by `∨` in `text`.
    pub disjuncts: Vec<String>,
    pub text: String,
    /// lcm of all word lengths in the normal form.
    pub ell_l: usize,
    pub description: ExpSumDescription,
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    format!("{n}")
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn point(c: &[Rational]) -> String {
    if c.len() == 1 {
        rational::format(&c[0])
    } else {
        rational::format_vec(c)
    }
}

fn coefficient(c: &[Rational]) -> String {
    if c.len() == 1 {
        format!("({})", rational::format(&c[0]))
    } else {
        rational::format_vec(c)
    }
}

/// The formula for one chain. Chains produced by [`to_exp_sum`] use a single
/// step throughout.
pub fn chain_formula(c: &ExpChain) -> String {
    let mut terms: Vec<String> = Vec::new();
    if c.coeffs[0].iter().any(|x| !x.is_zero()) || c.depth() == 1 {
        terms.push(point(&c.coeffs[0]));
    }
    let vars: Vec<String> = (1..c.depth())
        .map(|i| format!("x{}", subscript(i)))
        .collect();
    for (ci, x) in c.coeffs[1..].iter().zip(&vars) {
        terms.push(format!("{}·{x}", coefficient(ci)));
    }
    let equation = format!("z = {}", terms.join(" + "));
    if vars.is_empty() {
        return equation;
    }
    let delta = c.steps[0];
    let mut body = equation;
    if vars.len() > 1 {
        body = format!("{body} ∧ {}", vars.join(" ≥ "));
    }
    format!("∃{}∈D_{delta} ({body})", vars.join(","))
}

pub fn defining_formula(f: &SparseNormalForm) -> DefiningFormula {
    let description = to_exp_sum(f);
    let disjuncts: Vec<String> = description.chains.iter().map(chain_formula).collect();
    let text = if disjuncts.is_empty() {
        String::from("⊥")
    } else {
        disjuncts.join(" ∨ ")
    };
    DefiningFormula {
        disjuncts,
        text,
        ell_l: f.word_length_lcm(),
        description,
    }
}
