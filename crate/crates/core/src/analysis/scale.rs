//! Recovering a scale `s^{-ℓN}` from an infinite sparse unary set.
//!
//! The set is differentiated until its accumulation points are finite. Near
//! one accumulation point `a` the set looks like
//! `a ± ∪_i { c_i r^{-δ_i n} : n ≥ 0 }`; after translating, reflecting and
//! scaling the multipliers become positive integers `b_i`. With `r = s^k`,
//! `s` not a perfect power, the set `B = { x ∈ (0,1) : b_i x ∈ A ∀i }` is
//! `s^{-T}` for an eventually periodic `T ⊆ N`, and `ℓ` is the least eventual
//! period of `T`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::analysis::cantor_bendixson::cb_derivative;
use crate::error::{Error, Result};
use crate::expsum::ExpSumDescription;
use crate::rational::Rational;

/// `T ∋ t` for `t ≥ offset` with `t ≡ offset (mod modulus)`, coming from
/// `b_i / b_j = s^offset` and the `j`-th ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Progression {
    pub i: usize,
    pub j: usize,
    pub offset: i64,
    pub modulus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleTrace {
    /// Always 1: the input is unary.
    pub coordinate: usize,
    pub derivatives: usize,
    pub accumulation: Rational,
    /// Whether the points near `accumulation` all lie to its left.
    pub reflected: bool,
    /// Overall factor applied to the translated multipliers.
    pub scale: Rational,
    /// `r = base^power` with `base` not a perfect power.
    pub base: u32,
    pub power: u32,
    /// Integer multipliers `b_i` with their steps in powers of `base`.
    pub multipliers: Vec<(BigInt, u64)>,
    pub progressions: Vec<Progression>,
    /// `T` is periodic from here on.
    pub start: u64,
    /// Membership of `start, start + 1, ...` in `T` over one full period.
    pub window: Vec<bool>,
    pub ell: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleWitness {
    pub ell: u64,
    pub trace: ScaleTrace,
}

/// `r = s^k` with `k` maximal.
pub fn perfect_power(r: u32) -> (u32, u32) {
    let mut k = 32 - r.leading_zeros();
    while k > 1 {
        let s = libm::round(libm::pow(r as f64, 1.0 / k as f64)) as u64;
        for c in [s.saturating_sub(1), s, s + 1] {
            if c >= 2 && c.checked_pow(k) == Some(r as u64) {
                return (c as u32, k);
            }
        }
        k -= 1;
    }
    (r, 1)
}

/// `e` with `q = s^e`, if any.
fn log_exact(q: &Rational, s: u32) -> Option<i64> {
    if !q.is_positive() {
        return None;
    }
    let strip = |x: &BigInt| -> Option<i64> {
        let mut x = x.clone();
        let mut e = 0;
        while x > BigInt::one() {
            let (d, m) = x.div_rem(&BigInt::from(s));
            if !m.is_zero() {
                return None;
            }
            x = d;
            e += 1;
        }
        Some(e)
    };
    if q.numer().is_one() {
        strip(q.denom()).map(|e| -e)
    } else if q.denom().is_one() {
        strip(q.numer())
    } else {
        None
    }
}

impl ScaleTrace {
    pub fn in_t(&self, t: u64) -> bool {
        (0..self.multipliers.len()).all(|i| {
            self.progressions.iter().any(|p| {
                p.i == i && t as i64 >= p.offset && (t as i64 - p.offset) % p.modulus as i64 == 0
            })
        })
    }

    /// Whether `b_i x` lies on some ray `b_j s^{-m_j N}`.
    fn on_rays(&self, y: &Rational) -> bool {
        self.multipliers.iter().any(|(b, m)| {
            let q = y / Rational::from(b.clone());
            matches!(log_exact(&q, self.base), Some(e) if e <= 0 && (-e) % *m as i64 == 0)
        })
    }

    /// `B ∩ [s^-height, 1)`, computed directly from the rays: every element of
    /// `B` has the form `b_j s^{-m_j n} / b_i`.
    pub fn reconstruct_b(&self, height: u64) -> BTreeSet<Rational> {
        let s = self.base;
        let floor = crate::rational::pow(s, -(height as i64));
        let extra = self
            .multipliers
            .iter()
            .map(|(b, _)| b.bits())
            .max()
            .unwrap_or(0);
        let mut out = BTreeSet::new();
        for (bi, _) in &self.multipliers {
            for (bj, m) in &self.multipliers {
                for n in 0..=(height + extra) / m {
                    let x = Rational::new(bj.clone(), bi.clone())
                        * crate::rational::pow(s, -((m * n) as i64));
                    if x >= Rational::one() || x < floor {
                        continue;
                    }
                    let ok = self
                        .multipliers
                        .iter()
                        .all(|(b, _)| self.on_rays(&(&x * Rational::from(b.clone()))));
                    if ok {
                        out.insert(x);
                    }
                }
            }
        }
        out
    }

    /// `{ s^-t : 1 ≤ t ≤ height, t ∈ T }`.
    pub fn predicted_b(&self, height: u64) -> BTreeSet<Rational> {
        (1..=height)
            .filter(|&t| self.in_t(t))
            .map(|t| crate::rational::pow(self.base, -(t as i64)))
            .collect()
    }

    /// Checks `B = s^{-T}` up to `height` and that `ℓ` is an eventual period
    /// of `T` there.
    pub fn verify(&self, height: u64) -> bool {
        let periodic = (self.start..=height).all(|t| self.in_t(t) == self.in_t(t + self.ell));
        periodic && self.reconstruct_b(height) == self.predicted_b(height)
    }
}

fn minimal_period(window: &[bool]) -> u64 {
    let n = window.len();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (0..n).all(|x| window[x] == window[(x + p) % n]))
        .unwrap_or(n) as u64
}

pub fn extract_scale(e: &ExpSumDescription) -> Result<ScaleWitness> {
    if e.arity != 1 {
        return Err(Error::Arity(e.arity));
    }
    let mut cur = e.closure();
    if cur.max_depth() <= 1 {
        return Err(Error::FiniteSet);
    }
    let mut derivatives = 0;
    let mut acc = cb_derivative(&cur);
    while acc.max_depth() > 1 {
        cur = acc;
        acc = cb_derivative(&cur);
        derivatives += 1;
    }
    // `cur` is infinite with finitely many accumulation points
    let a = acc
        .chains
        .iter()
        .map(|c| c.coeffs[0][0].clone())
        .min()
        .expect("an infinite closed set has an accumulation point");
    let rays: Vec<(Rational, u32)> = cur
        .chains
        .iter()
        .filter(|c| c.depth() == 2 && c.coeffs[0][0] == a)
        .map(|c| (c.coeffs[1][0].clone(), c.steps[0]))
        .collect();
    let reflected = !rays.iter().any(|(c, _)| c.is_positive());
    let rays: Vec<(Rational, u32)> = rays
        .into_iter()
        .map(|(c, d)| (if reflected { -c } else { c }, d))
        .filter(|(c, _)| c.is_positive())
        .collect();
    let lcm = rays
        .iter()
        .fold(BigInt::one(), |acc, (c, _)| acc.lcm(c.denom()));
    let r = e.base;
    let (s, k) = perfect_power(r);
    let mut scaled: Vec<(BigInt, u32)> = rays
        .iter()
        .map(|(c, d)| ((c * Rational::from(lcm.clone())).to_integer(), *d))
        .collect();
    // b r^{-δ n} = (b / r^{δ}) r^{-δ(n + 1)}: the set only loses finitely many points
    for (b, d) in scaled.iter_mut() {
        let unit = BigInt::from(r).pow(*d);
        while (&*b % &unit).is_zero() {
            *b /= &unit;
        }
    }
    let g = scaled.iter().fold(BigInt::zero(), |acc, (b, _)| acc.gcd(b));
    let mut multipliers: Vec<(BigInt, u64)> = scaled
        .into_iter()
        .map(|(b, d)| (b / &g, k as u64 * d as u64))
        .collect();
    multipliers.sort();
    multipliers.dedup();
    let mut progressions = Vec::new();
    for (i, (bi, _)) in multipliers.iter().enumerate() {
        for (j, (bj, m)) in multipliers.iter().enumerate() {
            if let Some(offset) = log_exact(&Rational::new(bi.clone(), bj.clone()), s) {
                progressions.push(Progression {
                    i,
                    j,
                    offset,
                    modulus: *m,
                });
            }
        }
    }
    let start = progressions
        .iter()
        .map(|p| p.offset)
        .max()
        .unwrap_or(1)
        .max(1) as u64;
    let period = multipliers.iter().fold(1u64, |acc, (_, m)| acc.lcm(m));
    let mut trace = ScaleTrace {
        coordinate: 1,
        derivatives,
        accumulation: a,
        reflected,
        scale: Rational::new(lcm, g),
        base: s,
        power: k,
        multipliers,
        progressions,
        start,
        window: Vec::new(),
        ell: 0,
    };
    trace.window = (start..start + period).map(|t| trace.in_t(t)).collect();
    trace.ell = minimal_period(&trace.window);
    Ok(ScaleWitness {
        ell: trace.ell,
        trace,
    })
}
