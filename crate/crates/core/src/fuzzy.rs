//! Fuzzy subsets with exact rational grades, their predicates and level cuts.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::structure::{CrispSubset, OrderedGammaGroupoid};
use crate::verdict::{Verdict, Witness};

pub type Rational = Ratio<i64>;

/// A membership grade: an exact rational in `[0, 1]`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Membership(Rational);

impl Membership {
    pub const ZERO: Membership = Membership(Ratio::new_raw(0, 1));
    pub const ONE: Membership = Membership(Ratio::new_raw(1, 1));

    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value > Rational::one() {
            return Err(Error::InvalidGrade(value.to_string()));
        }
        Ok(Membership(value))
    }

    /// `p/q`; panics unless `0 <= p/q <= 1`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Membership::new(Rational::new(p, q)).expect("grade in [0,1]")
    }

    pub fn value(self) -> Rational {
        self.0
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(self, other: Membership) -> Membership {
        Membership((self.0 + other.0) / 2)
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parses a rational written `p` or `p/q` with unsigned decimal digits.
/// Decimal fractions and signs are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidGrade(s.to_string());
    let digits = |t: &str| -> Result<i64> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<i64>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(digits(s)?)),
        Some((p, q)) => {
            let q = digits(q)?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(digits(p)?, q))
        }
    }
}

impl FromStr for Membership {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = parse_rational(s)?;
        Membership::new(value).map_err(|_| Error::InvalidGrade(s.to_string()))
    }
}

/// A total map from a carrier into `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzySubset {
    carrier: Arc<[String]>,
    grades: Vec<Membership>,
}

impl FuzzySubset {
    pub fn new(carrier: Arc<[String]>, grades: Vec<Membership>) -> Result<Self> {
        if carrier.len() != grades.len() {
            return Err(Error::CarrierMismatch);
        }
        Ok(FuzzySubset { carrier, grades })
    }

    pub fn constant(carrier: Arc<[String]>, grade: Membership) -> Self {
        let grades = vec![grade; carrier.len()];
        FuzzySubset { carrier, grades }
    }

    /// Characteristic function: members graded 1, the rest 0.
    pub fn indicator(carrier: Arc<[String]>, subset: &CrispSubset) -> Self {
        let grades = (0..carrier.len())
            .map(|i| {
                if subset.contains(i) {
                    Membership::ONE
                } else {
                    Membership::ZERO
                }
            })
            .collect();
        FuzzySubset { carrier, grades }
    }

    pub fn carrier(&self) -> &Arc<[String]> {
        &self.carrier
    }

    pub fn grades(&self) -> &[Membership] {
        &self.grades
    }

    #[inline]
    pub fn grade(&self, i: usize) -> Membership {
        self.grades[i]
    }

    /// True if this subset is defined over the carrier of `structure`.
    pub fn is_over(&self, structure: &OrderedGammaGroupoid) -> bool {
        Arc::ptr_eq(&self.carrier, structure.elements()) || *self.carrier == **structure.elements()
    }

    /// Pointwise `self <= other`.
    pub fn is_below(&self, other: &FuzzySubset) -> bool {
        self.grades.len() == other.grades.len()
            && self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b)
    }

    /// `{x | grade(x) >= t}` for a threshold already known to lie in `[0, 1]`.
    pub fn cut(&self, t: Membership) -> CrispSubset {
        CrispSubset::from_mask(self.grades.iter().map(|&g| g >= t).collect())
    }
}

fn check_over(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<()> {
    if mu.is_over(g) {
        Ok(())
    } else {
        Err(Error::CarrierMismatch)
    }
}

/// The level subset `{x | μ(x) >= t}`; `t` must lie in `[0, 1]`.
pub fn level_cut(mu: &FuzzySubset, t: Rational) -> Result<CrispSubset> {
    let t = Membership::new(t).map_err(|_| Error::ThresholdOutOfRange(t.to_string()))?;
    Ok(mu.cut(t))
}

/// Distinct grades of `μ`, ascending. Level cuts are constant on each
/// interval `(v_i, v_{i+1}]` between consecutive values.
pub fn membership_image(mu: &FuzzySubset) -> Vec<Membership> {
    let mut image = mu.grades.clone();
    image.sort_unstable();
    image.dedup();
    image
}

/// Thresholds sufficient to decide "for every `t`" statements about cuts:
/// every image value, plus (when the maximum is below 1) one point above the
/// maximum where the cut is empty.
pub fn decisive_thresholds(mu: &FuzzySubset) -> Vec<Membership> {
    let mut ts = membership_image(mu);
    if let Some(&max) = ts.last() {
        if max < Membership::ONE {
            ts.push(max.midpoint(Membership::ONE));
        }
    }
    ts
}

fn product(g: &OrderedGammaGroupoid, x: usize, gamma: usize, y: usize) -> Witness {
    Witness::Product {
        x: g.element_name(x).into(),
        gamma: g.gamma_name(gamma).into(),
        y: g.element_name(y).into(),
    }
}

/// Scans all `(x, γ, y)` lexicographically and returns the first where `ok` fails.
fn scan_products(
    g: &OrderedGammaGroupoid,
    mut ok: impl FnMut(usize, usize, usize) -> bool,
) -> Option<Witness> {
    let n = g.size();
    for x in 0..n {
        for gamma in 0..g.gamma_count() {
            for y in 0..n {
                if !ok(x, gamma, y) {
                    return Some(product(g, x, gamma, y));
                }
            }
        }
    }
    None
}

/// `x <= y` implies `μ(x) >= μ(y)`.
fn antitone_violation(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Option<Witness> {
    g.order()
        .strict_pairs()
        .find(|&(x, y)| mu.grade(x) < mu.grade(y))
        .map(|(x, y)| Witness::Order {
            lower: g.element_name(x).into(),
            upper: g.element_name(y).into(),
        })
}

/// `μ(x γ y) >= μ(y)` and `μ` antitone.
pub fn is_fuzzy_left_ideal(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    check_over(g, mu)?;
    let w = scan_products(g, |x, c, y| mu.grade(g.op(x, c, y)) >= mu.grade(y))
        .or_else(|| antitone_violation(g, mu));
    Ok(Verdict::from_witness("fuzzy-left-ideal", w))
}

/// `μ(x γ y) >= μ(x)` and `μ` antitone.
pub fn is_fuzzy_right_ideal(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    check_over(g, mu)?;
    let w = scan_products(g, |x, c, y| mu.grade(g.op(x, c, y)) >= mu.grade(x))
        .or_else(|| antitone_violation(g, mu));
    Ok(Verdict::from_witness("fuzzy-right-ideal", w))
}

/// Both one-sided conditions, cross-checked against the single condition
/// `μ(x γ y) >= max{μ(x), μ(y)}` plus antitonicity.
pub fn is_fuzzy_ideal(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    let left = is_fuzzy_left_ideal(g, mu)?;
    let verdict = if left.failed() {
        left
    } else {
        is_fuzzy_right_ideal(g, mu)?
    }
    .relabel("fuzzy-ideal");

    let by_max = scan_products(g, |x, c, y| {
        mu.grade(g.op(x, c, y)) >= mu.grade(x).max(mu.grade(y))
    })
    .or_else(|| antitone_violation(g, mu));
    if by_max.is_none() != verdict.passed() {
        return Err(Error::InternalInconsistency(format!(
            "one-sided fuzzy ideal checks ({}) disagree with the max characterization",
            verdict
        )));
    }
    Ok(verdict)
}

/// `μ(x γ y) <= max{μ(x), μ(y)}`.
pub fn is_fuzzy_prime(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    check_over(g, mu)?;
    let w = scan_products(g, |x, c, y| {
        mu.grade(g.op(x, c, y)) <= mu.grade(x).max(mu.grade(y))
    });
    Ok(Verdict::from_witness("fuzzy-prime", w))
}

/// `μ(x) >= μ(x γ x)`.
pub fn is_fuzzy_semiprime(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    check_over(g, mu)?;
    for x in 0..g.size() {
        for gamma in 0..g.gamma_count() {
            if mu.grade(x) < mu.grade(g.op(x, gamma, x)) {
                return Ok(Verdict::fail(
                    "fuzzy-semiprime",
                    Witness::Square {
                        x: g.element_name(x).into(),
                        gamma: g.gamma_name(gamma).into(),
                    },
                ));
            }
        }
    }
    Ok(Verdict::pass("fuzzy-semiprime"))
}

/// Fuzzy ideal and fuzzy prime.
pub fn is_fuzzy_prime_ideal(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    let ideal = is_fuzzy_ideal(g, mu)?;
    let v = if ideal.failed() { ideal } else { is_fuzzy_prime(g, mu)? };
    Ok(v.relabel("fuzzy-prime-ideal"))
}

/// Fuzzy ideal and fuzzy semiprime.
pub fn is_fuzzy_semiprime_ideal(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    let ideal = is_fuzzy_ideal(g, mu)?;
    let v = if ideal.failed() {
        ideal
    } else {
        is_fuzzy_semiprime(g, mu)?
    };
    Ok(v.relabel("fuzzy-semiprime-ideal"))
}

/// For a fuzzy prime ideal, `μ(x γ y) = max{μ(x), μ(y)}` everywhere.
///
/// Vacuous when `μ` is not a fuzzy prime ideal. A failure here means the
/// predicates above are inconsistent with each other.
pub fn prime_ideal_equality(g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
    const CLAIM: &str = "prime-ideal-equality";
    if !is_fuzzy_prime_ideal(g, mu)?.passed() {
        return Ok(Verdict::vacuous(CLAIM));
    }
    let w = scan_products(g, |x, c, y| {
        mu.grade(g.op(x, c, y)) == mu.grade(x).max(mu.grade(y))
    });
    Ok(Verdict::from_witness(CLAIM, w))
}
