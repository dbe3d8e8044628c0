//! Crisp predicates on structures and their subsets.
//!
//! Every scan visits elements in carrier order and gammas in declaration
//! order, so the reported witness is the lexicographically first violation.

use crate::error::{Error, Result};
use crate::structure::{CrispSubset, OrderedGammaGroupoid};
use crate::verdict::{Verdict, Witness};

fn check_carrier(g: &OrderedGammaGroupoid, a: &CrispSubset) -> Result<()> {
    if a.carrier_size() != g.size() {
        return Err(Error::CarrierMismatch);
    }
    Ok(())
}

fn product(g: &OrderedGammaGroupoid, x: usize, gamma: usize, y: usize) -> Witness {
    Witness::Product {
        x: g.element_name(x).to_string(),
        gamma: g.gamma_name(gamma).to_string(),
        y: g.element_name(y).to_string(),
    }
}

/// `a γ (b μ c) = (a γ b) μ c` for all elements and gamma pairs.
pub fn is_gamma_semigroup(g: &OrderedGammaGroupoid) -> Verdict {
    let n = g.size();
    let k = g.gamma_count();
    for a in 0..n {
        for gamma in 0..k {
            for b in 0..n {
                for mu in 0..k {
                    for c in 0..n {
                        if g.op(a, gamma, g.op(b, mu, c)) != g.op(g.op(a, gamma, b), mu, c) {
                            return Verdict::fail(
                                "gamma-semigroup",
                                Witness::Associativity {
                                    a: g.element_name(a).into(),
                                    gamma: g.gamma_name(gamma).into(),
                                    b: g.element_name(b).into(),
                                    mu: g.gamma_name(mu).into(),
                                    c: g.element_name(c).into(),
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    Verdict::pass("gamma-semigroup")
}

/// First `x <= y` with `y ∈ A` and `x ∉ A`.
fn down_closure_violation(g: &OrderedGammaGroupoid, a: &CrispSubset) -> Option<Witness> {
    g.order()
        .strict_pairs()
        .find(|&(x, y)| a.contains(y) && !a.contains(x))
        .map(|(x, y)| Witness::Order {
            lower: g.element_name(x).into(),
            upper: g.element_name(y).into(),
        })
}

fn absorption_violation(
    g: &OrderedGammaGroupoid,
    a: &CrispSubset,
    from_left: bool,
) -> Option<Witness> {
    let n = g.size();
    for x in 0..n {
        for gamma in 0..g.gamma_count() {
            for y in 0..n {
                let anchor = if from_left { y } else { x };
                if a.contains(anchor) && !a.contains(g.op(x, gamma, y)) {
                    return Some(product(g, x, gamma, y));
                }
            }
        }
    }
    None
}

/// `M Γ A ⊆ A` and `A` closed downward. `A` must be nonempty.
pub fn is_left_ideal(g: &OrderedGammaGroupoid, a: &CrispSubset) -> Result<Verdict> {
    check_carrier(g, a)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let w = absorption_violation(g, a, true).or_else(|| down_closure_violation(g, a));
    Ok(Verdict::from_witness("left-ideal", w))
}

/// `A Γ M ⊆ A` and `A` closed downward. `A` must be nonempty.
pub fn is_right_ideal(g: &OrderedGammaGroupoid, a: &CrispSubset) -> Result<Verdict> {
    check_carrier(g, a)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let w = absorption_violation(g, a, false).or_else(|| down_closure_violation(g, a));
    Ok(Verdict::from_witness("right-ideal", w))
}

/// Left and right ideal; the witness comes from the left side first.
pub fn is_ideal(g: &OrderedGammaGroupoid, a: &CrispSubset) -> Result<Verdict> {
    let left = is_left_ideal(g, a)?;
    if left.failed() {
        return Ok(left.relabel("ideal"));
    }
    Ok(is_right_ideal(g, a)?.relabel("ideal"))
}

/// `x γ y ∈ T` implies `x ∈ T` or `y ∈ T`. The empty set passes.
pub fn is_prime_subset(g: &OrderedGammaGroupoid, t: &CrispSubset) -> Result<Verdict> {
    check_carrier(g, t)?;
    let n = g.size();
    for x in 0..n {
        for gamma in 0..g.gamma_count() {
            for y in 0..n {
                if t.contains(g.op(x, gamma, y)) && !t.contains(x) && !t.contains(y) {
                    return Ok(Verdict::fail("prime", product(g, x, gamma, y)));
                }
            }
        }
    }
    Ok(Verdict::pass("prime"))
}

/// `x γ x ∈ T` implies `x ∈ T`. The empty set passes.
pub fn is_semiprime_subset(g: &OrderedGammaGroupoid, t: &CrispSubset) -> Result<Verdict> {
    check_carrier(g, t)?;
    for x in 0..g.size() {
        for gamma in 0..g.gamma_count() {
            if t.contains(g.op(x, gamma, x)) && !t.contains(x) {
                return Ok(Verdict::fail(
                    "semiprime",
                    Witness::Square {
                        x: g.element_name(x).into(),
                        gamma: g.gamma_name(gamma).into(),
                    },
                ));
            }
        }
    }
    Ok(Verdict::pass("semiprime"))
}
