use crate::error::Result;
use crate::fuzzy::{membership_image, FuzzySubset};
use crate::product::{direct_square, fuzzy_product};
use crate::structure::OrderedGammaGroupoid;
use crate::verdict::{Verdict, Witness};

use super::level::LevelKind;
use super::{Claim, ClaimId, ClaimReport};

/// One checked branch of a product claim, e.g. the "left" half of T11.
#[derive(Debug, Clone, Copy)]
pub struct Branch {
    pub label: Option<&'static str>,
    pub kind: LevelKind,
}

const fn branch(label: &'static str, kind: LevelKind) -> Branch {
    Branch {
        label: Some(label),
        kind,
    }
}

const fn only(kind: LevelKind) -> Branch {
    Branch { label: None, kind }
}

fn label(id: ClaimId, b: &Branch) -> String {
    match b.label {
        Some(l) => format!("{id}.{l}"),
        None => id.to_string(),
    }
}

fn hypotheses_hold(
    kind: LevelKind,
    g: &OrderedGammaGroupoid,
    mu: &FuzzySubset,
    sigma: &FuzzySubset,
) -> Result<bool> {
    Ok(kind.fuzzy(g, mu)?.passed() && kind.fuzzy(g, sigma)?.passed())
}

/// "If μ and σ have fuzzy property P on M, then μ × σ has P on M × M."
pub struct ProductInheritance {
    id: ClaimId,
    branches: &'static [Branch],
}

/// "If μ and σ have fuzzy property P, every nonempty level cut of μ × σ has
/// the crisp property P on M × M."
pub struct ProductLevelCuts {
    id: ClaimId,
    branches: &'static [Branch],
}

impl ProductInheritance {
    pub fn t11() -> Self {
        const B: &[Branch] = &[branch("left", LevelKind::Left), branch("right", LevelKind::Right)];
        ProductInheritance { id: ClaimId::T11, branches: B }
    }
    pub fn t12() -> Self {
        const B: &[Branch] = &[only(LevelKind::Ideal)];
        ProductInheritance { id: ClaimId::T12, branches: B }
    }
    pub fn l13() -> Self {
        const B: &[Branch] = &[only(LevelKind::PrimeSubset)];
        ProductInheritance { id: ClaimId::L13, branches: B }
    }
    pub fn t14() -> Self {
        const B: &[Branch] = &[only(LevelKind::PrimeIdeal)];
        ProductInheritance { id: ClaimId::T14, branches: B }
    }
    pub fn l15() -> Self {
        const B: &[Branch] = &[only(LevelKind::SemiprimeSubset)];
        ProductInheritance { id: ClaimId::L15, branches: B }
    }
    pub fn t16() -> Self {
        const B: &[Branch] = &[only(LevelKind::SemiprimeIdeal)];
        ProductInheritance { id: ClaimId::T16, branches: B }
    }
}

impl ProductLevelCuts {
    pub fn c17() -> Self {
        const B: &[Branch] = &[
            branch("left", LevelKind::Left),
            branch("right", LevelKind::Right),
            branch("ideal", LevelKind::Ideal),
        ];
        ProductLevelCuts { id: ClaimId::C17, branches: B }
    }
    pub fn c18() -> Self {
        const B: &[Branch] = &[
            branch("prime", LevelKind::PrimeIdeal),
            branch("semiprime", LevelKind::SemiprimeIdeal),
        ];
        ProductLevelCuts { id: ClaimId::C18, branches: B }
    }
}

impl Claim for ProductInheritance {
    fn id(&self) -> ClaimId {
        self.id
    }

    fn takes_pair(&self) -> bool {
        true
    }

    fn check(
        &self,
        g: &OrderedGammaGroupoid,
        mu: &FuzzySubset,
        sigma: &FuzzySubset,
    ) -> Result<ClaimReport> {
        let mut square = None;
        let mut verdicts = Vec::with_capacity(self.branches.len());
        for b in self.branches {
            let label = label(self.id, b);
            if !hypotheses_hold(b.kind, g, mu, sigma)? {
                verdicts.push(Verdict::vacuous(label));
                continue;
            }
            if square.is_none() {
                square = Some((direct_square(g)?, fuzzy_product(mu, sigma)?));
            }
            let (sq, prod) = square.as_ref().unwrap();
            verdicts.push(b.kind.fuzzy(sq.structure(), prod)?.relabel(label));
        }
        Ok(ClaimReport::new(self.id, verdicts))
    }
}

impl Claim for ProductLevelCuts {
    fn id(&self) -> ClaimId {
        self.id
    }

    fn takes_pair(&self) -> bool {
        true
    }

    fn check(
        &self,
        g: &OrderedGammaGroupoid,
        mu: &FuzzySubset,
        sigma: &FuzzySubset,
    ) -> Result<ClaimReport> {
        let mut square = None;
        let mut verdicts = Vec::with_capacity(self.branches.len());
        for b in self.branches {
            let label = label(self.id, b);
            if !hypotheses_hold(b.kind, g, mu, sigma)? {
                verdicts.push(Verdict::vacuous(label));
                continue;
            }
            if square.is_none() {
                square = Some((direct_square(g)?, fuzzy_product(mu, sigma)?));
            }
            let (sq, prod) = square.as_ref().unwrap();
            let mut witness = None;
            for t in membership_image(prod) {
                let cut = prod.cut(t);
                if let Some(v) = b.kind.crisp(sq.structure(), &cut)? {
                    if let Some(w) = v.witness() {
                        witness = Some(Witness::AtLevel {
                            t,
                            inner: Box::new(w.clone()),
                        });
                        break;
                    }
                }
            }
            verdicts.push(Verdict::from_witness(label, witness));
        }
        Ok(ClaimReport::new(self.id, verdicts))
    }
}
