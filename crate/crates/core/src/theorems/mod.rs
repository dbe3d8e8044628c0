//! Claim registry and verification engine.
//!
//! Each numbered result is a [`Claim`] registered under its [`ClaimId`].
//! Claims T4 to T10 relate a fuzzy predicate to its level cuts in both
//! directions. Claims T11 to C18 state that a property of `μ` and `σ`
//! carries over to `μ × σ` on the direct square. A claim reports what is
//! definitionally true on the given instance, including for claims that are
//! false in general (L13, T14 and the prime branch of C18).

mod level;
mod product;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzySubset;
use crate::structure::OrderedGammaGroupoid;
use crate::verdict::{Status, Verdict};

pub use level::{level_characterization, LevelCharacterization, LevelKind};
pub use product::{Branch, ProductInheritance, ProductLevelCuts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    T4,
    T5,
    T6,
    L7,
    T8,
    L9,
    T10,
    T11,
    T12,
    L13,
    T14,
    L15,
    T16,
    C17,
    C18,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::T4,
        ClaimId::T5,
        ClaimId::T6,
        ClaimId::L7,
        ClaimId::T8,
        ClaimId::L9,
        ClaimId::T10,
        ClaimId::T11,
        ClaimId::T12,
        ClaimId::L13,
        ClaimId::T14,
        ClaimId::L15,
        ClaimId::T16,
        ClaimId::C17,
        ClaimId::C18,
    ];

    /// T4 to T10 are "iff" statements with a forward and a converse direction.
    pub fn is_biconditional(self) -> bool {
        self <= ClaimId::T10
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::T4 => "T4",
            ClaimId::T5 => "T5",
            ClaimId::T6 => "T6",
            ClaimId::L7 => "L7",
            ClaimId::T8 => "T8",
            ClaimId::L9 => "L9",
            ClaimId::T10 => "T10",
            ClaimId::T11 => "T11",
            ClaimId::T12 => "T12",
            ClaimId::L13 => "L13",
            ClaimId::T14 => "T14",
            ClaimId::L15 => "L15",
            ClaimId::T16 => "T16",
            ClaimId::C17 => "C17",
            ClaimId::C18 => "C18",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Converse,
    Both,
}

/// A claim plus the direction(s) to report, written `T4`, `T4.forward` or
/// `T4.converse`. Product claims only accept `forward` (or nothing).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimSelector {
    pub id: ClaimId,
    pub direction: Direction,
}

impl FromStr for ClaimSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (id, direction) = match s.split_once('.') {
            None => (s.parse()?, Direction::Both),
            Some((id, dir)) => {
                let id: ClaimId = id.parse()?;
                let direction = match dir {
                    "forward" => Direction::Forward,
                    "converse" if id.is_biconditional() => Direction::Converse,
                    "both" => Direction::Both,
                    _ => return Err(Error::UnknownClaim(s.to_string())),
                };
                (id, direction)
            }
        };
        Ok(ClaimSelector { id, direction })
    }
}

impl ClaimSelector {
    /// Keeps only the verdicts of the selected direction.
    pub fn filter(&self, report: ClaimReport) -> ClaimReport {
        if !self.id.is_biconditional() || self.direction == Direction::Both {
            return report;
        }
        let suffix = match self.direction {
            Direction::Forward => ".forward",
            _ => ".converse",
        };
        let verdicts = report
            .verdicts
            .into_iter()
            .filter(|v| v.claim().ends_with(suffix))
            .collect();
        ClaimReport::new(report.claim, verdicts)
    }
}

/// All verdicts for one claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    claim: ClaimId,
    verdicts: Vec<Verdict>,
}

impl ClaimReport {
    pub fn new(claim: ClaimId, verdicts: Vec<Verdict>) -> Self {
        assert!(!verdicts.is_empty(), "a claim report needs at least one verdict");
        ClaimReport { claim, verdicts }
    }

    pub fn claim(&self) -> ClaimId {
        self.claim
    }

    pub fn verdicts(&self) -> &[Verdict] {
        &self.verdicts
    }

    /// Fail if any verdict fails. Otherwise pass if any branch passed, or for
    /// a biconditional whose two sides are both false; vacuous if every
    /// hypothesis of an implication failed.
    pub fn status(&self) -> Status {
        if self.verdicts.iter().any(Verdict::failed) {
            Status::Fail
        } else if self.claim.is_biconditional() || self.verdicts.iter().any(Verdict::passed) {
            Status::Pass
        } else {
            Status::Vacuous
        }
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.failed())
    }
}

/// A checkable result. `sigma` is ignored by single-argument claims.
pub trait Claim: Send + Sync {
    fn id(&self) -> ClaimId;

    /// True when the claim quantifies over a pair `(μ, σ)`.
    fn takes_pair(&self) -> bool;

    fn check(
        &self,
        g: &OrderedGammaGroupoid,
        mu: &FuzzySubset,
        sigma: &FuzzySubset,
    ) -> Result<ClaimReport>;
}

/// Claims keyed by id, kept in canonical report order.
pub struct ClaimRegistry {
    claims: Vec<Box<dyn Claim>>,
}

impl ClaimRegistry {
    pub fn empty() -> Self {
        ClaimRegistry { claims: Vec::new() }
    }

    /// Every claim from T4 to C18.
    pub fn standard() -> Self {
        let mut r = ClaimRegistry::empty();
        for kind in [
            LevelKind::Left,
            LevelKind::Right,
            LevelKind::Ideal,
            LevelKind::PrimeSubset,
            LevelKind::PrimeIdeal,
            LevelKind::SemiprimeSubset,
            LevelKind::SemiprimeIdeal,
        ] {
            r.register(Box::new(LevelCharacterization::new(kind)));
        }
        r.register(Box::new(ProductInheritance::t11()));
        r.register(Box::new(ProductInheritance::t12()));
        r.register(Box::new(ProductInheritance::l13()));
        r.register(Box::new(ProductInheritance::t14()));
        r.register(Box::new(ProductInheritance::l15()));
        r.register(Box::new(ProductInheritance::t16()));
        r.register(Box::new(ProductLevelCuts::c17()));
        r.register(Box::new(ProductLevelCuts::c18()));
        r
    }

    /// Adds a claim, replacing any existing claim with the same id.
    pub fn register(&mut self, claim: Box<dyn Claim>) {
        self.claims.retain(|c| c.id() != claim.id());
        self.claims.push(claim);
        self.claims.sort_by_key(|c| c.id());
    }

    pub fn get(&self, id: ClaimId) -> Option<&dyn Claim> {
        self.claims.iter().find(|c| c.id() == id).map(|c| c.as_ref())
    }

    pub fn lookup(&self, name: &str) -> Result<&dyn Claim> {
        let id: ClaimId = name.parse()?;
        self.get(id).ok_or_else(|| Error::UnknownClaim(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Claim> {
        self.claims.iter().map(|c| c.as_ref())
    }

    /// Runs every registered claim, concurrently, returning reports in
    /// canonical order. `sigma` defaults to `mu`.
    pub fn verify_all(
        &self,
        g: &OrderedGammaGroupoid,
        mu: &FuzzySubset,
        sigma: Option<&FuzzySubset>,
    ) -> Result<Vec<ClaimReport>> {
        let sigma = sigma.unwrap_or(mu);
        self.claims
            .par_iter()
            .map(|c| c.check(g, mu, sigma))
            .collect()
    }
}

impl Default for ClaimRegistry {
    fn default() -> Self {
        ClaimRegistry::standard()
    }
}

/// Checks one product claim (T11 to C18) with the standard registry.
pub fn verify_product_claim(
    claim: ClaimId,
    g: &OrderedGammaGroupoid,
    mu: &FuzzySubset,
    sigma: &FuzzySubset,
) -> Result<ClaimReport> {
    if claim.is_biconditional() {
        return Err(Error::UnknownClaim(format!("{claim} is not a product claim")));
    }
    ClaimRegistry::standard()
        .get(claim)
        .expect("standard registry is complete")
        .check(g, mu, sigma)
}

/// [`ClaimRegistry::verify_all`] on the standard registry.
pub fn verify_all(
    g: &OrderedGammaGroupoid,
    mu: &FuzzySubset,
    sigma: Option<&FuzzySubset>,
) -> Result<Vec<ClaimReport>> {
    ClaimRegistry::standard().verify_all(g, mu, sigma)
}
