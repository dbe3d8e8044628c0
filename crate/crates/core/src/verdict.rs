//! Outcomes of predicate and claim checks.

use std::fmt;

use crate::fuzzy::Membership;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// The hypotheses of an implication did not hold, so there was nothing to check.
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        })
    }
}

/// A concrete assignment demonstrating a violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The product `x γ y` violates the condition.
    Product { x: String, gamma: String, y: String },
    /// The square `x γ x` violates the condition.
    Square { x: String, gamma: String },
    /// The comparable pair `lower <= upper` violates the condition.
    Order { lower: String, upper: String },
    /// `a γ (b μ c) != (a γ b) μ c`.
    Associativity {
        a: String,
        gamma: String,
        b: String,
        mu: String,
        c: String,
    },
    /// The level cut at `t` violates a crisp predicate.
    AtLevel { t: Membership, inner: Box<Witness> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Product { x, gamma, y } => write!(f, "({x},{gamma},{y})"),
            Witness::Square { x, gamma } => write!(f, "({x},{gamma})"),
            Witness::Order { lower, upper } => write!(f, "{lower}<={upper}"),
            Witness::Associativity { a, gamma, b, mu, c } => {
                write!(f, "({a},{gamma},{b},{mu},{c})")
            }
            Witness::AtLevel { t, inner } => write!(f, "t={t}:{inner}"),
        }
    }
}

/// Result of one predicate or one branch of a claim.
///
/// A witness is present exactly when the status is [`Status::Fail`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    claim: String,
    status: Status,
    witness: Option<Witness>,
}

impl Verdict {
    pub fn pass(claim: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn vacuous(claim: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            status: Status::Vacuous,
            witness: None,
        }
    }

    pub fn fail(claim: impl Into<String>, witness: Witness) -> Self {
        Verdict {
            claim: claim.into(),
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(claim: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Verdict::pass(claim),
            Some(w) => Verdict::fail(claim, w),
        }
    }

    pub fn claim(&self) -> &str {
        &self.claim
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn relabel(mut self, claim: impl Into<String>) -> Self {
        self.claim = claim.into();
        self
    }
}

impl fmt::Display for Verdict {
    /// `PASS|FAIL|VACUOUS <claim> [witness=<...>]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.claim)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}
