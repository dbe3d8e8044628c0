use crate::crisp;
use crate::error::{Error, Result};
use crate::fuzzy::{self, decisive_thresholds, FuzzySubset};
use crate::structure::{CrispSubset, OrderedGammaGroupoid};
use crate::verdict::{Verdict, Witness};

use super::{Claim, ClaimId, ClaimReport};

/// The pairs of fuzzy / crisp predicates related by level cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelKind {
    Left,
    Right,
    Ideal,
    PrimeSubset,
    SemiprimeSubset,
    PrimeIdeal,
    SemiprimeIdeal,
}

impl LevelKind {
    pub const ALL: [LevelKind; 7] = [
        LevelKind::Left,
        LevelKind::Right,
        LevelKind::Ideal,
        LevelKind::PrimeSubset,
        LevelKind::SemiprimeSubset,
        LevelKind::PrimeIdeal,
        LevelKind::SemiprimeIdeal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LevelKind::Left => "left",
            LevelKind::Right => "right",
            LevelKind::Ideal => "ideal",
            LevelKind::PrimeSubset => "prime-subset",
            LevelKind::SemiprimeSubset => "semiprime-subset",
            LevelKind::PrimeIdeal => "prime-ideal",
            LevelKind::SemiprimeIdeal => "semiprime-ideal",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Ideal kinds are only defined on nonempty subsets.
    pub fn requires_nonempty(self) -> bool {
        !matches!(self, LevelKind::PrimeSubset | LevelKind::SemiprimeSubset)
    }

    /// The claim relating this kind to its level cuts.
    pub fn claim(self) -> ClaimId {
        match self {
            LevelKind::Left => ClaimId::T4,
            LevelKind::Right => ClaimId::T5,
            LevelKind::Ideal => ClaimId::T6,
            LevelKind::PrimeSubset => ClaimId::L7,
            LevelKind::PrimeIdeal => ClaimId::T8,
            LevelKind::SemiprimeSubset => ClaimId::L9,
            LevelKind::SemiprimeIdeal => ClaimId::T10,
        }
    }

    pub fn fuzzy(self, g: &OrderedGammaGroupoid, mu: &FuzzySubset) -> Result<Verdict> {
        match self {
            LevelKind::Left => fuzzy::is_fuzzy_left_ideal(g, mu),
            LevelKind::Right => fuzzy::is_fuzzy_right_ideal(g, mu),
            LevelKind::Ideal => fuzzy::is_fuzzy_ideal(g, mu),
            LevelKind::PrimeSubset => fuzzy::is_fuzzy_prime(g, mu),
            LevelKind::SemiprimeSubset => fuzzy::is_fuzzy_semiprime(g, mu),
            LevelKind::PrimeIdeal => fuzzy::is_fuzzy_prime_ideal(g, mu),
            LevelKind::SemiprimeIdeal => fuzzy::is_fuzzy_semiprime_ideal(g, mu),
        }
    }

    /// Crisp counterpart. `None` for an empty subset on an ideal kind, which
    /// the predicate does not apply to.
    pub fn crisp(self, g: &OrderedGammaGroupoid, a: &CrispSubset) -> Result<Option<Verdict>> {
        if self.requires_nonempty() && a.is_empty() {
            return Ok(None);
        }
        let v = match self {
            LevelKind::Left => crisp::is_left_ideal(g, a)?,
            LevelKind::Right => crisp::is_right_ideal(g, a)?,
            LevelKind::Ideal => crisp::is_ideal(g, a)?,
            LevelKind::PrimeSubset => crisp::is_prime_subset(g, a)?,
            LevelKind::SemiprimeSubset => crisp::is_semiprime_subset(g, a)?,
            LevelKind::PrimeIdeal => {
                let ideal = crisp::is_ideal(g, a)?;
                if ideal.failed() {
                    ideal
                } else {
                    crisp::is_prime_subset(g, a)?
                }
                .relabel("prime-ideal")
            }
            LevelKind::SemiprimeIdeal => {
                let ideal = crisp::is_ideal(g, a)?;
                if ideal.failed() {
                    ideal
                } else {
                    crisp::is_semiprime_subset(g, a)?
                }
                .relabel("semiprime-ideal")
            }
        };
        Ok(Some(v))
    }
}

/// First level cut (over the decisive thresholds) violating the crisp
/// predicate, as an `AtLevel` witness.
pub(crate) fn first_bad_cut(
    kind: LevelKind,
    g: &OrderedGammaGroupoid,
    mu: &FuzzySubset,
) -> Result<Option<Witness>> {
    if !mu.is_over(g) {
        return Err(Error::CarrierMismatch);
    }
    for t in decisive_thresholds(mu) {
        if let Some(v) = kind.crisp(g, &mu.cut(t))? {
            if let Some(w) = v.witness() {
                return Ok(Some(Witness::AtLevel {
                    t,
                    inner: Box::new(w.clone()),
                }));
            }
        }
    }
    Ok(None)
}

/// Decides both directions of "μ has the fuzzy property iff every level cut
/// has the crisp property".
///
/// Thresholds range over the image of μ (plus one empty cut above the
/// maximum); empty cuts are skipped for ideal kinds. Each direction is
/// vacuous when its own hypothesis fails.
pub fn level_characterization(
    g: &OrderedGammaGroupoid,
    mu: &FuzzySubset,
    kind: LevelKind,
) -> Result<ClaimReport> {
    let id = kind.claim();
    let fuzzy = kind.fuzzy(g, mu)?;
    let bad_cut = first_bad_cut(kind, g, mu)?;

    let forward_label = format!("{id}.forward");
    let forward = if !fuzzy.passed() {
        Verdict::vacuous(forward_label)
    } else {
        Verdict::from_witness(forward_label, bad_cut.clone())
    };

    let converse_label = format!("{id}.converse");
    let converse = if bad_cut.is_some() {
        Verdict::vacuous(converse_label)
    } else {
        fuzzy.relabel(converse_label)
    };
    Ok(ClaimReport::new(id, vec![forward, converse]))
}

/// Registry entry for T4 through T10.
pub struct LevelCharacterization {
    kind: LevelKind,
}

impl LevelCharacterization {
    pub fn new(kind: LevelKind) -> Self {
        LevelCharacterization { kind }
    }
}

impl Claim for LevelCharacterization {
    fn id(&self) -> ClaimId {
        self.kind.claim()
    }

    fn takes_pair(&self) -> bool {
        false
    }

    fn check(
        &self,
        g: &OrderedGammaGroupoid,
        mu: &FuzzySubset,
        _sigma: &FuzzySubset,
    ) -> Result<ClaimReport> {
        level_characterization(g, mu, self.kind)
    }
}
