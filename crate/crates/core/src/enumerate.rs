//! Bounded, deterministic enumeration of posets, structures and fuzzy
//! subsets, and counterexample search over claims.
//!
//! Canonical orders:
//! - posets on `n` points: ascending bitmask over the off-diagonal pairs
//!   `(x, y)` taken in lexicographic order, the first pair being the lowest
//!   bit (so the equality order comes first);
//! - structures: by poset index, then by operation tables read as one digit
//!   string (gamma, row, column), lexicographically;
//! - fuzzy subsets: grade-index strings over the grid, lexicographic in
//!   carrier order.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::crisp::is_gamma_semigroup;
use crate::error::{Error, Result};
use crate::format::{parse_fuzzy, parse_structure, serialize_fuzzy, serialize_structure};
use crate::fuzzy::{FuzzySubset, Membership};
use crate::structure::{first_incompatibility, OrderedGammaGroupoid, PartialOrder};
use crate::theorems::{ClaimId, ClaimRegistry};
use crate::verdict::Verdict;

pub const DEFAULT_MAX_SIZE: usize = 4;
pub const DEFAULT_MAX_GAMMAS: usize = 2;
/// Upper bound on `|grid|^n` for one fuzzy stream.
pub const MAX_FUZZY_COUNT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderMode {
    All,
    Trivial,
    Fixed(PartialOrder),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumBounds {
    pub size: usize,
    pub gammas: usize,
    pub grid: Vec<Membership>,
    pub assoc_only: bool,
    pub order_mode: OrderMode,
    /// Keep only one structure per isomorphism class (carrier relabelings).
    pub dedup: bool,
    pub max_size: usize,
    pub max_gammas: usize,
}

impl EnumBounds {
    /// All orders, grid `{0, 1/2, 1}`, default caps.
    pub fn new(size: usize, gammas: usize) -> Self {
        EnumBounds {
            size,
            gammas,
            grid: default_grid(),
            assoc_only: false,
            order_mode: OrderMode::All,
            dedup: false,
            max_size: DEFAULT_MAX_SIZE,
            max_gammas: DEFAULT_MAX_GAMMAS,
        }
    }

    pub fn with_grid(mut self, grid: Vec<Membership>) -> Self {
        self.grid = grid;
        self
    }

    pub fn with_order(mut self, mode: OrderMode) -> Self {
        self.order_mode = mode;
        self
    }

    pub fn assoc_only(mut self, yes: bool) -> Self {
        self.assoc_only = yes;
        self
    }

    pub fn dedup(mut self, yes: bool) -> Self {
        self.dedup = yes;
        self
    }

    /// Lifts the size and gamma caps.
    pub fn uncapped(mut self) -> Self {
        self.max_size = usize::MAX;
        self.max_gammas = usize::MAX;
        self
    }

    fn check(&self) -> Result<()> {
        if self.size == 0 || self.gammas == 0 {
            return Err(Error::CapExceeded("size and gamma count must be at least 1".into()));
        }
        if self.size > self.max_size {
            return Err(Error::CapExceeded(format!(
                "size {} above cap {}",
                self.size, self.max_size
            )));
        }
        if self.gammas > self.max_gammas {
            return Err(Error::CapExceeded(format!(
                "gamma count {} above cap {}",
                self.gammas, self.max_gammas
            )));
        }
        if let OrderMode::Fixed(order) = &self.order_mode {
            if order.size() != self.size {
                return Err(Error::CapExceeded("fixed order has the wrong size".into()));
            }
        }
        check_grid(&self.grid)
    }
}

pub fn default_grid() -> Vec<Membership> {
    vec![Membership::ZERO, Membership::ratio(1, 2), Membership::ONE]
}

/// Grids must be strictly ascending and include both 0 and 1.
pub fn check_grid(grid: &[Membership]) -> Result<()> {
    if grid.first() != Some(&Membership::ZERO) || grid.last() != Some(&Membership::ONE) {
        return Err(Error::InvalidGrid("grid must start at 0 and end at 1".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("grid must be strictly ascending".into()));
    }
    Ok(())
}

/// Element names `a, b, c, ...` used for enumerated carriers.
pub fn element_names(n: usize) -> Arc<[String]> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

/// Gamma names `g, h, ...`.
pub fn gamma_names(k: usize) -> Arc<[String]> {
    const NAMES: [&str; 6] = ["g", "h", "k", "l", "m", "q"];
    (0..k)
        .map(|i| NAMES.get(i).map_or_else(|| format!("g{i}"), |s| s.to_string()))
        .collect()
}

/// All labeled partial orders on `n` points, with the default cap.
pub fn enumerate_posets(n: usize) -> Result<Vec<PartialOrder>> {
    enumerate_posets_capped(n, DEFAULT_MAX_SIZE)
}

pub fn enumerate_posets_capped(n: usize, cap: usize) -> Result<Vec<PartialOrder>> {
    if n == 0 || n > cap {
        return Err(Error::CapExceeded(format!("poset size {n} outside 1..={cap}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    if pairs.len() >= 40 {
        return Err(Error::CapExceeded(format!("poset size {n} too large")));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = PartialOrder::trivial(n).matrix().to_vec();
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[x * n + y] = true;
            }
        }
        if let Some(order) = PartialOrder::from_matrix(n, leq) {
            out.push(order);
        }
    }
    Ok(out)
}

/// Stream of valid structures within `bounds`; see the module docs for the order.
pub struct StructureStream {
    elements: Arc<[String]>,
    gammas: Arc<[String]>,
    orders: Vec<PartialOrder>,
    order_idx: usize,
    digits: Vec<usize>,
    n: usize,
    k: usize,
    assoc_only: bool,
    seen: Option<HashSet<Vec<usize>>>,
    done: bool,
}

pub fn enumerate_structures(bounds: &EnumBounds) -> Result<StructureStream> {
    bounds.check()?;
    let n = bounds.size;
    let k = bounds.gammas;
    let cells = k * n * n;
    // n^(k n^2) must be countable
    if (cells as f64) * (n as f64).log2() >= 63.0 {
        return Err(Error::CapExceeded(format!(
            "{n}^{cells} tables cannot be enumerated"
        )));
    }
    let orders = match &bounds.order_mode {
        OrderMode::All => enumerate_posets_capped(n, bounds.max_size)?,
        OrderMode::Trivial => vec![PartialOrder::trivial(n)],
        OrderMode::Fixed(o) => vec![o.clone()],
    };
    Ok(StructureStream {
        elements: element_names(n),
        gammas: gamma_names(k),
        orders,
        order_idx: 0,
        digits: vec![0; cells],
        n,
        k,
        assoc_only: bounds.assoc_only,
        seen: bounds.dedup.then(HashSet::new),
        done: false,
    })
}

impl StructureStream {
    /// Advances the table odometer; on wrap-around moves to the next order.
    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.n {
                return;
            }
            *d = 0;
        }
        self.order_idx += 1;
        if self.order_idx >= self.orders.len() {
            self.done = true;
        }
    }
}

impl Iterator for StructureStream {
    type Item = OrderedGammaGroupoid;

    fn next(&mut self) -> Option<OrderedGammaGroupoid> {
        while !self.done {
            let order = &self.orders[self.order_idx];
            let candidate = if first_incompatibility(self.n, self.k, &self.digits, order).is_none() {
                let g = OrderedGammaGroupoid::from_parts(
                    self.elements.clone(),
                    self.gammas.clone(),
                    self.digits.clone(),
                    order.clone(),
                )
                .expect("compatible table");
                let keep = (!self.assoc_only || is_gamma_semigroup(&g).passed())
                    && match &mut self.seen {
                        Some(seen) => seen.insert(canonical_form(&g)),
                        None => true,
                    };
                keep.then_some(g)
            } else {
                None
            };
            self.advance();
            if candidate.is_some() {
                return candidate;
            }
        }
        None
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut perm: Vec<usize> = (0..n).collect();
    fn go(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    go(0, &mut perm, &mut out);
    out
}

/// Lexicographically least encoding of `g` (order matrix, then tables) over
/// all relabelings of the carrier. Gamma labels are not permuted.
pub fn canonical_form(g: &OrderedGammaGroupoid) -> Vec<usize> {
    let n = g.size();
    let k = g.gamma_count();
    permutations(n)
        .into_iter()
        .map(|p| {
            // p maps old index -> new index; build the relabeled encoding
            let mut inv = vec![0; n];
            for (old, &new) in p.iter().enumerate() {
                inv[new] = old;
            }
            let mut code = Vec::with_capacity(n * n * (k + 1));
            for x in 0..n {
                for y in 0..n {
                    code.push(g.leq(inv[x], inv[y]) as usize);
                }
            }
            for gamma in 0..k {
                for x in 0..n {
                    for y in 0..n {
                        code.push(p[g.op(inv[x], gamma, inv[y])]);
                    }
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

/// Stream of all `|grid|^n` fuzzy subsets of a structure.
pub struct FuzzyStream {
    carrier: Arc<[String]>,
    grid: Vec<Membership>,
    digits: Vec<usize>,
    done: bool,
}

pub fn enumerate_fuzzy(g: &OrderedGammaGroupoid, grid: &[Membership]) -> Result<FuzzyStream> {
    check_grid(grid)?;
    let count = fuzzy_count(g.size(), grid.len())?;
    debug_assert!(count > 0);
    Ok(FuzzyStream {
        carrier: g.elements().clone(),
        grid: grid.to_vec(),
        digits: vec![0; g.size()],
        done: false,
    })
}

fn fuzzy_count(n: usize, grid_len: usize) -> Result<u64> {
    let count = (grid_len as u64)
        .checked_pow(n as u32)
        .filter(|&c| c <= MAX_FUZZY_COUNT)
        .ok_or_else(|| Error::CapExceeded(format!("{grid_len}^{n} fuzzy subsets")))?;
    Ok(count)
}

impl Iterator for FuzzyStream {
    type Item = FuzzySubset;

    fn next(&mut self) -> Option<FuzzySubset> {
        if self.done {
            return None;
        }
        let grades = self.digits.iter().map(|&d| self.grid[d]).collect();
        let mu = FuzzySubset::new(self.carrier.clone(), grades).expect("total grades");
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.grid.len() {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(mu)
    }
}

/// An instance on which a claim fails, in serialized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub claim: ClaimId,
    pub structure: String,
    pub mu: String,
    /// Present for two-argument claims.
    pub sigma: Option<String>,
    /// The first failing verdict of the claim's report.
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HuntOutcome {
    Found(Box<Counterexample>),
    /// Nothing found after checking this many (structure, fuzzy subset(s)) instances.
    NotFound { instances: u64 },
}

fn first_failure_on(
    registry: &ClaimRegistry,
    claim: ClaimId,
    g: &OrderedGammaGroupoid,
    grid: &[Membership],
) -> Result<Option<Counterexample>> {
    let c = registry.get(claim).ok_or_else(|| Error::UnknownClaim(claim.to_string()))?;
    for mu in enumerate_fuzzy(g, grid)? {
        let sigmas: Box<dyn Iterator<Item = FuzzySubset>> = if c.takes_pair() {
            Box::new(enumerate_fuzzy(g, grid)?)
        } else {
            Box::new(std::iter::once(mu.clone()))
        };
        for sigma in sigmas {
            let report = c.check(g, &mu, &sigma)?;
            if let Some(v) = report.first_failure() {
                return Ok(Some(Counterexample {
                    claim,
                    structure: serialize_structure(g),
                    mu: serialize_fuzzy(&mu),
                    sigma: c.takes_pair().then(|| serialize_fuzzy(&sigma)),
                    verdict: v.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Re-parses a counterexample and checks the claim fails the same way.
pub fn recheck(cx: &Counterexample) -> Result<bool> {
    let g = parse_structure(&cx.structure)?;
    let mu = parse_fuzzy(&cx.mu)?;
    let sigma = match &cx.sigma {
        Some(s) => parse_fuzzy(s)?,
        None => mu.clone(),
    };
    let registry = ClaimRegistry::standard();
    let c = registry.get(cx.claim).ok_or_else(|| Error::UnknownClaim(cx.claim.to_string()))?;
    Ok(c.check(&g, &mu, &sigma)?.first_failure() == Some(&cx.verdict))
}

/// Searches structures × fuzzy subsets (× fuzzy subsets for pair claims) in
/// canonical order for the first failing instance. Structures are searched
/// in parallel; the result is still the canonical-order minimum.
pub fn hunt(claim: ClaimId, bounds: &EnumBounds) -> Result<HuntOutcome> {
    let registry = ClaimRegistry::standard();
    let pair = registry
        .get(claim)
        .ok_or_else(|| Error::UnknownClaim(claim.to_string()))?
        .takes_pair();
    let per_structure = {
        let f = fuzzy_count(bounds.size, bounds.grid.len())?;
        if pair {
            f * f
        } else {
            f
        }
    };
    let structures: Vec<OrderedGammaGroupoid> = enumerate_structures(bounds)?.collect();
    let found = structures
        .par_iter()
        .map(|g| first_failure_on(&registry, claim, g, &bounds.grid))
        .find_map_first(|r| r.transpose());
    match found {
        None => Ok(HuntOutcome::NotFound {
            instances: structures.len() as u64 * per_structure,
        }),
        Some(Err(e)) => Err(e),
        Some(Ok(cx)) => {
            if !recheck(&cx)? {
                return Err(Error::InternalInconsistency(format!(
                    "counterexample for {claim} does not reproduce"
                )));
            }
            Ok(HuntOutcome::Found(Box::new(cx)))
        }
    }
}
