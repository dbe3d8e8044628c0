//! Finite ordered Γ-groupoids and their validation.
//!
//! A structure is a carrier `M`, a list of gamma labels `Γ`, one total
//! operation table per gamma, and a partial order on `M` compatible with
//! every operation on both sides. Elements and gammas are addressed by their
//! index in the declared lists; names are kept for reporting.
//!
//! The well-definedness condition of a Γ-groupoid (equal arguments give
//! equal products) holds for any table and is not checked at runtime.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result, Side};

/// Returns true for `[A-Za-z0-9_]+` tokens and for `(x,y)` pairs of valid names.
///
/// Pair names are produced by the direct square; base names never contain
/// parentheses or commas, so pair names cannot collide.
pub fn is_valid_name(name: &str) -> bool {
    fn atom(s: &str) -> bool {
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
    }
    if let Some(inner) = name.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        // split at the top-level comma
        let mut depth = 0usize;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    if depth == 0 {
                        return false;
                    }
                    depth -= 1;
                }
                ',' if depth == 0 => {
                    return is_valid_name(&inner[..i]) && is_valid_name(&inner[i + 1..]);
                }
                _ => {}
            }
        }
        false
    } else {
        atom(name)
    }
}

fn check_names(names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if !is_valid_name(name) {
            return Err(Error::InvalidName(name.clone()));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

/// A partial order on `0..n`, stored as a dense `leq` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialOrder {
    n: usize,
    leq: Vec<bool>,
}

impl PartialOrder {
    /// Equality only.
    pub fn trivial(n: usize) -> Self {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        PartialOrder { n, leq }
    }

    /// Reflexive-transitive closure of the generator pairs `(x, y)` meaning
    /// `x <= y`, followed by an antisymmetry check.
    ///
    /// On failure returns the first pair `(x, y)` (lexicographically, `x < y`)
    /// with both `x <= y` and `y <= x`.
    pub fn from_generators(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> std::result::Result<Self, (usize, usize)> {
        let mut order = PartialOrder::trivial(n);
        for (x, y) in pairs {
            order.leq[x * n + y] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if order.leq[i * n + k] {
                    for j in 0..n {
                        if order.leq[k * n + j] {
                            order.leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if order.leq[x * n + y] && order.leq[y * n + x] {
                    return Err((x, y));
                }
            }
        }
        Ok(order)
    }

    /// Builds an order from a full relation matrix, returning `None` unless the
    /// matrix is reflexive, antisymmetric and transitive.
    pub fn from_matrix(n: usize, leq: Vec<bool>) -> Option<Self> {
        assert_eq!(leq.len(), n * n);
        let order = PartialOrder { n, leq };
        let ok = (0..n).all(|i| order.leq(i, i))
            && (0..n).all(|i| (0..n).all(|j| i == j || !(order.leq(i, j) && order.leq(j, i))))
            && (0..n).all(|i| {
                (0..n).all(|j| !order.leq(i, j) || (0..n).all(|k| !order.leq(j, k) || order.leq(i, k)))
            });
        ok.then_some(order)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    /// All `x <= y` with `x != y`, in lexicographic order.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |x| (0..n).map(move |y| (x, y)))
            .filter(move |&(x, y)| x != y && self.leq(x, y))
    }

    pub fn is_trivial(&self) -> bool {
        self.strict_pairs().next().is_none()
    }

    pub(crate) fn matrix(&self) -> &[bool] {
        &self.leq
    }
}

/// Unvalidated structure description using names, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawStructure {
    pub elements: Vec<String>,
    pub gammas: Vec<String>,
    /// One `(gamma, rows)` entry per gamma; `rows[i][j]` is `e_i γ e_j`.
    pub tables: Vec<(String, Vec<Vec<String>>)>,
    /// Generator pairs `(x, y)` meaning `x <= y`.
    pub order: Vec<(String, String)>,
}

/// A validated finite ordered Γ-groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGammaGroupoid {
    elements: Arc<[String]>,
    gammas: Arc<[String]>,
    /// `table[(g * n + a) * n + b] = a g b`
    table: Vec<usize>,
    order: PartialOrder,
}

/// Validates a raw description: names, table totality, order closure,
/// antisymmetry and compatibility.
pub fn validate_structure(raw: &RawStructure) -> Result<OrderedGammaGroupoid> {
    if raw.elements.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if raw.gammas.is_empty() {
        return Err(Error::EmptyGammas);
    }
    check_names(&raw.elements)?;
    check_names(&raw.gammas)?;
    let n = raw.elements.len();
    let k = raw.gammas.len();
    let elem = |name: &str| -> Result<usize> {
        raw.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    };

    let mut table = vec![usize::MAX; k * n * n];
    let mut seen = vec![false; k];
    for (gamma, rows) in &raw.tables {
        let g = raw
            .gammas
            .iter()
            .position(|x| x == gamma)
            .ok_or_else(|| Error::UnknownGamma(gamma.clone()))?;
        if seen[g] {
            return Err(Error::TableIncomplete(format!("table {gamma} given twice")));
        }
        seen[g] = true;
        if rows.len() != n {
            return Err(Error::TableIncomplete(format!(
                "table {gamma} has {} rows, expected {n}",
                rows.len()
            )));
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::TableIncomplete(format!(
                    "table {gamma} row {} has {} entries, expected {n}",
                    a + 1,
                    row.len()
                )));
            }
            for (b, product) in row.iter().enumerate() {
                table[(g * n + a) * n + b] = elem(product)?;
            }
        }
    }
    if let Some(g) = seen.iter().position(|s| !s) {
        return Err(Error::TableIncomplete(format!(
            "no table for gamma {}",
            raw.gammas[g]
        )));
    }

    let pairs = raw
        .order
        .iter()
        .map(|(x, y)| Ok((elem(x)?, elem(y)?)))
        .collect::<Result<Vec<_>>>()?;
    let order = PartialOrder::from_generators(n, pairs).map_err(|(x, y)| {
        Error::NotAntisymmetric(raw.elements[x].clone(), raw.elements[y].clone())
    })?;

    OrderedGammaGroupoid::from_parts(
        raw.elements.clone().into(),
        raw.gammas.clone().into(),
        table,
        order,
    )
}

impl OrderedGammaGroupoid {
    /// Index-level constructor. Checks table shape and order compatibility;
    /// names are assumed already checked.
    pub fn from_parts(
        elements: Arc<[String]>,
        gammas: Arc<[String]>,
        table: Vec<usize>,
        order: PartialOrder,
    ) -> Result<Self> {
        let n = elements.len();
        let k = gammas.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if k == 0 {
            return Err(Error::EmptyGammas);
        }
        if table.len() != k * n * n {
            return Err(Error::TableIncomplete(format!(
                "expected {} entries, got {}",
                k * n * n,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&r| r >= n) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        if order.size() != n {
            return Err(Error::TableIncomplete("order size differs from carrier".into()));
        }
        if let Some((a, b, c, g, side)) = first_incompatibility(n, k, &table, &order) {
            return Err(Error::Incompatible {
                a: elements[a].clone(),
                b: elements[b].clone(),
                c: elements[c].clone(),
                gamma: gammas[g].clone(),
                side,
            });
        }
        Ok(OrderedGammaGroupoid {
            elements,
            gammas,
            table,
            order,
        })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn gamma_count(&self) -> usize {
        self.gammas.len()
    }

    pub fn elements(&self) -> &Arc<[String]> {
        &self.elements
    }

    pub fn gammas(&self) -> &Arc<[String]> {
        &self.gammas
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn gamma_name(&self, g: usize) -> &str {
        &self.gammas[g]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// `a γ b`
    #[inline]
    pub fn op(&self, a: usize, gamma: usize, b: usize) -> usize {
        let n = self.elements.len();
        self.table[(gamma * n + a) * n + b]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    pub fn order(&self) -> &PartialOrder {
        &self.order
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Name-level description of this structure; order pairs are the full
    /// strict part of the order.
    pub fn to_raw(&self) -> RawStructure {
        let n = self.size();
        let name = |i: usize| self.elements[i].clone();
        RawStructure {
            elements: self.elements.to_vec(),
            gammas: self.gammas.to_vec(),
            tables: (0..self.gamma_count())
                .map(|g| {
                    let rows = (0..n)
                        .map(|a| (0..n).map(|b| name(self.op(a, g, b))).collect())
                        .collect();
                    (self.gammas[g].clone(), rows)
                })
                .collect(),
            order: self
                .order
                .strict_pairs()
                .map(|(x, y)| (name(x), name(y)))
                .collect(),
        }
    }
}

/// First `(a, b, c, γ, side)` with `a <= b` such that compatibility fails,
/// scanning `a, b, c, γ` in index order and the left side before the right.
pub(crate) fn first_incompatibility(
    n: usize,
    k: usize,
    table: &[usize],
    order: &PartialOrder,
) -> Option<(usize, usize, usize, usize, Side)> {
    let op = |a: usize, g: usize, b: usize| table[(g * n + a) * n + b];
    for (a, b) in order.strict_pairs() {
        for c in 0..n {
            for g in 0..k {
                if !order.leq(op(a, g, c), op(b, g, c)) {
                    return Some((a, b, c, g, Side::Left));
                }
                if !order.leq(op(c, g, a), op(c, g, b)) {
                    return Some((a, b, c, g, Side::Right));
                }
            }
        }
    }
    None
}

/// A subset of a structure's carrier, as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrispSubset {
    members: Vec<bool>,
}

impl CrispSubset {
    pub fn from_mask(members: Vec<bool>) -> Self {
        CrispSubset { members }
    }

    pub fn empty(n: usize) -> Self {
        CrispSubset {
            members: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        CrispSubset {
            members: vec![true; n],
        }
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut members = vec![false; n];
        for i in indices {
            members[i] = true;
        }
        CrispSubset { members }
    }

    pub fn from_names<S: AsRef<str>>(
        structure: &OrderedGammaGroupoid,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let mut members = vec![false; structure.size()];
        for name in names {
            let name = name.as_ref();
            let i = structure
                .element_index(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
            members[i] = true;
        }
        Ok(CrispSubset { members })
    }

    /// Bit `i` of `mask` selects element `i`.
    pub fn from_bits(n: usize, mask: u64) -> Self {
        CrispSubset {
            members: (0..n).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn carrier_size(&self) -> usize {
        self.members.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn is_subset_of(&self, other: &CrispSubset) -> bool {
        self.members.len() == other.members.len()
            && self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    /// `{a,b}` using the structure's element names.
    pub fn render(&self, structure: &OrderedGammaGroupoid) -> String {
        let names: Vec<&str> = self.iter().map(|i| structure.element_name(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}
