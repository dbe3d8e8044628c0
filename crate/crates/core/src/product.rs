//! The direct square `M × M` and the fuzzy cartesian product `μ × σ`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzySubset;
use crate::structure::{OrderedGammaGroupoid, PartialOrder};

pub const DEFAULT_SIZE_LIMIT: usize = 256;

/// `M × M` with `(a,b) γ (c,d) = (a γ c, b γ d)` and the componentwise order.
///
/// The pair `(i, j)` has index `i * n + j` and is named `(x_i,x_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductStructure {
    base_size: usize,
    structure: OrderedGammaGroupoid,
}

fn pair_names(base: &[String]) -> Arc<[String]> {
    base.iter()
        .flat_map(|x| base.iter().map(move |y| format!("({x},{y})")))
        .collect()
}

/// Builds the direct square with the default size limit.
pub fn direct_square(g: &OrderedGammaGroupoid) -> Result<ProductStructure> {
    direct_square_with_limit(g, DEFAULT_SIZE_LIMIT)
}

pub fn direct_square_with_limit(g: &OrderedGammaGroupoid, limit: usize) -> Result<ProductStructure> {
    let n = g.size();
    let size = n * n;
    if size > limit {
        return Err(Error::SizeLimit { size, limit });
    }
    let k = g.gamma_count();
    let pair = |i: usize, j: usize| i * n + j;

    let mut table = Vec::with_capacity(k * size * size);
    for gamma in 0..k {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        table.push(pair(g.op(a, gamma, c), g.op(b, gamma, d)));
                    }
                }
            }
        }
    }
    let mut leq = Vec::with_capacity(size * size);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    leq.push(g.leq(a, c) && g.leq(b, d));
                }
            }
        }
    }
    let order = PartialOrder::from_matrix(size, leq).ok_or_else(|| {
        Error::InternalInconsistency("componentwise order is not a partial order".into())
    })?;
    // from_parts re-runs the compatibility scan, so the square is checked, not assumed
    let structure =
        OrderedGammaGroupoid::from_parts(pair_names(g.elements()), g.gammas().clone(), table, order)
            .map_err(|e| Error::InternalInconsistency(format!("direct square is invalid: {e}")))?;
    Ok(ProductStructure {
        base_size: n,
        structure,
    })
}

impl ProductStructure {
    pub fn structure(&self) -> &OrderedGammaGroupoid {
        &self.structure
    }

    pub fn into_structure(self) -> OrderedGammaGroupoid {
        self.structure
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        i * self.base_size + j
    }

    pub fn components(&self, p: usize) -> (usize, usize) {
        (p / self.base_size, p % self.base_size)
    }
}

/// `(μ × σ)(x, y) = min{μ(x), σ(y)}` over the pair carrier.
pub fn fuzzy_product(mu: &FuzzySubset, sigma: &FuzzySubset) -> Result<FuzzySubset> {
    if mu.carrier() != sigma.carrier() {
        return Err(Error::CarrierMismatch);
    }
    let n = mu.grades().len();
    let grades = (0..n)
        .flat_map(|x| (0..n).map(move |y| mu.grade(x).min(sigma.grade(y))))
        .collect();
    FuzzySubset::new(pair_names(mu.carrier()), grades)
}
