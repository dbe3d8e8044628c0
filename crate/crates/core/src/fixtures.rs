//! Small hand-checkable structures used throughout the tests and docs.
//!
//! - `s1` "join": `a g a = a g b = b g a = a`, `b g b = b`, equality order.
//! - `s2` "left-zero": `x g y = x`, equality order.
//! - `s3` "chain-min": `x g y = min(x, y)` on the chain `0 <= 1`.
//! - `s4` "const-top": `x g y = 1`, equality order.
//! - `mu1`: `a -> 1`, `b -> 0` over `{a, b}`.

use crate::fuzzy::{FuzzySubset, Membership};
use crate::structure::{validate_structure, OrderedGammaGroupoid, RawStructure};

/// Builds and validates a structure from name tables, one per gamma
/// (gammas are named `g`, `h`, ... in order). Panics on invalid input.
pub fn structure_from_rows(
    elements: &[&str],
    tables: &[&[&[&str]]],
    order: &[(&str, &str)],
) -> OrderedGammaGroupoid {
    const GAMMAS: [&str; 4] = ["g", "h", "i", "j"];
    let raw = RawStructure {
        elements: elements.iter().map(|s| s.to_string()).collect(),
        gammas: GAMMAS[..tables.len()].iter().map(|s| s.to_string()).collect(),
        tables: tables
            .iter()
            .enumerate()
            .map(|(g, rows)| {
                (
                    GAMMAS[g].to_string(),
                    rows.iter()
                        .map(|r| r.iter().map(|s| s.to_string()).collect())
                        .collect(),
                )
            })
            .collect(),
        order: order
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect(),
    };
    validate_structure(&raw).expect("fixture must validate")
}

pub fn s1() -> OrderedGammaGroupoid {
    structure_from_rows(&["a", "b"], &[&[&["a", "a"], &["a", "b"]]], &[])
}

pub fn s2() -> OrderedGammaGroupoid {
    structure_from_rows(&["a", "b"], &[&[&["a", "a"], &["b", "b"]]], &[])
}

pub fn s3() -> OrderedGammaGroupoid {
    structure_from_rows(&["0", "1"], &[&[&["0", "0"], &["0", "1"]]], &[("0", "1")])
}

pub fn s4() -> OrderedGammaGroupoid {
    structure_from_rows(&["0", "1"], &[&[&["1", "1"], &["1", "1"]]], &[])
}

pub fn all() -> Vec<OrderedGammaGroupoid> {
    vec![s1(), s2(), s3(), s4()]
}

/// Fuzzy subset over `structure` with grades given as `"p/q"` strings in carrier order.
pub fn fuzzy(structure: &OrderedGammaGroupoid, grades: &[&str]) -> FuzzySubset {
    let grades = grades
        .iter()
        .map(|s| s.parse::<Membership>().expect("fixture grade"))
        .collect();
    FuzzySubset::new(structure.elements().clone(), grades).expect("fixture fuzzy subset")
}

/// `a -> 1, b -> 0` over the carrier of `s1` / `s2`.
pub fn mu1() -> FuzzySubset {
    fuzzy(&s1(), &["1", "0"])
}

/// `0 -> 1, 1 -> 1/2` over the carrier of `s3`.
pub fn s3_antitone() -> FuzzySubset {
    fuzzy(&s3(), &["1", "1/2"])
}
