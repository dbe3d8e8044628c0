//! Text formats for structures (`ogg 1`) and fuzzy subsets (`fuzzy 1`).
//!
//! Both are line oriented with whitespace-separated tokens. `#` starts a
//! comment and blank lines are ignored.
//!
//! ```text
//! ogg 1
//! elements: a b
//! gammas: g
//! table g:
//! a a
//! a b
//! order:
//! a <= b
//! end
//! ```
//!
//! Row `i`, column `j` of `table γ:` is `e_i γ e_j`. Order lines are
//! generators; reflexive and transitive pairs are implied.
//!
//! ```text
//! fuzzy 1
//! over: a b
//! a 1
//! b 1/2
//! end
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzySubset, Membership};
use crate::structure::{is_valid_name, validate_structure, OrderedGammaGroupoid, RawStructure};

type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

struct Lines<'a> {
    inner: std::iter::Peekable<TokenLines<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: TokenLines<'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, line)| {
                    let line = line.split('#').next().unwrap_or("");
                    (i + 1, line.split_whitespace().collect::<Vec<_>>())
                })
                .filter(|(_, toks)| !toks.is_empty()),
        );
        Lines {
            inner: it.peekable(),
            last_line: text.lines().count().max(1),
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        self.inner.next()
    }

    fn peek(&mut self) -> Option<&(usize, Vec<&'a str>)> {
        self.inner.peek()
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let eof = self.last_line;
        self.next()
            .ok_or_else(|| parse_err(eof, format!("unexpected end of input, expected {what}")))
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn header(lines: &mut Lines<'_>, magic: &str) -> Result<()> {
    let (line, toks) = lines.expect(&format!("`{magic} 1` header"))?;
    if toks != [magic, "1"] {
        return Err(parse_err(line, format!("expected `{magic} 1` header")));
    }
    Ok(())
}

/// Reads `<key>: name+` and checks each name token.
fn name_list(lines: &mut Lines<'_>, key: &str) -> Result<Vec<String>> {
    let (line, toks) = lines.expect(&format!("`{key}:` line"))?;
    let label = format!("{key}:");
    if toks.first() != Some(&label.as_str()) {
        return Err(parse_err(line, format!("expected `{label}`")));
    }
    if toks.len() < 2 {
        return Err(parse_err(line, format!("`{label}` needs at least one name")));
    }
    toks[1..]
        .iter()
        .map(|t| {
            if is_valid_name(t) {
                Ok(t.to_string())
            } else {
                Err(parse_err(line, format!("invalid name `{t}`")))
            }
        })
        .collect()
}

/// `table g:` or `table g :`; returns the gamma name.
fn table_header(toks: &[&str]) -> Option<String> {
    if toks.first() != Some(&"table") {
        return None;
    }
    let rest = toks[1..].concat();
    rest.strip_suffix(':')
        .filter(|g| !g.is_empty())
        .map(str::to_string)
}

/// Grammar-level parse of an `ogg 1` document without structural validation.
pub fn parse_raw_structure(text: &str) -> Result<RawStructure> {
    let mut lines = Lines::new(text);
    header(&mut lines, "ogg")?;
    let elements = name_list(&mut lines, "elements")?;
    let gammas = name_list(&mut lines, "gammas")?;
    let n = elements.len();

    let mut tables = Vec::new();
    loop {
        let (line, toks) = lines.expect("`table <gamma>:` or `order:`")?;
        if toks == ["order:"] {
            break;
        }
        let gamma = table_header(&toks)
            .ok_or_else(|| parse_err(line, "expected `table <gamma>:` or `order:`"))?;
        let mut rows = Vec::with_capacity(n);
        for row in 1..=n {
            let missing = |at: usize| parse_err(at, format!("table {gamma}: missing row {row}"));
            match lines.peek() {
                None => return Err(missing(lines.last_line)),
                Some((at, toks)) if toks[0] == "table" || toks[0] == "order:" => {
                    return Err(missing(*at))
                }
                _ => {}
            }
            let (at, toks) = lines.next().unwrap();
            if toks.len() != n {
                return Err(parse_err(
                    at,
                    format!("table {gamma}: row {row} has {} entries, expected {n}", toks.len()),
                ));
            }
            rows.push(toks.iter().map(|t| t.to_string()).collect());
        }
        tables.push((gamma, rows));
    }

    let mut order = Vec::new();
    loop {
        let (line, toks) = lines.expect("`<x> <= <y>` or `end`")?;
        match toks.as_slice() {
            ["end"] => break,
            [x, "<=", y] => order.push((x.to_string(), y.to_string())),
            _ => return Err(parse_err(line, "expected `<x> <= <y>` or `end`")),
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "content after `end`"));
    }
    Ok(RawStructure {
        elements,
        gammas,
        tables,
        order,
    })
}

/// Parses and validates an `ogg 1` document.
pub fn parse_structure(text: &str) -> Result<OrderedGammaGroupoid> {
    validate_structure(&parse_raw_structure(text)?)
}

/// Writes `g` as an `ogg 1` document listing every strict order pair.
pub fn serialize_structure(g: &OrderedGammaGroupoid) -> String {
    let mut out = String::from("ogg 1\n");
    let _ = writeln!(out, "elements: {}", g.elements().join(" "));
    let _ = writeln!(out, "gammas: {}", g.gammas().join(" "));
    for gamma in 0..g.gamma_count() {
        let _ = writeln!(out, "table {}:", g.gamma_name(gamma));
        for a in 0..g.size() {
            let row: Vec<&str> = (0..g.size())
                .map(|b| g.element_name(g.op(a, gamma, b)))
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out.push_str("order:\n");
    for (x, y) in g.order().strict_pairs() {
        let _ = writeln!(out, "{} <= {}", g.element_name(x), g.element_name(y));
    }
    out.push_str("end\n");
    out
}

/// Parses a `fuzzy 1` document. Every `over:` element must be graded exactly once.
pub fn parse_fuzzy(text: &str) -> Result<FuzzySubset> {
    let mut lines = Lines::new(text);
    header(&mut lines, "fuzzy")?;
    let over = name_list(&mut lines, "over")?;
    let index: HashMap<&str, usize> = over.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    if index.len() != over.len() {
        return Err(parse_err(1, "duplicate name in `over:`"));
    }
    let mut grades: Vec<Option<Membership>> = vec![None; over.len()];
    loop {
        let (line, toks) = lines.expect("`<element> <grade>` or `end`")?;
        match toks.as_slice() {
            ["end"] => break,
            [name, grade] => {
                let i = *index
                    .get(name)
                    .ok_or_else(|| parse_err(line, format!("`{name}` is not in `over:`")))?;
                if grades[i].is_some() {
                    return Err(parse_err(line, format!("`{name}` graded twice")));
                }
                let g: Membership = grade
                    .parse()
                    .map_err(|_| parse_err(line, format!("invalid grade `{grade}`")))?;
                grades[i] = Some(g);
            }
            _ => return Err(parse_err(line, "expected `<element> <grade>` or `end`")),
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "content after `end`"));
    }
    let grades = grades
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| parse_err(lines.last_line, format!("`{}` has no grade", over[i]))))
        .collect::<Result<Vec<_>>>()?;
    FuzzySubset::new(over.into(), grades)
}

pub fn serialize_fuzzy(mu: &FuzzySubset) -> String {
    let mut out = String::from("fuzzy 1\n");
    let _ = writeln!(out, "over: {}", mu.carrier().join(" "));
    for (name, grade) in mu.carrier().iter().zip(mu.grades()) {
        let _ = writeln!(out, "{name} {grade}");
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const S1: &str = "ogg 1\n# join\nelements: a b\ngammas: g\ntable g:\na a\na b\norder:\nend\n";

    #[test]
    fn parses_s1() {
        assert_eq!(parse_structure(S1).unwrap(), fixtures::s1());
        assert_eq!(serialize_structure(&fixtures::s1()), S1.replace("# join\n", ""));
    }

    #[test]
    fn round_trip_fixtures() {
        for g in fixtures::all() {
            let text = serialize_structure(&g);
            assert_eq!(parse_structure(&text).unwrap(), g);
        }
        let mu = fixtures::s3_antitone();
        assert_eq!(parse_fuzzy(&serialize_fuzzy(&mu)).unwrap(), mu);
    }

    #[test]
    fn missing_row() {
        let text = "ogg 1\nelements: a b\ngammas: g\ntable g:\na a\norder:\nend\n";
        assert_eq!(
            parse_structure(text),
            Err(Error::Parse {
                line: 6,
                reason: "table g: missing row 2".into()
            })
        );
    }

    #[test]
    fn order_cycle() {
        let text = "ogg 1\nelements: a b\ngammas: g\ntable g:\na a\na a\norder:\na <= b\nb <= a\nend\n";
        assert_eq!(
            parse_structure(text),
            Err(Error::NotAntisymmetric("a".into(), "b".into()))
        );
    }

    #[test]
    fn grammar_errors_carry_lines() {
        let cases = [
            ("ogg 2\n", 1),
            ("ogg 1\nelements:\n", 2),
            ("ogg 1\nelements: a\ngammas: g\ntable g:\na a\norder:\nend\n", 5),
            ("ogg 1\nelements: a\ngammas: g\ntable g:\na\norder:\na < a\nend\n", 7),
            ("ogg 1\nelements: a\ngammas: g\ntable g:\na\norder:\nend\nextra\n", 8),
            ("ogg 1\nelements: a,b\n", 2),
        ];
        for (text, line) in cases {
            match parse_structure(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn fuzzy_documents() {
        let mu = parse_fuzzy("fuzzy 1\nover: a b\nb 0\na 1   # top\nend\n").unwrap();
        assert_eq!(mu, fixtures::mu1());
        for (text, line) in [
            ("fuzzy 1\nover: a b\na 1\nend\n", 4),
            ("fuzzy 1\nover: a b\na 0.5\nb 0\nend\n", 3),
            ("fuzzy 1\nover: a b\na 1\na 0\nend\n", 4),
            ("fuzzy 1\nover: a b\nc 1\nend\n", 3),
            ("fuzzy 1\nover: a b\na 3/2\nb 0\nend\n", 3),
        ] {
            match parse_fuzzy(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn product_names_parse() {
        let sq = crate::product::direct_square(&fixtures::s3()).unwrap();
        let text = serialize_structure(sq.structure());
        assert_eq!(&parse_structure(&text).unwrap(), sq.structure());
    }
}
