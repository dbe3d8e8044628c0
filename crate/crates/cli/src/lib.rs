//! Command surface for `oggkit`.
//!
//! Exit codes: 0 when every verdict passed (or was vacuous), 1 when some
//! verdict failed or a structure is invalid, 2 for usage and input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use oggkit::crisp;
use oggkit::enumerate::{check_grid, enumerate_structures, hunt, EnumBounds, HuntOutcome, OrderMode};
use oggkit::format::{parse_fuzzy, parse_raw_structure, serialize_fuzzy, serialize_structure};
use oggkit::fuzzy::{self, level_cut, membership_image, parse_rational};
use oggkit::product::{direct_square_with_limit, fuzzy_product, DEFAULT_SIZE_LIMIT};
use oggkit::theorems::{ClaimId, ClaimRegistry, ClaimSelector};
use oggkit::{validate_structure, CrispSubset, Error, FuzzySubset, Membership, OrderedGammaGroupoid, Verdict};

/// Environment variable raising the enumeration size cap.
pub const MAX_N_ENV: &str = "OGGKIT_MAX_N";

#[derive(Parser, Debug)]
#[command(name = "oggkit", version, about = "Ordered Gamma-groupoids, fuzzy ideals and level cuts")]
struct Cli {
    /// Tab-separated output fields
    #[arg(long, global = true)]
    porcelain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a structure file
    Validate { file: PathBuf },
    /// Decide one crisp or fuzzy predicate
    Check {
        #[arg(long)]
        kind: CheckKind,
        file: PathBuf,
        /// Comma-separated crisp subset (empty string for the empty set)
        #[arg(long, conflicts_with = "fuzzy")]
        subset: Option<String>,
        #[arg(long)]
        fuzzy: Option<PathBuf>,
    },
    /// Print level cuts of a fuzzy subset
    Levels {
        file: PathBuf,
        #[arg(long)]
        fuzzy: PathBuf,
        /// Threshold p/q; without it every image-value cut is printed
        #[arg(long)]
        t: Option<String>,
    },
    /// Print the direct square and optionally the fuzzy product
    Product {
        file: PathBuf,
        #[arg(long)]
        fuzzy: Option<PathBuf>,
        #[arg(long, requires = "fuzzy")]
        fuzzy2: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SIZE_LIMIT)]
        limit: usize,
    },
    /// Check one claim (or all of them) on an instance
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        claim: Option<String>,
        #[arg(long)]
        all: bool,
        file: PathBuf,
        #[arg(long)]
        fuzzy: PathBuf,
        /// Second fuzzy subset for product claims; defaults to --fuzzy
        #[arg(long)]
        fuzzy2: Option<PathBuf>,
    },
    /// Enumerate valid structures
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        gammas: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::All)]
        order: OrderArg,
        /// Keep only Gamma-semigroups
        #[arg(long)]
        assoc: bool,
        #[arg(long)]
        count_only: bool,
        /// One structure per isomorphism class
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        override_caps: bool,
    },
    /// Search for the first counterexample to a claim
    Hunt {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        gammas: usize,
        /// Comma-separated grades, e.g. 0,1/2,1
        #[arg(long, default_value = "0,1/2,1")]
        grid: String,
        #[arg(long, value_enum, default_value_t = OrderArg::All)]
        order: OrderArg,
        #[arg(long)]
        assoc: bool,
        #[arg(long)]
        override_caps: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckKind {
    LeftIdeal,
    RightIdeal,
    Ideal,
    Prime,
    Semiprime,
    FuzzyLeftIdeal,
    FuzzyRightIdeal,
    FuzzyIdeal,
    FuzzyPrime,
    FuzzySemiprime,
    GammaSemigroup,
}

impl CheckKind {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default()
    }

    fn is_fuzzy(self) -> bool {
        matches!(
            self,
            CheckKind::FuzzyLeftIdeal
                | CheckKind::FuzzyRightIdeal
                | CheckKind::FuzzyIdeal
                | CheckKind::FuzzyPrime
                | CheckKind::FuzzySemiprime
        )
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OrderArg {
    Trivial,
    All,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    porcelain: bool,
    out: String,
    failed: bool,
}

impl Report {
    fn new(porcelain: bool) -> Self {
        Report {
            porcelain,
            out: String::new(),
            failed: false,
        }
    }

    /// One line from fields: space-separated normally, tab-separated in porcelain mode.
    fn line(&mut self, fields: &[&str]) {
        let sep = if self.porcelain { "\t" } else { " " };
        let _ = writeln!(self.out, "{}", fields.join(sep));
    }

    fn verdict(&mut self, v: &Verdict) {
        self.failed |= v.failed();
        if self.porcelain {
            let w = v.witness().map(|w| w.to_string()).unwrap_or_default();
            let status = v.status().to_string();
            let mut fields = vec![status.as_str(), v.claim()];
            if v.failed() {
                fields.push(&w);
            }
            self.line(&fields);
        } else {
            let _ = writeln!(self.out, "{v}");
        }
    }

    fn text(&mut self, s: &str) {
        self.out.push_str(s);
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let mut report = Report::new(cli.porcelain);
    match execute(cli.command, &mut report) {
        Ok(()) => Outcome {
            code: if report.failed { 1 } else { 0 },
            stdout: report.out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: report.out,
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_structure(path: &Path) -> anyhow::Result<OrderedGammaGroupoid> {
    let raw = parse_raw_structure(&read(path)?).with_context(|| path.display().to_string())?;
    validate_structure(&raw).with_context(|| path.display().to_string())
}

fn load_fuzzy(path: &Path, g: &OrderedGammaGroupoid) -> anyhow::Result<FuzzySubset> {
    let mu = parse_fuzzy(&read(path)?).with_context(|| path.display().to_string())?;
    if !mu.is_over(g) {
        return Err(Error::CarrierMismatch).with_context(|| path.display().to_string());
    }
    Ok(mu)
}

fn parse_grid(s: &str) -> anyhow::Result<Vec<Membership>> {
    let grid = s
        .split(',')
        .map(|t| t.trim().parse::<Membership>())
        .collect::<oggkit::Result<Vec<_>>>()?;
    check_grid(&grid)?;
    Ok(grid)
}

fn bounds(size: usize, gammas: usize, order: OrderArg, assoc: bool, override_caps: bool) -> anyhow::Result<EnumBounds> {
    let mut b = EnumBounds::new(size, gammas)
        .with_order(match order {
            OrderArg::All => OrderMode::All,
            OrderArg::Trivial => OrderMode::Trivial,
        })
        .assoc_only(assoc);
    if let Ok(v) = std::env::var(MAX_N_ENV) {
        let n: usize = v
            .parse()
            .with_context(|| format!("{MAX_N_ENV} must be a positive integer"))?;
        b.max_size = b.max_size.max(n);
    }
    if override_caps {
        b = b.uncapped();
    }
    Ok(b)
}

fn execute(command: Command, report: &mut Report) -> anyhow::Result<()> {
    match command {
        Command::Validate { file } => {
            let raw = parse_raw_structure(&read(&file)?).with_context(|| file.display().to_string())?;
            match validate_structure(&raw) {
                Ok(g) => {
                    if report.porcelain {
                        report.line(&["VALID", &g.size().to_string(), &g.gamma_count().to_string()]);
                    } else {
                        report.line(&[
                            "VALID",
                            &format!("elements={}", g.size()),
                            &format!("gammas={}", g.gamma_count()),
                        ]);
                    }
                }
                Err(e) => {
                    report.failed = true;
                    report.line(&["INVALID", &e.to_string()]);
                }
            }
        }

        Command::Check { kind, file, subset, fuzzy } => {
            let g = load_structure(&file)?;
            let verdict = if kind == CheckKind::GammaSemigroup {
                crisp::is_gamma_semigroup(&g)
            } else if kind.is_fuzzy() {
                let Some(path) = fuzzy else { bail!("--kind {} needs --fuzzy", kind.name()) };
                let mu = load_fuzzy(&path, &g)?;
                match kind {
                    CheckKind::FuzzyLeftIdeal => fuzzy::is_fuzzy_left_ideal(&g, &mu)?,
                    CheckKind::FuzzyRightIdeal => fuzzy::is_fuzzy_right_ideal(&g, &mu)?,
                    CheckKind::FuzzyIdeal => fuzzy::is_fuzzy_ideal(&g, &mu)?,
                    CheckKind::FuzzyPrime => fuzzy::is_fuzzy_prime(&g, &mu)?,
                    _ => fuzzy::is_fuzzy_semiprime(&g, &mu)?,
                }
            } else {
                let Some(list) = subset else { bail!("--kind {} needs --subset", kind.name()) };
                let names = list.split(',').map(str::trim).filter(|s| !s.is_empty());
                let a = CrispSubset::from_names(&g, names)?;
                match kind {
                    CheckKind::LeftIdeal => crisp::is_left_ideal(&g, &a)?,
                    CheckKind::RightIdeal => crisp::is_right_ideal(&g, &a)?,
                    CheckKind::Ideal => crisp::is_ideal(&g, &a)?,
                    CheckKind::Prime => crisp::is_prime_subset(&g, &a)?,
                    _ => crisp::is_semiprime_subset(&g, &a)?,
                }
            };
            report.verdict(&verdict);
        }

        Command::Levels { file, fuzzy, t } => {
            let g = load_structure(&file)?;
            let mu = load_fuzzy(&fuzzy, &g)?;
            match t {
                Some(t) => {
                    let cut = level_cut(&mu, parse_rational(&t)?)?;
                    if report.porcelain {
                        report.line(&[&t, &cut.render(&g)]);
                    } else {
                        report.line(&[&cut.render(&g)]);
                    }
                }
                None => {
                    for t in membership_image(&mu) {
                        let cut = mu.cut(t).render(&g);
                        if report.porcelain {
                            report.line(&[&t.to_string(), &cut]);
                        } else {
                            report.line(&[&format!("t={t}"), &cut]);
                        }
                    }
                }
            }
        }

        Command::Product { file, fuzzy, fuzzy2, limit } => {
            let g = load_structure(&file)?;
            let square = direct_square_with_limit(&g, limit)?;
            report.text(&serialize_structure(square.structure()));
            if let Some(path) = fuzzy {
                let mu = load_fuzzy(&path, &g)?;
                let sigma = match fuzzy2 {
                    Some(p) => load_fuzzy(&p, &g)?,
                    None => mu.clone(),
                };
                report.text("\n");
                report.text(&serialize_fuzzy(&fuzzy_product(&mu, &sigma)?));
            }
        }

        Command::Verify { claim, all, file, fuzzy, fuzzy2 } => {
            let g = load_structure(&file)?;
            let mu = load_fuzzy(&fuzzy, &g)?;
            let sigma = match fuzzy2 {
                Some(p) => load_fuzzy(&p, &g)?,
                None => mu.clone(),
            };
            let registry = ClaimRegistry::standard();
            let reports = if all {
                registry.verify_all(&g, &mu, Some(&sigma))?
            } else {
                let selector: ClaimSelector = claim.expect("clap enforces --claim").parse()?;
                let c = registry
                    .get(selector.id)
                    .ok_or_else(|| Error::UnknownClaim(selector.id.to_string()))?;
                vec![selector.filter(c.check(&g, &mu, &sigma)?)]
            };
            for r in &reports {
                for v in r.verdicts() {
                    report.verdict(v);
                }
            }
        }

        Command::Enumerate { size, gammas, order, assoc, count_only, dedup, override_caps } => {
            let b = bounds(size, gammas, order, assoc, override_caps)?.dedup(dedup);
            let stream = enumerate_structures(&b)?;
            if count_only {
                let count = stream.count().to_string();
                report.line(&["COUNT", &count]);
            } else {
                for (i, g) in stream.enumerate() {
                    if i > 0 {
                        report.text("\n");
                    }
                    report.text(&format!("# structure {}\n", i + 1));
                    report.text(&serialize_structure(&g));
                }
            }
        }

        Command::Hunt { claim, size, gammas, grid, order, assoc, override_caps } => {
            let id: ClaimId = claim.parse()?;
            let b = bounds(size, gammas, order, assoc, override_caps)?.with_grid(parse_grid(&grid)?);
            match hunt(id, &b)? {
                HuntOutcome::Found(cx) => {
                    report.verdict(&cx.verdict);
                    report.text("# structure\n");
                    report.text(&cx.structure);
                    report.text("# mu\n");
                    report.text(&cx.mu);
                    if let Some(sigma) = &cx.sigma {
                        report.text("# sigma\n");
                        report.text(sigma);
                    }
                }
                HuntOutcome::NotFound { instances } => {
                    if report.porcelain {
                        report.line(&["NOTFOUND", id.as_str(), &instances.to_string()]);
                    } else {
                        report.line(&["NOTFOUND", id.as_str(), &format!("instances={instances}")]);
                    }
                }
            }
        }
    }
    Ok(())
}
