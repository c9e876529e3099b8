//! Parameter grids that run every checker over its default range.
//!
//! Grid cells are independent and evaluated on the rayon pool; results keep
//! the grid's enumeration order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::*;
use crate::polynomials::{default_binet_samples, BinetCheck};
use crate::sequences::{seq_stream, Term};

/// Default relative tolerance of the Binet suite.
pub const BINET_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    ClosedForm,
    Cassini,
    Catalan,
    Docagne,
    KCassini,
    Shift,
    Difference,
    TwoIndex,
    Genfunc,
    KRelations,
    Structural,
    Binet,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::ClosedForm,
        Suite::Cassini,
        Suite::Catalan,
        Suite::Docagne,
        Suite::KCassini,
        Suite::Shift,
        Suite::Difference,
        Suite::TwoIndex,
        Suite::Genfunc,
        Suite::KRelations,
        Suite::Structural,
        Suite::Binet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ClosedForm => "closed-form",
            Suite::Cassini => "cassini",
            Suite::Catalan => "catalan",
            Suite::Docagne => "docagne",
            Suite::KCassini => "k-cassini",
            Suite::Shift => "shift",
            Suite::Difference => "difference",
            Suite::TwoIndex => "two-index",
            Suite::Genfunc => "genfunc",
            Suite::KRelations => "k-relations",
            Suite::Structural => "structural",
            Suite::Binet => "binet",
        }
    }

    /// Families the suite is defined for.
    pub fn families(self) -> &'static [FamilyTag] {
        use FamilyTag::*;
        match self {
            Suite::Catalan | Suite::Docagne => &[GM],
            Suite::ClosedForm | Suite::Genfunc => &[M, GM],
            Suite::Binet => &[MP, GMP],
            _ => &FamilyTag::ALL,
        }
    }

    fn min_n(self) -> u64 {
        match self {
            Suite::Cassini | Suite::Catalan | Suite::Docagne | Suite::Shift => 1,
            Suite::TwoIndex | Suite::Genfunc => 1,
            Suite::KCassini => 2,
            _ => 0,
        }
    }

    fn min_k(self) -> u64 {
        match self {
            Suite::KCassini => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!(
                    "unknown suite {s:?}; expected one of {} or all",
                    names.join(", ")
                )
            })
    }
}

/// Optional overrides of a suite's default grid.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GridConfig {
    pub family: Option<FamilyTag>,
    pub n_max: Option<u64>,
    pub k_max: Option<u64>,
}

/// One evaluated grid cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Identity(IdentityReport),
    Binet(BinetCheck),
}

impl Cell {
    pub fn passed(&self) -> bool {
        match self {
            Cell::Identity(r) => r.holds,
            Cell::Binet(b) => b.passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub cells: Vec<Cell>,
}

impl SuiteOutcome {
    pub fn total(&self) -> usize {
        self.cells.len()
    }

    pub fn passed(&self) -> usize {
        self.cells.iter().filter(|c| c.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.cells.iter().all(Cell::passed)
    }

    pub fn first_failure(&self) -> Option<&Cell> {
        self.cells.iter().find(|c| !c.passed())
    }
}

fn par_cells<P, F>(params: Vec<P>, check: F) -> Result<Vec<Cell>>
where
    P: Send,
    F: Fn(P) -> Result<Cell> + Sync + Send,
{
    params.into_par_iter().map(check).collect()
}

fn identity<P, F>(params: Vec<P>, check: F) -> Result<Vec<Cell>>
where
    P: Send,
    F: Fn(P) -> Result<IdentityReport> + Sync + Send,
{
    par_cells(params, |p| check(p).map(Cell::Identity))
}

/// Closed form against one pass of the recurrence for `n <= n_max`.
fn closed_form_cells(family: FamilyTag, n_max: u64) -> Result<Vec<Cell>> {
    let oracle: Vec<(u64, Term)> = (0..).zip(seq_stream(family, n_max + 1, 1)?).collect();
    par_cells(oracle, move |(n, expected)| {
        let fast = match family {
            FamilyTag::M => Term::Integer(sequences::mersenne(n)?),
            _ => Term::Gaussian(sequences::gaussian_mersenne(n)?),
        };
        Ok(Cell::Identity(IdentityReport::new(
            "closed-form",
            Some(family),
            "closed form T(n) vs recurrence",
            vec![("n", n)],
            fast.to_polynomial(),
            expected.to_polynomial(),
        )))
    })
}

pub fn run_suite(suite: Suite, config: &GridConfig) -> Result<SuiteOutcome> {
    if let Some(family) = config.family {
        if !suite.families().contains(&family) {
            return Err(Error::UnsupportedFamily {
                family,
                operation: suite.name(),
            });
        }
    }
    if let Some(n_max) = config.n_max {
        require_min("n-max", n_max, suite.min_n())?;
    }
    if let Some(k_max) = config.k_max {
        require_min("k-max", k_max, suite.min_k())?;
    }
    let families: Vec<FamilyTag> = match config.family {
        Some(f) => vec![f],
        None => suite.families().to_vec(),
    };
    let n_or = |default: u64| config.n_max.unwrap_or(default);
    let k_or = |default: u64| config.k_max.unwrap_or(default);
    let poly_or = |family: FamilyTag, number: u64, poly: u64| {
        n_or(if family.is_polynomial() { poly } else { number })
    };

    let mut cells = Vec::new();
    for family in families {
        let mut batch = match suite {
            Suite::ClosedForm => closed_form_cells(
                family,
                n_or(if family == FamilyTag::M {
                    10_000
                } else {
                    1_000
                }),
            )?,
            Suite::Cassini => {
                let ns: Vec<u64> = (1..=poly_or(family, 256, 48)).collect();
                identity(ns, |n| check_cassini(family, n))?
            }
            Suite::Catalan => {
                let grid: Vec<(u64, u64)> = (1..=n_or(64))
                    .flat_map(|n| (1..=n).map(move |m| (n, m)))
                    .collect();
                identity(grid, |(n, m)| check_catalan_gaussian(n, m))?
            }
            Suite::Docagne => {
                let top = n_or(64);
                let grid: Vec<(u64, u64)> = (1..=top)
                    .flat_map(|n| (1..=top).map(move |m| (n, m)))
                    .collect();
                identity(grid, |(n, m)| check_docagne_gaussian(n, m))?
            }
            Suite::KCassini => {
                let top = poly_or(family, 32, 12);
                let grid: Vec<(u64, u64, u64)> = (2..=k_or(8))
                    .flat_map(|k| (2..=top).flat_map(move |n| (0..=k).map(move |a| (n, k, a))))
                    .collect();
                identity(grid, |(n, k, a)| check_k_cassini(family, n, k, a))?
            }
            Suite::Shift => {
                let grid: Vec<(u64, u64)> = (1..=k_or(8))
                    .flat_map(|s| (1..=n_or(32)).map(move |n| (n, s)))
                    .collect();
                identity(grid, |(n, s)| check_shift(family, n, s))?
            }
            Suite::Difference => {
                let grid: Vec<(u64, u64)> = (1..=k_or(8))
                    .flat_map(|k| (0..=n_or(32)).map(move |s| (s, k)))
                    .collect();
                identity(grid, |(s, k)| check_difference(family, s, k))?
            }
            Suite::TwoIndex => {
                let top = n_or(32);
                let grid: Vec<(u64, u64)> = (0..=top)
                    .flat_map(|n| (0..=top).map(move |m| (n, m)))
                    .filter(|&(n, m)| n + m > 1)
                    .collect();
                identity(grid, |(n, m)| check_two_index(family, n, m))?
            }
            Suite::Genfunc => vec![Cell::Identity(check_genfunc(family, n_or(64))?)],
            Suite::KRelations => {
                let ns: Vec<u64> = (0..=poly_or(family, 64, 32)).collect();
                let nested = ns
                    .into_par_iter()
                    .map(|n| check_small_k_relations(family, n))
                    .collect::<Result<Vec<_>>>()?;
                nested.into_iter().flatten().map(Cell::Identity).collect()
            }
            Suite::Structural => structural_cells(family, config)?,
            Suite::Binet => {
                if family != FamilyTag::MP && config.family.is_none() {
                    // one Binet sweep covers both polynomial families
                    continue;
                }
                let samples = default_binet_samples();
                let grid: Vec<(u64, GaussianDyadic)> = (0..=n_or(40))
                    .flat_map(|n| samples.iter().cloned().map(move |x0| (n, x0)))
                    .collect();
                par_cells(grid, |(n, x0)| {
                    check_binet(n, &x0, BINET_TOLERANCE).map(Cell::Binet)
                })?
            }
        };
        cells.append(&mut batch);
    }
    Ok(SuiteOutcome { suite, cells })
}

fn structural_cells(family: FamilyTag, config: &GridConfig) -> Result<Vec<Cell>> {
    let n_or = |default: u64| config.n_max.unwrap_or(default);
    let mut cells = Vec::new();
    match family {
        FamilyTag::GM => {
            let ns: Vec<u64> = (0..=n_or(256)).collect();
            cells.extend(identity(ns, |n| check_gaussian_split(family, n))?);
        }
        FamilyTag::GMP => {
            let ns: Vec<u64> = (0..=n_or(200)).collect();
            cells.extend(identity(ns.clone(), |n| check_gaussian_split(family, n))?);
            cells.extend(identity(ns, |n| check_unit_evaluation(family, n))?);
        }
        FamilyTag::MP => {
            let ns: Vec<u64> = (0..=n_or(200)).collect();
            cells.extend(identity(ns, |n| check_unit_evaluation(family, n))?);
        }
        FamilyTag::M => {}
    }
    let grid: Vec<(u64, u64)> = (1..=config.k_max.unwrap_or(8))
        .flat_map(|k| (0..=n_or(32)).map(move |s| (s, k)))
        .collect();
    cells.extend(identity(grid, |(s, k)| check_power_relation(family, s, k))?);
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn cassini_default_grid_size() {
        let out = run_suite(
            Suite::Cassini,
            &GridConfig {
                family: Some(FamilyTag::M),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(out.total(), 256);
        assert!(out.all_passed());
    }

    #[test]
    fn invalid_ranges_are_rejected() {
        let cfg = GridConfig {
            n_max: Some(0),
            ..Default::default()
        };
        assert!(run_suite(Suite::Docagne, &cfg).is_err());
        let cfg = GridConfig {
            k_max: Some(1),
            ..Default::default()
        };
        assert!(run_suite(Suite::KCassini, &cfg).is_err());
        let cfg = GridConfig {
            family: Some(FamilyTag::M),
            ..Default::default()
        };
        assert!(matches!(
            run_suite(Suite::Catalan, &cfg),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn small_grids_pass() {
        let cfg = GridConfig {
            n_max: Some(6),
            k_max: Some(3),
            family: None,
        };
        for suite in Suite::ALL {
            let out = run_suite(suite, &cfg).unwrap();
            assert!(out.total() > 0, "{suite}");
            assert!(out.all_passed(), "{suite}: {:?}", out.first_failure());
        }
    }
}
