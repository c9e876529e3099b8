//! `table`: the `T(n; k)` grid of one family, rows `n = 0..=n_max`,
//! columns `k = 1..=k_max`.

use serde::Serialize;

use super::format::{to_csv, to_json, to_plain_grid, JsonRecord, OutputFormat};
use crate::error::{Error, Result};
use crate::sequences::{FamilyTag, Term};

/// A reference table cell known to be misprinted. The computed value follows
/// the defining product relation instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Misprint {
    pub table: u8,
    pub n: u64,
    pub k: u64,
    pub printed: &'static str,
}

pub const KNOWN_MISPRINTS: [Misprint; 3] = [
    Misprint {
        table: 3,
        n: 3,
        k: 5,
        printed: "-i/4",
    },
    Misprint {
        table: 4,
        n: 3,
        k: 5,
        printed: "-i/4",
    },
    Misprint {
        table: 4,
        n: 5,
        k: 2,
        printed: "(27x^3-3x^2-6x)+i(18x^2-2)",
    },
];

pub fn table_family(id: u8) -> Option<FamilyTag> {
    match id {
        1 => Some(FamilyTag::M),
        2 => Some(FamilyTag::MP),
        3 => Some(FamilyTag::GM),
        4 => Some(FamilyTag::GMP),
        _ => None,
    }
}

fn title(family: FamilyTag) -> &'static str {
    match family {
        FamilyTag::M => "k-Mersenne numbers M(n; k)",
        FamilyTag::MP => "k-Mersenne polynomials M(n; k)(x)",
        FamilyTag::GM => "k-Gaussian Mersenne numbers GM(n; k)",
        FamilyTag::GMP => "k-Gaussian Mersenne polynomials GM(n; k)(x)",
    }
}

pub fn misprint(table: u8, n: u64, k: u64) -> Option<&'static Misprint> {
    KNOWN_MISPRINTS
        .iter()
        .find(|m| m.table == table && m.n == n && m.k == k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCell {
    pub n: u64,
    pub k: u64,
    pub value: Term,
    pub misprint: Option<&'static str>,
}

/// Rows of cells, computed from the product relation.
pub fn table_cells(id: u8, n_max: u64, k_max: u64) -> Result<Vec<Vec<TableCell>>> {
    let family = table_family(id).ok_or(Error::BelowMinimum {
        name: "table",
        value: id.into(),
        min: 1,
    })?;
    if n_max < 1 {
        return Err(Error::BelowMinimum {
            name: "n-max",
            value: n_max,
            min: 1,
        });
    }
    if k_max < 1 {
        return Err(Error::BelowMinimum {
            name: "k-max",
            value: k_max,
            min: 1,
        });
    }
    (0..=n_max)
        .map(|n| {
            (1..=k_max)
                .map(|k| {
                    Ok(TableCell {
                        n,
                        k,
                        value: family.term(n, k)?,
                        misprint: misprint(id, n, k).map(|m| m.printed),
                    })
                })
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
struct JsonTable {
    table: u8,
    family: String,
    cells: Vec<JsonRecord>,
}

pub fn render_table(id: u8, n_max: u64, k_max: u64, format: OutputFormat) -> Result<String> {
    let rows = table_cells(id, n_max, k_max)?;
    let family = table_family(id).expect("validated by table_cells");
    Ok(match format {
        OutputFormat::Plain => {
            let mut grid = vec![std::iter::once("n\\k".to_string())
                .chain((1..=k_max).map(|k| k.to_string()))
                .collect::<Vec<_>>()];
            let mut notes = Vec::new();
            for row in &rows {
                let mut line = vec![row[0].n.to_string()];
                for cell in row {
                    match cell.misprint {
                        Some(printed) => {
                            notes.push(format!(
                                "* n={}, k={}: reference table prints {printed}",
                                cell.n, cell.k
                            ));
                            line.push(format!("{}*", cell.value));
                        }
                        None => line.push(cell.value.to_string()),
                    }
                }
                grid.push(line);
            }
            let mut out = format!("Table {id}: {}\n", title(family));
            out.push_str(&to_plain_grid(&grid));
            for note in notes {
                out.push_str(&note);
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => to_csv(
            &["family", "n", "k", "value", "misprint"],
            rows.iter().flatten().map(|c| {
                [
                    family.to_string(),
                    c.n.to_string(),
                    c.k.to_string(),
                    c.value.to_string(),
                    c.misprint.unwrap_or("").to_string(),
                ]
            }),
        ),
        OutputFormat::Json => to_json(&JsonTable {
            table: id,
            family: family.to_string(),
            cells: rows
                .iter()
                .flatten()
                .map(|c| JsonRecord {
                    misprint: c.misprint.map(str::to_string),
                    ..JsonRecord::new(family, c.n, c.k, &c.value)
                })
                .collect(),
        }),
    })
}
