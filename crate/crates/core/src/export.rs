//! Byte-deterministic CSV, JSON and LaTeX renderings of the computed tables.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::center::{CentralElement, ClassPolyTable};
use crate::charmap::CharacterTable;
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::symfunc::TransitionMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "latex" => Ok(Self::Latex),
            _ => Err(Error::Parse(format!(
                "unknown format {s:?} (expected csv, json or latex)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Latex => "latex",
        })
    }
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 input")
}

fn json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// A `tabular` with a header row; cells are typeset in math mode.
fn latex_grid(corner: &str, cols: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut s = format!("\\begin{{tabular}}{{l|{}}}\n", "c".repeat(cols.len()));
    s.push_str(corner);
    for c in cols {
        s.push_str(&format!(" & ${c}$"));
    }
    s.push_str(" \\\\\n\\hline\n");
    for (label, cells) in rows {
        s.push_str(&format!("${label}$"));
        for c in cells {
            s.push_str(&format!(" & ${c}$"));
        }
        s.push_str(" \\\\\n");
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn square(order: &[crate::Partition], values: &[Vec<crate::RatFun>], corner: &str, format: Format) -> Option<String> {
    let cols: Vec<String> = order.iter().map(|p| p.paren()).collect();
    let rows: Vec<(String, Vec<String>)> = order
        .iter()
        .zip(values)
        .map(|(p, r)| (p.paren(), r.iter().map(|c| c.to_string()).collect()))
        .collect();
    match format {
        Format::Csv => {
            let header = std::iter::once(corner.to_string()).chain(cols).collect();
            Some(csv_string(std::iter::once(header).chain(rows.into_iter().map(
                |(l, mut r)| {
                    r.insert(0, l);
                    r
                },
            ))))
        }
        Format::Latex => Some(latex_grid(corner, &cols, &rows)),
        Format::Json => None,
    }
}

pub fn character_table(t: &CharacterTable, format: Format) -> String {
    square(t.partitions(), t.values(), "lambda\\mu", format).unwrap_or_else(|| json_string(t))
}

pub fn transition_matrix(m: &TransitionMatrix, format: Format) -> String {
    let corner = format!("{}\\{}", m.from, m.to);
    square(&m.order, &m.entries, &corner, format).unwrap_or_else(|| json_string(m))
}

/// CSV has one line per nonzero `f_{w,lambda}` with columns `w, lambda, f`.
pub fn class_polynomials(t: &ClassPolyTable, format: Format) -> String {
    match format {
        Format::Json => json_string(t),
        Format::Csv => {
            let header = vec!["w".to_string(), "lambda".to_string(), "f".to_string()];
            let body = t.rows().flat_map(|(w, row)| {
                t.partitions()
                    .iter()
                    .zip(row)
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(l, c)| vec![w.to_string(), l.paren(), c.to_string()])
            });
            csv_string(std::iter::once(header).chain(body))
        }
        Format::Latex => {
            let cols: Vec<String> = t.partitions().iter().map(|p| p.paren()).collect();
            let rows: Vec<(String, Vec<String>)> = t
                .rows()
                .map(|(w, row)| (w.to_string(), row.iter().map(|c| c.to_string()).collect()))
                .collect();
            latex_grid("w", &cols, &rows)
        }
    }
}

pub fn central_element(z: &CentralElement, format: Format) -> String {
    match format {
        Format::Json => json_string(z),
        Format::Csv => {
            let header = vec!["lambda".to_string(), "coeff".to_string()];
            let body = z.coords().map(|(l, c)| vec![l.paren(), c.to_string()]);
            csv_string(std::iter::once(header).chain(body))
        }
        Format::Latex => {
            let rows: Vec<(String, Vec<String>)> = z.coords().map(|(l, c)| (l.paren(), vec![c.to_string()])).collect();
            latex_grid("\\lambda", &["c_\\lambda".to_string()], &rows)
        }
    }
}

/// The Hecke elements `f*_lambda` (or any family indexed by partitions);
/// CSV has one line per nonzero coefficient with columns `lambda, w, coeff`.
pub fn hecke_family(members: &[(crate::Partition, HeckeElement)], format: Format) -> String {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Member<'a> {
                partition: &'a crate::Partition,
                element: &'a HeckeElement,
            }
            let list: Vec<Member> = members
                .iter()
                .map(|(p, h)| Member {
                    partition: p,
                    element: h,
                })
                .collect();
            json_string(&list)
        }
        Format::Csv => {
            let header = vec!["lambda".to_string(), "w".to_string(), "coeff".to_string()];
            let body = members.iter().flat_map(|(l, h)| {
                h.terms()
                    .map(move |(w, c)| vec![l.paren(), w.to_string(), c.to_string()])
            });
            csv_string(std::iter::once(header).chain(body))
        }
        Format::Latex => {
            let rows: Vec<(String, Vec<String>)> = members
                .iter()
                .flat_map(|(l, h)| {
                    h.terms()
                        .map(move |(w, c)| (l.paren(), vec![w.to_string(), c.to_string()]))
                })
                .collect();
            latex_grid("\\lambda", &["w".to_string(), "c_w".to_string()], &rows)
        }
    }
}
