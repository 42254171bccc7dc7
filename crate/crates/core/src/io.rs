//! Text formats for [`GroupArray`]: JSON and CSV (round-trip), LaTeX and
//! pretty text (write-only).
//!
//! JSON: `{"group":[m1,...],"rows":m,"cols":n,"entries":[[[c,...],...],...],"report":{...}}`.
//! The report is informational; parsing ignores it and callers re-verify.
//!
//! CSV: one array row per line, cells `(c1,...,ct)` separated by `;`. A bare
//! integer is accepted for rank-one groups. The group is not stored, so the
//! reader must be told which presentation to use.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::array::GroupArray;
use crate::error::{Error, Result};
use crate::group::{write_coords, AbelianGroup, GroupElement};
use crate::verify::{verify, Classification, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Pretty,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" | "tex" => Ok(Format::Latex),
            "pretty" | "text" => Ok(Format::Pretty),
            other => Err(Error::invalid(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ArrayDocument {
    group: Vec<u64>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    report: Option<ReportDocument>,
}

#[derive(Serialize, Deserialize)]
struct ReportDocument {
    row_sums: Vec<Vec<u64>>,
    col_sums: Vec<Vec<u64>>,
    diag_sum: Option<Vec<u64>>,
    anti_diag_sum: Option<Vec<u64>>,
    bijective: bool,
    classification: Classification,
    magic_sum: Option<Vec<u64>>,
}

impl From<&VerificationReport> for ReportDocument {
    fn from(r: &VerificationReport) -> Self {
        let coords = |xs: &[GroupElement]| xs.iter().map(|x| x.coords().to_vec()).collect();
        let opt = |x: &Option<GroupElement>| x.as_ref().map(|x| x.coords().to_vec());
        Self {
            row_sums: coords(&r.row_sums),
            col_sums: coords(&r.col_sums),
            diag_sum: opt(&r.diag_sum),
            anti_diag_sum: opt(&r.anti_diag_sum),
            bijective: r.bijective,
            classification: r.classification,
            magic_sum: opt(&r.magic_sum),
        }
    }
}

pub fn serialize(a: &GroupArray, format: Format) -> String {
    match format {
        Format::Json => to_json(a),
        Format::Csv => to_csv(a),
        Format::Latex => to_latex(a),
        Format::Pretty => a.to_string(),
    }
}

pub fn to_json(a: &GroupArray) -> String {
    let doc = ArrayDocument {
        group: a.group().moduli().to_vec(),
        rows: a.rows(),
        cols: a.cols(),
        entries: a.to_rows(),
        report: Some(ReportDocument::from(&verify(a))),
    };
    serde_json::to_string_pretty(&doc).expect("documents always serialize") + "\n"
}

pub fn from_json(text: &str) -> Result<GroupArray> {
    let doc: ArrayDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        row: e.line(),
        col: e.column(),
        message: e.to_string(),
    })?;
    let group = AbelianGroup::new(&doc.group)?;
    if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
        return Err(Error::invalid("entries do not match the declared shape"));
    }
    GroupArray::from_rows(group, &doc.entries)
}

fn cell_text(coords: &[u64]) -> String {
    let mut s = String::new();
    if coords.len() == 1 {
        write!(s, "({})", coords[0]).expect("writing to a String");
    } else {
        write_coords(&mut s, coords).expect("writing to a String");
    }
    s
}

pub fn to_csv(a: &GroupArray) -> String {
    let mut out = String::new();
    for i in 0..a.rows() {
        let cells: Vec<String> = (0..a.cols()).map(|j| cell_text(a.coords(i, j))).collect();
        out.push_str(&cells.join(";"));
        out.push('\n');
    }
    out
}

pub fn from_csv(text: &str, group: &AbelianGroup) -> Result<GroupArray> {
    let mut rows = Vec::new();
    for (r, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
        let row = line
            .split(';')
            .enumerate()
            .map(|(c, cell)| parse_cell(cell, r, c))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            row: 0,
            col: 0,
            message: "empty input".into(),
        });
    }
    if let Some((r, row)) = rows
        .iter()
        .enumerate()
        .find(|(_, row)| row.len() != rows[0].len())
    {
        return Err(Error::Parse {
            row: r,
            col: row.len().min(rows[0].len()),
            message: format!("expected {} cells, found {}", rows[0].len(), row.len()),
        });
    }
    for (r, row) in rows.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if !group.contains_coords(cell) {
                return Err(Error::Parse {
                    row: r,
                    col: c,
                    message: format!("{cell:?} is not an element of {group}"),
                });
            }
        }
    }
    GroupArray::from_rows(group.clone(), &rows)
}

fn parse_cell(cell: &str, row: usize, col: usize) -> Result<Vec<u64>> {
    let err = |message: String| Error::Parse { row, col, message };
    let t = cell.trim();
    let inner = match (t.strip_prefix('('), t.strip_suffix(')')) {
        (Some(_), Some(_)) => &t[1..t.len() - 1],
        (None, None) => t,
        _ => return Err(err(format!("unbalanced parentheses in {t:?}"))),
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| err(format!("bad coordinate {:?}", v.trim())))
        })
        .collect()
}

pub fn to_latex(a: &GroupArray) -> String {
    let mut out = String::new();
    let spec = "|c".repeat(a.cols()) + "|";
    writeln!(out, "\\begin{{tabular}}{{{spec}}}").unwrap();
    out.push_str("\\hline\n");
    for i in 0..a.rows() {
        let cells: Vec<String> = (0..a.cols())
            .map(|j| {
                let mut s = String::new();
                write_coords(&mut s, a.coords(i, j)).unwrap();
                s
            })
            .collect();
        writeln!(out, "{} \\\\ \\hline", cells.join(" & ")).unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures;

    #[test]
    fn json_round_trip() {
        let a = figures::z3_z3();
        let text = to_json(&a);
        assert!(text.contains("\"classification\": \"magic-square\""));
        assert_eq!(from_json(&text).unwrap(), a);
    }

    #[test]
    fn csv_round_trip() {
        let a = figures::z3_z3();
        let text = to_csv(&a);
        assert_eq!(text.lines().next().unwrap(), "(0,0);(0,1);(0,2)");
        assert_eq!(from_csv(&text, a.group()).unwrap(), a);
        let z9 = figures::z9();
        assert_eq!(from_csv(&to_csv(&z9), z9.group()).unwrap(), z9);
    }

    #[test]
    fn csv_errors_carry_location() {
        let g = AbelianGroup::new(&[3, 3]).unwrap();
        let bad = "(0,0);(0,1)\n(1,0);(1,x)\n";
        assert!(matches!(
            from_csv(bad, &g),
            Err(Error::Parse { row: 1, col: 1, .. })
        ));
        let out_of_range = "(0,0);(0,3)\n";
        assert!(matches!(
            from_csv(out_of_range, &g),
            Err(Error::Parse { row: 0, col: 1, .. })
        ));
        let ragged = "(0,0);(0,1)\n(1,0)\n";
        assert!(matches!(
            from_csv(ragged, &g),
            Err(Error::Parse { row: 1, .. })
        ));
    }

    #[test]
    fn json_errors_are_parse_errors() {
        assert!(matches!(
            from_json("{\"group\": [3"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn latex_table_body() {
        let text = to_latex(&figures::z2_z8());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "\\begin{tabular}{|c|c|c|c|}");
        assert_eq!(lines[2], "(0,0) & (0,1) & (0,3) & (0,2) \\\\ \\hline");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn format_names() {
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }
}
