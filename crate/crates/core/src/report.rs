//! Serializable documents for the command-line surface.
//!
//! Rationals are always written as `"p/q"` strings, in JSON and CSV alike.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{highest_roots, multiplicities, TheoremReport};
use crate::error::{Error, Result};
use crate::roots::{RatVector, RootSystem};
use crate::weyl::{apply_word, WeylWord};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDocument {
    pub simple_index: usize,
    pub bourbaki_label: usize,
    pub simple_root: Vec<String>,
    pub m: i64,
    pub m_dual: i64,
    pub special: bool,
    pub cospecial: bool,
    pub quasi_constant: bool,
    pub dom_eq_levi_dom: bool,
    pub dominant: Vec<String>,
    pub levi_dominant: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub ctype: String,
    pub rank: usize,
    pub rows: Vec<RowDocument>,
    pub highest_root: Vec<String>,
    pub highest_short: Vec<String>,
    pub all_equivalent: bool,
}

impl ReportDocument {
    /// Projects a report, replaying every witness word before accepting it.
    pub fn from_report(s: &RootSystem, report: &TheoremReport) -> Result<Self> {
        let rows = report
            .rows
            .iter()
            .map(|r| {
                let alpha = s.simple(r.simple_index);
                if let Some(w) = &r.witness {
                    if !w.avoids(r.simple_index) || apply_word(s, w, alpha)? != r.dominant {
                        return Err(Error::WitnessFailed(r.simple_index));
                    }
                }
                Ok(RowDocument {
                    simple_index: r.simple_index,
                    bourbaki_label: r.simple_index + 1,
                    simple_root: alpha.to_pq_strings(),
                    m: r.m,
                    m_dual: r.m_dual,
                    special: r.special,
                    cospecial: r.cospecial,
                    quasi_constant: r.quasi_constant,
                    dom_eq_levi_dom: r.dom_eq_levi_dom,
                    dominant: r.dominant.to_pq_strings(),
                    levi_dominant: r.levi_dominant.to_pq_strings(),
                    witness: r.witness.as_ref().map(|w| w.letters().to_vec()),
                })
            })
            .collect::<Result<_>>()?;
        Ok(ReportDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            ctype: report.name.clone(),
            rank: s.rank(),
            rows,
            highest_root: report.highest_root.to_pq_strings(),
            highest_short: report.highest_short.to_pq_strings(),
            all_equivalent: report.all_equivalent,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn highest_root_vector(&self) -> Result<RatVector> {
        RatVector::from_pq_strings(&self.highest_root)
    }

    pub fn highest_short_vector(&self) -> Result<RatVector> {
        RatVector::from_pq_strings(&self.highest_short)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "simple_index,bourbaki_label,simple_root,m,m_dual,special,cospecial,\
             quasi_constant,dom_eq_levi_dom,dominant,levi_dominant,witness\n",
        );
        for r in &self.rows {
            let witness = r
                .witness
                .as_ref()
                .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                r.simple_index,
                r.bourbaki_label,
                r.simple_root.join(" "),
                r.m,
                r.m_dual,
                r.special,
                r.cospecial,
                r.quasi_constant,
                r.dom_eq_levi_dom,
                r.dominant.join(" "),
                r.levi_dominant.join(" "),
                witness
            )
            .unwrap();
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "type {}  (rank {})", self.ctype, self.rank).unwrap();
        writeln!(out, "highest root        {}", paren(&self.highest_root)).unwrap();
        writeln!(out, "highest short root  {}", paren(&self.highest_short)).unwrap();
        writeln!(out).unwrap();
        let header = [
            "idx", "label", "simple root", "m", "m∨", "special", "co-special", "quasi-const",
            "dom=dom_α", "witness",
        ];
        let body: Vec<[String; 10]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.simple_index.to_string(),
                    format!("α{}", r.bourbaki_label),
                    paren(&r.simple_root),
                    r.m.to_string(),
                    r.m_dual.to_string(),
                    yes_no(r.special),
                    yes_no(r.cospecial),
                    yes_no(r.quasi_constant),
                    yes_no(r.dom_eq_levi_dom),
                    r.witness
                        .as_ref()
                        .map(|w| WeylWord::new(w.clone()).to_string())
                        .unwrap_or_else(|| "-".into()),
                ]
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                body.iter()
                    .map(|row| row[c].chars().count())
                    .chain([header[c].chars().count()])
                    .max()
                    .unwrap()
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_owned()
        };
        writeln!(out, "{}", line(header.to_vec())).unwrap();
        for row in &body {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
        }
        writeln!(
            out,
            "\nall rows consistent: {}",
            if self.all_equivalent { "yes" } else { "NO" }
        )
        .unwrap();
        out
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_owned()
}

// human-readable: integers without the `/1`
fn paren(coords: &[String]) -> String {
    let shown: Vec<&str> = coords.iter().map(|c| c.strip_suffix("/1").unwrap_or(c)).collect();
    format!("({})", shown.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root: Vec<String>,
    pub coefficients: Vec<i64>,
    pub height: i64,
}

/// Dump of a root system: simple roots, form, highest roots, positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescribeDocument {
    pub schema_version: String,
    pub ctype: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub root_count: usize,
    pub positive_count: usize,
    pub simply_laced: bool,
    pub simple_roots: Vec<Vec<String>>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub form: Vec<Vec<String>>,
    pub highest_root: RootEntry,
    pub highest_short: RootEntry,
    pub positive_roots: Vec<RootEntry>,
}

impl DescribeDocument {
    pub fn new(s: &RootSystem) -> Self {
        let entry = |v: &RatVector| {
            let coefficients = multiplicities(s, v).expect("root").root;
            RootEntry {
                root: v.to_pq_strings(),
                height: coefficients.iter().sum(),
                coefficients,
            }
        };
        let (h, h2) = highest_roots(s);
        let gram = s.form().gram();
        DescribeDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            ctype: s.name(),
            rank: s.rank(),
            ambient_dim: s.ambient_dim(),
            root_count: s.roots().len(),
            positive_count: s.positives().len(),
            simply_laced: s.is_simply_laced(),
            simple_roots: s.simples().map(RatVector::to_pq_strings).collect(),
            cartan_matrix: s.cartan_matrix(),
            form: (0..gram.rows())
                .map(|r| (0..gram.cols()).map(|c| crate::roots::format_pq(gram.get(r, c))).collect())
                .collect(),
            highest_root: entry(&h),
            highest_short: entry(&h2),
            positive_roots: s.positives().iter().map(|&k| entry(s.root(k))).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("description serializes")
    }

    pub fn to_text(&self) -> String {
        let combo = |c: &[i64]| {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(i, &m)| if m == 1 { format!("α{}", i + 1) } else { format!("{m}α{}", i + 1) })
                .collect();
            terms.join(" + ")
        };
        let mut out = String::new();
        writeln!(out, "type {}  rank {}  ambient dimension {}", self.ctype, self.rank, self.ambient_dim).unwrap();
        writeln!(
            out,
            "{} roots, {} positive, {}",
            self.root_count,
            self.positive_count,
            if self.simply_laced { "simply-laced" } else { "multi-laced" }
        )
        .unwrap();
        writeln!(out, "\nsimple roots").unwrap();
        for (i, r) in self.simple_roots.iter().enumerate() {
            writeln!(out, "  [{i}] α{} = {}", i + 1, paren(r)).unwrap();
        }
        writeln!(out, "\ncartan matrix <α_i, α_j∨>").unwrap();
        for row in &self.cartan_matrix {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(out, "  {}", cells.join("")).unwrap();
        }
        writeln!(out, "\nform (Gram matrix on ambient coordinates)").unwrap();
        for row in &self.form {
            let cells: Vec<&str> = row.iter().map(|c| c.strip_suffix("/1").unwrap_or(c)).collect();
            writeln!(out, "  {}", cells.join(" ")).unwrap();
        }
        for (label, e) in [("highest root", &self.highest_root), ("highest short root", &self.highest_short)] {
            writeln!(
                out,
                "\n{label}: {} = {}  (height {})",
                paren(&e.root),
                combo(&e.coefficients),
                e.height
            )
            .unwrap();
        }
        writeln!(out, "\npositive roots (height: root = combination)").unwrap();
        for e in &self.positive_roots {
            writeln!(out, "  {:>2}: {} = {}", e.height, paren(&e.root), combo(&e.coefficients)).unwrap();
        }
        out
    }
}
