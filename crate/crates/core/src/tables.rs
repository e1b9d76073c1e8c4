//! Facsimiles of the ten reference tables for the Cl(3,0) taxonomy:
//! table 1 lists the choirs, tables 2-5 the four modes, table 6 the bands
//! and tables 7-10 the rhythms.

use serde::Serialize;

use crate::enumerate::{Block, TaxonomyReport};
use crate::error::{Error, Result};
use crate::taxonomy::GroupRecord;

/// Display-only names for the nine Cl(3,0) choirs.
const CHOIR_NAMES: [(&str, &str); 9] = [
    ("{±1}", "Seraphim"),
    ("E_a", "Cherubim"),
    ("E_ab", "Thrones"),
    ("E_abc", "Virtues"),
    ("E_a E_b", "Dominations"),
    ("E_a E_ab", "Powers"),
    ("E_ab E_ac", "Principalities"),
    ("E_a E_b E_c", "Archangels"),
    ("E_a E_ab E_ac", "Angels"),
];

/// Patterns the reference rhythm tables print under a relabeled name.
const RELABELED_IN_REFERENCE: [(&str, &str); 1] = [("E_ab E_abc", "E_bc E_abc")];

const MODE_TABLES: std::ops::RangeInclusive<u8> = 2..=5;
const RHYTHM_TABLES: std::ops::RangeInclusive<u8> = 7..=10;

pub fn choir_name(pattern: &str) -> Option<&'static str> {
    CHOIR_NAMES
        .iter()
        .find(|(p, _)| *p == pattern)
        .map(|(_, name)| *name)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub id: u8,
    pub caption: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub footnotes: Vec<String>,
}

fn headers(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|c| c.to_string()).collect()
}

fn choir_row(r: &GroupRecord) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.target.to_string(),
        r.pattern.to_string(),
        r.signature_string(),
    ]
}

fn band_row(r: &GroupRecord) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.target.to_string(),
        r.pattern.to_string(),
        r.signature_string(),
        r.disorder.to_string(),
        r.chord_string(),
        r.beat_string(),
    ]
}

fn block_records<'a>(report: &'a TaxonomyReport, block: &Block) -> Vec<&'a GroupRecord> {
    block.members.iter().map(|&i| &report.classes[i]).collect()
}

/// Rows of table `id` (1..=10) for a report enumerated at dimension 3 with
/// at least three generators.
pub fn table_rows(report: &TaxonomyReport, id: u8) -> Result<Table> {
    if !(1..=10).contains(&id) {
        return Err(Error::TableOutOfRange(id));
    }
    if report.dim != 3 || report.max_gens < 3 {
        return Err(Error::NotReferenceReport {
            dim: report.dim,
            cap: report.max_gens,
        });
    }
    let choirs = report
        .classes
        .iter()
        .filter(|r| r.verdict == crate::taxonomy::Verdict::Choir);
    let bands = report
        .classes
        .iter()
        .filter(|r| r.verdict == crate::taxonomy::Verdict::Band);
    let band_headers = headers(&["n", "≇", "Band", "Sign", "Φ", "X", "B"]);

    let table = match id {
        1 => Table {
            id,
            caption: "Choirs by Clifford signature".into(),
            headers: headers(&["n", "≅", "Choir", "Sign", "Name"]),
            rows: choirs
                .map(|r| {
                    let mut row = choir_row(r);
                    row.push(choir_name(r.pattern.as_str()).unwrap_or("").to_string());
                    row
                })
                .collect(),
            footnotes: Vec::new(),
        },
        2..=5 => {
            let k = (id - MODE_TABLES.start()) as usize;
            let block = report.modes.get(k).ok_or(Error::NotReferenceReport {
                dim: report.dim,
                cap: report.max_gens,
            })?;
            let members = block_records(report, block);
            let mut footnotes = Vec::new();
            if members.iter().map(|r| r.n).collect::<Vec<_>>() != vec![k; members.len()] {
                footnotes.push(format!("# mode {k} mixes generator counts"));
            }
            if k == 1 {
                footnotes.push(
                    "# n counts nontrivial generators; the reference table prints n = 2 and 3 for E_ab and E_abc"
                        .into(),
                );
            }
            Table {
                id,
                caption: format!("Mode {k} led by {}", report.classes[block.leader].pattern),
                headers: headers(&["n", "≅", "Choir", "Sign"]),
                rows: members.into_iter().map(choir_row).collect(),
                footnotes,
            }
        }
        6 => Table {
            id,
            caption: "Bands by signature, disorder, chord and beat".into(),
            headers: band_headers,
            rows: bands.map(band_row).collect(),
            footnotes: Vec::new(),
        },
        _ => {
            let k = (id - RHYTHM_TABLES.start()) as usize;
            let block = report.rhythms.get(k).ok_or(Error::NotReferenceReport {
                dim: report.dim,
                cap: report.max_gens,
            })?;
            let members = block_records(report, block);
            let mut footnotes: Vec<String> = members
                .iter()
                .filter_map(|r| {
                    RELABELED_IN_REFERENCE
                        .iter()
                        .find(|(p, _)| *p == r.pattern.as_str())
                        .map(|(p, shown)| {
                            format!("# {p} appears in the reference table as {shown}")
                        })
                })
                .collect();
            footnotes.extend(reference_notes(report));
            Table {
                id,
                caption: format!("Rhythm of {}", report.classes[block.leader].pattern),
                headers: band_headers,
                rows: members.into_iter().map(band_row).collect(),
                footnotes,
            }
        }
    };
    Ok(table)
}

/// Rhythms that the four rhythm tables cannot hold, as `#` footnotes.
/// Empty unless the report is the dimension-3 reference enumeration.
pub fn reference_notes(report: &TaxonomyReport) -> Vec<String> {
    if report.dim != 3 || report.max_gens < 3 {
        return Vec::new();
    }
    let slots = RHYTHM_TABLES.count();
    let covered: usize = report
        .rhythms
        .iter()
        .take(slots)
        .map(|b| b.members.len())
        .sum();
    report
        .rhythms
        .iter()
        .skip(slots)
        .map(|b| {
            format!(
                "# {} forms its own rhythm ({} member{}) and appears in none of tables 7-10, which list {} of the {} bands",
                report.classes[b.leader].pattern,
                b.members.len(),
                if b.members.len() == 1 { "" } else { "s" },
                covered,
                report.counts.bands
            )
        })
        .collect()
}

impl Table {
    pub fn to_text(&self) -> String {
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| {
                std::iter::once(&self.headers[c])
                    .chain(self.rows.iter().map(|r| &r[c]))
                    .map(|s| s.chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join(" | ").trim_end().to_string()
        };
        let mut out = format!("Table {}. {}\n", self.id, self.caption);
        out.push_str(&line(&self.headers));
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&rule.join("-+-"));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        for note in &self.footnotes {
            out.push_str(note);
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let mut out = String::from_utf8(w.into_inner().map_err(|e| e.into_error())?)
            .expect("csv output is utf-8");
        for note in &self.footnotes {
            out.push_str(note);
            out.push('\n');
        }
        Ok(out)
    }
}
