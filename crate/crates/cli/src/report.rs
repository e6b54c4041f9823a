//! Structured run documents and their plain-text rendering.
//!
//! Tables are rendered from a [`Document`] alone, so a document read back
//! from JSON renders byte-for-byte the same table as the original run.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub command: String,
    pub polynomial: String,
    pub shift: Option<String>,
    pub seed: Option<Vec<String>>,
    pub rows: Vec<Row>,
    pub estimates: Vec<EstimateRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub j: usize,
    pub terms: Vec<String>,
    pub ratios: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EstimateRecord {
    /// Decimal rendering at the requested number of places.
    pub value: String,
    /// The underlying rational as `numerator/denominator`.
    pub exact: String,
    /// Stabilized significant digits.
    pub digits: usize,
    pub status: String,
    pub iterations: usize,
    pub shift: String,
    pub inverted: bool,
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document is plain data")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("polynomial: {}\n", self.polynomial));
        if let Some(shift) = &self.shift {
            out.push_str(&format!("shift: {shift}\n"));
        }
        if let Some(seed) = &self.seed {
            out.push_str(&format!("seed: {}\n", seed.join(",")));
        }
        if self.command == "sequences" {
            out.push_str(&render_rows(&self.rows));
        } else {
            out.push_str(&render_estimates(&self.estimates));
        }
        out
    }
}

/// Right-aligned columns separated by two spaces, trailing blanks trimmed.
pub(crate) fn render_grid(header: Vec<String>, body: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for line in &body {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(&header).chain(&body) {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_rows(rows: &[Row]) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let m = first.terms.len();
    let mut header = vec!["j".to_string()];
    header.extend((1..=m).map(|i| format!("S({i})")));
    header.extend((1..m).map(|i| format!("S({i})/S({})", i + 1)));
    let body = rows
        .iter()
        .map(|r| {
            let mut line = vec![r.j.to_string()];
            line.extend(r.terms.iter().cloned());
            line.extend(r.ratios.iter().cloned());
            line
        })
        .collect();
    render_grid(header, body)
}

fn render_estimates(estimates: &[EstimateRecord]) -> String {
    if estimates.is_empty() {
        return "no real roots found\n".to_string();
    }
    let header = [
        "root",
        "status",
        "iterations",
        "digits",
        "shift",
        "generator",
    ]
    .map(String::from)
    .to_vec();
    let body = estimates
        .iter()
        .map(|e| {
            vec![
                e.value.clone(),
                e.status.clone(),
                e.iterations.to_string(),
                e.digits.to_string(),
                e.shift.clone(),
                if e.inverted { "adjugate" } else { "affine" }.to_string(),
            ]
        })
        .collect();
    render_grid(header, body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_right_aligned() {
        let doc = Document {
            command: "sequences".into(),
            polynomial: "x^2 + 2x - 1".into(),
            shift: None,
            seed: Some(vec!["1".into(), "0".into()]),
            rows: vec![
                Row {
                    j: 0,
                    terms: vec!["1".into(), "0".into()],
                    ratios: vec!["inf".into()],
                },
                Row {
                    j: 1,
                    terms: vec!["-2".into(), "1".into()],
                    ratios: vec!["-2.0000".into()],
                },
            ],
            estimates: vec![],
        };
        let table = doc.render_table();
        assert_eq!(
            table,
            "polynomial: x^2 + 2x - 1\nseed: 1,0\n\
             j  S(1)  S(2)  S(1)/S(2)\n\
             0     1     0        inf\n\
             1    -2     1    -2.0000\n"
        );
        let back = Document::from_json(&doc.to_json()).unwrap();
        assert_eq!(back.render_table(), table);
    }
}
