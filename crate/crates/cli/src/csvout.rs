//! Minimal CSV emission: header row, LF line endings, UTF-8, decimal
//! integers unquoted, reals with 12 significant digits. Fields produced here
//! never contain commas, quotes or newlines, so no quoting is required.

use std::io::Write;
use std::path::Path;

pub struct Csv {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new(header: &[&'static str]) -> Self {
        Csv {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, fields: Vec<String>) {
        debug_assert_eq!(fields.len(), self.header.len());
        debug_assert!(fields
            .iter()
            .all(|f| !f.contains(',') && !f.contains('"') && !f.contains('\n')));
        self.rows.push(fields);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.render().as_bytes())
    }
}

/// Real with 12 significant digits; infinities render as inf/-inf markers.
pub fn real(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.11e}")
    } else if v.is_nan() {
        "nan".to_string()
    } else if v > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}
