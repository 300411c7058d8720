//! Deterministic serialization: every number is written with 17
//! significant digits in scientific notation, CSV rows end in `\n`, and
//! no locale-dependent formatting is involved anywhere.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::args::FormatArg;
use crate::CliError;

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A rectangular numeric table with named columns.
#[derive(Debug, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(',');
                }
                out.push_str(&fmt_f64(*v));
                first = false;
            }
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path, format: FormatArg) -> Result<(), CliError> {
        let bytes = match format {
            FormatArg::Csv => self.to_csv().into_bytes(),
            FormatArg::Json => {
                let mut b = serde_json::to_vec_pretty(self).expect("finite table serializes");
                b.push(b'\n');
                b
            }
        };
        write_file(path, &bytes)
    }
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(bytes)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_f64(0.05), "5.0000000000000003e-2");
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f64(-3.25e-11), "-3.2500000000000002e-11");
    }

    #[test]
    fn csv_shape() {
        let t = Table {
            columns: vec!["a".into(), "b".into()],
            rows: vec![vec![1.0, 2.0], vec![3.0, 0.5]],
        };
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "a,b");
        assert!(csv.ends_with('\n'));
        assert!(!csv.contains('\r'));
    }
}
