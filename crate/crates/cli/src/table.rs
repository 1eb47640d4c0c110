use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::error::CliError;

/// Shortest round-trip decimal, in exponent form outside `[1e-5, 1e16)`.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Writes a header and rows as CSV to `path`, or to stdout when `None`.
pub fn write_csv(path: Option<&Path>, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut buf = Vec::new();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        let wrap = |e| CliError::Csv {
            path: path.map(Path::to_path_buf).unwrap_or_else(|| "<stdout>".into()),
            source: e,
        };
        w.write_record(header).map_err(wrap)?;
        for r in rows {
            w.write_record(r).map_err(wrap)?;
        }
        w.flush().map_err(|e| CliError::io("<buffer>", e))?;
    }
    write_bytes(path, &buf)
}

pub fn write_bytes(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| CliError::io(p, e)),
        None => io::stdout().write_all(bytes).map_err(|e| CliError::io("<stdout>", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(num(0.0), "0");
        assert_eq!(num(1.5), "1.5");
        assert_eq!(num(-2.0), "-2");
        assert_eq!(num(f64::NAN), "nan");
        assert_eq!(num(f64::NEG_INFINITY), "-inf");
        assert_eq!(num(1e-20), "1e-20");
        assert_eq!(num(2.5e17), "2.5e17");
        for x in [0.1, 1.0 / 3.0, 2f64.sqrt(), 1e-7 / 3.0, -6.02e23] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }
}
