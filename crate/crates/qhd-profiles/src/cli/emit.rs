//! Plain-text emission helpers: full-precision number formatting, CSV
//! assembly, and JSON serialization.
//!
//! Every floating-point value is printed with 17 significant digits in
//! scientific notation, which is enough for a reader to recover the exact
//! bit pattern, so emitted tables round-trip losslessly.

use std::io;

use serde_json::ser::Formatter;
use serde_json::Value;

use crate::error::Result;

/// Formats a float with 17 significant digits (lossless round-trip).
pub(crate) fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// Quotes a CSV cell when it contains a delimiter, quote, or line break.
pub(crate) fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Assembles a CSV document from a fixed header and row cells.
pub(crate) fn csv_document(header: &str, rows: &[Vec<String>]) -> Vec<u8> {
    let mut out = String::with_capacity(rows.len() * 64 + header.len() + 1);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        let escaped: Vec<String> = row.iter().map(|cell| csv_escape(cell)).collect();
        out.push_str(&escaped.join(","));
        out.push('\n');
    }
    out.into_bytes()
}

/// JSON formatter that prints every float with 17 significant digits.
struct FullPrecision;

impl Formatter for FullPrecision {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes a JSON value with full-precision floats and a trailing
/// newline. Object keys are emitted in sorted order, so the byte output is
/// deterministic.
pub(crate) fn json_document(value: &Value) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FullPrecision);
    serde::Serialize::serialize(value, &mut ser)?;
    out.push(b'\n');
    Ok(out)
}
