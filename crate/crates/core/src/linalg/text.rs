//! Matrix text form.
//!
//! ```text
//! 2 3 GF(2^2; 1,1,1)
//! 1 (1,0) 0
//! 0 1 (1,1)
//! ```
//!
//! Over GF(2) a trailing `hex` on the header switches the body to one hex
//! string per row, column 0 being the high bit of the first digit.

use super::FFMatrix;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;

impl FFMatrix {
    pub fn to_text(&self, hex: bool) -> String {
        let hex = hex && self.field().is_gf2();
        let mut out = format!("{} {} {}", self.rows(), self.cols(), self.field().descriptor());
        if hex {
            out.push_str(" hex");
        }
        out.push('\n');
        for i in 0..self.rows() {
            if hex {
                out.push_str(&hex_row(self.row(i)));
            } else {
                let cells: Vec<String> =
                    self.row(i).iter().map(|&v| self.field().format_elem(v)).collect();
                out.push_str(&cells.join(" "));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<FFMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty matrix"))?;
        let mut parts = header.splitn(3, char::is_whitespace);
        let rows: usize = parse_num(parts.next(), hline, "row count")?;
        let cols: usize = parse_num(parts.next(), hline, "column count")?;
        let rest = parts
            .next()
            .ok_or_else(|| Error::parse(hline, "missing field descriptor"))?
            .trim();
        let (desc, hex) = match rest.strip_suffix("hex") {
            Some(d) if d.ends_with(char::is_whitespace) => (d.trim(), true),
            _ => (rest, false),
        };
        let field = FieldSpec::parse_descriptor(desc).map_err(|e| Error::parse(hline, e.to_string()))?;
        if hex && !field.is_gf2() {
            return Err(Error::parse(hline, "hex rows are only defined over GF(2)"));
        }
        let mut m = FFMatrix::zeros(&field, rows, cols);
        let mut seen = 0;
        for (lno, line) in lines {
            if seen == rows {
                return Err(Error::parse(lno, "more rows than declared"));
            }
            let cells = if hex {
                parse_hex_row(line, cols).map_err(|msg| Error::parse(lno, msg))?
            } else {
                let cells = split_cells(line);
                if cells.len() != cols {
                    return Err(Error::parse(
                        lno,
                        format!("expected {cols} entries, found {}", cells.len()),
                    ));
                }
                cells
                    .iter()
                    .map(|c| field.parse_elem(c).map_err(|e| Error::parse(lno, e.to_string())))
                    .collect::<Result<Vec<_>>>()?
            };
            for (j, v) in cells.into_iter().enumerate() {
                m.set(seen, j, v);
            }
            seen += 1;
        }
        if seen != rows {
            return Err(Error::parse(hline, format!("declared {rows} rows, found {seen}")));
        }
        Ok(m)
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("bad {what}")))
}

/// Splits on whitespace outside parentheses.
fn split_cells(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in line.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else if !ch.is_whitespace() {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn hex_row(row: &[u32]) -> String {
    let mut s = String::with_capacity(row.len().div_ceil(4));
    for chunk in row.chunks(4) {
        let mut nib = 0u32;
        for (k, &v) in chunk.iter().enumerate() {
            if v != 0 {
                nib |= 8 >> k;
            }
        }
        s.push(char::from_digit(nib, 16).unwrap());
    }
    s
}

fn parse_hex_row(line: &str, cols: usize) -> std::result::Result<Vec<u32>, String> {
    let digits: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
    if digits.len() != cols.div_ceil(4) {
        return Err(format!(
            "expected {} hex digits, found {}",
            cols.div_ceil(4),
            digits.len()
        ));
    }
    let mut out = Vec::with_capacity(cols);
    for (k, ch) in digits.iter().enumerate() {
        let nib = ch.to_digit(16).ok_or_else(|| format!("bad hex digit {ch:?}"))?;
        for b in 0..4 {
            let col = 4 * k + b;
            let bit = (nib >> (3 - b)) & 1;
            if col < cols {
                out.push(bit);
            } else if bit != 0 {
                return Err("padding bits must be zero".into());
            }
        }
    }
    Ok(out)
}
