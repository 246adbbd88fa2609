use std::io::{self, Write};

/// One CSV field.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => format_num(*x),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

/// Shortest decimal that round-trips (never more than 17 significant digits).
pub fn format_num(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x}")
    }
}

/// Writes `header` then `rows`. Every row must have as many cells as the header.
pub fn write_csv<W: Write>(header: &[&str], rows: &[Vec<Cell>], dest: W) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(dest);
    w.write_record(header)?;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != header.len() {
            return Err(io::Error::new(
                io::ErrorKind::InvalidInput,
                format!("row {i} has {} fields, header has {}", row.len(), header.len()),
            ));
        }
        w.write_record(row.iter().map(Cell::render))?;
    }
    w.flush()
}
