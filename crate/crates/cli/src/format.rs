use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One output row. JSON uses the serde form, CSV the flat `columns`, text
/// the `text` rendering.
pub trait Row: Serialize {
    fn columns(&self) -> Vec<(&'static str, String)>;
    fn text(&self) -> String;
}

pub fn emit<R: Row>(out: &mut dyn Write, format: Format, rows: &[R]) -> Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if let Some(first) = rows.first() {
                w.write_record(first.columns().iter().map(|c| c.0))?;
            }
            for r in rows {
                w.write_record(r.columns().iter().map(|c| c.1.as_str()))?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in rows {
                writeln!(out, "{}", r.text())?;
            }
        }
    }
    Ok(())
}

pub fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, T::to_string)
}
