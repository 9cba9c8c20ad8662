use std::io::Write;
use std::path::Path;

use serde_json::Value;

use crate::args::Format;
use crate::error::CliError;

/// One command's result in all three output formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

impl Report {
    pub fn new(json: Value, header: Vec<String>, rows: Vec<Vec<String>>, text: String) -> Self {
        Report { json, header, rows, text }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json value serializes");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8")
            }
        })
    }

    pub fn emit(&self, format: Format, path: Option<&Path>) -> Result<(), CliError> {
        let out = self.render(format)?;
        match path {
            Some(p) => std::fs::write(p, out)?,
            None => std::io::stdout().lock().write_all(out.as_bytes())?,
        }
        Ok(())
    }
}
