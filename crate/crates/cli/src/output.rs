use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Result of one subcommand: its JSON document, a flat table for CSV, and whether
/// every verification it ran passed.
pub struct Report {
    pub json: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pass: bool,
}

impl Report {
    pub fn new(value: &impl Serialize, header: &[&str], rows: Vec<Vec<String>>) -> Report {
        Report {
            json: serde_json::to_string(value).expect("plain data serializes"),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows,
            pass: true,
        }
    }

    pub fn with_header(mut self, header: Vec<String>) -> Report {
        self.header = header;
        self
    }

    pub fn passing(mut self, pass: bool) -> Report {
        self.pass = pass;
        self
    }

    pub fn emit(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Json => writeln!(out, "{}", self.json),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
        }
    }
}

pub fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
