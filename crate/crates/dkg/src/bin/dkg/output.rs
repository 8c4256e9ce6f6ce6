//! Table emission: CSV with a '#' metadata header, or JSON.
//!
//! CSV dialect: comma-separated, '.' decimal, header row, LF endings,
//! floats printed with 12 significant digits. Byte-stable across runs
//! except for the `# generated-unix:` line.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => fmt_sig(*v),
            Cell::Text(v) => v.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => serde_json::json!(v),
            Cell::Float(v) => serde_json::json!(v),
            Cell::Text(v) => serde_json::json!(v),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// 12 significant digits; fixed notation for moderate magnitudes,
/// scientific otherwise.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

pub struct Table {
    command: &'static str,
    columns: Vec<&'static str>,
    metadata: Vec<(String, String)>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Table {
            command,
            columns,
            metadata: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: &str) {
        self.metadata.push((key.to_string(), value.to_string()));
    }

    pub fn echo(&mut self, phys: &super::params::PhysicsArgs) {
        for (k, v) in phys.echo() {
            self.metadata.push((k, v));
        }
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn write(&self, path: Option<&str>, format: Format) -> std::io::Result<()> {
        let rendered = match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        };
        match path {
            Some(path) => std::fs::write(path, rendered),
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(rendered.as_bytes())
            }
        }
    }

    fn header_lines(&self) -> Vec<(String, String)> {
        let mut lines = vec![
            ("tool".to_string(), format!("dkg {}", env!("CARGO_PKG_VERSION"))),
            (
                "generated-unix".to_string(),
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs().to_string())
                    .unwrap_or_default(),
            ),
            (
                "units".to_string(),
                "natural units (hbar=c=1), e^2 = 1/137".to_string(),
            ),
            ("command".to_string(), self.command.to_string()),
        ];
        lines.extend(self.metadata.iter().cloned());
        lines
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in self.header_lines() {
            out.push_str(&format!("# {key}: {value}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let metadata: serde_json::Map<String, serde_json::Value> = self
            .header_lines()
            .into_iter()
            .map(|(k, v)| (k, serde_json::json!(v)))
            .collect();
        let rows: Vec<Vec<serde_json::Value>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::json).collect())
            .collect();
        let doc = serde_json::json!({
            "metadata": metadata,
            "columns": self.columns,
            "rows": rows,
        });
        serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
    }
}
