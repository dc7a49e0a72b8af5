//! Two-channel command output: human-readable lines and a JSON document.

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.lines.join("\n"),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
        }
    }
}
