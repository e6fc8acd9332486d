//! Command output in TSV or JSON.

use serde_json::{Map, Value};

use crate::config::OutputFormat;

/// Named fields, an optional table and a closing summary line.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub pass: bool,
    pub summary: String,
    fields: Vec<(&'static str, Value)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self { command, pass: false, summary: String::new(), fields: Vec::new(), columns: Vec::new(), rows: Vec::new() }
    }

    pub fn field(&mut self, name: &'static str, value: impl Into<Value>) {
        self.fields.push((name, value.into()));
    }

    pub fn list(&mut self, name: &'static str, items: Vec<String>) {
        self.field(name, Value::Array(items.into_iter().map(Value::String).collect()));
    }

    pub fn columns(&mut self, names: &[&'static str]) {
        self.columns = names.to_vec();
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn finish(&mut self, pass: bool, summary: String) {
        self.pass = pass;
        self.summary = summary;
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Tsv => self.tsv(),
            OutputFormat::Json => self.json(),
        }
    }

    fn tsv(&self) -> String {
        let mut out = String::new();
        for (name, value) in &self.fields {
            let text = match value {
                Value::String(s) => s.clone(),
                Value::Array(xs) => xs.iter().map(plain).collect::<Vec<_>>().join("\t"),
                other => other.to_string(),
            };
            out.push_str(&format!("{name}\t{text}\n"));
        }
        if !self.columns.is_empty() && !self.rows.is_empty() {
            out.push_str(&self.columns.join("\t"));
            out.push('\n');
            for row in &self.rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        out.push_str(&self.summary);
        out.push('\n');
        out
    }

    fn json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("command".into(), self.command.into());
        obj.insert("pass".into(), self.pass.into());
        obj.insert("summary".into(), self.summary.clone().into());
        for (name, value) in &self.fields {
            obj.insert((*name).into(), value.clone());
        }
        if !self.columns.is_empty() {
            let rows = self
                .rows
                .iter()
                .map(|r| Value::Object(self.columns.iter().zip(r).map(|(c, v)| ((*c).into(), v.clone().into())).collect()))
                .collect();
            obj.insert("rows".into(), Value::Array(rows));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json values serialize");
        s.push('\n');
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
