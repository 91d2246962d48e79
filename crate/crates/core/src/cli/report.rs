use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Map, Value};

use crate::closed_forms::Exactness;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaggedValue {
    pub name: String,
    pub value: f64,
    pub exactness: Exactness,
}

/// Command output. Every number in `values` carries an exactness tag;
/// `details` holds the structured payload (condition reports, extremizers,
/// oracle diagnostics).
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub values: Vec<TaggedValue>,
    pub details: Map<String, Value>,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            inputs: Map::new(),
            values: Vec::new(),
            details: Map::new(),
            lines: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn value(&mut self, name: &str, value: f64, exactness: Exactness) -> &mut Self {
        self.values.push(TaggedValue {
            name: name.to_string(),
            value,
            exactness,
        });
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.details.insert(key.to_string(), to_value(value));
        self
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.lines.push(line.into());
        self
    }

    pub fn write(&self, out: &mut dyn Write, json: bool) -> io::Result<()> {
        if json {
            serde_json::to_writer_pretty(&mut *out, self)?;
            return writeln!(out);
        }
        writeln!(out, "{}", self.command)?;
        for (k, v) in &self.inputs {
            writeln!(out, "  {k}: {}", plain(v))?;
        }
        if !self.values.is_empty() {
            let width = self.values.iter().map(|v| v.name.len()).max().unwrap_or(0);
            writeln!(out)?;
            for v in &self.values {
                writeln!(
                    out,
                    "  {:<width$}  {:>18}  {}",
                    v.name,
                    fmt_num(v.value),
                    v.exactness
                )?;
            }
        }
        if !self.lines.is_empty() {
            writeln!(out)?;
            for l in &self.lines {
                writeln!(out, "  {l}")?;
            }
        }
        Ok(())
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn fmt_num(v: f64) -> String {
    format!("{v:.12}")
}

/// First `max` entries, then an ellipsis with the remaining count.
pub fn fmt_vec(v: &[f64], max: usize) -> String {
    let shown: Vec<String> = v.iter().take(max).map(|x| format!("{x:.6}")).collect();
    if v.len() > max {
        format!("({}, ... {} more)", shown.join(", "), v.len() - max)
    } else {
        format!("({})", shown.join(", "))
    }
}
