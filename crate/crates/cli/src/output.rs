use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

/// Exit status of a command that completed normally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Witness found or all checks passed.
    Found,
    /// No witness, or a violation was certified.
    NotFound,
}

impl Status {
    pub fn from_bool(found: bool) -> Self {
        if found {
            Status::Found
        } else {
            Status::NotFound
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Status::Found => 0,
            Status::NotFound => 1,
        }
    }
}

pub struct Report {
    pub kind: &'static str,
    pub status: Status,
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
}

impl Report {
    pub fn new<T: Serialize>(kind: &'static str, status: Status, body: &T, text: String) -> Result<Self> {
        Ok(Self {
            kind,
            status,
            json: serde_json::to_value(body)?,
            text,
            dot: None,
        })
    }

    pub fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    /// The JSON document with its versioned `format` tag first.
    pub fn document(&self) -> Value {
        let mut doc = Map::new();
        doc.insert(
            "format".into(),
            Value::String(format!("shirshov/{}/v1", self.kind)),
        );
        match &self.json {
            Value::Object(fields) => doc.extend(fields.clone()),
            other => {
                doc.insert("result".into(), other.clone());
            }
        }
        Value::Object(doc)
    }

    pub fn emit(&self, opts: &OutputOpts) -> Result<()> {
        let body = match opts.format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.document())? + "\n",
            Format::Dot => match &self.dot {
                Some(dot) => dot.clone(),
                None => bail!("the {} command has no DOT output", self.kind),
            },
        };
        match &opts.output {
            Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }
}
