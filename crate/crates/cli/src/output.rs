//! The record every command produces, rendered as JSON or as text.

use std::io::{self, Write};

use absent_core::ArchFactorization;
use serde::Serialize;
use serde_json::Value;

use crate::input::Input;

/// Stable JSON shape shared by all commands. `result` holds the
/// command-specific answer; `items` the enumerated words; `count` an exact
/// decimal count where one applies.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub word_length: usize,
    pub sigma: usize,
    pub iota: usize,
    pub arches: Vec<usize>,
    pub rest: String,
    pub result: Value,
    pub items: Vec<String>,
    pub count: Option<String>,
}

impl OutputRecord {
    pub fn new(input: &Input, f: &ArchFactorization) -> Self {
        let w = &input.word;
        let rest = &w.letters()[f.rest_start() - 1..];
        OutputRecord {
            word_length: w.len(),
            sigma: w.sigma(),
            iota: f.iota(),
            arches: f.arch_ends().to_vec(),
            rest: input.codec.render(rest),
            result: Value::Null,
            items: Vec::new(),
            count: None,
        }
    }

    pub fn print_json(&self) -> io::Result<()> {
        let mut out = io::stdout().lock();
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)
    }
}

/// Text rendering of a possibly empty word.
pub fn show(word: &str) -> &str {
    if word.is_empty() {
        "(empty)"
    } else {
        word
    }
}
