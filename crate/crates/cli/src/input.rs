use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use shirshov::{Alphabet, Word, WordFormat};

/// How words are read and written.
#[derive(Debug, Clone, Args)]
pub struct WordOpts {
    /// Character map for the letters 1, 2, ... (default "abc...z").
    #[arg(long, global = true, conflicts_with = "int")]
    pub chars: Option<String>,
    /// Read and write words as whitespace-separated integers.
    #[arg(long, global = true)]
    pub int: bool,
    /// Alphabet size; defaults to the largest letter in the word (or the map length).
    #[arg(long = "alphabet-size", global = true)]
    pub alphabet_size: Option<u32>,
}

impl WordOpts {
    pub fn format(&self) -> Result<WordFormat> {
        Ok(match (&self.chars, self.int) {
            (_, true) => WordFormat::Integers,
            (Some(map), false) => WordFormat::chars(map)?,
            (None, false) => WordFormat::latin(),
        })
    }

    pub fn render(&self, w: &Word) -> String {
        self.format()
            .map(|f| f.render(w.letters()))
            .unwrap_or_else(|_| w.to_string())
    }

    pub fn render_letters(&self, letters: &[u32]) -> String {
        self.format().map(|f| f.render(letters)).unwrap_or_default()
    }

    pub fn alphabet_for(&self, letters: &[u32]) -> Result<Alphabet> {
        if let Some(size) = self.alphabet_size {
            return Ok(Alphabet::new(size)?);
        }
        let spanning = Alphabet::spanning(letters).size();
        let size = match (&self.chars, self.int) {
            (Some(map), false) => spanning.max(map.chars().count() as u32),
            _ => spanning,
        };
        Ok(Alphabet::new(size)?)
    }
}

/// Exactly one of a positional word or `--file`.
#[derive(Debug, Clone, Args)]
pub struct WordSource {
    /// The word, in the selected text format.
    #[arg(
        required_unless_present = "file",
        conflicts_with = "file",
        allow_hyphen_values = true
    )]
    pub word: Option<String>,
    /// Read the word from a file holding one word per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// 1-based line of the file to read.
    #[arg(long, default_value_t = 1, requires = "file")]
    pub line: usize,
}

impl WordSource {
    pub fn load(&self, opts: &WordOpts) -> Result<Word> {
        let text = match (&self.word, &self.file) {
            (Some(w), None) => w.clone(),
            (None, Some(path)) => {
                let content =
                    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let lines: Vec<&str> = content.lines().filter(|l| !l.trim().is_empty()).collect();
                if self.line == 0 || self.line > lines.len() {
                    bail!(
                        "{} has {} words, line {} requested",
                        path.display(),
                        lines.len(),
                        self.line
                    );
                }
                lines[self.line - 1].to_string()
            }
            _ => bail!("give exactly one of a word argument or --file"),
        };
        let letters = opts.format()?.parse_letters(&text)?;
        if letters.is_empty() {
            bail!("the word is empty");
        }
        let alphabet = opts.alphabet_for(&letters)?;
        Ok(Word::new(alphabet, letters)?)
    }
}
