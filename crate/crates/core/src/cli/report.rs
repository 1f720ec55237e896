use sha2::{Digest, Sha256};

/// Ordered key/value report. Porcelain output is `key\tvalue` per line;
/// the human form pads keys into a column.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

pub(crate) fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

impl Report {
    /// Starts a report with the provenance header every command shares.
    pub fn new(command: &str, seed: u64, inputs: &[&str]) -> Self {
        let mut r = Report::default();
        r.push("command", command);
        r.push("version", env!("CARGO_PKG_VERSION"));
        r.push("seed", seed);
        for (i, text) in inputs.iter().enumerate() {
            r.push(format!("input_sha256.{i}"), sha256_hex(text));
        }
        r
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl std::fmt::Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn render(&self, porcelain: bool) -> String {
        let mut out = String::new();
        if porcelain {
            for (k, v) in &self.entries {
                out.push_str(&format!("{k}\t{v}\n"));
            }
        } else {
            let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &self.entries {
                out.push_str(&format!("{k:<width$}  {v}\n"));
            }
        }
        out
    }
}

/// Shortest round-trip representation, or `-` for missing values.
pub(crate) fn num(x: Option<f64>) -> String {
    match x {
        Some(v) => format!("{v:e}"),
        None => "-".into(),
    }
}
