//! Run reports: the uniform result of every subcommand.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// `sha256:<hex>` over the bytes of every input file, in order.
    pub input_digest: Option<String>,
    pub seed: u64,
    pub status: Option<String>,
    pub counters: BTreeMap<String, Value>,
    pub comments: Vec<String>,
    /// Graph, gadget or certificate lines following the status line.
    pub body: String,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(command: Vec<String>, inputs: &[Vec<u8>], seed: u64) -> Self {
        let input_digest = (!inputs.is_empty()).then(|| {
            let mut h = Sha256::new();
            for bytes in inputs {
                h.update(bytes);
            }
            format!("sha256:{}", hex::encode(h.finalize()))
        });
        RunReport {
            command,
            input_digest,
            seed,
            status: None,
            counters: BTreeMap::new(),
            comments: Vec::new(),
            body: String::new(),
            exit_code: EXIT_HOLDS,
        }
    }

    pub fn status(&mut self, status: &str, exit_code: i32) {
        self.status = Some(status.to_string());
        self.exit_code = exit_code;
    }

    pub fn counter(&mut self, key: &str, value: impl Into<Value>) {
        self.counters.insert(key.to_string(), value.into());
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("c command {}\n", self.command.join(" "));
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("c input {d}\n"));
        }
        out.push_str(&format!("c seed {}\n", self.seed));
        for (k, v) in &self.counters {
            match v {
                Value::String(s) => out.push_str(&format!("c {k} {s}\n")),
                other => out.push_str(&format!("c {k} {other}\n")),
            }
        }
        for c in &self.comments {
            out.push_str(&format!("c {c}\n"));
        }
        if let Some(s) = &self.status {
            out.push_str(&format!("s {s}\n"));
        }
        out.push_str(&self.body);
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_layout() {
        let mut r = RunReport::new(vec!["solve".into()], &[b"p 1 0\n".to_vec()], 7);
        r.counter("nodes", 3);
        r.status("COLORABLE", EXIT_HOLDS);
        r.body = "v 1 d1 0\n".into();
        let text = r.render_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "c command solve");
        assert!(lines[1].starts_with("c input sha256:") && lines[1].len() == "c input sha256:".len() + 64);
        assert_eq!(&lines[2..], ["c seed 7", "c nodes 3", "s COLORABLE", "v 1 d1 0"]);
    }

    #[test]
    fn json_has_every_field() {
        let r = RunReport::new(vec!["generate".into()], &[], 0);
        let v: Value = serde_json::from_str(&r.render_json()).unwrap();
        for key in ["command", "input_digest", "seed", "status", "counters", "comments", "body", "exit_code"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert!(v["input_digest"].is_null());
    }
}
