//! Run manifests: every command writes one next to its outputs so a run can
//! be reproduced exactly. Two runs with the same manifest (ignoring the
//! timestamp) produce byte-identical outputs.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    /// Full effective flag set, flag name → rendered value.
    pub flags: BTreeMap<String, String>,
    pub seed: Option<u64>,
    /// Input path → SHA-256 of its bytes.
    pub input_digests: BTreeMap<String, String>,
    pub tool_version: String,
    /// Unix seconds; the only field allowed to differ between reruns.
    pub created_at_unix: u64,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            command: command.to_string(),
            flags: BTreeMap::new(),
            seed: None,
            input_digests: BTreeMap::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            created_at_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn flag(mut self, name: &str, value: impl ToString) -> Self {
        self.flags.insert(name.to_string(), value.to_string());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn input(mut self, path: &Path, bytes: &[u8]) -> Self {
        let digest = Sha256::digest(bytes);
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.input_digests.insert(path.display().to_string(), hex);
        self
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        std::fs::write(path, text)
    }

    /// Equality for resume decisions: everything except the timestamp.
    pub fn same_run(&self, other: &RunManifest) -> bool {
        self.command == other.command
            && self.flags == other.flags
            && self.seed == other.seed
            && self.input_digests == other.input_digests
            && self.tool_version == other.tool_version
    }
}
