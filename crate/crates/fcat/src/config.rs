//! Optional key=value configuration file supplying default bounds. Command
//! line flags always win over file values.

use std::fs;
use std::path::Path;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub bound: Option<u64>,
    pub height: Option<u64>,
    pub workers: Option<usize>,
    pub seed: Option<u64>,
}

/// Lines are `key = value`; blank lines and `#` comments are skipped.
/// Unknown keys and unparsable values are reported as usage errors.
pub fn parse(text: &str) -> Result<Config, String> {
    let mut cfg = Config::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {}: expected key=value", lineno + 1));
        };
        let (key, value) = (key.trim(), value.trim());
        let parsed: u64 = value
            .parse()
            .map_err(|_| format!("line {}: `{value}` is not a nonnegative integer", lineno + 1))?;
        match key {
            "bound" => cfg.bound = Some(parsed),
            "height" => cfg.height = Some(parsed),
            "workers" => cfg.workers = Some(parsed as usize),
            "seed" => cfg.seed = Some(parsed),
            _ => return Err(format!("line {}: unknown key `{key}`", lineno + 1)),
        }
    }
    Ok(cfg)
}

pub fn load(path: &Path) -> Result<Config, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text)
}
