//! Optional `key=value` run files. Keys mirror long flag names, with `_`
//! and `-` interchangeable; `#` starts a comment.

use std::path::Path;

pub fn load(path: &Path) -> Result<Vec<(String, String)>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", i + 1))?;
        out.push((k.trim().replace('_', "-"), v.trim().to_string()));
    }
    Ok(out)
}

/// Splices config entries into `argv` right after the subcommand so that
/// explicit flags, which come later, override them.
pub fn splice(
    argv: Vec<String>,
    sub_at: usize,
    entries: &[(String, String)],
    flags: &[String],
    switches: &[String],
) -> Result<Vec<String>, String> {
    let mut injected = Vec::new();
    for (k, v) in entries {
        if switches.contains(k) {
            match v.to_ascii_lowercase().as_str() {
                "true" | "yes" | "1" | "on" => injected.push(format!("--{k}")),
                "false" | "no" | "0" | "off" => {}
                other => return Err(format!("config key '{k}' expects a boolean, got '{other}'")),
            }
        } else if flags.contains(k) {
            injected.push(format!("--{k}={v}"));
        } else {
            return Err(format!("config key '{k}' is not a flag of '{}'", argv[sub_at]));
        }
    }
    let mut out = argv[..=sub_at].to_vec();
    out.extend(injected);
    out.extend_from_slice(&argv[sub_at + 1..]);
    Ok(out)
}
