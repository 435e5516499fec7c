//! Flat `key = value` run configuration.
//!
//! Every key mirrors a long command-line flag one-to-one; a dotted prefix
//! such as `grid.nx` is an organizational label only, so `grid.nx` and `nx`
//! address the same option. `#` starts a comment, values may be wrapped in
//! double quotes, later assignments win, and command-line flags always
//! override file entries. Keys the current command has no flag for are
//! ignored, which lets one file drive several commands.

use std::collections::HashMap;
use std::fmt::Display;
use std::fs;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Default)]
pub struct FileConfig {
    entries: HashMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {lineno}: expected key = value"))?;
            let key = key.trim();
            let ok_key = !key.is_empty()
                && key.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '.')
                && !key.starts_with('.')
                && !key.ends_with('.');
            if !ok_key {
                return Err(format!("line {lineno}: bad key {key:?}"));
            }
            // only the last segment addresses an option
            let name = key.rsplit('.').next().unwrap().to_string();
            entries.insert(name, parse_value(value.trim(), lineno)?);
        }
        Ok(Self { entries })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    /// The flag value when given, else the parsed config entry, else nothing.
    pub fn opt<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, String>
    where
        T: FromStr,
        T::Err: Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => {
                s.parse().map(Some).map_err(|e| format!("config key {key} = {s:?}: {e}"))
            }
        }
    }

    /// Same resolution order for a comma-separated list of numbers.
    pub fn list(&self, flag: Option<Vec<f64>>, key: &str) -> Result<Option<Vec<f64>>, String> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => s
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<f64>()
                        .map_err(|e| format!("config key {key} = {s:?}: {e}"))
                })
                .collect::<Result<Vec<f64>, String>>()
                .map(Some),
        }
    }
}

fn parse_value(v: &str, lineno: usize) -> Result<String, String> {
    if let Some(rest) = v.strip_prefix('"') {
        let end = rest
            .find('"')
            .ok_or_else(|| format!("line {lineno}: unterminated quote"))?;
        let tail = rest[end + 1..].trim_start();
        if !(tail.is_empty() || tail.starts_with('#')) {
            return Err(format!("line {lineno}: trailing text after closing quote"));
        }
        return Ok(rest[..end].to_string());
    }
    let body = v.split('#').next().unwrap().trim();
    if body.is_empty() {
        return Err(format!("line {lineno}: empty value"));
    }
    Ok(body.to_string())
}

#[cfg(test)]
mod tests {
    use super::FileConfig;

    #[test]
    fn sections_comments_and_quotes() {
        let cfg = FileConfig::parse(
            "# run setup\n\
             family = b-travel\n\
             grid.nx = 601   # organizational prefix\n\
             x0 = -30\n\
             output = \"wave plot.csv\"\n\
             as-printed = true\n",
        )
        .unwrap();
        assert_eq!(cfg.raw("family"), Some("b-travel"));
        assert_eq!(cfg.opt::<usize>(None, "nx").unwrap(), Some(601));
        assert_eq!(cfg.opt::<f64>(None, "x0").unwrap(), Some(-30.0));
        assert_eq!(cfg.raw("output"), Some("wave plot.csv"));
        assert_eq!(cfg.opt::<bool>(None, "as-printed").unwrap(), Some(true));
        assert_eq!(cfg.raw("nt"), None);
    }

    #[test]
    fn flags_shadow_file_entries_and_last_assignment_wins() {
        let cfg = FileConfig::parse("nx = 10\nnx = 20\n").unwrap();
        assert_eq!(cfg.opt::<usize>(None, "nx").unwrap(), Some(20));
        assert_eq!(cfg.opt(Some(7usize), "nx").unwrap(), Some(7));
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(FileConfig::parse("just words\n").is_err());
        assert!(FileConfig::parse("x0 = \n").is_err());
        assert!(FileConfig::parse(".bad = 1\n").is_err());
        assert!(FileConfig::parse("v = \"open\n").is_err());
        assert!(FileConfig::parse("nx = ten\n")
            .unwrap()
            .opt::<usize>(None, "nx")
            .is_err());
    }

    #[test]
    fn lists_split_on_commas() {
        let cfg = FileConfig::parse("times = 1, 2,4\n").unwrap();
        assert_eq!(cfg.list(None, "times").unwrap(), Some(vec![1.0, 2.0, 4.0]));
        assert_eq!(cfg.list(Some(vec![9.0]), "times").unwrap(), Some(vec![9.0]));
    }
}
