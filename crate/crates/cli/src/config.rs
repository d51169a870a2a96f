//! `key = value` configuration files whose keys are long flag names.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::output::{input, Failure};

pub const KEYS: [&str; 15] = [
    "json",
    "csv",
    "p",
    "order",
    "model",
    "algebra",
    "algebra-file",
    "tree",
    "p-max",
    "fixtures",
    "seed",
    "samples",
    "complex",
    "curve",
    "format",
];

/// Values from a config file; command-line flags take precedence.
#[derive(Debug, Default)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let mut values = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| input(format!("config line {}: expected key = value", n + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            if !KEYS.contains(&k) {
                return Err(input(format!("config line {}: unknown key '{k}'", n + 1)));
            }
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(input(format!("config line {}: duplicate key '{k}'", n + 1)));
            }
        }
        Ok(Config { values })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, Failure>
    where
        T::Err: std::fmt::Display,
    {
        self.values
            .get(key)
            .map(|v| v.parse::<T>().map_err(|e| input(format!("config key '{key}': {e}"))))
            .transpose()
    }

    pub fn flag(&self, key: &str) -> Result<bool, Failure> {
        Ok(self.get::<bool>(key)?.unwrap_or(false))
    }

    /// The flag value if given, else the config value.
    pub fn or<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, Failure>
    where
        T::Err: std::fmt::Display,
    {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(key),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects() {
        let c = Config::parse("# defaults\np = 5\n\nmodel = cubic\njson = true\n").unwrap();
        assert_eq!(c.get::<u64>("p").unwrap(), Some(5));
        assert_eq!(c.or(Some(7u64), "p").unwrap(), Some(7));
        assert!(c.flag("json").unwrap());
        assert!(!c.flag("csv").unwrap());
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("p 5").is_err());
        assert!(Config::parse("p = 5\np = 7").is_err());
        assert!(Config::parse("p = five").unwrap().get::<u64>("p").is_err());
    }
}
