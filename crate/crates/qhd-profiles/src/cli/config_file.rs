//! Flat `key = value` configuration files.
//!
//! The format is one assignment per line; `#` starts a comment anywhere on a
//! line; blank lines are ignored; keys may not repeat. Key names are exactly
//! the long command-line flag names without the leading dashes, and
//! command-line flags override file values.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub(crate) struct ConfigFile {
    entries: Vec<(String, String)>,
}

impl ConfigFile {
    pub(crate) fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::usage(format!(
                    "config line {} is not `key = value`: `{}`",
                    idx + 1,
                    raw.trim()
                )));
            };
            let key = key.trim();
            let value = value.trim();
            if key.is_empty() || value.is_empty() {
                return Err(Error::usage(format!(
                    "config line {} is missing a {}",
                    idx + 1,
                    if key.is_empty() { "key" } else { "value" }
                )));
            }
            if entries.iter().any(|(k, _)| k == key) {
                return Err(Error::usage(format!("duplicate config key `{key}`")));
            }
            entries.push((key.to_string(), value.to_string()));
        }
        Ok(ConfigFile { entries })
    }

    pub(crate) fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub(crate) fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }

    /// Parses a float-valued entry, if present.
    pub(crate) fn get_f64(&self, key: &'static str) -> Result<Option<f64>> {
        self.get(key)
            .map(|raw| parse_f64(raw, key))
            .transpose()
    }

    /// Parses a comma-separated list of floats, if present.
    pub(crate) fn get_f64_list(&self, key: &'static str) -> Result<Option<Vec<f64>>> {
        self.get(key)
            .map(|raw| {
                raw.split(',')
                    .map(|item| parse_f64(item.trim(), key))
                    .collect::<Result<Vec<f64>>>()
            })
            .transpose()
    }

    pub(crate) fn get_usize(&self, key: &'static str) -> Result<Option<usize>> {
        self.get(key)
            .map(|raw| {
                raw.parse::<usize>().map_err(|_| {
                    Error::usage(format!("config key `{key}` is not a whole number: `{raw}`"))
                })
            })
            .transpose()
    }
}

pub(crate) fn parse_f64(raw: &str, key: &str) -> Result<f64> {
    raw.parse::<f64>()
        .map_err(|_| Error::usage(format!("config key `{key}` is not a number: `{raw}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_assignments_and_comments() {
        let file = ConfigFile::parse(
            "# fluid\ngamma = 1.5\nk = 1.41421 # dispersion\n\nmu-list = 4, 1, 0.5\n",
        )
        .unwrap();
        assert_eq!(file.get("gamma"), Some("1.5"));
        assert_eq!(file.get_f64("k").unwrap(), Some(1.41421));
        assert_eq!(
            file.get_f64_list("mu-list").unwrap(),
            Some(vec![4.0, 1.0, 0.5])
        );
        assert_eq!(file.get("absent"), None);
        assert_eq!(file.keys().count(), 3);
    }

    #[test]
    fn rejects_malformed_lines() {
        let err = ConfigFile::parse("gamma 1.5").unwrap_err();
        assert!(err.is_usage(), "{err}");
        assert!(err.to_string().contains("line 1"));
        let err = ConfigFile::parse("= 3").unwrap_err();
        assert!(err.is_usage());
        let err = ConfigFile::parse("gamma =").unwrap_err();
        assert!(err.is_usage());
    }

    #[test]
    fn rejects_duplicate_keys() {
        let err = ConfigFile::parse("s = 1\ns = -1\n").unwrap_err();
        assert!(err.to_string().contains("duplicate config key `s`"));
    }

    #[test]
    fn rejects_bad_numbers() {
        let file = ConfigFile::parse("gamma = fast\n").unwrap();
        let err = file.get_f64("gamma").unwrap_err();
        assert!(err.to_string().contains("`gamma`"));
        let file = ConfigFile::parse("samples = 3.5\n").unwrap();
        assert!(file.get_usize("samples").is_err());
    }
}
