//! JSON input documents.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use mec_core::{conditionals_from_joint, JointPmf, MarginalFamily};
use serde::Deserialize;

/// `{"marginals": [[..], ..]}` or `{"joint": [[..], ..]}`; `labels` names
/// the values of `y` (one per marginal or joint row).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    marginals: Option<Vec<Vec<f64>>>,
    joint: Option<Vec<Vec<f64>>>,
    labels: Option<Vec<String>>,
}

/// A validated input.
#[derive(Debug)]
pub struct Input {
    pub family: MarginalFamily,
    pub joint: Option<JointPmf>,
    pub labels: Vec<String>,
}

impl InputSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed input JSON")
    }

    pub fn validate(self) -> Result<Input> {
        let (family, joint) = match (self.marginals, self.joint) {
            (Some(_), Some(_)) => bail!("input has both \"marginals\" and \"joint\""),
            (None, None) => bail!("input needs \"marginals\" or \"joint\""),
            (Some(raw), None) => {
                let family = MarginalFamily::from_raw(&raw).context("invalid marginals")?;
                (family, None)
            }
            (None, Some(rows)) => {
                let joint = JointPmf::new(rows).context("invalid joint")?;
                let family = conditionals_from_joint(&joint).context("invalid joint")?;
                (family, Some(joint))
            }
        };
        let labels = match self.labels {
            Some(labels) if labels.len() != family.len() => bail!(
                "{} labels given for {} values of y",
                labels.len(),
                family.len()
            ),
            Some(labels) => labels,
            None => (0..family.len()).map(|y| format!("y{y}")).collect(),
        };
        Ok(Input {
            family,
            joint,
            labels,
        })
    }
}

/// Reads and validates `path`, with `-` meaning standard input.
pub fn load(path: &Path) -> Result<Input> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    InputSpec::parse(&text)?.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load_str(s: &str) -> Result<Input> {
        InputSpec::parse(s)?.validate()
    }

    #[test]
    fn marginals() {
        let input = load_str(r#"{"marginals": [[0.5, 0.5], [1.0]]}"#).unwrap();
        assert_eq!(input.family.len(), 2);
        assert!(input.joint.is_none());
        assert_eq!(input.labels, ["y0", "y1"]);
    }

    #[test]
    fn joint_with_labels() {
        let input =
            load_str(r#"{"joint": [[0.25, 0.25], [0.5, 0.0]], "labels": ["a", "b"]}"#).unwrap();
        assert_eq!(input.family.len(), 2);
        assert_eq!(input.family.y_weights().unwrap(), &[0.5, 0.5]);
        assert_eq!(input.labels, ["a", "b"]);
    }

    #[test]
    fn rejects() {
        for bad in [
            "",
            "{",
            "{}",
            r#"{"marginals": [[0.5, 0.5]], "joint": [[1.0]]}"#,
            r#"{"marginals": [[0.5, 0.6]]}"#,
            r#"{"marginals": []}"#,
            r#"{"marginals": [[1.0]], "extra": 1}"#,
            r#"{"marginals": [[1.0]], "labels": ["a", "b"]}"#,
            r#"{"joint": [[0.5, 0.5], [0.0, 0.0]]}"#,
            r#"{"joint": [[0.5], [0.25, 0.25]]}"#,
        ] {
            assert!(load_str(bad).is_err(), "{bad}");
        }
    }
}
