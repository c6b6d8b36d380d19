//! JSON code description: `{"q": 2, "n": 21, "coset_reps": [1, 3, 7, 9], "name": "..."}`
//! or the same with `"defining_set"` (negative indices allowed).

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::cyclic::CyclicCode;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecFile {
    pub q: u64,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coset_reps: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_set: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl CodeSpecFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let spec: CodeSpecFile = serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("invalid code spec: {e}")))?;
        match (&spec.coset_reps, &spec.defining_set) {
            (Some(_), None) | (None, Some(_)) => Ok(spec),
            _ => Err(CliError::Usage(
                "code spec needs exactly one of coset_reps and defining_set".into(),
            )),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Builds the code. A defining set that is not closed under
    /// multiplication by `q` is closed with a warning.
    pub fn to_code(&self) -> Result<CyclicCode, CliError> {
        let code = match (&self.coset_reps, &self.defining_set) {
            (Some(reps), None) => CyclicCode::build(self.q, self.n, reps)?,
            (None, Some(set)) => {
                let (code, added) = CyclicCode::from_defining_set(self.q, self.n, set)?;
                if added {
                    log::warn!(
                        "defining set was not closed under multiplication by {}; using its closure {:?}",
                        self.q,
                        code.defining_set()
                    );
                }
                code
            }
            _ => {
                return Err(CliError::Usage(
                    "code spec needs exactly one of coset_reps and defining_set".into(),
                ))
            }
        };
        Ok(code)
    }
}
