use std::path::Path;

use serde::{Deserialize, Serialize};

use super::finite::FiniteGroup;
use crate::error::{Error, Result};

/// On-disk form of a group: a Cayley table with the identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupFile {
    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupFile {
            order: group.order(),
            table: group.table_rows(),
            labels: Some(group.labels().to_vec()),
        }
    }

    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::input(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::from_table(&self.table, self.labels)
    }
}

impl FiniteGroup {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GroupFile = serde_json::from_str(text)?;
        file.into_group()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GroupFile::from_group(self)).expect("serializable")
    }
}
