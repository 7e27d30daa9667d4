use std::path::Path;

use serde::{Deserialize, Serialize};

use super::system::{conjugation_action, trivial_action, ActionSystem, ActionTable};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupFile};

/// An action given either as a table or by one of the names `"conjugation"` / `"trivial"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionSpec {
    Named(String),
    Table(ActionTable),
}

/// On-disk form of an [`ActionSystem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    #[serde(rename = "G")]
    pub g: GroupFile,
    #[serde(rename = "H")]
    pub h: GroupFile,
    #[serde(rename = "rho_G")]
    pub rho_g: ActionSpec,
    #[serde(rename = "rho_H")]
    pub rho_h: ActionSpec,
    #[serde(rename = "sigma_G")]
    pub sigma_g: ActionSpec,
    #[serde(rename = "sigma_H")]
    pub sigma_h: ActionSpec,
}

fn resolve(spec: ActionSpec, actor: &FiniteGroup, target: &FiniteGroup, same: bool, key: &str) -> Result<ActionTable> {
    match spec {
        ActionSpec::Table(t) => Ok(t),
        ActionSpec::Named(name) => match name.as_str() {
            "trivial" => Ok(trivial_action(actor, target)),
            "conjugation" if same => Ok(conjugation_action(actor)),
            "conjugation" => Err(Error::input(format!(
                "`{key}`: \"conjugation\" only applies to a group acting on itself"
            ))),
            other => Err(Error::input(format!(
                "`{key}`: unknown action name {other:?} (expected \"conjugation\", \"trivial\" or a table)"
            ))),
        },
    }
}

impl ActionFile {
    pub fn into_system(self) -> Result<ActionSystem> {
        let g = self.g.into_group().map_err(|e| prefix("G", e))?;
        let h = self.h.into_group().map_err(|e| prefix("H", e))?;
        let rho_g = resolve(self.rho_g, &g, &g, true, "rho_G")?;
        let rho_h = resolve(self.rho_h, &h, &h, true, "rho_H")?;
        let sigma_g = resolve(self.sigma_g, &g, &h, false, "sigma_G")?;
        let sigma_h = resolve(self.sigma_h, &h, &g, false, "sigma_H")?;
        ActionSystem::new(g, h, rho_g, rho_h, sigma_g, sigma_h)
    }

    pub fn from_system(sys: &ActionSystem) -> Self {
        ActionFile {
            g: GroupFile::from_group(sys.g()),
            h: GroupFile::from_group(sys.h()),
            rho_g: ActionSpec::Table(sys.rho_g().clone()),
            rho_h: ActionSpec::Table(sys.rho_h().clone()),
            sigma_g: ActionSpec::Table(sys.sigma_g().clone()),
            sigma_h: ActionSpec::Table(sys.sigma_h().clone()),
        }
    }
}

fn prefix(key: &str, e: Error) -> Error {
    match e {
        Error::Input(m) => Error::Input(format!("`{key}`: {m}")),
        other => other,
    }
}

impl ActionSystem {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ActionFile = serde_json::from_str(text)?;
        file.into_system()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ActionFile::from_system(self)).expect("serializable")
    }
}
