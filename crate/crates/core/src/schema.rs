//! Versioned JSON documents: arc systems, canonical forms, verdicts and
//! case files all travel inside the same envelope.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::curve::{straight_bridge_arcs, ArcSystem};
use crate::detector::Verdict;
use crate::error::{Result, TangleError};
use crate::mapping::{apply_word, parse_word};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    schema: String,
    version: u32,
    body: T,
}

/// Wraps `body` as a document of the given kind.
pub fn to_json<T: Serialize>(kind: &str, body: &T) -> Result<String> {
    let env = Envelope {
        schema: kind.to_string(),
        version: SCHEMA_VERSION,
        body,
    };
    serde_json::to_string_pretty(&env).map_err(|e| TangleError::Schema(e.to_string()))
}

pub fn from_json<T: DeserializeOwned>(kind: &str, text: &str) -> Result<T> {
    let env: Envelope<T> = serde_json::from_str(text).map_err(|e| TangleError::Schema(e.to_string()))?;
    if env.schema != kind {
        return Err(TangleError::Schema(format!(
            "expected a {kind} document, found {}",
            env.schema
        )));
    }
    if env.version != SCHEMA_VERSION {
        return Err(TangleError::Schema(format!("unsupported version {}", env.version)));
    }
    Ok(env.body)
}

pub fn system_to_json(s: &ArcSystem) -> Result<String> {
    to_json("system", s)
}

/// Reads a system and checks every component.
pub fn system_from_json(text: &str) -> Result<ArcSystem> {
    let s: ArcSystem = from_json("system", text)?;
    ArcSystem::new(s.components)
}

/// How a case was made.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    EpsilonWord,
    PairingMismatch,
    DenseNotStraight,
    Fixture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    Straight,
}

/// A test input: either a word applied to a base system or an explicit
/// system, with the verdict it should receive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Base>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<ArcSystem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Verdict>,
    pub provenance: Provenance,
}

impl Case {
    /// The system the case describes.
    pub fn system(&self) -> Result<ArcSystem> {
        let start = match (&self.system, self.base) {
            (Some(s), None) => ArcSystem::new(s.components.clone())?,
            (None, Some(Base::Straight)) => straight_bridge_arcs(),
            (Some(_), Some(_)) => return Err(TangleError::Input("a case has either a base or a system".into())),
            (None, None) => return Err(TangleError::Input("a case needs a base or a system".into())),
        };
        match &self.word {
            Some(w) => Ok(apply_word(&start, &parse_word(w)?)),
            None => Ok(start),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        to_json("case", self)
    }

    pub fn from_json(text: &str) -> Result<Case> {
        from_json("case", text)
    }
}
