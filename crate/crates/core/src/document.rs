//! JSON documents exchanged by the command-line tools.
//!
//! Every file is one object with a `kind` discriminator, a format `version`,
//! free-form string `meta` and the `payload`. Payloads are validated against
//! their type's invariants while loading.

use crate::arrangement::{CombinatorialDescription, OrientedLine};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::witness::Realization;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrangementPayload {
    pub lines: Vec<OrientedLine>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Payload {
    Arrangement(ArrangementPayload),
    Description(CombinatorialDescription),
    Graph(LabeledGraph),
    Realization(Realization),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Arrangement(_) => "arrangement",
            Payload::Description(_) => "description",
            Payload::Graph(_) => "graph",
            Payload::Realization(_) => "realization",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub version: u32,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
    #[serde(flatten)]
    pub payload: Payload,
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Self { version: FORMAT_VERSION, meta: BTreeMap::new(), payload }
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("malformed document: {e}")))?;
        if doc.version != FORMAT_VERSION {
            return Err(Error::Invalid(format!("unsupported document version {}", doc.version)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
    }

    fn wrong_kind(&self, want: &str) -> Error {
        Error::Invalid(format!("expected a {want} document, found {}", self.payload.kind()))
    }

    pub fn into_lines(self) -> Result<Vec<OrientedLine>> {
        match self.payload {
            Payload::Arrangement(a) => Ok(a.lines),
            _ => Err(self.wrong_kind("arrangement")),
        }
    }

    pub fn into_description(self) -> Result<CombinatorialDescription> {
        match self.payload {
            Payload::Description(d) => Ok(d),
            _ => Err(self.wrong_kind("description")),
        }
    }

    pub fn into_graph(self) -> Result<LabeledGraph> {
        match self.payload {
            Payload::Graph(g) => Ok(g),
            _ => Err(self.wrong_kind("graph")),
        }
    }

    pub fn into_realization(self) -> Result<Realization> {
        match self.payload {
            Payload::Realization(r) => Ok(r),
            _ => Err(self.wrong_kind("realization")),
        }
    }
}
