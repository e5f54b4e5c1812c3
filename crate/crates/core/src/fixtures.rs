//! Reference tables (q-Cartan blocks, decomposition blocks, quivers),
//! embedded at compile time. Each entry carries a SHA-256 checksum of its
//! canonical JSON form (keys sorted, no whitespace, `sha256` removed),
//! checked on load.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::aks0::BlockId;
use crate::reptheory::{ProjectiveLabel, QCartanBlock, QPoly, SimpleLabel};
use crate::{Error, Result};

const QCARTAN: &str = include_str!("../fixtures/qcartan.json");
const DECOMPOSITION: &str = include_str!("../fixtures/decomposition.json");
const QUIVER: &str = include_str!("../fixtures/quiver.json");

/// A block of a `q`-Cartan matrix. Rows and columns are labelled by
/// projective modules (anticycloribbons); the entry in row `A`, column `B`
/// counts `S_{φ(B)}` in the radical layers of `P_A`.
#[derive(Clone, Debug, Deserialize)]
pub struct QCartanFixture {
    pub id: String,
    pub n: usize,
    pub r: usize,
    pub block: Vec<usize>,
    pub labels: Vec<ProjectiveLabel>,
    pub entries: Vec<Vec<QPoly>>,
    pub sha256: String,
}

/// A block of a decomposition matrix: rows are multipartitions written as
/// in `(11,1)` (the nonempty-evaluation components, parts concatenated),
/// columns are projective labels.
#[derive(Clone, Debug, Deserialize)]
pub struct DecompositionFixture {
    pub id: String,
    pub n: usize,
    pub r: usize,
    pub block: Vec<usize>,
    pub labels: Vec<ProjectiveLabel>,
    pub rows: Vec<String>,
    pub entries: Vec<Vec<i64>>,
    pub sha256: String,
}

/// The undirected edges of an Ext-quiver, vertices named by projective
/// labels.
#[derive(Clone, Debug, Deserialize)]
pub struct QuiverFixture {
    pub id: String,
    pub n: usize,
    pub r: usize,
    pub block: Vec<usize>,
    pub edges: Vec<[ProjectiveLabel; 2]>,
    pub sha256: String,
}

macro_rules! block_id {
    ($t:ty) => {
        impl $t {
            pub fn block_id(&self) -> BlockId {
                BlockId { evaluation: self.block.clone() }
            }
        }
    };
}

block_id!(QCartanFixture);
block_id!(DecompositionFixture);
block_id!(QuiverFixture);

impl QCartanFixture {
    /// Entries differing from a computed block, as `(row, column,
    /// expected, computed)`, keyed by labels rather than positions.
    pub fn mismatches(&self, computed: &QCartanBlock) -> Vec<(ProjectiveLabel, ProjectiveLabel, QPoly, QPoly)> {
        let mut out = Vec::new();
        for (a, row) in self.labels.iter().zip(&self.entries) {
            for (b, want) in self.labels.iter().zip(row) {
                let got = computed.entry(&a.phi(), &b.phi()).cloned().unwrap_or_default();
                if &got != want {
                    out.push((a.clone(), b.clone(), want.clone(), got));
                }
            }
        }
        out
    }

    /// Whether the fixture lists exactly the simple modules of the block.
    pub fn covers(&self, computed: &QCartanBlock) -> bool {
        let mut mine: Vec<SimpleLabel> = self.labels.iter().map(ProjectiveLabel::phi).collect();
        mine.sort();
        mine == computed.labels
    }
}

/// The checksum of a fixture entry as stored.
pub fn checksum(entry: &serde_json::Value) -> String {
    let mut v = entry.clone();
    if let Some(m) = v.as_object_mut() {
        m.remove("sha256");
    }
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

fn load<T: DeserializeOwned>(text: &str) -> Result<Vec<T>> {
    let raw: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.into_iter()
        .map(|entry| {
            let stored = entry.get("sha256").and_then(|s| s.as_str()).unwrap_or_default();
            let id = entry.get("id").and_then(|s| s.as_str()).unwrap_or("?");
            if checksum(&entry) != stored {
                return Err(Error::Parse(format!("checksum mismatch in fixture {id}")));
            }
            serde_json::from_value(entry.clone()).map_err(|e| Error::Parse(format!("fixture {id}: {e}")))
        })
        .collect()
}

pub fn qcartan() -> Result<Vec<QCartanFixture>> {
    load(QCARTAN)
}

pub fn decomposition() -> Result<Vec<DecompositionFixture>> {
    load(DECOMPOSITION)
}

pub fn quivers() -> Result<Vec<QuiverFixture>> {
    load(QUIVER)
}
