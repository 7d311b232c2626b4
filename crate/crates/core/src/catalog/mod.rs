//! The identity catalog: built-in entries, JSON import/export, verification.

mod builtin;
mod combine;
mod json;
mod verify;

pub use builtin::builtin_catalog;
pub use combine::{reconstruct_combination, Combination};
pub use json::{load_catalog, serialize_catalog};
pub use verify::{verify_entry, verify_identity, Verification};

use crate::error::{Error, Result};
use crate::series::IdentityDef;

/// Where an identity comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// A main result (a new ζ(4) or ζ(5) series).
    Theorem,
    /// A previously known series used as an ingredient.
    Classical,
    /// A step identity produced by differentiating a transformation.
    Intermediate,
    /// A linear combination of other entries.
    Combined,
}

impl Provenance {
    pub fn label_prefix(self) -> &'static str {
        match self {
            Provenance::Theorem => "theorem",
            Provenance::Classical => "classical",
            Provenance::Intermediate => "intermediate",
            Provenance::Combined => "combined",
        }
    }

    /// Inferred from the leading word of an entry label.
    pub fn from_label(label: &str) -> Self {
        let head = label.trim_start().to_ascii_lowercase();
        [Provenance::Theorem, Provenance::Intermediate, Provenance::Combined]
            .into_iter()
            .find(|p| head.starts_with(p.label_prefix()))
            .unwrap_or(Provenance::Classical)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub def: IdentityDef,
    pub provenance: Provenance,
    /// Terms the built-in summation needs for 100 digits, where known.
    pub expected_terms_100d: Option<usize>,
}

/// An immutable, id-indexed set of entries.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog {
            entries: builtin_catalog(),
        }
    }

    pub fn from_json(document: &[u8]) -> Result<Self> {
        let mut entries = load_catalog(document)?;
        entries.sort_by(|a, b| a.def.id.cmp(&b.def.id));
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.def.id == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.def.id.as_str())
    }

    pub fn to_json(&self) -> String {
        serialize_catalog(&self.entries)
    }
}
