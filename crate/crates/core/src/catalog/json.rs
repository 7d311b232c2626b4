//! JSON exchange format for catalogs.
//!
//! A document is an array of entries; every rational is a `"p/q"` string.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use super::{CatalogEntry, Provenance};
use crate::error::{Error, Result};
use crate::numeric::{format_rational, parse_rational, Poly, Rational};
use crate::series::{
    Convergence, HarmonicArg, HarmonicFactor, IdentityDef, PochFactor, PochIndex, SeriesDef, SummandTerm,
    TargetTerm, ZetaConst,
};

#[derive(Clone, Debug, PartialEq)]
struct Rat(Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(Rat).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    id: String,
    z: Rat,
    poch_num: Vec<PochDoc>,
    poch_den: Vec<PochDoc>,
    terms: Vec<TermDoc>,
    target: Vec<TargetDoc>,
    convergence: ConvergenceDoc,
    #[serde(rename = "paper_eq")]
    label: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PochDoc {
    base: Rat,
    index: IndexDoc,
    power: u32,
}

#[derive(Serialize, Deserialize)]
enum IndexDoc {
    #[serde(rename = "k")]
    K,
    #[serde(rename = "2k")]
    TwoK,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    num_poly: Vec<Rat>,
    den_poly: Vec<Rat>,
    harmonic: Vec<HarmonicDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HarmonicDoc {
    ell: u32,
    arg: ArgDoc,
    x: Rat,
}

#[derive(Serialize, Deserialize)]
enum ArgDoc {
    #[serde(rename = "k")]
    K,
    #[serde(rename = "1+2k")]
    OnePlusTwoK,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TargetDoc {
    #[serde(rename = "const")]
    constant: ConstDoc,
    coeff: Rat,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ConstDoc {
    Zeta3,
    Zeta4,
    Zeta5,
    One,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ConvergenceDoc {
    Geometric,
    Polynomial,
}

fn poly_doc(p: &Poly) -> Vec<Rat> {
    p.coeffs().iter().cloned().map(Rat).collect()
}

fn poch_doc(f: &PochFactor) -> PochDoc {
    PochDoc {
        base: Rat(f.base.clone()),
        index: match f.index {
            PochIndex::K => IndexDoc::K,
            PochIndex::TwoK => IndexDoc::TwoK,
        },
        power: f.power,
    }
}

fn poch_def(d: PochDoc) -> PochFactor {
    let index = match d.index {
        IndexDoc::K => PochIndex::K,
        IndexDoc::TwoK => PochIndex::TwoK,
    };
    PochFactor::new(d.base.0, index, d.power)
}

impl From<&CatalogEntry> for EntryDoc {
    fn from(e: &CatalogEntry) -> Self {
        let s = &e.def.series;
        EntryDoc {
            id: e.def.id.clone(),
            z: Rat(s.z.clone()),
            poch_num: s.poch_num.iter().map(poch_doc).collect(),
            poch_den: s.poch_den.iter().map(poch_doc).collect(),
            terms: s
                .terms
                .iter()
                .map(|t| TermDoc {
                    num_poly: poly_doc(&t.num),
                    den_poly: poly_doc(&t.den),
                    harmonic: t
                        .harmonic
                        .iter()
                        .map(|h| HarmonicDoc {
                            ell: h.ell,
                            arg: match h.arg {
                                HarmonicArg::K => ArgDoc::K,
                                HarmonicArg::OnePlusTwoK => ArgDoc::OnePlusTwoK,
                            },
                            x: Rat(h.x.clone()),
                        })
                        .collect(),
                })
                .collect(),
            target: e
                .def
                .target
                .iter()
                .map(|t| TargetDoc {
                    constant: match t.constant {
                        ZetaConst::Zeta3 => ConstDoc::Zeta3,
                        ZetaConst::Zeta4 => ConstDoc::Zeta4,
                        ZetaConst::Zeta5 => ConstDoc::Zeta5,
                        ZetaConst::One => ConstDoc::One,
                    },
                    coeff: Rat(t.coeff.clone()),
                })
                .collect(),
            convergence: match s.convergence {
                Convergence::Geometric => ConvergenceDoc::Geometric,
                Convergence::Polynomial => ConvergenceDoc::Polynomial,
            },
            label: e.def.label.clone(),
        }
    }
}

impl EntryDoc {
    fn into_entry(self) -> CatalogEntry {
        let poly = |v: Vec<Rat>| Poly::new(v.into_iter().map(|r| r.0).collect());
        let series = SeriesDef {
            z: self.z.0,
            poch_num: self.poch_num.into_iter().map(poch_def).collect(),
            poch_den: self.poch_den.into_iter().map(poch_def).collect(),
            terms: self
                .terms
                .into_iter()
                .map(|t| {
                    SummandTerm::new(
                        poly(t.num_poly),
                        poly(t.den_poly),
                        t.harmonic
                            .into_iter()
                            .map(|h| {
                                let arg = match h.arg {
                                    ArgDoc::K => HarmonicArg::K,
                                    ArgDoc::OnePlusTwoK => HarmonicArg::OnePlusTwoK,
                                };
                                HarmonicFactor::new(h.ell, arg, h.x.0)
                            })
                            .collect(),
                    )
                })
                .collect(),
            convergence: match self.convergence {
                ConvergenceDoc::Geometric => Convergence::Geometric,
                ConvergenceDoc::Polynomial => Convergence::Polynomial,
            },
        };
        let target = self
            .target
            .into_iter()
            .map(|t| {
                let c = match t.constant {
                    ConstDoc::Zeta3 => ZetaConst::Zeta3,
                    ConstDoc::Zeta4 => ZetaConst::Zeta4,
                    ConstDoc::Zeta5 => ZetaConst::Zeta5,
                    ConstDoc::One => ZetaConst::One,
                };
                TargetTerm::new(c, t.coeff.0)
            })
            .collect();
        CatalogEntry {
            provenance: Provenance::from_label(&self.label),
            def: IdentityDef {
                id: self.id,
                series,
                target,
                label: self.label,
            },
            expected_terms_100d: None,
        }
    }
}

/// Parses and validates a JSON catalog document.
pub fn load_catalog(document: &[u8]) -> Result<Vec<CatalogEntry>> {
    let mut de = serde_json::Deserializer::from_slice(document);
    let docs: Vec<EntryDoc> = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse {
            line: inner.line(),
            column: inner.column(),
            path,
            message: inner.to_string(),
        }
    })?;
    de.end().map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        path: ".".into(),
        message: e.to_string(),
    })?;
    let entries: Vec<CatalogEntry> = docs.into_iter().map(EntryDoc::into_entry).collect();
    let mut seen = std::collections::HashSet::new();
    for e in &entries {
        if !seen.insert(e.def.id.as_str()) {
            return Err(Error::Validation {
                id: e.def.id.clone(),
                reason: "duplicate id".into(),
            });
        }
        e.def.validate().map_err(|reason| Error::Validation {
            id: e.def.id.clone(),
            reason,
        })?;
    }
    Ok(entries)
}

/// Pretty-printed JSON document for `entries`.
pub fn serialize_catalog(entries: &[CatalogEntry]) -> String {
    let docs: Vec<EntryDoc> = entries.iter().map(EntryDoc::from).collect();
    serde_json::to_string_pretty(&docs).expect("catalog documents always serialize")
}
