//! JSON and plain-text rendering of representations.
//!
//! JSON layout:
//!
//! ```text
//! { "field": "q" | "fp:<p>",
//!   "algebra": { "quiver": { "name", "vertices": [..],
//!                            "arrows": [{ "source", "target", "label" }] },
//!                "canonical": [p, q, s] | null },
//!   "dims": [..],
//!   "arrows": [{ "label", "rows", "cols", "entries": ["n" | "n/d", ..] }] }
//! ```
//!
//! Vertex indices in `arrows` refer to `vertices`; matrix entries are row-major.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Field, Scalar};
use crate::quiver::{build_canonical, Algebra, Quiver};
use crate::rep::Representation;
use crate::tilt::FunctorOutput;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub quiver: Quiver,
    pub canonical: Option<[usize; 3]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub label: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub field: String,
    pub algebra: AlgebraJson,
    pub dims: Vec<usize>,
    pub arrows: Vec<MatrixJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctorJson {
    pub representation: RepJson,
    pub provenance: ProvenanceJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub module: String,
    pub tilting: String,
}

pub fn to_json_value(rep: &Representation) -> RepJson {
    let q = rep.quiver();
    RepJson {
        field: rep.field().to_string(),
        algebra: AlgebraJson {
            quiver: q.clone(),
            canonical: rep.algebra().as_canonical().map(|c| {
                let (p, q, s) = c.arms();
                [p, q, s]
            }),
        },
        dims: rep.dims().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .zip(rep.maps())
            .map(|(a, m)| MatrixJson {
                label: a.label.clone(),
                rows: m.rows(),
                cols: m.cols(),
                entries: m.entries().iter().map(Scalar::to_string).collect(),
            })
            .collect(),
    }
}

pub fn to_json(rep: &Representation) -> String {
    serde_json::to_string_pretty(&to_json_value(rep)).expect("serializable")
}

pub fn functor_to_json(out: &FunctorOutput) -> String {
    let doc = FunctorJson {
        representation: to_json_value(&out.representation),
        provenance: ProvenanceJson {
            module: out.provenance.module.clone(),
            tilting: out.provenance.tilting.clone(),
        },
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn from_json_value(doc: &RepJson) -> Result<Representation> {
    let field = Field::parse(&doc.field)?;
    let q = &doc.algebra.quiver;
    let quiver = Quiver::new(q.name(), q.vertex_labels().to_vec(), q.arrows().to_vec())?;
    let algebra = match doc.algebra.canonical {
        Some([p, qq, s]) => {
            let c = build_canonical(p, qq, s)?;
            if c.quiver() != &quiver {
                return Err(Error::Parse(format!(
                    "quiver does not match the canonical algebra ({p},{qq},{s})"
                )));
            }
            Algebra::Canonical(c)
        }
        None => Algebra::Path(quiver),
    };
    if doc.arrows.len() != algebra.quiver().arrows().len() {
        return Err(Error::Parse(format!(
            "{} matrices for {} arrows",
            doc.arrows.len(),
            algebra.quiver().arrows().len()
        )));
    }
    let mut maps = Vec::with_capacity(doc.arrows.len());
    for (a, m) in algebra.quiver().arrows().iter().zip(&doc.arrows) {
        if a.label != m.label {
            return Err(Error::Parse(format!(
                "matrix labelled {:?} where arrow {:?} was expected",
                m.label, a.label
            )));
        }
        let entries = m
            .entries
            .iter()
            .map(|e| Scalar::parse(field, e))
            .collect::<Result<Vec<_>>>()?;
        maps.push(ExactMatrix::new(field, m.rows, m.cols, entries)?);
    }
    let rep = Representation::new(Arc::new(algebra), field, doc.dims.clone(), maps)
        .map_err(|e| Error::Parse(e.to_string()))?;
    if let Some(v) = rep.validate().into_iter().next() {
        return Err(Error::Parse(v.to_string()));
    }
    Ok(rep)
}

pub fn from_json(text: &str) -> Result<Representation> {
    let doc: RepJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_json_value(&doc)
}

/// One block per arrow: a header line, then the matrix with space-aligned
/// entries.
pub fn to_text(rep: &Representation) -> String {
    let q = rep.quiver();
    let mut out = String::new();
    let dims: Vec<String> = q
        .vertex_labels()
        .iter()
        .zip(rep.dims())
        .map(|(v, d)| format!("{v}:{d}"))
        .collect();
    let _ = writeln!(out, "algebra {} over {}", rep.algebra(), rep.field());
    let _ = writeln!(out, "dims {}", dims.join(" "));
    for (a, m) in q.arrows().iter().zip(rep.maps()) {
        let _ = writeln!(
            out,
            "\n{} : {} -> {}  ({}x{})",
            a.label,
            q.label(a.source),
            q.label(a.target),
            m.rows(),
            m.cols()
        );
        let _ = writeln!(out, "{m}");
    }
    out
}
