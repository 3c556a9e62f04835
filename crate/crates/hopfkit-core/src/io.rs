//! JSON interchange for Hopf algebras, R-matrices, braided Hopf
//! algebras and Yetter-Drinfeld modules.
//!
//! Scalar literals use the shared grammar: a rational `-?\d+(/\d+)?` or
//! a polynomial in `z` such as `1/2*z^3-2*z+1`, with `z = zeta_L` for
//! the file-level conductor L. Sparse tensors are arrays
//! `[i, j, k, "scalar"]` (coefficient of b_k in b_i·b_j, or of
//! b_j ⊗ b_k in Δ(b_i)); sparse matrices are `[row, col, "scalar"]`
//! with columns acting as inputs. Serialization is canonical: entries
//! sorted, scalars in reduced form, so serialize ∘ load is the
//! identity on canonicalized files.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::{HopfAlgebra, Metadata, StructTensor};
use crate::linalg::Mat;
use crate::qt::QTStructure;
use crate::scalar::CycScalar;
use crate::yd::{BraidedHopfAlgebra, YDModule};
use crate::HModule;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("missing R-matrix")]
    MissingRMatrix,
}

fn perr(msg: impl Into<String>) -> IoError {
    IoError::Parse(msg.into())
}

#[derive(Serialize, Deserialize)]
struct HopfJson {
    conductor: u32,
    dim: usize,
    basis: Vec<String>,
    mult: Vec<(usize, usize, usize, String)>,
    comult: Vec<(usize, usize, usize, String)>,
    unit: Vec<String>,
    counit: Vec<String>,
    antipode: Vec<(usize, usize, String)>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none", default)]
    r: Option<Vec<(usize, usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    metadata: Option<MetadataJson>,
}

#[derive(Serialize, Deserialize)]
struct MetadataJson {
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    grouplikes: Vec<String>,
    #[serde(skip_serializing_if = "std::collections::BTreeMap::is_empty", default)]
    tags: std::collections::BTreeMap<String, String>,
}

fn tensor_to_json(t: &StructTensor) -> Vec<(usize, usize, usize, String)> {
    t.entries()
        .iter()
        .map(|(i, j, k, c)| (*i as usize, *j as usize, *k as usize, c.to_string()))
        .collect()
}

fn mat_to_sparse(m: &Mat) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            if !m.at(r, c).is_zero() {
                out.push((r, c, m.at(r, c).to_string()));
            }
        }
    }
    out
}

fn vec_to_json(v: &[CycScalar]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn tensor_from_json(
    dim: usize,
    l: u32,
    entries: &[(usize, usize, usize, String)],
    what: &str,
) -> Result<StructTensor, IoError> {
    let mut out = Vec::with_capacity(entries.len());
    for (i, j, k, s) in entries {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(perr(format!("{what} index out of range: ({i},{j},{k})")));
        }
        let c = CycScalar::parse(s, l).map_err(|e| perr(format!("{what}: {e}")))?;
        out.push((*i as u32, *j as u32, *k as u32, c));
    }
    Ok(StructTensor::from_entries(dim, out))
}

fn mat_from_sparse(
    rows: usize,
    cols: usize,
    l: u32,
    entries: &[(usize, usize, String)],
    what: &str,
) -> Result<Mat, IoError> {
    let mut m = Mat::zero(rows, cols);
    for (r, c, s) in entries {
        if *r >= rows || *c >= cols {
            return Err(perr(format!("{what} index out of range: ({r},{c})")));
        }
        let v = CycScalar::parse(s, l).map_err(|e| perr(format!("{what}: {e}")))?;
        m.set(*r, *c, v);
    }
    Ok(m)
}

fn vec_from_json(n: usize, l: u32, v: &[String], what: &str) -> Result<Vec<CycScalar>, IoError> {
    if v.len() != n {
        return Err(perr(format!("{what} has length {} but dim is {n}", v.len())));
    }
    v.iter()
        .map(|s| CycScalar::parse(s, l).map_err(|e| perr(format!("{what}: {e}"))))
        .collect()
}

/// Serialize a Hopf algebra (and an optional R-matrix) canonically.
pub fn hopf_to_json(h: &HopfAlgebra, r: Option<&Mat>) -> String {
    let meta = if h.metadata.grouplikes.is_empty() && h.metadata.tags.is_empty() {
        None
    } else {
        Some(MetadataJson { grouplikes: h.metadata.grouplikes.clone(), tags: h.metadata.tags.clone() })
    };
    let doc = HopfJson {
        conductor: h.conductor,
        dim: h.dim,
        basis: h.basis_labels.clone(),
        mult: tensor_to_json(&h.mult),
        comult: tensor_to_json(&h.comult),
        unit: vec_to_json(&h.unit),
        counit: vec_to_json(&h.counit),
        antipode: mat_to_sparse(&h.antipode),
        r: r.map(mat_to_sparse),
        metadata: meta,
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

pub fn qt_to_json(qt: &QTStructure) -> String {
    hopf_to_json(&qt.h, Some(&qt.r))
}

/// Load a Hopf algebra and its optional R-matrix from JSON.
pub fn hopf_from_json(text: &str) -> Result<(HopfAlgebra, Option<Mat>), IoError> {
    let doc: HopfJson = serde_json::from_str(text).map_err(|e| perr(e.to_string()))?;
    if doc.conductor < 1 {
        return Err(perr("conductor must be positive"));
    }
    if doc.basis.len() != doc.dim {
        return Err(perr(format!("basis has {} labels but dim is {}", doc.basis.len(), doc.dim)));
    }
    let l = doc.conductor;
    let n = doc.dim;
    let h = HopfAlgebra {
        dim: n,
        conductor: l,
        basis_labels: doc.basis,
        mult: tensor_from_json(n, l, &doc.mult, "mult")?,
        unit: vec_from_json(n, l, &doc.unit, "unit")?,
        comult: tensor_from_json(n, l, &doc.comult, "comult")?,
        counit: vec_from_json(n, l, &doc.counit, "counit")?,
        antipode: mat_from_sparse(n, n, l, &doc.antipode, "antipode")?,
        metadata: doc
            .metadata
            .map(|m| Metadata { grouplikes: m.grouplikes, tags: m.tags })
            .unwrap_or_default(),
    };
    let r = doc
        .r
        .map(|entries| mat_from_sparse(n, n, l, &entries, "R"))
        .transpose()?;
    Ok((h, r))
}

pub fn qt_from_json(text: &str) -> Result<QTStructure, IoError> {
    let (h, r) = hopf_from_json(text)?;
    let r = r.ok_or(IoError::MissingRMatrix)?;
    Ok(QTStructure::new(h, r))
}

#[derive(Serialize, Deserialize)]
struct BraidedJson {
    conductor: u32,
    dim: usize,
    /// action of each base-algebra basis element on the carrier
    carrier_rho: Vec<Vec<(usize, usize, String)>>,
    mult: Vec<(usize, usize, usize, String)>,
    comult: Vec<(usize, usize, usize, String)>,
    unit: Vec<String>,
    counit: Vec<String>,
    antipode: Vec<(usize, usize, String)>,
}

pub fn braided_to_json(b: &BraidedHopfAlgebra, conductor: u32) -> String {
    let doc = BraidedJson {
        conductor,
        dim: b.dim(),
        carrier_rho: b.carrier.rho.iter().map(mat_to_sparse).collect(),
        mult: tensor_to_json(&b.mult),
        comult: tensor_to_json(&b.comult),
        unit: vec_to_json(&b.unit),
        counit: vec_to_json(&b.counit),
        antipode: mat_to_sparse(&b.antipode),
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

pub fn braided_from_json(text: &str, base: &HopfAlgebra) -> Result<BraidedHopfAlgebra, IoError> {
    let doc: BraidedJson = serde_json::from_str(text).map_err(|e| perr(e.to_string()))?;
    let l = doc.conductor;
    let nb = doc.dim;
    if doc.carrier_rho.len() != base.dim {
        return Err(perr(format!(
            "carrier_rho has {} matrices but the base algebra has dim {}",
            doc.carrier_rho.len(),
            base.dim
        )));
    }
    let rho = doc
        .carrier_rho
        .iter()
        .map(|m| mat_from_sparse(nb, nb, l, m, "carrier_rho"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BraidedHopfAlgebra {
        carrier: HModule { dim: nb, rho },
        mult: tensor_from_json(nb, l, &doc.mult, "mult")?,
        unit: vec_from_json(nb, l, &doc.unit, "unit")?,
        comult: tensor_from_json(nb, l, &doc.comult, "comult")?,
        counit: vec_from_json(nb, l, &doc.counit, "counit")?,
        antipode: mat_from_sparse(nb, nb, l, &doc.antipode, "antipode")?,
    })
}

#[derive(Serialize, Deserialize)]
struct YdJson {
    conductor: u32,
    dim: usize,
    /// action of each base-algebra basis element on the carrier
    rho: Vec<Vec<(usize, usize, String)>>,
    /// act: M ⊗ B → M, a dim x (dim·dimB) sparse matrix
    act: Vec<(usize, usize, String)>,
    /// coact: M → M ⊗ B, a (dim·dimB) x dim sparse matrix
    coact: Vec<(usize, usize, String)>,
}

pub fn yd_to_json(m: &YDModule, conductor: u32) -> String {
    let doc = YdJson {
        conductor,
        dim: m.dim(),
        rho: m.carrier.rho.iter().map(mat_to_sparse).collect(),
        act: mat_to_sparse(&m.act),
        coact: mat_to_sparse(&m.coact),
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail") + "\n"
}

pub fn yd_from_json(
    text: &str,
    b: &BraidedHopfAlgebra,
    base: &HopfAlgebra,
) -> Result<YDModule, IoError> {
    let doc: YdJson = serde_json::from_str(text).map_err(|e| perr(e.to_string()))?;
    let l = doc.conductor;
    let md = doc.dim;
    if doc.rho.len() != base.dim {
        return Err(perr(format!(
            "rho has {} matrices but the base algebra has dim {}",
            doc.rho.len(),
            base.dim
        )));
    }
    let rho = doc
        .rho
        .iter()
        .map(|m| mat_from_sparse(md, md, l, m, "rho"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(YDModule {
        carrier: HModule { dim: md, rho },
        act: mat_from_sparse(md, md * b.dim(), l, &doc.act, "act")?,
        coact: mat_from_sparse(md * b.dim(), md, l, &doc.coact, "coact")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn round_trip_is_byte_identical() {
        let qt = zoo::sweedler();
        let text = qt_to_json(&qt);
        let back = qt_from_json(&text).unwrap();
        assert_eq!(qt_to_json(&back), text);
        let q = CycScalar::root_of_unity(3, 1);
        let t = zoo::taft(3, &q).unwrap();
        let text = hopf_to_json(&t, None);
        let (back, r) = hopf_from_json(&text).unwrap();
        assert!(r.is_none());
        assert_eq!(hopf_to_json(&back, None), text);
    }

    #[test]
    fn round_trip_across_the_zoo() {
        for desc in zoo::all_descriptors() {
            let obj = zoo::build(&zoo::parse_descriptor(&desc).unwrap()).unwrap();
            let text = match &obj {
                zoo::ZooObject::Hopf(h) => hopf_to_json(h, None),
                zoo::ZooObject::Qt(qt) => qt_to_json(qt),
            };
            let (h, r) = hopf_from_json(&text).unwrap();
            assert_eq!(hopf_to_json(&h, r.as_ref()), text, "{desc}");
        }
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(hopf_from_json("{").is_err());
        assert!(hopf_from_json("{\"conductor\":1}").is_err());
        let qt = zoo::sweedler();
        let text = qt_to_json(&qt).replace("\"1/2\"", "\"1//2\"");
        assert!(hopf_from_json(&text).is_err());
        let text = hopf_to_json(&qt.h, None);
        assert!(matches!(qt_from_json(&text), Err(IoError::MissingRMatrix)));
    }
}
