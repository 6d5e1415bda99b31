//! JSON instance files: a subspace in quotient coordinates plus the source it
//! came from and the parameters used.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::boolalg::{MonomialBasis, Variant};
use crate::error::{Error, Result};
use crate::frontends::{parse_dimacs, parse_quadeq, CnfFormula, QuadSystemSource};
use crate::gf::FieldSpec;
use crate::subspace::SubspaceSpec;
use crate::superposition::Regime;

pub const FORMAT: &str = "rankgap-instance/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Superposition,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeSource {
    Computed,
    Override,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub mode: Mode,
    pub source_sha256: String,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<f64>,
    pub q: u32,
    pub degree: usize,
    pub degree_source: DegreeSource,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub soundness_regime: Option<Regime>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub format: String,
    pub field: String,
    pub variant: Variant,
    pub n: usize,
    pub d: usize,
    pub coordinate_count: usize,
    pub matrix_dimension: usize,
    pub constraint_count: usize,
    /// Sparse rows of `(coordinate index, coefficient)`.
    pub constraints: Vec<Vec<(usize, String)>>,
    pub provenance: Provenance,
    /// Normalised source text (DIMACS or QuadEq).
    pub source: String,
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl InstanceFile {
    pub fn new(l: &SubspaceSpec, provenance: Provenance, source: String) -> InstanceFile {
        let f = l.field();
        InstanceFile {
            format: FORMAT.into(),
            field: f.descriptor(),
            variant: l.variant(),
            n: l.n(),
            d: l.level(),
            coordinate_count: l.coordinate_count(),
            matrix_dimension: l.matrix_dimension(),
            constraint_count: l.constraint_count(),
            constraints: l
                .constraints()
                .iter()
                .map(|row| row.iter().map(|&(i, c)| (i, f.format_elem(c))).collect())
                .collect(),
            provenance,
            source,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<InstanceFile> {
        let inst: InstanceFile = serde_json::from_str(text).map_err(|e| {
            Error::parse(e.line(), format!("instance file: {e}"))
        })?;
        if inst.format != FORMAT {
            return Err(Error::parse(1, format!("unknown instance format {:?}", inst.format)));
        }
        Ok(inst)
    }

    pub fn field(&self) -> Result<FieldSpec> {
        FieldSpec::parse_descriptor(&self.field)
    }

    /// Rebuilds the subspace and checks the recorded sizes.
    pub fn subspace(&self) -> Result<SubspaceSpec> {
        let field = self.field()?;
        let coords = Arc::new(MonomialBasis::covering(self.n, 2 * self.d, self.variant)?);
        let rows = self
            .constraints
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(i, c)| Ok((*i, field.parse_elem(c)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let l = SubspaceSpec::new(&field, self.d, coords, rows)?;
        let recorded = [self.coordinate_count, self.matrix_dimension, self.constraint_count];
        let actual = [l.coordinate_count(), l.matrix_dimension(), l.constraint_count()];
        if recorded != actual {
            return Err(Error::parse(
                1,
                format!("instance sizes {recorded:?} disagree with the rebuilt subspace {actual:?}"),
            ));
        }
        Ok(l)
    }

    pub fn quad_source(&self) -> Result<QuadSystemSource> {
        if self.provenance.mode != Mode::Direct {
            return Err(Error::pre("instance was not built from a quadratic system"));
        }
        parse_quadeq(&self.source)
    }

    pub fn cnf_source(&self) -> Result<CnfFormula> {
        if self.provenance.mode != Mode::Superposition {
            return Err(Error::pre("instance was not built from a CNF formula"));
        }
        parse_dimacs(&self.source)
    }
}
