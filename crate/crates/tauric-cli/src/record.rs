//! The unit of batch input: one named vertex list.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// A named polytope candidate as read from a file or fixture. Not yet
/// validated; validation happens per record inside the batch so that one
/// bad entry cannot sink the others.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeRecord {
    pub name: String,
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    /// File path or fixture id this record came from; not part of the
    /// serialized formats.
    #[serde(skip, default)]
    pub source: String,
}

impl PolytopeRecord {
    /// Runs the full polytope validation on this record.
    pub fn to_polytope(&self) -> tauric::Result<tauric::FanoPolytope> {
        let vertices: Vec<Vec<BigInt>> = self
            .vertices
            .iter()
            .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        Ok(tauric::FanoPolytope::new(self.dim, vertices)?.with_name(self.name.clone()))
    }
}
