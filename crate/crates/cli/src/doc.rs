//! The workspace document: one JSON object with optional sections.
//!
//! ```json
//! {
//!   "scalars": { "field": "fp", "modulus": 101 },
//!   "seed": 7,
//!   "caps": { "arity": 4, "level": 5 },
//!   "categories": [
//!     { "kind": "standard_simplex", "id": "D4", "n": 4 },
//!     { "kind": "random_chain", "id": "C", "objects": 3, "max_dim": 2, "zero_object": true },
//!     { "kind": "concentrated", "id": "Q", "objects": 3, "max_dim": 1 },
//!     { "kind": "chain", "id": "K", "objects": [ { "label": "X", "lo": 0, "dims": [1, 1], "d": [[["1"]], []] } ] },
//!     { "kind": "explicit", "id": "A", "objects": ["x", "y"],
//!       "homs": [ { "source": "x", "target": "y", "basis": [ { "label": "f", "degree": 0 } ] } ],
//!       "operations": [ { "objects": ["x", "x", "y"], "inputs": ["f", "1x"], "output": { "f": "1" } } ],
//!       "units": { "x": { "1x": "1" } } }
//!   ],
//!   "complexes": [ { "id": "A", "grading": "chain", "lo": 0, "dims": [2, 1], "d": [[], [["1"], ["-1/2"]]] } ],
//!   "simplices": [ { "id": "s", "category": "C", "objects": ["X0", "X1", "X2"] } ],
//!   "big_simplices": [ { "id": "b", "category": "Q", "objects": ["X0", "X1", "X2"] } ],
//!   "twisted": [ { "id": "t", "category": "C", "steps": 2 } ]
//! }
//! ```
//!
//! Scalars are strings `"p/q"`. Matrices are lists of rows; `d[k]` leaves
//! level `lo + k`. Entities without explicit data (`d`, `components`,
//! `data`, `q`) are generated from the seed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::CliError;

pub type MatrixDoc = Vec<Vec<String>>;

/// Basis label to coefficient.
pub type SparseVec = BTreeMap<String, String>;

#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceDoc {
    #[serde(default)]
    pub scalars: Option<ScalarsDoc>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub caps: CapsDoc,
    #[serde(default)]
    pub categories: Vec<CategoryDoc>,
    #[serde(default)]
    pub complexes: Vec<ComplexDoc>,
    #[serde(default)]
    pub simplices: Vec<SimplexDoc>,
    #[serde(default)]
    pub big_simplices: Vec<BigSimplexDoc>,
    #[serde(default)]
    pub twisted: Vec<TwistedDoc>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarsDoc {
    /// `rational` or `fp`
    pub field: String,
    #[serde(default)]
    pub modulus: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CapsDoc {
    /// default arity cap of explicit categories
    #[serde(default)]
    pub arity: Option<usize>,
    /// Dold-Kan level cap
    #[serde(default)]
    pub level: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CategoryDoc {
    StandardSimplex {
        id: String,
        n: usize,
    },
    Chain {
        id: String,
        objects: Vec<ObjectDoc>,
        #[serde(default)]
        seed: Option<u64>,
    },
    RandomChain {
        id: String,
        objects: usize,
        max_dim: usize,
        #[serde(default)]
        zero_object: bool,
        #[serde(default)]
        seed: Option<u64>,
    },
    Concentrated {
        id: String,
        objects: usize,
        max_dim: usize,
        #[serde(default)]
        zero_object: bool,
        #[serde(default)]
        seed: Option<u64>,
    },
    Explicit {
        id: String,
        objects: Vec<String>,
        #[serde(default)]
        homs: Vec<HomDoc>,
        #[serde(default)]
        operations: Vec<OperationDoc>,
        #[serde(default)]
        units: BTreeMap<String, SparseVec>,
        #[serde(default)]
        arity_cap: Option<usize>,
    },
}

impl CategoryDoc {
    pub fn id(&self) -> &str {
        match self {
            CategoryDoc::StandardSimplex { id, .. }
            | CategoryDoc::Chain { id, .. }
            | CategoryDoc::RandomChain { id, .. }
            | CategoryDoc::Concentrated { id, .. }
            | CategoryDoc::Explicit { id, .. } => id,
        }
    }
}

/// One object of a chain category, a cochain complex. Without `d` the
/// differentials are random.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectDoc {
    pub label: String,
    #[serde(default)]
    pub lo: i32,
    pub dims: Vec<usize>,
    #[serde(default)]
    pub d: Option<Vec<MatrixDoc>>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub source: String,
    pub target: String,
    pub basis: Vec<BasisDoc>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDoc {
    pub label: String,
    pub degree: i32,
}

/// `m_n` on one basis tuple. `objects` is `x₀ … x_n`; `inputs` are basis
/// labels in written order, the first one in `Hom(x_{n−1}, x_n)`.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct OperationDoc {
    pub objects: Vec<String>,
    pub inputs: Vec<String>,
    pub output: SparseVec,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub id: String,
    /// `chain` (default) or `cochain`
    #[serde(default)]
    pub grading: Option<String>,
    #[serde(default)]
    pub lo: i32,
    pub dims: Vec<usize>,
    #[serde(default)]
    pub d: Option<Vec<MatrixDoc>>,
    #[serde(default)]
    pub seed: Option<u64>,
}

/// A small-nerve simplex; `components` are keyed by strings `"0.1.3"`.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexDoc {
    pub id: String,
    pub category: String,
    pub objects: Vec<String>,
    #[serde(default)]
    pub components: Option<BTreeMap<String, SparseVec>>,
    #[serde(default)]
    pub seed: Option<u64>,
}

/// A big-nerve simplex; `data` is keyed by flags `"0.2|0.1.2"` and holds
/// dense Dold-Kan coordinates of the mapping space at the flag's level.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct BigSimplexDoc {
    pub id: String,
    pub category: String,
    pub objects: Vec<String>,
    #[serde(default)]
    pub data: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub seed: Option<u64>,
}

/// A twisted complex. With `components` the twist `q` is read from the
/// document, keyed `"a.b"`; otherwise `steps` random cones are stacked.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct TwistedDoc {
    pub id: String,
    pub category: String,
    #[serde(default)]
    pub components: Option<Vec<TwComponentDoc>>,
    #[serde(default)]
    pub q: BTreeMap<String, SparseVec>,
    #[serde(default)]
    pub steps: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct TwComponentDoc {
    pub position: i32,
    pub object: String,
}

/// Parses a document, reporting syntax and schema errors with positions.
pub fn parse_document(text: &str) -> Result<WorkspaceDoc, CliError> {
    serde_json::from_str(text).map_err(|e| {
        // serde_json appends the position to its message
        let full = e.to_string();
        let message = full.split(" at line ").next().unwrap_or(&full).to_string();
        CliError::Parse { line: e.line(), column: e.column(), message }
    })
}
