//! Basis-presented graded vector spaces and homogeneous maps between them.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// A graded space given by a finite labelled basis.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct GradedSpace {
    labels: Vec<String>,
    degrees: Vec<i32>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.degrees == other.degrees
    }
}

impl Eq for GradedSpace {}

impl GradedSpace {
    pub fn new(basis: Vec<(String, i32)>) -> Result<Self, CoreError> {
        let mut index = HashMap::with_capacity(basis.len());
        let mut labels = Vec::with_capacity(basis.len());
        let mut degrees = Vec::with_capacity(basis.len());
        for (i, (l, d)) in basis.into_iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(CoreError::DegreeMismatch(format!("duplicate basis label {l:?}")));
            }
            labels.push(l);
            degrees.push(d);
        }
        Ok(GradedSpace { labels, degrees, index })
    }

    pub fn zero() -> Self {
        GradedSpace::default()
    }

    /// A space with `dims[d]` basis vectors in each degree `d`, labelled `prefix{d}.{i}`.
    pub fn from_profile(prefix: &str, dims: &BTreeMap<i32, usize>) -> Self {
        let mut basis = Vec::new();
        for (&d, &n) in dims {
            for i in 0..n {
                basis.push((format!("{prefix}{d}.{i}"), d));
            }
        }
        GradedSpace::new(basis).expect("generated labels are unique")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        if self.index.len() == self.labels.len() {
            self.index.get(label).copied()
        } else {
            // deserialized without the index
            self.labels.iter().position(|l| l == label)
        }
    }

    /// Basis indices sitting in degree `d`.
    pub fn basis_in_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// Number of basis vectors per degree.
    pub fn profile(&self) -> BTreeMap<i32, usize> {
        let mut p = BTreeMap::new();
        for &d in &self.degrees {
            *p.entry(d).or_insert(0) += 1;
        }
        p
    }

    /// The degree of a vector if it is homogeneous and nonzero.
    pub fn homogeneous_degree(&self, v: &[Scalar]) -> Option<i32> {
        let mut deg = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degrees[i]),
                Some(d) if d != self.degrees[i] => return None,
                _ => {}
            }
        }
        deg
    }

    /// Splits a vector into homogeneous pieces.
    pub fn homogeneous_parts(&self, v: &[Scalar]) -> BTreeMap<i32, Vector> {
        let mut parts: BTreeMap<i32, Vector> = BTreeMap::new();
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                parts.entry(self.degrees[i]).or_insert_with(|| crate::vector::zeros(self.dim()))[i] = x.clone();
            }
        }
        parts
    }

    /// Basis `a⊗b` ordered with the left factor slowest.
    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                basis.push((format!("{}⊗{}", self.labels[i], other.labels[j]), self.degrees[i] + other.degrees[j]));
            }
        }
        GradedSpace::new(basis).expect("tensor labels are unique")
    }
}

/// A homogeneous linear map. The matrix has one row per target basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedMap {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub degree: i32,
    pub matrix: Matrix,
}

impl GradedMap {
    pub fn new(source: GradedSpace, target: GradedSpace, degree: i32, matrix: Matrix) -> Result<Self, CoreError> {
        if matrix.rows() != target.dim() {
            return Err(CoreError::DimensionMismatch { expected: target.dim(), got: matrix.rows() });
        }
        if matrix.cols() != source.dim() {
            return Err(CoreError::DimensionMismatch { expected: source.dim(), got: matrix.cols() });
        }
        for w in 0..target.dim() {
            for v in 0..source.dim() {
                if !matrix.get(w, v).is_zero() && target.degree(w) != source.degree(v) + degree {
                    return Err(CoreError::DegreeMismatch(format!(
                        "entry ({}, {}) breaks degree {}",
                        source.label(v),
                        target.label(w),
                        degree
                    )));
                }
            }
        }
        Ok(GradedMap { source, target, degree, matrix })
    }

    pub fn identity(space: &GradedSpace) -> Self {
        GradedMap { source: space.clone(), target: space.clone(), degree: 0, matrix: Matrix::identity(space.dim()) }
    }

    pub fn zero(source: &GradedSpace, target: &GradedSpace, degree: i32) -> Self {
        GradedMap {
            source: source.clone(),
            target: target.clone(),
            degree,
            matrix: Matrix::zeros(target.dim(), source.dim()),
        }
    }

    /// Coefficient of target label `w` in the image of source label `v`.
    pub fn entry(&self, v: &str, w: &str) -> Option<&Scalar> {
        Some(self.matrix.get(self.target.index_of(w)?, self.source.index_of(v)?))
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector, CoreError> {
        self.matrix.mul_vec(v)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `g∘f`; degrees add.
pub fn compose_graded(g: &GradedMap, f: &GradedMap) -> Result<GradedMap, CoreError> {
    if f.target != g.source {
        return Err(CoreError::DegreeMismatch("compose: target of f is not the source of g".into()));
    }
    Ok(GradedMap {
        source: f.source.clone(),
        target: g.target.clone(),
        degree: f.degree + g.degree,
        matrix: g.matrix.mul(&f.matrix)?,
    })
}

/// `(f⊗g)(x⊗y) = (−1)^{deg(x)deg(g)} f(x)⊗g(y)`.
pub fn tensor_maps(f: &GradedMap, g: &GradedMap) -> GradedMap {
    let source = f.source.tensor(&g.source);
    let target = f.target.tensor(&g.target);
    let (fs, gs) = (f.source.dim(), g.source.dim());
    let gt = g.target.dim();
    let mut m = Matrix::zeros(target.dim(), source.dim());
    for x in 0..fs {
        let sign = Scalar::sign((f.source.degree(x) * g.degree) as i64);
        for y in 0..gs {
            let col = x * gs + y;
            for fx in 0..f.target.dim() {
                let a = f.matrix.get(fx, x);
                if a.is_zero() {
                    continue;
                }
                for gy in 0..gt {
                    let b = g.matrix.get(gy, y);
                    if !b.is_zero() {
                        m.set(fx * gt + gy, col, &(&sign * a) * b);
                    }
                }
            }
        }
    }
    GradedMap { source, target, degree: f.degree + g.degree, matrix: m }
}

/// The suspension `s: V → V[1]`, `s(v) = v⊗𝟙` with `𝟙` of degree −1.
pub fn suspend(v: &GradedSpace) -> (GradedSpace, GradedMap) {
    let basis = (0..v.dim()).map(|i| (format!("s({})", v.label(i)), v.degree(i) - 1)).collect();
    let sv = GradedSpace::new(basis).expect("labels mirror a valid space");
    let s = GradedMap { source: v.clone(), target: sv.clone(), degree: -1, matrix: Matrix::identity(v.dim()) };
    (sv, s)
}

/// The inverse of [`suspend`]'s map.
pub fn desuspend_map(s: &GradedMap) -> GradedMap {
    GradedMap {
        source: s.target.clone(),
        target: s.source.clone(),
        degree: -s.degree,
        matrix: Matrix::identity(s.source.dim()),
    }
}
