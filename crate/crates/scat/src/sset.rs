//! Finite simplicial sets presented by their nondegenerate simplices.
//!
//! Only sets in which every face of a nondegenerate simplex is again
//! nondegenerate are represented (nerves of posets and their subdivisions),
//! so a simplex is recorded by its vertex sequence together with its faces.

use std::collections::HashMap;

use crate::flags::{interval_chains, set_key};
use crate::ScatError;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    pub vertex_labels: Vec<String>,
    /// `simplices[k][s]`: vertex sequence of the `s`-th nondegenerate `k`-simplex.
    pub simplices: Vec<Vec<Vec<usize>>>,
    /// `faces[k][s][i]`: index of `d_i` in `simplices[k − 1]`; empty for `k = 0`.
    pub faces: Vec<Vec<Vec<usize>>>,
}

impl FiniteSimplicialSet {
    /// Faces read off the vertex sequences; errors when some face is not listed.
    pub fn from_vertex_sequences(vertex_labels: Vec<String>, simplices: Vec<Vec<Vec<usize>>>) -> Result<Self, ScatError> {
        let mut faces = Vec::new();
        for (k, level) in simplices.iter().enumerate() {
            if k == 0 {
                faces.push(vec![Vec::new(); level.len()]);
                continue;
            }
            let lookup: HashMap<&[usize], usize> =
                simplices[k - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
            let mut row = Vec::new();
            for s in level {
                let mut fs = Vec::new();
                for i in 0..=k {
                    let f = without(s, i);
                    let idx = lookup
                        .get(f.as_slice())
                        .ok_or_else(|| ScatError::MissingFace(format!("{s:?} face {i}")))?;
                    fs.push(*idx);
                }
                row.push(fs);
            }
            faces.push(row);
        }
        Ok(FiniteSimplicialSet { vertex_labels, simplices, faces })
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_labels.is_empty()
    }

    /// Top dimension with a simplex, `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().rposition(|l| !l.is_empty())
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn face(&self, k: usize, s: usize, i: usize) -> usize {
        self.faces[k][s][i]
    }

    /// Violations of `d_i d_j = d_{j−1} d_i` (`i < j`), of the vertex
    /// sequences of faces, and of the vertex-0 convention.
    pub fn identity_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (k, level) in self.simplices.iter().enumerate() {
            for (s, verts) in level.iter().enumerate() {
                if verts.len() != k + 1 || verts.iter().any(|&v| v >= self.vertex_labels.len()) {
                    out.push(format!("simplex {k}/{s} has vertices {verts:?}"));
                    continue;
                }
                if k == 0 {
                    if verts[0] != s {
                        out.push(format!("vertex {s} listed as {}", verts[0]));
                    }
                    continue;
                }
                let fs = &self.faces[k][s];
                if fs.len() != k + 1 || fs.iter().any(|&f| f >= self.count(k - 1)) {
                    out.push(format!("simplex {k}/{s} has faces {fs:?}"));
                    continue;
                }
                for (i, &f) in fs.iter().enumerate() {
                    if self.simplices[k - 1][f] != without(verts, i) {
                        out.push(format!("d_{i} of {k}/{s} has the wrong vertices"));
                    }
                }
                if k < 2 {
                    continue;
                }
                for j in 1..=k {
                    for i in 0..j {
                        if self.face(k - 1, fs[j], i) != self.face(k - 1, fs[i], j - 1) {
                            out.push(format!("d_{i} d_{j} ≠ d_{} d_{i} on {k}/{s}", j - 1));
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether `vertex_map` (vertices of `self` to vertices of `other`) is a
    /// bijection inducing bijections on nondegenerate simplices that commute
    /// with every face map.
    pub fn isomorphic_via(&self, other: &FiniteSimplicialSet, vertex_map: &[usize]) -> bool {
        let nv = self.vertex_labels.len();
        if vertex_map.len() != nv || other.vertex_labels.len() != nv {
            return false;
        }
        let mut seen = vec![false; nv];
        for &v in vertex_map {
            if v >= nv || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let top = self.simplices.len().max(other.simplices.len());
        let mut images: Vec<Vec<usize>> = Vec::new();
        for k in 0..top {
            if self.count(k) != other.count(k) {
                return false;
            }
            let lookup: HashMap<&[usize], usize> =
                other.simplices.get(k).into_iter().flatten().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
            let mut level = Vec::new();
            let mut hit = vec![false; self.count(k)];
            for verts in self.simplices.get(k).into_iter().flatten() {
                let mapped: Vec<usize> = verts.iter().map(|&v| vertex_map[v]).collect();
                let Some(&t) = lookup.get(mapped.as_slice()) else {
                    return false;
                };
                if std::mem::replace(&mut hit[t], true) {
                    return false;
                }
                level.push(t);
            }
            images.push(level);
        }
        for k in 1..top {
            for s in 0..self.count(k) {
                for i in 0..=k {
                    if images[k - 1][self.face(k, s, i)] != other.face(k, images[k][s], i) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub(crate) fn without<T: Clone>(s: &[T], i: usize) -> Vec<T> {
    s.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, x)| x.clone()).collect()
}

/// The nerve of the inclusion poset of subsets of `{i,…,j}` containing both
/// `i` and `j`: the mapping space `Map(i, j)` of `C[Δⁿ]`. Empty when `i > j`.
/// Vertices are the subsets, listed by size and then lexicographically.
pub fn poset_interval(i: usize, j: usize, n: usize) -> Result<FiniteSimplicialSet, ScatError> {
    if j > n {
        return Err(ScatError::FlagRange(format!("interval {i}..{j} in [{n}]")));
    }
    if i > j {
        return Ok(FiniteSimplicialSet::default());
    }
    let chains = interval_chains(i, j);
    let vertices: Vec<Vec<usize>> = chains.iter().filter(|c| c.len() == 1).map(|c| c[0].clone()).collect();
    let index: HashMap<&Vec<usize>, usize> = vertices.iter().enumerate().map(|(t, v)| (v, t)).collect();
    let top = chains.iter().map(Vec::len).max().unwrap_or(0);
    let mut simplices = vec![Vec::new(); top];
    for c in &chains {
        simplices[c.len() - 1].push(c.iter().map(|s| index[s]).collect());
    }
    let labels = vertices.iter().map(|v| set_key(v)).collect();
    FiniteSimplicialSet::from_vertex_sequences(labels, simplices)
}
