//! The cubical picture of `Map(0, m)` in `C[Δ^m]`: the `(m−1)!` simplices
//! `Δ_σ` of the chains `{0,m} ⊂ {0,σ(1),m} ⊂ … ⊂ {0,…,m}`, glued along their
//! inner faces into a subdivided `(m−1)`-cube.
//!
//! The gluing is computed from the rule `d_i(Δ_σ) ≃ d_i(Δ_{σ∘(i i+1)})` for
//! `1 ≤ i ≤ m−2` alone; the vertex labels by subsets are only used afterwards
//! to compare the quotient with the poset nerve.

use std::collections::BTreeMap;

use crate::flags::Flag;
use crate::sset::{poset_interval, FiniteSimplicialSet};
use crate::ScatError;

/// `d_face(Δ_first) ≃ d_face(Δ_second)`, indices into the permutation list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Identification {
    pub face: usize,
    pub first: usize,
    pub second: usize,
}

/// Which outer face type a boundary facet collects, and the shared value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FacetKind {
    /// faces `d_0(Δ_σ)` with `σ(1) = value`
    First(usize),
    /// faces `d_{m−1}(Δ_σ)` with `σ(m−1) = value`
    Last(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub kind: FacetKind,
    /// permutation indices whose outer face lies in this facet
    pub members: Vec<usize>,
    /// number of distinct vertices of the quotient on the facet
    pub vertices: usize,
}

#[derive(Clone, Debug)]
pub struct CubeDecomposition {
    pub m: usize,
    /// `σ` as the sequence `σ(1), …, σ(m−1)`, lexicographically
    pub permutations: Vec<Vec<usize>>,
    pub chains: Vec<Flag>,
    pub identifications: Vec<Identification>,
    /// the quotient of `∐ Δ_σ` by the identifications
    pub complex: FiniteSimplicialSet,
    /// `(m−2)`-simplices of the quotient lying in exactly one top cell
    pub boundary_faces: usize,
    pub facets: Vec<Facet>,
    /// every class has faces independent of the representative
    pub consistent: bool,
    /// the class of vertex `t` of `Δ_σ`, as `vertex_class[σ][t]`
    pub vertex_class: Vec<Vec<usize>>,
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q: Vec<usize> = p.iter().map(|&x| x + 1).collect();
            q.insert(pos, 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Cycle notation with cycles starting at their least element, `Id` for the identity.
pub fn cycle_notation(sigma: &[usize]) -> String {
    let mut seen = vec![false; sigma.len() + 1];
    let mut out = String::new();
    for start in 1..=sigma.len() {
        if seen[start] || sigma[start - 1] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = sigma[x - 1];
        }
        out.push_str(&format!("({})", cycle.join("")));
    }
    if out.is_empty() {
        "Id".into()
    } else {
        out
    }
}

/// The number of inversions, whose parity is the sign of `σ`.
pub fn inversions(sigma: &[usize]) -> i64 {
    let mut inversions = 0;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                inversions += 1;
            }
        }
    }
    inversions
}

/// `{i₀, i_k} ⊂ {i₀, i_{σ(1)}, i_k} ⊂ … ⊂ {i₀, …, i_k}` for a string `i₀ < … < i_k`.
pub fn sigma_chain(string: &[usize], sigma: &[usize]) -> Flag {
    let (first, last) = (string[0], string[string.len() - 1]);
    let mut out = Vec::new();
    for t in 0..=sigma.len() {
        let mut s: Vec<usize> = sigma[..t].iter().map(|&p| string[p]).collect();
        s.push(first);
        s.push(last);
        s.sort();
        out.push(s);
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn bits(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&b| mask >> b & 1 == 1).collect()
}

pub fn cube_decomposition(m: usize) -> Result<CubeDecomposition, ScatError> {
    if m < 2 {
        return Err(ScatError::CubeOrder(m));
    }
    let perms = permutations(m - 1);
    let string: Vec<usize> = (0..=m).collect();
    let chains = perms.iter().map(|s| sigma_chain(&string, s)).collect();
    let index: BTreeMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(p, s)| (s, p)).collect();
    // element (σ, S) for a nonempty set S of the m vertex positions of Δ_σ
    let width = 1usize << m;
    let id = |p: usize, mask: usize| p * width + mask;
    let mut uf = UnionFind((0..perms.len() * width).collect());
    let mut identifications = Vec::new();
    for (p, s) in perms.iter().enumerate() {
        for i in 1..=m.saturating_sub(2) {
            let mut t = s.clone();
            t.swap(i - 1, i);
            let q = index[&t];
            if p < q {
                identifications.push(Identification { face: i, first: p, second: q });
            }
            let face = (width - 1) & !(1 << i);
            for mask in 1..width {
                if mask & !face == 0 {
                    uf.union(id(p, mask), id(q, mask));
                }
            }
        }
    }
    identifications.sort();

    // classes per dimension, in order of first appearance
    let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut simplices: Vec<Vec<Vec<usize>>> = vec![Vec::new(); m];
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); m];
    let mut consistent = true;
    let mut masks: Vec<usize> = (1..width).collect();
    masks.sort_by_key(|&mask| (mask.count_ones(), mask));
    for &mask in &masks {
        let k = mask.count_ones() as usize - 1;
        let positions = bits(mask);
        for p in 0..perms.len() {
            let root = uf.find(id(p, mask));
            if k == 0 {
                if !class_of.contains_key(&root) {
                    let c = simplices[0].len();
                    class_of.insert(root, c);
                    simplices[0].push(vec![c]);
                    faces[0].push(Vec::new());
                }
                continue;
            }
            let verts: Vec<usize> = positions.iter().map(|&t| class_of[&uf.find(id(p, 1 << t))]).collect();
            let fs: Vec<usize> = positions.iter().map(|&t| class_of[&uf.find(id(p, mask & !(1 << t)))]).collect();
            match class_of.get(&root) {
                Some(&c) => consistent &= simplices[k][c] == verts && faces[k][c] == fs,
                None => {
                    let c = simplices[k].len();
                    class_of.insert(root, c);
                    simplices[k].push(verts);
                    faces[k].push(fs);
                }
            }
        }
    }
    let vertex_class: Vec<Vec<usize>> =
        (0..perms.len()).map(|p| (0..m).map(|t| class_of[&uf.find(id(p, 1 << t))]).collect()).collect();
    let labels = (0..simplices[0].len()).map(|v| format!("v{v}")).collect();
    let complex = FiniteSimplicialSet { vertex_labels: labels, simplices, faces };

    // (m−2)-simplices in exactly one top cell, and the outer facets
    let mut incidence = vec![0usize; complex.count(m - 2)];
    for s in 0..complex.count(m - 1) {
        for &f in &complex.faces[m - 1][s] {
            incidence[f] += 1;
        }
    }
    let boundary_faces = incidence.iter().filter(|&&c| c == 1).count();
    let mut groups: BTreeMap<FacetKind, Vec<usize>> = BTreeMap::new();
    for (p, s) in perms.iter().enumerate() {
        groups.entry(FacetKind::First(s[0])).or_default().push(p);
        groups.entry(FacetKind::Last(s[m - 2])).or_default().push(p);
    }
    let facets = groups
        .into_iter()
        .map(|(kind, members)| {
            let skip = match kind {
                FacetKind::First(_) => 0,
                FacetKind::Last(_) => m - 1,
            };
            let mut vs: Vec<usize> =
                members.iter().flat_map(|&p| (0..m).filter(|&t| t != skip).map(move |t| (p, t))).map(|(p, t)| vertex_class[p][t]).collect();
            vs.sort();
            vs.dedup();
            Facet { kind, members, vertices: vs.len() }
        })
        .collect();
    Ok(CubeDecomposition {
        m,
        permutations: perms,
        chains,
        identifications,
        complex,
        boundary_faces,
        facets,
        consistent,
        vertex_class,
    })
}

impl CubeDecomposition {
    pub fn top_cells(&self) -> usize {
        self.complex.count(self.m - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.complex.count(0)
    }

    /// `"d_1^3(Δ_Id) ≃ d_1^3(Δ_(12))"` per identification.
    pub fn identification_text(&self) -> Vec<String> {
        let k = self.m - 1;
        self.identifications
            .iter()
            .map(|x| {
                format!(
                    "d_{i}^{k}(Δ_{}) ≃ d_{i}^{k}(Δ_{})",
                    cycle_notation(&self.permutations[x.first]),
                    cycle_notation(&self.permutations[x.second]),
                    i = x.face
                )
            })
            .collect()
    }

    /// `"top=6 vertices=8 facets=6"`
    pub fn summary(&self) -> String {
        format!("top={} vertices={} facets={}", self.top_cells(), self.vertex_count(), self.facets.len())
    }

    /// Labels each vertex class by its subset of `{0,…,m}` and tests the
    /// labelled quotient for isomorphism with `poset_interval(0, m, m)`.
    /// `false` also when two representatives of a class carry different subsets.
    pub fn matches_poset_nerve(&self) -> Result<bool, ScatError> {
        let nerve = poset_interval(0, self.m, self.m)?;
        let position: BTreeMap<&String, usize> = nerve.vertex_labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut map: Vec<Option<usize>> = vec![None; self.vertex_count()];
        for (p, chain) in self.chains.iter().enumerate() {
            for (t, set) in chain.iter().enumerate() {
                let target = position[&crate::flags::set_key(set)];
                let slot = &mut map[self.vertex_class[p][t]];
                if slot.is_some_and(|v| v != target) {
                    return Ok(false);
                }
                *slot = Some(target);
            }
        }
        let Some(map) = map.into_iter().collect::<Option<Vec<usize>>>() else {
            return Ok(false);
        };
        Ok(self.consistent && self.complex.isomorphic_via(&nerve, &map))
    }
}
