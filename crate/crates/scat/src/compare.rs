//! The comparison `N^{big}_{dg}(D) → N^{sm}_{dg}(D)`.
//!
//! `f_{i₀i₁} = g_{{i₀,i₁}}` and, for `k ≥ 2`,
//! `f_{i₀…i_k} = (−1)^{k−1} Σ_{σ ∈ Σ_{k−1}} sgn(σ) π_{k−1}(g_σ)` where `g_σ`
//! is the value on the chain `{i₀,i_k} ⊂ {i₀,i_{σ(1)},i_k} ⊂ …` and `π_l`
//! reads the top Dold-Kan component of `Map_l` as an element of `Hom^{−l}`.

use dgn_ainfty::AInfinity;
use dgn_core::{vector, Scalar};
use dgn_nerve::{degeneracy, face, strings, validate_simplex, NerveSimplex};

use crate::big::{big_degeneracy, big_face, validate_big_simplex_with, BigNerveSimplex, MapCache};
use crate::cube::{inversions, sigma_chain};
use crate::ScatError;

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
    out
}

/// The small simplex of a big one, without validating the input.
pub fn big_to_small_unchecked(c: &dyn AInfinity, s: &BigNerveSimplex) -> Result<NerveSimplex, ScatError> {
    let cache = MapCache::new(c, &s.objects, s.n.max(1))?;
    let mut out = NerveSimplex::zero(c, s.objects.clone());
    for string in strings(s.n) {
        let k = string.len() - 1;
        let space = cache.get(s.objects[string[0]], s.objects[string[k]]);
        let mut f = vector::zeros(c.hom(s.objects[string[0]], s.objects[string[k]]).dim());
        for sigma in permutations(k - 1) {
            let g = s.get(&sigma_chain(&string, &sigma))?;
            let top = space.dk.top(k - 1, g);
            vector::axpy(&mut f, &Scalar::sign(inversions(&sigma)), &space.to_hom(k - 1, &top));
        }
        out.set(&string, vector::scale(&Scalar::sign(k as i64 - 1), &f));
    }
    Ok(out)
}

/// Errors with [`ScatError::Invalid`] when `s` fails validation.
pub fn big_to_small(c: &dyn AInfinity, s: &BigNerveSimplex) -> Result<NerveSimplex, ScatError> {
    let report = validate_big_simplex_with(c, s, s.n)?;
    if let Some(first) = report.defects.first() {
        return Err(ScatError::Invalid(first.to_string()));
    }
    big_to_small_unchecked(c, s)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NaturalityReport {
    /// the image passes the small-nerve validator
    pub image_valid: bool,
    pub faces_checked: usize,
    pub degeneracies_checked: usize,
    /// `"d_j"` or `"s_j"` for each operator that fails to commute
    pub failures: Vec<String>,
}

impl NaturalityReport {
    pub fn passed(&self) -> bool {
        self.image_valid && self.failures.is_empty()
    }
}

/// Compares both paths around the square for every `d_j` and `s_j`. The
/// input is assumed valid; see [`big_to_small`] for the checked map.
pub fn comparison_naturality_check(c: &dyn AInfinity, s: &BigNerveSimplex) -> Result<NaturalityReport, ScatError> {
    let small = big_to_small_unchecked(c, s)?;
    let mut report = NaturalityReport { image_valid: validate_simplex(c, &small)?.passed(), ..Default::default() };
    if s.n > 0 {
        for j in 0..=s.n {
            report.faces_checked += 1;
            if big_to_small_unchecked(c, &big_face(s, j)?)? != face(c, &small, j)? {
                report.failures.push(format!("d_{j}"));
            }
        }
    }
    for j in 0..=s.n {
        report.degeneracies_checked += 1;
        if big_to_small_unchecked(c, &big_degeneracy(c, s, j)?)? != degeneracy(c, &small, j)? {
            report.failures.push(format!("s_{j}"));
        }
    }
    Ok(report)
}
