//! The structure equation of a nerve simplex, evaluated term by term.
//!
//! For a string `S = i₀ < … < i_k`,
//! `m₁(f_S) = Σ_{0<j<k} (−1)^{j−1} f_{S∖i_j} + Σ_{r≥2} Σ_{0<j₁<…<j_{r−1}<k} (−1)^{1+ε} m_r(f_{i_{j_{r−1}}…i_k}, …, f_{i₀…i_{j₁}})`.
//! The sums run over the string length `k`, not the ambient dimension.

use std::collections::BTreeMap;

use dgn_ainfty::{epsilon, sign, AInfinity};
use dgn_core::{vector, Vector};

use crate::simplex::strings;
use crate::{string_key, NerveError, NerveSimplex};

/// Which formula supplies `ε` in the higher terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsilonReading {
    /// `ε_r` of functor composition applied to the written-order block sizes
    /// `(k − j_{r−1}, …, j₁)`. For `r = 2` this is the sign `(−1)^{1+k(j−1)}`.
    BlockSizes,
    /// `Σ_{2≤a≤r} (1 − j_a + j_{a−1}) j_{a−1}` with `j_r = k`, read literally
    /// from the cut positions. Disagrees with the first reading whenever `k`
    /// is odd and `r` even.
    CutPositions,
}

fn reading_sign(reading: EpsilonReading, k: usize, cuts: &[usize]) -> i64 {
    match reading {
        EpsilonReading::BlockSizes => {
            let mut bounds = vec![0];
            bounds.extend_from_slice(cuts);
            bounds.push(k);
            let sizes: Vec<usize> = bounds.windows(2).rev().map(|w| w[1] - w[0]).collect();
            epsilon(&sizes)
        }
        EpsilonReading::CutPositions => {
            let mut js = cuts.to_vec();
            js.push(k);
            (1..js.len()).map(|a| (1 - js[a] as i64 + js[a - 1] as i64) * js[a - 1] as i64).sum()
        }
    }
}

/// Strictly increasing `r`-subsets of `lo..hi`.
fn cut_sets(lo: usize, hi: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..hi {
        for mut rest in cut_sets(first + 1, hi, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn without(s: &[usize], j: usize) -> Vec<usize> {
    s.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &x)| x).collect()
}

/// Right-hand side of the structure equation at `s_str`, omitting the face
/// term `j = skip` when given.
pub fn structure_rhs(
    c: &dyn AInfinity,
    s: &NerveSimplex,
    s_str: &[usize],
    reading: EpsilonReading,
    skip: Option<usize>,
) -> Result<Vector, NerveError> {
    let k = s_str.len() - 1;
    let (a, b) = s.hom_objects(s_str);
    let mut out = vector::zeros(c.hom(a, b).dim());
    for j in 1..k {
        if Some(j) == skip {
            continue;
        }
        vector::axpy(&mut out, &sign(j as i64 - 1), s.get(&without(s_str, j))?);
    }
    for r in 2..=k.min(c.arity_cap()) {
        for cuts in cut_sets(1, k, r - 1) {
            let mut bounds = vec![0];
            bounds.extend_from_slice(&cuts);
            bounds.push(k);
            let objs: Vec<usize> = bounds.iter().map(|&p| s.objects[s_str[p]]).collect();
            let mut args = Vec::with_capacity(r);
            for w in bounds.windows(2).rev() {
                args.push(s.get(&s_str[w[0]..=w[1]])?.as_slice());
            }
            let v = c.m(&objs, &args);
            vector::axpy(&mut out, &sign(1 + reading_sign(reading, k, &cuts)), &v);
        }
    }
    Ok(out)
}

fn m1(c: &dyn AInfinity, s: &NerveSimplex, s_str: &[usize]) -> Result<Vector, NerveError> {
    let (a, b) = s.hom_objects(s_str);
    Ok(c.m(&[a, b], &[s.get(s_str)?]))
}

/// `m₁(f_S) − RHS` at one string.
pub fn structure_defect(c: &dyn AInfinity, s: &NerveSimplex, s_str: &[usize], reading: EpsilonReading) -> Result<Vector, NerveError> {
    Ok(vector::sub(&m1(c, s, s_str)?, &structure_rhs(c, s, s_str, reading, None)?))
}

/// The small dg-nerve differential identity
/// `d(f_S) = Σ (−1)^{j−1} f_{S∖i_j} + Σ (−1)^{1+k(j−1)} f_{i_j…i_k}·f_{i₀…i_j}`,
/// written out independently of [`structure_rhs`]. Only meaningful over a
/// dg-category.
pub fn dg_defect(c: &dyn AInfinity, s: &NerveSimplex, s_str: &[usize]) -> Result<Vector, NerveError> {
    let k = s_str.len() - 1;
    let mut rhs = vector::zeros(m1(c, s, s_str)?.len());
    for j in 1..k {
        vector::axpy(&mut rhs, &sign(j as i64 - 1), s.get(&without(s_str, j))?);
        let objs = [s.objects[s_str[0]], s.objects[s_str[j]], s.objects[s_str[k]]];
        let prod = c.m(&objs, &[s.get(&s_str[j..])?, s.get(&s_str[..=j])?]);
        vector::axpy(&mut rhs, &sign(1 + (k * (j - 1)) as i64), &prod);
    }
    Ok(vector::sub(&m1(c, s, s_str)?, &rhs))
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SimplexReport {
    pub checked: usize,
    /// nonzero defects keyed by string
    pub defects: BTreeMap<Vec<usize>, Vector>,
}

impl SimplexReport {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }

    pub fn keys(&self) -> Vec<String> {
        self.defects.keys().map(|s| string_key(s)).collect()
    }
}

/// Shape checks: every component present, in the right hom and of degree `1 − k`.
pub fn check_shape(c: &dyn AInfinity, s: &NerveSimplex) -> Result<(), NerveError> {
    if s.objects.len() != s.n + 1 {
        return Err(NerveError::ObjectMismatch(format!("{} objects for dimension {}", s.objects.len(), s.n)));
    }
    if let Some(&x) = s.objects.iter().find(|&&x| x >= c.num_objects()) {
        return Err(NerveError::OutOfRange { index: x, n: c.num_objects() });
    }
    for st in strings(s.n) {
        let v = s.get(&st)?;
        let (a, b) = s.hom_objects(&st);
        let h = c.hom(a, b);
        let expected = 1 - (st.len() as i32 - 1);
        if v.len() != h.dim() {
            return Err(NerveError::Degree { string: string_key(&st), expected, got: None });
        }
        match h.homogeneous_degree(v) {
            Some(d) if d != expected => {
                return Err(NerveError::Degree { string: string_key(&st), expected, got: Some(d) });
            }
            None if !vector::is_zero(v) => {
                return Err(NerveError::Degree { string: string_key(&st), expected, got: None });
            }
            _ => {}
        }
    }
    Ok(())
}

/// Defect of every structure equation; zero everywhere iff `s ∈ N(C)_n`.
pub fn validate_simplex(c: &dyn AInfinity, s: &NerveSimplex) -> Result<SimplexReport, NerveError> {
    validate_simplex_with(c, s, EpsilonReading::BlockSizes)
}

pub fn validate_simplex_with(c: &dyn AInfinity, s: &NerveSimplex, reading: EpsilonReading) -> Result<SimplexReport, NerveError> {
    check_shape(c, s)?;
    let mut report = SimplexReport::default();
    for st in strings(s.n) {
        let d = structure_defect(c, s, &st, reading)?;
        report.checked += 1;
        if !vector::is_zero(&d) {
            report.defects.insert(st, d);
        }
    }
    Ok(report)
}

pub(crate) fn solve_face_value(
    c: &dyn AInfinity,
    s: &NerveSimplex,
    s_str: &[usize],
    j: usize,
    reading: EpsilonReading,
) -> Result<Vector, NerveError> {
    // (−1)^{j−1} f_{S∖i_j} = m₁(f_S) − (RHS without that face)
    let rest = structure_rhs(c, s, s_str, reading, Some(j))?;
    let v = vector::sub(&m1(c, s, s_str)?, &rest);
    Ok(vector::scale(&sign(j as i64 - 1), &v))
}

pub(crate) fn face_string(s_str: &[usize], j: usize) -> Vec<usize> {
    without(s_str, j)
}
