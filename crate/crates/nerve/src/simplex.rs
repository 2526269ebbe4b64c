use std::collections::BTreeMap;

use dgn_ainfty::{AInfFunctor, AInfinity};
use dgn_core::{vector, Vector};

use crate::{string_key, NerveError};

/// Strictly increasing strings in `0..=n` with at least two entries, ordered
/// by length and then lexicographically.
pub fn strings(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 2..=n + 1 {
        let mut cur: Vec<usize> = (0..len).collect();
        loop {
            out.push(cur.clone());
            // next combination
            let mut i = len;
            while i > 0 && cur[i - 1] == n + 1 - len + (i - 1) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            cur[i - 1] += 1;
            for t in i..len {
                cur[t] = cur[t - 1] + 1;
            }
        }
    }
    out
}

/// An `n`-simplex: objects `x₀…x_n` of an ambient category and the components
/// `f_{i₀…i_k}` on strictly increasing strings.
#[derive(Clone, Debug, PartialEq)]
pub struct NerveSimplex {
    pub n: usize,
    pub objects: Vec<usize>,
    pub components: BTreeMap<Vec<usize>, Vector>,
}

impl NerveSimplex {
    /// All components zero.
    pub fn zero(c: &dyn AInfinity, objects: Vec<usize>) -> Self {
        let n = objects.len() - 1;
        let components = strings(n)
            .into_iter()
            .map(|s| {
                let dim = c.hom(objects[s[0]], objects[s[s.len() - 1]]).dim();
                (s, vector::zeros(dim))
            })
            .collect();
        NerveSimplex { n, objects, components }
    }

    pub fn get(&self, s: &[usize]) -> Result<&Vector, NerveError> {
        self.components.get(s).ok_or_else(|| NerveError::MissingComponent(string_key(s)))
    }

    pub fn set(&mut self, s: &[usize], v: Vector) {
        self.components.insert(s.to_vec(), v);
    }

    /// The hom of the ambient category a component on `s` lives in.
    pub fn hom_objects(&self, s: &[usize]) -> (usize, usize) {
        (self.objects[s[0]], self.objects[s[s.len() - 1]])
    }
}

/// The simplex as a functor `A∞[Δⁿ] → C`; repeated indices follow the unit
/// conventions (`f_{ii} = 1`, longer strings with a repeat vanish).
pub fn to_functor(c: &dyn AInfinity, s: &NerveSimplex) -> Result<AInfFunctor, NerveError> {
    let mut f = AInfFunctor::new(s.objects.clone(), c, s.n.max(1));
    for i in 0..=s.n {
        let u = c.unit(s.objects[i]).ok_or(NerveError::NoUnit(s.objects[i]))?;
        f.set(&[i, i], &[0], u)?;
    }
    for (string, v) in &s.components {
        if !vector::is_zero(v) {
            f.set(string, &vec![0; string.len() - 1], v.clone())?;
        }
    }
    Ok(f)
}

/// Reads back the components of a functor out of `A∞[Δⁿ]`.
pub fn from_functor(c: &dyn AInfinity, f: &AInfFunctor, n: usize) -> NerveSimplex {
    let objects: Vec<usize> = f.object_map.clone();
    let mut s = NerveSimplex::zero(c, objects);
    for string in strings(n) {
        if let Some(v) = f.get(&string, &vec![0; string.len() - 1]) {
            s.set(&string, v.clone());
        }
    }
    s
}
