//! The cosimplicial dg-category `A∞[Δ⁻]`.

use std::collections::BTreeMap;

use dgn_ainfty::{AInfCategory, AInfFunctor};
use dgn_core::{GradedSpace, Scalar};

use crate::NerveError;

/// `A∞[Δⁿ]`: objects `0…n`, `Hom(i, j) = 𝕂·(i,j)` in degree 0 for `i ≤ j`,
/// `m₂((jk),(ij)) = (ik)` and nothing else.
pub fn standard_simplex_category(n: usize) -> AInfCategory {
    let mut homs = BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            homs.insert((i, j), GradedSpace::new(vec![(format!("({i},{j})"), 0)]).expect("single label"));
        }
    }
    let mut c = AInfCategory::new((0..=n).map(|i| i.to_string()).collect(), homs, 2);
    for i in 0..=n {
        c.set_unit(i, vec![Scalar::one()]).expect("unit has degree 0");
        for j in i..=n {
            for k in j..=n {
                c.set_m(&[i, j, k], &[0, 0], vec![Scalar::one()]).expect("degree 0");
            }
        }
    }
    c
}

/// `δ_j: [n−1] → [n]`, skipping `j`.
pub fn delta(j: usize, k: usize) -> usize {
    if k < j {
        k
    } else {
        k + 1
    }
}

/// `σ_j: [n] → [n−1]`, hitting `j` twice.
pub fn sigma(j: usize, k: usize) -> usize {
    if k <= j {
        k
    } else {
        k - 1
    }
}

fn functor_from_map(map: &dyn Fn(usize) -> usize, src_n: usize, tgt: &AInfCategory) -> AInfFunctor {
    let object_map: Vec<usize> = (0..=src_n).map(map).collect();
    let mut f = AInfFunctor::new(object_map.clone(), tgt, 1);
    for i in 0..=src_n {
        for k in i..=src_n {
            f.set(&[i, k], &[0], vec![Scalar::one()]).expect("arity 1");
        }
    }
    f
}

/// `(δ_j)_*: A∞[Δ^{n−1}] → A∞[Δⁿ]`, `0 ≤ j ≤ n`.
pub fn coface_functor(j: usize, n: usize) -> Result<AInfFunctor, NerveError> {
    if n == 0 || j > n {
        return Err(NerveError::OutOfRange { index: j, n });
    }
    Ok(functor_from_map(&|k| delta(j, k), n - 1, &standard_simplex_category(n)))
}

/// `(σ_j)_*: A∞[Δⁿ] → A∞[Δ^{n−1}]`, `0 ≤ j ≤ n − 1`.
pub fn codegeneracy_functor(j: usize, n: usize) -> Result<AInfFunctor, NerveError> {
    if n == 0 || j >= n {
        return Err(NerveError::OutOfRange { index: j, n });
    }
    Ok(functor_from_map(&|k| sigma(j, k), n, &standard_simplex_category(n - 1)))
}
