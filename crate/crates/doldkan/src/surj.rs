//! Order-preserving maps between ordinals, as value sequences.

use std::collections::BTreeMap;

/// An order-preserving surjection `[n] ↠ [p]`, stored as `(η(0), …, η(n))`.
pub type Surjection = Vec<usize>;

/// All surjections `[n] ↠ [p]`, lexicographic on the value sequence.
pub fn surjections(n: usize, p: usize) -> Vec<Surjection> {
    fn walk(n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Surjection>) {
        if cur.len() == n + 1 {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().expect("starts at 0");
        let left = n + 1 - cur.len();
        // staying put first keeps the output lexicographic
        if p - last < left {
            cur.push(last);
            walk(n, p, cur, out);
            cur.pop();
        }
        if last < p {
            cur.push(last + 1);
            walk(n, p, cur, out);
            cur.pop();
        }
    }
    if p > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    walk(n, p, &mut vec![0], &mut out);
    out
}

/// All surjections out of `[n]`, lexicographic on the value sequence. This
/// is the basis order of `DK(A)_n`.
pub fn all_surjections(n: usize) -> Vec<Surjection> {
    let mut all: Vec<Surjection> = (0..=n).flat_map(|p| surjections(n, p)).collect();
    all.sort();
    all
}

/// Surjections `[n] ↠ [p]` for `p ≤ n ≤ cap`, each with its serialization.
#[derive(Clone, Debug)]
pub struct SurjTable {
    pub cap: usize,
    pub table: BTreeMap<(usize, usize), Vec<Surjection>>,
}

impl SurjTable {
    pub fn new(cap: usize) -> Self {
        let mut table = BTreeMap::new();
        for n in 0..=cap {
            for p in 0..=n {
                table.insert((n, p), surjections(n, p));
            }
        }
        SurjTable { cap, table }
    }

    pub fn get(&self, n: usize, p: usize) -> &[Surjection] {
        self.table.get(&(n, p)).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, n: usize, p: usize) -> usize {
        self.get(n, p).len()
    }
}

/// `"0.0.1"` for the surjection `[2] ↠ [1]` with values `0, 0, 1`.
pub fn key(theta: &[usize]) -> String {
    theta.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
}

pub fn parse_key(s: &str) -> Option<Vec<usize>> {
    s.split('.').map(|t| t.parse().ok()).collect()
}

pub fn is_monotone(theta: &[usize]) -> bool {
    theta.windows(2).all(|w| w[0] <= w[1])
}

pub fn is_identity(theta: &[usize]) -> bool {
    theta.iter().enumerate().all(|(i, &v)| i == v)
}

/// `δ_i : [n−1] → [n]`, skipping `i`.
pub fn coface(i: usize, n: usize) -> Vec<usize> {
    (0..n).map(|k| if k < i { k } else { k + 1 }).collect()
}

/// `σ_i : [n+1] → [n]`, hitting `i` twice.
pub fn codegeneracy(i: usize, n: usize) -> Vec<usize> {
    (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect()
}

/// `a ∘ b`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// `θ = ρ ∘ ε` with `ε` surjective onto `[q]` and `ρ` injective; `ρ` is
/// returned as the sorted image of `θ`.
pub fn epi_mono(theta: &[usize]) -> (Surjection, Vec<usize>) {
    let mut image: Vec<usize> = theta.to_vec();
    image.dedup();
    let eps = theta.iter().map(|v| image.iter().position(|w| w == v).expect("in image")).collect();
    (eps, image)
}
