//! Flags `I₀ ⊂ I₁ ⊂ … ⊂ I_l` of subsets of `{i,…,j}` containing both ends:
//! the `l`-simplices of `Map(i, j)` in `C[Δⁿ]`.
//!
//! Subsets are sorted vectors and flags are serialized as `"I0|I1|…"` with
//! the elements of each subset joined by `.`, e.g. `"0.3|0.1.3"`.

/// A chain of subsets, each sorted increasingly.
pub type Flag = Vec<Vec<usize>>;

pub fn set_key(s: &[usize]) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
}

pub fn flag_key(f: &[Vec<usize>]) -> String {
    f.iter().map(|s| set_key(s)).collect::<Vec<_>>().join("|")
}

pub fn parse_flag_key(key: &str) -> Option<Flag> {
    key.split('|').map(|s| s.split('.').map(|t| t.trim().parse().ok()).collect()).collect()
}

/// The level `l` of a flag with `l + 1` subsets.
pub fn level(f: &[Vec<usize>]) -> usize {
    f.len() - 1
}

/// `(i, j)` when every subset is strictly increasing with minimum `i` and
/// maximum `j`, and consecutive subsets are weakly included.
pub fn interval(f: &[Vec<usize>]) -> Option<(usize, usize)> {
    let first = f.first()?;
    let (i, j) = (*first.first()?, *first.last()?);
    for s in f {
        if s.first() != Some(&i) || s.last() != Some(&j) || s.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
    }
    if f.windows(2).all(|w| w[0].iter().all(|x| w[1].contains(x))) {
        Some((i, j))
    } else {
        None
    }
}

/// Whether no subset repeats.
pub fn is_strict(f: &[Vec<usize>]) -> bool {
    f.windows(2).all(|w| w[0] != w[1])
}

/// The strict flag with repeats removed and the monotone surjection
/// `θ : [l] → [l′]` (as a value sequence) with `f = θ*(strict)`.
pub fn strip(f: &[Vec<usize>]) -> (Flag, Vec<usize>) {
    let mut strict: Flag = Vec::new();
    let mut theta = Vec::new();
    for s in f {
        if strict.last() != Some(s) {
            strict.push(s.clone());
        }
        theta.push(strict.len() - 1);
    }
    (strict, theta)
}

/// The subsets of `{i,…,j}` containing both ends, by size and then
/// lexicographically.
pub fn interval_sets(i: usize, j: usize) -> Vec<Vec<usize>> {
    if i > j {
        return Vec::new();
    }
    if i == j {
        return vec![vec![i]];
    }
    let inner: Vec<usize> = (i + 1..j).collect();
    let mut out: Vec<Vec<usize>> = (0u32..1 << inner.len())
        .map(|mask| {
            let mut s = vec![i];
            s.extend(inner.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x));
            s.push(j);
            s
        })
        .collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// All strict flags in `Map(i, j)`, by length and then lexicographically in
/// the order of [`interval_sets`].
pub fn interval_chains(i: usize, j: usize) -> Vec<Flag> {
    let sets = interval_sets(i, j);
    let sub = |a: &Vec<usize>, b: &Vec<usize>| a.len() < b.len() && a.iter().all(|x| b.contains(x));
    let mut by_len: Vec<Vec<Vec<usize>>> = vec![(0..sets.len()).map(|t| vec![t]).collect()];
    loop {
        let mut next = Vec::new();
        for c in by_len.last().expect("nonempty") {
            let last = *c.last().expect("nonempty chain");
            for t in last + 1..sets.len() {
                if sub(&sets[last], &sets[t]) {
                    let mut c = c.clone();
                    c.push(t);
                    next.push(c);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        by_len.push(next);
    }
    by_len.into_iter().flatten().map(|c| c.into_iter().map(|t| sets[t].clone()).collect()).collect()
}

/// Whether `f` is a generator of `C[Δⁿ]`, i.e. not a union of flags through
/// an interior point: its first subset is `{i, j}`.
pub fn is_indecomposable(f: &[Vec<usize>]) -> bool {
    f[0].len() <= 2
}

/// The halves `f ∩ {i,…,k}` and `f ∩ {k,…,j}` of a flag through `k`.
pub fn split(f: &[Vec<usize>], k: usize) -> (Flag, Flag) {
    let lower = f.iter().map(|s| s.iter().copied().filter(|&x| x <= k).collect()).collect();
    let upper = f.iter().map(|s| s.iter().copied().filter(|&x| x >= k).collect()).collect();
    (lower, upper)
}
