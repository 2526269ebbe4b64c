//! Simplices of the big dg-nerve: simplicial functors `C[Δⁿ] → D_Δ`.
//!
//! A simplex stores one element `g_F ∈ Map(x_i, x_j)_l` per strict flag `F`
//! of level `l` in every `Map(i, j)` with `i < j`. Values on flags with a
//! repeated subset are the corresponding degeneracies, and `Map(i, i)` is
//! sent to the unit. Explicit entries on flags with repeats are allowed in a
//! document and are then checked against those degeneracies.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use dgn_ainfty::AInfinity;
use dgn_core::{random, Field, Matrix, Scalar, Vector};
use dgn_doldkan::{mapping_space, MappingSpace, Pairing, SimplicialVS};
use dgn_nerve::random_closed;
use rand::Rng;

use crate::flags::{flag_key, interval, interval_chains, is_indecomposable, is_strict, level, split, strip, Flag};
use crate::ScatError;

/// Default bound on the dimension of validated big simplices.
pub const DEFAULT_BIG_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct BigNerveSimplex {
    pub n: usize,
    pub objects: Vec<usize>,
    pub data: BTreeMap<Flag, Vector>,
}

impl BigNerveSimplex {
    pub fn get(&self, f: &[Vec<usize>]) -> Result<&Vector, ScatError> {
        self.data.get(f).ok_or_else(|| ScatError::MissingFlag(flag_key(f)))
    }
}

/// Every strict flag of every `Map(i, j)`, `0 ≤ i < j ≤ n`, grouped by `(i, j)`.
pub fn required_flags(n: usize) -> Vec<Flag> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            out.extend(interval_chains(i, j));
        }
    }
    out
}

/// `Map(x, y)` for the object pairs of one simplex, each with at least the
/// requested number of levels.
pub struct MapCache {
    pub level_cap: usize,
    spaces: BTreeMap<(usize, usize), MappingSpace>,
}

impl MapCache {
    pub fn new(c: &dyn AInfinity, objects: &[usize], level_cap: usize) -> Result<Self, ScatError> {
        if !c.is_dg() {
            return Err(ScatError::NotDg);
        }
        let mut spaces = BTreeMap::new();
        for (a, &x) in objects.iter().enumerate() {
            if x >= c.num_objects() {
                return Err(ScatError::Object(x));
            }
            for &y in &objects[a..] {
                if spaces.contains_key(&(x, y)) {
                    continue;
                }
                // the DK window must reach the lowest degree of the hom
                let lowest = c.hom(x, y).profile().keys().next().copied().unwrap_or(0);
                let cap = level_cap.max((-lowest).max(0) as usize);
                spaces.insert((x, y), mapping_space(c, x, y, cap)?);
            }
        }
        Ok(MapCache { level_cap, spaces })
    }

    /// Every ordered pair of objects, for simplices drawn from the whole
    /// category against one cache.
    pub fn for_all_pairs(c: &dyn AInfinity, level_cap: usize) -> Result<Self, ScatError> {
        let all: Vec<usize> = (0..c.num_objects()).collect();
        let twice: Vec<usize> = all.iter().chain(&all).copied().collect();
        Self::new(c, &twice, level_cap)
    }

    /// Panics if the pair was not cached; pairs `(x, y)` are cached when `x`
    /// precedes or equals `y` in the object list.
    pub fn get(&self, x: usize, y: usize) -> &MappingSpace {
        self.spaces.get(&(x, y)).unwrap_or_else(|| panic!("Map({x}, {y}) is not in this cache"))
    }
}

/// Compositions of mapping spaces from one [`MapCache`], with the pairing
/// of each object triple built once at the highest level requested so far.
pub struct Composer<'a> {
    pub c: &'a dyn AInfinity,
    pub cache: &'a MapCache,
    pairings: HashMap<(usize, usize, usize), (usize, Pairing<'a>)>,
}

impl<'a> Composer<'a> {
    pub fn new(c: &'a dyn AInfinity, cache: &'a MapCache) -> Self {
        Composer { c, cache, pairings: HashMap::new() }
    }

    /// `b ∘ a` in `Map(x, z)_l` for `b ∈ Map(x, y)_l`, `a ∈ Map(y, z)_l`.
    pub fn compose(&mut self, objs: [usize; 3], l: usize, b: &[Scalar], a: &[Scalar]) -> Result<Vector, ScatError> {
        let [x, y, z] = objs;
        let stale = self.pairings.get(&(x, y, z)).is_none_or(|(cap, _)| *cap < l);
        if stale {
            let (c, cache) = (self.c, self.cache);
            let pairing = Pairing::new(c, cache.get(x, y), cache.get(y, z), cache.get(x, z), l)?;
            self.pairings.insert((x, y, z), (l, pairing));
        }
        Ok(self.pairings[&(x, y, z)].1.compose(l, b, a)?)
    }
}

/// `g_F` for any flag `F` of a `Map(i, j)` with `i ≤ j`, repeats allowed.
pub fn flag_value(c: &dyn AInfinity, cache: &MapCache, s: &BigNerveSimplex, f: &[Vec<usize>]) -> Result<Vector, ScatError> {
    let (i, j) = interval(f).filter(|&(_, j)| j <= s.n).ok_or_else(|| ScatError::FlagRange(flag_key(f)))?;
    let l = level(f);
    let (x, y) = (s.objects[i], s.objects[j]);
    if i == j {
        return Ok(cache.get(x, x).unit_simplex(c, l)?);
    }
    let (strict, theta) = strip(f);
    let g = s.get(&strict)?;
    if strict.len() == f.len() {
        return Ok(g.clone());
    }
    let op = cache.get(x, y).space().operator(&theta, level(&strict))?;
    Ok(op.mul_vec(g)?)
}

/// A relation of the big nerve, named by the flag it is read at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `d_index(g_F) = g_{F∖I_index}`
    Face { flag: String, index: usize },
    /// an explicit entry on a flag with repeats equals the degeneracy of the strict flag
    Degeneracy { flag: String },
    /// `g_F = g_{F∩[i,k]} ∘ g_{F∩[k,j]}`
    Composition { flag: String, through: usize },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Face { flag, index } => write!(f, "face d_{index} at {flag}"),
            Relation::Degeneracy { flag } => write!(f, "degeneracy at {flag}"),
            Relation::Composition { flag, through } => write!(f, "composition through {through} at {flag}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigSimplexReport {
    pub faces_checked: usize,
    pub degeneracies_checked: usize,
    pub compositions_checked: usize,
    pub defects: Vec<Relation>,
}

impl BigSimplexReport {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }
}

fn check_shape(cache: &MapCache, s: &BigNerveSimplex) -> Result<(), ScatError> {
    for (f, v) in &s.data {
        let Some((i, j)) = interval(f).filter(|&(i, j)| i < j && j <= s.n) else {
            return Err(ScatError::FlagRange(flag_key(f)));
        };
        let l = level(f);
        if l > cache.level_cap {
            return Err(ScatError::LevelCap { level: l, cap: cache.level_cap });
        }
        let dim = cache.get(s.objects[i], s.objects[j]).space().dim(l);
        if v.len() != dim {
            return Err(ScatError::Length { flag: flag_key(f), expected: dim, got: v.len() });
        }
    }
    for f in required_flags(s.n) {
        s.get(&f)?;
    }
    Ok(())
}

pub fn validate_big_simplex(c: &dyn AInfinity, s: &BigNerveSimplex) -> Result<BigSimplexReport, ScatError> {
    validate_big_simplex_with(c, s, DEFAULT_BIG_CAP)
}

/// Checks every face relation on strict flags, every explicit entry on a
/// flag with repeats, and every composition `g_F = g_{F∩[i,k]} ∘ g_{F∩[k,j]}`
/// for `k` interior to the first subset of `F`.
pub fn validate_big_simplex_with(c: &dyn AInfinity, s: &BigNerveSimplex, cap: usize) -> Result<BigSimplexReport, ScatError> {
    if s.n > cap {
        return Err(ScatError::LevelCap { level: s.n, cap });
    }
    if s.objects.len() != s.n + 1 {
        return Err(ScatError::FlagRange(format!("{} objects for dimension {}", s.objects.len(), s.n)));
    }
    let cache = MapCache::new(c, &s.objects, s.n.max(1))?;
    validate_big_simplex_in(&mut Composer::new(c, &cache), s)
}

/// [`validate_big_simplex_with`] reusing the mapping spaces and pairings of
/// `composer`, whose cache must cover the objects of `s`.
pub fn validate_big_simplex_in(composer: &mut Composer<'_>, s: &BigNerveSimplex) -> Result<BigSimplexReport, ScatError> {
    let (c, cache) = (composer.c, composer.cache);
    check_shape(cache, s)?;
    let mut report = BigSimplexReport::default();
    for (f, g) in &s.data {
        let (i, j) = interval(f).expect("shape checked");
        let space = cache.get(s.objects[i], s.objects[j]).space();
        let l = level(f);
        if !is_strict(f) {
            report.degeneracies_checked += 1;
            if flag_value(c, cache, s, f)? != *g {
                report.defects.push(Relation::Degeneracy { flag: flag_key(f) });
            }
            continue;
        }
        for t in (0..=l).filter(|_| l > 0) {
            report.faces_checked += 1;
            let face: Flag = crate::sset::without(f, t);
            if space.face(l, t).mul_vec(g)? != *s.get(&face)? {
                report.defects.push(Relation::Face { flag: flag_key(f), index: t });
            }
        }
    }
    for f in required_flags(s.n) {
        let (i, j) = interval(&f).expect("generated");
        for &k in &f[0][1..f[0].len() - 1] {
            report.compositions_checked += 1;
            let (lower, upper) = split(&f, k);
            let b = flag_value(c, cache, s, &lower)?;
            let a = flag_value(c, cache, s, &upper)?;
            let composite = composer.compose([s.objects[i], s.objects[k], s.objects[j]], level(&f), &b, &a)?;
            if composite != *s.get(&f)? {
                report.defects.push(Relation::Composition { flag: flag_key(&f), through: k });
            }
        }
    }
    Ok(report)
}

/// A level-`l` element with the prescribed faces plus a random element of
/// the joint kernel, `None` when the faces admit no filler.
fn fill(space: &SimplicialVS, l: usize, faces: &[(usize, Vector)], rng: &mut impl Rng) -> Result<Option<Vector>, ScatError> {
    let mut stacked = Matrix::zeros(0, space.dim(l));
    let mut rhs = Vec::new();
    for (t, y) in faces {
        stacked = stacked.vstack(space.face(l, *t))?;
        rhs.extend(y.iter().cloned());
    }
    let Some(mut x) = stacked.solve(&rhs) else {
        return Ok(None);
    };
    let noise = random::combination(Field::Rational, &stacked.kernel(), rng);
    dgn_core::vector::axpy(&mut x, &Scalar::one(), &noise);
    Ok(Some(x))
}

/// A random valid `n`-simplex on the given objects.
///
/// Intervals are filled by increasing length. Flags through an interior point
/// are composites; the generators `{i,j} ⊂ …` are random fillers of their
/// already determined faces, and `g_{{i,j}}` for `j > i+1` is the far end of
/// a random path from the composite `g_{{i,…,j}}`. Fillers exist whenever
/// `H^k Hom(x_i, x_j) = 0` for `k < 0`; otherwise the construction may stop
/// with [`ScatError::Obstructed`].
pub fn random_big_simplex(c: &dyn AInfinity, objects: Vec<usize>, rng: &mut impl Rng) -> Result<BigNerveSimplex, ScatError> {
    let n = objects.len().checked_sub(1).ok_or_else(|| ScatError::FlagRange("no objects".into()))?;
    let cache = MapCache::new(c, &objects, n.max(1))?;
    random_big_simplex_in(&mut Composer::new(c, &cache), objects, rng)
}

/// [`random_big_simplex`] reusing the mapping spaces and pairings of `composer`.
pub fn random_big_simplex_in(
    composer: &mut Composer<'_>,
    objects: Vec<usize>,
    rng: &mut impl Rng,
) -> Result<BigNerveSimplex, ScatError> {
    let (c, cache) = (composer.c, composer.cache);
    let n = objects.len().checked_sub(1).ok_or_else(|| ScatError::FlagRange("no objects".into()))?;
    let mut s = BigNerveSimplex { n, objects, data: BTreeMap::new() };
    for span in 1..=n {
        for i in 0..=n - span {
            let j = i + span;
            let (x, y) = (s.objects[i], s.objects[j]);
            let space = cache.get(x, y).space();
            let chains = interval_chains(i, j);
            for f in chains.iter().filter(|f| !is_indecomposable(f)) {
                let k = f[0][1];
                let (lower, upper) = split(f, k);
                let b = flag_value(c, cache, &s, &lower)?;
                let a = flag_value(c, cache, &s, &upper)?;
                let v = composer.compose([x, s.objects[k], y], level(f), &b, &a)?;
                s.data.insert(f.clone(), v);
            }
            for f in chains.iter().filter(|f| is_indecomposable(f)) {
                let l = level(f);
                let v = if l == 0 && span == 1 {
                    let h = random_closed(c, x, y, rng);
                    cache.get(x, y).from_hom(0, &h).ok_or(ScatError::Obstructed(flag_key(f)))?
                } else if l == 0 {
                    let composite = s.get(&[(i..=j).collect()])?.clone();
                    let path = fill(space, 1, &[(0, composite)], rng)?.ok_or(ScatError::Obstructed(flag_key(f)))?;
                    space.face(1, 1).mul_vec(&path)?
                } else {
                    let faces = (0..=l)
                        .map(|t| Ok((t, s.get(&crate::sset::without(f, t))?.clone())))
                        .collect::<Result<Vec<_>, ScatError>>()?;
                    fill(space, l, &faces, rng)?.ok_or(ScatError::Obstructed(flag_key(f)))?
                };
                s.data.insert(f.clone(), v);
            }
        }
    }
    Ok(s)
}

/// `d_t`: restriction along `C[δ_t]`, which skips `t` in every subset.
pub fn big_face(s: &BigNerveSimplex, t: usize) -> Result<BigNerveSimplex, ScatError> {
    if s.n == 0 || t > s.n {
        return Err(ScatError::FlagRange(format!("face {t} of a {}-simplex", s.n)));
    }
    let up = |x: usize| if x < t { x } else { x + 1 };
    let mut objects = s.objects.clone();
    objects.remove(t);
    let mut data = BTreeMap::new();
    for f in required_flags(s.n - 1) {
        let image: Flag = f.iter().map(|set| set.iter().map(|&x| up(x)).collect()).collect();
        data.insert(f, s.get(&image)?.clone());
    }
    Ok(BigNerveSimplex { n: s.n - 1, objects, data })
}

/// `s_t`: restriction along `C[σ_t]`, which merges `t` and `t + 1`.
pub fn big_degeneracy(c: &dyn AInfinity, s: &BigNerveSimplex, t: usize) -> Result<BigNerveSimplex, ScatError> {
    if t > s.n {
        return Err(ScatError::FlagRange(format!("degeneracy {t} of a {}-simplex", s.n)));
    }
    let down = |x: usize| if x <= t { x } else { x - 1 };
    let cache = MapCache::new(c, &s.objects, s.n + 1)?;
    let mut objects = s.objects.clone();
    objects.insert(t, s.objects[t]);
    let mut data = BTreeMap::new();
    for f in required_flags(s.n + 1) {
        let image: Flag = f
            .iter()
            .map(|set| {
                let mut v: Vec<usize> = set.iter().map(|&x| down(x)).collect();
                v.dedup();
                v
            })
            .collect();
        data.insert(f, flag_value(c, &cache, s, &image)?);
    }
    Ok(BigNerveSimplex { n: s.n + 1, objects, data })
}

/// The simplex with every `g_F` the degeneracy of the composite of the given
/// closed degree-0 maps `f_{i,i+1}` (hom vectors); valid for strictly
/// commuting data.
pub fn constant_big_simplex(
    c: &dyn AInfinity,
    objects: Vec<usize>,
    maps: &[Vector],
) -> Result<BigNerveSimplex, ScatError> {
    let n = objects.len() - 1;
    let cache = MapCache::new(c, &objects, n.max(1))?;
    let mut data = BTreeMap::new();
    for f in required_flags(n) {
        let (i, j) = interval(&f).expect("generated");
        let mut h = maps[i].clone();
        for p in i + 1..j {
            h = c.m(&[objects[i], objects[p], objects[p + 1]], &[&maps[p], &h]);
        }
        let space = cache.get(objects[i], objects[j]);
        let a = space.from_hom(0, &h).ok_or_else(|| ScatError::Obstructed(flag_key(&f)))?;
        let l = level(&f);
        data.insert(f, space.dk.embed(l, &vec![0; l + 1], &a));
    }
    Ok(BigNerveSimplex { n, objects, data })
}
