//! Resolution of a [`WorkspaceDoc`] into live categories, complexes and
//! simplices.

use std::collections::{BTreeMap, BTreeSet};

use dgn_ainfty::{arg_spaces, AInfCategory, AInfinity};
use dgn_core::{random, ChainComplex, Field, GradedSpace, Grading, Matrix, Scalar, Vector};
use dgn_doldkan::SignMode;
use dgn_nerve::{parse_string_key, random_simplex, strings, string_key, NerveSimplex};
use dgn_pretr::{random_chain_category, random_concentrated_category, random_shapes, random_twisted, ChainDgCategory, TwistedComplex};
use dgn_scat::{parse_flag_key, random_big_simplex, BigNerveSimplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::doc::{CategoryDoc, ComplexDoc, MatrixDoc, SparseVec, WorkspaceDoc};
use crate::CliError;

/// Default arity cap of explicit categories.
pub const DEFAULT_ARITY_CAP: usize = 4;

/// Stream tags, so that entities of different sections never share random draws.
const CATEGORIES: u64 = 1;
const COMPLEXES: u64 = 2;
const SIMPLICES: u64 = 3;
const BIG_SIMPLICES: u64 = 4;
const TWISTED: u64 = 5;
pub(crate) const COMMANDS: u64 = 16;

/// Run-wide settings after command-line flags override the document.
#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub field: Field,
    pub seed: u64,
    pub sign_mode: SignMode,
    pub level_cap: Option<usize>,
    pub arity_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { field: Field::Rational, seed: 0, sign_mode: SignMode::Classical, level_cap: None, arity_cap: DEFAULT_ARITY_CAP }
    }
}

/// Flag values that take precedence over the document.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub cap: Option<usize>,
    pub field: Option<Field>,
    pub sign_mode: Option<SignMode>,
}

impl Settings {
    pub fn resolve(doc: &WorkspaceDoc, o: &Overrides) -> Result<Self, CliError> {
        let field = match (o.field, &doc.scalars) {
            (Some(f), _) => f,
            (None, None) => Field::Rational,
            (None, Some(s)) => match (s.field.as_str(), s.modulus) {
                ("rational", None) => Field::Rational,
                ("fp", Some(p)) if Field::is_prime(p) => Field::Prime(p),
                ("fp", Some(p)) => return Err(CliError::schema("scalars.modulus", format!("{p} is not prime"))),
                ("fp", None) => return Err(CliError::schema("scalars", "fp needs a modulus")),
                (f, _) => return Err(CliError::schema("scalars.field", format!("unknown field {f:?}"))),
            },
        };
        Ok(Settings {
            field,
            seed: o.seed.or(doc.seed).unwrap_or(0),
            sign_mode: o.sign_mode.unwrap_or_default(),
            level_cap: o.cap.or(doc.caps.level),
            arity_cap: doc.caps.arity.unwrap_or(DEFAULT_ARITY_CAP),
        })
    }

    /// A generator for one consumer, independent of all others.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        stream_rng(self.seed, stream)
    }
}

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn entity_rng(settings: &Settings, own: Option<u64>, section: u64, index: usize) -> ChaCha8Rng {
    stream_rng(own.unwrap_or(settings.seed), section << 32 | index as u64)
}

#[derive(Clone, Debug)]
pub enum Category {
    AInf(AInfCategory),
    Chain(ChainDgCategory),
}

impl Category {
    pub fn as_dyn(&self) -> &dyn AInfinity {
        match self {
            Category::AInf(c) => c,
            Category::Chain(c) => c,
        }
    }

    pub fn as_chain(&self) -> Option<&ChainDgCategory> {
        match self {
            Category::Chain(c) => Some(c),
            Category::AInf(_) => None,
        }
    }

    pub fn labels(&self) -> Vec<String> {
        let c = self.as_dyn();
        (0..c.num_objects()).map(|x| c.object_label(x)).collect()
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }
}

/// A simplex or twisted complex together with the index of its category.
#[derive(Clone, Debug)]
pub struct Entity<T> {
    pub id: String,
    pub category: usize,
    pub value: T,
}

#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub settings: Settings,
    pub categories: Vec<(String, Category)>,
    pub complexes: Vec<(String, ChainComplex)>,
    pub simplices: Vec<Entity<NerveSimplex>>,
    pub big_simplices: Vec<Entity<BigNerveSimplex>>,
    pub twisted: Vec<Entity<TwistedComplex>>,
}

fn parse_scalar(field: Field, s: &str, path: &str) -> Result<Scalar, CliError> {
    field.parse(s).map_err(|e| CliError::schema(path, format!("bad scalar {s:?}: {e}")))
}

fn parse_matrix(field: Field, m: &MatrixDoc, rows: usize, cols: usize, path: &str) -> Result<Matrix, CliError> {
    if m.len() != rows {
        return Err(CliError::schema(path, format!("expected {rows} rows, found {}", m.len())));
    }
    let mut data = Vec::with_capacity(rows);
    for (i, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(CliError::schema(format!("{path}[{i}]"), format!("expected {cols} entries, found {}", row.len())));
        }
        let row = row.iter().map(|s| parse_scalar(field, s, path)).collect::<Result<Vec<_>, _>>()?;
        data.push(row);
    }
    Matrix::from_rows(data, cols).map_err(|e| CliError::schema(path, e.to_string()))
}

/// A complex from level dimensions and optional differentials. Explicit
/// differentials are not checked for `d∘d = 0` here; `validate` reports it.
fn build_complex(
    field: Field,
    grading: Grading,
    lo: i32,
    dims: &[usize],
    d: Option<&Vec<MatrixDoc>>,
    rng: &mut ChaCha8Rng,
    path: &str,
) -> Result<ChainComplex, CliError> {
    let Some(d) = d else {
        return Ok(random::complex(field, grading, lo, dims, rng));
    };
    if d.len() != dims.len() {
        return Err(CliError::schema(path, format!("{} levels but {} differentials", dims.len(), d.len())));
    }
    let dim = |n: i32| if n < lo || n >= lo + dims.len() as i32 { 0 } else { dims[(n - lo) as usize] };
    let mut mats = Vec::with_capacity(d.len());
    for (k, m) in d.iter().enumerate() {
        let n = lo + k as i32;
        mats.push(parse_matrix(field, m, dim(n + grading.step()), dims[k], &format!("{path}.d[{k}]"))?);
    }
    ChainComplex::new_unchecked(grading, lo, dims.to_vec(), mats).map_err(|e| CliError::schema(path, e.to_string()))
}

fn sparse(field: Field, space: &GradedSpace, v: &SparseVec, path: &str) -> Result<Vector, CliError> {
    let mut out = vec![Scalar::zero(); space.dim()];
    for (label, value) in v {
        let i = space.index_of(label).ok_or_else(|| CliError::schema(path, format!("unknown basis label {label:?}")))?;
        out[i] = parse_scalar(field, value, path)?;
    }
    Ok(out)
}

fn check_unique<'a>(ids: impl Iterator<Item = &'a str>, section: &str) -> Result<(), CliError> {
    let mut seen = BTreeSet::new();
    for (i, id) in ids.enumerate() {
        if !seen.insert(id) {
            return Err(CliError::schema(format!("{section}[{i}]"), format!("duplicate id {id:?}")));
        }
    }
    Ok(())
}

fn object_indices(c: &Category, labels: &[String], path: &str) -> Result<Vec<usize>, CliError> {
    labels
        .iter()
        .map(|l| c.object_index(l).ok_or_else(|| CliError::schema(path, format!("unknown object {l:?}"))))
        .collect()
}

fn build_category(doc: &CategoryDoc, settings: &Settings, index: usize) -> Result<Category, CliError> {
    let path = format!("categories[{index}]");
    let field = settings.field;
    let zero = |mut c: ChainDgCategory, with_zero: bool| {
        if with_zero {
            c.push("0".into(), ChainComplex::zero(Grading::Cochain));
        }
        Category::Chain(c)
    };
    match doc {
        CategoryDoc::StandardSimplex { n, .. } => Ok(Category::AInf(dgn_nerve::standard_simplex_category(*n))),
        CategoryDoc::Chain { objects, seed, .. } => {
            let mut rng = entity_rng(settings, *seed, CATEGORIES, index);
            check_unique(objects.iter().map(|o| o.label.as_str()), &format!("{path}.objects"))?;
            let mut complexes = Vec::new();
            for (i, o) in objects.iter().enumerate() {
                let p = format!("{path}.objects[{i}]");
                complexes.push(build_complex(field, Grading::Cochain, o.lo, &o.dims, o.d.as_ref(), &mut rng, &p)?);
            }
            Ok(Category::Chain(ChainDgCategory::new(objects.iter().map(|o| o.label.clone()).collect(), complexes)))
        }
        CategoryDoc::RandomChain { objects, max_dim, zero_object, seed, .. } => {
            if *max_dim == 0 {
                return Err(CliError::schema(path, "max_dim must be positive"));
            }
            let mut rng = entity_rng(settings, *seed, CATEGORIES, index);
            let shapes = random_shapes(*objects, *max_dim, &mut rng);
            Ok(zero(random_chain_category(field, &shapes, &mut rng), *zero_object))
        }
        CategoryDoc::Concentrated { objects, max_dim, zero_object, seed, .. } => {
            if *max_dim == 0 {
                return Err(CliError::schema(path, "max_dim must be positive"));
            }
            let mut rng = entity_rng(settings, *seed, CATEGORIES, index);
            Ok(zero(random_concentrated_category(field, *objects, *max_dim, &mut rng), *zero_object))
        }
        CategoryDoc::Explicit { objects, homs, operations, units, arity_cap, .. } => {
            check_unique(objects.iter().map(String::as_str), &format!("{path}.objects"))?;
            let index_of = |l: &str, p: &str| {
                objects.iter().position(|o| o == l).ok_or_else(|| CliError::schema(p, format!("unknown object {l:?}")))
            };
            let mut spaces = BTreeMap::new();
            for (i, h) in homs.iter().enumerate() {
                let p = format!("{path}.homs[{i}]");
                let key = (index_of(&h.source, &p)?, index_of(&h.target, &p)?);
                let basis = h.basis.iter().map(|b| (b.label.clone(), b.degree)).collect();
                let space = GradedSpace::new(basis).map_err(|e| CliError::schema(&p, e.to_string()))?;
                if spaces.insert(key, space).is_some() {
                    return Err(CliError::schema(p, format!("second hom {} → {}", h.source, h.target)));
                }
            }
            let mut c = AInfCategory::new(objects.clone(), spaces, arity_cap.unwrap_or(settings.arity_cap));
            for (label, v) in units {
                let p = format!("{path}.units.{label}");
                let x = index_of(label, &p)?;
                let u = sparse(field, c.hom(x, x), v, &p)?;
                c.set_unit(x, u).map_err(|e| CliError::schema(p, e.to_string()))?;
            }
            for (i, op) in operations.iter().enumerate() {
                let p = format!("{path}.operations[{i}]");
                let objs = op.objects.iter().map(|l| index_of(l, &p)).collect::<Result<Vec<_>, _>>()?;
                if objs.len() < 2 || op.inputs.len() != objs.len() - 1 {
                    return Err(CliError::schema(p, "an operation on x₀…x_n takes n inputs"));
                }
                let spaces = arg_spaces(&c, &objs);
                let mut tuple = Vec::new();
                for (s, l) in spaces.iter().zip(&op.inputs) {
                    tuple.push(s.index_of(l).ok_or_else(|| CliError::schema(&p, format!("unknown input label {l:?}")))?);
                }
                let out = sparse(field, c.hom(objs[0], objs[objs.len() - 1]), &op.output, &p)?;
                c.set_m(&objs, &tuple, out).map_err(|e| CliError::schema(p, e.to_string()))?;
            }
            Ok(Category::AInf(c))
        }
    }
}

fn build_standalone_complex(doc: &ComplexDoc, settings: &Settings, index: usize) -> Result<ChainComplex, CliError> {
    let path = format!("complexes[{index}]");
    let grading = match doc.grading.as_deref() {
        None | Some("chain") => Grading::Chain,
        Some("cochain") => Grading::Cochain,
        Some(g) => return Err(CliError::schema(path, format!("unknown grading {g:?}"))),
    };
    let mut rng = entity_rng(settings, doc.seed, COMPLEXES, index);
    build_complex(settings.field, grading, doc.lo, &doc.dims, doc.d.as_ref(), &mut rng, &path)
}

impl Workspace {
    pub fn empty(settings: Settings) -> Self {
        Workspace { settings, ..Default::default() }
    }

    pub fn build(doc: &WorkspaceDoc, overrides: &Overrides) -> Result<Self, CliError> {
        let settings = Settings::resolve(doc, overrides)?;
        let field = settings.field;
        check_unique(doc.categories.iter().map(|c| c.id()), "categories")?;
        check_unique(doc.complexes.iter().map(|c| c.id.as_str()), "complexes")?;
        check_unique(doc.simplices.iter().map(|c| c.id.as_str()), "simplices")?;
        check_unique(doc.big_simplices.iter().map(|c| c.id.as_str()), "big_simplices")?;
        check_unique(doc.twisted.iter().map(|c| c.id.as_str()), "twisted")?;
        let mut ws = Workspace::empty(settings.clone());
        for (i, c) in doc.categories.iter().enumerate() {
            ws.categories.push((c.id().to_string(), build_category(c, &settings, i)?));
        }
        for (i, c) in doc.complexes.iter().enumerate() {
            ws.complexes.push((c.id.clone(), build_standalone_complex(c, &settings, i)?));
        }
        for (i, s) in doc.simplices.iter().enumerate() {
            let path = format!("simplices[{i}]");
            let (ci, cat) = ws.category_at(&s.category, &path)?;
            let objects = object_indices(cat, &s.objects, &path)?;
            if objects.len() < 2 {
                return Err(CliError::schema(path, "a simplex needs at least two objects"));
            }
            let c = cat.as_dyn();
            let value = match &s.components {
                None => {
                    let mut rng = entity_rng(&settings, s.seed, SIMPLICES, i);
                    random_simplex(c, objects, &mut rng).map_err(|e| CliError::schema(&path, e.to_string()))?
                }
                Some(comps) => {
                    let mut simplex = NerveSimplex::zero(c, objects);
                    let valid: BTreeSet<Vec<usize>> = strings(simplex.n).into_iter().collect();
                    for (key, v) in comps {
                        let p = format!("{path}.components.{key}");
                        let st = parse_string_key(key).filter(|st| valid.contains(st));
                        let st = st.ok_or_else(|| CliError::schema(&p, "not an increasing string of the simplex"))?;
                        let (a, b) = simplex.hom_objects(&st);
                        simplex.set(&st, sparse(field, c.hom(a, b), v, &p)?);
                    }
                    simplex
                }
            };
            ws.simplices.push(Entity { id: s.id.clone(), category: ci, value });
        }
        for (i, s) in doc.big_simplices.iter().enumerate() {
            let path = format!("big_simplices[{i}]");
            let (ci, cat) = ws.category_at(&s.category, &path)?;
            let objects = object_indices(cat, &s.objects, &path)?;
            if objects.len() < 2 {
                return Err(CliError::schema(path, "a simplex needs at least two objects"));
            }
            let c = cat.as_dyn();
            let value = match &s.data {
                None => {
                    let mut rng = entity_rng(&settings, s.seed, BIG_SIMPLICES, i);
                    random_big_simplex(c, objects, &mut rng).map_err(|e| CliError::schema(&path, e.to_string()))?
                }
                Some(data) => {
                    let mut out = BTreeMap::new();
                    for (key, v) in data {
                        let p = format!("{path}.data.{key}");
                        let flag = parse_flag_key(key).ok_or_else(|| CliError::schema(&p, "not a flag key"))?;
                        let v = v.iter().map(|x| parse_scalar(field, x, &p)).collect::<Result<Vec<_>, _>>()?;
                        out.insert(flag, v);
                    }
                    BigNerveSimplex { n: objects.len() - 1, objects, data: out }
                }
            };
            ws.big_simplices.push(Entity { id: s.id.clone(), category: ci, value });
        }
        for (i, t) in doc.twisted.iter().enumerate() {
            let path = format!("twisted[{i}]");
            let (ci, cat) = ws.category_at(&t.category, &path)?;
            let c = cat.as_dyn();
            let value = match &t.components {
                None => {
                    let mut rng = entity_rng(&settings, t.seed, TWISTED, i);
                    random_twisted(c, t.steps.unwrap_or(1), &mut rng).map_err(|e| CliError::schema(&path, e.to_string()))?
                }
                Some(comps) => {
                    let mut components = Vec::new();
                    for (k, comp) in comps.iter().enumerate() {
                        let p = format!("{path}.components[{k}]");
                        let x = cat.object_index(&comp.object).ok_or_else(|| CliError::schema(p, format!("unknown object {:?}", comp.object)))?;
                        components.push((comp.position, x));
                    }
                    let mut q = BTreeMap::new();
                    for (key, v) in &t.q {
                        let p = format!("{path}.q.{key}");
                        let pair = parse_string_key(key).filter(|v| v.len() == 2 && v[0] < comps.len() && v[1] < comps.len());
                        let pair = pair.ok_or_else(|| CliError::schema(&p, "expected a key a.b of two component indices"))?;
                        let (a, b) = (pair[0], pair[1]);
                        q.insert((a, b), sparse(field, c.hom(components[a].1, components[b].1), v, &p)?);
                    }
                    TwistedComplex { components, q }
                }
            };
            ws.twisted.push(Entity { id: t.id.clone(), category: ci, value });
        }
        Ok(ws)
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
            && self.complexes.is_empty()
            && self.simplices.is_empty()
            && self.big_simplices.is_empty()
            && self.twisted.is_empty()
    }

    fn category_at(&self, id: &str, path: &str) -> Result<(usize, &Category), CliError> {
        self.categories
            .iter()
            .position(|(i, _)| i == id)
            .map(|k| (k, &self.categories[k].1))
            .ok_or_else(|| CliError::schema(path, format!("unknown category {id:?}")))
    }

    pub fn category(&self, id: &str) -> Result<&Category, CliError> {
        self.categories.iter().find(|(i, _)| i == id).map(|(_, c)| c).ok_or(CliError::UnknownId { kind: "category", id: id.into() })
    }

    pub fn complex(&self, id: &str) -> Result<&ChainComplex, CliError> {
        self.complexes.iter().find(|(i, _)| i == id).map(|(_, c)| c).ok_or(CliError::UnknownId { kind: "complex", id: id.into() })
    }

    pub fn simplex(&self, id: &str) -> Result<&Entity<NerveSimplex>, CliError> {
        self.simplices.iter().find(|e| e.id == id).ok_or(CliError::UnknownId { kind: "simplex", id: id.into() })
    }

    pub fn big_simplex(&self, id: &str) -> Result<&Entity<BigNerveSimplex>, CliError> {
        self.big_simplices.iter().find(|e| e.id == id).ok_or(CliError::UnknownId { kind: "big simplex", id: id.into() })
    }

    pub fn category_of<T>(&self, e: &Entity<T>) -> &Category {
        &self.categories[e.category].1
    }
}

/// A small simplex as JSON: object labels and the nonzero components by string key.
pub fn simplex_json(c: &Category, s: &NerveSimplex) -> serde_json::Value {
    let labels = c.labels();
    let ac = c.as_dyn();
    let mut comps = serde_json::Map::new();
    for (st, v) in &s.components {
        let (a, b) = s.hom_objects(st);
        comps.insert(string_key(st), vector_json(ac.hom(a, b), v));
    }
    serde_json::json!({
        "objects": s.objects.iter().map(|&x| labels[x].clone()).collect::<Vec<_>>(),
        "components": comps,
    })
}

/// Nonzero coordinates by basis label.
pub fn vector_json(space: &GradedSpace, v: &[Scalar]) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            m.insert(space.label(i).to_string(), serde_json::Value::String(x.to_string()));
        }
    }
    serde_json::Value::Object(m)
}
