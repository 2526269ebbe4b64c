//! The subcommands. Each one takes a resolved [`Workspace`] and returns a
//! [`Report`]; input errors (unknown ids, outer horns, caps) come back as
//! [`CliError`] instead.

use std::collections::BTreeMap;

use dgn_ainfty::{arg_spaces, check_relations, check_strict_units, object_strings, relations::check_relations_sampled, AInfinity};
use dgn_core::{random, vector, ChainComplex, Field, Grading, Matrix};
use dgn_doldkan::{
    aw, dk, ez_tensor, pi_boundary_check, AwEz, Decomposer, Normalized, SignMode, DEFAULT_LEVEL_CAP,
};
use dgn_nerve::{dg_defect, face, fill_inner_horn, horn_of, string_key, strings, validate_simplex, NerveError};
use dgn_pretr::{fiber_cofiber_check, les_check, stability_witnesses, validate_twisted, ChainDgCategory};
use dgn_scat::{
    big_to_small_unchecked, comparison_naturality_check, cube_decomposition, validate_big_simplex_with, MapCache,
    ScatError,
};
use rand::Rng;

use crate::report::Report;
use crate::workspace::{simplex_json, Category, Workspace, COMMANDS};
use crate::{sign_mode_name, CliError};

/// Above this many basis tuples the relation check samples per object string.
const RELATION_BUDGET: usize = 200_000;
const SAMPLES_PER_STRING: usize = 64;

/// Largest cube order accepted; `(m−1)!` top cells grow fast.
pub const MAX_CUBE_ORDER: usize = 8;

/// AW/EZ is checked on `DK(A) × DK(A)` truncated to this level.
const AWEZ_LEVEL: usize = 4;

fn level_cap(ws: &Workspace) -> usize {
    ws.settings.level_cap.unwrap_or(DEFAULT_LEVEL_CAP)
}

fn tuple_count(c: &dyn AInfinity) -> usize {
    let live = 2 * c.arity_cap() - 1;
    let mut total = 0usize;
    for n in 1..=live {
        for objs in object_strings(c, n) {
            let p = arg_spaces(c, &objs).iter().map(|s| s.dim()).product::<usize>();
            total = total.saturating_add(p);
        }
    }
    total
}

fn validate_category(ws: &Workspace, id: &str, cat: &Category, r: &mut Report, stream: u64) {
    let c = cat.as_dyn();
    let labels = cat.labels();
    let name = |objs: &[usize]| objs.iter().map(|&x| labels[x].as_str()).collect::<Vec<_>>().join(",");
    if let Category::Chain(chain) = cat {
        let bad = chain
            .objects
            .iter()
            .zip(&chain.labels)
            .filter(|(x, _)| x.check_square_zero().is_err())
            .map(|(_, l)| format!("object {l}: d∘d ≠ 0"))
            .collect();
        r.defects(format!("category {id}: objects are complexes"), "", bad);
    }
    let n_max = 2 * c.arity_cap();
    let total = tuple_count(c);
    let report = if total > RELATION_BUDGET {
        r.warn(format!(
            "category {id}: {total} basis tuples, relations sampled with {SAMPLES_PER_STRING} per object string"
        ));
        check_relations_sampled(c, n_max, SAMPLES_PER_STRING, &mut ws.settings.rng(stream))
    } else {
        check_relations(c, n_max)
    };
    r.count("relations_checked", report.checked);
    let defects = report
        .violations
        .iter()
        .map(|v| {
            let spaces = arg_spaces(c, &v.objects);
            let inputs: Vec<&str> = v.tuple.iter().zip(&spaces).map(|(&i, s)| s.label(i)).collect();
            format!("n={} objects=({}) inputs=({})", v.n, name(&v.objects), inputs.join(","))
        })
        .collect();
    r.defects(format!("category {id}: A∞ relations"), format!("{} equations", report.checked), defects);
    let units = check_strict_units(c).into_iter().map(|u| format!("{}: {}", labels[u.object], u.reason)).collect();
    r.defects(format!("category {id}: strict units"), "", units);
}

/// Runs every validator that applies to the declared entities.
pub fn cmd_validate(ws: &Workspace) -> Report {
    let mut r = Report::new("validate", &ws.settings);
    if ws.is_empty() {
        r.warn("the document declares no entities; nothing to validate");
    }
    for (k, (id, cat)) in ws.categories.iter().enumerate() {
        validate_category(ws, id, cat, &mut r, COMMANDS << 32 | k as u64);
    }
    for (id, a) in &ws.complexes {
        let bad = match a.check_square_zero() {
            Ok(()) => Vec::new(),
            Err(e) => vec![e.to_string()],
        };
        r.defects(format!("complex {id}: d∘d = 0"), "", bad);
    }
    for s in &ws.simplices {
        let c = ws.category_of(s).as_dyn();
        match validate_simplex(c, &s.value) {
            Ok(rep) => {
                r.count("simplex_equations_checked", rep.checked);
                r.defects(format!("simplex {}", s.id), "", rep.keys().into_iter().map(|k| format!("string {k}")).collect());
            }
            Err(e) => r.check(format!("simplex {}", s.id), false, e.to_string()),
        }
    }
    for s in &ws.big_simplices {
        let c = ws.category_of(s).as_dyn();
        match validate_big_simplex_with(c, &s.value, s.value.n.max(1)) {
            Ok(rep) => {
                r.count("big_relations_checked", rep.faces_checked + rep.degeneracies_checked + rep.compositions_checked);
                r.defects(format!("big simplex {}", s.id), "", rep.defects.iter().map(ToString::to_string).collect());
            }
            Err(e) => r.check(format!("big simplex {}", s.id), false, e.to_string()),
        }
    }
    for t in &ws.twisted {
        let c = ws.category_of(t).as_dyn();
        match validate_twisted(c, &t.value) {
            Ok(rep) => {
                r.count("maurer_cartan_pairs_checked", rep.pairs_checked);
                let bad = rep.defects.iter().map(|((a, b), _)| format!("pair {a}.{b}")).collect();
                r.defects(format!("twisted complex {}: Maurer-Cartan", t.id), "", bad);
            }
            Err(e) => r.check(format!("twisted complex {}", t.id), false, e.to_string()),
        }
    }
    r
}

/// Fills the inner horn `Λⁿ_p` of a declared simplex.
pub fn cmd_fill_horn(ws: &Workspace, simplex: &str, p: usize) -> Result<Report, CliError> {
    let e = ws.simplex(simplex)?;
    let cat = ws.category_of(e);
    let c = cat.as_dyn();
    let s = &e.value;
    let horn = horn_of(s, p).map_err(|err| match err {
        NerveError::NotInner { n, p } => CliError::NotInner { n, p },
        other => CliError::Input(other.to_string()),
    })?;
    let filled = fill_inner_horn(c, &horn).map_err(|err| CliError::Input(err.to_string()))?;
    let mut r = Report::new("fill-horn", &ws.settings);
    r.line(format!("horn Λ^{}_{} of simplex {simplex}", s.n, p));
    let rep = validate_simplex(c, &filled).map_err(|err| CliError::Input(err.to_string()))?;
    r.count("equations_checked", rep.checked);
    r.defects("filler satisfies the nerve equations", "", rep.keys().into_iter().map(|k| format!("string {k}")).collect());
    let changed = horn
        .simplex
        .components
        .iter()
        .filter(|(k, v)| filled.get(k).ok() != Some(*v))
        .map(|(k, _)| format!("string {}", string_key(k)))
        .collect();
    r.defects("filler restricts to the horn", "", changed);
    let mut faces = Vec::new();
    for j in (0..=s.n).filter(|&j| j != p) {
        let agree = matches!((face(c, &filled, j), face(c, s, j)), (Ok(a), Ok(b)) if a == b);
        if !agree {
            faces.push(format!("d_{j}"));
        }
    }
    r.defects("faces d_j, j ≠ p, agree with the input", "", faces);
    for key in horn.missing() {
        r.line(format!("filled {}", string_key(&key)));
    }
    r.output = simplex_json(cat, &filled);
    Ok(r)
}

fn scat_input(e: ScatError) -> CliError {
    CliError::Input(e.to_string())
}

/// The big-to-small comparison on a declared big simplex.
pub fn cmd_compare(ws: &Workspace, id: &str) -> Result<Report, CliError> {
    let e = ws.big_simplex(id)?;
    let cat = ws.category_of(e);
    let c = cat.as_dyn();
    let s = &e.value;
    let cap = level_cap(ws);
    if s.n > cap {
        return Err(CliError::Cap { cap, what: format!("big simplex {id} has dimension {}", s.n) });
    }
    if !c.is_dg() {
        return Err(CliError::Input(format!("big simplex {id} lives over a category that is not dg")));
    }
    let mut r = Report::new("compare", &ws.settings);
    let big = validate_big_simplex_with(c, s, s.n.max(1)).map_err(scat_input)?;
    r.count("big_relations_checked", big.faces_checked + big.degeneracies_checked + big.compositions_checked);
    r.defects("input satisfies the big-nerve relations", "", big.defects.iter().map(ToString::to_string).collect());
    if !big.passed() {
        r.line("the comparison is only defined on valid big simplices");
        return Ok(r);
    }
    let small = big_to_small_unchecked(c, s).map_err(scat_input)?;
    let rep = validate_simplex(c, &small).map_err(|err| CliError::Input(err.to_string()))?;
    r.defects("image satisfies the small-nerve equations", "", rep.keys().into_iter().map(|k| format!("string {k}")).collect());
    let mut dg = Vec::new();
    for st in strings(small.n) {
        match dg_defect(c, &small, &st) {
            Ok(v) if vector::is_zero(&v) => {}
            _ => dg.push(format!("string {}", string_key(&st))),
        }
    }
    r.defects("image satisfies the dg sign identity", "", dg);
    let nat = comparison_naturality_check(c, s).map_err(scat_input)?;
    r.check(
        "comparison commutes with faces and degeneracies",
        nat.passed(),
        format!("{} faces, {} degeneracies", nat.faces_checked, nat.degeneracies_checked),
    );
    if !nat.failures.is_empty() {
        r.defects("naturality failures", "", nat.failures.clone());
    }
    let cache = MapCache::new(c, &s.objects, s.n.max(1)).map_err(scat_input)?;
    let mut edge = Vec::new();
    for st in strings(s.n).into_iter().filter(|st| st.len() == 3) {
        let (a, b) = (s.objects[st[0]], s.objects[st[2]]);
        let flag = vec![vec![st[0], st[2]], st.clone()];
        let space = cache.get(a, b);
        let expected = match s.get(&flag) {
            Ok(v) => vector::neg(&space.to_hom(1, &space.dk.top(1, v))),
            Err(_) => {
                edge.push(format!("string {} has no flag data", string_key(&st)));
                continue;
            }
        };
        if small.get(&st).ok() != Some(&expected) {
            edge.push(format!("string {}", string_key(&st)));
        }
    }
    r.defects("k = 2 components equal −π₁ of the flag edge", "", edge);
    r.output = simplex_json(cat, &small);
    Ok(r)
}

/// The decomposition of `[0,1]^{m−1}` into `(m−1)!` simplices.
pub fn cmd_cube(ws: &Workspace, m: usize) -> Result<Report, CliError> {
    if m > MAX_CUBE_ORDER {
        return Err(CliError::Cap { cap: MAX_CUBE_ORDER, what: format!("cube order {m}") });
    }
    let cube = cube_decomposition(m).map_err(scat_input)?;
    let mut r = Report::new("cube", &ws.settings);
    r.line(cube.summary());
    for l in cube.identification_text() {
        r.line(l);
    }
    let fact: usize = (1..m).product();
    r.check("classes have well-defined faces", cube.consistent, "");
    r.check("top cells = (m−1)!", cube.top_cells() == fact, cube.top_cells().to_string());
    r.check("vertices = 2^(m−1)", cube.vertex_count() == 1 << (m - 1), cube.vertex_count().to_string());
    r.check("facets = 2(m−1)", cube.facets.len() == 2 * (m - 1), cube.facets.len().to_string());
    r.count("identifications", cube.identifications.len());
    if m <= 5 {
        let iso = cube.matches_poset_nerve().map_err(scat_input)?;
        r.check("quotient ≅ nerve of the poset of subsets", iso, "");
    } else {
        r.warn("the poset-nerve comparison runs for m ≤ 5 only");
    }
    r.output = serde_json::json!({
        "top": cube.top_cells(),
        "vertices": cube.vertex_count(),
        "facets": cube.facets.len(),
        "identifications": cube.identification_text(),
    });
    Ok(r)
}

/// Change of basis from the canonical `A_n[id]` to the computed kernel basis.
fn canonical_to_kernel(norm: &Normalized, canonical: &Normalized, n: usize) -> Option<Matrix> {
    norm.inclusions[n].solve_matrix(&canonical.inclusions[n])
}

fn nonzero_entries(m: &Matrix) -> usize {
    (0..m.rows()).map(|i| (0..m.cols()).filter(|&j| !m.get(i, j).is_zero()).count()).sum()
}

/// `aw∘ez = id` and the chain map conditions on a few random vectors per level.
fn awez_defects(ctx: &AwEz, field: Field, mode: SignMode, rng: &mut impl Rng) -> (Vec<String>, Vec<String>) {
    let mut roundtrip = Vec::new();
    let mut chain = Vec::new();
    for n in 0..=ctx.level_cap() {
        for _ in 0..2 {
            let t = random::vector(field, ctx.tensor.dim(n as i32), rng);
            let raw = ez_tensor(ctx, n, &t);
            if raw.and_then(|raw| aw(ctx, n, &raw, mode)).ok() != Some(t.clone()) {
                roundtrip.push(format!("level {n}"));
                break;
            }
        }
        if n == 0 {
            continue;
        }
        let t = random::vector(field, ctx.tensor.dim(n as i32), rng);
        let dt = ctx.tensor.d_out(n as i32).mul_vec(&t).ok();
        let lhs = ez_tensor(ctx, n, &t).and_then(|v| ctx.product_moore(n, &v)).ok();
        if lhs.is_none() || lhs != dt.and_then(|dt| ez_tensor(ctx, n - 1, &dt).ok()) {
            chain.push(format!("ez at level {n}"));
        }
        let z = random::vector(field, ctx.x.dim(n) * ctx.y.dim(n), rng);
        let lhs = ctx.product_moore(n, &z).and_then(|dz| aw(ctx, n - 1, &dz, mode)).ok();
        let rhs = aw(ctx, n, &z, mode).ok().and_then(|a| ctx.tensor.d_out(n as i32).mul_vec(&a).ok());
        if lhs.is_none() || lhs != rhs {
            chain.push(format!("aw at level {n}"));
        }
    }
    (roundtrip, chain)
}

/// `N(DK(A)) ≅ A`, the decomposition round trip, `π = H`, and AW/EZ on `DK(A) × DK(A)`.
pub fn cmd_dk_roundtrip(ws: &Workspace, id: &str) -> Result<Report, CliError> {
    let a = ws.complex(id)?;
    if a.grading != Grading::Chain {
        return Err(CliError::Input(format!("complex {id} is cochain graded; Dold-Kan takes a chain complex")));
    }
    if a.lo < 0 {
        return Err(CliError::Input(format!("complex {id} has a negative level {}", a.lo)));
    }
    if a.check_square_zero().is_err() {
        return Err(CliError::Input(format!("complex {id} does not satisfy d∘d = 0")));
    }
    let cap = level_cap(ws);
    if a.hi() > cap as i32 {
        return Err(CliError::Cap { cap, what: format!("complex {id} reaches level {}", a.hi()) });
    }
    let x = dk(a, cap).map_err(|e| CliError::Input(e.to_string()))?;
    let mut r = Report::new("dk-roundtrip", &ws.settings);
    let mut rng = ws.settings.rng(COMMANDS << 32 | 4);

    let identities = x.space.identity_failures();
    r.defects("DK(A) satisfies the simplicial identities", "", identities.clone());
    if !identities.is_empty() {
        return Ok(r);
    }
    let norm = Normalized::new(&x.space).map_err(|e| CliError::Input(e.to_string()))?;
    let canonical = x.canonical_normalized();
    let mut diff = 0usize;
    let mut located = Vec::new();
    for n in 0..=cap {
        let ni = n as i32;
        if norm.complex.dim(ni) != a.dim(ni) {
            diff += norm.complex.dim(ni).abs_diff(a.dim(ni));
            located.push(format!("dimension at level {n}"));
            continue;
        }
        let Some(t) = canonical_to_kernel(&norm, &canonical, n) else {
            located.push(format!("A_{n}[id] outside N_{n}"));
            diff += 1;
            continue;
        };
        if n > 0 {
            let Some(t_below) = canonical_to_kernel(&norm, &canonical, n - 1) else { continue };
            let lhs = norm.complex.d_out(ni).mul(&t);
            let rhs = t_below.mul(&a.d_out(ni));
            match (lhs, rhs) {
                (Ok(l), Ok(rr)) => match l.sub(&rr) {
                    Ok(dm) if dm.is_zero() => {}
                    Ok(dm) => {
                        diff += nonzero_entries(&dm);
                        located.push(format!("differential at level {n}"));
                    }
                    Err(_) => {
                        diff += 1;
                        located.push(format!("differential shape at level {n}"));
                    }
                },
                _ => {
                    diff += 1;
                    located.push(format!("differential shape at level {n}"));
                }
            }
        }
    }
    r.line(format!("N∘DK diff = {diff}"));
    r.defects("N(DK(A)) ≅ A in dimensions and differentials", format!("levels 0..={cap}"), located);

    let mut round = Vec::new();
    for n in 0..=cap {
        let dec = Decomposer::new(&x.space, &norm, n).map_err(|e| CliError::Input(e.to_string()))?;
        for i in 0..x.space.dim(n) {
            let v = vector::unit(x.space.dim(n), i);
            let back = dec.decompose(&v).and_then(|comps| dgn_doldkan::reassemble(&x.space, n, &comps));
            if back.ok() != Some(v) {
                round.push(format!("level {n} basis {i}"));
            }
        }
        r.count("decompositions", x.space.dim(n));
    }
    r.defects("reassemble ∘ decompose = id", "", round);

    let pi: BTreeMap<i32, usize> = (0..cap as i32).map(|i| (i, norm.complex.homology_dim(i))).collect();
    let h: BTreeMap<i32, usize> = (0..cap as i32).map(|i| (i, a.homology_dim(i))).collect();
    let bad = pi.iter().filter(|(i, d)| h.get(i) != Some(d)).map(|(i, _)| format!("level {i}")).collect();
    r.defects("π_i(DK(A)) = H_i(A)", format!("levels below {cap}"), bad);
    r.table("pi", pi);
    r.table("homology", h);

    let mut boundary = Vec::new();
    for n in 0..=cap {
        match pi_boundary_check(&x, n) {
            Ok(b) if b.passed() => r.count("boundary_checks", b.checked),
            Ok(b) => boundary.extend(b.failures.iter().map(|i| format!("level {n} basis {i}"))),
            Err(e) => boundary.push(e.to_string()),
        }
    }
    r.defects("d(π_n ā) = Σ (−1)^j π_{n−1}(d_j ā)", "", boundary);

    let level = cap.min(AWEZ_LEVEL);
    let xs = x.space.truncated(level);
    let nx = Normalized::new(&xs).map_err(|e| CliError::Input(e.to_string()))?;
    let ctx = AwEz::new(&xs, &xs, &nx, &nx);
    let mode = ws.settings.sign_mode;
    let (roundtrip, chain) = awez_defects(&ctx, ws.settings.field, mode, &mut rng);
    r.defects(format!("aw∘ez = id ({} sign)", sign_mode_name(mode)), format!("levels 0..={level}"), roundtrip);
    r.defects(format!("aw and ez are chain maps ({} sign)", sign_mode_name(mode)), "", chain);
    let other = match mode {
        SignMode::Paper => SignMode::Classical,
        SignMode::Classical => SignMode::Paper,
    };
    let (o_round, o_chain) = awez_defects(&ctx, ws.settings.field, other, &mut rng);
    let verdict = |ok: bool| if ok { "holds" } else { "fails" };
    r.line(format!("sign mode: {}", sign_mode_name(mode)));
    r.line(format!(
        "with the {} sign instead: aw∘ez = id {}, chain maps {}",
        sign_mode_name(other),
        verdict(o_round.is_empty()),
        verdict(o_chain.is_empty())
    ));
    // on x₀ ⊗ y₀ the printed factor is (−1)^{0·0+1} = −1, so aw∘ez = −id there
    r.line("printed sign: the (p, q) summand of aw carries (−1)^{np+1}; classical: no sign");
    Ok(r)
}

fn with_zero_object(c: &ChainDgCategory, r: &mut Report) -> ChainDgCategory {
    let mut c = c.clone();
    if c.zero_object().is_none() {
        r.warn("the category has no zero object; a zero complex \"0\" was added");
        c.push("0".into(), ChainComplex::zero(Grading::Cochain));
    }
    c
}

/// Fiber and cofiber comparisons, stability witnesses and the long exact
/// sequence for `trials` random closed maps `f : X → Y` and test objects `Z`.
pub fn cmd_stable(ws: &Workspace, id: &str, trials: usize) -> Result<Report, CliError> {
    let cat = ws.category(id)?;
    let chain = cat
        .as_chain()
        .ok_or_else(|| CliError::Input(format!("category {id} is not a category of complexes")))?;
    let mut r = Report::new("stable", &ws.settings);
    let c = with_zero_object(chain, &mut r);
    let zero = c.zero_object().expect("just ensured");
    let nonzero: Vec<usize> = (0..c.objects.len()).filter(|&x| c.objects[x].total_dim() > 0).collect();
    if nonzero.is_empty() {
        return Err(CliError::Input(format!("category {id} has no nonzero object")));
    }
    let mut zero_bad = Vec::new();
    for w in 0..c.objects.len() {
        if !c.hom_space(w, zero).complex().is_acyclic() {
            zero_bad.push(format!("Hom({}, 0)", c.labels[w]));
        }
        if !c.hom_space(zero, w).complex().is_acyclic() {
            zero_bad.push(format!("Hom(0, {})", c.labels[w]));
        }
    }
    r.defects("zero-object mapping complexes are acyclic", "", zero_bad);

    let mut rng = ws.settings.rng(COMMANDS << 32 | 6);
    let (mut quasi, mut witnesses, mut les) = (0, 0, 0);
    let (mut q_bad, mut w_bad, mut l_bad) = (Vec::new(), Vec::new(), Vec::new());
    for t in 0..trials {
        let pick = |rng: &mut _| nonzero[Rng::gen_range(rng, 0..nonzero.len())];
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let f = c.random_closed(x, y, &mut rng);
        let tag = format!("trial {t} ({} → {}, Z = {})", c.labels[x], c.labels[y], c.labels[z]);
        match fiber_cofiber_check(&c, x, y, &f, z) {
            Ok(rep) if rep.passed() => quasi += 1,
            Ok(rep) => {
                let side = if rep.cofiber.passed() { "fiber" } else { "cofiber" };
                q_bad.push(format!("{tag}: {side}"));
            }
            Err(e) => q_bad.push(format!("{tag}: {e}")),
        }
        match stability_witnesses(&c, x, y, &f) {
            Ok(rep) if rep.passed() => witnesses += 1,
            Ok(rep) => w_bad.push(format!("{tag}: {rep:?}")),
            Err(e) => w_bad.push(format!("{tag}: {e}")),
        }
        match les_check(&c, x, y, &f, z) {
            Ok(rep) if rep.passed() => les += 1,
            Ok(rep) => {
                let nodes: Vec<String> =
                    rep.nodes.iter().filter(|n| !n.exact()).map(|n| format!("{}@{}", n.term, n.k)).collect();
                l_bad.push(format!("{tag}: {}", nodes.join(",")));
            }
            Err(e) => l_bad.push(format!("{tag}: {e}")),
        }
    }
    r.line(format!("quasi-iso passes = {quasi}/{trials}"));
    r.line(format!("witness passes = {witnesses}/{trials}"));
    r.line(format!("exactness passes = {les}/{trials}"));
    r.defects("fiber and cofiber comparisons are quasi-isomorphisms", "", q_bad);
    r.defects("stability witnesses hold exactly", "", w_bad);
    r.defects("long exact sequence is exact", "", l_bad);
    r.count("trials", trials);
    r.output = serde_json::json!({ "quasi_iso": quasi, "witnesses": witnesses, "exact": les, "trials": trials });
    Ok(r)
}
