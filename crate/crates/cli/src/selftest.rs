//! `self-test`: one small probe per library operation, each with its own
//! oracle, plus every subcommand run on a built-in document. The coverage
//! table records which subcommands reach each operation.

use dgn_ainfty::{
    arg_spaces, basis_tuples, bar::from_bar, bar_convert, category::embed_dg, check_bar_relations, check_functor,
    check_relations, check_strict_units, compose_functors, h0_category, identity_functor, object_strings, AInfinity,
    FunctorLike,
};
use dgn_core::{
    compose_graded, hom_complex, op_complex, random, suspend, tensor_maps, truncate_nonneg, vector, ChainComplex,
    Field, GradedMap, GradedSpace, Grading, Matrix, Scalar,
};
use dgn_doldkan::{
    aw, compose_simplices, decompose, dk, ez_tensor, mapping_space, normalized_complex, pi_boundary_check, reassemble,
    AwEz, Normalized, SignMode,
};
use dgn_nerve::{
    codegeneracy_functor, coface_functor, degeneracy, face, fill_inner_horn, homotopy_category_dim, horn_of,
    pushforward, random_simplex, standard_simplex_category, validate_simplex,
};
use dgn_pretr::twisted::TwElement;
use dgn_pretr::{
    cone_hom_matrices, cone_tw, fiber_cofiber_check, homotopy_pullback, les_check, path_complex, random_chain_category,
    random_chain_map, random_concentrated_category, random_shapes, random_twisted, shift_tw, stability_witnesses,
    tw_hom, validate_twisted, ChainDgCategory, Cospan, TwHom, TwistedComplex,
};
use dgn_scat::{
    big_to_small, comparison_naturality_check, cube_decomposition, poset_interval, random_big_simplex,
    validate_big_simplex,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::doc::parse_document;
use crate::report::Report;
use crate::workspace::{Overrides, Workspace, COMMANDS};
use crate::{cmd_compare, cmd_cube, cmd_dk_roundtrip, cmd_fill_horn, cmd_stable, cmd_validate};

type Probe = fn(&mut ChaCha8Rng) -> Result<(), String>;

/// A library operation, the subcommands that reach it, and its probe.
pub struct Operation {
    pub module: &'static str,
    pub name: &'static str,
    pub commands: &'static [&'static str],
    probe: Probe,
}

const ST: &str = "self-test";

macro_rules! op {
    ($module:literal, $name:literal, [$($cmd:literal),*], $probe:ident) => {
        Operation { module: $module, name: $name, commands: &[$($cmd,)* ST], probe: $probe }
    };
}

pub const OPERATIONS: &[Operation] = &[
    op!("exact-core", "compose_graded", [], p_compose_graded),
    op!("exact-core", "tensor_maps", [], p_tensor_maps),
    op!("exact-core", "suspend", [], p_suspend),
    op!("exact-core", "hom_complex", ["validate", "stable"], p_hom_complex),
    op!("exact-core", "homology", ["dk-roundtrip", "stable"], p_homology),
    op!("exact-core", "truncate_nonneg / op_complex", ["compare"], p_truncate),
    op!("ainfty", "check_relations", ["validate"], p_check_relations),
    op!("ainfty", "check_strict_units", ["validate"], p_units),
    op!("ainfty", "bar_convert", [], p_bar),
    op!("ainfty", "compose_functors", [], p_compose_functors),
    op!("ainfty", "check_functor", [], p_check_functor),
    op!("ainfty", "embed_dg / h0_category", [], p_embed_h0),
    op!("nerve", "standard_simplex_category", ["validate"], p_standard),
    op!("nerve", "coface_functor / codegeneracy_functor", [], p_cofaces),
    op!("nerve", "validate_simplex", ["validate", "fill-horn", "compare"], p_validate_simplex),
    op!("nerve", "face / degeneracy", ["fill-horn"], p_faces),
    op!("nerve", "fill_inner_horn", ["fill-horn"], p_fill),
    op!("nerve", "pushforward", [], p_pushforward),
    op!("doldkan", "normalized_complex", ["dk-roundtrip"], p_normalized),
    op!("doldkan", "dk", ["dk-roundtrip"], p_dk),
    op!("doldkan", "pi_boundary_check", ["dk-roundtrip"], p_pi_boundary),
    op!("doldkan", "decompose", ["dk-roundtrip"], p_decompose),
    op!("doldkan", "aw / ez", ["dk-roundtrip"], p_awez),
    op!("doldkan", "mapping_space / compose_simplices", ["compare"], p_mapping),
    op!("scat", "poset_interval", ["cube"], p_poset),
    op!("scat", "cube_decomposition", ["cube"], p_cube),
    op!("scat", "validate_big_simplex", ["validate", "compare"], p_big_validate),
    op!("scat", "big_to_small", ["compare"], p_big_to_small),
    op!("scat", "comparison_naturality_check", ["compare"], p_naturality),
    op!("pretr", "validate_twisted / tw_hom", ["validate", "stable"], p_twisted),
    op!("pretr", "shift_tw / cone_tw", ["stable"], p_cone_shift),
    op!("pretr", "cone_hom_matrices", [], p_cone_hom),
    op!("pretr", "path_complex", [], p_path),
    op!("pretr", "homotopy_pullback", [], p_pullback),
    op!("pretr", "fiber_cofiber_check", ["stable"], p_fiber_cofiber),
    op!("pretr", "stability_witnesses", ["stable"], p_witnesses),
    op!("pretr", "les_check", ["stable"], p_les),
    op!("cli", "cmd_validate", ["validate"], p_cmd_validate),
    op!("cli", "cmd_fill_horn", ["fill-horn"], p_cmd_fill_horn),
    op!("cli", "cmd_compare", ["compare"], p_cmd_compare),
    op!("cli", "cmd_cube", ["cube"], p_cmd_cube),
    op!("cli", "cmd_dk_roundtrip", ["dk-roundtrip"], p_cmd_dk_roundtrip),
    op!("cli", "cmd_stable", ["stable"], p_cmd_stable),
];

/// The subcommands of the `dgn` binary.
pub const COMMAND_NAMES: &[&str] = &["validate", "fill-horn", "compare", "cube", "dk-roundtrip", "stable", "self-test"];

/// The document the cli probes run on.
pub const BUILTIN_DOC: &str = r#"{
  "seed": 11,
  "categories": [
    { "kind": "standard_simplex", "id": "D3", "n": 3 },
    { "kind": "random_chain", "id": "C", "objects": 3, "max_dim": 2, "zero_object": true },
    { "kind": "concentrated", "id": "Q", "objects": 3, "max_dim": 1 }
  ],
  "complexes": [ { "id": "A", "lo": 0, "dims": [1, 2, 2, 1] } ],
  "simplices": [ { "id": "s", "category": "C", "objects": ["X0", "X1", "X2", "X0"] } ],
  "big_simplices": [ { "id": "b", "category": "Q", "objects": ["X0", "X1", "X2"] } ],
  "twisted": [ { "id": "t", "category": "C", "steps": 2 } ]
}"#;

fn ensure(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn space(basis: &[(&str, i32)]) -> GradedSpace {
    GradedSpace::new(basis.iter().map(|&(l, d)| (l.to_string(), d)).collect()).expect("distinct labels")
}

fn chain(rng: &mut ChaCha8Rng, levels: usize) -> ChainComplex {
    let dims: Vec<usize> = (0..levels).map(|_| rng.gen_range(0..=2)).collect();
    random::complex(Field::Rational, Grading::Chain, 0, &dims, rng)
}

/// Three random objects and the zero complex as object 3.
fn category(rng: &mut ChaCha8Rng) -> ChainDgCategory {
    let shapes = random_shapes(3, 2, rng);
    let mut c = random_chain_category(Field::Rational, &shapes, rng);
    c.push("0".into(), ChainComplex::zero(Grading::Cochain));
    c
}

fn closed_map(rng: &mut ChaCha8Rng) -> (ChainDgCategory, usize, usize, Vec<Scalar>, usize) {
    let c = category(rng);
    let (x, y, z) = (rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
    let f = c.random_closed(x, y, rng);
    (c, x, y, f, z)
}

fn functors_agree(a: &dyn FunctorLike, b: &dyn FunctorLike, src: &dyn AInfinity, n_max: usize) -> bool {
    for n in 1..=n_max {
        for objs in object_strings(src, n) {
            let spaces = arg_spaces(src, &objs);
            for tuple in basis_tuples(&spaces) {
                let args: Vec<Vec<Scalar>> = spaces.iter().zip(&tuple).map(|(s, &i)| vector::unit(s.dim(), i)).collect();
                let refs: Vec<&[Scalar]> = args.iter().map(|v| v.as_slice()).collect();
                if a.object(objs[0]) != b.object(objs[0]) || a.f(&objs, &refs) != b.f(&objs, &refs) {
                    return false;
                }
            }
        }
    }
    true
}

fn p_compose_graded(_: &mut ChaCha8Rng) -> Result<(), String> {
    let v = space(&[("a", 0), ("b", 1), ("c", 1)]);
    let (_, s) = suspend(&v);
    let g = compose_graded(&s, &GradedMap::identity(&v)).map_err(err)?;
    ensure(g == s, "s∘id = s")?;
    ensure(compose_graded(&GradedMap::identity(&v), &s).is_err(), "mismatched composition is refused")
}

fn p_tensor_maps(_: &mut ChaCha8Rng) -> Result<(), String> {
    let (v, w) = (space(&[("a", 0), ("b", 1)]), space(&[("x", -1), ("y", 2), ("z", 0)]));
    let t = tensor_maps(&GradedMap::identity(&v), &GradedMap::identity(&w));
    ensure(t.degree == 0 && t.matrix == Matrix::identity(6), "id⊗id = id")?;
    // (s⊗s) picks up (−1)^{deg x} on x⊗y
    let ((_, sv), (_, sw)) = (suspend(&v), suspend(&w));
    let t = tensor_maps(&sv, &sw);
    ensure(t.degree == -2 && t.matrix.get(3, 3) == &Scalar::from_int(-1) && t.matrix.get(0, 0).is_one(), "Koszul sign")
}

fn p_suspend(_: &mut ChaCha8Rng) -> Result<(), String> {
    let v = space(&[("a", 0), ("b", 3)]);
    let (sv, s) = suspend(&v);
    ensure(s.degree == -1 && (0..2).all(|i| sv.degree(i) == v.degree(i) - 1), "degrees drop by one")
}

fn p_hom_complex(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b) = (chain(rng, 3), chain(rng, 3));
    let h = hom_complex(&a, &b);
    ensure(h.is_valid(), "d∘d = 0")?;
    ensure(h.total_dim() == a.total_dim() * b.total_dim(), "total dimension")?;
    // χ(Hom(A,B)) = χ(A)χ(B) up to the sign of the grading
    let chi = |c: &ChainComplex| c.levels().map(|n| if n % 2 == 0 { c.dim(n) as i64 } else { -(c.dim(n) as i64) }).sum::<i64>();
    ensure(chi(&h) == chi(&a) * chi(&b), "Euler characteristic")
}

fn p_homology(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let a = chain(rng, 4);
    let h = a.homology();
    let euler = |f: &dyn Fn(i32) -> usize| a.levels().map(|n| if n % 2 == 0 { f(n) as i64 } else { -(f(n) as i64) }).sum::<i64>();
    ensure(euler(&|n| a.dim(n)) == euler(&|n| h.get(&n).copied().unwrap_or(0)), "Euler characteristic")
}

fn p_truncate(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let dims: Vec<usize> = (0..4).map(|_| rng.gen_range(1..=2)).collect();
    let a = random::complex(Field::Rational, Grading::Chain, -1, &dims, rng);
    let t = truncate_nonneg(&a);
    ensure(t.is_valid() && t.lo >= 0, "τ≥0 is a complex in levels ≥ 0")?;
    ensure((0..=a.hi()).all(|n| t.homology_dim(n) == a.homology_dim(n)), "τ≥0 keeps H_n for n ≥ 0")?;
    ensure(op_complex(&op_complex(&a)) == a, "op∘op = id")
}

fn p_check_relations(_: &mut ChaCha8Rng) -> Result<(), String> {
    let c = standard_simplex_category(3);
    ensure(check_relations(&c, 6).passed(), "A∞[Δ³] relations")
}

fn p_units(_: &mut ChaCha8Rng) -> Result<(), String> {
    ensure(check_strict_units(&standard_simplex_category(3)).is_empty(), "A∞[Δ³] units")
}

fn p_bar(_: &mut ChaCha8Rng) -> Result<(), String> {
    let c = standard_simplex_category(3);
    let b = bar_convert(&c);
    let r = check_bar_relations(&b, 6);
    ensure(r.passed() && r.checked == check_relations(&c, 6).checked, "bar relations")?;
    ensure(check_relations(&from_bar(&b), 6).passed(), "round trip through the bar side")
}

fn p_compose_functors(_: &mut ChaCha8Rng) -> Result<(), String> {
    let c = standard_simplex_category(2);
    let id = identity_functor(&c);
    let twice = compose_functors(&id, &id, &c, &c, 2).map_err(err)?;
    ensure(functors_agree(&twice, &id, &c, 2), "id∘id = id")
}

fn p_check_functor(_: &mut ChaCha8Rng) -> Result<(), String> {
    let d = coface_functor(1, 3).map_err(err)?;
    ensure(check_functor(&d, &standard_simplex_category(2), &standard_simplex_category(3), 3).passed(), "δ₁ is a functor")
}

fn p_embed_h0(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let c = category(rng);
    let e = embed_dg(&c).map_err(err)?;
    ensure(check_relations(&e, 3).passed(), "embedded dg-category is A∞")?;
    let h = h0_category(&c).map_err(err)?;
    for x in 0..c.num_objects() {
        for y in 0..c.num_objects() {
            let hc = homotopy_category_dim(&c, x, y).map_err(err)?;
            ensure(h.dim(x, y) == hc, "H⁰ = homotopy category")?;
        }
    }
    Ok(())
}

fn p_standard(_: &mut ChaCha8Rng) -> Result<(), String> {
    let c = standard_simplex_category(4);
    ensure(c.num_objects() == 5 && c.is_dg(), "five objects, dg")?;
    ensure((0..5).all(|i| (0..5).all(|j| (c.hom(i, j).dim() == 0) == (i > j))), "homs only upward")
}

fn p_cofaces(_: &mut ChaCha8Rng) -> Result<(), String> {
    let n = 3;
    let base = standard_simplex_category(n - 1);
    let id = identity_functor(&base);
    for j in 0..n {
        let s = codegeneracy_functor(j, n).map_err(err)?;
        let d = coface_functor(j, n).map_err(err)?;
        let sd = compose_functors(&s, &d, &base, &base, 2).map_err(err)?;
        ensure(functors_agree(&sd, &id, &base, 2), "σ_j δ_j = id")?;
    }
    Ok(())
}

fn p_validate_simplex(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let c = category(rng);
    let s = random_simplex(&c, vec![0, 1, 2, 0], rng).map_err(err)?;
    ensure(validate_simplex(&c, &s).map_err(err)?.passed(), "random simplex is valid")
}

fn p_faces(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let c = category(rng);
    let s = random_simplex(&c, vec![2, 0, 1], rng).map_err(err)?;
    for j in 0..=2 {
        let back = face(&c, &degeneracy(&c, &s, j).map_err(err)?, j).map_err(err)?;
        ensure(back == s, "d_j s_j = id")?;
    }
    Ok(())
}

fn p_fill(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let c = category(rng);
    let s = random_simplex(&c, vec![0, 1, 2], rng).map_err(err)?;
    let filled = fill_inner_horn(&c, &horn_of(&s, 1).map_err(err)?).map_err(err)?;
    ensure(validate_simplex(&c, &filled).map_err(err)?.passed(), "filler is valid")?;
    let composite = c.m(&[0, 1, 2], &[filled.get(&[1, 2]).map_err(err)?, filled.get(&[0, 1]).map_err(err)?]);
    ensure(filled.get(&[0, 2]).map_err(err)? == &composite, "Λ²₁ is filled by composition")
}

fn p_pushforward(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let c = category(rng);
    let s = random_simplex(&c, vec![1, 0, 2], rng).map_err(err)?;
    ensure(pushforward(&identity_functor(&c), &c, &c, &s).map_err(err)? == s, "id_* = id")
}

fn p_normalized(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let x = dk(&chain(rng, 3), 3).map_err(err)?;
    ensure(normalized_complex(&x.space).map_err(err)? == Normalized::new(&x.space).map_err(err)?.complex, "N agrees")
}

fn p_dk(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let a = chain(rng, 3);
    let x = dk(&a, 3).map_err(err)?;
    ensure(x.space.dim(2) == a.dim(0) + 2 * a.dim(1) + a.dim(2), "dim DK₂ = a₀ + 2a₁ + a₂")?;
    ensure(x.space.identity_failures().is_empty(), "simplicial identities")
}

fn p_pi_boundary(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let x = dk(&chain(rng, 4), 3).map_err(err)?;
    for n in 0..=3 {
        ensure(pi_boundary_check(&x, n).map_err(err)?.passed(), "π commutes with the boundary")?;
    }
    Ok(())
}

fn p_decompose(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let x = dk(&chain(rng, 4), 3).map_err(err)?;
    let v = random::vector(Field::Rational, x.space.dim(3), rng);
    let comps = decompose(&x.space, 3, &v).map_err(err)?;
    ensure(reassemble(&x.space, 3, &comps).map_err(err)? == v, "reassemble ∘ decompose = id")
}

fn p_awez(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let x = dk(&chain(rng, 3), 2).map_err(err)?.space;
    let nx = Normalized::new(&x).map_err(err)?;
    let ctx = AwEz::new(&x, &x, &nx, &nx);
    for n in 0..=2 {
        let t = random::vector(Field::Rational, ctx.tensor.dim(n as i32), rng);
        let raw = ez_tensor(&ctx, n, &t).map_err(err)?;
        ensure(aw(&ctx, n, &raw, SignMode::Classical).map_err(err)? == t, "aw∘ez = id")?;
    }
    Ok(())
}

fn p_mapping(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let c = category(rng);
    let (x, y, z) = (0, 1, 2);
    let (mxy, myz, mxz) =
        (mapping_space(&c, x, y, 1).map_err(err)?, mapping_space(&c, y, z, 1).map_err(err)?, mapping_space(&c, x, z, 1).map_err(err)?);
    let (f, g) = (c.random_closed(x, y, rng), c.random_closed(y, z, rng));
    let b = mxy.from_hom(0, &f).ok_or("f is a vertex")?;
    let a = myz.from_hom(0, &g).ok_or("g is a vertex")?;
    let out = compose_simplices(&c, &mxy, &myz, &mxz, 0, &b, &a).map_err(err)?;
    ensure(mxz.to_hom(0, &out) == c.m(&[x, y, z], &[&g, &f]), "vertices compose as maps")
}

fn p_poset(_: &mut ChaCha8Rng) -> Result<(), String> {
    let s = poset_interval(0, 3, 3).map_err(err)?;
    ensure((s.count(0), s.count(1), s.count(2)) == (4, 5, 2), "Map(0,3) of Δ³ is a square of two triangles")
}

fn p_cube(_: &mut ChaCha8Rng) -> Result<(), String> {
    let cube = cube_decomposition(4).map_err(err)?;
    ensure(cube.summary() == "top=6 vertices=8 facets=6" && cube.identifications.len() == 6, "m = 4 counts")
}

fn big_instance(rng: &mut ChaCha8Rng) -> Result<(ChainDgCategory, dgn_scat::BigNerveSimplex), String> {
    let c = random_concentrated_category(Field::Rational, 3, 1, rng);
    let objects = (0..3).map(|_| rng.gen_range(0..3)).collect();
    let s = random_big_simplex(&c, objects, rng).map_err(err)?;
    Ok((c, s))
}

fn p_big_validate(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, s) = big_instance(rng)?;
    ensure(validate_big_simplex(&c, &s).map_err(err)?.passed(), "random big simplex is valid")
}

fn p_big_to_small(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, s) = big_instance(rng)?;
    let small = big_to_small(&c, &s).map_err(err)?;
    ensure(validate_simplex(&c, &small).map_err(err)?.passed(), "image is a small-nerve simplex")
}

fn p_naturality(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, s) = big_instance(rng)?;
    ensure(comparison_naturality_check(&c, &s).map_err(err)?.passed(), "comparison is simplicial")
}

fn p_twisted(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let c = category(rng);
    let k = random_twisted(&c, 2, rng).map_err(err)?;
    ensure(validate_twisted(&c, &k).map_err(err)?.passed(), "Maurer-Cartan")?;
    let kp = random_twisted(&c, 1, rng).map_err(err)?;
    ensure(tw_hom(&c, &k, &kp).map_err(err)?.is_valid(), "tw_hom d∘d = 0")
}

fn p_cone_shift(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, x, y, f, _) = closed_map(rng);
    let cone = cone_tw(&c, &TwistedComplex::embed(x), &TwistedComplex::embed(y), &TwElement::from([((0, 0), f)])).map_err(err)?;
    ensure(validate_twisted(&c, &cone).map_err(err)?.passed(), "cone is twisted")?;
    ensure(validate_twisted(&c, &shift_tw(&cone, 1)).map_err(err)?.passed(), "shift is twisted")
}

fn p_cone_hom(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, x, y, f, z) = closed_map(rng);
    let (out, into) = cone_hom_matrices(&c, x, y, &f, z).map_err(err)?;
    let cone = cone_tw(&c, &TwistedComplex::embed(x), &TwistedComplex::embed(y), &TwElement::from([((0, 0), f)])).map_err(err)?;
    let ez = TwistedComplex::embed(z);
    let (h_out, h_into) = (TwHom::new(&c, &cone, &ez).map_err(err)?, TwHom::new(&c, &ez, &cone).map_err(err)?);
    ensure(out.is_valid() && into.is_valid(), "block complexes square to zero")?;
    let same = |a: &ChainComplex, h: &TwHom| (a.lo.min(-4)..=a.hi().max(4)).all(|k| a.dim(k) == h.dim(k));
    ensure(same(&out, &h_out) && same(&into, &h_into), "block dimensions match tw_hom")
}

fn p_path(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b) = (chain(rng, 3), chain(rng, 3));
    let f = random_chain_map(&a, &b, rng).map_err(err)?;
    let p = path_complex(&a, &b, &f).map_err(err)?;
    ensure((0..=3).all(|n| p.complex.homology_dim(n) == a.homology_dim(n)), "H(P(f)) = H(A)")?;
    ensure(p.i.is_quasi_iso(&a, &p.complex).map_err(err)?, "A → P(f) is a quasi-isomorphism")
}

fn p_pullback(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let x = chain(rng, 4);
    let pb = homotopy_pullback(&Cospan::loops(&x)).map_err(err)?;
    ensure((0..=3).all(|n| pb.complex.homology_dim(n) == x.homology_dim(n + 1)), "H_n(ΩX) = H_{n+1}(X)")
}

fn p_fiber_cofiber(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, x, y, f, z) = closed_map(rng);
    ensure(fiber_cofiber_check(&c, x, y, &f, z).map_err(err)?.passed(), "both comparisons are quasi-isomorphisms")
}

fn p_witnesses(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, x, y, f, _) = closed_map(rng);
    ensure(stability_witnesses(&c, x, y, &f).map_err(err)?.passed(), "witness identities")
}

fn p_les(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, x, y, f, z) = closed_map(rng);
    ensure(les_check(&c, x, y, &f, z).map_err(err)?.passed(), "exact at every node")
}

fn builtin() -> Result<Workspace, String> {
    Workspace::build(&parse_document(BUILTIN_DOC).map_err(err)?, &Overrides::default()).map_err(err)
}

fn passed(r: Report) -> Result<(), String> {
    if r.passed() {
        Ok(())
    } else {
        let failed: Vec<String> = r.checks.iter().filter(|c| c.status == crate::Status::Fail).map(|c| c.name.clone()).collect();
        Err(format!("failed checks: {}", failed.join("; ")))
    }
}

fn p_cmd_validate(_: &mut ChaCha8Rng) -> Result<(), String> {
    passed(cmd_validate(&builtin()?))
}

fn p_cmd_fill_horn(_: &mut ChaCha8Rng) -> Result<(), String> {
    passed(cmd_fill_horn(&builtin()?, "s", 2).map_err(err)?)
}

fn p_cmd_compare(_: &mut ChaCha8Rng) -> Result<(), String> {
    passed(cmd_compare(&builtin()?, "b").map_err(err)?)
}

fn p_cmd_cube(_: &mut ChaCha8Rng) -> Result<(), String> {
    let r = cmd_cube(&builtin()?, 4).map_err(err)?;
    ensure(r.lines.first().map(String::as_str) == Some("top=6 vertices=8 facets=6"), "summary line")?;
    passed(r)
}

fn p_cmd_dk_roundtrip(_: &mut ChaCha8Rng) -> Result<(), String> {
    let r = cmd_dk_roundtrip(&builtin()?, "A").map_err(err)?;
    ensure(r.lines.iter().any(|l| l == "N∘DK diff = 0"), "N∘DK diff = 0")?;
    passed(r)
}

fn p_cmd_stable(_: &mut ChaCha8Rng) -> Result<(), String> {
    let r = cmd_stable(&builtin()?, "C", 5).map_err(err)?;
    ensure(r.lines.iter().any(|l| l == "quasi-iso passes = 5/5"), "all trials pass")?;
    passed(r)
}

/// Runs every probe and checks that the coverage table is complete.
pub fn cmd_self_test(ws: &Workspace) -> Report {
    let mut r = Report::new("self-test", &ws.settings);
    for (k, op) in OPERATIONS.iter().enumerate() {
        let mut rng = ws.settings.rng(COMMANDS << 32 | 0x100 | k as u64);
        let outcome = (op.probe)(&mut rng);
        let name = format!("{}::{}", op.module, op.name);
        let detail = format!("via {}", op.commands.join(", "));
        match outcome {
            Ok(()) => r.check(name, true, detail),
            Err(e) => r.defects(name, detail, vec![e]),
        }
    }
    let unknown: Vec<String> = OPERATIONS
        .iter()
        .flat_map(|op| op.commands.iter().filter(|c| !COMMAND_NAMES.contains(c)).map(move |c| format!("{} names {c}", op.name)))
        .collect();
    r.defects("coverage table names only existing commands", "", unknown);
    let mut modules: Vec<&str> = OPERATIONS.iter().map(|op| op.module).collect();
    modules.dedup();
    for m in &modules {
        r.count(format!("operations.{m}"), OPERATIONS.iter().filter(|op| op.module == *m).count());
    }
    r.line(format!("{} operations across {} modules", OPERATIONS.len(), modules.len()));
    r
}
