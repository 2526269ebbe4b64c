//! Alexander-Whitney and Eilenberg-Zilber maps on `DK(A) × DK(B)`.

use dgn_core::{random, vector, Field, Grading, Matrix};
use dgn_doldkan::awez::aw_matrix;
use dgn_doldkan::{aw, dk, ez, ez_tensor, shuffles, AwEz, Normalized, SignMode, SimplicialVS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Pair {
    x: SimplicialVS,
    y: SimplicialVS,
    nx: Normalized,
    ny: Normalized,
}

fn pair(seed: u64, cap: usize, max_dim: usize) -> Pair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let complex = |rng: &mut ChaCha8Rng| {
        let dims: Vec<usize> = (0..=cap).map(|_| rng.gen_range(1..=max_dim)).collect();
        random::complex(Field::Rational, Grading::Chain, 0, &dims, rng)
    };
    let x = dk(&complex(&mut rng), cap).unwrap().space;
    let y = dk(&complex(&mut rng), cap).unwrap().space;
    let (nx, ny) = (Normalized::new(&x).unwrap(), Normalized::new(&y).unwrap());
    Pair { x, y, nx, ny }
}

#[test]
fn shuffle_signs() {
    for p in 0..4 {
        let s = shuffles(p, 0);
        assert_eq!(s.len(), 1);
        assert!(s[0].2.is_one());
        assert!(shuffles(0, p)[0].2.is_one());
    }
    let s = shuffles(1, 1);
    assert_eq!(s.len(), 2);
    assert_eq!(&s[0].2 + &s[1].2, dgn_core::Scalar::zero());
    assert_eq!(shuffles(2, 3).len(), 10);
}

/// `aw∘ez` on random normalized tensors of total level `n`.
fn aw_after_ez_is_identity(p: &Pair, mode: SignMode, rng: &mut ChaCha8Rng) -> bool {
    let ctx = AwEz::new(&p.x, &p.y, &p.nx, &p.ny);
    for n in 0..=ctx.level_cap() {
        for _ in 0..3 {
            let t = random::vector(Field::Rational, ctx.tensor.dim(n as i32), rng);
            let raw = ez_tensor(&ctx, n, &t).unwrap();
            if aw(&ctx, n, &raw, mode).unwrap() != t {
                return false;
            }
        }
    }
    true
}

#[test]
fn aw_after_ez_is_the_identity_classically() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for seed in 0..6 {
        let p = pair(seed, 4, 1);
        assert!(aw_after_ez_is_identity(&p, SignMode::Classical, &mut rng), "seed {seed}");
    }
}

#[test]
fn printed_sign_breaks_aw_after_ez() {
    // on x₀ ⊗ y₀ the printed sign is (−1)^{0·0+1} = −1
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let p = pair(7, 2, 1);
    assert!(!aw_after_ez_is_identity(&p, SignMode::Paper, &mut rng));
}

#[test]
fn ez_lands_in_normalized_chains() {
    let p = pair(8, 4, 1);
    let ctx = AwEz::new(&p.x, &p.y, &p.nx, &p.ny);
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for n in 0..=4 {
        for a in 0..=n {
            let x = random::vector(Field::Rational, p.nx.complex.dim(a as i32), &mut rng);
            let y = random::vector(Field::Rational, p.ny.complex.dim((n - a) as i32), &mut rng);
            let v = ez(&ctx, a, n - a, &x, &y).unwrap();
            assert!(ctx.is_normalized(n, &v).unwrap());
        }
    }
}

/// Moore differential after `ez` against `ez` after the tensor differential.
fn ez_is_chain_map(p: &Pair, rng: &mut ChaCha8Rng) -> bool {
    let ctx = AwEz::new(&p.x, &p.y, &p.nx, &p.ny);
    for n in 1..=ctx.level_cap() {
        let t = random::vector(Field::Rational, ctx.tensor.dim(n as i32), rng);
        let lhs = ctx.product_moore(n, &ez_tensor(&ctx, n, &t).unwrap()).unwrap();
        let dt = ctx.tensor.d_out(n as i32).mul_vec(&t).unwrap();
        if lhs != ez_tensor(&ctx, n - 1, &dt).unwrap() {
            return false;
        }
    }
    true
}

/// `aw` after the Moore differential of `X×Y` against the tensor
/// differential after `aw`, on arbitrary (not only normalized) chains.
fn aw_is_chain_map(p: &Pair, mode: SignMode, rng: &mut ChaCha8Rng) -> bool {
    let ctx = AwEz::new(&p.x, &p.y, &p.nx, &p.ny);
    for n in 1..=ctx.level_cap() {
        for _ in 0..2 {
            let z = random::vector(Field::Rational, p.x.dim(n) * p.y.dim(n), rng);
            let lhs = aw(&ctx, n - 1, &ctx.product_moore(n, &z).unwrap(), mode).unwrap();
            let rhs = ctx.tensor.d_out(n as i32).mul_vec(&aw(&ctx, n, &z, mode).unwrap()).unwrap();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[test]
fn both_maps_are_chain_maps_classically() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for seed in 10..14 {
        let p = pair(seed, 4, 1);
        assert!(ez_is_chain_map(&p, &mut rng), "ez, seed {seed}");
        assert!(aw_is_chain_map(&p, SignMode::Classical, &mut rng), "aw, seed {seed}");
    }
}

#[test]
fn printed_sign_is_not_a_chain_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let p = pair(20, 3, 2);
    assert!(!aw_is_chain_map(&p, SignMode::Paper, &mut rng));
}

#[test]
fn ez_after_aw_is_the_identity_on_homology() {
    for seed in 30..34 {
        let p = pair(seed, 3, 1);
        let ctx = AwEz::new(&p.x, &p.y, &p.nx, &p.ny);
        let prod = p.x.product(&p.y);
        for n in 0..3 {
            let cycles = prod.moore_differential(n).kernel();
            let boundaries = prod.moore_differential(n + 1);
            let mut diffs = Vec::new();
            for z in cycles.columns() {
                let back = ez_tensor(&ctx, n, &aw(&ctx, n, &z, SignMode::Classical).unwrap()).unwrap();
                diffs.push(vector::sub(&back, &z));
            }
            let diffs = Matrix::from_columns(&diffs, prod.dim(n));
            // every difference is a boundary
            assert_eq!(boundaries.hstack(&diffs).unwrap().rank(), boundaries.rank(), "seed {seed} n {n}");
        }
    }
}

#[test]
fn aw_matrix_matches_the_vector_form() {
    let p = pair(40, 2, 1);
    let ctx = AwEz::new(&p.x, &p.y, &p.nx, &p.ny);
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let z = random::vector(Field::Rational, p.x.dim(2) * p.y.dim(2), &mut rng);
    let m = aw_matrix(&ctx, 2, SignMode::Classical).unwrap();
    assert_eq!(m.mul_vec(&z).unwrap(), aw(&ctx, 2, &z, SignMode::Classical).unwrap());
}
