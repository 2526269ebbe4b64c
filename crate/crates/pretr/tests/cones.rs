mod common;

use common::{category, instance, rng};
use dgn_core::{vector, ChainComplex, Matrix, Scalar};
use dgn_pretr::twisted::TwElement;
use dgn_pretr::{
    cone_hom_matrices, cone_tw, mapping_cone, printed_cone_hom_matrices, tw_hom, ChainDgCategory, TwHom,
    TwistedComplex,
};

fn cone(c: &ChainDgCategory, x: usize, y: usize, f: &[Scalar]) -> TwistedComplex {
    let f = TwElement::from([((0, 0), f.to_vec())]);
    cone_tw(c, &TwistedComplex::embed(x), &TwistedComplex::embed(y), &f).unwrap()
}

/// Columns of the block complex (`Y` block first) in `tw_hom` coordinates
/// (`X` component first), as a permutation matrix per degree.
fn identification(h: &TwHom, k: i32, y_first: (usize, usize), x_second: (usize, usize)) -> Matrix {
    let n = h.dim(k);
    let mut cols = Vec::new();
    for (a, b) in [y_first, x_second] {
        if let Some(range) = h.block_range(k, a, b) {
            for i in range {
                cols.push(vector::unit(n, i));
            }
        }
    }
    Matrix::from_columns(&cols, n)
}

fn assert_identified(block: &ChainComplex, tw: &ChainComplex, h: &TwHom, keys: [(usize, usize); 2]) {
    let lo = block.lo.min(tw.lo) - 1;
    let hi = block.hi().max(tw.hi()) + 1;
    for k in lo..=hi {
        assert_eq!(block.dim(k), tw.dim(k), "degree {k}");
        let p = identification(h, k, keys[0], keys[1]);
        let q = identification(h, k + 1, keys[0], keys[1]);
        assert_eq!(tw.d_out(k).mul(&p).unwrap(), q.mul(&block.d_out(k)).unwrap(), "degree {k}");
    }
}

#[test]
fn block_complexes_equal_twisted_homs_entrywise() {
    for seed in 0..50 {
        let (c, x, y, f, z) = instance(&mut rng(500 + seed));
        let (out, into) = cone_hom_matrices(&c, x, y, &f, z).unwrap();
        let k = cone(&c, x, y, &f);
        let ez = TwistedComplex::embed(z);
        let h_out = TwHom::new(&c, &k, &ez).unwrap();
        assert_identified(&out, &h_out.complex().unwrap(), &h_out, [(1, 0), (0, 0)]);
        let h_into = TwHom::new(&c, &ez, &k).unwrap();
        assert_identified(&into, &h_into.complex().unwrap(), &h_into, [(0, 1), (0, 0)]);
    }
}

#[test]
fn zero_map_gives_block_diagonal_differentials() {
    let mut r = rng(6);
    let c = category(&mut r);
    let (x, y, z) = (0, 1, 2);
    let f = vector::zeros(c.hom_space(x, y).dim());
    let (out, _) = cone_hom_matrices(&c, x, y, &f, z).unwrap();
    let (yz, xz) = (c.hom_space(y, z).complex(), c.hom_space(x, z).complex());
    for k in out.lo..=out.hi() {
        let (p, p1) = (yz.dim(k), yz.dim(k + 1));
        let d = out.d_out(k);
        if d.rows() == 0 {
            continue;
        }
        assert_eq!(d.block(0, 0, p1, p), yz.d_out(k));
        assert!(d.block(p1, 0, d.rows() - p1, p).is_zero());
        assert!(d.block(0, p, p1, d.cols() - p).is_zero());
        assert_eq!(d.block(p1, p, d.rows() - p1, d.cols() - p), xz.d_out(k - 1));
    }
}

#[test]
fn identity_gives_acyclic_block_complexes() {
    for seed in 0..10 {
        let mut r = rng(600 + seed);
        let c = category(&mut r);
        for x in 0..3 {
            let id = c.hom_space(x, x).identity();
            let (out, into) = cone_hom_matrices(&c, x, x, &id, (x + 1) % 3).unwrap();
            assert!(out.is_acyclic() && into.is_acyclic());
        }
    }
}

#[test]
fn printed_blocks_agree_up_to_a_sign_or_fail_to_square_to_zero() {
    let mut into_failures = 0;
    for seed in 0..30 {
        let (c, x, y, f, z) = instance(&mut rng(700 + seed));
        let (out, into) = cone_hom_matrices(&c, x, y, &f, z).unwrap();
        let (printed_out, printed_into) = printed_cone_hom_matrices(&c, x, y, &f, z).unwrap();
        // (−1)^k(−∘f) is conjugate to (−1)^{k+1}(−∘f) by −1 on Hom(X, Z)
        assert!(printed_out.is_valid());
        for k in out.lo..=out.hi() {
            let sign = |k: i32| {
                let p = c.hom_space(y, z).degree_range(k).len();
                let n = out.dim(k);
                Matrix::from_fn(n, n, |i, j| if i != j { Scalar::zero() } else if i < p { Scalar::one() } else { -Scalar::one() })
            };
            let conj = sign(k + 1).mul(&printed_out.d_out(k)).unwrap().mul(&sign(k)).unwrap();
            assert_eq!(conj, out.d_out(k));
        }
        assert!(into.is_valid());
        into_failures += usize::from(!printed_into.is_valid());
    }
    assert!(into_failures > 0);
}

#[test]
fn mapping_cone_object_represents_the_twisted_cone() {
    for seed in 0..25 {
        let (c, x, y, f, z) = instance(&mut rng(800 + seed));
        let mut d = c.clone();
        let obj = mapping_cone(&c, x, y, &f).unwrap();
        let w = d.push("Cone".into(), obj);
        let k = cone(&c, x, y, &f);
        let ez = TwistedComplex::embed(z);
        let (a, b) = (d.hom_space(w, z).complex(), tw_hom(&c, &k, &ez).unwrap());
        let (a2, b2) = (d.hom_space(z, w).complex(), tw_hom(&c, &ez, &k).unwrap());
        for n in -6..=6 {
            assert_eq!(a.dim(n), b.dim(n));
            assert_eq!(a.homology_dim(n), b.homology_dim(n), "seed {seed}, degree {n}");
            assert_eq!(a2.homology_dim(n), b2.homology_dim(n), "seed {seed}, degree {n}");
        }
    }
}
