use dgn_core::{compose_graded, suspend, tensor_maps, Field, GradedMap, GradedSpace, Matrix, Scalar};
use proptest::prelude::*;

mod common;
use common::bareiss_rank;

fn to_matrix(rows: &[Vec<i64>]) -> Matrix {
    let slices: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64(&slices)
}

fn int_matrix(r: usize, c: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
}

#[test]
fn scalar_division_by_zero_is_an_error() {
    assert!(Scalar::one().div(&Scalar::zero()).is_err());
    assert!(Field::Prime(7).int(14).inv().is_err());
    assert!(Field::Rational.parse("1/0").is_err());
}

#[test]
fn prime_field_arithmetic() {
    let f = Field::Prime(7);
    let a = f.int(3);
    assert_eq!(&a * &a.inv().unwrap(), f.one());
    assert_eq!(f.parse("1/2").unwrap(), f.int(4));
    // rationals coerce into F_p
    assert_eq!(&f.int(5) + &Scalar::from_int(3), f.int(1));
    assert_eq!(Scalar::from_int(-1), f.int(6));
}

#[test]
fn parse_and_display_round_trip() {
    for s in ["0", "-3", "5/7", "-2/9"] {
        assert_eq!(Field::Rational.parse(s).unwrap().to_string(), s);
    }
    assert_eq!(Field::Rational.parse("4/6").unwrap().to_string(), "2/3");
}

#[test]
fn kernel_and_image_of_small_matrix() {
    let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
    assert_eq!(m.rank(), 1);
    let k = m.kernel();
    assert_eq!(k.cols(), 2);
    assert!(m.mul(&k).unwrap().is_zero());
    assert_eq!(m.image().cols(), 1);
}

#[test]
fn solve_reports_inconsistency() {
    let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
    assert!(m.solve(&[Scalar::one(), Scalar::zero()]).is_none());
    let x = m.solve(&[Scalar::from_int(2), Scalar::from_int(2)]).unwrap();
    assert_eq!(m.mul_vec(&x).unwrap(), vec![Scalar::from_int(2), Scalar::from_int(2)]);
}

fn space(degrees: &[i32]) -> GradedSpace {
    GradedSpace::new(degrees.iter().enumerate().map(|(i, &d)| (format!("e{i}"), d)).collect()).unwrap()
}

#[test]
fn graded_map_rejects_degree_violations() {
    let v = space(&[0, 1]);
    let m = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
    assert!(GradedMap::new(v.clone(), v.clone(), 1, m).is_err());
    let m = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    assert!(GradedMap::new(v.clone(), v, 1, m).is_ok());
}

#[test]
fn compose_with_identity() {
    let v = space(&[0, 1, 1]);
    let f = GradedMap::new(v.clone(), v.clone(), 1, Matrix::from_i64(&[&[0, 0, 0], &[2, 0, 0], &[-1, 0, 0]])).unwrap();
    let id = GradedMap::identity(&v);
    assert_eq!(compose_graded(&id, &f).unwrap(), f);
    assert_eq!(compose_graded(&f, &f).unwrap().degree, 2);
}

#[test]
fn compose_rejects_space_mismatch() {
    let f = GradedMap::identity(&space(&[0]));
    let g = GradedMap::identity(&space(&[1]));
    assert!(compose_graded(&g, &f).is_err());
}

#[test]
fn tensor_sign_on_odd_inputs() {
    let v = space(&[1]);
    let w = space(&[0]);
    let w1 = space(&[1]);
    let f = GradedMap::identity(&v);
    let g = GradedMap::new(w.clone(), w1, 1, Matrix::from_i64(&[&[1]])).unwrap();
    let t = tensor_maps(&f, &g);
    assert_eq!(t.matrix.get(0, 0), &Scalar::from_int(-1));
    // degree-zero g never contributes a sign
    let t0 = tensor_maps(&f, &GradedMap::identity(&w));
    assert_eq!(t0.matrix.get(0, 0), &Scalar::one());
}

#[test]
fn suspension_shifts_degrees_down() {
    let v = space(&[0, 0, 1]);
    let (sv, s) = suspend(&v);
    assert_eq!(s.degree, -1);
    assert_eq!(sv.degrees(), &[-1, -1, 0]);
    let back = dgn_core::graded::desuspend_map(&s);
    assert_eq!(compose_graded(&back, &s).unwrap().matrix, Matrix::identity(3));
    let (sa, _) = suspend(&space(&[0]));
    assert_eq!(sa.label(0), "s(e0)");
}

/// A random map of degree `deg` between two 3-dimensional spaces: entries
/// breaking the degree constraint are zeroed.
fn masked(src: &GradedSpace, tgt: &GradedSpace, deg: i32, raw: &[Vec<i64>]) -> GradedMap {
    let m = Matrix::from_fn(tgt.dim(), src.dim(), |w, v| {
        if tgt.degree(w) == src.degree(v) + deg {
            Scalar::from_int(raw[w][v])
        } else {
            Scalar::zero()
        }
    });
    GradedMap::new(src.clone(), tgt.clone(), deg, m).unwrap()
}

proptest! {
    #[test]
    fn rank_matches_bareiss(rows in int_matrix(4, 5)) {
        prop_assert_eq!(to_matrix(&rows).rank(), bareiss_rank(&rows));
    }

    #[test]
    fn rank_nullity(rows in int_matrix(3, 6)) {
        let m = to_matrix(&rows);
        let k = m.kernel();
        prop_assert!(m.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.cols() + m.rank(), 6);
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn composition_matches_dense_multiply(a in int_matrix(3, 3), b in int_matrix(3, 3)) {
        let v = space(&[0, 1, 2]);
        let f = masked(&v, &v, 1, &a);
        let g = masked(&v, &v, 1, &b);
        let gf = compose_graded(&g, &f).unwrap();
        prop_assert_eq!(gf.degree, 2);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0i64;
                for k in 0..3 {
                    let gi = if v.degree(i) == v.degree(k) + 1 { b[i][k] } else { 0 };
                    let fk = if v.degree(k) == v.degree(j) + 1 { a[k][j] } else { 0 };
                    acc += gi * fk;
                }
                prop_assert_eq!(gf.matrix.get(i, j), &Scalar::from_int(acc));
            }
        }
    }

    #[test]
    fn tensor_interchange(
        a in int_matrix(2, 2), b in int_matrix(2, 2), c in int_matrix(2, 2), d in int_matrix(2, 2),
        df in 0i32..2, dg in 0i32..2, dfp in 0i32..2, dgp in 0i32..2,
    ) {
        let v = space(&[0, 1]);
        let wide = space(&[0, 1, 2, 3]);
        // f′, g′: v → wide; f, g: wide → wider
        let pad = |m: &[Vec<i64>]| -> Vec<Vec<i64>> {
            let mut out = vec![vec![0; 4]; 4];
            for i in 0..2 { for j in 0..2 { out[i + 1][j] = m[i][j]; out[i + 2][j + 2] = m[i][j]; } }
            out
        };
        let wider = space(&[0, 1, 2, 3, 4, 5]);
        let pad6 = |m: &[Vec<i64>]| -> Vec<Vec<i64>> {
            let mut out = vec![vec![0; 4]; 6];
            for i in 0..4 { for j in 0..4 { out[i.min(5)][j] = m[i % 2][j % 2] * ((i + j) as i64 % 3 - 1); } }
            out
        };
        let fp = masked(&v, &wide, dfp, &pad(&a)[..]);
        let gp = masked(&v, &wide, dgp, &pad(&b)[..]);
        let f = masked(&wide, &wider, df, &pad6(&c));
        let g = masked(&wide, &wider, dg, &pad6(&d));
        let lhs = compose_graded(&tensor_maps(&f, &g), &tensor_maps(&fp, &gp)).unwrap();
        let ff = compose_graded(&f, &fp).unwrap();
        let gg = compose_graded(&g, &gp).unwrap();
        let rhs = tensor_maps(&ff, &gg);
        let sign = Scalar::sign((dg * dfp) as i64);
        prop_assert_eq!(lhs.matrix, rhs.matrix.scale(&sign));
    }

    #[test]
    fn suspension_degree_law(degs in prop::collection::vec(-3i32..3, 0..6)) {
        let v = space(&degs);
        let (sv, _) = suspend(&v);
        for i in 0..v.dim() {
            prop_assert_eq!(sv.degree(i), v.degree(i) - 1);
        }
    }
}
