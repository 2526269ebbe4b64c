//! Path objects and homotopy pullbacks of non-negative chain complexes.
//!
//! `P(f)_n = A_n ⊕ B_{n+1} ⊕ B_n` with `d(a, β, c) = (da, −f a − dβ + c, dc)`,
//! except that level 0 is the subspace cut out by `c = dβ + f a`. Then
//! `i(a) = (a, 0, f a)` is a quasi-isomorphism, `p(a, β, c) = c` is onto in
//! positive levels and `p∘i = f`. A homotopy pullback of `X₁ → X₀ ← X₂` is
//! the levelwise fiber product of the two path fibrations over `X₀`.

use dgn_core::{vector, ChainComplex, ChainMap, Grading, Matrix, Scalar, Vector};

use crate::PretrError;

fn check_nonneg(c: &ChainComplex) -> Result<(), PretrError> {
    if c.grading != Grading::Chain || c.levels().any(|n| n < 0 && c.dim(n) > 0) {
        return Err(PretrError::NotNonNegative);
    }
    Ok(())
}

fn top(cs: &[&ChainComplex]) -> i32 {
    cs.iter().map(|c| c.hi()).max().unwrap_or(-1).max(0)
}

#[derive(Clone, Debug)]
pub struct PathObject {
    pub complex: ChainComplex,
    pub i: ChainMap,
    pub p: ChainMap,
    /// Level `n` basis in the ambient `A_n ⊕ B_{n+1} ⊕ B_n`, as columns.
    pub basis: Vec<Matrix>,
    dims: Vec<(usize, usize, usize)>,
}

impl PathObject {
    /// Dimensions of `A_n`, `B_{n+1}`, `B_n`.
    pub fn ambient_dims(&self, n: usize) -> (usize, usize, usize) {
        self.dims.get(n).copied().unwrap_or((0, 0, 0))
    }

    /// `P(f)_n` coordinates of an ambient triple, if it lies in `P(f)_n`.
    pub fn coords(&self, n: usize, a: &[Scalar], beta: &[Scalar], c: &[Scalar]) -> Option<Vector> {
        let v: Vector = a.iter().chain(beta).chain(c).cloned().collect();
        solve_at(&self.basis, n, &v)
    }
}

/// Coordinates in `basis[n]`; above the top level only zero has coordinates.
fn solve_at(basis: &[Matrix], n: usize, v: &[Scalar]) -> Option<Vector> {
    match basis.get(n) {
        Some(b) => b.solve(v),
        None => vector::is_zero(v).then(Vec::new),
    }
}

fn block3(m: &mut Matrix, r: usize, c: usize, b: &Matrix) {
    if b.rows() * b.cols() > 0 {
        m.set_block(r, c, b);
    }
}

pub fn path_complex(a: &ChainComplex, b: &ChainComplex, f: &ChainMap) -> Result<PathObject, PretrError> {
    check_nonneg(a)?;
    check_nonneg(b)?;
    if !f.is_chain_map(a, b) {
        return Err(PretrError::NotChainMap("f".into()));
    }
    let hi = top(&[a, b]);
    let dims: Vec<(usize, usize, usize)> = (0..=hi).map(|n| (a.dim(n), b.dim(n + 1), b.dim(n))).collect();
    let total = |n: i32| {
        let (x, y, z) = dims[n as usize];
        x + y + z
    };
    // the ambient differential leaving level n ≥ 1
    let ambient_d = |n: i32| {
        let (a0, b1, _) = dims[n as usize - 1];
        let (x, y, _) = dims[n as usize];
        let mut m = Matrix::zeros(total(n - 1), total(n));
        block3(&mut m, 0, 0, &a.d_out(n));
        block3(&mut m, a0, 0, &f.at(a, b, n).neg());
        block3(&mut m, a0, x, &b.d_out(n + 1).neg());
        block3(&mut m, a0, x + y, &Matrix::identity(b.dim(n)));
        block3(&mut m, a0 + b1, x + y, &b.d_out(n));
        m
    };
    // level 0: c = dβ + f a
    let (x0, y0, z0) = dims[0];
    let mut constraint = Matrix::zeros(z0, x0 + y0 + z0);
    block3(&mut constraint, 0, 0, &f.at(a, b, 0));
    block3(&mut constraint, 0, x0, &b.d_out(1));
    block3(&mut constraint, 0, x0 + y0, &Matrix::identity(z0).neg());
    let mut basis = vec![constraint.kernel()];
    for n in 1..=hi {
        basis.push(Matrix::identity(total(n)));
    }
    let mut d = vec![Matrix::zeros(0, basis[0].cols())];
    for n in 1..=hi {
        let image = ambient_d(n).mul(&basis[n as usize])?;
        let coords = basis[n as usize - 1].solve_matrix(&image).ok_or(PretrError::Core(dgn_core::CoreError::Inconsistent))?;
        d.push(coords);
    }
    let pdims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
    let complex = ChainComplex::new(Grading::Chain, 0, pdims, d)?;
    let mut i = ChainMap { maps: Default::default() };
    let mut p = ChainMap { maps: Default::default() };
    for n in 0..=hi {
        let (x, y, z) = dims[n as usize];
        let mut incl = Matrix::zeros(x + y + z, x);
        block3(&mut incl, 0, 0, &Matrix::identity(x));
        block3(&mut incl, x + y, 0, &f.at(a, b, n));
        let coords = basis[n as usize].solve_matrix(&incl).ok_or(PretrError::Core(dgn_core::CoreError::Inconsistent))?;
        i.maps.insert(n, coords);
        let mut proj = Matrix::zeros(z, x + y + z);
        block3(&mut proj, 0, x + y, &Matrix::identity(z));
        p.maps.insert(n, proj.mul(&basis[n as usize])?);
    }
    Ok(PathObject { complex, i, p, basis, dims })
}

/// `X₁ →^{f₀₁} X₀ ←^{f₀₂} X₂`.
#[derive(Clone, Debug)]
pub struct Cospan {
    pub x1: ChainComplex,
    pub x0: ChainComplex,
    pub x2: ChainComplex,
    pub f01: ChainMap,
    pub f02: ChainMap,
}

impl Cospan {
    /// `0 → X ← 0`.
    pub fn loops(x: &ChainComplex) -> Self {
        let zero = ChainComplex::zero(Grading::Chain);
        let none = ChainMap { maps: Default::default() };
        Cospan { x1: zero.clone(), x0: x.clone(), x2: zero, f01: none.clone(), f02: none }
    }
}

#[derive(Clone, Debug)]
pub struct HomotopyPullback {
    pub complex: ChainComplex,
    pub first: PathObject,
    pub second: PathObject,
    /// Level `n` basis in `P(f₀₁)_n ⊕ P(f₀₂)_n`, as columns.
    pub basis: Vec<Matrix>,
}

impl HomotopyPullback {
    /// Coordinates of a pair of path-object vectors, if it lies in the fiber product.
    pub fn coords(&self, n: usize, u: &[Scalar], v: &[Scalar]) -> Option<Vector> {
        let w: Vector = u.iter().chain(v).cloned().collect();
        solve_at(&self.basis, n, &w)
    }
}

/// `P(f₀₁) ×_{X₀} P(f₀₂)`, levelwise the kernel of `p₁ − p₂`.
pub fn homotopy_pullback(c: &Cospan) -> Result<HomotopyPullback, PretrError> {
    check_nonneg(&c.x0)?;
    let first = path_complex(&c.x1, &c.x0, &c.f01)?;
    let second = path_complex(&c.x2, &c.x0, &c.f02)?;
    let (p1, p2) = (&first.complex, &second.complex);
    let hi = top(&[p1, p2]);
    let mut basis = Vec::new();
    for n in 0..=hi {
        let m1 = first.p.at(p1, &c.x0, n);
        let m2 = second.p.at(p2, &c.x0, n);
        basis.push(m1.hstack(&m2.neg())?.kernel());
    }
    let mut d = vec![Matrix::zeros(0, basis[0].cols())];
    for n in 1..=hi {
        let (d1, d2) = (p1.d_out(n), p2.d_out(n));
        let mut both = Matrix::zeros(d1.rows() + d2.rows(), d1.cols() + d2.cols());
        block3(&mut both, 0, 0, &d1);
        block3(&mut both, d1.rows(), d1.cols(), &d2);
        let image = both.mul(&basis[n as usize])?;
        let coords = basis[n as usize - 1].solve_matrix(&image).ok_or(PretrError::Core(dgn_core::CoreError::Inconsistent))?;
        d.push(coords);
    }
    let dims = basis.iter().map(Matrix::cols).collect();
    let complex = ChainComplex::new(Grading::Chain, 0, dims, d)?;
    Ok(HomotopyPullback { complex, first, second, basis })
}

/// The independent oracle: `τ≥0` of the fiber `F_n = X₁_n ⊕ X₂_n ⊕ X₀_{n+1}`,
/// `d(x₁, x₂, y) = (dx₁, dx₂, f₀₁x₁ − f₀₂x₂ − dy)`, i.e. the cone of
/// `X₁ ⊕ X₂ → X₀` shifted down by one.
pub fn pullback_oracle(c: &Cospan) -> Result<ChainComplex, PretrError> {
    let (x1, x2, x0) = (&c.x1, &c.x2, &c.x0);
    let hi = top(&[x1, x2, x0]);
    let dim = |n: i32| x1.dim(n) + x2.dim(n) + x0.dim(n + 1);
    let mut dims = Vec::new();
    let mut d = Vec::new();
    for n in -1..=hi {
        dims.push(dim(n));
        let mut m = Matrix::zeros(if n == -1 { 0 } else { dim(n - 1) }, dim(n));
        if n >= 0 {
            let (r1, r2) = (x1.dim(n - 1), x2.dim(n - 1));
            let (c1, c2) = (x1.dim(n), x2.dim(n));
            block3(&mut m, 0, 0, &x1.d_out(n));
            block3(&mut m, r1, c1, &x2.d_out(n));
            block3(&mut m, r1 + r2, 0, &c.f01.at(x1, x0, n));
            block3(&mut m, r1 + r2, c1, &c.f02.at(x2, x0, n).neg());
            block3(&mut m, r1 + r2, c1 + c2, &x0.d_out(n + 1).neg());
        }
        d.push(m);
    }
    let full = ChainComplex::new(Grading::Chain, -1, dims, d)?;
    Ok(dgn_core::truncate_nonneg(&full))
}

/// A random chain map `a → b`: a small integer combination of a basis of
/// all chain maps.
pub fn random_chain_map(a: &ChainComplex, b: &ChainComplex, rng: &mut impl rand::Rng) -> Result<ChainMap, PretrError> {
    let levels: Vec<i32> = (a.lo.min(b.lo)..=a.hi().max(b.hi())).collect();
    let sizes: Vec<usize> = levels.iter().map(|&n| a.dim(n) * b.dim(n)).collect();
    let total: usize = sizes.iter().sum();
    let offset = |k: usize| sizes[..k].iter().sum::<usize>();
    let mut rows: Vec<Vector> = Vec::new();
    let step = a.grading.step();
    // f_{n+step} d_A = d_B f_n, entrywise in the unknowns
    for (k, &n) in levels.iter().enumerate() {
        let m = n + step;
        let (an, bm) = (a.dim(n), b.dim(m));
        let (da, db) = (a.d_out(n), b.d_out(n));
        let km = levels.iter().position(|&x| x == m);
        for r in 0..bm {
            for col in 0..an {
                let mut row = vector::zeros(total);
                if let Some(km) = km {
                    for t in 0..a.dim(m) {
                        // (f_m d_A)[r][col] = Σ_t f_m[r][t] d_A[t][col]
                        row[offset(km) + r * a.dim(m) + t] += da.get(t, col);
                    }
                }
                for t in 0..b.dim(n) {
                    row[offset(k) + t * an + col] -= db.get(r, t);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows, total)?;
    let coeffs = dgn_core::random::combination(dgn_core::Field::Rational, &system.kernel(), rng);
    let mut maps = std::collections::BTreeMap::new();
    for (k, &n) in levels.iter().enumerate() {
        let (r, c) = (b.dim(n), a.dim(n));
        if r * c > 0 {
            maps.insert(n, Matrix::from_fn(r, c, |i, j| coeffs[offset(k) + i * c + j].clone()));
        }
    }
    let f = ChainMap { maps };
    debug_assert!(f.is_chain_map(a, b));
    Ok(f)
}
