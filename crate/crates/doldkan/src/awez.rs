//! Alexander-Whitney and Eilenberg-Zilber maps between `N(X×Y)` and
//! `N(X)⊗N(Y)`.
//!
//! Vectors of `(X×Y)_n = X_n⊗Y_n` are laid out as in `Matrix::kron`. Tensor
//! coordinates are those of `ChainComplex::tensor` on the two normalized
//! complexes.

use dgn_core::{vector, ChainComplex, Matrix, Scalar, Vector};
use serde::{Deserialize, Serialize};

use crate::simplicial::{Normalized, SimplicialVS};
use crate::DkError;

/// Sign convention for the Alexander-Whitney map.
///
/// `Paper` multiplies the `(p, q)` summand by `(−1)^{np+1}`; `Classical`
/// uses no sign. Only `Classical` gives `aw∘ez = id` and a chain map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignMode {
    Paper,
    #[default]
    Classical,
}

impl std::str::FromStr for SignMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper" => Ok(SignMode::Paper),
            "classical" => Ok(SignMode::Classical),
            _ => Err(format!("unknown sign mode {s:?}")),
        }
    }
}

/// `(μ, ν, sign)` over all `(p, q)`-shuffles of `{0, …, p+q−1}`; `μ` has
/// `p` entries and `sign` is that of the permutation `(μ₁…μ_p ν₁…ν_q)`.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>, Scalar)> {
    fn choose(from: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            choose(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let n = p + q;
    let mut mus = Vec::new();
    choose(0, n, p, &mut Vec::new(), &mut mus);
    mus.into_iter()
        .map(|mu| {
            let nu: Vec<usize> = (0..n).filter(|i| !mu.contains(i)).collect();
            let inversions = mu.iter().map(|&m| nu.iter().filter(|&&v| v < m).count()).sum::<usize>();
            (mu, nu, Scalar::sign(inversions as i64))
        })
        .collect()
}

/// Two simplicial spaces with their normalizations.
pub struct AwEz<'a> {
    pub x: &'a SimplicialVS,
    pub y: &'a SimplicialVS,
    pub nx: &'a Normalized,
    pub ny: &'a Normalized,
    /// `N(X) ⊗ N(Y)`.
    pub tensor: ChainComplex,
}

impl<'a> AwEz<'a> {
    pub fn new(x: &'a SimplicialVS, y: &'a SimplicialVS, nx: &'a Normalized, ny: &'a Normalized) -> Self {
        AwEz { x, y, nx, ny, tensor: nx.complex.tensor(&ny.complex) }
    }

    pub fn level_cap(&self) -> usize {
        self.x.level_cap.min(self.y.level_cap)
    }

    fn check(&self, n: usize) -> Result<(), DkError> {
        if n > self.level_cap() {
            return Err(DkError::OutOfCap { level: n, cap: self.level_cap() });
        }
        Ok(())
    }

    /// `d_i ⊗ d_i` on `X_n ⊗ Y_n`.
    pub fn product_face(&self, n: usize, i: usize, v: &[Scalar]) -> Result<Vector, DkError> {
        Ok(self.x.face(n, i).kron_mul_vec(self.y.face(n, i), v)?)
    }

    /// The alternating face sum of `X×Y` leaving level `n`.
    pub fn product_moore(&self, n: usize, v: &[Scalar]) -> Result<Vector, DkError> {
        let mut out = vector::zeros(if n == 0 { 0 } else { self.x.dim(n - 1) * self.y.dim(n - 1) });
        for i in 0..if n == 0 { 0 } else { n + 1 } {
            vector::axpy(&mut out, &Scalar::sign(i as i64), &self.product_face(n, i, v)?);
        }
        Ok(out)
    }

    /// Whether a vector of `X_n ⊗ Y_n` is killed by `d_i ⊗ d_i` for `i < n`.
    pub fn is_normalized(&self, n: usize, v: &[Scalar]) -> Result<bool, DkError> {
        for i in 0..n {
            if !vector::is_zero(&self.product_face(n, i, v)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `Σ_{p+q=n} d̃^p(x) ⊗ d_0^q(y)`, projected to `N(X) ⊗ N(Y)`, in tensor
/// coordinates. `z` is a vector of `X_n ⊗ Y_n`.
pub fn aw(ctx: &AwEz, n: usize, z: &[Scalar], mode: SignMode) -> Result<Vector, DkError> {
    ctx.check(n)?;
    let (nx, ny) = (&ctx.nx.complex, &ctx.ny.complex);
    let mut out = vector::zeros(ctx.tensor.dim(n as i32));
    for p in 0..=n {
        let q = n - p;
        // the front face i ↦ i and the back face i ↦ p + i
        let front: Vec<usize> = (0..=p).collect();
        let back: Vec<usize> = (p..=n).collect();
        let f = ctx.nx.projections[p].mul(&ctx.x.operator(&front, n)?)?;
        let b = ctx.ny.projections[q].mul(&ctx.y.operator(&back, n)?)?;
        let mut piece = f.kron_mul_vec(&b, z)?;
        if mode == SignMode::Paper {
            piece = vector::scale(&Scalar::sign((n * p + 1) as i64), &piece);
        }
        let at = nx.tensor_offset(ny, n as i32, p as i32);
        for (k, v) in piece.into_iter().enumerate() {
            out[at + k] = v;
        }
    }
    Ok(out)
}

fn apply_degeneracies(x: &SimplicialVS, level: usize, idx: &[usize], v: Vector) -> Result<Vector, DkError> {
    // s_{ν_q} ∘ … ∘ s_{ν_1}: the smallest index acts first
    let mut v = v;
    for (k, &j) in idx.iter().enumerate() {
        v = x.degeneracy(level + k, j).mul_vec(&v)?;
    }
    Ok(v)
}

fn outer(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// `Σ sign(μ,ν) s_ν(x) ⊗ s_μ(y)` for `x ∈ N(X)_p`, `y ∈ N(Y)_q` given in
/// normalized coordinates; the result lies in `X_{p+q} ⊗ Y_{p+q}`.
pub fn ez(ctx: &AwEz, p: usize, q: usize, a: &[Scalar], b: &[Scalar]) -> Result<Vector, DkError> {
    let n = p + q;
    ctx.check(n)?;
    let x = ctx.nx.inclusions[p].mul_vec(a)?;
    let y = ctx.ny.inclusions[q].mul_vec(b)?;
    let mut out = vector::zeros(ctx.x.dim(n) * ctx.y.dim(n));
    for (mu, nu, sign) in shuffles(p, q) {
        let sx = apply_degeneracies(ctx.x, p, &nu, x.clone())?;
        let sy = apply_degeneracies(ctx.y, q, &mu, y.clone())?;
        vector::axpy(&mut out, &sign, &outer(&sx, &sy));
    }
    Ok(out)
}

/// `ez` on a vector of `(N(X) ⊗ N(Y))_n` in tensor coordinates.
pub fn ez_tensor(ctx: &AwEz, n: usize, t: &[Scalar]) -> Result<Vector, DkError> {
    ctx.check(n)?;
    let (nx, ny) = (&ctx.nx.complex, &ctx.ny.complex);
    let mut out = vector::zeros(ctx.x.dim(n) * ctx.y.dim(n));
    for p in 0..=n {
        let q = n - p;
        let (dx, dy) = (nx.dim(p as i32), ny.dim(q as i32));
        let at = nx.tensor_offset(ny, n as i32, p as i32);
        for i in 0..dx {
            for k in 0..dy {
                let c = &t[at + i * dy + k];
                if c.is_zero() {
                    continue;
                }
                let piece = ez(ctx, p, q, &vector::unit(dx, i), &vector::unit(dy, k))?;
                vector::axpy(&mut out, c, &piece);
            }
        }
    }
    Ok(out)
}

/// The matrix of `aw` on `X_n ⊗ Y_n`.
pub fn aw_matrix(ctx: &AwEz, n: usize, mode: SignMode) -> Result<Matrix, DkError> {
    let dim = ctx.x.dim(n) * ctx.y.dim(n);
    let cols = (0..dim).map(|i| aw(ctx, n, &vector::unit(dim, i), mode)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(&cols, ctx.tensor.dim(n as i32)))
}
