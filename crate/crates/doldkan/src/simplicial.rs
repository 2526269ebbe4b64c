//! Simplicial vector spaces given by face and degeneracy matrices, and their
//! normalized chain complexes.

use dgn_core::{ChainComplex, Grading, Matrix, Scalar};
use serde::{Deserialize, Serialize};

use crate::surj::epi_mono;
use crate::DkError;

/// `faces[n][i] = d_i : X_n → X_{n−1}` for `1 ≤ n ≤ level_cap`, and
/// `degens[n][i] = s_i : X_n → X_{n+1}` for `n < level_cap`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialVS {
    pub level_cap: usize,
    pub dims: Vec<usize>,
    pub faces: Vec<Vec<Matrix>>,
    pub degens: Vec<Vec<Matrix>>,
}

impl SimplicialVS {
    /// Every level is `𝕂^dim` and every structure map is the identity.
    pub fn constant(dim: usize, level_cap: usize) -> Self {
        let faces = (0..=level_cap).map(|n| vec![Matrix::identity(dim); if n == 0 { 0 } else { n + 1 }]).collect();
        let degens =
            (0..=level_cap).map(|n| vec![Matrix::identity(dim); if n == level_cap { 0 } else { n + 1 }]).collect();
        SimplicialVS { level_cap, dims: vec![dim; level_cap + 1], faces, degens }
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &Matrix {
        &self.degens[n][i]
    }

    fn check_level(&self, n: usize) -> Result<(), DkError> {
        if n > self.level_cap {
            return Err(DkError::OutOfCap { level: n, cap: self.level_cap });
        }
        Ok(())
    }

    /// `θ* : X_n → X_m` for a monotone `θ : [m] → [n]`, through its
    /// epi-mono factorization.
    pub fn operator(&self, theta: &[usize], n: usize) -> Result<Matrix, DkError> {
        self.check_level(n)?;
        self.check_level(theta.len() - 1)?;
        let (eps, image) = epi_mono(theta);
        // ρ = δ_{k_s} ∘ … ∘ δ_{k_1} over the missing values, so ρ* applies d_{k_s} first
        let missing: Vec<usize> = (0..=n).filter(|v| !image.contains(v)).collect();
        let mut m = Matrix::identity(self.dim(n));
        let mut level = n;
        for &k in missing.iter().rev() {
            m = self.faces[level][k].mul(&m)?;
            level -= 1;
        }
        // ε = σ_{j_1} ∘ … ∘ σ_{j_t} over the repeated positions, so ε* applies s_{j_1} first
        let repeats: Vec<usize> = (0..eps.len() - 1).filter(|&j| eps[j] == eps[j + 1]).collect();
        for &j in &repeats {
            m = self.degens[level][j].mul(&m)?;
            level += 1;
        }
        Ok(m)
    }

    /// The same data up to level `cap`.
    pub fn truncated(&self, cap: usize) -> SimplicialVS {
        let cap = cap.min(self.level_cap);
        let mut degens: Vec<Vec<Matrix>> = self.degens[..=cap].to_vec();
        degens[cap].clear();
        SimplicialVS { level_cap: cap, dims: self.dims[..=cap].to_vec(), faces: self.faces[..=cap].to_vec(), degens }
    }

    /// Levelwise tensor product with faces `d_i ⊗ d_i` and degeneracies `s_i ⊗ s_i`.
    pub fn product(&self, other: &SimplicialVS) -> SimplicialVS {
        let cap = self.level_cap.min(other.level_cap);
        let dims = (0..=cap).map(|n| self.dim(n) * other.dim(n)).collect();
        let faces = (0..=cap).map(|n| self.faces[n].iter().zip(&other.faces[n]).map(|(a, b)| a.kron(b)).collect()).collect();
        let degens = (0..=cap)
            .map(|n| if n == cap { Vec::new() } else { self.degens[n].iter().zip(&other.degens[n]).map(|(a, b)| a.kron(b)).collect() })
            .collect();
        SimplicialVS { level_cap: cap, dims, faces, degens }
    }

    /// Failures of the simplicial identities, as readable strings.
    pub fn identity_failures(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let cap = self.level_cap;
        let d = |n: usize, i: usize| &self.faces[n][i];
        let s = |n: usize, i: usize| &self.degens[n][i];
        let eq = |a: Matrix, b: &Matrix| a == *b;
        let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("structure maps compose");
        for n in 2..=cap {
            for j in 0..=n {
                for i in 0..j {
                    if !eq(mul(d(n - 1, i), d(n, j)), &mul(d(n - 1, j - 1), d(n, i))) {
                        bad.push(format!("d_{i} d_{j} = d_{} d_{i} on X_{n}", j - 1));
                    }
                }
            }
        }
        for n in 0..cap {
            let id = Matrix::identity(self.dim(n));
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = mul(d(n + 1, i), s(n, j));
                    let ok = if i < j {
                        lhs == mul(s(n - 1, j - 1), d(n, i))
                    } else if i == j || i == j + 1 {
                        lhs == id
                    } else {
                        lhs == mul(s(n - 1, j), d(n, i - 1))
                    };
                    if !ok {
                        bad.push(format!("d_{i} s_{j} on X_{n}"));
                    }
                }
            }
            if n + 2 <= cap {
                for j in 0..=n {
                    for i in 0..=j {
                        if !eq(mul(s(n + 1, i), s(n, j)), &mul(s(n + 1, j + 1), s(n, i))) {
                            bad.push(format!("s_{i} s_{j} = s_{} s_{i} on X_{n}", j + 1));
                        }
                    }
                }
            }
        }
        bad
    }

    pub fn check_identities(&self) -> Result<(), DkError> {
        match self.identity_failures().into_iter().next() {
            None => Ok(()),
            Some(f) => Err(DkError::Identity(f)),
        }
    }

    /// The alternating face sum `Σ (−1)^i d_i` leaving level `n`.
    pub fn moore_differential(&self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(if n == 0 { 0 } else { self.dim(n - 1) }, self.dim(n));
        if n > 0 {
            for (i, f) in self.faces[n].iter().enumerate() {
                m.add_assign(&f.scale(&Scalar::sign(i as i64))).expect("same shape");
            }
        }
        m
    }
}

/// `N(X)` with the bases it was computed in.
///
/// `inclusions[n]` has the basis of `N_n = ⋂_{i<n} Ker d_i` as columns;
/// `projections[n]` is the projection `X_n → N_n` along the degenerate part,
/// in those coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub complex: ChainComplex,
    pub inclusions: Vec<Matrix>,
    pub projections: Vec<Matrix>,
}

impl Normalized {
    pub fn new(x: &SimplicialVS) -> Result<Self, DkError> {
        x.check_identities()?;
        let cap = x.level_cap;
        let mut inclusions = Vec::new();
        let mut projections = Vec::new();
        for n in 0..=cap {
            let dim = x.dim(n);
            let incl = if n == 0 {
                Matrix::identity(dim)
            } else {
                let mut stacked = Matrix::zeros(0, dim);
                for i in 0..n {
                    stacked = stacked.vstack(x.face(n, i))?;
                }
                stacked.kernel()
            };
            let mut degenerate = Matrix::zeros(dim, 0);
            if n > 0 {
                for i in 0..n {
                    degenerate = degenerate.hstack(x.degeneracy(n - 1, i))?;
                }
            }
            let degenerate = degenerate.image();
            let basis = incl.hstack(&degenerate)?;
            if basis.cols() != dim || basis.rank() != dim {
                return Err(DkError::Identity(format!("N_{n} and the degenerate part do not split X_{n}")));
            }
            let inv = basis.solve_matrix(&Matrix::identity(dim)).expect("invertible");
            projections.push(inv.block(0, 0, incl.cols(), dim));
            inclusions.push(incl);
        }
        let dims: Vec<usize> = inclusions.iter().map(Matrix::cols).collect();
        let mut d = vec![Matrix::zeros(0, dims[0])];
        for n in 1..=cap {
            let sign = Scalar::sign(n as i64);
            let image = x.face(n, n).mul(&inclusions[n])?.scale(&sign);
            let coords = inclusions[n - 1]
                .solve_matrix(&image)
                .ok_or_else(|| DkError::Identity(format!("d_{n} does not land in N_{}", n - 1)))?;
            d.push(coords);
        }
        let complex = ChainComplex::new(Grading::Chain, 0, dims, d)?;
        Ok(Normalized { complex, inclusions, projections })
    }

    /// `N_n` coordinates of a normalized vector of `X_n`.
    pub fn coords(&self, n: usize, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.inclusions[n].solve(v)
    }
}

/// `N(X)` as a chain complex in levels `0..=level_cap`.
pub fn normalized_complex(x: &SimplicialVS) -> Result<ChainComplex, DkError> {
    Ok(Normalized::new(x)?.complex)
}
