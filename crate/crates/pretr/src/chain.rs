//! The dg-category of bounded cochain complexes.
//!
//! `m_1` is the hom differential `D(f) = f∘d + (−1)^{k+1} d∘f` and
//! `m_2(g, f) = (−1)^{|g||f|} g∘f`. The Koszul sign on composition is what
//! makes `m_1` a derivation for this `D`; plain composition fails Leibniz
//! as soon as both inputs are odd.

use dgn_ainfty::AInfinity;
use dgn_core::{random, vector, ChainComplex, Field, GradedSpace, Grading, HomSpace, Matrix, Scalar, Vector};
use rand::Rng;

#[derive(Clone, Debug)]
pub struct ChainDgCategory {
    pub labels: Vec<String>,
    pub objects: Vec<ChainComplex>,
    homs: Vec<Vec<HomSpace>>,
}

impl ChainDgCategory {
    /// Objects are read as cochain complexes.
    pub fn new(labels: Vec<String>, objects: Vec<ChainComplex>) -> Self {
        let objects: Vec<ChainComplex> = objects
            .into_iter()
            .map(|c| if c.grading == Grading::Chain { c.op() } else { c })
            .collect();
        let homs = objects.iter().map(|a| objects.iter().map(|b| HomSpace::new(a, b)).collect()).collect();
        ChainDgCategory { labels, objects, homs }
    }

    /// The first object whose complex is zero.
    pub fn zero_object(&self) -> Option<usize> {
        self.objects.iter().position(|c| c.total_dim() == 0)
    }

    pub fn hom_space(&self, x: usize, y: usize) -> &HomSpace {
        &self.homs[x][y]
    }

    /// Adds an object and returns its index.
    pub fn push(&mut self, label: String, c: ChainComplex) -> usize {
        let c = if c.grading == Grading::Chain { c.op() } else { c };
        self.labels.push(label);
        self.objects.push(c);
        let k = self.objects.len();
        for (x, row) in self.homs.iter_mut().enumerate() {
            row.push(HomSpace::new(&self.objects[x], &self.objects[k - 1]));
        }
        self.homs.push(self.objects.iter().map(|b| HomSpace::new(&self.objects[k - 1], b)).collect());
        k - 1
    }

    /// `(−1)^{|g||f|} g∘f` summed over homogeneous pieces.
    pub fn compose(&self, x: usize, y: usize, z: usize, g: &[Scalar], f: &[Scalar]) -> Vector {
        let (fs, gs, out) = (&self.homs[x][y], &self.homs[y][z], &self.homs[x][z]);
        let mut v = vector::zeros(out.dim());
        for k in fs.degrees() {
            for l in gs.degrees() {
                let sign = Scalar::sign((k * l) as i64);
                for i in fs.src.levels() {
                    let fi = fs.block(f, k, i);
                    if fi.is_zero() {
                        continue;
                    }
                    let gi = gs.block(g, l, i + k);
                    if gi.is_zero() {
                        continue;
                    }
                    out.add_block(&mut v, k + l, i, &gi.mul(&fi).expect("shapes").scale(&sign));
                }
            }
        }
        v
    }

    pub fn d(&self, x: usize, y: usize, f: &[Scalar]) -> Vector {
        self.homs[x][y].differential(f)
    }

    /// Degree-0 cycles of `Hom(x, y)`, i.e. chain maps, as columns of full hom vectors.
    pub fn closed_degree_zero(&self, x: usize, y: usize) -> Vec<Vector> {
        let hs = &self.homs[x][y];
        let cx = hs.complex();
        cx.d_out(0).kernel().columns().into_iter().map(|c| hs.from_slice(0, &c)).collect()
    }

    /// A random chain map `x → y` with small integer coefficients on a kernel basis.
    pub fn random_closed(&self, x: usize, y: usize, rng: &mut impl Rng) -> Vector {
        let hs = &self.homs[x][y];
        let mut v = vector::zeros(hs.dim());
        for z in self.closed_degree_zero(x, y) {
            let c = Scalar::from_int(rng.gen_range(-2..=2));
            vector::axpy(&mut v, &c, &z);
        }
        v
    }

    /// A random homogeneous element of degree `k`.
    pub fn random_element(&self, x: usize, y: usize, k: i32, rng: &mut impl Rng) -> Vector {
        let hs = &self.homs[x][y];
        let r = hs.degree_range(k);
        hs.from_slice(k, &random::vector(Field::Rational, r.len(), rng))
    }
}

impl AInfinity for ChainDgCategory {
    fn num_objects(&self) -> usize {
        self.objects.len()
    }

    fn object_label(&self, x: usize) -> String {
        self.labels[x].clone()
    }

    fn hom(&self, x: usize, y: usize) -> &GradedSpace {
        self.homs[x][y].space()
    }

    fn arity_cap(&self) -> usize {
        2
    }

    fn unit(&self, x: usize) -> Option<Vector> {
        Some(self.homs[x][x].identity())
    }

    fn m(&self, objs: &[usize], args: &[&[Scalar]]) -> Vector {
        match args.len() {
            1 => self.d(objs[0], objs[1], args[0]),
            2 => self.compose(objs[0], objs[1], objs[2], args[0], args[1]),
            _ => vector::zeros(self.hom(objs[0], objs[objs.len() - 1]).dim()),
        }
    }
}

/// Shape of random objects: cochain levels `lo..lo+dims.len()`.
#[derive(Clone, Debug)]
pub struct ObjectShape {
    pub lo: i32,
    pub dims: Vec<usize>,
}

/// A chain dg-category with one random complex per shape.
pub fn random_chain_category(field: Field, shapes: &[ObjectShape], rng: &mut impl Rng) -> ChainDgCategory {
    let objects = shapes.iter().map(|s| random::complex(field, Grading::Cochain, s.lo, &s.dims, rng)).collect();
    let labels = (0..shapes.len()).map(|i| format!("X{i}")).collect();
    ChainDgCategory::new(labels, objects)
}

/// Random small shapes: levels inside `-1..=1`, dimensions at most `max_dim`.
pub fn random_shapes(count: usize, max_dim: usize, rng: &mut impl Rng) -> Vec<ObjectShape> {
    (0..count)
        .map(|_| {
            let lo = rng.gen_range(-1..=0);
            let len = rng.gen_range(1..=2);
            ObjectShape { lo, dims: (0..len).map(|_| rng.gen_range(1..=max_dim)).collect() }
        })
        .collect()
}

fn invertible(field: Field, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random::matrix(field, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// Objects with cohomology only in degree 0, spread over levels `−1..=1` by
/// contractible pieces and disguised by random changes of basis. All their
/// homs have `H^k = 0` for `k ≠ 0` while `Hom^k ≠ 0` for `k` down to `−2`.
pub fn random_concentrated_category(field: Field, count: usize, max_dim: usize, rng: &mut impl Rng) -> ChainDgCategory {
    let mut objects = Vec::new();
    for _ in 0..count {
        let (a, h, b) = (rng.gen_range(1..=max_dim), rng.gen_range(1..=max_dim), rng.gen_range(1..=max_dim));
        let mid = a + h + b;
        let (p, q, r) = (invertible(field, a, rng), invertible(field, mid, rng), invertible(field, b, rng));
        let inject = Matrix::from_fn(mid, a, |i, j| if i == j { Scalar::one() } else { Scalar::zero() });
        let project = Matrix::from_fn(b, mid, |i, j| if j == a + h + i { Scalar::one() } else { Scalar::zero() });
        let q_inv = q.solve_matrix(&Matrix::identity(mid)).expect("invertible");
        let p_inv = p.solve_matrix(&Matrix::identity(a)).expect("invertible");
        // conjugate: d' = Q d P⁻¹ and R d Q⁻¹
        let d0 = q.mul(&inject).and_then(|m| m.mul(&p_inv)).expect("shapes");
        let d1 = r.mul(&project).and_then(|m| m.mul(&q_inv)).expect("shapes");
        let c = ChainComplex::new(Grading::Cochain, -1, vec![a, mid, b], vec![d0, d1, Matrix::zeros(0, b)])
            .expect("d∘d = 0 by construction");
        objects.push(c);
    }
    let labels = (0..count).map(|i| format!("X{i}")).collect();
    ChainDgCategory::new(labels, objects)
}
