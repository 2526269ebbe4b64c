//! Concrete A∞-categories with sparse structure maps.

use std::collections::{BTreeMap, HashMap};

use dgn_core::{vector, GradedSpace, Scalar, Vector};

use crate::table::MultiTable;
use crate::{arg_spaces, basis_tuples, object_strings, AInfError, AInfinity};

/// An A∞-category whose `m_n` are stored as coefficient tables per object string.
#[derive(Clone, Debug)]
pub struct AInfCategory {
    pub objects: Vec<String>,
    homs: HashMap<(usize, usize), GradedSpace>,
    zero: GradedSpace,
    /// keyed by the object string `x_0 … x_n`
    pub maps: HashMap<Vec<usize>, MultiTable>,
    pub units: Vec<Option<Vector>>,
    pub arity_cap: usize,
}

impl AInfCategory {
    /// A category with the given hom spaces and all `m_n = 0`. Missing pairs are zero.
    pub fn new(objects: Vec<String>, homs: BTreeMap<(usize, usize), GradedSpace>, arity_cap: usize) -> Self {
        let n = objects.len();
        AInfCategory {
            objects,
            homs: homs.into_iter().filter(|(_, s)| s.dim() > 0).collect(),
            zero: GradedSpace::zero(),
            maps: HashMap::new(),
            units: vec![None; n],
            arity_cap,
        }
    }

    fn check_object(&self, x: usize) -> Result<(), AInfError> {
        if x < self.objects.len() {
            Ok(())
        } else {
            Err(AInfError::UnknownObject(x))
        }
    }

    pub fn set_unit(&mut self, x: usize, v: Vector) -> Result<(), AInfError> {
        self.check_object(x)?;
        let h = self.hom(x, x);
        if v.len() != h.dim() || h.homogeneous_degree(&v).is_some_and(|d| d != 0) {
            return Err(AInfError::Degree(format!("unit of object {x} must have degree 0")));
        }
        self.units[x] = Some(v);
        Ok(())
    }

    /// Sets `m_n` on one basis tuple, checking arity and the degree `2−n` constraint.
    pub fn set_m(&mut self, objs: &[usize], tuple: &[usize], value: Vector) -> Result<(), AInfError> {
        let n = objs.len() - 1;
        if n == 0 || tuple.len() != n {
            return Err(AInfError::Invalid("tuple length must equal arity".into()));
        }
        if n > self.arity_cap {
            return Err(AInfError::ArityCap { arity: n, cap: self.arity_cap });
        }
        for &x in objs {
            self.check_object(x)?;
        }
        let spaces = arg_spaces(self, objs);
        let mut deg = 2 - n as i32;
        for (s, &b) in spaces.iter().zip(tuple) {
            if b >= s.dim() {
                return Err(AInfError::Invalid(format!("basis index {b} out of range")));
            }
            deg += s.degree(b);
        }
        let out = self.hom(objs[0], objs[n]);
        if value.len() != out.dim() {
            return Err(AInfError::Invalid("value has the wrong length".into()));
        }
        if let Some(d) = out.homogeneous_degree(&value) {
            if d != deg {
                return Err(AInfError::Degree(format!("m_{n} on {tuple:?} has degree {d}, expected {deg}")));
            }
        } else if !vector::is_zero(&value) {
            return Err(AInfError::Degree(format!("m_{n} on {tuple:?} is not homogeneous")));
        }
        let table = self.maps.entry(objs.to_vec()).or_default();
        table.entries.remove(tuple);
        table.add(tuple.to_vec(), &value);
        Ok(())
    }

    pub fn get_m(&self, objs: &[usize], tuple: &[usize]) -> Option<&Vector> {
        self.maps.get(objs)?.get(tuple)
    }

    pub fn homs(&self) -> impl Iterator<Item = (&(usize, usize), &GradedSpace)> {
        self.homs.iter()
    }
}

impl AInfinity for AInfCategory {
    fn num_objects(&self) -> usize {
        self.objects.len()
    }

    fn object_label(&self, x: usize) -> String {
        self.objects[x].clone()
    }

    fn hom(&self, x: usize, y: usize) -> &GradedSpace {
        self.homs.get(&(x, y)).unwrap_or(&self.zero)
    }

    fn arity_cap(&self) -> usize {
        self.arity_cap
    }

    fn unit(&self, x: usize) -> Option<Vector> {
        self.units[x].clone()
    }

    fn m(&self, objs: &[usize], args: &[&[Scalar]]) -> Vector {
        let out = self.hom(objs[0], objs[objs.len() - 1]).dim();
        match self.maps.get(objs) {
            Some(t) if args.len() <= self.arity_cap => t.eval(args, out),
            _ => vector::zeros(out),
        }
    }
}

/// Tabulates every `m_n` (`n ≤ cap`) of an A∞-category on all basis tuples.
pub fn materialize(c: &dyn AInfinity) -> AInfCategory {
    let k = c.num_objects();
    let objects = (0..k).map(|x| c.object_label(x)).collect();
    let mut homs = BTreeMap::new();
    for x in 0..k {
        for y in 0..k {
            homs.insert((x, y), c.hom(x, y).clone());
        }
    }
    let mut out = AInfCategory::new(objects, homs, c.arity_cap());
    for x in 0..k {
        out.units[x] = c.unit(x);
    }
    for n in 1..=c.arity_cap() {
        for objs in object_strings(c, n) {
            let spaces = arg_spaces(c, &objs);
            let mut table = MultiTable::default();
            for tuple in basis_tuples(&spaces) {
                let args: Vec<Vector> = tuple.iter().zip(&spaces).map(|(&b, s)| vector::unit(s.dim(), b)).collect();
                let refs: Vec<&[Scalar]> = args.iter().map(|a| a.as_slice()).collect();
                table.add(tuple, &c.m(&objs, &refs));
            }
            if !table.is_empty() {
                out.maps.insert(objs, table);
            }
        }
    }
    out
}

/// A dg-category seen as an A∞-category: the same `m_1`, `m_2` tabulated, nothing above.
pub fn embed_dg(d: &dyn AInfinity) -> Result<AInfCategory, AInfError> {
    if !d.is_dg() {
        return Err(AInfError::Invalid("arity cap above 2: not a dg-category".into()));
    }
    Ok(materialize(d))
}
