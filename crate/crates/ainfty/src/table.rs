//! Sparse multilinear maps stored as coefficients on basis tuples.

use std::collections::HashMap;

use dgn_core::{vector, Scalar, Vector};

/// A multilinear map given by its values on basis tuples. Absent tuples map to zero.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MultiTable {
    pub entries: HashMap<Vec<usize>, Vector>,
}

impl MultiTable {
    pub fn get(&self, tuple: &[usize]) -> Option<&Vector> {
        self.entries.get(tuple)
    }

    /// Adds `value` to the entry at `tuple`, dropping it if it becomes zero.
    pub fn add(&mut self, tuple: Vec<usize>, value: &[Scalar]) {
        if vector::is_zero(value) {
            return;
        }
        match self.entries.get_mut(&tuple) {
            Some(v) => {
                vector::axpy(v, &Scalar::one(), value);
                if vector::is_zero(v) {
                    self.entries.remove(&tuple);
                }
            }
            None => {
                self.entries.insert(tuple, value.to_vec());
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Evaluates on arbitrary argument vectors, picking whichever of the
    /// two loops (over the table or over the argument supports) is shorter.
    pub fn eval(&self, args: &[&[Scalar]], out_dim: usize) -> Vector {
        let mut out = vector::zeros(out_dim);
        if self.entries.is_empty() {
            return out;
        }
        let supports: Vec<Vec<usize>> = args.iter().map(|a| vector::support(a)).collect();
        let product = supports.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.len()));
        match product {
            Some(0) => {}
            Some(p) if p <= self.entries.len() => {
                let mut idx = vec![0usize; args.len()];
                'outer: loop {
                    let tuple: Vec<usize> = idx.iter().zip(&supports).map(|(&i, s)| s[i]).collect();
                    if let Some(v) = self.entries.get(&tuple) {
                        let mut c = Scalar::one();
                        for (k, &b) in tuple.iter().enumerate() {
                            c = &c * &args[k][b];
                        }
                        vector::axpy(&mut out, &c, v);
                    }
                    // odometer
                    let mut k = args.len();
                    loop {
                        if k == 0 {
                            break 'outer;
                        }
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < supports[k].len() {
                            break;
                        }
                        idx[k] = 0;
                    }
                }
            }
            _ => {
                for (tuple, v) in &self.entries {
                    let mut c = Scalar::one();
                    for (k, &b) in tuple.iter().enumerate() {
                        if args[k][b].is_zero() {
                            c = Scalar::zero();
                            break;
                        }
                        c = &c * &args[k][b];
                    }
                    vector::axpy(&mut out, &c, v);
                }
            }
        }
        out
    }
}
