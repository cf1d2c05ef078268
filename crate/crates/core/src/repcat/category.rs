use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{Morphism, Representation, Resolution, Stalk};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::quiver::{Classification, Quiver};
use crate::scalar::Scalar;

/// Projective, injective and simple modules, indexed by vertex.
#[derive(Clone, Debug)]
pub struct Standard<F: Scalar> {
    pub projectives: Vec<Representation<F>>,
    pub injectives: Vec<Representation<F>>,
    pub simples: Vec<Representation<F>>,
}

/// `mod kQ` for a fixed quiver. Hom dimensions and translates are memoized;
/// every query is a pure function of its arguments.
pub struct ModCat<F: Scalar> {
    quiver: Quiver,
    classification: Classification,
    standard: Standard<F>,
    hom_dims: Mutex<HashMap<(Representation<F>, Representation<F>), usize>>,
    translates: Mutex<HashMap<(Representation<F>, bool), Stalk<F>>>,
    resolutions: Mutex<HashMap<Representation<F>, Resolution<F>>>,
    indecomposables: OnceLock<Result<Vec<Representation<F>>>>,
}

impl<F: Scalar> ModCat<F> {
    pub fn new(quiver: Quiver) -> Self {
        let classification = quiver.dynkin_type();
        let standard = standard_modules(&quiver);
        ModCat {
            quiver,
            classification,
            standard,
            hom_dims: Mutex::new(HashMap::new()),
            translates: Mutex::new(HashMap::new()),
            resolutions: Mutex::new(HashMap::new()),
            indecomposables: OnceLock::new(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn is_dynkin(&self) -> bool {
        matches!(self.classification, Classification::Dynkin(_))
    }

    pub fn standard(&self) -> &Standard<F> {
        &self.standard
    }

    pub fn projective(&self, i: usize) -> &Representation<F> {
        &self.standard.projectives[i]
    }

    pub fn injective(&self, i: usize) -> &Representation<F> {
        &self.standard.injectives[i]
    }

    pub fn simple(&self, i: usize) -> &Representation<F> {
        &self.standard.simples[i]
    }

    pub fn zero(&self) -> Representation<F> {
        Representation::zero(&self.quiver)
    }

    /// `H = P_1 ⊕ ... ⊕ P_n`.
    pub fn regular(&self) -> Representation<F> {
        Representation::sum_of(&self.quiver, &self.standard.projectives)
    }

    /// Basis of `Hom(X, Y)`: the solutions of the commuting-square system.
    pub fn hom_basis(&self, x: &Representation<F>, y: &Representation<F>) -> Vec<Morphism<F>> {
        let q = &self.quiver;
        let n = q.num_vertices();
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for v in 0..n {
            offset.push(offset[v] + y.dim[v] * x.dim[v]);
        }
        let unknowns = offset[n];
        let eq_rows: usize = q.arrows().iter().map(|&(s, t)| y.dim[t] * x.dim[s]).sum();
        let mut system = Matrix::<F>::zeros(eq_rows, unknowns);
        let mut row = 0;
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            let (ya, xa) = (&y.maps[a], &x.maps[a]);
            for r in 0..y.dim[t] {
                for c in 0..x.dim[s] {
                    // (Y_a phi_s - phi_t X_a)[r, c]
                    for k in 0..y.dim[s] {
                        let coeff = &ya[(r, k)];
                        if !coeff.is_zero() {
                            let col = offset[s] + k * x.dim[s] + c;
                            system[(row, col)] = system[(row, col)].clone() + coeff.clone();
                        }
                    }
                    for k in 0..x.dim[t] {
                        let coeff = &xa[(k, c)];
                        if !coeff.is_zero() {
                            let col = offset[t] + r * x.dim[t] + k;
                            system[(row, col)] = system[(row, col)].clone() - coeff.clone();
                        }
                    }
                    row += 1;
                }
            }
        }
        let kernel = if eq_rows == 0 {
            Matrix::<F>::identity(unknowns).columns()
        } else {
            system.kernel_basis()
        };
        kernel
            .into_iter()
            .map(|vec| {
                let components = (0..n)
                    .map(|v| {
                        Matrix::from_vec(y.dim[v], x.dim[v], vec[offset[v]..offset[v + 1]].to_vec())
                            .expect("block size")
                    })
                    .collect();
                Morphism::from_parts(x.clone(), y.clone(), components)
            })
            .collect()
    }

    pub fn hom_dim(&self, x: &Representation<F>, y: &Representation<F>) -> usize {
        if x.is_zero() || y.is_zero() {
            return 0;
        }
        let key = (x.clone(), y.clone());
        if let Some(&d) = self.hom_dims.lock().unwrap().get(&key) {
            return d;
        }
        let d = self.hom_basis(x, y).len();
        self.hom_dims.lock().unwrap().insert(key, d);
        d
    }

    /// `dim Ext¹(X, Y) = dim Hom(X, Y) - <dim X, dim Y>`.
    pub fn ext1_dim(&self, x: &Representation<F>, y: &Representation<F>) -> Result<usize> {
        let euler = self.quiver.euler_form(&x.dim, &y.dim)?;
        let ext = self.hom_dim(x, y) as i64 - euler;
        if ext < 0 {
            return Err(Error::inconsistent(format!(
                "negative Ext¹ dimension {ext} between {:?} and {:?}",
                x.dim, y.dim
            )));
        }
        Ok(ext as usize)
    }

    pub fn is_exceptional(&self, x: &Representation<F>) -> Result<bool> {
        Ok(self.is_indecomposable(x) && self.ext1_dim(x, x)? == 0)
    }

    pub fn is_projective(&self, x: &Representation<F>) -> Result<bool> {
        for s in &self.standard.simples {
            if self.ext1_dim(x, s)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_injective(&self, x: &Representation<F>) -> Result<bool> {
        for s in &self.standard.simples {
            if self.ext1_dim(s, x)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Index of the indecomposable projective isomorphic to `x`, if any.
    pub fn projective_index(&self, x: &Representation<F>) -> Option<usize> {
        let i = self.standard.projectives.iter().position(|p| p.dim == x.dim)?;
        self.is_isomorphic(x, &self.standard.projectives[i]).then_some(i)
    }

    pub fn injective_index(&self, x: &Representation<F>) -> Option<usize> {
        let i = self.standard.injectives.iter().position(|p| p.dim == x.dim)?;
        self.is_isomorphic(x, &self.standard.injectives[i]).then_some(i)
    }

    pub(crate) fn cached_translate(&self, x: &Representation<F>, forward: bool) -> Option<Stalk<F>> {
        self.translates.lock().unwrap().get(&(x.clone(), forward)).cloned()
    }

    pub(crate) fn store_translate(&self, x: &Representation<F>, forward: bool, value: Stalk<F>) {
        self.translates.lock().unwrap().insert((x.clone(), forward), value);
    }

    pub(crate) fn cached_resolution(&self, x: &Representation<F>) -> Option<Resolution<F>> {
        self.resolutions.lock().unwrap().get(x).cloned()
    }

    pub(crate) fn store_resolution(&self, x: &Representation<F>, value: Resolution<F>) {
        self.resolutions.lock().unwrap().insert(x.clone(), value);
    }

    pub(crate) fn indecomposables_cell(&self) -> &OnceLock<Result<Vec<Representation<F>>>> {
        &self.indecomposables
    }
}

fn standard_modules<F: Scalar>(q: &Quiver) -> Standard<F> {
    let n = q.num_vertices();
    let paths: Vec<Vec<Vec<Vec<usize>>>> = (0..n).map(|i| (0..n).map(|j| q.paths(i, j)).collect()).collect();

    let projectives = (0..n)
        .map(|i| {
            // (P_i)_j has basis the paths i ~> j; an arrow post-composes.
            let dim: Vec<usize> = (0..n).map(|j| paths[i][j].len()).collect();
            let maps = q
                .arrows()
                .iter()
                .enumerate()
                .map(|(a, &(s, t))| {
                    let mut m = Matrix::zeros(dim[t], dim[s]);
                    for (c, p) in paths[i][s].iter().enumerate() {
                        let mut longer = p.clone();
                        longer.push(a);
                        let r = paths[i][t].iter().position(|x| *x == longer).expect("path extends");
                        m[(r, c)] = F::one();
                    }
                    m
                })
                .collect();
            Representation::from_parts(dim, maps)
        })
        .collect();

    let injectives = (0..n)
        .map(|i| {
            // (I_i)_j is dual to the paths j ~> i; an arrow a: j -> k acts by
            // the transpose of q |-> a·q.
            let dim: Vec<usize> = (0..n).map(|j| paths[j][i].len()).collect();
            let maps = q
                .arrows()
                .iter()
                .enumerate()
                .map(|(a, &(s, t))| {
                    let mut m = Matrix::zeros(dim[t], dim[s]);
                    for (r, p) in paths[t][i].iter().enumerate() {
                        let mut longer = vec![a];
                        longer.extend(p);
                        let c = paths[s][i].iter().position(|x| *x == longer).expect("path extends");
                        m[(r, c)] = F::one();
                    }
                    m
                })
                .collect();
            Representation::from_parts(dim, maps)
        })
        .collect();

    let simples = (0..n)
        .map(|i| {
            let dim: Vec<usize> = (0..n).map(|j| usize::from(i == j)).collect();
            let maps = q.arrows().iter().map(|&(s, t)| Matrix::zeros(dim[t], dim[s])).collect();
            Representation::from_parts(dim, maps)
        })
        .collect();

    Standard { projectives, injectives, simples }
}
