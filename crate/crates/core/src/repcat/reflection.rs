use super::decompose::canonical_cmp;
use super::{ModCat, Representation, Stalk};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::quiver::Quiver;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `τ`
    Forward,
    /// `τ⁻¹`
    Inverse,
}

/// `S⁺_k` at a sink `k` of `q`. The result is a representation of `q.reflect(k)`.
pub fn reflect_plus<F: Scalar>(q: &Quiver, k: usize, x: &Representation<F>) -> Representation<F> {
    debug_assert!(q.is_sink(k));
    let incoming: Vec<(usize, usize)> = q.arrows_into(k).collect();
    let mut offsets = Vec::with_capacity(incoming.len());
    let mut h = Matrix::zeros(x.dim()[k], 0);
    for &(a, j) in &incoming {
        offsets.push((h.cols(), x.dim()[j]));
        h = h.hstack(x.map(a));
    }
    let ker = Matrix::from_columns(h.cols(), &h.kernel_basis());
    let mut dim = x.dim().to_vec();
    dim[k] = ker.cols();
    let mut maps = x.maps().to_vec();
    for (&(a, _), &(off, len)) in incoming.iter().zip(&offsets) {
        let rows: Vec<usize> = (off..off + len).collect();
        maps[a] = ker.select_rows(&rows);
    }
    Representation::from_parts(dim, maps)
}

/// `S⁻_k` at a source `k` of `q`. The result is a representation of `q.reflect(k)`.
pub fn reflect_minus<F: Scalar>(q: &Quiver, k: usize, x: &Representation<F>) -> Representation<F> {
    debug_assert!(q.is_source(k));
    let outgoing: Vec<(usize, usize)> = q.arrows_from(k).collect();
    let mut offsets = Vec::with_capacity(outgoing.len());
    let mut h = Matrix::zeros(0, x.dim()[k]);
    for &(a, j) in &outgoing {
        offsets.push((h.rows(), x.dim()[j]));
        h = h.vstack(x.map(a));
    }
    let span = h.column_space();
    let comp = span.complement_indices();
    let total = h.rows();
    let change = span.hstack(&Matrix::identity(total).select_columns(&comp));
    let inv = change.inverse().expect("completed basis");
    let rows: Vec<usize> = (span.cols()..total).collect();
    let proj = inv.select_rows(&rows);
    let mut dim = x.dim().to_vec();
    dim[k] = proj.rows();
    let mut maps = x.maps().to_vec();
    for (&(a, _), &(off, len)) in outgoing.iter().zip(&offsets) {
        let cols: Vec<usize> = (off..off + len).collect();
        maps[a] = proj.select_columns(&cols);
    }
    Representation::from_parts(dim, maps)
}

impl<F: Scalar> ModCat<F> {
    /// `C⁺ = S⁺_{k_n} ⋯ S⁺_{k_1}` along the admissible sink sequence.
    pub fn coxeter_plus(&self, x: &Representation<F>) -> Representation<F> {
        let mut q = self.quiver().clone();
        let mut cur = x.clone();
        for k in self.quiver().admissible_sinks() {
            cur = reflect_plus(&q, k, &cur);
            q = q.reflect(k);
        }
        cur
    }

    /// `C⁻ = S⁻_{k_1} ⋯ S⁻_{k_n}`.
    pub fn coxeter_minus(&self, x: &Representation<F>) -> Representation<F> {
        let mut q = self.quiver().clone();
        let mut cur = x.clone();
        for k in self.quiver().admissible_sinks().into_iter().rev() {
            cur = reflect_minus(&q, k, &cur);
            q = q.reflect(k);
        }
        cur
    }

    /// The Auslander-Reiten translate in the derived category.
    /// `τ P_i = I_i[-1]` and `τ⁻¹ I_i = P_i[1]`; otherwise the result is a module.
    pub fn ar_translate(&self, x: &Representation<F>, direction: Direction) -> Result<Stalk<F>> {
        let forward = direction == Direction::Forward;
        if let Some(s) = self.cached_translate(x, forward) {
            return Ok(s);
        }
        if !self.is_indecomposable(x) {
            return Err(Error::NotIndecomposable);
        }
        let result = match direction {
            Direction::Forward => {
                let c = self.coxeter_plus(x);
                if c.is_zero() {
                    let i = self
                        .projective_index(x)
                        .ok_or_else(|| Error::inconsistent("C⁺ vanishes on a non-projective"))?;
                    Stalk::new(self.injective(i).clone(), -1)
                } else {
                    Stalk::new(c, 0)
                }
            }
            Direction::Inverse => {
                let c = self.coxeter_minus(x);
                if c.is_zero() {
                    let i = self
                        .injective_index(x)
                        .ok_or_else(|| Error::inconsistent("C⁻ vanishes on a non-injective"))?;
                    Stalk::new(self.projective(i).clone(), 1)
                } else {
                    Stalk::new(c, 0)
                }
            }
        };
        self.store_translate(x, forward, result.clone());
        Ok(result)
    }

    /// One representative per isomorphism class of indecomposables, obtained
    /// as `S⁻_{k_1} ⋯ S⁻_{k_t}(S_{k_{t+1}})` along the periodic sink word.
    pub fn indecomposables(&self) -> Result<&[Representation<F>]> {
        self.indecomposables_cell()
            .get_or_init(|| self.build_indecomposables())
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    fn build_indecomposables(&self) -> Result<Vec<Representation<F>>> {
        let roots = self.classification().positive_roots().ok_or(Error::RepInfinite)?;
        let q0 = self.quiver();
        let n = q0.num_vertices();
        let word = q0.admissible_sinks();
        let mut quivers = vec![q0.clone()];
        let mut found: Vec<Representation<F>> = Vec::new();
        let limit = n * (roots + 1);
        for t in 0..limit {
            if found.len() == roots {
                break;
            }
            let qt = quivers[t].clone();
            let start = word[t % n];
            let mut cur = simple_over(&qt, start);
            for s in (0..t).rev() {
                let k = word[s % n];
                cur = reflect_minus(&quivers[s + 1], k, &cur);
            }
            quivers.push(qt.reflect(start));
            if !cur.is_zero() && !found.iter().any(|f| self.is_isomorphic(f, &cur)) {
                found.push(cur);
            }
        }
        found.sort_by(canonical_cmp);
        Ok(found)
    }

    /// The stored representative isomorphic to an indecomposable `x`.
    pub fn canonical(&self, x: &Representation<F>) -> Result<Representation<F>> {
        self.indecomposables()?
            .iter()
            .find(|r| self.is_isomorphic(r, x))
            .cloned()
            .ok_or(Error::NotIndecomposable)
    }

    /// The enumerated representative of an indecomposable over a Dynkin
    /// quiver; anything else is returned unchanged.
    pub fn tidy(&self, x: &Representation<F>) -> Representation<F> {
        if self.is_dynkin() {
            if let Ok(c) = self.canonical(x) {
                return c;
            }
        }
        x.clone()
    }
}

fn simple_over<F: Scalar>(q: &Quiver, i: usize) -> Representation<F> {
    let dim: Vec<usize> = (0..q.num_vertices()).map(|j| usize::from(i == j)).collect();
    let maps = q.arrows().iter().map(|&(s, t)| Matrix::zeros(dim[t], dim[s])).collect();
    Representation::from_parts(dim, maps)
}
