//! Exceptional sequences and their mutations.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::repcat::{ModCat, Morphism, Representation};
use crate::scalar::Scalar;

/// An ordered list of exceptional modules with `Hom(E_j, E_i) = 0 = Ext¹(E_j, E_i)` for `j > i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExceptionalSequence<F: Scalar> {
    terms: Vec<Representation<F>>,
}

impl<F: Scalar> ExceptionalSequence<F> {
    pub fn new(cat: &ModCat<F>, terms: Vec<Representation<F>>) -> Result<Self> {
        if !cat.is_exceptional_sequence(&terms)? {
            return Err(Error::InvalidArgument("terms do not form an exceptional sequence".into()));
        }
        Ok(ExceptionalSequence { terms })
    }

    pub(crate) fn from_terms(terms: Vec<Representation<F>>) -> Self {
        ExceptionalSequence { terms }
    }

    pub fn terms(&self) -> &[Representation<F>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.terms.iter().map(|t| t.dim().to_vec()).collect()
    }

    /// Termwise isomorphism.
    pub fn same_as(&self, cat: &ModCat<F>, other: &Self) -> bool {
        self.len() == other.len() && self.terms.iter().zip(&other.terms).all(|(a, b)| cat.is_isomorphic(a, b))
    }

    pub fn without(&self, pos: usize) -> Self {
        let mut terms = self.terms.clone();
        terms.remove(pos);
        ExceptionalSequence { terms }
    }

    pub fn inserted(&self, pos: usize, m: Representation<F>) -> Self {
        let mut terms = self.terms.clone();
        terms.insert(pos, m);
        ExceptionalSequence { terms }
    }
}

/// `C → A^r[v] → C'[w]`, the triangle attached to an exceptional pair `(C, A)`.
#[derive(Clone, Debug)]
pub struct MutationTriangle<F: Scalar> {
    pub source: Representation<F>,
    pub r: usize,
    pub middle: Representation<F>,
    pub v: i32,
    pub result: Representation<F>,
    pub w: i32,
    /// The minimal left `add A`-approximation when `Hom(C, A) ≠ 0`.
    pub approximation: Option<Morphism<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairCase {
    Hom,
    Ext,
    Orthogonal,
}

impl<F: Scalar> ModCat<F> {
    pub fn is_exceptional_sequence(&self, terms: &[Representation<F>]) -> Result<bool> {
        if terms.len() > self.n() {
            return Ok(false);
        }
        for t in terms {
            if !self.is_exceptional(t)? {
                return Ok(false);
            }
        }
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                if self.hom_dim(&terms[j], &terms[i]) != 0 || self.ext1_dim(&terms[j], &terms[i])? != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The ordering of the simples along a topological order, which is exceptional.
    pub fn simple_sequence(&self) -> ExceptionalSequence<F> {
        let terms = self.quiver().topological_order().iter().map(|&v| self.simple(v).clone()).collect();
        ExceptionalSequence::from_terms(terms)
    }

    fn require_trivial_end(&self, a: &Representation<F>) -> Result<()> {
        let d = self.hom_dim(a, a);
        if d != 1 {
            return Err(Error::Unsupported(format!("End of {:?} has dimension {d}", a.dim())));
        }
        Ok(())
    }

    fn pair_case(&self, c: &Representation<F>, a: &Representation<F>) -> Result<PairCase> {
        let hom = self.hom_dim(c, a);
        let ext = self.ext1_dim(c, a)?;
        Ok(match (hom, ext) {
            (0, 0) => PairCase::Orthogonal,
            (_, 0) => PairCase::Hom,
            (0, _) => PairCase::Ext,
            _ => {
                return Err(Error::inconsistent(format!(
                    "Hom and Ext¹ both nonzero from {:?} to {:?}",
                    c.dim(),
                    a.dim()
                )))
            }
        })
    }

    /// Whether `g: C → A` factors as `u ∘ f` through `f: C → T`.
    pub fn factors_through_left(&self, f: &Morphism<F>, g: &Morphism<F>) -> bool {
        let us = self.hom_basis(&f.target, &g.target);
        let cols: Vec<Vec<F>> = us.iter().map(|u| f.then(u).flatten()).collect();
        let len = g.flatten().len();
        if len == 0 {
            return true;
        }
        let m = Matrix::from_columns(len, &cols);
        matches!(m.solve(&g.flatten()), Ok(Some(_)))
    }

    /// Whether `g: A → B` factors as `f ∘ u` through `f: T → B`.
    pub fn factors_through_right(&self, f: &Morphism<F>, g: &Morphism<F>) -> bool {
        let us = self.hom_basis(&g.source, &f.source);
        let cols: Vec<Vec<F>> = us.iter().map(|u| u.then(f).flatten()).collect();
        let len = g.flatten().len();
        if len == 0 {
            return true;
        }
        let m = Matrix::from_columns(len, &cols);
        matches!(m.solve(&g.flatten()), Ok(Some(_)))
    }

    /// Minimal left `add A`-approximation `C → A^t`: the stacked Hom basis,
    /// reduced by deleting copies while every map `C → A` still factors.
    pub fn left_approximation(&self, c: &Representation<F>, a: &Representation<F>) -> Result<Morphism<F>> {
        self.require_trivial_end(a)?;
        let q = self.quiver();
        let basis = self.hom_basis(c, a);
        let mut parts = basis.clone();
        let mut k = 0;
        while k < parts.len() {
            let mut fewer = parts.clone();
            fewer.remove(k);
            let f = Morphism::stack(q, c, &fewer);
            if basis.iter().all(|g| self.factors_through_left(&f, g)) {
                parts = fewer;
            } else {
                k += 1;
            }
        }
        Ok(Morphism::stack(q, c, &parts))
    }

    /// Minimal right `add A`-approximation `A^t → B`.
    pub fn right_approximation(&self, a: &Representation<F>, b: &Representation<F>) -> Result<Morphism<F>> {
        self.require_trivial_end(a)?;
        let q = self.quiver();
        let basis = self.hom_basis(a, b);
        let mut parts = basis.clone();
        let mut k = 0;
        while k < parts.len() {
            let mut fewer = parts.clone();
            fewer.remove(k);
            let f = Morphism::costack(q, b, &fewer);
            if basis.iter().all(|g| self.factors_through_right(&f, g)) {
                parts = fewer;
            } else {
                k += 1;
            }
        }
        Ok(Morphism::costack(q, b, &parts))
    }

    /// Cocycles `(δ_a: C_{s(a)} → A_{t(a)})` whose classes form a basis of `Ext¹(C, A)`.
    pub fn ext_cocycles(&self, c: &Representation<F>, a: &Representation<F>) -> Result<Vec<Vec<Matrix<F>>>> {
        let q = self.quiver();
        let n = q.num_vertices();
        let mut voff = vec![0];
        for v in 0..n {
            voff.push(voff[v] + a.dim()[v] * c.dim()[v]);
        }
        let mut aoff = vec![0];
        for &(s, t) in q.arrows() {
            let last = *aoff.last().unwrap();
            aoff.push(last + a.dim()[t] * c.dim()[s]);
        }
        let rows = *aoff.last().unwrap();
        // coboundary: (φ_v) ↦ (A_a φ_s − φ_t C_a)
        let mut d = Matrix::<F>::zeros(rows, voff[n]);
        for (ai, &(s, t)) in q.arrows().iter().enumerate() {
            for r in 0..a.dim()[t] {
                for col in 0..c.dim()[s] {
                    let row = aoff[ai] + r * c.dim()[s] + col;
                    for k in 0..a.dim()[s] {
                        let x = a.map(ai)[(r, k)].clone();
                        let j = voff[s] + k * c.dim()[s] + col;
                        d[(row, j)] = d[(row, j)].clone() + x;
                    }
                    for k in 0..c.dim()[t] {
                        let x = c.map(ai)[(k, col)].clone();
                        let j = voff[t] + r * c.dim()[t] + k;
                        d[(row, j)] = d[(row, j)].clone() - x;
                    }
                }
            }
        }
        let comp = d.column_space().complement_indices();
        let expected = self.ext1_dim(c, a)?;
        if comp.len() != expected {
            return Err(Error::inconsistent(format!(
                "cocycle complement has dimension {} but Ext¹ has dimension {expected}",
                comp.len()
            )));
        }
        Ok(comp
            .into_iter()
            .map(|idx| {
                q.arrows()
                    .iter()
                    .enumerate()
                    .map(|(ai, &(s, t))| {
                        let mut m = Matrix::zeros(a.dim()[t], c.dim()[s]);
                        if idx >= aoff[ai] && idx < aoff[ai + 1] {
                            let local = idx - aoff[ai];
                            m[(local / c.dim()[s], local % c.dim()[s])] = F::one();
                        }
                        m
                    })
                    .collect()
            })
            .collect())
    }

    /// Middle term of the universal extension `0 → A^s → E → C → 0`.
    pub fn universal_extension(&self, c: &Representation<F>, a: &Representation<F>) -> Result<Representation<F>> {
        let q = self.quiver();
        let cocycles = self.ext_cocycles(c, a)?;
        let s = cocycles.len();
        let big = a.power(q, s);
        let dim: Vec<usize> = big.dim().iter().zip(c.dim()).map(|(x, y)| x + y).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, &(src, tgt))| {
                let delta = cocycles
                    .iter()
                    .fold(Matrix::zeros(0, c.dim()[src]), |acc, z| acc.vstack(&z[ai]));
                let mut m = big.map(ai).direct_sum(c.map(ai));
                m.set_block(0, big.dim()[src], &delta);
                debug_assert_eq!(m.shape(), (dim[tgt], dim[src]));
                m
            })
            .collect();
        Representation::new(q, dim, maps)
    }

    /// Middle term of the universal extension `0 → B → L → A^s → 0`.
    pub fn universal_coextension(&self, a: &Representation<F>, b: &Representation<F>) -> Result<Representation<F>> {
        let q = self.quiver();
        let cocycles = self.ext_cocycles(a, b)?;
        let s = cocycles.len();
        let big = a.power(q, s);
        let dim: Vec<usize> = b.dim().iter().zip(big.dim()).map(|(x, y)| x + y).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, &(src, _))| {
                let delta = cocycles
                    .iter()
                    .fold(Matrix::zeros(b.dim()[q.arrows()[ai].1], 0), |acc, z| acc.hstack(&z[ai]));
                let mut m = b.map(ai).direct_sum(big.map(ai));
                m.set_block(0, b.dim()[src], &delta);
                m
            })
            .collect();
        Representation::new(q, dim, maps)
    }

    /// `E_i*` for the pair `(E_i, E_{i+1}) = (c, a)`.
    fn right_mutant(&self, c: &Representation<F>, a: &Representation<F>) -> Result<Representation<F>> {
        Ok(self.mutation_triangle(c, a)?.result)
    }

    /// The module `X` with `(X, a)` mutating to `(a, b)`.
    fn left_mutant(&self, a: &Representation<F>, b: &Representation<F>) -> Result<Representation<F>> {
        let x = match self.pair_case(a, b)? {
            PairCase::Orthogonal => b.clone(),
            PairCase::Ext => self.universal_coextension(a, b)?,
            PairCase::Hom => {
                let g = self.right_approximation(a, b)?;
                if g.is_epi() {
                    self.kernel(&g)?.0
                } else if g.is_mono() {
                    self.cokernel(&g)?.0
                } else {
                    return Err(Error::ApproximationNeitherMonoNorEpi);
                }
            }
        };
        Ok(self.tidy(&x))
    }

    fn check_index(&self, seq: &ExceptionalSequence<F>, i: usize) -> Result<()> {
        if i + 1 >= seq.len() {
            return Err(Error::InvalidArgument(format!(
                "mutation index {} out of range for a sequence of length {}",
                i + 1,
                seq.len()
            )));
        }
        Ok(())
    }

    /// Right mutation `μ_i` at the pair `(E_i, E_{i+1})`, `i` counted from 0.
    pub fn mutate(&self, seq: &ExceptionalSequence<F>, i: usize) -> Result<ExceptionalSequence<F>> {
        self.check_index(seq, i)?;
        let (c, a) = (&seq.terms[i], &seq.terms[i + 1]);
        let star = self.right_mutant(c, a)?;
        let mut terms = seq.terms.clone();
        terms[i] = a.clone();
        terms[i + 1] = star;
        self.checked(terms, "mutation")
    }

    /// Left mutation, the inverse of [`ModCat::mutate`] at the same index.
    pub fn mutate_inverse(&self, seq: &ExceptionalSequence<F>, i: usize) -> Result<ExceptionalSequence<F>> {
        self.check_index(seq, i)?;
        let (a, b) = (&seq.terms[i], &seq.terms[i + 1]);
        let x = self.left_mutant(a, b)?;
        let mut terms = seq.terms.clone();
        terms[i] = x;
        terms[i + 1] = a.clone();
        self.checked(terms, "inverse mutation")
    }

    fn checked(&self, terms: Vec<Representation<F>>, what: &str) -> Result<ExceptionalSequence<F>> {
        if !self.is_exceptional_sequence(&terms)? {
            return Err(Error::InvariantViolation {
                clause: "exceptional".into(),
                detail: format!("{what} produced a non-exceptional sequence"),
            });
        }
        Ok(ExceptionalSequence { terms })
    }

    /// The triangle `C → A^r[v] → C'[w]` whose third term is the mutation of `C` past `A`.
    pub fn mutation_triangle(&self, c: &Representation<F>, a: &Representation<F>) -> Result<MutationTriangle<F>> {
        let q = self.quiver();
        let tri = match self.pair_case(c, a)? {
            PairCase::Orthogonal => MutationTriangle {
                source: c.clone(),
                r: 0,
                middle: a.clone(),
                v: 0,
                result: c.clone(),
                w: 1,
                approximation: None,
            },
            PairCase::Ext => {
                let r = self.ext1_dim(c, a)?;
                let e = self.universal_extension(c, a)?;
                MutationTriangle {
                    source: c.clone(),
                    r,
                    middle: a.clone(),
                    v: 1,
                    result: self.tidy(&e),
                    w: 1,
                    approximation: None,
                }
            }
            PairCase::Hom => {
                let f = self.left_approximation(c, a)?;
                let r = f.target.total_dim() / a.total_dim();
                let (result, w) = if f.is_mono() {
                    (self.cokernel(&f)?.0, 0)
                } else if f.is_epi() {
                    (self.kernel(&f)?.0, 1)
                } else {
                    return Err(Error::ApproximationNeitherMonoNorEpi);
                };
                debug_assert_eq!(f.target.dim(), a.power(q, r).dim());
                MutationTriangle { source: c.clone(), r, middle: a.clone(), v: 0, result: self.tidy(&result), w, approximation: Some(f) }
            }
        };
        Ok(tri)
    }

    /// For an almost complete sequence, the unique indecomposable completing
    /// it at each insertion position `0..=len`.
    pub fn complements_almost_complete(
        &self,
        seq: &ExceptionalSequence<F>,
    ) -> Result<Vec<(usize, Representation<F>)>> {
        if seq.len() + 1 != self.n() {
            return Err(Error::InvalidArgument(format!(
                "sequence of length {} is not almost complete for n = {}",
                seq.len(),
                self.n()
            )));
        }
        let ind = self.indecomposables()?;
        let mut out = Vec::with_capacity(self.n());
        for pos in 0..=seq.len() {
            let mut found = Vec::new();
            for m in ind {
                let mut terms = seq.terms.clone();
                terms.insert(pos, m.clone());
                if self.is_exceptional_sequence(&terms)? {
                    found.push(m.clone());
                }
            }
            if found.len() != 1 {
                return Err(Error::inconsistent(format!(
                    "{} complements at position {pos}",
                    found.len()
                )));
            }
            out.push((pos, found.remove(0)));
        }
        Ok(out)
    }

    /// All complete exceptional sequences, by exhaustive search over ordered
    /// tuples of indecomposables, sorted by their tuples of dimension vectors.
    pub fn complete_sequences(&self) -> Result<Vec<ExceptionalSequence<F>>> {
        let ind: Vec<Representation<F>> = self
            .indecomposables()?
            .iter()
            .filter(|m| self.ext1_dim(m, m).map(|e| e == 0).unwrap_or(false))
            .cloned()
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_sequences(&ind, &mut current, &mut out)?;
        out.sort_by_key(|s: &ExceptionalSequence<F>| s.dims());
        Ok(out)
    }

    fn extend_sequences(
        &self,
        pool: &[Representation<F>],
        current: &mut Vec<Representation<F>>,
        out: &mut Vec<ExceptionalSequence<F>>,
    ) -> Result<()> {
        if current.len() == self.n() {
            out.push(ExceptionalSequence { terms: current.clone() });
            return Ok(());
        }
        for m in pool {
            let mut ok = true;
            for e in current.iter() {
                if self.hom_dim(m, e) != 0 || self.ext1_dim(m, e)? != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                current.push(m.clone());
                self.extend_sequences(pool, current, out)?;
                current.pop();
            }
        }
        Ok(())
    }

    /// Closure of the simple sequence under mutations and their inverses.
    pub fn mutation_orbit(&self) -> Result<Vec<ExceptionalSequence<F>>> {
        if !self.is_dynkin() {
            return Err(Error::RepInfinite);
        }
        let start = self.simple_sequence();
        let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            if !seen.insert(s.dims()) {
                continue;
            }
            for i in 0..s.len().saturating_sub(1) {
                queue.push_back(self.mutate(&s, i)?);
                queue.push_back(self.mutate_inverse(&s, i)?);
            }
            out.push(s);
        }
        out.sort_by_key(|s| s.dims());
        Ok(out)
    }

    /// The indecomposables of `A^⊥` and the Ext-projective ones among them.
    pub fn perpendicular(&self, a: &Representation<F>) -> Result<Perpendicular<F>> {
        let mut objects = Vec::new();
        for u in self.indecomposables()? {
            if self.hom_dim(a, u) == 0 && self.ext1_dim(a, u)? == 0 {
                objects.push(u.clone());
            }
        }
        let mut ext_projectives = Vec::new();
        for u in &objects {
            let mut proj = true;
            for v in &objects {
                if self.ext1_dim(u, v)? != 0 {
                    proj = false;
                    break;
                }
            }
            if proj {
                ext_projectives.push(u.clone());
            }
        }
        if self.is_exceptional(a)? && ext_projectives.len() + 1 != self.n() {
            return Err(Error::inconsistent(format!(
                "perpendicular category has {} Ext-projectives, expected {}",
                ext_projectives.len(),
                self.n() - 1
            )));
        }
        Ok(Perpendicular { objects, ext_projectives })
    }
}

#[derive(Clone, Debug)]
pub struct Perpendicular<F: Scalar> {
    pub objects: Vec<Representation<F>>,
    pub ext_projectives: Vec<Representation<F>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::Rational;

    fn a2() -> ModCat<Rational> {
        ModCat::new(Quiver::new(2, &[(2, 1)]).unwrap())
    }

    fn seq(c: &ModCat<Rational>, t: &[&Representation<Rational>]) -> ExceptionalSequence<Rational> {
        ExceptionalSequence::new(c, t.iter().map(|x| (*x).clone()).collect()).unwrap()
    }

    #[test]
    fn validity_on_a2() {
        let c = a2();
        let (s1, s2, p2) = (c.simple(0), c.simple(1), c.projective(1));
        assert!(c.is_exceptional_sequence(&[s1.clone(), p2.clone()]).unwrap());
        assert!(!c.is_exceptional_sequence(&[p2.clone(), s1.clone()]).unwrap());
        assert!(c.is_exceptional_sequence(&[s2.clone()]).unwrap());
        assert_eq!(c.simple_sequence().dims(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn mutation_cycle_on_a2() {
        let c = a2();
        let (s1, s2, p2) = (c.simple(0), c.simple(1), c.projective(1));
        let e = seq(&c, &[s1, p2]);
        let m = c.mutate(&e, 0).unwrap();
        assert!(m.same_as(&c, &seq(&c, &[p2, s2])));
        let m2 = c.mutate(&m, 0).unwrap();
        assert!(m2.same_as(&c, &seq(&c, &[s2, s1])));
        let m3 = c.mutate(&m2, 0).unwrap();
        assert!(m3.same_as(&c, &e));
        assert!(c.mutate_inverse(&m, 0).unwrap().same_as(&c, &e));
        assert!(c.mutate(&e, 1).is_err());
    }

    #[test]
    fn orthogonal_pair_is_swapped() {
        let c = ModCat::<Rational>::new(Quiver::new(2, &[]).unwrap());
        let e = seq(&c, &[c.simple(0), c.simple(1)]);
        let m = c.mutate(&e, 0).unwrap();
        assert_eq!(m.dims(), vec![vec![0, 1], vec![1, 0]]);
        let t = c.mutation_triangle(c.simple(0), c.simple(1)).unwrap();
        assert_eq!((t.r, t.w), (0, 1));
        assert_eq!(&t.result, c.simple(0));
        assert!(c.mutate_inverse(&m, 0).unwrap().same_as(&c, &e));
    }

    #[test]
    fn triangle_on_a2() {
        let c = a2();
        let (s1, s2, p2) = (c.simple(0), c.simple(1), c.projective(1));
        let t = c.mutation_triangle(s1, p2).unwrap();
        assert_eq!((t.r, t.v, t.w, t.result.dim()), (1, 0, 0, s2.dim()));
        let t = c.mutation_triangle(s2, s1).unwrap();
        assert_eq!((t.r, t.v, t.w, t.result.dim()), (1, 1, 1, p2.dim()));
    }

    #[test]
    fn mutation_on_the_triangle_quiver() {
        let c = ModCat::<Rational>::new(Quiver::new(3, &[(2, 1), (3, 1), (3, 2)]).unwrap());
        let (p1, p2, p3) = (c.projective(0), c.projective(1), c.projective(2));
        let e = seq(&c, &[p1, p2, p3]);
        let m1 = c.mutate(&e, 0).unwrap();
        assert_eq!(m1.dims(), vec![vec![1, 1, 0], vec![0, 1, 0], vec![2, 1, 1]]);
        let m2 = c.mutate(&e, 1).unwrap();
        assert_eq!(m2.dims(), vec![vec![1, 0, 0], vec![2, 1, 1], vec![1, 0, 1]]);
        for i in 0..2 {
            assert!(c.mutate_inverse(&c.mutate(&e, i).unwrap(), i).unwrap().same_as(&c, &e));
        }
    }

    #[test]
    fn complements_on_a2() {
        let c = a2();
        let comp = c.complements_almost_complete(&seq(&c, &[c.projective(1)])).unwrap();
        let dims: Vec<_> = comp.iter().map(|(p, m)| (*p, m.dim().to_vec())).collect();
        assert_eq!(dims, vec![(0, vec![1, 0]), (1, vec![0, 1])]);
        let comp = c.complements_almost_complete(&seq(&c, &[c.simple(0)])).unwrap();
        let dims: Vec<_> = comp.iter().map(|(p, m)| (*p, m.dim().to_vec())).collect();
        assert_eq!(dims, vec![(0, vec![0, 1]), (1, vec![1, 1])]);
    }

    #[test]
    fn enumeration_matches_orbit() {
        let c = a2();
        let all = c.complete_sequences().unwrap();
        assert_eq!(all.len(), 3);
        let orbit = c.mutation_orbit().unwrap();
        assert_eq!(all.iter().map(|s| s.dims()).collect::<Vec<_>>(), orbit.iter().map(|s| s.dims()).collect::<Vec<_>>());
    }

    #[test]
    fn perpendicular_on_a2() {
        let c = a2();
        let p = c.perpendicular(c.projective(1)).unwrap();
        assert_eq!(p.objects.len(), 1);
        assert_eq!(p.ext_projectives[0].dim(), &[1, 0]);
        let p = c.perpendicular(c.simple(0)).unwrap();
        assert_eq!(p.objects[0].dim(), &[0, 1]);
    }
}
