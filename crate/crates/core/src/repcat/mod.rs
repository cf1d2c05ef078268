//! The module category `mod kQ` with explicit representations.

mod category;
mod decompose;
mod kercoker;
mod reflection;
mod resolution;

use std::fmt;

pub use category::{ModCat, Standard};
pub(crate) use decompose::canonical_cmp;
pub use kercoker::KernelCokernel;
pub use reflection::{reflect_minus, reflect_plus, Direction};
pub use resolution::Resolution;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::quiver::Quiver;
use crate::scalar::Scalar;

/// A finite-dimensional representation: one vector space dimension per
/// vertex and one matrix per arrow, of shape `dim[target] x dim[source]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation<F> {
    dim: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Scalar> fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dim)?;
        if self.maps.iter().any(|m| m.rows() > 0 && m.cols() > 0) {
            write!(f, "{:?}", self.maps)?;
        }
        Ok(())
    }
}

impl<F: Scalar> Representation<F> {
    pub fn new(q: &Quiver, dim: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dim.len() != q.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector of length {} on {} vertices",
                dim.len(),
                q.num_vertices()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, (&(s, t), m)) in q.arrows().iter().zip(&maps).enumerate() {
            if m.shape() != (dim[t], dim[s]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a + 1,
                    dim[t],
                    dim[s],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { dim, maps })
    }

    pub(crate) fn from_parts(dim: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Representation { dim, maps }
    }

    pub fn zero(q: &Quiver) -> Self {
        let dim = vec![0; q.num_vertices()];
        let maps = q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { dim, maps }
    }

    pub fn dim(&self) -> &[usize] {
        &self.dim
    }

    pub fn total_dim(&self) -> usize {
        self.dim.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let dim = self.dim.iter().zip(&other.dim).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect();
        Representation { dim, maps }
    }

    pub fn power(&self, q: &Quiver, k: usize) -> Self {
        (0..k).fold(Self::zero(q), |acc, _| acc.direct_sum(self))
    }

    pub fn sum_of(q: &Quiver, parts: &[Self]) -> Self {
        parts.iter().fold(Self::zero(q), |acc, p| acc.direct_sum(p))
    }

    /// The linear map along a path given as arrow indices, first arrow first.
    pub fn path_map(&self, q: &Quiver, start: usize, path: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.dim[start]);
        for &a in path {
            m = self.maps[a].mul_mat(&m);
        }
        debug_assert!(path.first().is_none_or(|&a| q.arrows()[a].0 == start));
        m
    }

    /// The subrepresentation spanned by the columns of `bases[v]` at each
    /// vertex, written in those bases. Fails if the subspaces are not
    /// invariant under the structure maps.
    pub fn restrict(&self, q: &Quiver, bases: &[Matrix<F>]) -> Result<Self> {
        let dim: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            let image = self.maps[a].mul_mat(&bases[s]);
            let m = bases[t]
                .solve_matrix(&image)?
                .ok_or_else(|| Error::inconsistent("subspace is not a subrepresentation"))?;
            maps.push(m);
        }
        Ok(Representation { dim, maps })
    }

    /// The quotient by the subrepresentation spanned by `bases[v]`, together
    /// with the projection matrix at each vertex.
    pub fn quotient(&self, q: &Quiver, bases: &[Matrix<F>]) -> Result<(Self, Vec<Matrix<F>>)> {
        let mut proj = Vec::with_capacity(bases.len());
        let mut lifts = Vec::with_capacity(bases.len());
        for (v, b) in bases.iter().enumerate() {
            let span = b.column_space();
            let comp = span.complement_indices();
            let lift = Matrix::identity(self.dim[v]).select_columns(&comp);
            let change = span.hstack(&lift);
            let inv = change
                .inverse()
                .ok_or_else(|| Error::inconsistent("completed basis is not invertible"))?;
            let rows: Vec<usize> = (span.cols()..self.dim[v]).collect();
            proj.push(inv.select_rows(&rows));
            lifts.push(lift);
        }
        let dim: Vec<usize> = lifts.iter().map(|l| l.cols()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| proj[t].mul_mat(&self.maps[a]).mul_mat(&lifts[s]))
            .collect();
        Ok((Representation { dim, maps }, proj))
    }
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism<F> {
    pub source: Representation<F>,
    pub target: Representation<F>,
    pub components: Vec<Matrix<F>>,
}

impl<F: Scalar> fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism{:?}->{:?} {:?}", self.source.dim, self.target.dim, self.components)
    }
}

impl<F: Scalar> Morphism<F> {
    /// Checks shapes and the commuting square at every arrow.
    pub fn new(
        q: &Quiver,
        source: Representation<F>,
        target: Representation<F>,
        components: Vec<Matrix<F>>,
    ) -> Result<Self> {
        if components.len() != q.num_vertices() {
            return Err(Error::DimensionMismatch("one component per vertex required".into()));
        }
        for (v, c) in components.iter().enumerate() {
            if c.shape() != (target.dim[v], source.dim[v]) {
                return Err(Error::DimensionMismatch(format!("component at vertex {}", v + 1)));
            }
        }
        let f = Morphism { source, target, components };
        if !f.commutes(q) {
            return Err(Error::InvalidArgument("components do not commute with the structure maps".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(
        source: Representation<F>,
        target: Representation<F>,
        components: Vec<Matrix<F>>,
    ) -> Self {
        Morphism { source, target, components }
    }

    pub fn commutes(&self, q: &Quiver) -> bool {
        q.arrows().iter().enumerate().all(|(a, &(s, t))| {
            self.target.maps[a].mul_mat(&self.components[s]) == self.components[t].mul_mat(&self.source.maps[a])
        })
    }

    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        let components = source.dim.iter().zip(&target.dim).map(|(&s, &t)| Matrix::zeros(t, s)).collect();
        Morphism { source: source.clone(), target: target.clone(), components }
    }

    pub fn identity(x: &Representation<F>) -> Self {
        let components = x.dim.iter().map(|&d| Matrix::identity(d)).collect();
        Morphism { source: x.clone(), target: x.clone(), components }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism<F>) -> Morphism<F> {
        let components = self.components.iter().zip(&next.components).map(|(a, b)| b.mul_mat(a)).collect();
        Morphism { source: self.source.clone(), target: next.target.clone(), components }
    }

    pub fn add(&self, other: &Self) -> Self {
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), components }
    }

    pub fn scale(&self, s: &F) -> Self {
        let components = self.components.iter().map(|c| c.scale(s)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), components }
    }

    pub fn is_mono(&self) -> bool {
        self.components.iter().all(|c| c.is_injective())
    }

    pub fn is_epi(&self) -> bool {
        self.components.iter().all(|c| c.is_surjective())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// All entries of all components, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<F> {
        self.components.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    /// The map `X -> Y_1 ⊕ ... ⊕ Y_k` with the given components.
    pub fn stack(q: &Quiver, source: &Representation<F>, parts: &[Morphism<F>]) -> Self {
        let targets: Vec<_> = parts.iter().map(|p| p.target.clone()).collect();
        let target = Representation::sum_of(q, &targets);
        let components = (0..q.num_vertices())
            .map(|v| {
                parts
                    .iter()
                    .fold(Matrix::zeros(0, source.dim[v]), |acc, p| acc.vstack(&p.components[v]))
            })
            .collect();
        Morphism { source: source.clone(), target, components }
    }

    /// The map `X_1 ⊕ ... ⊕ X_k -> Y` with the given components.
    pub fn costack(q: &Quiver, target: &Representation<F>, parts: &[Morphism<F>]) -> Self {
        let sources: Vec<_> = parts.iter().map(|p| p.source.clone()).collect();
        let source = Representation::sum_of(q, &sources);
        let components = (0..q.num_vertices())
            .map(|v| {
                parts
                    .iter()
                    .fold(Matrix::zeros(target.dim[v], 0), |acc, p| acc.hstack(&p.components[v]))
            })
            .collect();
        Morphism { source, target: target.clone(), components }
    }
}

/// A module placed in a single degree of the derived category: `module[shift]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Stalk<F: Scalar> {
    pub module: Representation<F>,
    pub shift: i32,
}

impl<F: Scalar> Stalk<F> {
    pub fn new(module: Representation<F>, shift: i32) -> Self {
        Stalk { module, shift }
    }

    pub fn shifted(&self, by: i32) -> Self {
        Stalk { module: self.module.clone(), shift: self.shift + by }
    }
}
