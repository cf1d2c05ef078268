//! The bounded derived category of `mod kQ`, with objects realized as bounded
//! complexes of projectives.

mod hom;
mod silting;

use std::cmp::Ordering;

pub use hom::{Approximation, HomSpace};
pub use silting::{ExchangeTriangle, SiltingCandidate, WindowComplement};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::quiver::Quiver;
use crate::repcat::{canonical_cmp, ModCat, Morphism, Representation, Stalk};
use crate::scalar::Scalar;

/// A bounded complex `X^lo → X^{lo+1} → ... → X^hi` with cohomological
/// differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex<F: Scalar> {
    lo: i32,
    terms: Vec<Representation<F>>,
    /// `diffs[k]: terms[k] → terms[k+1]`
    diffs: Vec<Morphism<F>>,
    zero: Representation<F>,
}

impl<F: Scalar> Complex<F> {
    /// Validates shapes, commutativity and `d∘d = 0`, then trims zero terms at
    /// both ends.
    pub fn new(q: &Quiver, lo: i32, terms: Vec<Representation<F>>, diffs: Vec<Morphism<F>>) -> Result<Self> {
        if diffs.len() + 1 != terms.len() && !(terms.is_empty() && diffs.is_empty()) {
            return Err(Error::DimensionMismatch("need one differential between consecutive terms".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source != terms[k] || d.target != terms[k + 1] {
                return Err(Error::DimensionMismatch(format!("differential in degree {}", lo + k as i32)));
            }
            if !d.commutes(q) {
                return Err(Error::InvalidArgument(format!("differential in degree {} is not a morphism", lo + k as i32)));
            }
        }
        for w in diffs.windows(2) {
            if !w[0].then(&w[1]).is_zero() {
                return Err(Error::InvalidArgument("differentials do not compose to zero".into()));
            }
        }
        Ok(Self::from_parts(q, lo, terms, diffs))
    }

    pub(crate) fn from_parts(q: &Quiver, lo: i32, terms: Vec<Representation<F>>, diffs: Vec<Morphism<F>>) -> Self {
        let mut c = Complex { lo, terms, diffs, zero: Representation::zero(q) };
        c.trim();
        c
    }

    pub fn zero(q: &Quiver) -> Self {
        Self::from_parts(q, 0, vec![], vec![])
    }

    fn trim(&mut self) {
        while self.terms.last().is_some_and(|t| t.is_zero()) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(|t| t.is_zero()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest occupied degree; `lo - 1` for the zero complex.
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn term(&self, k: i32) -> &Representation<F> {
        if k < self.lo || k > self.hi() {
            &self.zero
        } else {
            &self.terms[(k - self.lo) as usize]
        }
    }

    /// `d^k: X^k → X^{k+1}`.
    pub fn diff(&self, k: i32) -> Morphism<F> {
        if k >= self.lo && k < self.hi() {
            self.diffs[(k - self.lo) as usize].clone()
        } else {
            Morphism::zero(self.term(k), self.term(k + 1))
        }
    }

    /// `X[s]`: `X[s]^k = X^{k+s}` with differential `(-1)^s d`.
    pub fn shift(&self, s: i32) -> Self {
        let sign = if s % 2 == 0 { F::one() } else { -F::one() };
        Complex {
            lo: if self.is_zero() { 0 } else { self.lo - s },
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn sum(q: &Quiver, parts: &[Complex<F>]) -> Self {
        let nonzero: Vec<&Complex<F>> = parts.iter().filter(|p| !p.is_zero()).collect();
        let Some(lo) = nonzero.iter().map(|p| p.lo).min() else {
            return Self::zero(q);
        };
        let hi = nonzero.iter().map(|p| p.hi()).max().unwrap();
        let term = |k: i32| Representation::sum_of(q, &parts.iter().map(|p| p.term(k).clone()).collect::<Vec<_>>());
        let terms: Vec<_> = (lo..=hi).map(term).collect();
        let diffs = (lo..hi)
            .map(|k| {
                let ds: Vec<Morphism<F>> = parts.iter().map(|p| p.diff(k)).collect();
                diagonal(q, &ds)
            })
            .collect();
        Self::from_parts(q, lo, terms, diffs)
    }
}

/// `⊕ f_i` between the direct sums of sources and targets.
pub(crate) fn diagonal<F: Scalar>(q: &Quiver, parts: &[Morphism<F>]) -> Morphism<F> {
    let source = Representation::sum_of(q, &parts.iter().map(|p| p.source.clone()).collect::<Vec<_>>());
    let target = Representation::sum_of(q, &parts.iter().map(|p| p.target.clone()).collect::<Vec<_>>());
    let components = (0..q.num_vertices())
        .map(|v| {
            parts
                .iter()
                .fold(Matrix::zeros(0, 0), |acc, p| acc.direct_sum(&p.components[v]))
        })
        .collect();
    Morphism::from_parts(source, target, components)
}

/// `[[a, b], [c, d]]` as a map `X1 ⊕ X2 → Y1 ⊕ Y2`.
fn block2<F: Scalar>(q: &Quiver, a: &Morphism<F>, b: &Morphism<F>, c: &Morphism<F>, d: &Morphism<F>) -> Morphism<F> {
    let source = a.source.direct_sum(&b.source);
    let target = a.target.direct_sum(&c.target);
    let components = (0..q.num_vertices())
        .map(|v| {
            let top = a.components[v].hstack(&b.components[v]);
            let bottom = c.components[v].hstack(&d.components[v]);
            top.vstack(&bottom)
        })
        .collect();
    Morphism::from_parts(source, target, components)
}

/// A chain map; `components[k - source.lo()]: X^k → Y^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F: Scalar> {
    pub source: Complex<F>,
    pub target: Complex<F>,
    components: Vec<Morphism<F>>,
}

impl<F: Scalar> ChainMap<F> {
    pub fn new(q: &Quiver, source: Complex<F>, target: Complex<F>, components: Vec<Morphism<F>>) -> Result<Self> {
        if components.len() != source.terms.len() {
            return Err(Error::DimensionMismatch("one component per source degree required".into()));
        }
        let f = ChainMap { source, target, components };
        for k in f.source.degrees() {
            let c = f.component(k);
            if &c.source != f.source.term(k) || &c.target != f.target.term(k) || !c.commutes(q) {
                return Err(Error::InvalidArgument(format!("component in degree {k}")));
            }
        }
        for k in f.source.lo() - 1..=f.source.hi() {
            let left = f.component(k).then(&f.target.diff(k));
            let right = f.source.diff(k).then(&f.component(k + 1));
            if left != right {
                return Err(Error::InvalidArgument(format!("not a chain map in degree {k}")));
            }
        }
        Ok(f)
    }

    pub fn zero(source: &Complex<F>, target: &Complex<F>) -> Self {
        let components = source.degrees().map(|k| Morphism::zero(source.term(k), target.term(k))).collect();
        ChainMap { source: source.clone(), target: target.clone(), components }
    }

    pub fn identity(x: &Complex<F>) -> Self {
        let components = x.terms.iter().map(Morphism::identity).collect();
        ChainMap { source: x.clone(), target: x.clone(), components }
    }

    pub fn component(&self, k: i32) -> Morphism<F> {
        if self.source.degrees().contains(&k) {
            self.components[(k - self.source.lo) as usize].clone()
        } else {
            Morphism::zero(self.source.term(k), self.target.term(k))
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ChainMap<F>) -> ChainMap<F> {
        let components = self.source.degrees().map(|k| self.component(k).then(&next.component(k))).collect();
        ChainMap { source: self.source.clone(), target: next.target.clone(), components }
    }

    pub fn add(&self, other: &Self) -> Self {
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), components }
    }

    pub fn scale(&self, s: &F) -> Self {
        let components = self.components.iter().map(|c| c.scale(s)).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), components }
    }

    /// Coordinates in `⊕_k Hom_k(X^k, Y^k)` over the source degrees.
    pub fn flatten(&self) -> Vec<F> {
        self.components.iter().flat_map(|c| c.flatten()).collect()
    }

    /// The map `X → Y_1 ⊕ ... ⊕ Y_k`.
    pub fn stack(q: &Quiver, source: &Complex<F>, parts: &[ChainMap<F>]) -> Self {
        let target = Complex::sum(q, &parts.iter().map(|p| p.target.clone()).collect::<Vec<_>>());
        let components = source
            .degrees()
            .map(|k| {
                let cs: Vec<Morphism<F>> = parts.iter().map(|p| p.component(k)).collect();
                Morphism::stack(q, source.term(k), &cs)
            })
            .collect();
        ChainMap { source: source.clone(), target, components }
    }

    /// The map `X_1 ⊕ ... ⊕ X_k → Y`.
    pub fn costack(q: &Quiver, target: &Complex<F>, parts: &[ChainMap<F>]) -> Self {
        let source = Complex::sum(q, &parts.iter().map(|p| p.source.clone()).collect::<Vec<_>>());
        let components = source
            .degrees()
            .map(|k| {
                let cs: Vec<Morphism<F>> = parts.iter().map(|p| p.component(k)).collect();
                Morphism::costack(q, target.term(k), &cs)
            })
            .collect();
        ChainMap { source, target: target.clone(), components }
    }
}

impl<F: Scalar> ModCat<F> {
    /// `M[d]` as its minimal projective resolution, `P0` in degree `-d`.
    pub fn stalk_complex(&self, x: &Stalk<F>) -> Result<Complex<F>> {
        let r = self.resolution(&x.module)?;
        let lo = -x.shift - 1;
        Ok(Complex::from_parts(self.quiver(), lo, vec![r.p1, r.p0], vec![r.differential]))
    }

    pub fn stalks_complex(&self, xs: &[Stalk<F>]) -> Result<Complex<F>> {
        let parts = xs.iter().map(|x| self.stalk_complex(x)).collect::<Result<Vec<_>>>()?;
        Ok(Complex::sum(self.quiver(), &parts))
    }

    /// The mapping cone: `Cone^k = X^{k+1} ⊕ Y^k`, `d = [[-d_X, 0], [f, d_Y]]`.
    pub fn cone(&self, f: &ChainMap<F>) -> Complex<F> {
        let q = self.quiver();
        let (x, y) = (&f.source, &f.target);
        let bounds: Vec<i32> = [(x.lo - 1, x.hi() - 1), (y.lo, y.hi())]
            .into_iter()
            .zip([x, y])
            .filter(|(_, c)| !c.is_zero())
            .flat_map(|((a, b), _)| [a, b])
            .collect();
        let (Some(&lo), Some(&hi)) = (bounds.iter().min(), bounds.iter().max()) else {
            return Complex::zero(q);
        };
        let terms: Vec<_> = (lo..=hi).map(|k| x.term(k + 1).direct_sum(y.term(k))).collect();
        let diffs = (lo..hi)
            .map(|k| {
                let a = x.diff(k + 1).scale(&-F::one());
                let b = Morphism::zero(y.term(k), x.term(k + 2));
                block2(q, &a, &b, &f.component(k + 1), &y.diff(k))
            })
            .collect();
        Complex::from_parts(q, lo, terms, diffs)
    }

    /// `Cone(g)[-1]`, completing `C → B → M` for `g: B → M`.
    pub fn cocone(&self, g: &ChainMap<F>) -> Complex<F> {
        self.cone(g).shift(-1)
    }

    /// `H^k(X) = ker d^k / im d^{k-1}`.
    pub fn cohomology(&self, x: &Complex<F>, k: i32) -> Result<Representation<F>> {
        let q = self.quiver();
        let kc = self.kernel_cokernel(&x.diff(k))?;
        let incoming = x.diff(k - 1);
        let bases = (0..q.num_vertices())
            .map(|v| {
                let coords = kc.inclusion.components[v]
                    .solve_matrix(&incoming.components[v])?
                    .ok_or_else(|| Error::inconsistent("image not contained in kernel"))?;
                Ok(coords.column_space())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(kc.kernel.quotient(q, &bases)?.0)
    }

    /// `X ≅ ⊕ H^k(X)[-k]`, split into indecomposable stalks, ordered by
    /// degree and then dimension vector. Dynkin summands are replaced by their
    /// enumerated representatives.
    pub fn normalize_stalks(&self, x: &Complex<F>) -> Result<Vec<Stalk<F>>> {
        let mut out = Vec::new();
        for k in x.degrees() {
            let h = self.cohomology(x, k)?;
            if h.is_zero() {
                continue;
            }
            for (m, mult) in self.decompose(&h)? {
                let m = self.tidy(&m);
                out.extend(std::iter::repeat_n(Stalk::new(m, -k), mult));
            }
        }
        out.sort_by(stalk_cmp);
        Ok(out)
    }

    /// The unique indecomposable stalk isomorphic to `x`.
    pub fn as_single_stalk(&self, x: &Complex<F>) -> Result<Stalk<F>> {
        let mut s = self.normalize_stalks(x)?;
        if s.len() != 1 {
            return Err(Error::inconsistent(format!("expected an indecomposable object, found {} stalks", s.len())));
        }
        Ok(s.pop().unwrap())
    }

    /// `dim Hom_D(X[a], Y[b])`, using that `H` is hereditary.
    pub fn hom_d_dim(&self, x: &Representation<F>, a: i32, y: &Representation<F>, b: i32) -> Result<usize> {
        match b - a {
            0 => Ok(self.hom_dim(x, y)),
            1 => self.ext1_dim(x, y),
            _ => Ok(0),
        }
    }

    pub fn hom_d_stalks(&self, x: &Stalk<F>, y: &Stalk<F>) -> Result<usize> {
        self.hom_d_dim(&x.module, x.shift, &y.module, y.shift)
    }

    pub fn stalks_isomorphic(&self, x: &Stalk<F>, y: &Stalk<F>) -> bool {
        x.shift == y.shift && self.is_isomorphic(&x.module, &y.module)
    }
}

/// Degree first, then the module order used for enumeration.
pub fn stalk_cmp<F: Scalar>(a: &Stalk<F>, b: &Stalk<F>) -> Ordering {
    a.shift.cmp(&b.shift).then_with(|| canonical_cmp(&a.module, &b.module))
}

#[cfg(test)]
mod tests;
