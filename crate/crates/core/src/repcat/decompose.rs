use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ModCat, Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::Scalar;

/// Largest integer coefficient whose divisors we are willing to enumerate.
const DIVISOR_LIMIT: u64 = 1 << 40;

impl<F: Scalar> ModCat<F> {
    /// Rank of the trace form on `End(X)`. For `X ≠ 0` this is the dimension
    /// of `End(X)/J`, so `X` is indecomposable exactly when it equals 1.
    fn trace_form_rank(&self, ends: &[Morphism<F>]) -> usize {
        let k = ends.len();
        let gram = Matrix::from_fn(k, k, |i, j| {
            ends[i]
                .components
                .iter()
                .zip(&ends[j].components)
                .fold(F::zero(), |acc, (a, b)| acc + a.mul_mat(b).trace())
        });
        gram.rank()
    }

    pub fn is_indecomposable(&self, x: &Representation<F>) -> bool {
        if x.is_zero() {
            return false;
        }
        let ends = self.hom_basis(x, x);
        ends.len() == 1 || self.trace_form_rank(&ends) == 1
    }

    /// Isomorphism test. Indecomposable modules have local endomorphism
    /// rings, so `X ≅ Y` iff some composite `g ∘ f` of basis maps is invertible.
    pub fn is_isomorphic(&self, x: &Representation<F>, y: &Representation<F>) -> bool {
        if x.dim() != y.dim() {
            return false;
        }
        if x == y {
            return true;
        }
        if x.is_zero() {
            return true;
        }
        let x_indec = self.is_indecomposable(x);
        if x_indec != self.is_indecomposable(y) {
            return false;
        }
        if x_indec {
            if self.is_dynkin() {
                return true;
            }
            let there = self.hom_basis(x, y);
            let back = self.hom_basis(y, x);
            return there.iter().any(|f| back.iter().any(|g| f.then(g).is_iso()));
        }
        match (self.decompose(x), self.decompose(y)) {
            (Ok(a), Ok(b)) => {
                a.len() == b.len()
                    && a.iter().zip(&b).all(|((m1, k1), (m2, k2))| k1 == k2 && self.is_isomorphic(m1, m2))
            }
            _ => false,
        }
    }

    /// Splits `X` into indecomposables, grouped up to isomorphism, sorted by
    /// dimension vector and then by the matrices of the representative.
    pub fn decompose(&self, x: &Representation<F>) -> Result<Vec<(Representation<F>, usize)>> {
        let mut pieces = Vec::new();
        self.split_into(x, &mut pieces)?;
        let mut groups: Vec<(Representation<F>, usize)> = Vec::new();
        for p in pieces {
            match groups.iter_mut().find(|(r, _)| self.is_isomorphic(r, &p)) {
                Some(g) => g.1 += 1,
                None => groups.push((p, 1)),
            }
        }
        groups.sort_by(|(a, _), (b, _)| canonical_cmp(a, b));
        Ok(groups)
    }

    /// The indecomposable summands with repetition, in the order of `decompose`.
    pub fn summands(&self, x: &Representation<F>) -> Result<Vec<Representation<F>>> {
        Ok(self
            .decompose(x)?
            .into_iter()
            .flat_map(|(m, k)| std::iter::repeat_n(m, k))
            .collect())
    }

    fn split_into(&self, x: &Representation<F>, out: &mut Vec<Representation<F>>) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        let ends = self.hom_basis(x, x);
        if ends.len() == 1 || self.trace_form_rank(&ends) == 1 {
            out.push(x.clone());
            return Ok(());
        }
        let (a, b) = self.fitting_split(x, &ends)?;
        self.split_into(&a, out)?;
        self.split_into(&b, out)
    }

    /// Finds an endomorphism with a rational eigenvalue that is not its only
    /// eigenvalue and splits along the Fitting decomposition of `φ - λ`.
    fn fitting_split(
        &self,
        x: &Representation<F>,
        ends: &[Morphism<F>],
    ) -> Result<(Representation<F>, Representation<F>)> {
        let q = self.quiver();
        for phi in candidates(ends) {
            let total = block_matrix(&phi);
            for lambda in rational_roots(&minimal_polynomial(&total)) {
                let Some(lambda) = F::from_big(&lambda) else { continue };
                let power = x.total_dim();
                let shifted: Vec<Matrix<F>> = phi
                    .components
                    .iter()
                    .map(|c| c.sub(&Matrix::identity(c.rows()).scale(&lambda)).pow(power))
                    .collect();
                let ker: Vec<Matrix<F>> = shifted
                    .iter()
                    .map(|m| Matrix::from_columns(m.cols(), &m.kernel_basis()))
                    .collect();
                let im: Vec<Matrix<F>> = shifted.iter().map(|m| m.column_space()).collect();
                let ker_dim: usize = ker.iter().map(|m| m.cols()).sum();
                if ker_dim == 0 || ker_dim == x.total_dim() {
                    continue;
                }
                return Ok((x.restrict(q, &ker)?, x.restrict(q, &im)?));
            }
        }
        Err(Error::Unsupported(format!(
            "no rational splitting endomorphism found for a module of dimension {:?}",
            x.dim()
        )))
    }
}

pub(crate) fn canonical_cmp<F: Scalar>(a: &Representation<F>, b: &Representation<F>) -> std::cmp::Ordering {
    a.dim().cmp(b.dim()).then_with(|| {
        let ka: Vec<String> = a.maps().iter().flat_map(|m| m.entries().iter().map(|e| e.to_string())).collect();
        let kb: Vec<String> = b.maps().iter().flat_map(|m| m.entries().iter().map(|e| e.to_string())).collect();
        ka.cmp(&kb)
    })
}

/// Basis elements, then pairwise sums and differences, then one weighted sum.
fn candidates<F: Scalar>(ends: &[Morphism<F>]) -> Vec<Morphism<F>> {
    let mut out: Vec<Morphism<F>> = ends.to_vec();
    for i in 0..ends.len() {
        for j in i + 1..ends.len() {
            out.push(ends[i].add(&ends[j]));
            out.push(ends[i].add(&ends[j].scale(&F::from_i64(-1))));
            out.push(ends[i].add(&ends[j].scale(&F::from_i64(2))));
        }
    }
    if let Some(first) = ends.first() {
        let weighted = ends[1..]
            .iter()
            .enumerate()
            .fold(first.clone(), |acc, (k, e)| acc.add(&e.scale(&F::from_i64(k as i64 + 2))));
        out.push(weighted);
    }
    out
}

fn block_matrix<F: Scalar>(phi: &Morphism<F>) -> Matrix<F> {
    phi.components
        .iter()
        .fold(Matrix::zeros(0, 0), |acc, c| acc.direct_sum(c))
}

/// Monic minimal polynomial, coefficients from the constant term upwards.
fn minimal_polynomial<F: Scalar>(m: &Matrix<F>) -> Vec<BigRational> {
    let n = m.rows();
    let mut powers: Vec<Vec<F>> = vec![Matrix::<F>::identity(n).entries().to_vec()];
    let mut current = Matrix::identity(n);
    loop {
        current = current.mul_mat(m);
        let target = current.entries().to_vec();
        let basis = Matrix::from_columns(n * n, &powers);
        if let Ok(Some(coeffs)) = basis.solve(&target) {
            let mut poly: Vec<BigRational> = coeffs.iter().map(|c| -c.to_big()).collect();
            poly.push(BigRational::one());
            return poly;
        }
        powers.push(target);
    }
}

/// Distinct rational roots, ascending.
fn rational_roots(poly: &[BigRational]) -> Vec<BigRational> {
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = poly.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    if ints.iter().all(|c| c.is_zero()) {
        return roots;
    }
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        while ints.first().is_some_and(|c| c.is_zero()) {
            ints.remove(0);
        }
    }
    let (Some(lead), Some(constant)) = (ints.last(), ints.first()) else {
        return roots;
    };
    let (Some(ps), Some(qs)) = (divisors(constant), divisors(lead)) else {
        return roots;
    };
    let mut found = Vec::new();
    for p in &ps {
        for qd in &qs {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(*p) * sign, BigInt::from(*qd));
                if !found.contains(&r) && evaluate(&ints, &r).is_zero() {
                    found.push(r);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    roots
}

fn divisors(c: &BigInt) -> Option<Vec<u64>> {
    let c = c.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= c {
        if c % d == 0 {
            out.push(d);
            if d != c / d {
                out.push(c / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

fn evaluate(ints: &[BigInt], r: &BigRational) -> BigRational {
    ints.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * r + BigRational::from_integer(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn roots_of_product_of_linear_factors() {
        // (x - 2)(x + 1/3) x = x^3 - 5/3 x^2 - 2/3 x
        let poly = vec![q(0), BigRational::new((-2).into(), 3.into()), BigRational::new((-5).into(), 3.into()), q(1)];
        let roots = rational_roots(&poly);
        assert_eq!(roots, vec![BigRational::new((-1).into(), 3.into()), q(0), q(2)]);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_roots() {
        assert!(rational_roots(&[q(-2), q(0), q(1)]).is_empty());
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let m: Matrix<BigRational> = Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
        assert_eq!(minimal_polynomial(&m), vec![q(0), q(-1), q(1)]);
    }
}
