use super::{ModCat, Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::Scalar;

/// A minimal projective resolution `0 → P1 → P0 → M → 0`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Scalar> {
    pub p0: Representation<F>,
    pub p1: Representation<F>,
    /// `P1 → P0`
    pub differential: Morphism<F>,
    /// `P0 → M`
    pub augmentation: Morphism<F>,
}

impl<F: Scalar> ModCat<F> {
    /// Top of `M` at each vertex: indices of standard basis vectors completing
    /// the radical, which is spanned by the images of all incoming arrows.
    fn top_vectors(&self, m: &Representation<F>) -> Vec<(usize, Vec<F>)> {
        let q = self.quiver();
        let mut out = Vec::new();
        for i in 0..q.num_vertices() {
            let rad = q
                .arrows_into(i)
                .fold(Matrix::zeros(m.dim()[i], 0), |acc, (a, _)| acc.hstack(m.map(a)));
            for c in rad.column_space().complement_indices() {
                let mut v = vec![F::zero(); m.dim()[i]];
                v[c] = F::one();
                out.push((i, v));
            }
        }
        out
    }

    /// The projective cover `P0 → M`.
    pub fn projective_cover(&self, m: &Representation<F>) -> Morphism<F> {
        let q = self.quiver();
        let n = q.num_vertices();
        let parts: Vec<Morphism<F>> = self
            .top_vectors(m)
            .into_iter()
            .map(|(i, v)| {
                let p = self.projective(i).clone();
                let components = (0..n)
                    .map(|j| {
                        let cols: Vec<Vec<F>> = q
                            .paths(i, j)
                            .iter()
                            .map(|path| m.path_map(q, i, path).mul_vec(&v))
                            .collect();
                        Matrix::from_columns(m.dim()[j], &cols)
                    })
                    .collect();
                Morphism::from_parts(p, m.clone(), components)
            })
            .collect();
        Morphism::costack(q, m, &parts)
    }

    pub fn resolution(&self, m: &Representation<F>) -> Result<Resolution<F>> {
        if let Some(r) = self.cached_resolution(m) {
            return Ok(r);
        }
        let augmentation = self.projective_cover(m);
        if !augmentation.is_epi() {
            return Err(Error::inconsistent("projective cover is not surjective"));
        }
        let (p1, differential) = self.kernel(&augmentation)?;
        let r = Resolution { p0: augmentation.source.clone(), p1, differential, augmentation };
        self.store_resolution(m, r.clone());
        Ok(r)
    }
}
