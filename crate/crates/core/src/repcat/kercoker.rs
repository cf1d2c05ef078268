use super::{ModCat, Morphism, Representation};
use crate::error::Result;
use crate::exactla::Matrix;
use crate::scalar::Scalar;

/// Kernel, image and cokernel of a morphism with their structure maps.
#[derive(Clone, Debug)]
pub struct KernelCokernel<F: Scalar> {
    pub kernel: Representation<F>,
    pub inclusion: Morphism<F>,
    pub image: Representation<F>,
    pub cokernel: Representation<F>,
    pub projection: Morphism<F>,
}

impl<F: Scalar> ModCat<F> {
    pub fn kernel_cokernel(&self, f: &Morphism<F>) -> Result<KernelCokernel<F>> {
        let q = self.quiver();
        let n = q.num_vertices();
        let ker_bases: Vec<Matrix<F>> = (0..n)
            .map(|v| {
                let c = &f.components[v];
                let basis = c.kernel_basis();
                Matrix::from_columns(c.cols(), &basis)
            })
            .collect();
        let kernel = f.source.restrict(q, &ker_bases)?;
        let inclusion = Morphism::from_parts(kernel.clone(), f.source.clone(), ker_bases);

        let im_bases: Vec<Matrix<F>> = f.components.iter().map(|c| c.column_space()).collect();
        let image = f.target.restrict(q, &im_bases)?;
        let (cokernel, proj) = f.target.quotient(q, &im_bases)?;
        let projection = Morphism::from_parts(f.target.clone(), cokernel.clone(), proj);
        Ok(KernelCokernel { kernel, inclusion, image, cokernel, projection })
    }

    pub fn kernel(&self, f: &Morphism<F>) -> Result<(Representation<F>, Morphism<F>)> {
        let kc = self.kernel_cokernel(f)?;
        Ok((kc.kernel, kc.inclusion))
    }

    pub fn cokernel(&self, f: &Morphism<F>) -> Result<(Representation<F>, Morphism<F>)> {
        let kc = self.kernel_cokernel(f)?;
        Ok((kc.cokernel, kc.projection))
    }
}
