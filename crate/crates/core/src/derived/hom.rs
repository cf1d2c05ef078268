use super::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::exactla::{in_span, Matrix};
use crate::repcat::{ModCat, Morphism, Stalk};
use crate::scalar::Scalar;

/// `Hom_D(X, Y)` for complexes of projectives: chain maps modulo homotopy.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Scalar> {
    pub source: Complex<F>,
    pub target: Complex<F>,
    /// Chain maps whose classes form a basis.
    pub basis: Vec<ChainMap<F>>,
    /// Spanning set of the null-homotopic maps, flattened.
    boundaries: Vec<Vec<F>>,
    ambient: usize,
}

impl<F: Scalar> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_null_homotopic(&self, f: &ChainMap<F>) -> bool {
        in_span(self.ambient, &self.boundaries, &f.flatten())
    }

    /// Whether `f` lies in `span(gens)` modulo homotopy.
    pub fn in_span_of(&self, gens: &[ChainMap<F>], f: &ChainMap<F>) -> bool {
        let mut vectors: Vec<Vec<F>> = gens.iter().map(|g| g.flatten()).collect();
        vectors.extend(self.boundaries.iter().cloned());
        in_span(self.ambient, &vectors, &f.flatten())
    }

    /// Coordinates of the class of `f` in `basis`.
    pub fn coordinates(&self, f: &ChainMap<F>) -> Result<Vec<F>> {
        let mut cols: Vec<Vec<F>> = self.basis.iter().map(|g| g.flatten()).collect();
        cols.extend(self.boundaries.iter().cloned());
        let m = Matrix::from_columns(self.ambient, &cols);
        let c = m
            .solve(&f.flatten())?
            .ok_or_else(|| Error::InvalidArgument("not a chain map between these complexes".into()))?;
        Ok(c[..self.basis.len()].to_vec())
    }
}

/// A map between `M` and a sum of candidate stalks. `summands[i]` indexes the
/// candidate list, once per copy in the middle term.
#[derive(Clone, Debug)]
pub struct Approximation<F: Scalar> {
    pub summands: Vec<usize>,
    /// The map restricted to each summand, in the same order.
    pub components: Vec<ChainMap<F>>,
    pub map: ChainMap<F>,
}

impl<F: Scalar> ModCat<F> {
    pub fn hom_space(&self, x: &Complex<F>, y: &Complex<F>) -> Result<HomSpace<F>> {
        let degs: Vec<i32> = x.degrees().collect();
        let block = |k: i32| -> usize {
            x.term(k).dim().iter().zip(y.term(k).dim()).map(|(a, b)| a * b).sum()
        };
        let ambient: usize = degs.iter().map(|&k| block(k)).sum();

        let mut unknowns: Vec<(i32, Morphism<F>)> = Vec::new();
        for &k in &degs {
            for b in self.hom_basis(x.term(k), y.term(k)) {
                unknowns.push((k, b));
            }
        }

        // d_Y φ^k - φ^{k+1} d_X = 0 for every k, as maps X^k → Y^{k+1}.
        let constraint_degs: Vec<i32> = (x.lo() - 1..=x.hi()).collect();
        let csize = |k: i32| -> usize {
            x.term(k).dim().iter().zip(y.term(k + 1).dim()).map(|(a, b)| a * b).sum()
        };
        let mut offsets = Vec::new();
        let mut rows = 0;
        for &k in &constraint_degs {
            offsets.push(rows);
            rows += csize(k);
        }
        let offset_of = |k: i32| offsets[(k - (x.lo() - 1)) as usize];
        let columns: Vec<Vec<F>> = unknowns
            .iter()
            .map(|(k, b)| {
                let mut col = vec![F::zero(); rows];
                let forward = b.then(&y.diff(*k)).flatten();
                let start = offset_of(*k);
                for (i, v) in forward.into_iter().enumerate() {
                    col[start + i] = v;
                }
                let backward = x.diff(k - 1).then(b).flatten();
                let start = offset_of(k - 1);
                for (i, v) in backward.into_iter().enumerate() {
                    col[start + i] = col[start + i].clone() - v;
                }
                col
            })
            .collect();
        let kernel = if rows == 0 {
            Matrix::<F>::identity(unknowns.len()).columns()
        } else {
            Matrix::from_columns(rows, &columns).kernel_basis()
        };
        let cycles: Vec<ChainMap<F>> = kernel
            .iter()
            .map(|c| {
                let mut f = ChainMap::zero(x, y);
                for ((k, b), coeff) in unknowns.iter().zip(c) {
                    if !coeff.is_zero() {
                        let i = (k - x.lo()) as usize;
                        f.components[i] = f.components[i].add(&b.scale(coeff));
                    }
                }
                f
            })
            .collect();

        // h^k: X^k → Y^{k-1} contributes d_Y h^k in degree k and h^k d_X in degree k-1.
        let mut boundaries = Vec::new();
        for &k in &degs {
            for h in self.hom_basis(x.term(k), y.term(k - 1)) {
                let mut f = ChainMap::zero(x, y);
                let i = (k - x.lo()) as usize;
                f.components[i] = h.then(&y.diff(k - 1));
                if k > x.lo() {
                    f.components[i - 1] = x.diff(k - 1).then(&h);
                }
                let v = f.flatten();
                if v.iter().any(|e| !e.is_zero()) {
                    boundaries.push(v);
                }
            }
        }

        let mut all = boundaries.clone();
        all.extend(cycles.iter().map(|c| c.flatten()));
        let basis = if all.is_empty() {
            vec![]
        } else {
            let pivots = Matrix::from_columns(ambient, &all).independent_columns();
            pivots
                .into_iter()
                .filter(|&p| p >= boundaries.len())
                .map(|p| cycles[p - boundaries.len()].clone())
                .collect()
        };
        Ok(HomSpace { source: x.clone(), target: y.clone(), basis, boundaries, ambient })
    }

    pub fn hom_space_stalks(&self, x: &Stalk<F>, y: &Stalk<F>) -> Result<HomSpace<F>> {
        self.hom_space(&self.stalk_complex(x)?, &self.stalk_complex(y)?)
    }

    /// Minimal right approximation `B → M` with `B` a sum of copies of the
    /// candidates: every map from a candidate to `M` factors through it, and no
    /// summand can be dropped.
    pub fn right_approximation_d(&self, candidates: &[Stalk<F>], m: &Stalk<F>) -> Result<Approximation<F>> {
        let q = self.quiver();
        let target = self.stalk_complex(m)?;
        let sources = candidates.iter().map(|c| self.stalk_complex(c)).collect::<Result<Vec<_>>>()?;
        let spaces = sources.iter().map(|s| self.hom_space(s, &target)).collect::<Result<Vec<_>>>()?;
        let mut parts: Vec<(usize, ChainMap<F>)> = Vec::new();
        for (i, sp) in spaces.iter().enumerate() {
            parts.extend(sp.basis.iter().map(|h| (i, h.clone())));
        }
        let mut kept: Vec<bool> = vec![true; parts.len()];
        for i in (0..parts.len()).rev() {
            kept[i] = false;
            let trial: Vec<ChainMap<F>> = parts.iter().zip(&kept).filter(|(_, &k)| k).map(|(p, _)| p.1.clone()).collect();
            let g = ChainMap::costack(q, &target, &trial);
            let (idx, h) = &parts[i];
            let through = self.hom_space(&sources[*idx], &g.source)?;
            let gens: Vec<ChainMap<F>> = through.basis.iter().map(|u| u.then(&g)).collect();
            if !spaces[*idx].in_span_of(&gens, h) {
                kept[i] = true;
            }
        }
        let chosen: Vec<&(usize, ChainMap<F>)> = parts.iter().zip(&kept).filter(|(_, &k)| k).map(|(p, _)| p).collect();
        let maps: Vec<ChainMap<F>> = chosen.iter().map(|p| p.1.clone()).collect();
        let map = ChainMap::costack(q, &target, &maps);
        Ok(Approximation { summands: chosen.iter().map(|p| p.0).collect(), components: maps, map })
    }

    /// Minimal left approximation `M → B`, dual to [`Self::right_approximation_d`].
    pub fn left_approximation_d(&self, m: &Stalk<F>, candidates: &[Stalk<F>]) -> Result<Approximation<F>> {
        let q = self.quiver();
        let source = self.stalk_complex(m)?;
        let targets = candidates.iter().map(|c| self.stalk_complex(c)).collect::<Result<Vec<_>>>()?;
        let spaces = targets.iter().map(|t| self.hom_space(&source, t)).collect::<Result<Vec<_>>>()?;
        let mut parts: Vec<(usize, ChainMap<F>)> = Vec::new();
        for (i, sp) in spaces.iter().enumerate() {
            parts.extend(sp.basis.iter().map(|h| (i, h.clone())));
        }
        let mut kept: Vec<bool> = vec![true; parts.len()];
        for i in (0..parts.len()).rev() {
            kept[i] = false;
            let trial: Vec<ChainMap<F>> = parts.iter().zip(&kept).filter(|(_, &k)| k).map(|(p, _)| p.1.clone()).collect();
            let f = ChainMap::stack(q, &source, &trial);
            let (idx, h) = &parts[i];
            let through = self.hom_space(&f.target, &targets[*idx])?;
            let gens: Vec<ChainMap<F>> = through.basis.iter().map(|u| f.then(u)).collect();
            if !spaces[*idx].in_span_of(&gens, h) {
                kept[i] = true;
            }
        }
        let chosen: Vec<&(usize, ChainMap<F>)> = parts.iter().zip(&kept).filter(|(_, &k)| k).map(|(p, _)| p).collect();
        let maps: Vec<ChainMap<F>> = chosen.iter().map(|p| p.1.clone()).collect();
        let map = ChainMap::stack(q, &source, &maps);
        Ok(Approximation { summands: chosen.iter().map(|p| p.0).collect(), components: maps, map })
    }

    /// Whether a chain map vanishes in `D`.
    pub fn is_zero_in_d(&self, f: &ChainMap<F>) -> Result<bool> {
        Ok(self.hom_space(&f.source, &f.target)?.is_null_homotopic(f))
    }
}
