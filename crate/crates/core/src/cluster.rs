//! The m-cluster category `C_m = D/F` with `F = τ⁻¹[m]`, computed on the
//! fundamental domain `S_m = mod H[0] ∨ ... ∨ mod H[m-1] ∨ H[m]`.

use std::fmt;

use crate::derived::{stalk_cmp, ChainMap, SiltingCandidate};
use crate::error::{Error, Result};
use crate::repcat::{Direction, ModCat, Stalk};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapClass {
    /// Induced by a map inside the fundamental domain.
    DMap,
    FMap,
}

impl fmt::Display for MapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapClass::DMap => "D-map",
            MapClass::FMap => "F-map",
        })
    }
}

/// A map `X → Y` in `C_m` as its orbit components `X → F^j Y` in `D`.
#[derive(Clone, Debug)]
pub struct OrbitMap<F: Scalar> {
    pub components: Vec<(i32, ChainMap<F>)>,
}

/// A basic object of `C_m` given by stalks in the fundamental domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterObject<F: Scalar> {
    m: usize,
    candidate: SiltingCandidate<F>,
}

impl<F: Scalar> ClusterObject<F> {
    pub fn new(cat: &ModCat<F>, m: usize, summands: Vec<Stalk<F>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        for s in &summands {
            if !cat.in_domain(s, m) {
                return Err(Error::InvalidArgument(format!(
                    "{:?}[{}] lies outside the fundamental domain",
                    s.module.dim(),
                    s.shift
                )));
            }
        }
        Ok(ClusterObject { m, candidate: SiltingCandidate::new(cat, summands)? })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn summands(&self) -> &[Stalk<F>] {
        self.candidate.summands()
    }

    pub fn len(&self) -> usize {
        self.candidate.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidate.is_empty()
    }

    pub fn candidate(&self) -> &SiltingCandidate<F> {
        &self.candidate
    }
}

/// An exchange triangle `from → ⊕ middle → to` in `C_m`. The middle term is
/// computed in `D` from the lifts `F^j T_k`; `lifts[i]` records `(k, j)` for
/// the i-th summand. `from_offset` is the power of `F` taking the lift of
/// `from` into the domain.
#[derive(Clone, Debug)]
pub struct ClusterTriangle<F: Scalar> {
    pub from: Stalk<F>,
    pub middle: Vec<Stalk<F>>,
    pub to: Stalk<F>,
    pub lifts: Vec<(usize, i32)>,
    pub from_offset: i32,
    pub left: MapClass,
    pub right: MapClass,
}

impl<F: Scalar> ClusterTriangle<F> {
    /// Whether the same triangle exists in `D` between the domain objects.
    pub fn is_d_triangle(&self) -> bool {
        self.from_offset == 0 && self.lifts.iter().all(|&(_, j)| j == 0)
    }
}

#[derive(Clone, Debug)]
pub struct ClusterExchange<F: Scalar> {
    /// `M_0, ..., M_m` in chain order.
    pub complements: Vec<Stalk<F>>,
    /// `M_{j-1} → B_j → M_j` for `j = 1..m`.
    pub consecutive: Vec<ClusterTriangle<F>>,
    /// `M_m → B_0 → M_0`.
    pub wrap: ClusterTriangle<F>,
}

fn violation(clause: &str, detail: impl Into<String>) -> Error {
    Error::InvariantViolation { clause: clause.into(), detail: detail.into() }
}

impl<F: Scalar> ModCat<F> {
    pub fn in_domain(&self, x: &Stalk<F>, m: usize) -> bool {
        let m = m as i32;
        (0..m).contains(&x.shift) || (x.shift == m && self.projective_index(&x.module).is_some())
    }

    pub fn fundamental_domain(&self, m: usize) -> Result<Vec<Stalk<F>>> {
        let ind = self.indecomposables()?;
        let mut out: Vec<Stalk<F>> = Vec::new();
        for d in 0..m as i32 {
            out.extend(ind.iter().map(|x| Stalk::new(x.clone(), d)));
        }
        out.extend(ind.iter().filter(|x| self.projective_index(x).is_some()).map(|x| Stalk::new(x.clone(), m as i32)));
        out.sort_by(stalk_cmp);
        Ok(out)
    }

    /// `F^j(X)` for an indecomposable stalk.
    pub fn f_power(&self, x: &Stalk<F>, j: i32, m: usize) -> Result<Stalk<F>> {
        let (dir, step) = if j >= 0 { (Direction::Inverse, m as i32) } else { (Direction::Forward, -(m as i32)) };
        let mut cur = x.clone();
        for _ in 0..j.unsigned_abs() {
            let t = self.ar_translate(&cur.module, dir)?;
            cur = Stalk::new(self.tidy(&t.module), cur.shift + t.shift + step);
        }
        Ok(cur)
    }

    /// The domain representative `F^j(X)` together with `j`.
    pub fn normalize_to_domain(&self, x: &Stalk<F>, m: usize) -> Result<(Stalk<F>, i32)> {
        let guard = 2 * (x.shift.unsigned_abs() as usize / m.max(1)) + self.n() + 4;
        let mut cur = Stalk::new(self.tidy(&x.module), x.shift);
        let mut j = 0;
        for _ in 0..guard {
            if self.in_domain(&cur, m) {
                return Ok((cur, j));
            }
            let step = if cur.shift < 0 { 1 } else { -1 };
            cur = self.f_power(&cur, step, m)?;
            j += step;
        }
        Err(Error::NonTermination(guard))
    }

    /// Orbit indices `j` with `|j| ≤ J` such that `Hom_D(X, F^j Y)` can be
    /// nonzero, after checking that `j = ±(J+1)` contribute nothing.
    fn orbit_window(&self, x: &Stalk<F>, y: &Stalk<F>, m: usize) -> Result<i32> {
        let gap = (y.shift - x.shift).unsigned_abs() as usize + 1;
        let bound = 2 + gap.div_ceil(m) as i32;
        for j in [bound + 1, -(bound + 1)] {
            if self.hom_d_stalks(x, &self.f_power(y, j, m)?)? != 0 {
                return Err(Error::inconsistent("orbit sum has support outside its bound"));
            }
        }
        Ok(bound)
    }

    /// `dim Hom_{C_m}(X, Y) = Σ_j dim Hom_D(X, F^j Y)`.
    pub fn hom_cm_dim(&self, x: &Stalk<F>, y: &Stalk<F>, m: usize) -> Result<usize> {
        let bound = self.orbit_window(x, y, m)?;
        let mut total = 0;
        for j in -bound..=bound {
            total += self.hom_d_stalks(x, &self.f_power(y, j, m)?)?;
        }
        Ok(total)
    }

    /// `dim Ext^i_{C_m}(X, Y) = dim Hom_{C_m}(X, Y[i])`.
    pub fn ext_cm_dim(&self, x: &Stalk<F>, y: &Stalk<F>, i: usize, m: usize) -> Result<usize> {
        self.hom_cm_dim(x, &y.shifted(i as i32), m)
    }

    pub fn is_m_rigid(&self, t: &ClusterObject<F>) -> Result<bool> {
        let m = t.m();
        for x in t.summands() {
            for y in t.summands() {
                for i in 1..=m {
                    if self.ext_cm_dim(x, y, i, m)? != 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_m_cluster_tilting(&self, t: &ClusterObject<F>) -> Result<bool> {
        Ok(t.len() == self.n() && self.is_m_rigid(t)?)
    }

    /// All basic m-cluster tilting objects with summands in the domain.
    pub fn m_cluster_tilting_objects(&self, m: usize) -> Result<Vec<ClusterObject<F>>> {
        let dom = self.fundamental_domain(m)?;
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_rigid(m, &dom, 0, &mut cur, &mut out)?;
        Ok(out)
    }

    fn extend_rigid(
        &self,
        m: usize,
        dom: &[Stalk<F>],
        start: usize,
        cur: &mut Vec<Stalk<F>>,
        out: &mut Vec<ClusterObject<F>>,
    ) -> Result<()> {
        if cur.len() == self.n() {
            out.push(ClusterObject::new(self, m, cur.clone())?);
            return Ok(());
        }
        for i in start..dom.len() {
            cur.push(dom[i].clone());
            if self.is_m_rigid(&ClusterObject::new(self, m, cur.clone())?)? {
                self.extend_rigid(m, dom, i + 1, cur, out)?;
            }
            cur.pop();
        }
        Ok(())
    }

    /// A D-map exactly when every component outside orbit index 0 vanishes.
    pub fn classify_map(&self, f: &OrbitMap<F>) -> Result<MapClass> {
        for (j, c) in &f.components {
            if *j != 0 && !self.is_zero_in_d(c)? {
                return Ok(MapClass::FMap);
            }
        }
        Ok(MapClass::DMap)
    }

    /// Complements of an almost complete m-rigid object by scanning the
    /// fundamental domain, sorted by degree, with the count and degree laws
    /// checked.
    pub fn cluster_complements(&self, tbar: &ClusterObject<F>) -> Result<Vec<Stalk<F>>> {
        let m = tbar.m();
        if tbar.len() + 1 != self.n() {
            return Err(Error::InvalidArgument("expected n-1 summands".into()));
        }
        let mut out = Vec::new();
        for s in self.fundamental_domain(m)? {
            if tbar.candidate().contains(self, &s) {
                continue;
            }
            let mut all = tbar.summands().to_vec();
            all.push(s.clone());
            if self.is_m_cluster_tilting(&ClusterObject::new(self, m, all)?)? {
                out.push(s);
            }
        }
        if out.len() != m + 1 {
            return Err(Error::inconsistent(format!("found {} complements, expected {}", out.len(), m + 1)));
        }
        for (i, s) in out.iter().enumerate() {
            let i = i as i32;
            if s.shift < i - 1 || s.shift > i {
                return Err(Error::inconsistent(format!("complement {i} has degree {}", s.shift)));
            }
        }
        Ok(out)
    }

    /// The exchange triangle `M* → B → M` in `C_m` for a complement `M`,
    /// computed in `D` against all lifts `F^j T_k` that can map to `M`.
    pub fn cluster_exchange_backward(&self, tbar: &ClusterObject<F>, target: &Stalk<F>) -> Result<ClusterTriangle<F>> {
        let m = tbar.m();
        let mut lifts: Vec<Stalk<F>> = Vec::new();
        let mut tags: Vec<(usize, i32)> = Vec::new();
        for (k, t) in tbar.summands().iter().enumerate() {
            let bound = self.orbit_window(t, target, m)?.max(self.orbit_window(target, t, m)?);
            for j in -bound..=bound {
                lifts.push(self.f_power(t, j, m)?);
                tags.push((k, j));
            }
        }
        let g = self.right_approximation_d(&lifts, target)?;
        let lifted_from = self.as_single_stalk(&self.cocone(&g.map))?;
        let f = self.left_approximation_d(&lifted_from, &lifts)?;
        let (mut a, mut b) = (g.summands.clone(), f.summands.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::inconsistent("left and right approximations in C_m have different middle terms"));
        }
        let (from, offset) = self.normalize_to_domain(&lifted_from, m)?;
        let right = if g.summands.iter().all(|&i| tags[i].1 == 0) { MapClass::DMap } else { MapClass::FMap };
        let left = if f.summands.iter().all(|&i| tags[i].1 + offset == 0) { MapClass::DMap } else { MapClass::FMap };
        Ok(ClusterTriangle {
            from,
            middle: g.summands.iter().map(|&i| tbar.summands()[tags[i].0].clone()).collect(),
            to: target.clone(),
            lifts: g.summands.iter().map(|&i| tags[i]).collect(),
            from_offset: offset,
            left,
            right,
        })
    }

    /// The exchange triangle `M → B → M♯` in `C_m` from a minimal left
    /// approximation of a complement `M`. Needs no enumeration of the
    /// domain, so it also works over representation-infinite quivers.
    pub fn cluster_exchange_forward(&self, source: &Stalk<F>, tbar: &ClusterObject<F>) -> Result<ClusterTriangle<F>> {
        let m = tbar.m();
        let mut lifts: Vec<Stalk<F>> = Vec::new();
        let mut tags: Vec<(usize, i32)> = Vec::new();
        for (k, t) in tbar.summands().iter().enumerate() {
            let bound = self.orbit_window(t, source, m)?.max(self.orbit_window(source, t, m)?);
            for j in -bound..=bound {
                lifts.push(self.f_power(t, j, m)?);
                tags.push((k, j));
            }
        }
        let f = self.left_approximation_d(source, &lifts)?;
        let lifted_to = self.as_single_stalk(&self.cone(&f.map))?;
        let g = self.right_approximation_d(&lifts, &lifted_to)?;
        let (mut a, mut b) = (g.summands.clone(), f.summands.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::inconsistent("left and right approximations in C_m have different middle terms"));
        }
        let (to, offset) = self.normalize_to_domain(&lifted_to, m)?;
        if offset != 0 {
            // Express the triangle as ending in the domain: shift everything by F^offset.
            let tri = self.cluster_exchange_backward(tbar, &to)?;
            if !self.stalks_isomorphic(&tri.from, source) {
                return Err(Error::inconsistent("forward and backward exchange in C_m disagree"));
            }
            return Ok(tri);
        }
        let left = if f.summands.iter().all(|&i| tags[i].1 == 0) { MapClass::DMap } else { MapClass::FMap };
        let right = if g.summands.iter().all(|&i| tags[i].1 == 0) { MapClass::DMap } else { MapClass::FMap };
        Ok(ClusterTriangle {
            from: source.clone(),
            middle: f.summands.iter().map(|&i| tbar.summands()[tags[i].0].clone()).collect(),
            to,
            lifts: f.summands.iter().map(|&i| tags[i]).collect(),
            from_offset: 0,
            left,
            right,
        })
    }

    /// The `m+1` complements of `tbar` and the exchange triangles between
    /// them. Consecutive triangles are first built in `D` from `add(tbar)`
    /// and then checked against the `C_m` computation; the wrap-around
    /// triangle must fail to be a triangle in `D`.
    pub fn exchange_triangles(&self, tbar: &ClusterObject<F>) -> Result<ClusterExchange<F>> {
        let m = tbar.m();
        let scanned = self.cluster_complements(tbar)?;
        let t = tbar.summands();

        let mut first = scanned[0].clone();
        for _ in 0..=m + 1 {
            let tri = self.exchange_backward(t, &first)?;
            if !self.in_domain(&tri.from, m) {
                break;
            }
            first = tri.from;
        }
        let mut chain = vec![first];
        for _ in 0..m {
            let tri = self.exchange_forward(chain.last().unwrap(), t)?;
            chain.push(tri.to);
        }
        let same_set = chain.iter().all(|c| self.in_domain(c, m))
            && scanned.iter().all(|s| chain.iter().any(|c| self.stalks_isomorphic(c, s)));
        if !same_set {
            return Err(Error::inconsistent("triangle chain and scan disagree on the complements"));
        }
        for w in chain.windows(2) {
            if w[0].shift > w[1].shift {
                return Err(violation("degree order", format!("d(M) drops from {} to {}", w[0].shift, w[1].shift)));
            }
        }

        let mut consecutive = Vec::new();
        for j in 1..=m {
            let d_tri = self.exchange_backward(t, &chain[j])?;
            let c_tri = self.cluster_exchange_backward(tbar, &chain[j])?;
            if !self.stalks_isomorphic(&c_tri.from, &chain[j - 1]) || !self.stalks_isomorphic(&d_tri.from, &chain[j - 1]) {
                return Err(violation("exchange", format!("triangle {j} does not start at M_{}", j - 1)));
            }
            if !same_stalks(self, &c_tri.middle, &d_tri.middle) || !c_tri.lifts.iter().all(|&(_, jj)| jj == 0) {
                return Err(violation("exchange", format!("triangle {j} differs between D and C_m")));
            }
            consecutive.push(c_tri);
        }
        let wrap = self.cluster_exchange_backward(tbar, &chain[0])?;
        if !self.stalks_isomorphic(&wrap.from, &chain[m]) {
            return Err(violation("exchange", "wrap-around triangle does not start at M_m"));
        }
        if wrap.is_d_triangle() {
            return Err(violation("exchange", "wrap-around triangle is a triangle in D"));
        }
        if m >= 2 {
            for tri in consecutive.iter().chain([&wrap]) {
                if tri.middle.is_empty() {
                    continue;
                }
                let both_d = tri.left == MapClass::DMap && tri.right == MapClass::DMap;
                if (tri.from.shift <= tri.to.shift) != both_d {
                    return Err(violation(
                        "D-map criterion",
                        format!("d(M*) = {}, d(M) = {}, maps {} and {}", tri.from.shift, tri.to.shift, tri.left, tri.right),
                    ));
                }
            }
        }
        Ok(ClusterExchange { complements: chain, consecutive, wrap })
    }
}

fn same_stalks<F: Scalar>(cat: &ModCat<F>, a: &[Stalk<F>], b: &[Stalk<F>]) -> bool {
    let mut used = vec![false; b.len()];
    a.len() == b.len()
        && a.iter().all(|x| {
            let hit = (0..b.len()).find(|&i| !used[i] && cat.stalks_isomorphic(x, &b[i]));
            hit.map(|i| used[i] = true).is_some()
        })
}
