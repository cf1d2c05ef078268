use std::collections::BTreeMap;

use super::{stalk_cmp, Approximation, ChainMap};
use crate::error::{Error, Result};
use crate::excseq::ExceptionalSequence;
use crate::repcat::{ModCat, Representation, Stalk};
use crate::scalar::Scalar;

/// A basic direct sum of indecomposable stalks, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiltingCandidate<F: Scalar> {
    summands: Vec<Stalk<F>>,
}

impl<F: Scalar> SiltingCandidate<F> {
    pub fn new(cat: &ModCat<F>, summands: Vec<Stalk<F>>) -> Result<Self> {
        for s in &summands {
            if !cat.is_indecomposable(&s.module) {
                return Err(Error::NotIndecomposable);
            }
        }
        for (i, a) in summands.iter().enumerate() {
            if summands[..i].iter().any(|b| cat.stalks_isomorphic(a, b)) {
                return Err(Error::InvalidArgument("repeated summand".into()));
            }
        }
        Ok(Self::from_stalks(summands))
    }

    pub(crate) fn from_stalks(mut summands: Vec<Stalk<F>>) -> Self {
        summands.sort_by(stalk_cmp);
        SiltingCandidate { summands }
    }

    pub fn summands(&self) -> &[Stalk<F>] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.summands.clone();
        s.remove(i);
        SiltingCandidate { summands: s }
    }

    pub fn with(&self, x: Stalk<F>) -> Self {
        let mut s = self.summands.clone();
        s.push(x);
        Self::from_stalks(s)
    }

    pub fn contains(&self, cat: &ModCat<F>, x: &Stalk<F>) -> bool {
        self.summands.iter().any(|s| cat.stalks_isomorphic(s, x))
    }
}

/// A triangle `from → ⊕ middle → to → from[1]` whose maps are a minimal left
/// and a minimal right approximation.
#[derive(Clone, Debug)]
pub struct ExchangeTriangle<F: Scalar> {
    pub from: Stalk<F>,
    pub middle: Vec<Stalk<F>>,
    pub to: Stalk<F>,
    pub left: ChainMap<F>,
    pub right: ChainMap<F>,
}

/// A complement found in a degree window. `position` counts steps along the
/// chain of exchange triangles; position 0 is the first complement in
/// nonnegative degree.
#[derive(Clone, Debug)]
pub struct WindowComplement<F: Scalar> {
    pub stalk: Stalk<F>,
    pub position: i32,
    /// The triangle `M_{j-1} → B_j → M_j` ending at this complement.
    pub incoming: ExchangeTriangle<F>,
}

impl<F: Scalar> ModCat<F> {
    /// `Ext^{>0}_D(T, T) = 0`: each degree slice is rigid, and from a higher
    /// slice to a lower one both Hom and Ext¹ vanish.
    pub fn is_partial_silting(&self, t: &SiltingCandidate<F>) -> Result<bool> {
        for x in t.summands() {
            for y in t.summands() {
                let ok = match x.shift - y.shift {
                    0 => self.ext1_dim(&x.module, &y.module)? == 0,
                    d if d > 0 => self.hom_dim(&x.module, &y.module) == 0 && self.ext1_dim(&x.module, &y.module)? == 0,
                    _ => true,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_silting(&self, t: &SiltingCandidate<F>) -> Result<bool> {
        Ok(t.len() == self.n() && self.is_partial_silting(t)?)
    }

    /// Term `i` of the sequence placed in degree `i`.
    pub fn staircase(&self, seq: &ExceptionalSequence<F>) -> SiltingCandidate<F> {
        SiltingCandidate::from_stalks(
            seq.terms().iter().enumerate().map(|(i, e)| Stalk::new(e.clone(), i as i32)).collect(),
        )
    }

    /// Orders a partial silting object into an exceptional sequence: by
    /// degree, and inside a slice along nonzero Hom.
    pub fn silting_order(&self, t: &SiltingCandidate<F>) -> Result<Option<ExceptionalSequence<F>>> {
        if !self.is_partial_silting(t)? {
            return Ok(None);
        }
        let mut slices: BTreeMap<i32, Vec<Representation<F>>> = BTreeMap::new();
        for s in t.summands() {
            slices.entry(s.shift).or_default().push(s.module.clone());
        }
        let mut terms = Vec::new();
        for (_, slice) in slices {
            let k = slice.len();
            let mut placed = vec![false; k];
            for _ in 0..k {
                let next = (0..k).find(|&i| {
                    !placed[i] && (0..k).all(|j| j == i || placed[j] || self.hom_dim(&slice[j], &slice[i]) == 0)
                });
                let i = next.ok_or_else(|| Error::inconsistent("Hom-quiver of a rigid slice has a cycle"))?;
                placed[i] = true;
                terms.push(slice[i].clone());
            }
        }
        if !self.is_exceptional_sequence(&terms)? {
            return Err(Error::inconsistent("ordered partial silting object is not an exceptional sequence"));
        }
        Ok(Some(ExceptionalSequence::from_terms(terms)))
    }

    /// Stalks `X[d]` with `lo ≤ d ≤ hi` completing `tbar` to a silting object.
    pub fn silting_complements_scan(&self, tbar: &SiltingCandidate<F>, lo: i32, hi: i32) -> Result<Vec<Stalk<F>>> {
        let mut out = Vec::new();
        for d in lo..=hi {
            for x in self.indecomposables()? {
                let s = Stalk::new(x.clone(), d);
                if !tbar.contains(self, &s) && self.is_silting(&tbar.with(s.clone()))? {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }

    /// The triangle `M* → B → M` from a minimal right `add(tbar)`-approximation
    /// of `M`, with the left map recomputed as a minimal left approximation of
    /// `M*` and checked to produce the same middle term and `M` again.
    pub fn exchange_backward(&self, tbar: &[Stalk<F>], m: &Stalk<F>) -> Result<ExchangeTriangle<F>> {
        let g = self.right_approximation_d(tbar, m)?;
        let from = self.as_single_stalk(&self.cocone(&g.map))?;
        let f = self.left_approximation_d(&from, tbar)?;
        self.check_middle(&g, &f)?;
        let back = self.as_single_stalk(&self.cone(&f.map))?;
        if !self.stalks_isomorphic(&back, m) {
            return Err(Error::inconsistent("left approximation does not recover the exchanged complement"));
        }
        Ok(ExchangeTriangle {
            from,
            middle: g.summands.iter().map(|&i| tbar[i].clone()).collect(),
            to: m.clone(),
            left: f.map,
            right: g.map,
        })
    }

    /// The triangle `M → B → M♯` from a minimal left approximation of `M`.
    pub fn exchange_forward(&self, m: &Stalk<F>, tbar: &[Stalk<F>]) -> Result<ExchangeTriangle<F>> {
        let f = self.left_approximation_d(m, tbar)?;
        let to = self.as_single_stalk(&self.cone(&f.map))?;
        let g = self.right_approximation_d(tbar, &to)?;
        self.check_middle(&g, &f)?;
        Ok(ExchangeTriangle {
            from: m.clone(),
            middle: f.summands.iter().map(|&i| tbar[i].clone()).collect(),
            to,
            left: f.map,
            right: g.map,
        })
    }

    fn check_middle(&self, g: &Approximation<F>, f: &Approximation<F>) -> Result<()> {
        let mut a = g.summands.clone();
        let mut b = f.summands.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::inconsistent("left and right approximations have different middle terms"));
        }
        Ok(())
    }

    /// All complements of `tbar` with degree in `lo..=hi`, found by scanning,
    /// then linked by exchange triangles; the two descriptions must agree.
    pub fn silting_complements_in_window(
        &self,
        tbar: &SiltingCandidate<F>,
        lo: i32,
        hi: i32,
    ) -> Result<Vec<WindowComplement<F>>> {
        if tbar.len() + 1 != self.n() || !self.is_partial_silting(tbar)? {
            return Err(Error::InvalidArgument("expected an almost complete partial silting object".into()));
        }
        let scanned = self.silting_complements_scan(tbar, lo, hi)?;
        let Some(start) = scanned.first().cloned() else {
            return Ok(vec![]);
        };
        let t = tbar.summands();
        let guard = scanned.len() + 2 * (hi - lo + 2).max(0) as usize + 4;

        // Walk down to the first complement below the window.
        let mut chain = vec![start.clone()];
        let mut cur = start;
        let mut steps = 0;
        while cur.shift >= lo {
            let tri = self.exchange_backward(t, &cur)?;
            self.check_exchange(tbar, &tri)?;
            cur = tri.from;
            chain.insert(0, cur.clone());
            steps += 1;
            if steps > guard {
                return Err(Error::NonTermination(guard));
            }
        }
        // Walk up from there through the window.
        let mut found: Vec<WindowComplement<F>> = Vec::new();
        let mut cur = chain[0].clone();
        steps = 0;
        loop {
            let tri = self.exchange_forward(&cur, t)?;
            self.check_exchange(tbar, &tri)?;
            cur = tri.to.clone();
            if cur.shift > hi {
                break;
            }
            if cur.shift >= lo {
                found.push(WindowComplement { stalk: cur.clone(), position: 0, incoming: tri });
            }
            steps += 1;
            if steps > 2 * guard {
                return Err(Error::NonTermination(2 * guard));
            }
        }

        if found.len() != scanned.len()
            || !scanned.iter().all(|s| found.iter().any(|w| self.stalks_isomorphic(&w.stalk, s)))
        {
            return Err(Error::inconsistent("triangle chain and scan disagree on the complements in the window"));
        }
        let zero = found.iter().position(|w| w.stalk.shift >= 0).unwrap_or(found.len()) as i32;
        for (i, w) in found.iter_mut().enumerate() {
            w.position = i as i32 - zero;
        }
        Ok(found)
    }

    fn check_exchange(&self, tbar: &SiltingCandidate<F>, tri: &ExchangeTriangle<F>) -> Result<()> {
        for x in [&tri.from, &tri.to] {
            if tbar.contains(self, x) || !self.is_silting(&tbar.with(x.clone()))? {
                return Err(Error::InvariantViolation {
                    clause: "exchange".into(),
                    detail: format!("{:?}[{}] is not a complement", x.module.dim(), x.shift),
                });
            }
        }
        if self.stalks_isomorphic(&tri.from, &tri.to) {
            return Err(Error::InvariantViolation { clause: "exchange".into(), detail: "M* ≅ M".into() });
        }
        Ok(())
    }
}
