//! Placement of an almost complete exceptional sequence and its complements
//! in the fundamental domain `S_{n-1}`, Bongartz complements, and exhaustive
//! searches for simultaneous placements of several sequences.

use std::collections::HashMap;
use std::fmt;

use crate::cluster::ClusterObject;
use crate::derived::SiltingCandidate;
use crate::error::{Error, Result};
use crate::excseq::ExceptionalSequence;
use crate::homext::Decoration;
use crate::repcat::{ModCat, Representation, Stalk};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `Hom(C, A) ≠ 0`: same degree as the previous complement.
    P1,
    /// `Ext¹(C, A) ≠ 0`: one above it.
    P2,
    /// Neither: the least admissible degree.
    P3,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::P1 => "P1",
            Rule::P2 => "P2",
            Rule::P3 => "P3",
        })
    }
}

/// `C_i[t_i] → (A_i[u_i])^r → C_{i+1}[t_{i+1}]`.
#[derive(Clone, Debug)]
pub struct PlacedTriangle<F: Scalar> {
    pub from: Stalk<F>,
    pub r: usize,
    pub middle: Stalk<F>,
    pub to: Stalk<F>,
}

#[derive(Clone, Debug)]
pub struct PlacementResult<F: Scalar> {
    /// `A_0, ..., A_{n-2}`.
    pub sequence: Vec<Representation<F>>,
    /// `C_0, ..., C_{n-1}`; `C_i` completes the sequence at position `i`.
    pub complements: Vec<Representation<F>>,
    /// `u_i` with `Â_i = A_i[u_i]`.
    pub a_degrees: Vec<i32>,
    /// `t_i` with `Ĉ_i = C_i[t_i]`.
    pub c_degrees: Vec<i32>,
    /// The rule used for each `A_i`.
    pub rules: Vec<Rule>,
    pub triangles: Vec<PlacedTriangle<F>>,
}

impl<F: Scalar> PlacementResult<F> {
    pub fn placed_a(&self) -> Vec<Stalk<F>> {
        self.sequence.iter().zip(&self.a_degrees).map(|(a, &u)| Stalk::new(a.clone(), u)).collect()
    }

    pub fn placed_c(&self) -> Vec<Stalk<F>> {
        self.complements.iter().zip(&self.c_degrees).map(|(c, &t)| Stalk::new(c.clone(), t)).collect()
    }
}

/// One checked claim. `level` is the rank of the subcategory in which the
/// claim is made; 0 marks claims about the final placement only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub level: usize,
    pub holds: bool,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ledger {
    pub clauses: Vec<Clause>,
}

impl Ledger {
    fn record(&mut self, name: &str, level: usize, holds: bool, witness: impl Into<String>) {
        self.clauses.push(Clause { name: name.into(), level, holds, witness: witness.into() });
    }

    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&Clause> {
        self.clauses.iter().filter(|c| !c.holds).collect()
    }

    pub fn holds(&self, name: &str) -> bool {
        self.clauses.iter().filter(|c| c.name == name).all(|c| c.holds)
    }
}

/// The search space for simultaneous placements.
#[derive(Clone, Copy, Debug)]
pub enum GlobalSearch {
    /// Every sequence must become a silting object; degrees in `lo..=hi`.
    Silting { lo: i32, hi: i32 },
    /// The first sequence and its listed mutations must become m-cluster
    /// tilting objects in `S_m` that differ by mutation in `C_m`; degrees in
    /// `0..=max_degree`, `m` in `1..=max_m`.
    Cluster { max_degree: i32, max_m: usize },
}

#[derive(Clone, Debug)]
pub struct GlobalPlacement<F: Scalar> {
    pub m: Option<usize>,
    pub degrees: Vec<(Representation<F>, i32)>,
}

/// The rank-`r` subcategory `(A_{r-1}, ..., A_{n-2})^⊥` used at level `r`.
struct Level<F: Scalar> {
    objects: Vec<Representation<F>>,
    ext_projectives: Vec<Representation<F>>,
}

fn stalk_text<F: Scalar>(s: &Stalk<F>) -> String {
    let d: Vec<String> = s.module.dim().iter().map(|x| x.to_string()).collect();
    format!("({})[{}]", d.join(","), s.shift)
}

impl<F: Scalar> ModCat<F> {
    fn level(&self, tail: &[Representation<F>]) -> Result<Level<F>> {
        let mut objects = Vec::new();
        for u in self.indecomposables()? {
            let mut ok = true;
            for a in tail {
                if self.hom_dim(a, u) != 0 || self.ext1_dim(a, u)? != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
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
        Ok(Level { objects, ext_projectives })
    }

    /// Runs the placement rules level by level and verifies the result.
    pub fn place_almost_complete(&self, seq: &ExceptionalSequence<F>) -> Result<PlacementResult<F>> {
        let p = self.place_unchecked(seq)?;
        let ledger = self.verify_placement(&p)?;
        if let Some(c) = ledger.failures().first() {
            return Err(Error::InvariantViolation {
                clause: format!("{} (rank {})", c.name, c.level),
                detail: c.witness.clone(),
            });
        }
        Ok(p)
    }

    pub(crate) fn place_unchecked(&self, seq: &ExceptionalSequence<F>) -> Result<PlacementResult<F>> {
        let n = self.n();
        let a: Vec<Representation<F>> = seq.terms().iter().map(|x| self.tidy(x)).collect();
        let c: Vec<Representation<F>> = self
            .complements_almost_complete(seq)?
            .into_iter()
            .map(|(_, x)| self.tidy(&x))
            .collect();
        let mut u: Vec<i32> = Vec::new();
        let mut t: Vec<i32> = vec![0];
        let mut rules = Vec::new();
        let mut triangles = Vec::new();
        for r in 2..=n {
            let k = r - 2;
            let (ck, ak) = (&c[k], &a[k]);
            let tri = self.mutation_triangle(ck, ak)?;
            if !self.is_isomorphic(&tri.result, &c[k + 1]) {
                return Err(Error::inconsistent(format!("mutation of C_{k} past A_{k} is not C_{}", k + 1)));
            }
            let tk = t[k];
            let (rule, uk, next) = if self.hom_dim(ck, ak) != 0 {
                (Rule::P1, tk, tk + tri.w as i32)
            } else if self.ext1_dim(ck, ak)? != 0 {
                (Rule::P2, tk + 1, tk + tri.w as i32)
            } else {
                let mut d = (r as i32 - 3).max(tk);
                if k >= 1 && self.ext1_dim(&a[k - 1], ak)? != 0 {
                    d = d.max(u[k - 1] + 1);
                }
                if k >= 2 && self.ext1_dim(&a[k - 2], ak)? != 0 {
                    d = d.max(u[k - 2] + 1);
                }
                (Rule::P3, d, tk + 1)
            };
            if matches!(rule, Rule::P1 | Rule::P2) && uk != tk + tri.v as i32 {
                return Err(Error::inconsistent("placement rule disagrees with the mutation triangle"));
            }
            rules.push(rule);
            u.push(uk);
            t.push(next);
            triangles.push(PlacedTriangle {
                from: Stalk::new(ck.clone(), tk),
                r: tri.r,
                middle: Stalk::new(ak.clone(), uk),
                to: Stalk::new(c[k + 1].clone(), next),
            });
        }
        Ok(PlacementResult { sequence: a, complements: c, a_degrees: u, c_degrees: t, rules, triangles })
    }

    /// Checks the five claims at every rank, the minimality of each P3
    /// choice, the degree lower bound, and the three properties of the final
    /// placement.
    pub fn verify_placement(&self, p: &PlacementResult<F>) -> Result<Ledger> {
        let n = self.n();
        let mut ledger = Ledger::default();
        let a = &p.sequence;
        let c = &p.complements;
        let (u, t) = (&p.a_degrees, &p.c_degrees);
        let shape_ok = a.len() + 1 == n && c.len() == n && u.len() + 1 == n && t.len() == n && p.rules.len() + 1 == n;
        ledger.record("shape", 0, shape_ok, format!("{} terms, {} complements", a.len(), c.len()));
        if !shape_ok {
            return Ok(ledger);
        }
        let base = self.level(a)?;
        ledger.record(
            "base",
            1,
            t[0] == 0 && base.objects.len() == 1 && self.is_isomorphic(&base.objects[0], &c[0]),
            format!("C_0 in degree {}", t[0]),
        );

        for r in 2..=n {
            let k = r - 2;
            let lvl = self.level(&a[r - 1..])?;
            let top = r as i32 - 1;
            let ahat: Vec<Stalk<F>> = (0..=k).map(|i| Stalk::new(a[i].clone(), u[i])).collect();
            let chat: Vec<Stalk<F>> = (0..r).map(|i| Stalk::new(c[i].clone(), t[i])).collect();
            let in_sub = |s: &Stalk<F>| -> bool {
                (0..top).contains(&s.shift)
                    || (s.shift == top && lvl.ext_projectives.iter().any(|x| self.is_isomorphic(x, &s.module)))
            };

            ledger.record("U", r, in_sub(&ahat[k]), stalk_text(&ahat[k]));

            let cand = SiltingCandidate::new(self, ahat.clone())?;
            let v = cand.len() + 1 == r && self.is_partial_silting(&cand)?;
            ledger.record("V", r, v, format!("{} summands", cand.len()));

            let mut found: Vec<Stalk<F>> = Vec::new();
            for d in 0..=top {
                for x in &lvl.objects {
                    let s = Stalk::new(x.clone(), d);
                    if in_sub(&s) && !cand.contains(self, &s) && self.is_partial_silting(&cand.with(s.clone()))? {
                        found.push(s);
                    }
                }
            }
            let w = found.len() == r
                && chat.iter().all(|ch| in_sub(ch) && found.iter().any(|f| self.stalks_isomorphic(f, ch)));
            ledger.record(
                "W",
                r,
                w,
                format!("{} complements found: {}", found.len(), found.iter().map(stalk_text).collect::<Vec<_>>().join(" ")),
            );

            if u[k] == t[k + 1] {
                let mut terms: Vec<Representation<F>> = a[..=k].to_vec();
                terms.push(c[k + 1].clone());
                let q = self.hom_ext_quiver(&ExceptionalSequence::from_terms(terms))?;
                let path = q.path_ending_in(k, k + 1, &[Decoration::M, Decoration::E]);
                ledger.record("X", r, path.is_some(), format!("{path:?}"));
            }

            ledger.record("Y", r, t[k + 1] >= u[k] && u[k] >= t[k], format!("{} ≥ {} ≥ {}", t[k + 1], u[k], t[k]));
            ledger.record("lower bound", r, t[k] >= r as i32 - 3, format!("d(C_{k}) = {}", t[k]));

            if p.rules[k] == Rule::P3 {
                let d = u[k] - 1;
                let violates_i = d < t[k];
                let violates_ii = k >= 1 && self.ext1_dim(&a[k - 1], &a[k])? != 0 && d <= u[k - 1];
                let violates_iii = k >= 2 && self.ext1_dim(&a[k - 2], &a[k])? != 0 && d <= u[k - 2];
                ledger.record(
                    "P3 minimal",
                    r,
                    violates_i || violates_ii || violates_iii,
                    format!("degree {} chosen", u[k]),
                );
            }
        }

        // The final placement: domain membership, silting complements in
        // S_{n-1}, and exchange triangles that shift the mutation triangles.
        let m = n - 1;
        let ahat = p.placed_a();
        let chat = p.placed_c();
        let in_dom = n == 1 || ahat.iter().chain(&chat).all(|s| self.in_domain(s, m));
        ledger.record("domain", 0, in_dom, "all placed stalks in S_{n-1}");
        if n >= 2 {
            let cand = SiltingCandidate::new(self, ahat.clone())?;
            let scanned: Vec<Stalk<F>> = self
                .silting_complements_scan(&cand, 0, m as i32)?
                .into_iter()
                .filter(|s| self.in_domain(s, m))
                .collect();
            let same = scanned.len() == n && chat.iter().all(|ch| scanned.iter().any(|s| self.stalks_isomorphic(s, ch)));
            ledger.record("complements", 0, same, format!("{} complements in S_{{n-1}}", scanned.len()));
            for (i, pt) in p.triangles.iter().enumerate() {
                let tri = self.exchange_forward(&pt.from, &ahat)?;
                let copies = tri.middle.iter().filter(|s| self.stalks_isomorphic(s, &pt.middle)).count();
                let ok = tri.middle.len() == pt.r && copies == pt.r && self.stalks_isomorphic(&tri.to, &pt.to);
                ledger.record(
                    "triangles",
                    0,
                    ok,
                    format!("triangle {i}: {} → {} copies → {}", stalk_text(&tri.from), tri.middle.len(), stalk_text(&tri.to)),
                );
            }
        }
        Ok(ledger)
    }

    /// The Ext-projectives of `Y^⊥`, checked against the defining properties
    /// of the Bongartz complement.
    pub fn bongartz_complement(&self, y: &Representation<F>) -> Result<Representation<F>> {
        if self.projective_index(y).is_some() {
            return Err(Error::IsProjective);
        }
        if !self.is_exceptional(y)? {
            return Err(Error::InvalidArgument("module is not exceptional".into()));
        }
        let perp = self.perpendicular(y)?;
        let w = Representation::sum_of(self.quiver(), &perp.ext_projectives);
        let t = y.direct_sum(&w);
        let fail = |detail: &str| Error::InvariantViolation { clause: "Bongartz".into(), detail: detail.into() };
        if self.ext1_dim(&t, &t)? != 0 || perp.ext_projectives.len() + 1 != self.n() {
            return Err(fail("Y ⊕ W is not tilting"));
        }
        if perp.ext_projectives.iter().any(|x| self.is_isomorphic(x, y)) {
            return Err(fail("Y is a summand of W"));
        }
        if self.hom_dim(y, &w) != 0 {
            return Err(fail("Hom(Y, W) ≠ 0"));
        }
        for u in self.indecomposables()? {
            if self.ext1_dim(y, u)? == 0 && self.ext1_dim(&w, u)? != 0 {
                return Err(fail("Ext¹(Y, U) = 0 but Ext¹(W, U) ≠ 0"));
            }
        }
        Ok(w)
    }

    /// Exhaustive search for one degree per module (up to isomorphism) over
    /// all modules occurring in `sequences`. For [`GlobalSearch::Cluster`],
    /// `sequences[0]` is the reference sequence and each later one must arise
    /// from it by replacing one term.
    pub fn search_global_placement(
        &self,
        sequences: &[ExceptionalSequence<F>],
        search: GlobalSearch,
    ) -> Result<Option<GlobalPlacement<F>>> {
        let mut modules: Vec<Representation<F>> = Vec::new();
        let mut index: Vec<Vec<usize>> = Vec::new();
        for s in sequences {
            let mut idx = Vec::new();
            for x in s.terms() {
                let i = match modules.iter().position(|m| self.is_isomorphic(m, x)) {
                    Some(i) => i,
                    None => {
                        modules.push(self.tidy(x));
                        modules.len() - 1
                    }
                };
                idx.push(i);
            }
            index.push(idx);
        }
        // Check each sequence once all of its modules have degrees.
        let ready: Vec<usize> = index.iter().map(|idx| idx.iter().copied().max().map_or(0, |x| x + 1)).collect();
        match search {
            GlobalSearch::Silting { lo, hi } => {
                let check = |deg: &[i32], s: usize| -> Result<bool> {
                    let stalks = index[s].iter().map(|&i| Stalk::new(modules[i].clone(), deg[i])).collect();
                    self.is_silting(&SiltingCandidate::new(self, stalks)?)
                };
                let found = assign(modules.len(), lo, hi, &ready, &check)?;
                Ok(found.map(|d| GlobalPlacement { m: None, degrees: modules.iter().cloned().zip(d).collect() }))
            }
            GlobalSearch::Cluster { max_degree, max_m } => {
                for m in 1..=max_m {
                    let mut memo: HashMap<Vec<(Vec<usize>, i32)>, Stalk<F>> = HashMap::new();
                    let mut check = |deg: &[i32], s: usize| -> Result<bool> {
                        self.cluster_condition(&modules, &index, deg, s, m, &mut memo)
                    };
                    let found = assign_mut(modules.len(), 0, max_degree.min(m as i32), &ready, &mut check)?;
                    if let Some(d) = found {
                        return Ok(Some(GlobalPlacement { m: Some(m), degrees: modules.iter().cloned().zip(d).collect() }));
                    }
                }
                Ok(None)
            }
        }
    }

    /// Sequence `s` placed as an m-cluster tilting object; for `s > 0` the
    /// replaced summand of the reference object must be exchanged for the new
    /// one by a forward exchange triangle in `C_m`.
    fn cluster_condition(
        &self,
        modules: &[Representation<F>],
        index: &[Vec<usize>],
        deg: &[i32],
        s: usize,
        m: usize,
        memo: &mut HashMap<Vec<(Vec<usize>, i32)>, Stalk<F>>,
    ) -> Result<bool> {
        let stalk = |i: usize| Stalk::new(modules[i].clone(), deg[i]);
        let stalks: Vec<Stalk<F>> = index[s].iter().map(|&i| stalk(i)).collect();
        if !stalks.iter().all(|x| self.in_domain(x, m)) {
            return Ok(false);
        }
        let Ok(obj) = ClusterObject::new(self, m, stalks) else {
            return Ok(false);
        };
        if !self.is_m_cluster_tilting(&obj)? {
            return Ok(false);
        }
        if s == 0 {
            return Ok(true);
        }
        let old: Vec<usize> = index[0].iter().copied().filter(|i| !index[s].contains(i)).collect();
        let new: Vec<usize> = index[s].iter().copied().filter(|i| !index[0].contains(i)).collect();
        if old.len() != 1 || new.len() != 1 {
            return Err(Error::InvalidArgument(format!("sequence {} does not replace exactly one term", s + 1)));
        }
        let tbar: Vec<Stalk<F>> = index[0].iter().filter(|&&i| i != old[0]).map(|&i| stalk(i)).collect();
        let from = stalk(old[0]);
        let key: Vec<(Vec<usize>, i32)> =
            tbar.iter().chain([&from]).map(|x| (x.module.dim().to_vec(), x.shift)).collect();
        let next = match memo.get(&key) {
            Some(c) => c.clone(),
            None => {
                let c = self.cluster_exchange_forward(&from, &ClusterObject::new(self, m, tbar)?)?.to;
                memo.insert(key, c.clone());
                c
            }
        };
        Ok(self.stalks_isomorphic(&next, &stalk(new[0])))
    }
}

/// Backtracking over `degrees[i] ∈ lo..=hi`; constraint `s` is checked as
/// soon as the first `ready[s]` degrees are set.
fn assign<F>(count: usize, lo: i32, hi: i32, ready: &[usize], check: &F) -> Result<Option<Vec<i32>>>
where
    F: Fn(&[i32], usize) -> Result<bool>,
{
    let mut wrapped = |d: &[i32], s: usize| check(d, s);
    assign_mut(count, lo, hi, ready, &mut wrapped)
}

fn assign_mut<F>(count: usize, lo: i32, hi: i32, ready: &[usize], check: &mut F) -> Result<Option<Vec<i32>>>
where
    F: FnMut(&[i32], usize) -> Result<bool>,
{
    fn go<F: FnMut(&[i32], usize) -> Result<bool>>(
        deg: &mut Vec<i32>,
        count: usize,
        lo: i32,
        hi: i32,
        ready: &[usize],
        check: &mut F,
    ) -> Result<bool> {
        for s in 0..ready.len() {
            if ready[s] == deg.len() && !check(deg, s)? {
                return Ok(false);
            }
        }
        if deg.len() == count {
            return Ok(true);
        }
        for d in lo..=hi {
            deg.push(d);
            if go(deg, count, lo, hi, ready, check)? {
                return Ok(true);
            }
            deg.pop();
        }
        Ok(false)
    }
    let mut deg = Vec::new();
    Ok(go(&mut deg, count, lo, hi, ready, check)?.then_some(deg))
}
