//! Exhaustive property suites over one Dynkin quiver.

use crate::cluster::ClusterObject;
use crate::derived::SiltingCandidate;
use crate::error::{Error, Result};
use crate::repcat::ModCat;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    /// The first failure, if any.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Falsifications become failed reports; other errors propagate.
fn suite(name: &str, body: impl FnOnce(&mut usize) -> Result<Option<String>>) -> Result<SuiteReport> {
    let mut checked = 0;
    let failure = match body(&mut checked) {
        Ok(f) => f,
        Err(e) if e.is_falsification() => Some(e.to_string()),
        Err(e) => return Err(e),
    };
    Ok(SuiteReport { name: name.into(), checked, failure })
}

impl<F: Scalar> ModCat<F> {
    /// Runs every suite; `max_m` bounds the cluster categories visited.
    pub fn verify_all(&self, max_m: usize) -> Result<Vec<SuiteReport>> {
        if !self.is_dynkin() {
            return Err(Error::RepInfinite);
        }
        Ok(vec![
            self.suite_sequences()?,
            self.suite_homext()?,
            self.suite_silting()?,
            self.suite_cluster(max_m)?,
            self.suite_placement()?,
        ])
    }

    /// Brute-force enumeration agrees with the mutation orbit of the simples.
    pub fn suite_sequences(&self) -> Result<SuiteReport> {
        suite("complete sequences", |checked| {
            let all = self.complete_sequences()?;
            let orbit = self.mutation_orbit()?;
            *checked = all.len();
            if all.len() != orbit.len() || !all.iter().all(|s| orbit.iter().any(|t| t.same_as(self, s))) {
                return Ok(Some(format!("{} sequences, orbit has {}", all.len(), orbit.len())));
            }
            Ok(None)
        })
    }

    pub fn suite_homext(&self) -> Result<SuiteReport> {
        suite("hom-ext quiver", |checked| {
            for s in self.complete_sequences()? {
                let g = self.hom_ext_quiver(&s)?;
                *checked += 1;
                if !g.is_acyclic() || !g.is_connected() {
                    return Ok(Some(format!("sequence {:?}: acyclic {}, connected {}", s.dims(), g.is_acyclic(), g.is_connected())));
                }
                g.check_elementary()?;
            }
            Ok(None)
        })
    }

    /// Staircases are silting and order back to their sequence; each
    /// almost complete one has a consistent complement chain.
    pub fn suite_silting(&self) -> Result<SuiteReport> {
        suite("silting", |checked| {
            let n = self.n() as i32;
            for s in self.complete_sequences()? {
                let t = self.staircase(&s);
                *checked += 1;
                if !self.is_silting(&t)? {
                    return Ok(Some(format!("staircase of {:?} is not silting", s.dims())));
                }
                match self.silting_order(&t)? {
                    Some(o) if o.same_as(self, &s) => {}
                    _ => return Ok(Some(format!("staircase of {:?} does not order back", s.dims()))),
                }
                for i in 0..t.len() {
                    let w = self.silting_complements_in_window(&t.without(i), -1, n)?;
                    if w.is_empty() {
                        return Ok(Some(format!("no complements for {:?} without term {}", s.dims(), i + 1)));
                    }
                }
            }
            Ok(None)
        })
    }

    /// Silting in the domain coincides with m-cluster tilting, and every
    /// almost complete object has a verified exchange cycle.
    pub fn suite_cluster(&self, max_m: usize) -> Result<SuiteReport> {
        suite("cluster", |checked| {
            for m in 1..=max_m {
                let tilting = self.m_cluster_tilting_objects(m)?;
                for t in &tilting {
                    *checked += 1;
                    if !self.is_silting(t.candidate())? {
                        return Ok(Some(format!("m = {m}: cluster tilting object is not silting")));
                    }
                    for i in 0..t.len() {
                        let tbar = ClusterObject::new(self, m, t.candidate().without(i).summands().to_vec())?;
                        let ex = self.exchange_triangles(&tbar)?;
                        if ex.complements.len() != m + 1 {
                            return Ok(Some(format!("m = {m}: {} complements", ex.complements.len())));
                        }
                    }
                }
                let silting = self.domain_silting_count(m)?;
                if silting != tilting.len() {
                    return Ok(Some(format!("m = {m}: {} silting objects, {} cluster tilting", silting, tilting.len())));
                }
            }
            Ok(None)
        })
    }

    fn domain_silting_count(&self, m: usize) -> Result<usize> {
        let dom = self.fundamental_domain(m)?;
        fn go<F: Scalar>(c: &ModCat<F>, dom: &[crate::repcat::Stalk<F>], start: usize, cur: &mut Vec<crate::repcat::Stalk<F>>) -> Result<usize> {
            if cur.len() == c.n() {
                return Ok(1);
            }
            let mut total = 0;
            for i in start..dom.len() {
                cur.push(dom[i].clone());
                if c.is_partial_silting(&SiltingCandidate::new(c, cur.clone())?)? {
                    total += go(c, dom, i + 1, cur)?;
                }
                cur.pop();
            }
            Ok(total)
        }
        go(self, &dom, 0, &mut Vec::new())
    }

    pub fn suite_placement(&self) -> Result<SuiteReport> {
        suite("placement", |checked| {
            let mut seen: Vec<Vec<Vec<usize>>> = Vec::new();
            for s in self.complete_sequences()? {
                for i in 0..s.len() {
                    let e = s.without(i);
                    if seen.contains(&e.dims()) {
                        continue;
                    }
                    seen.push(e.dims());
                    let p = self.place_almost_complete(&e)?;
                    *checked += 1;
                    let ledger = self.verify_placement(&p)?;
                    if let Some(c) = ledger.failures().first() {
                        return Ok(Some(format!("{:?}: {} at rank {}: {}", e.dims(), c.name, c.level, c.witness)));
                    }
                }
            }
            Ok(None)
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::quiver::Quiver;
    use crate::repcat::ModCat;
    use crate::Rational;

    #[test]
    fn a2_suites_pass() {
        let c = ModCat::<Rational>::new(Quiver::new(2, &[(2, 1)]).unwrap());
        let reports = c.verify_all(2).unwrap();
        assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
        assert_eq!(reports[0].checked, 3);
        assert_eq!(reports[4].checked, 3);
    }
}
