//! The decorated Hom-Ext quiver of an exceptional sequence.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::excseq::ExceptionalSequence;
use crate::repcat::{ModCat, Morphism};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    /// A monomorphism exists.
    M,
    /// An epimorphism exists.
    E,
    /// `Ext¹(target, source) ≠ 0`.
    X,
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decoration::M => "m",
            Decoration::E => "e",
            Decoration::X => "x",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomExtQuiver {
    /// Dimension vectors of the terms, used as vertex labels.
    pub vertices: Vec<Vec<usize>>,
    /// `(from, to, decoration)`, sorted.
    pub arrows: Vec<(usize, usize, Decoration)>,
}

impl HomExtQuiver {
    pub fn from_arrows(vertices: Vec<Vec<usize>>, mut arrows: Vec<(usize, usize, Decoration)>) -> Self {
        arrows.sort();
        arrows.dedup();
        HomExtQuiver { vertices, arrows }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn decoration(&self, from: usize, to: usize) -> Option<Decoration> {
        self.arrows.iter().find(|&&(a, b, _)| a == from && b == to).map(|&(_, _, d)| d)
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.decoration(from, to).is_some()
    }

    fn has(&self, from: usize, to: usize, d: Decoration) -> bool {
        self.decoration(from, to) == Some(d)
    }

    pub fn is_acyclic(&self) -> bool {
        // 0 = unvisited, 1 = on stack, 2 = done
        let n = self.len();
        let mut state = vec![0u8; n];
        fn visit(g: &HomExtQuiver, v: usize, state: &mut [u8]) -> bool {
            state[v] = 1;
            for &(a, b, _) in &g.arrows {
                if a == v {
                    if state[b] == 1 || (state[b] == 0 && !visit(g, b, state)) {
                        return false;
                    }
                }
            }
            state[v] = 2;
            true
        }
        (0..n).all(|v| state[v] != 0 || visit(self, v, &mut state))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b, _) in &self.arrows {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Checks the six closure rules for decorated arrows on all triples of
    /// distinct vertices.
    pub fn check_elementary(&self) -> Result<()> {
        use Decoration::*;
        let n = self.len();
        let fail = |clause: &str, a: usize, b: usize, c: usize| Error::InvariantViolation {
            clause: format!("elementary ({clause})"),
            detail: format!("vertices {} {} {}", a + 1, b + 1, c + 1),
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    if self.has(a, b, E) && self.has(b, c, M) {
                        return Err(fail("a", a, b, c));
                    }
                    if self.has(a, b, M) && self.has(b, c, M) && !self.has(a, c, M) {
                        return Err(fail("b", a, b, c));
                    }
                    if self.has(a, b, E) && self.has(b, c, E) && !self.has(a, c, E) {
                        return Err(fail("c", a, b, c));
                    }
                    if self.has(a, b, E) && self.has(b, c, X) && !self.has(a, c, X) {
                        return Err(fail("d", a, b, c));
                    }
                    if self.has(a, b, X) && self.has(b, c, M) && !self.has(a, c, X) {
                        return Err(fail("e", a, b, c));
                    }
                    if self.has_arrow(a, b) && self.has(b, c, M) && !self.has_arrow(a, c) {
                        return Err(fail("f", a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// A directed path from `from` to `to`, as a list of vertices, whose last
    /// arrow carries one of `last`. Shortest such path in breadth-first order.
    pub fn path_ending_in(&self, from: usize, to: usize, last: &[Decoration]) -> Option<Vec<usize>> {
        let n = self.len();
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([from]);
        seen[from] = true;
        while let Some(v) = queue.pop_front() {
            for &(a, b, d) in &self.arrows {
                if a != v {
                    continue;
                }
                if b == to && last.contains(&d) {
                    let mut path = vec![to, v];
                    let mut cur = v;
                    while let Some(p) = prev[cur] {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return Some(path);
                }
                if !seen[b] {
                    seen[b] = true;
                    prev[b] = Some(v);
                    queue.push_back(b);
                }
            }
        }
        None
    }

    /// Graphviz text with vertices `E1, E2, ...` in sequence order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for (i, d) in self.vertices.iter().enumerate() {
            let dims: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "  E{} [label=\"E{} ({})\"];", i + 1, i + 1, dims.join(","));
        }
        for &(a, b, dec) in &self.arrows {
            let _ = writeln!(out, "  E{} -> E{} [label=\"{}\"];", a + 1, b + 1, dec);
        }
        out.push_str("}\n");
        out
    }
}

impl<F: Scalar> ModCat<F> {
    /// A monomorphism or epimorphism in the span of `basis`, searched over the
    /// basis and then fixed small integer combinations.
    pub fn mono_or_epi(&self, basis: &[Morphism<F>]) -> Option<Morphism<F>> {
        let check = |f: &Morphism<F>| f.is_mono() || f.is_epi();
        if let Some(f) = basis.iter().find(|f| check(f)) {
            return Some(f.clone());
        }
        let k = basis.len();
        for i in 0..k {
            for j in i + 1..k {
                for c in [1i64, -1, 2, 3] {
                    let f = basis[i].add(&basis[j].scale(&F::from_i64(c)));
                    if check(&f) {
                        return Some(f);
                    }
                }
            }
        }
        for weights in [1i64, 2, 3] {
            let f = basis
                .iter()
                .enumerate()
                .skip(1)
                .fold(basis[0].clone(), |acc, (i, g)| acc.add(&g.scale(&F::from_i64((i as i64 + 1) * weights))));
            if check(&f) {
                return Some(f);
            }
        }
        None
    }

    pub fn hom_ext_quiver(&self, seq: &ExceptionalSequence<F>) -> Result<HomExtQuiver> {
        let terms = seq.terms();
        let mut arrows = Vec::new();
        for i in 0..terms.len() {
            for j in 0..terms.len() {
                if i == j {
                    continue;
                }
                let (a, b) = (&terms[i], &terms[j]);
                let hom = self.hom_basis(a, b);
                let ext = self.ext1_dim(b, a)?;
                if !hom.is_empty() && ext != 0 {
                    return Err(Error::inconsistent(format!(
                        "pair {} -> {} carries both Hom and Ext¹",
                        i + 1,
                        j + 1
                    )));
                }
                if !hom.is_empty() {
                    let f = self.mono_or_epi(&hom).ok_or(Error::DecorationUndecidable)?;
                    let dec = if f.is_mono() { Decoration::M } else { Decoration::E };
                    arrows.push((i, j, dec));
                } else if ext != 0 {
                    arrows.push((i, j, Decoration::X));
                }
            }
        }
        Ok(HomExtQuiver::from_arrows(seq.dims(), arrows))
    }
}
