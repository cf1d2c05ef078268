//! Finite acyclic quivers.
//!
//! Vertices are `0..n` internally; the JSON format and the CLI use 1-based
//! labels. Arrows keep their input order, which fixes the order of the
//! structure maps of every representation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    topo: Vec<usize>,
}

impl Quiver {
    /// Builds a quiver from 1-based arrow endpoints.
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(Error::BadIndex { index: v, vertices: n });
                }
            }
            zero_based.push((s - 1, t - 1));
        }
        Self::from_zero_based(n, zero_based)
    }

    pub fn from_zero_based(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a quiver needs at least one vertex".into()));
        }
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= n {
                    return Err(Error::BadIndex { index: v + 1, vertices: n });
                }
            }
        }
        let topo = topological_order(n, &arrows)?;
        Ok(Quiver { n, arrows, topo })
    }

    /// Linear orientation `n -> n-1 -> ... -> 1`.
    pub fn linear_a(n: usize) -> Self {
        let arrows: Vec<_> = (1..n).map(|i| (i, i - 1)).collect();
        Self::from_zero_based(n, arrows).expect("linear quiver is acyclic")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices ordered so that every arrow points forward.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, &(s, _))| s == v).map(|(a, &(_, t))| (a, t))
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, &(_, t))| t == v).map(|(a, &(s, _))| (a, s))
    }

    /// The quiver with every arrow at `k` reversed. Arrow indices are kept.
    pub fn reflect(&self, k: usize) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == k || t == k { (t, s) } else { (s, t) })
            .collect();
        Self::from_zero_based(self.n, arrows).expect("reflection preserves acyclicity")
    }

    /// `k_1, ..., k_n` with `k_1` a sink of `Q` and each `k_{i+1}` a sink of
    /// the quiver reflected at `k_1, ..., k_i`.
    pub fn admissible_sinks(&self) -> Vec<usize> {
        self.topo.iter().rev().copied().collect()
    }

    /// All paths from `i` to `j` as arrow index sequences, first arrow first.
    /// The trivial path at `i` is the empty sequence.
    pub fn paths(&self, i: usize, j: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(i, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            if v == j {
                out.push(path.clone());
            }
            for (a, t) in self.arrows_from(v).collect::<Vec<_>>().into_iter().rev() {
                let mut p = path.clone();
                p.push(a);
                stack.push((t, p));
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `<d, e> = sum_i d_i e_i - sum_{a: s -> t} d_s e_t`.
    pub fn euler_form(&self, d: &[usize], e: &[usize]) -> Result<i64> {
        if d.len() != self.n || e.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "dimension vectors of length {} and {} on a quiver with {} vertices",
                d.len(),
                e.len(),
                self.n
            )));
        }
        let diag: i64 = d.iter().zip(e).map(|(&x, &y)| (x * y) as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| (d[s] * e[t]) as i64).sum();
        Ok(diag - off)
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(s, t) in &self.arrows {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn dynkin_type(&self) -> Classification {
        let mut parts = Vec::new();
        for comp in self.components() {
            match classify_component(self, &comp) {
                Some(t) => parts.push(t),
                None => return Classification::RepInfinite,
            }
        }
        parts.sort();
        Classification::Dynkin(parts)
    }

    pub fn is_dynkin(&self) -> bool {
        matches!(self.dynkin_type(), Classification::Dynkin(_))
    }
}

fn topological_order(n: usize, arrows: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for &(_, t) in arrows {
        indeg[t] += 1;
    }
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &(s, t) in arrows {
            if s == v {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.insert(t);
                }
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n).find(|v| !order.contains(v)).unwrap_or(0);
        return Err(Error::CyclicQuiver(stuck + 1));
    }
    Ok(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinComponent {
    pub family: DynkinFamily,
    pub rank: usize,
}

impl DynkinComponent {
    pub fn positive_roots(&self) -> usize {
        let r = self.rank;
        match (self.family, r) {
            (DynkinFamily::A, _) => r * (r + 1) / 2,
            (DynkinFamily::D, _) => r * (r - 1),
            (DynkinFamily::E, 6) => 36,
            (DynkinFamily::E, 7) => 63,
            (DynkinFamily::E, 8) => 120,
            _ => unreachable!("no E_{r}"),
        }
    }
}

impl fmt::Display for DynkinComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// One entry per connected component.
    Dynkin(Vec<DynkinComponent>),
    RepInfinite,
}

impl Classification {
    pub fn positive_roots(&self) -> Option<usize> {
        match self {
            Classification::Dynkin(parts) => Some(parts.iter().map(|c| c.positive_roots()).sum()),
            Classification::RepInfinite => None,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::RepInfinite => write!(f, "RepInfinite"),
            Classification::Dynkin(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", names.join("+"))
            }
        }
    }
}

fn classify_component(q: &Quiver, comp: &[usize]) -> Option<DynkinComponent> {
    let inside = |v: usize| comp.binary_search(&v).is_ok();
    let mut edges: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .filter(|&&(s, _)| inside(s))
        .map(|&(s, t)| (s.min(t), s.max(t)))
        .collect();
    let total = edges.len();
    edges.sort();
    edges.dedup();
    if edges.len() != total || edges.len() + 1 != comp.len() {
        // parallel arrows, or a cycle in the underlying graph
        return None;
    }
    let r = comp.len();
    let degree = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => Some(DynkinComponent { family: DynkinFamily::A, rank: r }),
        [c] if degree(*c) == 3 => {
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b)| if a == *c { Some(b) } else if b == *c { Some(a) } else { None })
                .map(|start| arm_length(&edges, *c, start))
                .collect();
            arms.sort();
            let family = match arms.as_slice() {
                [1, 1, _] => DynkinFamily::D,
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => DynkinFamily::E,
                _ => return None,
            };
            Some(DynkinComponent { family, rank: r })
        }
        _ => None,
    }
}

fn arm_length(edges: &[(usize, usize)], center: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    loop {
        let next = edges.iter().find_map(|&(a, b)| {
            if a == cur && b != prev {
                Some(b)
            } else if b == cur && a != prev {
                Some(a)
            } else {
                None
            }
        });
        match next {
            Some(n) => {
                prev = cur;
                cur = n;
                len += 1;
            }
            None => return len,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> Quiver {
        Quiver::new(2, &[(2, 1)]).unwrap()
    }

    fn triangle() -> Quiver {
        Quiver::new(3, &[(2, 1), (3, 1), (3, 2)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Quiver::new(1, &[]).is_ok());
        assert_eq!(a2().num_vertices(), 2);
        assert_eq!(Quiver::new(1, &[(1, 1)]), Err(Error::CyclicQuiver(1)));
        assert!(matches!(Quiver::new(2, &[(1, 2), (2, 1)]), Err(Error::CyclicQuiver(_))));
        assert_eq!(Quiver::new(2, &[(3, 1)]), Err(Error::BadIndex { index: 3, vertices: 2 }));
        assert!(Quiver::new(0, &[]).is_err());
    }

    #[test]
    fn topological_order_respects_arrows() {
        let q = triangle();
        let pos = |v: usize| q.topological_order().iter().position(|&x| x == v).unwrap();
        for &(s, t) in q.arrows() {
            assert!(pos(s) < pos(t));
        }
    }

    #[test]
    fn euler_form_examples() {
        let q = a2();
        // simples: <e_i, e_j> = delta_ij - #(i -> j)
        assert_eq!(q.euler_form(&[1, 0], &[1, 0]).unwrap(), 1);
        assert_eq!(q.euler_form(&[0, 1], &[1, 0]).unwrap(), -1);
        assert_eq!(q.euler_form(&[1, 0], &[0, 1]).unwrap(), 0);
        assert_eq!(q.euler_form(&[1, 1], &[1, 0]).unwrap(), 0);
        assert!(q.euler_form(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn classification() {
        use DynkinFamily::*;
        assert_eq!(a2().dynkin_type(), Classification::Dynkin(vec![DynkinComponent { family: A, rank: 2 }]));
        assert_eq!(triangle().dynkin_type(), Classification::RepInfinite);
        let kronecker = Quiver::new(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(kronecker.dynkin_type(), Classification::RepInfinite);
        let d4 = Quiver::new(4, &[(1, 2), (3, 2), (4, 2)]).unwrap();
        assert_eq!(d4.dynkin_type(), Classification::Dynkin(vec![DynkinComponent { family: D, rank: 4 }]));
        assert_eq!(d4.dynkin_type().positive_roots(), Some(12));
        let e6 = Quiver::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (6, 3)]).unwrap();
        assert_eq!(e6.dynkin_type().positive_roots(), Some(36));
        let d4_tilde = Quiver::new(5, &[(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
        assert_eq!(d4_tilde.dynkin_type(), Classification::RepInfinite);
        let a1a1 = Quiver::new(2, &[]).unwrap();
        assert_eq!(a1a1.dynkin_type().positive_roots(), Some(2));
    }

    #[test]
    fn paths_count() {
        let q = triangle();
        assert_eq!(q.paths(2, 0).len(), 2);
        assert_eq!(q.paths(2, 2), vec![Vec::<usize>::new()]);
        assert!(q.paths(0, 2).is_empty());
    }

    #[test]
    fn admissible_sinks_are_sinks_in_turn() {
        let q = triangle();
        let mut cur = q.clone();
        for k in q.admissible_sinks() {
            assert!(cur.is_sink(k));
            cur = cur.reflect(k);
        }
        assert_eq!(cur, q);
    }

    proptest! {
        #[test]
        fn euler_form_is_bilinear(
            d1 in proptest::collection::vec(0usize..4, 3),
            d2 in proptest::collection::vec(0usize..4, 3),
            e in proptest::collection::vec(0usize..4, 3),
        ) {
            let q = triangle();
            let sum: Vec<usize> = d1.iter().zip(&d2).map(|(a, b)| a + b).collect();
            prop_assert_eq!(
                q.euler_form(&sum, &e).unwrap(),
                q.euler_form(&d1, &e).unwrap() + q.euler_form(&d2, &e).unwrap()
            );
            prop_assert_eq!(
                q.euler_form(&e, &sum).unwrap(),
                q.euler_form(&e, &d1).unwrap() + q.euler_form(&e, &d2).unwrap()
            );
        }
    }
}
