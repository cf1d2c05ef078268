//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use siltwork::exactla::Matrix;
use siltwork::excseq::ExceptionalSequence;
use siltwork::repcat::{ModCat, Stalk};
use siltwork::{Quiver, RatModCat, RatRepresentation, Rational};

pub type Rep = RatRepresentation;
pub type St = Stalk<Rational>;

pub fn a2() -> RatModCat {
    ModCat::new(Quiver::new(2, &[(2, 1)]).unwrap())
}

pub fn a3() -> RatModCat {
    ModCat::new(Quiver::new(3, &[(2, 1), (3, 2)]).unwrap())
}

pub fn a3_alternating() -> RatModCat {
    ModCat::new(Quiver::new(3, &[(2, 1), (2, 3)]).unwrap())
}

pub fn d4() -> RatModCat {
    ModCat::new(Quiver::new(4, &[(2, 1), (3, 1), (4, 1)]).unwrap())
}

pub fn triangle() -> RatModCat {
    ModCat::new(Quiver::new(3, &[(2, 1), (3, 1), (3, 2)]).unwrap())
}

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Basis of `Hom(X, Y)` from the linear equations `φ_t X_a = Y_a φ_s`,
/// each element given by its components per vertex.
pub fn hom_basis(q: &Quiver, x: &Rep, y: &Rep) -> Vec<Vec<Matrix<Rational>>> {
    let n = q.num_vertices();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + x.dim()[v] * y.dim()[v];
    }
    let unknowns = offset[n];
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let (xa, ya) = (x.map(a), y.map(a));
        // Entry (i, j) of φ_t X_a − Y_a φ_s, with φ_v stored row-major.
        for i in 0..y.dim()[t] {
            for j in 0..x.dim()[s] {
                let mut row = vec![r(0); unknowns];
                for k in 0..x.dim()[t] {
                    let idx = offset[t] + i * x.dim()[t] + k;
                    row[idx] = row[idx].clone() + xa.row(k)[j].clone();
                }
                for k in 0..y.dim()[s] {
                    let idx = offset[s] + k * x.dim()[s] + j;
                    row[idx] = row[idx].clone() - ya.row(i)[k].clone();
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::<Rational>::identity(unknowns).columns()
    } else {
        Matrix::from_rows(unknowns, rows).unwrap().kernel_basis()
    };
    kernel
        .into_iter()
        .map(|k| {
            (0..n)
                .map(|v| {
                    let (rr, cc) = (y.dim()[v], x.dim()[v]);
                    Matrix::from_vec(rr, cc, k[offset[v]..offset[v + 1]].to_vec()).unwrap()
                })
                .collect()
        })
        .collect()
}

pub fn hom_dim(q: &Quiver, x: &Rep, y: &Rep) -> usize {
    hom_basis(q, x, y).len()
}

/// `Ext¹(X, Y)` as the cokernel of `Hom(P0, Y) → Hom(P1, Y)` on a projective
/// resolution of `X`.
pub fn ext1_dim(c: &RatModCat, x: &Rep, y: &Rep) -> usize {
    let q = c.quiver();
    let res = c.resolution(x).unwrap();
    let d = &res.differential;
    let images: Vec<Vec<Rational>> = hom_basis(q, &res.p0, y)
        .iter()
        .map(|phi| {
            phi.iter()
                .zip(&d.components)
                .flat_map(|(p, dv)| p.mul_mat(dv).entries().to_vec())
                .collect()
        })
        .collect();
    let target = hom_dim(q, &res.p1, y);
    let ambient: usize = (0..q.num_vertices()).map(|v| res.p1.dim()[v] * y.dim()[v]).sum();
    let rank = if images.is_empty() { 0 } else { Matrix::from_columns(ambient, &images).rank() };
    target - rank
}

pub fn hom_d(c: &RatModCat, x: &St, y: &St) -> usize {
    match y.shift - x.shift {
        0 => hom_dim(c.quiver(), &x.module, &y.module),
        1 => ext1_dim(c, &x.module, &y.module),
        _ => 0,
    }
}

/// `Ext^i_D(T, T) = 0` for `1 ≤ i ≤ top`, summand by summand.
pub fn ext_d_vanishes(c: &RatModCat, t: &[St], top: i32) -> bool {
    t.iter().all(|x| t.iter().all(|y| (1..=top).all(|i| hom_d(c, x, &y.shifted(i)) == 0)))
}

/// All positive shifts; two stalks only interact in shifts `0` and `1`.
pub fn partial_silting(c: &RatModCat, t: &[St]) -> bool {
    let span = t.iter().map(|s| s.shift).max().unwrap_or(0) - t.iter().map(|s| s.shift).min().unwrap_or(0);
    ext_d_vanishes(c, t, span + 1)
}

pub fn is_exceptional_sequence(c: &RatModCat, terms: &[Rep]) -> bool {
    let q = c.quiver();
    for (j, b) in terms.iter().enumerate() {
        if hom_dim(q, b, b) != 1 || ext1_dim(c, b, b) != 0 {
            return false;
        }
        for a in &terms[..j] {
            if hom_dim(q, b, a) != 0 || ext1_dim(c, b, a) != 0 {
                return false;
            }
        }
    }
    true
}

/// Whether the summands can be ordered into an exceptional sequence with
/// lower degrees first.
pub fn slice_orderable(c: &RatModCat, t: &[St]) -> bool {
    let mut sorted = t.to_vec();
    sorted.sort_by_key(|s| s.shift);
    let mut slices: Vec<Vec<Rep>> = Vec::new();
    let mut last = None;
    for s in sorted {
        if last != Some(s.shift) {
            slices.push(Vec::new());
            last = Some(s.shift);
        }
        slices.last_mut().unwrap().push(s.module);
    }
    fn go(c: &RatModCat, slices: &[Vec<Rep>], prefix: &mut Vec<Rep>) -> bool {
        let Some((first, rest)) = slices.split_first() else {
            return true;
        };
        permutations(first).into_iter().any(|p| {
            let len = prefix.len();
            prefix.extend(p);
            let ok = is_exceptional_sequence(c, prefix) && go(c, rest, prefix);
            prefix.truncate(len);
            ok
        })
    }
    go(c, &slices, &mut Vec::new())
}

pub fn permutations<T: Clone>(xs: &[T]) -> Vec<Vec<T>> {
    if xs.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

/// Subsets of `items` of size at most `k`, in lexicographic index order.
pub fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    fn go<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            out.push(cur.clone());
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn stalks_in(c: &RatModCat, lo: i32, hi: i32) -> Vec<St> {
    let ind = c.indecomposables().unwrap();
    (lo..=hi).flat_map(|d| ind.iter().map(move |x| Stalk::new(x.clone(), d))).collect()
}

/// Almost complete exceptional sequences, one per dimension-vector list.
pub fn almost_complete_sequences(c: &RatModCat) -> Vec<ExceptionalSequence<Rational>> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for s in c.complete_sequences().unwrap() {
        for i in 0..s.len() {
            let e = s.without(i);
            if !seen.contains(&e.dims()) {
                seen.push(e.dims());
                out.push(e);
            }
        }
    }
    out
}

/// Number of complete exceptional sequences of a Dynkin quiver of rank `n`
/// with Coxeter number `h` and Weyl group order `w`: `n! h^n / w`.
pub fn sequence_count(n: u64, h: u64, w: u64) -> u64 {
    (1..=n).product::<u64>() * h.pow(n as u32) / w
}
