use super::*;
use crate::excseq::ExceptionalSequence;
use crate::Rational;

fn a2() -> ModCat<Rational> {
    ModCat::new(Quiver::new(2, &[(2, 1)]).unwrap())
}

fn st(m: &Representation<Rational>, d: i32) -> Stalk<Rational> {
    Stalk::new(m.clone(), d)
}

#[test]
fn hom_space_matches_formula_on_a2() {
    let c = a2();
    let ind = c.indecomposables().unwrap().to_vec();
    for x in &ind {
        for y in &ind {
            for a in 0..2 {
                for b in -1..3 {
                    let sp = c.hom_space_stalks(&st(x, a), &st(y, b)).unwrap();
                    assert_eq!(sp.dim(), c.hom_d_dim(x, a, y, b).unwrap(), "{:?}[{a}] {:?}[{b}]", x.dim(), y.dim());
                }
            }
        }
    }
}

#[test]
fn cones() {
    let c = a2();
    let q = c.quiver();
    let s1 = c.simple(0).clone();
    let s2 = c.simple(1).clone();
    let x = c.stalk_complex(&st(&s2, 0)).unwrap();
    assert!(c.normalize_stalks(&c.cone(&ChainMap::identity(&x))).unwrap().is_empty());
    let to_zero = ChainMap::zero(&x, &Complex::zero(q));
    assert_eq!(c.normalize_stalks(&c.cone(&to_zero)).unwrap(), vec![st(&c.tidy(&s2), 1)]);

    let sp = c.hom_space_stalks(&st(&s2, 0), &st(&s1, 1)).unwrap();
    assert_eq!(sp.dim(), 1);
    let cone = c.cone(&sp.basis[0]);
    let p2 = c.tidy(c.projective(1));
    assert_eq!(c.normalize_stalks(&cone).unwrap(), vec![st(&p2, 1)]);
    assert_eq!(c.normalize_stalks(&c.stalk_complex(&st(&p2, 3)).unwrap()).unwrap(), vec![st(&p2, 3)]);
    assert!(c.normalize_stalks(&Complex::zero(q)).unwrap().is_empty());
}

#[test]
fn shifted_complexes_are_chain_complexes() {
    let c = a2();
    let x = c.stalk_complex(&st(c.simple(1), 0)).unwrap();
    let y = x.shift(3);
    let z = Complex::new(c.quiver(), y.lo(), y.degrees().map(|k| y.term(k).clone()).collect(), vec![y.diff(y.lo())]);
    assert!(z.is_ok());
    assert_eq!(c.normalize_stalks(&y).unwrap(), vec![st(&c.tidy(c.simple(1)), 3)]);
}

#[test]
fn silting_on_a2() {
    let c = a2();
    let s1 = c.tidy(c.simple(0));
    let s2 = c.tidy(c.simple(1));
    let p2 = c.tidy(c.projective(1));
    let cand = |xs: Vec<Stalk<Rational>>| SiltingCandidate::new(&c, xs).unwrap();
    for a in -3..=3 {
        for b in -3..=3 {
            assert_eq!(c.is_silting(&cand(vec![st(&s1, a), st(&p2, b)])).unwrap(), a <= b);
            assert_eq!(c.is_silting(&cand(vec![st(&p2, a), st(&s2, b)])).unwrap(), a <= b);
            assert_eq!(c.is_silting(&cand(vec![st(&s2, a), st(&s1, b)])).unwrap(), a < b);
        }
    }
    assert!(!c.is_silting(&cand(vec![st(&s1, 0)])).unwrap());
    assert!(c.is_partial_silting(&cand(vec![])).unwrap());
    assert!(!c.is_silting(&cand(vec![])).unwrap());
    assert!(SiltingCandidate::new(&c, vec![st(&s1, 0), st(&s1, 0)]).is_err());
}

#[test]
fn staircase_and_order() {
    let c = a2();
    let s1 = c.tidy(c.simple(0));
    let s2 = c.tidy(c.simple(1));
    let p2 = c.tidy(c.projective(1));
    let seq = ExceptionalSequence::new(&c, vec![s1.clone(), p2.clone()]).unwrap();
    let t = c.staircase(&seq);
    assert_eq!(t.summands(), &[st(&s1, 0), st(&p2, 1)]);
    assert!(c.is_silting(&t).unwrap());
    assert!(c.silting_order(&t).unwrap().unwrap().same_as(&c, &seq));

    let flat = SiltingCandidate::new(&c, vec![st(&p2, 0), st(&s1, 0)]).unwrap();
    let order = c.silting_order(&flat).unwrap().unwrap();
    assert_eq!(order.dims(), vec![vec![1, 0], vec![1, 1]]);

    let bad = SiltingCandidate::new(&c, vec![st(&s2, 0), st(&s1, 0)]).unwrap();
    assert!(c.silting_order(&bad).unwrap().is_none());
    let seq = ExceptionalSequence::new(&c, vec![s2.clone(), s1.clone()]).unwrap();
    assert!(c.is_silting(&c.staircase(&seq)).unwrap());
}

#[test]
fn approximations_and_exchange() {
    let c = a2();
    let s1 = c.tidy(c.simple(0));
    let s2 = c.tidy(c.simple(1));
    let p2 = c.tidy(c.projective(1));
    let tbar = [st(&p2, 0)];
    let tri = c.exchange_backward(&tbar, &st(&s2, 0)).unwrap();
    assert_eq!(tri.from, st(&s1, 0));
    assert_eq!(tri.middle, vec![st(&p2, 0)]);
    let tri = c.exchange_forward(&st(&s2, 0), &tbar).unwrap();
    assert_eq!(tri.to, st(&s2, 1));
    assert!(tri.middle.is_empty());
}

#[test]
fn window_on_a2() {
    let c = a2();
    let p2 = c.tidy(c.projective(1));
    let tbar = SiltingCandidate::new(&c, vec![st(&p2, 0)]).unwrap();
    let w = c.silting_complements_in_window(&tbar, -2, 3).unwrap();
    let dims: Vec<(i32, Vec<usize>, i32)> = w.iter().map(|x| (x.position, x.stalk.module.dim().to_vec(), x.stalk.shift)).collect();
    assert_eq!(
        dims,
        vec![
            (-2, vec![1, 0], -2),
            (-1, vec![1, 0], -1),
            (0, vec![1, 0], 0),
            (1, vec![0, 1], 0),
            (2, vec![0, 1], 1),
            (3, vec![0, 1], 2),
            (4, vec![0, 1], 3),
        ]
    );
}
