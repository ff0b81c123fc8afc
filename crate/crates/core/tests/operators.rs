use finite_w::laurent::{Frame, LaurentMatrix};
use finite_w::lax::{enumerate_paths, pathsum_l, LaxOperators, PathKind};
use finite_w::linalg::QMatrix;
use finite_w::scalar::q;
use finite_w::uea::{Uea, UeaElement};
use finite_w::{Half, Kind, Partition, Realization};

fn uea(kind: Kind, parts: &[usize]) -> Uea {
    Uea::new(Realization::new(Partition::new(parts.to_vec()).unwrap(), kind).unwrap())
}

#[test]
fn shift_vanishes_without_nilpotent() {
    for (k, p) in [(Kind::Gl, vec![1, 1, 1]), (Kind::Orthogonal, vec![1, 1, 1]), (Kind::Symplectic, vec![1, 1])] {
        let u = uea(k, &p);
        let f = Frame::full(&u);
        assert_eq!(f.d_matrix(), &QMatrix::zeros(p.len(), p.len()), "{}", u.realization().id());
    }
}

#[test]
fn lax_without_nilpotent_is_y() {
    // one column: L(z) = 1 + z^{-1} Σ u_i U^i, and for gl the (c, d)
    // coefficient is e_{d,c}
    let u = uea(Kind::Gl, &[1, 1, 1]);
    let r = u.realization();
    let ops = LaxOperators::new(Frame::full(&u), -6);
    for c in 1..=3 {
        for d in 1..=3 {
            let want = u.reduce(&UeaElement::generator(r.index_of(d, c).unwrap()));
            assert_eq!(ops.l_coeff(c, d, Half::int(1)).unwrap(), want);
            let one = if c == d { q(1) } else { q(0) };
            assert_eq!(ops.l_coeff(c, d, Half::ZERO).unwrap(), u.reduce(&UeaElement::scalar(one)));
            assert!(ops.l_coeff(c, d, Half::int(2)).unwrap().is_zero());
        }
    }
}

#[test]
fn empty_path_sets_give_zero() {
    // an even grading has no paths of half-integer length
    let u = uea(Kind::Orthogonal, &[3, 1]);
    let f = Frame::full(&u);
    let ops = LaxOperators::new(Frame::full(&u), -16);
    for c in f.top_boxes() {
        for d in f.bottom_boxes() {
            for p in [1, 3, 7, 15] {
                let p = Half(p);
                assert!(enumerate_paths(&f, PathKind::L, c, d, p).is_empty());
                assert!(pathsum_l(&f, c, d, p).unwrap().is_zero());
                assert!(ops.l_coeff(c, d, p).unwrap().is_zero());
            }
        }
    }
    // a single box only has the one-step path
    let u = uea(Kind::Gl, &[1]);
    let f = Frame::full(&u);
    assert_eq!(enumerate_paths(&f, PathKind::L, 1, 1, Half::int(1)).len(), 1);
    for p in 2..6 {
        assert!(enumerate_paths(&f, PathKind::L, 1, 1, Half::int(p)).is_empty());
        assert!(pathsum_l(&f, 1, 1, Half::int(p)).unwrap().is_zero());
    }
}

#[test]
fn interior_inverse_leads_with_alpha_inverse() {
    // Ȳ only has negative powers, so (α + Ȳ)^{-1} = α^{-1} + O(z^{-1/2})
    let u = uea(Kind::Gl, &[3]);
    let f = Frame::full(&u);
    let inv = f.invert_interior(-8);
    assert!(inv.truncated(0).sub(&f.alpha_inverse()).is_zero());
    let back = f.alpha().add(&f.ybar()).mul(&inv, &u, Some(-8));
    assert!(back.agrees_above(&LaurentMatrix::identity(f.upper()), -8));
}

#[test]
fn ybar_degrees() {
    for (k, p) in [(Kind::Orthogonal, vec![3, 1]), (Kind::Symplectic, vec![4, 2])] {
        let u = uea(k, &p);
        let f = Frame::full(&u);
        for (a, b, poly) in f.ybar().entries() {
            let want = (f.col(a) - f.col(b) - Half::int(1)).doubled();
            assert!(poly.terms().all(|(e, _)| e == want), "{a} {b}");
        }
    }
}
