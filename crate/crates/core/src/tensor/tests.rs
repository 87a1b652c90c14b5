use super::*;
use crate::coeff::Scalar;

fn sig(s: &str) -> Signature {
    Signature::from_code(s).unwrap()
}

fn e_vec() -> TMap {
    TMap::from_rows(sig("UU"), sig(""), alloc::vec![Scalar::zero(), Scalar::one(), -Scalar::q(), Scalar::zero()])
}

fn sample(cod: &str, dom: &str, seed: i64) -> TMap {
    TMap::from_fn(sig(cod), sig(dom), |i, j| {
        let k = (i as i64 * 7 + j as i64 * 3 + seed) % 5 - 2;
        &Scalar::from_int(k) * &Scalar::q_half_pow((i + j) as i32 % 3)
    })
}

#[test]
fn identity_placement_is_identity() {
    let id = TMap::<Scalar>::identity(sig("B"));
    let amb = sig("UBU");
    assert_eq!(id.place(&[1], &amb).unwrap(), TMap::identity(amb));
}

#[test]
fn vector_insertion_matches_kronecker() {
    let e = e_vec();
    let placed = e.place_at(0, &sig("U")).unwrap();
    assert_eq!(placed.cod(), &sig("UUU"));
    assert_eq!(placed, e.kron(&TMap::identity(sig("U"))));
    // Brute force: (E ⊗ id)(e_c) has entry E_{ab} at index (a, b, c).
    for c in 0..2 {
        for ab in 0..4 {
            assert_eq!(placed.get(ab * 2 + c, c), e.get(ab, 0));
            assert!(placed.get(ab * 2 + (1 - c), c).is_zero());
        }
    }
}

#[test]
fn nonadjacent_placement_matches_conjugated_kron() {
    let f = sample("BU", "UB", 1);
    let amb = sig("UUB");
    let placed = f.place(&[0, 2], &amb).unwrap();
    assert_eq!(placed.cod(), &sig("BUU"));
    // Move leg 2 next to leg 0, act, move back.
    let p_in = TMap::<Scalar>::permutation(&amb, &[0, 2, 1]).unwrap();
    let mid = f.kron(&TMap::identity(sig("U")));
    let p_out = TMap::<Scalar>::permutation(mid.cod(), &[0, 2, 1]).unwrap();
    let expect = TMap::chain(&[&p_out, &mid, &p_in]).unwrap();
    assert_eq!(placed, expect);
}

#[test]
fn placement_checks_types_and_arity() {
    let f = sample("BU", "UB", 2);
    assert_eq!(f.place(&[0, 1], &sig("UUB")), Err(TensorError::TypeMismatch { position: 1 }));
    assert!(matches!(f.place(&[0], &sig("UB")), Err(TensorError::ArityMismatch(_))));
    assert!(matches!(f.compose(&f), Err(TensorError::SignatureMismatch { .. })));
}

#[test]
fn placement_respects_composition() {
    let f = sample("UB", "BU", 3);
    let g = sample("BU", "UB", 4);
    let amb = sig("UBU");
    let fg = f.compose(&g).unwrap();
    let lhs = fg.place(&[0, 1], &amb).unwrap();
    let gp = g.place(&[0, 1], &amb).unwrap();
    let rhs = f.place(&[0, 1], gp.cod()).unwrap().compose(&gp).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn contraction_of_e_with_its_functional() {
    let ep = TMap::from_rows(sig(""), sig("UU"), alloc::vec![
        Scalar::zero(),
        -Scalar::q().inv().unwrap(),
        Scalar::one(),
        Scalar::zero()
    ]);
    let s = ep.compose(&e_vec()).unwrap();
    assert_eq!(*s.get(0, 0), -(&Scalar::q() + &Scalar::q().inv().unwrap()));
}

#[test]
fn conjugations_are_involutions() {
    let f = sample("UB", "BU", 5);
    assert_eq!(f.bar_conjugate().bar_conjugate(), f);
    assert_eq!(f.bar_conjugate().dom(), &sig("UB"));
    let g = sample("UU", "UU", 6);
    let tg = g.tau_conjugate().unwrap();
    assert_eq!(tg.dom(), &sig("BB"));
    assert_eq!(tg.tau_conjugate().unwrap(), g);
    assert!(sample("U", "U", 0).tau_conjugate().is_err());
}

#[test]
fn flip_reverses_tensor_factors() {
    let tau = TMap::<Scalar>::flip(Leg::U, Leg::B);
    assert_eq!(tau.cod(), &sig("BU"));
    let a = sample("U", "U", 1);
    let b = sample("B", "B", 2);
    let lhs = tau.compose(&a.kron(&b)).unwrap();
    let rhs = b.kron(&a).compose(&tau).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn elimination_basics() {
    let id = TMap::<Scalar>::identity(sig("UU"));
    assert_eq!(id.annihilator_basis().len(), 4);
    let e = e_vec();
    let ep = TMap::from_rows(sig(""), sig("UU"), alloc::vec![
        Scalar::zero(),
        -Scalar::q().inv().unwrap(),
        Scalar::one(),
        Scalar::zero()
    ]);
    let p = e.compose(&ep).unwrap();
    let ann = p.annihilator_basis();
    assert_eq!(ann.len(), 1);
    assert!(same_span(&[ann[0].entries().to_vec()], &[ep.entries().to_vec()]));
    let ker = p.kernel_basis();
    assert_eq!(ker.len(), 3);
    for v in &ker {
        assert!(p.compose(v).unwrap().is_zero());
    }
    assert!(in_span(&[e.entries().to_vec()], e.scale(&Scalar::t()).entries()));
}
