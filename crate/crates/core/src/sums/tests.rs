use super::*;
use crate::catalog;
use crate::finalg::{AlgebraClass, MapKind};

fn trivial_system(index: FiniteAlgebra) -> InvSemilatticeSystem {
    let m = index.size();
    let mut transitions = BTreeMap::new();
    for i in 0..m {
        for j in 0..m {
            if index.join(i, j) == j {
                transitions.insert((i, j), vec![0]);
            }
        }
    }
    InvSemilatticeSystem::new(index, vec![catalog::d1(); m], transitions, vec![vec![0]; m])
}

#[test]
fn a5_system_is_valid() {
    assert_eq!(catalog::a5_system().violations(), vec![]);
}

#[test]
fn non_homomorphic_dualiser_is_reported() {
    let mut sys = catalog::a5_system();
    // identity on D2 is not an isomorphism onto the dual
    sys.dualisers[0] = vec![0, 1];
    let v = sys.violations();
    assert!(
        v.iter().any(|v| matches!(v, Violation::DualiserNotDualIsomorphism { i } if i == "i")),
        "{v:?}"
    );
}

#[test]
fn broken_functoriality_names_the_triple() {
    // chain i < j < k with fibres D2, D2, D2; p_ik disagrees with p_jk p_ij
    let index = FiniteAlgebra::from_fns(
        "C3",
        vec!["i".into(), "j".into(), "k".into()],
        usize::max,
        usize::max,
        Some(&|a| a),
    )
    .unwrap();
    let d2 = catalog::d2();
    let id = vec![0, 1];
    let transitions = BTreeMap::from([((0, 1), id.clone()), ((1, 2), id.clone()), ((0, 2), vec![0, 0])]);
    let swap = vec![1, 0];
    let sys = InvSemilatticeSystem::new(index, vec![d2.clone(), d2.clone(), d2], transitions, vec![swap; 3]);
    let v = sys.violations();
    assert!(
        v.iter().any(|v| matches!(v, Violation::NotFunctorial { i, j, k, .. } if (i.as_str(), j.as_str(), k.as_str()) == ("i", "j", "k"))),
        "{v:?}"
    );
    assert!(matches!(sys.dpl_sum(), Err(SumError::Invalid(_))));
}

#[test]
fn non_inverse_dualisers_are_reported() {
    let d2 = catalog::d2();
    let square = d2.product(&d2).unwrap();
    // (a,b) -> (1-b,1-a) and (a,b) -> (1-a,1-b) are both dual isomorphisms
    let sys = InvSemilatticeSystem::new(
        catalog::is3(),
        vec![square.clone(), square, catalog::d1()],
        BTreeMap::from([((0, 2), vec![0; 4]), ((1, 2), vec![0; 4])]),
        vec![vec![3, 1, 2, 0], vec![3, 2, 1, 0], vec![0]],
    );
    let v = sys.violations();
    assert!(!v.is_empty());
    assert!(v.iter().all(|v| matches!(v, Violation::DualisersNotInverse { .. })), "{v:?}");
}

#[test]
fn trivial_fibres_give_the_index() {
    for index in catalog::involutive_semilattices() {
        let sum = trivial_system(index.clone()).dpl_sum().unwrap();
        assert!(sum.is_isomorphic(&index).is_some(), "{}", index.name());
    }
}

#[test]
fn u_has_nine_elements() {
    let u = catalog::u();
    assert_eq!(u.size(), 9);
    assert!(u.is_class(AlgebraClass::DeMorganBisemilattice));
    assert!(catalog::dm4().embeds_into(&u).is_some());
}

#[test]
fn d2_over_is1_is_b2() {
    let d2 = catalog::d2();
    let isos = d2.homomorphisms_to(&d2.dual(), MapKind::Bijective, false);
    assert_eq!(isos, vec![vec![1, 0]]);
    let sys = InvSemilatticeSystem::new(catalog::is1(), vec![d2], BTreeMap::new(), vec![vec![1, 0]]);
    let sum = sys.dpl_sum().unwrap();
    assert!(sum.is_isomorphic(&catalog::b2()).is_some());
}

#[test]
fn plonka_chain_gives_b2_dagger() {
    let b2 = catalog::b2();
    let top = catalog::d1().with_neg(vec![0]).unwrap();
    let sys = SemilatticeSystem {
        index: catalog::is2(),
        fibres: vec![b2.clone(), top],
        transitions: BTreeMap::from([((0, 1), vec![0, 0])]),
    };
    let sum = plonka_sum(&sys).unwrap();
    assert!(sum.is_isomorphic(&catalog::dagger(&b2).unwrap()).is_some());
}

#[test]
fn plonka_without_negation_is_neg_free() {
    let sys = SemilatticeSystem {
        index: catalog::is2(),
        fibres: vec![catalog::d1(), catalog::d1()],
        transitions: BTreeMap::from([((0, 1), vec![0])]),
    };
    let sum = plonka_sum(&sys).unwrap();
    assert!(!sum.has_neg());
    assert!(sum.is_isomorphic(&catalog::is2().reduct()).is_some());
}

#[test]
fn bilateralisations() {
    let d2 = catalog::d2();
    assert!(bilateralise(&d2).is_isomorphic(&catalog::dm4()).is_some());
    assert!(bilateralise(&catalog::d1()).is_isomorphic(&catalog::is1()).is_some());
    assert_eq!(bilateralise(&d2.product(&d2).unwrap()).size(), 16);
    assert!(bilateralise(&catalog::is2().reduct()).is_class(AlgebraClass::DeMorganBisemilattice));
}

#[test]
fn fixpoint_fibre_is_a_subalgebra() {
    let sys = catalog::u_system();
    let sum = sys.dpl_sum().unwrap();
    let offsets = sys.offsets();
    // k is the only fixpoint
    let k = 3;
    let elems: Vec<usize> = (0..sys.fibres[k].size()).map(|a| offsets[k] + a).collect();
    let sub = sum.subalgebra_on(&elems).expect("closed");
    assert!(sub.algebra.is_class(AlgebraClass::DeMorganBisemilattice));

    let a5 = catalog::a5_system();
    let sum = a5.dpl_sum().unwrap();
    let top = a5.offsets()[2];
    assert!(sum.subalgebra_on(&[top]).is_some());
}

#[test]
fn json_round_trip() {
    for sys in [catalog::a5_system(), catalog::u_system(), catalog::dagger_system(&catalog::k3()).unwrap()] {
        let text = sys.to_json();
        let back = InvSemilatticeSystem::from_json(&text).unwrap();
        assert_eq!(back, sys);
        assert_eq!(back.to_json(), text);
    }
}

#[test]
fn json_errors() {
    let mut j = SystemJson::from(&catalog::a5_system());
    j.transitions.insert("i-j".into(), vec![0, 0]);
    assert!(matches!(
        InvSemilatticeSystem::try_from(j.clone()),
        Err(SystemJsonError::BadTransitionKey(_))
    ));
    j.transitions.remove("i-j");
    j.fibres.remove("j");
    assert!(matches!(InvSemilatticeSystem::try_from(j), Err(SystemJsonError::MissingFibre(_))));
    assert!(matches!(InvSemilatticeSystem::from_json("{"), Err(SystemJsonError::Json(_))));
}

#[test]
fn sums_are_de_morgan_bisemilattices() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let sys = random::random_system(&mut rng);
        let sum = sys.dpl_sum().unwrap();
        assert_eq!(sum.class_violation(AlgebraClass::DeMorganBisemilattice), None);
    }
}
