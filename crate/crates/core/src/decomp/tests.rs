use super::*;
use crate::catalog;

fn names(a: &FiniteAlgebra, classes: &[Vec<usize>]) -> Vec<Vec<String>> {
    classes
        .iter()
        .map(|c| c.iter().map(|&x| a.element_name(x).to_string()).collect())
        .collect()
}

#[test]
fn lattices_give_left_zero_bands() {
    for a in [catalog::b2(), catalog::k3(), catalog::dm4()] {
        let b = band_of(&a).unwrap();
        assert!(b.is_left_zero());
        let g = greens(&b);
        assert_eq!(g.d_classes.len(), 1);
        assert!(g.leq_d.iter().flatten().all(|&x| x));
    }
}

#[test]
fn semilattice_band_is_the_join() {
    let is2 = catalog::is2();
    let b = band_of(&is2).unwrap();
    assert!((0..2).all(|x| (0..2).all(|y| b.dot(x, y) == is2.join(x, y))));
    let is4 = catalog::is4();
    let b = band_of(&is4).unwrap();
    assert!(b.is_commutative());
    let g = greens(&b);
    assert_eq!(g.d_classes.len(), 4);
    for x in 0..4 {
        for y in 0..4 {
            // ab = a means a is above b in the join order
            assert_eq!(g.leq_l[x][y], is4.join_leq(y, x));
            assert_eq!(g.leq_l[x][y], g.leq_r[x][y]);
        }
    }
}

#[test]
fn a5_classes() {
    let a5 = catalog::a5();
    let g = greens(&band_of(&a5).unwrap());
    assert_eq!(names(&a5, &g.d_classes), [vec!["a", "b"], vec!["¬a", "¬b"], vec!["u"]]);
}

#[test]
fn dagger_has_two_classes() {
    let d = catalog::entry(8);
    let g = greens(&band_of(d).unwrap());
    assert_eq!(g.d_classes, vec![vec![0, 1, 2, 3], vec![4]]);
}

#[test]
fn green_relations_are_preorders() {
    for e in catalog::catalog() {
        let b = band_of(&e.algebra).unwrap();
        let g = greens(&b);
        let n = b.size();
        for rel in [&g.leq_l, &g.leq_r, &g.leq_d, &g.leq_h] {
            for x in 0..n {
                assert!(rel[x][x]);
                for y in 0..n {
                    for z in 0..n {
                        assert!(!(rel[x][y] && rel[y][z]) || rel[x][z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                assert_eq!(g.leq_h[x][y], g.leq_l[x][y] && g.leq_r[x][y]);
                if x != y {
                    assert!(!(g.leq_h[x][y] && g.leq_h[y][x]));
                }
            }
        }
        assert!(g.d_congruence(n).is_compatible(&b.as_algebra()));
        assert!(d_quotient_is_semilattice(&b, &g));
    }
}

#[test]
fn catalog_is_ailnb() {
    for e in catalog::catalog() {
        assert_eq!(check_ailnb(&e.algebra), Ok(()), "{}", e.name);
    }
    assert_eq!(check_ailnb(&catalog::u()), Ok(()));
    let b = band_of(&catalog::is3()).unwrap();
    assert!(b.is_commutative() && b.is_left_normal());
}

#[test]
fn corrupted_negation_is_caught() {
    let dm4 = catalog::dm4();
    // ¬⊤ = t, ¬f = ⊤ is not involutive
    let bad = dm4.with_neg(vec![3, 0, 2, 1]).unwrap();
    assert!(check_ailnb(&bad).is_err());
    assert!(matches!(check_ailnb(&dm4.reduct()), Err(AilnbViolation::NoNegation)));
    let a5 = catalog::a5();
    // swapping a and u: ¬(a·¬a) = a but ¬a·a = u
    let bad = a5.with_neg(vec![4, 1, 2, 3, 0]).unwrap();
    assert!(matches!(check_ailnb(&bad), Err(AilnbViolation::AInvolution(0, 2))));
}

#[test]
fn band_validation() {
    assert_eq!(Band::new(2, vec![1, 0, 0, 1], None), Err(BandError::NotIdempotent(0)));
    assert_eq!(Band::new(2, vec![0, 0, 0], None), Err(BandError::Shape));
    // rock-paper-scissors: idempotent and commutative, not associative
    let rps = vec![0, 1, 0, 1, 1, 2, 0, 2, 2];
    assert!(matches!(Band::new(3, rps, None), Err(BandError::NotAssociative(..))));
}

#[test]
fn decompose_examples() {
    let sys = decompose(&catalog::a5()).unwrap();
    assert!(sys.index.is_isomorphic(&catalog::is3()).is_some());
    assert_eq!(sys.fibre_sizes(), vec![2, 2, 1]);

    let sys = decompose(&catalog::b2()).unwrap();
    assert!(sys.index.is_isomorphic(&catalog::is1()).is_some());
    assert_eq!(sys.fibre_sizes(), vec![2]);

    let sys = decompose(catalog::entry(8)).unwrap();
    assert!(sys.index.is_isomorphic(&catalog::is2()).is_some());
    assert_eq!(sys.fibre_sizes(), vec![4, 1]);
    assert!(sys.index.element_name(0).starts_with('['));
}

#[test]
fn decompose_round_trips_on_the_catalog() {
    for e in catalog::catalog() {
        let sys = decompose(&e.algebra).unwrap();
        let back = sys.dpl_sum().unwrap();
        assert!(back.is_isomorphic(&e.algebra).is_some(), "{}", e.name);
    }
    let u = catalog::u();
    assert!(decompose(&u).unwrap().dpl_sum().unwrap().is_isomorphic(&u).is_some());
}

#[test]
fn decompose_rejects_non_dmbl() {
    assert!(matches!(decompose(&catalog::d2()), Err(DecompError::NotDmbl(_))));
}

#[test]
fn index_subvarieties() {
    use IndexVariety::*;
    assert_eq!(index_subvariety(catalog::entry(8)).unwrap(), Risl);
    assert_eq!(index_subvariety(&catalog::a5()).unwrap(), Bisl);
    assert_eq!(index_subvariety(&catalog::u()).unwrap(), Isl);
    assert_eq!(index_subvariety(&catalog::dm4()).unwrap(), T);
    let is2 = catalog::is2();
    let is3 = catalog::is3();
    assert_eq!(index_subvariety(&is2.product(&is3).unwrap()).unwrap(), Rbisl);
    for e in catalog::catalog() {
        let idx = decompose(&e.algebra).unwrap().index;
        assert_eq!(IndexVariety::of_index(&idx), index_subvariety(&e.algebra).unwrap(), "{}", e.name);
    }
}

#[test]
fn index_variety_order() {
    use IndexVariety::*;
    assert!(T.leq(Isl) && Risl.leq(Rbisl) && Bisl.leq(Isl));
    assert!(!Risl.leq(Bisl) && !Bisl.leq(Risl) && !Isl.leq(Rbisl));
    for v in IndexVariety::ALL {
        assert!(v.leq(v) && T.leq(v) && v.leq(Isl));
    }
}

#[test]
fn green_json_has_matrices() {
    let g = greens(&band_of(&catalog::a5()).unwrap());
    let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
    assert_eq!(v["d_classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["leq_l"].as_array().unwrap().len(), 5);
}
