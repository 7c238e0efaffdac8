//! Random valid systems for property tests.
//!
//! The index is one of IS₁–IS₄ and each fibre one of D₁, D₂, D₂², with the
//! same shape on `i` and `¬i`. Dualisers are drawn among the isomorphisms
//! onto the dual fibre, involutive on fixpoints of the index negation.
//! Transitions are drawn uniformly from the set of all valid assignments,
//! which is enumerated by backtracking over the (small) homomorphism sets.

use super::InvSemilatticeSystem;
use crate::catalog;
use crate::finalg::{FiniteAlgebra, MapKind};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeMap;

/// The fibre shapes used by the generator.
pub fn fibre_shapes() -> Vec<FiniteAlgebra> {
    let d2 = catalog::d2();
    vec![catalog::d1(), d2.clone(), d2.product(&d2).unwrap().with_name("D2xD2")]
}

fn inverse(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (a, &b) in map.iter().enumerate() {
        inv[b] = a;
    }
    inv
}

/// A random valid system over one of IS₁–IS₄.
pub fn random_system<R: Rng + ?Sized>(rng: &mut R) -> InvSemilatticeSystem {
    let indices = catalog::involutive_semilattices();
    let index = indices.choose(rng).unwrap().clone();
    random_system_over(rng, &index)
}

/// A random valid system over the given involutive semilattice. Fibre
/// choices that admit no equivariant transitions are redrawn.
pub fn random_system_over<R: Rng + ?Sized>(rng: &mut R, index: &FiniteAlgebra) -> InvSemilatticeSystem {
    let shapes = fibre_shapes();
    loop {
        let (fibres, dualisers) = random_fibres(rng, index, &shapes);
        let mut solutions = transition_assignments(index, &fibres, &dualisers);
        if solutions.is_empty() {
            continue;
        }
        let pick = rng.gen_range(0..solutions.len());
        let transitions = solutions.swap_remove(pick);
        return InvSemilatticeSystem::new(index.clone(), fibres, transitions, dualisers);
    }
}

fn random_fibres<R: Rng + ?Sized>(
    rng: &mut R,
    index: &FiniteAlgebra,
    shapes: &[FiniteAlgebra],
) -> (Vec<FiniteAlgebra>, Vec<Vec<usize>>) {
    let m = index.size();
    let mut fibres: Vec<Option<FiniteAlgebra>> = vec![None; m];
    let mut dualisers: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        if fibres[i].is_some() {
            continue;
        }
        let ni = index.neg(i);
        let f = shapes.choose(rng).unwrap().clone();
        let dual = f.dual();
        let mut isos = f.homomorphisms_to(&dual, MapKind::Bijective, false);
        if ni == i {
            isos.retain(|n| n.iter().enumerate().all(|(a, &b)| n[b] == a));
        }
        let n = isos.choose(rng).expect("self-dual fibre shapes").clone();
        if ni != i {
            dualisers[ni] = inverse(&n);
            fibres[ni] = Some(f.clone());
        }
        dualisers[i] = n;
        fibres[i] = Some(f);
    }
    (fibres.into_iter().map(Option::unwrap).collect(), dualisers)
}

/// Every functorial, equivariant choice of transitions for the given
/// fibres and dualisers.
pub fn transition_assignments(
    index: &FiniteAlgebra,
    fibres: &[FiniteAlgebra],
    dualisers: &[Vec<usize>],
) -> Vec<BTreeMap<(usize, usize), Vec<usize>>> {
    let m = index.size();
    let leq = |i: usize, j: usize| index.join(i, j) == j;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && leq(i, j))
        .collect();
    let homs: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .map(|&(i, j)| fibres[i].reduct().homomorphisms_to(&fibres[j].reduct(), MapKind::Any, false))
        .collect();
    let mut current: BTreeMap<(usize, usize), Vec<usize>> =
        (0..m).map(|i| ((i, i), (0..fibres[i].size()).collect())).collect();
    let mut out = Vec::new();

    // Constraints are checked once every map they mention is assigned.
    let consistent = |cur: &BTreeMap<(usize, usize), Vec<usize>>| -> bool {
        for (&(i, j), p) in cur {
            for k in 0..m {
                if let (Some(q), Some(r)) = (cur.get(&(j, k)), cur.get(&(i, k))) {
                    if p.iter().zip(r).any(|(&a, &c)| q[a] != c) {
                        return false;
                    }
                }
            }
            let (ni, nj) = (index.neg(i), index.neg(j));
            if let Some(q) = cur.get(&(ni, nj)) {
                let (di, dj) = (&dualisers[i], &dualisers[j]);
                if (0..p.len()).any(|a| dj[p[a]] != q[di[a]]) {
                    return false;
                }
            }
        }
        true
    };

    fn go(
        depth: usize,
        pairs: &[(usize, usize)],
        homs: &[Vec<Vec<usize>>],
        current: &mut BTreeMap<(usize, usize), Vec<usize>>,
        consistent: &dyn Fn(&BTreeMap<(usize, usize), Vec<usize>>) -> bool,
        out: &mut Vec<BTreeMap<(usize, usize), Vec<usize>>>,
    ) {
        if depth == pairs.len() {
            out.push(current.clone());
            return;
        }
        for h in &homs[depth] {
            current.insert(pairs[depth], h.clone());
            if consistent(current) {
                go(depth + 1, pairs, homs, current, consistent, out);
            }
            current.remove(&pairs[depth]);
        }
    }

    go(0, &pairs, &homs, &mut current, &consistent, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_systems_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let s = random_system(&mut rng);
            assert_eq!(s.violations(), vec![]);
        }
    }

    #[test]
    fn every_index_is_reached() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let sizes: std::collections::BTreeSet<usize> =
            (0..60).map(|_| random_system(&mut rng).index.size()).collect();
        assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }
}
