//! Homomorphism, embedding and isomorphism search.
//!
//! A homomorphism is fixed by the images of a generating set, so the search
//! ranges over image tuples for a minimal generating set of the source and
//! closes each candidate graph inside `A × B`; a candidate survives when the
//! closure stays functional.

use super::FiniteAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Any,
    Injective,
    Bijective,
}

/// A structure-preserving map, `map[a]` being the image of `a`.
pub type Homomorphism = Vec<usize>;

/// Closes the partial graph `{(gens[i], images[i])}` under the operations.
/// Returns the full map when the closure is a function defined on all of
/// `a`; `respect_neg` includes negation among the operations.
pub(crate) fn extend_from_generators(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    gens: &[usize],
    images: &[usize],
    respect_neg: bool,
) -> Option<Vec<usize>> {
    let (map, defined) = close_graph(a, b, gens, images, respect_neg)?;
    (defined == a.size()).then_some(map)
}

/// The closure of `{(gens[i], images[i])}` in `A × B` when it is the graph of
/// a function on the subalgebra generated by `gens`. Undefined points map to
/// `usize::MAX`; the second component counts the defined points.
pub fn close_graph(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    gens: &[usize],
    images: &[usize],
    respect_neg: bool,
) -> Option<(Vec<usize>, usize)> {
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut done: Vec<usize> = Vec::with_capacity(n);
    let assign = |x: usize, y: usize, map: &mut Vec<usize>, done: &mut Vec<usize>| -> bool {
        if map[x] == usize::MAX {
            map[x] = y;
            done.push(x);
            true
        } else {
            map[x] == y
        }
    };
    for (&g, &h) in gens.iter().zip(images) {
        if !assign(g, h, &mut map, &mut done) {
            return None;
        }
    }
    let mut next = 0;
    while next < done.len() {
        let x = done[next];
        let fx = map[x];
        if respect_neg {
            if !assign(a.neg(x), b.neg(fx), &mut map, &mut done) {
                return None;
            }
        }
        for j in 0..=next {
            let y = done[j];
            let fy = map[y];
            let pairs = [
                (a.meet(x, y), b.meet(fx, fy)),
                (a.meet(y, x), b.meet(fy, fx)),
                (a.join(x, y), b.join(fx, fy)),
                (a.join(y, x), b.join(fy, fx)),
            ];
            for (u, v) in pairs {
                if !assign(u, v, &mut map, &mut done) {
                    return None;
                }
            }
        }
        next += 1;
    }
    let defined = done.len();
    Some((map, defined))
}

fn kind_ok(map: &[usize], target: usize, kind: MapKind) -> bool {
    match kind {
        MapKind::Any => true,
        MapKind::Injective | MapKind::Bijective => {
            if kind == MapKind::Bijective && map.len() != target {
                return false;
            }
            let mut seen = vec![false; target];
            map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        }
    }
}

impl FiniteAlgebra {
    /// Whether `f` preserves meet, join and (if `respect_neg`) negation.
    pub fn is_homomorphism(&self, b: &FiniteAlgebra, f: &[usize], respect_neg: bool) -> bool {
        let n = self.size();
        if f.len() != n || f.iter().any(|&y| y >= b.size()) {
            return false;
        }
        let neg_ok = !respect_neg || (0..n).all(|x| f[self.neg(x)] == b.neg(f[x]));
        neg_ok
            && (0..n).all(|x| {
                (0..n).all(|y| f[self.meet(x, y)] == b.meet(f[x], f[y]) && f[self.join(x, y)] == b.join(f[x], f[y]))
            })
    }

    /// Calls `visit` on each map of the requested kind in lexicographic
    /// order of generator images; stops early when `visit` returns false.
    fn for_each_map(
        &self,
        b: &FiniteAlgebra,
        kind: MapKind,
        respect_neg: bool,
        mut visit: impl FnMut(Vec<usize>) -> bool,
    ) {
        let respect_neg = respect_neg && self.has_neg() && b.has_neg();
        if kind == MapKind::Bijective && self.size() != b.size() {
            return;
        }
        if kind != MapKind::Any && self.size() > b.size() {
            return;
        }
        let gens = self.minimal_generating_set();
        let m = b.size();
        let mut images = vec![0usize; gens.len()];
        loop {
            if let Some(map) = extend_from_generators(self, b, &gens, &images, respect_neg) {
                if kind_ok(&map, m, kind) && !visit(map) {
                    return;
                }
            }
            // odometer, last generator fastest
            let mut i = images.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                images[i] += 1;
                if images[i] < m {
                    break;
                }
                images[i] = 0;
            }
        }
    }

    /// All maps of the requested kind.
    pub fn homomorphisms_to(&self, b: &FiniteAlgebra, kind: MapKind, respect_neg: bool) -> Vec<Homomorphism> {
        let mut out = Vec::new();
        self.for_each_map(b, kind, respect_neg, |m| {
            out.push(m);
            true
        });
        out.sort();
        out
    }

    /// Some map of the requested kind, if any exists.
    pub fn find_map_to(&self, b: &FiniteAlgebra, kind: MapKind, respect_neg: bool) -> Option<Homomorphism> {
        let mut found = None;
        self.for_each_map(b, kind, respect_neg, |m| {
            found = Some(m);
            false
        });
        found
    }

    /// An isomorphism onto `b` (negation included when both have one).
    pub fn is_isomorphic(&self, b: &FiniteAlgebra) -> Option<Homomorphism> {
        if self.size() != b.size() || self.has_neg() != b.has_neg() {
            return None;
        }
        self.find_map_to(b, MapKind::Bijective, true)
    }

    /// An embedding into `b`.
    pub fn embeds_into(&self, b: &FiniteAlgebra) -> Option<Homomorphism> {
        if self.has_neg() != b.has_neg() {
            return None;
        }
        self.find_map_to(b, MapKind::Injective, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            "C",
            (0..n).map(|i| i.to_string()).collect(),
            usize::min,
            usize::max,
            None,
        )
        .unwrap()
    }

    #[test]
    fn dual_chain_is_isomorphic_by_reversal() {
        let c = chain(3);
        assert_eq!(c.dual().is_isomorphic(&c), Some(vec![2, 1, 0]));
        assert_eq!(chain(2).is_isomorphic(&chain(1)), None);
    }

    #[test]
    fn chain_homomorphism_counts() {
        // Lattice homomorphisms C2 -> C3 are the monotone maps: 6.
        let homs = chain(2).homomorphisms_to(&chain(3), MapKind::Any, false);
        assert_eq!(homs.len(), 6);
        for h in &homs {
            assert!(chain(2).is_homomorphism(&chain(3), h, false));
        }
        assert_eq!(chain(2).homomorphisms_to(&chain(3), MapKind::Injective, false).len(), 3);
        assert!(chain(3).embeds_into(&chain(2)).is_none());
    }

    #[test]
    fn square_embeds_nowhere_in_a_chain() {
        let sq = chain(2).product(&chain(2)).unwrap();
        assert!(sq.embeds_into(&chain(4)).is_none());
        assert!(chain(3).embeds_into(&sq).is_some());
    }
}
