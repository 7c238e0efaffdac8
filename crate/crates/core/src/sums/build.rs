use super::{InvSemilatticeSystem, SumError, Violation, SUM_SIZE_LIMIT};
use crate::finalg::FiniteAlgebra;
use std::collections::BTreeMap;

/// Tabulates the sum of a validated system.
pub(super) fn sum_of(sys: &InvSemilatticeSystem) -> Result<FiniteAlgebra, SumError> {
    let offsets = sys.offsets();
    let total: usize = sys.fibre_sizes().iter().sum();
    if total > SUM_SIZE_LIMIT {
        return Err(SumError::TooLarge(total));
    }
    // `owner[x]` = (fibre, local index)
    let owner: Vec<(usize, usize)> = sys
        .fibres
        .iter()
        .enumerate()
        .flat_map(|(i, f)| (0..f.size()).map(move |a| (i, a)))
        .collect();
    let names = owner
        .iter()
        .map(|&(i, a)| format!("({},{})", sys.index.element_name(i), sys.fibres[i].element_name(a)))
        .collect();
    let binary = |x: usize, y: usize, join: bool| {
        let ((i, a), (j, b)) = (owner[x], owner[y]);
        let k = sys.index.join(i, j);
        let (pa, pb) = (sys.transition(i, k)[a], sys.transition(j, k)[b]);
        let f = &sys.fibres[k];
        offsets[k] + if join { f.join(pa, pb) } else { f.meet(pa, pb) }
    };
    let neg = |x: usize| {
        let (i, a) = owner[x];
        offsets[sys.index_neg(i)] + sys.dualisers[i][a]
    };
    Ok(FiniteAlgebra::from_fns(
        format!("DPl({})", sys.index.name()),
        names,
        |x, y| binary(x, y, false),
        |x, y| binary(x, y, true),
        Some(&neg),
    )
    .expect("sum tables are valid"))
}

/// A semilattice direct system: no index negation, no dualisers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilatticeSystem {
    /// Only the join of the index is used.
    pub index: FiniteAlgebra,
    pub fibres: Vec<FiniteAlgebra>,
    /// `p_ij` for `i ≤ j`; missing identities are filled in.
    pub transitions: BTreeMap<(usize, usize), Vec<usize>>,
}

/// Płonka sum of a semilattice direct system.
///
/// When every fibre carries a negation, the index gets the identity
/// negation and each fibre's own negation becomes its dualiser, so the
/// result is the De Morgan-Płonka sum over that index. Otherwise the ¬-free
/// sum is returned.
pub fn plonka_sum(sys: &SemilatticeSystem) -> Result<FiniteAlgebra, SumError> {
    let m = sys.index.size();
    let with_neg = sys.fibres.iter().all(FiniteAlgebra::has_neg);
    let src = &sys.index;
    let index = FiniteAlgebra::from_fns(
        src.name(),
        src.elements().to_vec(),
        |i, j| src.join(i, j),
        |i, j| src.join(i, j),
        Some(&|i| i),
    )
    .expect("index tables are valid");
    debug_assert_eq!(index.size(), m);
    let dualisers = if with_neg {
        sys.fibres.iter().map(|f| f.neg_table().unwrap().to_vec()).collect()
    } else {
        // placeholders; the dualiser clauses are skipped below
        sys.fibres.iter().map(|f| (0..f.size()).collect()).collect()
    };
    let full = InvSemilatticeSystem::new(
        index,
        sys.fibres.iter().map(FiniteAlgebra::reduct).collect(),
        sys.transitions.clone(),
        dualisers,
    );
    let violations: Vec<Violation> = full
        .violations()
        .into_iter()
        .filter(|v| {
            with_neg
                || !matches!(
                    v,
                    Violation::DualiserNotDualIsomorphism { .. }
                        | Violation::DualisersNotInverse { .. }
                        | Violation::NotEquivariant { .. }
                )
        })
        .collect();
    if !violations.is_empty() {
        return Err(SumError::Invalid(violations));
    }
    let sum = sum_of(&full)?.with_name(format!("Pl({})", sys.index.name()));
    Ok(if with_neg { sum } else { sum.reduct() })
}

/// `♭A`: carrier `A²` with `(a,b) ∧ (c,d) = (a∧c, b∨d)`,
/// `(a,b) ∨ (c,d) = (a∨c, b∧d)` and `¬(a,b) = (b,a)`. Any negation of `A`
/// is ignored.
pub fn bilateralise(a: &FiniteAlgebra) -> FiniteAlgebra {
    let n = a.size();
    let names = (0..n * n)
        .map(|x| format!("({},{})", a.element_name(x / n), a.element_name(x % n)))
        .collect();
    let swap = |x: usize| (x % n) * n + x / n;
    FiniteAlgebra::from_fns(
        format!("bilat({})", a.name()),
        names,
        |x, y| a.meet(x / n, y / n) * n + a.join(x % n, y % n),
        |x, y| a.join(x / n, y / n) * n + a.meet(x % n, y % n),
        Some(&swap),
    )
    .expect("bilateralisation tables are valid")
}
