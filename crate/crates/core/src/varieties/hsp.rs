//! Bounded certificates for `A ∈ HSP(K)`.
//!
//! A positive certificate is a choice of factors `B₁ × … × B_k` from `K` and
//! one tuple per generator of `A` such that the generated subalgebra of the
//! product maps onto `A` by the homomorphism sending each tuple to its
//! generator. A negative certificate is an identity valid in `K` and
//! failing in `A`.

use super::{SWEEP_NODES, SWEEP_VARS, CURATED};
use crate::finalg::{close_graph, Counterexample, FiniteAlgebra, TermTable, PRODUCT_SIZE_LIMIT};
use crate::par::Strategy;
use crate::terms::space::TermSpace;
use crate::terms::Identity;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HspError {
    /// `K` is empty.
    #[error("the generating class is empty")]
    EmptyClass,
    /// An algebra exceeds the size the identity sweep can tabulate.
    #[error("`{name}` has {size} elements; the limit is {limit}")]
    TooLarge { name: String, size: usize, limit: usize },
    /// Some algebra lacks a negation.
    #[error("`{0}` has no negation")]
    NoNegation(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InCertificate {
    /// Names of the chosen factors, in product order.
    pub factors: Vec<String>,
    /// Indices into `K` of the chosen factors.
    pub factor_indices: Vec<usize>,
    /// Generators of `A` with their preimage tuples, one coordinate per
    /// factor.
    pub generators: Vec<(usize, Vec<usize>)>,
    /// Size of the generated subalgebra of the product.
    pub subalgebra_size: usize,
    /// The homomorphism onto `A` is injective, so `A` embeds in the product.
    pub injective: bool,
}

impl InCertificate {
    /// `S` for an embedding into one factor, `HS` for an image of a subalgebra
    /// of one factor, `SP`/`HSP` likewise for products.
    pub fn shape(&self) -> &'static str {
        match (self.factors.len(), self.injective) {
            (1, true) => "S",
            (1, false) => "HS",
            (_, true) => "SP",
            (_, false) => "HSP",
        }
    }

    /// Re-runs the closure and checks that it is a surjective homomorphism.
    pub fn verify(&self, a: &FiniteAlgebra, k: &[&FiniteAlgebra]) -> bool {
        let factors: Option<Vec<&FiniteAlgebra>> = self.factor_indices.iter().map(|&i| k.get(i).copied()).collect();
        let Some(factors) = factors else { return false };
        let Ok(product) = FiniteAlgebra::product_all(&factors) else {
            return false;
        };
        let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
        let gens: Vec<usize> = self.generators.iter().map(|(_, t)| encode(t, &sizes)).collect();
        let images: Vec<usize> = self.generators.iter().map(|&(g, _)| g).collect();
        match close_graph(&product, a, &gens, &images, true) {
            Some((map, defined)) => {
                let mut hit = vec![false; a.size()];
                for &y in map.iter().filter(|&&y| y != usize::MAX) {
                    hit[y] = true;
                }
                defined == self.subalgebra_size && hit.iter().all(|&h| h)
            }
            None => false,
        }
    }
}

impl fmt::Display for InCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} via {} (subalgebra of size {})",
            self.shape(),
            self.factors.join(" x "),
            self.subalgebra_size
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutCertificate {
    pub identity: Identity,
    pub counterexample: Counterexample,
}

impl fmt::Display for OutCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.identity.to_sugared_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HspVerdict {
    In(InCertificate),
    Out(OutCertificate),
    Unknown,
}

impl HspVerdict {
    pub fn is_in(&self) -> bool {
        matches!(self, HspVerdict::In(_))
    }

    pub fn is_out(&self) -> bool {
        matches!(self, HspVerdict::Out(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            HspVerdict::In(_) => "in",
            HspVerdict::Out(_) => "out",
            HspVerdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for HspVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HspVerdict::In(c) => write!(f, "in: {c}"),
            HspVerdict::Out(c) => write!(f, "out: {c}"),
            HspVerdict::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HspOptions {
    /// Largest number of factors in a product.
    pub max_factors: usize,
    /// Largest product considered.
    pub max_product: usize,
    /// Largest algebra the identity sweep tabulates.
    pub max_table_size: usize,
    /// Upper bound on candidate tuples tried per product.
    pub max_candidates: u64,
    pub strategy: Strategy,
}

impl Default for HspOptions {
    fn default() -> Self {
        HspOptions {
            max_factors: 3,
            max_product: 512,
            max_table_size: 16,
            max_candidates: 1 << 22,
            strategy: Strategy::default(),
        }
    }
}

pub(super) fn encode(tuple: &[usize], sizes: &[usize]) -> usize {
    tuple.iter().zip(sizes).fold(0, |acc, (&x, &n)| acc * n + x)
}

pub(super) fn decode(mut x: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &n) in out.iter_mut().zip(sizes).rev() {
        *slot = x % n;
        x /= n;
    }
    out
}

/// Multisets of `k` indices from `0..m`, as non-decreasing sequences in
/// lexicographic order.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Decides `A ∈ HSP(K)` with default options.
pub fn hsp_membership(a: &FiniteAlgebra, k: &[&FiniteAlgebra]) -> Result<HspVerdict, HspError> {
    hsp_membership_with(a, k, &HspOptions::default())
}

/// Tries, in order: an embedding into a member of `K`, a separating
/// identity from the curated list, a separating identity from the bounded
/// sweep, and the product search.
pub fn hsp_membership_with(a: &FiniteAlgebra, k: &[&FiniteAlgebra], opts: &HspOptions) -> Result<HspVerdict, HspError> {
    if k.is_empty() {
        return Err(HspError::EmptyClass);
    }
    for b in std::iter::once(a).chain(k.iter().copied()) {
        if !b.has_neg() {
            return Err(HspError::NoNegation(b.name().to_string()));
        }
        if b.size() > opts.max_table_size {
            return Err(HspError::TooLarge {
                name: b.name().to_string(),
                size: b.size(),
                limit: opts.max_table_size,
            });
        }
    }
    for (i, b) in k.iter().enumerate() {
        if let Some(f) = a.embeds_into(b) {
            return Ok(HspVerdict::In(InCertificate {
                factors: vec![b.name().to_string()],
                factor_indices: vec![i],
                generators: (0..a.size()).map(|x| (x, vec![f[x]])).collect(),
                subalgebra_size: a.size(),
                injective: true,
            }));
        }
    }
    if let Some(out) = separate(a, k, opts.strategy) {
        return Ok(HspVerdict::Out(out));
    }
    Ok(product_search(a, k, opts).map_or(HspVerdict::Unknown, HspVerdict::In))
}

/// An identity valid in every member of `k` and failing in `a`.
fn separate(a: &FiniteAlgebra, k: &[&FiniteAlgebra], strategy: Strategy) -> Option<OutCertificate> {
    let witness = |e: Identity| -> Option<OutCertificate> {
        let sat = a.satisfies(&e).ok()?;
        let c = sat.counterexample()?.clone();
        Some(OutCertificate {
            identity: e,
            counterexample: c,
        })
    };
    for named in CURATED {
        let e = named.identity();
        if k.iter().all(|b| b.models(&e)) {
            if let Some(out) = witness(e) {
                return Some(out);
            }
        }
    }
    let space = TermSpace::new(SWEEP_VARS, SWEEP_NODES);
    let tables: Vec<TermTable> = k.iter().map(|b| TermTable::build(b, &space, strategy)).collect();
    let refs: Vec<&TermTable> = tables.iter().collect();
    let theory = TermTable::combine(&refs);
    let mine = TermTable::build(a, &space, strategy);
    let (s, t) = crate::finalg::first_separating_pair(&theory, mine.ids())?;
    witness(space.identity(s, t))
}

fn product_search(a: &FiniteAlgebra, k: &[&FiniteAlgebra], opts: &HspOptions) -> Option<InCertificate> {
    let gens = a.minimal_generating_set();
    let r = gens.len();
    let mut choices: Vec<(usize, Vec<usize>)> = (1..=opts.max_factors)
        .flat_map(|n| multisets(k.len(), n))
        .filter_map(|idx| {
            let size = idx.iter().try_fold(1usize, |acc, &i| acc.checked_mul(k[i].size()))?;
            (size <= opts.max_product.min(PRODUCT_SIZE_LIMIT)).then_some((size, idx))
        })
        .collect();
    choices.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));

    for (size, idx) in choices {
        let factors: Vec<&FiniteAlgebra> = idx.iter().map(|&i| k[i]).collect();
        let product = FiniteAlgebra::product_all(&factors).expect("within product limit");
        let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
        let total = (size as u64).checked_pow(r as u32).unwrap_or(u64::MAX);
        let count = total.min(opts.max_candidates);
        // candidate c encodes the r-tuple of product elements in base `size`
        let tuple_of = |c: u64| -> Vec<usize> {
            let mut c = c;
            let mut out = vec![0; r];
            for slot in out.iter_mut().rev() {
                *slot = (c % size as u64) as usize;
                c /= size as u64;
            }
            out
        };
        let found = opts.strategy.find_first(0..count as usize, |c| {
            let tuple = tuple_of(c as u64);
            match close_graph(&product, a, &tuple, &gens, true) {
                Some((map, _)) => {
                    let mut hit = vec![false; a.size()];
                    map.iter().filter(|&&y| y != usize::MAX).for_each(|&y| hit[y] = true);
                    hit.iter().all(|&h| h)
                }
                None => false,
            }
        });
        if let Some(c) = found {
            let tuple = tuple_of(c as u64);
            let (map, defined) = close_graph(&product, a, &tuple, &gens, true).expect("found above");
            let injective = {
                let mut seen = vec![false; a.size()];
                map.iter()
                    .filter(|&&y| y != usize::MAX)
                    .all(|&y| !std::mem::replace(&mut seen[y], true))
            };
            return Some(InCertificate {
                factors: factors.iter().map(|f| f.name().to_string()).collect(),
                factor_indices: idx,
                generators: gens.iter().zip(&tuple).map(|(&g, &t)| (g, decode(t, &sizes))).collect(),
                subalgebra_size: defined,
                injective,
            });
        }
    }
    None
}
