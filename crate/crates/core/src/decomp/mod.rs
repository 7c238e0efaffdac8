//! The band reduct `x·y = x ∧ (x ∨ y)` of a De Morgan bisemilattice, Green's
//! preorders, and the inverse of the De Morgan-Płonka sum.

use crate::finalg::{AlgebraClass, Congruence, FiniteAlgebra};
use crate::sums::{InvSemilatticeSystem, Violation};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BandError {
    /// `a·a ≠ a`.
    #[error("not idempotent at {0}")]
    NotIdempotent(usize),
    /// `(a·b)·c ≠ a·(b·c)`.
    #[error("not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    /// The table is not `n × n` over `0..n`.
    #[error("band table has the wrong shape")]
    Shape,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecompError {
    /// The input is not a De Morgan bisemilattice.
    #[error("not a De Morgan bisemilattice: `{0}` fails")]
    NotDmbl(String),
    /// The derived operation is not a band.
    #[error(transparent)]
    Band(#[from] BandError),
    /// A D-class is not closed under meet and join.
    #[error("D-class {0} is not closed under the lattice operations")]
    FibreNotClosed(usize),
    /// `a·b` depends on the choice of `b` in its class, or leaves class `j`.
    #[error("transition from class {i} to class {j} is not well defined at element {a}")]
    NotWellDefined { i: usize, j: usize, a: usize },
    /// The extracted system fails validation.
    #[error("extracted system is invalid: {0:?}")]
    Invalid(Vec<Violation>),
}

/// An idempotent semigroup with an optional unary operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Band {
    size: usize,
    dot: Vec<usize>,
    neg: Option<Vec<usize>>,
}

impl Band {
    /// Validates idempotence and associativity of a row-major table.
    pub fn new(size: usize, dot: Vec<usize>, neg: Option<Vec<usize>>) -> Result<Band, BandError> {
        if dot.len() != size * size
            || dot.iter().any(|&v| v >= size)
            || neg.as_ref().is_some_and(|n| n.len() != size || n.iter().any(|&v| v >= size))
        {
            return Err(BandError::Shape);
        }
        let b = Band { size, dot, neg };
        if let Some(a) = (0..size).find(|&a| b.dot(a, a) != a) {
            return Err(BandError::NotIdempotent(a));
        }
        for x in 0..size {
            for y in 0..size {
                let xy = b.dot(x, y);
                for z in 0..size {
                    if b.dot(xy, z) != b.dot(x, b.dot(y, z)) {
                        return Err(BandError::NotAssociative(x, y, z));
                    }
                }
            }
        }
        Ok(b)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.dot[a * self.size + b]
    }

    /// Panics when the band has no negation.
    pub fn neg(&self, a: usize) -> usize {
        self.neg.as_ref().expect("band has no negation")[a]
    }

    pub fn has_neg(&self) -> bool {
        self.neg.is_some()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.dot(a, b) == self.dot(b, a)))
    }

    pub fn is_left_normal(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.dot(self.dot(x, y), z) == self.dot(self.dot(x, z), y))))
    }

    pub fn is_left_zero(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.dot(a, b) == a))
    }

    /// The band as an algebra whose meet and join are both `·`, so that the
    /// generic congruence machinery applies.
    pub fn as_algebra(&self) -> FiniteAlgebra {
        let neg_fn = |a: usize| self.neg(a);
        FiniteAlgebra::from_fns(
            "band",
            (0..self.size).map(|i| i.to_string()).collect(),
            |a, b| self.dot(a, b),
            |a, b| self.dot(a, b),
            if self.has_neg() { Some(&neg_fn) } else { None },
        )
        .expect("band tables are valid")
    }

    /// Which of the three index lemmas the band satisfies.
    pub fn lemmas(&self) -> LemmaFlags {
        let n = self.size;
        let xnx = |x: usize| self.dot(x, self.neg(x));
        LemmaFlags {
            regular: (0..n).all(|x| xnx(x) == x),
            bipolar: (0..n).all(|x| (0..n).all(|y| xnx(x) == self.dot(xnx(x), y))),
            regular_bipolar: (0..n)
                .all(|x| (0..n).all(|y| self.dot(xnx(x), y) == self.dot(xnx(x), self.neg(y)))),
        }
    }
}

/// Satisfaction of `x·¬x ≈ x`, `x·¬x ≈ x·¬x·y` and `x·¬x·y ≈ x·¬x·¬y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaFlags {
    pub regular: bool,
    pub bipolar: bool,
    pub regular_bipolar: bool,
}

/// `x·y := x ∧ (x ∨ y)`, carrying `a`'s negation.
pub fn band_of(a: &FiniteAlgebra) -> Result<Band, DecompError> {
    if let Some(e) = a.class_violation(AlgebraClass::DeMorganBisemilattice) {
        return Err(DecompError::NotDmbl(e.to_string()));
    }
    let n = a.size();
    let dot = (0..n * n).map(|i| a.meet(i / n, a.join(i / n, i % n))).collect();
    Ok(Band::new(n, dot, a.neg_table().map(<[usize]>::to_vec))?)
}

/// A failed clause of the a-involutive left-normal band conditions.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AilnbViolation {
    /// The algebra has no negation.
    #[error("no negation")]
    NoNegation,
    /// `x·x ≠ x` or `·` is not associative.
    #[error("derived operation is not a band: {0}")]
    NotBand(BandError),
    /// `xyz ≠ xzy`.
    #[error("left normality fails at ({0}, {1}, {2})")]
    LeftNormal(usize, usize, usize),
    /// `¬¬x ≠ x`.
    #[error("negation is not involutive at {0}")]
    DoubleNegation(usize),
    /// `¬(x·y) ≠ ¬x·¬y`.
    #[error("a-involution fails at ({0}, {1})")]
    AInvolution(usize, usize),
    /// `a·g(b, c) ≠ a·b·c`.
    #[error("left compatibility of {op} fails at ({a}, {b}, {c})")]
    LeftCompatibility { op: &'static str, a: usize, b: usize, c: usize },
    /// `g(b, c)·a ≠ g(b·a, c·a)`.
    #[error("right compatibility of {op} fails at ({a}, {b}, {c})")]
    RightCompatibility { op: &'static str, a: usize, b: usize, c: usize },
}

/// Checks that `a` with `x·y = x ∧ (x ∨ y)` is an a-involutive left-normal
/// band with compatible operations, exhaustively.
pub fn check_ailnb(a: &FiniteAlgebra) -> Result<(), AilnbViolation> {
    let n = a.size();
    let Some(neg) = a.neg_table() else {
        return Err(AilnbViolation::NoNegation);
    };
    let dot: Vec<usize> = (0..n * n).map(|i| a.meet(i / n, a.join(i / n, i % n))).collect();
    let band = Band::new(n, dot, Some(neg.to_vec())).map_err(AilnbViolation::NotBand)?;
    let d = |x: usize, y: usize| band.dot(x, y);
    for x in 0..n {
        if neg[neg[x]] != x {
            return Err(AilnbViolation::DoubleNegation(x));
        }
        for y in 0..n {
            if neg[d(x, y)] != d(neg[x], neg[y]) {
                return Err(AilnbViolation::AInvolution(x, y));
            }
            for z in 0..n {
                if d(d(x, y), z) != d(d(x, z), y) {
                    return Err(AilnbViolation::LeftNormal(x, y, z));
                }
            }
        }
    }
    let ops: [(&'static str, &dyn Fn(usize, usize) -> usize); 2] =
        [("meet", &|x, y| a.meet(x, y)), ("join", &|x, y| a.join(x, y))];
    for (op, g) in ops {
        for x in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if d(x, g(b, c)) != d(d(x, b), c) {
                        return Err(AilnbViolation::LeftCompatibility { op, a: x, b, c });
                    }
                    if d(g(b, c), x) != g(d(b, x), d(c, x)) {
                        return Err(AilnbViolation::RightCompatibility { op, a: x, b, c });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Green's preorders of a band and the D-classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenData {
    pub leq_l: Vec<Vec<bool>>,
    pub leq_r: Vec<Vec<bool>>,
    pub leq_d: Vec<Vec<bool>>,
    pub leq_h: Vec<Vec<bool>>,
    /// D-classes ordered by least element; each class is increasing.
    pub d_classes: Vec<Vec<usize>>,
}

impl GreenData {
    pub fn d_congruence(&self, n: usize) -> Congruence {
        Congruence::from_blocks(n, &self.d_classes)
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.d_classes.iter().position(|c| c.contains(&a)).expect("classes cover the band")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("green data serialises")
    }
}

/// `a ≤_L b ⇔ ab = a`, `a ≤_R b ⇔ ba = a`, `a ≤_D b ⇔ aba = a`,
/// `≤_H = ≤_L ∩ ≤_R`; D is the equivalence induced by `≤_D`.
pub fn greens(b: &Band) -> GreenData {
    let n = b.size();
    let rel = |f: &dyn Fn(usize, usize) -> bool| -> Vec<Vec<bool>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    let leq_l = rel(&|x, y| b.dot(x, y) == x);
    let leq_r = rel(&|x, y| b.dot(y, x) == x);
    let leq_d = rel(&|x, y| b.dot(b.dot(x, y), x) == x);
    let leq_h = rel(&|x, y| leq_l[x][y] && leq_r[x][y]);
    let labels: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| leq_d[x][y] && leq_d[y][x]).collect())
        .collect();
    let d_classes = Congruence::from_labels(&labels).blocks();
    GreenData {
        leq_l,
        leq_r,
        leq_d,
        leq_h,
        d_classes,
    }
}

/// Clifford-McLean at table level: `b/D` is a semilattice, i.e. the class
/// of `xy` depends only on the classes of `x, y` and is symmetric.
pub fn d_quotient_is_semilattice(b: &Band, g: &GreenData) -> bool {
    let n = b.size();
    let theta = g.d_congruence(n);
    let q = b.as_algebra().quotient(&theta);
    theta.is_compatible(&b.as_algebra())
        && (0..q.size()).all(|x| (0..q.size()).all(|y| q.meet(x, y) == q.meet(y, x)))
}

/// A De Morgan-Płonka representation of `a`: the index is `⟨A,·,¬⟩/D`, the
/// fibres are the D-classes with the restricted lattice operations, and
/// `p_ij(x) = x·y` for any `y` in class `j`. Index elements are named after
/// their classes.
pub fn decompose(a: &FiniteAlgebra) -> Result<InvSemilatticeSystem, DecompError> {
    let band = band_of(a)?;
    let g = greens(&band);
    let theta = g.d_congruence(a.size());
    let classes = &g.d_classes;
    let m = classes.len();
    let mut local = vec![0usize; a.size()];
    for c in classes {
        for (p, &x) in c.iter().enumerate() {
            local[x] = p;
        }
    }

    let quotient = band.as_algebra().quotient(&theta);
    let index_names: Vec<String> = classes
        .iter()
        .map(|c| {
            if c.len() == 1 {
                a.element_name(c[0]).to_string()
            } else {
                let parts: Vec<&str> = c.iter().map(|&x| a.element_name(x)).collect();
                format!("[{}]", parts.join(","))
            }
        })
        .collect();
    let index = FiniteAlgebra::new(
        "I",
        index_names,
        quotient.meet_rows(),
        quotient.join_rows(),
        quotient.neg_table().map(<[usize]>::to_vec),
    )
    .expect("quotient tables are valid");

    let mut fibres = Vec::with_capacity(m);
    for (ci, c) in classes.iter().enumerate() {
        let inside = |v: usize| theta.block_of(v) == ci;
        if !c.iter().all(|&x| c.iter().all(|&y| inside(a.meet(x, y)) && inside(a.join(x, y)))) {
            return Err(DecompError::FibreNotClosed(ci));
        }
        let fibre = FiniteAlgebra::from_fns(
            index.element_name(ci),
            c.iter().map(|&x| a.element_name(x).to_string()).collect(),
            |p, q| local[a.meet(c[p], c[q])],
            |p, q| local[a.join(c[p], c[q])],
            None,
        )
        .expect("fibre tables are valid");
        fibres.push(fibre);
    }

    let mut transitions = BTreeMap::new();
    for i in 0..m {
        for j in 0..m {
            if index.join(i, j) != j {
                continue;
            }
            let mut map = Vec::with_capacity(classes[i].len());
            for &x in &classes[i] {
                let y0 = band.dot(x, classes[j][0]);
                let ok = theta.block_of(y0) == j && classes[j].iter().all(|&y| band.dot(x, y) == y0);
                if !ok {
                    return Err(DecompError::NotWellDefined { i, j, a: x });
                }
                map.push(local[y0]);
            }
            transitions.insert((i, j), map);
        }
    }
    let dualisers = classes
        .iter()
        .map(|c| c.iter().map(|&x| local[a.neg(x)]).collect())
        .collect();
    let sys = InvSemilatticeSystem::new(index, fibres, transitions, dualisers);
    sys.validate().map_err(DecompError::Invalid)?;
    Ok(sys)
}

/// The subvarieties of involutive semilattices, ordered
/// `T < RISL, BISL < RBISL < ISL`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexVariety {
    T,
    Risl,
    Bisl,
    Rbisl,
    Isl,
}

impl IndexVariety {
    pub const ALL: [IndexVariety; 5] = [
        IndexVariety::T,
        IndexVariety::Risl,
        IndexVariety::Bisl,
        IndexVariety::Rbisl,
        IndexVariety::Isl,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IndexVariety::T => "T",
            IndexVariety::Risl => "RISL",
            IndexVariety::Bisl => "BISL",
            IndexVariety::Rbisl => "RBISL",
            IndexVariety::Isl => "ISL",
        }
    }

    /// The relative axiom over involutive semilattices; `None` for ISL.
    pub fn axiom(self) -> Option<&'static str> {
        match self {
            IndexVariety::T => Some("x = y"),
            IndexVariety::Risl => Some("x = ~x"),
            IndexVariety::Bisl => Some("x \\/ ~x = (x \\/ ~x) \\/ y"),
            IndexVariety::Rbisl => Some("(x \\/ ~x) \\/ y = (x \\/ ~x) \\/ ~y"),
            IndexVariety::Isl => None,
        }
    }

    /// Partial order of inclusion.
    pub fn leq(self, other: IndexVariety) -> bool {
        use IndexVariety::*;
        self == other || matches!((self, other), (T, _) | (Risl | Bisl, Rbisl | Isl) | (Rbisl, Isl))
    }

    fn from_flags(regular: bool, bipolar: bool, regular_bipolar: bool) -> IndexVariety {
        match (regular, bipolar, regular_bipolar) {
            (true, true, _) => IndexVariety::T,
            (true, false, _) => IndexVariety::Risl,
            (false, true, _) => IndexVariety::Bisl,
            (false, false, true) => IndexVariety::Rbisl,
            (false, false, false) => IndexVariety::Isl,
        }
    }

    /// Least subvariety containing an involutive semilattice, decided by
    /// the relative axioms.
    pub fn of_index(index: &FiniteAlgebra) -> IndexVariety {
        let sat = |v: IndexVariety| index.models_str(v.axiom().unwrap());
        IndexVariety::from_flags(
            sat(IndexVariety::Risl),
            sat(IndexVariety::Bisl),
            sat(IndexVariety::Rbisl),
        )
    }
}

impl fmt::Display for IndexVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The least subvariety of involutive semilattices containing the index of
/// `a`'s representation, read off the band identities.
pub fn index_subvariety(a: &FiniteAlgebra) -> Result<IndexVariety, DecompError> {
    let flags = band_of(a)?.lemmas();
    Ok(IndexVariety::from_flags(flags.regular, flags.bipolar, flags.regular_bipolar))
}

#[cfg(test)]
mod tests;
