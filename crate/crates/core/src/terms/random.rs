//! Random terms and identities for sampled property checks.

use super::space::VAR_NAMES;
use super::{Identity, Term};
use rand::Rng;

/// A random term over the first `vars` variable names with depth at most
/// `max_depth`.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, vars: usize, max_depth: usize) -> Term {
    assert!((1..=VAR_NAMES.len()).contains(&vars));
    if max_depth == 0 || rng.gen_ratio(1, 4) {
        return Term::var(VAR_NAMES[rng.gen_range(0..vars)]);
    }
    match rng.gen_range(0..3) {
        0 => Term::neg(random_term(rng, vars, max_depth - 1)),
        1 => Term::meet(
            random_term(rng, vars, max_depth - 1),
            random_term(rng, vars, max_depth - 1),
        ),
        _ => Term::join(
            random_term(rng, vars, max_depth - 1),
            random_term(rng, vars, max_depth - 1),
        ),
    }
}

pub fn random_identity<R: Rng + ?Sized>(rng: &mut R, vars: usize, max_depth: usize) -> Identity {
    Identity::new(random_term(rng, vars, max_depth), random_term(rng, vars, max_depth))
}
