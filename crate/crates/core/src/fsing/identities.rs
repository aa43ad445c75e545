use rand::rngs::StdRng;
use rand::SeedableRng;

use super::{fedder_ideal, RingPresentation};
use crate::error::Result;
use crate::groebner::{ideal_contains, ideal_equal, Ideal};
use crate::ideal_ops::{bracket_power, colon_ideal, intersect};
use crate::random::{random_ideal, Shape};

#[derive(Debug, Clone)]
pub struct IdentityConfig {
    pub seed: u64,
    pub shape: Shape,
}

impl Default for IdentityConfig {
    fn default() -> Self {
        IdentityConfig {
            seed: 0x5eed,
            shape: Shape {
                max_gens: 2,
                max_terms: 2,
                max_degree: 3,
                constants: false,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// Description of the first failing instance.
    pub counterexample: Option<String>,
}

impl IdentityOutcome {
    fn new(name: &'static str) -> Self {
        IdentityOutcome {
            name,
            checked: 0,
            failures: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }
}

pub const INTERSECTION: &str = "(I ∩ J)^[p] = I^[p] ∩ J^[p]";
pub const COLON: &str = "(I : J)^[p] = (I^[p] : J^[p])";
pub const COLON_CONTAINMENT: &str = "(I^[p] : I) ⊆ ((I : J)^[p] : (I : J))";
pub const PROPER: &str = "1 ∉ (a^[p] : a)";

/// Checks the three Frobenius identities on one pair of nonzero ideals.
fn check_pair(i: &Ideal, j: &Ideal, out: &mut [IdentityOutcome; 3]) -> Result<()> {
    let describe = || format!("I = {i}, J = {j}");

    let lhs = bracket_power(&intersect(i, j)?, 1)?;
    let rhs = intersect(&bracket_power(i, 1)?, &bracket_power(j, 1)?)?;
    out[0].record(ideal_equal(&lhs, &rhs)?, describe);

    let ij = colon_ideal(i, j)?;
    let ij_p = bracket_power(&ij, 1)?;
    let rhs = colon_ideal(&bracket_power(i, 1)?, &bracket_power(j, 1)?)?;
    out[1].record(ideal_equal(&ij_p, &rhs)?, describe);

    let small = colon_ideal(&bracket_power(i, 1)?, i)?;
    let big = colon_ideal(&ij_p, &ij)?;
    out[2].record(ideal_contains(&big, &small)?, describe);
    Ok(())
}

pub fn verify_identities(ring: &RingPresentation, samples: usize) -> Result<IdentityReport> {
    verify_identities_with(ring, samples, &IdentityConfig::default())
}

/// Runs the Frobenius identity suite on `samples` instances plus the
/// properness check on the ring's own ideal.
///
/// Sample 0 is `(a, (1))`, which exercises `(I : (1)) = I`; the others pair
/// random nonzero ideals drawn from `config.shape`, seeded per sample.
pub fn verify_identities_with(
    ring: &RingPresentation,
    samples: usize,
    config: &IdentityConfig,
) -> Result<IdentityReport> {
    let r = ring.ring();
    let mut out = [
        IdentityOutcome::new(INTERSECTION),
        IdentityOutcome::new(COLON),
        IdentityOutcome::new(COLON_CONTAINMENT),
    ];
    for k in 0..samples {
        let (i, j) = if k == 0 {
            (ring.ideal().clone(), Ideal::unit(r))
        } else {
            let mut rng = StdRng::seed_from_u64(config.seed.wrapping_add(k as u64));
            (
                random_ideal(r, &mut rng, &config.shape),
                random_ideal(r, &mut rng, &config.shape),
            )
        };
        check_pair(&i, &j, &mut out)?;
    }

    let mut proper = IdentityOutcome::new(PROPER);
    let j = fedder_ideal(ring)?;
    proper.record(!j.is_unit()?, || format!("a = {}", ring.ideal()));

    let mut outcomes = out.to_vec();
    outcomes.push(proper);
    Ok(IdentityReport { outcomes })
}
