use std::fmt;

use super::{fedder_test, RingPresentation};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, member, Ideal};
use crate::ideal_ops::{colon, radical_member};
use crate::polyring::Polynomial;

/// Whether `c` is a nonzerodivisor on `S/a`, i.e. `(a : c) = a`.
///
/// In a reduced ring (in particular an F-pure one) the nonzerodivisors are
/// exactly the complement of the union of the minimal primes.
pub fn nonzerodivisor_test(ring: &RingPresentation, c: &Polynomial) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::precondition("c must be nonzero"));
    }
    let a = ring.ideal();
    if member(c, a)? {
        return Ok(false);
    }
    ideal_equal(&colon(a, c)?, a)
}

/// `(f, ∂f/∂x_1, ..., ∂f/∂x_n)`, cutting out the singular locus of `S/(f)`.
pub fn hypersurface_singular_ideal(f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() || f.is_unit() {
        return Err(Error::precondition("f must be a nonzero non-unit"));
    }
    let ring = f.ring();
    let gens = std::iter::once(f.clone()).chain((0..ring.nvars()).map(|i| f.derivative(i)));
    let ideal = Ideal::new(ring, gens.collect::<Vec<_>>())?;
    ideal.basis()?;
    Ok(ideal)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// `R` is F-pure at the origin.
    FPure,
    /// `c` lies in `R°`.
    InRCirc,
    /// `R_c` is regular.
    RegularAfterInverting,
    /// `R` is excellent.
    Excellent,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::FPure => "F-pure",
            CheckKind::InRCirc => "c in R°",
            CheckKind::RegularAfterInverting => "R_c regular",
            CheckKind::Excellent => "excellent",
        }
    }

    pub fn justification(self) -> &'static str {
        match self {
            CheckKind::FPure => "Fedder criterion: (a^[p] : a) not contained in n^[p]",
            CheckKind::InRCirc => {
                "R° is the complement of the minimal primes; F-pure rings are reduced, so R° is the set of nonzerodivisors, tested as (a : c) = a"
            }
            CheckKind::RegularAfterInverting => {
                "c lies in the radical of the Jacobian ideal (f, df/dx_i), so D(c) misses the singular locus"
            }
            CheckKind::Excellent => "a finitely generated algebra over a field is excellent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub verdict: Verdict,
    /// Whether the verdict was computed (false for recorded facts).
    pub computed: bool,
}

impl Check {
    pub fn justification(&self) -> &'static str {
        self.kind.justification()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conclusion {
    BigTestElement,
    /// The sufficient conditions failed only at regularity of `R_c`.
    Inconclusive,
    Refuted,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::BigTestElement => "big-test-element",
            Conclusion::Inconclusive => "inconclusive",
            Conclusion::Refuted => "refuted",
        })
    }
}

/// Citation carried by a successful certificate.
pub const BIG_TEST_ELEMENT_THEOREM: &str =
    "big test element theorem: for R excellent and F-pure, any c in R° with R_c regular is a big test element";

#[derive(Debug, Clone)]
pub struct Certificate {
    pub subject: RingPresentation,
    pub c: Polynomial,
    pub checks: Vec<Check>,
    pub conclusion: Conclusion,
}

impl Certificate {
    /// First failing check, if any.
    pub fn failed_check(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.verdict == Verdict::Fail)
    }

    pub fn citations(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = self.checks.iter().map(Check::justification).collect();
        if self.conclusion == Conclusion::BigTestElement {
            out.push(BIG_TEST_ELEMENT_THEOREM);
        }
        out
    }

    /// Recomputes every check from scratch and compares verdicts.
    pub fn reverify(&self) -> Result<bool> {
        let fresh = run_checks(&self.subject, &self.c)?;
        Ok(fresh == self.checks && conclude(&fresh) == self.conclusion)
    }
}

fn generator(ring: &RingPresentation) -> Result<Polynomial> {
    match ring.ideal().basis()? {
        [f] => Ok(f.clone()),
        _ => Err(Error::precondition(
            "the certifier handles hypersurfaces only: a must be principal",
        )),
    }
}

fn run_checks(ring: &RingPresentation, c: &Polynomial) -> Result<Vec<Check>> {
    let f = generator(ring)?;
    if c.is_zero() {
        return Err(Error::precondition("c must be nonzero"));
    }
    let fpure = fedder_test(ring)?.fpure;
    let nzd = nonzerodivisor_test(ring, c)?;
    let regular = radical_member(c, &hypersurface_singular_ideal(&f)?)?;
    Ok(vec![
        Check {
            kind: CheckKind::FPure,
            verdict: fpure.into(),
            computed: true,
        },
        Check {
            kind: CheckKind::InRCirc,
            verdict: nzd.into(),
            computed: true,
        },
        Check {
            kind: CheckKind::RegularAfterInverting,
            verdict: regular.into(),
            computed: true,
        },
        Check {
            kind: CheckKind::Excellent,
            verdict: Verdict::Pass,
            computed: false,
        },
    ])
}

fn conclude(checks: &[Check]) -> Conclusion {
    match checks.iter().find(|c| c.verdict == Verdict::Fail).map(|c| c.kind) {
        None => Conclusion::BigTestElement,
        Some(CheckKind::FPure | CheckKind::InRCirc) => Conclusion::Refuted,
        Some(_) => Conclusion::Inconclusive,
    }
}

/// Certifies that `c` is a big test element of the hypersurface `S/(f)` by
/// checking the hypotheses of the big test element theorem: F-purity,
/// `c ∈ R°`, regularity of `R_c`, and excellence (always true here).
///
/// The theorem is sufficient, not necessary: a failure of `R_c` regular only
/// yields [`Conclusion::Inconclusive`].
pub fn certify_big_test_element(ring: &RingPresentation, c: &Polynomial) -> Result<Certificate> {
    let checks = run_checks(ring, c)?;
    let conclusion = conclude(&checks);
    Ok(Certificate {
        subject: ring.clone(),
        c: c.clone(),
        checks,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{MonomialOrder, PrimeChar, Ring};

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeChar::new(p).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn nonzerodivisors() {
        let r = ring(2, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x*y"]).unwrap();
        let p = |s| r.parse(s).unwrap();
        assert!(nonzerodivisor_test(&rp, &p("x + y")).unwrap());
        assert!(!nonzerodivisor_test(&rp, &p("x")).unwrap());
        assert!(nonzerodivisor_test(&rp, &p("1")).unwrap());
        assert!(!nonzerodivisor_test(&rp, &p("x*y")).unwrap());
        assert!(nonzerodivisor_test(&rp, &p("0")).is_err());
    }

    #[test]
    fn singular_ideals() {
        let r = ring(2, &["x", "y"]);
        let got = hypersurface_singular_ideal(&r.parse("x*y").unwrap()).unwrap();
        assert!(ideal_equal(&got, &Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap());
        let got = hypersurface_singular_ideal(&r.parse("x").unwrap()).unwrap();
        assert!(got.is_unit().unwrap());

        let r = ring(5, &["x", "y"]);
        let got = hypersurface_singular_ideal(&r.parse("y^2 + x^3").unwrap()).unwrap();
        assert!(ideal_equal(&got, &Ideal::parse(&r, &["x^2", "y"]).unwrap()).unwrap());
        assert!(radical_member(&r.parse("x").unwrap(), &got).unwrap());
        assert!(radical_member(&r.parse("y").unwrap(), &got).unwrap());
    }

    #[test]
    fn certificates() {
        let r = ring(2, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x*y"]).unwrap();
        let cert = certify_big_test_element(&rp, &r.parse("x + y").unwrap()).unwrap();
        assert_eq!(cert.conclusion, Conclusion::BigTestElement);
        assert!(cert.reverify().unwrap());
        assert!(cert.citations().contains(&BIG_TEST_ELEMENT_THEOREM));

        let cert = certify_big_test_element(&rp, &r.parse("x").unwrap()).unwrap();
        assert_eq!(cert.conclusion, Conclusion::Refuted);
        assert_eq!(cert.failed_check().unwrap().kind, CheckKind::InRCirc);

        let cusp = RingPresentation::parse(&r, &["y^2 + x^3"]).unwrap();
        let cert = certify_big_test_element(&cusp, &r.parse("x + y").unwrap()).unwrap();
        assert_eq!(cert.conclusion, Conclusion::Refuted);
        assert_eq!(cert.failed_check().unwrap().kind, CheckKind::FPure);
    }

    #[test]
    fn inconclusive_when_c_misses_singular_locus() {
        // the node is singular at the origin only; c = x + y + 1 does not
        // vanish there, so D(c) still contains the singular point
        let r = ring(3, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x*y"]).unwrap();
        let cert = certify_big_test_element(&rp, &r.parse("x + y + 1").unwrap()).unwrap();
        assert_eq!(cert.conclusion, Conclusion::Inconclusive);
        assert_eq!(
            cert.failed_check().unwrap().kind,
            CheckKind::RegularAfterInverting
        );
    }

    #[test]
    fn rejects_non_principal() {
        let r = ring(2, &["x", "y", "z"]);
        let rp = RingPresentation::parse(&r, &["x*y", "z"]).unwrap();
        assert!(matches!(
            certify_big_test_element(&rp, &r.parse("x + y").unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
