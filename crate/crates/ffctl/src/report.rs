use std::fmt::Write as _;

use ffpure::fsing::{Certificate, ChainReport, FpureReport, IdentityReport, Verdict};
use ffpure::{Ideal, Polynomial, Result, Ring};
use serde::Serialize;

use crate::job::Command;

#[derive(Debug, Clone, Serialize)]
pub struct RingInfo {
    pub p: u32,
    pub vars: Vec<String>,
}

impl RingInfo {
    pub fn new(ring: &Ring) -> Self {
        RingInfo {
            p: ring.p(),
            vars: ring.vars().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainEntryOut {
    pub n: u32,
    /// `nu_n` in decimal; it can exceed 64 bits.
    pub nu: String,
    pub ideal: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOut {
    pub name: &'static str,
    pub verdict: &'static str,
    pub computed: bool,
    pub justification: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityOut {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Basis {
        basis: Vec<String>,
    },
    Ideal {
        ideal: Vec<String>,
    },
    Bracket {
        e: u32,
        ideal: Vec<String>,
    },
    Fedder {
        fpure: bool,
        witness: Option<String>,
        fedder_ideal: Vec<String>,
    },
    UGenerators {
        u: Vec<String>,
    },
    Chain {
        u: String,
        cap: u32,
        entries: Vec<ChainEntryOut>,
        ascending: bool,
        stabilized_at: Option<usize>,
    },
    Certificate {
        c: String,
        conclusion: String,
        checks: Vec<CheckOut>,
        reverified: bool,
    },
    Identities {
        samples: usize,
        all_passed: bool,
        identities: Vec<IdentityOut>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub ring: RingInfo,
    pub result: Outcome,
    pub citations: Vec<String>,
}

/// Reduced Gröbner basis as strings, in basis order.
pub fn ideal_strings(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal.basis()?.iter().map(Polynomial::to_string).collect())
}

fn show_ideal(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".to_string()
    } else {
        format!("({})", gens.join(", "))
    }
}

impl Outcome {
    pub fn fedder(rep: &FpureReport) -> Result<Self> {
        Ok(Outcome::Fedder {
            fpure: rep.fpure,
            witness: rep.witness_u.as_ref().map(Polynomial::to_string),
            fedder_ideal: ideal_strings(&rep.fedder_ideal)?,
        })
    }

    pub fn chain(rep: &ChainReport) -> Result<Self> {
        let entries = rep
            .entries
            .iter()
            .map(|e| {
                Ok(ChainEntryOut {
                    n: e.n,
                    nu: e.nu.to_string(),
                    ideal: ideal_strings(&e.ideal)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Outcome::Chain {
            u: rep.u.to_string(),
            cap: rep.cap,
            entries,
            ascending: rep.ascending_verified,
            stabilized_at: rep.stabilized_at,
        })
    }

    pub fn certificate(cert: &Certificate) -> Result<Self> {
        Ok(Outcome::Certificate {
            c: cert.c.to_string(),
            conclusion: cert.conclusion.to_string(),
            checks: cert
                .checks
                .iter()
                .map(|c| CheckOut {
                    name: c.kind.name(),
                    verdict: match c.verdict {
                        Verdict::Pass => "pass",
                        Verdict::Fail => "fail",
                    },
                    computed: c.computed,
                    justification: c.justification(),
                })
                .collect(),
            reverified: cert.reverify()?,
        })
    }

    pub fn identities(rep: &IdentityReport, samples: usize) -> Self {
        Outcome::Identities {
            samples,
            all_passed: rep.all_passed(),
            identities: rep
                .outcomes
                .iter()
                .map(|o| IdentityOut {
                    name: o.name,
                    checked: o.checked,
                    failures: o.failures,
                    counterexample: o.counterexample.clone(),
                })
                .collect(),
        }
    }
}

impl Report {
    pub fn new(command: Command, ring: &Ring, result: Outcome, citations: Vec<String>) -> Self {
        Report {
            command: command.name(),
            ring: RingInfo::new(ring),
            result,
            citations,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "ring: F_{}[{}]", self.ring.p, self.ring.vars.join(", "));
        match &self.result {
            Outcome::Basis { basis } => {
                let _ = writeln!(s, "basis: {}", show_ideal(basis));
            }
            Outcome::Ideal { ideal } => {
                let _ = writeln!(s, "ideal: {}", show_ideal(ideal));
            }
            Outcome::Bracket { e, ideal } => {
                let _ = writeln!(s, "e: {e}");
                let _ = writeln!(s, "ideal: {}", show_ideal(ideal));
            }
            Outcome::Fedder {
                fpure,
                witness,
                fedder_ideal,
            } => {
                let _ = writeln!(s, "fpure: {fpure}");
                let _ = writeln!(s, "witness: {}", witness.as_deref().unwrap_or("none"));
                let _ = writeln!(s, "fedder ideal: {}", show_ideal(fedder_ideal));
            }
            Outcome::UGenerators { u } => {
                for (i, g) in u.iter().enumerate() {
                    let _ = writeln!(s, "u{}: {g}", i + 1);
                }
            }
            Outcome::Chain {
                u,
                cap,
                entries,
                ascending,
                stabilized_at,
            } => {
                let _ = writeln!(s, "u: {u}");
                let _ = writeln!(s, "cap: {cap}");
                for e in entries {
                    let _ = writeln!(s, "b_{} (nu = {}): {}", e.n, e.nu, show_ideal(&e.ideal));
                }
                let _ = writeln!(s, "ascending: {ascending}");
                let stable = stabilized_at.map_or("none".to_string(), |k| k.to_string());
                let _ = writeln!(s, "stabilized_at: {stable}");
            }
            Outcome::Certificate {
                c,
                conclusion,
                checks,
                reverified,
            } => {
                let _ = writeln!(s, "c: {c}");
                for ch in checks {
                    let how = if ch.computed { "computed" } else { "recorded" };
                    let _ = writeln!(s, "check {}: {} ({how})", ch.name, ch.verdict);
                }
                let _ = writeln!(s, "conclusion: {conclusion}");
                let _ = writeln!(s, "reverified: {reverified}");
            }
            Outcome::Identities {
                samples,
                all_passed,
                identities,
            } => {
                let _ = writeln!(s, "samples: {samples}");
                for o in identities {
                    let status = if o.failures == 0 { "pass" } else { "FAIL" };
                    let _ = writeln!(
                        s,
                        "{status} {} ({} checked, {} failed)",
                        o.name, o.checked, o.failures
                    );
                    if let Some(cx) = &o.counterexample {
                        let _ = writeln!(s, "  counterexample: {cx}");
                    }
                }
                let _ = writeln!(s, "all passed: {all_passed}");
            }
        }
        for c in &self.citations {
            let _ = writeln!(s, "cite: {c}");
        }
        s
    }
}
