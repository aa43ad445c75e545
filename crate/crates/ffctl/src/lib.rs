//! Library side of the `ffctl` command-line tool: job-file parsing, command
//! dispatch and report rendering.

pub mod job;
pub mod report;

use ffpure::fsing::{
    annihilator_chain, certify_big_test_element, fedder_test, u_generators, verify_identities,
    RingPresentation,
};
use ffpure::ideal_ops::{bracket_power, colon_ideal, intersect};
use thiserror::Error;

pub use job::{Command, JobSpec, OrderName, Output, Overrides, SpecError};
pub use report::{Outcome, Report};

const FEDDER: &str = "Fedder criterion: S/a is F-pure at n iff (a^[p] : a) is not contained in n^[p]";
const ELIMINATION: &str = "intersection by elimination: I ∩ J = (t·I + (1 - t)·J) ∩ k[x]";
const CHAIN: &str =
    "u in (a^[p] : a) makes (0 :_E a) a submodule; its graded annihilator is ⊕ (a^[p^n] : u^(nu_n)) x^n";
const FLATNESS: &str =
    "Frobenius is flat on S, so bracket powers commute with finite intersections and colons";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Engine(#[from] ffpure::Error),
}

impl CliError {
    /// 2 for resource limits, 1 for every other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(e) if e.is_resource_limit() => 2,
            _ => 1,
        }
    }
}

fn presentation(spec: &JobSpec) -> ffpure::Result<RingPresentation> {
    RingPresentation::new(spec.a.clone())
}

fn second(spec: &JobSpec) -> &ffpure::Ideal {
    spec.b.as_ref().expect("checked by JobSpec")
}

/// Runs the job and collects its report.
pub fn run(spec: &JobSpec) -> Result<Report, CliError> {
    let ring = &spec.ring;
    let ideal = report::ideal_strings;
    let (result, citations): (Outcome, &[&str]) = match spec.command {
        Command::Gb => (
            Outcome::Basis {
                basis: ideal(&spec.a)?,
            },
            &[],
        ),
        Command::Colon => (
            Outcome::Ideal {
                ideal: ideal(&colon_ideal(&spec.a, second(spec))?)?,
            },
            &[ELIMINATION],
        ),
        Command::Intersect => (
            Outcome::Ideal {
                ideal: ideal(&intersect(&spec.a, second(spec))?)?,
            },
            &[ELIMINATION],
        ),
        Command::Bracket => (
            Outcome::Bracket {
                e: spec.e,
                ideal: ideal(&bracket_power(&spec.a, spec.e)?)?,
            },
            &[],
        ),
        Command::Fedder => (Outcome::fedder(&fedder_test(&presentation(spec)?)?)?, &[FEDDER]),
        Command::Ugens => {
            let us = u_generators(&presentation(spec)?)?;
            (
                Outcome::UGenerators {
                    u: us.iter().map(ToString::to_string).collect(),
                },
                &[FEDDER],
            )
        }
        Command::Chain => {
            let u = spec.u.as_ref().expect("checked by JobSpec");
            let cap = spec.cap.expect("checked by JobSpec");
            (
                Outcome::chain(&annihilator_chain(&presentation(spec)?, u, cap)?)?,
                &[CHAIN],
            )
        }
        Command::Certify => {
            let c = spec.c.as_ref().expect("checked by JobSpec");
            let cert = certify_big_test_element(&presentation(spec)?, c)?;
            let cites: Vec<String> = cert.citations().into_iter().map(String::from).collect();
            return Ok(Report::new(
                spec.command,
                ring,
                Outcome::certificate(&cert)?,
                cites,
            ));
        }
        Command::Verify => {
            let rep = verify_identities(&presentation(spec)?, spec.samples)?;
            (Outcome::identities(&rep, spec.samples), &[FLATNESS, FEDDER])
        }
    };
    let citations = citations.iter().map(|s| s.to_string()).collect();
    Ok(Report::new(spec.command, ring, result, citations))
}

/// Parses, runs and renders a job.
pub fn execute(text: &str, over: &Overrides) -> Result<String, CliError> {
    let spec = JobSpec::parse_with(text, over)?;
    let report = run(&spec)?;
    Ok(match spec.output {
        Output::Json => report.to_json(),
        Output::Text => report.to_text(),
    })
}
