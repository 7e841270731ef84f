//! Data-driven cross-verification: every registered identity is evaluated
//! over its grid and the two sides compared exactly or within tolerance.

mod config;
mod registry;
mod report;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integral::QuadratureConfig;

pub use config::VerificationConfig;
pub use registry::{compare, registry, Context, Identity, Point, Tag, Value};
pub use report::{IdentityReport, Outcome, PointResult};

/// All reports of one run. `failed` is set when any non-informational
/// identity has a mismatch.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationRun {
    pub reports: Vec<IdentityReport>,
    pub failed: bool,
}

impl VerificationRun {
    pub fn report(&self, id: &str) -> Option<&IdentityReport> {
        self.reports.iter().find(|r| r.identity == id)
    }

    pub fn mismatch_count(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| !r.informational)
            .map(|r| r.mismatches())
            .sum()
    }
}

fn selected(identity: &Identity, config: &VerificationConfig) -> bool {
    let included = config.include.is_empty() || config.include.iter().any(|f| identity.matches(f));
    included && !config.exclude.iter().any(|f| identity.matches(f))
}

fn context(config: &VerificationConfig) -> Result<Context> {
    Ok(Context {
        max_n: config.max_n,
        max_m: config.max_m,
        max_p: config.max_p,
        z: config.z_values()?,
        quadrature: QuadratureConfig::with_abs_tol(config.quadrature_tolerance),
        harmonic_fault: config.inject_harmonic_fault,
    })
}

fn evaluate(identity: &Identity, point: &Point, ctx: &Context) -> PointResult {
    let params = point.params();
    let run = || -> Result<(Outcome, Option<String>)> {
        let lhs = (identity.lhs)(point, ctx)?;
        let rhs = (identity.rhs)(point, ctx)?;
        Ok(compare(&lhs, &rhs))
    };
    let (outcome, note) = match catch_unwind(AssertUnwindSafe(run)) {
        Ok(Ok(result)) => result,
        Ok(Err(e @ (Error::OutOfDomain(_) | Error::InvalidParameter(_) | Error::Divergent(_)))) => {
            (
                Outcome::OutOfDomain {
                    reason: e.to_string(),
                },
                None,
            )
        }
        Ok(Err(e)) => (
            Outcome::Mismatch {
                lhs: "error".into(),
                rhs: "value".into(),
            },
            Some(e.to_string()),
        ),
        Err(_) => (
            Outcome::Mismatch {
                lhs: "panic".into(),
                rhs: "value".into(),
            },
            Some("evaluation panicked".into()),
        ),
    };
    let result = PointResult::new(&params, outcome);
    match note {
        Some(n) => result.with_note(n),
        None => result,
    }
}

/// Runs one identity over its grid. Points are evaluated in parallel; the
/// report keeps grid order.
pub fn run_identity(identity: &Identity, ctx: &Context) -> IdentityReport {
    let start = Instant::now();
    let grid = (identity.grid)(ctx);
    let points: Vec<PointResult> = grid
        .par_iter()
        .map(|pt| evaluate(identity, pt, ctx))
        .collect();
    IdentityReport {
        identity: identity.id.to_string(),
        description: identity.description.to_string(),
        grid: identity.grid_description.to_string(),
        informational: identity.informational(),
        points,
        duration_ms: start.elapsed().as_millis() as u64,
    }
}

pub fn run_verification(config: &VerificationConfig) -> Result<VerificationRun> {
    config.validate()?;
    let ctx = context(config)?;
    let reports: Vec<IdentityReport> = registry()
        .iter()
        .filter(|id| selected(id, config))
        .map(|id| run_identity(id, &ctx))
        .collect();
    let failed = reports.iter().any(|r| r.failed());
    Ok(VerificationRun { reports, failed })
}
