use tdesign::am_checker::AmError;
use tdesign::codes::CodeError;
use tdesign::constructions::ConstructionError;
use tdesign::design_theory::DesignError;
use tdesign::galois::GaloisError;
use tdesign::spectra::SpectraError;
use thiserror::Error;

use crate::output::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Am(#[from] AmError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot write csv: {0}")]
    Csv(#[from] csv::Error),
    /// A failure that still has a report worth printing.
    #[error("{0}")]
    Reported(Box<CliError>, Box<Report>),
}

pub const DOMAIN: i32 = 1;
pub const BUDGET: i32 = 2;
pub const INTERNAL: i32 = 3;

fn code_exit(e: &CodeError) -> i32 {
    match e {
        CodeError::BudgetExceeded { .. } => BUDGET,
        CodeError::InconsistentDistribution(_) => INTERNAL,
        _ => DOMAIN,
    }
}

impl CliError {
    /// 1 for domain errors, 2 for budget refusals, 3 for internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Galois(_) => DOMAIN,
            CliError::Inconsistent(_) => INTERNAL,
            CliError::Code(e) => code_exit(e),
            CliError::Spectra(e) => match e {
                SpectraError::OutOfDomain { .. } => DOMAIN,
                SpectraError::Code(c) => code_exit(c),
                _ => INTERNAL,
            },
            CliError::Design(DesignError::Code(c)) => code_exit(c),
            CliError::Design(_) => DOMAIN,
            CliError::Construction(ConstructionError::Code(c)) => code_exit(c),
            CliError::Construction(_) => DOMAIN,
            CliError::Am(AmError::InconsistentPair) => INTERNAL,
            CliError::Am(_) => DOMAIN,
            CliError::Reported(e, _) => e.exit_code(),
        }
    }

    pub fn with_report(self, report: Report) -> Self {
        CliError::Reported(Box::new(self), Box::new(report))
    }
}
