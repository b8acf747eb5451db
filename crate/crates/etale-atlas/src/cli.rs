//! Command dispatch for the `etale-atlas` binary: load input files, run
//! the requested classifier, and emit a deterministic text report.
//!
//! Exit conventions: 0 on success, 1 on a domain error (a well-formed
//! input that fails a mathematical precondition, e.g. `NotACocycle`),
//! 2 on an input error (unreadable or malformed files, bad flags).

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use thiserror::Error;

use crate::classify::{
    center_sectors, enumerate_etale1, enumerate_etale2_skeleton, enumerate_etale_2rep_pointed,
    enumerate_lagrangian1, enumerate_lagrangian2_trivial_pointed, ClassifyError,
};
use crate::cohomology::{cohomology_group, CohError, Cochain};
use crate::files::{load_group, parse_cocycle, parse_metric, realize_metric, FileError};
use crate::group::FiniteGroup;
use crate::metric::MetricGroup;
use crate::report;
use crate::transgression::{transgress, transgress3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliCommand {
    Cohomology { degree: usize },
    Lagrangian1,
    Etale1,
    Lagrangian2,
    Etale2Rep,
    Etale2,
    Center { degree: usize },
    Transgress { element: usize },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CliCommand,
    pub group_path: PathBuf,
    pub cocycle_path: Option<PathBuf>,
    pub metric_paths: Vec<PathBuf>,
    /// report destination; stdout when absent
    pub output: Option<PathBuf>,
    pub verbosity: u8,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: FileError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Cohomology(#[from] CohError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::File { source, .. } => {
                if source.is_input_error() {
                    2
                } else {
                    1
                }
            }
            CliError::Classify(ClassifyError::TwistDegree { .. }) => 2,
            CliError::Classify(_) | CliError::Cohomology(_) => 1,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_group_file(path: &Path) -> Result<Arc<FiniteGroup>, CliError> {
    let text = read_file(path)?;
    load_group(&text).map_err(|source| CliError::File { path: path.to_path_buf(), source })
}

fn load_cocycle_file(
    path: &Path,
    group: &Arc<FiniteGroup>,
) -> Result<Cochain, CliError> {
    let text = read_file(path)?;
    let (_, c) = parse_cocycle(&text, group)
        .map_err(|source| CliError::File { path: path.to_path_buf(), source })?;
    Ok(c)
}

/// The twist for a classifier: the parsed cocycle, or zero at the
/// expected degree when no cocycle file was given.
fn load_twist(
    config: &RunConfig,
    group: &Arc<FiniteGroup>,
    degree: usize,
) -> Result<Cochain, CliError> {
    match &config.cocycle_path {
        Some(path) => load_cocycle_file(path, group),
        None => Ok(Cochain::zero(group, degree)?),
    }
}

fn load_metric_file(path: &Path) -> Result<MetricGroup, CliError> {
    let text = read_file(path)?;
    let spec =
        parse_metric(&text).map_err(|source| CliError::File { path: path.to_path_buf(), source })?;
    let group_path = path.parent().unwrap_or(Path::new(".")).join(&spec.group_ref);
    let group = load_group_file(&group_path)?;
    realize_metric(&spec, &group)
        .map_err(|source| CliError::File { path: path.to_path_buf(), source })
}

/// Runs one command and returns the report text.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let started = Instant::now();
    let group = load_group_file(&config.group_path)?;
    if config.verbosity > 0 {
        eprintln!("loaded group {} (order {})", group.name(), group.order());
    }
    let report = match &config.command {
        CliCommand::Cohomology { degree } => {
            if !(1..=5).contains(degree) {
                return Err(CliError::Usage(format!(
                    "cohomology degree must be between 1 and 5, got {degree}"
                )));
            }
            let basis = cohomology_group(&group, *degree)?;
            report::cohomology_report(&group, &basis)
        }
        CliCommand::Lagrangian1 => {
            let omega = load_twist(config, &group, 3)?;
            let out = enumerate_lagrangian1(&group, &omega)?;
            report::lagrangian1_report(&group, &out)
        }
        CliCommand::Etale1 => {
            let omega = load_twist(config, &group, 3)?;
            let out = enumerate_etale1(&group, &omega)?;
            report::etale1_report(&group, &out)
        }
        CliCommand::Lagrangian2 => {
            let pi = load_twist(config, &group, 4)?;
            let out = enumerate_lagrangian2_trivial_pointed(&group, &pi)?;
            report::lagrangian2_report(&group, &out)
        }
        CliCommand::Etale2Rep => {
            if config.metric_paths.is_empty() {
                return Err(CliError::Usage(
                    "etale2rep needs at least one --metric file".into(),
                ));
            }
            let metrics: Vec<MetricGroup> = config
                .metric_paths
                .iter()
                .map(|p| load_metric_file(p))
                .collect::<Result<_, _>>()?;
            let out = enumerate_etale_2rep_pointed(&group, &metrics)?;
            report::etale_2rep_report(&group, &out)
        }
        CliCommand::Etale2 => {
            let [metric_path] = &config.metric_paths[..] else {
                return Err(CliError::Usage("etale2 needs exactly one --metric file".into()));
            };
            let metric = load_metric_file(metric_path)?;
            let pi = load_twist(config, &group, 4)?;
            let out = enumerate_etale2_skeleton(&group, &pi, &metric)?;
            report::etale2_report(&group, &out)
        }
        CliCommand::Center { degree } => {
            if *degree != 3 && *degree != 4 {
                return Err(CliError::Usage(format!(
                    "center degree must be 3 or 4, got {degree}"
                )));
            }
            let twist = load_twist(config, &group, *degree)?;
            let out = center_sectors(&group, &twist, *degree)?;
            report::center_report(&group, &out, *degree)
        }
        CliCommand::Transgress { element } => {
            let Some(path) = &config.cocycle_path else {
                return Err(CliError::Usage("transgress needs a --cocycle file".into()));
            };
            if *element >= group.order() {
                return Err(CliError::Usage(format!(
                    "element {element} out of range for a group of order {}",
                    group.order()
                )));
            }
            let cocycle = load_cocycle_file(path, &group)?;
            let res = match cocycle.degree() {
                3 => transgress3(&cocycle, *element)?,
                4 => transgress(&cocycle, *element)?,
                d => {
                    return Err(CliError::Usage(format!(
                        "transgression takes a degree 3 or 4 cocycle, got degree {d}"
                    )))
                }
            };
            report::transgress_report(&group, &res)
        }
    };
    if config.verbosity > 0 {
        eprintln!("done in {:?}", started.elapsed());
    }
    Ok(report)
}

/// Runs a command and writes the report to the configured destination.
/// Returns the process exit code.
pub fn execute(config: &RunConfig) -> u8 {
    match run(config) {
        Ok(report) => match &config.output {
            Some(path) => match std::fs::write(path, &report) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    2
                }
            },
            None => {
                print!("{report}");
                0
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
