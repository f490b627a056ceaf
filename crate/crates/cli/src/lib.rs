//! Command implementations for the `heckez` binary. Every command renders to a
//! `String` so output is byte-identical whether it goes to stdout or a file.

pub mod cache;
pub mod element;
pub mod verify;

use std::fs;
use std::path::Path;

use heckez::center::{class_polynomials, gr_element};
use heckez::charmap::{character_table, family_transition, CentralFamily};
use heckez::combinatorics::partitions_of;
use heckez::export::{self, Format};
use heckez::symfunc::transition_matrix;
use heckez::{Basis, Permutation, TransitionMatrix};
use thiserror::Error;

use crate::element::{ElementSpec, Endpoint};

/// Default bound on `n` for commands that build Hecke algebra elements.
pub const HECKE_MAX_N: usize = 6;
/// Default bound on `n` for commands that only touch symmetric functions.
pub const SYMFUNC_MAX_N: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Math(#[from] heckez::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Rejects `n` above the limit; an explicit `--max-n` raises the limit
/// with a warning, since run time grows roughly like `n!^2`.
pub fn check_n(n: usize, default_max: usize, override_max: Option<usize>) -> Result<()> {
    let max = match override_max {
        Some(m) if m > default_max => {
            eprintln!(
                "warning: --max-n {m} exceeds the default limit {default_max}; large n can take a very long time"
            );
            m
        }
        Some(m) => m,
        None => default_max,
    };
    if n > max {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the limit {max} (raise it with --max-n)"
        )));
    }
    Ok(())
}

/// Loads or fills the on-disk tables for `n` when a cache directory is configured.
pub fn prepare(n: usize) {
    if let Some(cache) = cache::Cache::from_env() {
        cache.warm(n);
    }
}

pub fn chartable(n: usize, format: Format) -> String {
    export::character_table(&character_table(n), format)
}

pub fn grbasis(n: usize, format: Format) -> String {
    let members: Vec<_> = partitions_of(n)
        .into_iter()
        .map(|l| {
            let g = gr_element(&l);
            (l, g)
        })
        .collect();
    export::hecke_family(&members, format)
}

pub fn psi(n: usize, elem: &ElementSpec, basis: Basis) -> Result<String> {
    if elem.lambda.size() != n {
        return Err(CliError::Usage(format!("{elem} is not a partition of {n}")));
    }
    Ok(format!("{}\n", heckez::charmap::psi(&elem.element()).convert(basis)))
}

/// One row `(lambda): f_{w,lambda}, ...` in canonical partition order.
pub fn classpoly_row(n: usize, w: &Permutation) -> Result<String> {
    if w.n() != n {
        return Err(CliError::Usage(format!("{w} is not a permutation of {n} letters")));
    }
    let t = class_polynomials(n);
    let cells: Vec<String> = t
        .partitions()
        .iter()
        .zip(t.row_vec(w))
        .map(|(l, f)| format!("{}: {f}", l.paren()))
        .collect();
    Ok(format!("{}\n", cells.join(", ")))
}

pub fn classpoly_table(n: usize, format: Format) -> String {
    export::class_polynomials(&class_polynomials(n), format)
}

/// Whether a transition only involves symmetric-function bases.
pub fn is_symfunc_only(from: Endpoint, to: Endpoint) -> bool {
    matches!((from, to), (Endpoint::Basis(_), Endpoint::Basis(_)))
}

pub fn transition(n: usize, from: Endpoint, to: Endpoint) -> Result<TransitionMatrix> {
    match (from, to) {
        (Endpoint::Basis(a), Endpoint::Basis(b)) => Ok(transition_matrix(a, b, n)),
        (Endpoint::Family(a), Endpoint::Family(b)) => Ok(family_transition(a, b, n)?),
        _ => Err(CliError::Usage(
            "cannot mix a central family with a symmetric-function basis; use GR and m for the psi-identified pair"
                .into(),
        )),
    }
}

/// Writes the standard tables for `n` into `dir`, one file per table.
/// Returns the file names written, in order.
pub fn export_bundle(n: usize, dir: &Path) -> Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let mut files: Vec<(String, String)> = vec![
        ("classpoly.csv".into(), classpoly_table(n, Format::Csv)),
        ("classpoly.json".into(), classpoly_table(n, Format::Json)),
        ("chartable.csv".into(), chartable(n, Format::Csv)),
        ("chartable.json".into(), chartable(n, Format::Json)),
        ("chartable.tex".into(), chartable(n, Format::Latex)),
        ("grbasis.json".into(), grbasis(n, Format::Json)),
    ];
    for family in CentralFamily::ALL.into_iter().filter(|f| *f != CentralFamily::GR) {
        let m = family_transition(family, CentralFamily::GR, n)?;
        files.push((
            format!("transition-{family}-GR.csv"),
            export::transition_matrix(&m, Format::Csv),
        ));
    }
    for b in [Basis::E, Basis::H, Basis::P, Basis::S] {
        let m = transition_matrix(b, Basis::M, n);
        files.push((
            format!("transition-{b}-m.csv"),
            export::transition_matrix(&m, Format::Csv),
        ));
    }
    for (name, body) in &files {
        fs::write(dir.join(name), body)?;
    }
    Ok(files.into_iter().map(|(name, _)| name).collect())
}
