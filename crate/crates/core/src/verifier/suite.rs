//! Suite configuration (TOML) and the parallel runner.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{checks, VerificationReport, VerifierError};

/// The checks the suite knows, by their configuration names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    LocalUnram,
    LocalTable,
    Macdonald,
    CosetSweep,
    ArchQuadrature,
    ConstantAssembly,
    SkRatio,
    SkVanishing,
    ClassGroup,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::LocalUnram,
        CheckKind::LocalTable,
        CheckKind::Macdonald,
        CheckKind::CosetSweep,
        CheckKind::ArchQuadrature,
        CheckKind::ConstantAssembly,
        CheckKind::SkRatio,
        CheckKind::SkVanishing,
        CheckKind::ClassGroup,
    ];
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MacdonaldConfig {
    /// Cosets `h(ℓ, m)` with `ℓ, m ≤ max_index`.
    pub max_index: u32,
    /// Random rational parameter draws.
    pub draws: usize,
    pub seed: u64,
}

impl Default for MacdonaldConfig {
    fn default() -> Self {
        Self { max_index: 4, draws: 1000, seed: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CosetConfig {
    pub primes: Vec<u64>,
    pub min_valuation: i64,
    pub max_valuation: i64,
    pub units_per_cell: usize,
    pub seed: u64,
}

impl Default for CosetConfig {
    fn default() -> Self {
        Self { primes: vec![3, 5], min_valuation: -3, max_valuation: 3, units_per_cell: 3, seed: 7 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ArchConfig {
    pub weights: Vec<i64>,
    pub tol: f64,
}

impl Default for ArchConfig {
    fn default() -> Self {
        Self { weights: vec![3, 4, 6, 10, 20], tol: 1e-6 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConstantsConfig {
    pub k_min: i64,
    pub k_max: i64,
    pub tol: f64,
}

impl Default for ConstantsConfig {
    fn default() -> Self {
        Self { k_min: 3, k_max: 40, tol: 1e-12 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SkConfig {
    /// Siegel weight; the elliptic form has weight `2k − 2`.
    pub k: i64,
    pub discriminants: Vec<i64>,
    pub tol: f64,
    pub afe_tol: f64,
    /// Optional q-expansion file replacing the computed eigenform.
    pub qexp: Option<PathBuf>,
    /// Optional Kohnen coefficient file replacing the computed Jacobi form.
    pub kohnen: Option<PathBuf>,
}

impl Default for SkConfig {
    fn default() -> Self {
        Self {
            k: 10,
            discriminants: vec![-3, -4, -7, -8, -11, -19, -23, -24],
            tol: 1e-6,
            afe_tol: 1e-8,
            qexp: None,
            kohnen: None,
        }
    }
}

/// A closed range of discriminants `d_min ≤ d ≤ d_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeConfig {
    pub d_min: i64,
    pub d_max: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VanishingConfig {
    pub k: i64,
    pub d_min: i64,
    pub d_max: i64,
}

impl Default for VanishingConfig {
    fn default() -> Self {
        Self { k: 10, d_min: -100, d_max: -3 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ClassGroupConfig {
    pub d_min: i64,
    pub d_max: i64,
}

impl Default for ClassGroupConfig {
    fn default() -> Self {
        Self { d_min: -200, d_max: -3 }
    }
}

/// Which checks to run and with which parameters. Every section is
/// optional; an omitted `checks` list means all checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub checks: Vec<CheckKind>,
    pub macdonald: MacdonaldConfig,
    pub coset: CosetConfig,
    pub arch: ArchConfig,
    pub constants: ConstantsConfig,
    pub sk: SkConfig,
    pub vanishing: VanishingConfig,
    pub class_group: ClassGroupConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            checks: CheckKind::ALL.to_vec(),
            macdonald: MacdonaldConfig::default(),
            coset: CosetConfig::default(),
            arch: ArchConfig::default(),
            constants: ConstantsConfig::default(),
            sk: SkConfig::default(),
            vanishing: VanishingConfig::default(),
            class_group: ClassGroupConfig::default(),
        }
    }
}

impl SuiteConfig {
    /// Parse TOML; errors carry the line and column.
    pub fn from_toml(text: &str) -> Result<Self, VerifierError> {
        toml::from_str(text).map_err(|e| VerifierError::Config(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, VerifierError> {
        let text = std::fs::read_to_string(path).map_err(|e| VerifierError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text).map_err(|e| match e {
            VerifierError::Config(m) => VerifierError::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}

/// Run one kind of check.
pub fn run_check(kind: CheckKind, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    match kind {
        CheckKind::LocalUnram => checks::local_unram(),
        CheckKind::LocalTable => checks::local_table(),
        CheckKind::Macdonald => checks::macdonald(&cfg.macdonald),
        CheckKind::CosetSweep => checks::coset_sweep(&cfg.coset),
        CheckKind::ArchQuadrature => checks::arch(&cfg.arch.weights, cfg.arch.tol),
        CheckKind::ConstantAssembly => checks::constants(cfg.constants.k_min, cfg.constants.k_max, cfg.constants.tol),
        CheckKind::SkRatio => checks::sk_ratio(&cfg.sk),
        CheckKind::SkVanishing => checks::sk_vanishing(
            &RangeConfig { d_min: cfg.vanishing.d_min, d_max: cfg.vanishing.d_max },
            cfg.vanishing.k,
        ),
        CheckKind::ClassGroup => checks::class_group_engine(&RangeConfig {
            d_min: cfg.class_group.d_min,
            d_max: cfg.class_group.d_max,
        }),
    }
}

/// Run the selected checks in parallel; reports come back in the order of
/// `cfg.checks`.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<VerificationReport> {
    cfg.checks.par_iter().map(|&k| run_check(k, cfg)).collect::<Vec<_>>().into_iter().flatten().collect()
}
