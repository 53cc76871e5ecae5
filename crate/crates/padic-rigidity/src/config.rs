//! Run configuration shared by the command-line pipelines.

use std::path::Path;

use crate::error::{Error, Result};
use crate::json;
use crate::lubin_tate::{LtGroup, LtKind};

/// Which formal group a run works in.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupSpec {
    /// (1+X)^p - 1; exact multiplicative arithmetic available.
    Multiplicative,
    /// pX + X^p.
    Standard,
    /// Parameters loaded from an LTParams JSON file.
    File(String),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        match text {
            "multiplicative" | "cyclotomic" => Ok(GroupSpec::Multiplicative),
            "standard" => Ok(GroupSpec::Standard),
            path if path.ends_with(".json") => Ok(GroupSpec::File(path.to_string())),
            other => Err(Error::InvalidInput(format!(
                "group must be multiplicative, standard, or an LTParams .json path, got {:?}",
                other
            ))),
        }
    }
}

/// How tuples are gathered for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    /// Full enumeration; error if it exceeds the cap.
    Exhaustive,
    /// Seeded sampling of `cap` tuples.
    Sample,
    /// Full enumeration when it fits the cap, sampling otherwise.
    Auto,
}

impl EnumMode {
    pub fn parse(text: &str) -> Result<EnumMode> {
        match text {
            "exhaustive" => Ok(EnumMode::Exhaustive),
            "sample" => Ok(EnumMode::Sample),
            "auto" => Ok(EnumMode::Auto),
            other => Err(Error::InvalidInput(format!(
                "mode must be exhaustive, sample, or auto, got {:?}",
                other
            ))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            EnumMode::Exhaustive => "exhaustive",
            EnumMode::Sample => "sample",
            EnumMode::Auto => "auto",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub prime: u64,
    pub precision: u32,
    pub degree_bound: usize,
    pub level_bound: u32,
    pub group: GroupSpec,
    pub mode: EnumMode,
    pub cap: u64,
    pub seed: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.prime) {
            return Err(Error::InvalidConfig(format!("{} is not prime", self.prime)));
        }
        if self.precision == 0 {
            return Err(Error::InvalidConfig("precision must be at least 1".into()));
        }
        if self.degree_bound == 0 {
            return Err(Error::InvalidConfig("degree bound must be at least 1".into()));
        }
        if self.level_bound == 0 {
            return Err(Error::InvalidConfig("level bound must be at least 1".into()));
        }
        if self.cap == 0 {
            return Err(Error::InvalidConfig("cap must be at least 1".into()));
        }
        Ok(())
    }

    /// Build the configured group; a file-based group must agree with
    /// the configured prime.
    pub fn build_group(&self) -> Result<LtGroup> {
        self.validate()?;
        let kind = match &self.group {
            GroupSpec::Multiplicative => LtKind::Cyclotomic,
            GroupSpec::Standard => LtKind::Standard,
            GroupSpec::File(path) => {
                let text = std::fs::read_to_string(Path::new(path))?;
                let (p, kind) = json::lt_params_from_json(&json::parse_json(&text)?)?;
                if p != self.prime {
                    return Err(Error::InvalidConfig(format!(
                        "group file is for p = {}, run is for p = {}",
                        p, self.prime
                    )));
                }
                kind
            }
        };
        LtGroup::new(self.prime, self.precision, self.degree_bound, kind)
    }
}
