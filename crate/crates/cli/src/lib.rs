//! Command implementations behind the `bpart` binary.

pub mod build;
pub mod census;
pub mod input;

use std::env;

use anyhow::{bail, Context, Result};
use barbell_core::barbell::{BRUTE_FORCE_MAX, DEFAULT_BRUTE_CAP};
use barbell_core::{SearchBudget, SearchOptions};

/// Usage or input error.
pub const EXIT_USAGE: i32 = 64;
/// An `ops build` hypothesis was not met.
pub const EXIT_HYPOTHESIS: i32 = 3;

pub const BRUTE_CAP_ENV: &str = "BARBELL_BRUTE_CAP";

/// Search options from the `--brute-cap` and `--budget` flags, falling back
/// to the environment and then to the defaults.
pub fn search_options(brute_cap: Option<usize>, budget: Option<u64>) -> Result<SearchOptions> {
    let brute_cap = match brute_cap {
        Some(cap) => cap,
        None => match env::var(BRUTE_CAP_ENV) {
            Ok(raw) => raw.trim().parse().with_context(|| format!("{BRUTE_CAP_ENV}={raw:?} is not a vertex count"))?,
            Err(_) => DEFAULT_BRUTE_CAP,
        },
    };
    if brute_cap > BRUTE_FORCE_MAX {
        bail!("brute-force cap {brute_cap} exceeds the supported maximum {BRUTE_FORCE_MAX}");
    }
    let budget = budget.map_or_else(SearchBudget::default, |max_nodes| SearchBudget { max_nodes });
    Ok(SearchOptions { budget, brute_cap })
}
