//! Capacity accounting for a width-N, depth-L network: weight count versus
//! the exponentially larger path count.

use crate::error::{Error, Result};

/// `N_W = N^2 L` weights against `N_P = N^L` input-to-output paths; the path
/// count is reported in log10 (and exactly, when it fits in 128 bits).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityReport {
    pub width: u64,
    pub depth: u64,
    pub weight_count: u128,
    pub log10_path_count: f64,
    pub path_count: Option<u128>,
}

pub fn capacity_report(width: u64, depth: u64) -> Result<CapacityReport> {
    if width == 0 || depth == 0 {
        return Err(Error::InvalidParameter { what: "width and depth", constraint: "at least 1" });
    }
    let weight_count = (width as u128) * (width as u128) * (depth as u128);
    let log10_path_count = depth as f64 * (width as f64).log10();
    let path_count = u32::try_from(depth)
        .ok()
        .and_then(|d| (width as u128).checked_pow(d));
    Ok(CapacityReport { width, depth, weight_count, log10_path_count, path_count })
}
