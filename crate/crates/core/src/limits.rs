//! Process-wide enumeration bounds.
//!
//! Enumerating subgroups or automorphisms is limited by the group order;
//! scanning `A^n` (dual codes, enumerator transforms) is limited by `|A|^n`.
//! Exceeding a bound is always an error, never a silent truncation.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::{Error, Result};

pub const DEFAULT_ENUMERATION_BOUND: u64 = 4096;
pub const DEFAULT_SCAN_BOUND: u64 = 10_000_000;

static ENUMERATION_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_BOUND);
static SCAN_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_SCAN_BOUND);

pub fn enumeration_bound() -> u64 {
    ENUMERATION_BOUND.load(Ordering::Relaxed)
}

pub fn scan_bound() -> u64 {
    SCAN_BOUND.load(Ordering::Relaxed)
}

pub fn set_enumeration_bound(bound: u64) {
    ENUMERATION_BOUND.store(bound, Ordering::Relaxed);
}

pub fn set_scan_bound(bound: u64) {
    SCAN_BOUND.store(bound, Ordering::Relaxed);
}

pub(crate) fn check_enumeration(what: &'static str, size: u128) -> Result<()> {
    let bound = enumeration_bound() as u128;
    if size > bound {
        return Err(Error::BoundExceeded { what, size, bound });
    }
    Ok(())
}

pub(crate) fn check_scan(what: &'static str, size: u128) -> Result<()> {
    let bound = scan_bound() as u128;
    if size > bound {
        return Err(Error::BoundExceeded { what, size, bound });
    }
    Ok(())
}
