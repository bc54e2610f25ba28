//! Size guard for constructed rings.
//!
//! Every constructor checks the order of the ring it is about to build
//! against a per-thread limit. The default is [`DEFAULT_SIZE_GUARD`];
//! [`with_size_guard`] overrides it for the duration of a closure.

use std::cell::Cell;

use crate::error::{Error, Result};

pub const DEFAULT_SIZE_GUARD: usize = 4096;

thread_local! {
    static GUARD: Cell<usize> = const { Cell::new(DEFAULT_SIZE_GUARD) };
}

/// Current limit on the order of any constructed ring.
pub fn size_guard() -> usize {
    GUARD.with(Cell::get)
}

/// Runs `f` with the size guard set to `limit`, restoring the previous value
/// afterwards (also on unwind).
pub fn with_size_guard<T>(limit: usize, f: impl FnOnce() -> T) -> T {
    struct Restore(usize);
    impl Drop for Restore {
        fn drop(&mut self) {
            GUARD.with(|g| g.set(self.0));
        }
    }
    let _restore = Restore(GUARD.with(|g| g.replace(limit)));
    f()
}

pub(crate) fn check_order(what: impl Into<String>, requested: u128) -> Result<usize> {
    let guard = size_guard();
    if requested > guard as u128 {
        return Err(Error::SizeGuardExceeded {
            what: what.into(),
            requested,
            guard,
        });
    }
    Ok(requested as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_is_scoped() {
        assert_eq!(size_guard(), DEFAULT_SIZE_GUARD);
        with_size_guard(10, || {
            assert_eq!(size_guard(), 10);
            assert!(check_order("x", 11).is_err());
            assert_eq!(check_order("x", 10).unwrap(), 10);
        });
        assert_eq!(size_guard(), DEFAULT_SIZE_GUARD);
    }
}
