//! Checked integer helpers shared by the exact modules.

use num_integer::Integer;

use crate::error::{Error, Result};

pub(crate) fn checked_lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / a.gcd(&b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

pub(crate) fn lcm_all<I: IntoIterator<Item = u64>>(values: I) -> Result<u64> {
    values.into_iter().try_fold(1, checked_lcm)
}

pub(crate) fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// Reduce `num/den` to lowest terms. `den` must be non-zero.
pub(crate) fn reduce(num: u64, den: u64) -> (u64, u64) {
    match num.gcd(&den) {
        0 => (0, 1),
        g => (num / g, den / g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_basics() {
        assert_eq!(lcm_all([4, 6, 9]).unwrap(), 36);
        assert_eq!(lcm_all(std::iter::empty()).unwrap(), 1);
        assert!(checked_lcm(u64::MAX, u64::MAX - 1).is_err());
    }

    #[test]
    fn reduce_lowest_terms() {
        assert_eq!(reduce(6, 8), (3, 4));
        assert_eq!(reduce(0, 5), (0, 1));
    }
}
