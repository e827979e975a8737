//! Bitmask subsets of an indexed ground set, and the label ordering shared by
//! presentations and set systems.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set any bitmask in this crate can index.
pub const MASK_BITS: usize = 32;

/// A subset of an indexed ground set, stored as a bitmask.
///
/// Ordering is by cardinality first, then lexicographic on the ascending list
/// of member indices, so `{0} < {3} < {0,1} < {0,2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    #[inline]
    pub fn toggle(self, i: usize) -> Subset {
        Subset(self.0 ^ 1 << i)
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Applies an index map to every member.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Subset {
        Subset(self.iter().fold(0, |acc, i| acc | 1 << f(i)))
    }

    /// Every subset of `0..n`, in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < 32, "subset enumeration over {n} elements");
        (0u32..1 << n).map(Subset)
    }

    /// Builds a mask from labels, looking each up in `names`.
    pub fn from_labels<S: AsRef<str>>(names: &[String], labels: &[S]) -> Result<Subset> {
        let mut mask = Subset::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = names
                .iter()
                .position(|n| n == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            mask = mask.with(i);
        }
        Ok(mask)
    }

    pub fn labels(self, names: &[String]) -> Vec<&str> {
        self.iter().map(|i| names[i].as_str()).collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Natural ordering of labels: purely numeric labels first, compared by
/// value, then everything else lexicographically.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    let num = |s: &str| -> Option<u128> {
        if !s.is_empty() && s.len() <= 30 && s.bytes().all(|c| c.is_ascii_digit()) {
            s.parse().ok()
        } else {
            None
        }
    };
    match (num(a), num(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}

pub fn is_valid_label(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|c| c.is_ascii_alphanumeric() || c == b'_')
}
