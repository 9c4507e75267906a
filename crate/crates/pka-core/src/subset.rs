//! Dense bitmask subsets of a small carrier.
//!
//! Every algebra in this crate has a carrier of at most 32 elements, so a
//! subset is a `u32` mask. Element `i` of the carrier corresponds to bit `i`.

use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

/// Hard upper bound on carrier sizes supported by [`Subset`].
pub const MAX_CARRIER: usize = 32;

/// A subset of a carrier, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(i: usize) -> Subset {
        debug_assert!(i < MAX_CARRIER);
        Subset(1 << i)
    }

    /// The full subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_CARRIER);
        if n == MAX_CARRIER {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        let mut s = Subset::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_CARRIER);
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in ascending mask order (starts with `EMPTY`,
    /// ends with `self`).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut cur: Option<u32> = Some(0);
        core::iter::from_fn(move || {
            let s = cur?;
            cur = if s == mask {
                None
            } else {
                Some(s.wrapping_sub(mask) & mask)
            };
            Some(Subset(s))
        })
    }

    /// All subsets of the full carrier `{0, .., n-1}`.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        Subset::full(n).subsets()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all() {
        let m = Subset::from_iter([0, 2, 3]);
        let subs: alloc::vec::Vec<Subset> = m.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], Subset::EMPTY);
        assert_eq!(*subs.last().unwrap(), m);
        for s in &subs {
            assert!(s.is_subset_of(m));
        }
    }

    #[test]
    fn iter_ascending() {
        let m = Subset::from_iter([4, 1, 7]);
        let v: alloc::vec::Vec<usize> = m.iter().collect();
        assert_eq!(v, [1, 4, 7]);
    }

    #[test]
    fn full_carrier() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(3).len(), 3);
        assert_eq!(Subset::full(32).len(), 32);
    }
}
