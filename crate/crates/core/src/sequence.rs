use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finitely presented infinite sequence `preamble · cycle^ω`.
///
/// Positions are 1-based: `item(1)` is the first element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodic<T> {
    preamble: Vec<T>,
    cycle: Vec<T>,
}

impl<T: Clone> EventuallyPeriodic<T> {
    pub fn new(preamble: Vec<T>, cycle: Vec<T>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Invalid("the cycle of an eventually periodic sequence is empty".into()));
        }
        Ok(EventuallyPeriodic { preamble, cycle })
    }

    pub fn purely_periodic(cycle: Vec<T>) -> Result<Self> {
        Self::new(Vec::new(), cycle)
    }

    pub fn constant(x: T) -> Self {
        EventuallyPeriodic { preamble: Vec::new(), cycle: alloc::vec![x] }
    }

    pub fn preamble(&self) -> &[T] {
        &self.preamble
    }

    pub fn cycle(&self) -> &[T] {
        &self.cycle
    }

    /// Element at 1-based position `n`.
    ///
    /// # Panics
    /// When `n == 0`.
    pub fn item(&self, n: usize) -> &T {
        assert!(n >= 1, "sequence positions are 1-based");
        let p = self.preamble.len();
        if n <= p {
            &self.preamble[n - 1]
        } else {
            &self.cycle[(n - p - 1) % self.cycle.len()]
        }
    }

    /// The first `len` elements.
    pub fn prefix(&self, len: usize) -> Vec<T> {
        (1..=len).map(|n| self.item(n).clone()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        self.preamble.iter().chain(self.cycle.iter().cycle())
    }

    /// The same sequence presented with a preamble of at least `len` elements.
    pub fn with_preamble_at_least(&self, len: usize) -> Self {
        if len <= self.preamble.len() {
            return self.clone();
        }
        let preamble = self.prefix(len);
        let shift = (len - self.preamble.len()) % self.cycle.len();
        let mut cycle = self.cycle.clone();
        cycle.rotate_left(shift);
        EventuallyPeriodic { preamble, cycle }
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> EventuallyPeriodic<U> {
        EventuallyPeriodic {
            preamble: self.preamble.iter().map(&mut f).collect(),
            cycle: self.cycle.iter().map(&mut f).collect(),
        }
    }
}

impl<T: Clone + Eq> EventuallyPeriodic<T> {
    /// Canonical presentation: primitive cycle, shortest preamble.
    pub fn canonical(&self) -> Self {
        let n = self.cycle.len();
        let root = (1..=n)
            .find(|&p| n % p == 0 && (p..n).all(|i| self.cycle[i] == self.cycle[i - p]))
            .unwrap_or(n);
        let mut cycle: Vec<T> = self.cycle[..root].to_vec();
        let mut preamble = self.preamble.clone();
        while let Some(last) = preamble.last() {
            if *last != cycle[cycle.len() - 1] {
                break;
            }
            preamble.pop();
            cycle.rotate_right(1);
        }
        EventuallyPeriodic { preamble, cycle }
    }

    /// Whether both presentations describe the same infinite sequence.
    pub fn same_sequence(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Whether the periodic part takes a single value.
    pub fn is_eventually_constant(&self) -> bool {
        self.cycle.iter().all(|x| *x == self.cycle[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn indexing_is_one_based() {
        let s = EventuallyPeriodic::new(alloc::vec![7, 8], alloc::vec![1, 2, 3]).unwrap();
        let got: Vec<i32> = (1..=9).map(|n| *s.item(n)).collect();
        assert_eq!(got, [7, 8, 1, 2, 3, 1, 2, 3, 1]);
    }

    #[test]
    fn empty_cycle_is_rejected() {
        assert!(EventuallyPeriodic::<u8>::new(alloc::vec![1], alloc::vec![]).is_err());
    }

    #[test]
    fn canonical_form() {
        let s = EventuallyPeriodic::new(alloc::vec![0, 1, 1, 0], alloc::vec![1, 0, 1, 0]).unwrap();
        let c = s.canonical();
        assert_eq!(c.preamble(), &[0, 1]);
        assert_eq!(c.cycle(), &[1, 0]);
        assert!(s.same_sequence(&c));
        let t = EventuallyPeriodic::new(alloc::vec![0], alloc::vec![1, 0]).unwrap();
        assert!(t.same_sequence(&EventuallyPeriodic::purely_periodic(alloc::vec![0, 1]).unwrap()));
    }

    proptest! {
        #[test]
        fn item_agrees_with_unrolling(
            pre in proptest::collection::vec(0u8..3, 0..4),
            cyc in proptest::collection::vec(0u8..3, 1..5),
        ) {
            let s = EventuallyPeriodic::new(pre.clone(), cyc.clone()).unwrap();
            let bound = 10 * (pre.len() + cyc.len());
            let mut naive = pre.clone();
            while naive.len() < bound {
                naive.extend_from_slice(&cyc);
            }
            for n in 1..=bound {
                prop_assert_eq!(*s.item(n), naive[n - 1]);
            }
            let c = s.canonical();
            prop_assert_eq!(c.prefix(bound), s.prefix(bound));
            let u = s.with_preamble_at_least(pre.len() + 3);
            prop_assert_eq!(u.prefix(bound), s.prefix(bound));
        }
    }
}
