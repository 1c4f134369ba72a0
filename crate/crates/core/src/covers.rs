//! Brute-force enumeration of minimal covers over bitmask families.
//!
//! A family of `j` distinct nonempty subsets of `{0, .., s-1}` is a *minimal
//! cover* when the union is the whole ground set and every member covers at
//! least one element privately (no other member covers it). Removing any
//! member of a minimal cover therefore uncovers something.
//!
//! Subsets are bitmasks (`SubsetMask`), families are strictly increasing mask
//! sequences, and the enumerator classifies each minimal cover by the number
//! `k` of elements covered exactly once. These exhaustive counts are the
//! ground truth that the closed-form counts in
//! [`combinatorics::min_cover_count`](crate::combinatorics::min_cover_count)
//! are checked against.
//!
//! The search space over all candidate families has size `C(2^s - 1, j)`; to
//! keep accidental monster runs out, enumeration refuses to start above
//! [`SEARCH_CEILING`] unless explicitly overridden.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinatorics::binomial;
use crate::{Error, Result};

/// A subset of the ground set `{0, .., s-1}` as a bitmask.
pub type SubsetMask = u32;

/// Largest supported ground set; masks must fit the enumerator's fixed-size
/// coverage table.
pub const MAX_GROUND_SET: u32 = 20;

/// Enumeration refuses search spaces larger than this without an override.
pub const SEARCH_CEILING: u64 = 1_000_000_000;

/// Knobs for [`count_by_unique_with`].
#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    /// Worker threads; the partition over first members keeps counts
    /// identical for every value.
    pub threads: usize,
    /// Proceed even when the search space exceeds [`SEARCH_CEILING`].
    pub ignore_ceiling: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            threads: 1,
            ignore_ceiling: false,
        }
    }
}

/// A validated family: distinct nonempty subsets of `{0, .., s-1}` held in
/// ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    s: u32,
    members: Vec<SubsetMask>,
}

impl CoverFamily {
    /// Validates and canonicalizes a member list. Members may arrive in any
    /// order but must be nonempty, within the ground set, and distinct.
    pub fn new(s: u32, mut members: Vec<SubsetMask>) -> Result<Self> {
        if !(1..=MAX_GROUND_SET).contains(&s) {
            return Err(Error::InvalidInput(format!(
                "ground set size must be 1..={MAX_GROUND_SET}, got {s}"
            )));
        }
        if members.is_empty() {
            return Err(Error::InvalidInput("a cover family needs at least one member".into()));
        }
        for &m in &members {
            if m == 0 {
                return Err(Error::InvalidInput("empty subsets cannot appear in a cover".into()));
            }
            if m >> s != 0 {
                return Err(Error::InvalidInput(format!(
                    "mask {m:#b} uses elements outside the {s}-element ground set"
                )));
            }
        }
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("family members must be distinct".into()));
        }
        Ok(CoverFamily { s, members })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn is_minimal(&self) -> bool {
        is_minimal_cover(self.s, &self.members)
    }

    pub fn unique_count(&self) -> u32 {
        unique_count(self.s, &self.members)
    }
}

fn coverage_counts(s: u32, members: &[SubsetMask]) -> Vec<u32> {
    let mut counts = vec![0u32; s as usize];
    for &m in members {
        for (b, c) in counts.iter_mut().enumerate() {
            *c += m >> b & 1;
        }
    }
    counts
}

/// Whether `members` covers `{0, .., s-1}` with every member owning a
/// privately covered element. Order and duplicates do not matter (a
/// duplicated member can own nothing, so such a family is never minimal).
pub fn is_minimal_cover(s: u32, members: &[SubsetMask]) -> bool {
    let counts = coverage_counts(s, members);
    if counts.contains(&0) {
        return false;
    }
    members.iter().all(|&m| {
        (0..s as usize).any(|b| m >> b & 1 == 1 && counts[b] == 1)
    })
}

/// Number of elements covered by exactly one member.
pub fn unique_count(s: u32, members: &[SubsetMask]) -> u32 {
    coverage_counts(s, members)
        .iter()
        .filter(|&&c| c == 1)
        .count() as u32
}

/// Size of the raw search space: `C(2^s - 1, j)` candidate families.
pub fn search_space(s: u32, j: u32) -> BigInt {
    binomial((1u64 << s) - 1, j as i64)
}

/// Depth-first enumerator over ascending mask sequences.
///
/// Two sound prunes keep the walk inside families that can still become
/// minimal covers: a candidate member contained in the current union is
/// skipped (its private set is empty and can only stay empty), and after
/// every insertion each chosen member must still own a uniquely covered
/// element (private sets only shrink as members arrive).
struct Search {
    s: u32,
    full: SubsetMask,
    j: usize,
    members: Vec<SubsetMask>,
    union: SubsetMask,
    coverage: [u32; MAX_GROUND_SET as usize],
    tallies: [u64; MAX_GROUND_SET as usize + 1],
}

impl Search {
    fn new(s: u32, j: usize) -> Self {
        Search {
            s,
            full: ((1u64 << s) - 1) as SubsetMask,
            j,
            members: Vec::with_capacity(j),
            union: 0,
            coverage: [0; MAX_GROUND_SET as usize],
            tallies: [0; MAX_GROUND_SET as usize + 1],
        }
    }

    fn everyone_owns_an_element(&self) -> bool {
        self.members.iter().all(|&m| {
            (0..self.s as usize).any(|b| m >> b & 1 == 1 && self.coverage[b] == 1)
        })
    }

    fn push(&mut self, m: SubsetMask) -> SubsetMask {
        let saved_union = self.union;
        self.members.push(m);
        self.union |= m;
        for b in 0..self.s as usize {
            self.coverage[b] += m >> b & 1;
        }
        saved_union
    }

    fn pop(&mut self, saved_union: SubsetMask) {
        let m = self.members.pop().expect("push/pop balanced");
        self.union = saved_union;
        for b in 0..self.s as usize {
            self.coverage[b] -= m >> b & 1;
        }
    }

    fn run(&mut self, start: SubsetMask) {
        if self.members.len() == self.j {
            if self.union == self.full {
                // minimality held incrementally at every insertion
                let k = (0..self.s as usize).filter(|&b| self.coverage[b] == 1).count();
                self.tallies[k] += 1;
            }
            return;
        }
        let remaining = (self.j - self.members.len()) as SubsetMask;
        if remaining == 0 || start > self.full {
            return;
        }
        // highest viable start leaves enough distinct masks behind it
        let last = self.full - (remaining - 1);
        for m in start..=last {
            if m & !self.union == 0 {
                continue; // nothing left for this member to own
            }
            let saved = self.push(m);
            if self.everyone_owns_an_element() {
                self.run(m + 1);
            }
            self.pop(saved);
        }
    }
}

/// Exhaustively counts minimal `j`-covers of `{0, .., s-1}` grouped by the
/// number of uniquely covered elements, with default options (one thread,
/// ceiling enforced). Keys with zero count are omitted.
pub fn count_by_unique(s: u32, j: u32) -> Result<BTreeMap<u32, BigInt>> {
    count_by_unique_with(s, j, &EnumerationOptions::default())
}

/// [`count_by_unique`] with explicit options. The first member partitions the
/// search space across threads; tallies are merged by addition, so the result
/// is identical for every thread count.
///
/// # Panics
///
/// Panics if `s` is outside `1..=MAX_GROUND_SET` or `j == 0`.
pub fn count_by_unique_with(
    s: u32,
    j: u32,
    opts: &EnumerationOptions,
) -> Result<BTreeMap<u32, BigInt>> {
    assert!(
        (1..=MAX_GROUND_SET).contains(&s),
        "ground set size must be 1..={MAX_GROUND_SET}, got {s}"
    );
    assert!(j >= 1, "a cover family needs at least one member");
    let space = search_space(s, j);
    let ceiling = BigInt::from(SEARCH_CEILING);
    if !opts.ignore_ceiling && space > ceiling {
        return Err(Error::SearchSpaceExceeded { s, j, space, ceiling });
    }

    let full = ((1u64 << s) - 1) as SubsetMask;
    let firsts: Vec<SubsetMask> = (1..=full)
        .filter(|&f| full - f + 1 >= j) // enough masks above f to finish
        .collect();

    let threads = opts.threads.max(1).min(firsts.len().max(1));
    let tallies = if threads == 1 {
        let mut search = Search::new(s, j as usize);
        for &f in &firsts {
            let saved = search.push(f);
            search.run(f + 1);
            search.pop(saved);
        }
        search.tallies
    } else {
        let mut merged = [0u64; MAX_GROUND_SET as usize + 1];
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let firsts = &firsts;
                    scope.spawn(move || {
                        let mut search = Search::new(s, j as usize);
                        for f in firsts.iter().skip(t).step_by(threads).copied() {
                            let saved = search.push(f);
                            search.run(f + 1);
                            search.pop(saved);
                        }
                        search.tallies
                    })
                })
                .collect();
            for handle in handles {
                let part = handle.join().expect("enumeration worker panicked");
                for (m, p) in merged.iter_mut().zip(part) {
                    *m += p;
                }
            }
        });
        merged
    };

    Ok(tallies
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(k, &c)| (k as u32, BigInt::from(c)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::min_cover_count;
    use num_traits::Zero;

    /// No-pruning oracle: every j-combination of masks, then the minimality
    /// predicate.
    fn count_naive(s: u32, j: u32) -> BTreeMap<u32, BigInt> {
        let full = (1u32 << s) - 1;
        let mut counts: BTreeMap<u32, BigInt> = BTreeMap::new();
        let mut family = Vec::with_capacity(j as usize);
        fn rec(
            s: u32,
            full: u32,
            j: usize,
            start: u32,
            family: &mut Vec<u32>,
            counts: &mut BTreeMap<u32, BigInt>,
        ) {
            if family.len() == j {
                if is_minimal_cover(s, family) {
                    let k = unique_count(s, family);
                    *counts.entry(k).or_insert_with(BigInt::zero) += 1;
                }
                return;
            }
            for m in start..=full {
                family.push(m);
                rec(s, full, j, m + 1, family, counts);
                family.pop();
            }
        }
        rec(s, full, j as usize, 1, &mut family, &mut counts);
        counts
    }

    fn formula_map(s: u32, j: u32) -> BTreeMap<u32, BigInt> {
        (0..=s)
            .map(|k| (k, min_cover_count(s, j, k)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    #[test]
    fn minimality_predicate() {
        // {0,1} and {1,2} cover {0,1,2}; 0 and 2 are private
        assert!(is_minimal_cover(3, &[0b011, 0b110]));
        // {0} adds nothing of its own next to {0,1,2}
        assert!(!is_minimal_cover(3, &[0b111, 0b001]));
        // not a cover at all
        assert!(!is_minimal_cover(3, &[0b011]));
        // duplicate members can own nothing
        assert!(!is_minimal_cover(2, &[0b11, 0b11]));
        // the whole set alone is the unique minimal 1-cover
        assert!(is_minimal_cover(3, &[0b111]));
    }

    #[test]
    fn unique_count_values() {
        assert_eq!(unique_count(3, &[0b011, 0b110]), 2);
        assert_eq!(unique_count(3, &[0b111]), 3);
        assert_eq!(unique_count(2, &[0b11, 0b11]), 0);
    }

    #[test]
    fn family_validation() {
        let fam = CoverFamily::new(3, vec![0b110, 0b011]).unwrap();
        assert_eq!(fam.members(), &[0b011, 0b110]); // canonical ascending order
        assert!(fam.is_minimal());
        assert_eq!(fam.unique_count(), 2);

        assert!(matches!(
            CoverFamily::new(3, vec![0]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            CoverFamily::new(3, vec![0b1000]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            CoverFamily::new(3, vec![0b011, 0b011]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            CoverFamily::new(0, vec![0b1]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn frozen_enumeration_counts() {
        let c43 = count_by_unique(4, 3).unwrap();
        assert_eq!(c43, formula_map(4, 3));
        assert_eq!(c43[&3], BigInt::from(16));
        assert_eq!(c43[&4], BigInt::from(6));

        let c42 = count_by_unique(4, 2).unwrap();
        assert_eq!(c42[&2], BigInt::from(6));
        assert_eq!(c42[&3], BigInt::from(12));
        assert_eq!(c42[&4], BigInt::from(7));

        let c53 = count_by_unique(5, 3).unwrap();
        assert_eq!(c53[&3], BigInt::from(160));
        assert_eq!(c53[&4], BigInt::from(120));
        assert_eq!(c53[&5], BigInt::from(25));
    }

    #[test]
    fn formula_agrees_through_s5() {
        for s in 1..=5u32 {
            for j in 1..=s {
                assert_eq!(count_by_unique(s, j).unwrap(), formula_map(s, j), "s={s} j={j}");
            }
        }
    }

    #[test]
    fn pruned_matches_naive() {
        for s in 1..=4u32 {
            let max_j = (1u32 << s) - 1;
            for j in 1..=max_j.min(s + 2) {
                assert_eq!(count_by_unique(s, j).unwrap(), count_naive(s, j), "s={s} j={j}");
            }
        }
    }

    #[test]
    fn oversized_families_count_nothing() {
        // a minimal cover can have at most s members (one private element each)
        assert!(count_by_unique(3, 4).unwrap().is_empty());
        assert!(count_by_unique(2, 3).unwrap().is_empty());
    }

    #[test]
    fn thread_count_does_not_change_counts() {
        let single = count_by_unique(5, 3).unwrap();
        for threads in [2, 3, 8] {
            let opts = EnumerationOptions { threads, ignore_ceiling: false };
            assert_eq!(count_by_unique_with(5, 3, &opts).unwrap(), single);
        }
    }

    #[test]
    fn ceiling_refusal() {
        assert_eq!(search_space(4, 2), BigInt::from(105));
        let err = count_by_unique(9, 5).unwrap_err();
        match err {
            Error::SearchSpaceExceeded { s, j, space, ceiling } => {
                assert_eq!((s, j), (9, 5));
                assert_eq!(space, binomial(511, 5));
                assert_eq!(ceiling, BigInt::from(SEARCH_CEILING));
            }
            other => panic!("expected SearchSpaceExceeded, got {other:?}"),
        }
        // the override flag skips only the gate, not correctness
        let opts = EnumerationOptions { threads: 1, ignore_ceiling: true };
        assert_eq!(count_by_unique_with(3, 2, &opts).unwrap(), formula_map(3, 2));
    }

    #[test]
    #[should_panic(expected = "ground set size")]
    fn ground_set_too_large_panics() {
        let _ = count_by_unique(21, 1);
    }
}
