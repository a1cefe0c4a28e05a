//! Exhaustive bounded enumeration and the verification suites.
//!
//! A [`UniverseSpec`] names a finite slice of one monoid. [`run_suite`] checks
//! one property family over that slice and returns a [`SuiteReport`]; reports
//! depend only on the inputs, never on thread count or scheduling.

mod report;
mod suites;

use serde::{Deserialize, Serialize};

use crate::int::ElemID;
use crate::iso_z::IsoZ;
use crate::nat::ElemIN;
use crate::sets::FiniteIntSet;

pub use report::{Counterexample, SuiteReport};
pub use suites::{run_checks, run_suite, CheckOptions, SuiteInfo, SUITES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Monoid {
    Nat,
    Int,
}

impl std::fmt::Display for Monoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Monoid::Nat => "nat",
            Monoid::Int => "int",
        })
    }
}

/// Bounds for an enumerated universe.
///
/// nat: every valid element with exceptions in `1..=B` and `|shift| ≤ S`.
/// int: every element with exceptions in `−B..=B`, `|a| ≤ S`, both unit kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniverseSpec {
    pub monoid: Monoid,
    pub exception_bound: i64,
    pub shift_bound: i64,
}

impl UniverseSpec {
    pub const fn nat(exception_bound: i64, shift_bound: i64) -> Self {
        UniverseSpec { monoid: Monoid::Nat, exception_bound, shift_bound }
    }

    pub const fn int(exception_bound: i64, shift_bound: i64) -> Self {
        UniverseSpec { monoid: Monoid::Int, exception_bound, shift_bound }
    }
}

impl std::fmt::Display for UniverseSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} B={} S={}", self.monoid, self.exception_bound, self.shift_bound)
    }
}

/// All subsets of `lo..=hi`, ordered by bitmask.
pub fn subsets(lo: i64, hi: i64) -> impl Iterator<Item = FiniteIntSet> {
    let width = (hi - lo + 1).max(0) as u32;
    assert!(width < 32, "subset enumeration over {width} points is not desk scale");
    (0u32..(1 << width)).map(move |mask| (0..width as i64).filter(|i| mask & (1 << i) != 0).map(|i| lo + i).collect())
}

/// Every valid element of IN∞ within the bounds, shift-major then by bitmask.
pub fn enumerate_nat(exception_bound: i64, shift_bound: i64) -> impl Iterator<Item = ElemIN> {
    (-shift_bound..=shift_bound)
        .flat_map(move |s| subsets(1, exception_bound).filter_map(move |e| ElemIN::new(s, e).ok()))
}

/// Every element of ID∞ within the bounds, ordered by `a`, then translation
/// before reflection, then bitmask.
pub fn enumerate_int(exception_bound: i64, shift_bound: i64) -> impl Iterator<Item = ElemID> {
    (-shift_bound..=shift_bound)
        .flat_map(|a| [IsoZ::translation(a), IsoZ::reflection(a)])
        .flat_map(move |u| subsets(-exception_bound, exception_bound).map(move |e| ElemID::new(u, e)))
}

/// Elements of a universe of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Universe {
    Nat(Vec<ElemIN>),
    Int(Vec<ElemID>),
}

impl Universe {
    pub fn len(&self) -> usize {
        match self {
            Universe::Nat(v) => v.len(),
            Universe::Int(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn enumerate(spec: &UniverseSpec) -> Universe {
    match spec.monoid {
        Monoid::Nat => Universe::Nat(enumerate_nat(spec.exception_bound, spec.shift_bound).collect()),
        Monoid::Int => Universe::Int(enumerate_int(spec.exception_bound, spec.shift_bound).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(shift: i64, exc: &[i64]) -> ElemIN {
        ElemIN::new(shift, exc.iter().copied().collect()).unwrap()
    }

    #[test]
    fn nat_examples() {
        let u: Vec<_> = enumerate_nat(1, 0).collect();
        assert_eq!(u, vec![el(0, &[]), el(0, &[1])]);
        let u: Vec<_> = enumerate_nat(1, 1).collect();
        assert_eq!(u, vec![el(-1, &[1]), el(0, &[]), el(0, &[1]), el(1, &[]), el(1, &[1])]);
    }

    #[test]
    fn int_example() {
        let u: Vec<_> = enumerate_int(0, 0).collect();
        let zero = FiniteIntSet::from([0]);
        assert_eq!(
            u,
            vec![
                ElemID::identity(),
                ElemID::partial_identity(zero.clone()),
                ElemID::from_unit(IsoZ::reflection(0)),
                ElemID::new(IsoZ::reflection(0), zero),
            ]
        );
    }

    #[test]
    fn nat_count_matches_naive_loop_and_closed_form() {
        for b in 0..=6 {
            for s in 0..=4 {
                // naive oracle: every (shift, subset) pair checked by hand
                let mut naive = 0;
                for shift in -s..=s {
                    for mask in 0u32..(1 << b) {
                        let exc: Vec<i64> = (1..=b).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                        let mut lo = 1;
                        while exc.contains(&lo) {
                            lo += 1;
                        }
                        if lo + shift >= 1 {
                            naive += 1;
                        }
                    }
                }
                let closed: i64 = (-s..=s)
                    .map(|shift| {
                        if shift >= 0 {
                            1 << b
                        } else if -shift <= b {
                            1 << (b + shift)
                        } else {
                            0
                        }
                    })
                    .sum();
                let got: Vec<_> = enumerate_nat(b, s).collect();
                assert_eq!(got.len() as i64, naive, "B={b} S={s}");
                assert_eq!(naive, closed, "B={b} S={s}");
                let mut dedup = got.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), got.len());
            }
        }
    }

    #[test]
    fn int_count_and_distinctness() {
        for b in 0..=2 {
            for s in 0..=2 {
                let got: Vec<_> = enumerate_int(b, s).collect();
                assert_eq!(got.len() as i64, (2 * s + 1) * 2 * (1 << (2 * b + 1)));
                let mut dedup = got.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), got.len());
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(enumerate(&UniverseSpec::nat(4, 2)), enumerate(&UniverseSpec::nat(4, 2)));
        assert_eq!(enumerate(&UniverseSpec::int(1, 1)).len(), 48);
    }
}
