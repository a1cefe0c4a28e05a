//! Finite sets of integers and exact half-integer symmetry centres.
//!
//! A [`FiniteIntSet`] is always stored sorted and duplicate free, so derived
//! equality is set equality. The sets here mostly play the role of the finite
//! complement of a cofinite domain or range.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Elems = SmallVec<[i64; 8]>;

/// A number of the form `doubled / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfInteger {
    pub doubled: i64,
}

impl HalfInteger {
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInteger { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInteger { doubled: 2 * n }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The mirror image of `x` about this centre.
    pub fn reflect(self, x: i64) -> i64 {
        self.doubled - x
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteIntSet {
    elems: Elems,
}

impl FiniteIntSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from an already strictly increasing sequence.
    pub(crate) fn from_sorted(elems: Elems) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        FiniteIntSet { elems }
    }

    /// The integer interval `lo..=hi` (empty when `hi < lo`).
    pub fn range(lo: i64, hi: i64) -> Self {
        if hi < lo {
            return Self::new();
        }
        Self::from_sorted((lo..=hi).collect())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.elems.iter().copied()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.elems
    }

    pub fn min_elem(&self) -> Result<i64> {
        self.elems.first().copied().ok_or(Error::EmptySet)
    }

    pub fn max_elem(&self) -> Result<i64> {
        self.elems.last().copied().ok_or(Error::EmptySet)
    }

    pub fn is_subset(&self, other: &FiniteIntSet) -> bool {
        self.len() <= other.len() && self.iter().all(|x| other.contains(x))
    }

    pub fn union(&self, other: &FiniteIntSet) -> FiniteIntSet {
        let (a, b) = (&self.elems, &other.elems);
        let mut out = Elems::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self::from_sorted(out)
    }

    pub fn intersection(&self, other: &FiniteIntSet) -> FiniteIntSet {
        Self::from_sorted(self.iter().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &FiniteIntSet) -> FiniteIntSet {
        Self::from_sorted(self.iter().filter(|&x| !other.contains(x)).collect())
    }

    pub fn translate(&self, by: i64) -> FiniteIntSet {
        Self::from_sorted(self.iter().map(|x| x + by).collect())
    }

    pub fn reflect(&self, center: HalfInteger) -> FiniteIntSet {
        Self::from_sorted(self.iter().rev().map(|x| center.reflect(x)).collect())
    }

    /// Keeps the elements satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(i64) -> bool) -> FiniteIntSet {
        Self::from_sorted(self.iter().filter(|&x| keep(x)).collect())
    }

    /// The centre `c` with `c + x ∈ F ⟺ c − x ∈ F`, if the set has one.
    ///
    /// Only `(min + max) / 2` can work, so that is the sole candidate tried.
    /// The empty set has no centre.
    pub fn symmetry_center(&self) -> Option<HalfInteger> {
        let (lo, hi) = (self.elems.first()?, self.elems.last()?);
        let center = HalfInteger::from_doubled(lo + hi);
        let n = self.elems.len();
        let symmetric = (0..n.div_ceil(2)).all(|i| self.elems[i] + self.elems[n - 1 - i] == center.doubled);
        symmetric.then_some(center)
    }
}

impl FromIterator<i64> for FiniteIntSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut elems: Elems = iter.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        FiniteIntSet { elems }
    }
}

impl<const N: usize> From<[i64; N]> for FiniteIntSet {
    fn from(xs: [i64; N]) -> Self {
        xs.into_iter().collect()
    }
}

impl fmt::Debug for FiniteIntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

impl fmt::Display for FiniteIntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for FiniteIntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elems.iter())
    }
}

impl<'de> Deserialize<'de> for FiniteIntSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        Ok(raw.into_iter().collect())
    }
}
