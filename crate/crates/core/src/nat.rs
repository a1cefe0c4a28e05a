//! The monoid IN∞ of cofinite partial isometries of ℕ = {1, 2, 3, …}.
//!
//! Every such map is a partial shift: there is an integer `shift` with
//! `x ↦ x + shift` on the domain, and the domain is ℕ minus a finite
//! exception set. An element is stored as exactly that pair, so structural
//! equality is equality of partial maps.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sets::FiniteIntSet;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemIN {
    shift: i64,
    exceptions: FiniteIntSet,
}

/// Domain and range markers of an element.
///
/// `nd_low` is the least point of the domain and `nd_high` the least point
/// from which the domain is an unbroken final segment. The range markers are
/// their images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Markers {
    pub nd_low: i64,
    pub nd_high: i64,
    pub nr_low: i64,
    pub nr_high: i64,
}

/// Normal form `q^k p^l` of the bicyclic monoid ⟨p, q | pq = 1⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BicyclicNF {
    pub k: u64,
    pub l: u64,
}

impl BicyclicNF {
    pub const IDENTITY: BicyclicNF = BicyclicNF { k: 0, l: 0 };

    pub const fn new(k: u64, l: u64) -> Self {
        BicyclicNF { k, l }
    }
}

impl Mul for BicyclicNF {
    type Output = BicyclicNF;

    /// `q^k p^l · q^m p^n = q^(k+m−min(l,m)) p^(l+n−min(l,m))`
    fn mul(self, other: BicyclicNF) -> BicyclicNF {
        let t = self.l.min(other.k);
        BicyclicNF::new(self.k + other.k - t, self.l + other.l - t)
    }
}

/// Least element of ℕ missing from the sorted set.
fn least_absent(set: &FiniteIntSet) -> i64 {
    let mut candidate = 1;
    for x in set.iter() {
        if x == candidate {
            candidate += 1;
        } else if x > candidate {
            break;
        }
    }
    candidate
}

impl ElemIN {
    /// Checks that the exceptions lie in ℕ and that the shifted domain stays inside ℕ.
    pub fn new(shift: i64, exceptions: FiniteIntSet) -> Result<Self> {
        if let Ok(lo) = exceptions.min_elem() {
            if lo < 1 {
                return Err(Error::InvalidElement(format!("exception {lo} is not a positive integer")));
            }
        }
        let lo = least_absent(&exceptions);
        if lo + shift < 1 {
            return Err(Error::InvalidElement(format!(
                "shift {shift} sends domain point {lo} to {}, outside N",
                lo + shift
            )));
        }
        Ok(ElemIN { shift, exceptions })
    }

    pub(crate) fn new_unchecked(shift: i64, exceptions: FiniteIntSet) -> Self {
        debug_assert!(Self::new(shift, exceptions.clone()).is_ok());
        ElemIN { shift, exceptions }
    }

    pub fn identity() -> Self {
        ElemIN { shift: 0, exceptions: FiniteIntSet::new() }
    }

    /// `n ↦ n + 1`
    pub fn alpha() -> Self {
        ElemIN { shift: 1, exceptions: FiniteIntSet::new() }
    }

    /// `n ↦ n − 1` on `ℕ ∖ {1}`
    pub fn beta() -> Self {
        ElemIN { shift: -1, exceptions: FiniteIntSet::from([1]) }
    }

    /// The identity map of `ℕ ∖ {k}`, for `k ≥ 2`.
    pub fn eps(k: i64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidGenerator(k));
        }
        Ok(ElemIN { shift: 0, exceptions: FiniteIntSet::from([k]) })
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn exceptions(&self) -> &FiniteIntSet {
        &self.exceptions
    }

    pub fn apply(&self, x: i64) -> Option<i64> {
        (x >= 1 && !self.exceptions.contains(x)).then_some(x + self.shift)
    }

    pub fn min_dom(&self) -> i64 {
        least_absent(&self.exceptions)
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &ElemIN) -> ElemIN {
        let s = self.shift;
        let pulled_back = then.exceptions.iter().map(|y| y - s).filter(|&x| x >= 1);
        let pulled_back = FiniteIntSet::from_sorted(pulled_back.collect());
        ElemIN { shift: s + then.shift, exceptions: self.exceptions.union(&pulled_back) }
    }

    pub fn inverse(&self) -> ElemIN {
        let s = self.shift;
        let below = FiniteIntSet::range(1, s);
        let moved = self.exceptions.iter().map(|x| x + s).filter(|&y| y >= 1);
        let moved = FiniteIntSet::from_sorted(moved.collect());
        ElemIN { shift: -s, exceptions: below.union(&moved) }
    }

    pub fn markers(&self) -> Markers {
        let nd_low = self.min_dom();
        let nd_high = match self.exceptions.max_elem() {
            Ok(top) if top >= nd_low => top + 1,
            _ => nd_low,
        };
        Markers { nd_low, nd_high, nr_low: nd_low + self.shift, nr_high: nd_high + self.shift }
    }

    /// Distance from the least domain point to the start of the final-segment tail.
    pub fn gap(&self) -> i64 {
        let m = self.markers();
        m.nd_high - m.nd_low
    }

    /// Membership in the filtration level of elements with gap at most `k`.
    pub fn in_filtration(&self, k: i64) -> bool {
        self.gap() <= k
    }

    pub fn is_idempotent(&self) -> bool {
        self.shift == 0
    }

    /// The natural partial order: `self` is a restriction of `other`.
    pub fn natural_le(&self, other: &ElemIN) -> bool {
        self.shift == other.shift && other.exceptions.is_subset(&self.exceptions)
    }

    /// Image under the least group congruence, identified with ℤ(+).
    pub fn sigma(&self) -> i64 {
        self.shift
    }

    /// Largest element with the same σ-image.
    pub fn f_cover(&self) -> ElemIN {
        ElemIN { shift: self.shift, exceptions: FiniteIntSet::range(1, -self.shift) }
    }

    /// Membership in the bicyclic submonoid generated by α and β, whose
    /// elements are exactly the shifts defined on a final segment.
    pub fn is_in_cn(&self) -> bool {
        match self.exceptions.max_elem() {
            Ok(top) => top as usize == self.exceptions.len(),
            Err(_) => true,
        }
    }

    pub fn to_bicyclic(&self) -> Option<BicyclicNF> {
        if !self.is_in_cn() {
            return None;
        }
        let m = self.exceptions.len() as i64;
        Some(BicyclicNF::new(m as u64, (m + self.shift) as u64))
    }

    /// `β^k α^l`
    pub fn from_bicyclic(nf: BicyclicNF) -> ElemIN {
        let (k, l) = (nf.k as i64, nf.l as i64);
        ElemIN { shift: l - k, exceptions: FiniteIntSet::range(1, k) }
    }
}

impl Mul for &ElemIN {
    type Output = ElemIN;

    fn mul(self, rhs: &ElemIN) -> ElemIN {
        self.compose(rhs)
    }
}

impl fmt::Debug for ElemIN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:+},{})", self.shift, self.exceptions)
    }
}

impl fmt::Display for ElemIN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct NatRepr {
    #[serde(default = "nat_kind")]
    kind: String,
    shift: i64,
    #[serde(default)]
    exceptions: FiniteIntSet,
}

fn nat_kind() -> String {
    "nat".to_owned()
}

impl Serialize for ElemIN {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        NatRepr { kind: nat_kind(), shift: self.shift, exceptions: self.exceptions.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElemIN {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = NatRepr::deserialize(deserializer)?;
        if raw.kind != "nat" {
            return Err(serde::de::Error::custom(format!("expected kind \"nat\", found \"{}\"", raw.kind)));
        }
        ElemIN::new(raw.shift, raw.exceptions).map_err(serde::de::Error::custom)
    }
}
