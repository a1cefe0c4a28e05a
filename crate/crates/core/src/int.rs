//! The monoid ID∞ of cofinite partial isometries of ℤ.
//!
//! A partial isometry of ℤ with cofinite domain extends to exactly one full
//! isometry, so an element is stored as that unit together with the finite
//! set of points where the partial map is undefined.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::iso_z::IsoZ;
use crate::sets::{FiniteIntSet, HalfInteger};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemID {
    unit: IsoZ,
    exceptions: FiniteIntSet,
}

/// The maximal subgroup (H-class group) at the identity map of a cofinite set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group")]
pub enum HClassGroup {
    Trivial,
    Z2 { center: HalfInteger },
    FullUnits,
}

/// Image of a finite set under an isometry, re-sorted.
fn image(set: &FiniteIntSet, g: IsoZ) -> FiniteIntSet {
    if g.reflect {
        FiniteIntSet::from_sorted(set.iter().rev().map(|x| g.apply(x)).collect())
    } else {
        set.translate(g.a)
    }
}

impl ElemID {
    pub fn new(unit: IsoZ, exceptions: FiniteIntSet) -> Self {
        ElemID { unit, exceptions }
    }

    pub fn from_unit(unit: IsoZ) -> Self {
        ElemID { unit, exceptions: FiniteIntSet::new() }
    }

    pub fn identity() -> Self {
        Self::from_unit(IsoZ::IDENTITY)
    }

    /// Identity map of `ℤ ∖ exceptions`.
    pub fn partial_identity(exceptions: FiniteIntSet) -> Self {
        ElemID { unit: IsoZ::IDENTITY, exceptions }
    }

    pub fn unit(&self) -> IsoZ {
        self.unit
    }

    pub fn exceptions(&self) -> &FiniteIntSet {
        &self.exceptions
    }

    pub fn apply(&self, x: i64) -> Option<i64> {
        (!self.exceptions.contains(x)).then(|| self.unit.apply(x))
    }

    /// `ℤ ∖ ran`
    pub fn range_exceptions(&self) -> FiniteIntSet {
        image(&self.exceptions, self.unit)
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &ElemID) -> ElemID {
        let pulled_back = image(&then.exceptions, self.unit.inverse());
        ElemID { unit: self.unit.compose(then.unit), exceptions: self.exceptions.union(&pulled_back) }
    }

    pub fn inverse(&self) -> ElemID {
        ElemID { unit: self.unit.inverse(), exceptions: self.range_exceptions() }
    }

    /// The unique full isometry above this element.
    pub fn unit_cover(&self) -> IsoZ {
        self.unit
    }

    /// Number of integers outside the domain.
    pub fn deficiency(&self) -> usize {
        self.exceptions.len()
    }

    pub fn is_unit(&self) -> bool {
        self.exceptions.is_empty()
    }

    pub fn is_idempotent(&self) -> bool {
        self.unit.is_identity()
    }

    pub fn natural_le(&self, other: &ElemID) -> bool {
        self.unit == other.unit && other.exceptions.is_subset(&self.exceptions)
    }

    /// Image under the least group congruence, identified with Iso(ℤ).
    pub fn sigma(&self) -> IsoZ {
        self.unit
    }
}

/// All elements with domain and range equal to `ℤ ∖ exceptions`.
///
/// For a non-empty exception set this is the identity of the set, plus the
/// reflection about its centre when the set is symmetric. An empty exception
/// set yields the whole (infinite) group of units and is reported as
/// [`Error::FullUnitsCase`].
pub fn restriction_isometries(exceptions: &FiniteIntSet) -> Result<Vec<ElemID>> {
    if exceptions.is_empty() {
        return Err(Error::FullUnitsCase);
    }
    let mut out = vec![ElemID::partial_identity(exceptions.clone())];
    if let Some(c) = exceptions.symmetry_center() {
        out.push(ElemID::new(IsoZ::reflection(c.doubled), exceptions.clone()));
    }
    Ok(out)
}

pub fn hclass_group(exceptions: &FiniteIntSet) -> HClassGroup {
    if exceptions.is_empty() {
        return HClassGroup::FullUnits;
    }
    match exceptions.symmetry_center() {
        Some(center) => HClassGroup::Z2 { center },
        None => HClassGroup::Trivial,
    }
}

impl Mul for &ElemID {
    type Output = ElemID;

    fn mul(self, rhs: &ElemID) -> ElemID {
        self.compose(rhs)
    }
}

impl fmt::Debug for ElemID {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.unit.reflect { "r" } else { "t" };
        write!(f, "(({:+},{kind}),{})", self.unit.a, self.exceptions)
    }
}

impl fmt::Display for ElemID {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct IntRepr {
    #[serde(default = "int_kind")]
    kind: String,
    a: i64,
    reflect: bool,
    #[serde(default)]
    exceptions: FiniteIntSet,
}

fn int_kind() -> String {
    "int".to_owned()
}

impl Serialize for ElemID {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IntRepr { kind: int_kind(), a: self.unit.a, reflect: self.unit.reflect, exceptions: self.exceptions.clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElemID {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = IntRepr::deserialize(deserializer)?;
        if raw.kind != "int" {
            return Err(serde::de::Error::custom(format!("expected kind \"int\", found \"{}\"", raw.kind)));
        }
        Ok(ElemID::new(IsoZ { a: raw.a, reflect: raw.reflect }, raw.exceptions))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, exc: &[i64]) -> ElemID {
        ElemID::new(IsoZ::translation(a), exc.iter().copied().collect())
    }

    fn r(a: i64, exc: &[i64]) -> ElemID {
        ElemID::new(IsoZ::reflection(a), exc.iter().copied().collect())
    }

    fn universe(b: i64, s: i64) -> Vec<ElemID> {
        let width = 2 * b + 1;
        let mut out = Vec::new();
        for a in -s..=s {
            for unit in [IsoZ::translation(a), IsoZ::reflection(a)] {
                for mask in 0u32..(1 << width) {
                    let exc = (0..width).filter(|i| mask & (1 << i) != 0).map(|i| i - b).collect();
                    out.push(ElemID::new(unit, exc));
                }
            }
        }
        out
    }

    #[test]
    fn compose_examples() {
        assert_eq!(&t(0, &[0]) * &t(0, &[1, 2]), t(0, &[0, 1, 2]));
        let p = &t(1, &[0]) * &t(0, &[1, 2]);
        assert_eq!(p, t(1, &[0, 1]));
        assert_eq!(p.deficiency(), 2);
        let g = r(3, &[0, 5]);
        assert_eq!(&g * &g.inverse(), ElemID::partial_identity(g.exceptions().clone()));
    }

    #[test]
    fn compose_matches_pointwise() {
        let u = universe(1, 2);
        for g in &u {
            for h in &u {
                let gh = g * h;
                for x in -12..=12 {
                    assert_eq!(gh.apply(x), g.apply(x).and_then(|y| h.apply(y)));
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(t(2, &[0]).inverse(), t(-2, &[2]));
        assert_eq!(r(3, &[0, 3]).inverse(), r(3, &[0, 3]));
        assert_eq!(t(0, &[5]).inverse(), t(0, &[5]));
    }

    #[test]
    fn unit_cover_and_deficiency() {
        assert_eq!(t(1, &[0]).unit_cover(), IsoZ::translation(1));
        assert_eq!(r(3, &[0, 3]).unit_cover(), IsoZ::reflection(3));
        assert_eq!(ElemID::identity().unit_cover(), IsoZ::IDENTITY);
        assert_eq!(t(0, &[0, 1, 2]).deficiency(), 3);
        assert_eq!(r(7, &[]).deficiency(), 0);
        for g in universe(2, 1) {
            assert!(g.natural_le(&ElemID::from_unit(g.unit_cover())));
        }
    }

    #[test]
    fn restriction_isometry_examples() {
        let got = restriction_isometries(&FiniteIntSet::from([0, 3])).unwrap();
        assert_eq!(got, vec![t(0, &[0, 3]), r(3, &[0, 3])]);
        let got = restriction_isometries(&FiniteIntSet::from([0, 2, 3])).unwrap();
        assert_eq!(got, vec![t(0, &[0, 2, 3])]);
        let got = restriction_isometries(&FiniteIntSet::from([4])).unwrap();
        assert_eq!(got, vec![t(0, &[4]), r(8, &[4])]);
        assert_eq!(restriction_isometries(&FiniteIntSet::new()), Err(Error::FullUnitsCase));
        for g in restriction_isometries(&FiniteIntSet::from([-1, 0, 3, 4])).unwrap() {
            assert_eq!(g.range_exceptions(), *g.exceptions());
        }
    }

    #[test]
    fn hclass_examples() {
        assert_eq!(hclass_group(&FiniteIntSet::new()), HClassGroup::FullUnits);
        assert_eq!(hclass_group(&FiniteIntSet::from([0, 3])), HClassGroup::Z2 { center: HalfInteger::from_doubled(3) });
        assert_eq!(hclass_group(&FiniteIntSet::from([0, 2, 3])), HClassGroup::Trivial);
        assert_eq!(
            serde_json::to_string(&hclass_group(&FiniteIntSet::from([0, 3]))).unwrap(),
            r#"{"group":"Z2","center":{"doubled":3}}"#
        );
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(t(0, &[0, 1]).sigma(), IsoZ::IDENTITY);
        assert_eq!(t(2, &[0]).sigma(), IsoZ::translation(2));
        let u = universe(1, 1);
        for g in &u {
            for h in &u {
                assert_eq!((g * h).sigma(), g.sigma() * h.sigma());
            }
        }
    }

    #[test]
    fn natural_order() {
        assert!(t(1, &[0, 1]).natural_le(&t(1, &[0])));
        assert!(!t(1, &[0]).natural_le(&t(1, &[0, 1])));
        assert!(!r(1, &[0]).natural_le(&t(1, &[])));
    }

    #[test]
    fn json_shape() {
        let g: ElemID = serde_json::from_str(r#"{"kind":"int","a":3,"reflect":true,"exceptions":[3,0]}"#).unwrap();
        assert_eq!(g, r(3, &[0, 3]));
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"kind":"int","a":3,"reflect":true,"exceptions":[0,3]}"#);
    }
}
