//! Elements of either monoid, as read from and written to JSON.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::int::ElemID;
use crate::nat::ElemIN;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Nat(ElemIN),
    Int(ElemID),
}

impl Element {
    pub fn kind(&self) -> &'static str {
        match self {
            Element::Nat(_) => "nat",
            Element::Int(_) => "int",
        }
    }

    /// Composition of two elements of the same monoid.
    pub fn compose(&self, then: &Element) -> Result<Element> {
        match (self, then) {
            (Element::Nat(g), Element::Nat(h)) => Ok(Element::Nat(g.compose(h))),
            (Element::Int(g), Element::Int(h)) => Ok(Element::Int(g.compose(h))),
            _ => Err(Error::InvalidElement(format!("cannot compose {} with {} elements", self.kind(), then.kind()))),
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Nat(g) => Element::Nat(g.inverse()),
            Element::Int(g) => Element::Int(g.inverse()),
        }
    }
}

impl From<ElemIN> for Element {
    fn from(g: ElemIN) -> Self {
        Element::Nat(g)
    }
}

impl From<ElemID> for Element {
    fn from(g: ElemID) -> Self {
        Element::Int(g)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(g) => write!(f, "{g}"),
            Element::Int(g) => write!(f, "{g}"),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Nat(g) => g.serialize(serializer),
            Element::Int(g) => g.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let value = serde_json::Value::deserialize(deserializer)?;
        let kind = value.get("kind").and_then(|k| k.as_str()).unwrap_or("");
        match kind {
            "nat" => ElemIN::deserialize(value).map(Element::Nat).map_err(D::Error::custom),
            "int" => ElemID::deserialize(value).map(Element::Int).map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("unknown element kind \"{other}\" (expected \"nat\" or \"int\")"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso_z::IsoZ;

    #[test]
    fn dispatch_on_kind() {
        let e: Element = serde_json::from_str(r#"{"kind":"nat","shift":1,"exceptions":[]}"#).unwrap();
        assert_eq!(e, Element::Nat(ElemIN::alpha()));
        let e: Element = serde_json::from_str(r#"{"kind":"int","a":1,"reflect":false,"exceptions":[]}"#).unwrap();
        assert_eq!(e, Element::Int(ElemID::from_unit(IsoZ::translation(1))));
        assert!(serde_json::from_str::<Element>(r#"{"kind":"real","a":1}"#).is_err());
    }

    #[test]
    fn mixed_kinds_do_not_compose() {
        let a = Element::Nat(ElemIN::alpha());
        let b = Element::Int(ElemID::identity());
        assert!(a.compose(&b).is_err());
        assert_eq!(a.compose(&a.inverse()).unwrap(), Element::Nat(ElemIN::identity()));
    }
}
