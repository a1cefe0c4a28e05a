//! The isometry group of ℤ, written as translations and reflections.
//!
//! Every isometry of ℤ is either `x ↦ x + a` or `x ↦ a − x`, which gives the
//! semidirect product ℤ(+) ⋊ ℤ₂ in the coordinates `(a, reflect)`.
//!
//! Products are read left to right: `g.compose(h)` applies `g` first.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsoZ {
    pub a: i64,
    pub reflect: bool,
}

/// Order of an element of Iso(ℤ). Only these three values occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    One,
    Two,
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::One => f.write_str("1"),
            Order::Two => f.write_str("2"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

impl IsoZ {
    pub const IDENTITY: IsoZ = IsoZ { a: 0, reflect: false };

    pub const fn translation(a: i64) -> Self {
        IsoZ { a, reflect: false }
    }

    /// The reflection `x ↦ a − x`, i.e. about the centre `a / 2`.
    pub const fn reflection(a: i64) -> Self {
        IsoZ { a, reflect: true }
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    pub fn apply(self, x: i64) -> i64 {
        if self.reflect {
            self.a - x
        } else {
            x + self.a
        }
    }

    /// `self` followed by `then`.
    pub fn compose(self, then: IsoZ) -> IsoZ {
        match (self.reflect, then.reflect) {
            (false, false) => IsoZ::translation(self.a + then.a),
            (false, true) => IsoZ::reflection(then.a - self.a),
            (true, false) => IsoZ::reflection(self.a + then.a),
            (true, true) => IsoZ::translation(then.a - self.a),
        }
    }

    pub fn inverse(self) -> IsoZ {
        if self.reflect {
            self
        } else {
            IsoZ::translation(-self.a)
        }
    }

    pub fn order(self) -> Order {
        if self.reflect {
            Order::Two
        } else if self.a == 0 {
            Order::One
        } else {
            Order::Infinite
        }
    }
}

impl Default for IsoZ {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Mul for IsoZ {
    type Output = IsoZ;

    fn mul(self, rhs: IsoZ) -> IsoZ {
        self.compose(rhs)
    }
}

impl fmt::Display for IsoZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflect {
            write!(f, "x -> {} - x", self.a)
        } else {
            write!(f, "x -> x + {}", self.a)
        }
    }
}
